//! Permutations of `{1, …, n}` and stabilizer subgroups of the symmetric
//! group.
//!
//! Indices are 1-based throughout, matching the generator numbering of the
//! algebra.

/// A permutation of `{1, …, n}`, stored as the image vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    /// `images[i - 1]` is the image of `i`; the vector is a bijection of
    /// `{1, …, n}`.
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// Builds a permutation from its image vector.
    ///
    /// Panics unless `images` is a bijection of `{1, …, n}`.
    pub fn from_images(images: Vec<usize>) -> Self {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            assert!(v >= 1 && v <= n, "image {v} out of range 1..={n}");
            assert!(!seen[v - 1], "image {v} repeated");
            seen[v - 1] = true;
        }
        Permutation { images }
    }

    /// The transposition `(a b)` in `S_n`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        assert!(a >= 1 && a <= n && b >= 1 && b <= n, "indices out of range");
        assert!(a != b, "transposition needs distinct indices");
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(a - 1, b - 1);
        Permutation { images }
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    /// Image of `i` (1-based).
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Self {
        assert_eq!(self.rank(), other.rank(), "rank mismatch");
        Permutation {
            images: (1..=self.rank()).map(|i| self.apply(other.apply(i))).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.rank()];
        for (k, &v) in self.images.iter().enumerate() {
            images[v - 1] = k + 1;
        }
        Permutation { images }
    }

    /// All of `S_n` in lexicographic order of image vectors. Cost is `n!`.
    pub fn all(n: usize) -> Vec<Permutation> {
        Self::all_fixing(&[], n)
    }

    /// All permutations fixing every index in `fixed` pointwise, in
    /// lexicographic order. Cost is `(n - |fixed|)!`.
    pub fn all_fixing(fixed: &[usize], n: usize) -> Vec<Permutation> {
        let movable: Vec<usize> = (1..=n).filter(|i| !fixed.contains(i)).collect();
        let mut out = Vec::new();
        let mut images: Vec<usize> = (1..=n).collect();
        let mut values = movable.clone();
        permute_into(&movable, &mut values, 0, &mut images, &mut out);
        out
    }
}

fn permute_into(
    slots: &[usize],
    values: &mut Vec<usize>,
    depth: usize,
    images: &mut Vec<usize>,
    out: &mut Vec<Permutation>,
) {
    if depth == slots.len() {
        out.push(Permutation {
            images: images.clone(),
        });
        return;
    }
    for k in depth..values.len() {
        values.swap(depth, k);
        // keep remaining choices sorted so the output order is lexicographic
        values[depth + 1..].sort_unstable();
        images[slots[depth] - 1] = values[depth];
        permute_into(slots, values, depth + 1, images, out);
    }
    values[depth..].sort_unstable();
}

/// Generators of the subgroup of `S_n` fixing every index in `fixed`
/// pointwise: the adjacent transpositions of the complement. Empty when the
/// complement has fewer than two elements.
pub fn stabilizer_generators(fixed: &[usize], n: usize) -> Vec<Permutation> {
    let movable: Vec<usize> = (1..=n).filter(|i| !fixed.contains(i)).collect();
    movable
        .windows(2)
        .map(|w| Permutation::transposition(n, w[0], w[1]))
        .collect()
}
