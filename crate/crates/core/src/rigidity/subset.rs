use std::cmp::Ordering;
use std::fmt;

/// Subset `S` of the torus coordinates `{1, ..., s}`, naming the class
/// `ι_S = ι_{i_1} ⋯ ι_{i_k}` with `i_1 < ⋯ < i_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct TorusSubset(u32);

impl TorusSubset {
    pub const EMPTY: TorusSubset = TorusSubset(0);

    /// From 1-based coordinates. Panics on coordinates outside `1..=32`.
    pub fn from_indices(indices: &[usize]) -> Self {
        let mut mask = 0u32;
        for &i in indices {
            assert!((1..=32).contains(&i), "torus coordinate {i} out of range");
            mask |= 1 << (i - 1);
        }
        Self(mask)
    }

    pub fn singleton(i: usize) -> Self {
        Self::from_indices(&[i])
    }

    pub fn from_mask(mask: u32) -> Self {
        Self(mask)
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    /// 1-based coordinates in increasing order.
    pub fn indices(self) -> Vec<usize> {
        (0..32).filter(|b| self.0 >> b & 1 == 1).map(|b| b + 1).collect()
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Largest coordinate, 0 for the empty set.
    pub fn max_index(self) -> usize {
        32 - self.0.leading_zeros() as usize
    }

    /// All subsets of `{1..s}` of size `k`, in increasing order.
    pub fn of_size(s: usize, k: usize) -> Vec<TorusSubset> {
        let mut out: Vec<TorusSubset> = (0u32..1 << s)
            .filter(|m| m.count_ones() as usize == k)
            .map(TorusSubset)
            .collect();
        out.sort();
        out
    }
}

impl Ord for TorusSubset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.indices().cmp(&other.indices()))
    }
}

impl PartialOrd for TorusSubset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for TorusSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.indices().iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}
