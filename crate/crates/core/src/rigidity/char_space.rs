use super::RigidityError;
use crate::algebra::GradedAlgebra;
use crate::derivations::GradedLinearMap;

/// Degrees making up the characteristic subspace for rank `k`:
/// `4i` for `1 <= i <= (k-1)/2`, plus `k` when `k` is even and `4(k/2)` when
/// `k` is odd. Sorted, duplicates merged. `k = 1` gives `[0]`.
pub fn char_degrees(k: u32) -> Vec<u32> {
    let mut degrees: Vec<u32> = (1..=(k.saturating_sub(1)) / 2).map(|i| 4 * i).collect();
    degrees.push(if k.is_multiple_of(2) { k } else { 4 * (k / 2) });
    degrees.sort_unstable();
    degrees.dedup();
    degrees
}

/// The subspace of `H*(C)` that holds every rational characteristic class of
/// a rank-`k` bundle over `C`: a direct sum of whole graded pieces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharSubspace {
    pub rank: u32,
    pub degrees: Vec<u32>,
    /// `(degree, basis indices of that piece)`, one entry per degree.
    pub basis_indices: Vec<(u32, Vec<usize>)>,
    pub dimension: usize,
}

impl CharSubspace {
    pub fn contains_index(&self, i: usize) -> bool {
        self.basis_indices.iter().any(|(_, idx)| idx.contains(&i))
    }
}

pub fn char_subspace(base: &GradedAlgebra, k: u32) -> Result<CharSubspace, RigidityError> {
    if k == 0 {
        return Err(RigidityError::ZeroRank);
    }
    let degrees = char_degrees(k);
    let basis_indices: Vec<(u32, Vec<usize>)> = degrees
        .iter()
        .map(|&d| (d, base.graded_piece(d.into()).to_vec()))
        .collect();
    let dimension = basis_indices.iter().map(|(_, v)| v.len()).sum();
    Ok(CharSubspace {
        rank: k,
        degrees,
        basis_indices,
        dimension,
    })
}

/// Whether a degree-0 endomorphism maps the characteristic subspace into
/// itself.
pub fn char_preserved(base: &GradedAlgebra, endo: &GradedLinearMap, k: u32) -> Result<bool, RigidityError> {
    if endo.shift() != 0 {
        return Err(RigidityError::EndomorphismShift(endo.shift()));
    }
    endo.check_shape(base)?;
    let space = char_subspace(base, k)?;
    Ok(space.basis_indices.iter().flat_map(|(_, idx)| idx).all(|&i| {
        endo.image_of_basis(base, i)
            .nonzero()
            .all(|(j, _)| space.contains_index(j))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_monomial_algebra, Element, Presentation};
    use crate::linalg::rat;

    fn cp(n: u32) -> GradedAlgebra {
        build_monomial_algebra(&Presentation::single(&format!("CP{n}"), "x", 2, n + 1)).unwrap()
    }

    #[test]
    fn degrees_by_formula() {
        assert_eq!(char_degrees(1), vec![0]);
        assert_eq!(char_degrees(2), vec![2]);
        assert_eq!(char_degrees(3), vec![4]);
        assert_eq!(char_degrees(4), vec![4]);
        assert_eq!(char_degrees(5), vec![4, 8]);
        assert_eq!(char_degrees(6), vec![4, 6, 8]);
        assert_eq!(char_degrees(7), vec![4, 8, 12]);
    }

    #[test]
    fn cp2_examples() {
        let a = cp(2);
        let c = char_subspace(&a, 2).unwrap();
        assert_eq!((c.degrees.clone(), c.dimension), (vec![2], 1));
        let c = char_subspace(&a, 4).unwrap();
        assert_eq!((c.degrees.clone(), c.dimension), (vec![4], 1));
        let c = char_subspace(&a, 3).unwrap();
        assert_eq!((c.degrees.clone(), c.dimension), (vec![4], 1));
        assert_eq!(char_subspace(&a, 0), Err(RigidityError::ZeroRank));
    }

    #[test]
    fn preservation() {
        let a = cp(2);
        assert!(char_preserved(&a, &GradedLinearMap::identity(&a), 2).unwrap());
        assert!(char_preserved(&a, &GradedLinearMap::zero(&a, 0), 2).unwrap());
        let images: Vec<Element> = (0..a.dim())
            .map(|i| a.basis_element(i).scaled(&rat(7 - i as i64)))
            .collect();
        let endo = GradedLinearMap::from_images(&a, 0, &images).unwrap();
        assert!(char_preserved(&a, &endo, 2).unwrap());
        assert!(matches!(
            char_preserved(&a, &GradedLinearMap::zero(&a, -2), 2),
            Err(RigidityError::EndomorphismShift(-2))
        ));
    }
}
