//! Bilinear forms given by Gram matrices.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linear::LinearMap;
use crate::scalar::{self, Scalar};

/// `B(e_i, e_j) = gram[i][j]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BilinearForm {
    gram: LinearMap,
}

impl BilinearForm {
    pub fn new(gram: LinearMap) -> Result<Self> {
        if !gram.is_square() {
            return Err(Error::dim("Gram matrix must be square"));
        }
        Ok(BilinearForm { gram })
    }

    pub fn zeros(dim: usize) -> Self {
        BilinearForm {
            gram: LinearMap::zeros(dim, dim),
        }
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::new(LinearMap::from_int_rows(rows)).expect("square literal")
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &LinearMap {
        &self.gram
    }

    pub fn basis_value(&self, i: usize, j: usize) -> &Scalar {
        self.gram.get(i, j)
    }

    pub fn eval(&self, u: &[Scalar], v: &[Scalar]) -> Scalar {
        let n = self.dim();
        let mut acc = scalar::zero();
        for i in (0..n).filter(|&i| !u[i].is_zero()) {
            for j in (0..n).filter(|&j| !v[j].is_zero()) {
                acc += &u[i] * self.gram.get(i, j) * &v[j];
            }
        }
        acc
    }

    pub fn is_symmetric(&self) -> bool {
        self.gram.is_symmetric()
    }

    pub fn is_skew(&self) -> bool {
        self.gram.is_skew()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.gram.is_invertible()
    }
}

/// `B(u, v) = ⟨T⁻¹u, v⟩` for an invertible `T: V* → V`.
///
/// `T⁻¹ e_i = Σ_j B(e_i, e_j) e_j*`, so the Gram matrix is `(T⁻¹)ᵀ`.
pub fn form_from_invertible_map(t: &LinearMap) -> Result<BilinearForm> {
    let inv = t.inverse()?;
    BilinearForm::new(inv.transpose())
}

/// The map `T: V* → V` with `form_from_invertible_map(T) = B`.
pub fn map_from_nondegenerate_form(b: &BilinearForm) -> Result<LinearMap> {
    b.gram().transpose().inverse()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    #[test]
    fn form_from_map_examples() {
        let id = LinearMap::identity(2);
        assert_eq!(form_from_invertible_map(&id).unwrap().gram(), &id);

        let two = id.scale(&int(2));
        assert_eq!(
            form_from_invertible_map(&two).unwrap().gram(),
            &id.scale(&frac(1, 2))
        );

        let swap = LinearMap::from_int_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(form_from_invertible_map(&swap).unwrap().gram(), &swap);
    }

    #[test]
    fn singular_map_rejected() {
        let m = LinearMap::from_int_rows(&[&[1, 1], &[1, 1]]);
        assert!(matches!(form_from_invertible_map(&m), Err(Error::Singular)));
    }

    #[test]
    fn map_form_round_trip() {
        let t = LinearMap::from_int_rows(&[&[1, 2], &[0, 3]]);
        let b = form_from_invertible_map(&t).unwrap();
        assert!(b.is_nondegenerate());
        assert_eq!(map_from_nondegenerate_form(&b).unwrap(), t);
    }

    #[test]
    fn eval_matches_gram() {
        let b = BilinearForm::from_int_rows(&[&[1, 2], &[3, 4]]);
        assert_eq!(b.eval(&[int(1), int(0)], &[int(0), int(1)]), int(2));
        assert_eq!(b.eval(&[int(1), int(1)], &[int(1), int(1)]), int(10));
        assert!(!BilinearForm::zeros(2).is_nondegenerate());
    }
}
