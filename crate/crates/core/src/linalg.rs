//! Small dense complex linear algebra on top of nalgebra.

use nalgebra::DMatrix;
use num_complex::Complex64;

pub type Scalar = Complex64;
pub type Matrix = DMatrix<Scalar>;

pub const ZERO: Scalar = Complex64::new(0.0, 0.0);
pub const ONE: Scalar = Complex64::new(1.0, 0.0);

/// Singular values of `m`, largest first.
pub fn singular_values(m: &Matrix) -> Vec<f64> {
    if m.is_empty() {
        return Vec::new();
    }
    let mut s: Vec<f64> = m.clone().svd(false, false).singular_values.iter().copied().collect();
    s.sort_by(|a, b| b.total_cmp(a));
    s
}

/// Full column rank with singular values thresholded at `tol * sigma_max`.
pub fn is_invertible(m: &Matrix, tol: f64) -> bool {
    let s = singular_values(m);
    match (s.first(), s.last()) {
        (Some(&max), Some(&min)) => max > 0.0 && min > tol * max,
        _ => true,
    }
}

/// Orthonormal basis of the right null space, by singular-value thresholding.
pub fn null_space(m: &Matrix, tol: f64) -> Vec<Vec<Scalar>> {
    let n = m.ncols();
    if n == 0 {
        return Vec::new();
    }
    // pad to at least n rows so the thin SVD yields all n right singular vectors
    let padded = if m.nrows() < n {
        let mut p = Matrix::zeros(n, n);
        p.view_mut((0, 0), (m.nrows(), n)).copy_from(m);
        p
    } else {
        m.clone()
    };
    let svd = padded.svd(false, true);
    let v_t = svd.v_t.expect("right singular vectors requested");
    let max = svd.singular_values.iter().copied().fold(0.0, f64::max);
    let mut out = Vec::new();
    for (i, &s) in svd.singular_values.iter().enumerate() {
        if s <= tol * max {
            out.push(v_t.row(i).iter().map(|z| z.conj()).collect());
        }
    }
    out
}

pub fn max_abs(it: impl IntoIterator<Item = Scalar>) -> f64 {
    it.into_iter().map(|z| z.norm()).fold(0.0, f64::max)
}

pub fn max_abs_diff(a: &Matrix, b: &Matrix) -> f64 {
    assert_eq!(a.shape(), b.shape(), "shape mismatch in residual");
    max_abs(a.iter().zip(b.iter()).map(|(x, y)| x - y))
}

pub fn vec_diff(a: &[Scalar], b: &[Scalar]) -> f64 {
    max_abs(a.iter().zip(b).map(|(x, y)| x - y))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn null_space_of_rank_one() {
        let m = Matrix::from_row_slice(2, 2, &[ONE, ONE, ONE, ONE]);
        let ns = null_space(&m, 1e-12);
        assert_eq!(ns.len(), 1);
        let v = &ns[0];
        assert!((v[0] + v[1]).norm() < 1e-12);
        assert!(!is_invertible(&m, 1e-12));
        assert!(is_invertible(&Matrix::identity(3, 3), 1e-12));
    }

    #[test]
    fn zero_matrix_is_all_null() {
        let m = Matrix::zeros(4, 2);
        assert_eq!(null_space(&m, 1e-9).len(), 2);
    }
}
