//! Finite-dimensional complex algebras given by structure constants, with the
//! trace form as Frobenius form.
//!
//! Structure constants `C_ij^k` encode `e_i · e_j = Σ_k C_ij^k e_k`. On
//! construction the algebra is checked for associativity and for a two-sided
//! unit, and the trace metric `g_ij = Σ_{k,l} C_ik^l C_jl^k` is computed and
//! inverted. The metric is non-degenerate exactly when the algebra is
//! semisimple, so a singular metric is reported as [`AlgebraError::SingularMetric`].
//!
//! The unit is an arbitrary coefficient vector; nothing here assumes that it
//! is the first basis element.

mod action;
pub mod fixtures;

pub(crate) use action::lowered_twisted;
pub use action::{twisted_constants, ActionResiduals, GAction};

use serde::Serialize;
use thiserror::Error;

use crate::group::GroupError;
use crate::linalg::{self, Matrix, Scalar, ONE, ZERO};

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgebraError {
    #[error("algebra dimension must be at least 1")]
    ZeroDimension,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("structure constants contain a non-finite value")]
    NonFinite,
    #[error("multiplication is not associative (residual {residual:.3e})")]
    NotAssociative { residual: f64 },
    #[error("unit vector is not a two-sided identity (residual {residual:.3e})")]
    BadUnit { residual: f64 },
    #[error("trace metric is singular (sigma_min {sigma_min:.3e}, sigma_max {sigma_max:.3e}); the algebra is not semisimple")]
    SingularMetric { sigma_min: f64, sigma_max: f64 },
    #[error("expected {expected} generator images, found {found}")]
    WrongImageCount { expected: usize, found: usize },
    #[error("image of generator {generator} is not central (residual {residual:.3e})")]
    NotCentral { generator: usize, residual: f64 },
    #[error("image of generator {generator} is not invertible")]
    NotInvertible { generator: usize },
    #[error("image of generator {generator} raised to the factor order is not the unit (residual {residual:.3e})")]
    OrderViolation { generator: usize, residual: f64 },
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// An associative unital algebra over the complex numbers with its trace form.
#[derive(Debug, Clone)]
pub struct Algebra {
    dim: usize,
    structure: Vec<Scalar>,
    unit: Vec<Scalar>,
    metric: Matrix,
    inv_metric: Matrix,
    tol: f64,
}

/// Residuals of the algebraic identities that hold for a valid algebra.
#[derive(Debug, Clone, Serialize)]
pub struct AlgebraResiduals {
    pub associativity: f64,
    pub unit: f64,
    pub metric_symmetry: f64,
    pub metric_inverse: f64,
    pub cyclicity: f64,
    /// `|g(ab, c) - g(a, bc)|` over basis triples.
    pub frobenius: f64,
}

impl AlgebraResiduals {
    pub fn named(&self) -> [(&'static str, f64); 6] {
        [
            ("associativity", self.associativity),
            ("unit", self.unit),
            ("metric_symmetry", self.metric_symmetry),
            ("metric_inverse", self.metric_inverse),
            ("cyclicity", self.cyclicity),
            ("frobenius", self.frobenius),
        ]
    }

    pub fn max(&self) -> f64 {
        self.named().iter().map(|(_, r)| *r).fold(0.0, f64::max)
    }
}

#[inline]
fn idx(d: usize, i: usize, j: usize, k: usize) -> usize {
    (i * d + j) * d + k
}

impl Algebra {
    /// `structure` is the dense array `C[i][j][k]` flattened row-major.
    pub fn new(
        dim: usize,
        structure: Vec<Scalar>,
        unit: Vec<Scalar>,
        tol: f64,
    ) -> Result<Self, AlgebraError> {
        if dim == 0 {
            return Err(AlgebraError::ZeroDimension);
        }
        if structure.len() != dim * dim * dim {
            return Err(AlgebraError::DimensionMismatch {
                expected: dim * dim * dim,
                found: structure.len(),
            });
        }
        if unit.len() != dim {
            return Err(AlgebraError::DimensionMismatch { expected: dim, found: unit.len() });
        }
        if structure.iter().chain(&unit).any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(AlgebraError::NonFinite);
        }
        let mut alg = Self {
            dim,
            structure,
            unit,
            metric: Matrix::zeros(dim, dim),
            inv_metric: Matrix::zeros(dim, dim),
            tol,
        };
        let residual = alg.associativity_residual();
        if residual >= tol {
            return Err(AlgebraError::NotAssociative { residual });
        }
        let residual = alg.unit_residual();
        if residual >= tol {
            return Err(AlgebraError::BadUnit { residual });
        }
        alg.metric = alg.trace_metric();
        let s = linalg::singular_values(&alg.metric);
        let (sigma_max, sigma_min) = (s[0], s[s.len() - 1]);
        if !linalg::is_invertible(&alg.metric, tol) {
            return Err(AlgebraError::SingularMetric { sigma_min, sigma_max });
        }
        alg.inv_metric = alg
            .metric
            .clone()
            .try_inverse()
            .ok_or(AlgebraError::SingularMetric { sigma_min, sigma_max })?;
        Ok(alg)
    }

    /// Builds the dense structure array from a function of `(i, j, k)`.
    pub fn from_fn(
        dim: usize,
        f: impl Fn(usize, usize, usize) -> Scalar,
        unit: Vec<Scalar>,
        tol: f64,
    ) -> Result<Self, AlgebraError> {
        let mut c = vec![ZERO; dim * dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    c[idx(dim, i, j, k)] = f(i, j, k);
                }
            }
        }
        Self::new(dim, c, unit, tol)
    }

    /// Same algebra, re-validated under a different tolerance.
    pub fn with_tolerance(&self, tol: f64) -> Result<Self, AlgebraError> {
        Self::new(self.dim, self.structure.clone(), self.unit.clone(), tol)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn tolerance(&self) -> f64 {
        self.tol
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    /// `C_ij^k`.
    #[inline]
    pub fn c(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.structure[idx(self.dim, i, j, k)]
    }

    pub fn structure(&self) -> &[Scalar] {
        &self.structure
    }

    pub fn metric(&self) -> &Matrix {
        &self.metric
    }

    pub fn inv_metric(&self) -> &Matrix {
        &self.inv_metric
    }

    /// `C_ijk = Σ_m C_ij^m g_mk`, flattened.
    pub fn lowered(&self) -> Vec<Scalar> {
        lower(self, &self.structure)
    }

    pub fn basis(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![ZERO; self.dim];
        v[i] = ONE;
        v
    }

    fn check_len(&self, v: &[Scalar]) -> Result<(), AlgebraError> {
        if v.len() == self.dim {
            Ok(())
        } else {
            Err(AlgebraError::DimensionMismatch { expected: self.dim, found: v.len() })
        }
    }

    /// `(ab)_k = Σ_{i,j} a_i b_j C_ij^k`.
    pub fn multiply(&self, a: &[Scalar], b: &[Scalar]) -> Result<Vec<Scalar>, AlgebraError> {
        self.check_len(a)?;
        self.check_len(b)?;
        Ok(self.mul(a, b))
    }

    pub(crate) fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let d = self.dim;
        let mut out = vec![ZERO; d];
        for (i, &ai) in a.iter().enumerate() {
            if ai == ZERO {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj == ZERO {
                    continue;
                }
                let w = ai * bj;
                let row = &self.structure[idx(d, i, j, 0)..idx(d, i, j, 0) + d];
                for (o, c) in out.iter_mut().zip(row) {
                    *o += w * c;
                }
            }
        }
        out
    }

    /// Matrix of `b ↦ a·b`: entry `[k][j] = Σ_i a_i C_ij^k`.
    pub fn left_mult_matrix(&self, a: &[Scalar]) -> Result<Matrix, AlgebraError> {
        self.check_len(a)?;
        let d = self.dim;
        Ok(Matrix::from_fn(d, d, |k, j| (0..d).map(|i| a[i] * self.c(i, j, k)).sum()))
    }

    /// Matrix of `a ↦ a·b`: entry `[k][i] = Σ_j b_j C_ij^k`.
    pub fn right_mult_matrix(&self, b: &[Scalar]) -> Result<Matrix, AlgebraError> {
        self.check_len(b)?;
        let d = self.dim;
        Ok(Matrix::from_fn(d, d, |k, i| (0..d).map(|j| b[j] * self.c(i, j, k)).sum()))
    }

    /// The Frobenius form `g(x, y) = Σ x_i g_ij y_j` (bilinear, no conjugation).
    pub fn pair(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let d = self.dim;
        let mut s = ZERO;
        for i in 0..d {
            for j in 0..d {
                s += x[i] * self.metric[(i, j)] * y[j];
            }
        }
        s
    }

    /// `g(x, u)`, which for the trace form is the trace of left multiplication by `x`.
    pub fn counit(&self, x: &[Scalar]) -> Scalar {
        self.pair(x, &self.unit)
    }

    fn trace_metric(&self) -> Matrix {
        let d = self.dim;
        Matrix::from_fn(d, d, |i, j| {
            let mut s = ZERO;
            for k in 0..d {
                for l in 0..d {
                    s += self.c(i, k, l) * self.c(j, l, k);
                }
            }
            s
        })
    }

    fn associativity_residual(&self) -> f64 {
        let d = self.dim;
        let mut worst = 0.0f64;
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    for l in 0..d {
                        let mut lhs = ZERO;
                        let mut rhs = ZERO;
                        for m in 0..d {
                            lhs += self.c(i, j, m) * self.c(m, k, l);
                            rhs += self.c(j, k, m) * self.c(i, m, l);
                        }
                        worst = worst.max((lhs - rhs).norm());
                    }
                }
            }
        }
        worst
    }

    fn unit_residual(&self) -> f64 {
        let mut worst = 0.0f64;
        for j in 0..self.dim {
            let e = self.basis(j);
            worst = worst.max(linalg::vec_diff(&self.mul(&self.unit, &e), &e));
            worst = worst.max(linalg::vec_diff(&self.mul(&e, &self.unit), &e));
        }
        worst
    }

    pub fn residuals(&self) -> AlgebraResiduals {
        let d = self.dim;
        let g = &self.metric;
        let metric_symmetry = linalg::max_abs_diff(g, &g.transpose());
        let metric_inverse =
            linalg::max_abs_diff(&(g * &self.inv_metric), &Matrix::identity(d, d));
        let low = self.lowered();
        let mut cyclicity = 0.0f64;
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let a = low[idx(d, i, j, k)];
                    cyclicity = cyclicity
                        .max((a - low[idx(d, j, k, i)]).norm())
                        .max((a - low[idx(d, k, i, j)]).norm());
                }
            }
        }
        let mut frobenius = 0.0f64;
        let basis: Vec<_> = (0..d).map(|i| self.basis(i)).collect();
        for a in &basis {
            for b in &basis {
                let ab = self.mul(a, b);
                for c in &basis {
                    let bc = self.mul(b, c);
                    frobenius = frobenius.max((self.pair(&ab, c) - self.pair(a, &bc)).norm());
                }
            }
        }
        AlgebraResiduals {
            associativity: self.associativity_residual(),
            unit: self.unit_residual(),
            metric_symmetry,
            metric_inverse,
            cyclicity,
            frobenius,
        }
    }

    /// Basis of the center: null space of `x ↦ (x e_j − e_j x)_j`.
    pub fn center_basis(&self) -> Vec<Vec<Scalar>> {
        let d = self.dim;
        let mut sys = Matrix::zeros(d * d, d);
        for j in 0..d {
            let e = self.basis(j);
            let comm = self.right_mult_matrix(&e).expect("basis length")
                - self.left_mult_matrix(&e).expect("basis length");
            sys.view_mut((j * d, 0), (d, d)).copy_from(&comm);
        }
        linalg::null_space(&sys, self.tol)
    }

    /// `max_j |x e_j − e_j x|`.
    pub fn commutator_residual(&self, x: &[Scalar]) -> f64 {
        (0..self.dim)
            .map(|j| {
                let e = self.basis(j);
                linalg::vec_diff(&self.mul(x, &e), &self.mul(&e, x))
            })
            .fold(0.0, f64::max)
    }

    /// Re-expresses the algebra in the basis `f_a = Σ_i p[i][a] e_i`.
    pub fn change_basis(&self, p: &Matrix) -> Result<Self, AlgebraError> {
        let d = self.dim;
        if p.shape() != (d, d) {
            return Err(AlgebraError::DimensionMismatch { expected: d, found: p.nrows() });
        }
        let pinv = p.clone().try_inverse().ok_or(AlgebraError::SingularMetric {
            sigma_min: 0.0,
            sigma_max: 0.0,
        })?;
        // f_a f_b = Σ p_ia p_jb C_ij^k e_k and e_k = Σ_c pinv_ck f_c
        let mut tmp = vec![ZERO; d * d * d];
        for a in 0..d {
            for b in 0..d {
                let mut prod = vec![ZERO; d];
                for i in 0..d {
                    for j in 0..d {
                        let w = p[(i, a)] * p[(j, b)];
                        if w == ZERO {
                            continue;
                        }
                        for (k, o) in prod.iter_mut().enumerate() {
                            *o += w * self.c(i, j, k);
                        }
                    }
                }
                for c in 0..d {
                    tmp[idx(d, a, b, c)] = (0..d).map(|k| pinv[(c, k)] * prod[k]).sum();
                }
            }
        }
        let unit = (0..d).map(|c| (0..d).map(|k| pinv[(c, k)] * self.unit[k]).sum()).collect();
        Self::new(d, tmp, unit, self.tol)
    }

    /// Block direct sum `self ⊕ other`, basis of `self` first.
    pub fn direct_sum(&self, other: &Algebra) -> Result<Self, AlgebraError> {
        let (d1, d2) = (self.dim, other.dim);
        let d = d1 + d2;
        let c = move |i: usize, j: usize, k: usize| {
            if i < d1 && j < d1 && k < d1 {
                self.c(i, j, k)
            } else if i >= d1 && j >= d1 && k >= d1 {
                other.c(i - d1, j - d1, k - d1)
            } else {
                ZERO
            }
        };
        let unit = self.unit.iter().chain(&other.unit).copied().collect();
        Self::from_fn(d, c, unit, self.tol.max(other.tol))
    }
}

/// Lowers the last index of a flattened `d×d×d` array with the metric.
pub(crate) fn lower(alg: &Algebra, upper: &[Scalar]) -> Vec<Scalar> {
    let d = alg.dim;
    let mut out = vec![ZERO; d * d * d];
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                out[idx(d, i, j, k)] =
                    (0..d).map(|m| upper[idx(d, i, j, m)] * alg.metric[(m, k)]).sum();
            }
        }
    }
    out
}
