//! Standard algebras and generators of random semisimple test algebras.

use rand::Rng;

use super::{Algebra, AlgebraError, GAction, DEFAULT_TOLERANCE};
use crate::group::FiniteAbelianGroup;
use crate::linalg::{Matrix, Scalar, ONE, ZERO};

pub fn ground_field() -> Algebra {
    Algebra::new(1, vec![ONE], vec![ONE], DEFAULT_TOLERANCE).expect("ground field")
}

/// `C[Z/n]` in the basis `1, s, …, s^{n-1}`.
pub fn cyclic_group_algebra(n: usize) -> Algebra {
    let mut unit = vec![ZERO; n];
    unit[0] = ONE;
    Algebra::from_fn(n, |i, j, k| if (i + j) % n == k { ONE } else { ZERO }, unit, DEFAULT_TOLERANCE)
        .expect("group algebra")
}

/// `M_n` in the matrix-unit basis `e_ab ↦ a·n + b`.
pub fn matrix_algebra(n: usize) -> Algebra {
    let d = n * n;
    let unit = (0..d).map(|x| if x / n == x % n { ONE } else { ZERO }).collect();
    Algebra::from_fn(
        d,
        |x, y, z| {
            let (a, b) = (x / n, x % n);
            let (c, e) = (y / n, y % n);
            // e_ab e_ce = δ_bc e_ae
            if b == c && z == a * n + e {
                ONE
            } else {
                ZERO
            }
        },
        unit,
        DEFAULT_TOLERANCE,
    )
    .expect("matrix algebra")
}

/// `C[x]/(x²)`, which is not semisimple.
pub fn dual_numbers() -> Result<Algebra, AlgebraError> {
    Algebra::from_fn(
        2,
        |i, j, k| if i + j == k { ONE } else { ZERO },
        vec![ONE, ZERO],
        DEFAULT_TOLERANCE,
    )
}

/// A direct sum of matrix blocks together with its central idempotents.
#[derive(Debug, Clone)]
pub struct BlockAlgebra {
    pub algebra: Algebra,
    pub block_sizes: Vec<usize>,
    /// `1_a` for each block, in the algebra's basis.
    pub idempotents: Vec<Vec<Scalar>>,
}

impl BlockAlgebra {
    /// `M_{n_1} ⊕ … ⊕ M_{n_r}` in the concatenated matrix-unit basis.
    pub fn new(block_sizes: &[usize]) -> Self {
        assert!(!block_sizes.is_empty() && block_sizes.iter().all(|&n| n > 0));
        let mut algebra: Option<Algebra> = None;
        let mut offsets = Vec::new();
        let mut off = 0;
        for &n in block_sizes {
            offsets.push(off);
            off += n * n;
            let m = matrix_algebra(n);
            algebra = Some(match algebra {
                None => m,
                Some(a) => a.direct_sum(&m).expect("direct sum of semisimple blocks"),
            });
        }
        let algebra = algebra.expect("non-empty");
        let idempotents = block_sizes
            .iter()
            .zip(&offsets)
            .map(|(&n, &o)| {
                let mut v = vec![ZERO; off];
                for a in 0..n {
                    v[o + a * n + a] = ONE;
                }
                v
            })
            .collect();
        Self { algebra, block_sizes: block_sizes.to_vec(), idempotents }
    }

    /// `C[Z/n]` in the group basis, seen as `n` one-dimensional blocks with
    /// idempotents `1_k = (1/n) Σ_j ω^{-jk} s^j`.
    pub fn cyclic_group(n: usize) -> Self {
        let idempotents = (0..n)
            .map(|k| {
                (0..n)
                    .map(|j| root_of_unity(n as u64, ((n - (j * k) % n) % n) as u64) / n as f64)
                    .collect()
            })
            .collect();
        Self { algebra: cyclic_group_algebra(n), block_sizes: vec![1; n], idempotents }
    }

    /// Moves to the basis given by the columns of `p`.
    pub fn change_basis(&self, p: &Matrix) -> Self {
        let algebra = self.algebra.change_basis(p).expect("invertible basis change");
        let pinv = p.clone().try_inverse().expect("invertible basis change");
        let idempotents = self
            .idempotents
            .iter()
            .map(|v| {
                let col = &pinv * nalgebra::DVector::from_column_slice(v);
                col.iter().copied().collect()
            })
            .collect();
        Self { algebra, block_sizes: self.block_sizes.clone(), idempotents }
    }

    /// The central element `Σ_a w_a 1_a`.
    pub fn central(&self, weights: &[Scalar]) -> Vec<Scalar> {
        let d = self.algebra.dim();
        let mut out = vec![ZERO; d];
        for (w, e) in weights.iter().zip(&self.idempotents) {
            for (o, x) in out.iter_mut().zip(e) {
                *o += w * x;
            }
        }
        out
    }

    /// An action sending each generator to `Σ_a ω_a 1_a`, with `ω_a` given as
    /// exponents of a primitive root of unity of the generator's order.
    pub fn root_of_unity_action(
        &self,
        group: &FiniteAbelianGroup,
        exponents: &[Vec<u64>],
    ) -> Result<GAction, AlgebraError> {
        let images = group
            .orders()
            .iter()
            .zip(exponents)
            .map(|(&n, ex)| {
                let w: Vec<Scalar> = ex.iter().map(|&k| root_of_unity(n, k)).collect();
                self.central(&w)
            })
            .collect();
        GAction::new(group.clone(), images, &self.algebra)
    }
}

/// `exp(2πi k / n)`.
pub fn root_of_unity(n: u64, k: u64) -> Scalar {
    let t = 2.0 * std::f64::consts::PI * (k % n) as f64 / n as f64;
    // exact values on the axes keep small-group fixtures free of rounding
    match (4 * (k % n)) % n {
        0 => match (4 * (k % n)) / n {
            0 => ONE,
            1 => Scalar::new(0.0, 1.0),
            2 => -ONE,
            _ => Scalar::new(0.0, -1.0),
        },
        _ => Scalar::new(t.cos(), t.sin()),
    }
}

/// Haar-ish random unitary: QR of a matrix with uniform complex entries.
pub fn random_unitary<R: Rng + ?Sized>(rng: &mut R, d: usize) -> Matrix {
    let m = Matrix::from_fn(d, d, |_, _| {
        Scalar::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
    });
    m.qr().q()
}

/// Random block sizes with `Σ n_a² ≤ max_dim`.
pub fn random_block_sizes<R: Rng + ?Sized>(rng: &mut R, max_dim: usize) -> Vec<usize> {
    loop {
        let mut sizes = Vec::new();
        let mut dim = 0;
        loop {
            let n = if rng.random_bool(0.35) { 2 } else { 1 };
            if dim + n * n > max_dim {
                break;
            }
            sizes.push(n);
            dim += n * n;
            if rng.random_bool(0.3) {
                break;
            }
        }
        if !sizes.is_empty() {
            return sizes;
        }
    }
}

/// A random block algebra of total dimension at most `max_dim`, expressed in a
/// random unitary basis.
pub fn random_block_algebra<R: Rng + ?Sized>(rng: &mut R, max_dim: usize) -> BlockAlgebra {
    let sizes = random_block_sizes(rng, max_dim);
    let base = BlockAlgebra::new(&sizes);
    let u = random_unitary(rng, base.algebra.dim());
    base.change_basis(&u)
}

/// Random root-of-unity exponents, one per block per generator.
pub fn random_exponents<R: Rng + ?Sized>(
    rng: &mut R,
    group: &FiniteAbelianGroup,
    blocks: usize,
) -> Vec<Vec<u64>> {
    group.orders().iter().map(|&n| (0..blocks).map(|_| rng.random_range(0..n)).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn roots_of_unity() {
        assert_eq!(root_of_unity(4, 1), Scalar::new(0.0, 1.0));
        assert_eq!(root_of_unity(4, 3), Scalar::new(0.0, -1.0));
        assert_eq!(root_of_unity(2, 1), -ONE);
        let w = root_of_unity(3, 1);
        assert!((w * w * w - ONE).norm() < 1e-15);
    }

    #[test]
    fn group_algebra_idempotents() {
        for n in 1..6 {
            let b = BlockAlgebra::cyclic_group(n);
            let a = &b.algebra;
            let mut sum = vec![ZERO; n];
            for (k, e) in b.idempotents.iter().enumerate() {
                assert!(crate::linalg::vec_diff(&a.mul(e, e), e) < 1e-14);
                for f in &b.idempotents[k + 1..] {
                    assert!(crate::linalg::max_abs(a.mul(e, f)) < 1e-14);
                }
                sum.iter_mut().zip(e).for_each(|(s, x)| *s += x);
            }
            assert!(crate::linalg::vec_diff(&sum, a.unit()) < 1e-14);
        }
    }

    #[test]
    fn block_algebra_idempotents() {
        let b = BlockAlgebra::new(&[2, 1]);
        let a = &b.algebra;
        assert_eq!(a.dim(), 5);
        let sum = b.central(&[ONE, ONE]);
        assert_eq!(sum, a.unit());
        for e in &b.idempotents {
            assert_eq!(&a.mul(e, e), e);
            assert!(a.commutator_residual(e) < 1e-15);
        }
    }

    #[test]
    fn random_algebras_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let b = random_block_algebra(&mut rng, 6);
            let a = &b.algebra;
            assert!(a.dim() <= 6);
            assert!(a.residuals().max() < 1e-10);
            assert_eq!(a.center_basis().len(), b.block_sizes.len());
            let g = FiniteAbelianGroup::new(&[2, 3]).unwrap();
            let ex = random_exponents(&mut rng, &g, b.block_sizes.len());
            let act = b.root_of_unity_action(&g, &ex).unwrap();
            assert!(act.residuals(a).unwrap().max() < 1e-10);
        }
    }
}
