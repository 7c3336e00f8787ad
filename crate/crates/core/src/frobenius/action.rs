//! Central actions of a finite abelian group on an algebra.
//!
//! An action is a homomorphism `φ: G → Z(A)*`, stored as the images of the
//! cyclic generators of `G`. Every other image is a product of powers of those,
//! and `g` acts on `v` as left multiplication by `φ(g)`.

use serde::Serialize;

use super::{idx, lower, Algebra, AlgebraError};
use crate::group::{FiniteAbelianGroup, GroupElement};
use crate::linalg::{self, Scalar, ZERO};

#[derive(Debug, Clone)]
pub struct GAction {
    group: FiniteAbelianGroup,
    images: Vec<Vec<Scalar>>,
}

/// Residuals of the G-Frobenius algebra laws, maximised over basis vectors
/// and group elements.
#[derive(Debug, Clone, Serialize)]
pub struct ActionResiduals {
    /// `φ(g) x − x φ(g)` for every group element.
    pub centrality: f64,
    /// `φ(g + h) − φ(g) φ(h)`.
    pub homomorphism: f64,
    /// `v (g·w) − g·(v w)`.
    pub right_linearity: f64,
    /// `(g·v) w − g·(v w)`.
    pub left_linearity: f64,
    /// `(v, g·w) − (g·v, w)`.
    pub form_invariance: f64,
}

impl ActionResiduals {
    pub fn named(&self) -> [(&'static str, f64); 5] {
        [
            ("centrality", self.centrality),
            ("homomorphism", self.homomorphism),
            ("right_linearity", self.right_linearity),
            ("left_linearity", self.left_linearity),
            ("form_invariance", self.form_invariance),
        ]
    }

    pub fn max(&self) -> f64 {
        self.named().iter().map(|(_, r)| *r).fold(0.0, f64::max)
    }
}

impl GAction {
    /// Validates one image per generator: length, centrality, invertibility,
    /// and `image_i^{n_i} = 1`, in that order.
    pub fn new(
        group: FiniteAbelianGroup,
        images: Vec<Vec<Scalar>>,
        alg: &Algebra,
    ) -> Result<Self, AlgebraError> {
        if images.len() != group.num_factors() {
            return Err(AlgebraError::WrongImageCount {
                expected: group.num_factors(),
                found: images.len(),
            });
        }
        let tol = alg.tolerance();
        for (generator, x) in images.iter().enumerate() {
            alg.check_len(x)?;
            let residual = alg.commutator_residual(x);
            if residual >= tol {
                return Err(AlgebraError::NotCentral { generator, residual });
            }
            if !linalg::is_invertible(&alg.left_mult_matrix(x)?, tol) {
                return Err(AlgebraError::NotInvertible { generator });
            }
            let power = pow(alg, x, group.orders()[generator]);
            let residual = linalg::vec_diff(&power, alg.unit());
            if residual >= tol {
                return Err(AlgebraError::OrderViolation { generator, residual });
            }
        }
        Ok(Self { group, images })
    }

    /// The action of the trivial group.
    pub fn trivial() -> Self {
        Self { group: FiniteAbelianGroup::trivial(), images: Vec::new() }
    }

    /// Every generator acts by the unit.
    pub fn unit_on(group: FiniteAbelianGroup, alg: &Algebra) -> Self {
        let images = vec![alg.unit().to_vec(); group.num_factors()];
        Self { group, images }
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn images(&self) -> &[Vec<Scalar>] {
        &self.images
    }

    /// `φ(g) = Π_i image_i^{g_i}`.
    pub fn image(&self, g: &GroupElement, alg: &Algebra) -> Result<Vec<Scalar>, AlgebraError> {
        self.group.check(g)?;
        let mut out = alg.unit().to_vec();
        for (x, &r) in self.images.iter().zip(g.residues()) {
            alg.check_len(x)?;
            for _ in 0..r {
                out = alg.mul(&out, x);
            }
        }
        Ok(out)
    }

    /// `g · v = φ(g) v`.
    pub fn act(
        &self,
        g: &GroupElement,
        v: &[Scalar],
        alg: &Algebra,
    ) -> Result<Vec<Scalar>, AlgebraError> {
        let phi = self.image(g, alg)?;
        alg.multiply(&phi, v)
    }

    /// Evaluates every G-Frobenius law over all group elements and basis vectors.
    pub fn residuals(&self, alg: &Algebra) -> Result<ActionResiduals, AlgebraError> {
        let d = alg.dim();
        let elements = self.group.enumerate();
        let images: Vec<Vec<Scalar>> =
            elements.iter().map(|g| self.image(g, alg)).collect::<Result<_, _>>()?;
        let basis: Vec<Vec<Scalar>> = (0..d).map(|i| alg.basis(i)).collect();

        let mut r = ActionResiduals {
            centrality: 0.0,
            homomorphism: 0.0,
            right_linearity: 0.0,
            left_linearity: 0.0,
            form_invariance: 0.0,
        };
        for (gi, g) in elements.iter().enumerate() {
            let phi = &images[gi];
            r.centrality = r.centrality.max(alg.commutator_residual(phi));
            for (hi, h) in elements.iter().enumerate() {
                let sum = self.group.op(g, h)?;
                let si = elements.binary_search(&sum).expect("enumerate is sorted");
                let prod = alg.mul(phi, &images[hi]);
                r.homomorphism = r.homomorphism.max(linalg::vec_diff(&images[si], &prod));
            }
            for v in &basis {
                let gv = alg.mul(phi, v);
                for w in &basis {
                    let gw = alg.mul(phi, w);
                    let g_vw = alg.mul(phi, &alg.mul(v, w));
                    r.right_linearity =
                        r.right_linearity.max(linalg::vec_diff(&alg.mul(v, &gw), &g_vw));
                    r.left_linearity =
                        r.left_linearity.max(linalg::vec_diff(&alg.mul(&gv, w), &g_vw));
                    r.form_invariance =
                        r.form_invariance.max((alg.pair(v, &gw) - alg.pair(&gv, w)).norm());
                }
            }
        }
        Ok(r)
    }
}

fn pow(alg: &Algebra, x: &[Scalar], n: u64) -> Vec<Scalar> {
    let mut out = alg.unit().to_vec();
    for _ in 0..n {
        out = alg.mul(&out, x);
    }
    out
}

/// `C(g)_jl^m = ((g·e_j) e_l)_m`, flattened as `[j][l][m]`.
pub fn twisted_constants(
    g: &GroupElement,
    action: &GAction,
    alg: &Algebra,
) -> Result<Vec<Scalar>, AlgebraError> {
    let d = alg.dim();
    if g.residues().iter().all(|&r| r == 0) {
        action.group.check(g)?;
        return Ok(alg.structure().to_vec());
    }
    let phi = alg.left_mult_matrix(&action.image(g, alg)?)?;
    let mut out = vec![ZERO; d * d * d];
    for j in 0..d {
        for l in 0..d {
            for m in 0..d {
                out[idx(d, j, l, m)] = (0..d).map(|p| phi[(p, j)] * alg.c(p, l, m)).sum();
            }
        }
    }
    Ok(out)
}

/// Lowered twisted constants `C(g)_jlk = Σ_m C(g)_jl^m g_mk`.
pub(crate) fn lowered_twisted(
    g: &GroupElement,
    action: &GAction,
    alg: &Algebra,
) -> Result<Vec<Scalar>, AlgebraError> {
    Ok(lower(alg, &twisted_constants(g, action, alg)?))
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;
    use crate::linalg::ONE;

    const I: Scalar = Scalar::new(0.0, 1.0);

    #[test]
    fn trivial_action() {
        let a = cyclic_group_algebra(2);
        let act = GAction::new(FiniteAbelianGroup::trivial(), vec![], &a).unwrap();
        let v = vec![Scalar::new(0.2, 0.1), Scalar::new(-3.0, 0.0)];
        assert_eq!(act.act(&act.group().identity(), &v, &a).unwrap(), v);
    }

    #[test]
    fn fourth_roots_of_unity_on_the_ground_field() {
        let k = ground_field();
        let z4 = FiniteAbelianGroup::cyclic(4);
        let act = GAction::new(z4.clone(), vec![vec![I]], &k).unwrap();
        let two = z4.element(&[2]).unwrap();
        assert!((act.act(&two, &[ONE], &k).unwrap()[0] + ONE).norm() < 1e-15);
        let c = twisted_constants(&z4.element(&[1]).unwrap(), &act, &k).unwrap();
        assert_eq!(c, vec![I]);
        assert_eq!(twisted_constants(&z4.identity(), &act, &k).unwrap(), k.structure());
    }

    #[test]
    fn validation_errors() {
        let m = matrix_algebra(2);
        let z2 = FiniteAbelianGroup::cyclic(2);
        // the swap matrix e12 + e21 fails to commute with e11
        let swap = vec![ZERO, ONE, ONE, ZERO];
        let e11 = m.basis(0);
        let comm = linalg::vec_diff(&m.mul(&swap, &e11), &m.mul(&e11, &swap));
        assert!(comm > 0.5);
        assert!(matches!(
            GAction::new(z2.clone(), vec![swap], &m),
            Err(AlgebraError::NotCentral { generator: 0, .. })
        ));
        let minus_one = vec![-ONE, ZERO, ZERO, -ONE];
        assert!(GAction::new(z2.clone(), vec![minus_one], &m).is_ok());
        let k = ground_field();
        assert!(matches!(
            GAction::new(z2.clone(), vec![vec![ZERO]], &k),
            Err(AlgebraError::NotInvertible { generator: 0 })
        ));
        assert!(matches!(
            GAction::new(FiniteAbelianGroup::cyclic(3), vec![vec![I]], &k),
            Err(AlgebraError::OrderViolation { generator: 0, .. })
        ));
        assert!(matches!(
            GAction::new(z2, vec![], &k),
            Err(AlgebraError::WrongImageCount { expected: 1, found: 0 })
        ));
        let act = GAction::trivial();
        let z4 = FiniteAbelianGroup::cyclic(4);
        assert!(act.act(&z4.identity(), &[ONE], &k).is_err());
    }

    #[test]
    fn action_composes() {
        let a = cyclic_group_algebra(2);
        let z4 = FiniteAbelianGroup::cyclic(4);
        // i·s has order 4 and is central
        let act = GAction::new(z4.clone(), vec![vec![ZERO, I]], &a).unwrap();
        let v = vec![Scalar::new(0.7, -0.2), Scalar::new(0.1, 1.3)];
        for g in z4.enumerate() {
            for h in z4.enumerate() {
                let lhs = act.act(&g, &act.act(&h, &v, &a).unwrap(), &a).unwrap();
                let rhs = act.act(&z4.op(&g, &h).unwrap(), &v, &a).unwrap();
                assert!(linalg::vec_diff(&lhs, &rhs) < 1e-14);
            }
        }
        assert!(act.residuals(&a).unwrap().max() < 1e-14);
    }

    #[test]
    fn lowered_twisted_is_cyclic() {
        let a = cyclic_group_algebra(2);
        let z2 = FiniteAbelianGroup::cyclic(2);
        let act = GAction::new(z2.clone(), vec![vec![ZERO, ONE]], &a).unwrap();
        let low = lowered_twisted(&z2.element(&[1]).unwrap(), &act, &a).unwrap();
        // C(s)_jlk = tr(s e_j e_l e_k) in the regular representation: 2 when
        // j + l + k is odd, else 0
        for j in 0..2 {
            for l in 0..2 {
                for k in 0..2 {
                    let expect = if (j + l + k) % 2 == 1 { 2.0 } else { 0.0 };
                    assert!((low[idx(2, j, l, k)] - Scalar::new(expect, 0.0)).norm() < 1e-14);
                    assert_eq!(low[idx(2, j, l, k)], low[idx(2, l, k, j)]);
                }
            }
        }
    }
}
