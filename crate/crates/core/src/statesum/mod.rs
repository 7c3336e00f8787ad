//! The homotopical state sum `Z(M, T, g)`.
//!
//! Each triangle contributes its lowered twisted structure constants
//! `C(g)_ijk` (indices in slot order), each gluing a propagator `g^{kk'}`,
//! and all indices are summed. [`evaluate`] contracts that network in the
//! order chosen by [`plan_contraction`]; [`evaluate_bruteforce`] sums over
//! colorings one at a time and serves as the oracle.
//!
//! ```
//! use hqft::frobenius::{fixtures, GAction};
//! use hqft::group::FiniteAbelianGroup;
//! use hqft::statesum::evaluate;
//! use hqft::surface::builders::torus;
//!
//! // M_2 ⊕ C has a two-dimensional center, and the torus counts it
//! let alg = fixtures::BlockAlgebra::new(&[2, 1]).algebra;
//! let z = evaluate(&torus(FiniteAbelianGroup::trivial()), &alg, &GAction::trivial()).unwrap();
//! assert!((z.re - 2.0).abs() < 1e-12 && z.im.abs() < 1e-12);
//! ```

mod plan;
mod tensor;

pub use plan::{plan_contraction, plan_for_legs, ContractionPlan, MergeStep};

use std::collections::HashMap;

use thiserror::Error;

use crate::frobenius::{Algebra, AlgebraError, GAction};
use crate::group::{GroupElement, GroupError};
use crate::linalg::{Matrix, Scalar, ONE, ZERO};
use crate::surface::LabeledSurface;
use tensor::Tensor;

/// Largest intermediate tensor [`evaluate`] will build, in entries.
pub const DEFAULT_ENTRY_CAP: u128 = 100_000_000;
/// Largest number of colorings [`evaluate_bruteforce`] will enumerate.
pub const DEFAULT_ORACLE_CAP: u128 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum StateSumError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("surface is labeled by {surface} but the action is of {action}")]
    ActionGroup { surface: String, action: String },
    #[error("contraction needs a tensor of {entries} entries, cap is {cap}")]
    PlanOverflow { entries: u128, cap: u128 },
    #[error("oracle would enumerate {colorings} colorings, cap is {cap}")]
    TooLarge { colorings: u128, cap: u128 },
}

/// `Z` together with the plan that produced it.
#[derive(Debug, Clone)]
pub struct Evaluation {
    pub z: Scalar,
    pub plan: ContractionPlan,
    /// Multiply-adds spent in pairwise contractions.
    pub plan_cost: u128,
}

fn check_groups(surface: &LabeledSurface, action: &GAction) -> Result<(), StateSumError> {
    if surface.group() != action.group() {
        return Err(StateSumError::ActionGroup {
            surface: surface.group().to_string(),
            action: action.group().to_string(),
        });
    }
    Ok(())
}

/// Lowered twisted constants of triangle `t`, flattened `[slot0][slot1][slot2]`.
pub fn vertex_tensor(
    t: usize,
    surface: &LabeledSurface,
    alg: &Algebra,
    action: &GAction,
) -> Result<Vec<Scalar>, StateSumError> {
    check_groups(surface, action)?;
    label_tensor(surface.label(t), alg, action)
}

fn label_tensor(
    g: &GroupElement,
    alg: &Algebra,
    action: &GAction,
) -> Result<Vec<Scalar>, StateSumError> {
    Ok(crate::frobenius::lowered_twisted(g, action, alg)?)
}

pub fn edge_propagator(alg: &Algebra) -> Matrix {
    alg.inv_metric().clone()
}

fn label_tensors(
    surface: &LabeledSurface,
    alg: &Algebra,
    action: &GAction,
) -> Result<Vec<Vec<Scalar>>, StateSumError> {
    check_groups(surface, action)?;
    let mut cache: HashMap<&GroupElement, usize> = HashMap::new();
    let mut distinct = Vec::new();
    let mut which = Vec::with_capacity(surface.num_triangles());
    for g in surface.labels() {
        let k = match cache.get(g) {
            Some(&k) => k,
            None => {
                distinct.push(label_tensor(g, alg, action)?);
                cache.insert(g, distinct.len() - 1);
                distinct.len() - 1
            }
        };
        which.push(k);
    }
    Ok(which.into_iter().map(|k| distinct[k].clone()).collect())
}

/// `Z(M, T, g)` by planned contraction. The empty surface gives 1.
pub fn evaluate(
    surface: &LabeledSurface,
    alg: &Algebra,
    action: &GAction,
) -> Result<Scalar, StateSumError> {
    Ok(evaluate_with_plan(surface, alg, action, DEFAULT_ENTRY_CAP)?.z)
}

/// [`evaluate`] with an explicit cap on intermediate tensor size, returning
/// the plan as well.
pub fn evaluate_with_plan(
    surface: &LabeledSurface,
    alg: &Algebra,
    action: &GAction,
    cap: u128,
) -> Result<Evaluation, StateSumError> {
    let d = alg.dim();
    let graph = surface.dual_graph();
    let plan = plan_contraction(&graph);
    let entries = plan.max_entries(d);
    if entries > cap {
        return Err(StateSumError::PlanOverflow { entries, cap });
    }
    let vertex = label_tensors(surface, alg, action)?;
    let prop = edge_propagator(alg);

    let legs = graph.legs();
    let mut live: Vec<Option<Tensor>> = vertex
        .into_iter()
        .zip(&legs)
        .map(|(data, l)| Some(Tensor { legs: l.clone(), data }))
        .collect();
    // the propagator sits on the b side of every gluing
    for g in surface.gluings() {
        let t = live[g.b.triangle].as_mut().expect("fresh");
        t.absorb(g.b.edge, &prop, d);
    }
    for slot in live.iter_mut() {
        let t = slot.take().expect("fresh");
        *slot = Some(t.trace_repeated(d));
    }
    for step in &plan.steps {
        let a = live[step.keep].take().expect("planned");
        let b = live[step.absorb].take().expect("planned");
        live[step.keep] = Some(a.contract(&b, d));
    }
    let z = live.into_iter().flatten().fold(ONE, |acc, t| {
        debug_assert_eq!(t.rank(), 0);
        acc * t.data[0]
    });
    let plan_cost = plan.cost(d);
    Ok(Evaluation { z, plan, plan_cost })
}

/// `|Z|` of the same triangulation with every label trivial. Twisted values
/// can cancel to zero, so relative comparisons divide by at least this.
pub fn untwisted_scale(surface: &LabeledSurface, alg: &Algebra) -> Result<f64, StateSumError> {
    let group = surface.group().clone();
    let plain = surface
        .relabeled(vec![group.identity(); surface.num_triangles()])
        .expect("identity labels fit any surface");
    Ok(evaluate(&plain, alg, &GAction::unit_on(group, alg))?.norm())
}

/// `|a − b| / max(|b|, scale)`.
pub fn relative_difference(a: Scalar, b: Scalar, scale: f64) -> f64 {
    (a - b).norm() / b.norm().max(scale)
}

/// Number of colorings [`evaluate_bruteforce`] would visit: the product over
/// gluings of the number of non-zero propagator entries.
pub fn oracle_colorings(surface: &LabeledSurface, alg: &Algebra) -> u128 {
    let support = propagator_support(alg).len() as u128;
    (0..surface.gluings().len()).fold(1u128, |a, _| a.saturating_mul(support))
}

fn propagator_support(alg: &Algebra) -> Vec<(usize, usize, Scalar)> {
    let p = alg.inv_metric();
    let d = alg.dim();
    let mut out = Vec::new();
    for k in 0..d {
        for kp in 0..d {
            if p[(k, kp)] != ZERO {
                out.push((k, kp, p[(k, kp)]));
            }
        }
    }
    out
}

/// `Z` as the literal sum over colorings of all flags. Colorings whose
/// propagator weight vanishes identically are skipped.
pub fn evaluate_bruteforce(
    surface: &LabeledSurface,
    alg: &Algebra,
    action: &GAction,
) -> Result<Scalar, StateSumError> {
    evaluate_bruteforce_capped(surface, alg, action, DEFAULT_ORACLE_CAP)
}

pub fn evaluate_bruteforce_capped(
    surface: &LabeledSurface,
    alg: &Algebra,
    action: &GAction,
    cap: u128,
) -> Result<Scalar, StateSumError> {
    let colorings = oracle_colorings(surface, alg);
    if colorings > cap {
        return Err(StateSumError::TooLarge { colorings, cap });
    }
    let vertex = label_tensors(surface, alg, action)?;
    let d = alg.dim();
    let support = propagator_support(alg);
    let gluings = surface.gluings();
    let mut color = vec![0usize; 3 * surface.num_triangles()];
    let mut choice = vec![0usize; gluings.len()];
    let mut total = ZERO;
    loop {
        let mut w = ONE;
        for (g, &c) in gluings.iter().zip(&choice) {
            let (k, kp, p) = support[c];
            color[3 * g.a.triangle + g.a.edge] = k;
            color[3 * g.b.triangle + g.b.edge] = kp;
            w *= p;
        }
        for (t, c) in vertex.iter().enumerate() {
            w *= c[(color[3 * t] * d + color[3 * t + 1]) * d + color[3 * t + 2]];
        }
        total += w;

        let mut k = choice.len();
        loop {
            if k == 0 {
                return Ok(total);
            }
            k -= 1;
            choice[k] += 1;
            if choice[k] < support.len() {
                break;
            }
            choice[k] = 0;
        }
    }
}

/// Entry-wise residual of the label transfer identity
/// `Σ_{k,k'} C(g)_ijk g^{kk'} C(h)_k'lm = Σ_{k,k'} C(0)_ijk g^{kk'} C(g+h)_k'lm`.
pub fn label_transfer_residual(
    g: &GroupElement,
    h: &GroupElement,
    alg: &Algebra,
    action: &GAction,
) -> Result<f64, StateSumError> {
    let group = action.group();
    let sum = group.op(g, h)?;
    let lhs = glue_pair(&label_tensor(g, alg, action)?, &label_tensor(h, alg, action)?, alg);
    let rhs =
        glue_pair(&label_tensor(&group.identity(), alg, action)?, &label_tensor(&sum, alg, action)?, alg);
    Ok(crate::linalg::vec_diff(&lhs, &rhs))
}

fn glue_pair(a: &[Scalar], b: &[Scalar], alg: &Algebra) -> Vec<Scalar> {
    let d = alg.dim();
    let p = alg.inv_metric();
    let mut out = vec![ZERO; d * d * d * d];
    for i in 0..d {
        for j in 0..d {
            for l in 0..d {
                for m in 0..d {
                    let mut s = ZERO;
                    for k in 0..d {
                        for kp in 0..d {
                            s += a[(i * d + j) * d + k] * p[(k, kp)] * b[(kp * d + l) * d + m];
                        }
                    }
                    out[((i * d + j) * d + l) * d + m] = s;
                }
            }
        }
    }
    out
}
