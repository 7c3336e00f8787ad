//! The acceptance suite: eight criteria, each a list of named checks.
//!
//! Every criterion is deterministic for a given seed. Randomized criteria
//! draw an independent generator per case, so running cases concurrently
//! does not change any result.

use std::time::Instant;

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::cobord::{closed_genus_word, evaluate_word, relation_residuals, GeneratorValues};
use crate::commands::{self, AlgebraInputs, Input};
use crate::frobenius::fixtures::*;
use crate::frobenius::{Algebra, GAction};
use crate::group::FiniteAbelianGroup;
use crate::io;
use crate::linalg::{Scalar, ONE};
use crate::report::{Check, RunReport};
use crate::statesum::{
    evaluate, evaluate_bruteforce, label_transfer_residual, relative_difference, untwisted_scale,
};
use crate::surface::builders::*;
use crate::surface::LabeledSurface;

pub const DEFAULT_SEED: u64 = 20_240_917;

/// A deliberate defect, to confirm that the suite notices it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mutation {
    /// Negate the value of `eta`.
    NegateEta,
}

#[derive(Debug, Clone)]
pub struct AcceptanceConfig {
    pub seed: u64,
    /// Replaces every criterion's tolerance when set.
    pub tolerance: Option<f64>,
    pub parallel: bool,
    pub mutation: Option<Mutation>,
}

impl Default for AcceptanceConfig {
    fn default() -> Self {
        Self { seed: DEFAULT_SEED, tolerance: None, parallel: false, mutation: None }
    }
}

impl AcceptanceConfig {
    fn tol(&self, default: f64) -> f64 {
        self.tolerance.unwrap_or(default)
    }

    fn rng(&self, criterion: u64, case: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed ^ (criterion << 56) ^ case.wrapping_mul(0x9e37_79b9_7f4a_7c15))
    }

    fn map<T: Sync, R: Send>(&self, items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
        if self.parallel {
            items.par_iter().map(f).collect()
        } else {
            items.iter().map(f).collect()
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub pass: bool,
    pub checks: Vec<Check>,
    pub elapsed_ms: f64,
}

impl CriterionResult {
    /// `criterion 3 homotopy invariance: PASS (7 checks, worst 1.2e-14 of 1e-8, 0.4 s)`.
    /// The worst residual ignores yes/no and runtime checks.
    pub fn summary_line(&self) -> String {
        let worst = self
            .checks
            .iter()
            .filter(|c| c.tolerance > 0.0 && c.tolerance < 0.5)
            .max_by(|a, b| (a.residual / a.tolerance).total_cmp(&(b.residual / b.tolerance)));
        let failed: Vec<&str> = self.checks.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect();
        let mut line = format!(
            "criterion {} {}: {} ({} checks",
            self.id,
            self.name,
            if self.pass { "PASS" } else { "FAIL" },
            self.checks.len()
        );
        if let Some(w) = worst {
            line += &format!(", worst {:.1e} of {:.0e}", w.residual, w.tolerance);
        }
        line += &format!(", {:.1} s)", self.elapsed_ms / 1e3);
        if !failed.is_empty() {
            line += &format!(" failed: {}", failed.join(", "));
        }
        line
    }
}

pub const CRITERIA: [(u8, &str); 8] = [
    (1, "oracle equivalence"),
    (2, "pachner invariance"),
    (3, "homotopy invariance"),
    (4, "g-frobenius axioms"),
    (5, "duality"),
    (6, "gluing theorem"),
    (7, "functor-state-sum agreement"),
    (8, "classification smoke test"),
];

type Outcome = Result<Vec<Check>, String>;

/// Runs one criterion by number (1 to 8).
pub fn run_criterion(id: u8, cfg: &AcceptanceConfig) -> CriterionResult {
    let start = Instant::now();
    let (_, name) = CRITERIA[usize::from(id) - 1];
    let outcome: Outcome = match id {
        1 => oracle_equivalence(cfg),
        2 => pachner_invariance(cfg),
        3 => homotopy_invariance(cfg),
        4 => g_frobenius_axioms(cfg),
        5 => duality(cfg),
        6 => gluing_theorem(cfg),
        7 => functor_agreement(cfg),
        8 => classification(cfg),
        _ => unreachable!("criteria are numbered 1 to 8"),
    };
    let mut checks = outcome.unwrap_or_else(|e| vec![Check::holds(format!("ran without error: {e}"), false)]);
    let elapsed = start.elapsed().as_secs_f64();
    match id {
        1 => checks.push(Check::new("runtime seconds", elapsed, 30.0)),
        2 => checks.push(Check::new("runtime seconds", elapsed, 120.0)),
        _ => {}
    }
    let pass = checks.iter().all(|c| c.pass);
    CriterionResult { id, name, pass, checks, elapsed_ms: elapsed * 1e3 }
}

/// Runs all eight criteria, concurrently when configured, in order of id.
pub fn run_all(cfg: &AcceptanceConfig) -> Vec<CriterionResult> {
    let ids: Vec<u8> = CRITERIA.iter().map(|c| c.0).collect();
    cfg.map(&ids, |&id| run_criterion(id, cfg))
}

/// The suite as a single report, one check per criterion check.
pub fn report(cfg: &AcceptanceConfig) -> RunReport {
    let mut r = RunReport::new("acceptance");
    let results = run_all(cfg);
    r.output("seed", cfg.seed);
    r.output("criteria", results.iter().map(|c| c.summary_line()).collect::<Vec<_>>());
    for c in results {
        for mut check in c.checks {
            check.name = format!("{}. {}: {}", c.id, c.name, check.name);
            r.check(check);
        }
    }
    r.finish()
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn max(xs: impl IntoIterator<Item = f64>) -> f64 {
    xs.into_iter().fold(0.0, |a, b| if b.is_nan() || a.is_nan() { f64::NAN } else { a.max(b) })
}

fn i() -> Scalar {
    Scalar::new(0.0, 1.0)
}

/// The fixture algebras shared by several criteria, with names.
fn fixture_algebras(rng: &mut ChaCha8Rng) -> Vec<(String, BlockAlgebra)> {
    let rotated = random_block_algebra(rng, 6);
    vec![
        ("ground field".into(), BlockAlgebra::new(&[1])),
        ("C[Z/2]".into(), BlockAlgebra::cyclic_group(2)),
        ("C[Z/3]".into(), BlockAlgebra::cyclic_group(3)),
        ("M_2".into(), BlockAlgebra::new(&[2])),
        ("M_2 + C".into(), BlockAlgebra::new(&[2, 1])),
        (format!("rotated {:?}", rotated.block_sizes), rotated),
    ]
}

// 1. planned contraction against the coloring sum on every small surface
fn oracle_equivalence(cfg: &AcceptanceConfig) -> Outcome {
    let tol = cfg.tol(1e-10);
    let mut rng = cfg.rng(1, 0);
    let trivial = FiniteAbelianGroup::trivial();
    let mut surfaces: Vec<(String, LabeledSurface)> =
        all_matchings(&trivial, 2).into_iter().enumerate().map(|(k, s)| (format!("matching {k}"), s)).collect();
    surfaces.push(("tetrahedron".into(), tetrahedron(trivial.clone())));
    let sphere2 = sphere(trivial.clone());
    surfaces.push(("sphere + torus".into(), sphere2.disjoint_union(&torus(trivial.clone())).map_err(err)?));
    surfaces.push(("sphere + sphere".into(), sphere2.disjoint_union(&sphere2).map_err(err)?));
    for k in 0..8 {
        surfaces.push((format!("random 4-matching {k}"), random_matching(&mut rng, &trivial, 4)));
    }
    let mut checks = vec![Check::holds(format!("at least 10 fixture surfaces ({})", surfaces.len()), surfaces.len() >= 10)];

    let compare = |s: &LabeledSurface, alg: &Algebra, act: &GAction| -> Result<f64, String> {
        let z = evaluate(s, alg, act).map_err(err)?;
        let b = evaluate_bruteforce(s, alg, act).map_err(err)?;
        Ok((z - b).norm() / (1.0 + b.norm()))
    };
    let algebras = [
        ("ground field", ground_field()),
        ("C[Z/2]", cyclic_group_algebra(2)),
        ("C[Z/3]", cyclic_group_algebra(3)),
        ("M_2", matrix_algebra(2)),
    ];
    for (name, alg) in &algebras {
        let r = cfg.map(&surfaces, |(_, s)| compare(s, alg, &GAction::trivial()));
        checks.push(Check::new(format!("{name}, trivial labels"), max(r.into_iter().collect::<Result<Vec<_>, _>>()?), tol));
    }
    // labeled copies: C[Z/n] with the generator acting by s
    for n in [2usize, 3] {
        let g = FiniteAbelianGroup::cyclic(n as u64);
        let alg = cyclic_group_algebra(n);
        let act = GAction::new(g.clone(), vec![alg.basis(1)], &alg).map_err(err)?;
        let labeled: Vec<LabeledSurface> = surfaces
            .iter()
            .map(|(_, s)| {
                let s = LabeledSurface::with_labels(g.clone(), vec![g.identity(); s.num_triangles()], s.gluings().iter().map(|q| (q.a, q.b)))
                    .expect("same gluings");
                randomly_labeled(&mut rng, &s)
            })
            .collect();
        let r = cfg.map(&labeled, |s| compare(s, &alg, &act));
        checks.push(Check::new(format!("C[Z/{n}], random labels"), max(r.into_iter().collect::<Result<Vec<_>, _>>()?), tol));
    }
    Ok(checks)
}

fn random_group(rng: &mut ChaCha8Rng) -> FiniteAbelianGroup {
    let orders: &[&[i64]] = &[&[], &[2], &[3], &[4], &[2, 2], &[2, 3]];
    FiniteAbelianGroup::new(orders.choose(rng).expect("non-empty")).expect("positive orders")
}

/// Applies one random legal move of a random kind; returns its kind.
fn random_move(rng: &mut ChaCha8Rng, s: &LabeledSurface) -> (usize, LabeledSurface) {
    loop {
        let kind = rng.random_range(0..3);
        let next = match kind {
            0 => s.pachner_13(rng.random_range(0..s.num_triangles())),
            1 => match s.degree3_vertices().choose(rng) {
                Some(&(t, c)) => s.pachner_31(t, c),
                None => continue,
            },
            _ => match s.flippable_edges().choose(rng) {
                Some(&q) => s.pachner_22(q),
                None => continue,
            },
        };
        return (kind, next.expect("moves chosen among legal ones"));
    }
}

// 2. random move sequences over random semisimple algebras
fn pachner_invariance(cfg: &AcceptanceConfig) -> Outcome {
    let tol = cfg.tol(1e-8);
    let cases: Vec<u64> = (0..200).collect();
    let results = cfg.map(&cases, |&case| -> Result<(f64, usize, [bool; 3]), String> {
        let mut rng = cfg.rng(2, case);
        let block = random_block_algebra(&mut rng, 6);
        let group = random_group(&mut rng);
        let ex = random_exponents(&mut rng, &group, block.block_sizes.len());
        let act = block.root_of_unity_action(&group, &ex).map_err(err)?;
        let h = rng.random_range(0..3);
        let mut s = randomly_labeled(&mut rng, &genus_surface(group, h));
        let z0 = evaluate(&s, &block.algebra, &act).map_err(err)?;
        let scale = untwisted_scale(&s, &block.algebra).map_err(err)?;
        let (mut worst, mut most) = (0f64, s.num_triangles());
        let mut used = [false; 3];
        for _ in 0..rng.random_range(1..=10) {
            let (kind, next) = random_move(&mut rng, &s);
            used[kind] = true;
            s = next;
            most = most.max(s.num_triangles());
            let z = evaluate(&s, &block.algebra, &act).map_err(err)?;
            worst = worst.max(relative_difference(z, z0, scale));
        }
        Ok((worst, most, used))
    });
    let results: Vec<_> = results.into_iter().collect::<Result<_, _>>()?;
    let most = results.iter().map(|r| r.1).max().unwrap_or(0);
    let mut used = [false; 3];
    for r in &results {
        for (u, v) in used.iter_mut().zip(r.2) {
            *u |= v;
        }
    }
    Ok(vec![
        Check::new("relative change over 200 sequences", max(results.iter().map(|r| r.0)), tol),
        Check::holds(format!("at most 30 triangles (max {most})"), most <= 30),
        Check::holds("1-3, 3-1 and 2-2 all exercised", used.iter().all(|&u| u)),
    ])
}

// 3. Z depends on the labels only through their total
fn homotopy_invariance(cfg: &AcceptanceConfig) -> Outcome {
    let tol = cfg.tol(1e-8);
    let entry_tol = cfg.tol(1e-10);
    let mut rng = cfg.rng(3, 0);
    let z4 = FiniteAbelianGroup::cyclic(4);
    let z2z3 = FiniteAbelianGroup::new(&[2, 3]).map_err(err)?;
    let rotated = random_block_algebra(&mut rng, 6);
    let setups = vec![
        ("M_2 + C with Z/4", BlockAlgebra::new(&[2, 1]), z4.clone()),
        ("C[Z/2] with Z/4", BlockAlgebra::cyclic_group(2), z4),
        ("M_2 + C + C with Z/2 x Z/3", BlockAlgebra::new(&[2, 1, 1]), z2z3.clone()),
        ("rotated block algebra with Z/2 x Z/3", rotated, z2z3),
    ];
    let mut checks = Vec::new();
    for (name, block, group) in &setups {
        let ex = random_exponents(&mut rng, group, block.block_sizes.len());
        let act = block.root_of_unity_action(group, &ex).map_err(err)?;
        let alg = &block.algebra;
        let elements = group.enumerate();
        let transfer = max(elements
            .iter()
            .flat_map(|g| elements.iter().map(move |h| (g, h)))
            .map(|(g, h)| label_transfer_residual(g, h, alg, &act).unwrap_or(f64::NAN)));
        checks.push(Check::new(format!("{name}: label transfer identity, entry-wise"), transfer, entry_tol));

        let surfaces = [
            ("tetrahedron", tetrahedron(group.clone())),
            ("torus", torus(group.clone()).pachner_13(0).map_err(err)?),
            ("genus 2", genus_surface(group.clone(), 2)),
        ];
        for (sname, s) in &surfaces {
            let class = elements.choose(&mut rng).expect("non-empty").clone();
            let base = s.with_label(0, class.clone()).map_err(err)?;
            let z0 = evaluate(&base, alg, &act).map_err(err)?;
            let scale = untwisted_scale(s, alg).map_err(err)?;
            let variants: Vec<LabeledSurface> =
                (0..100).map(|_| random_labels_with_class(&mut rng, s, &class)).collect();
            let r = cfg.map(&variants, |v| evaluate(v, alg, &act).map(|z| relative_difference(z, z0, scale)));
            let r: Vec<f64> = r.into_iter().collect::<Result<_, _>>().map_err(err)?;
            checks.push(Check::new(format!("{name}, {sname}: 100 redistributions of class {class}"), max(r), tol));

            // a chain of single shifts between neighbours
            let mut cur = randomly_labeled(&mut rng, s);
            let zc = evaluate(&cur, alg, &act).map_err(err)?;
            let mut worst = 0f64;
            for _ in 0..20 {
                let from = rng.random_range(0..cur.num_triangles());
                let to = cur.partner(crate::surface::Slot::new(from, rng.random_range(0..3))).triangle;
                if to == from {
                    continue;
                }
                cur = cur.homotopy_shift(from, to).map_err(err)?;
                worst = worst.max(relative_difference(evaluate(&cur, alg, &act).map_err(err)?, zc, scale));
            }
            checks.push(Check::new(format!("{name}, {sname}: 20 successive shifts"), worst, tol));
        }
    }
    Ok(checks)
}

// 4. the action is by central algebra automorphisms compatible with the form
fn g_frobenius_axioms(cfg: &AcceptanceConfig) -> Outcome {
    let tol = cfg.tol(1e-10);
    let mut rng = cfg.rng(4, 0);
    let groups = [
        FiniteAbelianGroup::cyclic(2),
        FiniteAbelianGroup::cyclic(4),
        FiniteAbelianGroup::new(&[2, 3]).map_err(err)?,
    ];
    let mut checks = Vec::new();
    for (name, block) in fixture_algebras(&mut rng) {
        checks.push(Check::new(format!("{name}: frobenius compatibility"), block.algebra.residuals().frobenius, tol));
        for g in &groups {
            let mut worst = [("", 0f64); 5];
            for _ in 0..3 {
                let ex = random_exponents(&mut rng, g, block.block_sizes.len());
                let act = block.root_of_unity_action(g, &ex).map_err(err)?;
                let r = act.residuals(&block.algebra).map_err(err)?;
                for (w, (n, x)) in worst.iter_mut().zip(r.named()) {
                    *w = (n, w.1.max(x));
                }
            }
            for (n, w) in worst {
                checks.push(Check::new(format!("{name}, {g}: {n}"), w, tol));
            }
        }
    }
    Ok(checks)
}

// 5. snake identities and flip coherence
fn duality(cfg: &AcceptanceConfig) -> Outcome {
    let tol = cfg.tol(1e-10);
    let mut rng = cfg.rng(5, 0);
    let trivial = GAction::trivial();
    let mut checks = Vec::new();
    for (name, block) in fixture_algebras(&mut rng) {
        let mut values = GeneratorValues::new(&block.algebra, &trivial);
        if cfg.mutation == Some(Mutation::NegateEta) {
            values.eta = -values.eta.clone();
        }
        for (rel, r) in relation_residuals(&values).map_err(err)? {
            if matches!(rel, "triangle_plus" | "triangle_minus" | "flip_unflip" | "unflip_flip") {
                checks.push(Check::new(format!("{name}: {rel}"), r, tol));
            }
        }
    }
    Ok(checks)
}

fn groups_up_to_12() -> Vec<FiniteAbelianGroup> {
    let mut out: Vec<FiniteAbelianGroup> = (1..=12).map(FiniteAbelianGroup::cyclic).collect();
    for o in [&[2, 2][..], &[2, 4], &[2, 6], &[3, 3], &[2, 2, 2], &[2, 2, 3]] {
        out.push(FiniteAbelianGroup::new(o).expect("positive orders"));
    }
    out
}

// 6. twist(g) ; twist(h) = twist(g + h)
fn gluing_theorem(cfg: &AcceptanceConfig) -> Outcome {
    let tol = cfg.tol(1e-10);
    let groups = groups_up_to_12();
    let r = cfg.map(&groups, |g| -> Result<Vec<Check>, String> {
        let mut rng = cfg.rng(6, g.order());
        let mut out = Vec::new();
        for block in [BlockAlgebra::new(&[2, 1, 1]), random_block_algebra(&mut rng, 6)] {
            let ex = random_exponents(&mut rng, g, block.block_sizes.len());
            let act = block.root_of_unity_action(g, &ex).map_err(err)?;
            let values = GeneratorValues::new(&block.algebra, &act);
            let r = relation_residuals(&values).map_err(err)?;
            let comp = r.iter().find(|(n, _)| *n == "twist_composition").expect("always reported").1;
            out.push(Check::new(format!("{g} on {:?}", block.block_sizes), comp, tol));
        }
        Ok(out)
    });
    Ok(r.into_iter().collect::<Result<Vec<_>, _>>()?.concat())
}

// 7. closed genus words against triangulated surfaces
fn functor_agreement(cfg: &AcceptanceConfig) -> Outcome {
    let tol = cfg.tol(1e-8);
    let mut rng = cfg.rng(7, 0);
    let z4 = FiniteAbelianGroup::cyclic(4);
    let k = ground_field();
    let c2 = cyclic_group_algebra(2);
    let m2 = matrix_algebra(2);
    let setups: Vec<(&str, &Algebra, Vec<Scalar>)> = vec![
        ("ground field, phi = i", &k, vec![i()]),
        ("C[Z/2], phi = i s", &c2, vec![Scalar::new(0.0, 0.0), i()]),
        ("M_2, phi = i I", &m2, m2.unit().iter().map(|x| x * i()).collect()),
    ];
    let mut checks = Vec::new();
    for (name, alg, image) in setups {
        let act = GAction::new(z4.clone(), vec![image], alg).map_err(err)?;
        let mut worst = 0f64;
        for h in 0..3i64 {
            let base = genus_surface(z4.clone(), h as usize);
            let scale = untwisted_scale(&base, alg).map_err(err)?;
            for g in z4.enumerate() {
                let zw = evaluate_word(&closed_genus_word(h, &g).map_err(err)?, alg, &act).map_err(err)?[(0, 0)];
                for s in [base.with_label(0, g.clone()).map_err(err)?, random_labels_with_class(&mut rng, &base, &g)] {
                    let zs = evaluate(&s, alg, &act).map_err(err)?;
                    worst = worst.max(relative_difference(zw, zs, scale));
                }
            }
        }
        checks.push(Check::new(format!("{name}: genus 0, 1, 2 over all of Z/4"), worst, tol));
    }

    // Z = i^k on the twisted torus, by both pipelines
    let act = GAction::new(z4.clone(), vec![vec![i()]], &k).map_err(err)?;
    let mut worst = 0f64;
    let mut power = ONE;
    for g in z4.enumerate() {
        let s = torus(z4.clone()).with_label(1, g).map_err(err)?;
        for z in [evaluate(&s, &k, &act).map_err(err)?, evaluate_bruteforce(&s, &k, &act).map_err(err)?] {
            worst = worst.max(relative_difference(z, power, 1.0));
        }
        power *= i();
    }
    checks.push(Check::new("twisted torus over the ground field is i^k", worst, tol));

    // the torus counts the center of M_2 + C
    let a = BlockAlgebra::new(&[2, 1]).algebra;
    let t = GAction::trivial();
    let two = Scalar::new(2.0, 0.0);
    let trivial = FiniteAbelianGroup::trivial();
    let zs = [
        evaluate(&torus(trivial.clone()), &a, &t).map_err(err)?,
        evaluate_bruteforce(&torus(trivial.clone()), &a, &t).map_err(err)?,
        evaluate_word(&closed_genus_word(1, &trivial.identity()).map_err(err)?, &a, &t).map_err(err)?[(0, 0)],
    ];
    checks.push(Check::new("torus over M_2 + C is 2", max(zs.map(|z| relative_difference(z, two, 1.0))), tol));
    Ok(checks)
}

fn algebra_inputs(alg: &Algebra, group: Option<&FiniteAbelianGroup>, images: Option<&str>) -> AlgebraInputs {
    AlgebraInputs {
        algebra: Input::new("algebra", io::algebra_to_json(alg)),
        group: group.map(|g| Input::new("group", io::group_to_json(g))),
        action: images.map(|t| Input::new("action", t.to_string())),
        tolerance: None,
    }
}

// 8. exactly the semisimple algebras with good actions are accepted
fn classification(cfg: &AcceptanceConfig) -> Outcome {
    let _ = cfg;
    let z2 = FiniteAbelianGroup::cyclic(2);
    let z3 = FiniteAbelianGroup::cyclic(3);
    let z4 = FiniteAbelianGroup::cyclic(4);
    let m2 = matrix_algebra(2);
    let accepted: Vec<(&str, AlgebraInputs)> = vec![
        ("ground field", algebra_inputs(&ground_field(), None, None)),
        ("C[Z/2]", algebra_inputs(&cyclic_group_algebra(2), None, None)),
        ("C[Z/3] with Z/3 acting by s", algebra_inputs(&cyclic_group_algebra(3), Some(&z3), Some(r#"{"images":[[[0,0],[1,0],[0,0]]]}"#))),
        ("M_2 with Z/2 acting by -I", algebra_inputs(&m2, Some(&z2), Some(r#"{"images":[[[-1,0],[0,0],[0,0],[-1,0]]]}"#))),
        ("M_2 + C", algebra_inputs(&BlockAlgebra::new(&[2, 1]).algebra, None, None)),
        ("ground field with Z/4 acting by i", algebra_inputs(&ground_field(), Some(&z4), Some(r#"{"images":[[[0,1]]]}"#))),
    ];
    let dual = r#"{"dim":2,"unit":[[1,0],[0,0]],"structure":[[0,0,0,1,0],[0,1,1,1,0],[1,0,1,1,0]]}"#;
    let rejected: Vec<(&str, AlgebraInputs, &str)> = vec![
        (
            "dual numbers",
            AlgebraInputs { algebra: Input::new("algebra", dual), group: None, action: None, tolerance: None },
            "SingularMetric",
        ),
        ("M_2 with Z/2 acting by the swap matrix", algebra_inputs(&m2, Some(&z2), Some(r#"{"images":[[[0,0],[1,0],[1,0],[0,0]]]}"#)), "NotCentral"),
        ("M_2 with Z/2 acting by 0", algebra_inputs(&m2, Some(&z2), Some(r#"{"images":[[[0,0],[0,0],[0,0],[0,0]]]}"#)), "NotInvertible"),
        ("ground field with Z/3 acting by i", algebra_inputs(&ground_field(), Some(&z3), Some(r#"{"images":[[[0,1]]]}"#)), "OrderViolation"),
    ];
    let mut checks = Vec::new();
    for (name, inputs) in &accepted {
        let ok = commands::check_algebra(inputs).map(|r| r.pass).unwrap_or(false);
        checks.push(Check::holds(format!("accepts {name}"), ok));
    }
    for (name, inputs, want) in &rejected {
        let got = match commands::check_algebra(inputs) {
            Ok(_) => "accepted".to_string(),
            Err(f) => f.error,
        };
        checks.push(Check::holds(format!("rejects {name} with {want} (got {got})"), got == *want));
    }
    Ok(checks)
}
