//! The operations behind each CLI subcommand, on in-memory inputs.
//!
//! Each command returns a finished [`RunReport`] or a [`Failure`] carrying
//! the exit code. Inputs are passed as text so that reports can record the
//! digest of exactly what was read.

use serde::Serialize;

use crate::cobord::{self, Signature};
use crate::frobenius::{Algebra, GAction};
use crate::group::{FiniteAbelianGroup, GroupElement};
use crate::io;
use crate::linalg::{Matrix, Scalar};
use crate::report::{error_name, Check, ExitCode, RunReport};
use crate::statesum::{self, relative_difference, untwisted_scale};
use crate::surface::{builders, LabeledSurface};

/// A named input file's contents.
#[derive(Debug, Clone)]
pub struct Input {
    pub name: String,
    pub text: String,
}

impl Input {
    pub fn new(name: impl Into<String>, text: impl Into<String>) -> Self {
        Self { name: name.into(), text: text.into() }
    }

    pub fn digest(&self) -> String {
        io::digest(self.text.as_bytes())
    }
}

/// Algebra with optional group and action files. A group without an action
/// acts by the unit.
#[derive(Debug, Clone)]
pub struct AlgebraInputs {
    pub algebra: Input,
    pub group: Option<Input>,
    pub action: Option<Input>,
    pub tolerance: Option<f64>,
}

/// Why a command stopped, with its exit code.
#[derive(Debug, Clone, Serialize)]
pub struct Failure {
    pub command: String,
    pub error: String,
    pub message: String,
    #[serde(skip)]
    pub code: i32,
}

impl Failure {
    fn new<E: ExitCode + std::fmt::Debug + std::fmt::Display>(command: &str, e: E) -> Self {
        Self { command: command.into(), error: error_name(&e), message: e.to_string(), code: e.exit_code() }
    }

    fn usage(command: &str, message: impl Into<String>) -> Self {
        Self { command: command.into(), error: "Usage".into(), message: message.into(), code: crate::report::EXIT_INPUT }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data")
    }
}

struct Loaded {
    alg: Algebra,
    group: FiniteAbelianGroup,
    action: GAction,
}

fn load(cmd: &str, inputs: &AlgebraInputs, report: &mut RunReport) -> Result<Loaded, Failure> {
    let fail = |e: io::IoError| Failure::new(cmd, e);
    report.input(&inputs.algebra.name, inputs.algebra.digest());
    let alg = io::parse_algebra(&inputs.algebra.text, inputs.tolerance).map_err(fail)?;
    let group = match &inputs.group {
        Some(g) => {
            report.input(&g.name, g.digest());
            io::parse_group(&g.text).map_err(fail)?
        }
        None => FiniteAbelianGroup::trivial(),
    };
    let action = match &inputs.action {
        Some(a) => {
            report.input(&a.name, a.digest());
            io::parse_action(&a.text, &group, &alg).map_err(fail)?
        }
        None => GAction::unit_on(group.clone(), &alg),
    };
    Ok(Loaded { alg, group, action })
}

fn pair(z: Scalar) -> [f64; 2] {
    [z.re, z.im]
}

fn matrix_rows(m: &Matrix) -> Vec<Vec<[f64; 2]>> {
    (0..m.nrows()).map(|r| (0..m.ncols()).map(|c| pair(m[(r, c)])).collect()).collect()
}

fn signature(s: &Signature) -> String {
    if s.is_empty() {
        String::new()
    } else {
        s.to_string()
    }
}

fn classes(s: &LabeledSurface) -> Vec<Vec<u64>> {
    s.total_class().iter().map(|g| g.residues().to_vec()).collect()
}

/// Validates an algebra and optional action and reports every residual.
pub fn check_algebra(inputs: &AlgebraInputs) -> Result<RunReport, Failure> {
    const CMD: &str = "check-algebra";
    let mut report = RunReport::new(CMD);
    let l = load(CMD, inputs, &mut report)?;
    let tol = l.alg.tolerance();
    report.output("dim", l.alg.dim());
    report.output("center_dim", l.alg.center_basis().len());
    report.output("metric", matrix_rows(l.alg.metric()));
    report.output("metric_singular_values", crate::linalg::singular_values(l.alg.metric()));
    report.output("group", l.group.to_string());
    for (name, r) in l.alg.residuals().named() {
        report.check(Check::new(name, r, tol));
    }
    let ar = l.action.residuals(&l.alg).map_err(|e| Failure::new(CMD, e))?;
    for (name, r) in ar.named() {
        report.check(Check::new(name, r, tol));
    }
    Ok(report.finish())
}

/// `Z` of a surface file, optionally cross-checked by the coloring oracle.
pub fn statesum(surface: &Input, inputs: &AlgebraInputs, oracle: bool) -> Result<RunReport, Failure> {
    const CMD: &str = "statesum";
    let mut report = RunReport::new(CMD);
    let l = load(CMD, inputs, &mut report)?;
    report.input(&surface.name, surface.digest());
    let s = io::parse_surface(&surface.text, &l.group).map_err(|e| Failure::new(CMD, e))?;
    let ev = statesum::evaluate_with_plan(&s, &l.alg, &l.action, statesum::DEFAULT_ENTRY_CAP)
        .map_err(|e| Failure::new(CMD, e))?;
    report.output("Z", pair(ev.z));
    report.output("chi", s.euler_characteristic());
    report.output("genus", s.genus().ok());
    report.output("total_class", classes(&s));
    report.output("plan_cost", u64::try_from(ev.plan_cost).unwrap_or(u64::MAX));
    report.output("max_open_rank", ev.plan.max_open_rank);
    if oracle {
        let b = statesum::evaluate_bruteforce(&s, &l.alg, &l.action).map_err(|e| Failure::new(CMD, e))?;
        let diff = (ev.z - b).norm();
        report.output("Z_oracle", pair(b));
        report.output("oracle_difference", diff);
        report.check(Check::new("oracle agreement", diff / (1.0 + b.norm()), l.alg.tolerance()));
    }
    Ok(report.finish())
}

/// Both pipelines on one surface: planned contraction and coloring sum.
pub fn oracle(surface: &Input, inputs: &AlgebraInputs) -> Result<RunReport, Failure> {
    let mut r = statesum(surface, inputs, true)?;
    r.command = "oracle".into();
    Ok(r)
}

/// A parsed move specification: `1-3:T`, `3-1:T:C`, `2-2:Q` or
/// `shift:FROM:TO`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MoveSpec {
    OneThree(usize),
    ThreeOne(usize, usize),
    TwoTwo(usize),
    Shift(usize, usize),
}

impl std::str::FromStr for MoveSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        let num = |i: usize| -> Result<usize, String> {
            parts.get(i).ok_or(format!("move `{s}` needs more arguments"))?.parse().map_err(|_| format!("bad index in move `{s}`"))
        };
        let (spec, arity) = match parts[0] {
            "1-3" => (MoveSpec::OneThree(num(1)?), 2),
            "3-1" => (MoveSpec::ThreeOne(num(1)?, num(2)?), 3),
            "2-2" => (MoveSpec::TwoTwo(num(1)?), 2),
            "shift" => (MoveSpec::Shift(num(1)?, num(2)?), 3),
            other => return Err(format!("unknown move `{other}`; expected 1-3, 3-1, 2-2 or shift")),
        };
        if parts.len() != arity {
            return Err(format!("move `{s}` has too many arguments"));
        }
        Ok(spec)
    }
}

impl MoveSpec {
    pub fn apply(self, s: &LabeledSurface) -> Result<LabeledSurface, crate::surface::SurfaceError> {
        match self {
            MoveSpec::OneThree(t) => s.pachner_13(t),
            MoveSpec::ThreeOne(t, c) => s.pachner_31(t, c),
            MoveSpec::TwoTwo(q) => s.pachner_22(q),
            MoveSpec::Shift(a, b) => s.homotopy_shift(a, b),
        }
    }
}

/// Applies a move; returns the report and the new surface file.
pub fn apply_move(
    surface: &Input,
    group: Option<&Input>,
    spec: &str,
) -> Result<(RunReport, String), Failure> {
    const CMD: &str = "move";
    let mut report = RunReport::new(CMD);
    let g = match group {
        Some(g) => {
            report.input(&g.name, g.digest());
            io::parse_group(&g.text).map_err(|e| Failure::new(CMD, e))?
        }
        None => FiniteAbelianGroup::trivial(),
    };
    report.input(&surface.name, surface.digest());
    let s = io::parse_surface(&surface.text, &g).map_err(|e| Failure::new(CMD, e))?;
    let m: MoveSpec = spec.parse().map_err(|e: String| Failure::usage(CMD, e))?;
    let out = m.apply(&s).map_err(|e| Failure::new(CMD, e))?;
    report.output("move", spec);
    report.output("triangles_before", s.num_triangles());
    report.output("triangles_after", out.num_triangles());
    report.output("chi_before", s.euler_characteristic());
    report.output("chi_after", out.euler_characteristic());
    report.output("total_class_before", classes(&s));
    report.output("total_class_after", classes(&out));
    report.check(Check::holds("euler characteristic preserved", s.euler_characteristic() == out.euler_characteristic()));
    report.check(Check::holds("total class preserved", s.total_class() == out.total_class()));
    Ok((report.finish(), io::surface_to_json(&out)))
}

/// Parses, typechecks and evaluates a cobordism word.
pub fn cobord(expr: &str, inputs: &AlgebraInputs) -> Result<RunReport, Failure> {
    const CMD: &str = "cobord";
    let mut report = RunReport::new(CMD);
    let l = load(CMD, inputs, &mut report)?;
    let fail = |e| Failure::new(CMD, e);
    let w = cobord::parse(expr).map_err(fail)?;
    let (dom, cod) = cobord::typecheck(&w).map_err(fail)?;
    let m = cobord::evaluate_word(&w, &l.alg, &l.action).map_err(fail)?;
    report.output("expression", w.to_string());
    report.output("domain", signature(&dom));
    report.output("codomain", signature(&cod));
    report.output("matrix", matrix_rows(&m));
    Ok(report.finish())
}

/// Builds the genus-`h` surface with class `class` and the closed genus
/// word, evaluates both, and compares.
pub fn genus(h: i64, class: &[i64], inputs: &AlgebraInputs) -> Result<RunReport, Failure> {
    const CMD: &str = "genus";
    let mut report = RunReport::new(CMD);
    let l = load(CMD, inputs, &mut report)?;
    let g: GroupElement = l.group.element(class).map_err(|e| Failure::new(CMD, e))?;
    let w = cobord::closed_genus_word(h, &g).map_err(|e| Failure::new(CMD, e))?;
    let s = builders::genus_surface(l.group.clone(), h as usize)
        .with_label(0, g)
        .expect("class is in the group");
    let zs = statesum::evaluate(&s, &l.alg, &l.action).map_err(|e| Failure::new(CMD, e))?;
    let zw = cobord::evaluate_word(&w, &l.alg, &l.action).map_err(|e| Failure::new(CMD, e))?[(0, 0)];
    let scale = untwisted_scale(&s, &l.alg).map_err(|e| Failure::new(CMD, e))?;
    report.output("genus", h);
    report.output("triangles", s.num_triangles());
    report.output("word", w.to_string());
    report.output("Z_statesum", pair(zs));
    report.output("Z_word", pair(zw));
    report.check(Check::new("functor agrees with state sum", relative_difference(zw, zs, scale), 1e-8));
    Ok(report.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frobenius::fixtures::*;

    fn alg(a: &Algebra) -> AlgebraInputs {
        AlgebraInputs { algebra: Input::new("algebra", io::algebra_to_json(a)), group: None, action: None, tolerance: None }
    }

    #[test]
    fn move_specs() {
        assert_eq!("1-3:4".parse(), Ok(MoveSpec::OneThree(4)));
        assert_eq!("3-1:2:0".parse(), Ok(MoveSpec::ThreeOne(2, 0)));
        assert_eq!("shift:0:1".parse(), Ok(MoveSpec::Shift(0, 1)));
        assert!("2-2".parse::<MoveSpec>().is_err());
        assert!("2-2:1:1".parse::<MoveSpec>().is_err());
        assert!("4-0:1".parse::<MoveSpec>().is_err());
    }

    #[test]
    fn check_algebra_reports() {
        let r = check_algebra(&alg(&cyclic_group_algebra(2))).unwrap();
        assert!(r.pass);
        assert_eq!(r.outputs["center_dim"], 2);
        let dual = r#"{"dim":2,"unit":[[1,0],[0,0]],"structure":[[0,0,0,1,0],[0,1,1,1,0],[1,0,1,1,0]]}"#;
        let f = check_algebra(&AlgebraInputs {
            algebra: Input::new("dual", dual),
            group: None,
            action: None,
            tolerance: None,
        })
        .unwrap_err();
        assert_eq!((f.error.as_str(), f.code), ("SingularMetric", 2));
    }

    #[test]
    fn genus_and_cobord() {
        let r = genus(2, &[], &alg(&matrix_algebra(2))).unwrap();
        assert!(r.pass, "{}", r.to_json());
        let r = cobord("pants", &alg(&cyclic_group_algebra(2))).unwrap();
        assert_eq!(r.outputs["domain"], "++");
        let f = cobord("eta ; eps", &alg(&ground_field())).unwrap_err();
        assert_eq!((f.error.as_str(), f.code), ("TypeMismatch", 1));
    }

    #[test]
    fn move_on_torus_is_refused() {
        let t = Input::new("torus", io::surface_to_json(&builders::torus(FiniteAbelianGroup::trivial())));
        let f = apply_move(&t, None, "2-2:0").unwrap_err();
        assert_eq!((f.error.as_str(), f.code), ("MultiSharedEdge", 1));
        let (r, out) = apply_move(&t, None, "1-3:0").unwrap();
        assert!(r.pass);
        assert_eq!(io::parse_surface(&out, &FiniteAbelianGroup::trivial()).unwrap().num_triangles(), 4);
    }
}
