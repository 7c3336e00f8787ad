use super::{triangle_word_minus, triangle_word_plus, typecheck, CobordError, Generator, Orientation, Word};
use crate::frobenius::{Algebra, GAction};
use crate::group::GroupElement;
use crate::linalg::{max_abs_diff, Matrix, Scalar, ONE, ZERO};

fn kronecker(a: usize, b: usize) -> Scalar {
    if a == b {
        ONE
    } else {
        ZERO
    }
}

/// Matrices assigned to the generators. Fields are public so that a caller
/// can substitute a value and watch which relations break.
#[derive(Debug, Clone)]
pub struct GeneratorValues<'a> {
    alg: &'a Algebra,
    action: &'a GAction,
    pub pants: Matrix,
    pub copants: Matrix,
    pub unit: Matrix,
    pub counit: Matrix,
    pub form: Matrix,
    pub coform: Matrix,
    pub eta: Matrix,
    pub eps: Matrix,
    pub flip: Matrix,
    pub unflip: Matrix,
}

/// `Δ(e_k) = Σ g^{ii'} g^{jj'} C_{i'j'k} e_i ⊗ e_j`, the adjoint of the
/// product under the trace form.
pub fn adjoint_copants(alg: &Algebra) -> Matrix {
    let d = alg.dim();
    let gi = alg.inv_metric();
    let low = alg.lowered();
    // raise the first two indices one at a time
    let mut half = vec![ZERO; d * d * d]; // [i][j'][k]
    for i in 0..d {
        for jp in 0..d {
            for k in 0..d {
                half[(i * d + jp) * d + k] = (0..d).map(|ip| gi[(i, ip)] * low[(ip * d + jp) * d + k]).sum();
            }
        }
    }
    Matrix::from_fn(d * d, d, |row, k| {
        let (i, j) = (row / d, row % d);
        (0..d).map(|jp| gi[(j, jp)] * half[(i * d + jp) * d + k]).sum()
    })
}

/// `P(x) = Σ_{i,l} g^{il} e_i x e_l`, the projection onto the center.
pub(crate) fn center_projector(alg: &Algebra) -> Matrix {
    let d = alg.dim();
    let gi = alg.inv_metric();
    Matrix::from_fn(d, d, |n, m| {
        let mut s = ZERO;
        for i in 0..d {
            for l in 0..d {
                if gi[(i, l)] == ZERO {
                    continue;
                }
                let e: Scalar = (0..d).map(|p| alg.c(i, m, p) * alg.c(p, l, n)).sum();
                s += gi[(i, l)] * e;
            }
        }
        s
    })
}

impl<'a> GeneratorValues<'a> {
    pub fn new(alg: &'a Algebra, action: &'a GAction) -> Self {
        let d = alg.dim();
        let g = alg.metric();
        let gi = alg.inv_metric();
        let u = Matrix::from_column_slice(d, 1, alg.unit());
        let p = center_projector(alg);
        Self {
            alg,
            action,
            pants: Matrix::from_fn(d, d * d, |k, c| alg.c(c / d, c % d, k)),
            copants: p.kronecker(&p) * adjoint_copants(alg),
            counit: (g * &u).transpose(),
            unit: u,
            form: Matrix::from_fn(1, d * d, |_, c| g[(c / d, c % d)]),
            coform: Matrix::from_fn(d * d, 1, |r, _| gi[(r / d, r % d)]),
            eta: Matrix::from_fn(d * d, 1, |r, _| kronecker(r / d, r % d)),
            eps: Matrix::from_fn(1, d * d, |_, c| kronecker(c / d, c % d)),
            flip: g.transpose(),
            unflip: gi.transpose(),
        }
    }

    pub fn algebra(&self) -> &Algebra {
        self.alg
    }

    pub fn action(&self) -> &GAction {
        self.action
    }

    pub fn twist(&self, g: &GroupElement) -> Result<Matrix, CobordError> {
        let phi = self.action.image(g, self.alg)?;
        Ok(self.alg.left_mult_matrix(&phi)?)
    }

    fn generator(&self, gen: &Generator) -> Result<Matrix, CobordError> {
        let d = self.alg.dim();
        Ok(match gen {
            Generator::Pants => self.pants.clone(),
            Generator::Copants => self.copants.clone(),
            Generator::Unit => self.unit.clone(),
            Generator::Counit => self.counit.clone(),
            Generator::Form => self.form.clone(),
            Generator::Coform => self.coform.clone(),
            Generator::Eta => self.eta.clone(),
            Generator::Eps => self.eps.clone(),
            Generator::Flip => self.flip.clone(),
            Generator::Unflip => self.unflip.clone(),
            Generator::Id(_) => Matrix::identity(d, d),
            Generator::Swap(..) => Matrix::from_fn(d * d, d * d, |r, c| kronecker(r, (c % d) * d + c / d)),
            Generator::Twist(r) => self.twist(&self.action.group().element(r)?)?,
        })
    }

    /// Value of a well-typed word.
    pub fn evaluate(&self, word: &Word) -> Result<Matrix, CobordError> {
        typecheck(word)?;
        self.eval(word)
    }

    fn eval(&self, word: &Word) -> Result<Matrix, CobordError> {
        match word {
            Word::Gen(g) => self.generator(g),
            Word::Compose(a, b) => Ok(self.eval(b)? * self.eval(a)?),
            Word::Tensor(a, b) => Ok(self.eval(a)?.kronecker(&self.eval(b)?)),
        }
    }
}

pub fn evaluate_word(word: &Word, alg: &Algebra, action: &GAction) -> Result<Matrix, CobordError> {
    GeneratorValues::new(alg, action).evaluate(word)
}

fn word(src: &str) -> Word {
    super::parse(src).expect("built-in relation words parse")
}

fn residual(values: &GeneratorValues, a: &Word, b: &Word) -> Result<f64, CobordError> {
    Ok(max_abs_diff(&values.evaluate(a)?, &values.evaluate(b)?))
}

fn twist_word(g: &GroupElement) -> Word {
    Word::Gen(Generator::Twist(g.residues().iter().map(|&r| r as i64).collect()))
}

/// Largest entry-wise residual of each relation the generator values must
/// satisfy, by name, in a fixed order. G-dependent relations are maximised
/// over the whole group.
pub fn relation_residuals(values: &GeneratorValues) -> Result<Vec<(&'static str, f64)>, CobordError> {
    use Orientation::{Minus, Plus};
    let id = |o| Word::Gen(Generator::Id(o));
    let mut out = vec![
        ("triangle_plus", residual(values, &triangle_word_plus(), &id(Plus))?),
        ("triangle_minus", residual(values, &triangle_word_minus(), &id(Minus))?),
        ("flip_unflip", residual(values, &word("flip ; unflip"), &id(Plus))?),
        ("unflip_flip", residual(values, &word("unflip ; flip"), &id(Minus))?),
        (
            "pants_associativity",
            residual(values, &word("(pants * id(+)) ; pants"), &word("(id(+) * pants) ; pants"))?,
        ),
        ("unit_left", residual(values, &word("(unit * id(+)) ; pants"), &id(Plus))?),
        ("unit_right", residual(values, &word("(id(+) * unit) ; pants"), &id(Plus))?),
        ("form_compatibility", residual(values, &word("form"), &word("pants ; counit"))?),
        ("coform_form_snake", residual(values, &word("(coform * id(+)) ; (id(+) * form)"), &id(Plus))?),
    ];

    let group = values.action().group();
    let elements = group.enumerate();
    let (mut left, mut right, mut form, mut comp) = (0f64, 0f64, 0f64, 0f64);
    for g in &elements {
        let t = twist_word(g);
        let pants = word("pants");
        let lhs = pants.clone().compose(t.clone());
        left = left.max(residual(values, &lhs, &t.clone().tensor(id(Plus)).compose(pants.clone()))?);
        right = right.max(residual(values, &lhs, &id(Plus).tensor(t.clone()).compose(pants))?);
        form = form.max(residual(
            values,
            &t.clone().tensor(id(Plus)).compose(word("form")),
            &id(Plus).tensor(t.clone()).compose(word("form")),
        )?);
        for h in &elements {
            let sum = group.op(g, h)?;
            comp = comp.max(residual(values, &t.clone().compose(twist_word(h)), &twist_word(&sum))?);
        }
    }
    out.extend([
        ("twist_pants_left", left),
        ("twist_pants_right", right),
        ("twist_form", form),
        ("twist_composition", comp),
    ]);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::closed_genus_word;
    use super::*;
    use crate::frobenius::fixtures::*;
    use crate::group::FiniteAbelianGroup;

    fn scalar(m: &Matrix) -> Scalar {
        assert_eq!(m.shape(), (1, 1));
        m[(0, 0)]
    }

    #[test]
    fn small_values() {
        let a = cyclic_group_algebra(2);
        let t = GAction::trivial();
        let id = evaluate_word(&word("id(+)"), &a, &t).unwrap();
        assert_eq!(id, Matrix::identity(2, 2));
        let z = scalar(&evaluate_word(&word("unit ; counit"), &a, &t).unwrap());
        assert!((z - Scalar::new(2.0, 0.0)).norm() < 1e-14);
        // pants of C[Z/2] reshapes C_ij^k
        let p = evaluate_word(&word("pants"), &a, &t).unwrap();
        let want = [[1.0, 0.0, 0.0, 1.0], [0.0, 1.0, 1.0, 0.0]];
        for k in 0..2 {
            for c in 0..4 {
                assert_eq!(p[(k, c)], Scalar::new(want[k][c], 0.0));
            }
        }
        assert!(matches!(
            evaluate_word(&word("eta ; eps"), &a, &t),
            Err(CobordError::TypeMismatch { .. })
        ));
    }

    #[test]
    fn ground_field_genus_words() {
        let k = ground_field();
        let g = FiniteAbelianGroup::cyclic(4);
        let act = GAction::new(g.clone(), vec![vec![Scalar::new(0.0, 1.0)]], &k).unwrap();
        let triv = GAction::trivial();
        let one = closed_genus_word(1, &FiniteAbelianGroup::trivial().identity()).unwrap();
        assert!((scalar(&evaluate_word(&one, &k, &triv).unwrap()) - ONE).norm() < 1e-15);
        let w = closed_genus_word(1, &g.element(&[1]).unwrap()).unwrap();
        assert!((scalar(&evaluate_word(&w, &k, &act).unwrap()) - Scalar::new(0.0, 1.0)).norm() < 1e-15);
    }

    #[test]
    fn copants_projects_onto_the_center() {
        // M_2 ⊕ C: pants ∘ copants multiplies central elements by Σ_a 1_a / n_a²
        let b = BlockAlgebra::new(&[2, 1]);
        let t = GAction::trivial();
        let v = GeneratorValues::new(&b.algebra, &t);
        let handle = v.evaluate(&word("copants ; pants")).unwrap();
        let x = b.central(&[Scalar::new(3.0, 0.0), Scalar::new(-1.0, 2.0)]);
        let hx = &handle * Matrix::from_column_slice(x.len(), 1, &x);
        let want = b.central(&[Scalar::new(0.75, 0.0), Scalar::new(-1.0, 2.0)]);
        for (a, w) in hx.iter().zip(&want) {
            assert!((a - w).norm() < 1e-12);
        }
        // the plain adjoint gives dim A in every genus instead
        let mut plain = v.clone();
        plain.copants = adjoint_copants(&b.algebra);
        for h in 0..3 {
            let w = closed_genus_word(h, &FiniteAbelianGroup::trivial().identity()).unwrap();
            let z = scalar(&plain.evaluate(&w).unwrap());
            assert!((z - Scalar::new(5.0, 0.0)).norm() < 1e-10, "h = {h}: {z}");
        }
    }

    #[test]
    fn relations_hold_on_fixtures() {
        let g = FiniteAbelianGroup::new(&[2, 3]).unwrap();
        let b = BlockAlgebra::new(&[2, 1, 1]);
        let act = b.root_of_unity_action(&g, &[vec![1, 0, 1], vec![2, 1, 0]]).unwrap();
        let v = GeneratorValues::new(&b.algebra, &act);
        for (name, r) in relation_residuals(&v).unwrap() {
            assert!(r < 1e-10, "{name}: {r}");
        }
    }

    #[test]
    fn negated_eta_breaks_the_triangle_identities() {
        let a = matrix_algebra(2);
        let t = GAction::trivial();
        let mut v = GeneratorValues::new(&a, &t);
        v.eta = -v.eta.clone();
        let r = relation_residuals(&v).unwrap();
        let bad: Vec<&str> = r.iter().filter(|(_, x)| *x > 1e-10).map(|(n, _)| *n).collect();
        assert_eq!(bad, vec!["triangle_plus", "triangle_minus"]);
    }
}
