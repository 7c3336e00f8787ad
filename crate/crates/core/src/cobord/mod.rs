//! Words in the generators of the labeled cobordism category, their types,
//! and their values under the functor determined by a G-Frobenius algebra.
//!
//! `;` composes in diagrammatic order and `*` is the disjoint union. A `+`
//! circle is sent to `A`, a `−` circle to its dual, and a word `w : s → t` to a
//! `d^|t| × d^|s|` matrix whose row and column indices list strand 0 most
//! significant.
//!
//! ```
//! use hqft::cobord::{evaluate_word, parse, typecheck};
//! use hqft::frobenius::{fixtures, GAction};
//!
//! let w = parse("unit ; counit").unwrap();
//! let (dom, cod) = typecheck(&w).unwrap();
//! assert!(dom.is_empty() && cod.is_empty());
//! // g(u, u) is the dimension of C[Z/2]
//! let m = evaluate_word(&w, &fixtures::cyclic_group_algebra(2), &GAction::trivial()).unwrap();
//! assert!((m[(0, 0)].re - 2.0).abs() < 1e-12);
//! ```

mod eval;
mod parse;

pub use eval::{adjoint_copants, evaluate_word, relation_residuals, GeneratorValues};
pub use parse::parse;

use std::fmt;

use thiserror::Error;

use crate::frobenius::AlgebraError;
use crate::group::{GroupElement, GroupError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CobordError {
    #[error("syntax error at {pos}: {message}")]
    SyntaxError { pos: usize, message: String },
    #[error("unknown generator `{name}` at {pos}")]
    UnknownGenerator { name: String, pos: usize },
    #[error("type mismatch in `{subterm}`: {left} then {right}")]
    TypeMismatch { subterm: String, left: Signature, right: Signature },
    #[error("genus must be non-negative, got {0}")]
    NegativeGenus(i64),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Plus,
    Minus,
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::Plus => "+",
            Orientation::Minus => "-",
        })
    }
}

/// A disjoint union of oriented circles.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Signature(pub Vec<Orientation>);

impl Signature {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn of(s: &[Orientation]) -> Self {
        Self(s.to_vec())
    }

    fn concat(&self, other: &Self) -> Self {
        Self(self.0.iter().chain(&other.0).copied().collect())
    }
}

impl fmt::Display for Signature {
    /// `+-` style; the empty signature prints as `∅`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("∅");
        }
        self.0.iter().try_for_each(|o| write!(f, "{o}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generator {
    Pants,
    Copants,
    Unit,
    Counit,
    Form,
    Coform,
    Eta,
    Eps,
    Swap(Orientation, Orientation),
    Flip,
    Unflip,
    /// Residues of the class, not yet reduced into a group.
    Twist(Vec<i64>),
    Id(Orientation),
}

impl Generator {
    pub fn signature(&self) -> (Signature, Signature) {
        use Orientation::{Minus as M, Plus as P};
        let (d, c): (&[Orientation], &[Orientation]) = match self {
            Generator::Pants => (&[P, P], &[P]),
            Generator::Copants => (&[P], &[P, P]),
            Generator::Unit => (&[], &[P]),
            Generator::Counit => (&[P], &[]),
            Generator::Form => (&[P, P], &[]),
            Generator::Coform => (&[], &[P, P]),
            Generator::Eta => (&[], &[P, M]),
            Generator::Eps => (&[M, P], &[]),
            Generator::Swap(a, b) => return (Signature(vec![*a, *b]), Signature(vec![*b, *a])),
            Generator::Flip => (&[P], &[M]),
            Generator::Unflip => (&[M], &[P]),
            Generator::Twist(_) => (&[P], &[P]),
            Generator::Id(a) => return (Signature(vec![*a]), Signature(vec![*a])),
        };
        (Signature::of(d), Signature::of(c))
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Pants => f.write_str("pants"),
            Generator::Copants => f.write_str("copants"),
            Generator::Unit => f.write_str("unit"),
            Generator::Counit => f.write_str("counit"),
            Generator::Form => f.write_str("form"),
            Generator::Coform => f.write_str("coform"),
            Generator::Eta => f.write_str("eta"),
            Generator::Eps => f.write_str("eps"),
            Generator::Swap(a, b) => write!(f, "swap({a},{b})"),
            Generator::Flip => f.write_str("flip"),
            Generator::Unflip => f.write_str("unflip"),
            Generator::Twist(r) => {
                let r: Vec<String> = r.iter().map(i64::to_string).collect();
                write!(f, "twist([{}])", r.join(","))
            }
            Generator::Id(a) => write!(f, "id({a})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Word {
    Gen(Generator),
    /// `f ; g`: first `f`, then `g`.
    Compose(Box<Word>, Box<Word>),
    Tensor(Box<Word>, Box<Word>),
}

impl Word {
    pub fn compose(self, next: Word) -> Word {
        Word::Compose(Box::new(self), Box::new(next))
    }

    pub fn tensor(self, other: Word) -> Word {
        Word::Tensor(Box::new(self), Box::new(other))
    }
}

impl From<Generator> for Word {
    fn from(g: Generator) -> Self {
        Word::Gen(g)
    }
}

impl fmt::Display for Word {
    /// Prints with the fewest parentheses that re-parse to the same tree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Word::Gen(g) => write!(f, "{g}"),
            Word::Compose(a, b) => {
                write!(f, "{a} ; ")?;
                match **b {
                    Word::Compose(..) => write!(f, "({b})"),
                    _ => write!(f, "{b}"),
                }
            }
            Word::Tensor(a, b) => {
                match **a {
                    Word::Compose(..) => write!(f, "({a})")?,
                    _ => write!(f, "{a}")?,
                }
                f.write_str(" * ")?;
                match **b {
                    Word::Gen(_) => write!(f, "{b}"),
                    _ => write!(f, "({b})"),
                }
            }
        }
    }
}

/// Domain and codomain of a word.
pub fn typecheck(word: &Word) -> Result<(Signature, Signature), CobordError> {
    match word {
        Word::Gen(g) => Ok(g.signature()),
        Word::Compose(a, b) => {
            let (da, ca) = typecheck(a)?;
            let (db, cb) = typecheck(b)?;
            if ca != db {
                return Err(CobordError::TypeMismatch { subterm: word.to_string(), left: ca, right: db });
            }
            Ok((da, cb))
        }
        Word::Tensor(a, b) => {
            let (da, ca) = typecheck(a)?;
            let (db, cb) = typecheck(b)?;
            Ok((da.concat(&db), ca.concat(&cb)))
        }
    }
}

/// `unit ; (copants ; pants)^h ; twist(g) ; counit`, the closed genus-`h`
/// surface carrying class `g`.
pub fn closed_genus_word(h: i64, g: &GroupElement) -> Result<Word, CobordError> {
    if h < 0 {
        return Err(CobordError::NegativeGenus(h));
    }
    let mut w = Word::Gen(Generator::Unit);
    for _ in 0..h {
        w = w.compose(Generator::Copants.into()).compose(Generator::Pants.into());
    }
    let r = g.residues().iter().map(|&x| x as i64).collect();
    Ok(w.compose(Generator::Twist(r).into()).compose(Generator::Counit.into()))
}

/// Snake on a `+` strand: `(eta * id(+)) ; (id(+) * eps)`.
pub fn triangle_word_plus() -> Word {
    use Orientation::Plus;
    Word::from(Generator::Eta)
        .tensor(Generator::Id(Plus).into())
        .compose(Word::from(Generator::Id(Plus)).tensor(Generator::Eps.into()))
}

/// Snake on a `−` strand: `(id(-) * eta) ; (eps * id(-))`.
pub fn triangle_word_minus() -> Word {
    use Orientation::Minus;
    Word::from(Generator::Id(Minus))
        .tensor(Generator::Eta.into())
        .compose(Word::from(Generator::Eps).tensor(Generator::Id(Minus).into()))
}
