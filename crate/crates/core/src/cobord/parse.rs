//! Recursive-descent parser.
//!
//! ```text
//! expr   := term (";" term)*
//! term   := factor ("*" factor)*
//! factor := generator | "(" expr ")"
//! ```
//!
//! Both `;` and `*` associate to the left. Positions in errors are byte
//! offsets. `−` (U+2212) is accepted for `-`.

use super::{CobordError, Generator, Orientation, Word};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(i64),
    Sym(char),
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, CobordError> {
    let mut out = Vec::new();
    let mut it = src.char_indices().peekable();
    while let Some(&(pos, ch)) = it.peek() {
        if ch.is_whitespace() {
            it.next();
        } else if ch.is_ascii_alphabetic() || ch == '_' {
            let mut s = String::new();
            while let Some(&(_, c)) = it.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    s.push(c);
                    it.next();
                } else {
                    break;
                }
            }
            out.push((pos, Tok::Ident(s)));
        } else if ch.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&(_, c)) = it.peek() {
                if c.is_ascii_digit() {
                    s.push(c);
                    it.next();
                } else {
                    break;
                }
            }
            let n = s.parse().map_err(|_| CobordError::SyntaxError {
                pos,
                message: format!("integer `{s}` out of range"),
            })?;
            out.push((pos, Tok::Int(n)));
        } else if "();*[],+-".contains(ch) {
            out.push((pos, Tok::Sym(ch)));
            it.next();
        } else if ch == '−' {
            out.push((pos, Tok::Sym('-')));
            it.next();
        } else {
            return Err(CobordError::SyntaxError { pos, message: format!("unexpected character `{ch}`") });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |t| t.0)
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.1)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, CobordError> {
        Err(CobordError::SyntaxError { pos: self.pos(), message: message.into() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), CobordError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.error(format!("expected `{c}`"))
        }
    }

    fn expr(&mut self) -> Result<Word, CobordError> {
        let mut w = self.term()?;
        while self.eat(';') {
            w = w.compose(self.term()?);
        }
        Ok(w)
    }

    fn term(&mut self) -> Result<Word, CobordError> {
        let mut w = self.factor()?;
        while self.eat('*') {
            w = w.tensor(self.factor()?);
        }
        Ok(w)
    }

    fn factor(&mut self) -> Result<Word, CobordError> {
        if self.eat('(') {
            let w = self.expr()?;
            self.expect(')')?;
            return Ok(w);
        }
        let pos = self.pos();
        let name = match self.peek() {
            Some(Tok::Ident(s)) => s.clone(),
            _ => return self.error("expected a generator or `(`"),
        };
        self.at += 1;
        let g = match name.as_str() {
            "pants" => Generator::Pants,
            "copants" => Generator::Copants,
            "unit" => Generator::Unit,
            "counit" => Generator::Counit,
            "form" => Generator::Form,
            "coform" => Generator::Coform,
            "eta" => Generator::Eta,
            "eps" => Generator::Eps,
            "flip" => Generator::Flip,
            "unflip" => Generator::Unflip,
            "swap" => {
                self.expect('(')?;
                let a = self.orientation()?;
                self.expect(',')?;
                let b = self.orientation()?;
                self.expect(')')?;
                Generator::Swap(a, b)
            }
            "id" => {
                self.expect('(')?;
                let a = self.orientation()?;
                self.expect(')')?;
                Generator::Id(a)
            }
            "twist" => {
                self.expect('(')?;
                self.expect('[')?;
                let mut r = Vec::new();
                if !self.eat(']') {
                    loop {
                        r.push(self.int()?);
                        if self.eat(']') {
                            break;
                        }
                        self.expect(',')?;
                    }
                }
                self.expect(')')?;
                Generator::Twist(r)
            }
            _ => return Err(CobordError::UnknownGenerator { name, pos }),
        };
        Ok(Word::Gen(g))
    }

    fn orientation(&mut self) -> Result<Orientation, CobordError> {
        if self.eat('+') {
            Ok(Orientation::Plus)
        } else if self.eat('-') {
            Ok(Orientation::Minus)
        } else {
            self.error("expected `+` or `-`")
        }
    }

    fn int(&mut self) -> Result<i64, CobordError> {
        let neg = self.eat('-');
        match self.peek() {
            Some(&Tok::Int(n)) => {
                self.at += 1;
                Ok(if neg { -n } else { n })
            }
            _ => self.error("expected an integer"),
        }
    }
}

pub fn parse(src: &str) -> Result<Word, CobordError> {
    let mut p = Parser { toks: lex(src)?, at: 0, end: src.len() };
    let w = p.expr()?;
    if p.at != p.toks.len() {
        return p.error("unexpected trailing input");
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use Orientation::{Minus, Plus};

    fn g(x: Generator) -> Word {
        Word::Gen(x)
    }

    #[test]
    fn precedence_and_associativity() {
        let w = parse("unit ; copants ; pants ; counit").unwrap();
        let want = g(Generator::Unit)
            .compose(g(Generator::Copants))
            .compose(g(Generator::Pants))
            .compose(g(Generator::Counit));
        assert_eq!(w, want);
        let w = parse("pants * unit ; pants").unwrap();
        assert_eq!(w, g(Generator::Pants).tensor(g(Generator::Unit)).compose(g(Generator::Pants)));
        let w = parse("copants ; (id(+) * twist([2]))").unwrap();
        assert_eq!(
            w,
            g(Generator::Copants).compose(g(Generator::Id(Plus)).tensor(g(Generator::Twist(vec![2]))))
        );
    }

    #[test]
    fn arguments() {
        assert_eq!(parse("swap(+,−)").unwrap(), g(Generator::Swap(Plus, Minus)));
        assert_eq!(parse("twist([1, -2,0])").unwrap(), g(Generator::Twist(vec![1, -2, 0])));
        assert_eq!(parse("twist([])").unwrap(), g(Generator::Twist(vec![])));
        assert_eq!(parse("id(-)").unwrap(), g(Generator::Id(Minus)));
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            parse("unit ; cup"),
            Err(CobordError::UnknownGenerator { name: "cup".into(), pos: 7 })
        );
        assert!(matches!(parse("unit ;"), Err(CobordError::SyntaxError { pos: 6, .. })));
        assert!(matches!(parse("(unit"), Err(CobordError::SyntaxError { pos: 5, .. })));
        assert!(matches!(parse("swap(+)"), Err(CobordError::SyntaxError { pos: 6, .. })));
        assert!(matches!(parse("unit counit"), Err(CobordError::SyntaxError { pos: 5, .. })));
        assert!(matches!(parse("unit & counit"), Err(CobordError::SyntaxError { pos: 5, .. })));
        assert!(matches!(parse(""), Err(CobordError::SyntaxError { pos: 0, .. })));
    }

    fn orientation() -> impl Strategy<Value = Orientation> {
        prop_oneof![Just(Plus), Just(Minus)]
    }

    fn generator() -> impl Strategy<Value = Generator> {
        prop_oneof![
            Just(Generator::Pants),
            Just(Generator::Copants),
            Just(Generator::Unit),
            Just(Generator::Counit),
            Just(Generator::Form),
            Just(Generator::Coform),
            Just(Generator::Eta),
            Just(Generator::Eps),
            Just(Generator::Flip),
            Just(Generator::Unflip),
            (orientation(), orientation()).prop_map(|(a, b)| Generator::Swap(a, b)),
            orientation().prop_map(Generator::Id),
            prop::collection::vec(-20i64..20, 0..3).prop_map(Generator::Twist),
        ]
    }

    fn word() -> impl Strategy<Value = Word> {
        generator().prop_map(Word::Gen).prop_recursive(5, 40, 2, |inner| {
            prop_oneof![
                (inner.clone(), inner.clone()).prop_map(|(a, b)| a.compose(b)),
                (inner.clone(), inner).prop_map(|(a, b)| a.tensor(b)),
            ]
        })
    }

    proptest! {
        #[test]
        fn display_round_trips(w in word()) {
            prop_assert_eq!(parse(&w.to_string()).unwrap(), w);
        }
    }
}
