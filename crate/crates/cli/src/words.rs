//! Word expressions such as `c*b`, `a*a^-1`, `E(1/3)*E(2/3)*b` or
//! `G1[(1,2,3)]*G2[(2,4)]`.
//!
//! ```text
//! expr   := term ('*' term)*
//! term   := atom ('^' integer)?
//! atom   := 'a' | 'b' | 'c' | 'e' | 'id' | cycles | 'E(' m ['/' n] ')'
//!         | 'G1[' cycles ']' | 'G2[' cycles ']' | '[' expr ']'
//! ```
//!
//! Bare cycles are elements of `S`; `G1[..]` and `G2[..]` name factor
//! elements of a toy amalgam.

use loctower::amalgam::{Amalgam, Elem, FactorOracle, Side};
use loctower::construction::{KElem, LElem, Tower};
use loctower::permgroup::{FiniteGroup, Permutation};
use loctower::toy::{ToyAmalgam, ToyElem};
use num_bigint::BigInt;

use crate::cycles::parse_cycles;
use crate::error::{CliError, CliResult};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Atom {
    Name(String),
    E { num: BigInt, den: BigInt },
    Cycles(String),
    Factor { side: Side, cycles: String },
    Group(Expr),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub atom: Atom,
    pub exp: i64,
    /// Byte offset of the atom in the source.
    pub pos: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expr(pub Vec<Term>);

fn error_at(pos: usize, msg: impl Into<String>) -> CliError {
    CliError(format!("parse error at column {}: {}", pos + 1, msg.into()))
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        while self.rest().starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn expect(&mut self, c: char) -> CliResult<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(error_at(self.pos, format!("expected '{}'", c)))
        }
    }

    fn expr(&mut self) -> CliResult<Expr> {
        let mut terms = vec![self.term()?];
        while self.peek() == Some('*') {
            self.pos += 1;
            terms.push(self.term()?);
        }
        Ok(Expr(terms))
    }

    fn integer(&mut self) -> CliResult<BigInt> {
        self.skip_ws();
        let start = self.pos;
        if self.rest().starts_with('-') {
            self.pos += 1;
        }
        while self.rest().starts_with(|c: char| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| error_at(start, "expected an integer"))
    }

    fn term(&mut self) -> CliResult<Term> {
        self.skip_ws();
        let pos = self.pos;
        let atom = self.atom()?;
        let mut exp = 1;
        if self.peek() == Some('^') {
            self.pos += 1;
            let at = self.pos;
            let e = self.integer()?;
            exp = i64::try_from(e).map_err(|_| error_at(at, "exponent out of range"))?;
        }
        Ok(Term { atom, exp, pos })
    }

    fn cycles(&mut self) -> CliResult<String> {
        self.skip_ws();
        let start = self.pos;
        while self.peek() == Some('(') {
            match self.rest().find(')') {
                Some(end) => self.pos += end + 1,
                None => return Err(error_at(self.pos, "unclosed cycle")),
            }
        }
        if self.pos == start {
            return Err(error_at(start, "expected cycle notation"));
        }
        let text = &self.src[start..self.pos];
        if !crate::cycles::is_cycle_text(text) {
            return Err(error_at(start, "cycles hold comma-separated points"));
        }
        Ok(text.to_string())
    }

    fn atom(&mut self) -> CliResult<Atom> {
        let pos = self.pos;
        match self.peek() {
            Some('(') => Ok(Atom::Cycles(self.cycles()?)),
            Some('[') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(']')?;
                Ok(Atom::Group(e))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let len = self
                    .rest()
                    .find(|c: char| !c.is_ascii_alphanumeric())
                    .unwrap_or(self.rest().len());
                let name = self.rest()[..len].to_string();
                self.pos += len;
                match name.as_str() {
                    "E" => {
                        self.expect('(')?;
                        let num = self.integer()?;
                        let mut den = BigInt::from(1);
                        if self.peek() == Some('/') {
                            self.pos += 1;
                            den = self.integer()?;
                        }
                        self.expect(')')?;
                        Ok(Atom::E { num, den })
                    }
                    "G1" | "G2" => {
                        self.expect('[')?;
                        let cycles = self.cycles()?;
                        self.expect(']')?;
                        let side = if name == "G1" {
                            Side::Left
                        } else {
                            Side::Right
                        };
                        Ok(Atom::Factor { side, cycles })
                    }
                    "a" | "b" | "c" | "e" | "id" => Ok(Atom::Name(name)),
                    _ => Err(error_at(pos, format!("unknown name {:?}", name))),
                }
            }
            Some(c) => Err(error_at(pos, format!("unexpected {:?}", c))),
            None => Err(error_at(pos, "unexpected end of input")),
        }
    }
}

pub fn parse(src: &str) -> CliResult<Expr> {
    let mut p = Parser { src, pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(error_at(p.pos, "trailing input"));
    }
    Ok(e)
}

type AtomFn<'a, X> = dyn Fn(&Atom, usize) -> CliResult<X> + 'a;

fn fold<F1, F2>(
    am: &Amalgam<F1, F2>,
    expr: &Expr,
    atom: &AtomFn<'_, Elem<F1, F2>>,
) -> CliResult<Elem<F1, F2>>
where
    F1: FactorOracle,
    F2: FactorOracle<Edge = F1::Edge>,
{
    let mut acc = am.identity();
    for t in &expr.0 {
        let x = match &t.atom {
            Atom::Group(inner) => fold(am, inner, atom)?,
            other => atom(other, t.pos)?,
        };
        acc = am.multiply(&acc, &am.pow(&x, t.exp));
    }
    Ok(acc)
}

fn s_element(t: &Tower, cycles: &str, pos: usize) -> CliResult<Permutation> {
    let s = t.s();
    let x = parse_cycles(cycles, s.degree()).map_err(|e| error_at(pos, e.0))?;
    if !s.contains(&x) {
        return Err(error_at(pos, format!("{} is not in S", x)));
    }
    Ok(x)
}

fn k_atom(t: &Tower, atom: &Atom, pos: usize) -> CliResult<KElem> {
    match atom {
        Atom::Name(n) => Ok(match n.as_str() {
            "a" => t.k_from_s(t.a()),
            "b" => t.k_b(),
            "c" => t.k_c(),
            _ => t.k().identity(),
        }),
        Atom::Cycles(c) => Ok(t.k_from_s(&s_element(t, c, pos)?)),
        Atom::E { .. } => Err(error_at(pos, "E letters are not allowed at level K")),
        Atom::Factor { .. } => Err(error_at(pos, "G1[..] and G2[..] name toy factors")),
        Atom::Group(_) => unreachable!("groups are folded"),
    }
}

pub fn eval_k(t: &Tower, expr: &Expr) -> CliResult<KElem> {
    fold(t.k(), expr, &|a, pos| k_atom(t, a, pos))
}

pub fn eval_l(t: &Tower, expr: &Expr) -> CliResult<LElem> {
    fold(t.l(), expr, &|a, pos| match a {
        Atom::E { num, den } => {
            let x = t
                .ring()
                .element(num.clone(), den.clone())
                .map_err(|e| error_at(pos, e.to_string()))?;
            Ok(t.l_from_e(&x))
        }
        other => Ok(t.l_from_k(&k_atom(t, other, pos)?)),
    })
}

pub fn eval_toy(am: &ToyAmalgam, expr: &Expr) -> CliResult<ToyElem> {
    fold(am, expr, &|a, pos| match a {
        Atom::Name(n) if n == "e" || n == "id" => Ok(am.identity()),
        Atom::Factor { side, cycles } => {
            let g = match side {
                Side::Left => am.left().group(),
                Side::Right => am.right().group(),
            };
            let x = parse_cycles(cycles, g.degree()).map_err(|e| error_at(pos, e.0))?;
            if !g.contains(&x) {
                return Err(error_at(pos, format!("{} is not in G{}", x, side.index())));
            }
            Ok(match side {
                Side::Left => am.embed_left(&x),
                Side::Right => am.embed_right(&x),
            })
        }
        _ => Err(error_at(pos, "toy words use G1[..], G2[..] and e")),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_grammar() {
        let e = parse("c*b").unwrap();
        assert_eq!(e.0.len(), 2);
        let e = parse(" a * a^-1 ").unwrap();
        assert_eq!(e.0[1].exp, -1);
        let e = parse("E(1/3)*E(-2/3)^2").unwrap();
        assert_eq!(
            e.0[1].atom,
            Atom::E {
                num: BigInt::from(-2),
                den: BigInt::from(3)
            }
        );
        let e = parse("[c*(1,2,3)(4,5)]^3*G2[(2,4)]").unwrap();
        assert!(matches!(e.0[0].atom, Atom::Group(_)));
        assert!(matches!(
            e.0[1].atom,
            Atom::Factor {
                side: Side::Right,
                ..
            }
        ));
    }

    #[test]
    fn errors_carry_columns() {
        let err = parse("c*x").unwrap_err();
        assert!(err.0.contains("column 3"), "{}", err);
        let err = parse("c*").unwrap_err();
        assert!(err.0.contains("column 3"), "{}", err);
        assert!(parse("c b").is_err());
        assert!(parse("E(1/").is_err());
        assert!(parse("(1,2").is_err());
        assert!(parse("a^x").is_err());
    }

    #[test]
    fn toy_words_evaluate() {
        let am = loctower::toy::s3_d4();
        let x = eval_toy(&am, &parse("G1[(1,2,3)]*G2[(1,2,3,4)]").unwrap()).unwrap();
        assert_eq!(x.len(), 2);
        let y = eval_toy(
            &am,
            &parse("[G1[(1,2,3)]*G2[(1,2,3,4)]]^-1*G1[(1,2,3)]*G2[(1,2,3,4)]").unwrap(),
        )
        .unwrap();
        assert!(am.is_identity(&y));
        assert!(eval_toy(&am, &parse("G1[(1,4)]").unwrap()).is_err());
        assert!(eval_toy(&am, &parse("c").unwrap()).is_err());
    }
}
