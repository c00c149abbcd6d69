//! Text and JSON renderings of normal forms.

use loctower::amalgam::{AmalgamElement, Letter};
use loctower::construction::{KElem, LElem, MElement, Tower};
use loctower::toy::ToyElem;
use serde::Serialize;

/// A normal form with every part rendered to text.
#[derive(Clone, Debug, Serialize)]
pub struct NormalForm {
    pub head: String,
    pub letters: Vec<RenderedLetter>,
    pub length: usize,
    pub cyclically_reduced: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RenderedLetter {
    pub side: u8,
    pub rep: String,
}

impl NormalForm {
    pub fn text(&self) -> String {
        let mut parts = vec![self.head.clone()];
        parts.extend(self.letters.iter().map(|l| l.rep.clone()));
        parts.join(" * ")
    }
}

fn render<A, B, H>(
    x: &AmalgamElement<A, B, H>,
    head: impl Fn(&H) -> String,
    left: impl Fn(&A) -> String,
    right: impl Fn(&B) -> String,
) -> NormalForm {
    NormalForm {
        head: head(x.head()),
        letters: x
            .letters()
            .iter()
            .map(|l| match l {
                Letter::Left(a) => RenderedLetter {
                    side: 1,
                    rep: left(a),
                },
                Letter::Right(b) => RenderedLetter {
                    side: 2,
                    rep: right(b),
                },
            })
            .collect(),
        length: x.len(),
        cyclically_reduced: x.is_cyclically_reduced(),
    }
}

/// `c^i u` with the complement element in cycle notation.
pub fn m_text(t: &Tower, x: &MElement) -> String {
    let u = t.m().q_element(x.q);
    match (x.exp, u.is_identity()) {
        (0, true) => "e".into(),
        (0, false) => u.to_string(),
        (1, true) => "c".into(),
        (1, false) => format!("c*{}", u),
        (i, true) => format!("c^{}", i),
        (i, false) => format!("c^{}*{}", i, u),
    }
}

pub fn k_form(t: &Tower, x: &KElem) -> NormalForm {
    render(
        x,
        |h| format!("N{}", paren(h.to_string())),
        |m| format!("M({})", m_text(t, m)),
        |s| format!("S{}", paren(s.to_string())),
    )
}

pub fn l_form(t: &Tower, x: &LElem) -> NormalForm {
    render(
        x,
        |n| format!("Z({})", n),
        |e| format!("E({})", e),
        |k| format!("K[{}]", k_form(t, k).text()),
    )
}

pub fn toy_form(x: &ToyElem) -> NormalForm {
    render(
        x,
        |h| format!("H{}", paren(h.to_string())),
        |a| format!("G1{}", paren(a.to_string())),
        |b| format!("G2{}", paren(b.to_string())),
    )
}

/// Wraps cycle notation other than `()` in one more pair of parentheses,
/// so `N((1,2))` and `N()` read as applications.
fn paren(cycles: String) -> String {
    if cycles == "()" {
        cycles
    } else {
        format!("({})", cycles)
    }
}
