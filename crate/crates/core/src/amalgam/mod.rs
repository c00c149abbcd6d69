//! Amalgamated free products `G1 *_H G2` over pluggable factor oracles.
//!
//! Every element is kept in its reduced decomposition `h r1 r2 ... rn` with
//! `h` in the edge group and the `ri` nonidentity canonical right-coset
//! representatives from strictly alternating factors.

mod conjugacy;
mod finite;

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

pub use finite::FiniteFactor;

/// Which factor of the amalgam; `Left` is `G1`, `Right` is `G2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }

    /// 1 for the first factor, 2 for the second.
    pub fn index(self) -> u8 {
        match self {
            Side::Left => 1,
            Side::Right => 2,
        }
    }
}

/// Finite or infinite element order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Order {
    Finite(u64),
    Infinite,
}

/// What a group must provide to serve as a factor of an amalgam.
///
/// `Edge` is the carrier of the shared edge group `H`; both factors of one
/// amalgam use the same carrier and `embed_edge` realises the identification.
/// `edge_split(g)` returns `(h, r)` with `g = h * r`, `h` in `H` and `r` the
/// canonical representative of the right coset `H g`.
pub trait FactorOracle {
    type Elem: Clone + Ord + fmt::Debug;
    type Edge: Clone + Ord + fmt::Debug;

    fn identity(&self) -> Self::Elem;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn inv(&self, x: &Self::Elem) -> Self::Elem;
    fn embed_edge(&self, h: &Self::Edge) -> Self::Elem;
    fn edge_split(&self, g: &Self::Elem) -> (Self::Edge, Self::Elem);

    fn is_identity(&self, g: &Self::Elem) -> bool {
        *g == self.identity()
    }

    fn edge_identity(&self) -> Self::Edge {
        self.edge_split(&self.identity()).0
    }

    fn edge_contains(&self, g: &Self::Elem) -> bool {
        self.is_identity(&self.edge_split(g).1)
    }

    /// The edge group, when finite.
    fn edge_elements(&self) -> Option<&[Self::Edge]> {
        None
    }

    /// All elements, when the factor is finite.
    fn elements(&self) -> Option<&[Self::Elem]> {
        None
    }

    /// Representatives of the left cosets `gH`, identity first, when finite.
    fn left_transversal(&self) -> Option<&[Self::Elem]> {
        None
    }

    fn order_of(&self, g: &Self::Elem) -> Order;

    /// Whether `g` is conjugate inside this factor to an element of `H`;
    /// `None` when this factor cannot decide it.
    fn conjugate_into_edge(&self, g: &Self::Elem) -> Option<bool> {
        let els = self.elements()?;
        Some(els.iter().any(|x| {
            let c = self.mul(&self.mul(x, g), &self.inv(x));
            self.edge_contains(&c)
        }))
    }
}

/// A letter of a reduced word: a coset representative from one factor.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter<A, B> {
    Left(A),
    Right(B),
}

impl<A, B> Letter<A, B> {
    pub fn side(&self) -> Side {
        match self {
            Letter::Left(_) => Side::Left,
            Letter::Right(_) => Side::Right,
        }
    }
}

/// Reduced decomposition `head * letters[0] * ... * letters[n-1]`.
///
/// The derived ordering compares the head first, then the letter sequence,
/// and is the canonical order used for coset sections.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AmalgamElement<A, B, H> {
    head: H,
    letters: Vec<Letter<A, B>>,
}

impl<A, B, H> AmalgamElement<A, B, H> {
    pub fn head(&self) -> &H {
        &self.head
    }

    pub fn letters(&self) -> &[Letter<A, B>] {
        &self.letters
    }

    /// The length `l(g)`.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `l(g) >= 2` with first and last letters from different factors.
    pub fn is_cyclically_reduced(&self) -> bool {
        self.len() >= 2 && self.len().is_multiple_of(2)
    }

    pub fn first_side(&self) -> Option<Side> {
        self.letters.first().map(Letter::side)
    }

    pub fn last_side(&self) -> Option<Side> {
        self.letters.last().map(Letter::side)
    }
}

pub type Elem<F1, F2> = AmalgamElement<
    <F1 as FactorOracle>::Elem,
    <F2 as FactorOracle>::Elem,
    <F1 as FactorOracle>::Edge,
>;

/// The amalgam `left *_H right`.
#[derive(Clone, Debug)]
pub struct Amalgam<F1, F2> {
    left: F1,
    right: F2,
}

impl<F1, F2> Amalgam<F1, F2>
where
    F1: FactorOracle,
    F2: FactorOracle<Edge = F1::Edge>,
{
    /// Wires two factors together; the edge identification is checked
    /// exhaustively when the edge group is enumerable.
    pub fn new(left: F1, right: F2) -> Result<Self> {
        let amalgam = Amalgam { left, right };
        amalgam.check_edge_consistency()?;
        Ok(amalgam)
    }

    pub fn left(&self) -> &F1 {
        &self.left
    }

    pub fn right(&self) -> &F2 {
        &self.right
    }

    /// Both embeddings of `H` multiply alike and round-trip through the
    /// splits. Exhaustive over `H x H` when `H` is finite.
    pub fn check_edge_consistency(&self) -> Result<()> {
        let Some(edge) = self.left.edge_elements() else {
            return Ok(());
        };
        for h in edge {
            let (hl, rl) = self.left.edge_split(&self.left.embed_edge(h));
            let (hr, rr) = self.right.edge_split(&self.right.embed_edge(h));
            if hl != *h || !self.left.is_identity(&rl) || hr != *h || !self.right.is_identity(&rr) {
                return Err(Error::EdgeInconsistent(alloc::format!(
                    "{:?} does not round-trip through both embeddings",
                    h
                )));
            }
        }
        for h1 in edge {
            for h2 in edge {
                let l = self
                    .left
                    .edge_split(
                        &self
                            .left
                            .mul(&self.left.embed_edge(h1), &self.left.embed_edge(h2)),
                    )
                    .0;
                let r = self
                    .right
                    .edge_split(
                        &self
                            .right
                            .mul(&self.right.embed_edge(h1), &self.right.embed_edge(h2)),
                    )
                    .0;
                if l != r {
                    return Err(Error::EdgeInconsistent(alloc::format!(
                        "products of {:?} and {:?} differ: {:?} vs {:?}",
                        h1,
                        h2,
                        l,
                        r
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn identity(&self) -> Elem<F1, F2> {
        AmalgamElement {
            head: self.left.edge_identity(),
            letters: Vec::new(),
        }
    }

    pub fn is_identity(&self, x: &Elem<F1, F2>) -> bool {
        x.letters.is_empty() && x.head == self.left.edge_identity()
    }

    /// An element of the edge group as a word of length 0.
    pub fn from_edge(&self, h: F1::Edge) -> Elem<F1, F2> {
        AmalgamElement {
            head: h,
            letters: Vec::new(),
        }
    }

    pub fn embed_left(&self, g: &F1::Elem) -> Elem<F1, F2> {
        let (head, r) = self.left.edge_split(g);
        let letters = if self.left.is_identity(&r) {
            Vec::new()
        } else {
            alloc::vec![Letter::Left(r)]
        };
        AmalgamElement { head, letters }
    }

    pub fn embed_right(&self, g: &F2::Elem) -> Elem<F1, F2> {
        let (head, r) = self.right.edge_split(g);
        let letters = if self.right.is_identity(&r) {
            Vec::new()
        } else {
            alloc::vec![Letter::Right(r)]
        };
        AmalgamElement { head, letters }
    }

    pub fn embed_letter(&self, letter: &Letter<F1::Elem, F2::Elem>) -> Elem<F1, F2> {
        match letter {
            Letter::Left(g) => self.embed_left(g),
            Letter::Right(g) => self.embed_right(g),
        }
    }

    /// Left-multiplies the word `head * rev[last] * ... * rev[0]` by a factor
    /// element, keeping it reduced. `rev` holds the letters back to front.
    fn absorb(
        &self,
        head: &mut F1::Edge,
        rev: &mut Vec<Letter<F1::Elem, F2::Elem>>,
        g: &Letter<F1::Elem, F2::Elem>,
    ) {
        match g {
            Letter::Left(x) => {
                let mut t = self.left.mul(x, &self.left.embed_edge(head));
                if matches!(rev.last(), Some(Letter::Left(_))) {
                    if let Some(Letter::Left(r)) = rev.pop() {
                        t = self.left.mul(&t, &r);
                    }
                }
                let (h, r) = self.left.edge_split(&t);
                if !self.left.is_identity(&r) {
                    rev.push(Letter::Left(r));
                }
                *head = h;
            }
            Letter::Right(x) => {
                let mut t = self.right.mul(x, &self.right.embed_edge(head));
                if matches!(rev.last(), Some(Letter::Right(_))) {
                    if let Some(Letter::Right(r)) = rev.pop() {
                        t = self.right.mul(&t, &r);
                    }
                }
                let (h, r) = self.right.edge_split(&t);
                if !self.right.is_identity(&r) {
                    rev.push(Letter::Right(r));
                }
                *head = h;
            }
        }
    }

    fn edge_mul(&self, h1: &F1::Edge, h2: &F1::Edge) -> F1::Edge {
        let t = self
            .left
            .mul(&self.left.embed_edge(h1), &self.left.embed_edge(h2));
        self.left.edge_split(&t).0
    }

    fn edge_inv(&self, h: &F1::Edge) -> F1::Edge {
        self.left
            .edge_split(&self.left.inv(&self.left.embed_edge(h)))
            .0
    }

    /// The reduced decomposition of `x * y`.
    pub fn multiply(&self, x: &Elem<F1, F2>, y: &Elem<F1, F2>) -> Elem<F1, F2> {
        let mut head = y.head.clone();
        let mut rev: Vec<_> = y.letters.iter().rev().cloned().collect();
        for letter in x.letters.iter().rev() {
            self.absorb(&mut head, &mut rev, letter);
        }
        head = self.edge_mul(&x.head, &head);
        rev.reverse();
        AmalgamElement { head, letters: rev }
    }

    /// Product of an arbitrary sequence of factor elements, folded from the
    /// right. Letters need not be coset representatives.
    pub fn product_of_letters<'a, I>(&self, letters: I) -> Elem<F1, F2>
    where
        I: IntoIterator<Item = &'a Letter<F1::Elem, F2::Elem>>,
        I::IntoIter: DoubleEndedIterator,
        F1::Elem: 'a,
        F2::Elem: 'a,
    {
        let mut head = self.left.edge_identity();
        let mut rev = Vec::new();
        for letter in letters.into_iter().rev() {
            self.absorb(&mut head, &mut rev, letter);
        }
        rev.reverse();
        AmalgamElement { head, letters: rev }
    }

    pub fn inverse(&self, x: &Elem<F1, F2>) -> Elem<F1, F2> {
        let mut head = self.edge_inv(&x.head);
        let mut rev = Vec::with_capacity(x.len());
        for letter in &x.letters {
            let inv = match letter {
                Letter::Left(r) => Letter::Left(self.left.inv(r)),
                Letter::Right(r) => Letter::Right(self.right.inv(r)),
            };
            self.absorb(&mut head, &mut rev, &inv);
        }
        rev.reverse();
        AmalgamElement { head, letters: rev }
    }

    pub fn pow(&self, x: &Elem<F1, F2>, exp: i64) -> Elem<F1, F2> {
        let mut base = if exp < 0 { self.inverse(x) } else { x.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = self.identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.multiply(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.multiply(&base, &base);
            }
        }
        acc
    }

    /// `g * x * g^-1`.
    pub fn conjugate(&self, g: &Elem<F1, F2>, x: &Elem<F1, F2>) -> Elem<F1, F2> {
        self.multiply(&self.multiply(g, x), &self.inverse(g))
    }

    pub fn length(&self, x: &Elem<F1, F2>) -> usize {
        x.len()
    }

    pub fn equals(&self, x: &Elem<F1, F2>, y: &Elem<F1, F2>) -> bool {
        x == y
    }

    /// Whether `x` lies in the given factor.
    pub fn in_factor(&self, x: &Elem<F1, F2>, side: Side) -> bool {
        match x.letters.as_slice() {
            [] => true,
            [only] => only.side() == side,
            _ => false,
        }
    }

    /// Membership in the edge group.
    pub fn in_edge(&self, x: &Elem<F1, F2>) -> bool {
        x.letters.is_empty()
    }

    /// `x` as an element of the first factor, when it lies there.
    pub fn to_left(&self, x: &Elem<F1, F2>) -> Option<F1::Elem> {
        let h = self.left.embed_edge(&x.head);
        match x.letters.as_slice() {
            [] => Some(h),
            [Letter::Left(r)] => Some(self.left.mul(&h, r)),
            _ => None,
        }
    }

    /// `x` as an element of the second factor, when it lies there.
    pub fn to_right(&self, x: &Elem<F1, F2>) -> Option<F2::Elem> {
        let h = self.right.embed_edge(&x.head);
        match x.letters.as_slice() {
            [] => Some(h),
            [Letter::Right(r)] => Some(self.right.mul(&h, r)),
            _ => None,
        }
    }

    /// The prefix `head * r1 * ... * rk` of a reduced word.
    pub fn prefix(&self, x: &Elem<F1, F2>, k: usize) -> Elem<F1, F2> {
        AmalgamElement {
            head: x.head.clone(),
            letters: x.letters[..k].to_vec(),
        }
    }

    /// Assembles a reduced word from parts, checking alternation and that
    /// every letter is a nonidentity canonical representative.
    pub fn from_parts(
        &self,
        head: F1::Edge,
        letters: Vec<Letter<F1::Elem, F2::Elem>>,
    ) -> Option<Elem<F1, F2>> {
        let alternates = letters.windows(2).all(|w| w[0].side() != w[1].side());
        let canonical = letters.iter().all(|l| match l {
            Letter::Left(r) => {
                let (h, r2) = self.left.edge_split(r);
                !self.left.is_identity(r) && r2 == *r && h == self.left.edge_identity()
            }
            Letter::Right(r) => {
                let (h, r2) = self.right.edge_split(r);
                !self.right.is_identity(r) && r2 == *r && h == self.right.edge_identity()
            }
        });
        (alternates && canonical).then_some(AmalgamElement { head, letters })
    }
}
