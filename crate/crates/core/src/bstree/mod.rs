//! Queries on the Bass-Serre tree of an amalgam `G1 *_H G2`.
//!
//! A vertex is a coset `x G_i`, stored as a representative and a side. The
//! edges join `x G1` and `x G2` for every `x`, and the stabilizer of `x G_i`
//! is `x G_i x^-1`.

mod ball;

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::amalgam::{Amalgam, Elem, FactorOracle, Letter, Side};
use crate::error::{Error, Result};

pub use ball::{canonical_key, Ball};

/// The vertex `rep * G_side`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TreeVertex<X> {
    pub rep: X,
    pub side: Side,
}

pub type Vertex<F1, F2> = TreeVertex<Elem<F1, F2>>;

/// How an element meets the tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FixedPointClass<X> {
    /// Hyperbolic: translates an axis.
    NoFixedVertex,
    /// Fixes exactly this vertex.
    UniqueVertex(TreeVertex<X>),
    /// Fixes an edge, hence both its ends.
    FixesEdgePair,
}

/// The window `g^k v0 (|k| <= window)` of the axis of a hyperbolic `g`,
/// together with every axis vertex between the extreme anchors.
#[derive(Clone, Debug)]
pub struct Axis<X> {
    pub translation_length: usize,
    pub anchors: Vec<TreeVertex<X>>,
    pub path: Vec<TreeVertex<X>>,
}

/// `N_G1(H0) *_H N_G2(H0)` for a finite `H0 <= H`.
#[derive(Clone, Debug)]
pub struct NormalizerAmalgam<A, B> {
    pub left: Vec<A>,
    pub right: Vec<B>,
    /// Number of factor elements checked against the hypothesis.
    pub checks: usize,
    /// `N_G1(H0) = G1`.
    pub left_is_whole: bool,
    /// `N_G2(H0) = G2`.
    pub right_is_whole: bool,
    /// `N_G1(H0) = H`, so the amalgam collapses to the other factor.
    pub left_is_edge: bool,
    pub right_is_edge: bool,
}

impl<A: Ord, B: Ord> NormalizerAmalgam<A, B> {
    /// Membership of a reduced word: every letter must lie in the
    /// normalizer on its side (the head always does).
    pub fn contains<H>(&self, x: &crate::amalgam::AmalgamElement<A, B, H>) -> bool {
        x.letters().iter().all(|l| match l {
            Letter::Left(r) => self.left.binary_search(r).is_ok(),
            Letter::Right(r) => self.right.binary_search(r).is_ok(),
        })
    }
}

/// Read-only view of the tree of one amalgam.
pub struct Tree<'a, F1, F2> {
    am: &'a Amalgam<F1, F2>,
}

impl<'a, F1, F2> Tree<'a, F1, F2>
where
    F1: FactorOracle,
    F2: FactorOracle<Edge = F1::Edge>,
{
    pub fn new(am: &'a Amalgam<F1, F2>) -> Self {
        Tree { am }
    }

    pub fn amalgam(&self) -> &'a Amalgam<F1, F2> {
        self.am
    }

    /// The vertex `G_side` of the fundamental edge.
    pub fn base(&self, side: Side) -> Vertex<F1, F2> {
        TreeVertex {
            rep: self.am.identity(),
            side,
        }
    }

    pub fn vertex(&self, rep: Elem<F1, F2>, side: Side) -> Vertex<F1, F2> {
        TreeVertex { rep, side }
    }

    /// `g P`.
    pub fn act(&self, g: &Elem<F1, F2>, v: &Vertex<F1, F2>) -> Vertex<F1, F2> {
        TreeVertex {
            rep: self.am.multiply(g, &v.rep),
            side: v.side,
        }
    }

    pub fn vertex_eq(&self, p: &Vertex<F1, F2>, q: &Vertex<F1, F2>) -> bool {
        p.side == q.side
            && self
                .am
                .in_factor(&self.am.multiply(&self.am.inverse(&p.rep), &q.rep), p.side)
    }

    /// Whether `x` fixes `v`, i.e. `rep^-1 x rep` lies in `G_side`.
    pub fn fixes(&self, x: &Elem<F1, F2>, v: &Vertex<F1, F2>) -> bool {
        let inner = self
            .am
            .multiply(&self.am.multiply(&self.am.inverse(&v.rep), x), &v.rep);
        self.am.in_factor(&inner, v.side)
    }

    /// Letters of `p.rep^-1 q.rep` strictly between the parts absorbed by
    /// the two endpoint factors, with the absorbed leading part.
    fn inner_letters(
        &self,
        p: &Vertex<F1, F2>,
        q: &Vertex<F1, F2>,
    ) -> (Elem<F1, F2>, Elem<F1, F2>, usize, usize) {
        let w = self.am.multiply(&self.am.inverse(&p.rep), &q.rep);
        let letters = w.letters();
        let mut i = 0;
        let mut j = letters.len();
        if j > 0 && letters[0].side() == p.side {
            i = 1;
        }
        if j > i && letters[j - 1].side() == q.side {
            j -= 1;
        }
        let start = self.am.multiply(&p.rep, &self.am.prefix(&w, i));
        (w, start, i, j)
    }

    pub fn distance(&self, p: &Vertex<F1, F2>, q: &Vertex<F1, F2>) -> usize {
        let (_, _, i, j) = self.inner_letters(p, q);
        let m = j - i;
        if m == 0 {
            usize::from(p.side != q.side)
        } else {
            m + 1
        }
    }

    /// The geodesic from `p` to `q`, both ends included.
    pub fn path(&self, p: &Vertex<F1, F2>, q: &Vertex<F1, F2>) -> Vec<Vertex<F1, F2>> {
        let (w, start, i, j) = self.inner_letters(p, q);
        if i == j {
            return if p.side == q.side {
                alloc::vec![p.clone()]
            } else {
                alloc::vec![p.clone(), q.clone()]
            };
        }
        let mut out = alloc::vec![TreeVertex {
            rep: start.clone(),
            side: p.side
        }];
        let mut x = start;
        for letter in &w.letters()[i..j] {
            x = self.am.multiply(&x, &self.am.embed_letter(letter));
            out.push(TreeVertex {
                rep: x.clone(),
                side: letter.side(),
            });
        }
        out.push(q.clone());
        out
    }

    /// The vertex list from `G2` to `g^-1 G2` read off the reduced
    /// decomposition `g = h r1 ... rn`: a leading `G2` letter fixes `G2` and
    /// is dropped, then the vertices are `G2`, (`G1` when `rn` is in `G1`),
    /// and `rn^-1 ... rj^-1 G_i` for `j = n, ..., 1`, with `G_i` the factor
    /// not containing `rj`.
    pub fn geodesic(&self, g: &Elem<F1, F2>) -> Vec<Vertex<F1, F2>> {
        let mut letters = g.letters();
        if matches!(letters.first(), Some(Letter::Right(_))) {
            letters = &letters[1..];
        }
        let mut out = alloc::vec![self.base(Side::Right)];
        if matches!(letters.last(), Some(Letter::Left(_))) {
            out.push(self.base(Side::Left));
        }
        let mut x = self.am.identity();
        for letter in letters.iter().rev() {
            x = self
                .am
                .multiply(&x, &self.am.inverse(&self.am.embed_letter(letter)));
            out.push(TreeVertex {
                rep: x.clone(),
                side: letter.side().other(),
            });
        }
        out
    }

    /// Length of the cyclically reduced core, or 0 when the core lies in a
    /// factor.
    pub fn translation_length(&self, g: &Elem<F1, F2>) -> usize {
        let (_, core) = self.am.cyclic_reduce(g);
        if core.is_cyclically_reduced() {
            core.len()
        } else {
            0
        }
    }

    /// For hyperbolic `g = k core k^-1` the axis passes through `k G2`.
    pub fn axis(&self, g: &Elem<F1, F2>, window: usize) -> Result<Axis<Elem<F1, F2>>> {
        let (k, core) = self.am.cyclic_reduce(g);
        if !core.is_cyclically_reduced() {
            return Err(Error::HypothesisFails(format!(
                "{:?} fixes a vertex and has no axis",
                g
            )));
        }
        let v0 = TreeVertex {
            rep: k,
            side: Side::Right,
        };
        let w = window as i64;
        let anchors: Vec<_> = (-w..=w)
            .map(|j| self.act(&self.am.pow(g, j), &v0))
            .collect();
        let path = self.path(&anchors[0], &anchors[anchors.len() - 1]);
        Ok(Axis {
            translation_length: core.len(),
            anchors,
            path,
        })
    }

    /// Distance from `q` to the nearest vertex of a finite axis segment.
    pub fn distance_to_path(&self, q: &Vertex<F1, F2>, path: &[Vertex<F1, F2>]) -> usize {
        path.iter()
            .map(|v| self.distance(q, v))
            .min()
            .unwrap_or(usize::MAX)
    }

    /// Classifies the fixed points of `g`. Elliptic elements are conjugated
    /// into a factor and asked whether they are conjugate into `H` there.
    pub fn fixed_point_class(&self, g: &Elem<F1, F2>) -> Result<FixedPointClass<Elem<F1, F2>>> {
        let (k, core) = self.am.cyclic_reduce(g);
        if core.is_cyclically_reduced() {
            return Ok(FixedPointClass::NoFixedVertex);
        }
        if core.is_empty() {
            return Ok(FixedPointClass::FixesEdgePair);
        }
        let (side, into_edge) = match core.first_side().expect("length-1 core") {
            Side::Left => (
                Side::Left,
                self.am
                    .left()
                    .conjugate_into_edge(&self.am.to_left(&core).expect("left")),
            ),
            Side::Right => (
                Side::Right,
                self.am
                    .right()
                    .conjugate_into_edge(&self.am.to_right(&core).expect("right")),
            ),
        };
        match into_edge {
            Some(true) => Ok(FixedPointClass::FixesEdgePair),
            Some(false) => Ok(FixedPointClass::UniqueVertex(TreeVertex { rep: k, side })),
            None => Err(Error::Undecidable(format!(
                "conjugacy into the edge group inside factor {}",
                side.index()
            ))),
        }
    }

    /// Checks that `x H0 x^-1` inside `H` forces `x H0 x^-1 = H0` for all
    /// `x` in both factors, and returns the two normalizers.
    pub fn normalizer_amalgam(
        &self,
        h0: &[F1::Edge],
    ) -> Result<NormalizerAmalgam<F1::Elem, F2::Elem>> {
        let left_els = self
            .am
            .left()
            .elements()
            .ok_or(Error::NotEnumerable("first factor"))?;
        let right_els = self
            .am
            .right()
            .elements()
            .ok_or(Error::NotEnumerable("second factor"))?;
        let target: BTreeSet<F1::Edge> = h0.iter().cloned().collect();
        let mut left = Vec::new();
        for x in left_els {
            let f = self.am.left();
            let image = conjugate_set(f, x, h0);
            match image {
                Some(set) if set == target => left.push(x.clone()),
                Some(_) => {
                    return Err(Error::HypothesisFails(format!(
                        "{:?} in the first factor",
                        x
                    )))
                }
                None => {}
            }
        }
        let mut right = Vec::new();
        for x in right_els {
            let f = self.am.right();
            match conjugate_set(f, x, h0) {
                Some(set) if set == target => right.push(x.clone()),
                Some(_) => {
                    return Err(Error::HypothesisFails(format!(
                        "{:?} in the second factor",
                        x
                    )))
                }
                None => {}
            }
        }
        left.sort();
        right.sort();
        let edge_len = self.am.left().edge_elements().map(<[_]>::len);
        Ok(NormalizerAmalgam {
            checks: left_els.len() + right_els.len(),
            left_is_whole: left.len() == left_els.len(),
            right_is_whole: right.len() == right_els.len(),
            left_is_edge: Some(left.len()) == edge_len,
            right_is_edge: Some(right.len()) == edge_len,
            left,
            right,
        })
    }
}

/// `x H0 x^-1` as edge elements, or `None` when it leaves `H`.
fn conjugate_set<F: FactorOracle>(f: &F, x: &F::Elem, h0: &[F::Edge]) -> Option<BTreeSet<F::Edge>> {
    let x_inv = f.inv(x);
    let mut out = BTreeSet::new();
    for h in h0 {
        let c = f.mul(&f.mul(x, &f.embed_edge(h)), &x_inv);
        if !f.edge_contains(&c) {
            return None;
        }
        out.insert(f.edge_split(&c).0);
    }
    Some(out)
}

#[cfg(test)]
mod tests;
