use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{Amalgam, Elem, FactorOracle, Letter, Order};
use crate::error::{Error, Result};

impl<F1, F2> Amalgam<F1, F2>
where
    F1: FactorOracle,
    F2: FactorOracle<Edge = F1::Edge>,
{
    /// Returns `(k, core)` with `x = k * core * k^-1`, where `core` is either
    /// cyclically reduced or lies in a factor (length at most 1).
    ///
    /// Odd words of length at least 3 begin and end in the same factor; the
    /// first letter (with the head) is moved around to the end until the
    /// length becomes even or drops to 1.
    pub fn cyclic_reduce(&self, x: &Elem<F1, F2>) -> (Elem<F1, F2>, Elem<F1, F2>) {
        let mut conj = self.identity();
        let mut core = x.clone();
        while core.len() >= 3 && core.len() % 2 == 1 {
            let p = self.prefix(&core, 1);
            core = self.multiply(&self.multiply(&self.inverse(&p), &core), &p);
            conj = self.multiply(&conj, &p);
        }
        (conj, core)
    }

    /// Order of `x`: cyclically reduced elements have infinite order, and the
    /// rest inherit the order of their factor-level core.
    pub fn order(&self, x: &Elem<F1, F2>) -> Order {
        let (_, core) = self.cyclic_reduce(x);
        if core.len() >= 2 {
            return Order::Infinite;
        }
        if let Some(g) = self.to_left(&core) {
            return self.left().order_of(&g);
        }
        let g = self
            .to_right(&core)
            .expect("length-1 core lies in a factor");
        self.right().order_of(&g)
    }

    pub fn has_finite_order(&self, x: &Elem<F1, F2>) -> bool {
        matches!(self.order(x), Order::Finite(_))
    }

    /// For cyclically reduced `x` and `y`, finds `g` with `g x g^-1 = y` by
    /// cyclically permuting the letters of `x` and conjugating by edge
    /// elements. Different lengths are never conjugate.
    pub fn conjugate_cyclic_test(
        &self,
        x: &Elem<F1, F2>,
        y: &Elem<F1, F2>,
    ) -> Result<Option<Elem<F1, F2>>> {
        if !x.is_cyclically_reduced() || !y.is_cyclically_reduced() {
            return Err(Error::NotCyclicallyReduced);
        }
        let edge = self
            .left()
            .edge_elements()
            .ok_or(Error::NotEnumerable("edge group"))?;
        if x.len() != y.len() {
            return Ok(None);
        }
        for j in 0..x.len() {
            // same-side starts only: a shift of odd parity changes the first factor
            if x.letters[j].side() != y.letters[0].side() {
                continue;
            }
            let p = self.prefix(x, j);
            let p_inv = self.inverse(&p);
            let shifted = self.multiply(&self.multiply(&p_inv, x), &p);
            for h in edge {
                let h = self.from_edge(h.clone());
                if self.conjugate(&h, &shifted) == *y {
                    return Ok(Some(self.multiply(&h, &p_inv)));
                }
            }
        }
        Ok(None)
    }

    /// General conjugacy decision: finds `g` with `g x g^-1 = y`.
    ///
    /// Cyclically reduced cores are compared with [`Self::conjugate_cyclic_test`].
    /// Factor-level cores are joined by a search through factor conjugations,
    /// passing between factors through the edge group, which needs both
    /// factors enumerable. A cyclically reduced element is never conjugate to
    /// a factor element.
    pub fn find_conjugator(
        &self,
        x: &Elem<F1, F2>,
        y: &Elem<F1, F2>,
    ) -> Result<Option<Elem<F1, F2>>> {
        let (kx, cx) = self.cyclic_reduce(x);
        let (ky, cy) = self.cyclic_reduce(y);
        let g = match (cx.is_cyclically_reduced(), cy.is_cyclically_reduced()) {
            (true, true) => self.conjugate_cyclic_test(&cx, &cy)?,
            (false, false) => self.factor_conjugator(&cx, &cy)?,
            _ => None,
        };
        // x = kx cx kx^-1, y = ky cy ky^-1, g cx g^-1 = cy
        Ok(g.map(|g| self.multiply(&self.multiply(&ky, &g), &self.inverse(&kx))))
    }

    fn factor_conjugator(
        &self,
        x: &Elem<F1, F2>,
        y: &Elem<F1, F2>,
    ) -> Result<Option<Elem<F1, F2>>> {
        let left_els = self
            .left()
            .elements()
            .ok_or(Error::NotEnumerable("first factor"))?;
        let right_els = self
            .right()
            .elements()
            .ok_or(Error::NotEnumerable("second factor"))?;
        let start = self.as_letter(x);
        let target = self.as_letter(y);
        // state -> conjugator g with g x g^-1 = state
        let mut seen: BTreeMap<Letter<F1::Elem, F2::Elem>, Elem<F1, F2>> = BTreeMap::new();
        seen.insert(start.clone(), self.identity());
        let mut frontier = alloc::vec![start];
        while let Some(state) = frontier.pop() {
            let conj = seen[&state].clone();
            if state == target {
                return Ok(Some(conj));
            }
            let mut next: Vec<(Letter<_, _>, Elem<F1, F2>)> = Vec::new();
            match &state {
                Letter::Left(u) => {
                    for z in left_els {
                        let v = self.left().mul(&self.left().mul(z, u), &self.left().inv(z));
                        let g = self.multiply(&self.embed_left(z), &conj);
                        if self.left().edge_contains(&v) {
                            let h = self.left().edge_split(&v).0;
                            next.push((Letter::Right(self.right().embed_edge(&h)), g.clone()));
                        }
                        next.push((Letter::Left(v), g));
                    }
                }
                Letter::Right(u) => {
                    for z in right_els {
                        let v = self
                            .right()
                            .mul(&self.right().mul(z, u), &self.right().inv(z));
                        let g = self.multiply(&self.embed_right(z), &conj);
                        if self.right().edge_contains(&v) {
                            let h = self.right().edge_split(&v).0;
                            next.push((Letter::Left(self.left().embed_edge(&h)), g.clone()));
                        }
                        next.push((Letter::Right(v), g));
                    }
                }
            }
            for (s, g) in next {
                if !seen.contains_key(&s) {
                    seen.insert(s.clone(), g);
                    frontier.push(s);
                }
            }
        }
        Ok(None)
    }

    /// A factor-level element as a factor element, preferring the second factor
    /// for edge elements so that both sides agree on a starting state.
    fn as_letter(&self, x: &Elem<F1, F2>) -> Letter<F1::Elem, F2::Elem> {
        match x.letters.as_slice() {
            [Letter::Left(_)] => Letter::Left(self.to_left(x).expect("left letter")),
            _ => Letter::Right(self.to_right(x).expect("factor element")),
        }
    }
}
