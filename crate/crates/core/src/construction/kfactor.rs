use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::{KAmalgam, KElem};
use crate::amalgam::{FactorOracle, Order};

/// `K` as a factor of `L = E *_Z K`, with `Z` realised as `<cb>`.
///
/// The section of `Z \ K` picks, in each coset, the shortest element and
/// breaks ties by the normal-form order. For `w` of length `l` every
/// shortest element of `Z w` is `(cb)^-n w` with `|n| <= l`, so a finite
/// scan is exact.
#[derive(Clone, Debug)]
pub struct KFactor {
    k: KAmalgam,
    cb: KElem,
    cb_inv: KElem,
}

impl KFactor {
    pub fn new(k: KAmalgam, cb: KElem) -> Self {
        let cb_inv = k.inverse(&cb);
        KFactor { k, cb, cb_inv }
    }

    pub fn amalgam(&self) -> &KAmalgam {
        &self.k
    }

    pub fn cb(&self) -> &KElem {
        &self.cb
    }

    pub fn cb_power(&self, n: i64) -> KElem {
        self.k.pow(&self.cb, n)
    }

    fn to_i64(n: &BigInt) -> i64 {
        n.to_i64().expect("edge exponent fits in i64")
    }
}

impl FactorOracle for KFactor {
    type Elem = KElem;
    type Edge = BigInt;

    fn identity(&self) -> KElem {
        self.k.identity()
    }
    fn mul(&self, x: &KElem, y: &KElem) -> KElem {
        self.k.multiply(x, y)
    }
    fn inv(&self, x: &KElem) -> KElem {
        self.k.inverse(x)
    }
    fn embed_edge(&self, h: &BigInt) -> KElem {
        self.cb_power(Self::to_i64(h))
    }
    fn edge_split(&self, g: &KElem) -> (BigInt, KElem) {
        let l = g.len() as i64;
        // candidates (cb)^-n g for n = -l, ..., l
        let mut cand = self.k.multiply(&self.k.pow(&self.cb, l), g);
        let mut best: Option<(i64, KElem)> = None;
        for n in -l..=l {
            let better = match &best {
                None => true,
                Some((_, b)) => (cand.len(), &cand) < (b.len(), b),
            };
            if better {
                best = Some((n, cand.clone()));
            }
            cand = self.k.multiply(&self.cb_inv, &cand);
        }
        let (n, r) = best.expect("at least one candidate");
        (BigInt::from(n), r)
    }
    fn edge_identity(&self) -> BigInt {
        BigInt::zero()
    }
    fn edge_contains(&self, g: &KElem) -> bool {
        let l = g.len();
        if l % 2 == 1 {
            return false;
        }
        let v = (l / 2) as i64;
        *g == self.cb_power(v) || *g == self.cb_power(-v)
    }
    fn order_of(&self, g: &KElem) -> Order {
        self.k.order(g)
    }
    /// Torsion elements other than `e` never conjugate into the torsion-free
    /// `<cb>`; the rest go through the cyclic-permutation test against
    /// `(cb)^m` and `(cb)^-m` with `2m` the core length.
    fn conjugate_into_edge(&self, g: &KElem) -> Option<bool> {
        if self.k.is_identity(g) {
            return Some(true);
        }
        let (_, core) = self.k.cyclic_reduce(g);
        if !core.is_cyclically_reduced() {
            return Some(false);
        }
        let m = (core.len() / 2) as i64;
        let hit = |t: KElem| self.k.conjugate_cyclic_test(&core, &t).map(|x| x.is_some());
        Some(hit(self.cb_power(m)).ok()? || hit(self.cb_power(-m)).ok()?)
    }
}
