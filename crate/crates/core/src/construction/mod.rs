//! The tower `S -> K = M *_N S -> L = E *_Z K` over a finite group `S`
//! with chosen elements `a` and `b`, and the maps between its levels.

mod homs;
mod kfactor;
mod mgroup;
mod properties;
pub mod sample;

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::amalgam::{Amalgam, Elem, FactorOracle, FiniteFactor, Letter};
use crate::error::{Error, Result};
use crate::locring::{EFactor, LocalRing, LocalizedRational};
use crate::permgroup::{FiniteGroup, PermGroup, Permutation};

pub use homs::Extension;
pub use kfactor::KFactor;
pub use mgroup::{teichmuller_lift, MElement, MGroup};
pub use properties::{
    order_p_class_representatives, remark_xxa_witness, PropertyChecker, PropertyResult, Status,
    DESCRIPTIONS, P5_SEARCH_CAP,
};

pub type MFactor = FiniteFactor<MGroup, Permutation>;
pub type SFactor = FiniteFactor<PermGroup, Permutation>;
pub type KAmalgam = Amalgam<MFactor, SFactor>;
pub type KElem = Elem<MFactor, SFactor>;
pub type LAmalgam = Amalgam<EFactor, KFactor>;
pub type LElem = Elem<EFactor, KFactor>;

/// Default prime for the local ring when `S = M11`: `|M11| = 2^4 3^2 5 11`.
pub const DEFAULT_Q: u64 = 7;

/// A generator of `K` in the rewriting of a `K` element over `S` and `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KGenerator {
    S(Permutation),
    /// `c^i`
    C(u64),
}

/// The built tower with both amalgams wired and checked.
#[derive(Clone, Debug)]
pub struct Tower {
    checker: PropertyChecker,
    b: Permutation,
    ring: LocalRing,
    complement: PermGroup,
    l: LAmalgam,
}

impl Tower {
    /// Needs P1, P7, `b` in `S \ N` and `q` prime to `|S|`; the remaining
    /// properties are reported by [`Tower::properties`] rather than required.
    pub fn build(s: &PermGroup, a: &Permutation, b: &Permutation, p: u64, q: u64) -> Result<Tower> {
        let checker = PropertyChecker::new(s, a, p)?;
        Self::from_checker(checker, b, q)
    }

    pub fn from_checker(checker: PropertyChecker, b: &Permutation, q: u64) -> Result<Tower> {
        let s = checker.group().clone();
        let p = checker.p();
        let a = checker.a().clone();
        let results = checker.check(b);
        for id in ["P1", "P7"] {
            let r = results.iter().find(|r| r.id == id).expect("listed");
            if r.status != Status::Pass {
                return Err(Error::InvalidTower(format!(
                    "{} fails: {}",
                    id,
                    r.witness.clone().unwrap_or_default()
                )));
            }
        }
        if !s.contains(b) {
            return Err(Error::NotSubgroup(format!("b = {} is not in S", b)));
        }
        if checker.n_group().contains(b) {
            return Err(Error::InvalidTower(format!("b = {} lies in N", b)));
        }
        let ring = LocalRing::new(q)?;
        if (s.order() as u64).gcd(&q) != 1 {
            return Err(Error::InvalidTower(format!(
                "q = {} divides |S| = {}",
                q,
                s.order()
            )));
        }

        let complement = checker.n_group().complement(checker.a_group())?;
        if complement.order() * p as usize != checker.n_group().order()
            || complement.intersection(checker.a_group()).order() != 1
        {
            return Err(Error::NoComplement(
                "complement has the wrong order".to_string(),
            ));
        }
        let m = MGroup::new(&a, p, &complement)?;
        let embedding = n_embedding(&m, &a, checker.n_group())?;
        let m_factor = FiniteFactor::new(m, embedding)?;
        let s_factor = FiniteFactor::over_subgroup(s, checker.n_group())?;
        let k = Amalgam::new(m_factor, s_factor)?;
        let c = k.embed_left(&k.left().group().c());
        let cb = k.multiply(&c, &k.embed_right(b));
        if !cb.is_cyclically_reduced() || cb.len() != 2 {
            return Err(Error::InvalidTower(
                "cb is not cyclically reduced of length 2".to_string(),
            ));
        }
        let l = Amalgam::new(EFactor::new(ring), KFactor::new(k, cb))?;
        let tower = Tower {
            checker,
            b: b.clone(),
            ring,
            complement,
            l,
        };
        tower.check_z_identification(6)?;
        Ok(tower)
    }

    /// `Z` is infinite, so its two embeddings are compared on `[-r, r]^2`.
    fn check_z_identification(&self, r: i64) -> Result<()> {
        let kf = self.l.right();
        let e = self.l.left();
        for n1 in -r..=r {
            for n2 in -r..=r {
                let (h1, h2) = (BigInt::from(n1), BigInt::from(n2));
                let (hk, rk) = kf.edge_split(&kf.mul(&kf.embed_edge(&h1), &kf.embed_edge(&h2)));
                let (he, re) = e.edge_split(&e.mul(&e.embed_edge(&h1), &e.embed_edge(&h2)));
                if hk != he || !kf.is_identity(&rk) || !re.is_zero() || hk != BigInt::from(n1 + n2)
                {
                    return Err(Error::EdgeInconsistent(format!(
                        "(cb)^{} (cb)^{} in K",
                        n1, n2
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn s(&self) -> &PermGroup {
        self.checker.group()
    }

    pub fn a(&self) -> &Permutation {
        self.checker.a()
    }

    pub fn b(&self) -> &Permutation {
        &self.b
    }

    pub fn p(&self) -> u64 {
        self.checker.p()
    }

    pub fn q(&self) -> u64 {
        self.ring.q()
    }

    pub fn ring(&self) -> &LocalRing {
        &self.ring
    }

    pub fn checker(&self) -> &PropertyChecker {
        &self.checker
    }

    pub fn a_group(&self) -> &PermGroup {
        self.checker.a_group()
    }

    pub fn n_group(&self) -> &PermGroup {
        self.checker.n_group()
    }

    /// The complement `Q` of `A` in `N`.
    pub fn complement(&self) -> &PermGroup {
        &self.complement
    }

    pub fn m(&self) -> &MGroup {
        self.k().left().group()
    }

    pub fn k(&self) -> &KAmalgam {
        self.l.right().amalgam()
    }

    pub fn l(&self) -> &LAmalgam {
        &self.l
    }

    pub fn properties(&self) -> Vec<PropertyResult> {
        self.checker.check(&self.b)
    }

    /// The first `k != e` in `N` with `k b k^-1 b^-1` in `A`, if any.
    pub fn remark_xxa_witness(&self) -> Option<Permutation> {
        remark_xxa_witness(self.n_group(), self.a_group(), &self.b)
    }

    /// A pair `(n1, n2)` of `N` whose product is computed differently in `S`
    /// and in `M`, if any.
    pub fn embedding_witness(&self) -> Option<(Permutation, Permutation)> {
        let mf = self.k().left();
        let m = mf.group();
        let n = self.n_group().elements();
        for x in n {
            for y in n {
                let in_s = x.compose(y);
                let in_m = m.mul(&mf.embed_edge(x), &mf.embed_edge(y));
                if mf.embed_edge(&in_s) != in_m {
                    return Some((x.clone(), y.clone()));
                }
            }
        }
        None
    }

    /// `(k1, k2)` with `lift(k1 k2) != lift(k1) lift(k2)`, if any.
    pub fn lift_witness(&self) -> Option<(u64, u64)> {
        let p = self.p();
        let p2 = p * p;
        (1..p)
            .flat_map(|x| (1..p).map(move |y| (x, y)))
            .find(|&(x, y)| {
                teichmuller_lift(x * y % p, p)
                    != teichmuller_lift(x, p) * teichmuller_lift(y, p) % p2
            })
    }

    pub fn k_from_s(&self, s: &Permutation) -> KElem {
        self.k().embed_right(s)
    }

    pub fn k_from_m(&self, x: &MElement) -> KElem {
        self.k().embed_left(x)
    }

    pub fn k_c(&self) -> KElem {
        self.k_from_m(&self.m().c())
    }

    pub fn k_b(&self) -> KElem {
        self.k_from_s(&self.b)
    }

    pub fn k_cb(&self) -> KElem {
        self.l.right().cb().clone()
    }

    pub fn l_from_k(&self, x: &KElem) -> LElem {
        self.l.embed_right(x)
    }

    pub fn l_from_e(&self, x: &LocalizedRational) -> LElem {
        self.l.embed_left(x)
    }

    /// The inclusion `eta: S -> L`.
    pub fn eta(&self, s: &Permutation) -> LElem {
        self.l_from_k(&self.k_from_s(s))
    }

    /// `x` in `L` as an element of `K`, when it lies there.
    pub fn l_to_k(&self, x: &LElem) -> Option<KElem> {
        self.l.to_right(x)
    }

    /// `x` in `K` as an element of `S`, when it lies there.
    pub fn k_to_s(&self, x: &KElem) -> Option<Permutation> {
        self.k().to_right(x)
    }

    /// Decomposes `x` in `K` into elements of `S` and powers of `c`.
    pub fn decompose_over_s_and_c(&self, x: &KElem) -> Vec<KGenerator> {
        let mut out = alloc::vec![KGenerator::S(x.head().clone())];
        for letter in x.letters() {
            match letter {
                Letter::Left(mx) => {
                    out.push(KGenerator::C(mx.exp));
                    out.push(KGenerator::S(self.m().q_element(mx.q).clone()));
                }
                Letter::Right(s) => out.push(KGenerator::S(s.clone())),
            }
        }
        out
    }

    pub fn evaluate_generators(&self, gens: &[KGenerator]) -> KElem {
        let c = self.k_c();
        gens.iter().fold(self.k().identity(), |acc, g| {
            let x = match g {
                KGenerator::S(s) => self.k_from_s(s),
                KGenerator::C(i) => self.k().pow(&c, *i as i64),
            };
            self.k().multiply(&acc, &x)
        })
    }
}

/// `a^t u -> c^(pt) u` for `u` in the complement.
fn n_embedding(m: &MGroup, a: &Permutation, n: &PermGroup) -> Result<Vec<(Permutation, MElement)>> {
    let p = m.p();
    let mut pairs = Vec::with_capacity(n.order());
    for t in 0..p {
        let at = a.pow(t as i64);
        for (j, u) in m.complement().iter().enumerate() {
            pairs.push((at.compose(u), m.from_parts(p * t, j)));
        }
    }
    let mut seen: Vec<&Permutation> = pairs.iter().map(|(x, _)| x).collect();
    seen.sort();
    seen.dedup();
    if seen.len() != n.order() || seen.iter().any(|x| !n.contains(x)) {
        return Err(Error::NoComplement("A Q does not cover N".to_string()));
    }
    Ok(pairs)
}

#[cfg(test)]
mod tests;
