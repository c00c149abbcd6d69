use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::permgroup::{FiniteGroup, PermGroup, Permutation};

/// `c^exp * u` in `M = C x| Q`, with `u` given by its index in the sorted
/// complement.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MElement {
    pub exp: u64,
    pub q: usize,
}

impl fmt::Debug for MElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c^{}.q{}", self.exp, self.q)
    }
}

/// The unit `v` mod `p^2` with `v = k (mod p)` and `v^(p-1) = 1 (mod p^2)`.
pub fn teichmuller_lift(k: u64, p: u64) -> u64 {
    let p2 = p * p;
    pow_mod(k % p2, p, p2)
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

/// `M = C x| Q` where `C = <c>` is cyclic of order `p^2` and `u in Q` acts on
/// `C` through the Teichmuller lift of its action on `A = <c^p>`.
#[derive(Clone)]
pub struct MGroup {
    p: u64,
    p2: u64,
    complement: Vec<Permutation>,
    action: Vec<u64>,
    lift: Vec<u64>,
    q_mul: Vec<Vec<usize>>,
    q_inv: Vec<usize>,
    elements: Vec<MElement>,
}

impl fmt::Debug for MGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MGroup")
            .field("p", &self.p)
            .field("complement_order", &self.complement.len())
            .finish()
    }
}

impl MGroup {
    /// Builds `M` from `a` of prime order `p` and a complement `Q` of `<a>`
    /// in a group normalizing `<a>`.
    pub fn new(a: &Permutation, p: u64, complement: &PermGroup) -> Result<Self> {
        let powers: Vec<Permutation> = (0..p).map(|i| a.pow(i as i64)).collect();
        if a.order() != p {
            return Err(Error::InvalidTower(format!(
                "{} does not have order {}",
                a, p
            )));
        }
        let qs: Vec<Permutation> = complement.elements().to_vec();
        let mut action = Vec::with_capacity(qs.len());
        for u in &qs {
            let img = u.conjugate(a);
            let k = powers
                .iter()
                .position(|x| *x == img)
                .ok_or_else(|| Error::InvalidTower(format!("{} does not normalize <a>", u)))?;
            action.push(k as u64);
        }
        let lift: Vec<u64> = action.iter().map(|&k| teichmuller_lift(k, p)).collect();
        let index: BTreeMap<&Permutation, usize> =
            qs.iter().enumerate().map(|(i, u)| (u, i)).collect();
        let q_mul = qs
            .iter()
            .map(|u| qs.iter().map(|v| index[&u.compose(v)]).collect())
            .collect();
        let q_inv = qs.iter().map(|u| index[&u.inverse()]).collect();
        let p2 = p * p;
        let mut elements = Vec::with_capacity(p2 as usize * qs.len());
        for exp in 0..p2 {
            for q in 0..qs.len() {
                elements.push(MElement { exp, q });
            }
        }
        Ok(MGroup {
            p,
            p2,
            complement: qs,
            action,
            lift,
            q_mul,
            q_inv,
            elements,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// The generator `c` of `C`.
    pub fn c(&self) -> MElement {
        MElement { exp: 1, q: 0 }
    }

    /// `c^p`, the image of `a`.
    pub fn a(&self) -> MElement {
        MElement { exp: self.p, q: 0 }
    }

    pub fn complement(&self) -> &[Permutation] {
        &self.complement
    }

    /// The permutation `u` of an index into the complement.
    pub fn q_element(&self, q: usize) -> &Permutation {
        &self.complement[q]
    }

    pub fn q_index(&self, u: &Permutation) -> Option<usize> {
        self.complement.binary_search(u).ok()
    }

    /// `k(u)` with `u a u^-1 = a^k(u)`.
    pub fn action_exponent(&self, q: usize) -> u64 {
        self.action[q]
    }

    pub fn lifted_action(&self, q: usize) -> u64 {
        self.lift[q]
    }

    /// `c^i u` for an element `a^t u` of `N = A x| Q`.
    pub fn from_parts(&self, exp: u64, q: usize) -> MElement {
        MElement {
            exp: exp % self.p2,
            q,
        }
    }

    pub fn is_in_c(&self, x: &MElement) -> bool {
        x.q == 0
    }
}

impl FiniteGroup for MGroup {
    type Elem = MElement;

    fn identity(&self) -> MElement {
        MElement { exp: 0, q: 0 }
    }

    fn mul(&self, x: &MElement, y: &MElement) -> MElement {
        MElement {
            exp: (x.exp + self.lift[x.q] * y.exp) % self.p2,
            q: self.q_mul[x.q][y.q],
        }
    }

    fn inv(&self, x: &MElement) -> MElement {
        let ui = self.q_inv[x.q];
        MElement {
            exp: (self.p2 - self.lift[ui] * x.exp % self.p2) % self.p2,
            q: ui,
        }
    }

    fn elements(&self) -> &[MElement] {
        &self.elements
    }

    fn index_of(&self, x: &MElement) -> Option<usize> {
        (x.exp < self.p2 && x.q < self.complement.len())
            .then(|| x.exp as usize * self.complement.len() + x.q)
    }
}
