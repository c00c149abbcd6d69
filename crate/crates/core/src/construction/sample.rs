//! Seeded random elements of `K` and `L` with controlled lengths.

use alloc::vec::Vec;

use num_bigint::BigInt;
use rand::Rng;

use super::{KElem, LElem, MElement, Tower};
use crate::amalgam::{FactorOracle, Letter};
use crate::locring::LocalizedRational;
use crate::permgroup::{FiniteGroup, Permutation};

/// Largest denominator drawn for `E` letters.
pub const MAX_DENOMINATOR: i64 = 60;

/// Uniform letters over the coset representatives of both levels.
pub struct Sampler<'a> {
    tower: &'a Tower,
    m_reps: Vec<MElement>,
    s_reps: Vec<Permutation>,
}

impl<'a> Sampler<'a> {
    pub fn new(tower: &'a Tower) -> Self {
        Sampler {
            tower,
            m_reps: tower.k().left().coset_representatives(),
            s_reps: tower.k().right().coset_representatives(),
        }
    }

    pub fn tower(&self) -> &Tower {
        self.tower
    }

    pub fn n_element<R: Rng>(&self, rng: &mut R) -> Permutation {
        let n = self.tower.n_group().elements();
        n[rng.gen_range(0..n.len())].clone()
    }

    pub fn s_element<R: Rng>(&self, rng: &mut R) -> Permutation {
        let s = self.tower.s().elements();
        s[rng.gen_range(0..s.len())].clone()
    }

    pub fn m_element<R: Rng>(&self, rng: &mut R) -> MElement {
        let m = self.tower.m().elements();
        m[rng.gen_range(0..m.len())]
    }

    /// A reduced `K` word with exactly `len` letters and a random head.
    pub fn k_word<R: Rng>(&self, rng: &mut R, len: usize) -> KElem {
        let mut left = rng.gen_bool(0.5);
        let mut letters = Vec::with_capacity(len);
        for _ in 0..len {
            letters.push(if left {
                Letter::Left(self.m_reps[rng.gen_range(0..self.m_reps.len())])
            } else {
                Letter::Right(self.s_reps[rng.gen_range(0..self.s_reps.len())].clone())
            });
            left = !left;
        }
        self.tower
            .k()
            .from_parts(self.n_element(rng), letters)
            .expect("reduced by construction")
    }

    /// A `K` word with length uniform in `0..=max_len`.
    pub fn k_element<R: Rng>(&self, rng: &mut R, max_len: usize) -> KElem {
        let len = rng.gen_range(0..=max_len);
        self.k_word(rng, len)
    }

    /// A nonzero fraction in `(0, 1)` with denominator prime to `q`.
    pub fn e_fraction<R: Rng>(&self, rng: &mut R) -> LocalizedRational {
        let q = self.tower.q() as i64;
        loop {
            let den = rng.gen_range(2..=MAX_DENOMINATOR);
            if den % q == 0 {
                continue;
            }
            let num = rng.gen_range(1..den);
            return self
                .tower
                .ring()
                .element(num, den)
                .expect("denominator prime to q");
        }
    }

    /// A nonzero element of `E` with a small integer part.
    pub fn e_element<R: Rng>(&self, rng: &mut R) -> LocalizedRational {
        let frac = if rng.gen_bool(0.2) {
            LocalizedRational::zero()
        } else {
            self.e_fraction(rng)
        };
        let mut n: i64 = rng.gen_range(-3..=3);
        if frac.is_zero() && n == 0 {
            n = 1;
        }
        frac.add(&LocalizedRational::integer(n))
    }

    /// A nonidentity canonical representative of a coset `Z k` in `K`.
    pub fn k_letter<R: Rng>(&self, rng: &mut R, max_len: usize) -> KElem {
        let kf = self.tower.l().right();
        loop {
            let len = rng.gen_range(1..=max_len.max(1));
            let r = kf.edge_split(&self.k_word(rng, len)).1;
            if !kf.is_identity(&r) {
                return r;
            }
        }
    }

    /// A reduced `L` word with exactly `len` letters; `K` letters have
    /// length at most `k_len`.
    pub fn l_word<R: Rng>(&self, rng: &mut R, len: usize, k_len: usize) -> LElem {
        let mut left = rng.gen_bool(0.5);
        let mut letters = Vec::with_capacity(len);
        for _ in 0..len {
            letters.push(if left {
                Letter::Left(self.e_fraction(rng))
            } else {
                Letter::Right(self.k_letter(rng, k_len))
            });
            left = !left;
        }
        let head = BigInt::from(rng.gen_range(-2i64..=2));
        self.tower
            .l()
            .from_parts(head, letters)
            .expect("reduced by construction")
    }

    pub fn l_element<R: Rng>(&self, rng: &mut R, max_len: usize, k_len: usize) -> LElem {
        let len = rng.gen_range(0..=max_len);
        self.l_word(rng, len, k_len)
    }
}
