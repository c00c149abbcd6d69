use alloc::format;

use super::{KElem, LElem, Tower};
use crate::amalgam::Letter;
use crate::error::{Error, Result};
use crate::locring::LocalizedRational;
use crate::permgroup::{Endomorphism, FiniteGroup, Permutation};

/// An endomorphism of `L` extending `eta * f_S` along `eta`.
#[derive(Clone, Debug)]
pub enum Extension {
    /// Conjugation `x -> g x g^-1`.
    Inner { g: LElem, g_inv: LElem },
    /// Kills `c` and `E`, and acts on `S` and the complement through `f_S`.
    Killing { f: Endomorphism },
}

impl Tower {
    /// Extends `f_S`. Automorphisms must be inner and become conjugation
    /// by the same element; the others must kill `a` and `b`.
    pub fn extend_endomorphism(&self, f: &Endomorphism) -> Result<Extension> {
        let s = self.s();
        if f.is_bijective() {
            let g = f
                .inner_witness(s)
                .ok_or_else(|| Error::InvalidEndomorphism("outer automorphism of S".into()))?;
            return Ok(self.inner_extension(self.eta(&g)));
        }
        if f.kills(s, self.a()) && f.kills(s, self.b()) {
            return Ok(Extension::Killing { f: f.clone() });
        }
        Err(Error::InvalidEndomorphism(format!(
            "not an automorphism and does not kill a and b: a -> {}, b -> {}",
            f.apply(s, self.a()),
            f.apply(s, self.b())
        )))
    }

    pub fn inner_extension(&self, g: LElem) -> Extension {
        let g_inv = self.l().inverse(&g);
        Extension::Inner { g, g_inv }
    }

    pub fn apply_extension(&self, ext: &Extension, x: &LElem) -> LElem {
        match ext {
            Extension::Inner { g, g_inv } => self.l().multiply(&self.l().multiply(g, x), g_inv),
            Extension::Killing { f } => {
                let s = self.s();
                let mut acc = s.identity();
                for letter in x.letters() {
                    if let Letter::Right(k) = letter {
                        acc = acc.compose(&self.kill_on_k(f, k));
                    }
                }
                self.eta(&acc)
            }
        }
    }

    fn kill_on_k(&self, f: &Endomorphism, k: &KElem) -> Permutation {
        let s = self.s();
        let mut acc = f.apply(s, k.head());
        for letter in k.letters() {
            let img = match letter {
                Letter::Left(m) => f.apply(s, self.m().q_element(m.q)),
                Letter::Right(t) => f.apply(s, t),
            };
            acc = acc.compose(&img);
        }
        acc
    }

    /// `pi: L -> E/Z`, the sum of the `E` letters modulo `Z`, represented in
    /// `[0, 1)`.
    pub fn projection_pi(&self, x: &LElem) -> LocalizedRational {
        x.letters()
            .iter()
            .fold(LocalizedRational::zero(), |acc, l| match l {
                Letter::Left(e) => acc.add(e),
                Letter::Right(_) => acc,
            })
            .coset_rep_mod_z()
    }
}
