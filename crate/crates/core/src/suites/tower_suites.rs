use alloc::format;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{show, SuiteReport};
use crate::amalgam::{Amalgam, FactorOracle, Letter, Side};
use crate::bstree::Tree;
use crate::construction::sample::Sampler;
use crate::construction::{LElem, Tower};
use crate::error::Result;
use crate::locring::LocalizedRational;
use crate::permgroup::{Endomorphism, FiniteGroup};

/// Longest random word, in letters, for the normal-form suite.
const NF_MAX_LETTERS: usize = 8;

/// Re-association, inverses and length identities on words of arbitrary
/// (not necessarily reduced) factor letters, in `K` and in `L`.
pub fn normal_form(t: &Tower, samples: usize, seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::new("normal-form", seed, samples);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sampler = Sampler::new(t);
    let m_els = t.m().elements();
    for _ in 0..samples {
        let n = rng.gen_range(1..=NF_MAX_LETTERS);
        let letters: Vec<_> = (0..n)
            .map(|_| {
                if rng.gen_bool(0.5) {
                    Letter::Left(m_els[rng.gen_range(0..m_els.len())])
                } else {
                    Letter::Right(sampler.s_element(&mut rng))
                }
            })
            .collect();
        let split = rng.gen_range(0..=n);
        word_identities(&mut rep, "K", t.k(), &letters, split);
    }
    for _ in 0..samples {
        let n = rng.gen_range(1..=NF_MAX_LETTERS - 2);
        let letters: Vec<_> = (0..n)
            .map(|_| {
                if rng.gen_bool(0.5) {
                    Letter::Left(sampler.e_element(&mut rng))
                } else {
                    Letter::Right(sampler.k_element(&mut rng, 3))
                }
            })
            .collect();
        let split = rng.gen_range(0..=n);
        word_identities(&mut rep, "L", t.l(), &letters, split);
    }
    rep
}

fn word_identities<F1, F2>(
    rep: &mut SuiteReport,
    level: &str,
    am: &Amalgam<F1, F2>,
    letters: &[Letter<F1::Elem, F2::Elem>],
    split: usize,
) where
    F1: FactorOracle,
    F2: FactorOracle<Edge = F1::Edge>,
{
    let folded_right = am.product_of_letters(letters);
    let folded_left = letters.iter().fold(am.identity(), |acc, l| {
        am.multiply(&acc, &am.embed_letter(l))
    });
    let halves = am.multiply(
        &am.product_of_letters(&letters[..split]),
        &am.product_of_letters(&letters[split..]),
    );
    rep.check(
        folded_left == folded_right && halves == folded_right,
        || format!("{} association differs for {:?}", level, show(&letters)),
    );
    let x = folded_right;
    let x_inv = am.inverse(&x);
    rep.check(am.is_identity(&am.multiply(&x, &x_inv)), || {
        format!("{} x x^-1 != e for {}", level, show(&x))
    });
    rep.check(am.is_identity(&am.multiply(&x_inv, &x)), || {
        format!("{} x^-1 x != e for {}", level, show(&x))
    });
    rep.check(x_inv.len() == x.len(), || {
        format!("{} l(x^-1) != l(x) for {}", level, show(&x))
    });
    if x.is_cyclically_reduced() {
        rep.count(&format!("{}_cyclically_reduced", level), 1);
        rep.check(am.multiply(&x, &x).len() == 2 * x.len(), || {
            format!("{} l(x^2) != 2 l(x) for {}", level, show(&x))
        });
    }
}

/// No `k` outside `<cb>` conjugates `(cb)^v` to `(cb)^(+-v)`.
pub fn lemma_5_2(t: &Tower, samples: usize, seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::new("lemma-5.2", seed, samples);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sampler = Sampler::new(t);
    let k = t.k();
    let kf = t.l().right();
    let powers: Vec<_> = (1..=2)
        .map(|v| (k.pow(&t.k_cb(), v), k.pow(&t.k_cb(), -v)))
        .collect();
    for _ in 0..samples {
        let x = sampler.k_element(&mut rng, 8);
        if kf.edge_contains(&x) {
            rep.count("skipped_in_z", 1);
            continue;
        }
        for (v, (g, g_inv)) in powers.iter().enumerate() {
            let y = k.conjugate(&x, g);
            rep.check(y != *g && y != *g_inv, || {
                format!("k = {} normalizes (cb)^{}", show(&x), v + 1)
            });
        }
    }
    rep
}

/// `k x k^-1` leaves `E` for nonzero `x` in `E` and `k` outside `E`.
pub fn lemma_5_3(t: &Tower, samples: usize, seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::new("lemma-5.3", seed, samples);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sampler = Sampler::new(t);
    let l = t.l();
    for _ in 0..samples {
        let x = sampler.e_element(&mut rng);
        let len = rng.gen_range(1..=6);
        let g = sampler.l_word(&mut rng, len, 3);
        if l.in_factor(&g, Side::Left) {
            rep.count("skipped_in_e", 1);
            continue;
        }
        let y = l.conjugate(&g, &t.l_from_e(&x));
        rep.check(!l.in_factor(&y, Side::Left), || {
            format!("k = {} conjugates {} into E", show(&g), x)
        });
    }
    rep
}

/// Elements of `L` normalizing `A` lie in `K`. Samples mix random words,
/// elements of `M` (which normalize `A`) and products of the two.
pub fn lemma_5_4(t: &Tower, samples: usize, seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::new("lemma-5.4", seed, samples);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sampler = Sampler::new(t);
    let l = t.l();
    let a = t.eta(t.a());
    let a_powers: Vec<LElem> = t.a_group().elements().iter().map(|x| t.eta(x)).collect();
    for _ in 0..samples {
        let m = t.l_from_k(&t.k_from_m(&sampler.m_element(&mut rng)));
        let g = match rng.gen_range(0..3) {
            0 => sampler.l_element(&mut rng, 5, 3),
            1 => m,
            _ => {
                let w = sampler.l_element(&mut rng, 2, 2);
                l.multiply(&m, &w)
            }
        };
        if !a_powers.contains(&l.conjugate(&g, &a)) {
            rep.count("not_normalizing", 1);
            continue;
        }
        rep.count("normalizing", 1);
        rep.check(l.in_factor(&g, Side::Right), || {
            format!("{} normalizes A but is not in K", show(&g))
        });
    }
    rep
}

/// The normalizer-amalgam hypothesis for `A` over `M` and `S`, and
/// sampled elements of `K` normalizing `A` all lying in `M`.
pub fn normalizer_amalgam(t: &Tower, samples: usize, seed: u64) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("normalizer-amalgam", seed, samples);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = t.k();
    let h0 = t.a_group().elements().to_vec();
    let na = Tree::new(k).normalizer_amalgam(&h0)?;
    rep.count("hypothesis_checks", na.checks as u64);
    rep.check(na.left_is_whole, || "N_M(A) != M".into());
    rep.check(na.right_is_edge, || "N_S(A) != N".into());
    let sampler = Sampler::new(t);
    let a = t.k_from_s(t.a());
    let a_powers: Vec<_> = h0.iter().map(|x| t.k_from_s(x)).collect();
    for _ in 0..samples {
        let g = if rng.gen_bool(0.5) {
            sampler.k_element(&mut rng, 6)
        } else {
            let m = t.k_from_m(&sampler.m_element(&mut rng));
            let n = t.k_from_s(&sampler.n_element(&mut rng));
            k.multiply(&m, &n)
        };
        if !a_powers.contains(&k.conjugate(&g, &a)) {
            rep.count("not_normalizing", 1);
            continue;
        }
        rep.count("normalizing", 1);
        rep.check(k.in_factor(&g, Side::Left) && na.contains(&g), || {
            format!("{} normalizes A but is not in M", show(&g))
        });
    }
    Ok(rep)
}

/// Extensions of the identity and the trivial endomorphism: agreement
/// with `f_S` on all of `S` and multiplicativity on random pairs.
pub fn extension(t: &Tower, samples: usize, seed: u64) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("extension", seed, samples);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let s = t.s();
    let l = t.l();
    let sampler = Sampler::new(t);
    for (label, f) in [
        ("identity", Endomorphism::identity(s)),
        ("trivial", Endomorphism::trivial(s)),
    ] {
        let ext = t.extend_endomorphism(&f)?;
        for x in s.elements() {
            let lhs = t.apply_extension(&ext, &t.eta(x));
            rep.check(lhs == t.eta(&f.apply(s, x)), || {
                format!("{}: f'(eta({})) != eta(f({}))", label, x, x)
            });
        }
        for _ in 0..samples {
            let x = sampler.l_element(&mut rng, 5, 3);
            let y = sampler.l_element(&mut rng, 5, 3);
            let lhs = t.apply_extension(&ext, &l.multiply(&x, &y));
            let rhs = l.multiply(&t.apply_extension(&ext, &x), &t.apply_extension(&ext, &y));
            rep.check(lhs == rhs, || {
                format!(
                    "{}: f'(xy) != f'(x)f'(y) for {} and {}",
                    label,
                    show(&x),
                    show(&y)
                )
            });
        }
    }
    Ok(rep)
}

/// `pi` is a homomorphism onto `E/Z`, kills `S` and `K`, and restricts to
/// the quotient map on `E`.
pub fn projection(t: &Tower, samples: usize, seed: u64) -> SuiteReport {
    let mut rep = SuiteReport::new("projection", seed, samples);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let l = t.l();
    let sampler = Sampler::new(t);
    for x in t.s().elements() {
        rep.check(t.projection_pi(&t.eta(x)).is_zero(), || {
            format!("pi({}) != 0", x)
        });
    }
    for _ in 0..samples {
        let x = sampler.l_element(&mut rng, 5, 3);
        let y = sampler.l_element(&mut rng, 5, 3);
        let lhs = t.projection_pi(&l.multiply(&x, &y));
        let rhs = t
            .projection_pi(&x)
            .add(&t.projection_pi(&y))
            .coset_rep_mod_z();
        rep.check(lhs == rhs, || {
            format!("pi(xy) != pi(x) + pi(y) for {} and {}", show(&x), show(&y))
        });
        let k = sampler.k_element(&mut rng, 6);
        rep.check(t.projection_pi(&t.l_from_k(&k)).is_zero(), || {
            format!("pi({}) != 0", show(&k))
        });
        let e: LocalizedRational = sampler.e_element(&mut rng);
        rep.check(
            t.projection_pi(&t.l_from_e(&e)) == e.coset_rep_mod_z(),
            || format!("pi(E({})) != {} mod Z", e, e),
        );
    }
    rep
}
