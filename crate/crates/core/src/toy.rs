//! Small amalgams of permutation groups used as test beds for the tree and
//! conjugacy machinery.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use rand::Rng;

use crate::amalgam::{Amalgam, Elem, FactorOracle, FiniteFactor, Letter};
use crate::error::{Error, Result};
use crate::permgroup::{catalog, FiniteGroup, PermGroup, Permutation};

pub type PermFactor = FiniteFactor<PermGroup, Permutation>;
pub type ToyAmalgam = Amalgam<PermFactor, PermFactor>;
pub type ToyElem = Elem<PermFactor, PermFactor>;

/// Extends an assignment of `edge` generators to an injective homomorphism
/// into `group`, returned as `(edge element, image)` pairs.
pub fn embedding_from_generators(
    edge: &PermGroup,
    group: &PermGroup,
    images: &[Permutation],
) -> Result<Vec<(Permutation, Permutation)>> {
    if images.len() != edge.generators().len() {
        return Err(Error::EdgeInconsistent(
            "one image per edge generator is required".into(),
        ));
    }
    let mut map: BTreeMap<Permutation, Permutation> = BTreeMap::new();
    map.insert(edge.identity(), group.identity());
    let mut frontier = alloc::vec![edge.identity()];
    while let Some(x) = frontier.pop() {
        for (g, img) in edge.generators().iter().zip(images) {
            let y = x.compose(g);
            let want = map[&x].compose(img);
            match map.get(&y) {
                Some(have) if *have != want => {
                    return Err(Error::EdgeInconsistent(format!(
                        "generator images do not define a homomorphism at {}",
                        y
                    )))
                }
                Some(_) => {}
                None => {
                    map.insert(y.clone(), want);
                    frontier.push(y);
                }
            }
        }
    }
    Ok(map.into_iter().collect())
}

/// `g1 *_H g2`, identifying the generators of the abstract edge group `edge`
/// with `images1` in `g1` and `images2` in `g2`.
pub fn amalgam(
    g1: PermGroup,
    images1: &[Permutation],
    g2: PermGroup,
    images2: &[Permutation],
    edge: &PermGroup,
) -> Result<ToyAmalgam> {
    let e1 = embedding_from_generators(edge, &g1, images1)?;
    let e2 = embedding_from_generators(edge, &g2, images2)?;
    Amalgam::new(FiniteFactor::new(g1, e1)?, FiniteFactor::new(g2, e2)?)
}

fn perm(degree: usize, cycles: &[&[u32]]) -> Permutation {
    Permutation::from_cycles(degree, cycles).expect("valid cycles")
}

fn abstract_cyclic(n: usize) -> PermGroup {
    catalog::cyclic(n)
}

/// `Z/6 *_{Z/2} Z/4`, identifying `3` in `Z/6` with `2` in `Z/4`.
pub fn z6_z4() -> ToyAmalgam {
    let z6 = catalog::cyclic(6);
    let z4 = catalog::cyclic(4);
    let h = abstract_cyclic(2);
    let i6 = z6.generators()[0].pow(3);
    let i4 = z4.generators()[0].pow(2);
    amalgam(z6, &[i6], z4, &[i4], &h).expect("valid toy amalgam")
}

/// `S3 *_{Z/2} D4`, identifying the transposition `(1,2)` with the
/// reflection `(2,4)` of the square.
pub fn s3_d4() -> ToyAmalgam {
    let h = abstract_cyclic(2);
    amalgam(
        catalog::symmetric(3),
        &[perm(3, &[&[1, 2]])],
        catalog::dihedral(4),
        &[perm(4, &[&[2, 4]])],
        &h,
    )
    .expect("valid toy amalgam")
}

/// `A4 *_{Z/3} S3` over a common 3-cycle. In `A4` the two nontrivial edge
/// elements are not conjugate; in `S3` they are.
pub fn a4_s3() -> ToyAmalgam {
    let h = abstract_cyclic(3);
    amalgam(
        catalog::alternating(4),
        &[perm(4, &[&[1, 2, 3]])],
        catalog::symmetric(3),
        &[perm(3, &[&[1, 2, 3]])],
        &h,
    )
    .expect("valid toy amalgam")
}

/// `S3 *_{Z/3} A4`, the factors of [`a4_s3`] swapped.
pub fn s3_a4() -> ToyAmalgam {
    let h = abstract_cyclic(3);
    amalgam(
        catalog::symmetric(3),
        &[perm(3, &[&[1, 2, 3]])],
        catalog::alternating(4),
        &[perm(4, &[&[1, 2, 3]])],
        &h,
    )
    .expect("valid toy amalgam")
}

/// Looks up a toy amalgam by name.
pub fn by_name(name: &str) -> Option<ToyAmalgam> {
    match name {
        "z6-z4" => Some(z6_z4()),
        "s3-d4" => Some(s3_d4()),
        "a4-s3" => Some(a4_s3()),
        "s3-a4" => Some(s3_a4()),
        _ => None,
    }
}

pub const TOY_NAMES: [&str; 4] = ["z6-z4", "s3-d4", "a4-s3", "s3-a4"];

/// A uniformly random reduced word of exactly `len` letters, with the sides
/// of the letters alternating from a random start.
pub fn random_word<R: Rng>(amalgam: &ToyAmalgam, rng: &mut R, len: usize) -> ToyElem {
    let reps1 = amalgam.left().coset_representatives();
    let reps2 = amalgam.right().coset_representatives();
    let edge = amalgam.left().edge_elements().expect("finite edge");
    let head = edge[rng.gen_range(0..edge.len())].clone();
    let mut left_side = rng.gen_bool(0.5);
    let mut letters = Vec::with_capacity(len);
    for _ in 0..len {
        letters.push(if left_side {
            Letter::Left(reps1[rng.gen_range(0..reps1.len())].clone())
        } else {
            Letter::Right(reps2[rng.gen_range(0..reps2.len())].clone())
        });
        left_side = !left_side;
    }
    amalgam
        .from_parts(head, letters)
        .expect("reduced by construction")
}

/// A random factor element, not necessarily a coset representative.
pub fn random_letter<R: Rng>(
    amalgam: &ToyAmalgam,
    rng: &mut R,
) -> Letter<Permutation, Permutation> {
    if rng.gen_bool(0.5) {
        let els = amalgam.left().group().elements();
        Letter::Left(els[rng.gen_range(0..els.len())].clone())
    } else {
        let els = amalgam.right().group().elements();
        Letter::Right(els[rng.gen_range(0..els.len())].clone())
    }
}

/// Every reduced word with at most `max_len` letters.
pub fn all_words(amalgam: &ToyAmalgam, max_len: usize) -> Vec<ToyElem> {
    let reps1 = amalgam.left().coset_representatives();
    let reps2 = amalgam.right().coset_representatives();
    let edge = amalgam
        .left()
        .edge_elements()
        .expect("finite edge")
        .to_vec();
    let mut shapes: Vec<Vec<Letter<Permutation, Permutation>>> = alloc::vec![Vec::new()];
    let mut layer = shapes.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            let left_ok = !matches!(w.last(), Some(Letter::Left(_)));
            let right_ok = !matches!(w.last(), Some(Letter::Right(_)));
            if left_ok {
                for r in &reps1 {
                    let mut v = w.clone();
                    v.push(Letter::Left(r.clone()));
                    next.push(v);
                }
            }
            if right_ok {
                for r in &reps2 {
                    let mut v = w.clone();
                    v.push(Letter::Right(r.clone()));
                    next.push(v);
                }
            }
        }
        shapes.extend(next.iter().cloned());
        layer = next;
    }
    let mut out = Vec::new();
    for h in &edge {
        for s in &shapes {
            out.push(amalgam.from_parts(h.clone(), s.clone()).expect("reduced"));
        }
    }
    out
}
