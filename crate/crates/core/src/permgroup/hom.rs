use alloc::format;
use alloc::vec::Vec;

use super::group::{FiniteGroup, PermGroup};
use super::perm::Permutation;
use crate::error::{Error, Result};

/// Upper bound on `|G|^(#generators)` for exhaustive endomorphism search.
pub const ENDOMORPHISM_SEARCH_LIMIT: u64 = 2_000_000;

/// An endomorphism of a finite permutation group, stored as an image table
/// indexed like `group.elements()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Endomorphism {
    images: Vec<usize>,
}

impl Endomorphism {
    pub fn identity(group: &PermGroup) -> Self {
        Endomorphism {
            images: (0..group.order()).collect(),
        }
    }

    pub fn trivial(group: &PermGroup) -> Self {
        let e = group.index_of(&group.identity()).expect("identity");
        Endomorphism {
            images: alloc::vec![e; group.order()],
        }
    }

    /// Conjugation `x -> s x s^-1`.
    pub fn inner(group: &PermGroup, s: &Permutation) -> Result<Self> {
        if !group.contains(s) {
            return Err(Error::InvalidEndomorphism(format!(
                "{} is not in the group",
                s
            )));
        }
        let images = group
            .elements()
            .iter()
            .map(|x| group.index_of(&s.conjugate(x)).expect("closed"))
            .collect();
        Ok(Endomorphism { images })
    }

    /// Extends generator images to a homomorphism, if one exists.
    pub fn from_generator_images(group: &PermGroup, images: &[Permutation]) -> Result<Self> {
        if images.len() != group.generators().len() {
            return Err(Error::InvalidEndomorphism(format!(
                "{} generator images for {} generators",
                images.len(),
                group.generators().len()
            )));
        }
        let idx: Vec<usize> = images
            .iter()
            .map(|x| {
                group.index_of(x).ok_or_else(|| {
                    Error::InvalidEndomorphism(format!("image {} is not in the group", x))
                })
            })
            .collect::<Result<_>>()?;
        extend_generator_images(group, &idx)
            .ok_or_else(|| Error::InvalidEndomorphism("relations are not preserved".into()))
    }

    /// Wraps a full image table after checking multiplicativity on
    /// `x * generator` for every element `x`.
    pub fn from_table(group: &PermGroup, images: Vec<usize>) -> Result<Self> {
        if images.len() != group.order() || images.iter().any(|&i| i >= group.order()) {
            return Err(Error::InvalidEndomorphism(
                "table has the wrong shape".into(),
            ));
        }
        let map = Endomorphism { images };
        if !map.is_homomorphism(group) {
            return Err(Error::InvalidEndomorphism("not multiplicative".into()));
        }
        Ok(map)
    }

    pub fn image_index(&self, index: usize) -> usize {
        self.images[index]
    }

    pub fn apply(&self, group: &PermGroup, x: &Permutation) -> Permutation {
        let i = group.index_of(x).expect("element of the group");
        group.elements()[self.images[i]].clone()
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = alloc::vec![false; self.images.len()];
        for &i in &self.images {
            if seen[i] {
                return false;
            }
            seen[i] = true;
        }
        true
    }

    pub fn kills(&self, group: &PermGroup, x: &Permutation) -> bool {
        self.apply(group, x).is_identity()
    }

    /// Finds `s` with `self = (x -> s x s^-1)`, scanning the group.
    pub fn inner_witness(&self, group: &PermGroup) -> Option<Permutation> {
        group
            .elements()
            .iter()
            .find(|s| {
                group
                    .generators()
                    .iter()
                    .all(|g| s.conjugate(g) == self.apply(group, g))
            })
            .cloned()
    }

    fn is_homomorphism(&self, group: &PermGroup) -> bool {
        let els = group.elements();
        els.iter().enumerate().all(|(i, x)| {
            group.generators().iter().all(|g| {
                let xg = group.index_of(&x.compose(g)).expect("closed");
                let gi = group.index_of(g).expect("generator");
                let lhs = &els[self.images[xg]];
                let rhs = els[self.images[i]].compose(&els[self.images[gi]]);
                *lhs == rhs
            })
        })
    }
}

/// Every endomorphism of a small group, by brute force over generator images.
pub fn endomorphisms(group: &PermGroup) -> Result<Vec<Endomorphism>> {
    let n = group.order() as u64;
    let k = group.generators().len() as u32;
    let work = n.checked_pow(k).unwrap_or(u64::MAX);
    if work > ENDOMORPHISM_SEARCH_LIMIT {
        return Err(Error::Undecidable(format!(
            "exhaustive endomorphism search needs {}^{} assignments",
            n, k
        )));
    }
    let mut out = Vec::new();
    let mut choice = alloc::vec![0usize; k as usize];
    loop {
        if let Some(map) = extend_generator_images(group, &choice) {
            out.push(map);
        }
        // odometer over assignments
        let mut pos = 0;
        loop {
            if pos == choice.len() {
                return Ok(out);
            }
            choice[pos] += 1;
            if choice[pos] < n as usize {
                break;
            }
            choice[pos] = 0;
            pos += 1;
        }
    }
}

/// Trivial centre and every automorphism inner, decided by brute force.
pub fn is_complete(group: &PermGroup) -> Result<bool> {
    if group.center().order() != 1 {
        return Ok(false);
    }
    Ok(endomorphisms(group)?
        .iter()
        .filter(|f| f.is_bijective())
        .all(|f| f.inner_witness(group).is_some()))
}

fn extend_generator_images(group: &PermGroup, gen_images: &[usize]) -> Option<Endomorphism> {
    let els = group.elements();
    let gens = group.generators();
    let unset = usize::MAX;
    let mut images = alloc::vec![unset; els.len()];
    let e = group.index_of(&group.identity())?;
    images[e] = e;
    let mut frontier = alloc::vec![e];
    while let Some(i) = frontier.pop() {
        for (g, &gi) in gens.iter().zip(gen_images) {
            let j = group.index_of(&els[i].compose(g))?;
            let want = group.index_of(&els[images[i]].compose(&els[gi]))?;
            if images[j] == unset {
                images[j] = want;
                frontier.push(j);
            } else if images[j] != want {
                return None;
            }
        }
    }
    Some(Endomorphism { images })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::catalog;

    #[test]
    fn s3_has_ten_endomorphisms() {
        // 6 automorphisms, 3 maps onto a Z/2, and the trivial map
        let s3 = catalog::symmetric(3);
        let ends = endomorphisms(&s3).unwrap();
        assert_eq!(ends.len(), 10);
        assert_eq!(ends.iter().filter(|f| f.is_bijective()).count(), 6);
        assert!(is_complete(&s3).unwrap());
    }

    #[test]
    fn abelian_groups_are_not_complete() {
        assert!(!is_complete(&catalog::cyclic(3)).unwrap());
        assert!(!is_complete(&catalog::dihedral(4)).unwrap());
    }

    #[test]
    fn s4_is_complete_and_z5_has_five_endomorphisms() {
        assert!(is_complete(&catalog::symmetric(4)).unwrap());
        assert_eq!(endomorphisms(&catalog::cyclic(5)).unwrap().len(), 5);
    }

    #[test]
    fn inner_map_has_witness() {
        let s4 = catalog::symmetric(4);
        let s = Permutation::from_cycles(4, &[&[1, 3, 4]]).unwrap();
        let f = Endomorphism::inner(&s4, &s).unwrap();
        let w = f.inner_witness(&s4).unwrap();
        for x in s4.elements() {
            assert_eq!(w.conjugate(x), s.conjugate(x));
        }
    }

    #[test]
    fn rejects_non_homomorphic_images() {
        let z4 = catalog::cyclic(4);
        let bad = Permutation::from_cycles(4, &[&[1, 2, 3, 4]]).unwrap();
        // generator of order 4 sent to itself is fine; a non-member is not
        assert!(Endomorphism::from_generator_images(&z4, &[bad]).is_ok());
        let outside = Permutation::from_cycles(4, &[&[1, 2]]).unwrap();
        assert!(Endomorphism::from_generator_images(&z4, &[outside]).is_err());
    }
}
