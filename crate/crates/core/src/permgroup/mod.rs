//! Finite permutation groups with full closure enumeration.

pub mod catalog;
mod group;
mod hom;
mod perm;

pub use group::{is_prime, prime_divisors, FiniteGroup, PermGroup, DEFAULT_CAP};
pub use hom::{endomorphisms, is_complete, Endomorphism, ENDOMORPHISM_SEARCH_LIMIT};
pub use perm::Permutation;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use alloc::collections::BTreeSet;
    use alloc::vec::Vec;

    fn m11_a() -> Permutation {
        catalog::m11_generators()[0].clone()
    }

    /// All normal subgroups, as unions of conjugacy classes that are closed
    /// under products.
    fn brute_force_normal_subgroups(g: &PermGroup) -> Vec<BTreeSet<Permutation>> {
        let classes = g.conjugacy_classes();
        let (id, rest): (Vec<_>, Vec<_>) = classes.into_iter().partition(|c| c[0].is_identity());
        let mut out = Vec::new();
        for mask in 0u32..(1 << rest.len()) {
            let mut set: BTreeSet<Permutation> = id[0].iter().cloned().collect();
            for (i, c) in rest.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    set.extend(c.iter().cloned());
                }
            }
            if !g.order().is_multiple_of(set.len()) {
                continue;
            }
            let closed = set
                .iter()
                .all(|x| set.iter().all(|y| set.contains(&x.compose(y))));
            if closed {
                out.push(set);
            }
        }
        out
    }

    #[test]
    fn generate_examples() {
        assert_eq!(PermGroup::generate(3, &[]).unwrap().order(), 1);
        let t = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
        assert_eq!(PermGroup::generate(3, &[t]).unwrap().order(), 2);
        let s = catalog::m11();
        assert_eq!(s.order(), 7920);
        assert!(s.is_simple());
    }

    #[test]
    fn generate_errors() {
        let t = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
        assert_eq!(
            PermGroup::generate(4, &[t]).unwrap_err(),
            Error::DegreeMismatch {
                expected: 4,
                found: 3
            }
        );
        let [x, y] = catalog::m11_generators();
        assert_eq!(
            PermGroup::generate_with_cap(11, &[x, y], 1000).unwrap_err(),
            Error::CapExceeded { cap: 1000 }
        );
    }

    #[test]
    fn m11_is_transitive() {
        let s = catalog::m11();
        let orbit: BTreeSet<usize> = s.elements().iter().map(|g| g.apply(0)).collect();
        assert_eq!(orbit.len(), 11);
    }

    #[test]
    fn element_orders() {
        let s = catalog::m11();
        assert_eq!(s.identity().order(), 1);
        assert_eq!(m11_a().order(), 11);
        let [x, y] = catalog::m11_generators();
        // frozen from an iterated-composition oracle
        assert_eq!(x.compose(&y).order(), 11);
        let mut k = 1;
        let xy = x.compose(&y);
        let mut z = xy.clone();
        while !z.is_identity() {
            z = z.compose(&xy);
            k += 1;
        }
        assert_eq!(k, 11);
        for g in s.elements() {
            assert_eq!(7920 % g.order(), 0);
        }
    }

    #[test]
    fn normalizer_and_centralizer_in_m11() {
        let s = catalog::m11();
        let a = s.cyclic_subgroup(&m11_a());
        let n = s.normalizer(&a).unwrap();
        assert_eq!(n.order(), 55);
        assert!(a.is_normal_in(&n));
        assert_eq!(s.normalizer(&s).unwrap().order(), 7920);
        let c = s.centralizer(&[m11_a()]);
        assert_eq!(c.elements(), a.elements());
        assert_eq!(s.centralizer(&[s.identity()]).order(), 7920);
        // closure of outputs
        for x in n.elements() {
            for y in n.generators() {
                assert!(n.contains(&x.compose(y)));
            }
        }
    }

    #[test]
    fn normalizer_requires_subgroup() {
        let s3 = catalog::symmetric(3);
        let z4 = catalog::cyclic(4);
        let u = PermGroup::generate(4, &[z4.generators()[0].clone()]).unwrap();
        let s4 = catalog::symmetric(4);
        assert!(s4.normalizer(&u).is_ok());
        let foreign = PermGroup::generate(3, &[]).unwrap();
        assert!(matches!(
            s4.normalizer(&foreign),
            Err(Error::NotSubgroup(_))
        ));
        assert!(s3.normalizer(&s3).is_ok());
    }

    #[test]
    fn sylow_subgroups_of_the_normalizer() {
        let s = catalog::m11();
        let n = s.normalizer(&s.cyclic_subgroup(&m11_a())).unwrap();
        let fives = n.sylow_subgroups(5).unwrap();
        assert_eq!(fives.len(), 11);
        assert_eq!(fives.len() % 5, 1);
        assert!(fives.iter().all(|p| p.order() == 5));
        let elevens = n.sylow_subgroups(11).unwrap();
        assert_eq!(elevens.len(), 1);
        assert_eq!(
            elevens[0].elements(),
            s.cyclic_subgroup(&m11_a()).elements()
        );
        let t = PermGroup::trivial(3);
        assert_eq!(t.sylow_subgroups(2).unwrap().len(), 1);
        assert!(matches!(t.sylow_subgroups(4), Err(Error::NotPrime(4))));
    }

    #[test]
    fn sylow_two_of_s4_by_join_search() {
        let s4 = catalog::symmetric(4);
        let twos = s4.sylow_subgroups(2).unwrap();
        assert_eq!(twos.len(), 3);
        assert!(twos.iter().all(|p| p.order() == 8));
    }

    #[test]
    fn involutions() {
        let z2 = catalog::cyclic(2);
        assert_eq!(z2.involutions().len(), 1);
        let s = catalog::m11();
        assert_eq!(s.involutions().len(), 165);
    }

    #[test]
    fn simplicity() {
        assert!(!catalog::cyclic(4).is_simple());
        assert!(catalog::cyclic(5).is_simple());
        assert!(catalog::cyclic(7).is_simple());
        assert!(catalog::alternating(5).is_simple());
        assert!(!catalog::symmetric(4).is_simple());
        assert!(!PermGroup::trivial(2).is_simple());
    }

    #[test]
    fn simplicity_matches_brute_force_normal_subgroups() {
        let groups = [
            catalog::cyclic(4),
            catalog::cyclic(5),
            catalog::cyclic(6),
            catalog::symmetric(3),
            catalog::symmetric(4),
            catalog::alternating(4),
            catalog::alternating(5),
            catalog::dihedral(5),
            catalog::dihedral(4),
        ];
        for g in &groups {
            let normals = brute_force_normal_subgroups(g);
            let simple = g.order() > 1 && normals.len() == 2;
            assert_eq!(g.is_simple(), simple, "{:?}", g);
        }
    }

    #[test]
    fn complements() {
        let s = catalog::m11();
        let a = s.cyclic_subgroup(&m11_a());
        let n = s.normalizer(&a).unwrap();
        let q = n.complement(&a).unwrap();
        assert_eq!(q.order(), 5);
        assert_eq!(q.intersection(&a).order(), 1);
        assert_eq!(a.complement(&a).unwrap().order(), 1);
        let s3 = catalog::symmetric(3);
        let a3 = catalog::alternating(3);
        let a3 = PermGroup::generate(3, a3.generators()).unwrap();
        let q = s3.complement(&a3).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(q.intersection(&a3).order(), 1);
    }

    #[test]
    fn complement_errors() {
        let z4 = catalog::cyclic(4);
        let sq = z4.cyclic_subgroup(&z4.generators()[0].pow(2));
        assert!(matches!(z4.complement(&sq), Err(Error::NoComplement(_))));
        let s3 = catalog::symmetric(3);
        let t = s3.cyclic_subgroup(&Permutation::from_cycles(3, &[&[1, 2]]).unwrap());
        assert!(matches!(s3.complement(&t), Err(Error::NoComplement(_))));
    }

    #[test]
    fn complement_by_join_search_in_a4() {
        // V4 is normal in A4 with a cyclic complement of order 3
        let a4 = catalog::alternating(4);
        let v = a4
            .subgroup(&[
                Permutation::from_cycles(4, &[&[1, 2], &[3, 4]]).unwrap(),
                Permutation::from_cycles(4, &[&[1, 3], &[2, 4]]).unwrap(),
            ])
            .unwrap();
        let q = a4.complement(&v).unwrap();
        assert_eq!(q.order(), 3);
        // A5 x nothing: coprime complement of a non-cyclic shape, S3 in S3 x Z5
        let gens = [
            Permutation::from_cycles(8, &[&[1, 2, 3]]).unwrap(),
            Permutation::from_cycles(8, &[&[1, 2]]).unwrap(),
            Permutation::from_cycles(8, &[&[4, 5, 6, 7, 8]]).unwrap(),
        ];
        let g = PermGroup::generate(8, &gens).unwrap();
        let z5 = g.cyclic_subgroup(&gens[2]);
        let q = g.complement(&z5).unwrap();
        assert_eq!(q.order(), 6);
        assert_eq!(q.intersection(&z5).order(), 1);
    }
}
