use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::permgroup::{endomorphisms, FiniteGroup, PermGroup, Permutation};

/// Groups at most this large get an exhaustive endomorphism search for P5
/// when they are not simple.
pub const P5_SEARCH_CAP: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Undecided,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Undecided => "undecided",
        }
    }
}

/// Outcome of one property, with a witness for failures (and for some
/// passes, such as the simplicity argument behind P5).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyResult {
    pub id: &'static str,
    pub description: &'static str,
    pub status: Status,
    pub witness: Option<String>,
}

impl PropertyResult {
    fn new(id: &'static str, description: &'static str, ok: bool, witness: Option<String>) -> Self {
        PropertyResult {
            id,
            description,
            status: if ok { Status::Pass } else { Status::Fail },
            witness,
        }
    }
}

pub const DESCRIPTIONS: [(&str, &str); 8] = [
    ("P1", "a has order p"),
    ("P2", "b is not in N"),
    ("P3", "b^2 = e"),
    ("P4", "only e commutes with both a and b"),
    (
        "P5",
        "every endomorphism of S is an automorphism or kills a and b",
    ),
    ("P6", "S has no element of order p^2"),
    ("P7", "p does not divide |N/A|"),
    ("P8", "N and bNb^-1 intersect trivially"),
];

/// The parts of the property list that depend only on `(S, a, p)`,
/// precomputed so that many candidates `b` can be checked cheaply.
#[derive(Clone, Debug)]
pub struct PropertyChecker {
    s: PermGroup,
    a: Permutation,
    p: u64,
    a_group: PermGroup,
    n_group: PermGroup,
    centralizer_a: PermGroup,
    simple: bool,
    p1: PropertyResult,
    p6: PropertyResult,
    p7: PropertyResult,
}

impl PropertyChecker {
    pub fn new(s: &PermGroup, a: &Permutation, p: u64) -> Result<Self> {
        if !s.contains(a) {
            return Err(Error::NotSubgroup(format!("a = {} is not in S", a)));
        }
        let a_group = s.cyclic_subgroup(a);
        let n_group = s.normalizer(&a_group)?;
        let order = a.order();
        let p1 = PropertyResult::new(
            "P1",
            DESCRIPTIONS[0].1,
            order == p && p > 2 && crate::permgroup::is_prime(p),
            (order != p || p <= 2).then(|| format!("order of a is {}, p = {}", order, p)),
        );
        let p6_witness = s.elements().iter().find(|x| x.order() == p * p);
        let p6 = PropertyResult::new(
            "P6",
            DESCRIPTIONS[5].1,
            p6_witness.is_none(),
            p6_witness.map(|x| format!("{} has order {}", x, p * p)),
        );
        let quotient = (n_group.order() / a_group.order()) as u64;
        let p7 = PropertyResult::new(
            "P7",
            DESCRIPTIONS[6].1,
            !quotient.is_multiple_of(p),
            quotient
                .is_multiple_of(p)
                .then(|| format!("|N/A| = {}", quotient)),
        );
        Ok(PropertyChecker {
            s: s.clone(),
            a: a.clone(),
            p,
            simple: s.is_simple(),
            centralizer_a: s.centralizer(core::slice::from_ref(a)),
            a_group,
            n_group,
            p1,
            p6,
            p7,
        })
    }

    pub fn group(&self) -> &PermGroup {
        &self.s
    }

    pub fn a(&self) -> &Permutation {
        &self.a
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// `A = <a>`.
    pub fn a_group(&self) -> &PermGroup {
        &self.a_group
    }

    /// `N = N_S(A)`.
    pub fn n_group(&self) -> &PermGroup {
        &self.n_group
    }

    pub fn is_simple(&self) -> bool {
        self.simple
    }

    pub fn p2(&self, b: &Permutation) -> PropertyResult {
        let inside = self.n_group.contains(b);
        PropertyResult::new(
            "P2",
            DESCRIPTIONS[1].1,
            !inside,
            inside.then(|| format!("{} lies in N", b)),
        )
    }

    pub fn p3(&self, b: &Permutation) -> PropertyResult {
        let sq = b.compose(b);
        PropertyResult::new(
            "P3",
            DESCRIPTIONS[2].1,
            sq.is_identity(),
            (!sq.is_identity()).then(|| format!("b^2 = {}", sq)),
        )
    }

    pub fn p4(&self, b: &Permutation) -> PropertyResult {
        let witness = self
            .centralizer_a
            .elements()
            .iter()
            .find(|k| !k.is_identity() && k.compose(b) == b.compose(k))
            .cloned();
        PropertyResult::new(
            "P4",
            DESCRIPTIONS[3].1,
            witness.is_none(),
            witness.map(|k| format!("{} commutes with a and b", k)),
        )
    }

    /// Decided by simplicity when possible, by exhaustive search on small
    /// groups, and left undecided otherwise.
    pub fn p5(&self, b: &Permutation) -> PropertyResult {
        let (id, description) = ("P5", DESCRIPTIONS[4].1);
        if self.simple {
            return PropertyResult {
                id,
                description,
                status: Status::Pass,
                witness: Some("S is simple: every kernel is trivial or all of S".to_string()),
            };
        }
        if self.s.order() > P5_SEARCH_CAP {
            return PropertyResult {
                id,
                description,
                status: Status::Undecided,
                witness: Some(format!(
                    "S is not simple and |S| = {} exceeds the search cap {}",
                    self.s.order(),
                    P5_SEARCH_CAP
                )),
            };
        }
        match endomorphisms(&self.s) {
            Ok(all) => {
                let bad = all.iter().find(|f| {
                    !f.is_bijective() && !(f.kills(&self.s, &self.a) && f.kills(&self.s, b))
                });
                PropertyResult::new(
                    id,
                    description,
                    bad.is_none(),
                    bad.map(|f| {
                        let imgs: Vec<String> = self
                            .s
                            .generators()
                            .iter()
                            .map(|g| format!("{} -> {}", g, f.apply(&self.s, g)))
                            .collect();
                        format!("endomorphism {}", imgs.join(", "))
                    }),
                )
            }
            Err(e) => PropertyResult {
                id,
                description,
                status: Status::Undecided,
                witness: Some(e.to_string()),
            },
        }
    }

    pub fn p8(&self, b: &Permutation) -> PropertyResult {
        let conj = self.n_group.conjugate_by(b);
        let witness = self
            .n_group
            .elements()
            .iter()
            .find(|x| !x.is_identity() && conj.contains(x))
            .cloned();
        PropertyResult::new(
            "P8",
            DESCRIPTIONS[7].1,
            witness.is_none(),
            witness.map(|x| format!("{} lies in N and in bNb^-1", x)),
        )
    }

    /// P1 through P8 for the candidate `b`.
    pub fn check(&self, b: &Permutation) -> Vec<PropertyResult> {
        alloc::vec![
            self.p1.clone(),
            self.p2(b),
            self.p3(b),
            self.p4(b),
            self.p5(b),
            self.p6.clone(),
            self.p7.clone(),
            self.p8(b),
        ]
    }

    /// Involutions passing P2, P4 and P8, in ascending order.
    pub fn choose_b(&self) -> Vec<Permutation> {
        self.s
            .involutions()
            .into_iter()
            .filter(|b| {
                self.p2(b).status == Status::Pass
                    && self.p4(b).status == Status::Pass
                    && self.p8(b).status == Status::Pass
            })
            .collect()
    }
}

/// The order-`p` elements of `S` up to conjugacy, each class represented
/// by its least element.
pub fn order_p_class_representatives(s: &PermGroup, p: u64) -> Vec<Permutation> {
    s.conjugacy_classes()
        .into_iter()
        .filter(|cls| cls[0].order() == p)
        .map(|cls| cls.into_iter().min().expect("nonempty class"))
        .collect()
}

/// For every `k` in `N`: `k b k^-1 b^-1` in `A` implies `k = e`. Returns the
/// first violating `k`.
pub fn remark_xxa_witness(
    n_group: &PermGroup,
    a_group: &PermGroup,
    b: &Permutation,
) -> Option<Permutation> {
    let b_inv = b.inverse();
    n_group
        .elements()
        .iter()
        .find(|k| {
            !k.is_identity()
                && a_group.contains(&k.compose(b).compose(&k.inverse()).compose(&b_inv))
        })
        .cloned()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::catalog;

    #[test]
    fn cyclic_group_fails_p2() {
        let s = catalog::cyclic(5);
        let a = s.generators()[0].clone();
        let checker = PropertyChecker::new(&s, &a, 5).unwrap();
        let b = s.identity();
        let results = checker.check(&b);
        assert_eq!(results[1].status, Status::Fail);
        assert_eq!(results[0].status, Status::Pass);
        assert!(checker.choose_b().is_empty());
    }

    #[test]
    fn wrong_p_fails_p1_with_order() {
        let s = catalog::m11();
        let a = s.elements_of_order(11)[0].clone();
        let checker = PropertyChecker::new(&s, &a, 5).unwrap();
        let p1 = &checker.check(&s.involutions()[0])[0];
        assert_eq!(p1.status, Status::Fail);
        assert!(p1.witness.as_deref().unwrap().contains("11"));
    }

    #[test]
    fn abelian_groups_have_no_valid_b() {
        let s = catalog::cyclic(15);
        let a = s.generators()[0].pow(5);
        assert!(PropertyChecker::new(&s, &a, 3)
            .unwrap()
            .choose_b()
            .is_empty());
    }

    #[test]
    fn p5_on_small_groups() {
        // S3 with a = (1,2,3): the sign map S3 -> S3 kills a but not a transposition
        let s = catalog::symmetric(3);
        let a = Permutation::from_cycles(3, &[&[1, 2, 3]]).unwrap();
        let checker = PropertyChecker::new(&s, &a, 3).unwrap();
        let t = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
        assert_eq!(checker.p5(&t).status, Status::Fail);
        assert!(!checker.is_simple());
        // S5 is above the cap and not simple
        let s5 = catalog::symmetric(5);
        let c5 = Permutation::from_cycles(5, &[&[1, 2, 3, 4, 5]]).unwrap();
        let ch = PropertyChecker::new(&s5, &c5, 5).unwrap();
        assert_eq!(
            ch.p5(&Permutation::from_cycles(5, &[&[1, 2]]).unwrap())
                .status,
            Status::Undecided
        );
    }

    #[test]
    fn remark_xxa_counterexample_in_dihedral_group() {
        // in D5 the reflection b normalizes A = N = S, and k = a gives [a, b] = a^2
        let s = catalog::dihedral(5);
        let a = Permutation::from_cycles(5, &[&[1, 2, 3, 4, 5]]).unwrap();
        let checker = PropertyChecker::new(&s, &a, 5).unwrap();
        let b = s.involutions()[0].clone();
        let k = remark_xxa_witness(checker.n_group(), checker.a_group(), &b).unwrap();
        assert!(!k.is_identity());
        // b = e makes every commutator trivial
        assert!(remark_xxa_witness(checker.n_group(), checker.a_group(), &s.identity()).is_some());
    }
}
