use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use super::perm::Permutation;
use crate::error::{Error, Result};

/// Default enumeration cap for group closures.
pub const DEFAULT_CAP: usize = 1_000_000;

/// A finite group with a fully enumerated, sorted element list.
pub trait FiniteGroup {
    type Elem: Clone + Ord + fmt::Debug;

    fn identity(&self) -> Self::Elem;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn inv(&self, x: &Self::Elem) -> Self::Elem;
    /// All elements in ascending order.
    fn elements(&self) -> &[Self::Elem];

    fn order(&self) -> usize {
        self.elements().len()
    }

    fn index_of(&self, x: &Self::Elem) -> Option<usize> {
        self.elements().binary_search(x).ok()
    }

    fn contains(&self, x: &Self::Elem) -> bool {
        self.index_of(x).is_some()
    }

    fn element_order(&self, x: &Self::Elem) -> u64 {
        let e = self.identity();
        let mut k = 1;
        let mut y = x.clone();
        while y != e {
            y = self.mul(&y, x);
            k += 1;
        }
        k
    }
}

/// A finitely generated permutation group with its closure enumerated.
///
/// Subgroups are plain `PermGroup`s of the ambient degree; membership is
/// containment in the enumerated closure.
#[derive(Clone, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("generators", &self.generators)
            .field("order", &self.elements.len())
            .finish()
    }
}

impl FiniteGroup for PermGroup {
    type Elem = Permutation;

    fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }
    fn mul(&self, x: &Permutation, y: &Permutation) -> Permutation {
        x.compose(y)
    }
    fn inv(&self, x: &Permutation) -> Permutation {
        x.inverse()
    }
    fn elements(&self) -> &[Permutation] {
        &self.elements
    }
    fn element_order(&self, x: &Permutation) -> u64 {
        x.order()
    }
}

impl PermGroup {
    /// Closure of `gens` under products, by breadth-first search.
    pub fn generate(degree: usize, gens: &[Permutation]) -> Result<Self> {
        Self::generate_with_cap(degree, gens, DEFAULT_CAP)
    }

    pub fn generate_with_cap(degree: usize, gens: &[Permutation], cap: usize) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: g.degree(),
            });
        }
        let identity = Permutation::identity(degree);
        let mut seen = BTreeSet::new();
        seen.insert(identity.clone());
        let mut frontier = alloc::vec![identity];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for x in &frontier {
                for g in gens {
                    let y = x.compose(g);
                    if !seen.contains(&y) {
                        if seen.len() >= cap {
                            return Err(Error::CapExceeded { cap });
                        }
                        seen.insert(y.clone());
                        next.push(y);
                    }
                }
            }
            frontier = next;
        }
        Ok(PermGroup {
            degree,
            generators: gens.to_vec(),
            elements: seen.into_iter().collect(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
            elements: alloc::vec![Permutation::identity(degree)],
        }
    }

    /// Wraps a set already known to be closed under products, choosing a
    /// small generating set greedily.
    pub(crate) fn from_closed_set(degree: usize, mut elements: Vec<Permutation>) -> Self {
        elements.sort();
        elements.dedup();
        let mut generators = Vec::new();
        let mut current = PermGroup::trivial(degree);
        for x in &elements {
            if !current.contains(x) {
                generators.push(x.clone());
                current = PermGroup::generate_with_cap(degree, &generators, usize::MAX)
                    .expect("subset of a finite closed set");
            }
        }
        debug_assert_eq!(current.elements, elements);
        PermGroup {
            degree,
            generators,
            elements,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn subgroup(&self, gens: &[Permutation]) -> Result<PermGroup> {
        if let Some(g) = gens.iter().find(|g| !self.contains(g)) {
            return Err(Error::NotSubgroup(format!("{} is not in the group", g)));
        }
        PermGroup::generate(self.degree, gens)
    }

    pub fn cyclic_subgroup(&self, x: &Permutation) -> PermGroup {
        let mut elements = Vec::new();
        let mut y = Permutation::identity(self.degree);
        loop {
            elements.push(y.clone());
            y = y.compose(x);
            if y.is_identity() {
                break;
            }
        }
        elements.sort();
        PermGroup {
            degree: self.degree,
            generators: alloc::vec![x.clone()],
            elements,
        }
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|x| other.contains(x))
    }

    /// True iff `self` is normalised by every generator of `ambient`.
    pub fn is_normal_in(&self, ambient: &PermGroup) -> bool {
        self.is_subgroup_of(ambient)
            && ambient.generators.iter().all(|g| {
                self.generators
                    .iter()
                    .all(|u| self.contains(&g.conjugate(u)))
            })
    }

    /// `x * U * x^-1 == U`, tested on generators.
    pub fn is_normalized_by(&self, x: &Permutation) -> bool {
        self.generators
            .iter()
            .all(|u| self.contains(&x.conjugate(u)))
    }

    /// Elements of `self` that are also in `other`.
    pub fn intersection(&self, other: &PermGroup) -> PermGroup {
        let common = self
            .elements
            .iter()
            .filter(|x| other.contains(x))
            .cloned()
            .collect();
        PermGroup::from_closed_set(self.degree, common)
    }

    /// `x * self * x^-1`.
    pub fn conjugate_by(&self, x: &Permutation) -> PermGroup {
        let elements = self.elements.iter().map(|u| x.conjugate(u)).collect();
        let gens: Vec<_> = self.generators.iter().map(|u| x.conjugate(u)).collect();
        let mut elements: Vec<Permutation> = elements;
        elements.sort();
        PermGroup {
            degree: self.degree,
            generators: gens,
            elements,
        }
    }

    /// `N_G(U) = {g : g U g^-1 = U}` by exhaustive scan of `self`.
    pub fn normalizer(&self, u: &PermGroup) -> Result<PermGroup> {
        if !u.is_subgroup_of(self) {
            return Err(Error::NotSubgroup(format!(
                "group of order {} is not contained in the ambient group",
                u.order()
            )));
        }
        let elements = self
            .elements
            .iter()
            .filter(|g| u.is_normalized_by(g))
            .cloned()
            .collect();
        Ok(PermGroup::from_closed_set(self.degree, elements))
    }

    /// Elements commuting with every member of `xs`.
    pub fn centralizer(&self, xs: &[Permutation]) -> PermGroup {
        let elements = self
            .elements
            .iter()
            .filter(|g| xs.iter().all(|x| g.compose(x) == x.compose(g)))
            .cloned()
            .collect();
        PermGroup::from_closed_set(self.degree, elements)
    }

    pub fn center(&self) -> PermGroup {
        self.centralizer(&self.generators)
    }

    /// All `g != e` with `g^2 = e`, in ascending order.
    pub fn involutions(&self) -> Vec<Permutation> {
        self.elements
            .iter()
            .filter(|g| !g.is_identity() && g.compose(g).is_identity())
            .cloned()
            .collect()
    }

    pub fn elements_of_order(&self, k: u64) -> Vec<Permutation> {
        self.elements
            .iter()
            .filter(|g| g.order() == k)
            .cloned()
            .collect()
    }

    /// Conjugacy classes, each sorted, ordered by their least element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<Permutation>> {
        let mut assigned = BTreeSet::new();
        let mut classes = Vec::new();
        for x in &self.elements {
            if assigned.contains(x) {
                continue;
            }
            let mut class = BTreeSet::new();
            class.insert(x.clone());
            let mut frontier = alloc::vec![x.clone()];
            while let Some(y) = frontier.pop() {
                for g in &self.generators {
                    let z = g.conjugate(&y);
                    if class.insert(z.clone()) {
                        frontier.push(z);
                    }
                }
            }
            assigned.extend(class.iter().cloned());
            classes.push(class.into_iter().collect());
        }
        classes
    }

    /// Smallest normal subgroup of `self` containing `xs`.
    pub fn normal_closure(&self, xs: &[Permutation]) -> PermGroup {
        let mut gens: Vec<Permutation> = xs.to_vec();
        let mut current = PermGroup::generate_with_cap(self.degree, &gens, usize::MAX)
            .expect("inside a finite group");
        loop {
            let missing = self.generators.iter().find_map(|g| {
                gens.iter()
                    .map(|h| g.conjugate(h))
                    .find(|c| !current.contains(c))
            });
            match missing {
                Some(c) => {
                    gens.push(c);
                    current = PermGroup::generate_with_cap(self.degree, &gens, usize::MAX)
                        .expect("inside a finite group");
                }
                None => return current,
            }
        }
    }

    /// No nontrivial proper normal subgroup; the trivial group is not simple.
    pub fn is_simple(&self) -> bool {
        let n = self.order();
        if n == 1 {
            return false;
        }
        if is_prime(n as u64) {
            return true;
        }
        self.conjugacy_classes()
            .iter()
            .filter(|class| !class[0].is_identity())
            .all(|class| self.normal_closure(&class[..1]).order() == n)
    }

    /// Sylow `p`-subgroups.
    ///
    /// Exhaustive when the Sylow order is `p`; for higher powers a join search
    /// over `p`-elements is used, limited to groups of order at most 2000.
    pub fn sylow_subgroups(&self, p: u64) -> Result<Vec<PermGroup>> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let mut target = 1usize;
        let mut rest = self.order();
        while rest.is_multiple_of(p as usize) {
            rest /= p as usize;
            target *= p as usize;
        }
        if target == 1 {
            return Ok(alloc::vec![PermGroup::trivial(self.degree)]);
        }
        let p_elements: Vec<&Permutation> = self
            .elements
            .iter()
            .filter(|g| !g.is_identity() && is_power_of(g.order(), p))
            .collect();
        let mut found: BTreeSet<Vec<Permutation>> = BTreeSet::new();
        let mut frontier = Vec::new();
        for x in &p_elements {
            let c = self.cyclic_subgroup(x);
            if found.insert(c.elements.clone()) {
                frontier.push(c);
            }
        }
        if target as u64 != p && self.order() > 2000 {
            return Err(Error::UnsupportedSylow(format!(
                "Sylow order {} in a group of order {}",
                target,
                self.order()
            )));
        }
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for sub in &frontier {
                if sub.order() == target {
                    continue;
                }
                for x in &p_elements {
                    if sub.contains(x) || !sub.is_normalized_by(x) {
                        continue;
                    }
                    let mut gens = sub.generators.clone();
                    gens.push((*x).clone());
                    let joined = PermGroup::generate(self.degree, &gens)?;
                    if found.insert(joined.elements.clone()) {
                        next.push(joined);
                    }
                }
            }
            frontier = next;
        }
        Ok(found
            .into_iter()
            .filter(|els| els.len() == target)
            .map(|els| PermGroup::from_closed_set(self.degree, els))
            .collect())
    }

    /// A complement `Q` to a normal subgroup `a` of coprime index.
    ///
    /// Cyclic candidates are tried first in ascending order of generator;
    /// otherwise subgroups of coprime-order elements are grown by joins.
    pub fn complement(&self, a: &PermGroup) -> Result<PermGroup> {
        if !a.is_normal_in(self) {
            return Err(Error::NoComplement("subgroup is not normal".into()));
        }
        let index = self.order() / a.order();
        if num_integer::gcd(index, a.order()) != 1 {
            return Err(Error::NoComplement(format!(
                "orders {} and {} are not coprime",
                a.order(),
                index
            )));
        }
        if index == 1 {
            return Ok(PermGroup::trivial(self.degree));
        }
        let candidates: Vec<&Permutation> = self
            .elements
            .iter()
            .filter(|g| !g.is_identity() && (index as u64).is_multiple_of(g.order()))
            .collect();
        if let Some(x) = candidates.iter().find(|g| g.order() == index as u64) {
            return Ok(self.cyclic_subgroup(x));
        }
        let mut seen: BTreeSet<Vec<Permutation>> = BTreeSet::new();
        let mut frontier = Vec::new();
        for x in &candidates {
            let c = self.cyclic_subgroup(x);
            if seen.insert(c.elements.clone()) {
                frontier.push(c);
            }
        }
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for sub in &frontier {
                for x in &candidates {
                    if sub.contains(x) {
                        continue;
                    }
                    let mut gens = sub.generators.clone();
                    gens.push((*x).clone());
                    let joined = PermGroup::generate(self.degree, &gens)?;
                    if !index.is_multiple_of(joined.order())
                        || !seen.insert(joined.elements.clone())
                    {
                        continue;
                    }
                    if joined.order() == index {
                        return Ok(joined);
                    }
                    next.push(joined);
                }
            }
            frontier = next;
        }
        Err(Error::NoComplement(format!(
            "no subgroup of order {} avoids the normal subgroup",
            index
        )))
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors in ascending order.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn is_power_of(mut n: u64, p: u64) -> bool {
    while n > 1 && n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}
