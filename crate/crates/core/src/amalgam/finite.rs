use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use super::{FactorOracle, Order};
use crate::error::{Error, Result};
use crate::permgroup::{FiniteGroup, PermGroup, Permutation};

/// A finite group as an amalgam factor, with the right-coset section of the
/// edge subgroup tabulated up front.
///
/// The canonical representative of `H g` is its least element under the
/// group's element ordering.
#[derive(Clone)]
pub struct FiniteFactor<G: FiniteGroup, H> {
    group: G,
    edge: Vec<H>,
    to_elem: BTreeMap<H, G::Elem>,
    to_edge: BTreeMap<G::Elem, H>,
    // indexed like group.elements(): (edge part, index of the representative)
    split: Vec<(H, usize)>,
    transversal: Vec<G::Elem>,
}

impl<G: FiniteGroup, H: fmt::Debug> fmt::Debug for FiniteFactor<G, H> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteFactor")
            .field("order", &self.group.order())
            .field("edge_order", &self.edge.len())
            .finish()
    }
}

impl<G, H> FiniteFactor<G, H>
where
    G: FiniteGroup,
    H: Clone + Ord + fmt::Debug,
{
    /// `embedding` lists each edge element with its image in `group`; the
    /// images must form a subgroup.
    pub fn new(group: G, embedding: Vec<(H, G::Elem)>) -> Result<Self> {
        let mut to_elem = BTreeMap::new();
        let mut to_edge = BTreeMap::new();
        for (h, g) in embedding {
            if !group.contains(&g) {
                return Err(Error::NotSubgroup(format!(
                    "edge image {:?} lies outside the factor",
                    g
                )));
            }
            if to_edge.insert(g.clone(), h.clone()).is_some() || to_elem.insert(h, g).is_some() {
                return Err(Error::EdgeInconsistent(
                    "edge embedding is not injective".into(),
                ));
            }
        }
        if !to_edge.contains_key(&group.identity()) {
            return Err(Error::NotSubgroup("edge images miss the identity".into()));
        }
        for x in to_edge.keys() {
            for y in to_edge.keys() {
                if !to_edge.contains_key(&group.mul(x, y)) {
                    return Err(Error::NotSubgroup(
                        "edge images are not closed under products".into(),
                    ));
                }
            }
        }

        let n = group.order();
        let mut split: Vec<Option<(H, usize)>> = alloc::vec![None; n];
        let mut reps = Vec::new();
        for i in 0..n {
            if split[i].is_some() {
                continue;
            }
            let g = &group.elements()[i];
            let coset: Vec<G::Elem> = to_edge.keys().map(|h| group.mul(h, g)).collect();
            let rep = coset.iter().min().expect("nonempty coset").clone();
            let rep_index = group.index_of(&rep).expect("closed");
            let rep_inv = group.inv(&rep);
            for x in coset {
                let h = to_edge[&group.mul(&x, &rep_inv)].clone();
                let j = group.index_of(&x).expect("closed");
                split[j] = Some((h, rep_index));
            }
            reps.push(rep);
        }
        let split = split
            .into_iter()
            .map(|s| s.expect("every element assigned"))
            .collect();
        // left cosets gH are the inverses of right cosets Hg
        let mut transversal: Vec<G::Elem> = reps.iter().map(|r| group.inv(r)).collect();
        let e = group.identity();
        transversal.sort_by_key(|x| *x != e);
        let edge = to_elem.keys().cloned().collect();
        Ok(FiniteFactor {
            group,
            edge,
            to_elem,
            to_edge,
            split,
            transversal,
        })
    }

    pub fn group(&self) -> &G {
        &self.group
    }

    /// Number of cosets `[G : H]`, the valence of this factor's tree vertices.
    pub fn index(&self) -> usize {
        self.transversal.len()
    }

    /// Nonidentity canonical right-coset representatives.
    pub fn coset_representatives(&self) -> Vec<G::Elem> {
        let mut reps: Vec<G::Elem> = self
            .split
            .iter()
            .map(|(_, r)| *r)
            .collect::<alloc::collections::BTreeSet<_>>()
            .into_iter()
            .map(|i| self.group.elements()[i].clone())
            .collect();
        let e = self.group.identity();
        reps.retain(|r| *r != e);
        reps
    }

    /// The edge element `h` with `embed_edge(h) = g`, if `g` lies in `H`.
    pub fn edge_of(&self, g: &G::Elem) -> Option<&H> {
        self.to_edge.get(g)
    }
}

impl FiniteFactor<PermGroup, Permutation> {
    /// `sub <= group`, with the edge carried by the permutations of `sub`.
    pub fn over_subgroup(group: PermGroup, sub: &PermGroup) -> Result<Self> {
        let pairs = sub
            .elements()
            .iter()
            .map(|x| (x.clone(), x.clone()))
            .collect();
        Self::new(group, pairs)
    }
}

impl<G, H> FactorOracle for FiniteFactor<G, H>
where
    G: FiniteGroup,
    H: Clone + Ord + fmt::Debug,
{
    type Elem = G::Elem;
    type Edge = H;

    fn identity(&self) -> G::Elem {
        self.group.identity()
    }
    fn mul(&self, x: &G::Elem, y: &G::Elem) -> G::Elem {
        self.group.mul(x, y)
    }
    fn inv(&self, x: &G::Elem) -> G::Elem {
        self.group.inv(x)
    }
    fn embed_edge(&self, h: &H) -> G::Elem {
        self.to_elem
            .get(h)
            .unwrap_or_else(|| panic!("{:?} is not an edge element", h))
            .clone()
    }
    fn edge_split(&self, g: &G::Elem) -> (H, G::Elem) {
        let i = self
            .group
            .index_of(g)
            .unwrap_or_else(|| panic!("{:?} is not in the factor", g));
        let (h, r) = &self.split[i];
        (h.clone(), self.group.elements()[*r].clone())
    }
    fn edge_contains(&self, g: &G::Elem) -> bool {
        self.to_edge.contains_key(g)
    }
    fn edge_elements(&self) -> Option<&[H]> {
        Some(&self.edge)
    }
    fn elements(&self) -> Option<&[G::Elem]> {
        Some(self.group.elements())
    }
    fn left_transversal(&self) -> Option<&[G::Elem]> {
        Some(&self.transversal)
    }
    fn order_of(&self, g: &G::Elem) -> Order {
        Order::Finite(self.group.element_order(g))
    }
}
