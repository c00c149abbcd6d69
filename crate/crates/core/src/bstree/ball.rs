use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec::Vec;

use super::{TreeVertex, Vertex};
use crate::amalgam::{Amalgam, Elem, FactorOracle, Side};
use crate::error::{Error, Result};

/// The least normal form in the coset `rep * G_side`, found by brute force
/// over the factor. Two vertices are equal iff their keys are.
pub fn canonical_key<F1, F2>(
    am: &Amalgam<F1, F2>,
    v: &Vertex<F1, F2>,
) -> Result<(Side, Elem<F1, F2>)>
where
    F1: FactorOracle,
    F2: FactorOracle<Edge = F1::Edge>,
{
    let best = match v.side {
        Side::Left => am
            .left()
            .elements()
            .ok_or(Error::NotEnumerable("first factor"))?
            .iter()
            .map(|x| am.multiply(&v.rep, &am.embed_left(x)))
            .min(),
        Side::Right => am
            .right()
            .elements()
            .ok_or(Error::NotEnumerable("second factor"))?
            .iter()
            .map(|x| am.multiply(&v.rep, &am.embed_right(x)))
            .min(),
    };
    Ok((v.side, best.expect("factors are nonempty")))
}

/// A finite ball of the tree explored by breadth-first search. Neighbours
/// of `x G_i` are `x t G_j` for `t` over a left transversal of `H` in `G_i`,
/// and vertices are deduplicated by [`canonical_key`].
///
/// The search never consults the distance formula, so it serves as an
/// independent oracle for it.
#[derive(Clone, Debug)]
pub struct Ball<X> {
    pub vertices: Vec<TreeVertex<X>>,
    /// Distance from the centre (or from the nearer end of the centre edge).
    pub depth: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
    pub adjacency: Vec<Vec<usize>>,
    keys: BTreeMap<(Side, X), usize>,
}

impl<X: Clone + Ord> Ball<X> {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Breadth-first distances inside the ball from vertex `i`. A ball in a
    /// tree is a subtree, so these are tree distances.
    pub fn distances_from(&self, i: usize) -> Vec<usize> {
        let mut dist = alloc::vec![usize::MAX; self.len()];
        dist[i] = 0;
        let mut queue = VecDeque::from([i]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adjacency[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }
}

fn neighbours<F1, F2>(am: &Amalgam<F1, F2>, v: &Vertex<F1, F2>) -> Result<Vec<Vertex<F1, F2>>>
where
    F1: FactorOracle,
    F2: FactorOracle<Edge = F1::Edge>,
{
    let side = v.side.other();
    let out = match v.side {
        Side::Left => am
            .left()
            .left_transversal()
            .ok_or(Error::NotEnumerable("first factor"))?
            .iter()
            .map(|t| TreeVertex {
                rep: am.multiply(&v.rep, &am.embed_left(t)),
                side,
            })
            .collect(),
        Side::Right => am
            .right()
            .left_transversal()
            .ok_or(Error::NotEnumerable("second factor"))?
            .iter()
            .map(|t| TreeVertex {
                rep: am.multiply(&v.rep, &am.embed_right(t)),
                side,
            })
            .collect(),
    };
    Ok(out)
}

fn search<F1, F2>(
    am: &Amalgam<F1, F2>,
    centres: Vec<Vertex<F1, F2>>,
    radius: usize,
) -> Result<Ball<Elem<F1, F2>>>
where
    F1: FactorOracle,
    F2: FactorOracle<Edge = F1::Edge>,
{
    let mut ball = Ball {
        vertices: Vec::new(),
        depth: Vec::new(),
        edges: Vec::new(),
        adjacency: Vec::new(),
        keys: BTreeMap::new(),
    };
    let mut queue = VecDeque::new();
    for c in centres {
        let i = ball.insert(canonical_key(am, &c)?, c, 0);
        if i + 1 == ball.len() {
            queue.push_back(i);
        }
    }
    if ball.len() == 2 {
        ball.link(0, 1);
    }
    while let Some(u) = queue.pop_front() {
        if ball.depth[u] == radius {
            continue;
        }
        for w in neighbours(am, &ball.vertices[u])? {
            let key = canonical_key(am, &w)?;
            if let Some(&j) = ball.keys.get(&key) {
                if !ball.adjacency[u].contains(&j) {
                    ball.link(u, j);
                }
                continue;
            }
            let d = ball.depth[u] + 1;
            let j = ball.insert(key, w, d);
            ball.link(u, j);
            queue.push_back(j);
        }
    }
    Ok(ball)
}

impl<X: Clone + Ord> Ball<X> {
    fn insert(&mut self, key: (Side, X), v: TreeVertex<X>, depth: usize) -> usize {
        if let Some(&i) = self.keys.get(&key) {
            return i;
        }
        let i = self.vertices.len();
        self.keys.insert(key, i);
        self.vertices.push(v);
        self.depth.push(depth);
        self.adjacency.push(Vec::new());
        i
    }

    fn link(&mut self, u: usize, w: usize) {
        self.edges.push((u.min(w), u.max(w)));
        self.adjacency[u].push(w);
        self.adjacency[w].push(u);
    }
}

impl<F1, F2> Amalgam<F1, F2>
where
    F1: FactorOracle,
    F2: FactorOracle<Edge = F1::Edge>,
{
    /// All vertices within `radius` of `centre`.
    pub fn ball(&self, centre: &Vertex<F1, F2>, radius: usize) -> Result<Ball<Elem<F1, F2>>> {
        search(self, alloc::vec![centre.clone()], radius)
    }

    /// All vertices within `radius` of either end of the fundamental edge.
    pub fn edge_ball(&self, radius: usize) -> Result<Ball<Elem<F1, F2>>> {
        let ends = alloc::vec![
            TreeVertex {
                rep: self.identity(),
                side: Side::Left
            },
            TreeVertex {
                rep: self.identity(),
                side: Side::Right
            },
        ];
        search(self, ends, radius)
    }

    /// Index of `v` in `ball`, if present.
    pub fn locate(&self, ball: &Ball<Elem<F1, F2>>, v: &Vertex<F1, F2>) -> Result<Option<usize>> {
        Ok(ball.keys.get(&canonical_key(self, v)?).copied())
    }
}
