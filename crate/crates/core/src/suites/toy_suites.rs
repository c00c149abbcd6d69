use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{show, SuiteReport};
use crate::amalgam::{FactorOracle, Side};
use crate::bstree::{Tree, TreeVertex};
use crate::error::Result;
use crate::permgroup::{FiniteGroup, Permutation};
use crate::toy::{self, ToyAmalgam, ToyElem};

/// Radius of the explored ball around the fundamental edge.
pub const TREE_RADIUS: usize = 6;
/// Half-width of the axis window, in translations.
const AXIS_WINDOW: usize = 8;

/// The displacement identity `l(Q, gQ) = m + 2d` for hyperbolic `g`, with
/// `d` measured by the ball search, and `l(Q, gQ) = 2 d(Q, Fix g)` for
/// elliptic `g`. Also checks that the least displacement over the ball is
/// the translation length.
pub fn serre_24_iv(am: &ToyAmalgam, samples: usize, seed: u64) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("serre-24-iv", seed, samples);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let t = Tree::new(am);
    let ball = am.edge_ball(TREE_RADIUS)?;
    for _ in 0..samples {
        let len = rng.gen_range(1..=TREE_RADIUS);
        let g = toy::random_word(am, &mut rng, len);
        let m = t.translation_length(&g);
        let min = ball
            .vertices
            .iter()
            .map(|q| t.distance(q, &t.act(&g, q)))
            .min()
            .unwrap_or(0);
        rep.check(min == m, || {
            format!(
                "least displacement {} != translation length {} for {}",
                min,
                m,
                show(&g)
            )
        });
        let qi = rng.gen_range(0..ball.len());
        let q = &ball.vertices[qi];
        let bfs = ball.distances_from(qi);
        let moved = t.distance(q, &t.act(&g, q));
        if m > 0 {
            rep.count("hyperbolic", 1);
            let axis = t.axis(&g, AXIS_WINDOW)?;
            let d = t.distance_to_path(q, &axis.path);
            let mut d_bfs = None;
            for v in &axis.path {
                if let Some(j) = am.locate(&ball, v)? {
                    d_bfs = Some(d_bfs.map_or(bfs[j], |x: usize| x.min(bfs[j])));
                }
            }
            if let Some(db) = d_bfs {
                rep.check(db == d, || {
                    format!(
                        "axis distance {} != ball distance {} for {}",
                        d,
                        db,
                        show(&g)
                    )
                });
            }
            rep.check(moved == m + 2 * d, || {
                format!(
                    "l(Q, gQ) = {} but m + 2d = {} for {}",
                    moved,
                    m + 2 * d,
                    show(&g)
                )
            });
        } else {
            rep.count("elliptic", 1);
            let d = (0..ball.len())
                .filter(|&j| t.fixes(&g, &ball.vertices[j]))
                .map(|j| bfs[j])
                .min();
            rep.check(d.map(|d| moved == 2 * d).unwrap_or(false), || {
                format!(
                    "l(Q, gQ) = {} but fixed set at {:?} for {}",
                    moved,
                    d,
                    show(&g)
                )
            });
        }
    }
    Ok(rep)
}

/// The distance formula against breadth-first distances on every pair of
/// the ball, and the geodesic vertex lists of random words starting in
/// the first factor against both parity cases.
pub fn tree_bfs(am: &ToyAmalgam, radius: usize, samples: usize, seed: u64) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("tree-bfs", seed, samples);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let t = Tree::new(am);
    let ball = am.edge_ball(radius)?;
    rep.count("ball_vertices", ball.len() as u64);
    for i in 0..ball.len() {
        let bfs = ball.distances_from(i);
        for (w, &b) in ball.vertices.iter().zip(&bfs).skip(i) {
            let d = t.distance(&ball.vertices[i], w);
            rep.check(d == b, || {
                format!(
                    "distance {} != ball distance {} for {:?} and {:?}",
                    d, b, ball.vertices[i], w
                )
            });
        }
    }
    let g2 = am
        .locate(&ball, &t.base(Side::Right))?
        .expect("base vertex is in the ball");
    let from_g2 = ball.distances_from(g2);
    for _ in 0..samples {
        let len = rng.gen_range(0..radius.max(1));
        let g = loop {
            let g = toy::random_word(am, &mut rng, len);
            if g.first_side() != Some(Side::Right) {
                break g;
            }
        };
        let expected = listed_geodesic(am, &g);
        let got = t.geodesic(&g);
        let parity = if g.len() % 2 == 0 { "even" } else { "odd" };
        rep.count(parity, 1);
        rep.check(
            got.len() == expected.len()
                && got.iter().zip(&expected).all(|(x, y)| t.vertex_eq(x, y)),
            || format!("geodesic of {} differs from the {} case", show(&g), parity),
        );
        let end = TreeVertex {
            rep: am.inverse(&g),
            side: Side::Right,
        };
        let mut idx = Vec::with_capacity(got.len());
        for v in &got {
            idx.push(am.locate(&ball, v)?);
        }
        let located: Option<Vec<usize>> = idx.into_iter().collect();
        let ok = match located {
            Some(ix) => {
                let last = *ix.last().expect("nonempty");
                let steps = ix.windows(2).all(|w| ball.distances_from(w[0])[w[1]] == 1);
                steps && from_g2[last] + 1 == ix.len() && t.vertex_eq(got.last().unwrap(), &end)
            }
            None => false,
        };
        rep.check(ok, || {
            format!("geodesic of {} is not a ball geodesic", show(&g))
        });
    }
    Ok(rep)
}

/// The vertex list of the geodesic from `G2` to `g^-1 G2` for
/// `g = h r1 ... rn` with `r1` in `G1`, written out per parity of `n`.
fn listed_geodesic(am: &ToyAmalgam, g: &ToyElem) -> Vec<TreeVertex<ToyElem>> {
    let letters = g.letters();
    let n = letters.len();
    let mut out = alloc::vec![TreeVertex {
        rep: am.identity(),
        side: Side::Right
    }];
    // n odd: rn lies in G1 and the path passes through G1 itself
    let mut side = if n.is_multiple_of(2) {
        Side::Left
    } else {
        Side::Right
    };
    if n % 2 == 1 {
        out.push(TreeVertex {
            rep: am.identity(),
            side: Side::Left,
        });
    }
    let mut x = am.identity();
    for r in letters.iter().rev() {
        x = am.multiply(&x, &am.inverse(&am.embed_letter(r)));
        out.push(TreeVertex {
            rep: x.clone(),
            side,
        });
        side = side.other();
    }
    out
}

/// The cyclic conjugacy test on every pair of cyclically reduced words of
/// length at most `max_len`, against exhaustive conjugation by all words
/// of length at most `max_len`.
pub fn conjugacy(am: &ToyAmalgam, max_len: usize) -> Result<SuiteReport> {
    let words = toy::all_words(am, max_len);
    let reduced: Vec<&ToyElem> = words.iter().filter(|w| w.is_cyclically_reduced()).collect();
    let mut rep = SuiteReport::new("conjugacy", 0, reduced.len());
    rep.count("conjugators", words.len() as u64);
    for x in &reduced {
        let orbit: BTreeSet<ToyElem> = words.iter().map(|g| am.conjugate(g, x)).collect();
        for y in &reduced {
            let brute = orbit.contains(*y);
            let decided = am.conjugate_cyclic_test(x, y)?;
            if let Some(w) = &decided {
                rep.check(am.conjugate(w, x) == **y, || {
                    format!(
                        "witness {} does not conjugate {} to {}",
                        show(w),
                        show(x),
                        show(y)
                    )
                });
            }
            if brute {
                rep.count("conjugate_pairs", 1);
            }
            rep.check(decided.is_some() == brute, || {
                format!(
                    "decision {} vs search {} for {} and {}",
                    decided.is_some(),
                    brute,
                    show(x),
                    show(y)
                )
            });
        }
    }
    Ok(rep)
}

fn conjugate_in(els: &[Permutation], x: &Permutation, y: &Permutation) -> bool {
    els.iter().any(|g| g.conjugate(x) == *y)
}

/// Conjugacy of second-factor elements in the amalgam versus in the
/// factor. When edge elements fused in the first factor are already fused
/// in the second, every fusion in the amalgam is a counterexample; when
/// they are not, fusions are only counted.
pub fn lemma_2_10(am: &ToyAmalgam) -> Result<SuiteReport> {
    let left = am.left();
    let right = am.right();
    let left_els = left.group().elements();
    let right_els = right.group().elements();
    let edge = left.edge_elements().expect("finite edge");
    let mut hypothesis = true;
    for x in edge {
        for y in edge {
            let fused_left = conjugate_in(left_els, &left.embed_edge(x), &left.embed_edge(y));
            let fused_right = conjugate_in(right_els, &right.embed_edge(x), &right.embed_edge(y));
            if fused_left && !fused_right {
                hypothesis = false;
            }
        }
    }
    let mut rep = SuiteReport::new("lemma-2.10", 0, right_els.len() * right_els.len());
    rep.count("hypothesis_holds", hypothesis as u64);
    let short = toy::all_words(am, 4);
    for x in right_els {
        let gx = am.embed_right(x);
        let orbit: BTreeSet<ToyElem> = short.iter().map(|g| am.conjugate(g, &gx)).collect();
        for y in right_els {
            let gy = am.embed_right(y);
            let w = am.find_conjugator(&gx, &gy)?;
            if let Some(w) = &w {
                rep.check(am.conjugate(w, &gx) == gy, || {
                    format!("witness {} does not conjugate {} to {}", show(w), x, y)
                });
            }
            rep.check(w.is_some() || !orbit.contains(&gy), || {
                format!("missed conjugacy of {} and {}", x, y)
            });
            let in_factor = conjugate_in(right_els, x, y);
            if w.is_some() && !in_factor {
                rep.count("fusions", 1);
                if hypothesis {
                    rep.check(false, || {
                        format!("{} and {} fused outside the factor", x, y)
                    });
                }
            }
        }
    }
    Ok(rep)
}
