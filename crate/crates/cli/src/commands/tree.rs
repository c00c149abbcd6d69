use std::collections::BTreeSet;

use loctower::amalgam::{Amalgam, Elem, FactorOracle, Side};
use loctower::bstree::{FixedPointClass, Tree, TreeVertex, Vertex};
use serde::Serialize;

use crate::display::{k_form, l_form, toy_form};
use crate::dot::{self, DotVertex};
use crate::error::{bail, CliResult};
use crate::report::Format;
use crate::words::{self, Expr};

use super::Target;

/// A query against the tree of the target amalgam. Words name vertex
/// representatives; sides are 1 or 2.
#[derive(Clone, Debug)]
pub enum TreeQuery {
    Ball {
        radius: usize,
        centre: Option<(String, u8)>,
    },
    Dist {
        from: (String, u8),
        to: (String, u8),
    },
    Axis {
        word: String,
        window: usize,
    },
    Geodesic {
        word: String,
    },
}

#[derive(Serialize)]
struct VertexOut {
    rep: String,
    side: u8,
    #[serde(skip_serializing_if = "Option::is_none")]
    depth: Option<usize>,
}

#[derive(Serialize)]
#[serde(tag = "query", rename_all = "lowercase")]
enum TreeOut {
    Ball {
        radius: usize,
        centre: String,
        vertex_count: usize,
        edge_count: usize,
        vertices: Vec<VertexOut>,
        edges: Vec<(usize, usize)>,
    },
    Dist {
        distance: usize,
        path: Vec<VertexOut>,
    },
    Axis {
        word: String,
        translation_length: usize,
        fixed_points: String,
        path: Vec<VertexOut>,
    },
    Geodesic {
        word: String,
        path: Vec<VertexOut>,
    },
}

fn side_of(n: u8) -> CliResult<Side> {
    match n {
        1 => Ok(Side::Left),
        2 => Ok(Side::Right),
        _ => bail!("vertex sides are 1 or 2, not {}", n),
    }
}

type Eval<'a, X> = Box<dyn Fn(&Expr) -> CliResult<X> + 'a>;
type Show<'a, X> = Box<dyn Fn(&X) -> String + 'a>;

struct Ctx<'a, F1: FactorOracle, F2: FactorOracle<Edge = F1::Edge>> {
    tree: Tree<'a, F1, F2>,
    eval: Eval<'a, Elem<F1, F2>>,
    show: Show<'a, Elem<F1, F2>>,
}

impl<'a, F1, F2> Ctx<'a, F1, F2>
where
    F1: FactorOracle,
    F2: FactorOracle<Edge = F1::Edge>,
{
    fn element(&self, word: &str) -> CliResult<Elem<F1, F2>> {
        (self.eval)(&words::parse(word)?)
    }

    fn vertex(&self, word: &str, side: u8) -> CliResult<Vertex<F1, F2>> {
        Ok(self.tree.vertex(self.element(word)?, side_of(side)?))
    }

    fn out(&self, v: &TreeVertex<Elem<F1, F2>>, depth: Option<usize>) -> VertexOut {
        VertexOut {
            rep: (self.show)(&v.rep),
            side: v.side.index(),
            depth,
        }
    }

    fn outs(&self, vs: &[Vertex<F1, F2>]) -> Vec<VertexOut> {
        vs.iter().map(|v| self.out(v, None)).collect()
    }

    fn run(&self, q: &TreeQuery) -> CliResult<TreeOut> {
        let am: &Amalgam<F1, F2> = self.tree.amalgam();
        Ok(match q {
            TreeQuery::Ball { radius, centre } => {
                let (ball, label) = match centre {
                    None => (am.edge_ball(*radius)?, "edge G1 -- G2".to_string()),
                    Some((w, s)) => {
                        let v = self.vertex(w, *s)?;
                        let label = format!("{} G{}", (self.show)(&v.rep), s);
                        (am.ball(&v, *radius)?, label)
                    }
                };
                TreeOut::Ball {
                    radius: *radius,
                    centre: label,
                    vertex_count: ball.len(),
                    edge_count: ball.edges.len(),
                    vertices: ball
                        .vertices
                        .iter()
                        .zip(&ball.depth)
                        .map(|(v, d)| self.out(v, Some(*d)))
                        .collect(),
                    edges: ball.edges.clone(),
                }
            }
            TreeQuery::Dist { from, to } => {
                let p = self.vertex(&from.0, from.1)?;
                let r = self.vertex(&to.0, to.1)?;
                TreeOut::Dist {
                    distance: self.tree.distance(&p, &r),
                    path: self.outs(&self.tree.path(&p, &r)),
                }
            }
            TreeQuery::Axis { word, window } => {
                let g = self.element(word)?;
                match self.tree.fixed_point_class(&g)? {
                    FixedPointClass::NoFixedVertex => {
                        let axis = self.tree.axis(&g, *window)?;
                        TreeOut::Axis {
                            word: word.clone(),
                            translation_length: axis.translation_length,
                            fixed_points: "none".into(),
                            path: self.outs(&axis.path),
                        }
                    }
                    FixedPointClass::UniqueVertex(v) => TreeOut::Axis {
                        word: word.clone(),
                        translation_length: 0,
                        fixed_points: "unique vertex".into(),
                        path: self.outs(&[v]),
                    },
                    FixedPointClass::FixesEdgePair => TreeOut::Axis {
                        word: word.clone(),
                        translation_length: 0,
                        fixed_points: "an edge".into(),
                        path: Vec::new(),
                    },
                }
            }
            TreeQuery::Geodesic { word } => {
                let g = self.element(word)?;
                TreeOut::Geodesic {
                    word: word.clone(),
                    path: self.outs(&self.tree.geodesic(&g)),
                }
            }
        })
    }
}

fn label(v: &VertexOut) -> String {
    format!("{} G{}", v.rep, v.side)
}

fn text(out: &TreeOut) -> String {
    let list = |vs: &[VertexOut]| -> String {
        vs.iter()
            .enumerate()
            .map(|(i, v)| match v.depth {
                Some(d) => format!("  {:>4}  depth {}  {}\n", i, d, label(v)),
                None => format!("  {:>4}  {}\n", i, label(v)),
            })
            .collect()
    };
    match out {
        TreeOut::Ball {
            radius,
            centre,
            vertex_count,
            edge_count,
            vertices,
            ..
        } => format!(
            "ball of radius {} about {}\nvertices: {}\nedges: {}\n{}",
            radius,
            centre,
            vertex_count,
            edge_count,
            list(vertices)
        ),
        TreeOut::Dist { distance, path } => {
            format!("distance: {}\npath:\n{}", distance, list(path))
        }
        TreeOut::Axis {
            word,
            translation_length,
            fixed_points,
            path,
        } => format!(
            "element: {}\ntranslation length: {}\nfixed points: {}\npath:\n{}",
            word,
            translation_length,
            fixed_points,
            list(path)
        ),
        TreeOut::Geodesic { word, path } => format!(
            "geodesic of {}\nvertices: {}\n{}",
            word,
            path.len(),
            list(path)
        ),
    }
}

fn dot_out(out: &TreeOut) -> String {
    let chain = |name: &str, vs: &[VertexOut]| {
        dot::path(
            name,
            vs.iter()
                .map(|v| DotVertex {
                    label: label(v),
                    highlight: false,
                })
                .collect(),
        )
    };
    match out {
        TreeOut::Ball {
            vertices, edges, ..
        } => {
            let vs: Vec<DotVertex> = vertices
                .iter()
                .map(|v| DotVertex {
                    label: label(v),
                    highlight: v.depth == Some(0),
                })
                .collect();
            dot::graph("ball", &vs, edges, &BTreeSet::new())
        }
        TreeOut::Dist { path, .. } => chain("path", path),
        TreeOut::Axis { path, .. } => chain("axis", path),
        TreeOut::Geodesic { path, .. } => chain("geodesic", path),
    }
}

fn render(out: &TreeOut, format: Format) -> CliResult<String> {
    Ok(match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(out)?;
            s.push('\n');
            s
        }
        Format::Text => text(out),
        Format::Dot => dot_out(out),
    })
}

pub fn tree(target: &Target, q: &TreeQuery, format: Format) -> CliResult<String> {
    let out = match target {
        Target::K(t) => Ctx {
            tree: Tree::new(t.k()),
            eval: Box::new(|e| words::eval_k(t, e)),
            show: Box::new(|x| k_form(t, x).text()),
        }
        .run(q)?,
        Target::L(t) => Ctx {
            tree: Tree::new(t.l()),
            eval: Box::new(|e| words::eval_l(t, e)),
            show: Box::new(|x| l_form(t, x).text()),
        }
        .run(q)?,
        Target::Toy(_, am) => Ctx {
            tree: Tree::new(am),
            eval: Box::new(|e| words::eval_toy(am, e)),
            show: Box::new(|x| toy_form(x).text()),
        }
        .run(q)?,
    };
    render(&out, format)
}
