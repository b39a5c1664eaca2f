//! Expansion of labeled marker components into weighted gadgets, and the
//! formulas recovering α of the decomposed trigraph from α of a gadget.

use serde::{Deserialize, Serialize};

use super::{ComponentLabel, GadgetShape, PreLabel};
use crate::error::Error;
use crate::trigraph::{Adjacency, Trigraph, VertexSet, Weight};

/// Origin of an expansion vertex: a vertex of the labeled trigraph, or the
/// clone `v'` of one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExpVertex {
    pub base: usize,
    pub prime: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expansion {
    pub trigraph: Trigraph,
    pub origin: Vec<ExpVertex>,
    index: Vec<Option<usize>>,
    prime: Vec<Option<usize>>,
}

impl Expansion {
    /// Expansion vertex standing for `v` itself (absent for deleted vertices).
    pub fn vertex_of(&self, v: usize) -> Option<usize> {
        self.index.get(v).copied().flatten()
    }

    /// The clone `v'`, if one was added.
    pub fn prime_of(&self, v: usize) -> Option<usize> {
        self.prime.get(v).copied().flatten()
    }

    /// The expansion `X'` of a vertex set: surviving vertices plus clones.
    pub fn expand_set(&self, x: &VertexSet) -> VertexSet {
        x.iter().flat_map(|v| [self.vertex_of(v), self.prime_of(v)]).flatten().collect()
    }
}

struct Gadget {
    weights: Vec<(usize, i128)>,
    strong: Vec<(usize, usize)>,
    delete: Option<usize>,
    /// `(base, partner, closed)`: clone of `base`, antiadjacent to the clone
    /// and the vertex `partner`, adjacent to `base` when `closed`.
    clones: Vec<(usize, usize, bool)>,
}

fn gadget(cl: &ComponentLabel) -> Gadget {
    let (a, b) = (cl.component.a, cl.component.b);
    let c = cl.component.c;
    let w = |x: Weight| x as i128;
    match cl.label.pre {
        PreLabel::ComplementOdd { alpha_a, alpha_b, .. } => Gadget {
            weights: vec![(a, w(alpha_a)), (b, w(alpha_b))],
            strong: vec![(a, b)],
            delete: None,
            clones: vec![],
        },
        PreLabel::ComplementEven { alpha_a, alpha_b, .. } => Gadget {
            weights: vec![(a, w(alpha_a)), (b, w(alpha_b))],
            strong: vec![],
            delete: c,
            clones: vec![],
        },
        PreLabel::Odd { alpha_ac, alpha_bc, alpha_c, alpha_x } => {
            let (ac, bc, cc, x) = (w(alpha_ac), w(alpha_bc), w(alpha_c), w(alpha_x));
            match cl.label.gadget {
                GadgetShape::TwoClones => Gadget {
                    weights: vec![(a, ac + bc - cc - x), (b, ac + bc - cc - x)],
                    strong: vec![(a, b)],
                    delete: None,
                    clones: vec![(a, b, false), (b, a, false)],
                },
                GadgetShape::ClosedClone => Gadget {
                    weights: vec![(a, ac - cc), (b, bc - cc)],
                    strong: vec![(a, b)],
                    delete: None,
                    clones: vec![(a, b, true)],
                },
            }
        }
        PreLabel::Even { alpha_ac, alpha_bc, alpha_c, alpha_x } => {
            let (ac, bc, cc, x) = (w(alpha_ac), w(alpha_bc), w(alpha_c), w(alpha_x));
            let c = c.expect("even component has a middle vertex");
            Gadget {
                weights: vec![(a, x - bc), (b, x - ac), (c, x + cc - ac - bc)],
                strong: vec![(a, c), (c, b)],
                delete: None,
                clones: vec![],
            }
        }
    }
}

fn clone_weight(cl: &ComponentLabel, base: usize) -> i128 {
    match cl.label.pre {
        PreLabel::Odd { alpha_ac, alpha_bc, alpha_x, .. } => {
            if base == cl.component.a {
                alpha_x as i128 - alpha_bc as i128
            } else {
                alpha_x as i128 - alpha_ac as i128
            }
        }
        _ => 0,
    }
}

/// Expansion with every vertex active.
pub fn expand(t: &Trigraph, labels: &[ComponentLabel]) -> Result<Expansion, Error> {
    expand_active(t, labels, &vec![true; t.vertex_count()])
}

/// Expansion whose vertex weights are multiplied by the activity of their
/// base vertex; inactive vertices and their clones get weight 0.
pub(crate) fn expand_active(t: &Trigraph, labels: &[ComponentLabel], active: &[bool]) -> Result<Expansion, Error> {
    let n = t.vertex_count();
    let mut weight: Vec<i128> = (0..n).map(|v| t.weight(v) as i128).collect();
    let mut deleted = vec![false; n];
    let mut partner = vec![usize::MAX; n];
    let mut closed = vec![false; n];
    let mut clone_w = vec![0i128; n];
    let mut has_clone = vec![false; n];
    let mut work = t.clone();
    for cl in labels {
        if let Some(msg) = cl.component.shape_violation(t, cl.label.pre.kind()) {
            return Err(Error::Contract(msg));
        }
        let g = gadget(cl);
        for (v, x) in g.weights {
            weight[v] = x;
        }
        for (u, v) in g.strong {
            work.set(u, v, Adjacency::StrongEdge);
        }
        if let Some(c) = g.delete {
            deleted[c] = true;
        }
        for (base, p, cl_closed) in g.clones {
            has_clone[base] = true;
            partner[base] = p;
            closed[base] = cl_closed;
            clone_w[base] = clone_weight(cl, base);
        }
    }
    let mut origin: Vec<ExpVertex> = (0..n).filter(|&v| !deleted[v]).map(|base| ExpVertex { base, prime: false }).collect();
    origin.extend((0..n).filter(|&v| has_clone[v]).map(|base| ExpVertex { base, prime: true }));
    let m = origin.len();
    let mut index = vec![None; n];
    let mut prime = vec![None; n];
    for (i, o) in origin.iter().enumerate() {
        if o.prime {
            prime[o.base] = Some(i);
        } else {
            index[o.base] = Some(i);
        }
    }
    let mut e = Trigraph::new(m);
    let mut weights = Vec::with_capacity(m);
    for (i, o) in origin.iter().enumerate() {
        let w = if o.prime { clone_w[o.base] } else { weight[o.base] };
        if w < 0 {
            return Err(Error::Contract(format!("negative gadget weight at vertex {}", o.base)));
        }
        weights.push(if active[o.base] { w as Weight } else { 0 });
        for (j, p) in origin.iter().enumerate().skip(i + 1) {
            let adj = match (o.prime, p.prime) {
                (false, false) => work.adjacency(o.base, p.base),
                (true, true) => clone_link(t, o.base, partner[o.base], p.base),
                (true, false) => clone_to(t, o.base, partner[o.base], closed[o.base], p.base),
                (false, true) => clone_to(t, p.base, partner[p.base], closed[p.base], o.base),
            };
            e.set(i, j, adj);
        }
    }
    Ok(Expansion { trigraph: e.with_weights(weights), origin, index, prime })
}

/// Adjacency between the clone of `base` and the vertex `u`.
fn clone_to(t: &Trigraph, base: usize, partner: usize, closed: bool, u: usize) -> Adjacency {
    if u == base {
        return if closed { Adjacency::StrongEdge } else { Adjacency::StrongAnti };
    }
    if u != partner && t.is_adjacent(base, u) {
        Adjacency::StrongEdge
    } else {
        Adjacency::StrongAnti
    }
}

/// Adjacency between the clones of `base` and of `other`.
fn clone_link(t: &Trigraph, base: usize, partner: usize, other: usize) -> Adjacency {
    if other != partner && t.is_adjacent(base, other) {
        Adjacency::StrongEdge
    } else {
        Adjacency::StrongAnti
    }
}

/// α of the decomposed trigraph from α of the gadget on the big side.
pub fn recover_alpha(pre: &PreLabel, gadget_alpha: Weight) -> Weight {
    match *pre {
        PreLabel::ComplementOdd { alpha_x, .. } | PreLabel::ComplementEven { alpha_x, .. } => gadget_alpha.max(alpha_x),
        PreLabel::Odd { alpha_c, .. } => gadget_alpha + alpha_c,
        PreLabel::Even { alpha_ac, alpha_bc, alpha_x, .. } => gadget_alpha + alpha_ac + alpha_bc - alpha_x,
    }
}
