//! Trigraphs: graphs whose vertex pairs are strong edges, strong antiedges or
//! switchable pairs, carrying nonnegative integer vertex weights.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Vertex weights are nonnegative integers.
pub type Weight = u64;

/// Hard cap on the number of vertices of a trigraph.
pub const MAX_VERTICES: usize = 4096;

const STRONG_ANTI: i8 = -1;
const SWITCHABLE: i8 = 0;
const STRONG_EDGE: i8 = 1;

/// Value of the adjacency function on one unordered pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Adjacency {
    StrongAnti,
    Switchable,
    StrongEdge,
}

impl Adjacency {
    fn to_theta(self) -> i8 {
        match self {
            Adjacency::StrongAnti => STRONG_ANTI,
            Adjacency::Switchable => SWITCHABLE,
            Adjacency::StrongEdge => STRONG_EDGE,
        }
    }

    fn from_theta(theta: i8) -> Self {
        match theta {
            STRONG_ANTI => Adjacency::StrongAnti,
            SWITCHABLE => Adjacency::Switchable,
            _ => Adjacency::StrongEdge,
        }
    }
}

/// A sorted set of vertex indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn from_mask(mask: &[bool]) -> Self {
        VertexSet(mask.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect())
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn insert(&mut self, v: usize) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, v);
                true
            }
        }
    }

    pub fn remove(&mut self, v: usize) -> bool {
        match self.0.binary_search(&v) {
            Ok(pos) => {
                self.0.remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn to_mask(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; n];
        for v in self.iter() {
            mask[v] = true;
        }
        mask
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).collect()
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.iter().filter(|&v| other.contains(v)).collect()
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.iter().filter(|&v| !other.contains(v)).collect()
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| !other.contains(v))
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    /// Total weight of the set under `weights`, accumulated without overflow.
    pub fn weight(&self, weights: &[Weight]) -> u128 {
        self.iter().map(|v| weights[v] as u128).sum()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        v.into_iter().collect()
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(v: [usize; N]) -> Self {
        v.into_iter().collect()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A simple undirected graph on a dense adjacency matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph { n, adj: vec![false; n * n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loop {u}");
        self.adj[u * self.n + v] = true;
        self.adj[v * self.n + u] = true;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u * self.n + v] = false;
        self.adj[v * self.n + u] = false;
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u * self.n + v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.has_edge(v, u))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).count()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Two-coloring of the graph restricted to `keep` (all vertices if `None`),
    /// or `None` when an odd cycle exists. `true` marks the second side.
    pub fn bipartition(&self, keep: Option<&[bool]>) -> Option<Vec<bool>> {
        let inside = |v: usize| keep.map_or(true, |k| k[v]);
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if !inside(s) || color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for v in 0..self.n {
                    if !inside(v) || !self.has_edge(u, v) {
                        continue;
                    }
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(|c| c.unwrap_or(false)).collect())
    }

    pub fn is_stable(&self, set: &VertexSet) -> bool {
        let s = set.as_slice();
        s.iter().enumerate().all(|(i, &u)| s[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    pub fn is_clique(&self, set: &VertexSet) -> bool {
        let s = set.as_slice();
        s.iter().enumerate().all(|(i, &u)| s[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }
}

/// A weighted trigraph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Trigraph {
    n: usize,
    theta: Vec<i8>,
    weights: Vec<Weight>,
}

impl fmt::Debug for Trigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut edges = Vec::new();
        let mut switchable = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                match self.adjacency(u, v) {
                    Adjacency::StrongEdge => edges.push((u, v)),
                    Adjacency::Switchable => switchable.push((u, v)),
                    Adjacency::StrongAnti => {}
                }
            }
        }
        f.debug_struct("Trigraph")
            .field("n", &self.n)
            .field("weights", &self.weights)
            .field("edges", &edges)
            .field("switchable", &switchable)
            .finish()
    }
}

impl Trigraph {
    /// Trigraph with every pair strongly antiadjacent and unit weights.
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "trigraph with {n} vertices exceeds cap {MAX_VERTICES}");
        Trigraph { n, theta: vec![STRONG_ANTI; n * n], weights: vec![1; n] }
    }

    pub fn try_new(n: usize) -> Result<Self, Error> {
        if n > MAX_VERTICES {
            return Err(Error::SizeCap { n, cap: MAX_VERTICES });
        }
        Ok(Trigraph::new(n))
    }

    /// All-strong trigraph whose full realization is `g`.
    pub fn from_graph(g: &Graph) -> Self {
        let mut t = Trigraph::new(g.vertex_count());
        for (u, v) in g.edges() {
            t.set(u, v, Adjacency::StrongEdge);
        }
        t
    }

    pub fn from_parts(n: usize, edges: &[(usize, usize)], switchable: &[(usize, usize)]) -> Self {
        let mut t = Trigraph::new(n);
        for &(u, v) in edges {
            t.set(u, v, Adjacency::StrongEdge);
        }
        for &(u, v) in switchable {
            t.set(u, v, Adjacency::Switchable);
        }
        t
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn set(&mut self, u: usize, v: usize, a: Adjacency) {
        assert!(u != v, "adjacency is undefined on self-pair {u}");
        let th = a.to_theta();
        self.theta[u * self.n + v] = th;
        self.theta[v * self.n + u] = th;
    }

    pub fn theta(&self, u: usize, v: usize) -> i8 {
        debug_assert!(u != v);
        self.theta[u * self.n + v]
    }

    pub fn adjacency(&self, u: usize, v: usize) -> Adjacency {
        Adjacency::from_theta(self.theta(u, v))
    }

    pub fn is_strongly_adjacent(&self, u: usize, v: usize) -> bool {
        u != v && self.theta(u, v) == STRONG_EDGE
    }

    pub fn is_strongly_antiadjacent(&self, u: usize, v: usize) -> bool {
        u != v && self.theta(u, v) == STRONG_ANTI
    }

    pub fn is_switchable(&self, u: usize, v: usize) -> bool {
        u != v && self.theta(u, v) == SWITCHABLE
    }

    /// Strongly adjacent or semiadjacent.
    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        u != v && self.theta(u, v) >= SWITCHABLE
    }

    /// Strongly antiadjacent or semiadjacent.
    pub fn is_antiadjacent(&self, u: usize, v: usize) -> bool {
        u != v && self.theta(u, v) <= SWITCHABLE
    }

    pub fn weight(&self, v: usize) -> Weight {
        self.weights[v]
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    /// Row-major adjacency values; equal for trigraphs differing only in weights.
    pub fn structure(&self) -> &[i8] {
        &self.theta
    }

    pub fn set_weight(&mut self, v: usize, w: Weight) {
        self.weights[v] = w;
    }

    pub fn with_weights(mut self, weights: Vec<Weight>) -> Self {
        assert_eq!(weights.len(), self.n);
        self.weights = weights;
        self
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn all_vertices(&self) -> VertexSet {
        (0..self.n).collect()
    }

    pub fn strong_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.is_strongly_adjacent(v, u))
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.is_adjacent(v, u))
    }

    pub fn switchable_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.is_switchable(v, u))
    }

    pub fn switchable_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.is_switchable(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn strong_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.is_strongly_adjacent(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_graph(&self) -> bool {
        self.switchable_pairs().is_empty()
    }

    /// Same vertex set, adjacency function negated, weights kept.
    pub fn complement(&self) -> Trigraph {
        Trigraph {
            n: self.n,
            theta: self.theta.iter().map(|&t| -t).collect(),
            weights: self.weights.clone(),
        }
    }

    /// Graph with edge set η(T) ∪ σ(T).
    pub fn full_realization(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.is_adjacent(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Graph with edge set η(T) only.
    pub fn strong_realization(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.is_strongly_adjacent(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Trigraph induced on `vertices`; vertex `i` of the result is `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> Trigraph {
        let k = vertices.len();
        let mut t = Trigraph::new(k);
        for i in 0..k {
            t.weights[i] = self.weights[vertices[i]];
            for j in i + 1..k {
                t.set(i, j, self.adjacency(vertices[i], vertices[j]));
            }
        }
        t
    }

    /// Same trigraph with weights zeroed outside `keep`.
    pub fn zero_outside(&self, keep: &VertexSet) -> Trigraph {
        let mut t = self.clone();
        for v in 0..self.n {
            if !keep.contains(v) {
                t.weights[v] = 0;
            }
        }
        t
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Trigraph {
        let mut t = Trigraph::new(self.n);
        for u in 0..self.n {
            t.weights[perm[u]] = self.weights[u];
            for v in u + 1..self.n {
                t.set(perm[u], perm[v], self.adjacency(u, v));
            }
        }
        t
    }

    pub fn is_strong_stable(&self, set: &VertexSet) -> bool {
        let s = set.as_slice();
        s.iter().enumerate().all(|(i, &u)| s[i + 1..].iter().all(|&v| self.is_strongly_antiadjacent(u, v)))
    }

    pub fn is_strong_clique(&self, set: &VertexSet) -> bool {
        let s = set.as_slice();
        s.iter().enumerate().all(|(i, &u)| s[i + 1..].iter().all(|&v| self.is_strongly_adjacent(u, v)))
    }

    /// `v` strongly adjacent to every vertex of `set` (other than itself).
    pub fn strongly_complete_to(&self, v: usize, set: &VertexSet) -> bool {
        set.iter().all(|u| u == v || self.is_strongly_adjacent(v, u))
    }

    pub fn strongly_anticomplete_to(&self, v: usize, set: &VertexSet) -> bool {
        set.iter().all(|u| u == v || self.is_strongly_antiadjacent(v, u))
    }

    pub fn sets_strongly_complete(&self, a: &VertexSet, b: &VertexSet) -> bool {
        a.iter().all(|v| self.strongly_complete_to(v, b))
    }

    pub fn sets_strongly_anticomplete(&self, a: &VertexSet, b: &VertexSet) -> bool {
        a.iter().all(|v| self.strongly_anticomplete_to(v, b))
    }

    /// Connected components of `T|set` (adjacency includes switchable pairs).
    pub fn components(&self, set: &VertexSet) -> Vec<VertexSet> {
        self.components_by(set, |u, v| self.is_adjacent(u, v))
    }

    /// Anticomponents of `T|set` (antiadjacency includes switchable pairs).
    pub fn anticomponents(&self, set: &VertexSet) -> Vec<VertexSet> {
        self.components_by(set, |u, v| self.is_antiadjacent(u, v))
    }

    fn components_by(&self, set: &VertexSet, linked: impl Fn(usize, usize) -> bool) -> Vec<VertexSet> {
        let verts = set.as_slice();
        let mut seen = vec![false; verts.len()];
        let mut out = Vec::new();
        for s in 0..verts.len() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![verts[s]];
            let mut stack = vec![s];
            while let Some(i) = stack.pop() {
                for j in 0..verts.len() {
                    if !seen[j] && linked(verts[i], verts[j]) {
                        seen[j] = true;
                        comp.push(verts[j]);
                        stack.push(j);
                    }
                }
            }
            out.push(comp.into_iter().collect());
        }
        out
    }
}

impl Serialize for Trigraph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        TrigraphRepr {
            n: self.n,
            weights: self.weights.clone(),
            edges: self.strong_edges().into_iter().map(|(u, v)| [u, v]).collect(),
            switchable: self.switchable_pairs().into_iter().map(|(u, v)| [u, v]).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Trigraph {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = TrigraphRepr::deserialize(deserializer)?;
        if repr.n > MAX_VERTICES || repr.weights.len() != repr.n {
            return Err(serde::de::Error::custom("bad vertex count or weight vector"));
        }
        let mut t = Trigraph::new(repr.n).with_weights(repr.weights);
        for (pairs, a) in [(&repr.edges, Adjacency::StrongEdge), (&repr.switchable, Adjacency::Switchable)] {
            for &[u, v] in pairs {
                if u >= repr.n || v >= repr.n || u == v {
                    return Err(serde::de::Error::custom(format!("bad pair {u} {v}")));
                }
                t.set(u, v, a);
            }
        }
        Ok(t)
    }
}

#[derive(Serialize, Deserialize)]
struct TrigraphRepr {
    n: usize,
    weights: Vec<Weight>,
    edges: Vec<[usize; 2]>,
    switchable: Vec<[usize; 2]>,
}

/// Shape of a switchable component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ComponentShape {
    SinglePair,
    TwoPairPath,
    /// More than two switchable pairs; never occurs in the class.
    Other,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WeightClass {
    Plain,
    Heavy,
    Light,
}

/// A connected component of the graph of switchable pairs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SwitchableComponent {
    pub vertices: VertexSet,
    pub shape: ComponentShape,
    pub weight_class: WeightClass,
    /// For a two-pair path `a - c - b`: `(a, c, b)`; for a single pair `(a, b)`
    /// the middle entry is `None`.
    pub ends: (usize, Option<usize>, usize),
}

impl SwitchableComponent {
    pub fn is_pair(&self) -> bool {
        self.shape == ComponentShape::SinglePair
    }
}

/// Heavy/light classification of a degree-2 vertex `v` of Σ(T) with Σ-neighbors `x`, `y`.
fn classify_middle(t: &Trigraph, v: usize, x: usize, y: usize) -> Option<WeightClass> {
    let rest = || (0..t.vertex_count()).filter(move |&u| u != v && u != x && u != y);
    if t.is_strongly_adjacent(x, y) && rest().all(|u| t.is_strongly_adjacent(v, u)) {
        Some(WeightClass::Heavy)
    } else if t.is_strongly_antiadjacent(x, y) && rest().all(|u| t.is_strongly_antiadjacent(v, u)) {
        Some(WeightClass::Light)
    } else {
        None
    }
}

/// Connected components of Σ(T), ordered by smallest vertex. Vertices in no
/// switchable pair are excluded.
pub fn switchable_components(t: &Trigraph) -> Vec<SwitchableComponent> {
    let touched: VertexSet = t.vertices().filter(|&v| t.switchable_neighbors(v).next().is_some()).collect();
    let comps = t.components_by(&touched, |u, v| t.is_switchable(u, v));
    let mut out: Vec<SwitchableComponent> = comps
        .into_iter()
        .map(|vertices| {
            let pairs: Vec<(usize, usize)> = vertices
                .iter()
                .flat_map(|u| vertices.iter().filter(move |&v| u < v).map(move |v| (u, v)))
                .filter(|&(u, v)| t.is_switchable(u, v))
                .collect();
            match (pairs.len(), vertices.len()) {
                (1, 2) => SwitchableComponent {
                    shape: ComponentShape::SinglePair,
                    weight_class: WeightClass::Plain,
                    ends: (pairs[0].0, None, pairs[0].1),
                    vertices,
                },
                (2, 3) => {
                    let mid = vertices.iter().find(|&v| t.switchable_neighbors(v).count() == 2).unwrap();
                    let ends: Vec<usize> = vertices.iter().filter(|&v| v != mid).collect();
                    let (x, y) = (ends[0], ends[1]);
                    SwitchableComponent {
                        shape: ComponentShape::TwoPairPath,
                        weight_class: classify_middle(t, mid, x, y).unwrap_or(WeightClass::Plain),
                        ends: (x, Some(mid), y),
                        vertices,
                    }
                }
                _ => {
                    let first = vertices.first().unwrap();
                    SwitchableComponent {
                        shape: ComponentShape::Other,
                        weight_class: WeightClass::Plain,
                        ends: (first, None, first),
                        vertices,
                    }
                }
            }
        })
        .collect();
    out.sort_by_key(|c| c.vertices.first());
    out
}

/// One reason a trigraph falls outside the class 𝓕 (ignoring Bergeness).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassFViolation {
    pub vertices: VertexSet,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassFReport {
    pub in_class: bool,
    pub violations: Vec<ClassFViolation>,
}

/// Checks the switchable-component conditions of 𝓕. Bergeness is not checked.
pub fn classify_class_f(t: &Trigraph) -> ClassFReport {
    let mut violations = Vec::new();
    for comp in switchable_components(t) {
        let edges = comp
            .vertices
            .iter()
            .map(|v| comp.vertices.iter().filter(|&u| t.is_switchable(u, v)).count())
            .sum::<usize>()
            / 2;
        if edges > 2 {
            violations.push(ClassFViolation {
                vertices: comp.vertices.clone(),
                reason: format!("switchable component has {edges} switchable pairs"),
            });
            continue;
        }
        if let (x, Some(mid), y) = comp.ends {
            if classify_middle(t, mid, x, y).is_none() {
                violations.push(ClassFViolation {
                    vertices: [mid].into(),
                    reason: "degree-2 switchable vertex is neither heavy nor light".into(),
                });
            }
        }
    }
    ClassFReport { in_class: violations.is_empty(), violations }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    pub fn of_length(len: usize) -> Parity {
        if len % 2 == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }
}

/// Parity of a path with one end in `a_side`, the other in `b_side` and
/// interior in `interior`. Uses breadth-first shortest paths in the full
/// realization; shortest paths are chordless, hence trigraph paths.
pub fn find_path_parity(
    t: &Trigraph,
    a_side: &VertexSet,
    b_side: &VertexSet,
    interior: &VertexSet,
) -> Option<Parity> {
    let n = t.vertex_count();
    let in_b = b_side.to_mask(n);
    let in_c = interior.to_mask(n);
    for a in a_side.iter() {
        let mut dist = vec![usize::MAX; n];
        dist[a] = 0;
        let mut queue = VecDeque::from([a]);
        while let Some(u) = queue.pop_front() {
            if in_b[u] {
                return Some(Parity::of_length(dist[u]));
            }
            for v in 0..n {
                if dist[v] == usize::MAX && (in_b[v] || in_c[v]) && t.is_adjacent(u, v) {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
    }
    None
}

/// Cycle `C_k` on vertices `0..k` with strong edges `i, i+1`.
pub fn cycle(k: usize) -> Trigraph {
    let mut t = Trigraph::new(k);
    for i in 0..k {
        t.set(i, (i + 1) % k, Adjacency::StrongEdge);
    }
    t
}

/// Path on `k` vertices with strong edges `i, i+1`.
pub fn path(k: usize) -> Trigraph {
    let mut t = Trigraph::new(k);
    for i in 1..k {
        t.set(i - 1, i, Adjacency::StrongEdge);
    }
    t
}

pub fn complete(k: usize) -> Trigraph {
    Trigraph::new(k).complement()
}
