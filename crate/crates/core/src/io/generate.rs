//! Composed instances: basic pieces carrying marker slots, glued by the
//! inverse of the block construction.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::detect::{class_invariant_violations, two_join_violations, TwoJoinSplit};
use crate::error::Error;
use crate::oracle::find_bsp_uncapped;
use crate::trigraph::{Adjacency, Graph, Parity, Trigraph, VertexSet, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PieceKind {
    Bipartite,
    LineOfBipartite,
    Doubled,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PieceSpec {
    pub kind: PieceKind,
    /// Build the piece, then complement it; its slots then glue by
    /// complement 2-joins.
    pub complemented: bool,
    pub size: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "step", rename_all = "kebab-case")]
pub enum Step {
    Start { piece: PieceSpec },
    /// Glue a new piece through a free slot of matching parity and polarity
    /// on both sides; the slot markers disappear.
    Glue { piece: PieceSpec, parity: Parity },
    /// Complement the instance built so far.
    Complement,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub seed: u64,
    /// Size the random recipe grows towards.
    pub target: usize,
    /// Empty: a random recipe drawn from the seed.
    pub recipe: Vec<Step>,
    /// Weights are uniform in `0..=max_weight`; `None` keeps unit weights.
    pub max_weight: Option<Weight>,
    /// Keep switchable pairs; otherwise every pair is realized at random.
    pub switchable: bool,
}

impl GeneratorSpec {
    pub fn new(seed: u64, target: usize) -> Self {
        GeneratorSpec { seed, target, recipe: Vec::new(), max_weight: Some(10), switchable: true }
    }

    pub fn graph(mut self) -> Self {
        self.switchable = false;
        self
    }

    pub fn unit_weights(mut self) -> Self {
        self.max_weight = None;
        self
    }
}

/// One side of a 2-join: `a` and `b` are the vertices of `trigraph` that
/// attach to the other side (in the complement frame when gluing a
/// complement 2-join).
#[derive(Clone, Debug)]
pub struct Side {
    pub trigraph: Trigraph,
    pub a: VertexSet,
    pub b: VertexSet,
}

/// 2-join (or complement 2-join) composition of two sides. The second
/// side's vertices are numbered after the first's.
pub fn glue(s1: &Side, s2: &Side, complemented: bool, parity: Parity) -> Result<Trigraph, Error> {
    glue_checked(s1, s2, complemented, parity, false)
}

/// [`glue`], optionally also requiring the structure every 2-join of an
/// in-class trigraph has.
fn glue_checked(s1: &Side, s2: &Side, complemented: bool, parity: Parity, strict: bool) -> Result<Trigraph, Error> {
    let (n1, n2) = (s1.trigraph.vertex_count(), s2.trigraph.vertex_count());
    let mut t = Trigraph::try_new(n1 + n2)?;
    for (s, off) in [(s1, 0), (s2, n1)] {
        let n = s.trigraph.vertex_count();
        for u in 0..n {
            t.set_weight(off + u, s.trigraph.weight(u));
            for v in u + 1..n {
                t.set(off + u, off + v, s.trigraph.adjacency(u, v));
            }
        }
    }
    let (join, apart) = if complemented {
        (Adjacency::StrongAnti, Adjacency::StrongEdge)
    } else {
        (Adjacency::StrongEdge, Adjacency::StrongAnti)
    };
    for u in 0..n1 {
        for v in 0..n2 {
            let together = (s1.a.contains(u) && s2.a.contains(v)) || (s1.b.contains(u) && s2.b.contains(v));
            t.set(u, n1 + v, if together { join } else { apart });
        }
    }
    let shift = |s: &VertexSet| s.iter().map(|v| v + n1).collect::<VertexSet>();
    let rest = |s: &Side| s.trigraph.all_vertices().difference(&s.a.union(&s.b));
    let split = TwoJoinSplit {
        a1: s1.a.clone(),
        b1: s1.b.clone(),
        c1: rest(s1),
        a2: shift(&s2.a),
        b2: shift(&s2.b),
        c2: shift(&rest(s2)),
        complemented,
        parity,
    };
    let mut violations = two_join_violations(&t, &split);
    if strict && violations.is_empty() {
        violations = class_invariant_violations(&t, &split);
    }
    if !violations.is_empty() {
        return Err(Error::Contract(format!("glue violates the split conditions: {}", violations.join("; "))));
    }
    Ok(t)
}

/// Marker pair `ab` (odd) or path `acb` (even) of a piece.
#[derive(Clone, Copy, Debug)]
struct Slot {
    a: usize,
    b: usize,
    c: Option<usize>,
    complemented: bool,
    /// Kind of the piece the slot came from.
    kind: PieceKind,
}

impl Slot {
    fn parity(&self) -> Parity {
        if self.c.is_some() {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    fn vertices(&self) -> VertexSet {
        let mut s: VertexSet = [self.a, self.b].into();
        if let Some(c) = self.c {
            s.insert(c);
        }
        s
    }

    fn mark(&self, t: &mut Trigraph) {
        match self.c {
            None => t.set(self.a, self.b, Adjacency::Switchable),
            Some(c) => {
                t.set(self.a, c, Adjacency::Switchable);
                t.set(c, self.b, Adjacency::Switchable);
            }
        }
    }
}

struct Piece {
    t: Trigraph,
    slots: Vec<Slot>,
}

impl Piece {
    fn complement(&mut self) {
        self.t = self.t.complement();
        for s in &mut self.slots {
            s.complemented = !s.complemented;
        }
    }

    /// The side left after deleting `slot`, and the old-to-new vertex map.
    fn side(&self, slot: &Slot) -> (Side, Vec<Option<usize>>) {
        let keep = self.t.all_vertices().difference(&slot.vertices());
        let mut map = vec![None; self.t.vertex_count()];
        for (i, v) in keep.iter().enumerate() {
            map[v] = Some(i);
        }
        let frame = if slot.complemented { self.t.complement() } else { self.t.clone() };
        let attach = |m: usize| frame.strong_neighbors(m).filter_map(|v| map[v]).collect::<VertexSet>();
        let side = Side { trigraph: self.t.induced(keep.as_slice()), a: attach(slot.a), b: attach(slot.b) };
        (side, map)
    }
}

fn glue_pieces(
    rng: &mut ChaCha8Rng,
    cur: &Piece,
    at: Option<usize>,
    piece: &Piece,
    parity: Parity,
    complemented: bool,
    strict: bool,
) -> Result<Piece, Error> {
    let pick = |p: &Piece, rng: &mut ChaCha8Rng| {
        let free: Vec<usize> = (0..p.slots.len())
            .filter(|&i| p.slots[i].parity() == parity && p.slots[i].complemented == complemented)
            .collect();
        free.choose(rng).copied()
    };
    let missing = || Error::Contract(format!("no free {parity:?} slot with complemented = {complemented}"));
    let i = at.or_else(|| pick(cur, rng)).ok_or_else(missing)?;
    let j = pick(piece, rng).ok_or_else(missing)?;
    let (s1, m1) = cur.side(&cur.slots[i]);
    let (s2, m2) = piece.side(&piece.slots[j]);
    let t = glue_checked(&s1, &s2, complemented, parity, strict)?;
    let n1 = s1.trigraph.vertex_count();
    let mut slots = Vec::new();
    for (p, m, used, off) in [(cur, &m1, i, 0), (piece, &m2, j, n1)] {
        for (_, s) in p.slots.iter().enumerate().filter(|&(k, _)| k != used) {
            let f = |v: usize| m[v].map(|x| x + off);
            if let (Some(a), Some(b)) = (f(s.a), f(s.b)) {
                let c = match s.c {
                    Some(c) => match f(c) {
                        Some(c) => Some(c),
                        None => continue,
                    },
                    None => None,
                };
                slots.push(Slot { a, b, c, complemented: s.complemented, kind: s.kind });
            }
        }
    }
    Ok(Piece { t, slots })
}

fn other_side(side: &[bool], v: usize) -> impl Iterator<Item = usize> + '_ {
    let s = side[v];
    (0..side.len()).filter(move |&u| side[u] != s)
}

/// Random 2-connected bipartite graph on `m >= 4` vertices: a spanning
/// even cycle (plus one vertex of degree two when `m` is odd) and chords
/// of density about `p`. Cut vertices would give skew partitions.
fn random_bipartite(rng: &mut ChaCha8Rng, m: usize, p: f64) -> (Graph, Vec<bool>) {
    let mut order: Vec<usize> = (0..m).collect();
    order.shuffle(rng);
    let k = m - m % 2;
    let mut side = vec![false; m];
    let mut g = Graph::new(m);
    for i in 0..k {
        side[order[i]] = i % 2 == 1;
        g.add_edge(order[i], order[(i + 1) % k]);
    }
    if m % 2 == 1 {
        let v = order[k];
        side[v] = rng.gen();
        let mut others: Vec<usize> = other_side(&side, v).filter(|&u| u != v).collect();
        others.shuffle(rng);
        g.add_edge(v, others[0]);
        g.add_edge(v, others[1]);
    }
    for u in 0..m {
        for v in other_side(&side, u).filter(|&v| v > u) {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    (g, side)
}

/// Fewest edges [`random_bipartite`] produces on `m` vertices.
fn min_edges(m: usize) -> usize {
    m + m % 2
}

fn bipartite_piece(rng: &mut ChaCha8Rng, size: usize) -> Piece {
    let even = size >= 7;
    let m = if even { size - 1 } else { size };
    let (mut g, side, odd) = loop {
        let (g, side) = random_bipartite(rng, m, 0.5);
        let odd: Vec<(usize, usize)> =
            g.edges().into_iter().filter(|&(u, v)| g.degree(u) >= 2 && g.degree(v) >= 2).collect();
        if !odd.is_empty() {
            break (g, side, odd);
        }
    };
    // several disjoint odd slots, so that chains of pieces can keep growing
    let mut odd = odd;
    odd.shuffle(rng);
    let mut taken = vec![false; size];
    let mut slots = Vec::new();
    for (a, b) in odd {
        if slots.len() < size / 3 && !taken[a] && !taken[b] {
            taken[a] = true;
            taken[b] = true;
            slots.push(Slot { a, b, c: None, complemented: false, kind: PieceKind::Bipartite });
        }
    }
    let mut grown = Graph::new(size);
    for (u, v) in g.edges() {
        grown.add_edge(u, v);
    }
    if even {
        let mut pairs = Vec::new();
        for a in (0..m).filter(|&v| !taken[v]) {
            for b in (a + 1..m).filter(|&v| !taken[v] && side[v] == side[a]) {
                if g.neighbors(a).all(|x| !g.has_edge(x, b)) {
                    pairs.push((a, b));
                }
            }
        }
        let c = m;
        match pairs.choose(rng) {
            Some(&(a, b)) => {
                grown.add_edge(a, c);
                grown.add_edge(c, b);
                slots.push(Slot { a, b, c: Some(c), complemented: false, kind: PieceKind::Bipartite });
            }
            None => {
                // a leaf would give a star cutset
                let mut far: Vec<usize> = other_side(&side, 0).collect();
                far.shuffle(rng);
                for &v in far.iter().take(2) {
                    grown.add_edge(v, c);
                }
            }
        }
        g = grown;
    }
    let mut t = Trigraph::from_graph(&g);
    for s in &slots {
        s.mark(&mut t);
    }
    Piece { t, slots }
}

/// Line trigraph of a bipartite root with a subdivided path for each slot:
/// two consecutive root edges through a degree-two vertex for the odd slot,
/// three through two degree-two vertices for the even one.
fn line_piece(rng: &mut ChaCha8Rng, size: usize) -> Piece {
    let odd_paths = if size >= 10 { 2 } else { 1 } + usize::from(size >= 12);
    let even = size >= 7 + 2 * odd_paths;
    let base_edges = size - 2 * odd_paths - if even { 3 } else { 0 };
    // a dense root; sparse ones make the piece nearly a hole with pendant cliques
    let fits = |r: usize| min_edges(r) <= base_edges;
    let r = (4..=base_edges)
        .find(|&r| fits(r) && (r / 2) * (r - r / 2) >= base_edges)
        .or_else(|| (4..=base_edges).filter(|&r| fits(r)).last())
        .unwrap_or(4);
    let (mut root, side) = random_bipartite(rng, r, 0.0);
    // top up towards the requested edge count
    let mut spare: Vec<(usize, usize)> = (0..r)
        .flat_map(|u| (u + 1..r).map(move |v| (u, v)))
        .filter(|&(u, v)| side[u] != side[v] && !root.has_edge(u, v))
        .collect();
    spare.shuffle(rng);
    for _ in root.edges().len()..base_edges {
        if let Some((u, v)) = spare.pop() {
            root.add_edge(u, v);
        }
    }
    let mut edges: Vec<(usize, usize)> = root.edges();
    let mut next = r;
    let same: Vec<(usize, usize)> =
        (0..r).flat_map(|u| (u + 1..r).map(move |v| (u, v))).filter(|&(u, v)| side[u] == side[v]).collect();
    let mut slot_edges = Vec::new();
    for _ in 0..odd_paths {
        let &(x, z) = same.choose(rng).unwrap();
        edges.push((x, next));
        edges.push((next, z));
        slot_edges.push(vec![edges.len() - 2, edges.len() - 1]);
        next += 1;
    }
    let apart: Vec<(usize, usize)> = (0..r)
        .flat_map(|u| (u + 1..r).map(move |v| (u, v)))
        .filter(|&(u, v)| side[u] != side[v] && !root.has_edge(u, v))
        .collect();
    // without a non-adjacent pair the slot's two sides would share a vertex
    if let (true, Some(&(x, w))) = (even, apart.choose(rng)) {
        edges.push((x, next));
        edges.push((next, next + 1));
        edges.push((next + 1, w));
        slot_edges.push(vec![edges.len() - 3, edges.len() - 1, edges.len() - 2]);
    }
    let k = edges.len();
    let mut t = Trigraph::new(k);
    for i in 0..k {
        for j in i + 1..k {
            let (e, f) = (edges[i], edges[j]);
            if e.0 == f.0 || e.0 == f.1 || e.1 == f.0 || e.1 == f.1 {
                t.set(i, j, Adjacency::StrongEdge);
            }
        }
    }
    let slots: Vec<Slot> = slot_edges
        .iter()
        .map(|s| Slot { a: s[0], b: s[1], c: s.get(2).copied(), complemented: false, kind: PieceKind::LineOfBipartite })
        .collect();
    for s in &slots {
        s.mark(&mut t);
    }
    Piece { t, slots }
}

/// Doubled graph from a good partition: `X` a matching plus isolated
/// vertices, `Y` a clique minus a matching, and between a component and an
/// anticomponent each vertex sees exactly one vertex of a two-vertex part.
fn doubled_piece(rng: &mut ChaCha8Rng, size: usize, switchable: bool) -> Piece {
    let nx = size / 2 + 1;
    let mut xc: Vec<Vec<usize>> = Vec::new();
    let mut v = 0;
    while v < nx {
        let take = if nx - v >= 2 && (xc.is_empty() || rng.gen_bool(0.85)) { 2 } else { 1 };
        xc.push((v..v + take).collect());
        v += take;
    }
    // a singleton of Y has no antineighbour among the slot's attachments
    let pairs_only = (size - nx) % 2 == 0 && rng.gen_bool(0.9);
    let mut yc: Vec<Vec<usize>> = Vec::new();
    while v < size {
        let take = if size - v >= 2 && (pairs_only || rng.gen_bool(0.4)) { 2 } else { 1 };
        yc.push((v..v + take).collect());
        v += take;
    }
    let mut t = Trigraph::new(size);
    for c in &xc {
        if c.len() == 2 {
            t.set(c[0], c[1], Adjacency::StrongEdge);
        }
    }
    for u in nx..size {
        for w in u + 1..size {
            t.set(u, w, Adjacency::StrongEdge);
        }
    }
    for c in &yc {
        if c.len() == 2 {
            t.set(c[0], c[1], if switchable && rng.gen_bool(0.3) { Adjacency::Switchable } else { Adjacency::StrongAnti });
        }
    }
    for cx in &xc {
        for cy in &yc {
            match (cx.len(), cy.len()) {
                (2, 2) => {
                    let flip = rng.gen_bool(0.5) as usize;
                    t.set(cx[0], cy[flip], Adjacency::StrongEdge);
                    t.set(cx[1], cy[1 - flip], Adjacency::StrongEdge);
                }
                (2, 1) => t.set(cx[rng.gen_range(0..2)], cy[0], Adjacency::StrongEdge),
                (1, 2) => t.set(cx[0], cy[rng.gen_range(0..2)], Adjacency::StrongEdge),
                _ => {
                    if rng.gen_bool(0.5) {
                        t.set(cx[0], cy[0], Adjacency::StrongEdge);
                    }
                }
            }
        }
    }
    let candidates: Vec<(usize, usize)> = xc
        .iter()
        .filter(|c| c.len() == 2)
        .map(|c| (c[0], c[1]))
        .filter(|&(a, b)| {
            (nx..size).any(|y| t.is_strongly_adjacent(a, y)) && (nx..size).any(|y| t.is_strongly_adjacent(b, y))
        })
        .collect();
    let slots: Vec<Slot> = candidates
        .choose_multiple(rng, 4)
        .map(|&(a, b)| Slot { a, b, c: None, complemented: false, kind: PieceKind::Doubled })
        .collect();
    for s in &slots {
        s.mark(&mut t);
    }
    Piece { t, slots }
}

fn build_piece(rng: &mut ChaCha8Rng, spec: &PieceSpec, switchable: bool) -> Result<Piece, Error> {
    if spec.size < 6 {
        return Err(Error::Contract(format!("piece size {} is below 6", spec.size)));
    }
    let mut p = match spec.kind {
        PieceKind::Bipartite => bipartite_piece(rng, spec.size),
        PieceKind::LineOfBipartite => line_piece(rng, spec.size),
        PieceKind::Doubled => doubled_piece(rng, spec.size, switchable),
    };
    if spec.complemented {
        p.complement();
    }
    Ok(p)
}

fn random_piece(rng: &mut ChaCha8Rng, size: usize, complemented: Option<bool>, avoid: Option<PieceKind>) -> PieceSpec {
    // gluing two pieces of one kind often stays basic
    let kinds: Vec<PieceKind> = [PieceKind::Bipartite, PieceKind::LineOfBipartite, PieceKind::Doubled]
        .into_iter()
        .filter(|&k| Some(k) != avoid)
        .collect();
    let kind = *kinds.choose(rng).unwrap();
    PieceSpec { kind, complemented: complemented.unwrap_or_else(|| rng.gen_bool(0.3)), size }
}

fn finish(rng: &mut ChaCha8Rng, piece: Piece, spec: &GeneratorSpec) -> Trigraph {
    let mut t = piece.t;
    let n = t.vertex_count();
    let realize = |rng: &mut ChaCha8Rng| if rng.gen_bool(0.5) { Adjacency::StrongEdge } else { Adjacency::StrongAnti };
    for s in &piece.slots {
        if spec.switchable && rng.gen_bool(0.7) {
            continue;
        }
        match s.c {
            None => {
                let a = realize(rng);
                t.set(s.a, s.b, a);
            }
            // an antiedge here would leave `c` as a leaf or isolated
            Some(c) => {
                t.set(s.a, c, Adjacency::StrongEdge);
                t.set(c, s.b, Adjacency::StrongEdge);
            }
        }
    }
    if !spec.switchable {
        for (u, v) in t.switchable_pairs() {
            let a = realize(rng);
            t.set(u, v, a);
        }
    }
    if let Some(max) = spec.max_weight {
        for v in 0..n {
            t.set_weight(v, rng.gen_range(0..=max));
        }
    }
    t
}

fn run(rng: &mut ChaCha8Rng, steps: &[Step], switchable: bool) -> Result<Piece, Error> {
    let mut cur: Option<Piece> = None;
    for step in steps {
        match (step, cur.as_mut()) {
            (Step::Start { piece }, None) => cur = Some(build_piece(rng, piece, switchable)?),
            (Step::Glue { piece, parity }, Some(c)) => {
                let p = build_piece(rng, piece, switchable)?;
                *c = glue_pieces(rng, c, None, &p, *parity, piece.complemented, false)?;
            }
            (Step::Complement, Some(c)) => c.complement(),
            (_, _) => return Err(Error::Contract("a recipe starts with exactly one `start` step".into())),
        }
    }
    cur.ok_or_else(|| Error::Contract("empty recipe".into()))
}

/// Draws a recipe growing towards `target`; each step is kept only if it
/// applies.
fn random_recipe(rng: &mut ChaCha8Rng, target: usize, switchable: bool) -> (Piece, Vec<Step>) {
    let mut first = random_piece(rng, target.clamp(6, 10), None, None);
    let mut cur = None;
    for _ in 0..20 {
        if let Ok(p) = build_clean_piece(rng, &first, switchable, 2) {
            cur = Some(p);
            break;
        }
        first = random_piece(rng, target.clamp(6, 10), None, None);
    }
    // every kind yields clean slots in practice; a bare piece is still basic
    let mut cur = match cur {
        Some(p) => p,
        None => build_piece(rng, &first, switchable).expect("size at least six"),
    };
    let mut steps = vec![Step::Start { piece: first }];
    let mut failures = 0;
    while cur.t.vertex_count() + 2 <= target && failures < 40 {
        if cur.slots.is_empty() {
            break;
        }
        let flip = rng.gen_bool(0.15);
        if flip {
            cur.complement();
        }
        let Some(slot) = cur.slots.choose(rng).copied() else { break };
        let room = target + slot.vertices().len() * 2 - cur.t.vertex_count();
        let size = rng.gen_range(6..=12).min(room).max(6);
        let mut piece = random_piece(rng, size, Some(slot.complemented), Some(slot.kind));
        if slot.parity() == Parity::Even && piece.kind == PieceKind::Doubled {
            // doubled pieces only carry odd slots
            piece.kind = if slot.kind == PieceKind::Bipartite { PieceKind::LineOfBipartite } else { PieceKind::Bipartite };
        }
        let parity = slot.parity();
        let at = cur.slots.iter().position(|s| s.vertices() == slot.vertices());
        if !clean_slot(&cur, &slot) {
            cur.slots.remove(at.expect("chosen from the list"));
            if flip {
                cur.complement();
            }
            continue;
        }
        // a piece with a single slot ends the chain once cur runs out
        let wanted = if cur.slots.len() < 3 { 2 } else { 1 };
        let glued = build_clean_piece(rng, &piece, switchable, wanted)
            .and_then(|p| glue_pieces(rng, &cur, at, &p, parity, piece.complemented, true));
        match glued {
            Ok(next) => {
                cur = next;
                failures = 0;
                if flip {
                    steps.push(Step::Complement);
                }
                steps.push(Step::Glue { piece, parity });
            }
            Err(_) => {
                if flip {
                    cur.complement();
                }
                failures += 1;
            }
        }
    }
    (cur, steps)
}

/// Whether the side left by `slot` has the structure of a side of a 2-join
/// in an in-class trigraph; checked by gluing the side to a copy of itself.
fn clean_slot(p: &Piece, slot: &Slot) -> bool {
    let (side, _) = p.side(slot);
    if let ([a], [b]) = (side.a.as_slice(), side.b.as_slice()) {
        // an adjacent pair would be a clique cutset (a skew partition)
        let f = if slot.complemented { side.trigraph.complement() } else { side.trigraph.clone() };
        if f.is_adjacent(*a, *b) {
            return false;
        }
    }
    glue_checked(&side, &side, slot.complemented, slot.parity(), true).is_ok()
}

/// A piece without a balanced skew partition and with at least `min_slots`
/// clean slots; unclean slots are dropped.
fn build_clean_piece(rng: &mut ChaCha8Rng, spec: &PieceSpec, switchable: bool, min_slots: usize) -> Result<Piece, Error> {
    for _ in 0..50 {
        let mut p = build_piece(rng, spec, switchable)?;
        // a skew partition inside a piece survives every later glue
        if find_bsp_uncapped(&p.t).is_some() {
            continue;
        }
        let slots = std::mem::take(&mut p.slots);
        p.slots = slots.into_iter().filter(|s| clean_slot(&p, s)).collect();
        if p.slots.len() >= min_slots {
            return Ok(p);
        }
    }
    Err(Error::Contract(format!("no clean slot for {spec:?}")))
}

/// Deterministic composed instance for `spec`, with the recipe that was
/// applied.
pub fn generate(spec: &GeneratorSpec) -> Result<(Trigraph, Vec<Step>), Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let (piece, steps) = if spec.recipe.is_empty() {
        random_recipe(&mut rng, spec.target, spec.switchable)
    } else {
        (run(&mut rng, &spec.recipe, spec.switchable)?, spec.recipe.clone())
    };
    Ok((finish(&mut rng, piece, spec), steps))
}

/// Uniform random trigraph: each pair is switchable with probability
/// `p_switch`, otherwise a strong edge with probability `p_edge`.
pub fn random_trigraph(rng: &mut impl Rng, n: usize, p_edge: f64, p_switch: f64) -> Trigraph {
    let mut t = Trigraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            let a = if rng.gen_bool(p_switch) {
                Adjacency::Switchable
            } else if rng.gen_bool(p_edge) {
                Adjacency::StrongEdge
            } else {
                Adjacency::StrongAnti
            };
            t.set(u, v, a);
        }
    }
    t
}
