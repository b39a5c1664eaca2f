//! The five basic classes: recognition with checkable witnesses, and exact
//! maximum weighted strong stable sets for each.

mod doubled;
pub(crate) mod flow;
mod line;
pub(crate) mod matching;

use serde::{Deserialize, Serialize};

pub use doubled::{alpha_doubled, good_partition, good_partition_violations};
pub use line::{large_cliques_strong, line_root, line_trigraph_root, LineRoot};

use crate::error::Error;
use crate::trigraph::{Graph, Trigraph, VertexSet, Weight};
use flow::FlowNetwork;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BasicClass {
    Bipartite,
    ComplementBipartite,
    Line,
    ComplementLine,
    Doubled,
}

impl BasicClass {
    pub const ALL: [BasicClass; 5] = [
        BasicClass::Bipartite,
        BasicClass::ComplementBipartite,
        BasicClass::Line,
        BasicClass::ComplementLine,
        BasicClass::Doubled,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BasicClass::Bipartite => "bipartite",
            BasicClass::ComplementBipartite => "complement-bipartite",
            BasicClass::Line => "line",
            BasicClass::ComplementLine => "complement-line",
            BasicClass::Doubled => "doubled",
        }
    }
}

impl std::fmt::Display for BasicClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Class-specific structure certifying membership.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Witness {
    /// Two strong stable sets (bipartite) or two strong cliques (complement).
    Bipartition { left: VertexSet, right: VertexSet },
    /// Root of the full realization of `T` (line) or of its complement.
    Root(LineRoot),
    /// Good partition with every switchable pair tagged by the side holding it.
    GoodPartition { x: VertexSet, y: VertexSet, matching: Vec<(usize, usize)>, antimatching: Vec<(usize, usize)> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasicClassReport {
    pub class: BasicClass,
    pub witness: Witness,
}

impl BasicClassReport {
    /// Re-checks the witness directly against the class definition.
    pub fn validate(&self, t: &Trigraph) -> Result<(), String> {
        match (&self.class, &self.witness) {
            (BasicClass::Bipartite, Witness::Bipartition { left, right }) => {
                check_partition(t, left, right)?;
                if t.is_strong_stable(left) && t.is_strong_stable(right) {
                    Ok(())
                } else {
                    Err("a side of the bipartition is not strongly stable".into())
                }
            }
            (BasicClass::ComplementBipartite, Witness::Bipartition { left, right }) => {
                check_partition(t, left, right)?;
                if t.is_strong_clique(left) && t.is_strong_clique(right) {
                    Ok(())
                } else {
                    Err("a side of the bipartition is not a strong clique".into())
                }
            }
            (BasicClass::Line, Witness::Root(root)) => {
                if !large_cliques_strong(t) {
                    return Err("a clique of size at least three is not strong".into());
                }
                root.validates(&t.full_realization()).then_some(()).ok_or_else(|| "root does not generate the graph".into())
            }
            (BasicClass::ComplementLine, Witness::Root(root)) => {
                let c = t.complement();
                if !large_cliques_strong(&c) {
                    return Err("a clique of size at least three in the complement is not strong".into());
                }
                root.validates(&c.full_realization()).then_some(()).ok_or_else(|| "root does not generate the complement".into())
            }
            (BasicClass::Doubled, Witness::GoodPartition { x, y, matching, antimatching }) => {
                let v = good_partition_violations(t, x, y);
                if !v.is_empty() {
                    return Err(v.join("; "));
                }
                let (m, a) = tag_pairs(t, x);
                if &m != matching || &a != antimatching {
                    return Err("switchable pair tags do not match the partition".into());
                }
                Ok(())
            }
            _ => Err("witness kind does not fit the class".into()),
        }
    }

    /// For doubled trigraphs: `Some(true)` if `(u, v)` is a matching pair.
    pub fn is_matching_pair(&self, u: usize, v: usize) -> Option<bool> {
        match &self.witness {
            Witness::GoodPartition { x, .. } => Some(x.contains(u) && x.contains(v)),
            _ => None,
        }
    }
}

fn check_partition(t: &Trigraph, a: &VertexSet, b: &VertexSet) -> Result<(), String> {
    if a.is_disjoint(b) && a.len() + b.len() == t.vertex_count() {
        Ok(())
    } else {
        Err("sides do not partition the vertex set".into())
    }
}

fn tag_pairs(t: &Trigraph, x: &VertexSet) -> (Vec<(usize, usize)>, Vec<(usize, usize)>) {
    t.switchable_pairs().into_iter().partition(|&(u, _)| x.contains(u))
}

/// Maximum weight strong stable set with its value.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StableSetResult {
    pub value: Weight,
    pub set: VertexSet,
}

impl StableSetResult {
    pub fn empty() -> Self {
        StableSetResult::default()
    }
}

fn bipartition_sets(side: &[bool]) -> (VertexSet, VertexSet) {
    let left = (0..side.len()).filter(|&v| !side[v]).collect();
    let right = (0..side.len()).filter(|&v| side[v]).collect();
    (left, right)
}

/// Report for one specific class, if `t` belongs to it.
pub fn recognize_class(t: &Trigraph, class: BasicClass) -> Option<BasicClassReport> {
    let witness = match class {
        BasicClass::Bipartite => {
            let side = t.full_realization().bipartition(None)?;
            let (left, right) = bipartition_sets(&side);
            Witness::Bipartition { left, right }
        }
        BasicClass::ComplementBipartite => {
            let side = t.complement().full_realization().bipartition(None)?;
            let (left, right) = bipartition_sets(&side);
            Witness::Bipartition { left, right }
        }
        BasicClass::Line => Witness::Root(line_trigraph_root(t)?),
        BasicClass::ComplementLine => Witness::Root(line_trigraph_root(&t.complement())?),
        BasicClass::Doubled => {
            let (x, y) = good_partition(t)?;
            let (matching, antimatching) = tag_pairs(t, &x);
            Witness::GoodPartition { x, y, matching, antimatching }
        }
    };
    Some(BasicClassReport { class, witness })
}

/// The first basic class (in the order bipartite, complement-bipartite,
/// line, complement-line, doubled) that `t` belongs to.
pub fn recognize_basic(t: &Trigraph) -> Option<BasicClassReport> {
    BasicClass::ALL.iter().find_map(|&c| recognize_class(t, c))
}

/// Maximum weighted stable set of a bipartite graph, restricted to the
/// vertices with `keep[v]` (all when `None`), via a minimum vertex cover.
pub fn alpha_bipartite(g: &Graph, w: &[Weight]) -> Result<StableSetResult, Error> {
    let side = g.bipartition(None).ok_or_else(|| Error::Contract("alpha_bipartite needs a bipartite graph".into()))?;
    Ok(alpha_bipartite_with(g, w, &side))
}

fn alpha_bipartite_with(g: &Graph, w: &[Weight], side: &[bool]) -> StableSetResult {
    let n = g.vertex_count();
    let (s, t) = (n, n + 1);
    let total: u128 = w.iter().map(|&x| x as u128).sum();
    let mut net = FlowNetwork::new(n + 2);
    for v in 0..n {
        if !side[v] {
            net.add_edge(s, v, w[v] as u128);
            for u in g.neighbors(v) {
                net.add_edge(v, u, total + 1);
            }
        } else {
            net.add_edge(v, t, w[v] as u128);
        }
    }
    let cut = net.max_flow(s, t);
    let reach = net.reachable(s);
    let set: VertexSet = (0..n).filter(|&v| if side[v] { !reach[v] } else { reach[v] }).collect();
    StableSetResult { value: (total - cut) as Weight, set }
}

/// Maximum weighted strong stable set of a trigraph whose complement has a
/// bipartite full realization: one vertex or one strongly antiadjacent pair.
pub fn alpha_complement_bipartite(t: &Trigraph) -> Result<StableSetResult, Error> {
    if t.complement().full_realization().bipartition(None).is_none() {
        return Err(Error::Contract("input is not the complement of a bipartite trigraph".into()));
    }
    Ok(best_vertex_or_pair(t))
}

fn best_vertex_or_pair(t: &Trigraph) -> StableSetResult {
    let mut best = StableSetResult::empty();
    let w = t.weights();
    for u in t.vertices() {
        if w[u] > best.value || (best.set.is_empty() && w[u] == best.value) {
            best = StableSetResult { value: w[u], set: [u].into() };
        }
        for v in u + 1..t.vertex_count() {
            if t.is_strongly_antiadjacent(u, v) && w[u] + w[v] > best.value {
                best = StableSetResult { value: w[u] + w[v], set: [u, v].into() };
            }
        }
    }
    best
}

/// Maximum weighted strong stable set of a line trigraph, as a maximum
/// weight matching of the root of its full realization.
pub fn alpha_line(t: &Trigraph) -> Result<StableSetResult, Error> {
    let root = line_trigraph_root(t).ok_or_else(|| Error::Contract("input is not a line trigraph".into()))?;
    Ok(alpha_line_with(t, &root))
}

fn alpha_line_with(t: &Trigraph, root: &LineRoot) -> StableSetResult {
    let mut left_index = vec![usize::MAX; root.nodes];
    let mut right_index = vec![usize::MAX; root.nodes];
    let (mut rows, mut cols) = (0, 0);
    for x in 0..root.nodes {
        if root.side[x] {
            right_index[x] = cols;
            cols += 1;
        } else {
            left_index[x] = rows;
            rows += 1;
        }
    }
    let mut w = vec![vec![None; cols]; rows];
    let mut vertex_at = vec![vec![usize::MAX; cols]; rows];
    for (v, &(a, b)) in root.ends.iter().enumerate() {
        let (i, j) = (left_index[a], right_index[b]);
        w[i][j] = Some(t.weight(v));
        vertex_at[i][j] = v;
    }
    let (value, pairs) = matching::max_weight_matching(rows, cols, &w);
    let set: VertexSet = pairs.into_iter().map(|(i, j)| vertex_at[i][j]).collect();
    StableSetResult { value: value as Weight, set }
}

/// Maximum weighted strong stable set of the complement of a line trigraph:
/// a best star of the root of the graph whose edges are the strong antiedges.
pub fn alpha_complement_line(t: &Trigraph) -> Result<StableSetResult, Error> {
    if line_trigraph_root(&t.complement()).is_none() {
        return Err(Error::Contract("input is not the complement of a line trigraph".into()));
    }
    // strong antiedges of T form a realization of the complement, itself a line graph
    let h = t.complement().strong_realization();
    let root = line_root(&h).ok_or_else(|| Error::Internal("realization of a line trigraph has no root".into()))?;
    let mut star: Vec<(Weight, Vec<usize>)> = vec![(0, Vec::new()); root.nodes];
    for (v, &(a, b)) in root.ends.iter().enumerate() {
        for x in [a, b] {
            star[x].0 += t.weight(v);
            star[x].1.push(v);
        }
    }
    let mut best = StableSetResult::empty();
    for (value, members) in star {
        if value > best.value || (best.set.is_empty() && !members.is_empty() && value == best.value) {
            best = StableSetResult { value, set: members.into() };
        }
    }
    Ok(best)
}

/// Exact maximum weighted strong stable set for a trigraph with a validated report.
pub fn alpha_basic(t: &Trigraph, report: &BasicClassReport) -> Result<StableSetResult, Error> {
    let r = match (&report.class, &report.witness) {
        (BasicClass::Bipartite, Witness::Bipartition { left, .. }) => {
            let side: Vec<bool> = (0..t.vertex_count()).map(|v| !left.contains(v)).collect();
            alpha_bipartite_with(&t.full_realization(), t.weights(), &side)
        }
        (BasicClass::ComplementBipartite, _) => best_vertex_or_pair(t),
        (BasicClass::Line, Witness::Root(root)) => alpha_line_with(t, root),
        (BasicClass::ComplementLine, _) => alpha_complement_line(t)?,
        (BasicClass::Doubled, Witness::GoodPartition { x, y, .. }) => alpha_doubled(t, x, y),
        _ => return Err(Error::Contract("witness kind does not fit the class".into())),
    };
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::alpha_bf;
    use crate::trigraph::{complete, cycle, path, Adjacency};

    #[test]
    fn c4_is_bipartite_c5_is_not_basic() {
        let r = recognize_basic(&cycle(4)).unwrap();
        assert_eq!(r.class, BasicClass::Bipartite);
        assert_eq!(r.witness, Witness::Bipartition { left: [0, 2].into(), right: [1, 3].into() });
        assert!(recognize_class(&cycle(4), BasicClass::Doubled).is_some());
        assert!(recognize_basic(&cycle(5)).is_none());
    }

    #[test]
    fn bipartite_examples() {
        let g = path(4).full_realization();
        assert_eq!(alpha_bipartite(&g, &[1, 1, 1, 1]).unwrap().value, 2);
        let r = alpha_bipartite(&g, &[3, 1, 1, 3]).unwrap();
        assert_eq!((r.value, r.set), (6, VertexSet::from([0, 3])));
        let r = alpha_bipartite(&g, &[2, 5, 1, 1]).unwrap();
        assert_eq!((r.value, r.set), (6, VertexSet::from([1, 3])));
        assert!(alpha_bipartite(&cycle(5).full_realization(), &[1; 5]).is_err());
    }

    #[test]
    fn complement_bipartite_examples() {
        assert_eq!(alpha_complement_bipartite(&complete(4)).unwrap().value, 1);
        assert_eq!(alpha_complement_bipartite(&path(4).complement()).unwrap().value, 2);
        let k4 = complete(4).with_weights(vec![5, 1, 1, 1]);
        assert_eq!(alpha_complement_bipartite(&k4).unwrap().value, 5);
    }

    #[test]
    fn line_examples() {
        // L(P4) = P3
        assert_eq!(alpha_line(&path(3)).unwrap().value, 2);
        assert_eq!(alpha_line(&Trigraph::new(1).with_weights(vec![7])).unwrap().value, 7);
        assert_eq!(alpha_line(&cycle(6)).unwrap().value, 3);
    }

    #[test]
    fn complement_line_examples() {
        // complement of L(x1x2x3x4) = complement of P3
        assert_eq!(alpha_complement_line(&path(3).complement()).unwrap().value, 2);
        assert_eq!(alpha_complement_line(&Trigraph::new(1).with_weights(vec![4])).unwrap().value, 4);
        // R = K_{1,3}: L(R) = K3, complement is edgeless
        assert_eq!(alpha_complement_line(&Trigraph::new(3)).unwrap().value, 3);
    }

    fn random_trigraph(rng: &mut impl rand::Rng, n: usize, p_edge: f64, p_switch: f64) -> Trigraph {
        let mut t = Trigraph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                let r: f64 = rng.gen();
                if r < p_switch {
                    t.set(u, v, Adjacency::Switchable);
                } else if r < p_switch + p_edge {
                    t.set(u, v, Adjacency::StrongEdge);
                }
            }
            t.set_weight(u, rng.gen_range(0..10));
        }
        t
    }

    #[test]
    fn every_class_matches_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let mut seen = std::collections::BTreeMap::new();
        for i in 0..3000 {
            let n = rng.gen_range(1..=10);
            let p = [0.15, 0.3, 0.5, 0.8][i % 4];
            let t = random_trigraph(&mut rng, n, p, 0.08);
            for class in BasicClass::ALL {
                if let Some(rep) = recognize_class(&t, class) {
                    rep.validate(&t).unwrap();
                    let r = alpha_basic(&t, &rep).unwrap();
                    let (bf, _) = alpha_bf(&t).unwrap();
                    assert_eq!(r.value, bf, "{class} on {t:?}");
                    assert!(t.is_strong_stable(&r.set));
                    assert_eq!(r.set.weight(t.weights()), bf as u128);
                    *seen.entry(class).or_insert(0) += 1;
                }
            }
        }
        assert_eq!(seen.len(), 5, "{seen:?}");
    }

    #[test]
    fn realizations_of_basic_stay_basic() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        for _ in 0..800 {
            let n = rng.gen_range(2..=9);
            let t = random_trigraph(&mut rng, n, 0.4, 0.15);
            if recognize_basic(&t).is_none() {
                continue;
            }
            let mut r = t.clone();
            for (u, v) in t.switchable_pairs() {
                match rng.gen_range(0..3) {
                    0 => r.set(u, v, Adjacency::StrongEdge),
                    1 => r.set(u, v, Adjacency::StrongAnti),
                    _ => {}
                }
            }
            assert!(recognize_basic(&r).is_some(), "{t:?} -> {r:?}");
            assert!(recognize_basic(&t.complement()).is_some());
        }
    }

    #[test]
    fn alpha_is_permutation_invariant() {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2);
        let t = cycle(8).with_weights(vec![3, 1, 4, 1, 5, 9, 2, 6]);
        let rep = recognize_basic(&t).unwrap();
        let a = alpha_basic(&t, &rep).unwrap().value;
        for _ in 0..10 {
            let mut perm: Vec<usize> = (0..8).collect();
            perm.shuffle(&mut rng);
            let p = t.permuted(&perm);
            let rep = recognize_basic(&p).unwrap();
            assert_eq!(alpha_basic(&p, &rep).unwrap().value, a);
        }
    }
}
