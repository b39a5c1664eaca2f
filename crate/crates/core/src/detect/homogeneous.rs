//! Proper homogeneous pairs and their forcing-based detection.

use serde::{Deserialize, Serialize};

use crate::trigraph::{Trigraph, VertexSet};

/// Split `(A, B, C, D, E, F)` of a homogeneous pair: `C` is strongly complete
/// to `A` and anticomplete to `B`, `D` the reverse, `E` complete to both and
/// `F` anticomplete to both.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HomogeneousPairSplit {
    pub a: VertexSet,
    pub b: VertexSet,
    pub c: VertexSet,
    pub d: VertexSet,
    pub e: VertexSet,
    pub f: VertexSet,
}

impl HomogeneousPairSplit {
    pub fn pair(&self) -> VertexSet {
        self.a.union(&self.b)
    }

    pub fn outside(&self) -> VertexSet {
        self.c.union(&self.d).union(&self.e).union(&self.f)
    }

    /// Violations of the proper homogeneous pair conditions.
    pub fn violations(&self, t: &Trigraph) -> Vec<String> {
        let mut out = Vec::new();
        let parts = [&self.a, &self.b, &self.c, &self.d, &self.e, &self.f];
        let total: usize = parts.iter().map(|p| p.len()).sum();
        let union = parts.iter().fold(VertexSet::new(), |acc, p| acc.union(p));
        if total != t.vertex_count() || union.len() != total {
            out.push("the six sets do not partition the vertex set".into());
            return out;
        }
        if self.a.len() < 2 || self.b.len() < 2 {
            out.push("A and B need at least two vertices each".into());
        }
        let checks = [
            ("C", &self.c, true, false),
            ("D", &self.d, false, true),
            ("E", &self.e, true, true),
            ("F", &self.f, false, false),
        ];
        for (name, set, to_a, to_b) in checks {
            if set.is_empty() {
                out.push(format!("{name} is empty"));
            }
            for (target, complete, tname) in [(&self.a, to_a, "A"), (&self.b, to_b, "B")] {
                let ok = if complete {
                    t.sets_strongly_complete(set, target)
                } else {
                    t.sets_strongly_anticomplete(set, target)
                };
                if !ok {
                    let rel = if complete { "complete" } else { "anticomplete" };
                    out.push(format!("{name} is not strongly {rel} to {tname}"));
                }
            }
        }
        out
    }
}

/// Minimal homogeneous pair `(A, B)` with `r0 ⊆ A ∪ B`, `a1 ∈ A`, `b1 ∈ B`,
/// `a2 ∉ A ∪ B` strongly complete to `A` and anticomplete to `B`. Only proper
/// pairs are returned; the three-vertex weak case is rejected.
pub fn forcing_homogeneous(t: &Trigraph, seed: (usize, usize, usize), r0: &VertexSet) -> Option<HomogeneousPairSplit> {
    let (a1, b1, a2) = seed;
    let n = t.vertex_count();
    if a1 == b1
        || a2 == a1
        || a2 == b1
        || !t.is_strongly_adjacent(a1, a2)
        || !t.is_strongly_antiadjacent(b1, a2)
        || !r0.contains(a1)
        || !r0.contains(b1)
        || r0.contains(a2)
    {
        return None;
    }
    let mut in_w = vec![false; n];
    let mut side_a = vec![false; n];
    // per outside vertex: strong edges / strong antiedges to A, then to B, and switchable pairs to A ∪ B
    let mut cnt = vec![[0usize; 5]; n];
    let mut queued = vec![false; n];
    let mut queue: Vec<usize> = r0.iter().collect();
    for &v in &queue {
        queued[v] = true;
    }
    let (mut size_a, mut size_b) = (0, 0);
    while let Some(v) = queue.pop() {
        if in_w[v] {
            continue;
        }
        if v == a2 || t.is_switchable(a2, v) {
            return None;
        }
        let in_a = t.is_strongly_adjacent(a2, v);
        in_w[v] = true;
        side_a[v] = in_a;
        if in_a {
            size_a += 1;
        } else {
            size_b += 1;
        }
        let off = if in_a { 0 } else { 2 };
        for u in (0..n).filter(|&u| u != v && !in_w[u]) {
            match t.theta(u, v) {
                1 => cnt[u][off] += 1,
                -1 => cnt[u][off + 1] += 1,
                _ => cnt[u][4] += 1,
            }
            let c = cnt[u];
            let forced = c[4] > 0 || (c[0] > 0 && c[1] > 0) || (c[2] > 0 && c[3] > 0);
            if forced && !queued[u] {
                queued[u] = true;
                queue.push(u);
            }
        }
    }
    if size_a < 2 || size_b < 2 {
        return None;
    }
    let mut parts: [Vec<usize>; 6] = Default::default();
    for v in 0..n {
        let idx = if in_w[v] {
            if side_a[v] {
                0
            } else {
                1
            }
        } else {
            match (cnt[v][0] > 0, cnt[v][2] > 0) {
                (true, false) => 2,
                (false, true) => 3,
                (true, true) => 4,
                (false, false) => 5,
            }
        };
        parts[idx].push(v);
    }
    let [a, b, c, d, e, f] = parts.map(VertexSet::from);
    let split = HomogeneousPairSplit { a, b, c, d, e, f };
    split.violations(t).is_empty().then_some(split)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trigraph::{cycle, Adjacency};

    /// `A = {0, 1}`, `B = {2, 3}` matched by 0–2 and 1–3, with frame
    /// `C = {4}`, `D = {5}`, `E = {6}`, `F = {7}`.
    pub(crate) fn sample() -> Trigraph {
        let mut edges = vec![(0, 2), (1, 3), (4, 6), (5, 7)];
        edges.extend([(4, 0), (4, 1), (5, 2), (5, 3), (6, 0), (6, 1), (6, 2), (6, 3)]);
        Trigraph::from_parts(8, &edges, &[])
    }

    #[test]
    fn recovers_pair() {
        let t = sample();
        let s = forcing_homogeneous(&t, (0, 2, 4), &[0, 2, 1].into()).unwrap();
        assert_eq!(s.a, VertexSet::from([0, 1]));
        assert_eq!(s.b, VertexSet::from([2, 3]));
        assert_eq!(s.e, VertexSet::from([6]));
        assert!(s.violations(&t).is_empty());
        assert!(forcing_homogeneous(&t, (0, 2, 4), &[0, 2].into()).is_none());
    }

    #[test]
    fn none_in_c8() {
        let c8 = cycle(8);
        for a1 in 0..8 {
            for b1 in 0..8 {
                for a2 in 0..8 {
                    for u in 0..8 {
                        let r0: VertexSet = [a1, b1, u].into();
                        assert!(forcing_homogeneous(&c8, (a1, b1, a2), &r0).is_none());
                    }
                }
            }
        }
    }

    #[test]
    fn semiadjacent_seed_rejected() {
        let mut t = sample();
        t.set(0, 4, Adjacency::Switchable);
        assert!(forcing_homogeneous(&t, (0, 2, 4), &[0, 2, 1].into()).is_none());
    }
}
