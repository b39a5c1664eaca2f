//! Detection of proper 2-joins, complement 2-joins, homogeneous pairs and
//! ends, built around the forcing procedure for weak fragments.

mod end;
mod forcing;
mod homogeneous;
mod twojoin;

use std::borrow::Cow;

use serde::{Deserialize, Serialize};

pub use end::{find_end, find_end_fragment, EndFragment};
pub use forcing::{
    forcing, forcing_with_mode, forcing_with_rows, AdjacencyRows, ForcingMode, ForcingOutcome, ForcingState, Mark,
};
pub use homogeneous::{forcing_homogeneous, HomogeneousPairSplit};
pub use twojoin::{
    find_proper_2join, find_proper_complement_2join, search_2join, search_2join_either, two_join_split_of, SearchStats, TwoJoinSearch,
};

use crate::trigraph::{find_path_parity, Parity, Trigraph, VertexSet};

/// `(a1, b1, a2, b2)` with `a1a2`, `b1b2` strong edges and `a1b2`, `b1a2` strong antiedges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ProperQuadruple {
    pub a1: usize,
    pub b1: usize,
    pub a2: usize,
    pub b2: usize,
}

impl ProperQuadruple {
    pub fn is_proper(&self, t: &Trigraph) -> bool {
        let v = [self.a1, self.b1, self.a2, self.b2];
        let distinct = (0..4).all(|i| (i + 1..4).all(|j| v[i] != v[j]));
        distinct
            && t.is_strongly_adjacent(self.a1, self.a2)
            && t.is_strongly_adjacent(self.b1, self.b2)
            && t.is_strongly_antiadjacent(self.a1, self.b2)
            && t.is_strongly_antiadjacent(self.b1, self.a2)
    }
}

/// All proper quadruples in lexicographic order of `(a1, b1, a2, b2)`.
pub fn enumerate_quadruples(t: &Trigraph) -> Vec<ProperQuadruple> {
    quadruples(t).collect()
}

/// Lazy form of [`enumerate_quadruples`].
pub fn quadruples(t: &Trigraph) -> impl Iterator<Item = ProperQuadruple> + '_ {
    let n = t.vertex_count();
    let strong: Vec<Vec<usize>> = (0..n).map(|v| t.strong_neighbors(v).collect()).collect();
    let strong2 = strong.clone();
    (0..n)
        .flat_map(move |a1| (0..n).filter(move |&b1| b1 != a1).map(move |b1| (a1, b1)))
        .flat_map(move |(a1, b1)| {
            strong[a1]
                .clone()
                .into_iter()
                .filter(move |&a2| a2 != b1 && t.is_strongly_antiadjacent(b1, a2))
                .map(move |a2| (a1, b1, a2))
        })
        .flat_map(move |(a1, b1, a2)| {
            strong2[b1]
                .clone()
                .into_iter()
                .filter(move |&b2| b2 != a1 && b2 != a2 && t.is_strongly_antiadjacent(a1, b2))
                .map(move |b2| ProperQuadruple { a1, b1, a2, b2 })
        })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FragmentKind {
    TwoJoin,
    ComplementTwoJoin,
    HomogeneousPair,
}

/// The eight sets of a weak fragment `X = A1 ∪ B1 ∪ C1 ∪ D1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeakFragmentSplit {
    pub a1: VertexSet,
    pub b1: VertexSet,
    pub c1: VertexSet,
    pub d1: VertexSet,
    pub a2: VertexSet,
    pub b2: VertexSet,
    pub c2: VertexSet,
    pub d2: VertexSet,
    pub kind: FragmentKind,
}

impl WeakFragmentSplit {
    pub fn x(&self) -> VertexSet {
        self.a1.union(&self.b1).union(&self.c1).union(&self.d1)
    }

    pub fn outside(&self) -> VertexSet {
        self.a2.union(&self.b2).union(&self.c2).union(&self.d2)
    }

    fn kind_holds(&self, kind: FragmentKind) -> bool {
        match kind {
            FragmentKind::HomogeneousPair => {
                self.c1.is_empty() && self.d1.is_empty() && !self.c2.is_empty() && !self.d2.is_empty()
            }
            FragmentKind::TwoJoin => self.d1.is_empty() && self.d2.is_empty(),
            FragmentKind::ComplementTwoJoin => self.c1.is_empty() && self.c2.is_empty(),
        }
    }

    /// The first type whose emptiness pattern holds, trying 2-join,
    /// complement 2-join, then homogeneous pair.
    pub fn infer_kind(&self) -> Option<FragmentKind> {
        [FragmentKind::TwoJoin, FragmentKind::ComplementTwoJoin, FragmentKind::HomogeneousPair]
            .into_iter()
            .find(|&k| self.kind_holds(k))
    }

    /// Violated weak-fragment conditions; empty iff the split is valid.
    pub fn violations(&self, t: &Trigraph) -> Vec<String> {
        let mut out = Vec::new();
        let parts = [&self.a1, &self.b1, &self.c1, &self.d1, &self.a2, &self.b2, &self.c2, &self.d2];
        let total: usize = parts.iter().map(|p| p.len()).sum();
        let union = parts.iter().fold(VertexSet::new(), |acc, p| acc.union(p));
        if total != t.vertex_count() || union.len() != total {
            out.push("the eight sets do not partition the vertex set".into());
            return out;
        }
        let u = |a: &VertexSet, b: &VertexSet| a.union(b);
        let rules: [(&str, &VertexSet, VertexSet, bool); 6] = [
            ("A1 strongly complete to A2 ∪ D2", &self.a1, u(&self.a2, &self.d2), true),
            ("A1 strongly anticomplete to B2 ∪ C2", &self.a1, u(&self.b2, &self.c2), false),
            ("B1 strongly complete to B2 ∪ D2", &self.b1, u(&self.b2, &self.d2), true),
            ("B1 strongly anticomplete to A2 ∪ C2", &self.b1, u(&self.a2, &self.c2), false),
            ("C1 strongly anticomplete to A2 ∪ B2 ∪ C2", &self.c1, u(&u(&self.a2, &self.b2), &self.c2), false),
            ("D1 strongly complete to A2 ∪ B2 ∪ D2", &self.d1, u(&u(&self.a2, &self.b2), &self.d2), true),
        ];
        for (name, left, right, complete) in rules.iter() {
            let ok = if *complete { t.sets_strongly_complete(left, right) } else { t.sets_strongly_anticomplete(left, right) };
            if !ok {
                out.push(format!("{name} fails"));
            }
        }
        let x = self.x().len();
        if x < 4 || t.vertex_count() - x < 4 {
            out.push(format!("side sizes {x} and {} must both be at least 4", t.vertex_count() - x));
        }
        for (name, s) in [("A1", &self.a1), ("B1", &self.b1), ("A2", &self.a2), ("B2", &self.b2)] {
            if s.is_empty() {
                out.push(format!("{name} is empty"));
            }
        }
        if !self.kind_holds(self.kind) {
            out.push(format!("emptiness pattern does not match type {:?}", self.kind));
        }
        out
    }

    /// `violations(t).is_empty()`, without building messages. Assumes the
    /// eight sets partition the vertex set.
    pub fn is_valid(&self, t: &Trigraph) -> bool {
        let x = self.x().len();
        let complete = |l: &VertexSet, rs: &[&VertexSet]| rs.iter().all(|r| t.sets_strongly_complete(l, r));
        let anti = |l: &VertexSet, rs: &[&VertexSet]| rs.iter().all(|r| t.sets_strongly_anticomplete(l, r));
        x >= 4
            && t.vertex_count() - x >= 4
            && ![&self.a1, &self.b1, &self.a2, &self.b2].iter().any(|s| s.is_empty())
            && self.kind_holds(self.kind)
            && complete(&self.a1, &[&self.a2, &self.d2])
            && anti(&self.a1, &[&self.b2, &self.c2])
            && complete(&self.b1, &[&self.b2, &self.d2])
            && anti(&self.b1, &[&self.a2, &self.c2])
            && anti(&self.c1, &[&self.a2, &self.b2, &self.c2])
            && complete(&self.d1, &[&self.a2, &self.b2, &self.d2])
    }

    /// `true` iff the quadruple sits in `A1, B1, A2, B2` respectively.
    pub fn is_compatible_with(&self, z: &ProperQuadruple) -> bool {
        self.a1.contains(z.a1) && self.b1.contains(z.b1) && self.a2.contains(z.a2) && self.b2.contains(z.b2)
    }
}

/// Split `(A1, B1, C1, A2, B2, C2)` of a 2-join, or of a complement 2-join
/// when `complemented` (then all conditions are read in the complement).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwoJoinSplit {
    pub a1: VertexSet,
    pub b1: VertexSet,
    pub c1: VertexSet,
    pub a2: VertexSet,
    pub b2: VertexSet,
    pub c2: VertexSet,
    pub complemented: bool,
    pub parity: Parity,
}

/// Outcome of comparing path parities on the two sides of a 2-join.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "kebab-case")]
pub enum ParityCheck {
    Agree { parity: Parity },
    Conflict { side1: Parity, side2: Parity },
    Missing { side1: Option<Parity>, side2: Option<Parity> },
}

impl TwoJoinSplit {
    pub fn x1(&self) -> VertexSet {
        self.a1.union(&self.b1).union(&self.c1)
    }

    pub fn x2(&self) -> VertexSet {
        self.a2.union(&self.b2).union(&self.c2)
    }

    /// The split with the two sides exchanged.
    pub fn swapped(&self) -> TwoJoinSplit {
        TwoJoinSplit {
            a1: self.a2.clone(),
            b1: self.b2.clone(),
            c1: self.c2.clone(),
            a2: self.a1.clone(),
            b2: self.b1.clone(),
            c2: self.c1.clone(),
            complemented: self.complemented,
            parity: self.parity,
        }
    }

    /// The trigraph in which this split is a plain 2-join.
    pub fn frame<'a>(&self, t: &'a Trigraph) -> Cow<'a, Trigraph> {
        if self.complemented {
            Cow::Owned(t.complement())
        } else {
            Cow::Borrowed(t)
        }
    }

    /// Parities of `A_i`–`B_i` paths with interior in `C_i` on both sides.
    pub fn parity_check(&self, t: &Trigraph) -> ParityCheck {
        let f = self.frame(t);
        let p1 = find_path_parity(&f, &self.a1, &self.b1, &self.c1);
        let p2 = find_path_parity(&f, &self.a2, &self.b2, &self.c2);
        match (p1, p2) {
            (Some(a), Some(b)) if a == b => ParityCheck::Agree { parity: a },
            (Some(a), Some(b)) => ParityCheck::Conflict { side1: a, side2: b },
            (side1, side2) => ParityCheck::Missing { side1, side2 },
        }
    }

    /// Every component of `T|X_i` meets both `A_i` and `B_i` (in the frame).
    pub fn is_proper(&self, t: &Trigraph) -> bool {
        let f = self.frame(t);
        [(&self.a1, &self.b1, self.x1()), (&self.a2, &self.b2, self.x2())]
            .iter()
            .all(|(a, b, x)| f.components(x).iter().all(|c| !c.is_disjoint(a) && !c.is_disjoint(b)))
    }
}

/// Violations of the 2-join definition alone (properness not included).
pub fn two_join_violations(t: &Trigraph, s: &TwoJoinSplit) -> Vec<String> {
    let f = s.frame(t);
    let mut out = Vec::new();
    let parts = [&s.a1, &s.b1, &s.c1, &s.a2, &s.b2, &s.c2];
    let total: usize = parts.iter().map(|p| p.len()).sum();
    let union = parts.iter().fold(VertexSet::new(), |acc, p| acc.union(p));
    if total != t.vertex_count() || union.len() != total {
        out.push("the six sets do not partition the vertex set".into());
        return out;
    }
    for (name, p) in [("A1", &s.a1), ("B1", &s.b1), ("A2", &s.a2), ("B2", &s.b2)] {
        if p.is_empty() {
            out.push(format!("{name} is empty"));
        }
    }
    let (x1, x2) = (s.x1(), s.x2());
    if x1.iter().any(|u| x2.iter().any(|v| f.is_switchable(u, v))) {
        out.push("a switchable pair meets both X1 and X2".into());
    }
    if !f.sets_strongly_complete(&s.a1, &s.a2) {
        out.push("A1 is not strongly complete to A2".into());
    }
    if !f.sets_strongly_complete(&s.b1, &s.b2) {
        out.push("B1 is not strongly complete to B2".into());
    }
    let strong_other = x1.iter().any(|u| {
        x2.iter().any(|v| {
            f.is_strongly_adjacent(u, v)
                && !(s.a1.contains(u) && s.a2.contains(v))
                && !(s.b1.contains(u) && s.b2.contains(v))
        })
    });
    if strong_other {
        out.push("a strong edge between X1 and X2 is not between A1 and A2 or B1 and B2".into());
    }
    for (i, (a, b, x)) in [(&s.a1, &s.b1, &x1), (&s.a2, &s.b2, &x2)].into_iter().enumerate() {
        let side = i + 1;
        if x.len() < 3 {
            out.push(format!("|X{side}| < 3"));
        }
        if a.len() == 1 && b.len() == 1 && x.len() == 3 {
            let av = a.first().unwrap();
            let bv = b.first().unwrap();
            let mid = x.iter().find(|&v| v != av && v != bv).unwrap();
            if f.is_adjacent(av, mid) && f.is_adjacent(mid, bv) && !f.is_adjacent(av, bv) {
                out.push(format!("X{side} is a path of length two between its A and B vertices"));
            }
        }
    }
    out
}

/// Violations of the 2-join definition and properness; with
/// `require_class_invariants`, also the structural consequences that hold in
/// the class (neighbours inside each side, antineighbours between `A_i` and
/// `B_i`, sizes at least four).
pub fn verify_2join(t: &Trigraph, s: &TwoJoinSplit, require_class_invariants: bool) -> Vec<String> {
    let mut out = two_join_violations(t, s);
    if !out.is_empty() {
        return out;
    }
    if require_class_invariants {
        out.extend(class_invariant_violations(t, s));
    } else if !s.is_proper(t) {
        out.push("a component of some side misses A_i or B_i".into());
    }
    out
}

/// Items that every 2-join of an in-class trigraph satisfies beyond the
/// definition: each is a witness that the trigraph is outside the class.
pub fn class_invariant_violations(t: &Trigraph, s: &TwoJoinSplit) -> Vec<String> {
    let f = s.frame(t);
    let (x1, x2) = (s.x1(), s.x2());
    let mut out = Vec::new();
    if !s.is_proper(t) {
        out.push("a component of some side misses A_i or B_i".into());
    }
    for (i, (a, b, c, x)) in [(&s.a1, &s.b1, &s.c1, &x1), (&s.a2, &s.b2, &s.c2, &x2)].into_iter().enumerate() {
        let side = i + 1;
        if x.iter().any(|v| !x.iter().any(|u| u != v && f.is_adjacent(u, v))) {
            out.push(format!("a vertex of X{side} has no neighbour in X{side}"));
        }
        if a.iter().any(|v| !b.iter().any(|u| f.is_antiadjacent(u, v))) {
            out.push(format!("a vertex of A{side} has no antineighbour in B{side}"));
        }
        if b.iter().any(|v| !a.iter().any(|u| f.is_antiadjacent(u, v))) {
            out.push(format!("a vertex of B{side} has no antineighbour in A{side}"));
        }
        let cb = c.union(b);
        if a.iter().any(|v| !cb.iter().any(|u| f.is_adjacent(u, v))) {
            out.push(format!("a vertex of A{side} has no neighbour in C{side} ∪ B{side}"));
        }
        let ca = c.union(a);
        if b.iter().any(|v| !ca.iter().any(|u| f.is_adjacent(u, v))) {
            out.push(format!("a vertex of B{side} has no neighbour in C{side} ∪ A{side}"));
        }
        if c.is_empty() && (a.len() < 2 || b.len() < 2) {
            out.push(format!("C{side} is empty but A{side} or B{side} is a single vertex"));
        }
        if x.len() < 4 {
            out.push(format!("|X{side}| < 4"));
        }
    }
    out
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::trigraph::{complete, cycle, Adjacency};

    pub(crate) fn c8_split() -> TwoJoinSplit {
        TwoJoinSplit {
            a1: [0].into(),
            b1: [3].into(),
            c1: [1, 2].into(),
            a2: [7].into(),
            b2: [4].into(),
            c2: [5, 6].into(),
            complemented: false,
            parity: Parity::Odd,
        }
    }

    #[test]
    fn quadruples() {
        assert!(enumerate_quadruples(&complete(4)).is_empty());
        assert!(enumerate_quadruples(&Trigraph::from_parts(2, &[(0, 1)], &[])).is_empty());
        let q = enumerate_quadruples(&cycle(8));
        assert!(q.contains(&ProperQuadruple { a1: 0, b1: 3, a2: 7, b2: 4 }));
        assert!(q.iter().all(|z| z.is_proper(&cycle(8))));
    }

    #[test]
    fn c8_split_verifies() {
        let c8 = cycle(8);
        let s = c8_split();
        assert!(verify_2join(&c8, &s, true).is_empty());
        assert_eq!(s.parity_check(&c8), ParityCheck::Agree { parity: Parity::Odd });
        let mut bad = s.clone();
        bad.c1 = [1, 2, 3].into();
        bad.b1 = VertexSet::new();
        assert!(!verify_2join(&c8, &bad, false).is_empty());
        let mut sw = c8.clone();
        sw.set(2, 5, Adjacency::Switchable);
        assert!(verify_2join(&sw, &s, false).iter().any(|v| v.contains("switchable")));
    }

    #[test]
    fn weak_split_checks() {
        let c8 = cycle(8);
        let w = WeakFragmentSplit {
            a1: [0].into(),
            b1: [3].into(),
            c1: [1, 2].into(),
            d1: VertexSet::new(),
            a2: [7].into(),
            b2: [4].into(),
            c2: [5, 6].into(),
            d2: VertexSet::new(),
            kind: FragmentKind::TwoJoin,
        };
        assert!(w.violations(&c8).is_empty());
        assert_eq!(w.infer_kind(), Some(FragmentKind::TwoJoin));
        let mut bad = w.clone();
        bad.kind = FragmentKind::ComplementTwoJoin;
        assert!(!bad.violations(&c8).is_empty());
    }
}
