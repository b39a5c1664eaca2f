//! Proper 2-join and complement 2-join search driven by forcing.

use super::forcing::{forcing_with_rows, AdjacencyRows, ForcingMode, ForcingOutcome};
use super::{class_invariant_violations, two_join_violations, ParityCheck, ProperQuadruple, TwoJoinSplit};
use crate::trigraph::{Parity, Trigraph, VertexSet};

/// The split of `(x1, V ∖ x1)` as a 2-join (of the complement when
/// `complemented`), if the 2-join definition holds.
pub fn two_join_split_of(t: &Trigraph, x1: &VertexSet, complemented: bool) -> Option<TwoJoinSplit> {
    let f = if complemented { t.complement() } else { t.clone() };
    let n = t.vertex_count();
    let in_x1 = x1.to_mask(n);
    let x2: Vec<usize> = (0..n).filter(|&v| !in_x1[v]).collect();
    let mut groups: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    let mut c1 = Vec::new();
    for v in x1.iter() {
        if x2.iter().any(|&u| f.is_switchable(u, v)) {
            return None;
        }
        let nb: Vec<usize> = x2.iter().copied().filter(|&u| f.is_strongly_adjacent(u, v)).collect();
        if nb.is_empty() {
            c1.push(v);
            continue;
        }
        match groups.iter_mut().find(|g| g.0 == nb) {
            Some(g) => g.1.push(v),
            None => groups.push((nb, vec![v])),
        }
    }
    if groups.len() != 2 {
        return None;
    }
    // groups are discovered in increasing vertex order, so the first holds the minimum
    let (na, a1) = groups[0].clone();
    let (nb, b1) = groups[1].clone();
    let c2: Vec<usize> = x2.iter().copied().filter(|u| !na.contains(u) && !nb.contains(u)).collect();
    let mut s = TwoJoinSplit {
        a1: a1.into(),
        b1: b1.into(),
        c1: c1.into(),
        a2: na.into(),
        b2: nb.into(),
        c2: c2.into(),
        complemented,
        parity: Parity::Odd,
    };
    if !s.a2.is_disjoint(&s.b2) || !two_join_violations(t, &s).is_empty() {
        return None;
    }
    s.parity = match s.parity_check(t) {
        ParityCheck::Agree { parity } => parity,
        ParityCheck::Conflict { side1, .. } => side1,
        ParityCheck::Missing { side1, side2 } => side1.or(side2).unwrap_or(Parity::Odd),
    };
    Some(s)
}

/// Outcome of a 2-join search over all proper quadruples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TwoJoinSearch {
    /// A proper 2-join satisfying every in-class invariant, with agreeing
    /// path parities on both sides.
    Found(TwoJoinSplit),
    /// A 2-join violating an invariant that every in-class 2-join satisfies.
    InvariantViolation { split: TwoJoinSplit, violations: Vec<String> },
    /// A 2-join whose two sides carry paths of different parities.
    ParityConflict { split: TwoJoinSplit, side1: Parity, side2: Parity },
    /// No 2-join compatible with any proper quadruple.
    None,
}

/// Counters describing the work done by a search.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub quadruples: u64,
    pub forcing_calls: u64,
    pub pair_reads: u64,
}

/// Split of a closed forcing set `r` (a 2-join side) in the frame `f`.
fn split_of_closed(f: &Trigraph, z: &ProperQuadruple, r: &VertexSet) -> Option<TwoJoinSplit> {
    let n = f.vertex_count();
    let in_r = r.to_mask(n);
    let mut parts: [Vec<usize>; 6] = Default::default();
    for v in 0..n {
        let (p, q, off) = if in_r[v] { (z.a2, z.b2, 0) } else { (z.a1, z.b1, 3) };
        let idx = match (f.is_strongly_adjacent(p, v), f.is_strongly_adjacent(q, v)) {
            (true, false) => 0,
            (false, true) => 1,
            (false, false) => 2,
            (true, true) => return None,
        };
        parts[off + idx].push(v);
    }
    let [a1, b1, c1, a2, b2, c2] = parts.map(VertexSet::from);
    let s = TwoJoinSplit { a1, b1, c1, a2, b2, c2, complemented: false, parity: Parity::Odd };
    two_join_violations(f, &s).is_empty().then_some(s)
}

/// Classifies a 2-join found in the frame; `None` means keep searching.
fn judge(f: &Trigraph, mut s: TwoJoinSplit) -> Option<TwoJoinSearch> {
    let violations = class_invariant_violations(f, &s);
    if !violations.is_empty() {
        return Some(TwoJoinSearch::InvariantViolation { split: s, violations });
    }
    match s.parity_check(f) {
        ParityCheck::Agree { parity } => {
            s.parity = parity;
            Some(TwoJoinSearch::Found(s))
        }
        ParityCheck::Conflict { side1, side2 } => Some(TwoJoinSearch::ParityConflict { split: s, side1, side2 }),
        // a proper 2-join always has a path on each side
        ParityCheck::Missing { .. } => None,
    }
}

fn closure(f: &Trigraph, rows: &AdjacencyRows, z: &ProperQuadruple, r0: VertexSet, stats: &mut SearchStats) -> Option<VertexSet> {
    stats.forcing_calls += 1;
    let (out, reads) = forcing_with_rows(f, rows, z, &r0, ForcingMode::TwoJoin);
    stats.pair_reads += reads;
    match out {
        ForcingOutcome::Fragment(s) => Some(s.x()),
        ForcingOutcome::Closed { r, .. } => Some(r),
        ForcingOutcome::Aborted => None,
    }
}

/// Searches the 2-joins of `f` containing `seed` on the side of `z.a1`. A
/// closure with fewer than four vertices that is not a 2-join side is
/// extended by one more seed vertex; this covers sides made of `a1`, `b1` and
/// degree-two vertices between them.
fn search_from(f: &Trigraph, rows: &AdjacencyRows, z: &ProperQuadruple, seed: &VertexSet, free: &[usize], stats: &mut SearchStats) -> Option<TwoJoinSearch> {
    let r = closure(f, rows, z, seed.clone(), stats)?;
    if let Some(s) = split_of_closed(f, z, &r) {
        return judge(f, s);
    }
    if r.len() >= 4 {
        return None;
    }
    let last = seed.iter().filter(|&v| v != z.a1 && v != z.b1).max();
    for &u in free.iter().filter(|&&u| last.map_or(true, |l| u > l) && !r.contains(u)) {
        let mut next = seed.clone();
        next.insert(u);
        if let Some(res) = search_from(f, rows, z, &next, free, stats) {
            return Some(res);
        }
    }
    None
}

fn search_quadruple(f: &Trigraph, rows: &AdjacencyRows, z: &ProperQuadruple, stats: &mut SearchStats) -> Option<TwoJoinSearch> {
    let free: Vec<usize> = f.vertices().filter(|&v| ![z.a1, z.b1, z.a2, z.b2].contains(&v)).collect();
    search_from(f, rows, z, &[z.a1, z.b1].into(), &free, stats)
}

/// One frame (`t` or its complement) prepared for searching.
struct Frame {
    f: Trigraph,
    rows: AdjacencyRows,
    complemented: bool,
}

impl Frame {
    fn new(t: &Trigraph, complemented: bool) -> Self {
        let f = if complemented { t.complement() } else { t.clone() };
        let rows = AdjacencyRows::new(&f);
        Frame { f, rows, complemented }
    }

    /// Searches the quadruples with the given `a1, b1`, in the order of
    /// [`super::quadruples`].
    fn search_pair(&self, a1: usize, b1: usize, stats: &mut SearchStats) -> Option<TwoJoinSearch> {
        let f = &self.f;
        for a2 in f.strong_neighbors(a1).filter(|&a2| a2 != b1 && f.is_strongly_antiadjacent(b1, a2)) {
            for b2 in f.strong_neighbors(b1).filter(|&b2| b2 != a1 && b2 != a2 && f.is_strongly_antiadjacent(a1, b2)) {
                stats.quadruples += 1;
                let z = ProperQuadruple { a1, b1, a2, b2 };
                if let Some(mut res) = search_quadruple(f, &self.rows, &z, stats) {
                    match &mut res {
                        TwoJoinSearch::Found(s)
                        | TwoJoinSearch::InvariantViolation { split: s, .. }
                        | TwoJoinSearch::ParityConflict { split: s, .. } => s.complemented = self.complemented,
                        TwoJoinSearch::None => {}
                    }
                    return Some(res);
                }
            }
        }
        None
    }
}

fn search_frames(t: &Trigraph, frames: &[Frame]) -> (TwoJoinSearch, SearchStats) {
    let mut stats = SearchStats::default();
    let n = t.vertex_count();
    if n < 6 {
        return (TwoJoinSearch::None, stats);
    }
    for a1 in 0..n {
        for b1 in (0..n).filter(|&b1| b1 != a1) {
            for frame in frames {
                if let Some(res) = frame.search_pair(a1, b1, &mut stats) {
                    return (res, stats);
                }
            }
        }
    }
    (TwoJoinSearch::None, stats)
}

/// Runs the search in `t` (or its complement) and reports the first result.
pub fn search_2join(t: &Trigraph, complemented: bool) -> (TwoJoinSearch, SearchStats) {
    search_frames(t, &[Frame::new(t, complemented)])
}

/// Searches `t` and its complement together, alternating between them for
/// each choice of `a1, b1`, and reports the first result of either.
pub fn search_2join_either(t: &Trigraph) -> (TwoJoinSearch, SearchStats) {
    search_frames(t, &[Frame::new(t, false), Frame::new(t, true)])
}

/// A proper 2-join with both sides of at least four vertices and agreeing
/// parities, if the search finds one.
pub fn find_proper_2join(t: &Trigraph) -> Option<TwoJoinSplit> {
    match search_2join(t, false).0 {
        TwoJoinSearch::Found(s) => Some(s),
        _ => None,
    }
}

/// [`find_proper_2join`] in the complement; the split has `complemented` set.
pub fn find_proper_complement_2join(t: &Trigraph) -> Option<TwoJoinSplit> {
    match search_2join(t, true).0 {
        TwoJoinSearch::Found(s) => Some(s),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detect::verify_2join;
    use crate::oracle::proper_2joins_bf;
    use crate::trigraph::{cycle, Graph};

    #[test]
    fn c8_two_join() {
        let c8 = cycle(8);
        let s = find_proper_2join(&c8).unwrap();
        assert!(verify_2join(&c8, &s, true).is_empty());
        assert_eq!(s.x1().len(), 4);
        assert_eq!(s.parity, Parity::Odd);
        for part in [&s.a1, &s.b1, &s.a2, &s.b2] {
            assert_eq!(part.len(), 1);
        }
        assert!(find_proper_complement_2join(&c8).is_none());
    }

    #[test]
    fn complement_of_c8() {
        let t = cycle(8).complement();
        let s = find_proper_complement_2join(&t).unwrap();
        assert!(s.complemented);
        assert!(verify_2join(&t, &s, true).is_empty());
        assert!(find_proper_2join(&t).is_none());
    }

    #[test]
    fn absent_cases() {
        assert!(find_proper_2join(&cycle(6)).is_none());
        assert!(find_proper_complement_2join(&cycle(6).complement()).is_none());
        let k33 = Graph::from_edges(6, &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]);
        let k33 = Trigraph::from_graph(&k33);
        assert!(find_proper_2join(&k33).is_none());
        // the only proper 2-joins have sides of three vertices, which a balanced skew-partition permits
        assert!(proper_2joins_bf(&k33).unwrap().iter().all(|s| s.x1().len() == 3));
        assert!(crate::oracle::has_bsp_bf(&k33).unwrap());
    }

    #[test]
    fn split_of_matches_definition() {
        let c8 = cycle(8);
        let s = two_join_split_of(&c8, &[0, 1, 2, 3].into(), false).unwrap();
        assert_eq!(s.a1, VertexSet::from([0]));
        assert_eq!(s.b1, VertexSet::from([3]));
        assert_eq!(s.parity, Parity::Odd);
        assert!(two_join_split_of(&c8, &[0, 1, 2].into(), false).is_none());
        assert!(two_join_split_of(&c8, &[0, 2, 4, 6].into(), false).is_none());
    }

    #[test]
    fn search_agrees_with_exhaustive_enumeration() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..150 {
            let n = rng.gen_range(6..=10);
            let t = crate::io::random_trigraph(&mut rng, n, 0.35, 0.05);
            let all = proper_2joins_bf(&t).unwrap();
            match search_2join(&t, false).0 {
                TwoJoinSearch::Found(s) => {
                    assert!(verify_2join(&t, &s, true).is_empty());
                }
                TwoJoinSearch::InvariantViolation { split, .. } => {
                    assert!(two_join_violations(&t, &split).is_empty());
                    assert!(!class_invariant_violations(&t, &split).is_empty());
                }
                TwoJoinSearch::ParityConflict { split, .. } => {
                    assert!(matches!(split.parity_check(&t), ParityCheck::Conflict { .. }));
                }
                TwoJoinSearch::None => assert!(all.is_empty(), "missed {:?}", all[0]),
            }
        }
    }
}
