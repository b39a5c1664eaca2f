//! Ends: proper fragments containing no smaller proper fragment, found by
//! exhaustive seeding of the three forcing searches.

use serde::{Deserialize, Serialize};

use super::forcing::{forcing_with_rows, AdjacencyRows, ForcingMode, ForcingOutcome};
use super::homogeneous::{forcing_homogeneous, HomogeneousPairSplit};
use super::twojoin::two_join_split_of;
use super::{quadruples, verify_2join, TwoJoinSplit};
use crate::decompose::{build_block, build_block_homogeneous, Block, BlockSide, HomogeneousSide};
use crate::trigraph::{Trigraph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum EndFragment {
    /// Side `X1` of a proper 2-join.
    TwoJoin { split: TwoJoinSplit },
    /// Side `X1` of a proper complement 2-join.
    ComplementTwoJoin { split: TwoJoinSplit },
    /// `A ∪ B` of a proper homogeneous pair.
    HomogeneousPair { split: HomogeneousPairSplit },
}

impl EndFragment {
    pub fn x(&self) -> VertexSet {
        match self {
            EndFragment::TwoJoin { split } | EndFragment::ComplementTwoJoin { split } => split.x1(),
            EndFragment::HomogeneousPair { split } => split.pair(),
        }
    }

    pub fn block(&self, t: &Trigraph) -> Option<Block> {
        match self {
            EndFragment::TwoJoin { split } | EndFragment::ComplementTwoJoin { split } => {
                build_block(t, split, BlockSide::First).ok()
            }
            EndFragment::HomogeneousPair { split } => build_block_homogeneous(t, split, HomogeneousSide::Pair).ok(),
        }
    }
}

fn better(candidate: &VertexSet, best: &Option<EndFragment>) -> bool {
    match best {
        None => true,
        Some(b) => {
            let x = b.x();
            (candidate.len(), candidate.as_slice()) < (x.len(), x.as_slice())
        }
    }
}

/// Closures of `{a1, b1} ∪ extra` for all extra seeds, in `f` (a 2-join
/// search of the frame). Small closures are extended by a further seed.
fn two_join_sides(f: &Trigraph, complemented: bool, best: &mut Option<EndFragment>, t: &Trigraph) {
    let n = f.vertex_count();
    let rows = AdjacencyRows::new(f);
    for z in quadruples(f) {
        let free: Vec<usize> = (0..n).filter(|&v| ![z.a1, z.b1, z.a2, z.b2].contains(&v)).collect();
        let mut stack: Vec<VertexSet> = vec![[z.a1, z.b1].into()];
        while let Some(seed) = stack.pop() {
            let r = match forcing_with_rows(f, &rows, &z, &seed, ForcingMode::TwoJoin).0 {
                ForcingOutcome::Fragment(s) => s.x(),
                ForcingOutcome::Closed { r, .. } => r,
                ForcingOutcome::Aborted => continue,
            };
            if r.len() >= 4 {
                if better(&r, best) {
                    if let Some(s) = two_join_split_of(t, &r, complemented) {
                        if verify_2join(t, &s, false).is_empty() {
                            *best = Some(if complemented {
                                EndFragment::ComplementTwoJoin { split: s }
                            } else {
                                EndFragment::TwoJoin { split: s }
                            });
                        }
                    }
                }
                continue;
            }
            let last = seed.iter().filter(|&v| v != z.a1 && v != z.b1).max();
            for &u in free.iter().filter(|&&u| last.map_or(true, |l| u > l) && !r.contains(u)) {
                let mut next = seed.clone();
                next.insert(u);
                stack.push(next);
            }
        }
    }
}

fn homogeneous_pairs(t: &Trigraph, best: &mut Option<EndFragment>) {
    let n = t.vertex_count();
    for a1 in 0..n {
        for b1 in (0..n).filter(|&b| b != a1) {
            for a2 in (0..n).filter(|&v| t.is_strongly_adjacent(a1, v) && t.is_strongly_antiadjacent(b1, v)) {
                for u in (0..n).filter(|&u| u != a1 && u != b1 && u != a2) {
                    if let Some(s) = forcing_homogeneous(t, (a1, b1, a2), &[a1, b1, u].into()) {
                        if better(&s.pair(), best) {
                            *best = Some(EndFragment::HomogeneousPair { split: s });
                        }
                    }
                }
            }
        }
    }
}

/// A proper fragment of minimum cardinality (ties broken by the sorted
/// vertex list) over the 2-join, complement 2-join and homogeneous pair
/// searches.
pub fn find_end_fragment(t: &Trigraph) -> Option<EndFragment> {
    let mut best = None;
    if t.vertex_count() >= 6 {
        two_join_sides(t, false, &mut best, t);
        two_join_sides(&t.complement(), true, &mut best, t);
    }
    homogeneous_pairs(t, &mut best);
    best
}

/// An end of `t` together with its block of decomposition.
pub fn find_end(t: &Trigraph) -> Option<(EndFragment, Block)> {
    let end = find_end_fragment(t)?;
    let block = end.block(t)?;
    Some((end, block))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::weak_fragments_bf;
    use crate::trigraph::{cycle, Graph};

    #[test]
    fn c8_end() {
        let c8 = cycle(8);
        let (end, block) = find_end(&c8).unwrap();
        assert_eq!(end.x(), VertexSet::from([0, 1, 2, 3]));
        assert!(matches!(end, EndFragment::TwoJoin { .. }));
        assert_eq!(block.trigraph.vertex_count(), 6);
        assert_eq!(block.trigraph.switchable_pairs().len(), 1);
        // no proper subset of size at least four is a fragment
        let all = weak_fragments_bf(&c8).unwrap();
        assert!(all.iter().all(|f| f.x().len() >= 4));
    }

    #[test]
    fn absent_cases() {
        assert!(find_end(&cycle(6)).is_none());
        let k33 = Graph::from_edges(6, &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]);
        assert!(find_end(&Trigraph::from_graph(&k33)).is_none());
    }

    #[test]
    fn homogeneous_pair_end() {
        let mut edges = vec![(0, 2), (1, 3), (4, 6), (5, 7)];
        edges.extend([(4, 0), (4, 1), (5, 2), (5, 3), (6, 0), (6, 1), (6, 2), (6, 3)]);
        let t = Trigraph::from_parts(8, &edges, &[]);
        let end = find_end_fragment(&t).unwrap();
        assert_eq!(end.x().len(), 4);
    }
}
