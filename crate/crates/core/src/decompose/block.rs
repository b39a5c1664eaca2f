//! Blocks of decomposition: one side of a split plus marker vertices
//! standing for the other side.

use serde::{Deserialize, Serialize};

use super::{DecompKind, LabeledComponent};
use crate::detect::{two_join_violations, HomogeneousPairSplit, TwoJoinSplit};
use crate::error::Error;
use crate::trigraph::{Adjacency, Parity, Trigraph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub trigraph: Trigraph,
    pub markers: LabeledComponent,
    /// `side_map[i]` is the original vertex of block vertex `i`; markers
    /// come after the mapped vertices.
    pub side_map: Vec<usize>,
}

impl Block {
    pub fn is_marker(&self, v: usize) -> bool {
        v >= self.side_map.len()
    }
}

/// Which side of a 2-join the block keeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BlockSide {
    First,
    Second,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HomogeneousSide {
    /// Keeps `A ∪ B`.
    Pair,
    /// Keeps `C ∪ D ∪ E ∪ F`.
    Outer,
}

fn with_markers(t: &Trigraph, keep: &VertexSet, extra: usize) -> Trigraph {
    let mut b = Trigraph::new(keep.len() + extra).with_weights(vec![0; keep.len() + extra]);
    let kept = t.induced(keep.as_slice());
    for i in 0..keep.len() {
        b.set_weight(i, kept.weight(i));
        for j in i + 1..keep.len() {
            b.set(i, j, kept.adjacency(i, j));
        }
    }
    b
}

fn join(b: &mut Trigraph, keep: &VertexSet, marker: usize, targets: &VertexSet) {
    for (i, v) in keep.iter().enumerate() {
        if targets.contains(v) {
            b.set(i, marker, Adjacency::StrongEdge);
        }
    }
}

/// Block of the 2-join `split` keeping `side`. Marker weights are 0.
pub fn build_block(t: &Trigraph, split: &TwoJoinSplit, side: BlockSide) -> Result<Block, Error> {
    let violations = two_join_violations(t, split);
    if !violations.is_empty() {
        return Err(Error::Contract(format!("invalid 2-join split: {}", violations.join("; "))));
    }
    let s = match side {
        BlockSide::First => split.clone(),
        BlockSide::Second => split.swapped(),
    };
    let frame = s.frame(t);
    let keep = s.x1();
    let k = keep.len();
    let even = s.parity == Parity::Even;
    let mut b = with_markers(&frame, &keep, if even { 3 } else { 2 });
    let (a, bm) = (k, k + 1);
    join(&mut b, &keep, a, &s.a1);
    join(&mut b, &keep, bm, &s.b1);
    let markers = if even {
        b.set(a, k + 2, Adjacency::Switchable);
        b.set(k + 2, bm, Adjacency::Switchable);
        LabeledComponent { a, b: bm, c: Some(k + 2) }
    } else {
        b.set(a, bm, Adjacency::Switchable);
        LabeledComponent { a, b: bm, c: None }
    };
    if s.complemented {
        b = b.complement();
    }
    Ok(Block { trigraph: b, markers, side_map: keep.as_slice().to_vec() })
}

/// Block of a proper homogeneous pair. The `Pair` side gets markers `c`
/// (complete to `A`) and `d` (complete to `B`); the outer side gets `a`
/// (complete to `C ∪ E`) and `b` (complete to `D ∪ E`).
pub fn build_block_homogeneous(t: &Trigraph, split: &HomogeneousPairSplit, side: HomogeneousSide) -> Result<Block, Error> {
    let violations = split.violations(t);
    if !violations.is_empty() {
        return Err(Error::Contract(format!("invalid homogeneous pair: {}", violations.join("; "))));
    }
    let (keep, first, second) = match side {
        HomogeneousSide::Pair => (split.pair(), split.a.clone(), split.b.clone()),
        HomogeneousSide::Outer => (split.outside(), split.c.union(&split.e), split.d.union(&split.e)),
    };
    let k = keep.len();
    let mut b = with_markers(t, &keep, 2);
    join(&mut b, &keep, k, &first);
    join(&mut b, &keep, k + 1, &second);
    b.set(k, k + 1, Adjacency::Switchable);
    Ok(Block { trigraph: b, markers: LabeledComponent { a: k, b: k + 1, c: None }, side_map: keep.as_slice().to_vec() })
}

/// Kind of decomposition given by a split.
pub(crate) fn kind_of(split: &TwoJoinSplit) -> DecompKind {
    DecompKind::of(split.complemented, split.parity)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::berge::is_berge_small;
    use crate::detect::tests::c8_split;
    use crate::trigraph::{cycle, ComponentShape, switchable_components};

    #[test]
    fn c8_odd_block_is_a_six_hole_with_switchable_pair() {
        let c8 = cycle(8);
        let s = c8_split();
        let b = build_block(&c8, &s, BlockSide::First).unwrap();
        assert_eq!(b.trigraph.vertex_count(), 6);
        assert_eq!(b.side_map, vec![0, 1, 2, 3]);
        let t = &b.trigraph;
        assert!(t.is_switchable(4, 5));
        assert!(t.is_strongly_adjacent(4, 0) && t.is_strongly_adjacent(5, 3));
        assert_eq!(t.weight(4), 0);
        assert_eq!(t.full_realization().edges().len(), 6);
        assert!(t.vertices().all(|v| t.full_realization().degree(v) == 2));
        let comps = switchable_components(t);
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].shape, ComponentShape::SinglePair);
        assert!(is_berge_small(t).unwrap());
    }

    #[test]
    fn even_and_complement_blocks() {
        let c8 = cycle(8);
        let mut s = c8_split();
        s.parity = Parity::Even;
        let b = build_block(&c8, &s, BlockSide::Second).unwrap();
        assert_eq!(b.trigraph.vertex_count(), 7);
        assert_eq!(b.markers.c, Some(6));
        let t = &b.trigraph;
        assert!(t.is_switchable(4, 6) && t.is_switchable(6, 5) && t.is_strongly_antiadjacent(4, 5));
        assert!((0..4).all(|v| t.is_strongly_antiadjacent(6, v)));

        let comp = c8.complement();
        let mut s = c8_split();
        s.complemented = true;
        let b = build_block(&comp, &s, BlockSide::First).unwrap();
        let direct = build_block(&c8, &c8_split(), BlockSide::First).unwrap();
        assert_eq!(b.trigraph, direct.trigraph.complement());
    }

    #[test]
    fn invalid_split_rejected() {
        let mut s = c8_split();
        let b1 = s.b1.clone();
        s.c1 = s.c1.union(&b1);
        s.b1 = VertexSet::new();
        assert!(build_block(&cycle(8), &s, BlockSide::First).is_err());
    }

    #[test]
    fn homogeneous_blocks() {
        let mut edges = vec![(0, 2), (1, 3), (4, 6), (5, 7)];
        edges.extend([(4, 0), (4, 1), (5, 2), (5, 3), (6, 0), (6, 1), (6, 2), (6, 3)]);
        let t = Trigraph::from_parts(8, &edges, &[]);
        let s = crate::detect::forcing_homogeneous(&t, (0, 2, 4), &[0, 1, 2].into()).unwrap();
        let pair = build_block_homogeneous(&t, &s, HomogeneousSide::Pair).unwrap();
        assert_eq!(pair.trigraph.vertex_count(), 6);
        assert!(pair.trigraph.is_switchable(4, 5));
        let outer = build_block_homogeneous(&t, &s, HomogeneousSide::Outer).unwrap();
        assert_eq!(outer.trigraph.vertex_count(), 6);
        // a is complete to C ∪ E = {4, 6}
        assert!(outer.trigraph.is_strongly_adjacent(4, 0) && outer.trigraph.is_strongly_adjacent(4, 2));
        assert!(is_berge_small(&pair.trigraph).unwrap() && is_berge_small(&outer.trigraph).unwrap());
    }
}
