//! The forcing procedure: grows a seed set `R` into the minimal weak fragment
//! compatible with a proper quadruple, moving vertices from `S` to `R` only
//! when every such fragment must contain them.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::{FragmentKind, ProperQuadruple, WeakFragmentSplit};
use crate::trigraph::{Trigraph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mark {
    AlphaBeta,
    Alpha,
    Beta,
    Epsilon,
    Unmarked,
}

/// Type of fragment being grown.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ForcingMode {
    Unknown,
    TwoJoin,
    ComplementTwoJoin,
}

/// Strong-edge and switchable rows of a trigraph as bitsets, shared by all
/// forcing runs on one trigraph.
#[derive(Clone, Debug)]
pub struct AdjacencyRows {
    n: usize,
    words: usize,
    strong: Vec<u64>,
    switchable: Vec<u64>,
}

impl AdjacencyRows {
    pub fn new(t: &Trigraph) -> Self {
        let n = t.vertex_count();
        let words = n.div_ceil(64).max(1);
        let mut strong = vec![0; n * words];
        let mut switchable = vec![0; n * words];
        for u in 0..n {
            for v in (0..n).filter(|&v| v != u) {
                if t.is_strongly_adjacent(u, v) {
                    strong[u * words + v / 64] |= 1 << (v % 64);
                } else if t.is_switchable(u, v) {
                    switchable[u * words + v / 64] |= 1 << (v % 64);
                }
            }
        }
        AdjacencyRows { n, words, strong, switchable }
    }

    fn strong(&self, v: usize) -> &[u64] {
        &self.strong[v * self.words..(v + 1) * self.words]
    }

    fn switchable(&self, v: usize) -> &[u64] {
        &self.switchable[v * self.words..(v + 1) * self.words]
    }

    /// Mask of the vertices `0..n` in word `i`.
    fn valid(&self, i: usize) -> u64 {
        let rest = self.n.saturating_sub(i * 64);
        if rest >= 64 {
            !0
        } else {
            (1u64 << rest) - 1
        }
    }
}

fn has(bits: &[u64], v: usize) -> bool {
    bits[v / 64] >> (v % 64) & 1 == 1
}

fn put(bits: &mut [u64], v: usize, on: bool) {
    if on {
        bits[v / 64] |= 1 << (v % 64);
    } else {
        bits[v / 64] &= !(1 << (v % 64));
    }
}

fn ones(bits: &[u64]) -> impl Iterator<Item = usize> + '_ {
    bits.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            (w != 0).then(|| {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                i * 64 + b
            })
        })
    })
}

/// Working state of one forcing run. `R`, `A` and `B` are bitsets.
#[derive(Clone, Debug)]
pub struct ForcingState {
    in_r: Vec<u64>,
    in_a: Vec<u64>,
    in_b: Vec<u64>,
    pub marks: Vec<Mark>,
    pub mode: ForcingMode,
    /// Elementary pair reads performed so far, counted as if pairs were
    /// read one at a time.
    pub pair_reads: u64,
    queue: VecDeque<usize>,
}

/// Result of a forcing run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ForcingOutcome {
    /// `R` is a weak fragment compatible with the quadruple.
    Fragment(WeakFragmentSplit),
    /// Forcing closed without contradiction, but `R` or `S` has fewer than
    /// four vertices.
    Closed { r: VertexSet, mode: ForcingMode },
    /// No weak fragment compatible with the quadruple contains the seed.
    Aborted,
}

struct Abort;

impl ForcingState {
    fn new(rows: &AdjacencyRows, z: &ProperQuadruple, r0: &VertexSet, mode: ForcingMode) -> Self {
        let n = rows.n;
        let mut in_r = vec![0; rows.words];
        for v in r0.iter() {
            put(&mut in_r, v, true);
        }
        let in_a = rows.strong(z.a1).iter().zip(&in_r).map(|(s, r)| s & !r).collect();
        let in_b = rows.strong(z.b1).iter().zip(&in_r).map(|(s, r)| s & !r).collect();
        let marks = (0..n)
            .map(|v| {
                if [z.a1, z.b1, z.a2, z.b2].contains(&v) {
                    return Mark::Unmarked;
                }
                match (has(rows.strong(z.a2), v), has(rows.strong(z.b2), v)) {
                    (true, true) => Mark::AlphaBeta,
                    (true, false) => Mark::Alpha,
                    (false, true) => Mark::Beta,
                    (false, false) => Mark::Epsilon,
                }
            })
            .collect::<Vec<_>>();
        let queue = r0.iter().filter(|&v| marks[v] != Mark::Unmarked).collect();
        ForcingState { in_r, in_a, in_b, marks, mode, pair_reads: 2 * n as u64, queue }
    }

    /// Moves to `R` every vertex of `S` in the set `word(i)` describes.
    fn move_where(&mut self, rows: &AdjacencyRows, z: &ProperQuadruple, word: impl Fn(usize) -> u64) -> Result<(), Abort> {
        self.pair_reads += rows.n as u64;
        for i in 0..rows.words {
            let ys = word(i) & !self.in_r[i] & rows.valid(i);
            if ys == 0 {
                continue;
            }
            for y in ones(&[ys]).map(|b| i * 64 + b) {
                if y == z.a2 || y == z.b2 {
                    return Err(Abort);
                }
                if self.marks[y] != Mark::Unmarked {
                    self.queue.push_back(y);
                }
            }
            self.in_r[i] |= ys;
            self.in_a[i] &= !ys;
            self.in_b[i] &= !ys;
        }
        Ok(())
    }

    fn explore(&mut self, rows: &AdjacencyRows, z: &ProperQuadruple, x: usize) -> Result<(), Abort> {
        let mark = self.marks[x];
        let strong = rows.strong(x);
        let switchable = rows.switchable(x);
        let own = |i: usize| if x / 64 == i { 1u64 << (x % 64) } else { 0 };
        if mark == Mark::AlphaBeta && self.mode == ForcingMode::Unknown {
            self.mode = ForcingMode::ComplementTwoJoin;
            let (a, b) = (self.in_a.clone(), self.in_b.clone());
            self.move_where(rows, z, |i| !a[i] & !b[i])?;
        }
        if mark == Mark::AlphaBeta && self.mode == ForcingMode::ComplementTwoJoin {
            self.move_where(rows, z, |i| !strong[i] & !own(i))?;
        }
        if mark == Mark::AlphaBeta && self.mode == ForcingMode::TwoJoin {
            return Err(Abort);
        }
        if mark == Mark::Alpha || mark == Mark::Beta {
            let side = if mark == Mark::Alpha { self.in_a.clone() } else { self.in_b.clone() };
            self.move_where(rows, z, |i| (side[i] ^ strong[i]) & !own(i))?;
            self.move_where(rows, z, |i| switchable[i])?;
        }
        if mark == Mark::Epsilon && self.mode == ForcingMode::Unknown {
            self.mode = ForcingMode::TwoJoin;
            self.move_a_and_b(rows, z)?;
        }
        if mark == Mark::Epsilon && self.mode == ForcingMode::TwoJoin {
            self.move_where(rows, z, |i| strong[i] | switchable[i])?;
        }
        if mark == Mark::Epsilon && self.mode == ForcingMode::ComplementTwoJoin {
            return Err(Abort);
        }
        Ok(())
    }

    fn move_a_and_b(&mut self, rows: &AdjacencyRows, z: &ProperQuadruple) -> Result<(), Abort> {
        let (a, b) = (self.in_a.clone(), self.in_b.clone());
        self.move_where(rows, z, |i| a[i] & b[i])
    }

    fn run(&mut self, rows: &AdjacencyRows, z: &ProperQuadruple) -> Result<(), Abort> {
        if self.mode == ForcingMode::TwoJoin {
            self.move_a_and_b(rows, z)?;
        }
        self.move_where(rows, z, |i| rows.switchable(z.a1)[i])?;
        self.move_where(rows, z, |i| rows.switchable(z.b1)[i])?;
        while let Some(x) = self.queue.pop_front() {
            self.explore(rows, z, x)?;
            self.marks[x] = Mark::Unmarked;
        }
        Ok(())
    }

    fn split(&self, t: &Trigraph, z: &ProperQuadruple) -> WeakFragmentSplit {
        let mut parts: [Vec<usize>; 8] = Default::default();
        for v in t.vertices() {
            let idx = if has(&self.in_r, v) {
                match (t.is_strongly_adjacent(z.a2, v), t.is_strongly_adjacent(z.b2, v)) {
                    (true, false) => 0,
                    (false, true) => 1,
                    (false, false) => 2,
                    (true, true) => 3,
                }
            } else {
                match (has(&self.in_a, v), has(&self.in_b, v)) {
                    (true, false) => 4,
                    (false, true) => 5,
                    (false, false) => 6,
                    (true, true) => 7,
                }
            };
            parts[idx].push(v);
        }
        let [a1, b1, c1, d1, a2, b2, c2, d2] = parts.map(VertexSet::from);
        let mut s = WeakFragmentSplit { a1, b1, c1, d1, a2, b2, c2, d2, kind: FragmentKind::TwoJoin };
        s.kind = match self.mode {
            ForcingMode::TwoJoin => FragmentKind::TwoJoin,
            ForcingMode::ComplementTwoJoin => FragmentKind::ComplementTwoJoin,
            ForcingMode::Unknown => s.infer_kind().unwrap_or(FragmentKind::HomogeneousPair),
        };
        s
    }
}

/// Minimal weak fragment containing `r0` and compatible with `z`.
pub fn forcing(t: &Trigraph, z: &ProperQuadruple, r0: &VertexSet) -> Option<WeakFragmentSplit> {
    match forcing_with_mode(t, z, r0, ForcingMode::Unknown).0 {
        ForcingOutcome::Fragment(s) => Some(s),
        _ => None,
    }
}

/// Forcing with a preset fragment type; also returns the number of pair reads.
///
/// Seeds violating the preconditions (`z` not proper, `a1, b1 ∉ r0` or
/// `a2, b2 ∈ r0`) yield `Aborted`.
pub fn forcing_with_mode(t: &Trigraph, z: &ProperQuadruple, r0: &VertexSet, mode: ForcingMode) -> (ForcingOutcome, u64) {
    forcing_with_rows(t, &AdjacencyRows::new(t), z, r0, mode)
}

/// [`forcing_with_mode`] reusing precomputed rows of `t`.
pub fn forcing_with_rows(
    t: &Trigraph,
    rows: &AdjacencyRows,
    z: &ProperQuadruple,
    r0: &VertexSet,
    mode: ForcingMode,
) -> (ForcingOutcome, u64) {
    if !z.is_proper(t) || !r0.contains(z.a1) || !r0.contains(z.b1) || r0.contains(z.a2) || r0.contains(z.b2) {
        return (ForcingOutcome::Aborted, 0);
    }
    let mut st = ForcingState::new(rows, z, r0, mode);
    if st.run(rows, z).is_err() {
        return (ForcingOutcome::Aborted, st.pair_reads);
    }
    let r: VertexSet = ones(&st.in_r).collect();
    let n = t.vertex_count();
    if r.len() < 4 || n - r.len() < 4 {
        return (ForcingOutcome::Closed { r, mode: st.mode }, st.pair_reads);
    }
    let split = st.split(t, z);
    if !split.is_valid(t) {
        return (ForcingOutcome::Closed { r, mode: st.mode }, st.pair_reads);
    }
    (ForcingOutcome::Fragment(split), st.pair_reads)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::compatible_fragments_bf;
    use crate::trigraph::cycle;

    #[test]
    fn c8_seed_gives_consecutive_four() {
        let c8 = cycle(8);
        let z = ProperQuadruple { a1: 0, b1: 3, a2: 7, b2: 4 };
        let s = forcing(&c8, &z, &[0, 1, 2, 3].into()).unwrap();
        assert_eq!(s.x(), VertexSet::from([0, 1, 2, 3]));
        assert_eq!(s.kind, FragmentKind::TwoJoin);
        // a two-vertex seed closes without reaching four vertices
        let (out, _) = forcing_with_mode(&c8, &z, &[0, 3].into(), ForcingMode::TwoJoin);
        assert!(matches!(out, ForcingOutcome::Closed { .. }));
        let s = forcing(&c8, &z, &[0, 3, 1].into()).unwrap();
        assert_eq!(s.x(), VertexSet::from([0, 1, 2, 3]));
    }

    #[test]
    fn c6_has_no_fragment() {
        let c6 = cycle(6);
        for z in super::super::enumerate_quadruples(&c6) {
            for u in c6.vertices().filter(|&u| ![z.a1, z.b1, z.a2, z.b2].contains(&u)) {
                assert!(forcing(&c6, &z, &[z.a1, z.b1, u].into()).is_none());
            }
        }
    }

    #[test]
    fn minimal_against_oracle_on_long_cycles() {
        for k in [8, 9, 10] {
            let t = cycle(k);
            for z in super::super::enumerate_quadruples(&t) {
                let all = compatible_fragments_bf(&t, &z).unwrap();
                for u in t.vertices().filter(|&u| ![z.a1, z.b1, z.a2, z.b2].contains(&u)) {
                    let r0: VertexSet = [z.a1, z.b1, u].into();
                    let got = forcing(&t, &z, &r0);
                    let containing: Vec<_> = all.iter().filter(|s| r0.is_subset(&s.x())).collect();
                    match got {
                        Some(s) => {
                            assert!(s.violations(&t).is_empty());
                            assert!(s.is_compatible_with(&z));
                            assert!(containing.iter().all(|c| s.x().is_subset(&c.x())));
                        }
                        None => assert!(containing.is_empty()),
                    }
                }
            }
        }
    }

    #[test]
    fn pair_reads_are_quadratic() {
        let t = cycle(40);
        let z = ProperQuadruple { a1: 0, b1: 5, a2: 39, b2: 6 };
        let (out, reads) = forcing_with_mode(&t, &z, &[0, 5, 1].into(), ForcingMode::Unknown);
        assert!(matches!(out, ForcingOutcome::Fragment(_)));
        assert!(reads <= 10 * 40 * 40);
    }
}
