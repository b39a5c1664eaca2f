//! Exhaustive reference oracles. Every function here refuses inputs above
//! the configured cap (default 14, overridable through `PERFECTSOLVE_BF_CAP`).

use crate::detect::{FragmentKind, ProperQuadruple, TwoJoinSplit, WeakFragmentSplit};
use crate::error::Error;
use crate::trigraph::{Graph, Trigraph, VertexSet, Weight};

pub const DEFAULT_BF_CAP: usize = 14;
/// Bitmask representations limit every oracle to 64 vertices.
const HARD_CAP: usize = 64;

/// Current oracle cap, read from `PERFECTSOLVE_BF_CAP` when set.
pub fn bf_cap() -> usize {
    std::env::var("PERFECTSOLVE_BF_CAP")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .unwrap_or(DEFAULT_BF_CAP)
        .min(HARD_CAP)
}

fn check_cap(n: usize) -> Result<(), Error> {
    let cap = bf_cap();
    if n > cap {
        Err(Error::OracleCap { n, cap })
    } else {
        Ok(())
    }
}

pub(crate) struct Masks {
    pub adj: Vec<u64>,
    pub anti: Vec<u64>,
}

pub(crate) fn masks(t: &Trigraph) -> Masks {
    let n = t.vertex_count();
    let mut adj = vec![0u64; n];
    let mut anti = vec![0u64; n];
    for u in 0..n {
        for v in 0..n {
            if u == v {
                continue;
            }
            if t.is_adjacent(u, v) {
                adj[u] |= 1 << v;
            }
            if t.is_antiadjacent(u, v) {
                anti[u] |= 1 << v;
            }
        }
    }
    Masks { adj, anti }
}

fn mask_to_set(mut m: u64) -> VertexSet {
    let mut out = Vec::new();
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    VertexSet::from(out)
}

fn set_to_mask(s: &VertexSet) -> u64 {
    s.iter().fold(0, |m, v| m | (1 << v))
}

/// Maximum weight of a strong stable set, with one optimal set.
pub fn alpha_bf(t: &Trigraph) -> Result<(Weight, VertexSet), Error> {
    check_cap(t.vertex_count())?;
    Ok(alpha_bf_unchecked(t))
}

pub(crate) fn alpha_bf_unchecked(t: &Trigraph) -> (Weight, VertexSet) {
    let n = t.vertex_count();
    let m = masks(t);
    let all = if n == 64 { !0 } else { (1u64 << n) - 1 };
    let mut best = (0, 0u64);
    branch_stable(&m.adj, t.weights(), all, 0, 0, &mut best);
    (best.0, mask_to_set(best.1))
}

fn branch_stable(conflict: &[u64], w: &[Weight], cand: u64, chosen: u64, value: Weight, best: &mut (Weight, u64)) {
    if value > best.0 || (value == best.0 && best.1 == 0 && chosen != 0 && value > 0) {
        *best = (value, chosen);
    }
    if cand == 0 {
        return;
    }
    let bound: Weight = (0..64).filter(|&i| cand >> i & 1 == 1).map(|i| w[i]).sum();
    if value + bound <= best.0 {
        return;
    }
    let v = cand.trailing_zeros() as usize;
    let rest = cand & !(1 << v);
    branch_stable(conflict, w, rest & !conflict[v], chosen | (1 << v), value + w[v], best);
    branch_stable(conflict, w, rest, chosen, value, best);
}

/// Clique number of a graph.
pub fn omega_bf(g: &Graph) -> Result<usize, Error> {
    check_cap(g.vertex_count())?;
    let t = Trigraph::from_graph(&g.complement());
    Ok(alpha_bf_unchecked(&t).0 as usize)
}

/// Chromatic number of a graph by dynamic programming over subsets.
pub fn chi_bf(g: &Graph) -> Result<usize, Error> {
    let n = g.vertex_count();
    check_cap(n)?;
    if n == 0 {
        return Ok(0);
    }
    let adj: Vec<u64> = (0..n).map(|v| g.neighbors(v).fold(0u64, |m, u| m | (1 << u))).collect();
    let full = 1usize << n;
    let mut indep = vec![false; full];
    indep[0] = true;
    for m in 1..full {
        let v = m.trailing_zeros() as usize;
        let rest = m & (m - 1);
        indep[m] = indep[rest] && (adj[v] as usize & rest) == 0;
    }
    let mut chi = vec![u8::MAX; full];
    chi[0] = 0;
    for m in 1..full {
        let low = m & m.wrapping_neg();
        let rest = m ^ low;
        // independent sets containing the lowest vertex
        let mut sub = rest;
        loop {
            let s = sub | low;
            if indep[s] {
                let c = chi[m ^ s].saturating_add(1);
                if c < chi[m] {
                    chi[m] = c;
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    Ok(chi[full - 1] as usize)
}

/// Searches a trigraph path with both ends in `ends`, interior in `interior`
/// and a vertex count whose parity satisfies `want_even_vertices`, with at
/// least `min_vertices` vertices.
fn find_path_masks(m: &Masks, ends: u64, interior: u64, min_vertices: usize, want_even_vertices: bool) -> Option<Vec<usize>> {
    let mut path = Vec::new();
    let mut e = ends;
    while e != 0 {
        let s = e.trailing_zeros() as usize;
        e &= e - 1;
        path.clear();
        path.push(s);
        if let Some(p) = grow_path(m, &mut path, ends & !((1u64 << s) | ((1u64 << s) - 1)), interior, !0u64, min_vertices, want_even_vertices) {
            return Some(p);
        }
    }
    None
}

/// `far` is the intersection of antineighbourhoods of all but the last path vertex.
fn grow_path(m: &Masks, path: &mut Vec<usize>, ends: u64, interior: u64, far: u64, min_vertices: usize, even: bool) -> Option<Vec<usize>> {
    let last = *path.last().unwrap();
    let used = path.iter().fold(0u64, |a, &p| a | (1 << p));
    let next = m.adj[last] & far & !used;
    if path.len() >= 2 {
        let k = path.len() + 1;
        if k >= min_vertices && (k % 2 == 0) == even {
            let close = next & ends;
            if close != 0 {
                let mut p = path.clone();
                p.push(close.trailing_zeros() as usize);
                return Some(p);
            }
        }
    }
    let mut cand = next & interior;
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        path.push(v);
        let r = grow_path(m, path, ends, interior, far & m.anti[last], min_vertices, even);
        path.pop();
        if r.is_some() {
            return r;
        }
    }
    None
}

fn connected_mask(link: &[u64], set: u64) -> bool {
    if set == 0 {
        return true;
    }
    let mut seen = set & set.wrapping_neg();
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = link[v] & set & !seen;
        seen |= new;
        frontier |= new;
    }
    seen == set
}

/// A balanced skew-partition `(A, B)`, if one exists.
pub fn find_bsp_bf(t: &Trigraph) -> Result<Option<(VertexSet, VertexSet)>, Error> {
    check_cap(t.vertex_count())?;
    Ok(find_bsp_uncapped(t))
}

/// [`find_bsp_bf`] without the cap, for internal use on small pieces.
pub(crate) fn find_bsp_uncapped(t: &Trigraph) -> Option<(VertexSet, VertexSet)> {
    let n = t.vertex_count();
    assert!(n <= HARD_CAP);
    if n < 4 {
        return None;
    }
    let m = masks(t);
    let cm = Masks { adj: m.anti.clone(), anti: m.adj.clone() };
    let all = (1u64 << n) - 1;
    for b in 1..all {
        let a = all & !b;
        if a.count_ones() < 2 || b.count_ones() < 2 {
            continue;
        }
        if connected_mask(&m.adj, a) || connected_mask(&m.anti, b) {
            continue;
        }
        // no odd path of length > 1 with ends in B and interior in A
        if find_path_masks(&m, b, a, 4, true).is_some() {
            continue;
        }
        // no odd antipath of length > 1 with ends in A and interior in B
        if find_path_masks(&cm, a, b, 4, true).is_some() {
            continue;
        }
        return Some((mask_to_set(a), mask_to_set(b)));
    }
    None
}

pub fn has_bsp_bf(t: &Trigraph) -> Result<bool, Error> {
    Ok(find_bsp_bf(t)?.is_some())
}

/// Split of `x` determined by a proper quadruple: X-vertices are labelled by
/// strong adjacency to `a2`, `b2`, outside vertices by adjacency to `a1`, `b1`.
pub fn split_from_quadruple(t: &Trigraph, x: &VertexSet, z: &ProperQuadruple) -> Option<WeakFragmentSplit> {
    let mut parts: [Vec<usize>; 8] = Default::default();
    for v in t.vertices() {
        let (p, q, off) = if x.contains(v) { (z.a2, z.b2, 0) } else { (z.a1, z.b1, 4) };
        let rel = |u: usize| {
            if u == v {
                None
            } else if t.is_strongly_adjacent(u, v) {
                Some(true)
            } else if t.is_strongly_antiadjacent(u, v) {
                Some(false)
            } else {
                None
            }
        };
        let idx = match (rel(p), rel(q)) {
            (Some(true), Some(false)) => 0,
            (Some(false), Some(true)) => 1,
            (Some(false), Some(false)) => 2,
            (Some(true), Some(true)) => 3,
            _ => return None,
        };
        parts[off + idx].push(v);
    }
    let [a1, b1, c1, d1, a2, b2, c2, d2] = parts.map(VertexSet::from);
    let mut s = WeakFragmentSplit { a1, b1, c1, d1, a2, b2, c2, d2, kind: FragmentKind::TwoJoin };
    s.kind = s.infer_kind()?;
    Some(s)
}

/// Every weak fragment compatible with `z`, with its split.
pub fn compatible_fragments_bf(t: &Trigraph, z: &ProperQuadruple) -> Result<Vec<WeakFragmentSplit>, Error> {
    let n = t.vertex_count();
    check_cap(n)?;
    let others: Vec<usize> = t.vertices().filter(|&v| ![z.a1, z.b1, z.a2, z.b2].contains(&v)).collect();
    let mut out = Vec::new();
    for sub in 0u64..(1 << others.len()) {
        let mut x: Vec<usize> = vec![z.a1, z.b1];
        x.extend(others.iter().enumerate().filter(|(i, _)| sub >> i & 1 == 1).map(|(_, &v)| v));
        let x = VertexSet::from(x);
        if let Some(s) = split_from_quadruple(t, &x, z) {
            if s.violations(t).is_empty() {
                out.push(s);
            }
        }
    }
    Ok(out)
}

/// Every weak fragment of `t` (one split each).
pub fn weak_fragments_bf(t: &Trigraph) -> Result<Vec<WeakFragmentSplit>, Error> {
    let n = t.vertex_count();
    check_cap(n)?;
    let mut out = Vec::new();
    if n < 8 {
        return Ok(out);
    }
    for xm in 1u64..(1 << n) - 1 {
        let k = xm.count_ones() as usize;
        if k < 4 || n - k < 4 {
            continue;
        }
        let x = mask_to_set(xm);
        if let Some(s) = weak_split_of(t, &x) {
            out.push(s);
        }
    }
    Ok(out)
}

/// A weak-fragment split of `x`, found by grouping X-vertices by their
/// strong neighbourhood outside `x` and trying every labelling of the groups.
pub fn weak_split_of(t: &Trigraph, x: &VertexSet) -> Option<WeakFragmentSplit> {
    let n = t.vertex_count();
    let xm = set_to_mask(x);
    let mut groups: Vec<(u64, Vec<usize>)> = Vec::new();
    for v in x.iter() {
        let mut nb = 0u64;
        for u in t.vertices().filter(|u| xm >> u & 1 == 0) {
            if t.is_switchable(u, v) {
                return None;
            }
            if t.is_strongly_adjacent(u, v) {
                nb |= 1 << u;
            }
        }
        match groups.iter_mut().find(|g| g.0 == nb) {
            Some(g) => g.1.push(v),
            None => groups.push((nb, vec![v])),
        }
    }
    if groups.len() > 4 {
        return None;
    }
    let labels = [0usize, 1, 2, 3];
    for perm in permutations(&labels) {
        let mut parts: [Vec<usize>; 8] = Default::default();
        for (gi, g) in groups.iter().enumerate() {
            parts[perm[gi]].extend(g.1.iter().copied());
        }
        let na = groups.iter().enumerate().find(|(gi, _)| perm[*gi] == 0).map(|(_, g)| g.0);
        let nb = groups.iter().enumerate().find(|(gi, _)| perm[*gi] == 1).map(|(_, g)| g.0);
        let (Some(na), Some(nb)) = (na, nb) else { continue };
        for u in (0..n).filter(|u| xm >> u & 1 == 0) {
            let idx = match (na >> u & 1 == 1, nb >> u & 1 == 1) {
                (true, false) => 4,
                (false, true) => 5,
                (false, false) => 6,
                (true, true) => 7,
            };
            parts[idx].push(u);
        }
        let [a1, b1, c1, d1, a2, b2, c2, d2] = parts.map(VertexSet::from);
        let mut s = WeakFragmentSplit { a1, b1, c1, d1, a2, b2, c2, d2, kind: FragmentKind::TwoJoin };
        if let Some(k) = s.infer_kind() {
            s.kind = k;
            if s.violations(t).is_empty() {
                return Some(s);
            }
        }
    }
    None
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Every proper 2-join of `t` (one split per bipartition, parity from side 1).
/// Complement 2-joins are found by calling this on the complement.
pub fn proper_2joins_bf(t: &Trigraph) -> Result<Vec<TwoJoinSplit>, Error> {
    let n = t.vertex_count();
    check_cap(n)?;
    let mut out = Vec::new();
    if n < 6 {
        return Ok(out);
    }
    // vertex 0 always in X1 to list each bipartition once
    for rest in 0u64..(1 << (n - 1)) {
        let xm = (rest << 1) | 1;
        let k = xm.count_ones() as usize;
        if k < 3 || n - k < 3 {
            continue;
        }
        let x1 = mask_to_set(xm);
        if let Some(s) = crate::detect::two_join_split_of(t, &x1, false) {
            if s.is_proper(t) {
                out.push(s);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trigraph::{complete, cycle, path, Adjacency};

    #[test]
    fn alpha_on_small_graphs() {
        assert_eq!(alpha_bf(&cycle(8)).unwrap().0, 4);
        assert_eq!(alpha_bf(&cycle(5)).unwrap().0, 2);
        assert_eq!(alpha_bf(&complete(5)).unwrap().0, 1);
        let p4 = path(4).with_weights(vec![3, 1, 1, 3]);
        let (a, s) = alpha_bf(&p4).unwrap();
        assert_eq!((a, s), (6, VertexSet::from([0, 3])));
        // a switchable pair is not strongly antiadjacent
        let t = Trigraph::from_parts(2, &[], &[(0, 1)]);
        assert_eq!(alpha_bf(&t).unwrap().0, 1);
        assert_eq!(alpha_bf(&Trigraph::new(3).with_weights(vec![0, 0, 0])).unwrap().0, 0);
    }

    #[test]
    fn omega_and_chi() {
        let c8 = cycle(8).full_realization();
        assert_eq!(omega_bf(&c8).unwrap(), 2);
        assert_eq!(chi_bf(&c8).unwrap(), 2);
        let c5 = cycle(5).full_realization();
        assert_eq!(chi_bf(&c5).unwrap(), 3);
        assert_eq!(chi_bf(&complete(6).full_realization()).unwrap(), 6);
        let c7c = cycle(7).complement().full_realization();
        assert_eq!(omega_bf(&c7c).unwrap(), 3);
        assert_eq!(chi_bf(&c7c).unwrap(), 4);
    }

    #[test]
    fn bsp_detection() {
        assert!(!has_bsp_bf(&cycle(8)).unwrap());
        assert!(!has_bsp_bf(&Trigraph::new(2)).unwrap());
        // K_{2,2,2} complement of a perfect matching on 6 vertices has a balanced skew-partition
        let mut k222 = complete(6);
        for (u, v) in [(0, 1), (2, 3), (4, 5)] {
            k222.set(u, v, Adjacency::StrongAnti);
        }
        assert!(has_bsp_bf(&k222).unwrap());
    }

    #[test]
    fn c8_weak_fragments() {
        let frags = weak_fragments_bf(&cycle(8)).unwrap();
        let mut sides: Vec<VertexSet> = frags.iter().map(|s| s.x()).collect();
        sides.sort();
        assert_eq!(sides.len(), 8);
        for s in &sides {
            let v: Vec<usize> = s.iter().collect();
            let consecutive = (0..8).any(|r| (0..4).all(|i| v.contains(&((r + i) % 8))));
            assert!(consecutive);
        }
    }

    #[test]
    fn c8_two_joins() {
        let joins = proper_2joins_bf(&cycle(8)).unwrap();
        // bipartitions into two paths with at least 3 vertices each: sides 3+5 or 4+4;
        // a 3-vertex side is a path of length two between its ends and is excluded
        assert_eq!(joins.len(), 4);
        assert!(proper_2joins_bf(&cycle(6)).unwrap().is_empty());
        assert!(proper_2joins_bf(&cycle(8).complement()).unwrap().is_empty());
    }

    #[test]
    fn cap_is_respected() {
        assert!(matches!(alpha_bf(&Trigraph::new(40)), Err(Error::OracleCap { .. })));
    }
}
