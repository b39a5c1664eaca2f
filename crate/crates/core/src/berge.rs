//! Exhaustive odd hole and odd antihole search for small trigraphs.

use crate::error::Error;
use crate::oracle::bf_cap;
use crate::trigraph::{Trigraph, VertexSet};

/// `true` iff `t` has no odd hole and no odd antihole. Refuses inputs above
/// the configured oracle cap.
pub fn is_berge_small(t: &Trigraph) -> Result<bool, Error> {
    is_berge_with_cap(t, bf_cap())
}

pub fn is_berge_with_cap(t: &Trigraph, cap: usize) -> Result<bool, Error> {
    let n = t.vertex_count();
    if n > cap.min(64) {
        return Err(Error::OracleCap { n, cap: cap.min(64) });
    }
    Ok(find_odd_hole(t).is_none() && find_odd_hole(&t.complement()).is_none())
}

/// An odd hole of `t` as a cyclic vertex sequence, if one exists.
pub fn find_odd_hole(t: &Trigraph) -> Option<Vec<usize>> {
    let n = t.vertex_count();
    assert!(n <= 64, "hole search is limited to 64 vertices");
    let mut adj = vec![0u64; n];
    let mut anti = vec![0u64; n];
    for u in 0..n {
        for v in 0..n {
            if t.is_adjacent(u, v) {
                adj[u] |= 1 << v;
            }
            if t.is_antiadjacent(u, v) {
                anti[u] |= 1 << v;
            }
        }
    }
    let mut path = Vec::with_capacity(n);
    for s in 0..n {
        let above = if s + 1 >= 64 { 0 } else { !0u64 << (s + 1) };
        path.clear();
        path.push(s);
        let mut cand = adj[s] & above;
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            path.push(v);
            // vertices that may follow: antiadjacent to every vertex but the last
            if let Some(h) = extend(&adj, &anti, &mut path, above, anti[s], !0u64) {
                return Some(h);
            }
            path.pop();
        }
    }
    None
}

/// `far` is the intersection of antineighbourhoods of all path vertices but
/// the last; `inner` the same without the first vertex.
fn extend(adj: &[u64], anti: &[u64], path: &mut Vec<usize>, above: u64, far: u64, inner: u64) -> Option<Vec<usize>> {
    let first = path[0];
    let last = *path.last().unwrap();
    let used: u64 = path.iter().fold(0, |m, &p| m | (1 << p));
    let next = adj[last] & above & !used;
    if path.len() >= 3 && path.len() % 2 == 0 {
        // closing with one more vertex gives an odd cycle of length ≥ 5
        let close = next & adj[first] & inner;
        if close != 0 {
            let v = close.trailing_zeros() as usize;
            let mut hole = path.clone();
            hole.push(v);
            return Some(hole);
        }
    }
    let mut cand = next & far;
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        path.push(v);
        let r = extend(adj, anti, path, above, far & anti[last], inner & anti[last]);
        path.pop();
        if r.is_some() {
            return r;
        }
    }
    None
}

/// Validates that `cycle` is a hole of `t` in the trigraph sense.
pub fn is_hole(t: &Trigraph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 4 || VertexSet::from(cycle.to_vec()).len() != k {
        return false;
    }
    (0..k).all(|i| {
        (i + 1..k).all(|j| {
            let d = j - i;
            if d == 1 || d == k - 1 {
                t.is_adjacent(cycle[i], cycle[j])
            } else {
                t.is_antiadjacent(cycle[i], cycle[j])
            }
        })
    })
}
