//! Good partitions of doubled trigraphs and their maximum weighted stable sets.

use crate::trigraph::{Graph, Trigraph, VertexSet, Weight};

use super::StableSetResult;

/// Violations of the good-partition conditions for `(x, y)`.
pub fn good_partition_violations(t: &Trigraph, x: &VertexSet, y: &VertexSet) -> Vec<String> {
    let mut out = Vec::new();
    if x.len() + y.len() != t.vertex_count() || !x.is_disjoint(y) {
        out.push("(X, Y) is not a partition".into());
        return out;
    }
    let comps = t.components(x);
    let anti = t.anticomponents(y);
    if let Some(c) = comps.iter().find(|c| c.len() > 2) {
        out.push(format!("component {c} of T|X has more than two vertices"));
    }
    if let Some(c) = anti.iter().find(|c| c.len() > 2) {
        out.push(format!("anticomponent {c} of T|Y has more than two vertices"));
    }
    for u in x.iter() {
        if let Some(v) = y.iter().find(|&v| t.is_switchable(u, v)) {
            out.push(format!("switchable pair {u}{v} meets both X and Y"));
        }
    }
    if !out.is_empty() {
        return out;
    }
    for cx in &comps {
        for cy in &anti {
            for v in cx.iter().chain(cy.iter()) {
                let others = if cx.contains(v) { cy } else { cx };
                let strong = others.iter().filter(|&u| t.is_strongly_adjacent(u, v)).count();
                let antis = others.iter().filter(|&u| t.is_strongly_antiadjacent(u, v)).count();
                if strong > 1 || antis > 1 {
                    out.push(format!("vertex {v} has too many strong pairs between {cx} and {cy}"));
                }
            }
        }
    }
    out
}

/// Components of `T|X` and anticomponents of `T|Y` have at most two
/// vertices iff every vertex has at most one neighbour in `X` (resp. one
/// antineighbour in `Y`); a cheap necessary test before the full check.
fn small_parts(t: &Trigraph, x: &VertexSet, y: &VertexSet) -> bool {
    let xs = x.as_slice();
    let ys = y.as_slice();
    xs.iter().all(|&u| xs.iter().filter(|&&v| t.is_adjacent(u, v)).nth(1).is_none())
        && ys.iter().all(|&u| ys.iter().filter(|&&v| t.is_antiadjacent(u, v)).nth(1).is_none())
}

/// Reconstructs `(X, Y)` from an adjacent pair `ab` assumed to lie in `X`.
fn from_seed_edge(t: &Trigraph, a: usize, b: usize) -> Option<(VertexSet, VertexSet)> {
    let mut x = vec![a, b];
    let mut y = Vec::new();
    for v in t.vertices().filter(|&v| v != a && v != b) {
        if t.is_strongly_antiadjacent(v, a) && t.is_strongly_antiadjacent(v, b) {
            x.push(v);
        } else if t.is_strongly_adjacent(v, a) || t.is_strongly_adjacent(v, b) {
            y.push(v);
        } else {
            return None;
        }
    }
    Some((x.into(), y.into()))
}

/// Clique/stable split of a graph by its degree sequence, if it is a split graph.
fn split_partition(g: &Graph) -> Option<(VertexSet, VertexSet)> {
    let n = g.vertex_count();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let d: Vec<usize> = order.iter().map(|&v| g.degree(v)).collect();
    // largest m with d_m >= m - 1 (1-indexed); the valid indices form a prefix
    let m = (0..n).take_while(|&i| d[i] >= i).count();
    let left: usize = d[..m].iter().sum();
    let right: usize = d[m..].iter().sum();
    if left != m * m.saturating_sub(1) + right {
        return None;
    }
    let clique: VertexSet = order[..m].iter().copied().collect();
    let stable: VertexSet = order[m..].iter().copied().collect();
    Some((stable, clique))
}

/// A good partition `(X, Y)` of `t`, if `t` is doubled.
pub fn good_partition(t: &Trigraph) -> Option<(VertexSet, VertexSet)> {
    let n = t.vertex_count();
    // X contains an adjacent pair
    for a in 0..n {
        for b in a + 1..n {
            if t.is_adjacent(a, b) {
                if let Some((x, y)) = from_seed_edge(t, a, b) {
                    if small_parts(t, &x, &y) && good_partition_violations(t, &x, &y).is_empty() {
                        return Some((x, y));
                    }
                }
            }
        }
    }
    // Y contains an antiadjacent pair: the same search in the complement
    let c = t.complement();
    for a in 0..n {
        for b in a + 1..n {
            if c.is_adjacent(a, b) {
                if let Some((y, x)) = from_seed_edge(&c, a, b) {
                    if small_parts(t, &x, &y) && good_partition_violations(t, &x, &y).is_empty() {
                        return Some((x, y));
                    }
                }
            }
        }
    }
    // X strongly stable and Y a strong clique: a split graph
    if t.is_graph() {
        if let Some((x, y)) = split_partition(&t.full_realization()) {
            if good_partition_violations(t, &x, &y).is_empty() {
                return Some((x, y));
            }
        }
    }
    None
}

/// Maximum weight stable set of `G|X` for `X` inducing components of size at
/// most two, restricted to `allowed`.
fn alpha_small_components(comps: &[Vec<usize>], w: &[Weight], allowed: &[bool]) -> (Weight, Vec<usize>) {
    let mut value = 0;
    let mut set = Vec::new();
    for c in comps {
        if let Some(&best) = c.iter().filter(|&&v| allowed[v]).max_by_key(|&&v| (w[v], std::cmp::Reverse(v))) {
            value += w[best];
            set.push(best);
        }
    }
    (value, set)
}

/// Maximum weighted strong stable set of a doubled trigraph with good
/// partition `(x, y)`. Includes stable sets with two vertices of `Y`.
pub fn alpha_doubled(t: &Trigraph, x: &VertexSet, y: &VertexSet) -> StableSetResult {
    let n = t.vertex_count();
    let w = t.weights();
    let comps: Vec<Vec<usize>> = t.components(x).into_iter().map(|c| c.iter().collect()).collect();
    let yv: Vec<usize> = y.iter().collect();
    let in_x = x.to_mask(n);
    let mut best = StableSetResult::empty();
    let mut consider = |value: Weight, set: Vec<usize>| {
        if value > best.value || (best.set.is_empty() && !set.is_empty() && value == best.value) {
            best = StableSetResult { value, set: set.into() };
        }
    };
    let (v, s) = alpha_small_components(&comps, w, &in_x);
    consider(v, s);
    for (i, &y1) in yv.iter().enumerate() {
        let allowed: Vec<bool> = (0..n).map(|u| in_x[u] && t.is_strongly_antiadjacent(u, y1)).collect();
        let (v, mut s) = alpha_small_components(&comps, w, &allowed);
        s.push(y1);
        consider(v + w[y1], s);
        for &y2 in &yv[i + 1..] {
            if !t.is_strongly_antiadjacent(y1, y2) {
                continue;
            }
            let allowed2: Vec<bool> = (0..n).map(|u| allowed[u] && t.is_strongly_antiadjacent(u, y2)).collect();
            let (v, mut s) = alpha_small_components(&comps, w, &allowed2);
            s.push(y1);
            s.push(y2);
            consider(v + w[y1] + w[y2], s);
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::alpha_bf;
    use crate::trigraph::{cycle, path, Adjacency};

    #[test]
    fn c4_and_p4_are_doubled() {
        let c4 = cycle(4);
        let (x, y) = good_partition(&c4).unwrap();
        assert!(good_partition_violations(&c4, &x, &y).is_empty());
        let explicit = good_partition_violations(&c4, &[2, 3].into(), &[0, 1].into());
        assert!(explicit.is_empty());
        let p4 = path(4);
        let (x, y) = good_partition(&p4).unwrap();
        assert!(good_partition_violations(&p4, &x, &y).is_empty());
    }

    #[test]
    fn split_graph_by_degrees() {
        let p4 = path(4).full_realization();
        let (stable, clique) = split_partition(&p4).unwrap();
        assert_eq!(clique, VertexSet::from([1, 2]));
        assert_eq!(stable, VertexSet::from([0, 3]));
        assert!(split_partition(&cycle(4).full_realization()).is_none());
    }

    #[test]
    fn c5_is_not_doubled() {
        assert!(good_partition(&cycle(5)).is_none());
    }

    #[test]
    fn doubled_alpha_small_example() {
        // X = {x1, x2} strong edge, Y = {y1}, y1 adjacent to x1 only
        let t = Trigraph::from_parts(3, &[(0, 1), (0, 2)], &[]);
        let r = alpha_doubled(&t, &[0, 1].into(), &[2].into());
        assert_eq!(r.value, 2);
        assert_eq!(r.set, VertexSet::from([1, 2]));
    }

    #[test]
    fn doubled_alpha_matches_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let mut checked = 0;
        for _ in 0..400 {
            let n = rng.gen_range(2..=9);
            let mut t = Trigraph::new(n);
            for u in 0..n {
                for v in u + 1..n {
                    let a = match rng.gen_range(0..8) {
                        0 => Adjacency::Switchable,
                        1..=3 => Adjacency::StrongEdge,
                        _ => Adjacency::StrongAnti,
                    };
                    t.set(u, v, a);
                }
                t.set_weight(u, rng.gen_range(0..10));
            }
            if let Some((x, y)) = good_partition(&t) {
                checked += 1;
                let r = alpha_doubled(&t, &x, &y);
                assert_eq!(r.value, alpha_bf(&t).unwrap().0);
                assert!(t.is_strong_stable(&r.set));
                assert_eq!(r.set.weight(t.weights()) as Weight, r.value);
            }
        }
        assert!(checked > 20);
    }
}
