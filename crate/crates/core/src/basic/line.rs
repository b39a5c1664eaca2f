//! Recognition of line graphs of bipartite graphs with an explicit root.
//!
//! In the line graph of a triangle-free graph every edge `uv` lies in exactly
//! one maximal clique, namely `{u, v}` together with the common neighbours of
//! `u` and `v`. Those cliques are the root vertices; each graph vertex lies in
//! at most two of them and becomes the root edge joining them.

use serde::{Deserialize, Serialize};

use crate::trigraph::{Graph, Trigraph};

/// A bipartite graph `R` with `L(R)` equal to the recognized graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineRoot {
    /// Number of root vertices.
    pub nodes: usize,
    /// Colour class of every root vertex.
    pub side: Vec<bool>,
    /// Root edge of every graph vertex, as `(left, right)` with `side[left] == false`.
    pub ends: Vec<(usize, usize)>,
}

impl LineRoot {
    /// Checks that the root is a simple bipartite graph whose line graph is `g`.
    pub fn validates(&self, g: &Graph) -> bool {
        let n = g.vertex_count();
        if self.ends.len() != n || self.side.len() != self.nodes {
            return false;
        }
        for (v, &(a, b)) in self.ends.iter().enumerate() {
            if a >= self.nodes || b >= self.nodes || self.side[a] || !self.side[b] {
                return false;
            }
            for u in v + 1..n {
                let (c, d) = self.ends[u];
                if (a, b) == (c, d) {
                    return false;
                }
                let share = a == c || b == d;
                if share != g.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }
}

/// A root of `g`, if `g` is the line graph of a bipartite graph.
pub fn line_root(g: &Graph) -> Option<LineRoot> {
    let n = g.vertex_count();
    let mut clique_of_pair = vec![usize::MAX; n * n];
    let mut cliques: Vec<Vec<usize>> = Vec::new();
    let mut member_of: Vec<Vec<usize>> = vec![Vec::new(); n];
    for u in 0..n {
        for v in g.neighbors(u).filter(|&v| v > u).collect::<Vec<_>>() {
            if clique_of_pair[u * n + v] != usize::MAX {
                continue;
            }
            let mut k = vec![u, v];
            k.extend((0..n).filter(|&x| x != u && x != v && g.has_edge(u, x) && g.has_edge(v, x)));
            k.sort_unstable();
            let id = cliques.len();
            for (i, &x) in k.iter().enumerate() {
                for &y in &k[i + 1..] {
                    if !g.has_edge(x, y) || clique_of_pair[x * n + y] != usize::MAX {
                        return None;
                    }
                    clique_of_pair[x * n + y] = id;
                    clique_of_pair[y * n + x] = id;
                }
                member_of[x].push(id);
                if member_of[x].len() > 2 {
                    return None;
                }
            }
            cliques.push(k);
        }
    }
    let mut nodes = cliques.len();
    let mut ends = Vec::with_capacity(n);
    for m in member_of.iter_mut() {
        while m.len() < 2 {
            m.push(nodes);
            nodes += 1;
        }
        ends.push((m[0], m[1]));
    }
    // two-colour the root
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); nodes];
    for &(a, b) in &ends {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut colour: Vec<Option<bool>> = vec![None; nodes];
    for s in 0..nodes {
        if colour[s].is_some() {
            continue;
        }
        colour[s] = Some(false);
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            let c = colour[x].unwrap();
            for &y in &adj[x] {
                match colour[y] {
                    None => {
                        colour[y] = Some(!c);
                        stack.push(y);
                    }
                    Some(d) if d == c => return None,
                    _ => {}
                }
            }
        }
    }
    let side: Vec<bool> = colour.into_iter().map(|c| c.unwrap()).collect();
    let ends = ends.into_iter().map(|(a, b)| if side[a] { (b, a) } else { (a, b) }).collect();
    Some(LineRoot { nodes, side, ends })
}

/// No switchable pair has a common neighbour, i.e. every clique of size at
/// least three is strong.
pub fn large_cliques_strong(t: &Trigraph) -> bool {
    t.switchable_pairs().into_iter().all(|(u, v)| !t.vertices().any(|w| w != u && w != v && t.is_adjacent(u, w) && t.is_adjacent(v, w)))
}

/// Root of the full realization if `t` is a line trigraph.
pub fn line_trigraph_root(t: &Trigraph) -> Option<LineRoot> {
    if !large_cliques_strong(t) {
        return None;
    }
    line_root(&t.full_realization())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trigraph::{complete, cycle, path};

    #[test]
    fn recognizes_line_graphs() {
        for t in [cycle(6), cycle(4), path(5), complete(4), Trigraph::new(3)] {
            let g = t.full_realization();
            let r = line_root(&g).expect("line graph");
            assert!(r.validates(&g));
        }
        // odd cycles have non-bipartite roots; the claw is not a line graph
        assert!(line_root(&cycle(5).full_realization()).is_none());
        let claw = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        assert!(line_root(&claw).is_none());
        let diamond = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]);
        assert!(line_root(&diamond).is_none());
    }

    #[test]
    fn switchable_triangle_is_not_line() {
        let t = Trigraph::from_parts(3, &[(0, 2), (1, 2)], &[(0, 1)]);
        assert!(line_trigraph_root(&t).is_none());
        let t = Trigraph::from_parts(3, &[(1, 2)], &[(0, 1)]);
        assert!(line_trigraph_root(&t).is_some());
    }
}
