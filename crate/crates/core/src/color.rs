//! Optimal colouring from the stable-set oracle. Each colour class is a
//! stable set meeting every maximum clique of the remaining graph, found by
//! keeping a list of maximum cliques and asking the oracle for a stable set
//! of maximum weight, where a vertex weighs the number of listed cliques
//! containing it.

use serde::{Deserialize, Serialize};

use crate::decompose::{alpha, extract_stable_set, NotInClassCertificate};
use crate::error::Error;
use crate::trigraph::{Graph, Trigraph, VertexSet, Weight};

/// Maximum weight clique of `g` and its weight, via α of the complement.
pub fn omega_and_max_clique(g: &Graph, w: &[Weight]) -> Result<(VertexSet, Weight), Error> {
    let t = Trigraph::from_graph(g).complement().with_weights(w.to_vec());
    let out = alpha(&t)?;
    let set: VertexSet = extract_stable_set(&t, &out)?.iter().filter(|&v| w[v] > 0).collect();
    Ok((set, out.alpha))
}

/// Stable set of maximum weight when each vertex weighs the number of
/// `cliques` containing it. Returns the set and its weight; the set meets
/// every clique exactly when the weight equals `cliques.len()`.
pub fn stable_hitting_cliques(g: &Graph, cliques: &[VertexSet]) -> Result<(VertexSet, Weight), Error> {
    let mut y = vec![0; g.vertex_count()];
    for k in cliques {
        for v in k.iter() {
            y[v] += 1;
        }
    }
    let t = Trigraph::from_graph(g).with_weights(y.clone());
    let out = alpha(&t)?;
    let set: VertexSet = extract_stable_set(&t, &out)?.iter().filter(|&v| y[v] > 0).collect();
    Ok((set, out.alpha))
}

/// Work done while building one colour class.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassStats {
    /// Oracle rounds until the class was found.
    pub iterations: usize,
    /// Rounds whose stable set missed a listed clique.
    pub misses: usize,
    /// Whether the clique incidence rows stayed linearly independent.
    pub full_rank: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringResult {
    pub color_of: Vec<usize>,
    pub num_colors: usize,
    /// Colour classes: a partition of the vertices into cliques of the
    /// complement.
    pub clique_cover: Vec<VertexSet>,
    /// A maximum clique, of size `num_colors`.
    pub max_clique: VertexSet,
    pub class_stats: Vec<ClassStats>,
}

impl ColoringResult {
    /// Proper colouring with as many colours as the recorded clique.
    pub fn validate(&self, g: &Graph) -> Result<(), String> {
        let n = g.vertex_count();
        if self.color_of.len() != n || self.color_of.iter().any(|&c| c >= self.num_colors) {
            return Err("colour vector malformed".into());
        }
        if let Some((u, v)) = g.edges().into_iter().find(|&(u, v)| self.color_of[u] == self.color_of[v]) {
            return Err(format!("edge {u} {v} is monochromatic"));
        }
        if !g.is_clique(&self.max_clique) || self.max_clique.len() != self.num_colors {
            return Err("recorded clique does not match the number of colours".into());
        }
        Ok(())
    }
}

/// Evidence that the graph is not perfect: more than `n` maximum cliques
/// accumulated for a single colour class, and the stable sets that missed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImperfectionCertificate {
    /// Vertices still uncoloured when the class search failed.
    pub remaining: VertexSet,
    /// Clique number of the remaining graph.
    pub omega: usize,
    pub cliques: Vec<VertexSet>,
    pub stable_sets: Vec<VertexSet>,
}

impl ImperfectionCertificate {
    pub fn validate(&self, g: &Graph) -> Result<(), String> {
        if self.cliques.len() <= g.vertex_count() {
            return Err(format!("only {} cliques recorded", self.cliques.len()));
        }
        for k in &self.cliques {
            if !g.is_clique(k) || k.len() != self.omega || !k.is_subset(&self.remaining) {
                return Err(format!("{k} is not a maximum clique of the remaining graph"));
            }
        }
        for s in &self.stable_sets {
            if !g.is_stable(s) {
                return Err(format!("{s} is not stable"));
            }
            if self.cliques.iter().all(|k| !k.is_disjoint(s)) {
                return Err(format!("{s} meets every recorded clique"));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum ColorOutcome {
    Colored(ColoringResult),
    Imperfect(ImperfectionCertificate),
    NotInClass(Box<NotInClassCertificate>),
}

/// Rank of a 0/1 matrix over a prime field; never exceeds the rational rank.
fn rank_mod_p(rows: &[Vec<u64>], p: u64) -> usize {
    let mut m: Vec<Vec<u64>> = rows.to_vec();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&r| m[r][col] % p != 0) else { continue };
        m.swap(rank, piv);
        let inv = pow_mod(m[rank][col], p - 2, p);
        for r in 0..m.len() {
            if r != rank && m[r][col] != 0 {
                let f = m[r][col] * inv % p;
                for c in col..cols {
                    m[r][c] = (m[r][c] + p - f * m[rank][c] % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Fraction-free Gaussian elimination; `None` on overflow.
fn rank_bareiss(rows: &[Vec<i128>]) -> Option<usize> {
    let mut m = rows.to_vec();
    let cols = m.first().map_or(0, |r| r.len());
    let (mut rank, mut prev) = (0usize, 1i128);
    for col in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&r| m[r][col] != 0) else { continue };
        m.swap(rank, piv);
        for r in rank + 1..m.len() {
            for c in col + 1..cols {
                let v = m[r][c].checked_mul(m[rank][col])?.checked_sub(m[r][col].checked_mul(m[rank][c])?)?;
                m[r][c] = v / prev;
            }
            m[r][col] = 0;
        }
        prev = m[rank][col];
        rank += 1;
    }
    Some(rank)
}

/// Whether the incidence vectors of `cliques` are linearly independent over
/// the rationals.
pub fn full_row_rank(cliques: &[VertexSet], n: usize) -> bool {
    let rows: Vec<Vec<u64>> = cliques.iter().map(|k| (0..n).map(|v| k.contains(v) as u64).collect()).collect();
    if rank_mod_p(&rows, 1_000_000_007) == cliques.len() {
        return true;
    }
    let rows: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    rank_bareiss(&rows).map_or(false, |r| r == cliques.len())
}

fn unit_on(n: usize, set: &VertexSet) -> Vec<Weight> {
    (0..n).map(|v| set.contains(v) as Weight).collect()
}

/// Optimal colouring of a perfect graph, or a certificate.
pub fn color(g: &Graph) -> Result<ColorOutcome, Error> {
    match color_inner(g) {
        Err(Error::NotInClass(c)) => Ok(ColorOutcome::NotInClass(c)),
        other => other,
    }
}

fn color_inner(g: &Graph) -> Result<ColorOutcome, Error> {
    let n = g.vertex_count();
    let mut remaining: VertexSet = (0..n).collect();
    let mut color_of = vec![usize::MAX; n];
    let mut classes = Vec::new();
    let mut class_stats = Vec::new();
    let (max_clique, _) = omega_and_max_clique(g, &unit_on(n, &remaining))?;
    while !remaining.is_empty() {
        let (first, k) = omega_and_max_clique(g, &unit_on(n, &remaining))?;
        let mut cliques = vec![first];
        let mut failed = Vec::new();
        let mut stats = ClassStats { full_rank: true, ..ClassStats::default() };
        let class = loop {
            stats.iterations += 1;
            let (s, y) = stable_hitting_cliques(g, &cliques)?;
            if (y as usize) < cliques.len() {
                stats.misses += 1;
            }
            let rest = remaining.difference(&s);
            let (next, k2) = omega_and_max_clique(g, &unit_on(n, &rest))?;
            if k2 < k {
                break s;
            }
            failed.push(s);
            cliques.push(next);
            if cliques.len() > n {
                return Ok(ColorOutcome::Imperfect(ImperfectionCertificate {
                    remaining,
                    omega: k as usize,
                    cliques,
                    stable_sets: failed,
                }));
            }
            if stats.full_rank && n <= 64 {
                stats.full_rank = full_row_rank(&cliques, n);
            }
        };
        for v in class.iter() {
            color_of[v] = classes.len();
        }
        remaining = remaining.difference(&class);
        classes.push(class);
        class_stats.push(stats);
    }
    let result = ColoringResult { color_of, num_colors: classes.len(), clique_cover: classes, max_clique, class_stats };
    result.validate(g).map_err(Error::Internal)?;
    Ok(ColorOutcome::Colored(result))
}

/// Output of the robust solver on a graph.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum RobustOutcome {
    /// A stable set and a partition into as many cliques: both optimal.
    Optimal { stable_set: VertexSet, clique_cover: Vec<VertexSet> },
    Imperfect(ImperfectionCertificate),
    NotInClass(Box<NotInClassCertificate>),
}

impl RobustOutcome {
    pub fn validate(&self, g: &Graph) -> Result<(), String> {
        match self {
            RobustOutcome::Optimal { stable_set, clique_cover } => {
                if !g.is_stable(stable_set) || stable_set.len() != clique_cover.len() {
                    return Err("stable set and cover sizes differ".into());
                }
                let mut seen = vec![false; g.vertex_count()];
                for k in clique_cover {
                    if !g.is_clique(k) || k.intersection(stable_set).len() != 1 {
                        return Err(format!("cover clique {k} is bad"));
                    }
                    for v in k.iter() {
                        if std::mem::replace(&mut seen[v], true) {
                            return Err(format!("vertex {v} covered twice"));
                        }
                    }
                }
                seen.iter().all(|&s| s).then_some(()).ok_or_else(|| "cover misses a vertex".into())
            }
            RobustOutcome::Imperfect(c) => c.validate(&g.complement()),
            RobustOutcome::NotInClass(_) => Ok(()),
        }
    }
}

/// Maximum stable set with a clique cover of equal size, or a certificate.
pub fn robust_solve(g: &Graph) -> Result<RobustOutcome, Error> {
    let t = Trigraph::from_graph(g);
    let stable = match alpha(&t) {
        Ok(out) => extract_stable_set(&t, &out)?,
        Err(Error::NotInClass(c)) => return Ok(RobustOutcome::NotInClass(c)),
        Err(e) => return Err(e),
    };
    match color(&g.complement())? {
        ColorOutcome::Colored(c) if c.num_colors == stable.len() => {
            Ok(RobustOutcome::Optimal { stable_set: stable, clique_cover: c.clique_cover })
        }
        ColorOutcome::Colored(c) => Err(Error::Internal(format!(
            "stable set of size {} but {} cover cliques",
            stable.len(),
            c.num_colors
        ))),
        ColorOutcome::Imperfect(c) => Ok(RobustOutcome::Imperfect(c)),
        ColorOutcome::NotInClass(c) => Ok(RobustOutcome::NotInClass(c)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{chi_bf, omega_bf};
    use crate::trigraph::cycle;

    fn graph(t: &Trigraph) -> Graph {
        t.full_realization()
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega_and_max_clique(&graph(&cycle(4)), &[1; 4]).unwrap().1, 2);
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(omega_and_max_clique(&k4, &[1; 4]).unwrap().1, 4);
        let c6 = graph(&cycle(6));
        let (k, w) = omega_and_max_clique(&c6, &[3, 1, 1, 1, 1, 1]).unwrap();
        assert_eq!(w, 4);
        assert!(k.contains(0) && k.len() == 2);
    }

    #[test]
    fn hitting_sets() {
        let c6 = graph(&cycle(6));
        let cliques: Vec<VertexSet> = vec![[0, 1].into(), [2, 3].into(), [4, 5].into()];
        let (s, y) = stable_hitting_cliques(&c6, &cliques).unwrap();
        assert_eq!(y, 3);
        assert!(cliques.iter().all(|k| !k.is_disjoint(&s)));
    }

    #[test]
    fn colours_match_oracles() {
        for g in [graph(&cycle(6)), graph(&cycle(8)), graph(&cycle(6).complement()), Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])] {
            let ColorOutcome::Colored(c) = color(&g).unwrap() else { panic!("not coloured") };
            c.validate(&g).unwrap();
            assert_eq!(c.num_colors, chi_bf(&g).unwrap());
            assert_eq!(c.num_colors, omega_bf(&g).unwrap());
            assert!(c.class_stats.iter().all(|s| s.iterations <= g.vertex_count() && s.full_rank && s.misses == 0));
        }
    }

    #[test]
    fn petersen_is_never_coloured() {
        let mut e = vec![];
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((i + 5, (i + 2) % 5 + 5));
        }
        let g = Graph::from_edges(10, &e);
        match color(&g).unwrap() {
            ColorOutcome::Colored(_) => panic!("Petersen coloured with omega colours"),
            ColorOutcome::Imperfect(c) => c.validate(&g).unwrap(),
            ColorOutcome::NotInClass(c) => crate::decompose::validate_certificate(&c).unwrap(),
        }
    }

    #[test]
    fn robust_outputs() {
        let c6 = graph(&cycle(6));
        let r = robust_solve(&c6).unwrap();
        r.validate(&c6).unwrap();
        assert!(matches!(&r, RobustOutcome::Optimal { stable_set, .. } if stable_set.len() == 3));
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert!(matches!(robust_solve(&k4).unwrap(), RobustOutcome::Optimal { stable_set, .. } if stable_set.len() == 1));
        assert!(!matches!(robust_solve(&graph(&cycle(5))).unwrap(), RobustOutcome::Optimal { .. }));
    }

    #[test]
    fn rank_checks() {
        let rows: Vec<VertexSet> = vec![[0, 1].into(), [1, 2].into(), [0, 2].into()];
        assert!(full_row_rank(&rows, 3));
        let dependent: Vec<VertexSet> = vec![[0, 1].into(), [2, 3].into(), [0, 2].into(), [1, 3].into()];
        assert!(!full_row_rank(&dependent, 4));
    }
}
