//! Maximum weight bipartite matching by the Hungarian method.

/// `w[i][j]` is the weight of edge `(i, j)` or `None` if absent. Returns the
/// matching weight and the matched pairs. Unmatched rows are allowed, so the
/// result is a maximum weight matching, not an assignment.
pub(crate) fn max_weight_matching(rows: usize, cols: usize, w: &[Vec<Option<u64>>]) -> (u128, Vec<(usize, usize)>) {
    let n = rows.max(cols);
    if n == 0 {
        return (0, Vec::new());
    }
    // minimize cost = -weight over a square matrix padded with zeros
    let cost = |i: usize, j: usize| -> i128 {
        if i < rows && j < cols {
            w[i][j].map_or(0, |x| -(x as i128))
        } else {
            0
        }
    };
    let inf = i128::MAX / 4;
    let mut u = vec![0i128; n + 1];
    let mut v = vec![0i128; n + 1];
    let mut p = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        p[0] = i;
        let mut j0 = 0;
        let mut minv = vec![inf; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = p[j0];
            let mut delta = inf;
            let mut j1 = 0;
            for j in 1..=n {
                if !used[j] {
                    let cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
                    if cur < minv[j] {
                        minv[j] = cur;
                        way[j] = j0;
                    }
                    if minv[j] < delta {
                        delta = minv[j];
                        j1 = j;
                    }
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if p[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut pairs = Vec::new();
    let mut total = 0u128;
    for j in 1..=n {
        let (i, jj) = (p[j] - 1, j - 1);
        if i < rows && jj < cols {
            if let Some(x) = w[i][jj] {
                if x > 0 {
                    total += x as u128;
                    pairs.push((i, jj));
                }
            }
        }
    }
    pairs.sort();
    (total, pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(rows: usize, cols: usize, w: &[Vec<Option<u64>>]) -> u128 {
        fn go(i: usize, rows: usize, cols: usize, used: u32, w: &[Vec<Option<u64>>]) -> u128 {
            if i == rows {
                return 0;
            }
            let mut best = go(i + 1, rows, cols, used, w);
            for j in 0..cols {
                if used >> j & 1 == 0 {
                    if let Some(x) = w[i][j] {
                        best = best.max(x as u128 + go(i + 1, rows, cols, used | 1 << j, w));
                    }
                }
            }
            best
        }
        go(0, rows, cols, 0, w)
    }

    #[test]
    fn matches_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let rows = rng.gen_range(0..6);
            let cols = rng.gen_range(0..6);
            let w: Vec<Vec<Option<u64>>> = (0..rows)
                .map(|_| (0..cols).map(|_| rng.gen_bool(0.5).then(|| rng.gen_range(0..10))).collect())
                .collect();
            let (val, pairs) = max_weight_matching(rows, cols, &w);
            assert_eq!(val, brute(rows, cols, &w));
            let mut rs: Vec<usize> = pairs.iter().map(|p| p.0).collect();
            let mut cs: Vec<usize> = pairs.iter().map(|p| p.1).collect();
            rs.dedup();
            cs.sort();
            cs.dedup();
            assert_eq!(rs.len(), pairs.len());
            assert_eq!(cs.len(), pairs.len());
        }
    }
}
