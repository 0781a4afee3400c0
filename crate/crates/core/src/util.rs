//! Small exact linear-algebra helpers over the rationals.

/// Rank of an integer matrix (fraction-free elimination).
pub(crate) fn rational_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..m.len()).find(|&r| m[r][col] != 0) else { continue };
        m.swap(rank, piv);
        for r in 0..m.len() {
            if r == rank || m[r][col] == 0 {
                continue;
            }
            let a = m[rank][col];
            let b = m[r][col];
            for c in 0..ncols {
                m[r][c] = m[r][c] * a - m[rank][c] * b;
            }
            let g = m[r].iter().fold(0i128, |g, &x| gcd128(g, x));
            if g > 1 {
                for x in m[r].iter_mut() {
                    *x /= g;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn gcd128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}
