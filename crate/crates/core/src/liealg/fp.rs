//! Arithmetic and Gaussian elimination over a prime field.

/// Reduces an integer into `0..p`.
pub fn reduce(x: i64, p: u64) -> u64 {
    x.rem_euclid(p as i64) as u64
}

pub fn inverse(a: u64, p: u64) -> u64 {
    pow(a, p - 2, p)
}

pub fn pow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    r
}

/// Rank of a list of vectors over `F_p`; the rows are consumed.
pub fn rank(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..ncols {
        let Some(piv) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, piv);
        let inv = inverse(rows[r][c], p);
        for x in rows[r].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let f = row[c];
            for (x, &y) in row.iter_mut().zip(&pivot).skip(c) {
                *x = (*x + p - f * y % p) % p;
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

/// Product of square matrices over `F_p`.
pub fn mat_mul(a: &[Vec<u64>], b: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = a.len();
    let m = b.first().map_or(0, |r| r.len());
    let mut out = vec![vec![0u64; m]; n];
    for i in 0..n {
        for (k, &x) in a[i].iter().enumerate() {
            if x == 0 {
                continue;
            }
            for j in 0..m {
                out[i][j] = (out[i][j] + x * b[k][j]) % p;
            }
        }
    }
    out
}

pub fn mat_pow(a: &[Vec<u64>], mut e: u64, p: u64) -> Vec<Vec<u64>> {
    let n = a.len();
    let mut r: Vec<Vec<u64>> = (0..n).map(|i| (0..n).map(|j| u64::from(i == j)).collect()).collect();
    let mut base = a.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            r = mat_mul(&r, &base, p);
        }
        base = mat_mul(&base, &base, p);
        e >>= 1;
    }
    r
}
