//! Integral structure constants `N_{a,b}` of a Chevalley basis, with signs
//! fixed by extraspecial pairs.
//!
//! Positive roots are processed by height. For each `xi` the extraspecial
//! pair `(alpha, beta)` gets `N = p + 1`; every other special pair follows
//! from the four-root identity, and pairs of mixed sign from the three-root
//! identity `N_{x,y} / (t,t) = N_{y,t} / (x,x) = N_{t,x} / (y,y)`.

use crate::rootsys::RootSystem;

const NONE: u32 = u32::MAX;

pub(crate) struct StructureConstants {
    nr: usize,
    sum: Vec<u32>,
    n: Vec<i64>,
}

impl StructureConstants {
    pub(crate) fn sum(&self, a: usize, b: usize) -> Option<usize> {
        let s = self.sum[a * self.nr + b];
        (s != NONE).then_some(s as usize)
    }

    pub(crate) fn get(&self, a: usize, b: usize) -> i64 {
        self.n[a * self.nr + b]
    }
}

fn sign_pos(rs: &RootSystem, x: usize) -> bool {
    rs.is_positive(x)
}

struct Builder<'a> {
    rs: &'a RootSystem,
    nr: usize,
    sum: Vec<u32>,
    n: Vec<i64>,
    len: Vec<i64>,
}

impl Builder<'_> {
    fn sum(&self, a: usize, b: usize) -> Option<usize> {
        let s = self.sum[a * self.nr + b];
        (s != NONE).then_some(s as usize)
    }

    fn set(&mut self, a: usize, b: usize, v: i64) {
        let rs = self.rs;
        let (na, nb) = (rs.negative(a), rs.negative(b));
        self.n[a * self.nr + b] = v;
        self.n[b * self.nr + a] = -v;
        self.n[na * self.nr + nb] = -v;
        self.n[nb * self.nr + na] = v;
    }

    /// `N_{x,y}` for any pair whose same-sign reductions are already known.
    fn lookup(&self, x: usize, y: usize) -> i64 {
        let Some(s) = self.sum(x, y) else { return 0 };
        let (px, py) = (sign_pos(self.rs, x), sign_pos(self.rs, y));
        if px == py {
            return self.n[x * self.nr + y];
        }
        let t = self.rs.negative(s);
        let pt = sign_pos(self.rs, t);
        let (num, other) = if py == pt {
            (self.len[t] * self.n[y * self.nr + t], self.len[x])
        } else {
            (self.len[t] * self.n[t * self.nr + x], self.len[y])
        };
        debug_assert_eq!(num % other, 0);
        num / other
    }
}

pub(crate) fn structure_constants(rs: &RootSystem) -> StructureConstants {
    let nr = rs.num_roots();
    let npos = rs.num_positive();
    let mut sum = vec![NONE; nr * nr];
    for a in 0..nr {
        for b in 0..nr {
            let v: Vec<i64> = rs.root(a).iter().zip(rs.root(b)).map(|(x, y)| x + y).collect();
            if let Some(k) = rs.index_of(&v) {
                sum[a * nr + b] = k as u32;
            }
        }
    }
    let len: Vec<i64> = (0..nr).map(|i| rs.inner(rs.root(i), rs.root(i))).collect();
    let mut bld = Builder { rs, nr, sum, n: vec![0; nr * nr], len };

    // positive roots are already sorted by height
    for xi in 0..npos {
        let special: Vec<(usize, usize)> = (0..npos)
            .filter_map(|a| {
                let diff: Vec<i64> = rs.root(xi).iter().zip(rs.root(a)).map(|(x, y)| x - y).collect();
                let b = rs.index_of(&diff)?;
                (rs.is_positive(b) && a < b).then_some((a, b))
            })
            .collect();
        let Some(&(alpha, beta)) = special.first() else { continue };
        let mut q = 0;
        loop {
            let v: Vec<i64> =
                rs.root(beta).iter().zip(rs.root(alpha)).map(|(x, y)| x - (q + 1) * y).collect();
            if rs.index_of(&v).is_none() {
                break;
            }
            q += 1;
        }
        let n_ab = q + 1;
        bld.set(alpha, beta, n_ab);
        for &(a, b) in &special[1..] {
            let (ma, mb) = (rs.negative(a), rs.negative(b));
            // alpha + beta + (-a) + (-b) = 0
            let mut num = 0i64;
            let mut den = 1i64;
            let mut add = |x: i64, l: i64| {
                // num/den += x / l
                num = num * l + x * den;
                den *= l;
            };
            if let Some(s) = bld.sum(beta, ma) {
                add(bld.lookup(beta, ma) * bld.lookup(alpha, mb), bld.len[s]);
            }
            if let Some(s) = bld.sum(ma, alpha) {
                add(bld.lookup(ma, alpha) * bld.lookup(beta, mb), bld.len[s]);
            }
            let top = bld.len[xi] * num;
            let bottom = n_ab * den;
            debug_assert_eq!(top % bottom, 0, "inexact structure constant");
            bld.set(a, b, top / bottom);
        }
    }
    // mixed signs
    for x in 0..nr {
        for y in 0..nr {
            if bld.sum(x, y).is_some() && sign_pos(rs, x) != sign_pos(rs, y) {
                let v = bld.lookup(x, y);
                bld.n[x * nr + y] = v;
            }
        }
    }
    StructureConstants { nr, sum: bld.sum, n: bld.n }
}
