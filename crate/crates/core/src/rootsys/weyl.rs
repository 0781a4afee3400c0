//! Weyl group elements as permutations of the root list, and enumeration.
//!
//! Enumeration runs a layered breadth-first search over right
//! multiplication by simple reflections. An element is determined by the
//! images of the simple roots, so each one is packed into a `u128` key (eight
//! bits per simple root). Only the current and next length layers are held in
//! memory, and each layer is sorted, which fixes the output order.

use rayon::prelude::*;

use super::{RootSystem, RootSystemError};

/// Default bound on enumerated group orders (covers `W(E7)`, excludes `W(E8)`).
pub const DEFAULT_ORDER_CAP: u128 = 5_000_000;

#[derive(Debug, Clone)]
pub struct WeylElement {
    perm: Vec<u16>,
    npos: u16,
    rank: u16,
    word: Option<Vec<usize>>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.perm == other.perm
    }
}

impl Eq for WeylElement {}

impl std::hash::Hash for WeylElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.perm.hash(state);
    }
}

impl WeylElement {
    pub fn identity(rs: &RootSystem) -> Self {
        WeylElement {
            perm: (0..rs.num_roots() as u16).collect(),
            npos: rs.num_positive() as u16,
            rank: rs.rank() as u16,
            word: Some(Vec::new()),
        }
    }

    pub fn simple(rs: &RootSystem, i: usize) -> Self {
        WeylElement {
            perm: rs.simple_reflection_perm(i).to_vec(),
            npos: rs.num_positive() as u16,
            rank: rs.rank() as u16,
            word: Some(vec![i]),
        }
    }

    /// Product `s_{i1} s_{i2} ... s_{ik}`.
    pub fn from_word(rs: &RootSystem, word: &[usize]) -> Self {
        let mut w = WeylElement::identity(rs);
        for &i in word {
            w = w.compose(&WeylElement::simple(rs, i));
        }
        w
    }

    pub fn perm(&self) -> &[u16] {
        &self.perm
    }

    /// Image of a root index.
    pub fn apply(&self, root: usize) -> usize {
        self.perm[root] as usize
    }

    /// Image of an arbitrary lattice vector in simple-root coordinates.
    pub fn apply_vector(&self, rs: &RootSystem, v: &[i64]) -> Vec<i64> {
        let mut out = vec![0; v.len()];
        for (j, &c) in v.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let img = rs.root(self.apply(rs.simple(j)));
            for (o, &x) in out.iter_mut().zip(img) {
                *o += c * x;
            }
        }
        out
    }

    /// `self * other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Self {
        let word = match (&self.word, &other.word) {
            (Some(a), Some(b)) => {
                let mut w = a.clone();
                w.extend_from_slice(b);
                Some(w)
            }
            _ => None,
        };
        let perm: Vec<u16> = other.perm.iter().map(|&i| self.perm[i as usize]).collect();
        let mut out = WeylElement { perm, npos: self.npos, rank: self.rank, word: None };
        // the concatenated word is reduced only if lengths add
        if let Some(w) = word {
            if w.len() == out.length() {
                out.word = Some(w);
            }
        }
        out
    }

    pub fn inverse(&self) -> Self {
        let mut perm = vec![0u16; self.perm.len()];
        for (i, &j) in self.perm.iter().enumerate() {
            perm[j as usize] = i as u16;
        }
        let word = self.word.as_ref().map(|w| w.iter().rev().copied().collect());
        WeylElement { perm, npos: self.npos, rank: self.rank, word }
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self) -> usize {
        let npos = self.npos;
        self.perm[..npos as usize].iter().filter(|&&j| j >= npos).count()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    pub fn cached_word(&self) -> Option<&[usize]> {
        self.word.as_deref()
    }

    /// A reduced word, peeling right descents.
    pub fn reduced_word(&self, rs: &RootSystem) -> Vec<usize> {
        if let Some(w) = &self.word {
            return w.clone();
        }
        let mut w = self.clone();
        w.word = None;
        let mut out = Vec::new();
        while let Some(i) = (0..self.rank as usize).find(|&i| !rs.is_positive(w.apply(rs.simple(i)))) {
            out.push(i);
            w = w.compose(&WeylElement::simple(rs, i));
        }
        out.reverse();
        out
    }

    pub fn with_word(mut self, rs: &RootSystem) -> Self {
        let w = self.reduced_word(rs);
        self.word = Some(w);
        self
    }
}

/// The reflection `s_beta` for the root with the given index.
pub fn reflection(rs: &RootSystem, root: usize) -> Result<WeylElement, RootSystemError> {
    rs.check_index(root)?;
    Ok(WeylElement {
        perm: rs.reflection_perm(root),
        npos: rs.num_positive() as u16,
        rank: rs.rank() as u16,
        word: None,
    })
}

/// The longest element, grown greedily by ascents.
pub fn longest_element(rs: &RootSystem) -> WeylElement {
    let mut w = WeylElement::identity(rs);
    while let Some(i) = (0..rs.rank()).find(|&i| rs.is_positive(w.apply(rs.simple(i)))) {
        w = w.compose(&WeylElement::simple(rs, i));
    }
    w
}

struct Tables {
    rank: usize,
    npos: usize,
    neg: Vec<u8>,
    // comb[(a * n + b) * 4 + c] = index of root_a + c * root_b
    comb: Vec<u8>,
    n: usize,
    coef: Vec<Vec<u8>>,
}

const NONE: u8 = u8::MAX;

impl Tables {
    fn new(rs: &RootSystem) -> Result<Self, RootSystemError> {
        let n = rs.num_roots();
        let rank = rs.rank();
        if n >= NONE as usize || rank > 16 {
            return Err(RootSystemError::Unsupported(format!(
                "{n} roots in rank {rank} exceed the packed enumeration format"
            )));
        }
        let mut comb = vec![NONE; n * n * 4];
        for a in 0..n {
            for b in 0..n {
                for c in 1..4 {
                    let v: Vec<i64> = rs.root(a).iter().zip(rs.root(b)).map(|(x, y)| x + c * y).collect();
                    if let Some(k) = rs.index_of(&v) {
                        comb[(a * n + b) * 4 + c as usize] = k as u8;
                    }
                }
            }
        }
        // coef[i][j] = -<alpha_j, alpha_i^vee>, so s_i(alpha_j) = alpha_j + coef * alpha_i
        let coef = (0..rank)
            .map(|i| (0..rank).map(|j| (-rs.cartan()[j][i]).max(0) as u8).collect())
            .collect();
        Ok(Tables {
            rank,
            npos: rs.num_positive(),
            neg: (0..n).map(|i| rs.negative(i) as u8).collect(),
            comb,
            n,
            coef,
        })
    }

    fn get(key: u128, j: usize) -> u8 {
        (key >> (8 * j)) as u8
    }

    fn successors(&self, key: u128, out: &mut Vec<u128>) {
        for i in 0..self.rank {
            let wi = Self::get(key, i);
            if (wi as usize) >= self.npos {
                continue;
            }
            let mut next = 0u128;
            for j in 0..self.rank {
                let wj = Self::get(key, j);
                let img = if i == j {
                    self.neg[wi as usize]
                } else {
                    match self.coef[i][j] {
                        0 => wj,
                        c => self.comb[(wj as usize * self.n + wi as usize) * 4 + c as usize],
                    }
                };
                debug_assert_ne!(img, NONE);
                next |= (img as u128) << (8 * j);
            }
            out.push(next);
        }
    }

    fn next_layer(&self, layer: &[u128]) -> Vec<u128> {
        let mut next: Vec<u128> = if layer.len() > 4096 {
            layer
                .par_chunks(1024)
                .flat_map_iter(|chunk| {
                    let mut buf = Vec::with_capacity(chunk.len() * self.rank);
                    for &k in chunk {
                        self.successors(k, &mut buf);
                    }
                    buf
                })
                .collect()
        } else {
            let mut buf = Vec::with_capacity(layer.len() * self.rank);
            for &k in layer {
                self.successors(k, &mut buf);
            }
            buf
        };
        next.par_sort_unstable();
        next.dedup();
        next
    }
}

fn identity_key(rs: &RootSystem) -> u128 {
    (0..rs.rank()).fold(0u128, |k, j| k | ((rs.simple(j) as u128) << (8 * j)))
}

fn check_cap(rs: &RootSystem, cap: u128) -> Result<(), RootSystemError> {
    let predicted = rs.weyl_order();
    if predicted > cap {
        return Err(RootSystemError::CapExceeded { predicted, cap });
    }
    Ok(())
}

/// Streaming enumeration of `W` in order of length.
pub struct WeylEnumeration<'a> {
    rs: &'a RootSystem,
    tables: Tables,
    layer: Vec<u128>,
    pos: usize,
    length: usize,
}

impl Iterator for WeylEnumeration<'_> {
    type Item = (WeylElement, usize);

    fn next(&mut self) -> Option<Self::Item> {
        if self.pos == self.layer.len() {
            let next = self.tables.next_layer(&self.layer);
            if next.is_empty() {
                return None;
            }
            self.layer = next;
            self.pos = 0;
            self.length += 1;
        }
        let key = self.layer[self.pos];
        self.pos += 1;
        Some((self.decode(key), self.length))
    }
}

impl WeylEnumeration<'_> {
    fn decode(&self, key: u128) -> WeylElement {
        let rs = self.rs;
        let images: Vec<&[i64]> = (0..rs.rank()).map(|j| rs.root(Tables::get(key, j) as usize)).collect();
        let perm = rs
            .roots()
            .iter()
            .map(|r| {
                let mut v = vec![0i64; rs.rank()];
                for (j, &c) in r.iter().enumerate() {
                    for (o, &x) in v.iter_mut().zip(images[j]) {
                        *o += c * x;
                    }
                }
                rs.index_of(&v).expect("Weyl image of a root is a root") as u16
            })
            .collect();
        WeylElement {
            perm,
            npos: rs.num_positive() as u16,
            rank: rs.rank() as u16,
            word: None,
        }
    }
}

/// Every element of `W` exactly once, with its length.
pub fn enumerate_weyl(rs: &RootSystem, order_cap: u128) -> Result<WeylEnumeration<'_>, RootSystemError> {
    check_cap(rs, order_cap)?;
    Ok(WeylEnumeration {
        rs,
        tables: Tables::new(rs)?,
        layer: vec![identity_key(rs)],
        pos: 0,
        length: 0,
    })
}

/// Number of elements of each length, `sum_w t^{l(w)}` as a coefficient list.
pub fn length_counts(rs: &RootSystem, order_cap: u128) -> Result<Vec<u64>, RootSystemError> {
    check_cap(rs, order_cap)?;
    let tables = Tables::new(rs)?;
    let mut layer = vec![identity_key(rs)];
    let mut counts = Vec::new();
    while !layer.is_empty() {
        counts.push(layer.len() as u64);
        layer = tables.next_layer(&layer);
    }
    let total: u128 = counts.iter().map(|&c| c as u128).sum();
    debug_assert_eq!(total, rs.weyl_order());
    Ok(counts)
}
