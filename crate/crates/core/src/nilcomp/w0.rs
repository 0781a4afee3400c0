//! Products of orthogonal reflections representing `w_0` (or a conjugate),
//! with the diagram `lambda` that decides whether each `e_beta` lies in `p`.

use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::WeightedDiagram;
use crate::rootsys::{longest_element, reflection, CartanType, RootSystem, Series, WeylElement};

/// What the product of the reflections must equal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum W0Target {
    /// `w_0` itself.
    Longest,
    /// Some conjugate of `w_0`.
    ConjugateOfLongest,
    /// `w_0 s_k`, compared after conjugating the product by `s_alpha`.
    /// The mod-4 test then applies to the conjugated roots, which must be `conjugates`.
    LongestTimesSimple { simple: usize, conjugator: Vec<i64>, conjugates: Vec<Vec<i64>> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrthogonalDecomposition {
    pub name: String,
    pub ty: CartanType,
    pub betas: Vec<Vec<i64>>,
    pub target: W0Target,
    pub lambda_diagram: WeightedDiagram,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct W0Report {
    pub orthogonal: bool,
    pub product: bool,
    pub mod4: bool,
    /// `target . lambda = -lambda`.
    pub negates_lambda: bool,
    pub failures: Vec<String>,
}

impl W0Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn reflect_all(rs: &RootSystem, roots: &[Vec<i64>]) -> Result<WeylElement, String> {
    let mut w = WeylElement::identity(rs);
    for b in roots {
        let idx = rs.index_of(b).ok_or_else(|| format!("{b:?} is not a root"))?;
        w = w.compose(&reflection(rs, idx).map_err(|e| e.to_string())?);
    }
    Ok(w)
}

fn conjugacy_class_contains(rs: &RootSystem, start: &WeylElement, target: &WeylElement) -> bool {
    let gens: Vec<WeylElement> = (0..rs.rank()).map(|i| WeylElement::simple(rs, i)).collect();
    let mut seen: HashSet<Vec<u16>> = HashSet::from([start.perm().to_vec()]);
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(w) = queue.pop_front() {
        if w == *target {
            return true;
        }
        for s in &gens {
            let c = s.compose(&w).compose(s);
            if seen.insert(c.perm().to_vec()) {
                queue.push_back(c);
            }
        }
    }
    false
}

/// Checks orthogonality, the product identity and `<beta, lambda> = 2 mod 4`.
pub fn verify_w0_decomposition(dec: &OrthogonalDecomposition, rs: &RootSystem) -> W0Report {
    let mut rep = W0Report::default();
    let betas = &dec.betas;
    for b in betas {
        if rs.index_of(b).is_none() {
            rep.failures.push(format!("{b:?} is not a root"));
        }
    }
    if !rep.failures.is_empty() {
        return rep;
    }

    rep.orthogonal = true;
    for (i, a) in betas.iter().enumerate() {
        for b in &betas[i + 1..] {
            if rs.inner(a, b) != 0 {
                rep.orthogonal = false;
                rep.failures.push(format!("{a:?} and {b:?} are not orthogonal"));
            }
        }
    }

    let w0 = longest_element(rs);
    let prod = reflect_all(rs, betas).expect("roots checked above");
    let mut effective = betas.clone();
    let target = match &dec.target {
        W0Target::Longest => {
            rep.product = prod == w0;
            w0.clone()
        }
        W0Target::ConjugateOfLongest => {
            rep.product = conjugacy_class_contains(rs, &w0, &prod);
            w0.clone()
        }
        W0Target::LongestTimesSimple { simple, conjugator, conjugates } => {
            let target = w0.compose(&WeylElement::simple(rs, *simple));
            match rs.index_of(conjugator) {
                None => rep.failures.push(format!("conjugator {conjugator:?} is not a root")),
                Some(a) => {
                    let s = reflection(rs, a).expect("valid index");
                    rep.product = s.compose(&target).compose(&s) == s.compose(&prod).compose(&s)
                        && prod == target;
                    effective = betas.iter().map(|b| rs.reflect_vector(b, a)).collect();
                    if &effective != conjugates {
                        rep.failures.push(format!("s_alpha(beta_i) = {effective:?}, expected {conjugates:?}"));
                    }
                    let conj = reflect_all(rs, &effective).expect("images of roots are roots");
                    rep.product &= conj == s.compose(&target).compose(&s);
                }
            }
            target
        }
    };
    if !rep.product {
        rep.failures.push("product of reflections does not match the target".into());
    }

    rep.mod4 = true;
    for b in &effective {
        let v = dec.lambda_diagram.pair(b);
        if v.rem_euclid(4) != 2 {
            rep.mod4 = false;
            rep.failures.push(format!("<{b:?}, lambda> = {v} is not 2 mod 4"));
        }
    }

    // target acts on lambda through its action on roots: <w(a), w.lambda> = <a, lambda>
    let n = rs.rank();
    let inv = target.inverse();
    rep.negates_lambda = (0..n).all(|k| {
        let pre = rs.root(inv.apply(rs.simple(k)));
        dec.lambda_diagram.pair(pre) == -i64::from(dec.lambda_diagram.weights[k])
    });
    if !rep.negates_lambda {
        rep.failures.push("target does not send lambda to -lambda".into());
    }
    rep
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    (0..n).map(|k| i64::from(k == i - 1)).collect()
}

fn diagram(ty: CartanType, zeros: &[usize]) -> WeightedDiagram {
    WeightedDiagram::new(Some(ty), (1..=ty.rank).map(|i| if zeros.contains(&i) { 0 } else { 2 }).collect())
}

fn e7_betas(n: usize) -> Vec<Vec<i64>> {
    let pad = |v: [i64; 7]| {
        let mut x = v.to_vec();
        x.resize(n, 0);
        x
    };
    vec![
        pad([2, 2, 3, 4, 3, 2, 1]),
        pad([0, 1, 1, 2, 2, 2, 1]),
        pad([0, 0, 0, 0, 0, 0, 1]),
        pad([0, 1, 1, 2, 1, 0, 0]),
        pad([0, 1, 0, 0, 0, 0, 0]),
        pad([0, 0, 1, 0, 0, 0, 0]),
        pad([0, 0, 0, 0, 1, 0, 0]),
    ]
}

/// The built-in fixtures for types `A`, `B`, `C`, `F4`, `G2` and the semiregular `E` classes.
pub fn builtin_decompositions() -> Vec<OrthogonalDecomposition> {
    let mut out = Vec::new();
    let ty = |s, n| CartanType::new(s, n).expect("valid type");
    let dec = |name: String, t: CartanType, betas: Vec<Vec<i64>>, target: W0Target, zeros: &[usize]| {
        OrthogonalDecomposition { name, ty: t, betas, target, lambda_diagram: diagram(t, zeros) }
    };

    for n in [4, 5] {
        let t = ty(Series::A, n);
        let betas = (1..=n).step_by(2).filter(|&i| i <= n - (n + 1) % 2).map(|i| unit(n, i)).collect();
        out.push(dec(format!("A{n}"), t, betas, W0Target::ConjugateOfLongest, &[]));
    }
    for n in [3, 4] {
        let t = ty(Series::B, n);
        let betas = (1..=n)
            .map(|i| {
                if i % 2 == 1 {
                    (1..=n).map(|k| if k == i { 1 } else if k > i { 2 } else { 0 }).collect()
                } else {
                    unit(n, i - 1)
                }
            })
            .collect();
        out.push(dec(format!("B{n}"), t, betas, W0Target::Longest, &[]));
    }
    for n in [3, 4] {
        let t = ty(Series::C, n);
        let betas = (1..=n)
            .map(|i| (1..=n).map(|k| if k == n { 1 } else if k >= i { 2 } else { 0 }).collect())
            .collect();
        out.push(dec(format!("C{n}"), t, betas, W0Target::Longest, &[]));
    }
    out.push(dec(
        "F4".into(),
        ty(Series::F, 4),
        vec![vec![2, 3, 4, 2], vec![0, 1, 2, 2], vec![0, 1, 2, 0], vec![0, 1, 0, 0]],
        W0Target::Longest,
        &[],
    ));
    out.push(dec("G2".into(), ty(Series::G, 2), vec![vec![3, 2], vec![1, 0]], W0Target::Longest, &[]));

    let e6 = ty(Series::E, 6);
    let e6_betas = vec![
        vec![1, 2, 2, 3, 2, 1],
        vec![1, 0, 1, 1, 1, 1],
        vec![0, 0, 1, 1, 1, 0],
        vec![0, 0, 0, 1, 0, 0],
    ];
    out.push(dec("E6(reg)".into(), e6, e6_betas.clone(), W0Target::Longest, &[]));
    out.push(dec(
        "E6(a1)".into(),
        e6,
        e6_betas[..3].to_vec(),
        W0Target::LongestTimesSimple {
            simple: 3,
            conjugator: vec![1, 1, 2, 3, 2, 1],
            conjugates: vec![
                vec![0, 1, 0, 0, 0, 0],
                vec![0, -1, -1, -2, -1, 0],
                vec![-1, -1, -1, -2, -1, -1],
            ],
        },
        &[4],
    ));
    for (e, zeros) in [("reg", &[][..]), ("a1", &[4][..]), ("a2", &[4, 6][..])] {
        out.push(dec(format!("E7({e})"), ty(Series::E, 7), e7_betas(7), W0Target::Longest, zeros));
    }
    let mut e8 = vec![vec![2, 3, 4, 6, 5, 4, 3, 2]];
    e8.extend(e7_betas(8));
    for (e, zeros) in [("reg", &[][..]), ("a1", &[4][..]), ("a2", &[4, 6][..])] {
        out.push(dec(format!("E8({e})"), ty(Series::E, 8), e8.clone(), W0Target::Longest, zeros));
    }
    out
}
