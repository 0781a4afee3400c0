//! Dynkin diagram recognition.

use super::{CartanType, Component, RootSystemError, Series};

/// Splits the diagram into connected components and names each one.
pub(crate) fn components(
    cartan: &[Vec<i64>],
    lengths: &[i64],
) -> Result<Vec<Component>, RootSystemError> {
    let n = cartan.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut nodes = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < nodes.len() {
            let i = nodes[k];
            k += 1;
            for j in 0..n {
                if !seen[j] && cartan[i][j] != 0 {
                    seen[j] = true;
                    nodes.push(j);
                }
            }
        }
        nodes.sort_unstable();
        let ty = classify_component(cartan, lengths, &nodes)?;
        out.push(Component { ty, nodes });
    }
    Ok(out)
}

/// Names the connected diagram on `nodes`, returning the canonical type
/// (`C2` is reported as `B2`).
pub fn classify_component(
    cartan: &[Vec<i64>],
    lengths: &[i64],
    nodes: &[usize],
) -> Result<CartanType, RootSystemError> {
    let n = nodes.len();
    let bad = |why: &str| Err(RootSystemError::InvalidCartan(format!("not of finite type: {why}")));
    if n == 1 {
        return Ok(CartanType { series: Series::A, rank: 1 });
    }
    let mut edges = Vec::new();
    for (a, &i) in nodes.iter().enumerate() {
        for (b, &j) in nodes.iter().enumerate().skip(a + 1) {
            if cartan[i][j] != 0 {
                edges.push((a, b, cartan[i][j] * cartan[j][i]));
            }
        }
    }
    if edges.len() != n - 1 {
        return bad("diagram is not a tree");
    }
    let mut degree = vec![0usize; n];
    for &(a, b, _) in &edges {
        degree[a] += 1;
        degree[b] += 1;
    }
    let multi: Vec<&(usize, usize, i64)> = edges.iter().filter(|e| e.2 > 1).collect();
    if multi.iter().any(|e| e.2 > 3) {
        return bad("bond of multiplicity > 3");
    }
    if let Some(e) = multi.iter().find(|e| e.2 == 3) {
        let _ = e;
        if n == 2 {
            return Ok(CartanType { series: Series::G, rank: 2 });
        }
        return bad("triple bond in rank > 2");
    }
    let branches: Vec<usize> = (0..n).filter(|&a| degree[a] >= 3).collect();
    if degree.iter().any(|&d| d > 3) || branches.len() > 1 {
        return bad("too many branches");
    }
    match multi.len() {
        0 => {}
        1 => {
            if !branches.is_empty() {
                return bad("double bond with a branch");
            }
            let (a, b, _) = *multi[0];
            if n == 2 {
                return Ok(CartanType { series: Series::B, rank: 2 });
            }
            let (end, other) = if degree[a] == 1 {
                (a, b)
            } else if degree[b] == 1 {
                (b, a)
            } else {
                if n == 4 {
                    return Ok(CartanType { series: Series::F, rank: 4 });
                }
                return bad("interior double bond");
            };
            let short_end = lengths[nodes[end]] < lengths[nodes[other]];
            let series = if short_end { Series::B } else { Series::C };
            return Ok(CartanType { series, rank: n });
        }
        _ => return bad("two multiple bonds"),
    }
    let Some(&centre) = branches.first() else {
        return Ok(CartanType { series: Series::A, rank: n });
    };
    // arm lengths from the branch node
    let adj = |a: usize| -> Vec<usize> {
        edges
            .iter()
            .filter_map(|&(x, y, _)| if x == a { Some(y) } else if y == a { Some(x) } else { None })
            .collect()
    };
    let mut arms: Vec<usize> = adj(centre)
        .into_iter()
        .map(|first| {
            let (mut prev, mut cur, mut len) = (centre, first, 1);
            loop {
                let next: Vec<usize> = adj(cur).into_iter().filter(|&x| x != prev).collect();
                match next.as_slice() {
                    [] => break len,
                    [x] => {
                        prev = cur;
                        cur = *x;
                        len += 1;
                    }
                    _ => break usize::MAX,
                }
            }
        })
        .collect();
    arms.sort_unstable();
    match arms.as_slice() {
        [1, 1, c] => Ok(CartanType { series: Series::D, rank: c + 3 }),
        [1, 2, 2] => Ok(CartanType { series: Series::E, rank: 6 }),
        [1, 2, 3] => Ok(CartanType { series: Series::E, rank: 7 }),
        [1, 2, 4] => Ok(CartanType { series: Series::E, rank: 8 }),
        _ => bad("branch arms of unsupported lengths"),
    }
}

#[cfg(test)]
mod tests {
    use super::super::{build_root_system, RootSystem};
    use super::*;

    #[test]
    fn b_and_c_distinguished() {
        let rs = build_root_system(Series::C, 3).unwrap();
        assert_eq!(rs.components()[0].ty, CartanType { series: Series::C, rank: 3 });
        let rs = build_root_system(Series::B, 3).unwrap();
        assert_eq!(rs.components()[0].ty, CartanType { series: Series::B, rank: 3 });
    }

    #[test]
    fn permuted_cartan_is_recognised() {
        // E6 with its nodes reversed
        let c = CartanType::new(Series::E, 6).unwrap().cartan_matrix();
        let n = c.len();
        let p: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| c[n - 1 - i][n - 1 - j]).collect()).collect();
        let rs = RootSystem::from_cartan(p).unwrap();
        assert_eq!(rs.type_string(), "E6");
    }

    #[test]
    fn affine_rejected() {
        let c = vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]];
        assert!(RootSystem::from_cartan(c).is_err());
    }

    #[test]
    fn reducible_system() {
        let c = vec![vec![2, 0, 0], vec![0, 2, -1], vec![0, -2, 2]];
        let rs = RootSystem::from_cartan(c).unwrap();
        assert_eq!(rs.type_string(), "A1xB2");
        assert_eq!(rs.weyl_order(), 16);
    }
}
