//! Independent oracles shared by the integration tests. Nothing here calls
//! into the library's own linear algebra or graph code.

#![allow(dead_code)]

use mstfan::{generators, PointConfiguration, Rational};
use num::{One, Zero};

pub fn criterion_one_instances() -> Vec<(&'static str, PointConfiguration)> {
    vec![
        ("P5", generators::ngon(5).unwrap()),
        ("P6", generators::ngon(6).unwrap()),
        ("prism3", generators::prism(3).unwrap()),
        ("octa", generators::crosspoly(3).unwrap()),
    ]
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

pub fn catalan(n: usize) -> usize {
    let mut c = 1u128;
    for k in 0..n as u128 {
        c = c * 2 * (2 * k + 1) / (k + 2);
    }
    c as usize
}

/// Rank by plain Gaussian elimination over the rationals.
pub fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = &rows[i][c] / &rows[r][c];
                for k in c..cols {
                    let d = &f * &rows[r][k];
                    rows[i][k] -= d;
                }
            }
        }
        r += 1;
    }
    r
}

fn lifted_rank(config: &PointConfiguration, labels: &[usize]) -> usize {
    let rows = labels
        .iter()
        .map(|&i| {
            std::iter::once(Rational::one())
                .chain(config.point(i).iter().map(|&x| Rational::from_integer(x.into())))
                .collect()
        })
        .collect();
    rank(rows)
}

/// The unique minimal affinely dependent subset of `labels`, found by
/// scanning subsets in order of size.
pub fn brute_circuit(config: &PointConfiguration, labels: &[usize]) -> Option<Vec<usize>> {
    let n = labels.len();
    let mut found: Option<Vec<usize>> = None;
    for size in 1..=n {
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != size {
                continue;
            }
            let s: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).map(|i| labels[i]).collect();
            if lifted_rank(config, &s) < s.len() {
                if found.is_some() {
                    return None;
                }
                found = Some(s);
            }
        }
        if found.is_some() {
            break;
        }
    }
    found.map(|mut s| {
        s.sort_unstable();
        s
    })
}

/// Dual graph edges of a set of full-dimensional cells: two cells are
/// adjacent when they share all but one vertex.
pub fn adjacency(cells: &[Vec<usize>]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..cells.len() {
        for j in i + 1..cells.len() {
            let shared = cells[i].iter().filter(|v| cells[j].contains(v)).count();
            if shared + 1 == cells[i].len() {
                out.push((i, j));
            }
        }
    }
    out
}

/// Number of spanning trees by the matrix-tree theorem.
pub fn kirchhoff(nodes: usize, edges: &[(usize, usize)]) -> usize {
    if nodes <= 1 {
        return 1;
    }
    let mut lap = vec![vec![Rational::zero(); nodes]; nodes];
    for &(a, b) in edges {
        lap[a][a] += Rational::one();
        lap[b][b] += Rational::one();
        lap[a][b] -= Rational::one();
        lap[b][a] -= Rational::one();
    }
    let mut m: Vec<Vec<Rational>> = lap[1..].iter().map(|r| r[1..].to_vec()).collect();
    let k = m.len();
    let mut det = Rational::one();
    for c in 0..k {
        let Some(p) = (c..k).find(|&i| !m[i][c].is_zero()) else { return 0 };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det *= m[c][c].clone();
        for i in c + 1..k {
            let f = &m[i][c] / &m[c][c];
            for j in c..k {
                let d = &f * &m[c][j];
                m[i][j] -= d;
            }
        }
    }
    det.to_integer().try_into().expect("small count")
}

/// Spanning trees times orderings of their edges, summed over cell lists.
pub fn ordered_tree_oracle<'a>(triangulations: impl IntoIterator<Item = &'a Vec<Vec<usize>>>) -> usize {
    triangulations.into_iter().map(|cells| kirchhoff(cells.len(), &adjacency(cells)) * factorial(cells.len() - 1)).sum()
}

/// Every simple graph on 4 nodes plus the 5- and 6-cycle and a few graphs
/// with parallel edges; none has more than 6 edges.
pub fn small_graphs() -> Vec<(usize, Vec<(usize, usize)>)> {
    let k4 = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let mut out: Vec<(usize, Vec<(usize, usize)>)> =
        (0u32..64).map(|mask| (4, (0..6).filter(|&i| mask & (1 << i) != 0).map(|i| k4[i]).collect())).collect();
    out.push((5, (0..5).map(|i| (i, (i + 1) % 5)).collect()));
    out.push((6, (0..6).map(|i| (i, (i + 1) % 6)).collect()));
    out.push((2, vec![(0, 1), (0, 1), (0, 1)]));
    out.push((3, vec![(0, 1), (0, 1), (1, 2), (1, 2), (0, 2)]));
    out.push((4, vec![(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (0, 2)]));
    out
}
