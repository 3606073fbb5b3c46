//! Cycle matroids of dual graphs, initial matroids and Bergman fan
//! membership, flags of flats, and circuits of the vector matroid of a
//! configuration.

use itertools::Itertools;
use num::Signed;
use petgraph::unionfind::UnionFind;

use crate::cone::HCone;
use crate::config::PointConfiguration;
use crate::error::{Error, Result};
use crate::geometry::{self, Ridge, Simplex};
use crate::limits;
use crate::linalg;
use crate::mstfan::MSTCone;
use crate::scalar::Rational;
use crate::triangulate::DualGraph;

/// The matroid on the edges of a graph whose bases are spanning trees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleMatroid {
    nodes: usize,
    edges: Vec<(usize, usize)>,
}

impl CycleMatroid {
    pub fn new(nodes: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if let Some(&(a, b)) = edges.iter().find(|&&(a, b)| a >= nodes || b >= nodes) {
            return Err(Error::InvalidArgument(format!("edge ({a}, {b}) leaves the node range")));
        }
        Ok(Self { nodes, edges })
    }

    pub fn of_dual_graph(g: &DualGraph) -> Self {
        Self { nodes: g.node_count(), edges: g.edges().iter().map(|e| e.ends).collect() }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// `#nodes - #components` of the spanning subgraph on `set`.
    pub fn rank(&self, set: &[usize]) -> usize {
        let mut uf = UnionFind::new(self.nodes);
        set.iter().filter(|&&e| uf.union(self.edges[e].0, self.edges[e].1)).count()
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        self.rank(set) == set.len()
    }

    /// Adding any outside edge raises the rank.
    pub fn is_flat(&self, set: &[usize]) -> bool {
        let r = self.rank(set);
        (0..self.len()).filter(|e| !set.contains(e)).all(|e| {
            let mut bigger = set.to_vec();
            bigger.push(e);
            self.rank(&bigger) > r
        })
    }

    /// All bases, as sorted edge index lists.
    pub fn bases(&self) -> Vec<Vec<usize>> {
        let r = self.rank(&(0..self.len()).collect::<Vec<_>>());
        (0..self.len()).combinations(r).filter(|c| self.is_independent(c)).collect()
    }
}

/// Edges lying in no minimum-weight basis, by enumerating all bases.
pub fn initial_matroid_loops(m: &CycleMatroid, w: &[Rational]) -> Vec<usize> {
    let bases = m.bases();
    let weight = |b: &Vec<usize>| -> Rational { b.iter().map(|&e| w[e].clone()).sum() };
    let Some(best) = bases.iter().map(weight).min() else {
        return (0..m.len()).collect();
    };
    let mut used = vec![false; m.len()];
    for b in bases.iter().filter(|b| weight(b) == best) {
        for &e in b {
            used[e] = true;
        }
    }
    (0..m.len()).filter(|&e| !used[e]).collect()
}

/// Same as [`initial_matroid_loops`] without enumeration: an edge is in some
/// minimum basis iff its ends are not joined by strictly lighter edges.
pub fn initial_matroid_loops_fast(m: &CycleMatroid, w: &[Rational]) -> Vec<usize> {
    (0..m.len())
        .filter(|&e| {
            let (a, b) = m.edges[e];
            if a == b {
                return true;
            }
            let mut uf = UnionFind::new(m.nodes);
            for f in (0..m.len()).filter(|&f| w[f] < w[e]) {
                uf.union(m.edges[f].0, m.edges[f].1);
            }
            uf.equiv(a, b)
        })
        .collect()
}

/// Membership of `w` in the Bergman fan: the initial matroid has no loops.
pub fn bergman_membership(m: &CycleMatroid, w: &[Rational]) -> bool {
    initial_matroid_loops(m, w).is_empty()
}

/// A chain `∅ = F_0 ⊂ F_1 ⊂ ... ⊂ F_k = E` of edge sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flag {
    chain: Vec<Vec<usize>>,
}

impl Flag {
    pub fn chain(&self) -> &[Vec<usize>] {
        &self.chain
    }
}

/// Sublevel sets of `w` at its distinct values.
pub fn flag_of(w: &[Rational]) -> Flag {
    let mut levels: Vec<&Rational> = w.iter().collect();
    levels.sort();
    levels.dedup();
    let mut chain = vec![Vec::new()];
    for level in levels {
        chain.push((0..w.len()).filter(|&e| w[e] <= *level).collect());
    }
    Flag { chain }
}

pub fn is_flag_of_flats(m: &CycleMatroid, flag: &Flag) -> bool {
    flag.chain.iter().all(|f| m.is_flat(f))
}

/// A ridge whose fundamental circuit is `z`: pick two labels `z_1 < z_t` of
/// the same sign class, extend `z - z_1` to a basis `t`, and exchange.
pub fn ridge_for_circuit(config: &PointConfiguration, z: &[usize]) -> Result<Ridge> {
    let signed = geometry::circuit_signs(config, z)?;
    let class = if signed.positive.len() >= 2 { &signed.positive } else { &signed.negative };
    if class.len() < 2 {
        return Err(Error::InvalidCircuit(z.to_vec()));
    }
    let (z1, zt) = (class[0], class[1]);
    let mut t: Vec<usize> = signed.support().into_iter().filter(|&v| v != z1).collect();
    for v in 0..config.len() {
        if t.len() == config.dim() + 1 {
            break;
        }
        if t.contains(&v) || v == z1 {
            continue;
        }
        t.push(v);
        if !config.affinely_independent(&t) {
            t.pop();
        }
    }
    let mut s: Vec<usize> = t.iter().copied().filter(|&v| v != zt).collect();
    s.push(z1);
    Ridge::new(config, Simplex::new(config, s)?, Simplex::new(config, t)?)
}

/// An intersection of MST-cones whose trees together use every dual edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SaturatingCell {
    /// Indices into the cone list passed to [`saturating_cells`].
    pub collection: Vec<usize>,
    pub cone: HCone,
    /// Relative interior point of `cone`.
    pub witness: Vec<Rational>,
    /// Bergman membership of the dual edge lengths at the witness.
    pub bergman: bool,
}

/// Largest collection size examined by [`saturating_cells`].
pub const MAX_COLLECTION: usize = 4;

/// Inclusion-minimal collections of the given cones (identical cones counted
/// once) whose trees cover all edges of `g` and whose intersection is larger
/// than the lineality space of the secondary cone.
pub fn saturating_cells(cones: &[MSTCone], g: &DualGraph, sc: &HCone) -> Result<Vec<SaturatingCell>> {
    let mut distinct: Vec<usize> = Vec::new();
    for (i, k) in cones.iter().enumerate() {
        let mut a = k.cone.constraints().to_vec();
        a.sort();
        if !distinct.iter().any(|&j| {
            let mut b = cones[j].cone.constraints().to_vec();
            b.sort();
            a == b
        }) {
            distinct.push(i);
        }
    }
    let rows: Vec<Vec<Rational>> = sc.constraints().iter().map(|f| f.coefficients().to_vec()).collect();
    let lineality = sc.ambient() - linalg::rank(&rows);
    let matroid = CycleMatroid::of_dual_graph(g);
    let edge_masks: Vec<u64> = distinct
        .iter()
        .map(|&i| {
            cones[i].tree.edges().iter().map(|r| 1u64 << g.edge_index(r).expect("tree edge")).fold(0, |a, b| a | b)
        })
        .collect();
    let full: u64 = if g.edge_count() == 64 { u64::MAX } else { (1u64 << g.edge_count()) - 1 };

    let mut found: Vec<Vec<usize>> = Vec::new();
    let mut out = Vec::new();
    for size in 1..=MAX_COLLECTION.min(distinct.len()) {
        let combos = binomial(distinct.len(), size);
        limits::guard("saturating collections", combos, 200_000)?;
        for combo in (0..distinct.len()).combinations(size) {
            if combo.iter().fold(0, |m, &c| m | edge_masks[c]) != full {
                continue;
            }
            if found.iter().any(|f| f.iter().all(|x| combo.contains(x))) {
                continue;
            }
            let mut cone = cones[distinct[combo[0]]].cone.clone();
            for &c in &combo[1..] {
                cone = cone.intersect(&cones[distinct[c]].cone)?;
            }
            let rep = cone.dimension();
            if rep.dimension <= lineality {
                continue;
            }
            let weights: Vec<Rational> =
                g.edges().iter().map(|e| e.form.eval(&rep.relative_interior_point).abs()).collect();
            found.push(combo.clone());
            out.push(SaturatingCell {
                collection: combo.iter().map(|&c| distinct[c]).collect(),
                bergman: bergman_membership(&matroid, &weights),
                witness: rep.relative_interior_point,
                cone,
            });
        }
    }
    Ok(out)
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1usize, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::scalar::int;

    fn triangle() -> CycleMatroid {
        CycleMatroid::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    fn w(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn loops_of_initial_matroids() {
        let m = triangle();
        assert!(initial_matroid_loops(&m, &w(&[1, 1, 1])).is_empty());
        assert_eq!(initial_matroid_loops(&m, &w(&[1, 1, 2])), vec![2]);
        assert_eq!(initial_matroid_loops_fast(&m, &w(&[1, 1, 2])), vec![2]);
        let path = CycleMatroid::new(3, vec![(0, 1), (1, 2)]).unwrap();
        assert!(bergman_membership(&path, &w(&[5, -3])));
        assert!(!bergman_membership(&m, &w(&[1, 1, 2])));
    }

    #[test]
    fn flags() {
        let m = triangle();
        let f = flag_of(&w(&[1, 1, 2]));
        assert_eq!(f.chain(), &[vec![], vec![0, 1], vec![0, 1, 2]]);
        assert!(!is_flag_of_flats(&m, &f));
        assert!(!is_flag_of_flats(&m, &flag_of(&w(&[1, 2, 3]))));
        assert!(is_flag_of_flats(&m, &flag_of(&w(&[7, 7, 7]))));
    }

    /// Independent iff every nonempty subset touches more nodes than it has edges.
    fn independent_brute(m: &CycleMatroid, c: &[usize]) -> bool {
        (1..=c.len()).all(|k| {
            c.iter().combinations(k).all(|sub| {
                let nodes: std::collections::BTreeSet<usize> =
                    sub.iter().flat_map(|&&e| [m.edges[e].0, m.edges[e].1]).collect();
                nodes.len() > k
            })
        })
    }

    #[test]
    fn rank_matches_independent_subsets() {
        let m = CycleMatroid::new(4, vec![(0, 1), (1, 2), (2, 0), (2, 3), (3, 0)]).unwrap();
        for mask in 0u32..32 {
            let s: Vec<usize> = (0..5).filter(|i| mask >> i & 1 == 1).collect();
            let brute = (0..=s.len())
                .rev()
                .find(|&k| s.iter().copied().combinations(k).any(|c| independent_brute(&m, &c)))
                .unwrap();
            assert_eq!(m.rank(&s), brute);
        }
    }

    #[test]
    fn ridges_for_circuits() {
        let a = PointConfiguration::unlabeled((0..3).map(|i| vec![i]).collect()).unwrap();
        let r = ridge_for_circuit(&a, &[0, 1, 2]).unwrap();
        assert_eq!((r.left().vertices(), r.right().vertices()), (&[0, 1][..], &[1, 2][..]));
        let sq = generators::cube(2).unwrap();
        let r = ridge_for_circuit(&sq, &[0, 1, 2, 3]).unwrap();
        assert_eq!(r.shared(), vec![1, 2]);
        assert!(ridge_for_circuit(&sq, &[0, 1, 2]).is_err());
    }
}
