//! Epistatic filtrations of dual graphs, their merge trees, and the support
//! function of a lifted configuration.

use num::{Signed, Zero};
use petgraph::unionfind::UnionFind;

use crate::config::{HeightFunction, PointConfiguration};
use crate::error::{Error, Result};
use crate::geometry::{self, Ridge, Simplex};
use crate::linalg;
use crate::mstfan::OrderedSpanningTree;
use crate::sample::RationalSampler;
use crate::scalar::{int, one, Rational};
use crate::triangulate::{dual_graph, Candidates, DualGraph, Triangulation};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum WeightKind {
    /// Tropical edge lengths.
    #[default]
    Lattice,
    /// Edge lengths scaled by the volume factor of the ridge.
    Epistatic,
}

impl std::str::FromStr for WeightKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lattice" => Ok(Self::Lattice),
            "epistatic" => Ok(Self::Epistatic),
            _ => Err(Error::Parse(format!("unknown weight kind {s:?}"))),
        }
    }
}

/// Edge weights of `g` (indexed like `g.edges()`), lengths taken from `g`.
pub fn edge_weights(config: &PointConfiguration, g: &DualGraph, kind: WeightKind) -> Result<Vec<Rational>> {
    g.edges()
        .iter()
        .map(|e| match kind {
            WeightKind::Lattice => Ok(e.length.clone()),
            WeightKind::Epistatic => Ok(&e.length * geometry::volume_factor(config, &e.ridge)?),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationStep {
    pub ridge: Ridge,
    /// Index into the dual graph's edges.
    pub edge: usize,
    pub weight: Rational,
    /// Whether the edge joins two different clusters.
    pub critical: bool,
    /// Clusters joined, named by their smallest node index.
    pub merged: Option<(usize, usize)>,
    /// Whether another edge of the graph has the same form up to sign.
    pub forced_tie: bool,
}

/// Edges of the dual graph in ascending weight order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filtration {
    pub cells: Vec<Simplex>,
    pub steps: Vec<FiltrationStep>,
}

impl Filtration {
    pub fn critical_edges(&self) -> Vec<usize> {
        self.steps.iter().filter(|s| s.critical).map(|s| s.edge).collect()
    }
}

/// Filtration of a dual graph under the given weights; ties are broken by
/// canonical edge order, as in the greedy tree.
pub fn filtration_of(g: &DualGraph, weights: &[Rational]) -> Result<Filtration> {
    if weights.len() != g.edge_count() {
        return Err(Error::InvalidArgument(format!("{} weights for {} edges", weights.len(), g.edge_count())));
    }
    let mut order: Vec<usize> = (0..g.edge_count()).collect();
    order.sort_by(|&a, &b| weights[a].cmp(&weights[b]).then(a.cmp(&b)));
    let classes = g.tie_classes();
    let mut uf = UnionFind::new(g.node_count());
    let mut label: Vec<usize> = (0..g.node_count()).collect();
    let steps = order
        .into_iter()
        .map(|e| {
            let (a, b) = g.edges()[e].ends;
            let (ra, rb) = (uf.find(a), uf.find(b));
            let merged = (ra != rb).then(|| {
                let names = (label[ra].min(label[rb]), label[ra].max(label[rb]));
                uf.union(a, b);
                label[uf.find(a)] = names.0;
                names
            });
            FiltrationStep {
                ridge: g.edges()[e].ridge.clone(),
                edge: e,
                weight: weights[e].clone(),
                critical: merged.is_some(),
                merged,
                forced_tie: classes.iter().filter(|&&c| c == classes[e]).count() > 1,
            }
        })
        .collect();
    Ok(Filtration { cells: g.cells().to_vec(), steps })
}

/// Filtration of the dual graph of `Σ(h)`; refuses non-generic heights.
pub fn epistatic_filtration(config: &PointConfiguration, h: &HeightFunction, kind: WeightKind) -> Result<Filtration> {
    let cand = Candidates::new(config)?;
    let check = cand.is_generic(h)?;
    if !check.generic {
        return Err(Error::NonGeneric(format!("{:?}", check.witness)));
    }
    let tri = cand.regular_triangulation(h)?;
    let g = dual_graph(&tri, h)?;
    filtration_of(&g, &edge_weights(config, &g, kind)?)
}

/// Internal node of a merge tree; children index into leaves first, then
/// internal nodes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MergeNode {
    pub children: (usize, usize),
    pub weight: Rational,
}

/// Rooted binary tree of the critical merges; the root is the last node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MergeTree {
    pub leaves: Vec<Simplex>,
    pub internal: Vec<MergeNode>,
}

impl MergeTree {
    pub fn root(&self) -> usize {
        self.leaves.len() + self.internal.len() - 1
    }

    /// Parent of every node (`None` for the root).
    pub fn parents(&self) -> Vec<Option<usize>> {
        let mut p = vec![None; self.leaves.len() + self.internal.len()];
        for (i, n) in self.internal.iter().enumerate() {
            p[n.children.0] = Some(self.leaves.len() + i);
            p[n.children.1] = Some(self.leaves.len() + i);
        }
        p
    }
}

pub fn merge_tree(f: &Filtration) -> Result<MergeTree> {
    let n = f.cells.len();
    let mut uf = UnionFind::new(n);
    let mut top: Vec<usize> = (0..n).collect();
    let mut internal = Vec::new();
    for step in f.steps.iter().filter(|s| s.critical) {
        let (a, b) = (step.ridge.left(), step.ridge.right());
        let ia = f.cells.binary_search(a).map_err(|_| Error::InvalidArgument("ridge cell not in filtration".into()))?;
        let ib = f.cells.binary_search(b).map_err(|_| Error::InvalidArgument("ridge cell not in filtration".into()))?;
        let (ra, rb) = (uf.find(ia), uf.find(ib));
        if ra == rb {
            return Err(Error::InvalidArgument("critical step inside one cluster".into()));
        }
        let (ca, cb) = (top[ra], top[rb]);
        internal.push(MergeNode { children: (ca.min(cb), ca.max(cb)), weight: step.weight.clone() });
        uf.union(ia, ib);
        top[uf.find(ia)] = n + internal.len() - 1;
    }
    if internal.len() + 1 != n.max(1) {
        return Err(Error::InvalidArgument("critical steps do not connect all cells".into()));
    }
    Ok(MergeTree { leaves: f.cells.clone(), internal })
}

/// Sum of weights on the tree path between two nodes of the dual graph.
pub fn leaf_distance(
    tree: &OrderedSpanningTree,
    g: &DualGraph,
    weights: &[Rational],
    a: usize,
    b: usize,
) -> Result<Rational> {
    for x in [a, b] {
        if x >= g.node_count() {
            return Err(Error::UnknownLeaf(x));
        }
    }
    let idx: Vec<usize> = tree
        .edges()
        .iter()
        .map(|r| g.edge_index(r).ok_or_else(|| Error::InvalidArgument("tree edge not in graph".into())))
        .collect::<Result<_>>()?;
    // depth-first search from a, tracking accumulated weight
    let mut dist: Vec<Option<Rational>> = vec![None; g.node_count()];
    dist[a] = Some(Rational::zero());
    let mut stack = vec![a];
    while let Some(u) = stack.pop() {
        let du = dist[u].clone().expect("visited");
        for &e in &idx {
            let (x, y) = g.edges()[e].ends;
            let v = if x == u {
                y
            } else if y == u {
                x
            } else {
                continue;
            };
            if dist[v].is_none() {
                dist[v] = Some(&du + &weights[e]);
                stack.push(v);
            }
        }
    }
    dist[b].clone().ok_or(Error::UnknownLeaf(b))
}

/// Value of the support function at `w` with an optimal population.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportValue {
    pub value: Rational,
    /// Barycentric weights on all points (zero outside `cell`).
    pub population: Vec<Rational>,
    pub cell: Simplex,
}

/// `max h·p` over populations `p >= 0` with `Σp = 1` and `Σ p_i v_i = w`,
/// read off the cell of `tri` containing `w` (smallest such cell).
pub fn eval_support_function(
    config: &PointConfiguration,
    h: &HeightFunction,
    tri: &Triangulation,
    w: &[Rational],
) -> Result<SupportValue> {
    if w.len() != config.dim() {
        return Err(Error::InvalidArgument(format!("point has {} coordinates, expected {}", w.len(), config.dim())));
    }
    for cell in tri.cells() {
        let Some(lambda) = barycentric(config, cell, w) else { continue };
        if lambda.iter().any(|l| l.is_negative()) {
            continue;
        }
        let mut population = vec![Rational::zero(); config.len()];
        for (&v, l) in cell.vertices().iter().zip(&lambda) {
            population[v] = l.clone();
        }
        let value: Rational = population.iter().zip(h.values()).map(|(p, x)| p * x).sum();
        check_population(config, &population, w)?;
        let mut sampler = RationalSampler::new(0xf1be);
        for p in fiber_samples(config, &population, &mut sampler, 20) {
            check_population(config, &p, w)?;
            let other: Rational = p.iter().zip(h.values()).map(|(a, b)| a * b).sum();
            if other > value {
                return Err(Error::Internal("a feasible population beats the cell interpolation".into()));
            }
        }
        return Ok(SupportValue { value, population, cell: cell.clone() });
    }
    Err(Error::Infeasible)
}

fn barycentric(config: &PointConfiguration, cell: &Simplex, w: &[Rational]) -> Option<Vec<Rational>> {
    let n = config.dim();
    let cols: Vec<Vec<Rational>> = cell.vertices().iter().map(|&v| config.homogeneous(v)).collect();
    let a: Vec<Vec<Rational>> = (0..=n).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
    let b: Vec<Rational> = std::iter::once(one()).chain(w.iter().cloned()).collect();
    linalg::solve(&a, &b)
}

fn check_population(config: &PointConfiguration, p: &[Rational], w: &[Rational]) -> Result<()> {
    let total: Rational = p.iter().sum();
    let ok = total == one()
        && p.iter().all(|x| !x.is_negative())
        && (0..config.dim())
            .all(|k| p.iter().enumerate().map(|(i, x)| x * int(config.point(i)[k])).sum::<Rational>() == w[k]);
    if ok {
        Ok(())
    } else {
        Err(Error::Internal("population does not project to the target point".into()))
    }
}

/// Random walk inside the fiber `{p >= 0 : Σp = 1, Σ p_i v_i = w}` along
/// affine dependencies of the configuration.
pub fn fiber_samples(
    config: &PointConfiguration,
    start: &[Rational],
    sampler: &mut RationalSampler,
    count: usize,
) -> Vec<Vec<Rational>> {
    let rows: Vec<Vec<Rational>> =
        (0..=config.dim()).map(|r| (0..config.len()).map(|i| config.homogeneous(i)[r].clone()).collect()).collect();
    let basis = linalg::kernel(&rows, config.len());
    let mut p = start.to_vec();
    let mut out = Vec::with_capacity(count);
    if basis.is_empty() {
        return vec![p; count];
    }
    for _ in 0..count {
        let coeffs = sampler.int_vector(basis.len(), 3);
        let d: Vec<Rational> =
            (0..config.len()).map(|i| basis.iter().zip(&coeffs).map(|(b, c)| &b[i] * c).sum()).collect();
        let mut lo: Option<Rational> = None;
        let mut hi: Option<Rational> = None;
        for (x, di) in p.iter().zip(&d) {
            if di.is_zero() {
                continue;
            }
            let t = -(x / di);
            if di.is_positive() {
                lo = Some(lo.map_or(t.clone(), |l| l.max(t)));
            } else {
                hi = Some(hi.map_or(t.clone(), |h| h.min(t)));
            }
        }
        if let (Some(lo), Some(hi)) = (lo, hi) {
            if lo < hi {
                let t = &lo + (hi - &lo) * sampler.open_unit();
                p = p.iter().zip(&d).map(|(x, di)| x + &t * di).collect();
            }
        }
        out.push(p.clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::mstfan::greedy_mst;
    use crate::scalar::ratio;
    use crate::triangulate::regular_triangulation;

    fn seg4() -> (PointConfiguration, HeightFunction) {
        let a = PointConfiguration::unlabeled((0..4).map(|i| vec![i]).collect()).unwrap();
        let h = HeightFunction::from_ints(&a, &[0, 2, 3, 0]).unwrap();
        (a, h)
    }

    #[test]
    fn seg4_filtration_and_tree() {
        let (a, h) = seg4();
        let f = epistatic_filtration(&a, &h, WeightKind::Lattice).unwrap();
        assert!(f.steps.iter().all(|s| s.critical));
        assert_eq!(f.steps.iter().map(|s| s.weight.clone()).collect::<Vec<_>>(), vec![int(1), int(4)]);
        let t = merge_tree(&f).unwrap();
        assert_eq!(t.internal.len(), 2);
        assert_eq!(t.internal[0].children, (0, 1));
        assert_eq!(t.internal[1].children, (2, 3));
        assert_eq!(t.parents()[t.root()], None);
    }

    #[test]
    fn distances() {
        let (a, h) = seg4();
        let tri = regular_triangulation(&a, &h).unwrap();
        let g = dual_graph(&tri, &h).unwrap();
        let (tree, _) = greedy_mst(&g, &g.lengths()).unwrap();
        let w = g.lengths();
        assert_eq!(leaf_distance(&tree, &g, &w, 0, 2).unwrap(), int(5));
        assert_eq!(leaf_distance(&tree, &g, &w, 1, 1).unwrap(), int(0));
        assert_eq!(leaf_distance(&tree, &g, &w, 1, 2).unwrap(), int(4));
        assert!(matches!(leaf_distance(&tree, &g, &w, 0, 9), Err(Error::UnknownLeaf(9))));
    }

    #[test]
    fn support_function_values() {
        let (a, h) = seg4();
        let tri = regular_triangulation(&a, &h).unwrap();
        let v = eval_support_function(&a, &h, &tri, &[ratio(3, 2)]).unwrap();
        assert_eq!(v.value, ratio(5, 2));
        assert_eq!(eval_support_function(&a, &h, &tri, &[int(2)]).unwrap().value, int(3));
        assert!(matches!(eval_support_function(&a, &h, &tri, &[int(4)]), Err(Error::Infeasible)));

        let sq = generators::cube(2).unwrap();
        let h = HeightFunction::from_ints(&sq, &[0, 0, 0, -1]).unwrap();
        let tri = regular_triangulation(&sq, &h).unwrap();
        let v = eval_support_function(&sq, &h, &tri, &[ratio(1, 2), ratio(1, 2)]).unwrap();
        assert_eq!(v.value, int(0));
        assert_eq!(v.cell.vertices(), &[0, 1, 2]);
        assert_eq!(v.population, vec![int(0), ratio(1, 2), ratio(1, 2), int(0)]);
    }

    #[test]
    fn square_filtration() {
        let sq = generators::cube(2).unwrap();
        let h = HeightFunction::from_ints(&sq, &[0, 0, 0, -1]).unwrap();
        let f = epistatic_filtration(&sq, &h, WeightKind::Epistatic).unwrap();
        assert_eq!(f.steps.len(), 1);
        assert!(f.steps[0].critical);
        assert_eq!(f.steps[0].weight, int(1));
        assert!(
            epistatic_filtration(&sq, &HeightFunction::from_ints(&sq, &[0; 4]).unwrap(), WeightKind::Lattice).is_err()
        );
    }
}
