//! Ordered minimum spanning trees of dual graphs and the cones of heights on
//! which the greedy algorithm can produce them.
//!
//! For a regular triangulation with secondary cone `sc`, every edge length
//! form has a constant sign on the interior of `sc`, so `p_r = sign * l_r` is
//! a linear form equal to the length there. The cone of an ordered tree
//! `(r_1, ..., r_m)` is `sc` cut by `p_{r_{k+1}} >= p_{r_k}` and, for every
//! non-tree edge `r`, `p_r >= p_{cut(r)}`.

use std::collections::BTreeSet;

use petgraph::unionfind::UnionFind;
use rayon::prelude::*;

use crate::cone::HCone;
use crate::config::{HeightFunction, PointConfiguration};
use crate::error::{Error, Result};
use crate::geometry::{LinearForm, Ridge};
use crate::limits;
use crate::sample::RationalSampler;
use crate::scalar::{self, Rational};
use crate::triangulate::{self, dual_graph, Candidates, DualGraph, Triangulation};

/// A spanning tree of a dual graph with an order on its edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedSpanningTree {
    edges: Vec<Ridge>,
}

impl OrderedSpanningTree {
    pub fn new(g: &DualGraph, edges: Vec<Ridge>) -> Result<Self> {
        let idx = edges
            .iter()
            .map(|r| {
                g.edge_index(r).ok_or_else(|| Error::InvalidArgument("ridge is not an edge of the dual graph".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        if idx.len() + 1 != g.node_count() {
            return Err(Error::InvalidArgument(format!("{} edges cannot span {} nodes", idx.len(), g.node_count())));
        }
        if !is_forest(g, &idx) {
            return Err(Error::InvalidArgument("edges contain a cycle".into()));
        }
        Ok(Self { edges })
    }

    fn from_indices(g: &DualGraph, idx: &[usize]) -> Self {
        Self { edges: idx.iter().map(|&i| g.edges()[i].ridge.clone()).collect() }
    }

    pub fn edges(&self) -> &[Ridge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, r: &Ridge) -> bool {
        self.edges.contains(r)
    }

    pub fn edge_set(&self) -> BTreeSet<Ridge> {
        self.edges.iter().cloned().collect()
    }

    fn indices(&self, g: &DualGraph) -> Result<Vec<usize>> {
        self.edges
            .iter()
            .map(|r| g.edge_index(r).ok_or_else(|| Error::InvalidArgument("tree edge is not in the dual graph".into())))
            .collect()
    }
}

/// Maximal blocks of consecutive tree edges with the same form up to sign,
/// as 1-based inclusive intervals of positions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InstabilityPartition {
    ranges: Vec<(usize, usize)>,
}

impl InstabilityPartition {
    fn of_order(g: &DualGraph, order: &[usize]) -> Self {
        let mut ranges: Vec<(usize, usize)> = Vec::new();
        for (k, &e) in order.iter().enumerate() {
            match ranges.last_mut() {
                Some(last) if g.edges()[order[last.1 - 1]].tie_class == g.edges()[e].tie_class => last.1 = k + 1,
                _ => ranges.push((k + 1, k + 1)),
            }
        }
        Self { ranges }
    }

    pub fn ranges(&self) -> &[(usize, usize)] {
        &self.ranges
    }

    /// Whether every range is a single position.
    pub fn all_singletons(&self) -> bool {
        self.ranges.iter().all(|(a, b)| a == b)
    }
}

fn is_forest(g: &DualGraph, idx: &[usize]) -> bool {
    let mut uf = UnionFind::new(g.node_count());
    idx.iter().all(|&i| {
        let (a, b) = g.edges()[i].ends;
        uf.union(a, b)
    })
}

/// Kruskal with ties broken by canonical edge order. `weights` is indexed
/// like `g.edges()`.
pub fn greedy_mst(g: &DualGraph, weights: &[Rational]) -> Result<(OrderedSpanningTree, InstabilityPartition)> {
    if weights.len() != g.edge_count() {
        return Err(Error::InvalidArgument(format!("{} weights for {} edges", weights.len(), g.edge_count())));
    }
    let order = kruskal(g, weights);
    if order.len() + 1 != g.node_count() {
        return Err(Error::Internal("dual graph is disconnected".into()));
    }
    Ok((OrderedSpanningTree::from_indices(g, &order), InstabilityPartition::of_order(g, &order)))
}

fn kruskal(g: &DualGraph, weights: &[Rational]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..g.edge_count()).collect();
    idx.sort_by(|&a, &b| weights[a].cmp(&weights[b]).then(a.cmp(&b)));
    let mut uf = UnionFind::new(g.node_count());
    idx.into_iter()
        .filter(|&e| {
            let (a, b) = g.edges()[e].ends;
            uf.union(a, b)
        })
        .collect()
}

/// 1-based position at which adding the tree edges in order first joins the
/// endpoints of `target`.
fn cut_position(nodes: usize, tree: &[(usize, usize)], target: (usize, usize)) -> Option<usize> {
    let mut uf = UnionFind::new(nodes);
    for (k, &(a, b)) in tree.iter().enumerate() {
        uf.union(a, b);
        if uf.equiv(target.0, target.1) {
            return Some(k + 1);
        }
    }
    None
}

/// The cut edge of a non-tree edge: `(i(r), r_{i(r)})` with a 1-based index.
pub fn cut_edge(tree: &OrderedSpanningTree, g: &DualGraph, r: &Ridge) -> Result<(usize, Ridge)> {
    if tree.contains(r) {
        return Err(Error::InvalidArgument("cut edges are defined for non-tree edges only".into()));
    }
    let e = g.edge_index(r).ok_or_else(|| Error::InvalidArgument("ridge is not an edge of the dual graph".into()))?;
    let ends: Vec<(usize, usize)> = tree.indices(g)?.iter().map(|&i| g.edges()[i].ends).collect();
    let k = cut_position(g.node_count(), &ends, g.edges()[e].ends)
        .ok_or_else(|| Error::InvalidArgument("tree does not span the graph".into()))?;
    Ok((k, tree.edges[k - 1].clone()))
}

/// The closed cone of heights on which the greedy algorithm can output a
/// given ordered tree, with its defining conditions kept for inspection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MSTCone {
    pub tree: OrderedSpanningTree,
    pub partition: InstabilityPartition,
    pub cone: HCone,
    /// `p_{r_{k+1}} - p_{r_k}`; zero for tied neighbours.
    pub in_tree_conditions: Vec<LinearForm>,
    /// `p_r - p_{cut(r)}` per non-tree edge.
    pub cut_edge_conditions: Vec<(Ridge, LinearForm)>,
}

impl MSTCone {
    /// Number of nonzero in-tree and cut-edge inequalities.
    pub fn inequality_count(&self) -> usize {
        self.in_tree_conditions
            .iter()
            .chain(self.cut_edge_conditions.iter().map(|(_, f)| f))
            .filter(|f| !f.is_zero())
            .count()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.cone.is_full_dimensional().is_some()
    }
}

/// Per-triangulation data shared by all ordered trees: the minimized
/// secondary cone, an interior witness, and the sign-corrected edge forms.
#[derive(Clone, Debug)]
pub struct FanContext {
    config: PointConfiguration,
    tri: Triangulation,
    graph: DualGraph,
    sc: HCone,
    witness: HeightFunction,
    signed: Vec<LinearForm>,
}

impl FanContext {
    /// `h` must lie in the interior of the secondary cone; without it the
    /// LP witness is used. Fails for non-regular triangulations.
    pub fn new(config: &PointConfiguration, tri: &Triangulation, h: Option<&HeightFunction>) -> Result<Self> {
        let cand = Candidates::new(config)?;
        Self::with_candidates(&cand, tri, h)
    }

    pub fn with_candidates(cand: &Candidates, tri: &Triangulation, h: Option<&HeightFunction>) -> Result<Self> {
        let config = cand.config();
        let sc = cand.secondary_cone(tri)?.minimized();
        let witness = match h {
            Some(h) => {
                if !sc.contains_strictly(h.values()) {
                    return Err(Error::BoundaryWitness);
                }
                h.clone()
            }
            None => {
                let w = sc
                    .is_full_dimensional()
                    .ok_or_else(|| Error::InvalidArgument("triangulation is not regular".into()))?;
                HeightFunction::new(config, w)?
            }
        };
        let graph = dual_graph(tri, &witness)?;
        let signed = graph
            .edges()
            .iter()
            .map(|e| match scalar::sign(&e.form.at(&witness)) {
                0 => Err(Error::Internal("edge form vanishes inside the secondary cone".into())),
                s => Ok(e.form.scaled(&scalar::int(s as i64))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { config: config.clone(), tri: tri.clone(), graph, sc, witness, signed })
    }

    pub fn config(&self) -> &PointConfiguration {
        &self.config
    }

    pub fn triangulation(&self) -> &Triangulation {
        &self.tri
    }

    pub fn graph(&self) -> &DualGraph {
        &self.graph
    }

    pub fn secondary_cone(&self) -> &HCone {
        &self.sc
    }

    pub fn witness(&self) -> &HeightFunction {
        &self.witness
    }

    /// Sign of each edge form on the interior of the secondary cone.
    pub fn signs(&self) -> Vec<i8> {
        self.graph.edges().iter().zip(&self.signed).map(|(e, p)| if *p == e.form { 1 } else { -1 }).collect()
    }

    /// `|l_g(r)|` for heights `g` in the secondary cone, as linear forms.
    pub fn signed_forms(&self) -> &[LinearForm] {
        &self.signed
    }

    /// Lengths of all dual edges at `g`.
    pub fn weights_at(&self, g: &[Rational]) -> Vec<Rational> {
        self.graph.edges().iter().map(|e| num::Signed::abs(&e.form.eval(g))).collect()
    }

    pub fn mst_cone(&self, tree: &OrderedSpanningTree) -> Result<MSTCone> {
        let order = tree.indices(&self.graph)?;
        if order.len() + 1 != self.graph.node_count() || !is_forest(&self.graph, &order) {
            return Err(Error::InvalidArgument("not a spanning tree of the dual graph".into()));
        }
        Ok(self.cone_of_order(&order))
    }

    fn cone_of_order(&self, order: &[usize]) -> MSTCone {
        let g = &self.graph;
        let in_tree: Vec<LinearForm> = order.windows(2).map(|w| self.signed[w[1]].sub(&self.signed[w[0]])).collect();
        let ends: Vec<(usize, usize)> = order.iter().map(|&i| g.edges()[i].ends).collect();
        let cut: Vec<(Ridge, LinearForm)> = (0..g.edge_count())
            .filter(|e| !order.contains(e))
            .map(|e| {
                let k = cut_position(g.node_count(), &ends, g.edges()[e].ends).expect("spanning tree");
                (g.edges()[e].ridge.clone(), self.signed[e].sub(&self.signed[order[k - 1]]))
            })
            .collect();
        let cone = self.sc.with(in_tree.iter().cloned()).with(cut.iter().map(|(_, f)| f.clone()));
        MSTCone {
            tree: OrderedSpanningTree::from_indices(g, order),
            partition: InstabilityPartition::of_order(g, order),
            cone,
            in_tree_conditions: in_tree,
            cut_edge_conditions: cut,
        }
    }

    pub fn is_realizable(&self, tree: &OrderedSpanningTree) -> Result<bool> {
        Ok(self.mst_cone(tree)?.is_full_dimensional())
    }

    /// Spanning trees as sorted edge index lists, in lexicographic order.
    pub fn spanning_trees(&self) -> Vec<Vec<usize>> {
        let g = &self.graph;
        if g.node_count() == 0 {
            return Vec::new();
        }
        itertools::Itertools::combinations(0..g.edge_count(), g.node_count() - 1).filter(|c| is_forest(g, c)).collect()
    }

    /// Number of (spanning tree, edge order) pairs.
    pub fn ordered_tree_count(&self) -> usize {
        let m = self.graph.node_count().saturating_sub(1);
        self.spanning_trees().len() * (1..=m).product::<usize>()
    }

    /// Realizable ordered trees, by depth-first extension of edge orders. A
    /// prefix is abandoned as soon as its partial cone is lower-dimensional
    /// or it separates two tied edges.
    pub fn enumerate_realizable(&self) -> Result<Vec<MSTCone>> {
        limits::guard("ordered tree enumeration (dual graph nodes)", self.graph.node_count(), limits::MAX_DUAL_NODES)?;
        let mut out = Vec::new();
        for tree in self.spanning_trees() {
            let nontree: Vec<usize> = (0..self.graph.edge_count()).filter(|e| !tree.contains(e)).collect();
            let mut orders = Vec::new();
            self.extend(&tree, &nontree, &mut Vec::new(), &self.sc, &mut orders);
            out.extend(orders.iter().map(|o| self.cone_of_order(o)));
        }
        Ok(out)
    }

    fn extend(
        &self,
        tree: &[usize],
        nontree: &[usize],
        order: &mut Vec<usize>,
        cone: &HCone,
        out: &mut Vec<Vec<usize>>,
    ) {
        if order.len() == tree.len() {
            out.push(order.clone());
            return;
        }
        let g = &self.graph;
        let class = |e: usize| g.edges()[e].tie_class;
        for &e in tree {
            if order.contains(&e) {
                continue;
            }
            if let Some(&prev) = order.last() {
                if class(prev) != class(e) && order.iter().any(|&x| class(x) == class(e)) {
                    continue;
                }
            }
            let mut new = Vec::new();
            if let Some(&prev) = order.last() {
                new.push(self.signed[e].sub(&self.signed[prev]));
            }
            let mut before = UnionFind::new(g.node_count());
            for &x in order.iter() {
                before.union(g.edges()[x].ends.0, g.edges()[x].ends.1);
            }
            let mut after = before.clone();
            after.union(g.edges()[e].ends.0, g.edges()[e].ends.1);
            for &r in nontree {
                let (a, b) = g.edges()[r].ends;
                if !before.equiv(a, b) && after.equiv(a, b) {
                    new.push(self.signed[r].sub(&self.signed[e]));
                }
            }
            let next = cone.with(new);
            if next.constraints().len() != cone.constraints().len() && next.is_full_dimensional().is_none() {
                continue;
            }
            order.push(e);
            self.extend(tree, nontree, order, &next, out);
            order.pop();
        }
    }
}

/// Algorithm: secondary cone of `tri` cut by the in-tree and cut-edge
/// conditions of `tree`, with signs read at `h`.
pub fn mst_cone(
    config: &PointConfiguration,
    h: &HeightFunction,
    tri: &Triangulation,
    tree: &OrderedSpanningTree,
) -> Result<MSTCone> {
    FanContext::new(config, tri, Some(h))?.mst_cone(tree)
}

pub fn is_realizable(
    config: &PointConfiguration,
    h: &HeightFunction,
    tri: &Triangulation,
    tree: &OrderedSpanningTree,
) -> Result<bool> {
    Ok(mst_cone(config, h, tri, tree)?.is_full_dimensional())
}

/// Whether the greedy algorithm may output `tree` in this order for the
/// given edge weights, ties allowed.
pub fn is_possible_mst_at(g: &DualGraph, weights: &[Rational], tree: &OrderedSpanningTree) -> Result<bool> {
    if weights.len() != g.edge_count() {
        return Err(Error::InvalidArgument(format!("{} weights for {} edges", weights.len(), g.edge_count())));
    }
    let order = tree.indices(g)?;
    if order.windows(2).any(|w| weights[w[0]] > weights[w[1]]) {
        return Ok(false);
    }
    let ends: Vec<(usize, usize)> = order.iter().map(|&i| g.edges()[i].ends).collect();
    for e in (0..g.edge_count()).filter(|e| !order.contains(e)) {
        let k = cut_position(g.node_count(), &ends, g.edges()[e].ends)
            .ok_or_else(|| Error::InvalidArgument("tree does not span the graph".into()))?;
        if weights[order[k - 1]] > weights[e] {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All realizable ordered trees of one regular triangulation.
pub fn enumerate_realizable(
    config: &PointConfiguration,
    tri: &Triangulation,
    h: &HeightFunction,
) -> Result<Vec<MSTCone>> {
    FanContext::new(config, tri, Some(h))?.enumerate_realizable()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FanOptions {
    pub samples: usize,
    pub seed: u64,
}

impl Default for FanOptions {
    fn default() -> Self {
        Self { samples: 100, seed: 1 }
    }
}

/// Outcome of the fan checks on the realizable MST-cones of one secondary
/// cone.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FanReport {
    pub cones: usize,
    /// Cones counted once per distinct constraint set (orders differing only
    /// inside a tie block give the same cone).
    pub distinct_cones: usize,
    pub samples: usize,
    /// Sample points of the secondary cone lying in no MST-cone.
    pub uncovered: usize,
    /// Largest number of distinct cones whose interior contains one sample.
    pub max_interior_multiplicity: usize,
    pub face_pairs_checked: usize,
    /// Pairs of distinct cones whose intersection is not a face of both.
    pub face_violations: Vec<(usize, usize)>,
    /// Cones that are not full-dimensional.
    pub impure: Vec<usize>,
    /// Pairs on the same tree meeting in a facet, with the inversion count
    /// of the permutation relating their orders.
    pub shared_facets: Vec<(usize, usize, usize)>,
}

impl FanReport {
    pub fn violations(&self) -> usize {
        self.uncovered + self.face_violations.len() + self.impure.len()
    }
}

/// The realizable MST-cones of `tri` together with a check of the fan
/// axioms: support, purity, and face-to-face intersections.
pub fn mst_fan(
    config: &PointConfiguration,
    tri: &Triangulation,
    h: &HeightFunction,
    opts: FanOptions,
) -> Result<(Vec<MSTCone>, FanReport)> {
    let ctx = FanContext::new(config, tri, Some(h))?;
    let cones = ctx.enumerate_realizable()?;
    let report = check_fan(&ctx, &cones, opts)?;
    if report.violations() > 0 {
        return Err(Error::FanViolation(format!("{report:?}")));
    }
    Ok((cones, report))
}

pub fn check_fan(ctx: &FanContext, cones: &[MSTCone], opts: FanOptions) -> Result<FanReport> {
    let mut report = FanReport { cones: cones.len(), samples: opts.samples, ..Default::default() };
    let mut distinct: Vec<usize> = Vec::new();
    for (i, k) in cones.iter().enumerate() {
        if !k.is_full_dimensional() {
            report.impure.push(i);
        }
        if !distinct.iter().any(|&j| same_cone(&cones[j].cone, &k.cone)) {
            distinct.push(i);
        }
    }
    report.distinct_cones = distinct.len();

    let mut sampler = RationalSampler::new(opts.seed);
    for _ in 0..opts.samples {
        let g = ctx.sc.sample_interior(&mut sampler).ok_or_else(|| Error::Internal("empty secondary cone".into()))?;
        if !cones.iter().any(|k| k.cone.contains(&g)) {
            report.uncovered += 1;
        }
        let inside = distinct.iter().filter(|&&i| cones[i].cone.contains_strictly(&g)).count();
        report.max_interior_multiplicity = report.max_interior_multiplicity.max(inside);
    }

    for (a, &i) in distinct.iter().enumerate() {
        for &j in &distinct[a + 1..] {
            report.face_pairs_checked += 1;
            let (ki, kj) = (&cones[i].cone, &cones[j].cone);
            if !meets_in_face(ki, kj)? || !meets_in_face(kj, ki)? {
                report.face_violations.push((i, j));
                continue;
            }
            if let Some(p) = order_permutation_analysis(&cones[i], &cones[j])? {
                if p.codim == 1 {
                    report.shared_facets.push((i, j, p.inversions));
                }
            }
        }
    }
    Ok(report)
}

fn same_cone(a: &HCone, b: &HCone) -> bool {
    let mut x = a.constraints().to_vec();
    let mut y = b.constraints().to_vec();
    x.sort();
    y.sort();
    x == y || (a.is_subset_of(b) && b.is_subset_of(a))
}

/// Whether `k ∩ other` is a face of `k`: the smallest face of `k` containing
/// the intersection must lie inside `other`.
fn meets_in_face(k: &HCone, other: &HCone) -> Result<bool> {
    let both = k.intersect(other)?;
    let rep = both.dimension();
    let eq: Vec<LinearForm> = rep
        .implicit_equalities
        .iter()
        .filter(|&&i| i < k.constraints().len())
        .map(|&i| k.constraints()[i].clone())
        .collect();
    Ok(k.face(&eq).is_subset_of(other))
}

/// Comparison of two MST-cones on the same tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationAnalysis {
    /// `sigma[i]` is the position in the first order of the i-th range of
    /// the second.
    pub sigma: Vec<usize>,
    /// Minimum number of adjacent transpositions realizing `sigma`.
    pub inversions: usize,
    /// Codimension of the intersection of the two cones.
    pub codim: usize,
    /// Whether `inversions <= codim`.
    pub bound_holds: bool,
}

pub fn inversions(sigma: &[usize]) -> usize {
    (0..sigma.len()).map(|i| (i + 1..sigma.len()).filter(|&j| sigma[i] > sigma[j]).count()).sum()
}

/// `None` when the trees differ or their instability ranges do not
/// correspond.
pub fn order_permutation_analysis(k1: &MSTCone, k2: &MSTCone) -> Result<Option<PermutationAnalysis>> {
    if k1.tree.edge_set() != k2.tree.edge_set() {
        return Ok(None);
    }
    let blocks = |k: &MSTCone| -> Vec<BTreeSet<Ridge>> {
        k.partition.ranges().iter().map(|&(a, b)| k.tree.edges()[a - 1..b].iter().cloned().collect()).collect()
    };
    let b1 = blocks(k1);
    let b2 = blocks(k2);
    let mut sigma = Vec::with_capacity(b2.len());
    for block in &b2 {
        match b1.iter().position(|b| b == block) {
            Some(p) => sigma.push(p),
            None => return Ok(None),
        }
    }
    if sigma.len() != b1.len() {
        return Ok(None);
    }
    let both = k1.cone.intersect(&k2.cone)?;
    let codim = both.ambient() - both.dimension().dimension;
    let inv = inversions(&sigma);
    Ok(Some(PermutationAnalysis { sigma, inversions: inv, codim, bound_holds: inv <= codim }))
}

/// Counts for one configuration: triangulations, regular ones, ordered
/// spanning trees over the regular ones, and the realizable among those.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Census {
    pub triangulations: usize,
    pub regular: usize,
    pub ordered_trees: usize,
    pub realizable: usize,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CensusOptions {
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
    /// Skip the ordered-tree guard regardless of the environment.
    pub lift_guard: bool,
}

pub fn census(config: &PointConfiguration, opts: CensusOptions) -> Result<Census> {
    let run = || -> Result<Census> {
        let all = triangulate::enumerate_triangulations(config)?;
        let cand = Candidates::new(config)?;
        let contexts = all
            .par_iter()
            .filter(|t| t.regular)
            .map(|t| FanContext::with_candidates(&cand, &t.triangulation, None))
            .collect::<Result<Vec<_>>>()?;
        let ordered: usize = contexts.iter().map(|c| c.ordered_tree_count()).sum();
        if !opts.lift_guard {
            limits::guard("ordered tree census", ordered, limits::MAX_ORDERED_TREES)?;
        }
        let realizable = contexts
            .par_iter()
            .map(|c| c.enumerate_realizable().map(|v| v.len()))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .sum();
        Ok(Census { triangulations: all.len(), regular: contexts.len(), ordered_trees: ordered, realizable })
    };
    match opts.jobs {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k.max(1))
            .build()
            .map_err(|e| Error::Internal(e.to_string()))?
            .install(run),
        None => run(),
    }
}
