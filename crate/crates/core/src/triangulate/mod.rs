//! Regular triangulations of lifted configurations, their dual graphs, and
//! exhaustive enumeration of all triangulations of small configurations.

mod dual;
mod enumerate;

use std::collections::HashMap;

use num::{BigInt, Signed, Zero};

use crate::cone::HCone;
use crate::config::{HeightFunction, PointConfiguration};
use crate::error::{Error, Result};
use crate::geometry::{self, LabelSet, LinearForm, Ridge, Simplex};
use crate::sample::RationalSampler;
use crate::scalar::{self, int};

pub use dual::{distance_report, dual_graph, dual_vertex_position, DistanceRecord, DualEdge, DualGraph};
pub use enumerate::{enumerate_triangulations, EnumeratedTriangulation};

/// A triangulation of a configuration in convex position, as its sorted
/// list of maximal cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangulation {
    config: PointConfiguration,
    cells: Vec<Simplex>,
}

impl Triangulation {
    /// Validates the cells: pairwise proper intersection, full coverage of
    /// the convex hull, and every point used.
    pub fn new(config: &PointConfiguration, mut cells: Vec<Simplex>) -> Result<Self> {
        cells.sort();
        cells.dedup();
        for s in &cells {
            Simplex::new(config, s.vertices().to_vec())?;
        }
        let cand = Candidates::new(config)?;
        let used = cells.iter().fold(0, |m: LabelSet, s| m | s.mask());
        if used.count_ones() as usize != config.len() {
            return Err(Error::InvalidArgument("some point is not a vertex of any cell".into()));
        }
        for (i, s) in cells.iter().enumerate() {
            for t in &cells[i + 1..] {
                if !cand.proper_pair(s.mask(), t.mask()) {
                    return Err(Error::InvalidArgument(format!(
                        "cells {} and {} overlap",
                        s.display(config),
                        t.display(config)
                    )));
                }
            }
        }
        let vol: BigInt = cells.iter().map(|s| geometry::simplex_determinant(config, s.vertices()).abs()).sum();
        if vol != cand.total_volume {
            return Err(Error::InvalidArgument(format!("cells cover volume {vol} of {}", cand.total_volume)));
        }
        Ok(Self { config: config.clone(), cells })
    }

    pub(crate) fn from_parts(config: &PointConfiguration, mut cells: Vec<Simplex>) -> Self {
        cells.sort();
        Self { config: config.clone(), cells }
    }

    pub fn config(&self) -> &PointConfiguration {
        &self.config
    }

    pub fn cells(&self) -> &[Simplex] {
        &self.cells
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.cells.binary_search(s).is_ok()
    }

    /// All pairs of cells sharing a facet, in canonical order.
    pub fn ridges(&self) -> Vec<Ridge> {
        let n = self.config.dim();
        let mut by_facet: HashMap<LabelSet, Vec<usize>> = HashMap::new();
        for (i, s) in self.cells.iter().enumerate() {
            for &v in s.vertices() {
                by_facet.entry(s.mask() & !(1 << v)).or_default().push(i);
            }
        }
        let mut out: Vec<Ridge> = by_facet
            .values()
            .filter(|c| c.len() == 2)
            .map(|c| Ridge::canonical(self.cells[c[0]].clone(), self.cells[c[1]].clone()))
            .collect();
        debug_assert!(out.iter().all(|r| r.shared().len() == n));
        out.sort();
        out
    }

    /// Number of facets of `s` that are not on the boundary of the hull.
    pub fn interior_facet_count(&self, s: &Simplex) -> usize {
        s.vertices()
            .iter()
            .filter(|&&v| {
                let facet: Vec<usize> = s.vertices().iter().copied().filter(|&u| u != v).collect();
                !is_boundary_facet(&self.config, &facet)
            })
            .count()
    }
}

fn is_boundary_facet(config: &PointConfiguration, facet: &[usize]) -> bool {
    let mut seen = std::cmp::Ordering::Equal;
    for p in 0..config.len() {
        let o = geometry::side(config, facet, p);
        if o.is_eq() {
            continue;
        }
        if seen.is_eq() {
            seen = o;
        } else if o != seen {
            return false;
        }
    }
    true
}

/// Why a height function fails to be generic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GenericityWitness {
    /// A candidate simplex is a face of the upper hull but some other lifted
    /// point lies on its hyperplane.
    VanishingFold { simplex: Simplex, apex: usize },
    /// A ridge of the triangulation has length zero.
    ZeroLength(Ridge),
    /// Two ridges with different forms have the same length.
    UnforcedTie(Ridge, Ridge),
}

/// Outcome of [`is_generic`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericityCheck {
    pub generic: bool,
    pub witness: Option<GenericityWitness>,
}

/// All affinely independent `(n+1)`-subsets with their folding forms and
/// the signed circuits of the configuration, computed once per
/// configuration.
#[derive(Clone, Debug)]
pub struct Candidates {
    config: PointConfiguration,
    simplices: Vec<Simplex>,
    /// `folds[i]` lists `(apex, form)` for every point outside simplex `i`.
    folds: Vec<Vec<(usize, LinearForm)>>,
    circuits: Vec<(LabelSet, LabelSet)>,
    total_volume: BigInt,
}

impl Candidates {
    pub fn new(config: &PointConfiguration) -> Result<Self> {
        let n = config.dim();
        let mut simplices = Vec::new();
        let mut folds = Vec::new();
        for combo in itertools::Itertools::combinations(0..config.len(), n + 1) {
            if geometry::simplex_determinant(config, &combo).is_zero() {
                continue;
            }
            let s = Simplex::from_sorted(combo);
            let f = (0..config.len())
                .filter(|j| !s.contains(*j))
                .map(|j| Ok((j, geometry::folding_form(config, &s, j)?)))
                .collect::<Result<Vec<_>>>()?;
            simplices.push(s);
            folds.push(f);
        }
        let mut circuits = Vec::new();
        for k in 2..=n + 2 {
            for combo in itertools::Itertools::combinations(0..config.len(), k) {
                if geometry::is_circuit(config, &combo) {
                    let c = geometry::circuit_signs(config, &combo)?;
                    circuits.push(c.masks());
                }
            }
        }
        let mut cand = Self { config: config.clone(), simplices, folds, circuits, total_volume: BigInt::zero() };
        cand.total_volume = cand.hull_volume()?;
        Ok(cand)
    }

    pub fn config(&self) -> &PointConfiguration {
        &self.config
    }

    pub fn simplices(&self) -> &[Simplex] {
        &self.simplices
    }

    /// Normalized volume of the convex hull.
    pub fn total_volume(&self) -> &BigInt {
        &self.total_volume
    }

    /// Signed circuits as `(positive, negative)` masks.
    pub fn circuits(&self) -> &[(LabelSet, LabelSet)] {
        &self.circuits
    }

    /// Two simplices meet in a common face iff no circuit has its positive
    /// part in one and its negative part in the other.
    pub(crate) fn proper_pair(&self, s: LabelSet, t: LabelSet) -> bool {
        self.circuits.iter().all(|&(p, q)| !((p & !s == 0 && q & !t == 0) || (q & !s == 0 && p & !t == 0)))
    }

    fn hull_volume(&self) -> Result<BigInt> {
        let mut sampler = RationalSampler::new(0x5eed);
        for _ in 0..64 {
            let h = HeightFunction::new(&self.config, sampler.int_vector(self.config.len(), 1 << 20))?;
            if let Ok(cells) = self.upper_cells(&h) {
                return Ok(cells
                    .iter()
                    .map(|&i| geometry::simplex_determinant(&self.config, self.simplices[i].vertices()).abs())
                    .sum());
            }
        }
        Err(Error::Internal("no generic height found for the hull volume".into()))
    }

    /// Indices of the candidates whose folding forms are all positive at `h`.
    fn upper_cells(&self, h: &HeightFunction) -> Result<Vec<usize>> {
        let mut cells = Vec::new();
        for (i, f) in self.folds.iter().enumerate() {
            let mut zero = None;
            let mut ok = true;
            for (j, form) in f {
                match scalar::sign(&form.at(h)) {
                    -1 => {
                        ok = false;
                        break;
                    }
                    0 if zero.is_none() => zero = Some(*j),
                    _ => {}
                }
            }
            if !ok {
                continue;
            }
            if let Some(j) = zero {
                return Err(Error::NonGeneric(format!(
                    "point {} lies on the lifted hyperplane of {}",
                    self.config.label(j),
                    self.simplices[i].display(&self.config)
                )));
            }
            cells.push(i);
        }
        Ok(cells)
    }

    fn vanishing_fold(&self, h: &HeightFunction) -> Option<GenericityWitness> {
        for (i, f) in self.folds.iter().enumerate() {
            let vals: Vec<i8> = f.iter().map(|(_, form)| scalar::sign(&form.at(h))).collect();
            if vals.iter().all(|&s| s >= 0) {
                if let Some(k) = vals.iter().position(|&s| s == 0) {
                    return Some(GenericityWitness::VanishingFold { simplex: self.simplices[i].clone(), apex: f[k].0 });
                }
            }
        }
        None
    }

    /// The regular triangulation induced by `h` (upper hull convention).
    pub fn regular_triangulation(&self, h: &HeightFunction) -> Result<Triangulation> {
        check_heights(&self.config, h)?;
        let cells: Vec<Simplex> = self.upper_cells(h)?.into_iter().map(|i| self.simplices[i].clone()).collect();
        let vol: BigInt = cells.iter().map(|s| geometry::simplex_determinant(&self.config, s.vertices()).abs()).sum();
        if vol != self.total_volume {
            return Err(Error::Internal(format!("upper cells cover volume {vol} of {}", self.total_volume)));
        }
        let used = cells.iter().fold(0, |m: LabelSet, s| m | s.mask());
        if let Some(p) = (0..self.config.len()).find(|&p| used >> p & 1 == 0) {
            return Err(Error::InvalidArgument(format!(
                "point {} lies below the upper hull and is not a vertex of any cell",
                self.config.label(p)
            )));
        }
        Ok(Triangulation::from_parts(&self.config, cells))
    }

    pub fn is_generic(&self, h: &HeightFunction) -> Result<GenericityCheck> {
        check_heights(&self.config, h)?;
        let fail = |w| Ok(GenericityCheck { generic: false, witness: Some(w) });
        if let Some(w) = self.vanishing_fold(h) {
            return fail(w);
        }
        let tri = self.regular_triangulation(h)?;
        let ridges = tri.ridges();
        let forms = ridges.iter().map(|r| geometry::edge_length_form(&self.config, r)).collect::<Result<Vec<_>>>()?;
        let lengths: Vec<_> = forms.iter().map(|f| f.at(h).abs()).collect();
        for (r, l) in ridges.iter().zip(&lengths) {
            if l.is_zero() {
                return fail(GenericityWitness::ZeroLength(r.clone()));
            }
        }
        for i in 0..ridges.len() {
            for j in i + 1..ridges.len() {
                if lengths[i] == lengths[j] && !forms[i].same_up_to_sign(&forms[j]) {
                    return fail(GenericityWitness::UnforcedTie(ridges[i].clone(), ridges[j].clone()));
                }
            }
        }
        Ok(GenericityCheck { generic: true, witness: None })
    }

    /// `H_s` for candidate `s`, reusing the cached folding forms.
    pub(crate) fn simplex_cone(&self, s: &Simplex) -> Option<HCone> {
        let i = self.simplices.binary_search(s).ok()?;
        Some(HCone::new(self.config.len(), self.folds[i].iter().map(|(_, f)| f.clone())))
    }

    pub fn secondary_cone(&self, tri: &Triangulation) -> Result<HCone> {
        let mut cone = HCone::full(self.config.len());
        for s in tri.cells() {
            let h = self.simplex_cone(s).ok_or_else(|| {
                Error::InvalidArgument(format!("{} is not a simplex of this configuration", s.display(&self.config)))
            })?;
            cone = cone.intersect(&h)?;
        }
        Ok(cone)
    }
}

fn check_heights(config: &PointConfiguration, h: &HeightFunction) -> Result<()> {
    if h.values().len() != config.len() {
        return Err(Error::HeightMismatch(format!("{} heights for {} points", h.values().len(), config.len())));
    }
    Ok(())
}

/// Every point must be a vertex of the convex hull: some linear functional
/// is strictly maximized at it alone.
pub fn check_convex_position(config: &PointConfiguration) -> Result<()> {
    for j in 0..config.len() {
        let forms = (0..config.len())
            .filter(|&i| i != j)
            .map(|i| LinearForm::new(config.point(j).iter().zip(config.point(i)).map(|(a, b)| int(a - b)).collect()));
        if HCone::new(config.dim(), forms).is_full_dimensional().is_none() {
            return Err(Error::NotConvexPosition(config.label(j).to_string()));
        }
    }
    Ok(())
}

/// Regular triangulation of `(A, h)`; refuses non-generic heights.
pub fn regular_triangulation(config: &PointConfiguration, h: &HeightFunction) -> Result<Triangulation> {
    Candidates::new(config)?.regular_triangulation(h)
}

pub fn is_generic(config: &PointConfiguration, h: &HeightFunction) -> Result<GenericityCheck> {
    Candidates::new(config)?.is_generic(h)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> PointConfiguration {
        PointConfiguration::new(
            vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]],
            ["00", "10", "01", "11"].map(String::from).to_vec(),
        )
        .unwrap()
    }

    fn line(n: i64) -> PointConfiguration {
        PointConfiguration::unlabeled((0..n).map(|i| vec![i]).collect()).unwrap()
    }

    fn cells(t: &Triangulation) -> Vec<Vec<usize>> {
        t.cells().iter().map(|s| s.vertices().to_vec()).collect()
    }

    #[test]
    fn segment_and_square() {
        let a = line(3);
        let t = regular_triangulation(&a, &HeightFunction::from_ints(&a, &[0, 1, 0]).unwrap()).unwrap();
        assert_eq!(cells(&t), vec![vec![0, 1], vec![1, 2]]);
        let sq = square();
        let t = regular_triangulation(&sq, &HeightFunction::from_ints(&sq, &[0, 0, 0, -1]).unwrap()).unwrap();
        assert_eq!(cells(&t), vec![vec![0, 1, 2], vec![1, 2, 3]]);
        let err = regular_triangulation(&sq, &HeightFunction::from_ints(&sq, &[0, 0, 0, 0]).unwrap());
        assert!(matches!(err, Err(Error::NonGeneric(_))));
    }

    #[test]
    fn genericity() {
        let a = line(3);
        assert!(is_generic(&a, &HeightFunction::from_ints(&a, &[0, 1, 0]).unwrap()).unwrap().generic);
        let sq = square();
        let c = is_generic(&sq, &HeightFunction::from_ints(&sq, &[0; 4]).unwrap()).unwrap();
        assert!(matches!(c.witness, Some(GenericityWitness::VanishingFold { .. })));
        let seg4 = line(4);
        assert!(is_generic(&seg4, &HeightFunction::from_ints(&seg4, &[0, 2, 3, 0]).unwrap()).unwrap().generic);
        // two interior points tie at length 2 with different circuits
        let c = is_generic(&seg4, &HeightFunction::from_ints(&seg4, &[0, 2, 2, 0]).unwrap()).unwrap();
        assert!(matches!(c.witness, Some(GenericityWitness::UnforcedTie(..))));
    }

    #[test]
    fn convex_position_is_required() {
        let a = PointConfiguration::unlabeled(vec![vec![0, 0], vec![2, 0], vec![0, 2], vec![1, 1]]).unwrap();
        assert!(matches!(check_convex_position(&a), Err(Error::NotConvexPosition(_))));
        let h = HeightFunction::from_ints(&a, &[0, 0, 0, -5]).unwrap();
        assert!(regular_triangulation(&a, &h).is_err());
        let b = PointConfiguration::unlabeled(vec![vec![0, 0], vec![2, 0], vec![0, 2], vec![1, 0]]).unwrap();
        assert!(check_convex_position(&b).is_err());
        assert!(check_convex_position(&square()).is_ok());
    }

    #[test]
    fn validation_rejects_overlaps_and_gaps() {
        let sq = square();
        let s = |v: Vec<usize>| Simplex::new(&sq, v).unwrap();
        assert!(Triangulation::new(&sq, vec![s(vec![0, 1, 2]), s(vec![1, 2, 3])]).is_ok());
        assert!(Triangulation::new(&sq, vec![s(vec![0, 1, 2]), s(vec![0, 1, 3])]).is_err());
        assert!(Triangulation::new(&sq, vec![s(vec![0, 1, 2])]).is_err());
    }

    #[test]
    fn ridges_and_degrees() {
        let a = line(4);
        let t = regular_triangulation(&a, &HeightFunction::from_ints(&a, &[0, 2, 3, 0]).unwrap()).unwrap();
        assert_eq!(t.ridges().len(), 2);
        let degrees: Vec<usize> = t.cells().iter().map(|s| t.interior_facet_count(s)).collect();
        assert_eq!(degrees, vec![1, 2, 1]);
    }

    #[test]
    fn square_secondary_cone_has_one_essential_facet() {
        let sq = square();
        let cand = Candidates::new(&sq).unwrap();
        let t = cand.regular_triangulation(&HeightFunction::from_ints(&sq, &[0, 0, 0, -1]).unwrap()).unwrap();
        let sc = cand.secondary_cone(&t).unwrap().minimized();
        assert_eq!(sc.constraints(), &[LinearForm::from_ints(&[-1, 1, 1, -1])]);
    }
}
