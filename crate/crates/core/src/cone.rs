//! Homogeneous polyhedral cones `{x in R^A : f_i(x) >= 0}` with exact LP
//! based dimension machinery, and the cones attached to triangulations and
//! ridges.

use std::collections::HashSet;

use num::{Signed, Zero};

use crate::config::{HeightFunction, PointConfiguration};
use crate::error::{Error, Result};
use crate::geometry::{self, LinearForm, Ridge, Simplex};
use crate::linalg;
use crate::lp;
use crate::sample::RationalSampler;
use crate::scalar::{self, int, Rational};
use crate::triangulate::Triangulation;

/// A cone given by `form >= 0` constraints. No constraints is the full space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HCone {
    ambient: usize,
    constraints: Vec<LinearForm>,
}

/// Result of [`HCone::dimension`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeDimensionReport {
    pub dimension: usize,
    /// Indices (into the cone's constraint list) of the implicit equalities.
    pub implicit_equalities: Vec<usize>,
    /// Present iff the cone is full-dimensional; every constraint is `>= 1` there.
    pub interior_point: Option<Vec<Rational>>,
    /// A point of the relative interior: implicit equalities vanish, every
    /// other constraint is strictly positive.
    pub relative_interior_point: Vec<Rational>,
}

impl HCone {
    pub fn full(ambient: usize) -> Self {
        Self { ambient, constraints: Vec::new() }
    }

    pub fn new(ambient: usize, forms: impl IntoIterator<Item = LinearForm>) -> Self {
        let mut c = Self::full(ambient);
        c.extend(forms);
        c
    }

    fn extend(&mut self, forms: impl IntoIterator<Item = LinearForm>) {
        let mut seen: HashSet<LinearForm> = self.constraints.iter().cloned().collect();
        for f in forms {
            assert_eq!(f.len(), self.ambient, "constraint over the wrong label set");
            let f = f.primitive();
            if f.is_zero() || seen.contains(&f) {
                continue;
            }
            seen.insert(f.clone());
            self.constraints.push(f);
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Normalized (primitive integer) constraint forms.
    pub fn constraints(&self) -> &[LinearForm] {
        &self.constraints
    }

    pub fn intersect(&self, other: &HCone) -> Result<HCone> {
        if self.ambient != other.ambient {
            return Err(Error::LabelMismatch(self.ambient, other.ambient));
        }
        let mut c = self.clone();
        c.extend(other.constraints.iter().cloned());
        Ok(c)
    }

    pub fn with(&self, forms: impl IntoIterator<Item = LinearForm>) -> HCone {
        let mut c = self.clone();
        c.extend(forms);
        c
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.constraints.iter().all(|f| !f.eval(x).is_negative())
    }

    pub fn contains_strictly(&self, x: &[Rational]) -> bool {
        self.constraints.iter().all(|f| f.eval(x).is_positive())
    }

    /// Strict feasibility of the constraint system. By homogeneity it is
    /// decided by feasibility of `{f_i >= 1}`, whose solution is returned.
    pub fn is_full_dimensional(&self) -> Option<Vec<Rational>> {
        if self.constraints.is_empty() {
            return Some(vec![Rational::zero(); self.ambient]);
        }
        // variables (x, t): f_i(x) - t >= 0, maximize t <= 1
        let n = self.ambient;
        let ge: Vec<Vec<Rational>> = self
            .constraints
            .iter()
            .map(|f| f.coefficients().iter().cloned().chain(std::iter::once(int(-1))).collect())
            .collect();
        let mut t = vec![Rational::zero(); n + 1];
        t[n] = int(1);
        let opt = homogeneous_max(&ge, &t, &t);
        if !opt.value.is_positive() {
            return None;
        }
        let scale = opt.value.recip();
        let x: Vec<Rational> = opt.point[..n].iter().map(|v| v * &scale).collect();
        debug_assert!(self.constraints.iter().all(|f| f.eval(&x) >= int(1)));
        Some(x)
    }

    pub fn dimension(&self) -> ConeDimensionReport {
        if let Some(p) = self.is_full_dimensional() {
            return ConeDimensionReport {
                dimension: self.ambient,
                implicit_equalities: Vec::new(),
                relative_interior_point: p.clone(),
                interior_point: Some(p),
            };
        }
        let k = self.constraints.len();
        let ge: Vec<Vec<Rational>> = self.constraints.iter().map(|f| f.coefficients().to_vec()).collect();
        let mut strict = vec![false; k];
        let mut relint = vec![Rational::zero(); self.ambient];
        for i in 0..k {
            if strict[i] {
                continue;
            }
            let f = self.constraints[i].coefficients();
            let opt = homogeneous_max(&ge, f, f);
            if opt.value.is_positive() {
                for (j, g) in self.constraints.iter().enumerate() {
                    if g.eval(&opt.point).is_positive() {
                        strict[j] = true;
                    }
                }
                for (r, v) in relint.iter_mut().zip(&opt.point) {
                    *r += v;
                }
            }
        }
        let implicit: Vec<usize> = (0..k).filter(|&i| !strict[i]).collect();
        let eq_rows: Vec<Vec<Rational>> = implicit.iter().map(|&i| ge[i].clone()).collect();
        let rank = linalg::rank(&eq_rows);
        ConeDimensionReport {
            dimension: self.ambient - rank,
            implicit_equalities: implicit,
            interior_point: None,
            relative_interior_point: relint,
        }
    }

    /// Same cone with every constraint implied by the others removed.
    pub fn minimized(&self) -> HCone {
        let mut kept: Vec<LinearForm> = self.constraints.clone();
        let mut i = 0;
        while i < kept.len() {
            let others: Vec<Vec<Rational>> =
                kept.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, f)| f.coefficients().to_vec()).collect();
            let neg = kept[i].neg();
            let opt = homogeneous_max(&others, neg.coefficients(), neg.coefficients());
            if opt.value.is_positive() {
                i += 1;
            } else {
                kept.remove(i);
            }
        }
        HCone { ambient: self.ambient, constraints: kept }
    }

    /// Whether `form >= 0` holds on the whole cone.
    pub fn implies(&self, form: &LinearForm) -> bool {
        let ge: Vec<Vec<Rational>> = self.constraints.iter().map(|f| f.coefficients().to_vec()).collect();
        let neg = form.neg();
        !homogeneous_max(&ge, neg.coefficients(), neg.coefficients()).value.is_positive()
    }

    pub fn is_subset_of(&self, other: &HCone) -> bool {
        other.constraints.iter().all(|g| self.implies(g))
    }

    /// The face cut out by turning the listed constraints into equalities.
    pub fn face(&self, equalities: &[LinearForm]) -> HCone {
        self.with(equalities.iter().flat_map(|f| [f.clone(), f.neg()]))
    }

    /// A pseudo-random point of the interior: a few hit-and-run steps from the
    /// LP witness along random integer directions. `None` if the cone is not
    /// full-dimensional.
    pub fn sample_interior(&self, sampler: &mut RationalSampler) -> Option<Vec<Rational>> {
        let mut x = self.is_full_dimensional()?;
        for _ in 0..3 {
            let dir = sampler.int_vector(self.ambient, 6);
            let mut lo: Option<Rational> = None;
            let mut hi: Option<Rational> = None;
            for f in &self.constraints {
                let a = f.eval(&x);
                let b = f.eval(&dir);
                if b.is_zero() {
                    continue;
                }
                let t = -(a / &b);
                if b.is_positive() {
                    if lo.as_ref().is_none_or(|l| t > *l) {
                        lo = Some(t);
                    }
                } else if hi.as_ref().is_none_or(|h| t < *h) {
                    hi = Some(t);
                }
            }
            let (lo, hi) = match (lo, hi) {
                (Some(l), Some(h)) => (l, h),
                (Some(l), None) => {
                    let span = l.abs() + int(4);
                    (l.clone(), l + span)
                }
                (None, Some(h)) => {
                    let span = h.abs() + int(4);
                    (&h - span, h)
                }
                (None, None) => (int(-4), int(4)),
            };
            let u = sampler.open_unit();
            let t = &lo + (hi - &lo) * u;
            x = x.iter().zip(&dir).map(|(a, d)| a + &t * d).collect();
        }
        debug_assert!(self.contains_strictly(&x));
        Some(x)
    }
}

/// `maximize objective(x)` subject to `ge_i(x) >= 0` and `cap(x) <= 1`,
/// solved over a column basis of the stacked system (the value set of the
/// forms only depends on those coordinates).
fn homogeneous_max(ge: &[Vec<Rational>], objective: &[Rational], cap: &[Rational]) -> lp::Optimum {
    let n = objective.len();
    let mut stacked: Vec<Vec<Rational>> = ge.to_vec();
    stacked.push(objective.to_vec());
    stacked.push(cap.to_vec());
    let (_, cols) = linalg::rref(&stacked);
    let pick = |row: &[Rational]| -> Vec<Rational> { cols.iter().map(|&c| row[c].clone()).collect() };
    let mut rows: Vec<Vec<Rational>> = ge.iter().map(|g| pick(g).into_iter().map(|v| -v).collect()).collect();
    let mut rhs = vec![Rational::zero(); rows.len()];
    rows.push(pick(cap));
    rhs.push(int(1));
    let opt = lp::maximize(&pick(objective), &rows, &rhs).expect("bounded origin-feasible program");
    let mut point = vec![Rational::zero(); n];
    for (&c, v) in cols.iter().zip(opt.point) {
        point[c] = v;
    }
    lp::Optimum { value: opt.value, point }
}

/// `H_s`: heights for which `s` is a cell, i.e. every other point lifts on or
/// below the hyperplane through the lifted `s`.
pub fn simplex_cone(config: &PointConfiguration, s: &Simplex) -> Result<HCone> {
    let forms = (0..config.len())
        .filter(|j| !s.contains(*j))
        .map(|j| geometry::folding_form(config, s, j))
        .collect::<Result<Vec<_>>>()?;
    Ok(HCone::new(config.len(), forms))
}

/// Secondary cone: intersection of `H_s` over the cells. Its interior is the
/// set of heights inducing exactly this triangulation.
pub fn secondary_cone(config: &PointConfiguration, tri: &Triangulation) -> Result<HCone> {
    cells_cone(config, tri.cells())
}

fn cells_cone<'a>(config: &PointConfiguration, cells: impl IntoIterator<Item = &'a Simplex>) -> Result<HCone> {
    let mut cone = HCone::full(config.len());
    for s in cells {
        cone = cone.intersect(&simplex_cone(config, s)?)?;
    }
    Ok(cone)
}

/// Secondary cone of a ridge graph: `H_s` over all simplices that occur as a
/// ridge endpoint.
pub fn secondary_cone_of_ridge_graph(config: &PointConfiguration, ridges: &[Ridge]) -> Result<HCone> {
    if ridges.is_empty() {
        return Err(Error::InvalidArgument("empty ridge graph".into()));
    }
    let mut cells: Vec<&Simplex> = ridges.iter().flat_map(|r| [r.left(), r.right()]).collect();
    cells.sort();
    cells.dedup();
    cells_cone(config, cells)
}

/// Sign of the edge length form of `r` on the interior of `sc_r`, read at the
/// given interior witness.
pub fn ridge_sign(config: &PointConfiguration, sc_r: &HCone, r: &Ridge, witness: &HeightFunction) -> Result<i8> {
    if !sc_r.contains_strictly(witness.values()) {
        return Err(Error::BoundaryWitness);
    }
    let v = geometry::edge_length_form(config, r)?.at(witness);
    match scalar::sign(&v) {
        0 => Err(Error::Internal("edge length vanishes inside the secondary cone".into())),
        s => Ok(s),
    }
}

/// The comparison cone `{s1 l1 >= 0, s2 l2 >= 0, s2 l2 - s1 l1 >= 0}` (the
/// region where `|l(r1)| <= |l(r2)|` with the given signs), or `None` if it
/// meets `sc_r` in lower dimension.
pub fn comparison_cone(
    config: &PointConfiguration,
    sc_r: &HCone,
    r1: &Ridge,
    sign1: i8,
    r2: &Ridge,
    sign2: i8,
) -> Result<Option<HCone>> {
    let l1 = geometry::edge_length_form(config, r1)?.scaled(&int(sign1 as i64));
    let l2 = geometry::edge_length_form(config, r2)?.scaled(&int(sign2 as i64));
    let f = HCone::new(config.len(), [l1.clone(), l2.clone(), l2.sub(&l1)]);
    if sc_r.intersect(&f)?.is_full_dimensional().is_some() {
        Ok(Some(f))
    } else {
        Ok(None)
    }
}
