use std::collections::{BTreeSet, HashMap};

use num::{BigInt, Signed, Zero};
use rayon::prelude::*;

use super::{is_boundary_facet, Candidates, Triangulation};
use crate::config::PointConfiguration;
use crate::error::{Error, Result};
use crate::geometry::{self, LabelSet};
use crate::limits;
use crate::linalg;
use crate::scalar::{int, ratio, Rational};

/// A triangulation together with its regularity tag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumeratedTriangulation {
    pub triangulation: Triangulation,
    pub regular: bool,
}

struct Search<'a> {
    cand: &'a Candidates,
    masks: Vec<LabelSet>,
    volumes: Vec<BigInt>,
    /// facet mask -> (candidate, apex, side of apex)
    by_facet: HashMap<LabelSet, Vec<(usize, usize, std::cmp::Ordering)>>,
    boundary: HashMap<LabelSet, bool>,
    compatible: Vec<Vec<bool>>,
}

impl Search<'_> {
    fn run(&self, chosen: &mut Vec<usize>, volume: &BigInt, out: &mut BTreeSet<Vec<usize>>) {
        let Some((facet, owner)) = self.open_facet(chosen) else {
            if *volume == *self.cand.total_volume() {
                let mut cells = chosen.clone();
                cells.sort_unstable();
                out.insert(cells);
            }
            return;
        };
        if *volume >= *self.cand.total_volume() {
            return;
        }
        let apex = (self.masks[owner] & !facet).trailing_zeros() as usize;
        let owner_side = self.by_facet[&facet].iter().find(|e| e.0 == owner).map(|e| e.2).expect("owner");
        for &(c, a, side) in &self.by_facet[&facet] {
            if a == apex || side == owner_side || !chosen.iter().all(|&d| self.compatible[c][d]) {
                continue;
            }
            chosen.push(c);
            self.run(chosen, &(volume + &self.volumes[c]), out);
            chosen.pop();
        }
    }

    /// Smallest interior facet covered by exactly one chosen cell.
    fn open_facet(&self, chosen: &[usize]) -> Option<(LabelSet, usize)> {
        let mut count: HashMap<LabelSet, (usize, usize)> = HashMap::new();
        for &c in chosen {
            let m = self.masks[c];
            for v in geometry::indices_of(m) {
                let e = count.entry(m & !(1 << v)).or_insert((0, c));
                e.0 += 1;
            }
        }
        count.into_iter().filter(|(f, (k, _))| *k == 1 && !self.boundary[f]).map(|(f, (_, c))| (f, c)).min()
    }
}

/// All triangulations of a configuration in convex position, each tagged
/// regular iff its secondary cone is full-dimensional. Sorted by cell list.
pub fn enumerate_triangulations(config: &PointConfiguration) -> Result<Vec<EnumeratedTriangulation>> {
    limits::guard("triangulation enumeration (points)", config.len(), limits::MAX_ENUMERATION_POINTS)?;
    limits::guard("triangulation enumeration (dimension)", config.dim(), limits::MAX_ENUMERATION_DIM)?;
    super::check_convex_position(config)?;
    let cand = Candidates::new(config)?;
    let simplices = cand.simplices();
    let masks: Vec<LabelSet> = simplices.iter().map(|s| s.mask()).collect();
    let volumes: Vec<BigInt> =
        simplices.iter().map(|s| geometry::simplex_determinant(config, s.vertices()).abs()).collect();
    let mut by_facet: HashMap<LabelSet, Vec<_>> = HashMap::new();
    let mut boundary = HashMap::new();
    for (c, s) in simplices.iter().enumerate() {
        for &a in s.vertices() {
            let facet: Vec<usize> = s.vertices().iter().copied().filter(|&v| v != a).collect();
            let f = geometry::mask_of(&facet);
            boundary.entry(f).or_insert_with(|| is_boundary_facet(config, &facet));
            by_facet.entry(f).or_default().push((c, a, geometry::side(config, &facet, a)));
        }
    }
    let compatible: Vec<Vec<bool>> =
        masks.iter().map(|&s| masks.iter().map(|&t| cand.proper_pair(s, t)).collect()).collect();
    let search = Search { cand: &cand, masks, volumes, by_facet, boundary, compatible };

    let p = generic_interior_point(config)?;
    let seeds: Vec<usize> =
        (0..simplices.len()).filter(|&c| strictly_contains(config, simplices[c].vertices(), &p)).collect();
    let found: Vec<BTreeSet<Vec<usize>>> = seeds
        .par_iter()
        .map(|&s| {
            let mut out = BTreeSet::new();
            search.run(&mut vec![s], &search.volumes[s].clone(), &mut out);
            out
        })
        .collect();
    let all: BTreeSet<Vec<usize>> = found.into_iter().flatten().collect();

    let mut result: Vec<EnumeratedTriangulation> = all
        .into_par_iter()
        .map(|cells| {
            let tri = Triangulation::from_parts(config, cells.into_iter().map(|c| simplices[c].clone()).collect());
            let regular = cand.secondary_cone(&tri)?.is_full_dimensional().is_some();
            Ok(EnumeratedTriangulation { triangulation: tri, regular })
        })
        .collect::<Result<_>>()?;
    result.sort_by(|a, b| a.triangulation.cells().cmp(b.triangulation.cells()));
    Ok(result)
}

/// Barycenter pushed along a moment curve until it avoids every hyperplane
/// spanned by points of the configuration.
fn generic_interior_point(config: &PointConfiguration) -> Result<Vec<Rational>> {
    let n = config.dim();
    let len = config.len() as i64;
    let centroid: Vec<Rational> =
        (0..n).map(|k| ratio((0..config.len()).map(|i| config.point(i)[k]).sum::<i64>(), len)).collect();
    let hyperplanes: Vec<Vec<usize>> = itertools::Itertools::combinations(0..config.len(), n)
        .filter(|f| {
            let rows: Vec<Vec<Rational>> = f.iter().map(|&v| config.homogeneous(v)).collect();
            linalg::rank(&rows) == n
        })
        .collect();
    for q in [997i64, 1009, 1013, 1019, 1021, 1031] {
        let delta = ratio(1, q);
        let mut p = centroid.clone();
        let mut pow = delta.clone();
        for x in p.iter_mut() {
            *x += &pow;
            pow *= &delta;
        }
        if hyperplanes.iter().all(|f| !side_of_point(config, f, &p).is_zero()) {
            return Ok(p);
        }
    }
    Err(Error::Internal("could not place a generic interior point".into()))
}

fn side_of_point(config: &PointConfiguration, facet: &[usize], p: &[Rational]) -> Rational {
    let mut rows: Vec<Vec<Rational>> = facet.iter().map(|&v| config.homogeneous(v)).collect();
    rows.push(std::iter::once(int(1)).chain(p.iter().cloned()).collect());
    linalg::det(&rows)
}

fn strictly_contains(config: &PointConfiguration, s: &[usize], p: &[Rational]) -> bool {
    (0..s.len()).all(|skip| {
        let facet: Vec<usize> = s.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
        let a = geometry::side(config, &facet, s[skip]);
        let b = side_of_point(config, &facet, p);
        match a {
            std::cmp::Ordering::Greater => b.is_positive(),
            std::cmp::Ordering::Less => b.is_negative(),
            std::cmp::Ordering::Equal => false,
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ngon(n: i64) -> PointConfiguration {
        PointConfiguration::unlabeled((0..n).map(|i| vec![i, i * i]).collect()).unwrap()
    }

    #[test]
    fn polygon_counts_are_catalan() {
        for (n, c) in [(3, 1), (4, 2), (5, 5), (6, 14)] {
            let all = enumerate_triangulations(&ngon(n)).unwrap();
            assert_eq!(all.len(), c, "{n}-gon");
            assert!(all.iter().all(|t| t.regular));
        }
    }

    #[test]
    fn segments() {
        let a = PointConfiguration::unlabeled((0..4).map(|i| vec![i]).collect()).unwrap();
        // only the endpoints are vertices
        assert!(enumerate_triangulations(&a).is_err());
        let b = PointConfiguration::unlabeled(vec![vec![0], vec![3]]).unwrap();
        assert_eq!(enumerate_triangulations(&b).unwrap().len(), 1);
    }
}
