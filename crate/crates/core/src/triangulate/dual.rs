use num::{Signed, Zero};

use super::Triangulation;
use crate::config::{HeightFunction, PointConfiguration};
use crate::error::{Error, Result};
use crate::geometry::{self, LinearForm, Ridge, Simplex};
use crate::linalg;
use crate::scalar::{int, Rational};

/// One edge of the dual graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualEdge {
    pub ridge: Ridge,
    /// Node indices of `ridge.left()` and `ridge.right()`.
    pub ends: (usize, usize),
    pub form: LinearForm,
    /// `|form(h)|` for the defining heights.
    pub length: Rational,
    /// Index of the edge's tie class: edges share a class iff their forms
    /// agree up to sign. Classes are numbered by first occurrence.
    pub tie_class: usize,
}

/// Cells as nodes, ridges as edges (sorted canonically).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualGraph {
    cells: Vec<Simplex>,
    edges: Vec<DualEdge>,
}

impl DualGraph {
    pub fn cells(&self) -> &[Simplex] {
        &self.cells
    }

    pub fn edges(&self) -> &[DualEdge] {
        &self.edges
    }

    pub fn node_count(&self) -> usize {
        self.cells.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn node_of(&self, s: &Simplex) -> Option<usize> {
        self.cells.binary_search(s).ok()
    }

    pub fn edge_index(&self, r: &Ridge) -> Option<usize> {
        self.edges.binary_search_by(|e| e.ridge.cmp(r)).ok()
    }

    pub fn degree(&self, node: usize) -> usize {
        self.edges.iter().filter(|e| e.ends.0 == node || e.ends.1 == node).count()
    }

    pub fn lengths(&self) -> Vec<Rational> {
        self.edges.iter().map(|e| e.length.clone()).collect()
    }

    pub fn tie_classes(&self) -> Vec<usize> {
        self.edges.iter().map(|e| e.tie_class).collect()
    }

    pub fn is_connected(&self) -> bool {
        let mut uf = petgraph::unionfind::UnionFind::new(self.cells.len());
        for e in &self.edges {
            uf.union(e.ends.0, e.ends.1);
        }
        (1..self.cells.len()).all(|i| uf.equiv(0, i))
    }

    /// The same graph with lengths re-evaluated at other heights.
    pub fn at_heights(&self, h: &HeightFunction) -> Self {
        let mut g = self.clone();
        for e in &mut g.edges {
            e.length = e.form.at(h).abs();
        }
        g
    }
}

/// Dual graph of `tri` with edge lengths at `h`.
pub fn dual_graph(tri: &Triangulation, h: &HeightFunction) -> Result<DualGraph> {
    let config = tri.config();
    if h.values().len() != config.len() {
        return Err(Error::HeightMismatch(format!("{} heights for {} points", h.values().len(), config.len())));
    }
    let cells = tri.cells().to_vec();
    let mut reps: Vec<LinearForm> = Vec::new();
    let mut edges = Vec::new();
    for ridge in tri.ridges() {
        let form = geometry::edge_length_form(config, &ridge)?;
        let key = form.up_to_sign();
        let tie_class = match reps.iter().position(|f| *f == key) {
            Some(c) => c,
            None => {
                reps.push(key);
                reps.len() - 1
            }
        };
        let ends = (
            cells.binary_search(ridge.left()).expect("ridge cell"),
            cells.binary_search(ridge.right()).expect("ridge cell"),
        );
        edges.push(DualEdge { length: form.at(h).abs(), ridge, ends, form, tie_class });
    }
    Ok(DualGraph { cells, edges })
}

/// The vertex of the tropical hypersurface dual to `cell`: the unique `x`
/// with `h(v) + <v, x>` equal on all vertices of the cell. Every other point
/// attains at most that value there.
pub fn dual_vertex_position(tri: &Triangulation, h: &HeightFunction, cell: &Simplex) -> Result<Vec<Rational>> {
    let config = tri.config();
    if !tri.contains(cell) {
        return Err(Error::InvalidArgument(format!("{} is not a cell", cell.display(config))));
    }
    let x = solve_dual_vertex(config, h, cell)?;
    let value = |p: usize| -> Rational {
        h.get(p) + config.point(p).iter().zip(&x).map(|(&c, xi)| int(c) * xi).sum::<Rational>()
    };
    let top = value(cell.vertices()[0]);
    if (0..config.len()).any(|p| value(p) > top) {
        return Err(Error::Internal(format!("dual vertex of {} is not maximal", cell.display(config))));
    }
    Ok(x)
}

fn solve_dual_vertex(config: &PointConfiguration, h: &HeightFunction, cell: &Simplex) -> Result<Vec<Rational>> {
    let v = cell.vertices();
    let p0 = config.point(v[0]);
    let a: Vec<Vec<Rational>> =
        v[1..].iter().map(|&i| config.point(i).iter().zip(p0).map(|(a, b)| int(a - b)).collect()).collect();
    let b: Vec<Rational> = v[1..].iter().map(|&i| h.get(v[0]) - h.get(i)).collect();
    linalg::solve(&a, &b).ok_or_else(|| Error::Internal("singular dual vertex system".into()))
}

/// Squared euclidean distance between the dual vertices of a ridge next to
/// its tropical edge length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceRecord {
    pub ridge: Ridge,
    pub squared_distance: Rational,
    pub length: Rational,
    /// `squared_distance / length^2`, absent for zero length.
    pub ratio: Option<Rational>,
}

pub fn distance_report(tri: &Triangulation, h: &HeightFunction) -> Result<Vec<DistanceRecord>> {
    let config = tri.config();
    tri.ridges()
        .into_iter()
        .map(|ridge| {
            let xs = dual_vertex_position(tri, h, ridge.left())?;
            let xt = dual_vertex_position(tri, h, ridge.right())?;
            let squared_distance: Rational = xs.iter().zip(&xt).map(|(a, b)| (a - b) * (a - b)).sum();
            let length = geometry::tropical_edge_length(config, h, &ridge)?;
            let ratio = (!length.is_zero()).then(|| &squared_distance / (&length * &length));
            Ok(DistanceRecord { ridge, squared_distance, length, ratio })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangulate::regular_triangulation;

    fn seg4() -> (PointConfiguration, HeightFunction) {
        let a = PointConfiguration::unlabeled((0..4).map(|i| vec![i]).collect()).unwrap();
        let h = HeightFunction::from_ints(&a, &[0, 2, 3, 0]).unwrap();
        (a, h)
    }

    #[test]
    fn path_graph() {
        let (a, h) = seg4();
        let t = regular_triangulation(&a, &h).unwrap();
        let g = dual_graph(&t, &h).unwrap();
        assert_eq!(g.node_count(), 3);
        assert_eq!(g.lengths(), vec![int(1), int(4)]);
        assert!(g.is_connected());
        assert_eq!(g.tie_classes(), vec![0, 1]);
        for (i, s) in g.cells().iter().enumerate() {
            assert_eq!(g.degree(i), t.interior_facet_count(s));
        }
    }

    #[test]
    fn dual_vertices_on_three_points() {
        let a = PointConfiguration::unlabeled((0..3).map(|i| vec![i]).collect()).unwrap();
        let h = HeightFunction::from_ints(&a, &[0, 1, 0]).unwrap();
        let t = regular_triangulation(&a, &h).unwrap();
        let x01 = dual_vertex_position(&t, &h, &t.cells()[0]).unwrap();
        let x12 = dual_vertex_position(&t, &h, &t.cells()[1]).unwrap();
        // h0 = h1 + x and h1 + x = h2 + 2x
        assert_eq!(x01, vec![int(-1)]);
        assert_eq!(x12, vec![int(1)]);
        let rep = distance_report(&t, &h).unwrap();
        assert_eq!(rep[0].squared_distance, int(4));
        assert_eq!(rep[0].ratio, Some(int(1)));
    }

    #[test]
    fn zero_heights_give_origin() {
        let sq = PointConfiguration::unlabeled(vec![vec![0, 0], vec![1, 0], vec![0, 1]]).unwrap();
        let h = HeightFunction::from_ints(&sq, &[0, 0, 0]).unwrap();
        let t = regular_triangulation(&sq, &h).unwrap();
        assert_eq!(dual_vertex_position(&t, &h, &t.cells()[0]).unwrap(), vec![int(0), int(0)]);
    }
}
