//! Labeled lattice point configurations and height functions on them.

use std::collections::{BTreeMap, HashSet};

use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::{int, Rational};

/// A finite set of distinct points in `Z^n` that affinely spans `R^n`.
///
/// Points are addressed by their index; labels are display names only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointConfiguration {
    dim: usize,
    points: Vec<Vec<i64>>,
    labels: Vec<String>,
}

impl PointConfiguration {
    pub fn new(points: Vec<Vec<i64>>, labels: Vec<String>) -> Result<Self> {
        let dim = points.first().map_or(0, Vec::len);
        if dim == 0 {
            return Err(Error::InvalidConfiguration("empty configuration or zero dimension".into()));
        }
        if points.len() > 64 {
            return Err(Error::InvalidConfiguration(format!("{} points; at most 64 are supported", points.len())));
        }
        if let Some(p) = points.iter().find(|p| p.len() != dim) {
            return Err(Error::InvalidConfiguration(format!("point {p:?} is not in dimension {dim}")));
        }
        if labels.len() != points.len() {
            return Err(Error::InvalidConfiguration(format!("{} labels for {} points", labels.len(), points.len())));
        }
        let mut seen = HashSet::new();
        if let Some(p) = points.iter().find(|p| !seen.insert(p.to_vec())) {
            return Err(Error::InvalidConfiguration(format!("duplicate point {p:?}")));
        }
        let mut seen = HashSet::new();
        if let Some(l) = labels.iter().find(|l| !seen.insert(l.as_str())) {
            return Err(Error::InvalidConfiguration(format!("duplicate label {l:?}")));
        }
        if points.len() < dim + 1 {
            return Err(Error::InvalidConfiguration(format!("{} points cannot span R^{dim}", points.len())));
        }
        let config = Self { dim, points, labels };
        let rows: Vec<Vec<Rational>> = (0..config.len()).map(|i| config.homogeneous(i)).collect();
        if linalg::rank(&rows) != dim + 1 {
            return Err(Error::InvalidConfiguration("points do not affinely span the ambient space".into()));
        }
        Ok(config)
    }

    /// Configuration labeled `"0"`, `"1"`, ... by index.
    pub fn unlabeled(points: Vec<Vec<i64>>) -> Result<Self> {
        let labels = (0..points.len()).map(|i| i.to_string()).collect();
        Self::new(points, labels)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, i: usize) -> &[i64] {
        &self.points[i]
    }

    pub fn points(&self) -> &[Vec<i64>] {
        &self.points
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// The row `(1, v_i)` as rationals.
    pub fn homogeneous(&self, i: usize) -> Vec<Rational> {
        std::iter::once(int(1)).chain(self.points[i].iter().map(|&c| int(c))).collect()
    }

    /// Whether the points with the given indices are affinely independent.
    pub fn affinely_independent(&self, idx: &[usize]) -> bool {
        if idx.len() > self.dim + 1 {
            return false;
        }
        let rows: Vec<Vec<Rational>> = idx.iter().map(|&i| self.homogeneous(i)).collect();
        linalg::rank(&rows) == idx.len()
    }
}

/// A lift `h: A -> Q`, stored densely in point order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HeightFunction {
    values: Vec<Rational>,
}

impl HeightFunction {
    pub fn new(config: &PointConfiguration, values: Vec<Rational>) -> Result<Self> {
        if values.len() != config.len() {
            return Err(Error::HeightMismatch(format!("{} heights for {} points", values.len(), config.len())));
        }
        Ok(Self { values })
    }

    pub fn from_labels(config: &PointConfiguration, values: &BTreeMap<String, Rational>) -> Result<Self> {
        if values.len() != config.len() {
            return Err(Error::HeightMismatch(format!("{} heights for {} labels", values.len(), config.len())));
        }
        let values = config
            .labels()
            .iter()
            .map(|l| values.get(l).cloned().ok_or_else(|| Error::HeightMismatch(format!("no height for label {l:?}"))))
            .collect::<Result<_>>()?;
        Ok(Self { values })
    }

    pub fn from_ints(config: &PointConfiguration, values: &[i64]) -> Result<Self> {
        Self::new(config, values.iter().map(|&v| int(v)).collect())
    }

    pub fn get(&self, i: usize) -> &Rational {
        &self.values[i]
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Rational> {
        self.values
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_configurations() {
        assert!(PointConfiguration::unlabeled(vec![vec![0], vec![0]]).is_err());
        assert!(PointConfiguration::unlabeled(vec![vec![0, 0], vec![1, 1], vec![2, 2]]).is_err());
        assert!(PointConfiguration::unlabeled(vec![vec![0, 0], vec![1, 0]]).is_err());
        assert!(PointConfiguration::new(vec![vec![0], vec![1]], vec!["a".into(), "a".into()]).is_err());
        let c = PointConfiguration::unlabeled(vec![vec![0], vec![1], vec![2]]).unwrap();
        assert_eq!(c.dim(), 1);
        assert!(c.affinely_independent(&[0, 2]));
        assert!(!c.affinely_independent(&[0, 1, 2]));
    }

    #[test]
    fn heights_by_label() {
        let c = PointConfiguration::new(vec![vec![0], vec![1]], vec!["a".into(), "b".into()]).unwrap();
        let mut m = BTreeMap::new();
        m.insert("b".to_string(), int(3));
        m.insert("a".to_string(), int(1));
        let h = HeightFunction::from_labels(&c, &m).unwrap();
        assert_eq!(h.values(), &[int(1), int(3)]);
        assert!(HeightFunction::from_ints(&c, &[1]).is_err());
    }
}
