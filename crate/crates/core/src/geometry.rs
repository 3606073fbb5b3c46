//! Simplices, ridges and the determinant-based linear forms on height space.
//!
//! A ridge is a pair of full-dimensional simplices sharing a facet. Its edge
//! length form is the determinant of the lifted `(n+2) x (n+2)` matrix with
//! rows `(1, v, h(v))`, expanded along the height column, so it is a linear
//! form on `R^A`. Folding forms are the same expansion for a simplex plus one
//! extra apex.

use std::cmp::Ordering;
use std::fmt;

use num::{BigInt, Integer, One, Signed, Zero};

use crate::config::{HeightFunction, PointConfiguration};
use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::{self, Rational};

/// Bitmask of point indices.
pub type LabelSet = u64;

pub fn mask_of(idx: &[usize]) -> LabelSet {
    idx.iter().fold(0, |m, &i| m | (1 << i))
}

pub fn indices_of(mask: LabelSet) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

/// A full-dimensional simplex, stored as its sorted vertex indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex {
    vertices: Vec<usize>,
}

impl Simplex {
    pub fn new(config: &PointConfiguration, mut vertices: Vec<usize>) -> Result<Self> {
        vertices.sort_unstable();
        vertices.dedup();
        if vertices.len() != config.dim() + 1 || vertices.iter().any(|&v| v >= config.len()) {
            return Err(Error::DegenerateSimplex(vertices));
        }
        if !config.affinely_independent(&vertices) {
            return Err(Error::DegenerateSimplex(vertices));
        }
        Ok(Self { vertices })
    }

    /// Caller guarantees sortedness and affine independence.
    pub(crate) fn from_sorted(vertices: Vec<usize>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Self { vertices }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn mask(&self) -> LabelSet {
        mask_of(&self.vertices)
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// Vertex list with labels, e.g. `00,10,01`.
    pub fn display(&self, config: &PointConfiguration) -> String {
        self.vertices.iter().map(|&v| config.label(v)).collect::<Vec<_>>().join(",")
    }
}

/// Two adjacent simplices in canonical orientation: `left` holds the smaller
/// of the two exposed labels.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ridge {
    left: Simplex,
    right: Simplex,
}

impl Ridge {
    pub fn new(config: &PointConfiguration, a: Simplex, b: Simplex) -> Result<Self> {
        let n = config.dim();
        if a.vertices.len() != n + 1 || b.vertices.len() != n + 1 {
            return Err(Error::MalformedRidge("simplices must have n+1 vertices".into()));
        }
        let shared = (a.mask() & b.mask()).count_ones() as usize;
        if a == b || shared != n {
            return Err(Error::MalformedRidge(format!("{:?} and {:?} do not share a facet", a.vertices, b.vertices)));
        }
        Ok(Self::canonical(a, b))
    }

    pub(crate) fn canonical(a: Simplex, b: Simplex) -> Self {
        let xa = (a.mask() & !b.mask()).trailing_zeros();
        let xb = (b.mask() & !a.mask()).trailing_zeros();
        if xa < xb {
            Self { left: a, right: b }
        } else {
            Self { left: b, right: a }
        }
    }

    pub fn left(&self) -> &Simplex {
        &self.left
    }

    pub fn right(&self) -> &Simplex {
        &self.right
    }

    /// The `n+2` labels of the bipyramid, sorted.
    pub fn union(&self) -> Vec<usize> {
        indices_of(self.left.mask() | self.right.mask())
    }

    /// The `n` labels of the common facet, sorted.
    pub fn shared(&self) -> Vec<usize> {
        indices_of(self.left.mask() & self.right.mask())
    }

    /// `(exposed vertex of left, exposed vertex of right)`.
    pub fn exposed(&self) -> (usize, usize) {
        let l = (self.left.mask() & !self.right.mask()).trailing_zeros() as usize;
        let r = (self.right.mask() & !self.left.mask()).trailing_zeros() as usize;
        (l, r)
    }
}

/// A linear form on `R^A`, stored densely in point order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearForm {
    coefficients: Vec<Rational>,
}

impl LinearForm {
    pub fn new(coefficients: Vec<Rational>) -> Self {
        Self { coefficients }
    }

    pub fn zero(len: usize) -> Self {
        Self { coefficients: vec![Rational::zero(); len] }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&v| scalar::int(v)).collect())
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn coefficient(&self, i: usize) -> &Rational {
        &self.coefficients[i]
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| !self.coefficients[i].is_zero()).collect()
    }

    /// Nonzero `(index, coefficient)` pairs.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coefficients.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(Zero::is_zero)
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        scalar::dot(&self.coefficients, x)
    }

    pub fn at(&self, h: &HeightFunction) -> Rational {
        self.eval(h.values())
    }

    pub fn scaled(&self, k: &Rational) -> Self {
        Self::new(self.coefficients.iter().map(|c| c * k).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coefficients.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(self.coefficients.iter().zip(&other.coefficients).map(|(a, b)| a - b).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(self.coefficients.iter().zip(&other.coefficients).map(|(a, b)| a + b).collect())
    }

    /// Positive multiple with coprime integer coefficients. Zero stays zero.
    pub fn primitive(&self) -> Self {
        let mut lcm = BigInt::one();
        for c in &self.coefficients {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> =
            self.coefficients.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        if g.is_zero() {
            return self.clone();
        }
        Self::new(ints.into_iter().map(|c| Rational::from_integer(c / &g)).collect())
    }

    /// Representative of `{self, -self}` whose first nonzero coefficient is
    /// positive.
    pub fn up_to_sign(&self) -> Self {
        match self.coefficients.iter().find(|c| !c.is_zero()) {
            Some(c) if c.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }

    /// Whether `self = ±other`.
    pub fn same_up_to_sign(&self, other: &Self) -> bool {
        self == other || self.coefficients.iter().zip(&other.coefficients).all(|(a, b)| *a == -b)
    }

    /// Whether `self = c * other` for some nonzero rational `c`.
    pub fn proportional(&self, other: &Self) -> bool {
        let Some(i) = self.coefficients.iter().position(|c| !c.is_zero()) else {
            return other.is_zero();
        };
        if other.coefficients[i].is_zero() {
            return false;
        }
        let k = &self.coefficients[i] / &other.coefficients[i];
        self.coefficients.iter().zip(&other.coefficients).all(|(a, b)| *a == b * &k)
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> =
            self.nonzero().map(|(i, c)| format!("{}*h{}", scalar::format_rational(c), i)).collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// The unique circuit inside a ridge, split by coefficient sign.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedCircuit {
    pub positive: Vec<usize>,
    pub negative: Vec<usize>,
}

impl SignedCircuit {
    pub fn support(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.positive.iter().chain(&self.negative).copied().collect();
        s.sort_unstable();
        s
    }

    /// Builds the signed circuit of a dependency vector; the smallest support
    /// label is put on the positive side.
    pub fn from_coefficients(c: &[Rational]) -> Self {
        let first = c.iter().find(|x| !x.is_zero());
        let flip = first.is_some_and(|x| x.is_negative());
        let mut positive = Vec::new();
        let mut negative = Vec::new();
        for (i, x) in c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            if x.is_positive() != flip {
                positive.push(i);
            } else {
                negative.push(i);
            }
        }
        Self { positive, negative }
    }

    pub fn masks(&self) -> (LabelSet, LabelSet) {
        (mask_of(&self.positive), mask_of(&self.negative))
    }
}

fn homogeneous_int(config: &PointConfiguration, i: usize) -> Vec<BigInt> {
    std::iter::once(BigInt::one()).chain(config.point(i).iter().map(|&c| BigInt::from(c))).collect()
}

/// Expands `det` of the matrix with rows `(1, v_i, h_i)` for `rows` (in the
/// given order) along the height column. Returns the coefficient of each row.
fn height_column_cofactors(config: &PointConfiguration, rows: &[usize]) -> Vec<BigInt> {
    let k = rows.len();
    let last = k - 1;
    (0..k)
        .map(|i| {
            let minor: Vec<Vec<BigInt>> =
                rows.iter().enumerate().filter(|&(r, _)| r != i).map(|(_, &v)| homogeneous_int(config, v)).collect();
            let d = linalg::det_int(&minor);
            if (i + last).is_multiple_of(2) {
                d
            } else {
                -d
            }
        })
        .collect()
}

/// The edge length form of a ridge: `h -> det` of the lifted bipyramid matrix
/// with rows in sorted label order.
pub fn edge_length_form(config: &PointConfiguration, r: &Ridge) -> Result<LinearForm> {
    validate_ridge(config, r)?;
    let rows = r.union();
    let cof = height_column_cofactors(config, &rows);
    let mut c = vec![Rational::zero(); config.len()];
    for (&v, d) in rows.iter().zip(cof) {
        c[v] = Rational::from_integer(d);
    }
    Ok(LinearForm::new(c))
}

fn validate_ridge(config: &PointConfiguration, r: &Ridge) -> Result<()> {
    let n = config.dim();
    for s in [&r.left, &r.right] {
        if s.vertices.len() != n + 1 || s.vertices.iter().any(|&v| v >= config.len()) {
            return Err(Error::MalformedRidge(format!("{:?} is not a simplex of this configuration", s.vertices)));
        }
        if !config.affinely_independent(&s.vertices) {
            return Err(Error::MalformedRidge(format!("{:?} is degenerate", s.vertices)));
        }
    }
    if (r.left.mask() & r.right.mask()).count_ones() as usize != n || r.left == r.right {
        return Err(Error::MalformedRidge("simplices do not share a facet".into()));
    }
    Ok(())
}

/// Tropical edge length `|l_h(r)|`.
pub fn tropical_edge_length(config: &PointConfiguration, h: &HeightFunction, r: &Ridge) -> Result<Rational> {
    Ok(edge_length_form(config, r)?.at(h).abs())
}

/// Signed determinant of the `(n+1) x (n+1)` matrix with rows `(1, v)` of `s`.
pub fn simplex_determinant(config: &PointConfiguration, s: &[usize]) -> BigInt {
    let m: Vec<Vec<BigInt>> = s.iter().map(|&v| homogeneous_int(config, v)).collect();
    linalg::det_int(&m)
}

/// Folding form of simplex `s` and apex `j`, normalized so that its value is
/// `>= 0` exactly when the lifted apex lies on or below the hyperplane
/// through the lifted simplex. Equals `|det(s)| * (interpolated(j) - h(j))`.
pub fn folding_form(config: &PointConfiguration, s: &Simplex, j: usize) -> Result<LinearForm> {
    if s.contains(j) {
        return Err(Error::InvalidApex { simplex: s.vertices.clone(), apex: j });
    }
    if j >= config.len() {
        return Err(Error::InvalidArgument(format!("label index {j} out of range")));
    }
    let base = simplex_determinant(config, &s.vertices);
    if base.is_zero() {
        return Err(Error::DegenerateSimplex(s.vertices.clone()));
    }
    let mut rows = s.vertices.clone();
    rows.push(j);
    let cof = height_column_cofactors(config, &rows);
    // the apex cofactor is det(s); flip so that the apex coefficient is negative
    let flip = !base.is_negative();
    let mut c = vec![Rational::zero(); config.len()];
    for (&v, d) in rows.iter().zip(cof) {
        c[v] = Rational::from_integer(if flip { -d } else { d });
    }
    Ok(LinearForm::new(c))
}

/// Signed fundamental circuit of a ridge, read off its edge length form.
pub fn fundamental_circuit(config: &PointConfiguration, r: &Ridge) -> Result<SignedCircuit> {
    let form = edge_length_form(config, r)?;
    Ok(SignedCircuit::from_coefficients(form.coefficients()))
}

/// Lattice-normalized volume of the simplex spanned by the given points,
/// measured in its own affine lattice. A single point has volume 1.
pub fn normalized_volume(config: &PointConfiguration, vertices: &[usize]) -> Result<Rational> {
    if vertices.is_empty() || !config.affinely_independent(vertices) {
        return Err(Error::DegenerateSimplex(vertices.to_vec()));
    }
    let base = config.point(vertices[0]);
    let edges: Vec<Vec<i64>> =
        vertices[1..].iter().map(|&v| config.point(v).iter().zip(base).map(|(a, b)| a - b).collect()).collect();
    Ok(Rational::from_integer(linalg::maximal_minor_gcd(&edges)))
}

/// Epistatic weight `L_h(r) * nvol(shared facet) / (nvol(left) * nvol(right))`.
pub fn epistatic_weight(config: &PointConfiguration, h: &HeightFunction, r: &Ridge) -> Result<Rational> {
    let length = tropical_edge_length(config, h, r)?;
    Ok(length * volume_factor(config, r)?)
}

/// The height-independent factor of the epistatic weight.
pub fn volume_factor(config: &PointConfiguration, r: &Ridge) -> Result<Rational> {
    let shared = normalized_volume(config, &r.shared())?;
    let l = normalized_volume(config, r.left.vertices())?;
    let rr = normalized_volume(config, r.right.vertices())?;
    Ok(shared / (l * rr))
}

/// Whether the labels form a circuit: affinely dependent, and every proper
/// subset independent.
pub fn is_circuit(config: &PointConfiguration, labels: &[usize]) -> bool {
    if labels.len() < 2 || config.affinely_independent(labels) {
        return false;
    }
    (0..labels.len()).all(|skip| {
        let sub: Vec<usize> = labels.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
        config.affinely_independent(&sub)
    })
}

/// Signs of the (unique up to scaling) affine dependency on a circuit.
pub fn circuit_signs(config: &PointConfiguration, labels: &[usize]) -> Result<SignedCircuit> {
    let mut sorted = labels.to_vec();
    sorted.sort_unstable();
    if !is_circuit(config, &sorted) {
        return Err(Error::InvalidCircuit(sorted));
    }
    // columns are the homogeneous points; the kernel is one-dimensional
    let rows: Vec<Vec<Rational>> =
        (0..=config.dim()).map(|r| sorted.iter().map(|&v| config.homogeneous(v)[r].clone()).collect()).collect();
    let k = linalg::kernel(&rows, sorted.len());
    let mut c = vec![Rational::zero(); config.len()];
    for (&v, x) in sorted.iter().zip(&k[0]) {
        c[v] = x.clone();
    }
    Ok(SignedCircuit::from_coefficients(&c))
}

/// Orientation of `p` relative to the hyperplane through the `n` facet points:
/// sign of `det[(1, f_1); ...; (1, f_n); (1, p)]`.
pub(crate) fn side(config: &PointConfiguration, facet: &[usize], p: usize) -> Ordering {
    let mut rows: Vec<Vec<BigInt>> = facet.iter().map(|&v| homogeneous_int(config, v)).collect();
    rows.push(homogeneous_int(config, p));
    linalg::det_int(&rows).cmp(&BigInt::zero())
}
