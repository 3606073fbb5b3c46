//! Built-in point configurations: moment-curve polygons, cubes, prisms over
//! polygons and cross polytopes.

use std::fmt;
use std::str::FromStr;

use crate::config::{HeightFunction, PointConfiguration};
use crate::error::{Error, Result};
use crate::limits;
use crate::sample::RationalSampler;
use crate::triangulate::Candidates;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    Ngon(usize),
    Cube(usize),
    Prism(usize),
    Crosspoly(usize),
}

impl Generator {
    pub fn build(self) -> Result<PointConfiguration> {
        match self {
            Generator::Ngon(n) => ngon(n),
            Generator::Cube(n) => cube(n),
            Generator::Prism(n) => prism(n),
            Generator::Crosspoly(n) => crosspoly(n),
        }
    }

    fn name(self) -> (&'static str, usize) {
        match self {
            Generator::Ngon(n) => ("ngon", n),
            Generator::Cube(n) => ("cube", n),
            Generator::Prism(n) => ("prism", n),
            Generator::Crosspoly(n) => ("crosspoly", n),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (name, n) = self.name();
        write!(f, "{name}:{n}")
    }
}

/// Accepts `ngon:5`, `ngon5` and `ngon 5`.
impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let split =
            s.find(|c: char| c.is_ascii_digit()).ok_or_else(|| Error::Parse(format!("generator {s:?} has no size")))?;
        let name = s[..split].trim_end_matches([':', ' ']);
        let n: usize = s[split..].parse().map_err(|_| Error::Parse(format!("bad generator size in {s:?}")))?;
        match name {
            "ngon" => Ok(Generator::Ngon(n)),
            "cube" => Ok(Generator::Cube(n)),
            "prism" => Ok(Generator::Prism(n)),
            "crosspoly" => Ok(Generator::Crosspoly(n)),
            _ => Err(Error::Parse(format!("unknown generator {name:?}"))),
        }
    }
}

fn check_size(n: usize, min: usize, what: &str) -> Result<()> {
    if n < min {
        return Err(Error::InvalidArgument(format!("{what} needs n >= {min}")));
    }
    limits::guard(what, n, limits::MAX_GENERATOR_SIZE)
}

/// Points `(i, i^2)` for `i = 0..n`.
pub fn ngon(n: usize) -> Result<PointConfiguration> {
    check_size(n, 3, "ngon")?;
    let points = (0..n as i64).map(|i| vec![i, i * i]).collect();
    PointConfiguration::new(points, (0..n).map(|i| i.to_string()).collect())
}

/// `{0,1}^n`, first coordinate varying fastest; labels are the coordinates.
pub fn cube(n: usize) -> Result<PointConfiguration> {
    check_size(n, 1, "cube")?;
    let (points, labels) = (0..1usize << n)
        .map(|i| {
            let p: Vec<i64> = (0..n).map(|k| (i >> k & 1) as i64).collect();
            let label = p.iter().map(|c| c.to_string()).collect::<String>();
            (p, label)
        })
        .unzip();
    PointConfiguration::new(points, labels)
}

/// The n-gon times `{0,1}`: bottom copy first, labels `i.z`.
pub fn prism(n: usize) -> Result<PointConfiguration> {
    check_size(n, 3, "prism")?;
    let mut points = Vec::new();
    let mut labels = Vec::new();
    for z in 0..2 {
        for i in 0..n as i64 {
            points.push(vec![i, i * i, z]);
            labels.push(format!("{i}.{z}"));
        }
    }
    PointConfiguration::new(points, labels)
}

/// `+e_1, -e_1, +e_2, -e_2, ...`
pub fn crosspoly(n: usize) -> Result<PointConfiguration> {
    check_size(n, 1, "crosspoly")?;
    let mut points = Vec::new();
    let mut labels = Vec::new();
    for k in 0..n {
        for (sign, c) in [(1, '+'), (-1, '-')] {
            let mut p = vec![0; n];
            p[k] = sign;
            points.push(p);
            labels.push(format!("{c}{}", k + 1));
        }
    }
    PointConfiguration::new(points, labels)
}

/// Integer heights drawn until they are generic (at most 256 draws).
pub fn random_generic_heights(cand: &Candidates, sampler: &mut RationalSampler) -> Result<HeightFunction> {
    let config = cand.config();
    for _ in 0..256 {
        let h = HeightFunction::new(config, sampler.int_vector(config.len(), 1000))?;
        if cand.is_generic(&h).is_ok_and(|c| c.generic) {
            return Ok(h);
        }
    }
    Err(Error::Internal("no generic heights found".into()))
}
