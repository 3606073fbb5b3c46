//! JSON documents exchanged by the command line tool. Rationals travel as
//! `"p/q"` strings and objects are written with sorted keys.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::config::{HeightFunction, PointConfiguration};
use crate::error::{Error, Result};
use crate::geometry::{LinearForm, Ridge, Simplex};
use crate::scalar::{format_rational, parse_rational, Rational};

pub const VERSION: &str = concat!("mstfan ", env!("CARGO_PKG_VERSION"));

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub name: String,
    pub n: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDocument {
    pub dim: usize,
    pub points: Vec<Vec<i64>>,
    pub labels: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub heights: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator: Option<GeneratorSpec>,
}

impl InstanceDocument {
    pub fn from_parts(
        config: &PointConfiguration,
        h: Option<&HeightFunction>,
        generator: Option<GeneratorSpec>,
    ) -> Self {
        Self {
            dim: config.dim(),
            points: config.points().to_vec(),
            labels: config.labels().to_vec(),
            heights: h.map(|h| h.values().iter().map(format_rational).collect()),
            generator,
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        let v = serde_json::to_value(self).expect("serializable");
        serde_json::to_string_pretty(&v).expect("serializable") + "\n"
    }

    pub fn configuration(&self) -> Result<PointConfiguration> {
        let config = PointConfiguration::new(self.points.clone(), self.labels.clone())?;
        if config.dim() != self.dim {
            return Err(Error::InvalidConfiguration(format!(
                "dim is {} but points have {} coordinates",
                self.dim,
                config.dim()
            )));
        }
        Ok(config)
    }

    pub fn height_function(&self, config: &PointConfiguration) -> Result<Option<HeightFunction>> {
        let Some(hs) = &self.heights else { return Ok(None) };
        let values = hs.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>()?;
        HeightFunction::new(config, values).map(Some)
    }

    /// Hex SHA-256 of the compact canonical form of the geometric data.
    pub fn digest(&self) -> String {
        let canonical = json!({
            "dim": self.dim,
            "heights": self.heights,
            "labels": self.labels,
            "points": self.points,
        });
        hex::encode(Sha256::digest(canonical.to_string().as_bytes()))
    }
}

pub fn result_document(command: &str, digest: Option<String>, payload: Value) -> Value {
    json!({
        "command": command,
        "digest": digest,
        "payload": payload,
        "version": VERSION,
    })
}

pub fn render(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

pub fn rational(x: &Rational) -> Value {
    Value::String(format_rational(x))
}

pub fn form(config: &PointConfiguration, f: &LinearForm) -> Value {
    let m: BTreeMap<String, Value> = f.nonzero().map(|(i, c)| (config.label(i).to_string(), rational(c))).collect();
    json!(m)
}

pub fn point(config: &PointConfiguration, x: &[Rational]) -> Value {
    let m: BTreeMap<String, Value> =
        x.iter().enumerate().map(|(i, c)| (config.label(i).to_string(), rational(c))).collect();
    json!(m)
}

pub fn simplex(config: &PointConfiguration, s: &Simplex) -> Value {
    json!(s.vertices().iter().map(|&v| config.label(v)).collect::<Vec<_>>())
}

pub fn ridge(config: &PointConfiguration, r: &Ridge) -> Value {
    json!([simplex(config, r.left()), simplex(config, r.right())])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    #[test]
    fn instance_round_trip() {
        let config = PointConfiguration::unlabeled(vec![vec![0], vec![1], vec![3]]).unwrap();
        let h = HeightFunction::new(&config, vec![ratio(-1, 3), ratio(5, 1), ratio(0, 1)]).unwrap();
        let doc = InstanceDocument::from_parts(&config, Some(&h), None);
        let text = doc.to_json();
        let back = InstanceDocument::parse(&text).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.to_json(), text);
        assert_eq!(back.height_function(&config).unwrap().unwrap(), h);
        assert_eq!(doc.digest(), back.digest());
        assert_eq!(doc.digest().len(), 64);
    }

    #[test]
    fn rejects_bad_documents() {
        assert!(InstanceDocument::parse("{").is_err());
        let doc = InstanceDocument::parse(r#"{"dim":2,"points":[[0],[1]],"labels":["a","b"]}"#).unwrap();
        assert!(doc.configuration().is_err());
        let doc = InstanceDocument::parse(r#"{"dim":1,"points":[[0],[1]],"labels":["a","b"],"heights":["1/0","2"]}"#)
            .unwrap();
        let c = doc.configuration().unwrap();
        assert!(doc.height_function(&c).is_err());
    }
}
