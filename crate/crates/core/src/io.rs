//! Triplet definition files:
//! `{"label": ..., "group": {...}, "cocycle": {...}, "character": {...}}`.

use std::path::Path;

use serde_json::{json, Value};

use crate::abelian::{AbGroup, Character};
use crate::cocycle::Cocycle;
use crate::dynamics::Triplet;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct TripletFile {
    pub label: Option<String>,
    pub triplet: Triplet,
}

/// Prefixes the location carried by an error with `field`.
fn at(field: &str, e: Error) -> Error {
    match e {
        Error::Parse { path, msg } => Error::Parse { path: format!("{field}.{path}"), msg },
        Error::Invalid { violation, detail } => Error::Invalid { violation, detail: format!("{field}: {detail}") },
        Error::Json(e) => Error::Parse { path: field.into(), msg: e.to_string() },
        other => other,
    }
}

fn field<'a>(v: &'a Value, name: &str) -> Result<&'a Value> {
    v.get(name).ok_or_else(|| Error::Parse { path: name.into(), msg: "missing field".into() })
}

impl TripletFile {
    pub fn from_value(v: &Value) -> Result<Self> {
        if !v.is_object() {
            return Err(Error::Parse { path: "$".into(), msg: "expected an object".into() });
        }
        let label = match v.get("label") {
            None | Some(Value::Null) => None,
            Some(Value::String(s)) => Some(s.clone()),
            Some(_) => return Err(Error::Parse { path: "label".into(), msg: "expected a string".into() }),
        };
        let group: AbGroup = serde_json::from_value(field(v, "group")?.clone())
            .map_err(|e| Error::Parse { path: "group".into(), msg: e.to_string() })?;
        let mu = Cocycle::from_json(field(v, "cocycle")?, &group).map_err(|e| at("cocycle", e))?;
        let chi = Character::from_json(field(v, "character")?, &group).map_err(|e| at("character", e))?;
        Ok(TripletFile { label, triplet: Triplet::new(mu, chi)? })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse {
            path: format!("line {} column {}", e.line(), e.column()),
            msg: e.to_string(),
        })?;
        Self::from_value(&v)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn new(label: impl Into<String>, triplet: Triplet) -> Self {
        TripletFile { label: Some(label.into()), triplet }
    }

    pub fn to_json(&self) -> Value {
        let t = &self.triplet;
        json!({
            "label": self.label,
            "group": t.group().as_ref(),
            "cocycle": t.mu().to_json(),
            "character": t.chi().to_json(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::triplet_q;
    use crate::error::Violation;

    #[test]
    fn round_trip() {
        let f = TripletFile::new("mu_3", triplet_q(3));
        let back = TripletFile::from_value(&f.to_json()).unwrap();
        assert_eq!(back.triplet, f.triplet);
        assert_eq!(back.label.as_deref(), Some("mu_3"));
    }

    #[test]
    fn violations_carry_locations() {
        let bad_char = json!({
            "group": {"free_rank": 0, "torsion": [3]},
            "cocycle": {"kind": "bichar", "matrix": [["0/1"]]},
            "character": {"phases": ["1/4"]},
        });
        let e = TripletFile::from_value(&bad_char).unwrap_err();
        assert!(matches!(e, Error::Invalid { violation: Violation::WellDefinedness, .. }), "{e}");

        let unnormalized = json!({
            "group": {"free_rank": 0, "torsion": [2]},
            "cocycle": {"kind": "table", "entries": [[[0], [0], "0/1"], [[0], [1], "0/1"], [[1], [0], "1/2"], [[1], [1], "0/1"]]},
            "character": {"phases": ["0/1"]},
        });
        let e = TripletFile::from_value(&unnormalized).unwrap_err();
        assert!(matches!(e, Error::Invalid { violation: Violation::Normalization, .. }), "{e}");

        let e = TripletFile::from_value(&json!({"group": {"free_rank": 0, "torsion": [3]}})).unwrap_err();
        assert!(matches!(&e, Error::Parse { path, .. } if path == "cocycle"));

        let e = TripletFile::from_value(&json!({
            "group": {"free_rank": 1, "torsion": []},
            "cocycle": {"kind": "bichar", "matrix": "x"},
            "character": {"phases": ["0/1"]},
        }))
        .unwrap_err();
        assert!(matches!(&e, Error::Parse { path, .. } if path == "cocycle.matrix"));
    }
}
