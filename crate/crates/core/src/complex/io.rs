use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{Simplex, SimplicialComplex, Vertex};
use crate::error::{Error, Result};

/// The complex-JSON document, optionally carrying a filtration.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexDocument {
    pub name: String,
    pub dimension: usize,
    pub facets: Vec<Vec<Vertex>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub filtration: Option<FiltrationDocument>,
}

/// Skeleta keyed by their dimension as a decimal string.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FiltrationDocument {
    pub skeleta: BTreeMap<String, Vec<Vec<Vertex>>>,
}

impl ComplexDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::MalformedInput(e.to_string()))
    }

    /// Pretty JSON with one simplex per line.
    pub fn to_json(&self) -> String {
        let rows = |list: &[Vec<Vertex>], indent: &str| {
            let lines: Vec<String> =
                list.iter().map(|s| format!("{indent}{}", serde_json::to_string(s).expect("integers"))).collect();
            lines.join(",\n")
        };
        let mut out = format!(
            "{{\n  \"name\": {},\n  \"dimension\": {},\n  \"facets\": [\n{}\n  ]",
            serde_json::to_string(&self.name).expect("strings serialise"),
            self.dimension,
            rows(&self.facets, "    ")
        );
        if let Some(f) = &self.filtration {
            let keys: Vec<String> = f
                .skeleta
                .iter()
                .map(|(k, list)| {
                    format!(
                        "      {}: [\n{}\n      ]",
                        serde_json::to_string(k).expect("strings serialise"),
                        rows(list, "        ")
                    )
                })
                .collect();
            out.push_str(&format!(",\n  \"filtration\": {{\n    \"skeleta\": {{\n{}\n    }}\n  }}", keys.join(",\n")));
        }
        out.push_str("\n}");
        out
    }

    pub fn from_complex(k: &SimplicialComplex) -> Self {
        Self {
            name: k.name().to_string(),
            dimension: k.dim(),
            facets: k.facets().iter().map(|f| f.vertices().to_vec()).collect(),
            filtration: None,
        }
    }
}

/// Builds the complex described by `doc`.
///
/// Lower-dimensional entries that are faces of listed facets are accepted
/// and ignored; any other entry with fewer than `n + 1` vertices makes the
/// complex non-pure.
pub fn load_complex(doc: &ComplexDocument) -> Result<SimplicialComplex> {
    let n = doc.dimension;
    let mut full = Vec::new();
    let mut short = Vec::new();
    for raw in &doc.facets {
        let s = Simplex::new(raw.clone())
            .ok_or_else(|| Error::MalformedInput(format!("facet {raw:?} is empty or repeats a vertex")))?;
        match s.dim().cmp(&n) {
            std::cmp::Ordering::Greater => {
                return Err(Error::MalformedInput(format!(
                    "facet {s} has {} vertices, expected {}",
                    s.dim() + 1,
                    n + 1
                )))
            }
            std::cmp::Ordering::Equal => full.push(s),
            std::cmp::Ordering::Less => short.push(s),
        }
    }
    if let Some(stray) = short.iter().find(|s| !full.iter().any(|f| s.is_face_of(f))) {
        return Err(Error::NonPure(format!("maximal simplex {stray} has dimension {} < {n}", stray.dim())));
    }
    SimplicialComplex::from_facets(doc.name.clone(), n, full)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_canonicalises() {
        let doc = ComplexDocument::from_json(
            r#"{"name": "tet", "dimension": 2, "facets": [[2,1,0],[0,1,3],[0,2,3],[1,2,3]]}"#,
        )
        .unwrap();
        let k = load_complex(&doc).unwrap();
        assert_eq!(k.f_vector(), vec![4, 6, 4]);
        assert_eq!(k.facets()[0].vertices(), &[0, 1, 2]);
    }

    #[test]
    fn schema_violations() {
        for text in [
            r#"{"name": "x", "dimension": 1}"#,
            r#"{"name": "x", "dimension": -1, "facets": []}"#,
            r#"{"name": "x", "dimension": 1, "facets": [[0,1]], "extra": 1}"#,
            r#"{"name": "x", "dimension": 1, "facets": [[0,0]]}"#,
            r#"{"name": "x", "dimension": 1, "facets": [[0,1,2]]}"#,
        ] {
            let r = ComplexDocument::from_json(text).and_then(|d| load_complex(&d));
            assert_eq!(r.unwrap_err().code(), "MalformedInput", "{text}");
        }
    }

    #[test]
    fn dangling_edge_document() {
        let doc = ComplexDocument::from_json(r#"{"name": "x", "dimension": 2, "facets": [[0,1,2],[2,3]]}"#).unwrap();
        assert_eq!(load_complex(&doc).unwrap_err().code(), "NonPure");
        let ok = ComplexDocument::from_json(r#"{"name": "x", "dimension": 2, "facets": [[0,1,2],[1,2]]}"#).unwrap();
        assert!(load_complex(&ok).is_ok());
    }

    #[test]
    fn duplicate_facets_in_document() {
        let doc = ComplexDocument::from_json(r#"{"name": "x", "dimension": 1, "facets": [[0,1],[1,0]]}"#).unwrap();
        assert_eq!(load_complex(&doc).unwrap_err().code(), "MalformedInput");
    }
}
