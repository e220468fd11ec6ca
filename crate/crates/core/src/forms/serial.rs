//! JSON documents for triples and `Z/2` quadratic forms.
//!
//! Triple: `{"group": "Z + Z2", "mu": [[0,1],[1,0]], "phi": ["1/4","0/1"],
//! "omega": [1]}`, with `omega` optional. Serialization is compact and
//! canonical, so parsing a serialized triple and serializing it again
//! reproduces the same bytes.

use serde::{Deserialize, Serialize};

use super::{BilinearForm, OmegaFunctional, QZValue, QuadraticFunction, Triple, Z2QuadraticForm};
use crate::error::{Error, Result};
use crate::groups::AbelianGroup;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TripleDoc {
    pub group: String,
    pub mu: Vec<Vec<u8>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega: Option<Vec<u8>>,
}

impl TripleDoc {
    pub fn from_parts(
        group: &AbelianGroup,
        mu: &BilinearForm,
        phi: Option<&[QZValue]>,
        omega: Option<&OmegaFunctional>,
    ) -> Self {
        TripleDoc {
            group: group.to_string(),
            mu: mu.matrix().to_vec(),
            phi: phi.map(|v| v.iter().map(QZValue::to_string).collect()),
            omega: omega.map(|w| w.bits().to_vec()),
        }
    }

    pub fn parse_group(&self) -> Result<AbelianGroup> {
        self.group.parse()
    }

    pub fn parse_mu(&self, group: &AbelianGroup) -> Result<BilinearForm> {
        BilinearForm::new(group, self.mu.clone())
    }

    pub fn parse_phi(&self) -> Result<Option<Vec<QZValue>>> {
        self.phi
            .as_ref()
            .map(|v| v.iter().map(|s| s.parse()).collect::<Result<Vec<_>>>())
            .transpose()
    }

    pub fn parse_omega(&self, group: &AbelianGroup) -> Result<Option<OmegaFunctional>> {
        self.omega.as_ref().map(|b| OmegaFunctional::new(group, b.clone())).transpose()
    }
}

impl Triple {
    pub fn to_doc(&self) -> TripleDoc {
        TripleDoc::from_parts(self.group(), self.mu(), Some(self.phi().values()), self.omega())
    }

    pub fn from_doc(doc: &TripleDoc) -> Result<Self> {
        let group = doc.parse_group()?;
        let mu = doc.parse_mu(&group)?;
        let values = doc.parse_phi()?.ok_or_else(|| Error::invalid("triple document has no 'phi'"))?;
        let phi = QuadraticFunction::new(mu, values)?;
        Triple::new(phi, doc.parse_omega(&group)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_doc()).expect("triple documents always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: TripleDoc = serde_json::from_str(text).map_err(json_error)?;
        Triple::from_doc(&doc)
    }
}

pub(crate) fn json_error(e: serde_json::Error) -> Error {
    Error::Parse { position: e.column(), message: format!("JSON (line {}): {e}", e.line()) }
}

/// `{"values": [0, 1], "cross": [[0, 1], [1, 0]]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Z2FormDoc {
    pub values: Vec<u8>,
    pub cross: Vec<Vec<u8>>,
}

impl Z2QuadraticForm {
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: Z2FormDoc = serde_json::from_str(text).map_err(json_error)?;
        Z2QuadraticForm::new(doc.values, doc.cross)
    }

    pub fn to_json(&self) -> String {
        let doc = Z2FormDoc { values: self.values().to_vec(), cross: self.cross().to_vec() };
        serde_json::to_string(&doc).expect("form documents always serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_bytes() {
        let text = r#"{"group":"Z + Z2","mu":[[1,0],[0,1]],"phi":["1/4","1/2"],"omega":[1]}"#;
        let t = Triple::from_json(text).unwrap();
        assert_eq!(t.to_json(), text);
        let no_omega = r#"{"group":"Z4","mu":[[0]],"phi":["3/4"]}"#;
        assert_eq!(Triple::from_json(no_omega).unwrap().to_json(), no_omega);
    }

    #[test]
    fn input_is_normalized() {
        let t = Triple::from_json(r#"{"group": "Z2+Z", "mu": [[0,1],[1,0]], "phi": ["5/4", "0"]}"#).unwrap();
        assert_eq!(t.to_json(), r#"{"group":"Z + Z2","mu":[[0,1],[1,0]],"phi":["1/4","0/1"]}"#);
    }

    #[test]
    fn rejects_bad_documents() {
        assert!(Triple::from_json(r#"{"group":"Z","mu":[[0]]}"#).is_err());
        assert!(Triple::from_json(r#"{"group":"Z","mu":[[0]],"phi":["1/8"]}"#).is_err());
        assert!(Triple::from_json(r#"{"group":"Z","mu":[[0]],"phi":["0"],"extra":1}"#).is_err());
        assert!(Triple::from_json(r#"{"group":"Z","mu":[[0]],"phi":["0"],"omega":[1]}"#).is_err());
        assert!(matches!(Triple::from_json("{"), Err(Error::Parse { .. })));
    }

    #[test]
    fn z2_form_documents() {
        let text = r#"{"values":[1,1],"cross":[[0,1],[1,0]]}"#;
        let q = Z2QuadraticForm::from_json(text).unwrap();
        assert_eq!(q.to_json(), text);
        assert_eq!(crate::forms::arf(&q).unwrap(), 1);
    }
}
