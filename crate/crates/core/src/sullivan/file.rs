//! JSON model files:
//!
//! ```json
//! {
//!   "generators": [{"name": "x", "degree": 2}, {"name": "y", "degree": 5}],
//!   "differential": {"y": "x^3"},
//!   "rank_type": "2:5",
//!   "truncate_at": 6
//! }
//! ```

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::model::{ModelError, SullivanModel};
use crate::algebra::{parse_polynomial, FreeAlgebra, Generator, Polynomial};
use crate::ranktype::RankTypeError;

#[derive(Debug, Error)]
pub enum ModelFileError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("rank type: {0}")]
    RankType(#[from] RankTypeError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorEntry {
    pub name: String,
    pub degree: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelFile {
    pub generators: Vec<GeneratorEntry>,
    #[serde(default)]
    pub differential: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank_type: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub truncate_at: Option<u32>,
}

impl ModelFile {
    pub fn from_json(text: &str) -> Result<Self, ModelFileError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("model file serializes")
    }

    pub fn into_model(self) -> Result<SullivanModel, ModelFileError> {
        let gens = self
            .generators
            .into_iter()
            .map(|g| Generator::new(g.name, g.degree))
            .collect();
        let algebra = FreeAlgebra::new(gens).map_err(ModelError::from)?;
        let mut d = vec![Polynomial::zero(algebra.len()); algebra.len()];
        for (name, text) in &self.differential {
            let index = algebra
                .index_of(name)
                .ok_or_else(|| ModelError::UnknownGenerator(name.clone()))?;
            d[index] =
                parse_polynomial(text, &algebra).map_err(|source| ModelError::Differential {
                    name: name.clone(),
                    source,
                })?;
        }
        let mut model = SullivanModel::new(algebra, d);
        if let Some(t) = self.rank_type {
            model = model.with_rank_type(t.parse()?);
        }
        if let Some(k) = self.truncate_at {
            model = model.truncated_at(k);
        }
        Ok(model)
    }

    pub fn from_model(model: &SullivanModel) -> Self {
        let generators = model
            .generators()
            .iter()
            .map(|g| GeneratorEntry {
                name: g.name.clone(),
                degree: g.degree,
            })
            .collect();
        let differential = model
            .generators()
            .iter()
            .enumerate()
            .filter(|(i, _)| !model.differential_of(*i).is_zero())
            .map(|(i, g)| (g.name.clone(), model.render(model.differential_of(i))))
            .collect();
        ModelFile {
            generators,
            differential,
            rank_type: model.declared_rank_type().map(ToString::to_string),
            truncate_at: model.truncation_degree(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_round_trip() {
        let text = r#"{
            "generators": [{"name": "x", "degree": 2}, {"name": "y", "degree": 11}],
            "differential": {"y": "x^6"},
            "rank_type": "2:11"
        }"#;
        let file = ModelFile::from_json(text).unwrap();
        let model = file.clone().into_model().unwrap();
        assert!(model.is_valid());
        assert_eq!(ModelFile::from_model(&model), file);
        let again = ModelFile::from_json(&file.to_json()).unwrap();
        assert_eq!(again, file);
    }

    #[test]
    fn errors() {
        assert!(matches!(
            ModelFile::from_json("{"),
            Err(ModelFileError::Json(_))
        ));
        let unknown = r#"{"generators": [{"name": "x", "degree": 2}], "differential": {"z": "x"}}"#;
        assert!(matches!(
            ModelFile::from_json(unknown).unwrap().into_model(),
            Err(ModelFileError::Model(ModelError::UnknownGenerator(_)))
        ));
        let bad_poly =
            r#"{"generators": [{"name": "y", "degree": 3}], "differential": {"y": "y^2"}}"#;
        assert!(matches!(
            ModelFile::from_json(bad_poly).unwrap().into_model(),
            Err(ModelFileError::Model(ModelError::Differential { .. }))
        ));
        let bad_type = r#"{"generators": [{"name": "y", "degree": 3}], "rank_type": "3:3"}"#;
        assert!(matches!(
            ModelFile::from_json(bad_type).unwrap().into_model(),
            Err(ModelFileError::RankType(_))
        ));
    }
}
