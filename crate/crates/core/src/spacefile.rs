//! The JSON space file: `points` plus exactly one of `opens`, `min_opens`
//! or `leq`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::space::{FiniteSpace, Preorder, SpaceError};

pub const SPACE_FORMAT: &str = "prehom.space/1";

#[derive(Debug, Error)]
pub enum SpaceFileError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported space format {0:?} (expected {SPACE_FORMAT:?})")]
    UnsupportedFormat(String),
    #[error("exactly one of `opens`, `min_opens` or `leq` must be given, found {0}")]
    TopologyFieldCount(usize),
    #[error(transparent)]
    Space(#[from] SpaceError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub format: Option<String>,
    pub points: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub opens: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub min_opens: Option<BTreeMap<String, Vec<String>>>,
    /// Generating pairs `[x, y]` meaning `x ≤ y`; closed reflexively and
    /// transitively before building the Alexandrov topology.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub leq: Option<Vec<[String; 2]>>,
}

impl SpaceFile {
    pub fn into_space(self) -> Result<FiniteSpace, SpaceFileError> {
        if let Some(f) = &self.format {
            if f != SPACE_FORMAT {
                return Err(SpaceFileError::UnsupportedFormat(f.clone()));
            }
        }
        let given = [self.opens.is_some(), self.min_opens.is_some(), self.leq.is_some()];
        let count = given.iter().filter(|&&b| b).count();
        if count != 1 {
            return Err(SpaceFileError::TopologyFieldCount(count));
        }
        let space = if let Some(opens) = self.opens {
            FiniteSpace::validate_topology(self.points, opens)?
        } else if let Some(min) = self.min_opens {
            FiniteSpace::from_minimal_opens(self.points, &min)?
        } else {
            let pairs: Vec<(String, String)> = self.leq.unwrap_or_default().into_iter().map(|[x, y]| (x, y)).collect();
            FiniteSpace::from_preorder(&Preorder::generated_by(self.points, &pairs)?)
        };
        Ok(space)
    }

    /// The minimal-open form of `space`; its size is linear in the space,
    /// unlike the full open family.
    pub fn from_space(space: &FiniteSpace) -> Self {
        Self {
            format: Some(SPACE_FORMAT.to_string()),
            points: space.points().to_vec(),
            opens: None,
            min_opens: Some(space.minimal_opens_as_ids()),
            leq: None,
        }
    }

    /// The full open-set form of `space`.
    pub fn with_all_opens(space: &FiniteSpace) -> Self {
        Self {
            format: Some(SPACE_FORMAT.to_string()),
            points: space.points().to_vec(),
            opens: Some(space.opens_as_ids()),
            min_opens: None,
            leq: None,
        }
    }
}

pub fn parse_space(text: &str) -> Result<FiniteSpace, SpaceFileError> {
    serde_json::from_str::<SpaceFile>(text)?.into_space()
}

pub fn space_to_json(space: &FiniteSpace) -> String {
    let mut s = serde_json::to_string_pretty(&SpaceFile::from_space(space)).expect("space file serializes");
    s.push('\n');
    s
}
