//! JSON group specification files.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fpgroup::{FreeWord, Presentation};
use crate::perm::Perm;
use crate::progenitor::{LabelMap, ProgenitorSpec, Relator};

/// A factoring relator as written in a spec file. Exactly one of
/// `control_word` and `control_perm` is given.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelatorEntry {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub control_word: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub control_perm: Option<String>,
    pub tail: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub power: Option<u32>,
}

/// Values a fixture is expected to reproduce.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub index: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group_order: Option<u128>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub node_sizes: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stabilizer_orders: Option<Vec<u128>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_word_length: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpecFile {
    pub name: String,
    pub labels: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub display: Option<Vec<String>>,
    /// Cycle strings over the labels, one per control presentation
    /// generator, in the same order.
    pub control_generators: Vec<String>,
    pub control_presentation: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub symmetric_generator: Option<String>,
    pub relators: Vec<RelatorEntry>,
    /// Words in the presentation generators (including the symmetric
    /// generator) realizing each `t_i`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t_words: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Expected>,
}

/// A parsed spec file.
#[derive(Clone, Debug)]
pub struct LoadedSpec {
    pub file: GroupSpecFile,
    pub spec: ProgenitorSpec,
    pub t_words: Option<Vec<FreeWord>>,
}

impl GroupSpecFile {
    pub fn from_json(text: &str) -> Result<GroupSpecFile> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn read(path: &Path) -> Result<GroupSpecFile> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        GroupSpecFile::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    /// Validates and converts into a progenitor specification.
    pub fn load(&self) -> Result<LoadedSpec> {
        let labels = LabelMap::new(self.labels.clone(), self.display.clone())?;
        let n = labels.len();
        if n == 0 {
            return Err(Error::InvalidSpec("no labels".into()));
        }
        let presentation = Presentation::parse(&self.control_presentation)?;
        let gens = self
            .control_generators
            .iter()
            .map(|c| labels.parse_perm(c))
            .collect::<Result<Vec<Perm>>>()?;
        let mut relators = Vec::with_capacity(self.relators.len());
        let control = crate::perm::PermGroup::new(n, gens.clone())?;
        for r in &self.relators {
            let word = match (&r.control_word, &r.control_perm) {
                (Some(w), None) => presentation.parse_word(w)?,
                (None, Some(p)) => control.word_for(&labels.parse_perm(p)?)?,
                _ => {
                    return Err(Error::InvalidSpec(
                        "give exactly one of control_word and control_perm".into(),
                    ))
                }
            };
            let tail = labels.parse_letters(&r.tail)?;
            relators.push(Relator::new(word, tail).with_power(r.power.unwrap_or(1)));
        }
        let mut spec = ProgenitorSpec::new(gens, presentation.clone(), relators, Some(labels))?;
        if let Some(sym) = &self.symmetric_generator {
            spec = spec.with_symbol(sym)?;
        }
        let t_words = match &self.t_words {
            None => None,
            Some(ws) => {
                let mut names = presentation.generator_names().to_vec();
                names.push(spec.symbol().to_string());
                let full = Presentation::new(names, Vec::new())?;
                Some(
                    ws.iter()
                        .map(|w| full.parse_word(w))
                        .collect::<Result<Vec<_>>>()?,
                )
            }
        };
        Ok(LoadedSpec {
            file: self.clone(),
            spec,
            t_words,
        })
    }
}
