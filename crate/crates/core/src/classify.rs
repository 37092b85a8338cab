//! Deciding which structure class a connected (P5, gem)-free graph belongs to.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pattern::{find_induced, is_p5_gem_free, Pattern};
use crate::structure::{match_expansion, BagPartition, Template, TemplateId};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClassLabel {
    Expansion(BagPartition),
    /// No induced C5.
    Perfect,
}

impl ClassLabel {
    pub fn template(&self) -> Option<TemplateId> {
        match self {
            ClassLabel::Expansion(p) => Some(p.template),
            ClassLabel::Perfect => None,
        }
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassLabel::Perfect => write!(f, "Perfect"),
            ClassLabel::Expansion(p) => write!(f, "{}", p.template),
        }
    }
}

/// Classifies a connected (P5, gem)-free graph, checking both preconditions.
pub fn classify(g: &Graph) -> Result<ClassLabel> {
    is_p5_gem_free(g).map_err(Error::NotP5GemFree)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    classify_trusted(g)
}

/// [`classify`] without the precondition checks. Templates are tried in the
/// order G1, …, G10, H and the first match wins.
pub fn classify_trusted(g: &Graph) -> Result<ClassLabel> {
    if find_induced(g, Pattern::C5).is_none() {
        return Ok(ClassLabel::Perfect);
    }
    for id in TemplateId::ALL {
        if let Some(p) = match_expansion(g, &Template::new(id)) {
            return Ok(ClassLabel::Expansion(p));
        }
    }
    Err(Error::InternalInconsistency(
        "graph contains an induced C5 but matches none of the eleven templates".into(),
    ))
}
