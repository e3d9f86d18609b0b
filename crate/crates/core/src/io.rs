//! JSON space format and DOT export.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poset::{PointSet, Space};

/// `{"points": [...], "relations": [["lesser", "greater"], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceJson {
    pub points: Vec<String>,
    #[serde(default)]
    pub relations: Vec<(String, String)>,
}

impl SpaceJson {
    pub fn from_space(s: &Space) -> Self {
        SpaceJson {
            points: s.labels().to_vec(),
            relations: s
                .generating_pairs()
                .into_iter()
                .map(|(a, b)| (s.label(a).to_string(), s.label(b).to_string()))
                .collect(),
        }
    }

    pub fn to_space(&self) -> Result<Space> {
        let mut seen = std::collections::BTreeSet::new();
        for p in &self.points {
            if !seen.insert(p) {
                return Err(Error::Malformed(format!("duplicate point `{p}`")));
            }
        }
        let index = |l: &str| self.points.iter().position(|p| p == l).ok_or_else(|| Error::UnknownPoint(l.into()));
        let pairs = self.relations.iter().map(|(a, b)| Ok((index(a)?, index(b)?))).collect::<Result<Vec<_>>>()?;
        Space::from_relations_labeled(self.points.clone(), &pairs)
    }
}

pub fn parse_space(text: &str) -> Result<Space> {
    serde_json::from_str::<SpaceJson>(text)?.to_space()
}

pub fn space_to_json(s: &Space) -> String {
    serde_json::to_string(&SpaceJson::from_space(s)).expect("serialisable")
}

/// Hasse diagram in DOT, edges `y -> x` for covers `x ≺ y`. Points in
/// `highlight` are drawn bold.
pub fn hasse_dot(s: &Space, highlight: PointSet) -> String {
    let mut out = String::from("digraph hasse {\n");
    for x in 0..s.len() {
        let style = if highlight.contains(x) { ", style=bold, color=red" } else { "" };
        out.push_str(&format!("  p{x} [label=\"{}\"{style}];\n", s.label(x)));
    }
    for &(y, x) in s.hasse_pairs() {
        let style = if highlight.contains(x) && highlight.contains(y) { " [style=bold, color=red]" } else { "" };
        out.push_str(&format!("  p{y} -> p{x}{style};\n"));
    }
    out.push_str("}\n");
    out
}
