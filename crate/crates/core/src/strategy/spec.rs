//! `name[:key=value,…]` strategy specifications.

use std::collections::BTreeMap;
use std::path::Path;

use thiserror::Error;

use super::{
    CopStrategy, KPartite, LeafProbeAll, MaryHigh, MaryLow, PathwidthSweep, ProjectiveTwoPhase, ScriptedProbes,
    StrategyError, TdCenterOut, TdLeafPaths, TreeTwoCop, WitnessStrategy,
};
use crate::decomposition::{minfill_td, TreeDecomposition};
use crate::graph::Graph;
use crate::solver::SolveOptions;

pub const STRATEGY_NAMES: &[&str] = &[
    "scripted",
    "leaf_probe_all",
    "tree_two_cop",
    "mary_low",
    "mary_high",
    "kpartite",
    "projective",
    "pathwidth_sweep",
    "td_leafpaths",
    "td_center_out",
    "witness",
];

#[derive(Debug, Error)]
pub enum SpecError {
    #[error("unknown strategy `{0}` (known: {known})", known = STRATEGY_NAMES.join(", "))]
    UnknownName(String),
    #[error("malformed parameter `{0}`, expected key=value")]
    Malformed(String),
    #[error("strategy `{name}` does not take parameter `{key}`")]
    UnexpectedParam { name: String, key: String },
    #[error("strategy `{name}` needs parameter `{key}`")]
    MissingParam { name: String, key: String },
    #[error("parameter `{key}` has invalid value `{value}`")]
    BadValue { key: String, value: String },
    #[error("cannot read decomposition {path}: {reason}")]
    Decomposition { path: String, reason: String },
    #[error(transparent)]
    Strategy(#[from] StrategyError),
}

/// A parsed specification, not yet bound to a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedStrategy {
    pub name: String,
    pub params: BTreeMap<String, String>,
}

fn allowed_params(name: &str) -> Option<&'static [&'static str]> {
    Some(match name {
        "scripted" => &["probes"],
        "leaf_probe_all" | "tree_two_cop" | "kpartite" => &[],
        "mary_low" | "mary_high" => &["m", "h", "k"],
        "projective" => &["q", "k"],
        "pathwidth_sweep" | "td_leafpaths" | "td_center_out" => &["td"],
        "witness" => &["k"],
        _ => return None,
    })
}

pub fn parse_strategy(spec: &str) -> Result<NamedStrategy, SpecError> {
    let (name, rest) = spec.split_once(':').unwrap_or((spec, ""));
    let allowed = allowed_params(name).ok_or_else(|| SpecError::UnknownName(name.to_string()))?;
    let mut params = BTreeMap::new();
    for item in rest.split(',').filter(|s| !s.is_empty()) {
        let (key, value) = item.split_once('=').ok_or_else(|| SpecError::Malformed(item.to_string()))?;
        if !allowed.contains(&key) {
            return Err(SpecError::UnexpectedParam { name: name.to_string(), key: key.to_string() });
        }
        params.insert(key.to_string(), value.to_string());
    }
    Ok(NamedStrategy { name: name.to_string(), params })
}

fn parse_probes(value: &str) -> Result<Vec<Vec<usize>>, SpecError> {
    let bad = || SpecError::BadValue { key: "probes".into(), value: value.to_string() };
    value
        .split('/')
        .map(|round| round.split('-').map(|v| v.trim().parse().map_err(|_| bad())).collect())
        .collect()
}

fn read_td(path: &str) -> Result<TreeDecomposition, SpecError> {
    let err = |reason: String| SpecError::Decomposition { path: path.to_string(), reason };
    let text = std::fs::read_to_string(Path::new(path)).map_err(|e| err(e.to_string()))?;
    serde_json::from_str(&text).map_err(|e| err(e.to_string()))
}

impl NamedStrategy {
    fn get(&self, key: &str) -> Option<&str> {
        self.params.get(key).map(String::as_str)
    }

    fn number(&self, key: &str) -> Result<usize, SpecError> {
        let value = self
            .get(key)
            .ok_or_else(|| SpecError::MissingParam { name: self.name.clone(), key: key.to_string() })?;
        value.parse().map_err(|_| SpecError::BadValue { key: key.to_string(), value: value.to_string() })
    }

    fn td(&self, g: &Graph, required: bool) -> Result<TreeDecomposition, SpecError> {
        match self.get("td") {
            Some(path) => read_td(path),
            None if required => Err(SpecError::MissingParam { name: self.name.clone(), key: "td".into() }),
            None => Ok(minfill_td(g)),
        }
    }

    /// Builds the strategy for `g`. `solve` configures the exact solve
    /// behind `witness`.
    pub fn build(&self, g: &Graph, solve: &SolveOptions) -> Result<Box<dyn CopStrategy>, SpecError> {
        Ok(match self.name.as_str() {
            "scripted" => {
                let probes = self.get("probes").map(parse_probes).transpose()?.unwrap_or_default();
                Box::new(ScriptedProbes::new(probes)?)
            }
            "leaf_probe_all" => Box::new(LeafProbeAll::new(g)?),
            "tree_two_cop" => Box::new(TreeTwoCop::new(g)?),
            "mary_low" => Box::new(MaryLow::new(g, self.number("m")?, self.number("h")?, self.number("k")?)?),
            "mary_high" => Box::new(MaryHigh::new(g, self.number("m")?, self.number("h")?, self.number("k")?)?),
            "kpartite" => Box::new(KPartite::new(g)?),
            "projective" => Box::new(ProjectiveTwoPhase::new(g, self.number("q")?, self.number("k")?)?),
            "pathwidth_sweep" => Box::new(PathwidthSweep::new(g, &self.td(g, true)?)?),
            "td_leafpaths" => Box::new(TdLeafPaths::new(g, &self.td(g, false)?)?),
            "td_center_out" => Box::new(TdCenterOut::new(g, &self.td(g, false)?)?),
            "witness" => Box::new(WitnessStrategy::new(g, self.number("k")?, solve)?),
            other => return Err(SpecError::UnknownName(other.to_string())),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::designs::build_pg2;
    use crate::generators::{path, perfect_mary_tree};
    use crate::strategy::evaluate_strategy;

    #[test]
    fn parses_names_and_params() {
        let s = parse_strategy("mary_low:m=3,h=2,k=2").unwrap();
        assert_eq!(s.name, "mary_low");
        assert_eq!(s.params["h"], "2");
        assert_eq!(parse_strategy("tree_two_cop").unwrap().params.len(), 0);
        assert!(matches!(parse_strategy("nope"), Err(SpecError::UnknownName(_))));
        assert!(matches!(parse_strategy("mary_low:x=1"), Err(SpecError::UnexpectedParam { .. })));
        assert!(matches!(parse_strategy("mary_low:m"), Err(SpecError::Malformed(_))));
    }

    #[test]
    fn builds_and_runs() {
        let opts = SolveOptions::default();
        let heawood = build_pg2(2).unwrap().incidence_graph();
        let s = parse_strategy("scripted:probes=0-3-5/1-2-4").unwrap().build(&heawood, &opts).unwrap();
        assert_eq!(s.cops(), 3);
        let t = perfect_mary_tree(3, 2).unwrap();
        let s = parse_strategy("mary_low:m=3,h=2,k=2").unwrap().build(&t, &opts).unwrap();
        assert!(evaluate_strategy(&t, s.as_ref(), 20).unwrap().worst_case.within(4));
        let p = path(5).unwrap();
        for name in ["td_leafpaths", "td_center_out", "witness:k=1", "tree_two_cop"] {
            let s = parse_strategy(name).unwrap().build(&p, &opts).unwrap();
            assert!(evaluate_strategy(&p, s.as_ref(), 20).unwrap().worst_case.rounds().is_some(), "{name}");
        }
        let missing = parse_strategy("pathwidth_sweep").unwrap().build(&p, &opts);
        assert!(matches!(missing, Err(SpecError::MissingParam { .. })));
        let bad = parse_strategy("mary_low:m=x,h=2,k=2").unwrap().build(&t, &opts);
        assert!(matches!(bad, Err(SpecError::BadValue { .. })));
    }
}
