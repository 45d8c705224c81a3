//! The JSON game document: parsing, validation and canonical emission.

use std::collections::BTreeMap;

use igt_core::{
    ExplicitGame, FamilyKind, InfluenceGame, InfluenceGraph, SimpleGraph, WeightedGame,
};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum DocumentError {
    /// Malformed JSON or a field of the wrong shape; carries line and column.
    #[error("schema violation: {0}")]
    Schema(String),
    #[error("unsupported format_version {0} (expected {FORMAT_VERSION})")]
    Version(u32),
    /// Well-formed document whose content breaks a game invariant.
    #[error(transparent)]
    Invariant(#[from] igt_core::Error),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Payload {
    Influence(InfluenceGame),
    Weighted(WeightedGame),
    Explicit(ExplicitGame),
    Graph(SimpleGraph),
}

impl Payload {
    pub fn kind(&self) -> &'static str {
        match self {
            Payload::Influence(_) => "influence_game",
            Payload::Weighted(_) => "weighted_game",
            Payload::Explicit(_) => "explicit_game",
            Payload::Graph(_) => "graph",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameDocument {
    pub payload: Payload,
    pub metadata: BTreeMap<String, String>,
}

impl GameDocument {
    pub fn new(payload: Payload) -> Self {
        GameDocument {
            payload,
            metadata: BTreeMap::new(),
        }
    }

    pub fn with_meta(mut self, key: impl Into<String>, value: impl ToString) -> Self {
        self.metadata.insert(key.into(), value.to_string());
        self
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    format_version: u32,
    payload: RawPayload,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    metadata: BTreeMap<String, String>,
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
enum RawPayload {
    InfluenceGame(RawInfluence),
    WeightedGame(RawWeighted),
    ExplicitGame(RawExplicit),
    Graph(RawGraph),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawNode {
    id: String,
    threshold: u64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEdge {
    from: String,
    to: String,
    #[serde(default = "unit")]
    weight: u64,
}

fn unit() -> u64 {
    1
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInfluence {
    nodes: Vec<RawNode>,
    edges: Vec<RawEdge>,
    directed: bool,
    quota: usize,
    players: Vec<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawWeighted {
    quota: u64,
    weights: Vec<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    players: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawExplicit {
    players: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    minimal_winning: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    winning: Option<Vec<Vec<String>>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGraph {
    nodes: Vec<String>,
    edges: Vec<[String; 2]>,
}

pub fn parse(text: &str) -> Result<GameDocument, DocumentError> {
    let raw: RawDocument =
        serde_json::from_str(text).map_err(|e| DocumentError::Schema(e.to_string()))?;
    if raw.format_version != FORMAT_VERSION {
        return Err(DocumentError::Version(raw.format_version));
    }
    let payload = match raw.payload {
        RawPayload::InfluenceGame(g) => {
            let graph = InfluenceGraph::new(
                g.nodes.iter().map(|n| (n.id.as_str(), n.threshold)),
                g.edges
                    .iter()
                    .map(|e| (e.from.as_str(), e.to.as_str(), e.weight)),
                g.directed,
            )?;
            Payload::Influence(InfluenceGame::new(graph, g.quota, &g.players)?)
        }
        RawPayload::WeightedGame(w) => Payload::Weighted(match w.players {
            Some(players) => WeightedGame::with_players(w.quota, w.weights, players)?,
            None => WeightedGame::new(w.quota, w.weights)?,
        }),
        RawPayload::ExplicitGame(e) => {
            let (family, kind) = match (e.minimal_winning, e.winning) {
                (Some(f), None) => (f, FamilyKind::MinimalWinning),
                (None, Some(f)) => (f, FamilyKind::Winning),
                _ => {
                    return Err(DocumentError::Schema(
                        "explicit_game needs exactly one of `minimal_winning` and `winning`".into(),
                    ))
                }
            };
            Payload::Explicit(ExplicitGame::new(&e.players, &family, kind)?)
        }
        RawPayload::Graph(g) => {
            let edges: Vec<(&str, &str)> = g
                .edges
                .iter()
                .map(|[u, v]| (u.as_str(), v.as_str()))
                .collect();
            let nodes: Vec<&str> = g.nodes.iter().map(String::as_str).collect();
            Payload::Graph(SimpleGraph::new(&nodes, &edges)?)
        }
    };
    Ok(GameDocument {
        payload,
        metadata: raw.metadata,
    })
}

/// Canonical text: sorted keys, nodes, edges, players and coalitions; two-space indent.
pub fn emit(doc: &GameDocument) -> String {
    let payload = match &doc.payload {
        Payload::Influence(g) => RawPayload::InfluenceGame(raw_influence(g)),
        Payload::Weighted(w) => RawPayload::WeightedGame(raw_weighted(w)),
        Payload::Explicit(e) => RawPayload::ExplicitGame(raw_explicit(e)),
        Payload::Graph(g) => RawPayload::Graph(raw_graph(g)),
    };
    let raw = RawDocument {
        format_version: FORMAT_VERSION,
        payload,
        metadata: doc.metadata.clone(),
    };
    // Going through `Value` sorts every object's keys.
    let value = serde_json::to_value(&raw).expect("documents serialise");
    let mut text = serde_json::to_string_pretty(&value).expect("values serialise");
    text.push('\n');
    text
}

fn raw_influence(game: &InfluenceGame) -> RawInfluence {
    let g = game.graph();
    let mut nodes: Vec<RawNode> = (0..g.len())
        .map(|v| RawNode {
            id: g.id(v).to_owned(),
            threshold: g.threshold(v),
        })
        .collect();
    nodes.sort_by(|a, b| a.id.cmp(&b.id));
    let mut edges: Vec<RawEdge> = g
        .edges()
        .iter()
        .map(|e| {
            let (mut from, mut to) = (g.id(e.from).to_owned(), g.id(e.to).to_owned());
            if !g.is_directed() && to < from {
                std::mem::swap(&mut from, &mut to);
            }
            RawEdge {
                from,
                to,
                weight: e.weight,
            }
        })
        .collect();
    edges.sort_by(|a, b| (&a.from, &a.to).cmp(&(&b.from, &b.to)));
    let mut players = game.player_ids();
    players.sort();
    RawInfluence {
        nodes,
        edges,
        directed: g.is_directed(),
        quota: game.quota(),
        players,
    }
}

fn raw_weighted(game: &WeightedGame) -> RawWeighted {
    let default_names = game
        .players()
        .iter()
        .enumerate()
        .all(|(i, p)| *p == (i + 1).to_string());
    RawWeighted {
        quota: game.quota(),
        weights: game.weights().to_vec(),
        players: (!default_names).then(|| game.players().to_vec()),
    }
}

fn raw_explicit(game: &ExplicitGame) -> RawExplicit {
    let mut players = game.players().to_vec();
    players.sort();
    let mut family: Vec<Vec<String>> = game
        .family()
        .iter()
        .map(|c| {
            let mut names = game.names(*c);
            names.sort();
            names
        })
        .collect();
    family.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let (minimal_winning, winning) = match game.kind() {
        FamilyKind::MinimalWinning => (Some(family), None),
        FamilyKind::Winning => (None, Some(family)),
    };
    RawExplicit {
        players,
        minimal_winning,
        winning,
    }
}

fn raw_graph(graph: &SimpleGraph) -> RawGraph {
    let ids = graph.ids();
    let mut nodes = ids.to_vec();
    nodes.sort();
    let mut edges: Vec<[String; 2]> = graph
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (ids[u].clone(), ids[v].clone());
            if a <= b {
                [a, b]
            } else {
                [b, a]
            }
        })
        .collect();
    edges.sort();
    RawGraph { nodes, edges }
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE3: &str = r#"{
  "format_version": 1,
  "payload": {"influence_game": {
    "nodes": [{"id": "a", "threshold": 1}, {"id": "b", "threshold": 1},
              {"id": "c", "threshold": 1}, {"id": "d", "threshold": 2}],
    "edges": [{"from": "a", "to": "c", "weight": 1}, {"from": "a", "to": "d", "weight": 1},
              {"from": "b", "to": "a", "weight": 1}, {"from": "b", "to": "d", "weight": 1},
              {"from": "c", "to": "d", "weight": 1}],
    "directed": true, "quota": 3, "players": ["a", "b", "c", "d"]}}
}"#;

    fn rejects(text: &str, needle: &str) {
        let err = parse(text).unwrap_err().to_string();
        assert!(err.contains(needle), "`{err}` lacks `{needle}`");
    }

    #[test]
    fn four_node_game_parses_to_the_figure_graph() {
        let doc = parse(EXAMPLE3).unwrap();
        let Payload::Influence(g) = &doc.payload else {
            panic!("wrong payload")
        };
        assert_eq!(g.quota(), 3);
        assert_eq!(g.graph().len(), 4);
        assert_eq!(g.graph().edges().len(), 5);
        assert_eq!(g.graph().threshold(g.graph().index_of("d").unwrap()), 2);
    }

    #[test]
    fn emit_is_a_fixed_point() {
        let once = emit(&parse(EXAMPLE3).unwrap());
        assert_eq!(emit(&parse(&once).unwrap()), once);
        assert!(once.find("\"directed\"").unwrap() < once.find("\"edges\"").unwrap());
    }

    #[test]
    fn invariant_violations_name_the_rule() {
        rejects(
            r#"{"format_version":1,"payload":{"graph":{"nodes":["a"],"edges":[["a","a"]]}}}"#,
            "self-loop forbidden",
        );
        rejects(
            r#"{"format_version":1,"payload":{"influence_game":{"nodes":[{"id":"a","threshold":1}],
               "edges":[{"from":"a","to":"a","weight":1}],"directed":true,"quota":1,"players":["a"]}}}"#,
            "self-loop forbidden",
        );
        rejects(
            r#"{"format_version":1,"payload":{"explicit_game":{"players":["a","b"],"minimal_winning":[["a"],["a","b"]]}}}"#,
            "antichain",
        );
        rejects(
            r#"{"format_version":1,"payload":{"influence_game":{"nodes":[{"id":"a","threshold":1}],
               "edges":[],"directed":true,"quota":3,"players":["a"]}}}"#,
            "quota",
        );
    }

    #[test]
    fn schema_errors_carry_positions() {
        rejects(
            "{\"format_version\": 1,\n \"payload\": {\"weighted_game\": {\"quota\": \"x\"}}}",
            "line 2",
        );
        rejects(
            r#"{"format_version":2,"payload":{"weighted_game":{"quota":1,"weights":[1]}}}"#,
            "format_version 2",
        );
        rejects(
            r#"{"format_version":1,"payload":{"explicit_game":{"players":["a"]}}}"#,
            "exactly one",
        );
    }

    #[test]
    fn weighted_and_explicit_round_trip() {
        for text in [
            r#"{"format_version":1,"payload":{"weighted_game":{"quota":3,"weights":[2,1,1]}},"metadata":{"k":"v"}}"#,
            r#"{"format_version":1,"payload":{"weighted_game":{"quota":3,"weights":[2,1],"players":["x","y"]}}}"#,
            r#"{"format_version":1,"payload":{"explicit_game":{"players":["b","a"],"winning":[["a","b"],["a"]]}}}"#,
            r#"{"format_version":1,"payload":{"graph":{"nodes":["v","u"],"edges":[["v","u"]]}}}"#,
        ] {
            let doc = parse(text).unwrap();
            let once = emit(&doc);
            assert_eq!(parse(&once).unwrap().payload.kind(), doc.payload.kind());
            assert_eq!(emit(&parse(&once).unwrap()), once);
        }
    }
}
