//! Hardness gadgets as instance generators, checked against brute-force oracles.
//!
//! Every generator returns a [`GadgetInstance`] carrying the claim that links
//! the game to its source instance; [`GadgetInstance::verify`] checks it by
//! enumeration on the game and exhaustive search on the source.

use std::collections::BTreeSet;

use crate::analysis::{self, Method};
use crate::coalition::{subsets_of, Coalition};
use crate::error::{Error, Result};
use crate::forms::{Measure, WeightedGame};
use crate::game::{relay_realisation, InfluenceGame};
use crate::graph::{GraphBuilder, InfluenceGraph, SimpleGraph};
use crate::limits::{self, Limits};
use crate::special::GameProperty;

/// Players up to which [`gen_necessary_player`] validates every team.
pub const NECESSARY_VALIDATION: usize = 10;

/// Exhaustive solvers for the source problems, written directly over bitmasks.
pub mod oracle {
    use super::*;

    fn check(limits: &Limits, size: usize) -> Result<()> {
        limits::check("oracle instance size", limits.oracle_size, size)
    }

    fn edge_masks(graph: &SimpleGraph) -> Vec<u64> {
        graph
            .edges()
            .iter()
            .map(|&(u, v)| (1u64 << u) | (1u64 << v))
            .collect()
    }

    pub fn is_vertex_cover(edges: &[u64], set: u64) -> bool {
        edges.iter().all(|&e| e & set != 0)
    }

    /// Every vertex cover as a mask over the vertex indices, ascending.
    pub fn vertex_covers(graph: &SimpleGraph, limits: &Limits) -> Result<Vec<u64>> {
        check(limits, graph.len())?;
        let edges = edge_masks(graph);
        Ok((0..1u64 << graph.len())
            .filter(|&s| is_vertex_cover(&edges, s))
            .collect())
    }

    pub fn min_vertex_cover(graph: &SimpleGraph, limits: &Limits) -> Result<usize> {
        Ok(vertex_covers(graph, limits)?
            .into_iter()
            .map(|s| s.count_ones() as usize)
            .min()
            .expect("the whole vertex set is a cover"))
    }

    pub fn count_vertex_covers(graph: &SimpleGraph, limits: &Limits) -> Result<u64> {
        Ok(vertex_covers(graph, limits)?.len() as u64)
    }

    pub fn max_independent_set(graph: &SimpleGraph, limits: &Limits) -> Result<usize> {
        check(limits, graph.len())?;
        let edges = edge_masks(graph);
        Ok((0..1u64 << graph.len())
            .filter(|&s| edges.iter().all(|&e| e & s != e))
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap_or(0))
    }

    fn set_masks(sets: &[Vec<usize>]) -> Vec<u64> {
        sets.iter()
            .map(|s| s.iter().fold(0u64, |m, &e| m | 1 << e))
            .collect()
    }

    /// Fewest sets whose union is `{1, …, universe}`; `None` if the union falls short.
    pub fn min_set_cover(
        sets: &[Vec<usize>],
        universe: usize,
        limits: &Limits,
    ) -> Result<Option<usize>> {
        check(limits, sets.len())?;
        let masks = set_masks(sets);
        let all: u64 = (1..=universe).fold(0, |m, e| m | 1 << e);
        Ok((0..1u64 << sets.len())
            .filter(|&pick| {
                let union = (0..sets.len())
                    .filter(|&j| pick >> j & 1 == 1)
                    .fold(0, |m, j| m | masks[j]);
                union & all == all
            })
            .map(|pick| pick.count_ones() as usize)
            .min())
    }

    /// Most pairwise-disjoint sets.
    pub fn max_set_packing(sets: &[Vec<usize>], limits: &Limits) -> Result<usize> {
        check(limits, sets.len())?;
        let masks = set_masks(sets);
        Ok((0..1u64 << sets.len())
            .filter(|&pick| {
                let mut seen = 0u64;
                (0..sets.len()).filter(|&j| pick >> j & 1 == 1).all(|j| {
                    let clash = seen & masks[j] != 0;
                    seen |= masks[j];
                    !clash
                })
            })
            .map(|pick| pick.count_ones() as usize)
            .max()
            .unwrap_or(0))
    }
}

/// Where a gadget came from; determines the game completely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    pub gadget: &'static str,
    pub source: String,
    pub params: Vec<(&'static str, usize)>,
}

/// The claim a gadget is built to satisfy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExpectedRelation {
    /// Length of the game equals the minimum set cover size (both possibly undefined).
    LengthIsMinSetCover {
        sets: Vec<Vec<usize>>,
        universe: usize,
    },
    /// Width of the game equals the maximum set packing size.
    WidthIsMaxSetPacking { sets: Vec<Vec<usize>> },
    /// A team wins iff it holds more than `k` vertex players, or holds `z`
    /// and its vertex players cover `graph`.
    LargeOrCoverWithZ { graph: SimpleGraph, k: usize },
    /// Players `z` and `t` are symmetric iff `graph` has no vertex cover of size `<= k`.
    SymmetricIffNoSmallCover { graph: SimpleGraph, k: usize },
    /// The game is strong iff `graph` has no independent set of size `>= n/2`.
    StrongIffNoLargeIndependentSet { graph: SimpleGraph },
    /// `game` and `other` are equivalent iff `graph` has no vertex cover of size `<= k`.
    EquivalentIffNoSmallCover {
        graph: SimpleGraph,
        k: usize,
        other: Box<InfluenceGame>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetInstance {
    pub game: InfluenceGame,
    pub provenance: Provenance,
    pub relation: ExpectedRelation,
}

/// Outcome of checking a gadget's relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verification {
    pub holds: bool,
    /// The quantity read off the game.
    pub game_side: String,
    /// The quantity read off the source instance.
    pub source_side: String,
}

fn show(value: impl std::fmt::Display) -> String {
    value.to_string()
}

fn show_opt(value: Option<usize>) -> String {
    value.map_or("none".to_owned(), |v| v.to_string())
}

impl GadgetInstance {
    pub fn verify(&self, limits: &Limits) -> Result<Verification> {
        let game = &self.game;
        let (game_side, source_side) = match &self.relation {
            ExpectedRelation::LengthIsMinSetCover { sets, universe } => (
                show_opt(analysis::measure(
                    game,
                    Measure::Length,
                    Method::Brute,
                    limits,
                )?),
                show_opt(oracle::min_set_cover(sets, *universe, limits)?),
            ),
            ExpectedRelation::WidthIsMaxSetPacking { sets } => (
                show_opt(analysis::measure(
                    game,
                    Measure::Width,
                    Method::Brute,
                    limits,
                )?),
                show_opt(Some(oracle::max_set_packing(sets, limits)?)),
            ),
            ExpectedRelation::LargeOrCoverWithZ { graph, k } => {
                let (agree, total) = check_delta1_teams(game, graph, *k, limits)?;
                (
                    format!("{agree} of {total} teams match"),
                    format!("{total} of {total} teams match"),
                )
            }
            ExpectedRelation::SymmetricIffNoSmallCover { graph, k } => (
                show(analysis::are_symmetric(game, "z", "t", limits)?),
                show(oracle::min_vertex_cover(graph, limits)? > *k),
            ),
            ExpectedRelation::StrongIffNoLargeIndependentSet { graph } => (
                show(analysis::game_property(
                    game,
                    GameProperty::Strong,
                    Method::Brute,
                    limits,
                )?),
                show(2 * oracle::max_independent_set(graph, limits)? < graph.len()),
            ),
            ExpectedRelation::EquivalentIffNoSmallCover { graph, k, other } => (
                show(analysis::equivalent(game, other, limits)?),
                show(oracle::min_vertex_cover(graph, limits)? > *k),
            ),
        };
        Ok(Verification {
            holds: game_side == source_side,
            game_side,
            source_side,
        })
    }
}

/// Teams agreeing with the delta1 success characterisation, and the team count.
fn check_delta1_teams(
    game: &InfluenceGame,
    graph: &SimpleGraph,
    k: usize,
    limits: &Limits,
) -> Result<(u64, u64)> {
    let table = game.winning_table(limits)?;
    // Player position of every source vertex, and of z.
    let vertex_player: Vec<usize> = graph
        .ids()
        .iter()
        .map(|id| game.player_index(&vertex_id(id)))
        .collect::<Result<_>>()?;
    let z = game.player_index("z")?;
    let edges: Vec<u64> = graph
        .edges()
        .iter()
        .map(|&(u, v)| (1u64 << u) | (1u64 << v))
        .collect();
    let mut agree = 0;
    for team in subsets_of(Coalition::full(game.num_players())) {
        let chosen: u64 = (0..graph.len())
            .filter(|&v| team.contains(vertex_player[v]))
            .fold(0, |m, v| m | 1 << v);
        let expected = chosen.count_ones() as usize > k
            || (team.contains(z) && oracle::is_vertex_cover(&edges, chosen));
        agree += u64::from(expected == table[team.0 as usize]);
    }
    Ok((agree, table.len() as u64))
}

fn vertex_id(id: &str) -> String {
    format!("v:{id}")
}

fn describe_sets(sets: &[Vec<usize>], universe: usize) -> String {
    format!("universe 1..={universe}, sets {sets:?}")
}

fn describe_graph(graph: &SimpleGraph) -> String {
    let edges: Vec<String> = graph
        .edges()
        .iter()
        .map(|&(u, v)| format!("{}-{}", graph.ids()[u], graph.ids()[v]))
        .collect();
    format!("vertices {:?}, edges [{}]", graph.ids(), edges.join(", "))
}

fn check_sets(sets: &[Vec<usize>], universe: usize) -> Result<()> {
    if universe == 0 {
        return Err(Error::input("the universe must be non-empty"));
    }
    if sets.is_empty() {
        return Err(Error::input("the set collection must be non-empty"));
    }
    if universe >= 64 {
        return Err(Error::Limit {
            what: "universe size",
            limit: 63,
            actual: universe,
        });
    }
    if let Some(e) = sets.iter().flatten().find(|&&e| e == 0 || e > universe) {
        return Err(Error::input(format!(
            "element {e} is outside the universe 1..={universe}"
        )));
    }
    Ok(())
}

/// Undirected unweighted gadget builder with `u64` labels.
struct Gadget {
    b: GraphBuilder,
}

impl Gadget {
    fn new() -> Self {
        Gadget {
            b: InfluenceGraph::builder(false),
        }
    }

    fn node(&mut self, id: impl Into<String>, label: usize) -> Result<usize> {
        self.b.node(id, label as u64)
    }

    fn edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.b.edge(u, v, 1)
    }

    fn finish<S: AsRef<str>>(self, quota: usize, players: &[S]) -> Result<InfluenceGame> {
        InfluenceGame::new(self.b.build(), quota, players)
    }
}

/// Length gadget from minimum set cover over `{1, …, universe}`.
///
/// Set nodes `y_j` (label `n+1`, the players) touch their elements `t_i`
/// (label 1); every `t_i` touches `x` (label `n`), which touches `m+1` nodes
/// `z_k` (label 1). The quota is `m+n+1`, reached iff the chosen sets cover.
pub fn gen_setcover_length_game(sets: &[Vec<usize>], universe: usize) -> Result<GadgetInstance> {
    check_sets(sets, universe)?;
    let (m, n) = (sets.len(), universe);
    let mut g = Gadget::new();
    let (ys, ts) = set_element_nodes(&mut g, sets, universe, n + 1, 1)?;
    let x = g.node("x", n)?;
    for &t in &ts {
        g.edge(t, x)?;
    }
    for k in 1..=m + 1 {
        let z = g.node(format!("z:{k}"), 1)?;
        g.edge(x, z)?;
    }
    let players = ys;
    Ok(GadgetInstance {
        game: g.finish(m + n + 1, &players)?,
        provenance: Provenance {
            gadget: "setcover",
            source: describe_sets(sets, universe),
            params: vec![("m", m), ("n", n)],
        },
        relation: ExpectedRelation::LengthIsMinSetCover {
            sets: sets.to_vec(),
            universe,
        },
    })
}

/// Declares `y:j` and `t:i` with their incidence edges; returns the `y` ids and `t` indices.
fn set_element_nodes(
    g: &mut Gadget,
    sets: &[Vec<usize>],
    universe: usize,
    y_label: usize,
    t_label: usize,
) -> Result<(Vec<String>, Vec<usize>)> {
    let ys: Vec<String> = (1..=sets.len()).map(|j| format!("y:{j}")).collect();
    let y_nodes: Vec<usize> = ys
        .iter()
        .map(|id| g.node(id.clone(), y_label))
        .collect::<Result<_>>()?;
    let ts: Vec<usize> = (1..=universe)
        .map(|i| g.node(format!("t:{i}"), t_label))
        .collect::<Result<_>>()?;
    for (j, set) in sets.iter().enumerate() {
        let members: BTreeSet<usize> = set.iter().copied().collect();
        for e in members {
            g.edge(y_nodes[j], ts[e - 1])?;
        }
    }
    Ok((ys, ts))
}

/// Width gadget from maximum set packing: the set cover gadget without `x`,
/// with every `t_i` joined to every `z_k` and labelled 2, and quota `m+1`.
pub fn gen_setpacking_width_game(sets: &[Vec<usize>], universe: usize) -> Result<GadgetInstance> {
    check_sets(sets, universe)?;
    let (m, n) = (sets.len(), universe);
    let mut g = Gadget::new();
    let (ys, ts) = set_element_nodes(&mut g, sets, universe, n + 1, 2)?;
    for k in 1..=m + 1 {
        let z = g.node(format!("z:{k}"), 1)?;
        for &t in &ts {
            g.edge(t, z)?;
        }
    }
    Ok(GadgetInstance {
        game: g.finish(m + 1, &ys)?,
        provenance: Provenance {
            gadget: "setpacking",
            source: describe_sets(sets, universe),
            params: vec![("m", m), ("n", n)],
        },
        relation: ExpectedRelation::WidthIsMaxSetPacking {
            sets: sets.to_vec(),
        },
    })
}

/// Node indices of the delta1 graph that the delta2 and delta3 variants extend.
struct DeltaCore {
    g: Gadget,
    x: usize,
    y: usize,
    z: usize,
    s: Vec<usize>,
    players: Vec<String>,
}

/// Vertices `v` (label `m+2`), edge nodes `e` joined to their endpoints and to
/// `y`, every `v` joined to `x`, and `s_1 … s_a` with `a = n+m+4`, each joined
/// to the node returned by `s_hub` besides `x`.
fn delta_core(
    graph: &SimpleGraph,
    k: usize,
    e_label: usize,
    y_label: usize,
    z_label: usize,
) -> Result<DeltaCore> {
    if k > graph.len() {
        return Err(Error::input(format!(
            "k = {k} exceeds |V| = {}",
            graph.len()
        )));
    }
    let (n, m) = (graph.len(), graph.edges().len());
    let mut g = Gadget::new();
    let players: Vec<String> = graph.ids().iter().map(|id| vertex_id(id)).collect();
    let vs: Vec<usize> = players
        .iter()
        .map(|id| g.node(id.clone(), m + 2))
        .collect::<Result<_>>()?;
    let x = g.node("x", k + 1)?;
    let y = g.node("y", y_label)?;
    let z = g.node("z", z_label)?;
    for (j, &(a, b)) in graph.edges().iter().enumerate() {
        let e = g.node(format!("e:{}", j + 1), e_label)?;
        g.edge(e, vs[a])?;
        g.edge(e, vs[b])?;
        g.edge(e, y)?;
    }
    for &v in &vs {
        g.edge(v, x)?;
    }
    let s = (1..=n + m + 4)
        .map(|l| {
            let node = g.node(format!("s:{l}"), 1)?;
            g.edge(x, node)?;
            Ok(node)
        })
        .collect::<Result<_>>()?;
    let mut players = players;
    players.push("z".to_owned());
    Ok(DeltaCore {
        g,
        x,
        y,
        z,
        s,
        players,
    })
}

fn graph_provenance(gadget: &'static str, graph: &SimpleGraph, k: usize) -> Provenance {
    Provenance {
        gadget,
        source: describe_graph(graph),
        params: vec![("k", k)],
    }
}

/// delta1(G, k): a team wins iff it has more than `k` vertices, or `z` plus a vertex cover.
pub fn gen_delta1(graph: &SimpleGraph, k: usize) -> Result<GadgetInstance> {
    Ok(GadgetInstance {
        game: delta1_game(graph, k)?,
        provenance: graph_provenance("delta1", graph, k),
        relation: ExpectedRelation::LargeOrCoverWithZ {
            graph: graph.clone(),
            k,
        },
    })
}

fn delta1_game(graph: &SimpleGraph, k: usize) -> Result<InfluenceGame> {
    let m = graph.edges().len();
    let mut c = delta_core(graph, k, 1, m + 1, 2)?;
    for &s in &c.s {
        c.g.edge(c.y, s)?;
    }
    c.g.edge(c.z, c.y)?;
    let quota = c.s.len();
    c.g.finish(quota, &c.players)
}

/// delta2(G, k): delta1 plus `t` (label 2, a player) and `s` (label 4) joined to `x`,
/// `y` and `t`; quota `a+1`. Players `z` and `t` are symmetric iff `G` has no
/// vertex cover of size `<= k`.
pub fn gen_delta2(graph: &SimpleGraph, k: usize) -> Result<GadgetInstance> {
    let m = graph.edges().len();
    let mut c = delta_core(graph, k, 1, m + 1, 2)?;
    for &s in &c.s {
        c.g.edge(c.y, s)?;
    }
    c.g.edge(c.z, c.y)?;
    let t = c.g.node("t", 2)?;
    let s = c.g.node("s", 4)?;
    c.g.edge(c.x, s)?;
    c.g.edge(c.y, s)?;
    c.g.edge(t, s)?;
    let quota = c.s.len() + 1;
    c.players.push("t".to_owned());
    Ok(GadgetInstance {
        game: c.g.finish(quota, &c.players)?,
        provenance: graph_provenance("delta2", graph, k),
        relation: ExpectedRelation::SymmetricIffNoSmallCover {
            graph: graph.clone(),
            k,
        },
    })
}

/// delta3(G) with `k = n/2`: edge nodes labelled 2, `y` and `z` labelled 1, and a
/// node `t` (label 2) joined to `z`, `y` and every `s_l` in place of `y`;
/// quota `n+m+5`. The game is strong iff `G` has no independent set of size `>= n/2`.
pub fn gen_delta3(graph: &SimpleGraph) -> Result<GadgetInstance> {
    let n = graph.len();
    if n % 2 == 1 {
        return Err(Error::input(format!(
            "delta3 needs an even number of vertices, got {n}"
        )));
    }
    let k = n / 2;
    let mut c = delta_core(graph, k, 2, 1, 1)?;
    let t = c.g.node("t", 2)?;
    c.g.edge(c.z, t)?;
    c.g.edge(c.y, t)?;
    for &s in &c.s {
        c.g.edge(t, s)?;
    }
    let quota = n + graph.edges().len() + 5;
    Ok(GadgetInstance {
        game: c.g.finish(quota, &c.players)?,
        provenance: graph_provenance("delta3", graph, k),
        relation: ExpectedRelation::StrongIffNoLargeIndependentSet {
            graph: graph.clone(),
        },
    })
}

/// The padded graph for `(G, k)`: `G` plus a clique `X` of `n-k-1` vertices, an independent set `Y`
/// of `k+1` vertices joined to all of `X`, and `w` joined to every other
/// vertex. `G` has a vertex cover of size `<= k` iff the padded graph has one of size `<= n`.
/// For `k = n` the clique is empty.
pub fn gen_half_vc_graph(graph: &SimpleGraph, k: usize) -> Result<SimpleGraph> {
    let n = graph.len();
    if n == 0 {
        return Err(Error::input("the graph must have at least one vertex"));
    }
    if k > n {
        return Err(Error::input(format!("k = {k} exceeds |V| = {n}")));
    }
    let x_count = n.saturating_sub(k + 1);
    let mut ids: Vec<String> = graph.ids().iter().map(|id| vertex_id(id)).collect();
    let xs: Vec<usize> = (0..x_count).map(|i| n + i).collect();
    let ys: Vec<usize> = (0..=k).map(|i| n + x_count + i).collect();
    ids.extend((1..=x_count).map(|i| format!("x:{i}")));
    ids.extend((1..=k + 1).map(|i| format!("y:{i}")));
    ids.push("w".to_owned());
    let w = ids.len() - 1;
    let mut edges = graph.edges().to_vec();
    for (a, &u) in xs.iter().enumerate() {
        edges.extend(xs[a + 1..].iter().map(|&v| (u, v)));
        edges.extend(ys.iter().map(|&y| (u, y)));
    }
    edges.extend((0..w).map(|v| (v, w)));
    SimpleGraph::from_indices(ids, &edges)
}

/// `G` plus a vertex `x` joined to every vertex.
pub fn with_universal_vertex(graph: &SimpleGraph) -> SimpleGraph {
    let mut id = "x".to_owned();
    while graph.ids().contains(&id) {
        id.push('\'');
    }
    let mut ids = graph.ids().to_vec();
    ids.push(id);
    let x = graph.len();
    let mut edges = graph.edges().to_vec();
    edges.extend((0..x).map(|v| (v, x)));
    SimpleGraph::from_indices(ids, &edges).expect("fresh vertex keeps the graph simple")
}

/// Outcome of checking the necessary-player game against its input game.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NecessaryPlayerReport {
    /// Whether every team was checked.
    pub exhaustive: bool,
    pub teams_checked: u64,
    /// Winning teams of the extended game that do not contain `x`.
    pub winners_without_x: u64,
    /// Teams `S` of the input where `S ∪ {x}` and `S` disagree.
    pub mismatches_with_x: u64,
    /// One winning team without `x`, if any.
    pub example_without_x: Option<Vec<String>>,
}

impl NecessaryPlayerReport {
    pub fn passed(&self) -> bool {
        self.exhaustive && self.winners_without_x == 0 && self.mismatches_with_x == 0
    }
}

/// Necessary-player extension: the input graph (as directed arcs) plus `x` (label 1), `y` (label
/// `q+1`) and `a_1 … a_{2|V|}` (label 1), with arcs `x → y`, `v → y` for every
/// original node and `y → a_i`; quota `2|V|`, players `N ∪ {x}`.
///
/// The construction follows the published gadget as written. Its intended
/// reading, that the winners are exactly `S ∪ {x}` for winners `S` of the
/// input, is checked on every team up to [`NECESSARY_VALIDATION`] players and
/// reported rather than enforced: a team that alone spreads to `q+1` nodes
/// activates `y` without `x`.
pub fn gen_necessary_player(
    game: &InfluenceGame,
    limits: &Limits,
) -> Result<(InfluenceGame, NecessaryPlayerReport)> {
    let g = game.graph();
    let n = g.len();
    let mut b = InfluenceGraph::builder(true);
    for v in 0..n {
        b.node(g.id(v), g.threshold(v))?;
    }
    for e in g.edges() {
        b.edge(e.from, e.to, e.weight)?;
        if !g.is_directed() {
            b.edge(e.to, e.from, e.weight)?;
        }
    }
    let x = crate::game::fresh_node(&mut b, "x", 1)?;
    let y = crate::game::fresh_node(&mut b, "y", game.quota() as u64 + 1)?;
    b.edge(x, y, 1)?;
    for v in 0..n {
        b.edge(v, y, 1)?;
    }
    for i in 1..=2 * n {
        let a = crate::game::fresh_node(&mut b, &format!("a:{i}"), 1)?;
        b.edge(y, a, 1)?;
    }
    let mut players = game.players().to_vec();
    players.push(x);
    // The extension lists at most |V|+2 <= 2|V| nodes short of the quota range only when |V| = 0.
    let plus = InfluenceGame::from_indices(b.build(), 2 * n, players)?;
    let report = validate_necessary(game, &plus, limits)?;
    Ok((plus, report))
}

fn validate_necessary(
    game: &InfluenceGame,
    plus: &InfluenceGame,
    limits: &Limits,
) -> Result<NecessaryPlayerReport> {
    let n = game.num_players();
    let mut report = NecessaryPlayerReport {
        exhaustive: false,
        teams_checked: 0,
        winners_without_x: 0,
        mismatches_with_x: 0,
        example_without_x: None,
    };
    if n > NECESSARY_VALIDATION.min(limits.max_players) {
        return Ok(report);
    }
    let base = game.winning_table(limits)?;
    let extended = plus.winning_table(limits)?;
    let x = Coalition::singleton(n);
    for s in subsets_of(Coalition::full(n)) {
        if extended[s.0 as usize] {
            report.winners_without_x += 1;
            if report.example_without_x.is_none() {
                report.example_without_x = Some(plus.team_ids(s));
            }
        }
        if extended[s.union(x).0 as usize] != base[s.0 as usize] {
            report.mismatches_with_x += 1;
        }
        report.teams_checked += 2;
    }
    report.exhaustive = true;
    Ok(report)
}

/// `(delta1(G, k), other)` with `other` the unweighted realisation of the weighted game
/// giving weight 1 to each vertex player and 0 to `z`, quota `k+1`. The games
/// are equivalent iff `G` has no vertex cover of size `<= k`.
///
/// For `k = |V|` the weighted game has no winners; `other` then keeps the same
/// graph with quota `|V'|+1`.
pub fn gen_iso_pair(
    graph: &SimpleGraph,
    k: usize,
    limits: &Limits,
) -> Result<(InfluenceGame, InfluenceGame)> {
    let g1 = delta1_game(graph, k)?;
    let names = g1.player_ids();
    let weights: Vec<u64> = names.iter().map(|p| u64::from(p != "z")).collect();
    let weighted = WeightedGame::with_players(k as u64 + 1, weights, names)?;
    let mut g2 = relay_realisation(&weighted, weighted.quota(), limits)?;
    if weighted.quota() > weighted.total_weight() {
        let quota = g2.graph().len() + 1;
        g2 = InfluenceGame::from_indices(g2.graph().clone(), quota, g2.players().to_vec())?;
    }
    Ok((g1, g2))
}

/// [`gen_iso_pair`] wrapped with its relation.
pub fn gen_iso_pair_instance(
    graph: &SimpleGraph,
    k: usize,
    limits: &Limits,
) -> Result<GadgetInstance> {
    let (g1, g2) = gen_iso_pair(graph, k, limits)?;
    Ok(GadgetInstance {
        game: g1,
        provenance: graph_provenance("isopair", graph, k),
        relation: ExpectedRelation::EquivalentIffNoSmallCover {
            graph: graph.clone(),
            k,
            other: Box::new(g2),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lim() -> Limits {
        Limits::default()
    }

    fn holds(inst: &GadgetInstance) -> bool {
        let v = inst.verify(&lim()).unwrap();
        assert!(
            v.holds,
            "{:?}: game {} vs source {}",
            inst.provenance, v.game_side, v.source_side
        );
        v.holds
    }

    fn p2() -> SimpleGraph {
        SimpleGraph::path(2)
    }

    #[test]
    fn oracles_on_classics() {
        let k3 = SimpleGraph::complete(3);
        assert_eq!(oracle::min_vertex_cover(&k3, &lim()).unwrap(), 2);
        assert_eq!(oracle::count_vertex_covers(&k3, &lim()).unwrap(), 4);
        assert_eq!(
            oracle::max_independent_set(&SimpleGraph::cycle(5), &lim()).unwrap(),
            2
        );
        assert_eq!(
            oracle::min_set_cover(&[vec![1, 2], vec![2, 3]], 3, &lim()).unwrap(),
            Some(2)
        );
        assert_eq!(oracle::min_set_cover(&[vec![1]], 2, &lim()).unwrap(), None);
        assert_eq!(
            oracle::max_set_packing(&[vec![1], vec![2], vec![1, 2]], &lim()).unwrap(),
            2
        );
        assert!(oracle::min_vertex_cover(&SimpleGraph::path(21), &lim())
            .unwrap_err()
            .is_limit());
    }

    #[test]
    fn set_cover_gadget() {
        let inst = gen_setcover_length_game(&[vec![1, 2], vec![2, 3]], 3).unwrap();
        assert_eq!(inst.game.quota(), 2 + 3 + 1);
        assert!(holds(&inst));
        let single = gen_setcover_length_game(&[vec![1, 2, 3]], 3).unwrap();
        assert_eq!(
            analysis::measure(&single.game, Measure::Length, Method::Brute, &lim()).unwrap(),
            Some(1)
        );
        let none = gen_setcover_length_game(&[vec![1]], 2).unwrap();
        assert_eq!(
            analysis::measure(&none.game, Measure::Length, Method::Brute, &lim()).unwrap(),
            None
        );
        assert!(holds(&none));
        assert!(gen_setcover_length_game(&[vec![1]], 0).is_err());
        assert!(gen_setcover_length_game(&[vec![4]], 3).is_err());
    }

    #[test]
    fn set_packing_gadget() {
        let inst = gen_setpacking_width_game(&[vec![1], vec![2], vec![1, 2]], 2).unwrap();
        assert_eq!(
            analysis::measure(&inst.game, Measure::Width, Method::Brute, &lim()).unwrap(),
            Some(2)
        );
        assert!(holds(&inst));
        let one = gen_setpacking_width_game(&[vec![1, 2]], 2).unwrap();
        assert_eq!(
            analysis::measure(&one.game, Measure::Width, Method::Brute, &lim()).unwrap(),
            Some(1)
        );
        let dup = gen_setpacking_width_game(&[vec![1], vec![1]], 1).unwrap();
        assert_eq!(
            analysis::measure(&dup.game, Measure::Width, Method::Brute, &lim()).unwrap(),
            Some(1)
        );
    }

    #[test]
    fn delta1_examples() {
        let k3 = SimpleGraph::complete(3);
        let inst = gen_delta1(&k3, 1).unwrap();
        let g = &inst.game;
        assert_eq!(g.quota(), 3 + 3 + 4);
        assert!(!g.is_successful_ids(&["v:0", "z"]).unwrap());
        assert!(g.is_successful_ids(&["v:0", "v:1", "z"]).unwrap());
        assert!(holds(&inst));
        let full = gen_delta1(&k3, 3).unwrap();
        assert!(full
            .game
            .is_successful_ids(&["v:0", "v:1", "v:2", "z"])
            .unwrap());
        assert!(gen_delta1(&k3, 4).is_err());
    }

    #[test]
    fn delta2_examples() {
        let k3 = gen_delta2(&SimpleGraph::complete(3), 1).unwrap();
        assert!(analysis::are_symmetric(&k3.game, "z", "t", &lim()).unwrap());
        assert!(holds(&k3));
        let edge = gen_delta2(&p2(), 1).unwrap();
        assert!(!analysis::are_symmetric(&edge.game, "z", "t", &lim()).unwrap());
        assert!(holds(&edge));
    }

    #[test]
    fn delta3_examples() {
        let k4 = gen_delta3(&SimpleGraph::complete(4)).unwrap();
        assert!(
            analysis::game_property(&k4.game, GameProperty::Strong, Method::Brute, &lim()).unwrap()
        );
        assert!(holds(&k4));
        let c4 = gen_delta3(&SimpleGraph::cycle(4)).unwrap();
        assert!(holds(&c4));
        assert!(gen_delta3(&SimpleGraph::complete(3)).is_err());
    }

    #[test]
    fn half_vertex_cover_graph() {
        let k3 = SimpleGraph::complete(3);
        let g2 = gen_half_vc_graph(&k3, 2).unwrap();
        assert_eq!(g2.len(), 7);
        assert!(oracle::min_vertex_cover(&g2, &lim()).unwrap() <= 3);
        let g1 = gen_half_vc_graph(&k3, 1).unwrap();
        assert_eq!(g1.len(), 7);
        assert!(oracle::min_vertex_cover(&g1, &lim()).unwrap() > 3);
        let single = gen_half_vc_graph(&SimpleGraph::with_size(1, &[]).unwrap(), 0).unwrap();
        assert_eq!(single.len(), 3);
        assert!(oracle::min_vertex_cover(&single, &lim()).unwrap() <= 1);
    }

    #[test]
    fn necessary_player_on_dictator() {
        let dictator =
            InfluenceGame::from_weighted(&WeightedGame::new(1, vec![1, 0, 0]).unwrap()).unwrap();
        let (plus, report) = gen_necessary_player(&dictator, &lim()).unwrap();
        assert!(report.exhaustive);
        assert_eq!(report.mismatches_with_x, 0);
        // Player 1 alone spreads to 5 nodes, reaching q+1 = 5 and activating y.
        assert!(report.winners_without_x > 0);
        let table = plus.winning_table(&lim()).unwrap();
        let one = plus.player_index("1").unwrap();
        for (mask, &win) in table.iter().enumerate() {
            if win {
                assert!(Coalition(mask as u64).contains(one));
            }
        }
    }

    #[test]
    fn necessary_player_on_empty_game() {
        let g = crate::game::fixtures::four_node_game();
        let empty = InfluenceGame::with_all_players(g.graph().clone(), 5).unwrap();
        let (plus, report) = gen_necessary_player(&empty, &lim()).unwrap();
        assert!(report.passed());
        assert!(plus.winning_table(&lim()).unwrap().iter().all(|&w| !w));
    }

    #[test]
    fn necessary_player_on_four_node_game_reports() {
        let (_, report) =
            gen_necessary_player(&crate::game::fixtures::four_node_game(), &lim()).unwrap();
        assert_eq!(report.teams_checked, 32);
        assert_eq!(report.mismatches_with_x, 0);
    }

    #[test]
    fn iso_pairs() {
        let k3 = gen_iso_pair_instance(&SimpleGraph::complete(3), 1, &lim()).unwrap();
        assert!(holds(&k3));
        let (a, b) = gen_iso_pair(&SimpleGraph::complete(3), 1, &lim()).unwrap();
        assert!(analysis::equivalent(&a, &b, &lim()).unwrap());
        let (a, b) = gen_iso_pair(&p2(), 1, &lim()).unwrap();
        assert!(!analysis::equivalent(&a, &b, &lim()).unwrap());
        let (a, b) = gen_iso_pair(&p2(), 2, &lim()).unwrap();
        assert!(!analysis::equivalent(&a, &b, &lim()).unwrap());
    }

    #[test]
    fn banzhaf_counts_vertex_covers() {
        let g = SimpleGraph::cycle(5);
        let game = InfluenceGame::vertex_cover_game(&with_universal_vertex(&g));
        let eta = analysis::power(&game, "x", &lim()).unwrap().banzhaf_value;
        assert_eq!(
            eta,
            (oracle::count_vertex_covers(&g, &lim()).unwrap() - 1).into()
        );
    }

    #[test]
    fn generation_is_deterministic() {
        let a = gen_delta3(&SimpleGraph::cycle(4)).unwrap();
        let b = gen_delta3(&SimpleGraph::cycle(4)).unwrap();
        assert_eq!(a, b);
    }
}
