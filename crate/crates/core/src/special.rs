//! Polynomial algorithms for maximum influence (`f = d_G`) and minimum
//! influence (`f ≡ 1`) games on undirected unweighted graphs.
//!
//! Under maximum influence a node outside the team activates exactly when all
//! its neighbours are in the team, so `F(X)` is `X` plus the vertices isolated
//! by deleting `X`; with quota `|V|` the successful teams are the vertex
//! covers. Under minimum influence one seed activates its whole component.

use crate::error::{Error, Result};
use crate::forms::{Measure, WeightedGame};
use crate::game::InfluenceGame;
use crate::graph::SimpleGraph;

/// The most specific family a game belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyTag {
    MaxInfluenceFullSpread,
    MaxInfluence,
    MinInfluence,
    General,
}

impl FamilyTag {
    pub fn name(self) -> &'static str {
        match self {
            FamilyTag::MaxInfluenceFullSpread => "max_influence_full_spread",
            FamilyTag::MaxInfluence => "max_influence",
            FamilyTag::MinInfluence => "min_influence",
            FamilyTag::General => "general",
        }
    }
}

/// Game-level decision properties.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GameProperty {
    Proper,
    Strong,
    Decisive,
}

impl GameProperty {
    pub fn name(self) -> &'static str {
        match self {
            GameProperty::Proper => "proper",
            GameProperty::Strong => "strong",
            GameProperty::Decisive => "decisive",
        }
    }
}

impl std::str::FromStr for GameProperty {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "proper" => Ok(GameProperty::Proper),
            "strong" => Ok(GameProperty::Strong),
            "decisive" => Ok(GameProperty::Decisive),
            _ => Err(Error::input(format!("unknown game property `{s}`"))),
        }
    }
}

fn undirected_unweighted(game: &InfluenceGame) -> bool {
    !game.graph().is_directed() && game.graph().is_unweighted()
}

pub fn is_max_influence(game: &InfluenceGame) -> bool {
    let g = game.graph();
    undirected_unweighted(game) && (0..g.len()).all(|v| g.threshold(v) == g.degree(v) as u64)
}

pub fn is_max_influence_full_spread(game: &InfluenceGame) -> bool {
    is_max_influence(game) && has_all_players(game) && game.quota() == game.graph().len()
}

pub fn is_min_influence(game: &InfluenceGame) -> bool {
    let g = game.graph();
    undirected_unweighted(game) && (0..g.len()).all(|v| g.threshold(v) == 1)
}

fn has_all_players(game: &InfluenceGame) -> bool {
    game.num_players() == game.graph().len()
}

pub fn classify(game: &InfluenceGame) -> FamilyTag {
    if is_max_influence_full_spread(game) {
        FamilyTag::MaxInfluenceFullSpread
    } else if is_max_influence(game) {
        FamilyTag::MaxInfluence
    } else if is_min_influence(game) {
        FamilyTag::MinInfluence
    } else {
        FamilyTag::General
    }
}

/// One connected component: its size and how many players it holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub size: usize,
    pub players: usize,
    pub nodes: Vec<String>,
}

/// Connected components of an undirected game graph with player counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentProfile {
    /// Ordered by smallest node index.
    pub components: Vec<Component>,
    /// Total size of the components that hold at least one player.
    pub player_weight: usize,
    /// Number of isolated vertices.
    pub isolated: usize,
}

impl ComponentProfile {
    pub fn of(game: &InfluenceGame) -> Result<Self> {
        let simple = game.graph().to_simple()?;
        let mut is_player = vec![false; simple.len()];
        for &p in game.players() {
            is_player[p] = true;
        }
        let components: Vec<Component> = simple
            .components()
            .into_iter()
            .map(|c| Component {
                size: c.len(),
                players: c.iter().filter(|&&v| is_player[v]).count(),
                nodes: c.iter().map(|&v| simple.ids()[v].clone()).collect(),
            })
            .collect();
        Ok(ComponentProfile {
            player_weight: components
                .iter()
                .filter(|c| c.players > 0)
                .map(|c| c.size)
                .sum(),
            isolated: components.iter().filter(|c| c.size == 1).count(),
            components,
        })
    }

    /// Components holding at least one player.
    pub fn with_players(&self) -> impl Iterator<Item = &Component> {
        self.components.iter().filter(|c| c.players > 0)
    }
}

/// Subset sums of `sizes` reachable up to `cap`.
fn reachable_sums(sizes: impl IntoIterator<Item = usize>, cap: usize) -> Vec<bool> {
    let mut reach = vec![false; cap + 1];
    reach[0] = true;
    for s in sizes {
        for t in (s..=cap).rev() {
            if reach[t - s] {
                reach[t] = true;
            }
        }
    }
    reach
}

fn require(ok: bool, expected: &'static str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::WrongFamily { expected })
    }
}

/// Proper, strong or decisive for a full-spread maximum-influence game.
///
/// Winners are the vertex covers. Two complementary covers exist iff the graph
/// is bipartite, so the game is proper iff some component has an odd cycle.
/// A losing team whose complement also loses exists iff two vertex-disjoint
/// edges exist, so the game is strong iff all edges form one star or one triangle.
pub fn max_game_property(game: &InfluenceGame, kind: GameProperty) -> Result<bool> {
    require(
        is_max_influence_full_spread(game),
        "max_influence_full_spread",
    )?;
    let g = game.graph().to_simple()?;
    let proper = || {
        g.components()
            .iter()
            .any(|c| !g.is_bipartite_component(c[0]))
    };
    let strong = || {
        let with_edges: Vec<Vec<usize>> =
            g.components().into_iter().filter(|c| c.len() > 1).collect();
        match with_edges.as_slice() {
            [] => true,
            [c] => is_star(&g, c) || is_triangle(&g, c),
            _ => false,
        }
    };
    Ok(match kind {
        GameProperty::Proper => proper(),
        GameProperty::Strong => strong(),
        GameProperty::Decisive => proper() && strong(),
    })
}

fn component_edges(g: &SimpleGraph, comp: &[usize]) -> usize {
    comp.iter().map(|&v| g.degree(v)).sum::<usize>() / 2
}

fn is_star(g: &SimpleGraph, comp: &[usize]) -> bool {
    let k = comp.len();
    component_edges(g, comp) == k - 1 && comp.iter().any(|&v| g.degree(v) == k - 1)
}

fn is_triangle(g: &SimpleGraph, comp: &[usize]) -> bool {
    comp.len() == 3 && component_edges(g, comp) == 3
}

/// Width of a full-spread maximum-influence game.
///
/// Isolated vertices self-activate, so without edges every team wins. Otherwise
/// `V` minus both ends of an edge loses while every `(n-1)`-team is a cover.
pub fn max_width_full_spread(game: &InfluenceGame) -> Result<Option<usize>> {
    require(
        is_max_influence_full_spread(game),
        "max_influence_full_spread",
    )?;
    let g = game.graph();
    if g.edges().is_empty() {
        Ok(None)
    } else {
        Ok(Some(g.len() - 2))
    }
}

/// Whether some `alpha` vertices can be deleted from `graph` without leaving
/// an isolated vertex. The graph must have none to begin with.
pub fn can_remove_without_isolating(graph: &SimpleGraph, alpha: usize) -> Result<bool> {
    if let Some(v) = (0..graph.len()).find(|&v| graph.degree(v) == 0) {
        return Err(Error::input(format!(
            "vertex `{}` is isolated",
            graph.ids()[v]
        )));
    }
    let sizes: Vec<usize> = graph.components().iter().map(Vec::len).collect();
    Ok(removable_from_sizes(&sizes, alpha))
}

/// Feasibility from component sizes (each at least 2).
///
/// A connected component of size `w` can lose any `β <= w-2` vertices while
/// staying connected (peel leaves of a spanning tree), or all `w`, but never
/// exactly `w-1`. When every size is 2 the reachable totals are the even
/// numbers up to `n`. Otherwise pick a component of size `w >= 3`: its
/// choices `0..=w-2` fill every gap of width one between the totals of the
/// other components, so every `a <= n` except `n-1` is reachable, and `n-1`
/// never is since it leaves a single vertex.
pub fn removable_from_sizes(sizes: &[usize], alpha: usize) -> bool {
    let n: usize = sizes.iter().sum();
    if alpha > n {
        false
    } else if sizes.iter().all(|&w| w == 2) {
        alpha.is_multiple_of(2)
    } else {
        alpha + 1 != n
    }
}

/// Width of a maximum-influence game with `N = V` and any quota.
///
/// With `n0` isolated vertices (always active), a team of `a` non-isolated
/// vertices plus all isolated ones reaches `n0 + a + i` nodes, where `i`
/// counts the vertices it isolates. Every losing team grows into one that
/// isolates nothing, so the width is `n0 + a` for the largest feasible
/// `a <= q - 1 - n0`, and undefined when `q <= n0`.
pub fn max_width(game: &InfluenceGame) -> Result<Option<usize>> {
    require(
        is_max_influence(game) && has_all_players(game),
        "max_influence with N = V",
    )?;
    let g = game.graph().to_simple()?;
    let profile = ComponentProfile::of(game)?;
    let n0 = profile.isolated;
    let q = game.quota();
    if q <= n0 {
        return Ok(None);
    }
    let sizes: Vec<usize> = profile
        .components
        .iter()
        .map(|c| c.size)
        .filter(|&w| w >= 2)
        .collect();
    let budget = (q - 1 - n0).min(g.len() - n0);
    let alpha = (0..=budget)
        .rev()
        .find(|&a| removable_from_sizes(&sizes, a))
        .expect("alpha = 0 is always feasible");
    Ok(Some(n0 + alpha))
}

/// Length or width of a minimum-influence game.
///
/// Length takes the largest player-holding components until their total
/// reaches `q`. Width is a knapsack: maximise the players of a component set
/// whose total size stays below `q`.
pub fn min_measure(game: &InfluenceGame, kind: Measure) -> Result<Option<usize>> {
    require(is_min_influence(game), "min_influence")?;
    let profile = ComponentProfile::of(game)?;
    let q = game.quota();
    match kind {
        Measure::Length => {
            let mut sizes: Vec<usize> = profile.with_players().map(|c| c.size).collect();
            sizes.sort_unstable_by(|a, b| b.cmp(a));
            let mut total = 0;
            for (count, s) in std::iter::once(0).chain(sizes).enumerate() {
                total += s;
                if total >= q {
                    return Ok(Some(count));
                }
            }
            Ok(None)
        }
        Measure::Width => {
            if q == 0 {
                return Ok(None);
            }
            let cap = q - 1;
            let mut best: Vec<Option<usize>> = vec![None; cap + 1];
            best[0] = Some(0);
            for c in profile.with_players() {
                for t in (c.size..=cap).rev() {
                    if let Some(b) = best[t - c.size] {
                        best[t] = best[t].max(Some(b + c.players));
                    }
                }
            }
            Ok(best.into_iter().flatten().max())
        }
        Measure::SLength | Measure::SWidth => {
            let n = game.num_players();
            crate::forms::derive_measure(
                kind,
                n,
                || min_measure(game, Measure::Length),
                || min_measure(game, Measure::Width),
            )
        }
    }
}

/// Proper, strong or decisive for a minimum-influence game.
///
/// Components without players never activate and are ignored. Strong iff
/// `w_N - a_max >= q`, with `a_max` the largest component-size sum below `q`.
/// Proper fails iff a team and its complement both win: both can touch every
/// component with two or more players (`B`); the single-player components (`A`)
/// must be split, so with `q' = q - w_B` it fails iff `w_B >= q` or the
/// smallest `A`-sum `a_min >= q'` leaves `w_A - a_min >= q'`.
pub fn min_game_property(game: &InfluenceGame, kind: GameProperty) -> Result<bool> {
    require(is_min_influence(game), "min_influence")?;
    let profile = ComponentProfile::of(game)?;
    let q = game.quota();
    let strong = || {
        if q == 0 {
            return true;
        }
        let reach = reachable_sums(profile.with_players().map(|c| c.size), q - 1);
        let alpha_max = (0..q).rev().find(|&t| reach[t]).expect("0 is reachable");
        profile.player_weight - alpha_max >= q
    };
    let proper = || {
        let w_b: usize = profile
            .with_players()
            .filter(|c| c.players > 1)
            .map(|c| c.size)
            .sum();
        if w_b >= q {
            return false;
        }
        let q_rest = q - w_b;
        let a: Vec<usize> = profile
            .with_players()
            .filter(|c| c.players == 1)
            .map(|c| c.size)
            .collect();
        let w_a: usize = a.iter().sum();
        let reach = reachable_sums(a, w_a);
        match (q_rest..=w_a).find(|&t| reach[t]) {
            Some(alpha_min) => w_a - alpha_min < q_rest,
            None => true,
        }
    };
    Ok(match kind {
        GameProperty::Proper => proper(),
        GameProperty::Strong => strong(),
        GameProperty::Decisive => proper() && strong(),
    })
}

/// The weighted game `[q; w_1, …, w_k]` over the player-holding components.
///
/// Each weighted player is named after the first player of its component. A
/// quota beyond the total weight is lowered to `w + 1`, which has the same
/// (empty) winning family.
pub fn min_reduced_weighted(game: &InfluenceGame) -> Result<WeightedGame> {
    require(is_min_influence(game), "min_influence")?;
    let profile = ComponentProfile::of(game)?;
    let player_set: std::collections::HashSet<String> = game.player_ids().into_iter().collect();
    let mut weights = Vec::new();
    let mut names = Vec::new();
    for c in profile.with_players() {
        weights.push(c.size as u64);
        let first = c
            .nodes
            .iter()
            .find(|id| player_set.contains(*id))
            .expect("component holds a player");
        names.push(first.clone());
    }
    let total: u64 = weights.iter().sum();
    let quota = (game.quota() as u64).min(total + 1);
    WeightedGame::with_players(quota, weights, names)
}
