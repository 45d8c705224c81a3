//! Influence games and the constructions that realise other games as influence games.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::coalition::Coalition;
use crate::error::{Error, Result};
use crate::forms::{player_remap, CombineMode, ExplicitGame, FamilyKind, Measure, WeightedGame};
use crate::graph::{GraphBuilder, InfluenceGraph, SimpleGraph};
use crate::limits::Limits;
use crate::spread::Spreader;

/// Teams drawn when a combined game is too large to validate exhaustively.
const SAMPLED_TEAMS: usize = 512;

/// `(G, w, f, q, N)`: a team `X ⊆ N` is successful iff `|F(X)| >= q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InfluenceGame {
    graph: InfluenceGraph,
    quota: usize,
    players: Vec<usize>,
}

impl InfluenceGame {
    /// Validates `0 <= q <= |V|+1` and that the players are distinct declared nodes.
    pub fn new<S: AsRef<str>>(graph: InfluenceGraph, quota: usize, players: &[S]) -> Result<Self> {
        let players = graph.indices_of(players)?;
        InfluenceGame::from_indices(graph, quota, players)
    }

    pub fn from_indices(graph: InfluenceGraph, quota: usize, players: Vec<usize>) -> Result<Self> {
        if quota > graph.len() + 1 {
            return Err(Error::invariant(
                "quota must satisfy 0 <= q <= |V|+1",
                format!("q = {quota}, |V| = {}", graph.len()),
            ));
        }
        let mut seen = HashSet::new();
        for &p in &players {
            if p >= graph.len() {
                return Err(Error::input(format!("player index {p} is not a node")));
            }
            if !seen.insert(p) {
                return Err(Error::invariant(
                    "duplicate player id",
                    format!("`{}` is listed twice", graph.id(p)),
                ));
            }
        }
        if players.len() > crate::coalition::MAX_PLAYERS {
            return Err(Error::Limit {
                what: "players",
                limit: crate::coalition::MAX_PLAYERS,
                actual: players.len(),
            });
        }
        Ok(InfluenceGame {
            graph,
            quota,
            players,
        })
    }

    /// Every node is a player.
    pub fn with_all_players(graph: InfluenceGraph, quota: usize) -> Result<Self> {
        let players = (0..graph.len()).collect();
        InfluenceGame::from_indices(graph, quota, players)
    }

    /// Vertex cover game of `G`: every node a player with threshold equal to its degree, quota `|V|`. Its successful teams are the vertex covers of `G`.
    pub fn vertex_cover_game(graph: &SimpleGraph) -> InfluenceGame {
        let g = InfluenceGraph::from_simple(graph, |v| graph.degree(v) as u64);
        InfluenceGame::with_all_players(g, graph.len()).expect("quota |V| is in range")
    }

    /// Maximum influence: thresholds equal degrees.
    pub fn max_influence<S: AsRef<str>>(
        graph: &SimpleGraph,
        quota: usize,
        players: &[S],
    ) -> Result<Self> {
        let g = InfluenceGraph::from_simple(graph, |v| graph.degree(v) as u64);
        InfluenceGame::new(g, quota, players)
    }

    /// Minimum influence: every threshold is 1.
    pub fn min_influence<S: AsRef<str>>(
        graph: &SimpleGraph,
        quota: usize,
        players: &[S],
    ) -> Result<Self> {
        let g = InfluenceGraph::from_simple(graph, |_| 1);
        InfluenceGame::new(g, quota, players)
    }

    pub fn graph(&self) -> &InfluenceGraph {
        &self.graph
    }

    pub fn quota(&self) -> usize {
        self.quota
    }

    /// Node index of every player, in player order.
    pub fn players(&self) -> &[usize] {
        &self.players
    }

    pub fn num_players(&self) -> usize {
        self.players.len()
    }

    pub fn player_id(&self, player: usize) -> &str {
        self.graph.id(self.players[player])
    }

    pub fn player_ids(&self) -> Vec<String> {
        self.players
            .iter()
            .map(|&v| self.graph.id(v).to_owned())
            .collect()
    }

    /// Position of a player id in the player order.
    pub fn player_index(&self, id: &str) -> Result<usize> {
        let node = self
            .graph
            .index_of(id)
            .ok_or_else(|| Error::input(format!("unknown node `{id}`")))?;
        self.players
            .iter()
            .position(|&p| p == node)
            .ok_or_else(|| Error::input(format!("`{id}` is not a player and may not be seeded")))
    }

    pub fn team<S: AsRef<str>>(&self, ids: &[S]) -> Result<Coalition> {
        ids.iter().try_fold(Coalition::EMPTY, |acc, id| {
            Ok(acc.with(self.player_index(id.as_ref())?))
        })
    }

    pub fn team_ids(&self, team: Coalition) -> Vec<String> {
        team.members()
            .map(|i| self.player_id(i).to_owned())
            .collect()
    }

    /// `|F(X)|` of a team.
    pub fn spread_size(&self, team: Coalition) -> usize {
        self.evaluator().spread_size(team)
    }

    pub fn is_successful(&self, team: Coalition) -> bool {
        self.spread_size(team) >= self.quota
    }

    pub fn is_successful_ids<S: AsRef<str>>(&self, ids: &[S]) -> Result<bool> {
        Ok(self.is_successful(self.team(ids)?))
    }

    /// A reusable success tester; keep one per thread in hot loops.
    pub fn evaluator(&self) -> Evaluator<'_> {
        Evaluator {
            game: self,
            spreader: Spreader::new(&self.graph),
        }
    }

    /// Success of every team, indexed by coalition mask; enumerates `2^n` teams in parallel.
    pub fn winning_table(&self, limits: &Limits) -> Result<Vec<bool>> {
        let n = self.num_players();
        limits.check_players(n)?;
        Ok((0..1u64 << n)
            .into_par_iter()
            .map_init(|| self.evaluator(), |ev, mask| ev.wins(Coalition(mask)))
            .collect())
    }

    /// The same simple game as its minimal winning family, with the player ids as players.
    pub fn to_explicit(&self, limits: &Limits) -> Result<ExplicitGame> {
        let table = self.winning_table(limits)?;
        let family = minimal_from_table(&table);
        ExplicitGame::from_masks(self.player_ids(), family, FamilyKind::MinimalWinning)
    }

    /// Realises a minimal winning family as an unweighted influence game.
    ///
    /// With `s` the sLength of the game, every minimal winner `X` gets
    /// `s - |X|` extra nodes of threshold `|X|` fed by the members of `X`, and
    /// the quota is `s`. An empty family becomes quota `|V|+1`; a family
    /// containing the empty coalition becomes quota 0.
    pub fn from_minimal_winning(game: &ExplicitGame, limits: &Limits) -> Result<InfluenceGame> {
        let minimal = game.minimal_winning();
        let mut builder = InfluenceGraph::builder(true);
        let players: Vec<usize> = game
            .players()
            .iter()
            .map(|p| builder.node(p.clone(), 1))
            .collect::<Result<_>>()?;
        let family = minimal.family();
        if family.is_empty() {
            let graph = builder.build();
            let quota = graph.len() + 1;
            return InfluenceGame::from_indices(graph, quota, players);
        }
        if family.iter().any(|c| c.is_empty()) {
            return InfluenceGame::from_indices(builder.build(), 0, players);
        }
        let s = minimal
            .measure(Measure::SLength, limits)?
            .expect("a non-empty family has an sLength");
        for c in family {
            let label = game.names(*c).join("+");
            for j in 0..s - c.len() {
                let node =
                    fresh_node(&mut builder, &format!("gadget:{label}:{j}"), c.len() as u64)?;
                for i in c.members() {
                    builder.edge(players[i], node, 1)?;
                }
            }
        }
        InfluenceGame::from_indices(builder.build(), s, players)
    }

    /// Weighted realisation of `[q; w]`: players feed one node of threshold `q`
    /// with arcs of weight `w_i`, which feeds `n` sinks; the quota is `n+1`.
    pub fn from_weighted(game: &WeightedGame) -> Result<InfluenceGame> {
        let n = game.num_players();
        let mut builder = InfluenceGraph::builder(true);
        let players = player_nodes(&mut builder, game.players())?;
        let central = fresh_node(&mut builder, "central", game.quota())?;
        for (&p, &w) in players.iter().zip(game.weights()) {
            if w > 0 {
                builder.edge(p, central, w)?;
            }
        }
        for k in 0..n {
            let sink = fresh_node(&mut builder, &format!("sink:{k}"), 1)?;
            builder.edge(central, sink, 1)?;
        }
        InfluenceGame::from_indices(builder.build(), n + 1, players)
    }

    /// Unweighted realisation of `[q; w]`: player `i` feeds `w_i` relay nodes,
    /// all relays feed a node of threshold `q`, which feeds `n + w(N)` sinks;
    /// the quota is `n + w(N)`. Requires `q <= w(N)`.
    pub fn from_weighted_unweighted(game: &WeightedGame, limits: &Limits) -> Result<InfluenceGame> {
        let total = game.total_weight();
        if game.quota() > total {
            return Err(Error::invariant(
                "unweighted construction requires q <= w(N)",
                format!("q = {}, w(N) = {total}", game.quota()),
            ));
        }
        relay_realisation(game, game.quota(), limits)
    }

    /// Union or intersection of two influence games over the same players.
    ///
    /// Each input is unrolled into layers `F^0, f^1, F^1, …, f^m, F^m` (with
    /// `m` its node count) so that `F^i` holds exactly the `i`-th spread round.
    /// The last layer feeds a node with the input's quota as threshold; both
    /// such nodes feed `x` (threshold 1 for union, 2 for intersection), which
    /// feeds a sink one node larger than the rest of the graph. The quota is
    /// the sink size, so a team wins iff it activates `x`.
    ///
    /// The result is checked against both inputs on every team up to
    /// `limits.combine_validation` players and on seeded samples beyond.
    pub fn combine(
        &self,
        other: &InfluenceGame,
        mode: CombineMode,
        limits: &Limits,
    ) -> Result<InfluenceGame> {
        let my_ids = self.player_ids();
        let remap = player_remap(&my_ids, &other.player_ids())?;
        let n = my_ids.len();
        let mut builder = InfluenceGraph::builder(true);
        let players = player_nodes(&mut builder, &my_ids)?;
        // Player node of every input player, in that input's player order.
        let other_players: Vec<usize> = {
            let mut by_position = vec![0; n];
            for (j, &i) in remap.iter().enumerate() {
                by_position[j] = players[i];
            }
            by_position
        };
        let q1 = unroll(&mut builder, self, "g1", &players)?;
        let q2 = unroll(&mut builder, other, "g2", &other_players)?;
        let x_label = match mode {
            CombineMode::Union => 1,
            CombineMode::Intersection => 2,
        };
        let x = fresh_node(&mut builder, "x", x_label)?;
        builder.edge(q1, x, 1)?;
        builder.edge(q2, x, 1)?;
        let sink_size = builder.len();
        for k in 0..sink_size {
            let sink = fresh_node(&mut builder, &format!("sink:{k}"), 1)?;
            builder.edge(x, sink, 1)?;
        }
        let combined = InfluenceGame::from_indices(builder.build(), sink_size, players)?;
        combined.validate_combination(self, other, &remap, mode, limits)?;
        Ok(combined)
    }

    fn validate_combination(
        &self,
        g1: &InfluenceGame,
        g2: &InfluenceGame,
        remap: &[usize],
        mode: CombineMode,
        limits: &Limits,
    ) -> Result<()> {
        let n = self.num_players();
        let translate =
            |team: Coalition| Coalition::from_indices((0..n).filter(|&j| team.contains(remap[j])));
        let check = |(ev, e1, e2): &mut (Evaluator, Evaluator, Evaluator), team: Coalition| {
            let a = e1.wins(team);
            let b = e2.wins(translate(team));
            let expected = match mode {
                CombineMode::Union => a || b,
                CombineMode::Intersection => a && b,
            };
            if ev.wins(team) == expected {
                Ok(())
            } else {
                Err(Error::Validation(format!(
                    "combined game disagrees with its inputs on team {:?}",
                    self.team_ids(team)
                )))
            }
        };
        let init = || (self.evaluator(), g1.evaluator(), g2.evaluator());
        if n <= limits.combine_validation.min(63) {
            (0..1u64 << n)
                .into_par_iter()
                .try_for_each_init(init, |evs, mask| check(evs, Coalition(mask)))
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x1f_2e_3d);
            let full = Coalition::full(n).0;
            let mut evs = init();
            check(&mut evs, Coalition::EMPTY)?;
            check(&mut evs, Coalition::full(n))?;
            (0..SAMPLED_TEAMS)
                .try_for_each(|_| check(&mut evs, Coalition(rng.random::<u64>() & full)))
        }
    }

    /// Union or intersection of two weighted games as one weighted influence game.
    ///
    /// Players feed a node of threshold `q_1` and one of threshold `q_2` with
    /// arcs of their respective weights; both feed `x`, which feeds `n` sinks.
    /// The quota is `n+2` for a union and `n+3` for an intersection.
    pub fn combine_weighted(
        w1: &WeightedGame,
        w2: &WeightedGame,
        mode: CombineMode,
    ) -> Result<InfluenceGame> {
        let remap = player_remap(w1.players(), w2.players())?;
        let n = w1.num_players();
        let mut builder = InfluenceGraph::builder(true);
        let players = player_nodes(&mut builder, w1.players())?;
        let q1 = fresh_node(&mut builder, "q1", w1.quota())?;
        let q2 = fresh_node(&mut builder, "q2", w2.quota())?;
        for (i, &p) in players.iter().enumerate() {
            if w1.weights()[i] > 0 {
                builder.edge(p, q1, w1.weights()[i])?;
            }
        }
        for (j, &w) in w2.weights().iter().enumerate() {
            if w > 0 {
                builder.edge(players[remap[j]], q2, w)?;
            }
        }
        let (x_label, quota) = match mode {
            CombineMode::Union => (1, n + 2),
            CombineMode::Intersection => (2, n + 3),
        };
        let x = fresh_node(&mut builder, "x", x_label)?;
        builder.edge(q1, x, 1)?;
        builder.edge(q2, x, 1)?;
        for k in 0..n {
            let sink = fresh_node(&mut builder, &format!("sink:{k}"), 1)?;
            builder.edge(x, sink, 1)?;
        }
        InfluenceGame::from_indices(builder.build(), quota, players)
    }
}

/// Reusable spread evaluator bound to one game.
pub struct Evaluator<'g> {
    game: &'g InfluenceGame,
    spreader: Spreader<'g>,
}

impl Evaluator<'_> {
    pub fn spread_size(&mut self, team: Coalition) -> usize {
        let players = &self.game.players;
        self.spreader.run(team.members().map(|i| players[i]))
    }

    pub fn wins(&mut self, team: Coalition) -> bool {
        self.spread_size(team) >= self.game.quota
    }
}

/// Minimal winning masks of a success table.
pub(crate) fn minimal_from_table(table: &[bool]) -> Vec<Coalition> {
    (0..table.len() as u64)
        .map(Coalition)
        .filter(|&c| table[c.0 as usize] && c.members().all(|i| !table[c.without(i).0 as usize]))
        .collect()
}

/// Relay graph for `[q; w]` with an explicit central threshold.
pub(crate) fn relay_realisation(
    game: &WeightedGame,
    central_threshold: u64,
    limits: &Limits,
) -> Result<InfluenceGame> {
    let n = game.num_players();
    let total = game.total_weight();
    if total > limits.weight_budget {
        return Err(Error::Limit {
            what: "total weight",
            limit: limits.weight_budget as usize,
            actual: total as usize,
        });
    }
    let mut builder = InfluenceGraph::builder(true);
    let players = player_nodes(&mut builder, game.players())?;
    let central = fresh_node(&mut builder, "central", central_threshold)?;
    for (i, (&p, &w)) in players.iter().zip(game.weights()).enumerate() {
        for j in 0..w {
            let relay = fresh_node(&mut builder, &format!("relay:{i}:{j}"), 1)?;
            builder.edge(p, relay, 1)?;
            builder.edge(relay, central, 1)?;
        }
    }
    let sinks = n + total as usize;
    for k in 0..sinks {
        let sink = fresh_node(&mut builder, &format!("sink:{k}"), 1)?;
        builder.edge(central, sink, 1)?;
    }
    InfluenceGame::from_indices(builder.build(), sinks, players)
}

/// Declares one threshold-1 node per player id.
fn player_nodes(builder: &mut GraphBuilder, ids: &[String]) -> Result<Vec<usize>> {
    ids.iter().map(|id| builder.node(id.clone(), 1)).collect()
}

/// Declares a node named `base`, priming the name until it is unused.
pub(crate) fn fresh_node(builder: &mut GraphBuilder, base: &str, threshold: u64) -> Result<usize> {
    let mut id = base.to_owned();
    while builder.contains(&id) {
        id.push('\'');
    }
    builder.node(id, threshold)
}

/// Adds the layered copy of `game` fed by `players` (its player order) and
/// returns the node with the game's quota as threshold.
fn unroll(
    builder: &mut GraphBuilder,
    game: &InfluenceGame,
    tag: &str,
    players: &[usize],
) -> Result<usize> {
    let g = game.graph();
    let m = g.len();
    let mut prev: Vec<usize> = (0..m)
        .map(|v| fresh_node(builder, &format!("{tag}:F0:{}", g.id(v)), 1))
        .collect::<Result<_>>()?;
    for (j, &node) in game.players().iter().enumerate() {
        builder.edge(players[j], prev[node], 1)?;
    }
    for round in 1..=m {
        let inner: Vec<usize> = (0..m)
            .map(|v| {
                fresh_node(
                    builder,
                    &format!("{tag}:f{round}:{}", g.id(v)),
                    g.threshold(v),
                )
            })
            .collect::<Result<_>>()?;
        let outer: Vec<usize> = (0..m)
            .map(|v| fresh_node(builder, &format!("{tag}:F{round}:{}", g.id(v)), 1))
            .collect::<Result<_>>()?;
        for u in 0..m {
            for &(v, w) in g.out_arcs(u) {
                builder.edge(prev[u], inner[v], w)?;
            }
            builder.edge(prev[u], outer[u], 1)?;
            builder.edge(inner[u], outer[u], 1)?;
        }
        prev = outer;
    }
    let quota = fresh_node(builder, &format!("{tag}:quota"), game.quota() as u64)?;
    for &v in &prev {
        builder.edge(v, quota, 1)?;
    }
    Ok(quota)
}

/// All teams of an `n`-player game, in mask order.
#[cfg(test)]
pub(crate) fn all_teams(n: usize) -> impl Iterator<Item = Coalition> {
    crate::coalition::subsets_of(Coalition::full(n))
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    fn lim() -> Limits {
        Limits::default()
    }

    fn winners(game: &InfluenceGame) -> Vec<bool> {
        game.winning_table(&lim()).unwrap()
    }

    #[test]
    fn four_node_game_success() {
        let g = four_node_game();
        assert!(g.is_successful_ids(&["a"]).unwrap());
        assert!(!g.is_successful_ids(&["c", "d"]).unwrap());
        assert!(g.is_successful_ids(&["z"]).is_err());
    }

    #[test]
    fn non_players_may_not_be_seeded() {
        let g = InfluenceGame::new(four_node_graph(), 2, &["a", "b"]).unwrap();
        assert!(g.is_successful_ids(&["c"]).is_err());
    }

    #[test]
    fn quota_zero_makes_empty_team_win() {
        let g = InfluenceGame::with_all_players(four_node_graph(), 0).unwrap();
        assert!(g.is_successful(Coalition::EMPTY));
    }

    #[test]
    fn rejects_out_of_range_quota() {
        let err = InfluenceGame::with_all_players(four_node_graph(), 6).unwrap_err();
        assert!(err.to_string().contains("quota"));
    }

    #[test]
    fn four_node_game_to_explicit() {
        let e = four_node_game().to_explicit(&lim()).unwrap();
        let expected = ExplicitGame::new(
            &["a", "b", "c", "d"],
            &[vec!["a"], vec!["b"]],
            FamilyKind::MinimalWinning,
        )
        .unwrap();
        assert_eq!(e, expected);
        let l = e.maximal_losing(&lim()).unwrap();
        assert_eq!(
            l.iter().map(|c| e.names(*c)).collect::<Vec<_>>(),
            vec![vec!["c", "d"]]
        );
    }

    #[test]
    fn unreachable_quota_has_no_winners() {
        let g = InfluenceGame::with_all_players(four_node_graph(), 5).unwrap();
        assert!(g.to_explicit(&lim()).unwrap().family().is_empty());
    }

    #[test]
    fn quota_four_on_four_node_graph() {
        let g = InfluenceGame::with_all_players(four_node_graph(), 4).unwrap();
        let e = g.to_explicit(&lim()).unwrap();
        // b activates a, then c and d: {b} alone reaches all four nodes.
        let brute: Vec<Coalition> = all_teams(4)
            .filter(|&c| {
                crate::spread::spread(g.graph(), &c.members().collect::<Vec<_>>()).count_ones(..)
                    >= 4
            })
            .filter(|&c| {
                c.members().all(|i| {
                    let rest: Vec<usize> = c.without(i).members().collect();
                    crate::spread::spread(g.graph(), &rest).count_ones(..) < 4
                })
            })
            .collect();
        assert_eq!(e.family(), &brute[..]);
        assert_eq!(e.names(e.family()[0]), vec!["b"]);
    }

    #[test]
    fn enumeration_cap() {
        let g = InfluenceGame::vertex_cover_game(&SimpleGraph::path(25));
        assert!(g.to_explicit(&lim()).unwrap_err().is_limit());
    }

    #[test]
    fn figure_two_realisation() {
        let e = ExplicitGame::new(
            &["1", "2", "3", "4"],
            &[vec!["1", "2", "4"], vec!["2", "3"], vec!["3", "4"]],
            FamilyKind::MinimalWinning,
        )
        .unwrap();
        let g = InfluenceGame::from_minimal_winning(&e, &lim()).unwrap();
        assert_eq!(g.quota(), 3);
        assert_eq!(g.graph().len(), 6);
        for id in ["gadget:2+3:0", "gadget:3+4:0"] {
            let v = g.graph().index_of(id).unwrap();
            assert_eq!(g.graph().threshold(v), 2);
        }
        assert!(g.to_explicit(&lim()).unwrap().same_game(&e));
    }

    #[test]
    fn grand_coalition_realisation_has_no_gadgets() {
        let p = ["1", "2", "3"];
        let e = ExplicitGame::new(&p, &[p.to_vec()], FamilyKind::MinimalWinning).unwrap();
        let g = InfluenceGame::from_minimal_winning(&e, &lim()).unwrap();
        assert_eq!((g.quota(), g.graph().len()), (3, 3));
    }

    #[test]
    fn mixed_size_realisation_round_trips() {
        let e = ExplicitGame::new(
            &["1", "2", "3"],
            &[vec!["1"], vec!["2", "3"]],
            FamilyKind::MinimalWinning,
        )
        .unwrap();
        let g = InfluenceGame::from_minimal_winning(&e, &lim()).unwrap();
        assert_eq!(g.quota(), 2);
        assert_eq!(g.graph().len(), 4);
        assert!(g.to_explicit(&lim()).unwrap().same_game(&e));
    }

    #[test]
    fn dictator_realisation_uses_true_slength() {
        let e =
            ExplicitGame::new(&["1", "2", "3"], &[vec!["1"]], FamilyKind::MinimalWinning).unwrap();
        let g = InfluenceGame::from_minimal_winning(&e, &lim()).unwrap();
        assert_eq!(g.quota(), 3);
        assert!(g.to_explicit(&lim()).unwrap().same_game(&e));
    }

    #[test]
    fn degenerate_realisations() {
        let empty = ExplicitGame::new(&["1", "2"], &[], FamilyKind::MinimalWinning).unwrap();
        let g = InfluenceGame::from_minimal_winning(&empty, &lim()).unwrap();
        assert_eq!(g.quota(), 3);
        assert!(g.to_explicit(&lim()).unwrap().same_game(&empty));

        let all = ExplicitGame::new(&["1", "2"], &[vec![]], FamilyKind::MinimalWinning).unwrap();
        let g = InfluenceGame::from_minimal_winning(&all, &lim()).unwrap();
        assert_eq!(g.quota(), 0);
        assert!(g.to_explicit(&lim()).unwrap().same_game(&all));
    }

    #[test]
    fn weighted_realisations() {
        let w = WeightedGame::new(2, vec![1, 1, 1]).unwrap();
        let g = InfluenceGame::from_weighted(&w).unwrap();
        assert_eq!(g.spread_size(g.team(&["1", "2"]).unwrap()), 6);
        assert!(g.is_successful_ids(&["1", "2"]).unwrap());
        assert_eq!(g.spread_size(g.team(&["1"]).unwrap()), 1);
        assert!(!g.is_successful_ids(&["1"]).unwrap());

        let u = InfluenceGame::from_weighted_unweighted(&w, &lim()).unwrap();
        assert_eq!(u.quota(), 6);
        assert_eq!(u.spread_size(u.team(&["2", "3"]).unwrap()), 11);
        assert_eq!(u.spread_size(u.team(&["3"]).unwrap()), 2);
        assert!(!u.is_successful_ids(&["3"]).unwrap());
    }

    #[test]
    fn zero_quota_weighted_realisation() {
        let w = WeightedGame::new(0, vec![1, 2]).unwrap();
        let g = InfluenceGame::from_weighted(&w).unwrap();
        assert!(g.is_successful(Coalition::EMPTY));
    }

    #[test]
    fn zero_weight_players_are_dummies_in_unweighted_realisation() {
        let w = WeightedGame::new(1, vec![0, 1]).unwrap();
        let u = InfluenceGame::from_weighted_unweighted(&w, &lim()).unwrap();
        assert!(!u.is_successful_ids(&["1"]).unwrap());
        assert!(u.is_successful_ids(&["2"]).unwrap());
        let relays = u
            .graph()
            .ids()
            .iter()
            .filter(|id| id.starts_with("relay:"))
            .count();
        assert_eq!(relays, 1);
    }

    #[test]
    fn unweighted_realisation_rejects_unreachable_quota() {
        let w = WeightedGame::new(3, vec![1, 1]).unwrap();
        assert!(InfluenceGame::from_weighted_unweighted(&w, &lim()).is_err());
        let big = WeightedGame::new(1, vec![1 << 20]).unwrap();
        assert!(InfluenceGame::from_weighted_unweighted(&big, &lim())
            .unwrap_err()
            .is_limit());
    }

    #[test]
    fn weighted_realisations_are_equivalent() {
        let w = WeightedGame::new(2, vec![1, 1]).unwrap();
        let a = InfluenceGame::from_weighted(&w).unwrap();
        let b = InfluenceGame::from_weighted_unweighted(&w, &lim()).unwrap();
        assert_eq!(winners(&a), winners(&b));
    }

    #[test]
    fn combine_with_itself_is_identity() {
        let g = four_node_game();
        let u = g.combine(&g, CombineMode::Union, &lim()).unwrap();
        assert_eq!(winners(&u), winners(&g));
        let i = g.combine(&g, CombineMode::Intersection, &lim()).unwrap();
        assert_eq!(winners(&i), winners(&g));
    }

    #[test]
    fn combine_with_empty_game() {
        let g = four_node_game();
        let empty = InfluenceGame::with_all_players(four_node_graph(), 5).unwrap();
        let u = g.combine(&empty, CombineMode::Union, &lim()).unwrap();
        assert_eq!(winners(&u), winners(&g));
    }

    #[test]
    fn combine_intersection_of_single_player_games() {
        let one = |id: &str| {
            let e =
                ExplicitGame::new(&["1", "2"], &[vec![id]], FamilyKind::MinimalWinning).unwrap();
            InfluenceGame::from_minimal_winning(&e, &lim()).unwrap()
        };
        let both = one("1")
            .combine(&one("2"), CombineMode::Intersection, &lim())
            .unwrap();
        assert_eq!(winners(&both), vec![false, false, false, true]);
    }

    #[test]
    fn combine_rejects_different_players() {
        let a = four_node_game();
        let b = InfluenceGame::new(four_node_graph(), 3, &["a", "b"]).unwrap();
        assert!(a.combine(&b, CombineMode::Union, &lim()).is_err());
    }

    #[test]
    fn combine_weighted_examples() {
        let w1 = WeightedGame::new(2, vec![1, 1, 0]).unwrap();
        let w2 = WeightedGame::new(1, vec![0, 0, 1]).unwrap();
        let u = InfluenceGame::combine_weighted(&w1, &w2, CombineMode::Union).unwrap();
        assert_eq!(u.spread_size(u.team(&["3"]).unwrap()), 6);
        assert!(u.is_successful_ids(&["3"]).unwrap());
        let i = InfluenceGame::combine_weighted(&w1, &w2, CombineMode::Intersection).unwrap();
        assert_eq!(i.spread_size(i.team(&["1", "2"]).unwrap()), 3);
        assert!(!i.is_successful_ids(&["1", "2"]).unwrap());
    }

    #[test]
    fn combine_weighted_with_itself() {
        let w = WeightedGame::new(5, vec![3, 1, 4, 1, 5, 2, 6, 0, 2, 3]).unwrap();
        let i = InfluenceGame::combine_weighted(&w, &w, CombineMode::Intersection).unwrap();
        let table = winners(&i);
        for c in all_teams(10) {
            assert_eq!(table[c.0 as usize], w.is_winning(c));
        }
    }

    #[test]
    fn vertex_cover_games() {
        let k3 = InfluenceGame::vertex_cover_game(&SimpleGraph::complete(3));
        assert!(k3.is_successful_ids(&["0", "1"]).unwrap());
        assert!(!k3.is_successful_ids(&["0"]).unwrap());
        let edge = InfluenceGame::vertex_cover_game(&SimpleGraph::path(2));
        assert!(edge.is_successful_ids(&["0"]).unwrap());
        assert!(edge.is_successful_ids(&["1"]).unwrap());
        let empty = InfluenceGame::vertex_cover_game(&SimpleGraph::with_size(3, &[]).unwrap());
        assert!(winners(&empty).into_iter().all(|w| w));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn random_game() -> impl Strategy<Value = InfluenceGame> {
            (2usize..=7).prop_flat_map(|n| {
                (
                    proptest::collection::vec(0u64..=3, n),
                    proptest::collection::vec((0..n, 0..n, 1u64..=3), 0..=2 * n),
                    0..=n + 1,
                    any::<bool>(),
                )
                    .prop_map(move |(thresholds, arcs, quota, directed)| {
                        let mut b = InfluenceGraph::builder(directed);
                        for (i, &t) in thresholds.iter().enumerate() {
                            b.node(format!("v{i}"), t).unwrap();
                        }
                        for (u, v, w) in arcs {
                            let _ = b.edge(u, v, w);
                        }
                        InfluenceGame::with_all_players(b.build(), quota).unwrap()
                    })
            })
        }

        fn random_weighted() -> impl Strategy<Value = WeightedGame> {
            proptest::collection::vec(0u64..=8, 1..=8).prop_flat_map(|w| {
                let total: u64 = w.iter().sum();
                (0..=total).prop_map(move |q| WeightedGame::new(q, w.clone()).unwrap())
            })
        }

        fn random_minimal() -> impl Strategy<Value = ExplicitGame> {
            (1usize..=6).prop_flat_map(|n| {
                proptest::collection::vec(0u64..(1 << n), 0..5).prop_map(move |masks| {
                    let players: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
                    let family: Vec<Vec<String>> = masks
                        .iter()
                        .map(|&m| Coalition(m).members().map(|i| players[i].clone()).collect())
                        .collect();
                    ExplicitGame::normalized(&players, &family).unwrap()
                })
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn success_is_monotone(g in random_game(), a in any::<u64>(), b in any::<u64>()) {
                let full = Coalition::full(g.num_players());
                let small = Coalition(a).intersection(full);
                let large = small.union(Coalition(b).intersection(full));
                prop_assert!(!g.is_successful(small) || g.is_successful(large));
            }

            #[test]
            fn minimal_winning_round_trip(e in random_minimal()) {
                let g = InfluenceGame::from_minimal_winning(&e, &lim()).unwrap();
                prop_assert!(g.to_explicit(&lim()).unwrap().same_game(&e));
            }

            #[test]
            fn weighted_round_trip(w in random_weighted()) {
                let a = winners(&InfluenceGame::from_weighted(&w).unwrap());
                let b = winners(&InfluenceGame::from_weighted_unweighted(&w, &lim()).unwrap());
                for c in all_teams(w.num_players()) {
                    prop_assert_eq!(a[c.0 as usize], w.is_winning(c));
                    prop_assert_eq!(b[c.0 as usize], w.is_winning(c));
                }
            }

            #[test]
            fn combine_matches_inputs(g1 in random_game(), g2 in random_game(), union in any::<bool>()) {
                prop_assume!(g1.num_players() == g2.num_players());
                let mode = if union { CombineMode::Union } else { CombineMode::Intersection };
                let c = g1.combine(&g2, mode, &lim()).unwrap();
                let (t, t1, t2) = (winners(&c), winners(&g1), winners(&g2));
                for i in 0..t.len() {
                    let expected = if union { t1[i] || t2[i] } else { t1[i] && t2[i] };
                    prop_assert_eq!(t[i], expected);
                }
            }
        }
    }
}
