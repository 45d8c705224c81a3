//! Measures, power indices and properties of influence games by exact enumeration.
//!
//! Decision problems with a spread characterisation (passer, vetoer,
//! dictator, critical, blocking, swing) take a handful of spread runs. The
//! rest enumerate coalitions and are guarded by [`Limits`].

use std::str::FromStr;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::coalition::{k_subsets, subsets_of, Coalition};
use crate::error::{Error, Result};
use crate::forms::{derive_measure, player_remap, Measure};
use crate::game::InfluenceGame;
use crate::limits::{self, Limits};
use crate::special::{self, GameProperty};

/// How a measure or game property is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Method {
    /// The special-family algorithm when one applies, enumeration otherwise.
    #[default]
    Auto,
    Brute,
    Special,
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Method::Auto),
            "brute" => Ok(Method::Brute),
            "special" => Ok(Method::Special),
            _ => Err(Error::input(format!("unknown method `{s}`"))),
        }
    }
}

/// Length, width, sLength or sWidth; `None` when the defining set is empty.
pub fn measure(
    game: &InfluenceGame,
    kind: Measure,
    method: Method,
    limits: &Limits,
) -> Result<Option<usize>> {
    match method {
        Method::Brute => brute_measure(game, kind, limits),
        Method::Special => special_measure(game, kind),
        Method::Auto => match special_measure(game, kind) {
            Err(Error::WrongFamily { .. }) => brute_measure(game, kind, limits),
            other => other,
        },
    }
}

fn special_measure(game: &InfluenceGame, kind: Measure) -> Result<Option<usize>> {
    let n = game.num_players();
    let width = || {
        if special::is_max_influence_full_spread(game) {
            return special::max_width_full_spread(game);
        }
        match special::max_width(game) {
            Err(Error::WrongFamily { .. }) => special::min_measure(game, Measure::Width),
            other => other,
        }
    };
    // Length is NP-hard under maximum influence; only minimum influence has an algorithm.
    let length = || special::min_measure(game, Measure::Length);
    derive_measure(kind, n, length, width)
}

/// Size-layered search with early exit: ascending for length, descending for width.
fn brute_measure(game: &InfluenceGame, kind: Measure, limits: &Limits) -> Result<Option<usize>> {
    let n = game.num_players();
    limits.check_players(n)?;
    let layer_has = |k: usize, want: bool| {
        let layer: Vec<Coalition> = k_subsets(n, k).collect();
        layer
            .par_iter()
            .map_init(|| game.evaluator(), |ev, &c| ev.wins(c))
            .any(|w| w == want)
    };
    let length = || Ok((0..=n).find(|&k| layer_has(k, true)));
    let width = || Ok((0..=n).rev().find(|&k| layer_has(k, false)));
    derive_measure(kind, n, length, width)
}

/// Banzhaf and Shapley-Shubik values and indices of one player.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerReport {
    pub player: String,
    /// Winning coalitions in which the player is critical.
    pub banzhaf_value: BigUint,
    /// Banzhaf value over `2^(n-1)`.
    pub banzhaf_index: BigRational,
    /// Sum of `(|S|-1)! (n-|S|)!` over those coalitions.
    pub shapley_value: BigUint,
    /// Shapley-Shubik value over `n!`.
    pub shapley_index: BigRational,
}

fn factorials(n: usize) -> Vec<BigUint> {
    let mut f = vec![BigUint::one()];
    for i in 1..=n {
        let next = &f[i - 1] * BigUint::from(i);
        f.push(next);
    }
    f
}

fn ratio(num: &BigUint, den: &BigUint) -> BigRational {
    BigRational::new(num.clone().into(), den.clone().into())
}

/// Power of every player from one success table.
pub fn power_all(game: &InfluenceGame, limits: &Limits) -> Result<Vec<PowerReport>> {
    let n = game.num_players();
    let table = game.winning_table(limits)?;
    // critical[i][s]: coalitions of size s in which player i is critical.
    let critical: Vec<Vec<u64>> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut by_size = vec![0u64; n + 1];
            let rest = Coalition::full(n).without(i);
            for s in subsets_of(rest) {
                let with = s.with(i);
                if table[with.0 as usize] && !table[s.0 as usize] {
                    by_size[with.len()] += 1;
                }
            }
            by_size
        })
        .collect();
    let fact = factorials(n);
    let half = BigUint::one() << n.saturating_sub(1);
    Ok(critical
        .into_iter()
        .enumerate()
        .map(|(i, by_size)| {
            let banzhaf: BigUint = by_size.iter().map(|&c| BigUint::from(c)).sum();
            let shapley: BigUint = by_size
                .iter()
                .enumerate()
                .filter(|&(_, &c)| c > 0)
                .map(|(s, &c)| BigUint::from(c) * &fact[s - 1] * &fact[n - s])
                .sum();
            PowerReport {
                player: game.player_id(i).to_owned(),
                banzhaf_index: ratio(&banzhaf, &half),
                banzhaf_value: banzhaf,
                shapley_index: ratio(&shapley, &fact[n]),
                shapley_value: shapley,
            }
        })
        .collect())
}

pub fn power(game: &InfluenceGame, player: &str, limits: &Limits) -> Result<PowerReport> {
    let i = game.player_index(player)?;
    Ok(power_all(game, limits)?.swap_remove(i))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PlayerProperty {
    Passer,
    Vetoer,
    Dictator,
}

impl FromStr for PlayerProperty {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "passer" => Ok(PlayerProperty::Passer),
            "vetoer" => Ok(PlayerProperty::Vetoer),
            "dictator" => Ok(PlayerProperty::Dictator),
            _ => Err(Error::input(format!("unknown player property `{s}`"))),
        }
    }
}

/// Passer: `|F({i})| >= q`. Vetoer: `|F(N \ {i})| < q`. Dictator: both.
pub fn player_property(game: &InfluenceGame, player: &str, kind: PlayerProperty) -> Result<bool> {
    let i = game.player_index(player)?;
    let full = Coalition::full(game.num_players());
    let passer = || game.is_successful(Coalition::singleton(i));
    let vetoer = || !game.is_successful(full.without(i));
    Ok(match kind {
        PlayerProperty::Passer => passer(),
        PlayerProperty::Vetoer => vetoer(),
        PlayerProperty::Dictator => passer() && vetoer(),
    })
}

/// A dummy never turns a losing coalition into a winning one.
pub fn is_dummy(game: &InfluenceGame, player: &str, limits: &Limits) -> Result<bool> {
    let i = game.player_index(player)?;
    let n = game.num_players();
    limits.check_players(n)?;
    let rest: Vec<Coalition> = subsets_of(Coalition::full(n).without(i)).collect();
    let swings = rest
        .par_iter()
        .map_init(
            || game.evaluator(),
            |ev, &s| ev.wins(s.with(i)) && !ev.wins(s),
        )
        .any(|b| b);
    Ok(!swings)
}

/// `i` and `j` are interchangeable in every coalition of the other players.
pub fn are_symmetric(game: &InfluenceGame, a: &str, b: &str, limits: &Limits) -> Result<bool> {
    let i = game.player_index(a)?;
    let j = game.player_index(b)?;
    if i == j {
        return Ok(true);
    }
    let n = game.num_players();
    limits.check_players(n)?;
    let rest: Vec<Coalition> = subsets_of(Coalition::full(n).without(i).without(j)).collect();
    let differ = rest
        .par_iter()
        .map_init(
            || game.evaluator(),
            |ev, &s| ev.wins(s.with(i)) != ev.wins(s.with(j)),
        )
        .any(|b| b);
    Ok(!differ)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TeamProperty {
    /// The named member is critical: the team wins and loses without them.
    Critical(String),
    /// The complement of the team loses.
    Blocking,
    /// The team wins and some member is critical.
    Swing,
}

impl FromStr for TeamProperty {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.split_once(':') {
            Some(("critical", p)) if !p.is_empty() => Ok(TeamProperty::Critical(p.to_owned())),
            None if s == "blocking" => Ok(TeamProperty::Blocking),
            None if s == "swing" => Ok(TeamProperty::Swing),
            _ => Err(Error::input(format!("unknown team property `{s}`"))),
        }
    }
}

pub fn team_property<S: AsRef<str>>(
    game: &InfluenceGame,
    team: &[S],
    kind: &TeamProperty,
) -> Result<bool> {
    let x = game.team(team)?;
    let n = game.num_players();
    let mut ev = game.evaluator();
    Ok(match kind {
        TeamProperty::Critical(p) => {
            let i = game.player_index(p)?;
            if !x.contains(i) {
                return Err(Error::input(format!("`{p}` is not a member of the team")));
            }
            ev.wins(x) && !ev.wins(x.without(i))
        }
        TeamProperty::Blocking => !ev.wins(x.complement(n)),
        TeamProperty::Swing => ev.wins(x) && x.members().any(|i| !ev.wins(x.without(i))),
    })
}

/// Proper, strong or decisive.
pub fn game_property(
    game: &InfluenceGame,
    kind: GameProperty,
    method: Method,
    limits: &Limits,
) -> Result<bool> {
    let special = || {
        if special::is_max_influence_full_spread(game) {
            special::max_game_property(game, kind)
        } else if special::is_min_influence(game) {
            special::min_game_property(game, kind)
        } else {
            Err(Error::WrongFamily {
                expected: "max_influence_full_spread or min_influence",
            })
        }
    };
    match method {
        Method::Brute => brute_game_property(game, kind, limits),
        Method::Special => special(),
        Method::Auto => match special() {
            Err(Error::WrongFamily { .. }) => brute_game_property(game, kind, limits),
            other => other,
        },
    }
}

/// Pairs every coalition with its complement, so half of `P(N)` is visited.
fn brute_game_property(game: &InfluenceGame, kind: GameProperty, limits: &Limits) -> Result<bool> {
    let n = game.num_players();
    limits.check_players(n)?;
    // Coalitions without the last player, each paired with its complement.
    let half = if n == 0 {
        Coalition::EMPTY
    } else {
        Coalition::full(n - 1)
    };
    let pairs: Vec<Coalition> = subsets_of(half).collect();
    let (both_win, both_lose) = pairs
        .par_iter()
        .map_init(
            || game.evaluator(),
            |ev, &x| {
                let a = ev.wins(x);
                let b = ev.wins(x.complement(n));
                (a && b, !a && !b)
            },
        )
        .reduce(|| (false, false), |l, r| (l.0 || r.0, l.1 || r.1));
    Ok(match kind {
        GameProperty::Proper => !both_win,
        GameProperty::Strong => !both_lose,
        GameProperty::Decisive => !both_win && !both_lose,
    })
}

/// Same successful teams, with players matched by id.
pub fn equivalent(g1: &InfluenceGame, g2: &InfluenceGame, limits: &Limits) -> Result<bool> {
    let remap = player_remap(&g1.player_ids(), &g2.player_ids())?;
    let t1 = g1.winning_table(limits)?;
    let t2 = g2.winning_table(limits)?;
    let n = g1.num_players();
    Ok((0..t1.len()).into_par_iter().all(|mask| {
        let team = Coalition(mask as u64);
        let translated = Coalition::from_indices((0..n).filter(|&j| team.contains(remap[j])));
        t1[mask] == t2[translated.0 as usize]
    }))
}

/// A bijection from the players of `g1` to those of `g2` that preserves
/// success both ways, as `(g1 id, g2 id)` pairs, or `None` if there is none.
///
/// Backtracks over assignments in player order, pairing only players with
/// equal Banzhaf value, singleton success and winning-coalition count, and
/// checks every coalition of the assigned prefix as soon as it is complete.
pub fn isomorphic(
    g1: &InfluenceGame,
    g2: &InfluenceGame,
    limits: &Limits,
) -> Result<Option<Vec<(String, String)>>> {
    let n = g1.num_players();
    if n != g2.num_players() {
        return Err(Error::input("games have different numbers of players"));
    }
    limits::check("isomorphism players", limits.iso_players, n)?;
    let t1 = g1.winning_table(limits)?;
    let t2 = g2.winning_table(limits)?;
    if t1.iter().filter(|&&w| w).count() != t2.iter().filter(|&&w| w).count() {
        return Ok(None);
    }
    let sig1 = signatures(&t1, n);
    let sig2 = signatures(&t2, n);
    let mut sorted1 = sig1.clone();
    let mut sorted2 = sig2.clone();
    sorted1.sort_unstable();
    sorted2.sort_unstable();
    if sorted1 != sorted2 {
        return Ok(None);
    }
    let mut search = IsoSearch {
        n,
        t1: &t1,
        t2: &t2,
        sig1: &sig1,
        sig2: &sig2,
        phi: Vec::with_capacity(n),
        used: vec![false; n],
    };
    Ok(search.extend().then(|| {
        search
            .phi
            .iter()
            .enumerate()
            .map(|(i, &j)| (g1.player_id(i).to_owned(), g2.player_id(j).to_owned()))
            .collect()
    }))
}

/// Per-player statistics preserved by every isomorphism.
fn signatures(table: &[bool], n: usize) -> Vec<(u64, bool, u64)> {
    (0..n)
        .map(|i| {
            let mut banzhaf = 0;
            let mut containing = 0;
            for s in subsets_of(Coalition::full(n).without(i)) {
                let with = table[s.with(i).0 as usize];
                containing += u64::from(with);
                banzhaf += u64::from(with && !table[s.0 as usize]);
            }
            (
                banzhaf,
                table[Coalition::singleton(i).0 as usize],
                containing,
            )
        })
        .collect()
}

struct IsoSearch<'a> {
    n: usize,
    t1: &'a [bool],
    t2: &'a [bool],
    sig1: &'a [(u64, bool, u64)],
    sig2: &'a [(u64, bool, u64)],
    phi: Vec<usize>,
    used: Vec<bool>,
}

impl IsoSearch<'_> {
    fn extend(&mut self) -> bool {
        let i = self.phi.len();
        if i == self.n {
            return true;
        }
        for j in 0..self.n {
            if self.used[j] || self.sig1[i] != self.sig2[j] {
                continue;
            }
            self.phi.push(j);
            self.used[j] = true;
            if self.prefix_consistent() && self.extend() {
                return true;
            }
            self.used[j] = false;
            self.phi.pop();
        }
        false
    }

    /// Coalitions that contain the newest player and otherwise only assigned ones.
    fn prefix_consistent(&self) -> bool {
        let last = self.phi.len() - 1;
        subsets_of(Coalition::full(last)).all(|s| {
            let c = s.with(last);
            let image = Coalition::from_indices(c.members().map(|i| self.phi[i]));
            self.t1[c.0 as usize] == self.t2[image.0 as usize]
        })
    }
}

/// Shapley-Shubik values sum to `n!` when `N` wins and `∅` loses.
pub fn shapley_total(reports: &[PowerReport]) -> BigUint {
    reports
        .iter()
        .map(|r| &r.shapley_value)
        .fold(BigUint::zero(), |acc, v| acc + v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::{ExplicitGame, FamilyKind, WeightedGame};
    use crate::game::fixtures::{four_node_game, four_node_graph};
    use crate::graph::{InfluenceGraph, SimpleGraph};
    use crate::reductions::{gen_iso_pair, gen_setcover_length_game};

    fn lim() -> Limits {
        Limits::default()
    }

    fn m(game: &InfluenceGame, kind: Measure) -> Option<usize> {
        measure(game, kind, Method::Brute, &lim()).unwrap()
    }

    fn dictator() -> InfluenceGame {
        InfluenceGame::from_weighted(&WeightedGame::new(1, vec![1, 0, 0]).unwrap()).unwrap()
    }

    /// Renames every node to `r:<id>` and lists the players in the order `perm`.
    fn relabelled(game: &InfluenceGame, perm: &[usize]) -> InfluenceGame {
        let g = game.graph();
        let mut b = InfluenceGraph::builder(g.is_directed());
        for v in 0..g.len() {
            b.node(format!("r:{}", g.id(v)), g.threshold(v)).unwrap();
        }
        for e in g.edges() {
            b.edge(e.from, e.to, e.weight).unwrap();
        }
        let players: Vec<usize> = perm.iter().map(|&i| game.players()[i]).collect();
        InfluenceGame::from_indices(b.build(), game.quota(), players).unwrap()
    }

    #[test]
    fn four_node_game_measures() {
        let g = four_node_game();
        let got: Vec<_> = Measure::ALL.iter().map(|&k| m(&g, k)).collect();
        assert_eq!(got, vec![Some(1), Some(2), Some(3), Some(0)]);
    }

    #[test]
    fn zero_quota_measures() {
        let g = InfluenceGame::with_all_players(four_node_graph(), 0).unwrap();
        assert_eq!(m(&g, Measure::Length), Some(0));
        assert_eq!(m(&g, Measure::Width), None);
    }

    #[test]
    fn set_cover_game_length() {
        let inst = gen_setcover_length_game(&[vec![1, 2], vec![2, 3]], 3).unwrap();
        assert_eq!(m(&inst.game, Measure::Length), Some(2));
    }

    #[test]
    fn measure_cap() {
        let big = InfluenceGame::with_all_players(
            InfluenceGraph::new(
                (0..40).map(|i| (i.to_string(), 1)),
                Vec::<(String, String, u64)>::new(),
                true,
            )
            .unwrap(),
            5,
        )
        .unwrap();
        assert!(measure(&big, Measure::Length, Method::Auto, &lim())
            .unwrap_err()
            .is_limit());
    }

    #[test]
    fn special_method_on_general_game_is_rejected() {
        let err = measure(&four_node_game(), Measure::Width, Method::Special, &lim()).unwrap_err();
        assert!(matches!(err, Error::WrongFamily { .. }));
    }

    #[test]
    fn power_of_dictator() {
        let r = power(&dictator(), "1", &lim()).unwrap();
        assert_eq!(r.banzhaf_value, BigUint::from(4u32));
        assert_eq!(r.shapley_value, BigUint::from(6u32));
        assert!(r.shapley_index.is_one());
        assert!(r.banzhaf_index.is_one());
    }

    #[test]
    fn power_of_four_node_game() {
        let reports = power_all(&four_node_game(), &lim()).unwrap();
        let eta: Vec<u32> = reports
            .iter()
            .map(|r| {
                r.banzhaf_value
                    .to_u32_digits()
                    .first()
                    .copied()
                    .unwrap_or(0)
            })
            .collect();
        assert_eq!(eta, vec![4, 4, 0, 0]);
        assert_eq!(reports[0].shapley_value, BigUint::from(12u32));
        assert_eq!(reports[2].shapley_value, BigUint::zero());
        assert_eq!(shapley_total(&reports), BigUint::from(24u32));
        assert_eq!(
            reports[0].banzhaf_index,
            BigRational::new(1.into(), 2.into())
        );
    }

    #[test]
    fn player_properties() {
        let g = four_node_game();
        assert!(player_property(&g, "a", PlayerProperty::Passer).unwrap());
        assert!(!player_property(&g, "a", PlayerProperty::Vetoer).unwrap());
        assert!(player_property(&dictator(), "1", PlayerProperty::Dictator).unwrap());
        assert!(player_property(&g, "q", PlayerProperty::Passer).is_err());
    }

    #[test]
    fn hard_player_properties() {
        let g = four_node_game();
        assert!(is_dummy(&g, "c", &lim()).unwrap());
        assert!(!is_dummy(&g, "a", &lim()).unwrap());
        assert!(are_symmetric(&g, "a", "b", &lim()).unwrap());
        assert!(are_symmetric(&g, "c", "c", &lim()).unwrap());
        assert!(!are_symmetric(&g, "a", "c", &lim()).unwrap());
    }

    #[test]
    fn team_properties() {
        let g = four_node_game();
        assert!(!team_property(&g, &["c", "d"], &TeamProperty::Blocking).unwrap());
        assert!(team_property(&g, &["a"], &TeamProperty::Critical("a".into())).unwrap());
        assert!(!team_property(&g, &["a", "b"], &TeamProperty::Swing).unwrap());
        assert!(team_property(&g, &["a", "c"], &TeamProperty::Swing).unwrap());
        assert!(team_property(&g, &["a"], &TeamProperty::Critical("b".into())).is_err());
        assert_eq!(
            "critical:a".parse::<TeamProperty>().unwrap(),
            TeamProperty::Critical("a".into())
        );
    }

    #[test]
    fn game_properties() {
        let k3 = InfluenceGame::vertex_cover_game(&SimpleGraph::complete(3));
        for method in [Method::Brute, Method::Special, Method::Auto] {
            assert!(game_property(&k3, GameProperty::Decisive, method, &lim()).unwrap());
        }
        let c4 = InfluenceGame::vertex_cover_game(&SimpleGraph::cycle(4));
        assert!(!game_property(&c4, GameProperty::Proper, Method::Brute, &lim()).unwrap());
        let zero = InfluenceGame::with_all_players(four_node_graph(), 0).unwrap();
        assert!(!game_property(&zero, GameProperty::Proper, Method::Auto, &lim()).unwrap());
    }

    #[test]
    fn equivalence_examples() {
        let g = four_node_game();
        assert!(equivalent(&g, &g, &lim()).unwrap());
        let w = WeightedGame::new(2, vec![1, 1]).unwrap();
        let a = InfluenceGame::from_weighted(&w).unwrap();
        let b = InfluenceGame::from_weighted_unweighted(&w, &lim()).unwrap();
        assert!(equivalent(&a, &b, &lim()).unwrap());
        let (g1, g2) = gen_iso_pair(&SimpleGraph::complete(3), 1, &lim()).unwrap();
        assert!(equivalent(&g1, &g2, &lim()).unwrap());
        assert!(equivalent(
            &g,
            &InfluenceGame::new(four_node_graph(), 3, &["a"]).unwrap(),
            &lim()
        )
        .is_err());
    }

    #[test]
    fn isomorphism_examples() {
        let g = four_node_game();
        let r = relabelled(&g, &[2, 3, 0, 1]);
        let witness = isomorphic(&g, &r, &lim()).unwrap().unwrap();
        assert_eq!(witness[0], ("a".to_owned(), "r:a".to_owned()));

        let explicit = |family: &[Vec<&str>]| {
            let e = ExplicitGame::new(&["1", "2"], family, FamilyKind::MinimalWinning).unwrap();
            InfluenceGame::from_minimal_winning(&e, &lim()).unwrap()
        };
        let w = isomorphic(&explicit(&[vec!["1"]]), &explicit(&[vec!["2"]]), &lim())
            .unwrap()
            .unwrap();
        assert_eq!(
            w,
            vec![
                ("1".to_owned(), "2".to_owned()),
                ("2".to_owned(), "1".to_owned())
            ]
        );
        assert!(isomorphic(
            &explicit(&[vec!["1"]]),
            &explicit(&[vec!["1", "2"]]),
            &lim()
        )
        .unwrap()
        .is_none());
    }

    #[test]
    fn isomorphism_cap() {
        let g = InfluenceGame::vertex_cover_game(&SimpleGraph::path(9));
        assert!(isomorphic(&g, &g, &lim()).unwrap_err().is_limit());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        pub(crate) fn random_game() -> impl Strategy<Value = InfluenceGame> {
            (1usize..=6).prop_flat_map(|n| {
                (
                    proptest::collection::vec(0u64..=3, n),
                    proptest::collection::vec((0..n, 0..n, 1u64..=2), 0..=2 * n),
                    0..=n + 1,
                )
                    .prop_map(move |(thresholds, arcs, quota)| {
                        let mut b = InfluenceGraph::builder(true);
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

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(96))]

            #[test]
            fn measures_match_explicit_form(g in random_game()) {
                let e = g.to_explicit(&lim()).unwrap();
                for k in Measure::ALL {
                    prop_assert_eq!(m(&g, k), e.measure(k, &lim()).unwrap());
                }
            }

            #[test]
            fn power_matches_definition(g in random_game()) {
                let n = g.num_players();
                let reports = power_all(&g, &lim()).unwrap();
                let fact = factorials(n);
                for (i, r) in reports.iter().enumerate() {
                    let mut eta = 0u32;
                    let mut kappa = BigUint::zero();
                    for s in subsets_of(Coalition::full(n)) {
                        if s.contains(i) && g.is_successful(s) && !g.is_successful(s.without(i)) {
                            eta += 1;
                            kappa += &fact[s.len() - 1] * &fact[n - s.len()];
                        }
                    }
                    prop_assert_eq!(&r.banzhaf_value, &BigUint::from(eta));
                    prop_assert_eq!(&r.shapley_value, &kappa);
                    prop_assert_eq!(is_dummy(&g, &r.player, &lim()).unwrap(), eta == 0);
                }
                let full = Coalition::full(n);
                if g.is_successful(full) && !g.is_successful(Coalition::EMPTY) {
                    prop_assert_eq!(shapley_total(&reports), fact[n].clone());
                }
                let ids = g.player_ids();
                let dictators = ids.iter().filter(|p| player_property(&g, p, PlayerProperty::Dictator).unwrap()).count();
                prop_assert!(dictators <= 1);
            }

            #[test]
            fn team_properties_match_definitions(g in random_game(), mask in any::<u64>()) {
                let n = g.num_players();
                let x = Coalition(mask).intersection(Coalition::full(n));
                let ids = g.team_ids(x);
                let e = g.to_explicit(&lim()).unwrap();
                prop_assert_eq!(team_property(&g, &ids, &TeamProperty::Blocking).unwrap(), !e.is_winning(x.complement(n)));
                let swing = e.is_winning(x) && x.members().any(|i| !e.is_winning(x.without(i)));
                prop_assert_eq!(team_property(&g, &ids, &TeamProperty::Swing).unwrap(), swing);
                for i in x.members() {
                    let crit = e.is_winning(x) && !e.is_winning(x.without(i));
                    prop_assert_eq!(team_property(&g, &ids, &TeamProperty::Critical(g.player_id(i).to_owned())).unwrap(), crit);
                }
            }

            #[test]
            fn isomorphism_survives_relabelling(g in random_game(), seed in any::<u64>()) {
                let n = g.num_players();
                let mut perm: Vec<usize> = (0..n).collect();
                let mut s = seed;
                for i in (1..n).rev() {
                    s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    perm.swap(i, (s >> 33) as usize % (i + 1));
                }
                let r = relabelled(&g, &perm);
                let witness = isomorphic(&g, &r, &lim()).unwrap();
                prop_assert!(witness.is_some());
                prop_assert!(equivalent(&g, &g, &lim()).unwrap());
            }
        }
    }
}
