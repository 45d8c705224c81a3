//! Explicit and weighted simple-game representations.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use crate::coalition::{subsets_of, Coalition, MAX_PLAYERS};
use crate::error::{Error, Result};
use crate::limits::{self, Limits};

/// Which family an [`ExplicitGame`] lists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    /// Every winning coalition (`W`), superset-closed.
    Winning,
    /// The inclusion-minimal winning coalitions ; an antichain.
    MinimalWinning,
}

/// Size measures of a simple game.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Measure {
    /// Smallest winning coalition.
    Length,
    /// Largest losing coalition.
    Width,
    /// Smallest `k` such that every `k`-coalition wins.
    SLength,
    /// Largest `k` such that every `k`-coalition loses.
    SWidth,
}

impl Measure {
    pub const ALL: [Measure; 4] = [
        Measure::Length,
        Measure::Width,
        Measure::SLength,
        Measure::SWidth,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Measure::Length => "length",
            Measure::Width => "width",
            Measure::SLength => "slength",
            Measure::SWidth => "swidth",
        }
    }
}

impl FromStr for Measure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Measure::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::input(format!("unknown measure `{s}`")))
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CombineMode {
    Union,
    Intersection,
}

impl FromStr for CombineMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "union" => Ok(CombineMode::Union),
            "intersection" => Ok(CombineMode::Intersection),
            _ => Err(Error::input(format!("unknown combine mode `{s}`"))),
        }
    }
}

/// Measures derived from whether the empty and grand coalitions win and from
/// `length`/`width`; shared by every game representation.
pub(crate) fn derive_measure(
    kind: Measure,
    n: usize,
    length: impl FnOnce() -> Result<Option<usize>>,
    width: impl FnOnce() -> Result<Option<usize>>,
) -> Result<Option<usize>> {
    Ok(match kind {
        Measure::Length => length()?,
        Measure::Width => width()?,
        // No losing coalition: every k-set wins from k = 0. No winning one: undefined.
        Measure::SLength => match width()? {
            None => Some(0),
            Some(w) if w == n => None,
            Some(w) => Some(w + 1),
        },
        Measure::SWidth => match length()? {
            None => Some(n),
            Some(0) => None,
            Some(l) => Some(l - 1),
        },
    })
}

/// A simple game given by its player list and a winning or minimal-winning family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExplicitGame {
    players: Vec<String>,
    family: Vec<Coalition>,
    kind: FamilyKind,
}

impl ExplicitGame {
    /// Builds a game from coalitions named by player id and validates the family:
    /// a winning family must be monotonic, a minimal winning family an antichain.
    pub fn new<S: AsRef<str>>(players: &[S], family: &[Vec<S>], kind: FamilyKind) -> Result<Self> {
        let players: Vec<String> = players.iter().map(|p| p.as_ref().to_owned()).collect();
        let masks = family
            .iter()
            .map(|c| coalition_of(&players, c))
            .collect::<Result<Vec<_>>>()?;
        ExplicitGame::from_masks(players, masks, kind)
    }

    pub fn from_masks(
        players: Vec<String>,
        family: Vec<Coalition>,
        kind: FamilyKind,
    ) -> Result<Self> {
        check_players(&players)?;
        let n = players.len();
        let mut family = family;
        family.sort_unstable();
        family.dedup();
        if let Some(bad) = family.iter().find(|c| !c.is_subset(Coalition::full(n))) {
            return Err(Error::invariant(
                "coalition members must be players",
                format!("mask {:#x} refers to players beyond {n}", bad.0),
            ));
        }
        let game = ExplicitGame {
            players,
            family,
            kind,
        };
        match kind {
            FamilyKind::Winning => game.check_monotonic()?,
            FamilyKind::MinimalWinning => game.check_antichain()?,
        }
        Ok(game)
    }

    /// Minimises an arbitrary family into a minimal winning game (the superset closure is kept).
    pub fn normalized<S: AsRef<str>>(players: &[S], family: &[Vec<S>]) -> Result<Self> {
        let players: Vec<String> = players.iter().map(|p| p.as_ref().to_owned()).collect();
        check_players(&players)?;
        let masks = family
            .iter()
            .map(|c| coalition_of(&players, c))
            .collect::<Result<Vec<_>>>()?;
        Ok(ExplicitGame {
            players,
            family: minimize(masks),
            kind: FamilyKind::MinimalWinning,
        })
    }

    pub fn players(&self) -> &[String] {
        &self.players
    }

    pub fn num_players(&self) -> usize {
        self.players.len()
    }

    pub fn family(&self) -> &[Coalition] {
        &self.family
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn coalition<S: AsRef<str>>(&self, members: &[S]) -> Result<Coalition> {
        coalition_of(&self.players, members)
    }

    pub fn names(&self, c: Coalition) -> Vec<String> {
        c.members().map(|i| self.players[i].clone()).collect()
    }

    pub fn is_winning(&self, c: Coalition) -> bool {
        match self.kind {
            FamilyKind::Winning => self.family.binary_search(&c).is_ok(),
            FamilyKind::MinimalWinning => self.family.iter().any(|m| m.is_subset(c)),
        }
    }

    pub fn is_winning_ids<S: AsRef<str>>(&self, members: &[S]) -> Result<bool> {
        Ok(self.is_winning(self.coalition(members)?))
    }

    fn check_monotonic(&self) -> Result<()> {
        let n = self.num_players();
        let set: HashSet<Coalition> = self.family.iter().copied().collect();
        for &c in &self.family {
            if let Some(i) = (0..n).find(|&i| !c.contains(i) && !set.contains(&c.with(i))) {
                return Err(Error::invariant(
                    "winning family must be monotonic",
                    format!(
                        "{:?} wins but its superset adding `{}` does not",
                        self.names(c),
                        self.players[i]
                    ),
                ));
            }
        }
        Ok(())
    }

    fn check_antichain(&self) -> Result<()> {
        for (i, &a) in self.family.iter().enumerate() {
            for &b in &self.family[i + 1..] {
                if a.is_subset(b) || b.is_subset(a) {
                    return Err(Error::invariant(
                        "minimal winning family must be an antichain",
                        format!("{:?} and {:?} are nested", self.names(a), self.names(b)),
                    ));
                }
            }
        }
        Ok(())
    }

    /// The same game as its minimal winning family.
    pub fn minimal_winning(&self) -> ExplicitGame {
        match self.kind {
            FamilyKind::MinimalWinning => self.clone(),
            FamilyKind::Winning => {
                let set: HashSet<Coalition> = self.family.iter().copied().collect();
                let family = self
                    .family
                    .iter()
                    .copied()
                    .filter(|c| c.members().all(|i| !set.contains(&c.without(i))))
                    .collect();
                ExplicitGame {
                    players: self.players.clone(),
                    family,
                    kind: FamilyKind::MinimalWinning,
                }
            }
        }
    }

    /// The same game in `W` form; enumerates `2^n` coalitions.
    pub fn winning(&self, limits: &Limits) -> Result<ExplicitGame> {
        if self.kind == FamilyKind::Winning {
            return Ok(self.clone());
        }
        let n = self.num_players();
        limits.check_players(n)?;
        let family = subsets_of(Coalition::full(n))
            .filter(|&c| self.is_winning(c))
            .collect();
        Ok(ExplicitGame {
            players: self.players.clone(),
            family,
            kind: FamilyKind::Winning,
        })
    }

    /// Inclusion-maximal losing coalitions; enumerates `2^n` coalitions.
    pub fn maximal_losing(&self, limits: &Limits) -> Result<Vec<Coalition>> {
        let n = self.num_players();
        limits.check_players(n)?;
        let mut out: Vec<Coalition> = subsets_of(Coalition::full(n))
            .filter(|&c| !self.is_winning(c))
            .filter(|&c| (0..n).all(|i| c.contains(i) || self.is_winning(c.with(i))))
            .collect();
        out.sort_unstable();
        Ok(out)
    }

    /// Length, width, sLength or sWidth; `None` when the defining set is empty.
    ///
    /// Length is read off the minimal winning family directly. Width is the
    /// size of a largest coalition that contains no minimal winner, i.e. `n`
    /// minus a minimum hitting set of the minimal winners, found by a size-descending search.
    pub fn measure(&self, kind: Measure, limits: &Limits) -> Result<Option<usize>> {
        let minimal = self.minimal_winning();
        let n = self.num_players();
        derive_measure(
            kind,
            n,
            || Ok(minimal.family.iter().map(|c| c.len()).min()),
            || minimal.max_losing_size(limits),
        )
    }

    fn max_losing_size(&self, limits: &Limits) -> Result<Option<usize>> {
        debug_assert_eq!(self.kind, FamilyKind::MinimalWinning);
        let n = self.num_players();
        if self.family.iter().any(|c| c.is_empty()) {
            return Ok(None);
        }
        if self.family.is_empty() {
            return Ok(Some(n));
        }
        limits.check_players(n)?;
        for k in (0..=n).rev() {
            if crate::coalition::k_subsets(n, k).any(|c| !self.is_winning(c)) {
                return Ok(Some(k));
            }
        }
        unreachable!("the empty coalition loses when no minimal winner is empty")
    }

    /// Union or intersection of two games over the same player set.
    ///
    /// The result lists minimal winners: the minimal members of the union of both minimal families for
    /// a union, of `{A ∪ B}` for an intersection.
    pub fn combine(&self, other: &ExplicitGame, mode: CombineMode) -> Result<ExplicitGame> {
        let remap = player_remap(&self.players, &other.players)?;
        let left = self.minimal_winning().family;
        let right: Vec<Coalition> = other
            .minimal_winning()
            .family
            .iter()
            .map(|c| Coalition::from_indices(c.members().map(|i| remap[i])))
            .collect();
        let combined = match mode {
            CombineMode::Union => left.into_iter().chain(right).collect(),
            CombineMode::Intersection => left
                .iter()
                .flat_map(|a| right.iter().map(move |b| a.union(*b)))
                .collect(),
        };
        Ok(ExplicitGame {
            players: self.players.clone(),
            family: minimize(combined),
            kind: FamilyKind::MinimalWinning,
        })
    }

    /// Same game (same winning coalitions by player id), regardless of form or player order.
    pub fn same_game(&self, other: &ExplicitGame) -> bool {
        let Ok(remap) = player_remap(&self.players, &other.players) else {
            return false;
        };
        let mine = self.minimal_winning().family;
        let mut theirs: Vec<Coalition> = other
            .minimal_winning()
            .family
            .iter()
            .map(|c| Coalition::from_indices(c.members().map(|i| remap[i])))
            .collect();
        theirs.sort_unstable();
        mine == theirs
    }
}

/// Minimal members of an arbitrary family, sorted.
fn minimize(mut family: Vec<Coalition>) -> Vec<Coalition> {
    family.sort_unstable_by_key(|c| (c.len(), c.0));
    family.dedup();
    let mut kept: Vec<Coalition> = Vec::new();
    for c in family {
        if !kept.iter().any(|k| k.is_subset(c)) {
            kept.push(c);
        }
    }
    kept.sort_unstable();
    kept
}

fn check_players(players: &[String]) -> Result<()> {
    if players.len() > MAX_PLAYERS {
        return Err(Error::Limit {
            what: "explicit game players",
            limit: MAX_PLAYERS,
            actual: players.len(),
        });
    }
    let unique: HashSet<&String> = players.iter().collect();
    if unique.len() != players.len() {
        return Err(Error::invariant(
            "duplicate player id",
            "player ids must be unique",
        ));
    }
    Ok(())
}

fn coalition_of<S: AsRef<str>>(players: &[String], members: &[S]) -> Result<Coalition> {
    members.iter().try_fold(Coalition::EMPTY, |acc, m| {
        let m = m.as_ref();
        players
            .iter()
            .position(|p| p == m)
            .map(|i| acc.with(i))
            .ok_or_else(|| Error::input(format!("unknown player `{m}`")))
    })
}

/// For each index in `to`'s order, its index in `from`'s order.
pub(crate) fn player_remap(from: &[String], to: &[String]) -> Result<Vec<usize>> {
    let position: HashMap<&str, usize> = from
        .iter()
        .enumerate()
        .map(|(i, p)| (p.as_str(), i))
        .collect();
    if from.len() != to.len() {
        return Err(Error::input("games have different player sets"));
    }
    to.iter()
        .map(|p| {
            position
                .get(p.as_str())
                .copied()
                .ok_or_else(|| Error::input(format!("player `{p}` is missing from the other game")))
        })
        .collect()
}

/// A weighted game `[q; w_1, …, w_n]` with non-negative integer weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedGame {
    quota: u64,
    weights: Vec<u64>,
    players: Vec<String>,
}

impl WeightedGame {
    /// Players are named `1..=n`.
    pub fn new(quota: u64, weights: Vec<u64>) -> Result<Self> {
        let players = (1..=weights.len()).map(|i| i.to_string()).collect();
        WeightedGame::with_players(quota, weights, players)
    }

    pub fn with_players(quota: u64, weights: Vec<u64>, players: Vec<String>) -> Result<Self> {
        if players.len() != weights.len() {
            return Err(Error::input("one weight per player is required"));
        }
        check_players(&players)?;
        let total = weights.iter().try_fold(0u64, |acc, &w| acc.checked_add(w));
        let total = total.ok_or_else(|| {
            Error::invariant("total weight must fit in 64 bits", "weights overflow")
        })?;
        if quota > total.saturating_add(1) {
            return Err(Error::invariant(
                "quota must satisfy 0 <= q <= w(N)+1",
                format!("q = {quota}, w(N) = {total}"),
            ));
        }
        Ok(WeightedGame {
            quota,
            weights,
            players,
        })
    }

    pub fn quota(&self) -> u64 {
        self.quota
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn players(&self) -> &[String] {
        &self.players
    }

    pub fn num_players(&self) -> usize {
        self.weights.len()
    }

    pub fn total_weight(&self) -> u64 {
        self.weights.iter().sum()
    }

    pub fn weight_of(&self, c: Coalition) -> u64 {
        c.members().map(|i| self.weights[i]).sum()
    }

    pub fn is_winning(&self, c: Coalition) -> bool {
        self.weight_of(c) >= self.quota
    }

    pub fn coalition<S: AsRef<str>>(&self, members: &[S]) -> Result<Coalition> {
        coalition_of(&self.players, members)
    }

    pub fn is_winning_ids<S: AsRef<str>>(&self, members: &[S]) -> Result<bool> {
        Ok(self.is_winning(self.coalition(members)?))
    }

    /// The same game as an explicit minimal winning game; enumerates `2^n` coalitions.
    pub fn to_explicit(&self, limits: &Limits) -> Result<ExplicitGame> {
        let n = self.num_players();
        limits::check("player enumeration", limits.max_players, n)?;
        let family = subsets_of(Coalition::full(n))
            .filter(|&c| self.is_winning(c) && c.members().all(|i| !self.is_winning(c.without(i))))
            .collect();
        ExplicitGame::from_masks(self.players.clone(), family, FamilyKind::MinimalWinning)
    }
}
