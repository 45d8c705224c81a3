//! Exact analysis toolkit for influence games.
//!
//! An influence game is a simple game whose winning coalitions are the seed
//! sets that, under deterministic linear-threshold spread on a weighted
//! directed graph, activate at least `quota` agents. The crate covers:
//!
//! * [`graph`] and [`spread`]: influence graphs and the spread process,
//! * [`forms`]: explicit (winning or minimal winning) and weighted representations,
//! * [`game`]: the [`InfluenceGame`] type and the graph constructions that
//!   turn other representations into influence games,
//! * [`analysis`]: measures, power indices and properties by exact enumeration,
//! * [`special`]: polynomial algorithms for maximum- and minimum-influence games,
//! * [`reductions`]: hardness gadget generators with brute-force oracles.
//!
//! Everything that needs to enumerate coalitions is guarded by [`Limits`] and
//! fails with [`Error::Limit`] instead of running for an unbounded time.

pub mod analysis;
pub mod coalition;
pub mod error;
pub mod forms;
pub mod game;
pub mod graph;
pub mod limits;
pub mod reductions;
pub mod special;
pub mod spread;

pub use coalition::Coalition;
pub use error::{Error, Result};
pub use forms::{CombineMode, ExplicitGame, FamilyKind, Measure, WeightedGame};
pub use game::InfluenceGame;
pub use graph::{InfluenceGraph, SimpleGraph};
pub use limits::Limits;
pub use spread::{spread, spread_trace, ActivationTrace, NodeSet};
