//! Command-line front end for the influence game toolkit.
//!
//! [`run`] parses a command line and returns the report that the binary
//! prints; [`CliError::exit_code`] maps failures to the process status.

pub mod document;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use igt_core::analysis::{self, Method, PlayerProperty, TeamProperty};
use igt_core::reductions::{self, oracle, ExpectedRelation, GadgetInstance};
use igt_core::special::GameProperty;
use igt_core::{spread_trace, CombineMode, InfluenceGame, Limits, Measure, NodeSet, SimpleGraph};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use thiserror::Error;

use document::{DocumentError, GameDocument, Payload};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Usage(#[from] clap::Error),
    #[error("cannot read `{path}`: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("cannot write `{path}`: {source}")]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Document {
        path: PathBuf,
        source: DocumentError,
    },
    #[error(transparent)]
    Core(#[from] igt_core::Error),
    #[error("{0}")]
    Invalid(String),
}

impl CliError {
    /// 2 for usage and validation failures, 3 when an enumeration cap is hit.
    pub fn exit_code(&self) -> u8 {
        let limit = match self {
            CliError::Core(e) => e.is_limit(),
            CliError::Document {
                source: DocumentError::Invariant(e),
                ..
            } => e.is_limit(),
            _ => false,
        };
        if limit {
            3
        } else {
            2
        }
    }
}

type Result<T, E = CliError> = std::result::Result<T, E>;

#[derive(Parser, Debug)]
#[command(name = "igt", version, about = "Exact analysis of influence games")]
pub struct Cli {
    #[command(flatten)]
    caps: Caps,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Caps {
    /// Players enumerated by measures, power and property checks.
    #[arg(long, global = true, env = "IGT_MAX_PLAYERS", default_value_t = 20)]
    max_players: usize,
    /// Players up to which `combine` checks its output team by team.
    #[arg(long, global = true, default_value_t = 12)]
    combine_validation: usize,
    /// Players accepted by the isomorphism search.
    #[arg(long, global = true, default_value_t = 8)]
    iso_players: usize,
}

impl Caps {
    fn limits(&self) -> Limits {
        Limits {
            max_players: self.max_players,
            combine_validation: self.combine_validation,
            iso_players: self.iso_players,
            ..Limits::default()
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Nodes activated by a set of initial nodes.
    Spread {
        #[arg(long)]
        game: PathBuf,
        #[arg(long, default_value = "")]
        team: String,
        /// Print every round of the process.
        #[arg(long)]
        trace: bool,
    },
    /// Whether a team is successful.
    Check {
        #[arg(long)]
        game: PathBuf,
        #[arg(long, default_value = "")]
        team: String,
    },
    /// Length, width, sLength or sWidth.
    Measure {
        #[arg(long)]
        game: PathBuf,
        #[arg(long)]
        kind: MeasureArg,
        #[arg(long, default_value = "auto")]
        method: MethodArg,
    },
    /// Banzhaf and Shapley-Shubik values and indices.
    Power {
        #[arg(long)]
        game: PathBuf,
        #[arg(long, required_unless_present = "all")]
        player: Option<String>,
        #[arg(long)]
        all: bool,
        /// Add a decimal rendering of each index.
        #[arg(long)]
        decimal: bool,
    },
    /// Player, pair, team and game properties.
    #[command(subcommand)]
    Prop(Prop),
    /// Realise a minimal-winning or weighted game as an influence game.
    Convert {
        #[arg(long)]
        game: PathBuf,
        #[arg(long)]
        from: FromArg,
        #[arg(long)]
        to: ToArg,
    },
    /// Union or intersection of two games on the same players.
    Combine {
        #[arg(long)]
        mode: ModeArg,
        first: PathBuf,
        second: PathBuf,
    },
    /// The vertex cover game of a graph.
    Gamma {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Equivalence or isomorphism of two games.
    Compare {
        #[arg(long)]
        kind: CompareArg,
        first: PathBuf,
        second: PathBuf,
    },
    /// Reduction gadgets.
    Gen(Gen),
    /// Validate a document and print it in canonical form.
    Format {
        #[arg(long)]
        game: PathBuf,
    },
    /// Brute-force reference solvers.
    Oracle {
        #[arg(long)]
        kind: OracleArg,
        #[arg(long)]
        graph: Option<PathBuf>,
        #[command(flatten)]
        sets: SetsArgs,
    },
}

#[derive(Subcommand, Debug)]
enum Prop {
    Player {
        #[arg(long)]
        game: PathBuf,
        #[arg(long)]
        player: String,
        #[arg(long)]
        kind: PlayerArg,
    },
    /// Whether two players are symmetric.
    Pair {
        #[arg(long)]
        game: PathBuf,
        #[arg(long)]
        players: String,
    },
    Team {
        #[arg(long)]
        game: PathBuf,
        #[arg(long, default_value = "")]
        team: String,
        /// critical:<player>, blocking or swing.
        #[arg(long)]
        kind: String,
    },
    Game {
        #[arg(long)]
        game: PathBuf,
        #[arg(long)]
        kind: GamePropArg,
        #[arg(long, default_value = "auto")]
        method: MethodArg,
    },
}

#[derive(Args, Debug)]
struct Gen {
    #[arg(value_enum)]
    gadget: GadgetArg,
    #[arg(long)]
    graph: Option<PathBuf>,
    #[arg(long)]
    game: Option<PathBuf>,
    #[arg(long)]
    k: Option<usize>,
    #[command(flatten)]
    sets: SetsArgs,
    /// Print the expected relation check instead of the gadget.
    #[arg(long)]
    verify: bool,
    /// Where `isopair` writes its second game.
    #[arg(long)]
    second: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SetsArgs {
    /// Subsets of 1..=universe, e.g. "1,2;2,3".
    #[arg(long)]
    sets: Option<String>,
    #[arg(long)]
    universe: Option<usize>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum MeasureArg {
    Length,
    Width,
    Slength,
    Swidth,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum MethodArg {
    Auto,
    Brute,
    Special,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum PlayerArg {
    Passer,
    Vetoer,
    Dictator,
    Dummy,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum GamePropArg {
    Proper,
    Strong,
    Decisive,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum FromArg {
    Wm,
    Weighted,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ToArg {
    Ig,
    Uig,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ModeArg {
    Union,
    Intersection,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum CompareArg {
    Equiv,
    Iso,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum GadgetArg {
    Setcover,
    Setpacking,
    Delta1,
    Delta2,
    Delta3,
    Halfvc,
    Isopair,
    Necessary,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum OracleArg {
    MinVertexCover,
    CountVertexCovers,
    MaxIndependentSet,
    MinSetCover,
    MaxSetPacking,
}

impl From<MeasureArg> for Measure {
    fn from(m: MeasureArg) -> Self {
        match m {
            MeasureArg::Length => Measure::Length,
            MeasureArg::Width => Measure::Width,
            MeasureArg::Slength => Measure::SLength,
            MeasureArg::Swidth => Measure::SWidth,
        }
    }
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Auto => Method::Auto,
            MethodArg::Brute => Method::Brute,
            MethodArg::Special => Method::Special,
        }
    }
}

impl From<GamePropArg> for GameProperty {
    fn from(p: GamePropArg) -> Self {
        match p {
            GamePropArg::Proper => GameProperty::Proper,
            GamePropArg::Strong => GameProperty::Strong,
            GamePropArg::Decisive => GameProperty::Decisive,
        }
    }
}

impl From<ModeArg> for CombineMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Union => CombineMode::Union,
            ModeArg::Intersection => CombineMode::Intersection,
        }
    }
}

/// Parses `args` (program name first) and computes the report.
pub fn run<I, T>(args: I) -> Result<String>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(args)?;
    let limits = cli.caps.limits();
    match cli.command {
        Command::Spread { game, team, trace } => {
            let doc = load(&game)?;
            let game = influence(&doc, &limits)?;
            let g = game.graph();
            let seeds = g.indices_of(&split(&team))?;
            let run = spread_trace(g, &seeds);
            let mut out = String::new();
            if trace {
                for (round, step) in run.steps.iter().enumerate() {
                    writeln!(out, "round {round}: {}", node_set(g, step)).unwrap();
                }
            }
            writeln!(
                out,
                "{}",
                node_set(g, run.steps.last().expect("a trace has a first round"))
            )
            .unwrap();
            Ok(out)
        }
        Command::Check { game, team } => {
            let doc = load(&game)?;
            let team = split(&team);
            let wins = match &doc.payload {
                Payload::Weighted(w) => w.is_winning_ids(&team)?,
                Payload::Explicit(e) => e.is_winning_ids(&team)?,
                _ => influence(&doc, &limits)?.is_successful_ids(&team)?,
            };
            Ok(line(wins))
        }
        Command::Measure { game, kind, method } => {
            let doc = load(&game)?;
            let kind = Measure::from(kind);
            let value = match &doc.payload {
                Payload::Weighted(w) => w.to_explicit(&limits)?.measure(kind, &limits)?,
                Payload::Explicit(e) => e.measure(kind, &limits)?,
                _ => analysis::measure(&influence(&doc, &limits)?, kind, method.into(), &limits)?,
            };
            Ok(line(value.map_or("none".to_owned(), |v| v.to_string())))
        }
        Command::Power {
            game,
            player,
            all,
            decimal,
        } => {
            let game = influence(&load(&game)?, &limits)?;
            let reports = if all {
                analysis::power_all(&game, &limits)?
            } else {
                vec![analysis::power(
                    &game,
                    player.as_deref().unwrap_or_default(),
                    &limits,
                )?]
            };
            let mut out = String::new();
            for r in reports {
                let index = |q: &BigRational| {
                    if decimal {
                        format!("{q} ({})", approx(q, 6))
                    } else {
                        q.to_string()
                    }
                };
                writeln!(
                    out,
                    "{}: banzhaf_value={} banzhaf_index={} shapley_value={} shapley_index={}",
                    r.player,
                    r.banzhaf_value,
                    index(&r.banzhaf_index),
                    r.shapley_value,
                    index(&r.shapley_index)
                )
                .unwrap();
            }
            Ok(out)
        }
        Command::Prop(prop) => prop_report(prop, &limits),
        Command::Convert { game, from, to } => {
            let doc = load(&game)?;
            let converted = match (from, &doc.payload) {
                (FromArg::Wm, Payload::Explicit(e)) => {
                    InfluenceGame::from_minimal_winning(e, &limits)?
                }
                (FromArg::Weighted, Payload::Weighted(w)) => match to {
                    ToArg::Ig => InfluenceGame::from_weighted(w)?,
                    ToArg::Uig => InfluenceGame::from_weighted_unweighted(w, &limits)?,
                },
                (_, other) => {
                    return Err(CliError::Invalid(format!(
                        "--from {from:?} does not accept a {} document",
                        other.kind()
                    )))
                }
            };
            Ok(document::emit(&GameDocument::new(Payload::Influence(
                converted,
            ))))
        }
        Command::Combine {
            mode,
            first,
            second,
        } => {
            let (a, b) = (load(&first)?, load(&second)?);
            let combined = match (&a.payload, &b.payload) {
                (Payload::Weighted(w1), Payload::Weighted(w2)) => {
                    InfluenceGame::combine_weighted(w1, w2, mode.into())?
                }
                _ => influence(&a, &limits)?.combine(
                    &influence(&b, &limits)?,
                    mode.into(),
                    &limits,
                )?,
            };
            Ok(document::emit(&GameDocument::new(Payload::Influence(
                combined,
            ))))
        }
        Command::Gamma { graph } => {
            let graph = simple_graph(&load(&graph)?)?;
            let game = InfluenceGame::vertex_cover_game(&graph);
            Ok(document::emit(&GameDocument::new(Payload::Influence(game))))
        }
        Command::Compare {
            kind,
            first,
            second,
        } => {
            let a = influence(&load(&first)?, &limits)?;
            let b = influence(&load(&second)?, &limits)?;
            match kind {
                CompareArg::Equiv => Ok(line(analysis::equivalent(&a, &b, &limits)?)),
                CompareArg::Iso => Ok(match analysis::isomorphic(&a, &b, &limits)? {
                    None => line(false),
                    Some(map) => {
                        let mut out = line(true);
                        for (from, to) in map {
                            writeln!(out, "{from} -> {to}").unwrap();
                        }
                        out
                    }
                }),
            }
        }
        Command::Gen(args) => gen_report(args, &limits),
        Command::Format { game } => Ok(document::emit(&load(&game)?)),
        Command::Oracle { kind, graph, sets } => {
            let value = match kind {
                OracleArg::MinSetCover => {
                    let (sets, universe) = parse_sets(&sets)?;
                    oracle::min_set_cover(&sets, universe, &limits)?
                        .map_or("none".to_owned(), |v| v.to_string())
                }
                OracleArg::MaxSetPacking => {
                    let (sets, _) = parse_sets(&sets)?;
                    oracle::max_set_packing(&sets, &limits)?.to_string()
                }
                _ => {
                    let path =
                        graph.ok_or_else(|| CliError::Invalid("--graph is required".into()))?;
                    let g = simple_graph(&load(&path)?)?;
                    match kind {
                        OracleArg::MinVertexCover => {
                            oracle::min_vertex_cover(&g, &limits)?.to_string()
                        }
                        OracleArg::CountVertexCovers => {
                            oracle::count_vertex_covers(&g, &limits)?.to_string()
                        }
                        _ => oracle::max_independent_set(&g, &limits)?.to_string(),
                    }
                }
            };
            Ok(line(value))
        }
    }
}

fn prop_report(prop: Prop, limits: &Limits) -> Result<String> {
    let answer = match prop {
        Prop::Player { game, player, kind } => {
            let game = influence(&load(&game)?, limits)?;
            match kind {
                PlayerArg::Passer => {
                    analysis::player_property(&game, &player, PlayerProperty::Passer)?
                }
                PlayerArg::Vetoer => {
                    analysis::player_property(&game, &player, PlayerProperty::Vetoer)?
                }
                PlayerArg::Dictator => {
                    analysis::player_property(&game, &player, PlayerProperty::Dictator)?
                }
                PlayerArg::Dummy => analysis::is_dummy(&game, &player, limits)?,
            }
        }
        Prop::Pair { game, players } => {
            let game = influence(&load(&game)?, limits)?;
            let [a, b] = <[String; 2]>::try_from(split(&players)).map_err(|_| {
                CliError::Invalid("--players takes exactly two players, e.g. a,b".into())
            })?;
            analysis::are_symmetric(&game, &a, &b, limits)?
        }
        Prop::Team { game, team, kind } => {
            let game = influence(&load(&game)?, limits)?;
            let kind: TeamProperty = kind.parse()?;
            analysis::team_property(&game, &split(&team), &kind)?
        }
        Prop::Game { game, kind, method } => {
            let game = influence(&load(&game)?, limits)?;
            analysis::game_property(&game, kind.into(), method.into(), limits)?
        }
    };
    Ok(line(answer))
}

fn gen_report(args: Gen, limits: &Limits) -> Result<String> {
    let need_graph = || -> Result<SimpleGraph> {
        let path = args
            .graph
            .as_ref()
            .ok_or_else(|| CliError::Invalid("--graph is required".into()))?;
        simple_graph(&load(path)?)
    };
    let need_k = || {
        args.k
            .ok_or_else(|| CliError::Invalid("--k is required".into()))
    };
    let instance = match args.gadget {
        GadgetArg::Setcover => {
            let (sets, universe) = parse_sets(&args.sets)?;
            reductions::gen_setcover_length_game(&sets, universe)?
        }
        GadgetArg::Setpacking => {
            let (sets, universe) = parse_sets(&args.sets)?;
            reductions::gen_setpacking_width_game(&sets, universe)?
        }
        GadgetArg::Delta1 => reductions::gen_delta1(&need_graph()?, need_k()?)?,
        GadgetArg::Delta2 => reductions::gen_delta2(&need_graph()?, need_k()?)?,
        GadgetArg::Delta3 => reductions::gen_delta3(&need_graph()?)?,
        GadgetArg::Isopair => {
            let inst = reductions::gen_iso_pair_instance(&need_graph()?, need_k()?, limits)?;
            if let (Some(path), ExpectedRelation::EquivalentIffNoSmallCover { other, .. }) =
                (&args.second, &inst.relation)
            {
                let text = document::emit(&gadget_document((**other).clone(), &inst));
                std::fs::write(path, text).map_err(|source| CliError::Write {
                    path: path.clone(),
                    source,
                })?;
            }
            inst
        }
        GadgetArg::Halfvc => {
            let (g, k) = (need_graph()?, need_k()?);
            let doc = GameDocument::new(Payload::Graph(reductions::gen_half_vc_graph(&g, k)?))
                .with_meta("gadget", "halfvc")
                .with_meta("k", k)
                .with_meta(
                    "relation",
                    "vertex cover of size <= k in the source iff one of size <= |V| here",
                );
            return Ok(document::emit(&doc));
        }
        GadgetArg::Necessary => {
            let path = args
                .game
                .as_ref()
                .ok_or_else(|| CliError::Invalid("--game is required".into()))?;
            let base = influence(&load(path)?, limits)?;
            let (game, report) = reductions::gen_necessary_player(&base, limits)?;
            if args.verify {
                return Ok(line(format!(
                    "passed: {}; exhaustive: {}; teams checked: {}; winners without x: {}; mismatches with x: {}",
                    report.passed(),
                    report.exhaustive,
                    report.teams_checked,
                    report.winners_without_x,
                    report.mismatches_with_x
                )));
            }
            let doc = GameDocument::new(Payload::Influence(game))
                .with_meta("gadget", "necessary")
                .with_meta("exhaustive", report.exhaustive)
                .with_meta("mismatches_with_x", report.mismatches_with_x)
                .with_meta("winners_without_x", report.winners_without_x);
            return Ok(document::emit(&doc));
        }
    };
    if args.verify {
        let v = instance.verify(limits)?;
        return Ok(line(format!(
            "{}: {} (game side: {}, source side: {})",
            relation_name(&instance.relation),
            v.holds,
            v.game_side,
            v.source_side
        )));
    }
    Ok(document::emit(&gadget_document(
        instance.game.clone(),
        &instance,
    )))
}

fn gadget_document(game: InfluenceGame, instance: &GadgetInstance) -> GameDocument {
    let p = &instance.provenance;
    let mut doc = GameDocument::new(Payload::Influence(game))
        .with_meta("gadget", p.gadget)
        .with_meta("source", &p.source)
        .with_meta("relation", relation_name(&instance.relation));
    for (key, value) in &p.params {
        doc = doc.with_meta(*key, value);
    }
    doc
}

fn relation_name(relation: &ExpectedRelation) -> &'static str {
    match relation {
        ExpectedRelation::LengthIsMinSetCover { .. } => "length equals minimum set cover",
        ExpectedRelation::WidthIsMaxSetPacking { .. } => "width equals maximum set packing",
        ExpectedRelation::LargeOrCoverWithZ { .. } => {
            "wins iff more than k vertices or z with a vertex cover"
        }
        ExpectedRelation::SymmetricIffNoSmallCover { .. } => {
            "z and t symmetric iff no vertex cover of size <= k"
        }
        ExpectedRelation::StrongIffNoLargeIndependentSet { .. } => {
            "strong iff no independent set of size >= n/2"
        }
        ExpectedRelation::EquivalentIffNoSmallCover { .. } => {
            "equivalent iff no vertex cover of size <= k"
        }
    }
}

fn load(path: &Path) -> Result<GameDocument> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_owned(),
        source,
    })?;
    document::parse(&text).map_err(|source| CliError::Document {
        path: path.to_owned(),
        source,
    })
}

/// Any game document as an influence game with the same winning teams.
fn influence(doc: &GameDocument, limits: &Limits) -> Result<InfluenceGame> {
    Ok(match &doc.payload {
        Payload::Influence(g) => g.clone(),
        Payload::Weighted(w) => InfluenceGame::from_weighted(w)?,
        Payload::Explicit(e) => InfluenceGame::from_minimal_winning(e, limits)?,
        Payload::Graph(_) => {
            return Err(CliError::Invalid(
                "expected a game document, found a graph".into(),
            ))
        }
    })
}

fn simple_graph(doc: &GameDocument) -> Result<SimpleGraph> {
    match &doc.payload {
        Payload::Graph(g) => Ok(g.clone()),
        other => Err(CliError::Invalid(format!(
            "expected a graph document, found {}",
            other.kind()
        ))),
    }
}

fn parse_sets(args: &SetsArgs) -> Result<(Vec<Vec<usize>>, usize)> {
    let text = args
        .sets
        .as_deref()
        .ok_or_else(|| CliError::Invalid("--sets is required".into()))?;
    let sets = text
        .split(';')
        .map(|set| {
            split(set)
                .iter()
                .map(|e| {
                    e.parse::<usize>()
                        .map_err(|_| CliError::Invalid(format!("`{e}` is not an element")))
                })
                .collect()
        })
        .collect::<Result<Vec<Vec<usize>>>>()?;
    let universe = match args.universe {
        Some(u) => u,
        None => sets.iter().flatten().copied().max().unwrap_or(0),
    };
    Ok((sets, universe))
}

fn split(list: &str) -> Vec<String> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::to_owned)
        .collect()
}

fn line(value: impl ToString) -> String {
    format!("{}\n", value.to_string())
}

fn node_set(graph: &igt_core::InfluenceGraph, set: &NodeSet) -> String {
    let mut ids: Vec<&str> = set.ones().map(|v| graph.id(v)).collect();
    ids.sort_unstable();
    format!("{{{}}}", ids.join(", "))
}

/// Decimal expansion truncated to `digits` places, marked `~` when inexact.
fn approx(q: &BigRational, digits: u32) -> String {
    let scale = BigInt::from(10u32).pow(digits);
    let scaled = q.abs() * BigRational::from_integer(scale.clone());
    let whole = scaled.to_integer();
    let exact = scaled.is_integer();
    let int_part = &whole / &scale;
    let frac = (&whole % &scale)
        .to_u64()
        .expect("fraction below the scale");
    let sign = if q.is_negative() { "-" } else { "" };
    let mark = if exact { "" } else { "~" };
    format!(
        "{mark}{sign}{int_part}.{frac:0width$}",
        width = digits as usize
    )
}
