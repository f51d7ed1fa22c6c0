//! The `obstructia` command line.
//!
//! Exit codes: 0 on success, 1 when a computation or input is rejected (the
//! error name is printed first), 2 on bad usage.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::fincat::text::parse_category;
use crate::fincat::{FinCat, DEFAULT_OBJECT_CAP};
use crate::homotopy::{self, analyze_morphism, HomotopyError, Level, ObstructionReport, INTERCHANGE_VERSION};
use crate::opengraph::{self, GraphHom, OpenGraph, Relation};
use crate::setcat::{pi0_function, pi1_function, FiniteFunction};
use crate::states::{local_action, LinearMap, LocalMap, StateContext};
use crate::Error;

/// Largest universe listed explicitly for functions between sets.
pub const SET_UNIVERSE_CAP: usize = 10;
/// Largest universe listed explicitly for relations and states.
pub const PAIR_UNIVERSE_CAP: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Dot,
    Interchange,
}

#[derive(Debug, Parser)]
#[command(name = "obstructia", version, about = "Homotopy posets of finite categories and the obstructions they classify")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Largest derived category (slice, parallel arrows) that may be built.
    #[arg(long, global = true, default_value_t = DEFAULT_OBJECT_CAP)]
    cap_objects: usize,
    /// Largest universe whose subset poset is listed element by element.
    #[arg(long, global = true)]
    max_universe: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Finite categories read from the category text format.
    #[command(subcommand)]
    Cat(CatCommand),
    /// Functions between finite sets.
    #[command(subcommand)]
    Set(SetCommand),
    /// Open graphs and their reachability relations.
    #[command(subcommand)]
    Opengraph(GraphCommand),
    /// States in cartesian or GF(2) settings.
    #[command(subcommand)]
    States(StatesCommand),
}

#[derive(Debug, Subcommand)]
enum CatCommand {
    /// Check the category laws.
    Validate { file: PathBuf },
    /// Obstructions to weak terminality.
    Pi0 {
        file: PathBuf,
        #[arg(long)]
        object: String,
    },
    /// Obstructions to subterminality.
    Pi1 {
        file: PathBuf,
        #[arg(long)]
        object: String,
    },
    /// Split-epi, mono and iso through the slice over the codomain.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        morphism: String,
    },
    /// Weak terminal, subterminal and terminal, read off both posets.
    CheckTerminal {
        file: PathBuf,
        #[arg(long)]
        object: String,
    },
}

#[derive(Debug, Subcommand)]
enum SetCommand {
    /// Subsets of the codomain missed by the image.
    Pi0 {
        #[arg(long = "fn")]
        function: PathBuf,
    },
    /// Pairs identified off the diagonal.
    Pi1 {
        #[arg(long = "fn")]
        function: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
enum GraphCommand {
    /// Glue the outputs of the first graph to the inputs of the second.
    Compose { g: PathBuf, h: PathBuf },
    /// Input-output reachability.
    Reach { g: PathBuf },
    /// Obstructions to `reach(G);reach(H) = reach(G;H)`.
    Obstruct {
        g: PathBuf,
        h: PathBuf,
        #[arg(long, default_value = "0")]
        level: Level,
    },
    /// Push the obstructions along a homomorphism out of the first graph.
    Act { g: PathBuf, h: PathBuf, hom: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ContextKind {
    Cartesian,
    Gf2,
}

#[derive(Debug, Args)]
struct ContextArgs {
    #[arg(long, value_enum)]
    context: ContextKind,
    /// Two sets, as `a,b|c,d`.
    #[arg(long)]
    sets: Option<String>,
    /// Two dimensions, as `2,2`.
    #[arg(long)]
    dims: Option<String>,
}

#[derive(Debug, Subcommand)]
enum StatesCommand {
    /// Obstructions to the laxator being invertible.
    Obstruct {
        #[command(flatten)]
        ctx: ContextArgs,
        #[arg(long, default_value = "0")]
        level: Level,
    },
    /// Act on the tensor with local maps: bit-row matrices over GF(2), or
    /// `a=>x,b=>y` assignments together with `--targets` for sets.
    LocalAct {
        #[command(flatten)]
        ctx: ContextArgs,
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        /// Codomains of the two functions, as `x,y|p,q`.
        #[arg(long)]
        targets: Option<String>,
    },
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl<E: Into<Error>> From<E> for Failure {
    fn from(e: E) -> Failure {
        Failure::Domain(e.into())
    }
}

/// Runs the command line on `args` (the program name first) and returns the
/// exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {}: {e}", e.name());
            1
        }
    }
}

fn read(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn load_category(path: &Path) -> Result<Arc<FinCat>, Error> {
    let raw = parse_category(&read(path)?)?;
    Ok(Arc::new(FinCat::validate(&raw)?))
}

fn load_graph(path: &Path) -> Result<OpenGraph, Error> {
    Ok(OpenGraph::parse(&read(path)?)?)
}

fn interchange(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("values serialize");
    s.push('\n');
    s
}

fn no_dot(what: &str) -> Failure {
    Failure::Usage(format!("--format dot is not available for {what}"))
}

fn render_report(r: &ObstructionReport, format: Format, max_universe: usize) -> Result<String, Failure> {
    Ok(match format {
        Format::Text => r.to_text(max_universe),
        Format::Dot => r.to_dot(max_universe)?,
        Format::Interchange => interchange(r.to_interchange(max_universe)),
    })
}

fn dispatch(cli: &Cli) -> Result<String, Failure> {
    let cap = cli.cap_objects;
    let format = cli.format;
    let universe = |default: usize| cli.max_universe.unwrap_or(default);
    match &cli.command {
        Command::Cat(cmd) => cat(cmd, format, cap),
        Command::Set(cmd) => {
            let (path, level) = match cmd {
                SetCommand::Pi0 { function } => (function, Level::Zero),
                SetCommand::Pi1 { function } => (function, Level::One),
            };
            let f = FiniteFunction::parse(&read(path)?)?;
            let r = match level {
                Level::Zero => pi0_function(&f),
                Level::One => pi1_function(&f),
            };
            render_report(&r, format, universe(SET_UNIVERSE_CAP))
        }
        Command::Opengraph(cmd) => graph(cmd, format, universe(PAIR_UNIVERSE_CAP)),
        Command::States(cmd) => states(cmd, format, universe(PAIR_UNIVERSE_CAP)),
    }
}

fn cat(cmd: &CatCommand, format: Format, cap: usize) -> Result<String, Failure> {
    match cmd {
        CatCommand::Validate { file } => {
            let c = load_category(file)?;
            c.check_laws()?;
            match format {
                Format::Text => Ok(format!(
                    "valid: {} objects, {} morphisms\ngroupoid: {}\n",
                    c.object_count(),
                    c.morphism_count(),
                    c.is_groupoid()
                )),
                Format::Dot => Err(no_dot("cat validate")),
                Format::Interchange => Ok(interchange(json!({
                    "version": INTERCHANGE_VERSION,
                    "valid": true,
                    "objects": c.object_count(),
                    "morphisms": c.morphism_count(),
                    "groupoid": c.is_groupoid(),
                }))),
            }
        }
        CatCommand::Pi0 { file, object } | CatCommand::Pi1 { file, object } => {
            let level = if matches!(cmd, CatCommand::Pi0 { .. }) { Level::Zero } else { Level::One };
            let c = load_category(file)?;
            let x = c.object(object)?;
            let p = homotopy::pi(&c, x, level, cap)?;
            let r = ObstructionReport::from_poset(format!("{level} at {object}"), p.into_pointed());
            render_report(&r, format, 0)
        }
        CatCommand::Analyze { file, morphism } => {
            let c = load_category(file)?;
            let a = analyze_morphism(&c, c.morphism(morphism)?, cap)?;
            Ok(match format {
                Format::Text => a.to_text(0),
                Format::Dot => format!("{}{}", a.pi0.to_dot(0)?, a.pi1.to_dot(0)?),
                Format::Interchange => interchange(a.to_interchange(0)),
            })
        }
        CatCommand::CheckTerminal { file, object } => {
            let c = load_category(file)?;
            let x = c.object(object)?;
            let weak = homotopy::pi0(&c, x)?.is_trivial();
            let sub = homotopy::pi1(&c, x, cap)?.is_trivial();
            if weak != homotopy::is_weak_terminal(&c, x)? {
                return Err(HomotopyError::OracleMismatch(format!("weak terminality of {object}")).into());
            }
            if sub != homotopy::is_subterminal(&c, x)? {
                return Err(HomotopyError::OracleMismatch(format!("subterminality of {object}")).into());
            }
            match format {
                Format::Text => Ok(format!(
                    "object: {object}\nweak terminal: {weak}\nsubterminal: {sub}\nterminal: {}\n",
                    weak && sub
                )),
                Format::Dot => Err(no_dot("cat check-terminal")),
                Format::Interchange => Ok(interchange(json!({
                    "version": INTERCHANGE_VERSION,
                    "object": object,
                    "weak_terminal": weak,
                    "subterminal": sub,
                    "terminal": weak && sub,
                }))),
            }
        }
    }
}

fn relation_json(r: &Relation) -> Value {
    let pairs: Vec<[&str; 2]> = r
        .pairs()
        .iter()
        .map(|&(a, b)| [r.dom()[a].as_str(), r.cod()[b].as_str()])
        .collect();
    json!(pairs)
}

fn graph_json(g: &OpenGraph) -> Value {
    let v = g.vertices();
    let edges: Vec<[&str; 2]> = g.edges().iter().map(|&(a, b)| [v[a].as_str(), v[b].as_str()]).collect();
    let legs = |points: &[String], leg: &dyn Fn(usize) -> usize| -> Vec<[String; 2]> {
        points
            .iter()
            .enumerate()
            .map(|(i, p)| [p.clone(), v[leg(i)].clone()])
            .collect()
    };
    json!({
        "version": INTERCHANGE_VERSION,
        "inputs": g.inputs(),
        "outputs": g.outputs(),
        "vertices": v,
        "edges": edges,
        "in": legs(g.inputs(), &|i| g.in_leg(i)),
        "out": legs(g.outputs(), &|i| g.out_leg(i)),
    })
}

fn graph(cmd: &GraphCommand, format: Format, max_universe: usize) -> Result<String, Failure> {
    match cmd {
        GraphCommand::Compose { g, h } => {
            let gh = opengraph::compose(&load_graph(g)?, &load_graph(h)?)?;
            Ok(match format {
                Format::Text => gh.to_text(),
                Format::Dot => gh.to_dot("composite"),
                Format::Interchange => interchange(graph_json(&gh)),
            })
        }
        GraphCommand::Reach { g } => {
            let r = opengraph::reach(&load_graph(g)?);
            match format {
                Format::Text => Ok(format!("{r}\n")),
                Format::Dot => Err(no_dot("opengraph reach")),
                Format::Interchange => Ok(interchange(json!({
                    "version": INTERCHANGE_VERSION,
                    "reach": relation_json(&r),
                }))),
            }
        }
        GraphCommand::Obstruct { g, h, level } => {
            let (g, h) = (load_graph(g)?, load_graph(h)?);
            let r = match level {
                Level::Zero => opengraph::laxator_obstructions(&g, &h)?,
                Level::One => opengraph::pi1_laxator(&g, &h)?,
            };
            render_report(&r, format, max_universe)
        }
        GraphCommand::Act { g, h, hom } => {
            let g = load_graph(g)?;
            let hom = GraphHom::parse(&g, &read(hom)?)?;
            let a = opengraph::act(&hom, &load_graph(h)?)?;
            let fates = a.map.minimal_fates();
            match format {
                Format::Text => {
                    let mut out = format!("reach after: {}\n", opengraph::reach(&a.graph));
                    for (from, to, t) in &fates {
                        out.push_str(&format!("{from} -> {to}{}\n", if *t { " (trivialised)" } else { "" }));
                    }
                    out.push_str("-- before\n");
                    out.push_str(&a.before.to_text(max_universe));
                    out.push_str("-- after\n");
                    out.push_str(&a.after.to_text(max_universe));
                    Ok(out)
                }
                Format::Dot => Err(no_dot("opengraph act")),
                Format::Interchange => {
                    let fates: Vec<Value> = fates
                        .into_iter()
                        .map(|(from, to, t)| json!({ "from": from, "to": to, "trivialised": t }))
                        .collect();
                    Ok(interchange(json!({
                        "version": INTERCHANGE_VERSION,
                        "reach_after": relation_json(&opengraph::reach(&a.graph)),
                        "trivialising": a.map.is_trivialising(),
                        "fates": fates,
                        "before": a.before.to_interchange(max_universe),
                        "after": a.after.to_interchange(max_universe),
                    })))
                }
            }
        }
    }
}

fn context(args: &ContextArgs) -> Result<StateContext, Failure> {
    match (args.context, &args.sets, &args.dims) {
        (ContextKind::Cartesian, Some(sets), None) => Ok(StateContext::parse_sets(sets)?),
        (ContextKind::Gf2, None, Some(dims)) => Ok(StateContext::parse_dims(dims)?),
        (ContextKind::Cartesian, ..) => Err(Failure::Usage("--context cartesian takes --sets only".into())),
        (ContextKind::Gf2, ..) => Err(Failure::Usage("--context gf2 takes --dims only".into())),
    }
}

fn function_between(name: &str, dom: &[String], cod: &str, assignments: &str) -> Result<FiniteFunction, Failure> {
    let src = format!("fn {name} : {{{}}} -> {{{cod}}} ; {assignments}", dom.join(","));
    Ok(FiniteFunction::parse(&src)?)
}

fn states(cmd: &StatesCommand, format: Format, max_universe: usize) -> Result<String, Failure> {
    match cmd {
        StatesCommand::Obstruct { ctx, level } => render_report(&context(ctx)?.obstructions(*level), format, max_universe),
        StatesCommand::LocalAct { ctx, f, g, targets } => {
            let ctx = context(ctx)?;
            let (f, g) = match (&ctx, targets) {
                (StateContext::Gf2 { .. }, None) => (
                    LocalMap::Linear(LinearMap::parse(f)?),
                    LocalMap::Linear(LinearMap::parse(g)?),
                ),
                (StateContext::Cartesian { a, b }, Some(targets)) => {
                    let (ta, tb) = targets
                        .split_once('|')
                        .ok_or_else(|| Failure::Usage("--targets expects `x,y|p,q`".into()))?;
                    (
                        LocalMap::Function(function_between("f", a, ta, f)?),
                        LocalMap::Function(function_between("g", b, tb, g)?),
                    )
                }
                (StateContext::Gf2 { .. }, Some(_)) => return Err(Failure::Usage("--targets is only for sets".into())),
                (StateContext::Cartesian { .. }, None) => {
                    return Err(Failure::Usage("--context cartesian needs --targets".into()))
                }
            };
            let act = local_action(&ctx, &f, &g)?;
            match format {
                Format::Text => Ok(act.to_text()),
                Format::Dot => Err(no_dot("states local-act")),
                Format::Interchange => Ok(interchange(act.to_interchange())),
            }
        }
    }
}
