//! `graslice`: command-line front end.
//!
//! Every command prints one JSON document on stdout (or a graph in the
//! requested `--format`). Exit codes: 0 success or positive verdict, 1
//! negative verdict or counterexample (always with a JSON payload), 2 usage or
//! input error (message on stderr).

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use graslice::analysis::{
    classify_cone_base, classify_slice_base, classify_slice_object, dichotomy_sweep, full_embedding_check,
    retract_slice_to_path,
};
use graslice::{
    arrow_slice, build_gk, builtin_gadget, check_strong_replacement, classify_endomorphisms,
    classify_graph_endomorphisms, digraphs_with, enumerate_digraph_homs, enumerate_homs, enumerate_slice_homs,
    verify_candidate, verify_candidate_exhaustive, BuiltinBase, Digraph, DigraphFilter, Error, Gadget, GadgetCandidate,
    Graph, Morphism, ReplacementRegime, SearchBudget, SliceObject, VertexMap, DEFAULT_DIGRAPH_CAP,
};
use serde::Serialize;
use serde_json::{json, Value};

/// Largest carrier size the dichotomy sweep accepts; 2^28 labeled graphs at
/// eight vertices is out of reach.
const MAX_SWEEP_CARRIER: usize = 7;

#[derive(Parser)]
#[command(
    name = "graslice",
    version,
    about = "Slice categories of graphs: gadgets, homomorphisms, universality"
)]
struct Cli {
    /// Worker threads for sweeps (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Output format; `edgelist` and `dot` apply to commands that print graphs.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Log progress to stderr.
    #[arg(short, long, global = true)]
    verbose: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Edgelist,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exists,
    Count,
    List,
}

#[derive(Args)]
struct GadgetArg {
    /// Built-in gadget (`c3`, `c4`, `p4`, `y`, `g<k>`) or a gadget JSON file.
    #[arg(long)]
    gadget: String,
}

#[derive(Args)]
#[group(multiple = false)]
struct Domain {
    /// Check every digraph with 1..=N vertices.
    #[arg(long)]
    max_size: Option<usize>,
    /// Check a single digraph.
    #[arg(long)]
    digraph: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether Gra/G is algebraically universal.
    Classify { graph: PathBuf },
    /// Decide whether the cone category over G is algebraically universal.
    ConeClassify { graph: PathBuf },
    /// Build the product D ⋆ H as a slice object.
    Arrow {
        digraph: PathBuf,
        #[command(flatten)]
        gadget: GadgetArg,
    },
    /// The embedding of the gadget copy on one arc.
    Phi {
        digraph: PathBuf,
        #[command(flatten)]
        gadget: GadgetArg,
        #[arg(long, num_args = 2, value_names = ["U", "V"])]
        arc: Vec<String>,
    },
    /// Check that slice morphisms from the gadget into D ⋆ H are exactly the copies.
    VerifyGadget {
        #[command(flatten)]
        gadget: GadgetArg,
        #[command(flatten)]
        domain: Domain,
    },
    /// Check that every homomorphism H -> D ⋆ H lands in a single copy.
    StrongReplacement {
        /// Graph file; give `--a` and `--b` with it. Alternative to `--gadget`.
        graph: Option<PathBuf>,
        #[arg(long, conflicts_with = "graph")]
        gadget: Option<String>,
        #[arg(long, requires = "graph")]
        a: Option<String>,
        #[arg(long, requires = "graph")]
        b: Option<String>,
        #[command(flatten)]
        domain: Domain,
        /// Quantify over isolated-point-free digraphs with loops instead of loopless ones.
        #[arg(long)]
        loops: bool,
    },
    /// Homomorphisms between graphs, digraphs or slice objects.
    Homs {
        source: PathBuf,
        target: PathBuf,
        /// Treat inputs as slice objects over this base.
        #[arg(long)]
        base: Option<PathBuf>,
        /// Treat inputs as digraphs.
        #[arg(long, conflicts_with = "base")]
        directed: bool,
        #[arg(long, value_enum, default_value_t = Mode::Count)]
        mode: Mode,
        /// Stop listing after this many.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Count endomorphisms and automorphisms of a graph or slice object.
    Endos { object: PathBuf },
    /// Retract a connected object over a short path onto a minimal path.
    Retract { object: PathBuf },
    /// Rigid-or-proper-endomorphism verdicts over a union of short paths.
    Dichotomy {
        /// Base graph for a sweep.
        #[arg(required_unless_present = "object")]
        base: Option<PathBuf>,
        #[arg(long, requires = "base", default_value_t = 4)]
        max_carrier: usize,
        #[arg(long, requires = "base")]
        connected_only: bool,
        /// Classify a single slice object instead of sweeping.
        #[arg(long, conflicts_with = "base")]
        object: Option<PathBuf>,
    },
    /// Verify that D ↦ D ⋆ H is full and faithful on small digraphs.
    EmbedCheck {
        #[command(flatten)]
        gadget: GadgetArg,
        #[arg(long, default_value_t = 2)]
        max_size: usize,
    },
    /// List labeled digraphs on v0..v(n-1).
    EnumerateDigraphs {
        n: usize,
        /// Keep digraphs with isolated points.
        #[arg(long)]
        all: bool,
        #[arg(long)]
        irreflexive: bool,
        /// One representative per isomorphism class.
        #[arg(long)]
        canonical: bool,
        /// Print only the count.
        #[arg(long)]
        count: bool,
    },
    /// Print a built-in gadget.
    Gadget { name: String },
}

/// What a command produced.
struct Output {
    json: Value,
    graphs: Vec<Rendered>,
    negative: bool,
}

enum Rendered {
    Graph(Graph),
    Digraph(Digraph),
}

impl Output {
    fn new(value: impl Serialize) -> anyhow::Result<Self> {
        Ok(Output {
            json: serde_json::to_value(value)?,
            graphs: Vec::new(),
            negative: false,
        })
    }

    fn negative_if(mut self, negative: bool) -> Self {
        self.negative = negative;
        self
    }

    fn with_graph(mut self, g: Rendered) -> Self {
        self.graphs.push(g);
        self
    }

    fn render(&self, format: Format) -> anyhow::Result<String> {
        if format == Format::Json {
            return Ok(serde_json::to_string_pretty(&self.json)? + "\n");
        }
        if self.graphs.is_empty() {
            bail!("this command prints JSON only");
        }
        let parts: Vec<String> = self
            .graphs
            .iter()
            .map(|g| match (g, format) {
                (Rendered::Graph(g), Format::Dot) => g.to_dot(),
                (Rendered::Graph(g), _) => g.to_edge_list(),
                (Rendered::Digraph(d), Format::Dot) => d.to_dot(),
                (Rendered::Digraph(d), _) => d.to_edge_list(),
            })
            .collect();
        Ok(match format {
            Format::Edgelist if parts.len() > 1 => parts
                .iter()
                .enumerate()
                .map(|(i, p)| format!("# digraph {i}\n{p}"))
                .collect::<Vec<_>>()
                .join("\n"),
            _ => parts.concat(),
        })
    }
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn read_graph(path: &Path) -> anyhow::Result<Graph> {
    Graph::parse(&read(path)?).with_context(|| format!("{}", path.display()))
}

fn read_digraph(path: &Path) -> anyhow::Result<Digraph> {
    Digraph::parse(&read(path)?).with_context(|| format!("{}", path.display()))
}

fn read_slice(path: &Path) -> anyhow::Result<SliceObject> {
    serde_json::from_str(&read(path)?).with_context(|| format!("{}: expected a slice object", path.display()))
}

/// A slice object (JSON with a `carrier` field) or a plain graph.
enum Object {
    Slice(SliceObject),
    Plain(Graph),
}

fn read_object(path: &Path) -> anyhow::Result<Object> {
    let text = read(path)?;
    if text.trim_start().starts_with('{') {
        let value: Value = serde_json::from_str(&text).with_context(|| format!("{}", path.display()))?;
        if value.get("carrier").is_some() {
            let x = serde_json::from_value(value).with_context(|| format!("{}", path.display()))?;
            return Ok(Object::Slice(x));
        }
    }
    Ok(Object::Plain(
        Graph::parse(&text).with_context(|| format!("{}", path.display()))?,
    ))
}

/// A gadget by built-in name or from a file, not yet validated.
fn gadget_candidate(which: &str) -> anyhow::Result<GadgetCandidate> {
    if let Ok(base) = which.parse::<BuiltinBase>() {
        return Ok(builtin_gadget(base).to_candidate());
    }
    if let Some(k) = which.strip_prefix(['g', 'G']).and_then(|k| k.parse::<usize>().ok()) {
        return Ok(build_gk(k)?.gadget()?.to_candidate());
    }
    let path = Path::new(which);
    if !path.exists() {
        bail!(Error::UnknownGadget(which.to_string()));
    }
    serde_json::from_str(&read(path)?).with_context(|| format!("{}: expected a gadget", path.display()))
}

fn gadget(which: &str) -> anyhow::Result<Gadget> {
    gadget_candidate(which)?
        .validate()
        .with_context(|| format!("invalid gadget {which}"))
}

fn check_size(n: usize) -> anyhow::Result<()> {
    if n == 0 {
        bail!(Error::EmptyDigraphSize);
    }
    if n > DEFAULT_DIGRAPH_CAP {
        bail!(Error::DigraphCap {
            n,
            cap: DEFAULT_DIGRAPH_CAP
        });
    }
    Ok(())
}

fn warn_isolated(d: &Digraph) {
    let isolated = d.isolated_points();
    if !isolated.is_empty() {
        let names: Vec<&str> = isolated.iter().map(|&v| d.name(v)).collect();
        log::warn!(
            "digraph has isolated points {names:?}; the product is defined but lies outside the embedded category"
        );
    }
}

fn maps(stream: impl Iterator<Item = Morphism>) -> Vec<VertexMap> {
    stream.map(|m| m.to_map()).collect()
}

fn budget(mode: Mode, limit: Option<usize>) -> SearchBudget {
    let b = match mode {
        Mode::Exists => SearchBudget::exists(),
        Mode::Count => SearchBudget::count(),
        Mode::List => SearchBudget::enumerate(),
    };
    match limit {
        Some(n) if mode == Mode::List => b.with_limit(n),
        _ => b,
    }
}

fn hom_output(mode: Mode, found: Vec<VertexMap>) -> anyhow::Result<Output> {
    Ok(match mode {
        Mode::Exists => {
            let exists = !found.is_empty();
            Output::new(json!({ "mode": "exists", "exists": exists, "witness": found.first() }))?.negative_if(!exists)
        }
        Mode::Count => Output::new(json!({ "mode": "count", "count": found.len() }))?,
        Mode::List => Output::new(json!({ "mode": "list", "count": found.len(), "homomorphisms": found }))?,
    })
}

fn run(cli: &Cli) -> anyhow::Result<Output> {
    match &cli.command {
        Command::Classify { graph } => {
            let g = read_graph(graph)?;
            let verdict = classify_slice_base(&g);
            verdict.validate(&g)?;
            let negative = !verdict.is_universal();
            Ok(Output::new(verdict)?.negative_if(negative))
        }
        Command::ConeClassify { graph } => {
            let g = read_graph(graph)?;
            let verdict = classify_cone_base(&g);
            verdict.validate(&g)?;
            let negative = !verdict.is_universal();
            Ok(Output::new(verdict)?.negative_if(negative))
        }
        Command::Arrow { digraph, gadget: which } => {
            let d = read_digraph(digraph)?;
            warn_isolated(&d);
            let s = arrow_slice(&d, &gadget(&which.gadget)?)?;
            let carrier = s.object.carrier().clone();
            Ok(Output::new(&s.object)?.with_graph(Rendered::Graph(carrier)))
        }
        Command::Phi {
            digraph,
            gadget: which,
            arc,
        } => {
            let d = read_digraph(digraph)?;
            let g = gadget(&which.gadget)?;
            let s = arrow_slice(&d, &g)?;
            let (u, v) = (&arc[0], &arc[1]);
            let find = |x: &str| d.vertex(x).ok_or_else(|| Error::UnknownVertex(x.to_string()));
            let phi = s.phi(&g, find(u)?, find(v)?)?;
            Ok(Output::new(json!({ "arc": [u, v], "phi": phi }))?)
        }
        Command::VerifyGadget { gadget: which, domain } => {
            let candidate = gadget_candidate(&which.gadget)?;
            let report = match (domain.max_size, &domain.digraph) {
                (_, Some(path)) => {
                    let d = read_digraph(path)?;
                    if let Some(&x) = d.isolated_points().first() {
                        bail!(Error::IsolatedPoint(d.name(x).to_string()));
                    }
                    verify_candidate(&candidate, &d)?
                }
                (n, None) => {
                    let n = n.unwrap_or(2);
                    check_size(n)?;
                    verify_candidate_exhaustive(&candidate, n)?
                }
            };
            let negative = !report.passed();
            Ok(Output::new(report)?.negative_if(negative))
        }
        Command::StrongReplacement {
            graph,
            gadget: which,
            a,
            b,
            domain,
            loops,
        } => {
            let (h, a, b) = match (graph, which) {
                (Some(path), _) => {
                    let (Some(a), Some(b)) = (a, b) else {
                        bail!("a graph file needs --a and --b");
                    };
                    (read_graph(path)?, a.clone(), b.clone())
                }
                (None, Some(which)) => {
                    let g = gadget(which)?;
                    (g.carrier().clone(), g.a_name().to_string(), g.b_name().to_string())
                }
                (None, None) => bail!("give a graph file or --gadget"),
            };
            let regime = if *loops {
                ReplacementRegime::IsolatedFree
            } else {
                ReplacementRegime::Irreflexive
            };
            let digraphs: Vec<Digraph> = match (domain.max_size, &domain.digraph) {
                (_, Some(path)) => vec![read_digraph(path)?],
                (n, None) => {
                    let n = n.unwrap_or(2);
                    check_size(n)?;
                    let filter = DigraphFilter {
                        require_no_isolated: *loops,
                        irreflexive_only: !*loops,
                        ..DigraphFilter::default()
                    };
                    let mut all = Vec::new();
                    for k in 1..=n {
                        all.extend(digraphs_with(k, filter)?);
                    }
                    all
                }
            };
            let mut checked = 0;
            let mut homs = 0;
            for d in &digraphs {
                checked += 1;
                let report = check_strong_replacement(&h, &a, &b, d, regime)?;
                homs += report.homomorphisms_checked;
                if !report.holds {
                    let mut out = serde_json::to_value(&report)?;
                    out["digraphs_checked"] = json!(checked);
                    return Ok(Output::new(out)?.negative_if(true));
                }
            }
            log::info!("strong replacement: {checked} digraphs, {homs} homomorphisms");
            Ok(Output::new(json!({
                "holds": true,
                "digraphs_checked": checked,
                "homomorphisms_checked": homs,
                "witness": null,
                "digraph": null,
            }))?)
        }
        Command::Homs {
            source,
            target,
            base,
            directed,
            mode,
            limit,
        } => {
            let budget = budget(*mode, *limit);
            if *directed {
                let (d1, d2) = (read_digraph(source)?, read_digraph(target)?);
                return hom_output(*mode, maps(enumerate_digraph_homs(&d1, &d2, budget)));
            }
            match (read_object(source)?, read_object(target)?) {
                (Object::Slice(x), Object::Slice(y)) => {
                    if let Some(path) = base {
                        let g = read_graph(path)?;
                        if x.base() != &g || y.base() != &g {
                            bail!(Error::BaseMismatch);
                        }
                    }
                    let found = enumerate_slice_homs(&x, &y, budget)?
                        .map(|m| m.morphism().to_map())
                        .collect();
                    hom_output(*mode, found)
                }
                (Object::Plain(a), Object::Plain(b)) => {
                    if base.is_some() {
                        bail!("--base needs slice objects, got plain graphs");
                    }
                    hom_output(*mode, maps(enumerate_homs(&a, &b, &VertexMap::new(), budget)?))
                }
                _ => bail!("cannot mix a slice object with a plain graph"),
            }
        }
        Command::Endos { object } => {
            let report = match read_object(object)? {
                Object::Slice(x) => classify_endomorphisms(&x),
                Object::Plain(g) => classify_graph_endomorphisms(&g),
            };
            Ok(Output::new(report)?)
        }
        Command::Retract { object } => Ok(Output::new(retract_slice_to_path(&read_slice(object)?)?)?),
        Command::Dichotomy {
            base,
            max_carrier,
            connected_only,
            object,
        } => {
            if let Some(path) = object {
                return match classify_slice_object(&read_slice(path)?) {
                    Ok(verdict) => Output::new(verdict),
                    Err(err @ Error::CrossCheck { .. }) => Ok(Output::new(
                        json!({ "verdict": "Exception", "reason": err.to_string() }),
                    )?
                    .negative_if(true)),
                    Err(err) => Err(err.into()),
                };
            }
            let base = read_graph(base.as_deref().expect("clap requires base"))?;
            if *max_carrier > MAX_SWEEP_CARRIER {
                bail!("--max-carrier {max_carrier} exceeds the sweep limit of {MAX_SWEEP_CARRIER}");
            }
            let report = dichotomy_sweep(&base, *max_carrier, *connected_only)?;
            let negative = !report.passed();
            Ok(Output::new(report)?.negative_if(negative))
        }
        Command::EmbedCheck {
            gadget: which,
            max_size,
        } => {
            check_size(*max_size)?;
            match full_embedding_check(&gadget(&which.gadget)?, *max_size) {
                Ok(report) => {
                    let negative = !report.passed();
                    Ok(Output::new(report)?.negative_if(negative))
                }
                Err(err @ Error::GadgetNotVerified) => {
                    Ok(Output::new(json!({ "verdict": "fail", "reason": err.to_string() }))?.negative_if(true))
                }
                Err(err) => Err(err.into()),
            }
        }
        Command::EnumerateDigraphs {
            n,
            all,
            irreflexive,
            canonical,
            count,
        } => {
            let filter = DigraphFilter {
                require_no_isolated: !*all,
                irreflexive_only: *irreflexive,
                canonical_only: *canonical,
                ..DigraphFilter::default()
            };
            let stream = digraphs_with(*n, filter)?;
            if *count {
                return Output::new(json!({ "n": n, "count": stream.count() }));
            }
            let list: Vec<Digraph> = stream.collect();
            let mut out = Output::new(&list)?;
            out.graphs = list.into_iter().map(Rendered::Digraph).collect();
            Ok(out)
        }
        Command::Gadget { name } => {
            let g = gadget(name)?;
            let carrier = g.carrier().clone();
            Ok(Output::new(&g)?.with_graph(Rendered::Graph(carrier)))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let level = if cli.verbose { "info" } else { "warn" };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level)).init();
    if let Some(jobs) = cli.jobs {
        if let Err(err) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {err}");
            return ExitCode::from(2);
        }
    }
    match run(&cli).and_then(|out| Ok((out.render(cli.format)?, out.negative))) {
        Ok((text, negative)) => {
            print!("{text}");
            ExitCode::from(u8::from(negative))
        }
        Err(err) => {
            eprintln!("error: {}", chain(&err));
            ExitCode::from(2)
        }
    }
}

fn chain(err: &anyhow::Error) -> String {
    err.chain().map(|e| e.to_string()).collect::<Vec<_>>().join(": ")
}
