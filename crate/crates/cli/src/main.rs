//! atlas: exact graph-parameter computations, gadget generation, metric
//! embeddings, k-center baselines and corpus verification.

use std::collections::BTreeMap;
use std::path::PathBuf;

use anyhow::{bail, Context};
use atlas_cli::claims::{gadget_sidecar, run_gadget_claims};
use atlas_cli::config::Config;
use atlas_cli::report::CSV_HEADER;
use atlas_cli::runner::report_for;
use atlas_cli::verify::{all_pass, verify_corpus};
use atlas_core::embed::{
    build_embedded_graph, kappa_bound_check, verify_distortion, verify_long_edge_hubs,
    verify_pruning, FiniteMetric,
};
use atlas_core::gadgets::{self, CaterpillarVariant};
use atlas_core::highway::{anchored_min_hitting_set, enumerate_shortest_paths, HdTag};
use atlas_core::io::{parse_graph, parse_metric, write_graph};
use atlas_core::kcenter::{exact_kcenter, hochbaum_shmoys};
use atlas_core::params::doubling_dimension;
use atlas_core::rational::{fmt_rat, parse_rat};
use atlas_core::skeleton::skeleton_dimension;
use atlas_core::WeightedGraph;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "atlas", version, about = "graph parameter toolkit")]
struct Cli {
    /// Worker threads for graph-level parallelism.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// TOML config overriding caps and timeouts.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one parameter (or all) of a graph file.
    Compute(ComputeArgs),
    /// Generate a gadget graph and its expected-claims sidecar.
    Gadget(GadgetArgs),
    /// Build the hub-hierarchy embedding of a finite metric.
    Embed(EmbedArgs),
    /// k-center baselines.
    Kcenter(KcenterArgs),
    /// Verify every graph file in a directory.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct ComputeArgs {
    /// One of: skeleton|kappa, ml, bw, pw, tw, dl, hindex, ddim, hd1, hd2,
    /// hd3. Omit with --all.
    #[arg(long)]
    param: Option<String>,
    /// Emit the full parameter report.
    #[arg(long)]
    all: bool,
    /// Anchor vertex label for a single anchored highway instance.
    #[arg(long)]
    anchor: Option<u64>,
    /// Radius (p/q) for the anchored instance.
    #[arg(long)]
    radius: Option<String>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    graph: PathBuf,
}

#[derive(Args)]
struct GadgetArgs {
    /// Family: star, subdivided-star, complete-exp, caterpillar,
    /// binary-tree, subdivided-grid, tight-weights, vc-reduction.
    family: String,
    /// key=value pairs, e.g. --params n=5 or --params b=6,variant=skel-3.
    #[arg(long, value_delimiter = ',')]
    params: Vec<String>,
    /// Input graph file for tight-weights and vc-reduction.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Output graph file; claims go to <out>.claims.json. Stdout otherwise.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also evaluate the claims now and report pass/fail.
    #[arg(long)]
    check: bool,
}

#[derive(Args)]
struct EmbedArgs {
    #[arg(long)]
    metric: PathBuf,
    /// 0 < epsilon < 1, as p/q.
    #[arg(long)]
    epsilon: String,
    /// Output graph file for the embedded graph.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct KcenterArgs {
    #[arg(long)]
    k: usize,
    /// Solve exactly instead of greedily.
    #[arg(long)]
    exact: bool,
    /// Run both and report the greedy/exact radius ratio.
    #[arg(long)]
    ratio: bool,
    graph: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    dir: PathBuf,
}

fn main() -> anyhow::Result<()> {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .context("initializing worker pool")?;
    }
    let config = match &cli.config {
        Some(path) => Config::load(path)?,
        None => Config::default(),
    };
    match cli.command {
        Command::Compute(args) => compute(args, &config),
        Command::Gadget(args) => gadget(args, &config),
        Command::Embed(args) => embed(args, &config),
        Command::Kcenter(args) => kcenter(args),
        Command::Verify(args) => verify(args, &config),
    }
}

fn load_graph(path: &PathBuf) -> anyhow::Result<WeightedGraph> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    Ok(parse_graph(&text)?)
}

fn compute(args: ComputeArgs, config: &Config) -> anyhow::Result<()> {
    let g = load_graph(&args.graph)?;
    let id = args
        .graph
        .file_name()
        .map(|s| s.to_string_lossy().to_string())
        .unwrap_or_default();

    if args.all {
        let report = report_for(&id, &g, config);
        match args.format {
            Format::Json => println!("{}", serde_json::to_string_pretty(&report)?),
            Format::Csv => {
                println!("{CSV_HEADER}");
                for row in report.to_csv_rows() {
                    println!("{row}");
                }
            }
        }
        return Ok(());
    }

    let param = args.param.as_deref().context("--param or --all is required")?;

    // Anchored highway instance.
    if let (Some(anchor), Some(radius)) = (args.anchor, &args.radius) {
        let tag = match param {
            "hd1" => HdTag::Hd1,
            "hd2" => HdTag::Hd2,
            "hd3" => HdTag::Hd3,
            other => bail!("--anchor/--radius only apply to hd1|hd2|hd3, got {other}"),
        };
        let r = parse_rat(radius)?;
        let anchor = g.vertex_by_label(anchor)?;
        let cat = enumerate_shortest_paths(&g, config.caps.catalog)?;
        let (size, hs) = anchored_min_hitting_set(&g, &cat, anchor, &r, tag)?;
        let hs_labels: Vec<u64> = hs.iter().map(|&v| g.label(v)).collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&serde_json::json!({
                "tag": tag.as_str(),
                "anchor": g.label(anchor),
                "radius": fmt_rat(&r),
                "value": size,
                "hitting_set": hs_labels,
                "had_ties": cat.had_ties(),
            }))?
        );
        return Ok(());
    }

    if matches!(param, "skeleton" | "kappa") {
        let w = skeleton_dimension(&g);
        println!(
            "{}",
            serde_json::to_string_pretty(&serde_json::json!({
                "kappa": w.kappa,
                "witness_source": g.label(w.source),
                "witness_radius": fmt_rat(&w.radius),
                "had_ties": w.had_ties,
            }))?
        );
        return Ok(());
    }

    let key = if param == "ddim" { "doubling" } else { param };
    let report = report_for(&id, &g, config);
    let entry = report
        .parameters
        .get(key)
        .with_context(|| format!("unknown parameter `{param}`"))?;
    match args.format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&serde_json::json!({
                "param": param,
                "status": entry.status,
                "value": entry.value,
                "witness": entry.witness,
                "had_ties": report.had_ties,
            }))?
        ),
        Format::Csv => {
            println!("{CSV_HEADER}");
            println!(
                "{},param,{},{},{}",
                id,
                param,
                entry.status,
                entry.value.map_or(String::new(), |v| v.to_string())
            );
        }
    }
    Ok(())
}

fn gadget(args: GadgetArgs, config: &Config) -> anyhow::Result<()> {
    let params: BTreeMap<String, String> = args
        .params
        .iter()
        .map(|kv| {
            kv.split_once('=')
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .with_context(|| format!("bad --params entry `{kv}` (want key=value)"))
        })
        .collect::<anyhow::Result<_>>()?;
    let int = |key: &str| -> anyhow::Result<usize> {
        params
            .get(key)
            .with_context(|| format!("{} requires --params {key}=<int>", args.family))?
            .parse()
            .with_context(|| format!("bad integer for {key}"))
    };

    let gadget = match args.family.as_str() {
        "star" => gadgets::star(int("n")?)?,
        "subdivided-star" => gadgets::subdivided_star(int("l")?)?,
        "complete-exp" => gadgets::complete_graph_exp_weights(int("n")?)?,
        "caterpillar" => {
            let variant = CaterpillarVariant::parse(
                params.get("variant").map(String::as_str).unwrap_or("skel-3"),
            )?;
            gadgets::caterpillar(int("b")?, variant)?
        }
        "binary-tree" => gadgets::binary_tree_geometric(int("d")?)?,
        "subdivided-grid" => gadgets::subdivided_grid(int("q")?)?,
        "tight-weights" => {
            let input = args.input.as_ref().context("tight-weights requires --input")?;
            let base = load_graph(input)?.unit_weights();
            let metric = params.get("metric").map(String::as_str).unwrap_or("true") == "true";
            gadgets::spanning_tree_tight_weights(&base, metric)?
        }
        "vc-reduction" => {
            let input = args.input.as_ref().context("vc-reduction requires --input")?;
            let base = load_graph(input)?.unit_weights();
            gadgets::vc_reduction(&base)?
        }
        other => bail!("unknown gadget family `{other}`"),
    };

    let text = write_graph(&gadget.graph);
    let sidecar = serde_json::to_string_pretty(&gadget_sidecar(&gadget))?;
    match &args.out {
        Some(path) => {
            std::fs::write(path, &text)?;
            let mut claims_path = path.as_os_str().to_owned();
            claims_path.push(".claims.json");
            std::fs::write(PathBuf::from(&claims_path), format!("{sidecar}\n"))?;
            eprintln!("wrote {} and {}.claims.json", path.display(), path.display());
        }
        None => {
            print!("{text}");
            eprintln!("{sidecar}");
        }
    }

    if args.check {
        let report = run_gadget_claims(&gadget, config);
        println!("{}", serde_json::to_string_pretty(&report)?);
        if !report.all_pass() {
            std::process::exit(1);
        }
    }
    Ok(())
}

fn embed(args: EmbedArgs, config: &Config) -> anyhow::Result<()> {
    let text = std::fs::read_to_string(&args.metric)
        .with_context(|| format!("reading {}", args.metric.display()))?;
    let metric = parse_metric(&text)?;
    let eps = parse_rat(&args.epsilon)?;
    let e = build_embedded_graph(&metric, &eps)?;

    let distortion = verify_distortion(&e.metric, &e.graph, &eps);
    let pruning_ok = verify_pruning(&e);
    let hubs_ok = verify_long_edge_hubs(&e);
    let kappa = skeleton_dimension(&e.graph);

    // The doubling constant of the source metric feeds the kappa bound;
    // skipped above the cap.
    let metric_graph = metric_complete_graph(&e.metric)?;
    let kappa_bound = match doubling_dimension(&metric_graph, config.caps.doubling) {
        Ok(w) => kappa_bound_check(&e, kappa.kappa, w.d).map(|(bound, holds)| {
            serde_json::json!({
                "doubling_d": w.d,
                "bound": fmt_rat(&bound),
                "holds": holds,
            })
        }),
        Err(_) => None,
    };

    let level_sizes: Vec<usize> = e.hierarchy.levels.iter().map(Vec::len).collect();
    let report = serde_json::json!({
        "points": e.metric.n(),
        "epsilon": fmt_rat(&eps),
        "levels": level_sizes,
        "edges_kept": e.graph.m(),
        "edges_unpruned": e.unpruned.m(),
        "distortion_ok": distortion.ok,
        "max_stretch": fmt_rat(&distortion.max_stretch),
        "pruning_preserves_distances": pruning_ok,
        "long_edges_in_hub_sets": hubs_ok,
        "kappa": kappa.kappa,
        "kappa_bound": kappa_bound,
    });

    if let Some(path) = &args.out {
        std::fs::write(path, write_graph(&e.graph))?;
        eprintln!("wrote {}", path.display());
    } else {
        print!("{}", write_graph(&e.graph));
    }
    println!("{}", serde_json::to_string_pretty(&report)?);
    if !(distortion.ok && pruning_ok && hubs_ok) {
        std::process::exit(1);
    }
    Ok(())
}

fn metric_complete_graph(x: &FiniteMetric) -> anyhow::Result<WeightedGraph> {
    let mut edges = Vec::new();
    for u in 0..x.n() {
        for v in (u + 1)..x.n() {
            edges.push((u, v, x.dist(u, v).clone()));
        }
    }
    Ok(WeightedGraph::from_dense(x.n(), &edges)?)
}

fn kcenter(args: KcenterArgs) -> anyhow::Result<()> {
    let g = load_graph(&args.graph)?;
    let solution = |s: &atlas_core::kcenter::CenterSolution| {
        serde_json::json!({
            "centers": s.centers.iter().map(|&v| g.label(v)).collect::<Vec<_>>(),
            "radius": fmt_rat(&s.radius),
        })
    };
    if args.ratio {
        let greedy = hochbaum_shmoys(&g, args.k)?;
        let exact = exact_kcenter(&g, args.k)?;
        let ratio = if exact.radius == atlas_core::rational::rat_int(0) {
            "1".to_string()
        } else {
            fmt_rat(&(&greedy.radius / &exact.radius))
        };
        println!(
            "{}",
            serde_json::to_string_pretty(&serde_json::json!({
                "k": args.k,
                "greedy": solution(&greedy),
                "exact": solution(&exact),
                "ratio": ratio,
            }))?
        );
        return Ok(());
    }
    let s = if args.exact { exact_kcenter(&g, args.k)? } else { hochbaum_shmoys(&g, args.k)? };
    println!(
        "{}",
        serde_json::to_string_pretty(&serde_json::json!({
            "k": args.k,
            "exact": args.exact,
            "solution": solution(&s),
        }))?
    );
    Ok(())
}

fn verify(args: VerifyArgs, config: &Config) -> anyhow::Result<()> {
    let reports = verify_corpus(&args.dir, config)?;
    match args.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&reports)?),
        Format::Csv => {
            println!("{CSV_HEADER}");
            for report in &reports {
                for row in report.to_csv_rows() {
                    println!("{row}");
                }
            }
        }
    }
    if !all_pass(&reports) {
        std::process::exit(1);
    }
    Ok(())
}
