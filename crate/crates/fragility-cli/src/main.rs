//! `fragility` CLI: generation, exact closed forms, oracle runs, attacks,
//! estimation, sweeps, and report emission.
//!
//! Exit codes: 0 success, 2 usage error, 3 input-format error, 4 oracle
//! budget exceeded.

mod manifest;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use fragility::attack::{
    greedy_edge_removal, greedy_until_lcc, random_removal_trajectory, Strategy,
};
use fragility::closed_form::{self, Family};
use fragility::estimator::{self, FragilityReport};
use fragility::generators::{self, GenFamily, GeneratorConfig, LayoutScene};
use fragility::graph::RemovalRecord;
use fragility::metrics::{self, DegreeDistribution};
use fragility::{io as gio, oracle, Error, Graph, Rat};

use manifest::RunManifest;

#[derive(Parser)]
#[command(
    name = "fragility",
    version,
    about = "Edge-removal fragility of undirected graphs"
)]
struct Cli {
    /// Cap on parallel worker threads for multi-trial runs.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Omit timestamps and stage timings so reruns are byte-identical.
    #[arg(long, global = true)]
    stable_output: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph family and write it as an edge list.
    Generate(GenerateArgs),
    /// Exact closed-form removal counts and fragility for a family.
    Exact(ExactArgs),
    /// Brute-force minimal removal counts on small instances.
    Oracle(OracleArgs),
    /// Run a single attack and emit its removal trajectory.
    Attack(AttackArgs),
    /// Estimate fragility with the greedy + rewiring + add-back pipeline.
    Estimate(EstimateArgs),
    /// Estimate across several deltas and strategies into one CSV.
    Sweep(SweepArgs),
    /// Build a proximity graph from a device layout scene.
    Proximity(ProximityArgs),
    /// Hellinger distance between two graphs' degree distributions.
    Hellinger(HellingerArgs),
}

#[derive(Args)]
struct GenerateArgs {
    /// complete | ceb | gb | er | ba | ws
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: usize,
    /// Edge probability (er) or rewire probability (ws).
    #[arg(long)]
    p: Option<f64>,
    /// Ring degree (ws); must be even.
    #[arg(long)]
    k: Option<usize>,
    /// Attachment count (ba).
    #[arg(long)]
    m_attach: Option<usize>,
    /// Remove random edges until exactly this many remain.
    #[arg(long)]
    trim: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct ExactArgs {
    /// complete | ceb | gb
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: usize,
    /// Fraction in (0,1): decimal ("0.5") or ratio ("1/2").
    #[arg(long)]
    delta: String,
    /// Robustness cutoff in (0, 1/2); adds a robust true/false verdict.
    #[arg(long)]
    epsilon: Option<String>,
}

#[derive(Args)]
struct OracleArgs {
    /// Edge-list file to analyze (alternative to --family).
    #[arg(long, conflicts_with_all = ["family", "n_min", "n_max"])]
    graph: Option<PathBuf>,
    /// Closed-form family to build and analyze.
    #[arg(long)]
    family: Option<String>,
    #[arg(long, requires = "family")]
    n: Option<usize>,
    /// Largest allowed component; omit in fixture mode to cover all c.
    #[arg(long)]
    c: Option<usize>,
    /// Fixture mode: comma-separated families swept over [n-min, n-max].
    #[arg(long, conflicts_with_all = ["graph", "family", "n", "c"])]
    families: Option<String>,
    #[arg(long, default_value_t = 2)]
    n_min: usize,
    #[arg(long, default_value_t = 8)]
    n_max: usize,
    /// Output file (CSV in fixture mode, JSON otherwise; default stdout).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct AttackArgs {
    #[arg(long)]
    graph: PathBuf,
    /// edge_betweenness | min_degree | random
    #[arg(long)]
    strategy: String,
    /// Remove exactly this many edges.
    #[arg(long, conflicts_with = "target_lcc")]
    removals: Option<usize>,
    /// Remove until the LCC is at most this large.
    #[arg(long)]
    target_lcc: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Repeat the full random removal with seeds seed..seed+trials, writing
    /// one divergence file per trial plus a pointwise-mean aggregate.
    #[arg(long, default_value_t = 1)]
    trials: usize,
    /// Removal trajectory CSV: step, edge_u, edge_v, lcc_size, score.
    #[arg(long)]
    traj_out: Option<PathBuf>,
    /// Divergence CSV: step, hellinger, lcc_size.
    #[arg(long)]
    divergence_out: Option<PathBuf>,
}

#[derive(Args)]
struct EstimateArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    delta: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Repeat with seeds seed..seed+trials and aggregate.
    #[arg(long, default_value_t = 1)]
    trials: usize,
    /// Also write the JSON report here (always printed to stdout).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long)]
    graph: PathBuf,
    /// Comma-separated deltas, e.g. 0.25,0.5,0.75.
    #[arg(long)]
    deltas: String,
    /// Comma-separated: pipeline | greedy_only_min_degree |
    /// greedy_only_edge_betweenness | random
    #[arg(
        long,
        default_value = "pipeline,greedy_only_min_degree,greedy_only_edge_betweenness"
    )]
    strategies: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct ProximityArgs {
    /// Layout scene JSON: base_range, devices, walls.
    #[arg(long)]
    scene: PathBuf,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct HellingerArgs {
    #[arg(long)]
    graph_a: PathBuf,
    #[arg(long)]
    graph_b: PathBuf,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        // Ignore failure: the global pool can only be set once (tests).
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Io(_) | Error::Parse(_) | Error::SelfLoop(_) | Error::EndpointOutOfRange { .. } => 3,
        Error::BudgetExceeded(_) => 4,
        _ => 2,
    }
}

fn run(cli: &Cli) -> fragility::Result<()> {
    match &cli.command {
        Command::Generate(args) => cmd_generate(cli, args),
        Command::Exact(args) => cmd_exact(cli, args),
        Command::Oracle(args) => cmd_oracle(cli, args),
        Command::Attack(args) => cmd_attack(cli, args),
        Command::Estimate(args) => cmd_estimate(cli, args),
        Command::Sweep(args) => cmd_sweep(cli, args),
        Command::Proximity(args) => cmd_proximity(cli, args),
        Command::Hellinger(args) => cmd_hellinger(cli, args),
    }
}

fn parse_delta(text: &str) -> fragility::Result<Rat> {
    Rat::parse(text).ok_or_else(|| Error::InvalidParam(format!("cannot parse delta {text:?}")))
}

fn parse_strategy(name: &str, seed: u64) -> fragility::Result<Strategy> {
    match name {
        "edge_betweenness" => Ok(Strategy::EdgeBetweenness),
        "min_degree" => Ok(Strategy::MinDegree),
        "random" => Ok(Strategy::Random { seed }),
        other => Err(Error::InvalidParam(format!("unknown strategy {other:?}"))),
    }
}

fn load_graph(path: &Path) -> fragility::Result<Graph> {
    gio::read_edge_list_path(path)
}

fn write_file(path: &Path, contents: &str) -> fragility::Result<()> {
    let mut file = std::fs::File::create(path)?;
    file.write_all(contents.as_bytes())?;
    Ok(())
}

fn cmd_generate(cli: &Cli, args: &GenerateArgs) -> fragility::Result<()> {
    let family = match args.family.as_str() {
        "complete" => GenFamily::Complete,
        "ceb" => GenFamily::Ceb,
        "gb" => GenFamily::Gb,
        "er" => GenFamily::Er {
            p: args
                .p
                .ok_or_else(|| Error::InvalidParam("er requires --p".into()))?,
        },
        "ba" => GenFamily::Ba {
            m_attach: args
                .m_attach
                .ok_or_else(|| Error::InvalidParam("ba requires --m-attach".into()))?,
        },
        "ws" => GenFamily::Ws {
            k: args
                .k
                .ok_or_else(|| Error::InvalidParam("ws requires --k".into()))?,
            p_rewire: args
                .p
                .ok_or_else(|| Error::InvalidParam("ws requires --p".into()))?,
        },
        other => return Err(Error::InvalidParam(format!("unknown family {other:?}"))),
    };
    let config = GeneratorConfig {
        n: args.n,
        family,
        target_edge_count: args.trim,
        seed: args.seed,
    };
    let graph = config.generate()?;
    let manifest = RunManifest::new(cli.stable_output, "generate", Some(args.seed))
        .param("config", config.describe())
        .output(&args.out);
    let mut buf = Vec::new();
    gio::write_edge_list(&mut buf, &graph, &[manifest.comment()])?;
    write_file(
        &args.out,
        std::str::from_utf8(&buf).expect("edge list is utf-8"),
    )?;
    println!("n={} m={}", graph.node_count(), graph.edge_count());
    Ok(())
}

fn cmd_exact(cli: &Cli, args: &ExactArgs) -> fragility::Result<()> {
    let family: Family = args.family.parse()?;
    let delta = parse_delta(&args.delta)?;
    let query = closed_form::FragilityQuery::resolve(args.n, delta)?;
    let c = query.c();
    // Validates the (family, delta) combination up front; gb only has a
    // closed form at delta = 1/2, where the optimal cut is the n bridges.
    let fragility = closed_form::fragility_exact(family, args.n, delta)?;
    let (r_star, m) = match family {
        Family::Complete => (
            closed_form::r_star_complete(args.n, c)?,
            closed_form::complete_edges(args.n),
        ),
        Family::Ceb => (
            closed_form::r_star_ceb(args.n, c)?,
            closed_form::edge_count(Family::Ceb, args.n)?,
        ),
        Family::Gb => (args.n as i128, closed_form::gb_edges(args.n)?),
    };
    let f = Rat::new(r_star, m);
    let f_comp = closed_form::f_comp(args.n, c)?;
    let manifest = RunManifest::new(cli.stable_output, "exact", None)
        .param("family", family.name())
        .param("n", args.n.to_string())
        .param("delta", query.delta().to_string());
    let mut out = serde_json::json!({
        "manifest": manifest,
        "family": family.name(),
        "n": args.n,
        "delta": query.delta(),
        "c": c,
        "r_star": r_star,
        "f": f,
        "f_comp": f_comp,
        "fragility": fragility,
    });
    if let Some(text) = &args.epsilon {
        let epsilon = Rat::parse(text)
            .ok_or_else(|| Error::InvalidParam(format!("cannot parse epsilon {text:?}")))?;
        let threshold = closed_form::RobustnessThreshold::new(epsilon)?;
        let object = out.as_object_mut().expect("json object");
        object.insert("epsilon".into(), serde_json::to_value(epsilon).expect("json"));
        object.insert(
            "robust".into(),
            closed_form::is_robust(fragility, threshold).into(),
        );
    }
    println!("{}", serde_json::to_string_pretty(&out).expect("json"));
    Ok(())
}

fn family_graph(family: Family, n: usize) -> fragility::Result<Graph> {
    match family {
        Family::Complete => generators::gen_complete(n),
        Family::Ceb => generators::gen_ceb(n),
        Family::Gb => generators::gen_gb(n),
    }
}

fn cmd_oracle(cli: &Cli, args: &OracleArgs) -> fragility::Result<()> {
    if let Some(families) = &args.families {
        return oracle_fixture(cli, args, families);
    }
    let (graph, id) = if let Some(path) = &args.graph {
        (load_graph(path)?, path.display().to_string())
    } else if let (Some(name), Some(n)) = (&args.family, args.n) {
        let family: Family = name.parse()?;
        (
            family_graph(family, n)?,
            format!("{}(n={n})", family.name()),
        )
    } else {
        return Err(Error::InvalidParam(
            "oracle needs --graph, --family/--n, or --families".into(),
        ));
    };
    let c = args
        .c
        .ok_or_else(|| Error::InvalidParam("oracle needs --c".into()))?;
    let r_star = oracle::brute_r_star(&graph, c)?;
    let manifest = RunManifest::new(cli.stable_output, "oracle", None)
        .param("graph", id.clone())
        .param("c", c.to_string());
    let out = serde_json::json!({
        "manifest": manifest,
        "graph": id,
        "n": graph.node_count(),
        "m": graph.edge_count(),
        "c": c,
        "r_star": r_star,
    });
    let text = serde_json::to_string_pretty(&out).expect("json");
    match &args.out {
        Some(path) => write_file(path, &text)?,
        None => println!("{text}"),
    }
    Ok(())
}

fn oracle_fixture(cli: &Cli, args: &OracleArgs, families: &str) -> fragility::Result<()> {
    let out = args
        .out
        .as_ref()
        .ok_or_else(|| Error::InvalidParam("fixture mode needs --out".into()))?;
    let manifest = RunManifest::new(cli.stable_output, "oracle", None)
        .param("families", families.to_string())
        .param("n_min", args.n_min.to_string())
        .param("n_max", args.n_max.to_string())
        .output(out);
    let mut csv = format!("# {}\nfamily,n,c,r_star\n", manifest.comment());
    for name in families.split(',') {
        let family: Family = name.trim().parse()?;
        for n in args.n_min..=args.n_max {
            let graph = match family_graph(family, n) {
                Ok(g) => g,
                // gb needs even n >= 4; skip sizes the family cannot take.
                Err(Error::InvalidParam(_)) => continue,
                Err(e) => return Err(e),
            };
            for c in 1..n {
                let r_star = oracle::brute_r_star(&graph, c)?;
                csv.push_str(&format!("{},{n},{c},{r_star}\n", family.name()));
            }
        }
    }
    write_file(out, &csv)
}

fn trajectory_csv(manifest: &RunManifest, g: &Graph, records: &[RemovalRecord]) -> String {
    let mut csv = format!(
        "# {}\nstep,edge_u,edge_v,lcc_size,score\n",
        manifest.comment()
    );
    for rec in records {
        let (u, v) = g.endpoints(rec.edge);
        let score = rec.score.map(|s| s.to_string()).unwrap_or_default();
        csv.push_str(&format!("{},{u},{v},{},{score}\n", rec.step, rec.lcc_size));
    }
    csv
}

fn divergence_csv(manifest: &RunManifest, steps: &[(f64, f64)]) -> String {
    let mut csv = format!("# {}\nstep,hellinger,lcc_size\n", manifest.comment());
    for (i, (h, lcc)) in steps.iter().enumerate() {
        csv.push_str(&format!("{},{h},{lcc}\n", i + 1));
    }
    csv
}

/// `base.csv` -> `base_trial3.csv` / `base_mean.csv`.
fn suffixed(path: &Path, suffix: &str) -> PathBuf {
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("out");
    let ext = path.extension().and_then(|s| s.to_str()).unwrap_or("csv");
    path.with_file_name(format!("{stem}_{suffix}.{ext}"))
}

fn cmd_attack(cli: &Cli, args: &AttackArgs) -> fragility::Result<()> {
    let graph = load_graph(&args.graph)?;
    let strategy = parse_strategy(&args.strategy, args.seed)?;
    if args.trials > 1 {
        return attack_trials(cli, args, &graph);
    }
    let records: Vec<RemovalRecord> =
        match (args.removals, args.target_lcc) {
            (Some(r), None) => greedy_edge_removal(&graph, r, strategy)?
                .trajectory()
                .to_vec(),
            (None, Some(c)) => greedy_until_lcc(&graph, c, strategy)?.trajectory().to_vec(),
            (None, None) if matches!(strategy, Strategy::Random { .. }) => {
                random_removal_trajectory(&graph, args.seed)
            }
            (None, None) => return Err(Error::InvalidParam(
                "attack needs --removals or --target-lcc (random may omit both for full removal)"
                    .into(),
            )),
            (Some(_), Some(_)) => unreachable!("clap conflicts_with"),
        };
    let manifest = RunManifest::new(cli.stable_output, "attack", Some(args.seed))
        .param("graph", args.graph.display().to_string())
        .param("strategy", args.strategy.clone());
    if let Some(path) = &args.traj_out {
        write_file(path, &trajectory_csv(&manifest, &graph, &records))?;
    }
    if let Some(path) = &args.divergence_out {
        let hellingers = metrics::divergence_trajectory(&graph, &records);
        let steps: Vec<(f64, f64)> = hellingers
            .iter()
            .zip(&records)
            .map(|(&h, rec)| (h, rec.lcc_size as f64))
            .collect();
        write_file(path, &divergence_csv(&manifest, &steps))?;
    }
    println!(
        "removed={} final_lcc={}",
        records.len(),
        records.last().map_or(0, |r| r.lcc_size)
    );
    Ok(())
}

/// Repeated full random removal: per-trial divergence files plus a
/// pointwise-mean aggregate over hellinger and LCC size.
fn attack_trials(cli: &Cli, args: &AttackArgs, graph: &Graph) -> fragility::Result<()> {
    if args.strategy != "random" {
        return Err(Error::InvalidParam(
            "--trials > 1 is only meaningful for the random strategy".into(),
        ));
    }
    if args.removals.is_some() || args.target_lcc.is_some() {
        return Err(Error::InvalidParam(
            "--trials runs full removals; drop --removals/--target-lcc".into(),
        ));
    }
    let base = args.divergence_out.as_ref().ok_or_else(|| {
        Error::InvalidParam("--trials needs --divergence-out as the file stem".into())
    })?;
    let mut hellinger_trials = Vec::with_capacity(args.trials);
    let mut lcc_trials = Vec::with_capacity(args.trials);
    for i in 0..args.trials as u64 {
        let seed = args.seed + i;
        let records = random_removal_trajectory(graph, seed);
        let hellingers = metrics::divergence_trajectory(graph, &records);
        let lccs: Vec<f64> = records.iter().map(|r| r.lcc_size as f64).collect();
        let manifest = RunManifest::new(cli.stable_output, "attack", Some(seed))
            .param("graph", args.graph.display().to_string())
            .param("strategy", args.strategy.clone())
            .param("trial", i.to_string());
        let steps: Vec<(f64, f64)> = hellingers
            .iter()
            .copied()
            .zip(lccs.iter().copied())
            .collect();
        write_file(
            &suffixed(base, &format!("trial{i}")),
            &divergence_csv(&manifest, &steps),
        )?;
        hellinger_trials.push(hellingers);
        lcc_trials.push(lccs);
    }
    let mean_h = metrics::average_trajectories(&hellinger_trials)?;
    let mean_lcc = metrics::average_trajectories(&lcc_trials)?;
    let manifest = RunManifest::new(cli.stable_output, "attack", Some(args.seed))
        .param("graph", args.graph.display().to_string())
        .param("strategy", args.strategy.clone())
        .param("trials", args.trials.to_string());
    let steps: Vec<(f64, f64)> = mean_h
        .iter()
        .copied()
        .zip(mean_lcc.iter().copied())
        .collect();
    write_file(&suffixed(base, "mean"), &divergence_csv(&manifest, &steps))?;
    println!("trials={} steps={}", args.trials, mean_h.len());
    Ok(())
}

fn strip_timings(report: &mut FragilityReport) {
    report.stage_ms = Default::default();
}

fn cmd_estimate(cli: &Cli, args: &EstimateArgs) -> fragility::Result<()> {
    let graph = load_graph(&args.graph)?;
    let delta = parse_delta(&args.delta)?;
    let graph_id = args.graph.display().to_string();
    let manifest = RunManifest::new(cli.stable_output, "estimate", Some(args.seed))
        .param("graph", graph_id.clone())
        .param("delta", args.delta.clone())
        .param("trials", args.trials.to_string());
    let out = if args.trials == 1 {
        let mut report = estimator::estimate_fragility(&graph, delta, args.seed, &graph_id)?;
        if cli.stable_output {
            strip_timings(&mut report);
        }
        serde_json::json!({ "manifest": manifest, "report": report })
    } else {
        let mut batch =
            estimator::batch_estimate_on_graph(&graph, delta, args.trials, args.seed, &graph_id)?;
        if cli.stable_output {
            batch.per_trial.iter_mut().for_each(strip_timings);
        }
        serde_json::json!({ "manifest": manifest, "batch": batch })
    };
    let text = serde_json::to_string_pretty(&out).expect("json");
    println!("{text}");
    if let Some(path) = &args.out {
        write_file(path, &text)?;
    }
    Ok(())
}

fn cmd_sweep(cli: &Cli, args: &SweepArgs) -> fragility::Result<()> {
    let graph = load_graph(&args.graph)?;
    let graph_id = args.graph.display().to_string();
    let deltas: Vec<Rat> = args
        .deltas
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| parse_delta(s.trim()))
        .collect::<fragility::Result<_>>()?;
    if deltas.is_empty() {
        return Err(Error::InvalidParam("sweep needs at least one delta".into()));
    }
    let strategies: Vec<String> = args
        .strategies
        .split(',')
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect();
    if strategies.is_empty() {
        return Err(Error::InvalidParam(
            "sweep needs at least one strategy".into(),
        ));
    }
    let manifest = RunManifest::new(cli.stable_output, "sweep", Some(args.seed))
        .param("graph", graph_id.clone())
        .param("deltas", args.deltas.clone())
        .param("strategies", args.strategies.clone())
        .output(&args.out);
    let mut csv = format!(
        "# {}\ndelta,strategy,r_final,f_hat,f_comp,fragility_hat\n",
        manifest.comment()
    );
    for &delta in &deltas {
        for name in &strategies {
            let report = match name.as_str() {
                "pipeline" => estimator::estimate_fragility(&graph, delta, args.seed, &graph_id)?,
                "greedy_only_min_degree" => estimator::estimate_fragility_greedy_only(
                    &graph,
                    delta,
                    Strategy::MinDegree,
                    args.seed,
                    &graph_id,
                )?,
                "greedy_only_edge_betweenness" => estimator::estimate_fragility_greedy_only(
                    &graph,
                    delta,
                    Strategy::EdgeBetweenness,
                    args.seed,
                    &graph_id,
                )?,
                "random" => {
                    estimator::estimate_fragility_random(&graph, delta, args.seed, &graph_id)?
                }
                other => {
                    return Err(Error::InvalidParam(format!(
                        "unknown sweep strategy {other:?}"
                    )))
                }
            };
            csv.push_str(&format!(
                "{},{name},{},{},{},{}\n",
                report.delta.to_f64(),
                report.r_final,
                report.f_hat.to_f64(),
                report.f_comp.to_f64(),
                report.fragility_hat.to_f64(),
            ));
        }
    }
    write_file(&args.out, &csv)
}

fn cmd_proximity(cli: &Cli, args: &ProximityArgs) -> fragility::Result<()> {
    let text = std::fs::read_to_string(&args.scene)?;
    let scene = LayoutScene::from_json(&text)?;
    let graph = generators::gen_proximity(&scene)?;
    let manifest = RunManifest::new(cli.stable_output, "proximity", None)
        .param("scene", args.scene.display().to_string())
        .output(&args.out);
    let mut buf = Vec::new();
    gio::write_edge_list(&mut buf, &graph, &[manifest.comment()])?;
    write_file(
        &args.out,
        std::str::from_utf8(&buf).expect("edge list is utf-8"),
    )?;
    println!("n={} m={}", graph.node_count(), graph.edge_count());
    Ok(())
}

fn cmd_hellinger(cli: &Cli, args: &HellingerArgs) -> fragility::Result<()> {
    let a = load_graph(&args.graph_a)?;
    let b = load_graph(&args.graph_b)?;
    let da = DegreeDistribution::from_state(&fragility::AttackState::new(&a));
    let db = DegreeDistribution::from_state(&fragility::AttackState::new(&b));
    let h = metrics::hellinger(&da, &db)?;
    let manifest = RunManifest::new(cli.stable_output, "hellinger", None)
        .param("graph_a", args.graph_a.display().to_string())
        .param("graph_b", args.graph_b.display().to_string());
    let out = serde_json::json!({ "manifest": manifest, "hellinger": h });
    println!("{}", serde_json::to_string_pretty(&out).expect("json"));
    Ok(())
}
