use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use linecover::adversary::{build_gk, embed_lines, embed_segments, greedy_ratio_experiment, rows_to_csv, RatioRow};
use linecover::constructions::curve::{build_minmax_instance, curve_checks, lines_to_minmax_tour, CurveParams};
use linecover::constructions::lattice::{lattice_row, lattice_rows_to_csv};
use linecover::constructions::spanning::{build_spanning_instance, find_ham_circuit_with_edge, find_ham_path, hampath_to_spanning_tour, k4, petersen, prism};
use linecover::constructions::triangle::{build_triangle_instance, lines_to_covering_tour, triangle_checks};
use linecover::cover::{exact_cover_lines_by_points, exact_cover_points_by_lines, exact_max_coverage, greedy_cover_lines_by_points, greedy_cover_points_by_lines, greedy_max_coverage, ExactOptions};
use linecover::gadget::{build_gadget, figure_instance, random_sat, verify_sat_lemmas};
use linecover::instance::{load_instance, to_json, CubicGraphInstance, Instance, PointSetInstance, SatInstance};
use linecover::tour::{brute_minlink_spanning_tour, brute_minmax_turn_tour, brute_minsum_turn_tour, MINLINK_CAP, MINMAX_CAP};
use linecover::Error;
use serde_json::{json, Value};

mod svg;

#[derive(Parser)]
#[command(name = "linecover", version, about = "Line covers, covering tours and their reductions")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct Global {
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Size cap for exact searches (points, lines or tour vertices).
    #[arg(long, global = true)]
    cap: Option<usize>,
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long, global = true)]
    svg: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, PartialEq)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Cmd {
    #[command(subcommand)]
    Gen(Gen),
    #[command(subcommand)]
    Solve(Solve),
    #[command(subcommand)]
    Verify(Verify),
    #[command(subcommand)]
    Bench(Bench),
}

#[derive(Subcommand)]
enum Gen {
    /// The greedy worst case G_k, drawn as segments or lines.
    Adversary {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        lines: bool,
    },
    /// Point gadget for a SAT instance (file, or random with --n).
    Gadget {
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long)]
        n: Option<usize>,
    },
    Triangle {
        #[arg(long = "in")]
        input: PathBuf,
    },
    Spanning(GraphArgs),
    Minmax(CurveArgs),
}

#[derive(Args)]
struct GraphArgs {
    /// k4, prism or petersen
    #[arg(long, default_value = "k4")]
    graph: String,
    /// Cubic graph file, overrides --graph.
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// Marked edge as `u,v`.
    #[arg(long)]
    edge: Option<String>,
}

#[derive(Args)]
struct CurveArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, default_value_t = 1)]
    mu: u32,
    #[arg(long, default_value_t = 100_000)]
    t_cap: u64,
}

#[derive(Subcommand)]
enum Solve {
    Cover(SolveArgs),
    Maxcov {
        #[command(flatten)]
        args: SolveArgs,
        #[arg(long)]
        k: usize,
    },
    LinesByPoints(SolveArgs),
    TourMinmax(InArg),
    TourMinsum(InArg),
    TourMinlink(InArg),
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long = "in")]
    input: PathBuf,
    /// Greedy only.
    #[arg(long)]
    greedy: bool,
}

#[derive(Args)]
struct InArg {
    #[arg(long = "in")]
    input: PathBuf,
}

#[derive(Subcommand)]
enum Verify {
    SatLemmas {
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long)]
        n: Option<usize>,
    },
    GreedyRatio(RatioArgs),
    Lattice {
        #[arg(long = "N", alias = "n")]
        n: u32,
    },
    SpanningReduction(GraphArgs),
    TriangleForward {
        #[arg(long = "in")]
        input: PathBuf,
    },
    MinmaxForward(CurveArgs),
}

#[derive(Args)]
struct RatioArgs {
    #[arg(long, default_value_t = 2)]
    kmin: usize,
    #[arg(long, default_value_t = 40)]
    kmax: usize,
    /// Largest k for which the line drawing is also built.
    #[arg(long, default_value_t = 0)]
    lines_max: usize,
}

#[derive(Subcommand)]
enum Bench {
    GreedyRatio(RatioArgs),
}

enum Fail {
    Input(String),
    Cap(String),
    Verify(String),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded(m) => Fail::Cap(m),
            other => Fail::Input(other.to_string()),
        }
    }
}

type Res<T> = Result<T, Fail>;

fn emit(g: &Global, text: &str) -> Res<()> {
    match &g.out {
        Some(p) => std::fs::write(p, text).map_err(|e| Fail::Input(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_json(g: &Global, v: &Value) -> Res<()> {
    emit(g, &(serde_json::to_string_pretty(v).expect("json value") + "\n"))
}

fn points_in(path: &PathBuf) -> Res<PointSetInstance> {
    match load_instance(path, Some("points"))? {
        Instance::Points(p) => Ok(p),
        _ => unreachable!("kind checked"),
    }
}

fn cap_check(g: &Global, n: usize, default: usize) -> Res<usize> {
    let cap = g.cap.unwrap_or(default);
    if n > cap {
        return Err(Fail::Cap(format!("{n} elements exceed the cap {cap}")));
    }
    Ok(cap)
}

fn sat_in(g: &Global, input: &Option<PathBuf>, n: Option<usize>) -> Res<SatInstance> {
    match (input, n) {
        (Some(p), _) => match load_instance(p, Some("sat"))? {
            Instance::Sat(s) => Ok(s),
            _ => unreachable!("kind checked"),
        },
        (None, Some(n)) => Ok(random_sat(n, g.seed)?),
        (None, None) => Ok(figure_instance()),
    }
}

fn graph_in(a: &GraphArgs) -> Res<CubicGraphInstance> {
    let mut g = match &a.input {
        Some(p) => match load_instance(p, Some("cubic-graph"))? {
            Instance::CubicGraph(g) => g,
            _ => unreachable!("kind checked"),
        },
        None => match a.graph.as_str() {
            "k4" => k4((0, 1)),
            "prism" => prism((0, 1)),
            "petersen" => petersen((0, 1)),
            other => return Err(Fail::Input(format!("unknown graph {other:?}"))),
        },
    };
    if let Some(e) = &a.edge {
        let parts: Vec<usize> = e.split(',').map(|s| s.trim().parse()).collect::<Result<_, _>>().map_err(|_| Fail::Input(format!("bad edge {e:?}")))?;
        if parts.len() != 2 {
            return Err(Fail::Input(format!("bad edge {e:?}")));
        }
        g.marked_edge = (parts[0], parts[1]);
    }
    g.validate().map_err(|e| Fail::Input(e.to_string()))?;
    Ok(g)
}

fn ratio_report(g: &Global, a: &RatioArgs) -> Res<Vec<RatioRow>> {
    let rows = greedy_ratio_experiment(a.kmin, a.kmax, a.lines_max)?;
    match g.format {
        Format::Csv => emit(g, &rows_to_csv(&rows))?,
        Format::Json => emit_json(g, &json!(rows))?,
    }
    if let Some(p) = &g.svg {
        let xs: Vec<f64> = rows.iter().map(|r| r.k as f64).collect();
        let ratio: Vec<f64> = rows.iter().map(|r| r.ratio).collect();
        let bound: Vec<f64> = rows.iter().map(|r| r.ln_bound).collect();
        std::fs::write(p, svg::plot("greedy / witness vs ln(k+1) - 2", &xs, &ratio, &bound)).map_err(|e| Fail::Input(e.to_string()))?;
    }
    Ok(rows)
}

fn run(cli: Cli) -> Res<()> {
    let g = &cli.global;
    match cli.cmd {
        Cmd::Gen(Gen::Adversary { k, lines }) => {
            let gk = build_gk(k)?;
            let inst = if lines { Instance::Lines(embed_lines(&gk)?) } else { Instance::Segments(embed_segments(&gk)) };
            emit(g, &to_json(&inst)?)
        }
        Cmd::Gen(Gen::Gadget { input, n }) => {
            let sat = sat_in(g, &input, n)?;
            let (_, layout) = build_gadget(&sat, g.seed)?;
            emit(g, &to_json(&Instance::Points(layout.to_instance(g.seed)))?)
        }
        Cmd::Gen(Gen::Triangle { input }) => {
            let p = points_in(&input)?;
            let tri = build_triangle_instance(&p.points, g.seed)?;
            emit(g, &to_json(&Instance::Points(tri.points))?)
        }
        Cmd::Gen(Gen::Spanning(a)) => {
            let inst = build_spanning_instance(&graph_in(&a)?, g.seed)?;
            emit(g, &to_json(&Instance::Points(inst.points))?)
        }
        Cmd::Gen(Gen::Minmax(a)) => {
            let p = points_in(&a.input)?;
            let c = build_minmax_instance(&p.points, &CurveParams { mu: a.mu, t_cap: a.t_cap, ..CurveParams::default() })?;
            emit(g, &to_json(&Instance::Points(c.to_instance()))?)
        }
        Cmd::Solve(Solve::Cover(a)) => {
            let p = points_in(&a.input)?;
            let sol = if a.greedy {
                greedy_cover_points_by_lines(&p.points)
            } else {
                let cap = cap_check(g, p.len(), ExactOptions::for_points().max_elements)?;
                exact_cover_points_by_lines(&p.points, &ExactOptions::for_points().with_max_elements(cap))?
            };
            emit_json(g, &json!(sol))
        }
        Cmd::Solve(Solve::Maxcov { args, k }) => {
            let p = points_in(&args.input)?;
            let sol = if args.greedy {
                greedy_max_coverage(&p.points, k)
            } else {
                let cap = cap_check(g, p.len(), ExactOptions::for_points().max_elements)?;
                exact_max_coverage(&p.points, k, &ExactOptions::for_points().with_max_elements(cap))?
            };
            emit_json(g, &json!(sol))
        }
        Cmd::Solve(Solve::LinesByPoints(a)) => {
            let lines = match load_instance(&a.input, Some("lines"))? {
                Instance::Lines(l) => l.lines,
                _ => unreachable!("kind checked"),
            };
            let sol = if a.greedy {
                greedy_cover_lines_by_points(&lines)
            } else {
                let cap = cap_check(g, lines.len(), ExactOptions::for_lines().max_elements)?;
                exact_cover_lines_by_points(&lines, &ExactOptions::for_lines().with_max_elements(cap))?
            };
            emit_json(g, &json!(sol))
        }
        Cmd::Solve(Solve::TourMinmax(a)) => {
            let p = points_in(&a.input)?;
            let (tour, m) = brute_minmax_turn_tour(&p.points, g.cap.unwrap_or(MINMAX_CAP))?;
            emit_json(g, &json!({ "tour": tour, "max_turn": m }))
        }
        Cmd::Solve(Solve::TourMinsum(a)) => {
            let p = points_in(&a.input)?;
            let r = brute_minsum_turn_tour(&p.points, g.cap.unwrap_or(MINMAX_CAP))?;
            emit_json(g, &json!(r))
        }
        Cmd::Solve(Solve::TourMinlink(a)) => {
            let p = points_in(&a.input)?;
            let r = brute_minlink_spanning_tour(&p.points, g.cap.unwrap_or(MINLINK_CAP), 200_000_000)?;
            if !r.optimal {
                return Err(Fail::Cap("node budget exhausted before optimality was proved".into()));
            }
            emit_json(g, &json!(r))
        }
        Cmd::Verify(Verify::SatLemmas { input, n }) => {
            let sat = sat_in(g, &input, n)?;
            let r = verify_sat_lemmas(&sat, g.seed)?;
            emit_json(g, &json!(r))?;
            if r.all_pass() {
                Ok(())
            } else {
                Err(Fail::Verify(r.counterexample.unwrap_or_else(|| "lemma check failed".into())))
            }
        }
        Cmd::Verify(Verify::GreedyRatio(a)) => {
            let rows = ratio_report(g, &a)?;
            match rows.iter().find(|r| !(r.bound_holds() && r.witness_valid && r.block_order)) {
                None => Ok(()),
                Some(r) => Err(Fail::Verify(format!("k = {} fails", r.k))),
            }
        }
        Cmd::Verify(Verify::Lattice { n }) => {
            let row = lattice_row(n)?;
            match g.format {
                Format::Csv => emit(g, &lattice_rows_to_csv(std::slice::from_ref(&row)))?,
                Format::Json => emit_json(g, &json!(row))?,
            }
            if row.bound_ok || n < 10 {
                Ok(())
            } else {
                Err(Fail::Verify(format!("N = {n}: minimum turn below 1/(3N^2), witness {:?}", row.witness)))
            }
        }
        Cmd::Verify(Verify::SpanningReduction(a)) => {
            let graph = graph_in(&a)?;
            let inst = build_spanning_instance(&graph, g.seed)?;
            let circuit = find_ham_circuit_with_edge(&graph)?;
            let path = find_ham_path(inst.n_prime, &inst.edges_prime, inst.s_prime, inst.t_prime)?;
            let m = graph.edges.len();
            let mut report = json!({ "points": inst.points.len(), "circuit": circuit, "path": path, "m_plus_2": m + 2 });
            let mut ok = circuit.is_some() == path.is_some();
            if let Some(p) = &path {
                let tour = hampath_to_spanning_tour(p, &inst)?;
                report["tour_links"] = json!(tour.links());
                ok &= tour.links() == m + 2;
                if inst.points.len() <= g.cap.unwrap_or(13) {
                    let best = brute_minlink_spanning_tour(&inst.points.points, inst.points.len(), 200_000_000)?;
                    report["optimum_links"] = json!(best.links);
                    report["optimum_proved"] = json!(best.optimal);
                    ok &= !best.optimal || best.links == m + 2;
                }
            }
            report["ok"] = json!(ok);
            emit_json(g, &report)?;
            if ok {
                Ok(())
            } else {
                Err(Fail::Verify("spanning reduction mismatch".into()))
            }
        }
        Cmd::Verify(Verify::TriangleForward { input }) => {
            let p = points_in(&input)?;
            cap_check(g, p.len(), ExactOptions::for_points().max_elements)?;
            let cover = exact_cover_points_by_lines(&p.points, &ExactOptions::for_points())?;
            let tri = build_triangle_instance(&p.points, g.seed)?;
            let checks = triangle_checks(&tri);
            let tour = lines_to_covering_tour(&cover.chosen, &tri);
            let links = tour.as_ref().map(|t| t.links()).ok();
            let ok = checks.all() && links == Some(3 * cover.size());
            emit_json(g, &json!({ "k": cover.size(), "links": links, "checks": checks, "tour": tour.ok(), "ok": ok }))?;
            if ok {
                Ok(())
            } else {
                Err(Fail::Verify("triangle forward direction failed".into()))
            }
        }
        Cmd::Verify(Verify::MinmaxForward(a)) => {
            let p = points_in(&a.input)?;
            cap_check(g, p.len(), ExactOptions::for_points().max_elements)?;
            let cover = exact_cover_points_by_lines(&p.points, &ExactOptions::for_points())?;
            let c = build_minmax_instance(&p.points, &CurveParams { mu: a.mu, t_cap: a.t_cap, ..CurveParams::default() })?;
            let checks = curve_checks(&c);
            let t = lines_to_minmax_tour(&cover.chosen, &c)?;
            let ok = checks.all() && t.bound_ok && t.hamiltonian && t.shortcuts_straight;
            emit_json(
                g,
                &json!({
                    "k": cover.size(), "s": c.s, "t": c.t, "scaled": c.scaled, "points": c.points().len(),
                    "checks": checks, "max_turn": t.max_turn, "max_turn_over_theta": t.max_turn.radians() / c.theta,
                    "bound_ok": t.bound_ok, "hamiltonian": t.hamiltonian, "shortcuts_straight": t.shortcuts_straight, "ok": ok,
                }),
            )?;
            if ok {
                Ok(())
            } else {
                Err(Fail::Verify("min-max forward direction failed".into()))
            }
        }
        Cmd::Bench(Bench::GreedyRatio(a)) => {
            let start = std::time::Instant::now();
            let rows = ratio_report(g, &a)?;
            eprintln!("{} rows in {:.2?}", rows.len(), start.elapsed());
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = std::env::var("LINECOVER_THREADS").ok().and_then(|v| v.parse().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Fail::Input(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Fail::Cap(m)) => {
            eprintln!("cap exceeded: {m}");
            ExitCode::from(3)
        }
        Err(Fail::Verify(m)) => {
            eprintln!("verification failed: {m}");
            ExitCode::from(4)
        }
    }
}
