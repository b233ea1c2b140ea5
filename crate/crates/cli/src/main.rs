use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use intertwine::bounds::{EngineConfig, FactBase, Interval, Invariant};
use intertwine::complex::{betti_numbers, cohomology_ring, SimplicialComplex};
use intertwine::field::{fmt_q, parse_q, q_to_f64};
use intertwine::navigate::{sequential_compose, CircleNavigator, Navigation};
use intertwine::reproduce::{self, SuiteConfig};
use intertwine::ring::{cup_length_search, zero_divisor_search, SearchConfig};
use intertwine::strand::{enumerate_resolvers_with, min_support, EnumerationLimits};
use intertwine::{BranchingDiagram, Error, FieldSpec, GradedAlgebra, MetricPoint, Q, Result};
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(name = "intertwine", version, about = "Cohomological bounds, resolvers and navigation for measure-valued paths")]
struct Cli {
    /// Data directory used to resolve bare file names and shipped packs.
    #[arg(long, global = true, env = "ITC_DATA_DIR")]
    data_dir: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Betti numbers and cohomology ring of a complex.
    Cohomology {
        input: PathBuf,
        #[arg(long, default_value = "q")]
        field: FieldSpec,
    },
    /// Cup length of a complex (`.cx`) or ring (`.ring`).
    Cuplen {
        input: PathBuf,
        /// Coefficient field for complexes (`q` or `zP`); rings carry their own.
        #[arg(long)]
        field: Option<FieldSpec>,
        #[arg(long, default_value_t = 8)]
        max_length: usize,
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
    },
    /// Zero-divisor cup length of the `m`-fold diagonal.
    Zcl {
        input: PathBuf,
        #[arg(long)]
        field: Option<FieldSpec>,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(2..))]
        m: u32,
        #[arg(long, default_value_t = 8)]
        max_length: usize,
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
    },
    /// Vertex resolvers of a branching diagram with support at most `n`.
    Resolve {
        input: PathBuf,
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long, default_value_t = 1_000_000)]
        max_routes: usize,
        #[arg(long, default_value_t = 20_000_000)]
        max_nodes: u64,
    },
    /// Smallest support of a resolver.
    Minsupport { input: PathBuf },
    /// Measure path through circle points (in turns), or of a diagram file.
    Navigate {
        /// Diagram file; omit to navigate through `--points`.
        #[arg(long, conflicts_with = "points")]
        diagram: Option<PathBuf>,
        /// Circle points in turns, e.g. `0 1/4 2/3`.
        #[arg(long, num_args = 2.., value_parser = parse_turn)]
        points: Vec<Q>,
        /// Sample step; must divide 1.
        #[arg(long, default_value = "1/100", value_parser = parse_step)]
        step: Q,
    },
    /// Propagates interval bounds over complexes, rings and fact packs.
    Bounds {
        /// Extra fact files merged after the shipped packs.
        #[arg(long)]
        facts: Vec<PathBuf>,
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(2..=64))]
        m_max: u32,
        /// Disables the externally cited rule.
        #[arg(long)]
        no_external: bool,
        /// Restricts the report to these spaces.
        #[arg(long)]
        space: Vec<String>,
        /// Prints the derivation of `SPACE:INVARIANT`, e.g. `circle:iTC(3)`.
        #[arg(long, value_parser = parse_target)]
        trace: Vec<(String, Invariant)>,
    },
    /// Runs the ten-criterion reproduction suite.
    VerifyPaper {
        #[arg(long, default_value_t = 0x1d1a_2024)]
        seed: u64,
        /// Random instances per metric suite.
        #[arg(long, default_value_t = 10_000)]
        instances: usize,
        /// Prints every individual check.
        #[arg(long)]
        verbose: bool,
    },
}

fn parse_turn(s: &str) -> std::result::Result<Q, String> {
    parse_q(s).map_err(|e| e.to_string())
}

fn parse_step(s: &str) -> std::result::Result<Q, String> {
    let q = parse_q(s).map_err(|e| e.to_string())?;
    let k = num_recip(&q).ok_or_else(|| format!("step {s} must be 1/k for an integer k ≥ 1"))?;
    if k == 0 {
        return Err(format!("step {s} must be positive"));
    }
    Ok(q)
}

fn num_recip(q: &Q) -> Option<usize> {
    if *q <= Q::from_integer(0.into()) {
        return None;
    }
    let r = q.recip();
    if !r.is_integer() {
        return None;
    }
    r.to_integer().to_string().parse().ok()
}

fn parse_target(s: &str) -> std::result::Result<(String, Invariant), String> {
    let (space, inv) = s.split_once(':').ok_or("expected SPACE:INVARIANT")?;
    Ok((space.to_string(), inv.parse().map_err(|e: Error| e.to_string())?))
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Budget(_) => 2,
        Error::Contradiction(_) => 3,
        _ => 1,
    }
}

/// `p/q (decimal)`.
fn rational(q: &Q) -> String {
    if q.is_integer() {
        fmt_q(q)
    } else {
        format!("{} ({})", fmt_q(q), q_to_f64(q))
    }
}

struct Ctx {
    data: PathBuf,
    format: Format,
}

impl Ctx {
    /// Uses `p` as given if it exists, else looks for it under the data directory.
    fn resolve(&self, p: &Path, sub: &str) -> PathBuf {
        if p.exists() || p.is_absolute() {
            return p.to_path_buf();
        }
        let cand = self.data.join(sub).join(p);
        if cand.exists() {
            cand
        } else {
            p.to_path_buf()
        }
    }

    fn emit<T: Serialize>(&self, value: &T, text: impl FnOnce() -> String) -> Result<String> {
        match self.format {
            Format::Json => Ok(serde_json::to_string_pretty(value)? + "\n"),
            Format::Text => Ok(text()),
        }
    }
}

/// Cohomology ring of a `.cx` complex, or a `.ring` file as stored.
fn load_algebra(ctx: &Ctx, input: &Path, field: Option<FieldSpec>) -> Result<GradedAlgebra> {
    if input.extension().is_some_and(|e| e == "ring") {
        let r = GradedAlgebra::load(ctx.resolve(input, "rings"))?;
        match field {
            Some(f) if f != r.field => Err(Error::InvalidField(format!("ring file is over {}, not {f}", r.field))),
            _ => Ok(r),
        }
    } else {
        let k = SimplicialComplex::load(ctx.resolve(input, "complexes"))?;
        cohomology_ring(&k, field.unwrap_or(FieldSpec::Rationals).validate()?)
    }
}

#[derive(Serialize)]
struct CohomologyReport {
    name: String,
    field: FieldSpec,
    coefficients: String,
    betti: Vec<usize>,
    euler_characteristic: i64,
    ring: intertwine::ring::RingFile,
}

fn cohomology(ctx: &Ctx, input: &Path, field: FieldSpec) -> Result<String> {
    let k = SimplicialComplex::load(ctx.resolve(input, "complexes"))?;
    let betti = betti_numbers(&k, field)?;
    let ring = cohomology_ring(&k, field)?;
    let report = CohomologyReport {
        name: k.name.clone(),
        field,
        coefficients: field.report_label(),
        betti: betti.clone(),
        euler_characteristic: k.euler_characteristic(),
        ring: ring.to_file(),
    };
    ctx.emit(&report, || {
        let mut s = String::new();
        let _ = writeln!(s, "{}", ring.name);
        let _ = writeln!(s, "coefficients: {}", field.report_label());
        let _ = writeln!(s, "faces: {:?}", k.face_counts());
        let _ = writeln!(s, "betti: {}", betti.iter().map(|b| b.to_string()).collect::<Vec<_>>().join(" "));
        let _ = writeln!(s, "euler characteristic: {}", k.euler_characteristic());
        for (d, labels) in ring.labels.iter().enumerate().skip(1) {
            if !labels.is_empty() {
                let _ = writeln!(s, "H^{d}: {}", labels.join(", "));
            }
        }
        for (&(d1, i, d2, j), v) in ring.structure_constants() {
            if (d1, i) <= (d2, j) {
                let _ = writeln!(
                    s,
                    "{} · {} = {}",
                    ring.labels[d1][i],
                    ring.labels[d2][j],
                    ring.format_element(d1 + d2, v)
                );
            }
        }
        s
    })
}

fn search_output(ctx: &Ctx, r: &intertwine::ring::CupLengthResult) -> Result<String> {
    ctx.emit(r, || {
        if r.truncated {
            format!("≥ {} (search truncated)\n", r.length)
        } else {
            format!("{}\n", r.length)
        }
    })
}

#[derive(Serialize)]
struct ResolveReport {
    n: u32,
    #[serde(flatten)]
    report: intertwine::strand::ResolverReport,
}

fn resolve(ctx: &Ctx, input: &Path, n: u32, limits: EnumerationLimits) -> Result<String> {
    let d = BranchingDiagram::load(ctx.resolve(input, "diagrams"))?;
    let report = enumerate_resolvers_with(&d, n as usize, limits)?;
    let out = ResolveReport { n, report };
    ctx.emit(&out, || {
        let r = &out.report;
        let count = r.vertex_resolvers.len();
        let noun = if count == 1 { "resolver" } else { "resolvers" };
        let mut s = format!("{count} {noun} (polytope dim {})\n", r.polytope_dimension);
        for v in &r.vertex_resolvers {
            let terms: Vec<String> = v.weights.iter().map(|(route, w)| format!("{}·{route}", rational(w))).collect();
            let _ = writeln!(s, "  {}", terms.join(" + "));
        }
        s
    })
}

#[derive(Serialize)]
struct MinSupport {
    diagram: String,
    min_support: usize,
}

fn navigate(ctx: &Ctx, diagram: Option<&Path>, points: &[Q], step: &Q) -> Result<String> {
    let grid = num_recip(step).ok_or_else(|| Error::InvalidPath("step must divide 1".into()))?;
    let d = match diagram {
        Some(p) => BranchingDiagram::load(ctx.resolve(p, "diagrams"))?,
        None => {
            if points.len() < 2 {
                return Err(Error::InvalidPath("navigate needs --diagram or at least two --points".into()));
            }
            let pts: Vec<MetricPoint> = points.iter().map(|t| MetricPoint::turns(t.clone())).collect();
            sequential_compose(&CircleNavigator, &pts)?
        }
    };
    let nav = Navigation::from_diagram(d, grid)?;
    ctx.emit(&nav, || {
        let mut s = format!("{}\n", nav.diagram.name);
        for (t, m) in nav.times.iter().zip(&nav.measures) {
            let atoms: Vec<String> = m.atoms().iter().map(|(p, w)| format!("{}@[{p}]", rational(w))).collect();
            let _ = writeln!(s, "{t}\t{}", atoms.join(" + "));
        }
        s
    })
}

#[derive(Serialize)]
struct BoundsRow {
    space: String,
    invariant: Invariant,
    interval: Interval,
}

#[derive(Serialize)]
struct BoundsReport {
    rows: Vec<BoundsRow>,
    separations: Vec<intertwine::bounds::Separation>,
    traces: Vec<intertwine::bounds::Derivation>,
}

fn report_invariants(m_max: u32) -> Vec<Invariant> {
    let mut v = vec![Invariant::Cat, Invariant::Dcat, Invariant::Icat];
    for m in 2..=m_max {
        v.extend([Invariant::Tc(m), Invariant::Dtc(m), Invariant::Itc(m)]);
    }
    v
}

fn bounds(ctx: &Ctx, facts: &[PathBuf], config: EngineConfig, spaces: &[String], traces: &[(String, Invariant)]) -> Result<String> {
    let mut base: FactBase = reproduce::build_fact_base(&ctx.data, config)?;
    for f in facts {
        base.load_file(ctx.resolve(f, "facts"))?;
    }
    base.propagate()?;
    let known = base.known();
    let mut rows = Vec::new();
    let names: Vec<String> = base.spaces().map(|s| s.name.clone()).collect();
    for x in names.iter().filter(|x| spaces.is_empty() || spaces.contains(x)) {
        for inv in report_invariants(config.m_max) {
            if known.iter().any(|(s, i)| s == x && *i == inv) {
                rows.push(BoundsRow { space: x.clone(), invariant: inv, interval: base.interval(x, inv) });
            }
        }
    }
    let report = BoundsReport {
        rows,
        separations: base.separations(),
        traces: traces.iter().map(|(s, i)| base.derive(s, *i)).collect::<Result<Vec<_>>>()?,
    };
    ctx.emit(&report, || {
        let mut s = String::new();
        let _ = writeln!(s, "{:<10} {:<10} interval", "space", "invariant");
        for r in &report.rows {
            let _ = writeln!(s, "{:<10} {:<10} {}", r.space, r.invariant.to_string(), r.interval);
        }
        if !report.separations.is_empty() {
            let _ = writeln!(s, "\nseparations:");
            for sep in &report.separations {
                let _ = writeln!(s, "  {}: iTC_{} {} < dTC_{} {}", sep.space, sep.m, sep.itc, sep.m, sep.dtc);
            }
        }
        for d in &report.traces {
            let _ = writeln!(s, "\n{}({}) {}", d.invariant, d.space, d.interval);
            for (label, t) in [("lower", &d.lower), ("upper", &d.upper)] {
                match t {
                    Some(t) => {
                        let _ = write!(s, "{label}:\n{}", t.render());
                    }
                    None => {
                        let _ = writeln!(s, "{label}: none");
                    }
                }
            }
        }
        s
    })
}

fn verify(ctx: &Ctx, cfg: &SuiteConfig, verbose: bool) -> Result<(String, bool)> {
    let results = reproduce::run_all(&ctx.data, cfg);
    let ok = results.iter().all(|r| r.passed);
    let text = ctx.emit(&results, || {
        let mut s = String::new();
        for r in &results {
            let _ = writeln!(s, "{:>2}  {}  {}", r.id, if r.passed { "PASS" } else { "FAIL" }, r.title);
            for c in r.checks.iter().filter(|c| verbose || !c.passed) {
                let _ = writeln!(s, "      [{}] {}", if c.passed { "ok" } else { "FAIL" }, c.label);
            }
            if let Some(e) = &r.error {
                let _ = writeln!(s, "      error: {e}");
            }
        }
        let passed = results.iter().filter(|r| r.passed).count();
        let _ = writeln!(s, "{passed}/{} criteria passed", results.len());
        s
    })?;
    Ok((text, ok))
}

fn run(cli: Cli) -> Result<(String, bool)> {
    let ctx = Ctx { data: cli.data_dir.unwrap_or_else(reproduce::data_dir), format: cli.format };
    let text = match cli.command {
        Command::Cohomology { input, field } => cohomology(&ctx, &input, field.validate()?)?,
        Command::Cuplen { input, field, max_length, budget } => {
            let a = load_algebra(&ctx, &input, field)?;
            search_output(&ctx, &cup_length_search(&a, SearchConfig { max_length, node_budget: budget }))?
        }
        Command::Zcl { input, field, m, max_length, budget } => {
            let a = load_algebra(&ctx, &input, field)?;
            let r = zero_divisor_search(&a, m as usize, SearchConfig { max_length, node_budget: budget })?;
            search_output(&ctx, &r)?
        }
        Command::Resolve { input, n, max_routes, max_nodes } => {
            resolve(&ctx, &input, n, EnumerationLimits { max_routes, max_nodes })?
        }
        Command::Minsupport { input } => {
            let d = BranchingDiagram::load(ctx.resolve(&input, "diagrams"))?;
            let out = MinSupport { diagram: d.name.clone(), min_support: min_support(&d)? };
            ctx.emit(&out, || format!("{}\n", out.min_support))?
        }
        Command::Navigate { diagram, points, step } => navigate(&ctx, diagram.as_deref(), &points, &step)?,
        Command::Bounds { facts, m_max, no_external, space, trace } => {
            let config = EngineConfig { m_max, external_rules: !no_external, ..EngineConfig::default() };
            bounds(&ctx, &facts, config, &space, &trace)?
        }
        Command::VerifyPaper { seed, instances, verbose } => {
            let cfg = SuiteConfig { seed, metric_instances: instances, ..SuiteConfig::default() };
            return verify(&ctx, &cfg, verbose);
        }
    };
    Ok((text, true))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok((text, ok)) => {
            print!("{text}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
