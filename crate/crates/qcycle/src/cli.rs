use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use qcycle_core::analysis::{perm_group, retract, retract_tower};
use qcycle_core::enumeration::{frozen, oracle, Caps, EnumFilter, EnumResult, SearchStats, HARD_MAX_ORDER};
use qcycle_core::extensions::{
    build_extension, enumerate_congruences, factor_covering, semidirect_product, verify_covering,
    verify_dynamical_pair,
};
use qcycle_core::fixtures::{self, fixture_catalog, Expected, Structure};
use qcycle_core::perm::Perm;
use qcycle_core::qcs::verify_qcycle;
use qcycle_core::report::VerificationReport;
use qcycle_core::{verify_solution, QCycleSet, SolutionMap};
use serde::Serialize;

use crate::error::CliError;
use crate::json::{
    parse_input, parse_structure, parse_value, to_line, CoverJson, ExtensionJson, FactorizationJson, Input,
    PairJson, QcsJson, QuotientJson, ReportJson, SolutionJson, ViolationJson,
};
use crate::parallel::enumerate_threaded;
use crate::sample::{check_samples, SampleMode};

#[derive(Debug, Parser)]
#[command(name = "qcycle", version, about = "Finite q-cycle sets and set-theoretic solutions of the Yang-Baxter equation")]
pub struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true, conflicts_with = "text")]
    pub json: bool,
    /// Human-readable output (default).
    #[arg(long, global = true)]
    pub text: bool,
    /// Write output here instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    /// Worker threads for enumeration.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,
    /// Seed for randomized sampling.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a q-cycle set, solution, dynamical pair or covering map.
    Verify { file: PathBuf },
    /// Translate between a q-cycle set and its solution.
    Convert {
        #[arg(long, value_enum)]
        to: Target,
        file: PathBuf,
    },
    /// Regularity, non-degeneracy, squaring maps, group, retract and powers of r.
    Analyze {
        file: PathBuf,
        /// Largest exponent in the power identities.
        #[arg(long, default_value_t = 6)]
        max_power: u32,
    },
    /// The retract, or with --tower the iterated retracts.
    Retract {
        file: PathBuf,
        #[arg(long)]
        tower: bool,
        #[arg(long, default_value_t = 64)]
        max_steps: usize,
    },
    /// Build an extension from a dynamical pair or a semidirect product.
    Extend(ExtendArgs),
    /// Check or factor a covering map.
    Cover(CoverArgs),
    /// Simplicity test through uniform congruences.
    Simple { file: PathBuf },
    /// Exhaustive enumeration as JSON lines plus a summary record.
    Enumerate(EnumerateArgs),
    /// Seeded falsification run for the pair/product equivalence.
    Sample(SampleArgs),
    /// The built-in example catalog.
    Fixtures {
        #[command(subcommand)]
        action: FixturesAction,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Solution,
    Qcs,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct ExtendArgs {
    /// A dynamical pair file.
    #[arg(long)]
    pub pair: Option<PathBuf>,
    /// Base, fiber and a JSON list of automorphism image sequences.
    #[arg(long, num_args = 3, value_names = ["X", "S", "THETA"])]
    pub semidirect: Option<Vec<PathBuf>>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct CoverArgs {
    #[arg(long)]
    pub check: Option<PathBuf>,
    #[arg(long)]
    pub factor: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long, required_unless_present = "frozen")]
    pub n: Option<usize>,
    #[arg(long)]
    pub regular: bool,
    #[arg(long)]
    pub nondeg: bool,
    #[arg(long)]
    pub cycle_set: bool,
    #[arg(long)]
    pub up_to_iso: bool,
    /// Emit the solutions encoded by the structures instead.
    #[arg(long, conflicts_with_all = ["regular", "nondeg", "cycle_set", "up_to_iso"])]
    pub solutions: bool,
    /// With --solutions, keep only bijective r.
    #[arg(long, requires = "solutions")]
    pub bijective: bool,
    /// Count with the unpruned oracle and compare with the search and the frozen table.
    #[arg(long)]
    pub oracle: bool,
    /// With --oracle, recompute every frozen row (ignores --n and filters).
    #[arg(long, requires = "oracle")]
    pub frozen: bool,
    /// Override the order cap; raising it needs --ack-long-run.
    #[arg(long)]
    pub cap: Option<usize>,
    #[arg(long)]
    pub ack_long_run: bool,
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    #[arg(long, default_value_t = 200)]
    pub count: usize,
    /// Largest base order.
    #[arg(long, default_value_t = 3)]
    pub n: usize,
    /// Largest fiber size.
    #[arg(long, default_value_t = 3)]
    pub m: usize,
    #[arg(long, value_enum, default_value_t = SampleMode::Mixed)]
    pub mode: SampleMode,
}

#[derive(Debug, Subcommand)]
pub enum FixturesAction {
    List,
    Check { name: Option<String> },
    /// Print a fixture's structure in its JSON format.
    Show { name: String },
}

struct Ctx<'a> {
    json: bool,
    threads: usize,
    seed: u64,
    out: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn line(&mut self, s: &str) -> Result<(), CliError> {
        writeln!(self.out, "{s}").map_err(|source| CliError::Io {
            path: String::from("<output>"),
            source,
        })
    }

    fn data<T: Serialize>(&mut self, value: &T) -> Result<(), CliError> {
        self.line(&to_line(value))
    }
}

fn read_path(path: &Path) -> Result<String, CliError> {
    let io = |source| CliError::Io {
        path: path.display().to_string(),
        source,
    };
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

/// Parses `args` (program name first) and runs the command. Returns the
/// process exit code: 0 success, 1 a checked property failed, 2 bad input.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() {
                write!(stderr, "{}", e.render())
            } else {
                write!(stdout, "{}", e.render())
            };
            return code;
        }
    };
    let mut file;
    let out: &mut dyn Write = match &cli.output {
        Some(path) => match std::fs::File::create(path) {
            Ok(f) => {
                file = std::io::BufWriter::new(f);
                &mut file
            }
            Err(e) => {
                let _ = writeln!(stderr, "error: {}: {e}", path.display());
                return 2;
            }
        },
        None => stdout,
    };
    let mut ctx = Ctx {
        json: cli.json,
        threads: cli.threads,
        seed: cli.seed,
        out,
    };
    let result = dispatch(&mut ctx, cli.command);
    let _ = ctx.out.flush();
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(ctx: &mut Ctx, command: Command) -> Result<i32, CliError> {
    match command {
        Command::Verify { file } => verify(ctx, &read_path(&file)?),
        Command::Convert { to, file } => convert(ctx, to, &read_path(&file)?),
        Command::Analyze { file, max_power } => analyze(ctx, &read_path(&file)?, max_power),
        Command::Retract { file, tower, max_steps } => retract_cmd(ctx, &read_path(&file)?, tower, max_steps),
        Command::Extend(a) => extend(ctx, a),
        Command::Cover(a) => cover(ctx, a),
        Command::Simple { file } => simple(ctx, &read_path(&file)?),
        Command::Enumerate(a) => enumerate(ctx, a),
        Command::Sample(a) => sample(ctx, a),
        Command::Fixtures { action } => fixtures_cmd(ctx, action),
    }
}

fn code(ok: bool) -> i32 {
    if ok {
        0
    } else {
        1
    }
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    kind: &'a str,
    ok: bool,
    violations: Vec<ViolationJson>,
}

fn report(ctx: &mut Ctx, kind: &str, r: &VerificationReport) -> Result<i32, CliError> {
    if ctx.json {
        let ReportJson { ok, violations } = ReportJson::from(r);
        ctx.data(&VerifyJson { kind, ok, violations })?;
    } else if r.ok() {
        ctx.line(&format!("{kind}: ok"))?;
    } else {
        ctx.line(&format!("{kind}: {} violation(s)", r.violations.len()))?;
        for v in &r.violations {
            ctx.line(&format!("  {v}"))?;
        }
    }
    Ok(code(r.ok()))
}

fn verify(ctx: &mut Ctx, text: &str) -> Result<i32, CliError> {
    match parse_input(text)? {
        Input::Qcs(q) => {
            let (dot, colon) = q.tables()?;
            let r = verify_qcycle(&dot, &colon)?;
            report(ctx, "qcs", &r)
        }
        Input::Solution(s) => report(ctx, "solution", &verify_solution(&s.to_solution()?)),
        Input::Pair(p) => {
            let (dot, colon) = p.base.tables()?;
            let base = verify_qcycle(&dot, &colon)?;
            if !base.ok() {
                return report(ctx, "pair base", &base);
            }
            report(ctx, "pair", &verify_dynamical_pair(&p.to_pair()?))
        }
        Input::Cover(c) => {
            for (side, q) in [("cover source", &c.source), ("cover target", &c.target)] {
                let (dot, colon) = q.tables()?;
                let r = verify_qcycle(&dot, &colon)?;
                if !r.ok() {
                    return report(ctx, side, &r);
                }
            }
            report(ctx, "cover", &verify_covering(&c.to_cover()?))
        }
    }
}

fn convert(ctx: &mut Ctx, to: Target, text: &str) -> Result<i32, CliError> {
    let x = parse_structure(text)?;
    match to {
        Target::Qcs => ctx.data(&QcsJson::from(&x))?,
        Target::Solution => ctx.data(&SolutionJson::from(&x.to_solution()))?,
    }
    Ok(0)
}

#[derive(Serialize)]
struct PowerJson {
    a: u32,
    b: u32,
    holds: bool,
}

#[derive(Serialize)]
struct AnalyzeJson {
    n: usize,
    regular: bool,
    nondegenerate: bool,
    cycle_set: bool,
    q: Vec<usize>,
    q_prime: Vec<usize>,
    group_order: Option<usize>,
    orbits: Option<Vec<Vec<usize>>>,
    retract_classes: Option<usize>,
    solution_bijective: bool,
    right_nondegenerate: bool,
    powers: Vec<PowerJson>,
}

fn analysis_of(x: &QCycleSet, max_power: u32) -> Result<AnalyzeJson, CliError> {
    let (q, q_prime) = x.squaring_maps();
    let group = if x.is_regular() { Some(perm_group(x)?) } else { None };
    let retract_classes = if x.is_regular() {
        Some(retract(x)?.class_count())
    } else {
        None
    };
    let s = x.to_solution();
    let mut powers = Vec::new();
    for a in 1..=max_power {
        for b in 0..a {
            powers.push(PowerJson {
                a,
                b,
                holds: s.power_eq(a, b),
            });
        }
    }
    Ok(AnalyzeJson {
        n: x.n(),
        regular: x.is_regular(),
        nondegenerate: x.is_nondegenerate(),
        cycle_set: x.is_cycle_set(),
        q,
        q_prime,
        group_order: group.as_ref().map(|g| g.order()),
        orbits: group.as_ref().map(|g| g.orbits().to_vec()),
        retract_classes,
        solution_bijective: s.is_bijective(),
        right_nondegenerate: s.is_right_nondegenerate(),
        powers,
    })
}

fn opt<T: std::fmt::Debug>(v: &Option<T>) -> String {
    v.as_ref().map_or(String::from("n/a"), |v| format!("{v:?}"))
}

fn analyze(ctx: &mut Ctx, text: &str, max_power: u32) -> Result<i32, CliError> {
    let x = parse_structure(text)?;
    let a = analysis_of(&x, max_power)?;
    if ctx.json {
        ctx.data(&a)?;
        return Ok(0);
    }
    ctx.line(&format!("order: {}", a.n))?;
    ctx.line(&format!("regular: {}", a.regular))?;
    ctx.line(&format!("non-degenerate: {}", a.nondegenerate))?;
    ctx.line(&format!("cycle set: {}", a.cycle_set))?;
    ctx.line(&format!("q: {:?}", a.q))?;
    ctx.line(&format!("q': {:?}", a.q_prime))?;
    ctx.line(&format!("group order: {}", opt(&a.group_order)))?;
    ctx.line(&format!("orbits: {}", opt(&a.orbits)))?;
    ctx.line(&format!("retract classes: {}", opt(&a.retract_classes)))?;
    ctx.line(&format!("r bijective: {}", a.solution_bijective))?;
    ctx.line(&format!("r right non-degenerate: {}", a.right_nondegenerate))?;
    for p in &a.powers {
        if p.b == 0 {
            ctx.line(&format!("r^{} = id: {}", p.a, p.holds))?;
        } else {
            ctx.line(&format!("r^{} = r^{}: {}", p.a, p.b, p.holds))?;
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct TowerJson {
    sizes: Vec<usize>,
    stabilized: bool,
    levels: Vec<QcsJson>,
}

fn retract_cmd(ctx: &mut Ctx, text: &str, tower: bool, max_steps: usize) -> Result<i32, CliError> {
    let x = parse_structure(text)?;
    if tower {
        let t = retract_tower(&x, max_steps)?;
        if ctx.json {
            ctx.data(&TowerJson {
                sizes: t.sizes(),
                stabilized: t.stabilized,
                levels: t.levels.iter().map(QcsJson::from).collect(),
            })?;
        } else {
            let sizes: Vec<String> = t.sizes().iter().map(usize::to_string).collect();
            ctx.line(&format!("sizes: {}", sizes.join(" -> ")))?;
            ctx.line(&format!("stabilized: {}", t.stabilized))?;
        }
        return Ok(0);
    }
    let r = retract(&x)?;
    if ctx.json {
        ctx.data(&QuotientJson::from(&r))?;
    } else {
        ctx.line(&format!("classes: {} of {}", r.class_count(), x.n()))?;
        ctx.line(&format!("{:?}", r.classes))?;
        ctx.line(&format!("irretractable: {}", r.is_irretractable()))?;
    }
    Ok(0)
}

fn extend(ctx: &mut Ctx, a: ExtendArgs) -> Result<i32, CliError> {
    if let Some(path) = a.pair {
        let p: PairJson = match parse_input(&read_path(&path)?)? {
            Input::Pair(p) => p,
            other => {
                return Err(CliError::WrongKind {
                    expected: "pair",
                    found: other.kind(),
                })
            }
        };
        let d = p.to_pair()?;
        let r = verify_dynamical_pair(&d);
        if !r.ok() {
            return report(ctx, "pair", &r);
        }
        let e = build_extension(&d)?;
        ctx.data(&ExtensionJson::new(&e, d.base(), d.m()))?;
        return Ok(0);
    }
    let paths = a.semidirect.expect("argument group requires one");
    let x = parse_structure(&read_path(&paths[0])?)?;
    let s = parse_structure(&read_path(&paths[1])?)?;
    let theta: Vec<Vec<usize>> = serde_json::from_value(parse_value(&read_path(&paths[2])?)?)
        .map_err(|e| CliError::Shape(format!("theta: {e}")))?;
    let theta: Vec<Perm> = theta
        .into_iter()
        .map(Perm::from_images)
        .collect::<Result<_, _>>()
        .map_err(|e| CliError::Shape(format!("theta: {e}")))?;
    let p = semidirect_product(&x, &s, &theta)?;
    ctx.data(&ExtensionJson::new(&p, &x, s.n()))?;
    Ok(0)
}

fn read_cover(path: &Path) -> Result<CoverJson, CliError> {
    match parse_input(&read_path(path)?)? {
        Input::Cover(c) => Ok(c),
        other => Err(CliError::WrongKind {
            expected: "cover",
            found: other.kind(),
        }),
    }
}

fn cover(ctx: &mut Ctx, a: CoverArgs) -> Result<i32, CliError> {
    if let Some(path) = a.check {
        let c = read_cover(&path)?.to_cover()?;
        return report(ctx, "cover", &verify_covering(&c));
    }
    let c = read_cover(&a.factor.expect("argument group requires one"))?.to_cover()?;
    let r = verify_covering(&c);
    if !r.ok() {
        return report(ctx, "cover", &r);
    }
    let f = factor_covering(&c)?;
    if ctx.json {
        ctx.data(&FactorizationJson::from(&f))?;
    } else {
        ctx.line(&format!("fiber size: {}", f.m))?;
        ctx.line(&format!("phi: {:?}", f.phi.images()))?;
        ctx.line(&format!("pair: {}", to_line(&PairJson::from(&f.pair))))?;
    }
    Ok(0)
}

#[derive(Serialize)]
struct SimpleJson {
    simple: bool,
    congruences: usize,
    witness: Option<Vec<Vec<usize>>>,
}

fn simple(ctx: &mut Ctx, text: &str) -> Result<i32, CliError> {
    let x = parse_structure(text)?;
    let cs = enumerate_congruences(&x)?;
    let witness = cs
        .iter()
        .find(|c| c.is_uniform() && !c.is_discrete() && !c.is_total())
        .map(|c| c.blocks().to_vec());
    let s = SimpleJson {
        simple: witness.is_none(),
        congruences: cs.len(),
        witness,
    };
    if ctx.json {
        ctx.data(&s)?;
    } else {
        ctx.line(&format!("simple: {}", s.simple))?;
        ctx.line(&format!("congruences: {}", s.congruences))?;
        if let Some(w) = &s.witness {
            ctx.line(&format!("uniform congruence: {w:?}"))?;
        }
    }
    Ok(code(s.simple))
}

#[derive(Serialize)]
struct FilterJson {
    regular: bool,
    nondegenerate: bool,
    cycle_set_only: bool,
    up_to_iso: bool,
}

impl From<&EnumFilter> for FilterJson {
    fn from(f: &EnumFilter) -> Self {
        FilterJson {
            regular: f.regular,
            nondegenerate: f.nondegenerate,
            cycle_set_only: f.cycle_set_only,
            up_to_iso: f.up_to_iso,
        }
    }
}

#[derive(Serialize)]
struct StatsJson {
    nodes: u64,
    dot_prunes: u64,
    colon_prunes: u64,
    filtered: u64,
    labeled: u64,
}

impl From<&SearchStats> for StatsJson {
    fn from(s: &SearchStats) -> Self {
        StatsJson {
            nodes: s.nodes,
            dot_prunes: s.dot_prunes,
            colon_prunes: s.colon_prunes,
            filtered: s.filtered,
            labeled: s.labeled,
        }
    }
}

#[derive(Serialize)]
struct Summary {
    n: usize,
    kind: &'static str,
    filter: FilterJson,
    count: usize,
    stats: StatsJson,
}

#[derive(Serialize)]
struct SummaryRecord {
    summary: Summary,
}

fn caps_for(a: &EnumerateArgs, f: &EnumFilter) -> Result<Caps, CliError> {
    let mut caps = Caps::default();
    if let Some(cap) = a.cap {
        let default = if f.cycle_set_only { caps.cycle_sets } else { caps.general };
        if cap > HARD_MAX_ORDER {
            return Err(CliError::Usage(format!("--cap {cap} exceeds the hard limit {HARD_MAX_ORDER}")));
        }
        if cap > default && !a.ack_long_run {
            return Err(CliError::Usage(format!(
                "--cap {cap} is above the default {default}; pass --ack-long-run to confirm"
            )));
        }
        if f.cycle_set_only {
            caps.cycle_sets = cap;
        } else {
            caps.general = cap;
        }
    }
    Ok(caps)
}

fn enumerate(ctx: &mut Ctx, a: EnumerateArgs) -> Result<i32, CliError> {
    let f = EnumFilter {
        regular: a.regular,
        nondegenerate: a.nondeg,
        cycle_set_only: a.cycle_set,
        up_to_iso: a.up_to_iso,
    };
    if a.frozen {
        return oracle_frozen(ctx);
    }
    let n = a.n.expect("required unless --frozen");
    if a.oracle {
        return oracle_cmd(ctx, &a, n, f);
    }
    let caps = caps_for(&a, &f)?;
    let r: EnumResult = enumerate_threaded(n, f, &caps, ctx.threads)?;
    let (kind, count) = if a.solutions {
        let mut sols: Vec<SolutionMap> = r
            .structures
            .iter()
            .map(QCycleSet::to_solution)
            .filter(|s| !a.bijective || s.is_bijective())
            .collect();
        sols.sort();
        for s in &sols {
            ctx.data(&SolutionJson::from(s))?;
        }
        ("solution", sols.len())
    } else {
        for x in &r.structures {
            ctx.data(&QcsJson::from(x))?;
        }
        ("qcs", r.count())
    };
    ctx.data(&SummaryRecord {
        summary: Summary {
            n,
            kind,
            filter: (&f).into(),
            count,
            stats: (&r.stats).into(),
        },
    })?;
    Ok(0)
}

#[derive(Serialize)]
struct OracleRecord {
    oracle: OracleJson,
}

#[derive(Serialize)]
struct OracleJson {
    n: usize,
    kind: &'static str,
    filter: FilterJson,
    labeled: usize,
    up_to_iso: Option<usize>,
    engine_labeled: usize,
    engine_up_to_iso: Option<usize>,
    frozen_labeled: Option<usize>,
    frozen_up_to_iso: Option<usize>,
    matches: bool,
}

fn oracle_cmd(ctx: &mut Ctx, a: &EnumerateArgs, n: usize, f: EnumFilter) -> Result<i32, CliError> {
    let caps = caps_for(a, &f)?;
    let o = if a.solutions {
        let direct = oracle::naive_solutions(n, a.bijective)?.len();
        let r = enumerate_threaded(n, EnumFilter::default(), &caps, ctx.threads)?;
        let engine = r
            .structures
            .iter()
            .filter(|x| !a.bijective || x.to_solution().is_bijective())
            .count();
        let frozen = frozen::lookup_solutions(n, a.bijective).map(|r| r.count);
        OracleJson {
            n,
            kind: "solution",
            filter: (&f).into(),
            labeled: direct,
            up_to_iso: None,
            engine_labeled: engine,
            engine_up_to_iso: None,
            frozen_labeled: frozen,
            frozen_up_to_iso: None,
            matches: engine == direct && frozen.is_none_or(|c| c == direct),
        }
    } else {
        let c = oracle::naive_count(n, &f)?;
        let labeled = enumerate_threaded(n, EnumFilter { up_to_iso: false, ..f }, &caps, ctx.threads)?;
        let iso = enumerate_threaded(n, EnumFilter { up_to_iso: true, ..f }, &caps, ctx.threads)?;
        let frozen = frozen::lookup(n, &f);
        let frozen_ok = frozen.is_none_or(|r| (r.labeled, r.up_to_iso) == (c.labeled, c.up_to_iso));
        OracleJson {
            n,
            kind: "qcs",
            filter: (&f).into(),
            labeled: c.labeled,
            up_to_iso: Some(c.up_to_iso),
            engine_labeled: labeled.count(),
            engine_up_to_iso: Some(iso.count()),
            frozen_labeled: frozen.map(|r| r.labeled),
            frozen_up_to_iso: frozen.map(|r| r.up_to_iso),
            matches: labeled.count() == c.labeled && iso.count() == c.up_to_iso && frozen_ok,
        }
    };
    let matches = o.matches;
    if ctx.json {
        ctx.data(&OracleRecord { oracle: o })?;
    } else {
        ctx.line(&format!(
            "oracle: labeled {} up to iso {}",
            o.labeled,
            opt(&o.up_to_iso)
        ))?;
        ctx.line(&format!(
            "search: labeled {} up to iso {}",
            o.engine_labeled,
            opt(&o.engine_up_to_iso)
        ))?;
        ctx.line(&format!(
            "frozen: labeled {} up to iso {}",
            opt(&o.frozen_labeled),
            opt(&o.frozen_up_to_iso)
        ))?;
        ctx.line(&format!("matches: {matches}"))?;
    }
    Ok(code(matches))
}

/// Recomputes the whole frozen table with the oracle and prints it in the
/// source form used by the frozen module.
fn oracle_frozen(ctx: &mut Ctx) -> Result<i32, CliError> {
    let mut rows = Vec::new();
    for (cycle, max) in [(false, oracle::ORACLE_MAX_GENERAL), (true, oracle::ORACLE_MAX_CYCLE_SETS)] {
        for n in 1..=max {
            let all = oracle::naive_structures(n, cycle)?;
            for (regular, nondegenerate) in [(false, false), (true, false), (false, true), (true, true)] {
                let f = EnumFilter {
                    regular,
                    nondegenerate,
                    cycle_set_only: cycle,
                    up_to_iso: false,
                };
                let c = oracle::count(&all, &f);
                rows.push(frozen::FrozenCount {
                    n,
                    regular,
                    nondegenerate,
                    cycle_set_only: cycle,
                    labeled: c.labeled,
                    up_to_iso: c.up_to_iso,
                });
            }
        }
    }
    let mut sols = Vec::new();
    for n in 1..=oracle::ORACLE_MAX_GENERAL {
        for b in [false, true] {
            sols.push(frozen::FrozenSolutionCount {
                n,
                require_bijective: b,
                count: oracle::naive_solutions(n, b)?.len(),
            });
        }
    }
    ctx.line("pub const QCS_COUNTS: &[FrozenCount] = &[")?;
    for r in &rows {
        ctx.line(&format!(
            "    c({}, {}, {}, {}, {}, {}),",
            r.n, r.regular, r.nondegenerate, r.cycle_set_only, r.labeled, r.up_to_iso
        ))?;
    }
    ctx.line("];")?;
    ctx.line("pub const SOLUTION_COUNTS: &[FrozenSolutionCount] = &[")?;
    for r in &sols {
        ctx.line(&format!("    s({}, {}, {}),", r.n, r.require_bijective, r.count))?;
    }
    ctx.line("];")?;
    let same = rows == frozen::QCS_COUNTS && sols == frozen::SOLUTION_COUNTS;
    ctx.line(&format!("// matches frozen table: {same}"))?;
    Ok(code(same))
}

fn sample(ctx: &mut Ctx, a: SampleArgs) -> Result<i32, CliError> {
    if a.n == 0 || a.m == 0 || a.n > 3 || a.m > 3 {
        return Err(CliError::Usage(String::from("--n and --m must lie in 1..=3")));
    }
    let s = check_samples(ctx.seed, a.count, a.mode, a.n, a.m);
    if ctx.json {
        ctx.data(&s)?;
    } else {
        ctx.line(&format!("samples: {}", s.samples))?;
        ctx.line(&format!("valid pairs: {}", s.valid_pairs))?;
        ctx.line(&format!("regular extensions: {}", s.regular_extensions))?;
        ctx.line(&format!("equivalence failures: {}", s.equivalence_failures))?;
        ctx.line(&format!("regularity failures: {}", s.regularity_failures))?;
    }
    Ok(code(s.ok()))
}

#[derive(Serialize)]
struct FixtureJson {
    name: &'static str,
    params: String,
    claims: usize,
}

#[derive(Serialize)]
struct OutcomeJson {
    property: String,
    expected: Option<bool>,
    observed: Option<bool>,
    passed: bool,
    anchor: &'static str,
}

#[derive(Serialize)]
struct FixtureCheckJson {
    name: &'static str,
    passed: bool,
    claims: Vec<OutcomeJson>,
}

#[derive(Serialize)]
struct ZWitnessJson {
    square_of_minus_two: qcycle_core::extensions::ZPoint,
    square_of_minus_one: qcycle_core::extensions::ZPoint,
    sample: qcycle_core::extensions::ZPoint,
    sigma_minus_two_at_sample: qcycle_core::extensions::ZPoint,
    sigma_minus_one_at_sample: qcycle_core::extensions::ZPoint,
}

fn fixtures_cmd(ctx: &mut Ctx, action: FixturesAction) -> Result<i32, CliError> {
    let lookup = |name: &str| fixtures::fixture(name).ok_or_else(|| CliError::Usage(format!("no fixture named {name:?}")));
    match action {
        FixturesAction::List => {
            for f in fixture_catalog() {
                if ctx.json {
                    ctx.data(&FixtureJson {
                        name: f.name,
                        params: f.params.clone(),
                        claims: f.claims.len(),
                    })?;
                } else {
                    ctx.line(&format!("{} ({}) {} claims", f.name, f.params, f.claims.len()))?;
                }
            }
            Ok(0)
        }
        FixturesAction::Check { name } => {
            let list = match name {
                Some(name) => vec![lookup(&name)?],
                None => fixture_catalog(),
            };
            let mut all_ok = true;
            for f in &list {
                let outcomes = f.check();
                let passed = outcomes.iter().all(|o| o.passed());
                all_ok &= passed;
                if ctx.json {
                    ctx.data(&FixtureCheckJson {
                        name: f.name,
                        passed,
                        claims: outcomes
                            .iter()
                            .map(|o| OutcomeJson {
                                property: o.property.to_string(),
                                expected: match o.expected {
                                    Expected::Holds(b) => Some(b),
                                    Expected::Unknown => None,
                                },
                                observed: o.observed,
                                passed: o.passed(),
                                anchor: o.anchor,
                            })
                            .collect(),
                    })?;
                } else {
                    ctx.line(&format!("{}: {}", f.name, if passed { "pass" } else { "FAIL" }))?;
                    for o in &outcomes {
                        ctx.line(&format!("  {o}"))?;
                    }
                }
            }
            Ok(code(all_ok))
        }
        FixturesAction::Show { name } => {
            match lookup(&name)?.structure {
                Structure::QCycleSet(x) => ctx.data(&QcsJson::from(&x))?,
                Structure::Solution(s) => ctx.data(&SolutionJson::from(&s))?,
                Structure::Pair(d, _) => ctx.data(&PairJson::from(&d))?,
                Structure::ZWitness(w) => ctx.data(&ZWitnessJson {
                    square_of_minus_two: w.square_of_minus_two,
                    square_of_minus_one: w.square_of_minus_one,
                    sample: w.sample,
                    sigma_minus_two_at_sample: w.sigma_minus_two_at_sample,
                    sigma_minus_one_at_sample: w.sigma_minus_one_at_sample,
                })?,
            }
            Ok(0)
        }
    }
}
