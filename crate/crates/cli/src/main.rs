mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::Ratio;

use convexlab_core::format::{
    parse_points, parse_system_file, parse_table, write_points, write_set_system, SystemFile,
};
use convexlab_core::generators::{
    gen_binary_words, gen_helly_sequence, gen_random, gen_shatter_family, word_length, word_string,
    GeneratedSystem, RandomKind, ShatterOptions,
};
use convexlab_core::harness::{
    check_colorful_clique_hypotheses, check_phi_below_psi, probe_fractional_helly, psi_eval,
    s_inverse, verify_helly_growth, verify_levi, verify_minimal_nonpartitionable,
    verify_radon_bound, MinimalVerdict, VerifyReport,
};
use convexlab_core::homology::{betti, shatter_profile, CubicalSetSystem};
use convexlab_core::intersection::{Sampler, TupleFraction, DEFAULT_EXACT_LIMIT};
use convexlab_core::radon::radon_number_within;
use convexlab_core::{
    colorful_helly_number, graded, helly_number, CorpusSpec, Error, GradedOptions, ParameterKind,
    PointSet, PsiTables, Subfamily,
};

use report::Report;

#[derive(Parser)]
#[command(
    name = "convexlab",
    version,
    about = "Radon, Helly and homological parameters of finite set systems"
)]
struct Cli {
    /// Print reports as JSON instead of key=value lines.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute Radon, Helly, colorful Helly numbers and graded profiles.
    Analyze(AnalyzeArgs),
    /// Generate a system file with its certificate report.
    Generate(GenerateArgs),
    /// Reduced Betti numbers of the intersection of a subfamily.
    Homology(HomologyArgs),
    /// Homological shatter profile of a cubical system.
    Shatter(ShatterArgs),
    /// Check a graded-parameter relation over a corpus.
    Verify(VerifyArgs),
    /// Fractional Helly probe: tuple fraction, depth and clique fraction.
    ProbeFh(ProbeArgs),
    /// Evaluate Psi_{d,b}(t) from plug-in tables.
    Psi(PsiArgs),
}

#[derive(Args)]
struct AnalyzeArgs {
    #[arg(long)]
    input: PathBuf,
    /// Comma-separated: radon, helly, colorful-helly, graded:KIND.
    #[arg(long, value_delimiter = ',', default_value = "radon,helly")]
    params: Vec<String>,
    /// Largest t for graded profiles (default: min(members, 6)).
    #[arg(long)]
    t_max: Option<usize>,
    /// Largest subfamily size enumerated for colorful Helly.
    #[arg(long, default_value_t = convexlab_core::helly::DEFAULT_COLORFUL_GUARD)]
    guard: usize,
}

#[derive(Args)]
struct GenerateArgs {
    /// Write the system here instead of stdout (the report then goes to stdout).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    family: Family,
}

#[derive(Subcommand)]
enum Family {
    /// Family whose graded Helly profile is the given sequence.
    HellySeq {
        #[arg(long, value_delimiter = ',', required = true)]
        u: Vec<usize>,
    },
    /// Binary-word family with its minimally non-partitionable point set.
    BinaryWords {
        #[arg(long)]
        k: usize,
        /// Also write the point set to this file.
        #[arg(long)]
        points_out: Option<PathBuf>,
    },
    /// Planar cubical family whose degree-0 shatter profile is f.
    Shatter {
        #[arg(long, value_delimiter = ',', required = true)]
        f: Vec<usize>,
        #[arg(long)]
        ring_side: Option<usize>,
    },
    /// Seeded random family.
    Random {
        #[arg(long, value_enum)]
        kind: RandomFamily,
        /// Number of members.
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Ground size of abstract families.
        #[arg(long, default_value_t = 8)]
        ground: usize,
        /// Grid length for intervals (default 2n).
        #[arg(long)]
        length: Option<usize>,
        /// Grid side for boxes.
        #[arg(long, default_value_t = 8)]
        side: usize,
        /// Force every interval through this cell.
        #[arg(long)]
        common_cell: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum RandomFamily {
    Abstract,
    Intervals,
    Boxes,
}

#[derive(Args)]
struct HomologyArgs {
    #[arg(long)]
    input: PathBuf,
    /// Member indices; all members when omitted, none when empty.
    #[arg(long)]
    subfamily: Option<String>,
    #[arg(long, default_value_t = 1)]
    h: usize,
}

#[derive(Args)]
struct ShatterArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, default_value_t = 0)]
    h: usize,
    #[arg(long)]
    t_max: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    RadonBound,
    Levi,
    HellyGrowth,
    MinimalNp,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    property: Property,
    /// exhaustive:G,M or random:COUNT:SEED.
    #[arg(long, default_value = "exhaustive:3,3")]
    corpus: CorpusSpec,
    /// Write the first counterexample as a set-system file.
    #[arg(long)]
    counterexample: Option<PathBuf>,
    /// minimal-np: system file.
    #[arg(long, requires = "points")]
    input: Option<PathBuf>,
    /// minimal-np: point-set file.
    #[arg(long)]
    points: Option<PathBuf>,
    /// minimal-np: check the binary-word family of this order instead.
    #[arg(long, conflicts_with = "input")]
    k: Option<usize>,
}

#[derive(Args)]
struct ProbeArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    s: usize,
    #[arg(long, default_value_t = 3)]
    k: usize,
    #[arg(long, default_value_t = 100_000)]
    budget: u64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Largest family searched exactly for k-wise cliques.
    #[arg(long, default_value_t = DEFAULT_EXACT_LIMIT)]
    exact_limit: usize,
    /// Also evaluate ch^(mk) <= m and h^(m) <= k for this m.
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, default_value_t = convexlab_core::helly::DEFAULT_COLORFUL_GUARD)]
    guard: usize,
}

#[derive(Args)]
struct PsiArgs {
    #[arg(long)]
    b: u64,
    #[arg(long)]
    r_table: PathBuf,
    #[arg(long)]
    m_table: PathBuf,
    #[arg(long)]
    t: Option<u64>,
    #[arg(long, default_value_t = 2)]
    d: usize,
    /// Compare phi^(h) of this cubical system with Psi on t = 1..=t-max.
    #[arg(long, requires = "t_max")]
    input: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    h: usize,
    #[arg(long)]
    t_max: Option<usize>,
}

enum Failure {
    Lib(Error),
    Io(PathBuf, std::io::Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Lib(Error::Size(_)) => 3,
            _ => 2,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Lib(e) => write!(f, "{e}"),
            Failure::Io(p, e) => write!(f, "{}: {e}", p.display()),
            Failure::Usage(m) => f.write_str(m),
        }
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

/// Whether the checked property held.
#[derive(PartialEq, Eq)]
enum Verdict {
    Holds,
    Violated,
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| Failure::Io(path.to_path_buf(), e))
}

fn write(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|e| Failure::Io(path.to_path_buf(), e))
}

fn with_path<T>(path: &Path, r: convexlab_core::Result<T>) -> CliResult<T> {
    r.map_err(|e| match e {
        Error::Parse { line, message } => {
            Failure::Usage(format!("{}:{line}: {message}", path.display()))
        }
        other => Failure::Lib(other),
    })
}

fn load_system(path: &Path) -> CliResult<SystemFile> {
    with_path(path, parse_system_file(&read(path)?))
}

fn load_cubical(path: &Path) -> CliResult<CubicalSetSystem> {
    match load_system(path)? {
        SystemFile::Cubical(c) => Ok(c),
        SystemFile::Abstract(_) => Err(Failure::Usage(format!(
            "{}: homology needs a convexlab-cubical file",
            path.display()
        ))),
    }
}

fn points_string(points: &PointSet) -> String {
    points
        .elements()
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn ratio_string(r: Ratio<u64>) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn describe(report: &mut Report, system: &SystemFile) {
    match system {
        SystemFile::Abstract(s) => {
            report
                .set("kind", "abstract")
                .set("ground", s.ground_size())
                .set("members", s.len());
        }
        SystemFile::Cubical(c) => {
            report
                .set("kind", "cubical")
                .list("dims", c.dims().iter().copied())
                .set("members", c.len());
        }
    }
}

fn analyze(args: &AnalyzeArgs, report: &mut Report) -> CliResult<Verdict> {
    let file = load_system(&args.input)?;
    describe(report, &file);
    let system = file.set_system();
    let t_max = args.t_max.unwrap_or(system.len().min(6));
    let options = GradedOptions {
        colorful_guard: args.guard,
    };
    for param in &args.params {
        match param.trim() {
            "radon" => {
                let r = radon_number_within(&system, system.full_mask()?)?;
                report
                    .set("radon", r.radon)
                    .set("radon_witness", points_string(&r.witness));
            }
            "helly" => {
                report.set("helly", helly_number(&system)?);
            }
            "colorful-helly" => {
                report.set(
                    "colorful_helly",
                    colorful_helly_number(&system, args.guard)?,
                );
            }
            other => {
                let Some(kind) = other.strip_prefix("graded:") else {
                    return Err(Failure::Usage(format!("unknown parameter `{other}`")));
                };
                let kind: ParameterKind = kind.parse()?;
                let profile = graded(&system, kind, t_max, options)?;
                report.list(
                    &format!("graded_{}", kind.as_str().replace('-', "_")),
                    profile.values().iter().copied(),
                );
            }
        }
    }
    Ok(Verdict::Holds)
}

fn emit_system(out: Option<&Path>, text: &str) -> CliResult<bool> {
    match out {
        Some(p) => {
            write(p, text)?;
            Ok(false)
        }
        None => {
            print!("{text}");
            Ok(true)
        }
    }
}

fn generate(args: &GenerateArgs, report: &mut Report) -> CliResult<(Verdict, bool)> {
    let out = args.out.as_deref();
    let mut verdict = Verdict::Holds;
    let report_to_stderr = match &args.family {
        Family::HellySeq { u } => {
            let system = gen_helly_sequence(u)?;
            let profile = graded(
                &system,
                ParameterKind::Helly,
                u.len(),
                GradedOptions::default(),
            )?;
            let ok = profile.values() == u.as_slice();
            if !ok {
                verdict = Verdict::Violated;
            }
            report
                .set("family", "helly-seq")
                .list("u", u.iter().copied())
                .set("ground", system.ground_size())
                .set("members", system.len())
                .list("graded_helly", profile.values().iter().copied())
                .set("certificate", if ok { "pass" } else { "fail" });
            emit_system(out, &write_set_system(&system))?
        }
        Family::BinaryWords { k, points_out } => {
            let (system, points) = gen_binary_words(*k)?;
            let len = word_length(*k);
            let verdict_text = match verify_minimal_nonpartitionable(&system, &points)? {
                MinimalVerdict::Minimal => "minimal",
                MinimalVerdict::NotNonpartitionable(_) => "not-nonpartitionable",
                MinimalVerdict::NotMinimal(_) => "not-minimal",
            };
            if verdict_text != "minimal" {
                verdict = Verdict::Violated;
            }
            report
                .set("family", "binary-words")
                .set("k", *k)
                .set("word_length", len)
                .set("ground", system.ground_size())
                .set("members", system.len())
                .set("members_stated", len)
                .set("points", points_string(&points))
                .list(
                    "words",
                    points.elements().iter().map(|&w| word_string(w, len)),
                )
                .set("certificate", verdict_text);
            if let Some(p) = points_out {
                write(p, &write_points(&points))?;
            }
            emit_system(out, &write_set_system(&system))?
        }
        Family::Shatter { f, ring_side } => {
            let options = ShatterOptions {
                ring_side: *ring_side,
                ..ShatterOptions::default()
            };
            let family = gen_shatter_family(f, options)?;
            let profile = shatter_profile(&family.system, 0, f.len())?;
            let phi = &profile.values[1..];
            let mut ok = phi == f.as_slice();
            for (idx, &count) in f.iter().enumerate() {
                let members = family.box_members(idx + 1);
                let full = betti(&family.system, members, 0)?;
                ok &= full.reduced[0] == count;
                for sub in members.members().map(|m| members.without(m)) {
                    if !sub.is_empty() {
                        ok &= betti(&family.system, sub, 0)?.reduced[0] == 0;
                    }
                }
            }
            if !ok {
                verdict = Verdict::Violated;
            }
            report
                .set("family", "shatter")
                .list("f", f.iter().copied())
                .list("dims", family.system.dims().iter().copied())
                .set("members", family.system.len())
                .list("phi0", phi.iter().copied())
                .set("certificate", if ok { "pass" } else { "fail" });
            emit_system(out, &SystemFile::Cubical(family.system).write())?
        }
        Family::Random {
            kind,
            n,
            seed,
            ground,
            length,
            side,
            common_cell,
        } => {
            let (name, spec) = match kind {
                RandomFamily::Abstract => (
                    "abstract",
                    RandomKind::Abstract {
                        ground: *ground,
                        members: *n,
                    },
                ),
                RandomFamily::Intervals => (
                    "intervals",
                    RandomKind::Intervals {
                        members: *n,
                        length: length.unwrap_or(2 * n).max(1),
                        common_cell: *common_cell,
                    },
                ),
                RandomFamily::Boxes => (
                    "boxes",
                    RandomKind::Boxes {
                        members: *n,
                        side: *side,
                    },
                ),
            };
            let generated = gen_random(spec, *seed)?;
            let file = match generated {
                GeneratedSystem::Abstract(s) => SystemFile::Abstract(s),
                GeneratedSystem::Cubical(c) => SystemFile::Cubical(c),
            };
            report
                .set("family", "random")
                .set("random_kind", name)
                .set("seed", *seed);
            describe(report, &file);
            emit_system(out, &file.write())?
        }
    };
    Ok((verdict, report_to_stderr))
}

fn parse_subfamily(spec: Option<&str>, n: usize) -> CliResult<Subfamily> {
    let Some(spec) = spec else {
        return Ok(Subfamily::full(n));
    };
    let mut mask = Subfamily::EMPTY;
    for field in spec.split(',').map(str::trim).filter(|f| !f.is_empty()) {
        let i: usize = field
            .parse()
            .map_err(|_| Failure::Usage(format!("subfamily index `{field}` is not a number")))?;
        if i >= n {
            return Err(Failure::Usage(format!(
                "subfamily index {i} out of range (family has {n} members)"
            )));
        }
        mask = mask.with(i);
    }
    Ok(mask)
}

fn homology(args: &HomologyArgs, report: &mut Report) -> CliResult<Verdict> {
    let system = load_cubical(&args.input)?;
    if system.len() > 64 {
        return Err(Error::Size(format!(
            "subfamily masks hold 64 members, family has {}",
            system.len()
        ))
        .into());
    }
    let mask = parse_subfamily(args.subfamily.as_deref(), system.len())?;
    let b = betti(&system, mask, args.h)?;
    report
        .list("subfamily", mask.members())
        .set("h", args.h)
        .set("cells", system.intersection(mask).count())
        .set("empty", b.empty)
        .list("reduced_betti", b.reduced.iter().copied());
    Ok(Verdict::Holds)
}

fn shatter(args: &ShatterArgs, report: &mut Report) -> CliResult<Verdict> {
    let system = load_cubical(&args.input)?;
    let profile = shatter_profile(&system, args.h, args.t_max)?;
    report
        .set("h", args.h)
        .set("t_max", args.t_max)
        .list("phi", profile.values[1..].iter().copied());
    for i in 0..=args.h {
        report.list(
            &format!("phi_degree{i}"),
            profile.per_degree[1..].iter().map(|v| v[i]),
        );
    }
    Ok(Verdict::Holds)
}

fn corpus_report(args: &VerifyArgs, r: VerifyReport, report: &mut Report) -> CliResult<Verdict> {
    report
        .set("property", r.property)
        .set("corpus", args.corpus.to_string())
        .set("systems", r.systems)
        .set("checked", r.checked)
        .set("skipped", r.skipped)
        .set("result", if r.holds() { "pass" } else { "fail" });
    let Some(c) = r.counterexample else {
        return Ok(Verdict::Holds);
    };
    report
        .set("counterexample_index", c.index)
        .set("counterexample_t", c.t)
        .set("counterexample_detail", c.detail.clone());
    if let Some(w) = &c.witness {
        report.set("counterexample_witness", points_string(w));
    }
    if let Some(path) = &args.counterexample {
        let mut text = format!("# {}: {} at t = {}\n", r.property, c.detail, c.t);
        if let Some(w) = &c.witness {
            text.push_str(&format!("# witness {}\n", write_points(w).trim_end()));
        }
        text.push_str(&write_set_system(&c.system));
        write(path, &text)?;
        report.set("counterexample_file", path.display().to_string());
    }
    Ok(Verdict::Violated)
}

fn verify(args: &VerifyArgs, report: &mut Report) -> CliResult<Verdict> {
    match args.property {
        Property::RadonBound => corpus_report(args, verify_radon_bound(&args.corpus)?, report),
        Property::Levi => corpus_report(args, verify_levi(&args.corpus)?, report),
        Property::HellyGrowth => corpus_report(args, verify_helly_growth(&args.corpus)?, report),
        Property::MinimalNp => {
            let (system, points) = match (&args.input, &args.points, args.k) {
                (Some(input), Some(points), None) => {
                    let system = load_system(input)?.set_system();
                    let points = with_path(points, parse_points(&read(points)?))?;
                    (system, points)
                }
                (None, None, Some(k)) => {
                    let (system, points) = gen_binary_words(k)?;
                    report
                        .set("k", k)
                        .set("members", system.len())
                        .set("members_stated", word_length(k));
                    (system, points)
                }
                _ => {
                    return Err(Failure::Usage(
                        "minimal-np needs either --input with --points, or --k".into(),
                    ))
                }
            };
            points.validate(&system)?;
            report
                .set("property", "minimal-np")
                .set("points", points_string(&points));
            let verdict = verify_minimal_nonpartitionable(&system, &points)?;
            Ok(match verdict {
                MinimalVerdict::Minimal => {
                    report.set("result", "pass").set("verdict", "minimal");
                    Verdict::Holds
                }
                MinimalVerdict::NotNonpartitionable(p) => {
                    report
                        .set("result", "fail")
                        .set("verdict", "not-nonpartitionable")
                        .set("block0", points_string(p.block0()))
                        .set("block1", points_string(p.block1()));
                    Verdict::Violated
                }
                MinimalVerdict::NotMinimal(members) => {
                    report
                        .set("result", "fail")
                        .set("verdict", "not-minimal")
                        .list(
                            "redundant",
                            members.iter().map(|&i| system.names()[i].clone()),
                        );
                    Verdict::Violated
                }
            })
        }
    }
}

fn probe(args: &ProbeArgs, report: &mut Report) -> CliResult<Verdict> {
    let system = load_system(&args.input)?.set_system();
    let sampler = Sampler {
        budget: args.budget,
        seed: args.seed,
    };
    let p = probe_fractional_helly(&system, args.s, args.k, sampler, args.exact_limit)?;
    report.set("n", p.n).set("s", p.s);
    match p.alpha {
        TupleFraction::Exact(r) => {
            report
                .set("alpha", ratio_string(r))
                .set("alpha_exact", true);
        }
        TupleFraction::Sampled { hits, samples } => {
            report
                .set("alpha", format!("{hits}/{samples}"))
                .set("alpha_exact", false);
        }
    }
    report
        .set("alpha_value", format!("{:.6}", p.alpha.as_f64()))
        .set("beta_emp", ratio_string(p.beta_emp))
        .set("deepest_point", p.deepest_point)
        .set("k", p.k)
        .set("clique_fraction", ratio_string(p.clique_fraction))
        .set("clique_exact", p.clique_exact);
    if let Some(m) = args.m {
        let c = check_colorful_clique_hypotheses(&system, args.k, m, args.guard)?;
        report
            .set("m", m)
            .set("colorful_helly_mk", c.colorful_helly)
            .set("helly_m", c.helly)
            .set("hypotheses_hold", c.holds);
    }
    Ok(Verdict::Holds)
}

fn psi(args: &PsiArgs, report: &mut Report) -> CliResult<Verdict> {
    let r = with_path(&args.r_table, parse_table("r", &read(&args.r_table)?))?;
    let m = with_path(&args.m_table, parse_table("m", &read(&args.m_table)?))?;
    let tables = PsiTables::new(args.d, r, m);
    report.set("d", args.d).set("b", args.b);
    if let Some(t) = args.t {
        let value = psi_eval(&tables, args.b, t)?;
        report.set("t", t).set("psi", value);
        if let Some(s) = s_inverse(&tables, t)? {
            report.set("s_inverse", s);
        }
    }
    let Some(input) = &args.input else {
        return Ok(Verdict::Holds);
    };
    let system = load_cubical(input)?;
    let t_max = args.t_max.expect("clap enforces --t-max with --input");
    let check = check_phi_below_psi(&system, args.h, &tables, args.b, t_max)?;
    report
        .set("h", args.h)
        .list("phi", check.rows.iter().map(|r| r.1))
        .list("psi_profile", check.rows.iter().map(|r| r.2))
        .set("result", if check.holds() { "pass" } else { "fail" });
    if let Some(t) = check.first_violation {
        report.set("first_violation", t);
        return Ok(Verdict::Violated);
    }
    Ok(Verdict::Holds)
}

fn run(cli: &Cli) -> CliResult<Verdict> {
    let mut report = Report::new();
    let (verdict, to_stderr) = match &cli.command {
        Command::Analyze(a) => (analyze(a, &mut report)?, false),
        Command::Generate(g) => generate(g, &mut report)?,
        Command::Homology(h) => (homology(h, &mut report)?, false),
        Command::Shatter(s) => (shatter(s, &mut report)?, false),
        Command::Verify(v) => (verify(v, &mut report)?, false),
        Command::ProbeFh(p) => (probe(p, &mut report)?, false),
        Command::Psi(p) => (psi(p, &mut report)?, false),
    };
    report
        .emit(cli.json, to_stderr)
        .map_err(|e| Failure::Io(PathBuf::from("<stdout>"), e))?;
    Ok(verdict)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Verdict::Holds) => ExitCode::SUCCESS,
        Ok(Verdict::Violated) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
