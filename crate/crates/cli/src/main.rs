//! `cwcode`: construct, verify, search, bound and catalog constant-weight codes.
//!
//! Exit codes: 0 success, 1 verification failure, 2 infeasible parameters,
//! 3 inconclusive search, 4 usage error. Every artifact is written atomically
//! together with a `<path>.manifest` of `key=value` lines.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use cwcode::anticodes::{anticode_s, AnticodeParams};
use cwcode::bounds::{feasibility_report, q0_bounds};
use cwcode::codefile::{read_code_file, write_code};
use cwcode::designs::gs_construct_2_3;
use cwcode::families::{
    f5_construct, f5_construct_w3, mds_cw_construct, mds_cw_union, moa_cw_construct, moa_cw_from_oa, moa_reduce,
    FamilyCode, ReduceMode,
};
use cwcode::oracle::{max_anticode_search, max_code_search, perfect_code_search, SearchBudget, SearchStatus};
use cwcode::ortharray::OrthogonalArray;
use cwcode::space::space_cardinality;
use cwcode::verifier::{certify, classify_family, diameter_perfect_check, perfect_check, support_regularity};
use cwcode::{Code, Error, VerificationReport};

#[derive(Parser)]
#[command(name = "cwcode", version, about = "Diameter-perfect constant-weight code workbench")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a code from one of the explicit families and certify it.
    Construct(ConstructArgs),
    /// Run checks against a code file.
    Verify(VerifyArgs),
    /// Exact branch-and-bound search on a small Johnson-type space.
    Search(SearchArgs),
    /// Report the necessary conditions that apply to (n,d,w)_q.
    Bounds(BoundsArgs),
    /// Sweep a parameter grid: best construction, oracle value, verdicts.
    Catalog(CatalogArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum ConstructFamily {
    /// Generalized Steiner system GS(2,3,q+1,q).
    Gs23,
    /// MDS-CW code from a generalized Reed-Solomon code.
    MdsCw,
    /// Union of the MDS-CW codes over q and q2 symbols.
    Union,
    /// One codeword per support.
    F5,
    /// One codeword per support, weight 3, via one-factorizations.
    F5w3,
    /// Modified orthogonal array.
    Moa,
    /// Puncture of a modified orthogonal array code.
    Puncture,
    /// Shorten of a modified orthogonal array code.
    Shorten,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long, value_enum)]
    family: ConstructFamily,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    w: Option<usize>,
    #[arg(long)]
    q: Option<u64>,
    /// Second alphabet size for `union`.
    #[arg(long)]
    q2: Option<u64>,
    /// OA strength for `moa`, `puncture`, `shorten`.
    #[arg(long)]
    t: Option<usize>,
    /// Number of zeroed columns per block for `moa`, `puncture`, `shorten`.
    #[arg(long)]
    l: Option<usize>,
    /// Index-one OA in the code file format to use instead of Reed-Solomon.
    #[arg(long)]
    oa: Option<PathBuf>,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    code: PathBuf,
    /// Check |C|·|A| equals the space size and d(C) = D(A)+1.
    #[arg(long, requires = "anticode")]
    diameter_perfect: bool,
    /// Anticode shorthand: s:n,w,t | m:n,w,delta | ball:n,w,e (alphabet from the code).
    #[arg(long, requires = "diameter_perfect")]
    anticode: Option<String>,
    /// Check the code is e-perfect.
    #[arg(long, value_name = "E")]
    perfect: Option<usize>,
    /// Check the code is a generalized Steiner system of strength T.
    #[arg(long, value_name = "T")]
    gs: Option<usize>,
    /// Check every support carries exactly COUNT codewords.
    #[arg(long, value_name = "COUNT")]
    per_support: Option<usize>,
    /// With --per-support, also check the supports carry OAs of this strength.
    #[arg(long, requires = "per_support")]
    oa_strength: Option<usize>,
    /// Check the minimum distance is at least D.
    #[arg(long, value_name = "D")]
    min_distance: Option<usize>,
    /// Classify the measured parameters into the diameter-perfect families.
    #[arg(long)]
    classify: bool,
    /// Also write the report (and its manifest) to this path.
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args)]
#[command(group(ArgGroup::new("kind").required(true).args(["max_code", "max_anticode", "perfect"])))]
struct SearchArgs {
    /// Largest code with minimum distance --d.
    #[arg(long, requires = "d")]
    max_code: bool,
    /// Largest anticode with diameter --diameter.
    #[arg(long, requires = "diameter")]
    max_anticode: bool,
    /// An e-perfect code (exact cover by radius-e balls).
    #[arg(long)]
    perfect: bool,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    w: usize,
    #[arg(long)]
    q: u64,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    diameter: Option<usize>,
    #[arg(long, default_value_t = 1)]
    e: usize,
    #[arg(long, default_value_t = SearchBudget::default().max_nodes)]
    max_nodes: u64,
    /// Wall-clock limit in seconds; results under a limit may be inconclusive.
    #[arg(long)]
    time_limit: Option<f64>,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Witness path; defaults to `<kind>-<n>-<d>-<w>-<q>.cw`.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, required_unless_present = "q0")]
    d: Option<usize>,
    #[arg(long)]
    w: usize,
    #[arg(long, required_unless_present = "q0")]
    q: Option<u64>,
    /// Report bounds on the smallest alphabet for one codeword per support.
    #[arg(long)]
    q0: bool,
}

#[derive(Args)]
struct CatalogArgs {
    #[arg(long, default_value_t = 6)]
    n_max: usize,
    #[arg(long, value_delimiter = ',', default_value = "3,4,5")]
    q: Vec<u64>,
    /// Run the oracle only on spaces with at most this many words.
    #[arg(long, default_value_t = 300)]
    oracle_max_space: u64,
    #[arg(long, default_value_t = 2_000_000)]
    oracle_nodes: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure { code: 4, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::NotPrimePower(_) | Error::ParamsInfeasible(_) | Error::ParamsOutOfRange(_) => 2,
            Error::Parse { .. } | Error::Io(_) => 4,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::usage(e.to_string())
    }
}

type Outcome = Result<u8, Failure>;

fn need<T>(value: Option<T>, flag: &str, family: &str) -> Result<T, Failure> {
    value.ok_or_else(|| Failure::usage(format!("--{flag} is required for {family}")))
}

fn write_atomic(path: &Path, contents: &str) -> Result<(), Failure> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.persist(path).map_err(|e| Failure::usage(e.to_string()))?;
    Ok(())
}

fn manifest_path(path: &Path) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".manifest");
    PathBuf::from(s)
}

fn manifest_header(verb: &str) -> String {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    format!("tool=cwcode\nversion={}\nverb={verb}\nargv={}\n", env!("CARGO_PKG_VERSION"), argv.join(" "))
}

/// Writes an artifact and its manifest.
fn emit(path: &Path, contents: &str, manifest: &str) -> Result<(), Failure> {
    write_atomic(path, contents)?;
    write_atomic(&manifest_path(path), manifest)
}

fn certification_lines(report: &VerificationReport) -> String {
    let mut s = format!("certified={}\n", if report.passed() { "pass" } else { "fail" });
    if let Some(p) = report.check("product") {
        let _ = writeln!(s, "certified_product={}", p.measured);
    }
    s
}

fn moa_base(a: &ConstructArgs, name: &str) -> Result<FamilyCode, Failure> {
    let l = need(a.l, "l", name)?;
    match &a.oa {
        Some(path) => {
            let t = need(a.t, "t", name)?;
            let code = read_code_file(path)?;
            let rows = code.words().iter().map(|w| w.symbols().to_vec()).collect();
            let oa = OrthogonalArray::from_rows(rows, code.q(), t)?;
            Ok(moa_cw_from_oa(&oa, l)?)
        }
        None => Ok(moa_cw_construct(need(a.n, "n", name)?, need(a.t, "t", name)?, l, need(a.q, "q", name)?)?),
    }
}

fn construct(a: &ConstructArgs) -> Outcome {
    let (code, body, report): (Code, String, VerificationReport) = match a.family {
        ConstructFamily::Gs23 => {
            let q = need(a.q, "q", "gs23")?;
            let g = gs_construct_2_3(q)?;
            let mut report = g.verify();
            let anticode = AnticodeParams::s(q as usize + 1, 3, 2, q);
            report.extend(diameter_perfect_check(g.code(), &anticode_s(q as usize + 1, 3, 2, q)?)?);
            let body = format!(
                "family=gen-steiner\nn={}\nd=3\nw=3\nq={q}\nt=2\nsize={}\ndiameter=2\nanticode={anticode}\nclaim=gs-2-3-from-mds-min-weight-codewords\n",
                q + 1,
                g.code().len()
            );
            (g.into_code(), body, report)
        }
        family => {
            let fc = match family {
                ConstructFamily::MdsCw => {
                    mds_cw_construct(need(a.n, "n", "mds-cw")?, need(a.w, "w", "mds-cw")?, need(a.q, "q", "mds-cw")?)?
                }
                ConstructFamily::Union => {
                    let (n, w) = (need(a.n, "n", "union")?, need(a.w, "w", "union")?);
                    let c1 = mds_cw_construct(n, w, need(a.q, "q", "union")?)?;
                    let c2 = mds_cw_construct(n, w, need(a.q2, "q2", "union")?)?;
                    mds_cw_union(&c1, &c2)?
                }
                ConstructFamily::F5 => f5_construct(need(a.n, "n", "f5")?, need(a.w, "w", "f5")?)?,
                ConstructFamily::F5w3 => f5_construct_w3(need(a.n, "n", "f5w3")?)?,
                ConstructFamily::Moa => moa_base(a, "moa")?,
                ConstructFamily::Puncture => moa_reduce(&moa_base(a, "puncture")?, ReduceMode::Puncture)?,
                ConstructFamily::Shorten => moa_reduce(&moa_base(a, "shorten")?, ReduceMode::Shorten)?,
                ConstructFamily::Gs23 => unreachable!(),
            };
            let report = certify(&fc)?;
            let body = fc.manifest_text();
            (fc.into_code(), body, report)
        }
    };
    let manifest = manifest_header("construct") + &body + &certification_lines(&report);
    emit(&a.out, &write_code(&code), &manifest)?;
    print!("{report}");
    println!("wrote {} codewords to {}", code.len(), a.out.display());
    Ok(if report.passed() { 0 } else { 1 })
}

fn parse_anticode(spec: &str, q: u64) -> Result<AnticodeParams, Failure> {
    let bad = || Failure::usage(format!("anticode `{spec}` is not s:n,w,t | m:n,w,delta | ball:n,w,e"));
    let (kind, rest) = spec.split_once(':').ok_or_else(bad)?;
    let nums: Vec<usize> = rest.split(',').map(|x| x.trim().parse()).collect::<Result<_, _>>().map_err(|_| bad())?;
    let [n, w, k] = nums[..] else { return Err(bad()) };
    match kind {
        "s" => Ok(AnticodeParams::s(n, w, k, q)),
        "m" => Ok(AnticodeParams::m(n, w, k, q)),
        "ball" => Ok(AnticodeParams::ball(n, w, k, q)),
        _ => Err(bad()),
    }
}

fn verify(a: &VerifyArgs) -> Outcome {
    let selected = a.diameter_perfect
        || a.perfect.is_some()
        || a.gs.is_some()
        || a.per_support.is_some()
        || a.min_distance.is_some()
        || a.classify;
    if !selected {
        return Err(Failure::usage("select at least one check"));
    }
    let code = read_code_file(&a.code)?;
    let mut report = VerificationReport::new();
    let mut notes = String::new();
    if let Some(spec) = &a.anticode {
        let params = parse_anticode(spec, code.q())?;
        let _ = writeln!(notes, "anticode={params}");
        report.extend(diameter_perfect_check(&code, &params.build()?)?);
    }
    if let Some(e) = a.perfect {
        report.extend(perfect_check(&code, e)?);
    }
    if let Some(t) = a.gs {
        report.extend(cwcode::designs::gs_verify(&code, t));
    }
    if let Some(count) = a.per_support {
        report.extend(support_regularity(&code, count, a.oa_strength));
    }
    if let Some(d) = a.min_distance {
        let measured = code.min_distance()?;
        report.push("min-distance", "code-min-distance", format!(">={d}"), measured, measured >= d);
    }
    if a.classify {
        let weight = code.weight().ok_or_else(|| Failure::usage("classification needs a constant-weight code"))?;
        let d = code.min_distance()?;
        let shape = format!("({},{d},{weight})_{}", code.n(), code.q());
        match classify_family(code.n(), d, weight, code.q(), code.len() as u128) {
            Ok(found) => {
                let labels: Vec<String> = found
                    .iter()
                    .map(|c| match c.anticode {
                        Some(a) => format!("{}[{a}]", c.family),
                        None => c.family.to_string(),
                    })
                    .collect();
                report.push("classification", "family-classification", shape, labels.join(","), true);
            }
            Err(e) => report.push("classification", "family-classification", shape, e.to_string(), false),
        }
    }
    print!("{report}");
    if let Some(path) = &a.report {
        let manifest = format!(
            "{}code={}\n{notes}checks={}\n{}",
            manifest_header("verify"),
            a.code.display(),
            report.checks().len(),
            certification_lines(&report)
        );
        emit(path, &report.to_string(), &manifest)?;
    }
    Ok(if report.passed() { 0 } else { 1 })
}

fn search(a: &SearchArgs) -> Outcome {
    let mut budget = SearchBudget::nodes(a.max_nodes).with_workers(a.workers);
    if let Some(secs) = a.time_limit {
        if !(secs.is_finite() && secs > 0.0) {
            return Err(Failure::usage("--time-limit must be a positive number of seconds"));
        }
        budget = budget.with_time_limit(Duration::from_secs_f64(secs));
    }
    let (kind, d, result) = if a.max_code {
        let d = a.d.expect("required by clap");
        ("max-code", d, max_code_search(a.n, d, a.w, a.q, &budget)?)
    } else if a.max_anticode {
        let diameter = a.diameter.expect("required by clap");
        ("max-anticode", diameter, max_anticode_search(a.n, diameter, a.w, a.q, &budget)?)
    } else {
        ("perfect", 2 * a.e + 1, perfect_code_search(a.n, a.w, a.q, a.e, &budget)?)
    };
    let out = a.out.clone().unwrap_or_else(|| PathBuf::from(format!("{kind}-{}-{d}-{}-{}.cw", a.n, a.w, a.q)));
    let mut manifest = manifest_header("search");
    let _ = write!(manifest, "kind={kind}\nn={}\nd={d}\nw={}\nq={}\n", a.n, a.w, a.q);
    if a.perfect {
        let _ = writeln!(manifest, "e={}", a.e);
    }
    manifest.push_str(&result.manifest_text());
    match &result.witness {
        Some(code) => {
            let _ = writeln!(manifest, "witness={}", out.display());
            emit(&out, &write_code(code), &manifest)?;
        }
        None => {
            manifest.push_str("witness=none\n");
            write_atomic(&manifest_path(&out), &manifest)?;
        }
    }
    println!("{}", result.value);
    eprintln!("status={} nodes={} note={}", result.status, result.nodes, result.note);
    Ok(match result.status {
        SearchStatus::Exact => 0,
        SearchStatus::Inconclusive => 3,
    })
}

fn bounds(a: &BoundsArgs) -> Outcome {
    if a.q0 {
        let b = q0_bounds(a.w, a.n).ok_or_else(|| Failure { code: 2, message: "q0 needs 1 <= w <= n-1".into() })?;
        println!("{b}");
        return Ok(0);
    }
    let (d, q) = (a.d.expect("required by clap"), a.q.expect("required by clap"));
    let report = feasibility_report(a.n, d, a.w, q);
    print!("{report}");
    let generic = report.violations().any(|v| v.family.is_none());
    let excluded = !report.applicable.is_empty() && report.feasible_families().is_empty();
    Ok(if generic || excluded { 2 } else { 0 })
}

/// Largest explicit construction with exactly these parameters.
fn best_construction(n: usize, d: usize, w: usize, q: u64) -> Option<(String, usize)> {
    let mut found: Vec<(String, usize)> = Vec::new();
    let mut take = |fc: Option<FamilyCode>| {
        if let Some(fc) = fc {
            let k = fc.claimed();
            if (k.n, k.d, k.w) == (n, d, w) && fc.code().q() <= q {
                found.push((fc.family().to_string(), fc.code().len()));
            }
        }
    };
    if d == w && n <= q as usize + 1 {
        take(mds_cw_construct(n, w, q).ok());
    }
    if d == w + 1 && w < n {
        take(if w == 3 { f5_construct_w3(n).ok() } else { f5_construct(n, w).ok() });
    }
    if d < w && w < n && q >= 3 {
        take(moa_cw_construct(n + 1, w + 2 - d, n - w, q - 1).ok());
    }
    if (n, d, w) == (q as usize + 1, 3, 3) {
        if let Ok(g) = gs_construct_2_3(q) {
            found.push(("gen-steiner".to_string(), g.code().len()));
        }
    }
    found.into_iter().max_by_key(|(_, size)| *size)
}

fn catalog(a: &CatalogArgs) -> Outcome {
    let mut table = String::from("n\td\tw\tq\tconstruction\tsize\toracle\tfeasible\tviolated\n");
    let budget = SearchBudget::nodes(a.oracle_nodes);
    for &q in &a.q {
        if q < 2 {
            return Err(Failure::usage("alphabet sizes must be at least 2"));
        }
        for n in 2..=a.n_max {
            for w in 2..=n {
                for d in 2..=w + 1 {
                    let (label, size) = best_construction(n, d, w, q).unwrap_or(("-".into(), 0));
                    let oracle = if space_cardinality(n, w, q) <= a.oracle_max_space.into() {
                        let r = max_code_search(n, d, w, q, &budget)?;
                        match r.status {
                            SearchStatus::Exact => r.value.to_string(),
                            SearchStatus::Inconclusive => format!(">={}", r.value),
                        }
                    } else {
                        "-".to_string()
                    };
                    let report = feasibility_report(n, d, w, q);
                    let feasible: Vec<String> = report.feasible_families().iter().map(|f| f.to_string()).collect();
                    let mut violated: Vec<&str> = report.violations().map(|v| v.claim).collect();
                    violated.dedup();
                    let join = |v: Vec<String>| if v.is_empty() { "-".to_string() } else { v.join(",") };
                    let size = if size == 0 { "-".to_string() } else { size.to_string() };
                    let _ = writeln!(
                        table,
                        "{n}\t{d}\t{w}\t{q}\t{label}\t{size}\t{oracle}\t{}\t{}",
                        join(feasible),
                        join(violated.iter().map(|s| s.to_string()).collect())
                    );
                }
            }
        }
    }
    match &a.out {
        Some(path) => {
            let rows = table.lines().count() - 1;
            emit(path, &table, &format!("{}rows={rows}\n", manifest_header("catalog")))?;
            println!("wrote {rows} rows to {}", path.display());
        }
        None => print!("{table}"),
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 4 } else { 0 });
        }
    };
    let outcome = match &cli.command {
        Command::Construct(a) => construct(a),
        Command::Verify(a) => verify(a),
        Command::Search(a) => search(a),
        Command::Bounds(a) => bounds(a),
        Command::Catalog(a) => catalog(a),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("cwcode: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
