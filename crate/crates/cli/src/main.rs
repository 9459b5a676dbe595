//! `cremona`: batch computations with Cremona transformations, Weyl orbits
//! and fat-point linear systems.
//!
//! Exit codes: 0 success, 1 domain error, 2 parse or usage error,
//! 3 orbit budget exceeded, 4 the Cremona image is contracted.

mod format;

use std::fmt::Write as _;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use cremona::linsys::{
    base_locus_report, chi, h1_correction, k_line, wdim, wdim_lines_only, FatPointDivisor,
};
use cremona::weyl::{
    classify_surface, cremona5, divisor_orbit, line_orbit, orbit_with, weyl_plane_pairing,
    Centers, CurveRecord, DivisorRecord, OrbitOptions, SurfaceRecord, WeylRecord,
    DEFAULT_ORBIT_BUDGET,
};
use cremona::{ChowClass, Error, RingId};
use format::{cache_header, cache_lines, parse_record, parse_ring, to_json, Record};
use serde_json::{json, Value};

const BUDGET_VAR: &str = "CREMONA_ORBIT_BUDGET";

#[derive(Parser)]
#[command(name = "cremona", version, about = "Cremona transformations, Weyl orbits and fat-point linear systems")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for orbit expansion; output does not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Divisor,
    Curve,
    Surface,
}

#[derive(Subcommand)]
enum Command {
    /// Expand the Weyl orbit of a seed record.
    Orbit {
        #[arg(long, value_enum)]
        kind: Kind,
        /// Seed record; defaults to the hyperplane through 1,2,3,4, the
        /// line L_12 or the plane through 1,2,3.
        #[arg(long)]
        seed: Option<PathBuf>,
        #[arg(long, default_value_t = 8)]
        s: usize,
        /// Write the sorted orbit cache here.
        #[arg(long)]
        cache: Option<PathBuf>,
        /// Print the member count of every type.
        #[arg(long)]
        census: bool,
    },
    /// Apply the Cremona transformation at five points, or the standard
    /// involution to a Chow class.
    Cremona {
        #[arg(long = "in")]
        input: PathBuf,
        /// Five distinct 1-based points, e.g. 1,2,3,4,5.
        #[arg(long, value_delimiter = ',')]
        centers: Option<Vec<u8>>,
        /// Number of points for triangular surface input.
        #[arg(long, default_value_t = 8)]
        s: usize,
    },
    /// Intersection number of two Weyl planes, or of two surface classes in x4.
    Pair {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[arg(long, default_value_t = 8)]
        s: usize,
    },
    /// Product of two Chow classes.
    Mul {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        /// Print the degree of the product (it must be a 0-cycle).
        #[arg(long)]
        degree: bool,
    },
    /// Expected dimension and base-locus report of a fat-point divisor.
    Report {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Name the type of a record.
    Classify {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 8)]
        s: usize,
    },
}

#[derive(Debug)]
enum Failure {
    Domain(String),
    Usage(String),
    Budget(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Domain(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Budget(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Domain(m) | Failure::Usage(m) | Failure::Budget(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::OrbitBudgetExceeded(_) => Failure::Budget(e.to_string()),
            Error::UnknownBasis { .. }
            | Error::UnknownSymbol(_)
            | Error::BadCenters(_)
            | Error::InvalidRecord(_)
            | Error::PointCountMismatch(..) => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

/// Text printed on success, and whether the result is a contracted image.
struct Output {
    text: String,
    contracted: bool,
}

impl Output {
    fn plain(text: String) -> Self {
        Output { text, contracted: false }
    }
}

type Outcome = Result<Output, Failure>;

fn read_input(path: &Path) -> Result<String, Failure> {
    let mut text = String::new();
    let res = if path == Path::new("-") {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Ok(text)
}

fn load(path: &Path, s: usize) -> Result<Record, Failure> {
    let text = read_input(path)?;
    parse_record(&text, s).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn orbit_options(threads: Option<usize>) -> Result<OrbitOptions, Failure> {
    let budget = match std::env::var(BUDGET_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{BUDGET_VAR} must be a positive integer, got `{v}`")))?,
        Err(_) => DEFAULT_ORBIT_BUDGET,
    };
    Ok(OrbitOptions { budget, threads })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            println!("{}", out.text);
            if out.contracted {
                eprintln!("cremona: the image is contracted");
                ExitCode::from(4)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(f) => {
            eprintln!("cremona: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Orbit { kind, seed, s, cache, census } => {
            let opts = orbit_options(cli.threads)?;
            cmd_orbit(*kind, seed.as_deref(), *s, cache.as_deref(), *census, &opts, cli.json)
        }
        Command::Cremona { input, centers, s } => cmd_cremona(&load(input, *s)?, centers.as_deref()),
        Command::Pair { a, b, s } => cmd_pair(&load(a, *s)?, &load(b, *s)?),
        Command::Mul { ring, a, b, degree } => {
            let ring = parse_ring(ring).map_err(Failure::Usage)?;
            cmd_mul(ring, &load(a, 8)?, &load(b, 8)?, *degree, cli.json)
        }
        Command::Report { input } => cmd_report(&load(input, 8)?, cli.json),
        Command::Classify { input, s } => cmd_classify(&load(input, *s)?, cli.json),
    }
}

fn default_seed(kind: Kind, s: usize) -> Result<Record, Error> {
    Ok(match kind {
        Kind::Divisor => Record::Divisor { s, d: 1, m: DivisorRecord::hyperplane(s, &[1, 2, 3, 4])?.m().to_vec() },
        Kind::Curve => Record::Curve(CurveRecord::line(s, 1, 2)?),
        Kind::Surface => Record::Surface(SurfaceRecord::plane(s, [1, 2, 3])?),
    })
}

fn cmd_orbit(
    kind: Kind,
    seed: Option<&Path>,
    s: usize,
    cache: Option<&Path>,
    census: bool,
    opts: &OrbitOptions,
    json: bool,
) -> Outcome {
    if !(6..=8).contains(&s) {
        return Err(Failure::Usage(format!("--s must be 6, 7 or 8, got {s}")));
    }
    let record = match seed {
        Some(p) => load(p, s)?,
        None => default_seed(kind, s)?,
    };
    let summary = match (kind, &record) {
        (Kind::Divisor, r @ Record::Divisor { .. }) => {
            summarize(&r.divisor_record().map_err(Failure::Usage)?, s, opts, |r| Record::Divisor {
                s: r.points(),
                d: r.d,
                m: r.m().to_vec(),
            })?
        }
        (Kind::Curve, Record::Curve(c)) => summarize(c, s, opts, Record::Curve)?,
        (Kind::Surface, Record::Surface(t)) => summarize(t, s, opts, Record::Surface)?,
        (_, other) => {
            return Err(Failure::Usage(format!("seed is a {} record, not a {}", other.kind(), kind_name(kind))))
        }
    };
    if let Some(path) = cache {
        let mut body = cache_header(kind_name(kind), s, summary.total);
        for line in &summary.cache {
            body.push('\n');
            body.push_str(line);
        }
        body.push('\n');
        std::fs::write(path, body).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    }
    let text = if json {
        let census_json: Vec<Value> = summary.census.iter().map(|(t, n)| json!([t, n])).collect();
        json!({
            "kind": kind_name(kind),
            "s": s,
            "members": summary.total,
            "contracted": summary.contracted,
            "census": census_json,
        })
        .to_string()
    } else if census {
        let parts: Vec<String> = summary.census.iter().map(|(t, n)| format!("{t}:{n}")).collect();
        format!("{}; total {}", parts.join(" "), summary.total)
    } else {
        format!("total {} contracted {}", summary.total, summary.contracted)
    };
    Ok(Output::plain(text))
}

fn kind_name(kind: Kind) -> &'static str {
    match kind {
        Kind::Divisor => "divisor",
        Kind::Curve => "curve",
        Kind::Surface => "surface",
    }
}

struct Summary {
    total: usize,
    contracted: usize,
    /// Type tags with labeled counts, in order of canonical record.
    census: Vec<(String, usize)>,
    cache: Vec<String>,
}

fn summarize<R: WeylRecord>(seed: &R, s: usize, opts: &OrbitOptions, wrap: fn(R) -> Record) -> Result<Summary, Failure> {
    if seed.points() != s {
        return Err(Failure::Usage(format!("seed has {} points but --s is {s}", seed.points())));
    }
    let o = orbit_with(seed, opts)?;
    let types = o.types();
    let mut census: Vec<(String, usize)> = Vec::new();
    for (canon, n) in &types {
        let tag = canon.family_tag();
        match census.iter_mut().find(|(t, _)| *t == tag) {
            Some((_, total)) => *total += n,
            None => census.push((tag, *n)),
        }
    }
    let cache = cache_lines(types.iter().map(|(c, n)| (c.clone(), *n)), wrap);
    Ok(Summary { total: o.len(), contracted: o.contracted.len(), census, cache })
}

fn cremona_chow(c: &ChowClass) -> Result<ChowClass, Error> {
    match c.ring() {
        RingId::X3 => cremona::p3::cremona(c),
        RingId::X4 => cremona::p4::cremona(c),
    }
}

fn cmd_cremona(record: &Record, centers: Option<&[u8]>) -> Outcome {
    if let Record::Chow(c) = record {
        if centers.is_some() {
            return Err(Failure::Usage("--centers does not apply to Chow classes".into()));
        }
        return Ok(Output::plain(to_json(&Record::Chow(cremona_chow(c)?))));
    }
    let centers = centers.ok_or_else(|| Failure::Usage("--centers is required for records".into()))?;
    let c = Centers::new(centers)?;
    let (image, contracted) = match record {
        Record::Divisor { .. } => {
            let r = cremona5(&record.divisor_record().map_err(Failure::Usage)?, &c)?;
            (Record::Divisor { s: r.points(), d: r.d, m: r.m().to_vec() }, r.is_contracted())
        }
        Record::Curve(r) => {
            let r = cremona5(r, &c)?;
            (Record::Curve(r), r.is_contracted())
        }
        Record::Surface(r) => {
            let r = cremona5(r, &c)?;
            (Record::Surface(r), r.is_contracted())
        }
        Record::Chow(_) => unreachable!("handled above"),
    };
    Ok(Output { text: to_json(&image), contracted })
}

fn cmd_pair(a: &Record, b: &Record) -> Outcome {
    let v = match (a, b) {
        (Record::Chow(x), Record::Chow(y)) => {
            if x.ring() != RingId::X4 || y.ring() != RingId::X4 {
                return Err(Failure::Usage("Chow pairing needs two x4 classes".into()));
            }
            cremona::p4::pairing(x, y)?
        }
        _ => weyl_plane_pairing(&a.surface().map_err(Failure::Usage)?, &b.surface().map_err(Failure::Usage)?)?,
    };
    Ok(Output::plain(v.to_string()))
}

fn cmd_mul(ring: RingId, a: &Record, b: &Record, degree: bool, json: bool) -> Outcome {
    let x = a.chow().map_err(Failure::Usage)?;
    let y = b.chow().map_err(Failure::Usage)?;
    for c in [&x, &y] {
        if c.ring() != ring {
            return Err(Failure::Usage(format!("class {c} lives in {}, not {ring}", c.ring())));
        }
    }
    let product = x.mul(&y)?;
    let text = if degree {
        let d = product.degree()?;
        if json {
            json!({ "degree": d }).to_string()
        } else {
            d.to_string()
        }
    } else {
        to_json(&Record::Chow(product))
    };
    Ok(Output::plain(text))
}

fn cmd_report(record: &Record, json: bool) -> Outcome {
    let d = record.fat_point_divisor().map_err(Failure::Usage)?;
    if d.points() > 8 {
        return Ok(Output::plain(report_many_points(&d, json)));
    }
    let w = wdim(&d)?;
    let r = base_locus_report(&d)?;
    let h1 = h1_correction(&d);
    if json {
        let lines: serde_json::Map<String, Value> =
            r.lines.iter().map(|((i, j), k)| (format!("L_{i}{j}"), json!(k))).collect();
        let quartics: serde_json::Map<String, Value> =
            r.quartics.iter().map(|(q, k)| (format!("Q_{q}"), json!(k))).collect();
        let planes: serde_json::Map<String, Value> =
            r.planes.iter().map(|(t, k)| (t.to_string(), json!(k))).collect();
        let divisors: serde_json::Map<String, Value> = r
            .divisors
            .iter()
            .map(|(w, k)| (FatPointDivisor::from(w).to_string(), json!(k)))
            .collect();
        let conflicts: Vec<Value> = r
            .pairwise_conflicts
            .iter()
            .map(|(a, b, v)| json!([a.to_string(), b.to_string(), v]))
            .collect();
        let violations: Vec<Value> =
            r.line_violations.iter().map(|(c, k)| json!([c.to_string(), k])).collect();
        let v = json!({
            "divisor": d.to_string(),
            "chi": chi(&d),
            "wdim": w,
            "h1corr": h1,
            "lines": lines,
            "quartics": quartics,
            "planes": planes,
            "divisors": divisors,
            "conflicts": conflicts,
            "line_violations": violations,
            "empties_hint": r.empties_hint,
        });
        return Ok(Output::plain(v.to_string()));
    }
    let mut out = format!("chi={} wdim={w}\nh1corr={h1}", chi(&d));
    let table = |out: &mut String, name: &str, rows: Vec<(String, i64)>| {
        if !rows.is_empty() {
            let cells: Vec<String> = rows.iter().map(|(c, k)| format!("{c}:{k}")).collect();
            let _ = write!(out, "\nk {name}: {}", cells.join(" "));
        }
    };
    table(&mut out, "lines", r.lines.iter().map(|((i, j), k)| (format!("L_{i}{j}"), *k)).collect());
    table(&mut out, "quartics", r.quartics.iter().map(|(q, k)| (format!("Q_{q}"), *k)).collect());
    table(&mut out, "planes", r.planes.iter().map(|(t, k)| (t.to_string(), *k)).collect());
    table(
        &mut out,
        "divisors",
        r.divisors.iter().map(|(w, k)| (FatPointDivisor::from(w).to_string(), *k)).collect(),
    );
    for (c, k) in &r.line_violations {
        let _ = write!(out, "\nline violation: {c} has D.C = {}", -k);
    }
    for (a, b, v) in &r.pairwise_conflicts {
        let _ = write!(out, "\nconflict: {a}.{b} = {v}");
    }
    if r.empties_hint {
        out.push_str("\nthe system is empty");
    }
    Ok(Output::plain(out))
}

/// Beyond eight points only lines and seven-point quartics are counted.
fn report_many_points(d: &FatPointDivisor, json: bool) -> String {
    let s = d.points();
    let mut lines = Vec::new();
    for i in 1..=s {
        for j in i + 1..=s {
            let k = k_line(d, i, j);
            if k > 0 {
                lines.push((format!("L_{i},{j}"), k));
            }
        }
    }
    let (c, wl, h1) = (chi(d), wdim_lines_only(d), h1_correction(d));
    if json {
        let table: serde_json::Map<String, Value> = lines.into_iter().map(|(n, k)| (n, json!(k))).collect();
        return json!({
            "divisor": d.to_string(),
            "chi": c,
            "wdim_lines_only": wl,
            "h1corr": h1,
            "lines": table,
        })
        .to_string();
    }
    let mut out = format!("chi={c} wdim(lines-only)={wl} h1corr={h1}");
    if !lines.is_empty() {
        let cells: Vec<String> = lines.iter().map(|(n, k)| format!("{n}:{k}")).collect();
        let _ = write!(out, "\nk lines: {}", cells.join(" "));
    }
    out
}

/// Pads a record to eight points, for membership tests against the
/// eight-point orbits.
fn pad8(m: &[i64]) -> Option<Vec<i64>> {
    (m.len() <= 8).then(|| {
        let mut v = m.to_vec();
        v.resize(8, 0);
        v
    })
}

fn cmd_classify(record: &Record, json: bool) -> Outcome {
    let (kind, name, weyl): (&str, String, Option<bool>) = match record {
        Record::Surface(t) => {
            let f = classify_surface(&t.embed8());
            ("surface", f.to_string(), Some(f.is_weyl_plane()))
        }
        Record::Divisor { d, m, .. } => {
            let fp = FatPointDivisor::new(*d, m)?;
            let member = match pad8(m) {
                Some(p) => Some(divisor_orbit(8)?.contains(&DivisorRecord::new(8, *d, &p)?)),
                None => None,
            };
            let name = match record.divisor_record() {
                Ok(r) => r.family_tag(),
                Err(_) => fp.to_string(),
            };
            ("divisor", name, member)
        }
        Record::Curve(c) => {
            let p = pad8(c.m()).expect("curve records have at most eight points");
            let member = line_orbit(8)?.contains(&CurveRecord::new(8, c.d, &p)?);
            ("curve", c.family_tag(), Some(member))
        }
        Record::Chow(c) => {
            let fixed = cremona_chow(c)? == *c;
            let text = if json {
                json!({
                    "kind": "chow",
                    "ring": c.ring().to_string(),
                    "grade": c.grade(),
                    "cremona_fixed": fixed,
                })
                .to_string()
            } else {
                format!("chow {} grade {} cremona_fixed={fixed}", c.ring(), c.grade())
            };
            return Ok(Output::plain(text));
        }
    };
    let text = if json {
        json!({ "kind": kind, "type": name, "weyl": weyl }).to_string()
    } else {
        match weyl {
            Some(w) => format!("{kind} {name} weyl={w}"),
            None => format!("{kind} {name}"),
        }
    };
    Ok(Output::plain(text))
}
