//! Command-line front end: argument types, report structures and their text rendering.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use hodge_sl2::rational::fmt_q;
use hodge_sl2::nilpotent_orbits::even_jm_classes;
use hodge_sl2::rep_weights::natural_weight;
use hodge_sl2::{
    admits_hodge_tate, adjoint_weight_system, classify_in, deligne_diamond, enumerate_char_vectors, hodge_numbers,
    identify_real_form, weight_system, CartanType, ClassifyOptions, Error, GradingElement, HighestWeight, Limits,
    MTDomainSpec, RootSystem, SL2Class, WeightSystem,
};

pub const SCHEMA_VERSION: u32 = 1;

/// Process exit codes.
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "hodge-sl2", version, about = "Horizontal SL(2)s on Mumford-Tate domains")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the classes of horizontal SL(2)s.
    Classify(DomainArgs),
    /// Decide whether some class has a Hodge-Tate limit.
    HodgeTate(DomainArgs),
    /// List the complex nilpotent orbits by characteristic vector.
    Orbits(OrbitArgs),
    /// Print the Deligne splitting of every class.
    Diamond(DomainArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct Common {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Largest Weyl group to enumerate; overrides HODGE_SL2_WEYL_CAP.
    #[arg(long)]
    pub weyl_cap: Option<usize>,
}

#[derive(Debug, Args)]
pub struct DomainArgs {
    /// Simple Lie type, e.g. C3.
    #[arg(value_name = "TYPE")]
    pub ctype: String,
    /// Simple-root indices (1-based, comma separated) or a 0/1 mask of length rank.
    #[arg(long)]
    pub grading: String,
    /// Highest weight in fundamental-weight coefficients; the adjoint representation if absent.
    #[arg(long)]
    pub rep: Option<String>,
    /// Weight of the Hodge structure; defaults to 2 max mu(E), or 0 for the adjoint.
    #[arg(long)]
    pub n: Option<i64>,
    #[arg(long)]
    pub diamonds: bool,
    #[arg(long)]
    pub include_trivial: bool,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct OrbitArgs {
    #[arg(value_name = "TYPE")]
    pub ctype: String,
    /// List the index sets of even Jacobson-Morosov parabolics instead.
    #[arg(long)]
    pub even_jm: bool,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = if e.is_resource_limit() { EXIT_RESOURCE } else { EXIT_USAGE };
        CliError { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> CliError {
    CliError { code: EXIT_USAGE, message: message.into() }
}

/// A parsed domain: type, grading, and the representation to place Hodge structures on.
#[derive(Debug, Clone)]
pub struct DomainQuery {
    pub spec: MTDomainSpec,
    pub rep: Option<HighestWeight>,
    pub n: Option<i64>,
}

fn parse_list<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>, CliError> {
    s.split(',')
        .map(|t| t.trim().parse().map_err(|_| usage(format!("bad {what} entry {t:?}"))))
        .collect()
}

/// Reads `--grading`: a 0/1 list of length rank is a mask, anything else is 1-based indices.
pub fn parse_grading(ct: CartanType, s: &str) -> Result<MTDomainSpec, CliError> {
    let v: Vec<usize> = parse_list(s, "grading")?;
    if v.len() == ct.rank && v.iter().all(|&x| x <= 1) {
        return Ok(MTDomainSpec::new(ct, v.iter().map(|&x| x as i64).collect())?);
    }
    Ok(MTDomainSpec::from_indices(ct, &v)?)
}

impl DomainQuery {
    pub fn parse(args: &DomainArgs) -> Result<Self, CliError> {
        let ct = CartanType::parse(&args.ctype)?;
        let spec = parse_grading(ct, &args.grading)?;
        let rep = match &args.rep {
            Some(r) => {
                let hw: Vec<i64> = parse_list(r, "rep")?;
                if hw.len() != ct.rank {
                    return Err(usage(format!("--rep needs {} coefficients", ct.rank)));
                }
                Some(HighestWeight::new(hw)?)
            }
            None => None,
        };
        Ok(DomainQuery { spec, rep, n: args.n })
    }
}

fn limits(c: &Common) -> Limits {
    let mut l = Limits::from_env();
    if let Some(cap) = c.weyl_cap {
        l.weyl_cap = cap;
    }
    l
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DomainEcho {
    #[serde(rename = "type")]
    pub ctype: String,
    pub grading: Vec<i64>,
    pub e: String,
    pub real_form: String,
    /// Highest weight, absent for the adjoint representation.
    pub rep: Option<Vec<i64>>,
    pub n: i64,
    pub dim: u64,
    /// `h^{n,0}, ..., h^{0,n}`, reported when a representation is given.
    pub hodge_numbers: Option<Vec<u64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell {
    pub p: i64,
    pub q: i64,
    pub dim: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiamondReport {
    pub n: i64,
    pub cells: Vec<Cell>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRow {
    /// Base of `S'`, e.g. `{s1+s2, s3}`.
    pub levi: String,
    pub z: String,
    /// `Z` in the basis `S^i`.
    pub z_coords: Vec<i64>,
    /// `(sigma_1(Z), ..., sigma_r(Z))`.
    pub z_sigma: Vec<i64>,
    /// `zeta` in the basis `S^i`, as exact fractions.
    pub zeta: Vec<String>,
    pub levi_real_form: Vec<String>,
    pub codim: usize,
    pub hodge_tate: bool,
    pub diamond: Option<DiamondReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub schema_version: u32,
    pub domain: DomainEcho,
    pub rows: Vec<ClassRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HodgeTateReport {
    pub schema_version: u32,
    pub domain: DomainEcho,
    pub admits_hodge_tate: bool,
    pub witness: Option<ClassRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitsReport {
    pub schema_version: u32,
    #[serde(rename = "type")]
    pub ctype: String,
    pub char_vectors: Vec<Vec<i64>>,
    /// 1-based index sets, present with `--even-jm`.
    pub even_jm: Option<Vec<Vec<usize>>>,
}

struct Context {
    rs: RootSystem,
    e: GradingElement,
    ws: WeightSystem,
    n: i64,
    echo: DomainEcho,
    classes: Vec<SL2Class>,
}

fn build(args: &DomainArgs) -> Result<Context, CliError> {
    let query = DomainQuery::parse(args)?;
    let lim = limits(&args.common);
    let rs = RootSystem::new(query.spec.ctype);
    let e = query.spec.grading_element();
    let (ws, n) = match &query.rep {
        Some(hw) => {
            let ws = weight_system(&rs, hw, lim.weight_cap)?;
            let n = match query.n {
                Some(n) => n,
                None => natural_weight(&ws, &e)?,
            };
            (ws, n)
        }
        None => (adjoint_weight_system(&rs), query.n.unwrap_or(0)),
    };
    let hodge_numbers = match &query.rep {
        Some(_) => {
            let h = hodge_numbers(&ws, &e, n)?;
            Some((0..=n).rev().map(|p| h.get(p)).collect())
        }
        None => None,
    };
    let echo = DomainEcho {
        ctype: query.spec.ctype.to_string(),
        grading: query.spec.grading_coeffs.clone(),
        e: e.to_string(),
        real_form: identify_real_form(&rs, &e)?.name,
        rep: query.rep.as_ref().map(|hw| hw.omega_coords.clone()),
        n,
        dim: ws.dim,
        hodge_numbers,
    };
    let opts = ClassifyOptions { limits: lim, include_trivial: args.include_trivial };
    let classes = classify_in(&rs, &query.spec, &opts)?;
    Ok(Context { rs, e, ws, n, echo, classes })
}

fn row(ctx: &Context, c: &SL2Class, diamond: bool) -> Result<ClassRow, CliError> {
    let rs = &ctx.rs;
    let diamond = if diamond {
        let d = deligne_diamond(&ctx.e, &c.z, &ctx.ws, ctx.n)?;
        Some(DiamondReport {
            n: d.n,
            cells: d.cells.iter().map(|(&(p, q), &dim)| Cell { p, q, dim }).collect(),
        })
    } else {
        None
    };
    let z_coords = c.z.to_ints().ok_or_else(|| usage("Z is not integral"))?;
    let z_sigma = (0..rs.rank())
        .map(|i| c.z.pair_int(rs.root(i)).ok_or_else(|| usage("sigma(Z) is not integral")))
        .collect::<Result<_, _>>()?;
    Ok(ClassRow {
        levi: c.levi.fmt_base(rs),
        z: c.z.to_string(),
        z_coords,
        z_sigma,
        zeta: c.zeta.s_coords.iter().map(fmt_q).collect(),
        levi_real_form: c.levi_real_form.clone(),
        codim: c.codim,
        hodge_tate: c.is_hodge_tate,
        diamond,
    })
}

pub fn classification_report(args: &DomainArgs, diamonds: bool) -> Result<ClassificationReport, CliError> {
    let ctx = build(args)?;
    let rows = ctx.classes.iter().map(|c| row(&ctx, c, diamonds)).collect::<Result<_, _>>()?;
    Ok(ClassificationReport { schema_version: SCHEMA_VERSION, domain: ctx.echo.clone(), rows })
}

pub fn hodge_tate_report(args: &DomainArgs) -> Result<HodgeTateReport, CliError> {
    let ctx = build(args)?;
    let witness = admits_hodge_tate(&ctx.classes).map(|c| row(&ctx, c, args.diamonds)).transpose()?;
    Ok(HodgeTateReport {
        schema_version: SCHEMA_VERSION,
        domain: ctx.echo.clone(),
        admits_hodge_tate: witness.is_some(),
        witness,
    })
}

pub fn orbits_report(args: &OrbitArgs) -> Result<OrbitsReport, CliError> {
    let ct = CartanType::parse(&args.ctype)?;
    let rs = RootSystem::new(ct);
    let vectors = enumerate_char_vectors(&rs);
    let even_jm = args
        .even_jm
        .then(|| even_jm_classes(&vectors).into_iter().map(|s| s.indices).collect());
    Ok(OrbitsReport {
        schema_version: SCHEMA_VERSION,
        ctype: ct.to_string(),
        char_vectors: vectors.into_iter().map(|v| v.values).collect(),
        even_jm,
    })
}

fn tuple<T: ToString>(v: &[T]) -> String {
    let parts: Vec<String> = v.iter().map(T::to_string).collect();
    format!("({})", parts.join(","))
}

fn zeta_text(zeta: &[String]) -> String {
    if zeta.iter().all(|z| z == "0") {
        "0".into()
    } else {
        tuple(zeta)
    }
}

/// `p` across, `q` downwards from the top, `*` where `I^{p,q} != 0`.
pub fn diamond_grid(d: &DiamondReport) -> String {
    let (Some(pmin), Some(pmax)) = (d.cells.iter().map(|c| c.p).min(), d.cells.iter().map(|c| c.p).max()) else {
        return String::new();
    };
    let qmin = d.cells.iter().map(|c| c.q).min().unwrap();
    let qmax = d.cells.iter().map(|c| c.q).max().unwrap();
    let mut out = String::new();
    for q in (qmin..=qmax).rev() {
        let line: Vec<&str> = (pmin..=pmax)
            .map(|p| if d.cells.iter().any(|c| c.p == p && c.q == q && c.dim > 0) { "*" } else { "." })
            .collect();
        let _ = writeln!(out, "  q={q:>3}  {}", line.join(" "));
    }
    let _ = writeln!(out, "  p from {pmin} to {pmax}");
    let cells: Vec<String> = d.cells.iter().map(|c| format!("({},{}):{}", c.p, c.q, c.dim)).collect();
    let _ = writeln!(out, "  {}", cells.join(" "));
    out
}

fn header(d: &DomainEcho) -> String {
    let mut out = format!("{}  E = {}  real form {}\n", d.ctype, d.e, d.real_form);
    match (&d.rep, &d.hodge_numbers) {
        (Some(rep), Some(h)) => {
            let _ = writeln!(out, "rep {}  dim {}  n = {}  h={}", tuple(rep), d.dim, d.n, tuple(h));
        }
        _ => {
            let _ = writeln!(out, "adjoint  dim {}  n = {}", d.dim, d.n);
        }
    }
    out
}

fn table(rows: &[ClassRow]) -> String {
    let head = ["codim", "S'", "Z", "sigma(Z)", "zeta", "l_ss real form", "HT"];
    let cells: Vec<[String; 7]> = rows
        .iter()
        .map(|r| {
            [
                r.codim.to_string(),
                r.levi.clone(),
                r.z.clone(),
                tuple(&r.z_sigma),
                zeta_text(&r.zeta),
                r.levi_real_form.join(" x "),
                if r.hodge_tate { "yes" } else { "no" }.to_string(),
            ]
        })
        .collect();
    let mut width = head.map(str::len);
    for c in &cells {
        for (w, s) in width.iter_mut().zip(c) {
            *w = (*w).max(s.len());
        }
    }
    let line = |c: &[String]| -> String {
        let parts: Vec<String> = c.iter().zip(width).map(|(s, w)| format!("{s:<w$}")).collect();
        parts.join("  ").trim_end().to_string()
    };
    let mut out = String::new();
    let _ = writeln!(out, "{}", line(&head.map(String::from)));
    for c in &cells {
        let _ = writeln!(out, "{}", line(c));
    }
    out
}

pub fn render_classification(r: &ClassificationReport) -> String {
    let mut out = header(&r.domain);
    let plural = if r.rows.len() == 1 { "" } else { "es" };
    let _ = writeln!(out, "{} class{plural}", r.rows.len());
    out.push_str(&table(&r.rows));
    for (i, row) in r.rows.iter().enumerate() {
        if let Some(d) = &row.diamond {
            let _ = writeln!(out, "\nclass {} S'={} codim {}", i + 1, row.levi, row.codim);
            out.push_str(&diamond_grid(d));
        }
    }
    out
}

pub fn render_hodge_tate(r: &HodgeTateReport) -> String {
    match &r.witness {
        Some(w) => {
            let mut out = format!("yes, S'={}\n", w.levi);
            if let Some(d) = &w.diamond {
                out.push_str(&diamond_grid(d));
            }
            out
        }
        None => "no\n".into(),
    }
}

pub fn render_orbits(r: &OrbitsReport) -> String {
    let mut out = String::new();
    match &r.even_jm {
        Some(sets) => {
            let _ = writeln!(out, "{}: {} even JM index sets", r.ctype, sets.len());
            for s in sets {
                let _ = writeln!(out, "{{{}}}", s.iter().map(usize::to_string).collect::<Vec<_>>().join(","));
            }
        }
        None => {
            let _ = writeln!(out, "{}: {} nilpotent orbits", r.ctype, r.char_vectors.len());
            for v in &r.char_vectors {
                let _ = writeln!(out, "{}", tuple(v));
            }
        }
    }
    out
}

fn emit<T: Serialize>(format: Format, report: &T, text: impl FnOnce(&T) -> String) -> Result<String, CliError> {
    match format {
        Format::Text => Ok(text(report)),
        Format::Json => serde_json::to_string_pretty(report)
            .map(|s| s + "\n")
            .map_err(|e| CliError { code: 1, message: e.to_string() }),
    }
}

/// Runs one command and returns what goes to stdout.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Classify(a) => emit(a.common.format, &classification_report(a, a.diamonds)?, render_classification),
        Command::Diamond(a) => emit(a.common.format, &classification_report(a, true)?, render_classification),
        Command::HodgeTate(a) => emit(a.common.format, &hodge_tate_report(a)?, render_hodge_tate),
        Command::Orbits(a) => emit(a.common.format, &orbits_report(a)?, render_orbits),
    }
}
