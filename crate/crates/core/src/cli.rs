//! The `quiver-cm` command-line driver.
//!
//! Exit codes: 0 success, 1 input error, 2 scale guardrail, 3 a
//! verification mismatch. Diagnostics go to stderr prefixed with `error:`.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::classify::classify;
use crate::degeneration::{check_pd_minimality, degeneration_poset_with, export_dot};
use crate::error::{Error, Result};
use crate::field::{format_scalar, Field};
use crate::groebner::rank_ideal::rank_condition_ideal;
use crate::groebner::{minimal_free_resolution, pd_formula_survey, verify_cm};
use crate::homogeneity::{is_homogeneous, is_isomorphic_to_multiple};
use crate::homology::{ext1_dim, hom_space, invariant_report, orbit_dim};
use crate::linalg::Matrix;
use crate::quiver::{parse_quiver, DimVector, Quiver};
use crate::representation::{parse_representation_file, Representation};
use crate::roots::{positive_roots, tits_form, DynkinContext};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
    Dot,
}

#[derive(Debug, Parser)]
#[command(name = "quiver-cm", version, about = "Homological invariants of quiver representations and Cohen-Macaulay checks of orbit closures")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args, Default, Clone)]
pub struct Common {
    /// Quiver file for representation files that do not embed one.
    #[arg(long, global = true)]
    pub quiver: Option<PathBuf>,
    /// Dimension vector, comma-separated in vertex file order.
    #[arg(long, global = true)]
    pub dim: Option<String>,
    /// Coefficient field: `q` or `f<p>`.
    #[arg(long, global = true)]
    pub field: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Structural flags and Dynkin type of a quiver.
    Classify { quiver: PathBuf },
    /// A basis of Hom(M, N).
    Hom { m: PathBuf, n: PathBuf },
    /// dim End(M).
    End { m: PathBuf },
    /// dim Ext¹(M, M) (acyclic quivers).
    Ext { m: PathBuf },
    /// Dimension of the orbit of M.
    OrbitDim { m: PathBuf },
    /// l + dim End(M) − Σ dᵢ², with the full invariant report.
    PdFormula { m: PathBuf },
    /// Krull–Schmidt decomposition over a Dynkin quiver.
    Decompose { m: PathBuf },
    /// Positive roots of a Dynkin quiver.
    Roots { quiver: PathBuf },
    /// All orbits for `--dim`.
    Enumerate { quiver: PathBuf },
    /// Degeneration order on the orbits for `--dim` (text, json or dot).
    DegenPoset { quiver: PathBuf },
    /// Whether λM ≅ M for every λ ≠ 0 (or for one `--lambda`).
    Homogeneous {
        m: PathBuf,
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Rank-condition generators of the orbit closure (equioriented A).
    Ideal { quiver: PathBuf, m: PathBuf },
    /// Minimal free resolution of the orbit-closure coordinate ring.
    Resolve { quiver: PathBuf, m: PathBuf },
    /// The full Cohen–Macaulay verification.
    VerifyCm { quiver: PathBuf, m: PathBuf },
    /// pd formula over every orbit for `--dim`.
    Survey { quiver: PathBuf },
}

/// A rendered report plus the exit code it should produce.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub body: String,
    pub code: i32,
}

impl Output {
    fn ok(body: String) -> Self {
        Output { body, code: 0 }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Guardrail(_) => 2,
        Error::CrossCheck(_) => 3,
        _ => 1,
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        message: format!("cannot read {}: {e}", path.display()),
    })
}

fn load_quiver(path: &Path) -> Result<Quiver> {
    parse_quiver(&read(path)?)
}

fn parse_field(s: &str) -> Result<Field> {
    s.parse()
}

struct Ctx<'a> {
    common: &'a Common,
    quiver: Option<Quiver>,
}

impl Ctx<'_> {
    fn field(&self) -> Result<Option<Field>> {
        self.common.field.as_deref().map(parse_field).transpose()
    }

    fn rep(&self, path: &Path) -> Result<Representation> {
        let m = parse_representation_file(&read(path)?, self.quiver.as_ref())?;
        match self.field()? {
            Some(f) => m.with_field(f),
            None => Ok(m),
        }
    }

    fn rep_on(&self, q: &Quiver, path: &Path) -> Result<Representation> {
        let m = parse_representation_file(&read(path)?, Some(q))?;
        match self.field()? {
            Some(f) => m.with_field(f),
            None => Ok(m),
        }
    }

    fn dims(&self, q: &Quiver) -> Result<DimVector> {
        let s = self
            .common
            .dim
            .as_deref()
            .ok_or_else(|| Error::parse(0, "--dim is required"))?;
        let d = DimVector::parse(s)?;
        q.check_dims(&d)?;
        Ok(d)
    }

    fn format(&self, allowed_dot: bool) -> Result<Format> {
        let f = self.common.format;
        if f == Format::Dot && !allowed_dot {
            return Err(Error::parse(0, "--format dot is only available for degen-poset"));
        }
        Ok(f)
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable report");
    s.push('\n');
    s
}

fn matrix_text(m: &Matrix) -> Vec<String> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(format_scalar).collect::<Vec<_>>().join(" "))
        .collect()
}

fn single(ctx: &Ctx, key: &str, text: String, value: serde_json::Value) -> Result<Output> {
    Ok(Output::ok(match ctx.format(false)? {
        Format::Json => to_json(&json!({ key: value })),
        _ => text + "\n",
    }))
}

/// Runs a parsed command line.
pub fn execute(cli: &Cli) -> Result<Output> {
    let quiver = cli.common.quiver.as_deref().map(load_quiver).transpose()?;
    let ctx = Ctx {
        common: &cli.common,
        quiver,
    };
    match &cli.command {
        Command::Classify { quiver } => {
            let q = load_quiver(quiver)?;
            let c = classify(&q);
            let dynkin = c.dynkin.map(|t| t.to_string());
            Ok(Output::ok(match ctx.format(false)? {
                Format::Json => to_json(&json!({
                    "connected": c.connected,
                    "acyclic": c.acyclic,
                    "tree": c.tree,
                    "dynkin": dynkin,
                    "equioriented_a": c.equioriented_a,
                })),
                _ => format!(
                    "connected: {}\nacyclic: {}\ntree: {}\ndynkin: {}\nequioriented A: {}\n",
                    c.connected,
                    c.acyclic,
                    c.tree,
                    dynkin.as_deref().unwrap_or("none"),
                    c.equioriented_a
                ),
            }))
        }
        Command::Hom { m, n } => {
            let (m, n) = (ctx.rep(m)?, ctx.rep(n)?);
            let h = hom_space(&m, &n)?;
            // one string per vertex, rows separated by `;`
            let basis: Vec<Vec<String>> = h
                .basis
                .iter()
                .map(|t| t.iter().map(|x| matrix_text(x).join("; ")).collect())
                .collect();
            Ok(Output::ok(match ctx.format(false)? {
                Format::Json => to_json(&json!({ "dim": h.dimension(), "basis": basis })),
                _ => {
                    let mut s = format!("dim Hom = {}\n", h.dimension());
                    let names = m.quiver().vertices();
                    for (k, t) in basis.iter().enumerate() {
                        let _ = writeln!(s, "basis {}:", k + 1);
                        for (v, mat) in names.iter().zip(t) {
                            let _ = writeln!(s, "  {v}: [{mat}]");
                        }
                    }
                    s
                }
            }))
        }
        Command::End { m } => {
            let r = invariant_report(&ctx.rep(m)?)?;
            single(&ctx, "end_dim", format!("dim End = {}", r.end_dim), json!(r.end_dim))
        }
        Command::Ext { m } => {
            let e = ext1_dim(&ctx.rep(m)?)?;
            single(&ctx, "ext1_dim", format!("dim Ext1 = {e}"), json!(e))
        }
        Command::OrbitDim { m } => {
            let o = orbit_dim(&ctx.rep(m)?)?;
            single(&ctx, "orbit_dim", format!("orbit dim = {o}"), json!(o))
        }
        Command::PdFormula { m } => {
            let r = invariant_report(&ctx.rep(m)?)?;
            Ok(Output::ok(match ctx.format(false)? {
                Format::Json => to_json(&r),
                _ => {
                    let opt = |x: Option<usize>| x.map_or("n/a".to_string(), |v| v.to_string());
                    let mut s = format!(
                        "d = {}\nl = {}\nsum d_i^2 = {}\ndim End = {}\ndim Ext1 = {}\norbit dim = {}\npd formula = {}\n",
                        r.dims,
                        r.l,
                        r.vertex_end_dim,
                        r.end_dim,
                        opt(r.ext1_dim),
                        opt(r.orbit_dim),
                        r.pd_formula
                    );
                    if let Some(c) = &r.caveat {
                        let _ = writeln!(s, "caveat: {c}");
                    }
                    s
                }
            }))
        }
        Command::Decompose { m } => {
            let m = ctx.rep(m)?;
            let label = DynkinContext::new(m.quiver(), m.field())?.decompose(&m)?;
            let parts: Vec<_> = label
                .parts
                .iter()
                .map(|(r, k)| json!({ "root": r.0, "multiplicity": k }))
                .collect();
            Ok(Output::ok(match ctx.format(false)? {
                Format::Json => to_json(&json!({ "label": label.to_string(), "parts": parts })),
                _ => format!("{label}\n"),
            }))
        }
        Command::Roots { quiver } => {
            let q = load_quiver(quiver)?;
            let roots = positive_roots(&q)?;
            Ok(Output::ok(match ctx.format(false)? {
                Format::Json => to_json(&json!({
                    "count": roots.len(),
                    "roots": roots.iter().map(|r| r.0.clone()).collect::<Vec<_>>(),
                })),
                _ => {
                    let mut s = format!("{} positive roots\n", roots.len());
                    for r in &roots {
                        let _ = writeln!(s, "{r}  tits {}", tits_form(&q, r));
                    }
                    s
                }
            }))
        }
        Command::Enumerate { quiver } => {
            let q = load_quiver(quiver)?;
            let d = ctx.dims(&q)?;
            let labels = DynkinContext::new(&q, Field::Rational)?.enumerate_orbits(&d)?;
            let shown: Vec<String> = labels.iter().map(ToString::to_string).collect();
            Ok(Output::ok(match ctx.format(false)? {
                Format::Json => to_json(&json!({ "dim": d.0, "count": shown.len(), "orbits": shown })),
                _ => format!("{} orbits\n{}\n", shown.len(), shown.join("\n")),
            }))
        }
        Command::DegenPoset { quiver } => {
            let q = load_quiver(quiver)?;
            let d = ctx.dims(&q)?;
            let dc = DynkinContext::new(&q, Field::Rational)?;
            let p = degeneration_poset_with(&dc, &d)?;
            let check = check_pd_minimality(&p);
            let code = if check.passed() { 0 } else { 3 };
            let body = match ctx.format(true)? {
                Format::Dot => export_dot(&p),
                Format::Json => to_json(&json!({
                    "dim": d.0,
                    "l": p.l,
                    "labels": p.labels.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    "leq": p.leq,
                    "covers": p.covers,
                    "annotations": p.annotations,
                    "check": check,
                })),
                Format::Text => {
                    let mut s = format!("{} orbits, l = {}\n", p.len(), p.l);
                    for (i, (label, a)) in p.labels.iter().zip(&p.annotations).enumerate() {
                        let _ = writeln!(
                            s,
                            "[{i}] {label}  dim {}  pd {}{}{}",
                            a.orbit_dim,
                            a.pd_formula,
                            if a.open { "  open" } else { "" },
                            if a.closed { "  closed" } else { "" }
                        );
                    }
                    for (a, b) in &p.covers {
                        let _ = writeln!(s, "[{a}] -> [{b}]");
                    }
                    if check.passed() {
                        s.push_str("minimality and closed-orbit checks: pass\n");
                    } else {
                        for v in &check.violations {
                            let _ = writeln!(s, "violation: {}: {}", v.label, v.message);
                        }
                    }
                    s
                }
            };
            Ok(Output { body, code })
        }
        Command::Homogeneous { m, lambda } => {
            let m = ctx.rep(m)?;
            let format = ctx.format(false)?;
            if let Some(l) = lambda {
                let lam = m.field().parse_scalar(l)?;
                let iso = is_isomorphic_to_multiple(&m, &lam)?;
                let shown = format_scalar(&lam);
                let text = if iso {
                    format!("λM ≅ M for λ={shown}")
                } else {
                    format!("not homogeneous; witness λ={shown}")
                };
                return Ok(Output::ok(match format {
                    Format::Json => to_json(&json!({ "lambda": shown, "isomorphic": iso, "homogeneous": if iso { None } else { Some(false) } })),
                    _ => text + "\n",
                }));
            }
            let v = is_homogeneous(&m);
            Ok(Output::ok(match format {
                Format::Json => to_json(&v),
                _ => format!("{v}\n"),
            }))
        }
        Command::Ideal { quiver, m } => {
            let q = load_quiver(quiver)?;
            let (ring, ideal) = rank_condition_ideal(&ctx.rep_on(&q, m)?)?;
            let j = ideal.to_json(&ring);
            Ok(Output::ok(match ctx.format(false)? {
                Format::Json => to_json(&j),
                _ => {
                    let mut s = format!("{} generators in {} variables\n", j.generators.len(), j.variables.len());
                    for g in &j.generators {
                        let _ = writeln!(s, "{g}");
                    }
                    s
                }
            }))
        }
        Command::Resolve { quiver, m } => {
            let q = load_quiver(quiver)?;
            let (ring, ideal) = rank_condition_ideal(&ctx.rep_on(&q, m)?)?;
            if ring.nvars() > crate::groebner::verify::MAX_VARIABLES {
                return Err(Error::Guardrail(format!("{} variables exceeds the limit", ring.nvars())));
            }
            let betti = minimal_free_resolution(&ideal, &ring)?.betti();
            Ok(Output::ok(match ctx.format(false)? {
                Format::Json => to_json(&json!({
                    "generators": ideal.to_json(&ring).generators,
                    "betti": betti,
                    "pd": betti.pd(),
                })),
                _ => format!("{betti}pd = {}\n", betti.pd()),
            }))
        }
        Command::VerifyCm { quiver, m } => {
            let q = load_quiver(quiver)?;
            let r = verify_cm(&ctx.rep_on(&q, m)?)?;
            let code = if r.cm_iff_pd_formula { 0 } else { 3 };
            let body = match ctx.format(false)? {
                Format::Json => to_json(&r),
                _ => {
                    let mut s = String::new();
                    let _ = writeln!(s, "field {}  l = {}", r.field, r.l);
                    let _ = writeln!(s, "generators ({}):", r.generators.len());
                    for g in &r.generators {
                        let _ = writeln!(s, "  {g}");
                    }
                    let _ = write!(s, "betti:\n{}", r.betti);
                    let _ = writeln!(s, "pd = {}  pd formula = {}", r.pd, r.pd_formula);
                    let _ = writeln!(s, "dim = {}  depth = {}  ht = {}  grade = {}", r.dim, r.depth, r.ht, r.grade);
                    let _ = writeln!(
                        s,
                        "cm = {}  perfect = {}  equivalence holds = {}  auslander-buchsbaum = {}",
                        r.cm, r.perfect, r.cm_iff_pd_formula, r.auslander_buchsbaum
                    );
                    if let Some(b) = r.depth_lower_bound {
                        let _ = writeln!(s, "regular sequence found: length {b}");
                    }
                    s
                }
            };
            Ok(Output { body, code })
        }
        Command::Survey { quiver } => {
            let q = load_quiver(quiver)?;
            let d = ctx.dims(&q)?;
            let rows = pd_formula_survey(&q, &d)?;
            Ok(Output::ok(match ctx.format(false)? {
                Format::Json => to_json(&rows),
                _ => {
                    let mut s = format!("{:<40} {:>8} {:>5} {:>4} {:>5} {:>6}\n", "orbit", "orbit_dim", "ext1", "pd", "open", "closed");
                    for r in &rows {
                        let _ = writeln!(
                            s,
                            "{:<40} {:>8} {:>5} {:>4} {:>5} {:>6}",
                            r.label, r.orbit_dim, r.ext1_dim, r.pd_formula, r.open, r.closed
                        );
                    }
                    s
                }
            }))
        }
    }
}

/// Parses `args` (program name first), runs, writes the report and returns
/// the process exit code.
pub fn main_with_args(args: Vec<String>) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return 0;
            }
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or("invalid arguments");
            eprintln!("error: {}", first.trim_start_matches("error: "));
            return 1;
        }
    };
    match execute(&cli) {
        Ok(out) => {
            match &cli.common.output {
                Some(path) => {
                    if let Err(e) = fs::write(path, &out.body) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return 1;
                    }
                }
                None => print!("{}", out.body),
            }
            out.code
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}
