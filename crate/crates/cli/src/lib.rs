//! The `ehrhart` command line.
//!
//! Exit codes: 0 on success, 1 when a report is FATAL (or the two delta-vector
//! computations disagree), 2 on usage, parse or computation errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ehrhart::count::{count_record, CountConfig, CountRecord, DEFAULT_BUDGET};
use ehrhart::generate::{GeneratorConfig, InstanceGenerator};
use ehrhart::json::{parse_polytope_with_max_dim, PolytopeDoc};
use ehrhart::polytope::DEFAULT_MAX_DIM;
use ehrhart::quasi::{self, ResidueDeltaTable};
use ehrhart::verify::{check_nonnegativity, check_oracle, check_palindrome, DEFAULT_M_MAX};
use ehrhart::{catalog, full_report, DeltaVector, Polytope, VerificationReport, VerifyConfig};
use serde::{Deserialize, Serialize};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FATAL: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "ehrhart", version, about = "Ehrhart quasi-polynomials and delta-vectors of rational polytopes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Largest bounding-box cell count enumerated per dilation.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Largest accepted ambient dimension.
    #[arg(long, default_value_t = DEFAULT_MAX_DIM)]
    max_dim: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Dimension, vertices, facets, denominator and lattice flags.
    Info {
        /// Catalog name or path to a polytope JSON file.
        input: String,
        #[command(flatten)]
        common: Common,
    },
    /// Lattice points in mP and in its interior.
    Count {
        input: String,
        #[arg(long)]
        m: u64,
        #[command(flatten)]
        common: Common,
    },
    /// The delta-vector and per-residue table.
    Delta {
        input: String,
        #[command(flatten)]
        common: Common,
    },
    /// The polar dual, in the polytope file format.
    Dual {
        input: String,
        #[command(flatten)]
        common: Common,
    },
    /// Run every check and report.
    Verify {
        input: String,
        #[arg(long, default_value_t = DEFAULT_M_MAX)]
        m_max: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Generate polytopes: `lattice`, `dual` (dual of a lattice polytope),
    /// `control` (random rational), or a catalog name to export it.
    Gen {
        kind: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        /// Coordinate bound B.
        #[arg(long, default_value_t = 2)]
        bound: i64,
        /// Largest denominator for `control`.
        #[arg(long, default_value_t = 3)]
        denominator_bound: i64,
        /// Number of polytopes; more than one prints a JSON array.
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
}

/// Result of one invocation; `main` prints it and exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(message: impl std::fmt::Display) -> Self {
        Self {
            code: EXIT_ERROR,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetDoc {
    pub normal: Vec<String>,
    pub bound: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InfoDoc {
    pub input: String,
    pub dim: usize,
    pub vertex_count: usize,
    pub facet_count: usize,
    pub k: String,
    pub is_lattice: bool,
    pub origin_interior: bool,
    /// Absent when the origin is not interior and the dual is unbounded.
    pub dual_is_lattice: Option<bool>,
    pub vertices: Vec<Vec<String>>,
    pub facets: Vec<FacetDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaDoc {
    pub input: String,
    pub n: usize,
    pub k: usize,
    pub delta: DeltaVector,
    pub residue_table: ResidueDeltaTable,
    pub palindromic: bool,
    pub methods_agree: bool,
    pub nonnegative: bool,
}

/// Exit code for a verification report.
pub fn exit_code(report: &VerificationReport) -> i32 {
    if report.fatal {
        EXIT_FATAL
    } else {
        EXIT_OK
    }
}

/// Resolve a catalog name or file path. A name that is both is rejected.
pub fn resolve_input(input: &str, max_dim: usize) -> Result<Polytope, String> {
    let named = catalog::lookup(input);
    let path = Path::new(input);
    match named {
        Some(_) if path.exists() => Err(format!(
            "{input:?} is both a catalog name and an existing file; pass the file as ./{input}"
        )),
        Some(p) if p.dim() > max_dim => Err(format!(
            "catalog entry {input} has dimension {} above --max-dim {max_dim}",
            p.dim()
        )),
        Some(p) => Ok(p),
        None => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read {input:?} (not a catalog name either): {e}"))?;
            parse_polytope_with_max_dim(&text, max_dim).map_err(|e| format!("{input}: {e}"))
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_ERROR,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                Outcome::ok(rendered)
            };
        }
    };
    match cli.command {
        Command::Info { input, common } => with_input(&input, &common, |p| Ok(cmd_info(&input, p, common.format))),
        Command::Count { input, m, common } => with_input(&input, &common, |p| {
            let record = count_record(p, m, &CountConfig { budget: common.budget }).map_err(|e| e.to_string())?;
            Ok(render_count(&record, common.format))
        }),
        Command::Delta { input, common } => with_input(&input, &common, |p| cmd_delta(&input, p, &common)),
        Command::Dual { input, common } => with_input(&input, &common, |p| {
            let dual = p.dual().map_err(|e| e.to_string())?;
            Ok(Outcome::ok(match common.format {
                Format::Json => to_json(&PolytopeDoc::from(&dual)),
                Format::Text => format!("{}\n", ehrhart::json::polytope_to_json(&dual)),
            }))
        }),
        Command::Verify { input, m_max, common } => with_input(&input, &common, |p| {
            let cfg = VerifyConfig {
                m_max,
                count: CountConfig { budget: common.budget },
            };
            let report = full_report(&input, p, &cfg).map_err(|e| e.to_string())?;
            let stdout = match common.format {
                Format::Json => to_json(&report),
                Format::Text => format!("{report}\n"),
            };
            let code = exit_code(&report);
            let stderr = if code == EXIT_FATAL {
                "FATAL: a check failed that must hold for this polytope\n".to_string()
            } else {
                String::new()
            };
            Ok(Outcome { code, stdout, stderr })
        }),
        Command::Gen {
            kind,
            seed,
            dim,
            bound,
            denominator_bound,
            count,
        } => cmd_gen(&kind, seed, dim, bound, denominator_bound, count),
    }
}

fn with_input(
    input: &str,
    common: &Common,
    body: impl FnOnce(&Polytope) -> Result<Outcome, String>,
) -> Outcome {
    match resolve_input(input, common.max_dim).and_then(|p| body(&p)) {
        Ok(outcome) => outcome,
        Err(e) => Outcome::error(e),
    }
}

fn cmd_info(input: &str, p: &Polytope, format: Format) -> Outcome {
    let doc = InfoDoc {
        input: input.to_string(),
        dim: p.dim(),
        vertex_count: p.vertices().len(),
        facet_count: p.facets().len(),
        k: p.denominator().to_string(),
        is_lattice: p.is_lattice(),
        origin_interior: p.origin_is_interior(),
        dual_is_lattice: p.dual_is_lattice().ok(),
        vertices: PolytopeDoc::from(p).vertices,
        facets: p
            .facets()
            .iter()
            .map(|h| FacetDoc {
                normal: h.normal().iter().map(ToString::to_string).collect(),
                bound: h.bound().to_string(),
            })
            .collect(),
    };
    if format == Format::Json {
        return Outcome::ok(to_json(&doc));
    }
    let mut s = String::new();
    let _ = writeln!(s, "input: {}", doc.input);
    let _ = writeln!(s, "n = {}", doc.dim);
    let _ = writeln!(s, "vertices: {}", doc.vertex_count);
    let _ = writeln!(s, "k = {}", doc.k);
    let _ = writeln!(s, "lattice = {}", doc.is_lattice);
    let _ = writeln!(s, "origin interior = {}", doc.origin_interior);
    if let Some(flag) = doc.dual_is_lattice {
        let _ = writeln!(s, "dual lattice = {flag}");
    }
    let _ = writeln!(s, "facets = {}", doc.facet_count);
    for v in p.vertices() {
        let _ = writeln!(s, "  vertex {v}");
    }
    for h in p.facets() {
        let _ = writeln!(s, "  facet {h}");
    }
    Outcome::ok(s)
}

fn render_count(record: &CountRecord, format: Format) -> Outcome {
    Outcome::ok(match format {
        Format::Json => to_json(record),
        Format::Text => format!(
            "m = {}\nclosed = {}\ninterior = {}\n",
            record.m, record.closed_count, record.interior_count
        ),
    })
}

fn cmd_delta(input: &str, p: &Polytope, common: &Common) -> Result<Outcome, String> {
    let cfg = CountConfig { budget: common.budget };
    let (qp, series, _) = quasi::fit_and_series(p, &cfg).map_err(|e| e.to_string())?;
    let delta = quasi::delta_vector(&qp);
    let agree = check_oracle(&delta, &series);
    let doc = DeltaDoc {
        input: input.to_string(),
        n: qp.n(),
        k: qp.k(),
        palindromic: check_palindrome(&delta).passed,
        methods_agree: agree.passed,
        nonnegative: check_nonnegativity(&delta).passed,
        residue_table: qp.table().clone(),
        delta,
    };
    let stdout = match common.format {
        Format::Json => to_json(&doc),
        Format::Text => format!(
            "n = {}, k = {}\ndelta = {}\nresidue table: {}\npalindromic = {}\n",
            doc.n, doc.k, doc.delta, doc.residue_table, doc.palindromic
        ),
    };
    if !doc.methods_agree || !doc.nonnegative {
        return Ok(Outcome {
            code: EXIT_FATAL,
            stdout,
            stderr: format!(
                "FATAL: internal inconsistency (fit vs series: {}, series gave {series}; nonnegative: {})\n",
                doc.methods_agree, doc.nonnegative
            ),
        });
    }
    Ok(Outcome::ok(stdout))
}

fn cmd_gen(kind: &str, seed: u64, dim: usize, bound: i64, denominator_bound: i64, count: usize) -> Outcome {
    if let Some(p) = catalog::lookup(kind) {
        return Outcome::ok(format!("{}\n", ehrhart::json::polytope_to_json(&p)));
    }
    let cfg = GeneratorConfig::new(seed, dim)
        .with_coordinate_bound(bound)
        .with_denominator_bound(denominator_bound);
    let mut g = InstanceGenerator::new(cfg);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let p = match kind {
            "lattice" => g.lattice_with_interior_origin(),
            "dual" => g.dual_of_lattice(),
            "control" => g.rational_control(),
            other => {
                return Outcome::error(format!(
                    "unknown generator {other:?}; expected lattice, dual, control or a catalog name"
                ))
            }
        };
        match p {
            Ok(p) => out.push(PolytopeDoc::from(&p)),
            Err(e) => return Outcome::error(e),
        }
    }
    let text = if out.len() == 1 {
        serde_json::to_string(&out[0])
    } else {
        serde_json::to_string(&out)
    };
    Outcome::ok(format!("{}\n", text.expect("plain data serializes")))
}
