//! Argument parsing and dispatch for the `rootlab` binary.
//!
//! [`run_cli`] never exits the process; it returns the exit code so the
//! whole front end can be driven from tests.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use rootlab::exactlin::{int, parse_rational};
use rootlab::polytopes::{polar_hrep, polar_vertices, standard_facet_indices, Halfspace};
use rootlab::verifier::{run_all, VerificationReport};
use rootlab::weyl::full_orbit;
use rootlab::zonotopes::{critical_scale, zonotope_index, zt_equals_polar};
use rootlab::{Family, Rational, RationalVector, RootSystem, TypeLabel};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "rootlab", version, about = "Exact root systems, polar root polytopes and zonotope checks")]
pub struct Cli {
    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List all roots, one α-coordinate vector per line.
    Roots(TypeArgs),
    /// Weyl group orbit of a vector.
    Orbit {
        #[command(flatten)]
        ty: TypeArgs,
        /// `coweight:<j>`, `weight:<j>`, or comma-separated α-coordinates.
        #[arg(long)]
        vector: String,
        #[arg(long)]
        scale: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Half-spaces, vertex candidates and facet indices of the polar polytope.
    Polar {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Test whether the polar polytope equals the zonotope of a coweight orbit.
    ZonotopeCheck {
        #[command(flatten)]
        ty: TypeArgs,
        /// Coweight index; defaults to the generating index of the type.
        #[arg(long)]
        j: Option<usize>,
        /// Multiplier on the coweight; defaults to `1/(q_j m_j)`.
        #[arg(long)]
        scale: Option<String>,
    },
    /// Run the verification suite.
    Verify {
        #[arg(value_enum)]
        target: VerifyTarget,
        #[arg(long)]
        max_rank: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Record wall-clock time per report (output is then not reproducible).
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Debug, Args)]
pub struct TypeArgs {
    /// Family letter, A to G.
    pub family: String,
    pub rank: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VerifyTarget {
    All,
}

/// A failure together with the exit code it maps to.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: message.into() }
    }

    fn failed(message: impl Into<String>) -> Self {
        Failure { code: EXIT_FAILED, message: message.into() }
    }
}

impl From<rootlab::Error> for Failure {
    fn from(e: rootlab::Error) -> Self {
        Failure::failed(e.to_string())
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_cli<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let (code, text) = match execute(&cli.command) {
        Ok(result) => result,
        Err(f) => {
            let _ = writeln!(err, "rootlab: {}", f.message);
            if f.code == EXIT_USAGE {
                let _ = writeln!(err, "run `rootlab --help` for usage");
            }
            return f.code;
        }
    };
    let written = match &cli.output {
        Some(path) => fs::write(path, &text).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => out.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    };
    match written {
        Ok(()) => code,
        Err(message) => {
            let _ = writeln!(err, "rootlab: {message}");
            EXIT_FAILED
        }
    }
}

fn execute(command: &Command) -> Result<(i32, String), Failure> {
    match command {
        Command::Roots(ty) => {
            let rs = system(ty)?;
            let mut text = String::new();
            for r in rs.roots() {
                text.push_str(&format!("{r}\n"));
            }
            Ok((EXIT_OK, text))
        }
        Command::Orbit { ty, vector, scale, format } => {
            let rs = system(ty)?;
            let base = parse_vector(&rs, vector)?;
            let c = parse_scale(scale.as_deref())?.unwrap_or_else(|| int(1));
            let orbit = full_orbit(&rs, &base.scale(&c));
            let text = match format {
                Format::Json => json(&orbit.points)?,
                Format::Text => {
                    let mut text = format!("size {}\n", orbit.len());
                    for p in &orbit.points {
                        text.push_str(&format!("{p}\n"));
                    }
                    text
                }
            };
            Ok((EXIT_OK, text))
        }
        Command::Polar { ty, format } => {
            let rs = system(ty)?;
            let polar = PolarOutput {
                halfspaces: polar_hrep(&rs).halfspaces,
                vertices: polar_vertices(&rs)?,
                facet_indices: standard_facet_indices(&rs),
            };
            let text = match format {
                Format::Json => json(&polar)?,
                Format::Text => polar.to_text(),
            };
            Ok((EXIT_OK, text))
        }
        Command::ZonotopeCheck { ty, j, scale } => {
            let rs = system(ty)?;
            let j = j.or_else(|| zonotope_index(rs.label())).unwrap_or(1);
            if j == 0 || j > rs.rank() {
                return Err(Failure::usage(format!("--j must lie in 1..={}", rs.rank())));
            }
            let c = match parse_scale(scale.as_deref())? {
                Some(c) => c,
                None => critical_scale(&rs, j)?,
            };
            let report = zt_equals_polar(&rs, j, &c)?;
            let code = if report.equal { EXIT_OK } else { EXIT_FAILED };
            Ok((code, json(&report)?))
        }
        Command::Verify { target: VerifyTarget::All, max_rank, format, timings } => {
            if *max_rank == 0 {
                return Err(Failure::usage("--max-rank must be at least 1"));
            }
            let mut reports = run_all(*max_rank);
            if !timings {
                for r in &mut reports {
                    r.elapsed_ms = None;
                }
            }
            let code = if reports.iter().all(VerificationReport::passed) { EXIT_OK } else { EXIT_FAILED };
            let text = match format {
                Format::Json => json(&reports)?,
                Format::Text => reports_to_text(&reports),
            };
            Ok((code, text))
        }
    }
}

fn system(ty: &TypeArgs) -> Result<RootSystem, Failure> {
    let family: Family = ty.family.parse().map_err(|e: rootlab::Error| Failure::usage(e.to_string()))?;
    let label = TypeLabel::new(family, ty.rank).map_err(|e| Failure::usage(e.to_string()))?;
    Ok(RootSystem::new(label))
}

fn parse_scale(text: Option<&str>) -> Result<Option<Rational>, Failure> {
    text.map(|s| parse_rational(s).map_err(|e| Failure::usage(format!("--scale: {e}")))).transpose()
}

fn parse_vector(rs: &RootSystem, text: &str) -> Result<RationalVector, Failure> {
    let indexed = |prefix: &str| -> Result<Option<usize>, Failure> {
        match text.strip_prefix(prefix) {
            Some(j) => j.parse().map(Some).map_err(|_| Failure::usage(format!("--vector: bad index in {text:?}"))),
            None => Ok(None),
        }
    };
    let usage = |e: rootlab::Error| Failure::usage(format!("--vector: {e}"));
    if let Some(j) = indexed("coweight:")? {
        return rs.coweight(j).cloned().map_err(usage);
    }
    if let Some(j) = indexed("weight:")? {
        return rs.weight(j).cloned().map_err(usage);
    }
    let v = RationalVector::parse(text).map_err(usage)?;
    if v.dim() != rs.rank() {
        return Err(Failure::usage(format!("--vector: expected {} coordinates, found {}", rs.rank(), v.dim())));
    }
    Ok(v)
}

fn json<T: Serialize>(value: &T) -> Result<String, Failure> {
    let mut text = serde_json::to_string_pretty(value).map_err(|e| Failure::failed(e.to_string()))?;
    text.push('\n');
    Ok(text)
}

#[derive(Serialize)]
struct PolarOutput {
    halfspaces: Vec<Halfspace>,
    vertices: Vec<RationalVector>,
    facet_indices: Vec<usize>,
}

impl PolarOutput {
    fn to_text(&self) -> String {
        let mut text = format!("halfspaces {}\n", self.halfspaces.len());
        for h in &self.halfspaces {
            text.push_str(&format!("{} <= {}\n", h.normal, h.offset));
        }
        text.push_str(&format!("vertices {}\n", self.vertices.len()));
        for v in &self.vertices {
            text.push_str(&format!("{v}\n"));
        }
        let indices: Vec<String> = self.facet_indices.iter().map(ToString::to_string).collect();
        text.push_str(&format!("facet_indices {}\n", indices.join(" ")));
        text
    }
}

fn reports_to_text(reports: &[VerificationReport]) -> String {
    let mut text = String::new();
    for r in reports {
        let status = if r.passed() { "PASS" } else { "FAIL" };
        match r.elapsed_ms {
            Some(ms) => text.push_str(&format!("{status} {} ({ms} ms)\n", r.clause)),
            None => text.push_str(&format!("{status} {}\n", r.clause)),
        }
        if let Some(e) = r.witnesses.get("error") {
            text.push_str(&format!("  error: {e}\n"));
        }
    }
    let passed = reports.iter().filter(|r| r.passed()).count();
    text.push_str(&format!("{passed}/{} passed\n", reports.len()));
    text
}
