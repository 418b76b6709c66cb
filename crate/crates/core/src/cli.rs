//! Command-line front end. Exit codes: 0 success, 1 a verification failed,
//! 2 usage or parameter error.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::abelian::GroupContext;
use crate::bounds::{exactness_certificate, record_table};
use crate::digraph::{CayleyDigraph, DigraphSpec, ExportFormat, DEFAULT_VERTEX_BUDGET};
use crate::error::{Error, Result};
use crate::fiber::{
    automorphism_check, covers_bruteforce, fiber_matrix, DEFAULT_ENUMERATION_BUDGET,
};
use crate::semidirect::Gamma;
use crate::words::{covering_word, targets, verify_word_family};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "dcay",
    version,
    about = "Large Cayley digraphs of odd diameter over H^k x| D_k"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    /// Order of the coefficient group Z_n (degree is 2n, or 2n+1 with --odd-degree).
    #[arg(long)]
    pub n: u32,
    /// Odd target diameter.
    #[arg(long)]
    pub k: usize,
    /// Bipartite construction over k-1 coordinates.
    #[arg(long)]
    pub bipartite: bool,
    /// Add the extra generator for odd degree.
    #[arg(long)]
    pub odd_degree: bool,
    /// Maximum number of vertices to materialize.
    #[arg(long, default_value_t = DEFAULT_VERTEX_BUDGET)]
    pub budget: u64,
}

impl GraphArgs {
    fn spec(&self) -> Result<DigraphSpec> {
        DigraphSpec::new(self.n, self.k, self.bipartite, self.odd_degree)
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Format {
    Edges,
    Dot,
    Json,
}

impl From<Format> for ExportFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Edges => ExportFormat::EdgeList,
            Format::Dot => ExportFormat::Dot,
            Format::Json => ExportFormat::JsonMeta,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Construct a digraph and export it.
    Generate {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_enum, default_value_t = Format::Edges)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Measure the diameter by BFS from the identity.
    Diameter {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        json: bool,
    },
    /// Check every covering word for k: length, value, determinant, elimination, covering.
    VerifyWords {
        #[arg(long)]
        k: usize,
        /// Group order used for the brute-force covering column.
        #[arg(long, default_value_t = 2)]
        n: u32,
        /// Skip brute-force covering when n^k exceeds this.
        #[arg(long, default_value_t = 100_000)]
        budget: u64,
        #[arg(long)]
        json: bool,
    },
    /// Brute-force covering and automorphism check for every covering word.
    VerifyCover {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_BUDGET)]
        budget: u64,
        #[arg(long)]
        json: bool,
    },
    /// Order, Moore bound for k-1 and exactness certificate for one (d, k).
    Bounds {
        #[arg(long)]
        d: u64,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        bipartite: bool,
        #[arg(long)]
        json: bool,
    },
    /// CSV of certificates over a degree range.
    Table {
        /// Odd diameter; repeat for several.
        #[arg(long, required = true)]
        k: Vec<u32>,
        #[arg(long, default_value_t = 2)]
        d_min: u64,
        #[arg(long)]
        d_max: u64,
        #[arg(long)]
        bipartite: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Serialize)]
struct CoverLine {
    target: String,
    word: String,
    covers: bool,
    automorphism: bool,
}

#[derive(Debug, Serialize)]
struct CoverReport {
    n: u32,
    k: usize,
    passed: usize,
    total: usize,
    words: Vec<CoverLine>,
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_FAILED,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn open_sink<'a>(path: &Option<PathBuf>, out: &'a mut dyn Write) -> Result<Box<dyn Write + 'a>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(out),
    })
}

fn execute(command: Command, out: &mut dyn Write) -> Result<bool> {
    match command {
        Command::Generate {
            graph,
            format,
            out: path,
        } => {
            let g = CayleyDigraph::new(graph.spec()?)?;
            let mut sink = open_sink(&path, out)?;
            g.export(format.into(), &mut sink, graph.budget)?;
            sink.flush()?;
            Ok(true)
        }
        Command::Diameter { graph, json } => {
            let g = CayleyDigraph::new(graph.spec()?)?;
            let report = g.report(graph.budget)?;
            if json {
                serde_json::to_writer(&mut *out, &report)?;
                writeln!(out)?;
            } else {
                writeln!(out, "{report}")?;
            }
            Ok(report.diameter_measured as usize <= graph.k)
        }
        Command::VerifyWords { k, n, budget, json } => {
            let gamma = Gamma::new(GroupContext::new(n, k)?);
            let report = verify_word_family(&gamma, budget);
            if json {
                serde_json::to_writer(&mut *out, &report)?;
                writeln!(out)?;
            } else {
                writeln!(out, "{report}")?;
            }
            Ok(report.all_passed())
        }
        Command::VerifyCover { k, n, budget, json } => {
            let ctx = GroupContext::new(n, k)?;
            let gamma = Gamma::new(ctx);
            let mut words = Vec::new();
            for t in targets(&ctx) {
                let w = covering_word(&gamma, t)?;
                let covers = covers_bruteforce(&w, &gamma, budget)?;
                let automorphism = automorphism_check(&fiber_matrix(&w, &gamma), &ctx, budget)?;
                words.push(CoverLine {
                    target: t.to_string(),
                    word: w.to_string(),
                    covers,
                    automorphism,
                });
            }
            let passed = words.iter().filter(|l| l.covers && l.automorphism).count();
            let report = CoverReport {
                n,
                k,
                passed,
                total: words.len(),
                words,
            };
            if json {
                serde_json::to_writer(&mut *out, &report)?;
                writeln!(out)?;
            } else {
                for l in &report.words {
                    writeln!(
                        out,
                        "{:<8} {:<w$} covers={} automorphism={}",
                        l.target,
                        l.word,
                        l.covers,
                        l.automorphism,
                        w = k
                    )?;
                }
                writeln!(out, "{}/{} pass", report.passed, report.total)?;
            }
            Ok(report.passed == report.total)
        }
        Command::Bounds {
            d,
            k,
            bipartite,
            json,
        } => {
            let report = exactness_certificate(d, k, bipartite)?;
            if json {
                serde_json::to_writer(&mut *out, &report)?;
                writeln!(out)?;
            } else {
                writeln!(out, "{report}")?;
            }
            Ok(true)
        }
        Command::Table {
            k,
            d_min,
            d_max,
            bipartite,
            out: path,
        } => {
            if d_min < 2 || d_max < d_min {
                return Err(Error::InvalidBound(format!(
                    "degree range {d_min}..={d_max} must satisfy 2 <= d-min <= d-max"
                )));
            }
            let mut sink = open_sink(&path, out)?;
            record_table(d_min..=d_max, &k, bipartite, &mut sink)?;
            sink.flush()?;
            Ok(true)
        }
    }
}
