//! The `symgen` command line.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::dcenum::{
    build_image, double_cosets, emit_graph, verify_relators_in_image, CollapsedGraph, GraphFormat,
    SymImage,
};
use crate::error::Error;
use crate::fpgroup::DEFAULT_MAX_COSETS;
use crate::perm::Perm;
use crate::spec_file::{GroupSpecFile, LoadedSpec};
use crate::symrep::{Mode, SymContext, SymElement};

/// Fixtures shipped with the binary, by file stem.
pub const BUNDLED: [(&str, &str); 3] = [
    ("l2_19", include_str!("../fixtures/l2_19.json")),
    ("u3_3", include_str!("../fixtures/u3_3.json")),
    ("5sq_d6", include_str!("../fixtures/5sq_d6.json")),
];

pub const MAX_COSETS_VAR: &str = "SYMGEN_MAX_COSETS";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Lib(#[from] Error),
    #[error("expectation mismatch:\n{0}")]
    Mismatch(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Lib(e) => e.exit_code(),
            CliError::Mismatch(_) => 3,
            CliError::Io(_) => 2,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(
    name = "symgen",
    version,
    about = "Symmetric generation of finite groups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Enumerate double cosets and print the table.
    Enumerate { spec: PathBuf },
    /// Write the collapsed Cayley graph.
    Graph {
        spec: PathBuf,
        #[arg(long, default_value = "dot")]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Arithmetic on elements written as `cycles | a.b.c`.
    Elt {
        spec: PathBuf,
        #[command(subcommand)]
        op: EltOp,
    },
    /// Check every bundled fixture.
    Selftest {
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FormatArg {
    Dot,
    Json,
}

impl From<FormatArg> for GraphFormat {
    fn from(f: FormatArg) -> GraphFormat {
        match f {
            FormatArg::Dot => GraphFormat::Dot,
            FormatArg::Json => GraphFormat::Json,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ModeArg {
    Rewrite,
    Image,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Rewrite => Mode::Rewrite,
            ModeArg::Image => Mode::Image,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum EltOp {
    /// Permutation on the cosets to `pi | w`, or back.
    Convert { element: String },
    /// Product of two or more elements.
    Mult {
        #[arg(required = true, num_args = 2..)]
        elements: Vec<String>,
        #[arg(long, default_value = "rewrite")]
        mode: ModeArg,
    },
    Invert {
        element: String,
        #[arg(long, default_value = "rewrite")]
        mode: ModeArg,
    },
    /// Centralizer order and generators.
    Centralize { element: String },
}

/// Coset limit from the environment, or the default.
pub fn max_cosets_from_env() -> CliResult<usize> {
    match std::env::var(MAX_COSETS_VAR) {
        Err(_) => Ok(DEFAULT_MAX_COSETS),
        Ok(v) => v.trim().parse().map_err(|_| {
            CliError::Lib(Error::Parse(format!(
                "{MAX_COSETS_VAR}={v:?} is not a number"
            )))
        }),
    }
}

pub fn load_file(path: &Path) -> CliResult<LoadedSpec> {
    Ok(GroupSpecFile::read(path)?.load()?)
}

fn image_of(loaded: &LoadedSpec, max_cosets: usize) -> CliResult<SymImage> {
    Ok(build_image(
        &loaded.spec,
        loaded.t_words.as_deref(),
        max_cosets,
    )?)
}

/// Enumeration report and any differences from the file's expected values.
#[derive(Clone, Debug)]
pub struct Report {
    pub text: String,
    pub mismatches: Vec<String>,
}

pub fn enumerate(loaded: &LoadedSpec, max_cosets: usize) -> CliResult<Report> {
    let img = image_of(loaded, max_cosets)?;
    let graph = double_cosets(&img)?;
    let checks = verify_relators_in_image(&loaded.spec, &img)?;
    let max_len = img.cst_words().iter().map(|w| w.len()).max().unwrap_or(0);
    let sizes: Vec<String> = graph.sizes().iter().map(usize::to_string).collect();
    let mut text = String::new();
    writeln!(text, "{}", loaded.file.name).unwrap();
    writeln!(
        text,
        "index {}, order {}, nodes {}",
        img.index(),
        img.order(),
        sizes.join("/")
    )
    .unwrap();
    writeln!(
        text,
        "{} double cosets, max word length {}",
        graph.nodes.len(),
        max_len
    )
    .unwrap();
    write_table(&mut text, &graph);
    for c in &checks {
        writeln!(text, "relator {} holds", c.relator).unwrap();
    }
    let mut mismatches = Vec::new();
    if let Some(exp) = &loaded.file.expected {
        let mut check = |what: &str, want: String, got: String| {
            if want != got {
                mismatches.push(format!("{what}: expected {want}, got {got}"));
            }
        };
        if let Some(i) = exp.index {
            check("index", i.to_string(), img.index().to_string());
        }
        if let Some(o) = exp.group_order {
            check("order", o.to_string(), img.order().to_string());
        }
        if let Some(s) = &exp.node_sizes {
            check(
                "node sizes",
                format!("{s:?}"),
                format!("{:?}", graph.sizes()),
            );
        }
        if let Some(s) = &exp.stabilizer_orders {
            let got: Vec<u128> = graph.nodes.iter().map(|d| d.stabilizer_order()).collect();
            check("stabilizer orders", format!("{s:?}"), format!("{got:?}"));
        }
        if let Some(m) = exp.max_word_length {
            check("max word length", m.to_string(), max_len.to_string());
        }
    }
    Ok(Report { text, mismatches })
}

fn write_table(out: &mut String, graph: &CollapsedGraph) {
    let names: Vec<String> = (0..graph.nodes.len()).map(|i| graph.name(i)).collect();
    let width = names
        .iter()
        .map(|s| s.chars().count())
        .max()
        .unwrap_or(0)
        .max(3);
    writeln!(
        out,
        "{:<width$}  {:>6}  {:>10}",
        "rep", "size", "stabilizer"
    )
    .unwrap();
    for (name, d) in names.iter().zip(&graph.nodes) {
        let pad = width - name.chars().count();
        writeln!(
            out,
            "{name}{}  {:>6}  {:>10}",
            " ".repeat(pad),
            d.size(),
            d.stabilizer_order()
        )
        .unwrap();
    }
}

pub fn graph(loaded: &LoadedSpec, format: GraphFormat, max_cosets: usize) -> CliResult<String> {
    let img = image_of(loaded, max_cosets)?;
    Ok(emit_graph(&double_cosets(&img)?, format))
}

fn parse_sym(ctx: &SymContext, text: &str) -> CliResult<SymElement> {
    let e = SymElement::parse(text, ctx.image().spec().labels())?;
    ctx.validate(&e)?;
    Ok(e)
}

pub fn elt(loaded: &LoadedSpec, op: &EltOp, max_cosets: usize) -> CliResult<String> {
    let ctx = SymContext::new(image_of(loaded, max_cosets)?)?;
    let labels = ctx.image().spec().labels();
    let mut out = String::new();
    match op {
        EltOp::Convert { element } => {
            if element.contains('|') {
                let p = ctx.sym2per(&parse_sym(&ctx, element)?)?;
                writeln!(out, "{p}").unwrap();
            } else {
                let p = Perm::parse_cycles(element, ctx.image().index())?;
                writeln!(out, "{}", ctx.per2sym(&p)?.format(labels)).unwrap();
            }
        }
        EltOp::Mult { elements, mode } => {
            let mut acc = ctx.identity();
            for e in elements {
                acc = ctx.mult(&acc, &parse_sym(&ctx, e)?, (*mode).into())?;
            }
            writeln!(out, "{}", acc.format(labels)).unwrap();
        }
        EltOp::Invert { element, mode } => {
            let e = ctx.invert_sym(&parse_sym(&ctx, element)?, (*mode).into())?;
            writeln!(out, "{}", e.format(labels)).unwrap();
        }
        EltOp::Centralize { element } => {
            let (order, gens) = ctx.cenelt(&parse_sym(&ctx, element)?)?;
            writeln!(out, "order {order}").unwrap();
            for g in gens {
                writeln!(out, "{}", g.format(labels)).unwrap();
            }
        }
    }
    Ok(out)
}

fn selftest_one(name: &str, json: &str, max_cosets: usize) -> CliResult<String> {
    let loaded = GroupSpecFile::from_json(json)?.load()?;
    let report = enumerate(&loaded, max_cosets)?;
    if !report.mismatches.is_empty() {
        return Err(CliError::Mismatch(format!(
            "{name}: {}",
            report.mismatches.join("; ")
        )));
    }
    let ctx = SymContext::new(image_of(&loaded, max_cosets)?)?;
    for g in ctx.image().group().generators() {
        let e = ctx.per2sym(g)?;
        if ctx.sym2per(&e)? != *g {
            return Err(CliError::Mismatch(format!(
                "{name}: conversion roundtrip failed"
            )));
        }
    }
    Ok(format!("PASS {name} ({})", loaded.file.name))
}

/// Runs every bundled fixture, at most `jobs` at a time.
pub fn selftest(jobs: usize, max_cosets: usize) -> Vec<(String, CliResult<String>)> {
    let jobs = jobs.max(1);
    let mut results = Vec::new();
    for chunk in BUNDLED.chunks(jobs) {
        std::thread::scope(|s| {
            let handles: Vec<_> = chunk
                .iter()
                .map(|&(name, json)| (name, s.spawn(move || selftest_one(name, json, max_cosets))))
                .collect();
            for (name, h) in handles {
                let r = h.join().unwrap_or_else(|_| {
                    Err(CliError::Lib(Error::Internal(format!("{name} panicked"))))
                });
                results.push((name.to_string(), r));
            }
        });
    }
    results
}

fn write_out(path: &Path, text: &str) -> CliResult<()> {
    std::fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

/// Executes a parsed command, writing results to `out`. Returns the exit
/// code.
pub fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute_inner(cli, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute_inner(cli: Cli, out: &mut dyn Write) -> CliResult<()> {
    let max_cosets = max_cosets_from_env()?;
    let text = match cli.command {
        Command::Enumerate { spec } => {
            let report = enumerate(&load_file(&spec)?, max_cosets)?;
            emit(out, &report.text)?;
            if !report.mismatches.is_empty() {
                return Err(CliError::Mismatch(report.mismatches.join("\n")));
            }
            return Ok(());
        }
        Command::Graph {
            spec,
            format,
            out: path,
        } => {
            let text = graph(&load_file(&spec)?, format.into(), max_cosets)?;
            match path {
                Some(p) => return write_out(&p, &text),
                None => text,
            }
        }
        Command::Elt { spec, op } => elt(&load_file(&spec)?, &op, max_cosets)?,
        Command::Selftest { jobs } => {
            let mut first_err = None;
            for (name, r) in selftest(jobs, max_cosets) {
                match r {
                    Ok(line) => emit(out, &format!("{line}\n"))?,
                    Err(e) => {
                        emit(out, &format!("FAIL {name}: {e}\n"))?;
                        first_err.get_or_insert(e);
                    }
                }
            }
            return first_err.map_or(Ok(()), Err);
        }
    };
    emit(out, &text)
}

fn emit(out: &mut dyn Write, text: &str) -> CliResult<()> {
    out.write_all(text.as_bytes())
        .map_err(|e| CliError::Io(e.to_string()))
}

/// Parses arguments and runs. Argument errors exit with 2.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(cli, out, err),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            code
        }
    }
}
