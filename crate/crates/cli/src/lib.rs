//! Command-line front end for `ctxtree`.
//!
//! Exit codes: 0 on success (or when a checked property holds), 1 when a
//! checked property fails, 2 on parse or validation errors.

pub mod format;

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use ctxtree::examples;
use ctxtree::lattice::{contained_at_root, intersection_at_root, uncontained_context, union_at_root};
use ctxtree::pm::{closure, closure_oracle, metrics, pm_chain, Criterion};
use ctxtree::scot::{MarkovChain, Scot, StationaryOptions};
use ctxtree::{count_complete_trees, ContextTree, Probability, TreeError, Word};
use num_traits::ToPrimitive;
use serde::Serialize;
use thiserror::Error;

use format::{AnyScot, Document, FormatError};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Format { path: String, source: FormatError },
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Tree(#[from] TreeError),
    #[error("{0}")]
    Usage(String),
}

/// What a command printed and how the process should exit.
#[derive(Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }
}

#[derive(Parser, Debug)]
#[command(name = "ctxtree", version, about = "Context trees: perfect memory, closure, lattice operations and SCOTs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum CriterionArg {
    Def4,
    Thm2,
    Cor1,
    Cor2,
    All,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Method {
    Trim,
    Oracle,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum LatticeOp {
    Union,
    Intersect,
    /// Exit 0 when the first tree is contained at the root in the second.
    Contains,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Family {
    Comb,
    Sparse,
    Minfull,
    Wide,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Parse a tree or SCOT file and report whether it is valid.
    Validate { file: PathBuf },
    /// Test perfect memory; prints a witness when it fails.
    Check {
        #[arg(long, value_enum, default_value = "all")]
        criterion: CriterionArg,
        file: PathBuf,
    },
    /// Perfect-memory closure.
    Close {
        #[arg(long, value_enum, default_value = "trim")]
        method: Method,
        #[arg(short, long)]
        output: Option<PathBuf>,
        file: PathBuf,
    },
    /// Smallest complete tree containing the input.
    Complete { file: PathBuf },
    /// Depth, counts and sparsity ratios.
    Metrics {
        #[arg(long)]
        json: bool,
        file: PathBuf,
    },
    /// Descending chain of perfect-memory trees from A down to B, one file per step.
    Chain {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
    },
    /// Union or intersection at the root, or a containment test.
    Lattice {
        #[arg(value_enum)]
        op: LatticeOp,
        a: PathBuf,
        b: PathBuf,
    },
    /// Generate a member of one of the example families.
    Example {
        #[arg(value_enum)]
        family: Family,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        depth: usize,
    },
    /// Number of complete trees of depth at most DEPTH over N letters.
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        depth: usize,
    },
    /// Transition matrix of the leaf chain of a SCOT, as CSV.
    Markov {
        scot: PathBuf,
        /// Print the stationary distribution instead of the matrix.
        #[arg(long)]
        stationary: bool,
    },
    /// Sample a symbol sequence from a SCOT.
    Simulate {
        scot: PathBuf,
        #[arg(long)]
        steps: usize,
        #[arg(long)]
        seed: u64,
        /// Starting context as space-separated symbols, oldest first.
        #[arg(long)]
        init: Option<String>,
    },
}

fn read(path: &Path) -> Result<Document, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    format::parse(&text).map_err(|source| CliError::Format { path: path.display().to_string(), source })
}

fn read_tree(path: &Path) -> Result<ContextTree, CliError> {
    match read(path)? {
        Document::Tree(t) => Ok(t),
        Document::Scot(s) => Ok(s.tree().clone()),
    }
}

fn read_scot(path: &Path) -> Result<AnyScot, CliError> {
    match read(path)? {
        Document::Scot(s) => Ok(s),
        Document::Tree(_) => Err(CliError::Usage(format!("{}: expected a scot v1 file", path.display()))),
    }
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

#[derive(Serialize)]
struct MetricsJson {
    depth: usize,
    leaf_count: usize,
    node_count: usize,
    closure_leaf_count: usize,
    r1: String,
    r1_approx: f64,
    r2: String,
    r2_approx: f64,
    completed: bool,
}

fn run_check(criterion: CriterionArg, t: &ContextTree) -> Result<Outcome, CliError> {
    let criteria: &[Criterion] = match criterion {
        CriterionArg::Def4 => &[Criterion::Def4],
        CriterionArg::Thm2 => &[Criterion::Thm2],
        CriterionArg::Cor1 => &[Criterion::Cor1],
        CriterionArg::Cor2 => &[Criterion::Cor2],
        CriterionArg::All => &Criterion::ALL,
    };
    let mut out = String::new();
    let mut code = 0;
    let alphabet = t.alphabet();
    for c in criteria {
        match c.check(t)?.witness() {
            None => out.push_str(&format!("{}: holds\n", c.name())),
            Some(w) => {
                code = 1;
                out.push_str(&format!("{}: fails: {}\n", c.name(), describe(w, alphabet)));
            }
        }
    }
    Ok(Outcome { stdout: out, code })
}

fn describe(w: &ctxtree::pm::PmWitness, a: &ctxtree::Alphabet) -> String {
    use ctxtree::pm::PmWitness::*;
    let show = |w: &Word| format::state_label(a, w);
    match w {
        Incomplete { node, symbol } => {
            format!("node {} has children but none for symbol {}", show(node), a.token(*symbol))
        }
        MissingNextContext { context, symbol } => format!(
            "no context is a postfix of {} (context {} followed by {})",
            show(&context.push(*symbol)),
            show(context),
            a.token(*symbol)
        ),
        UncontainedSubtree { symbol, context } => format!(
            "context {} of the subtree below {} is not a postfix of any context",
            show(context),
            a.token(*symbol)
        ),
        PrefixNotPostfix { prefix, context } => format!(
            "{}, a prefix of context {}, is not a postfix of any context",
            show(prefix),
            show(context)
        ),
    }
}

fn markov_csv<P: Probability>(mc: &MarkovChain<P>, a: &ctxtree::Alphabet, show: impl Fn(&P) -> String) -> String {
    let labels: Vec<String> = mc.states().iter().map(|w| format::state_label(a, w)).collect();
    let mut out = format!("state,{}\n", labels.join(","));
    for (i, row) in mc.to_dense().iter().enumerate() {
        let cells: Vec<String> = row.iter().map(&show).collect();
        out.push_str(&format!("{},{}\n", labels[i], cells.join(",")));
    }
    out
}

fn stationary_csv<P: Probability>(mc: &MarkovChain<P>, a: &ctxtree::Alphabet) -> Result<String, CliError> {
    let mut out = String::from("state,probability\n");
    if P::is_exact() {
        if let Ok(pi) = mc.solve_stationary() {
            for (w, p) in mc.states().iter().zip(pi) {
                out.push_str(&format!("{},{}\n", format::state_label(a, w), p));
            }
            return Ok(out);
        }
    }
    let st = mc.stationary(&StationaryOptions::default())?;
    for (w, p) in mc.states().iter().zip(&st.distribution) {
        out.push_str(&format!("{},{}\n", format::state_label(a, w), format::decimal17(*p)));
    }
    Ok(out)
}

fn simulate<P: Probability>(s: &Scot<P>, steps: usize, seed: u64, init: Option<&str>) -> Result<String, CliError> {
    let a = s.tree().alphabet();
    let init = match init {
        None => None,
        Some(text) => {
            let mut w = Vec::new();
            for tok in text.split_whitespace() {
                w.push(a.index_of(tok).ok_or_else(|| CliError::Usage(format!("unknown symbol `{tok}` in --init")))?);
            }
            Some(Word::new(w))
        }
    };
    let xs = s.simulate(steps, seed, init.as_ref())?;
    let toks: Vec<&str> = xs.iter().map(|&x| a.token(x)).collect();
    Ok(format!("{}\n", toks.join(" ")))
}

pub fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Validate { file } => {
            let doc = read(&file)?;
            let t = doc.tree();
            let kind = match doc {
                Document::Tree(_) => "ctree",
                Document::Scot(AnyScot::Exact(_)) => "scot (exact)",
                Document::Scot(AnyScot::Float(_)) => "scot (floating)",
            };
            Ok(Outcome::ok(format!(
                "valid {kind}: {} contexts, depth {}, {}\n",
                t.leaf_count(),
                t.depth(),
                if t.is_complete() { "complete" } else { "incomplete" }
            )))
        }
        Command::Check { criterion, file } => run_check(criterion, &read_tree(&file)?),
        Command::Close { method, output, file } => {
            let t = read_tree(&file)?;
            let closed = match method {
                Method::Trim => closure(&t)?,
                Method::Oracle => closure_oracle(&t)?,
            };
            let text = format::render_tree(&closed);
            match output {
                Some(path) => {
                    write(&path, &text)?;
                    Ok(Outcome::ok(String::new()))
                }
                None => Ok(Outcome::ok(text)),
            }
        }
        Command::Complete { file } => Ok(Outcome::ok(format::render_tree(&read_tree(&file)?.complete_hull()?))),
        Command::Metrics { json, file } => {
            let m = metrics(&read_tree(&file)?)?;
            if json {
                let j = MetricsJson {
                    depth: m.depth,
                    leaf_count: m.leaf_count,
                    node_count: m.node_count,
                    closure_leaf_count: m.closure_leaf_count,
                    r1: m.r1.to_string(),
                    r1_approx: m.r1.to_f64().unwrap_or(f64::NAN),
                    r2: m.r2.to_string(),
                    r2_approx: m.r2.to_f64().unwrap_or(f64::NAN),
                    completed: m.completed,
                };
                let text = serde_json::to_string_pretty(&j).expect("plain struct serializes");
                Ok(Outcome::ok(text + "\n"))
            } else {
                Ok(Outcome::ok(format!(
                    "depth {}\nleaves {}\nnodes {}\nclosure leaves {}\nr1 {}\nr2 {}\ncompleted {}\n",
                    m.depth, m.leaf_count, m.node_count, m.closure_leaf_count, m.r1, m.r2, m.completed
                )))
            }
        }
        Command::Chain { a, b, out_dir } => {
            let (ta, tb) = (read_tree(&a)?, read_tree(&b)?);
            let chain = pm_chain(&ta, &tb)?;
            fs::create_dir_all(&out_dir)
                .map_err(|source| CliError::Io { path: out_dir.display().to_string(), source })?;
            let mut out = String::new();
            for (i, t) in chain.iter().enumerate() {
                let path = out_dir.join(format!("chain-{i:03}.ctree"));
                write(&path, &format::render_tree(t))?;
                out.push_str(&format!("{} {} leaves\n", path.display(), t.leaf_count()));
            }
            Ok(Outcome::ok(out))
        }
        Command::Lattice { op, a, b } => {
            let (ta, tb) = (read_tree(&a)?, read_tree(&b)?);
            match op {
                LatticeOp::Union => Ok(Outcome::ok(format::render_tree(&union_at_root(&ta, &tb)?))),
                LatticeOp::Intersect => Ok(Outcome::ok(format::render_tree(&intersection_at_root(&ta, &tb)?))),
                LatticeOp::Contains => {
                    if contained_at_root(&ta, &tb)? {
                        Ok(Outcome::ok("contained\n".into()))
                    } else {
                        let w = uncontained_context(&ta, &tb)?.expect("witness exists");
                        Ok(Outcome {
                            stdout: format!(
                                "not contained: {} is not a postfix of any context\n",
                                format::state_label(ta.alphabet(), &w)
                            ),
                            code: 1,
                        })
                    }
                }
            }
        }
        Command::Example { family, n, depth } => {
            let t = match family {
                Family::Comb => examples::comb(n, depth)?,
                Family::Sparse => examples::sparse_example(),
                Family::Minfull => examples::minimal_full_mc(depth)?,
                Family::Wide => examples::wide_r2(n, depth)?,
            };
            Ok(Outcome::ok(format::render_tree(&t)))
        }
        Command::Count { n, depth } => {
            if n == 0 {
                return Err(CliError::Usage("--n must be at least 1".into()));
            }
            Ok(Outcome::ok(format!("{}\n", count_complete_trees(n, depth))))
        }
        Command::Markov { scot, stationary } => {
            let s = read_scot(&scot)?;
            let a = s.tree().alphabet().clone();
            let text = match (&s, stationary) {
                (AnyScot::Exact(s), false) => markov_csv(&s.build_markov()?, &a, |p| p.to_string()),
                (AnyScot::Float(s), false) => markov_csv(&s.build_markov()?, &a, |p| format::decimal17(*p)),
                (AnyScot::Exact(s), true) => stationary_csv(&s.build_markov()?, &a)?,
                (AnyScot::Float(s), true) => stationary_csv(&s.build_markov()?, &a)?,
            };
            Ok(Outcome::ok(text))
        }
        Command::Simulate { scot, steps, seed, init } => {
            let text = match read_scot(&scot)? {
                AnyScot::Exact(s) => simulate(&s, steps, seed, init.as_deref())?,
                AnyScot::Float(s) => simulate(&s, steps, seed, init.as_deref())?,
            };
            Ok(Outcome::ok(text))
        }
    }
}
