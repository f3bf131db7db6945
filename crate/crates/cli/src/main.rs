use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use symqres::calculus::StepCounts;
use symqres::{
    breaker_clauses, check_proof, eliminate_symmetry_steps, family_symmetries, gen_family,
    parse_qdimacs, parse_symmetries, parse_trace, prove, serialize_qdimacs, serialize_symmetries,
    serialize_trace, Evaluator, Family, Proof, Qbf, Strategy, Symmetry,
};

/// Generate, prove, and check QBF refutations with symmetry reasoning.
#[derive(Parser)]
#[command(name = "symqres", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, ValueEnum)]
enum FamilyArg {
    Kbkf,
    Quparity,
    KbkfHard,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Kbkf => Family::Kbkf,
            FamilyArg::Quparity => Family::Quparity,
            FamilyArg::KbkfHard => Family::KbkfHard,
        }
    }
}

#[derive(Copy, Clone, ValueEnum)]
enum StrategyArg {
    Breaker,
    Symrule,
}

#[derive(Subcommand)]
enum Command {
    /// Write a family instance as QDIMACS.
    Gen {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        /// Append the symmetry breaker clauses.
        #[arg(long)]
        with_breaker: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the family symmetries to this file.
        #[arg(long)]
        syms: Option<PathBuf>,
    },
    /// Write a short refutation trace for a family instance.
    Prove {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        strategy: StrategyArg,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the refuted formula (including any breaker clauses).
        #[arg(long)]
        formula_out: Option<PathBuf>,
        /// Write the symmetries the trace refers to.
        #[arg(long)]
        syms_out: Option<PathBuf>,
    },
    /// Check a trace against a formula.
    Check {
        formula: PathBuf,
        trace: PathBuf,
        #[arg(long)]
        syms: Option<PathBuf>,
        /// Reject symmetry steps.
        #[arg(long)]
        no_sym: bool,
        #[arg(long)]
        json: bool,
    },
    /// Rewrite a trace into one without symmetry steps.
    Desym {
        formula: PathBuf,
        trace: PathBuf,
        #[arg(long)]
        syms: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Decide a small formula by exhaustive game evaluation.
    Eval {
        formula: PathBuf,
        #[arg(long, default_value_t = symqres::oracle::DEFAULT_MAX_VARS)]
        max_vars: usize,
    },
    /// Symmetry file operations.
    Sym {
        #[command(subcommand)]
        command: SymCommand,
    },
    /// Print step tallies of a trace.
    Stats {
        trace: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum SymCommand {
    /// Report for each symmetry whether it is a symmetry of the formula.
    Verify { formula: PathBuf, symfile: PathBuf },
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn write_or_print(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => write(p, text),
        None => io::stdout()
            .write_all(text.as_bytes())
            .context("writing to stdout"),
    }
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn load_formula(path: &Path) -> Result<Qbf> {
    parse_qdimacs(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn load_trace(path: &Path) -> Result<Proof> {
    parse_trace(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn load_syms(path: Option<&Path>) -> Result<Vec<Symmetry>> {
    let Some(path) = path else {
        return Ok(Vec::new());
    };
    parse_symmetries(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn counts_json(c: &StepCounts) -> serde_json::Value {
    json!({
        "axioms": c.axioms,
        "resolutions": c.resolutions,
        "reductions": c.reductions,
        "symmetries": c.symmetries,
        "rule_steps": c.rule_steps(),
        "total": c.total(),
    })
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Gen {
            family,
            n,
            with_breaker,
            out,
            syms,
        } => {
            let family = Family::from(family);
            let mut q = gen_family(family, n)?;
            let symmetries = family_symmetries(family, n)?;
            if with_breaker {
                q = q.with_clauses(breaker_clauses(&q, &symmetries)?)?;
            }
            if let Some(path) = syms {
                write(&path, &serialize_symmetries(&symmetries))?;
            }
            write_or_print(out.as_deref(), &serialize_qdimacs(&q))?;
        }
        Command::Prove {
            family,
            n,
            strategy,
            out,
            formula_out,
            syms_out,
        } => {
            let strategy = match strategy {
                StrategyArg::Breaker => Strategy::Breaker,
                StrategyArg::Symrule => Strategy::SymRule,
            };
            let sp = prove(family.into(), n, strategy)?;
            if let Some(path) = formula_out {
                write(&path, &serialize_qdimacs(&sp.formula))?;
            }
            if let Some(path) = syms_out {
                write(&path, &serialize_symmetries(&sp.symmetries))?;
            }
            write_or_print(out.as_deref(), &serialize_trace(&sp.proof))?;
        }
        Command::Check {
            formula,
            trace,
            syms,
            no_sym,
            json,
        } => {
            let q = load_formula(&formula)?;
            let pf = load_trace(&trace)?;
            let symmetries = load_syms(syms.as_deref())?;
            let report = check_proof(&q, &symmetries, &pf, !no_sym);
            let verdict = if report.accepted() { "ACCEPT" } else { "REJECT" };
            if json {
                let value = json!({
                    "verdict": verdict,
                    "failing_step": report.failing_step,
                    "reason": report.reason.as_ref().map(ToString::to_string),
                    "counts": counts_json(&report.counts),
                });
                println!("{value}");
            } else {
                println!("{verdict}");
                if let (Some(step), Some(reason)) = (report.failing_step, &report.reason) {
                    println!("failing step {step}: {reason}");
                }
                println!("rule steps {}", report.counts.rule_steps());
            }
            if !report.accepted() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Desym {
            formula,
            trace,
            syms,
            out,
        } => {
            let q = load_formula(&formula)?;
            let pf = load_trace(&trace)?;
            let symmetries = load_syms(Some(&syms))?;
            let plain = eliminate_symmetry_steps(&q, &symmetries, &pf)?;
            write(&out, &serialize_trace(&plain))?;
        }
        Command::Eval { formula, max_vars } => {
            let q = load_formula(&formula)?;
            let value = Evaluator::new(max_vars).evaluate(&q)?;
            println!("{}", if value { "TRUE" } else { "FALSE" });
            if !value {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Sym {
            command: SymCommand::Verify { formula, symfile },
        } => {
            let q = load_formula(&formula)?;
            let symmetries = load_syms(Some(&symfile))?;
            let mut all = true;
            for s in &symmetries {
                let verdict = match s.is_admissible(q.prefix()) {
                    Err(e) => format!("INVALID ({e})"),
                    Ok(false) => "INVALID (moves a variable out of its block)".to_string(),
                    Ok(true) if s.is_symmetry(&q) => "SYMMETRY".to_string(),
                    Ok(true) => "INVALID (does not preserve the matrix)".to_string(),
                };
                all &= verdict == "SYMMETRY";
                println!("{} {verdict}", s.name());
            }
            if !all {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Stats { trace, json } => {
            let c = load_trace(&trace)?.counts();
            if json {
                println!("{}", counts_json(&c));
            } else {
                println!("axioms {}", c.axioms);
                println!("resolutions {}", c.resolutions);
                println!("reductions {}", c.reductions);
                println!("symmetries {}", c.symmetries);
                println!("rule steps {}", c.rule_steps());
                println!("total {}", c.total());
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
