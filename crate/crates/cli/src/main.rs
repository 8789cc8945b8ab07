use std::fmt::Display;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use fde_core::consequence::first_difference;
use fde_core::interop::{pair_names, SynonymPair};
use fde_core::proof::AuditError;
use fde_core::{
    check_proof, check_synonymy, constant_check, countermodel, entails, expand, parse, parse_proof, soundness_audit,
    synthesize, translate, truth_table, valid, Constant, DefinitionSet, Formula, Logic, Sequent, TranslationScheme,
    TruthFunction,
};

#[derive(Parser)]
#[command(
    name = "fde",
    version,
    about = "Truth tables, consequence and proofs for the FDE family of logics"
)]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the truth table of a formula.
    Table {
        #[arg(short, long, value_parser = logic_arg)]
        logic: &'static Logic,
        formula: String,
    },
    /// Decide whether a formula is designated on every valuation.
    Valid {
        #[arg(short, long, value_parser = logic_arg)]
        logic: &'static Logic,
        formula: String,
    },
    /// Decide whether the premises entail the conclusion.
    Entails {
        #[arg(short, long, value_parser = logic_arg)]
        logic: &'static Logic,
        /// Premises separated by `;`.
        #[arg(long, default_value = "")]
        premises: String,
        conclusion: String,
    },
    /// Print the first countermodel to an entailment, or `none`.
    Countermodel {
        #[arg(short, long, value_parser = logic_arg)]
        logic: &'static Logic,
        #[arg(long, default_value = "")]
        premises: String,
        conclusion: String,
    },
    /// Decide whether two formulas take the same value everywhere.
    Equiv {
        #[arg(short, long, value_parser = logic_arg)]
        logic: &'static Logic,
        left: String,
        right: String,
    },
    /// Unfold defined connectives and constants into primitives.
    Expand { formula: String },
    /// Evaluate the quantified constants #t, #f, #b, #n.
    Constants {
        #[arg(short, long, value_parser = logic_arg)]
        logic: &'static Logic,
    },
    /// Translate a formula along a built-in scheme.
    Translate {
        #[arg(long)]
        scheme: String,
        formula: String,
    },
    /// Check the synonymy conditions for a pair of logics.
    Synonymy {
        #[arg(long)]
        pair: String,
        /// Formula size bound, in nodes.
        #[arg(long, default_value_t = 7)]
        bound: usize,
    },
    /// Build a formula with a given truth table.
    Synthesize {
        #[arg(long)]
        table: PathBuf,
    },
    /// Check a proof file step by step.
    Check { file: PathBuf },
    /// Check a proof, then confirm it semantically over every valuation.
    Audit { file: PathBuf },
}

fn logic_arg(name: &str) -> Result<&'static Logic, String> {
    Logic::named(name).map_err(|e| e.to_string())
}

/// What a verb produced: a verdict plus text and JSON renderings.
struct Outcome {
    affirmative: bool,
    text: String,
    json: Value,
}

impl Outcome {
    fn yes(text: impl Into<String>, json: Value) -> Outcome {
        Outcome {
            affirmative: true,
            text: text.into(),
            json,
        }
    }

    fn verdict(affirmative: bool, text: impl Into<String>, json: Value) -> Outcome {
        Outcome {
            affirmative,
            text: text.into(),
            json,
        }
    }
}

fn fail(e: impl Display) -> String {
    e.to_string()
}

fn formula(s: &str) -> Result<Formula, String> {
    parse(s).map_err(|e| format!("`{s}`: {e}"))
}

fn premises(list: &str) -> Result<Vec<Formula>, String> {
    list.split(';')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(formula)
        .collect()
}

fn read(path: &PathBuf) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn with_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn run(command: Command) -> Result<Outcome, String> {
    Ok(match command {
        Command::Table { logic, formula: f } => {
            let t = truth_table(logic, &formula(&f)?).map_err(fail)?;
            Outcome::yes(t.to_string(), serde_json::to_value(&t).map_err(fail)?)
        }
        Command::Valid { logic, formula: f } => {
            let f = formula(&f)?;
            if valid(logic, &f).map_err(fail)? {
                Outcome::yes("valid\n", json!({"logic": logic.name(), "valid": true}))
            } else {
                let s = Sequent::new(Vec::new(), f);
                let v = countermodel(logic, &s)
                    .map_err(fail)?
                    .expect("invalid formula has a witness");
                Outcome::verdict(
                    false,
                    format!("invalid\ncountermodel: {v}\n"),
                    json!({"logic": logic.name(), "valid": false, "countermodel": v}),
                )
            }
        }
        Command::Entails {
            logic,
            premises: ps,
            conclusion,
        } => {
            let s = Sequent::new(premises(&ps)?, formula(&conclusion)?);
            if entails(logic, &s).map_err(fail)? {
                Outcome::yes("entails\n", json!({"logic": logic.name(), "entails": true}))
            } else {
                let v = countermodel(logic, &s)
                    .map_err(fail)?
                    .expect("non-entailment has a witness");
                Outcome::verdict(
                    false,
                    format!("does not entail\ncountermodel: {v}\n"),
                    json!({"logic": logic.name(), "entails": false, "countermodel": v}),
                )
            }
        }
        Command::Countermodel {
            logic,
            premises: ps,
            conclusion,
        } => {
            let s = Sequent::new(premises(&ps)?, formula(&conclusion)?);
            match countermodel(logic, &s).map_err(fail)? {
                None => Outcome::yes("none\n", json!({"logic": logic.name(), "countermodel": null})),
                Some(v) => Outcome::verdict(
                    false,
                    format!("{v}\n"),
                    json!({"logic": logic.name(), "countermodel": v}),
                ),
            }
        }
        Command::Equiv { logic, left, right } => {
            let (f, g) = (formula(&left)?, formula(&right)?);
            match first_difference(logic, &f, logic, &g).map_err(fail)? {
                None => Outcome::yes("equivalent\n", json!({"logic": logic.name(), "equivalent": true})),
                Some(v) => Outcome::verdict(
                    false,
                    format!("not equivalent\ndiffer at: {v}\n"),
                    json!({"logic": logic.name(), "equivalent": false, "differ_at": v}),
                ),
            }
        }
        Command::Expand { formula: f } => {
            let e = expand(&formula(&f)?, &DefinitionSet::standard());
            Outcome::yes(format!("{e}\n"), json!({"formula": e.to_string()}))
        }
        Command::Constants { logic } => {
            let values = constant_check(logic).map_err(fail)?;
            let order = [Constant::Verum, Constant::Falsum, Constant::Both, Constant::Neither];
            let cells: Vec<String> = order.iter().map(|c| format!("{}={}", c.letter(), values[c])).collect();
            let obj: serde_json::Map<String, Value> = order
                .iter()
                .map(|c| (c.letter().to_string(), json!(values[c])))
                .collect();
            Outcome::yes(
                format!("{}\n", cells.join(" ")),
                json!({"logic": logic.name(), "constants": obj}),
            )
        }
        Command::Translate { scheme, formula: f } => {
            let s = TranslationScheme::builtin(&scheme).map_err(fail)?;
            let out = translate(&formula(&f)?, &s);
            Outcome::yes(
                format!("{out}\n"),
                json!({"scheme": s.name, "source": s.source.name(), "target": s.target.name(), "formula": out.to_string()}),
            )
        }
        Command::Synonymy { pair, bound } => {
            let p = SynonymPair::named(&pair).map_err(|e| format!("{e}; known pairs: {}", pair_names().join(", ")))?;
            let report = check_synonymy(&p, bound).map_err(fail)?;
            Outcome::verdict(
                report.passed(),
                report.to_string(),
                serde_json::to_value(&report).map_err(fail)?,
            )
        }
        Command::Synthesize { table } => {
            let tf: TruthFunction = read(&table)?.parse().map_err(|e| format!("{}: {e}", table.display()))?;
            let f = synthesize(&tf);
            Outcome::yes(format!("{f}\n"), json!({"arity": tf.arity(), "formula": f.to_string()}))
        }
        Command::Check { file } => {
            let p = parse_proof(&read(&file)?).map_err(|e| format!("{}: {e}", file.display()))?;
            let report = check_proof(&p);
            Outcome::verdict(
                report.accepted,
                report.to_string(),
                serde_json::to_value(&report).map_err(fail)?,
            )
        }
        Command::Audit { file } => {
            let p = parse_proof(&read(&file)?).map_err(|e| format!("{}: {e}", file.display()))?;
            match soundness_audit(&p) {
                Ok(a) => Outcome::verdict(a.passed(), a.to_string(), serde_json::to_value(&a).map_err(fail)?),
                Err(AuditError::Rejected(report)) => Outcome::verdict(
                    false,
                    report.to_string(),
                    json!({"rejected": serde_json::to_value(&report).map_err(fail)?}),
                ),
                Err(e) => return Err(e.to_string()),
            }
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            if cli.json {
                println!("{}", out.json);
            } else {
                print!("{}", with_newline(out.text));
            }
            ExitCode::from(if out.affirmative { 0 } else { 1 })
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
