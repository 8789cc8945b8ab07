//! Acceptance checks, one line per criterion. Run with
//! `cargo test -p fde-core --test acceptance`.

use std::collections::HashSet;
use std::fs;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use fde_core::consequence::{
    countermodel, countermodels, entails, equivalent, equivalent_across, table_over, valid, Sequent,
};
use fde_core::interop::{block_closure_values, check_synonymy, constant_check, SynonymPair};
use fde_core::pool::{by_connectives, by_depth, random_table, Bound, Grammar, RandomFormulas, SemanticPool};
use fde_core::proof::{check_proof, parse_proof, soundness_audit, Proof, RuleName};
use fde_core::semantics::Logic;
use fde_core::synthesis::{argument_atoms, find_constant_free_unary, synthesize, TruthFunction};
use fde_core::{evaluate, parse, BinaryOp, Connective, Constant, Formula, TruthValue, Valuation};
use TruthValue::*;

type Outcome = Result<String, String>;
type Criterion = (u8, fn() -> Outcome, Duration, &'static str);

fn l(name: &str) -> &'static Logic {
    Logic::named(name).expect("registered logic")
}

fn f(s: &str) -> Formula {
    parse(s).expect("formula parses")
}

fn ensure(cond: bool, what: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn sequent(premises: &[&str], conclusion: &str) -> Sequent {
    Sequent::new(premises.iter().map(|p| f(p)).collect(), f(conclusion))
}

fn val(pairs: &[(&str, TruthValue)]) -> Valuation {
    pairs.iter().map(|(a, v)| (a.to_string(), *v)).collect()
}

fn values(s: &str) -> Vec<TruthValue> {
    s.split_whitespace().map(|w| w.parse().expect("value letter")).collect()
}

fn binary(logic: &Logic, op: BinaryOp, a: TruthValue, b: TruthValue) -> TruthValue {
    logic
        .apply(Connective::Binary(op), &[a, b])
        .expect("connective in logic")
}

// Rows: p, q, ~p, p & q, p | q.
const TABLE_LATTICE: &str = "
T T F T T
T B F B T
T N F N T
T F F F T
B T B B T
B B B B B
B N B F T
B F B F B
N T N N T
N B N F T
N N N N N
N F N F N
F T T F T
F B T F B
F N T F N
F F T F F";

// Rows: p, q, p >> q in K3, p >> q in LP, with the middle value written M.
const TABLE_HOOK: &str = "
T T T T
T M N B
T F F F
M T T T
M M N B
M F N B
F T T T
F M T T
F F T T";

// Rows of the cmi matrix.
const TABLE_CMI: &str = "
T B N F
T B N F
T T T T
T T T T";

// Rows: p, q, p -> q, p => q.
const TABLE_K3_ARROWS: &str = "
T T T T
T N N N
T F F F
N T T T
N N T T
N F T N
F T T T
F N T T
F F T T";

const TABLE_LP_ARROWS: &str = "
T T T T
T B B F
T F F F
B T T T
B B B B
B F F F
F T T T
F B T T
F F T T";

fn criterion_1() -> Outcome {
    let mut entries = 0;
    let fde = l("FDE");
    for row in TABLE_LATTICE.trim().lines() {
        let v = values(row);
        ensure(
            fde.apply(Connective::Neg, &[v[0]]).unwrap() == v[2],
            format!("~{}", v[0]),
        )?;
        ensure(
            binary(fde, BinaryOp::And, v[0], v[1]) == v[3],
            format!("{} & {}", v[0], v[1]),
        )?;
        ensure(
            binary(fde, BinaryOp::Or, v[0], v[1]) == v[4],
            format!("{} | {}", v[0], v[1]),
        )?;
        entries += 3;
    }
    for (logic, middle, col) in [("K3", N, 2), ("LP", B, 3)] {
        for row in TABLE_HOOK.trim().lines() {
            let cells: Vec<TruthValue> = row
                .split_whitespace()
                .map(|w| if w == "M" { middle } else { w.parse().unwrap() })
                .collect();
            let got = evaluate(l(logic), &f("p >> q"), &val(&[("p", cells[0]), ("q", cells[1])])).unwrap();
            ensure(got == cells[col], format!("{logic}: {} >> {}", cells[0], cells[1]))?;
            entries += 1;
        }
    }
    let cmi = l("FDE+cmi");
    for (a, row) in TruthValue::ALL.iter().zip(TABLE_CMI.trim().lines()) {
        for (b, want) in TruthValue::ALL.iter().zip(values(row)) {
            ensure(binary(cmi, BinaryOp::Arrow, *a, *b) == want, format!("{a} -> {b}"))?;
            entries += 1;
        }
    }
    for (logic, table, twin) in [("K3+cmi", TABLE_K3_ARROWS, "L3"), ("LP+cmi", TABLE_LP_ARROWS, "RM3")] {
        let logic = l(logic);
        for row in table.trim().lines() {
            let v = values(row);
            ensure(
                binary(logic, BinaryOp::Arrow, v[0], v[1]) == v[2],
                format!("{}: {} -> {}", logic.name(), v[0], v[1]),
            )?;
            ensure(
                binary(logic, BinaryOp::DArrow, v[0], v[1]) == v[3],
                format!("{}: {} => {}", logic.name(), v[0], v[1]),
            )?;
            ensure(
                binary(l(twin), BinaryOp::Arrow, v[0], v[1]) == v[3],
                format!("{twin}: {} -> {}", v[0], v[1]),
            )?;
            entries += 2;
        }
    }
    Ok(format!("{entries} matrix entries match"))
}

fn criterion_2() -> Outcome {
    let mp_rule = sequent(&["p >> q", "p"], "q");
    ensure(entails(l("K3"), &mp_rule).unwrap(), "MP rule in K3")?;
    ensure(!entails(l("LP"), &mp_rule).unwrap(), "MP rule in LP")?;
    ensure(
        countermodel(l("LP"), &mp_rule).unwrap() == Some(val(&[("p", B), ("q", F)])),
        "LP witness p=B q=F",
    )?;
    let mp_statement = f("((p >> q) & p) >> q");
    ensure(valid(l("LP"), &mp_statement).unwrap(), "MP statement in LP")?;
    ensure(!valid(l("K3"), &mp_statement).unwrap(), "MP statement in K3")?;
    ensure(entails(l("K3"), &sequent(&["p"], "p")).unwrap(), "p |- p in K3")?;
    ensure(!valid(l("K3"), &f("p >> p")).unwrap(), "p >> p in K3")?;
    Ok("rule/statement split reproduced".into())
}

fn criterion_3() -> Outcome {
    let (fde, cl) = (l("FDE+cmi"), l("CL"));
    let g = Grammar::positive(&["p", "q"]);
    // Literal enumeration at small sizes checks the deduplicated pool.
    let literal = by_connectives(&g, 3);
    for x in &literal {
        ensure(
            valid(fde, x).unwrap() == valid(cl, x).unwrap(),
            format!("validity differs on {x}"),
        )?;
    }
    let small = by_connectives(&g, 2);
    for a in &small {
        for b in &small {
            let s = Sequent::new(vec![a.clone()], b.clone());
            ensure(
                entails(fde, &s).unwrap() == entails(cl, &s).unwrap(),
                format!("entailment differs on {s}"),
            )?;
        }
    }
    let pool = SemanticPool::build(&[fde, cl], &g, Bound::Connectives(7));
    let small_pool = SemanticPool::build(&[fde, cl], &g, Bound::Connectives(3));
    let atoms = vec!["p".to_string(), "q".to_string()];
    let key = |x: &Formula| -> Vec<TruthValue> {
        [fde, cl]
            .iter()
            .flat_map(|lg| table_over(lg, x, &atoms).unwrap().values())
            .collect()
    };
    let literal_tables: HashSet<Vec<TruthValue>> = literal.iter().map(key).collect();
    let pool_tables: HashSet<Vec<TruthValue>> = small_pool.classes.iter().map(|(t, _)| t.clone()).collect();
    ensure(
        literal_tables == pool_tables,
        "pool at 3 connectives disagrees with literal enumeration",
    )?;
    let reps: Vec<&Formula> = pool.representatives().collect();
    for x in &reps {
        ensure(
            valid(fde, x).unwrap() == valid(cl, x).unwrap(),
            format!("validity differs on {x}"),
        )?;
    }
    let mut pairs = 0;
    for a in &reps {
        for b in &reps {
            let s = Sequent::new(vec![(*a).clone()], (*b).clone());
            ensure(
                entails(fde, &s).unwrap() == entails(cl, &s).unwrap(),
                format!("entailment differs on {s}"),
            )?;
            pairs += 1;
        }
    }
    Ok(format!(
        "{} literal formulas, {} table classes up to 7 connectives, {pairs} class sequents",
        literal.len(),
        reps.len()
    ))
}

fn criterion_4() -> Outcome {
    let contra = sequent(&["p -> q"], "~q -> ~p");
    for name in ["FDE+cmi", "K3+cmi", "LP+cmi"] {
        ensure(
            !entails(l(name), &contra).unwrap(),
            format!("contraposition holds in {name}"),
        )?;
    }
    let glut = val(&[("p", T), ("q", B)]);
    let gap = val(&[("p", N), ("q", F)]);
    let all = countermodels(l("FDE+cmi"), &contra).unwrap();
    ensure(
        all.contains(&glut) && all.contains(&gap),
        "FDE+cmi witnesses (T,B) and (N,F)",
    )?;
    ensure(
        countermodels(l("LP+cmi"), &contra).unwrap().contains(&glut),
        "LP+cmi witness (T,B)",
    )?;
    ensure(
        countermodels(l("K3+cmi"), &contra).unwrap().contains(&gap),
        "K3+cmi witness (N,F)",
    )?;
    ensure(
        !valid(l("K3+cmi"), &f("(p => (p => q)) => (p => q)")).unwrap(),
        "contraction holds in K3+cmi",
    )?;
    let thinning = Sequent::new(Vec::new(), f("p => (q => p)"));
    ensure(
        countermodel(l("LP+cmi"), &thinning).unwrap() == Some(val(&[("p", B), ("q", T)])),
        "thinning witness p=B q=T in LP+cmi",
    )?;
    ensure(
        equivalent(l("FDE+cmi"), &f("(p => (p => q)) | q"), &f("p -> q")).unwrap(),
        "recovery identity",
    )?;
    Ok("contraposition, contraction, thinning, recovery".into())
}

fn criterion_5() -> Outcome {
    let m = constant_check(l("FDE+cmi")).unwrap();
    let want = [
        (Constant::Verum, T),
        (Constant::Falsum, F),
        (Constant::Both, B),
        (Constant::Neither, N),
    ];
    for (c, v) in want {
        ensure(m[&c] == v, format!("{c} evaluates to {}", m[&c]))?;
    }
    let glut = f("exists p. p & ~p");
    for (name, v) in [("FDE+cmi", T), ("LP+cmi", B), ("K3+cmi", N)] {
        let got = evaluate(l(name), &glut, &Valuation::new()).unwrap();
        ensure(got == v, format!("exists p. p & ~p is {got} in {name}"))?;
    }
    Ok("t=T f=F b=B n=N; glut sentence T/B/N".into())
}

fn criterion_6() -> Outcome {
    let logic = l("FDE+cmi");
    let g = Grammar::new(&["p", "q", "r"], true, &BinaryOp::ALL);
    let mut generator = RandomFormulas::new(20_240_601, g, 6);
    for _ in 0..1000 {
        let x = generator.generate();
        let all_b: Valuation = x.free_atoms().into_iter().map(|a| (a, B)).collect();
        ensure(
            evaluate(logic, &x, &all_b).unwrap() == B,
            format!("all-B valuation on {x}"),
        )?;
        let (e, a) = block_closure_values(&x).unwrap();
        ensure(
            matches!(e, B | T) && matches!(a, B | F),
            format!("closures of {x} are {e}, {a}"),
        )?;
    }
    let gap = TruthFunction::from_fn(1, |_| N);
    if let Some(w) = find_constant_free_unary(&gap, 4) {
        return Err(format!("{w} has the constant-N table"));
    }
    // The depth-2 pool agrees with literal enumeration.
    let unary = Grammar::new(&["p"], true, &BinaryOp::ALL);
    let atoms = vec!["p".to_string()];
    let literal = by_depth(&unary, 2);
    let tables: HashSet<Vec<TruthValue>> = literal
        .iter()
        .map(|x| table_over(logic, x, &atoms).unwrap().values())
        .collect();
    let pool = SemanticPool::build(&[logic], &unary, Bound::Depth(2));
    let pooled: HashSet<Vec<TruthValue>> = pool.classes.iter().map(|(t, _)| t.clone()).collect();
    ensure(tables == pooled, "depth-2 pool disagrees with literal enumeration")?;
    ensure(!tables.contains(gap.table()), "constant-N table at depth 2")?;
    let depth4 = SemanticPool::build(&[logic], &unary, Bound::Depth(4));
    Ok(format!(
        "1000 random formulas; {} unary tables to depth 4, none constant-N",
        depth4.len()
    ))
}

fn criterion_7() -> Outcome {
    let logic = l("FDE+cmi");
    let check = |tf: &TruthFunction| -> Result<(), String> {
        let x = synthesize(tf);
        let got = table_over(logic, &x, &argument_atoms(tf.arity())).unwrap().values();
        ensure(got == tf.table(), format!("table mismatch for {:?}", tf.table()))
    };
    for code in 0..256usize {
        let table = (0..4).map(|i| TruthValue::from_index((code >> (2 * i)) & 3)).collect();
        check(&TruthFunction::new(1, table).unwrap())?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..50 {
        check(&TruthFunction::new(2, random_table(&mut rng, 2)).unwrap())?;
    }
    Ok("256 unary and 50 binary tables realised".into())
}

fn criterion_8() -> Outcome {
    let mut lines = Vec::new();
    for name in ["k3-l3", "lp-rm3"] {
        let report = check_synonymy(&SynonymPair::named(name).unwrap(), 7).unwrap();
        for c in &report.conditions {
            ensure(
                c.schema,
                format!("{name} condition {} fails at schema level", c.condition),
            )?;
            ensure(
                c.witness.is_none(),
                format!("{name} condition {} fails on {:?}", c.condition, c.witness),
            )?;
        }
        lines.push(format!("{name} over {} formulas", report.conditions[0].checked));
    }
    ensure(
        equivalent(l("L3"), &f("(p -> (p -> q)) & (~q -> (~q -> ~p))"), &f("p -> q")).unwrap(),
        "L3 round trip of p -> q",
    )?;
    ensure(
        equivalent_across(l("LP+cmi"), &f("p -> q"), l("RM3"), &f("(p -> q) | q")).unwrap(),
        "LP+cmi conditional in RM3",
    )?;
    Ok(lines.join("; "))
}

fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../proofs")
}

fn load(dir: &Path) -> Result<Vec<(String, Proof)>, String> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(|e| format!("{}: {e}", dir.display()))?
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "prf"))
        .collect();
    files.sort();
    files
        .into_iter()
        .map(|p| {
            let name = p.file_name().unwrap().to_string_lossy().into_owned();
            let text = fs::read_to_string(&p).map_err(|e| format!("{name}: {e}"))?;
            parse_proof(&text)
                .map(|proof| (name.clone(), proof))
                .map_err(|e| format!("{name}: {e}"))
        })
        .collect()
}

fn criterion_9() -> Outcome {
    let valid_proofs = load(&corpus_dir())?;
    ensure(
        valid_proofs.len() >= 20,
        format!("only {} valid proofs", valid_proofs.len()),
    )?;
    let mut used = HashSet::new();
    for (name, p) in &valid_proofs {
        let report = check_proof(p);
        ensure(report.accepted, format!("{name} rejected:\n{report}"))?;
        let audit = soundness_audit(p).map_err(|e| format!("{name}: {e}"))?;
        ensure(audit.passed(), format!("{name}: {audit}"))?;
        used.extend(p.steps().into_iter().map(|(_, s)| s.rule));
        if p.logic.name() == "FDE+cmi" {
            for ext in ["K3+cmi", "LP+cmi", "M+cmi"] {
                let moved = parse_proof(&p.to_string().replacen("FDE+cmi", ext, 1)).unwrap();
                ensure(check_proof(&moved).accepted, format!("{name} rejected in {ext}"))?;
            }
        }
    }
    let missing: Vec<&str> = RuleName::ALL
        .iter()
        .filter(|r| !used.contains(*r))
        .map(|r| r.name())
        .collect();
    ensure(missing.is_empty(), format!("rules never used: {}", missing.join(", ")))?;
    let mutants = load(&corpus_dir().join("mutants"))?;
    ensure(mutants.len() >= 20, format!("only {} mutants", mutants.len()))?;
    for (name, m) in &mutants {
        let report = check_proof(m);
        ensure(!report.accepted, format!("mutant {name} accepted"))?;
        ensure(
            m.expect_fail.first().copied() == report.first_failure(),
            format!(
                "mutant {name}: expected failure at {:?}, got {:?}",
                m.expect_fail,
                report.first_failure()
            ),
        )?;
    }
    Ok(format!(
        "{} proofs accepted and audited, {} mutants rejected",
        valid_proofs.len(),
        mutants.len()
    ))
}

fn criterion_10() -> Outcome {
    let names = ["FDE", "M", "K3", "LP", "CL"];
    let logics: Vec<&'static Logic> = names.iter().map(|n| l(n)).collect();
    let g = Grammar::lattice(&["p", "q"]);
    let pool = SemanticPool::build(&logics, &g, Bound::Depth(4));
    let reps: Vec<Formula> = pool.representatives().cloned().collect();
    let shallow = by_depth(&g, 2);
    let mut sequents: Vec<Sequent> = Vec::new();
    for b in reps.iter().chain(&shallow) {
        sequents.push(Sequent::new(Vec::new(), b.clone()));
    }
    for a in &reps {
        for b in &reps {
            sequents.push(Sequent::new(vec![a.clone()], b.clone()));
        }
    }
    for a in &shallow {
        for b in &shallow {
            sequents.push(Sequent::new(vec![a.clone()], b.clone()));
        }
    }
    let included = [("FDE", "M"), ("M", "K3"), ("M", "LP"), ("LP", "CL"), ("K3", "CL")];
    for s in &sequents {
        let verdicts: Vec<bool> = logics.iter().map(|lg| entails(lg, s).unwrap()).collect();
        let holds = |n: &str| verdicts[names.iter().position(|x| *x == n).unwrap()];
        for (lo, hi) in included {
            ensure(!holds(lo) || holds(hi), format!("{s} holds in {lo} but not {hi}"))?;
        }
    }
    let separator = sequent(&["p & ~p"], "q | ~q");
    for name in ["M", "K3", "LP"] {
        ensure(
            entails(l(name), &separator).unwrap(),
            format!("separator fails in {name}"),
        )?;
    }
    ensure(!entails(l("FDE"), &separator).unwrap(), "separator holds in FDE")?;
    Ok(format!(
        "{} classes to depth 4, {} sequents",
        reps.len(),
        sequents.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (1, criterion_1, Duration::from_secs(1), "matrix fidelity"),
        (2, criterion_2, Duration::from_secs(1), "material conditional quartet"),
        (
            3,
            criterion_3,
            Duration::from_secs(300),
            "positive fragment is classical",
        ),
        (4, criterion_4, Duration::from_secs(1), "counterexample suite"),
        (5, criterion_5, Duration::from_secs(1), "quantified constants"),
        (
            6,
            criterion_6,
            Duration::from_secs(60),
            "glut-preservation and inexpressibility",
        ),
        (7, criterion_7, Duration::from_secs(120), "functional completeness"),
        (
            8,
            criterion_8,
            Duration::from_secs(300),
            "synonymy of the three-valued pairs",
        ),
        (9, criterion_9, Duration::from_secs(60), "proof corpus"),
        (10, criterion_10, Duration::from_secs(300), "logic lattice"),
    ];
    let mut failed = 0;
    for (n, run, limit, title) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(_) if elapsed > limit => Err(format!("took {elapsed:.2?}, limit {limit:?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("criterion {n:>2} PASS {title} ({elapsed:.2?}): {detail}"),
            Err(why) => {
                failed += 1;
                println!("criterion {n:>2} FAIL {title} ({elapsed:.2?}): {why}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
