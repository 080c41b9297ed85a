//! The command-line surface: `solve`, `verify`, `gen`, and `bench`.
//!
//! Exit codes are part of the contract: `0` success, `10` a successful
//! solve that found zero models, `2` any input or usage error, and `1`
//! a verification mismatch.

use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::checkers::{
    brute_answer_sets, brute_minimal_models, brute_stable_models, DEFAULT_CNF_ORACLE_CAP,
    DEFAULT_PROGRAM_ORACLE_CAP,
};
use crate::engine::{ans_set, min_mod, stb_mod, EngineOptions, Enumeration};
use crate::generators::{gen_e, gen_f, gen_f_exact, gen_random, GenMode};
use crate::instance::Instance;
use crate::programs::{translate, ProgramKind};
use crate::theory::{sigma_simplify, Model, Theory};

use super::asp::{emit_program, parse_program};
use super::dimacs::{emit_dimacs, parse_dimacs};
use super::report::{bench_csv, bench_text, fingerprint, BenchRow, SolveReport};

/// Enumerate minimal models, stable models, and answer sets with
/// bounded branching trees.
#[derive(Parser)]
#[command(name = "minmod", version, about)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Enumerate all models of an instance under the chosen semantics.
    Solve(SolveArgs),
    /// Check the solver against the brute-force oracle on one instance.
    Verify(VerifyArgs),
    /// Write an instance from one of the built-in families.
    Gen(GenArgs),
    /// Sweep a family and tabulate models, leaves, bounds, and time.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    /// Minimal models of a CNF theory (DIMACS input).
    Minimal,
    /// Stable models of a normal program (program input).
    Stable,
    /// Answer sets of a disjunctive program (program input).
    Answer,
}

impl ModeArg {
    fn label(self) -> &'static str {
        match self {
            ModeArg::Minimal => "minimal",
            ModeArg::Stable => "stable",
            ModeArg::Answer => "answer",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    /// DIMACS CNF.
    Dimacs,
    /// Ground rule text.
    Asp,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputArg {
    /// The stable JSON report.
    Json,
    /// Models line by line, then a `models: K` trailer.
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    /// All width-t positive clauses over a set of atoms.
    #[value(alias = "E")]
    E,
    /// Disjoint copies of E over 2t-1 atoms each.
    #[value(alias = "F")]
    F,
    /// Seeded random instances.
    Random,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GenModeArg {
    /// CNF clauses.
    Cnf,
    /// Normal rules.
    Normal,
    /// Disjunctive facts or rules.
    Disjunctive,
}

impl From<GenModeArg> for GenMode {
    fn from(m: GenModeArg) -> GenMode {
        match m {
            GenModeArg::Cnf => GenMode::Cnf,
            GenModeArg::Normal => GenMode::Normal,
            GenModeArg::Disjunctive => GenMode::Disjunctive,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BenchOutputArg {
    /// Machine-readable CSV.
    Csv,
    /// An aligned table.
    Text,
}

#[derive(Args)]
struct SolveArgs {
    /// Semantics to enumerate under.
    #[arg(long, value_enum)]
    mode: ModeArg,
    /// Instance file.
    #[arg(long)]
    input: PathBuf,
    /// Input format; must match the mode (minimal = dimacs, else asp).
    #[arg(long, value_enum)]
    format: FormatArg,
    /// Append tree statistics to text output.
    #[arg(long)]
    stats: bool,
    /// Stop after the first model.
    #[arg(long)]
    first: bool,
    /// Print one line per branch node (case id, branch literals) to
    /// stderr.
    #[arg(long)]
    trace: bool,
    /// Report format.
    #[arg(long, value_enum, default_value = "json")]
    output: OutputArg,
}

#[derive(Args)]
struct VerifyArgs {
    /// Semantics to check.
    #[arg(long, value_enum)]
    mode: ModeArg,
    /// Instance file.
    #[arg(long)]
    input: PathBuf,
    /// Input format; must match the mode (minimal = dimacs, else asp).
    #[arg(long, value_enum)]
    format: FormatArg,
    /// Occurring-atom cap for the brute-force oracle (default 14 for
    /// CNF, 12 for programs).
    #[arg(long)]
    max_atoms: Option<u32>,
}

#[derive(Args)]
struct GenArgs {
    /// Instance family.
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Clause width.
    #[arg(long)]
    t: u32,
    /// Atom count (family E).
    #[arg(long)]
    atoms: Option<u32>,
    /// Component count (family F).
    #[arg(long)]
    k: Option<u32>,
    /// Exact atom count (family F: padded construction; random: atoms).
    #[arg(long)]
    n: Option<u32>,
    /// Clause count (family random).
    #[arg(long)]
    m: Option<u32>,
    /// RNG seed (family random).
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Which of the three isomorphic forms to emit.
    #[arg(long, value_enum, default_value = "cnf")]
    mode: GenModeArg,
    /// Output path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    /// Instance family to sweep.
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Clause width.
    #[arg(long)]
    t: u32,
    /// First swept value (atoms for E, components for F, atoms for
    /// random, which uses m = 2n clauses).
    #[arg(long)]
    from: u32,
    /// Last swept value, inclusive.
    #[arg(long)]
    to: u32,
    /// Timing repetitions per instance; the best time is reported.
    #[arg(long, default_value_t = 1)]
    reps: u32,
    /// Which of the three isomorphic forms to solve.
    #[arg(long, value_enum, default_value = "cnf")]
    mode: GenModeArg,
    /// RNG seed (family random).
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Table format.
    #[arg(long, value_enum, default_value = "csv")]
    output: BenchOutputArg,
}

/// Parse the process arguments and run the chosen command, returning
/// the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return code;
        }
    };
    match &cli.cmd {
        Cmd::Solve(a) => cmd_solve(a),
        Cmd::Verify(a) => cmd_verify(a),
        Cmd::Gen(a) => cmd_gen(a),
        Cmd::Bench(a) => cmd_bench(a),
    }
}

/// A parsed instance ready to solve, with the engine entry point
/// already chosen by the mode.
struct Loaded {
    instance: Instance,
    fingerprint: String,
}

/// Read and parse the input for a mode/format pair, enforcing the
/// pairing contract.  Errors are printed here; the returned code is
/// always 2.
fn load(mode: ModeArg, format: FormatArg, path: &PathBuf) -> Result<Loaded, i32> {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", path.display());
            return Err(2);
        }
    };
    let fingerprint = fingerprint(&text);
    let instance = match (mode, format) {
        (ModeArg::Minimal, FormatArg::Dimacs) => {
            let parsed = match parse_dimacs(&text) {
                Ok(p) => p,
                Err(e) => {
                    eprintln!("error: {e}");
                    return Err(2);
                }
            };
            for w in &parsed.warnings {
                eprintln!("warning: {w}");
            }
            Instance::Cnf {
                theory: parsed.theory,
                symbols: parsed.symbols,
            }
        }
        (ModeArg::Stable | ModeArg::Answer, FormatArg::Asp) => {
            let parsed = match parse_program(&text) {
                Ok(p) => p,
                Err(e) => {
                    eprintln!("error: {e}");
                    return Err(2);
                }
            };
            if mode == ModeArg::Stable && parsed.program.kind() == ProgramKind::Disjunctive {
                eprintln!(
                    "error: --mode stable needs a normal program, but the input has \
                     disjunctive heads; use --mode answer"
                );
                return Err(2);
            }
            Instance::Program {
                program: parsed.program,
                symbols: parsed.symbols,
            }
        }
        (ModeArg::Minimal, FormatArg::Asp) => {
            eprintln!("error: --mode minimal expects --format dimacs input");
            return Err(2);
        }
        (ModeArg::Stable | ModeArg::Answer, FormatArg::Dimacs) => {
            eprintln!(
                "error: --mode {} expects --format asp input",
                mode.label()
            );
            return Err(2);
        }
    };
    Ok(Loaded {
        instance,
        fingerprint,
    })
}

/// Run the engine entry point matching the mode, timing the run.
fn solve_instance(mode: ModeArg, instance: &Instance, opts: &EngineOptions) -> (Enumeration, u64) {
    let t0 = Instant::now();
    let e = match (mode, instance) {
        (ModeArg::Minimal, Instance::Cnf { theory, .. }) => min_mod(theory, opts),
        (ModeArg::Stable, Instance::Program { program, .. }) => stb_mod(program, opts),
        (ModeArg::Answer, Instance::Program { program, .. }) => ans_set(program, opts),
        _ => unreachable!("load enforces the mode/format pairing"),
    };
    (e, t0.elapsed().as_millis() as u64)
}

fn cmd_solve(a: &SolveArgs) -> i32 {
    let loaded = match load(a.mode, a.format, &a.input) {
        Ok(l) => l,
        Err(code) => return code,
    };
    let opts = EngineOptions {
        first_only: a.first,
        trace: a.trace,
    };
    let (e, wall_ms) = solve_instance(a.mode, &loaded.instance, &opts);
    let symbols = loaded.instance.symbols();
    if a.trace {
        for l in &e.trace {
            eprintln!(
                "depth={} case={} branch={}",
                l.depth,
                l.case,
                l.branch.display(symbols)
            );
        }
    }
    let report = SolveReport::new(a.mode.label(), &e, symbols, wall_ms, loaded.fingerprint);
    match a.output {
        OutputArg::Json => println!("{}", report.to_json()),
        OutputArg::Text => print!("{}", report.to_text(a.stats)),
    }
    if report.count == 0 {
        10
    } else {
        0
    }
}

fn cmd_verify(a: &VerifyArgs) -> i32 {
    if a.max_atoms.is_some_and(|cap| cap > 26) {
        eprintln!("error: --max-atoms must be at most 26");
        return 2;
    }
    let loaded = match load(a.mode, a.format, &a.input) {
        Ok(l) => l,
        Err(code) => return code,
    };
    let oracle: Result<Vec<Model>, _> = match (&loaded.instance, a.mode) {
        (Instance::Cnf { theory, .. }, _) => {
            let cap = a.max_atoms.unwrap_or(DEFAULT_CNF_ORACLE_CAP);
            brute_minimal_models(theory, Some(cap))
        }
        (Instance::Program { program, .. }, ModeArg::Stable) => {
            let cap = a.max_atoms.unwrap_or(DEFAULT_PROGRAM_ORACLE_CAP);
            brute_stable_models(program, Some(cap))
        }
        (Instance::Program { program, .. }, _) => {
            let cap = a.max_atoms.unwrap_or(DEFAULT_PROGRAM_ORACLE_CAP);
            brute_answer_sets(program, Some(cap))
        }
    };
    let oracle = match oracle {
        Ok(models) => models,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let (e, _) = solve_instance(a.mode, &loaded.instance, &EngineOptions::default());
    let symbols = loaded.instance.symbols();
    if e.models == oracle {
        println!("ok: {} models verified", oracle.len());
        return 0;
    }
    // Print the symmetric difference of the two enumerations.
    for m in e.models.iter().filter(|m| !oracle.contains(m)) {
        println!("engine only: {}", symbols.model_line(m));
    }
    for m in oracle.iter().filter(|m| !e.models.contains(m)) {
        println!("oracle only: {}", symbols.model_line(m));
    }
    eprintln!(
        "mismatch: engine found {} models, oracle found {}",
        e.models.len(),
        oracle.len()
    );
    1
}

/// Build the instance a `gen` invocation describes.
fn build_instance(a: &GenArgs) -> Result<Instance, String> {
    let mode = GenMode::from(a.mode);
    match a.family {
        FamilyArg::E => {
            let Some(atoms) = a.atoms else {
                return Err("family E needs --atoms".to_string());
            };
            gen_e(a.t, atoms, mode).map_err(|e| e.to_string())
        }
        FamilyArg::F => match (a.k, a.n) {
            (Some(k), None) => gen_f(a.t, k, mode).map_err(|e| e.to_string()),
            (None, Some(n)) => gen_f_exact(a.t, n, mode).map_err(|e| e.to_string()),
            _ => Err("family F needs exactly one of --k or --n".to_string()),
        },
        FamilyArg::Random => {
            let (Some(n), Some(m)) = (a.n, a.m) else {
                return Err("family random needs --n and --m".to_string());
            };
            if a.t == 0 {
                return Err("family random needs --t at least 1".to_string());
            }
            Ok(gen_random(n, m, a.t, mode, a.seed))
        }
    }
}

fn cmd_gen(a: &GenArgs) -> i32 {
    let instance = match build_instance(a) {
        Ok(i) => i,
        Err(msg) => {
            eprintln!("error: {msg}");
            return 2;
        }
    };
    let text = match &instance {
        Instance::Cnf { theory, symbols } => emit_dimacs(theory, symbols),
        Instance::Program { program, symbols } => emit_program(program, symbols),
    };
    match &a.out {
        Some(path) => {
            if let Err(e) = fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return 2;
            }
        }
        None => print!("{text}"),
    }
    0
}

/// The leaf bound applicable to a theory, after the same
/// pre-simplification the engine performs.
fn leaf_bound(t: &Theory) -> f64 {
    let tp = if t.max_width() <= 3 {
        sigma_simplify(t)
    } else {
        t.clone()
    };
    let n = f64::from(tp.n());
    match tp.max_width() {
        0..=2 => 3f64.powf(n / 3.0),
        3 => 1.6702f64.powf(n),
        w => alpha(w).powf(n),
    }
}

/// The branching constant for general width `t`: the largest root of
/// `x^t = x^(t-1) + … + x + 1`, found by bisection in `[1, 2]`.
fn alpha(t: usize) -> f64 {
    let f = |x: f64| x.powi(t as i32) - (0..t).map(|i| x.powi(i as i32)).sum::<f64>();
    let (mut lo, mut hi) = (1.0f64, 2.0f64);
    for _ in 0..64 {
        let mid = (lo + hi) / 2.0;
        if f(mid) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    (lo + hi) / 2.0
}

fn cmd_bench(a: &BenchArgs) -> i32 {
    if a.from > a.to {
        eprintln!("error: --from must not exceed --to");
        return 2;
    }
    let family_label = match a.family {
        FamilyArg::E => "E",
        FamilyArg::F => "F",
        FamilyArg::Random => "random",
    };
    let mode = GenMode::from(a.mode);
    let solve_mode = match a.mode {
        GenModeArg::Cnf => ModeArg::Minimal,
        GenModeArg::Normal => ModeArg::Stable,
        GenModeArg::Disjunctive => ModeArg::Answer,
    };
    let mut rows = Vec::new();
    for param in a.from..=a.to {
        let built = match a.family {
            FamilyArg::E => gen_e(a.t, param, mode).map_err(|e| e.to_string()),
            FamilyArg::F => gen_f(a.t, param, mode).map_err(|e| e.to_string()),
            FamilyArg::Random => {
                if a.t == 0 {
                    Err("family random needs --t at least 1".to_string())
                } else {
                    Ok(gen_random(param, 2 * param, a.t, mode, a.seed))
                }
            }
        };
        let instance = match built {
            Ok(i) => i,
            Err(msg) => {
                eprintln!("error: {msg}");
                return 2;
            }
        };
        let (n, bound) = match &instance {
            Instance::Cnf { theory, .. } => (theory.n(), leaf_bound(theory)),
            Instance::Program { program, .. } => {
                (program.n(), leaf_bound(&translate(program)))
            }
        };
        let mut best: Option<(Enumeration, u64)> = None;
        for _ in 0..a.reps.max(1) {
            let (e, wall) = solve_instance(solve_mode, &instance, &EngineOptions::default());
            if best.as_ref().is_none_or(|(_, w)| wall < *w) {
                best = Some((e, wall));
            }
        }
        let (e, wall_ms) = best.expect("at least one repetition runs");
        rows.push(BenchRow {
            family: family_label.to_string(),
            param,
            n,
            models: e.models.len() as u64,
            leaves: e.stats.leaves,
            bound,
            wall_ms,
        });
    }
    match a.output {
        BenchOutputArg::Csv => print!("{}", bench_csv(&rows)),
        BenchOutputArg::Text => print!("{}", bench_text(&rows)),
    }
    0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arguments_parse() {
        let cli = Cli::try_parse_from([
            "minmod", "solve", "--mode", "minimal", "--input", "x.cnf", "--format", "dimacs",
            "--first", "--trace", "--output", "text", "--stats",
        ])
        .unwrap();
        let Cmd::Solve(a) = cli.cmd else { panic!("solve expected") };
        assert!(a.first && a.trace && a.stats);
        assert!(a.mode == ModeArg::Minimal && a.output == OutputArg::Text);

        // Family aliases accept the uppercase spelling.
        for fam in ["E", "e"] {
            let cli = Cli::try_parse_from([
                "minmod", "gen", "--family", fam, "--t", "2", "--atoms", "4",
            ])
            .unwrap();
            let Cmd::Gen(a) = cli.cmd else { panic!("gen expected") };
            assert!(a.family == FamilyArg::E && a.t == 2 && a.atoms == Some(4));
        }

        assert!(Cli::try_parse_from(["minmod", "solve", "--mode", "wat"]).is_err());
        assert!(Cli::try_parse_from(["minmod"]).is_err());
    }

    #[test]
    fn family_validation_messages() {
        let args = |argv: &[&str]| {
            let cli = Cli::try_parse_from(argv).unwrap();
            let Cmd::Gen(a) = cli.cmd else { panic!("gen expected") };
            a
        };
        let e = build_instance(&args(&["minmod", "gen", "--family", "e", "--t", "2"]));
        assert_eq!(e.unwrap_err(), "family E needs --atoms");
        let e = build_instance(&args(&["minmod", "gen", "--family", "f", "--t", "2"]));
        assert!(e.unwrap_err().contains("exactly one"));
        let e = build_instance(&args(&[
            "minmod", "gen", "--family", "f", "--t", "2", "--k", "1", "--n", "5",
        ]));
        assert!(e.unwrap_err().contains("exactly one"));
        let e = build_instance(&args(&["minmod", "gen", "--family", "random", "--t", "3"]));
        assert!(e.unwrap_err().contains("--n and --m"));
        let e = build_instance(&args(&[
            "minmod", "gen", "--family", "e", "--t", "4", "--atoms", "3",
        ]));
        assert!(e.unwrap_err().contains("at least t=4 atoms"));
    }

    #[test]
    fn branching_constants() {
        assert!((alpha(2) - 1.6180).abs() < 1e-3);
        assert!((alpha(3) - 1.8393).abs() < 1e-3);
        assert!((alpha(4) - 1.9275).abs() < 1e-3);
        assert!((alpha(5) - 1.9659).abs() < 1e-3);
    }

    #[test]
    fn leaf_bounds_follow_the_width() {
        let two = gen_f(2, 3, GenMode::Cnf).unwrap();
        let t = two.as_theory().unwrap();
        // 3^(9/3) = 27 for a 9-atom 2-CNF instance.
        assert!((leaf_bound(t) - 27.0).abs() < 1e-9);

        let three = gen_f(3, 2, GenMode::Cnf).unwrap();
        let t = three.as_theory().unwrap();
        assert!((leaf_bound(t) - 1.6702f64.powf(10.0)).abs() < 1e-6);

        let four = gen_e(4, 7, GenMode::Cnf).unwrap();
        let t = four.as_theory().unwrap();
        let b = leaf_bound(t);
        assert!(b > 98.0 && b < 99.0, "alpha_4^7 is just under 99, got {b}");
    }
}
