//! The `mtlog` command line.
//!
//! Exit codes: 0 success, 1 a negative verdict (a check fails, a
//! discrepancy is found, a value is undefined), 2 usage or input errors,
//! 3 iteration caps or search budgets exhausted. Output is assembled in
//! memory and written only once a command has completed.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use mtlog::engines::{
    differential_stable_check, enumerate_stable2, is_stable2, is_supported_model, kripke_kleene_model, minimize_instance,
    well_founded_model, DiffReport, EngineConfig, EngineError, Mode,
};
use mtlog::lang::{active_constants, ground, parse_dataset, parse_ground_metric_atom, parse_program, Dataset, LangError, Program};
use mtlog::operators::ReasoningInstance;
use mtlog::random::{random_instance, rng_from_seed, InstanceShape};
use mtlog::semantics::dump::{read_interpretation, read_three_valued, write_interpretation};
use mtlog::semantics::{eval2_set, ThreeValuedInterpretation, TruthValue3};
use mtlog::temporal::Time;

#[derive(Parser, Debug)]
#[command(name = "mtlog", version, about = "Reasoner for DatalogMTL with negation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Inputs {
    /// Program file (.mtl)
    #[arg(long)]
    program: PathBuf,
    /// Dataset file (.facts)
    #[arg(long)]
    dataset: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
struct Engine {
    /// Restrict searches to the timepoints LO..=HI
    #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true)]
    window: Option<Vec<Time>>,
    /// Cap on every fixpoint iteration
    #[arg(long, default_value_t = mtlog::aft::DEFAULT_MAX_ITERS)]
    max_iters: usize,
    /// Cap on the number of candidates a brute-force search visits
    #[arg(long, default_value_t = mtlog::engines::config::DEFAULT_BUDGET)]
    budget: u64,
    /// Write output to this file instead of standard output
    #[arg(long)]
    output: Option<PathBuf>,
}

impl Engine {
    fn config(&self) -> EngineConfig {
        let mode = match self.window.as_deref() {
            Some([lo, hi]) => Mode::Window { lo: *lo, hi: *hi },
            _ => Mode::Unbounded,
        };
        EngineConfig { mode, max_iters: self.max_iters, enumeration_budget: self.budget }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse and safety-check a program, printing it normalized
    Check {
        #[arg(long)]
        program: PathBuf,
        #[command(flatten)]
        engine: Engine,
    },
    /// Print the grounding of a program over the active constants
    Ground {
        #[command(flatten)]
        inputs: Inputs,
        #[command(flatten)]
        engine: Engine,
    },
    /// Kripke–Kleene model
    Kk {
        #[command(flatten)]
        inputs: Inputs,
        #[command(flatten)]
        engine: Engine,
    },
    /// Well-founded model
    Wf {
        #[command(flatten)]
        inputs: Inputs,
        #[command(flatten)]
        engine: Engine,
    },
    /// Check a two-valued stable model, or enumerate those inside a window
    Stable {
        #[command(flatten)]
        inputs: Inputs,
        /// Interpretation to check
        #[arg(long, conflicts_with = "enumerate", required_unless_present = "enumerate")]
        check: Option<PathBuf>,
        /// Enumerate stable models supported on --window
        #[arg(long)]
        enumerate: bool,
        #[command(flatten)]
        engine: Engine,
    },
    /// Check a (three-valued) supported model
    Supported {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long)]
        check: PathBuf,
        #[command(flatten)]
        engine: Engine,
    },
    /// Truth value of a ground metric atom at a timepoint
    Eval {
        #[command(flatten)]
        inputs: Inputs,
        /// Ground metric atom
        #[arg(long)]
        atom: String,
        #[arg(long, allow_negative_numbers = true)]
        at: Time,
        /// Report undef instead of failing on undefined values
        #[arg(long)]
        three: bool,
        /// Evaluate under this interpretation instead of the well-founded model
        #[arg(long)]
        interp: Option<PathBuf>,
        #[command(flatten)]
        engine: Engine,
    },
    /// Compare stable models with minimal here-and-there models by brute force
    Diff {
        /// Program file; omit to generate random instances
        #[arg(long, conflicts_with = "random", required_unless_present = "random")]
        program: Option<PathBuf>,
        #[arg(long, requires = "program")]
        dataset: Option<PathBuf>,
        /// Number of random instances
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads for random instances
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[command(flatten)]
        engine: Engine,
    },
}

/// Exit status plus a message for standard error.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self { Failure { code: 2, message: message.into() } }
}

impl From<EngineError> for Failure {
    fn from(e: EngineError) -> Self {
        let code = match e {
            EngineError::NonTermination { .. } | EngineError::BudgetExceeded { .. } => 3,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn parsed<T>(path: &Path, r: Result<T, LangError>) -> Result<T, Failure> {
    r.map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn load_program(path: &Path) -> Result<Program, Failure> { parsed(path, parse_program(&read_file(path)?)) }

fn load_dataset(path: Option<&Path>) -> Result<Dataset, Failure> {
    match path {
        Some(p) => parsed(p, parse_dataset(&read_file(p)?)),
        None => Ok(Dataset::default()),
    }
}

fn load_instance(inputs: &Inputs) -> Result<ReasoningInstance, Failure> {
    let program = load_program(&inputs.program)?;
    let dataset = load_dataset(inputs.dataset.as_deref())?;
    ReasoningInstance::new(&program, dataset).map_err(|e| Failure::usage(e.to_string()))
}

fn well_founded(inst: &ReasoningInstance, cfg: &EngineConfig) -> Result<ThreeValuedInterpretation, Failure> {
    Ok(well_founded_model(inst, cfg)?.value.as_pair())
}

/// Result text and exit status of a command that ran to completion.
type Outcome = Result<(String, i32), Failure>;

fn execute(command: &Command) -> Outcome {
    match command {
        Command::Check { program, .. } => Ok((load_program(program)?.to_string(), 0)),
        Command::Ground { inputs, .. } => {
            let program = load_program(&inputs.program)?;
            let dataset = load_dataset(inputs.dataset.as_deref())?;
            Ok((ground(&program, &active_constants(&program, &dataset)).to_string(), 0))
        }
        Command::Kk { inputs, engine } => Ok((kripke_kleene_model(&load_instance(inputs)?, &engine.config())?.to_string(), 0)),
        Command::Wf { inputs, engine } => Ok((well_founded_model(&load_instance(inputs)?, &engine.config())?.to_string(), 0)),
        Command::Stable { inputs, check, enumerate, engine } => {
            let inst = load_instance(inputs)?;
            let cfg = engine.config();
            if *enumerate {
                if cfg.mode == Mode::Unbounded {
                    return Err(Failure::usage("--enumerate needs --window LO HI"));
                }
                let e = enumerate_stable2(&inst, &cfg)?;
                let mut out = format!("window: [{},{}]\ncomplete: {}\nmodels: {}\n", e.lo, e.hi, e.complete, e.models.len());
                for (k, m) in e.models.iter().enumerate() {
                    let _ = write!(out, "## model {}\n{}", k + 1, write_interpretation(m));
                }
                Ok((out, 0))
            } else {
                let path = check.as_deref().expect("clap enforces --check or --enumerate");
                let i = parsed(path, read_interpretation(&read_file(path)?))?;
                let ok = is_stable2(&inst, &i, &cfg)?;
                Ok((format!("stable: {ok}\n"), if ok { 0 } else { 1 }))
            }
        }
        Command::Supported { inputs, check, .. } => {
            let inst = load_instance(inputs)?;
            let j = parsed(check, read_three_valued(&read_file(check)?))?;
            if !j.lo.is_subset(&j.hi) {
                return Err(Failure::usage(format!("{}: lower bound is not contained in the upper bound", check.display())));
            }
            let ok = is_supported_model(&inst, &j);
            Ok((format!("supported: {ok}\n"), if ok { 0 } else { 1 }))
        }
        Command::Eval { inputs, atom, at, three, interp, engine } => {
            let inst = load_instance(inputs)?;
            let m = parse_ground_metric_atom(atom).map_err(|e| Failure::usage(format!("--atom: {e}")))?;
            let j = match interp {
                Some(path) => parsed(path, read_three_valued(&read_file(path)?))?,
                None => well_founded(&inst, &engine.config())?,
            };
            if !j.lo.is_subset(&j.hi) {
                return Err(Failure::usage("interpretation is inconsistent"));
            }
            let v = TruthValue3::from_pair(eval2_set(&m, &j.lo).contains(*at), eval2_set(&m, &j.hi).contains(*at));
            match (v, three) {
                (TruthValue3::Undef, false) => Ok(("undef\n".into(), 1)),
                _ => Ok((format!("{v}\n"), 0)),
            }
        }
        Command::Diff { program: Some(program), dataset, engine, .. } => {
            let inputs = Inputs { program: program.clone(), dataset: dataset.clone() };
            let inst = load_instance(&inputs)?;
            let cfg = window_or_default(engine);
            let r = differential_stable_check(&inst, &cfg)?;
            let code = if r.agrees() { 0 } else { 1 };
            Ok((r.to_string(), code))
        }
        Command::Diff { random, seed, jobs, engine, .. } => {
            let n = random.expect("clap enforces --program or --random");
            run_random_diff(n, *seed, (*jobs).max(1), &window_or_default(engine))
        }
    }
}

fn window_or_default(engine: &Engine) -> EngineConfig {
    let cfg = engine.config();
    match cfg.mode {
        Mode::Unbounded => cfg.with_mode(Mode::Window { lo: 0, hi: 3 }),
        _ => cfg,
    }
}

/// Seed of the `k`-th random instance of a run.
pub fn instance_seed(seed: u64, k: usize) -> u64 { seed.wrapping_mul(1_000_003).wrapping_add(k as u64) }

/// Outcome of the harness on one generated instance.
enum Verdict {
    Agree { complete: bool },
    Disagree { text: String },
    Error(EngineError),
}

fn diff_one(seed: u64, cfg: &EngineConfig) -> Verdict {
    let (program, dataset) = random_instance(&mut rng_from_seed(seed), &InstanceShape::default());
    let inst = ReasoningInstance::new(&program, dataset.clone()).expect("generated instances are well-formed");
    let report = match differential_stable_check(&inst, cfg) {
        Ok(r) => r,
        Err(e) => return Verdict::Error(e),
    };
    if report.agrees() {
        return Verdict::Agree { complete: report.complete };
    }
    let fails = |x: &ReasoningInstance| differential_stable_check(x, cfg).is_ok_and(|r| !r.agrees());
    let small = minimize_instance(&inst, fails);
    let small_report: DiffReport = differential_stable_check(&small, cfg).unwrap_or(report);
    let text = format!(
        "## discrepancy (instance seed {seed})\n# program\n{program}# dataset\n{dataset}# minimized program\n{}# minimized dataset\n{}{small_report}",
        small.ground_program, small.dataset
    );
    Verdict::Disagree { text }
}

fn run_random_diff(n: usize, seed: u64, jobs: usize, cfg: &EngineConfig) -> Outcome {
    let mut verdicts: Vec<Option<Verdict>> = (0..n).map(|_| None).collect();
    let chunk = n.div_ceil(jobs).max(1);
    std::thread::scope(|s| {
        for (c, slots) in verdicts.chunks_mut(chunk).enumerate() {
            s.spawn(move || {
                for (k, slot) in slots.iter_mut().enumerate() {
                    *slot = Some(diff_one(instance_seed(seed, c * chunk + k), cfg));
                }
            });
        }
    });
    let mut out = format!("seed: {seed}\ninstances: {n}\n");
    let (mut complete, mut bad) = (0, Vec::new());
    for (k, v) in verdicts.into_iter().enumerate() {
        match v.expect("every slot is filled") {
            Verdict::Agree { complete: c } => complete += c as usize,
            Verdict::Disagree { text } => bad.push(text),
            Verdict::Error(e) => {
                return Err(Failure::from(e)).map_err(|f| Failure {
                    message: format!("instance {k} (seed {}): {}", instance_seed(seed, k), f.message),
                    ..f
                })
            }
        }
    }
    let _ = write!(out, "complete: {complete}\ndiscrepancies: {}\n", bad.len());
    for text in &bad {
        out.push_str(text);
    }
    Ok((out, if bad.is_empty() { 0 } else { 1 }))
}

fn output_path(command: &Command) -> Option<&Path> {
    let engine = match command {
        Command::Check { engine, .. }
        | Command::Ground { engine, .. }
        | Command::Kk { engine, .. }
        | Command::Wf { engine, .. }
        | Command::Stable { engine, .. }
        | Command::Supported { engine, .. }
        | Command::Eval { engine, .. }
        | Command::Diff { engine, .. } => engine,
    };
    engine.output.as_deref()
}

/// Runs one invocation and returns its exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(&cli.command) {
        Ok((text, code)) => {
            let written = match output_path(&cli.command) {
                Some(path) => std::fs::write(path, &text).map_err(|e| format!("{}: {e}", path.display())),
                None => out.write_all(text.as_bytes()).map_err(|e| e.to_string()),
            };
            match written {
                Ok(()) => {
                    if code == 1 && matches!(cli.command, Command::Eval { .. }) {
                        let _ = writeln!(err, "value is undefined in the well-founded model; pass --three to accept it");
                    }
                    code
                }
                Err(msg) => {
                    let _ = writeln!(err, "error: {msg}");
                    2
                }
            }
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instance_seeds_are_distinct() {
        let seeds: std::collections::BTreeSet<u64> = (0..1000).map(|k| instance_seed(42, k)).collect();
        assert_eq!(seeds.len(), 1000);
    }

    #[test]
    fn usage_errors_exit_2() {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        assert_eq!(run(["mtlog", "frobnicate"], &mut out, &mut err), 2);
        assert_eq!(run(["mtlog", "stable", "--program", "x.mtl"], &mut out, &mut err), 2);
        assert_eq!(run(["mtlog", "--help"], &mut out, &mut err), 0);
    }
}
