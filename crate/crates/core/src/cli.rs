//! The `repfn` command line.
//!
//! Data (CSV, JSON, SVG, ASCII) goes to standard output or `--out`; every
//! diagnostic goes to standard error. Exit codes: 0 success, 1 a verification
//! check failed, 2 usage or set-spec error, 3 resource budget exceeded.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::diagram::{render_diagram_with, DiagramFormat, DEFAULT_DIAGRAM_BUDGET};
use crate::error::Error;
use crate::monotonicity::{find_violations, natural_density_estimate};
use crate::pool::DEFAULT_SEED;
use crate::rep::{batch_table_with, RepKind, Strategy, TableConfig};
use crate::set::IntegerSet;
use crate::theorems::{
    first_r2_decrease_bruteforce, predict_r2_decrease, r3_monotone_greedy_search, DecreaseWitness,
};
use crate::verify::{all_passed, run_suite, Suite, VerifyOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "repfn",
    version,
    about = "Representation functions r1, r2, r3 of integer sets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// r1, r2, r3 for every n in [0, max].
    Table {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value = "auto")]
        strategy: StrategyArg,
        #[command(flatten)]
        output: Output,
    },
    /// Indices n where r(n + 1) < r(n), or r(n + 1) <= r(n) with --strict.
    Violations {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        strict: bool,
        #[arg(long, value_enum, default_value = "auto")]
        strategy: StrategyArg,
        #[command(flatten)]
        output: Output,
    },
    /// |A ∩ [1, max]| / max as an exact fraction.
    Density {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        output: Output,
    },
    /// A predicted and verified n with r2(n) > r2(n + 1).
    Witness {
        #[arg(long)]
        set: String,
        /// How far to look for missing integers.
        #[arg(long = "max", default_value_t = 10_000)]
        scan_bound: u64,
        #[command(flatten)]
        output: Output,
    },
    /// Run a named verification suite.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        #[arg(long)]
        max: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Corrupt one table entry per suite; a working suite then fails.
        #[arg(long)]
        self_test: bool,
        #[command(flatten)]
        output: Output,
    },
    /// The pairs of A x A drawn at (a + b, a) for a + b <= max.
    Render {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        output: Output,
    },
    /// Greedily drop integers from [0, max] while r3 stays non-decreasing.
    SearchR3 {
        #[arg(long)]
        max: u64,
        /// Most integers to drop.
        #[arg(long)]
        exclusions: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Args, Debug)]
struct Target {
    #[arg(long)]
    set: String,
    #[arg(long)]
    max: u64,
}

#[derive(Args, Debug)]
struct Output {
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    /// Memory budget in bytes.
    #[arg(long)]
    budget: Option<u64>,
    /// Write the data here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
    Svg,
    Ascii,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum StrategyArg {
    Naive,
    Word,
    Sparse,
    Auto,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Naive => Strategy::Naive,
            StrategyArg::Word => Strategy::WordParallel,
            StrategyArg::Sparse => Strategy::Sparse,
            StrategyArg::Auto => Strategy::Auto,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    R1,
    R2,
    R3,
}

impl From<KindArg> for RepKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::R1 => RepKind::R1,
            KindArg::R2 => RepKind::R2,
            KindArg::R3 => RepKind::R3,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    Lemma,
    Identities,
    Strategies,
    Thm11a,
    Thm11b,
    Blocks,
    Thm12,
    Thm13,
    Diagram,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Lemma => Suite::Lemma,
            SuiteArg::Identities => Suite::Identities,
            SuiteArg::Strategies => Suite::Strategies,
            SuiteArg::Thm11a => Suite::Thm11a,
            SuiteArg::Thm11b => Suite::Thm11b,
            SuiteArg::Blocks => Suite::Blocks,
            SuiteArg::Thm12 => Suite::Thm12,
            SuiteArg::Thm13 => Suite::Thm13,
            SuiteArg::Diagram => Suite::Diagram,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Serialize)]
struct WitnessReport<'a> {
    #[serde(flatten)]
    witness: &'a DecreaseWitness,
    bruteforce_first_decrease: Option<u64>,
}

enum Failure {
    Lib(Error),
    Io(io::Error),
    Violated,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, stdout, stderr) {
        Ok(()) => EXIT_OK,
        Err(Failure::Violated) => EXIT_VIOLATED,
        Err(Failure::Lib(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            match e {
                Error::Budget { .. } => EXIT_BUDGET,
                Error::TheoremViolated(_) => EXIT_VIOLATED,
                _ => EXIT_USAGE,
            }
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn execute(
    command: Command,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<(), Failure> {
    match command {
        Command::Table {
            target,
            strategy,
            output,
        } => {
            let format = output.format_among(&[FormatArg::Csv, FormatArg::Json], FormatArg::Csv)?;
            let set = parse_set(&target.set)?;
            let table = batch_table_with(&set, target.max, strategy.into(), &output.config())?;
            output.emit(stdout, |w| match format {
                FormatArg::Json => writeln!(w, "{}", table.to_json()),
                _ => table.write_csv(w),
            })
        }
        Command::Violations {
            target,
            kind,
            strict,
            strategy,
            output,
        } => {
            let format =
                output.format_among(&[FormatArg::Csv, FormatArg::Json], FormatArg::Json)?;
            let set = parse_set(&target.set)?;
            let table = batch_table_with(&set, target.max, strategy.into(), &output.config())?;
            let report = find_violations(&table, kind.into(), strict);
            let _ = writeln!(
                stderr,
                "{} violations in [0, {}]",
                report.count, report.max_n
            );
            output.emit(stdout, |w| match format {
                FormatArg::Json => writeln!(w, "{}", report.to_json()),
                _ => report.write_csv(w),
            })
        }
        Command::Density { target, output } => {
            let format =
                output.format_among(&[FormatArg::Csv, FormatArg::Json], FormatArg::Json)?;
            let set = parse_set(&target.set)?;
            let d = natural_density_estimate(&set, target.max)?;
            output.emit(stdout, |w| match format {
                FormatArg::Json => {
                    writeln!(w, "{}", serde_json::to_string(&d).expect("serializes"))
                }
                _ => {
                    let mut csv = csv::Writer::from_writer(w);
                    csv.write_record(["N", "member_count", "num", "den"])?;
                    csv.serialize((d.window, d.member_count, d.ratio.numer(), d.ratio.denom()))?;
                    csv.flush()
                }
            })
        }
        Command::Witness {
            set,
            scan_bound,
            output,
        } => {
            output.format_among(&[FormatArg::Json], FormatArg::Json)?;
            let set = parse_set(&set)?;
            let witness = predict_r2_decrease(&set, scan_bound)?;
            let first = first_r2_decrease_bruteforce(&set, witness.n + 1);
            let _ = writeln!(
                stderr,
                "predicted {} at n = {}; brute-force first decrease at {}",
                witness.case.tag(),
                witness.n,
                first.map_or("none".to_string(), |f| f.to_string())
            );
            let report = WitnessReport {
                witness: &witness,
                bruteforce_first_decrease: first,
            };
            let doc = serde_json::to_string(&report).expect("serializes");
            output.emit(stdout, |w| writeln!(w, "{doc}"))
        }
        Command::Verify {
            suite,
            max,
            seed,
            self_test,
            output,
        } => {
            output.format_among(&[FormatArg::Json], FormatArg::Json)?;
            let suite = Suite::from(suite);
            let _ = writeln!(stderr, "seed: {seed}");
            let outcomes = run_suite(
                suite,
                &VerifyOptions {
                    seed,
                    max,
                    self_test,
                },
            )?;
            for s in Suite::EACH {
                let mine: Vec<_> = outcomes.iter().filter(|c| c.suite == s).collect();
                if mine.is_empty() {
                    continue;
                }
                let failed: Vec<_> = mine.iter().filter(|c| !c.passed).collect();
                let verdict = if failed.is_empty() { "PASS" } else { "FAIL" };
                let _ = writeln!(
                    stderr,
                    "{s}: {verdict} ({}/{} checks)",
                    mine.len() - failed.len(),
                    mine.len()
                );
                for c in failed {
                    let _ = writeln!(stderr, "  failed: {}", c.check);
                }
            }
            output.emit(stdout, |w| {
                writeln!(
                    w,
                    "{}",
                    serde_json::to_string(&outcomes).expect("serializes")
                )
            })?;
            if all_passed(&outcomes) {
                Ok(())
            } else {
                Err(Failure::Violated)
            }
        }
        Command::Render { target, output } => {
            let format =
                output.format_among(&[FormatArg::Svg, FormatArg::Ascii], FormatArg::Svg)?;
            let set = parse_set(&target.set)?;
            let format = if format == FormatArg::Ascii {
                DiagramFormat::Ascii
            } else {
                DiagramFormat::Svg
            };
            let budget = output.budget.unwrap_or(DEFAULT_DIAGRAM_BUDGET);
            let doc = render_diagram_with(&set, target.max, format, budget)?;
            output.emit(stdout, |w| w.write_all(doc.as_bytes()))
        }
        Command::SearchR3 {
            max,
            exclusions,
            output,
        } => {
            output.format_among(&[FormatArg::Json], FormatArg::Json)?;
            let limit =
                exclusions.unwrap_or(usize::try_from(max).unwrap_or(usize::MAX).saturating_add(1));
            output.config().check_budget(max)?;
            let found = r3_monotone_greedy_search(max, limit)?;
            let _ = writeln!(
                stderr,
                "excluded {} integers; set: {}",
                found.excluded.len(),
                found.set()
            );
            output.emit(stdout, |w| {
                writeln!(w, "{}", serde_json::to_string(&found).expect("serializes"))
            })
        }
    }
}

fn parse_set(spec: &str) -> Result<IntegerSet, Failure> {
    Ok(spec.parse::<IntegerSet>()?)
}

impl Output {
    fn format_among(
        &self,
        allowed: &[FormatArg],
        default: FormatArg,
    ) -> Result<FormatArg, Failure> {
        let format = self.format.unwrap_or(default);
        if allowed.contains(&format) {
            Ok(format)
        } else {
            Err(Error::InvalidArgument(format!(
                "format {:?} is not available here",
                format
                    .to_possible_value()
                    .expect("no skipped variants")
                    .get_name()
            ))
            .into())
        }
    }

    fn config(&self) -> TableConfig {
        let mut config = TableConfig::default();
        if let Some(b) = self.budget {
            config.memory_budget = b;
        }
        config
    }

    fn emit<F>(&self, stdout: &mut dyn Write, write: F) -> Result<(), Failure>
    where
        F: FnOnce(&mut dyn Write) -> io::Result<()>,
    {
        match &self.out {
            Some(path) => {
                let mut file = io::BufWriter::new(File::create(path)?);
                write(&mut file)?;
                file.flush()?;
            }
            None => {
                write(stdout)?;
                stdout.flush()?;
            }
        }
        Ok(())
    }
}
