//! Command-line front end. [`run`] parses arguments, writes its report to the
//! given writer and returns the process exit code: 0 on success, 1 when a
//! verification fails, 2 on usage, parse or I/O errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::classify::{
    classify_up_to, extend_with_distance_floor, mass_check, mass_lower_bound, tabulate, Census, CodeClass,
    LengthClasses,
};
use crate::code::{match_enumerator_family, weight_distribution, GeneratorMatrix};
use crate::db;
use crate::equivalence::{are_equivalent, canonical_code};
use crate::error::{Error, Result};
use crate::standard_form::{graph_to_generator, WeightedGraph};

#[derive(Debug, Parser)]
#[command(name = "sdac9", version, about = "Classify self-dual additive codes over GF(9)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify all codes of length 1..=N and write one database per length.
    Classify {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=64))]
        n: u32,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, env = "SDAC9_WORKERS", value_parser = clap::value_parser!(u32).range(1..))]
        workers: Option<u32>,
    },
    /// Lengthen the classes with d >= D and keep those of length n+1 with d >= D+1.
    Extend {
        #[arg(long)]
        db: PathBuf,
        #[arg(long = "min-d")]
        min_d: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, env = "SDAC9_WORKERS", value_parser = clap::value_parser!(u32).range(1..))]
        workers: Option<u32>,
    },
    /// Report the parameters of one code.
    Inspect {
        #[arg(long, conflicts_with = "trits", required_unless_present = "trits")]
        matrix: Option<PathBuf>,
        /// Standard-form graph as an upper-triangle trit string.
        #[arg(long)]
        trits: Option<String>,
    },
    /// Test two codes for equivalence.
    Equiv {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        /// Exit with status 1 unless the codes are equivalent.
        #[arg(long)]
        expect_equivalent: bool,
    },
    /// Check the mass formula for the database of length N in a directory.
    Mass {
        #[arg(long)]
        db: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=64))]
        n: u32,
    },
    /// Print a census table for one database.
    Stats {
        #[arg(long)]
        db: PathBuf,
        #[arg(long, value_enum, default_value_t = Table::Distance)]
        table: Table,
        /// Tab-separated rows instead of aligned text.
        #[arg(long)]
        tsv: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Table {
    Distance,
    Wd,
    Aut,
    AlphaBeta,
}

enum Outcome {
    Ok,
    Failed,
}

/// Runs the command line given by `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(out, "{}", e.render());
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match dispatch(cli.command, out) {
        Ok(Outcome::Ok) => 0,
        Ok(Outcome::Failed) => 1,
        Err(e) => {
            let _ = writeln!(out, "error: {e}");
            2
        }
    }
}

fn io_err(e: std::io::Error) -> Error {
    Error::io("<output>", e)
}

fn with_workers<R: Send>(workers: Option<u32>, f: impl FnOnce() -> R + Send) -> Result<R> {
    match workers {
        None => Ok(f()),
        Some(w) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(w as usize)
                .build()
                .map_err(|e| Error::Incomplete(format!("cannot start worker pool: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<Outcome> {
    match cmd {
        Command::Classify { n, out: dir, workers } => {
            std::fs::create_dir_all(&dir).map_err(|e| Error::io(&dir, e))?;
            let levels = with_workers(workers, || classify_up_to(n as usize, |_| {}))??;
            for (k, level) in levels.iter().enumerate() {
                let m = k + 1;
                db::write(&db::path_for(&dir, m), m, level)?;
                writeln!(out, "n={m} i={} t={}", level.indecomposable.len(), level.len()).map_err(io_err)?;
            }
            Ok(Outcome::Ok)
        }
        Command::Extend {
            db: path,
            min_d,
            out: out_path,
            workers,
        } => {
            let (n, classes) = db::read(&path)?;
            let input: Vec<CodeClass> = classes.all().into_iter().filter(|c| c.d >= min_d).collect();
            let found = with_workers(workers, || extend_with_distance_floor(&input, min_d + 1))?;
            let (indecomposable, decomposable) = found.into_iter().partition(|c| c.indecomposable);
            let result = LengthClasses {
                indecomposable,
                decomposable,
            };
            db::write(&out_path, n + 1, &result)?;
            writeln!(
                out,
                "n={} d>={}: {} classes from {} parents",
                n + 1,
                min_d + 1,
                result.len(),
                input.len()
            )
            .map_err(io_err)?;
            for c in result.all() {
                writeln!(out, "{} d={} aut={}", c.trits(), c.d, c.aut_order).map_err(io_err)?;
            }
            Ok(Outcome::Ok)
        }
        Command::Inspect { matrix, trits } => {
            let g = match (matrix, trits) {
                (Some(p), _) => read_matrix(&p)?,
                (None, Some(t)) => {
                    let t = t.trim();
                    let n = WeightedGraph::length_for_trits(t.len()).ok_or_else(|| Error::Parse {
                        line: 1,
                        column: 1,
                        token: t.to_string(),
                        message: "trit string length is not n(n-1)/2".into(),
                    })?;
                    graph_to_generator(&WeightedGraph::from_trits(n, t)?)
                }
                (None, None) => unreachable!("clap requires one input"),
            };
            inspect(&g, out)?;
            Ok(Outcome::Ok)
        }
        Command::Equiv {
            a,
            b,
            expect_equivalent,
        } => {
            let eq = are_equivalent(&read_matrix(&a)?, &read_matrix(&b)?)?;
            writeln!(out, "{}", if eq { "equivalent" } else { "inequivalent" }).map_err(io_err)?;
            Ok(if expect_equivalent && !eq {
                Outcome::Failed
            } else {
                Outcome::Ok
            })
        }
        Command::Mass { db: dir, n } => {
            let n = n as usize;
            let path = db::path_for(&dir, n);
            if !path.exists() {
                return Err(Error::Incomplete(format!("no database for n={n} at {}", path.display())));
            }
            let (m, classes) = db::read(&path)?;
            if m != n {
                return Err(Error::LengthMismatch(m, n));
            }
            let report = mass_check(n, &classes.all())?;
            writeln!(out, "n={n} classes={}", classes.len()).map_err(io_err)?;
            writeln!(out, "lhs={}", report.lhs).map_err(io_err)?;
            writeln!(out, "rhs={}", report.rhs).map_err(io_err)?;
            writeln!(out, "{}", if report.equal { "PASS" } else { "FAIL" }).map_err(io_err)?;
            writeln!(out, "lower_bound={}", mass_lower_bound(n)).map_err(io_err)?;
            Ok(if report.equal { Outcome::Ok } else { Outcome::Failed })
        }
        Command::Stats { db: path, table, tsv } => {
            let (n, classes) = db::read(&path)?;
            let census = tabulate(n, &classes.all());
            let rows = table_rows(&census, table);
            write_table(out, &rows, tsv).map_err(io_err)?;
            Ok(Outcome::Ok)
        }
    }
}

fn read_matrix(path: &Path) -> Result<GeneratorMatrix> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    GeneratorMatrix::parse(&text)
}

fn inspect(g: &GeneratorMatrix, out: &mut dyn Write) -> Result<()> {
    let canonical = canonical_code(g)?;
    let wd = weight_distribution(g);
    let n = g.n();
    let d = wd.min_distance().unwrap_or(0);
    let graph = canonical.graph();
    let mut lines = vec![
        format!("n={n}"),
        format!("d={d}"),
        format!("wd={}", wd.counts().iter().map(u64::to_string).collect::<Vec<_>>().join(",")),
        format!("W(y)={wd}"),
        format!("aut={}", canonical.aut_order),
        format!("connected={}", graph.is_connected()),
        format!("trits={}", canonical.trits),
    ];
    if (9..=12).contains(&n) {
        if let Some(m) = match_enumerator_family(n, &wd)? {
            lines.push(format!("alpha={}", m.alpha));
        }
    }
    for l in lines {
        writeln!(out, "{l}").map_err(io_err)?;
    }
    Ok(())
}

fn table_rows(c: &Census, table: Table) -> Vec<Vec<String>> {
    let s = |x: &dyn ToString| x.to_string();
    match table {
        Table::Distance => {
            let mut rows = vec![vec!["d".into(), "indecomposable".into(), "total".into()]];
            for (d, total) in &c.row.by_distance {
                let i = c.indecomposable_by_distance.get(d).copied().unwrap_or(0);
                rows.push(vec![s(d), s(&i), s(total)]);
            }
            rows.push(vec!["all".into(), s(&c.row.i_n), s(&c.row.t_n)]);
            rows
        }
        Table::Wd => {
            let mut rows = vec![vec!["d".into(), "distinct_wd".into()]];
            for (d, k) in &c.distinct_wd_by_distance {
                rows.push(vec![s(d), s(k)]);
            }
            rows.push(vec!["all".into(), s(&c.distinct_wd)]);
            rows
        }
        Table::Aut => {
            let mut rows = vec![vec!["aut".into(), "classes".into(), "d".into(), "trivial".into()]];
            for (a, k) in &c.aut_histogram {
                rows.push(vec![s(a), s(k), String::new(), String::new()]);
            }
            for (d, k) in &c.trivial_by_distance {
                rows.push(vec!["2".into(), String::new(), s(d), s(k)]);
            }
            rows.push(vec!["all".into(), s(&c.row.t_n), String::new(), s(&c.row.trivial_aut_count)]);
            rows
        }
        Table::AlphaBeta => {
            let mut rows = vec![vec!["d".into(), "alpha".into(), "beta".into(), "classes".into()]];
            let mut total = 0;
            for ((d, alpha, beta), k) in &c.alpha_beta {
                rows.push(vec![s(d), s(alpha), s(beta), s(k)]);
                total += k;
            }
            rows.push(vec!["all".into(), String::new(), String::new(), s(&total)]);
            rows
        }
    }
}

fn write_table(out: &mut dyn Write, rows: &[Vec<String>], tsv: bool) -> std::io::Result<()> {
    if tsv {
        for r in rows {
            writeln!(out, "{}", r.join("\t"))?;
        }
        return Ok(());
    }
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|k| rows.iter().filter_map(|r| r.get(k)).map(String::len).max().unwrap_or(0))
        .collect();
    for r in rows {
        let cells: Vec<String> = r.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
        writeln!(out, "{}", cells.join("  ").trim_end())?;
    }
    Ok(())
}
