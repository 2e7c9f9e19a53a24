//! Class database files.
//!
//! ```text
//! # sdac9 v1 n=4
//! # indecomposable
//! 111111 d=3 aut=...
//! # decomposable
//! 000000 d=1 aut=...
//! ```
//!
//! Each section is sorted by trit string. Lines other than the header and the
//! two section markers that start with `#` are ignored.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use crate::classify::{CodeClass, LengthClasses};
use crate::equivalence::CanonicalCode;
use crate::error::{Error, Result};
use crate::standard_form::WeightedGraph;

const HEADER: &str = "# sdac9 v1 n=";
const INDECOMPOSABLE: &str = "# indecomposable";
const DECOMPOSABLE: &str = "# decomposable";

/// The conventional file name for length `n` inside a database directory.
pub fn file_name(n: usize) -> String {
    format!("n{n:02}.db")
}

pub fn path_for(dir: &Path, n: usize) -> PathBuf {
    dir.join(file_name(n))
}

pub fn render(n: usize, classes: &LengthClasses) -> String {
    let mut out = format!("{HEADER}{n}\n{INDECOMPOSABLE}\n");
    let line = |out: &mut String, c: &CodeClass| {
        writeln!(out, "{} d={} aut={}", c.trits(), c.d, c.aut_order).expect("writing to a String");
    };
    let mut indec: Vec<&CodeClass> = classes.indecomposable.iter().collect();
    indec.sort_by(|a, b| a.trits().cmp(b.trits()));
    for c in indec {
        line(&mut out, c);
    }
    out.push_str(DECOMPOSABLE);
    out.push('\n');
    let mut dec: Vec<&CodeClass> = classes.decomposable.iter().collect();
    dec.sort_by(|a, b| a.trits().cmp(b.trits()));
    for c in dec {
        line(&mut out, c);
    }
    out
}

pub fn write(path: &Path, n: usize, classes: &LengthClasses) -> Result<()> {
    std::fs::write(path, render(n, classes)).map_err(|e| Error::io(path, e))
}

/// Parses a database. Classes in the decomposable section, and classes whose
/// graph is disconnected, are marked decomposable.
pub fn parse(text: &str, path: &Path) -> Result<(usize, LengthClasses)> {
    let bad = |line: usize, message: String| Error::MalformedDb {
        path: path.to_path_buf(),
        message: format!("line {line}: {message}"),
    };
    let mut lines = text.lines().enumerate();
    let (_, header) = lines
        .next()
        .ok_or_else(|| bad(1, "missing header".into()))?;
    let n: usize = header
        .strip_prefix(HEADER)
        .and_then(|s| s.trim().parse().ok())
        .filter(|&n| n >= 1)
        .ok_or_else(|| bad(1, format!("expected `{HEADER}<n>`, found `{header}`")))?;
    let mut out = LengthClasses::default();
    let mut in_decomposable = false;
    for (k, raw) in lines {
        let lineno = k + 1;
        let line = raw.trim();
        if line == INDECOMPOSABLE {
            in_decomposable = false;
            continue;
        }
        if line == DECOMPOSABLE {
            in_decomposable = true;
            continue;
        }
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        // the single class at n = 1 has an empty trit string
        let (trits, rest): (&str, Vec<&str>) = if line.starts_with("d=") {
            ("", fields.collect())
        } else {
            let t = fields.next().unwrap_or("");
            (t, fields.collect())
        };
        let wg = WeightedGraph::from_trits(n, trits).map_err(|e| bad(lineno, e.to_string()))?;
        let mut d = None;
        let mut aut = None;
        for f in rest {
            if let Some(v) = f.strip_prefix("d=") {
                d = Some(v.parse::<usize>().map_err(|e| bad(lineno, format!("d: {e}")))?);
            } else if let Some(v) = f.strip_prefix("aut=") {
                aut = Some(v.parse::<u128>().map_err(|e| bad(lineno, format!("aut: {e}")))?);
            } else {
                return Err(bad(lineno, format!("unexpected field `{f}`")));
            }
        }
        let d = d.ok_or_else(|| bad(lineno, "missing d=".into()))?;
        let aut_order = aut.ok_or_else(|| bad(lineno, "missing aut=".into()))?;
        let class = CodeClass {
            canonical: CanonicalCode {
                n,
                trits: trits.to_string(),
                aut_order,
            },
            d,
            aut_order,
            indecomposable: !in_decomposable && wg.is_connected(),
        };
        if class.indecomposable {
            out.indecomposable.push(class);
        } else {
            out.decomposable.push(class);
        }
    }
    Ok((n, out))
}

pub fn read(path: &Path) -> Result<(usize, LengthClasses)> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse(&text, path)
}
