use std::io::Read;

use glinv_core::ideals::{make_ideal, power_of_minors, saturated_power, symbolic_power};
use glinv_core::{DegreeWindow, InvariantIdeal, MatrixContext, Partition};
use serde::Deserialize;

use crate::args::{Dims, IdealSource};
use crate::Failure;

#[derive(Deserialize)]
#[serde(untagged)]
enum Document {
    Full {
        m: Option<usize>,
        n: Option<usize>,
        gens: Vec<Partition>,
    },
    Bare(Vec<Partition>),
}

/// Resolves the matrix size, transposing when `m < n`.
pub fn context(dims: &Dims, notices: &mut Vec<String>) -> Result<MatrixContext, Failure> {
    let (Some(m), Some(n)) = (dims.m, dims.n) else {
        return Err(Failure::usage("both -m and -n are required"));
    };
    let (ctx, swapped) = MatrixContext::normalized(m, n)?;
    if swapped {
        notices.push(format!(
            "note: m={m} < n={n}; working with the {n}x{m} transpose, which has the same classification"
        ));
    }
    Ok(ctx)
}

pub fn parse_pair(s: &str, what: &str) -> Result<(usize, u32), Failure> {
    let bad = || Failure::usage(format!("{what} expects P,D, got {s:?}"));
    let (p, d) = s.split_once(',').ok_or_else(bad)?;
    Ok((
        p.trim().parse().map_err(|_| bad())?,
        d.trim().parse().map_err(|_| bad())?,
    ))
}

pub fn parse_window(s: &str) -> Result<DegreeWindow, Failure> {
    let bad = || Failure::usage(format!("window expects LO..HI, got {s:?}"));
    let (lo, hi) = s.split_once("..").ok_or_else(bad)?;
    let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
    Ok(DegreeWindow::new(lo, hi)?)
}

fn read_text(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::usage(format!("reading stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("reading {path}: {e}")))
    }
}

/// Dimensions (if present) and generators of an ideal document.
type Parsed = (Option<usize>, Option<usize>, Vec<Partition>);

fn parse_document(text: &str) -> Result<Parsed, Failure> {
    let doc: Document = serde_json::from_str(text)
        .map_err(|e| Failure::usage(format!("not an ideal document: {e}")))?;
    Ok(match doc {
        Document::Full { m, n, gens } => (m, n, gens),
        Document::Bare(gens) => (None, None, gens),
    })
}

/// Fills missing dimensions from a document; conflicting values are an error.
fn merge_dims(dims: &Dims, m: Option<usize>, n: Option<usize>) -> Result<Dims, Failure> {
    let pick = |flag: Option<usize>, doc: Option<usize>, name: &str| match (flag, doc) {
        (Some(a), Some(b)) if a != b => Err(Failure::usage(format!(
            "-{name} {a} conflicts with {name}={b} in the input"
        ))),
        (a, b) => Ok(a.or(b)),
    };
    Ok(Dims {
        m: pick(dims.m, m, "m")?,
        n: pick(dims.n, n, "n")?,
    })
}

fn build(
    dims: &Dims,
    kind: &str,
    body: &str,
    notices: &mut Vec<String>,
) -> Result<InvariantIdeal, Failure> {
    match kind {
        "power" | "symbolic" | "saturated" => {
            let ctx = context(dims, notices)?;
            let (p, d) = parse_pair(body, kind)?;
            Ok(match kind {
                "power" => power_of_minors(ctx, p, d)?,
                "symbolic" => symbolic_power(ctx, p, d)?,
                _ => saturated_power(ctx, p, d)?,
            })
        }
        "file" | "gens" => {
            let text = if kind == "file" {
                read_text(body)?
            } else {
                body.to_string()
            };
            let (m, n, gens) = parse_document(&text)?;
            let dims = merge_dims(dims, m, n)?;
            let ctx = context(&dims, notices)?;
            Ok(make_ideal(ctx, &gens)?)
        }
        _ => unreachable!("unknown source kind"),
    }
}

pub fn ideal(src: &IdealSource, notices: &mut Vec<String>) -> Result<InvariantIdeal, Failure> {
    let given: Vec<(&str, &String)> = [
        ("gens", &src.gens),
        ("file", &src.input),
        ("power", &src.power),
        ("symbolic", &src.symbolic),
        ("saturated", &src.saturated),
    ]
    .into_iter()
    .filter_map(|(k, v)| v.as_ref().map(|v| (k, v)))
    .collect();
    match given.as_slice() {
        [(kind, body)] => build(&src.dims, kind, body, notices),
        [] => Err(Failure::usage(
            "give the ideal with one of --gens, --input, --power, --symbolic, --saturated",
        )),
        _ => Err(Failure::usage(
            "give only one of --gens, --input, --power, --symbolic, --saturated",
        )),
    }
}

/// `power:P,D`, `symbolic:P,D`, `saturated:P,D`, `@FILE`, `-` or JSON generators.
pub fn ideal_spec(
    dims: &Dims,
    spec: &str,
    notices: &mut Vec<String>,
) -> Result<InvariantIdeal, Failure> {
    let spec = spec.trim();
    if let Some((kind, body)) = spec.split_once(':') {
        if matches!(kind, "power" | "symbolic" | "saturated") {
            return build(dims, kind, body, notices);
        }
    }
    if spec == "-" {
        return build(dims, "file", "-", notices);
    }
    if let Some(path) = spec.strip_prefix('@') {
        return build(dims, "file", path, notices);
    }
    build(dims, "gens", spec, notices)
}

pub fn weight(s: &str) -> Result<Vec<i64>, Failure> {
    let s = s.trim().trim_start_matches('[').trim_end_matches(']');
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Failure::usage(format!("bad weight entry {t:?}")))
        })
        .collect()
}
