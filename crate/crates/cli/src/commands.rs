use std::collections::BTreeMap;
use std::fmt::{Display, Write as _};
use std::io::Write;

use glinv_core::betti::{betti_polynomial, betti_table};
use glinv_core::homology::{ext_map_analysis, ext_quotient, regularity, saturation_filter, zset};
use glinv_core::ideals::{ideal_leq, power_of_minors, saturate, saturated_power, symbolic_power};
use glinv_core::loccoh::{ds_character, lc_support, lc_table};
use glinv_core::partitions::young_diagram;
use glinv_core::schur::{dim_schur, dim_term};
use glinv_core::{
    qbinomial, DegreeWindow, DominantWeight, EquivariantCharacter, InvariantIdeal, IrredTerm,
    MatrixContext, Partition, ZPair,
};
use serde_json::{json, Value};

use crate::args::*;
use crate::input::{context, ideal, ideal_spec, parse_window, weight};
use crate::{selftest, Failure, Report};

pub fn dispatch(
    cmd: Command,
    format: Format,
    notices: &mut Vec<String>,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let report = match cmd {
        Command::Ideal(c) | Command::Direct(c) => ideal_command(c, notices)?,
        Command::Lc(a) => lc(&a, notices)?,
        Command::Ds(a) => ds(&a, notices)?,
        Command::Betti(a) => betti(&a, notices)?,
        Command::Schurdim(a) => schurdim(&a)?,
        Command::Qbinom(a) => qbinom(&a),
        Command::Selftest => return selftest::run_all(format, out),
    };
    let mut text = match format {
        Format::Json => report.json.to_string(),
        Format::Csv => report.csv,
        Format::Pretty => report.pretty,
    };
    if !text.ends_with('\n') {
        text.push('\n');
    }
    out.write_all(text.as_bytes())
        .map_err(|e| Failure::usage(format!("writing output: {e}")))
}

fn big(v: impl Display) -> Value {
    Value::Number(
        v.to_string()
            .parse()
            .expect("integers are valid JSON numbers"),
    )
}

fn joined<T: Display>(xs: &[T], sep: &str) -> String {
    xs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

fn ideal_command(c: IdealCommand, notices: &mut Vec<String>) -> Result<Report, Failure> {
    match c {
        IdealCommand::Normalize(src) => Ok(ideal_report(&ideal(&src, notices)?)),
        IdealCommand::Compare(a) => compare(&a, notices),
        IdealCommand::Power(a) => Ok(ideal_report(&power_of_minors(
            context(&a.dims, notices)?,
            a.p,
            a.d,
        )?)),
        IdealCommand::Symbolic(a) => Ok(ideal_report(&symbolic_power(
            context(&a.dims, notices)?,
            a.p,
            a.d,
        )?)),
        IdealCommand::Saturated(a) => Ok(ideal_report(&saturated_power(
            context(&a.dims, notices)?,
            a.p,
            a.d,
        )?)),
        IdealCommand::Saturate(a) => Ok(ideal_report(&saturate(&ideal(&a.source, notices)?, a.p)?)),
        IdealCommand::Zset(a) => zset_report(&a, notices),
        IdealCommand::Ext(a) => ext(&a, notices),
        IdealCommand::Reg(src) => {
            let i = ideal(&src, notices)?;
            let r = regularity(&i)?;
            Ok(Report {
                json: json!({ "m": i.ctx().m(), "n": i.ctx().n(), "gens": i.gens(), "reg": r }),
                csv: format!("reg\n{r}\n"),
                pretty: format!("reg = {r}\n"),
            })
        }
    }
}

fn ideal_report(i: &InvariantIdeal) -> Report {
    let (m, n) = (i.ctx().m(), i.ctx().n());
    let csv: String = i
        .gens()
        .iter()
        .map(|g| {
            if g.is_zero() {
                "0\n".to_string()
            } else {
                format!("{}\n", joined(g.parts(), ","))
            }
        })
        .collect();
    let mut pretty = String::new();
    if i.is_zero() {
        pretty.push_str(&format!("zero ideal, {m}x{n} matrices\n"));
    } else {
        let k = i.gens().len();
        let _ = writeln!(
            pretty,
            "{i} in {m}x{n} matrices, {k} minimal generator{}",
            if k == 1 { "" } else { "s" }
        );
        for g in i.gens() {
            let _ = writeln!(pretty, "\n{g}\n{}", young_diagram(g));
        }
    }
    Report {
        json: json!({ "gens": i.gens(), "m": m, "n": n }),
        csv,
        pretty,
    }
}

fn compare(a: &CompareArgs, notices: &mut Vec<String>) -> Result<Report, Failure> {
    let left = ideal_spec(&a.dims, &a.left, notices)?;
    let right = ideal_spec(&a.dims, &a.right, notices)?;
    let (lr, rl) = (ideal_leq(&left, &right)?, ideal_leq(&right, &left)?);
    let (relation, symbol) = match (lr, rl) {
        (true, true) => ("equal", "="),
        (true, false) => ("left_contains", "strictly contains"),
        (false, true) => ("right_contains", "is strictly contained in"),
        (false, false) => ("incomparable", "is incomparable with"),
    };
    Ok(Report {
        json: json!({
            "m": left.ctx().m(),
            "n": left.ctx().n(),
            "left": left.gens(),
            "right": right.gens(),
            "relation": relation,
        }),
        csv: format!("relation\n{relation}\n"),
        pretty: format!("{left} {symbol} {right}\n"),
    })
}

fn pairs_report(ctx: MatrixContext, gens: &[Partition], pairs: &[ZPair]) -> Report {
    let mut csv = String::from("l,z\n");
    let mut pretty = String::new();
    for zp in pairs {
        let _ = writeln!(csv, "{},{}", zp.l(), joined(zp.z().parts(), " "));
        let _ = writeln!(pretty, "{zp}");
    }
    if pairs.is_empty() {
        pretty.push_str("(empty)\n");
    }
    Report {
        json: json!({ "m": ctx.m(), "n": ctx.n(), "gens": gens, "pairs": pairs }),
        csv,
        pretty,
    }
}

fn zset_report(a: &ZsetArgs, notices: &mut Vec<String>) -> Result<Report, Failure> {
    let i = ideal(&a.source, notices)?;
    let mut pairs = zset(&i)?;
    if let Some(p) = a.min_l {
        pairs = saturation_filter(&pairs, p);
    }
    Ok(pairs_report(i.ctx(), i.gens(), &pairs))
}

fn term_json(t: &IrredTerm, ctx: MatrixContext) -> Result<Value, Failure> {
    Ok(json!({
        "wm": t.wm,
        "wn": t.wn,
        "deg": t.degree,
        "mult": big(&t.multiplicity),
        "dim": big(dim_term(t, ctx.m(), ctx.n())?),
    }))
}

fn grouped(ch: &EquivariantCharacter) -> BTreeMap<i64, Vec<IrredTerm>> {
    let mut by: BTreeMap<i64, Vec<IrredTerm>> = BTreeMap::new();
    for (j, t) in ch.iter() {
        by.entry(j).or_default().push(t);
    }
    by
}

fn character_json(ch: &EquivariantCharacter, ctx: MatrixContext) -> Result<Value, Failure> {
    grouped(ch)
        .into_iter()
        .map(|(j, ts)| {
            let terms = ts
                .iter()
                .map(|t| term_json(t, ctx))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(json!({ "j": j, "terms": terms }))
        })
        .collect::<Result<Vec<_>, Failure>>()
        .map(Value::Array)
}

fn character_csv(
    ch: &EquivariantCharacter,
    ctx: MatrixContext,
    label: Option<&str>,
    csv: &mut String,
) -> Result<(), Failure> {
    for (j, t) in ch.iter() {
        let dim = dim_term(&t, ctx.m(), ctx.n())?;
        if let Some(l) = label {
            let _ = write!(csv, "{l},");
        }
        let _ = writeln!(
            csv,
            "{j},{},{},{},{},{dim}",
            t.degree,
            joined(t.wm.entries(), " "),
            joined(t.wn.entries(), " "),
            t.multiplicity
        );
    }
    Ok(())
}

fn character_pretty(
    ch: &EquivariantCharacter,
    ctx: MatrixContext,
    head: &str,
    out: &mut String,
) -> Result<(), Failure> {
    if ch.is_empty() {
        out.push_str("  (nothing in window)\n");
        return Ok(());
    }
    for (j, ts) in grouped(ch) {
        let _ = writeln!(out, "{head}{j}:");
        for t in ts {
            let dim = dim_term(&t, ctx.m(), ctx.n())?;
            let mult = if t.multiplicity == 1u32.into() {
                String::new()
            } else {
                format!("{} x ", t.multiplicity)
            };
            let _ = writeln!(
                out,
                "  degree {}: {mult}S{} ⊗ S{}  [dim {dim}]",
                t.degree, t.wm, t.wn
            );
        }
    }
    Ok(())
}

fn window_json(w: DegreeWindow) -> Value {
    json!([w.lo(), w.hi()])
}

fn ext(a: &ExtArgs, notices: &mut Vec<String>) -> Result<Report, Failure> {
    let i = ideal(&a.source, notices)?;
    let ctx = i.ctx();
    let w = parse_window(&a.window)?;
    let Some(spec) = &a.sub else {
        let ch = ext_quotient(&i, w)?;
        let mut csv = String::from("j,degree,wm,wn,mult,dim\n");
        character_csv(&ch, ctx, None, &mut csv)?;
        let mut pretty = format!("Ext(S/{i}, S), degrees {}..{}\n", w.lo(), w.hi());
        character_pretty(&ch, ctx, "Ext^", &mut pretty)?;
        return Ok(Report {
            json: json!({
                "m": ctx.m(),
                "n": ctx.n(),
                "gens": i.gens(),
                "window": window_json(w),
                "ext": character_json(&ch, ctx)?,
            }),
            csv,
            pretty,
        });
    };
    let dims = Dims {
        m: Some(ctx.m()),
        n: Some(ctx.n()),
    };
    let sub = ideal_spec(&dims, spec, notices)?;
    let r = ext_map_analysis(&i, &sub, w)?;
    let parts = [
        ("kernel", &r.kernel),
        ("image", &r.image),
        ("cokernel", &r.cokernel),
    ];
    let mut csv = String::from("part,j,degree,wm,wn,mult,dim\n");
    let mut pretty = format!(
        "Ext(S/{i}, S) -> Ext(S/{sub}, S), degrees {}..{}\n",
        w.lo(),
        w.hi()
    );
    for (name, ch) in parts {
        character_csv(ch, ctx, Some(name), &mut csv)?;
        let _ = writeln!(pretty, "{name}:");
        character_pretty(ch, ctx, "  Ext^", &mut pretty)?;
    }
    Ok(Report {
        json: json!({
            "m": ctx.m(),
            "n": ctx.n(),
            "source": i.gens(),
            "target": sub.gens(),
            "window": window_json(w),
            "kernel": character_json(&r.kernel, ctx)?,
            "image": character_json(&r.image, ctx)?,
            "cokernel": character_json(&r.cokernel, ctx)?,
            "kernel_pairs": r.kernel_pairs,
            "image_pairs": r.image_pairs,
            "cokernel_pairs": r.cokernel_pairs,
        }),
        csv,
        pretty,
    })
}

fn lc_note(ctx: MatrixContext) -> &'static str {
    if ctx.m() == ctx.n() {
        "m = n: equivariant holonomic modules do not form a semisimple category here, \
         so these are composition-factor multiplicities, not a direct-sum decomposition"
    } else {
        "m > n: the relevant category is semisimple, so each H^j is the direct sum of the listed D_s"
    }
}

fn lc(a: &LcArgs, notices: &mut Vec<String>) -> Result<Report, Failure> {
    let ctx = context(&a.dims, notices)?;
    let t = lc_table(ctx, a.p)?;
    let (lo, hi) = lc_support(ctx, a.p)?;
    let mut rows = serde_json::Map::new();
    let mut csv = String::from("j,s,multiplicity\n");
    let mut pretty = format!(
        "local cohomology H^j_(I_{})(S), {}x{} matrices\n",
        a.p,
        ctx.m(),
        ctx.n()
    );
    let width = t
        .rows()
        .keys()
        .map(|j| j.to_string().len())
        .max()
        .unwrap_or(1);
    for (j, row) in t.rows() {
        let mut obj = serde_json::Map::new();
        let mut sum = Vec::new();
        for (s, c) in row {
            obj.insert(s.to_string(), big(c));
            let _ = writeln!(csv, "{j},{s},{c}");
            sum.push(if *c == 1u32.into() {
                format!("D_{s}")
            } else {
                format!("{c} D_{s}")
            });
        }
        rows.insert(j.to_string(), Value::Object(obj));
        let _ = writeln!(pretty, "H^{j:<width$} = {}", sum.join(" + "));
    }
    let _ = writeln!(pretty, "support: {lo}..{hi}\nnote: {}", lc_note(ctx));
    Ok(Report {
        json: json!({
            "m": ctx.m(),
            "n": ctx.n(),
            "p": a.p,
            "rows": rows,
            "support": [lo, hi],
            "note": lc_note(ctx),
        }),
        csv,
        pretty,
    })
}

fn ds(a: &DsArgs, notices: &mut Vec<String>) -> Result<Report, Failure> {
    let ctx = context(&a.dims, notices)?;
    let w = parse_window(&a.window)?;
    let ch = ds_character(ctx, a.s, w, a.top)?;
    let terms = ch
        .iter()
        .map(|(_, t)| term_json(&t, ctx))
        .collect::<Result<Vec<_>, _>>()?;
    let mut csv = String::from("j,degree,wm,wn,mult,dim\n");
    character_csv(&ch, ctx, None, &mut csv)?;
    let mut pretty = format!(
        "D_{}, {}x{} matrices, degrees {}..{}\n",
        a.s,
        ctx.m(),
        ctx.n(),
        w.lo(),
        w.hi()
    );
    character_pretty(&ch, ctx, "index ", &mut pretty)?;
    Ok(Report {
        json: json!({
            "m": ctx.m(),
            "n": ctx.n(),
            "s": a.s,
            "window": window_json(w),
            "top": a.top,
            "terms": terms,
        }),
        csv,
        pretty,
    })
}

fn betti(a: &BettiArgs, notices: &mut Vec<String>) -> Result<Report, Failure> {
    let ctx = context(&a.dims, notices)?;
    let bp = betti_polynomial(ctx, a.a, a.b)?;
    let t = betti_table(&bp, ctx)?;
    let table: Vec<Value> = t
        .entries()
        .iter()
        .map(|((i, d), v)| json!({ "i": i, "degree": d, "beta": big(v) }))
        .collect();
    let tor = bp
        .by_homological_index()
        .into_iter()
        .map(|(i, ts)| {
            let terms = ts
                .iter()
                .map(|t| term_json(t, ctx))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(json!({ "i": i, "terms": terms }))
        })
        .collect::<Result<Vec<_>, Failure>>()?;
    let totals: Vec<Value> = t.totals().iter().map(big).collect();
    Ok(Report {
        json: json!({
            "m": ctx.m(),
            "n": ctx.n(),
            "a": a.a,
            "b": a.b,
            "totals": totals,
            "table": table,
            "tor": tor,
        }),
        csv: t.to_csv(),
        pretty: t.pretty(),
    })
}

fn schurdim(a: &SchurArgs) -> Result<Report, Failure> {
    let mut w = weight(&a.weight)?;
    let rank = a.rank.unwrap_or(w.len());
    if rank < w.len() {
        return Err(Failure::usage(format!(
            "weight has {} entries but N={rank}",
            w.len()
        )));
    }
    w.resize(rank, 0);
    let l = DominantWeight::new(w)?;
    let d = dim_schur(&l, rank)?;
    Ok(Report {
        json: json!({ "weight": l, "N": rank, "dim": big(&d) }),
        csv: format!("dim\n{d}\n"),
        pretty: format!("{d}\n"),
    })
}

fn qbinom(a: &QbinomArgs) -> Report {
    let p = qbinomial(a.a, a.b);
    let top = p.degree().unwrap_or(0);
    let coeffs: Vec<Value> = if p.is_zero() {
        Vec::new()
    } else {
        (0..=top).map(|e| big(p.coeff(e))).collect()
    };
    let mut csv = String::from("exponent,coefficient\n");
    for (e, c) in p.terms() {
        let _ = writeln!(csv, "{e},{c}");
    }
    Report {
        json: json!({ "a": a.a, "b": a.b, "coeffs": coeffs }),
        csv,
        pretty: format!("{p}\n"),
    }
}
