//! Local cohomology `H^j_{I_p}(S)` through its composition factors `D_s`.
//!
//! The multiplicity of `D_s` in `H^j` is the coefficient of `q^j` in
//! `q^{(n-p+1)^2 + (n-s)(m-n)} * C(n-s-1, p-1-s)_{q^2}`.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::error::{check_range, Error, Result};
use crate::homology::ext::{enumerate_bounded, lambda_s};
use crate::homology::DegreeWindow;
use crate::ideals::MatrixContext;
use crate::partitions::DominantWeight;
use crate::qpoly::{qbinomial, QPolynomial};
use crate::schur::EquivariantCharacter;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LCTable {
    ctx: MatrixContext,
    p: usize,
    rows: BTreeMap<u32, BTreeMap<usize, BigUint>>,
}

impl LCTable {
    pub fn ctx(&self) -> MatrixContext {
        self.ctx
    }

    pub fn p(&self) -> usize {
        self.p
    }

    /// `j -> (s -> multiplicity of D_s in H^j)`, nonzero entries only.
    pub fn rows(&self) -> &BTreeMap<u32, BTreeMap<usize, BigUint>> {
        &self.rows
    }

    pub fn multiplicity(&self, j: u32, s: usize) -> BigUint {
        self.rows
            .get(&j)
            .and_then(|r| r.get(&s))
            .cloned()
            .unwrap_or_else(BigUint::zero)
    }
}

/// Generating polynomial in `q` of the multiplicities of `D_s`.
pub fn ds_generating_polynomial(ctx: MatrixContext, p: usize, s: usize) -> Result<QPolynomial> {
    check_range("p", p, 1, ctx.n())?;
    check_range("s", s, 0, p - 1)?;
    let (m, n) = (ctx.m() as u32, ctx.n() as u32);
    let (p, s) = (p as u32, s as u32);
    let shift = (n - p + 1).pow(2) + (n - s) * (m - n);
    Ok(qbinomial(n - s - 1, p - 1 - s)
        .substitute_power(2)
        .shift(shift))
}

pub fn lc_table(ctx: MatrixContext, p: usize) -> Result<LCTable> {
    check_range("p", p, 1, ctx.n())?;
    let mut rows: BTreeMap<u32, BTreeMap<usize, BigUint>> = BTreeMap::new();
    for s in 0..p {
        for (j, c) in ds_generating_polynomial(ctx, p, s)?.terms() {
            let c = c
                .to_biguint()
                .expect("Gauss polynomial coefficients are nonnegative");
            *rows
                .entry(j)
                .or_default()
                .entry(s)
                .or_insert_with(BigUint::zero) += c;
        }
    }
    Ok(LCTable { ctx, p, rows })
}

/// Least and greatest `j` with `H^j_{I_p}(S) != 0`.
pub fn lc_support(ctx: MatrixContext, p: usize) -> Result<(u32, u32)> {
    let t = lc_table(ctx, p)?;
    let lo = *t.rows.keys().next().expect("table is nonempty");
    let hi = *t.rows.keys().next_back().expect("table is nonempty");
    Ok((lo, hi))
}

/// Character of `D_s` in the degrees of `w`: every dominant `λ` with
/// `λ_s >= s-n` and `λ_{s+1} <= s-m` contributes `S_λ(s) C^m ⊗ S_λ C^n`
/// in degree `|λ|`.
///
/// For `s = 0` each degree is finite and the top degree is `-mn`. For
/// `s >= 1` every degree is infinite (raise `λ_1`, lower `λ_n`), so a cap
/// `top` on `λ_1` is required.
pub fn ds_character(
    ctx: MatrixContext,
    s: usize,
    w: DegreeWindow,
    top: Option<i64>,
) -> Result<EquivariantCharacter> {
    check_range("s", s, 0, ctx.n() - 1)?;
    let (m, n) = (ctx.m() as i64, ctx.n());
    if s >= 1 && top.is_none() {
        return Err(Error::Unbounded(format!(
            "D_{s} has infinite-dimensional graded pieces; give a bound on the first entry"
        )));
    }
    let si = s as i64;
    let mut lo = vec![i64::MIN; n];
    let mut hi: Vec<Option<i64>> = vec![None; n];
    for x in lo.iter_mut().take(s) {
        *x = si - n as i64;
    }
    for h in hi.iter_mut().skip(s) {
        *h = Some(si - m);
    }
    if let Some(b) = top {
        for h in hi.iter_mut() {
            *h = Some(h.map_or(b, |x| x.min(b)));
        }
    }
    // every entry is at least λ_n >= w.lo - (sum of caps on λ_1..λ_{n-1})
    let caps: i64 = hi[..n - 1]
        .iter()
        .map(|h| h.expect("all entries are capped here"))
        .sum();
    let floor = w.lo() - caps;
    for x in lo.iter_mut() {
        *x = (*x).max(floor);
    }
    let mut ch = EquivariantCharacter::new();
    enumerate_bounded(&lo, &hi, w, |lam| {
        let wn = DominantWeight::new(lam.to_vec()).expect("enumerated weights are dominant");
        ch.add_one(0, lambda_s(ctx, lam, s), wn);
    });
    Ok(ch)
}

/// Graded dimensions of `D_0` summed over each degree in the window.
pub fn d0_dimensions(ctx: MatrixContext, w: DegreeWindow) -> Result<BTreeMap<i64, BigUint>> {
    let ch = ds_character(ctx, 0, w, None)?;
    Ok(ch
        .graded_dimensions(ctx.m(), ctx.n())?
        .into_iter()
        .map(|((_, d), v)| (d, v))
        .collect())
}

/// Total Euler-style count of composition factors at `q = 1`.
pub fn factor_count(t: &LCTable, s: usize) -> u64 {
    t.rows
        .values()
        .filter_map(|r| r.get(&s))
        .map(|c| c.to_u64().unwrap_or(u64::MAX))
        .sum()
}
