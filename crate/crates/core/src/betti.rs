//! Syzygies of the ideals `I_{a x b}` generated by the `b`-th powers of the
//! `a x a` minors (up to GL-action), as equivariant Betti polynomials.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{check_range, Error, Result};
use crate::ideals::MatrixContext;
use crate::partitions::{attach, enumerate_in_box, DominantWeight};
use crate::qpoly::qbinomial;
use crate::schur::{dim_schur, EquivariantCharacter, IrredTerm};

/// `B_I(q) = Σ_i Tor_i(I, C) q^i`, stored as one character indexed by `i`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiPolynomial {
    ch: EquivariantCharacter,
}

impl BettiPolynomial {
    pub fn character(&self) -> &EquivariantCharacter {
        &self.ch
    }

    /// Homological indices carrying a nonzero Tor group.
    pub fn indices(&self) -> Vec<i64> {
        self.ch.indices().into_iter().collect()
    }

    pub fn tor(&self, i: i64) -> Vec<IrredTerm> {
        self.ch.at_index(i).iter().map(|(_, t)| t).collect()
    }

    pub fn by_homological_index(&self) -> BTreeMap<i64, Vec<IrredTerm>> {
        let mut out: BTreeMap<i64, Vec<IrredTerm>> = BTreeMap::new();
        for (i, t) in self.ch.iter() {
            out.entry(i).or_default().push(t);
        }
        out
    }
}

fn check_r(ctx: MatrixContext, r: usize, s: u32) -> Result<()> {
    check_range("r", r, 1, ctx.n())?;
    if s == 0 {
        return Err(Error::OutOfRange {
            name: "s",
            value: 0,
            lo: 1,
            hi: i64::MAX,
        });
    }
    Ok(())
}

/// `h_{r x s}(q) = Σ (S_{λ(r,s;α,β)} C^m ⊗ S_{λ(r,s;β',α')} C^n) q^{|α|+|β|}`,
/// with `α` in the `min(r,s) x (n-r)` box and `β` in the `(m-r) x min(r,s)` box.
pub fn h_rect(ctx: MatrixContext, r: usize, s: u32) -> Result<EquivariantCharacter> {
    check_r(ctx, r, s)?;
    let (m, n) = (ctx.m(), ctx.n());
    let k = r.min(s as usize);
    let alphas = enumerate_in_box(k, (n - r) as u32);
    let betas = enumerate_in_box(m - r, k as u32);
    let mut ch = EquivariantCharacter::new();
    for a in &alphas {
        for b in &betas {
            let left = attach(r, s, a, b)?;
            let right = attach(r, s, &b.conjugate(), &a.conjugate())?;
            let wm = DominantWeight::from_partition(&left, m)?;
            let wn = DominantWeight::from_partition(&right, n)?;
            ch.add_one((a.size() + b.size()) as i64, wm, wn);
        }
    }
    Ok(ch)
}

/// `B_{I_{a x b}}(q) = Σ_{t=0}^{n-a} h_{(a+t) x (b+t)}(q) q^{t²+2t} C(t+min(a,b)-1, t)_{q²}`.
pub fn betti_polynomial(ctx: MatrixContext, a: usize, b: u32) -> Result<BettiPolynomial> {
    check_r(ctx, a, b)?;
    let k = a.min(b as usize) as u32;
    let pieces: Vec<Result<EquivariantCharacter>> = (0..=(ctx.n() - a) as u32)
        .into_par_iter()
        .map(|t| {
            let h = h_rect(ctx, a + t as usize, b + t)?;
            let mut piece = EquivariantCharacter::new();
            for (e, c) in qbinomial(t + k - 1, t).substitute_power(2).terms() {
                let c = c.to_biguint().expect("Gauss coefficients are nonnegative");
                piece.merge(&h.reindexed((t * t + 2 * t + e) as i64, &c));
            }
            Ok(piece)
        })
        .collect();
    let mut ch = EquivariantCharacter::new();
    for p in pieces {
        ch.merge(&p?);
    }
    Ok(BettiPolynomial { ch })
}

/// `β_{i,d} = dim Tor_i(I, C)_d`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(i64, i64), BigUint>,
}

pub fn betti_table(bp: &BettiPolynomial, ctx: MatrixContext) -> Result<BettiTable> {
    let mut entries: BTreeMap<(i64, i64), BigUint> = BTreeMap::new();
    for (i, t) in bp.ch.iter() {
        let d = &t.multiplicity * dim_schur(&t.wm, ctx.m())? * dim_schur(&t.wn, ctx.n())?;
        *entries.entry((i, t.degree)).or_insert_with(BigUint::zero) += d;
    }
    Ok(BettiTable { entries })
}

impl BettiTable {
    pub fn get(&self, i: i64, degree: i64) -> BigUint {
        self.entries
            .get(&(i, degree))
            .cloned()
            .unwrap_or_else(BigUint::zero)
    }

    pub fn entries(&self) -> &BTreeMap<(i64, i64), BigUint> {
        &self.entries
    }

    /// `Σ_d β_{i,d}` for `i = 0..=max i`.
    pub fn totals(&self) -> Vec<BigUint> {
        let Some(top) = self.entries.keys().map(|k| k.0).max() else {
            return Vec::new();
        };
        let mut out = vec![BigUint::zero(); top as usize + 1];
        for ((i, _), v) in &self.entries {
            out[*i as usize] += v;
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("i,degree,beta\n");
        for ((i, d), v) in &self.entries {
            let _ = writeln!(s, "{i},{d},{v}");
        }
        s
    }

    /// Row `j` holds `β_{i,i+j}` in column `i`; zeros print as `.`.
    pub fn pretty(&self) -> String {
        let totals = self.totals();
        if totals.is_empty() {
            return String::from("(zero)\n");
        }
        let rows: Vec<i64> = {
            let lo = self.entries.keys().map(|(i, d)| d - i).min().unwrap_or(0);
            let hi = self.entries.keys().map(|(i, d)| d - i).max().unwrap_or(0);
            (lo..=hi).collect()
        };
        let cols = totals.len();
        let mut grid: Vec<Vec<String>> = Vec::new();
        let mut header = vec![String::new()];
        header.extend((0..cols).map(|i| i.to_string()));
        grid.push(header);
        let mut total_row = vec![String::from("total:")];
        total_row.extend(totals.iter().map(|v| v.to_string()));
        grid.push(total_row);
        for j in rows {
            let mut row = vec![format!("{j}:")];
            for i in 0..cols as i64 {
                let v = self.get(i, i + j);
                row.push(if v.is_zero() {
                    String::from(".")
                } else {
                    v.to_string()
                });
            }
            grid.push(row);
        }
        let ncols = cols + 1;
        let widths: Vec<usize> = (0..ncols)
            .map(|c| grid.iter().map(|r| r[c].len()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for row in grid {
            let line: Vec<String> = row
                .iter()
                .enumerate()
                .map(|(c, cell)| format!("{cell:>w$}", w = widths[c]))
                .collect();
            let _ = writeln!(out, "{}", line.join(" ").trim_end());
        }
        out
    }
}
