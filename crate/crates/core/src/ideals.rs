//! GL-invariant ideals of `C[X_ij]`, `X` a generic `m x n` matrix, encoded
//! by antichains of partitions with at most `n` parts.
//!
//! `I_x` is generated by the GL-orbit of the product of leading minors whose
//! sizes are the column heights of `x`; `x <= y` iff `I_x` contains `I_y`.
//! The unit ideal is `{(0)}` and the zero ideal is the empty antichain.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{check_range, Error, Result};
use crate::partitions::{enumerate_above, enumerate_in_box, minimalize, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MatrixContext {
    m: usize,
    n: usize,
}

impl MatrixContext {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if n == 0 || m < n {
            return Err(Error::InvalidContext { m, n });
        }
        Ok(MatrixContext { m, n })
    }

    /// Accepts either orientation; returns the context with `m >= n` and
    /// whether the inputs were swapped.
    pub fn normalized(m: usize, n: usize) -> Result<(Self, bool)> {
        if m < n {
            Ok((MatrixContext::new(n, m)?, true))
        } else {
            Ok((MatrixContext::new(m, n)?, false))
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

impl fmt::Display for MatrixContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m={}, n={}", self.m, self.n)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InvariantIdeal {
    ctx: MatrixContext,
    gens: Vec<Partition>,
}

impl InvariantIdeal {
    pub fn ctx(&self) -> MatrixContext {
        self.ctx
    }

    /// Minimal generating partitions in descending lexicographic order.
    pub fn gens(&self) -> &[Partition] {
        &self.gens
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Partition::is_zero)
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// `self ⊇ other`.
    pub fn contains(&self, other: &InvariantIdeal) -> bool {
        other
            .gens
            .iter()
            .all(|y| self.gens.iter().any(|x| x.leq(y)))
    }

    pub fn unit(ctx: MatrixContext) -> Self {
        InvariantIdeal {
            ctx,
            gens: vec![Partition::zero()],
        }
    }
}

impl fmt::Display for InvariantIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "I{{")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "}}")
    }
}

/// `I_X`, stored by the minimal elements of `X`.
pub fn make_ideal<'a, I>(ctx: MatrixContext, xs: I) -> Result<InvariantIdeal>
where
    I: IntoIterator<Item = &'a Partition>,
{
    let xs: Vec<&Partition> = xs.into_iter().collect();
    for x in &xs {
        if x.len() > ctx.n {
            return Err(Error::TooManyParts {
                partition: (*x).clone(),
                parts: x.len(),
                max: ctx.n,
            });
        }
    }
    Ok(InvariantIdeal {
        ctx,
        gens: minimalize(xs),
    })
}

/// Containment `a ⊇ b`.
pub fn ideal_leq(a: &InvariantIdeal, b: &InvariantIdeal) -> Result<bool> {
    same_context(a, b)?;
    Ok(a.contains(b))
}

pub(crate) fn same_context(a: &InvariantIdeal, b: &InvariantIdeal) -> Result<()> {
    if a.ctx != b.ctx {
        return Err(Error::ContextMismatch(a.ctx.to_string(), b.ctx.to_string()));
    }
    Ok(())
}

fn check_power_args(ctx: MatrixContext, p: usize, d: u32) -> Result<()> {
    check_range("p", p, 1, ctx.n)?;
    if d == 0 {
        return Err(Error::OutOfRange {
            name: "d",
            value: 0,
            lo: 1,
            hi: i64::MAX,
        });
    }
    Ok(())
}

/// `I_p^d`: partitions of size `p*d` with first part at most `d`.
pub fn power_of_minors(ctx: MatrixContext, p: usize, d: u32) -> Result<InvariantIdeal> {
    check_power_args(ctx, p, d)?;
    let target = p as u64 * d as u64;
    let xs: Vec<Partition> = enumerate_in_box(ctx.n, d)
        .into_iter()
        .filter(|x| x.size() == target)
        .collect();
    make_ideal(ctx, &xs)
}

/// `I_p^(d)`: `x_1 = ... = x_p` and `x_p + ... + x_n = d`.
pub fn symbolic_power(ctx: MatrixContext, p: usize, d: u32) -> Result<InvariantIdeal> {
    check_power_args(ctx, p, d)?;
    let xs: Vec<Partition> = enumerate_in_box(ctx.n, d)
        .into_iter()
        .filter(|x| {
            (1..p).all(|i| x.get(i) == x.get(0))
                && (p - 1..ctx.n).map(|i| x.get(i) as u64).sum::<u64>() == d as u64
        })
        .collect();
    make_ideal(ctx, &xs)
}

/// `(I_p^d)^sat`: `x_1 = x_2 <= d` and `x_2 + ... + x_n = (p-1)*d`.
///
/// The bound `x_1 <= d` is inherited from `I_p^d`; without it the set picks
/// up spurious partitions such as `(6,6)` for `p = d = 3`.
pub fn saturated_power(ctx: MatrixContext, p: usize, d: u32) -> Result<InvariantIdeal> {
    check_power_args(ctx, p, d)?;
    let tail = (p as u64 - 1) * d as u64;
    let xs: Vec<Partition> = enumerate_in_box(ctx.n, d)
        .into_iter()
        .filter(|x| {
            x.get(0) == x.get(1) && (1..ctx.n).map(|i| x.get(i) as u64).sum::<u64>() == tail
        })
        .collect();
    make_ideal(ctx, &xs)
}

/// The set `X^{:p}` before minimalization: each `x` is cut down to `x(c)`
/// where `c` is the number of columns of `x` taller than `p`. The result
/// may contain comparable partitions. Sorted descending, no repeats.
pub fn saturation_set(xs: &[Partition], p: usize) -> Vec<Partition> {
    let mut out: Vec<Partition> = xs
        .iter()
        .map(|x| {
            let c = (0..=x.get(0))
                .find(|&c| (c == 0 || x.column_height(c) > p) && x.column_height(c + 1) <= p)
                .expect("column heights are weakly decreasing");
            x.truncate_columns(c)
        })
        .collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    out.dedup();
    out
}

/// `I_X : I_p^∞`, which is `I` of `X^{:p}`; `p = 0` is the identity.
pub fn saturate(a: &InvariantIdeal, p: usize) -> Result<InvariantIdeal> {
    check_range("p", p, 0, a.ctx.n)?;
    make_ideal(a.ctx, &saturation_set(&a.gens, p))
}

/// Minimal elements of `succ(z, l)`: partitions `y >= z` in `P_n` that exceed
/// `z` in some row below row `l`. Found by scanning every `y >= z` with at
/// most `n` extra boxes.
pub fn succ_min(ctx: MatrixContext, z: &Partition, l: usize) -> Result<Vec<Partition>> {
    check_range("l", l, 0, ctx.n - 1)?;
    if z.len() > ctx.n {
        return Err(Error::TooManyParts {
            partition: z.clone(),
            parts: z.len(),
            max: ctx.n,
        });
    }
    let candidates: Vec<Partition> = enumerate_above(z, ctx.n, z.size() + ctx.n as u64)
        .into_iter()
        .filter(|y| (l..ctx.n).any(|i| y.get(i) > z.get(i)))
        .collect();
    Ok(minimalize(&candidates))
}

/// Degree of the generator `det_x`, which is `|x|`.
pub fn generator_degree(x: &Partition) -> u64 {
    x.size()
}
