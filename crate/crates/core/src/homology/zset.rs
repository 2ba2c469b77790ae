use crate::error::{check_range, Error, Result};
use crate::ideals::{InvariantIdeal, MatrixContext};
use crate::partitions::{enumerate_in_box, Partition};

use super::{sort_pairs, ZPair};

/// `Z(X)` straight from the definition: `(z, l)` with `c = z_1` such that
/// some `x` has `x(c) <= z` and `x'_{c+1} <= l + 1`, and every such `x` has
/// `x'_{c+1} = l + 1`.
///
/// Only `c < max x_1` can contribute (otherwise `x'_{c+1} = 0`), so the
/// search runs over `z` in the `n x c` boxes for those `c`.
pub fn zset(a: &InvariantIdeal) -> Result<Vec<ZPair>> {
    let ctx = a.ctx();
    let n = ctx.n();
    let max_width = a.gens().iter().map(|x| x.get(0)).max().unwrap_or(0);
    let mut out = Vec::new();
    for c in 0..max_width {
        for z in enumerate_in_box(n, c) {
            if z.get(0) != c {
                continue;
            }
            for l in 0..n {
                let mut witnesses = a
                    .gens()
                    .iter()
                    .filter(|x| x.truncate_columns(c).leq(&z) && x.column_height(c + 1) <= l + 1)
                    .peekable();
                if witnesses.peek().is_none() {
                    continue;
                }
                if witnesses.all(|x| x.column_height(c + 1) == l + 1) {
                    out.push(checked_pair(a, z.clone(), l)?);
                }
            }
        }
    }
    sort_pairs(&mut out);
    Ok(out)
}

fn checked_pair(a: &InvariantIdeal, z: Partition, l: usize) -> Result<ZPair> {
    if (1..=l).any(|i| z.get(i) != z.get(0)) {
        return Err(Error::Hypothesis {
            z,
            l,
            gens: a.to_string(),
        });
    }
    Ok(ZPair { z, l })
}

/// `Z(X_p^d)` by the closed form: `0 <= l <= p-1`, `z_1 = ... = z_{l+1} <= d-1`
/// and `|z| + (d - z_1) l + 1 <= p d <= |z| + (d - z_1)(l + 1)`.
pub fn zset_power_closed(ctx: MatrixContext, p: usize, d: u32) -> Result<Vec<ZPair>> {
    check_range("p", p, 1, ctx.n())?;
    if d == 0 {
        return Err(Error::OutOfRange {
            name: "d",
            value: 0,
            lo: 1,
            hi: i64::MAX,
        });
    }
    let pd = p as i64 * d as i64;
    let mut out = Vec::new();
    for z in enumerate_in_box(ctx.n(), d - 1) {
        let z1 = z.get(0) as i64;
        let size = z.size() as i64;
        for l in 0..p {
            if (1..=l).any(|i| z.get(i) as i64 != z1) {
                continue;
            }
            let slack = d as i64 - z1;
            let lower = size + slack * l as i64 + 1;
            let upper = size + slack * (l as i64 + 1);
            if lower <= pd && pd <= upper {
                out.push(ZPair { z: z.clone(), l });
            }
        }
    }
    sort_pairs(&mut out);
    Ok(out)
}

/// `M(I)` as the list of pairs `(z, l)` standing for `J_{z,l}`.
pub fn modules_of(a: &InvariantIdeal) -> Result<Vec<ZPair>> {
    zset(a)
}

/// Pairs surviving saturation by `I_p`: those with `l >= p`.
pub fn saturation_filter(pairs: &[ZPair], p: usize) -> Vec<ZPair> {
    pairs.iter().filter(|zp| zp.l >= p).cloned().collect()
}
