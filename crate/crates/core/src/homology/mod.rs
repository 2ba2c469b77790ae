//! Ext modules of `S/I` for GL-invariant `I`.
//!
//! `Ext^j(S/I_X, S)` splits, as a graded GL-representation, into the Ext
//! modules of the subquotients `J_{z,l} = I_z / I_succ(z,l)` indexed by the
//! finite set `Z(X)`. Each of those has an explicit character, enumerated
//! here inside a degree window.

pub(crate) mod ext;
mod zset;

pub use ext::{
    ext_jzl, ext_map_analysis, ext_min_degree, ext_quotient, ext_reference_enumeration, regularity,
    ExtMapAnalysis,
};
pub use zset::{modules_of, saturation_filter, zset, zset_power_closed};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideals::MatrixContext;
use crate::partitions::Partition;

/// Index `(z, l)` of the subquotient `J_{z,l}`, whose annihilator is
/// `I_{l+1}`. Always satisfies `z_1 = ... = z_{l+1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ZPair {
    z: Partition,
    l: usize,
}

impl ZPair {
    pub fn new(ctx: MatrixContext, z: Partition, l: usize) -> Result<Self> {
        crate::error::check_range("l", l, 0, ctx.n() - 1)?;
        if z.len() > ctx.n() {
            return Err(Error::TooManyParts {
                parts: z.len(),
                partition: z,
                max: ctx.n(),
            });
        }
        if (1..=l).any(|i| z.get(i) != z.get(0)) {
            return Err(Error::Hypothesis {
                z,
                l,
                gens: String::from("<direct construction>"),
            });
        }
        Ok(ZPair { z, l })
    }

    pub fn z(&self) -> &Partition {
        &self.z
    }

    pub fn l(&self) -> usize {
        self.l
    }
}

impl fmt::Display for ZPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.z, self.l)
    }
}

impl fmt::Debug for ZPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Closed range `lo..=hi` of internal degrees.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeWindow {
    lo: i64,
    hi: i64,
}

impl DegreeWindow {
    pub fn new(lo: i64, hi: i64) -> Result<Self> {
        if lo > hi {
            return Err(Error::EmptyWindow { lo, hi });
        }
        Ok(DegreeWindow { lo, hi })
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.hi
    }

    pub fn contains(&self, d: i64) -> bool {
        self.lo <= d && d <= self.hi
    }
}

/// Sort order used for reports: larger `l` first, then `z` in descending
/// lexicographic order.
pub(crate) fn sort_pairs(pairs: &mut [ZPair]) {
    pairs.sort_by(|a, b| b.l.cmp(&a.l).then_with(|| b.z.cmp(&a.z)));
}
