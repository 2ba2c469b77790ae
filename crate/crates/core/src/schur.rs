//! Dimensions of irreducible `GL_N` representations and the character
//! container shared by the Ext, local cohomology and Betti engines.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partitions::{DominantWeight, Partition};

/// Weyl dimension formula `prod_{i<j} (l_i - l_j + j - i) / (j - i)`.
pub fn dim_schur(l: &DominantWeight, n: usize) -> Result<BigUint> {
    if l.len() != n || n == 0 {
        return Err(Error::LengthMismatch {
            expected: n,
            got: l.len(),
        });
    }
    let e = l.entries();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..n {
        for j in i + 1..n {
            let gap = e[i] - e[j] + (j - i) as i64;
            num *= BigUint::from(gap as u64);
            den *= BigUint::from((j - i) as u64);
        }
    }
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() {
        return Err(Error::NonIntegral(e.to_vec()));
    }
    Ok(q)
}

/// Counts semistandard Young tableaux of shape `x` with entries in `1..=n`
/// by direct enumeration.
pub fn ssyt_count(x: &Partition, n: usize) -> Result<BigUint> {
    if x.len() > n || n == 0 {
        return Err(Error::TooManyParts {
            partition: x.clone(),
            parts: x.len(),
            max: n,
        });
    }
    let shape: Vec<usize> = x.parts().iter().map(|&p| p as usize).collect();
    let mut grid: Vec<Vec<u32>> = shape.iter().map(|&w| vec![0; w]).collect();
    Ok(BigUint::from(fill_tableau(
        &shape, &mut grid, 0, 0, n as u32,
    )))
}

fn fill_tableau(shape: &[usize], grid: &mut [Vec<u32>], row: usize, col: usize, n: u32) -> u64 {
    if row == shape.len() {
        return 1;
    }
    if col == shape[row] {
        return fill_tableau(shape, grid, row + 1, 0, n);
    }
    let left = if col > 0 { grid[row][col - 1] } else { 1 };
    let above = if row > 0 { grid[row - 1][col] + 1 } else { 1 };
    let mut total = 0;
    for v in left.max(above)..=n {
        grid[row][col] = v;
        total += fill_tableau(shape, grid, row, col + 1, n);
    }
    total
}

/// One isotypic piece `S_wm C^m (x) S_wn C^n` sitting in internal degree
/// `degree`, repeated `multiplicity` times.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrredTerm {
    pub wm: DominantWeight,
    pub wn: DominantWeight,
    pub degree: i64,
    pub multiplicity: BigUint,
}

pub fn dim_term(t: &IrredTerm, m: usize, n: usize) -> Result<BigUint> {
    Ok(&t.multiplicity * dim_schur(&t.wm, m)? * dim_schur(&t.wn, n)?)
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct TermKey {
    j: i64,
    degree: i64,
    wm: DominantWeight,
    wn: DominantWeight,
}

/// A finite formal sum of [`IrredTerm`]s, each tagged with an index `j`
/// (cohomological or homological degree; 0 when irrelevant).
///
/// Iteration order is fixed: by `j`, then degree, then `wm` and `wn`
/// lexicographically. Duplicate keys add their multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EquivariantCharacter {
    terms: BTreeMap<TermKey, BigUint>,
}

impl EquivariantCharacter {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `mult` copies of `S_wm (x) S_wn` at index `j`, in degree `|wn|`.
    pub fn add(&mut self, j: i64, wm: DominantWeight, wn: DominantWeight, mult: BigUint) {
        if mult.is_zero() {
            return;
        }
        let key = TermKey {
            j,
            degree: wn.size(),
            wm,
            wn,
        };
        *self.terms.entry(key).or_insert_with(BigUint::zero) += mult;
    }

    pub fn add_one(&mut self, j: i64, wm: DominantWeight, wn: DominantWeight) {
        self.add(j, wm, wn, BigUint::one());
    }

    pub fn merge(&mut self, other: &EquivariantCharacter) {
        for (k, v) in &other.terms {
            *self.terms.entry(k.clone()).or_insert_with(BigUint::zero) += v;
        }
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of distinct irreducible terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, IrredTerm)> + '_ {
        self.terms.iter().map(|(k, mult)| {
            (
                k.j,
                IrredTerm {
                    wm: k.wm.clone(),
                    wn: k.wn.clone(),
                    degree: k.degree,
                    multiplicity: mult.clone(),
                },
            )
        })
    }

    pub fn indices(&self) -> BTreeSet<i64> {
        self.terms.keys().map(|k| k.j).collect()
    }

    /// The terms with index `j`.
    pub fn at_index(&self, j: i64) -> EquivariantCharacter {
        EquivariantCharacter {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.j == j)
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    /// Same terms with every index moved by `by` and multiplicities scaled.
    pub fn reindexed(&self, by: i64, scale: &BigUint) -> EquivariantCharacter {
        EquivariantCharacter {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| {
                    let mut k = k.clone();
                    k.j += by;
                    (k, v * scale)
                })
                .collect(),
        }
    }

    /// Total dimension of each `(j, degree)` piece.
    pub fn graded_dimensions(&self, m: usize, n: usize) -> Result<BTreeMap<(i64, i64), BigUint>> {
        let mut out: BTreeMap<(i64, i64), BigUint> = BTreeMap::new();
        for (k, mult) in &self.terms {
            let d = mult * dim_schur(&k.wm, m)? * dim_schur(&k.wn, n)?;
            *out.entry((k.j, k.degree)).or_insert_with(BigUint::zero) += d;
        }
        Ok(out)
    }

    pub fn total_dimension(&self, m: usize, n: usize) -> Result<BigUint> {
        Ok(self.graded_dimensions(m, n)?.into_values().sum())
    }
}
