//! Strategies and property bodies shared by the property suite and the
//! acceptance runner.
#![allow(dead_code)]

use std::collections::BTreeSet;

use glinv_core::homology::{ext_jzl, ext_map_analysis, ext_min_degree, ext_quotient, zset};
use glinv_core::ideals::{make_ideal, symbolic_power};
use glinv_core::partitions::{attach, minimalize};
use glinv_core::schur::{dim_schur, ssyt_count};
use glinv_core::{
    qbinomial, DegreeWindow, DominantWeight, EquivariantCharacter, MatrixContext, Partition, ZPair,
};
use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub type Check = Result<(), TestCaseError>;

pub fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

pub fn partition(max_len: usize, max_part: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

pub fn weight(len: usize) -> impl Strategy<Value = DominantWeight> {
    prop::collection::vec(-6i64..=6, len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        DominantWeight::new(v).unwrap()
    })
}

pub fn conjugate_involution(x: &Partition) -> Check {
    prop_assert_eq!(&x.conjugate().conjugate(), x);
    prop_assert_eq!(x.conjugate().size(), x.size());
    Ok(())
}

pub fn antichain_idempotence(xs: &[Partition]) -> Check {
    let once = minimalize(xs);
    prop_assert_eq!(&minimalize(&once), &once);
    for a in &once {
        for b in &once {
            prop_assert!(a == b || !a.leq(b), "{} <= {}", a, b);
        }
    }
    for x in xs {
        prop_assert!(once.iter().any(|y| y.leq(x)));
    }
    Ok(())
}

/// `|λ(r,s;a,b)| = rs + |a| + |b|` and `λ(r,s;a,b)' = λ(s,r;b',a')`.
pub fn attach_identities(r: usize, s: u32, a: &Partition, b: &Partition) -> Check {
    let a = Partition::new(a.parts().iter().take(r).copied().collect()).unwrap();
    let b = Partition::new(b.parts().iter().map(|&v| v.min(s)).collect()).unwrap();
    let x = attach(r, s, &a, &b).unwrap();
    prop_assert_eq!(x.size(), r as u64 * s as u64 + a.size() + b.size());
    let y = attach(s as usize, r as u32, &b.conjugate(), &a.conjugate()).unwrap();
    prop_assert_eq!(x.conjugate(), y);
    Ok(())
}

pub fn qbinomial_checks(a: u32, b: u32) -> Check {
    let p = qbinomial(a, b);
    if b > a {
        prop_assert!(p.is_zero());
        return Ok(());
    }
    let mut binom = BigInt::from(1);
    for i in 0..b {
        binom = binom * (a - i) / (i + 1);
    }
    prop_assert_eq!(p.eval_one(), binom);
    let top = b * (a - b);
    prop_assert_eq!(p.degree(), Some(top));
    for k in 0..=top {
        prop_assert_eq!(p.coeff(k), p.coeff(top - k));
    }
    Ok(())
}

pub fn dim_schur_invariance(l: &DominantWeight, k: i64) -> Check {
    let n = l.len();
    let d = dim_schur(l, n).unwrap();
    prop_assert_eq!(&dim_schur(&l.shifted(k), n).unwrap(), &d);
    prop_assert_eq!(&dim_schur(&l.dual(), n).unwrap(), &d);
    Ok(())
}

pub fn dim_schur_vs_tableaux(x: &Partition, n: usize) -> Check {
    let l = DominantWeight::from_partition(x, n).unwrap();
    prop_assert_eq!(dim_schur(&l, n).unwrap(), ssyt_count(x, n).unwrap());
    Ok(())
}

pub fn zset_monotone(n: usize, p: usize, d: u32) -> Check {
    let c = MatrixContext::new(n, n).unwrap();
    let small: BTreeSet<ZPair> = zset(&symbolic_power(c, p, d - 1).unwrap())
        .unwrap()
        .into_iter()
        .collect();
    let big: BTreeSet<ZPair> = zset(&symbolic_power(c, p, d).unwrap())
        .unwrap()
        .into_iter()
        .collect();
    prop_assert!(small.is_subset(&big), "n={} p={} d={}", n, p, d);
    Ok(())
}

fn sum(a: &EquivariantCharacter, b: &EquivariantCharacter) -> EquivariantCharacter {
    let mut out = a.clone();
    out.merge(b);
    out
}

/// `B` from `gens_b`, `A` from `gens_b ∪ extra`, so `A ⊇ B`.
pub fn ext_map_additivity(
    m: usize,
    n: usize,
    gens_b: &[Partition],
    extra: &[Partition],
    lo: i64,
    width: i64,
) -> Check {
    let c = MatrixContext::new(m, n).unwrap();
    let clip = |x: &Partition| Partition::new(x.parts().iter().take(n).copied().collect()).unwrap();
    let gb: Vec<Partition> = gens_b.iter().map(clip).collect();
    let mut ga = gb.clone();
    ga.extend(extra.iter().map(clip));
    let b = make_ideal(c, &gb).unwrap();
    let a = make_ideal(c, &ga).unwrap();
    if b.is_zero() {
        return Ok(());
    }
    let w = DegreeWindow::new(lo, lo + width).unwrap();
    let r = ext_map_analysis(&a, &b, w).unwrap();
    prop_assert_eq!(sum(&r.kernel, &r.image), ext_quotient(&a, w).unwrap());
    prop_assert_eq!(sum(&r.image, &r.cokernel), ext_quotient(&b, w).unwrap());
    Ok(())
}

/// Builds a valid pair by forcing `z_1 = ... = z_{l+1}`.
pub fn forced_pair(n: usize, l: usize, z: &Partition) -> (Partition, usize) {
    let l = l % n;
    let mut parts: Vec<u32> = z.parts().iter().take(n).copied().collect();
    parts.resize(n, 0);
    let top = parts[0];
    for v in parts.iter_mut().take(l + 1) {
        *v = top;
    }
    (Partition::new(parts).unwrap(), l)
}

pub fn min_degree_agreement(m: usize, n: usize, z: &Partition, l: usize, j: i64) -> Check {
    let c = MatrixContext::new(m, n).unwrap();
    let (z, l) = forced_pair(n, l, z);
    let zp = ZPair::new(c, z, l).unwrap();
    match ext_min_degree(c, &zp, j).unwrap() {
        Some(d) => {
            let at = ext_jzl(c, &zp, DegreeWindow::new(d - 2, d).unwrap())
                .unwrap()
                .at_index(j);
            prop_assert_eq!(at.iter().map(|(_, t)| t.degree).min(), Some(d));
            let below = ext_jzl(c, &zp, DegreeWindow::new(d - 6, d - 1).unwrap())
                .unwrap()
                .at_index(j);
            prop_assert!(below.is_empty());
        }
        None => {
            // λ_n is pinned, so every term sits above n * λ_n; a wide window
            // starting there must show nothing at index j
            let floor = (n as i64) * (l as i64 - zp.z().get(l) as i64 - m as i64);
            let w = DegreeWindow::new(floor - 1, floor + 12).unwrap();
            prop_assert!(ext_jzl(c, &zp, w).unwrap().at_index(j).is_empty());
        }
    }
    Ok(())
}
