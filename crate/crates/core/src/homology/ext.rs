use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ideals::{ideal_leq, InvariantIdeal, MatrixContext};
use crate::partitions::DominantWeight;
use crate::schur::EquivariantCharacter;

use super::{zset, DegreeWindow, ZPair};

/// One `(s, t)` summand of the Ext formula: per-position bounds on `λ`
/// (0-based; `None` above means unbounded) and the cohomological index.
#[derive(Clone, Debug)]
struct Branch {
    s: usize,
    j: i64,
    lo: Vec<i64>,
    hi: Vec<Option<i64>>,
}

/// All `0 <= s <= t_1 <= ... <= t_{n-l} <= l`, each turned into bounds.
/// Branches whose fixed entries already contradict each other are kept;
/// they simply produce nothing.
fn branches(ctx: MatrixContext, zp: &ZPair) -> Vec<Branch> {
    let k = ctx.n() - zp.l;
    let l = zp.l;
    let mut out = Vec::new();
    for s in 0..=l {
        let mut t = vec![s; k];
        loop {
            out.push(branch(ctx, zp, s, &t));
            // next nondecreasing sequence in [s, l]
            let Some(pos) = (0..k).rev().find(|&i| t[i] < l) else {
                break;
            };
            let v = t[pos] + 1;
            for x in &mut t[pos..] {
                *x = v;
            }
        }
    }
    out
}

fn branch(ctx: MatrixContext, zp: &ZPair, s: usize, t: &[usize]) -> Branch {
    let (m, n, l) = (ctx.m() as i64, ctx.n(), zp.l);
    let mut lo = vec![i64::MIN; n];
    let mut hi: Vec<Option<i64>> = vec![None; n];
    let fix = |pos: usize, v: i64, lo: &mut Vec<i64>, hi: &mut Vec<Option<i64>>| {
        lo[pos] = lo[pos].max(v);
        hi[pos] = Some(hi[pos].map_or(v, |h| h.min(v)));
    };
    // λ_n = l - z_{l+1} - m
    fix(n - 1, l as i64 - zp.z.get(l) as i64 - m, &mut lo, &mut hi);
    // λ_{t_i + i} = t_i - z_{n+1-i} - m
    for (i0, &ti) in t.iter().enumerate() {
        let i = i0 + 1;
        let v = ti as i64 - zp.z.get(n - i) as i64 - m;
        fix(ti + i - 1, v, &mut lo, &mut hi);
    }
    // λ_s >= s - n, hence every λ_k with k <= s
    for x in lo.iter_mut().take(s) {
        *x = (*x).max(s as i64 - n as i64);
    }
    // λ_{s+1} <= s - m, hence every λ_k with k > s
    for h in hi.iter_mut().skip(s) {
        let cap = s as i64 - m;
        *h = Some(h.map_or(cap, |x| x.min(cap)));
    }
    let j = m * n as i64
        - (l * l) as i64
        - s as i64 * (m - n as i64)
        - 2 * t.iter().sum::<usize>() as i64;
    Branch { s, j, lo, hi }
}

/// `λ(s) = (λ_1..λ_s, (s-n)^{m-n}, λ_{s+1}+(m-n), .., λ_n+(m-n))`.
pub(crate) fn lambda_s(ctx: MatrixContext, lam: &[i64], s: usize) -> DominantWeight {
    let (m, n) = (ctx.m(), ctx.n());
    let gap = (m - n) as i64;
    let mut v = Vec::with_capacity(m);
    v.extend_from_slice(&lam[..s]);
    v.extend(std::iter::repeat_n(s as i64 - n as i64, m - n));
    v.extend(lam[s..].iter().map(|x| x + gap));
    DominantWeight::new(v).expect("λ(s) is dominant under the Ext bounds")
}

/// Least weakly decreasing sequence within the bounds, filled right to left.
fn minimal_fill(lo: &[i64], hi: &[Option<i64>]) -> Option<Vec<i64>> {
    let n = lo.len();
    let mut v = vec![0; n];
    let mut right = i64::MIN;
    for k in (0..n).rev() {
        let x = lo[k].max(right);
        if hi[k].is_some_and(|h| x > h) {
            return None;
        }
        v[k] = x;
        right = x;
    }
    Some(v)
}

/// Weakly decreasing `λ` with `lo <= λ <= hi` entrywise and `|λ|` in `w`.
pub(crate) fn enumerate_bounded(
    lo: &[i64],
    hi: &[Option<i64>],
    w: DegreeWindow,
    mut visit: impl FnMut(&[i64]),
) {
    let n = lo.len();
    if minimal_fill(lo, hi).is_none() {
        return;
    }
    // effective upper bounds: λ_k <= λ_i <= hi_i for i <= k
    let mut cap: Vec<Option<i64>> = Vec::with_capacity(n);
    let mut run: Option<i64> = None;
    for h in hi {
        run = match (run, *h) {
            (None, x) => x,
            (Some(a), Some(b)) => Some(a.min(b)),
            (Some(a), None) => Some(a),
        };
        cap.push(run);
    }
    let mut lam = vec![0i64; n];
    fill(n, 0, lo, &cap, w, &mut lam, &mut visit);
}

/// Places positions `k-1, k-2, .., 0`; `acc` is the sum of entries placed.
fn fill(
    k: usize,
    acc: i64,
    lo: &[i64],
    cap: &[Option<i64>],
    w: DegreeWindow,
    lam: &mut [i64],
    visit: &mut impl FnMut(&[i64]),
) {
    if k == 0 {
        if w.contains(acc) {
            visit(lam);
        }
        return;
    }
    let pos = k - 1;
    let right = if k < lam.len() { lam[k] } else { i64::MIN };
    let start = lo[pos].max(right);
    let mut v = start;
    loop {
        if cap[pos].is_some_and(|h| v > h) {
            break;
        }
        // cheapest completion of positions 0..pos with λ_pos = v
        let mut least = acc + v;
        let mut floor = v;
        for i in (0..pos).rev() {
            floor = floor.max(lo[i]);
            least += floor;
        }
        if least > w.hi() {
            break;
        }
        // dearest completion, when every remaining position is capped
        let mut most = Some(acc + v);
        for c in cap.iter().take(pos) {
            most = match (most, c) {
                (Some(a), Some(h)) => Some(a + h),
                _ => None,
            };
        }
        if most.is_none_or(|x| x >= w.lo()) {
            lam[pos] = v;
            fill(pos, acc + v, lo, cap, w, lam, visit);
        }
        v += 1;
    }
}

fn branch_character(ctx: MatrixContext, b: &Branch, w: DegreeWindow) -> EquivariantCharacter {
    let mut ch = EquivariantCharacter::new();
    enumerate_bounded(&b.lo, &b.hi, w, |lam| {
        let wn = DominantWeight::new(lam.to_vec()).expect("enumerated weights are dominant");
        ch.add_one(b.j, lambda_s(ctx, lam, b.s), wn);
    });
    ch
}

fn check_pair(ctx: MatrixContext, zp: &ZPair) -> Result<()> {
    ZPair::new(ctx, zp.z.clone(), zp.l).map(|_| ())
}

/// `Ext^•(J_{z,l}, S)` restricted to internal degrees in `w`, keyed by `j`.
pub fn ext_jzl(ctx: MatrixContext, zp: &ZPair, w: DegreeWindow) -> Result<EquivariantCharacter> {
    check_pair(ctx, zp)?;
    let parts: Vec<EquivariantCharacter> = branches(ctx, zp)
        .par_iter()
        .map(|b| branch_character(ctx, b, w))
        .collect();
    let mut out = EquivariantCharacter::new();
    for p in &parts {
        out.merge(p);
    }
    Ok(out)
}

/// `Ext^•(S/I, S)` in the window, as the sum over `Z(X)` of the `J_{z,l}`
/// pieces. This is a character identity, not a module isomorphism.
pub fn ext_quotient(a: &InvariantIdeal, w: DegreeWindow) -> Result<EquivariantCharacter> {
    if a.is_zero() {
        return Err(Error::DegenerateIdeal {
            what: "ext_quotient",
            which: "zero",
        });
    }
    let mut out = EquivariantCharacter::new();
    for zp in zset(a)? {
        out.merge(&ext_jzl(a.ctx(), &zp, w)?);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtMapAnalysis {
    pub kernel: EquivariantCharacter,
    pub image: EquivariantCharacter,
    pub cokernel: EquivariantCharacter,
    pub kernel_pairs: Vec<ZPair>,
    pub image_pairs: Vec<ZPair>,
    pub cokernel_pairs: Vec<ZPair>,
}

/// The map `Ext(S/A, S) -> Ext(S/B, S)` induced by `S/B -> S/A`, for
/// `A ⊇ B`: kernel from `Z(A) \ Z(B)`, image from `Z(A) ∩ Z(B)`, cokernel
/// from `Z(B) \ Z(A)`.
pub fn ext_map_analysis(
    a: &InvariantIdeal,
    b: &InvariantIdeal,
    w: DegreeWindow,
) -> Result<ExtMapAnalysis> {
    if !ideal_leq(a, b)? {
        return Err(Error::NotContained);
    }
    if b.is_zero() {
        return Err(Error::DegenerateIdeal {
            what: "ext_map_analysis",
            which: "zero",
        });
    }
    let za = zset(a)?;
    let zb = zset(b)?;
    let ctx = a.ctx();
    let sum = |pairs: &[ZPair]| -> Result<EquivariantCharacter> {
        let mut out = EquivariantCharacter::new();
        for zp in pairs {
            out.merge(&ext_jzl(ctx, zp, w)?);
        }
        Ok(out)
    };
    let kernel_pairs: Vec<ZPair> = za.iter().filter(|p| !zb.contains(p)).cloned().collect();
    let image_pairs: Vec<ZPair> = za.iter().filter(|p| zb.contains(p)).cloned().collect();
    let cokernel_pairs: Vec<ZPair> = zb.iter().filter(|p| !za.contains(p)).cloned().collect();
    Ok(ExtMapAnalysis {
        kernel: sum(&kernel_pairs)?,
        image: sum(&image_pairs)?,
        cokernel: sum(&cokernel_pairs)?,
        kernel_pairs,
        image_pairs,
        cokernel_pairs,
    })
}

/// Least internal degree of `Ext^j(J_{z,l}, S)`, or `None` when it vanishes.
/// Free entries take their least admissible values.
pub fn ext_min_degree(ctx: MatrixContext, zp: &ZPair, j: i64) -> Result<Option<i64>> {
    check_pair(ctx, zp)?;
    Ok(branches(ctx, zp)
        .iter()
        .filter(|b| b.j == j)
        .filter_map(|b| minimal_fill(&b.lo, &b.hi))
        .map(|v| v.iter().sum())
        .min())
}

/// `reg(I) = reg(S/I) + 1`, with `reg(S/I) = max_j (-mindeg Ext^j(S/I,S) - j)`.
pub fn regularity(a: &InvariantIdeal) -> Result<i64> {
    if a.is_zero() {
        return Err(Error::DegenerateIdeal {
            what: "regularity",
            which: "zero",
        });
    }
    if a.is_unit() {
        return Err(Error::DegenerateIdeal {
            what: "regularity",
            which: "unit",
        });
    }
    let ctx = a.ctx();
    let mut best: Option<i64> = None;
    for zp in zset(a)? {
        for b in branches(ctx, &zp) {
            if let Some(v) = minimal_fill(&b.lo, &b.hi) {
                let deg: i64 = v.iter().sum();
                let r = -deg - b.j;
                best = Some(best.map_or(r, |x| x.max(r)));
            }
        }
    }
    let reg_quotient = best.expect("a proper nonzero ideal has a nonempty Z-set");
    Ok(reg_quotient + 1)
}

/// Independent enumeration used as a test oracle: runs over every weakly
/// decreasing `λ` in a bounded box first, then solves for all `(s, t)`
/// that admit it. Entries are drawn from `[λ_n, w.hi - (n-1) λ_n]`, which
/// holds every admissible `λ` of degree at most `w.hi`.
pub fn ext_reference_enumeration(
    ctx: MatrixContext,
    zp: &ZPair,
    w: DegreeWindow,
) -> Result<EquivariantCharacter> {
    check_pair(ctx, zp)?;
    let (m, n, l) = (ctx.m() as i64, ctx.n(), zp.l);
    let last = l as i64 - zp.z.get(l) as i64 - m;
    let top = w.hi() - (n as i64 - 1) * last;
    let mut out = EquivariantCharacter::new();
    let mut lam = vec![last; n];
    let mut rec = |lam: &[i64]| {
        let deg: i64 = lam.iter().sum();
        if !w.contains(deg) {
            return;
        }
        for s in 0..=l {
            if s >= 1 && lam[s - 1] < s as i64 - n as i64 {
                continue;
            }
            if lam[s] > s as i64 - m {
                continue;
            }
            // each t_i ranges over the values in [s, l] solving its equation
            let options: Vec<Vec<usize>> = (1..=n - l)
                .map(|i| {
                    (s..=l)
                        .filter(|&ti| lam[ti + i - 1] == ti as i64 - zp.z.get(n - i) as i64 - m)
                        .collect()
                })
                .collect();
            let mut stack: Vec<(usize, usize, usize)> = vec![(0, s, 0)];
            while let Some((i, floor, tsum)) = stack.pop() {
                if i == options.len() {
                    let j =
                        m * n as i64 - (l * l) as i64 - s as i64 * (m - n as i64) - 2 * tsum as i64;
                    let wn = DominantWeight::new(lam.to_vec()).expect("decreasing");
                    out.add_one(j, lambda_s(ctx, lam, s), wn);
                    continue;
                }
                for &ti in options[i].iter().filter(|&&ti| ti >= floor) {
                    stack.push((i + 1, ti, tsum + ti));
                }
            }
        }
    };
    if top >= last {
        decreasing_in_box(n, last, top, &mut lam, 0, &mut rec);
    }
    Ok(out)
}

fn decreasing_in_box(
    n: usize,
    lo: i64,
    hi: i64,
    lam: &mut Vec<i64>,
    pos: usize,
    f: &mut impl FnMut(&[i64]),
) {
    if pos == n {
        f(lam);
        return;
    }
    let upper = if pos == 0 { hi } else { lam[pos - 1] };
    for v in lo..=upper {
        lam[pos] = v;
        decreasing_in_box(n, lo, hi, lam, pos + 1, f);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideals::{make_ideal, power_of_minors, saturated_power, symbolic_power};
    use crate::partitions::{part, Partition};
    use num_bigint::BigUint;

    fn ctx(m: usize, n: usize) -> MatrixContext {
        MatrixContext::new(m, n).unwrap()
    }

    fn win(lo: i64, hi: i64) -> DegreeWindow {
        DegreeWindow::new(lo, hi).unwrap()
    }

    fn w(v: &[i64]) -> DominantWeight {
        DominantWeight::new(v.to_vec()).unwrap()
    }

    #[test]
    fn branch_enumeration_counts() {
        // nondecreasing t of length n-l in [s, l], summed over s
        let c = ctx(4, 4);
        let zp = ZPair::new(c, Partition::zero(), 2).unwrap();
        // s=0: C(2+2,2)=6, s=1: C(1+2,2)=3, s=2: 1
        assert_eq!(branches(c, &zp).len(), 10);
    }

    #[test]
    fn n_equals_one_single_term() {
        for big_n in 1..=4usize {
            let c = ctx(big_n, 1);
            for i in 0..4u32 {
                let zp = ZPair::new(c, part(&[i]), 0).unwrap();
                let d = -(i as i64) - big_n as i64;
                let ch = ext_jzl(c, &zp, win(d - 3, d + 3)).unwrap();
                let terms: Vec<_> = ch.iter().collect();
                assert_eq!(terms.len(), 1);
                let (j, t) = &terms[0];
                assert_eq!(*j, big_n as i64);
                assert_eq!(t.degree, d);
                let mut wm = vec![-1; big_n - 1];
                wm.push(-(i as i64) - 1);
                assert_eq!(t.wm, w(&wm));
                assert_eq!(t.wn, w(&[d]));
                assert_eq!(ext_min_degree(c, &zp, big_n as i64).unwrap(), Some(d));
                assert_eq!(ext_min_degree(c, &zp, 0).unwrap(), None);
            }
        }
    }

    #[test]
    fn disjoint_window_is_empty() {
        let c = ctx(3, 1);
        let zp = ZPair::new(c, part(&[1]), 0).unwrap();
        assert!(ext_jzl(c, &zp, win(0, 10)).unwrap().is_empty());
    }

    #[test]
    fn powers_of_maximal_ideal() {
        let c = ctx(3, 1);
        let a = make_ideal(c, &[part(&[2])]).unwrap();
        let ch = ext_quotient(&a, win(-5, -3)).unwrap();
        let terms: Vec<_> = ch.iter().collect();
        assert_eq!(terms.len(), 2);
        assert!(terms.iter().all(|(j, _)| *j == 3));
        assert_eq!(terms[0].1.wm, w(&[-1, -1, -2]));
        assert_eq!(terms[0].1.degree, -4);
        assert_eq!(terms[1].1.wm, w(&[-1, -1, -1]));
        assert_eq!(terms[1].1.degree, -3);
        assert_eq!(regularity(&a).unwrap(), 2);
    }

    #[test]
    fn unit_and_zero_ideals() {
        let c = ctx(3, 3);
        let unit = InvariantIdeal::unit(c);
        assert!(ext_quotient(&unit, win(-20, 0)).unwrap().is_empty());
        let zero = make_ideal(c, &[]).unwrap();
        assert_eq!(
            ext_quotient(&zero, win(-1, 0)).unwrap_err().kind(),
            "degenerate_ideal"
        );
        assert!(regularity(&unit).is_err());
        assert!(regularity(&zero).is_err());
    }

    #[test]
    fn determinantal_minimum_index() {
        // S/I_{l+1} is Cohen-Macaulay of codimension (n-l)(m-l)
        for n in 1..=4 {
            for m in [n, n + 1] {
                let c = ctx(m, n);
                for l in 0..n {
                    let zp = ZPair::new(c, Partition::zero(), l).unwrap();
                    let js: Vec<i64> = branches(c, &zp)
                        .iter()
                        .filter(|b| minimal_fill(&b.lo, &b.hi).is_some())
                        .map(|b| b.j)
                        .collect();
                    let expected = ((n - l) * (n - l) + (n - l) * (m - n)) as i64;
                    assert_eq!(*js.iter().min().unwrap(), expected, "m={m} n={n} l={l}");
                }
            }
        }
    }

    #[test]
    fn min_degree_matches_window() {
        let c = ctx(4, 3);
        for l in 0..3 {
            for z in crate::partitions::enumerate_in_box(3, 2) {
                let Ok(zp) = ZPair::new(c, z, l) else {
                    continue;
                };
                let js: std::collections::BTreeSet<i64> =
                    branches(c, &zp).iter().map(|b| b.j).collect();
                for j in js {
                    let Some(d) = ext_min_degree(c, &zp, j).unwrap() else {
                        continue;
                    };
                    let ch = ext_jzl(c, &zp, win(d - 2, d)).unwrap().at_index(j);
                    let lowest = ch.iter().map(|(_, t)| t.degree).min();
                    assert_eq!(lowest, Some(d), "{zp} j={j}");
                }
            }
        }
    }

    #[test]
    fn agrees_with_reference_enumeration() {
        for (m, n) in [(2, 2), (3, 2), (3, 3), (4, 3)] {
            let c = ctx(m, n);
            for l in 0..n {
                for z in crate::partitions::enumerate_in_box(n, 2) {
                    let Ok(zp) = ZPair::new(c, z, l) else {
                        continue;
                    };
                    let base = l as i64 - zp.z().get(l) as i64 - m as i64;
                    let lo = base * n as i64 - 2;
                    let window = win(lo, lo + 6);
                    assert_eq!(
                        ext_jzl(c, &zp, window).unwrap(),
                        ext_reference_enumeration(c, &zp, window).unwrap(),
                        "m={m} n={n} {zp}"
                    );
                }
            }
        }
    }

    #[test]
    fn lambda_s_is_dominant() {
        let c = ctx(5, 3);
        let zp = ZPair::new(c, part(&[1, 1]), 1).unwrap();
        let ch = ext_jzl(c, &zp, win(-30, 0)).unwrap();
        assert!(!ch.is_empty());
        for (_, t) in ch.iter() {
            assert_eq!(t.wm.len(), 5);
            assert!(t.wm.entries().windows(2).all(|p| p[0] >= p[1]));
        }
    }

    #[test]
    fn map_analysis_saturation() {
        let c = ctx(4, 4);
        let b = power_of_minors(c, 3, 3).unwrap();
        let a = saturated_power(c, 3, 3).unwrap();
        let r = ext_map_analysis(&a, &b, win(-30, -20)).unwrap();
        assert!(r.kernel_pairs.is_empty());
        assert_eq!(
            r.cokernel_pairs,
            vec![ZPair::new(c, part(&[2, 2, 2, 2]), 0).unwrap()]
        );
        assert!(ext_map_analysis(&b, &a, win(-1, 0)).is_err());
    }

    #[test]
    fn symbolic_maps_are_injective() {
        let c = ctx(3, 3);
        for d in 2..=4 {
            let a = symbolic_power(c, 2, d - 1).unwrap();
            let b = symbolic_power(c, 2, d).unwrap();
            let r = ext_map_analysis(&a, &b, win(-25, -5)).unwrap();
            assert!(r.kernel.is_empty());
            assert!(r.kernel_pairs.is_empty());
        }
    }

    #[test]
    fn regularity_examples() {
        let c = ctx(3, 3);
        assert_eq!(regularity(&power_of_minors(c, 2, 2).unwrap()).unwrap(), 4);
        let i22 = make_ideal(c, &[Partition::rect(2, 2)]).unwrap();
        assert_eq!(regularity(&i22).unwrap(), 6);
        for d in 1..5 {
            let c1 = ctx(3, 1);
            let md = make_ideal(c1, &[part(&[d])]).unwrap();
            assert_eq!(regularity(&md).unwrap(), d as i64);
        }
    }

    #[test]
    fn dimensions_from_duality() {
        // Ext^N(S/m^d, S) in degree -N-i has dim C(N+i-1, N-1)
        let c = ctx(3, 1);
        let a = make_ideal(c, &[part(&[4])]).unwrap();
        let dims = ext_quotient(&a, win(-10, 0))
            .unwrap()
            .graded_dimensions(3, 1)
            .unwrap();
        assert_eq!(dims.len(), 4);
        for i in 0..4u64 {
            let expect = (i + 1) * (i + 2) / 2;
            assert_eq!(dims[&(3, -3 - i as i64)], BigUint::from(expect));
        }
    }
}
