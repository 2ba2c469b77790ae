//! Cross-checks between independent engines.

use std::collections::BTreeSet;

use glinv_core::betti::{betti_polynomial, betti_table};
use glinv_core::homology::{ext_min_degree, ext_quotient, modules_of, regularity};
use glinv_core::ideals::{make_ideal, power_of_minors, symbolic_power};
use glinv_core::loccoh::{lc_support, lc_table};
use glinv_core::{DegreeWindow, InvariantIdeal, MatrixContext, Partition};

fn ctx(m: usize, n: usize) -> MatrixContext {
    MatrixContext::new(m, n).unwrap()
}

fn rect(a: usize, b: u32) -> Partition {
    Partition::rect(a, b)
}

fn ext_indices(i: &InvariantIdeal) -> BTreeSet<i64> {
    let c = i.ctx();
    let top = (c.m() * c.n()) as i64;
    let mut js = BTreeSet::new();
    for zp in modules_of(i).unwrap() {
        for j in 0..=top {
            if ext_min_degree(c, &zp, j).unwrap().is_some() {
                js.insert(j);
            }
        }
    }
    js
}

const RECTANGLES: &[(usize, usize, usize, u32)] = &[
    (2, 2, 1, 1),
    (2, 2, 2, 1),
    (2, 2, 1, 2),
    (3, 2, 2, 1),
    (3, 2, 1, 2),
    (3, 3, 2, 2),
    (3, 3, 1, 3),
    (3, 3, 3, 1),
    (4, 3, 2, 2),
    (4, 3, 3, 2),
];

#[test]
fn regularity_matches_betti_table_of_rectangles() {
    for &(m, n, a, b) in RECTANGLES {
        let c = ctx(m, n);
        let t = betti_table(&betti_polynomial(c, a, b).unwrap(), c).unwrap();
        let from_betti = t.entries().keys().map(|(i, d)| d - i).max().unwrap();
        let i = make_ideal(c, &[rect(a, b)]).unwrap();
        assert_eq!(regularity(&i).unwrap(), from_betti, "{m}x{n}, {a}x{b}");
    }
}

#[test]
fn projective_dimension_matches_betti_length() {
    for &(m, n, a, b) in RECTANGLES {
        let c = ctx(m, n);
        let t = betti_table(&betti_polynomial(c, a, b).unwrap(), c).unwrap();
        let i = make_ideal(c, &[rect(a, b)]).unwrap();
        let js = ext_indices(&i);
        assert_eq!(
            *js.last().unwrap(),
            t.totals().len() as i64,
            "{m}x{n}, {a}x{b}"
        );
    }
}

#[test]
fn last_syzygy_degree_shows_up_in_top_ext() {
    // the top Betti degree D in the last column gives Ext^pd(S/I, S) in degree -D
    for &(m, n, a, b) in RECTANGLES {
        let c = ctx(m, n);
        let i = make_ideal(c, &[rect(a, b)]).unwrap();
        let t = betti_table(&betti_polynomial(c, a, b).unwrap(), c).unwrap();
        let pd = t.totals().len() as i64;
        let last = pd - 1;
        let deg = t
            .entries()
            .keys()
            .filter(|(h, _)| *h == last)
            .map(|(_, d)| *d)
            .max()
            .unwrap();
        let w = DegreeWindow::new(-deg - 1, -deg).unwrap();
        let ch = ext_quotient(&i, w).unwrap().at_index(pd);
        assert!(
            ch.iter().any(|(_, term)| term.degree == -deg),
            "{m}x{n}, {a}x{b}"
        );
    }
}

#[test]
fn maximal_minor_powers_have_linear_resolutions() {
    for n in 1..=3usize {
        for m in n..=n + 1 {
            let c = ctx(m, n);
            for d in 1..=3u32 {
                let t = betti_table(&betti_polynomial(c, n, d).unwrap(), c).unwrap();
                assert!(t
                    .entries()
                    .keys()
                    .all(|(i, deg)| deg - i == (n as i64) * d as i64));
                assert_eq!(
                    regularity(&power_of_minors(c, n, d).unwrap()).unwrap(),
                    (n as i64) * d as i64
                );
            }
        }
    }
}

#[test]
fn symbolic_powers_of_maximal_minors_equal_ordinary_powers() {
    for n in 1..=4usize {
        let c = ctx(n + 1, n);
        for d in 1..=4 {
            assert_eq!(
                symbolic_power(c, n, d).unwrap(),
                power_of_minors(c, n, d).unwrap()
            );
        }
    }
}

#[test]
fn local_cohomology_support_bounds() {
    for n in 1..=5usize {
        for m in n..=n + 2 {
            let c = ctx(m, n);
            for p in 1..=n {
                let (lo, hi) = lc_support(c, p).unwrap();
                // lowest index is the height of I_p, top is the cohomological dimension
                assert_eq!(lo as usize, (m - p + 1) * (n - p + 1), "{m}x{n} p={p}");
                assert_eq!(hi as usize, m * n - p * p + 1, "{m}x{n} p={p}");
                let t = lc_table(c, p).unwrap();
                assert_eq!(t.multiplicity(lo, p - 1), 1u32.into());
            }
        }
    }
}
