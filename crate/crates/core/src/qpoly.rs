//! Exact polynomials in one variable `q` with big-integer coefficients, and
//! the Gauss polynomials (q-binomial coefficients).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct QPolynomial {
    coeffs: BTreeMap<u32, BigInt>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        QPolynomial::default()
    }

    pub fn one() -> Self {
        QPolynomial::monomial(0, BigInt::one())
    }

    pub fn monomial(exp: u32, coeff: BigInt) -> Self {
        let mut p = QPolynomial::zero();
        p.add_term(exp, coeff);
        p
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I: IntoIterator<Item = (u32, i64)>>(terms: I) -> Self {
        let mut p = QPolynomial::zero();
        for (e, c) in terms {
            p.add_term(e, BigInt::from(c));
        }
        p
    }

    fn add_term(&mut self, exp: u32, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(exp).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: u32) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigInt)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn low_degree(&self) -> Option<u32> {
        self.coeffs.keys().next().copied()
    }

    /// Value at `q = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// `p(q^k)`.
    pub fn substitute_power(&self, k: u32) -> QPolynomial {
        QPolynomial {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&e, c)| (e * k, c.clone()))
                .collect(),
        }
    }

    /// `q^e * p(q)`.
    pub fn shift(&self, e: u32) -> QPolynomial {
        QPolynomial {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&x, c)| (x + e, c.clone()))
                .collect(),
        }
    }

    /// Exact quotient by `1 - q^k`, or `None` if it does not divide.
    pub fn div_one_minus_q_pow(&self, k: u32) -> Option<QPolynomial> {
        assert!(k > 0);
        let Some(deg) = self.degree() else {
            return Some(QPolynomial::zero());
        };
        if deg < k {
            return None;
        }
        // p = (1 - q^k) * r  <=>  r_i = p_i + r_{i-k}
        let top = deg - k;
        let mut r: Vec<BigInt> = Vec::with_capacity(top as usize + 1);
        for i in 0..=top {
            let mut v = self.coeff(i);
            if i >= k {
                v += &r[(i - k) as usize];
            }
            r.push(v);
        }
        let quotient = QPolynomial {
            coeffs: r
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i as u32, c))
                .collect(),
        };
        let back = &quotient * &QPolynomial::from_terms([(0, 1), (k, -1)]);
        (back == *self).then_some(quotient)
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;

    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let mut out = self.clone();
        for (&e, c) in &rhs.coeffs {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;

    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        let mut out = QPolynomial::zero();
        for (&a, ca) in &self.coeffs {
            for (&b, cb) in &rhs.coeffs {
                out.add_term(a + b, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.coeffs.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = e == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match e {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The Gauss polynomial `(a choose b)_q`, computed from the product formula
/// `prod (1 - q^(a-i)) / prod (1 - q^(i+1))` by exact division.
pub fn qbinomial(a: u32, b: u32) -> QPolynomial {
    if b > a {
        return QPolynomial::zero();
    }
    let b = b.min(a - b);
    let mut acc = QPolynomial::one();
    for i in 0..b {
        acc = &acc * &QPolynomial::from_terms([(0, 1), (a - i, -1)]);
    }
    for i in 1..=b {
        acc = acc
            .div_one_minus_q_pow(i)
            .expect("Gauss polynomial numerator is divisible by (1-q^i)");
    }
    acc
}
