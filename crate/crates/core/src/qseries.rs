//! Truncated formal power series in one variable `q` with exact integer
//! coefficients.
//!
//! A [`Series`] of order `N` stores the coefficients of `q^0..=q^N`; every
//! operation is exact modulo `q^(N+1)`. Infinite q-Pochhammer products are
//! expanded only as far as the truncation order requires.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("truncation order mismatch: {lhs} vs {rhs}")]
    OrderMismatch { lhs: usize, rhs: usize },
    #[error("constant term {0} is not a unit")]
    NonUnit(BigInt),
    #[error("coefficient index {index} exceeds truncation order {order}")]
    OutOfRange { index: usize, order: usize },
    #[error("invalid pochhammer parameters: {0}")]
    InvalidSpec(&'static str),
    #[error("series family term {term}: {reason}")]
    Consistency { term: usize, reason: String },
}

/// Sign of the monomial argument in a factor `1 ± q^e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithKind {
    Add,
    Sub,
    Mul,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Series {
    coeffs: Vec<BigInt>,
}

impl Series {
    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(0, 1, order)
    }

    /// `coeff * q^exp`, or zero when `exp` lies beyond the order.
    pub fn monomial(exp: usize, coeff: i64, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exp <= order {
            s.coeffs[exp] = BigInt::from(coeff);
        }
        s
    }

    /// Builds a series from leading coefficients; missing entries are zero and
    /// entries past `order` are dropped.
    pub fn from_i64s(values: &[i64], order: usize) -> Self {
        let mut s = Self::zero(order);
        for (slot, &v) in s.coeffs.iter_mut().zip(values) {
            *slot = BigInt::from(v);
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Option<Self> {
        if coeffs.is_empty() {
            None
        } else {
            Some(Series { coeffs })
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Result<&BigInt, SeriesError> {
        self.coeffs.get(n).ok_or(SeriesError::OutOfRange {
            index: n,
            order: self.order(),
        })
    }

    /// Index of the first nonzero coefficient, `None` for the zero series.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    fn check_order(&self, rhs: &Series) -> Result<(), SeriesError> {
        if self.order() == rhs.order() {
            Ok(())
        } else {
            Err(SeriesError::OrderMismatch {
                lhs: self.order(),
                rhs: rhs.order(),
            })
        }
    }

    pub fn try_add(&self, rhs: &Series) -> Result<Series, SeriesError> {
        self.check_order(rhs)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Series { coeffs })
    }

    pub fn try_sub(&self, rhs: &Series) -> Result<Series, SeriesError> {
        self.check_order(rhs)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Series { coeffs })
    }

    /// Cauchy product truncated at the common order.
    pub fn try_mul(&self, rhs: &Series) -> Result<Series, SeriesError> {
        self.check_order(rhs)?;
        let order = self.order();
        let mut out = Self::zero(order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: i64) -> Series {
        let c = BigInt::from(c);
        Series {
            coeffs: self.coeffs.iter().map(|a| a * &c).collect(),
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> Series {
        let order = self.order();
        let mut out = Self::zero(order);
        if k <= order {
            out.coeffs[k..].clone_from_slice(&self.coeffs[..=order - k]);
        }
        out
    }

    /// Substitutes `q -> q^k` (k >= 1).
    pub fn dilate(&self, k: usize) -> Series {
        assert!(k >= 1, "dilation factor must be positive");
        let order = self.order();
        let mut out = Self::zero(order);
        for (i, c) in self.coeffs.iter().enumerate() {
            let e = i * k;
            if e > order {
                break;
            }
            out.coeffs[e] = c.clone();
        }
        out
    }

    /// In place multiplication by `1 ± q^exp`.
    pub fn mul_binomial(&mut self, sign: Sign, exp: usize) {
        let order = self.order();
        if exp == 0 {
            match sign {
                Sign::Plus => self.coeffs.iter_mut().for_each(|c| *c *= 2),
                Sign::Minus => self.coeffs.iter_mut().for_each(|c| c.set_zero()),
            }
            return;
        }
        if exp > order {
            return;
        }
        for i in (exp..=order).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            match sign {
                Sign::Plus => hi[0] += &lo[i - exp],
                Sign::Minus => hi[0] -= &lo[i - exp],
            }
        }
    }

    /// In place division by `1 ± q^exp`, `exp >= 1`.
    pub fn div_binomial(&mut self, sign: Sign, exp: usize) {
        assert!(exp >= 1, "division by a non-unit binomial");
        let order = self.order();
        for i in exp..=order {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            // t = s / (1 + e q^exp)  <=>  t_i = s_i - e t_{i-exp}
            match sign {
                Sign::Plus => hi[0] -= &lo[i - exp],
                Sign::Minus => hi[0] += &lo[i - exp],
            }
        }
    }

    /// Multiplicative inverse; requires a constant term of `±1`.
    pub fn invert(&self) -> Result<Series, SeriesError> {
        let c0 = &self.coeffs[0];
        if !c0.abs().is_one() {
            return Err(SeriesError::NonUnit(c0.clone()));
        }
        let order = self.order();
        let mut inv = Self::zero(order);
        inv.coeffs[0] = c0.clone();
        for n in 1..=order {
            let mut acc = BigInt::zero();
            for k in 1..=n {
                let a = &self.coeffs[k];
                if !a.is_zero() {
                    acc += a * &inv.coeffs[n - k];
                }
            }
            // c0 is ±1, so dividing by c0 is multiplying by it.
            inv.coeffs[n] = -(acc * c0);
        }
        Ok(inv)
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}q")?,
                (_, true) => write!(f, "q^{k}")?,
                (_, false) => write!(f, "{mag}q^{k}")?,
            }
        }
        if first {
            write!(f, "O(q^{})", self.order() + 1)
        } else {
            write!(f, " + O(q^{})", self.order() + 1)
        }
    }
}

// Operator forms panic on mismatched orders, like shape mismatches in array
// libraries; use `arith` or the `try_*` methods for a checked result.
impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        self.try_add(rhs).expect("series add")
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        self.try_sub(rhs).expect("series sub")
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        self.try_mul(rhs).expect("series mul")
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

pub fn arith(lhs: &Series, rhs: &Series, kind: ArithKind) -> Result<Series, SeriesError> {
    match kind {
        ArithKind::Add => lhs.try_add(rhs),
        ArithKind::Sub => lhs.try_sub(rhs),
        ArithKind::Mul => lhs.try_mul(rhs),
    }
}

pub fn coeff(s: &Series, n: usize) -> Result<&BigInt, SeriesError> {
    s.coeff(n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Count {
    Finite(usize),
    Infinite,
}

/// `(±q^start; q^step)_count`, i.e. the product of `1 ± q^(start + i*step)`.
///
/// Note the sign convention: `sign` is the sign in each factor `1 ± q^e`, so
/// `(q;q)_n` has `Sign::Minus` and `(-q;q)_n` has `Sign::Plus`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PochSpec {
    sign: Sign,
    start: usize,
    step: usize,
    count: Count,
}

impl PochSpec {
    pub fn new(sign: Sign, start: usize, step: usize, count: Count) -> Result<Self, SeriesError> {
        if start == 0 {
            return Err(SeriesError::InvalidSpec("start must be at least 1"));
        }
        if step == 0 {
            return Err(SeriesError::InvalidSpec("step must be at least 1"));
        }
        Ok(PochSpec {
            sign,
            start,
            step,
            count,
        })
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn step(&self) -> usize {
        self.step
    }

    pub fn count(&self) -> Count {
        self.count
    }

    /// Exponents of the factors that can affect coefficients up to `order`.
    fn exponents(&self, order: usize) -> impl Iterator<Item = usize> + '_ {
        let limit = match self.count {
            Count::Finite(n) => n,
            Count::Infinite => usize::MAX,
        };
        (0..limit)
            .map(move |i| self.start + i * self.step)
            .take_while(move |&e| e <= order)
    }
}

pub fn pochhammer(spec: &PochSpec, order: usize) -> Series {
    let mut s = Series::one(order);
    for e in spec.exponents(order) {
        s.mul_binomial(spec.sign, e);
    }
    s
}

/// `1 / pochhammer(spec)`, computed by successive binomial division.
pub fn pochhammer_reciprocal(spec: &PochSpec, order: usize) -> Series {
    let mut s = Series::one(order);
    for e in spec.exponents(order) {
        s.div_binomial(spec.sign, e);
    }
    s
}

/// `(q^a; q^b)_n` shorthand with a minus sign, the common case.
pub fn qpoch(start: usize, step: usize, count: Count, order: usize) -> Series {
    let spec = PochSpec::new(Sign::Minus, start, step, count).expect("positive start and step");
    pochhammer(&spec, order)
}

/// `(-q^a; q^b)_n` shorthand.
pub fn qpoch_neg(start: usize, step: usize, count: Count, order: usize) -> Series {
    let spec = PochSpec::new(Sign::Plus, start, step, count).expect("positive start and step");
    pochhammer(&spec, order)
}

/// Sums a family of series given as `(valuation lower bound, term)` pairs.
///
/// Bounds must be nondecreasing; consumption stops at the first bound beyond
/// `order`, so an infinite family terminates as long as its bounds grow.
pub fn sum_family<I>(terms: I, order: usize) -> Result<Series, SeriesError>
where
    I: IntoIterator<Item = (usize, Series)>,
{
    let mut acc = Series::zero(order);
    let mut prev_bound = 0usize;
    for (idx, (bound, term)) in terms.into_iter().enumerate() {
        if bound > order {
            break;
        }
        if bound < prev_bound {
            return Err(SeriesError::Consistency {
                term: idx,
                reason: format!("valuation bound {bound} decreased from {prev_bound}"),
            });
        }
        prev_bound = bound;
        if term.order() != order {
            return Err(SeriesError::OrderMismatch {
                lhs: order,
                rhs: term.order(),
            });
        }
        if let Some(v) = term.valuation() {
            if v < bound {
                return Err(SeriesError::Consistency {
                    term: idx,
                    reason: format!("declared valuation >= {bound} but found q^{v}"),
                });
            }
        }
        acc = &acc + &term;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &Series) -> Vec<i64> {
        s.coeffs()
            .iter()
            .map(|c| i64::try_from(c).expect("small coefficient"))
            .collect()
    }

    /// Brute-force expansion of prod_{e in exps} (1 + sign q^e) by subsets.
    fn subset_product(exps: &[usize], sign: i64, order: usize) -> Vec<i64> {
        let mut out = vec![0i64; order + 1];
        for mask in 0u64..(1u64 << exps.len()) {
            let mut e = 0;
            let mut c = 1;
            for (i, &x) in exps.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    e += x;
                    c *= sign;
                }
            }
            if e <= order {
                out[e] += c;
            }
        }
        out
    }

    #[test]
    fn difference_of_squares() {
        let a = Series::from_i64s(&[1, 1], 4);
        let b = Series::from_i64s(&[1, -1], 4);
        assert_eq!(ints(&(&a * &b)), vec![1, 0, -1, 0, 0]);
    }

    #[test]
    fn add_zero_is_identity() {
        let geo = Series::from_i64s(&[1; 9], 8);
        assert_eq!(geo.try_add(&Series::zero(8)).unwrap(), geo);
    }

    #[test]
    fn order_mismatch_is_an_error() {
        let a = Series::one(3);
        let b = Series::one(4);
        assert_eq!(
            arith(&a, &b, ArithKind::Mul),
            Err(SeriesError::OrderMismatch { lhs: 3, rhs: 4 })
        );
    }

    #[test]
    fn distinct_parts_squared_at_order_four() {
        let d = qpoch_neg(1, 1, Count::Infinite, 4);
        // 9 = number of n=4 members of the strict overlined-above class.
        assert_eq!(ints(&(&d * &d)), vec![1, 2, 3, 6, 9]);
    }

    #[test]
    fn empty_and_small_products() {
        let spec = PochSpec::new(Sign::Minus, 1, 1, Count::Finite(0)).unwrap();
        assert_eq!(pochhammer(&spec, 5), Series::one(5));
        let spec = PochSpec::new(Sign::Plus, 1, 1, Count::Finite(2)).unwrap();
        assert_eq!(ints(&pochhammer(&spec, 5)), vec![1, 1, 1, 1, 0, 0]);
    }

    #[test]
    fn euler_product_matches_subset_expansion() {
        let exps: Vec<usize> = (1..=10).collect();
        let expected = subset_product(&exps, -1, 10);
        assert_eq!(expected, vec![1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0]);
        assert_eq!(ints(&qpoch(1, 1, Count::Infinite, 10)), expected);
    }

    #[test]
    fn odd_step_product_matches_subset_expansion() {
        let exps: Vec<usize> = (3..=20).step_by(2).collect();
        let spec = PochSpec::new(Sign::Plus, 3, 2, Count::Infinite).unwrap();
        assert_eq!(ints(&pochhammer(&spec, 20)), subset_product(&exps, 1, 20));
    }

    #[test]
    fn bad_spec_rejected() {
        assert!(PochSpec::new(Sign::Minus, 0, 1, Count::Infinite).is_err());
        assert!(PochSpec::new(Sign::Minus, 1, 0, Count::Infinite).is_err());
    }

    #[test]
    fn geometric_inverse() {
        let s = Series::from_i64s(&[1, -1], 6);
        assert_eq!(ints(&s.invert().unwrap()), vec![1; 7]);
    }

    #[test]
    fn partition_numbers_from_inverse() {
        let inv = qpoch(1, 1, Count::Infinite, 6).invert().unwrap();
        assert_eq!(ints(&inv), vec![1, 1, 2, 3, 5, 7, 11]);
    }

    #[test]
    fn reciprocal_matches_invert() {
        let spec = PochSpec::new(Sign::Minus, 1, 2, Count::Infinite).unwrap();
        assert_eq!(
            pochhammer_reciprocal(&spec, 30),
            pochhammer(&spec, 30).invert().unwrap()
        );
    }

    #[test]
    fn non_unit_constant_rejected() {
        let s = Series::from_i64s(&[2, 1], 3);
        assert_eq!(s.invert(), Err(SeriesError::NonUnit(BigInt::from(2))));
        assert!(Series::zero(3).invert().is_err());
        assert!(Series::from_i64s(&[-1, 3], 3).invert().is_ok());
    }

    #[test]
    fn coefficient_access() {
        assert_eq!(*Series::one(0).coeff(0).unwrap(), BigInt::one());
        assert_eq!(
            Series::one(2).coeff(3),
            Err(SeriesError::OutOfRange { index: 3, order: 2 })
        );
        let over = &qpoch_neg(1, 1, Count::Infinite, 6)
            * &qpoch(1, 1, Count::Infinite, 6).invert().unwrap();
        assert_eq!(*over.coeff(4).unwrap(), BigInt::from(14));
        let r = &qpoch(1, 1, Count::Infinite, 6).invert().unwrap()
            - &qpoch_neg(1, 1, Count::Infinite, 6);
        assert_eq!(*r.coeff(6).unwrap(), BigInt::from(7));
    }

    #[test]
    fn empty_family_is_zero() {
        let s = sum_family(std::iter::empty(), 5).unwrap();
        assert!(s.is_zero());
    }

    #[test]
    fn euler_family_sum() {
        let order = 8;
        let mut denom = Series::one(order);
        let terms = (1..).map(move |m| {
            denom.div_binomial(Sign::Minus, m);
            (m, denom.shift(m))
        });
        let lhs = sum_family(terms, order).unwrap();
        let rhs = &qpoch(1, 1, Count::Infinite, order).invert().unwrap() - &Series::one(order);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn family_bound_violations_reported() {
        let bad = vec![(2, Series::monomial(1, 1, 5))];
        assert!(matches!(
            sum_family(bad, 5),
            Err(SeriesError::Consistency { term: 0, .. })
        ));
        let decreasing = vec![
            (2, Series::monomial(2, 1, 5)),
            (1, Series::monomial(3, 1, 5)),
        ];
        assert!(matches!(
            sum_family(decreasing, 5),
            Err(SeriesError::Consistency { term: 1, .. })
        ));
    }

    #[test]
    fn display_form() {
        let s = Series::from_i64s(&[1, -1, 0, 2], 4);
        assert_eq!(s.to_string(), "1 - q + 2q^3 + O(q^5)");
        assert_eq!(Series::zero(2).to_string(), "O(q^3)");
    }

    #[test]
    fn dilate_and_shift() {
        let s = Series::from_i64s(&[1, 1, 1], 6);
        assert_eq!(ints(&s.dilate(2)), vec![1, 0, 1, 0, 1, 0, 0]);
        assert_eq!(ints(&s.shift(5)), vec![0, 0, 0, 0, 0, 1, 1]);
    }
}
