//! Exact integer polynomial arithmetic and a normal form for products
//! Π(1 - q^a) / Π(1 - q^b).
//!
//! [`CycloRatio`] is the primary carrier: the generating functions of this
//! crate arise natively as products of factors (1 - q^a) indexed by positive
//! roots or reflection-group degrees. Materialising a [`IntPoly`] out of a
//! ratio goes through cyclotomic bookkeeping (every q^a - 1 is the product of
//! the cyclotomic polynomials Phi_d for d | a), with plain long division kept
//! as an independent second route.
//!
//! Coefficients are arbitrary-precision integers throughout; exponent
//! products such as those coming from E8 degree multisets overflow machine
//! words, so no fixed-width arithmetic is used.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense integer polynomial in one variable q.
///
/// Canonical form: no trailing zero coefficients; the zero polynomial has an
/// empty coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly {
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// c * q^e
    pub fn monomial(c: BigInt, e: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); e + 1];
        coeffs[e] = c;
        IntPoly { coeffs }
    }

    /// 1 - q^a
    pub fn one_minus_q_pow(a: usize) -> Self {
        assert!(a > 0, "factor exponent must be positive");
        let mut coeffs = vec![BigInt::zero(); a + 1];
        coeffs[0] = BigInt::one();
        coeffs[a] = -BigInt::one();
        IntPoly { coeffs }
    }

    /// q^n - 1
    pub fn q_pow_minus_one(n: usize) -> Self {
        assert!(n > 0);
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = -BigInt::one();
        coeffs[n] = BigInt::one();
        IntPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, e: usize) -> BigInt {
        self.coeffs.get(e).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        IntPoly::from_coeffs(out)
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }

    /// Exact division; errors if `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &IntPoly) -> Result<IntPoly> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        let dn = divisor.coeffs.len();
        if self.coeffs.len() < dn {
            return Err(Error::NotAPolynomial);
        }
        let lead = divisor.coeffs[dn - 1].clone();
        let mut rem = self.coeffs.clone();
        let qn = rem.len() - dn + 1;
        let mut quot = vec![BigInt::zero(); qn];
        for k in (0..qn).rev() {
            let top = rem[k + dn - 1].clone();
            if top.is_zero() {
                continue;
            }
            if (&top % &lead) != BigInt::zero() {
                return Err(Error::NotAPolynomial);
            }
            let c = top / &lead;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NotAPolynomial);
        }
        Ok(IntPoly::from_coeffs(quot))
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    /// All odd-degree coefficients vanish.
    pub fn is_even_polynomial(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(|c| c.is_zero())
    }

    /// Coefficient k equals coefficient (degree - k).
    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|k| self.coeffs[k] == self.coeffs[n - 1 - k])
    }

    /// Canonical text form, ascending exponents: "1 + q^4 + q^8".
    ///
    /// With `superscripts` the exponents render as Unicode superscripts;
    /// the plain form is ASCII and byte-stable.
    pub fn render(&self, superscripts: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    out.push('-');
                }
                first = false;
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let coeff_part = if mag.is_one() && e > 0 {
                String::new()
            } else {
                mag.to_string()
            };
            out.push_str(&coeff_part);
            if e == 1 {
                out.push('q');
            } else if e > 1 {
                if superscripts {
                    out.push('q');
                    out.push_str(&to_superscript(e));
                } else {
                    out.push_str(&format!("q^{e}"));
                }
            }
        }
        out
    }
}

fn to_superscript(n: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string()
        .chars()
        .map(|c| DIGITS[c.to_digit(10).unwrap() as usize])
        .collect()
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

impl std::ops::Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        IntPoly::mul(self, rhs)
    }
}

impl std::ops::Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        IntPoly::add(self, rhs)
    }
}

/// Divisors of n in ascending order.
fn divisors(n: u64) -> Vec<u64> {
    let mut divs = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            divs.push(i);
            if i != n / i {
                divs.push(n / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    divs
}

static CYCLO_CACHE: Mutex<Option<HashMap<u64, IntPoly>>> = Mutex::new(None);

/// The n-th cyclotomic polynomial Phi_n, by recursive exact division of
/// q^n - 1 by Phi_d for the proper divisors d of n. Memoised per process.
pub fn cyclotomic(n: u64) -> IntPoly {
    assert!(n > 0, "cyclotomic index must be positive");
    if let Some(p) = CYCLO_CACHE
        .lock()
        .unwrap()
        .get_or_insert_with(HashMap::new)
        .get(&n)
    {
        return p.clone();
    }
    let result = if n == 1 {
        IntPoly::from_i64_coeffs(&[-1, 1])
    } else {
        let mut acc = IntPoly::q_pow_minus_one(n as usize);
        for d in divisors(n) {
            if d == n {
                continue;
            }
            let phi = cyclotomic(d);
            acc = acc.exact_div(&phi).expect("q^n - 1 divisible by Phi_d");
        }
        acc
    };
    CYCLO_CACHE
        .lock()
        .unwrap()
        .get_or_insert_with(HashMap::new)
        .insert(n, result.clone());
    result
}

/// Value of a product/quotient of (1 - q^a) factors at q = -1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MinusOneEval {
    Value(BigInt),
    /// The counting shortcut does not apply (pole or non-integer value);
    /// callers fall back to [`CycloRatio::to_polynomial`] and evaluate.
    Indeterminate,
}

/// Normal form for Π_{a in num} (1 - q^a) / Π_{b in den} (1 - q^b).
///
/// Both sides are multisets of positive exponents; equal exponents shared by
/// numerator and denominator are cancelled on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycloRatio {
    num: BTreeMap<u64, u64>,
    den: BTreeMap<u64, u64>,
}

impl CycloRatio {
    pub fn new<I, J>(num: I, den: J) -> Self
    where
        I: IntoIterator<Item = u64>,
        J: IntoIterator<Item = u64>,
    {
        let mut n: BTreeMap<u64, u64> = BTreeMap::new();
        let mut d: BTreeMap<u64, u64> = BTreeMap::new();
        for a in num {
            assert!(a > 0, "exponents must be positive");
            *n.entry(a).or_insert(0) += 1;
        }
        for b in den {
            assert!(b > 0, "exponents must be positive");
            *d.entry(b).or_insert(0) += 1;
        }
        let mut r = CycloRatio { num: n, den: d };
        r.cancel();
        r
    }

    pub fn one() -> Self {
        CycloRatio {
            num: BTreeMap::new(),
            den: BTreeMap::new(),
        }
    }

    fn cancel(&mut self) {
        let keys: Vec<u64> = self.num.keys().copied().collect();
        for a in keys {
            if let Some(&dm) = self.den.get(&a) {
                let nm = self.num[&a];
                let c = nm.min(dm);
                match nm - c {
                    0 => {
                        self.num.remove(&a);
                    }
                    m => {
                        self.num.insert(a, m);
                    }
                }
                match dm - c {
                    0 => {
                        self.den.remove(&a);
                    }
                    m => {
                        self.den.insert(a, m);
                    }
                }
            }
        }
    }

    /// Numerator exponents with multiplicity, ascending.
    pub fn num_exponents(&self) -> Vec<u64> {
        expand(&self.num)
    }

    /// Denominator exponents with multiplicity, ascending.
    pub fn den_exponents(&self) -> Vec<u64> {
        expand(&self.den)
    }

    pub fn is_one(&self) -> bool {
        self.num.is_empty() && self.den.is_empty()
    }

    /// Multiset-union product of two ratios.
    pub fn mul(&self, other: &CycloRatio) -> CycloRatio {
        CycloRatio::new(
            self.num_exponents()
                .into_iter()
                .chain(other.num_exponents()),
            self.den_exponents()
                .into_iter()
                .chain(other.den_exponents()),
        )
    }

    /// Keep only even exponents on both sides.
    pub fn even_part(&self) -> CycloRatio {
        CycloRatio::new(
            self.num_exponents().into_iter().filter(|a| a % 2 == 0),
            self.den_exponents().into_iter().filter(|b| b % 2 == 0),
        )
    }

    /// Materialise the ratio as a polynomial via cyclotomic bookkeeping:
    /// expand each (1 - q^a) into Phi_d factors, cancel multiplicities, and
    /// multiply what remains. Errors with "not a polynomial" if any
    /// cyclotomic multiplicity goes negative.
    pub fn to_polynomial(&self) -> Result<IntPoly> {
        // 1 - q^a = -(q^a - 1) = - Π_{d|a} Phi_d.
        let mut mult: BTreeMap<u64, i64> = BTreeMap::new();
        let mut sign_flips: i64 = 0;
        for (&a, &m) in &self.num {
            sign_flips += m as i64;
            for d in divisors(a) {
                *mult.entry(d).or_insert(0) += m as i64;
            }
        }
        for (&b, &m) in &self.den {
            sign_flips -= m as i64;
            for d in divisors(b) {
                *mult.entry(d).or_insert(0) -= m as i64;
            }
        }
        if mult.values().any(|&m| m < 0) {
            return Err(Error::NotAPolynomial);
        }
        let mut acc = IntPoly::one();
        for (&d, &m) in &mult {
            if m == 0 {
                continue;
            }
            let phi = cyclotomic(d);
            for _ in 0..m {
                acc = acc.mul(&phi);
            }
        }
        if sign_flips.rem_euclid(2) == 1 {
            acc = acc_neg(acc);
        }
        Ok(acc)
    }

    /// Same value as [`Self::to_polynomial`], computed instead by expanding
    /// the numerator and dividing out each denominator factor exactly.
    pub fn to_polynomial_by_division(&self) -> Result<IntPoly> {
        let mut acc = IntPoly::one();
        for a in self.num_exponents() {
            acc = acc.mul(&IntPoly::one_minus_q_pow(a as usize));
        }
        for b in self.den_exponents() {
            acc = acc.exact_div(&IntPoly::one_minus_q_pow(b as usize))?;
        }
        Ok(acc)
    }

    /// Exact value at q = 1 of the underlying rational function, when finite.
    ///
    /// Each factor (1 - q^a) = (1 - q)(1 + q + ... + q^{a-1}) contributes one
    /// zero at q = 1 and the factor value a; after matching the (1 - q)
    /// powers the value is Π num / Π den as a product of exponents. Returns
    /// `None` when there is a pole (more denominator factors than numerator
    /// factors).
    pub fn value_at_one(&self) -> Option<num_rational::BigRational> {
        use num_rational::BigRational;
        let nf: u64 = self.num.values().sum();
        let df: u64 = self.den.values().sum();
        if nf < df {
            return None;
        }
        if nf > df {
            return Some(BigRational::zero());
        }
        let mut v = BigRational::one();
        for a in self.num_exponents() {
            v *= BigRational::from_integer(BigInt::from(a));
        }
        for b in self.den_exponents() {
            v /= BigRational::from_integer(BigInt::from(b));
        }
        Some(v)
    }

    /// Value at q = -1 by counting even exponents.
    ///
    /// A factor (1 - q^a) vanishes at q = -1 exactly when a is even
    /// (otherwise it equals 2). With e_n, e_d the even counts:
    /// more even factors above than below gives 0; equal counts give the
    /// exact limit 2^(odd surplus) * Π even num exponents / Π even den
    /// exponents; fewer gives a pole, reported as `Indeterminate`. A
    /// non-integer value (impossible for polynomial ratios) is also reported
    /// as `Indeterminate` so callers take the polynomial route.
    pub fn eval_at_minus_one(&self) -> MinusOneEval {
        use num_rational::BigRational;
        let evens = |m: &BTreeMap<u64, u64>| -> u64 {
            m.iter().filter(|(a, _)| *a % 2 == 0).map(|(_, &c)| c).sum()
        };
        let e_n = evens(&self.num);
        let e_d = evens(&self.den);
        if e_n > e_d {
            return MinusOneEval::Value(BigInt::zero());
        }
        if e_n < e_d {
            return MinusOneEval::Indeterminate;
        }
        let mut v = BigRational::one();
        for a in self.num_exponents() {
            if a % 2 == 0 {
                v *= BigRational::from_integer(BigInt::from(a));
            } else {
                v *= BigRational::from_integer(BigInt::from(2));
            }
        }
        for b in self.den_exponents() {
            if b % 2 == 0 {
                v /= BigRational::from_integer(BigInt::from(b));
            } else {
                v /= BigRational::from_integer(BigInt::from(2));
            }
        }
        if v.is_integer() {
            MinusOneEval::Value(v.to_integer())
        } else {
            MinusOneEval::Indeterminate
        }
    }
}

fn expand(m: &BTreeMap<u64, u64>) -> Vec<u64> {
    let mut out = Vec::new();
    for (&a, &c) in m {
        for _ in 0..c {
            out.push(a);
        }
    }
    out
}

fn acc_neg(p: IntPoly) -> IntPoly {
    IntPoly::from_coeffs(p.coeffs().iter().map(|c| -c).collect())
}

impl fmt::Display for CycloRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let part = |exps: &[u64]| -> String {
            exps.iter()
                .map(|&a| {
                    if a == 1 {
                        "(1-q)".to_string()
                    } else {
                        format!("(1-q^{a})")
                    }
                })
                .collect::<String>()
        };
        let n = self.num_exponents();
        let d = self.den_exponents();
        if n.is_empty() && d.is_empty() {
            return f.write_str("1");
        }
        let ns = if n.is_empty() {
            "1".to_string()
        } else {
            part(&n)
        };
        if d.is_empty() {
            f.write_str(&ns)
        } else {
            write!(f, "{ns} / {}", part(&d))
        }
    }
}

impl std::ops::Mul for &CycloRatio {
    type Output = CycloRatio;
    fn mul(self, rhs: &CycloRatio) -> CycloRatio {
        CycloRatio::mul(self, rhs)
    }
}

/// Gaussian binomial coefficient [n choose k]_q as a cancelled ratio:
/// Π_{i=1..k} (1 - q^{n-k+i}) / (1 - q^i).
pub fn gaussian_binomial(n: u64, k: u64) -> CycloRatio {
    if k > n {
        // Zero would not be a ratio of this shape; callers stay in range.
        panic!("gaussian_binomial: k > n");
    }
    CycloRatio::new((n - k + 1..=n).collect::<Vec<_>>(), 1..=k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_canonical_form() {
        let p = IntPoly::from_i64_coeffs(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(IntPoly::from_i64_coeffs(&[0, 0]).is_zero());
        assert_eq!(IntPoly::zero().degree(), None);
    }

    #[test]
    fn mul_square_of_one_plus_q() {
        let p = IntPoly::from_i64_coeffs(&[1, 1]);
        assert_eq!(p.mul(&p), IntPoly::from_i64_coeffs(&[1, 2, 1]));
        let one = IntPoly::one();
        assert_eq!(p.mul(&one), p);
    }

    #[test]
    fn exact_div_detects_remainder() {
        let num = IntPoly::one_minus_q_pow(2);
        let den = IntPoly::one_minus_q_pow(3);
        assert_eq!(num.exact_div(&den), Err(Error::NotAPolynomial));
        let ok = IntPoly::one_minus_q_pow(4)
            .exact_div(&IntPoly::one_minus_q_pow(2))
            .unwrap();
        assert_eq!(ok, IntPoly::from_i64_coeffs(&[1, 0, 1]));
    }

    #[test]
    fn cyclotomic_small() {
        assert_eq!(cyclotomic(1), IntPoly::from_i64_coeffs(&[-1, 1]));
        assert_eq!(cyclotomic(2), IntPoly::from_i64_coeffs(&[1, 1]));
        assert_eq!(cyclotomic(3), IntPoly::from_i64_coeffs(&[1, 1, 1]));
        assert_eq!(cyclotomic(6), IntPoly::from_i64_coeffs(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), IntPoly::from_i64_coeffs(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn cyclotomic_product_recovers_q_n_minus_one() {
        for n in 1..=20u64 {
            let mut acc = IntPoly::one();
            for d in divisors(n) {
                acc = acc.mul(&cyclotomic(d));
            }
            assert_eq!(acc, IntPoly::q_pow_minus_one(n as usize));
        }
    }

    #[test]
    fn ratio_geometric_series() {
        let r = CycloRatio::new([3], [1]);
        assert_eq!(r.to_polynomial().unwrap(), IntPoly::from_i64_coeffs(&[1, 1, 1]));
    }

    #[test]
    fn ratio_e6_even_part_shape() {
        // (1 - q^12)/(1 - q^4) = 1 + q^4 + q^8
        let r = CycloRatio::new([12], [4]);
        let p = r.to_polynomial().unwrap();
        assert_eq!(p, IntPoly::from_i64_coeffs(&[1, 0, 0, 0, 1, 0, 0, 0, 1]));
        assert_eq!(p.render(false), "1 + q^4 + q^8");
        assert_eq!(p.render(true), "1 + q⁴ + q⁸");
    }

    #[test]
    fn ratio_not_a_polynomial() {
        let r = CycloRatio::new([2], [3]);
        assert_eq!(r.to_polynomial(), Err(Error::NotAPolynomial));
        assert_eq!(r.to_polynomial_by_division(), Err(Error::NotAPolynomial));
    }

    #[test]
    fn even_part_drops_odd_exponents() {
        let r = CycloRatio::new([9, 12], [4]);
        assert_eq!(r.even_part(), CycloRatio::new([12], [4]));
        let t = CycloRatio::new([1, 3, 5], [1, 3, 5]);
        assert!(t.even_part().is_one());
        assert!(t.is_one());
    }

    #[test]
    fn minus_one_eval_cases() {
        // (1 - q^2)/(1 - q) = 1 + q vanishes at -1.
        assert_eq!(
            CycloRatio::new([2], [1]).eval_at_minus_one(),
            MinusOneEval::Value(BigInt::zero())
        );
        // (1 - q^3)/(1 - q) at -1 = 2/2 = 1.
        assert_eq!(
            CycloRatio::new([3], [1]).eval_at_minus_one(),
            MinusOneEval::Value(BigInt::one())
        );
        // Full E6 omega_1 ratio: value 3.
        assert_eq!(
            CycloRatio::new([9, 12], [1, 4]).eval_at_minus_one(),
            MinusOneEval::Value(BigInt::from(3))
        );
        // Pole order at -1: counting cannot decide.
        assert_eq!(
            CycloRatio::new([3], [2]).eval_at_minus_one(),
            MinusOneEval::Indeterminate
        );
    }

    #[test]
    fn minus_one_matches_polynomial_route() {
        let cases = [
            CycloRatio::new([9, 12], [1, 4]),
            CycloRatio::new([3, 4], [1, 2]),
            CycloRatio::new([2, 4, 6], [1, 2, 3]),
            gaussian_binomial(4, 2),
            gaussian_binomial(6, 3),
        ];
        for r in cases {
            let p = r.to_polynomial().unwrap();
            assert_eq!(
                r.eval_at_minus_one(),
                MinusOneEval::Value(p.eval_i64(-1)),
                "ratio {r}"
            );
        }
    }

    #[test]
    fn gaussian_binomial_4_2() {
        let p = gaussian_binomial(4, 2).to_polynomial().unwrap();
        assert_eq!(p, IntPoly::from_i64_coeffs(&[1, 1, 2, 1, 1]));
        assert_eq!(p.eval_i64(-1), BigInt::from(2));
        assert!(p.is_palindromic());
    }

    #[test]
    fn value_at_one_is_exponent_product() {
        let r = CycloRatio::new([9, 12], [1, 4]);
        let v = r.value_at_one().unwrap();
        assert_eq!(v, num_rational::BigRational::from_integer(BigInt::from(27)));
        let p = r.to_polynomial().unwrap();
        assert_eq!(p.eval_i64(1), BigInt::from(27));
    }

    #[test]
    fn two_routes_agree_on_seeded_random_ratios() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
        for _ in 0..1000 {
            let nn = rng.gen_range(0..6);
            let nd = rng.gen_range(0..6);
            let num: Vec<u64> = (0..nn).map(|_| rng.gen_range(1..=30)).collect();
            let den: Vec<u64> = (0..nd).map(|_| rng.gen_range(1..=30)).collect();
            let r = CycloRatio::new(num, den);
            let a = r.to_polynomial();
            let b = r.to_polynomial_by_division();
            assert_eq!(a, b, "mismatch on {r}");
            if let Ok(p) = a {
                // On polynomial ratios the counting shortcut at -1 always
                // produces the plain evaluation (no pole, integral value).
                assert_eq!(
                    r.eval_at_minus_one(),
                    MinusOneEval::Value(p.eval_i64(-1)),
                    "minus-one on {r}"
                );
            }
        }
    }

    #[test]
    fn render_poly_strings() {
        assert_eq!(IntPoly::zero().render(false), "0");
        assert_eq!(IntPoly::from_i64_coeffs(&[1, 1]).render(false), "1 + q");
        assert_eq!(
            IntPoly::from_i64_coeffs(&[1, 1, 2, 1, 1]).render(false),
            "1 + q + 2q^2 + q^3 + q^4"
        );
        assert_eq!(
            IntPoly::from_i64_coeffs(&[1, 0, 1, -1, 0, -1]).render(false),
            "1 + q^2 - q^3 - q^5"
        );
        assert_eq!(CycloRatio::new([9, 12], [1, 4]).to_string(), "(1-q^9)(1-q^12) / (1-q)(1-q^4)");
        assert_eq!(CycloRatio::one().to_string(), "1");
    }

    proptest::proptest! {
        #[test]
        fn even_part_idempotent(num in proptest::collection::vec(1u64..25, 0..6),
                                den in proptest::collection::vec(1u64..25, 0..6)) {
            let r = CycloRatio::new(num, den);
            let e = r.even_part();
            proptest::prop_assert_eq!(e.even_part(), e);
        }

        #[test]
        fn even_part_of_polynomial_is_polynomial(
            num in proptest::collection::vec(1u64..25, 0..6),
            den in proptest::collection::vec(1u64..25, 0..6),
        ) {
            let r = CycloRatio::new(num, den);
            if r.to_polynomial().is_ok() {
                proptest::prop_assert!(r.even_part().to_polynomial().is_ok());
            }
        }

        #[test]
        fn eval_mul_homomorphism(a in proptest::collection::vec(-5i64..6, 0..6),
                                 b in proptest::collection::vec(-5i64..6, 0..6),
                                 x in -4i64..5) {
            let p = IntPoly::from_i64_coeffs(&a);
            let q = IntPoly::from_i64_coeffs(&b);
            proptest::prop_assert_eq!(p.mul(&q).eval_i64(x), p.eval_i64(x) * q.eval_i64(x));
        }
    }
}
