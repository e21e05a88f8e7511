//! Numerical polynomials with exact rational coefficients.
//!
//! A numerical polynomial is stored in the binomial-coefficient basis, so
//! `p(t) = sum_k c_k * C(t, k)` with `C(t, k) = t(t-1)...(t-k+1)/k!`. In this
//! basis `p` takes integer values at all integers exactly when every `c_k` is
//! an integer, and the partition-peeling algorithm can read the leading
//! multiplicity directly.
//!
//! Binomial conventions used throughout the crate: `C(n, k) = 0` whenever the
//! lower index `k` is negative, while a negative upper index follows the
//! falling-factorial formula literally (so `C(-1, 0) = 1` and `C(-1, 2) = 1`).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// `k!` as a big integer. Negative input is a logic error.
pub fn factorial(k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=k {
        acc *= BigInt::from(i);
    }
    acc
}

/// Integer binomial coefficient `C(n, k)` for arbitrary integer `n`.
///
/// Zero when `k < 0`; otherwise the falling factorial
/// `n(n-1)...(n-k+1)/k!`, which is an integer for every integer `n`.
pub fn integer_binomial(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= BigInt::from(n - i);
        // the product of j consecutive integers is divisible by j!
        let d = BigInt::from(i + 1);
        debug_assert!((&acc % &d).is_zero());
        acc /= d;
    }
    acc
}

/// An integer-valued-capable polynomial in the binomial basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumericalPolynomial {
    /// Coefficients `c_0..c_d` of `C(t, 0)..C(t, d)`, no trailing zeros.
    coeffs: Vec<BigRational>,
}

impl NumericalPolynomial {
    /// The zero polynomial.
    pub fn zero() -> Self {
        NumericalPolynomial { coeffs: Vec::new() }
    }

    /// A constant polynomial.
    pub fn constant(c: BigRational) -> Self {
        let mut p = NumericalPolynomial { coeffs: vec![c] };
        p.trim();
        p
    }

    /// A constant polynomial from an integer.
    pub fn constant_int(c: i64) -> Self {
        Self::constant(BigRational::from(BigInt::from(c)))
    }

    /// Builds a polynomial from binomial-basis coefficients.
    pub fn from_binomial_coeffs(coeffs: Vec<BigRational>) -> Self {
        let mut p = NumericalPolynomial { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Binomial-basis coefficients `c_0..c_d`.
    pub fn binomial_coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// True when the polynomial takes integer values at every integer,
    /// i.e. when every binomial-basis coefficient is an integer.
    pub fn is_numerical(&self) -> bool {
        self.coeffs.iter().all(BigRational::is_integer)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = BigRational::zero();
        let coeffs = (0..n)
            .map(|k| {
                self.coeffs.get(k).unwrap_or(&zero) + other.coeffs.get(k).unwrap_or(&zero)
            })
            .collect();
        Self::from_binomial_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = BigRational::zero();
        let coeffs = (0..n)
            .map(|k| {
                self.coeffs.get(k).unwrap_or(&zero) - other.coeffs.get(k).unwrap_or(&zero)
            })
            .collect();
        Self::from_binomial_coeffs(coeffs)
    }

    /// The substitution `t -> t - s`, so `shift(p, s)(t) = p(t - s)`.
    pub fn shift(&self, s: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let d = self.coeffs.len() - 1;
        let values: Vec<BigRational> = (0..=d as i64).map(|j| self.eval(j - s)).collect();
        newton_from_values(&values)
    }

    /// Exact value `p(t0)`.
    pub fn eval(&self, t0: i64) -> BigRational {
        let mut acc = BigRational::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            acc += c * BigRational::from(integer_binomial(t0, k as i64));
        }
        acc
    }

    /// Degree and leading coefficient in the power basis.
    pub fn leading(&self) -> Result<(usize, BigRational)> {
        match self.coeffs.last() {
            None => Err(Error::ZeroPolynomial),
            Some(c) => {
                let d = self.coeffs.len() - 1;
                Ok((d, c / BigRational::from(factorial(d))))
            }
        }
    }

    /// Coefficients `a_0..a_d` with `p(t) = sum a_k t^k`.
    pub fn power_coeffs(&self) -> Vec<BigRational> {
        let mut acc = vec![BigRational::zero(); self.coeffs.len()];
        // basis holds the power-basis expansion of C(t, k), built incrementally:
        // C(t, k) = C(t, k-1) * (t - k + 1) / k
        let mut basis = vec![BigRational::one()];
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                let shift = BigRational::from(BigInt::from(k as i64 - 1));
                let scale = BigRational::from(BigInt::from(k as i64));
                let mut next = vec![BigRational::zero(); basis.len() + 1];
                for (i, b) in basis.iter().enumerate() {
                    next[i + 1] += b / &scale;
                    next[i] -= b * &shift / &scale;
                }
                basis = next;
            }
            for (i, b) in basis.iter().enumerate() {
                acc[i] += c * b;
            }
        }
        while acc.last().is_some_and(Zero::is_zero) {
            acc.pop();
        }
        acc
    }

    /// Builds a polynomial from power-basis coefficients `a_0..a_d`.
    pub fn from_power_coeffs(power: &[BigRational]) -> Self {
        if power.iter().all(Zero::is_zero) {
            return Self::zero();
        }
        let d = power.len() - 1;
        let values: Vec<BigRational> = (0..=d as i64)
            .map(|t| {
                let mut v = BigRational::zero();
                for a in power.iter().rev() {
                    v = v * BigRational::from(BigInt::from(t)) + a;
                }
                v
            })
            .collect();
        newton_from_values(&values)
    }

    /// Parses the CLI polynomial grammar: a sum of terms `R`, `R*t`, `R*t^K`
    /// (the `*` optional), with `R` an optionally signed integer or `a/b`
    /// rational, parentheses allowed around a rational, whitespace ignored.
    pub fn parse(input: &str) -> Result<Self> {
        let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut terms: Vec<String> = Vec::new();
        let mut current = String::new();
        let mut depth = 0usize;
        for (i, ch) in compact.chars().enumerate() {
            match ch {
                '(' => depth += 1,
                ')' => {
                    depth = depth
                        .checked_sub(1)
                        .ok_or_else(|| Error::Parse("unbalanced parentheses".into()))?
                }
                '+' | '-' if depth == 0 && i > 0 => {
                    terms.push(std::mem::take(&mut current));
                }
                _ => {}
            }
            current.push(ch);
        }
        if depth != 0 {
            return Err(Error::Parse("unbalanced parentheses".into()));
        }
        terms.push(current);

        let mut power = Vec::new();
        for term in &terms {
            let (k, coeff) = parse_term(term)?;
            if power.len() <= k {
                power.resize(k + 1, BigRational::zero());
            }
            power[k] += coeff;
        }
        Ok(Self::from_power_coeffs(&power))
    }
}

/// Newton forward differences: the unique polynomial with the given values at
/// `t = 0, 1, ..., d`, expressed in the binomial basis.
fn newton_from_values(values: &[BigRational]) -> NumericalPolynomial {
    let mut diffs = values.to_vec();
    let mut coeffs = Vec::with_capacity(values.len());
    for k in 0..values.len() {
        coeffs.push(diffs[0].clone());
        for i in 0..values.len() - k - 1 {
            diffs[i] = &diffs[i + 1] - &diffs[i];
        }
    }
    NumericalPolynomial::from_binomial_coeffs(coeffs)
}

/// The polynomial `C(t + a, b)`; the zero polynomial when `b < 0`.
pub fn binom_poly(a: i64, b: i64) -> NumericalPolynomial {
    if b < 0 {
        return NumericalPolynomial::zero();
    }
    // Vandermonde: C(t + a, b) = sum_k C(a, b - k) C(t, k)
    let coeffs = (0..=b)
        .map(|k| BigRational::from(integer_binomial(a, b - k)))
        .collect();
    NumericalPolynomial::from_binomial_coeffs(coeffs)
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    let (numer, denom) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let numer: BigInt = numer.parse().map_err(|_| bad())?;
    let denom: BigInt = match denom {
        Some(d) => d.parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(numer, denom))
}

/// Parses one term of the polynomial grammar; returns `(power, coefficient)`.
fn parse_term(term: &str) -> Result<(usize, BigRational)> {
    let bad = || Error::Parse(format!("invalid term `{term}`"));
    let mut rest = term;
    let mut sign = BigRational::one();
    if let Some(r) = rest.strip_prefix('+') {
        rest = r;
    } else if let Some(r) = rest.strip_prefix('-') {
        sign = -sign;
        rest = r;
    }

    let mut coeff = BigRational::one();
    let mut saw_coeff = false;
    if let Some(r) = rest.strip_prefix('(') {
        let close = r.find(')').ok_or_else(bad)?;
        coeff = parse_rational(&r[..close])?;
        saw_coeff = true;
        rest = &r[close + 1..];
    } else if rest.starts_with(|c: char| c.is_ascii_digit()) {
        let end = rest
            .find(|c: char| !(c.is_ascii_digit() || c == '/'))
            .unwrap_or(rest.len());
        coeff = parse_rational(&rest[..end])?;
        saw_coeff = true;
        rest = &rest[end..];
    }
    rest = rest.strip_prefix('*').unwrap_or(rest);

    let power = if rest.is_empty() {
        if !saw_coeff {
            return Err(bad());
        }
        0
    } else if let Some(r) = rest.strip_prefix('t') {
        if r.is_empty() {
            1
        } else if let Some(k) = r.strip_prefix('^') {
            k.parse::<usize>().map_err(|_| bad())?
        } else {
            return Err(bad());
        }
    } else {
        return Err(bad());
    };
    Ok((power, sign * coeff))
}

fn format_coefficient(c: &BigRational, with_variable: bool) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else if with_variable {
        format!("({}/{})", c.numer(), c.denom())
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl std::fmt::Display for NumericalPolynomial {
    /// Prints in the power basis, matching the grammar accepted by [`parse`]:
    /// e.g. `2t+2`, `(1/2)t^2+(3/2)t+1`, `0`.
    ///
    /// [`parse`]: NumericalPolynomial::parse
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let power = self.power_coeffs();
        if power.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in power.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            match k {
                0 => write!(f, "{}", format_coefficient(&mag, false))?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{}", format_coefficient(&mag, true))?;
                    }
                    if k == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
