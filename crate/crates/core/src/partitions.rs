//! Integer partitions, residual types and the encoding of Hilbert
//! polynomials.
//!
//! Every nonempty Hilbert scheme in `P^m` corresponds to an integer partition
//! `λ = (λ_1 ≥ ... ≥ λ_r ≥ 1)` through
//! `p(t) = sum_{i=1}^r C(t + λ_i - i, λ_i - 1)`, a reformulation of the
//! Gotzmann decomposition. The grouped form of a partition, pairs
//! `(n_i, d_i)` with `n_1 > n_2 > ... > n_e ≥ 1`, is the type of the residual
//! flag carved out by the associated lexicographic ideal.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::numpoly::{binom_poly, factorial, integer_binomial, NumericalPolynomial};

/// Hard cap on the number of parts produced when decoding a polynomial, to
/// keep pathological CLI inputs (e.g. the constant 10^12) from exhausting
/// memory.
const MAX_DECODED_PARTS: usize = 1 << 22;

/// Hard cap on a single part; a part of size k costs k coefficients in the
/// Hilbert polynomial, so this bounds allocations.
const MAX_PART: u32 = 1_000_000;

/// A weakly decreasing sequence of positive integers; possibly empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::Parse(format!(
                    "parts must be weakly decreasing, got {} before {}",
                    w[0], w[1]
                )));
            }
        }
        if parts.contains(&0) {
            return Err(Error::Parse("parts must be positive".into()));
        }
        if parts.first().is_some_and(|&p| p > MAX_PART) {
            return Err(Error::Parse(format!("parts larger than {MAX_PART} are not supported")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The length `r`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The largest part, or `None` for the empty partition.
    pub fn largest(&self) -> Option<u32> {
        self.parts.first().copied()
    }

    /// The multiplicity `a_j`: how many parts equal `j`.
    pub fn multiplicity(&self, j: u32) -> usize {
        self.parts.iter().filter(|&&p| p == j).count()
    }

    /// Parses the comma-separated CLI syntax, e.g. `3,3,2,1`. The empty
    /// string denotes the empty partition.
    pub fn parse(input: &str) -> Result<Self> {
        let trimmed = input.trim();
        if trimmed.is_empty() {
            return Ok(Self::empty());
        }
        let parts = trimmed
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("invalid part `{}`", tok.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }

    /// Groups equal parts into the residual type `(n_1, d_1), ...`.
    pub fn residual_type(&self) -> Result<ResidualType> {
        if self.is_empty() {
            return Err(Error::EmptyPartition);
        }
        let mut pairs: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match pairs.last_mut() {
                Some((n, d)) if *n == p => *d += 1,
                _ => pairs.push((p, 1)),
            }
        }
        ResidualType::new(pairs)
    }

    /// The Hilbert polynomial `p(t) = sum_i C(t + λ_i - i, λ_i - 1)`.
    pub fn hilbert_polynomial(&self) -> NumericalPolynomial {
        let mut p = NumericalPolynomial::zero();
        for (i, &part) in self.parts.iter().enumerate() {
            let i = i as i64 + 1;
            p = p.add(&binom_poly(part as i64 - i, part as i64 - 1));
        }
        p
    }

    /// Dimension, degree, arithmetic genus and Gotzmann bound of the
    /// subschemes with this Hilbert polynomial.
    pub fn invariants(&self) -> Result<PartitionInvariants> {
        let first = self.largest().ok_or(Error::EmptyPartition)?;
        let mut genus = BigInt::zero();
        for (i, &part) in self.parts.iter().enumerate().skip(1) {
            let i = i as i64 + 1;
            genus += integer_binomial(part as i64 - i, part as i64 - 1);
        }
        if (first - 1) % 2 == 1 {
            genus = -genus;
        }
        Ok(PartitionInvariants {
            dimension: first - 1,
            degree: self.multiplicity(first),
            genus,
            gotzmann_bound: self.len(),
        })
    }

    /// Splits off the parts equal to `m` (the hypersurface factor): returns
    /// their count `s` and the partition of the remaining parts.
    pub fn split_hypersurface(&self, m: u32) -> (usize, Partition) {
        let s = self.multiplicity(m);
        let rest = self.parts.iter().copied().filter(|&p| p != m).collect();
        (s, Partition { parts: rest })
    }

    /// Appends one part equal to 1; the Hilbert polynomial grows by the
    /// constant 1.
    pub fn union_one(&self) -> Partition {
        let mut parts = self.parts.clone();
        parts.push(1);
        Partition { parts }
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

/// Numerical invariants read off a partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionInvariants {
    /// `λ_1 - 1`, the dimension of the parametrized subschemes.
    pub dimension: u32,
    /// Number of parts equal to `λ_1`, the degree.
    pub degree: usize,
    /// `(-1)^(λ_1 - 1) * sum_{i≥2} C(λ_i - i, λ_i - 1)`, the arithmetic genus.
    pub genus: BigInt,
    /// The length `r`, an upper bound on Castelnuovo–Mumford regularity.
    pub gotzmann_bound: usize,
}

/// The grouped form of a partition: pairs `(n_i, d_i)` with strictly
/// decreasing positive `n_i` and positive `d_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ResidualType {
    pairs: Vec<(u32, u32)>,
}

impl ResidualType {
    pub fn new(pairs: Vec<(u32, u32)>) -> Result<Self> {
        for w in pairs.windows(2) {
            if w[0].0 <= w[1].0 {
                return Err(Error::Parse(format!(
                    "plane dimensions must strictly decrease, got {} before {}",
                    w[0].0, w[1].0
                )));
            }
        }
        if pairs.iter().any(|&(n, d)| n == 0 || d == 0) {
            return Err(Error::Parse("residual type entries must be positive".into()));
        }
        if pairs.iter().any(|&(n, d)| n > MAX_PART || d > MAX_PART) {
            return Err(Error::Parse(format!("entries larger than {MAX_PART} are not supported")));
        }
        Ok(ResidualType { pairs })
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    /// The number of steps `e`.
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Concatenates `d_i` copies of `n_i`; inverse of
    /// [`Partition::residual_type`].
    pub fn partition(&self) -> Partition {
        let mut parts = Vec::new();
        for &(n, d) in &self.pairs {
            parts.resize(parts.len() + d as usize, n);
        }
        Partition { parts }
    }

    /// Parses the CLI syntax `3:2,2:4` meaning `(n=3,d=2),(n=2,d=4)`.
    pub fn parse(input: &str) -> Result<Self> {
        let trimmed = input.trim();
        if trimmed.is_empty() {
            return Err(Error::Parse("empty residual type".into()));
        }
        let pairs = trimmed
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                let (n, d) = tok
                    .split_once(':')
                    .ok_or_else(|| Error::Parse(format!("expected n:d, got `{tok}`")))?;
                let n = n
                    .trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("invalid plane dimension `{n}`")))?;
                let d = d
                    .trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("invalid degree `{d}`")))?;
                Ok((n, d))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(pairs)
    }
}

impl std::fmt::Display for ResidualType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (n, d) in &self.pairs {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{n}:{d}")?;
            first = false;
        }
        Ok(())
    }
}

/// All partitions with parts at most `max_part` and length at most
/// `max_len`, the empty partition included. Handy for exhaustive sampling of
/// nonempty Hilbert schemes at desk scale.
pub fn enumerate(max_part: u32, max_len: usize) -> Vec<Partition> {
    let mut out = vec![Partition::empty()];
    let mut stack: Vec<Vec<u32>> = (1..=max_part).map(|p| vec![p]).collect();
    while let Some(parts) = stack.pop() {
        if parts.len() < max_len {
            let bound = *parts.last().unwrap();
            for next in 1..=bound {
                let mut longer = parts.clone();
                longer.push(next);
                stack.push(longer);
            }
        }
        out.push(Partition { parts });
    }
    out
}

/// Recovers the unique partition whose Hilbert polynomial is `p`, by peeling
/// leading terms.
///
/// While the remainder is nonzero with degree `c`, its power-basis leading
/// coefficient times `c!` must be a positive integer `a`; the next `a` parts
/// all equal `c + 1` and the corresponding binomial sum is subtracted. Any
/// failure (non-integer or non-positive multiplicity, broken weak decrease,
/// nonzero final remainder) means no partition exists.
pub fn partition_of_polynomial(p: &NumericalPolynomial) -> Result<Partition> {
    let mut rem = p.clone();
    let mut parts: Vec<u32> = Vec::new();
    let mut offset: i64 = 0;
    while !rem.is_zero() {
        let (c, lead) = rem.leading().expect("nonzero remainder");
        let mult = lead * BigRational::from(factorial(c));
        if !mult.is_integer() || !mult.is_positive() {
            return Err(Error::NotHilbert);
        }
        let a = mult
            .to_integer()
            .to_i64()
            .filter(|&a| a > 0 && (a as usize) <= MAX_DECODED_PARTS - parts.len())
            .ok_or(Error::NotHilbert)?;
        let part = c as u32 + 1;
        if parts.last().is_some_and(|&prev| prev < part) {
            return Err(Error::NotHilbert);
        }
        parts.resize(parts.len() + a as usize, part);
        // sum_{i=1}^{a} C(t + c + 1 - i - offset, c)
        //   = C(t + c + 1 - offset, c + 1) - C(t + c + 1 - a - offset, c + 1)
        let c = c as i64;
        let batch = binom_poly(c + 1 - offset, c + 1).sub(&binom_poly(c + 1 - a - offset, c + 1));
        rem = rem.sub(&batch);
        if rem.degree().is_some_and(|d| d as i64 >= c) {
            return Err(Error::NotHilbert);
        }
        offset += a;
    }
    Ok(Partition { parts })
}
