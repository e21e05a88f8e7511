//! Monomials and monomial ideals in `R = k[x_0, ..., x_m]`.
//!
//! This is the deliberately naive kernel the rest of the crate is checked
//! against: membership, minimal generators, sum, intersection, colon,
//! saturation, strong stability, standard monomials and Hilbert functions by
//! direct enumeration, and the Hilbert polynomial by exact interpolation.
//! Ideals are kept in canonical form (divisibility-minimal generators sorted
//! in descending lexicographic order), so structural equality is ideal
//! equality.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::numpoly::NumericalPolynomial;

/// Bounds on parsed input keeping degrees inside `u32` arithmetic.
const MAX_EXPONENT: u32 = 1_000_000;
const MAX_PARSED_VARS: usize = 256;

/// An exponent vector; index `i` belongs to the variable `x_i`. `x_0` is the
/// largest variable in the lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The monomial 1.
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars] }
    }

    /// The variable `x_i`.
    pub fn variable(i: usize, nvars: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect();
        Monomial { exps }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect();
        Monomial { exps }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        Monomial { exps }
    }

    /// Exact quotient; `other` must divide `self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect();
        Monomial { exps }
    }

    /// Parses the product form `x0^2*x3`, or `1` for the unit monomial.
    pub fn parse_product(input: &str, nvars: usize) -> Result<Self> {
        let trimmed = input.trim();
        if trimmed == "1" {
            return Ok(Self::one(nvars));
        }
        let mut exps = vec![0u32; nvars];
        for factor in trimmed.split('*') {
            let factor = factor.trim();
            let rest = factor
                .strip_prefix('x')
                .ok_or_else(|| Error::Parse(format!("invalid factor `{factor}`")))?;
            let (idx, exp) = match rest.split_once('^') {
                Some((i, e)) => (i, e),
                None => (rest, "1"),
            };
            let idx: usize = idx
                .parse()
                .map_err(|_| Error::Parse(format!("invalid variable index in `{factor}`")))?;
            let exp: u32 = exp
                .parse()
                .ok()
                .filter(|&e| e <= MAX_EXPONENT)
                .ok_or_else(|| Error::Parse(format!("invalid exponent in `{factor}`")))?;
            if idx >= nvars {
                return Err(Error::IndexOutOfRange { index: idx, nvars });
            }
            exps[idx] = exps[idx]
                .checked_add(exp)
                .filter(|&e| e <= MAX_EXPONENT)
                .ok_or_else(|| Error::Parse(format!("exponent overflow in `{trimmed}`")))?;
        }
        Ok(Monomial { exps })
    }
}

impl std::fmt::Display for Monomial {
    /// Product form, e.g. `x0^2*x3`; the unit monomial prints as `1`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
            first = false;
        }
        Ok(())
    }
}

/// A monomial ideal in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

/// Divisibility-minimal, canonically sorted generators for the ideal the
/// given monomials generate.
pub fn minimalize(gens: Vec<Monomial>, nvars: usize) -> Result<MonomialIdeal> {
    MonomialIdeal::new(nvars, gens)
}

impl MonomialIdeal {
    /// The zero ideal (no generators).
    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: Vec::new() }
    }

    /// The unit ideal, generated by 1.
    pub fn unit(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: vec![Monomial::one(nvars)] }
    }

    /// Minimalizes and sorts the generators into canonical form.
    pub fn new(nvars: usize, gens: Vec<Monomial>) -> Result<Self> {
        for g in &gens {
            if g.nvars() != nvars {
                return Err(Error::LengthMismatch { expected: nvars, found: g.nvars() });
            }
        }
        let mut minimal: Vec<Monomial> = Vec::new();
        for g in gens {
            if minimal.iter().any(|h| h.divides(&g)) {
                continue;
            }
            minimal.retain(|h| !g.divides(h));
            minimal.push(g);
        }
        // descending lex: the first nonzero entry of the difference is positive
        minimal.sort_by(|a, b| b.cmp(a));
        Ok(MonomialIdeal { nvars, gens: minimal })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    fn check_len(&self, m: &Monomial) -> Result<()> {
        if m.nvars() != self.nvars {
            return Err(Error::LengthMismatch { expected: self.nvars, found: m.nvars() });
        }
        Ok(())
    }

    fn check_compatible(&self, other: &MonomialIdeal) -> Result<()> {
        if other.nvars != self.nvars {
            return Err(Error::LengthMismatch { expected: self.nvars, found: other.nvars });
        }
        Ok(())
    }

    /// Membership: some generator divides the monomial.
    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        self.check_len(m)?;
        Ok(self.gens.iter().any(|g| g.divides(m)))
    }

    /// The sum `I + J`.
    pub fn add(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_compatible(other)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        MonomialIdeal::new(self.nvars, gens)
    }

    /// The intersection `I ∩ J`, generated by pairwise lcms.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_compatible(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                gens.push(g.lcm(h));
            }
        }
        MonomialIdeal::new(self.nvars, gens)
    }

    /// The colon ideal `(I : μ)`, generated by `g / gcd(g, μ)`.
    pub fn colon(&self, m: &Monomial) -> Result<MonomialIdeal> {
        self.check_len(m)?;
        let gens = self.gens.iter().map(|g| g.div(&g.gcd(m))).collect();
        MonomialIdeal::new(self.nvars, gens)
    }

    /// The colon ideal `(I : J)`, the intersection of `(I : μ)` over the
    /// generators `μ` of `J`. For the zero ideal `J` this is the unit ideal.
    pub fn colon_ideal(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_compatible(other)?;
        let mut acc = MonomialIdeal::unit(self.nvars);
        for m in &other.gens {
            acc = acc.intersect(&self.colon(m)?)?;
        }
        Ok(acc)
    }

    /// The saturation `(I : x_v^∞)`: colon by `x_v` until stable.
    pub fn saturate(&self, v: usize) -> Result<MonomialIdeal> {
        if v >= self.nvars {
            return Err(Error::IndexOutOfRange { index: v, nvars: self.nvars });
        }
        let xv = Monomial::variable(v, self.nvars);
        let mut current = self.clone();
        loop {
            let next = current.colon(&xv)?;
            if next == current {
                return Ok(next);
            }
            current = next;
        }
    }

    /// Strong stability: for every generator `g`, every `x_j` dividing `g`
    /// and every `i < j`, the exchange `x_i * g / x_j` stays in the ideal.
    /// This is the characteristic-zero form of Borel-fixedness.
    pub fn is_strongly_stable(&self) -> bool {
        for g in &self.gens {
            for j in 0..self.nvars {
                if g.exponent(j) == 0 {
                    continue;
                }
                for i in 0..j {
                    let mut exps = g.exponents().to_vec();
                    exps[j] -= 1;
                    exps[i] += 1;
                    let swapped = Monomial::new(exps);
                    if !self.contains(&swapped).expect("same nvars") {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Walks all degree-`j` monomials outside the ideal in descending
    /// lexicographic order.
    fn walk_standard(&self, j: u32, visit: &mut dyn FnMut(&[u32])) {
        let mut exps = vec![0u32; self.nvars];
        self.walk_rec(j, 0, &mut exps, visit);
    }

    fn walk_rec(&self, remaining: u32, var: usize, exps: &mut Vec<u32>, visit: &mut dyn FnMut(&[u32])) {
        if var + 1 == self.nvars {
            exps[var] = remaining;
            if !self.divides_prefix(exps, var) {
                visit(exps);
            }
            exps[var] = 0;
            return;
        }
        // larger exponent on the earlier variable first: descending lex
        for e in (0..=remaining).rev() {
            exps[var] = e;
            if self.divides_prefix(exps, var) {
                exps[var] = 0;
                continue; // every extension is already in the ideal
            }
            self.walk_rec(remaining - e, var + 1, exps, visit);
            exps[var] = 0;
        }
    }

    /// True when some generator supported on `x_0..x_var` divides the partial
    /// exponent vector.
    fn divides_prefix(&self, exps: &[u32], var: usize) -> bool {
        'outer: for g in &self.gens {
            for (i, &e) in exps.iter().enumerate() {
                let ge = g.exponent(i);
                if i <= var {
                    if ge > e {
                        continue 'outer;
                    }
                } else if ge > 0 {
                    continue 'outer;
                }
            }
            return true;
        }
        false
    }

    /// All degree-`j` monomials not in the ideal, in descending lex order.
    pub fn standard_monomials(&self, j: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        self.walk_standard(j, &mut |exps| out.push(Monomial::new(exps.to_vec())));
        out
    }

    /// The Hilbert function `h_{R/I}(j)`, zero for negative `j`.
    pub fn hilbert_function(&self, j: i64) -> usize {
        if j < 0 {
            return 0;
        }
        let mut count = 0usize;
        self.walk_standard(j as u32, &mut |_| count += 1);
        count
    }

    /// Interpolates the Hilbert polynomial from the Hilbert function at
    /// degrees `hint ..= hint + m + 1` and validates it at two further
    /// degrees. Fails with [`Error::NotYetPolynomial`] when the hint is below
    /// the regularity, in which case the caller should retry with a larger
    /// hint (the Gotzmann bound of the expected partition always suffices for
    /// saturated ideals).
    pub fn hilbert_polynomial(&self, reg_hint: u32) -> Result<NumericalPolynomial> {
        let m = self.nvars as i64 - 1;
        let lo = reg_hint as i64;
        let samples: Vec<i64> = (lo..=lo + m + 1).collect();
        let values: Vec<_> = samples.iter().map(|&j| self.hilbert_function(j) as i64).collect();
        // Newton forward differences based at t = lo
        let mut poly = NumericalPolynomial::zero();
        let mut diffs: Vec<i64> = values.clone();
        for k in 0..diffs.len() {
            let c = NumericalPolynomial::constant_int(diffs[0]);
            let basis = crate::numpoly::binom_poly(-lo, k as i64);
            poly = poly.add(&mul_constant(&basis, &c));
            for i in 0..diffs.len() - k - 1 {
                diffs[i] = diffs[i + 1] - diffs[i];
            }
        }
        for extra in 1..=2 {
            let j = lo + m + 1 + extra;
            let expected = num_rational::BigRational::from(num_bigint::BigInt::from(
                self.hilbert_function(j) as i64,
            ));
            if poly.eval(j) != expected {
                return Err(Error::NotYetPolynomial { hint: reg_hint });
            }
        }
        Ok(poly)
    }

    /// Parses the ideal file format. Line 1 is `vars N`; every further
    /// non-empty line not starting with `#` is either `N` space-separated
    /// exponents or a product form like `x0^2*x3`. Generators are
    /// minimalized on load.
    pub fn parse(input: &str) -> Result<Self> {
        let mut lines = input
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| Error::Parse("empty ideal file".into()))?;
        let nvars: usize = header
            .strip_prefix("vars")
            .map(str::trim)
            .and_then(|n| n.parse().ok())
            .filter(|&n| n > 0 && n <= MAX_PARSED_VARS)
            .ok_or_else(|| Error::Parse(format!("expected `vars N` header, got `{header}`")))?;
        let mut gens = Vec::new();
        for line in lines {
            if line.starts_with(|c: char| c.is_ascii_digit()) && line != "1" {
                let exps = line
                    .split_whitespace()
                    .map(|tok| {
                        tok.parse::<u32>()
                            .ok()
                            .filter(|&e| e <= MAX_EXPONENT)
                            .ok_or_else(|| Error::Parse(format!("invalid exponent `{tok}`")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                if exps.len() != nvars {
                    return Err(Error::LengthMismatch { expected: nvars, found: exps.len() });
                }
                gens.push(Monomial::new(exps));
            } else {
                gens.push(Monomial::parse_product(line, nvars)?);
            }
        }
        MonomialIdeal::new(nvars, gens)
    }

    /// Generators joined by `, `, e.g. `x0, x1^3, x1^2*x2`.
    pub fn generators_string(&self) -> String {
        self.gens.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
    }
}

impl std::fmt::Display for MonomialIdeal {
    /// The ideal file format: `vars N` followed by one generator per line in
    /// product form.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "vars {}", self.nvars)?;
        for g in &self.gens {
            writeln!(f, "{g}")?;
        }
        Ok(())
    }
}

fn mul_constant(p: &NumericalPolynomial, c: &NumericalPolynomial) -> NumericalPolynomial {
    // c is constant; scale every binomial coefficient of p
    let factor = c.binomial_coeffs().first().cloned().unwrap_or_else(num_traits::Zero::zero);
    NumericalPolynomial::from_binomial_coeffs(
        p.binomial_coeffs().iter().map(|b| b * &factor).collect(),
    )
}

/// A degree slice of the standard-monomial basis together with its position
/// index.
pub(crate) type IndexedBasis = (Vec<Monomial>, HashMap<Monomial, usize>);

/// Cached standard-monomial bases per degree, used by the tangent engine.
#[derive(Default)]
pub(crate) struct StandardBasis {
    by_degree: HashMap<u32, IndexedBasis>,
}

impl StandardBasis {
    pub(crate) fn basis<'a>(
        &'a mut self,
        ideal: &MonomialIdeal,
        degree: u32,
    ) -> &'a IndexedBasis {
        self.by_degree.entry(degree).or_insert_with(|| {
            let list = ideal.standard_monomials(degree);
            let index = list.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
            (list, index)
        })
    }
}
