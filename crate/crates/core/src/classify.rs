//! The smoothness classification of `Hilb^p(P^m)`.
//!
//! A nonempty Hilbert scheme is smooth exactly when its partition matches one
//! of seven patterns; everything else is singular, usually certified by an
//! explicit monomial witness ideal. This module also carries the dimension
//! formula for the lexicographic component and for the parameter space of
//! residual flags.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lex::{four_points_ideal, nearly_lex_ideal};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::numpoly::integer_binomial;
use crate::partitions::{Partition, ResidualType};

/// Outcome of the classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// No closed subscheme of `P^m` has this Hilbert polynomial.
    Empty,
    /// Smooth; the payload is the smallest matching condition index in 1..=7.
    Smooth(u8),
    Singular,
}

impl Verdict {
    pub fn is_smooth(&self) -> bool {
        matches!(self, Verdict::Smooth(_))
    }
}

/// Whether a singular verdict comes with an explicit witness ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessStatus {
    /// Smooth or empty verdicts need no witness.
    NotNeeded,
    Provided,
    /// Singular, but outside the families with an explicit construction.
    NotConstructedByPaper,
}

/// Full classification record for one `(m, λ)` input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub ambient: u32,
    pub partition: Partition,
    pub verdict: Verdict,
    /// Dimension of the lexicographic component, when defined.
    pub lex_component_dim: Option<BigInt>,
    /// Short geometric description of a general parametrized subscheme.
    pub description: String,
    pub witness: Option<MonomialIdeal>,
    pub witness_status: WitnessStatus,
}

fn all_equal(parts: &[u32], value: u32) -> bool {
    parts.iter().all(|&p| p == value)
}

/// Literal pattern predicate for one of the seven smoothness conditions.
fn matches_condition(condition: u8, m: u32, parts: &[u32]) -> bool {
    let r = parts.len();
    match condition {
        // the projective plane
        1 => m == 2,
        // smallest part at least 2
        2 => r >= 1 && parts[0] <= m && parts[r - 1] >= 2,
        // λ = (1) or (m^{r-2}, λ_{r-1}, 1) with m ≥ λ_{r-1} ≥ 1
        3 => {
            parts == [1]
                || (r >= 2
                    && parts[r - 1] == 1
                    && parts[r - 2] <= m
                    && all_equal(&parts[..r - 2], m))
        }
        // λ = (m^{r-s-3}, c^{s+2}, 1) with r-3 ≥ s ≥ 0 and m-1 ≥ c ≥ 3
        4 => {
            r >= 2 && parts[r - 1] == 1 && {
                let body = &parts[..r - 1];
                let c = body[body.len() - 1];
                let c_count = body.iter().filter(|&&p| p == c).count();
                (3..m).contains(&c)
                    && c_count >= 2
                    && all_equal(&body[..body.len() - c_count], m)
            }
        }
        // λ = (m^{r-s-5}, 2^{s+4}, 1) with r-5 ≥ s ≥ 0
        5 => {
            r >= 2 && parts[r - 1] == 1 && {
                let body = &parts[..r - 1];
                let c = body[body.len() - 1];
                let c_count = body.iter().filter(|&&p| p == c).count();
                c == 2 && c_count >= 4 && all_equal(&body[..body.len() - c_count], m)
            }
        }
        // λ = (m^{r-3}, 1^3) with r ≥ 3
        6 => r >= 3 && all_equal(&parts[r - 3..], 1) && all_equal(&parts[..r - 3], m),
        // the one-point Hilbert schemes
        7 => r == 0 || (r == 1 && parts[0] == m + 1),
        _ => false,
    }
}

/// The smallest matching condition index, or `None` when the partition
/// matches none of the seven smoothness patterns. Assumes the emptiness rule
/// has already been applied.
fn smooth_condition(m: u32, partition: &Partition) -> Option<u8> {
    (1..=7).find(|&k| matches_condition(k, m, partition.parts()))
}

/// Classifies `Hilb^p(P^m)` for the polynomial encoded by `λ`.
pub fn classify(m: u32, partition: &Partition) -> Result<Classification> {
    if m < 1 {
        return Err(Error::InvalidAmbient { ambient: m });
    }
    let r = partition.len();
    if let Some(l1) = partition.largest() {
        if l1 > m + 1 || (l1 == m + 1 && r > 1) {
            return Ok(Classification {
                ambient: m,
                partition: partition.clone(),
                verdict: Verdict::Empty,
                lex_component_dim: None,
                description: format!(
                    "no closed subscheme of P^{m} has this Hilbert polynomial"
                ),
                witness: None,
                witness_status: WitnessStatus::NotNeeded,
            });
        }
    }

    if let Some(condition) = smooth_condition(m, partition) {
        let one_point = r == 0 || partition.largest() == Some(m + 1);
        let dim = if one_point {
            Some(BigInt::zero())
        } else {
            Some(lex_component_dim(m, partition)?)
        };
        return Ok(Classification {
            ambient: m,
            partition: partition.clone(),
            verdict: Verdict::Smooth(condition),
            lex_component_dim: dim,
            description: smooth_description(m, partition, condition),
            witness: None,
            witness_status: WitnessStatus::NotNeeded,
        });
    }

    let (witness, rationale) = witness_for(m, partition)?;
    let witness_status = if witness.is_some() {
        WitnessStatus::Provided
    } else {
        WitnessStatus::NotConstructedByPaper
    };
    Ok(Classification {
        ambient: m,
        partition: partition.clone(),
        verdict: Verdict::Singular,
        lex_component_dim: Some(lex_component_dim(m, partition)?),
        description: rationale,
        witness,
        witness_status,
    })
}

fn smooth_description(m: u32, partition: &Partition, condition: u8) -> String {
    let r = partition.len();
    match condition {
        1 => {
            if r == 0 {
                "empty subscheme (one-point Hilbert scheme)".into()
            } else if partition.largest() == Some(m + 1) {
                "the projective plane itself (one-point Hilbert scheme)".into()
            } else {
                let curves = partition.multiplicity(2);
                let points = partition.multiplicity(1);
                let points_text = |b: usize| {
                    if b == 1 { "1 isolated point".to_string() } else { format!("{b} isolated points") }
                };
                match (curves, points) {
                    (0, b) => format!("{} in the plane", points_text(b)),
                    (a, 0) => format!("plane curve of degree {a}"),
                    (a, b) => format!("plane curve of degree {a} ∪ {}", points_text(b)),
                }
            }
        }
        2 | 3 => {
            let rt = partition.residual_type().expect("nonempty partition");
            format!("residual flags of type ({rt})")
        }
        4 | 5 => {
            let body = Partition::new(partition.parts()[..r - 1].to_vec()).expect("sorted");
            let rt = body.residual_type().expect("nonempty body");
            format!("disjoint union of a residual flag of type ({rt}) and a point")
        }
        6 => {
            let degree = r - 3;
            if degree == 0 {
                "3 isolated points".into()
            } else {
                format!("hypersurface of degree {degree} ∪ 3 isolated points")
            }
        }
        _ => {
            if r == 0 {
                "empty subscheme (one-point Hilbert scheme)".into()
            } else {
                "the ambient space itself (one-point Hilbert scheme)".into()
            }
        }
    }
}

/// The witness dispatch behind [`singular_witness`]; assumes the verdict is
/// already known to be singular.
fn witness_for(m: u32, partition: &Partition) -> Result<(Option<MonomialIdeal>, String)> {
    let (hypersurface_degree, rest) = partition.split_hypersurface(m);
    let parts = rest.parts();
    let r = parts.len();
    debug_assert!(r >= 1 && parts[r - 1] == 1 && m >= 3);

    let mut distinct_values: Vec<u32> = parts.to_vec();
    distinct_values.dedup();

    let core: Option<(MonomialIdeal, String)> = if all_equal(parts, 1) {
        // λ = (1^k), k ≥ 4: the points family
        let s = r as u32 - 4;
        Some((
            four_points_ideal(m, s)?,
            format!("singular at the points-family ideal B({s})"),
        ))
    } else if parts == [2, 2, 1] || parts == [2, 2, 2, 1] {
        // the two-component Hilbert schemes of 2t+2 and 3t+1
        let body = Partition::new(parts[..r - 1].to_vec()).expect("sorted");
        Some((
            nearly_lex_ideal(&body, m)?,
            "singular at the nearly-lexicographic point where the two irreducible components meet"
                .into(),
        ))
    } else if distinct_values.len() >= 3 {
        let body = Partition::new(parts[..r - 1].to_vec()).expect("sorted");
        Some((
            nearly_lex_ideal(&body, m)?,
            format!("singular at the nearly-lexicographic ideal L(({body})) ∩ J"),
        ))
    } else {
        None
    };

    match core {
        Some((ideal, mut rationale)) => {
            let ideal = if hypersurface_degree > 0 {
                rationale.push_str(&format!(
                    ", multiplied by the degree-{hypersurface_degree} hypersurface factor x0^{hypersurface_degree}"
                ));
                let mut exps = vec![0u32; ideal.nvars()];
                exps[0] = hypersurface_degree as u32;
                let factor = Monomial::new(exps);
                let gens = ideal.gens().iter().map(|g| g.mul(&factor)).collect();
                MonomialIdeal::new(ideal.nvars(), gens)?
            } else {
                ideal
            };
            Ok((Some(ideal), rationale))
        }
        None => Ok((
            None,
            "singular, but the partition reduces to the shape (c^a, 1^b) with b ≥ 2, for which \
             no explicit witness ideal is constructed"
                .into(),
        )),
    }
}

/// A saturated monomial ideal whose point is singular on `Hilb^p(P^m)`, or
/// `None` with a rationale when no explicit construction applies. Errors with
/// [`Error::NotSingular`] unless `classify(m, λ)` is singular.
pub fn singular_witness(m: u32, partition: &Partition) -> Result<(Option<MonomialIdeal>, String)> {
    if m < 1 {
        return Err(Error::InvalidAmbient { ambient: m });
    }
    let r = partition.len();
    let empty = partition
        .largest()
        .is_some_and(|l1| l1 > m + 1 || (l1 == m + 1 && r > 1));
    if empty || smooth_condition(m, partition).is_some() {
        return Err(Error::NotSingular);
    }
    witness_for(m, partition)
}

fn binom(n: u32, k: u32) -> BigInt {
    integer_binomial(n as i64, k as i64)
}

/// Dimension of the parameter space of residual flags of type `(n, d)`
/// inside `P^{n0}`.
///
/// For `d_e > 1` this is
/// `sum_i [C(n_i + d_i, d_i) - 1 + (n_i + 1)(n_{i-1} - n_i)]` with
/// `n_0 := n0`; for `d_e = 1` the correction `-(n_{e-1} - n_e)` is applied.
pub fn res_space_dim(n0: u32, rt: &ResidualType) -> Result<BigInt> {
    let pairs = rt.pairs();
    let e = pairs.len();
    if e == 0 {
        return Err(Error::ParameterOutOfRange("empty residual type".into()));
    }
    if n0 < pairs[0].0 {
        return Err(Error::ParameterOutOfRange(format!(
            "need n0 >= n_1, got n0={n0}, n_1={}",
            pairs[0].0
        )));
    }
    let mut total = BigInt::zero();
    let mut prev = n0;
    for &(n, d) in pairs {
        total += binom(n + d, d) - 1 + BigInt::from((n + 1) * (prev - n));
        prev = n;
    }
    if pairs[e - 1].1 == 1 {
        let above = if e == 1 { n0 } else { pairs[e - 2].0 };
        total -= BigInt::from(above - pairs[e - 1].0);
    }
    Ok(total)
}

/// Dimension of the lexicographic component of `Hilb^p(P^m)` determined by
/// `L(λ)`, by the five-case formula in the residual type `(n_i, d_i)` of `λ`
/// with `n_0 := m`.
pub fn lex_component_dim(m: u32, partition: &Partition) -> Result<BigInt> {
    let largest = partition.largest().ok_or(Error::EmptyPartition)?;
    if largest > m {
        return Err(Error::PartitionTooLarge { part: largest, ambient: m });
    }
    let rt = partition.residual_type()?;
    let pairs = rt.pairs();
    let e = pairs.len();
    let (n_e, d_e) = pairs[e - 1];

    let block_sum = |upto: usize| -> BigInt {
        let mut total = BigInt::zero();
        let mut prev = m;
        for &(n, d) in &pairs[..upto] {
            total += binom(n + d, d) - 1 + BigInt::from((n + 1) * (prev - n));
            prev = n;
        }
        total
    };

    if n_e > 1 {
        let full = block_sum(e);
        if d_e > 1 {
            Ok(full)
        } else {
            let above = if e == 1 { m } else { pairs[e - 2].0 };
            Ok(full - BigInt::from(above - n_e))
        }
    } else if e == 1 {
        Ok(BigInt::from(m) * BigInt::from(d_e))
    } else {
        let partial = block_sum(e - 1) + BigInt::from(m) * BigInt::from(d_e);
        let (n_prev, d_prev) = pairs[e - 2];
        if d_prev > 1 {
            Ok(partial)
        } else {
            let above = if e == 2 { m } else { pairs[e - 3].0 };
            Ok(partial - BigInt::from(above - n_prev))
        }
    }
}

/// The two column counts from the tangent-space estimate at the witness of
/// [`crate::lex::lsing_witness`]: the number `N` of exhibited linearly
/// independent tangent directions and the upper bound for the lexicographic
/// component dimension. Their difference is always `n - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LsingCounts {
    pub independent_columns: BigInt,
    pub lex_bound: BigInt,
}

pub fn lsing_counts(m: u32, n: u32, r: u32, s: u32) -> Result<LsingCounts> {
    if !(n >= 2 && m >= n + 2) {
        return Err(Error::ParameterOutOfRange(format!(
            "need m - 2 >= n >= 2, got m={m}, n={n}"
        )));
    }
    if r < s + 2 {
        return Err(Error::ParameterOutOfRange(format!(
            "need r - 2 >= s >= 0, got r={r}, s={s}"
        )));
    }
    let first = binom(m + r - s - 2, r - s - 1);
    let second = binom(m - n + s + 1, s + 1);
    let cross = BigInt::from((m - n + 1) * (n - 1));
    let independent_columns = BigInt::from(m - 1) + &first - 1
        + BigInt::from(m + n)
        + &cross
        + &second
        - 1;
    let lex_bound = first + second + cross + BigInt::from(2 * m) - 2;
    Ok(LsingCounts { independent_columns, lex_bound })
}
