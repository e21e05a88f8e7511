//! Exact rank of sparse integer matrices.
//!
//! Rows are sparse `(column, coefficient)` lists. The default route is
//! fraction-free elimination over arbitrary-precision integers (cross
//! multiplication followed by a gcd normalization, so no rationals ever
//! appear); the alternative route works modulo a prime and exists purely for
//! speed comparisons. Both are deterministic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// A sparse row: strictly increasing column indices with nonzero entries.
pub type SparseRow = Vec<(usize, i64)>;

fn normalize(row: &mut [(usize, BigInt)]) {
    let mut g = BigInt::zero();
    for (_, c) in row.iter() {
        g = g.gcd(c);
    }
    if g > BigInt::zero() {
        let negate = row.first().is_some_and(|(_, c)| c.is_negative());
        for (_, c) in row.iter_mut() {
            *c = &*c / &g;
            if negate {
                *c = -&*c;
            }
        }
    }
}

/// `pivot_lead * row - row_lead * pivot`, which eliminates the shared leading
/// column without introducing denominators.
fn eliminate(
    row: &[(usize, BigInt)],
    pivot: &[(usize, BigInt)],
    row_lead: &BigInt,
    pivot_lead: &BigInt,
) -> Vec<(usize, BigInt)> {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let take_row = j >= pivot.len() || (i < row.len() && row[i].0 < pivot[j].0);
        let take_pivot = i >= row.len() || (j < pivot.len() && pivot[j].0 < row[i].0);
        let (col, value) = if take_row {
            let v = (row[i].0, pivot_lead * &row[i].1);
            i += 1;
            v
        } else if take_pivot {
            let v = (pivot[j].0, -(row_lead * &pivot[j].1));
            j += 1;
            v
        } else {
            let v = (row[i].0, pivot_lead * &row[i].1 - row_lead * &pivot[j].1);
            i += 1;
            j += 1;
            v
        };
        if !value.is_zero() {
            out.push((col, value));
        }
    }
    out
}

/// Rank over the rationals by fraction-free elimination.
pub fn rank_rational<I>(rows: I) -> usize
where
    I: IntoIterator<Item = SparseRow>,
{
    let mut pivots: std::collections::BTreeMap<usize, Vec<(usize, BigInt)>> = Default::default();
    for row in rows {
        let mut row: Vec<(usize, BigInt)> =
            row.into_iter().map(|(c, v)| (c, BigInt::from(v))).collect();
        loop {
            normalize(&mut row);
            let Some((lead_col, lead)) = row.first().cloned() else {
                break;
            };
            match pivots.get(&lead_col) {
                Some(pivot) => {
                    let pivot_lead = pivot[0].1.clone();
                    row = eliminate(&row, pivot, &lead, &pivot_lead);
                }
                None => {
                    pivots.insert(lead_col, row);
                    break;
                }
            }
        }
    }
    pivots.len()
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // p prime, a != 0 mod p: Fermat
    let mut base = a as u128 % p as u128;
    let mut exp = p - 2;
    let mut acc: u128 = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p as u128;
        }
        base = base * base % p as u128;
        exp >>= 1;
    }
    acc as u64
}

/// Rank over the prime field `F_p`.
pub fn rank_prime<I>(rows: I, p: u64) -> usize
where
    I: IntoIterator<Item = SparseRow>,
{
    assert!(p > 1, "modulus must be a prime > 1");
    let reduce = |v: i64| -> u64 { v.rem_euclid(p as i64) as u64 };
    let mut pivots: std::collections::BTreeMap<usize, Vec<(usize, u64)>> = Default::default();
    for row in rows {
        let mut row: Vec<(usize, u64)> = row
            .into_iter()
            .filter_map(|(c, v)| {
                let v = reduce(v);
                (v != 0).then_some((c, v))
            })
            .collect();
        while let Some(&(lead_col, lead)) = row.first() {
            match pivots.get(&lead_col) {
                Some(pivot) => {
                    // row -= (lead / pivot_lead) * pivot
                    let factor = lead as u128 * mod_inverse(pivot[0].1, p) as u128 % p as u128;
                    let mut out = Vec::with_capacity(row.len() + pivot.len());
                    let (mut i, mut j) = (0, 0);
                    while i < row.len() || j < pivot.len() {
                        if j >= pivot.len() || (i < row.len() && row[i].0 < pivot[j].0) {
                            out.push(row[i]);
                            i += 1;
                        } else if i >= row.len() || pivot[j].0 < row[i].0 {
                            let v = (p as u128 - factor * pivot[j].1 as u128 % p as u128)
                                % p as u128;
                            if v != 0 {
                                out.push((pivot[j].0, v as u64));
                            }
                            j += 1;
                        } else {
                            let v = (row[i].1 as u128 + p as u128 * p as u128
                                - factor * pivot[j].1 as u128 % p as u128)
                                % p as u128;
                            if v != 0 {
                                out.push((row[i].0, v as u64));
                            }
                            i += 1;
                            j += 1;
                        }
                    }
                    row = out;
                }
                None => {
                    pivots.insert(lead_col, row);
                    break;
                }
            }
        }
    }
    pivots.len()
}
