//! Constructors for the distinguished monomial ideals attached to a
//! partition: the lexicographic ideal `L(λ)`, its irredundant irreducible
//! decomposition, the residual chain of lexicographic ideals, the nearly
//! lexicographic perturbation `L(λ) ∩ J`, and the two explicit singular
//! witness families.
//!
//! Variable indexing everywhere: `x_0` is the lexicographically largest
//! variable and the ambient space is `P^m`, so the ring has `m + 1`
//! variables.

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::partitions::{Partition, ResidualType};

/// The lexicographic ideal `L(λ)` in `m + 1` variables.
///
/// With `a_j` the number of parts equal to `j`, the generators are
/// `x_0^{a_m+1}`, `x_0^{a_m} x_1^{a_{m-1}+1}`, ...,
/// `x_0^{a_m} ... x_{m-2}^{a_2+1}` and finally
/// `x_0^{a_m} ... x_{m-1}^{a_1}` (no `+1` on the last), minimalized. The
/// empty partition gives the zero ideal.
pub fn lex_ideal(partition: &Partition, m: u32) -> Result<MonomialIdeal> {
    let nvars = m as usize + 1;
    if partition.is_empty() {
        return Ok(MonomialIdeal::zero(nvars));
    }
    let largest = partition.largest().expect("nonempty");
    if largest > m {
        return Err(Error::PartitionTooLarge { part: largest, ambient: m });
    }
    let mult = |j: u32| partition.multiplicity(j) as u32;
    let mut gens = Vec::with_capacity(m as usize);
    let mut prefix = vec![0u32; nvars];
    for k in 0..m as usize {
        let a = mult(m - k as u32);
        let mut exps = prefix.clone();
        exps[k] = if k + 1 < m as usize { a + 1 } else { a };
        gens.push(Monomial::new(exps));
        prefix[k] = a;
    }
    // the degenerate final generator (all a_j = 0 past some point) may make
    // earlier ones redundant
    MonomialIdeal::new(nvars, gens)
}

/// The irredundant irreducible decomposition of `L(λ)`: one component
/// `⟨x_0^{a_m+1}, ..., x_{m-i-1}^{a_{i+1}+1}, x_{m-i}^{a_i}⟩` for each part
/// value `i` with `a_i != 0`.
pub fn irreducible_components(partition: &Partition, m: u32) -> Result<Vec<MonomialIdeal>> {
    let nvars = m as usize + 1;
    if partition.is_empty() {
        return Ok(Vec::new());
    }
    let largest = partition.largest().expect("nonempty");
    if largest > m {
        return Err(Error::PartitionTooLarge { part: largest, ambient: m });
    }
    let mult = |j: u32| partition.multiplicity(j) as u32;
    let mut components = Vec::new();
    for i in (1..=m).rev() {
        if mult(i) == 0 {
            continue;
        }
        let mut gens = Vec::new();
        for j in 0..(m - i) as usize {
            gens.push(power(j, mult(m - j as u32) + 1, nvars));
        }
        gens.push(power((m - i) as usize, mult(i), nvars));
        components.push(MonomialIdeal::new(nvars, gens)?);
    }
    Ok(components)
}

/// The chain `I_1 ⊂ I_2 ⊂ ... ⊂ I_e` of lexicographic ideals of the tail
/// partitions `(n_i^{d_i}, ..., n_e^{d_e})`; the corresponding subschemes
/// `X_e ⊂ ... ⊂ X_1` form a residual flag of the given type.
pub fn residual_chain(rt: &ResidualType, m: u32) -> Result<Vec<MonomialIdeal>> {
    (0..rt.len())
        .map(|i| {
            let tail = ResidualType::new(rt.pairs()[i..].to_vec()).expect("valid tail");
            lex_ideal(&tail.partition(), m)
        })
        .collect()
}

/// The nearly lexicographic ideal `K = L(λ) ∩ J` in `m + 1` variables, where
/// `J` is generated by all of `x_0, ..., x_{m-1}` except that
/// `x_{m-λ_1-1}` is replaced by its square. Its Hilbert polynomial is
/// `p(λ) + 1` and the corresponding point lies on the lexicographic
/// component.
pub fn nearly_lex_ideal(partition: &Partition, m: u32) -> Result<MonomialIdeal> {
    let largest = partition.largest().ok_or(Error::EmptyPartition)?;
    if m <= largest {
        return Err(Error::AmbientTooSmall { ambient: m, needed: largest + 1 });
    }
    let nvars = m as usize + 1;
    let lex = lex_ideal(partition, m)?;
    let doubled = (m - largest - 1) as usize;
    let mut gens = Vec::with_capacity(m as usize);
    for j in 0..m as usize {
        gens.push(power(j, if j == doubled { 2 } else { 1 }, nvars));
    }
    let perturbation = MonomialIdeal::new(nvars, gens)?;
    lex.intersect(&perturbation)
}

/// The singular witness
/// `K = x_0·⟨x_0, ..., x_{m-1}⟩ + x_1^{r-s-1}·⟨x_1, ..., x_{n-1}, x_n^{s+1}⟩`
/// in `m + 1` variables, for `r - 2 ≥ s ≥ 0` and `m - 2 ≥ n ≥ 2`. It equals
/// `L(λ) ∩ ⟨x_0^2, x_1, ..., x_{m-1}⟩` for
/// `λ = ((m-1)^{r-s-1}, (m-n)^{s+1})` and is strongly stable.
pub fn lsing_witness(m: u32, n: u32, r: u32, s: u32) -> Result<MonomialIdeal> {
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
    let nvars = m as usize + 1;
    let mut gens = Vec::new();
    for j in 0..m as usize {
        let mut exps = vec![0u32; nvars];
        exps[0] += 1;
        exps[j] += 1;
        gens.push(Monomial::new(exps));
    }
    for j in 1..n as usize {
        let mut exps = vec![0u32; nvars];
        exps[1] += r - s - 1;
        exps[j] += 1;
        gens.push(Monomial::new(exps));
    }
    let mut exps = vec![0u32; nvars];
    exps[1] += r - s - 1;
    exps[n as usize] += s + 1;
    gens.push(Monomial::new(exps));
    MonomialIdeal::new(nvars, gens)
}

/// The points-family witness
/// `B(s) = ⟨x_0, ..., x_{m-4}, x_{m-3}^2, x_{m-3}x_{m-2}, x_{m-3}x_{m-1},
/// x_{m-2}^2, x_{m-2}x_{m-1}, x_{m-1}^{s+2}⟩` in `m + 1` variables; its
/// Hilbert polynomial is the constant `s + 4`.
pub fn four_points_ideal(m: u32, s: u32) -> Result<MonomialIdeal> {
    if m < 3 {
        return Err(Error::ParameterOutOfRange(format!("need m >= 3, got m={m}")));
    }
    let nvars = m as usize + 1;
    let m = m as usize;
    let mut gens = Vec::new();
    for j in 0..m - 3 {
        gens.push(power(j, 1, nvars));
    }
    gens.push(power(m - 3, 2, nvars));
    gens.push(Monomial::variable(m - 3, nvars).mul(&Monomial::variable(m - 2, nvars)));
    gens.push(Monomial::variable(m - 3, nvars).mul(&Monomial::variable(m - 1, nvars)));
    gens.push(power(m - 2, 2, nvars));
    gens.push(Monomial::variable(m - 2, nvars).mul(&Monomial::variable(m - 1, nvars)));
    gens.push(power(m - 1, s + 2, nvars));
    MonomialIdeal::new(nvars, gens)
}

fn power(var: usize, exp: u32, nvars: usize) -> Monomial {
    let mut exps = vec![0u32; nvars];
    exps[var] = exp;
    Monomial::new(exps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numpoly::NumericalPolynomial;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn ideal(nvars: usize, gens: &[&str]) -> MonomialIdeal {
        let gens = gens
            .iter()
            .map(|s| Monomial::parse_product(s, nvars).unwrap())
            .collect();
        MonomialIdeal::new(nvars, gens).unwrap()
    }

    #[test]
    fn lex_ideal_examples() {
        assert_eq!(
            lex_ideal(&part(&[2, 2, 1]), 3).unwrap(),
            ideal(4, &["x0", "x1^3", "x1^2*x2"])
        );
        // hypersurfaces: λ = (m^a) gives a principal ideal
        for m in 1..=5u32 {
            for a in 1..=4u32 {
                let lambda = Partition::new(vec![m; a as usize]).unwrap();
                let expected =
                    ideal(m as usize + 1, &[&format!("x0^{a}")]);
                assert_eq!(lex_ideal(&lambda, m).unwrap(), expected);
            }
        }
        assert_eq!(lex_ideal(&part(&[2]), 3).unwrap(), ideal(4, &["x0", "x1"]));
        assert_eq!(
            lex_ideal(&part(&[2, 2, 1]), 3).unwrap().hilbert_polynomial(3).unwrap(),
            NumericalPolynomial::parse("2t+2").unwrap()
        );
        assert!(lex_ideal(&Partition::empty(), 2).unwrap().is_zero());
        assert_eq!(
            lex_ideal(&part(&[4]), 3),
            Err(Error::PartitionTooLarge { part: 4, ambient: 3 })
        );
    }

    #[test]
    fn irreducible_component_examples() {
        let components = irreducible_components(&part(&[2, 2, 1]), 3).unwrap();
        assert_eq!(
            components,
            vec![ideal(4, &["x0", "x1^2"]), ideal(4, &["x0", "x1^3", "x2"])]
        );
        let mut intersection = MonomialIdeal::unit(4);
        for c in &components {
            intersection = intersection.intersect(c).unwrap();
        }
        assert_eq!(intersection, lex_ideal(&part(&[2, 2, 1]), 3).unwrap());

        assert_eq!(
            irreducible_components(&part(&[3, 3]), 3).unwrap(),
            vec![ideal(4, &["x0^2"])]
        );
    }

    #[test]
    fn residual_chain_examples() {
        let rt = ResidualType::new(vec![(3, 2), (2, 4)]).unwrap();
        let chain = residual_chain(&rt, 4).unwrap();
        assert_eq!(chain.len(), 2);
        assert_eq!(chain[0], lex_ideal(&part(&[3, 3, 2, 2, 2, 2]), 4).unwrap());
        assert_eq!(chain[1], lex_ideal(&part(&[2, 2, 2, 2]), 4).unwrap());
        // X_2 ⊂ X_1 means I_1 ⊂ I_2
        for g in chain[0].gens() {
            assert!(chain[1].contains(g).unwrap());
        }
        assert_ne!(chain[0], chain[1]);

        let single = ResidualType::new(vec![(1, 3)]).unwrap();
        let chain = residual_chain(&single, 2).unwrap();
        assert_eq!(chain, vec![lex_ideal(&part(&[1, 1, 1]), 2).unwrap()]);
    }

    #[test]
    fn nearly_lex_examples() {
        let k = nearly_lex_ideal(&part(&[2]), 3).unwrap();
        assert_eq!(k, ideal(4, &["x1", "x0^2", "x0*x2"]));
        assert_eq!(
            k.hilbert_polynomial(2).unwrap(),
            NumericalPolynomial::parse("t+2").unwrap()
        );
        // saturations with respect to x_{m-1} agree
        let lex = lex_ideal(&part(&[2]), 3).unwrap();
        assert_eq!(lex.saturate(2).unwrap(), k.saturate(2).unwrap());

        assert_eq!(
            nearly_lex_ideal(&part(&[2]), 2),
            Err(Error::AmbientTooSmall { ambient: 2, needed: 3 })
        );
        assert_eq!(nearly_lex_ideal(&Partition::empty(), 3), Err(Error::EmptyPartition));
    }

    #[test]
    fn lsing_witness_examples() {
        let k = lsing_witness(4, 2, 2, 0).unwrap();
        assert_eq!(
            k,
            ideal(5, &["x0^2", "x0*x1", "x0*x2", "x0*x3", "x1^2", "x1*x2"])
        );
        assert!(k.is_strongly_stable());

        // K = L(λ) ∩ ⟨x0^2, x1, ..., x_{m-1}⟩ with λ = ((m-1)^{r-s-1}, (m-n)^{s+1})
        for (m, n, r, s) in [(4u32, 2u32, 2u32, 0u32), (5, 2, 3, 1), (5, 3, 3, 0), (6, 3, 4, 1)] {
            let witness = lsing_witness(m, n, r, s).unwrap();
            let mut parts = vec![m - 1; (r - s - 1) as usize];
            parts.resize(parts.len() + (s + 1) as usize, m - n);
            let lambda = Partition::new(parts).unwrap();
            let nvars = m as usize + 1;
            let mut gens = vec![power(0, 2, nvars)];
            for j in 1..m as usize {
                gens.push(power(j, 1, nvars));
            }
            let j_ideal = MonomialIdeal::new(nvars, gens).unwrap();
            let expected = lex_ideal(&lambda, m).unwrap().intersect(&j_ideal).unwrap();
            assert_eq!(witness, expected, "m={m} n={n} r={r} s={s}");
            assert!(witness.is_strongly_stable());
        }

        assert!(lsing_witness(3, 2, 2, 0).is_err()); // m - 2 >= n fails
        assert!(lsing_witness(4, 2, 1, 0).is_err()); // r - 2 >= s fails
    }

    #[test]
    fn four_points_examples() {
        assert_eq!(
            four_points_ideal(3, 0).unwrap(),
            ideal(4, &["x0^2", "x0*x1", "x0*x2", "x1^2", "x1*x2", "x2^2"])
        );
        assert_eq!(
            four_points_ideal(4, 1).unwrap(),
            ideal(5, &["x0", "x1^2", "x1*x2", "x1*x3", "x2^2", "x2*x3", "x3^3"])
        );
        assert_eq!(
            four_points_ideal(3, 0).unwrap().hilbert_polynomial(4).unwrap(),
            NumericalPolynomial::parse("4").unwrap()
        );
        assert!(four_points_ideal(2, 0).is_err());
    }
}
