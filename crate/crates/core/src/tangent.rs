//! Tangent-space dimensions at monomial points.
//!
//! For a nonzero monomial ideal `I` with minimal generators `g_1, ..., g_k`,
//! a degree-0 homomorphism `φ: I -> R/I` is determined by the images
//! `φ(g_i) ∈ (R/I)_{deg g_i}` subject to one linear relation per pairwise
//! syzygy `(lcm/g_i)·g_i = (lcm/g_j)·g_j` and per standard monomial in the
//! lcm degree. Pairwise syzygies present every monomial ideal, so the kernel
//! of the assembled matrix is exactly `Hom_R(I, R/I)_0`.
//!
//! When the last variable divides no generator (true for every saturated
//! monomial ideal), this dimension bounds the Zariski tangent dimension of
//! the Hilbert scheme at the point from below, which is how singularity gets
//! certified: the bound at the witness exceeds the dimension of the
//! lexicographic component.

use num_bigint::BigInt;

use crate::classify::lex_component_dim;
use crate::error::{Error, Result};
use crate::linalg::{rank_prime, rank_rational, SparseRow};
use crate::monomial::{MonomialIdeal, StandardBasis};
use crate::partitions::Partition;

/// Default bound on the degrees the engine is willing to enumerate.
pub const DEFAULT_DEGREE_CAP: u32 = 20;

/// Coefficient field for the elimination.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Rational,
    Prime(u64),
}

impl std::fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "rationals"),
            FieldSpec::Prime(p) => write!(f, "prime {p}"),
        }
    }
}

/// One pairwise syzygy between generators `i < j`:
/// `multiplier_i * g_i = multiplier_j * g_j = lcm(g_i, g_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyzygyPair {
    pub i: usize,
    pub j: usize,
    pub multiplier_i: crate::monomial::Monomial,
    pub multiplier_j: crate::monomial::Monomial,
    /// Degree of the lcm.
    pub degree: u32,
}

/// All pairwise syzygies of the minimal generators, in deterministic
/// `(i, j)` order.
pub fn taylor_syzygies(ideal: &MonomialIdeal) -> Result<Vec<SyzygyPair>> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let gens = ideal.gens();
    let mut pairs = Vec::with_capacity(gens.len() * (gens.len().saturating_sub(1)) / 2);
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let lcm = gens[i].lcm(&gens[j]);
            pairs.push(SyzygyPair {
                i,
                j,
                multiplier_i: lcm.div(&gens[i]),
                multiplier_j: lcm.div(&gens[j]),
                degree: lcm.degree(),
            });
        }
    }
    Ok(pairs)
}

/// Result of a degree-0 Hom computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangentReport {
    pub ideal: MonomialIdeal,
    /// `dim_k Hom_R(I, R/I)_0`.
    pub hom0_dim: usize,
    /// Total coordinates of the images, one per (generator, standard
    /// monomial of its degree).
    pub unknowns: usize,
    /// Assembled relations, one per (syzygy pair, standard monomial of the
    /// lcm degree).
    pub equations: usize,
    pub field: FieldSpec,
}

/// `dim_k Hom_R(I, R/I)_0` with the default degree cap.
pub fn hom0_dimension(ideal: &MonomialIdeal, field: FieldSpec) -> Result<TangentReport> {
    hom0_dimension_with_cap(ideal, field, DEFAULT_DEGREE_CAP)
}

/// `dim_k Hom_R(I, R/I)_0`, refusing any enumeration above `cap`.
pub fn hom0_dimension_with_cap(
    ideal: &MonomialIdeal,
    field: FieldSpec,
    cap: u32,
) -> Result<TangentReport> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let gens = ideal.gens();
    let pairs = taylor_syzygies(ideal)?;
    for g in gens {
        if g.degree() > cap {
            return Err(Error::DegreeCapExceeded { degree: g.degree(), cap });
        }
    }
    for pair in &pairs {
        if pair.degree > cap {
            return Err(Error::DegreeCapExceeded { degree: pair.degree, cap });
        }
    }

    let mut basis = StandardBasis::default();
    let mut offsets = Vec::with_capacity(gens.len());
    let mut unknowns = 0usize;
    for g in gens {
        offsets.push(unknowns);
        unknowns += basis.basis(ideal, g.degree()).0.len();
    }

    let mut rows: Vec<SparseRow> = Vec::new();
    let mut equations = 0usize;
    for pair in &pairs {
        // splitting the borrow: clone the lcm-degree standard monomials, the
        // per-generator index maps stay in the cache
        let lcm_basis = basis.basis(ideal, pair.degree).0.clone();
        equations += lcm_basis.len();
        for target in &lcm_basis {
            let mut row: SparseRow = Vec::with_capacity(2);
            if pair.multiplier_i.divides(target) {
                let source = target.div(&pair.multiplier_i);
                // target is standard, so source is standard too
                let idx = basis.basis(ideal, gens[pair.i].degree()).1[&source];
                row.push((offsets[pair.i] + idx, 1));
            }
            if pair.multiplier_j.divides(target) {
                let source = target.div(&pair.multiplier_j);
                let idx = basis.basis(ideal, gens[pair.j].degree()).1[&source];
                row.push((offsets[pair.j] + idx, -1));
            }
            row.sort_by_key(|&(col, _)| col);
            if !row.is_empty() {
                rows.push(row);
            }
        }
    }

    let rank = match field {
        FieldSpec::Rational => rank_rational(rows),
        FieldSpec::Prime(p) => rank_prime(rows, p),
    };
    Ok(TangentReport {
        ideal: ideal.clone(),
        hom0_dim: unknowns - rank,
        unknowns,
        equations,
        field,
    })
}

/// Outcome of comparing the tangent bound at a witness against the
/// lexicographic component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularCertificate {
    /// `dim Hom(W, R/W)_0`, a lower bound for the tangent dimension.
    pub hom0_dim: usize,
    /// Dimension of the lexicographic component of `Hilb^p(P^m)`.
    pub lex_component_dim: BigInt,
    /// True when the tangent bound exceeds the component dimension.
    pub singular_certified: bool,
    /// The comparison certifies singularity only for witnesses on the
    /// lexicographic component; membership is assumed, not re-verified.
    pub assumes_lex_component: bool,
}

/// Certifies singularity of `Hilb^p(P^m)` at the witness `W`: checks that
/// `W` is saturated with the Hilbert polynomial of `λ`, then compares
/// `dim Hom(W, R/W)_0` with the lexicographic component dimension.
pub fn certify_singular(
    m: u32,
    partition: &Partition,
    witness: &MonomialIdeal,
) -> Result<SingularCertificate> {
    certify_singular_with_cap(m, partition, witness, FieldSpec::Rational, DEFAULT_DEGREE_CAP)
}

pub fn certify_singular_with_cap(
    m: u32,
    partition: &Partition,
    witness: &MonomialIdeal,
    field: FieldSpec,
    cap: u32,
) -> Result<SingularCertificate> {
    let expected = partition.hilbert_polynomial();
    let mut hint = partition.len() as u32;
    let found = loop {
        match witness.hilbert_polynomial(hint) {
            Ok(p) => break p,
            Err(Error::NotYetPolynomial { .. }) if hint == partition.len() as u32 => {
                hint += witness.nvars() as u32 + 2;
            }
            Err(e) => return Err(e),
        }
    };
    if found != expected {
        return Err(Error::PolynomialMismatch {
            expected: expected.to_string(),
            found: found.to_string(),
        });
    }
    if &witness.saturate(witness.nvars() - 1)? != witness {
        return Err(Error::NotSaturated);
    }
    let report = hom0_dimension_with_cap(witness, field, cap)?;
    let lex_dim = lex_component_dim(m, partition)?;
    let singular_certified = BigInt::from(report.hom0_dim) > lex_dim;
    Ok(SingularCertificate {
        hom0_dim: report.hom0_dim,
        lex_component_dim: lex_dim,
        singular_certified,
        assumes_lex_component: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lex::{four_points_ideal, lex_ideal, lsing_witness, nearly_lex_ideal};
    use crate::monomial::Monomial;

    fn ideal(nvars: usize, gens: &[&str]) -> MonomialIdeal {
        let gens = gens
            .iter()
            .map(|s| Monomial::parse_product(s, nvars).unwrap())
            .collect();
        MonomialIdeal::new(nvars, gens).unwrap()
    }

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn hom0(i: &MonomialIdeal) -> usize {
        hom0_dimension(i, FieldSpec::Rational).unwrap().hom0_dim
    }

    #[test]
    fn syzygy_examples() {
        let koszul = taylor_syzygies(&ideal(2, &["x0", "x1"])).unwrap();
        assert_eq!(koszul.len(), 1);
        assert_eq!(koszul[0].multiplier_i, Monomial::parse_product("x1", 2).unwrap());
        assert_eq!(koszul[0].multiplier_j, Monomial::parse_product("x0", 2).unwrap());
        assert_eq!(koszul[0].degree, 2);
        assert_eq!(
            koszul[0].multiplier_i.mul(&ideal(2, &["x0", "x1"]).gens()[0]),
            koszul[0].multiplier_j.mul(&ideal(2, &["x0", "x1"]).gens()[1])
        );

        assert!(taylor_syzygies(&ideal(1, &["x0^2"])).unwrap().is_empty());

        let pair = taylor_syzygies(&ideal(2, &["x0*x1", "x0^2"])).unwrap();
        assert_eq!(pair.len(), 1);
        let mults = [pair[0].multiplier_i.to_string(), pair[0].multiplier_j.to_string()];
        assert!(mults.contains(&"x0".to_string()) && mults.contains(&"x1".to_string()));

        assert_eq!(taylor_syzygies(&MonomialIdeal::zero(2)), Err(Error::ZeroIdeal));
    }

    #[test]
    fn hom0_examples() {
        assert_eq!(hom0(&ideal(4, &["x0"])), 3);
        assert_eq!(hom0(&ideal(3, &["x0", "x1^2"])), 4);

        let report = hom0_dimension(&lsing_witness(4, 2, 2, 0).unwrap(), FieldSpec::Rational)
            .unwrap();
        assert!(report.hom0_dim >= 17, "hom0 = {}", report.hom0_dim);
        assert_eq!(report.hom0_dim, 18);
        assert_eq!(report.unknowns, 54);
        assert!(report.hom0_dim <= report.unknowns);
    }

    #[test]
    fn known_tangent_dimensions() {
        // tangent dimensions with classical published values, plus smooth lex
        // points where the bound must not exceed the component dimension
        let cubic = nearly_lex_ideal(&part(&[2, 2, 2]), 3).unwrap();
        assert_eq!(hom0(&cubic), 16); // two components of dims 12 and 15 meet

        assert_eq!(hom0(&four_points_ideal(3, 0).unwrap()), 18); // square of the maximal ideal

        let pair = nearly_lex_ideal(&part(&[2, 2]), 3).unwrap();
        assert_eq!(hom0(&pair), 12); // components of dims 8 and 11 meet transversally

        // smooth: flags of a plane and a line in P^4, component dim 11
        assert_eq!(hom0(&lex_ideal(&part(&[3, 2]), 4).unwrap()), 11);
        // smooth: Grassmannian of 2-planes in P^4, dim 6
        assert_eq!(hom0(&lex_ideal(&part(&[3]), 4).unwrap()), 6);
    }

    #[test]
    fn principal_ideals_give_linear_systems() {
        for m in 1..=4u32 {
            for a in 1..=4u32 {
                let nvars = m as usize + 1;
                let principal = ideal(nvars, &[&format!("x0^{a}")]);
                let expected = crate::numpoly::integer_binomial((m + a) as i64, a as i64)
                    - num_bigint::BigInt::from(1);
                assert_eq!(num_bigint::BigInt::from(hom0(&principal)), expected);
            }
        }
    }

    #[test]
    fn field_independence() {
        let samples = vec![
            lsing_witness(4, 2, 2, 0).unwrap(),
            four_points_ideal(3, 0).unwrap(),
            four_points_ideal(4, 1).unwrap(),
            lex_ideal(&part(&[2, 2, 1]), 3).unwrap(),
            nearly_lex_ideal(&part(&[3, 2]), 4).unwrap(),
            nearly_lex_ideal(&part(&[2, 2]), 3).unwrap(),
        ];
        for ideal in samples {
            let rational = hom0_dimension(&ideal, FieldSpec::Rational).unwrap();
            let modular = hom0_dimension(&ideal, FieldSpec::Prime(1_000_003)).unwrap();
            assert_eq!(rational.hom0_dim, modular.hom0_dim, "{}", ideal.generators_string());
            assert_eq!(rational.unknowns, modular.unknowns);
            assert_eq!(rational.equations, modular.equations);
        }
    }

    #[test]
    fn redundant_generators_do_not_change_hom0() {
        let base = ideal(3, &["x0", "x1^2"]);
        let padded = ideal(3, &["x0", "x1^2", "x0*x1^2", "x0^3"]);
        assert_eq!(base, padded);
        assert_eq!(hom0(&base), hom0(&padded));
    }

    #[test]
    fn degree_cap_is_enforced() {
        let tall = ideal(2, &["x0^25"]);
        assert_eq!(
            hom0_dimension(&tall, FieldSpec::Rational),
            Err(Error::DegreeCapExceeded { degree: 25, cap: 20 })
        );
        assert!(hom0_dimension_with_cap(&tall, FieldSpec::Rational, 30).is_ok());
    }

    #[test]
    fn lsing_grid_certifies_singularity() {
        for m in 4..=6u32 {
            for n in 2..=m - 2 {
                for r in 2..=5u32 {
                    for s in 0..=r - 2 {
                        let witness = lsing_witness(m, n, r, s).unwrap();
                        let counts = crate::classify::lsing_counts(m, n, r, s).unwrap();
                        let hom0 = hom0(&witness);

                        // the column count N is attained except in the s = 0,
                        // n ≥ 3 cells, where the n-1 columns whose image is
                        // x_1^{r-1}·x_n land on a generator and vanish in R/K
                        let attained = if s >= 1 || n == 2 {
                            counts.independent_columns.clone()
                        } else {
                            counts.independent_columns.clone() - BigInt::from(n - 2)
                        };
                        assert!(
                            BigInt::from(hom0) >= attained,
                            "m={m} n={n} r={r} s={s}: hom0={hom0} < {attained}"
                        );

                        // the certification itself holds on the whole grid:
                        // the tangent bound exceeds the lexicographic
                        // component dimension of λ ∪ (1)
                        let mut parts = vec![m - 1; (r - s - 1) as usize];
                        parts.resize(parts.len() + (s + 1) as usize, m - n);
                        parts.push(1);
                        let lambda = Partition::new(parts).unwrap();
                        let lex_dim = lex_component_dim(m, &lambda).unwrap();
                        assert!(
                            BigInt::from(hom0) > lex_dim,
                            "m={m} n={n} r={r} s={s}: hom0={hom0} ≤ lex dim {lex_dim}"
                        );
                        assert!(BigInt::from(hom0) > counts.lex_bound || s == 0);
                    }
                }
            }
        }
    }

    /// The degree-0 bound is sufficient, not necessary: at some singular
    /// points it stays at or below the component dimension, so the
    /// certificate honestly comes back negative.
    #[test]
    fn degree_zero_bound_is_one_sided() {
        let b2 = four_points_ideal(4, 2).unwrap();
        let cert = certify_singular(4, &part(&[1, 1, 1, 1, 1, 1]), &b2).unwrap();
        assert!(!cert.singular_certified);
        assert_eq!(cert.hom0_dim, 23);
        assert_eq!(cert.lex_component_dim, BigInt::from(24));
        // the verdict itself is still singular
        let c = crate::classify::classify(4, &part(&[1, 1, 1, 1, 1, 1])).unwrap();
        assert_eq!(c.verdict, crate::classify::Verdict::Singular);
    }

    #[test]
    fn certify_examples() {
        // the skew-case witness: 17 ≥ hom0 > 16 ≥ lex dim
        let cert =
            certify_singular(4, &part(&[3, 2, 1]), &lsing_witness(4, 2, 2, 0).unwrap()).unwrap();
        assert!(cert.singular_certified);
        assert!(cert.hom0_dim >= 17);
        assert!(cert.assumes_lex_component);

        // four points in P^3
        let cert =
            certify_singular(3, &part(&[1, 1, 1, 1]), &four_points_ideal(3, 0).unwrap()).unwrap();
        assert!(cert.singular_certified);
        assert_eq!(cert.lex_component_dim, BigInt::from(12));

        // a smooth point certifies nothing
        let cert =
            certify_singular(2, &part(&[1, 1]), &lex_ideal(&part(&[1, 1]), 2).unwrap()).unwrap();
        assert!(!cert.singular_certified);
        assert_eq!(cert.hom0_dim, 4);
        assert_eq!(cert.lex_component_dim, BigInt::from(4));

        // polynomial mismatch is refused
        let err = certify_singular(3, &part(&[2, 2, 1]), &four_points_ideal(3, 0).unwrap());
        assert!(matches!(err, Err(Error::PolynomialMismatch { .. })));

        // unsaturated witnesses are refused: the truncation m·B(0) has the
        // same Hilbert polynomial but is no longer saturated
        let b0 = four_points_ideal(3, 0).unwrap();
        let mut gens = Vec::new();
        for g in b0.gens() {
            for v in 0..4 {
                gens.push(g.mul(&Monomial::variable(v, 4)));
            }
        }
        let truncated = MonomialIdeal::new(4, gens).unwrap();
        let err = certify_singular(3, &part(&[1, 1, 1, 1]), &truncated);
        assert!(matches!(err, Err(Error::NotSaturated)));
    }
}
