//! Diagonal symmetries of explicit polynomials.
//!
//! A diagonal automorphism `x_j -> exp(2 pi i theta_j) x_j` fixes every
//! monomial of `f` exactly when `M theta` is integral, where `M` is the
//! exponent matrix of `f`. The solution set in `(Q/Z)^{n+2}` is read off
//! from the Smith normal form of `M`: with nonzero invariant factors
//! `d_1 | ... | d_r` it is `Z/d_1 + ... + Z/d_r + (Q/Z)^{n+2-r}`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

use crate::bounds::lin_finiteness;
use crate::error::{Error, Result};
use crate::linalg::{integer_determinant, smith_normal_form, IntMatrix};
use crate::monomials::{select_witness, PolynomialSupport};
use crate::quasismooth::quasismooth_exists;
use crate::weights::HypersurfaceFamily;

/// A finitely generated quotient of `(Q/Z)^m`: cyclic factors plus a
/// divisible part of rank `free_rank`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianGroupStructure {
    /// Nontrivial invariant factors `d_1 | d_2 | ...`, each at least 2.
    pub invariant_factors: Vec<BigInt>,
    /// Group order, present only when the group is finite.
    pub order: Option<BigInt>,
    pub finite: bool,
    pub free_rank: usize,
}

impl AbelianGroupStructure {
    /// Builds the structure from Smith diagonal entries of a matrix with
    /// `cols` columns.
    fn from_snf_diagonal(diagonal: &[BigInt], cols: usize) -> Self {
        let rank = diagonal.iter().filter(|x| !x.is_zero()).count();
        let invariant_factors: Vec<BigInt> = diagonal
            .iter()
            .filter(|x| !x.is_zero() && !x.is_one())
            .cloned()
            .collect();
        let free_rank = cols - rank;
        let finite = free_rank == 0;
        let order = finite.then(|| invariant_factors.iter().product());
        AbelianGroupStructure {
            invariant_factors,
            order,
            finite,
            free_rank,
        }
    }

    pub fn trivial() -> Self {
        AbelianGroupStructure {
            invariant_factors: Vec::new(),
            order: Some(BigInt::one()),
            finite: true,
            free_rank: 0,
        }
    }
}

impl fmt::Display for AbelianGroupStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .invariant_factors
            .iter()
            .map(|d| format!("Z/{d}"))
            .collect();
        if self.free_rank > 0 {
            parts.push(match self.free_rank {
                1 => "Q/Z".to_string(),
                r => format!("(Q/Z)^{r}"),
            });
        }
        if parts.is_empty() {
            f.write_str("trivial")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// The group of diagonal graded automorphisms fixing every monomial of the
/// support, i.e. `{theta in (Q/Z)^m : M theta in Z^s}`.
pub fn fixing_group(p: &PolynomialSupport) -> AbelianGroupStructure {
    let m = p.exponent_matrix();
    let snf = smith_normal_form(&m);
    AbelianGroupStructure::from_snf_diagonal(&snf.invariant_factors, m.cols())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiagonalOrder {
    Finite(BigInt),
    Infinite { free_rank: usize },
}

impl fmt::Display for DiagonalOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagonalOrder::Finite(n) => write!(f, "{n}"),
            DiagonalOrder::Infinite { free_rank } => write!(f, "infinite (free rank {free_rank})"),
        }
    }
}

/// Order of the image of the diagonal fixing group in the automorphism group
/// of the ambient space: the fixing group modulo its order-`d` scalar
/// subgroup `t -> (t^{a_0}, ..., t^{a_{n+1}})`, `t^d = 1`.
pub fn lin_diagonal_order(p: &PolynomialSupport) -> Result<DiagonalOrder> {
    let weights = p.weights();
    let d = p.family().degree;
    let g = weights.iter().fold(0u64, |g, &a| g.gcd(&a));
    if g != 1 {
        return Err(Error::Precondition(format!(
            "weights have common factor {g}; the scalar subgroup is not of order d"
        )));
    }
    // The scalar vector (a_0/d, ..., a_{n+1}/d) must satisfy M theta in Z^s.
    for (k, row) in p.rows().iter().enumerate() {
        if row.weighted_degree(weights) != d as u128 {
            return Err(Error::InvariantViolation(format!(
                "row {k} does not have degree {d}"
            )));
        }
    }
    let group = fixing_group(p);
    match group.order {
        None => Ok(DiagonalOrder::Infinite {
            free_rank: group.free_rank,
        }),
        Some(order) => {
            let (q, r) = order.div_rem(&BigInt::from(d));
            if !r.is_zero() {
                return Err(Error::InvariantViolation(format!(
                    "fixing group order {order} is not divisible by d = {d}"
                )));
            }
            Ok(DiagonalOrder::Finite(q))
        }
    }
}

/// Row of the distinguished minor chosen for one variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MinorRow {
    pub variable: usize,
    /// Index into the support rows.
    pub support_row: usize,
    /// Diagonal entry `b_i`.
    pub exponent: u32,
    pub companion: Option<usize>,
}

/// Square submatrix `B` of the exponent matrix whose row `i` is a monomial
/// `x_i^{b_i}` or `x_i^{b_i} x_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistinguishedMinor {
    pub matrix: IntMatrix,
    pub chosen_rows: Vec<MinorRow>,
    pub determinant: BigInt,
    /// `d^{n+2} / (a_0 ... a_{n+1})`
    pub bound: BigRational,
    /// Whether the family has finite linear automorphism group, in which case
    /// `0 < det B <= bound` is guaranteed.
    pub bound_applies: bool,
    pub within_bound: bool,
}

/// `d^{n+2} / prod a_i` for the support's family.
pub fn determinant_bound(family: &HypersurfaceFamily) -> BigRational {
    let m = family.weights.len();
    let num: BigInt = BigInt::from(family.degree).pow(m as u32);
    BigRational::new(num, family.weights.product())
}

pub fn distinguished_minor(p: &PolynomialSupport) -> Result<DistinguishedMinor> {
    let m = p.num_vars();
    let mut chosen_rows = Vec::with_capacity(m);
    for i in 0..m {
        let w = select_witness(p.rows(), i).ok_or_else(|| {
            Error::Precondition(format!(
                "no monomial of the form x{i}^k or x{i}^k*x_j in the support"
            ))
        })?;
        chosen_rows.push(MinorRow {
            variable: i,
            support_row: w.row,
            exponent: w.exponent,
            companion: w.companion,
        });
    }
    let entries = chosen_rows
        .iter()
        .flat_map(|r| p.rows()[r.support_row].0.iter().map(|&e| BigInt::from(e)))
        .collect();
    let matrix = IntMatrix::new(m, m, entries)?;
    let determinant = integer_determinant(&matrix)?;
    let family = p.family();
    let bound = determinant_bound(family);
    let bound_applies = lin_finiteness(family).finite;
    let within_bound =
        determinant.is_positive() && BigRational::from_integer(determinant.clone()) <= bound;
    if bound_applies && !within_bound {
        return Err(Error::InvariantViolation(format!(
            "det B = {determinant} violates 0 < det B <= {bound}"
        )));
    }
    Ok(DistinguishedMinor {
        matrix,
        chosen_rows,
        determinant,
        bound,
        bound_applies,
        within_bound,
    })
}

/// Diagonal automorphisms fixing every monomial of degree `d`, modulo the
/// scalar subgroup. Every member of the family has this group inside its
/// linear automorphism group, so it is a lower bound for the generic one.
pub fn forced_central_group(fam: &HypersurfaceFamily) -> Result<AbelianGroupStructure> {
    if !quasismooth_exists(fam)?.exists {
        return Err(Error::Precondition(format!(
            "{fam} has no quasismooth member"
        )));
    }
    let support = PolynomialSupport::full_graded_piece(fam)?;
    let weights = support.weights().to_vec();
    let m = support.exponent_matrix();
    let cols = m.cols();
    let snf = smith_normal_form(&m);
    if snf.rank() < cols {
        // A divisible group modulo a finite cyclic subgroup stays divisible;
        // only the rank is reported.
        return Ok(AbelianGroupStructure {
            invariant_factors: Vec::new(),
            order: None,
            finite: false,
            free_rank: cols - snf.rank(),
        });
    }

    // In coordinates phi = V^{-1} theta the group is sum Z/d_i via
    // phi_i = y_i / d_i. The scalar generator theta = w / d maps to
    // y = diag(d_i) V^{-1} w / d, and the quotient is Z^m / <diag(d_i), y>.
    let d = BigInt::from(fam.degree);
    let mut augmented = IntMatrix::zeros(cols, cols + 1);
    for i in 0..cols {
        let di = &snf.invariant_factors[i];
        augmented[(i, i)] = di.clone();
        let z: BigInt = (0..cols)
            .map(|j| &snf.v_inv[(i, j)] * BigInt::from(weights[j]))
            .sum();
        let (y, r) = (di * z).div_rem(&d);
        if !r.is_zero() {
            return Err(Error::InvariantViolation(
                "scalar vector does not lie in the fixing group".into(),
            ));
        }
        augmented[(i, cols)] = y;
    }
    let quotient = smith_normal_form(&augmented);
    Ok(AbelianGroupStructure::from_snf_diagonal(
        &quotient.invariant_factors,
        cols,
    ))
}

/// `|Lin| = (n+2)! d^{n+1}` for the Fermat hypersurface, and its diagonal
/// part `d^{n+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FermatPrediction {
    pub total: BigInt,
    pub diagonal: BigInt,
}

pub fn fermat_prediction(n: usize, d: u64) -> Result<FermatPrediction> {
    if n < 1 {
        return Err(Error::Precondition(format!(
            "dimension must be >= 1, got {n}"
        )));
    }
    if d < 3 {
        return Err(Error::Precondition(format!("degree must be >= 3, got {d}")));
    }
    let diagonal = BigInt::from(d).pow((n + 1) as u32);
    let factorial: BigInt = (1..=(n + 2) as u64).map(BigInt::from).product();
    Ok(FermatPrediction {
        total: factorial * &diagonal,
        diagonal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn support(w: &[u64], d: u64, rows: &[&[u32]]) -> PolynomialSupport {
        PolynomialSupport::from_rows(w, d, rows).unwrap()
    }

    fn klein() -> PolynomialSupport {
        support(&[1, 1, 1], 4, &[&[1, 3, 0], &[0, 1, 3], &[3, 0, 1]])
    }

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn fam(w: &[u64], d: u64) -> HypersurfaceFamily {
        HypersurfaceFamily::from_weights(w, d).unwrap()
    }

    #[test]
    fn fixing_group_examples() {
        let g = fixing_group(&PolynomialSupport::fermat(1, 4).unwrap());
        assert_eq!(g.invariant_factors, vec![big(4), big(4), big(4)]);
        assert_eq!(g.order, Some(big(64)));

        let g = fixing_group(&klein());
        assert_eq!(g.order, Some(big(28)));
        assert_eq!(g.invariant_factors, vec![big(28)]);

        let g = fixing_group(&support(&[1, 1], 2, &[&[1, 1]]));
        assert!(!g.finite);
        assert_eq!(g.free_rank, 1);
        assert_eq!(g.order, None);
        assert_eq!(g.to_string(), "Q/Z");
    }

    #[test]
    fn lin_diagonal_examples() {
        assert_eq!(
            lin_diagonal_order(&PolynomialSupport::fermat(1, 4).unwrap()).unwrap(),
            DiagonalOrder::Finite(big(16))
        );
        assert_eq!(
            lin_diagonal_order(&klein()).unwrap(),
            DiagonalOrder::Finite(big(7))
        );
        let hyper = support(&[3, 1, 1], 6, &[&[2, 0, 0], &[0, 6, 0], &[0, 0, 6]]);
        assert_eq!(fixing_group(&hyper).order, Some(big(72)));
        assert_eq!(
            lin_diagonal_order(&hyper).unwrap(),
            DiagonalOrder::Finite(big(12))
        );
        assert_eq!(
            lin_diagonal_order(&support(&[1, 1], 2, &[&[1, 1]])).unwrap(),
            DiagonalOrder::Infinite { free_rank: 1 }
        );
        assert!(matches!(
            lin_diagonal_order(&support(&[2, 2], 4, &[&[2, 0], &[0, 2]])),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn minor_examples() {
        let m = distinguished_minor(&PolynomialSupport::fermat(2, 3).unwrap()).unwrap();
        assert_eq!(m.matrix, IntMatrix::diagonal(&[3, 3, 3, 3]));
        assert_eq!(m.determinant, big(81));
        assert_eq!(m.bound, BigRational::from_integer(big(81)));
        assert!(m.bound_applies && m.within_bound);

        let m = distinguished_minor(&klein()).unwrap();
        assert_eq!(
            m.matrix,
            IntMatrix::from_rows(&[[3, 0, 1], [1, 3, 0], [0, 1, 3]]).unwrap()
        );
        assert_eq!(m.determinant, big(28));
        assert_eq!(m.bound, BigRational::from_integer(big(64)));

        let hyper = support(&[3, 1, 1], 6, &[&[2, 0, 0], &[0, 6, 0], &[0, 0, 6]]);
        let m = distinguished_minor(&hyper).unwrap();
        assert_eq!(m.determinant, big(72));
        assert_eq!(m.bound, BigRational::from_integer(big(72)));
    }

    #[test]
    fn minor_requires_witnesses() {
        let err = distinguished_minor(&support(&[1, 1, 1], 3, &[&[1, 1, 1]])).unwrap_err();
        assert!(matches!(err, Error::Precondition(ref m) if m.contains("x0")));
    }

    #[test]
    fn minor_outside_finite_range_is_reported_not_asserted() {
        // (1,1) d = 2: x0 x1 gives B = [[1,1],[1,1]], det 0; Lin is infinite.
        let m = distinguished_minor(&support(&[1, 1], 2, &[&[1, 1]])).unwrap();
        assert_eq!(m.determinant, big(0));
        assert!(!m.bound_applies && !m.within_bound);
    }

    #[test]
    fn forced_central_examples() {
        let g = forced_central_group(&fam(&[36, 31, 30, 25], 180)).unwrap();
        assert_eq!(g.order, Some(big(5)));
        assert_eq!(g.invariant_factors, vec![big(5)]);
        assert_eq!(
            forced_central_group(&fam(&[1, 1, 1, 1], 4)).unwrap(),
            AbelianGroupStructure::trivial()
        );
        assert_eq!(
            forced_central_group(&fam(&[1, 1, 1], 3)).unwrap(),
            AbelianGroupStructure::trivial()
        );
        assert!(matches!(
            forced_central_group(&fam(&[1, 1, 3], 5)),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn forced_central_isolated_weight() {
        // In P(16,13,12,9) the only degree-48 monomial involving x0 is x0^3.
        let g = forced_central_group(&fam(&[16, 13, 12, 9], 48)).unwrap();
        assert_eq!(g.order, Some(big(3)));
        // X_6 in P(3,1,1) contains x0*x1^3, so the double-cover involution is
        // not diagonal in these coordinates and nothing is forced.
        assert_eq!(
            forced_central_group(&fam(&[3, 1, 1], 6)).unwrap(),
            AbelianGroupStructure::trivial()
        );
    }

    #[test]
    fn fermat_prediction_examples() {
        let p = fermat_prediction(1, 4).unwrap();
        assert_eq!((p.total, p.diagonal), (big(96), big(16)));
        let p = fermat_prediction(2, 3).unwrap();
        assert_eq!((p.total, p.diagonal), (big(648), big(27)));
        let p = fermat_prediction(1, 3).unwrap();
        assert_eq!((p.total, p.diagonal), (big(54), big(9)));
        let p = fermat_prediction(2, 4).unwrap();
        assert_eq!((p.total, p.diagonal), (big(1536), big(64)));
        assert!(fermat_prediction(1, 2).is_err());
        assert!(fermat_prediction(0, 4).is_err());
    }

    #[test]
    fn fixing_group_is_permutation_invariant() {
        let s = support(
            &[3, 2, 1],
            12,
            &[&[4, 0, 0], &[0, 6, 0], &[0, 0, 12], &[2, 1, 4], &[1, 3, 3]],
        );
        let base = fixing_group(&s);
        for perm in [[0, 2, 1], [2, 1, 0], [1, 0, 2], [1, 2, 0]] {
            assert_eq!(fixing_group(&s.permuted(&perm).unwrap()), base);
        }
    }
}
