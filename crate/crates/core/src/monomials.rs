//! Weighted-homogeneous monomials and polynomials.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::weights::HypersurfaceFamily;

/// Default cap on the number of monomials [`enumerate_monomials`] returns.
pub const DEFAULT_MONOMIAL_CAP: u128 = 1_000_000;

/// Exponents of a monomial, one per variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(pub Vec<u32>);

impl ExponentVector {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weighted_degree(&self, weights: &[u64]) -> u128 {
        self.0
            .iter()
            .zip(weights)
            .map(|(&e, &a)| e as u128 * a as u128)
            .sum()
    }

    /// If this is `x_i^b` or `x_i^b x_j` with `b >= 1`, returns `(b, j)`.
    pub fn witness_shape(&self, i: usize) -> Option<(u32, Option<usize>)> {
        let b = *self.0.get(i)?;
        if b == 0 {
            return None;
        }
        let mut companion = None;
        for (j, &e) in self.0.iter().enumerate() {
            if j == i || e == 0 {
                continue;
            }
            if e != 1 || companion.is_some() {
                return None;
            }
            companion = Some(j);
        }
        Some((b, companion))
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            match e {
                1 => write!(f, "x{i}")?,
                _ => write!(f, "x{i}^{e}")?,
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Number of exponent vectors of weighted degree `m` (saturating).
pub fn graded_dimension(weights: &[u64], m: u64) -> u128 {
    let m = m as usize;
    let mut counts = vec![0u128; m + 1];
    counts[0] = 1;
    for &a in weights {
        let a = a as usize;
        for x in a..=m {
            counts[x] = counts[x].saturating_add(counts[x - a]);
        }
    }
    counts[m]
}

/// All monomials of weighted degree `m`, in descending lexicographic order of
/// exponent vectors (so `x_0^k` comes first).
pub fn enumerate_monomials(weights: &[u64], m: u64) -> Result<Vec<ExponentVector>> {
    enumerate_monomials_capped(weights, m, DEFAULT_MONOMIAL_CAP)
}

pub fn enumerate_monomials_capped(
    weights: &[u64],
    m: u64,
    cap: u128,
) -> Result<Vec<ExponentVector>> {
    if weights.is_empty() || weights.contains(&0) {
        return Err(Error::Validation(
            "weights must be nonempty and positive".into(),
        ));
    }
    let count = graded_dimension(weights, m);
    if count > cap {
        return Err(Error::resource("monomials in graded piece", count, cap));
    }

    fn go(
        weights: &[u64],
        var: usize,
        rest: u64,
        current: &mut Vec<u32>,
        out: &mut Vec<ExponentVector>,
    ) {
        let a = weights[var];
        if var + 1 == weights.len() {
            if rest.is_multiple_of(a) {
                current.push((rest / a) as u32);
                out.push(ExponentVector(current.clone()));
                current.pop();
            }
            return;
        }
        for e in (0..=rest / a).rev() {
            current.push(e as u32);
            go(weights, var + 1, rest - e * a, current, out);
            current.pop();
        }
    }

    let mut out = Vec::with_capacity(count as usize);
    go(
        weights,
        0,
        m,
        &mut Vec::with_capacity(weights.len()),
        &mut out,
    );
    Ok(out)
}

/// The set of monomials of a polynomial of degree `d`, keyed to the caller's
/// variable order. Its rows form the exponent matrix `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolynomialSupport {
    family: HypersurfaceFamily,
    rows: Vec<ExponentVector>,
}

impl PolynomialSupport {
    pub fn new(family: HypersurfaceFamily, rows: Vec<ExponentVector>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::Validation("support has no monomials".into()));
        }
        let weights = family.weights.original();
        let mut seen = BTreeSet::new();
        for (k, row) in rows.iter().enumerate() {
            if row.len() != weights.len() {
                return Err(Error::Validation(format!(
                    "monomial {k} has {} exponents, expected {}",
                    row.len(),
                    weights.len()
                )));
            }
            let deg = row.weighted_degree(weights);
            if deg != family.degree as u128 {
                return Err(Error::Validation(format!(
                    "monomial {k} ({row}) has weighted degree {deg}, expected {}",
                    family.degree
                )));
            }
            if !seen.insert(row) {
                return Err(Error::Validation(format!(
                    "monomial {k} ({row}) is repeated"
                )));
            }
        }
        Ok(PolynomialSupport { family, rows })
    }

    /// Convenience constructor from raw exponent rows.
    pub fn from_rows(weights: &[u64], degree: u64, rows: &[&[u32]]) -> Result<Self> {
        let family = HypersurfaceFamily::from_weights(weights, degree)?;
        PolynomialSupport::new(
            family,
            rows.iter().map(|r| ExponentVector(r.to_vec())).collect(),
        )
    }

    /// Every monomial of degree `d`, as a support. Variables follow the
    /// family's canonical (non-increasing) order.
    pub fn full_graded_piece(family: &HypersurfaceFamily) -> Result<Self> {
        let canonical = family.weights.weights().to_vec();
        let rows = enumerate_monomials(&canonical, family.degree)?;
        let family = HypersurfaceFamily::from_weights(&canonical, family.degree)?;
        PolynomialSupport::new(family, rows)
    }

    /// Fermat support `x_0^d + ... + x_{n+1}^d` in ordinary projective space.
    pub fn fermat(n: usize, d: u64) -> Result<Self> {
        let m = n + 2;
        let rows = (0..m)
            .map(|i| {
                let mut e = vec![0u32; m];
                e[i] = d as u32;
                ExponentVector(e)
            })
            .collect();
        PolynomialSupport::new(HypersurfaceFamily::from_weights(&vec![1; m], d)?, rows)
    }

    pub fn family(&self) -> &HypersurfaceFamily {
        &self.family
    }

    /// Weights in the order the exponent vectors use.
    pub fn weights(&self) -> &[u64] {
        self.family.weights.original()
    }

    pub fn rows(&self) -> &[ExponentVector] {
        &self.rows
    }

    pub fn num_vars(&self) -> usize {
        self.weights().len()
    }

    pub fn exponent_matrix(&self) -> IntMatrix {
        let entries = self
            .rows
            .iter()
            .flat_map(|r| r.0.iter().map(|&e| BigInt::from(e)))
            .collect();
        IntMatrix::new(self.rows.len(), self.num_vars(), entries)
            .expect("support is nonempty with at least two variables")
    }

    /// Applies a permutation of variables: new variable `k` is old `perm[k]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let w: Vec<u64> = perm.iter().map(|&p| self.weights()[p]).collect();
        let rows = self
            .rows
            .iter()
            .map(|r| ExponentVector(perm.iter().map(|&p| r.0[p]).collect()))
            .collect();
        PolynomialSupport::new(
            HypersurfaceFamily::from_weights(&w, self.family.degree)?,
            rows,
        )
    }
}

/// A support row of shape `x_i^b` or `x_i^b x_j` chosen for variable `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Index into the support rows.
    pub row: usize,
    pub exponent: u32,
    pub companion: Option<usize>,
}

/// Per-variable outcome of the monomial existence test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialExistenceReport {
    /// `witnesses[i]` is the chosen row for variable `i`, if any.
    pub witnesses: Vec<Option<Witness>>,
    pub failing: Vec<usize>,
}

impl MonomialExistenceReport {
    pub fn pass(&self) -> bool {
        self.failing.is_empty()
    }
}

/// Picks the witness row for variable `i`: a pure power if present, else the
/// largest exponent, ties going to the smallest companion index.
pub(crate) fn select_witness(rows: &[ExponentVector], i: usize) -> Option<Witness> {
    rows.iter()
        .enumerate()
        .filter_map(|(row, r)| {
            r.witness_shape(i).map(|(exponent, companion)| Witness {
                row,
                exponent,
                companion,
            })
        })
        .min_by(|x, y| {
            let key = |w: &Witness| {
                (
                    w.companion.is_some(),
                    std::cmp::Reverse(w.exponent),
                    w.companion.unwrap_or(0),
                )
            };
            key(x).cmp(&key(y))
        })
}

/// For every variable `x_i`, looks for a support monomial `x_i^k` or
/// `x_i^k x_j`. A quasismooth member must contain one for each `i`.
pub fn monomial_existence_check(p: &PolynomialSupport) -> MonomialExistenceReport {
    let witnesses: Vec<Option<Witness>> = (0..p.num_vars())
        .map(|i| select_witness(p.rows(), i))
        .collect();
    let failing = witnesses
        .iter()
        .enumerate()
        .filter(|(_, w)| w.is_none())
        .map(|(i, _)| i)
        .collect();
    MonomialExistenceReport { witnesses, failing }
}

/// A polynomial with exact rational coefficients whose terms all share one
/// weighted degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedPolynomial {
    weights: Vec<u64>,
    degree: i128,
    terms: BTreeMap<ExponentVector, BigRational>,
}

impl WeightedPolynomial {
    /// Validates every term against the family: exponent length, weighted
    /// degree, no duplicates, no zero coefficients.
    pub fn new(
        family: &HypersurfaceFamily,
        terms: Vec<(BigRational, ExponentVector)>,
    ) -> Result<Self> {
        let weights = family.weights.original().to_vec();
        let mut map = BTreeMap::new();
        for (k, (c, e)) in terms.into_iter().enumerate() {
            if e.len() != weights.len() {
                return Err(Error::Validation(format!(
                    "term {k} has {} exponents, expected {}",
                    e.len(),
                    weights.len()
                )));
            }
            let deg = e.weighted_degree(&weights);
            if deg != family.degree as u128 {
                return Err(Error::Validation(format!(
                    "term {k} ({e}) has weighted degree {deg}, expected {}",
                    family.degree
                )));
            }
            if c.is_zero() {
                return Err(Error::Validation(format!(
                    "term {k} ({e}) has zero coefficient"
                )));
            }
            if map.insert(e.clone(), c).is_some() {
                return Err(Error::Validation(format!("term {k} ({e}) is repeated")));
            }
        }
        Ok(WeightedPolynomial {
            weights,
            degree: family.degree as i128,
            terms: map,
        })
    }

    /// Attaches coefficients to a support; `None` means all coefficients 1.
    pub fn from_support(
        support: &PolynomialSupport,
        coefficients: Option<&[BigRational]>,
    ) -> Result<Self> {
        let coeffs: Vec<BigRational> = match coefficients {
            Some(c) if c.len() != support.rows().len() => {
                return Err(Error::Validation(format!(
                    "{} coefficients for {} monomials",
                    c.len(),
                    support.rows().len()
                )))
            }
            Some(c) => c.to_vec(),
            None => vec![BigRational::from_integer(1.into()); support.rows().len()],
        };
        WeightedPolynomial::new(
            support.family(),
            coeffs
                .into_iter()
                .zip(support.rows().iter().cloned())
                .collect(),
        )
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    /// Weighted degree; negative only for derivatives with respect to a
    /// variable heavier than the polynomial.
    pub fn degree(&self) -> i128 {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<ExponentVector, BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn accumulate(
        map: &mut BTreeMap<ExponentVector, BigRational>,
        e: ExponentVector,
        c: BigRational,
    ) {
        let entry = map.entry(e).or_insert_with(BigRational::zero);
        *entry += c;
    }

    fn pruned(
        mut map: BTreeMap<ExponentVector, BigRational>,
    ) -> BTreeMap<ExponentVector, BigRational> {
        map.retain(|_, c| !c.is_zero());
        map
    }
}

impl fmt::Display for WeightedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})*{e}")?;
        }
        Ok(())
    }
}

/// Formal partial derivative with respect to variable `i` (caller order).
pub fn partial_derivative(f: &WeightedPolynomial, i: usize) -> Result<WeightedPolynomial> {
    if i >= f.weights.len() {
        return Err(Error::Dimension(format!(
            "variable index {i} out of range for {} variables",
            f.weights.len()
        )));
    }
    let mut terms = BTreeMap::new();
    for (e, c) in &f.terms {
        let k = e.0[i];
        if k == 0 {
            continue;
        }
        let mut de = e.clone();
        de.0[i] -= 1;
        WeightedPolynomial::accumulate(&mut terms, de, c * BigRational::from_integer(k.into()));
    }
    Ok(WeightedPolynomial {
        weights: f.weights.clone(),
        degree: f.degree - f.weights[i] as i128,
        terms: WeightedPolynomial::pruned(terms),
    })
}

/// Checks `sum_i a_i x_i df/dx_i == d f` term by term in exact arithmetic.
pub fn euler_check(f: &WeightedPolynomial) -> bool {
    let mut lhs = BTreeMap::new();
    for (i, &a) in f.weights.iter().enumerate() {
        let fi = partial_derivative(f, i).expect("index in range");
        for (e, c) in fi.terms {
            let mut xe = e;
            xe.0[i] += 1;
            WeightedPolynomial::accumulate(&mut lhs, xe, c * BigRational::from_integer(a.into()));
        }
    }
    let d = BigRational::from_integer(f.degree.into());
    let rhs: BTreeMap<ExponentVector, BigRational> =
        f.terms.iter().map(|(e, c)| (e.clone(), c * &d)).collect();
    WeightedPolynomial::pruned(lhs) == WeightedPolynomial::pruned(rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ev(e: &[u32]) -> ExponentVector {
        ExponentVector(e.to_vec())
    }

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn fam(w: &[u64], d: u64) -> HypersurfaceFamily {
        HypersurfaceFamily::from_weights(w, d).unwrap()
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(enumerate_monomials(&[1, 1, 1], 3).unwrap().len(), 10);
        assert_eq!(
            enumerate_monomials(&[2, 3], 6).unwrap(),
            vec![ev(&[3, 0]), ev(&[0, 2])]
        );
        assert_eq!(
            enumerate_monomials(&[4, 3, 1], 4).unwrap(),
            vec![ev(&[1, 0, 0]), ev(&[0, 1, 1]), ev(&[0, 0, 4])]
        );
        assert_eq!(enumerate_monomials(&[2, 4], 3).unwrap(), vec![]);
        assert_eq!(enumerate_monomials(&[2, 4], 0).unwrap(), vec![ev(&[0, 0])]);
    }

    #[test]
    fn enumerate_respects_cap() {
        let err = enumerate_monomials_capped(&[1, 1, 1, 1], 30, 100).unwrap_err();
        assert!(matches!(
            err,
            Error::Resource {
                count: 5456,
                limit: 100,
                ..
            }
        ));
    }

    #[test]
    fn enumerate_is_sorted_descending_and_homogeneous() {
        let w = [3, 2, 2, 1];
        let mons = enumerate_monomials(&w, 11).unwrap();
        assert!(mons.windows(2).all(|p| p[0] > p[1]));
        assert!(mons.iter().all(|m| m.weighted_degree(&w) == 11));
    }

    /// Coefficient of t^m in prod 1/(1 - t^a) by truncated series products.
    fn series_dimension(weights: &[u64], m: usize) -> u128 {
        let mut series = vec![0u128; m + 1];
        series[0] = 1;
        for &a in weights {
            let geometric: Vec<u128> = (0..=m).map(|k| u128::from(k % a as usize == 0)).collect();
            let mut next = vec![0u128; m + 1];
            for i in 0..=m {
                for j in 0..=m - i {
                    next[i + j] += series[i] * geometric[j];
                }
            }
            series = next;
        }
        series[m]
    }

    proptest! {
        #[test]
        fn dimension_matches_power_series(weights in proptest::collection::vec(1u64..=10, 1..=5), m in 0u64..=40) {
            let mons = enumerate_monomials(&weights, m).unwrap();
            prop_assert_eq!(mons.len() as u128, series_dimension(&weights, m as usize));
        }
    }

    #[test]
    fn existence_examples() {
        let fermat =
            PolynomialSupport::from_rows(&[1, 1, 1], 4, &[&[4, 0, 0], &[0, 4, 0], &[0, 0, 4]])
                .unwrap();
        let r = monomial_existence_check(&fermat);
        assert!(r.pass());
        for i in 0..3 {
            assert_eq!(
                r.witnesses[i],
                Some(Witness {
                    row: i,
                    exponent: 4,
                    companion: None
                })
            );
        }

        let klein =
            PolynomialSupport::from_rows(&[1, 1, 1], 4, &[&[1, 3, 0], &[0, 1, 3], &[3, 0, 1]])
                .unwrap();
        let r = monomial_existence_check(&klein);
        assert!(r.pass());
        // x_0 is witnessed by x_2 x_0^3.
        assert_eq!(
            r.witnesses[0],
            Some(Witness {
                row: 2,
                exponent: 3,
                companion: Some(2)
            })
        );
        assert_eq!(
            r.witnesses[1],
            Some(Witness {
                row: 0,
                exponent: 3,
                companion: Some(0)
            })
        );
        assert_eq!(
            r.witnesses[2],
            Some(Witness {
                row: 1,
                exponent: 3,
                companion: Some(1)
            })
        );

        let xyz = PolynomialSupport::from_rows(&[1, 1, 1], 3, &[&[1, 1, 1]]).unwrap();
        let r = monomial_existence_check(&xyz);
        assert!(!r.pass());
        assert_eq!(r.failing, vec![0, 1, 2]);
    }

    #[test]
    fn witness_prefers_pure_power_then_larger_exponent() {
        // weights (1,1,1), d = 4: x0^4, x0^3 x1, x0^3 x2.
        let s = PolynomialSupport::from_rows(&[1, 1, 1], 4, &[&[3, 0, 1], &[3, 1, 0], &[4, 0, 0]])
            .unwrap();
        assert_eq!(
            select_witness(s.rows(), 0),
            Some(Witness {
                row: 2,
                exponent: 4,
                companion: None
            })
        );
        let s = PolynomialSupport::from_rows(&[1, 1, 1], 4, &[&[3, 0, 1], &[3, 1, 0]]).unwrap();
        assert_eq!(
            select_witness(s.rows(), 0),
            Some(Witness {
                row: 1,
                exponent: 3,
                companion: Some(1)
            })
        );
        // x1 x0^3 is not of the shape x1^k or x1^k x_j.
        assert_eq!(select_witness(s.rows(), 1), None);
    }

    #[test]
    fn support_validation() {
        let err =
            PolynomialSupport::from_rows(&[1, 1, 1], 4, &[&[4, 0, 0], &[0, 3, 0]]).unwrap_err();
        assert!(matches!(err, Error::Validation(ref m) if m.contains("monomial 1")));
        assert!(PolynomialSupport::from_rows(&[1, 1, 1], 4, &[&[4, 0, 0], &[4, 0, 0]]).is_err());
        assert!(PolynomialSupport::from_rows(&[1, 1, 1], 4, &[&[4, 0]]).is_err());
        assert!(PolynomialSupport::from_rows(&[1, 1, 1], 4, &[]).is_err());
    }

    #[test]
    fn derivative_examples() {
        let f = WeightedPolynomial::new(&fam(&[1, 1], 4), vec![(q(1), ev(&[4, 0]))]).unwrap();
        let d0 = partial_derivative(&f, 0).unwrap();
        assert_eq!(d0.terms().get(&ev(&[3, 0])), Some(&q(4)));
        assert_eq!(d0.degree(), 3);

        let f = WeightedPolynomial::new(&fam(&[1, 1], 4), vec![(q(1), ev(&[1, 3]))]).unwrap();
        let d1 = partial_derivative(&f, 1).unwrap();
        assert_eq!(d1.terms().len(), 1);
        assert_eq!(d1.terms().get(&ev(&[1, 2])), Some(&q(3)));

        let f = WeightedPolynomial::new(&fam(&[3, 1], 2), vec![(q(1), ev(&[0, 2]))]).unwrap();
        let d0 = partial_derivative(&f, 0).unwrap();
        assert!(d0.is_zero());
        assert_eq!(d0.degree(), -1);
        assert!(partial_derivative(&f, 2).is_err());
    }

    #[test]
    fn polynomial_validation() {
        let fm = fam(&[1, 1], 2);
        assert!(WeightedPolynomial::new(&fm, vec![(q(0), ev(&[2, 0]))]).is_err());
        assert!(WeightedPolynomial::new(&fm, vec![(q(1), ev(&[3, 0]))]).is_err());
        assert!(
            WeightedPolynomial::new(&fm, vec![(q(1), ev(&[1, 1])), (q(2), ev(&[1, 1]))]).is_err()
        );
    }

    #[test]
    fn euler_examples() {
        let f = WeightedPolynomial::new(
            &fam(&[1, 1, 1], 4),
            vec![
                (q(1), ev(&[4, 0, 0])),
                (q(1), ev(&[0, 4, 0])),
                (q(1), ev(&[0, 0, 4])),
            ],
        )
        .unwrap();
        assert!(euler_check(&f));
        let f = WeightedPolynomial::new(
            &fam(&[3, 1, 1], 6),
            vec![
                (q(1), ev(&[2, 0, 0])),
                (q(1), ev(&[0, 6, 0])),
                (q(1), ev(&[0, 0, 6])),
            ],
        )
        .unwrap();
        assert!(euler_check(&f));
    }

    proptest! {
        #[test]
        fn euler_identity_holds(
            weights in proptest::collection::vec(1u64..=9, 2..=5),
            d in 1u64..=30,
            picks in proptest::collection::vec((any::<proptest::sample::Index>(), -50i64..=50, 1i64..=9), 1..=8),
        ) {
            let mons = enumerate_monomials(&weights, d).unwrap();
            prop_assume!(!mons.is_empty());
            let mut terms: BTreeMap<ExponentVector, BigRational> = BTreeMap::new();
            for (idx, num, den) in picks {
                if num == 0 { continue; }
                terms.insert(idx.get(&mons).clone(), BigRational::new(num.into(), den.into()));
            }
            prop_assume!(!terms.is_empty());
            let f = WeightedPolynomial::new(&fam(&weights, d), terms.into_iter().map(|(e, c)| (c, e)).collect()).unwrap();
            prop_assert!(euler_check(&f));
        }
    }
}
