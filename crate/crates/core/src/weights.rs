//! Weight systems, hypersurface families and the classifiers that depend
//! only on the weights and the degree.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An ordered list of positive weights `a_0, ..., a_{n+1}`.
///
/// Family-level criteria use the canonical non-increasing order. The order
/// the caller supplied is retained because explicit exponent vectors are
/// keyed to it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightSystem {
    original: Vec<u64>,
    canonical: Vec<u64>,
    /// `canonical[k] == original[to_original[k]]`
    to_original: Vec<usize>,
}

impl WeightSystem {
    pub fn new(weights: &[u64]) -> Result<Self> {
        if weights.len() < 2 {
            return Err(Error::Validation(format!(
                "a weight system needs at least 2 weights, got {}",
                weights.len()
            )));
        }
        if let Some(i) = weights.iter().position(|&a| a == 0) {
            return Err(Error::Validation(format!("weight at index {i} is zero")));
        }
        let mut to_original: Vec<usize> = (0..weights.len()).collect();
        // Stable sort keeps equal weights in input order.
        to_original.sort_by(|&i, &j| weights[j].cmp(&weights[i]));
        let canonical = to_original.iter().map(|&i| weights[i]).collect();
        Ok(WeightSystem {
            original: weights.to_vec(),
            canonical,
            to_original,
        })
    }

    /// Weights in non-increasing order.
    pub fn weights(&self) -> &[u64] {
        &self.canonical
    }

    /// Weights in the order they were supplied.
    pub fn original(&self) -> &[u64] {
        &self.original
    }

    /// Maps a canonical position to the caller's index.
    pub fn original_index(&self, canonical_pos: usize) -> usize {
        self.to_original[canonical_pos]
    }

    pub fn len(&self) -> usize {
        self.original.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Hypersurface dimension `n = len - 2`.
    pub fn dimension(&self) -> usize {
        self.original.len() - 2
    }

    pub fn max(&self) -> u64 {
        self.canonical[0]
    }

    pub fn min(&self) -> u64 {
        *self.canonical.last().unwrap()
    }

    pub fn sum(&self) -> u128 {
        self.original.iter().map(|&a| a as u128).sum()
    }

    pub fn product(&self) -> BigInt {
        self.original.iter().map(|&a| BigInt::from(a)).product()
    }

    pub fn gcd(&self) -> u64 {
        self.original.iter().fold(0, |g, &a| g.gcd(&a))
    }

    /// `(weight, multiplicity)` pairs, largest weight first.
    pub fn multiplicities(&self) -> Vec<(u64, usize)> {
        let mut out: Vec<(u64, usize)> = Vec::new();
        for &a in &self.canonical {
            match out.last_mut() {
                Some((b, n)) if *b == a => *n += 1,
                _ => out.push((a, 1)),
            }
        }
        out
    }

    /// Indices `i` (caller order) whose omission leaves weights with a common
    /// factor, together with that factor.
    pub fn well_formedness_failures(&self) -> Vec<(usize, u64)> {
        (0..self.original.len())
            .filter_map(|i| {
                let g = self
                    .original
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .fold(0u64, |g, (_, &a)| g.gcd(&a));
                (g != 1).then_some((i, g))
            })
            .collect()
    }
}

impl fmt::Display for WeightSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.original.iter().map(|a| a.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A weight system together with a degree `d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HypersurfaceFamily {
    pub weights: WeightSystem,
    pub degree: u64,
}

impl HypersurfaceFamily {
    pub fn new(weights: WeightSystem, degree: u64) -> Result<Self> {
        if degree == 0 {
            return Err(Error::Validation("degree must be positive".into()));
        }
        Ok(HypersurfaceFamily { weights, degree })
    }

    pub fn from_weights(weights: &[u64], degree: u64) -> Result<Self> {
        HypersurfaceFamily::new(WeightSystem::new(weights)?, degree)
    }

    pub fn dimension(&self) -> usize {
        self.weights.dimension()
    }

    /// A degree below every weight admits no nonzero polynomial at all.
    pub fn is_degenerate(&self) -> bool {
        self.degree < self.weights.min()
    }
}

impl fmt::Display for HypersurfaceFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X_{} in P{}", self.degree, self.weights)
    }
}

/// Sign class of `K_X = O_X(d - sum a_i)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CanonicalKind {
    Fano,
    CalabiYau,
    GeneralType,
}

impl fmt::Display for CanonicalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CanonicalKind::Fano => "Fano",
            CanonicalKind::CalabiYau => "Calabi-Yau",
            CanonicalKind::GeneralType => "general type",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalClassReport {
    /// `d - sum a_i`
    pub r: i128,
    pub kind: CanonicalKind,
}

/// When every automorphism of a well-formed quasismooth non-cone member
/// extends to the ambient space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Linearity {
    /// `n >= 3`, or `n = 2` with nontrivial canonical class.
    AllLinear,
    /// K3 surfaces (`n = 2`, `d = sum a_i`); non-linear automorphisms can occur.
    MaybeNonLinear,
    /// Curves and points: outside the range of the extension theorem.
    OutOfRange,
}

pub fn is_well_formed(w: &WeightSystem) -> bool {
    w.well_formedness_failures().is_empty()
}

pub fn canonical_class(fam: &HypersurfaceFamily) -> CanonicalClassReport {
    let r = fam.degree as i128 - fam.weights.sum() as i128;
    let kind = match r {
        r if r < 0 => CanonicalKind::Fano,
        0 => CanonicalKind::CalabiYau,
        _ => CanonicalKind::GeneralType,
    };
    CanonicalClassReport { r, kind }
}

/// Assumes the caller has established well-formedness, quasismoothness and
/// that the family is not a linear cone.
pub fn aut_equals_lin(fam: &HypersurfaceFamily) -> Linearity {
    match fam.dimension() {
        0 | 1 => Linearity::OutOfRange,
        2 if fam.weights.sum() == fam.degree as u128 => Linearity::MaybeNonLinear,
        _ => Linearity::AllLinear,
    }
}

/// `n >= 1` and `d >= 5 * max a_i`: the very general member has only central
/// (diagonal) linear automorphisms.
pub fn genericity_condition(fam: &HypersurfaceFamily) -> bool {
    fam.dimension() >= 1 && fam.degree as u128 >= 5 * fam.weights.max() as u128
}
