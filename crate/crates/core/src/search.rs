//! Enumeration of hypersurface families under weight, degree and
//! classification constraints.

use num_integer::Integer;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::quasismooth::{quasismooth_exists_fast, singletons_pass};
use crate::weights::{CanonicalKind, HypersurfaceFamily};

/// Default cap on the number of raw `(weights, degree)` candidates.
pub const DEFAULT_MAX_CANDIDATES: u128 = 500_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConstraints {
    /// Hypersurface dimension; families have `n + 2` weights.
    pub dimension: usize,
    pub canonical_kind: Option<CanonicalKind>,
    pub max_degree: u64,
    pub max_weight: u64,
    pub require_well_formed: bool,
    pub require_quasismooth: bool,
    pub exclude_linear_cones: bool,
    pub max_candidates: u128,
}

impl SearchConstraints {
    /// Well-formed, quasismooth, non-cone Calabi-Yau families of dimension
    /// `n` with `d <= max_degree`. Weights are bounded by the degree.
    pub fn calabi_yau(dimension: usize, max_degree: u64) -> Self {
        SearchConstraints {
            dimension,
            canonical_kind: Some(CanonicalKind::CalabiYau),
            max_degree,
            max_weight: max_degree.max(1),
            require_well_formed: true,
            require_quasismooth: true,
            exclude_linear_cones: true,
            max_candidates: DEFAULT_MAX_CANDIDATES,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.max_degree == 0 || self.max_weight == 0 {
            return Err(Error::Validation(
                "max_degree and max_weight must be at least 1".into(),
            ));
        }
        Ok(())
    }

    fn is_calabi_yau(&self) -> bool {
        self.canonical_kind == Some(CanonicalKind::CalabiYau)
    }

    /// Raw candidates: non-increasing weight tuples, times admissible
    /// degrees. For Calabi-Yau searches the degree is the weight sum.
    pub fn candidate_count(&self) -> u128 {
        let len = self.dimension + 2;
        if self.is_calabi_yau() {
            let w = self.max_weight.min(self.max_degree) as usize;
            let d = self.max_degree as usize;
            // ways[k][s]: non-increasing k-tuples with entries <= m summing to s,
            // updated as m grows.
            let mut ways = vec![vec![0u128; d + 1]; len + 1];
            ways[0][0] = 1;
            for m in 1..=w {
                for k in 1..=len {
                    for s in m..=d {
                        let add = ways[k - 1][s - m];
                        ways[k][s] = ways[k][s].saturating_add(add);
                    }
                }
            }
            ways[len].iter().fold(0u128, |a, &b| a.saturating_add(b))
        } else {
            // C(max_weight + len - 1, len) multisets, times max_degree degrees.
            let top = self.max_weight as u128 + len as u128 - 1;
            let mut tuples: u128 = 1;
            for k in 0..len as u128 {
                tuples = match tuples.checked_mul(top - k) {
                    Some(t) => t / (k + 1),
                    None => return u128::MAX,
                };
            }
            tuples.saturating_mul(self.max_degree as u128)
        }
    }
}

fn well_formed(w: &[u64]) -> bool {
    (0..w.len()).all(|i| {
        w.iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .fold(0u64, |g, (_, &a)| g.gcd(&a))
            == 1
    })
}

fn kind_of(w: &[u64], d: u64) -> CanonicalKind {
    let s: u128 = w.iter().map(|&a| a as u128).sum();
    match (d as u128).cmp(&s) {
        std::cmp::Ordering::Less => CanonicalKind::Fano,
        std::cmp::Ordering::Equal => CanonicalKind::CalabiYau,
        std::cmp::Ordering::Greater => CanonicalKind::GeneralType,
    }
}

fn accept(c: &SearchConstraints, w: &[u64], d: u64) -> Result<bool> {
    // Degrees below the smallest weight give empty families.
    if d < *w.last().unwrap() {
        return Ok(false);
    }
    if let Some(kind) = c.canonical_kind {
        if kind_of(w, d) != kind {
            return Ok(false);
        }
    }
    if c.require_well_formed && !well_formed(w) {
        return Ok(false);
    }
    let cone = w.contains(&d);
    if c.exclude_linear_cones && cone {
        return Ok(false);
    }
    if c.require_quasismooth && !cone {
        if !singletons_pass(w, d) {
            return Ok(false);
        }
        let fam = HypersurfaceFamily::from_weights(w, d)?;
        if !quasismooth_exists_fast(&fam)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Extends `prefix` to full non-increasing tuples and collects accepted
/// `(weights, degree)` pairs.
fn walk(
    c: &SearchConstraints,
    len: usize,
    prefix: &mut Vec<u64>,
    sum: u64,
    out: &mut Vec<(u64, Vec<u64>)>,
) -> Result<()> {
    if prefix.len() == len {
        if c.is_calabi_yau() {
            if accept(c, prefix, sum)? {
                out.push((sum, prefix.clone()));
            }
        } else {
            for d in 1..=c.max_degree {
                if accept(c, prefix, d)? {
                    out.push((d, prefix.clone()));
                }
            }
        }
        return Ok(());
    }
    let mut hi = *prefix.last().unwrap();
    if c.is_calabi_yau() {
        let rest = (len - prefix.len() - 1) as u64;
        let room = c.max_degree.saturating_sub(sum + rest);
        hi = hi.min(room);
    }
    for a in 1..=hi {
        prefix.push(a);
        walk(c, len, prefix, sum + a, out)?;
        prefix.pop();
    }
    Ok(())
}

/// All families meeting the constraints, one per weight multiset, with
/// weights non-increasing, sorted by degree and then by weights.
pub fn enumerate_families(c: &SearchConstraints) -> Result<Vec<HypersurfaceFamily>> {
    c.validate()?;
    let count = c.candidate_count();
    if count > c.max_candidates {
        return Err(Error::resource(
            "search candidates",
            count,
            c.max_candidates,
        ));
    }
    let len = c.dimension + 2;
    let mut top = c.max_weight;
    if c.is_calabi_yau() {
        top = top.min(c.max_degree.saturating_sub(len as u64 - 1));
    }
    let chunks: Vec<Vec<(u64, Vec<u64>)>> = (1..=top)
        .into_par_iter()
        .map(|lead| {
            let mut out = Vec::new();
            walk(c, len, &mut vec![lead], lead, &mut out)?;
            Ok(out)
        })
        .collect::<Result<_>>()?;
    let mut found: Vec<(u64, Vec<u64>)> = chunks.into_iter().flatten().collect();
    found.sort();
    found
        .into_iter()
        .map(|(d, w)| HypersurfaceFamily::from_weights(&w, d))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quasismooth::{is_linear_cone, quasismooth_exists};
    use crate::weights::{canonical_class, is_well_formed};

    fn pairs(fams: &[HypersurfaceFamily]) -> Vec<(Vec<u64>, u64)> {
        fams.iter()
            .map(|f| (f.weights.weights().to_vec(), f.degree))
            .collect()
    }

    #[test]
    fn elliptic_census() {
        let fams = enumerate_families(&SearchConstraints::calabi_yau(1, 30)).unwrap();
        assert_eq!(
            pairs(&fams),
            vec![(vec![1, 1, 1], 3), (vec![2, 1, 1], 4), (vec![3, 2, 1], 6)]
        );
    }

    #[test]
    fn tiny_degree_is_empty() {
        assert!(enumerate_families(&SearchConstraints::calabi_yau(1, 2))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn results_are_reverified() {
        let fams = enumerate_families(&SearchConstraints::calabi_yau(2, 60)).unwrap();
        assert!(!fams.is_empty());
        for f in &fams {
            assert!(is_well_formed(&f.weights));
            assert!(quasismooth_exists(f).unwrap().exists);
            assert!(!is_linear_cone(f));
            assert_eq!(canonical_class(f).kind, CanonicalKind::CalabiYau);
        }
    }

    #[test]
    fn non_calabi_yau_search_matches_brute_force() {
        let c = SearchConstraints {
            dimension: 1,
            canonical_kind: None,
            max_degree: 12,
            max_weight: 5,
            require_well_formed: true,
            require_quasismooth: true,
            exclude_linear_cones: false,
            max_candidates: DEFAULT_MAX_CANDIDATES,
        };
        let got = pairs(&enumerate_families(&c).unwrap());
        let mut expect = Vec::new();
        for d in 1..=12u64 {
            for a in 1..=5u64 {
                for b in 1..=a {
                    for cc in 1..=b {
                        let f = HypersurfaceFamily::from_weights(&[a, b, cc], d).unwrap();
                        if d >= cc
                            && is_well_formed(&f.weights)
                            && quasismooth_exists(&f).unwrap().exists
                        {
                            expect.push((vec![a, b, cc], d));
                        }
                    }
                }
            }
        }
        assert_eq!(got, expect);
    }

    #[test]
    fn candidate_count_matches_walk() {
        let c = SearchConstraints {
            require_well_formed: false,
            require_quasismooth: false,
            exclude_linear_cones: false,
            ..SearchConstraints::calabi_yau(2, 40)
        };
        let all = enumerate_families(&c).unwrap();
        assert_eq!(all.len() as u128, c.candidate_count());

        let c = SearchConstraints {
            canonical_kind: None,
            max_weight: 6,
            max_degree: 1,
            ..c
        };
        // At d = 1 only tuples containing a weight 1 survive: C(8, 3) of them.
        assert_eq!(c.candidate_count(), 126);
        assert_eq!(enumerate_families(&c).unwrap().len(), 56);
    }

    #[test]
    fn cap_is_enforced() {
        let c = SearchConstraints {
            max_candidates: 10,
            ..SearchConstraints::calabi_yau(2, 40)
        };
        assert!(matches!(
            enumerate_families(&c),
            Err(Error::Resource { .. })
        ));
        let c = SearchConstraints {
            max_degree: 0,
            ..SearchConstraints::calabi_yau(1, 1)
        };
        assert!(matches!(enumerate_families(&c), Err(Error::Validation(_))));
    }
}
