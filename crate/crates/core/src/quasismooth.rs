//! Existence of quasismooth members in a family, decided from the weights and
//! degree alone.
//!
//! A quasismooth hypersurface of degree `d` exists iff either some weight
//! equals `d` (a linear cone), or for every nonempty index set `I`:
//!
//! * (a) `d` lies in the semigroup generated by `{a_i : i in I}`, or
//! * (b) at least `|I|` indices `j` outside `I` have `d - a_j` in that
//!   semigroup.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::representable_table;
use crate::weights::HypersurfaceFamily;

/// Largest number of variables for which all subsets are scanned.
pub const MAX_SUBSET_VARIABLES: usize = 24;

/// Outcome of the subset condition for one index set `I`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsetOutcome {
    /// Canonical positions (weights sorted non-increasing).
    pub indices: Vec<usize>,
    pub weights: Vec<u64>,
    /// `d` is a nonnegative combination of the weights in `I`.
    pub condition_a: bool,
    /// Indices `j` outside `I` with `d - a_j` a nonnegative combination of
    /// the weights in `I`.
    pub witnesses_b: Vec<usize>,
    /// `|I|`
    pub required: usize,
}

impl SubsetOutcome {
    pub fn satisfied(&self) -> bool {
        self.condition_a || self.witnesses_b.len() >= self.required
    }
}

pub type SubsetFailure = SubsetOutcome;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuasismoothReport {
    pub exists: bool,
    pub is_linear_cone: bool,
    /// Failing subsets in canonical order (by size, then lexicographic).
    /// Empty for linear cones, whose scan is skipped.
    pub failing_subsets: Vec<SubsetFailure>,
}

/// Some weight equals the degree, so a member contains a bare variable.
pub fn is_linear_cone(fam: &HypersurfaceFamily) -> bool {
    fam.weights.weights().contains(&fam.degree)
}

/// Evaluates the subset condition for `subset` (canonical positions).
pub fn evaluate_subset(fam: &HypersurfaceFamily, subset: &[usize]) -> Result<SubsetOutcome> {
    let w = fam.weights.weights();
    if subset.is_empty() || subset.iter().any(|&i| i >= w.len()) {
        return Err(Error::Validation(format!("bad index subset {subset:?}")));
    }
    let d = fam.degree;
    let gens: Vec<u64> = subset.iter().map(|&i| w[i]).collect();
    let table = representable_table(d, &gens)?;
    let witnesses_b = (0..w.len())
        .filter(|j| !subset.contains(j))
        .filter(|&j| w[j] <= d && table[(d - w[j]) as usize])
        .collect();
    Ok(SubsetOutcome {
        indices: subset.to_vec(),
        weights: gens,
        condition_a: table[d as usize],
        witnesses_b,
        required: subset.len(),
    })
}

/// Visits the nonempty subsets of `0..n` by increasing size, lexicographic
/// within a size. Stops when `visit` returns `false`.
fn for_each_subset(n: usize, mut visit: impl FnMut(&[usize]) -> Result<bool>) -> Result<()> {
    fn combos(
        n: usize,
        k: usize,
        start: usize,
        cur: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]) -> Result<bool>,
    ) -> Result<bool> {
        if cur.len() == k {
            return visit(cur);
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            let go_on = combos(n, k, i + 1, cur, visit)?;
            cur.pop();
            if !go_on {
                return Ok(false);
            }
        }
        Ok(true)
    }
    for k in 1..=n {
        if !combos(n, k, 0, &mut Vec::with_capacity(k), &mut visit)? {
            break;
        }
    }
    Ok(())
}

fn check_size(fam: &HypersurfaceFamily) -> Result<()> {
    let n = fam.weights.len();
    if n > MAX_SUBSET_VARIABLES {
        return Err(Error::resource(
            "variables for subset scan",
            n as u128,
            MAX_SUBSET_VARIABLES as u128,
        ));
    }
    Ok(())
}

/// Full report listing every failing subset.
pub fn quasismooth_exists(fam: &HypersurfaceFamily) -> Result<QuasismoothReport> {
    scan(fam, true)
}

/// Same verdict as [`quasismooth_exists`], stopping at the first failure.
pub fn quasismooth_exists_fast(fam: &HypersurfaceFamily) -> Result<bool> {
    Ok(scan(fam, false)?.exists)
}

fn scan(fam: &HypersurfaceFamily, diagnostics: bool) -> Result<QuasismoothReport> {
    check_size(fam)?;
    if is_linear_cone(fam) {
        return Ok(QuasismoothReport {
            exists: true,
            is_linear_cone: true,
            failing_subsets: Vec::new(),
        });
    }
    let mut failing = Vec::new();
    for_each_subset(fam.weights.len(), |subset| {
        let outcome = evaluate_subset(fam, subset)?;
        if !outcome.satisfied() {
            failing.push(outcome);
            return Ok(diagnostics);
        }
        Ok(true)
    })?;
    Ok(QuasismoothReport {
        exists: failing.is_empty(),
        is_linear_cone: false,
        failing_subsets: failing,
    })
}

/// Cheap necessary condition: every singleton subset is satisfied, i.e. each
/// `x_i` has a degree-`d` monomial `x_i^k` or `x_i^k x_j`.
pub(crate) fn singletons_pass(weights: &[u64], d: u64) -> bool {
    weights.iter().enumerate().all(|(i, &a)| {
        d.is_multiple_of(a)
            || weights
                .iter()
                .enumerate()
                .any(|(j, &b)| j != i && b <= d && (d - b).is_multiple_of(a))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomials::{monomial_existence_check, PolynomialSupport};

    fn fam(w: &[u64], d: u64) -> HypersurfaceFamily {
        HypersurfaceFamily::from_weights(w, d).unwrap()
    }

    #[test]
    fn examples() {
        let r = quasismooth_exists(&fam(&[1, 1, 1, 1], 4)).unwrap();
        assert!(r.exists && !r.is_linear_cone && r.failing_subsets.is_empty());

        assert!(
            quasismooth_exists(&fam(&[36, 31, 30, 25], 180))
                .unwrap()
                .exists
        );

        let r = quasismooth_exists(&fam(&[1, 1, 3], 5)).unwrap();
        assert!(!r.exists);
        // Canonical order is (3,1,1): the weight-3 variable sits at position 0.
        let first = &r.failing_subsets[0];
        assert_eq!(first.indices, vec![0]);
        assert_eq!(first.weights, vec![3]);
        assert!(!first.condition_a);
        assert!(first.witnesses_b.is_empty());
        assert_eq!(first.required, 1);
        assert!(r.failing_subsets.iter().all(|f| f.indices.contains(&0)));
    }

    #[test]
    fn fast_path_agrees() {
        for (w, d) in [
            (&[1u64, 1, 3][..], 5),
            (&[1, 1, 1, 1], 4),
            (&[2, 3, 5], 7),
            (&[5, 5, 4, 4], 20),
        ] {
            let f = fam(w, d);
            assert_eq!(
                quasismooth_exists_fast(&f).unwrap(),
                quasismooth_exists(&f).unwrap().exists
            );
        }
    }

    #[test]
    fn linear_cone_examples() {
        assert!(is_linear_cone(&fam(&[2, 1, 1, 1, 1], 2)));
        assert!(!is_linear_cone(&fam(&[1, 1, 1], 3)));
        assert!(is_linear_cone(&fam(&[5, 5, 4, 4], 5)));
        let r = quasismooth_exists(&fam(&[2, 1, 1, 1, 1], 2)).unwrap();
        assert!(r.exists && r.is_linear_cone);
    }

    #[test]
    fn pair_subset_can_fail_when_singletons_pass() {
        // Find a family passing every singleton but failing a larger subset.
        let mut found = None;
        'outer: for a in 1..=9u64 {
            for b in 1..=a {
                for c in 1..=b {
                    for d in 2..=30u64 {
                        let f = fam(&[a, b, c], d);
                        if is_linear_cone(&f) || !singletons_pass(f.weights.weights(), d) {
                            continue;
                        }
                        let r = quasismooth_exists(&f).unwrap();
                        if !r.exists {
                            found = Some(r);
                            break 'outer;
                        }
                    }
                }
            }
        }
        let r = found.expect("some family fails only on a larger subset");
        assert!(r.failing_subsets.iter().all(|s| s.indices.len() >= 2));
    }

    #[test]
    fn too_many_variables() {
        let f = fam(&[1; 25], 5);
        assert!(matches!(
            quasismooth_exists(&f),
            Err(Error::Resource { .. })
        ));
    }

    #[test]
    fn permutation_invariant() {
        for (w, d) in [
            (vec![3u64, 1, 1], 5),
            (vec![7, 5, 3, 2], 17),
            (vec![6, 4, 3, 1], 12),
        ] {
            let base = quasismooth_exists(&fam(&w, d)).unwrap().exists;
            let mut r = w.clone();
            r.reverse();
            assert_eq!(quasismooth_exists(&fam(&r, d)).unwrap().exists, base);
            r.rotate_left(1);
            assert_eq!(quasismooth_exists(&fam(&r, d)).unwrap().exists, base);
        }
    }

    #[test]
    fn full_graded_piece_passes_monomial_existence() {
        for a in 1..=6u64 {
            for b in 1..=a {
                for c in 1..=b {
                    for d in 1..=24u64 {
                        let f = fam(&[a, b, c], d);
                        let r = quasismooth_exists(&f).unwrap();
                        if !r.exists || r.is_linear_cone {
                            continue;
                        }
                        let s = PolynomialSupport::full_graded_piece(&f).unwrap();
                        assert!(monomial_existence_check(&s).pass(), "{f}");
                    }
                }
            }
        }
    }
}
