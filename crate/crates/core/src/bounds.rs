//! Finiteness of the linear automorphism group and explicit order bounds.
//!
//! For a well-formed quasismooth family with finite `Lin(X)`,
//!
//! ```text
//! |Lin(X)| <= J(Aut S) * d^{n+1} / (a_0 ... a_{n+1})
//! ```
//!
//! where `J(Aut S)` is the weak Jordan constant of the graded automorphism
//! group of the weighted polynomial ring. That constant is the product of
//! `J_N` over the multiplicities `N` of repeated weights, with `J_N` the weak
//! Jordan constant of `GL_N(C)`. The exponent is `n+1`, not `n+2`: abelian
//! subgroups fixing `f` have order at most `d^{n+2} / prod a_i`, and the
//! scalar kernel of order `d` is divided out.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::partitions_of;
use crate::weights::{HypersurfaceFamily, WeightSystem};

/// Sizes from which `(N+1)!` is the built-in default.
pub const FACTORIAL_RANGE_START: usize = 71;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanEntry {
    pub value: BigRational,
    pub provenance: String,
}

/// Upper bounds on the weak Jordan constants of `GL_N(C)`, indexed by `N`.
///
/// Built-in values cover `N = 1`, `N = 2` and every `N >= 71`. Other sizes
/// must be supplied from a table file; a lookup that finds nothing is an
/// error, never an estimate.
///
/// File format, one entry per line:
///
/// ```text
/// # comment
/// 3 360 transcribed bound for GL_3
/// 4 25920/1 provenance text runs to end of line
/// ```
///
/// [`JordanTable::to_text`] reproduces a parsed file byte for byte.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanTable {
    entries: BTreeMap<usize, JordanEntry>,
    lines: Vec<String>,
    trailing_newline: bool,
}

impl Default for JordanTable {
    fn default() -> Self {
        let mut entries = BTreeMap::new();
        entries.insert(
            1,
            JordanEntry {
                value: BigRational::one(),
                provenance: "built-in: GL_1 is abelian".into(),
            },
        );
        entries.insert(
            2,
            JordanEntry {
                value: BigRational::from_integer(12.into()),
                provenance: "built-in: GL_2, binary icosahedral group".into(),
            },
        );
        JordanTable {
            entries,
            lines: Vec::new(),
            trailing_newline: true,
        }
    }
}

fn parse_value(token: &str, line: usize) -> Result<BigRational> {
    let err = |message: String| Error::Parse { line, message };
    let parse_int = |s: &str| {
        s.parse::<BigInt>()
            .map_err(|_| err(format!("`{token}` is not an integer or p/q rational")))
    };
    let value = match token.split_once('/') {
        Some((p, q)) => {
            let q = parse_int(q)?;
            if q <= BigInt::from(0) {
                return Err(err(format!("denominator in `{token}` must be positive")));
            }
            BigRational::new(parse_int(p)?, q)
        }
        None => BigRational::from_integer(parse_int(token)?),
    };
    if value < BigRational::one() {
        return Err(err(format!("value {token} is below 1")));
    }
    Ok(value)
}

fn format_value(v: &BigRational) -> String {
    if v.is_integer() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

impl JordanTable {
    /// Built-in defaults overlaid with the entries of a table file.
    pub fn parse(text: &str) -> Result<Self> {
        let mut table = JordanTable::default();
        let mut from_file = BTreeMap::new();
        for (k, raw) in text.lines().enumerate() {
            let line = k + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let err = |message: String| Error::Parse { line, message };
            let (n_tok, rest) = trimmed
                .split_once(char::is_whitespace)
                .ok_or_else(|| err("expected `N value provenance`".into()))?;
            let rest = rest.trim_start();
            let (v_tok, provenance) = rest
                .split_once(char::is_whitespace)
                .map(|(v, p)| (v, p.trim()))
                .unwrap_or((rest, ""));
            let n: usize = n_tok
                .parse()
                .map_err(|_| err(format!("`{n_tok}` is not a matrix size")))?;
            if n == 0 {
                return Err(err("matrix size must be positive".into()));
            }
            if provenance.is_empty() {
                return Err(err(format!("entry for N = {n} has no provenance")));
            }
            let value = parse_value(v_tok, line)?;
            if from_file.contains_key(&n) {
                return Err(err(format!("duplicate entry for N = {n}")));
            }
            from_file.insert(
                n,
                JordanEntry {
                    value,
                    provenance: provenance.to_string(),
                },
            );
        }
        table.entries.extend(from_file);
        table.lines = text.lines().map(str::to_string).collect();
        table.trailing_newline = text.is_empty() || text.ends_with('\n');
        Ok(table)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        JordanTable::parse(&text)
    }

    /// The table file this table was parsed from, plus any inserted entries.
    pub fn to_text(&self) -> String {
        let mut out = self.lines.join("\n");
        if self.trailing_newline && !self.lines.is_empty() {
            out.push('\n');
        }
        out
    }

    /// Adds or replaces an entry, keeping the textual form in sync.
    pub fn insert(&mut self, n: usize, value: BigRational, provenance: &str) -> Result<()> {
        if n == 0 {
            return Err(Error::Validation("matrix size must be positive".into()));
        }
        if value < BigRational::one() {
            return Err(Error::Validation(format!(
                "Jordan bound {value} is below 1"
            )));
        }
        let provenance = provenance.trim();
        if provenance.is_empty() || provenance.contains('\n') {
            return Err(Error::Validation(
                "provenance must be a single nonempty line".into(),
            ));
        }
        let line = format!("{n} {} {provenance}", format_value(&value));
        let existing = self.lines.iter().position(|l| {
            l.split_whitespace()
                .next()
                .and_then(|t| t.parse::<usize>().ok())
                == Some(n)
                && !l.trim_start().starts_with('#')
        });
        match existing {
            Some(i) => self.lines[i] = line,
            None => self.lines.push(line),
        }
        self.trailing_newline = true;
        self.entries.insert(
            n,
            JordanEntry {
                value,
                provenance: provenance.to_string(),
            },
        );
        Ok(())
    }

    pub fn get(&self, n: usize) -> Result<JordanEntry> {
        if let Some(e) = self.entries.get(&n) {
            return Ok(e.clone());
        }
        if n >= FACTORIAL_RANGE_START {
            let f: BigInt = (1..=(n + 1) as u64).map(BigInt::from).product();
            return Ok(JordanEntry {
                value: BigRational::from_integer(f),
                provenance: format!("built-in: (N+1)! for N >= {FACTORIAL_RANGE_START}"),
            });
        }
        Err(Error::MissingJordanEntry(n))
    }

    pub fn value(&self, n: usize) -> Result<BigRational> {
        Ok(self.get(n)?.value)
    }

    /// Explicit entries (built-in and from file), ascending by `N`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, &JordanEntry)> {
        self.entries.iter().map(|(&n, e)| (n, e))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FinitenessReason {
    /// `d > 2 max a_i`
    DegAboveTwiceMax,
    /// `d = 2 max a_i` and exactly one weight attains the maximum.
    DegTwiceUniqueMax,
    Infinite,
}

impl FinitenessReason {
    pub fn description(&self) -> &'static str {
        match self {
            FinitenessReason::DegAboveTwiceMax => "finite: d > 2*max weight",
            FinitenessReason::DegTwiceUniqueMax => {
                "finite: d = 2*max weight, attained by a single weight"
            }
            FinitenessReason::Infinite => {
                "infinite: d < 2*max weight, or d = 2*max weight attained twice; X is rational"
            }
        }
    }
}

impl fmt::Display for FinitenessReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.description())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FinitenessReport {
    pub finite: bool,
    pub reason: FinitenessReason,
    /// Set when the group is infinite: such hypersurfaces are rational.
    pub rational: bool,
}

/// Finiteness of `Lin(X)` for a well-formed quasismooth family with `n >= 1`.
pub fn lin_finiteness(fam: &HypersurfaceFamily) -> FinitenessReport {
    let d = fam.degree as u128;
    let max = fam.weights.max() as u128;
    let at_max = fam.weights.multiplicities()[0].1;
    let reason = if d > 2 * max {
        FinitenessReason::DegAboveTwiceMax
    } else if d == 2 * max && at_max == 1 {
        FinitenessReason::DegTwiceUniqueMax
    } else {
        FinitenessReason::Infinite
    };
    let finite = reason != FinitenessReason::Infinite;
    FinitenessReport {
        finite,
        reason,
        rational: !finite,
    }
}

/// Weak Jordan constant of the graded automorphism group: the product of
/// `J_N` over the multiplicities `N` of the distinct weights.
pub fn weak_jordan_of_aut(w: &WeightSystem, table: &JordanTable) -> Result<BigRational> {
    w.multiplicities()
        .iter()
        .try_fold(BigRational::one(), |acc, &(_, n)| Ok(acc * table.value(n)?))
}

/// Uniform constant over every weight system with `n + 2` weights: the
/// maximum of `prod J_{N_b}` over partitions of `n + 2`.
pub fn worst_case_cn(n: usize, table: &JordanTable) -> Result<BigRational> {
    let mut best: Option<BigRational> = None;
    for partition in partitions_of(n + 2) {
        let value = partition.iter().try_fold(BigRational::one(), |acc, &p| {
            Ok::<_, Error>(acc * table.value(p)?)
        })?;
        if best.as_ref().is_none_or(|b| &value > b) {
            best = Some(value);
        }
    }
    Ok(best.expect("n + 2 has at least one partition"))
}

/// The optimal constant for curves, from the classification of curves with
/// large automorphism groups. It is not derived from Jordan constants.
pub fn curve_jordan_constant() -> BigRational {
    BigRational::new(21.into(), 2.into())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderBound {
    /// `J(Aut S)` for this weight system.
    pub jordan_constant: BigRational,
    /// `J(Aut S) * d^{n+1} / prod a_i`
    pub exact: BigRational,
    pub floor: BigInt,
    /// `(n+2)! * d^{n+1} / prod a_i`: the bound if the constant could be
    /// taken to be `(n+2)!`. Not established in general.
    pub factorial_hypothesis: BigRational,
}

pub fn lin_order_bound(fam: &HypersurfaceFamily, table: &JordanTable) -> Result<OrderBound> {
    if !lin_finiteness(fam).finite {
        return Err(Error::InfiniteGroup);
    }
    let jordan_constant = weak_jordan_of_aut(&fam.weights, table)?;
    let n = fam.dimension();
    let scale = BigRational::new(
        BigInt::from(fam.degree).pow((n + 1) as u32),
        fam.weights.product(),
    );
    let exact = &jordan_constant * &scale;
    let factorial: BigInt = (1..=(n + 2) as u64).map(BigInt::from).product();
    Ok(OrderBound {
        floor: exact.floor().to_integer(),
        exact,
        factorial_hypothesis: BigRational::from_integer(factorial) * scale,
        jordan_constant,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExceptionalCurve {
    pub name: &'static str,
    pub equation: &'static str,
    pub group: &'static str,
    pub order: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveBound {
    /// `6 d^2 / (abc)`
    pub bound: BigRational,
    /// Plane curves exceeding the bound, when the family contains them.
    pub exceptions: Vec<ExceptionalCurve>,
}

pub const KLEIN_QUARTIC: ExceptionalCurve = ExceptionalCurve {
    name: "Klein quartic",
    equation: "x*y^3 + y*z^3 + z*x^3",
    group: "PSL_2(F_7)",
    order: 168,
};

pub const WIMAN_SEXTIC: ExceptionalCurve = ExceptionalCurve {
    name: "Wiman sextic",
    equation: "10x^3y^3 + 9x^5z + 9y^5z - 45x^2y^2z^2 - 135xyz^4 + 27z^6",
    group: "A_6",
    order: 360,
};

/// Sharp bound `|Lin(X)| <= 6 d^2 / (abc)` for curves in `P(a,b,c)`, with the
/// two plane-curve exceptions attached.
pub fn curve_bound(fam: &HypersurfaceFamily) -> Result<CurveBound> {
    if fam.dimension() != 1 {
        return Err(Error::Dimension(format!(
            "curve bound needs 3 weights, got {}",
            fam.weights.len()
        )));
    }
    if !lin_finiteness(fam).finite {
        return Err(Error::InfiniteGroup);
    }
    let d = BigInt::from(fam.degree);
    let bound = BigRational::new(BigInt::from(6) * &d * &d, fam.weights.product());
    let plane = fam.weights.weights().iter().all(|&a| a == 1);
    let exceptions = match (plane, fam.degree) {
        (true, 4) => vec![KLEIN_QUARTIC],
        (true, 6) => vec![WIMAN_SEXTIC],
        _ => Vec::new(),
    };
    Ok(CurveBound { bound, exceptions })
}
