//! Command-line front end: argument parsing, report assembly and rendering.
//!
//! Every report is a plain serializable value built from library calls, so
//! `--json` output parses back into the same value and re-renders to the
//! same bytes. Large integers and rationals are carried as strings.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::bounds::{
    curve_bound, curve_jordan_constant, lin_finiteness, lin_order_bound, worst_case_cn,
    FinitenessReason, JordanTable,
};
use crate::error::{Error, Result};
use crate::monomials::{
    euler_check, monomial_existence_check, ExponentVector, PolynomialSupport, WeightedPolynomial,
};
use crate::quasismooth::{is_linear_cone, quasismooth_exists, QuasismoothReport};
use crate::search::{enumerate_families, SearchConstraints, DEFAULT_MAX_CANDIDATES};
use crate::symmetry::{
    distinguished_minor, fermat_prediction, fixing_group, forced_central_group, lin_diagonal_order,
    AbelianGroupStructure, DiagonalOrder,
};
use crate::weights::{
    aut_equals_lin, canonical_class, genericity_condition, CanonicalClassReport, CanonicalKind,
    HypersurfaceFamily, Linearity,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

/// Environment variable naming the default Jordan table file.
pub const JORDAN_TABLE_ENV: &str = "WPH_JORDAN_TABLE";

/// Largest Fermat dimension for which the prediction is cross-checked
/// against the computed diagonal group.
pub const FERMAT_CROSS_CHECK_MAX_DIM: usize = 8;

#[derive(Parser, Debug)]
#[command(
    name = "wph",
    version,
    about = "Exact combinatorics of weighted projective hypersurfaces"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Jordan table file with bounds for matrix sizes not built in.
    #[arg(long, global = true, env = JORDAN_TABLE_ENV, value_name = "PATH")]
    jordan_table: Option<PathBuf>,

    /// Cap on raw candidates examined by `enumerate`.
    #[arg(long, global = true, value_name = "N", default_value_t = DEFAULT_MAX_CANDIDATES)]
    max_candidates: u128,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify a family X_d in P(a_0, ..., a_{n+1}).
    Check(FamilyArgs),
    /// Diagonal symmetry of an explicit polynomial support (JSON file).
    Symmetry { file: PathBuf },
    /// List families meeting the given constraints.
    Enumerate(EnumerateArgs),
    /// Automorphism count of the Fermat hypersurface of degree d.
    Fermat {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        degree: u64,
    },
    /// Order bounds for the linear automorphism group of a family.
    Bound(FamilyArgs),
}

#[derive(clap::Args, Debug)]
struct FamilyArgs {
    /// Comma-separated positive weights.
    #[arg(long, value_delimiter = ',', required = true)]
    weights: Vec<u64>,
    #[arg(long)]
    degree: u64,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum KindArg {
    Fano,
    Cy,
    General,
}

impl From<KindArg> for CanonicalKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Fano => CanonicalKind::Fano,
            KindArg::Cy => CanonicalKind::CalabiYau,
            KindArg::General => CanonicalKind::GeneralType,
        }
    }
}

#[derive(clap::Args, Debug)]
struct EnumerateArgs {
    #[arg(long)]
    dim: usize,
    #[arg(long, value_enum)]
    canonical: Option<KindArg>,
    #[arg(long)]
    max_degree: u64,
    /// Defaults to the maximum degree.
    #[arg(long)]
    max_weight: Option<u64>,
    #[arg(long)]
    allow_ill_formed: bool,
    #[arg(long)]
    allow_non_quasismooth: bool,
    #[arg(long)]
    allow_linear_cones: bool,
}

fn big(n: &BigInt) -> String {
    n.to_string()
}

fn rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Abelian group as reported: invariant factors as decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupView {
    pub structure: String,
    pub invariant_factors: Vec<String>,
    pub order: Option<String>,
    pub finite: bool,
    pub free_rank: usize,
}

impl From<&AbelianGroupStructure> for GroupView {
    fn from(g: &AbelianGroupStructure) -> Self {
        GroupView {
            structure: g.to_string(),
            invariant_factors: g.invariant_factors.iter().map(big).collect(),
            order: g.order.as_ref().map(big),
            finite: g.finite,
            free_rank: g.free_rank,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OmitOneFailure {
    /// Index of the omitted weight, in input order.
    pub omitted: usize,
    pub gcd: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FinitenessView {
    pub finite: bool,
    pub reason: FinitenessReason,
    pub criterion: String,
    pub rational: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderBoundView {
    pub jordan_constant: String,
    pub bound: String,
    pub floor: String,
    /// Bound with the Jordan constant replaced by `(n+2)!`; not proven.
    pub factorial_hypothesis: String,
    pub criterion: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExceptionView {
    pub name: String,
    pub equation: String,
    pub group: String,
    pub order: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveBoundView {
    pub bound: String,
    pub criterion: String,
    pub exceptions: Vec<ExceptionView>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub weights: Vec<u64>,
    pub degree: u64,
    pub dimension: usize,
    /// `d` is below every weight, so the family is empty.
    pub degenerate: bool,
    pub well_formed: bool,
    pub well_formedness_failures: Vec<OmitOneFailure>,
    pub quasismooth: QuasismoothReport,
    pub linear_cone: bool,
    pub canonical_class: CanonicalClassReport,
    /// Present when the family is well-formed, quasismooth and not a cone.
    pub aut_equals_lin: Option<Linearity>,
    /// Present when the family is well-formed, quasismooth and `n >= 1`.
    pub finiteness: Option<FinitenessView>,
    pub bound: Option<OrderBoundView>,
    pub curve_bound: Option<CurveBoundView>,
    pub genericity: bool,
    /// Diagonal automorphisms of every member: a lower bound for the group
    /// of the general member.
    pub forced_central_group: Option<GroupView>,
    pub notes: Vec<String>,
}

fn finiteness_view(fam: &HypersurfaceFamily) -> FinitenessView {
    let r = lin_finiteness(fam);
    FinitenessView {
        finite: r.finite,
        reason: r.reason,
        criterion: r.reason.description().to_string(),
        rational: r.rational,
    }
}

fn order_bound_view(fam: &HypersurfaceFamily, table: &JordanTable) -> Result<OrderBoundView> {
    let b = lin_order_bound(fam, table)?;
    Ok(OrderBoundView {
        jordan_constant: rational(&b.jordan_constant),
        bound: rational(&b.exact),
        floor: big(&b.floor),
        factorial_hypothesis: rational(&b.factorial_hypothesis),
        criterion: "|Lin(X)| <= J(Aut S) * d^(n+1) / prod(a_i)".into(),
    })
}

fn curve_bound_view(fam: &HypersurfaceFamily) -> Result<CurveBoundView> {
    let b = curve_bound(fam)?;
    Ok(CurveBoundView {
        bound: rational(&b.bound),
        criterion: "|Lin(X)| <= 6 d^2 / (abc) for curves, plane-curve exceptions aside".into(),
        exceptions: b
            .exceptions
            .iter()
            .map(|e| ExceptionView {
                name: e.name.into(),
                equation: e.equation.into(),
                group: e.group.into(),
                order: e.order,
            })
            .collect(),
    })
}

/// Recoverable shortfalls (a missing table entry, an oversized graded
/// piece) become notes; anything else is an error.
fn soften<T>(r: Result<T>, what: &str, notes: &mut Vec<String>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(e @ (Error::MissingJordanEntry(_) | Error::Resource { .. })) => {
            notes.push(format!("{what}: {e}"));
            Ok(None)
        }
        Err(e) => Err(e),
    }
}

pub fn check_report(weights: &[u64], degree: u64, table: &JordanTable) -> Result<FamilyReport> {
    let fam = HypersurfaceFamily::from_weights(weights, degree)?;
    let mut notes = Vec::new();
    let failures: Vec<OmitOneFailure> = fam
        .weights
        .well_formedness_failures()
        .into_iter()
        .map(|(omitted, gcd)| OmitOneFailure { omitted, gcd })
        .collect();
    let well_formed = failures.is_empty();
    let degenerate = fam.is_degenerate();
    let quasismooth = quasismooth_exists(&fam)?;
    let linear_cone = is_linear_cone(&fam);
    if degenerate {
        notes.push("degree is below every weight: the family is empty".into());
    }
    let usable = well_formed && quasismooth.exists && !degenerate;

    let aut = (usable && !linear_cone).then(|| aut_equals_lin(&fam));
    let finiteness = (usable && fam.dimension() >= 1).then(|| finiteness_view(&fam));
    let finite = finiteness.as_ref().is_some_and(|f| f.finite);
    let bound = if finite {
        soften(order_bound_view(&fam, table), "order bound", &mut notes)?
    } else {
        None
    };
    let curve = if finite && fam.dimension() == 1 {
        Some(curve_bound_view(&fam)?)
    } else {
        None
    };
    let forced = if usable {
        soften(
            forced_central_group(&fam),
            "forced central group",
            &mut notes,
        )?
        .map(|g| GroupView::from(&g))
    } else {
        None
    };
    if !usable {
        notes
            .push("symmetry statements need a well-formed family with a quasismooth member".into());
    }
    Ok(FamilyReport {
        weights: weights.to_vec(),
        degree,
        dimension: fam.dimension(),
        degenerate,
        well_formed,
        well_formedness_failures: failures,
        quasismooth,
        linear_cone,
        canonical_class: canonical_class(&fam),
        aut_equals_lin: aut,
        finiteness,
        bound,
        curve_bound: curve,
        genericity: genericity_condition(&fam),
        forced_central_group: forced,
        notes,
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

impl FamilyReport {
    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let w = join(&self.weights);
        let _ = writeln!(
            s,
            "family: X_{} in P({w}), dimension {}",
            self.degree, self.dimension
        );
        let _ = writeln!(s, "well-formed: {}", yes_no(self.well_formed));
        for f in &self.well_formedness_failures {
            let _ = writeln!(
                s,
                "  omitting weight #{} leaves common factor {}",
                f.omitted, f.gcd
            );
        }
        let q = &self.quasismooth;
        let _ = writeln!(s, "quasismooth member exists: {}", yes_no(q.exists));
        for f in &q.failing_subsets {
            let _ = writeln!(
                s,
                "  subset with weights {{{}}}: d not a combination, {} of {} required witnesses",
                join(&f.weights),
                f.witnesses_b.len(),
                f.required
            );
        }
        let _ = writeln!(s, "linear cone: {}", yes_no(self.linear_cone));
        let c = &self.canonical_class;
        let _ = writeln!(s, "canonical class: O({}), {}", c.r, c.kind);
        if let Some(a) = self.aut_equals_lin {
            let text = match a {
                Linearity::AllLinear => "every automorphism is linear",
                Linearity::MaybeNonLinear => "K3 surface: non-linear automorphisms possible",
                Linearity::OutOfRange => "dimension too small to conclude",
            };
            let _ = writeln!(s, "Aut = Lin: {text}");
        }
        if let Some(f) = &self.finiteness {
            let _ = writeln!(s, "Lin(X) finite: {} ({})", yes_no(f.finite), f.criterion);
        }
        if let Some(b) = &self.bound {
            let _ = writeln!(
                s,
                "order bound: {} (floor {}), J(Aut S) = {}",
                b.bound, b.floor, b.jordan_constant
            );
            let _ = writeln!(s, "  with (n+2)! in place of J: {}", b.factorial_hypothesis);
        }
        if let Some(cb) = &self.curve_bound {
            let _ = writeln!(s, "curve bound: {}", cb.bound);
            for e in &cb.exceptions {
                let _ = writeln!(
                    s,
                    "  exception: {} ({}, order {})",
                    e.name, e.group, e.order
                );
            }
        }
        let _ = writeln!(
            s,
            "genericity (d >= 5 max a_i): {}",
            yes_no(self.genericity)
        );
        if let Some(g) = &self.forced_central_group {
            let order = g.order.as_deref().unwrap_or("infinite");
            let _ = writeln!(s, "forced central group: {} (order {order})", g.structure);
        }
        for n in &self.notes {
            let _ = writeln!(s, "note: {n}");
        }
        s
    }
}

/// Contents of a support file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SupportFile {
    pub weights: Vec<u64>,
    pub degree: u64,
    pub monomials: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coefficients: Option<Vec<String>>,
}

impl SupportFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        SupportFile::parse(&text)
    }

    pub fn support(&self) -> Result<PolynomialSupport> {
        let family = HypersurfaceFamily::from_weights(&self.weights, self.degree)?;
        PolynomialSupport::new(
            family,
            self.monomials.iter().cloned().map(ExponentVector).collect(),
        )
    }

    pub fn coefficients(&self) -> Result<Option<Vec<BigRational>>> {
        let Some(cs) = &self.coefficients else {
            return Ok(None);
        };
        if cs.len() != self.monomials.len() {
            return Err(Error::Validation(format!(
                "{} coefficients for {} monomials",
                cs.len(),
                self.monomials.len()
            )));
        }
        cs.iter()
            .enumerate()
            .map(|(k, c)| {
                c.trim()
                    .parse::<BigRational>()
                    .map_err(|_| Error::Validation(format!("coefficient {k} `{c}` is not p/q")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Some)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorView {
    /// Chosen support row for each variable, in variable order.
    pub rows: Vec<usize>,
    pub matrix: Vec<Vec<String>>,
    pub determinant: String,
    pub bound: String,
    pub bound_applies: bool,
    pub within_bound: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetryReport {
    pub weights: Vec<u64>,
    pub degree: u64,
    pub monomials: usize,
    pub fixing_group: GroupView,
    /// Fixing group modulo scalars; absent when the weights share a factor.
    pub lin_diagonal_order: Option<String>,
    pub lin_diagonal_finite: bool,
    pub monomial_existence: bool,
    pub variables_without_witness: Vec<usize>,
    pub minor: Option<MinorView>,
    /// Euler identity, checked when coefficients are given.
    pub euler_identity: Option<bool>,
    pub notes: Vec<String>,
}

pub fn symmetry_report(file: &SupportFile) -> Result<SymmetryReport> {
    let support = file.support()?;
    let mut notes = Vec::new();
    let euler_identity = match file.coefficients()? {
        Some(cs) => Some(euler_check(&WeightedPolynomial::from_support(
            &support,
            Some(&cs),
        )?)),
        None => None,
    };
    let group = fixing_group(&support);
    let (lin_order, lin_finite) = match lin_diagonal_order(&support) {
        Ok(DiagonalOrder::Finite(n)) => (Some(big(&n)), true),
        Ok(DiagonalOrder::Infinite { free_rank }) => {
            notes.push(format!("infinite diagonal symmetry, free rank {free_rank}"));
            (None, false)
        }
        Err(Error::Precondition(m)) => {
            notes.push(m);
            (None, group.finite)
        }
        Err(e) => return Err(e),
    };
    let existence = monomial_existence_check(&support);
    let minor = if existence.pass() {
        let m = distinguished_minor(&support)?;
        let matrix = (0..m.matrix.rows())
            .map(|i| m.matrix.row(i).iter().map(big).collect())
            .collect();
        Some(MinorView {
            rows: m.chosen_rows.iter().map(|r| r.support_row).collect(),
            matrix,
            determinant: big(&m.determinant),
            bound: rational(&m.bound),
            bound_applies: m.bound_applies,
            within_bound: m.within_bound,
        })
    } else {
        notes.push(
            "some variable has no x_i^b or x_i^b x_j monomial; no distinguished minor".into(),
        );
        None
    };
    Ok(SymmetryReport {
        weights: file.weights.clone(),
        degree: file.degree,
        monomials: file.monomials.len(),
        fixing_group: GroupView::from(&group),
        lin_diagonal_order: lin_order,
        lin_diagonal_finite: lin_finite,
        monomial_existence: existence.pass(),
        variables_without_witness: existence.failing,
        minor,
        euler_identity,
        notes,
    })
}

impl SymmetryReport {
    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "support: {} monomials of degree {} in P({})",
            self.monomials,
            self.degree,
            join(&self.weights)
        );
        let g = &self.fixing_group;
        let _ = writeln!(s, "fixing group: {}", g.structure);
        let _ = writeln!(
            s,
            "  invariant factors: [{}]",
            g.invariant_factors.join(", ")
        );
        let _ = writeln!(s, "  order: {}", g.order.as_deref().unwrap_or("infinite"));
        match &self.lin_diagonal_order {
            Some(n) => {
                let _ = writeln!(s, "Lin-diagonal order: {n}");
            }
            None if !self.lin_diagonal_finite => {
                let _ = writeln!(s, "Lin-diagonal order: infinite");
            }
            None => {}
        }
        let _ = writeln!(
            s,
            "monomial existence: {}",
            if self.monomial_existence {
                "pass"
            } else {
                "fail"
            }
        );
        if !self.variables_without_witness.is_empty() {
            let _ = writeln!(
                s,
                "  no witness for variables {:?}",
                self.variables_without_witness
            );
        }
        if let Some(m) = &self.minor {
            let _ = writeln!(s, "distinguished minor (support rows {:?}):", m.rows);
            for row in &m.matrix {
                let _ = writeln!(s, "  [{}]", row.join(" "));
            }
            let verdict = match (m.bound_applies, m.within_bound) {
                (false, _) => "not applicable: family has infinite Lin",
                (true, true) => "pass",
                (true, false) => "FAIL",
            };
            let _ = writeln!(
                s,
                "det(B) = {} <= d^(n+2)/prod(a_i) = {}: {verdict}",
                m.determinant, m.bound
            );
        }
        if let Some(e) = self.euler_identity {
            let _ = writeln!(s, "Euler identity: {}", if e { "holds" } else { "FAILS" });
        }
        for n in &self.notes {
            let _ = writeln!(s, "note: {n}");
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyEntry {
    pub degree: u64,
    pub weights: Vec<u64>,
}

pub fn enumerate_report(c: &SearchConstraints) -> Result<Vec<FamilyEntry>> {
    Ok(enumerate_families(c)?
        .into_iter()
        .map(|f| FamilyEntry {
            degree: f.degree,
            weights: f.weights.weights().to_vec(),
        })
        .collect())
}

pub fn render_family_list(list: &[FamilyEntry]) -> String {
    list.iter()
        .map(|e| format!("{} : {}\n", e.degree, join(&e.weights)))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FermatReport {
    pub dimension: usize,
    pub degree: u64,
    pub total: String,
    pub diagonal: String,
    /// Diagonal order computed from the Fermat support, for small `n`.
    pub computed_diagonal: Option<String>,
    pub cross_check: Option<bool>,
}

pub fn fermat_report(n: usize, d: u64) -> Result<FermatReport> {
    let p = fermat_prediction(n, d).map_err(|e| match e {
        Error::Precondition(m) => Error::Validation(m),
        e => e,
    })?;
    let computed = if n <= FERMAT_CROSS_CHECK_MAX_DIM {
        match lin_diagonal_order(&PolynomialSupport::fermat(n, d)?)? {
            DiagonalOrder::Finite(k) => Some(k),
            DiagonalOrder::Infinite { .. } => {
                return Err(Error::InvariantViolation(
                    "Fermat support has infinite diagonal group".into(),
                ))
            }
        }
    } else {
        None
    };
    Ok(FermatReport {
        dimension: n,
        degree: d,
        total: big(&p.total),
        diagonal: big(&p.diagonal),
        cross_check: computed.as_ref().map(|k| *k == p.diagonal),
        computed_diagonal: computed.as_ref().map(big),
    })
}

impl FermatReport {
    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "Fermat hypersurface of degree {} and dimension {}",
            self.degree, self.dimension
        );
        let _ = writeln!(s, "|Lin(X)| = (n+2)! d^(n+1) = {}", self.total);
        let _ = writeln!(s, "diagonal part d^(n+1) = {}", self.diagonal);
        if let (Some(k), Some(ok)) = (&self.computed_diagonal, self.cross_check) {
            let _ = writeln!(
                s,
                "computed diagonal order: {k} ({})",
                if ok { "pass" } else { "FAIL" }
            );
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JordanUse {
    pub size: usize,
    pub value: String,
    pub provenance: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub weights: Vec<u64>,
    pub degree: u64,
    pub dimension: usize,
    pub finiteness: FinitenessView,
    /// Table entries for each weight multiplicity.
    pub jordan_entries: Vec<JordanUse>,
    pub bound: Option<OrderBoundView>,
    pub curve_bound: Option<CurveBoundView>,
    /// Optimal constant for curves, shown for `n = 1`.
    pub curve_constant: Option<String>,
    /// Uniform constant over all weight systems of this length.
    pub worst_case_constant: Option<String>,
    pub notes: Vec<String>,
}

pub fn bound_report(weights: &[u64], degree: u64, table: &JordanTable) -> Result<BoundReport> {
    let fam = HypersurfaceFamily::from_weights(weights, degree)?;
    let n = fam.dimension();
    if n == 0 {
        return Err(Error::Dimension("bounds need at least 3 weights".into()));
    }
    let mut notes = Vec::new();
    let mut jordan_entries = Vec::new();
    for (_, size) in fam.weights.multiplicities() {
        if jordan_entries.iter().any(|j: &JordanUse| j.size == size) {
            continue;
        }
        if let Some(e) = soften(table.get(size), "Jordan table", &mut notes)? {
            jordan_entries.push(JordanUse {
                size,
                value: rational(&e.value),
                provenance: e.provenance,
            });
        }
    }
    jordan_entries.sort_by_key(|j| j.size);
    let finiteness = finiteness_view(&fam);
    let (bound, curve) = if finiteness.finite {
        let b = soften(order_bound_view(&fam, table), "order bound", &mut notes)?;
        let c = if n == 1 {
            Some(curve_bound_view(&fam)?)
        } else {
            None
        };
        (b, c)
    } else {
        notes.push("Lin(X) is infinite; no order bound".into());
        (None, None)
    };
    let worst = soften(worst_case_cn(n, table), "worst-case constant", &mut notes)?;
    Ok(BoundReport {
        weights: weights.to_vec(),
        degree,
        dimension: n,
        finiteness,
        jordan_entries,
        bound,
        curve_bound: curve,
        curve_constant: (n == 1).then(|| rational(&curve_jordan_constant())),
        worst_case_constant: worst.as_ref().map(rational),
        notes,
    })
}

impl BoundReport {
    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "family: X_{} in P({})", self.degree, join(&self.weights));
        let _ = writeln!(
            s,
            "Lin(X) finite: {} ({})",
            yes_no(self.finiteness.finite),
            self.finiteness.criterion
        );
        for j in &self.jordan_entries {
            let _ = writeln!(s, "J_{} = {} [{}]", j.size, j.value, j.provenance);
        }
        if let Some(b) = &self.bound {
            let _ = writeln!(s, "J(Aut S) = {}", b.jordan_constant);
            let _ = writeln!(s, "order bound: {} (floor {})", b.bound, b.floor);
            let _ = writeln!(s, "with (n+2)! in place of J: {}", b.factorial_hypothesis);
        }
        if let Some(c) = &self.curve_bound {
            let _ = writeln!(s, "curve bound 6d^2/(abc): {}", c.bound);
            for e in &c.exceptions {
                let _ = writeln!(
                    s,
                    "  exception: {} ({}, order {})",
                    e.name, e.group, e.order
                );
            }
        }
        if let Some(c) = &self.curve_constant {
            let _ = writeln!(s, "optimal curve constant: {c}");
        }
        if let Some(c) = &self.worst_case_constant {
            let _ = writeln!(
                s,
                "worst-case constant over {} weights: {c}",
                self.dimension + 2
            );
        }
        for n in &self.notes {
            let _ = writeln!(s, "note: {n}");
        }
        s
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Resource { .. } => EXIT_RESOURCE,
        Error::InvariantViolation(_) => EXIT_INTERNAL,
        _ => EXIT_USAGE,
    }
}

fn load_table(path: Option<&Path>) -> Result<JordanTable> {
    match path {
        Some(p) => JordanTable::load(p),
        None => Ok(JordanTable::default()),
    }
}

fn execute(cli: &Cli) -> Result<String> {
    let table = || load_table(cli.jordan_table.as_deref());
    let render = |json: String, text: String| if cli.json { json } else { text };
    Ok(match &cli.command {
        Command::Check(a) => {
            let r = check_report(&a.weights, a.degree, &table()?)?;
            render(to_json(&r), r.render_text())
        }
        Command::Symmetry { file } => {
            let r = symmetry_report(&SupportFile::load(file)?)?;
            render(to_json(&r), r.render_text())
        }
        Command::Enumerate(a) => {
            let c = SearchConstraints {
                dimension: a.dim,
                canonical_kind: a.canonical.map(Into::into),
                max_degree: a.max_degree,
                max_weight: a.max_weight.unwrap_or(a.max_degree),
                require_well_formed: !a.allow_ill_formed,
                require_quasismooth: !a.allow_non_quasismooth,
                exclude_linear_cones: !a.allow_linear_cones,
                max_candidates: cli.max_candidates,
            };
            let list = enumerate_report(&c)?;
            render(to_json(&list), render_family_list(&list))
        }
        Command::Fermat { dim, degree } => {
            let r = fermat_report(*dim, *degree)?;
            render(to_json(&r), r.render_text())
        }
        Command::Bound(a) => {
            let r = bound_report(&a.weights, a.degree, &table()?)?;
            render(to_json(&r), r.render_text())
        }
    })
}

/// Runs the command line `args` (including the program name) and returns
/// the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if matches!(e, Error::Resource { .. }) && matches!(cli.command, Command::Enumerate(_)) {
                let _ = writeln!(
                    err,
                    "hint: raise --max-candidates or tighten the search bounds"
                );
            }
            exit_code(&e)
        }
    }
}
