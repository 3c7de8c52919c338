//! Verification reports and the individual identity checks.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::{brute_distribution, conjectured_g, g_polynomial, t_polynomial, StatSpec};
use crate::error::{invalid, Result};
use crate::limits::Limits;
use crate::perm::{class_size, AvoidanceSpec};
use crate::poly::{LaurentPoly, MultiPoly};
use crate::stats::Statistic;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Verified,
    Mismatch,
    NotApplicable,
    Informational,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Verified => "verified",
            Status::Mismatch => "mismatch",
            Status::NotApplicable => "not-applicable",
            Status::Informational => "informational",
        })
    }
}

/// Parameters identifying one case of a sweep.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub widths: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub patterns: Option<AvoidanceSpec>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub perm: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub mode: Option<String>,
}

impl Params {
    pub fn nk(n: usize, k: usize) -> Self {
        Params {
            n: Some(n),
            k: Some(k),
            ..Params::default()
        }
    }

    pub fn n(n: usize) -> Self {
        Params {
            n: Some(n),
            ..Params::default()
        }
    }

    pub fn with_widths(mut self, widths: &[usize]) -> Self {
        self.widths = Some(widths.to_vec());
        self
    }

    pub fn with_patterns(mut self, patterns: &AvoidanceSpec) -> Self {
        self.patterns = Some(patterns.clone());
        self
    }

    pub fn with_perm(mut self, perm: impl fmt::Display) -> Self {
        self.perm = Some(perm.to_string());
        self
    }

    pub fn with_mode(mut self, mode: impl fmt::Display) -> Self {
        self.mode = Some(mode.to_string());
        self
    }
}

/// One side of a failed comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Value {
    Multi(MultiPoly),
    Laurent(LaurentPoly),
    Text(String),
}

impl From<LaurentPoly> for Value {
    fn from(p: LaurentPoly) -> Self {
        Value::Laurent(p)
    }
}

impl From<MultiPoly> for Value {
    fn from(p: MultiPoly) -> Self {
        Value::Multi(p)
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Multi(p) => write!(f, "{p}"),
            Value::Laurent(p) => write!(f, "{p}"),
            Value::Text(s) => f.write_str(s),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub params: Params,
    pub left: Value,
    pub right: Value,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity: String,
    pub range: String,
    pub status: Status,
    /// Number of cases compared.
    pub checked: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counterexample: Option<Counterexample>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn not_applicable(identity: impl Into<String>, range: impl Into<String>, note: impl Into<String>) -> Self {
        VerificationReport {
            identity: identity.into(),
            range: range.into(),
            status: Status::NotApplicable,
            checked: 0,
            counterexample: None,
            notes: vec![note.into()],
        }
    }

    pub fn informational(identity: impl Into<String>, range: impl Into<String>, notes: Vec<String>) -> Self {
        VerificationReport {
            identity: identity.into(),
            range: range.into(),
            status: Status::Informational,
            checked: 0,
            counterexample: None,
            notes,
        }
    }

    pub fn is_failure(&self) -> bool {
        self.status == Status::Mismatch
    }
}

/// Accumulates comparisons for one identity, keeping the first mismatch.
///
/// Sweeps run in increasing parameter order, so the first mismatch is the
/// minimal counterexample.
#[derive(Debug)]
pub struct Sweep {
    identity: String,
    range: String,
    checked: usize,
    counterexample: Option<Counterexample>,
    notes: Vec<String>,
}

impl Sweep {
    pub fn new(identity: impl Into<String>, range: impl Into<String>) -> Self {
        Sweep {
            identity: identity.into(),
            range: range.into(),
            checked: 0,
            counterexample: None,
            notes: Vec::new(),
        }
    }

    /// Compares `left` and `right`; returns whether they agree.
    pub fn check<T>(&mut self, params: impl FnOnce() -> Params, left: &T, right: &T) -> bool
    where
        T: PartialEq + Clone + Into<Value>,
    {
        self.checked += 1;
        let ok = left == right;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(Counterexample {
                params: params(),
                left: left.clone().into(),
                right: right.clone().into(),
            });
        }
        ok
    }

    /// Like [`Sweep::check`] for values shown through their `Debug` text.
    pub fn check_text<T>(&mut self, params: impl FnOnce() -> Params, left: &T, right: &T) -> bool
    where
        T: PartialEq + fmt::Debug,
    {
        self.checked += 1;
        let ok = left == right;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(Counterexample {
                params: params(),
                left: Value::Text(format!("{left:?}")),
                right: Value::Text(format!("{right:?}")),
            });
        }
        ok
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn finish(self) -> VerificationReport {
        let status = if self.counterexample.is_some() {
            Status::Mismatch
        } else {
            Status::Verified
        };
        VerificationReport {
            identity: self.identity,
            range: self.range,
            status,
            checked: self.checked,
            counterexample: self.counterexample,
            notes: self.notes,
        }
    }
}

/// Which symmetry `duality_check` applies to the pattern set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DualityMode {
    Reverse,
    Complement,
    ReverseComplement,
}

impl DualityMode {
    pub const ALL: [DualityMode; 3] = [DualityMode::Reverse, DualityMode::Complement, DualityMode::ReverseComplement];

    pub fn apply(self, spec: &AvoidanceSpec) -> AvoidanceSpec {
        match self {
            DualityMode::Reverse => spec.reverse(),
            DualityMode::Complement => spec.complement(),
            DualityMode::ReverseComplement => spec.reverse().complement(),
        }
    }
}

impl fmt::Display for DualityMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DualityMode::Reverse => "reverse",
            DualityMode::Complement => "complement",
            DualityMode::ReverseComplement => "reverse-complement",
        })
    }
}

/// `t_1^{n-1} ⋯ t_{n-1} T_n(Π; t^{-1})`, the right side of the reflection identity.
pub fn reflected_t(n: usize, t: &MultiPoly) -> Result<MultiPoly> {
    let top: Vec<u32> = (1..n).map(|k| (n - k) as u32).collect();
    t.reflect(&top)
}

/// Adds the `T_n` symmetry comparison for one `(n, Π, mode)` to `sweep`.
pub(crate) fn duality_case(
    sweep: &mut Sweep,
    n: usize,
    spec: &AvoidanceSpec,
    mode: DualityMode,
    tpoly: impl Fn(usize, &AvoidanceSpec) -> Result<MultiPoly>,
) -> Result<bool> {
    let left = tpoly(n, &mode.apply(spec))?;
    let base = tpoly(n, spec)?;
    let right = match mode {
        DualityMode::ReverseComplement => base,
        _ => reflected_t(n, &base)?,
    };
    Ok(sweep.check(|| Params::n(n).with_patterns(spec).with_mode(mode), &left, &right))
}

pub(crate) fn duality_identity(mode: DualityMode) -> &'static str {
    match mode {
        DualityMode::ReverseComplement => "T_n((Π^r)^c) = T_n(Π)",
        _ => "T_n(Π') = t_1^{n-1}⋯t_{n-1} T_n(Π; t^{-1})",
    }
}

/// Checks the `T_n` symmetry under reversal, complement, or both.
pub fn duality_check(n: usize, spec: &AvoidanceSpec, mode: DualityMode, limits: &Limits) -> Result<VerificationReport> {
    let mut sweep = Sweep::new(
        format!("{} [{mode}]", duality_identity(mode)),
        format!("n = {n}, Π = {spec}"),
    );
    duality_case(&mut sweep, n, spec, mode, |n, s| t_polynomial(n, s, limits))?;
    Ok(sweep.finish())
}

pub(crate) const CONJECTURE: &str = "G_{n,k} = n q^{1-k} A_{n-1}(q) when gcd(k,n) = 1";

/// Compares `G_{n,k}` with `n q^{1-k} A_{n-1}(q)` when `gcd(k, n) = 1`.
pub fn conjecture_check(n: usize, k: usize, limits: &Limits) -> Result<VerificationReport> {
    if k == 0 || k >= n {
        return invalid(format!("width {k} is outside 1..={}", n.saturating_sub(1)));
    }
    let range = format!("n = {n}, k = {k}");
    if n.gcd(&k) != 1 {
        let g = g_polynomial(n, k, limits)?;
        return Ok(VerificationReport::not_applicable(
            CONJECTURE,
            range,
            format!("gcd({k},{n}) = {}; G_{{{n},{k}}} = {g}", n.gcd(&k)),
        ));
    }
    let mut sweep = Sweep::new(CONJECTURE, range);
    sweep.check(|| Params::nk(n, k), &g_polynomial(n, k, limits)?, &conjectured_g(n, k));
    Ok(sweep.finish())
}

/// `Σ_{i=1}^{n-k} ⌊(n-i)/k⌋`.
pub fn max_inv_312(n: usize, k: usize) -> usize {
    (1..=n.saturating_sub(k)).map(|i| (n - i) / k).sum()
}

pub(crate) fn degree_cases(sweep: &mut Sweep, n: usize, k: usize, limits: &Limits) -> Result<()> {
    let avoid = AvoidanceSpec::parse("312")?;
    for (stat, expected) in [(Statistic::Des, n - k), (Statistic::Inv, max_inv_312(n, k))] {
        let p = brute_distribution(n, &StatSpec::width(stat, k).avoiding(avoid.clone()), limits)?;
        let degree = p.degree().unwrap_or(i64::MIN);
        let mut params = Params::nk(n, k);
        params.mode = Some(format!("deg {stat}_k"));
        sweep.check_text(|| params, &degree, &(expected as i64));
    }
    Ok(())
}

/// Degree of `F_n^{des_k}(312)` is `n - k`; degree of `F_n^{inv_k}(312)` is
/// `Σ_{i=1}^{n-k} ⌊(n-i)/k⌋`.
pub fn deg_check_312(n: usize, k: usize, limits: &Limits) -> Result<VerificationReport> {
    if k == 0 || k >= n {
        return invalid(format!("width {k} is outside 1..={}", n.saturating_sub(1)));
    }
    let mut sweep = Sweep::new("degrees of F^{des_k}(312) and F^{inv_k}(312)", format!("n = {n}, k = {k}"));
    degree_cases(&mut sweep, n, k, limits)?;
    Ok(sweep.finish())
}

/// `des_k ~ exc_k`, `inv_k ~ maj_k`, and `des_k ~ inv_k` when `2k >= n`.
pub fn equidistribution_check(n: usize, k: usize, limits: &Limits) -> Result<VerificationReport> {
    let dist = |stat| brute_distribution(n, &StatSpec::width(stat, k), limits);
    let (des, inv, exc, maj) = (
        dist(Statistic::Des)?,
        dist(Statistic::Inv)?,
        dist(Statistic::Exc)?,
        dist(Statistic::Maj)?,
    );
    let mut sweep = Sweep::new("F^{des_k} = F^{exc_k}, F^{inv_k} = F^{maj_k}", format!("n = {n}, k = {k}"));
    let params = |mode: &str| Params::nk(n, k).with_mode(mode);
    sweep.check(|| params("des=exc"), &des, &exc);
    sweep.check(|| params("inv=maj"), &inv, &maj);
    if 2 * k >= n {
        sweep.check(|| params("des=inv"), &des, &inv);
        sweep.note("k >= n/2: des_k = inv_k included");
    }
    Ok(sweep.finish())
}

/// `|Av_m(Π)| = |Av_m(Π')|` for `m = 0..=n_max`.
pub fn wilf_check(a: &AvoidanceSpec, b: &AvoidanceSpec, n_max: usize, limits: &Limits) -> Result<VerificationReport> {
    limits.check_univariate(n_max)?;
    let mut sweep = Sweep::new(format!("|Av_n({a})| = |Av_n({b})|"), format!("0 <= n <= {n_max}"));
    for n in 0..=n_max {
        let (x, y) = (class_size(n, a, limits)?, class_size(n, b, limits)?);
        sweep.check_text(|| Params::n(n), &x, &y);
    }
    Ok(sweep.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &str) -> AvoidanceSpec {
        AvoidanceSpec::parse(s).unwrap()
    }

    #[test]
    fn duality_examples() {
        let l = Limits::default();
        let r = duality_check(5, &spec("312"), DualityMode::Complement, &l).unwrap();
        assert_eq!(r.status, Status::Verified);
        let r = duality_check(4, &AvoidanceSpec::none(), DualityMode::Reverse, &l).unwrap();
        assert_eq!(r.status, Status::Verified);
        let r = duality_check(5, &spec("123,132"), DualityMode::ReverseComplement, &l).unwrap();
        assert_eq!(r.status, Status::Verified);
    }

    #[test]
    fn wrong_duality_is_reported() {
        // T_4(312) against the unreflected T_4(132) must disagree.
        let l = Limits::default();
        let mut sweep = Sweep::new("bogus", "n = 4");
        let left = t_polynomial(4, &spec("132"), &l).unwrap();
        let right = t_polynomial(4, &spec("312"), &l).unwrap();
        assert!(!sweep.check(|| Params::n(4), &left, &right));
        let report = sweep.finish();
        assert_eq!(report.status, Status::Mismatch);
        let ce = report.counterexample.unwrap();
        assert_eq!(ce.params.n, Some(4));
        assert_eq!(ce.left, Value::Multi(left));
    }

    #[test]
    fn conjecture_examples() {
        let l = Limits::default();
        assert_eq!(conjecture_check(6, 5, &l).unwrap().status, Status::Verified);
        assert_eq!(conjecture_check(7, 3, &l).unwrap().status, Status::Verified);
        let na = conjecture_check(6, 2, &l).unwrap();
        assert_eq!(na.status, Status::NotApplicable);
        assert!(na.notes[0].contains("180 + 360q + 180q^2"));
        assert!(conjecture_check(6, 6, &l).is_err());
    }

    #[test]
    fn degree_and_equidistribution() {
        let l = Limits::default();
        for n in 2..=7 {
            for k in 1..n {
                assert_eq!(deg_check_312(n, k, &l).unwrap().status, Status::Verified, "n={n} k={k}");
            }
        }
        assert_eq!(max_inv_312(5, 1), 10);
        assert_eq!(equidistribution_check(7, 2, &l).unwrap().status, Status::Verified);
        let r = equidistribution_check(6, 3, &l).unwrap();
        assert_eq!((r.status, r.checked), (Status::Verified, 3));
        assert_eq!(equidistribution_check(5, 1, &l).unwrap().checked, 2);
    }

    #[test]
    fn wilf_examples() {
        let l = Limits::default();
        assert_eq!(wilf_check(&spec("312"), &spec("321"), 8, &l).unwrap().status, Status::Verified);
        assert_eq!(
            wilf_check(&spec("123,132"), &spec("132,231"), 8, &l).unwrap().status,
            Status::Verified
        );
        let r = wilf_check(&spec("312"), &spec("123,132"), 4, &l).unwrap();
        assert_eq!(r.status, Status::Mismatch);
        assert_eq!(r.counterexample.unwrap().params.n, Some(3));
    }

    #[test]
    fn report_json_shape() {
        let mut sweep = Sweep::new("x", "n = 1");
        sweep.check(|| Params::nk(2, 1), &LaurentPoly::one(), &LaurentPoly::q());
        let json = serde_json::to_string(&sweep.finish()).unwrap();
        assert_eq!(
            json,
            r#"{"identity":"x","range":"n = 1","status":"mismatch","checked":1,"counterexample":{"params":{"n":2,"k":1},"left":{"terms":[[0,1]]},"right":{"terms":[[1,1]]}}}"#
        );
        let back: VerificationReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back.counterexample.unwrap().right, Value::Laurent(LaurentPoly::q()));
    }
}
