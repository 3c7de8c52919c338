//! Named verification suites.
//!
//! Each suite sweeps its parameters in increasing order and returns one
//! report per identity. Distributions and `T_n` polynomials computed by one
//! suite are reused by later ones within the same [`Runner`].

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;

use super::recursions::{evaluate, Family, RecursionCache};
use super::table::table_entries;
use super::verify::{
    degree_cases, duality_case, duality_identity, wilf_check, DualityMode, Params, Sweep, VerificationReport, CONJECTURE,
};
use super::{
    brute_distribution, closed_des_k, closed_inv_k, closed_inv_132_312, conjectured_g, g_polynomial,
    product_132_231, product_132_312, t_polynomial, StatSpec,
};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::perm::{class_size, AvoidanceSpec, Permutation};
use crate::poly::{catalan, factorial, LaurentPoly, MultiPoly};
use crate::stats::{self, Statistic, WidthSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Example,
    Theorem,
    Corollary,
    InclusionExclusion,
    Table,
    Conjecture,
    Duality,
    Avoidance,
    Counting,
    InvMaj,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Example,
        Suite::Theorem,
        Suite::Corollary,
        Suite::InclusionExclusion,
        Suite::Table,
        Suite::Conjecture,
        Suite::Duality,
        Suite::Avoidance,
        Suite::Counting,
        Suite::InvMaj,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Example => "example",
            Suite::Theorem => "theorem",
            Suite::Corollary => "corollary",
            Suite::InclusionExclusion => "incl-excl",
            Suite::Table => "table",
            Suite::Conjecture => "conjecture",
            Suite::Duality => "duality",
            Suite::Avoidance => "avoidance",
            Suite::Counting => "counting",
            Suite::InvMaj => "inv-maj",
        }
    }

    /// Largest `n` swept when no bound is given.
    pub fn default_nmax(self) -> usize {
        match self {
            Suite::Example => 7,
            Suite::Theorem | Suite::Corollary | Suite::Counting => 8,
            Suite::InclusionExclusion | Suite::Duality | Suite::InvMaj => 7,
            Suite::Table | Suite::Conjecture | Suite::Avoidance => 9,
        }
    }

    /// Parses `all` or a comma-separated list of suite names.
    pub fn parse_list(text: &str) -> Result<Vec<Suite>> {
        if text.trim() == "all" {
            return Ok(Suite::ALL.to_vec());
        }
        text.split(',').map(str::parse).collect()
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        Suite::ALL.into_iter().find(|suite| suite.name() == s).ok_or_else(|| {
            let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
            Error::InvalidInput(format!("unknown suite {s:?} (expected all or one of {})", names.join(", ")))
        })
    }
}

/// Every `Π ⊆ S_3` with `|Π| <= 2`, in a fixed order.
pub fn small_pattern_sets() -> Vec<AvoidanceSpec> {
    let s3 = ["123", "132", "213", "231", "312", "321"];
    let mut out = vec![AvoidanceSpec::none()];
    for (i, a) in s3.iter().enumerate() {
        out.push(AvoidanceSpec::parse(a).expect("valid pattern"));
        for b in &s3[i + 1..] {
            out.push(AvoidanceSpec::parse(&format!("{a},{b}")).expect("valid pattern"));
        }
    }
    out.sort();
    out
}

/// Nonempty subsets of `[n-1]`, by bitmask order.
fn width_subsets(n: usize, max_size: usize) -> Vec<Vec<usize>> {
    (1u32..(1 << (n - 1)))
        .filter(|m| (m.count_ones() as usize) <= max_size)
        .map(|m| (1..n).filter(|k| m & (1 << (k - 1)) != 0).collect())
        .collect()
}

fn two_pow(m: usize) -> BigInt {
    if m == 0 {
        BigInt::from(1)
    } else {
        BigInt::from(1) << (m - 1)
    }
}

/// Runs suites, sharing computed distributions between them.
pub struct Runner<'a> {
    limits: &'a Limits,
    recursions: &'a RecursionCache,
    brute: RefCell<HashMap<(usize, StatSpec), LaurentPoly>>,
    tpolys: RefCell<HashMap<(usize, AvoidanceSpec), MultiPoly>>,
    gpolys: RefCell<HashMap<(usize, usize), LaurentPoly>>,
}

impl<'a> Runner<'a> {
    pub fn new(limits: &'a Limits, recursions: &'a RecursionCache) -> Self {
        Runner {
            limits,
            recursions,
            brute: RefCell::default(),
            tpolys: RefCell::default(),
            gpolys: RefCell::default(),
        }
    }

    /// Runs `suite` up to `n_max`, or its default bound.
    pub fn run(&self, suite: Suite, bound: Option<usize>) -> Result<Vec<VerificationReport>> {
        let n_max = bound.unwrap_or_else(|| suite.default_nmax());
        match suite {
            Suite::Duality => self.limits.check_multivariate(n_max)?,
            Suite::Example => {}
            _ => self.limits.check_univariate(n_max)?,
        }
        match suite {
            Suite::Example => self.example(),
            Suite::Theorem => self.theorem(n_max),
            Suite::Corollary => self.corollary(n_max),
            Suite::InclusionExclusion => self.inclusion_exclusion(n_max),
            Suite::Table => self.table(n_max),
            Suite::Conjecture => self.conjecture(n_max),
            Suite::Duality => {
                let univariate = bound.unwrap_or(8).min(self.limits.univariate);
                self.duality(n_max, univariate)
            }
            Suite::Avoidance => self.avoidance(n_max),
            Suite::Counting => self.counting(n_max),
            Suite::InvMaj => self.inv_maj(n_max),
        }
    }

    fn brute(&self, n: usize, spec: &StatSpec) -> Result<LaurentPoly> {
        let key = (n, spec.clone());
        if let Some(p) = self.brute.borrow().get(&key) {
            return Ok(p.clone());
        }
        let p = brute_distribution(n, spec, self.limits)?;
        self.brute.borrow_mut().insert(key, p.clone());
        Ok(p)
    }

    fn width(&self, n: usize, stat: Statistic, k: usize, patterns: &str) -> Result<LaurentPoly> {
        let spec = StatSpec::width(stat, k).avoiding(AvoidanceSpec::parse(patterns)?);
        self.brute(n, &spec)
    }

    fn tpoly(&self, n: usize, spec: &AvoidanceSpec) -> Result<MultiPoly> {
        let key = (n, spec.clone());
        if let Some(t) = self.tpolys.borrow().get(&key) {
            return Ok(t.clone());
        }
        let t = t_polynomial(n, spec, self.limits)?;
        self.tpolys.borrow_mut().insert(key, t.clone());
        Ok(t)
    }

    fn gpoly(&self, n: usize, k: usize) -> Result<LaurentPoly> {
        if let Some(g) = self.gpolys.borrow().get(&(n, k)) {
            return Ok(g.clone());
        }
        let g = g_polynomial(n, k, self.limits)?;
        self.gpolys.borrow_mut().insert((n, k), g.clone());
        Ok(g)
    }

    fn example(&self) -> Result<Vec<VerificationReport>> {
        let sigma: Permutation = "4136572".parse()?;
        let widths = WidthSet::new(7, [2, 3])?;
        let params = || Params::default().with_perm(&sigma).with_widths(widths.as_slice());

        let mut des = Sweep::new("Des_{2,3}(4136572) = {1,4,5}, des_{2,3} = 3", "σ = 4136572, K = {2,3}");
        let rec = stats::des_widths(&sigma, &widths)?;
        des.check_text(params, &rec.multiset, &vec![1, 4, 5]);
        des.check_text(params, &rec.count, &3);

        let mut inv = Sweep::new("Inv_{2,3}(4136572) has five pairs, inv_{2,3} = 4 + 2 - 1 = 5", "σ = 4136572, K = {2,3}");
        let rec = stats::inv_widths(&sigma, &widths)?;
        inv.check_text(params, &rec.pairs, &vec![(1, 3), (1, 7), (3, 7), (4, 7), (5, 7)]);
        inv.check_text(params, &rec.count, &5);
        let terms: Vec<usize> = [2, 3, 6]
            .iter()
            .map(|&k| stats::inv_k(&sigma, k).map(|p| p.len()))
            .collect::<Result<_>>()?;
        inv.check_text(params, &terms, &vec![4, 2, 1]);
        inv.check_text(params, &stats::inv_inclusion_exclusion(&sigma, &widths)?, &5);

        let mut exc = Sweep::new("exc_{2,3}(4136572) = 4", "σ = 4136572, K = {2,3}");
        exc.check_text(params, &stats::exc_positions(&sigma, &widths)?, &vec![1, 3, 1, 2]);
        exc.check_text(params, &stats::exc_widths(&sigma, &widths)?, &4);

        let mut maj = Sweep::new("maj_{2,3}(4136572) = 6", "σ = 4136572, K = {2,3}");
        maj.check_text(params, &stats::maj_widths(&sigma, &widths)?, &6);

        Ok(vec![des.finish(), inv.finish(), exc.finish(), maj.finish()])
    }

    fn theorem(&self, n_max: usize) -> Result<Vec<VerificationReport>> {
        let range = format!("2 <= n <= {n_max}, 1 <= k < n");
        let mut des = Sweep::new("F^{des_k} = M_{n,k} A_{d+1}^r A_d^{k-r}", &range);
        let mut inv = Sweep::new("F^{inv_k} = M_{n,k} [d+1]_q!^r [d]_q!^{k-r}", &range);
        for n in 2..=n_max {
            for k in 1..n {
                let brute = self.width(n, Statistic::Des, k, "")?;
                des.check(|| Params::nk(n, k), &brute, &closed_des_k(n, k)?);
                let brute = self.width(n, Statistic::Inv, k, "")?;
                inv.check(|| Params::nk(n, k), &brute, &closed_inv_k(n, k)?);
            }
        }
        Ok(vec![des.finish(), inv.finish()])
    }

    fn corollary(&self, n_max: usize) -> Result<Vec<VerificationReport>> {
        let range = format!("2 <= n <= {n_max}, 1 <= k < n");
        let mut exc = Sweep::new("F^{des_k} = F^{exc_k}", &range);
        let mut maj = Sweep::new("F^{inv_k} = F^{maj_k}", &range);
        let mut half = Sweep::new("F^{des_k} = F^{inv_k} for k >= n/2", format!("2 <= n <= {n_max}, n/2 <= k < n"));
        for n in 2..=n_max {
            for k in 1..n {
                let d = |stat| self.width(n, stat, k, "");
                let (des, inv) = (d(Statistic::Des)?, d(Statistic::Inv)?);
                exc.check(|| Params::nk(n, k), &des, &d(Statistic::Exc)?);
                maj.check(|| Params::nk(n, k), &inv, &d(Statistic::Maj)?);
                if 2 * k >= n {
                    half.check(|| Params::nk(n, k), &des, &inv);
                }
            }
        }
        exc.note("k = 1 is the classical des/exc equidistribution");
        maj.note("k = 1 is the classical inv/maj equidistribution");
        Ok(vec![exc.finish(), maj.finish(), half.finish()])
    }

    fn inclusion_exclusion(&self, n_max: usize) -> Result<Vec<VerificationReport>> {
        let mut sweep = Sweep::new(
            "inv_K = Σ_{∅≠J⊆K} (-1)^{|J|-1} inv_{lcm J}",
            format!("σ ∈ S_n, 2 <= n <= {n_max}, K ⊆ [n-1], 1 <= |K| <= 3"),
        );
        let worked: Permutation = "4136572".parse()?;
        let k23 = WidthSet::new(7, [2, 3])?;
        sweep.check_text(
            || Params::default().with_perm(&worked).with_widths(&[2, 3]),
            &stats::inv_inclusion_exclusion(&worked, &k23)?,
            &(4 + 2 - 1),
        );
        for n in 2..=n_max {
            let sets: Vec<WidthSet> = width_subsets(n, 3)
                .into_iter()
                .map(|k| WidthSet::new(n, k))
                .collect::<Result<_>>()?;
            for sigma in crate::perm::enumerate_sn(n, self.limits)? {
                for k in &sets {
                    let union = stats::inv_widths(&sigma, k)?.count;
                    let alternating = stats::inv_inclusion_exclusion(&sigma, k)?;
                    sweep.check_text(
                        || Params::n(n).with_perm(&sigma).with_widths(k.as_slice()),
                        &union,
                        &alternating,
                    );
                }
            }
        }
        Ok(vec![sweep.finish()])
    }

    fn table(&self, n_max: usize) -> Result<Vec<VerificationReport>> {
        let mut reports = Vec::new();
        let mut labels = Vec::new();
        for entry in table_entries().into_iter().filter(|e| e.n <= n_max) {
            let (n, k) = (entry.n, entry.k);
            let mut sweep = Sweep::new(format!("G_{{{n},{k}}} = {}", entry.printed), format!("n = {n}, k = {k}"));
            let shape = entry.verified_shape();
            sweep.check(|| Params::nk(n, k), &self.gpoly(n, k)?, &shape.expand());
            if !entry.cardinality_holds() {
                sweep.note(format!("compared against {shape}"));
                labels.push(format!(
                    "G_{{{n},{k}}} printed as {}: value at q = 1 is {}, not {n}! = {}; the computed polynomial is {shape}",
                    entry.printed,
                    entry.shape.eval_at_one(),
                    factorial(n)
                ));
            }
            reports.push(sweep.finish());
        }
        if !labels.is_empty() {
            reports.push(VerificationReport::informational(
                "table label: G_{9,k} printed with A_9(q)",
                "n = 9",
                labels,
            ));
        }
        if reports.is_empty() {
            reports.push(VerificationReport::not_applicable(
                "G_{n,k} table",
                format!("n <= {n_max}"),
                "no printed entries in range",
            ));
        }
        Ok(reports)
    }

    fn conjecture(&self, n_max: usize) -> Result<Vec<VerificationReport>> {
        let mut sweep = Sweep::new(CONJECTURE, format!("2 <= n <= {n_max}, 1 <= k < n, gcd(k,n) = 1"));
        let mut skipped = 0;
        for n in 2..=n_max {
            for k in 1..n {
                if n.gcd(&k) != 1 {
                    skipped += 1;
                    continue;
                }
                sweep.check(|| Params::nk(n, k), &self.gpoly(n, k)?, &conjectured_g(n, k));
            }
        }
        sweep.note(format!("{skipped} pairs with gcd(k,n) > 1 are outside the hypothesis"));
        Ok(vec![sweep.finish()])
    }

    fn duality(&self, multi_max: usize, uni_max: usize) -> Result<Vec<VerificationReport>> {
        let sets = small_pattern_sets();
        let mut reports = Vec::new();
        for mode in DualityMode::ALL {
            let identity = format!("{} [{mode}]", duality_identity(mode));
            let mut sweep = Sweep::new(identity, format!("1 <= n <= {multi_max}, Π ⊆ S_3, |Π| <= 2"));
            for n in 1..=multi_max {
                for spec in &sets {
                    duality_case(&mut sweep, n, spec, mode, |n, s| self.tpoly(n, s))?;
                }
            }
            reports.push(sweep.finish());
        }

        let mut specialization = Sweep::new(
            "T_n specializes to F^{des_K} and F^{inv_K}",
            format!("2 <= n <= {multi_max}, Π ⊆ S_3, |Π| <= 2, K ⊆ [n-1]"),
        );
        for n in 2..=multi_max {
            for spec in &sets {
                let t = self.tpoly(n, spec)?;
                for widths in width_subsets(n, n) {
                    let ws = WidthSet::new(n, widths.clone())?;
                    for (stat, assignment) in [
                        (Statistic::Des, super::des_assignment(&ws)),
                        (Statistic::Inv, super::inv_assignment(&ws)),
                    ] {
                        let brute = self.brute(n, &StatSpec::new(stat, widths.clone(), spec.clone()))?;
                        specialization.check(
                            || Params::n(n).with_patterns(spec).with_widths(&widths).with_mode(stat),
                            &t.specialize(&assignment)?,
                            &brute,
                        );
                    }
                }
            }
        }
        reports.push(specialization.finish());

        let range = format!("2 <= n <= {uni_max}, 1 <= k < n");
        let mut r123 = Sweep::new("F^{des_k}(123; q) = q^{n-k} F^{des_k}(321; 1/q)", &range);
        let mut r213 = Sweep::new("F^{des_k}(132; q) = F^{des_k}(213; q)", &range);
        let mut r231 = Sweep::new("F^{des_k}(132; q) = q^{n-k} F^{des_k}(231; 1/q)", &range);
        let mut r312 = Sweep::new("F^{des_k}(132; q) = q^{n-k} F^{des_k}(312; 1/q)", &range);
        for n in 2..=uni_max {
            for k in 1..n {
                let f = |p| self.width(n, Statistic::Des, k, p);
                let s = (n - k) as i64;
                r123.check(|| Params::nk(n, k), &f("123")?, &f("321")?.reciprocal_transform(s));
                let f132 = f("132")?;
                r213.check(|| Params::nk(n, k), &f132, &f("213")?);
                r231.check(|| Params::nk(n, k), &f132, &f("231")?.reciprocal_transform(s));
                r312.check(|| Params::nk(n, k), &f132, &f("312")?.reciprocal_transform(s));
            }
        }
        reports.extend([r123.finish(), r213.finish(), r231.finish(), r312.finish()]);
        Ok(reports)
    }

    fn avoidance(&self, n_max: usize) -> Result<Vec<VerificationReport>> {
        let range = format!("2 <= n <= {n_max}, 1 <= k < n");
        let mut reports = Vec::new();
        let names = [
            (Family::Avoid312, "rec_312"),
            (Family::Avoid123And132, "rec_123_132"),
            (Family::Avoid123And312, "rec_123_312"),
            (Family::Avoid132And213, "rec_132_213"),
        ];
        for (family, name) in names {
            let mut sweep = Sweep::new(format!("{name}: recursion = F^{{des_k}}{family}"), &range);
            for n in 2..=n_max {
                for k in 1..n {
                    let brute = self.width(n, Statistic::Des, k, family.patterns())?;
                    sweep.check(|| Params::nk(n, k), &evaluate(family, n, k, self.recursions)?, &brute);
                }
            }
            reports.push(sweep.finish());
        }

        let mut closed = Sweep::new(
            "closed_inv_132_312: F^{inv_k}(132,312) = F^{inv_k}(132,231) = 2^{k-1}(1+q^d)^r ∏(1+q^i)^k",
            &range,
        );
        for n in 2..=n_max {
            for k in 1..n {
                let formula = closed_inv_132_312(n, k)?;
                for patterns in ["132,312", "132,231"] {
                    let brute = self.width(n, Statistic::Inv, k, patterns)?;
                    let spec = AvoidanceSpec::parse(patterns)?;
                    closed.check(|| Params::nk(n, k).with_patterns(&spec), &formula, &brute);
                }
                let multiples = WidthSet::single(n, k)?.multiples();
                closed.check(
                    || Params::nk(n, k).with_widths(multiples.as_slice()).with_mode("product"),
                    &formula,
                    &product_132_312(&multiples),
                );
            }
        }
        reports.push(closed.finish());

        let product_max = n_max.min(8);
        for (name, patterns, product) in [
            ("product_132_231", "132,231", product_132_231 as fn(&WidthSet) -> LaurentPoly),
            ("product_132_312", "132,312", product_132_312 as fn(&WidthSet) -> LaurentPoly),
        ] {
            let mut sweep = Sweep::new(
                format!("{name}: F^{{des_K}}({patterns}) = ∏ (1+q^{{i-1}})^{{k_i - k_{{i-1}}}}"),
                format!("2 <= n <= {product_max}, ∅ ≠ K ⊆ [n-1]"),
            );
            let avoid = AvoidanceSpec::parse(patterns)?;
            for n in 2..=product_max {
                for widths in width_subsets(n, n) {
                    let ws = WidthSet::new(n, widths.clone())?;
                    let brute = self.brute(n, &StatSpec::new(Statistic::Des, widths.clone(), avoid.clone()))?;
                    sweep.check(|| Params::n(n).with_widths(&widths), &product(&ws), &brute);
                }
            }
            reports.push(sweep.finish());
        }

        let mut at_one = Sweep::new(
            "q = 1: rec_312 gives C_n, rec_123_312 gives binom(n,2)+1, the others give 2^{n-1}",
            format!("0 <= n <= {n_max}, 1 <= k <= max(n-1, 1)"),
        );
        for n in 0..=n_max {
            for k in 1..=n.saturating_sub(1).max(1) {
                for family in Family::ALL {
                    let expected = match family {
                        Family::Avoid312 => catalan(n),
                        Family::Avoid123And312 => BigInt::from(n * n.saturating_sub(1) / 2 + 1),
                        _ => two_pow(n),
                    };
                    let value = evaluate(family, n, k, self.recursions)?.eval_at_one();
                    at_one.check_text(|| Params::nk(n, k).with_mode(family), &value, &expected);
                }
            }
        }
        reports.push(at_one.finish());

        let mut degree = Sweep::new(
            "deg F^{des_k}(312) = n - k, deg F^{inv_k}(312) = Σ_{i=1}^{n-k} ⌊(n-i)/k⌋",
            &range,
        );
        for n in 2..=n_max {
            for k in 1..n {
                degree_cases(&mut degree, n, k, self.limits)?;
            }
        }
        reports.push(degree.finish());
        Ok(reports)
    }

    fn counting(&self, n_max: usize) -> Result<Vec<VerificationReport>> {
        let mut reports = Vec::new();

        let mut catalan_sweep = Sweep::new("|Av_n(π)| = C_n for π ∈ S_3", format!("0 <= n <= {n_max}"));
        for n in 0..=n_max {
            for pattern in ["123", "132", "213", "231", "312", "321"] {
                let spec = AvoidanceSpec::parse(pattern)?;
                let size = BigInt::from(class_size(n, &spec, self.limits)?);
                catalan_sweep.check_text(|| Params::n(n).with_patterns(&spec), &size, &catalan(n));
            }
        }
        reports.push(catalan_sweep.finish());

        let mut empty = Sweep::new("|Av_n(123,321)| = 0", format!("5 <= n <= {n_max}"));
        let spec = AvoidanceSpec::parse("123,321")?;
        for n in 5..=n_max {
            empty.check_text(|| Params::n(n), &class_size(n, &spec, self.limits)?, &0);
        }
        reports.push(empty.finish());

        let mut mass = Sweep::new(
            "F_n^{st}(Π; 1) = |Av_n(Π)|",
            format!("2 <= n <= {n_max}, st ∈ {{des,inv,exc,maj}}, 1 <= k < n, Π ⊆ S_3, |Π| <= 2"),
        );
        for n in 2..=n_max {
            for spec in small_pattern_sets() {
                let size = BigInt::from(class_size(n, &spec, self.limits)?);
                for stat in Statistic::ALL {
                    for k in 1..n {
                        let p = self.brute(n, &StatSpec::width(stat, k).avoiding(spec.clone()))?;
                        mass.check_text(
                            || Params::nk(n, k).with_patterns(&spec).with_mode(stat),
                            &p.eval_at_one(),
                            &size,
                        );
                    }
                }
            }
        }
        reports.push(mass.finish());

        let mut g_mass = Sweep::new("G_{n,k}(1) = n!", format!("2 <= n <= {n_max}, 1 <= k < n"));
        for n in 2..=n_max {
            for k in 1..n {
                g_mass.check_text(|| Params::nk(n, k), &self.gpoly(n, k)?.eval_at_one(), &factorial(n));
            }
        }
        reports.push(g_mass.finish());

        let p = |s| AvoidanceSpec::parse(s);
        reports.push(wilf_check(&p("312")?, &p("321")?, n_max, self.limits)?);
        reports.push(wilf_check(&p("123,132")?, &p("132,231")?, n_max, self.limits)?);
        Ok(reports)
    }

    fn inv_maj(&self, n_max: usize) -> Result<Vec<VerificationReport>> {
        let mut notes = Vec::new();
        for n in 3..=n_max {
            let mut agreeing = Vec::new();
            let mut total = 0;
            for widths in width_subsets(n, n).into_iter().filter(|w| w.len() >= 2) {
                total += 1;
                let inv = self.brute(n, &StatSpec::new(Statistic::Inv, widths.clone(), AvoidanceSpec::none()))?;
                let maj = self.brute(n, &StatSpec::new(Statistic::Maj, widths.clone(), AvoidanceSpec::none()))?;
                if inv == maj {
                    agreeing.push(WidthSet::new(n, widths)?.to_string());
                }
            }
            let mut line = format!("n = {n}: {} of {total} width sets with |K| >= 2 agree", agreeing.len());
            if !agreeing.is_empty() {
                line.push_str(&format!(": {}", agreeing.join(" ")));
            }
            notes.push(line);
        }
        Ok(vec![VerificationReport::informational(
            "F^{inv_K} vs F^{maj_K} for |K| >= 2 (no claim)",
            format!("3 <= n <= {n_max}"),
            notes,
        )])
    }
}

/// Runs `suite` with a fresh [`Runner`].
pub fn run_suite(
    suite: Suite,
    n_max: Option<usize>,
    limits: &Limits,
    recursions: &RecursionCache,
) -> Result<Vec<VerificationReport>> {
    Runner::new(limits, recursions).run(suite, n_max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genfun::verify::Status;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert_eq!(Suite::parse_list("all").unwrap().len(), 10);
        assert_eq!(Suite::parse_list("theorem,table").unwrap(), [Suite::Theorem, Suite::Table]);
        assert!(Suite::parse_list("nope").is_err());
    }

    #[test]
    fn pattern_sets() {
        let sets = small_pattern_sets();
        assert_eq!(sets.len(), 22);
        assert!(sets[0].is_empty());
        assert_eq!(width_subsets(4, 3).len(), 7);
        assert_eq!(width_subsets(5, 2).len(), 10);
    }

    #[test]
    fn small_suites_pass() {
        let limits = Limits::default();
        let cache = RecursionCache::new();
        let runner = Runner::new(&limits, &cache);
        for (suite, n) in [
            (Suite::Example, None),
            (Suite::Theorem, Some(6)),
            (Suite::Corollary, Some(6)),
            (Suite::InclusionExclusion, Some(5)),
            (Suite::Table, Some(6)),
            (Suite::Conjecture, Some(7)),
            (Suite::Duality, Some(5)),
            (Suite::Avoidance, Some(6)),
            (Suite::Counting, Some(6)),
            (Suite::InvMaj, Some(5)),
        ] {
            for r in runner.run(suite, n).unwrap() {
                assert_ne!(r.status, Status::Mismatch, "{suite}: {r:?}");
            }
        }
    }

    #[test]
    fn caps_are_enforced() {
        let limits = Limits::default();
        let cache = RecursionCache::new();
        let runner = Runner::new(&limits, &cache);
        assert!(runner.run(Suite::Theorem, Some(11)).is_err());
        assert!(runner.run(Suite::Duality, Some(9)).is_err());
    }
}
