//! Generating-function distributions `F_n^{st}(Π; q) = Σ_{σ ∈ Av_n(Π)} q^{st σ}`.
//!
//! Exhaustive enumeration is the reference route; the closed forms here and
//! the recursions in [`recursions`] are fast paths that [`verify`] and
//! [`suites`] check against it.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{invalid, Result};
use crate::limits::Limits;
use crate::perm::{AvoidanceSpec, ClassWalker};
use crate::poly::{eulerian, multinomial_mnk, q_factorial, LaurentPoly, MultiPoly, VarValue};
use crate::stats::{des_k_count, exc_k_count, inv_gaps_count, maj_k_count, Statistic, WidthSet};

pub mod recursions;
pub mod suites;
pub mod table;
pub mod verify;

pub use recursions::{
    closed_inv_132_312, product_132_231, product_132_312, rec_123_132, rec_123_312, rec_132_213, rec_312,
    Family, RecursionCache,
};

/// Which statistic, which widths, and over which avoidance class.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StatSpec {
    pub statistic: Statistic,
    pub widths: Vec<usize>,
    pub avoid: AvoidanceSpec,
}

impl StatSpec {
    pub fn new(statistic: Statistic, widths: impl IntoIterator<Item = usize>, avoid: AvoidanceSpec) -> Self {
        StatSpec {
            statistic,
            widths: widths.into_iter().collect(),
            avoid,
        }
    }

    /// Single width `k` over all of `S_n`.
    pub fn width(statistic: Statistic, k: usize) -> Self {
        StatSpec::new(statistic, [k], AvoidanceSpec::none())
    }

    pub fn avoiding(mut self, avoid: AvoidanceSpec) -> Self {
        self.avoid = avoid;
        self
    }

    pub fn width_set(&self, n: usize) -> Result<WidthSet> {
        WidthSet::new(n, self.widths.iter().copied())
    }

    fn evaluator(&self, n: usize) -> Result<Evaluator> {
        let widths = self.width_set(n)?;
        Ok(match self.statistic {
            Statistic::Des => Evaluator::Des(widths.as_slice().to_vec()),
            Statistic::Exc => Evaluator::Exc(widths.as_slice().to_vec()),
            Statistic::Maj => Evaluator::Maj(widths.as_slice().to_vec()),
            Statistic::Inv => {
                let gaps = (0..n).map(|g| g > 0 && widths.iter().any(|k| g % k == 0)).collect();
                Evaluator::Inv(gaps)
            }
        })
    }
}

impl fmt::Display for StatSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let widths: Vec<String> = self.widths.iter().map(|k| k.to_string()).collect();
        write!(f, "{}_{{{}}}", self.statistic, widths.join(","))?;
        if !self.avoid.is_empty() {
            write!(f, " on Av({})", self.avoid)?;
        }
        Ok(())
    }
}

enum Evaluator {
    Des(Vec<usize>),
    Inv(Vec<bool>),
    Exc(Vec<usize>),
    Maj(Vec<usize>),
}

impl Evaluator {
    fn eval(&self, w: &[usize]) -> i64 {
        let v = match self {
            Evaluator::Des(ks) => ks.iter().map(|&k| des_k_count(w, k)).sum(),
            Evaluator::Inv(gaps) => inv_gaps_count(w, gaps),
            Evaluator::Exc(ks) => ks.iter().map(|&k| exc_k_count(w, k)).sum(),
            Evaluator::Maj(ks) => ks.iter().map(|&k| maj_k_count(w, k)).sum(),
        };
        v as i64
    }
}

/// Tallies `q^{f(σ)}` over `Av_n(Π)`.
///
/// The class is split by first letter and walked in parallel; partial tallies
/// are merged by exponent, so the result does not depend on scheduling.
pub fn distribution_of<F>(n: usize, avoid: &AvoidanceSpec, limits: &Limits, f: F) -> Result<LaurentPoly>
where
    F: Fn(&[usize]) -> i64 + Sync,
{
    limits.check_univariate(n)?;
    let tally = |mut walker: ClassWalker| {
        let mut counts: BTreeMap<i64, u64> = BTreeMap::new();
        while let Some(w) = walker.advance() {
            *counts.entry(f(w)).or_default() += 1;
        }
        counts
    };
    let counts = if n < 2 {
        tally(ClassWalker::new(n, avoid))
    } else {
        (1..=n)
            .into_par_iter()
            .map(|first| tally(ClassWalker::with_first_letter(n, avoid, first)))
            .reduce(BTreeMap::new, |mut a, b| {
                for (e, c) in b {
                    *a.entry(e).or_default() += c;
                }
                a
            })
    };
    Ok(LaurentPoly::from_terms(counts.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
}

/// Exhaustive-enumeration distribution of `spec` over `Av_n(Π)`.
pub fn brute_distribution(n: usize, spec: &StatSpec, limits: &Limits) -> Result<LaurentPoly> {
    limits.check_univariate(n)?;
    let evaluator = spec.evaluator(n)?;
    distribution_of(n, &spec.avoid, limits, |w| evaluator.eval(w))
}

fn check_width_range(n: usize, k: usize) -> Result<()> {
    if k == 0 || k >= n {
        return invalid(format!("width {k} is outside 1..={}", n.saturating_sub(1)));
    }
    Ok(())
}

/// `M_{n,k} · A_{d+1}(q)^r · A_d(q)^{k-r}` with `n = dk + r`.
pub fn closed_des_k(n: usize, k: usize) -> Result<LaurentPoly> {
    check_width_range(n, k)?;
    let (d, r) = (n / k, n % k);
    let m = multinomial_mnk(n, k)?;
    let body = &eulerian(d + 1).pow(r as i64)? * &eulerian(d).pow((k - r) as i64)?;
    Ok(body.scale(&m))
}

/// `M_{n,k} · [d+1]_q!^r · [d]_q!^{k-r}` with `n = dk + r`.
pub fn closed_inv_k(n: usize, k: usize) -> Result<LaurentPoly> {
    check_width_range(n, k)?;
    let (d, r) = (n / k, n % k);
    let m = multinomial_mnk(n, k)?;
    let body = &q_factorial(d + 1).pow(r as i64)? * &q_factorial(d).pow((k - r) as i64)?;
    Ok(body.scale(&m))
}

/// `T_n(Π; t_1, …, t_{n-1}) = Σ_{σ ∈ Av_n(Π)} Π_k t_k^{des_k σ}`.
pub fn t_polynomial(n: usize, avoid: &AvoidanceSpec, limits: &Limits) -> Result<MultiPoly> {
    limits.check_multivariate(n)?;
    let vars = n.saturating_sub(1);
    let tally = |mut walker: ClassWalker| {
        let mut counts: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
        while let Some(w) = walker.advance() {
            let exps: Vec<u32> = (1..=vars).map(|k| des_k_count(w, k) as u32).collect();
            *counts.entry(exps).or_default() += 1;
        }
        counts
    };
    let counts = if n < 2 {
        tally(ClassWalker::new(n, avoid))
    } else {
        (1..=n)
            .into_par_iter()
            .map(|first| tally(ClassWalker::with_first_letter(n, avoid, first)))
            .reduce(BTreeMap::new, |mut a, b| {
                for (e, c) in b {
                    *a.entry(e).or_default() += c;
                }
                a
            })
    };
    let mut t = MultiPoly::zero(vars);
    for (exps, c) in counts {
        t.add_term(exps, BigInt::from(c));
    }
    Ok(t)
}

/// Assignment `t_i = q` for `i ∈ K`, `t_i = 1` otherwise; specializes `T_n` to
/// `F_n^{des_K}`.
pub fn des_assignment(widths: &WidthSet) -> Vec<VarValue> {
    (1..widths.n())
        .map(|i| if widths.contains(i) { VarValue::Q } else { VarValue::One })
        .collect()
}

/// Assignment `t_i = q` whenever `i` is a multiple of some `k ∈ K`;
/// specializes `T_n` to `F_n^{inv_K}`.
pub fn inv_assignment(widths: &WidthSet) -> Vec<VarValue> {
    des_assignment(&widths.multiples())
}

/// `G_{n,k}(q) = Σ_{σ ∈ S_n} q^{des_k σ - des_{n-k} σ}`.
pub fn g_polynomial(n: usize, k: usize, limits: &Limits) -> Result<LaurentPoly> {
    check_width_range(n, k)?;
    let other = n - k;
    distribution_of(n, &AvoidanceSpec::none(), limits, |w| {
        des_k_count(w, k) as i64 - des_k_count(w, other) as i64
    })
}

/// `n · q^{1-k} · A_{n-1}(q)`.
pub fn conjectured_g(n: usize, k: usize) -> LaurentPoly {
    eulerian(n - 1).scale(&BigInt::from(n)).shift(1 - k as i64)
}
