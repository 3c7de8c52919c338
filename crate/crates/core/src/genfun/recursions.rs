//! Recursions and product formulas for `F_n^{des_k}(Π; q)` over small
//! avoidance classes.
//!
//! Base cases: `F_0 = 1`, and `F_m = |Av_m(Π)|` (a constant) whenever
//! `m <= k`, since no width-`k` descent fits in a word of length `m`.

use std::collections::HashMap;
use std::fmt;
use std::fs;
use std::path::Path;
use std::sync::Mutex;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::poly::{catalan, LaurentPoly};
use crate::stats::WidthSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "312")]
    Avoid312,
    #[serde(rename = "123,132")]
    Avoid123And132,
    #[serde(rename = "123,312")]
    Avoid123And312,
    #[serde(rename = "132,213")]
    Avoid132And213,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::Avoid312,
        Family::Avoid123And132,
        Family::Avoid123And312,
        Family::Avoid132And213,
    ];

    /// Pattern list in the text form accepted by `AvoidanceSpec::parse`.
    pub fn patterns(self) -> &'static str {
        match self {
            Family::Avoid312 => "312",
            Family::Avoid123And132 => "123,132",
            Family::Avoid123And312 => "123,312",
            Family::Avoid132And213 => "132,213",
        }
    }

    /// `|Av_m(Π)|`: `C_m`, `binom(m,2) + 1` for `{123,312}`, else `2^{m-1}`.
    pub fn class_size(self, m: usize) -> BigInt {
        match self {
            Family::Avoid312 => catalan(m),
            Family::Avoid123And312 => BigInt::from(m * m.saturating_sub(1) / 2 + 1),
            _ if m == 0 => BigInt::from(1),
            _ => BigInt::from(1) << (m - 1),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Av({})", self.patterns())
    }
}

/// Memo table shared by recursive evaluations, keyed by `(family, n, k)`.
///
/// The lock is never held across a recursive call, so one cache can be
/// shared between threads.
#[derive(Debug, Default)]
pub struct RecursionCache {
    table: Mutex<HashMap<(Family, usize, usize), LaurentPoly>>,
}

#[derive(Serialize, Deserialize)]
struct CacheEntry {
    family: Family,
    n: usize,
    k: usize,
    poly: LaurentPoly,
}

const CACHE_FILE: &str = "recursions.json";

impl RecursionCache {
    pub fn new() -> Self {
        RecursionCache::default()
    }

    pub fn len(&self) -> usize {
        self.lock().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn clear(&self) {
        self.lock().clear();
    }

    fn lock(&self) -> std::sync::MutexGuard<'_, HashMap<(Family, usize, usize), LaurentPoly>> {
        self.table.lock().unwrap_or_else(|e| e.into_inner())
    }

    fn get(&self, key: (Family, usize, usize)) -> Option<LaurentPoly> {
        self.lock().get(&key).cloned()
    }

    fn insert(&self, key: (Family, usize, usize), value: LaurentPoly) {
        self.lock().insert(key, value);
    }

    /// Loads `recursions.json` from `dir`; a missing file gives an empty cache.
    pub fn load(dir: &Path) -> Result<Self> {
        let path = dir.join(CACHE_FILE);
        let cache = RecursionCache::new();
        let text = match fs::read_to_string(&path) {
            Ok(text) => text,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(cache),
            Err(e) => return Err(Error::Cache(format!("{}: {e}", path.display()))),
        };
        let entries: Vec<CacheEntry> =
            serde_json::from_str(&text).map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
        for e in entries {
            cache.insert((e.family, e.n, e.k), e.poly);
        }
        Ok(cache)
    }

    /// Writes every entry to `dir/recursions.json`, sorted by key.
    pub fn save(&self, dir: &Path) -> Result<()> {
        let mut entries: Vec<CacheEntry> = self
            .lock()
            .iter()
            .map(|(&(family, n, k), poly)| CacheEntry {
                family,
                n,
                k,
                poly: poly.clone(),
            })
            .collect();
        entries.sort_by_key(|e| (e.family, e.n, e.k));
        let io = |e: std::io::Error| Error::Cache(format!("{}: {e}", dir.display()));
        fs::create_dir_all(dir).map_err(io)?;
        let text = serde_json::to_string(&entries).map_err(|e| Error::Cache(e.to_string()))?;
        fs::write(dir.join(CACHE_FILE), text).map_err(io)
    }
}

fn check_width(k: usize) -> Result<()> {
    if k == 0 {
        return invalid("width must be at least 1");
    }
    Ok(())
}

/// Evaluates `family`'s recursion at `(n, k)` through `cache`.
pub fn evaluate(family: Family, n: usize, k: usize, cache: &RecursionCache) -> Result<LaurentPoly> {
    check_width(k)?;
    Ok(eval(family, n, k, cache))
}

fn eval(family: Family, n: usize, k: usize, cache: &RecursionCache) -> LaurentPoly {
    if n == 0 {
        return LaurentPoly::one();
    }
    if family != Family::Avoid312 && n <= k {
        return LaurentPoly::constant(family.class_size(n));
    }
    if let Some(p) = cache.get((family, n, k)) {
        return p;
    }
    let f = |m: usize| eval(family, m, k, cache);
    let q = |e: usize| LaurentPoly::monomial(1, e as i64);
    let mut out = LaurentPoly::zero();
    match family {
        Family::Avoid312 => {
            for i in 1..=k.min(n) {
                out += f(n - i).scale(&catalan(i - 1));
            }
            for i in k + 1..=n {
                out += (&f(i - 1) * &f(n - i)).shift(1);
            }
        }
        Family::Avoid123And132 => {
            for i in 1..=k {
                out += f(n - i).shift(i.min(n - k) as i64);
            }
            for i in k + 1..=n - k {
                out += f(n - i).shift((i - 1).min(n - k - 1) as i64);
            }
            let m = (k + 1).max(n - k + 1);
            out += LaurentPoly::monomial(BigInt::from(1) << (n - m), (n - k - 1) as i64);
        }
        Family::Avoid123And312 => {
            for i in 1..=k {
                out += q((n - k).saturating_sub(i));
            }
            for i in k + 1..n {
                out += q((n.saturating_sub(2 * k)).max(i - k));
            }
            out += f(n - 1).shift(1);
        }
        Family::Avoid132And213 => {
            for i in 1..=k {
                out += f(n - i).shift(i.min(n - k) as i64);
            }
            for i in k + 1..=n - k {
                out += f(n - i).shift(k.min(n - i) as i64);
            }
            for i in (k + 1).max(n - k + 1)..=n {
                out += f(n - i).shift((n - i) as i64);
            }
        }
    }
    cache.insert((family, n, k), out.clone());
    out
}

/// `F_n^{des_k}(312)` by the Catalan-type recursion.
pub fn rec_312(n: usize, k: usize) -> Result<LaurentPoly> {
    evaluate(Family::Avoid312, n, k, &RecursionCache::new())
}

/// `F_n^{des_k}(123,132)`.
pub fn rec_123_132(n: usize, k: usize) -> Result<LaurentPoly> {
    evaluate(Family::Avoid123And132, n, k, &RecursionCache::new())
}

/// `F_n^{des_k}(123,312)`.
pub fn rec_123_312(n: usize, k: usize) -> Result<LaurentPoly> {
    evaluate(Family::Avoid123And312, n, k, &RecursionCache::new())
}

/// `F_n^{des_k}(132,213)`.
pub fn rec_132_213(n: usize, k: usize) -> Result<LaurentPoly> {
    evaluate(Family::Avoid132And213, n, k, &RecursionCache::new())
}

/// `∏_{i=1}^{l+1} (1 + q^{i-1})^{k_i - k_{i-1}}` for `K = {k_1 < … < k_l}`,
/// with `k_0 = 1` and `k_{l+1} = n`.
fn width_set_product(widths: &WidthSet) -> LaurentPoly {
    let mut bounds = vec![1];
    bounds.extend(widths.iter());
    bounds.push(widths.n());
    let mut out = LaurentPoly::one();
    for (i, pair) in bounds.windows(2).enumerate() {
        let factor = &LaurentPoly::one() + &LaurentPoly::monomial(1, i as i64);
        for _ in pair[0]..pair[1] {
            out = &out * &factor;
        }
    }
    out
}

/// `F_n^{des_K}(132,231)`.
pub fn product_132_231(widths: &WidthSet) -> LaurentPoly {
    width_set_product(widths)
}

/// `F_n^{des_K}(132,312)`.
pub fn product_132_312(widths: &WidthSet) -> LaurentPoly {
    width_set_product(widths)
}

/// `F_n^{inv_k}(132,312) = 2^{k-1} (1+q^d)^r ∏_{i=1}^{d-1} (1+q^i)^k`.
pub fn closed_inv_132_312(n: usize, k: usize) -> Result<LaurentPoly> {
    if k == 0 || k >= n {
        return invalid(format!("width {k} is outside 1..={}", n.saturating_sub(1)));
    }
    let (d, r) = (n / k, n % k);
    let one_plus = |e: usize| &LaurentPoly::one() + &LaurentPoly::monomial(1, e as i64);
    let mut out = LaurentPoly::constant(BigInt::from(1) << (k - 1));
    out = &out * &one_plus(d).pow(r as i64)?;
    for i in 1..d {
        out = &out * &one_plus(i).pow(k as i64)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genfun::{brute_distribution, StatSpec};
    use crate::limits::Limits;
    use crate::perm::AvoidanceSpec;
    use crate::stats::Statistic;

    fn lp(c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(c.iter().copied())
    }

    fn brute(n: usize, stat: Statistic, widths: Vec<usize>, patterns: &str) -> LaurentPoly {
        let spec = StatSpec::new(stat, widths, AvoidanceSpec::parse(patterns).unwrap());
        brute_distribution(n, &spec, &Limits::default()).unwrap()
    }

    #[test]
    fn small_examples() {
        assert_eq!(rec_312(0, 1).unwrap(), LaurentPoly::one());
        assert_eq!(rec_312(3, 1).unwrap(), lp(&[1, 3, 1]));
        assert_eq!(rec_123_132(3, 1).unwrap(), lp(&[0, 3, 1]));
        assert_eq!(rec_123_132(2, 1).unwrap(), lp(&[1, 1]));
        assert_eq!(rec_123_312(3, 1).unwrap(), brute(3, Statistic::Des, vec![1], "123,312"));
        assert_eq!(rec_123_312(4, 5).unwrap(), LaurentPoly::constant(7));
        assert_eq!(rec_132_213(3, 1).unwrap(), brute(3, Statistic::Des, vec![1], "132,213"));
        let k1 = WidthSet::single(3, 1).unwrap();
        assert_eq!(product_132_231(&k1), lp(&[1, 2, 1]));
        assert_eq!(product_132_312(&k1), lp(&[1, 2, 1]));
        assert_eq!(closed_inv_132_312(3, 1).unwrap(), lp(&[1, 1, 1, 1]));
        assert!(rec_312(3, 0).is_err());
        assert!(closed_inv_132_312(3, 3).is_err());
    }

    #[test]
    fn recursions_match_brute_force() {
        let cache = RecursionCache::new();
        for n in 1..=8 {
            for k in 1..n {
                for family in Family::ALL {
                    assert_eq!(
                        evaluate(family, n, k, &cache).unwrap(),
                        brute(n, Statistic::Des, vec![k], family.patterns()),
                        "{family} n={n} k={k}"
                    );
                }
                let inv = closed_inv_132_312(n, k).unwrap();
                assert_eq!(inv, brute(n, Statistic::Inv, vec![k], "132,312"));
                assert_eq!(inv, brute(n, Statistic::Inv, vec![k], "132,231"));
                let multiples = WidthSet::single(n, k).unwrap().multiples();
                assert_eq!(inv, product_132_312(&multiples));
            }
        }
    }

    #[test]
    fn products_match_brute_force_for_all_width_sets() {
        for n in 2..=7usize {
            for mask in 1u32..(1 << (n - 1)) {
                let widths: Vec<usize> = (1..n).filter(|k| mask & (1 << (k - 1)) != 0).collect();
                let ws = WidthSet::new(n, widths.clone()).unwrap();
                assert_eq!(product_132_231(&ws), brute(n, Statistic::Des, widths.clone(), "132,231"));
                assert_eq!(product_132_312(&ws), brute(n, Statistic::Des, widths, "132,312"));
            }
        }
    }

    #[test]
    fn class_sizes_match_enumeration() {
        for family in Family::ALL {
            let avoid = AvoidanceSpec::parse(family.patterns()).unwrap();
            for m in 0..=8 {
                let size = crate::perm::class_size(m, &avoid, &Limits::default()).unwrap();
                assert_eq!(family.class_size(m), BigInt::from(size), "{family} m={m}");
            }
        }
    }

    #[test]
    fn specializations_at_one() {
        for n in 0..=12 {
            assert_eq!(rec_312(n, 2).unwrap().eval_at_one(), catalan(n));
            let two = if n == 0 { BigInt::from(1) } else { BigInt::from(1) << (n - 1) };
            assert_eq!(rec_123_132(n, 2).unwrap().eval_at_one(), two);
            assert_eq!(rec_123_312(n, 2).unwrap().eval_at_one(), BigInt::from(n * n.saturating_sub(1) / 2 + 1));
            assert_eq!(rec_132_213(n, 2).unwrap().eval_at_one(), two);
        }
    }

    #[test]
    fn cache_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let cache = RecursionCache::new();
        let p = evaluate(Family::Avoid312, 7, 2, &cache).unwrap();
        assert!(!cache.is_empty());
        cache.save(dir.path()).unwrap();
        let loaded = RecursionCache::load(dir.path()).unwrap();
        assert_eq!(loaded.len(), cache.len());
        assert_eq!(evaluate(Family::Avoid312, 7, 2, &loaded).unwrap(), p);
        assert!(RecursionCache::load(&dir.path().join("missing")).unwrap().is_empty());
        std::fs::write(dir.path().join(CACHE_FILE), "not json").unwrap();
        assert!(RecursionCache::load(dir.path()).is_err());
    }
}
