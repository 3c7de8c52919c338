//! Width-k descents, inversions, excedances and major index, together with
//! the block decomposition `σ ↦ (std β^1, …, std β^k)` they are built on.
//!
//! Indices are 1-based throughout. `Des_K` keeps multiplicities (a position
//! that is a descent of two widths counts twice) while `Inv_K` is a plain set
//! union of pairs.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::perm::{ranks_of, Permutation};

/// A nonempty set of widths `K ⊆ [n-1]`, kept in increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WidthSet {
    n: usize,
    widths: Vec<usize>,
}

impl WidthSet {
    pub fn new<I: IntoIterator<Item = usize>>(n: usize, widths: I) -> Result<Self> {
        let widths: Vec<usize> = widths.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        if widths.is_empty() {
            return invalid("width set must be nonempty");
        }
        if let Some(&bad) = widths.iter().find(|&&k| k == 0 || k >= n) {
            return invalid(format!("width {bad} is outside 1..={}", n.saturating_sub(1)));
        }
        Ok(WidthSet { n, widths })
    }

    pub fn single(n: usize, k: usize) -> Result<Self> {
        WidthSet::new(n, [k])
    }

    /// `[n-1] ∩ (k_1 Z ∪ k_2 Z ∪ …)`: every width that is a multiple of a member.
    pub fn multiples(&self) -> WidthSet {
        let widths = (1..self.n)
            .filter(|w| self.widths.iter().any(|k| w % k == 0))
            .collect();
        WidthSet { n: self.n, widths }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.widths
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.widths.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.widths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.widths.is_empty()
    }

    pub fn contains(&self, k: usize) -> bool {
        self.widths.binary_search(&k).is_ok()
    }

    fn check(&self, sigma: &Permutation) -> Result<()> {
        if sigma.len() != self.n {
            return invalid(format!(
                "width set is for n = {} but the permutation has length {}",
                self.n,
                sigma.len()
            ));
        }
        Ok(())
    }
}

impl fmt::Display for WidthSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.widths.iter().map(|k| k.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// The four statistic families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Statistic {
    Des,
    Inv,
    Exc,
    Maj,
}

impl Statistic {
    pub const ALL: [Statistic; 4] = [Statistic::Des, Statistic::Inv, Statistic::Exc, Statistic::Maj];

    pub fn name(self) -> &'static str {
        match self {
            Statistic::Des => "des",
            Statistic::Inv => "inv",
            Statistic::Exc => "exc",
            Statistic::Maj => "maj",
        }
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Statistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "des" => Ok(Statistic::Des),
            "inv" => Ok(Statistic::Inv),
            "exc" => Ok(Statistic::Exc),
            "maj" => Ok(Statistic::Maj),
            other => invalid(format!("unknown statistic {other:?} (expected des, inv, exc or maj)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentRecord {
    pub per_width: BTreeMap<usize, Vec<usize>>,
    /// `Des_K` as a sorted multiset.
    pub multiset: Vec<usize>,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InversionRecord {
    pub per_width: BTreeMap<usize, Vec<(usize, usize)>>,
    /// `Inv_K`, deduplicated and sorted.
    pub pairs: Vec<(usize, usize)>,
    pub count: usize,
}

/// The `k` interleaved subsequences `β^i = a_i a_{i+k} a_{i+2k} …`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub k: usize,
    /// `n = d k + r` with `0 <= r < k`.
    pub d: usize,
    pub r: usize,
    pub blocks: Vec<Vec<usize>>,
    pub standardized: Vec<Permutation>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassicalStats {
    pub des: usize,
    pub inv: usize,
    pub maj: usize,
    pub exc: usize,
}

fn check_width(k: usize) -> Result<()> {
    if k == 0 {
        return invalid("width must be at least 1");
    }
    Ok(())
}

/// `Des_k(σ) = {i ∈ [n-k] : a_i > a_{i+k}}`; empty when `k >= n`.
pub fn des_k(sigma: &Permutation, k: usize) -> Result<Vec<usize>> {
    check_width(k)?;
    let w = sigma.word();
    Ok((0..w.len().saturating_sub(k))
        .filter(|&i| w[i] > w[i + k])
        .map(|i| i + 1)
        .collect())
}

pub fn des_widths(sigma: &Permutation, widths: &WidthSet) -> Result<DescentRecord> {
    widths.check(sigma)?;
    let mut per_width = BTreeMap::new();
    let mut multiset = Vec::new();
    for k in widths.iter() {
        let set = des_k(sigma, k)?;
        multiset.extend_from_slice(&set);
        per_width.insert(k, set);
    }
    multiset.sort_unstable();
    let count = multiset.len();
    Ok(DescentRecord {
        per_width,
        multiset,
        count,
    })
}

/// Pairs `(i, i + m k)`, `m >= 1`, with `a_i > a_{i+mk}`.
pub fn inv_k(sigma: &Permutation, k: usize) -> Result<Vec<(usize, usize)>> {
    check_width(k)?;
    let w = sigma.word();
    let mut pairs = Vec::new();
    for i in 0..w.len() {
        for j in (i + k..w.len()).step_by(k) {
            if w[i] > w[j] {
                pairs.push((i + 1, j + 1));
            }
        }
    }
    Ok(pairs)
}

pub fn inv_widths(sigma: &Permutation, widths: &WidthSet) -> Result<InversionRecord> {
    widths.check(sigma)?;
    let mut per_width = BTreeMap::new();
    let mut union = BTreeSet::new();
    for k in widths.iter() {
        let pairs = inv_k(sigma, k)?;
        union.extend(pairs.iter().copied());
        per_width.insert(k, pairs);
    }
    let pairs: Vec<_> = union.into_iter().collect();
    let count = pairs.len();
    Ok(InversionRecord {
        per_width,
        pairs,
        count,
    })
}

/// `inv_K` by the alternating sum of `inv_{lcm(K')}` over nonempty `K' ⊆ K`,
/// where a term vanishes once its lcm reaches `n`.
pub fn inv_inclusion_exclusion(sigma: &Permutation, widths: &WidthSet) -> Result<usize> {
    widths.check(sigma)?;
    let n = sigma.len();
    let ks = widths.as_slice();
    if ks.len() >= usize::BITS as usize {
        return invalid("width set too large for subset expansion");
    }
    let mut total: i64 = 0;
    for mask in 1usize..(1 << ks.len()) {
        // The lcm saturates at n: every further multiple is also >= n.
        let mut lcm = 1usize;
        for (bit, &k) in ks.iter().enumerate() {
            if mask & (1 << bit) != 0 && lcm < n {
                lcm = lcm.lcm(&k);
            }
        }
        if lcm >= n {
            continue;
        }
        let term = inv_k_count(sigma.word(), lcm) as i64;
        if mask.count_ones() % 2 == 1 {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total as usize)
}

pub fn block_decompose(sigma: &Permutation, k: usize) -> Result<BlockDecomposition> {
    let n = sigma.len();
    if k == 0 || k > n {
        return invalid(format!("block width {k} is outside 1..={n}"));
    }
    let (d, r) = n.div_rem(&k);
    let w = sigma.word();
    let blocks: Vec<Vec<usize>> = (0..k).map(|i| w[i..].iter().step_by(k).copied().collect()).collect();
    let standardized = blocks
        .iter()
        .map(|b| Permutation::from_word_unchecked(ranks_of(b)))
        .collect();
    Ok(BlockDecomposition {
        k,
        d,
        r,
        blocks,
        standardized,
    })
}

/// Excedance positions `{p : b_p > p}` of a standardized block, 1-based.
fn excedance_positions(std_block: &[usize]) -> impl Iterator<Item = usize> + '_ {
    std_block
        .iter()
        .enumerate()
        .filter(|&(p, &b)| b > p + 1)
        .map(|(p, _)| p + 1)
}

/// The excedance positions of every standardized block, listed by width and
/// then by block. Its length is `exc_K(σ)`.
pub fn exc_positions(sigma: &Permutation, widths: &WidthSet) -> Result<Vec<usize>> {
    widths.check(sigma)?;
    let mut out = Vec::new();
    for k in widths.iter() {
        for block in block_decompose(sigma, k)?.standardized {
            out.extend(excedance_positions(block.word()));
        }
    }
    Ok(out)
}

/// `exc_K(σ) = Σ_{k∈K} Σ_i exc(std β^i)`.
pub fn exc_widths(sigma: &Permutation, widths: &WidthSet) -> Result<usize> {
    widths.check(sigma)?;
    Ok(widths.iter().map(|k| exc_k_count(sigma.word(), k)).sum())
}

/// `maj_K(σ) = Σ_{k∈K} Σ_{i∈Des_k(σ)} ⌈i/k⌉`.
pub fn maj_widths(sigma: &Permutation, widths: &WidthSet) -> Result<usize> {
    widths.check(sigma)?;
    Ok(widths.iter().map(|k| maj_k_count(sigma.word(), k)).sum())
}

pub fn classical(sigma: &Permutation) -> ClassicalStats {
    let w = sigma.word();
    let descents = || (1..w.len()).filter(|&i| w[i - 1] > w[i]);
    let inv = (0..w.len())
        .map(|i| w[i + 1..].iter().filter(|&&b| b < w[i]).count())
        .sum();
    ClassicalStats {
        des: descents().count(),
        inv,
        maj: descents().sum(),
        exc: excedance_positions(w).count(),
    }
}

pub(crate) fn des_k_count(w: &[usize], k: usize) -> usize {
    (0..w.len().saturating_sub(k)).filter(|&i| w[i] > w[i + k]).count()
}

pub(crate) fn inv_k_count(w: &[usize], k: usize) -> usize {
    let mut count = 0;
    for i in 0..w.len() {
        for j in (i + k..w.len()).step_by(k) {
            if w[i] > w[j] {
                count += 1;
            }
        }
    }
    count
}

/// Counts pairs whose gap is flagged in `gap_ok` (indexed by `j - i`).
pub(crate) fn inv_gaps_count(w: &[usize], gap_ok: &[bool]) -> usize {
    let mut count = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if gap_ok[j - i] && w[i] > w[j] {
                count += 1;
            }
        }
    }
    count
}

pub(crate) fn exc_k_count(w: &[usize], k: usize) -> usize {
    let mut block = Vec::with_capacity(w.len() / k + 1);
    let mut count = 0;
    for i in 0..k.min(w.len()) {
        block.clear();
        block.extend(w[i..].iter().step_by(k).copied());
        for (p, &v) in block.iter().enumerate() {
            let rank = 1 + block.iter().filter(|&&u| u < v).count();
            if rank > p + 1 {
                count += 1;
            }
        }
    }
    count
}

pub(crate) fn maj_k_count(w: &[usize], k: usize) -> usize {
    (0..w.len().saturating_sub(k))
        .filter(|&i| w[i] > w[i + k])
        .map(|i| (i + 1).div_ceil(k))
        .sum()
}

/// JSON view of the statistics of one permutation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatRecord {
    pub perm: String,
    pub widths: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub des: Option<BTreeMap<String, Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub des_multiset: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub inv: Option<Vec<[usize; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub exc_positions: Option<Vec<usize>>,
    pub counts: BTreeMap<String, usize>,
}

/// Collects the requested statistics (all four when `only` is `None`).
pub fn stat_record(sigma: &Permutation, widths: &WidthSet, only: Option<Statistic>) -> Result<StatRecord> {
    widths.check(sigma)?;
    let wanted = |s: Statistic| only.is_none_or(|o| o == s);
    let mut rec = StatRecord {
        perm: sigma.to_string(),
        widths: widths.as_slice().to_vec(),
        des: None,
        des_multiset: None,
        inv: None,
        exc_positions: None,
        counts: BTreeMap::new(),
    };
    if wanted(Statistic::Des) {
        let d = des_widths(sigma, widths)?;
        rec.des = Some(d.per_width.into_iter().map(|(k, v)| (k.to_string(), v)).collect());
        rec.des_multiset = Some(d.multiset);
        rec.counts.insert("des".into(), d.count);
    }
    if wanted(Statistic::Inv) {
        let i = inv_widths(sigma, widths)?;
        rec.inv = Some(i.pairs.iter().map(|&(a, b)| [a, b]).collect());
        rec.counts.insert("inv".into(), i.count);
    }
    if wanted(Statistic::Exc) {
        let e = exc_positions(sigma, widths)?;
        rec.counts.insert("exc".into(), e.len());
        rec.exc_positions = Some(e);
    }
    if wanted(Statistic::Maj) {
        rec.counts.insert("maj".into(), maj_widths(sigma, widths)?);
    }
    Ok(rec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::limits::Limits;
    use crate::perm::enumerate_sn;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn ws(n: usize, k: &[usize]) -> WidthSet {
        WidthSet::new(n, k.iter().copied()).unwrap()
    }

    // Oracles: scan every index or pair straight from the definitions.
    fn des_oracle(w: &[usize], k: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for i in 1..=w.len() {
            if i + k <= w.len() && w[i - 1] > w[i + k - 1] {
                out.push(i);
            }
        }
        out
    }

    fn inv_oracle(w: &[usize], k: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=w.len() {
            for j in 1..=w.len() {
                if i < j && (j - i) % k == 0 && w[i - 1] > w[j - 1] {
                    out.push((i, j));
                }
            }
        }
        out
    }

    fn all_width_sets(n: usize, max_size: usize) -> Vec<WidthSet> {
        let m = n.saturating_sub(1);
        (1u32..(1 << m))
            .filter(|mask| mask.count_ones() as usize <= max_size)
            .map(|mask| WidthSet::new(n, (1..=m).filter(|k| mask & (1 << (k - 1)) != 0)).unwrap())
            .collect()
    }

    #[test]
    fn width_set_validation() {
        assert!(matches!(WidthSet::new(5, []), Err(Error::InvalidInput(_))));
        assert!(WidthSet::new(5, [5]).is_err());
        assert!(WidthSet::new(5, [0]).is_err());
        assert!(WidthSet::new(1, [1]).is_err());
        let k = ws(7, &[3, 2, 3]);
        assert_eq!(k.as_slice(), &[2, 3]);
        assert_eq!(k.multiples().as_slice(), &[2, 3, 4, 6]);
        assert_eq!(k.to_string(), "{2,3}");
        assert!(des_widths(&p("123"), &k).is_err());
    }

    #[test]
    fn width_descent_examples() {
        let s = p("4136572");
        assert_eq!(des_k(&s, 2).unwrap(), vec![1, 5]);
        assert_eq!(des_k(&s, 3).unwrap(), vec![4]);
        assert!(des_k(&Permutation::identity(6), 2).unwrap().is_empty());
        assert_eq!(des_k(&Permutation::decreasing(6), 2).unwrap(), vec![1, 2, 3, 4]);
        assert!(des_k(&s, 7).unwrap().is_empty());
        assert!(des_k(&s, 0).is_err());

        let rec = des_widths(&s, &ws(7, &[2, 3])).unwrap();
        assert_eq!(rec.multiset, vec![1, 4, 5]);
        assert_eq!(rec.count, 3);
        assert_eq!(des_widths(&Permutation::identity(5), &ws(5, &[1, 3])).unwrap().count, 0);
        let rec = des_widths(&p("321"), &ws(3, &[1, 2])).unwrap();
        assert_eq!(rec.multiset, vec![1, 1, 2]);
        assert_eq!(rec.count, 3);
    }

    #[test]
    fn width_inversion_examples() {
        let s = p("4136572");
        assert_eq!(inv_k(&s, 2).unwrap(), vec![(1, 3), (1, 7), (3, 7), (5, 7)]);
        assert_eq!(inv_k(&s, 3).unwrap(), vec![(1, 7), (4, 7)]);
        assert!(inv_k(&Permutation::identity(5), 2).unwrap().is_empty());
        assert!(inv_k(&s, 0).is_err());

        let rec = inv_widths(&s, &ws(7, &[2, 3])).unwrap();
        assert_eq!(rec.pairs, vec![(1, 3), (1, 7), (3, 7), (4, 7), (5, 7)]);
        assert_eq!(rec.count, 5);
        assert_eq!(inv_widths(&s, &ws(7, &[1])).unwrap().count, classical(&s).inv);
        let rec = inv_widths(&p("321"), &ws(3, &[1, 2])).unwrap();
        assert_eq!(rec.pairs, vec![(1, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn inclusion_exclusion_examples() {
        let s = p("4136572");
        assert_eq!(inv_k_count(s.word(), 6), 1);
        assert_eq!(inv_inclusion_exclusion(&s, &ws(7, &[2, 3])).unwrap(), 4 + 2 - 1);
        assert_eq!(inv_inclusion_exclusion(&s, &ws(7, &[3])).unwrap(), 2);
        for s in enumerate_sn(5, &Limits::default()).unwrap() {
            let expected = inv_oracle(s.word(), 2).len() + inv_oracle(s.word(), 3).len();
            assert_eq!(inv_inclusion_exclusion(&s, &ws(5, &[2, 3])).unwrap(), expected);
        }
    }

    #[test]
    fn block_examples() {
        let s = p("4136572");
        let b = block_decompose(&s, 2).unwrap();
        assert_eq!((b.d, b.r), (3, 1));
        assert_eq!(b.blocks, vec![vec![4, 3, 5, 2], vec![1, 6, 7]]);
        assert_eq!(b.standardized, vec![p("3241"), p("123")]);
        let b = block_decompose(&s, 3).unwrap();
        assert_eq!((b.d, b.r), (2, 1));
        assert_eq!(b.blocks, vec![vec![4, 6, 2], vec![1, 5], vec![3, 7]]);
        assert_eq!(b.standardized, vec![p("231"), p("12"), p("12")]);
        let b = block_decompose(&s, 1).unwrap();
        assert_eq!(b.standardized, vec![s.clone()]);
        assert!(block_decompose(&s, 0).is_err());
        assert!(block_decompose(&s, 8).is_err());
        assert_eq!(block_decompose(&s, 7).unwrap().blocks.len(), 7);
    }

    #[test]
    fn excedance_and_major_examples() {
        let s = p("4136572");
        let k = ws(7, &[2, 3]);
        assert_eq!(exc_positions(&s, &k).unwrap(), vec![1, 3, 1, 2]);
        assert_eq!(exc_widths(&s, &k).unwrap(), 4);
        assert_eq!(maj_widths(&s, &k).unwrap(), 6);
        assert_eq!(exc_widths(&s, &ws(7, &[1])).unwrap(), classical(&s).exc);
        assert_eq!(maj_widths(&s, &ws(7, &[1])).unwrap(), classical(&s).maj);
        let id = Permutation::identity(6);
        assert_eq!(exc_widths(&id, &ws(6, &[1, 2, 5])).unwrap(), 0);
        assert_eq!(maj_widths(&id, &ws(6, &[1, 2, 5])).unwrap(), 0);
    }

    #[test]
    fn classical_examples() {
        // Des(4136572) = {1, 4, 6}.
        assert_eq!(
            classical(&p("4136572")),
            ClassicalStats { des: 3, inv: 8, maj: 11, exc: 3 }
        );
        assert_eq!(
            classical(&Permutation::identity(5)),
            ClassicalStats { des: 0, inv: 0, maj: 0, exc: 0 }
        );
        assert_eq!(classical(&p("321")), ClassicalStats { des: 2, inv: 3, maj: 3, exc: 1 });
        assert_eq!(classical(&Permutation::empty()).inv, 0);
    }

    #[test]
    fn definitions_match_oracles_exhaustively() {
        let limits = Limits::default();
        for n in 0..=7 {
            for s in enumerate_sn(n, &limits).unwrap() {
                let w = s.word();
                for k in 1..=n + 1 {
                    assert_eq!(des_k(&s, k).unwrap(), des_oracle(w, k));
                    assert_eq!(inv_k(&s, k).unwrap(), inv_oracle(w, k));
                    assert_eq!(des_k_count(w, k), des_oracle(w, k).len());
                    assert_eq!(inv_k_count(w, k), inv_oracle(w, k).len());
                }
            }
        }
    }

    #[test]
    fn complement_and_reverse_flip_descents() {
        let limits = Limits::default();
        for n in 1..=7 {
            for s in enumerate_sn(n, &limits).unwrap() {
                for k in 1..n {
                    let d = des_k_count(s.word(), k);
                    assert_eq!(d + des_k_count(s.complement().word(), k), n - k);
                    assert_eq!(d + des_k_count(s.reverse().word(), k), n - k);
                }
            }
        }
    }

    #[test]
    fn inversions_are_sums_of_wider_descents() {
        let limits = Limits::default();
        for n in 1..=7 {
            for s in enumerate_sn(n, &limits).unwrap() {
                for k in 1..n {
                    let via_descents: usize = (1..).map(|j| j * k).take_while(|&w| w < n).map(|w| des_k_count(s.word(), w)).sum();
                    assert_eq!(inv_k_count(s.word(), k), via_descents);
                }
            }
        }
    }

    #[test]
    fn inclusion_exclusion_matches_union_exhaustively() {
        let limits = Limits::default();
        for n in 2..=7 {
            let sets = all_width_sets(n, 3);
            for s in enumerate_sn(n, &limits).unwrap() {
                for k in &sets {
                    assert_eq!(
                        inv_inclusion_exclusion(&s, k).unwrap(),
                        inv_widths(&s, k).unwrap().count,
                        "{s} {k}"
                    );
                }
            }
        }
    }

    #[test]
    fn block_sums_reproduce_width_statistics() {
        let limits = Limits::default();
        for n in 1..=7 {
            for s in enumerate_sn(n, &limits).unwrap() {
                for k in 1..n {
                    let blocks = block_decompose(&s, k).unwrap();
                    let lengths: Vec<usize> = blocks.blocks.iter().map(Vec::len).collect();
                    let expected: Vec<usize> =
                        (0..k).map(|i| if i < blocks.r { blocks.d + 1 } else { blocks.d }).collect();
                    assert_eq!(lengths, expected);
                    let cl: Vec<ClassicalStats> = blocks.standardized.iter().map(classical).collect();
                    assert_eq!(des_k_count(s.word(), k), cl.iter().map(|c| c.des).sum::<usize>());
                    assert_eq!(inv_k_count(s.word(), k), cl.iter().map(|c| c.inv).sum::<usize>());
                    assert_eq!(maj_k_count(s.word(), k), cl.iter().map(|c| c.maj).sum::<usize>());
                    assert_eq!(exc_k_count(s.word(), k), cl.iter().map(|c| c.exc).sum::<usize>());
                }
            }
        }
    }

    #[test]
    fn major_ceiling_form_matches_block_sum_for_width_sets() {
        let limits = Limits::default();
        for n in 2..=7 {
            let sets = all_width_sets(n, n);
            for s in enumerate_sn(n, &limits).unwrap() {
                for k in &sets {
                    let block_sum: usize = k
                        .iter()
                        .flat_map(|w| block_decompose(&s, w).unwrap().standardized)
                        .map(|b| classical(&b).maj)
                        .sum();
                    assert_eq!(maj_widths(&s, k).unwrap(), block_sum);
                }
            }
        }
    }

    #[test]
    fn bounds_and_width_one() {
        let limits = Limits::default();
        for n in 1..=7 {
            for s in enumerate_sn(n, &limits).unwrap() {
                for k in 1..n {
                    assert!(des_k_count(s.word(), k) <= n - k);
                    let bound: usize = (1..=n - k).map(|i| (n - i) / k).sum();
                    assert!(inv_k_count(s.word(), k) <= bound);
                }
                if n >= 2 {
                    let one = ws(n, &[1]);
                    let c = classical(&s);
                    assert_eq!(des_widths(&s, &one).unwrap().count, c.des);
                    assert_eq!(inv_widths(&s, &one).unwrap().count, c.inv);
                    assert_eq!(maj_widths(&s, &one).unwrap(), c.maj);
                    assert_eq!(exc_widths(&s, &one).unwrap(), c.exc);
                }
            }
        }
    }

    #[test]
    fn gap_mask_count_matches_union() {
        let limits = Limits::default();
        let n = 7;
        for k in all_width_sets(n, 3) {
            let mask: Vec<bool> = (0..n).map(|g| g > 0 && k.iter().any(|w| g % w == 0)).collect();
            for s in enumerate_sn(n, &limits).unwrap().step_by(7) {
                assert_eq!(inv_gaps_count(s.word(), &mask), inv_widths(&s, &k).unwrap().count);
            }
        }
    }

    #[test]
    fn stat_record_json() {
        let s = p("4136572");
        let rec = stat_record(&s, &ws(7, &[2, 3]), None).unwrap();
        let json = serde_json::to_value(&rec).unwrap();
        assert_eq!(json["des"]["2"], serde_json::json!([1, 5]));
        assert_eq!(json["des"]["3"], serde_json::json!([4]));
        assert_eq!(json["inv"], serde_json::json!([[1, 3], [1, 7], [3, 7], [4, 7], [5, 7]]));
        assert_eq!(json["counts"], serde_json::json!({"des": 3, "inv": 5, "exc": 4, "maj": 6}));
        let only = stat_record(&s, &ws(7, &[2, 3]), Some(Statistic::Maj)).unwrap();
        assert!(only.des.is_none());
        assert_eq!(only.counts.len(), 1);
        assert_eq!("MAJ".parse::<Statistic>().unwrap(), Statistic::Maj);
        assert!("peak".parse::<Statistic>().is_err());
    }
}
