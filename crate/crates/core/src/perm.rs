//! Permutations in one-line notation, their symmetries, classical pattern
//! containment, and lexicographic enumeration of `S_n` and of avoidance
//! classes `Av_n(Π)`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::limits::Limits;

/// A permutation of `[n]` written as the word `a_1 a_2 … a_n`.
///
/// Letters are 1-based. The empty permutation (`n = 0`) is a valid value.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    /// Validates that `word` is a rearrangement of `1..=word.len()`.
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &a in &word {
            if a == 0 || a > n {
                return invalid(format!("letter {a} is outside 1..={n}"));
            }
            if seen[a] {
                return invalid(format!("letter {a} appears twice"));
            }
            seen[a] = true;
        }
        Ok(Permutation { word })
    }

    pub(crate) fn from_word_unchecked(word: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(word.clone()).is_ok());
        Permutation { word }
    }

    pub fn empty() -> Self {
        Permutation { word: Vec::new() }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n).collect(),
        }
    }

    /// The decreasing word `n (n-1) … 1`.
    pub fn decreasing(n: usize) -> Self {
        Permutation {
            word: (1..=n).rev().collect(),
        }
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// `σ^r = a_n … a_1`.
    pub fn reverse(&self) -> Self {
        let mut word = self.word.clone();
        word.reverse();
        Permutation { word }
    }

    /// `σ^c = (n+1-a_1) … (n+1-a_n)`.
    pub fn complement(&self) -> Self {
        let n = self.len();
        Permutation {
            word: self.word.iter().map(|&a| n + 1 - a).collect(),
        }
    }

    /// True iff some subsequence of `self` standardizes to `pattern`.
    pub fn contains(&self, pattern: &Permutation) -> bool {
        embeds(&self.word, &pattern.word, false)
    }

    pub fn avoids(&self, spec: &AvoidanceSpec) -> bool {
        spec.patterns.iter().all(|p| !self.contains(p))
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(word: Vec<usize>) -> Result<Self> {
        Permutation::new(word)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.word
    }
}

impl fmt::Display for Permutation {
    /// Bare digits for `n <= 9`, comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for a in &self.word {
                write!(f, "{a}")?;
            }
        } else {
            let parts: Vec<String> = self.word.iter().map(|a| a.to_string()).collect();
            write!(f, "{}", parts.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            write!(f, "ε")
        } else {
            write!(f, "{self}")
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `"4136572"` (one digit per letter) or `"10,3,1,…"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let word: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::InvalidInput(format!("bad letter {t:?} in {s:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::InvalidInput(format!("bad letter {c:?} in {s:?}")))
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(word)
    }
}

/// Replaces the entries of a word of distinct values by their ranks.
pub fn standardize<T: Ord>(word: &[T]) -> Result<Permutation> {
    let mut order: Vec<usize> = (0..word.len()).collect();
    order.sort_by(|&i, &j| word[i].cmp(&word[j]));
    if order.windows(2).any(|w| word[w[0]] == word[w[1]]) {
        return invalid("standardize requires distinct entries");
    }
    let mut ranks = vec![0; word.len()];
    for (rank, &pos) in order.iter().enumerate() {
        ranks[pos] = rank + 1;
    }
    Ok(Permutation { word: ranks })
}

/// Ranks of a slice of distinct values, without validation.
pub(crate) fn ranks_of(values: &[usize]) -> Vec<usize> {
    values
        .iter()
        .map(|&v| 1 + values.iter().filter(|&&u| u < v).count())
        .collect()
}

/// A finite set of patterns. The empty set imposes no restriction.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Permutation>", into = "Vec<Permutation>")]
pub struct AvoidanceSpec {
    patterns: BTreeSet<Permutation>,
}

impl AvoidanceSpec {
    pub fn new<I: IntoIterator<Item = Permutation>>(patterns: I) -> Result<Self> {
        let patterns: BTreeSet<Permutation> = patterns.into_iter().collect();
        if patterns.iter().any(|p| p.is_empty()) {
            return invalid("patterns must have length at least 1");
        }
        Ok(AvoidanceSpec { patterns })
    }

    pub fn none() -> Self {
        AvoidanceSpec::default()
    }

    /// Parses patterns such as `"123,132"`. Use `;` as the separator when a
    /// pattern itself is written in comma form.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(AvoidanceSpec::none());
        }
        let sep = if text.contains(';') { ';' } else { ',' };
        let patterns = text
            .split(sep)
            .map(|t| t.parse::<Permutation>())
            .collect::<Result<Vec<_>>>()?;
        AvoidanceSpec::new(patterns)
    }

    pub fn patterns(&self) -> impl Iterator<Item = &Permutation> {
        self.patterns.iter()
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    pub fn reverse(&self) -> Self {
        AvoidanceSpec {
            patterns: self.patterns.iter().map(Permutation::reverse).collect(),
        }
    }

    pub fn complement(&self) -> Self {
        AvoidanceSpec {
            patterns: self.patterns.iter().map(Permutation::complement).collect(),
        }
    }

    /// True iff the pattern set is exactly the given list.
    pub fn is(&self, words: &[&str]) -> bool {
        let Ok(other) = AvoidanceSpec::parse(&words.join(",")) else {
            return false;
        };
        *self == other
    }
}

impl TryFrom<Vec<Permutation>> for AvoidanceSpec {
    type Error = Error;

    fn try_from(v: Vec<Permutation>) -> Result<Self> {
        AvoidanceSpec::new(v)
    }
}

impl From<AvoidanceSpec> for Vec<Permutation> {
    fn from(s: AvoidanceSpec) -> Self {
        s.patterns.into_iter().collect()
    }
}

impl fmt::Display for AvoidanceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.patterns.iter().map(|p| p.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for AvoidanceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Searches for an occurrence of `pattern` in `word`. With `anchor_last`,
/// only occurrences whose final letter is the last letter of `word` count.
fn embeds(word: &[usize], pattern: &[usize], anchor_last: bool) -> bool {
    let m = pattern.len();
    if m == 0 {
        return true;
    }
    if m > word.len() {
        return false;
    }
    let (limit, target, anchor) = if anchor_last {
        let last = word.len() - 1;
        (last, m - 1, Some(word[last]))
    } else {
        (word.len(), m, None)
    };
    let mut chosen = Vec::with_capacity(m);
    extend_embedding(word, pattern, &mut chosen, 0, limit, target, anchor)
}

fn extend_embedding(
    word: &[usize],
    pattern: &[usize],
    chosen: &mut Vec<usize>,
    start: usize,
    limit: usize,
    target: usize,
    anchor: Option<usize>,
) -> bool {
    let t = chosen.len();
    if t == target {
        return true;
    }
    let needed = target - t;
    if start + needed > limit {
        return false;
    }
    let m = pattern.len();
    for pos in start..=(limit - needed) {
        let v = word[pos];
        let consistent = chosen
            .iter()
            .zip(pattern)
            .all(|(&c, &p)| (c < v) == (p < pattern[t]))
            && anchor.is_none_or(|a| (v < a) == (pattern[t] < pattern[m - 1]));
        if consistent {
            chosen.push(v);
            if extend_embedding(word, pattern, chosen, pos + 1, limit, target, anchor) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Depth-first lexicographic walk over `Av_n(Π)` with prefix pruning.
///
/// A prefix that already contains a pattern is never extended, and each new
/// letter only needs to be checked for occurrences ending at itself.
pub(crate) struct ClassWalker {
    n: usize,
    patterns: Vec<Vec<usize>>,
    word: Vec<usize>,
    used: Vec<bool>,
    next: Vec<usize>,
    first_hi: usize,
    pending_pop: bool,
    done: bool,
}

impl ClassWalker {
    pub(crate) fn new(n: usize, spec: &AvoidanceSpec) -> Self {
        Self::bounded(n, spec, 1, n)
    }

    /// Walks only the permutations whose first letter is `first`.
    pub(crate) fn with_first_letter(n: usize, spec: &AvoidanceSpec, first: usize) -> Self {
        Self::bounded(n, spec, first, first)
    }

    fn bounded(n: usize, spec: &AvoidanceSpec, lo: usize, hi: usize) -> Self {
        ClassWalker {
            n,
            patterns: spec.patterns().map(|p| p.word().to_vec()).collect(),
            word: Vec::with_capacity(n),
            used: vec![false; n + 2],
            next: vec![lo],
            first_hi: hi,
            pending_pop: false,
            done: false,
        }
    }

    fn admissible(&self) -> bool {
        self.patterns.iter().all(|p| !embeds(&self.word, p, true))
    }

    /// Advances to the next complete word, or `None` when exhausted.
    pub(crate) fn advance(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if self.n == 0 {
            self.done = true;
            return if self.admissible() { Some(&self.word) } else { None };
        }
        if self.pending_pop {
            let last = self.word.pop().expect("pending pop on empty word");
            self.used[last] = false;
            self.pending_pop = false;
        }
        loop {
            let depth = self.word.len();
            let hi = if depth == 0 { self.first_hi } else { self.n };
            let mut c = self.next[depth];
            let mut found = false;
            while c <= hi {
                if !self.used[c] {
                    self.word.push(c);
                    if self.admissible() {
                        found = true;
                        break;
                    }
                    self.word.pop();
                }
                c += 1;
            }
            if !found {
                if depth == 0 {
                    self.done = true;
                    return None;
                }
                self.next.pop();
                let last = self.word.pop().expect("backtrack on empty word");
                self.used[last] = false;
                continue;
            }
            self.used[c] = true;
            self.next[depth] = c + 1;
            if self.word.len() == self.n {
                self.pending_pop = true;
                return Some(&self.word);
            }
            self.next.push(1);
        }
    }
}

/// Owning lexicographic iterator over an avoidance class.
pub struct ClassIter {
    walker: ClassWalker,
}

impl Iterator for ClassIter {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        self.walker
            .advance()
            .map(|w| Permutation::from_word_unchecked(w.to_vec()))
    }
}

/// All of `S_n` in lexicographic order.
pub fn enumerate_sn(n: usize, limits: &Limits) -> Result<ClassIter> {
    limits.check_univariate(n)?;
    Ok(ClassIter { walker: ClassWalker::new(n, &AvoidanceSpec::none()) })
}

/// `Av_n(Π)` in lexicographic order.
pub fn avoidance_class(n: usize, spec: &AvoidanceSpec, limits: &Limits) -> Result<ClassIter> {
    limits.check_univariate(n)?;
    Ok(ClassIter { walker: ClassWalker::new(n, spec) })
}

/// `|Av_n(Π)|` without materializing the permutations.
pub fn class_size(n: usize, spec: &AvoidanceSpec, limits: &Limits) -> Result<u64> {
    limits.check_univariate(n)?;
    let mut walker = ClassWalker::new(n, spec);
    let mut count = 0;
    while walker.advance().is_some() {
        count += 1;
    }
    Ok(count)
}
