//! Lyndon words: the classical definitions, the ω-order characterizations,
//! the nonincreasing factorization and enumeration.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::omega;
use crate::word::{ensure_nonempty, Letter, OrderedAlphabet, Word};

/// The three classical, equivalent definitions of a Lyndon word. Each
/// quantifies over all nontrivial factorizations `w = uv`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LyndonDefinition {
    /// `u < v`
    PrefixBelowSuffix,
    /// `uv < v`
    WordBelowSuffix,
    /// `uv < vu`
    WordBelowConjugate,
}

impl LyndonDefinition {
    pub const ALL: [Self; 3] = [Self::PrefixBelowSuffix, Self::WordBelowSuffix, Self::WordBelowConjugate];

    fn holds_at(self, s: &[Letter], k: usize) -> bool {
        let (u, v) = s.split_at(k);
        match self {
            Self::PrefixBelowSuffix => u < v,
            Self::WordBelowSuffix => s < v,
            Self::WordBelowConjugate => s.iter().cmp(v.iter().chain(u)).is_lt(),
        }
    }
}

pub fn is_lyndon_by(w: &Word, definition: LyndonDefinition) -> Result<bool> {
    ensure_nonempty(w)?;
    let s = w.letters();
    Ok((1..s.len()).all(|k| definition.holds_at(s, k)))
}

pub(crate) fn is_lyndon_letters(s: &[Letter]) -> bool {
    !s.is_empty() && (1..s.len()).all(|k| LyndonDefinition::PrefixBelowSuffix.holds_at(s, k))
}

/// Every nontrivial split `w = uv` has `u < v`. Single letters are Lyndon.
pub fn is_lyndon(w: &Word) -> Result<bool> {
    is_lyndon_by(w, LyndonDefinition::PrefixBelowSuffix)
}

/// Length of the shortest prefix `u` in a split `w = uv` with `u ≥ v`.
pub fn violating_split(w: &Word) -> Option<usize> {
    let s = w.letters();
    (1..s.len()).find(|&k| !LyndonDefinition::PrefixBelowSuffix.holds_at(s, k))
}

/// `Ok(())` for Lyndon words, otherwise `NotLyndon` naming the first bad split.
pub fn ensure_lyndon(w: &Word) -> Result<()> {
    ensure_nonempty(w)?;
    match violating_split(w) {
        None => Ok(()),
        Some(k) => Err(Error::NotLyndon {
            prefix: w.prefix(k).to_string(),
            suffix: w.suffix_from(k).to_string(),
        }),
    }
}

/// The two suffix conditions over all nontrivial splits `w = uv`:
/// `(u^ω < v^ω, w^ω < v^ω)`.
pub fn suffix_omega_conditions(w: &Word) -> Result<(bool, bool)> {
    ensure_nonempty(w)?;
    let s = w.letters();
    let first = (1..s.len()).all(|k| omega::less(&s[..k], &s[k..]));
    let second = (1..s.len()).all(|k| omega::less(s, &s[k..]));
    Ok((first, second))
}

/// `w^ω < v^ω` for every proper nontrivial suffix `v`.
pub fn is_lyndon_suffix_omega(w: &Word) -> Result<bool> {
    let (first, second) = suffix_omega_conditions(w)?;
    if first != second {
        return Err(Error::InternalError(format!(
            "suffix conditions disagree on {w}: u^ω < v^ω is {first}, w^ω < v^ω is {second}"
        )));
    }
    Ok(second)
}

/// `p^ω < w^ω` for every proper nontrivial prefix `p`.
pub fn is_lyndon_prefix_omega(w: &Word) -> Result<bool> {
    ensure_nonempty(w)?;
    let s = w.letters();
    Ok((1..s.len()).all(|k| omega::less(&s[..k], s)))
}

/// The nonincreasing factorization `w = ℓ_1 ℓ_2 ⋯ ℓ_n` into Lyndon words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LyndonFactorization {
    factors: Vec<Word>,
}

impl LyndonFactorization {
    /// Wraps factors without checking them; see the oracle for validation.
    pub fn from_factors(factors: Vec<Word>) -> Self {
        Self { factors }
    }

    pub fn factors(&self) -> &[Word] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn first(&self) -> &Word {
        &self.factors[0]
    }

    pub fn last(&self) -> &Word {
        self.factors.last().expect("factorization of a nonempty word")
    }

    pub fn into_factors(self) -> Vec<Word> {
        self.factors
    }
}

impl fmt::Display for LyndonFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for factor in &self.factors {
            write!(f, "({factor})")?;
        }
        Ok(())
    }
}

pub(crate) fn duval_factor_bounds(s: &[Letter]) -> Vec<(usize, usize)> {
    let n = s.len();
    let mut bounds = Vec::new();
    let mut i = 0;
    while i < n {
        let (mut j, mut k) = (i + 1, i);
        while j < n && s[k] <= s[j] {
            if s[k] < s[j] {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        while i <= k {
            bounds.push((i, i + j - k));
            i += j - k;
        }
    }
    bounds
}

/// Duval's linear-time factorization.
pub fn lyndon_factorization(w: &Word) -> Result<LyndonFactorization> {
    ensure_nonempty(w)?;
    let factors = duval_factor_bounds(w.letters())
        .into_iter()
        .map(|(start, end)| w.factor(start..end))
        .collect();
    Ok(LyndonFactorization { factors })
}

/// `ℓ_n`, found as the shortest nontrivial suffix `s` with `s^ω` minimal.
pub fn last_lyndon_factor(w: &Word) -> Result<Word> {
    ensure_nonempty(w)?;
    let s = w.letters();
    let n = s.len();
    // Shortest suffixes first; only a strictly smaller extension replaces the best.
    let mut best = n - 1;
    for start in (0..n - 1).rev() {
        if omega::less(&s[start..], &s[best..]) {
            best = start;
        }
    }
    Ok(w.suffix_from(best))
}

/// `ℓ_1`, found as the shortest nontrivial prefix `p` with `p^ω ≥ w^ω`.
pub fn first_lyndon_factor(w: &Word) -> Result<Word> {
    ensure_nonempty(w)?;
    let s = w.letters();
    let len = (1..=s.len())
        .find(|&k| !omega::less(&s[..k], s))
        .expect("the whole word always qualifies");
    Ok(w.prefix(len))
}

/// `ℓ_1`, found as the shortest nontrivial prefix `p` such that `w = ps`
/// with `s` empty or `p^ω ≥ s^ω`.
pub fn first_lyndon_factor_by_remainder(w: &Word) -> Result<Word> {
    ensure_nonempty(w)?;
    let s = w.letters();
    let len = (1..=s.len())
        .find(|&k| k == s.len() || !omega::less(&s[..k], &s[k..]))
        .expect("the whole word always qualifies");
    Ok(w.prefix(len))
}

/// Lyndon words of length `1..=max_len` in shortlex order.
///
/// Each length is produced by Duval's successor rule (extend periodically,
/// strip trailing maximal letters, bump the last letter) restricted to that
/// length.
pub fn enumerate_lyndon_words(alphabet: &Arc<OrderedAlphabet>, max_len: usize) -> LyndonWords {
    LyndonWords {
        alphabet: Arc::clone(alphabet),
        max_len,
        target: 0,
        next: None,
    }
}

#[derive(Debug, Clone)]
pub struct LyndonWords {
    alphabet: Arc<OrderedAlphabet>,
    max_len: usize,
    target: usize,
    next: Option<Vec<Letter>>,
}

impl LyndonWords {
    fn successor(&self, current: &[Letter]) -> Option<Vec<Letter>> {
        let top = self.alphabet.len() as Letter - 1;
        let period = current.len();
        let mut w = current.to_vec();
        while w.len() < self.target {
            w.push(w[w.len() - period]);
        }
        while w.last() == Some(&top) {
            w.pop();
        }
        let last = w.last_mut()?;
        *last += 1;
        Some(w)
    }
}

impl Iterator for LyndonWords {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        loop {
            let current = match self.next.take() {
                Some(w) => w,
                None => {
                    if self.target >= self.max_len {
                        return None;
                    }
                    self.target += 1;
                    vec![0]
                }
            };
            self.next = self.successor(&current);
            if current.len() == self.target {
                return Some(Word::from_letters_unchecked(&self.alphabet, current));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc() -> Arc<OrderedAlphabet> {
        OrderedAlphabet::new("abc").unwrap()
    }

    fn w(s: &str) -> Word {
        abc().word(s).unwrap()
    }

    fn shown(words: &[Word]) -> Vec<String> {
        words.iter().map(Word::to_string).collect()
    }

    #[test]
    fn is_lyndon_examples() {
        for def in LyndonDefinition::ALL {
            assert_eq!(is_lyndon_by(&w("aabab"), def), Ok(true));
            assert_eq!(is_lyndon_by(&w("aa"), def), Ok(false));
            assert_eq!(is_lyndon_by(&w("aabaacab"), def), Ok(true));
            assert_eq!(is_lyndon_by(&w(""), def), Err(Error::EmptyWord));
        }
        assert_eq!(is_lyndon(&w("c")), Ok(true));
    }

    #[test]
    fn omega_characterizations() {
        assert_eq!(is_lyndon_suffix_omega(&w("ababaab")), Ok(false));
        assert_eq!(is_lyndon_suffix_omega(&w("aab")), Ok(true));
        assert_eq!(is_lyndon_suffix_omega(&w("b")), Ok(true));
        assert_eq!(suffix_omega_conditions(&w("aab")), Ok((true, true)));

        assert_eq!(is_lyndon_prefix_omega(&w("aabab")), Ok(true));
        assert_eq!(is_lyndon_prefix_omega(&w("ba")), Ok(false));
        assert_eq!(is_lyndon_prefix_omega(&w("a")), Ok(true));
    }

    #[test]
    fn ensure_lyndon_names_split() {
        assert_eq!(ensure_lyndon(&w("aabab")), Ok(()));
        assert_eq!(
            ensure_lyndon(&w("ba")).unwrap_err().to_string(),
            "not Lyndon: split b|a has u ≥ v"
        );
        assert_eq!(violating_split(&w("abab")), Some(2));
    }

    #[test]
    fn factorization_examples() {
        assert_eq!(
            lyndon_factorization(&w("ababaab")).unwrap().to_string(),
            "(ab)(ab)(aab)"
        );
        assert_eq!(lyndon_factorization(&w("aabaacab")).unwrap().to_string(), "(aabaacab)");
        assert_eq!(lyndon_factorization(&w("bbb")).unwrap().to_string(), "(b)(b)(b)");
        let letters = OrderedAlphabet::new("abcdr").unwrap();
        assert_eq!(
            lyndon_factorization(&letters.word("bbbbabracadabra").unwrap())
                .unwrap()
                .to_string(),
            "(b)(b)(b)(b)(abracad)(abr)(a)"
        );
        assert_eq!(lyndon_factorization(&w("")), Err(Error::EmptyWord));
    }

    #[test]
    fn first_and_last_factor_examples() {
        assert_eq!(last_lyndon_factor(&w("ababaab")).unwrap(), w("aab"));
        assert_eq!(last_lyndon_factor(&w("aabab")).unwrap(), w("aabab"));
        assert_eq!(last_lyndon_factor(&w("ba")).unwrap(), w("a"));
        assert_eq!(last_lyndon_factor(&w("bbb")).unwrap(), w("b"));

        for first in [first_lyndon_factor, first_lyndon_factor_by_remainder] {
            assert_eq!(first(&w("ababaab")).unwrap(), w("ab"));
            assert_eq!(first(&w("aabab")).unwrap(), w("aabab"));
            assert_eq!(first(&w("ba")).unwrap(), w("b"));
            assert_eq!(first(&w("")), Err(Error::EmptyWord));
        }
    }

    #[test]
    fn enumeration_examples() {
        let ab = OrderedAlphabet::new("ab").unwrap();
        let words: Vec<Word> = enumerate_lyndon_words(&ab, 3).collect();
        assert_eq!(shown(&words), ["a", "b", "ab", "aab", "abb"]);
        assert_eq!(enumerate_lyndon_words(&ab, 5).filter(|w| w.len() == 5).count(), 6);
        let unary = OrderedAlphabet::new("a").unwrap();
        assert_eq!(shown(&enumerate_lyndon_words(&unary, 4).collect::<Vec<_>>()), ["a"]);
        assert_eq!(enumerate_lyndon_words(&ab, 0).count(), 0);
    }
}
