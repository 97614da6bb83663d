//! Ordered alphabets, finite words and their periodic structure.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Rank of a symbol inside its [`OrderedAlphabet`].
pub type Letter = u32;

/// A finite set of symbols with an explicit total order.
///
/// The order is a parameter: `"abc"` declares `a < b < c`, `"cba"` the
/// opposite order. Symbols that would make the nested-parentheses tree
/// syntax ambiguous (`(`, `)`, `,`) and whitespace are rejected.
#[derive(Clone)]
pub struct OrderedAlphabet {
    symbols: Vec<char>,
    rank: HashMap<char, Letter>,
}

impl OrderedAlphabet {
    /// Alphabet whose order is the order of `symbols` as written.
    pub fn new(symbols: &str) -> Result<Arc<Self>> {
        let symbols: Vec<char> = symbols.chars().collect();
        if symbols.is_empty() {
            return Err(Error::InvalidAlphabet("no symbols".into()));
        }
        let mut rank = HashMap::with_capacity(symbols.len());
        for (i, &c) in symbols.iter().enumerate() {
            if c.is_whitespace() || c.is_control() || matches!(c, '(' | ')' | ',') {
                return Err(Error::InvalidAlphabet(format!("symbol {c:?} is not allowed")));
            }
            if rank.insert(c, i as Letter).is_some() {
                return Err(Error::InvalidAlphabet(format!("symbol {c:?} repeated")));
            }
        }
        Ok(Arc::new(Self { symbols, rank }))
    }

    /// Alphabet over the distinct symbols of `symbols` in natural character order.
    pub fn natural(symbols: &str) -> Result<Arc<Self>> {
        let mut chars: Vec<char> = symbols.chars().collect();
        chars.sort_unstable();
        chars.dedup();
        Self::new(&chars.into_iter().collect::<String>())
    }

    /// The opposite order on the same symbols.
    pub fn reversed(&self) -> Arc<Self> {
        let symbols: String = self.symbols.iter().rev().collect();
        Self::new(&symbols).expect("reversal of a valid alphabet is valid")
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn rank(&self, symbol: char) -> Option<Letter> {
        self.rank.get(&symbol).copied()
    }

    /// Panics if `letter` is out of range.
    pub fn symbol(&self, letter: Letter) -> char {
        self.symbols[letter as usize]
    }

    /// Encodes `text` over this alphabet. See [`make_word`].
    pub fn word(self: &Arc<Self>, text: &str) -> Result<Word> {
        make_word(text, self)
    }
}

impl PartialEq for OrderedAlphabet {
    fn eq(&self, other: &Self) -> bool {
        self.symbols == other.symbols
    }
}

impl Eq for OrderedAlphabet {}

impl Hash for OrderedAlphabet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.symbols.hash(state);
    }
}

impl fmt::Debug for OrderedAlphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.symbols.iter().collect();
        write!(f, "OrderedAlphabet({s:?})")
    }
}

/// A finite word: a sequence of letter ranks over a shared alphabet.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    alphabet: Arc<OrderedAlphabet>,
    letters: Vec<Letter>,
}

impl Word {
    pub fn from_letters(alphabet: &Arc<OrderedAlphabet>, letters: Vec<Letter>) -> Result<Self> {
        if let Some(pos) = letters.iter().position(|&l| l as usize >= alphabet.len()) {
            return Err(Error::InvalidAlphabet(format!(
                "letter rank {} at position {} exceeds alphabet size {}",
                letters[pos],
                pos + 1,
                alphabet.len()
            )));
        }
        Ok(Self::from_letters_unchecked(alphabet, letters))
    }

    pub(crate) fn from_letters_unchecked(alphabet: &Arc<OrderedAlphabet>, letters: Vec<Letter>) -> Self {
        Self {
            alphabet: Arc::clone(alphabet),
            letters,
        }
    }

    pub fn empty(alphabet: &Arc<OrderedAlphabet>) -> Self {
        Self::from_letters_unchecked(alphabet, Vec::new())
    }

    pub fn alphabet(&self) -> &Arc<OrderedAlphabet> {
        &self.alphabet
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// A word over the same alphabet with the given letters, which must be
    /// drawn from this word (prefixes, suffixes, factors, products).
    pub(crate) fn with_letters(&self, letters: Vec<Letter>) -> Self {
        Self::from_letters_unchecked(&self.alphabet, letters)
    }

    /// Prefix of length `len`; panics if `len > |w|`.
    pub fn prefix(&self, len: usize) -> Self {
        self.with_letters(self.letters[..len].to_vec())
    }

    /// Suffix starting at 0-based index `start`.
    pub fn suffix_from(&self, start: usize) -> Self {
        self.with_letters(self.letters[start..].to_vec())
    }

    pub fn factor(&self, range: std::ops::Range<usize>) -> Self {
        self.with_letters(self.letters[range].to_vec())
    }

    pub fn concat(&self, other: &Word) -> Result<Self> {
        ensure_same_alphabet(self, other)?;
        Ok(self.with_letters([self.letters.as_slice(), other.letters.as_slice()].concat()))
    }

    pub fn pow(&self, exponent: usize) -> Self {
        self.with_letters(self.letters.repeat(exponent))
    }

    /// Prefix of length `len` of the periodic extension `w^ω`.
    ///
    /// Panics on the empty word.
    pub fn periodic_prefix(&self, len: usize) -> Self {
        assert!(!self.is_empty(), "periodic extension of the empty word");
        self.with_letters(self.letters.iter().copied().cycle().take(len).collect())
    }

    /// The same word read over the opposite alphabet order.
    pub fn in_opposite_order(&self) -> Self {
        let top = self.alphabet.len() as Letter - 1;
        Self {
            alphabet: self.alphabet.reversed(),
            letters: self.letters.iter().map(|&l| top - l).collect(),
        }
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.letters.starts_with(&self.letters)
    }

    /// All nontrivial factorizations `w = uv`, shortest `u` first.
    pub fn splits(&self) -> impl Iterator<Item = (Word, Word)> + '_ {
        (1..self.len()).map(move |k| (self.prefix(k), self.suffix_from(k)))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &l in &self.letters {
            write!(f, "{}", self.alphabet.symbol(l))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({:?})", self.to_string())
    }
}

pub(crate) fn ensure_same_alphabet(u: &Word, v: &Word) -> Result<()> {
    if Arc::ptr_eq(&u.alphabet, &v.alphabet) || u.alphabet == v.alphabet {
        Ok(())
    } else {
        Err(Error::AlphabetMismatch)
    }
}

pub(crate) fn ensure_nonempty(w: &Word) -> Result<()> {
    if w.is_empty() {
        Err(Error::EmptyWord)
    } else {
        Ok(())
    }
}

/// Encodes `text` as a word over `alphabet`.
pub fn make_word(text: &str, alphabet: &Arc<OrderedAlphabet>) -> Result<Word> {
    let letters = text
        .chars()
        .enumerate()
        .map(|(i, c)| {
            alphabet.rank(c).ok_or(Error::UnknownSymbol {
                position: i + 1,
                symbol: c,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Word::from_letters_unchecked(alphabet, letters))
}

/// Lexicographic order on finite words: a proper prefix is smaller.
pub fn lex_cmp(u: &Word, v: &Word) -> Result<Ordering> {
    ensure_same_alphabet(u, v)?;
    Ok(u.letters.cmp(&v.letters))
}

/// `border[i]` is the length of the longest border of `s[..=i]`.
pub(crate) fn border_array(s: &[Letter]) -> Vec<usize> {
    let mut border = vec![0; s.len()];
    let mut k = 0;
    for i in 1..s.len() {
        while k > 0 && s[i] != s[k] {
            k = border[k - 1];
        }
        if s[i] == s[k] {
            k += 1;
        }
        border[i] = k;
    }
    border
}

fn border_lengths(s: &[Letter]) -> Vec<usize> {
    let border = border_array(s);
    let mut lengths = Vec::new();
    let mut k = border.last().copied().unwrap_or(0);
    while k > 0 {
        lengths.push(k);
        k = border[k - 1];
    }
    lengths.reverse();
    lengths
}

/// Nontrivial proper prefixes of `w` that are also suffixes, shortest first.
pub fn borders(w: &Word) -> Result<Vec<Word>> {
    ensure_nonempty(w)?;
    Ok(border_lengths(&w.letters).into_iter().map(|k| w.prefix(k)).collect())
}

/// Periods `p` with `0 < p < |w|`, ascending.
pub fn nontrivial_periods(w: &Word) -> Result<Vec<usize>> {
    ensure_nonempty(w)?;
    let n = w.len();
    Ok(border_lengths(&w.letters).into_iter().rev().map(|k| n - k).collect())
}

/// Exponent `r = k + num/den` of a fractional power, stored reduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FractionalExponent {
    pub whole: usize,
    pub num: usize,
    pub den: usize,
}

impl FractionalExponent {
    /// Exponent of a word of length `len` over a base of length `base_len`.
    pub fn from_lengths(len: usize, base_len: usize) -> Self {
        assert!(base_len > 0);
        let (whole, rem) = len.div_rem(&base_len);
        if rem == 0 {
            return Self { whole, num: 0, den: 1 };
        }
        let g = rem.gcd(&base_len);
        Self {
            whole,
            num: rem / g,
            den: base_len / g,
        }
    }

    /// `r ≥ 1`, i.e. the base is a prefix of the power.
    pub fn is_strict(&self) -> bool {
        self.whole >= 1
    }

    /// `(p, q)` with `r = p/q` in lowest terms.
    pub fn as_fraction(&self) -> (usize, usize) {
        (self.whole * self.den + self.num, self.den)
    }
}

impl fmt::Display for FractionalExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (p, q) = self.as_fraction();
        if q == 1 {
            write!(f, "{p}")
        } else {
            write!(f, "{p}/{q}")
        }
    }
}

/// `Some(r)` iff `v = u^r`, i.e. `v` is a prefix of `u^ω`.
pub fn fractional_power_of(v: &Word, u: &Word) -> Result<Option<FractionalExponent>> {
    ensure_same_alphabet(u, v)?;
    if u.is_empty() {
        return Err(Error::EmptyBase);
    }
    let base = &u.letters;
    let is_power = v.letters.iter().enumerate().all(|(i, &l)| l == base[i % base.len()]);
    Ok(is_power.then(|| FractionalExponent::from_lengths(v.len(), u.len())))
}

pub(crate) fn primitive_root_len(s: &[Letter]) -> usize {
    let n = s.len();
    let period = n - border_array(s).last().copied().unwrap_or(0);
    if n.is_multiple_of(period) {
        period
    } else {
        n
    }
}

/// The primitive word `x` and exponent `e` with `w = x^e`.
pub fn primitive_root(w: &Word) -> Result<(Word, usize)> {
    ensure_nonempty(w)?;
    let p = primitive_root_len(&w.letters);
    Ok((w.prefix(p), w.len() / p))
}
