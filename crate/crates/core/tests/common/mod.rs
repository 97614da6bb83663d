#![allow(dead_code)]

use std::sync::Arc;

use lyndon_core::oracle;
use lyndon_core::{OrderedAlphabet, Word};

pub fn binary() -> Arc<OrderedAlphabet> {
    OrderedAlphabet::new("ab").unwrap()
}

pub fn ternary() -> Arc<OrderedAlphabet> {
    OrderedAlphabet::new("abc").unwrap()
}

/// Nonempty words of length at most `max_len`, shortlex.
pub fn words(alphabet: &Arc<OrderedAlphabet>, max_len: usize) -> Vec<Word> {
    oracle::all_words(alphabet, max_len).collect()
}

/// Like [`words`] but including the empty word first.
pub fn words_with_empty(alphabet: &Arc<OrderedAlphabet>, max_len: usize) -> Vec<Word> {
    std::iter::once(Word::empty(alphabet))
        .chain(words(alphabet, max_len))
        .collect()
}

pub fn cat(parts: &[&Word]) -> Word {
    parts[1..]
        .iter()
        .fold(parts[0].clone(), |acc, p| acc.concat(p).unwrap())
}
