use std::fmt;

use super::AlgebraError;

/// Largest supported alphabet. Letters print as single decimal digits.
pub const MAX_ARITY: u8 = 10;

/// A finite word over the alphabet `{0, .., n-1}`; names the cylinder of all
/// infinite sequences that start with it. The empty word names the whole space.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Builds a word, rejecting letters outside the alphabet.
    pub fn new(arity: u8, letters: Vec<u8>) -> Result<Self, AlgebraError> {
        check_arity(arity)?;
        if let Some(&bad) = letters.iter().find(|&&l| l >= arity) {
            return Err(AlgebraError::InvalidLetter { letter: bad, arity });
        }
        Ok(Word(letters))
    }

    pub(crate) fn from_letters_unchecked(letters: Vec<u8>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// True if `self` is a (not necessarily proper) prefix of `other`.
    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.0.starts_with(&self.0)
    }

    /// Two cylinders intersect iff their words are comparable.
    pub fn is_comparable(&self, other: &Word) -> bool {
        self.is_prefix_of(other) || other.is_prefix_of(self)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn child(&self, letter: u8) -> Word {
        let mut v = self.0.clone();
        v.push(letter);
        Word(v)
    }

    pub fn children(&self, arity: u8) -> Vec<Word> {
        (0..arity).map(|a| self.child(a)).collect()
    }

    /// The remainder after `prefix`, or `None` if `prefix` does not start this word.
    pub fn strip_prefix(&self, prefix: &Word) -> Option<Word> {
        self.0.strip_prefix(prefix.0.as_slice()).map(|r| Word(r.to_vec()))
    }

    pub fn last(&self) -> Option<u8> {
        self.0.last().copied()
    }

    pub fn parent(&self) -> Option<Word> {
        if self.0.is_empty() {
            None
        } else {
            Some(Word(self.0[..self.0.len() - 1].to_vec()))
        }
    }

    /// Parses a run of digits; `e`, `ε` and the empty string denote the empty word.
    pub fn parse(arity: u8, text: &str) -> Result<Self, AlgebraError> {
        let t = text.trim();
        if t.is_empty() || t == "e" || t == "ε" {
            return Word::new(arity, Vec::new());
        }
        let mut letters = Vec::with_capacity(t.len());
        for ch in t.chars() {
            let d = ch.to_digit(10).ok_or_else(|| AlgebraError::Parse {
                position: 0,
                message: format!("unexpected character {ch:?} in word {t:?}"),
            })?;
            letters.push(d as u8);
        }
        Word::new(arity, letters)
    }

    /// Digits only, with the empty word as the empty string (JSON form).
    pub fn digits(&self) -> String {
        self.0.iter().map(|d| char::from(b'0' + d)).collect()
    }
}

pub(crate) fn check_arity(arity: u8) -> Result<(), AlgebraError> {
    if (2..=MAX_ARITY).contains(&arity) {
        Ok(())
    } else {
        Err(AlgebraError::UnsupportedArity(arity))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            f.write_str("e")
        } else {
            f.write_str(&self.digits())
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

/// All words of length exactly `len`, in lexicographic order.
pub fn words_of_length(arity: u8, len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    for _ in 0..len {
        out = out.iter().flat_map(|w| w.children(arity)).collect();
    }
    out
}

/// All words of length at most `max_len`, shortest first.
pub fn words_up_to(arity: u8, max_len: usize) -> Vec<Word> {
    (0..=max_len).flat_map(|l| words_of_length(arity, l)).collect()
}
