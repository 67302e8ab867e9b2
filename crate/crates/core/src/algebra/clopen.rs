use std::fmt;

use serde::{Deserialize, Serialize};

use super::word::{check_arity, Word};
use super::{split_delimited, AlgebraError};

/// A clopen subset of n-ary Cantor space, stored as the canonical set of
/// cylinder words: a lexicographically sorted antichain with no complete
/// sibling family. Two clopens are equal as sets iff they are equal as values.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "ClopenRepr", into = "ClopenRepr")]
pub struct Clopen {
    arity: u8,
    words: Vec<Word>,
}

// Working representation for the Boolean operations. A normalized trie never
// has a `Split` whose children are all `Empty` or all `Full`, which makes it
// correspond one-to-one with canonical word sets.
#[derive(Clone, Debug, PartialEq, Eq)]
enum Trie {
    Empty,
    Full,
    Split(Vec<Trie>),
}

impl Trie {
    fn insert(&mut self, arity: u8, word: &[u8]) {
        match self {
            Trie::Full => {}
            _ if word.is_empty() => *self = Trie::Full,
            Trie::Empty => {
                let mut children = vec![Trie::Empty; arity as usize];
                children[word[0] as usize].insert(arity, &word[1..]);
                *self = Trie::Split(children);
            }
            Trie::Split(children) => children[word[0] as usize].insert(arity, &word[1..]),
        }
    }

    fn normalize(self) -> Trie {
        match self {
            Trie::Split(children) => {
                let children: Vec<Trie> = children.into_iter().map(Trie::normalize).collect();
                if children.iter().all(|c| *c == Trie::Full) {
                    Trie::Full
                } else if children.iter().all(|c| *c == Trie::Empty) {
                    Trie::Empty
                } else {
                    Trie::Split(children)
                }
            }
            leaf => leaf,
        }
    }

    fn collect(&self, prefix: &mut Vec<u8>, out: &mut Vec<Word>) {
        match self {
            Trie::Empty => {}
            Trie::Full => out.push(Word::from_letters_unchecked(prefix.clone())),
            Trie::Split(children) => {
                for (a, c) in children.iter().enumerate() {
                    prefix.push(a as u8);
                    c.collect(prefix, out);
                    prefix.pop();
                }
            }
        }
    }

    fn complement(&self) -> Trie {
        match self {
            Trie::Empty => Trie::Full,
            Trie::Full => Trie::Empty,
            Trie::Split(c) => Trie::Split(c.iter().map(Trie::complement).collect()),
        }
    }

    fn union(&self, other: &Trie) -> Trie {
        match (self, other) {
            (Trie::Full, _) | (_, Trie::Full) => Trie::Full,
            (Trie::Empty, t) | (t, Trie::Empty) => t.clone(),
            (Trie::Split(a), Trie::Split(b)) => {
                Trie::Split(a.iter().zip(b).map(|(x, y)| x.union(y)).collect()).normalize()
            }
        }
    }

    fn intersect(&self, other: &Trie) -> Trie {
        match (self, other) {
            (Trie::Empty, _) | (_, Trie::Empty) => Trie::Empty,
            (Trie::Full, t) | (t, Trie::Full) => t.clone(),
            (Trie::Split(a), Trie::Split(b)) => {
                Trie::Split(a.iter().zip(b).map(|(x, y)| x.intersect(y)).collect()).normalize()
            }
        }
    }
}

impl Clopen {
    /// Canonical form of the union of the given cylinders: covered words are
    /// absorbed and complete sibling families merged until nothing changes.
    pub fn canonicalize<I>(arity: u8, words: I) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = Word>,
    {
        check_arity(arity)?;
        let mut trie = Trie::Empty;
        for w in words {
            if let Some(&bad) = w.letters().iter().find(|&&l| l >= arity) {
                return Err(AlgebraError::InvalidLetter { letter: bad, arity });
            }
            trie.insert(arity, w.letters());
        }
        Ok(Self::from_trie(arity, trie.normalize()))
    }

    pub fn zero(arity: u8) -> Self {
        Clopen { arity, words: Vec::new() }
    }

    pub fn one(arity: u8) -> Self {
        Clopen { arity, words: vec![Word::empty()] }
    }

    /// The single cylinder named by `w`.
    pub fn cylinder(arity: u8, w: Word) -> Result<Self, AlgebraError> {
        Self::canonicalize(arity, [w])
    }

    pub fn arity(&self) -> u8 {
        self.arity
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.words.len() == 1 && self.words[0].is_empty()
    }

    fn trie(&self) -> Trie {
        let mut t = Trie::Empty;
        for w in &self.words {
            t.insert(self.arity, w.letters());
        }
        t
    }

    fn from_trie(arity: u8, trie: Trie) -> Self {
        let mut words = Vec::new();
        trie.collect(&mut Vec::new(), &mut words);
        Clopen { arity, words }
    }

    fn same_arity(&self, other: &Clopen) -> Result<(), AlgebraError> {
        if self.arity == other.arity {
            Ok(())
        } else {
            Err(AlgebraError::ArityMismatch { left: self.arity, right: other.arity })
        }
    }

    pub fn union(&self, other: &Clopen) -> Result<Clopen, AlgebraError> {
        self.same_arity(other)?;
        Ok(Self::from_trie(self.arity, self.trie().union(&other.trie())))
    }

    pub fn intersect(&self, other: &Clopen) -> Result<Clopen, AlgebraError> {
        self.same_arity(other)?;
        Ok(Self::from_trie(self.arity, self.trie().intersect(&other.trie())))
    }

    pub fn complement(&self) -> Clopen {
        Self::from_trie(self.arity, self.trie().complement().normalize())
    }

    pub fn minus(&self, other: &Clopen) -> Result<Clopen, AlgebraError> {
        self.intersect(&other.complement())
    }

    /// Inclusion, decided as `a \ b = 0`.
    pub fn leq(&self, other: &Clopen) -> Result<bool, AlgebraError> {
        Ok(self.minus(other)?.is_zero())
    }

    /// Inclusion decided syntactically: every word of `self` has a prefix in
    /// `other`. Correct only because both sides are canonical (a canonical
    /// set never covers a cylinder with strictly longer words alone).
    pub fn leq_by_prefix(&self, other: &Clopen) -> Result<bool, AlgebraError> {
        self.same_arity(other)?;
        Ok(self.words.iter().all(|w| other.words.iter().any(|p| p.is_prefix_of(w))))
    }

    /// True if the infinite sequence beginning with `prefix` lies in the set
    /// for every continuation, i.e. the cylinder of `prefix` is contained in it.
    pub fn contains_cylinder(&self, prefix: &Word) -> bool {
        self.words.iter().any(|w| w.is_prefix_of(prefix))
    }

    /// True if the cylinder of `w` meets the set.
    pub fn meets_cylinder(&self, w: &Word) -> bool {
        self.words.iter().any(|p| p.is_comparable(w))
    }

    /// Splits a nonzero clopen into two nonzero disjoint halves: the first
    /// child of its lexicographically first word, against everything else.
    pub fn split(&self) -> Result<(Clopen, Clopen), AlgebraError> {
        let first = self.words.first().ok_or(AlgebraError::ZeroClopen)?;
        let left = Clopen::cylinder(self.arity, first.child(0))?;
        let right = self.minus(&left)?;
        Ok((left, right))
    }

    /// Two disjoint cylinder decompositions of equal length, one of `self`
    /// and one of `other`, starting from the canonical words.
    pub fn equalize(&self, other: &Clopen) -> Result<(Vec<Word>, Vec<Word>), AlgebraError> {
        self.same_arity(other)?;
        equalize_decompositions(self.arity, self.words.clone(), other.words.clone())
    }

    /// Parses `{01, 10}`; `{}` is the empty set and `{e}` (or `{ε}`) the whole space.
    pub fn parse(arity: u8, text: &str) -> Result<Clopen, AlgebraError> {
        let items = split_delimited(text, '{', '}')?;
        let mut words = Vec::with_capacity(items.len());
        for (pos, item) in items {
            words.push(Word::parse(arity, item).map_err(|e| e.at(pos))?);
        }
        Clopen::canonicalize(arity, words)
    }
}

/// Grows the shorter of two cylinder decompositions by splitting its
/// lexicographically last word until both have the same length. Each split
/// adds `n - 1` words, so lengths must agree modulo `n - 1`.
pub fn equalize_decompositions(
    arity: u8,
    mut left: Vec<Word>,
    mut right: Vec<Word>,
) -> Result<(Vec<Word>, Vec<Word>), AlgebraError> {
    check_arity(arity)?;
    if left.is_empty() || right.is_empty() {
        return Err(AlgebraError::ZeroClopen);
    }
    let step = arity as usize - 1;
    if left.len() % step != right.len() % step {
        return Err(AlgebraError::IncompatibleCounts { left: left.len(), right: right.len(), arity });
    }
    left.sort();
    right.sort();
    while left.len() != right.len() {
        let shorter = if left.len() < right.len() { &mut left } else { &mut right };
        let last = shorter.pop().expect("decomposition is nonempty");
        shorter.extend(last.children(arity));
        shorter.sort();
    }
    Ok((left, right))
}

impl fmt::Display for Clopen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, w) in self.words.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{w}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Clopen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Clopen[{}]{self}", self.arity)
    }
}

#[derive(Serialize, Deserialize)]
struct ClopenRepr {
    arity: u8,
    words: Vec<String>,
}

impl TryFrom<ClopenRepr> for Clopen {
    type Error = AlgebraError;

    fn try_from(r: ClopenRepr) -> Result<Self, Self::Error> {
        let words = r
            .words
            .iter()
            .map(|w| Word::parse(r.arity, w))
            .collect::<Result<Vec<_>, _>>()?;
        Clopen::canonicalize(r.arity, words)
    }
}

impl From<Clopen> for ClopenRepr {
    fn from(c: Clopen) -> Self {
        ClopenRepr { arity: c.arity, words: c.words.iter().map(Word::digits).collect() }
    }
}
