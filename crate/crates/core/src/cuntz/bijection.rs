use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{split_delimited, AlgebraError, Clopen, Word};

use super::CuntzError;

/// A partial bijection of Cantor space given by finitely many prefix
/// substitutions `u·x ↦ v·x`, an element of `C_n`.
///
/// The pair list is canonical: domain words and codomain words are
/// antichains, no complete sibling family `{(u·a, v·a) : a < n}` occurs, and
/// pairs are sorted by domain word. Structural equality is therefore equality
/// of maps.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "BijectionRepr", into = "BijectionRepr")]
pub struct PrefixBijection {
    arity: u8,
    pairs: Vec<(Word, Word)>,
}

impl PrefixBijection {
    /// Validates and canonicalizes a list of pairs.
    pub fn new<I>(arity: u8, pairs: I) -> Result<Self, CuntzError>
    where
        I: IntoIterator<Item = (Word, Word)>,
    {
        crate::algebra::CantorAlgebra::new(arity)?;
        let pairs: Vec<(Word, Word)> = pairs.into_iter().collect();
        for (u, v) in &pairs {
            for w in [u, v] {
                if let Some(&letter) = w.letters().iter().find(|&&l| l >= arity) {
                    return Err(AlgebraError::InvalidLetter { letter, arity }.into());
                }
            }
        }
        check_antichain(pairs.iter().map(|p| &p.0), "domain")?;
        check_antichain(pairs.iter().map(|p| &p.1), "codomain")?;
        Ok(Self::reduce(arity, pairs))
    }

    /// Canonical form of pairs already known to form a partial bijection.
    pub(crate) fn reduce(arity: u8, mut pairs: Vec<(Word, Word)>) -> Self {
        loop {
            let mut families: HashMap<(Word, Word), usize> = HashMap::new();
            for (u, v) in &pairs {
                if let (Some(a), Some(b)) = (u.last(), v.last()) {
                    if a == b {
                        *families.entry((u.parent().unwrap(), v.parent().unwrap())).or_default() += 1;
                    }
                }
            }
            let complete: Vec<(Word, Word)> =
                families.into_iter().filter(|(_, c)| *c == arity as usize).map(|(k, _)| k).collect();
            if complete.is_empty() {
                break;
            }
            pairs.retain(|(u, v)| match (u.parent(), v.parent()) {
                (Some(pu), Some(pv)) if u.last() == v.last() => {
                    !complete.iter().any(|(cu, cv)| *cu == pu && *cv == pv)
                }
                _ => true,
            });
            pairs.extend(complete);
        }
        pairs.sort();
        PrefixBijection { arity, pairs }
    }

    pub fn zero(arity: u8) -> Self {
        PrefixBijection { arity, pairs: Vec::new() }
    }

    pub fn identity(arity: u8) -> Self {
        PrefixBijection { arity, pairs: vec![(Word::empty(), Word::empty())] }
    }

    /// The partial identity on a clopen set.
    pub fn identity_on(e: &Clopen) -> Self {
        PrefixBijection { arity: e.arity(), pairs: e.words().iter().map(|w| (w.clone(), w.clone())).collect() }
    }

    /// The single substitution `u·x ↦ v·x`.
    pub fn single(arity: u8, u: Word, v: Word) -> Result<Self, CuntzError> {
        Self::new(arity, [(u, v)])
    }

    pub fn arity(&self) -> u8 {
        self.arity
    }

    pub fn pairs(&self) -> &[(Word, Word)] {
        &self.pairs
    }

    pub fn is_zero(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.pairs.len() == 1 && self.pairs[0].0.is_empty() && self.pairs[0].1.is_empty()
    }

    pub fn domain(&self) -> Clopen {
        Clopen::canonicalize(self.arity, self.pairs.iter().map(|p| p.0.clone())).expect("valid letters")
    }

    pub fn range(&self) -> Clopen {
        Clopen::canonicalize(self.arity, self.pairs.iter().map(|p| p.1.clone())).expect("valid letters")
    }

    /// Union of the cylinders on which a pair acts as the identity. A pair
    /// `(u, v)` with `u ≠ v` fixes no nonempty clopen set, so this is the
    /// largest idempotent below the element.
    pub fn fixed_clopen(&self) -> Clopen {
        Clopen::canonicalize(self.arity, self.pairs.iter().filter(|(u, v)| u == v).map(|p| p.0.clone()))
            .expect("valid letters")
    }

    pub fn is_idempotent(&self) -> bool {
        self.pairs.iter().all(|(u, v)| u == v)
    }

    pub fn is_unit(&self) -> bool {
        self.domain().is_one() && self.range().is_one()
    }

    fn same_arity(&self, other: &Self) -> Result<(), CuntzError> {
        if self.arity == other.arity {
            Ok(())
        } else {
            Err(AlgebraError::ArityMismatch { left: self.arity, right: other.arity }.into())
        }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Result<Self, CuntzError> {
        self.same_arity(other)?;
        let mut out = Vec::new();
        for (u, v) in &other.pairs {
            for (p, q) in &self.pairs {
                if let Some(w) = v.strip_prefix(p) {
                    out.push((u.clone(), q.concat(&w)));
                } else if let Some(w) = p.strip_prefix(v) {
                    out.push((u.concat(&w), q.clone()));
                }
            }
        }
        Ok(Self::reduce(self.arity, out))
    }

    pub fn inverse(&self) -> Self {
        let mut pairs: Vec<(Word, Word)> = self.pairs.iter().map(|(u, v)| (v.clone(), u.clone())).collect();
        pairs.sort();
        PrefixBijection { arity: self.arity, pairs }
    }

    /// Restriction to a clopen set, `self · 1_e`.
    pub fn restrict(&self, e: &Clopen) -> Result<Self, CuntzError> {
        self.compose(&Self::identity_on(e))
    }

    /// Union of two maps that agree wherever both are defined.
    ///
    /// Returns `None` if they disagree or the union is not injective.
    pub fn union(&self, other: &Self) -> Result<Option<Self>, CuntzError> {
        self.same_arity(other)?;
        let mut all: Vec<(Word, Word)> = self.pairs.iter().chain(&other.pairs).cloned().collect();
        all.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.cmp(b)));
        let mut kept: Vec<(Word, Word)> = Vec::with_capacity(all.len());
        for (u, v) in all {
            let mut covered = false;
            for (p, q) in &kept {
                if let Some(w) = u.strip_prefix(p) {
                    if q.concat(&w) != v {
                        return Ok(None);
                    }
                    covered = true;
                    break;
                }
            }
            if !covered {
                kept.push((u, v));
            }
        }
        if check_antichain(kept.iter().map(|p| &p.1), "codomain").is_err() {
            return Ok(None);
        }
        Ok(Some(Self::reduce(self.arity, kept)))
    }

    /// Pairs common to both maps after refining to a common cylinder: two
    /// distinct substitutions on one cylinder agree on at most one point, so
    /// this is the greatest lower bound.
    pub fn intersection(&self, other: &Self) -> Result<Self, CuntzError> {
        self.same_arity(other)?;
        let mut out = Vec::new();
        for (u, v) in &self.pairs {
            for (p, q) in &other.pairs {
                let (d, a, b) = if let Some(w) = u.strip_prefix(p) {
                    (u.clone(), v.clone(), q.concat(&w))
                } else if let Some(w) = p.strip_prefix(u) {
                    (p.clone(), v.concat(&w), q.clone())
                } else {
                    continue;
                };
                if a == b {
                    out.push((d, a));
                }
            }
        }
        Ok(Self::reduce(self.arity, out))
    }

    /// Parses `{00->11, 01->10, 1->0}`; `0` or `{}` is zero and `1` the identity.
    pub fn parse(arity: u8, text: &str) -> Result<Self, CuntzError> {
        let t = text.trim();
        match t {
            "0" => return Ok(Self::zero(arity)),
            "1" => return Ok(Self::identity(arity)),
            _ => {}
        }
        let items = split_delimited(text, '{', '}')?;
        let mut pairs = Vec::with_capacity(items.len());
        for (pos, item) in items {
            let (lhs, rhs) = item
                .split_once("->")
                .or_else(|| item.split_once('→'))
                .ok_or(AlgebraError::Parse { position: pos, message: "expected 'u->v'".into() })?;
            let rhs_pos = pos + item.len() - rhs.len();
            let u = Word::parse(arity, lhs.trim()).map_err(|e| e.at(pos))?;
            let v = Word::parse(arity, rhs.trim()).map_err(|e| e.at(rhs_pos + rhs.len() - rhs.trim_start().len()))?;
            pairs.push((u, v));
        }
        Self::new(arity, pairs)
    }
}

fn check_antichain<'a, I>(words: I, side: &'static str) -> Result<(), CuntzError>
where
    I: Iterator<Item = &'a Word>,
{
    let mut sorted: Vec<&Word> = words.collect();
    sorted.sort();
    // In lexicographic order a prefix immediately precedes some extension of
    // it, so checking neighbours suffices.
    for pair in sorted.windows(2) {
        if pair[0].is_prefix_of(pair[1]) {
            return Err(CuntzError::NotAntichain { side, first: pair[0].clone(), second: pair[1].clone() });
        }
    }
    Ok(())
}

impl fmt::Display for PrefixBijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        if self.is_identity() {
            return f.write_str("1");
        }
        let items: Vec<String> = self.pairs.iter().map(|(u, v)| format!("{u}->{v}")).collect();
        write!(f, "{{{}}}", items.join(", "))
    }
}

impl fmt::Debug for PrefixBijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C{}{}", self.arity, self)
    }
}

#[derive(Serialize, Deserialize)]
struct BijectionRepr {
    arity: u8,
    pairs: Vec<(String, String)>,
}

impl From<PrefixBijection> for BijectionRepr {
    fn from(s: PrefixBijection) -> Self {
        BijectionRepr { arity: s.arity, pairs: s.pairs.iter().map(|(u, v)| (u.digits(), v.digits())).collect() }
    }
}

impl TryFrom<BijectionRepr> for PrefixBijection {
    type Error = CuntzError;

    fn try_from(r: BijectionRepr) -> Result<Self, CuntzError> {
        let pairs = r
            .pairs
            .iter()
            .map(|(u, v)| Ok((Word::parse(r.arity, u)?, Word::parse(r.arity, v)?)))
            .collect::<Result<Vec<_>, AlgebraError>>()?;
        PrefixBijection::new(r.arity, pairs)
    }
}
