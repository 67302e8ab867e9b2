use std::fmt;
use std::str::FromStr;

use tarski_core::algebra::{Clopen, FiniteSet};
use tarski_core::cuntz::{CuntzModel, PrefixBijection};
use tarski_core::inverse::{Idem, Model};
use tarski_core::symmetric::{PartialPerm, ProductModel, SymmetricModel};

pub type Pair = ProductModel<SymmetricModel, SymmetricModel>;

/// The model selected with `--model`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelSpec {
    Cuntz(u8),
    Sym(u8),
    Prod(u8, u8),
}

impl FromStr for ModelSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let number = |digits: &str| digits.parse::<u8>().map_err(|_| format!("bad model size in '{s}'"));
        if let Some(rest) = s.strip_prefix("cuntz") {
            let n = number(rest)?;
            CuntzModel::new(n).map_err(|e| e.to_string())?;
            return Ok(ModelSpec::Cuntz(n));
        }
        if let Some(rest) = s.strip_prefix("prod:") {
            let (a, b) = rest.split_once(',').ok_or_else(|| format!("expected prod:symA,symB, got '{s}'"))?;
            let side = |part: &str| -> Result<u8, String> {
                let n = number(part.trim().strip_prefix("sym").ok_or_else(|| format!("expected symN in '{s}'"))?)?;
                SymmetricModel::new(n).map_err(|e| e.to_string())?;
                Ok(n)
            };
            return Ok(ModelSpec::Prod(side(a)?, side(b)?));
        }
        if let Some(rest) = s.strip_prefix("sym") {
            let n = number(rest)?;
            SymmetricModel::new(n).map_err(|e| e.to_string())?;
            return Ok(ModelSpec::Sym(n));
        }
        Err(format!("unknown model '{s}' (expected cuntzN, symN or prod:symA,symB)"))
    }
}

impl fmt::Display for ModelSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelSpec::Cuntz(n) => write!(f, "cuntz{n}"),
            ModelSpec::Sym(n) => write!(f, "sym{n}"),
            ModelSpec::Prod(a, b) => write!(f, "prod:sym{a},sym{b}"),
        }
    }
}

/// A parsed literal: an element, or an idempotent written as a set.
pub enum Literal<M: Model> {
    Element(M::Elem),
    Idempotent(Idem<M>),
}

/// Literal syntax of a model.
pub trait Syntax: Model + Sized {
    /// Whether `(0 1)(2 3)` is read as a permutation rather than grouping.
    const CYCLES: bool = false;

    fn parse_literal(&self, text: &str) -> Result<Literal<Self>, String>;
    fn show_element(&self, s: &Self::Elem) -> String;
    fn show_idempotent(&self, e: &Idem<Self>) -> String;

    fn parse_element(&self, text: &str) -> Result<Self::Elem, String> {
        Ok(match self.parse_literal(text)? {
            Literal::Element(s) => s,
            Literal::Idempotent(e) => self.embed(&e),
        })
    }

    fn parse_idempotent(&self, text: &str) -> Result<Idem<Self>, String> {
        match self.parse_literal(text)? {
            Literal::Idempotent(e) => Ok(e),
            Literal::Element(s) => self.extract(&s).ok_or_else(|| format!("'{text}' is not an idempotent")),
        }
    }
}

fn zero_or_one<M: Model>(model: &M, text: &str) -> Option<Literal<M>> {
    match text.trim() {
        "0" => Some(Literal::Element(model.zero())),
        "1" => Some(Literal::Element(model.one())),
        _ => None,
    }
}

impl Syntax for CuntzModel {
    fn parse_literal(&self, text: &str) -> Result<Literal<Self>, String> {
        if let Some(lit) = zero_or_one(self, text) {
            return Ok(lit);
        }
        if text.contains("->") || text.contains('→') {
            PrefixBijection::parse(self.arity(), text).map(Literal::Element).map_err(|e| e.to_string())
        } else {
            Clopen::parse(self.arity(), text).map(Literal::Idempotent).map_err(|e| e.to_string())
        }
    }

    fn show_element(&self, s: &PrefixBijection) -> String {
        s.to_string()
    }

    fn show_idempotent(&self, e: &Clopen) -> String {
        e.to_string()
    }
}

impl Syntax for SymmetricModel {
    const CYCLES: bool = true;

    fn parse_literal(&self, text: &str) -> Result<Literal<Self>, String> {
        if let Some(lit) = zero_or_one(self, text) {
            return Ok(lit);
        }
        let t = text.trim();
        if t.starts_with('{') {
            return FiniteSet::parse(self.n(), t).map(Literal::Idempotent).map_err(|e| e.to_string());
        }
        let parsed = if t.starts_with('(') { PartialPerm::parse_cycles(self.n(), t) } else { PartialPerm::parse(self.n(), t) };
        parsed.map(Literal::Element).map_err(|e| e.to_string())
    }

    fn show_element(&self, s: &PartialPerm) -> String {
        s.to_string()
    }

    fn show_idempotent(&self, e: &FiniteSet) -> String {
        e.to_string()
    }
}

/// Splits `<a, b>` at its top-level comma.
fn split_pair(text: &str) -> Result<(&str, &str), String> {
    let inner = text
        .trim()
        .strip_prefix('<')
        .and_then(|t| t.strip_suffix('>'))
        .ok_or_else(|| format!("expected <left, right>, got '{text}'"))?;
    let mut depth = 0i32;
    for (i, ch) in inner.char_indices() {
        match ch {
            '{' | '[' | '(' => depth += 1,
            '}' | ']' | ')' => depth -= 1,
            ',' if depth == 0 => return Ok((&inner[..i], &inner[i + 1..])),
            _ => {}
        }
    }
    Err(format!("expected <left, right>, got '{text}'"))
}

impl Syntax for Pair {
    fn parse_literal(&self, text: &str) -> Result<Literal<Self>, String> {
        if let Some(lit) = zero_or_one(self, text) {
            return Ok(lit);
        }
        let (a, b) = split_pair(text)?;
        match (self.left.parse_literal(a)?, self.right.parse_literal(b)?) {
            (Literal::Idempotent(x), Literal::Idempotent(y)) => Ok(Literal::Idempotent((x, y))),
            (x, y) => {
                let x = match x {
                    Literal::Element(s) => s,
                    Literal::Idempotent(e) => self.left.embed(&e),
                };
                let y = match y {
                    Literal::Element(s) => s,
                    Literal::Idempotent(e) => self.right.embed(&e),
                };
                Ok(Literal::Element((x, y)))
            }
        }
    }

    fn show_element(&self, s: &(PartialPerm, PartialPerm)) -> String {
        format!("<{}, {}>", s.0, s.1)
    }

    fn show_idempotent(&self, e: &(FiniteSet, FiniteSet)) -> String {
        format!("<{}, {}>", e.0, e.1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use tarski_core::cuntz::CuntzSampler;
    use tarski_core::inverse::FiniteModel;

    #[test]
    fn symmetric_literals_round_trip() {
        let m = SymmetricModel::new(3).unwrap();
        for s in m.elements() {
            assert_eq!(m.parse_element(&m.show_element(&s)).unwrap(), s);
        }
        for e in FiniteSet::all_subsets(3) {
            assert_eq!(m.parse_idempotent(&m.show_idempotent(&e)).unwrap(), e);
        }
        let cycle = m.parse_element("(0 2)").unwrap();
        assert_eq!(m.show_element(&cycle), "[0:2, 1:1, 2:0]");
    }

    #[test]
    fn product_literals_round_trip() {
        let m = Pair::new(SymmetricModel::new(2).unwrap(), SymmetricModel::new(2).unwrap());
        for s in m.elements() {
            assert_eq!(m.parse_element(&m.show_element(&s)).unwrap(), s);
        }
        assert!(matches!(m.parse_literal("<{0}, {}>"), Ok(Literal::Idempotent(_))));
        assert!(matches!(m.parse_literal("<{0}, (0 1)>"), Ok(Literal::Element(_))));
        assert!(m.parse_literal("<{0}>").is_err());
    }

    #[test]
    fn cuntz_literals_round_trip() {
        let m = CuntzModel::new(3).unwrap();
        let mut sampler = CuntzSampler::new(3, 11).unwrap();
        for _ in 0..500 {
            let s = sampler.element();
            assert_eq!(m.parse_element(&m.show_element(&s)).unwrap(), s);
            let e = sampler.clopen();
            assert_eq!(m.parse_idempotent(&m.show_idempotent(&e)).unwrap(), e);
        }
        assert!(matches!(m.parse_literal("{}"), Ok(Literal::Idempotent(_))));
        assert!(matches!(m.parse_literal("1"), Ok(Literal::Element(_))));
    }

    #[test]
    fn model_names() {
        for text in ["cuntz2", "sym5", "prod:sym2,sym3"] {
            assert_eq!(text.parse::<ModelSpec>().unwrap().to_string(), text);
        }
        assert!("cuntz1".parse::<ModelSpec>().is_err());
        assert!("prod:sym2".parse::<ModelSpec>().is_err());
        assert!("group".parse::<ModelSpec>().is_err());
    }
}
