use serde::Serialize;

use crate::algebra::FiniteSet;

use super::model::SymmetricModel;
use super::perm::{enumerate_all, PartialPerm};

/// The principal ultrafilter of subsets of `{0, .., n-1}` containing `atom`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PointFilter {
    pub n: u8,
    pub atom: u8,
}

impl PointFilter {
    pub fn contains(&self, e: &FiniteSet) -> bool {
        e.contains(self.atom)
    }

    pub fn members(&self) -> Vec<FiniteSet> {
        FiniteSet::all_subsets(self.n).filter(|e| self.contains(e)).collect()
    }
}

/// The structure space of `I_n`: one ultrafilter per point.
pub fn structure_space(model: &SymmetricModel) -> Vec<PointFilter> {
    (0..model.n()).map(|atom| PointFilter { n: model.n(), atom }).collect()
}

/// An ultrafilter on `I_n` itself: all elements sending `source` to `target`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Arrow {
    pub source: u8,
    pub target: u8,
}

impl Arrow {
    /// The atom `[source ↦ target]` generating the ultrafilter.
    pub fn atom(&self, n: u8) -> PartialPerm {
        PartialPerm::new(n, [(self.source, self.target)]).expect("arrow endpoints in range")
    }

    pub fn members(&self, n: u8) -> Vec<PartialPerm> {
        enumerate_all(n).into_iter().filter(|s| s.apply(self.source) == Some(self.target)).collect()
    }

    pub fn inverse(&self) -> Arrow {
        Arrow { source: self.target, target: self.source }
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target
    }

    /// `self · other`, defined when `d(self) = r(other)`.
    pub fn compose(&self, other: &Arrow) -> Option<Arrow> {
        (self.source == other.target).then_some(Arrow { source: other.source, target: self.target })
    }
}

/// The germ groupoid of `I_n`: the pair groupoid on `n` objects.
#[derive(Debug, Clone, Serialize)]
pub struct PairGroupoid {
    pub objects: u8,
    pub arrows: Vec<Arrow>,
}

impl PairGroupoid {
    pub fn identities(&self) -> Vec<Arrow> {
        self.arrows.iter().copied().filter(Arrow::is_identity).collect()
    }

    /// Every composable pair `(a, b)` with its product `a · b`.
    pub fn composition_table(&self) -> Vec<(Arrow, Arrow, Arrow)> {
        let mut table = Vec::new();
        for a in &self.arrows {
            for b in &self.arrows {
                if let Some(c) = a.compose(b) {
                    table.push((*a, *b, c));
                }
            }
        }
        table
    }
}

pub fn germ_groupoid(model: &SymmetricModel) -> PairGroupoid {
    let n = model.n();
    let arrows = (0..n)
        .flat_map(|source| (0..n).map(move |target| Arrow { source, target }))
        .collect();
    PairGroupoid { objects: n, arrows }
}
