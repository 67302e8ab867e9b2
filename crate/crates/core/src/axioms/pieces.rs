use std::fmt::Debug;

use crate::algebra::{Clopen, FiniteSet, Word};
use crate::cuntz::{CuntzModel, PrefixBijection};
use crate::inverse::{Idem, Model};
use crate::symmetric::{PartialPerm, SymmetricModel};

/// Models whose idempotents decompose into disjoint basic pieces: cylinders
/// of Cantor space, or points of a finite set.
pub trait PieceModel: Model {
    type Piece: Clone + Debug + PartialEq;

    /// A disjoint decomposition of `e` into pieces, in a fixed order.
    fn pieces(&self, e: &Idem<Self>) -> Vec<Self::Piece>;

    fn piece_idem(&self, p: &Self::Piece) -> Idem<Self>;

    /// A decomposition of `p` into at least two nonzero pieces, or `None`
    /// when `p` is an atom.
    fn refine(&self, p: &Self::Piece) -> Option<Vec<Self::Piece>>;

    /// An element with domain `from` and range `to`.
    fn transfer(&self, from: &Self::Piece, to: &Self::Piece) -> Self::Elem;

    /// Number of refinements needed to reach `p` from the top.
    fn depth(&self, p: &Self::Piece) -> usize;
}

impl PieceModel for CuntzModel {
    type Piece = Word;

    fn pieces(&self, e: &Clopen) -> Vec<Word> {
        e.words().to_vec()
    }

    fn piece_idem(&self, p: &Word) -> Clopen {
        Clopen::cylinder(self.arity(), p.clone()).expect("word of this arity")
    }

    fn refine(&self, p: &Word) -> Option<Vec<Word>> {
        Some(p.children(self.arity()))
    }

    fn transfer(&self, from: &Word, to: &Word) -> PrefixBijection {
        PrefixBijection::single(self.arity(), from.clone(), to.clone()).expect("word of this arity")
    }

    fn depth(&self, p: &Word) -> usize {
        p.len()
    }
}

impl PieceModel for SymmetricModel {
    type Piece = u8;

    fn pieces(&self, e: &FiniteSet) -> Vec<u8> {
        e.points().collect()
    }

    fn piece_idem(&self, p: &u8) -> FiniteSet {
        FiniteSet::singleton(self.n(), *p).expect("point in range")
    }

    fn refine(&self, _p: &u8) -> Option<Vec<u8>> {
        None
    }

    fn transfer(&self, from: &u8, to: &u8) -> PartialPerm {
        PartialPerm::new(self.n(), [(*from, *to)]).expect("points in range")
    }

    fn depth(&self, _p: &u8) -> usize {
        0
    }
}
