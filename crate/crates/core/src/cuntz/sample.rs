use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use crate::algebra::{Clopen, Word};

use super::bijection::PrefixBijection;
use super::germ::Germ;
use super::point::Point;
use super::units::{cylinder_three_cycle, swap_involution};
use super::CuntzError;

/// Deepest word produced for random elements and idempotents.
pub const ELEMENT_DEPTH: usize = 5;
/// Most substitution pairs in a random element.
pub const ELEMENT_PAIRS: usize = 4;
/// Most generators multiplied together in a random unit.
pub const UNIT_FACTORS: usize = 6;

/// Seeded generator of random elements of `C_n`.
#[derive(Debug, Clone)]
pub struct CuntzSampler {
    arity: u8,
    rng: StdRng,
}

impl CuntzSampler {
    pub fn new(arity: u8, seed: u64) -> Result<Self, CuntzError> {
        crate::algebra::CantorAlgebra::new(arity)?;
        Ok(CuntzSampler { arity, rng: StdRng::seed_from_u64(seed) })
    }

    pub fn arity(&self) -> u8 {
        self.arity
    }

    pub fn rng(&mut self) -> &mut StdRng {
        &mut self.rng
    }

    pub fn word(&mut self, min_len: usize, max_len: usize) -> Word {
        let len = self.rng.gen_range(min_len..=max_len);
        let letters = (0..len).map(|_| self.rng.gen_range(0..self.arity)).collect();
        Word::new(self.arity, letters).expect("letters below arity")
    }

    /// A nonzero clopen set: a union of one to four cylinders.
    pub fn clopen(&mut self) -> Clopen {
        let k = self.rng.gen_range(1..=ELEMENT_PAIRS);
        let words: Vec<Word> = (0..k).map(|_| self.word(0, ELEMENT_DEPTH)).collect();
        Clopen::canonicalize(self.arity, words).expect("letters below arity")
    }

    /// A clopen set other than the whole space and the empty set.
    pub fn proper_clopen(&mut self) -> Clopen {
        loop {
            let e = self.clopen();
            if !e.is_one() {
                return e;
            }
        }
    }

    /// A join of up to four random pairs, skipping pairs that would break
    /// injectivity. May be zero.
    pub fn element(&mut self) -> PrefixBijection {
        let k = self.rng.gen_range(0..=ELEMENT_PAIRS);
        let mut pairs: Vec<(Word, Word)> = Vec::new();
        for _ in 0..k {
            let u = self.word(0, ELEMENT_DEPTH);
            let v = self.word(0, ELEMENT_DEPTH);
            if pairs.iter().all(|(p, q)| !p.is_comparable(&u) && !q.is_comparable(&v)) {
                pairs.push((u, v));
            }
        }
        PrefixBijection::new(self.arity, pairs).expect("antichains by construction")
    }

    pub fn nonzero_element(&mut self) -> PrefixBijection {
        loop {
            let s = self.element();
            if !s.is_zero() {
                return s;
            }
        }
    }

    /// A complete prefix code of at least `size` words, made by splitting
    /// random leaves of the tree.
    pub fn prefix_code(&mut self, size: usize, max_depth: usize) -> Vec<Word> {
        let mut leaves = vec![Word::empty()];
        while leaves.len() < size {
            let splittable: Vec<usize> = (0..leaves.len()).filter(|&i| leaves[i].len() < max_depth).collect();
            let Some(&i) = splittable.choose(&mut self.rng) else { break };
            let leaf = leaves.swap_remove(i);
            leaves.extend(leaf.children(self.arity));
        }
        leaves
    }

    /// `k` pairwise incomparable words taken from a random prefix code.
    pub fn disjoint_words(&mut self, k: usize, max_depth: usize) -> Vec<Word> {
        let extra = self.rng.gen_range(0..3);
        let mut code = self.prefix_code(k + extra, max_depth);
        code.shuffle(&mut self.rng);
        code.truncate(k);
        code
    }

    pub fn swap(&mut self) -> PrefixBijection {
        let w = self.disjoint_words(2, 3);
        swap_involution(self.arity, &w[0], &w[1]).expect("disjoint words")
    }

    pub fn three_cycle(&mut self) -> PrefixBijection {
        let w = self.disjoint_words(3, 3);
        cylinder_three_cycle(self.arity, &w[0], &w[1], &w[2]).expect("disjoint words")
    }

    /// A product of one to six cylinder swaps and 3-cycles.
    pub fn unit(&mut self) -> PrefixBijection {
        let k = self.rng.gen_range(1..=UNIT_FACTORS);
        let mut g = PrefixBijection::identity(self.arity);
        for _ in 0..k {
            let factor = if self.rng.gen_bool(0.5) { self.swap() } else { self.three_cycle() };
            g = g.compose(&factor).expect("same arity");
        }
        g
    }

    pub fn nontrivial_unit(&mut self) -> PrefixBijection {
        loop {
            let g = self.unit();
            if !g.is_identity() {
                return g;
            }
        }
    }

    /// An involution other than 1: a product of disjoint cylinder swaps,
    /// conjugated by a random unit half of the time.
    pub fn involution(&mut self) -> PrefixBijection {
        let swaps = self.rng.gen_range(1..=2);
        let words = self.disjoint_words(2 * swaps, 4);
        let mut t = PrefixBijection::identity(self.arity);
        for pair in words.chunks(2) {
            let s = swap_involution(self.arity, &pair[0], &pair[1]).expect("disjoint words");
            t = t.compose(&s).expect("same arity");
        }
        if self.rng.gen_bool(0.5) {
            let g = self.unit();
            t = g.compose(&t).and_then(|x| x.compose(&g.inverse())).expect("same arity");
        }
        t
    }

    pub fn point(&mut self) -> Point {
        let prefix = self.word(0, 4);
        self.point_after(&prefix)
    }

    /// A random point of the cylinder of `w`.
    pub fn point_after(&mut self, w: &Word) -> Point {
        let tail = self.word(0, 3);
        let period = self.word(1, 3);
        Point::new(self.arity, w.concat(&tail), period).expect("nonempty period")
    }

    /// A random point of a nonzero clopen set.
    pub fn point_in(&mut self, e: &Clopen) -> Point {
        let w = e.words().choose(&mut self.rng).expect("nonzero clopen").clone();
        self.point_after(&w)
    }

    /// The germ of a random nonzero element at a random point of its domain.
    pub fn germ(&mut self) -> Germ {
        let s = self.nonzero_element();
        let base = self.point_in(&s.domain());
        Germ::new(s, base).expect("base in domain")
    }
}
