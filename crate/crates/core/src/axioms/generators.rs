use crate::algebra::words_up_to;
use crate::cuntz::{cylinder_three_cycle, swap_involution, CuntzModel, PrefixBijection};
use crate::inverse::Model;
use crate::symmetric::{PartialPerm, SymmetricModel};

/// Deterministic lists of special involutions and special 3-cycles.
///
/// `bound` limits the words used (`C_n`: length `1..=bound`) or the points
/// used (`I_n`: points below `bound`).
pub trait Generators: Model {
    fn sym_generators(&self, bound: usize) -> Vec<Self::Elem>;
    fn alt_generators(&self, bound: usize) -> Vec<Self::Elem>;
}

impl Generators for SymmetricModel {
    /// The transpositions `(i j)`, `i < j`.
    fn sym_generators(&self, bound: usize) -> Vec<PartialPerm> {
        let m = bound.min(self.n() as usize) as u8;
        let n = self.n();
        (0..m)
            .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
            .map(|(i, j)| PartialPerm::transposition(n, i, j).expect("points in range"))
            .collect()
    }

    /// The 3-cycles `(i j k)` and `(i k j)`, `i < j < k`.
    fn alt_generators(&self, bound: usize) -> Vec<PartialPerm> {
        let m = bound.min(self.n() as usize) as u8;
        let n = self.n();
        let mut out = Vec::new();
        for i in 0..m {
            for j in i + 1..m {
                for k in j + 1..m {
                    for cycle in [[i, j, k], [i, k, j]] {
                        out.push(PartialPerm::from_cycles(n, &[&cycle]).expect("points in range"));
                    }
                }
            }
        }
        out
    }
}

impl Generators for CuntzModel {
    /// Swaps of the cylinders of incomparable words `u < v`, shortest words first.
    fn sym_generators(&self, bound: usize) -> Vec<PrefixBijection> {
        let words: Vec<_> = words_up_to(self.arity(), bound).into_iter().filter(|w| !w.is_empty()).collect();
        let mut out = Vec::new();
        for (i, u) in words.iter().enumerate() {
            for v in &words[i + 1..] {
                if !u.is_comparable(v) {
                    out.push(swap_involution(self.arity(), u, v).expect("incomparable words"));
                }
            }
        }
        out
    }

    /// The two cyclic rotations of each triple of pairwise incomparable words.
    fn alt_generators(&self, bound: usize) -> Vec<PrefixBijection> {
        let arity = self.arity();
        let words: Vec<_> = words_up_to(arity, bound).into_iter().filter(|w| !w.is_empty()).collect();
        let mut out = Vec::new();
        for (i, a) in words.iter().enumerate() {
            for (j, b) in words.iter().enumerate().skip(i + 1) {
                if a.is_comparable(b) {
                    continue;
                }
                for c in &words[j + 1..] {
                    if a.is_comparable(c) || b.is_comparable(c) {
                        continue;
                    }
                    for g in [cylinder_three_cycle(arity, a, b, c), cylinder_three_cycle(arity, a, c, b)] {
                        let g = g.expect("pairwise incomparable words");
                        if !out.contains(&g) {
                            out.push(g);
                        }
                    }
                }
            }
        }
        out
    }
}
