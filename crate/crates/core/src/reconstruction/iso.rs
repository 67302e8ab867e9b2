use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use serde::Deserialize;

use crate::inverse::{Calculus, FiniteModel, Model};
use crate::symmetric::{PartialPerm, SymmetricModel};

use super::ReconstructionError;

type Map<E> = Arc<dyn Fn(&E) -> E + Send + Sync>;

/// An isomorphism between unit groups given by a pair of mapping oracles.
#[derive(Clone)]
pub struct GroupIso<E> {
    label: String,
    forward: Map<E>,
    backward: Map<E>,
}

impl<E: Clone + 'static> GroupIso<E> {
    pub fn new(
        label: impl Into<String>,
        forward: impl Fn(&E) -> E + Send + Sync + 'static,
        backward: impl Fn(&E) -> E + Send + Sync + 'static,
    ) -> Self {
        GroupIso { label: label.into(), forward: Arc::new(forward), backward: Arc::new(backward) }
    }

    pub fn identity() -> Self {
        Self::new("identity", E::clone, E::clone)
    }

    /// `g ↦ π g π⁻¹`.
    pub fn conjugation<M>(model: M, pi: E) -> Self
    where
        M: Model<Elem = E> + Clone + Send + Sync + 'static,
        E: fmt::Display + Send + Sync,
    {
        let label = format!("inner:{pi}");
        let back = model.clone();
        let pi_inv = model.inv(&pi);
        Self::new(label, move |g| model.conjugate(&pi, g), move |g| back.conjugate(&pi_inv, g))
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn forward(&self, g: &E) -> E {
        (self.forward)(g)
    }

    pub fn backward(&self, g: &E) -> E {
        (self.backward)(g)
    }

    /// Checks that `backward ∘ forward` fixes every listed unit and that
    /// `forward` is multiplicative on every pair of them.
    pub fn verify_on<M: Model<Elem = E>>(&self, model: &M, units: &[E]) -> Result<(), ReconstructionError>
    where
        E: fmt::Debug + PartialEq,
    {
        let images: Vec<E> = units.iter().map(|g| self.forward(g)).collect();
        for (g, a) in units.iter().zip(&images) {
            if self.backward(a) != *g {
                return Err(ReconstructionError::NotAHomomorphism(format!("backward(forward({g:?})) ≠ {g:?}")));
            }
        }
        for (g, a) in units.iter().zip(&images) {
            for (h, b) in units.iter().zip(&images) {
                if self.forward(&model.mul(g, h)) != model.mul(a, b) {
                    return Err(ReconstructionError::NotAHomomorphism(format!("forward fails on ({g:?}, {h:?})")));
                }
            }
        }
        Ok(())
    }

    /// [`GroupIso::verify_on`] over the whole unit group of a finite model.
    pub fn verify_finite<M: FiniteModel<Elem = E>>(&self, model: &M) -> Result<(), ReconstructionError>
    where
        E: fmt::Debug + PartialEq,
    {
        self.verify_on(model, &model.units())
    }
}

impl<E> fmt::Debug for GroupIso<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupIso({})", self.label)
    }
}

impl GroupIso<PartialPerm> {
    /// Extends images of generators of the unit group of `I_n` to a map on
    /// the whole group, by breadth-first search over words in the
    /// generators. Rejects data that do not define a bijective homomorphism
    /// onto the unit group.
    pub fn from_generator_images(
        label: impl Into<String>,
        model: &SymmetricModel,
        images: &[(PartialPerm, PartialPerm)],
    ) -> Result<Self, ReconstructionError> {
        let n = model.n();
        let one = PartialPerm::identity(n);
        if images.iter().any(|(g, a)| !g.is_permutation() || !a.is_permutation() || g.n() != n || a.n() != n) {
            return Err(ReconstructionError::Fixture("generators and images must be permutations of the points".into()));
        }
        let mut table: HashMap<PartialPerm, PartialPerm> = HashMap::from([(one, one)]);
        let mut queue = VecDeque::from([one]);
        while let Some(g) = queue.pop_front() {
            let image = table[&g];
            for (s, a) in images {
                let sg = s.compose(&g);
                let expected = a.compose(&image);
                match table.get(&sg) {
                    Some(existing) if *existing != expected => {
                        return Err(ReconstructionError::NotAHomomorphism(format!(
                            "generator images are inconsistent at {sg}"
                        )));
                    }
                    Some(_) => {}
                    None => {
                        table.insert(sg, expected);
                        queue.push_back(sg);
                    }
                }
            }
        }
        let order = model.units().len();
        if table.len() != order {
            return Err(ReconstructionError::Fixture(format!(
                "generators reach {} of the {order} units",
                table.len()
            )));
        }
        let inverse: HashMap<PartialPerm, PartialPerm> = table.iter().map(|(g, a)| (*a, *g)).collect();
        if inverse.len() != order {
            return Err(ReconstructionError::NotAHomomorphism("generator images do not give a bijection".into()));
        }
        let forward = Arc::new(table);
        let backward = Arc::new(inverse);
        Ok(Self::new(label, move |g| forward[g], move |g| backward[g]))
    }

    /// Reads a fixture `{"n": 6, "images": [{"generator": "(0 1)", "image":
    /// "(0 1)(2 3)(4 5)"}, ...]}` with permutations in cycle notation.
    pub fn from_fixture_json(label: impl Into<String>, text: &str) -> Result<Self, ReconstructionError> {
        let fixture: Fixture = serde_json::from_str(text).map_err(|e| ReconstructionError::Fixture(e.to_string()))?;
        let model = SymmetricModel::new(fixture.n).map_err(|e| ReconstructionError::Fixture(e.to_string()))?;
        let parse = |text: &str| {
            PartialPerm::parse_cycles(fixture.n, text).map_err(|e| ReconstructionError::Fixture(format!("{text}: {e}")))
        };
        let images = fixture
            .images
            .iter()
            .map(|entry| Ok((parse(&entry.generator)?, parse(&entry.image)?)))
            .collect::<Result<Vec<_>, ReconstructionError>>()?;
        Self::from_generator_images(label, &model, &images)
    }

    /// The outer automorphism of `S_6`, sending transpositions to products
    /// of three disjoint transpositions.
    pub fn s6_outer() -> Self {
        Self::from_fixture_json("s6-outer", S6_OUTER).expect("bundled fixture is valid")
    }
}

/// The bundled fixture for [`GroupIso::s6_outer`].
pub const S6_OUTER: &str = include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/s6-outer.json"));

#[derive(Deserialize)]
struct Fixture {
    n: u8,
    images: Vec<FixtureEntry>,
}

#[derive(Deserialize)]
struct FixtureEntry {
    generator: String,
    image: String,
}
