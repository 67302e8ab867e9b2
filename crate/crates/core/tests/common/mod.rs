//! Checks shared by the acceptance runner and the integration tests. Each
//! returns a short summary on success and the first counterexample on failure.
#![allow(dead_code)]

use std::time::Instant;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use tarski_core::algebra::{BooleanAlgebra, Clopen, FiniteSet, Word};
use tarski_core::axioms::{
    agrees_at_base, f1_witness, f2_witness, f3_witness, factorize_with, germ_unit, AxiomError, FactorOrder,
    DEFAULT_DEPTH_CAP,
};
use tarski_core::cuntz::{
    act, cylinder_three_cycle, swap_involution, CuntzModel, CuntzSampler, Point, PrefixBijection,
};
use tarski_core::inverse::{Calculus, FiniteModel, Model};
use tarski_core::reconstruction::{beta, reconstruct, separating_witness, wt_report, GroupIso, ReconstructionError};
use tarski_core::symmetric::{
    enumerate_all, is_fundamental, is_zero_simplifying, zero_simplifying_report, PartialPerm, ProductModel,
    SymmetricModel,
};

pub type Check = Result<String, String>;

pub fn ensure(ok: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(message())
    }
}

pub fn c2() -> CuntzModel {
    CuntzModel::new(2).unwrap()
}

pub fn sym(n: u8) -> SymmetricModel {
    SymmetricModel::new(n).unwrap()
}

// ---------------------------------------------------------------------------
// Oracles

/// Membership of each depth-`k` binary word (read as the bits of its index,
/// first letter highest) in the clopen set, from prefix tests alone.
pub fn truth_table(c: &Clopen, k: usize) -> Vec<bool> {
    (0..1usize << k)
        .map(|i| {
            let letters: Vec<u8> = (0..k).map(|j| ((i >> (k - 1 - j)) & 1) as u8).collect();
            c.words().iter().any(|w| w.len() <= k && letters[..w.len()] == *w.letters())
        })
        .collect()
}

/// The clopen set whose depth-`k` truth table is `mask`.
pub fn clopen_from_mask(k: usize, mask: &[bool]) -> Clopen {
    let words = (0..1usize << k).filter(|&i| mask[i]).map(|i| {
        let letters = (0..k).map(|j| ((i >> (k - 1 - j)) & 1) as u8).collect();
        Word::new(2, letters).unwrap()
    });
    Clopen::canonicalize(2, words).unwrap()
}

pub fn random_clopen(rng: &mut StdRng, max_depth: usize) -> Clopen {
    let count = rng.gen_range(0..=6);
    let words = (0..count).map(|_| {
        let len = rng.gen_range(0..=max_depth);
        Word::new(2, (0..len).map(|_| rng.gen_range(0..2)).collect()).unwrap()
    });
    Clopen::canonicalize(2, words).unwrap()
}

/// Fixed clopen of a `C_2` element from its action on points: the depth-`k`
/// cylinders whose points `w·0^ω` and `w·1^ω` are both fixed, for `k` longer
/// than every word of `s`.
pub fn fixed_by_action(s: &PrefixBijection) -> Clopen {
    let k = s.pairs().iter().map(|(u, v)| u.len().max(v.len())).max().unwrap_or(0) + 1;
    let words = (0..1usize << k).filter_map(|i| {
        let w = Word::new(2, (0..k).map(|j| ((i >> (k - 1 - j)) & 1) as u8).collect()).unwrap();
        let fixed = (0..2).all(|a| {
            let x = Point::constant_tail(2, &w, a);
            act(s, &x).map(|y| y == x).unwrap_or(false)
        });
        fixed.then_some(w)
    });
    Clopen::canonicalize(2, words).unwrap()
}

/// Natural order on partial permutations as inclusion of graphs.
pub fn graph_leq(s: &PartialPerm, t: &PartialPerm) -> bool {
    s.pairs().all(|(x, y)| t.apply(x) == Some(y))
}

/// Fixed points of a partial permutation read off its graph.
pub fn fixed_by_graph(s: &PartialPerm) -> FiniteSet {
    FiniteSet::from_points(s.n(), s.pairs().filter(|(x, y)| x == y).map(|(x, _)| x)).unwrap()
}

/// A unit of `C_2` supported in the nonzero clopen `e`: a product of swaps
/// and 3-cycles of cylinders refining `e`.
pub fn unit_supported_in(rng: &mut StdRng, e: &Clopen) -> PrefixBijection {
    let mut pieces: Vec<Word> = e.words().to_vec();
    while pieces.len() < 3 || rng.gen_bool(0.3) && pieces.len() < 8 {
        let i = rng.gen_range(0..pieces.len());
        let w = pieces.swap_remove(i);
        pieces.extend(w.children(2));
    }
    let mut g = PrefixBijection::identity(2);
    for _ in 0..rng.gen_range(1..=4) {
        let chosen: Vec<&Word> = pieces.choose_multiple(rng, 3).collect();
        let factor = if rng.gen_bool(0.5) {
            swap_involution(2, chosen[0], chosen[1]).unwrap()
        } else {
            cylinder_three_cycle(2, chosen[0], chosen[1], chosen[2]).unwrap()
        };
        g = g.compose(&factor).unwrap();
    }
    g
}

// ---------------------------------------------------------------------------
// Laws

pub fn inverse_axioms<M: Model>(m: &M, s: &M::Elem, t: &M::Elem, u: &M::Elem) -> Result<(), String> {
    let si = m.inv(s);
    ensure(m.mul(&m.mul(s, &si), s) == *s, || format!("s s⁻¹ s ≠ s for {s:?}"))?;
    ensure(m.mul(&m.mul(&si, s), &si) == si, || format!("s⁻¹ s s⁻¹ ≠ s⁻¹ for {s:?}"))?;
    ensure(m.mul(&m.mul(s, t), u) == m.mul(s, &m.mul(t, u)), || format!("associativity fails at {s:?}, {t:?}, {u:?}"))?;
    let (e, f) = (m.dom(s), m.ran(t));
    ensure(m.mul(&e, &f) == m.mul(&f, &e), || format!("idempotents of {s:?}, {t:?} do not commute"))
}

pub fn fixed_point_laws<M: Model>(m: &M, a: &M::Elem, b: &M::Elem, e: &M::Elem) -> Result<(), String> {
    ensure(m.phi(&m.mul(a, e)) == m.mul(&m.phi(a), e), || format!("φ(ae) ≠ φ(a)e for {a:?}, {e:?}"))?;
    ensure(m.phi(&m.mul(e, a)) == m.mul(e, &m.phi(a)), || format!("φ(ea) ≠ eφ(a) for {a:?}, {e:?}"))?;
    let meet = m.meet(a, b);
    ensure(m.phi(&meet) == m.mul(&m.phi(a), &m.phi(b)), || format!("φ(a∧b) ≠ φ(a)φ(b) for {a:?}, {b:?}"))?;
    if m.is_infinitesimal(a) {
        ensure(m.is_zero(&m.phi(a)), || format!("φ of infinitesimal {a:?} is nonzero"))?;
    }
    if m.compatible(a, b) {
        let join = m.join(&[a.clone(), b.clone()]).map_err(|err| err.to_string())?;
        let phis = m.join(&[m.phi(a), m.phi(b)]).map_err(|err| err.to_string())?;
        ensure(m.phi(&join) == phis, || format!("φ(a∨b) ≠ φ(a)∨φ(b) for {a:?}, {b:?}"))?;
    }
    Ok(())
}

pub fn unit_support_laws<M: Model>(m: &M, g: &M::Elem, h: &M::Elem) -> Result<(), String> {
    let alg = m.algebra();
    let (sg, sh) = (m.sigma_idem(g), m.sigma_idem(h));
    ensure(alg.is_zero(&sg) == (*g == m.one()), || format!("σ(g) = 0 ⇎ g = 1 for {g:?}"))?;
    ensure(m.sigma_idem(&m.inv(g)) == sg, || format!("σ(g⁻¹) ≠ σ(g) for {g:?}"))?;
    ensure(alg.leq(&m.sigma_idem(&m.mul(g, h)), &alg.join(&sg, &sh)), || format!("σ(gh) ≰ σ(g)∨σ(h) for {g:?}, {h:?}"))?;
    let conj_support = m.sigma_idem(&m.conjugate(g, h));
    let moved = m.extract(&m.conjugate(g, &m.embed(&sh))).unwrap();
    ensure(conj_support == moved, || format!("σ(ghg⁻¹) ≠ gσ(h)g⁻¹ for {g:?}, {h:?}"))?;
    ensure(alg.leq(&m.sigma_idem(&m.mul(g, g)), &sg), || format!("σ(g²) ≰ σ(g) for {g:?}"))?;
    if alg.disjoint(&sg, &sh) {
        ensure(m.mul(g, h) == m.mul(h, g), || format!("disjoint supports but [g,h] ≠ 1 for {g:?}, {h:?}"))?;
    }
    Ok(())
}

pub fn orthogonal_decomposition<M: Model>(m: &M, s: &M::Elem) -> Result<(), String> {
    let phi = m.phi(s);
    let moving = m.mul(s, &m.sigma(s));
    ensure(m.orthogonal(&phi, &moving), || format!("φ(s) and sσ(s) are not orthogonal for {s:?}"))?;
    ensure(m.is_zero(&m.phi(&moving)), || format!("φ(sσ(s)) ≠ 0 for {s:?}"))?;
    let join = m.join(&[phi, moving]).map_err(|err| err.to_string())?;
    ensure(join == *s, || format!("φ(s) ∨ sσ(s) ≠ s for {s:?}"))
}

pub fn three_cycle_identities<M: Model>(m: &M, e: &tarski_core::inverse::Idem<M>) -> Result<(), String>
where
    M: tarski_core::axioms::PieceModel,
{
    let w = f3_witness(m, e).map_err(|err| format!("f3_witness({e:?}): {err}"))?;
    ensure(m.pow(&w.cycle, 3) == m.one() && w.cycle != m.one(), || format!("g³ ≠ 1 for {e:?}"))?;
    ensure(m.commutator(&w.h, &w.k).unwrap() == w.cycle, || format!("g ≠ [h,k] for {e:?}"))?;
    ensure(m.pow(&m.mul(&w.h, &w.k), 2) == w.cycle, || format!("g ≠ (hk)² for {e:?}"))?;
    ensure(m.algebra().leq(&m.sigma_idem(&w.cycle), e), || format!("σ(g) ≰ e for {e:?}"))?;
    ensure(m.dom_idem(&w.b) == m.ran_idem(&w.a), || format!("dom(b) ≠ ran(a) for {e:?}"))?;
    ensure(m.is_zero(&m.pow(&m.mul(&w.b, &w.a), 2)), || format!("(ba)² ≠ 0 for {e:?}"))
}

// ---------------------------------------------------------------------------
// Criteria

pub fn clopen_oracle(samples: usize) -> Check {
    let mut rng = StdRng::seed_from_u64(1);
    let k = 8;
    for _ in 0..samples {
        let (a, b) = (random_clopen(&mut rng, k), random_clopen(&mut rng, k));
        let (ta, tb) = (truth_table(&a, k), truth_table(&b, k));
        let or: Vec<bool> = ta.iter().zip(&tb).map(|(x, y)| *x || *y).collect();
        let and: Vec<bool> = ta.iter().zip(&tb).map(|(x, y)| *x && *y).collect();
        let not: Vec<bool> = ta.iter().map(|x| !x).collect();
        let subset = ta.iter().zip(&tb).all(|(x, y)| !*x || *y);
        ensure(truth_table(&a.union(&b).unwrap(), k) == or, || format!("union of {a} and {b}"))?;
        ensure(truth_table(&a.intersect(&b).unwrap(), k) == and, || format!("intersection of {a} and {b}"))?;
        ensure(truth_table(&a.complement(), k) == not, || format!("complement of {a}"))?;
        ensure(a.leq(&b).unwrap() == subset, || format!("order between {a} and {b}"))?;
    }
    // Every depth-4 clopen set: canonical form, complement and both orders
    // against each depth-4 cylinder union of at most two words.
    let k = 4;
    let partners: Vec<Clopen> = (0..16usize)
        .flat_map(|i| (i..16).map(move |j| (i, j)))
        .map(|(i, j)| clopen_from_mask(k, &(0..16).map(|x| x == i || x == j).collect::<Vec<_>>()))
        .collect();
    for bits in 0u32..1 << 16 {
        let mask: Vec<bool> = (0..16).map(|i| bits >> i & 1 == 1).collect();
        let a = clopen_from_mask(k, &mask);
        ensure(truth_table(&a, k) == mask, || format!("canonical form of mask {bits:#x}"))?;
        let not: Vec<bool> = mask.iter().map(|x| !x).collect();
        ensure(truth_table(&a.complement(), k) == not, || format!("complement of {a}"))?;
        for b in partners.iter().step_by(7) {
            let tb = truth_table(b, k);
            let or: Vec<bool> = mask.iter().zip(&tb).map(|(x, y)| *x || *y).collect();
            let and: Vec<bool> = mask.iter().zip(&tb).map(|(x, y)| *x && *y).collect();
            ensure(truth_table(&a.union(b).unwrap(), k) == or, || format!("union of {a} and {b}"))?;
            ensure(truth_table(&a.intersect(b).unwrap(), k) == and, || format!("intersection of {a} and {b}"))?;
            ensure(a.leq(b).unwrap() == mask.iter().zip(&tb).all(|(x, y)| !*x || *y), || format!("{a} ≤ {b}"))?;
            ensure(b.leq(&a).unwrap() == mask.iter().zip(&tb).all(|(x, y)| *x || !*y), || format!("{b} ≤ {a}"))?;
        }
    }
    // All pairs of depth-3 clopen sets.
    let k = 3;
    let all3: Vec<(Vec<bool>, Clopen)> = (0u32..256)
        .map(|bits| {
            let mask: Vec<bool> = (0..8).map(|i| bits >> i & 1 == 1).collect();
            let c = clopen_from_mask(k, &mask);
            (mask, c)
        })
        .collect();
    for (ma, a) in &all3 {
        for (mb, b) in &all3 {
            let or: Vec<bool> = ma.iter().zip(mb).map(|(x, y)| *x || *y).collect();
            ensure(truth_table(&a.union(b).unwrap(), k) == or, || format!("union of {a} and {b}"))?;
            ensure(a.leq(b).unwrap() == ma.iter().zip(mb).all(|(x, y)| !*x || *y), || format!("{a} ≤ {b}"))?;
        }
    }
    Ok(format!("{samples} random depth-8 pairs, all 65536 depth-4 sets, all depth-3 pairs"))
}

pub fn inverse_and_fixed_point_laws(samples: usize) -> Check {
    let m = c2();
    let mut sampler = CuntzSampler::new(2, 2).unwrap();
    for _ in 0..samples {
        let (s, t, u) = (sampler.element(), sampler.element(), sampler.element());
        inverse_axioms(&m, &s, &t, &u)?;
        ensure(m.phi_raw(&s) == fixed_by_action(&s), || format!("φ({s}) disagrees with the action"))?;
        let e = m.embed(&sampler.clopen());
        let (f, g) = (sampler.clopen(), sampler.clopen());
        let (a, b) = (m.mul(&s, &m.embed(&f)), m.mul(&s, &m.embed(&g)));
        fixed_point_laws(&m, &a, &b, &e)?;
        fixed_point_laws(&m, &s, &t, &e)?;
    }
    let i3 = sym(3);
    let all = enumerate_all(3);
    ensure(all.len() == 34, || format!("I_3 has {} elements", all.len()))?;
    for s in &all {
        ensure(i3.phi_raw(s) == fixed_by_graph(s), || format!("φ({s}) disagrees with the graph"))?;
        for t in &all {
            for u in &all {
                inverse_axioms(&i3, s, t, u)?;
            }
            for e in i3.idempotents() {
                fixed_point_laws(&i3, s, t, &e)?;
            }
        }
    }
    Ok(format!("{samples} C_2 samples, all of I_3"))
}

pub fn meet_is_glb() -> Check {
    let m = sym(3);
    let all = enumerate_all(3);
    for a in &all {
        for b in &all {
            let below: Vec<&PartialPerm> = all.iter().filter(|c| graph_leq(c, a) && graph_leq(c, b)).collect();
            let glb = below.iter().find(|c| below.iter().all(|d| graph_leq(d, c))).expect("a greatest lower bound");
            ensure(m.meet(a, b) == **glb, || format!("meet of {a} and {b}"))?;
        }
    }
    Ok("34×34 pairs of I_3".into())
}

pub fn unit_support_calculus(samples: usize) -> Check {
    let m = sym(4);
    let units = m.units();
    for g in &units {
        for h in &units {
            unit_support_laws(&m, g, h)?;
        }
    }
    let c = c2();
    let mut sampler = CuntzSampler::new(2, 4).unwrap();
    for i in 0..samples {
        let g = sampler.unit();
        // Every fourth pair has disjoint supports so the last law is exercised.
        let h = if i % 4 == 0 && !c.sigma_idem(&g).is_one() {
            let mut rng = StdRng::seed_from_u64(i as u64);
            unit_supported_in(&mut rng, &c.phi_raw(&g))
        } else {
            sampler.unit()
        };
        unit_support_laws(&c, &g, &h)?;
    }
    Ok(format!("{} S_4 pairs, {samples} V_2 pairs", units.len() * units.len()))
}

pub fn orthogonal_decompositions(samples: usize) -> Check {
    let m = sym(4);
    for s in enumerate_all(4) {
        orthogonal_decomposition(&m, &s)?;
    }
    let c = c2();
    let mut sampler = CuntzSampler::new(2, 5).unwrap();
    for _ in 0..samples {
        orthogonal_decomposition(&c, &sampler.element())?;
    }
    Ok(format!("all 209 of I_4, {samples} C_2 samples"))
}

pub fn three_cycles(samples: usize) -> Check {
    let c = c2();
    let mut sampler = CuntzSampler::new(2, 6).unwrap();
    for _ in 0..samples {
        three_cycle_identities(&c, &sampler.clopen())?;
    }
    let m = sym(4);
    let mut count = 0;
    for e in FiniteSet::all_subsets(4).filter(|e| e.len() >= 3) {
        three_cycle_identities(&m, &e)?;
        count += 1;
    }
    Ok(format!("{samples} C_2 idempotents, {count} idempotents of I_4 with at least 3 points"))
}

pub fn axiom_witnesses(samples: usize) -> Check {
    let c = c2();
    let alg = c.algebra();
    let mut sampler = CuntzSampler::new(2, 7).unwrap();
    for _ in 0..samples {
        let e = sampler.clopen();
        let w = f1_witness(&c, &e).map_err(|err| format!("f1_witness({e}): {err}"))?;
        let supports: Vec<Clopen> = w.involutions.iter().map(|t| c.sigma_idem(t)).collect();
        ensure(alg.join_all(&supports) == e, || format!("F1 supports do not join to {e}"))?;
        ensure(w.involutions.iter().all(|t| c.mul(t, t) == c.one() && *t != c.one()), || format!("F1 at {e}"))?;
        f3_witness(&c, &e).map_err(|err| format!("f3_witness({e}): {err}"))?;
        three_cycle_identities(&c, &e)?;

        let t = sampler.involution();
        let support = c.sigma_idem(&t);
        let e = loop {
            let e = alg.meet(&sampler.clopen(), &support);
            if !e.is_zero() {
                break e;
            }
        };
        let w = f2_witness(&c, &t, &e, DEFAULT_DEPTH_CAP).map_err(|err| format!("f2_witness({t}, {e}): {err}"))?;
        let g = &w.involution;
        let te = c.mul(&t, &c.embed(&e));
        ensure(alg.leq(&c.sigma_idem(g), &c.extent_idem(&te)), || format!("F2: σ(g) ≰ 𝐞(te) at {t}, {e}"))?;
        ensure(alg.leq(&c.sigma_idem(g), &c.phi_raw(&c.mul(&t, g))), || format!("F2: σ(g) ≰ φ(tg) at {t}, {e}"))?;
    }
    let m = sym(3);
    for x in 0..3 {
        let e = FiniteSet::singleton(3, x).unwrap();
        ensure(matches!(f1_witness(&m, &e), Err(AxiomError::AtomObstruction { .. })), || format!("F1 at {e} in I_3"))?;
        ensure(matches!(f3_witness(&m, &e), Err(AxiomError::AtomObstruction { .. })), || format!("F3 at {e} in I_3"))?;
    }
    Ok(format!("{samples} inputs each for F1, F2, F3 in C_2; obstructions at the points of I_3"))
}

pub fn factorization_round_trip<M>(m: &M, s: &M::Elem) -> Result<(), String>
where
    M: tarski_core::axioms::Factorizable,
{
    for order in [FactorOrder::Whole, FactorOrder::Pairwise] {
        let f = factorize_with(m, s, order).map_err(|err| format!("factorizing {s:?}: {err}"))?;
        ensure(f.pieces.iter().all(|(g, _)| m.is_unit(g)), || format!("non-unit factor for {s:?}"))?;
        let parts: Vec<M::Elem> = f.pieces.iter().map(|(g, e)| m.mul(g, &m.embed(e))).collect();
        for (i, p) in parts.iter().enumerate() {
            for q in &parts[i + 1..] {
                ensure(m.compatible(p, q), || format!("incompatible pieces for {s:?}"))?;
            }
        }
        ensure(m.join(&parts).map_err(|err| err.to_string())? == *s, || format!("pieces of {s:?} do not join back"))?;
    }
    Ok(())
}

pub fn factorizations(samples: usize) -> Check {
    let c = c2();
    let mut sampler = CuntzSampler::new(2, 8).unwrap();
    for _ in 0..samples {
        factorization_round_trip(&c, &sampler.nonzero_element())?;
    }
    let m = sym(4);
    for s in enumerate_all(4).into_iter().filter(|s| !s.is_empty()) {
        factorization_round_trip(&m, &s)?;
    }
    Ok(format!("{samples} C_2 elements, all nonzero elements of I_4, both orders"))
}

pub fn centralizer_experiment() -> Check {
    let start = Instant::now();
    let mut lines = Vec::new();
    for n in [4u8, 5] {
        let m = sym(n);
        let involutions: Vec<PartialPerm> =
            m.units().into_iter().filter(|t| *t != m.one() && m.mul(t, t) == m.one()).collect();
        let mut agree = 0;
        for t in &involutions {
            let report = wt_report(&m, t).map_err(|err| err.to_string())?;
            if report.agrees {
                agree += 1;
            }
        }
        lines.push(format!("S_{n}: W_t = U(σ(t)) for {agree}/{} involutions", involutions.len()));
    }
    let elapsed = start.elapsed();
    ensure(elapsed.as_secs() < 60, || format!("took {elapsed:?}"))?;
    Ok(format!("{} in {:.1?}", lines.join("; "), elapsed))
}

pub fn support_recovery(pairs: usize, per_pair: usize) -> Check {
    let c = c2();
    let alg = c.algebra();
    let mut sampler = CuntzSampler::new(2, 10).unwrap();
    let mut rng = StdRng::seed_from_u64(10);
    let mut done = 0;
    while done < pairs {
        let t = sampler.involution();
        let (support, fixed) = (c.sigma_idem(&t), c.phi_raw(&t));
        if fixed.is_zero() {
            continue;
        }
        let g = unit_supported_in(&mut rng, &support);
        ensure(alg.leq(&c.sigma_idem(&g), &support), || format!("constructed {g} leaves σ({t})"))?;
        for _ in 0..per_pair {
            let e = loop {
                let e = alg.meet(&sampler.clopen(), &fixed);
                if !e.is_zero() {
                    break e;
                }
            };
            let cycle = f3_witness(&c, &e).map_err(|err| err.to_string())?.cycle;
            let h = unit_supported_in(&mut rng, &fixed);
            let cycle = c.conjugate(&h, &cycle);
            let b = c.mul(&cycle, &cycle);
            ensure(c.mul(&g, &b) == c.mul(&b, &g), || format!("{g} does not commute with {b} ∈ S_{t}"))?;
        }
        done += 1;
    }
    let mut separated = 0;
    while separated < pairs {
        let (g, t) = (sampler.nontrivial_unit(), sampler.involution());
        if alg.leq(&c.sigma_idem(&g), &c.sigma_idem(&t)) {
            continue;
        }
        let w = separating_witness(&c, &g, &t, DEFAULT_DEPTH_CAP).map_err(|err| format!("separating {g} from {t}: {err}"))?;
        ensure(c.commutator(&g, &w.b).unwrap() != c.one(), || format!("[{g}, {}] = 1", w.b))?;
        ensure(c.mul(&w.b, &t) == c.mul(&t, &w.b), || format!("{} does not commute with {t}", w.b))?;
        separated += 1;
    }
    Ok(format!("{pairs} pairs inside σ(t) × {per_pair} elements of S_t, {pairs} pairs separated"))
}

pub fn random_permutation(rng: &mut StdRng, n: u8) -> PartialPerm {
    let mut images: Vec<u8> = (0..n).collect();
    images.shuffle(rng);
    PartialPerm::from_images(&images).unwrap()
}

pub fn reconstruction(per_n: usize) -> Check {
    let mut rng = StdRng::seed_from_u64(11);
    for n in [3u8, 4, 5] {
        let m = sym(n);
        for _ in 0..per_n {
            let pi = random_permutation(&mut rng, n);
            let alpha = GroupIso::conjugation(m, pi);
            let table = reconstruct(&m, &m, &alpha).map_err(|err| format!("n = {n}, π = {pi}: {err}"))?;
            let all = enumerate_all(n);
            ensure(table.len() == all.len(), || format!("table size for n = {n}"))?;
            for s in &all {
                let expected = m.conjugate(&pi, s);
                ensure(table.get(s) == Some(&expected), || format!("Θ({s}) for π = {pi}"))?;
            }
        }
    }
    let m = sym(6);
    match reconstruct(&m, &m, &GroupIso::s6_outer()) {
        Err(ReconstructionError::SkeletonNotUltrafilter { .. }) => {}
        other => return Err(format!("S_6 outer automorphism gave {other:?}")),
    }
    Ok(format!("{per_n} inner automorphisms each for n = 3, 4, 5; S_6 outer diagnosed"))
}

pub fn beta_equivariance() -> Check {
    let m = sym(4);
    let units = m.units();
    for pi in &units {
        let alpha = GroupIso::conjugation(m, *pi);
        let images: Vec<u8> = (0..4).map(|x| beta(&m, &m, &alpha, x)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
        for g in &units {
            let a = alpha.forward(g);
            for x in 0..4 {
                let moved = g.apply(x).unwrap();
                ensure(images[moved as usize] == a.apply(images[x as usize]).unwrap(), || {
                    format!("β at g = {g}, F = {{{x}}}, π = {pi}")
                })?;
            }
        }
    }
    Ok("all g ∈ S_4, all points, all 24 inner automorphisms".into())
}

pub fn germ_units(samples: usize) -> Check {
    let mut sampler = CuntzSampler::new(2, 13).unwrap();
    for _ in 0..samples {
        let a = sampler.germ();
        let g = germ_unit(&a);
        ensure(g.is_unit(), || format!("{g} is not a unit"))?;
        let at_base = act(&g, a.base()).map_err(|e| e.to_string())?;
        ensure(at_base == a.target(), || format!("{g} moves {} to {at_base}, not {}", a.base(), a.target()))?;
        ensure(agrees_at_base(&g, &a), || format!("germ of {g} at {} differs from {a:?}", a.base()))?;
    }
    Ok(format!("{samples} random germs of C_2"))
}

pub fn simplicity() -> Check {
    for n in [3u8, 4] {
        let m = sym(n);
        ensure(is_fundamental(&m), || format!("I_{n} is not fundamental"))?;
        ensure(is_zero_simplifying(&m), || format!("I_{n} is not 0-simplifying"))?;
    }
    let product = ProductModel::new(sym(2), sym(2));
    let report = zero_simplifying_report(&product);
    ensure(!report.holds, || "I_2 × I_2 reported 0-simplifying".into())?;
    let witness = report.obstruction.ok_or("no ideal witness for I_2 × I_2")?;
    ensure(witness.verified, || "ideal witness for I_2 × I_2 failed verification".into())?;
    Ok(format!("I_3, I_4 simple; I_2 × I_2 has an ideal of {} elements", witness.ideal.len()))
}
