use std::path::Path;

use serde_json::{json, Value as Json};

use tarski_core::algebra::{BooleanAlgebra, Clopen};
use tarski_core::axioms::{f1_witness, f2_witness, f3_witness, piecewise_factorize, Factorizable, PieceModel};
use tarski_core::cuntz::{CuntzModel, CuntzSampler};
use tarski_core::inverse::{Calculus, Idem, Model};
use tarski_core::reconstruction::{reconstruct, Gamma, GroupIso, S6_OUTER};
use tarski_core::symmetric::{germ_groupoid, structure_space, PartialPerm, SymmetricModel};

use crate::eval::Evaluator;
use crate::output::{CliError, Report};
use crate::syntax::{ModelSpec, Pair, Syntax};

fn sym(n: u8) -> SymmetricModel {
    SymmetricModel::new(n).expect("size checked when parsing the model")
}

fn cuntz(n: u8) -> CuntzModel {
    CuntzModel::new(n).expect("arity checked when parsing the model")
}

fn pair(a: u8, b: u8) -> Pair {
    Pair::new(sym(a), sym(b))
}

pub fn eval(spec: ModelSpec, program: &str) -> Result<Report, CliError> {
    match spec {
        ModelSpec::Cuntz(n) => eval_in(&cuntz(n), program),
        ModelSpec::Sym(n) => eval_in(&sym(n), program),
        ModelSpec::Prod(a, b) => eval_in(&pair(a, b), program),
    }
}

fn eval_in<M: Syntax>(model: &M, program: &str) -> Result<Report, CliError> {
    let outcomes = Evaluator::new(model).run(program)?;
    let mut lines = Vec::new();
    let mut docs = Vec::new();
    for o in &outcomes {
        let shown = o.value.show(model);
        lines.push(match &o.binding {
            Some(name) => format!("{name} = {shown}"),
            None => shown.clone(),
        });
        let value = match o.value {
            crate::eval::Value::Bool(b) => Json::Bool(b),
            _ => Json::String(shown),
        };
        let mut doc = json!({ "type": o.value.kind(), "value": value });
        if let Some(name) = &o.binding {
            doc["name"] = Json::String(name.clone());
        }
        docs.push(doc);
    }
    Ok(Report { lines, json: Json::Array(docs) })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Axiom {
    F1,
    F2,
    F3,
}

/// Inputs for the axiom witnesses after parsing or sampling.
struct AxiomInput<M: Syntax> {
    e: Idem<M>,
    t: Option<M::Elem>,
}

pub fn axioms(
    spec: ModelSpec,
    which: Axiom,
    e: Option<&str>,
    t: Option<&str>,
    seed: u64,
    depth_cap: usize,
) -> Result<Report, CliError> {
    match spec {
        ModelSpec::Cuntz(n) => {
            let m = cuntz(n);
            let input = match e {
                Some(e) => parse_axiom_input(&m, which, e, t)?,
                None => sample_axiom_input(&m, which, t, seed)?,
            };
            axiom_report(&m, which, input, depth_cap)
        }
        ModelSpec::Sym(n) => {
            let m = sym(n);
            let e = e.ok_or_else(|| CliError::usage("--e is required for finite models"))?;
            let input = parse_axiom_input(&m, which, e, t)?;
            axiom_report(&m, which, input, depth_cap)
        }
        ModelSpec::Prod(..) => Err(CliError::usage("axiom witnesses need a cuntzN or symN model")),
    }
}

fn parse_axiom_input<M: Syntax>(model: &M, which: Axiom, e: &str, t: Option<&str>) -> Result<AxiomInput<M>, CliError> {
    let e = model.parse_idempotent(e).map_err(CliError::usage)?;
    let t = match (which, t) {
        (Axiom::F2, Some(t)) => Some(model.parse_element(t).map_err(CliError::usage)?),
        (Axiom::F2, None) => return Err(CliError::usage("f2 needs an involution --t")),
        (_, Some(_)) => return Err(CliError::usage("--t is only used by f2")),
        (_, None) => None,
    };
    Ok(AxiomInput { e, t })
}

/// Samples `e` (and for f2 an involution `t` with `e ≤ σ(t)`) from the seed.
fn sample_axiom_input(
    model: &CuntzModel,
    which: Axiom,
    t: Option<&str>,
    seed: u64,
) -> Result<AxiomInput<CuntzModel>, CliError> {
    let mut sampler = CuntzSampler::new(model.arity(), seed).map_err(CliError::failure)?;
    if which != Axiom::F2 {
        let mut e = sampler.clopen();
        while e.is_zero() {
            e = sampler.clopen();
        }
        return Ok(AxiomInput { e, t: None });
    }
    let t = match t {
        Some(t) => model.parse_element(t).map_err(CliError::usage)?,
        None => sampler.involution(),
    };
    let support = model.sigma_idem(&t);
    if support.is_zero() {
        return Err(CliError::usage("--t must be an involution other than 1"));
    }
    let alg = model.algebra();
    let e = loop {
        let candidate: Clopen = alg.meet(&sampler.clopen(), &support);
        if !candidate.is_zero() {
            break candidate;
        }
    };
    Ok(AxiomInput { e, t: Some(t) })
}

fn axiom_report<M: Syntax + PieceModel>(
    model: &M,
    which: Axiom,
    input: AxiomInput<M>,
    depth_cap: usize,
) -> Result<Report, CliError> {
    let alg = model.algebra();
    let one = model.one();
    let is_involution = |g: &M::Elem| model.mul(g, g) == one && *g != one;
    let e_text = model.show_idempotent(&input.e);
    let show = |s: &M::Elem| model.show_element(s);
    let (mut lines, mut doc, verified) = match which {
        Axiom::F1 => {
            let w = f1_witness(model, &input.e).map_err(CliError::failure)?;
            let supports: Vec<Idem<M>> = w.involutions.iter().map(|g| model.sigma_idem(g)).collect();
            let verified = w.involutions.iter().all(is_involution) && alg.join_all(&supports) == input.e;
            let mut lines = vec![format!("e = {e_text}"), "involutions:".to_string()];
            lines.extend(w.involutions.iter().map(|g| format!("  {}", show(g))));
            let doc = json!({ "e": e_text, "involutions": w.involutions.iter().map(show).collect::<Vec<_>>() });
            (lines, doc, verified)
        }
        Axiom::F2 => {
            let t = input.t.expect("f2 input has t");
            let w = f2_witness(model, &t, &input.e, depth_cap).map_err(CliError::failure)?;
            let g = &w.involution;
            let support = model.sigma_idem(g);
            let te = model.mul(&t, &model.embed(&input.e));
            let verified = is_involution(g)
                && alg.leq(&support, &model.extent_idem(&te))
                && alg.leq(&support, &model.phi_raw(&model.mul(&t, g)));
            let piece = model.show_idempotent(&model.piece_idem(&w.piece));
            let lines = vec![
                format!("t = {}", show(&t)),
                format!("e = {e_text}"),
                format!("piece = {piece}"),
                format!("involution = {}", show(g)),
            ];
            let doc = json!({ "t": show(&t), "e": e_text, "piece": piece, "involution": show(g) });
            (lines, doc, verified)
        }
        Axiom::F3 => {
            let w = f3_witness(model, &input.e).map_err(CliError::failure)?;
            let commutator = model.commutator(&w.h, &w.k).map_err(CliError::failure)?;
            let verified = w.cycle != one
                && model.pow(&w.cycle, 3) == one
                && alg.leq(&model.sigma_idem(&w.cycle), &input.e)
                && commutator == w.cycle;
            let lines = vec![
                format!("e = {e_text}"),
                format!("cycle = {}", show(&w.cycle)),
                format!("h = {}", show(&w.h)),
                format!("k = {}", show(&w.k)),
                format!("b = {}", show(&w.b)),
                format!("a = {}", show(&w.a)),
            ];
            let doc = json!({
                "e": e_text, "cycle": show(&w.cycle), "h": show(&w.h), "k": show(&w.k),
                "b": show(&w.b), "a": show(&w.a),
            });
            (lines, doc, verified)
        }
    };
    lines.push(format!("verified: {verified}"));
    doc["axiom"] = json!(format!("{which:?}").to_lowercase());
    doc["verified"] = json!(verified);
    if !verified {
        return Err(CliError::Failure { name: "PostconditionFailed".into(), message: lines.join("\n") });
    }
    Ok(Report { lines, json: doc })
}

pub fn factorize(spec: ModelSpec, s: Option<&str>, seed: u64) -> Result<Report, CliError> {
    match spec {
        ModelSpec::Cuntz(n) => {
            let m = cuntz(n);
            let s = match s {
                Some(s) => m.parse_element(s).map_err(CliError::usage)?,
                None => CuntzSampler::new(n, seed).map_err(CliError::failure)?.nonzero_element(),
            };
            factor_report(&m, &s)
        }
        ModelSpec::Sym(n) => {
            let m = sym(n);
            let s = s.ok_or_else(|| CliError::usage("--s is required for finite models"))?;
            factor_report(&m, &m.parse_element(s).map_err(CliError::usage)?)
        }
        ModelSpec::Prod(..) => Err(CliError::usage("factorization needs a cuntzN or symN model")),
    }
}

fn factor_report<M: Syntax + Factorizable>(model: &M, s: &M::Elem) -> Result<Report, CliError> {
    let f = piecewise_factorize(model, s).map_err(CliError::failure)?;
    let verified = f.pieces.iter().all(|(g, _)| model.is_unit(g)) && f.recompose(model).as_ref() == Ok(s);
    let shown: Vec<(String, String)> =
        f.pieces.iter().map(|(g, e)| (model.show_element(g), model.show_idempotent(e))).collect();
    let mut lines = vec![format!("s = {}", model.show_element(s))];
    lines.extend(shown.iter().map(|(g, e)| format!("  unit {g} on {e}")));
    lines.push(format!("verified: {verified}"));
    let doc = json!({
        "s": model.show_element(s),
        "pieces": shown.iter().map(|(g, e)| json!({ "unit": g, "idempotent": e })).collect::<Vec<_>>(),
        "verified": verified,
    });
    if !verified {
        return Err(CliError::Failure { name: "PostconditionFailed".into(), message: lines.join("\n") });
    }
    Ok(Report { lines, json: doc })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Duality {
    Points,
    Groupoid,
}

pub fn duality(spec: ModelSpec, which: Duality) -> Result<Report, CliError> {
    let ModelSpec::Sym(n) = spec else {
        return Err(CliError::usage("duality listings need a finite symN model"));
    };
    let m = sym(n);
    match which {
        Duality::Points => {
            let points = structure_space(&m);
            let mut lines = vec![format!("{} points", points.len())];
            lines.extend(points.iter().map(|p| format!("  {}: {} idempotents contain it", p.atom, p.members().len())));
            let doc = json!({
                "points": points.iter().map(|p| json!({ "atom": p.atom, "members": p.members().len() })).collect::<Vec<_>>(),
            });
            Ok(Report { lines, json: doc })
        }
        Duality::Groupoid => {
            let g = germ_groupoid(&m);
            let mut lines = vec![format!("objects: {}", g.objects), format!("arrows: {}", g.arrows.len())];
            lines.extend(g.arrows.iter().map(|a| format!("  {} -> {}", a.source, a.target)));
            lines.push(format!("identities: {}", g.identities().len()));
            lines.push(format!("composable pairs: {}", g.composition_table().len()));
            let doc = json!({
                "objects": g.objects,
                "arrows": g.arrows,
                "identities": g.identities().len(),
                "composable_pairs": g.composition_table().len(),
            });
            Ok(Report { lines, json: doc })
        }
    }
}

/// Resolves `identity`, `inner:<cycles>`, `s6-outer` or a fixture path.
fn resolve_alpha(model: &SymmetricModel, alpha: &str) -> Result<GroupIso<PartialPerm>, CliError> {
    if alpha == "identity" {
        return Ok(GroupIso::identity());
    }
    if let Some(cycles) = alpha.strip_prefix("inner:") {
        let pi = PartialPerm::parse_cycles(model.n(), cycles).map_err(|e| CliError::usage(e.to_string()))?;
        return Ok(GroupIso::conjugation(*model, pi));
    }
    let text = if alpha == "s6-outer" || alpha == "builtin:s6-outer" {
        S6_OUTER.to_string()
    } else {
        std::fs::read_to_string(alpha)
            .map_err(|e| CliError::usage(format!("cannot read group isomorphism '{alpha}': {e}")))?
    };
    let declared = serde_json::from_str::<Json>(&text).ok().and_then(|doc| doc["n"].as_u64());
    if declared != Some(u64::from(model.n())) {
        return Err(CliError::usage(format!("group isomorphism '{alpha}' is not on {} points", model.n())));
    }
    let path = Path::new(alpha);
    GroupIso::from_fixture_json(path.display().to_string(), &text).map_err(CliError::failure)
}

pub fn reconstruction(spec: ModelSpec, alpha: &str) -> Result<Report, CliError> {
    let m = match spec {
        ModelSpec::Sym(n) => sym(n),
        ModelSpec::Cuntz(_) => {
            return Err(CliError::Failure {
                name: "InfiniteGroup".into(),
                message: "the unit group of a cuntz model is infinite; reconstruction runs on symN".into(),
            })
        }
        ModelSpec::Prod(..) => return Err(CliError::usage("reconstruction needs a symN model")),
    };
    let alpha = resolve_alpha(&m, alpha)?;
    alpha.verify_finite(&m).map_err(CliError::failure)?;
    let gamma = Gamma::from_beta(&m, &m, &alpha).map_err(CliError::failure)?;
    let table = reconstruct(&m, &m, &alpha).map_err(CliError::failure)?;
    let points: Vec<u8> = (0..m.n()).map(|x| gamma.point(x)).collect();
    let mut lines = vec![
        format!("alpha: {}", alpha.label()),
        format!(
            "beta: {}",
            points.iter().enumerate().map(|(x, y)| format!("{x}->{y}")).collect::<Vec<_>>().join(", ")
        ),
        format!("elements: {}", table.len()),
    ];
    let changed = table.entries.iter().filter(|(s, t)| s != t).count();
    lines.push(format!("moved by the reconstruction: {changed}"));
    lines.push("verified: true".to_string());
    let doc = json!({
        "alpha": alpha.label(),
        "beta": points,
        "table": table.entries.iter().map(|(s, t)| [s.to_string(), t.to_string()]).collect::<Vec<_>>(),
        "verified": true,
    });
    Ok(Report { lines, json: doc })
}
