use std::collections::BTreeSet;

use num_traits::Zero;
use serde_json::json;
use verma_core::exactla::intersect;
use verma_core::ideals::{rho_u_kernel_check, IdealEngine};
use verma_core::int;
use verma_core::pbw::PbwAlgebra;
use verma_core::quotient::{coset_representatives, raising_words, QuotientEngine, QuotientTruncation};
use verma_core::rootdata::{ParabolicCharacter, RootDatum, Weight};
use verma_core::verma::build_module;
use verma_core::{binomial, Result};

use crate::commands::Failure;
use crate::report::Report;

pub const MAX_N: usize = 3;
pub const MAX_LEVEL: u32 = 4;

struct Checker<'a> {
    report: &'a mut Report,
}

impl Checker<'_> {
    fn check(&mut self, name: &str, level: u32, outcome: Result<bool>) {
        let (passed, detail) = match outcome {
            Ok(p) => (p, None),
            Err(e) => (false, Some(e.to_string())),
        };
        self.report.push(json!({ "level": level, "invariant": name, "passed": passed }));
        if !passed {
            let mut msg = format!("{name} fails at level {level}");
            if let Some(d) = detail {
                msg.push_str(&format!(": {d}"));
            }
            self.report.note(msg.clone());
            self.report.violations.push(msg);
        }
    }
}

pub fn run(pc: &ParabolicCharacter, level: u32, report: &mut Report) -> std::result::Result<(), Failure> {
    if pc.n() > MAX_N || level > MAX_LEVEL {
        return Err(Failure::Invalid(format!(
            "verify runs at n <= {MAX_N} and level <= {MAX_LEVEL}"
        )));
    }
    let mut c = Checker { report };
    let module = build_module(pc, level)?;
    let alg = PbwAlgebra::new(pc.n())?;
    let gens = RootDatum::new(pc.n())?.generators();
    let mut ideals = IdealEngine::new(pc)?;
    let mut borel = QuotientEngine::new(&pc.borel_restriction())?;
    let full_flag = pc.is_full_flag();
    let dominant = pc.lambda().is_dominant_integral();
    let mut previous: Option<QuotientTruncation> = None;
    let mut seen_depths = BTreeSet::new();

    for l in 0..=level {
        let dim_m = module.dim_at(l);
        c.check("module.dimension", l, Ok(dim_m == binomial(pc.m() + l as usize, l as usize)));
        let fresh: Vec<usize> = (0..dim_m)
            .filter(|&k| module.basis()[k].iter().sum::<u32>() == l)
            .collect();
        c.check("module.axioms", l, axioms_hold(&module, &alg, &gens, &fresh));
        c.check("module.weight_grading", l, weights_are_diagonal(&module, &fresh));

        let q = ideals.quotient_engine().truncation(l)?;
        let ch = ideals.char_ideal(l);
        let ann = ideals.ann_from_quotient(l, &q);
        c.check("ideals.char_dimension", l, ch.as_ref().map(|_| true).map_err(Clone::clone));
        if let (Ok(ch), Ok(ann)) = (&ch, &ann) {
            c.check("ideals.char_in_ann", l, ch.subspace.is_subspace_of(&ann.subspace));
            c.check("ideals.ann_minus_char_is_k", l, Ok(ann.dim() - ch.dim() == q.dim_k()));
            c.check(
                "quotient.ledger",
                l,
                Ok(ann.ambient_dim() == ann.dim() + q.dim_l && q.dim_m == q.dim_k() + q.dim_l),
            );
            if full_flag {
                c.check("ideals.i_v_equals_char", l, ideals.i_v(l).map(|iv| iv.subspace == ch.subspace));
            }
            if full_flag && dominant {
                let via = ideals.ann_via_generators(l);
                c.check("ideals.generators_describe_ann", l, via.map(|v| v.subspace == ann.subspace));
            }
            if l < level {
                c.check("ideals.left_ideal", l, left_ideal(&ideals, ch, l));
            }
        } else {
            c.check("ideals.ann_from_quotient", l, ann.map(|_| true));
        }
        c.check(
            "ideals.rho_kernel_hyperplane",
            l,
            rho_u_kernel_check(pc, l).map(|r| r.passed()),
        );

        c.check("quotient.top_line", l, Ok(q.weight_dims.get(pc.lambda()) == Some(&1)));
        if let Some(p) = &previous {
            c.check(
                "quotient.k_nested",
                l,
                p.k.embed(q.dim_m).and_then(|k| k.is_subspace_of(&q.k)),
            );
            c.check("quotient.dim_l_monotone", l, Ok(p.dim_l <= q.dim_l));
        }
        c.check(
            "quotient.parabolic_vs_borel",
            l,
            borel.truncation(l).map(|b| b.dim_l == q.dim_l),
        );
        let depths: Vec<Vec<u32>> = fresh
            .iter()
            .map(|&k| ideals.quotient_engine().module().depth_of(&module.basis()[k]))
            .filter(|d| seen_depths.insert(d.clone()))
            .collect();
        c.check("quotient.oracles_agree", l, oracles_agree(pc, &depths));
        c.check("quotient.simplicity_probe", l, simplicity(ideals.quotient_engine(), &q));
        previous = Some(q);
    }
    Ok(())
}

fn axioms_hold(
    module: &verma_core::verma::TruncatedModule,
    alg: &PbwAlgebra,
    gens: &[verma_core::rootdata::Generator],
    indices: &[usize],
) -> Result<bool> {
    let m = module.module();
    for &k in indices {
        let v = module.basis_vector(k);
        for (a, &x) in gens.iter().enumerate() {
            for &y in &gens[a + 1..] {
                let br = alg.commutator(&alg.generator(x)?, &alg.generator(y)?)?;
                let lhs = m.act(alg, &br, &v)?;
                let mut rhs = m.act_generator(x, &m.act_generator(y, &v)?)?;
                rhs.add_scaled(&m.act_generator(y, &m.act_generator(x, &v)?)?, &int(-1))?;
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn weights_are_diagonal(module: &verma_core::verma::TruncatedModule, indices: &[usize]) -> Result<bool> {
    let m = module.module();
    let n = m.pc().n();
    for &k in indices {
        let v = module.basis_vector(k);
        let w: Weight = m.weight_of(&module.basis()[k])?;
        for t in 1..n {
            let h = m.act_generator(verma_core::rootdata::Generator::Cartan(t), &v)?;
            if h != v.scale(w.eval_cartan(t)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn left_ideal(ideals: &IdealEngine, ch: &verma_core::ideals::IdealTruncation, l: u32) -> Result<bool> {
    let next = ideals.char_ideal(l + 1)?;
    let alg = ideals.algebra();
    for a in ch.elements() {
        for g in alg.generators() {
            if !next.contains(&alg.multiply(&alg.generator(*g)?, &a)?)? {
                return Ok(false);
            }
        }
    }
    Ok(intersect(&ch.subspace.embed(next.ambient_dim())?, &next.subspace)?.dim() == ch.dim())
}

fn oracles_agree(pc: &ParabolicCharacter, depths: &[Vec<u32>]) -> Result<bool> {
    use verma_core::quotient::{shapovalov_radical_weightspace, submodule_membership_weightspace};
    for d in depths {
        let mu = pc.lambda() - &Weight::from_simple_coords(pc.n(), d);
        if submodule_membership_weightspace(pc, &mu)? != shapovalov_radical_weightspace(pc, &mu)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn simplicity(engine: &mut QuotientEngine, q: &QuotientTruncation) -> Result<bool> {
    let module = engine.module();
    for rep in coset_representatives(q)? {
        let p = rep.terms().keys().next().expect("basis vector");
        let words = raising_words(module.pc().n(), &module.depth_of(p))?;
        let mut reaches = false;
        for w in &words {
            if !module.act_word(w, &rep)?.generator_component().is_zero() {
                reaches = true;
                break;
            }
        }
        if !reaches {
            return Ok(false);
        }
    }
    Ok(true)
}
