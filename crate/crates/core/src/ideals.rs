//! Truncated left ideals of `U(sl_n)`: the character ideal `char_l(rho)`,
//! the ideal `I_l(v)` of a highest weight vector, and the annihilator
//! `ann_l(v)` of the generator of the simple quotient `L(rho)`.
//!
//! Every ideal is stored as a canonical subspace of `U_l` in the PBW basis
//! of the global generator order, enumerated degree ascending.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Pow, Zero};

use crate::exactla::{kernel_sparse, EchelonBuilder, SparseVec, TruncatedSubspace};
use crate::pbw::{Monomial, PbwAlgebra, Selector, UeaElement};
use crate::quotient::{QuotientEngine, QuotientTruncation};
use crate::rootdata::{Generator, ParabolicCharacter, Weight};
use crate::verma::ModuleVector;
use crate::{Error, Rational, Result};

/// A left ideal intersected with `U_l(g)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealTruncation {
    pub pc: ParabolicCharacter,
    pub level: u32,
    /// PBW monomials of degree at most `level`.
    pub basis: Vec<Monomial>,
    pub subspace: TruncatedSubspace,
}

impl IdealTruncation {
    pub fn dim(&self) -> usize {
        self.subspace.dim()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of `a`; fails if `a` has terms above the level.
    pub fn coordinates(&self, a: &UeaElement) -> Result<SparseVec> {
        coordinates(&index_of(&self.basis), a, self.level)
    }

    pub fn element(&self, v: &SparseVec) -> UeaElement {
        let mut out = UeaElement::zero();
        for (k, c) in v {
            out.add_term(self.basis[*k].clone(), c.clone());
        }
        out
    }

    pub fn contains(&self, a: &UeaElement) -> Result<bool> {
        Ok(self.subspace.contains_vector(&self.coordinates(a)?))
    }

    /// The canonical basis of the ideal as algebra elements.
    pub fn elements(&self) -> Vec<UeaElement> {
        self.subspace.rows().iter().map(|r| self.element(r)).collect()
    }
}

fn index_of(basis: &[Monomial]) -> BTreeMap<Monomial, usize> {
    basis.iter().enumerate().map(|(k, m)| (m.clone(), k)).collect()
}

fn coordinates(index: &BTreeMap<Monomial, usize>, a: &UeaElement, level: u32) -> Result<SparseVec> {
    let mut out: SparseVec = a
        .terms()
        .iter()
        .map(|(m, c)| {
            index
                .get(m)
                .map(|&k| (k, c.clone()))
                .ok_or_else(|| Error::invalid(format!("element has degree above level {level}")))
        })
        .collect::<Result<_>>()?;
    out.sort_by_key(|(k, _)| *k);
    Ok(out)
}

/// Shared state for the ideal computations of one character: the algebra
/// in the global order and the quotient engine (with its module memo).
#[derive(Debug)]
pub struct IdealEngine {
    algebra: PbwAlgebra,
    quotient: QuotientEngine,
}

impl IdealEngine {
    pub fn new(pc: &ParabolicCharacter) -> Result<Self> {
        Ok(IdealEngine {
            algebra: PbwAlgebra::new(pc.n())?,
            quotient: QuotientEngine::new(pc)?,
        })
    }

    pub fn pc(&self) -> &ParabolicCharacter {
        self.quotient.pc()
    }

    pub fn algebra(&self) -> &PbwAlgebra {
        &self.algebra
    }

    pub fn quotient_engine(&mut self) -> &mut QuotientEngine {
        &mut self.quotient
    }

    pub fn basis(&self, l: u32) -> Vec<Monomial> {
        self.algebra.enumerate_pbw(l, Selector::All).expect("all generators")
    }

    /// Span of `u * g` over pairs `(g, d)` and PBW monomials `u` with
    /// `deg u <= l - d`, where `d` is the degree of `g`.
    fn span_of_products(&self, l: u32, gens: &[(UeaElement, u32)]) -> Result<IdealTruncation> {
        let basis = self.basis(l);
        let index = index_of(&basis);
        let mut builder = EchelonBuilder::new(basis.len());
        for (g, d) in gens {
            if *d > l {
                continue;
            }
            for u in basis.iter().take_while(|u| u.degree() + d <= l) {
                let product = self.algebra.monomial_times(u, g);
                builder.insert(coordinates(&index, &product, l)?)?;
            }
        }
        Ok(IdealTruncation {
            pc: self.pc().clone(),
            level: l,
            basis,
            subspace: builder.finish(),
        })
    }

    /// `x - rho(x)` for `x` in the Chevalley basis of `p`.
    fn character_generators(&self) -> Result<Vec<(UeaElement, u32)>> {
        let pc = self.pc();
        pc.parabolic_generators()
            .into_iter()
            .map(|x| {
                let mut g = self.algebra.generator(x)?;
                g.add_term(Monomial::one(self.algebra.dim()), -pc.rho_of_generator(x)?);
                Ok((g, 1))
            })
            .collect()
    }

    /// `char_l(rho)`, checked against `dim U_l - dim M_l`.
    pub fn char_ideal(&self, l: u32) -> Result<IdealTruncation> {
        let ideal = self.span_of_products(l, &self.character_generators()?)?;
        let expected = ideal.ambient_dim() - crate::binomial(self.pc().m() + l as usize, l as usize);
        if ideal.dim() != expected {
            return Err(Error::Invariant(format!(
                "dim char_{l} = {}, expected dim U_l - dim M_l = {expected}",
                ideal.dim()
            )));
        }
        Ok(ideal)
    }

    /// `I_l(v)` for the highest weight of this character.
    pub fn i_v(&self, l: u32) -> Result<IdealTruncation> {
        self.span_of_products(l, &self.highest_weight_generators()?)
    }

    fn highest_weight_generators(&self) -> Result<Vec<(UeaElement, u32)>> {
        let lambda = self.pc().lambda();
        let datum = self.algebra.datum();
        let mut gens = Vec::new();
        for g in datum.raising_generators() {
            gens.push((self.algebra.generator(g)?, 1));
        }
        for t in 1..datum.n() {
            let mut h = self.algebra.generator(Generator::Cartan(t))?;
            h.add_term(Monomial::one(self.algebra.dim()), -lambda.eval_cartan(t).clone());
            gens.push((h, 1));
        }
        Ok(gens)
    }

    /// `ann_l(v)` as the kernel of `U_l -> M_l(rho) -> L_l(rho)`.
    pub fn ann_ideal(&mut self, l: u32) -> Result<IdealTruncation> {
        let q = self.quotient.truncation(l)?;
        self.ann_from_quotient(l, &q)
    }

    /// As [`IdealEngine::ann_ideal`], with `K_l` supplied by the caller.
    pub fn ann_from_quotient(&self, l: u32, q: &QuotientTruncation) -> Result<IdealTruncation> {
        if q.level != l || q.pc != *self.pc() {
            return Err(Error::Dependency(format!(
                "quotient computed at level {} is needed at level {l}",
                q.level
            )));
        }
        let module = self.quotient.module();
        let basis = self.basis(l);
        let target: BTreeMap<&[u32], usize> =
            q.basis.iter().enumerate().map(|(k, p)| (p.as_slice(), k)).collect();
        // u . w for each PBW monomial, built by peeling off the first letter
        let mut orbit: BTreeMap<Monomial, ModuleVector> = BTreeMap::new();
        let mut images = Vec::with_capacity(basis.len());
        for u in &basis {
            let v = match u.first_letter() {
                None => module.generator_vector(),
                Some(f) => {
                    let mut rest = u.exps().to_vec();
                    rest[f] -= 1;
                    let tail = &orbit[&Monomial::from_exps(rest)];
                    module.act_generator(self.algebra.generator_at(f), tail)?
                }
            };
            let mut coords: SparseVec = v
                .terms()
                .iter()
                .map(|(p, c)| (target[p.as_slice()], c.clone()))
                .collect();
            coords.sort_by_key(|(k, _)| *k);
            images.push(q.k.reduce(&coords));
            orbit.insert(u.clone(), v);
        }
        Ok(IdealTruncation {
            pc: self.pc().clone(),
            level: l,
            subspace: kernel_sparse(q.dim_m, &images)?,
            basis,
        })
    }

    /// `I_l(v)` plus `U_{l - m_i} E_{i+1,i}^{m_i}`, `m_i = l_i + 1`, for a
    /// dominant integral full-flag character.
    pub fn ann_via_generators(&self, l: u32) -> Result<IdealTruncation> {
        let lambda = self.pc().lambda();
        if !self.pc().is_full_flag() || !lambda.is_dominant_integral() {
            return Err(Error::invalid(format!(
                "generator description needs a dominant integral full-flag weight, got {lambda}"
            )));
        }
        let mut gens = self.highest_weight_generators()?;
        for (i, li) in lambda.int_coords()?.into_iter().enumerate() {
            let power = li as u32 + 1;
            let word = alloc::vec![Generator::Unit(i + 2, i + 1); power as usize];
            gens.push((self.algebra.straighten(&word, 1)?, power));
        }
        self.span_of_products(l, &gens)
    }
}

/// `char_l(rho)`.
pub fn char_ideal_trunc(pc: &ParabolicCharacter, l: u32) -> Result<IdealTruncation> {
    IdealEngine::new(pc)?.char_ideal(l)
}

/// `I_l(v)` for a highest weight vector of weight `lambda`.
pub fn i_v_trunc(lambda: &Weight, l: u32) -> Result<IdealTruncation> {
    IdealEngine::new(&ParabolicCharacter::full_flag(lambda)?)?.i_v(l)
}

/// `ann_l(v)` through the simple quotient.
pub fn ann_ideal_trunc(pc: &ParabolicCharacter, l: u32) -> Result<IdealTruncation> {
    IdealEngine::new(pc)?.ann_ideal(l)
}

/// `ann_l(v)` from the generator description; `lambda` dominant integral.
pub fn ann_via_generators(lambda: &Weight, l: u32) -> Result<IdealTruncation> {
    IdealEngine::new(&ParabolicCharacter::full_flag(lambda)?)?.ann_via_generators(l)
}

/// Comparison of `span{u (x - rho(x))} ∩ U_l(p)` with `ker rho_U ∩ U_l(p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhoKernelReport {
    pub level: u32,
    pub dim_u_p: usize,
    pub dim_span: usize,
    pub dim_kernel: usize,
    /// Every spanning element is killed by `rho_U`.
    pub span_in_kernel: bool,
}

impl RhoKernelReport {
    pub fn passed(&self) -> bool {
        self.span_in_kernel && self.dim_span == self.dim_kernel && self.dim_kernel + 1 == self.dim_u_p
    }
}

/// Checks that the left ideal of `U(p)` generated by `x - rho(x)` is the
/// kernel of the multiplicative extension `rho_U`, up to degree `l`.
pub fn rho_u_kernel_check(pc: &ParabolicCharacter, l: u32) -> Result<RhoKernelReport> {
    let algebra = PbwAlgebra::new(pc.n())?;
    let basis = algebra.enumerate_pbw(l, Selector::ParabolicPart(pc))?;
    let index = index_of(&basis);
    let rho: Vec<Option<Rational>> = algebra
        .generators()
        .iter()
        .map(|g| pc.rho_of_generator(*g).ok())
        .collect();
    let rho_u = |m: &Monomial| -> Rational {
        let mut acc = Rational::one();
        for (k, &e) in m.exps().iter().enumerate() {
            if e > 0 {
                acc *= Pow::pow(rho[k].as_ref().expect("p monomial"), e);
            }
        }
        acc
    };
    let mut builder = EchelonBuilder::new(basis.len());
    let mut span_in_kernel = true;
    for x in pc.parabolic_generators() {
        let mut g = algebra.generator(x)?;
        g.add_term(Monomial::one(algebra.dim()), -pc.rho_of_generator(x)?);
        for u in basis.iter().take_while(|u| u.degree() < l) {
            let product = algebra.monomial_times(u, &g);
            let value: Rational = product.terms().iter().map(|(m, c)| c * rho_u(m)).sum();
            span_in_kernel &= value.is_zero();
            builder.insert(coordinates(&index, &product, l)?)?;
        }
    }
    // rho_U(1) = 1, so its kernel is a hyperplane
    Ok(RhoKernelReport {
        level: l,
        dim_u_p: basis.len(),
        dim_span: builder.rank(),
        dim_kernel: basis.len() - 1,
        span_in_kernel,
    })
}

/// One row of the comparison between `char_l(rho)` and `ann_l(v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EqualityRow {
    pub level: u32,
    pub dim_u: usize,
    pub dim_m: usize,
    pub dim_char: usize,
    pub dim_ann: usize,
    pub dim_k: usize,
    pub dim_l: usize,
    /// The two ideals coincide as subspaces of `U_l`.
    pub equal: bool,
}

/// Rows for `l = 0..=l_max`.
pub fn equality_report(pc: &ParabolicCharacter, l_max: u32) -> Result<Vec<EqualityRow>> {
    let mut engine = IdealEngine::new(pc)?;
    (0..=l_max)
        .map(|l| {
            let q = engine.quotient_engine().truncation(l)?;
            let ch = engine.char_ideal(l)?;
            let ann = engine.ann_from_quotient(l, &q)?;
            Ok(EqualityRow {
                level: l,
                dim_u: ch.ambient_dim(),
                dim_m: q.dim_m,
                dim_char: ch.dim(),
                dim_ann: ann.dim(),
                dim_k: q.dim_k(),
                dim_l: q.dim_l,
                equal: ch.subspace == ann.subspace,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::sum;
    use crate::int;

    fn sl2(d: i64) -> ParabolicCharacter {
        ParabolicCharacter::from_ints(2, &[1], &[d]).unwrap()
    }

    #[test]
    fn sl2_character_ideal() {
        let ch = char_ideal_trunc(&sl2(3), 1).unwrap();
        assert_eq!(ch.dim(), 2);
        let alg = PbwAlgebra::new(2).unwrap();
        let e = alg.generator(Generator::Unit(1, 2)).unwrap();
        let mut h = alg.generator(Generator::Cartan(1)).unwrap();
        h.add_term(Monomial::one(3), int(-3));
        assert!(ch.contains(&e).unwrap());
        assert!(ch.contains(&h).unwrap());
        assert!(!ch.contains(&alg.generator(Generator::Unit(2, 1)).unwrap()).unwrap());
        assert_eq!(char_ideal_trunc(&sl2(3), 0).unwrap().dim(), 0);
        let pc = ParabolicCharacter::from_ints(3, &[1, 2], &[2, 3]).unwrap();
        assert_eq!(char_ideal_trunc(&pc, 2).unwrap().dim(), 35);
    }

    #[test]
    fn highest_weight_ideal_matches() {
        let lambda = Weight::from_ints(&[3]);
        assert_eq!(i_v_trunc(&lambda, 1).unwrap().subspace, char_ideal_trunc(&sl2(3), 1).unwrap().subspace);
        assert_eq!(i_v_trunc(&lambda, 0).unwrap().dim(), 0);
    }

    #[test]
    fn sl2_annihilators() {
        let ann = ann_ideal_trunc(&sl2(3), 4).unwrap();
        assert_eq!(ann.dim(), 31);
        let alg = PbwAlgebra::new(2).unwrap();
        let f4 = alg.straighten(&[Generator::Unit(2, 1); 4], 1).unwrap();
        assert!(ann.contains(&f4).unwrap());
        assert_eq!(ann_ideal_trunc(&sl2(0), 1).unwrap().dim(), 3);
        let via = ann_via_generators(&Weight::from_ints(&[3]), 4).unwrap();
        assert_eq!(via.subspace, ann.subspace);
        assert!(ann_via_generators(&Weight::from_ints(&[-1]), 2).is_err());
    }

    #[test]
    fn quotient_level_mismatch() {
        let engine = IdealEngine::new(&sl2(3)).unwrap();
        let q = crate::quotient::maximal_submodule_trunc(&sl2(3), 2).unwrap();
        assert!(matches!(engine.ann_from_quotient(3, &q), Err(Error::Dependency(_))));
    }

    #[test]
    fn rho_kernel() {
        let r = rho_u_kernel_check(&sl2(3), 1).unwrap();
        assert_eq!((r.dim_u_p, r.dim_span), (3, 2));
        assert!(r.passed());
        let r = rho_u_kernel_check(&sl2(3), 0).unwrap();
        assert_eq!(r.dim_kernel, 0);
        assert!(r.passed());
    }

    #[test]
    fn report_rows() {
        let rows = equality_report(&sl2(3), 4).unwrap();
        let equal: Vec<bool> = rows.iter().map(|r| r.equal).collect();
        assert_eq!(equal, [true, true, true, true, false]);
        let rows = equality_report(&sl2(0), 1).unwrap();
        assert!(!rows[1].equal);
    }

    #[test]
    fn ideal_grows_under_left_multiplication() {
        let ch = char_ideal_trunc(&sl2(2), 2).unwrap();
        let next = char_ideal_trunc(&sl2(2), 3).unwrap();
        let alg = PbwAlgebra::new(2).unwrap();
        for a in ch.elements() {
            for g in alg.generators() {
                let prod = alg.multiply(&alg.generator(*g).unwrap(), &a).unwrap();
                assert!(next.contains(&prod).unwrap());
            }
        }
        let lifted = ch.subspace.embed(next.ambient_dim()).unwrap();
        assert_eq!(sum(&lifted, &next.subspace).unwrap(), next.subspace);
    }
}
