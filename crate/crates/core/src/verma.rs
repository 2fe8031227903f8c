//! Scalar generalized Verma modules `M(rho) = U(g) (x)_{U(p)} K w`.
//!
//! A vector is a combination of basis vectors `X^P (x) w`, where `X^P` is an
//! ordered monomial in the lowering generators of the complement `nbar`.
//! The action of a generator is computed by straightening `g X^P` in an
//! order that puts `nbar` first and `p` last, then evaluating the `U(p)`
//! tail of each monomial through `rho`: Cartan letters give `lambda`
//! values, any other letter of `p` kills the term.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::rc::Rc;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cell::RefCell;

use num_traits::{One, Pow, Zero};

use crate::exactla::SparseVec;
use crate::pbw::{enumerate_exponents, enumeration_cmp, Monomial, PbwAlgebra, UeaElement};
use crate::rootdata::{delta_weight, Generator, ParabolicCharacter, Weight};
use crate::{binomial, Error, Rational, Result};

type Coeffs = BTreeMap<Vec<u32>, Rational>;
type ActionMemo = RefCell<BTreeMap<(usize, Vec<u32>), Rc<Coeffs>>>;

fn add_into(acc: &mut Coeffs, p: &[u32], c: Rational) {
    if c.is_zero() {
        return;
    }
    if let Some(slot) = acc.get_mut(p) {
        *slot += c;
        if slot.is_zero() {
            acc.remove(p);
        }
    } else {
        acc.insert(p.to_vec(), c);
    }
}

/// A vector of `M(rho)`: exponent vectors over the complement roots mapped to
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleVector {
    pc: Arc<ParabolicCharacter>,
    terms: Coeffs,
}

impl ModuleVector {
    pub fn zero(pc: Arc<ParabolicCharacter>) -> Self {
        ModuleVector {
            pc,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(pc: Arc<ParabolicCharacter>, p: Vec<u32>) -> Result<Self> {
        if p.len() != pc.m() {
            return Err(Error::invalid(format!(
                "exponent vector of length {} for a module with m = {}",
                p.len(),
                pc.m()
            )));
        }
        let mut terms = BTreeMap::new();
        terms.insert(p, Rational::one());
        Ok(ModuleVector { pc, terms })
    }

    pub fn pc(&self) -> &Arc<ParabolicCharacter> {
        &self.pc
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, p: &[u32]) -> Rational {
        self.terms.get(p).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficient on the canonical generator `1 (x) w`.
    pub fn generator_component(&self) -> Rational {
        self.coefficient(&vec![0; self.pc.m()])
    }

    /// Largest `|P|` in the support; 0 for the zero vector.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|p| p.iter().sum()).max().unwrap_or(0)
    }

    pub fn add_scaled(&mut self, other: &ModuleVector, c: &Rational) -> Result<()> {
        if self.pc != other.pc {
            return Err(Error::invalid("vectors of different modules"));
        }
        for (p, x) in &other.terms {
            add_into(&mut self.terms, p, x * c);
        }
        Ok(())
    }

    pub fn scale(&self, c: &Rational) -> ModuleVector {
        let mut out = ModuleVector::zero(Arc::clone(&self.pc));
        for (p, x) in &self.terms {
            add_into(&mut out.terms, p, x * c);
        }
        out
    }
}

/// The module `M(rho)` together with a memo of generator actions.
#[derive(Debug)]
pub struct VermaModule {
    pc: Arc<ParabolicCharacter>,
    algebra: PbwAlgebra,
    /// `rho` of the generator at each position of the module order; `None`
    /// on the complement
    rho: Vec<Option<Rational>>,
    memo: ActionMemo,
}

impl VermaModule {
    pub fn new(pc: ParabolicCharacter) -> Result<Self> {
        Self::from_arc(Arc::new(pc))
    }

    pub fn from_arc(pc: Arc<ParabolicCharacter>) -> Result<Self> {
        let n = pc.n();
        let mut order: Vec<Generator> = pc.complement_roots().iter().map(|r| r.lowering()).collect();
        order.extend(pc.parabolic_generators());
        let algebra = PbwAlgebra::with_order(n, order)?;
        let rho = algebra
            .generators()
            .iter()
            .enumerate()
            .map(|(k, g)| if k < pc.m() { Ok(None) } else { pc.rho_of_generator(*g).map(Some) })
            .collect::<Result<_>>()?;
        Ok(VermaModule {
            pc,
            algebra,
            rho,
            memo: RefCell::new(BTreeMap::new()),
        })
    }

    pub fn pc(&self) -> &ParabolicCharacter {
        &self.pc
    }

    pub fn pc_arc(&self) -> &Arc<ParabolicCharacter> {
        &self.pc
    }

    /// `m`, the number of complement roots.
    pub fn m(&self) -> usize {
        self.pc.m()
    }

    /// The algebra in module order (`nbar` first, then `p`).
    pub fn algebra(&self) -> &PbwAlgebra {
        &self.algebra
    }

    /// The canonical generator `1 (x) w`.
    pub fn generator_vector(&self) -> ModuleVector {
        ModuleVector::basis(Arc::clone(&self.pc), vec![0; self.m()]).expect("length m")
    }

    pub fn basis_vector(&self, p: Vec<u32>) -> Result<ModuleVector> {
        ModuleVector::basis(Arc::clone(&self.pc), p)
    }

    /// `lambda + alpha_P`.
    pub fn weight_of(&self, p: &[u32]) -> Result<Weight> {
        Ok(self.pc.lambda() + &self.pc.weight_of_monomial(p)?)
    }

    /// Simple-root coordinates of `-alpha_P`, i.e. the depth below `lambda`.
    pub fn depth_of(&self, p: &[u32]) -> Vec<u32> {
        let n = self.pc.n();
        let mut out = vec![0; n - 1];
        for (e, root) in p.iter().zip(self.pc.complement_roots()) {
            for (o, s) in out.iter_mut().zip(root.simple_coords(n)) {
                *o += e * s;
            }
        }
        out
    }

    /// All `P` with `-alpha_P = depth`, in enumeration order.
    pub fn weight_space_basis(&self, depth: &[u32]) -> Vec<Vec<u32>> {
        let n = self.pc.n();
        let roots: Vec<Vec<u32>> = self.pc.complement_roots().iter().map(|r| r.simple_coords(n)).collect();
        let mut out = Vec::new();
        let mut cur = vec![0; roots.len()];
        partitions(&roots, 0, depth.to_vec(), &mut cur, &mut out);
        out.sort_by(|a, b| enumeration_cmp(a, b));
        out
    }

    fn act_basis(&self, pos: usize, p: &[u32]) -> Rc<Coeffs> {
        let key = (pos, p.to_vec());
        if let Some(hit) = self.memo.borrow().get(&key) {
            return Rc::clone(hit);
        }
        let m = self.m();
        let mut exps = p.to_vec();
        exps.resize(self.algebra.dim(), 0);
        let product = self.algebra.generator_times_monomial(pos, &Monomial::from_exps(exps));
        let mut out = Coeffs::new();
        for (mono, c) in product.terms() {
            let (head, tail) = mono.exps().split_at(m);
            let mut value = c.clone();
            for (k, &e) in tail.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let r = self.rho[m + k].as_ref().expect("tail lies in p");
                value *= Pow::pow(r, e);
                if value.is_zero() {
                    break;
                }
            }
            add_into(&mut out, head, value);
        }
        let out = Rc::new(out);
        self.memo.borrow_mut().insert(key, Rc::clone(&out));
        out
    }

    fn check_vector(&self, v: &ModuleVector) -> Result<()> {
        if *v.pc != *self.pc {
            return Err(Error::invalid("vector belongs to a different module"));
        }
        Ok(())
    }

    /// `g . v` for a Chevalley generator.
    pub fn act_generator(&self, g: Generator, v: &ModuleVector) -> Result<ModuleVector> {
        self.check_vector(v)?;
        let pos = self.algebra.position(g)?;
        let mut out = ModuleVector::zero(Arc::clone(&self.pc));
        for (p, c) in &v.terms {
            for (q, x) in self.act_basis(pos, p).iter() {
                add_into(&mut out.terms, q, x * c);
            }
        }
        Ok(out)
    }

    /// `g_1 g_2 ... g_k . v`, applied right to left.
    pub fn act_word(&self, word: &[Generator], v: &ModuleVector) -> Result<ModuleVector> {
        let mut acc = v.clone();
        for g in word.iter().rev() {
            acc = self.act_generator(*g, &acc)?;
            if acc.is_zero() {
                break;
            }
        }
        Ok(acc)
    }

    /// `a . v` for an element expressed in the PBW basis of `alg`.
    pub fn act(&self, alg: &PbwAlgebra, a: &UeaElement, v: &ModuleVector) -> Result<ModuleVector> {
        if alg.n() != self.pc.n() {
            return Err(Error::invalid(format!(
                "element of U(sl_{}) acting on a module for sl_{}",
                alg.n(),
                self.pc.n()
            )));
        }
        alg.check(a)?;
        let mut out = ModuleVector::zero(Arc::clone(&self.pc));
        for (mono, c) in a.terms() {
            let image = self.act_word(&alg.word(mono), v)?;
            out.add_scaled(&image, c)?;
        }
        Ok(out)
    }

    /// Truncation of this module at level `l`.
    pub fn truncate(self, l: u32) -> TruncatedModule {
        TruncatedModule::from_module(self, l)
    }
}

pub(crate) fn partitions(roots: &[Vec<u32>], k: usize, remaining: Vec<u32>, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if remaining.iter().all(|&r| r == 0) {
        out.push(cur.clone());
        return;
    }
    if k == roots.len() {
        return;
    }
    let mut rem = remaining;
    let mut e = 0;
    loop {
        cur[k] = e;
        partitions(roots, k + 1, rem.clone(), cur, out);
        if roots[k].iter().all(|&s| s == 0) {
            break;
        }
        let fits = rem.iter().zip(&roots[k]).all(|(r, s)| r >= s);
        if !fits {
            break;
        }
        for (r, s) in rem.iter_mut().zip(&roots[k]) {
            *r -= s;
        }
        e += 1;
    }
    cur[k] = 0;
}

/// `M_l(rho)`: the basis vectors `X^P (x) w` with `|P| <= l`.
#[derive(Debug)]
pub struct TruncatedModule {
    module: VermaModule,
    level: u32,
    basis: Vec<Vec<u32>>,
    index: BTreeMap<Vec<u32>, usize>,
}

impl TruncatedModule {
    pub fn new(pc: ParabolicCharacter, l: u32) -> Result<Self> {
        Ok(Self::from_module(VermaModule::new(pc)?, l))
    }

    fn from_module(module: VermaModule, level: u32) -> Self {
        let m = module.m();
        let support: Vec<usize> = (0..m).collect();
        let basis = enumerate_exponents(m, &support, level);
        let index = basis.iter().enumerate().map(|(k, p)| (p.clone(), k)).collect();
        TruncatedModule {
            module,
            level,
            basis,
            index,
        }
    }

    pub fn module(&self) -> &VermaModule {
        &self.module
    }

    pub fn pc(&self) -> &ParabolicCharacter {
        self.module.pc()
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Exponent vectors, degree ascending (so `M_l` is a prefix of `M_{l+1}`).
    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    pub fn index_of(&self, p: &[u32]) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Number of basis vectors of degree at most `l`.
    pub fn dim_at(&self, l: u32) -> usize {
        binomial(self.module.m() + l as usize, l as usize)
    }

    pub fn basis_vector(&self, k: usize) -> ModuleVector {
        self.module.basis_vector(self.basis[k].clone()).expect("basis index")
    }

    pub fn highest_weight(&self) -> &Weight {
        self.pc().lambda()
    }

    /// Weight spaces of `M_l`, as lists of basis indices.
    pub fn weight_spaces(&self) -> BTreeMap<Weight, Vec<usize>> {
        let mut out: BTreeMap<Weight, Vec<usize>> = BTreeMap::new();
        for (k, p) in self.basis.iter().enumerate() {
            let w = self.module.weight_of(p).expect("basis length");
            out.entry(w).or_default().push(k);
        }
        out
    }

    /// Coordinates in the level-`l` basis.
    pub fn coordinates(&self, v: &ModuleVector) -> Result<SparseVec> {
        self.module.check_vector(v)?;
        let mut out: SparseVec = v
            .terms
            .iter()
            .map(|(p, c)| {
                self.index_of(p).map(|k| (k, c.clone())).ok_or_else(|| {
                    Error::invalid(format!("vector has degree above level {}", self.level))
                })
            })
            .collect::<Result<_>>()?;
        out.sort_by_key(|(k, _)| *k);
        Ok(out)
    }

    pub fn vector(&self, coords: &SparseVec) -> Result<ModuleVector> {
        let mut out = ModuleVector::zero(Arc::clone(self.module.pc_arc()));
        for (k, c) in coords {
            let p = self
                .basis
                .get(*k)
                .ok_or_else(|| Error::invalid(format!("coordinate {k} out of range")))?;
            add_into(&mut out.terms, p, c.clone());
        }
        Ok(out)
    }

    fn check_room(&self, degree: u32, v: &ModuleVector) -> Result<()> {
        let vector_degree = v.degree();
        if degree + vector_degree > self.level {
            return Err(Error::TruncationOverflow {
                degree,
                vector_degree,
                level: self.level,
            });
        }
        Ok(())
    }

    /// Generator action, refused when the image could leave `M_l`.
    pub fn act_generator(&self, g: Generator, v: &ModuleVector) -> Result<ModuleVector> {
        self.check_room(1, v)?;
        self.module.act_generator(g, v)
    }

    /// Action of `a in U_k` on `v in M_b`, refused unless `k + b <= l`.
    pub fn act(&self, alg: &PbwAlgebra, a: &UeaElement, v: &ModuleVector) -> Result<ModuleVector> {
        self.check_room(a.filtration_degree().unwrap_or(0), v)?;
        self.module.act(alg, a, v)
    }
}

/// `M_l(rho)`.
pub fn build_module(pc: &ParabolicCharacter, l: u32) -> Result<TruncatedModule> {
    TruncatedModule::new(pc.clone(), l)
}

/// Weight decomposition of `M_l(rho)`.
pub fn weight_spaces(pc: &ParabolicCharacter, l: u32) -> Result<BTreeMap<Weight, Vec<usize>>> {
    Ok(build_module(pc, l)?.weight_spaces())
}

/// Highest-weight convention for the classical Verma module.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shift {
    /// Highest weight `mu`.
    None,
    /// Highest weight `mu - delta`.
    MinusDelta,
}

/// Classical Verma module (Borel induction) truncated at level `l`.
pub fn classical_verma(mu: &Weight, l: u32, shift: Shift) -> Result<TruncatedModule> {
    let highest = match shift {
        Shift::None => mu.clone(),
        Shift::MinusDelta => mu - &delta_weight(mu.n())?,
    };
    TruncatedModule::new(ParabolicCharacter::full_flag(&highest)?, l)
}

/// The surjection `M(rho~) -> M(rho)` from the Borel-induced module with the
/// same highest weight, `X^Q (x) w~ -> X^Q (x) w`.
pub fn project_from_classical(target: &VermaModule, v: &ModuleVector) -> Result<ModuleVector> {
    let source = v.pc();
    if !source.is_full_flag() {
        return Err(Error::invalid("source vector is not in a Borel-induced module"));
    }
    if source.n() != target.pc().n() || source.lambda() != target.pc().lambda() {
        return Err(Error::invalid(format!(
            "characters are incompatible: {} vs {}",
            source.lambda(),
            target.pc().lambda()
        )));
    }
    let lowering: Vec<Generator> = source.complement_roots().iter().map(|r| r.lowering()).collect();
    let top = target.generator_vector();
    let mut out = ModuleVector::zero(Arc::clone(target.pc_arc()));
    for (q, c) in v.terms() {
        let word: Vec<Generator> = q
            .iter()
            .zip(&lowering)
            .flat_map(|(&e, g)| core::iter::repeat_n(*g, e as usize))
            .collect();
        out.add_scaled(&target.act_word(&word, &top)?, c)?;
    }
    Ok(out)
}
