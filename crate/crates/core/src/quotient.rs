//! The maximal submodule `K` of `M(rho)`, its filtration `K_l = K ∩ M_l`,
//! and the simple quotient `L(rho) = M(rho) / K`.
//!
//! `K` is graded by weight. A vector `m` of depth `beta` lies in `K` exactly
//! when no raising monomial of weight `beta` moves it back onto the highest
//! line `K (1 (x) w)`. The contravariant form gives a second description of
//! the same space and is kept as an independent oracle.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::rc::Rc;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exactla::{intersect, kernel_sparse, rref_sparse, SparseVec, TruncatedSubspace};
use crate::pbw::enumerate_exponents;
use crate::rootdata::{Generator, ParabolicCharacter, RootDatum, Weight};
use crate::verma::{partitions, ModuleVector, VermaModule};
use crate::{binomial, Error, Rational, Result};

/// A weight space `M(rho)_mu` with a distinguished subspace (`K ∩ M(rho)_mu`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSpaceKernel {
    /// Simple-root coordinates of `lambda - mu`.
    pub depth: Vec<u32>,
    pub weight: Weight,
    /// Exponent vectors spanning the weight space, in enumeration order.
    pub basis: Vec<Vec<u32>>,
    /// The subspace, in coordinates over `basis`.
    pub kernel: TruncatedSubspace,
}

fn depth_of_weight(pc: &ParabolicCharacter, mu: &Weight) -> Result<Vec<u32>> {
    if mu.n() != pc.n() {
        return Err(Error::invalid(format!(
            "weight {mu} is not a weight of sl_{}",
            pc.n()
        )));
    }
    (pc.lambda() - mu)
        .simple_root_coords()
        .into_iter()
        .map(|c| {
            c.is_integer()
                .then(|| c.to_integer().to_u32())
                .flatten()
                .ok_or_else(|| {
                    Error::invalid(format!("{mu} is not of the form lambda + alpha_P"))
                })
        })
        .collect()
}

/// Words of all raising PBW monomials of weight `depth`, in the global order.
pub fn raising_words(n: usize, depth: &[u32]) -> Result<Vec<Vec<Generator>>> {
    let datum = RootDatum::new(n)?;
    let roots = datum.positive_roots();
    let coords: Vec<Vec<u32>> = roots.iter().map(|r| r.simple_coords(n)).collect();
    let mut exps = Vec::new();
    partitions(&coords, 0, depth.to_vec(), &mut vec![0; roots.len()], &mut exps);
    exps.sort();
    Ok(exps
        .into_iter()
        .map(|e| {
            e.iter()
                .zip(roots)
                .flat_map(|(&k, r)| core::iter::repeat_n(r.raising(), k as usize))
                .collect()
        })
        .collect())
}

fn nonempty_basis(module: &VermaModule, depth: &[u32], mu: &Weight) -> Result<Vec<Vec<u32>>> {
    let basis = module.weight_space_basis(depth);
    if basis.is_empty() {
        return Err(Error::invalid(format!("{mu} is not a weight of M(rho)")));
    }
    Ok(basis)
}

fn raising_kernel(module: &VermaModule, depth: &[u32]) -> Result<WeightSpaceKernel> {
    let pc = module.pc();
    let weight = pc.lambda() - &Weight::from_simple_coords(pc.n(), depth);
    let basis = nonempty_basis(module, depth, &weight)?;
    let words = raising_words(pc.n(), depth)?;
    let images = basis
        .iter()
        .map(|p| {
            let v = module.basis_vector(p.clone())?;
            let mut img = SparseVec::new();
            for (k, word) in words.iter().enumerate() {
                let c = module.act_word(word, &v)?.generator_component();
                if !c.is_zero() {
                    img.push((k, c));
                }
            }
            Ok(img)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(WeightSpaceKernel {
        depth: depth.to_vec(),
        weight,
        kernel: kernel_sparse(words.len(), &images)?,
        basis,
    })
}

fn shapovalov_radical(module: &VermaModule, depth: &[u32]) -> Result<WeightSpaceKernel> {
    let pc = module.pc();
    let weight = pc.lambda() - &Weight::from_simple_coords(pc.n(), depth);
    let basis = nonempty_basis(module, depth, &weight)?;
    let raising: Vec<Generator> = pc.complement_roots().iter().map(|r| r.raising()).collect();
    // sigma(X^Q): transposed letters in reverse order
    let duals: Vec<Vec<Generator>> = basis
        .iter()
        .map(|q| {
            let mut word = Vec::new();
            for (k, &e) in q.iter().enumerate().rev() {
                word.extend(core::iter::repeat_n(raising[k], e as usize));
            }
            word
        })
        .collect();
    let images = basis
        .iter()
        .map(|p| {
            let v = module.basis_vector(p.clone())?;
            let mut img = SparseVec::new();
            for (k, word) in duals.iter().enumerate() {
                let c = module.act_word(word, &v)?.generator_component();
                if !c.is_zero() {
                    img.push((k, c));
                }
            }
            Ok(img)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(WeightSpaceKernel {
        depth: depth.to_vec(),
        weight,
        kernel: kernel_sparse(basis.len(), &images)?,
        basis,
    })
}

/// `K ∩ M(rho)_mu` by the raising criterion.
pub fn submodule_membership_weightspace(pc: &ParabolicCharacter, mu: &Weight) -> Result<WeightSpaceKernel> {
    let depth = depth_of_weight(pc, mu)?;
    raising_kernel(&VermaModule::new(pc.clone())?, &depth)
}

/// Radical of the contravariant form on `M(rho)_mu`.
pub fn shapovalov_radical_weightspace(pc: &ParabolicCharacter, mu: &Weight) -> Result<WeightSpaceKernel> {
    let depth = depth_of_weight(pc, mu)?;
    shapovalov_radical(&VermaModule::new(pc.clone())?, &depth)
}

/// The exact sequence `0 -> K_l -> M_l(rho) -> L_l(rho) -> 0` at one level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientTruncation {
    pub pc: ParabolicCharacter,
    pub level: u32,
    /// Basis of `M_l(rho)` (exponent vectors, degree ascending).
    pub basis: Vec<Vec<u32>>,
    /// `K_l` in coordinates over `basis`.
    pub k: TruncatedSubspace,
    pub dim_m: usize,
    pub dim_l: usize,
    /// Dimension of each weight space of `L_l(rho)`; zero entries omitted.
    pub weight_dims: BTreeMap<Weight, usize>,
}

impl QuotientTruncation {
    pub fn dim_k(&self) -> usize {
        self.k.dim()
    }
}

/// Computes `K_l` level by level, caching the graded pieces of `K`.
#[derive(Debug)]
pub struct QuotientEngine {
    module: VermaModule,
    kernels: BTreeMap<Vec<u32>, Rc<WeightSpaceKernel>>,
}

impl QuotientEngine {
    pub fn new(pc: &ParabolicCharacter) -> Result<Self> {
        Ok(QuotientEngine {
            module: VermaModule::new(pc.clone())?,
            kernels: BTreeMap::new(),
        })
    }

    pub fn module(&self) -> &VermaModule {
        &self.module
    }

    pub fn pc(&self) -> &ParabolicCharacter {
        self.module.pc()
    }

    /// `K ∩ M(rho)_{lambda - beta}` for `beta` given in simple-root coordinates.
    pub fn kernel_at_depth(&mut self, depth: &[u32]) -> Result<Rc<WeightSpaceKernel>> {
        if let Some(hit) = self.kernels.get(depth) {
            return Ok(Rc::clone(hit));
        }
        let ks = Rc::new(raising_kernel(&self.module, depth)?);
        self.kernels.insert(depth.to_vec(), Rc::clone(&ks));
        Ok(ks)
    }

    pub fn truncation(&mut self, l: u32) -> Result<QuotientTruncation> {
        let m = self.module.m();
        let support: Vec<usize> = (0..m).collect();
        let basis = enumerate_exponents(m, &support, l);
        let index: BTreeMap<&[u32], usize> =
            basis.iter().enumerate().map(|(k, p)| (p.as_slice(), k)).collect();
        let mut by_depth: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
        for p in &basis {
            *by_depth.entry(self.module.depth_of(p)).or_default() += 1;
        }
        let mut rows: Vec<SparseVec> = Vec::new();
        let mut weight_dims = BTreeMap::new();
        for (depth, count) in by_depth {
            let ks = self.kernel_at_depth(&depth)?;
            let low: Vec<usize> = ks
                .basis
                .iter()
                .enumerate()
                .filter(|(_, p)| p.iter().sum::<u32>() <= l)
                .map(|(k, _)| k)
                .collect();
            let truncated = if ks.kernel.is_zero() {
                ks.kernel.clone()
            } else {
                intersect(&ks.kernel, &TruncatedSubspace::coordinate(ks.basis.len(), low)?)?
            };
            let quotient_dim = count - truncated.dim();
            if quotient_dim > 0 {
                weight_dims.insert(ks.weight.clone(), quotient_dim);
            }
            for r in truncated.rows() {
                let mut row: SparseVec = r.iter().map(|(c, x)| (index[ks.basis[*c].as_slice()], x.clone())).collect();
                row.sort_by_key(|(c, _)| *c);
                rows.push(row);
            }
        }
        let k = rref_sparse(basis.len(), rows)?;
        let dim_m = basis.len();
        Ok(QuotientTruncation {
            pc: self.module.pc().clone(),
            level: l,
            dim_l: dim_m - k.dim(),
            dim_m,
            k,
            basis,
            weight_dims,
        })
    }
}

/// `K_l`, `M_l(rho)` and `L_l(rho)` at level `l`.
pub fn maximal_submodule_trunc(pc: &ParabolicCharacter, l: u32) -> Result<QuotientTruncation> {
    QuotientEngine::new(pc)?.truncation(l)
}

/// `dim V_lambda` by the product formula over positive roots.
pub fn weyl_dimension(lambda: &Weight) -> Result<usize> {
    if !lambda.is_dominant_integral() {
        return Err(Error::invalid(format!("{lambda} is not dominant integral")));
    }
    let n = lambda.n();
    let c = lambda.coords();
    let mut acc = Rational::one();
    for i in 1..n {
        for j in i + 1..=n {
            let num: Rational = (i..j).map(|t| &c[t - 1] + Rational::one()).sum();
            acc *= num / Rational::from_integer(((j - i) as i64).into());
        }
    }
    acc.to_integer()
        .to_usize()
        .ok_or_else(|| Error::invalid("dimension does not fit in usize"))
}

/// Outcome of [`classify`], carrying the observed `dim L_l` for `l = 0..=probe`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    Finite { dim: usize, dims: Vec<usize> },
    /// `all_negative` is set when every `l_i < 0`.
    Infinite { dims: Vec<usize>, all_negative: bool },
    Inconclusive { dims: Vec<usize> },
}

/// Decides finiteness of `L(rho)` from witnessed data only.
pub fn classify(pc: &ParabolicCharacter, probe_level: u32) -> Result<Classification> {
    if probe_level == 0 {
        return Err(Error::invalid("probe level must be at least 1"));
    }
    let mut engine = QuotientEngine::new(pc)?;
    let dims = (0..=probe_level)
        .map(|l| engine.truncation(l).map(|q| q.dim_l))
        .collect::<Result<Vec<_>>>()?;
    let last = dims[dims.len() - 1];
    if pc.lambda().is_dominant_integral() {
        // L is finite here, so growth alone proves nothing
        let dim = weyl_dimension(pc.lambda())?;
        if dims[dims.len() - 2] == last && last == dim {
            return Ok(Classification::Finite { dim, dims });
        }
    } else if dims.windows(2).all(|w| w[0] < w[1]) {
        let all_negative = pc.ell().iter().all(|l| l.is_negative());
        return Ok(Classification::Infinite { dims, all_negative });
    }
    Ok(Classification::Inconclusive { dims })
}

/// One level of the jet-fiber table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JetRow {
    pub level: u32,
    pub dim_m: usize,
    pub dim_l: usize,
    /// `M_l(rho) = L_l(rho)`, i.e. `K_l = 0`.
    pub identity: bool,
    /// `l <= min` over the flag entries `l_i`.
    pub in_range_flag: bool,
    /// `l <= min` over all fundamental coordinates of `lambda`.
    pub in_range_all: bool,
}

/// `dim L_l(rho)` against `dim M_l(rho) = C(m + l, l)` for `l = 0..=l_max`.
pub fn jet_rows(pc: &ParabolicCharacter, l_max: u32) -> Result<Vec<JetRow>> {
    let m_flag = pc.m_of_lambda_flag().ok();
    let m_all = crate::rootdata::m_of_lambda(pc.lambda()).ok();
    let within = |bound: Option<i64>, l: u32| bound.is_some_and(|b| i64::from(l) <= b);
    let mut engine = QuotientEngine::new(pc)?;
    (0..=l_max)
        .map(|l| {
            let q = engine.truncation(l)?;
            debug_assert_eq!(q.dim_m, binomial(pc.m() + l as usize, l as usize));
            Ok(JetRow {
                level: l,
                dim_m: q.dim_m,
                dim_l: q.dim_l,
                identity: q.dim_l == q.dim_m,
                in_range_flag: within(m_flag, l),
                in_range_all: within(m_all, l),
            })
        })
        .collect()
}

/// Coset representatives of `L_l`: the basis vectors off the pivots of `K_l`.
pub fn coset_representatives(q: &QuotientTruncation) -> Result<Vec<ModuleVector>> {
    let pivots: alloc::collections::BTreeSet<usize> = q.k.pivots().into_iter().collect();
    let pc = alloc::sync::Arc::new(q.pc.clone());
    (0..q.dim_m)
        .filter(|k| !pivots.contains(k))
        .map(|k| ModuleVector::basis(alloc::sync::Arc::clone(&pc), q.basis[k].clone()))
        .collect()
}
