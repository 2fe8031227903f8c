//! Root datum of `sl_n`: positive roots, weights in fundamental coordinates,
//! the Chevalley basis, and scalar characters of standard parabolic
//! subalgebras.
//!
//! Indices follow matrix notation and are 1-based: `E_ij` is the matrix
//! unit in row `i`, column `j`, and `H_t = E_tt - E_{t+1,t+1}`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{int, Error, Rational, Result};

/// The positive root `L_i - L_j` with `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root {
    pub i: usize,
    pub j: usize,
}

impl Root {
    pub fn height(&self) -> usize {
        self.j - self.i
    }

    /// `X_alpha = E_ij`.
    pub fn raising(&self) -> Generator {
        Generator::Unit(self.i, self.j)
    }

    /// `X_{-alpha} = E_ji`.
    pub fn lowering(&self) -> Generator {
        Generator::Unit(self.j, self.i)
    }

    /// Coefficients on the simple roots `alpha_1 .. alpha_{n-1}`.
    pub fn simple_coords(&self, n: usize) -> Vec<u32> {
        (1..n).map(|t| u32::from(self.i <= t && t < self.j)).collect()
    }

    pub fn weight(&self, n: usize) -> Weight {
        Generator::Unit(self.i, self.j).weight(n)
    }
}

/// Sorts roots by height, then lexicographically.
fn height_then_lex(roots: &mut [Root]) {
    roots.sort_by_key(|r| (r.height(), r.i, r.j));
}

/// A Chevalley basis element of `sl_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    /// Off-diagonal matrix unit `E_ij`, `i != j`.
    Unit(usize, usize),
    /// Cartan element `H_t`, `1 <= t <= n - 1`.
    Cartan(usize),
}

impl Generator {
    pub fn validate(&self, n: usize) -> Result<()> {
        let ok = match *self {
            Generator::Unit(i, j) => i != j && (1..=n).contains(&i) && (1..=n).contains(&j),
            Generator::Cartan(t) => (1..n).contains(&t),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::invalid(format!("{self} is not a generator of sl_{n}")))
        }
    }

    pub fn is_lowering(&self) -> bool {
        matches!(*self, Generator::Unit(i, j) if i > j)
    }

    pub fn is_raising(&self) -> bool {
        matches!(*self, Generator::Unit(i, j) if i < j)
    }

    pub fn is_cartan(&self) -> bool {
        matches!(self, Generator::Cartan(_))
    }

    /// Image under the transpose antiautomorphism.
    pub fn transpose(&self) -> Generator {
        match *self {
            Generator::Unit(i, j) => Generator::Unit(j, i),
            h => h,
        }
    }

    /// Weight of the generator under the adjoint action of the Cartan.
    pub fn weight(&self, n: usize) -> Weight {
        match *self {
            Generator::Cartan(_) => Weight::zero(n),
            Generator::Unit(i, j) => {
                let coords = (1..n)
                    .map(|t| {
                        let v = i64::from(t == i) - i64::from(t + 1 == i) - i64::from(t == j)
                            + i64::from(t + 1 == j);
                        int(v)
                    })
                    .collect();
                Weight { coords }
            }
        }
    }

    /// Nonzero entries `(row, col, value)` of the defining matrix, 1-based.
    pub fn matrix_entries(&self) -> Vec<(usize, usize, i64)> {
        match *self {
            Generator::Unit(i, j) => vec![(i, j, 1)],
            Generator::Cartan(t) => vec![(t, t, 1), (t + 1, t + 1, -1)],
        }
    }

    pub fn matrix(&self, n: usize) -> RatMatrix {
        let mut m = RatMatrix::zero(n);
        for (r, c, v) in self.matrix_entries() {
            m.set(r - 1, c - 1, int(v));
        }
        m
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Generator::Unit(i, j) if i < 10 && j < 10 => write!(f, "E_{i}{j}"),
            Generator::Unit(i, j) => write!(f, "E_{{{i},{j}}}"),
            Generator::Cartan(t) => write!(f, "H_{t}"),
        }
    }
}

/// Root datum of `sl_n` with the standard Borel of upper triangular matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDatum {
    n: usize,
    positive_roots: Vec<Root>,
}

impl RootDatum {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::invalid(format!("sl_n needs n >= 2, got {n}")));
        }
        let mut positive_roots: Vec<Root> = (1..=n)
            .flat_map(|i| ((i + 1)..=n).map(move |j| Root { i, j }))
            .collect();
        height_then_lex(&mut positive_roots);
        Ok(RootDatum { n, positive_roots })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.n - 1
    }

    /// `n^2 - 1`.
    pub fn dim(&self) -> usize {
        self.n * self.n - 1
    }

    /// Positive roots ordered by height, then lexicographically.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// Simple roots `(i, i+1)`; they lead the height ordering.
    pub fn simple_roots(&self) -> &[Root] {
        &self.positive_roots[..self.n - 1]
    }

    pub fn cartan_basis(&self) -> Vec<Generator> {
        (1..self.n).map(Generator::Cartan).collect()
    }

    pub fn lowering_generators(&self) -> Vec<Generator> {
        self.positive_roots.iter().map(Root::lowering).collect()
    }

    pub fn raising_generators(&self) -> Vec<Generator> {
        self.positive_roots.iter().map(Root::raising).collect()
    }

    /// The global PBW order: lowering generators, Cartan, raising generators.
    pub fn generators(&self) -> Vec<Generator> {
        let mut gens = self.lowering_generators();
        gens.extend(self.cartan_basis());
        gens.extend(self.raising_generators());
        gens
    }
}

/// Shorthand for [`RootDatum::new`].
pub fn build_root_datum(n: usize) -> Result<RootDatum> {
    RootDatum::new(n)
}

/// A weight in fundamental-weight coordinates: `coords[t-1] = mu(H_t)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    coords: Vec<Rational>,
}

impl Weight {
    pub fn new(coords: Vec<Rational>) -> Self {
        Weight { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Weight {
            coords: coords.iter().map(|&c| int(c)).collect(),
        }
    }

    pub fn zero(n: usize) -> Self {
        Weight {
            coords: vec![Rational::zero(); n - 1],
        }
    }

    /// `omega_i = L_1 + ... + L_i`.
    pub fn fundamental(n: usize, i: usize) -> Self {
        let mut w = Weight::zero(n);
        w.coords[i - 1] = Rational::one();
        w
    }

    /// Converts from coordinates on `L_1 .. L_n`; the sum is irrelevant.
    pub fn from_l_coords(l: &[Rational]) -> Self {
        Weight {
            coords: l.windows(2).map(|w| &w[0] - &w[1]).collect(),
        }
    }

    /// Coordinates on `L_1 .. L_n` of the representative with last entry zero.
    pub fn to_l_coords(&self) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.coords.len() + 1];
        for s in (0..self.coords.len()).rev() {
            out[s] = &out[s + 1] + &self.coords[s];
        }
        out
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    /// `n` of the ambient `sl_n`.
    pub fn n(&self) -> usize {
        self.coords.len() + 1
    }

    /// `mu(H_t)`, `t` 1-based.
    pub fn eval_cartan(&self, t: usize) -> &Rational {
        &self.coords[t - 1]
    }

    pub fn scale(&self, c: &Rational) -> Weight {
        Weight {
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    pub fn is_dominant_integral(&self) -> bool {
        self.is_integral() && self.coords.iter().all(|c| !c.is_negative())
    }

    /// Integer coordinates, if integral and small enough.
    pub fn int_coords(&self) -> Result<Vec<i64>> {
        self.coords
            .iter()
            .map(|c| {
                c.is_integer()
                    .then(|| c.to_integer().to_i64())
                    .flatten()
                    .ok_or_else(|| Error::invalid(format!("weight {self} is not integral")))
            })
            .collect()
    }

    /// Coefficients on the simple roots (inverse Cartan matrix of type A).
    pub fn simple_root_coords(&self) -> Vec<Rational> {
        let n = self.n() as i64;
        let r = self.coords.len();
        (1..=r)
            .map(|i| {
                let mut acc = Rational::zero();
                for j in 1..=r {
                    let (lo, hi) = (i.min(j) as i64, i.max(j) as i64);
                    acc += &self.coords[j - 1] * crate::ratio(lo * (n - hi), n);
                }
                acc
            })
            .collect()
    }

    pub fn from_simple_coords(n: usize, simple: &[u32]) -> Weight {
        let mut w = Weight::zero(n);
        for (t, &k) in simple.iter().enumerate() {
            let alpha = Root { i: t + 1, j: t + 2 }.weight(n);
            w = w + alpha.scale(&int(k.into()));
        }
        w
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        &self + &rhs
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight {
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        &self - &rhs
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight {
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight {
            coords: self.coords.into_iter().map(|c| -c).collect(),
        }
    }
}

/// Weyl vector: half the sum of the positive roots.
pub fn delta_weight(n: usize) -> Result<Weight> {
    let datum = RootDatum::new(n)?;
    let sum = datum
        .positive_roots()
        .iter()
        .fold(Weight::zero(n), |acc, r| acc + r.weight(n));
    Ok(sum.scale(&crate::ratio(1, 2)))
}

/// `m_alpha = lambda(H_alpha) + 1` for the simple root `alpha_i`.
pub fn m_alpha(lambda: &Weight, i: usize) -> Result<i64> {
    if i == 0 || i > lambda.coords.len() {
        return Err(Error::invalid(format!("no simple root alpha_{i}")));
    }
    Ok(lambda.int_coords()?[i - 1] + 1)
}

/// `m(lambda) = min_i lambda(H_i)`.
pub fn m_of_lambda(lambda: &Weight) -> Result<i64> {
    lambda
        .int_coords()?
        .into_iter()
        .min()
        .ok_or_else(|| Error::invalid("empty weight"))
}

/// Dense `n x n` rational matrix, 0-based indexing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    n: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zero(n: usize) -> Self {
        RatMatrix {
            n,
            data: vec![Rational::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for k in 0..n {
            m.set(k, k, Rational::one());
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.n + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.n + c] = v;
    }

    pub fn trace(&self) -> Rational {
        (0..self.n).map(|k| self.get(k, k).clone()).sum()
    }

    pub fn scale(&self, c: &Rational) -> RatMatrix {
        RatMatrix {
            n: self.n,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add_assign_scaled(&mut self, other: &RatMatrix, c: &Rational) {
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *a += b * c;
            }
        }
    }
}

impl Mul for &RatMatrix {
    type Output = RatMatrix;
    fn mul(self, rhs: &RatMatrix) -> RatMatrix {
        let n = self.n;
        let mut out = RatMatrix::zero(n);
        for r in 0..n {
            for k in 0..n {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let b = rhs.get(k, c);
                    if !b.is_zero() {
                        out.data[r * n + c] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Sub for &RatMatrix {
    type Output = RatMatrix;
    fn sub(self, rhs: &RatMatrix) -> RatMatrix {
        RatMatrix {
            n: self.n,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

/// A finite linear combination of Chevalley generators: an element of `sl_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChevalleyElement {
    n: usize,
    terms: BTreeMap<Generator, Rational>,
}

impl ChevalleyElement {
    pub fn zero(n: usize) -> Self {
        ChevalleyElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn generator(n: usize, g: Generator) -> Result<Self> {
        g.validate(n)?;
        let mut terms = BTreeMap::new();
        terms.insert(g, Rational::one());
        Ok(ChevalleyElement { n, terms })
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Generator, Rational)>) -> Result<Self> {
        let mut out = ChevalleyElement::zero(n);
        for (g, c) in terms {
            g.validate(n)?;
            out.add_term(g, c);
        }
        Ok(out)
    }

    fn add_term(&mut self, g: Generator, c: Rational) {
        let slot = self.terms.entry(g).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&g);
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Generator, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, g: Generator) -> Rational {
        self.terms.get(&g).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn to_matrix(&self) -> RatMatrix {
        let mut m = RatMatrix::zero(self.n);
        for (g, c) in &self.terms {
            for (r, col, v) in g.matrix_entries() {
                let cur = m.get(r - 1, col - 1) + c * int(v);
                m.set(r - 1, col - 1, cur);
            }
        }
        m
    }

    /// Decomposes a trace-zero matrix on the Chevalley basis.
    pub fn from_matrix(m: &RatMatrix) -> Result<Self> {
        let n = m.size();
        if !m.trace().is_zero() {
            return Err(Error::invalid("matrix is not trace free"));
        }
        let mut out = ChevalleyElement::zero(n);
        let mut running = Rational::zero();
        for r in 0..n {
            for c in 0..n {
                if r != c && !m.get(r, c).is_zero() {
                    out.add_term(Generator::Unit(r + 1, c + 1), m.get(r, c).clone());
                }
            }
            // coefficient of H_t is the partial sum of the diagonal up to t
            if r + 1 < n {
                running += m.get(r, r);
                if !running.is_zero() {
                    out.add_term(Generator::Cartan(r + 1), running.clone());
                }
            }
        }
        Ok(out)
    }

    /// Diagonal entries of the matrix of this element.
    pub fn diagonal(&self) -> Vec<Rational> {
        let m = self.to_matrix();
        (0..self.n).map(|k| m.get(k, k).clone()).collect()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return ChevalleyElement::zero(self.n);
        }
        ChevalleyElement {
            n: self.n,
            terms: self.terms.iter().map(|(g, x)| (*g, x * c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_same_n(self.n, other.n)?;
        let mut out = self.clone();
        for (g, c) in &other.terms {
            out.add_term(*g, c.clone());
        }
        Ok(out)
    }
}

fn check_same_n(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::invalid(format!("mismatched sl_n: {a} vs {b}")))
    }
}

/// Lie bracket `[x, y] = xy - yx`.
pub fn bracket(x: &ChevalleyElement, y: &ChevalleyElement) -> Result<ChevalleyElement> {
    check_same_n(x.n, y.n)?;
    let (a, b) = (x.to_matrix(), y.to_matrix());
    ChevalleyElement::from_matrix(&(&(&a * &b) - &(&b * &a)))
}

/// Scalar character of a standard parabolic subalgebra.
///
/// The flag `n_1 < ... < n_k` cuts `1..=n` into diagonal blocks; `p` is the
/// block upper triangular part of `sl_n` and the character is
/// `rho(x) = sum_i l_i (tr A_1 + ... + tr A_i)`, stored through the diagonal
/// coefficients `c_t = sum_{i : n_i >= t} l_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParabolicCharacter {
    n: usize,
    flag: Vec<usize>,
    ell: Vec<Rational>,
    block_sizes: Vec<usize>,
    diag_coeffs: Vec<Rational>,
    lambda: Weight,
    complement: Vec<Root>,
}

impl ParabolicCharacter {
    pub fn new(n: usize, flag: Vec<usize>, ell: Vec<Rational>) -> Result<Self> {
        if n < 2 {
            return Err(Error::invalid(format!("sl_n needs n >= 2, got {n}")));
        }
        if flag.is_empty() {
            return Err(Error::invalid("flag must be non-empty"));
        }
        if flag.len() != ell.len() {
            return Err(Error::invalid(format!(
                "flag has {} entries but {} weights were given",
                flag.len(),
                ell.len()
            )));
        }
        if flag.iter().any(|&f| f == 0 || f >= n) {
            return Err(Error::invalid(format!("flag entries must lie in [1, {}]", n - 1)));
        }
        if flag.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::invalid("flag must be strictly increasing"));
        }

        let mut block_sizes = Vec::with_capacity(flag.len() + 1);
        let mut prev = 0;
        for &f in &flag {
            block_sizes.push(f - prev);
            prev = f;
        }
        block_sizes.push(n - prev);

        let diag_coeffs = (1..=n)
            .map(|t| {
                flag.iter()
                    .zip(&ell)
                    .filter(|(f, _)| **f >= t)
                    .map(|(_, l)| l.clone())
                    .sum()
            })
            .collect();

        let mut lambda = Weight::zero(n);
        for (f, l) in flag.iter().zip(&ell) {
            lambda.coords[f - 1] = l.clone();
        }

        let mut pc = ParabolicCharacter {
            n,
            flag,
            ell,
            block_sizes,
            diag_coeffs,
            lambda,
            complement: Vec::new(),
        };
        let mut complement: Vec<Root> = RootDatum::new(n)?
            .positive_roots()
            .iter()
            .copied()
            .filter(|r| pc.block_of(r.i) != pc.block_of(r.j))
            .collect();
        height_then_lex(&mut complement);
        pc.complement = complement;
        Ok(pc)
    }

    pub fn from_ints(n: usize, flag: &[usize], ell: &[i64]) -> Result<Self> {
        Self::new(n, flag.to_vec(), ell.iter().map(|&l| int(l)).collect())
    }

    /// Borel case: full flag, `rho` restricting to `lambda` on the Cartan.
    pub fn full_flag(lambda: &Weight) -> Result<Self> {
        let n = lambda.n();
        Self::new(n, (1..n).collect(), lambda.coords.clone())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn flag(&self) -> &[usize] {
        &self.flag
    }

    pub fn ell(&self) -> &[Rational] {
        &self.ell
    }

    /// `d_1 .. d_{k+1}`.
    pub fn block_sizes(&self) -> &[usize] {
        &self.block_sizes
    }

    /// `c_1 .. c_n`.
    pub fn diag_coeffs(&self) -> &[Rational] {
        &self.diag_coeffs
    }

    /// `lambda = sum_i l_i omega_{n_i}`, the restriction of `rho` to the Cartan.
    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn is_full_flag(&self) -> bool {
        self.flag.len() == self.n - 1
    }

    /// Number of roots in the complement `nbar`.
    pub fn m(&self) -> usize {
        self.complement.len()
    }

    /// Positive roots whose lowering vectors span `nbar`, by height then lex.
    pub fn complement_roots(&self) -> &[Root] {
        &self.complement
    }

    /// 0-based index of the diagonal block containing row `r` (1-based).
    pub fn block_of(&self, r: usize) -> usize {
        self.flag.iter().filter(|&&f| f < r).count()
    }

    pub fn contains(&self, g: Generator) -> bool {
        match g {
            Generator::Unit(i, j) => i < j || self.block_of(i) == self.block_of(j),
            Generator::Cartan(_) => true,
        }
    }

    /// Chevalley basis of `p`, in the global generator order.
    pub fn parabolic_generators(&self) -> Vec<Generator> {
        RootDatum::new(self.n)
            .expect("validated n")
            .generators()
            .into_iter()
            .filter(|g| self.contains(*g))
            .collect()
    }

    /// `rho` on a basis element of `p`.
    pub fn rho_of_generator(&self, g: Generator) -> Result<Rational> {
        if !self.contains(g) {
            return Err(Error::NotInParabolic(format!("{g}")));
        }
        Ok(match g {
            Generator::Cartan(t) => &self.diag_coeffs[t - 1] - &self.diag_coeffs[t],
            Generator::Unit(..) => Rational::zero(),
        })
    }

    /// `rho(x) = sum_t c_t a_tt`; `x` must lie in `p`.
    pub fn eval_character(&self, x: &ChevalleyElement) -> Result<Rational> {
        check_same_n(self.n, x.n())?;
        if let Some(g) = x.terms().keys().find(|g| !self.contains(**g)) {
            return Err(Error::NotInParabolic(format!("{g} lies outside p")));
        }
        Ok(x.diagonal()
            .iter()
            .zip(&self.diag_coeffs)
            .map(|(a, c)| a * c)
            .sum())
    }

    /// `alpha_P = -(p_1 alpha_1 + ... + p_m alpha_m)` over the complement roots.
    pub fn weight_of_monomial(&self, p: &[u32]) -> Result<Weight> {
        if p.len() != self.m() {
            return Err(Error::invalid(format!(
                "exponent vector has length {}, expected {}",
                p.len(),
                self.m()
            )));
        }
        let mut w = Weight::zero(self.n);
        for (e, root) in p.iter().zip(&self.complement) {
            if *e > 0 {
                w = &w - &root.weight(self.n).scale(&int((*e).into()));
            }
        }
        Ok(w)
    }

    /// `m(lambda)` read off the flag entries: `min_i l_i`.
    pub fn m_of_lambda_flag(&self) -> Result<i64> {
        self.ell
            .iter()
            .map(|l| {
                l.is_integer()
                    .then(|| l.to_integer().to_i64())
                    .flatten()
                    .ok_or_else(|| Error::invalid("character is not integral"))
            })
            .try_fold(i64::MAX, |acc, l| l.map(|l| acc.min(l)))
    }

    /// The full-flag character with the same `lambda`.
    pub fn borel_restriction(&self) -> ParabolicCharacter {
        ParabolicCharacter::full_flag(&self.lambda).expect("valid lambda")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio;

    fn el(n: usize, g: Generator) -> ChevalleyElement {
        ChevalleyElement::generator(n, g).unwrap()
    }

    #[test]
    fn positive_root_counts() {
        assert_eq!(RootDatum::new(2).unwrap().positive_roots(), &[Root { i: 1, j: 2 }]);
        let sl3 = RootDatum::new(3).unwrap();
        assert_eq!(
            sl3.positive_roots(),
            &[Root { i: 1, j: 2 }, Root { i: 2, j: 3 }, Root { i: 1, j: 3 }]
        );
        assert_eq!(RootDatum::new(4).unwrap().positive_roots().len(), 6);
        assert!(RootDatum::new(1).is_err());
        for n in 2..7 {
            let d = RootDatum::new(n).unwrap();
            assert_eq!(d.positive_roots().len(), n * (n - 1) / 2);
            for (k, r) in d.simple_roots().iter().enumerate() {
                assert_eq!((r.i, r.j), (k + 1, k + 2));
            }
            for r in d.positive_roots() {
                assert_eq!(r.simple_coords(n).iter().sum::<u32>() as usize, r.height());
            }
        }
    }

    #[test]
    fn bracket_examples() {
        let e12 = el(2, Generator::Unit(1, 2));
        let e21 = el(2, Generator::Unit(2, 1));
        assert_eq!(bracket(&e12, &e21).unwrap(), el(2, Generator::Cartan(1)));
        let h1 = el(2, Generator::Cartan(1));
        assert_eq!(bracket(&h1, &e12).unwrap(), e12.scale(&int(2)));
        let a = el(3, Generator::Unit(1, 2));
        let b = el(3, Generator::Unit(2, 3));
        assert_eq!(bracket(&a, &b).unwrap(), el(3, Generator::Unit(1, 3)));
        assert!(bracket(&a, &e12).is_err());
    }

    #[test]
    fn matrix_round_trip_of_cartan() {
        let x = ChevalleyElement::from_terms(
            3,
            [(Generator::Cartan(1), int(2)), (Generator::Cartan(2), int(-5))],
        )
        .unwrap();
        assert_eq!(ChevalleyElement::from_matrix(&x.to_matrix()).unwrap(), x);
        assert_eq!(x.diagonal(), vec![int(2), int(-7), int(5)]);
    }

    #[test]
    fn weight_of_monomial_examples() {
        let pc = ParabolicCharacter::from_ints(3, &[1, 2], &[0, 0]).unwrap();
        assert_eq!(pc.weight_of_monomial(&[0, 0, 0]).unwrap(), Weight::zero(3));
        // -(3 alpha_1 + 2 alpha_2): alpha_1 = (2,-1), alpha_2 = (-1,2)
        assert_eq!(pc.weight_of_monomial(&[1, 0, 2]).unwrap(), Weight::from_ints(&[-4, -1]));
        let sl2 = ParabolicCharacter::from_ints(2, &[1], &[0]).unwrap();
        assert_eq!(sl2.weight_of_monomial(&[5]).unwrap(), Weight::from_ints(&[-10]));
        assert!(sl2.weight_of_monomial(&[1, 1]).is_err());
    }

    #[test]
    fn delta_is_sum_of_fundamentals() {
        assert_eq!(delta_weight(2).unwrap(), Weight::from_ints(&[1]));
        assert_eq!(delta_weight(3).unwrap(), Weight::from_ints(&[1, 1]));
        for n in 2..=6 {
            let d = delta_weight(n).unwrap();
            assert!(d.coords().iter().all(|c| c.is_one()));
            for t in 1..n {
                assert!(d.eval_cartan(t).is_one());
            }
        }
    }

    #[test]
    fn character_evaluation() {
        let pc = ParabolicCharacter::from_ints(3, &[1, 2], &[2, 3]).unwrap();
        // x = diag(a, b, c) with a = 4, b = -1, c = -3: 5a + 3b = 17
        let x = ChevalleyElement::from_terms(
            3,
            [(Generator::Cartan(1), int(4)), (Generator::Cartan(2), int(3))],
        )
        .unwrap();
        assert_eq!(x.diagonal(), vec![int(4), int(-1), int(-3)]);
        assert_eq!(pc.eval_character(&x).unwrap(), int(17));
        assert_eq!(pc.eval_character(&el(3, Generator::Cartan(1))).unwrap(), int(2));
        assert_eq!(pc.eval_character(&el(3, Generator::Cartan(2))).unwrap(), int(3));
        assert!(pc.eval_character(&el(3, Generator::Unit(1, 3))).unwrap().is_zero());
        assert!(matches!(
            pc.eval_character(&el(3, Generator::Unit(2, 1))),
            Err(Error::NotInParabolic(_))
        ));
    }

    #[test]
    fn character_restricts_to_lambda() {
        let cases: &[(usize, &[usize], &[i64])] = &[
            (2, &[1], &[3]),
            (3, &[1], &[-2]),
            (3, &[2], &[5]),
            (4, &[2], &[1]),
            (4, &[1, 3], &[2, -1]),
            (5, &[1, 2, 4], &[1, 7, -3]),
        ];
        for (n, flag, ell) in cases {
            let pc = ParabolicCharacter::from_ints(*n, flag, ell).unwrap();
            for t in 1..*n {
                let h = el(*n, Generator::Cartan(t));
                assert_eq!(&pc.eval_character(&h).unwrap(), pc.lambda().eval_cartan(t));
            }
        }
    }

    #[test]
    fn m_alpha_examples() {
        let l = Weight::from_ints(&[2, 3]);
        assert_eq!(m_alpha(&l, 1).unwrap(), 3);
        assert_eq!(m_alpha(&l, 2).unwrap(), 4);
        assert_eq!(m_of_lambda(&l).unwrap(), 2);
        let z = Weight::zero(4);
        assert!((1..4).all(|i| m_alpha(&z, i).unwrap() == 1));
        assert_eq!(m_of_lambda(&z).unwrap(), 0);
        let l = Weight::from_ints(&[3]);
        assert_eq!((m_alpha(&l, 1).unwrap(), m_of_lambda(&l).unwrap()), (4, 3));
        assert!(m_of_lambda(&Weight::new(vec![ratio(1, 2)])).is_err());
    }

    #[test]
    fn complement_examples() {
        let full = ParabolicCharacter::from_ints(3, &[1, 2], &[0, 0]).unwrap();
        let lowering: Vec<_> = full.complement_roots().iter().map(Root::lowering).collect();
        assert_eq!(
            lowering,
            vec![Generator::Unit(2, 1), Generator::Unit(3, 2), Generator::Unit(3, 1)]
        );
        let p1 = ParabolicCharacter::from_ints(3, &[1], &[0]).unwrap();
        assert_eq!(p1.complement_roots(), &[Root { i: 1, j: 2 }, Root { i: 1, j: 3 }]);
        assert_eq!(p1.m(), 2);
        let p2 = ParabolicCharacter::from_ints(4, &[2], &[0]).unwrap();
        let mut got: Vec<_> = p2.complement_roots().to_vec();
        got.sort();
        assert_eq!(
            got,
            vec![Root { i: 1, j: 3 }, Root { i: 1, j: 4 }, Root { i: 2, j: 3 }, Root { i: 2, j: 4 }]
        );
        for n in 2..7 {
            let pc = ParabolicCharacter::from_ints(n, &(1..n).collect::<Vec<_>>(), &vec![0; n - 1])
                .unwrap();
            assert_eq!(pc.complement_roots(), RootDatum::new(n).unwrap().positive_roots());
        }
    }

    #[test]
    fn block_data() {
        let pc = ParabolicCharacter::from_ints(5, &[2, 3], &[1, 4]).unwrap();
        assert_eq!(pc.block_sizes(), &[2, 1, 2]);
        assert_eq!(pc.diag_coeffs(), &[int(5), int(5), int(4), int(0), int(0)]);
        assert_eq!(pc.lambda(), &Weight::from_ints(&[0, 1, 4, 0]));
        // m = d1 d2 + d1 d3 + d2 d3
        assert_eq!(pc.m(), 2 + 4 + 2);
        assert!(ParabolicCharacter::from_ints(3, &[2, 1], &[0, 0]).is_err());
        assert!(ParabolicCharacter::from_ints(3, &[3], &[0]).is_err());
        assert!(ParabolicCharacter::from_ints(3, &[1], &[0, 1]).is_err());
    }

    #[test]
    fn simple_root_coordinates() {
        let n = 4;
        for r in RootDatum::new(n).unwrap().positive_roots() {
            let w = r.weight(n);
            let expect: Vec<Rational> = r.simple_coords(n).iter().map(|&c| int(c.into())).collect();
            assert_eq!(w.simple_root_coords(), expect);
            assert_eq!(Weight::from_simple_coords(n, &r.simple_coords(n)), w);
        }
        let w = Weight::from_ints(&[1, 0]);
        assert_eq!(w.simple_root_coords(), vec![ratio(2, 3), ratio(1, 3)]);
        assert_eq!(Weight::from_l_coords(&w.to_l_coords()), w);
    }
}
