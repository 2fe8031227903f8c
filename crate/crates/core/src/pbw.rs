//! The enveloping algebra `U(sl_n)` in a PBW basis.
//!
//! A [`PbwAlgebra`] fixes a total order on the Chevalley basis. Elements are
//! kept in normal form: linear combinations of ordered monomials
//! `x_1^{e_1} ... x_D^{e_D}`. Products are straightened by moving a single
//! generator leftward past the first letter of a monomial,
//! `g x_i m = x_i (g m) + [g, x_i] m`, and memoizing every such move.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::rc::Rc;
use alloc::vec;
use alloc::vec::Vec;
use core::cell::RefCell;
use core::fmt;

use num_traits::{One, Zero};

use crate::rootdata::{bracket, ChevalleyElement, Generator, ParabolicCharacter, RatMatrix, RootDatum};
use crate::{binomial, int, Error, Rational, Result};

/// Exponent vector over a generator order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(len: usize) -> Self {
        Monomial(vec![0; len])
    }

    pub fn from_exps(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Position of the leftmost letter.
    pub fn first_letter(&self) -> Option<usize> {
        self.0.iter().position(|&e| e > 0)
    }

    fn bumped(&self, pos: usize, up: bool) -> Monomial {
        let mut e = self.0.clone();
        if up {
            e[pos] += 1;
        } else {
            e[pos] -= 1;
        }
        Monomial(e)
    }

    /// Letters as positions, left to right.
    pub fn letters(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(k, &e)| core::iter::repeat_n(k, e as usize))
    }
}

/// Canonical enumeration order: degree ascending, then exponent vectors in
/// descending lexicographic order.
pub fn enumeration_cmp(a: &[u32], b: &[u32]) -> core::cmp::Ordering {
    let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
    da.cmp(&db).then_with(|| b.cmp(a))
}

/// All exponent vectors of length `len`, supported on `support`, of total
/// degree at most `l`, in [`enumeration_cmp`] order.
pub fn enumerate_exponents(len: usize, support: &[usize], l: u32) -> Vec<Vec<u32>> {
    fn fill(support: &[usize], d: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        match support.split_first() {
            None => {
                if d == 0 {
                    out.push(cur.clone());
                }
            }
            Some((&pos, rest)) => {
                // the last position absorbs whatever degree is left
                let low = if rest.is_empty() { d } else { 0 };
                for e in (low..=d).rev() {
                    cur[pos] = e;
                    fill(rest, d - e, cur, out);
                    cur[pos] = 0;
                }
            }
        }
    }
    let mut support = support.to_vec();
    support.sort_unstable();
    let mut out = Vec::new();
    let mut cur = vec![0; len];
    for d in 0..=l {
        if support.is_empty() && d > 0 {
            break;
        }
        fill(&support, d, &mut cur, &mut out);
    }
    out
}

/// Element of `U(sl_n)` in normal form with respect to some generator order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UeaElement {
    terms: BTreeMap<Monomial, Rational>,
}

impl UeaElement {
    pub fn zero() -> Self {
        UeaElement::default()
    }

    pub fn one(len: usize) -> Self {
        Self::monomial(Monomial::one(len), Rational::one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut out = UeaElement::zero();
        out.add_term(m, c);
        out
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Monomial, Rational> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &UeaElement, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (m, x) in &other.terms {
            self.add_term(m.clone(), x * c);
        }
    }

    pub fn add(&self, other: &UeaElement) -> UeaElement {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::one());
        out
    }

    pub fn sub(&self, other: &UeaElement) -> UeaElement {
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one());
        out
    }

    pub fn scale(&self, c: &Rational) -> UeaElement {
        let mut out = UeaElement::zero();
        out.add_scaled(self, c);
        out
    }

    /// `fil(a) = min { l : a in U_l }`, the top total degree. `None` for zero.
    pub fn filtration_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }
}

/// Which generators a PBW enumeration may use.
#[derive(Clone, Copy, Debug)]
pub enum Selector<'a> {
    All,
    /// The complement `nbar` of a parabolic.
    NegativePart(&'a ParabolicCharacter),
    /// The parabolic `p` itself.
    ParabolicPart(&'a ParabolicCharacter),
    /// The raising generators `n+`.
    Raising,
}

/// `U(sl_n)` with a fixed generator order and a straightening memo.
///
/// The memo lives in a `RefCell`, so an algebra is `!Sync`: concurrent
/// callers each own an instance.
#[derive(Debug)]
pub struct PbwAlgebra {
    datum: RootDatum,
    gens: Vec<Generator>,
    pos: BTreeMap<Generator, usize>,
    /// `brackets[a][b]` is `[x_a, x_b]` on positions
    brackets: Vec<Vec<Vec<(usize, Rational)>>>,
    gen_matrices: Vec<RatMatrix>,
    memo: RefCell<BTreeMap<(usize, Monomial), Rc<UeaElement>>>,
}

impl PbwAlgebra {
    /// Global order: lowering (height, lex), Cartan, raising (height, lex).
    pub fn new(n: usize) -> Result<Self> {
        let datum = RootDatum::new(n)?;
        let gens = datum.generators();
        Self::with_order(n, gens)
    }

    /// Any total order on the Chevalley basis of `sl_n`.
    pub fn with_order(n: usize, gens: Vec<Generator>) -> Result<Self> {
        let datum = RootDatum::new(n)?;
        if gens.len() != datum.dim() {
            return Err(Error::invalid(format!(
                "order lists {} generators, sl_{n} has {}",
                gens.len(),
                datum.dim()
            )));
        }
        let mut pos = BTreeMap::new();
        for (k, g) in gens.iter().enumerate() {
            g.validate(n)?;
            if pos.insert(*g, k).is_some() {
                return Err(Error::invalid(format!("generator {g} listed twice")));
            }
        }
        let elements: Vec<ChevalleyElement> = gens
            .iter()
            .map(|g| ChevalleyElement::generator(n, *g))
            .collect::<Result<_>>()?;
        let mut brackets = vec![vec![Vec::new(); gens.len()]; gens.len()];
        for a in 0..gens.len() {
            for b in 0..gens.len() {
                if a == b {
                    continue;
                }
                let br = bracket(&elements[a], &elements[b])?;
                brackets[a][b] = br.terms().iter().map(|(g, c)| (pos[g], c.clone())).collect();
            }
        }
        let gen_matrices = gens.iter().map(|g| g.matrix(n)).collect();
        Ok(PbwAlgebra {
            datum,
            gens,
            pos,
            brackets,
            gen_matrices,
            memo: RefCell::new(BTreeMap::new()),
        })
    }

    pub fn n(&self) -> usize {
        self.datum.n()
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    /// Number of generators, `n^2 - 1`.
    pub fn dim(&self) -> usize {
        self.gens.len()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn position(&self, g: Generator) -> Result<usize> {
        self.pos
            .get(&g)
            .copied()
            .ok_or_else(|| Error::invalid(format!("unknown generator {g} for sl_{}", self.n())))
    }

    pub fn generator_at(&self, pos: usize) -> Generator {
        self.gens[pos]
    }

    /// `[x_a, x_b]` as `(position, coefficient)` pairs.
    pub fn bracket_positions(&self, a: usize, b: usize) -> &[(usize, Rational)] {
        &self.brackets[a][b]
    }

    pub fn one(&self) -> UeaElement {
        UeaElement::one(self.dim())
    }

    pub fn generator(&self, g: Generator) -> Result<UeaElement> {
        let p = self.position(g)?;
        Ok(UeaElement::monomial(Monomial::one(self.dim()).bumped(p, true), Rational::one()))
    }

    /// Lifts a Lie algebra element to degree one.
    pub fn lift(&self, x: &ChevalleyElement) -> Result<UeaElement> {
        if x.n() != self.n() {
            return Err(Error::invalid("mismatched sl_n"));
        }
        let mut out = UeaElement::zero();
        for (g, c) in x.terms() {
            out.add_scaled(&self.generator(*g)?, c);
        }
        Ok(out)
    }

    /// Generators of a monomial, left to right.
    pub fn word(&self, m: &Monomial) -> Vec<Generator> {
        m.letters().map(|p| self.gens[p]).collect()
    }

    pub fn check(&self, a: &UeaElement) -> Result<()> {
        match a.terms.keys().find(|m| m.len() != self.dim()) {
            Some(m) => Err(Error::invalid(format!(
                "monomial of length {} in an algebra with {} generators",
                m.len(),
                self.dim()
            ))),
            None => Ok(()),
        }
    }

    /// Normal form of `x_g * m`.
    pub fn generator_times_monomial(&self, g: usize, m: &Monomial) -> Rc<UeaElement> {
        let first = match m.first_letter() {
            Some(i) if i < g => i,
            _ => return Rc::new(UeaElement::monomial(m.bumped(g, true), Rational::one())),
        };
        let key = (g, m.clone());
        if let Some(hit) = self.memo.borrow().get(&key) {
            return Rc::clone(hit);
        }
        // g x_i m' = x_i (g m') + [g, x_i] m'
        let rest = m.bumped(first, false);
        let mut out = UeaElement::zero();
        let moved = self.generator_times_monomial(g, &rest);
        for (mono, c) in moved.terms() {
            out.add_scaled(&self.generator_times_monomial(first, mono), c);
        }
        for (h, c) in &self.brackets[g][first] {
            out.add_scaled(&self.generator_times_monomial(*h, &rest), c);
        }
        let out = Rc::new(out);
        self.memo.borrow_mut().insert(key, Rc::clone(&out));
        out
    }

    /// `x_g * a`.
    pub fn generator_times(&self, g: usize, a: &UeaElement) -> UeaElement {
        let mut out = UeaElement::zero();
        for (m, c) in &a.terms {
            out.add_scaled(&self.generator_times_monomial(g, m), c);
        }
        out
    }

    /// Normal form of `coeff * g_1 g_2 ... g_k`.
    pub fn straighten(&self, word: &[Generator], coeff: i64) -> Result<UeaElement> {
        let positions: Vec<usize> = word.iter().map(|g| self.position(*g)).collect::<Result<_>>()?;
        let mut acc = self.one().scale(&int(coeff));
        for &p in positions.iter().rev() {
            acc = self.generator_times(p, &acc);
        }
        Ok(acc)
    }

    /// `m * b` for a single monomial `m`.
    pub fn monomial_times(&self, m: &Monomial, b: &UeaElement) -> UeaElement {
        let letters: Vec<usize> = m.letters().collect();
        let mut acc = b.clone();
        for &p in letters.iter().rev() {
            acc = self.generator_times(p, &acc);
        }
        acc
    }

    pub fn multiply(&self, a: &UeaElement, b: &UeaElement) -> Result<UeaElement> {
        self.check(a)?;
        self.check(b)?;
        let mut out = UeaElement::zero();
        for (m, c) in &a.terms {
            out.add_scaled(&self.monomial_times(m, b), c);
        }
        Ok(out)
    }

    pub fn commutator(&self, a: &UeaElement, b: &UeaElement) -> Result<UeaElement> {
        Ok(self.multiply(a, b)?.sub(&self.multiply(b, a)?))
    }

    /// Image under the defining representation `U(sl_n) -> End(K^n)`.
    pub fn fundamental_matrix(&self, a: &UeaElement) -> Result<RatMatrix> {
        self.check(a)?;
        let n = self.n();
        let mut out = RatMatrix::zero(n);
        for (m, c) in &a.terms {
            let mut prod = RatMatrix::identity(n);
            for p in m.letters() {
                prod = &prod * &self.gen_matrices[p];
            }
            out.add_assign_scaled(&prod, c);
        }
        Ok(out)
    }

    /// Positions of the generators a selector allows.
    pub fn selected_positions(&self, selector: Selector<'_>) -> Result<Vec<usize>> {
        let keep = |g: &Generator| -> Result<bool> {
            Ok(match selector {
                Selector::All => true,
                Selector::Raising => g.is_raising(),
                Selector::NegativePart(pc) | Selector::ParabolicPart(pc) => {
                    if pc.n() != self.n() {
                        return Err(Error::invalid("parabolic of a different sl_n"));
                    }
                    let in_p = pc.contains(*g);
                    matches!(selector, Selector::ParabolicPart(_)) == in_p
                }
            })
        };
        let mut out = Vec::new();
        for (k, g) in self.gens.iter().enumerate() {
            if keep(g)? {
                out.push(k);
            }
        }
        Ok(out)
    }

    /// PBW monomials of degree at most `l` on the selected generators.
    pub fn enumerate_pbw(&self, l: u32, selector: Selector<'_>) -> Result<Vec<Monomial>> {
        let support = self.selected_positions(selector)?;
        Ok(enumerate_exponents(self.dim(), &support, l)
            .into_iter()
            .map(Monomial)
            .collect())
    }

    /// `dim U_l` restricted to `d` generators: `C(d + l, l)`.
    pub fn truncated_dim(generators: usize, l: u32) -> usize {
        binomial(generators + l as usize, l as usize)
    }

    /// Renders an element with generator names, e.g. `E_21^2 E_12 + 2 E_21 H_1`.
    pub fn display<'a>(&'a self, a: &'a UeaElement) -> impl fmt::Display + 'a {
        DisplayElement { alg: self, a }
    }
}

struct DisplayElement<'a> {
    alg: &'a PbwAlgebra,
    a: &'a UeaElement,
}

impl fmt::Display for DisplayElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.a.is_zero() {
            return f.write_str("0");
        }
        let mut terms: Vec<_> = self.a.terms.iter().collect();
        terms.sort_by(|x, y| enumeration_cmp(x.0.exps(), y.0.exps()).reverse());
        for (k, (m, c)) in terms.into_iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            let is_one = m.is_one();
            if !c.is_one() || is_one {
                write!(f, "{c}")?;
                if !is_one {
                    f.write_str(" ")?;
                }
            }
            let mut first = true;
            for (p, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    f.write_str(" ")?;
                }
                first = false;
                write!(f, "{}", self.alg.gens[p])?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}
