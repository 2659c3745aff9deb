//! Sums of products of powers of point differences.
//!
//! A [`FactoredSum`] is the working representation of the residue engine:
//! every term is a coefficient times a product of `(a - b)^e` with `e` any
//! integer, where `a` and `b` are fixed points `z_i` or live integration
//! variables. Like factor maps are merged; nothing is expanded until
//! [`normalize_factored`] clears denominators once at the end.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::poly::{Coefficient, SparsePolynomial};
use crate::error::AlgebraError;

/// A point of the configuration: a fixed `z_i` (0-based) or an
/// integration variable. Fixed points sort before variables.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Atom {
    Point(u8),
    Var(u16),
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Point(i) => write!(f, "z{}", i + 1),
            Atom::Var(v) => write!(f, "t{v}"),
        }
    }
}

/// The linear form `lo - hi` with `lo < hi` in atom order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PointDiff {
    lo: Atom,
    hi: Atom,
}

impl PointDiff {
    /// Canonical form of `a - b`: returns the difference and whether it was
    /// negated (`a - b = -(lo - hi)`).
    pub fn oriented(a: Atom, b: Atom) -> (PointDiff, bool) {
        assert_ne!(a, b, "degenerate point difference");
        if a < b {
            (PointDiff { lo: a, hi: b }, false)
        } else {
            (PointDiff { lo: b, hi: a }, true)
        }
    }

    pub fn lo(&self) -> Atom {
        self.lo
    }

    pub fn hi(&self) -> Atom {
        self.hi
    }

    pub fn involves(&self, a: Atom) -> bool {
        self.lo == a || self.hi == a
    }

    /// The partner of `a` in this difference.
    pub fn other(&self, a: Atom) -> Atom {
        if self.lo == a {
            self.hi
        } else {
            self.lo
        }
    }

    pub fn is_fixed(&self) -> bool {
        matches!((self.lo, self.hi), (Atom::Point(_), Atom::Point(_)))
    }
}

impl fmt::Display for PointDiff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.lo, self.hi) {
            (Atom::Point(i), Atom::Point(j)) => write!(f, "z{}{}", i + 1, j + 1),
            (a, b) => write!(f, "({a}-{b})"),
        }
    }
}

/// Sorted factor list with non-zero exponents; the key of a [`FactoredSum`].
pub type Factors = Vec<(PointDiff, i32)>;

/// Multiply `(d)^e` into a sorted factor list.
pub fn merge_factor(factors: &mut Factors, d: PointDiff, e: i32) {
    if e == 0 {
        return;
    }
    match factors.binary_search_by(|(k, _)| k.cmp(&d)) {
        Ok(pos) => {
            factors[pos].1 += e;
            if factors[pos].1 == 0 {
                factors.remove(pos);
            }
        }
        Err(pos) => factors.insert(pos, (d, e)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredTerm {
    pub coeff: Coefficient,
    pub factors: Factors,
}

impl FactoredTerm {
    pub fn constant(c: Coefficient) -> Self {
        FactoredTerm {
            coeff: c,
            factors: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Coefficient::one())
    }

    /// Multiply by `(a - b)^e`, canonicalizing orientation.
    pub fn times(mut self, a: Atom, b: Atom, e: i32) -> Self {
        let (d, flipped) = PointDiff::oriented(a, b);
        if flipped && e % 2 != 0 {
            self.coeff = -self.coeff;
        }
        merge_factor(&mut self.factors, d, e);
        self
    }

    pub fn mul(&self, other: &FactoredTerm) -> FactoredTerm {
        let mut factors = self.factors.clone();
        for &(d, e) in &other.factors {
            merge_factor(&mut factors, d, e);
        }
        FactoredTerm {
            coeff: &self.coeff * &other.coeff,
            factors,
        }
    }

    /// Rename atoms (used for relabelling integration variables).
    pub fn map_atoms<F: Fn(Atom) -> Atom>(&self, f: F) -> FactoredTerm {
        let mut out = FactoredTerm::constant(self.coeff.clone());
        for &(d, e) in &self.factors {
            out = out.times(f(d.lo), f(d.hi), e);
        }
        out
    }
}

/// A sum of factored terms with like factor maps merged.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FactoredSum {
    terms: BTreeMap<Factors, Coefficient>,
}

impl FactoredSum {
    pub fn zero() -> Self {
        FactoredSum::default()
    }

    pub fn from_term(t: FactoredTerm) -> Self {
        let mut s = Self::zero();
        s.add_term(t);
        s
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Factors, &Coefficient)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, t: FactoredTerm) {
        self.add_raw(t.factors, t.coeff);
    }

    pub(crate) fn add_raw(&mut self, factors: Factors, c: Coefficient) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(factors) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_sum(&mut self, other: &FactoredSum) {
        for (f, c) in other.terms.iter() {
            self.add_raw(f.clone(), c.clone());
        }
    }

    pub fn scale(&self, c: &Coefficient) -> FactoredSum {
        let mut out = FactoredSum::zero();
        for (f, v) in self.terms.iter() {
            out.add_raw(f.clone(), v * c);
        }
        out
    }

    pub fn mul_term(&self, t: &FactoredTerm) -> FactoredSum {
        let mut out = FactoredSum::zero();
        for (f, c) in self.terms.iter() {
            let prod = FactoredTerm {
                coeff: c.clone(),
                factors: f.clone(),
            }
            .mul(t);
            out.add_term(prod);
        }
        out
    }

    pub fn mul(&self, other: &FactoredSum) -> FactoredSum {
        let mut out = FactoredSum::zero();
        for (f, c) in other.terms.iter() {
            let t = FactoredTerm {
                coeff: c.clone(),
                factors: f.clone(),
            };
            out.add_sum(&self.mul_term(&t));
        }
        out
    }

    /// Every atom that occurs in some factor.
    pub fn atoms(&self) -> std::collections::BTreeSet<Atom> {
        self.terms
            .keys()
            .flat_map(|f| f.iter().flat_map(|(d, _)| [d.lo, d.hi]))
            .collect()
    }

    pub fn map_atoms<F: Fn(Atom) -> Atom>(&self, f: F) -> FactoredSum {
        let mut out = FactoredSum::zero();
        for (fs, c) in self.terms.iter() {
            let t = FactoredTerm {
                coeff: c.clone(),
                factors: fs.clone(),
            };
            out.add_term(t.map_atoms(&f));
        }
        out
    }

    pub fn all_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }
}

impl fmt::Display for FactoredSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (fs, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if k > 0 {
                f.write_str(if neg { " - " } else { " + " })?;
            } else if neg {
                f.write_str("-")?;
            }
            write!(f, "{}", c.abs())?;
            for (d, e) in fs {
                if *e == 1 {
                    write!(f, "*{d}")?;
                } else {
                    write!(f, "*{d}^{e}")?;
                }
            }
        }
        Ok(())
    }
}

fn diff_poly(nvars: usize, d: &PointDiff) -> Result<SparsePolynomial, AlgebraError> {
    match (d.lo, d.hi) {
        (Atom::Point(i), Atom::Point(j)) => Ok(SparsePolynomial::diff(nvars, i as usize, j as usize)),
        (Atom::Var(v), _) | (_, Atom::Var(v)) => Err(AlgebraError::LiveAtom(v)),
    }
}

struct PowerCache {
    nvars: usize,
    cache: HashMap<PointDiff, Vec<SparsePolynomial>>,
}

impl PowerCache {
    fn get(&mut self, d: &PointDiff, e: u32) -> Result<&SparsePolynomial, AlgebraError> {
        if !self.cache.contains_key(d) {
            self.cache
                .insert(*d, vec![SparsePolynomial::one(self.nvars), diff_poly(self.nvars, d)?]);
        }
        let powers = self.cache.get_mut(d).unwrap();
        while powers.len() <= e as usize {
            let next = powers.last().unwrap() * &powers[1];
            powers.push(next);
        }
        Ok(&powers[e as usize])
    }
}

/// Bring a factored sum over fixed points to a single polynomial in
/// `z_1..z_nvars`.
///
/// All terms are put over the least common denominator, expanded and
/// summed, and the denominator is then divided out exactly. A non-zero
/// remainder means the sum is not a polynomial.
pub fn normalize_factored(f: &FactoredSum, nvars: usize) -> Result<SparsePolynomial, AlgebraError> {
    if let Some(Atom::Var(v)) = f.atoms().into_iter().find(|a| matches!(a, Atom::Var(_))) {
        return Err(AlgebraError::LiveAtom(v));
    }
    if f.is_zero() {
        return Ok(SparsePolynomial::zero(nvars));
    }
    // lcd[d] = largest pole order of d over all terms
    let mut lcd: BTreeMap<PointDiff, i32> = BTreeMap::new();
    for fs in f.terms.keys() {
        for &(d, e) in fs {
            let slot = lcd.entry(d).or_insert(0);
            *slot = (*slot).max(-e);
        }
    }
    // shift[d] = exponent of d common to every cleared term
    let mut common: BTreeMap<PointDiff, i32> = lcd.keys().map(|d| (*d, i32::MAX)).collect();
    for fs in f.terms.keys() {
        for (d, c) in common.iter_mut() {
            let e = fs.binary_search_by(|(k, _)| k.cmp(d)).map(|p| fs[p].1).unwrap_or(0);
            *c = (*c).min(e + lcd[d]);
        }
    }

    let mut cache = PowerCache {
        nvars,
        cache: HashMap::new(),
    };
    let mut total = SparsePolynomial::zero(nvars);
    for (fs, c) in f.terms.iter() {
        let mut pows: Vec<(PointDiff, u32)> = Vec::new();
        for (d, l) in lcd.iter() {
            let e = fs.binary_search_by(|(k, _)| k.cmp(d)).map(|p| fs[p].1).unwrap_or(0);
            let k = e + l - common[d];
            if k > 0 {
                pows.push((*d, k as u32));
            }
        }
        let mut term = SparsePolynomial::constant(nvars, c.clone());
        for (d, k) in pows {
            term = &term * cache.get(&d, k)?;
        }
        total = &total + &term;
    }

    for (d, l) in lcd.iter() {
        let net = common[d] - l;
        if net > 0 {
            total = &total * cache.get(d, net as u32)?;
        } else {
            let lin = diff_poly(nvars, d)?;
            for _ in 0..(-net) {
                total = total.exact_divide(&lin).map_err(|e| match e {
                    AlgebraError::NotDivisible { remainder } => AlgebraError::NonPolynomial { remainder },
                    other => other,
                })?;
            }
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::poly::int;

    fn z(i: u8) -> Atom {
        Atom::Point(i - 1)
    }

    #[test]
    fn orientation_tracks_sign() {
        let (d, flipped) = PointDiff::oriented(z(2), z(1));
        assert!(flipped);
        assert_eq!((d.lo(), d.hi()), (z(1), z(2)));
        let t = FactoredTerm::one().times(z(2), z(1), 1);
        assert_eq!(t.coeff, int(-1));
        let t = FactoredTerm::one().times(z(2), z(1), 2);
        assert_eq!(t.coeff, int(1));
    }

    #[test]
    fn like_terms_merge_and_cancel() {
        let mut s = FactoredSum::zero();
        s.add_term(FactoredTerm::one().times(z(1), z(2), 1));
        s.add_term(FactoredTerm::one().times(z(2), z(1), 1));
        assert!(s.is_zero());
    }

    #[test]
    fn normalize_examples() {
        let mut s = FactoredSum::zero();
        s.add_term(FactoredTerm::one().times(z(1), z(2), 1));
        s.add_term(FactoredTerm::one().times(z(2), z(3), 1));
        assert_eq!(normalize_factored(&s, 3).unwrap(), SparsePolynomial::diff(3, 0, 2));

        let t = FactoredTerm::one().times(z(1), z(2), -1).times(z(1), z(2), 2);
        let s = FactoredSum::from_term(t);
        assert_eq!(normalize_factored(&s, 2).unwrap(), SparsePolynomial::diff(2, 0, 1));

        let s = FactoredSum::from_term(FactoredTerm::one().times(z(1), z(2), -1));
        assert!(matches!(
            normalize_factored(&s, 2),
            Err(AlgebraError::NonPolynomial { .. })
        ));
    }

    #[test]
    fn normalize_cancels_across_terms() {
        // z12^-1 * z13 - z12^-1 * z23 = z12 / z12 = 1
        let mut s = FactoredSum::zero();
        s.add_term(FactoredTerm::one().times(z(1), z(2), -1).times(z(1), z(3), 1));
        s.add_term(
            FactoredTerm::constant(int(-1))
                .times(z(1), z(2), -1)
                .times(z(2), z(3), 1),
        );
        assert_eq!(normalize_factored(&s, 3).unwrap(), SparsePolynomial::one(3));
    }

    #[test]
    fn live_atoms_are_rejected() {
        let s = FactoredSum::from_term(FactoredTerm::one().times(Atom::Var(0), z(1), 1));
        assert!(matches!(normalize_factored(&s, 1), Err(AlgebraError::LiveAtom(0))));
    }
}
