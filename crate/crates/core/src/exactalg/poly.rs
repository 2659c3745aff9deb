use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::AlgebraError;

/// Largest number of marked points z_1..z_N handled anywhere.
pub const MAX_POINTS: usize = 8;
/// Exponent slots per monomial: the points plus one auxiliary variable.
pub const MAX_VARS: usize = MAX_POINTS + 1;

pub type Coefficient = BigRational;

pub(crate) fn int(n: i64) -> Coefficient {
    BigRational::from_integer(BigInt::from(n))
}

/// Dense exponent vector. Ordered lexicographically with the highest
/// variable index most significant, so `z_N` dominates.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial([u16; MAX_VARS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; MAX_VARS])
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        assert!(exps.len() <= MAX_VARS, "too many exponents");
        let mut m = [0; MAX_VARS];
        m[..exps.len()].copy_from_slice(exps);
        Monomial(m)
    }

    pub fn var(i: usize) -> Self {
        let mut m = [0; MAX_VARS];
        m[i] = 1;
        Monomial(m)
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u16 {
        self.0[i]
    }

    pub fn exponents(&self, nvars: usize) -> &[u16] {
        &self.0[..nvars]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = [0u16; MAX_VARS];
        for (k, o) in out.iter_mut().enumerate() {
            *o = self.0[k] + other.0[k];
        }
        Monomial(out)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self.divides(other)`.
    fn quotient_of(&self, other: &Monomial) -> Monomial {
        let mut out = [0u16; MAX_VARS];
        for (k, o) in out.iter_mut().enumerate() {
            *o = other.0[k] - self.0[k];
        }
        Monomial(out)
    }

    fn with_exp(mut self, i: usize, e: u16) -> Monomial {
        self.0[i] = e;
        self
    }

    /// Highest index with a non-zero exponent, plus one.
    fn span(&self) -> usize {
        self.0.iter().rposition(|&e| e != 0).map_or(0, |p| p + 1)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        for k in (0..MAX_VARS).rev() {
            match self.0[k].cmp(&other.0[k]) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &self.0[..self.span().max(1)])
    }
}

/// Multivariate polynomial in `z_1..z_nvars` with exact rational
/// coefficients. Zero coefficients are never stored.
#[derive(Clone, Debug)]
pub struct SparsePolynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Coefficient>,
}

impl PartialEq for SparsePolynomial {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for SparsePolynomial {}

impl SparsePolynomial {
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables");
        SparsePolynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Coefficient) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Coefficient::one())
    }

    pub fn from_int(nvars: usize, c: i64) -> Self {
        Self::constant(nvars, int(c))
    }

    /// The variable `z_{i+1}` (0-based index `i`).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index {i} out of range");
        Self::monomial(nvars, Monomial::var(i), Coefficient::one())
    }

    /// `z_{i+1} - z_{j+1}`.
    pub fn diff(nvars: usize, i: usize, j: usize) -> Self {
        &Self::var(nvars, i) - &Self::var(nvars, j)
    }

    pub fn monomial(nvars: usize, m: Monomial, c: Coefficient) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(m, c);
        p
    }

    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Coefficient)>,
    {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Same polynomial viewed in a ring with `nvars` variables.
    pub fn with_nvars(mut self, nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS);
        debug_assert!(self.terms.keys().all(|m| m.span() <= nvars));
        self.nvars = nvars;
        self
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

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Coefficient)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Coefficient {
        self.terms.get(m).cloned().unwrap_or_else(Coefficient::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Coefficient) {
        if c.is_zero() {
            return;
        }
        debug_assert!(m.span() <= self.nvars, "monomial outside the ring");
        match self.terms.entry(m) {
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

    pub fn scale(&self, c: &Coefficient) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        SparsePolynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn pow(&self, exp: i64) -> Result<Self, AlgebraError> {
        if exp < 0 {
            return Err(AlgebraError::NegativeExponent(exp));
        }
        Ok(self.pow_u(exp as u32))
    }

    pub fn pow_u(&self, mut exp: u32) -> Self {
        let mut result = Self::one(self.nvars);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                result = &result * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Leading monomial and coefficient under lex order with `z_N` most
    /// significant.
    pub fn leading_term(&self) -> Result<(Monomial, Coefficient), AlgebraError> {
        self.terms
            .iter()
            .next_back()
            .map(|(m, c)| (*m, c.clone()))
            .ok_or(AlgebraError::ZeroPolynomial)
    }

    /// Divide by `q`, returning `(quotient, remainder)` of the lex division
    /// algorithm. For a single divisor the remainder vanishes iff `q | self`.
    pub fn div_rem(&self, q: &SparsePolynomial) -> Result<(Self, Self), AlgebraError> {
        let (lm_q, lc_q) = q.leading_term().map_err(|_| AlgebraError::DivisionByZero)?;
        let nvars = self.nvars.max(q.nvars);
        let mut rem = self.clone().with_nvars(nvars);
        let mut quot = Self::zero(nvars);
        let mut out = Self::zero(nvars);
        while let Some((lm, lc)) = rem.terms.iter().next_back().map(|(m, c)| (*m, c.clone())) {
            if lm_q.divides(&lm) {
                let shift = lm_q.quotient_of(&lm);
                let c = &lc / &lc_q;
                for (m, v) in q.terms.iter() {
                    rem.add_term(m.mul(&shift), -(v * &c));
                }
                quot.add_term(shift, c);
            } else {
                rem.terms.remove(&lm);
                out.add_term(lm, lc);
            }
        }
        Ok((quot, out))
    }

    /// Exact quotient `self / q`; fails with the division remainder when
    /// `q` does not divide `self`.
    pub fn exact_divide(&self, q: &SparsePolynomial) -> Result<Self, AlgebraError> {
        let (quot, rem) = self.div_rem(q)?;
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err(AlgebraError::NotDivisible { remainder: rem })
        }
    }

    pub fn partial_derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in self.terms.iter() {
            let e = m.exp(i);
            if e > 0 {
                out.add_term(m.with_exp(i, e - 1), c * int(e as i64));
            }
        }
        out
    }

    /// Formal antiderivative in variable `i` (zero constant of integration).
    pub fn antiderivative(&self, i: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in self.terms.iter() {
            let e = m.exp(i) + 1;
            out.add_term(m.with_exp(i, e), c / int(e as i64));
        }
        out
    }

    /// Replace variable `i` by `value`.
    pub fn substitute(&self, i: usize, value: &SparsePolynomial) -> Self {
        let nvars = self.nvars.max(value.nvars);
        let mut powers: Vec<SparsePolynomial> = vec![Self::one(nvars)];
        let mut out = Self::zero(nvars);
        for (m, c) in self.terms.iter() {
            let e = m.exp(i) as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            let rest = m.with_exp(i, 0);
            for (pm, pc) in powers[e].terms.iter() {
                out.add_term(rest.mul(pm), c * pc);
            }
        }
        out
    }

    /// Rename variables: `z_i` becomes `z_{perm[i]}`.
    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in self.terms.iter() {
            let mut e = [0u16; MAX_VARS];
            for (i, &p) in perm.iter().enumerate() {
                e[p] += m.exp(i);
            }
            for (k, slot) in e.iter_mut().enumerate().skip(perm.len()) {
                *slot += m.exp(k);
            }
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Swap `z_i` and `z_j`.
    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        let mut perm: Vec<usize> = (0..self.nvars).collect();
        perm.swap(i, j);
        self.permute_vars(&perm)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// `Some(d)` if every term has degree `d`; `None` if mixed. The zero
    /// polynomial reports `Some(None)`-like behaviour via `is_zero`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Monomial::degree);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// The value if the polynomial is constant (zero included).
    pub fn as_constant(&self) -> Option<Coefficient> {
        match self.terms.len() {
            0 => Some(Coefficient::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    /// Evaluate at a rational point.
    pub fn evaluate(&self, point: &[Coefficient]) -> Coefficient {
        let mut total = Coefficient::zero();
        for (m, c) in self.terms.iter() {
            let mut v = c.clone();
            for (i, x) in point.iter().enumerate() {
                let e = m.exp(i);
                if e > 0 {
                    v *= num_traits::pow(x.clone(), e as usize);
                }
            }
            total += v;
        }
        total
    }

    /// Add `c` to the coefficient of `m` (used for adversarial mutation).
    pub fn perturbed(&self, m: Monomial, c: Coefficient) -> Self {
        let mut p = self.clone();
        p.add_term(m, c);
        p
    }

    fn mul_impl(&self, other: &SparsePolynomial) -> SparsePolynomial {
        let nvars = self.nvars.max(other.nvars);
        if self.is_zero() || other.is_zero() {
            return Self::zero(nvars);
        }
        let all_int = self.is_integral() && other.is_integral();
        if all_int {
            let mut acc: HashMap<Monomial, BigInt> =
                HashMap::with_capacity(self.terms.len() * other.terms.len() / 2 + 1);
            for (ma, ca) in self.terms.iter() {
                let ca = ca.numer();
                for (mb, cb) in other.terms.iter() {
                    let prod = ca * cb.numer();
                    acc.entry(ma.mul(mb)).and_modify(|v| *v += &prod).or_insert(prod);
                }
            }
            return SparsePolynomial {
                nvars,
                terms: acc
                    .into_iter()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(m, v)| (m, BigRational::from_integer(v)))
                    .collect(),
            };
        }
        let mut acc: HashMap<Monomial, Coefficient> = HashMap::new();
        for (ma, ca) in self.terms.iter() {
            for (mb, cb) in other.terms.iter() {
                *acc.entry(ma.mul(mb)).or_insert_with(Coefficient::zero) += ca * cb;
            }
        }
        SparsePolynomial {
            nvars,
            terms: acc.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
        }
    }

    fn add_impl(&self, other: &SparsePolynomial, negate: bool) -> SparsePolynomial {
        let mut out = self.clone().with_nvars(self.nvars.max(other.nvars));
        for (m, c) in other.terms.iter() {
            out.add_term(*m, if negate { -c.clone() } else { c.clone() });
        }
        out
    }

    /// Render with variable names produced by `name(i)`.
    pub fn display_with<F: Fn(usize) -> String>(&self, name: F) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mut factors = Vec::new();
            for i in 0..m.span() {
                match m.exp(i) {
                    0 => {}
                    1 => factors.push(name(i)),
                    e => factors.push(format!("{}^{}", name(i), e)),
                }
            }
            if factors.is_empty() {
                s.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    s.push_str(&mag.to_string());
                    s.push('*');
                }
                s.push_str(&factors.join("*"));
            }
        }
        s
    }
}

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(|i| format!("z{}", i + 1)))
    }
}

impl<'a> Add<&'a SparsePolynomial> for &'a SparsePolynomial {
    type Output = SparsePolynomial;
    fn add(self, rhs: &'a SparsePolynomial) -> SparsePolynomial {
        self.add_impl(rhs, false)
    }
}

impl<'a> Sub<&'a SparsePolynomial> for &'a SparsePolynomial {
    type Output = SparsePolynomial;
    fn sub(self, rhs: &'a SparsePolynomial) -> SparsePolynomial {
        self.add_impl(rhs, true)
    }
}

impl<'a> Mul<&'a SparsePolynomial> for &'a SparsePolynomial {
    type Output = SparsePolynomial;
    fn mul(self, rhs: &'a SparsePolynomial) -> SparsePolynomial {
        self.mul_impl(rhs)
    }
}

impl Neg for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn neg(self) -> SparsePolynomial {
        self.scale(&-Coefficient::one())
    }
}

impl Add for SparsePolynomial {
    type Output = SparsePolynomial;
    fn add(self, rhs: SparsePolynomial) -> SparsePolynomial {
        &self + &rhs
    }
}

impl Sub for SparsePolynomial {
    type Output = SparsePolynomial;
    fn sub(self, rhs: SparsePolynomial) -> SparsePolynomial {
        &self - &rhs
    }
}

impl Mul for SparsePolynomial {
    type Output = SparsePolynomial;
    fn mul(self, rhs: SparsePolynomial) -> SparsePolynomial {
        &self * &rhs
    }
}

impl Neg for SparsePolynomial {
    type Output = SparsePolynomial;
    fn neg(self) -> SparsePolynomial {
        -&self
    }
}

/// `Π_{i<j} (z_i - z_j)^{e}` in `n` variables.
pub fn vandermonde_power(n: usize, e: u32) -> SparsePolynomial {
    let mut p = SparsePolynomial::one(n);
    for i in 0..n {
        for j in i + 1..n {
            p = &p * &SparsePolynomial::diff(n, i, j).pow_u(e);
        }
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: usize, i: usize) -> SparsePolynomial {
        SparsePolynomial::var(n, i - 1)
    }

    fn zd(n: usize, i: usize, j: usize) -> SparsePolynomial {
        SparsePolynomial::diff(n, i - 1, j - 1)
    }

    #[test]
    fn telescoping_sum() {
        assert_eq!(&zd(3, 1, 2) + &zd(3, 2, 3), zd(3, 1, 3));
    }

    #[test]
    fn square_of_difference() {
        let sq = zd(2, 1, 2).pow(2).unwrap();
        let expected = &(&z(2, 1) * &z(2, 1)) - &(&z(2, 1) * &z(2, 2)).scale(&int(2));
        let expected = &expected + &(&z(2, 2) * &z(2, 2));
        assert_eq!(sq, expected);
    }

    #[test]
    fn times_zero_is_empty() {
        let p = &zd(3, 1, 2) * &SparsePolynomial::zero(3);
        assert!(p.is_zero());
        assert_eq!(p.len(), 0);
    }

    #[test]
    fn negative_power_is_rejected() {
        assert!(matches!(zd(2, 1, 2).pow(-1), Err(AlgebraError::NegativeExponent(-1))));
    }

    #[test]
    fn exact_division_examples() {
        let a = &(&z(2, 1) * &z(2, 1)) - &(&z(2, 2) * &z(2, 2));
        assert_eq!(a.exact_divide(&zd(2, 1, 2)).unwrap(), &z(2, 1) + &z(2, 2));
        let c = zd(2, 1, 2).pow_u(3);
        assert_eq!(c.exact_divide(&zd(2, 1, 2)).unwrap(), zd(2, 1, 2).pow_u(2));
        match z(2, 1).exact_divide(&zd(2, 1, 2)) {
            Err(AlgebraError::NotDivisible { remainder }) => assert!(!remainder.is_zero()),
            other => panic!("expected non-divisible, got {other:?}"),
        }
    }

    #[test]
    fn partial_derivatives() {
        let p = &(&z(3, 1) * &z(3, 1)) * &z(3, 3);
        assert_eq!(p.partial_derivative(0), (&z(3, 1) * &z(3, 3)).scale(&int(2)));
        assert!(z(3, 1).partial_derivative(1).is_zero());
    }

    #[test]
    fn euler_identity_on_homogeneous_input() {
        let p = &zd(3, 1, 2).pow_u(2) * &(&zd(3, 1, 3) + &zd(3, 2, 3));
        let d = p.homogeneous_degree().unwrap();
        let mut euler = SparsePolynomial::zero(3);
        for i in 0..3 {
            euler = &euler + &(&z(3, i + 1) * &p.partial_derivative(i));
        }
        assert_eq!(euler, p.scale(&int(d as i64)));
    }

    #[test]
    fn leading_terms() {
        // (z1-z2)^2 (z1+z2-2z3): leading z2^2 z3 with coefficient -2
        let p = &zd(3, 1, 2).pow_u(2) * &(&zd(3, 1, 3) + &zd(3, 2, 3));
        let (m, c) = p.leading_term().unwrap();
        assert_eq!(m, Monomial::from_exponents(&[0, 2, 1]));
        assert_eq!(c, int(-2));

        let (m, c) = z(3, 1).leading_term().unwrap();
        assert_eq!(m, Monomial::var(0));
        assert_eq!(c, int(1));

        let q = &(&z(3, 2) * &z(3, 3).pow_u(2)).scale(&int(3)) - &(&z(3, 2).pow_u(2) * &z(3, 3)).scale(&int(5));
        let (m, c) = q.leading_term().unwrap();
        assert_eq!(m, Monomial::from_exponents(&[0, 1, 2]));
        assert_eq!(c, int(3));

        assert!(SparsePolynomial::zero(2).leading_term().is_err());
    }

    #[test]
    fn substitution_and_antiderivative() {
        // t = var 2; integrate (t - z1) dt from z1 to z2 = (z1-z2)^2 / 2
        let t = z(3, 3);
        let f = &t - &z(3, 1);
        let anti = f.antiderivative(2);
        let val = &anti.substitute(2, &z(3, 2)) - &anti.substitute(2, &z(3, 1));
        let expected = zd(3, 1, 2).pow_u(2).scale(&BigRational::new(1.into(), 2.into()));
        assert_eq!(val, expected);
    }

    #[test]
    fn display_is_readable() {
        let p = &zd(3, 1, 2).pow_u(2) - &SparsePolynomial::from_int(3, 1);
        assert_eq!(p.to_string(), "z2^2 - 2*z1*z2 + z1^2 - 1");
    }
}
