use std::fmt;

use super::poly::SparsePolynomial;
use crate::error::AlgebraError;

/// Unreduced quotient of polynomials. No GCDs are ever taken; equality is
/// decided by cross-multiplication.
#[derive(Clone, Debug)]
pub struct PolyFraction {
    pub num: SparsePolynomial,
    pub den: SparsePolynomial,
}

impl PolyFraction {
    pub fn new(num: SparsePolynomial, den: SparsePolynomial) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(PolyFraction { num, den })
    }

    pub fn from_poly(p: SparsePolynomial) -> Self {
        let n = p.nvars();
        PolyFraction {
            num: p,
            den: SparsePolynomial::one(n),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn equals(&self, other: &PolyFraction) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    pub fn add(&self, other: &PolyFraction) -> PolyFraction {
        PolyFraction {
            num: &(&self.num * &other.den) + &(&other.num * &self.den),
            den: &self.den * &other.den,
        }
    }

    pub fn mul(&self, other: &PolyFraction) -> PolyFraction {
        PolyFraction {
            num: &self.num * &other.num,
            den: &self.den * &other.den,
        }
    }

    pub fn neg(&self) -> PolyFraction {
        PolyFraction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    /// The polynomial value, if the denominator divides the numerator.
    pub fn to_polynomial(&self) -> Result<SparsePolynomial, AlgebraError> {
        self.num.exact_divide(&self.den)
    }
}

impl fmt::Display for PolyFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

/// A vector of rational functions over one shared denominator.
#[derive(Clone, Debug)]
pub struct RationalVector {
    pub numerators: Vec<SparsePolynomial>,
    pub denominator: SparsePolynomial,
}

impl RationalVector {
    pub fn polynomial(components: Vec<SparsePolynomial>) -> Self {
        let n = components.first().map_or(0, |p| p.nvars());
        RationalVector {
            numerators: components,
            denominator: SparsePolynomial::one(n),
        }
    }

    pub fn len(&self) -> usize {
        self.numerators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.numerators.is_empty()
    }

    pub fn component(&self, i: usize) -> PolyFraction {
        PolyFraction {
            num: self.numerators[i].clone(),
            den: self.denominator.clone(),
        }
    }

    /// Cancel every `z_i - z_j` dividing the denominator and all numerators.
    pub fn cancel_differences(&self) -> RationalVector {
        let n = self.denominator.nvars();
        let mut out = self.clone();
        let divide = |p: &SparsePolynomial, d: &SparsePolynomial| match p.div_rem(d) {
            Ok((q, r)) if r.is_zero() => Some(q),
            _ => None,
        };
        for i in 0..n {
            for j in i + 1..n {
                let zij = SparsePolynomial::diff(n, i, j);
                while let Some(den) = divide(&out.denominator, &zij) {
                    let nums: Option<Vec<SparsePolynomial>> = out.numerators.iter().map(|p| divide(p, &zij)).collect();
                    let Some(nums) = nums else { break };
                    out = RationalVector {
                        numerators: nums,
                        denominator: den,
                    };
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancel_differences_keeps_the_value() {
        let z12 = SparsePolynomial::diff(3, 0, 1);
        let z13 = SparsePolynomial::diff(3, 0, 2);
        let v = RationalVector {
            numerators: vec![&z12 * &z13, z12.pow_u(2)],
            denominator: &z12.pow_u(3) * &z13,
        };
        let c = v.cancel_differences();
        assert_eq!(c.denominator, &z12.pow_u(2) * &z13);
        for i in 0..2 {
            assert!(c.component(i).equals(&v.component(i)));
        }
    }
}
