//! JSON form of polynomials: `{"vars": N, "terms": [{"exp": [...], "num": "...", "den": "..."}]}`
//! with terms in descending monomial order and decimal-string coefficients.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::{Monomial, SparsePolynomial, MAX_VARS};

#[derive(Serialize, Deserialize)]
struct TermRepr {
    exp: Vec<u16>,
    num: String,
    den: String,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    vars: usize,
    terms: Vec<TermRepr>,
}

impl Serialize for SparsePolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let n = self.nvars();
        PolyRepr {
            vars: n,
            terms: self
                .terms()
                .rev()
                .map(|(m, c)| TermRepr {
                    exp: m.exponents(n).to_vec(),
                    num: c.numer().to_string(),
                    den: c.denom().to_string(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SparsePolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = PolyRepr::deserialize(d)?;
        if repr.vars > MAX_VARS {
            return Err(D::Error::custom(format!("too many variables: {}", repr.vars)));
        }
        let mut p = SparsePolynomial::zero(repr.vars);
        for t in repr.terms {
            if t.exp.len() != repr.vars {
                return Err(D::Error::custom("exponent vector length mismatch"));
            }
            let num: BigInt = t.num.parse().map_err(D::Error::custom)?;
            let den: BigInt = t.den.parse().map_err(D::Error::custom)?;
            if den == BigInt::from(0) {
                return Err(D::Error::custom("zero denominator"));
            }
            p.add_term(Monomial::from_exponents(&t.exp), BigRational::new(num, den));
        }
        Ok(p)
    }
}
