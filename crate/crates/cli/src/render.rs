//! Text rendering in the `z_ij = z_i - z_j` shorthand.

use kz_core::exactalg::{PolyFraction, SparsePolynomial};
use num_traits::{One, Signed};

/// Pull out every `z_ij` factor; the cofactor is printed expanded.
pub fn poly(p: &SparsePolynomial) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let n = p.nvars();
    let mut rest = p.clone();
    let mut factors = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let zij = SparsePolynomial::diff(n, i, j);
            let mut e = 0;
            while rest.total_degree().unwrap_or(0) > 0 {
                match rest.div_rem(&zij) {
                    Ok((q, r)) if r.is_zero() => {
                        rest = q;
                        e += 1;
                    }
                    _ => break,
                }
            }
            match e {
                0 => {}
                1 => factors.push(format!("z{}{}", i + 1, j + 1)),
                _ => factors.push(format!("z{}{}^{}", i + 1, j + 1, e)),
            }
        }
    }
    let product = factors.join("*");
    match rest.as_constant() {
        Some(c) if factors.is_empty() => c.to_string(),
        Some(c) if c.is_one() => product,
        Some(c) if (-c.clone()).is_one() => format!("-{product}"),
        Some(c) if c.is_negative() || !c.is_integer() => format!("({c})*{product}"),
        Some(c) => format!("{c}*{product}"),
        None if factors.is_empty() => rest.to_string(),
        None => format!("{product}*({rest})"),
    }
}

pub fn fraction(f: &PolyFraction) -> String {
    let wrap = |s: String| if s.contains(' ') { format!("({s})") } else { s };
    let den = poly(&f.den);
    if den == "1" {
        poly(&f.num)
    } else {
        format!("{} / {}", wrap(poly(&f.num)), wrap(den))
    }
}
