//! Properties shared by the proptest suite and the acceptance harness.
#![allow(dead_code, clippy::needless_range_loop)]

use kz_core::exactalg::{
    det_adjugate, normalize_factored, Atom, Coefficient, FactoredSum, FactoredTerm, Monomial, PolyMatrix,
    SparsePolynomial,
};
use kz_core::kzsolve::{cycle_integrand, fundamental_solution, SolveOptions};
use kz_core::residue::{iterated_residue, residue_at, residue_plan, ResiduePlan, ResidueStep, VariableRoster};
use kz_core::shapes::{tabloids, Numbering, Partition};
use kz_core::verify::{check_equivariance, check_kz, check_primitive};
use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed, TestCaseError};

/// Seed for every randomized property run.
pub const SEED: u64 = 0x4b5a_2026;

pub fn config(cases: u32) -> Config {
    Config {
        cases,
        rng_seed: RngSeed::Fixed(SEED),
        failure_persistence: None,
        ..Config::default()
    }
}

pub fn q(n: i64) -> Coefficient {
    Coefficient::from_integer(BigInt::from(n))
}

pub const NV: usize = 3;

pub fn poly() -> impl Strategy<Value = SparsePolynomial> {
    prop::collection::vec((prop::array::uniform3(0u16..4), -6i64..=6), 0..6).prop_map(|terms| {
        let mut p = SparsePolynomial::zero(NV);
        for (e, c) in terms {
            p.add_term(Monomial::from_exponents(&e), q(c));
        }
        p
    })
}

pub fn nonzero_poly() -> impl Strategy<Value = SparsePolynomial> {
    poly().prop_filter("non-zero", |p| !p.is_zero())
}

pub fn ring_axioms(a: &SparsePolynomial, b: &SparsePolynomial, c: &SparsePolynomial) -> Result<(), TestCaseError> {
    prop_assert_eq!(&(a + b), &(b + a));
    prop_assert_eq!(&(a * b), &(b * a));
    prop_assert_eq!(&(&(a * b) * c), &(a * &(b * c)));
    prop_assert_eq!(&(a * &(b + c)), &(&(a * b) + &(a * c)));
    let same = a.clone();
    prop_assert!((a - &same).is_zero());
    let leibniz = &(&a.partial_derivative(0) * b) + &(a * &b.partial_derivative(0));
    prop_assert_eq!((a * b).partial_derivative(0), leibniz);
    Ok(())
}

pub fn exact_division(a: &SparsePolynomial, b: &SparsePolynomial) -> Result<(), TestCaseError> {
    let prod = a * b;
    prop_assert_eq!(prod.exact_divide(b).unwrap(), a.clone());
    let (quot, rem) = (a + &SparsePolynomial::one(NV)).div_rem(b).unwrap();
    prop_assert_eq!(&(&quot * b) + &rem, a + &SparsePolynomial::one(NV));
    Ok(())
}

pub fn matrix3() -> impl Strategy<Value = PolyMatrix> {
    prop::collection::vec(poly(), 9)
        .prop_map(|e| PolyMatrix::from_rows(e.chunks(3).map(|r| r.to_vec()).collect()).unwrap())
}

pub fn adjugate_identity(m: &PolyMatrix) -> Result<(), TestCaseError> {
    let m = m.clone();
    let (det, adj) = det_adjugate(&m).unwrap();
    let scaled = PolyMatrix::identity(3, NV).scale(&det);
    let left = m.mul(&adj).unwrap();
    let right = adj.mul(&m).unwrap();
    for i in 0..3 {
        for j in 0..3 {
            prop_assert_eq!(
                left[(i, j)].clone().with_nvars(NV),
                scaled[(i, j)].clone().with_nvars(NV)
            );
            prop_assert_eq!(
                right[(i, j)].clone().with_nvars(NV),
                scaled[(i, j)].clone().with_nvars(NV)
            );
        }
    }
    Ok(())
}

/// Exponents of `(t - z_k)` for `k = 1..=4`, and an integer coefficient.
pub fn single_var_form() -> impl Strategy<Value = (Vec<i32>, i64)> {
    (prop::collection::vec(-3i32..=2, 4), -4i64..=4).prop_filter("non-zero", |(_, c)| *c != 0)
}

pub fn build_form(exps: &[i32], c: i64) -> FactoredSum {
    let t = Atom::Var(0);
    let mut term = FactoredTerm::constant(q(c));
    for (k, &e) in exps.iter().enumerate() {
        term = term.times(t, Atom::Point(k as u8), e);
    }
    FactoredSum::from_term(term)
}

fn residue_or_zero(f: &FactoredSum, center: Atom) -> FactoredSum {
    residue_at(f, 0, center).unwrap_or_else(|_| FactoredSum::zero())
}

pub fn global_residue_theorem(exps: &[i32], c: i64) -> Result<(), TestCaseError> {
    prop_assume!(exps.iter().sum::<i32>() <= -2);
    let f = build_form(exps, c);
    let mut total = FactoredSum::zero();
    for k in 0..exps.len() {
        total.add_sum(&residue_or_zero(&f, Atom::Point(k as u8)));
    }
    // clear denominators with a large Vandermonde factor before comparing
    let mut clear = FactoredTerm::one();
    for i in 0..4u8 {
        for j in i + 1..4 {
            clear = clear.times(Atom::Point(i), Atom::Point(j), 12);
        }
    }
    prop_assert!(normalize_factored(&total.mul_term(&clear), 4).unwrap().is_zero());
    Ok(())
}

pub fn residue_linearity(a: (&[i32], i64), b: (&[i32], i64), alpha: i64, beta: i64) -> Result<(), TestCaseError> {
    let f = build_form(a.0, a.1);
    let g = build_form(b.0, b.1);
    let mut comb = f.scale(&q(alpha));
    comb.add_sum(&g.scale(&q(beta)));
    for k in 0..4u8 {
        let center = Atom::Point(k);
        let lhs = residue_or_zero(&comb, center);
        let mut rhs = residue_or_zero(&f, center).scale(&q(alpha));
        rhs.add_sum(&residue_or_zero(&g, center).scale(&q(beta)));
        prop_assert_eq!(lhs, rhs);
    }
    Ok(())
}

pub fn residue_integrality(exps: &[i32], c: i64) -> Result<(), TestCaseError> {
    let f = build_form(exps, c);
    for k in 0..4u8 {
        prop_assert!(residue_or_zero(&f, Atom::Point(k)).all_integral());
    }
    Ok(())
}

/// Permute same-level steps of a cycle plan; the integral does not change.
pub fn level_order_independence(
    shape: &[usize],
    cycle_idx: usize,
    form_idx: usize,
    swap_seed: usize,
) -> Result<(), TestCaseError> {
    let lambda = Partition::new(shape.to_vec()).unwrap();
    let tabs = tabloids(shape);
    let cycle: Numbering = tabs[cycle_idx % tabs.len()].representative().unwrap();
    let form: Numbering = tabs[form_idx % tabs.len()].representative().unwrap();
    let integrand = cycle_integrand(&lambda, 1, &form).unwrap();
    let plan = residue_plan(&cycle);
    let roster = VariableRoster::new(&lambda);
    let mut steps: Vec<ResidueStep> = plan.steps().to_vec();
    let mut start = 0;
    let mut seed = swap_seed;
    while start < steps.len() {
        let level = roster.entry(steps[start].var).1;
        let end = (start..steps.len())
            .find(|&i| roster.entry(steps[i].var).1 != level)
            .unwrap_or(steps.len());
        let block = &mut steps[start..end];
        if block.len() > 1 {
            block.rotate_left(seed % block.len());
            seed /= block.len();
        }
        start = end;
    }
    let a = normalize_factored(&iterated_residue(&integrand, &plan).unwrap(), lambda.size()).unwrap();
    let b = normalize_factored(
        &iterated_residue(&integrand, &ResiduePlan::new(steps)).unwrap(),
        lambda.size(),
    )
    .unwrap();
    prop_assert_eq!(a, b);
    Ok(())
}

/// A random single-coefficient mutation of a passing solution fails the
/// checks.
pub fn mutation_soundness(
    shape: &[usize],
    row: usize,
    comp: usize,
    exps: [u16; 3],
    delta: i64,
) -> Result<(), TestCaseError> {
    prop_assume!(delta != 0);
    let lambda = Partition::new(shape.to_vec()).unwrap();
    let n = lambda.size();
    let opts = SolveOptions::default();
    let f = fundamental_solution(&lambda, 1, &opts).unwrap();
    let row = row % f.dim();
    let mut s = f.solution(row);
    prop_assert!(check_kz(&s).passed());
    prop_assert!(check_primitive(&s).passed());
    let key = s.components.keys().nth(comp % s.components.len()).unwrap().clone();
    let mut e = [0u16; 9];
    e[..3.min(n)].copy_from_slice(&exps[..3.min(n)]);
    let mutated = s.components[&key].perturbed(Monomial::from_exponents(&e[..n]), q(delta));
    s.components.insert(key.clone(), mutated.clone());
    let kz = check_kz(&s);
    prop_assert!(!kz.passed());
    prop_assert!(kz.witness.is_some());
    if lambda.rows() > 1 {
        prop_assert!(!check_primitive(&s).passed());
    }
    let mut g = f.clone();
    let c = g.form_index(&key).unwrap();
    g.table[row][c] = mutated;
    let mut swap: Vec<usize> = (1..=n).collect();
    swap.swap(0, 1);
    let fixed = key.act(&swap) == key && f.cycles[row].act(&swap) == f.cycles[row];
    if !fixed || e[0] != e[1] {
        prop_assert!(!check_equivariance(&g, &swap, &opts).unwrap().passed());
    }
    Ok(())
}

pub const MUTATION_SHAPES: &[&[usize]] = &[&[2, 1], &[3], &[1, 1, 1], &[2, 2], &[3, 1]];
