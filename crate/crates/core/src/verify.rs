//! Exact checks of computed solutions. Every check returns a report; a
//! failing report always carries a witness.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Result;
use crate::exactalg::qlinalg::{self, QMatrix};
use crate::exactalg::{int, Coefficient, PolyMatrix, RationalVector, SparsePolynomial};
use crate::kzsolve::{
    alt_twist, dual_matrix, fundamental_solution, reflection_pairing, reflection_phi, reflection_psi, solution_rows,
    DualMatrix, FundamentalMatrix, SolutionTable, SolveOptions, TwistedSolution,
};
use crate::shapes::{diagram_stats, Numbering, Partition, SpechtBasis, Tabloid};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub lambda: Option<Partition>,
    pub m: Option<i64>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    /// Reported quantity (a constant, a scalar) when the check has one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<Value>,
}

impl CheckReport {
    fn new(check: &str, lambda: Option<&Partition>, m: Option<i64>) -> Self {
        CheckReport {
            check: check.to_string(),
            lambda: lambda.cloned(),
            m,
            verdict: Verdict::Pass,
            witness: None,
            value: None,
        }
    }

    fn fail(mut self, witness: Value) -> Self {
        self.verdict = Verdict::Fail;
        self.witness = Some(witness);
        self
    }

    fn with_value(mut self, value: Value) -> Self {
        self.value = Some(value);
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

impl std::fmt::Display for CheckReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let verdict = if self.passed() { "pass" } else { "FAIL" };
        write!(f, "{verdict:4} {}", self.check)?;
        if let Some(l) = &self.lambda {
            write!(f, " lambda={l}")?;
        }
        if let Some(m) = self.m {
            write!(f, " m={m}")?;
        }
        if let Some(v) = &self.value {
            write!(f, " value={v}")?;
        }
        if let Some(w) = &self.witness {
            write!(f, " witness={w}")?;
        }
        Ok(())
    }
}

fn poly_json(p: &SparsePolynomial) -> Value {
    serde_json::to_value(p).expect("polynomial serializes")
}

fn q_json(c: &Coefficient) -> Value {
    Value::String(c.to_string())
}

/// How a transposition acts on a coordinate vector.
#[derive(Clone, Debug)]
enum LinearOp {
    /// `out[u] = sign * in[target[u]]`.
    Relabel { target: Vec<usize>, negate: bool },
    /// `out = M in`.
    Matrix(QMatrix),
}

impl LinearOp {
    fn apply(&self, v: &[SparsePolynomial]) -> Vec<SparsePolynomial> {
        match self {
            LinearOp::Relabel { target, negate } => target
                .iter()
                .map(|&t| if *negate { -&v[t] } else { v[t].clone() })
                .collect(),
            LinearOp::Matrix(mat) => mat
                .iter()
                .map(|row| {
                    let nvars = v.first().map_or(0, SparsePolynomial::nvars);
                    row.iter()
                        .zip(v)
                        .filter(|(c, _)| !c.is_zero())
                        .fold(SparsePolynomial::zero(nvars), |acc, (c, p)| &acc + &p.scale(c))
                })
                .collect(),
        }
    }
}

/// The transposition operators `s_ij` on some coordinate space of an
/// `S_N`-module.
#[derive(Clone, Debug)]
pub struct KzSystem {
    n: usize,
    ops: HashMap<(usize, usize), LinearOp>,
}

impl KzSystem {
    /// Tabloid coordinates in the given order; `twisted` tensors with the
    /// sign representation.
    pub fn tabloid(n: usize, tabloids: &[Tabloid], twisted: bool) -> KzSystem {
        let index: HashMap<&Tabloid, usize> = tabloids.iter().enumerate().map(|(i, t)| (t, i)).collect();
        let mut ops = HashMap::new();
        for i in 1..=n {
            for j in i + 1..=n {
                let target = tabloids.iter().map(|u| index[&u.act_transposition(i, j)]).collect();
                ops.insert(
                    (i, j),
                    LinearOp::Relabel {
                        target,
                        negate: twisted,
                    },
                );
            }
        }
        KzSystem { n, ops }
    }

    /// Coordinates against `v_T`; `transposed` uses the transposed matrices
    /// (the contragredient action).
    pub fn specht(basis: &SpechtBasis, transposed: bool) -> KzSystem {
        let n = basis.shape.size();
        let mut ops = HashMap::new();
        for i in 1..=n {
            for j in i + 1..=n {
                let mat = basis.transposition_matrix(i, j);
                let mat = if transposed { qlinalg::transpose(&mat) } else { mat };
                ops.insert((i, j), LinearOp::Matrix(mat));
            }
        }
        KzSystem { n, ops }
    }

    /// Reflection representation on `C^N`: transpositions swap coordinates.
    pub fn permutation(n: usize) -> KzSystem {
        let mut ops = HashMap::new();
        for i in 1..=n {
            for j in i + 1..=n {
                let mut target: Vec<usize> = (0..n).collect();
                target.swap(i - 1, j - 1);
                ops.insert((i, j), LinearOp::Relabel { target, negate: false });
            }
        }
        KzSystem { n, ops }
    }

    fn op(&self, i: usize, j: usize) -> &LinearOp {
        &self.ops[&(i.min(j), i.max(j))]
    }

    /// `(s_ij + 1) v`.
    fn plus_one(&self, i: usize, j: usize, v: &[SparsePolynomial]) -> Vec<SparsePolynomial> {
        self.op(i, j).apply(v).iter().zip(v).map(|(a, b)| a + b).collect()
    }
}

/// `∂_i ψ = m Σ_{j≠i} (s_ij + 1) ψ / (z_i - z_j)` for a polynomial vector.
pub fn check_kz_with(name: &str, sys: &KzSystem, psi: &[SparsePolynomial], m: i64) -> CheckReport {
    let report = CheckReport::new(name, None, Some(m));
    let n = sys.n;
    let mc = int(m);
    for i in 1..=n {
        let mut acc: Vec<SparsePolynomial> = psi.iter().map(|p| p.partial_derivative(i - 1)).collect();
        for j in (1..=n).filter(|&j| j != i) {
            let w = sys.plus_one(i, j, psi);
            let lin = SparsePolynomial::diff(n, i - 1, j - 1);
            for (k, wk) in w.iter().enumerate() {
                match wk.exact_divide(&lin) {
                    Ok(q) => acc[k] = &acc[k] - &q.scale(&mc),
                    Err(_) => {
                        return report.fail(json!({
                            "i": i, "j": j, "component": k,
                            "reason": "(s_ij+1)psi not divisible by z_i - z_j",
                        }))
                    }
                }
            }
        }
        if let Some((k, r)) = acc.iter().enumerate().find(|(_, r)| !r.is_zero()) {
            return report.fail(json!({ "i": i, "component": k, "residual": poly_json(r) }));
        }
    }
    report
}

/// Cross-multiplied form of the same system for `P / D`:
/// `(∂_i P·D - P·∂_i D)·Q_i = μ·D·Σ_j ((s_ij+1)P)·Q_i/(z_i - z_j)`,
/// with `Q_i = Π_{j≠i}(z_i - z_j)`.
pub fn check_kz_rational(name: &str, sys: &KzSystem, v: &RationalVector, mu: i64) -> CheckReport {
    let report = CheckReport::new(name, None, Some(mu));
    let n = sys.n;
    let d = &v.denominator;
    let p = &v.numerators;
    let muc = int(mu);
    for i in 1..=n {
        let others: Vec<usize> = (1..=n).filter(|&j| j != i).collect();
        let lin = |j: usize| SparsePolynomial::diff(n, i - 1, j - 1);
        let q_without = |skip: usize| {
            others
                .iter()
                .filter(|&&j| j != skip)
                .fold(SparsePolynomial::one(n), |acc, &j| &acc * &lin(j))
        };
        let q = q_without(0);
        let dd = d.partial_derivative(i - 1);
        let mut rhs = vec![SparsePolynomial::zero(n); p.len()];
        for &j in &others {
            let w = sys.plus_one(i, j, p);
            let qj = q_without(j);
            for (r, wk) in rhs.iter_mut().zip(&w) {
                *r = &*r + &(wk * &qj);
            }
        }
        for (k, pk) in p.iter().enumerate() {
            let lhs = &(&(&pk.partial_derivative(i - 1) * d) - &(pk * &dd)) * &q;
            let diff = &lhs - &(d * &rhs[k]).scale(&muc);
            if !diff.is_zero() {
                return report.fail(json!({ "i": i, "component": k, "residual": poly_json(&diff) }));
            }
        }
    }
    report
}

pub fn check_kz(s: &SolutionTable) -> CheckReport {
    let tabs: Vec<Tabloid> = s.components.keys().cloned().collect();
    let psi: Vec<SparsePolynomial> = s.components.values().cloned().collect();
    let sys = KzSystem::tabloid(s.nvars(), &tabs, false);
    let mut r = check_kz_with("kz", &sys, &psi, s.m);
    r.lambda = Some(s.lambda.clone());
    r
}

/// Twisted system with parameter `-m` for the output of `alt_twist`.
pub fn check_kz_twisted(t: &TwistedSolution) -> CheckReport {
    let sys = KzSystem::tabloid(t.lambda.size(), &t.tabloids, true);
    let mut r = check_kz_rational("kz-twisted", &sys, &t.vector.cancel_differences(), t.m);
    r.lambda = Some(t.lambda.clone());
    r
}

/// Every raising operator kills the solution.
pub fn check_primitive(s: &SolutionTable) -> CheckReport {
    let report = CheckReport::new("primitive", Some(&s.lambda), Some(s.m));
    let n = s.nvars();
    for level in 1..s.lambda.rows() {
        let mut sums: BTreeMap<Tabloid, SparsePolynomial> = BTreeMap::new();
        for (u, p) in &s.components {
            for target in u.raise_row(level).expect("level in range") {
                let slot = sums.entry(target).or_insert_with(|| SparsePolynomial::zero(n));
                *slot = &*slot + p;
            }
        }
        if let Some((t, r)) = sums.iter().find(|(_, r)| !r.is_zero()) {
            return report.fail(json!({ "level": level, "target": t, "residual": poly_json(r) }));
        }
    }
    report
}

/// Homogeneity, degree, integrality, and the leading-term law when the
/// cycle is that of the row-reading tableau.
pub fn check_shape(s: &SolutionTable) -> CheckReport {
    let report = CheckReport::new("shape", Some(&s.lambda), Some(s.m));
    let stats = match diagram_stats(&s.lambda, s.m) {
        Ok(st) => st,
        Err(e) => return report.fail(json!({ "reason": e.to_string() })),
    };
    let degree = stats.solution_degree;
    for (u, p) in &s.components {
        if p.is_zero() {
            continue;
        }
        if p.homogeneous_degree().map(i64::from) != Some(degree) {
            return report.fail(json!({
                "component": u, "reason": "not homogeneous of the expected degree",
                "expected": degree, "found": p.total_degree(),
            }));
        }
        if !p.is_integral() {
            return report.fail(json!({ "component": u, "reason": "non-integer coefficient" }));
        }
    }
    if s.components.values().all(SparsePolynomial::is_zero) {
        return report.fail(json!({ "reason": "solution vanishes identically" }));
    }
    let t = Numbering::identity(&s.lambda);
    if s.cycle != t.tabloid() {
        return report.with_value(json!({ "degree": degree }));
    }
    match leading_term_law(&t, s.m, &s.components[&t.tabloid()]) {
        Ok(v) => report.with_value(json!({ "degree": degree, "leading": v })),
        Err(w) => report.fail(w),
    }
}

/// Exponent of `z_{T(b)}` in the leading monomial is `m(T(b)-1+c(b)-r(b))`.
fn leading_term_law(t: &Numbering, m: i64, entry: &SparsePolynomial) -> std::result::Result<Value, Value> {
    let n = t.shape().size();
    let (mono, coeff) = entry
        .leading_term()
        .map_err(|_| json!({ "reason": "diagonal entry vanishes" }))?;
    let exps = mono.exponents(n).to_vec();
    for b in t.shape().boxes() {
        let k = t.label(b);
        let expected = m * (k as i64 - 1 + b.content());
        if exps[k - 1] as i64 != expected {
            return Err(json!({
                "reason": "leading exponent", "label": k, "expected": expected,
                "exponents": exps,
            }));
        }
    }
    if !coeff.is_integer() || coeff.is_zero() {
        return Err(json!({ "reason": "leading coefficient", "coefficient": q_json(&coeff) }));
    }
    Ok(json!({ "exponents": exps, "coefficient": q_json(&coeff) }))
}

/// `ψ_{gU,gV}(z) = ψ_{U,V}(z_{g(1)}, …, z_{g(N)})` for `perm[k-1] = g(k)`.
/// Missing rows for relabeled cycles are computed.
pub fn check_equivariance(f: &FundamentalMatrix, perm: &[usize], opts: &SolveOptions) -> Result<CheckReport> {
    let report = CheckReport::new("equivariance", Some(&f.lambda), Some(f.m)).with_value(json!({ "g": perm }));
    let mut full = f.clone();
    let moved: Vec<Tabloid> = f.cycles.iter().map(|u| u.act(perm)).collect();
    full.extend_cycles(&moved, opts)?;
    let shift: Vec<usize> = perm.iter().map(|k| k - 1).collect();
    for (r, u) in f.cycles.iter().enumerate() {
        for (c, v) in f.forms.iter().enumerate() {
            let lhs = full.entry(&u.act(perm), &v.act(perm)).expect("row computed");
            let rhs = f.table[r][c].permute_vars(&shift);
            if *lhs != rhs {
                return Ok(report.fail(json!({
                    "cycle": u, "form": v, "residual": poly_json(&(lhs - &rhs)),
                })));
            }
        }
    }
    Ok(report)
}

/// Rank of the fundamental matrix over the rational functions.
pub fn check_rank(f: &FundamentalMatrix) -> CheckReport {
    let report = CheckReport::new("rank", Some(&f.lambda), Some(f.m));
    let rank = f.matrix.rank();
    if rank != f.dim() {
        return report.fail(json!({ "rank": rank, "expected": f.dim() }));
    }
    report.with_value(json!(rank))
}

/// Cycles of non-standard tabloids against the combination of standard
/// ones given by the coordinates of `[e_U]` in the quotient.
pub fn check_straightening(lambda: &Partition, m: i64, opts: &SolveOptions) -> Result<CheckReport> {
    let report = CheckReport::new("straightening", Some(lambda), Some(m));
    let f = fundamental_solution(lambda, m, opts)?;
    let basis = SpechtBasis::new(lambda);
    let d = basis.dim();
    // [e_U] pairs with v_S as the coefficient of U in v_S
    let at = qlinalg::transpose(&basis.standard_matrix());
    let others: Vec<Tabloid> = basis
        .tabloids
        .iter()
        .filter(|u| f.cycle_index(u).is_none())
        .cloned()
        .collect();
    let rows = solution_rows(lambda, m, &others, opts)?;
    let n = lambda.size();
    let mut decompositions = Vec::new();
    for (u, row) in others.iter().zip(&rows) {
        let ui = basis.tabloid_index(u).expect("tabloid of shape");
        let b: Vec<Coefficient> = basis.vectors.iter().map(|v| int(v[ui])).collect();
        let Some(c) = qlinalg::solve(&at, &b) else {
            return Ok(report.fail(json!({ "cycle": u, "reason": "no quotient coordinates" })));
        };
        for (k, got) in row.iter().enumerate() {
            let mut expect = SparsePolynomial::zero(n);
            for t in 0..d {
                if !c[t].is_zero() {
                    expect = &expect + &f.table[t][k].scale(&c[t]);
                }
            }
            if *got != expect {
                return Ok(report.fail(json!({
                    "cycle": u, "form": f.forms[k], "residual": poly_json(&(got - &expect)),
                })));
            }
        }
        decompositions.push(json!({ "cycle": u, "coefficients": c.iter().map(q_json).collect::<Vec<_>>() }));
    }
    Ok(report.with_value(Value::Array(decompositions)))
}

/// Result of dividing the determinant by `Π z_ij^{2m d₊}`.
pub fn det_constant(f: &FundamentalMatrix, det: &SparsePolynomial) -> std::result::Result<Coefficient, Value> {
    let stats = diagram_stats(&f.lambda, f.m).map_err(|e| json!({ "reason": e.to_string() }))?;
    let n = f.lambda.size();
    let e = 2 * f.m as u32 * stats.d_plus as u32;
    let v = crate::exactalg::vandermonde_power(n, e);
    let q = det
        .exact_divide(&v)
        .map_err(|_| json!({ "reason": "not divisible by the expected power", "exponent": e }))?;
    match q.as_constant() {
        Some(c) if !c.is_zero() => Ok(c),
        Some(_) => Err(json!({ "reason": "determinant vanishes" })),
        None => Err(json!({ "reason": "quotient is not constant", "quotient": poly_json(&q) })),
    }
}

pub fn check_det(f: &FundamentalMatrix) -> Result<CheckReport> {
    let report = CheckReport::new("det", Some(&f.lambda), Some(f.m));
    let det = f.matrix.det()?;
    Ok(match det_constant(f, &det) {
        Ok(c) => report.with_value(json!({ "constant": q_json(&c) })),
        Err(w) => report.fail(w),
    })
}

/// `Σ_{i<j} s_ij` acts on every polytabloid as `Σ_b (c(b) - r(b))`.
pub fn check_frobenius(lambda: &Partition) -> CheckReport {
    let report = CheckReport::new("frobenius", Some(lambda), None);
    let n = lambda.size();
    if n > 6 {
        return report.fail(json!({ "reason": "brute force limited to N <= 6" }));
    }
    let basis = SpechtBasis::new(lambda);
    let scalar = crate::shapes::content_sum(lambda);
    for (k, v) in basis.vectors.iter().enumerate() {
        let mut out = vec![0i64; v.len()];
        for i in 1..=n {
            for j in i + 1..=n {
                for (u, &x) in v.iter().enumerate() {
                    if x != 0 {
                        let su = basis.tabloids[u].act_transposition(i, j);
                        out[basis.tabloid_index(&su).expect("same shape")] += x;
                    }
                }
            }
        }
        if out.iter().zip(v).any(|(o, x)| *o != scalar * x) {
            return report
                .fail(json!({ "tableau": basis.tableaux[k].rows(), "image": out, "expected_scalar": scalar }));
        }
    }
    report.with_value(json!(scalar))
}

/// `Φ_{-m}ᵀ Φ_m = I` and every dual row solves the system with `-m`.
pub fn check_dual(f: &FundamentalMatrix, d: &DualMatrix) -> Result<CheckReport> {
    let report = CheckReport::new("dual", Some(&f.lambda), Some(f.m));
    let product = d.adjugate.mul(&f.matrix)?;
    let scaled = PolyMatrix::identity(f.dim(), f.lambda.size()).scale(&d.det);
    if product != scaled {
        return Ok(report.fail(json!({ "reason": "adj * Phi != det * I" })));
    }
    let sys = KzSystem::specht(&SpechtBasis::new(&f.lambda), true);
    for k in 0..f.dim() {
        let r = check_kz_rational("dual-row", &sys, &d.row(k).cancel_differences(), -f.m);
        if !r.passed() {
            return Ok(report.fail(json!({ "row": k, "detail": r.witness })));
        }
    }
    Ok(report)
}

/// Rows of the fundamental matrix solve the system in `v_T` coordinates.
pub fn check_matrix_rows(f: &FundamentalMatrix) -> CheckReport {
    let report = CheckReport::new("kz-specht", Some(&f.lambda), Some(f.m));
    let sys = KzSystem::specht(&SpechtBasis::new(&f.lambda), false);
    for k in 0..f.dim() {
        let r = check_kz_with("kz-specht", &sys, f.matrix.row(k), f.m);
        if !r.passed() {
            return report.fail(json!({ "row": k, "detail": r.witness }));
        }
    }
    report
}

/// `⟨ψ_a, φ_b⟩ = δ_ab / m` as constant polynomials, and `Σ_a ψ_a = 0`.
pub fn check_pairing(n: usize, m: i64) -> Result<CheckReport> {
    let lambda = Partition::new(vec![n - 1, 1])?;
    let report = CheckReport::new("pairing", Some(&lambda), Some(m));
    let psi = reflection_psi(n, m)?;
    let phi = reflection_phi(n, m)?;
    let mut total = vec![SparsePolynomial::zero(n); n];
    for s in &psi {
        for (t, c) in total.iter_mut().zip(&s.vector.numerators) {
            *t = &*t + c;
        }
    }
    if let Some((b, r)) = total.iter().enumerate().find(|(_, r)| !r.is_zero()) {
        return Ok(report.fail(json!({ "reason": "sum of psi_a", "component": b + 1, "residual": poly_json(r) })));
    }
    let inv_m = Coefficient::one() / int(m);
    let mut matrix = Vec::new();
    for a in 0..n - 1 {
        let mut row = Vec::new();
        for b in 0..n - 1 {
            let pr = reflection_pairing(&psi[a].vector, &phi[b].vector);
            let value = pr.to_polynomial().ok().and_then(|p| p.as_constant());
            let expected = if a == b { inv_m.clone() } else { Coefficient::zero() };
            match value {
                Some(v) if v == expected => row.push(q_json(&v)),
                other => {
                    return Ok(report.fail(json!({
                        "a": a + 1, "b": b + 1,
                        "value": other.map(|v| q_json(&v)),
                        "expected": q_json(&expected),
                    })))
                }
            }
        }
        matrix.push(Value::Array(row));
    }
    Ok(report.with_value(Value::Array(matrix)))
}

/// Reflection solutions of both families solve their systems.
pub fn check_reflection(n: usize, m: i64) -> Result<CheckReport> {
    let lambda = Partition::new(vec![n - 1, 1])?;
    let report = CheckReport::new("reflection", Some(&lambda), Some(m));
    let sys = KzSystem::permutation(n);
    for s in reflection_psi(n, m)? {
        let r = check_kz_with("reflection-psi", &sys, &s.vector.numerators, m);
        if !r.passed() {
            return Ok(report.fail(json!({ "psi": s.index, "detail": r.witness })));
        }
        let total = s
            .vector
            .numerators
            .iter()
            .fold(SparsePolynomial::zero(n), |a, b| &a + b);
        if !total.is_zero() {
            return Ok(report.fail(json!({ "psi": s.index, "reason": "components do not sum to zero" })));
        }
    }
    for s in reflection_phi(n, m)? {
        let r = check_kz_rational("reflection-phi", &sys, &s.vector.cancel_differences(), -m);
        if !r.passed() {
            return Ok(report.fail(json!({ "phi": s.index, "detail": r.witness })));
        }
    }
    Ok(report)
}

/// Every check that applies to `(λ, m)`.
pub fn run_suite(lambda: &Partition, m: i64, opts: &SolveOptions) -> Result<Vec<CheckReport>> {
    let f = fundamental_solution(lambda, m, opts)?;
    let n = lambda.size();
    let mut out = Vec::new();
    for s in f.solutions() {
        let tag = |mut r: CheckReport| {
            r.check = format!("{} cycle={}", r.check, s.cycle);
            r
        };
        out.push(tag(check_kz(&s)));
        out.push(tag(check_primitive(&s)));
        out.push(tag(check_shape(&s)));
        out.push(tag(check_kz_twisted(&alt_twist(&s))));
    }
    out.push(check_matrix_rows(&f));
    for i in 1..n {
        let mut g: Vec<usize> = (1..=n).collect();
        g.swap(i - 1, i);
        out.push(check_equivariance(&f, &g, opts)?);
    }
    out.push(check_rank(&f));
    out.push(check_det(&f)?);
    out.push(check_straightening(lambda, m, opts)?);
    if n <= 6 {
        out.push(check_frobenius(lambda));
    }
    let dual = dual_matrix(&f)?;
    out.push(check_dual(&f, &dual)?);
    if lambda.is_hook_reflection() {
        out.push(check_reflection(n, m)?);
        out.push(check_pairing(n, m)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn suite_passes_for_two_one() {
        let reports = run_suite(&p(&[2, 1]), 1, &SolveOptions::default()).unwrap();
        for r in &reports {
            assert!(r.passed(), "{r}");
        }
        let det = reports.iter().find(|r| r.check == "det").unwrap();
        assert_eq!(det.value.as_ref().unwrap()["constant"], "-2");
    }

    #[test]
    fn frobenius_scalars() {
        assert_eq!(check_frobenius(&p(&[2, 1])).value, Some(json!(0)));
        assert_eq!(check_frobenius(&p(&[3])).value, Some(json!(3)));
        assert_eq!(check_frobenius(&p(&[1, 1, 1])).value, Some(json!(-3)));
    }

    #[test]
    fn mutation_is_caught() {
        let f = fundamental_solution(&p(&[2, 1]), 1, &SolveOptions::default()).unwrap();
        let mut s = f.solution(0);
        let key = s.components.keys().next().unwrap().clone();
        let comp = s.components[&key].clone();
        let (mono, _) = comp.leading_term().unwrap();
        s.components.insert(key, comp.perturbed(mono, int(1)));
        let r = check_kz(&s);
        assert!(!r.passed());
        assert!(r.witness.is_some());
        assert!(!check_primitive(&s).passed());
    }

    #[test]
    fn report_json_shape() {
        let r = check_frobenius(&p(&[2, 1]));
        let v = r.to_json();
        assert_eq!(v["check"], "frobenius");
        assert_eq!(v["verdict"], "pass");
        assert_eq!(v["lambda"], json!([2, 1]));
    }
}
