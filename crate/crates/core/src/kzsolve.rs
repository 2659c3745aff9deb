//! Integrands, skew-symmetrized cycle integrals and the fundamental matrix,
//! with the reflection-representation bases, the dual matrix and the
//! sign twist.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{KzError, Result};
use crate::exactalg::{
    det_adjugate, normalize_factored, Atom, Coefficient, FactoredSum, FactoredTerm, PolyFraction, PolyMatrix,
    RationalVector, SparsePolynomial, MAX_POINTS,
};
use crate::residue::{iterated_residue, residue_at, residue_plan, VariableRoster};
use crate::shapes::{diagram_stats, level_profile, permutations_with_sign, Numbering, Partition, SpechtBasis, Tabloid};

pub const DEFAULT_BUDGET: u64 = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    pub workers: usize,
    /// Cap on `d_λ·|G_λ|`.
    pub budget: u64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            workers: 1,
            budget: DEFAULT_BUDGET,
        }
    }
}

fn point(k: usize) -> Atom {
    Atom::Point((k - 1) as u8)
}

/// `|G_λ| = Π_{s≥1} m_s!`.
pub fn symmetry_order(lambda: &Partition) -> u64 {
    let (profile, _) = level_profile(lambda);
    profile
        .iter()
        .skip(1)
        .map(|&k| (1..=k as u64).product::<u64>())
        .product()
}

/// Refuse instances that are too large to integrate.
pub fn check_guard(lambda: &Partition, opts: &SolveOptions) -> Result<()> {
    let n = lambda.size();
    if n > MAX_POINTS {
        return Err(KzError::ResourceGuard(format!(
            "{lambda} has N = {n} points, at most {MAX_POINTS} supported"
        )));
    }
    let (_, d) = level_profile(lambda);
    let cost = d as u64 * symmetry_order(lambda);
    if cost > opts.budget {
        return Err(KzError::ResourceGuard(format!(
            "{lambda} needs d*|G| = {cost} elementary residues per entry, budget is {}",
            opts.budget
        )));
    }
    Ok(())
}

fn require_positive(m: i64) -> Result<()> {
    match m {
        0 => Err(KzError::ZeroParameter),
        m if m < 0 => Err(KzError::Invalid(format!(
            "integrals are defined for m > 0 (got {m}); use the dual matrix for negative m"
        ))),
        _ => Ok(()),
    }
}

/// The multivalued factor `Φ_λ^m` as a single factored term.
pub fn master_form(lambda: &Partition, m: i64) -> Result<FactoredSum> {
    require_positive(m)?;
    let m = m as i32;
    let n = lambda.size();
    let roster = VariableRoster::new(lambda);
    let boxes = lambda.boxes();
    let mut term = FactoredTerm::one();
    for i in 1..=n {
        for j in i + 1..=n {
            term = term.times(point(i), point(j), 2 * m);
        }
    }
    for s in 1..lambda.rows() {
        let level: Vec<_> = boxes.iter().filter(|b| b.row > s).collect();
        for (k, &&b) in level.iter().enumerate() {
            for &&b2 in &level[k + 1..] {
                term = term.times(roster.atom(b, s), roster.atom(b2, s), 2 * m);
            }
        }
        for &b in boxes.iter().filter(|b| b.row > s + 1) {
            for &b2 in &level {
                term = term.times(roster.atom(b, s + 1), roster.atom(*b2, s), -m);
            }
        }
    }
    for &b in boxes.iter().filter(|b| b.row > 1) {
        for k in 1..=n {
            term = term.times(roster.atom(b, 1), point(k), -m);
        }
    }
    Ok(FactoredSum::from_term(term))
}

/// `φ_T`: the chain of simple poles leading each box down to its label.
pub fn tableau_form(t: &Numbering) -> FactoredSum {
    let roster = VariableRoster::new(t.shape());
    let mut term = FactoredTerm::one();
    for b in t.shape().boxes() {
        if b.row < 2 {
            continue;
        }
        term = term.times(roster.atom(b, 1), point(t.label(b)), -1);
        for s in 1..b.row - 1 {
            term = term.times(roster.atom(b, s + 1), roster.atom(b, s), -1);
        }
    }
    FactoredSum::from_term(term)
}

/// Elements of `G_λ` as variable relabelings, with their signs.
fn symmetry_group(roster: &VariableRoster) -> Vec<(Vec<u16>, i64)> {
    let levels: Vec<Vec<u16>> = (1..=roster.levels()).map(|s| roster.level(s)).collect();
    let mut out = vec![((0..roster.len() as u16).collect::<Vec<u16>>(), 1i64)];
    for ids in &levels {
        let perms = permutations_with_sign(ids.len());
        let mut next = Vec::with_capacity(out.len() * perms.len());
        for (map, sign) in &out {
            for (p, s) in &perms {
                let mut map = map.clone();
                for (a, &b) in p.iter().enumerate() {
                    map[ids[a] as usize] = ids[b];
                }
                next.push((map, sign * s));
            }
        }
        out = next;
    }
    out
}

/// Skew-symmetrized integrand `Φ^m Σ_g φ_T∘g`, before taking residues. The change of
/// variables by `g` multiplies `dt` by `sign(g)`, which cancels the sign
/// carried by the cycle, so the function-level sum is unsigned.
pub fn cycle_integrand(lambda: &Partition, m: i64, form: &Numbering) -> Result<FactoredSum> {
    let master = master_form(lambda, m)?;
    let phi = tableau_form(form);
    let roster = VariableRoster::new(lambda);
    let mut sum = FactoredSum::zero();
    for (map, _) in symmetry_group(&roster) {
        sum.add_sum(&phi.map_atoms(|a| match a {
            Atom::Var(v) => Atom::Var(map[v as usize]),
            p => p,
        }));
    }
    Ok(master.mul(&sum))
}

fn integrate(lambda: &Partition, m: i64, cycle: &Numbering, form: &Numbering) -> Result<SparsePolynomial> {
    let integrand = cycle_integrand(lambda, m, form)?;
    let res = iterated_residue(&integrand, &residue_plan(cycle))?;
    Ok(normalize_factored(&res, lambda.size())?)
}

fn representative(lambda: &Partition, u: &Tabloid) -> Result<Numbering> {
    if u.shape() != lambda.parts() {
        return Err(crate::error::ShapeError::ShapeMismatch {
            expected: lambda.parts().to_vec(),
            found: u.shape(),
        }
        .into());
    }
    Ok(u.representative()?)
}

/// Component at `e_form` of the solution integrated over the cycle of
/// `cycle`.
pub fn solve_component(lambda: &Partition, m: i64, cycle: &Tabloid, form: &Tabloid) -> Result<SparsePolynomial> {
    check_guard(lambda, &SolveOptions::default())?;
    integrate(
        lambda,
        m,
        &representative(lambda, cycle)?,
        &representative(lambda, form)?,
    )
}

/// Same, with explicit numberings (any representatives of the tabloids).
pub fn solve_component_with(
    lambda: &Partition,
    m: i64,
    cycle: &Numbering,
    form: &Numbering,
) -> Result<SparsePolynomial> {
    integrate(lambda, m, cycle, form)
}

/// One solution: its components in the tabloid basis.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SolutionTable {
    pub lambda: Partition,
    pub m: i64,
    pub cycle: Tabloid,
    pub components: BTreeMap<Tabloid, SparsePolynomial>,
}

impl SolutionTable {
    pub fn component(&self, u: &Tabloid) -> Option<&SparsePolynomial> {
        self.components.get(u)
    }

    pub fn nvars(&self) -> usize {
        self.lambda.size()
    }
}

fn with_pool<T: Send, F: FnOnce() -> T + Send>(workers: usize, f: F) -> Result<T> {
    if workers <= 1 {
        return Ok(f());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| KzError::Invalid(format!("cannot start worker pool: {e}")))?;
    Ok(pool.install(f))
}

/// Rows of the table for the given cycles, each over all tabloids.
pub fn solution_rows(
    lambda: &Partition,
    m: i64,
    cycles: &[Tabloid],
    opts: &SolveOptions,
) -> Result<Vec<Vec<SparsePolynomial>>> {
    require_positive(m)?;
    check_guard(lambda, opts)?;
    let forms = crate::shapes::tabloids(lambda.parts());
    let form_reps: Vec<Numbering> = forms.iter().map(|u| representative(lambda, u)).collect::<Result<_>>()?;
    let cycle_reps: Vec<Numbering> = cycles
        .iter()
        .map(|u| representative(lambda, u))
        .collect::<Result<_>>()?;
    let tasks: Vec<(usize, usize)> = (0..cycles.len())
        .flat_map(|c| (0..forms.len()).map(move |f| (c, f)))
        .collect();
    let run = |&(c, f): &(usize, usize)| integrate(lambda, m, &cycle_reps[c], &form_reps[f]);
    let flat: Vec<Result<SparsePolynomial>> = with_pool(opts.workers, || {
        if opts.workers <= 1 {
            tasks.iter().map(run).collect()
        } else {
            tasks.par_iter().map(run).collect()
        }
    })?;
    let mut flat = flat.into_iter();
    (0..cycles.len())
        .map(|_| flat.by_ref().take(forms.len()).collect())
        .collect()
}

/// Fundamental matrix together with the tabloid-indexed table it is read
/// from.
#[derive(Clone, Debug)]
pub struct FundamentalMatrix {
    pub lambda: Partition,
    pub m: i64,
    pub degree: i64,
    pub tableaux: Vec<Numbering>,
    /// Cycle tabloids labelling the rows of `table`; the first
    /// `tableaux.len()` are the standard ones.
    pub cycles: Vec<Tabloid>,
    pub forms: Vec<Tabloid>,
    pub table: Vec<Vec<SparsePolynomial>>,
    /// `ψ_{T,T'}`: coordinates of the solution of cycle `T` against `v_{T'}`.
    pub matrix: PolyMatrix,
}

impl FundamentalMatrix {
    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    pub fn cycle_index(&self, u: &Tabloid) -> Option<usize> {
        self.cycles.iter().position(|c| c == u)
    }

    pub fn form_index(&self, u: &Tabloid) -> Option<usize> {
        self.forms.iter().position(|c| c == u)
    }

    pub fn entry(&self, cycle: &Tabloid, form: &Tabloid) -> Option<&SparsePolynomial> {
        Some(&self.table[self.cycle_index(cycle)?][self.form_index(form)?])
    }

    pub fn solution(&self, row: usize) -> SolutionTable {
        SolutionTable {
            lambda: self.lambda.clone(),
            m: self.m,
            cycle: self.cycles[row].clone(),
            components: self
                .forms
                .iter()
                .cloned()
                .zip(self.table[row].iter().cloned())
                .collect(),
        }
    }

    /// Solutions of the standard cycles.
    pub fn solutions(&self) -> Vec<SolutionTable> {
        (0..self.dim()).map(|r| self.solution(r)).collect()
    }

    /// Add rows for further cycle tabloids.
    pub fn extend_cycles(&mut self, cycles: &[Tabloid], opts: &SolveOptions) -> Result<()> {
        let fresh: Vec<Tabloid> = cycles
            .iter()
            .filter(|u| self.cycle_index(u).is_none())
            .cloned()
            .collect();
        let mut unique = fresh.clone();
        unique.sort();
        unique.dedup();
        let rows = solution_rows(&self.lambda, self.m, &unique, opts)?;
        self.cycles.extend(unique);
        self.table.extend(rows);
        Ok(())
    }

    /// Add rows for every tabloid.
    pub fn complete(&mut self, opts: &SolveOptions) -> Result<()> {
        let all = self.forms.clone();
        self.extend_cycles(&all, opts)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "lambda": self.lambda,
            "m": self.m,
            "degree": self.degree,
            "cycles": self.cycles,
            "forms": self.forms,
            "components": self.table,
            "matrix": self.matrix.to_rows(),
        })
    }
}

/// Coordinates against `v_{T'}` of a tabloid-indexed row.
pub fn specht_coordinates(basis: &SpechtBasis, row: &[SparsePolynomial]) -> Vec<SparsePolynomial> {
    let nvars = row.first().map_or(0, SparsePolynomial::nvars);
    let at_std: Vec<SparsePolynomial> = basis.standard_index.iter().map(|&u| row[u].clone()).collect();
    basis.coordinates_from_standard(&at_std, |terms| {
        terms
            .iter()
            .fold(SparsePolynomial::zero(nvars), |acc, (c, p)| &acc + &p.scale(c))
    })
}

pub fn fundamental_solution(lambda: &Partition, m: i64, opts: &SolveOptions) -> Result<FundamentalMatrix> {
    require_positive(m)?;
    check_guard(lambda, opts)?;
    let basis = SpechtBasis::new(lambda);
    let cycles: Vec<Tabloid> = basis.tableaux.iter().map(Numbering::tabloid).collect();
    let table = solution_rows(lambda, m, &cycles, opts)?;
    let rows: Vec<Vec<SparsePolynomial>> = table.iter().map(|r| specht_coordinates(&basis, r)).collect();
    let matrix = PolyMatrix::from_rows(rows)?;
    let stats = diagram_stats(lambda, m)?;
    Ok(FundamentalMatrix {
        lambda: lambda.clone(),
        m,
        degree: stats.solution_degree,
        tableaux: basis.tableaux.clone(),
        cycles,
        forms: basis.tabloids.clone(),
        table,
        matrix,
    })
}

/// A solution in the reflection representation, in the coordinates
/// `ε_1..ε_N` of `C^N`.
#[derive(Clone, Debug)]
pub struct ReflectionSolution {
    pub n: usize,
    pub m: i64,
    pub index: usize,
    pub vector: RationalVector,
}

/// `ψ_a = Π z_ij^{2m} res_{t=z_a} Π(t-z_i)^{-m} Σ_b ε_b/(t-z_b)`.
pub fn reflection_psi(n: usize, m: i64) -> Result<Vec<ReflectionSolution>> {
    require_positive(m)?;
    if !(2..=MAX_POINTS).contains(&n) {
        return Err(KzError::Invalid(format!(
            "reflection solutions need 2 <= N <= {MAX_POINTS}"
        )));
    }
    let t = Atom::Var(0);
    let mut base = FactoredTerm::one();
    for i in 1..=n {
        for j in i + 1..=n {
            base = base.times(point(i), point(j), 2 * m as i32);
        }
        base = base.times(t, point(i), -m as i32);
    }
    (1..=n)
        .map(|a| {
            let comps = (1..=n)
                .map(|b| {
                    let f = FactoredSum::from_term(base.clone().times(t, point(b), -1));
                    let r = residue_at(&f, 0, point(a))?;
                    Ok(normalize_factored(&r, n)?)
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(ReflectionSolution {
                n,
                m,
                index: a,
                vector: RationalVector::polynomial(comps),
            })
        })
        .collect()
}

/// `φ_a = Π z_ij^{-2m} ∫_{z_a}^{z_N} Π(t-z_i)^m Σ_b ε_b/(t-z_b) dt`.
pub fn reflection_phi(n: usize, m: i64) -> Result<Vec<ReflectionSolution>> {
    require_positive(m)?;
    if !(2..=MAX_POINTS).contains(&n) {
        return Err(KzError::Invalid(format!(
            "reflection solutions need 2 <= N <= {MAX_POINTS}"
        )));
    }
    let nv = n + 1;
    let t = SparsePolynomial::var(nv, n);
    let lin = |i: usize| &t - &SparsePolynomial::var(nv, i - 1);
    let den = crate::exactalg::vandermonde_power(n, 2 * m as u32);
    let primitives: Vec<SparsePolynomial> = (1..=n)
        .map(|b| {
            let mut p = lin(b).pow_u(m as u32 - 1);
            for i in (1..=n).filter(|&i| i != b) {
                p = &p * &lin(i).pow_u(m as u32);
            }
            p.antiderivative(n)
        })
        .collect();
    let at = |p: &SparsePolynomial, k: usize| p.substitute(n, &SparsePolynomial::var(nv, k - 1)).with_nvars(n);
    Ok((1..n)
        .map(|a| ReflectionSolution {
            n,
            m: -m,
            index: a,
            vector: RationalVector {
                numerators: primitives.iter().map(|p| &at(p, n) - &at(p, a)).collect(),
                denominator: den.clone(),
            },
        })
        .collect())
}

/// `Φ_{λ,-m} = adj(Φ)ᵀ / det Φ`, stored as numerators over `det`.
#[derive(Clone, Debug)]
pub struct DualMatrix {
    pub det: SparsePolynomial,
    pub adjugate: PolyMatrix,
    /// `adj(Φ)ᵀ`; row `k` over `det` is the `k`-th dual solution.
    pub numerators: PolyMatrix,
}

impl DualMatrix {
    pub fn entry(&self, i: usize, j: usize) -> PolyFraction {
        PolyFraction {
            num: self.numerators[(i, j)].clone(),
            den: self.det.clone(),
        }
    }

    pub fn row(&self, i: usize) -> RationalVector {
        RationalVector {
            numerators: self.numerators.row(i).to_vec(),
            denominator: self.det.clone(),
        }
    }
}

pub fn dual_matrix(f: &FundamentalMatrix) -> Result<DualMatrix> {
    let (det, adjugate) = det_adjugate(&f.matrix)?;
    if det.is_zero() {
        return Err(KzError::Singular);
    }
    let numerators = adjugate.transpose();
    Ok(DualMatrix {
        det,
        adjugate,
        numerators,
    })
}

/// `Π z_ij^{-2m} ψ ⊗ ε`: a solution of the twisted system with parameter
/// `-m`, in the same tabloid coordinates.
#[derive(Clone, Debug)]
pub struct TwistedSolution {
    pub lambda: Partition,
    pub m: i64,
    pub tabloids: Vec<Tabloid>,
    pub vector: RationalVector,
}

pub fn alt_twist(s: &SolutionTable) -> TwistedSolution {
    let n = s.lambda.size();
    let tabloids: Vec<Tabloid> = s.components.keys().cloned().collect();
    TwistedSolution {
        lambda: s.lambda.clone(),
        m: -s.m,
        vector: RationalVector {
            numerators: s.components.values().cloned().collect(),
            denominator: crate::exactalg::vandermonde_power(n, 2 * s.m as u32),
        },
        tabloids,
    }
}

/// Pairing `Σ_b x_b y_b` of two reflection vectors, as a fraction.
pub fn reflection_pairing(a: &RationalVector, b: &RationalVector) -> PolyFraction {
    let n = a.denominator.nvars();
    let mut num = SparsePolynomial::zero(n);
    for (x, y) in a.numerators.iter().zip(&b.numerators) {
        num = &num + &(x * y);
    }
    PolyFraction {
        num,
        den: &a.denominator * &b.denominator,
    }
}

/// Constant value of a fraction, if it is one.
pub fn constant_value(f: &PolyFraction) -> Option<Coefficient> {
    let q = f.to_polynomial().ok()?;
    q.as_constant()
}
