//! Iterated residues of factored Laurent forms.
//!
//! A cycle integral over nested circles is evaluated one variable at a time.
//! When `t^b_s` is integrated on its circle of radius `sε` about `z_{T(b)}`,
//! every factor linking it to a variable of a higher level has its pole on a
//! larger circle, and every other point lies outside, so only the center
//! contributes. No radius is ever represented: the cycle is just the order of
//! the steps and their centers.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::ResidueError;
use crate::exactalg::{merge_factor, Atom, Coefficient, FactoredSum, Factors, PointDiff};
use crate::shapes::{Cell, Numbering, Partition};

/// A factored form whose atoms may include live integration variables.
pub type PowerProductForm = FactoredSum;

/// Integration variables `t^b_s` of a shape, numbered level-ascending and
/// then by box in reading order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariableRoster {
    entries: Vec<(Cell, usize)>,
    index: HashMap<(Cell, usize), u16>,
}

impl VariableRoster {
    pub fn new(shape: &Partition) -> VariableRoster {
        let boxes = shape.boxes();
        let mut entries = Vec::new();
        for s in 1..shape.rows() {
            entries.extend(boxes.iter().filter(|b| b.row > s).map(|&b| (b, s)));
        }
        let index = entries.iter().enumerate().map(|(i, &key)| (key, i as u16)).collect();
        VariableRoster { entries, index }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn id(&self, cell: Cell, level: usize) -> Option<u16> {
        self.index.get(&(cell, level)).copied()
    }

    pub fn atom(&self, cell: Cell, level: usize) -> Atom {
        Atom::Var(self.id(cell, level).expect("variable in roster"))
    }

    /// `(box, level)` of variable `id`.
    pub fn entry(&self, id: u16) -> (Cell, usize) {
        self.entries[id as usize]
    }

    /// Variable ids at level `s`, in reading order of their boxes.
    pub fn level(&self, s: usize) -> Vec<u16> {
        (0..self.entries.len() as u16)
            .filter(|&i| self.entries[i as usize].1 == s)
            .collect()
    }

    pub fn levels(&self) -> usize {
        self.entries.iter().map(|e| e.1).max().unwrap_or(0)
    }

    pub fn name(&self, id: u16) -> String {
        let (b, s) = self.entry(id);
        format!("t[{},{}]_{}", b.row, b.col, s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ResidueStep {
    pub var: u16,
    pub center: Atom,
}

/// Ordered residue schedule encoding a cycle.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ResiduePlan {
    steps: Vec<ResidueStep>,
}

impl ResiduePlan {
    pub fn new(steps: Vec<ResidueStep>) -> ResiduePlan {
        ResiduePlan { steps }
    }

    pub fn steps(&self) -> &[ResidueStep] {
        &self.steps
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }
}

impl fmt::Display for ResiduePlan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let steps: Vec<String> = self
            .steps
            .iter()
            .map(|s| format!("(t{}, {})", s.var, s.center))
            .collect();
        write!(f, "[{}]", steps.join(", "))
    }
}

/// The cycle of a numbering: every variable of box `b` circles `z_{T(b)}`.
pub fn residue_plan(t: &Numbering) -> ResiduePlan {
    let roster = VariableRoster::new(t.shape());
    ResiduePlan {
        steps: (0..roster.len() as u16)
            .map(|id| {
                let (b, _) = roster.entry(id);
                ResidueStep {
                    var: id,
                    center: Atom::Point((t.label(b) - 1) as u8),
                }
            })
            .collect(),
    }
}

/// `C(e, k)` for any integer `e` and `k ≥ 0`.
pub fn generalized_binomial(e: i64, k: u32) -> BigInt {
    let mut c = BigInt::one();
    for i in 0..k as i64 {
        c = c * BigInt::from(e - i) / BigInt::from(i + 1);
    }
    c
}

/// A factor `(σ·D + τ)^e` after substituting `var = center + τ`.
struct Moving {
    diff: PointDiff,
    sigma_neg: bool,
    exp: i32,
}

/// Coefficient of `τ^{-1}` after substituting `var = center + τ`.
pub fn residue_at(f: &PowerProductForm, var: u16, center: Atom) -> Result<PowerProductForm, ResidueError> {
    let x = Atom::Var(var);
    if center == x {
        return Err(ResidueError::CenterIsVariable(var));
    }
    if f.is_zero() {
        return Ok(FactoredSum::zero());
    }
    if !f.atoms().contains(&x) {
        return Err(ResidueError::NotLive(var));
    }
    let mut out = FactoredSum::zero();
    let mut binom_cache: HashMap<(i32, u32), BigInt> = HashMap::new();
    for (factors, coeff) in f.terms() {
        let mut tau_exp = 0i32;
        let mut negate = false;
        let mut rest: Factors = Vec::with_capacity(factors.len());
        let mut moving: Vec<Moving> = Vec::new();
        for &(d, e) in factors {
            if !d.involves(x) {
                rest.push((d, e));
                continue;
            }
            // d = ε·(center - other + τ)
            let eps_neg = d.hi() == x;
            let other = d.other(x);
            if eps_neg && e % 2 != 0 {
                negate = !negate;
            }
            if other == center {
                tau_exp += e;
            } else {
                let (diff, flipped) = PointDiff::oriented(center, other);
                moving.push(Moving {
                    diff,
                    sigma_neg: flipped,
                    exp: e,
                });
            }
        }
        let pole = -tau_exp;
        if pole <= 0 {
            continue;
        }
        let order = (pole - 1) as u32;
        // per factor: (k, C(e,k)·σ^{e-k}) for the usable k
        let options: Vec<Vec<(u32, BigInt)>> = moving
            .iter()
            .map(|mv| {
                let top = if mv.exp >= 0 { order.min(mv.exp as u32) } else { order };
                (0..=top)
                    .map(|k| {
                        let mut c = binom_cache
                            .entry((mv.exp, k))
                            .or_insert_with(|| generalized_binomial(mv.exp as i64, k))
                            .clone();
                        if mv.sigma_neg && (mv.exp - k as i32) % 2 != 0 {
                            c = -c;
                        }
                        (k, c)
                    })
                    .filter(|(_, c)| !c.is_zero())
                    .collect()
            })
            .collect();
        let base = if negate { -coeff.clone() } else { coeff.clone() };
        let mut choice = vec![0usize; moving.len()];
        distribute(&options, 0, order, &mut choice, &mut |choice| {
            let mut c = BigInt::one();
            let mut fs = rest.clone();
            for (i, mv) in moving.iter().enumerate() {
                let (k, ref b) = options[i][choice[i]];
                c *= b;
                merge_factor(&mut fs, mv.diff, mv.exp - k as i32);
            }
            out.add_raw(fs, &base * Coefficient::from_integer(c));
        });
    }
    Ok(out)
}

/// Visit every choice of one option per factor whose `k` values sum to
/// `remaining`.
fn distribute<F: FnMut(&[usize])>(
    options: &[Vec<(u32, BigInt)>],
    i: usize,
    remaining: u32,
    choice: &mut Vec<usize>,
    visit: &mut F,
) {
    if i == options.len() {
        if remaining == 0 {
            visit(choice);
        }
        return;
    }
    for (j, (k, _)) in options[i].iter().enumerate() {
        if *k > remaining {
            break;
        }
        choice[i] = j;
        distribute(options, i + 1, remaining - k, choice, visit);
    }
}

fn live_vars(f: &FactoredSum) -> BTreeSet<u16> {
    f.atoms()
        .into_iter()
        .filter_map(|a| match a {
            Atom::Var(v) => Some(v),
            Atom::Point(_) => None,
        })
        .collect()
}

/// Fold [`residue_at`] over a plan.
pub fn iterated_residue(f: &PowerProductForm, plan: &ResiduePlan) -> Result<FactoredSum, ResidueError> {
    let live = live_vars(f);
    let planned: BTreeMap<u16, usize> = plan.steps.iter().enumerate().map(|(pos, s)| (s.var, pos)).collect();
    if let Some(&v) = live.iter().find(|v| !planned.contains_key(v)) {
        return Err(ResidueError::PlanMismatch(v));
    }
    if let Some(s) = plan.steps.iter().find(|s| !live.contains(&s.var)) {
        return Err(ResidueError::NotLive(s.var));
    }
    for (pos, s) in plan.steps.iter().enumerate() {
        if let Atom::Var(c) = s.center {
            if planned.get(&c).is_some_and(|&p| p > pos) {
                return Err(ResidueError::IllFormedSchedule { var: s.var, center: c });
            }
        }
    }
    let mut cur = f.clone();
    for s in &plan.steps {
        if cur.is_zero() {
            break;
        }
        if !cur.atoms().contains(&Atom::Var(s.var)) {
            // no factor in t: the integrand is holomorphic inside the circle
            return Ok(FactoredSum::zero());
        }
        cur = residue_at(&cur, s.var, s.center)?;
    }
    Ok(cur)
}
