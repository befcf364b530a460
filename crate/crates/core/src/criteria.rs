//! The functions `m₀ … m₃`, their root-of-unity variants `m′₁ … m′₃`, brute
//! force oracles for all of them, and the decision procedures for the three
//! algebra families.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::bound::Bound;
use crate::error::{Error, Result};
use crate::exactalg::{QParam, RootSpec};
use crate::params::{DeltaSpec, Family, ParamSpec, RParam};
use crate::partitions::{partitions_of, Cell, Partition};

/// A partition and one of its boxes where a weight factor vanishes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub shape: Partition,
    pub cell: Cell,
}

/// A bound together with the witness that attains it, if finite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Attained {
    pub bound: Bound,
    pub witness: Option<Witness>,
}

impl Attained {
    fn unbounded() -> Self {
        Attained { bound: Bound::Unbounded, witness: None }
    }

    fn at(shape: Vec<usize>, row: usize, col: usize) -> Self {
        let shape = Partition::new(shape).expect("witness shapes are partitions");
        Attained {
            bound: Bound::Finite(shape.size() as u64),
            witness: Some(Witness { shape, cell: Cell::new(row, col) }),
        }
    }

    /// The smaller of the two; ties keep `self`.
    fn min(self, other: Attained) -> Attained {
        if other.bound < self.bound {
            other
        } else {
            self
        }
    }

    fn min_all(items: impl IntoIterator<Item = Attained>) -> Attained {
        items.into_iter().fold(Attained::unbounded(), Attained::min)
    }
}

/// Which factor of a weight is tested.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MKind {
    /// Any box: `δ + d_λ(i,j) = 0`.
    M0,
    /// Off-diagonal boxes: `δ + d_λ(i,j) = 0`, `i ≠ j`.
    M1,
    /// Diagonal boxes: `δ + d_λ(i,i) = 0`.
    M2,
    /// Diagonal boxes: `N + b_λ(i,i) = 0`.
    M3,
}

impl MKind {
    pub fn from_index(k: u8) -> Result<Self> {
        match k {
            0 => Ok(MKind::M0),
            1 => Ok(MKind::M1),
            2 => Ok(MKind::M2),
            3 => Ok(MKind::M3),
            _ => Err(Error::OutOfRange(format!("m-function kind must be 0..3 (got {k})"))),
        }
    }
}

fn nonzero(delta: i64) -> Result<()> {
    if delta == 0 {
        return Err(Error::InvalidParameters("the closed forms need a nonzero argument".into()));
    }
    Ok(())
}

// Closed forms with constructive witnesses. Argument 0 takes the values
// found by inspecting diagrams of size at most 3.

fn m1_attained(delta: i64) -> Attained {
    match delta {
        0 => Attained::at(vec![2, 1], 1, 2),
        d if d < 0 => Attained::at(vec![(3 - d) as usize], 1, 2),
        d => Attained::at(vec![1; (d + 1) as usize], 2, 1),
    }
}

fn m2_attained(delta: i64) -> Attained {
    match delta {
        0 => Attained::at(vec![1, 1], 1, 1),
        d if d < 0 && d % 2 == 0 => Attained::at(vec![(1 - d / 2) as usize], 1, 1),
        _ => Attained::unbounded(),
    }
}

fn m0_attained(delta: i64) -> Attained {
    m2_attained(delta).min(m1_attained(delta))
}

fn m3_attained(n: i64) -> Attained {
    match n {
        2 => Attained::at(vec![2], 1, 1),
        n if n > 0 && n % 2 == 0 => Attained::at(vec![1; (n / 2) as usize], 1, 1),
        _ => Attained::unbounded(),
    }
}

/// `m₁(δ)`: `−δ + 3` for `δ < 0`, `δ + 1` for `δ > 0`.
pub fn m1(delta: i64) -> Result<Bound> {
    nonzero(delta)?;
    Ok(m1_attained(delta).bound)
}

/// `m₂(δ)`: `−δ/2 + 1` for negative even `δ`, otherwise unbounded.
pub fn m2(delta: i64) -> Result<Bound> {
    nonzero(delta)?;
    Ok(m2_attained(delta).bound)
}

/// `m₀(δ) = min{m₁(δ), m₂(δ)}`.
pub fn m0(delta: i64) -> Result<Bound> {
    nonzero(delta)?;
    Ok(m0_attained(delta).bound)
}

/// `m₃(N)`: `N/2` for positive even `N ≥ 4`, `2` for `N = 2` (the least
/// admissible level), otherwise unbounded.
pub fn m3(n: i64) -> Bound {
    m3_attained(n).bound
}

/// Values of `d` off and on the diagonal and of `b` on the diagonal that
/// occur at one level, each with its first witness and that witness's rank
/// in the enumeration (partitions in lexicographically decreasing order,
/// boxes in row order).
#[derive(Default)]
struct LevelTable {
    off_diagonal_d: BTreeMap<i64, (usize, Witness)>,
    diagonal_d: BTreeMap<i64, (usize, Witness)>,
    diagonal_b: BTreeMap<i64, (usize, Witness)>,
}

impl LevelTable {
    fn build(n: usize) -> Self {
        let mut t = LevelTable::default();
        let mut rank = 0;
        for shape in partitions_of(n) {
            for cell in shape.cells() {
                let witness = || (rank, Witness { shape: shape.clone(), cell });
                let d = shape.dvalue_unchecked(cell);
                if cell.is_diagonal() {
                    t.diagonal_d.entry(d).or_insert_with(witness);
                    t.diagonal_b.entry(shape.bvalue_unchecked(cell)).or_insert_with(witness);
                } else {
                    t.off_diagonal_d.entry(d).or_insert_with(witness);
                }
                rank += 1;
            }
        }
        t
    }

    fn get(n: usize) -> Arc<LevelTable> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<LevelTable>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(t) = cache.lock().expect("level cache poisoned").get(&n) {
            return Arc::clone(t);
        }
        let table = Arc::new(LevelTable::build(n));
        cache.lock().expect("level cache poisoned").insert(n, Arc::clone(&table));
        table
    }

    fn maps(&self, kind: MKind) -> Vec<&BTreeMap<i64, (usize, Witness)>> {
        match kind {
            MKind::M0 => vec![&self.off_diagonal_d, &self.diagonal_d],
            MKind::M1 => vec![&self.off_diagonal_d],
            MKind::M2 => vec![&self.diagonal_d],
            MKind::M3 => vec![&self.diagonal_b],
        }
    }

    /// The earliest witness whose value satisfies `pred`.
    fn first(&self, kind: MKind, pred: impl Fn(i64) -> bool) -> Option<Witness> {
        self.maps(kind)
            .into_iter()
            .flat_map(|m| m.iter().filter(|(&v, _)| pred(v)).map(|(_, w)| w))
            .min_by_key(|(rank, _)| *rank)
            .map(|(_, w)| w.clone())
    }
}

fn search(limit: usize, kind: MKind, pred: impl Fn(i64) -> bool) -> Attained {
    for n in 2..=limit {
        if let Some(witness) = LevelTable::get(n).first(kind, &pred) {
            return Attained { bound: Bound::Finite(n as u64), witness: Some(witness) };
        }
    }
    Attained::unbounded()
}

/// The least `n ≥ 2` (up to `limit`) with a diagram of size `n` and a box of
/// the given kind where `arg + value = 0`. Accepts `arg = 0`.
pub fn m_bruteforce(kind: MKind, arg: i64, limit: usize) -> Attained {
    search(limit, kind, |v| arg + v == 0)
}

fn check_range(n: i64, e: u64) -> Result<()> {
    if n > 0 || n <= -(e as i64) {
        return Err(Error::OutOfRange(format!("N must lie in (−{e}, 0] (got {n})")));
    }
    Ok(())
}

fn check_eps(eps: i8) -> Result<()> {
    if eps != 1 && eps != -1 {
        return Err(Error::InvalidParameters(format!("ε must be ±1 (got {eps})")));
    }
    Ok(())
}

fn m1p_attained(n: i64, e: i64) -> Attained {
    Attained::min_all([m1_attained(n), m1_attained(n - e), m1_attained(n + e)])
}

fn m2p_attained(n: i64, eps: i8, root: RootSpec, char2: bool) -> Attained {
    let (e, f) = (root.e() as i64, root.f() as i64);
    let f_odd = f % 2 == 1;
    match (char2, eps) {
        (true, _) | (false, 1) => m2_attained(n).min(m2_attained(n - f)),
        _ if f_odd => Attained::unbounded(),
        _ => m2_attained(n - e),
    }
}

fn m3p_attained(n: i64, eps: i8, root: RootSpec, char2: bool) -> Attained {
    let (e, f) = (root.e() as i64, root.f() as i64);
    match (char2, eps) {
        (false, 1) if f % 2 == 1 => Attained::unbounded(),
        (false, 1) => m3_attained(n + e),
        _ => m3_attained(n + f).min(m3_attained(n + 2 * f)),
    }
}

/// `m′₁(N, q) = min{m₁(N), m₁(N−e), m₁(N+e)}` for `−e < N ≤ 0`.
pub fn m1p(n: i64, e: u64) -> Result<Bound> {
    check_range(n, e)?;
    Ok(m1p_attained(n, e as i64).bound)
}

/// `m′₂(N, ε, q)`.
pub fn m2p(n: i64, eps: i8, root: RootSpec, char2: bool) -> Result<Bound> {
    check_range(n, root.e())?;
    check_eps(eps)?;
    Ok(m2p_attained(n, eps, root, char2).bound)
}

/// `m′₃(N, ε, q)`.
pub fn m3p(n: i64, eps: i8, root: RootSpec, char2: bool) -> Result<Bound> {
    check_range(n, root.e())?;
    check_eps(eps)?;
    Ok(m3p_attained(n, eps, root, char2).bound)
}

/// Direct search for `m′_k`: kind 1 asks `e | N + d` off the diagonal, kind 2
/// asks `q^{N + d(i,i)} = ε`, kind 3 asks `q^{N + b(i,i)} = −ε`.
pub fn mprime_bruteforce(kind: MKind, n: i64, eps: i8, root: RootSpec, char2: bool, limit: usize) -> Result<Attained> {
    check_eps(eps)?;
    Ok(match kind {
        MKind::M1 => search(limit, kind, |v| root.qint_vanishes(n + v)),
        MKind::M2 => search(limit, kind, |v| root.q_power_equals(n + v, eps, char2)),
        MKind::M3 => search(limit, kind, |v| root.q_power_equals(n + v, -eps, char2)),
        MKind::M0 => return Err(Error::Unsupported("there is no m′₀".into())),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Constituent {
    pub name: String,
    pub value: Bound,
}

/// The semisimplicity bound: the algebra on `n` strands is semisimple iff
/// `n ≤ bound`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub family: Family,
    pub params: ParamSpec,
    pub bound: Bound,
    pub constituents: Vec<Constituent>,
    /// A diagram and box where a weight vanishes at level `bound`, when the
    /// bound comes from a weight rather than from the quotient algebra.
    pub witness: Option<Witness>,
    /// The exponent after reduction modulo `p` or `e`.
    pub normalized_n: Option<i64>,
}

struct Builder {
    constituents: Vec<Constituent>,
    best: Attained,
}

impl Builder {
    fn new() -> Self {
        Builder { constituents: Vec::new(), best: Attained::unbounded() }
    }

    /// A bound coming from the quotient algebra; it never carries a witness.
    fn quotient(mut self, name: impl Into<String>, value: Bound) -> Self {
        self.constituents.push(Constituent { name: name.into(), value });
        if value < self.best.bound {
            self.best = Attained { bound: value, witness: None };
        }
        self
    }

    fn weight(mut self, name: impl Into<String>, a: Attained) -> Self {
        self.constituents.push(Constituent { name: name.into(), value: a.bound });
        if a.bound <= self.best.bound && !(a.bound == self.best.bound && self.best.witness.is_some()) {
            self.best = a;
        }
        self
    }

    fn finish(self, spec: &ParamSpec, normalized_n: Option<i64>) -> Verdict {
        Verdict {
            family: spec.family,
            params: *spec,
            bound: self.best.bound,
            constituents: self.constituents,
            witness: self.best.witness,
            normalized_n,
        }
    }
}

/// The Brauer algebra over a field of characteristic `p ≥ 0`.
pub fn decide_brauer(spec: &ParamSpec) -> Result<Verdict> {
    let delta = spec.delta.ok_or_else(|| Error::InvalidParameters("the Brauer algebra needs δ".into()))?;
    let p = spec.characteristic;
    let b = Builder::new();
    Ok(match (p, delta) {
        (0, DeltaSpec::Integer(d)) => {
            nonzero(d)?;
            b.weight(format!("m0({d})"), m0_attained(d)).finish(spec, Some(d))
        }
        (0, _) => b.finish(spec, None),
        (p, DeltaSpec::Integer(n)) => {
            nonzero(n)?;
            let shifted = n - p as i64;
            b.quotient("p-1", Bound::Finite(p - 1))
                .weight(format!("m0({n})"), m0_attained(n))
                .weight(format!("m0({shifted})"), m0_attained(shifted))
                .finish(spec, Some(n))
        }
        (p, _) => b.quotient("p-1", Bound::Finite(p - 1)).finish(spec, None),
    })
}

fn brauer_fallback(spec: &ParamSpec) -> Result<Verdict> {
    let mut v = decide_brauer(&spec.as_brauer()?)?;
    v.family = spec.family;
    v.params = *spec;
    Ok(v)
}

/// The q-Brauer algebra; `q = ±1` reduces to the Brauer algebra.
pub fn decide_qbrauer(spec: &ParamSpec) -> Result<Verdict> {
    if matches!(spec.q, QParam::PlusMinusOne) {
        return brauer_fallback(spec);
    }
    let b = Builder::new();
    Ok(match (spec.q, spec.r) {
        (QParam::Root(root), RParam::Generic) => b.quotient("e-1", Bound::Finite(root.e() - 1)).finish(spec, None),
        (_, RParam::Generic) => b.finish(spec, None),
        (QParam::Root(root), RParam::SignedPower { n, .. }) => {
            let e = root.e() as i64;
            if n.rem_euclid(e) == 0 {
                return Err(Error::InvalidParameters(format!("e = {e} divides N = {n}, which forces r = ±1")));
            }
            let n = n.rem_euclid(e) - e;
            b.quotient("e-1", Bound::Finite(root.e() - 1))
                .weight(format!("m0({n})"), m0_attained(n))
                .weight(format!("m0({})", n - e), m0_attained(n - e))
                .weight(format!("m0({})", n + e), m0_attained(n + e))
                .finish(spec, Some(n))
        }
        (_, RParam::SignedPower { n, .. }) => {
            nonzero(n)?;
            b.weight(format!("m0({n})"), m0_attained(n)).finish(spec, Some(n))
        }
    })
}

/// The BMW algebra with `r = ε q^{N−1}`; `q = ±1` reduces to the Brauer
/// algebra.
pub fn decide_bmw(spec: &ParamSpec) -> Result<Verdict> {
    if matches!(spec.q, QParam::PlusMinusOne) {
        return brauer_fallback(spec);
    }
    let b = Builder::new();
    let char2 = spec.characteristic == 2;
    Ok(match (spec.q, spec.r) {
        (QParam::Root(root), RParam::Generic) => b.quotient("e-1", Bound::Finite(root.e() - 1)).finish(spec, None),
        (_, RParam::Generic) => b.finish(spec, None),
        (QParam::Root(root), RParam::SignedPower { eps, n }) => {
            let e = root.e() as i64;
            let k = (n - n.rem_euclid(e)) / e + i64::from(n.rem_euclid(e) != 0);
            let normalized = n - k * e;
            // q^e = −1 when f is even, so each shift by e flips the sign.
            let flips = root.f() % 2 == 0 && k.rem_euclid(2) == 1 && !char2;
            let eps = if flips { -eps } else { eps };
            b.quotient("e-1", Bound::Finite(root.e() - 1))
                .weight("m1'", m1p_attained(normalized, e))
                .weight("m2'", m2p_attained(normalized, eps, root, char2))
                .weight("m3'", m3p_attained(normalized, eps, root, char2))
                .finish(spec, Some(normalized))
        }
        (_, RParam::SignedPower { eps: 1, n }) => {
            nonzero(n)?;
            b.weight(format!("m0({n})"), m0_attained(n)).finish(spec, Some(n))
        }
        (_, RParam::SignedPower { n, .. }) => b
            .weight(format!("m1({n})"), m1_attained(n))
            .weight(format!("m3({n})"), m3_attained(n))
            .finish(spec, Some(n)),
    })
}

/// Dispatches on the family.
pub fn decide(spec: &ParamSpec) -> Result<Verdict> {
    match spec.family {
        Family::Brauer => decide_brauer(spec),
        Family::QBrauer => decide_qbrauer(spec),
        Family::Bmw => decide_bmw(spec),
    }
}
