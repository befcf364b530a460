//! The Graham–Lehrer cellular basis of the Brauer algebra.
//!
//! Basis elements are `u·ι(m^λ_{s,t})·ex(n,k)·v⁻¹` where `u, v` run over
//! `D_{n,k}`, `λ ⊢ n − 2k` and `m^λ_{s,t}` is the Murphy basis of the group
//! algebra of `𝔖_{n−2k}` at `q = 1`.
//!
//! With diagrams composed left to right as permutations (`a·b = a∘b`),
//! Murphy's elements `d(s)⁻¹ x_λ d(t)` for the right action become
//! `w(s) x_λ w(t)⁻¹`, where `w(s)` sends the entry of the superstandard
//! tableau `t^λ` in each box to the entry of `s` in that box.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::branching::{reflected_cmp, ReflectedLabel};
use crate::brauer::{factorize, gen_d, perm, AlgebraElement, BrauerDiagram, Factorization, Perm};
use crate::error::{Error, Result};
use crate::exactalg::{Coefficient, Rational};
use crate::linalg::{bareiss_det, field_inverse, Matrix};
use crate::partitions::{partitions_of, Comparison, Partition};

/// A standard Young tableau; `rows[i][j]` is the entry (from 1) in row
/// `i + 1`, column `j + 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        let n = shape.size();
        let mut seen = vec![false; n + 1];
        for (i, row) in rows.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                if x == 0 || x > n || std::mem::replace(&mut seen[x], true) {
                    return Err(Error::InvalidLabel(format!("tableau entries must be 1..{n} once each")));
                }
                let left_ok = j == 0 || row[j - 1] < x;
                let above_ok = i == 0 || rows[i - 1][j] < x;
                if !left_ok || !above_ok {
                    return Err(Error::InvalidLabel("tableau is not standard".into()));
                }
            }
        }
        Ok(StandardTableau { shape, rows })
    }

    /// The row-reading tableau `t^λ`.
    pub fn superstandard(shape: &Partition) -> Self {
        let mut next = 1;
        let rows = shape
            .parts()
            .iter()
            .map(|&len| {
                let row: Vec<usize> = (next..next + len).collect();
                next += len;
                row
            })
            .collect();
        StandardTableau { shape: shape.clone(), rows }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// `w(s)` as a permutation of `0..n`: the entry of `t^λ` in a box goes to
    /// the entry of `self` in the same box.
    pub fn word(&self) -> Perm {
        self.rows.iter().flatten().map(|&x| x - 1).collect()
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            self.rows.iter().map(|r| r.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")).collect();
        write!(f, "[{}]", rows.join(" / "))
    }
}

impl fmt::Debug for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All standard tableaux of shape `λ`, ordered lexicographically by the
/// sequence of rows containing `1, 2, …, n`; the superstandard tableau comes
/// first.
pub fn standard_tableaux(shape: &Partition) -> Vec<StandardTableau> {
    fn rec(
        shape: &Partition,
        filled: &mut Vec<usize>,
        next: usize,
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<StandardTableau>,
    ) {
        if next > shape.size() {
            out.push(StandardTableau { shape: shape.clone(), rows: rows.clone() });
            return;
        }
        for i in 0..shape.len() {
            let fits = filled[i] < shape.parts()[i] && (i == 0 || filled[i - 1] > filled[i]);
            if fits {
                filled[i] += 1;
                rows[i].push(next);
                rec(shape, filled, next + 1, rows, out);
                rows[i].pop();
                filled[i] -= 1;
            }
        }
    }
    let mut out = Vec::new();
    let mut rows = vec![Vec::new(); shape.len()];
    rec(shape, &mut vec![0; shape.len()], 1, &mut rows, &mut out);
    out
}

/// The row symmetrizer `x_λ`: the sum of all permutations preserving the
/// blocks of consecutive entries given by the rows of `t^λ`.
fn row_stabilizer(shape: &Partition) -> Vec<Perm> {
    let n = shape.size();
    let mut group = vec![perm::identity(n)];
    let mut start = 0;
    for &len in shape.parts() {
        let block: Vec<Perm> = perm::all(len);
        group = group
            .iter()
            .flat_map(|g| {
                block.iter().map(move |b| {
                    let mut h = g.clone();
                    for (i, &bi) in b.iter().enumerate() {
                        h[start + i] = start + bi;
                    }
                    h
                })
            })
            .collect();
        start += len;
    }
    group
}

/// `m^λ_{s,t}` as a map from permutations to integer coefficients.
pub fn murphy_m(s: &StandardTableau, t: &StandardTableau) -> Result<BTreeMap<Perm, i64>> {
    if s.shape != t.shape {
        return Err(Error::ShapeMismatch(s.shape.to_string(), t.shape.to_string()));
    }
    let ws = s.word();
    let wt_inv = perm::inverse(&t.word());
    let mut out = BTreeMap::new();
    for sigma in row_stabilizer(&s.shape) {
        *out.entry(perm::compose(&ws, &perm::compose(&sigma, &wt_inv))).or_insert(0) += 1;
    }
    Ok(out)
}

/// The Murphy basis of `ℤ𝔖_ℓ` together with the inverse of its transition
/// matrix, which is unimodular.
struct MurphyTable {
    /// `(shape, s, t)` for each basis element, shapes in the order of
    /// [`partitions_of`].
    index: Vec<(Partition, StandardTableau, StandardTableau)>,
    elements: Vec<BTreeMap<Perm, i64>>,
    perm_index: HashMap<Perm, usize>,
    /// `inverse[k][j]`: coefficient of basis element `k` in permutation `j`.
    inverse: Vec<Vec<i64>>,
}

impl MurphyTable {
    fn build(ell: usize) -> Result<Self> {
        let perms = perm::all(ell);
        let perm_index: HashMap<Perm, usize> = perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mut index = Vec::new();
        let mut elements = Vec::new();
        for shape in partitions_of(ell) {
            let tabs = standard_tableaux(&shape);
            for s in &tabs {
                for t in &tabs {
                    elements.push(murphy_m(s, t)?);
                    index.push((shape.clone(), s.clone(), t.clone()));
                }
            }
        }
        // Column k holds basis element k in the permutation basis.
        let m = Matrix::from_fn(perms.len(), elements.len(), |j, k| {
            Rational::from_integer(BigInt::from(elements[k].get(&perms[j]).copied().unwrap_or(0)))
        });
        let inv = field_inverse(&m)?;
        let inverse = (0..inv.rows())
            .map(|k| {
                (0..inv.cols())
                    .map(|j| {
                        let c = inv.get(k, j);
                        if !c.is_integer() {
                            return Err(Error::InexactDivision);
                        }
                        c.to_integer().to_i64().ok_or_else(|| Error::OutOfRange("Murphy inverse entry".into()))
                    })
                    .collect::<Result<Vec<i64>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(MurphyTable { index, elements, perm_index, inverse })
    }

    fn get(ell: usize) -> Result<Arc<MurphyTable>> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<MurphyTable>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(t) = cache.lock().expect("murphy cache poisoned").get(&ell) {
            return Ok(Arc::clone(t));
        }
        let table = Arc::new(MurphyTable::build(ell)?);
        cache.lock().expect("murphy cache poisoned").insert(ell, Arc::clone(&table));
        Ok(table)
    }
}

/// One side of a cellular index: a tableau and a coset representative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CellIndex {
    pub tableau: StandardTableau,
    pub coset: Perm,
}

#[derive(Clone, Debug)]
pub struct CellularBasisElement {
    pub label: ReflectedLabel,
    pub left: CellIndex,
    pub right: CellIndex,
    /// The element in the diagram basis; its coefficients are integers.
    pub element: AlgebraElement<BigInt>,
}

/// Coefficients of an element in the cellular basis, keyed by basis position.
pub type Expansion<T> = BTreeMap<usize, T>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LayerMembership {
    pub above: bool,
    pub strictly_above: bool,
}

/// The cellular basis of `Br_n`, ordered from the top layer down: more arcs
/// first, then shapes in lexicographically decreasing order, then left and
/// right indices.
pub struct CellularBasis {
    n: usize,
    elements: Vec<CellularBasisElement>,
    /// `(arcs, u, v, Murphy position) → basis position`.
    lookup: HashMap<(usize, Perm, Perm, usize), usize>,
}

impl CellularBasis {
    pub fn new(n: usize) -> Result<Self> {
        let mut elements = Vec::new();
        let mut lookup = HashMap::new();
        for arcs in (0..=n / 2).rev() {
            let ell = n - 2 * arcs;
            let table = MurphyTable::get(ell)?;
            let cosets = gen_d(n, arcs)?;
            // Murphy positions run over shapes, then s, then t.
            let mut base = 0;
            let mut triples = Vec::new();
            for shape in partitions_of(ell) {
                let count = standard_tableaux(&shape).len();
                for si in 0..count {
                    for u in &cosets {
                        for ti in 0..count {
                            for v in &cosets {
                                triples.push((base + si * count + ti, u, v));
                            }
                        }
                    }
                }
                base += count * count;
            }
            for (k, u, v) in triples {
                let (shape, s, t) = &table.index[k];
                let mut terms = Vec::new();
                for (pi, &c) in &table.elements[k] {
                    let f = Factorization { u: u.clone(), pi: pi.clone(), v: v.clone(), s: arcs };
                    terms.push((f.compose()?, BigInt::from(c)));
                }
                lookup.insert((arcs, u.clone(), v.clone(), k), elements.len());
                elements.push(CellularBasisElement {
                    label: ReflectedLabel::new(shape.clone(), n)?,
                    left: CellIndex { tableau: s.clone(), coset: u.clone() },
                    right: CellIndex { tableau: t.clone(), coset: v.clone() },
                    element: AlgebraElement::from_terms(n, terms)?,
                });
            }
        }
        Ok(CellularBasis { n, elements, lookup })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[CellularBasisElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Position of the basis element with the given label and indices.
    pub fn position(&self, left: &CellIndex, right: &CellIndex) -> Option<usize> {
        self.elements.iter().position(|c| &c.left == left && &c.right == right)
    }

    /// Coefficients of `x` in the cellular basis.
    pub fn expand<T: Coefficient>(&self, x: &AlgebraElement<T>) -> Result<Expansion<T>> {
        if x.n() != self.n {
            return Err(Error::StrandCountMismatch(self.n, x.n()));
        }
        // Group the diagram terms by their (u, v) block; each block is a copy
        // of the group algebra of 𝔖_ℓ.
        let mut blocks: BTreeMap<(usize, Perm, Perm), Vec<(usize, T)>> = BTreeMap::new();
        for (d, c) in x.terms() {
            let Factorization { u, pi, v, s } = factorize(d);
            let table = MurphyTable::get(self.n - 2 * s)?;
            blocks.entry((s, u, v)).or_default().push((table.perm_index[&pi], c.clone()));
        }
        let mut out = Expansion::new();
        for ((s, u, v), entries) in blocks {
            let table = MurphyTable::get(self.n - 2 * s)?;
            for (k, row) in table.inverse.iter().enumerate() {
                let mut acc: Option<T> = None;
                for (j, c) in &entries {
                    if row[*j] != 0 {
                        let term = c.int_like(row[*j]) * c.clone();
                        acc = Some(match acc {
                            Some(a) => a + term,
                            None => term,
                        });
                    }
                }
                if let Some(a) = acc.filter(|a| !a.is_zero()) {
                    let pos = self.lookup[&(s, u.clone(), v.clone(), k)];
                    out.insert(pos, a);
                }
            }
        }
        Ok(out)
    }

    /// Whether `x` lies in `A^{⊵λn}` and in `A^{⊳λn}`.
    pub fn layer_membership<T: Coefficient>(
        &self,
        x: &AlgebraElement<T>,
        label: &ReflectedLabel,
    ) -> Result<LayerMembership> {
        let mut m = LayerMembership { above: true, strictly_above: true };
        for &k in self.expand(x)?.keys() {
            match reflected_cmp(&self.elements[k].label, label)? {
                Comparison::Greater => {}
                Comparison::Equal => m.strictly_above = false,
                _ => return Ok(LayerMembership { above: false, strictly_above: false }),
            }
        }
        Ok(m)
    }

    /// The matrix whose row `i` holds basis element `i` in the diagram basis,
    /// columns ordered as [`BrauerDiagram::all`].
    pub fn transition_matrix(&self) -> Matrix<BigInt> {
        let diagrams = BrauerDiagram::all(self.n);
        let col: HashMap<&BrauerDiagram, usize> = diagrams.iter().enumerate().map(|(i, d)| (d, i)).collect();
        let mut m = Matrix::from_fn(self.elements.len(), diagrams.len(), |_, _| BigInt::zero());
        for (i, c) in self.elements.iter().enumerate() {
            for (d, a) in c.element.terms() {
                m.set(i, col[d], a.clone());
            }
        }
        m
    }
}

/// All cellular basis elements of `Br_n`.
pub fn gl_basis(n: usize) -> Result<Vec<CellularBasisElement>> {
    Ok(CellularBasis::new(n)?.elements)
}

#[derive(Debug, Clone)]
pub struct TransitionReport {
    pub matrix: Matrix<BigInt>,
    pub determinant: BigInt,
    /// The determinant is `±1`. Basis coefficients never involve `δ`, so the
    /// unit `±δ^k` of the Laurent ring can only appear with `k = 0`.
    pub is_unit: bool,
}

pub fn transition_matrix(n: usize) -> Result<TransitionReport> {
    let matrix = CellularBasis::new(n)?.transition_matrix();
    if !matrix.is_square() {
        return Err(Error::InvalidDiagram("cellular basis has the wrong size".into()));
    }
    let determinant = if matrix.rows() == 0 { BigInt::from(1) } else { bareiss_det(&matrix)? };
    let is_unit = determinant == BigInt::from(1) || determinant == BigInt::from(-1);
    Ok(TransitionReport { matrix, determinant, is_unit })
}

/// Takes `x ∈ Br_k` in layer `(λ, k)` to `ι^{n−k}(x)·e_{k+1}e_{k+3}⋯e_{n−1}`
/// and checks that it lands in layer `(λ, n)` of `Br_n`: inside `A^{⊵(λ,n)}`
/// and outside `A^{⊳(λ,n)}`.
pub fn weak_coherence_check<T: Coefficient>(
    x: &AlgebraElement<T>,
    shape: &Partition,
    n: usize,
    delta: &T,
    basis: &CellularBasis,
) -> Result<bool> {
    let k = x.n();
    if n < k || !(n - k).is_multiple_of(2) {
        return Err(Error::LevelMismatch(k, n));
    }
    if basis.n() != n {
        return Err(Error::StrandCountMismatch(n, basis.n()));
    }
    let cap = AlgebraElement::from_diagram(BrauerDiagram::ex(n, (n - k) / 2)?, delta.one_like());
    let y = x.embed_to(n).multiply(&cap, delta)?;
    let m = basis.layer_membership(&y, &ReflectedLabel::new(shape.clone(), n)?)?;
    Ok(m.above && !m.strictly_above)
}

fn as_coefficients<T: Coefficient>(x: &AlgebraElement<BigInt>, one: &T) -> Result<AlgebraElement<T>> {
    for (_, c) in x.terms() {
        c.to_i64().ok_or_else(|| Error::OutOfRange("basis coefficient".into()))?;
    }
    Ok(x.map(|c| one.int_like(c.to_i64().unwrap_or_default())))
}

impl CellularBasisElement {
    /// The element with coefficients in another ring.
    pub fn element_in<T: Coefficient>(&self, one: &T) -> Result<AlgebraElement<T>> {
        as_coefficients(&self.element, one)
    }
}

/// `c* ≡ c_swapped` modulo the layers strictly above. Returns the labels of
/// counterexamples.
pub fn check_involution<T: Coefficient>(basis: &CellularBasis, one: &T) -> Result<Vec<String>> {
    let mut failures = Vec::new();
    for c in basis.elements() {
        let swapped =
            basis.position(&c.right, &c.left).ok_or_else(|| Error::IndexOutOfRange("swapped cellular index".into()))?;
        let diff = &as_coefficients(&c.element.involute(), one)? - &basis.elements()[swapped].element_in(one)?;
        if !basis.layer_membership(&diff, &c.label)?.strictly_above {
            failures.push(format!("{} {:?} {:?}", c.label, c.left, c.right));
        }
    }
    Ok(failures)
}

/// For every generator `g` and basis element `c^λ_{S,T}`, `g·c` lies in
/// `A^{⊵λ}` and its layer-`λ` part is `Σ_V r_V c^λ_{V,T}` with `r_V`
/// independent of `T`.
pub fn check_left_triangularity<T: Coefficient>(basis: &CellularBasis, delta: &T) -> Result<Vec<String>> {
    let n = basis.n();
    let one = delta.one_like();
    let mut generators = Vec::new();
    for j in 1..n {
        generators.push((format!("s{j}"), BrauerDiagram::s(j, n)?));
        generators.push((format!("e{j}"), BrauerDiagram::e(j, n)?));
    }
    let mut failures = Vec::new();
    for (name, g) in &generators {
        let g = AlgebraElement::from_diagram(g.clone(), one.clone());
        // (S, label) → coefficients r_V as seen from the first T encountered.
        let mut seen: HashMap<(CellIndex, ReflectedLabel), Vec<(CellIndex, T)>> = HashMap::new();
        for c in basis.elements() {
            let prod = g.multiply(&c.element_in(&one)?, delta)?;
            let expansion = basis.expand(&prod)?;
            let mut row = Vec::new();
            let mut ok = true;
            for (&k, a) in &expansion {
                let b = &basis.elements()[k];
                match reflected_cmp(&b.label, &c.label)? {
                    Comparison::Greater => {}
                    Comparison::Equal if b.right == c.right => row.push((b.left.clone(), a.clone())),
                    _ => ok = false,
                }
            }
            let key = (c.left.clone(), c.label.clone());
            match seen.get(&key) {
                Some(prev) if *prev != row => ok = false,
                Some(_) => {}
                None => {
                    seen.insert(key, row);
                }
            }
            if !ok {
                failures.push(format!("{name}·c[{} {:?} {:?}]", c.label, c.left, c.right));
            }
        }
    }
    Ok(failures)
}

/// The basis elements with `|λ| < n` span the ideal generated by `e_{n−1}`.
/// The ideal is computed as the span of all diagrams `a·e_{n−1}·b`.
pub fn check_ideal_identification(basis: &CellularBasis) -> Result<bool> {
    let n = basis.n();
    if n < 2 {
        return Ok(true);
    }
    let diagrams = BrauerDiagram::all(n);
    let e = BrauerDiagram::e(n - 1, n)?;
    let mut ideal = std::collections::BTreeSet::new();
    for a in &diagrams {
        let (ae, _) = a.compose(&e)?;
        for b in &diagrams {
            ideal.insert(ae.compose(b)?.0);
        }
    }
    let lower: Vec<&CellularBasisElement> = basis.elements().iter().filter(|c| c.label.shape().size() < n).collect();
    let supported = lower.iter().all(|c| c.element.terms().all(|(d, _)| ideal.contains(d)));
    // The basis is linearly independent, so equal counts give equal spans.
    Ok(supported && lower.len() == ideal.len())
}
