//! The trace weights `d_λ` of the generic Brauer, q-Brauer and BMW algebras,
//! their specializations, and the search for the first level at which one
//! of them vanishes.
//!
//! Weights on two parameters `(r, q)` are only ever flattened after the
//! substitution `r = ε q^N` (q-Brauer) or `r = ε q^{N−1}` (BMW); the fully
//! generic weight is available as a list of factor descriptors.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bound::Bound;
use crate::error::{Error, Result};
use crate::exactalg::{qint, LaurentPoly, PrimeFieldElement, QParam, Rational, RationalFunction, RootSpec};
use crate::params::{DeltaSpec, Family, ParamSpec, RParam};
use crate::partitions::{partitions_of, Cell, Partition};

/// One factor of a generic weight, attached to a box of `λ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FactorKind {
    /// `(δ + d)/h`.
    Brauer { d: i64, h: u64 },
    /// `(r q^d − r⁻¹ q^{−d})/(q^h − q^{−h})`.
    QBrauer { d: i64, h: u64 },
    /// The q-Brauer factor with `r` replaced by `rq`.
    BmwOffDiagonal { d: i64, h: u64 },
    /// `(rq − q^{−a})(r⁻¹q⁻¹ + q^b)/(1 − q^{−2h})`.
    BmwDiagonal { a: i64, b: i64, h: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightFactor {
    pub cell: Cell,
    pub kind: FactorKind,
}

fn signed_exp(base: &str, k: i64) -> String {
    match k {
        0 => "1".into(),
        1 => base.into(),
        _ => format!("{base}^{k}"),
    }
}

impl fmt::Display for WeightFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FactorKind::Brauer { d, h } => write!(f, "{}/{h}", linear("δ", d)),
            FactorKind::QBrauer { d, h } => {
                write!(
                    f,
                    "(r·{} − r⁻¹·{})/({} − {})",
                    signed_exp("q", d),
                    signed_exp("q", -d),
                    signed_exp("q", h as i64),
                    signed_exp("q", -(h as i64))
                )
            }
            FactorKind::BmwOffDiagonal { d, h } => write!(
                f,
                "(r·{} − r⁻¹·{})/({} − {})",
                signed_exp("q", d + 1),
                signed_exp("q", -d - 1),
                signed_exp("q", h as i64),
                signed_exp("q", -(h as i64))
            ),
            FactorKind::BmwDiagonal { a, b, h } => write!(
                f,
                "(r·q − {})(r⁻¹·q⁻¹ + {})/(1 − {})",
                signed_exp("q", -a),
                signed_exp("q", b),
                signed_exp("q", -2 * h as i64)
            ),
        }
    }
}

fn linear(var: &str, d: i64) -> String {
    match d.signum() {
        0 => var.to_string(),
        1 => format!("({var}+{d})"),
        _ => format!("({var}−{})", -d),
    }
}

/// The factors of the generic weight `d_λ` of a family, one per box.
pub fn weight_factors(shape: &Partition, family: Family) -> Vec<WeightFactor> {
    shape
        .cells()
        .map(|cell| {
            let d = shape.dvalue_unchecked(cell);
            let h = shape.hook_unchecked(cell) as u64;
            let kind = match family {
                Family::Brauer => FactorKind::Brauer { d, h },
                Family::QBrauer => FactorKind::QBrauer { d, h },
                Family::Bmw if cell.is_diagonal() => {
                    FactorKind::BmwDiagonal { a: shape.avalue_unchecked(cell), b: shape.bvalue_unchecked(cell), h }
                }
                Family::Bmw => FactorKind::BmwOffDiagonal { d, h },
            };
            WeightFactor { cell, kind }
        })
        .collect()
}

/// `Π (δ + d_λ(i,j))/h_λ(i,j)` in `ℚ(δ)`.
pub fn brauer_weight(shape: &Partition) -> RationalFunction {
    let mut num = LaurentPoly::one('δ');
    let mut den: i64 = 1;
    for cell in shape.cells() {
        num = &num * &(&LaurentPoly::var('δ') + &LaurentPoly::from_int('δ', shape.dvalue_unchecked(cell)));
        den *= shape.hook_unchecked(cell) as i64;
    }
    RationalFunction::new(num, LaurentPoly::from_int('δ', den)).expect("hook product is nonzero")
}

/// `Π [N + d_λ(i,j)]_q / [h_λ(i,j)]_q`: the q-Brauer weight at `r = q^N`.
/// At `r = −q^N` the weight is multiplied by `(−1)^{|λ|}`.
pub fn qbrauer_weight_at_power(shape: &Partition, n: i64) -> RationalFunction {
    let mut num = LaurentPoly::one('q');
    let mut den = LaurentPoly::one('q');
    for cell in shape.cells() {
        num = &num * &qint(n + shape.dvalue_unchecked(cell));
        den = &den * &qint(shape.hook_unchecked(cell) as i64);
    }
    RationalFunction::new(num, den).expect("q-integers of hooks are nonzero")
}

/// The BMW weight at `r = ε q^{N−1}`: `ε[N + d]/[h]` off the diagonal and
/// `(1 − ε q^{−N−a})(1 + ε q^{N+b})/(1 − q^{−2h})` on it.
pub fn bmw_weight_at_power(shape: &Partition, n: i64, eps: i8) -> RationalFunction {
    let eps_q = |k: i64| LaurentPoly::monomial('q', k, Rational::from_integer(eps.into()));
    let one = LaurentPoly::one('q');
    let mut num = one.clone();
    let mut den = one.clone();
    for cell in shape.cells() {
        let h = shape.hook_unchecked(cell) as i64;
        if cell.is_diagonal() {
            let a = shape.avalue_unchecked(cell);
            let b = shape.bvalue_unchecked(cell);
            num = &num * &(&(&one - &eps_q(-n - a)) * &(&one + &eps_q(n + b)));
            den = &den * &(&one - &LaurentPoly::power('q', -2 * h));
        } else {
            num = &num * &(&qint(n + shape.dvalue_unchecked(cell)) * &eps_q(0));
            den = &den * &qint(h);
        }
    }
    RationalFunction::new(num, den).expect("hook factors are nonzero")
}

/// A value in the field of definition, when one can be written down.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConcreteValue {
    Rational(Rational),
    /// The value in a prime field containing a root of unity of the right
    /// order, or in `𝔽_p` itself for a Brauer algebra in characteristic `p`.
    Modular(PrimeFieldElement),
}

impl fmt::Display for ConcreteValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConcreteValue::Rational(r) => write!(f, "{r}"),
            ConcreteValue::Modular(x) => write!(f, "{x}"),
        }
    }
}

/// A weight specialized to a parameter choice.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightValue {
    /// The weight as a function of the remaining variable (`δ`, or `q` after
    /// substituting for `r`); `None` when `r` stays generic.
    pub symbolic: Option<RationalFunction>,
    pub value: Option<ConcreteValue>,
    pub is_zero: bool,
    /// The first box (in row order) whose factor vanishes.
    pub vanishing_box: Option<Cell>,
}

/// `n₁`: the last level at which the quotient by the ideal of diagrams with
/// caps (a symmetric group or Hecke algebra) is semisimple.
pub fn n1(spec: &ParamSpec) -> Bound {
    if spec.is_brauer_like() {
        return match spec.characteristic {
            0 => Bound::Unbounded,
            p => Bound::Finite(p - 1),
        };
    }
    match spec.q {
        QParam::Root(root) => Bound::Finite(root.e() - 1),
        _ => Bound::Unbounded,
    }
}

fn not_evaluable(shape: &Partition, cell: Cell, why: &str) -> Error {
    Error::NotEvaluable(format!("weight of {shape} has a zero denominator at box {cell} ({why})"))
}

/// An element of order `f` in `𝔽_p`, if `f | p − 1`.
fn element_of_order(f: u64, p: u64) -> Option<PrimeFieldElement> {
    if !(p - 1).is_multiple_of(f) {
        return None;
    }
    (2..p).map(|g| PrimeFieldElement::new(g as i64, p)).find(|x| x.order() == Some(f))
}

/// The vanishing test for a single factor.
fn factor_vanishes(spec: &ParamSpec, shape: &Partition, cell: Cell, n: i64, eps: i8) -> bool {
    let char2 = spec.characteristic == 2;
    let root = spec.root();
    let qint_zero = |m: i64| match root {
        Some(r) => r.qint_vanishes(m),
        None => m == 0,
    };
    // Does q^m equal the sign s?
    let power_is = |m: i64, s: i8| match root {
        Some(r) => r.q_power_equals(m, s, char2),
        None => m == 0 && (s == 1 || char2),
    };
    match spec.family {
        Family::Bmw if cell.is_diagonal() => {
            power_is(n + shape.avalue_unchecked(cell), eps) || power_is(n + shape.bvalue_unchecked(cell), -eps)
        }
        _ => qint_zero(n + shape.dvalue_unchecked(cell)),
    }
}

/// Specializes the weight of `λ` at the parameters of `spec`.
pub fn evaluate_weight(shape: &Partition, spec: &ParamSpec) -> Result<WeightValue> {
    if spec.is_brauer_like() {
        let spec = if spec.family == Family::Brauer { *spec } else { spec.as_brauer()? };
        return evaluate_brauer(shape, &spec);
    }
    let root = spec.root();
    for cell in shape.cells() {
        let h = shape.hook_unchecked(cell) as i64;
        if root.is_some_and(|r| r.qint_vanishes(h)) {
            return Err(not_evaluable(shape, cell, "[h]_q = 0"));
        }
    }
    let RParam::SignedPower { eps, n } = spec.r else {
        return Ok(WeightValue { symbolic: None, value: None, is_zero: false, vanishing_box: None });
    };
    let symbolic = match spec.family {
        Family::QBrauer => {
            let w = qbrauer_weight_at_power(shape, n);
            if eps == -1 && shape.size() % 2 == 1 {
                -w
            } else {
                w
            }
        }
        _ => bmw_weight_at_power(shape, n, eps),
    };
    let vanishing_box = shape.cells().find(|&c| factor_vanishes(spec, shape, c, n, eps));
    let value = match root {
        Some(r) => realization_value(&symbolic, r, spec.characteristic)?.map(ConcreteValue::Modular),
        None => None,
    };
    Ok(WeightValue { symbolic: Some(symbolic), value, is_zero: vanishing_box.is_some(), vanishing_box })
}

/// The value at a concrete root of unity of order `f`: in `𝔽_p` when the
/// characteristic `p` admits one, or in an auxiliary prime field in
/// characteristic 0.
fn realization_value(w: &RationalFunction, root: RootSpec, characteristic: u64) -> Result<Option<PrimeFieldElement>> {
    let q = match characteristic {
        0 => Some(root.realize().1),
        p => element_of_order(root.f(), p),
    };
    q.map(|q| w.eval_mod(&q)).transpose()
}

fn evaluate_brauer(shape: &Partition, spec: &ParamSpec) -> Result<WeightValue> {
    let p = spec.characteristic;
    if p > 0 {
        if let Some(cell) = shape.cells().find(|&c| (shape.hook_unchecked(c) as u64).is_multiple_of(p)) {
            return Err(not_evaluable(shape, cell, "p divides the hook length"));
        }
    }
    let symbolic = brauer_weight(shape);
    let Some(DeltaSpec::Integer(delta)) = spec.delta else {
        return Ok(WeightValue { symbolic: Some(symbolic), value: None, is_zero: false, vanishing_box: None });
    };
    let vanishes = |c: Cell| {
        let m = delta + shape.dvalue_unchecked(c);
        if p == 0 {
            m == 0
        } else {
            m.rem_euclid(p as i64) == 0
        }
    };
    let vanishing_box = shape.cells().find(|&c| vanishes(c));
    let at = Rational::from_integer(delta.into());
    let value = if p == 0 {
        ConcreteValue::Rational(symbolic.eval(&at)?)
    } else {
        ConcreteValue::Modular(symbolic.eval_mod(&PrimeFieldElement::new(delta, p))?)
    };
    Ok(WeightValue { symbolic: Some(symbolic), value: Some(value), is_zero: vanishing_box.is_some(), vanishing_box })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VanishingWitness {
    pub level: usize,
    pub shape: Partition,
    pub cell: Cell,
}

/// The least `n` with `2 ≤ n ≤ min(n_max, n₁)` such that some `λ ⊢ n` has a
/// vanishing weight. Partitions are tried in lexicographically decreasing
/// order.
pub fn vanishing_level(spec: &ParamSpec, n_max: usize) -> Result<Option<VanishingWitness>> {
    let generic = if spec.is_brauer_like() {
        let delta = if spec.family == Family::Brauer { spec.delta } else { spec.as_brauer()?.delta };
        !matches!(delta, Some(DeltaSpec::Integer(_)))
    } else {
        spec.r == RParam::Generic
    };
    if generic {
        return Ok(None);
    }
    let limit = match n1(spec) {
        Bound::Finite(k) => n_max.min(k as usize),
        Bound::Unbounded => n_max,
    };
    for level in 2..=limit {
        for shape in partitions_of(level) {
            let w = evaluate_weight(&shape, spec)?;
            if let Some(cell) = w.vanishing_box {
                return Ok(Some(VanishingWitness { level, shape, cell }));
            }
        }
    }
    Ok(None)
}

/// The weight of `(1)`, i.e. the loop parameter, as a function of `q`.
pub fn loop_parameter(family: Family, n: i64, eps: i8) -> RationalFunction {
    let one = Partition::new(vec![1]).expect("(1) is a partition");
    match family {
        Family::Bmw => bmw_weight_at_power(&one, n, eps),
        _ => {
            let w = qbrauer_weight_at_power(&one, n);
            if eps == -1 {
                -w
            } else {
                w
            }
        }
    }
}

/// Factored text of a specialized weight, e.g. `(δ+2)(δ−1)/2` or
/// `[3]_q[2]_q/([2]_q[1]_q)`.
pub fn factored_display(shape: &Partition, spec: &ParamSpec) -> String {
    if shape.is_empty() {
        return "1".into();
    }
    let brauer = spec.is_brauer_like();
    let mut num = Vec::new();
    let mut den = Vec::new();
    let mut hook_product: u64 = 1;
    for wf in weight_factors(shape, if brauer { Family::Brauer } else { spec.family }) {
        match (wf.kind, spec.r) {
            (FactorKind::Brauer { d, h }, _) => {
                num.push(linear("δ", d));
                hook_product *= h;
            }
            (FactorKind::QBrauer { d, h } | FactorKind::BmwOffDiagonal { d, h }, RParam::SignedPower { eps, n }) => {
                let sign = if eps == -1 { "−" } else { "" };
                num.push(format!("{sign}[{}]_q", n + d));
                den.push(format!("[{h}]_q"));
            }
            (FactorKind::BmwDiagonal { a, b, h }, RParam::SignedPower { eps, n }) => {
                let (s1, s2) = if eps == 1 { ("−", "+") } else { ("+", "−") };
                num.push(format!("(1{s1}{})(1{s2}{})", signed_exp("q", -n - a), signed_exp("q", n + b)));
                den.push(format!("(1−{})", signed_exp("q", -2 * h as i64)));
            }
            (_, RParam::Generic) => {
                num.push(format!("[{wf}]"));
            }
        }
    }
    let num = num.concat();
    if brauer {
        return if hook_product == 1 { num } else { format!("{num}/{hook_product}") };
    }
    match den.len() {
        0 => num,
        1 => format!("{num}/{}", den[0]),
        _ => format!("{num}/({})", den.concat()),
    }
}
