//! Text, JSON and CSV renderings.
//!
//! Unbounded values become the string `infinity` in text and CSV, and
//! `null` together with an `unbounded: true` flag in JSON.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use semisimplicity::criteria::{Constituent, Verdict, Witness};
use semisimplicity::exactalg::QParam;
use semisimplicity::params::{DeltaSpec, Family, ParamSpec, RParam};
use semisimplicity::{Bound, Cell, Partition};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundJson {
    pub value: Option<u64>,
    pub unbounded: bool,
}

impl From<Bound> for BoundJson {
    fn from(b: Bound) -> Self {
        BoundJson { value: b.finite(), unbounded: b.is_unbounded() }
    }
}

impl TryFrom<&BoundJson> for Bound {
    type Error = CliError;
    fn try_from(b: &BoundJson) -> Result<Bound, CliError> {
        match (b.value, b.unbounded) {
            (Some(v), false) => Ok(Bound::Finite(v)),
            (None, true) => Ok(Bound::Unbounded),
            _ => Err(CliError::Usage("a bound is either a value or unbounded".into())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstituentJson {
    pub name: String,
    #[serde(flatten)]
    pub value: BoundJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub partition: Vec<usize>,
    #[serde(rename = "box")]
    pub cell: [usize; 2],
}

impl From<&Witness> for WitnessJson {
    fn from(w: &Witness) -> Self {
        WitnessJson { partition: w.shape.parts().to_vec(), cell: [w.cell.row, w.cell.col] }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictJson {
    pub family: Family,
    pub params: ParamSpec,
    pub m: Option<u64>,
    pub unbounded: bool,
    pub constituents: Vec<ConstituentJson>,
    pub witness: Option<WitnessJson>,
    pub normalized_n: Option<i64>,
}

impl From<&Verdict> for VerdictJson {
    fn from(v: &Verdict) -> Self {
        let m = BoundJson::from(v.bound);
        VerdictJson {
            family: v.family,
            params: v.params,
            m: m.value,
            unbounded: m.unbounded,
            constituents: v
                .constituents
                .iter()
                .map(|c| ConstituentJson { name: c.name.clone(), value: c.value.into() })
                .collect(),
            witness: v.witness.as_ref().map(WitnessJson::from),
            normalized_n: v.normalized_n,
        }
    }
}

impl TryFrom<VerdictJson> for Verdict {
    type Error = CliError;
    fn try_from(j: VerdictJson) -> Result<Verdict, CliError> {
        let constituents = j
            .constituents
            .iter()
            .map(|c| Ok(Constituent { name: c.name.clone(), value: Bound::try_from(&c.value)? }))
            .collect::<Result<_, CliError>>()?;
        let witness = j
            .witness
            .map(|w| -> Result<Witness, CliError> {
                let shape = Partition::new(w.partition)?;
                let cell = Cell::new(w.cell[0], w.cell[1]);
                if !shape.contains(cell) {
                    return Err(CliError::Usage(format!("box {cell} is not in {shape}")));
                }
                Ok(Witness { shape, cell })
            })
            .transpose()?;
        Ok(Verdict {
            family: j.family,
            params: j.params,
            bound: Bound::try_from(&BoundJson { value: j.m, unbounded: j.unbounded })?,
            constituents,
            witness,
            normalized_n: j.normalized_n,
        })
    }
}

pub fn verdict_to_json(v: &Verdict) -> String {
    serde_json::to_string_pretty(&VerdictJson::from(v)).expect("verdicts serialize")
}

pub fn verdict_from_json(s: &str) -> Result<Verdict, CliError> {
    let j: VerdictJson = serde_json::from_str(s).map_err(|e| CliError::Usage(format!("bad verdict JSON: {e}")))?;
    Verdict::try_from(j)
}

fn describe_delta(d: Option<DeltaSpec>) -> String {
    match d {
        Some(DeltaSpec::Integer(n)) => format!("δ = {n}"),
        Some(DeltaSpec::Generic) | None => "δ generic".into(),
        Some(DeltaSpec::NonInteger) => "δ outside the prime field".into(),
    }
}

/// One-line description of a parameter set.
pub fn describe_params(spec: &ParamSpec) -> String {
    let mut parts = vec![format!("characteristic {}", spec.characteristic)];
    if spec.family == Family::Brauer {
        parts.push(describe_delta(spec.delta));
        return parts.join("; ");
    }
    match spec.q {
        QParam::NotRootOfUnity => parts.push("q² not a root of unity".into()),
        QParam::Root(r) => parts.push(format!("ord(q²) = {}, ord(q) = {}", r.e(), r.f())),
        QParam::PlusMinusOne => {
            parts.push("q = ±1".into());
            parts.push(describe_delta(spec.delta));
        }
    }
    let exponent = if spec.family == Family::Bmw { "N−1" } else { "N" };
    match spec.r {
        RParam::Generic => parts.push("r generic".into()),
        RParam::SignedPower { eps, n } => {
            let sign = if eps == -1 { "−" } else { "" };
            parts.push(format!("r = {sign}q^({exponent}) with N = {n}"));
        }
    }
    parts.join("; ")
}

pub fn verdict_text(v: &Verdict) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} algebra ({})", v.family, describe_params(&v.params));
    match v.bound {
        Bound::Unbounded => out.push_str("semisimple for all n\n"),
        Bound::Finite(m) => {
            let _ = writeln!(out, "semisimple exactly for n ≤ {m}");
        }
    }
    let width = v.constituents.iter().map(|c| c.name.chars().count()).max().unwrap_or(0);
    for c in &v.constituents {
        let pad = width - c.name.chars().count();
        let _ = writeln!(out, "  {}{}  {}", c.name, " ".repeat(pad), c.value);
    }
    if let Some(n) = v.normalized_n {
        let _ = writeln!(out, "normalized N: {n}");
    }
    if let Some(w) = &v.witness {
        let _ = writeln!(out, "witness: λ = {}, box {}", w.shape, w.cell);
    }
    out
}

pub fn verdict_csv(v: &Verdict) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["name", "value"])?;
    w.write_record(["m".to_string(), v.bound.to_string()])?;
    for c in &v.constituents {
        w.write_record([c.name.clone(), c.value.to_string()])?;
    }
    finish_csv(w)
}

pub fn finish_csv(w: csv::Writer<Vec<u8>>) -> Result<String, CliError> {
    let bytes = w.into_inner().map_err(|e| CliError::Usage(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Usage(e.to_string()))
}
