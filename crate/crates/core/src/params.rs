//! Parameter descriptions for the three algebra families.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{is_prime, QParam, RootSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Brauer,
    #[serde(rename = "qbrauer")]
    QBrauer,
    Bmw,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Brauer => "brauer",
            Family::QBrauer => "qbrauer",
            Family::Bmw => "bmw",
        })
    }
}

/// The loop parameter `δ` of a Brauer algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DeltaSpec {
    /// An indeterminate.
    Generic,
    /// The image of an integer. In characteristic `p` it is stored reduced to
    /// `0 < N ≤ p − 1`.
    Integer(i64),
    /// An element outside the prime field.
    NonInteger,
}

/// The parameter `r` of a q-Brauer or BMW algebra.
///
/// `SignedPower { eps, n }` is `r = eps·q^n` for q-Brauer and
/// `r = eps·q^(n−1)` for BMW, following the usual parametrization of each
/// family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RParam {
    Generic,
    SignedPower { eps: i8, n: i64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ParamSpec {
    pub family: Family,
    /// 0 or a prime.
    pub characteristic: u64,
    /// The loop parameter for Brauer algebras, and the fallback when a
    /// q-family degenerates to a Brauer algebra at `q = ±1`.
    pub delta: Option<DeltaSpec>,
    pub q: QParam,
    pub r: RParam,
}

fn check_characteristic(p: u64) -> Result<()> {
    if p == 0 || is_prime(p) {
        Ok(())
    } else {
        Err(Error::InvalidParameters(format!("characteristic must be 0 or a prime (got {p})")))
    }
}

fn normalize_delta(delta: DeltaSpec, p: u64) -> Result<DeltaSpec> {
    match delta {
        DeltaSpec::Integer(0) => {
            Err(Error::InvalidParameters("δ = 0 is excluded; the criteria need a non-zero loop parameter".into()))
        }
        DeltaSpec::Integer(n) if p > 0 => {
            let r = n.rem_euclid(p as i64);
            if r == 0 {
                Err(Error::InvalidParameters(format!("δ = {n} is zero in characteristic {p}")))
            } else {
                Ok(DeltaSpec::Integer(r))
            }
        }
        other => Ok(other),
    }
}

fn check_eps(r: RParam) -> Result<()> {
    match r {
        RParam::SignedPower { eps, .. } if eps != 1 && eps != -1 => {
            Err(Error::InvalidParameters(format!("ε must be ±1 (got {eps})")))
        }
        _ => Ok(()),
    }
}

impl ParamSpec {
    pub fn brauer(characteristic: u64, delta: DeltaSpec) -> Result<Self> {
        check_characteristic(characteristic)?;
        let delta = normalize_delta(delta, characteristic)?;
        Ok(ParamSpec {
            family: Family::Brauer,
            characteristic,
            delta: Some(delta),
            q: QParam::PlusMinusOne,
            r: RParam::Generic,
        })
    }

    pub fn qbrauer(characteristic: u64, q: QParam, r: RParam, delta: Option<DeltaSpec>) -> Result<Self> {
        Self::qfamily(Family::QBrauer, characteristic, q, r, delta)
    }

    pub fn bmw(characteristic: u64, q: QParam, r: RParam, delta: Option<DeltaSpec>) -> Result<Self> {
        Self::qfamily(Family::Bmw, characteristic, q, r, delta)
    }

    fn qfamily(family: Family, characteristic: u64, q: QParam, r: RParam, delta: Option<DeltaSpec>) -> Result<Self> {
        check_characteristic(characteristic)?;
        check_eps(r)?;
        let delta = match (q, delta) {
            (QParam::PlusMinusOne, None) => {
                return Err(Error::InvalidParameters(
                    "q = ±1 gives a Brauer algebra; the loop parameter δ must be supplied".into(),
                ))
            }
            (_, Some(d)) => Some(normalize_delta(d, characteristic)?),
            (_, None) => None,
        };
        if let QParam::Root(spec) = q {
            if characteristic > 0 && spec.f() % characteristic == 0 {
                return Err(Error::InvalidParameters(format!(
                    "no element of order {} exists in characteristic {characteristic}",
                    spec.f()
                )));
            }
        }
        // In characteristic 2 the sign ε is invisible.
        let r = match r {
            RParam::SignedPower { n, .. } if characteristic == 2 => RParam::SignedPower { eps: 1, n },
            other => other,
        };
        let spec = ParamSpec { family, characteristic, delta, q, r };
        spec.check_exclusions()?;
        Ok(spec)
    }

    /// Rejects parameters that force `δ = 0`.
    fn check_exclusions(&self) -> Result<()> {
        let RParam::SignedPower { eps, n } = self.r else {
            return Ok(());
        };
        if matches!(self.q, QParam::PlusMinusOne) {
            return Ok(());
        }
        let char2 = self.characteristic == 2;
        let zero_delta = match (self.family, self.q) {
            (Family::QBrauer, QParam::Root(spec)) => spec.qint_vanishes(n),
            (Family::QBrauer, _) => n == 0,
            // r = q⁻¹ means εq^N = 1; r = −q means εq^N = −q².
            (Family::Bmw, QParam::Root(spec)) => {
                spec.q_power_equals(n, eps, char2) || spec.q_power_equals(n - 2, -eps, char2)
            }
            (Family::Bmw, _) => (eps == 1 && n == 0) || (eps == -1 && n == 2),
            (Family::Brauer, _) => false,
        };
        if zero_delta {
            let what = match self.family {
                Family::QBrauer => "r = ±1 with q ≠ ±1",
                _ => "r = q⁻¹ or r = −q",
            };
            return Err(Error::InvalidParameters(format!("{what} forces δ = 0, which is excluded")));
        }
        Ok(())
    }

    pub fn root(&self) -> Option<RootSpec> {
        match self.q {
            QParam::Root(spec) => Some(spec),
            _ => None,
        }
    }

    /// True when the algebra is (isomorphic to) a Brauer algebra.
    pub fn is_brauer_like(&self) -> bool {
        self.family == Family::Brauer || matches!(self.q, QParam::PlusMinusOne)
    }

    /// The Brauer specification this algebra reduces to at `q = ±1`.
    pub fn as_brauer(&self) -> Result<ParamSpec> {
        let delta = self
            .delta
            .ok_or_else(|| Error::InvalidParameters("no loop parameter δ to reduce to a Brauer algebra".into()))?;
        ParamSpec::brauer(self.characteristic, delta)
    }
}
