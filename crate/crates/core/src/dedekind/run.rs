use std::str::FromStr;

use serde::Serialize;

use super::{
    bmm5_gamma, bmm5_iso, bmm5_nu, bmm6_iso, bmm6_lemma2_reference, bmm6_mu, MethodReport, QSplit,
};
use crate::boolean::{boolean, dedekind_standard, dedekind_via_theorem2, Trim};
use crate::classes::representation_system;
use crate::engine::{try_count_downsets, Count};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Theorem2,
    Standard,
    Nu,
    Gamma,
    Mu,
    Lemma2,
    Iso,
}

impl Method {
    pub const ALL: [Method; 7] = [
        Method::Theorem2,
        Method::Standard,
        Method::Nu,
        Method::Gamma,
        Method::Mu,
        Method::Lemma2,
        Method::Iso,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Theorem2 => "theorem2",
            Method::Standard => "standard",
            Method::Nu => "nu",
            Method::Gamma => "gamma",
            Method::Mu => "mu",
            Method::Lemma2 => "lemma2",
            Method::Iso => "iso",
        }
    }

    /// The `n` for which the method yields `b(n)`.
    pub fn supports(self, n: usize) -> bool {
        match self {
            Method::Theorem2 => n <= 6,
            Method::Standard => (2..=7).contains(&n),
            Method::Nu | Method::Gamma => n == 5,
            Method::Mu | Method::Lemma2 => n == 6,
            Method::Iso => n == 5 || n == 6,
        }
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Method> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Unsupported(format!("method `{s}`")))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DedekindRun {
    pub n: usize,
    pub method: Method,
    pub value: Count,
    /// The `b⁻⁻(n)` computation, for methods that have one.
    pub report: Option<MethodReport>,
}

fn bmm_direct(k: usize) -> Result<Count> {
    try_count_downsets(&boolean(k)?.sub_poset(Trim::Both)?)
}

fn bmm6() -> Result<MethodReport> {
    let split = QSplit::new()?;
    bmm6_iso(&split, &representation_system(&split.q23)?.r0)
}

/// `b(n)` by the given method. Methods that compute `b⁻⁻(n)` feed it into the
/// ladder; smaller `b⁻⁻(k)` are counted directly.
pub fn dedekind(n: usize, method: Method) -> Result<DedekindRun> {
    if !method.supports(n) {
        return Err(Error::Unsupported(format!(
            "method {} does not compute b({n})",
            method.name()
        )));
    }
    if method == Method::Standard {
        let value = dedekind_standard(n)?.value;
        return Ok(DedekindRun {
            n,
            method,
            value,
            report: None,
        });
    }
    let report = match method {
        Method::Nu => Some(bmm5_nu()?),
        Method::Gamma => Some(bmm5_gamma()?),
        Method::Mu => Some(bmm6_mu()?),
        Method::Lemma2 => Some(bmm6_lemma2_reference(&QSplit::new()?)?),
        Method::Iso if n == 5 => {
            let split = QSplit::new()?;
            Some(bmm5_iso(&representation_system(&split.q23)?.r0))
        }
        Method::Iso => Some(bmm6()?),
        _ => None,
    };
    let mut inputs = Vec::new();
    for k in 3..=n {
        let v = match &report {
            Some(r) if k == n => r.value,
            _ if k <= 5 => bmm_direct(k)?,
            _ => bmm6()?.value,
        };
        inputs.push((k, v));
    }
    let value = dedekind_via_theorem2(n, &inputs)?.dedekind(n);
    Ok(DedekindRun {
        n,
        method,
        value,
        report,
    })
}
