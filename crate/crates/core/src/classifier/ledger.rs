//! Known disagreements between the case lists and first principles.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::abelian::AbelianGroup;
use crate::base_rings::BaseRing;
use crate::error::{Error, Result};
use crate::ntheory::is_prime;

use super::CleannessClass;

/// Environment variable naming a ledger file to use instead of the bundled one.
pub const LEDGER_ENV: &str = "CLEANRING_LEDGER";

const BUNDLED: &str = include_str!("../../data/discrepancies.toml");
const SUPPORTED_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscrepancyLedger {
    pub version: u32,
    #[serde(default, rename = "entry")]
    pub entries: Vec<LedgerEntry>,
}

/// A single value or a list of accepted values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum OneOrMany<T> {
    One(T),
    Many(Vec<T>),
}

impl<T: PartialEq> OneOrMany<T> {
    pub fn contains(&self, x: &T) -> bool {
        match self {
            OneOrMany::One(v) => v == x,
            OneOrMany::Many(vs) => vs.contains(x),
        }
    }
}

/// One expected disagreement. Every present field must match.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LedgerEntry {
    /// `rational`, `cyclotomic`, `quadratic` or `*`.
    pub base: String,
    /// Case label, or a prefix followed by `*`.
    pub case: String,
    /// `m` or `d`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub param: Option<OneOrMany<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exp: Option<OneOrMany<u64>>,
    /// `exp(G)` is an odd prime.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exp_prime: Option<bool>,
    /// `[modulus, residue]` constraint on `p`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p_mod: Option<[u64; 2]>,
    /// Value of `(Delta/p)` on a quadratic base.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub legendre: Option<i8>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cyclic: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theorem: Option<CleannessClass>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_principles: Option<CleannessClass>,
    pub note: String,
}

fn case_matches(pattern: &str, label: &str) -> bool {
    match pattern.strip_suffix('*') {
        Some(prefix) => label.starts_with(prefix),
        None => pattern == label,
    }
}

impl LedgerEntry {
    pub fn matches(
        &self,
        base: &BaseRing,
        group: &AbelianGroup,
        case: Option<&str>,
        theorem: CleannessClass,
        first_principles: CleannessClass,
    ) -> bool {
        (self.base == "*" || self.base == base.kind.name())
            && case.is_some_and(|c| case_matches(&self.case, c))
            && self
                .param
                .as_ref()
                .is_none_or(|x| base.kind.param().is_some_and(|v| x.contains(&v)))
            && self.exp.as_ref().is_none_or(|x| x.contains(&group.exponent()))
            && self.exp_prime.is_none_or(|b| {
                let e = group.exponent();
                (e % 2 == 1 && is_prime(e)) == b
            })
            && self.p_mod.is_none_or(|[m, r]| m > 0 && base.p % m == r)
            && self.legendre.is_none_or(|l| base.legendre_delta == Some(l))
            && self.cyclic.is_none_or(|c| group.is_cyclic() == c)
            && self.theorem.is_none_or(|v| v == theorem)
            && self.first_principles.is_none_or(|v| v == first_principles)
    }
}

impl DiscrepancyLedger {
    pub fn empty() -> Self {
        Self {
            version: SUPPORTED_VERSION,
            entries: Vec::new(),
        }
    }

    pub fn from_toml_str(text: &str) -> Result<Self> {
        let ledger: Self = toml::from_str(text).map_err(|e| Error::Ledger(e.to_string()))?;
        if ledger.version != SUPPORTED_VERSION {
            return Err(Error::Ledger(format!(
                "unsupported ledger version {} (expected {SUPPORTED_VERSION})",
                ledger.version
            )));
        }
        Ok(ledger)
    }

    /// The ledger shipped with the crate.
    pub fn bundled() -> Result<Self> {
        Self::from_toml_str(BUNDLED)
    }

    pub fn from_path(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Ledger(format!("{}: {e}", path.display())))?;
        Self::from_toml_str(&text)
    }

    /// An explicit path wins over [`LEDGER_ENV`], which wins over the bundled copy.
    pub fn load(explicit: Option<&Path>) -> Result<Self> {
        if let Some(path) = explicit {
            return Self::from_path(path);
        }
        match std::env::var_os(LEDGER_ENV) {
            Some(path) if !path.is_empty() => Self::from_path(Path::new(&path)),
            _ => Self::bundled(),
        }
    }

    pub fn to_toml_string(&self) -> Result<String> {
        toml::to_string(self).map_err(|e| Error::Ledger(e.to_string()))
    }

    pub fn find(
        &self,
        base: &BaseRing,
        group: &AbelianGroup,
        case: Option<&str>,
        theorem: CleannessClass,
        first_principles: CleannessClass,
    ) -> Option<&LedgerEntry> {
        self.entries
            .iter()
            .find(|e| e.matches(base, group, case, theorem, first_principles))
    }
}
