use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::hyptrig::HypLength;

/// The five curves on S²(2,2,2,n) that can lift to a systole.
///
/// Names follow the pentagon model of the orbifold: `CE` is half a cuff,
/// `CD` and `DE` are the two seam-crossing arcs, `C` runs through the order-n
/// point's neighbourhood, and `CE_PRIME` is the second shortest member of the
/// cuff family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FamilyId {
    #[serde(rename = "CD")]
    Cd,
    #[serde(rename = "DE")]
    De,
    #[serde(rename = "CE")]
    Ce,
    #[serde(rename = "CE_PRIME")]
    CePrime,
    #[serde(rename = "C")]
    C,
}

impl FamilyId {
    /// Canonical order, also the column order of every table this crate emits.
    pub const ALL: [FamilyId; 5] = [
        FamilyId::Cd,
        FamilyId::De,
        FamilyId::Ce,
        FamilyId::CePrime,
        FamilyId::C,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            FamilyId::Cd => "CD",
            FamilyId::De => "DE",
            FamilyId::Ce => "CE",
            FamilyId::CePrime => "CE_PRIME",
            FamilyId::C => "C",
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FamilyId::ALL
            .into_iter()
            .find(|f| f.tag() == s)
            .ok_or_else(|| Error::InvalidParams(format!("unknown curve family {s:?}")))
    }
}

/// One value per curve family.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PerFamily<T> {
    #[serde(rename = "CD")]
    pub cd: T,
    #[serde(rename = "DE")]
    pub de: T,
    #[serde(rename = "CE")]
    pub ce: T,
    #[serde(rename = "CE_PRIME")]
    pub ce_prime: T,
    #[serde(rename = "C")]
    pub c: T,
}

impl<T: Copy> PerFamily<T> {
    pub fn from_fn(mut f: impl FnMut(FamilyId) -> T) -> Self {
        PerFamily {
            cd: f(FamilyId::Cd),
            de: f(FamilyId::De),
            ce: f(FamilyId::Ce),
            ce_prime: f(FamilyId::CePrime),
            c: f(FamilyId::C),
        }
    }

    pub fn get(&self, family: FamilyId) -> T {
        match family {
            FamilyId::Cd => self.cd,
            FamilyId::De => self.de,
            FamilyId::Ce => self.ce,
            FamilyId::CePrime => self.ce_prime,
            FamilyId::C => self.c,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (FamilyId, T)> + '_ {
        FamilyId::ALL.into_iter().map(move |f| (f, self.get(f)))
    }
}

/// Orbifold lengths of the five candidates.
pub type CandidateLengths = PerFamily<HypLength>;
