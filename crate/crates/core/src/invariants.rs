//! Closed-form genus and δ-invariant bookkeeping, canonical dimension counts,
//! Brill–Noether numbers and per-class reports on the canonical
//! multiplication map.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// Analytic type of a declared singular point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SingularityKind {
    Node,
    Cusp,
    Tacnode,
    /// Ordinary `m`-fold point, `m ≥ 2`.
    Ordinary(u32),
    /// `A_k` singularity `y^2 = x^(k+1)`, `k ≥ 1`.
    A(u32),
}

impl SingularityKind {
    fn validate(self) -> Result<Self> {
        match self {
            Self::Ordinary(m) if m < 2 => Err(Error::InvalidSingularity(self.to_string())),
            Self::A(0) => Err(Error::InvalidSingularity(self.to_string())),
            _ => Ok(self),
        }
    }
}

impl fmt::Display for SingularityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Node => f.write_str("node"),
            Self::Cusp => f.write_str("cusp"),
            Self::Tacnode => f.write_str("tacnode"),
            Self::Ordinary(m) => write!(f, "ordinary:{m}"),
            Self::A(k) => write!(f, "A:{k}"),
        }
    }
}

impl FromStr for SingularityKind {
    type Err = Error;

    /// Accepts `node`, `cusp`, `tacnode`, `ordinary:m` and `A:k`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidSingularity(s.to_string());
        let kind = match s.trim() {
            "node" => Self::Node,
            "cusp" => Self::Cusp,
            "tacnode" => Self::Tacnode,
            other => {
                let (name, arg) = other.split_once(':').ok_or_else(bad)?;
                let n: u32 = arg.trim().parse().map_err(|_| bad())?;
                match name.trim() {
                    "ordinary" => Self::Ordinary(n),
                    "A" => Self::A(n),
                    _ => return Err(bad()),
                }
            }
        };
        kind.validate()
    }
}

/// δ-invariant of a singularity type.
pub fn delta_of(kind: SingularityKind) -> Result<u64> {
    Ok(match kind.validate()? {
        SingularityKind::Node | SingularityKind::Cusp => 1,
        SingularityKind::Tacnode => 2,
        SingularityKind::Ordinary(m) => u64::from(m) * u64::from(m - 1) / 2,
        SingularityKind::A(k) => u64::from(k).div_ceil(2),
    })
}

/// Number of local analytic branches.
pub fn branches_of(kind: SingularityKind) -> Result<u64> {
    Ok(match kind.validate()? {
        SingularityKind::Cusp => 1,
        SingularityKind::Node | SingularityKind::Tacnode => 2,
        SingularityKind::Ordinary(m) => u64::from(m),
        SingularityKind::A(k) => {
            if k % 2 == 1 {
                2
            } else {
                1
            }
        }
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SingularityRecord {
    pub kind: SingularityKind,
    pub delta: u64,
    pub branches: u64,
}

impl SingularityRecord {
    pub fn new(kind: SingularityKind) -> Result<Self> {
        Ok(Self {
            kind,
            delta: delta_of(kind)?,
            branches: branches_of(kind)?,
        })
    }
}

impl FromStr for SingularityRecord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(s.parse()?)
    }
}

/// Arithmetic genus of a plane curve of degree `d`.
pub fn plane_pa(d: u64) -> u64 {
    assert!(d >= 1, "plane curve degree must be positive");
    if d < 3 {
        return 0;
    }
    (d - 1) * (d - 2) / 2
}

/// Genus `1 + ab(a+b-4)/2` of a complete intersection of type `(a, b)` in
/// three-space.
pub fn ci_genus(a: u64, b: u64) -> Result<u64> {
    let twice = 2 + (a * b) as i128 * (a as i128 + b as i128 - 4);
    if a == 0 || b == 0 || twice % 2 != 0 || twice < 0 {
        return Err(Error::NonIntegralGenus { a, b });
    }
    Ok((twice / 2) as u64)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveInvariants {
    pub arithmetic_genus: u64,
    pub geometric_genus: u64,
    pub total_delta: u64,
    pub singularities: Vec<SingularityRecord>,
}

pub fn total_delta(sings: &[SingularityRecord]) -> u64 {
    sings.iter().map(|s| s.delta).sum()
}

/// Splits `p_a` into the genus of the normalization plus the δ-invariants.
pub fn curve_invariants(pa: u64, sings: &[SingularityRecord]) -> Result<CurveInvariants> {
    let delta = total_delta(sings);
    if delta > pa {
        return Err(Error::DeltaExceedsGenus { total_delta: delta, pa });
    }
    Ok(CurveInvariants {
        arithmetic_genus: pa,
        geometric_genus: pa - delta,
        total_delta: delta,
        singularities: sings.to_vec(),
    })
}

/// `h^0(ω^⊗2) = 3g - 3`.
pub fn h0_omega_sq(g: u64) -> Result<u64> {
    if g < 2 {
        return Err(Error::GenusOutOfRange { genus: g, min: 2 });
    }
    Ok(3 * g - 3)
}

/// `dim Sym² H^0(ω) = g(g+1)/2`.
pub fn sym2_dim(g: u64) -> u64 {
    g * (g + 1) / 2
}

/// Brill–Noether number `g - (r+1)(g-d+r)`.
pub fn brill_noether_rho(g: u64, r: u64, d: u64) -> i64 {
    let (g, r, d) = (g as i64, r as i64, d as i64);
    g - (r + 1) * (g - d + r)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PetriClass {
    PetriGeneralNonhyperelliptic,
    Hyperelliptic,
    Trigonal,
    PlaneQuintic,
}

impl PetriClass {
    pub fn tag(self) -> &'static str {
        match self {
            Self::PetriGeneralNonhyperelliptic => "petri_general_nonhyperelliptic",
            Self::Hyperelliptic => "hyperelliptic",
            Self::Trigonal => "trigonal",
            Self::PlaneQuintic => "plane_quintic",
        }
    }
}

impl fmt::Display for PetriClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for PetriClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [
            Self::PetriGeneralNonhyperelliptic,
            Self::Hyperelliptic,
            Self::Trigonal,
            Self::PlaneQuintic,
        ]
        .into_iter()
        .find(|c| c.tag() == s)
        .ok_or_else(|| Error::UnknownClass(s.to_string()))
    }
}

/// Largest IVHS rank in a single direction, when a value is known for the class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MaxIvhsRank {
    Known(u64),
    Undocumented,
}

impl fmt::Display for MaxIvhsRank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Known(r) => write!(f, "{r}"),
            Self::Undocumented => f.write_str("undocumented"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ClassMuReport {
    pub genus: u64,
    pub class: PetriClass,
    pub sym2: u64,
    pub target: u64,
    pub mu_rank: u64,
    pub mu_kernel: u64,
    pub max_ivhs_rank: MaxIvhsRank,
}

/// Dimension count for `μ: Sym² H^0(ω) → H^0(ω^⊗2)` on a curve of the given class.
///
/// Non-hyperelliptic curves have surjective `μ` (Noether), so the kernel is
/// the `(g-2)(g-3)/2` quadrics through the canonical model; for
/// hyperelliptic curves the image has dimension `2g - 1`.
pub fn class_mu_report(g: u64, class: PetriClass) -> Result<ClassMuReport> {
    if g < 2 {
        return Err(Error::GenusOutOfRange { genus: g, min: 2 });
    }
    let incompatible = || Error::ClassGenus {
        class: class.tag().to_string(),
        genus: g,
    };
    let sym2 = sym2_dim(g);
    let target = h0_omega_sq(g)?;
    let (mu_rank, max_ivhs_rank) = match class {
        PetriClass::Hyperelliptic => {
            let max = if g == 3 {
                MaxIvhsRank::Known(2)
            } else {
                MaxIvhsRank::Undocumented
            };
            (2 * g - 1, max)
        }
        PetriClass::PetriGeneralNonhyperelliptic => {
            if g < 3 {
                return Err(incompatible());
            }
            (target, MaxIvhsRank::Known(g))
        }
        PetriClass::Trigonal => {
            if g < 4 {
                return Err(incompatible());
            }
            let max = if g == 5 {
                MaxIvhsRank::Known(4)
            } else {
                MaxIvhsRank::Undocumented
            };
            (target, max)
        }
        PetriClass::PlaneQuintic => {
            if g != 6 {
                return Err(incompatible());
            }
            (target, MaxIvhsRank::Undocumented)
        }
    };
    Ok(ClassMuReport {
        genus: g,
        class,
        sym2,
        target,
        mu_rank,
        mu_kernel: sym2 - mu_rank,
        max_ivhs_rank,
    })
}
