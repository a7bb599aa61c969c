//! Rank defects of non-equisingular degenerations.
//!
//! Each singular point of the central fiber either keeps its type or is
//! (partially) smoothed to a type of smaller δ. The total drop
//! `Δ = Σ (δ_initial - δ_target)` is the number of vanishing cycles and the
//! loss of maximal IVHS rank: the nearby fibers reach rank `p_a - Δ`.

use std::fmt;
use std::str::FromStr;

use crate::invariants::{delta_of, total_delta, SingularityKind, SingularityRecord};
use crate::{Error, Result};

/// Type of a point on the nearby fiber.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TargetKind {
    Smooth,
    Singular(SingularityKind),
}

impl TargetKind {
    pub fn delta(self) -> Result<u64> {
        match self {
            Self::Smooth => Ok(0),
            Self::Singular(kind) => delta_of(kind),
        }
    }
}

impl fmt::Display for TargetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Smooth => f.write_str("smooth"),
            Self::Singular(kind) => kind.fmt(f),
        }
    }
}

impl FromStr for TargetKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim() == "smooth" {
            Ok(Self::Smooth)
        } else {
            s.parse().map(Self::Singular)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SmoothingStep {
    pub initial: SingularityKind,
    pub target: TargetKind,
}

impl SmoothingStep {
    pub fn new(initial: SingularityKind, target: TargetKind) -> Self {
        Self { initial, target }
    }

    /// The step that keeps the singularity's type.
    pub fn equisingular(kind: SingularityKind) -> Self {
        Self::new(kind, TargetKind::Singular(kind))
    }
}

impl fmt::Display for SmoothingStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}", self.initial, self.target)
    }
}

impl FromStr for SmoothingStep {
    type Err = Error;

    /// `initial:target`, e.g. `node:smooth`, `tacnode:node`,
    /// `ordinary:3:smooth` or `A:3:A:1`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let bad = || Error::InvalidSingularity(s.to_string());
        let initial_len = match parts.first().map(|p| p.trim()) {
            Some("ordinary") | Some("A") => 2,
            Some(_) => 1,
            None => return Err(bad()),
        };
        if parts.len() <= initial_len {
            return Err(bad());
        }
        Ok(Self {
            initial: parts[..initial_len].join(":").parse()?,
            target: parts[initial_len..].join(":").parse()?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegenerationSpec {
    pub pa: u64,
    pub steps: Vec<SmoothingStep>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DegenerationReport {
    pub pa: u64,
    pub delta_initial: u64,
    pub delta_target: u64,
    pub delta_drop: u64,
    pub predicted_max_rank: u64,
    pub gr_w1_dim: u64,
    pub gr_w2_dim: u64,
    pub vanishing_cycle_dim: u64,
}

/// Evaluates the δ bookkeeping of a degeneration.
pub fn rank_defect(spec: &DegenerationSpec) -> Result<DegenerationReport> {
    let mut delta_initial = 0;
    let mut delta_target = 0;
    for (index, step) in spec.steps.iter().enumerate() {
        let initial = delta_of(step.initial)?;
        let target = step.target.delta()?;
        if target > initial {
            return Err(Error::DeltaIncrease { index, initial, target });
        }
        delta_initial += initial;
        delta_target += target;
    }
    if delta_initial > spec.pa {
        return Err(Error::DeltaExceedsGenus {
            total_delta: delta_initial,
            pa: spec.pa,
        });
    }
    let drop = delta_initial - delta_target;
    Ok(DegenerationReport {
        pa: spec.pa,
        delta_initial,
        delta_target,
        delta_drop: drop,
        predicted_max_rank: spec.pa - drop,
        gr_w1_dim: 2 * (spec.pa - delta_initial),
        gr_w2_dim: delta_initial,
        vanishing_cycle_dim: drop,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MhsDims {
    pub gr_w1: u64,
    pub gr_w2: u64,
}

impl MhsDims {
    /// `dim H^1(X_0) = gr_w1 + gr_w2`.
    pub fn total(&self) -> u64 {
        self.gr_w1 + self.gr_w2
    }
}

/// Graded dimensions of the weight filtration on `H^1` of a singular curve:
/// `Gr_1` is `H^1` of the normalization, `Gr_2` has dimension `Σδ`.
pub fn mhs_dims(pa: u64, sings: &[SingularityRecord]) -> Result<MhsDims> {
    let delta = total_delta(sings);
    if delta > pa {
        return Err(Error::DeltaExceedsGenus { total_delta: delta, pa });
    }
    Ok(MhsDims {
        gr_w1: 2 * (pa - delta),
        gr_w2: delta,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EquisingularRank {
    pub total: u64,
    pub from_normalization: u64,
    pub from_singularities: u64,
}

/// In an equisingular family the IVHS rank is `g(normalization) + δ = p_a`.
pub fn equisingular_rank(pa: u64, sings: &[SingularityRecord]) -> Result<EquisingularRank> {
    let delta = total_delta(sings);
    if delta > pa {
        return Err(Error::DeltaExceedsGenus { total_delta: delta, pa });
    }
    Ok(EquisingularRank {
        total: pa,
        from_normalization: pa - delta,
        from_singularities: delta,
    })
}

/// Drop in the maximal Yukawa rank for a hypersurface acquiring ordinary
/// double points: one vanishing cycle per node.
pub fn yukawa_defect(node_count: u64) -> u64 {
    node_count
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(pa: u64, steps: &[&str]) -> DegenerationSpec {
        DegenerationSpec {
            pa,
            steps: steps.iter().map(|s| s.parse().unwrap()).collect(),
        }
    }

    #[test]
    fn node_smoothing_on_quintic() {
        let r = rank_defect(&spec(6, &["node:smooth"])).unwrap();
        assert_eq!((r.delta_drop, r.predicted_max_rank, r.vanishing_cycle_dim), (1, 5, 1));
        assert_eq!((r.gr_w1_dim, r.gr_w2_dim), (10, 1));
    }

    #[test]
    fn tacnode_cases() {
        let r = rank_defect(&spec(8, &["tacnode:node"])).unwrap();
        assert_eq!((r.delta_drop, r.predicted_max_rank), (1, 7));
        let r = rank_defect(&spec(8, &["tacnode:smooth"])).unwrap();
        assert_eq!((r.delta_drop, r.predicted_max_rank), (2, 6));
    }

    #[test]
    fn triple_point() {
        let r = rank_defect(&spec(10, &["ordinary:3:smooth"])).unwrap();
        assert_eq!((r.delta_drop, r.predicted_max_rank), (3, 7));
    }

    #[test]
    fn equisingular_has_no_defect() {
        let r = rank_defect(&spec(6, &["node:node", "cusp:cusp"])).unwrap();
        assert_eq!((r.delta_drop, r.predicted_max_rank), (0, 6));
    }

    #[test]
    fn invalid_specs() {
        assert_eq!(
            rank_defect(&spec(6, &["node:tacnode"])),
            Err(Error::DeltaIncrease {
                index: 0,
                initial: 1,
                target: 2
            })
        );
        assert_eq!(
            rank_defect(&spec(2, &["ordinary:3:smooth"])),
            Err(Error::DeltaExceedsGenus { total_delta: 3, pa: 2 })
        );
    }

    #[test]
    fn step_parsing() {
        let s: SmoothingStep = "A:3:A:1".parse().unwrap();
        assert_eq!(
            s,
            SmoothingStep::new(SingularityKind::A(3), TargetKind::Singular(SingularityKind::A(1)))
        );
        assert_eq!(s.to_string(), "A:3->A:1");
        assert!("node".parse::<SmoothingStep>().is_err());
        assert!("node:blob".parse::<SmoothingStep>().is_err());
        assert!("ordinary:3".parse::<SmoothingStep>().is_err());
        assert_eq!(
            "ordinary:3:ordinary:2".parse::<SmoothingStep>().unwrap().target,
            TargetKind::Singular(SingularityKind::Ordinary(2))
        );
    }

    #[test]
    fn mixed_hodge_dims() {
        let node: SingularityRecord = "node".parse().unwrap();
        assert_eq!(mhs_dims(4, &[node]).unwrap(), MhsDims { gr_w1: 6, gr_w2: 1 });
        assert_eq!(mhs_dims(4, &[node]).unwrap().total(), 7);
        assert_eq!(mhs_dims(5, &[]).unwrap(), MhsDims { gr_w1: 10, gr_w2: 0 });
        assert_eq!(mhs_dims(6, &[node]).unwrap(), MhsDims { gr_w1: 10, gr_w2: 1 });
    }

    #[test]
    fn equisingular_split() {
        let node: SingularityRecord = "node".parse().unwrap();
        let tac: SingularityRecord = "tacnode".parse().unwrap();
        let r = equisingular_rank(6, &[node]).unwrap();
        assert_eq!((r.total, r.from_normalization, r.from_singularities), (6, 5, 1));
        let r = equisingular_rank(5, &[]).unwrap();
        assert_eq!((r.total, r.from_normalization, r.from_singularities), (5, 5, 0));
        let r = equisingular_rank(7, &[tac]).unwrap();
        assert_eq!((r.total, r.from_normalization, r.from_singularities), (7, 5, 2));
    }

    #[test]
    fn yukawa() {
        assert_eq!(yukawa_defect(0), 0);
        assert_eq!(yukawa_defect(1), 1);
        assert_eq!(yukawa_defect(5), 5);
    }
}
