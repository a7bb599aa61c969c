use ivhs_core::degeneration::{equisingular_rank, mhs_dims, rank_defect, DegenerationSpec, SmoothingStep, TargetKind};
use ivhs_core::invariants::{curve_invariants, delta_of, SingularityKind, SingularityRecord};
use proptest::prelude::*;

fn kind() -> impl Strategy<Value = SingularityKind> {
    prop_oneof![
        Just(SingularityKind::Node),
        Just(SingularityKind::Cusp),
        Just(SingularityKind::Tacnode),
        (2u32..5).prop_map(SingularityKind::Ordinary),
        (1u32..6).prop_map(SingularityKind::A),
    ]
}

/// A step whose target has δ no larger than the initial type.
fn step() -> impl Strategy<Value = SmoothingStep> {
    (kind(), kind(), 0u8..3).prop_map(|(initial, other, mode)| {
        let target = match mode {
            0 => TargetKind::Smooth,
            1 => TargetKind::Singular(initial),
            _ if delta_of(other).unwrap() <= delta_of(initial).unwrap() => TargetKind::Singular(other),
            _ => TargetKind::Smooth,
        };
        SmoothingStep::new(initial, target)
    })
}

fn spec() -> impl Strategy<Value = DegenerationSpec> {
    (prop::collection::vec(step(), 0..5), 0u64..10).prop_map(|(steps, slack)| {
        let delta: u64 = steps.iter().map(|s| delta_of(s.initial).unwrap()).sum();
        DegenerationSpec {
            pa: delta + slack,
            steps,
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn report_identities(spec in spec()) {
        let r = rank_defect(&spec).unwrap();
        prop_assert!(r.delta_drop <= r.delta_initial && r.delta_initial <= spec.pa);
        prop_assert_eq!(r.predicted_max_rank + r.vanishing_cycle_dim, spec.pa);
        prop_assert_eq!(r.vanishing_cycle_dim, r.delta_drop);
        prop_assert_eq!(r.gr_w1_dim % 2, 0);
        prop_assert_eq!(r.gr_w1_dim + 2 * r.gr_w2_dim, 2 * spec.pa);
    }

    #[test]
    fn equisingular_specs_keep_full_rank(kinds in prop::collection::vec(kind(), 0..5), slack in 0u64..5) {
        let steps: Vec<SmoothingStep> = kinds.iter().copied().map(SmoothingStep::equisingular).collect();
        let delta: u64 = kinds.iter().map(|&k| delta_of(k).unwrap()).sum();
        let r = rank_defect(&DegenerationSpec { pa: delta + slack, steps }).unwrap();
        prop_assert_eq!(r.predicted_max_rank, delta + slack);
        prop_assert_eq!(r.delta_drop, 0);
    }

    #[test]
    fn smoothing_more_never_raises_rank(spec in spec(), extra in kind()) {
        let before = rank_defect(&spec).unwrap();
        let mut bigger = spec.clone();
        bigger.pa += delta_of(extra).unwrap();
        bigger.steps.push(SmoothingStep::new(extra, TargetKind::Smooth));
        let after = rank_defect(&bigger).unwrap();
        // Same curve with one more point smoothed: rank relative to p_a drops.
        prop_assert!(after.pa - after.predicted_max_rank > before.pa - before.predicted_max_rank);

        let mut smoothed = spec.clone();
        if let Some(first) = smoothed.steps.first_mut() {
            first.target = TargetKind::Smooth;
            let r = rank_defect(&smoothed).unwrap();
            prop_assert!(r.predicted_max_rank <= before.predicted_max_rank);
        }
    }

    #[test]
    fn mhs_and_normalization_agree(kinds in prop::collection::vec(kind(), 0..5), slack in 0u64..5) {
        let sings: Vec<SingularityRecord> = kinds.iter().map(|&k| SingularityRecord::new(k).unwrap()).collect();
        let delta: u64 = sings.iter().map(|s| s.delta).sum();
        let pa = delta + slack;
        let inv = curve_invariants(pa, &sings).unwrap();
        prop_assert_eq!(inv.arithmetic_genus, inv.geometric_genus + inv.total_delta);
        let mhs = mhs_dims(pa, &sings).unwrap();
        prop_assert_eq!(mhs.gr_w1, 2 * inv.geometric_genus);
        prop_assert_eq!(mhs.gr_w2, inv.total_delta);
        let eq = equisingular_rank(pa, &sings).unwrap();
        prop_assert_eq!(eq.total, eq.from_normalization + eq.from_singularities);
    }
}
