use num_complex::Complex64;
use qfield::channel::{
    all_signs, assemble_rho, assemble_rho_from_strings, assemble_rho_merged, broadcast_sweep,
    build_exponent_string, channel_amplitudes, coherent_info_of, gram, log_grid, merged_vacuum_factor,
    rho_cb, wick_factor, BobSpec, ChannelConfig, GramRoute, SlotKind,
};
use qfield::observables::wick_expectation;
use qfield::qmath::{ket, Axis, CMat};
use qfield::smearing::Dim;
use qfield::verify::state_defects;

fn assert_valid(m: &CMat) {
    let (herm, trace, neg) = state_defects(m).unwrap();
    assert!(herm <= 1e-9 && trace <= 1e-9 && neg <= 1e-9, "{herm} {trace} {neg}");
}

#[test]
fn zero_coupling_leaves_bob_in_plus_y() {
    for dim in [Dim::Three, Dim::Two] {
        let r = rho_cb(&ChannelConfig::gaussian(dim, 1.0, 0.0).with_lambda_pi(0.0)).unwrap();
        let y = ket(Axis::Y, 1);
        let want = CMat::identity(2).scale_real(0.5).kron(&CMat::outer(&y, &y));
        assert!(r.rho_cb.matrix().max_abs_diff(&want) < 1e-15);
        assert!((r.coherent_info + 1.0).abs() <= 1e-9);
    }
}

#[test]
fn full_bob_decodes_alice_observables() {
    let cfg = ChannelConfig::gaussian(Dim::Three, 1.0, 30.0).with_route(GramRoute::Quadrature);
    let amps = channel_amplitudes(&cfg).unwrap();
    let pairs = [(SlotKind::BobX, SlotKind::AlicePi), (SlotKind::BobZ, SlotKind::AlicePhi)];
    for (bob, alice) in pairs {
        let (b, a) = (amps.slot(bob), amps.slot(alice));
        assert!(b.max_abs_diff(a).unwrap() <= 1e-10 * a.peak());
    }
}

#[test]
fn complementary_windows_rebuild_the_full_bob() {
    let (r0, eps, k_max) = (9.3, 0.5, 40.0);
    let base = ChannelConfig::gaussian(Dim::Three, 1.0, 10.0)
        .with_k_max(k_max)
        .with_route(GramRoute::Quadrature);
    let full = channel_amplitudes(&base).unwrap();
    let inner = channel_amplitudes(&base.clone().with_bob(BobSpec::TruncatedInner { r0, eps })).unwrap();
    let outer = channel_amplitudes(&base.clone().with_bob(BobSpec::TruncatedOuter { r0, eps })).unwrap();
    for kind in [SlotKind::BobX, SlotKind::BobZ] {
        let want = full.slot(kind);
        for (i, w) in want.values().iter().enumerate() {
            let sum = inner.slot(kind).values()[i] + outer.slot(kind).values()[i];
            assert!((sum - w).norm() <= 1e-8 * want.peak(), "{kind:?} node {i}");
        }
    }
}

#[test]
fn eight_slot_strings_agree_with_the_gram_route() {
    for l in [0.5, 5.0, 50.0] {
        let cfg = ChannelConfig::gaussian(Dim::Three, 1.0, l).with_route(GramRoute::Quadrature);
        let amps = channel_amplitudes(&cfg).unwrap();
        let g = amps.gram().unwrap();
        for s in all_signs().step_by(17) {
            let direct = wick_expectation(&build_exponent_string(&amps, &s).unwrap()).unwrap();
            assert!((direct - wick_factor(&g, &s)).norm() <= 1e-12, "λ={l}");
        }
        let from_strings = assemble_rho_from_strings(&amps).unwrap();
        assert!(from_strings.max_abs_diff(&assemble_rho(&g, None)) <= 1e-12);
        assert_valid(&from_strings);
    }
}

#[test]
fn closed_form_gram_matches_quadrature() {
    for dim in [Dim::Three, Dim::Two] {
        for bob in [BobSpec::Full, BobSpec::Rank1Only, BobSpec::None] {
            let cfg = ChannelConfig::gaussian(dim, 1.0, 7.0).with_bob(bob);
            let closed = gram(&cfg).unwrap();
            let quad = gram(&cfg.clone().with_route(GramRoute::Quadrature)).unwrap();
            let scale = closed.g.iter().flatten().map(|z| z.norm()).fold(0.0, f64::max);
            assert!(closed.max_abs_diff(&quad) <= 1e-8 * scale, "{dim:?} {bob:?}");
        }
    }
}

#[test]
fn merged_string_reproduces_the_full_channel() {
    for dim in [Dim::Three, Dim::Two] {
        for l in [1.0, 100.0] {
            let cfg = ChannelConfig::gaussian(dim, 1.0, l);
            let lp = cfg.resolved_lambda_pi().unwrap();
            let g = gram(&cfg).unwrap();
            for s in all_signs() {
                let d = wick_factor(&g, &s) - merged_vacuum_factor(dim, 1.0, l, lp, &s);
                assert!(d.norm() <= 1e-10);
            }
            let merged = assemble_rho_merged(dim, 1.0, l, lp);
            assert!(merged.max_abs_diff(rho_cb(&cfg).unwrap().rho_cb.matrix()) <= 1e-10);
        }
    }
}

#[test]
fn vacuum_factors_are_bounded() {
    let g = gram(&ChannelConfig::gaussian(Dim::Three, 1.0, 3.0)).unwrap();
    for s in all_signs() {
        assert!(wick_factor(&g, &s).norm() <= 1.0 + 1e-12);
    }
    let zero = gram(&ChannelConfig::gaussian(Dim::Three, 1.0, 0.0)).unwrap();
    assert!(all_signs().all(|s| wick_factor(&zero, &s) == Complex64::new(1.0, 0.0)));
}

#[test]
fn coherent_information_is_deterministic() {
    let cfg = ChannelConfig::gaussian(Dim::Two, 1.0, 12.0);
    let a = coherent_info_of(&cfg).unwrap();
    let b = coherent_info_of(&cfg).unwrap();
    assert_eq!(a.to_bits(), b.to_bits());
}

#[test]
fn capacity_grows_to_one() {
    let cfg = ChannelConfig::gaussian(Dim::Three, 1.0, 1000.0);
    assert!(coherent_info_of(&cfg).unwrap() >= 0.99);
    assert!(coherent_info_of(&ChannelConfig::gaussian(Dim::Three, 1.0, 0.1)).unwrap() <= 0.0);
}

#[test]
fn rank_one_parties_carry_nothing() {
    for l in [1.0, 10.0, 100.0] {
        let base = ChannelConfig::gaussian(Dim::Three, 1.0, l);
        assert!(coherent_info_of(&base.clone().with_bob(BobSpec::Rank1Only)).unwrap() <= 1e-9);
        assert!(coherent_info_of(&base.clone().with_alice_rank1(true)).unwrap() <= 1e-9);
    }
}

#[test]
fn log_grid_endpoints() {
    let g = log_grid(0.1, 1000.0, 30);
    assert_eq!(g.len(), 30);
    assert!((g[0] - 0.1).abs() < 1e-15 && (g[29] - 1000.0).abs() < 1e-9);
}

#[test]
fn strong_coupling_broadcast_follows_the_split() {
    let cfg = ChannelConfig::gaussian(Dim::Three, 1.0, 1000.0);
    let rows = broadcast_sweep(&[0.5, 19.5], &cfg, 0.1).unwrap();
    assert!(rows[0].ic_bob2 >= 0.99 && rows[0].ic_bob1 <= 1e-6);
    assert!(rows[1].ic_bob1 >= 0.99 && rows[1].ic_bob2 <= 1e-6);
}

#[test]
fn truncation_needs_three_dimensions() {
    let cfg = ChannelConfig::gaussian(Dim::Two, 1.0, 10.0).with_bob(BobSpec::TruncatedInner { r0: 5.0, eps: 0.1 });
    assert!(rho_cb(&cfg).is_err());
}
