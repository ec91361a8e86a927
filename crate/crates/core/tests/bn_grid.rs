use nikulin_core::bn::{
    cover_numerics_nonstandard, expected_gonality, hurwitz_cover_genus, odd_genera_without_negative_window,
    on_nikulin_general, prym_numbers, rho, rho_on_cover, schwarz_forced_empty, standard_nikulin_numerics,
    standard_nikulin_numerics_unchecked, BnInput,
};
use nikulin_core::lattice::pic_tilde_class;
use nikulin_core::Error;
use proptest::prelude::*;

// Written out from the definitions, independent of the crate's helpers.
fn rho_ref(g: i128, r: i128, d: i128) -> i128 {
    g - (r + 1) * (g - d + r)
}

fn rho_minus_ref(g: i128, r: i128) -> i128 {
    g - 1 - r * (r + 1) / 2
}

#[test]
fn prym_grid_identities() {
    for g in 2..=500u32 {
        for r in 0..=50u32 {
            let p = prym_numbers(g, r);
            let (gi, ri) = (i128::from(g), i128::from(r));
            let tilde = 2 * gi - 1 - (ri + 1) * (ri + 1);
            assert_eq!(p.rho_tilde, tilde, "g={g} r={r}");
            assert_eq!(p.rho_tilde, rho_ref(2 * gi - 1, ri, 2 * gi - 2));
            assert_eq!(p.rho_minus, rho_minus_ref(gi, ri));
            assert_eq!(p.rho_plus + p.rho_minus, p.rho_tilde);
            assert_eq!(p.cond_prym_bound, p.cond_rho_window, "g={g} r={r}");
            assert_eq!(p.cond_prym_bound, p.rho_minus > (-1).max(tilde));
            assert_eq!(p.cond_rho_window, -ri <= tilde && tilde < ri);
        }
    }
}

#[test]
fn degree_g_pencil_on_cover_has_rho_minus_one() {
    for g in 2..=500u32 {
        assert_eq!(rho_on_cover(g, 1, g), -1);
        assert_eq!(rho(BnInput { g: 2 * g - 1, r: 1, d: g }), -1);
        assert!(!schwarz_forced_empty(g, 1, g));
    }
}

#[test]
fn standard_nikulin_closed_forms() {
    for h in 2..=10_000u32 {
        let rec = standard_nikulin_numerics_unchecked(h).unwrap();
        let hi = i128::from(h);
        let (num, expected) = if h % 2 == 1 {
            let n = (hi - 1) * (hi - 7);
            (n, -n / 8)
        } else {
            let n = (hi - 2) * (hi - 4);
            (n, -n / 8)
        };
        assert_eq!(num % 8, 0, "h={h}");
        assert_eq!(rec.r, h / 2);
        assert_eq!(rec.rho_minus, expected, "h={h}");
        assert_eq!(rec.rho_minus, prym_numbers(h, h / 2).rho_minus);
        assert_eq!(rec.fails_welters, rec.rho_minus < 0);
        assert_eq!(rec.fails_welters, h > 7 || h == 6, "h={h}");
    }
}

#[test]
fn failure_region_complements_general_range() {
    for h in 2..=100u32 {
        let rec = standard_nikulin_numerics(h).unwrap();
        assert_eq!(rec.fails_welters, !on_nikulin_general(h), "h={h}");
        assert_eq!(rec.on_nikulin_general, h <= 7 && h != 6);
    }
}

#[test]
fn r_agrees_with_lattice_side() {
    for h in 2..=200u32 {
        let p = pic_tilde_class(i64::from(h)).unwrap();
        assert_eq!(i64::from(standard_nikulin_numerics(h).unwrap().r), p.r, "h={h}");
        assert_eq!(p.r, p.chi - 1);
    }
}

#[test]
fn gonality_is_never_schwarz_excluded() {
    for g in 2..=50u32 {
        let gon = expected_gonality(g).unwrap();
        assert_eq!(gon.gonality, if g % 2 == 1 { g + 1 } else { g });
        assert_eq!(gon.clifford_index + 2, gon.gonality);
        assert!(!schwarz_forced_empty(g, 1, gon.gonality), "g={g}");
    }
    assert!(matches!(expected_gonality(1), Err(Error::InvalidParameter(_))));
}

#[test]
fn nonstandard_covers_satisfy_hurwitz() {
    for h in (3..=199u32).step_by(2) {
        let covers = cover_numerics_nonstandard(h).unwrap();
        assert!(!covers.is_empty() && covers.len() <= 2, "h={h}");
        for c in covers {
            assert_eq!(c.cover_genus, i64::from(h + 1) / 2, "h={h}");
            assert_eq!(hurwitz_cover_genus(c.base_genus, c.branch_count).unwrap(), c.cover_genus);
        }
    }
    assert_eq!(cover_numerics_nonstandard(8).unwrap_err(), Error::NonStandardForcesOdd(8));
}

#[test]
fn negative_window_sweep_matches_brute_force() {
    // frozen from an independent brute force over r < 100
    let expected = [
        1, 3, 5, 9, 13, 15, 19, 21, 25, 27, 33, 35, 41, 43, 45, 51, 53, 55, 61, 63, 65, 73, 75, 77, 85, 87, 89, 91,
        99, 101, 103, 105, 113, 115, 117, 119, 129, 131, 133, 135, 145, 147, 149, 151, 153, 163, 165, 167, 169, 171,
        181, 183, 185, 187, 189,
    ];
    assert_eq!(odd_genera_without_negative_window(199), expected);
}

proptest! {
    #[test]
    fn hurwitz_formula(g in 1i64..10_000, half_b in 0i64..10_000) {
        prop_assert_eq!(hurwitz_cover_genus(g, 2 * half_b).unwrap(), 2 * g - 1 + half_b);
        prop_assert!(hurwitz_cover_genus(g, 2 * half_b + 1).is_err());
    }

    #[test]
    fn rho_matches_definition(g in 1u32..2000, r in 0u32..200, d in 0u32..4000) {
        prop_assert_eq!(rho(BnInput { g, r, d }), rho_ref(g.into(), r.into(), d.into()));
        let empty = schwarz_forced_empty(g.max(2), r, d);
        prop_assert_eq!(empty, rho_ref(2 * i128::from(g.max(2)) - 1, r.into(), d.into()) < -i128::from(r));
    }
}
