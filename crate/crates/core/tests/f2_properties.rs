use std::sync::Arc;

use nikulin_core::f2::{
    count_forms_by_arf, count_special_theta, count_special_theta_in, decompose_and_restrict, enumerate_forms,
    even_form_count_closed, odd_form_count_closed, special_theta_closed, vanishing_thetanull_closed, F2Vector,
    QuadraticForm, SymplecticSpace,
};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn space(g: usize) -> Arc<SymplecticSpace> {
    Arc::new(SymplecticSpace::standard(g).unwrap())
}

fn vectors(n: usize) -> Vec<F2Vector> {
    F2Vector::all(n).unwrap().collect()
}

/// Rank over F2 by plain Gaussian elimination.
fn rank(vs: &[u64]) -> usize {
    let mut rows = vs.to_vec();
    let mut r = 0;
    for bit in 0..64 {
        let Some(p) = (r..rows.len()).find(|&i| rows[i] >> bit & 1 == 1) else {
            continue;
        };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i != r && rows[i] >> bit & 1 == 1 {
                rows[i] ^= rows[r];
            }
        }
        r += 1;
    }
    r
}

fn random_symplectic_basis(s: &SymplecticSpace, rng: &mut ChaCha8Rng) -> Vec<F2Vector> {
    let n = s.dim();
    loop {
        let extra = rng.gen_range(0..4);
        let mut seq: Vec<F2Vector> = (0..n + extra)
            .map(|_| F2Vector::from_bits(n, rng.gen::<u64>() & ((1 << n) - 1)).unwrap())
            .collect();
        seq.shuffle(rng);
        let bits: Vec<u64> = seq.iter().map(|v| v.bits()).collect();
        if rank(&bits) < n {
            continue;
        }
        let basis = s.symplectic_basis_from(&seq).unwrap();
        assert!(s.is_symplectic_basis(&basis));
        return basis;
    }
}

#[test]
fn polarity_exhaustive_up_to_genus_4() {
    for g in 1..=4 {
        let s = space(g);
        let vs = vectors(2 * g);
        // all forms for g <= 3, a deterministic sample for g = 4 (forms differ by
        // linear functionals, which cannot break polarity)
        let forms: Vec<QuadraticForm> = enumerate_forms(&s).unwrap().step_by(if g <= 3 { 1 } else { 997 }).collect();
        for q in &forms {
            for &x in &vs {
                for &y in &vs {
                    let lhs = q.eval(x + y).unwrap();
                    let rhs = q.eval(x).unwrap() ^ q.eval(y).unwrap() ^ s.pair(x, y).unwrap();
                    assert_eq!(lhs, rhs, "g={g} q={q} x={x} y={y}");
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn polarity_sampled_up_to_genus_6(g in 1usize..=6, values: u64, x: u64, y: u64) {
        let s = space(g);
        let mask = (1u64 << (2 * g)) - 1;
        let q = QuadraticForm::new(s.clone(), F2Vector::from_bits(2 * g, values & mask).unwrap()).unwrap();
        let x = F2Vector::from_bits(2 * g, x & mask).unwrap();
        let y = F2Vector::from_bits(2 * g, y & mask).unwrap();
        prop_assert_eq!(q.eval(x + y).unwrap(), q.eval(x).unwrap() ^ q.eval(y).unwrap() ^ s.pair(x, y).unwrap());
    }

    #[test]
    fn pairing_is_bilinear_and_alternating(g in 1usize..=8, x: u64, y: u64, z: u64) {
        let s = space(g);
        let n = 2 * g;
        let mask = (1u64 << n) - 1;
        let [x, y, z] = [x, y, z].map(|b| F2Vector::from_bits(n, b & mask).unwrap());
        prop_assert!(!s.pair(x, x).unwrap());
        prop_assert_eq!(s.pair(x + y, z).unwrap(), s.pair(x, z).unwrap() ^ s.pair(y, z).unwrap());
        prop_assert_eq!(s.pair(x, y).unwrap(), s.pair(y, x).unwrap());
    }
}

#[test]
fn arf_is_basis_independent() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for g in 1..=5 {
        let s = space(g);
        let forms: Vec<QuadraticForm> = enumerate_forms(&s).unwrap().collect();
        let reference: Vec<bool> = forms.iter().map(QuadraticForm::arf).collect();
        for _ in 0..100 {
            let basis = random_symplectic_basis(&s, &mut rng);
            for (q, &a) in forms.iter().zip(&reference) {
                assert_eq!(q.arf_in_basis(&basis).unwrap(), a);
            }
        }
    }
}

#[test]
fn arf_matches_zero_count_oracle() {
    for g in 1..=4u32 {
        let s = space(g as usize);
        let even_zeros = (1u64 << (2 * g - 1)) + (1u64 << (g - 1));
        let odd_zeros = (1u64 << (2 * g - 1)) - (1u64 << (g - 1));
        for q in enumerate_forms(&s).unwrap() {
            let z = q.zero_count().unwrap();
            assert!(z >= 1);
            assert_eq!(z == even_zeros, !q.arf(), "g={g} q={q}");
            assert_eq!(z, if q.arf() { odd_zeros } else { even_zeros });
        }
    }
}

#[test]
fn counts_by_arf_match_closed_forms() {
    for g in 1..=6u32 {
        let c = count_forms_by_arf(g as usize).unwrap();
        assert_eq!(u128::from(c.even), even_form_count_closed(g), "g={g}");
        assert_eq!(u128::from(c.odd), odd_form_count_closed(g), "g={g}");
    }
}

#[test]
fn enumeration_is_distinct_and_complete() {
    for g in 1..=4 {
        let mut seen: Vec<u64> = enumerate_forms(&space(g)).unwrap().map(|q| q.basis_values().bits()).collect();
        let total = seen.len();
        assert_eq!(total, 1 << (2 * g));
        seen.sort_unstable();
        seen.dedup();
        assert_eq!(seen.len(), total);
    }
}

#[test]
fn translate_identity_and_freeness() {
    for g in 1..=3 {
        let s = space(g);
        let zero = F2Vector::zero(2 * g).unwrap();
        let forms: Vec<QuadraticForm> = enumerate_forms(&s).unwrap().collect();
        for q in &forms {
            assert_eq!(&q.translate(zero).unwrap(), q);
            let mut orbit: Vec<u64> = Vec::new();
            for v in vectors(2 * g) {
                let t = q.translate(v).unwrap();
                assert_eq!(t.arf(), q.arf() ^ q.eval(v).unwrap());
                for x in vectors(2 * g) {
                    assert_eq!(t.eval(x).unwrap(), q.eval(x).unwrap() ^ s.pair(x, v).unwrap());
                }
                if t == *q {
                    assert!(v.is_zero(), "nonzero {v} fixes {q}");
                }
                orbit.push(t.basis_values().bits());
            }
            // transitivity: the orbit of one form is all 2^{2g} forms
            orbit.sort_unstable();
            orbit.dedup();
            assert_eq!(orbit.len(), forms.len());
        }
    }
}

#[test]
fn beauville_counts_for_every_eta() {
    for g in 2..=6u32 {
        let s = space(g as usize);
        let n = 2 * g as usize;
        let etas: Vec<F2Vector> = if g <= 4 {
            vectors(n).into_iter().filter(|v| !v.is_zero()).collect()
        } else {
            vec![F2Vector::unit(n, 0).unwrap(), F2Vector::from_bits(n, (1 << n) - 1).unwrap()]
        };
        for eta in etas {
            let c = count_special_theta_in(&s, eta).unwrap();
            assert_eq!(u128::from(c.solutions), special_theta_closed(g), "g={g} eta={eta}");
            assert_eq!(u128::from(c.vanishing_thetanulls), vanishing_thetanull_closed(g), "g={g} eta={eta}");
        }
    }
    for bits in 1..4 {
        let c = count_special_theta(1, F2Vector::from_bits(2, bits).unwrap()).unwrap();
        assert_eq!((c.solutions, c.vanishing_thetanulls), (0, 0));
    }
}

#[test]
fn arf_is_additive_over_hyperbolic_splitting() {
    for g in 1..=3 {
        let s = space(g);
        let n = 2 * g;
        for eta in vectors(n) {
            for eps in vectors(n) {
                if !s.pair(eta, eps).unwrap() {
                    continue;
                }
                for q in enumerate_forms(&s).unwrap() {
                    let d = decompose_and_restrict(&q, eta, eps).unwrap();
                    assert_eq!(d.sigma.dim(), 2);
                    assert_eq!(d.sigma_perp.dim(), n - 2);
                    for &w in d.sigma_perp.basis() {
                        assert!(!s.pair(w, eta).unwrap() && !s.pair(w, eps).unwrap());
                    }
                    assert_eq!(d.q_perp.space().half_dim(), g - 1);
                    assert_eq!(q.arf(), d.q_sigma.arf() ^ d.q_perp.arf());
                    // restriction to the plane: arf = q(eta) q(eps)
                    assert_eq!(d.q_sigma.arf(), q.eval(eta).unwrap() & q.eval(eps).unwrap());
                }
            }
        }
    }
}

#[test]
fn restricted_forms_keep_polarity() {
    let s = space(3);
    let eta = F2Vector::unit(6, 1).unwrap();
    let eps = F2Vector::from_bits(6, 0b010_000 | 0b000_001).unwrap();
    assert!(s.pair(eta, eps).unwrap());
    let q = enumerate_forms(&s).unwrap().nth(37).unwrap();
    let d = decompose_and_restrict(&q, eta, eps).unwrap();
    let ps = d.q_perp.space();
    for x in vectors(4) {
        for y in vectors(4) {
            assert_eq!(
                d.q_perp.eval(x + y).unwrap(),
                d.q_perp.eval(x).unwrap() ^ d.q_perp.eval(y).unwrap() ^ ps.pair(x, y).unwrap()
            );
        }
    }
}
