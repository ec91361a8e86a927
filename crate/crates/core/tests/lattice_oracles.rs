use std::collections::HashMap;

use nikulin_core::lattice::{
    e8_cartan, e8_minus2, half_class, lambda_h, nikulin_lattice, nonstandard_classes, pic_tilde_class, short_vectors,
    smith_normal_form, Definiteness, IntMatrix, NonStandardCase,
};
use nikulin_core::Error;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use proptest::prelude::*;

/// Determinant by Laplace expansion over column subsets (independent of the
/// Bareiss routine in the crate).
fn laplace_det(m: &[Vec<i64>], rows: &[usize], cols: &[usize]) -> i128 {
    let k = rows.len();
    let mut memo: HashMap<u32, i128> = HashMap::new();
    memo.insert(0, 1);
    // dp[mask] = det of rows[0..|mask|] x cols[mask]
    for mask in 1u32..(1 << k) {
        let r = mask.count_ones() as usize - 1;
        let mut acc = 0i128;
        for c in 0..k {
            if mask >> c & 1 == 0 {
                continue;
            }
            let sub = memo[&(mask & !(1 << c))];
            // sign by position of c among the selected columns
            let later = (mask >> (c + 1)).count_ones();
            let s = if later % 2 == 0 { 1 } else { -1 };
            acc += s * i128::from(m[rows[r]][cols[c]]) * sub;
        }
        memo.insert(mask, acc);
    }
    memo[&((1u32 << k) - 1)]
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

/// Elementary divisors from determinantal divisors: `d_k = D_k / D_{k-1}`,
/// `D_k` the gcd of all `k x k` minors.
fn determinantal_divisors(m: &[Vec<i64>]) -> Vec<i128> {
    let (r, c) = (m.len(), m[0].len());
    let mut out = Vec::new();
    let mut prev = 1i128;
    for k in 1..=r.min(c) {
        let mut g = 0i128;
        'outer: for rows in subsets(r, k) {
            for cols in subsets(c, k) {
                g = g.gcd(&laplace_det(m, &rows, &cols));
                if g == prev {
                    // D_{k-1} | D_k, so the gcd cannot drop further
                    break 'outer;
                }
            }
        }
        if g == 0 {
            out.extend(std::iter::repeat_n(0, r.min(c) - out.len()));
            break;
        }
        out.push(g / prev);
        prev = g;
    }
    out
}

#[test]
fn laplace_oracle_sanity() {
    let m = vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]];
    assert_eq!(laplace_det(&m, &[0, 1, 2], &[0, 1, 2]), 4);
    assert_eq!(laplace_det(&m, &[0, 1], &[1, 2]), 1);
    assert_eq!(determinantal_divisors(&[vec![2, 0], vec![0, 3]]), [1, 6]);
}

#[test]
fn nikulin_discriminant_matches_oracle() {
    let n = nikulin_lattice().unwrap();
    let gram = n.gram().to_rows();
    let oracle = determinantal_divisors(&gram);
    assert_eq!(oracle, [1, 1, 2, 2, 2, 2, 2, 2]);
    let d = n.discriminant_group().unwrap();
    let ours: Vec<i128> = d.elementary_divisors.iter().map(|&x| i128::from(x)).collect();
    assert_eq!(ours, oracle);
    assert_eq!(d.group_order, 64);
}

#[test]
fn e8_minus2_discriminant_matches_oracle() {
    let e8 = e8_minus2().unwrap();
    assert!(e8.gram().diagonal().iter().all(|&d| d == -4));
    assert!(e8.is_even());
    let gram = e8.gram().to_rows();
    let all: Vec<usize> = (0..8).collect();
    assert_eq!(laplace_det(&gram, &all, &all), 256);
    assert_eq!(laplace_det(&e8_cartan(), &all, &all), 1);
    let oracle = determinantal_divisors(&gram);
    assert_eq!(oracle, [2; 8]);
    assert_eq!(e8.discriminant_group().unwrap().group_order, 256);
}

#[test]
fn lambda_h_discriminant_is_multiplicative() {
    let all: Vec<usize> = (0..9).collect();
    for h in 2..=20i64 {
        let l = lambda_h(h).unwrap();
        let d = l.discriminant_group().unwrap();
        let expected = 128 * (h - 1) as u128;
        assert_eq!(d.group_order, expected, "h={h}");
        assert_eq!(laplace_det(&l.gram().to_rows(), &all, &all).unsigned_abs(), expected);
    }
    assert_eq!(lambda_h(5).unwrap().discriminant_group().unwrap().group_order, 512);
}

#[test]
fn e8_minus2_is_negative_definite() {
    let e8 = e8_minus2().unwrap();
    assert_eq!(e8.definiteness().unwrap(), Definiteness::Negative);
    // every nonzero vector of coefficient height <= 2 has negative norm
    let g = e8.gram().to_rows();
    let mut x = [-2i64; 8];
    loop {
        if x.iter().any(|&c| c != 0) {
            let mut norm = 0i64;
            for i in 0..8 {
                for j in 0..8 {
                    norm += x[i] * g[i][j] * x[j];
                }
            }
            assert!(norm < 0, "{x:?}");
        }
        let Some(i) = x.iter().position(|&c| c < 2) else { break };
        x[i] += 1;
        for c in x.iter_mut().take(i) {
            *c = -2;
        }
    }
}

/// Vectors of squared norm `n` in the coordinate model of E8: `D8` together
/// with the coset `D8 + (1/2, ..., 1/2)`, all coordinate sums even.
/// Works on doubled coordinates `y = 2x`.
fn e8_coordinate_count(norm: i64) -> u64 {
    let target = 4 * norm;
    let mut count = 0;
    // integral part: y = 2z, z in [-2, 2]^8 suffices for norm <= 4
    let mut z = [-2i64; 8];
    loop {
        let sq: i64 = z.iter().map(|c| 4 * c * c).sum();
        let sum: i64 = z.iter().sum();
        if sq == target && sum.is_even() {
            count += 1;
        }
        let Some(i) = z.iter().position(|&c| c < 2) else { break };
        z[i] += 1;
        for c in z.iter_mut().take(i) {
            *c = -2;
        }
    }
    // half-integral part: y odd in {-3, -1, 1, 3}
    const ODD: [i64; 4] = [-3, -1, 1, 3];
    for code in 0u32..(1 << 16) {
        let y: Vec<i64> = (0..8).map(|i| ODD[(code >> (2 * i) & 3) as usize]).collect();
        let sq: i64 = y.iter().map(|c| c * c).sum();
        let sum: i64 = y.iter().sum();
        // sum of x = sum(y)/2 must be even
        if sq == target && sum % 4 == 0 {
            count += 1;
        }
    }
    count
}

#[test]
fn coordinate_model_simple_roots_have_cartan_gram() {
    // doubled coordinates of the Bourbaki simple roots
    let mut roots = vec![[1, -1, -1, -1, -1, -1, -1, 1], [2, 2, 0, 0, 0, 0, 0, 0]];
    for i in 0..6 {
        let mut r = [0i64; 8];
        r[i] = -2;
        r[i + 1] = 2;
        roots.push(r);
    }
    let cartan = e8_cartan();
    for i in 0..8 {
        for j in 0..8 {
            let dot: i64 = (0..8).map(|k| roots[i][k] * roots[j][k]).sum();
            assert_eq!(dot, 4 * cartan[i][j], "({i},{j})");
        }
    }
}

#[test]
fn e8_minus2_short_vectors_match_coordinate_model() {
    let e8 = e8_minus2().unwrap();
    let roots = e8_coordinate_count(2);
    let norm4 = e8_coordinate_count(4);
    assert_eq!(short_vectors(&e8, -4, false).unwrap().count, roots);
    assert_eq!(short_vectors(&e8, -8, false).unwrap().count, norm4);
    assert_eq!(roots, 240);
    assert_eq!(norm4, 2160);
    assert_eq!(short_vectors(&e8, -2, false).unwrap().count, 0);
    assert_eq!(short_vectors(&e8, 0, false).unwrap().count, 0);
    let listed = short_vectors(&e8, -4, true).unwrap().vectors.unwrap();
    let mut dedup = listed.clone();
    dedup.sort();
    dedup.dedup();
    assert_eq!(dedup.len(), 240);
}

#[test]
fn glue_parity_dichotomy() {
    let two = half_class([1, 1, 0, 0, 0, 0, 0, 0]).unwrap();
    let four = half_class([1, 1, 1, 1, 0, 0, 0, 0]).unwrap();
    for h in 2..=100i64 {
        let l = lambda_h(h).unwrap();
        assert!(l.is_even());
        assert_eq!(l.glue_check(&two).unwrap(), h % 4 == 3, "h={h}");
        assert_eq!(l.glue_check(&four).unwrap(), h % 4 == 1, "h={h}");
    }
}

#[test]
fn nonstandard_genus_formulas() {
    for h in (3..=199i64).step_by(2) {
        let c = nonstandard_classes(h).unwrap();
        match c.case {
            NonStandardCase::ThreeMod4 => {
                assert_eq!(h % 4, 3);
                assert_eq!((c.r1.norm, c.r1.genus, c.r1.branch), ((h - 3) / 2, (h + 1) / 4, 2));
                assert_eq!((c.r2.norm, c.r2.genus, c.r2.branch), ((h - 7) / 2, (h - 3) / 4, 6));
            }
            NonStandardCase::OneMod4 => {
                assert_eq!(h % 4, 1);
                for r in [&c.r1, &c.r2] {
                    assert_eq!((r.norm, r.genus, r.branch), ((h - 5) / 2, (h - 1) / 4, 4));
                }
            }
        }
        for r in [&c.r1, &c.r2] {
            assert_eq!(r.m_product * 2, (r.branch as i128).into());
            if r.is_effective() {
                assert_eq!(2 * r.genus - 1 + r.branch / 2, (h + 1) / 2);
            }
        }
        // the re-based overlattice has a quarter of the discriminant
        let l = lambda_h(h).unwrap();
        let glued = l.overlattice(&c.r1.class, "R1").unwrap();
        assert!(glued.is_even());
        assert_eq!(glued.discriminant_group().unwrap().group_order * 4, 128 * (h - 1) as u128);
    }
    for h in [2, 4, 8, 100] {
        assert_eq!(nonstandard_classes(h).unwrap_err(), Error::NonStandardForcesOdd(h));
    }
}

#[test]
fn pic_tilde_parity_sweep() {
    for h in 2..=200i64 {
        let p = pic_tilde_class(h).unwrap();
        assert_eq!(p.h_tilde_norm, 4 * h - 4);
        assert_eq!(p.a_norm % 2, 0, "h={h}");
        assert_eq!(p.r, h / 2, "h={h}");
        assert_eq!(p.chi, 2 + p.a_norm / 2);
        assert_eq!(p.disc_order, 256 * (h - 1) as u128);
    }
}

/// Full determinant by the same subset expansion, in arbitrary precision.
fn big_det(m: &[Vec<BigInt>]) -> BigInt {
    let k = m.len();
    let mut memo = vec![BigInt::zero(); 1 << k];
    memo[0] = BigInt::one();
    for mask in 1usize..(1 << k) {
        let r = mask.count_ones() as usize - 1;
        let mut acc = BigInt::zero();
        for c in (0..k).filter(|c| mask >> c & 1 == 1) {
            let term = &m[r][c] * &memo[mask & !(1 << c)];
            if (mask >> (c + 1)).count_ones() % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        memo[mask] = acc;
    }
    memo[(1 << k) - 1].clone()
}

fn divides_chain(d: &[i64]) -> bool {
    d.windows(2).all(|w| if w[0] == 0 { w[1] == 0 } else { w[1] % w[0] == 0 })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn smith_form_contract(rows in 1usize..=6, cols in 1usize..=6, seed in proptest::collection::vec(-10i64..=10, 36)) {
        let data: Vec<Vec<i64>> = (0..rows).map(|i| seed[i * 6..i * 6 + cols].to_vec()).collect();
        let m = IntMatrix::from_rows(&data).unwrap();
        let s = smith_normal_form(&m).unwrap();
        prop_assert!(s.verify(&m));
        prop_assert!(s.d.is_diagonal());
        let d = s.divisors();
        prop_assert!(d.iter().all(|&x| x >= 0));
        prop_assert!(divides_chain(&d));
        prop_assert!(big_det(&s.u.to_rows()).magnitude().is_one());
        prop_assert!(big_det(&s.v.to_rows()).magnitude().is_one());
        if rows == cols {
            let prod: i128 = d.iter().map(|&x| i128::from(x)).product();
            prop_assert_eq!(prod, m.determinant().unwrap().abs());
        }
        if rows.max(cols) <= 4 {
            let oracle = determinantal_divisors(&data);
            let ours: Vec<i128> = d.iter().map(|&x| i128::from(x)).collect();
            prop_assert_eq!(ours, oracle);
        }
    }
}
