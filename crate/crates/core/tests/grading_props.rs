use proptest::prelude::*;
use qhinv_core::samples::random_quasi_homogeneous;
use qhinv_core::{find_weights, parse_polynomial, weighted_degree};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn detected_grading_makes_f_homogeneous(seed in any::<u64>(), extra in 0usize..3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (f, expected) = random_quasi_homogeneous(&mut rng, 3, 6, extra);
        let g = find_weights(&f).unwrap();
        prop_assert_eq!(&g, &expected);
        for m in f.monomials() {
            prop_assert_eq!(weighted_degree(m, &g).unwrap(), g.degree());
        }
    }

    #[test]
    fn permuting_variables_permutes_weights(seed in any::<u64>(), perm_idx in 0usize..6) {
        let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let perm = perms[perm_idx];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (f, g) = random_quasi_homogeneous(&mut rng, 3, 6, 1);
        let permuted = find_weights(&f.permute_variables(&perm)).unwrap();
        prop_assert_eq!(permuted.degree(), g.degree());
        for (i, &p) in perm.iter().enumerate() {
            prop_assert_eq!(permuted.weights()[p], g.weights()[i]);
        }
    }
}

#[test]
fn detection_is_deterministic() {
    let vars: Vec<String> = ["x", "y", "z", "w"].iter().map(|s| s.to_string()).collect();
    for text in [
        "x*y + z^2 + w^2",
        "x^2*y + y^3 + z^3*w + w^4",
        "x^3*y + y^3*z + z^3*x + w^2",
    ] {
        let f = parse_polynomial(text, &vars).unwrap();
        let first = format!("{:?}", find_weights(&f));
        for _ in 0..5 {
            assert_eq!(format!("{:?}", find_weights(&f)), first);
        }
    }
}

#[test]
fn multigraded_choice_is_minimal() {
    let vars: Vec<String> = ["x", "y", "z", "w"].iter().map(|s| s.to_string()).collect();
    // m_x + m_y = 2 m_z = 2 m_w: d = 2 at all-ones.
    let f = parse_polynomial("x*y + z^2 + w^2", &vars).unwrap();
    let g = find_weights(&f).unwrap();
    assert_eq!((g.weights(), g.degree()), (&[1, 1, 1, 1][..], 2));
    // Brute force over weights up to 6 confirms no smaller degree exists.
    let f = parse_polynomial("x^2*y + z^3*w + w^2*x*z", &vars).unwrap();
    let g = find_weights(&f).unwrap();
    let mut best: Option<(u64, Vec<u64>)> = None;
    for a in 1..=12u64 {
        for b in 1..=12u64 {
            for c in 1..=12u64 {
                for d in 1..=12u64 {
                    let w = [a, b, c, d];
                    let degs: Vec<u64> = f
                        .monomials()
                        .map(|m| m.exponents().iter().zip(&w).map(|(&e, &x)| e as u64 * x).sum())
                        .collect();
                    if degs.iter().all(|&x| x == degs[0]) {
                        let cand = (degs[0], w.to_vec());
                        if best.as_ref().is_none_or(|b| cand < *b) {
                            best = Some(cand);
                        }
                    }
                }
            }
        }
    }
    let (d, w) = best.unwrap();
    assert_eq!((g.degree(), g.weights().to_vec()), (d, w));
}
