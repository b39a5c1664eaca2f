use perfectsolve::io::{emit_dimacs, emit_tri, generate, parse_dimacs, parse_tri, random_trigraph, GeneratorSpec};
use perfectsolve::oracle::alpha_bf;
use perfectsolve::{alpha, extract_stable_set, Error, Trigraph};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn arb_trigraph(max_n: usize) -> impl Strategy<Value = Trigraph> {
    (1..=max_n, any::<u64>(), 0.0..1.0f64, 0.0..0.3f64, prop::collection::vec(0u64..20, max_n)).prop_map(
        |(n, seed, p_edge, p_switch, weights)| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            random_trigraph(&mut rng, n, p_edge, p_switch).with_weights(weights[..n].to_vec())
        },
    )
}

fn generated(seed: u64, n: usize) -> Trigraph {
    generate(&GeneratorSpec::new(seed, n)).unwrap().0
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn tri_format_round_trips(t in arb_trigraph(16)) {
        let text = emit_tri(&t);
        let back = parse_tri(&text).unwrap();
        prop_assert_eq!(&back, &t);
        prop_assert_eq!(emit_tri(&back), text);
    }

    #[test]
    fn dimacs_round_trips(t in arb_trigraph(16)) {
        let g = t.full_realization();
        prop_assert_eq!(parse_dimacs(&emit_dimacs(&g)).unwrap(), g);
    }

    #[test]
    fn complement_is_an_involution(t in arb_trigraph(12)) {
        prop_assert_eq!(t.complement().complement(), t);
    }

    #[test]
    fn alpha_matches_exhaustive_or_certifies(seed in 0u64..5000, n in 8usize..=14) {
        let t = generated(seed, n);
        match alpha(&t) {
            Ok(out) => {
                prop_assert_eq!(out.alpha, alpha_bf(&t).unwrap().0);
                let s = extract_stable_set(&t, &out).unwrap();
                prop_assert!(t.is_strong_stable(&s));
                prop_assert_eq!(s.weight(t.weights()), out.alpha as u128);
            }
            Err(Error::NotInClass(c)) => {
                prop_assert!(perfectsolve::decompose::validate_certificate(&c).is_ok());
            }
            Err(e) => prop_assert!(false, "unexpected error {}", e),
        }
    }

    #[test]
    fn doubling_weights_doubles_alpha(seed in 0u64..5000, n in 8usize..=20) {
        let t = generated(seed, n);
        if let Ok(out) = alpha(&t) {
            let doubled: Vec<_> = t.weights().iter().map(|w| 2 * w).collect();
            let again = alpha(&t.clone().with_weights(doubled)).unwrap();
            prop_assert_eq!(again.alpha, 2 * out.alpha);
        }
    }

    #[test]
    fn answers_do_not_depend_on_labels(seed in 0u64..5000, n in 8usize..=20, shuffle in any::<u64>()) {
        use rand::seq::SliceRandom;
        let t = generated(seed, n);
        let mut perm: Vec<usize> = t.vertices().collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(shuffle));
        let mut p = Trigraph::new(t.vertex_count());
        for u in t.vertices() {
            p.set_weight(perm[u], t.weight(u));
            for v in u + 1..t.vertex_count() {
                p.set(perm[u], perm[v], t.adjacency(u, v));
            }
        }
        if let (Ok(a), Ok(b)) = (alpha(&t), alpha(&p)) {
            prop_assert_eq!(a.alpha, b.alpha);
        }
    }
}
