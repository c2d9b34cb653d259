use proptest::prelude::*;

use crystal_reflect::{BInfinity, CartanData, HighestWeightCrystal, RootVector, Weight, Word};

const PRESETS: [&str; 6] = ["A1", "A2", "A3", "B2", "G2", "A1~"];

fn cartan_and_word(max_len: usize) -> impl Strategy<Value = (CartanData, Vec<usize>)> {
    (0..PRESETS.len()).prop_flat_map(move |k| {
        let c = CartanData::preset(PRESETS[k]).unwrap();
        let n = c.rank();
        (Just(c), prop::collection::vec(0..n, 0..=max_len))
    })
}

fn cartan_and_weight() -> impl Strategy<Value = (CartanData, Weight, usize)> {
    (0..PRESETS.len()).prop_flat_map(|k| {
        let c = CartanData::preset(PRESETS[k]).unwrap();
        let n = c.rank();
        (
            Just(c),
            prop::collection::vec(0i64..5, n),
            prop::collection::vec(-6i64..6, n),
            0..n,
        )
            .prop_map(|(c, dom, root, i)| (c, Weight::new(dom, RootVector(root)), i))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn reflection_is_an_involution((c, mu, i) in cartan_and_weight()) {
        let s = c.reflect_weight(i, &mu);
        prop_assert_eq!(c.reflect_weight(i, &s), mu.clone());
        prop_assert_eq!(c.pair(i, &s), -c.pair(i, &mu));
        prop_assert_eq!(&s.dominant, &mu.dominant);
    }

    #[test]
    fn braid_relations_hold((c, mu, _) in cartan_and_weight()) {
        let n = c.rank();
        for i in 0..n {
            for j in (i + 1)..n {
                let m = match c.entry(i, j) * c.entry(j, i) {
                    0 => 2,
                    1 => 3,
                    2 => 4,
                    3 => 6,
                    _ => continue,
                };
                let a: Vec<usize> = (0..m).map(|k| if k % 2 == 0 { i } else { j }).collect();
                let b: Vec<usize> = (0..m).map(|k| if k % 2 == 0 { j } else { i }).collect();
                prop_assert_eq!(c.act_weight(&a, &mu), c.act_weight(&b, &mu));
            }
        }
    }

    #[test]
    fn reduced_words_have_positive_inversions_and_nonnegative_d(
        (c, lam, _) in cartan_and_weight()
    ) {
        let lambda = Weight::dominant(lam.dominant);
        for w in c.reduced_words(4) {
            let roots = c.inversion_roots(&w).unwrap();
            prop_assert!(roots.iter().all(RootVector::is_nonnegative));
            for a in 0..roots.len() {
                for b in (a + 1)..roots.len() {
                    prop_assert_ne!(&roots[a], &roots[b]);
                }
            }
            prop_assert!(c.d_sequence(&w, &lambda).unwrap().iter().all(|&d| d >= 0));
        }
    }

    #[test]
    fn crystal_operators_are_mutually_inverse((c, word) in cartan_and_word(10)) {
        let binf = BInfinity::new(&c);
        let b = binf.from_word(&word);
        prop_assert_eq!(b.depth(), word.len());
        let replayed = binf.from_word(b.lowering_word());
        prop_assert_eq!(replayed.canonical(), b.canonical());
        prop_assert!(b.canonical().entries().iter().all(|&x| x >= 0));
        for i in 0..c.rank() {
            let f = binf.f(i, &b);
            prop_assert_eq!(binf.e(i, &f), Some(b.clone()));
            let mut alpha = RootVector::zero(c.rank());
            alpha.add_simple(i, 1);
            prop_assert_eq!(&f.weight() + &alpha, b.weight());
            if let Some(e) = binf.e(i, &b) {
                prop_assert_eq!(binf.f(i, &e), b.clone());
            }
            // eps counts the applicable raisings, phi follows from the weight
            let mut k = 0;
            let mut cur = b.clone();
            while let Some(next) = binf.e(i, &cur) {
                cur = next;
                k += 1;
            }
            prop_assert_eq!(binf.eps(i, &b), k);
            prop_assert_eq!(binf.phi(i, &b), k + c.pair_root(i, &b.weight()));
        }
    }

    #[test]
    fn starred_operators_are_mutually_inverse((c, word) in cartan_and_word(8)) {
        let binf = BInfinity::new(&c);
        let b = binf.from_word(&word);
        for i in 0..c.rank() {
            let m = binf.eps_star(i, &b);
            prop_assert!(m >= 0);
            let up = binf.f_star(i, &b, 1);
            prop_assert_eq!(binf.eps_star(i, &up), m + 1);
            prop_assert_eq!(binf.e_star(i, &up, 1).unwrap(), b.clone());
            if m > 0 {
                let down = binf.e_star(i, &b, 1).unwrap();
                let mut alpha = RootVector::zero(c.rank());
                alpha.add_simple(i, 1);
                prop_assert_eq!(down.weight(), &b.weight() + &alpha);
            }
            prop_assert!(binf.e_star(i, &b, m + 1).is_err());
        }
    }

    #[test]
    fn models_agree_after_reembedding((c, word) in cartan_and_word(8)) {
        let binf = BInfinity::new(&c);
        let b = binf.from_word(&word);
        for head in 0..c.rank() {
            let y = binf.reembed(&b, head);
            prop_assert_eq!(y.weight(), b.weight());
            for j in 0..c.rank() {
                prop_assert_eq!(y.eps(&c, j), binf.eps(j, &b));
            }
        }
    }

    #[test]
    fn saito_reflections_transform_weights((c, word) in cartan_and_word(8)) {
        let binf = BInfinity::new(&c);
        let b = binf.from_word(&word);
        for i in 0..c.rank() {
            let top = binf.e_max(i, &b);
            let s = binf.saito_hat(i, &b);
            prop_assert_eq!(s.weight(), c.reflect_root(i, &top.weight()));
            prop_assert_eq!(binf.eps_star(i, &s), 0);
            prop_assert_eq!(binf.saito(i, &top).unwrap(), s);
        }
    }

    #[test]
    fn truncation_is_stable((c, word) in cartan_and_word(10), extra in 1usize..12) {
        let binf = BInfinity::new(&c);
        let x = binf.from_word(&word).canonical().clone();
        let k = x.truncation_length();
        for i in 0..c.rank() {
            let (short, long) = (x.signature(&c, i, k), x.signature(&c, i, k + extra));
            prop_assert_eq!(short.eps, long.eps);
            prop_assert_eq!(short.first, long.first);
            if short.eps > 0 {
                prop_assert_eq!(short.last, long.last);
            }
            prop_assert_eq!(x.apply_f_with(&c, i, k), x.apply_f_with(&c, i, k + extra));
            prop_assert_eq!(x.apply_e_with(&c, i, k), x.apply_e_with(&c, i, k + extra));
        }
    }
}

#[test]
fn saito_is_injective_into_star_domain() {
    for name in ["A2", "B2", "G2"] {
        let c = CartanData::preset(name).unwrap();
        let binf = BInfinity::new(&c);
        let all: Vec<_> = binf.enumerate(6).into_iter().flatten().collect();
        for i in 0..c.rank() {
            let mut images = std::collections::HashSet::new();
            for b in all.iter().filter(|b| binf.eps(i, b) == 0) {
                let s = binf.saito(i, b).unwrap();
                assert_eq!(binf.eps_star(i, &s), 0);
                assert!(images.insert(s), "{name}: sigma_{i} not injective");
            }
        }
    }
}

#[test]
fn longest_word_vertex_chains_end_at_lambda() {
    // sigma_hat along a longest word returns u_inf, so the last vertex is lambda
    for (name, lambda) in [("A2", vec![2, 1]), ("B2", vec![1, 1]), ("G2", vec![1, 0]), ("A3", vec![1, 0, 1])] {
        let c = CartanData::preset(name).unwrap();
        let hw = HighestWeightCrystal::new(&c, Weight::dominant(lambda.clone())).unwrap();
        let top = c.positive_root_count().unwrap();
        let words: Vec<Word> = c.reduced_words(top).into_iter().filter(|w| w.len() == top).collect();
        for x in hw.enumerate(usize::MAX).iter() {
            for w in &words {
                let t = hw.run_recursion(x.b(), w).unwrap();
                assert!(t.lhs().is_highest());
                let v = hw.vertices(&t).unwrap();
                assert_eq!(v.last().unwrap(), &Weight::dominant(lambda.clone()));
                let n = hw.lusztig_params(&t).unwrap();
                // Lusztig parameters recover the weight of b
                let betas = c.inversion_roots(w).unwrap();
                let mut total = RootVector::zero(c.rank());
                for (nk, beta) in n.iter().zip(&betas) {
                    total = &total + &beta.scaled(*nk);
                }
                assert_eq!(total, -&x.b().weight());
            }
        }
    }
}
