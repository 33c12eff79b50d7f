use harrison_core::cinfty::{builtin_algebras, load_algebra, mutations, save_algebra};
use harrison_core::linalg::Rational;
use harrison_core::torus::{shuffle_product, word_differential, WordChain};
use num_traits::Zero;
use proptest::prelude::*;

fn add_into(out: &mut WordChain, w: Vec<usize>, k: Rational) {
    let e = out.entry(w).or_insert_with(Rational::zero);
    *e += k;
}

fn d_chain(a: &harrison_core::cinfty::CInftyAlgebra, c: &WordChain) -> WordChain {
    let mut out = WordChain::new();
    for (w, k) in c {
        for (v, m) in word_differential(a, w) {
            add_into(&mut out, v, k * m);
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

#[test]
fn algebra_files_round_trip() {
    let all = builtin_algebras()
        .into_iter()
        .map(|(_, a)| a)
        .chain(mutations().into_iter().map(|m| m.algebra));
    for a in all {
        let text = save_algebra(&a);
        let back = load_algebra(&text).unwrap();
        assert_eq!(back, a, "{}", a.name());
        assert_eq!(save_algebra(&back), text);
    }
}

fn algebra_and_word() -> impl Strategy<Value = (usize, Vec<usize>)> {
    let dims: Vec<usize> = builtin_algebras().iter().map(|(_, a)| a.dim()).collect();
    (0..dims.len()).prop_flat_map(move |i| (Just(i), proptest::collection::vec(0..dims[i], 1..5)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn bar_differential_squares_to_zero((i, w) in algebra_and_word()) {
        let (_, a) = &builtin_algebras()[i];
        let once = WordChain::from([(w.clone(), Rational::from_integer(1.into()))]);
        prop_assert!(d_chain(a, &d_chain(a, &once)).is_empty(), "{} {:?}", a.name(), w);
    }

    #[test]
    fn shuffles_preserve_letters((i, u) in algebra_and_word(), v in proptest::collection::vec(0usize..1, 1..3)) {
        let (_, a) = &builtin_algebras()[i];
        let mut expected: Vec<usize> = u.iter().chain(&v).copied().collect();
        expected.sort_unstable();
        for (w, k) in shuffle_product(a, &u, &v) {
            prop_assert!(!k.is_zero());
            let mut letters = w.clone();
            letters.sort_unstable();
            prop_assert_eq!(&letters, &expected);
        }
    }
}
