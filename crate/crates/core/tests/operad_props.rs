use std::collections::BTreeMap;

use harrison_core::operad::{bar_complex, cobar_bar_complex, graft, BarTree, CobarBarElement};
use proptest::prelude::*;

type Chain = BTreeMap<CobarBarElement, i64>;

fn add(c: &mut Chain, k: i64, e: CobarBarElement) {
    *c.entry(e).or_insert(0) += k;
}

fn clean(mut c: Chain) -> Chain {
    c.retain(|_, v| *v != 0);
    c
}

fn d(x: &CobarBarElement) -> Chain {
    let mut c = Chain::new();
    for (k, e) in x.differential() {
        add(&mut c, k, e);
    }
    clean(c)
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn pool(max: usize) -> Vec<CobarBarElement> {
    let mut v = vec![CobarBarElement::unit()];
    for n in 2..=max {
        v.extend(CobarBarElement::all(n).unwrap());
    }
    v
}

fn element(max: usize) -> impl Strategy<Value = CobarBarElement> {
    proptest::sample::select(pool(max))
}

#[test]
fn differentials_square_to_zero() {
    for n in 2..=6 {
        assert!(bar_complex(n).unwrap().verify_dd_zero().passed(), "bar {n}");
        assert!(
            cobar_bar_complex(n).unwrap().verify_dd_zero().passed(),
            "cobar-bar {n}"
        );
    }
}

#[test]
fn bar_homology_has_lie_dimension() {
    for n in 2..=5 {
        let betti = bar_complex(n).unwrap().betti().unwrap();
        let nonzero: Vec<_> = betti.iter().filter(|(_, b)| *b > 0).collect();
        assert_eq!(nonzero, vec![&((n - 2) as i64, factorial(n - 1))], "n={n}");
    }
}

#[test]
fn cobar_bar_resolves_comm() {
    for n in 2..=5 {
        let betti = cobar_bar_complex(n).unwrap().betti().unwrap();
        let nonzero: Vec<_> = betti.into_iter().filter(|(_, b)| *b > 0).collect();
        assert_eq!(nonzero, vec![(0, 1)], "n={n}");
    }
}

#[test]
fn bar_trees_count_by_schroeder() {
    // number of rooted trees with n labelled leaves and no unary vertices
    let expected = [1, 1, 4, 26, 236];
    for n in 1..=5 {
        assert_eq!(BarTree::all(n).unwrap().len(), expected[n - 1], "n={n}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn graft_is_associative_up_to_koszul(
        a in element(3),
        bs in proptest::collection::vec(element(2), 3),
        cs in proptest::collection::vec(element(2), 6),
    ) {
        let bs = &bs[..a.arity()];
        let mut used = 0;
        let mut groups = Vec::new();
        for b in bs {
            groups.push(cs[used..used + b.arity()].to_vec());
            used += b.arity();
        }
        let flat: Vec<CobarBarElement> = groups.concat();
        prop_assume!(flat.iter().map(|c| c.arity()).sum::<usize>() >= 1);

        let (s1, ab) = graft(&a, bs).unwrap();
        let (s2, left) = graft(&ab, &flat).unwrap();

        let mut inner = Vec::new();
        let mut s3 = 1;
        for (b, g) in bs.iter().zip(&groups) {
            let (s, x) = graft(b, g).unwrap();
            s3 *= s;
            inner.push(x);
        }
        let (s4, right) = graft(&a, &inner).unwrap();
        prop_assert_eq!(&left, &right);

        // moving the degrees of each c-group past the later b's
        let mut koszul = 0;
        for i in 0..bs.len() {
            let ci: usize = groups[i].iter().map(|c| c.degree()).sum();
            let later: usize = bs[i + 1..].iter().map(|b| b.degree()).sum();
            koszul += ci * later;
        }
        let k = if koszul % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(s1 * s2, s3 * s4 * k);
    }

    #[test]
    fn differential_is_a_derivation_for_graft(
        a in element(3),
        bs in proptest::collection::vec(element(3), 3),
    ) {
        let bs = &bs[..a.arity()];
        let (s, ab) = graft(&a, bs).unwrap();
        let mut lhs = Chain::new();
        for (e, k) in d(&ab) {
            add(&mut lhs, s * k, e);
        }
        let mut rhs = Chain::new();
        for (e, k) in d(&a) {
            let (t, g) = graft(&e, bs).unwrap();
            add(&mut rhs, k * t, g);
        }
        let mut before = a.degree();
        for i in 0..bs.len() {
            let sign = if before % 2 == 0 { 1 } else { -1 };
            for (e, k) in d(&bs[i]) {
                let mut args = bs.to_vec();
                args[i] = e;
                let (t, g) = graft(&a, &args).unwrap();
                add(&mut rhs, sign * k * t, g);
            }
            before += bs[i].degree();
        }
        prop_assert_eq!(clean(lhs), clean(rhs));
    }
}
