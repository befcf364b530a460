use proptest::prelude::*;

use semisimplicity::branching::{path_count, ReflectedLabel};
use semisimplicity::brauer::{factorize, factorize_prime, AlgebraElement, BrauerDiagram};
use semisimplicity::cellular::standard_tableaux;
use semisimplicity::criteria::{decide, m0};
use semisimplicity::exactalg::{qint, qint_at_one, LaurentPoly, QParam, Rational, RootSpec};
use semisimplicity::params::{DeltaSpec, ParamSpec, RParam};
use semisimplicity::weights::evaluate_weight;
use semisimplicity::{Bound, Cell, Partition};

fn partition(max_part: usize, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn diagram(n: usize) -> impl Strategy<Value = BrauerDiagram> {
    Just((0..2 * n).collect::<Vec<_>>()).prop_shuffle().prop_map(move |order| {
        let mut matching = vec![0; 2 * n];
        for pair in order.chunks(2) {
            matching[pair[0]] = pair[1];
            matching[pair[1]] = pair[0];
        }
        BrauerDiagram::from_matching(matching).unwrap()
    })
}

fn element(n: usize) -> impl Strategy<Value = AlgebraElement<Rational>> {
    prop::collection::vec((diagram(n), -3i64..=3), 1..=4).prop_map(move |terms| {
        AlgebraElement::from_terms(n, terms.into_iter().map(|(d, c)| (d, Rational::from_integer(c.into())))).unwrap()
    })
}

fn delta() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_filter("δ ≠ 0", |(a, _)| *a != 0).prop_map(|(a, b)| Rational::new(a.into(), b.into()))
}

fn same_strands<S: Strategy>(f: impl Fn(usize) -> S) -> impl Strategy<Value = (S::Value, S::Value)> {
    (1usize..=5).prop_flat_map(move |n| (f(n), f(n)))
}

proptest! {
    #[test]
    fn d_values_are_monotone_off_the_diagonal(l in partition(7, 7)) {
        for c in l.cells() {
            let d = l.dvalue(c).unwrap();
            for next in [Cell::new(c.row, c.col + 1), Cell::new(c.row + 1, c.col)] {
                if !l.contains(next) {
                    continue;
                }
                let e = l.dvalue(next).unwrap();
                if c.row <= c.col && next.row <= next.col {
                    prop_assert!(e <= d, "{} {} → {}", l, c, next);
                }
                if c.row > c.col && next.row > next.col {
                    prop_assert!(e >= d, "{} {} → {}", l, c, next);
                }
            }
            if c.is_diagonal() {
                prop_assert_eq!(d, 2 * l.part(c.row) as i64 - 2 * c.row as i64);
                prop_assert!(d >= 0);
            }
        }
    }

    #[test]
    fn hooks_detect_corners(l in partition(7, 7)) {
        let corners = l.removable();
        for c in l.cells() {
            let h = l.hook(c).unwrap();
            prop_assert!(h >= 1);
            prop_assert_eq!(h == 1, corners.contains(&c));
        }
    }

    #[test]
    fn conjugation_negates_d(l in partition(8, 8)) {
        let lc = l.conjugate();
        prop_assert_eq!(&lc.conjugate(), &l);
        for c in l.cells().filter(|c| c.row < c.col) {
            prop_assert_eq!(lc.dvalue(Cell::new(c.col, c.row)).unwrap(), -l.dvalue(c).unwrap() - 2);
        }
    }

    #[test]
    fn top_level_paths_count_tableaux(l in partition(4, 4)) {
        let n = l.size();
        let count = path_count(&ReflectedLabel::new(l.clone(), n).unwrap());
        prop_assert_eq!(count, standard_tableaux(&l).len().into());
    }

    #[test]
    fn q_integers(d in 1i64..=40) {
        let q = LaurentPoly::var('q');
        let lhs = &qint(d) * &(&q - &LaurentPoly::power('q', -1));
        prop_assert_eq!(lhs, &LaurentPoly::power('q', d) - &LaurentPoly::power('q', -d));
        prop_assert_eq!(qint_at_one(d), d);
    }

    #[test]
    fn trace_is_symmetric((x, y) in same_strands(element), d in delta()) {
        let xy = x.multiply(&y, &d).unwrap().markov_trace(&d).unwrap();
        let yx = y.multiply(&x, &d).unwrap().markov_trace(&d).unwrap();
        prop_assert_eq!(xy, yx);
    }

    #[test]
    fn multiplication_is_associative(
        (x, y, z) in (1usize..=4).prop_flat_map(|n| (element(n), element(n), element(n))),
        d in delta(),
    ) {
        let left = x.multiply(&y, &d).unwrap().multiply(&z, &d).unwrap();
        let right = x.multiply(&y.multiply(&z, &d).unwrap(), &d).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn involution_is_an_anti_automorphism((x, y) in same_strands(element), d in delta()) {
        let lhs = x.multiply(&y, &d).unwrap().involute();
        prop_assert_eq!(lhs, y.involute().multiply(&x.involute(), &d).unwrap());
        prop_assert_eq!(x.involute().involute(), x);
    }

    #[test]
    fn markov_property(x in (1usize..=4).prop_flat_map(element), d in delta()) {
        let n = x.n();
        let one = Rational::from_integer(1.into());
        let ebar = AlgebraElement::from_diagram(BrauerDiagram::e(n, n + 1).unwrap(), one / d.clone());
        let lhs = ebar.multiply(&x.embed(), &d).unwrap().markov_trace(&d).unwrap();
        let rhs = x.markov_trace(&d).unwrap() / (d.clone() * d);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn cap_sandwich(x in (1usize..=4).prop_flat_map(element), d in delta()) {
        let n = x.n();
        let one = Rational::from_integer(1.into());
        let en = AlgebraElement::from_diagram(BrauerDiagram::e(n, n + 1).unwrap(), one);
        let lhs = en.multiply(&x.embed(), &d).unwrap().multiply(&en, &d).unwrap();
        let rhs = x.closure(&d).unwrap().embed_to(n + 1).multiply(&en, &d).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn factorizations_round_trip(d in (0usize..=7).prop_flat_map(diagram)) {
        prop_assert_eq!(factorize(&d).compose().unwrap(), d.clone());
        prop_assert_eq!(factorize_prime(&d).compose().unwrap(), d);
    }

    #[test]
    fn trace_pairing_is_one_exactly_on_adjoints((a, b) in same_strands(diagram)) {
        let (c, loops) = a.compose(&b).unwrap();
        let k = loops as i64 + c.trace_exponent();
        prop_assert!(k <= 0);
        prop_assert_eq!(k == 0, b == a.involute());
    }

    #[test]
    fn m0_shape(d in -60i64..=60) {
        prop_assume!(d != 0);
        let expected = match d {
            d if d > 0 => d + 1,
            d if d % 2 == 0 => -d / 2 + 1,
            d => -d + 3,
        };
        prop_assert_eq!(m0(d).unwrap(), Bound::Finite(expected as u64));
    }

    #[test]
    fn brauer_witnesses_vanish(d in -12i64..=12, p in prop::sample::select(vec![0u64, 3, 5, 7, 11, 13])) {
        let Ok(spec) = ParamSpec::brauer(p, DeltaSpec::Integer(d)) else { return Ok(()) };
        let v = decide(&spec).unwrap();
        if let Some(w) = v.witness {
            prop_assert_eq!(Bound::Finite(w.shape.size() as u64), v.bound);
            prop_assert!(evaluate_weight(&w.shape, &spec).unwrap().is_zero);
        }
    }

    #[test]
    fn q_family_witnesses_vanish(
        bmw in any::<bool>(),
        e in 2u64..=9,
        double in any::<bool>(),
        eps in prop::sample::select(vec![1i8, -1]),
        n in -20i64..=20,
    ) {
        let f = if double { 2 * e } else { e };
        let Ok(root) = RootSpec::new(e, f) else { return Ok(()) };
        let r = RParam::SignedPower { eps, n };
        let spec = if bmw {
            ParamSpec::bmw(0, QParam::Root(root), r, None)
        } else {
            ParamSpec::qbrauer(0, QParam::Root(root), r, None)
        };
        let Ok(spec) = spec else { return Ok(()) };
        let Ok(v) = decide(&spec) else { return Ok(()) };
        prop_assert!(v.bound <= Bound::Finite(e - 1));
        if let Some(w) = v.witness {
            prop_assert_eq!(Bound::Finite(w.shape.size() as u64), v.bound);
            prop_assert!(evaluate_weight(&w.shape, &spec).unwrap().is_zero, "{}", w.shape);
        }
    }
}
