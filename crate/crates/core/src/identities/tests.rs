use super::*;
use proptest::prelude::*;

fn r(p: i64, q: i64) -> ExactRational {
    ExactRational::new(p, q)
}

fn qp(s: ExactRational, x: ExactRational) -> Point {
    Point::Q(QPoint::new(s, x).unwrap())
}

fn q_points() -> Vec<Point> {
    vec![qp(r(1, 2), r(3, 5)), qp(r(2, 7), r(-5, 3)), qp(r(-3, 4), r(7, 2))]
}

fn classical_points() -> Vec<Point> {
    vec![Point::Classical(r(5, 13)), Point::Classical(r(2, 11)), Point::Classical(r(-7, 5))]
}

#[test]
fn catalog_order_and_names() {
    let all = list_identities();
    assert_eq!(all.len(), 31);
    assert_eq!(all[0].id, Gosper1);
    assert_eq!(all.last().unwrap().id, PiSeries);
    for d in &all {
        assert_eq!(d.id.name().parse::<IdentityId>().unwrap(), d.id);
        let json = serde_json::to_string(&d.id).unwrap();
        assert_eq!(json, format!("\"{}\"", d.id.name()));
        assert_eq!(serde_json::from_str::<IdentityId>(&json).unwrap(), d.id);
    }
    assert!(matches!("BOGUS".parse::<IdentityId>(), Err(Error::UnknownIdentity(_))));
}

#[test]
fn kind_discipline() {
    let classical = Point::Classical(r(1, 3));
    for id in IdentityId::ALL.into_iter().filter(|id| id.kind() == Kind::Q) {
        let inst = Instance::for_id(id, 1, 1, 1);
        assert!(matches!(eval_side(id, Side::Lhs, &inst, &classical), Err(Error::InvalidPoint(_))), "{id}");
    }
    let q = qp(r(1, 2), r(3, 5));
    for id in IdentityId::ALL.into_iter().filter(|id| id.kind() == Kind::Classical) {
        let inst = Instance::for_id(id, 1, 1, 1);
        assert!(matches!(eval_side(id, Side::Lhs, &inst, &q), Err(Error::InvalidPoint(_))), "{id}");
    }
    assert!(matches!(eval_side(PiSeries, Side::Lhs, &Instance::default(), &q), Err(Error::Arity(_))));
}

#[test]
fn arity_errors() {
    let p = qp(r(1, 2), r(3, 5));
    let bad = [
        (QGosper1, Instance::new(1).with_ell(1)),
        (Thm1, Instance::new(1)),
        (Rel6, Instance::new(0).with_ell(1)),
        (Rel6, Instance::new(2).with_ell(1).with_k(0)),
        (QGosper1, Instance::new(-1)),
    ];
    for (id, inst) in bad {
        assert!(matches!(eval_side(id, Side::Lhs, &inst, &p), Err(Error::Arity(_))), "{id} {inst:?}");
    }
}

#[test]
fn documented_values() {
    let p = qp(r(1, 2), r(3, 5));
    assert_eq!(eval_side(QGosper1, Side::Lhs, &Instance::new(0), &p).unwrap(), r(1, 1));
    let rhs = eval_side(Gosper1, Side::Rhs, &Instance::new(1), &Point::Classical(r(1, 3))).unwrap();
    // (2/3)(1/3) / ((1/3)(2/3))
    assert_eq!(rhs, r(1, 1));
    let inst = Instance::new(0).with_ell(2).with_k(3);
    assert_eq!(eval_side(Rel6, Side::Rhs, &inst, &p).unwrap(), r(1, 1));
    assert!(residual(QGosper1, &Instance::new(2), &p).unwrap().is_zero());
}

#[test]
fn theorem_one_at_small_instances() {
    let p = qp(r(1, 2), r(3, 5));
    for n in 0..=4 {
        for ell in 0..=2 {
            assert!(residual(Thm1, &Instance::new(n).with_ell(ell), &p).unwrap().is_zero(), "n={n} ell={ell}");
        }
    }
}

#[test]
fn ell_zero_collapses() {
    let pairs = [
        (Thm1, QGosper1),
        (Thm5, QGosper2),
        (Prop9Qh, QGosper2),
        (Prop3, Gosper1),
        (Prop7, Gosper2),
        (Prop9, Gosper2),
        (Thm11, Cor2),
        (Thm15, Cor6Equiv),
        (Prop13, Cor4),
        (Prop17, Cor10),
    ];
    for (parent, child) in pairs {
        let points = if parent.kind() == Kind::Q { q_points() } else { classical_points() };
        for p in &points {
            for n in 0..=3 {
                let pi = Instance::new(n).with_ell(0);
                let ci = Instance::new(n);
                for side in [Side::Lhs, Side::Rhs] {
                    assert_eq!(
                        eval_side(parent, side, &pi, p).unwrap(),
                        eval_side(child, side, &ci, p).unwrap(),
                        "{parent} -> {child} n={n} {side:?}"
                    );
                }
            }
        }
    }
}

#[test]
fn ell_one_corollaries_agree_with_parents() {
    let pairs = [
        (Thm1, Cor2),
        (Thm5, Cor6),
        (Thm11, Cor12),
        (Thm15, Cor16),
        (Prop3, Cor4),
        (Prop7, Cor8),
        (Prop9, Cor10),
        (Prop13, Cor14),
        (Prop17, Cor18),
    ];
    for (parent, child) in pairs {
        let points = if parent.kind() == Kind::Q { q_points() } else { classical_points() };
        for p in &points {
            for n in 0..=3 {
                for side in [Side::Lhs, Side::Rhs] {
                    let a = eval_side(parent, side, &Instance::new(n).with_ell(1), p).unwrap();
                    let b = eval_side(child, side, &Instance::new(n), p).unwrap();
                    assert_eq!(a, b, "{parent} -> {child} n={n} {side:?}");
                }
            }
        }
    }
}

#[test]
fn last_corollary_is_not_the_ell_one_case_of_the_fourth_family() {
    // Its left side is 3F2[3x, -3x, -n; 1/2, -1-3n], while the fourth family
    // at l = 1 gives 3F2[3x, -1-3x, -n; -1/2, -3n].
    let p = Point::Classical(r(2, 11));
    let a = eval_side(Prop13, Side::Lhs, &Instance::new(2).with_ell(1), &p).unwrap();
    let b = eval_side(Cor18, Side::Lhs, &Instance::new(2), &p).unwrap();
    assert_ne!(a, b);
}

#[test]
fn relations_equal_one() {
    for p in q_points() {
        for id in [Rel6, Rel5, Rel11] {
            for ell in 0..=4 {
                for k in 0..=6 {
                    let inst = Instance::new(0).with_ell(ell).with_k(k);
                    assert_eq!(eval_side(id, Side::Lhs, &inst, &p).unwrap(), r(1, 1), "{id} ell={ell} k={k}");
                }
            }
        }
    }
}

#[test]
fn substitution_links() {
    for (s, x) in [(r(1, 2), r(3, 5)), (r(2, 7), r(-5, 3))] {
        let t2 = qp(&s * &s, x.clone());
        let t = qp(s.clone(), x.clone());
        let neg = qp(-&s, x.clone());
        for n in 0..=2 {
            for ell in 0..=2 {
                let inst = Instance::new(n).with_ell(ell);
                for side in [Side::Lhs, Side::Rhs] {
                    assert_eq!(eval_side(Prop9Q2, side, &inst, &t).unwrap(), eval_side(Thm5, side, &inst, &t2).unwrap());
                }
            }
            let qh = qp(-(&s * &s), x.clone());
            for side in [Side::Lhs, Side::Rhs] {
                let inst = Instance::new(n).with_ell(1);
                assert_eq!(eval_side(Prop9Qh, side, &inst, &qh).unwrap(), eval_side(Prop9Q2, side, &inst, &t).unwrap());
            }
            for side in [Side::Lhs, Side::Rhs] {
                let inst = Instance::new(n);
                assert_eq!(eval_side(Cor6Equiv, side, &inst, &t).unwrap(), eval_side(Cor6, side, &inst, &neg).unwrap());
            }
        }
    }
}

#[test]
fn phi65_trivial_at_ell_zero() {
    let p = Point::Phi65 { point: QPoint::new(r(1, 3), r(2, 1)).unwrap(), b: r(5, 2), c: r(-3, 1) };
    let inst = Instance::new(0).with_ell(0);
    assert_eq!(eval_sides(Phi65, &inst, &p).unwrap(), (r(1, 1), r(1, 1)));
}

#[test]
fn pole_is_reported() {
    // x = s makes 1 - x^2/q vanish.
    let p = qp(r(1, 2), r(1, 2));
    assert!(is_pole(Thm1, &Instance::new(1).with_ell(1), &p));
    assert!(!is_pole(Thm1, &Instance::new(1).with_ell(1), &qp(r(1, 2), r(3, 5))));
}

#[test]
fn degree_bounds() {
    assert_eq!(instance_degree_bound(QGosper1, &Instance::new(0)).unwrap(), DegreeBound::default());
    // At n = 1 the difference over the common denominator x(1-q)(1-q^2) has
    // numerator x(1-q)(1-q^2) + q(1-x)(x-q) - (1-qx)(x-q^2), of degree 6 in s
    // and 2 in x.
    let b1 = instance_degree_bound(QGosper1, &Instance::new(1)).unwrap();
    assert!(b1.deg_s >= 6 && b1.deg_x >= 2, "{b1:?}");
    let mut prev = b1;
    for n in 2..=5 {
        let b = instance_degree_bound(QGosper1, &Instance::new(n)).unwrap();
        assert!(b.deg_s >= prev.deg_s && b.deg_x >= prev.deg_x);
        prev = b;
    }
    assert!(matches!(instance_degree_bound(Gosper1, &Instance::new(1)), Err(Error::Arity(_))));
    assert!(matches!(instance_degree_bound(Limit2F1, &Instance::new(0)), Err(Error::Arity(_))));
}

fn small_rat() -> impl Strategy<Value = ExactRational> {
    (-12i64..=12, 1i64..=12).prop_map(|(p, q)| ExactRational::new(p, q))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn phi65_sums(root in small_rat(), b in small_rat(), c in small_rat(), s in small_rat(), ell in 0i64..=5) {
        let (Ok(point), false, false) = (QPoint::new(s, root), b.is_zero(), c.is_zero()) else {
            return Ok(());
        };
        let p = Point::Phi65 { point, b, c };
        match residual(Phi65, &Instance::new(0).with_ell(ell), &p) {
            Ok(v) => prop_assert!(v.is_zero()),
            Err(e) => prop_assert!(e.is_pole(), "{e}"),
        }
    }
}
