use ins_core::dsl::{
    evaluate, format_set, parse_expr, parse_sets, BinOp, Environment, Expr, ExprKind, Pos,
    SourceError, Value,
};
use ins_core::{cartesian_product, DiscreteIns, NeutrosophicValue};
use proptest::prelude::*;

const NAMES: [&str; 3] = ["A", "B", "C"];

fn dyadic() -> impl Strategy<Value = f64> {
    (0u32..=1024).prop_map(|k| k as f64 / 1024.0)
}

fn interval() -> impl Strategy<Value = (f64, f64)> {
    (dyadic(), dyadic()).prop_map(|(a, b)| (a.min(b), a.max(b)))
}

fn value() -> impl Strategy<Value = NeutrosophicValue> {
    (interval(), interval(), interval())
        .prop_map(|(t, i, f)| NeutrosophicValue::from_bounds(t, i, f).unwrap())
}

fn label() -> impl Strategy<Value = String> {
    "[a-z][a-z0-9_.(),-]{0,6}"
}

fn set() -> impl Strategy<Value = DiscreteIns> {
    prop::collection::vec((label(), value()), 0..8).prop_map(|rows| {
        let mut seen = std::collections::HashSet::new();
        DiscreteIns::from_elements(rows.into_iter().filter(|(l, _)| seen.insert(l.clone())))
            .unwrap()
    })
}

fn env() -> impl Strategy<Value = Environment> {
    (1usize..=6).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(value(), n), 3).prop_map(move |sets| {
            let mut env = Environment::new();
            for (name, values) in NAMES.iter().zip(sets) {
                let labels = (1..=n).map(|i| format!("x{i}"));
                env.insert(
                    *name,
                    DiscreteIns::from_elements(labels.zip(values)).unwrap(),
                );
            }
            env
        })
    })
}

fn scalar() -> impl Strategy<Value = f64> {
    prop_oneof![(1u32..=40).prop_map(|k| k as f64 / 4.0), 0.001..50.0f64,]
}

fn boxed(e: Expr) -> Box<Expr> {
    Box::new(e)
}

/// Set-valued trees of depth at most `depth` over `names`.
fn set_expr(depth: u32, names: Vec<&'static str>) -> BoxedStrategy<Expr> {
    let leaf = prop::sample::select(names).prop_map(Expr::ident);
    leaf.prop_recursive(depth, 64, 2, |inner| {
        prop_oneof![
            inner
                .clone()
                .prop_map(|e| Expr::synthetic(ExprKind::Complement(boxed(e)))),
            (
                prop::sample::select(BinOp::ALL.to_vec()),
                inner.clone(),
                inner.clone()
            )
                .prop_map(|(op, l, r)| Expr::binary(op, l, r)),
            (inner.clone(), inner.clone())
                .prop_map(|(l, r)| Expr::synthetic(ExprKind::Prod(boxed(l), boxed(r)))),
            (scalar(), inner.clone())
                .prop_map(|(k, e)| Expr::synthetic(ExprKind::Scale(k, boxed(e)))),
            (inner.clone(), scalar())
                .prop_map(|(e, k)| Expr::synthetic(ExprKind::Div(boxed(e), k))),
            inner
                .clone()
                .prop_map(|e| Expr::synthetic(ExprKind::TruthFav(boxed(e)))),
            inner.prop_map(|e| Expr::synthetic(ExprKind::FalseFav(boxed(e)))),
        ]
    })
    .boxed()
}

/// Any well-formed root of depth at most 6: a set expression, a product,
/// or a predicate.
fn root_expr(names: Vec<&'static str>) -> impl Strategy<Value = Expr> {
    let s = set_expr(4, names.clone());
    prop_oneof![
        4 => set_expr(5, names),
        1 => (s.clone(), s.clone()).prop_map(|(l, r)| Expr::synthetic(ExprKind::Cart(boxed(l), boxed(r)))),
        1 => (s.clone(), s.clone()).prop_map(|(l, r)| Expr::synthetic(ExprKind::Subset(boxed(l), boxed(r)))),
        1 => (s.clone(), s.clone()).prop_map(|(l, r)| Expr::synthetic(ExprKind::Equal(boxed(l), boxed(r)))),
        1 => s.prop_map(|e| Expr::synthetic(ExprKind::Empty(boxed(e)))),
    ]
}

enum Direct {
    Set(DiscreteIns),
    Paired(ins_core::PairedIns),
    Bool(bool),
}

// Straight calls into the set API, bypassing the evaluator.
fn direct_set(e: &Expr, env: &Environment) -> DiscreteIns {
    let go = |x: &Expr| direct_set(x, env);
    match &e.kind {
        ExprKind::Ident(n) => env.get(n).unwrap().clone(),
        ExprKind::Complement(x) => go(x).complement(),
        ExprKind::Binary(op, l, r) => {
            let (a, b) = (go(l), go(r));
            match op {
                BinOp::Add => a.add(&b),
                BinOp::Difference => a.difference(&b),
                BinOp::Union => a.union(&b),
                BinOp::Intersect => a.intersect(&b),
            }
            .unwrap()
        }
        ExprKind::Prod(l, r) => go(l).pointwise_product(&go(r)).unwrap(),
        ExprKind::Scale(k, x) => ins_core::ops::scalar_mul(*k, &go(x)).unwrap(),
        ExprKind::Div(x, k) => ins_core::ops::scalar_div(&go(x), *k).unwrap(),
        ExprKind::TruthFav(x) => go(x).truth_favorite(),
        ExprKind::FalseFav(x) => go(x).false_favorite(),
        other => panic!("not a set expression: {other:?}"),
    }
}

fn direct(e: &Expr, env: &Environment) -> Direct {
    match &e.kind {
        ExprKind::Cart(l, r) => {
            Direct::Paired(cartesian_product(&direct_set(l, env), &direct_set(r, env)))
        }
        ExprKind::Subset(l, r) => Direct::Bool(
            direct_set(l, env)
                .is_contained_in(&direct_set(r, env))
                .unwrap(),
        ),
        ExprKind::Equal(l, r) => {
            Direct::Bool(direct_set(l, env).set_equals(&direct_set(r, env)).unwrap())
        }
        ExprKind::Empty(x) => Direct::Bool(direct_set(x, env).is_empty()),
        _ => Direct::Set(direct_set(e, env)),
    }
}

fn ordered<L: ins_core::Label>(s: &ins_core::InsSet<L>) -> Vec<(String, [f64; 6])> {
    s.iter()
        .map(|(l, v)| (l.to_string(), v.endpoints()))
        .collect()
}

fn position_is_valid(src: &str, err: &SourceError) -> bool {
    let lines: Vec<&str> = src.split('\n').collect();
    let Pos { line, column } = err.pos;
    line >= 1 && line <= lines.len() && column >= 1 && column <= lines[line - 1].chars().count() + 1
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(3000))]

    #[test]
    fn set_files_round_trip_exactly(sets in prop::collection::vec(set(), 0..4)) {
        let text: String = sets
            .iter()
            .enumerate()
            .map(|(i, s)| format_set(&format!("S{i}"), s, 17))
            .collect();
        let env = parse_sets(&text).unwrap();
        prop_assert_eq!(env.len(), sets.len());
        for (i, s) in sets.iter().enumerate() {
            let back = env.get(&format!("S{i}")).unwrap();
            prop_assert_eq!(ordered(back), ordered(s));
        }
    }

    #[test]
    fn printing_then_parsing_gives_the_same_tree(e in root_expr(vec!["A", "B", "C", "tf", "cart", "x_1"])) {
        let text = e.to_string();
        let back = parse_expr(&text).map_err(|err| TestCaseError::fail(format!("{text}: {err}")))?;
        prop_assert_eq!(&back, &e, "{}", text);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn evaluation_agrees_with_direct_calls(env in env(), e in root_expr(NAMES.to_vec())) {
        let got = evaluate(&e, &env).map_err(|err| TestCaseError::fail(format!("{e}: {err}")))?;
        match (got, direct(&e, &env)) {
            (Value::Set(a), Direct::Set(b)) => prop_assert_eq!(ordered(&a), ordered(&b)),
            (Value::Paired(a), Direct::Paired(b)) => prop_assert_eq!(ordered(&a), ordered(&b)),
            (Value::Bool(a), Direct::Bool(b)) => prop_assert_eq!(a, b),
            _ => prop_assert!(false, "kind differs for {}", e),
        }
    }

    #[test]
    fn parsers_are_total(bytes in prop::collection::vec(any::<u8>(), 0..64)) {
        let src = String::from_utf8_lossy(&bytes);
        if let Err(err) = parse_expr(&src) {
            prop_assert!(position_is_valid(&src, &err), "{:?}: {}", src, err);
        }
        if let Err(err) = parse_sets(&src) {
            prop_assert!(position_is_valid(&src, &err), "{:?}: {}", src, err);
        }
    }

    #[test]
    fn parsers_are_total_on_near_miss_text(
        parts in prop::collection::vec(
            prop::sample::select(vec![
                "set", "end", "A", "B", " ", "\n", ":", "[", "]", ",", "0.5", "1", "0", "-",
                "~", "&", "|", "\\", "+", "(", ")", "tf", "cart", "scale", "div", "eq", "#",
                "x1", "2.", ".5", "\t", "\r\n",
            ]),
            0..40,
        )
    ) {
        let src: String = parts.concat();
        if let Err(err) = parse_expr(&src) {
            prop_assert!(position_is_valid(&src, &err), "{:?}: {}", src, err);
        }
        if let Err(err) = parse_sets(&src) {
            prop_assert!(position_is_valid(&src, &err), "{:?}: {}", src, err);
        }
    }
}

#[test]
fn precedence_table() {
    let tree = |s: &str| parse_expr(s).unwrap();
    let (a, b, c) = (Expr::ident("A"), Expr::ident("B"), Expr::ident("C"));
    assert_eq!(
        tree("A & B | C"),
        Expr::binary(
            BinOp::Union,
            Expr::binary(BinOp::Intersect, a.clone(), b.clone()),
            c.clone()
        )
    );
    assert_eq!(
        tree("A + B \\ C"),
        Expr::binary(
            BinOp::Add,
            a.clone(),
            Expr::binary(BinOp::Difference, b.clone(), c.clone())
        )
    );
    assert_eq!(
        tree("~(A | B)"),
        Expr::synthetic(ExprKind::Complement(boxed(Expr::binary(
            BinOp::Union,
            a.clone(),
            b.clone()
        ))))
    );
    assert_eq!(
        tree("A \\ B \\ C"),
        Expr::binary(BinOp::Difference, Expr::binary(BinOp::Difference, a, b), c)
    );
}

#[test]
fn union_of_example_sets_survives_a_file_round_trip() {
    let env = parse_sets(ins_core::sample::EXAMPLE_FILE).unwrap();
    let u = match evaluate(&parse_expr("A | B").unwrap(), &env).unwrap() {
        Value::Set(s) => s,
        other => panic!("{other:?}"),
    };
    let back = parse_sets(&format_set("U", &u, 17)).unwrap();
    assert_eq!(ordered(back.get("U").unwrap()), ordered(&u));
}
