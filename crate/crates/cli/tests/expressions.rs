use proptest::prelude::*;
use species_cli::expr::{parse, Expr, SPECIES_NAMES};

fn arb_expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        proptest::sample::select(SPECIES_NAMES.to_vec()).prop_map(|n| Expr::Atom(n.to_string())),
        (0u64..4).prop_map(Expr::Int),
    ];
    leaf.prop_recursive(5, 40, 2, |inner| {
        let b = |e: Expr| Box::new(e);
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::Add(b(x), b(y))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::Sub(b(x), b(y))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::Mul(b(x), b(y))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::Compose(b(x), b(y))),
            inner.clone().prop_map(move |x| Expr::Derivative(b(x))),
            inner.clone().prop_map(move |x| Expr::Point(b(x))),
            inner.clone().prop_map(move |x| Expr::Inverse(b(x))),
            inner.prop_map(move |x| Expr::Log(b(x))),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn print_then_parse_is_identity(e in arb_expr()) {
        let text = e.to_string();
        prop_assert_eq!(parse(&text).unwrap(), e, "{}", text);
    }

    #[test]
    fn whitespace_is_ignored_outside_names(e in arb_expr()) {
        let spaced = e.to_string().replace('(', " ( ").replace(')', " ) ").replace('*', " * ");
        prop_assert_eq!(parse(&spaced).unwrap(), e);
    }
}
