use curlie::heisenberg::{
    der_dimension_formula, match_template, truncated_heisenberg, DerivationTemplate,
};

/// The frozen template is exact beyond the instances it was read off from.
#[test]
fn template_span_equals_raw_derivations() {
    for (m, k) in [
        (1, 0),
        (1, 1),
        (1, 2),
        (1, 3),
        (2, 0),
        (2, 1),
        (2, 2),
        (3, 1),
    ] {
        let der = truncated_heisenberg(m, k).derivations().clone();
        let template = DerivationTemplate::new(m, k).span();
        assert_eq!(template.dim(), der_dimension_formula(m, k), "({m},{k})");
        assert_eq!(template, der, "({m},{k})");
        for d in der.matrices() {
            if let Err(e) = match_template(m, k, &d) {
                panic!("({m},{k}): {e}");
            }
        }
    }
}
