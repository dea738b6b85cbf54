use proptest::prelude::*;

use lierep::classify;
use lierep::invariants::{self, alpha, mu};
use lierep::repmodel::{self, DimensionMatrix};
use lierep::weyl::RootData;
use lierep::{Family, ReductiveAlgebra, SimpleType};

fn simple_type() -> impl Strategy<Value = SimpleType> {
    prop_oneof![
        (1u32..=8).prop_map(|r| SimpleType::new(Family::A, r).unwrap()),
        (2u32..=6).prop_map(|r| SimpleType::new(Family::B, r).unwrap()),
        (3u32..=6).prop_map(|r| SimpleType::new(Family::C, r).unwrap()),
        (4u32..=6).prop_map(|r| SimpleType::new(Family::D, r).unwrap()),
        (6u32..=8).prop_map(|r| SimpleType::new(Family::E, r).unwrap()),
        Just(SimpleType::new(Family::F, 4).unwrap()),
        Just(SimpleType::new(Family::G, 2).unwrap()),
    ]
}

fn algebra() -> impl Strategy<Value = ReductiveAlgebra> {
    (prop::collection::vec(simple_type(), 0..4), 0u32..30)
        .prop_map(|(s, k)| ReductiveAlgebra::new(s, k))
}

fn classical_algebra() -> impl Strategy<Value = ReductiveAlgebra> {
    algebra().prop_filter("classical ideals", |g| g.all_classical())
}

fn dimension_matrix() -> impl Strategy<Value = DimensionMatrix> {
    (1usize..4, 1usize..5).prop_flat_map(|(cols, rows)| {
        prop::collection::vec(prop::collection::vec(1u64..5, cols), rows)
            .prop_map(|r| DimensionMatrix::new(r).unwrap())
    })
}

proptest! {
    #[test]
    fn print_parse_round_trip(g in algebra()) {
        let text = g.to_string();
        prop_assert_eq!(text.parse::<ReductiveAlgebra>().unwrap(), g);
    }

    #[test]
    fn mu_is_monotone_in_center(g in algebra()) {
        prop_assert!(mu(&g.with_center(g.center_dim() + 1)) >= mu(&g));
    }

    #[test]
    fn mu_is_subadditive(g in algebra(), h in algebra()) {
        prop_assert!(mu(&g.oplus(&h)) <= mu(&g) + mu(&h));
    }

    #[test]
    fn scalar_line_is_free(s in prop::collection::vec(simple_type(), 1..4)) {
        let s = ReductiveAlgebra::new(s, 0);
        prop_assert_eq!(mu(&s.with_center(1)), mu(&s));
    }

    #[test]
    fn mu_at_least_center_bound(g in algebra()) {
        // dim of a commutative family in gl_n is at most floor(n^2/4) + 1
        let n = mu(&g);
        prop_assert!(n * n / 4 + 1 >= g.center_dim() as u64 || n == 0);
    }

    #[test]
    fn alpha_is_additive(g in classical_algebra(), h in classical_algebra()) {
        let a = alpha(&g);
        let b = alpha(&h);
        if let (Some(a), Some(b)) = (a, b) {
            prop_assert_eq!(alpha(&g.oplus(&h)), Some(a + b));
        }
    }

    #[test]
    fn embedding_bound_iff_mu_fits(g in algebra(), n in 0u64..40) {
        prop_assert_eq!(invariants::alpha_embedding_bound(&g, n), mu(&g) <= n);
    }

    #[test]
    fn normalize_keeps_faithfulness_and_degree_bound(m in dimension_matrix()) {
        prop_assume!(repmodel::is_faithful_dm(&m));
        let n = repmodel::normalize(&m).unwrap();
        prop_assert!(repmodel::is_faithful_dm(&n));
        prop_assert!(repmodel::f_value(&n) <= repmodel::f_value(&m));
        for row in n.rows() {
            prop_assert_eq!(row.iter().filter(|&&d| d > 1).count(), 1);
        }
    }

    #[test]
    fn faithful_subset_is_small(m in dimension_matrix()) {
        prop_assume!(repmodel::is_faithful_dm(&m));
        let rows = repmodel::select_faithful_subset(&m).unwrap();
        prop_assert!(rows.len() <= m.col_count());
        let sub = DimensionMatrix::new(rows.iter().map(|&i| m.rows()[i].clone()).collect()).unwrap();
        prop_assert!(repmodel::is_faithful_dm(&sub));
        prop_assert!(repmodel::f_value(&sub) <= repmodel::f_value(&m));
    }
}

#[test]
fn round_trip_over_gl6() {
    for g in classify::enumerate_gln(6) {
        assert_eq!(g.to_string().parse::<ReductiveAlgebra>().unwrap(), g);
    }
}

#[test]
fn enumeration_is_the_mu_filter() {
    // every algebra built from small types with mu <= 6 is listed, nothing else
    let listed = classify::enumerate_gln(6);
    for g in &listed {
        assert!(mu(g) <= 6 && !g.is_zero());
    }
    let types: Vec<SimpleType> = ["A1", "A2", "A3", "A4", "A5", "B2", "C3"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    let n = types.len();
    let mut multisets: Vec<Vec<SimpleType>> = vec![vec![]];
    for i in 0..n {
        multisets.push(vec![types[i]]);
        for j in i..n {
            multisets.push(vec![types[i], types[j]]);
            for k in j..n {
                multisets.push(vec![types[i], types[j], types[k]]);
            }
        }
    }
    let mut count = 0;
    for simples in multisets {
        for k in 0..20 {
            let g = ReductiveAlgebra::new(simples.clone(), k);
            if !g.is_zero() && mu(&g) <= 6 {
                assert!(listed.contains(&g), "{g} missing");
                count += 1;
            }
        }
    }
    assert!(count > 0);
}

#[test]
fn cross_oracle_just_outside() {
    // semisimple algebras with mu = n + 1 have no faithful module of degree n
    let pool = ["A1", "A2", "A3", "B2", "C3"];
    for i in 0..pool.len() {
        for j in i..=pool.len() {
            let mut simples = vec![pool[i].parse::<SimpleType>().unwrap()];
            if j < pool.len() {
                simples.push(pool[j].parse().unwrap());
            }
            let g = ReductiveAlgebra::new(simples, 0);
            let m = mu(&g);
            if m > 8 {
                continue;
            }
            let n = m - 1;
            assert!(!classify::enumerate_gln(n).contains(&g));
            let by_alpha = invariants::alpha_embedding_bound(&g, n);
            let dim_sets: Vec<_> = g
                .simples()
                .iter()
                .map(|&t| RootData::new(t).irrep_dims_upto(m))
                .collect();
            let by_search = repmodel::min_faithful_value(&dim_sets, n as usize, n).is_ok();
            assert!(!by_alpha || !by_search, "{g}");
            assert!(!by_search, "{g}");
        }
    }
}
