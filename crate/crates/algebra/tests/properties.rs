use proptest::prelude::*;

use polyprime_algebra::{buchberger, integer_kernel, toric_ideal_of_matrix, Binomial, Budget, IntMatrix, MonomialOrder};

const N: usize = 4;

fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(0i64..3, N), 1..3).prop_map(|mut rows| {
        rows.insert(0, vec![1; N]);
        rows
    })
}

fn binomials() -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-2i64..3, N), 1..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn toric_generators_lie_in_the_kernel(rows in matrix()) {
        let a = IntMatrix::<polyprime_algebra::BigInt>::from_i64_rows(&rows).unwrap();
        let gb = toric_ideal_of_matrix(&a, &MonomialOrder::degrevlex(N), &Budget::unlimited()).unwrap();
        for g in &gb.generators {
            let u = g.exponent_vector();
            for r in &rows {
                prop_assert_eq!(r.iter().zip(&u).map(|(x, y)| x * y).sum::<i64>(), 0);
            }
        }
        let kernel = integer_kernel(&a).unwrap();
        for v in kernel {
            if let Ok(b) = Binomial::from_vector(&v) {
                prop_assert!(gb.contains(&b));
            }
        }
    }

    #[test]
    fn reduced_basis_ignores_generator_order(vs in binomials()) {
        let gens: Vec<Binomial> = vs.iter().filter_map(|v| Binomial::from_vector(v).ok()).collect();
        prop_assume!(!gens.is_empty());
        let order = MonomialOrder::degrevlex(N);
        let budget = Budget { max_pairs: Some(5_000), ..Budget::default() };
        let a = buchberger(&gens, &order, &budget);
        let mut rev = gens.clone();
        rev.reverse();
        let b = buchberger(&rev, &order, &budget);
        if let (Ok(a), Ok(b)) = (a, b) {
            prop_assert_eq!(&a.generators, &b.generators);
            for g in &gens {
                prop_assert!(a.contains(g));
            }
        }
    }
}
