use isospectra_core::dynamics::{algebraic_solution, c_system, dynamics_variables, perturb, solve_c};
use isospectra_core::families::compute_zeros;
use isospectra_core::iso::{fg_tables, verify_matrix};
use isospectra_core::numeric::multiset_match;
use isospectra_core::{FamilySpec, C64};
use proptest::prelude::*;

fn re(x: f64) -> C64 {
    C64::new(x, 0.0)
}

fn point(n: usize) -> impl Strategy<Value = Vec<C64>> {
    prop::collection::vec((-2.0..2.0f64, -2.0..2.0f64).prop_map(|(a, b)| C64::new(a, b)), n)
        .prop_filter("distinct", |z| (0..z.len()).all(|i| (i + 1..z.len()).all(|j| (z[i] - z[j]).norm() > 0.05)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn fg_tables_are_permutation_equivariant(z in point(5), shift in 1usize..5) {
        let mut p = z.clone();
        p.rotate_left(shift);
        let (a, b) = (fg_tables(&z, 3).unwrap(), fg_tables(&p, 3).unwrap());
        for n in 0..5 {
            let k = (n + shift) % 5;
            for j in 1..=3 {
                prop_assert!((a.f(j, k) - b.f(j, n)).norm() <= 1e-9 * a.f(j, k).norm().max(1.0));
                prop_assert!((a.g(j, k) - b.g(j, n)).norm() <= 1e-9 * a.g(j, k).norm().max(1.0));
            }
            prop_assert_eq!(a.f(1, k), z[k]);
            prop_assert_eq!(a.g(0, k), re(1.0));
        }
    }

    #[test]
    fn ghyp_matrices_are_isospectral(
        n in 2usize..6,
        a1 in 0.5..3.0f64, a2 in 0.5..3.0f64,
        b1 in 1.5..4.0f64, b2 in 1.5..4.0f64,
    ) {
        let s = FamilySpec::ghyp(n, &[re(a1), re(a2)], &[re(b1), re(b2)]).unwrap();
        let r = verify_matrix(&s).unwrap();
        prop_assert!(r.passes(), "{:?}", r);
    }

    #[test]
    fn gbasic_matrices_are_isospectral(
        n in 2usize..6,
        a1 in 0.5..3.0f64, b1 in 1.5..4.0f64, q in 1.3..2.5f64,
    ) {
        let s = FamilySpec::gbasic(n, &[re(a1)], &[re(b1)], re(q)).unwrap();
        let r = verify_matrix(&s).unwrap();
        prop_assert!(r.passes(), "{:?}", r);
    }

    #[test]
    fn askey_scheme_matrices_are_isospectral(
        n in 2usize..6,
        p in prop::array::uniform4(0.5..3.0f64),
        q in 1.3..2.5f64,
        which in 0usize..4,
    ) {
        let p = p.map(re);
        let s = match which {
            0 => FamilySpec::wilson(n, p),
            1 => FamilySpec::racah(n, p),
            2 => FamilySpec::askey_wilson(n, p, re(q)),
            _ => FamilySpec::q_racah(n, p, re(q)),
        }.unwrap();
        let r = verify_matrix(&s).unwrap();
        prop_assert!(r.passes(), "{:?}", r);
    }

    #[test]
    fn coefficient_flow_is_a_semigroup(
        n in 1usize..5, a1 in 0.5..3.0f64, b1 in 1.5..4.0f64,
        c0 in prop::collection::vec(-1.0..1.0f64, 4),
        t1 in 0.0..0.3f64, t2 in 0.0..0.3f64,
    ) {
        let cs = c_system(&FamilySpec::ghyp(n, &[re(a1)], &[re(b1)]).unwrap()).unwrap();
        let c0: Vec<C64> = c0[..n].iter().map(|&v| re(v)).collect();
        let once = solve_c(&cs, &c0, t1 + t2).unwrap();
        let twice = solve_c(&cs, &solve_c(&cs, &c0, t1).unwrap(), t2).unwrap();
        for (x, y) in once.iter().zip(&twice) {
            prop_assert!((x - y).norm() <= 1e-9 * x.norm().max(1.0));
        }
    }

    #[test]
    fn algebraic_solution_round_trips(n in 1usize..6, p in prop::array::uniform4(0.5..3.0f64), eps in 1e-4..1e-2f64) {
        let s = FamilySpec::wilson(n, p.map(re)).unwrap();
        let x0 = perturb(&dynamics_variables(&s, &compute_zeros(&s).unwrap()).unwrap(), eps);
        let back = algebraic_solution(&s, &x0, 0.0).unwrap();
        prop_assert!(multiset_match(&back.zeros, &x0).unwrap() <= 1e-9);
    }

    #[test]
    fn perturbation_has_the_stated_size(z in point(4), eps in 1e-6..1e-2f64) {
        let p = perturb(&z, eps);
        for (a, b) in z.iter().zip(&p) {
            let want = eps * a.norm().max(1.0);
            prop_assert!(((b - a).norm() - want).abs() <= 1e-12);
        }
    }
}
