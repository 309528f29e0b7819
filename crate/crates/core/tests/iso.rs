use isospectra_core::dynamics::dynamics_variables;
use isospectra_core::families::{aw_lift, compute_zeros};
use isospectra_core::iso::{
    build_matrix, build_matrix_with, closed_form_spectrum, closed_form_spectrum_with, fg_jacobians, fg_tables,
    identity_residual, lifted_matrix, sigma, verify_matrix, FgTable, MatrixOptions,
};
use isospectra_core::numeric::multiset_match;
use isospectra_core::{Error, Family, FamilySpec, Matrix, ZeroSet, C64};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn re(x: f64) -> C64 {
    C64::new(x, 0.0)
}

fn random_point(rng: &mut ChaCha8Rng, n: usize) -> Vec<C64> {
    (0..n).map(|_| C64::new(rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0))).collect()
}

fn max_entry_gap(a: &Matrix, b: &Matrix) -> f64 {
    a.as_slice().iter().zip(b.as_slice()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

/// `g^{(3)}` in σ form. The coefficients of σ^{(2,2)}, σ^{(3,3)}, σ^{(1,1)}²,
/// σ^{(1,1)}σ^{(2,2)} and σ^{(1,1)}³ were fitted to the recursion.
fn g3(nf: f64, s11: C64, s22: C64, s33: C64) -> C64 {
    nf - 1.0 - 2.0 * (3.0 * nf - 7.0) * s11 - 3.0 * (nf - 6.0) * s22 + 8.0 * s33 + 3.0 * (nf - 6.0) * s11 * s11
        - 12.0 * s11 * s22
        + 4.0 * s11 * s11 * s11
}

/// The commonly printed variant with `9/4 (N−7)` coefficients.
fn g3_printed(nf: f64, s11: C64, s22: C64, s33: C64) -> C64 {
    nf - 1.0 - 2.0 * (3.0 * nf - 7.0) * s11 - 2.25 * (nf - 7.0) * s22 + 6.0 * s33 + 2.25 * (nf - 7.0) * s11 * s11
        - 9.0 * s11 * s22
        + 3.0 * s11 * s11 * s11
}

#[test]
fn recursions_match_explicit_sigma_forms() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut worst: f64 = 0.0;
    for trial in 0..10 {
        let n = 3 + trial % 3;
        let z = random_point(&mut rng, n);
        let t = fg_tables(&z, 4).unwrap();
        let nf = n as f64;
        for k in 0..n {
            let s11 = sigma(&z, k, 1, 1).unwrap();
            let s22 = sigma(&z, k, 2, 2).unwrap();
            let s33 = sigma(&z, k, 3, 3).unwrap();
            let zk = z[k];
            let explicit = [
                (t.f(2, k), zk * (-1.0 + 2.0 * s11)),
                (t.f(3, k), zk * (1.0 - 6.0 * s11 - 3.0 * s22 + 3.0 * s11 * s11)),
                (
                    t.f(4, k),
                    zk * (-1.0 + 14.0 * s11 + 18.0 * s22 + 8.0 * s33 - 18.0 * s11 * s11 - 12.0 * s11 * s22
                        + 4.0 * s11 * s11 * s11),
                ),
                (t.g(1, k), nf - 1.0 + 2.0 * s11),
                (t.g(2, k), 1.0 - nf + 2.0 * (nf - 3.0) * s11 - 3.0 * s22 + 3.0 * s11 * s11),
                (t.g(3, k), g3(nf, s11, s22, s33)),
            ];
            for (i, (got, want)) in explicit.iter().enumerate() {
                let e = (got - want).norm() / want.norm().max(1.0);
                assert!(e <= 1e-10, "form {i}, N={n}, n={k}: {got} vs {want}");
                worst = worst.max(e);
            }
        }
    }
    assert!(worst <= 1e-10, "{worst:e}");
}

#[test]
fn printed_third_g_agrees_only_at_three_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for n in [3usize, 4] {
        let z = random_point(&mut rng, n);
        let t = fg_tables(&z, 3).unwrap();
        let gap = (0..n)
            .map(|k| {
                let (s11, s22, s33) =
                    (sigma(&z, k, 1, 1).unwrap(), sigma(&z, k, 2, 2).unwrap(), sigma(&z, k, 3, 3).unwrap());
                (t.g(3, k) - g3_printed(n as f64, s11, s22, s33)).norm() / t.g(3, k).norm().max(1.0)
            })
            .fold(0.0, f64::max);
        if n == 3 {
            assert!(gap < 1e-10);
        } else {
            assert!(gap > 1e-3);
        }
    }
}

#[test]
fn dual_jacobians_match_central_differences() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let z = random_point(&mut rng, 3);
    let jac = fg_jacobians(&z, 4).unwrap();
    let h = 1e-6;
    for m in 0..3 {
        let mut zp = z.clone();
        let mut zm = z.clone();
        zp[m] += h;
        zm[m] -= h;
        let (tp, tm) = (FgTable::compute(&zp, 4), FgTable::compute(&zm, 4));
        for j in 1..=4 {
            for n in 0..3 {
                let fd = (tp.f(j, n) - tm.f(j, n)) / (2.0 * h);
                assert!((jac.df(j, n, m) - fd).norm() <= 1e-6 * fd.norm().max(1.0), "df {j} {n} {m}");
                let fd = (tp.g(j, n) - tm.g(j, n)) / (2.0 * h);
                assert!((jac.dg(j, n, m) - fd).norm() <= 1e-6 * fd.norm().max(1.0), "dg {j} {n} {m}");
            }
        }
    }
}

#[test]
fn matrix_examples() {
    let s = FamilySpec::ghyp(1, &[re(2.0)], &[re(3.0)]).unwrap();
    let r = verify_matrix(&s).unwrap();
    assert_eq!(r.l.as_slice(), [re(3.0)]);
    assert_eq!(r.spectral_residual, 0.0);

    let s = FamilySpec::jacobi(2, re(0.0), re(0.0)).unwrap();
    let r = verify_matrix(&s).unwrap();
    assert!(r.spectral_residual <= 1e-9 && r.passes());

    let s = FamilySpec::wilson(1, [re(0.5); 4]).unwrap();
    assert!((verify_matrix(&s).unwrap().l.as_slice()[0] - 2.0).norm() < 1e-13);
}

#[test]
fn closed_form_examples() {
    let s = FamilySpec::ghyp(2, &[re(1.0)], &[re(3.0)]).unwrap();
    assert_eq!(closed_form_spectrum(&s).values, [re(3.0), re(8.0)]);
    let s = FamilySpec::wilson(2, [re(0.5), re(0.7), re(1.1), re(1.3)]).unwrap();
    let e = closed_form_spectrum(&s).values;
    let a1 = 3.6;
    assert!((e[0] - (a1 + 2.0)).norm() < 1e-14 && (e[1] - 2.0 * (a1 + 1.0)).norm() < 1e-14);
    let s = FamilySpec::racah(2, [re(0.5), re(0.7), re(1.1), re(1.3)]).unwrap();
    let e = closed_form_spectrum(&s).values;
    assert!((e[0] - (1.0 - 4.0 - 1.2 - 1.0)).norm() < 1e-14);
}

#[test]
fn padding_multiplies_the_spectrum() {
    let s = FamilySpec::ghyp(4, &[re(1.3)], &[re(2.4)]).unwrap();
    let zs = compute_zeros(&s).unwrap();
    let opts = MatrixOptions { pad: vec![re(1.7), re(2.9)] };
    let r = build_matrix_with(&s, &zs, &opts).unwrap();
    assert!(r.passes(), "{r:?}");
    let want = closed_form_spectrum_with(&s, &opts).unwrap();
    for (m, v) in want.values.iter().enumerate() {
        let mf = (m + 1) as f64;
        assert!((v - mf * (1.4 + mf) * (0.7 + mf) * (1.9 + mf)).norm() < 1e-10);
    }
    let plain = build_matrix(&s, &zs).unwrap();
    assert!(max_entry_gap(&plain.l, &r.l) > 1e-3);
    let j = FamilySpec::jacobi(3, re(0.5), re(0.5)).unwrap();
    let jz = compute_zeros(&j).unwrap();
    assert!(matches!(build_matrix_with(&j, &jz, &opts), Err(Error::Unsupported(_))));
}

#[test]
fn repeated_zeros_are_rejected() {
    let s = FamilySpec::ghyp(2, &[re(1.0)], &[re(3.0)]).unwrap();
    let zs = ZeroSet::from_zeros(vec![re(0.5), re(0.5)]);
    assert!(matches!(build_matrix(&s, &zs), Err(Error::RepeatedZeros { .. })));
    assert!(matches!(identity_residual(&s, &zs), Err(Error::RepeatedZeros { .. })));
}

#[test]
fn identity_examples() {
    let (a, b) = (2.0, 3.0);
    let s = FamilySpec::ghyp(1, &[re(a)], &[re(b)]).unwrap();
    let r = identity_residual(&s, &ZeroSet::from_zeros(vec![re(a / b)])).unwrap();
    assert!(r[0].norm() < 1e-15);

    let s = FamilySpec::ghyp(5, &[re(1.2), re(2.7)], &[re(1.9)]).unwrap();
    let zs = compute_zeros(&s).unwrap();
    let worst = |v: Vec<C64>| v.iter().map(|x| x.norm()).fold(0.0, f64::max);
    assert!(worst(identity_residual(&s, &zs).unwrap()) <= 1e-8);
    let moved = ZeroSet::from_zeros(zs.zeros.iter().enumerate().map(|(k, &z)| z + 1e-3 * (k as f64 + 1.0)).collect());
    assert!(worst(identity_residual(&s, &moved).unwrap()) >= 1e-5);
}

#[test]
fn lifted_builds_are_symmetric() {
    let abcd = [re(0.9), re(1.6), re(2.2), re(0.7)];
    for s in [FamilySpec::wilson(4, abcd).unwrap(), FamilySpec::racah(4, abcd).unwrap()] {
        let v = dynamics_variables(&s, &compute_zeros(&s).unwrap()).unwrap();
        let neg: Vec<C64> = v.iter().map(|&x| -x).collect();
        let (a, b) = (lifted_matrix(&s, &v).unwrap(), lifted_matrix(&s, &neg).unwrap());
        assert!(max_entry_gap(&a, &b) <= 1e-12 * a.max_abs().max(1.0), "{:?}", s.family);
    }
    let s = FamilySpec::askey_wilson(4, abcd, re(1.8)).unwrap();
    let z: Vec<C64> = compute_zeros(&s).unwrap().zeros.iter().map(|&x| aw_lift(x)).collect();
    let inv: Vec<C64> = z.iter().map(|v| v.inv()).collect();
    let (a, b) = (lifted_matrix(&s, &z).unwrap(), lifted_matrix(&s, &inv).unwrap());
    assert!(max_entry_gap(&a, &b) <= 1e-12 * a.max_abs().max(1.0));
}

/// Draws two specs differing only in spectrum-irrelevant parameters.
fn isospectral_pair(rng: &mut ChaCha8Rng, family: Family, n: usize) -> (FamilySpec, FamilySpec) {
    let mut u = |lo: f64, hi: f64| re(rng.random_range(lo..hi));
    match family {
        Family::GHyp => {
            let b = [u(1.5, 4.0), u(1.5, 4.0)];
            let a1 = [u(0.5, 3.0), u(0.5, 3.0)];
            let a2 = [u(0.5, 3.0), u(0.5, 3.0)];
            (FamilySpec::ghyp(n, &a1, &b).unwrap(), FamilySpec::ghyp(n, &a2, &b).unwrap())
        }
        Family::Jacobi => {
            let a = u(0.5, 3.0);
            (FamilySpec::jacobi(n, a, u(0.5, 3.0)).unwrap(), FamilySpec::jacobi(n, a, u(0.5, 3.0)).unwrap())
        }
        Family::GBasicHyp => {
            let (a, q) = ([u(0.5, 3.0), u(0.5, 3.0)], u(1.3, 2.5));
            let (b1, b2) = ([u(1.5, 4.0)], [u(1.5, 4.0)]);
            (FamilySpec::gbasic(n, &a, &b1, q).unwrap(), FamilySpec::gbasic(n, &a, &b2, q).unwrap())
        }
        Family::Wilson | Family::Racah => {
            let p: [C64; 4] = [u(0.5, 3.0), u(0.5, 3.0), u(0.5, 3.0), u(0.5, 3.0)];
            let shift = u(-0.3, 0.3);
            let mut p2 = [p[0] + shift, p[1] - shift, u(0.5, 3.0), u(0.5, 3.0)];
            if family == Family::Wilson {
                // Keep a + b + c + d fixed.
                let d = p[2] + p[3] - p2[2];
                p2[3] = d;
            }
            let make = |v: [C64; 4]| {
                if family == Family::Wilson {
                    FamilySpec::wilson(n, v)
                } else {
                    FamilySpec::racah(n, v)
                }
            };
            (make(p).unwrap(), make(p2).unwrap())
        }
        Family::AskeyWilson | Family::QRacah => {
            let q = u(1.3, 2.5);
            let p: [C64; 4] = [u(0.5, 3.0), u(0.5, 3.0), u(0.5, 3.0), u(0.5, 3.0)];
            let k = u(0.8, 1.25);
            let p2 = if family == Family::AskeyWilson {
                [p[0] * k, p[1] / k, u(0.5, 3.0), p[2] * p[3]]
            } else {
                [p[0] * k, p[1] / k, u(0.5, 3.0), u(0.5, 3.0)]
            };
            let p2 = if family == Family::AskeyWilson { [p2[0], p2[1], p2[2], p2[3] / p2[2]] } else { p2 };
            let make = |v: [C64; 4]| {
                if family == Family::AskeyWilson {
                    FamilySpec::askey_wilson(n, v, q)
                } else {
                    FamilySpec::q_racah(n, v, q)
                }
            };
            (make(p).unwrap(), make(p2).unwrap())
        }
    }
}

#[test]
fn spectra_depend_only_on_the_reduced_parameters() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for family in Family::ALL {
        for k in 0..3 {
            let (s1, s2) = isospectral_pair(&mut rng, family, 3 + k);
            let (r1, r2) = (verify_matrix(&s1).unwrap(), verify_matrix(&s2).unwrap());
            let d = multiset_match(&r1.computed_spectrum.values, &r2.computed_spectrum.values).unwrap();
            let scale = r1.reference_spectrum.values.iter().map(|v| v.norm()).fold(1.0, f64::max);
            assert!(d <= 1e-6 * scale, "{family:?}: {d:e}");
            assert!(max_entry_gap(&r1.l, &r2.l) >= 1e-3, "{family:?}");
        }
    }
}
