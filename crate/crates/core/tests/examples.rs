mod common;

use common::*;
use multiarr::error::Error;
use multiarr::freeness::{
    analyze, b2, chi_free, decide_freeness_heavy, filtration_from_flag, find_heavy_flag, Certificate,
    Decider, FreenessVerdict,
};
use multiarr::kernel::rat;
use multiarr::lattice::{characteristic_polynomial_simple, flag_enumerate, is_supersolvable};
use multiarr::model::{parse_linear_form, MultiplicityDelta};
use multiarr::restriction::{
    euler_restriction, euler_ziegler_restriction, is_locally_heavy, iterated_restriction,
    multi_ziegler_restriction,
};

#[test]
fn arrangement_b_has_factored_chi() {
    let a = arrangement_b();
    assert_eq!(a.essential_rank(), 4);
    let chi = characteristic_polynomial_simple(&a).unwrap();
    assert_eq!(chi.betti(2), 41.into());
    assert_eq!(chi, chi_free(&[1, 2, 3, 5]));
}

#[test]
fn four_dimensional_b2() {
    let a = four_dim();
    assert_eq!(a.essential_rank(), 4);
    assert_eq!(b2(&a).unwrap().b2, 99);
    assert_eq!(characteristic_polynomial_simple(&a).unwrap().betti(2), 99.into());
}

#[test]
fn arrangement_b_filtration_from_its_flag() {
    let a = arrangement_b();
    let f = flag(&a, &["w", "z", "y", "x"]);
    let filtration = filtration_from_flag(&a, &f).unwrap();
    assert_eq!(filtration.levels.last().unwrap().len(), a.len());
    assert_eq!(is_supersolvable(&a, Some(&filtration)), Some(filtration));
}

#[test]
fn arrangement_b_heavy_flags() {
    let a = arrangement_b();
    let f = flag(&a, &["w", "z", "y", "x"]);
    let steps = iterated_restriction(&a, &f).unwrap();
    assert!(steps[1..].iter().all(|s| s.is_heavy()));
    let heavy: Vec<_> = flag_enumerate(&a)
        .unwrap()
        .filter(|f| iterated_restriction(&a, f).unwrap()[1..].iter().all(|s| s.is_heavy()))
        .collect();
    assert!(heavy.contains(&f));
    assert!(find_heavy_flag(&a, 1).unwrap().is_some());
}

#[test]
fn shifting_the_heavy_plane_of_the_first_example() {
    let a = example1();
    let z = index(&a, "z");
    for k in -7..=4i64 {
        let b = a.apply_delta(MultiplicityDelta { index: z, shift: k }).unwrap();
        let v = analyze(&b).unwrap().verdict;
        let mz = (16 + k) as u64;
        assert_eq!(v.exponents(), Some(&[7, 9, mz][..]), "k = {k}: {v}");
    }
    assert!(a.apply_delta(MultiplicityDelta { index: z, shift: -16 }).is_err());
}

#[test]
fn second_example_certificate() {
    let a = example2();
    match decide_freeness_heavy(&a).unwrap() {
        FreenessVerdict::NonFree(Certificate::HeavyB2 {
            h0,
            label,
            reduced_b2,
            restriction_b2,
        }) => {
            assert_eq!(h0, index(&a, "z"));
            assert_eq!(label, "z");
            assert_eq!((reduced_b2, restriction_b2), (51, 49));
        }
        other => panic!("unexpected verdict {other}"),
    }
}

#[test]
fn ziegler_and_euler_restrictions_of_the_first_example() {
    let a = example1();
    let z = index(&a, "z");
    let ziegler = multi_ziegler_restriction(&a, z).unwrap();
    assert_eq!(ziegler.sorted_mult(), vec![9, 4, 3]);
    assert_eq!(euler_ziegler_restriction(&a, z).unwrap().sorted_mult(), vec![9, 4, 3]);
    assert_eq!(euler_restriction(&a, z).unwrap().sorted_mult(), vec![9, 4, 3]);
}

#[test]
fn euler_ziegler_needs_local_heaviness() {
    let a = a3(3);
    let x = index(&a, "x");
    assert!(!is_locally_heavy(&a, x).unwrap());
    match euler_ziegler_restriction(&a, x) {
        Err(Error::Precondition(msg)) => {
            assert!(msg.contains("not locally heavy"), "{msg}");
            assert!(msg.contains("x - y"), "{msg}");
        }
        other => panic!("expected a precondition error, got {other:?}"),
    }
}

#[test]
fn simple_fixtures_by_supersolvability() {
    let braid = analyze(&braid()).unwrap();
    assert_eq!(braid.verdict.exponents(), Some(&[1, 2, 3][..]));
    assert!(braid.attempts.iter().any(|(d, v)| *d == Decider::Supersolvable && v.is_free()));
    for n in 2..=4 {
        let v = analyze(&boolean(n)).unwrap().verdict;
        assert_eq!(v.exponents(), Some(vec![1; n].as_slice()));
    }
}

#[test]
fn defining_polynomials_accept_fractions() {
    let vars = multiarr::model::default_var_names(2);
    assert_eq!(parse_linear_form("2x - y/2", &vars).unwrap(), vec![rat(2), rat(-1) / rat(2)]);
    assert!(parse_linear_form("x/0", &vars).is_err());
    let a = parse("(2x - y/2)^3 y", 2);
    assert_eq!(a.hyperplane(0).coeffs(), &[rat(4), rat(-1)]);
    assert_eq!(a.mult(), &[3, 1]);
}
