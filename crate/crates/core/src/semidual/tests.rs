use proptest::prelude::*;

use super::*;
use crate::error::Error;
use crate::fpmod::{quotient_by_element, summand_analysis, FPModule, RingMatrix};
use crate::groebner::GradedRing;
use crate::homalg::depth;
use crate::polyring::Polynomial;
use crate::testutil::*;

fn p(r: &GradedRing, s: &str) -> Polynomial {
    r.parse(s).unwrap()
}

fn free(r: &GradedRing) -> FPModule {
    FPModule::free(r, vec![0])
}

fn cfg() -> Config {
    Config::default()
}

#[test]
fn ring_is_semidualizing_over_itself() {
    let r = ring(101, &["x", "y"], &[]);
    let cert = check_semidualizing(&free(&r), 4).unwrap();
    assert!(cert.passed());
    assert_eq!(cert.end_generators, 1);
    assert_eq!(cert.ext_vanishing_through, 4);
    assert_eq!(cert.verdict(), "verified_up_to_bound");
}

#[test]
fn free_of_rank_two_fails_condition_one() {
    let r = ring(101, &["x", "y"], &[]);
    let cert = check_semidualizing(&FPModule::free(&r, vec![0, 0]), 4).unwrap();
    assert!(!cert.passed());
    assert_eq!(cert.end_generators, 4);
    assert!(matches!(cert.failure, Some(Failure::EndNotCyclic { generators: 4, .. })));
    assert_eq!(cert.verdict(), "failed");
}

#[test]
fn canonical_module_is_semidualizing_up_to_six() {
    let r = semigroup();
    let cert = check_semidualizing(&omega(&r), 6).unwrap();
    assert!(cert.passed(), "{:?}", cert.failure);
    assert!(cert.faithful && cert.end_cyclic);
    assert_eq!(cert.ext_vanishing_through, 6);
}

#[test]
fn zero_module_is_rejected() {
    let r = ring(101, &["x"], &[]);
    assert!(matches!(check_semidualizing(&FPModule::zero(&r), 2), Err(Error::ZeroModule(_))));
}

#[test]
fn split_identity_and_row() {
    let r = ring(101, &["x", "y"], &[]);
    let id = RingMatrix::identity(&r, &[0, 0]);
    let s = split_surjection(&r, &id).unwrap();
    assert_eq!(s.section, id);
    let t = RingMatrix::from_rows(vec![0], vec![0, 1], vec![vec![r.one(), p(&r, "x")]]);
    let s = split_surjection(&r, &t).unwrap();
    assert_eq!(s.section.columns(), &[vec![r.one(), r.zero()]]);
    assert_eq!(s.complement.columns(), &[vec![p(&r, "-x"), r.one()]]);
}

#[test]
fn split_rejects_non_surjection() {
    let r = ring(101, &["x", "y"], &[]);
    let t = RingMatrix::from_rows(vec![0], vec![1, 1], vec![vec![p(&r, "x"), p(&r, "y")]]);
    assert!(matches!(split_surjection(&r, &t), Err(Error::NotSurjective { rank: 0, needed: 1 })));
}

#[test]
fn bass_class_examples() {
    let r = semigroup();
    let w = omega(&r);
    let x = p(&r, "x");
    assert!(bass_class_check(&w, &w, 4).unwrap().holds());
    let wx = quotient_by_element(&w, &x).unwrap();
    let rep = bass_class_check(&w, &wx, 4).unwrap();
    assert!(rep.holds());
    assert!(rep.evaluation_iso);
    let k = FPModule::residue_field(&r);
    let rep = bass_class_check(&w, &k, 4).unwrap();
    assert!(!rep.holds());
    assert_eq!(rep.first_nonvanishing, Some(1));
}

#[test]
fn c_resolutions_of_length_zero_and_one() {
    let r = semigroup();
    let w = omega(&r);
    let res = c_resolution(&w, &w, 4).unwrap();
    assert!(res.verified());
    assert_eq!(res.length, 0);
    let wx = quotient_by_element(&w, &p(&r, "x")).unwrap();
    let res = c_resolution(&w, &wx, 4).unwrap();
    assert!(res.verified());
    assert_eq!(res.length, 1);
    assert_eq!(res.base.ranks(), vec![1, 1]);
}

#[test]
fn c_dimension_examples() {
    let r = semigroup();
    let w = omega(&r);
    assert_eq!(c_dimension(&w, &w, 4).unwrap(), 0);
    let wx = quotient_by_element(&w, &p(&r, "x")).unwrap();
    assert_eq!(c_dimension(&w, &wx, 4).unwrap(), 1);
    let s = ring(7, &["x", "y"], &[]);
    assert_eq!(c_dimension(&free(&s), &FPModule::residue_field(&s), 4).unwrap(), 2);
}

#[test]
fn reduction_to_a_field() {
    let r = ring(7, &["x"], &[]);
    let red = reduce_by_nzd(&r, &free(&r), &p(&r, "x"), 2).unwrap();
    assert_eq!(red.ring.dimension(), 0);
    assert_eq!(red.module.ngens(), 1);
    assert!(red.certificate.passed());
}

#[test]
fn reduction_of_the_plane() {
    let r = ring(7, &["x", "y"], &[]);
    let red = reduce_by_nzd(&r, &free(&r), &p(&r, "x"), 4).unwrap();
    assert_eq!(red.ring.dimension(), 1);
    assert!(red.certificate.passed());
}

#[test]
fn reduction_of_the_canonical_module() {
    let r = semigroup();
    let red = reduce_by_nzd(&r, &omega(&r), &p(&r, "x"), 8).unwrap();
    assert_eq!(red.ring.dimension(), 0);
    assert_eq!(red.module.ngens(), 2);
    assert!(red.certificate.passed(), "{:?}", red.certificate.failure);
}

#[test]
fn reduction_refuses_zerodivisors() {
    let r = ring(101, &["x", "y"], &["x^2"]);
    assert!(matches!(
        reduce_by_nzd(&r, &free(&r), &p(&r, "x"), 2),
        Err(Error::ZeroDivisor { .. })
    ));
}

#[test]
fn classical_auslander_buchsbaum() {
    let r = ring(7, &["x", "y"], &[]);
    let rep = verify_ab(&free(&r), &FPModule::residue_field(&r), &cfg()).unwrap();
    assert!(rep.passed());
    assert_eq!((rep.c_dim, rep.depth_c.value, rep.depth_y.value, rep.pd_hom), (2, 2, 0, 2));
}

#[test]
fn canonical_module_against_itself() {
    let r = semigroup();
    let w = omega(&r);
    let rep = verify_ab(&w, &w, &cfg()).unwrap();
    assert!(rep.passed());
    assert_eq!((rep.c_dim, rep.depth_c.value, rep.depth_y.value), (0, 1, 1));
    assert_eq!(rep.reduction.len(), 1);
    assert!(rep.reduction[0].nzd_in_ring);
}

#[test]
fn canonical_module_modulo_x() {
    let r = semigroup();
    let w = omega(&r);
    let wx = quotient_by_element(&w, &p(&r, "x")).unwrap();
    let rep = verify_ab(&w, &wx, &cfg()).unwrap();
    assert!(rep.passed());
    assert_eq!((rep.c_dim, rep.depth_c.value, rep.depth_y.value, rep.pd_hom), (1, 1, 0, 1));
    let json = serde_json::to_string(&rep.to_json()).unwrap();
    let keys = ["ring", "C", "Y", "certificate", "c_dim", "depth_C", "depth_Y", "pd_hom", "ab_identity", "ext_bound", "witnesses"];
    let mut from = 0;
    for k in keys {
        from += json[from..].find(&format!("\"{k}\":")).unwrap_or_else(|| panic!("{k} out of order in {json}"));
    }
}

#[test]
fn verify_ab_refuses_infinite_pd() {
    let r = ring(101, &["x", "y"], &["x^2"]);
    let err = verify_ab(&free(&r), &FPModule::residue_field(&r), &cfg()).unwrap_err();
    assert!(matches!(err, Error::Truncated { .. }), "{err}");
    assert_eq!(err.exit_code(), 3);
}

#[test]
fn verify_ab_refuses_zero() {
    let r = ring(101, &["x"], &[]);
    assert!(matches!(verify_ab(&free(&r), &FPModule::zero(&r), &cfg()), Err(Error::ZeroModule(_))));
}

#[test]
fn corollaries_for_ring_and_canonical_module() {
    let r = ring(101, &["x", "y"], &[]);
    assert!(corollary_suite(&free(&r), None, &cfg()).unwrap().all_passed());
    let s = semigroup();
    let w = omega(&s);
    let rep = corollary_suite(&w, None, &cfg()).unwrap();
    assert!(rep.all_passed(), "{:?}", rep.checks);
    let wx = quotient_by_element(&w, &p(&s, "x")).unwrap();
    let rep = corollary_suite(&w, Some(&wx), &cfg()).unwrap();
    assert!(rep.all_passed(), "{:?}", rep.checks);
}

#[test]
fn extension_from_nothing() {
    let r = semigroup();
    let w = omega(&r);
    let ext = extend_regular_sequence(&w, &w, &[], &cfg()).unwrap();
    assert_eq!(ext.sequence.len(), 1);
    assert_eq!(ext.given, 0);
}

#[test]
fn extension_already_maximal() {
    let r = semigroup();
    let w = omega(&r);
    let x = p(&r, "x");
    let ext = extend_regular_sequence(&w, &w, &[x.clone()], &cfg()).unwrap();
    assert_eq!(ext.sequence, vec![x]);
}

#[test]
fn extension_in_the_plane() {
    let r = ring(7, &["x", "y"], &[]);
    let c = free(&r);
    let y = FPModule::cyclic(&r, &[p(&r, "x")]).unwrap();
    let ext = extend_regular_sequence(&c, &y, &[p(&r, "y")], &cfg()).unwrap();
    assert_eq!(ext.sequence.len(), 2);
    assert_eq!(ext.sequence[0], p(&r, "y"));
    let rest = quotient_by_element(&c, &p(&r, "y")).unwrap();
    assert_eq!(depth(&quotient_by_element(&rest, &ext.sequence[1]).unwrap()).unwrap().value, 0);
}

#[test]
fn extension_rejects_non_regular_input() {
    let r = ring(7, &["x", "y"], &[]);
    let y = FPModule::cyclic(&r, &[p(&r, "x")]).unwrap();
    assert!(extend_regular_sequence(&free(&r), &y, &[p(&r, "x")], &cfg()).is_err());
}

#[test]
fn functor_on_torsion() {
    let r = semigroup();
    let w = omega(&r);
    let m = quotient_by_element(&w, &p(&r, "y")).unwrap();
    let rep = functor_properties(&w, &m, &p(&r, "x")).unwrap();
    assert!(rep.passed(), "{rep:?}");
    assert!(!rep.nzd_on_m);
}

fn corpus_rings() -> Vec<GradedRing> {
    vec![
        ring(101, &["x"], &[]),
        ring(101, &["x", "y"], &[]),
        ring(101, &["x", "y"], &["x^2"]),
        semigroup(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn splitting_closes_the_loop(seed in any::<u64>(), which in 0usize..4) {
        let r = &corpus_rings()[which];
        let mut g = rng(seed);
        let t = random_surjection(r, 2, 3, &mut g);
        let s = split_surjection(r, &t).unwrap();
        prop_assert_eq!(t.mul(r, &s.section), RingMatrix::identity(r, &[0, 0]).with_degrees(vec![0, 0], s.section.col_degrees().to_vec()));
        let e = s.section.mul(r, &t);
        let a = summand_analysis(r, &e).unwrap();
        prop_assert_eq!((a.p, a.q), (2, 1));
    }

    #[test]
    fn scalar_functoriality(seed in any::<u64>()) {
        let r = semigroup();
        let w = omega(&r);
        let mut g = rng(seed);
        let m = random_module(&r, &mut g);
        let d = [3, 4, 5, 6][(seed % 4) as usize];
        let x = random_element(&r, d, &mut g);
        prop_assume!(!x.is_zero());
        let rep = functor_properties(&w, &m, &x).unwrap();
        prop_assert!(rep.passed(), "{:?}", rep);
    }
}
