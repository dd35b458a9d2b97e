//! Explicit constructions against the exhaustive oracle: every certified
//! diameter-perfect construction must be a maximum code.

use cwcode::designs::gs_construct_2_3;
use cwcode::families::{
    f5_construct, f5_construct_w3, mds_cw_construct, moa_cw_construct, moa_reduce, FamilyCode, ReduceMode,
};
use cwcode::oracle::{max_anticode_search, max_code_search, SearchBudget, SearchStatus};
use cwcode::verifier::certify;
use cwcode::{Error, Family};

fn assert_optimal(fc: &FamilyCode) {
    assert!(certify(fc).unwrap().passed(), "{}", fc.manifest_text());
    let k = fc.claimed();
    let budget = SearchBudget::default();
    let r = max_code_search(k.n, k.d, k.w, k.q, &budget).unwrap();
    assert_eq!(r.status, SearchStatus::Exact, "{k}");
    assert_eq!(r.value, fc.code().len() as u64, "{k}: oracle disagrees with the construction");
    let witness = r.witness.unwrap();
    assert!(witness.min_distance().unwrap() >= k.d);
    // the matching anticode is itself a maximum anticode
    if let Some(a) = fc.anticode() {
        let built = a.build().unwrap();
        let s = max_anticode_search(k.n, built.diameter(), k.w, k.q, &budget).unwrap();
        assert_eq!(s.value, built.len() as u64, "{k}: {a} is not maximum");
    }
}

#[test]
fn mds_cw_codes_are_maximum() {
    for (n, w, q) in [(3, 2, 3), (4, 2, 3), (4, 3, 3), (3, 3, 4), (4, 3, 4), (5, 4, 4)] {
        assert_optimal(&mds_cw_construct(n, w, q).unwrap());
    }
}

#[test]
fn one_per_support_codes_are_maximum() {
    assert_optimal(&f5_construct(4, 2).unwrap());
    assert_optimal(&f5_construct(5, 2).unwrap());
    assert_optimal(&f5_construct_w3(4).unwrap());
    assert_optimal(&f5_construct_w3(5).unwrap());
}

#[test]
fn modified_oa_codes_are_maximum() {
    let fc = moa_cw_construct(5, 3, 1, 4).unwrap();
    assert_eq!((fc.claimed().n, fc.claimed().d, fc.claimed().w, fc.claimed().q), (4, 2, 3, 5));
    assert_eq!(fc.family(), Family::MoaCw);
    assert_optimal(&fc);
    assert_optimal(&moa_reduce(&fc, ReduceMode::Puncture).unwrap());
    assert!(matches!(moa_reduce(&fc, ReduceMode::Shorten), Err(Error::ParamsOutOfRange(_))));
    let mds = moa_cw_construct(4, 2, 1, 3).unwrap();
    assert_eq!(mds.family(), Family::MdsCw);
    assert_optimal(&mds);
}

#[test]
fn zero_diameter_moa_parameters_are_rejected() {
    assert!(matches!(moa_cw_construct(4, 2, 2, 4), Err(Error::ParamsOutOfRange(_))));
    assert!(matches!(moa_cw_construct(6, 2, 2, 5), Err(Error::ParamsInfeasible(_))));
}

#[test]
fn ternary_steiner_system_is_maximum() {
    let g = gs_construct_2_3(3).unwrap();
    let r = max_code_search(4, 3, 3, 3, &SearchBudget::default()).unwrap();
    assert_eq!(r.value, g.code().len() as u64);
    assert!(matches!(gs_construct_2_3(6), Err(Error::NotPrimePower(6))));
}
