//! Randomized structural properties across modules.

use cwcode::anticodes::{anticode_m, anticode_s};
use cwcode::codefile::{parse_code, write_code};
use cwcode::families::{f5_construct, mds_cw_construct, moa_cw_construct};
use cwcode::galois::Field;
use cwcode::ortharray::{oa_verify, rs_oa};
use cwcode::space::{distance, space_cardinality};
use cwcode::verifier::certify;
use cwcode::{Code, Word};
use proptest::prelude::*;

const PRIME_POWERS: [u64; 7] = [2, 3, 4, 5, 7, 8, 9];

fn word(n: usize, q: u16) -> impl Strategy<Value = Vec<u16>> {
    proptest::collection::vec(0..q, n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(qi in 0..PRIME_POWERS.len(), a in 0u32..9, b in 0u32..9, c in 0u32..9) {
        let f = Field::new(PRIME_POWERS[qi]).unwrap();
        let q = f.order();
        let (a, b, c) = (f.element(a % q).unwrap(), f.element(b % q).unwrap(), f.element(c % q).unwrap());
        prop_assert_eq!(f.add(a, b), f.add(b, a));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
            prop_assert_eq!(f.pow(a, q as u64 - 1), f.one());
        }
    }

    #[test]
    fn reed_solomon_arrays_have_index_one(qi in 1..PRIME_POWERS.len(), t in 1usize..4, extra in 0usize..3) {
        let q = PRIME_POWERS[qi];
        let n = (t + extra).min(q as usize + 1);
        prop_assume!(n >= t);
        let oa = rs_oa(t, n, q).unwrap();
        prop_assert_eq!(oa.rows().len(), (q as usize).pow(t as u32));
        prop_assert_eq!(oa_verify(oa.rows(), q, t).unwrap(), 1);
    }

    #[test]
    fn code_files_round_trip(words in proptest::collection::vec(word(5, 4), 1..30)) {
        let words: Vec<Word> = words.into_iter().map(Word::from).collect::<std::collections::BTreeSet<_>>().into_iter().collect();
        let code = Code::new(5, 4, words).unwrap();
        let text = write_code(&code);
        prop_assert_eq!(parse_code(&text).unwrap(), code);
        prop_assert_eq!(write_code(&parse_code(&text).unwrap()), text);
    }

    #[test]
    fn hamming_distance_is_a_metric(a in word(6, 5), b in word(6, 5), c in word(6, 5)) {
        let (a, b, c) = (Word::from(a), Word::from(b), Word::from(c));
        prop_assert_eq!(distance(&a, &b), distance(&b, &a));
        prop_assert_eq!(distance(&a, &a), 0);
        prop_assert!(distance(&a, &c) <= distance(&a, &b) + distance(&b, &c));
    }

    #[test]
    fn mds_cw_codes_certify(qi in 1..PRIME_POWERS.len(), w in 2usize..5, extra in 0usize..4) {
        let q = PRIME_POWERS[qi];
        let n = (w + extra).min(q as usize + 1);
        prop_assume!(n >= w);
        let fc = mds_cw_construct(n, w, q).unwrap();
        prop_assert!(certify(&fc).unwrap().passed());
        let anticode = anticode_m(n, w, w - 1, q).unwrap();
        prop_assert_eq!(
            space_cardinality(n, w, q),
            (fc.code().len() * anticode.len()).into()
        );
    }

    #[test]
    fn one_per_support_codes_certify(n in 3usize..8, w in 2usize..4) {
        prop_assume!(w < n);
        let fc = f5_construct(n, w).unwrap();
        prop_assert!(certify(&fc).unwrap().passed());
        prop_assert_eq!(fc.code().min_distance().unwrap(), w + 1);
    }

    #[test]
    fn moa_codes_certify(qi in 2..PRIME_POWERS.len(), n in 4usize..7, t in 2usize..4, l in 1usize..3) {
        let q = PRIME_POWERS[qi];
        prop_assume!(t + l < n && n <= q as usize + 1);
        match moa_cw_construct(n, t, l, q) {
            Ok(fc) => prop_assert!(certify(&fc).unwrap().passed(), "{}", fc.manifest_text()),
            Err(cwcode::Error::ParamsInfeasible(_)) => {
                prop_assert!((q as u128) < cwcode::combinatorics::binomial(n as u64 - 1, l as u64).unwrap() as u128)
            }
            Err(e) => prop_assert!(false, "{e}"),
        }
    }

    #[test]
    fn s_anticode_diameter(n in 3usize..8, w in 1usize..6, t in 0usize..5, qi in 0..3usize) {
        let q = [2u64, 3, 4][qi];
        prop_assume!(w <= n && t <= w);
        let a = anticode_s(n, w, t, q).unwrap();
        let (k, m) = (w - t, n - t);
        let expected = if q >= 3 { (2 * k).min(m) } else { 2 * k.min(m - k) };
        if a.len() >= 2 {
            prop_assert_eq!(a.diameter(), expected);
        }
    }
}
