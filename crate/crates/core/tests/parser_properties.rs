//! Parser totality and round-trip properties.

use birat_core::{format_unipoly, make_prime_field, parse_poly, Field, Rationals, UniPoly};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

#[test]
fn roundtrip_over_q() {
    let mut rng = StdRng::seed_from_u64(21);
    for _ in 0..500 {
        let degree = rng.gen_range(0..=10);
        let p = UniPoly::from_coeffs(
            Rationals,
            (0..=degree).map(|e| {
                let numer = Rationals.from_int(rng.gen_range(-20..=20));
                let denom = Rationals.from_int(rng.gen_range(1..=12));
                (e, Rationals.div(&numer, &denom).unwrap())
            }),
        );
        let text = format_unipoly(&p, "t");
        assert_eq!(
            parse_poly(&text, Rationals).unwrap(),
            p,
            "text was {text:?}"
        );
    }
}

#[test]
fn roundtrip_over_f101() {
    let field = make_prime_field(101).unwrap();
    let mut rng = StdRng::seed_from_u64(22);
    for _ in 0..500 {
        let degree = rng.gen_range(0..=10);
        let p = UniPoly::from_coeffs(field, (0..=degree).map(|e| (e, rng.gen_range(0..101))));
        let text = format_unipoly(&p, "t");
        assert_eq!(parse_poly(&text, field).unwrap(), p, "text was {text:?}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    /// Parsing is total: arbitrary bytes either parse or produce a positioned
    /// error, and never panic.
    #[test]
    fn fuzzed_input_never_panics(bytes in proptest::collection::vec(any::<u8>(), 0..4096)) {
        if let Ok(text) = std::str::from_utf8(&bytes) {
            let _ = parse_poly(text, Rationals);
            let _ = parse_poly(text, make_prime_field(5).unwrap());
        }
    }

    /// Same, restricted to the grammar's alphabet so deeper parse paths and
    /// error positions are hit.
    #[test]
    fn fuzzed_alphabet_never_panics(text in "[0-9t+\\-*/^() ]{0,256}") {
        match parse_poly(&text, Rationals) {
            Ok(_) => {}
            Err(birat_core::ParseError::Syntax { offset, .. }) => {
                prop_assert!(offset <= text.len());
            }
            Err(birat_core::ParseError::DivisionByZero { offset }) => {
                prop_assert!(offset < text.len());
            }
        }
    }

    /// Round-trip as a property over structured random polynomials.
    #[test]
    fn roundtrip_property(coeffs in proptest::collection::vec(-50i64..=50, 0..12)) {
        let p = UniPoly::from_ints(Rationals, &coeffs);
        let text = format_unipoly(&p, "t");
        prop_assert_eq!(parse_poly(&text, Rationals).unwrap(), p);
    }
}
