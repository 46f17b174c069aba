//! Browser bindings for the static demo page: the three interactive
//! operations take ';'-separated polynomial strings and return JSON.
//! Computation errors come back as a JSON object with a single "error" key
//! rather than throwing across the boundary.

use wasm_bindgen::prelude::*;

use birat_core::{
    classify, divided_difference, format_bipoly, format_unipoly, integer_primitive,
    make_prime_field, parse_poly, reduced_groebner_basis, substitute_diagonal, AmCheck,
    Classification, Field, FieldSpec, IdealSpec, ProblemInstance, Rationals, Staircase, TermOrder,
    UniPoly,
};

fn parse_order(order: &str) -> TermOrder {
    if order == "lex" {
        TermOrder::lex()
    } else {
        TermOrder::degrevlex()
    }
}

fn error_json(message: impl std::fmt::Display) -> String {
    serde_json::json!({ "error": message.to_string() }).to_string()
}

fn parse_inputs<F: Field>(field: F, polys: &str) -> Result<Vec<UniPoly<F>>, String> {
    let texts: Vec<&str> = polys
        .split(';')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .collect();
    if texts.is_empty() {
        return Err("no input polynomials".to_string());
    }
    texts
        .iter()
        .map(|t| parse_poly(t, field).map_err(|e| format!("{t:?}: {e}")))
        .collect()
}

/// Verdict for the parametrization given by the ';'-separated polynomials.
#[wasm_bindgen]
pub fn classify_instance(polys: &str, field: &str, order: &str) -> String {
    match FieldSpec::parse(field) {
        Ok(FieldSpec::Q) => classify_in(Rationals, polys, parse_order(order)),
        Ok(FieldSpec::Fp(p)) => match make_prime_field(p) {
            Ok(f) => classify_in(f, polys, parse_order(order)),
            Err(e) => error_json(e),
        },
        Err(e) => error_json(e),
    }
}

fn classify_in<F: Field>(field: F, polys: &str, order: TermOrder) -> String {
    let polys = match parse_inputs(field, polys) {
        Ok(p) => p,
        Err(e) => return error_json(e),
    };
    let inst = match ProblemInstance::new(polys, order) {
        Ok(inst) => inst,
        Err(e) => return error_json(e),
    };
    let verdict = match classify(&inst) {
        Ok(v) => v,
        Err(e) => return error_json(e),
    };
    let classification = match verdict.classification {
        Classification::NotBirational => "not birational",
        Classification::BirationalNotIsomorphism => "birational, not an isomorphism",
        Classification::Isomorphism => "isomorphism",
    };
    serde_json::json!({
        "classification": classification,
        "staircase": match verdict.staircase {
            Staircase::Finite(n) => serde_json::Value::from(n),
            Staircase::Infinite => serde_json::Value::from("infinite"),
        },
        "am_check": verdict.am_check.map(|c| match c {
            AmCheck::Satisfied => "satisfied",
            AmCheck::Violated => "violated",
            AmCheck::Inapplicable => "inapplicable",
        }),
        "reasons": verdict.reason_codes,
        "inputs": inst.polys().iter().map(|f| format_unipoly(f, "t")).collect::<Vec<_>>(),
        "gi": inst.divided_differences().iter().map(|g| format_bipoly(g, &order)).collect::<Vec<_>>(),
        "basis_monic": verdict.basis.elements().iter().map(|h| format_bipoly(h, &order)).collect::<Vec<_>>(),
        "basis_primitive": verdict.basis.elements().iter()
            .map(|h| format_bipoly(&integer_primitive(h, &order), &order)).collect::<Vec<_>>(),
        "order": order.name(),
        "field": field.name(),
    })
    .to_string()
}

/// Divided differences and the reduced Groebner basis of the ideal they span.
#[wasm_bindgen]
pub fn reduced_basis(polys: &str, field: &str, order: &str) -> String {
    match FieldSpec::parse(field) {
        Ok(FieldSpec::Q) => basis_in(Rationals, polys, parse_order(order)),
        Ok(FieldSpec::Fp(p)) => match make_prime_field(p) {
            Ok(f) => basis_in(f, polys, parse_order(order)),
            Err(e) => error_json(e),
        },
        Err(e) => error_json(e),
    }
}

fn basis_in<F: Field>(field: F, polys: &str, order: TermOrder) -> String {
    let polys = match parse_inputs(field, polys) {
        Ok(p) => p,
        Err(e) => return error_json(e),
    };
    let gens: Vec<_> = polys.iter().map(divided_difference).collect();
    let nonzero: Vec<_> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if nonzero.is_empty() {
        return error_json("degenerate image (point): every divided difference is zero");
    }
    let basis = match IdealSpec::new(nonzero, order).and_then(|i| reduced_groebner_basis(&i)) {
        Ok(b) => b,
        Err(e) => return error_json(e),
    };
    serde_json::json!({
        "inputs": polys.iter().map(|f| format_unipoly(f, "t")).collect::<Vec<_>>(),
        "gi": gens.iter().map(|g| format_bipoly(g, &order)).collect::<Vec<_>>(),
        "basis_monic": basis.elements().iter().map(|h| format_bipoly(h, &order)).collect::<Vec<_>>(),
        "basis_primitive": basis.elements().iter()
            .map(|h| format_bipoly(&integer_primitive(h, &order), &order)).collect::<Vec<_>>(),
        "order": order.name(),
        "field": field.name(),
    })
    .to_string()
}

/// Each g(s,t) = (f(t) - f(s))/(t - s) with its diagonal g(s,s) and the
/// derivative f'(s) it must equal.
#[wasm_bindgen]
pub fn divided_differences(polys: &str, field: &str) -> String {
    match FieldSpec::parse(field) {
        Ok(FieldSpec::Q) => divdiff_in(Rationals, polys),
        Ok(FieldSpec::Fp(p)) => match make_prime_field(p) {
            Ok(f) => divdiff_in(f, polys),
            Err(e) => error_json(e),
        },
        Err(e) => error_json(e),
    }
}

fn divdiff_in<F: Field>(field: F, polys: &str) -> String {
    let polys = match parse_inputs(field, polys) {
        Ok(p) => p,
        Err(e) => return error_json(e),
    };
    let order = TermOrder::degrevlex();
    let rows: Vec<_> = polys
        .iter()
        .map(|f| {
            let g = divided_difference(f);
            serde_json::json!({
                "f": format_unipoly(f, "t"),
                "g": format_bipoly(&g, &order),
                "diagonal": format_unipoly(&substitute_diagonal(&g), "s"),
                "derivative": format_unipoly(&f.derivative(), "s"),
            })
        })
        .collect();
    serde_json::json!({ "rows": rows, "field": field.name() }).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classify_fixture() {
        let out = classify_instance("t^3; t^2 + t", "Q", "degrevlex");
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["classification"], "birational, not an isomorphism");
        assert_eq!(v["staircase"], 2);
        assert_eq!(v["am_check"], "violated");
    }

    #[test]
    fn basis_fixture() {
        let out = reduced_basis("t^10 + t^4; t^8 + 2*t^2; t^6 - t^4 + 1", "Q", "degrevlex");
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["basis_monic"], serde_json::json!(["t + s"]));
    }

    #[test]
    fn divdiff_fixture() {
        let out = divided_differences("t^3", "F5");
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["rows"][0]["g"], "t^2 + t*s + s^2");
        assert_eq!(v["rows"][0]["diagonal"], "3*s^2");
    }

    #[test]
    fn errors_are_json() {
        for out in [
            classify_instance("t^", "Q", "degrevlex"),
            classify_instance("t", "F91", "degrevlex"),
            classify_instance("5; 7", "Q", "degrevlex"),
            reduced_basis("", "Q", "lex"),
            divided_differences("t", "nonsense"),
        ] {
            let v: serde_json::Value = serde_json::from_str(&out).unwrap();
            assert!(v.get("error").is_some(), "expected error object: {out}");
        }
    }
}
