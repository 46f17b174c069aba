//! Text input and output for polynomials.
//!
//! Input grammar over the single variable t, with explicit `*` between
//! factors:
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := integer | integer '/' integer | 't' | 't' '^' uint | '(' expr ')'
//! ```
//!
//! Whitespace is ignored; coefficients are reduced into the target field.
//! Output is deterministic, terms in decreasing order, and parses back to the
//! same polynomial.

use num_bigint::BigInt;
use thiserror::Error;

use crate::coeff::{CoeffError, Field};
use crate::poly::{BiPoly, Monomial, TermOrder, UniPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("division by zero in coefficient at byte {offset}")]
    DivisionByZero { offset: usize },
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    VarT,
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    End,
}

#[derive(Debug, Clone, PartialEq)]
struct Token {
    tok: Tok,
    offset: usize,
}

fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let offset = i;
        match b {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let digits = &text[start..i];
                let value = digits
                    .parse::<BigInt>()
                    .expect("digit run parses as integer");
                tokens.push(Token {
                    tok: Tok::Int(value),
                    offset,
                });
                continue;
            }
            b't' => tokens.push(Token {
                tok: Tok::VarT,
                offset,
            }),
            b'+' => tokens.push(Token {
                tok: Tok::Plus,
                offset,
            }),
            b'-' => tokens.push(Token {
                tok: Tok::Minus,
                offset,
            }),
            b'*' => tokens.push(Token {
                tok: Tok::Star,
                offset,
            }),
            b'^' => tokens.push(Token {
                tok: Tok::Caret,
                offset,
            }),
            b'/' => tokens.push(Token {
                tok: Tok::Slash,
                offset,
            }),
            b'(' => tokens.push(Token {
                tok: Tok::LParen,
                offset,
            }),
            b')' => tokens.push(Token {
                tok: Tok::RParen,
                offset,
            }),
            _ => {
                return Err(ParseError::Syntax {
                    offset,
                    message: "unexpected character".to_string(),
                })
            }
        }
        i += 1;
    }
    tokens.push(Token {
        tok: Tok::End,
        offset: bytes.len(),
    });
    Ok(tokens)
}

struct Parser<'a, F: Field> {
    tokens: &'a [Token],
    pos: usize,
    field: F,
}

impl<'a, F: Field> Parser<'a, F> {
    fn current(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if &self.current().tok == tok {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn syntax<T>(&self, message: &str) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            offset: self.current().offset,
            message: message.to_string(),
        })
    }

    fn expect_int(&mut self) -> Result<(BigInt, usize), ParseError> {
        let token = self.current().clone();
        if let Tok::Int(value) = token.tok {
            self.pos += 1;
            Ok((value, token.offset))
        } else {
            self.syntax("expected an integer")
        }
    }

    fn expr(&mut self) -> Result<UniPoly<F>, ParseError> {
        let negate = self.eat(&Tok::Minus);
        let mut acc = self.term()?;
        if negate {
            acc = -&acc;
        }
        loop {
            if self.eat(&Tok::Plus) {
                acc = &acc + &self.term()?;
            } else if self.eat(&Tok::Minus) {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<UniPoly<F>, ParseError> {
        let mut acc = self.factor()?;
        while self.eat(&Tok::Star) {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<UniPoly<F>, ParseError> {
        let token = self.current().clone();
        match token.tok {
            Tok::Int(value) => {
                self.pos += 1;
                let mut coeff = self.field.from_bigint(&value);
                if self.eat(&Tok::Slash) {
                    let (denom, denom_offset) = self.expect_int()?;
                    let denom = self.field.from_bigint(&denom);
                    coeff = self.field.div(&coeff, &denom).map_err(|e| match e {
                        CoeffError::DivisionByZero => ParseError::DivisionByZero {
                            offset: denom_offset,
                        },
                        other => ParseError::Syntax {
                            offset: denom_offset,
                            message: other.to_string(),
                        },
                    })?;
                }
                Ok(UniPoly::constant(self.field, coeff))
            }
            Tok::VarT => {
                self.pos += 1;
                let mut exp = 1u32;
                if self.eat(&Tok::Caret) {
                    let (value, offset) = self.expect_int()?;
                    exp = match value.to_biguint().and_then(|v| v.try_into().ok()) {
                        Some(e) => e,
                        None => {
                            return Err(ParseError::Syntax {
                                offset,
                                message: "exponent too large".to_string(),
                            })
                        }
                    };
                }
                Ok(UniPoly::monomial(self.field, exp, self.field.one()))
            }
            Tok::LParen => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.eat(&Tok::RParen) {
                    Ok(inner)
                } else {
                    self.syntax("expected ')'")
                }
            }
            _ => self.syntax("expected a number, 't', or '('"),
        }
    }
}

/// Parses the grammar above into a univariate polynomial over `field`.
pub fn parse_poly<F: Field>(text: &str, field: F) -> Result<UniPoly<F>, ParseError> {
    let tokens = lex(text)?;
    let mut parser = Parser {
        tokens: &tokens,
        pos: 0,
        field,
    };
    let poly = parser.expr()?;
    if parser.current().tok == Tok::End {
        Ok(poly)
    } else {
        parser.syntax("unexpected trailing input")
    }
}

fn render_terms<F: Field>(field: F, terms: Vec<(String, F::Elem)>) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (monomial, coeff)) in terms.into_iter().enumerate() {
        let negative = field.is_negative(&coeff);
        let abs = if negative { field.neg(&coeff) } else { coeff };
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if monomial.is_empty() {
            out.push_str(&abs.to_string());
        } else if field.is_one(&abs) {
            out.push_str(&monomial);
        } else {
            out.push_str(&abs.to_string());
            out.push('*');
            out.push_str(&monomial);
        }
    }
    out
}

fn power(var: &str, exp: u32) -> String {
    match exp {
        1 => var.to_string(),
        _ => format!("{var}^{exp}"),
    }
}

fn bi_monomial_string(m: &Monomial) -> String {
    match (m.exp_t, m.exp_s) {
        (0, 0) => String::new(),
        (et, 0) => power("t", et),
        (0, es) => power("s", es),
        (et, es) => format!("{}*{}", power("t", et), power("s", es)),
    }
}

/// Deterministic rendering with terms in decreasing exponent order. The
/// result parses back to the same polynomial.
pub fn format_unipoly<F: Field>(p: &UniPoly<F>, var: &str) -> String {
    let terms = p
        .terms()
        .rev()
        .map(|(e, c)| {
            let monomial = if e == 0 { String::new() } else { power(var, e) };
            (monomial, c.clone())
        })
        .collect();
    render_terms(p.field(), terms)
}

/// Deterministic rendering with terms decreasing under the given order.
pub fn format_bipoly<F: Field>(p: &BiPoly<F>, ord: &TermOrder) -> String {
    let mut monomials: Vec<(&Monomial, &F::Elem)> = p.terms().collect();
    monomials.sort_by(|(a, _), (b, _)| ord.compare(b, a));
    let terms = monomials
        .into_iter()
        .map(|(m, c)| (bi_monomial_string(m), c.clone()))
        .collect();
    render_terms(p.field(), terms)
}

/// Integer-primitive display transform: denominators cleared, content 1,
/// positive leading coefficient under the given order. Fields with integral
/// canonical representatives (prime fields) pass through unchanged.
pub fn integer_primitive<F: Field>(p: &BiPoly<F>, ord: &TermOrder) -> BiPoly<F> {
    let field = p.field();
    let coeffs: Vec<&F::Elem> = p.terms().map(|(_, c)| c).collect();
    let Some(scale) = field.primitive_scale(&coeffs) else {
        return p.clone();
    };
    let scaled = p.scalar_mul(&scale);
    let (_, lc) = scaled.leading_term(ord).expect("nonzero");
    if field.is_negative(lc) {
        scaled.scalar_mul(&field.neg(&field.one()))
    } else {
        scaled
    }
}

/// Same transform for univariate display.
pub fn integer_primitive_uni<F: Field>(p: &UniPoly<F>) -> UniPoly<F> {
    let field = p.field();
    let coeffs: Vec<&F::Elem> = p.terms().map(|(_, c)| c).collect();
    let Some(scale) = field.primitive_scale(&coeffs) else {
        return p.clone();
    };
    let scaled = p.scalar_mul(&scale);
    if field.is_negative(scaled.leading_coeff().expect("nonzero")) {
        scaled.scalar_mul(&field.neg(&field.one()))
    } else {
        scaled
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{make_prime_field, Rationals};
    use crate::poly::divided_difference;
    use num_rational::BigRational;

    #[test]
    fn parses_quartic_fixture() {
        let p = parse_poly("2*t^8 + t^4 + 3*t + 1", Rationals).unwrap();
        assert_eq!(
            p,
            UniPoly::from_ints(Rationals, &[1, 3, 0, 0, 1, 0, 0, 0, 2])
        );
    }

    #[test]
    fn reduces_into_prime_field() {
        let f5 = make_prime_field(5).unwrap();
        let p = parse_poly("t^2 - 2", f5).unwrap();
        assert_eq!(p, UniPoly::from_coeffs(f5, [(0u32, 3u64), (2, 1)]));
    }

    #[test]
    fn dangling_caret_reports_offset() {
        let err = parse_poly("t^", Rationals).unwrap_err();
        assert_eq!(
            err,
            ParseError::Syntax {
                offset: 2,
                message: "expected an integer".to_string()
            }
        );
    }

    #[test]
    fn rational_literals_and_unary_minus() {
        let p = parse_poly("-1/2*t + 3/4", Rationals).unwrap();
        let half = BigRational::new(BigInt::from(-1), BigInt::from(2));
        let three_quarters = BigRational::new(BigInt::from(3), BigInt::from(4));
        assert_eq!(
            p,
            UniPoly::from_coeffs(Rationals, [(1u32, half), (0, three_quarters)])
        );
    }

    #[test]
    fn division_by_zero_in_field() {
        assert_eq!(
            parse_poly("1/0", Rationals).unwrap_err(),
            ParseError::DivisionByZero { offset: 2 }
        );
        let f5 = make_prime_field(5).unwrap();
        assert_eq!(
            parse_poly("2/5", f5).unwrap_err(),
            ParseError::DivisionByZero { offset: 2 }
        );
    }

    #[test]
    fn implicit_multiplication_is_rejected() {
        assert!(parse_poly("3t", Rationals).is_err());
        assert!(parse_poly("3 t", Rationals).is_err());
        assert!(parse_poly("t t", Rationals).is_err());
    }

    #[test]
    fn parenthesized_expressions() {
        let p = parse_poly("(t + 1) * (t - 1)", Rationals).unwrap();
        assert_eq!(p, UniPoly::from_ints(Rationals, &[-1, 0, 1]));
    }

    #[test]
    fn format_examples() {
        let q = Rationals;
        assert_eq!(format_unipoly(&UniPoly::<Rationals>::zero(q), "t"), "0");
        let f = UniPoly::from_ints(q, &[1, 3, 0, 0, 1, 0, 0, 0, 2]);
        assert_eq!(format_unipoly(&f, "t"), "2*t^8 + t^4 + 3*t + 1");
        assert_eq!(
            format_unipoly(&UniPoly::from_ints(q, &[0, 0, 3]), "s"),
            "3*s^2"
        );

        let ord = TermOrder::degrevlex();
        let g = divided_difference(&UniPoly::from_ints(q, &[0, 0, 0, 1]));
        assert_eq!(format_bipoly(&g, &ord), "t^2 + t*s + s^2");
    }

    #[test]
    fn primitive_form_matches_hand_value() {
        // t^2 s + s^3 - 2s rendered from its monic-in-the-lead rational form
        let ord = TermOrder::degrevlex();
        let third = BigRational::new(BigInt::from(1), BigInt::from(3));
        let h = BiPoly::from_terms(
            Rationals,
            [
                (Monomial::new(1, 2), third.clone()),
                (Monomial::new(3, 0), third.clone()),
                (
                    Monomial::new(1, 0),
                    &third * &BigRational::from_integer((-2).into()),
                ),
            ],
        );
        let primitive = integer_primitive(&h, &ord);
        assert_eq!(format_bipoly(&primitive, &ord), "t^2*s + s^3 - 2*s");
    }

    #[test]
    fn roundtrip_smoke() {
        let q = Rationals;
        let polys = [
            UniPoly::from_ints(q, &[0, -1, 0, 7]),
            UniPoly::from_ints(q, &[-3]),
            UniPoly::zero(q),
        ];
        for p in polys {
            let text = format_unipoly(&p, "t");
            assert_eq!(parse_poly(&text, q).unwrap(), p);
        }
    }
}
