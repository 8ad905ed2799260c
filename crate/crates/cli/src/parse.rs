//! Polynomial expressions such as `x^4 - 4x^2 - 8x + 2` or `1/2x^2 - x^2`.
//!
//! A term is `[±] [coef] [*] [x [^ exp]]` where `coef` is `a` or `a/b`.
//! Whitespace is ignored everywhere; every term after the first needs a sign.

use num_traits::{One, Zero};
use one_radical::arith::parse_rational;
use one_radical::{QPoly, Rational};
use thiserror::Error;

pub const MAX_DEGREE: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    /// `pos` is a 0-based character offset into the input.
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unsupported degree {0} (at most {MAX_DEGREE})")]
    UnsupportedDegree(usize),
}

fn syntax<T>(pos: usize, msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError::Syntax { pos, msg: msg.into() })
}

struct Cursor {
    // (offset, char) with whitespace removed
    chars: Vec<(usize, char)>,
    at: usize,
    end: usize,
}

impl Cursor {
    fn new(text: &str) -> Self {
        let chars: Vec<_> = text.chars().enumerate().filter(|(_, c)| !c.is_whitespace()).collect();
        Cursor { chars, at: 0, end: text.chars().count() }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.at).map(|&(_, c)| c)
    }

    fn pos(&self) -> usize {
        self.chars.get(self.at).map_or(self.end, |&(p, _)| p)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.at;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.at += 1;
        }
        (self.at > start).then(|| self.chars[start..self.at].iter().map(|&(_, c)| c).collect())
    }
}

/// Parses an expression into a polynomial, combining like terms.
pub fn parse_poly(text: &str) -> Result<QPoly, ParseError> {
    let mut cur = Cursor::new(text);
    if cur.peek().is_none() {
        return syntax(cur.pos(), "empty expression");
    }
    let mut coeffs = vec![Rational::zero(); MAX_DEGREE + 1];
    let mut first = true;
    while cur.peek().is_some() {
        let sign_pos = cur.pos();
        let negative = if cur.eat('+') {
            false
        } else if cur.eat('-') {
            true
        } else if first {
            false
        } else {
            return syntax(sign_pos, format!("expected '+' or '-', found '{}'", cur.peek().unwrap()));
        };
        first = false;

        let term_pos = cur.pos();
        let coef = match cur.digits() {
            Some(num) => {
                let mut lit = num;
                if cur.eat('/') {
                    let den_pos = cur.pos();
                    let Some(den) = cur.digits() else {
                        return syntax(den_pos, "expected denominator digits after '/'");
                    };
                    lit = format!("{lit}/{den}");
                }
                match parse_rational(&lit) {
                    Ok(v) => Some(v),
                    Err(e) => return syntax(term_pos, e.to_string()),
                }
            }
            None => None,
        };
        if coef.is_some() {
            cur.eat('*');
        }

        let exp = if cur.eat('x') {
            if cur.eat('^') {
                let exp_pos = cur.pos();
                let Some(e) = cur.digits() else {
                    return syntax(exp_pos, "expected exponent digits after '^'");
                };
                match e.parse::<usize>() {
                    Ok(e) if e <= MAX_DEGREE => e,
                    _ => return Err(ParseError::UnsupportedDegree(e.parse().unwrap_or(usize::MAX))),
                }
            } else {
                1
            }
        } else if coef.is_none() {
            return match cur.peek() {
                Some(c) => syntax(term_pos, format!("unexpected '{c}'")),
                None => syntax(term_pos, "expected a term"),
            };
        } else {
            0
        };

        let mut c = coef.unwrap_or_else(Rational::one);
        if negative {
            c = -c;
        }
        coeffs[exp] += c;
    }
    Ok(QPoly::new(coeffs))
}

/// Parses `c_n,…,c_0` (highest degree first).
pub fn parse_coeffs(text: &str) -> Result<QPoly, ParseError> {
    let mut out = Vec::new();
    let mut offset = 0;
    for part in text.split(',') {
        let lit = part.trim();
        let pos = offset + part.len() - part.trim_start().len();
        match parse_rational(lit) {
            Ok(v) => out.push(v),
            Err(e) => return syntax(pos, e.to_string()),
        }
        offset += part.len() + 1;
    }
    let poly = QPoly::from_descending(out);
    match poly.degree() {
        Some(d) if d > MAX_DEGREE => Err(ParseError::UnsupportedDegree(d)),
        _ => Ok(poly),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use one_radical::arith::q;

    fn ints(c: &[i64]) -> QPoly {
        QPoly::new(c.iter().map(|&v| q(v, 1)).collect())
    }

    #[test]
    fn examples() {
        assert_eq!(parse_poly("x^3 + 6x - 2").unwrap(), ints(&[-2, 6, 0, 1]));
        assert_eq!(parse_poly("x^4 - 4x^2 - 8x + 2").unwrap(), ints(&[2, -8, -4, 0, 1]));
        assert_eq!(parse_poly("1/2x^2 - x^2").unwrap(), QPoly::new(vec![q(0, 1), q(0, 1), q(-1, 2)]));
    }

    #[test]
    fn whitespace_and_forms() {
        assert_eq!(parse_poly(" x ^ 3+6 x-2 ").unwrap(), ints(&[-2, 6, 0, 1]));
        assert_eq!(parse_poly("-x").unwrap(), ints(&[0, -1]));
        assert_eq!(parse_poly("3*x^2 + 2x^0").unwrap(), ints(&[2, 0, 3]));
        assert_eq!(parse_poly("x - x").unwrap(), QPoly::zero());
        assert_eq!(parse_poly("+5").unwrap(), ints(&[5]));
    }

    #[test]
    fn display_round_trips() {
        for s in ["x^3 + 6x - 2", "-1/2x^2", "x^4 - 10x^2 + 1", "3/7x - 1/3", "-x^4"] {
            let p = parse_poly(s).unwrap();
            assert_eq!(p.to_string(), s);
            assert_eq!(parse_poly(&p.to_string()).unwrap(), p);
        }
    }

    #[test]
    fn errors() {
        assert_eq!(parse_poly("x^5 + 1"), Err(ParseError::UnsupportedDegree(5)));
        assert!(parse_poly("x^5").unwrap_err().to_string().contains("unsupported degree"));
        assert_eq!(parse_poly("x^3 + + 2"), Err(ParseError::Syntax { pos: 6, msg: "unexpected '+'".into() }));
        assert!(matches!(parse_poly("x 2"), Err(ParseError::Syntax { pos: 2, .. })));
        assert!(matches!(parse_poly("1/0x"), Err(ParseError::Syntax { pos: 0, .. })));
        assert!(matches!(parse_poly("2/"), Err(ParseError::Syntax { pos: 2, .. })));
        assert!(matches!(parse_poly("x^"), Err(ParseError::Syntax { pos: 2, .. })));
        assert!(matches!(parse_poly("y"), Err(ParseError::Syntax { pos: 0, .. })));
        assert!(matches!(parse_poly("   "), Err(ParseError::Syntax { .. })));
    }

    #[test]
    fn coeff_lists() {
        assert_eq!(parse_coeffs("1,0,6,-2").unwrap(), ints(&[-2, 6, 0, 1]));
        assert_eq!(parse_coeffs("1, 0, -1/2").unwrap(), QPoly::new(vec![q(-1, 2), q(0, 1), q(1, 1)]));
        assert_eq!(parse_coeffs("1,0,0,0,0,1"), Err(ParseError::UnsupportedDegree(5)));
        assert!(matches!(parse_coeffs("1,a"), Err(ParseError::Syntax { pos: 2, .. })));
    }
}
