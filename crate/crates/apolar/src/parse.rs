//! Text grammar for polynomials: terms joined by `+`/`-`, a term being an
//! optional integer or `p/q` rational coefficient followed by
//! `*`-separated powers like `x0^2` or `u3` (exponent 1 implicit).
//! Whitespace is insignificant. `x<k>` is 0-based with k < x_count,
//! `u<k>` is 1-based with 1 <= k <= u_count; the asymmetry is deliberate
//! and preserved. Uppercase `X`/`U` are accepted for operators.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ring::{Monomial, Polynomial, Rat, VariableSplit};

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor {
            src: src.as_bytes(),
            pos: 0,
            line: 1,
            col: 1,
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        if c == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.bump();
        }
    }

    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            col: self.col,
            message: message.into(),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        if self.pos == start {
            return Err(self.err("expected an integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn usize_int(&mut self) -> Result<usize> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        if self.pos == start {
            return Err(self.err("expected a variable index"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        s.parse()
            .map_err(|_| self.err("variable index out of range"))
    }
}

/// Parse a polynomial in the text grammar over the declared split.
pub fn parse_polynomial(text: &str, split: &VariableSplit) -> Result<Polynomial> {
    let mut cur = Cursor::new(text);
    let mut poly = Polynomial::zero(*split);
    cur.skip_ws();
    if cur.peek().is_none() {
        return Err(cur.err("empty input"));
    }
    let mut first = true;
    loop {
        cur.skip_ws();
        let sign = match cur.peek() {
            Some(b'+') => {
                cur.bump();
                1
            }
            Some(b'-') => {
                cur.bump();
                -1
            }
            None if !first => break,
            None => return Err(cur.err("expected a term")),
            Some(_) if first => 1,
            Some(c) => {
                return Err(cur.err(format!(
                    "expected '+' or '-' between terms, found '{}'",
                    c as char
                )))
            }
        };
        first = false;
        let (mono, coeff) = parse_term(&mut cur, split)?;
        let coeff = if sign < 0 { -coeff } else { coeff };
        poly.add_term(mono, coeff);
        cur.skip_ws();
        if cur.peek().is_none() {
            break;
        }
    }
    Ok(poly)
}

fn parse_term(cur: &mut Cursor, split: &VariableSplit) -> Result<(Monomial, Rat)> {
    cur.skip_ws();
    let mut coeff = Rat::from_integer(BigInt::from(1));
    let mut exps = vec![0u32; split.total()];
    let mut saw_factor = false;

    // optional leading coefficient
    if matches!(cur.peek(), Some(c) if c.is_ascii_digit()) {
        let num = cur.integer()?;
        cur.skip_ws();
        if cur.peek() == Some(b'/') {
            cur.bump();
            cur.skip_ws();
            let den = cur.integer()?;
            if den.is_zero() {
                return Err(cur.err("zero denominator"));
            }
            coeff = Rat::new(num, den);
        } else {
            coeff = Rat::from_integer(num);
        }
        saw_factor = true;
        cur.skip_ws();
        if cur.peek() == Some(b'*') {
            cur.bump();
        } else {
            return Ok((Monomial::new(split, exps).unwrap(), coeff));
        }
    }

    loop {
        cur.skip_ws();
        let c = match cur.peek() {
            Some(c) => c,
            None => {
                if saw_factor {
                    break;
                }
                return Err(cur.err("expected a variable"));
            }
        };
        let var = match c {
            b'x' | b'X' => {
                cur.bump();
                let k = cur.usize_int()?;
                if k >= split.x_count() {
                    return Err(cur.err(format!(
                        "unknown variable x{} (x_count = {})",
                        k,
                        split.x_count()
                    )));
                }
                split.x_var(k)
            }
            b'u' | b'U' => {
                cur.bump();
                let k = cur.usize_int()?;
                if k < 1 || k > split.u_count() {
                    return Err(cur.err(format!(
                        "unknown variable u{} (u_count = {})",
                        k,
                        split.u_count()
                    )));
                }
                split.u_var(k)
            }
            _ => {
                return Err(cur.err(format!("unknown variable '{}'", c as char)));
            }
        };
        cur.skip_ws();
        let mut e: u32 = 1;
        if cur.peek() == Some(b'^') {
            cur.bump();
            cur.skip_ws();
            let n = cur.usize_int()?;
            e = u32::try_from(n).map_err(|_| cur.err("malformed exponent"))?;
        }
        exps[var] += e;
        saw_factor = true;
        cur.skip_ws();
        if cur.peek() == Some(b'*') {
            cur.bump();
        } else {
            break;
        }
    }
    Ok((Monomial::new(split, exps).unwrap(), coeff))
}
