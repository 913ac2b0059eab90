//! Recursive-descent parser for the set-spec mini-language:
//!
//! ```text
//! spec := "nat" | "empty" | "pow2" | "finite:" ints | "periodic:" bits ";" bits
//!       | "complement(" spec ")" | "shift(" uint "," spec ")"
//! ```
//!
//! Whitespace between tokens is ignored.

use super::IntegerSet;
use crate::error::{Error, Result};

pub(super) fn parse(text: &str) -> Result<IntegerSet> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let set = p.spec()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("trailing input"));
    }
    Ok(set)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            pos: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(token.as_bytes()) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{token}`")))
        }
    }

    fn spec(&mut self) -> Result<IntegerSet> {
        if self.eat("nat") {
            Ok(IntegerSet::nat())
        } else if self.eat("empty") {
            Ok(IntegerSet::empty())
        } else if self.eat("pow2") {
            Ok(IntegerSet::powers_of_two())
        } else if self.eat("finite:") {
            let start = self.pos;
            let ints = self.ints()?;
            IntegerSet::finite(ints).map_err(|e| match e {
                Error::NotIncreasing { prev, next } => Error::Syntax {
                    pos: start,
                    message: format!("finite list is not strictly increasing: {prev} then {next}"),
                },
                other => other,
            })
        } else if self.eat("periodic:") {
            let preperiod = self.bits();
            self.expect(";")?;
            let at = self.pos;
            let period = self.bits();
            if period.is_empty() {
                self.pos = at;
                return Err(self.error("periodic set needs a nonempty period"));
            }
            IntegerSet::periodic(preperiod, period)
        } else if self.eat("complement(") {
            let inner = self.spec()?;
            self.expect(")")?;
            Ok(inner.complement())
        } else if self.eat("shift(") {
            let at = self.pos;
            let offset = self.uint()?;
            self.expect(",")?;
            let inner = self.spec()?;
            self.expect(")")?;
            inner.shift_down(offset).map_err(|e| Error::Syntax {
                pos: at,
                message: e.to_string(),
            })
        } else {
            Err(self
                .error("expected one of nat, empty, pow2, finite:, periodic:, complement(, shift("))
        }
    }

    fn ints(&mut self) -> Result<Vec<u64>> {
        let mut out = Vec::new();
        if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
            return Ok(out);
        }
        out.push(self.uint()?);
        loop {
            let save = self.pos;
            if self.eat(",") && self.peek().is_some_and(|c| c.is_ascii_digit()) {
                out.push(self.uint()?);
            } else {
                // the comma belongs to an enclosing construct
                self.pos = save;
                return Ok(out);
            }
        }
    }

    fn uint(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an unsigned integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        digits.parse().map_err(|_| Error::Syntax {
            pos: start,
            message: format!("integer `{digits}` out of range"),
        })
    }

    fn bits(&mut self) -> Vec<bool> {
        let mut out = Vec::new();
        while let Some(c @ (b'0' | b'1')) = self.peek() {
            out.push(c == b'1');
            self.pos += 1;
        }
        out
    }
}
