//! Slope specifications: `spec := term ("," term)*`, `term := slope "^" mult`,
//! `slope := int | int "/" posint`, `mult := posint`.
//!
//! `mult` is the total rank carried by the slope, so `1/2^4` is `M(1,2)^{⊕2}`.

use crate::error::{Result, SlopeError};
use crate::exactnum::Fraction;
use crate::slopecalc::SlopeType;

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("'{}'", b as char)))
        }
    }

    fn unexpected(&self, wanted: &str) -> SlopeError {
        match self.peek() {
            Some(c) => SlopeError::parse(
                self.pos,
                format!("expected {wanted}, found '{}'", c as char),
            ),
            None => SlopeError::parse(self.pos, format!("expected {wanted}, found end of input")),
        }
    }

    fn digits(&mut self) -> Result<i64> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.unexpected("a digit"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| SlopeError::parse(start, "number too large"))
    }

    fn int(&mut self) -> Result<i64> {
        let neg = self.eat(b'-');
        let v = self.digits()?;
        Ok(if neg { -v } else { v })
    }
}

/// Parses a slope specification into its canonical slope type.
pub fn parse_slopes(text: &str) -> Result<SlopeType> {
    let mut cur = Cursor {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut raw = Vec::new();
    loop {
        let slope_pos = cur.pos;
        let num = cur.int()?;
        let den = if cur.eat(b'/') {
            let den_pos = cur.pos;
            let d = cur.digits()?;
            if d == 0 {
                return Err(SlopeError::parse(den_pos, "zero denominator"));
            }
            d
        } else {
            1
        };
        let slope =
            Fraction::new(num, den).map_err(|e| SlopeError::parse(slope_pos, e.to_string()))?;
        cur.expect(b'^')?;
        let mult_pos = cur.pos;
        if cur.peek() == Some(b'-') {
            return Err(SlopeError::parse(mult_pos, "multiplicity must be positive"));
        }
        let mult = cur.digits()?;
        if mult == 0 {
            return Err(SlopeError::parse(mult_pos, "multiplicity must be positive"));
        }
        if mult % slope.denom() != 0 {
            return Err(SlopeError::parse(
                mult_pos,
                format!(
                    "slope {} needs multiplicity divisible by {}",
                    display_slope(slope),
                    slope.denom()
                ),
            ));
        }
        raw.push((slope.numer(), slope.denom(), (mult / slope.denom()) as u64));
        if cur.peek().is_none() {
            break;
        }
        cur.expect(b',')?;
    }
    SlopeType::normalize(&raw)
}

fn display_slope(s: Fraction) -> String {
    if s.is_integer() {
        s.numer().to_string()
    } else {
        s.to_string()
    }
}
