//! Parser for univariate polynomial expressions such as
//! `-4(t^2 + 2t - 2)^3(t^2 + 10t - 2)`: integers, one variable, `+ - * ^`,
//! parentheses and juxtaposition.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::poly::PolyQ;
use super::ArithError;

pub fn parse_poly(src: &str, var: char) -> Result<PolyQ, ArithError> {
    let mut p = Parser { s: src.as_bytes(), i: 0, var: var as u8 };
    let e = p.expr()?;
    p.ws();
    if p.i != p.s.len() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    s: &'a [u8],
    i: usize,
    var: u8,
}

impl Parser<'_> {
    fn err(&self, what: &str) -> ArithError {
        ArithError::Parse(format!("{what} at offset {} in {:?}", self.i, String::from_utf8_lossy(self.s)))
    }

    fn ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.i).copied()
    }

    fn expr(&mut self) -> Result<PolyQ, ArithError> {
        let mut acc = PolyQ::zero();
        let mut first = true;
        loop {
            let sign = match self.peek() {
                Some(b'+') => {
                    self.i += 1;
                    1
                }
                Some(b'-') => {
                    self.i += 1;
                    -1
                }
                _ if first => 1,
                _ => return Ok(acc),
            };
            first = false;
            let t = self.term()?;
            acc = if sign < 0 { &acc - &t } else { &acc + &t };
        }
    }

    fn term(&mut self) -> Result<PolyQ, ArithError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.i += 1;
                    acc = &acc * &self.power()?;
                }
                Some(c) if c == b'(' || c == self.var || c.is_ascii_digit() => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<PolyQ, ArithError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.i += 1;
            self.ws();
            let e = self.digits()?;
            let e: u32 = e.try_into().map_err(|_| self.err("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> Result<BigInt, ArithError> {
        let start = self.i;
        while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
            self.i += 1;
        }
        if start == self.i {
            return Err(self.err("expected digits"));
        }
        Ok(std::str::from_utf8(&self.s[start..self.i]).unwrap().parse().unwrap())
    }

    fn atom(&mut self) -> Result<PolyQ, ArithError> {
        match self.peek() {
            Some(b'(') => {
                self.i += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.i += 1;
                Ok(e)
            }
            Some(c) if c == self.var => {
                self.i += 1;
                Ok(PolyQ::x())
            }
            Some(c) if c.is_ascii_digit() => Ok(PolyQ::constant(BigRational::from_integer(self.digits()?))),
            _ => Err(self.err("expected a term")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_products_and_powers() {
        let p = parse_poly("-4(t^2 + 2t - 2)^3(t^2 + 10t - 2)", 't').unwrap();
        assert_eq!(p.deg(), 8);
        assert_eq!(p.lc(), BigRational::from_integer((-4).into()));
        let q = parse_poly("27t^3(8-t^3)^3", 't').unwrap();
        assert_eq!(q, &PolyQ::from_ints(&[0, 0, 0, 27]) * &PolyQ::from_ints(&[8, 0, 0, -1]).pow(3));
        assert_eq!(parse_poly("t*t - 1", 't').unwrap(), PolyQ::from_ints(&[-1, 0, 1]));
        assert!(parse_poly("t^", 't').is_err());
        assert!(parse_poly("(t", 't').is_err());
    }
}
