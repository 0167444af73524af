//! Expression parser for ring and loop elements.
//!
//! Grammar:
//!   expr   := term (('+'|'-') term)*
//!   term   := factor (('*'|'/') factor)*
//!   factor := '-' factor | postfix
//!   postfix:= primary ('^' int | '\'')*
//!   primary:= integer | name | '(' expr ')' | '[' expr ',' expr ']'
//!
//! Names: t, x, y, z, the six generators x12 x23 x31 x01 x02 x03 (and
//! reversed index pairs), and sequence elements a<n>, b<n>, X<n>, Y<n>,
//! Z<n>. The tensor sign in rendered output is read as multiplication,
//! so rendering round-trips through the parser.

use std::fmt;

use tetrabox_core::loop_alg::{bracket, std_gen, GeneratorId, LoopElem};
use tetrabox_core::onsager::{seq_ab, seq_xyz, SeqKind, SeqMode, XyzKind, XyzMode};
use tetrabox_core::rational::int;
use tetrabox_core::ring::RingElem;

#[derive(Debug)]
pub enum ParseError {
    Syntax { pos: usize, msg: String },
    Domain(String),
    Linearity(String),
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Syntax { pos, msg } => write!(f, "syntax error at position {pos}: {msg}"),
            ParseError::Domain(m) => write!(f, "domain error: {m}"),
            ParseError::Linearity(m) => write!(f, "linearity error: {m}"),
        }
    }
}

impl std::error::Error for ParseError {}

/// Either a coefficient in A or a loop element (linear in x, y, z).
#[derive(Clone, Debug)]
pub enum Value {
    Scalar(RingElem),
    Loop(LoopElem),
}

impl Value {
    pub fn into_loop(self) -> Result<LoopElem, ParseError> {
        match self {
            Value::Loop(u) => Ok(u),
            Value::Scalar(_) => Err(ParseError::Linearity(
                "expected a loop element (a combination of x, y, z), got a scalar".into(),
            )),
        }
    }

    fn add(self, rhs: Value) -> Result<Value, ParseError> {
        match (self, rhs) {
            (Value::Scalar(a), Value::Scalar(b)) => Ok(Value::Scalar(&a + &b)),
            (Value::Loop(a), Value::Loop(b)) => Ok(Value::Loop(&a + &b)),
            _ => Err(ParseError::Linearity(
                "cannot add a scalar and a loop element".into(),
            )),
        }
    }

    fn neg(self) -> Value {
        match self {
            Value::Scalar(a) => Value::Scalar(-&a),
            Value::Loop(a) => Value::Loop(-&a),
        }
    }

    fn mul(self, rhs: Value) -> Result<Value, ParseError> {
        match (self, rhs) {
            (Value::Scalar(a), Value::Scalar(b)) => Ok(Value::Scalar(&a * &b)),
            (Value::Scalar(a), Value::Loop(u)) | (Value::Loop(u), Value::Scalar(a)) => {
                Ok(Value::Loop(u.mul_ring(&a)))
            }
            (Value::Loop(_), Value::Loop(_)) => Err(ParseError::Linearity(
                "product of two loop elements is not linear in x, y, z (use [ , ] for the bracket)"
                    .into(),
            )),
        }
    }

    fn div(self, rhs: Value) -> Result<Value, ParseError> {
        let inv = match rhs {
            Value::Scalar(b) => b.inverse().ok_or_else(|| {
                ParseError::Domain(
                    "denominator is not a unit of F[t, 1/t, 1/(t-1)] (must be c*t^a*(t-1)^b)"
                        .into(),
                )
            })?,
            Value::Loop(_) => {
                return Err(ParseError::Linearity("cannot divide by a loop element".into()))
            }
        };
        self.mul(Value::Scalar(inv))
    }

    fn pow(self, k: i64) -> Result<Value, ParseError> {
        match self {
            Value::Scalar(a) => {
                if k >= 0 {
                    Ok(Value::Scalar(a.pow(k as u32)))
                } else {
                    let inv = a.inverse().ok_or_else(|| {
                        ParseError::Domain(
                            "negative power of a non-unit (must be c*t^a*(t-1)^b)".into(),
                        )
                    })?;
                    Ok(Value::Scalar(inv.pow((-k) as u32)))
                }
            }
            Value::Loop(_) => Err(ParseError::Linearity(
                "powers of loop elements are not linear in x, y, z".into(),
            )),
        }
    }

    fn prime(self) -> Value {
        match self {
            Value::Scalar(a) => Value::Scalar(a.prime(1)),
            Value::Loop(u) => Value::Loop(u.prime(1)),
        }
    }
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    src: &'a str,
}

pub fn parse(input: &str) -> Result<Value, ParseError> {
    let mut p = Parser {
        chars: input.chars().collect(),
        pos: 0,
        src: input,
    };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.err("unexpected trailing input"));
    }
    let _ = p.src;
    Ok(v)
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> ParseError {
        ParseError::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(&format!("expected '{c}'")))
        }
    }

    fn expr(&mut self) -> Result<Value, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(self.term()?)?;
            } else if self.eat('-') {
                acc = acc.add(self.term()?.neg())?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Value, ParseError> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            if self.eat('*') || self.eat('⊗') {
                acc = acc.mul(self.factor()?)?;
            } else if self.eat('/') {
                acc = acc.div(self.factor()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Value, ParseError> {
        if self.eat('-') {
            return Ok(self.factor()?.neg());
        }
        self.postfix()
    }

    fn postfix(&mut self) -> Result<Value, ParseError> {
        let mut v = self.primary()?;
        loop {
            // '^' and '\'' bind tighter than everything else
            if self.eat('^') {
                let k = self.integer()?;
                v = v.pow(k)?;
            } else if self.eat('\'') {
                v = v.prime();
            } else {
                return Ok(v);
            }
        }
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let neg = self.eat('-');
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        let n: i64 = s.parse().map_err(|_| self.err("integer out of range"))?;
        Ok(if neg { -n } else { n })
    }

    fn primary(&mut self) -> Result<Value, ParseError> {
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(')')?;
                Ok(v)
            }
            Some('[') => {
                self.pos += 1;
                let a = self.expr()?.into_loop()?;
                self.expect(',')?;
                let b = self.expr()?.into_loop()?;
                self.expect(']')?;
                Ok(Value::Loop(bracket(&a, &b)))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(Value::Scalar(RingElem::constant(int(n))))
            }
            Some(c) if c.is_ascii_alphabetic() => self.name(),
            _ => Err(self.err("expected a value")),
        }
    }

    fn name(&mut self) -> Result<Value, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_alphanumeric()) {
            self.pos += 1;
        }
        let name: String = self.chars[start..self.pos].iter().collect();
        let seq_index = |digits: &str| -> Result<u32, ParseError> {
            digits.parse().map_err(|_| ParseError::Syntax {
                pos: start,
                msg: format!("bad sequence index in '{name}'"),
            })
        };
        match name.as_str() {
            "t" => Ok(Value::Scalar(RingElem::t())),
            "x" => Ok(Value::Loop(LoopElem::x(RingElem::one()))),
            "y" => Ok(Value::Loop(LoopElem::y(RingElem::one()))),
            "z" => Ok(Value::Loop(LoopElem::z(RingElem::one()))),
            _ => {
                let (head, digits) = name.split_at(1);
                let gen_pair = || -> Option<GeneratorId> {
                    let b: Vec<u32> = digits.chars().filter_map(|c| c.to_digit(10)).collect();
                    if digits.len() == 2 && b.len() == 2 {
                        GeneratorId::new(b[0] as u8, b[1] as u8).ok()
                    } else {
                        None
                    }
                };
                match head {
                    "x" if digits.len() == 2 => gen_pair()
                        .map(|id| Value::Loop(std_gen(id)))
                        .ok_or(ParseError::Syntax {
                            pos: start,
                            msg: format!("unknown generator '{name}'"),
                        }),
                    "a" => Ok(Value::Loop(seq_ab(SeqKind::A, seq_index(digits)?, SeqMode::Closed, 0))),
                    "b" => Ok(Value::Loop(seq_ab(SeqKind::B, seq_index(digits)?, SeqMode::Closed, 0))),
                    "X" => Ok(Value::Loop(seq_xyz(XyzKind::X, seq_index(digits)?, XyzMode::Closed, 0))),
                    "Y" => Ok(Value::Loop(seq_xyz(XyzKind::Y, seq_index(digits)?, XyzMode::Closed, 0))),
                    "Z" => Ok(Value::Loop(seq_xyz(XyzKind::Z, seq_index(digits)?, XyzMode::Closed, 0))),
                    _ => Err(ParseError::Syntax {
                        pos: start,
                        msg: format!("unknown name '{name}'"),
                    }),
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use tetrabox_core::poly::Poly;

    fn loop_of(s: &str) -> LoopElem {
        parse(s).unwrap().into_loop().unwrap()
    }

    fn scalar_of(s: &str) -> RingElem {
        match parse(s).unwrap() {
            Value::Scalar(a) => a,
            v => panic!("expected scalar, got {v:?}"),
        }
    }

    #[test]
    fn loop_expression() {
        let u = loop_of("x*(2*t-1) + y*t");
        assert_eq!(
            u,
            LoopElem::new(
                RingElem::from_poly(Poly::from_ints(&[-1, 2])),
                RingElem::t(),
                RingElem::zero()
            )
        );
    }

    #[test]
    fn bracket_of_generators() {
        let u = loop_of("[x12, x03]");
        assert_eq!(
            u,
            LoopElem::new(
                RingElem::constant(int(2)),
                RingElem::t().scale(&int(2)),
                RingElem::from_poly(Poly::from_ints(&[2, -2])),
            )
        );
    }

    #[test]
    fn primes_and_powers() {
        assert_eq!(scalar_of("t'"), RingElem::t_prime());
        assert_eq!(scalar_of("t''"), RingElem::t_prime2());
        assert_eq!(scalar_of("t'''"), RingElem::t());
        assert_eq!(scalar_of("t^-2"), RingElem::from_signed(Poly::one(), -2, 0));
        // precedence: -t^2 is -(t^2)
        assert_eq!(scalar_of("-t^2"), RingElem::from_poly(Poly::from_ints(&[0, 0, -1])));
        // ' on a parenthesized loop element
        assert_eq!(loop_of("(x)'"), LoopElem::y(RingElem::one()));
    }

    #[test]
    fn domain_and_linearity_errors() {
        assert!(matches!(parse("x / (t^2 - 4)"), Err(ParseError::Domain(_))));
        assert!(matches!(parse("x * y"), Err(ParseError::Linearity(_))));
        assert!(matches!(parse("x + 1"), Err(ParseError::Linearity(_))));
        assert!(matches!(parse("t +"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse("x44"), Err(ParseError::Syntax { .. })));
    }

    #[test]
    fn division_in_ring() {
        assert_eq!(
            scalar_of("1 / (t * (t - 1))"),
            RingElem::from_signed(Poly::one(), -1, -1)
        );
        assert_eq!(scalar_of("3 / 4"), RingElem::constant(tetrabox_core::rational::rat(3, 4)));
    }

    #[test]
    fn named_sequences() {
        assert_eq!(loop_of("a0"), loop_of("x12"));
        assert_eq!(loop_of("b0"), loop_of("x03"));
        assert_eq!(loop_of("X0"), loop_of("x12"));
        assert_eq!(loop_of("x21"), loop_of("-x12"));
    }

    #[test]
    fn render_roundtrip() {
        for s in ["[x12, x03]", "a4", "b3", "X2", "Y1", "Z2", "x*t^-1 + z*(t-1)^-2"] {
            let u = loop_of(s);
            let rendered = u.to_string();
            assert_eq!(loop_of(&rendered), u, "round trip of {rendered}");
        }
    }
}
