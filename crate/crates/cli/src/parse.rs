//! Expression grammar:
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := factor (("*" | "/") factor)*
//! factor := "-" factor | atom ["^" exponent] | "(" expr ")"
//! atom   := integer | "w" | "eps"
//! exponent := "(" ["-"] integer ["/" integer] ")" | ["-"] integer
//! ```
//!
//! `^` binds tighter than unary minus, which binds tighter than `*` and
//! `/`. Powers are only defined on the generators `w` and `eps`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use ultrafield::{Hyper, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("exponent at {pos} is not a rational literal")]
    ExponentNotRational { pos: usize },
    #[error("power at {pos}: only w and eps may be raised to a power")]
    PowerBaseNotOmega { pos: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("division by zero at {pos}")]
    DivisionByZero { pos: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    Omega,
    Eps,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Ast {
    Int(BigInt),
    Gen(Generator),
    Neg(Box<Ast>),
    /// `pos` is the operator's byte offset.
    Bin {
        op: BinOp,
        pos: usize,
        lhs: Box<Ast>,
        rhs: Box<Ast>,
    },
    Pow {
        base: Generator,
        exp: Rational,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            out.push((start, Tok::Int(text[start..i].parse().expect("digits"))));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push((start, Tok::Ident(text[start..i].to_string())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(ParseError::Syntax {
                pos: i,
                msg: format!("unexpected character {c:?}"),
            });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(ParseError::Syntax {
                pos: self.pos(),
                msg: format!("expected '{c}'"),
            })
        }
    }

    fn expr(&mut self) -> Result<Ast, ParseError> {
        let mut lhs = self.term()?;
        loop {
            let pos = self.pos();
            let op = if self.eat('+') {
                BinOp::Add
            } else if self.eat('-') {
                BinOp::Sub
            } else {
                return Ok(lhs);
            };
            let rhs = self.term()?;
            lhs = Ast::Bin {
                op,
                pos,
                lhs: Box::new(lhs),
                rhs: Box::new(rhs),
            };
        }
    }

    fn term(&mut self) -> Result<Ast, ParseError> {
        let mut lhs = self.factor()?;
        loop {
            let pos = self.pos();
            let op = if self.eat('*') {
                BinOp::Mul
            } else if self.eat('/') {
                BinOp::Div
            } else {
                return Ok(lhs);
            };
            let rhs = self.factor()?;
            lhs = Ast::Bin {
                op,
                pos,
                lhs: Box::new(lhs),
                rhs: Box::new(rhs),
            };
        }
    }

    fn factor(&mut self) -> Result<Ast, ParseError> {
        if self.eat('-') {
            return Ok(Ast::Neg(Box::new(self.factor()?)));
        }
        let start = self.pos();
        let atom = match self.peek().cloned() {
            Some(Tok::Sym('(')) => {
                self.at += 1;
                let inner = self.expr()?;
                self.expect(')')?;
                inner
            }
            Some(Tok::Int(n)) => {
                self.at += 1;
                Ast::Int(n)
            }
            Some(Tok::Ident(name)) => {
                self.at += 1;
                match name.as_str() {
                    "w" => Ast::Gen(Generator::Omega),
                    "eps" => Ast::Gen(Generator::Eps),
                    _ => {
                        return Err(ParseError::Syntax {
                            pos: start,
                            msg: format!("unknown symbol {name:?}"),
                        })
                    }
                }
            }
            Some(t) => {
                return Err(ParseError::Syntax {
                    pos: start,
                    msg: format!("unexpected {t:?}"),
                });
            }
            None => {
                return Err(ParseError::Syntax {
                    pos: start,
                    msg: "unexpected end of input".into(),
                })
            }
        };
        if self.peek() != Some(&Tok::Sym('^')) {
            return Ok(atom);
        }
        let caret = self.pos();
        self.at += 1;
        let base = match atom {
            Ast::Gen(g) => g,
            _ => return Err(ParseError::PowerBaseNotOmega { pos: caret }),
        };
        let exp = self.exponent()?;
        Ok(Ast::Pow { base, exp })
    }

    fn exponent(&mut self) -> Result<Rational, ParseError> {
        let pos = self.pos();
        let not_rational = || ParseError::ExponentNotRational { pos };
        let paren = self.eat('(');
        let negative = self.eat('-');
        let read_int = |p: &mut Parser| match p.peek().cloned() {
            Some(Tok::Int(n)) => {
                p.at += 1;
                Ok(n)
            }
            _ => Err(not_rational()),
        };
        let num = read_int(self)?;
        let mut den = BigInt::one();
        if paren {
            if self.eat('/') {
                den = read_int(self)?;
                if den.is_zero() {
                    return Err(not_rational());
                }
            }
            if !self.eat(')') {
                return Err(not_rational());
            }
        }
        let r = Rational::new(num, den);
        Ok(if negative { -r } else { r })
    }
}

pub fn parse(text: &str) -> Result<Ast, ParseError> {
    let mut p = Parser {
        toks: lex(text)?,
        at: 0,
        end: text.len(),
    };
    let ast = p.expr()?;
    if p.at != p.toks.len() {
        return Err(ParseError::Syntax {
            pos: p.pos(),
            msg: "trailing input".into(),
        });
    }
    Ok(ast)
}

fn generator(g: Generator) -> Hyper {
    match g {
        Generator::Omega => Hyper::omega(),
        Generator::Eps => Hyper::eps(),
    }
}

pub fn eval(ast: &Ast) -> Result<Hyper, EvalError> {
    Ok(match ast {
        Ast::Int(n) => Hyper::from_rational(Rational::from_integer(n.clone())),
        Ast::Gen(g) => generator(*g),
        Ast::Neg(inner) => -eval(inner)?,
        Ast::Pow { base, exp } => {
            let e = match base {
                Generator::Omega => exp.clone(),
                Generator::Eps => -exp.clone(),
            };
            Hyper::monomial(e, Rational::one())
        }
        Ast::Bin { op, pos, lhs, rhs } => {
            let (a, b) = (eval(lhs)?, eval(rhs)?);
            match op {
                BinOp::Add => a + b,
                BinOp::Sub => a - b,
                BinOp::Mul => a * b,
                BinOp::Div => a
                    .div(&b)
                    .map_err(|_| EvalError::DivisionByZero { pos: *pos })?,
            }
        }
    })
}
