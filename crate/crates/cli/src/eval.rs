//! A small expression language over a model.
//!
//! ```text
//! program  := stmt (';' stmt)*
//! stmt     := 'let' name '=' expr | expr
//! expr     := meet ('|' meet)*          join
//! meet     := product ('&' product)*    meet
//! product  := postfix ('*' postfix)*    multiplication
//! postfix  := atom ('^-1')*
//! atom     := literal | name | name '(' expr (',' expr)* ')' | '(' expr ')'
//! ```
//!
//! Functions: `phi`, `sigma`, `dom`, `ran`, `comp`, `inv`, `leq(x, y)`,
//! `unit?(x)`, `idempotent?(x)`.

use std::collections::HashMap;

use tarski_core::algebra::BooleanAlgebra;
use tarski_core::inverse::{Calculus, Idem};

use crate::output::CliError;
use crate::syntax::{Literal, Syntax};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Literal(String),
    Name(String),
    Let,
    Assign,
    Join,
    Meet,
    Times,
    Inverse,
    Open,
    Close,
    Comma,
    End,
}

fn parse_error(position: usize, message: impl std::fmt::Display) -> CliError {
    CliError::usage(format!("parse error at position {position}: {message}"))
}

fn cycle_group_len(rest: &str) -> Option<usize> {
    let close = rest.find(')')?;
    let inner = &rest[1..close];
    let numbers: Vec<&str> = inner.split_whitespace().collect();
    let ok = numbers.len() >= 2 && numbers.iter().all(|t| t.chars().all(|c| c.is_ascii_digit()));
    ok.then_some(close + 1)
}

fn closing(text: &str, start: usize, close: char) -> Result<usize, CliError> {
    text[start..]
        .find(close)
        .map(|i| start + i + close.len_utf8())
        .ok_or_else(|| parse_error(start, format!("missing '{close}'")))
}

fn angle_end(text: &str, start: usize) -> Result<usize, CliError> {
    let mut depth = 0i32;
    let mut prev = '<';
    for (i, ch) in text[start + 1..].char_indices() {
        match ch {
            '{' | '[' | '(' => depth += 1,
            '}' | ']' | ')' => depth -= 1,
            '>' if depth == 0 && prev != '-' => return Ok(start + 1 + i + 1),
            _ => {}
        }
        prev = ch;
    }
    Err(parse_error(start, "missing '>'"))
}

fn lex(text: &str, offset: usize, cycles: bool) -> Result<Vec<(Tok, usize)>, CliError> {
    let mut toks = Vec::new();
    let mut i = 0;
    while i < text.len() {
        let rest = &text[i..];
        let ch = rest.chars().next().expect("nonempty");
        let at = offset + i;
        if ch.is_whitespace() {
            i += ch.len_utf8();
            continue;
        }
        let (tok, len) = match ch {
            '{' => {
                let end = closing(text, i, '}').map_err(|_| parse_error(at, "missing '}'"))?;
                (Tok::Literal(text[i..end].to_string()), end - i)
            }
            '[' => {
                let end = closing(text, i, ']').map_err(|_| parse_error(at, "missing ']'"))?;
                (Tok::Literal(text[i..end].to_string()), end - i)
            }
            '<' => {
                let end = angle_end(text, i).map_err(|_| parse_error(at, "missing '>'"))?;
                (Tok::Literal(text[i..end].to_string()), end - i)
            }
            '(' if cycles && cycle_group_len(rest).is_some() => {
                let mut len = 0;
                while let Some(n) = cycle_group_len(&rest[len..]) {
                    len += n;
                    if !rest[len..].starts_with('(') {
                        break;
                    }
                }
                (Tok::Literal(rest[..len].to_string()), len)
            }
            '(' => (Tok::Open, 1),
            ')' => (Tok::Close, 1),
            ',' => (Tok::Comma, 1),
            '|' => (Tok::Join, 1),
            '&' => (Tok::Meet, 1),
            '*' => (Tok::Times, 1),
            '=' => (Tok::Assign, 1),
            '^' if rest.starts_with("^-1") => (Tok::Inverse, 3),
            c if c.is_ascii_digit() => {
                let len = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
                (Tok::Literal(rest[..len].to_string()), len)
            }
            c if c.is_alphabetic() || c == '_' => {
                let mut len = rest.find(|c: char| !c.is_alphanumeric() && c != '_').unwrap_or(rest.len());
                if rest[len..].starts_with('?') {
                    len += 1;
                }
                let word = &rest[..len];
                (if word == "let" { Tok::Let } else { Tok::Name(word.to_string()) }, len)
            }
            other => return Err(parse_error(at, format!("unexpected '{other}'"))),
        };
        toks.push((tok, at));
        i += len;
    }
    toks.push((Tok::End, offset + text.len()));
    Ok(toks)
}

#[derive(Debug, Clone)]
enum Expr {
    Literal(String, usize),
    Var(String, usize),
    Call(String, Vec<Expr>, usize),
    Join(Box<Expr>, Box<Expr>),
    Meet(Box<Expr>, Box<Expr>),
    Times(Box<Expr>, Box<Expr>),
    Inverse(Box<Expr>),
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn position(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let tok = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        tok
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), CliError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(parse_error(self.position(), format!("expected {what}")))
        }
    }

    fn binary(
        &mut self,
        op: Tok,
        next: fn(&mut Self) -> Result<Expr, CliError>,
        build: fn(Box<Expr>, Box<Expr>) -> Expr,
    ) -> Result<Expr, CliError> {
        let mut left = next(self)?;
        while *self.peek() == op {
            self.bump();
            let right = next(self)?;
            left = build(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn expr(&mut self) -> Result<Expr, CliError> {
        self.binary(Tok::Join, Self::meet, Expr::Join)
    }

    fn meet(&mut self) -> Result<Expr, CliError> {
        self.binary(Tok::Meet, Self::product, Expr::Meet)
    }

    fn product(&mut self) -> Result<Expr, CliError> {
        self.binary(Tok::Times, Self::postfix, Expr::Times)
    }

    fn postfix(&mut self) -> Result<Expr, CliError> {
        let mut e = self.atom()?;
        while *self.peek() == Tok::Inverse {
            self.bump();
            e = Expr::Inverse(Box::new(e));
        }
        Ok(e)
    }

    fn atom(&mut self) -> Result<Expr, CliError> {
        let (tok, at) = self.bump();
        match tok {
            Tok::Literal(text) => Ok(Expr::Literal(text, at)),
            Tok::Name(name) if *self.peek() == Tok::Open => {
                self.bump();
                let mut args = vec![self.expr()?];
                while *self.peek() == Tok::Comma {
                    self.bump();
                    args.push(self.expr()?);
                }
                self.expect(Tok::Close, "')'")?;
                Ok(Expr::Call(name, args, at))
            }
            Tok::Name(name) => Ok(Expr::Var(name, at)),
            Tok::Open => {
                let e = self.expr()?;
                self.expect(Tok::Close, "')'")?;
                Ok(e)
            }
            Tok::End => Err(parse_error(at, "unexpected end of input")),
            _ => Err(parse_error(at, "expected an expression")),
        }
    }
}

/// A value of the expression language.
pub enum Value<M: Syntax> {
    Elem(M::Elem),
    Idem(Idem<M>),
    Bool(bool),
}

impl<M: Syntax> Clone for Value<M> {
    fn clone(&self) -> Self {
        match self {
            Value::Elem(s) => Value::Elem(s.clone()),
            Value::Idem(e) => Value::Idem(e.clone()),
            Value::Bool(b) => Value::Bool(*b),
        }
    }
}

impl<M: Syntax> Value<M> {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Elem(_) => "element",
            Value::Idem(_) => "idempotent",
            Value::Bool(_) => "bool",
        }
    }

    pub fn show(&self, model: &M) -> String {
        match self {
            Value::Elem(s) => model.show_element(s),
            Value::Idem(e) => model.show_idempotent(e),
            Value::Bool(b) => b.to_string(),
        }
    }
}

/// One evaluated statement.
pub struct Outcome<M: Syntax> {
    pub binding: Option<String>,
    pub value: Value<M>,
}

pub struct Evaluator<'m, M: Syntax> {
    model: &'m M,
    env: HashMap<String, Value<M>>,
}

impl<'m, M: Syntax> Evaluator<'m, M> {
    pub fn new(model: &'m M) -> Self {
        Evaluator { model, env: HashMap::new() }
    }

    /// Evaluates `;`-separated statements in order.
    pub fn run(&mut self, program: &str) -> Result<Vec<Outcome<M>>, CliError> {
        let mut out = Vec::new();
        let mut offset = 0;
        for stmt in program.split(';') {
            let start = offset;
            offset += stmt.len() + 1;
            if stmt.trim().is_empty() {
                continue;
            }
            out.push(self.statement(stmt, start)?);
        }
        Ok(out)
    }

    fn statement(&mut self, text: &str, offset: usize) -> Result<Outcome<M>, CliError> {
        let toks = lex(text, offset, M::CYCLES)?;
        let mut parser = Parser { toks, at: 0 };
        let binding = if *parser.peek() == Tok::Let {
            parser.bump();
            let (tok, at) = parser.bump();
            let Tok::Name(name) = tok else {
                return Err(parse_error(at, "expected a name after 'let'"));
            };
            parser.expect(Tok::Assign, "'='")?;
            Some(name)
        } else {
            None
        };
        let expr = parser.expr()?;
        if *parser.peek() != Tok::End {
            return Err(parse_error(parser.position(), "unexpected trailing input"));
        }
        let value = self.eval(&expr)?;
        if let Some(name) = &binding {
            self.env.insert(name.clone(), value.clone());
        }
        Ok(Outcome { binding, value })
    }

    fn element(&self, v: Value<M>, at: usize) -> Result<M::Elem, CliError> {
        match v {
            Value::Elem(s) => Ok(s),
            Value::Idem(e) => Ok(self.model.embed(&e)),
            Value::Bool(_) => Err(parse_error(at, "expected an element, found a bool")),
        }
    }

    fn eval(&self, expr: &Expr) -> Result<Value<M>, CliError> {
        let m = self.model;
        let alg = m.algebra();
        Ok(match expr {
            Expr::Literal(text, at) => match m.parse_literal(text).map_err(|e| parse_error(*at, e))? {
                Literal::Element(s) => Value::Elem(s),
                Literal::Idempotent(e) => Value::Idem(e),
            },
            Expr::Var(name, at) => {
                self.env.get(name).cloned().ok_or_else(|| parse_error(*at, format!("unbound name '{name}'")))?
            }
            Expr::Inverse(x) => match self.eval(x)? {
                Value::Elem(s) => Value::Elem(m.inv(&s)),
                Value::Bool(_) => return Err(CliError::usage("cannot invert a bool")),
                idem => idem,
            },
            Expr::Times(a, b) => match (self.eval(a)?, self.eval(b)?) {
                (Value::Idem(x), Value::Idem(y)) => Value::Idem(alg.meet(&x, &y)),
                (x, y) => Value::Elem(m.mul(&self.element(x, 0)?, &self.element(y, 0)?)),
            },
            Expr::Meet(a, b) => match (self.eval(a)?, self.eval(b)?) {
                (Value::Idem(x), Value::Idem(y)) => Value::Idem(alg.meet(&x, &y)),
                (Value::Bool(x), Value::Bool(y)) => Value::Bool(x && y),
                (x, y) => Value::Elem(m.meet(&self.element(x, 0)?, &self.element(y, 0)?)),
            },
            Expr::Join(a, b) => match (self.eval(a)?, self.eval(b)?) {
                (Value::Idem(x), Value::Idem(y)) => Value::Idem(alg.join(&x, &y)),
                (Value::Bool(x), Value::Bool(y)) => Value::Bool(x || y),
                (x, y) => {
                    let parts = [self.element(x, 0)?, self.element(y, 0)?];
                    Value::Elem(m.join(&parts).map_err(CliError::failure)?)
                }
            },
            Expr::Call(name, args, at) => self.call(name, args, *at)?,
        })
    }

    fn call(&self, name: &str, args: &[Expr], at: usize) -> Result<Value<M>, CliError> {
        let m = self.model;
        let arity = if name == "leq" { 2 } else { 1 };
        if args.len() != arity {
            return Err(parse_error(at, format!("{name} takes {arity} argument(s)")));
        }
        let values = args.iter().map(|a| self.eval(a)).collect::<Result<Vec<_>, _>>()?;
        let mut values = values.into_iter();
        let x = values.next().expect("arity checked");
        if name == "leq" {
            let y = values.next().expect("arity checked");
            return Ok(Value::Bool(match (x, y) {
                (Value::Idem(a), Value::Idem(b)) => m.algebra().leq(&a, &b),
                (a, b) => m.natural_leq(&self.element(a, at)?, &self.element(b, at)?),
            }));
        }
        if name == "comp" {
            return match x {
                Value::Idem(e) => Ok(Value::Idem(m.algebra().complement(&e))),
                Value::Bool(b) => Ok(Value::Bool(!b)),
                Value::Elem(s) => match m.extract(&s) {
                    Some(e) => Ok(Value::Idem(m.algebra().complement(&e))),
                    None => Err(parse_error(at, "comp expects an idempotent")),
                },
            };
        }
        let s = self.element(x, at)?;
        Ok(match name {
            "phi" => Value::Idem(m.phi_raw(&s)),
            "sigma" => Value::Idem(m.sigma_idem(&s)),
            "dom" => Value::Idem(m.dom_idem(&s)),
            "ran" => Value::Idem(m.ran_idem(&s)),
            "inv" => Value::Elem(m.inv(&s)),
            "unit?" => Value::Bool(m.is_unit(&s)),
            "idempotent?" => Value::Bool(m.is_idempotent(&s)),
            other => return Err(parse_error(at, format!("unknown function '{other}'"))),
        })
    }
}
