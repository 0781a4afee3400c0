//! Integer expressions used by catalog templates.
//!
//! Grammar (lowest precedence first):
//!
//! ```text
//! expr    := or
//! or      := and ("||" and)*
//! and     := cmp ("&&" cmp)*
//! cmp     := sum (("==" | "!=" | "<=" | ">=" | "<" | ">") sum)?
//! sum     := term (("+" | "-") term)*
//! term    := unary (("*" | "/" | "%") unary)*
//! unary   := "-" unary | "!" unary | atom
//! atom    := INT | IDENT | IDENT "(" expr ("," expr)* ")" | "(" expr ")"
//! ```
//!
//! Division is floor division. Functions: `even`, `odd`, `if`, `min`, `max`.
//! Comparisons and logic yield 0 or 1.

use std::collections::HashMap;

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(i64),
    Var(String),
    Neg(Box<Expr>),
    Not(Box<Expr>),
    Bin(Op, Box<Expr>, Box<Expr>),
    Call(String, Vec<Expr>),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Op {
    Add,
    Sub,
    Mul,
    Div,
    Rem,
    Eq,
    Ne,
    Le,
    Ge,
    Lt,
    Gt,
    And,
    Or,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(i64),
    Ident(String),
    Op(&'static str),
    LParen,
    RParen,
    Comma,
}

fn lex(s: &str) -> Result<Vec<Tok>, String> {
    let b = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    const OPS: [&str; 17] = [
        "==", "!=", "<=", ">=", "&&", "||", "<", ">", "+", "-", "*", "/", "%", "!", "(", ")", ",",
    ];
    while i < b.len() {
        let c = b[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < b.len() && b[i].is_ascii_digit() {
                i += 1;
            }
            out.push(Tok::Num(s[start..i].parse().map_err(|e| format!("{e}"))?));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < b.len() && (b[i].is_ascii_alphanumeric() || b[i] == b'_') {
                i += 1;
            }
            out.push(Tok::Ident(s[start..i].to_string()));
        } else {
            let op = OPS
                .iter()
                .find(|op| s[i..].starts_with(**op))
                .ok_or_else(|| format!("unexpected character {c:?}"))?;
            i += op.len();
            out.push(match *op {
                "(" => Tok::LParen,
                ")" => Tok::RParen,
                "," => Tok::Comma,
                o => Tok::Op(o),
            });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat_op(&mut self, ops: &[&'static str]) -> Option<&'static str> {
        if let Some(Tok::Op(o)) = self.peek() {
            if let Some(found) = ops.iter().find(|x| *x == o) {
                self.pos += 1;
                return Some(found);
            }
        }
        None
    }

    fn binary(
        &mut self,
        ops: &[&'static str],
        next: fn(&mut Self) -> Result<Expr, String>,
        once: bool,
    ) -> Result<Expr, String> {
        let mut lhs = next(self)?;
        while let Some(o) = self.eat_op(ops) {
            let op = match o {
                "+" => Op::Add,
                "-" => Op::Sub,
                "*" => Op::Mul,
                "/" => Op::Div,
                "%" => Op::Rem,
                "==" => Op::Eq,
                "!=" => Op::Ne,
                "<=" => Op::Le,
                ">=" => Op::Ge,
                "<" => Op::Lt,
                ">" => Op::Gt,
                "&&" => Op::And,
                _ => Op::Or,
            };
            let rhs = next(self)?;
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(rhs));
            if once {
                break;
            }
        }
        Ok(lhs)
    }

    fn or(&mut self) -> Result<Expr, String> {
        self.binary(&["||"], Self::and, false)
    }

    fn and(&mut self) -> Result<Expr, String> {
        self.binary(&["&&"], Self::cmp, false)
    }

    fn cmp(&mut self) -> Result<Expr, String> {
        self.binary(&["==", "!=", "<=", ">=", "<", ">"], Self::sum, true)
    }

    fn sum(&mut self) -> Result<Expr, String> {
        self.binary(&["+", "-"], Self::term, false)
    }

    fn term(&mut self) -> Result<Expr, String> {
        self.binary(&["*", "/", "%"], Self::unary, false)
    }

    fn unary(&mut self) -> Result<Expr, String> {
        if self.eat_op(&["-"]).is_some() {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        if self.eat_op(&["!"]).is_some() {
            return Ok(Expr::Not(Box::new(self.unary()?)));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Expr, String> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Expr::Num(n))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if self.peek() == Some(&Tok::LParen) {
                    self.pos += 1;
                    let mut args = vec![self.or()?];
                    while self.peek() == Some(&Tok::Comma) {
                        self.pos += 1;
                        args.push(self.or()?);
                    }
                    self.expect_rparen()?;
                    Ok(Expr::Call(name, args))
                } else {
                    Ok(Expr::Var(name))
                }
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.or()?;
                self.expect_rparen()?;
                Ok(e)
            }
            other => Err(format!("unexpected token {other:?}")),
        }
    }

    fn expect_rparen(&mut self) -> Result<(), String> {
        if self.peek() == Some(&Tok::RParen) {
            self.pos += 1;
            Ok(())
        } else {
            Err("expected ')'".into())
        }
    }
}

/// Parses a comma-separated list of expressions.
pub fn parse_list(s: &str) -> Result<Vec<Expr>, String> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return Err("empty expression".into());
    }
    let mut p = Parser { toks, pos: 0 };
    let mut out = vec![p.or()?];
    while p.peek() == Some(&Tok::Comma) {
        p.pos += 1;
        out.push(p.or()?);
    }
    if p.pos != p.toks.len() {
        return Err(format!("trailing input in {s:?}"));
    }
    Ok(out)
}

pub fn parse(s: &str) -> Result<Expr, String> {
    let mut v = parse_list(s)?;
    if v.len() != 1 {
        return Err(format!("expected a single expression in {s:?}"));
    }
    Ok(v.pop().unwrap())
}

pub type Env = HashMap<String, i64>;

pub fn eval(e: &Expr, env: &Env) -> Result<i64, String> {
    Ok(match e {
        Expr::Num(n) => *n,
        Expr::Var(v) => *env.get(v).ok_or_else(|| format!("unbound variable {v}"))?,
        Expr::Neg(x) => -eval(x, env)?,
        Expr::Not(x) => i64::from(eval(x, env)? == 0),
        Expr::Bin(op, a, b) => {
            let x = eval(a, env)?;
            // short-circuit so guarded branches never evaluate
            match op {
                Op::And if x == 0 => return Ok(0),
                Op::Or if x != 0 => return Ok(1),
                _ => {}
            }
            let y = eval(b, env)?;
            match op {
                Op::Add => x + y,
                Op::Sub => x - y,
                Op::Mul => x * y,
                Op::Div | Op::Rem if y == 0 => return Err("division by zero".into()),
                Op::Div => x.div_euclid(y),
                Op::Rem => x.rem_euclid(y),
                Op::Eq => i64::from(x == y),
                Op::Ne => i64::from(x != y),
                Op::Le => i64::from(x <= y),
                Op::Ge => i64::from(x >= y),
                Op::Lt => i64::from(x < y),
                Op::Gt => i64::from(x > y),
                Op::And | Op::Or => i64::from(y != 0),
            }
        }
        Expr::Call(name, args) => {
            let arity = |n: usize| {
                if args.len() == n {
                    Ok(())
                } else {
                    Err(format!("{name} takes {n} arguments"))
                }
            };
            match name.as_str() {
                "even" => {
                    arity(1)?;
                    i64::from(eval(&args[0], env)?.rem_euclid(2) == 0)
                }
                "odd" => {
                    arity(1)?;
                    i64::from(eval(&args[0], env)?.rem_euclid(2) == 1)
                }
                "if" => {
                    arity(3)?;
                    if eval(&args[0], env)? != 0 {
                        eval(&args[1], env)?
                    } else {
                        eval(&args[2], env)?
                    }
                }
                "min" | "max" => {
                    arity(2)?;
                    let (a, b) = (eval(&args[0], env)?, eval(&args[1], env)?);
                    if name == "min" {
                        a.min(b)
                    } else {
                        a.max(b)
                    }
                }
                _ => return Err(format!("unknown function {name}")),
            }
        }
    })
}

/// Replaces every innermost parenthesised group whose contents evaluate as
/// an expression list, e.g. `so(2*n+1-p)` becomes `so(5)`.
pub fn substitute(text: &str, env: &Env) -> String {
    let mut out = String::new();
    let mut stack: Vec<(usize, bool)> = Vec::new(); // (start in out, has nested)
    for c in text.chars() {
        match c {
            '(' => {
                if let Some(top) = stack.last_mut() {
                    top.1 = true;
                }
                out.push('(');
                stack.push((out.len(), false));
            }
            ')' => {
                if let Some((start, nested)) = stack.pop() {
                    if !nested {
                        let inner = out[start..].to_string();
                        if let Ok(vals) = parse_list(&inner)
                            .and_then(|es| es.iter().map(|e| eval(e, env)).collect::<Result<Vec<_>, _>>())
                        {
                            out.truncate(start);
                            let parts: Vec<String> = vals.iter().map(|v| v.to_string()).collect();
                            out.push_str(&parts.join(","));
                        }
                    }
                }
                out.push(')');
            }
            _ => out.push(c),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn env(n: i64, p: i64) -> Env {
        [("n".to_string(), n), ("p".to_string(), p)].into_iter().collect()
    }

    #[test]
    fn arithmetic() {
        let e = env(7, 2);
        assert_eq!(eval(&parse("(n+1)/2").unwrap(), &e).unwrap(), 4);
        assert_eq!(eval(&parse("2*n+1-p").unwrap(), &e).unwrap(), 13);
        assert_eq!(eval(&parse("if(even(p)||p==n,2,1)").unwrap(), &e).unwrap(), 2);
        assert_eq!(eval(&parse("-3/2").unwrap(), &e).unwrap(), -2);
        assert_eq!(eval(&parse("!odd(n) && 1").unwrap(), &e).unwrap(), 0);
    }

    #[test]
    fn errors() {
        assert!(parse("1 +").is_err());
        assert!(eval(&parse("q").unwrap(), &env(1, 1)).is_err());
        assert!(eval(&parse("foo(1)").unwrap(), &env(1, 1)).is_err());
    }

    #[test]
    fn substitution() {
        let e = env(5, 2);
        assert_eq!(substitute("so(p)+so(2*n+1-p)", &e), "so(2)+so(9)");
        assert_eq!(substitute("s(gl(p)+gl(n+1-p))", &e), "s(gl(2)+gl(4))");
        assert_eq!(substitute("AIII(p,n+1-p)", &e), "AIII(2,4)");
        assert_eq!(substitute("e6+k", &e), "e6+k");
    }
}
