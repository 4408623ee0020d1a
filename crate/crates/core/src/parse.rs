//! Text grammar shared by every algebra.
//!
//! ```text
//! expr   := tterm (('+' | '-') tterm)*
//! tterm  := ['+' | '-'] prod [('#' | '@') prod]
//! prod   := power ('*' power)*
//! power  := atom ['^' nat]
//! atom   := rational | 'x' nat | 'd' nat | '(' expr ')'
//! ```
//!
//! `x3` is the coordinate x_3 and `d3` is ∂/∂x_3. `#` separates the two legs
//! of a smash-product term, `@` the two legs of a tensor term. Whitespace is
//! insignificant.

use num::{BigInt, One, Zero};

use crate::env::{EnvElement, Restriction};
use crate::error::{AlgebraError, Result};
use crate::poly::Polynomial;
use crate::smash::SmashElement;
use crate::tensor::TensorElement;
use crate::weyl::WeylElement;
use crate::witt::VectorField;
use crate::Rational;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Rational),
    X(usize),
    D(usize),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Hash,
    At,
}

fn err(pos: usize, msg: impl Into<String>) -> AlgebraError {
    AlgebraError::Parse {
        pos,
        msg: msg.into(),
    }
}

fn lex(input: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let digits = |mut j: usize| {
        let start = j;
        while j < bytes.len() && bytes[j].is_ascii_digit() {
            j += 1;
        }
        (start, j)
    };
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => out.push((Tok::Plus, i)),
            b'-' => out.push((Tok::Minus, i)),
            b'*' => out.push((Tok::Star, i)),
            b'^' => out.push((Tok::Caret, i)),
            b'(' => out.push((Tok::LParen, i)),
            b')' => out.push((Tok::RParen, i)),
            b'#' => out.push((Tok::Hash, i)),
            b'@' => out.push((Tok::At, i)),
            b'x' | b'd' => {
                let (s, e) = digits(i + 1);
                if s == e {
                    return Err(err(i, "expected variable index"));
                }
                let idx: usize = input[s..e]
                    .parse()
                    .map_err(|_| err(s, "variable index too large"))?;
                if idx == 0 {
                    return Err(err(s, "variable indices start at 1"));
                }
                out.push((if c == b'x' { Tok::X(idx) } else { Tok::D(idx) }, start));
                i = e;
                continue;
            }
            b'0'..=b'9' => {
                let (s, e) = digits(i);
                let num: BigInt = input[s..e].parse().expect("ascii digits");
                let mut value = Rational::from_integer(num);
                let mut end = e;
                if e < bytes.len() && bytes[e] == b'/' {
                    let (ds, de) = digits(e + 1);
                    if ds == de {
                        return Err(err(e + 1, "expected denominator"));
                    }
                    let den: BigInt = input[ds..de].parse().expect("ascii digits");
                    if den.is_zero() {
                        return Err(err(ds, "zero denominator"));
                    }
                    value = Rational::new(value.to_integer(), den);
                    end = de;
                }
                out.push((Tok::Num(value), start));
                i = end;
                continue;
            }
            _ => return Err(err(i, format!("unexpected character '{}'", c as char))),
        }
        i += 1;
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum PairOp {
    Smash,
    Tensor,
}

#[derive(Debug, Clone)]
enum Node {
    Num(Rational),
    X(usize, usize),
    D(usize, usize),
    Sum(Vec<(bool, Node)>),
    Pair(PairOp, Box<Node>, Box<Node>, usize),
    Product(Vec<Node>),
    Pow(Box<Node>, u32),
    Group(Box<Node>),
}

impl Node {
    fn has_pair(&self) -> bool {
        match self {
            Node::Pair(..) => true,
            Node::Sum(ts) => ts.iter().any(|(_, t)| t.has_pair()),
            Node::Product(fs) => fs.iter().any(Node::has_pair),
            Node::Pow(b, _) | Node::Group(b) => b.has_pair(),
            _ => false,
        }
    }

    fn is_group(&self) -> bool {
        match self {
            Node::Group(_) => true,
            Node::Pow(b, _) => b.is_group(),
            _ => false,
        }
    }
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(t, _)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|(_, p)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|(t, _)| t.clone());
        self.at += 1;
        t
    }

    fn expr(&mut self) -> Result<Node> {
        let mut terms = Vec::new();
        let mut neg = false;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                }
                Some(Tok::Minus) => {
                    self.bump();
                    neg = !neg;
                }
                _ => {}
            }
            let left = self.prod()?;
            let term = match self.peek() {
                Some(Tok::Hash) | Some(Tok::At) => {
                    let pos = self.pos();
                    let op = if self.bump() == Some(Tok::Hash) {
                        PairOp::Smash
                    } else {
                        PairOp::Tensor
                    };
                    let right = self.prod()?;
                    Node::Pair(op, Box::new(left), Box::new(right), pos)
                }
                _ => left,
            };
            terms.push((neg, term));
            neg = match self.peek() {
                Some(Tok::Plus) => false,
                Some(Tok::Minus) => true,
                _ => break,
            };
            self.bump();
        }
        if terms.len() == 1 && !terms[0].0 {
            return Ok(terms.pop().expect("one term").1);
        }
        Ok(Node::Sum(terms))
    }

    fn prod(&mut self) -> Result<Node> {
        let mut factors = vec![self.power()?];
        while self.peek() == Some(&Tok::Star) {
            self.bump();
            factors.push(self.power()?);
        }
        if factors.len() == 1 {
            return Ok(factors.pop().expect("one factor"));
        }
        Ok(Node::Product(factors))
    }

    fn power(&mut self) -> Result<Node> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.bump();
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Num(r)) if r.is_integer() => {
                let e: u32 = r
                    .to_integer()
                    .try_into()
                    .map_err(|_| err(pos, "exponent out of range"))?;
                Ok(Node::Pow(Box::new(base), e))
            }
            _ => Err(err(pos, "expected natural-number exponent")),
        }
    }

    fn atom(&mut self) -> Result<Node> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Num(r)) => Ok(Node::Num(r)),
            Some(Tok::X(i)) => Ok(Node::X(i, pos)),
            Some(Tok::D(i)) => Ok(Node::D(i, pos)),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                if self.bump() != Some(Tok::RParen) {
                    return Err(err(self.toks.get(self.at - 1).map(|t| t.1).unwrap_or(self.end), "expected ')'"));
                }
                Ok(Node::Group(Box::new(inner)))
            }
            Some(_) => Err(err(pos, "unexpected token")),
            None => Err(err(pos, "unexpected end of input")),
        }
    }
}

fn parse_tree(input: &str) -> Result<Node> {
    let toks = lex(input)?;
    let mut p = Parser {
        toks,
        at: 0,
        end: input.len(),
    };
    let node = p.expr()?;
    if p.at < p.toks.len() {
        return Err(err(p.pos(), "unexpected trailing input"));
    }
    Ok(node)
}

fn check_var(i: usize, n: usize) -> Result<usize> {
    if i > n {
        return Err(AlgebraError::VariableOutOfRange { index: i, n });
    }
    Ok(i - 1)
}

fn eval_poly(node: &Node, n: usize) -> Result<Polynomial> {
    match node {
        Node::Num(r) => Ok(Polynomial::constant(n, r.clone())),
        Node::X(i, _) => Ok(Polynomial::var(n, check_var(*i, n)?)),
        Node::D(_, pos) => Err(err(*pos, "derivative not allowed in a polynomial")),
        Node::Sum(ts) => ts.iter().try_fold(Polynomial::zero(n), |acc, (neg, t)| {
            let v = eval_poly(t, n)?;
            if *neg {
                acc.sub(&v)
            } else {
                acc.add(&v)
            }
        }),
        Node::Pair(_, _, _, pos) => Err(err(*pos, "'#'/'@' not allowed in a polynomial")),
        Node::Product(fs) => fs
            .iter()
            .try_fold(Polynomial::one(n), |acc, f| acc.mul(&eval_poly(f, n)?)),
        Node::Pow(b, e) => Ok(eval_poly(b, n)?.pow(*e)),
        Node::Group(b) => eval_poly(b, n),
    }
}

fn eval_weyl(node: &Node, n: usize) -> Result<WeylElement> {
    match node {
        Node::Num(r) => Ok(WeylElement::scalar(n, r.clone())),
        Node::X(i, _) => Ok(WeylElement::x(n, check_var(*i, n)?)),
        Node::D(i, _) => Ok(WeylElement::d(n, check_var(*i, n)?)),
        Node::Sum(ts) => ts.iter().try_fold(WeylElement::zero(n), |acc, (neg, t)| {
            let v = eval_weyl(t, n)?;
            if *neg {
                acc.sub(&v)
            } else {
                acc.add(&v)
            }
        }),
        Node::Pair(_, _, _, pos) => Err(err(*pos, "'#'/'@' not allowed here")),
        Node::Product(fs) => fs
            .iter()
            .try_fold(WeylElement::one(n), |acc, f| acc.mul(&eval_weyl(f, n)?)),
        Node::Pow(b, e) => Ok(eval_weyl(b, n)?.pow(*e)),
        Node::Group(b) => eval_weyl(b, n),
    }
}

fn weyl_to_field(w: &WeylElement, pos: usize) -> Result<VectorField> {
    let mut v = VectorField::zero(w.n());
    for (m, c) in w.terms() {
        if m.d.total() != 1 {
            return Err(err(pos, format!("'{w}' is not a vector field")));
        }
        let dir = (0..w.n()).find(|&i| m.d.get(i) == 1).expect("|s| = 1");
        let f = Polynomial::monomial(m.x.clone(), c.clone());
        v = v.add(&VectorField::from_component(&f, dir)?)?;
    }
    Ok(v)
}

fn first_pos(node: &Node) -> usize {
    match node {
        Node::X(_, p) | Node::D(_, p) | Node::Pair(_, _, _, p) => *p,
        Node::Sum(ts) => ts.first().map(|(_, t)| first_pos(t)).unwrap_or(0),
        Node::Product(fs) => fs.first().map(first_pos).unwrap_or(0),
        Node::Pow(b, _) | Node::Group(b) => first_pos(b),
        Node::Num(_) => 0,
    }
}

/// A run of non-parenthesized factors must be a scalar or a vector field.
fn eval_env_segment(seg: &[&Node], n: usize, r: Restriction) -> Result<EnvElement> {
    let mut w = WeylElement::one(n);
    for f in seg {
        w = w.mul(&eval_weyl(f, n)?)?;
    }
    let pos = seg.first().map(|f| first_pos(f)).unwrap_or(0);
    if w.is_zero() {
        return Ok(EnvElement::zero(n, r));
    }
    if w.terms().all(|(m, _)| m.is_unit()) {
        let c = w.terms().next().map(|(_, c)| c.clone()).unwrap_or_else(Rational::one);
        return Ok(EnvElement::scalar(n, r, c));
    }
    EnvElement::from_vector_field(&weyl_to_field(&w, pos)?, r)
}

fn eval_env(node: &Node, n: usize, r: Restriction) -> Result<EnvElement> {
    match node {
        Node::Sum(ts) => ts.iter().try_fold(EnvElement::zero(n, r), |acc, (neg, t)| {
            let v = eval_env(t, n, r)?;
            if *neg {
                acc.sub(&v)
            } else {
                acc.add(&v)
            }
        }),
        Node::Group(b) => eval_env(b, n, r),
        Node::Pow(b, e) if b.is_group() => Ok(eval_env(b, n, r)?.pow(*e)),
        Node::Pair(_, _, _, pos) => Err(err(*pos, "'#'/'@' not allowed in an enveloping-algebra word")),
        Node::Product(fs) => {
            let mut acc = EnvElement::one(n, r);
            let mut seg: Vec<&Node> = Vec::new();
            for f in fs {
                if f.is_group() {
                    if !seg.is_empty() {
                        acc = acc.mul(&eval_env_segment(&seg, n, r)?)?;
                        seg.clear();
                    }
                    acc = acc.mul(&eval_env(f, n, r)?)?;
                } else {
                    seg.push(f);
                }
            }
            if !seg.is_empty() {
                acc = acc.mul(&eval_env_segment(&seg, n, r)?)?;
            }
            Ok(acc)
        }
        other => eval_env_segment(&[other], n, r),
    }
}

fn eval_smash(node: &Node, n: usize) -> Result<SmashElement> {
    if !node.has_pair() {
        return Ok(SmashElement::from_poly(&eval_poly(node, n)?));
    }
    match node {
        Node::Sum(ts) => ts.iter().try_fold(SmashElement::zero(n), |acc, (neg, t)| {
            let v = eval_smash(t, n)?;
            if *neg {
                acc.sub(&v)
            } else {
                acc.add(&v)
            }
        }),
        Node::Pair(PairOp::Smash, l, r, _) => {
            SmashElement::from_parts(&eval_poly(l, n)?, &eval_env(r, n, Restriction::All)?)
        }
        Node::Pair(PairOp::Tensor, _, _, pos) => Err(err(*pos, "'@' not allowed in a smash expression")),
        Node::Product(fs) => fs
            .iter()
            .try_fold(SmashElement::one(n), |acc, f| acc.mul(&eval_smash(f, n)?)),
        Node::Pow(b, e) => Ok(eval_smash(b, n)?.pow(*e)),
        Node::Group(b) => eval_smash(b, n),
        _ => unreachable!("leaf nodes carry no pair"),
    }
}

fn eval_tensor(node: &Node, n: usize) -> Result<TensorElement> {
    if !node.has_pair() {
        return Ok(TensorElement::from_weyl(&eval_weyl(node, n)?));
    }
    match node {
        Node::Sum(ts) => ts.iter().try_fold(TensorElement::zero(n), |acc, (neg, t)| {
            let v = eval_tensor(t, n)?;
            if *neg {
                acc.sub(&v)
            } else {
                acc.add(&v)
            }
        }),
        Node::Pair(PairOp::Tensor, l, r, _) => {
            TensorElement::from_parts(&eval_weyl(l, n)?, &eval_env(r, n, Restriction::Lplus)?)
        }
        Node::Pair(PairOp::Smash, _, _, pos) => Err(err(*pos, "'#' not allowed in a tensor expression")),
        Node::Product(fs) => fs
            .iter()
            .try_fold(TensorElement::one(n), |acc, f| acc.mul(&eval_tensor(f, n)?)),
        Node::Pow(b, e) => Ok(eval_tensor(b, n)?.pow(*e)),
        Node::Group(b) => eval_tensor(b, n),
        _ => unreachable!("leaf nodes carry no pair"),
    }
}

pub fn parse_polynomial(input: &str, n: usize) -> Result<Polynomial> {
    eval_poly(&parse_tree(input)?, n)
}

pub fn parse_weyl(input: &str, n: usize) -> Result<WeylElement> {
    eval_weyl(&parse_tree(input)?, n)
}

/// A sum of `polynomial * dN` terms; evaluated in D and required to be
/// first order with no zeroth-order part.
pub fn parse_vector_field(input: &str, n: usize) -> Result<VectorField> {
    let node = parse_tree(input)?;
    weyl_to_field(&eval_weyl(&node, n)?, first_pos(&node))
}

/// An element of U(V), written as products of parenthesized vector fields.
pub fn parse_env(input: &str, n: usize) -> Result<EnvElement> {
    eval_env(&parse_tree(input)?, n, Restriction::All)
}

/// An element of U(L+).
pub fn parse_env_lplus(input: &str, n: usize) -> Result<EnvElement> {
    eval_env(&parse_tree(input)?, n, Restriction::Lplus)
}

/// `poly # envword` terms; a term without `#` means `f # 1`.
pub fn parse_smash(input: &str, n: usize) -> Result<SmashElement> {
    eval_smash(&parse_tree(input)?, n)
}

/// `weylexpr @ envword` terms; a term without `@` means `a ⊗ 1`.
pub fn parse_tensor(input: &str, n: usize) -> Result<TensorElement> {
    eval_tensor(&parse_tree(input)?, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multi_index::MultiIndex;
    use crate::witt::VectorFieldGen;

    #[test]
    fn polynomial_grammar() {
        let f = parse_polynomial("3/2*x1^2*x3 - x2", 3).unwrap();
        assert_eq!(f.to_string(), "3/2*x1^2*x3 - x2");
        assert_eq!(parse_polynomial(" ( x1 + 1 ) ^ 2 ", 1).unwrap().to_string(), "x1^2 + 2*x1 + 1");
        assert_eq!(parse_polynomial("-x1 - -x1", 1).unwrap(), Polynomial::zero(1));
    }

    #[test]
    fn vector_field_grammar() {
        let v = parse_vector_field("x1^2*d1", 2).unwrap();
        let g = VectorFieldGen::new(MultiIndex::new(vec![2, 0]), 0).unwrap();
        assert_eq!(v.as_gen(), Some(&g));
        assert!(parse_vector_field("d1*x1", 1).is_err());
        assert!(parse_vector_field("x1", 1).is_err());
        assert_eq!(parse_vector_field("(x1 + x2)*d1", 2).unwrap().to_string(), "x1*d1 + x2*d1");
    }

    #[test]
    fn smash_grammar() {
        let s = parse_smash("1 # x1*d1", 1).unwrap();
        assert_eq!(s.to_string(), "1 # x1*d1");
        assert_eq!(parse_smash("x1^2 # (x1*d2)*(d1)", 2).unwrap().len(), 2);
        assert_eq!(parse_smash("x1", 1).unwrap().to_string(), "x1 # 1");
    }

    #[test]
    fn dimension_errors() {
        assert_eq!(
            parse_polynomial("x3", 2),
            Err(AlgebraError::VariableOutOfRange { index: 3, n: 2 })
        );
        assert!(matches!(parse_weyl("d3", 2), Err(AlgebraError::VariableOutOfRange { .. })));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        assert_eq!(
            parse_polynomial("x1 + * x2", 2),
            Err(AlgebraError::Parse {
                pos: 5,
                msg: "unexpected token".into()
            })
        );
        assert!(matches!(parse_polynomial("x0", 1), Err(AlgebraError::Parse { pos: 1, .. })));
        assert!(matches!(parse_polynomial("1/0", 1), Err(AlgebraError::Parse { .. })));
        assert!(matches!(parse_polynomial("(x1", 1), Err(AlgebraError::Parse { .. })));
        assert!(matches!(parse_polynomial("x1 $", 1), Err(AlgebraError::Parse { pos: 3, .. })));
        assert!(matches!(parse_polynomial("d1", 1), Err(AlgebraError::Parse { .. })));
    }

    #[test]
    fn env_grammar() {
        let e = parse_env("(x1*d1)*(x1^2*d2)", 2).unwrap();
        assert_eq!(e.to_string(), "(x1*d1)*(x1^2*d2)");
        assert!(parse_env("x1", 1).is_err());
        assert_eq!(parse_env("2*(x1*d1)^2 - 3", 1).unwrap().to_string(), "2*(x1*d1)^2 - 3");
        assert!(parse_env_lplus("d1", 1).is_err());
    }
}
