//! Small expression language over the engine.
//!
//! ```text
//! sum     := product (('+' | '-') product)*
//! product := unary (('*' | '/') unary)*
//! unary   := '-' unary | primary
//! primary := INT | '(' sum ')' | BASIS index | FUNC '(' args ')'
//! index   := '(' ')' | '(' WORD (',' WORD)* ')' | '(' INT (',' INT)* ')'
//! ```
//!
//! Letter indices select the colored algebras, integer indices the classical
//! ones. Types are inferred while parsing, so mixed-algebra arithmetic is a
//! parse error pointing at the operator.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value as Json};
use thiserror::Error;

use crate::classical::{Composition, Partition};
use crate::engine::{Engine, EngineError};
use crate::formal::{render_scalar, scalar_json, Algebra, Basis, BasisKey, FormalSum, Index, TensorSum};
use crate::linear::{LinComb, Q};
use crate::sentence::{sort_sentence, Alphabet, PSentence, SentenceError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("at {pos}: {message}")]
pub struct ExprError {
    /// Byte offset into the input.
    pub pos: usize,
    pub message: String,
}

fn err<T>(pos: usize, message: impl Into<String>) -> Result<T, ExprError> {
    Err(ExprError { pos, message: message.into() })
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    LParen,
    RParen,
    Comma,
    Semi,
    Plus,
    Minus,
    Star,
    Slash,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Int(n) => write!(f, "`{n}`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Semi => f.write_str("`;`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Star => f.write_str("`*`"),
            Tok::Slash => f.write_str("`/`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

fn lex(input: &str) -> Result<Vec<(usize, Tok)>, ExprError> {
    let mut out = Vec::new();
    let mut chars = input.char_indices().peekable();
    while let Some(&(i, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        let simple = match c {
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            ',' => Some(Tok::Comma),
            ';' => Some(Tok::Semi),
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            _ => None,
        };
        if let Some(t) = simple {
            chars.next();
            out.push((i, t));
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&(_, d)) = chars.peek().filter(|(_, d)| d.is_ascii_digit()) {
                s.push(d);
                chars.next();
            }
            out.push((i, Tok::Int(s.parse().expect("digits"))));
        } else if c.is_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&(_, d)) = chars.peek().filter(|(_, d)| d.is_alphanumeric() || *d == '_') {
                s.push(d);
                chars.next();
            }
            out.push((i, Tok::Ident(s)));
        } else {
            return err(i, format!("unexpected character '{c}'"));
        }
    }
    out.push((input.len(), Tok::End));
    Ok(out)
}

/// Static type of a subexpression.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ty {
    Scalar,
    Sum(Algebra),
    Tensor(Algebra),
}

impl fmt::Display for Ty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ty::Scalar => f.write_str("scalar"),
            Ty::Sum(a) => write!(f, "{a}"),
            Ty::Tensor(a) => write!(f, "{a} ⊗ {a}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Coproduct,
    Antipode,
    Counit,
    Chi,
    Iota,
    Uncolor,
    Omega,
}

impl Func {
    const ALL: [Func; 7] =
        [Func::Coproduct, Func::Antipode, Func::Counit, Func::Chi, Func::Iota, Func::Uncolor, Func::Omega];

    fn name(self) -> &'static str {
        match self {
            Func::Coproduct => "coproduct",
            Func::Antipode => "antipode",
            Func::Counit => "counit",
            Func::Chi => "chi",
            Func::Iota => "iota",
            Func::Uncolor => "uncolor",
            Func::Omega => "omega",
        }
    }

    fn result(self, arg: Algebra) -> Option<Ty> {
        use Algebra::*;
        match (self, arg) {
            (Func::Coproduct, a) => Some(Ty::Tensor(a)),
            (Func::Antipode, a) => Some(Ty::Sum(a)),
            (Func::Counit, _) => Some(Ty::Scalar),
            (Func::Chi, NSymA) => Some(Ty::Sum(PSymA)),
            (Func::Chi, NSym) => Some(Ty::Sum(Sym)),
            (Func::Iota, SymA) => Some(Ty::Sum(QSymA)),
            (Func::Iota, Sym) => Some(Ty::Sum(QSym)),
            (Func::Uncolor, NSymA) => Some(Ty::Sum(NSym)),
            (Func::Uncolor, QSymA) => Some(Ty::Sum(QSym)),
            (Func::Uncolor, SymA | PSymA) => Some(Ty::Sum(Sym)),
            (Func::Omega, Sym) => Some(Ty::Sum(Sym)),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Scalar(Q),
    Atom { algebra: Algebra, key: BasisKey },
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul { left: Box<Expr>, right: Box<Expr>, pos: usize },
    Div { left: Box<Expr>, right: Box<Expr>, pos: usize },
    Call { func: Func, arg: Box<Expr>, pos: usize },
    Convert { arg: Box<Expr>, basis: Basis, pos: usize },
    Pair { left: Box<Expr>, right: Box<Expr>, pos: usize },
}

/// A parsed expression with its inferred type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Typed {
    pub expr: Expr,
    pub ty: Ty,
}

/// Result of converting a sum of `from` to `basis`, if that is allowed.
fn convert_target(from: Algebra, basis: Basis) -> Option<Algebra> {
    match (from, basis) {
        (a, b) if a.has_basis(b) => Some(a),
        (Algebra::QSymA, Basis::Mono | Basis::DualSchur) => Some(Algebra::SymA),
        (Algebra::QSym, Basis::Mono | Basis::Homog | Basis::Elem | Basis::Schur) => Some(Algebra::Sym),
        _ => None,
    }
}

fn pairable(l: Algebra, r: Algebra) -> bool {
    use Algebra::*;
    matches!((l, r), (NSymA, QSymA) | (QSymA, NSymA) | (PSymA, SymA) | (SymA, PSymA) | (NSym, QSym) | (QSym, NSym) | (Sym, Sym))
}

struct Parser<'a> {
    input: &'a str,
    toks: Vec<(usize, Tok)>,
    at: usize,
    alphabet: &'a Alphabet,
}

pub fn parse(input: &str, alphabet: &Alphabet) -> Result<Typed, ExprError> {
    let mut p = Parser { input, toks: lex(input)?, at: 0, alphabet };
    let e = p.sum()?;
    match p.peek() {
        Tok::End => Ok(e),
        t => err(p.pos(), format!("unexpected {t}")),
    }
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> (usize, Tok) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> Result<usize, ExprError> {
        if *self.peek() == want {
            Ok(self.bump().0)
        } else {
            err(self.pos(), format!("expected {want}, found {}", self.peek()))
        }
    }

    fn sum(&mut self) -> Result<Typed, ExprError> {
        let mut acc = self.product()?;
        loop {
            let neg = match self.peek() {
                Tok::Plus => false,
                Tok::Minus => true,
                _ => return Ok(acc),
            };
            let (pos, _) = self.bump();
            let rhs = self.product()?;
            let ty = match (acc.ty, rhs.ty) {
                (a, b) if a == b => a,
                (Ty::Scalar, t) | (t, Ty::Scalar) => t,
                (a, b) => return err(pos, format!("cannot add {a} and {b}")),
            };
            let (l, r) = (Box::new(acc.expr), Box::new(rhs.expr));
            acc = Typed { expr: if neg { Expr::Sub(l, r) } else { Expr::Add(l, r) }, ty };
        }
    }

    fn product(&mut self) -> Result<Typed, ExprError> {
        let mut acc = self.unary()?;
        loop {
            let div = match self.peek() {
                Tok::Star => false,
                Tok::Slash => true,
                _ => return Ok(acc),
            };
            let (pos, _) = self.bump();
            let rhs = self.unary()?;
            let ty = if div {
                if rhs.ty != Ty::Scalar {
                    return err(pos, format!("cannot divide by {}", rhs.ty));
                }
                acc.ty
            } else {
                match (acc.ty, rhs.ty) {
                    (Ty::Scalar, t) | (t, Ty::Scalar) => t,
                    (Ty::Sum(a), Ty::Sum(b)) if a == b => Ty::Sum(a),
                    (a, b) => return err(pos, format!("cannot multiply {a} by {b}")),
                }
            };
            let (left, right) = (Box::new(acc.expr), Box::new(rhs.expr));
            let expr = if div { Expr::Div { left, right, pos } } else { Expr::Mul { left, right, pos } };
            acc = Typed { expr, ty };
        }
    }

    fn unary(&mut self) -> Result<Typed, ExprError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            let inner = self.unary()?;
            return Ok(Typed { ty: inner.ty, expr: Expr::Neg(Box::new(inner.expr)) });
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Typed, ExprError> {
        let (pos, tok) = self.bump();
        match tok {
            Tok::Int(n) => Ok(Typed { expr: Expr::Scalar(Q::from_integer(n)), ty: Ty::Scalar }),
            Tok::LParen => {
                let e = self.sum()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Tok::Ident(name) => {
                if let Some(b) = Basis::from_symbol(&name) {
                    return self.atom(b, pos);
                }
                if let Some(f) = Func::ALL.into_iter().find(|f| f.name() == name) {
                    return self.call(f, pos);
                }
                match name.as_str() {
                    "pair" => self.pair(pos),
                    "convert" => self.convert(pos),
                    _ => err(pos, format!("unknown name `{name}`")),
                }
            }
            t => err(pos, format!("unexpected {t}")),
        }
    }

    fn call(&mut self, func: Func, pos: usize) -> Result<Typed, ExprError> {
        self.expect(Tok::LParen)?;
        let arg = self.sum()?;
        self.expect(Tok::RParen)?;
        let ty = match arg.ty {
            Ty::Sum(a) => func.result(a),
            _ => None,
        };
        let ty = ty.ok_or_else(|| ExprError { pos, message: format!("{} is not defined on {}", func.name(), arg.ty) })?;
        Ok(Typed { expr: Expr::Call { func, arg: Box::new(arg.expr), pos }, ty })
    }

    fn pair(&mut self, pos: usize) -> Result<Typed, ExprError> {
        self.expect(Tok::LParen)?;
        let left = self.sum()?;
        self.expect(Tok::Semi)?;
        let right = self.sum()?;
        self.expect(Tok::RParen)?;
        let ok = match (left.ty, right.ty) {
            (Ty::Sum(a), Ty::Sum(b)) | (Ty::Tensor(a), Ty::Tensor(b)) => pairable(a, b),
            _ => false,
        };
        if !ok {
            return err(pos, format!("cannot pair {} with {}", left.ty, right.ty));
        }
        Ok(Typed { expr: Expr::Pair { left: Box::new(left.expr), right: Box::new(right.expr), pos }, ty: Ty::Scalar })
    }

    fn convert(&mut self, pos: usize) -> Result<Typed, ExprError> {
        self.expect(Tok::LParen)?;
        let arg = self.sum()?;
        self.expect(Tok::Semi)?;
        let bpos = self.pos();
        let basis = match self.bump().1 {
            Tok::Ident(s) => Basis::from_symbol(&s).ok_or_else(|| ExprError { pos: bpos, message: format!("unknown basis `{s}`") })?,
            t => return err(bpos, format!("expected a basis name, found {t}")),
        };
        self.expect(Tok::RParen)?;
        let ty = match arg.ty {
            Ty::Sum(a) => convert_target(a, basis).map(Ty::Sum),
            _ => None,
        };
        let ty = ty.ok_or_else(|| ExprError { pos, message: format!("cannot convert {} to basis {basis}", arg.ty) })?;
        Ok(Typed { expr: Expr::Convert { arg: Box::new(arg.expr), basis, pos }, ty })
    }

    /// Basis atom. The index is re-read from the source text so that the
    /// sentence parsers see exactly what the user wrote.
    fn atom(&mut self, basis: Basis, pos: usize) -> Result<Typed, ExprError> {
        let open = self.expect(Tok::LParen)?;
        let mut ints = false;
        let mut letters = false;
        loop {
            let (p, t) = self.bump();
            match t {
                Tok::RParen => {
                    let close = p;
                    return self.finish_atom(basis, pos, open, close, ints, letters);
                }
                Tok::Int(_) => ints = true,
                Tok::Ident(_) => letters = true,
                Tok::Comma => {}
                t => return err(p, format!("unexpected {t} in index")),
            }
            if ints && letters {
                return err(p, "index mixes words and integers");
            }
        }
    }

    fn finish_atom(
        &self,
        basis: Basis,
        pos: usize,
        open: usize,
        close: usize,
        ints: bool,
        letters: bool,
    ) -> Result<Typed, ExprError> {
        let text: String = self.input[open..=close].chars().filter(|c| !c.is_whitespace()).collect();
        let colored = letters || !ints;
        let algebra = Algebra::for_basis(basis, colored).ok_or_else(|| ExprError {
            pos,
            message: format!(
                "basis {basis} takes {} indices",
                if colored { "integer" } else { "word" }
            ),
        })?;
        let index = if colored {
            self.colored_index(basis, &text, open)?
        } else {
            classical_index(basis, &text, open)?
        };
        Ok(Typed { expr: Expr::Atom { algebra, key: BasisKey { basis, index } }, ty: Ty::Sum(algebra) })
    }

    fn colored_index(&self, basis: Basis, text: &str, open: usize) -> Result<Index, ExprError> {
        let locate = |e: SentenceError| {
            let at = match &e {
                SentenceError::UnknownColor(c) => self.input[open..].find(*c).map_or(open, |i| open + i),
                _ => open,
            };
            ExprError { pos: at, message: e.to_string() }
        };
        let s = self.alphabet.parse_sentence(text).map_err(locate)?;
        if !basis.symmetric_index() {
            return Ok(Index::Sentence(s));
        }
        match PSentence::from_canonical(s.clone()) {
            Some(p) => Ok(Index::PSentence(p)),
            None => err(
                open,
                format!(
                    "{}{} is not in canonical p-sentence order; did you mean {}{}?",
                    basis,
                    self.alphabet.render_sentence(&s),
                    basis,
                    self.alphabet.render_sentence(sort_sentence(&s).as_sentence())
                ),
            ),
        }
    }
}

fn classical_index(basis: Basis, text: &str, open: usize) -> Result<Index, ExprError> {
    let inner = &text[1..text.len() - 1];
    let parts: Vec<usize> = inner
        .split(',')
        .map(|s| s.parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|_| ExprError { pos: open, message: format!("malformed index {text}") })?;
    if parts.contains(&0) {
        return err(open, format!("index {text} has a zero part"));
    }
    if !basis.symmetric_index() {
        return Ok(Index::Composition(Composition(parts)));
    }
    if Partition::is_valid(&parts) {
        return Ok(Index::Partition(Partition(parts)));
    }
    err(open, format!("{basis}{text} is not a partition; did you mean {basis}{}?", Partition::from_parts(parts)))
}

/// Evaluated expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Scalar(Q),
    Sum(FormalSum),
    Tensor(TensorSum),
}

impl Value {
    pub fn render(&self, alphabet: &Alphabet) -> String {
        match self {
            Value::Scalar(c) => render_scalar(c),
            Value::Sum(f) => f.render(alphabet),
            Value::Tensor(t) => t.render(alphabet),
        }
    }

    pub fn to_json(&self, alphabet: &Alphabet) -> Json {
        match self {
            Value::Scalar(c) => json!({ "kind": "scalar", "value": scalar_json(c) }),
            Value::Sum(f) => json!({ "kind": "sum", "algebra": f.algebra.name(), "terms": f.to_json(alphabet) }),
            Value::Tensor(t) => json!({ "kind": "tensor", "algebra": t.algebra.name(), "terms": t.to_json(alphabet) }),
        }
    }
}

fn unit_tensor(algebra: Algebra) -> TensorSum {
    let b = algebra.distinguished();
    let one = BasisKey { basis: b, index: Index::empty(algebra, b) };
    TensorSum { algebra, terms: LinComb::singleton((one.clone(), one)) }
}

/// Lifts a scalar to `c·1` in the algebra of `other`.
fn lift(c: &Q, other: &Value) -> Value {
    match other {
        Value::Scalar(_) => Value::Scalar(c.clone()),
        Value::Sum(f) => Value::Sum(FormalSum::unit(f.algebra).scale(c)),
        Value::Tensor(t) => Value::Tensor(unit_tensor(t.algebra).scale(c)),
    }
}

pub fn evaluate(engine: &Engine, e: &Expr) -> Result<Value, ExprError> {
    let at = |pos: usize| move |e: EngineError| ExprError { pos, message: e.to_string() };
    let sum = |v: Value| match v {
        Value::Sum(f) => f,
        other => unreachable!("type checker admitted {other:?}"),
    };
    Ok(match e {
        Expr::Scalar(c) => Value::Scalar(c.clone()),
        Expr::Atom { algebra, key } => Value::Sum(FormalSum::singleton(*algebra, key.clone()).map_err(|e| ExprError { pos: 0, message: e.to_string() })?),
        Expr::Neg(x) => scale(evaluate(engine, x)?, &-Q::one()),
        Expr::Add(l, r) | Expr::Sub(l, r) => {
            let (a, b) = (evaluate(engine, l)?, evaluate(engine, r)?);
            let b = if matches!(e, Expr::Sub(..)) { scale(b, &-Q::one()) } else { b };
            let (a, b) = match (&a, &b) {
                (Value::Scalar(c), v) if !matches!(v, Value::Scalar(_)) => (lift(c, v), b),
                (v, Value::Scalar(c)) if !matches!(v, Value::Scalar(_)) => (a.clone(), lift(c, v)),
                _ => (a, b),
            };
            match (a, b) {
                (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(x + y),
                (Value::Sum(x), Value::Sum(y)) => Value::Sum(x.add(&y).expect("typed")),
                (Value::Tensor(x), Value::Tensor(y)) => Value::Tensor(x.add(&y).expect("typed")),
                _ => unreachable!("type checker admitted mixed sum"),
            }
        }
        Expr::Mul { left, right, pos } => match (evaluate(engine, left)?, evaluate(engine, right)?) {
            (Value::Scalar(c), v) | (v, Value::Scalar(c)) => scale(v, &c),
            (Value::Sum(f), Value::Sum(g)) => Value::Sum(engine.product(&f, &g).map_err(at(*pos))?),
            _ => unreachable!("type checker admitted tensor product"),
        },
        Expr::Div { left, right, pos } => {
            let Value::Scalar(d) = evaluate(engine, right)? else { unreachable!("typed") };
            if d.is_zero() {
                return err(*pos, "division by zero");
            }
            scale(evaluate(engine, left)?, &d.recip())
        }
        Expr::Call { func, arg, pos } => {
            let f = sum(evaluate(engine, arg)?);
            match func {
                Func::Coproduct => Value::Tensor(engine.coproduct(&f)),
                Func::Antipode => Value::Sum(engine.antipode(&f)),
                Func::Counit => Value::Scalar(engine.counit(&f)),
                Func::Chi => Value::Sum(engine.chi(&f).map_err(at(*pos))?),
                Func::Iota => Value::Sum(engine.iota(&f).map_err(at(*pos))?),
                Func::Uncolor => Value::Sum(engine.uncolor(&f).map_err(at(*pos))?),
                Func::Omega => Value::Sum(engine.omega(&f).map_err(at(*pos))?),
            }
        }
        Expr::Convert { arg, basis, pos } => Value::Sum(engine.convert(&sum(evaluate(engine, arg)?), *basis).map_err(at(*pos))?),
        Expr::Pair { left, right, pos } => match (evaluate(engine, left)?, evaluate(engine, right)?) {
            (Value::Sum(f), Value::Sum(g)) => Value::Scalar(engine.pair(&f, &g).map_err(at(*pos))?),
            (Value::Tensor(x), Value::Tensor(y)) => Value::Scalar(engine.pair_tensors(&x, &y).map_err(at(*pos))?),
            _ => unreachable!("typed"),
        },
    })
}

fn scale(v: Value, c: &Q) -> Value {
    match v {
        Value::Scalar(x) => Value::Scalar(x * c),
        Value::Sum(f) => Value::Sum(f.scale(c)),
        Value::Tensor(t) => Value::Tensor(t.scale(c)),
    }
}

/// Parse and evaluate in one go.
pub fn eval_str(engine: &Engine, input: &str) -> Result<Value, ExprError> {
    let t = parse(input, engine.alphabet())?;
    evaluate(engine, &t.expr)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(alpha: &str, input: &str) -> String {
        let e = Engine::new(Alphabet::parse(alpha).unwrap());
        match eval_str(&e, input) {
            Ok(v) => v.render(e.alphabet()),
            Err(x) => format!("error {x}"),
        }
    }

    #[test]
    fn documented_evaluations() {
        assert_eq!(run("abc", "m(bc,a) * m(b)"), "1*m(ab,bc) + 1*m(bc,a,b) + 1*m(bcb,a)");
        assert_eq!(
            run("abc", "antipode(h(aba,c))"),
            "1*h(a,a,b,c) - 1*h(ab,a,c) + 1*h(aba,c) - 1*h(ba,a,c)"
        );
        assert_eq!(run("ab", "pair(H(a); M(b))"), "0");
        assert_eq!(run("abc", "pair(H(ab,c); M(ab,c))"), "1");
    }

    #[test]
    fn arithmetic_and_scalars() {
        assert_eq!(run("ab", "1/2*H(a) + H(a)/2"), "1*H(a)");
        assert_eq!(run("ab", "2 + H(a) - 2"), "1*H(a)");
        assert_eq!(run("ab", "1 - 1"), "0");
        assert_eq!(run("ab", "-(3/4)"), "-3/4");
        assert_eq!(run("ab", "counit(3*H() + H(a))"), "3");
        assert_eq!(run("ab", "H(a) * H(b) - H(a,b)"), "0");
        assert_eq!(run("a", "M(1)*M(2,1)"), "1*M(1,2,1) + 2*M(2,1,1) + 1*M(2,2) + 1*M(3,1)");
    }

    #[test]
    fn functions() {
        assert_eq!(run("abc", "chi(H(c,aba,bc))"), "1*h(aba,bc,c)");
        assert_eq!(run("ab", "iota(m(a,b))"), "1*M(a,b) + 1*M(b,a)");
        assert_eq!(run("abc", "uncolor(H(ab,c))"), "1*H(2,1)");
        assert_eq!(run("abc", "uncolor(m(ab,c,c))"), "1*m(2,1,1)");
        assert_eq!(run("a", "convert(F(3); M)"), "1*M(1,1,1) + 1*M(1,2) + 1*M(2,1) + 1*M(3)");
        assert_eq!(run("a", "convert(iota(m(2,1)); m)"), "1*m(2,1)");
        assert_eq!(run("a", "omega(e(2,1))"), "1*e(1,1,1) - 1*e(2,1)");
        assert_eq!(run("a", "convert(omega(e(2,1)); h)"), "1*h(2,1)");
        assert_eq!(run("a", "coproduct(M(2))"), "1*M() ⊗ M(2) + 1*M(2) ⊗ M()");
        assert_eq!(run("a", "pair(coproduct(H(1)); coproduct(M(1)))"), "2");
        assert_eq!(run("a", "convert(s(a,a); h)"), "1*h(a,a) - 1*h(aa)");
    }

    #[test]
    fn errors_carry_positions() {
        let a = Alphabet::parse("ab").unwrap();
        let e = parse("m(b,a)", &a).unwrap_err();
        assert_eq!(e.pos, 1);
        assert!(e.message.contains("did you mean m(a,b)"), "{}", e.message);
        let e = parse("H(a) + M(a)", &a).unwrap_err();
        assert_eq!(e.pos, 5);
        assert_eq!(parse("H(az)", &a).unwrap_err().pos, 3);
        assert_eq!(parse("H(a) $", &a).unwrap_err().pos, 5);
        assert!(parse("m(1,2)", &a).unwrap_err().message.contains("did you mean m(2,1)"));
        assert!(parse("chi(M(a))", &a).is_err());
        assert!(parse("pair(H(a); H(a))", &a).is_err());
        assert!(parse("convert(H(a); m)", &a).is_err());
        assert!(parse("H(a,1)", &a).is_err());
        assert!(parse("coproduct(H(a)) * coproduct(H(a))", &a).is_err());
        let e = Engine::new(a.clone());
        let x = eval_str(&e, "convert(M(a,b); m)").unwrap_err();
        assert_eq!(x.pos, 0);
        assert!(x.message.contains("not symmetric"));
    }

    #[test]
    fn rendered_atoms_reparse() {
        let a = Alphabet::parse("ab").unwrap();
        let e = Engine::new(a.clone());
        for t in ["H(ab,b)", "M(a,ba)", "m(ab,a)", "h(bb,a)", "sstar(ab)", "s(a,a)", "F(2,1)", "e(2,2)"] {
            let v = eval_str(&e, t).unwrap();
            assert_eq!(v.render(&a), format!("1*{t}"));
        }
    }
}
