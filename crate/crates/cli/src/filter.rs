//! Predicate expressions over report fields, e.g.
//! `m_wr >= 2 && !distance_regular || (D == d)`.
//!
//! Grammar:
//! `or := and ("||" and)*`, `and := unary ("&&" unary)*`,
//! `unary := "!" unary | cmp`, `cmp := atom (OP atom)?` with OP one of
//! `== != < <= > >=`, `atom := number | true | false | null | field | "(" or ")"`.

use adrg::ClassificationReport;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("filter expression, position {position}: {message}")]
pub struct FilterError {
    pub position: usize,
    pub message: String,
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Value {
    Number(f64),
    Bool(bool),
    Null,
}

impl Value {
    fn truthy(self) -> bool {
        match self {
            Value::Bool(b) => b,
            Value::Number(x) => x != 0.0,
            Value::Null => false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Field {
    N,
    Degree,
    Diameter,
    SmallD,
    Girth,
    Bipartite,
    MPdr,
    MWr,
    DistancePolynomial,
    DistanceRegular,
    SpectrallyMaxDiameter,
}

impl Field {
    fn lookup(name: &str) -> Option<Field> {
        Some(match name {
            "n" => Field::N,
            "degree" | "delta" => Field::Degree,
            "D" | "diameter" => Field::Diameter,
            "d" => Field::SmallD,
            "girth" => Field::Girth,
            "bipartite" => Field::Bipartite,
            "m_pdr" | "mPdr" | "mPartialDR" | "mPartialDr" => Field::MPdr,
            "m_wr" | "mWr" | "mWalkRegular" => Field::MWr,
            "distance_polynomial" | "distancePolynomial" => Field::DistancePolynomial,
            "distance_regular" | "distanceRegular" => Field::DistanceRegular,
            "spectrally_max_diameter" | "spectrallyMaxDiameter" => Field::SpectrallyMaxDiameter,
            _ => return None,
        })
    }

    fn get(self, r: &ClassificationReport) -> Value {
        let num = |x: usize| Value::Number(x as f64);
        match self {
            Field::N => num(r.n),
            Field::Degree => num(r.degree),
            Field::Diameter => num(r.diameter),
            Field::SmallD => num(r.d),
            Field::Girth => r.girth.map_or(Value::Null, num),
            Field::Bipartite => Value::Bool(r.bipartite),
            Field::MPdr => num(r.m_pdr),
            Field::MWr => r.m_wr.map_or(Value::Null, num),
            Field::DistancePolynomial => Value::Bool(r.distance_polynomial),
            Field::DistanceRegular => Value::Bool(r.distance_regular),
            Field::SpectrallyMaxDiameter => Value::Bool(r.spectrally_max_diameter),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Op {
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
}

#[derive(Debug, Clone, PartialEq)]
enum Expr {
    Const(Value),
    Field(Field),
    Not(Box<Expr>),
    And(Box<Expr>, Box<Expr>),
    Or(Box<Expr>, Box<Expr>),
    Cmp(Op, Box<Expr>, Box<Expr>),
}

impl Expr {
    fn eval(&self, r: &ClassificationReport) -> Value {
        match self {
            Expr::Const(v) => *v,
            Expr::Field(f) => f.get(r),
            Expr::Not(e) => Value::Bool(!e.eval(r).truthy()),
            Expr::And(a, b) => Value::Bool(a.eval(r).truthy() && b.eval(r).truthy()),
            Expr::Or(a, b) => Value::Bool(a.eval(r).truthy() || b.eval(r).truthy()),
            Expr::Cmp(op, a, b) => Value::Bool(compare(*op, a.eval(r), b.eval(r))),
        }
    }
}

fn compare(op: Op, a: Value, b: Value) -> bool {
    match (a, b) {
        (Value::Number(x), Value::Number(y)) => match op {
            Op::Eq => x == y,
            Op::Ne => x != y,
            Op::Lt => x < y,
            Op::Le => x <= y,
            Op::Gt => x > y,
            Op::Ge => x >= y,
        },
        (a, b) => match op {
            Op::Eq => a == b,
            Op::Ne => a != b,
            // Ordering against null or booleans is never satisfied.
            _ => false,
        },
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(f64),
    Ident(String),
    Op(&'static str),
    LParen,
    RParen,
}

fn tokenize(src: &str) -> Result<Vec<(usize, Token)>, FilterError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        if c == '(' || c == ')' {
            out.push((start, if c == '(' { Token::LParen } else { Token::RParen }));
            i += 1;
        } else if c.is_ascii_digit() || c == '.' || (c == '-' && bytes.get(i + 1).is_some_and(u8::is_ascii_digit)) {
            i += 1;
            while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'.' || bytes[i] == b'e') {
                i += 1;
            }
            let text = &src[start..i];
            let x = text.parse::<f64>().map_err(|_| FilterError {
                position: start,
                message: format!("bad number {text:?}"),
            })?;
            out.push((start, Token::Num(x)));
        } else if c.is_ascii_alphabetic() || c == '_' {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Token::Ident(src[start..i].to_string())));
        } else {
            let op = ["&&", "||", "==", "!=", "<=", ">=", "<", ">", "!"]
                .into_iter()
                .find(|op| src[i..].starts_with(op))
                .ok_or_else(|| FilterError {
                    position: start,
                    message: format!("unexpected character {c:?}"),
                })?;
            i += op.len();
            out.push((start, Token::Op(op)));
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.len, |(p, _)| *p)
    }

    fn error(&self, message: impl Into<String>) -> FilterError {
        FilterError {
            position: self.offset(),
            message: message.into(),
        }
    }

    fn eat_op(&mut self, op: &str) -> bool {
        if self.peek() == Some(&Token::Op(match op {
            "&&" => "&&",
            "||" => "||",
            _ => "!",
        })) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn or(&mut self) -> Result<Expr, FilterError> {
        let mut lhs = self.and()?;
        while self.eat_op("||") {
            lhs = Expr::Or(Box::new(lhs), Box::new(self.and()?));
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Expr, FilterError> {
        let mut lhs = self.unary()?;
        while self.eat_op("&&") {
            lhs = Expr::And(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, FilterError> {
        if self.eat_op("!") {
            return Ok(Expr::Not(Box::new(self.unary()?)));
        }
        let lhs = self.atom()?;
        let op = match self.peek() {
            Some(Token::Op("==")) => Op::Eq,
            Some(Token::Op("!=")) => Op::Ne,
            Some(Token::Op("<")) => Op::Lt,
            Some(Token::Op("<=")) => Op::Le,
            Some(Token::Op(">")) => Op::Gt,
            Some(Token::Op(">=")) => Op::Ge,
            _ => return Ok(lhs),
        };
        self.pos += 1;
        let rhs = self.atom()?;
        Ok(Expr::Cmp(op, Box::new(lhs), Box::new(rhs)))
    }

    fn atom(&mut self) -> Result<Expr, FilterError> {
        let token = self.peek().cloned().ok_or_else(|| self.error("unexpected end of expression"))?;
        let expr = match token {
            Token::Num(x) => Expr::Const(Value::Number(x)),
            Token::Ident(name) => match name.as_str() {
                "true" => Expr::Const(Value::Bool(true)),
                "false" => Expr::Const(Value::Bool(false)),
                "null" => Expr::Const(Value::Null),
                _ => Expr::Field(Field::lookup(&name).ok_or_else(|| self.error(format!("unknown field {name:?}")))?),
            },
            Token::LParen => {
                self.pos += 1;
                let inner = self.or()?;
                if self.peek() != Some(&Token::RParen) {
                    return Err(self.error("expected ')'"));
                }
                inner
            }
            _ => return Err(self.error("expected a value, field or '('")),
        };
        self.pos += 1;
        Ok(expr)
    }
}

/// A parsed filter.
#[derive(Debug, Clone, PartialEq)]
pub struct Filter {
    source: String,
    expr: Expr,
}

impl Filter {
    pub fn parse(src: &str) -> Result<Filter, FilterError> {
        let mut p = Parser {
            tokens: tokenize(src)?,
            pos: 0,
            len: src.len(),
        };
        let expr = p.or()?;
        if p.pos != p.tokens.len() {
            return Err(p.error("trailing input"));
        }
        Ok(Filter {
            source: src.to_string(),
            expr,
        })
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn matches(&self, r: &ClassificationReport) -> bool {
        self.expr.eval(r).truthy()
    }
}
