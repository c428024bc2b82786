//! Parser for the plain-text algebra definition format.
//!
//! A definition is UTF-8 text, one statement per line (`;` also separates
//! statements, `#` starts a comment):
//!
//! ```text
//! dim 4
//! param alpha = 2 exclude 1
//! e1*e2 = e4
//! e2*e1 = ((1+alpha)/(1-alpha)) e4
//! e2*e2 = e3
//! ```
//!
//! * `dim <n>` — dimension (required, exactly once, before any product).
//! * `param <name> = <rational> [exclude <rational>[, <rational>…]]` —
//!   declares a parameter with its default binding; excluded values are
//!   rejected whether they come from the file or from an override.
//! * `e<i>*e<j> = <term> [± <term>…]` — one product row of the table.
//!   Each term is an optional coefficient followed by a basis symbol
//!   `e<k>`; a coefficient is a rational literal (`3`, `-1/2` via the sign
//!   of the term), a declared parameter name, or a parenthesized rational
//!   expression in declared parameters built from `+ - * /`. A right-hand
//!   side of literal `0` is also accepted. Products not listed are zero;
//!   listing the same pair twice is an error.
//!
//! Parameters are substituted during parsing — the resulting
//! [`StructureConstants`] tensor is fully numeric. Overrides supplied by
//! the caller replace the file's default values before exclusion checks.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use alloc::{format, vec};
use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::{ParameterBinding, StructureConstants};
use crate::rational::{as_usize, format_rat, Rat};

/// Largest accepted dimension. The solvers build `2n³ × n²` systems, so
/// this bound keeps hostile inputs from allocating gigabytes.
pub const MAX_DIM: usize = 16;

/// What went wrong while parsing.
#[derive(Debug, Clone, PartialEq)]
pub enum ParseErrorKind {
    /// Malformed syntax; the message names the offending construct.
    Syntax(String),
    /// A name appeared in an expression without a `param` declaration.
    UnknownSymbol(String),
    /// A basis index outside `1..=dim`.
    IndexOutOfRange { index: usize, dim: usize },
    /// The same product `e<i>*e<j>` was defined twice (1-based).
    DuplicateProduct { i: usize, j: usize },
    /// The same parameter was declared twice.
    DuplicateParam(String),
    /// More than one `dim` statement.
    DuplicateDim,
    /// No `dim` statement in the whole definition.
    MissingDim,
    /// Dimension outside `1..=MAX_DIM`.
    DimOutOfRange(usize),
    /// An override named a parameter the definition never declares.
    UnboundParameter(String),
    /// A parameter was bound to one of its excluded values.
    ExcludedParameter { name: String, value: Rat },
    /// A coefficient expression divided by zero.
    DivisionByZero,
}

/// A parse failure with its 1-based source position (line 0 marks
/// file-level problems such as a missing `dim`).
#[derive(Debug, Clone, PartialEq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "definition: ")?;
        } else {
            write!(f, "line {}, column {}: ", self.line, self.col)?;
        }
        match &self.kind {
            ParseErrorKind::Syntax(msg) => write!(f, "{msg}"),
            ParseErrorKind::UnknownSymbol(name) => {
                write!(f, "unknown symbol '{name}' (declare it with 'param')")
            }
            ParseErrorKind::IndexOutOfRange { index, dim } => {
                write!(f, "basis index e{index} out of range 1..={dim}")
            }
            ParseErrorKind::DuplicateProduct { i, j } => {
                write!(f, "product e{i}*e{j} defined twice")
            }
            ParseErrorKind::DuplicateParam(name) => {
                write!(f, "parameter '{name}' declared twice")
            }
            ParseErrorKind::DuplicateDim => write!(f, "dim declared twice"),
            ParseErrorKind::MissingDim => write!(f, "missing 'dim <n>' statement"),
            ParseErrorKind::DimOutOfRange(n) => {
                write!(f, "dim {n} outside supported range 1..={MAX_DIM}")
            }
            ParseErrorKind::UnboundParameter(name) => {
                write!(f, "override for undeclared parameter '{name}'")
            }
            ParseErrorKind::ExcludedParameter { name, value } => {
                write!(
                    f,
                    "parameter '{name}' bound to excluded value {}",
                    format_rat(value)
                )
            }
            ParseErrorKind::DivisionByZero => write!(f, "division by zero in coefficient"),
        }
    }
}

/// True when the error is about parameter binding (callers map these to a
/// different exit code than malformed input).
pub fn is_parameter_error(e: &ParseError) -> bool {
    matches!(
        e.kind,
        ParseErrorKind::UnboundParameter(_) | ParseErrorKind::ExcludedParameter { .. }
    )
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Basis(usize),
    Sym(char),
}

struct Spanned {
    col: usize,
    tok: Tok,
}

fn lex_line(line_no: usize, line: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<char> = line.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c == '#' {
            break;
        }
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            let value: BigInt = digits.parse().expect("digit strings parse");
            out.push(Spanned {
                col,
                tok: Tok::Int(value),
            });
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            // `e` followed by digits is a basis symbol, not an identifier.
            let tok = match word.strip_prefix('e') {
                Some(rest) if !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()) => {
                    match rest.parse::<usize>() {
                        Ok(ix) => Tok::Basis(ix),
                        Err(_) => {
                            return Err(ParseError {
                                line: line_no,
                                col,
                                kind: ParseErrorKind::Syntax(format!(
                                    "basis index '{word}' is too large"
                                )),
                            })
                        }
                    }
                }
                _ => Tok::Ident(word),
            };
            out.push(Spanned { col, tok });
            continue;
        }
        if "*=+-/(),;".contains(c) {
            out.push(Spanned {
                col,
                tok: Tok::Sym(c),
            });
            i += 1;
            continue;
        }
        return Err(ParseError {
            line: line_no,
            col,
            kind: ParseErrorKind::Syntax(format!("unexpected character '{c}'")),
        });
    }
    Ok(out)
}

/// Cursor over one statement's tokens.
struct Cursor<'a> {
    line: usize,
    toks: &'a [Spanned],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<&'a Tok> {
        self.toks.get(self.pos).map(|s| &s.tok)
    }

    fn col(&self) -> usize {
        self.toks
            .get(self.pos)
            .or_else(|| self.toks.last())
            .map_or(1, |s| s.col)
    }

    fn next(&mut self) -> Option<&'a Tok> {
        let t = self.toks.get(self.pos).map(|s| &s.tok);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn err(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            line: self.line,
            col: self.col(),
            kind,
        }
    }

    fn syntax(&self, msg: &str) -> ParseError {
        self.err(ParseErrorKind::Syntax(msg.to_string()))
    }

    fn expect_sym(&mut self, c: char) -> Result<(), ParseError> {
        match self.peek() {
            Some(Tok::Sym(s)) if *s == c => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.syntax(&format!("expected '{c}'"))),
        }
    }

    fn at_end(&self) -> bool {
        self.pos == self.toks.len()
    }
}

/// Parameter environment while parsing.
struct Env {
    values: BTreeMap<String, Rat>,
}

/// Parses a definition with the file's own parameter bindings.
pub fn parse_algebra(text: &str) -> Result<StructureConstants, ParseError> {
    parse_algebra_with_params(text, &[])
}

/// Parses a definition, overriding declared parameter defaults by name.
///
/// Every override must name a parameter the definition declares; the
/// final binding (override or default) must avoid the declared excluded
/// values. If the same name is overridden twice the last value wins.
pub fn parse_algebra_with_params(
    text: &str,
    overrides: &[(String, Rat)],
) -> Result<StructureConstants, ParseError> {
    let mut override_map: BTreeMap<&str, &Rat> = BTreeMap::new();
    for (name, value) in overrides {
        override_map.insert(name.as_str(), value);
    }
    let mut used_overrides: BTreeMap<&str, bool> =
        override_map.keys().map(|&k| (k, false)).collect();

    let mut dim: Option<usize> = None;
    let mut gamma: Vec<Rat> = Vec::new();
    let mut defined: Vec<(usize, usize)> = Vec::new();
    let mut params: Vec<ParameterBinding> = Vec::new();
    let mut env = Env {
        values: BTreeMap::new(),
    };

    for (ix, raw_line) in text.lines().enumerate() {
        let line_no = ix + 1;
        let toks = lex_line(line_no, raw_line)?;
        // Split the token stream on ';' into statements.
        for chunk in toks.split(|s| s.tok == Tok::Sym(';')) {
            if chunk.is_empty() {
                continue;
            }
            let mut cur = Cursor {
                line: line_no,
                toks: chunk,
                pos: 0,
            };
            match cur.peek() {
                Some(Tok::Ident(word)) if word == "dim" => {
                    cur.next();
                    if dim.is_some() {
                        return Err(cur.err(ParseErrorKind::DuplicateDim));
                    }
                    let n = match cur.next() {
                        Some(Tok::Int(v)) => {
                            let as_rat = Rat::from_integer(v.clone());
                            as_usize(&as_rat).unwrap_or(usize::MAX)
                        }
                        _ => return Err(cur.syntax("expected dimension after 'dim'")),
                    };
                    if n == 0 || n > MAX_DIM {
                        return Err(ParseError {
                            line: line_no,
                            col: 1,
                            kind: ParseErrorKind::DimOutOfRange(n),
                        });
                    }
                    if !cur.at_end() {
                        return Err(cur.syntax("unexpected tokens after dimension"));
                    }
                    dim = Some(n);
                    gamma = vec![Rat::zero(); n * n * n];
                }
                Some(Tok::Ident(word)) if word == "param" => {
                    cur.next();
                    let binding = parse_param_statement(
                        &mut cur,
                        &override_map,
                        &mut used_overrides,
                        &params,
                    )?;
                    env.values
                        .insert(binding.name.clone(), binding.value.clone());
                    params.push(binding);
                }
                Some(Tok::Basis(_)) => {
                    let Some(n) = dim else {
                        return Err(cur.syntax("products must come after the 'dim' statement"));
                    };
                    parse_product_statement(&mut cur, n, &env, &mut gamma, &mut defined)?;
                }
                _ => {
                    return Err(cur
                        .syntax("expected 'dim', 'param', or a product statement 'e<i>*e<j> = …'"))
                }
            }
        }
    }

    let Some(n) = dim else {
        return Err(ParseError {
            line: 0,
            col: 0,
            kind: ParseErrorKind::MissingDim,
        });
    };

    for (name, used) in used_overrides {
        if !used {
            return Err(ParseError {
                line: 0,
                col: 0,
                kind: ParseErrorKind::UnboundParameter(name.to_string()),
            });
        }
    }

    Ok(StructureConstants::new(String::new(), n, gamma, params))
}

fn parse_param_statement(
    cur: &mut Cursor<'_>,
    overrides: &BTreeMap<&str, &Rat>,
    used: &mut BTreeMap<&str, bool>,
    existing: &[ParameterBinding],
) -> Result<ParameterBinding, ParseError> {
    let name = match cur.peek() {
        Some(Tok::Ident(w)) if w != "dim" && w != "param" && w != "exclude" => {
            let w = w.clone();
            cur.next();
            w
        }
        Some(Tok::Basis(_)) => {
            return Err(cur.syntax("parameter names may not look like basis symbols e<k>"))
        }
        _ => return Err(cur.syntax("expected parameter name after 'param'")),
    };
    if existing.iter().any(|p| p.name == name) {
        return Err(cur.err(ParseErrorKind::DuplicateParam(name)));
    }
    cur.expect_sym('=')?;
    let default = parse_signed_rational(cur)?;
    let mut excluded = Vec::new();
    if let Some(Tok::Ident(w)) = cur.peek() {
        if w == "exclude" {
            cur.next();
            loop {
                excluded.push(parse_signed_rational(cur)?);
                match cur.peek() {
                    Some(Tok::Sym(',')) => {
                        cur.next();
                    }
                    _ => break,
                }
            }
        }
    }
    if !cur.at_end() {
        return Err(cur.syntax("unexpected tokens after parameter declaration"));
    }
    let value = match overrides.get(name.as_str()) {
        Some(&v) => {
            if let Some(flag) = used.get_mut(name.as_str()) {
                *flag = true;
            }
            v.clone()
        }
        None => default,
    };
    if excluded.contains(&value) {
        return Err(cur.err(ParseErrorKind::ExcludedParameter { name, value }));
    }
    Ok(ParameterBinding {
        name,
        value,
        excluded,
    })
}

/// `("-")? INT ("/" INT)?` — the literal rational form used by `param`.
fn parse_signed_rational(cur: &mut Cursor<'_>) -> Result<Rat, ParseError> {
    let negative = matches!(cur.peek(), Some(Tok::Sym('-')));
    if negative {
        cur.next();
    }
    let numer = match cur.next() {
        Some(Tok::Int(v)) => v.clone(),
        _ => return Err(cur.syntax("expected a rational literal")),
    };
    let denom = if matches!(cur.peek(), Some(Tok::Sym('/'))) {
        cur.next();
        match cur.next() {
            Some(Tok::Int(v)) => v.clone(),
            _ => return Err(cur.syntax("expected denominator after '/'")),
        }
    } else {
        BigInt::from(1)
    };
    if denom.is_zero() {
        return Err(cur.err(ParseErrorKind::DivisionByZero));
    }
    let mut value = Rat::new(numer, denom);
    if negative {
        value = -value;
    }
    Ok(value)
}

fn parse_product_statement(
    cur: &mut Cursor<'_>,
    dim: usize,
    env: &Env,
    gamma: &mut [Rat],
    defined: &mut Vec<(usize, usize)>,
) -> Result<(), ParseError> {
    let i = parse_basis_index(cur, dim)?;
    cur.expect_sym('*')?;
    let j = parse_basis_index(cur, dim)?;
    cur.expect_sym('=')?;
    if defined.contains(&(i, j)) {
        return Err(cur.err(ParseErrorKind::DuplicateProduct { i: i + 1, j: j + 1 }));
    }
    defined.push((i, j));

    // Literal `0` right-hand side: the row stays zero.
    if matches!(cur.peek(), Some(Tok::Int(v)) if v.is_zero()) && cur.toks.len() == cur.pos + 1 {
        cur.next();
        return Ok(());
    }

    // Signed sum of terms.
    let mut negative = match cur.peek() {
        Some(Tok::Sym('-')) => {
            cur.next();
            true
        }
        Some(Tok::Sym('+')) => {
            cur.next();
            false
        }
        _ => false,
    };
    loop {
        let (coeff, k) = parse_term(cur, dim, env)?;
        let signed = if negative { -coeff } else { coeff };
        gamma[(i * dim + j) * dim + k] += signed;
        match cur.peek() {
            Some(Tok::Sym('+')) => {
                cur.next();
                negative = false;
            }
            Some(Tok::Sym('-')) => {
                cur.next();
                negative = true;
            }
            None => return Ok(()),
            _ => return Err(cur.syntax("expected '+', '-', or end of statement")),
        }
    }
}

fn parse_basis_index(cur: &mut Cursor<'_>, dim: usize) -> Result<usize, ParseError> {
    match cur.peek() {
        Some(Tok::Basis(ix)) => {
            let ix = *ix;
            if ix == 0 || ix > dim {
                return Err(cur.err(ParseErrorKind::IndexOutOfRange { index: ix, dim }));
            }
            cur.next();
            Ok(ix - 1)
        }
        _ => Err(cur.syntax("expected a basis symbol e<k>")),
    }
}

/// One term: `[coeff] e<k>` where coeff is a literal, a parameter name,
/// or a parenthesized expression.
fn parse_term(cur: &mut Cursor<'_>, dim: usize, env: &Env) -> Result<(Rat, usize), ParseError> {
    let coeff = match cur.peek() {
        Some(Tok::Basis(_)) => Rat::from_integer(1.into()),
        Some(Tok::Int(_)) => {
            let numer = match cur.next() {
                Some(Tok::Int(v)) => v.clone(),
                _ => unreachable!(),
            };
            if matches!(cur.peek(), Some(Tok::Sym('/'))) {
                cur.next();
                let denom = match cur.next() {
                    Some(Tok::Int(v)) => v.clone(),
                    _ => return Err(cur.syntax("expected denominator after '/'")),
                };
                if denom.is_zero() {
                    return Err(cur.err(ParseErrorKind::DivisionByZero));
                }
                Rat::new(numer, denom)
            } else {
                Rat::from_integer(numer)
            }
        }
        Some(Tok::Ident(name)) => {
            let name = name.clone();
            cur.next();
            match env.values.get(&name) {
                Some(v) => v.clone(),
                None => return Err(cur.err(ParseErrorKind::UnknownSymbol(name))),
            }
        }
        Some(Tok::Sym('(')) => parse_paren_expr(cur, env)?,
        _ => return Err(cur.syntax("expected a coefficient or basis symbol")),
    };
    let k = parse_basis_index(cur, dim)?;
    Ok((coeff, k))
}

/// `"(" expr ")"` with full `+ - * /` precedence and unary minus inside.
fn parse_paren_expr(cur: &mut Cursor<'_>, env: &Env) -> Result<Rat, ParseError> {
    cur.expect_sym('(')?;
    let value = parse_expr(cur, env)?;
    cur.expect_sym(')')?;
    Ok(value)
}

fn parse_expr(cur: &mut Cursor<'_>, env: &Env) -> Result<Rat, ParseError> {
    let mut acc = parse_mul_expr(cur, env)?;
    loop {
        match cur.peek() {
            Some(Tok::Sym('+')) => {
                cur.next();
                acc += parse_mul_expr(cur, env)?;
            }
            Some(Tok::Sym('-')) => {
                cur.next();
                acc -= parse_mul_expr(cur, env)?;
            }
            _ => return Ok(acc),
        }
    }
}

fn parse_mul_expr(cur: &mut Cursor<'_>, env: &Env) -> Result<Rat, ParseError> {
    let mut acc = parse_unary(cur, env)?;
    loop {
        match cur.peek() {
            Some(Tok::Sym('*')) => {
                cur.next();
                acc *= parse_unary(cur, env)?;
            }
            Some(Tok::Sym('/')) => {
                cur.next();
                let col_before = cur.col();
                let rhs = parse_unary(cur, env)?;
                if rhs.is_zero() {
                    return Err(ParseError {
                        line: cur.line,
                        col: col_before,
                        kind: ParseErrorKind::DivisionByZero,
                    });
                }
                acc /= rhs;
            }
            _ => return Ok(acc),
        }
    }
}

fn parse_unary(cur: &mut Cursor<'_>, env: &Env) -> Result<Rat, ParseError> {
    match cur.peek() {
        Some(Tok::Sym('-')) => {
            cur.next();
            Ok(-parse_unary(cur, env)?)
        }
        Some(Tok::Sym('(')) => parse_paren_expr(cur, env),
        Some(Tok::Int(_)) => {
            let v = match cur.next() {
                Some(Tok::Int(v)) => v.clone(),
                _ => unreachable!(),
            };
            Ok(Rat::from_integer(v))
        }
        Some(Tok::Ident(name)) => {
            let name = name.clone();
            match env.values.get(&name) {
                Some(v) => {
                    cur.next();
                    Ok(v.clone())
                }
                None => Err(cur.err(ParseErrorKind::UnknownSymbol(name))),
            }
        }
        Some(Tok::Basis(_)) => Err(cur.syntax("basis symbols cannot appear inside coefficients")),
        _ => Err(cur.syntax("expected a value")),
    }
}

/// Serializes an algebra back to definition text.
///
/// Parameters are already substituted into the tensor, so the output lists
/// the numeric table (bindings are recorded as comments); re-parsing
/// reproduces the tensor exactly.
pub fn to_definition_text(sc: &StructureConstants) -> String {
    let mut out = String::new();
    for p in sc.params() {
        out.push_str(&format!("# bound: {} = {}\n", p.name, format_rat(&p.value)));
    }
    out.push_str(&format!("dim {}\n", sc.dim()));
    for i in 0..sc.dim() {
        for j in 0..sc.dim() {
            let row = sc.basis_product(i, j);
            if row.iter().all(Zero::is_zero) {
                continue;
            }
            out.push_str(&format!("e{}*e{} =", i + 1, j + 1));
            let mut first = true;
            for (k, c) in row.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let formatted = format_rat(c);
                let (sign, magnitude) = match formatted.strip_prefix('-') {
                    Some(rest) => ('-', rest.to_string()),
                    None => ('+', formatted),
                };
                if first {
                    out.push(' ');
                    if sign == '-' {
                        out.push_str("- ");
                    }
                    first = false;
                } else if sign == '-' {
                    out.push_str(" - ");
                } else {
                    out.push_str(" + ");
                }
                if magnitude != "1" {
                    out.push_str(&magnitude);
                    out.push(' ');
                }
                out.push_str(&format!("e{}", k + 1));
            }
            out.push('\n');
        }
    }
    out
}
