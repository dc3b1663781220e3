//! Text form of monomials and ideals.
//!
//! ```text
//! ideal  := '(' term (',' term)* ')' | '(' '0' ')'
//! term   := factor (('*' | ws) factor)*
//! factor := var ('^' uint)? | '1'
//! var    := 'x' | 'y' | 'z' | 'w' | 'x' uint
//! ```
//!
//! Up to four variables are named `x, y, z, w`; beyond that they are
//! `x1 .. xd`. Repeated variables in a term multiply.

use std::fmt;

use crate::error::{Error, Result};
use crate::exponent::{ExponentVector, MAX_EXPONENT};
use crate::ideal::{MonomialIdeal, PurePowerIdeal};

const LETTERS: [char; 4] = ['x', 'y', 'z', 'w'];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VarStyle {
    Letters,
    Indexed,
}

impl VarStyle {
    pub fn default_for(dim: usize) -> Self {
        if dim <= LETTERS.len() {
            VarStyle::Letters
        } else {
            VarStyle::Indexed
        }
    }

    fn effective(self, dim: usize) -> Self {
        if dim > LETTERS.len() {
            VarStyle::Indexed
        } else {
            self
        }
    }
}

fn var_name(i: usize, style: VarStyle) -> String {
    match style {
        VarStyle::Letters => LETTERS[i].to_string(),
        VarStyle::Indexed => format!("x{}", i + 1),
    }
}

pub fn format_monomial(gamma: &ExponentVector, style: VarStyle) -> String {
    if gamma.is_zero() {
        return "1".into();
    }
    let style = style.effective(gamma.dim());
    gamma
        .support()
        .map(|i| match gamma.get(i) {
            1 => var_name(i, style),
            e => format!("{}^{e}", var_name(i, style)),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn format_ideal(ideal: &MonomialIdeal, style: VarStyle) -> String {
    if ideal.is_zero() {
        return "(0)".into();
    }
    // largest first in lex order, so x-heavy terms lead
    let terms: Vec<String> = ideal
        .generators()
        .iter()
        .rev()
        .map(|g| format_monomial(g, style))
        .collect();
    format!("({})", terms.join(", "))
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_ideal(self, VarStyle::default_for(self.dim())))
    }
}

impl fmt::Display for PurePowerIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_ideal().fmt(f)
    }
}

/// A parsed ideal together with the conventions of its source text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealExpression {
    pub source: String,
    pub dim: usize,
    pub style: VarStyle,
    /// Generators as written, before minimalization.
    pub generators: Vec<ExponentVector>,
    pub ideal: MonomialIdeal,
}

impl IdealExpression {
    pub fn format(&self, ideal: &MonomialIdeal) -> String {
        format_ideal(ideal, self.style)
    }

    pub fn format_monomial(&self, gamma: &ExponentVector) -> String {
        format_monomial(gamma, self.style)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Var {
    Letter(usize),
    Indexed(usize),
}

type Term = Vec<(Var, u32, usize)>;

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    _src: &'a str,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser {
            chars: src.chars().collect(),
            pos: 0,
            _src: src,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) -> bool {
        let start = self.pos;
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
        self.pos > start
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        match self.peek() {
            Some(found) if found == c => {
                self.pos += 1;
                Ok(())
            }
            Some(found) => Err(Error::parse(
                self.pos,
                format!("expected `{c}`, found `{found}`"),
            )),
            None => Err(Error::parse(
                self.pos,
                format!("expected `{c}`, found end of input"),
            )),
        }
    }

    fn uint(&mut self) -> Result<u32> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::parse(start, "expected a non-negative integer"));
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse::<u32>()
            .ok()
            .filter(|&v| v <= MAX_EXPONENT)
            .ok_or_else(|| Error::parse(start, format!("integer `{text}` is too large")))
    }

    fn starts_factor(&self) -> bool {
        self.peek().is_some_and(|c| c.is_ascii_alphanumeric())
    }

    /// `None` for the constant factor `1`.
    fn factor(&mut self) -> Result<Option<(Var, u32, usize)>> {
        self.skip_ws();
        let start = self.pos;
        let Some(c) = self.peek() else {
            return Err(Error::parse(
                start,
                "expected a variable, found end of input",
            ));
        };
        let var = if c == '1'
            && !self
                .chars
                .get(self.pos + 1)
                .is_some_and(|d| d.is_ascii_digit())
        {
            self.pos += 1;
            return Ok(None);
        } else if c == 'x'
            && self
                .chars
                .get(self.pos + 1)
                .is_some_and(|d| d.is_ascii_digit())
        {
            self.pos += 1;
            let k = self.uint()? as usize;
            if k == 0 {
                return Err(Error::UnknownVariable {
                    name: "x0".into(),
                    position: start,
                });
            }
            Var::Indexed(k - 1)
        } else if let Some(idx) = LETTERS.iter().position(|&l| l == c) {
            self.pos += 1;
            Var::Letter(idx)
        } else if c.is_alphabetic() {
            let mut name = String::new();
            while self.peek().is_some_and(char::is_alphanumeric) {
                name.push(self.peek().unwrap());
                self.pos += 1;
            }
            return Err(Error::UnknownVariable {
                name,
                position: start,
            });
        } else {
            return Err(Error::parse(
                start,
                format!("expected a variable, found `{c}`"),
            ));
        };
        let save = self.pos;
        self.skip_ws();
        let exp = if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            self.uint()?
        } else {
            self.pos = save;
            1
        };
        Ok(Some((var, exp, start)))
    }

    fn term(&mut self) -> Result<Term> {
        let mut factors = Vec::new();
        factors.extend(self.factor()?);
        loop {
            let save = self.pos;
            let had_ws = self.skip_ws();
            if self.peek() == Some('*') {
                self.pos += 1;
                factors.extend(self.factor()?);
            } else if had_ws && self.starts_factor() {
                factors.extend(self.factor()?);
            } else {
                self.pos = save;
                return Ok(factors);
            }
        }
    }

    fn end(&mut self) -> Result<()> {
        self.skip_ws();
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(Error::parse(
                self.pos,
                format!("unexpected `{c}` after the end"),
            )),
        }
    }
}

/// Resolves variables to a common style and dimension and builds exponent vectors.
fn assemble(terms: &[Term], dim: Option<usize>) -> Result<(usize, VarStyle, Vec<ExponentVector>)> {
    let mut style: Option<VarStyle> = None;
    let mut needed = 0usize;
    for &(var, _, pos) in terms.iter().flatten() {
        let (this, idx) = match var {
            Var::Letter(i) => (VarStyle::Letters, i),
            Var::Indexed(i) => (VarStyle::Indexed, i),
        };
        match style {
            None => style = Some(this),
            Some(s) if s != this => {
                return Err(Error::parse(
                    pos,
                    "cannot mix named (x, y, z, w) and indexed (x1, x2, ...) variables",
                ))
            }
            _ => {}
        }
        needed = needed.max(idx + 1);
    }
    let dim = match dim {
        Some(0) => return Err(Error::ZeroDimension),
        Some(d) if d < needed => {
            return Err(Error::InvalidArgument(format!(
                "expression uses {needed} variables but only {d} were declared"
            )))
        }
        Some(d) => d,
        None if needed == 0 => {
            return Err(Error::parse(
                0,
                "cannot infer the number of variables; declare it",
            ))
        }
        None => needed,
    };
    let style = style.unwrap_or_else(|| VarStyle::default_for(dim));
    let mut vectors = Vec::with_capacity(terms.len());
    for term in terms {
        let mut v = vec![0u64; dim];
        for &(var, exp, _) in term {
            let i = match var {
                Var::Letter(i) | Var::Indexed(i) => i,
            };
            v[i] += exp as u64;
        }
        let v = v
            .into_iter()
            .map(|e| {
                if e <= MAX_EXPONENT as u64 {
                    Ok(e as u32)
                } else {
                    Err(Error::Overflow)
                }
            })
            .collect::<Result<Vec<u32>>>()?;
        vectors.push(ExponentVector::new(v)?);
    }
    Ok((dim, style, vectors))
}

pub fn parse_ideal(text: &str) -> Result<IdealExpression> {
    parse_ideal_with(text, None)
}

/// Parses an ideal, optionally fixing the number of variables.
pub fn parse_ideal_with(text: &str, dim: Option<usize>) -> Result<IdealExpression> {
    if text.trim().is_empty() {
        return Err(Error::parse(0, "empty input"));
    }
    let mut p = Parser::new(text);
    p.expect('(')?;
    p.skip_ws();
    let mut terms = Vec::new();
    let zero = p.peek() == Some('0') && {
        let save = p.pos;
        p.pos += 1;
        p.skip_ws();
        let is_close = p.peek() == Some(')');
        p.pos = save;
        is_close
    };
    if zero {
        p.pos += 1;
    } else {
        terms.push(p.term()?);
        loop {
            p.skip_ws();
            if p.peek() == Some(',') {
                p.pos += 1;
                terms.push(p.term()?);
            } else {
                break;
            }
        }
    }
    p.expect(')')?;
    p.end()?;
    let (dim, style, generators) = assemble(&terms, dim)?;
    let ideal = MonomialIdeal::new(dim, generators.clone())?;
    Ok(IdealExpression {
        source: text.to_string(),
        dim,
        style,
        generators,
        ideal,
    })
}

/// Parses a single monomial such as `x*y^2` or `x1 x3^2`.
pub fn parse_monomial(text: &str, dim: Option<usize>) -> Result<ExponentVector> {
    if text.trim().is_empty() {
        return Err(Error::parse(0, "empty input"));
    }
    let mut p = Parser::new(text);
    let term = p.term()?;
    p.end()?;
    let (_, _, mut v) = assemble(&[term], dim)?;
    Ok(v.remove(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector::new(v.to_vec()).unwrap()
    }

    #[test]
    fn parse_examples() {
        let e = parse_ideal("(x^2 y^5, x^4 y^3, x^5 y)").unwrap();
        assert_eq!(e.dim, 2);
        assert_eq!(
            e.ideal.generators(),
            &[ev(&[2, 5]), ev(&[4, 3]), ev(&[5, 1])]
        );

        let e = parse_ideal("(x y, z^2)").unwrap();
        assert_eq!(e.dim, 3);
        assert_eq!(e.generators, vec![ev(&[1, 1, 0]), ev(&[0, 0, 2])]);

        let e = parse_ideal("(x^2 x)").unwrap();
        assert_eq!(e.dim, 1);
        assert_eq!(e.generators, vec![ev(&[3])]);
    }

    #[test]
    fn star_and_spacing_variants() {
        let a = parse_ideal("(x^2*y^5,x^4*y^3,x^5*y)").unwrap().ideal;
        let b = parse_ideal("  ( x ^ 2 * y^5 ,x^4 y^3 , x^5  y )  ")
            .unwrap()
            .ideal;
        assert_eq!(a, b);
    }

    #[test]
    fn indexed_variables() {
        let e = parse_ideal("(x1^2 x5, x3)").unwrap();
        assert_eq!(e.dim, 5);
        assert_eq!(e.style, VarStyle::Indexed);
        assert_eq!(
            e.generators,
            vec![ev(&[2, 0, 0, 0, 1]), ev(&[0, 0, 1, 0, 0])]
        );
        assert_eq!(e.format(&e.ideal), "(x1^2 x5, x3)");
        assert_eq!(
            parse_ideal("(x1, x2)")
                .unwrap()
                .format(&parse_ideal("(x1, x2)").unwrap().ideal),
            "(x1, x2)"
        );
    }

    #[test]
    fn declared_dimension() {
        let e = parse_ideal_with("(x^2)", Some(3)).unwrap();
        assert_eq!(e.ideal.generators(), &[ev(&[2, 0, 0])]);
        assert!(matches!(
            parse_ideal_with("(z)", Some(2)),
            Err(Error::InvalidArgument(_))
        ));
        let zero = parse_ideal_with("(0)", Some(2)).unwrap();
        assert!(zero.ideal.is_zero());
        let unit = parse_ideal_with("(1)", Some(2)).unwrap();
        assert!(unit.ideal.is_unit());
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_ideal(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_ideal("(x^2"), Err(Error::Parse { .. })));
        assert!(matches!(parse_ideal("(x,)"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_ideal("(x) y"),
            Err(Error::Parse { position: 4, .. })
        ));
        assert!(matches!(
            parse_ideal("(x, q^2)"),
            Err(Error::UnknownVariable { position: 4, .. })
        ));
        assert!(matches!(
            parse_ideal("(x0)"),
            Err(Error::UnknownVariable { .. })
        ));
        assert!(matches!(parse_ideal("(x, x2)"), Err(Error::Parse { .. })));
        assert!(matches!(parse_ideal("(1)"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_ideal("(x^99999999999)"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn printing() {
        let i = MonomialIdeal::new(2, [ev(&[7, 6])]).unwrap();
        assert_eq!(i.to_string(), "(x^7 y^6)");
        let j = parse_ideal("(x y, z^2)").unwrap().ideal;
        assert_eq!(j.to_string(), "(x y, z^2)");
        assert_eq!(MonomialIdeal::zero(2).unwrap().to_string(), "(0)");
        assert_eq!(MonomialIdeal::unit(2).unwrap().to_string(), "(1)");
        assert_eq!(
            format_monomial(&ev(&[0, 0, 0, 0, 3]), VarStyle::Letters),
            "x5^3"
        );
    }

    #[test]
    fn monomials() {
        assert_eq!(parse_monomial("x*y", Some(2)).unwrap(), ev(&[1, 1]));
        assert_eq!(parse_monomial("z^2", None).unwrap(), ev(&[0, 0, 2]));
        assert!(parse_monomial("x,y", Some(2)).is_err());
    }
}
