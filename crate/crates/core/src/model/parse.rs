//! Text grammar for polynomials and factored defining polynomials.
//!
//! Polynomial expressions use `+`, `-`, `*` (or juxtaposition), `^` with a
//! non-negative integer exponent, division by a nonzero number, parentheses,
//! integer or `p/q` literals and
//! the declared variable names. Whitespace is ignored; a run of letters is
//! split greedily into declared names, so `xyw` reads as `x*y*w`.
//!
//! A defining polynomial is a product of factors `(<linear form>)^k` or
//! `<variable>^k`; nonzero constant factors are accepted and ignored.

use num_traits::{One, Zero};

use super::arrangement::Multiarrangement;
use crate::error::{Error, Result};
use crate::kernel::{parse_rational, Homogeneity, Poly, Rational};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Rational),
    Var(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    start: usize,
    end: usize,
}

fn tokenize(text: &str, vars: &[String]) -> Result<Vec<Token>> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let end_of = |k: usize| chars.get(k).map_or(text.len(), |c| c.0);
    while i < chars.len() {
        let (pos, c) = chars[i];
        let simple = match c {
            '+' => Some(Tok::Plus),
            '-' | '\u{2212}' => Some(Tok::Minus),
            '*' | '\u{00b7}' | '\u{22c5}' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = simple {
            out.push(Token {
                tok,
                start: pos,
                end: end_of(i + 1),
            });
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let mut j = i;
            while j < chars.len() && chars[j].1.is_ascii_digit() {
                j += 1;
            }
            if j + 1 < chars.len() && chars[j].1 == '/' && chars[j + 1].1.is_ascii_digit() {
                j += 1;
                while j < chars.len() && chars[j].1.is_ascii_digit() {
                    j += 1;
                }
            }
            let lit = &text[pos..end_of(j)];
            out.push(Token {
                tok: Tok::Num(parse_rational(lit)?),
                start: pos,
                end: end_of(j),
            });
            i = j;
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let mut j = i;
            while j < chars.len() && (chars[j].1.is_alphanumeric() || chars[j].1 == '_') {
                j += 1;
            }
            let word_start = pos;
            let word = &text[word_start..end_of(j)];
            let mut offset = 0;
            while offset < word.len() {
                let rest = &word[offset..];
                let best = vars
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_empty() && rest.starts_with(v.as_str()))
                    .max_by_key(|(_, v)| v.len());
                match best {
                    Some((k, v)) => {
                        out.push(Token {
                            tok: Tok::Var(k),
                            start: word_start + offset,
                            end: word_start + offset + v.len(),
                        });
                        offset += v.len();
                    }
                    None => {
                        return Err(Error::Parse(format!(
                            "unknown variable `{rest}` at offset {} (declared: {})",
                            word_start + offset,
                            vars.join(", ")
                        )))
                    }
                }
            }
            i = j;
            continue;
        }
        return Err(Error::Parse(format!("unexpected character `{c}` at offset {pos}")));
    }
    Ok(out)
}

struct Parser<'a> {
    text: &'a str,
    toks: Vec<Token>,
    pos: usize,
    nvars: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.text.len(), |t| t.start)
    }

    fn err<T>(&self, what: &str) -> Result<T> {
        Err(Error::Parse(format!("{what} at offset {}", self.offset())))
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = Poly::zero(self.nvars);
        let mut negate = false;
        match self.peek() {
            Some(Tok::Plus) => self.pos += 1,
            Some(Tok::Minus) => {
                self.pos += 1;
                negate = true;
            }
            _ => {}
        }
        loop {
            let t = self.term()?;
            acc = if negate { &acc - &t } else { &acc + &t };
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    negate = false;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    negate = true;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Some(Tok::Num(_) | Tok::Var(_) | Tok::LParen))
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?.0;
        loop {
            if self.peek() == Some(&Tok::Slash) {
                self.pos += 1;
                match self.peek().cloned() {
                    Some(Tok::Num(c)) if !c.is_zero() => {
                        self.pos += 1;
                        acc = acc.scale(&(Rational::one() / c));
                        continue;
                    }
                    _ => return self.err("expected a nonzero number after `/`"),
                }
            }
            if self.peek() == Some(&Tok::Star) {
                self.pos += 1;
            } else if !self.starts_factor() {
                return Ok(acc);
            }
            acc = &acc * &self.factor()?.0;
        }
    }

    /// Parses `atom [^ k]`, returning the base, the exponent and the byte
    /// span of the factor.
    fn factor_parts(&mut self) -> Result<(Poly, u32, (usize, usize))> {
        let start = self.offset();
        let base = match self.peek().cloned() {
            Some(Tok::Num(c)) => {
                self.pos += 1;
                Poly::constant(self.nvars, c)
            }
            Some(Tok::Var(k)) => {
                self.pos += 1;
                Poly::var(self.nvars, k)
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.err("expected `)`");
                }
                self.pos += 1;
                inner
            }
            _ => return self.err("expected a number, variable or `(`"),
        };
        let mut exp = 1;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Tok::Num(n)) if n.is_integer() && n >= Rational::zero() => {
                    self.pos += 1;
                    exp = n
                        .to_integer()
                        .try_into()
                        .map_err(|_| Error::Parse("exponent too large".into()))?;
                }
                _ => return self.err("expected a non-negative integer exponent"),
            }
        }
        let end = self.toks[self.pos - 1].end;
        Ok((base, exp, (start, end)))
    }

    fn factor(&mut self) -> Result<(Poly, (usize, usize))> {
        let (base, exp, span) = self.factor_parts()?;
        Ok((base.pow(exp), span))
    }
}

/// Parses a polynomial expression in the declared variables.
pub fn parse_polynomial(text: &str, vars: &[String]) -> Result<Poly> {
    let toks = tokenize(text, vars)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser {
        text,
        toks,
        pos: 0,
        nvars: vars.len(),
    };
    let poly = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok(poly)
}

/// Parses a homogeneous linear form such as `x - 2y + z/3`.
pub fn parse_linear_form(text: &str, vars: &[String]) -> Result<Vec<Rational>> {
    let poly = parse_polynomial(text, vars)?;
    match poly.homogeneity() {
        Homogeneity::Degree(1) => Ok(poly.linear_coeffs().unwrap()),
        Homogeneity::Zero => Err(Error::Parse(format!("`{text}` is the zero form"))),
        _ => Err(Error::Parse(format!("`{text}` is not a homogeneous linear form"))),
    }
}

/// Parses a factored defining polynomial into a multiarrangement.
/// Projectively equal factors have their exponents summed.
pub fn parse_defining_polynomial(text: &str, vars: &[String]) -> Result<Multiarrangement> {
    let toks = tokenize(text, vars)?;
    let mut p = Parser {
        text,
        toks,
        pos: 0,
        nvars: vars.len(),
    };
    let mut forms = Vec::new();
    let mut mult = Vec::new();
    let mut sign_ok = true;
    while p.pos < p.toks.len() {
        match p.peek() {
            Some(Tok::Star) if !forms.is_empty() || !sign_ok => {
                p.pos += 1;
                continue;
            }
            Some(Tok::Minus) if sign_ok => {
                p.pos += 1;
                sign_ok = false;
                continue;
            }
            _ => {}
        }
        sign_ok = false;
        let (base, exp, (s, e)) = p.factor_parts()?;
        let factor_text = &text[s..e];
        match base.homogeneity() {
            Homogeneity::Zero => {
                return Err(Error::Parse(format!("zero factor `{factor_text}`")));
            }
            Homogeneity::Degree(0) => continue,
            Homogeneity::Degree(1) => {
                if exp == 0 {
                    continue;
                }
                forms.push(base.linear_coeffs().unwrap());
                mult.push(exp as u64);
            }
            _ => {
                return Err(Error::Parse(format!(
                    "nonlinear factor `{factor_text}`"
                )))
            }
        }
    }
    if forms.is_empty() && p.toks.is_empty() {
        return Err(Error::Parse("empty defining polynomial".into()));
    }
    Multiarrangement::new(vars.to_vec(), forms, mult)
}

/// Renders a multiarrangement back as a factored defining polynomial.
pub fn format_defining_polynomial(a: &Multiarrangement) -> String {
    if a.is_empty() {
        return "1".into();
    }
    a.hyperplanes()
        .iter()
        .zip(a.mult())
        .map(|(h, &m)| {
            let body = h.display_with(a.vars());
            let atomic = h.coeffs().iter().filter(|c| !c.is_zero()).count() == 1
                && h.coeffs().iter().all(|c| c.is_zero() || c.is_one());
            let base = if atomic { body } else { format!("({body})") };
            if m == 1 {
                base
            } else {
                format!("{base}^{m}")
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rat;

    fn xyz() -> Vec<String> {
        vec!["x".into(), "y".into(), "z".into()]
    }

    #[test]
    fn first_example_string() {
        let a = parse_defining_polynomial("x^5 y^2 z^16 (x-y)^3 (y-z)^2 (x-z)^4", &xyz()).unwrap();
        assert_eq!(a.len(), 6);
        assert_eq!(a.mult(), &[5, 2, 16, 3, 2, 4]);
        assert_eq!(a.total(), 32);
    }

    #[test]
    fn boolean_pair() {
        let vars = vec!["x".to_string(), "y".to_string()];
        let a = parse_defining_polynomial("x y", &vars).unwrap();
        assert_eq!(a.mult(), &[1, 1]);
        let b = parse_defining_polynomial("xy", &vars).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn projective_identification() {
        let a = parse_defining_polynomial("x^2 (2x)^3", &["x".to_string()]).unwrap();
        assert_eq!(a.len(), 1);
        assert_eq!(a.mult(), &[5]);
    }

    #[test]
    fn errors() {
        let e = parse_defining_polynomial("x (x^2+y)", &xyz()).unwrap_err();
        assert!(e.to_string().contains("nonlinear factor `(x^2+y)`"), "{e}");
        assert!(parse_defining_polynomial("(x-x)", &xyz()).is_err());
        let e = parse_defining_polynomial("x q", &xyz()).unwrap_err();
        assert!(e.to_string().contains("unknown variable"), "{e}");
        assert!(parse_defining_polynomial("(x+1)", &xyz()).is_err());
    }

    #[test]
    fn unicode_minus_and_products() {
        let a = parse_defining_polynomial("x·y·(x−y)^2", &xyz()).unwrap();
        assert_eq!(a.mult(), &[1, 1, 2]);
    }

    #[test]
    fn polynomial_expressions() {
        let p = parse_polynomial("x^2 - 3/2 x y + (y+z)^2", &xyz()).unwrap();
        let x = Poly::var(3, 0);
        let y = Poly::var(3, 1);
        let z = Poly::var(3, 2);
        let expected = &(&x.pow(2) - &(&x * &y).scale(&Rational::new(3.into(), 2.into())))
            + &(&y + &z).pow(2);
        assert_eq!(p, expected);
        assert_eq!(parse_polynomial("-x", &xyz()).unwrap(), -&x);
        assert_eq!(parse_polynomial("0", &xyz()).unwrap(), Poly::zero(3));
        assert!(parse_polynomial("x +", &xyz()).is_err());
    }

    #[test]
    fn linear_forms() {
        assert_eq!(parse_linear_form("2x - y/2", &xyz()).unwrap(), vec![rat(2), Rational::new((-1).into(), 2.into()), rat(0)]);
        assert!(parse_linear_form("x y", &xyz()).is_err());
    }

    #[test]
    fn format_round_trip() {
        let text = "x^5 y^2 z^16 (x-y)^3 (y-z)^2 (x-z)^4";
        let a = parse_defining_polynomial(text, &xyz()).unwrap();
        let again = parse_defining_polynomial(&format_defining_polynomial(&a), &xyz()).unwrap();
        assert_eq!(a, again);
    }
}
