//! Parsing and printing of polynomials and rational generating functions.
//!
//! Two input forms are accepted for polynomials and recognized automatically:
//!
//! * comma-separated ascending coefficients: `3,164,1` means `3 + 164x + x^2`;
//! * symbolic: `x^2+164x+3`, `-x-1`, `1 - 99x + 99x^2 - x^3`, `0`.
//!
//! A generating function is `NUM/DEN` where each side is a polynomial in
//! either form, optionally parenthesized; a bare polynomial denotes itself
//! over denominator 1. Printing uses the symbolic form, parenthesizing any
//! side with more than one term, and `parse(print(v)) == v` holds for every
//! polynomial and every canonical generating function.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::gf::{GfError, RationalGF};
use crate::poly::Polynomial;

/// Largest exponent accepted in symbolic input, guarding allocations.
const MAX_EXPONENT: usize = 100_000;

/// Errors from parsing polynomial or generating-function text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    /// The input (or one side of a fraction) is empty.
    Empty,
    /// An unexpected character at the given byte offset.
    UnexpectedChar(char, usize),
    /// A numeric literal failed to parse.
    BadNumber(String),
    /// An exponent is missing, malformed, or larger than supported.
    BadExponent,
    /// Parentheses do not balance.
    UnbalancedParens,
    /// More than one top-level `/` in a generating function.
    ExtraSlash,
    /// The fraction is not expandable as a power series.
    Gf(GfError),
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Empty => write!(f, "empty polynomial text"),
            ParseError::UnexpectedChar(c, pos) => {
                write!(f, "unexpected character {c:?} at byte {pos}")
            }
            ParseError::BadNumber(s) => write!(f, "invalid integer literal {s:?}"),
            ParseError::BadExponent => write!(f, "missing or unsupported exponent"),
            ParseError::UnbalancedParens => write!(f, "unbalanced parentheses"),
            ParseError::ExtraSlash => write!(f, "more than one '/' in generating function"),
            ParseError::Gf(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for ParseError {}

impl From<GfError> for ParseError {
    fn from(e: GfError) -> Self {
        ParseError::Gf(e)
    }
}

/// Parses a polynomial in either accepted form.
pub fn parse_polynomial(input: &str) -> Result<Polynomial, ParseError> {
    let s = input.trim();
    if s.is_empty() {
        return Err(ParseError::Empty);
    }
    if s.contains('x') {
        parse_symbolic(s)
    } else if s.contains(',') {
        parse_comma_list(s)
    } else {
        let c = parse_int(s)?;
        Ok(Polynomial::constant(c))
    }
}

/// Parses a generating function `NUM/DEN` (or a bare polynomial).
pub fn parse_gf(input: &str) -> Result<RationalGF, ParseError> {
    let s = input.trim();
    if s.is_empty() {
        return Err(ParseError::Empty);
    }
    let mut depth = 0usize;
    let mut slash = None;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.checked_sub(1).ok_or(ParseError::UnbalancedParens)?,
            '/' if depth == 0 => {
                if slash.is_some() {
                    return Err(ParseError::ExtraSlash);
                }
                slash = Some(i);
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(ParseError::UnbalancedParens);
    }
    let (num_text, den_text) = match slash {
        Some(i) => (&s[..i], &s[i + 1..]),
        None => (s, "1"),
    };
    let num = parse_polynomial(strip_parens(num_text)?)?;
    let den = parse_polynomial(strip_parens(den_text)?)?;
    Ok(RationalGF::new(num, den)?)
}

/// Removes outermost parentheses as long as they enclose the whole string.
fn strip_parens(input: &str) -> Result<&str, ParseError> {
    let mut s = input.trim();
    loop {
        if !(s.starts_with('(') && s.ends_with(')')) {
            return Ok(s);
        }
        let mut depth = 0usize;
        for (i, c) in s.char_indices() {
            match c {
                '(' => depth += 1,
                ')' => {
                    depth = depth.checked_sub(1).ok_or(ParseError::UnbalancedParens)?;
                    if depth == 0 && i + 1 != s.len() {
                        // the opening paren closes early: not an outer pair
                        return Ok(s);
                    }
                }
                _ => {}
            }
        }
        if depth != 0 {
            return Err(ParseError::UnbalancedParens);
        }
        s = s[1..s.len() - 1].trim();
        if s.is_empty() {
            return Err(ParseError::Empty);
        }
    }
}

fn parse_int(s: &str) -> Result<BigInt, ParseError> {
    BigInt::from_str(s.trim()).map_err(|_| ParseError::BadNumber(s.trim().to_string()))
}

fn parse_comma_list(s: &str) -> Result<Polynomial, ParseError> {
    let coeffs = s.split(',').map(parse_int).collect::<Result<Vec<_>, _>>()?;
    Ok(Polynomial::new(coeffs))
}

fn parse_symbolic(s: &str) -> Result<Polynomial, ParseError> {
    let bytes: Vec<(usize, char)> = s
        .char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .collect();
    let mut pos = 0usize;
    let mut acc: Vec<BigInt> = Vec::new();
    let mut first = true;
    while pos < bytes.len() {
        // sign
        let mut negative = false;
        match bytes[pos].1 {
            '+' => pos += 1,
            '-' => {
                negative = true;
                pos += 1;
            }
            _ if first => {}
            c => return Err(ParseError::UnexpectedChar(c, bytes[pos].0)),
        }
        first = false;
        if pos >= bytes.len() {
            return Err(ParseError::Empty);
        }
        // coefficient digits (optional when an x part follows)
        let digit_start = pos;
        while pos < bytes.len() && bytes[pos].1.is_ascii_digit() {
            pos += 1;
        }
        let digits: String = bytes[digit_start..pos].iter().map(|&(_, c)| c).collect();
        // optional '*' between coefficient and x
        if pos < bytes.len() && bytes[pos].1 == '*' && !digits.is_empty() {
            pos += 1;
        }
        let has_x = pos < bytes.len() && bytes[pos].1 == 'x';
        if !has_x && digits.is_empty() {
            let (off, c) = bytes[pos];
            return Err(ParseError::UnexpectedChar(c, off));
        }
        let mut coeff = if digits.is_empty() {
            BigInt::one()
        } else {
            parse_int(&digits)?
        };
        if negative {
            coeff = -coeff;
        }
        let mut power = 0usize;
        if has_x {
            pos += 1;
            power = 1;
            if pos < bytes.len() && bytes[pos].1 == '^' {
                pos += 1;
                let exp_start = pos;
                while pos < bytes.len() && bytes[pos].1.is_ascii_digit() {
                    pos += 1;
                }
                if exp_start == pos {
                    return Err(ParseError::BadExponent);
                }
                let exp: String = bytes[exp_start..pos].iter().map(|&(_, c)| c).collect();
                power = exp.parse::<usize>().map_err(|_| ParseError::BadExponent)?;
                if power > MAX_EXPONENT {
                    return Err(ParseError::BadExponent);
                }
            }
        }
        if acc.len() <= power {
            acc.resize(power + 1, BigInt::zero());
        }
        acc[power] += coeff;
    }
    Ok(Polynomial::new(acc))
}

/// Symbolic rendering shared by the `Display` impls.
fn format_polynomial(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for i in (0..p.coeffs().len()).rev() {
        let c = &p.coeffs()[i];
        if c.is_zero() {
            continue;
        }
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push('-');
        } else {
            out.push('+');
        }
        let mag = c.abs();
        if i == 0 {
            out.push_str(&mag.to_string());
        } else {
            if !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            out.push('x');
            if i > 1 {
                out.push('^');
                out.push_str(&i.to_string());
            }
        }
    }
    out
}

/// Parenthesize a rendered side when it has an interior sign.
fn wrap_side(text: &str) -> String {
    if text[1..].contains(['+', '-']) {
        format!("({text})")
    } else {
        text.to_string()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_polynomial(self))
    }
}

impl fmt::Display for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den().is_one() {
            return f.write_str(&format_polynomial(self.num()));
        }
        write!(
            f,
            "{}/{}",
            wrap_side(&format_polynomial(self.num())),
            wrap_side(&format_polynomial(self.den()))
        )
    }
}

impl FromStr for Polynomial {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_polynomial(s)
    }
}

impl FromStr for RationalGF {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_gf(s)
    }
}
