//! Line-oriented text form of exact operators.
//!
//! One term per line: the coefficient as `a/b+c/d*i`, then space-separated
//! `var^k` and `d[var]^k` tokens. The zero operator is the empty string.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write};
use core::str::FromStr;

use super::coefficient::GaussianRational;
use super::operator::{Monomial, WeylOperator};
use super::variable::VariableId;
use super::SymError;

impl fmt::Display for WeylOperator<GaussianRational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, (m, c)) in self.terms().enumerate() {
            if idx > 0 {
                f.write_char('\n')?;
            }
            write!(f, "{}", c)?;
            for (v, e) in m.vars() {
                write!(f, " {}^{}", v, e)?;
            }
            for (v, e) in m.derivs() {
                write!(f, " d[{}]^{}", v, e)?;
            }
        }
        Ok(())
    }
}

fn parse_token(tok: &str) -> Option<(bool, VariableId, u32)> {
    let (sym, exp) = tok.rsplit_once('^')?;
    let exp: u32 = exp.parse().ok()?;
    if exp == 0 {
        return None;
    }
    if let Some(inner) = sym.strip_prefix("d[").and_then(|s| s.strip_suffix(']')) {
        Some((true, inner.parse().ok()?, exp))
    } else {
        Some((false, sym.parse().ok()?, exp))
    }
}

impl FromStr for WeylOperator<GaussianRational> {
    type Err = SymError;

    fn from_str(s: &str) -> Result<Self, SymError> {
        let mut op = WeylOperator::zero();
        for (lineno, line) in s.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let bad = || SymError::Parse { line: lineno + 1 };
            let mut toks = line.split_whitespace();
            let coeff: GaussianRational = toks.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
            let mut vars = Vec::new();
            let mut derivs = Vec::new();
            for tok in toks {
                let (is_deriv, v, e) = parse_token(tok).ok_or_else(bad)?;
                if is_deriv {
                    derivs.push((v, e));
                } else {
                    vars.push((v, e));
                }
            }
            op.add_term(Monomial::new(vars, derivs), coeff);
        }
        Ok(op)
    }
}

/// Serialize an exact operator.
pub fn to_text(op: &WeylOperator<GaussianRational>) -> String {
    let mut s = String::new();
    let _ = write!(s, "{}", op);
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sample_line() {
        let u = VariableId::u(1, 1, 1);
        let v = VariableId::v(2, 1, 1).bar();
        let op = WeylOperator::var_deriv(GaussianRational::from_parts(1, 2, -1, 3), u, v);
        assert_eq!(to_text(&op), "1/2+-1/3*i u1.1.1^1 d[~v2.1.1]^1");
        assert_eq!(to_text(&op).parse::<WeylOperator>().unwrap(), op);
        assert_eq!(to_text(&WeylOperator::zero()), "");
        assert!("1/1+0/1*i u1.1.1^0".parse::<WeylOperator>().is_err());
    }
}
