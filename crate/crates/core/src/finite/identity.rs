use std::fmt;
use std::str::FromStr;

use super::CayleyTable;
use crate::error::{Error, Result};
use crate::par;

/// Identities with more variables than this are refused on tables larger
/// than [`LARGE_ORDER`].
pub const MAX_VARIABLES_ON_LARGE: usize = 4;
pub const LARGE_ORDER: usize = 32;

/// A semigroup identity `lhs = rhs` between words over the variables `a..z`.
///
/// Parsed from text such as `aba=ab`; `^k` repeats the preceding variable,
/// so `a^2b=a^2` is `aab=aa`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Identity {
    lhs: Vec<u8>,
    rhs: Vec<u8>,
}

impl Identity {
    pub fn new(lhs: &str, rhs: &str) -> Result<Self> {
        let text = format!("{lhs}={rhs}");
        let side = |s: &str| {
            parse_side(s).map_err(|message| Error::InvalidIdentity {
                text: text.clone(),
                message,
            })
        };
        Ok(Identity {
            lhs: side(lhs)?,
            rhs: side(rhs)?,
        })
    }

    pub fn lhs(&self) -> &[u8] {
        &self.lhs
    }

    pub fn rhs(&self) -> &[u8] {
        &self.rhs
    }

    /// Distinct variables of both sides, sorted.
    pub fn variables(&self) -> Vec<u8> {
        let mut vars: Vec<u8> = self.lhs.iter().chain(&self.rhs).copied().collect();
        vars.sort_unstable();
        vars.dedup();
        vars
    }

    /// An assignment (indexed like [`Identity::variables`]) under which the
    /// two sides differ, or `None` when `table` satisfies the identity.
    pub fn counterexample(&self, table: &CayleyTable) -> Result<Option<Vec<usize>>> {
        let vars = self.variables();
        let k = vars.len();
        let n = table.order();
        if k > MAX_VARIABLES_ON_LARGE && n > LARGE_ORDER {
            return Err(Error::SizeLimit(format!(
                "identity {self} has {k} variables; at most {MAX_VARIABLES_ON_LARGE} are checked on orders above {LARGE_ORDER}"
            )));
        }
        let slot = |v: u8| vars.iter().position(|&w| w == v).unwrap();
        let lhs: Vec<usize> = self.lhs.iter().map(|&v| slot(v)).collect();
        let rhs: Vec<usize> = self.rhs.iter().map(|&v| slot(v)).collect();
        let eval = |side: &[usize], values: &[usize]| {
            side[1..]
                .iter()
                .fold(values[side[0]], |acc, &s| table.mul(acc, values[s]))
        };
        let rest = n.pow(k as u32 - 1);
        let found = par::find_first_range(n, |first| {
            let mut values = vec![0usize; k];
            values[0] = first;
            for mut code in 0..rest {
                for value in values[1..].iter_mut().rev() {
                    *value = code % n;
                    code /= n;
                }
                if eval(&lhs, &values) != eval(&rhs, &values) {
                    return Some(values.clone());
                }
            }
            None
        });
        Ok(found)
    }

    pub fn holds_in(&self, table: &CayleyTable) -> Result<bool> {
        Ok(self.counterexample(table)?.is_none())
    }
}

fn parse_side(s: &str) -> std::result::Result<Vec<u8>, String> {
    let mut out: Vec<u8> = Vec::new();
    let mut chars = s.trim().chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            'a'..='z' => out.push(c as u8),
            '^' => {
                let mut digits = String::new();
                while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    digits.push(*d);
                    chars.next();
                }
                let k: usize = digits
                    .parse()
                    .map_err(|_| "expected an exponent after '^'".to_string())?;
                let last = *out.last().ok_or("exponent without a variable")?;
                if k == 0 {
                    return Err("exponents must be positive".into());
                }
                out.extend(std::iter::repeat_n(last, k - 1));
            }
            c if c.is_whitespace() => {}
            other => return Err(format!("unexpected character {other:?}")),
        }
    }
    if out.is_empty() {
        return Err("both sides must be nonempty".into());
    }
    Ok(out)
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.split_once('=') {
            Some((lhs, rhs)) if !rhs.contains('=') => Identity::new(lhs, rhs),
            _ => Err(Error::InvalidIdentity {
                text: s.to_string(),
                message: "expected exactly one '='".into(),
            }),
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |w: &[u8]| w.iter().map(|&c| c as char).collect::<String>();
        write!(f, "{}={}", side(&self.lhs), side(&self.rhs))
    }
}

/// Shorthand for identities written in source; panics on malformed text.
pub fn identity(text: &str) -> Identity {
    text.parse().expect("malformed identity literal")
}
