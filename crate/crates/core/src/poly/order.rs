use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::Mono;
use crate::error::Error;

/// Monomial order with the first variable largest.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    #[default]
    Grevlex,
    Lex,
}

impl MonomialOrder {
    pub fn cmp(self, a: &Mono, b: &Mono) -> Ordering {
        match self {
            MonomialOrder::Lex => a[0].cmp(&b[0]).then(a[1].cmp(&b[1])),
            MonomialOrder::Grevlex => {
                let (da, db) = (a[0] as i64 + a[1] as i64, b[0] as i64 + b[1] as i64);
                // Equal degree: a smaller exponent in the last variable wins.
                da.cmp(&db).then(b[1].cmp(&a[1]))
            }
        }
    }
}

impl FromStr for MonomialOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "grevlex" | "degrevlex" => Ok(MonomialOrder::Grevlex),
            "lex" | "plex" => Ok(MonomialOrder::Lex),
            other => Err(Error::Parse(format!("unknown monomial order '{other}'"))),
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MonomialOrder::Grevlex => "grevlex",
            MonomialOrder::Lex => "lex",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grevlex_basics() {
        let o = MonomialOrder::Grevlex;
        assert_eq!(o.cmp(&[0, 2], &[3, 0]), Ordering::Less);
        assert_eq!(o.cmp(&[2, 1], &[1, 2]), Ordering::Greater);
        assert_eq!(o.cmp(&[1, 1], &[1, 1]), Ordering::Equal);
    }

    #[test]
    fn lex_basics() {
        let o = MonomialOrder::Lex;
        assert_eq!(o.cmp(&[1, 0], &[0, 5]), Ordering::Greater);
    }
}
