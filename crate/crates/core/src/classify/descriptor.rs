//! Text form of tubes and slice representations.
//!
//! ```text
//! S | L | P(m) | F(p,q) | Squot(h) | Lquot3 | U2 m | T2 p q | SU2 | SO3
//! ```
//!
//! Whitespace inside parentheses is ignored.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::reps::SliceRep;

use super::TubeDescriptor;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Descriptor {
    Tube(TubeDescriptor),
    Slice(SliceRep),
}

impl Descriptor {
    /// The slice representation, for tubes the one attached to the orbit.
    pub fn slice(&self) -> SliceRep {
        match self {
            Descriptor::Tube(t) => t.slice(),
            Descriptor::Slice(s) => *s,
        }
    }

    pub fn into_tube(self) -> Result<TubeDescriptor> {
        match self {
            Descriptor::Tube(t) => Ok(t),
            Descriptor::Slice(s) => Err(Error::Parse {
                token: s.to_string(),
                reason: "expected a tube such as S, L, P(m), F(p,q), Squot(h) or Lquot3".into(),
            }),
        }
    }
}

impl fmt::Display for Descriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Descriptor::Tube(t) => t.fmt(f),
            Descriptor::Slice(s) => s.fmt(f),
        }
    }
}

fn parse_int(token: &str) -> Result<i64> {
    token.trim().parse().map_err(|_| Error::Parse {
        token: token.trim().to_string(),
        reason: "expected an integer".into(),
    })
}

/// `name(args)` with the argument list split on commas.
fn call_form<'a>(text: &'a str, name: &str) -> Option<Vec<&'a str>> {
    let inner = text
        .strip_prefix(name)?
        .strip_prefix('(')?
        .strip_suffix(')')?;
    Some(inner.split(',').collect())
}

fn arity(token: &str, args: &[&str], expected: usize) -> Result<()> {
    if args.len() == expected {
        Ok(())
    } else {
        Err(Error::Parse {
            token: token.to_string(),
            reason: format!("expected {expected} argument(s), found {}", args.len()),
        })
    }
}

impl FromStr for TubeDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.parse::<Descriptor>()? {
            Descriptor::Tube(t) => Ok(t),
            other => other.into_tube(),
        }
    }
}

impl FromStr for Descriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let words: Vec<&str> = s.split_whitespace().collect();
        match words.as_slice() {
            ["U2", m] => return Ok(Descriptor::Slice(SliceRep::u2(parse_int(m)?)?)),
            ["T2", p, q] => {
                return Ok(Descriptor::Slice(SliceRep::torus(
                    parse_int(p)?,
                    parse_int(q)?,
                )?))
            }
            ["U2", ..] | ["T2", ..] => {
                return Err(Error::Parse {
                    token: s.trim().to_string(),
                    reason: "expected `U2 m` or `T2 p q`".into(),
                })
            }
            _ => {}
        }

        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let tube = match compact.as_str() {
            "SU2" => return Ok(Descriptor::Slice(SliceRep::Su2Standard)),
            "SO3" => return Ok(Descriptor::Slice(SliceRep::So3Standard)),
            "S" => TubeDescriptor::S,
            "L" => TubeDescriptor::L,
            "Lquot3" => TubeDescriptor::LQuot3,
            text => {
                if let Some(args) = call_form(text, "P") {
                    arity(text, &args, 1)?;
                    TubeDescriptor::p(parse_int(args[0])?)?
                } else if let Some(args) = call_form(text, "F") {
                    arity(text, &args, 2)?;
                    TubeDescriptor::f(parse_int(args[0])?, parse_int(args[1])?)?
                } else if let Some(args) = call_form(text, "Squot") {
                    arity(text, &args, 1)?;
                    TubeDescriptor::s_quot(parse_int(args[0])?)?
                } else {
                    let token = text.split('(').next().unwrap_or(text);
                    return Err(Error::Parse {
                        token: if token.is_empty() {
                            text.to_string()
                        } else {
                            token.to_string()
                        },
                        reason: "unknown descriptor".into(),
                    });
                }
            }
        };
        Ok(Descriptor::Tube(tube))
    }
}
