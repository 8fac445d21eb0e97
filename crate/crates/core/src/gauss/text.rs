use alloc::string::ToString;
use alloc::vec::Vec;
use core::str::FromStr;

use super::{GaussCode, Sign, SignedGaussCode};
use crate::{Error, Result};

/// Result of parsing the text format, which may or may not carry signs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParsedCode {
    Unsigned(GaussCode),
    Signed(SignedGaussCode),
}

impl ParsedCode {
    /// Accepts integers separated by whitespace and/or commas, optionally
    /// followed by `|` and one `+`/`-` per crossing. Surrounding brackets or
    /// braces are tolerated.
    pub fn parse(text: &str) -> Result<Self> {
        let mut halves = text.split('|');
        let body = halves.next().unwrap_or("");
        let sign_block = halves.next();
        if halves.next().is_some() {
            return Err(Error::MalformedSignBlock("more than one `|`".to_string()));
        }
        let entries = parse_entries(body)?;
        match sign_block {
            None => Ok(ParsedCode::Unsigned(GaussCode::new(entries)?)),
            Some(block) => {
                let signs = parse_signs(block)?;
                Ok(ParsedCode::Signed(SignedGaussCode::from_parts(
                    entries, &signs,
                )?))
            }
        }
    }

    pub fn code(&self) -> &GaussCode {
        match self {
            ParsedCode::Unsigned(c) => c,
            ParsedCode::Signed(s) => s.code(),
        }
    }

    pub fn is_signed(&self) -> bool {
        matches!(self, ParsedCode::Signed(_))
    }

    /// Signs are filled with `fallback` when the text had none.
    pub fn into_signed_or(self, fallback: Sign) -> SignedGaussCode {
        match self {
            ParsedCode::Unsigned(c) => c.with_uniform_sign(fallback),
            ParsedCode::Signed(s) => s,
        }
    }
}

impl FromStr for ParsedCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ParsedCode::parse(s)
    }
}

impl FromStr for GaussCode {
    type Err = Error;

    /// A sign block, if present, is validated and then dropped.
    fn from_str(s: &str) -> Result<Self> {
        Ok(match ParsedCode::parse(s)? {
            ParsedCode::Unsigned(c) => c,
            ParsedCode::Signed(s) => s.into_code(),
        })
    }
}

impl FromStr for SignedGaussCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match ParsedCode::parse(s)? {
            ParsedCode::Signed(s) => Ok(s),
            ParsedCode::Unsigned(c) if c.is_empty() => Ok(SignedGaussCode::unknot()),
            ParsedCode::Unsigned(_) => Err(Error::MalformedSignBlock("missing".to_string())),
        }
    }
}

fn parse_entries(body: &str) -> Result<Vec<i32>> {
    let body = body
        .trim()
        .trim_start_matches(['[', '{', '('])
        .trim_end_matches([']', '}', ')']);
    body.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<i32>()
                .map_err(|_| Error::InvalidToken(t.to_string()))
        })
        .collect()
}

fn parse_signs(block: &str) -> Result<Vec<i32>> {
    block
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| match t {
            "+" | "+1" | "1" => Ok(1),
            "-" | "-1" => Ok(-1),
            other => Err(Error::MalformedSignBlock(alloc::format!("token `{other}`"))),
        })
        .collect()
}
