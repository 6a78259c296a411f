//! Text formats: `s|f` for Hechler, `s|f;f;…` for E and `{a,b},{c}|f;…`
//! for L, with `()` for an empty stem or slot sequence.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use super::{EvDiffCond, HechlerCond, LocCond};
use crate::coding::{format_fn_list, parse_fn_list, FinSeq};
use crate::text::ParseError;

fn split_bar(s: &str) -> Result<(&str, &str, usize), ParseError> {
    let at = s.find('|').ok_or_else(|| ParseError::new(s.len(), "expected <stem>|<side>"))?;
    Ok((&s[..at], &s[at + 1..], at + 1))
}

impl fmt::Display for HechlerCond {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.stem, self.side)
    }
}

impl FromStr for HechlerCond {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let (stem, side, at) = split_bar(s)?;
        Ok(HechlerCond { stem: stem.parse()?, side: side.parse().map_err(|e: ParseError| e.offset(at))? })
    }
}

impl fmt::Display for EvDiffCond {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.stem, format_fn_list(&self.side))
    }
}

impl FromStr for EvDiffCond {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let (stem, side, at) = split_bar(s)?;
        let stem: FinSeq = stem.parse()?;
        let side = parse_fn_list(side).map_err(|e| e.offset(at))?.into_iter().collect();
        Ok(EvDiffCond { stem, side })
    }
}

impl fmt::Display for LocCond {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.slots.is_empty() {
            f.write_str("()")?;
        }
        for (i, slot) in self.slots.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            let items: Vec<String> = slot.iter().map(ToString::to_string).collect();
            write!(f, "{{{}}}", items.join(","))?;
        }
        write!(f, "|{}", format_fn_list(&self.side))
    }
}

impl FromStr for LocCond {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let (slots_text, side, at) = split_bar(s)?;
        let side = parse_fn_list(side).map_err(|e| e.offset(at))?.into_iter().collect();
        Ok(LocCond { slots: parse_slots(slots_text)?, side })
    }
}

fn parse_slots(s: &str) -> Result<Vec<BTreeSet<BigUint>>, ParseError> {
    if s.trim() == "()" {
        return Ok(Vec::new());
    }
    let bytes = s.as_bytes();
    let mut slots = Vec::new();
    let mut i = 0;
    loop {
        while i < bytes.len() && bytes[i] == b' ' {
            i += 1;
        }
        if bytes.get(i) != Some(&b'{') {
            return Err(ParseError::new(i, "expected '{' opening a slot"));
        }
        let close = s[i..].find('}').map(|k| i + k).ok_or_else(|| ParseError::new(i, "unclosed slot"))?;
        let mut slot = BTreeSet::new();
        let body = &s[i + 1..close];
        if !body.trim().is_empty() {
            let mut at = i + 1;
            for piece in body.split(',') {
                let n = BigUint::from_str(piece.trim())
                    .map_err(|_| ParseError::new(at, format!("expected a natural number, got {:?}", piece.trim())))?;
                if !slot.insert(n) {
                    return Err(ParseError::new(at, "repeated element in a slot"));
                }
                at += piece.len() + 1;
            }
        }
        slots.push(slot);
        i = close + 1;
        match bytes.get(i) {
            None => return Ok(slots),
            Some(b',') => i += 1,
            Some(_) => return Err(ParseError::new(i, "expected ',' between slots")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrips() {
        for text in ["3,0|1,2;id+4", "()|;const:0"] {
            assert_eq!(text.parse::<HechlerCond>().unwrap().to_string(), text);
        }
        let e: EvDiffCond = "4,1|;const:3;5;id+0".parse().unwrap();
        assert_eq!(e.to_string().parse::<EvDiffCond>().unwrap(), e);
        assert_eq!("()|".parse::<EvDiffCond>().unwrap().to_string(), "()|");
        let l: LocCond = "{5},{1,3}|;const:3".parse().unwrap();
        assert_eq!(l.to_string(), "{5},{1,3}|;const:3");
        assert_eq!("()|".parse::<LocCond>().unwrap().to_string(), "()|");
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!("{5},{1,x}|".parse::<LocCond>().unwrap_err().pos, 7);
        assert_eq!("{5}{1}|".parse::<LocCond>().unwrap_err().pos, 3);
        assert!("{5}".parse::<LocCond>().is_err());
        assert!("{5,5}|".parse::<LocCond>().is_err());
        assert_eq!("()|;const:x".parse::<EvDiffCond>().unwrap_err().pos, 10);
    }
}
