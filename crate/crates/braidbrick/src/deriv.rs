//! Derivation files.
//!
//! Text grammar, one item per line; blank lines and `#` comments are ignored:
//!
//! ```text
//! n=<strands> claim=<isotopy|dominance>
//! word: <braid>
//! step <move> [; <move>]* -> <braid>
//! ```
//!
//! Moves: `rho <k>`, `R3 <pos>`, `c <pos>`, `R1 [top|bottom]`,
//! `delete <pos> <pos> ...`, `oppo`, `eq`. Positions are 0-based. A step with
//! several moves is a macro; its result is checked after the last move. Each
//! `R1` in a step removes one strand, so the result is read on that many fewer
//! strands. The empty word is written `e`.
//!
//! The JSON mirror is `{"n", "claim", "word", "steps": [{"moves": [..], "result"}]}`
//! with moves written as in the text form.

use std::fmt;
use std::path::Path;

use braidbrick_core::braid::{parse_braid, StrandEnd};
use braidbrick_core::derivation::{Derivation, DerivationStep, Move, Relation};
use braidbrick_core::BraidWord;
use serde::{Deserialize, Serialize};

use crate::json::word_text;

/// A parse failure with its 1-based line (0 for whole-file errors).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "{}", self.message)
        } else {
            write!(f, "line {}: {}", self.line, self.message)
        }
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, message: message.into() }
}

pub fn parse_move(text: &str) -> Result<Move, String> {
    let mut it = text.split_whitespace();
    let name = it.next().ok_or("empty move")?;
    let args: Vec<&str> = it.collect();
    let one = || -> Result<&str, String> {
        match args.as_slice() {
            [a] => Ok(a),
            _ => Err(format!("`{}` takes one argument", name)),
        }
    };
    let pos = |s: &str| s.parse::<usize>().map_err(|_| format!("bad position `{}`", s));
    let none = |args: &[&str]| if args.is_empty() { Ok(()) } else { Err(format!("`{}` takes no argument", name)) };
    match name {
        "rho" => {
            let a = one()?;
            a.parse::<isize>().map(Move::Rho).map_err(|_| format!("bad rotation `{}`", a))
        }
        "R3" => Ok(Move::R3(pos(one()?)?)),
        "c" => Ok(Move::Commute(pos(one()?)?)),
        "R1" => match args.as_slice() {
            [] => Ok(Move::R1(None)),
            ["top"] => Ok(Move::R1(Some(StrandEnd::Top))),
            ["bottom"] => Ok(Move::R1(Some(StrandEnd::Bottom))),
            _ => Err("`R1` takes `top`, `bottom` or nothing".into()),
        },
        "delete" => {
            if args.is_empty() {
                return Err("`delete` needs at least one position".into());
            }
            args.iter().map(|a| pos(a)).collect::<Result<Vec<_>, _>>().map(Move::Delete)
        }
        "oppo" => none(&args).map(|_| Move::Oppo),
        "eq" => none(&args).map(|_| Move::Eq),
        _ => Err(format!("unknown move `{}`", name)),
    }
}

fn parse_word(text: &str, n: usize) -> Result<BraidWord, String> {
    let t = text.trim();
    if n == 0 {
        return Err("strand count dropped to zero".into());
    }
    if t == "e" {
        return Ok(BraidWord::empty(n));
    }
    parse_braid(t, Some(n)).map_err(|e| e.to_string())
}

fn parse_header(line: &str, lineno: usize) -> Result<(usize, Relation), ParseError> {
    let (mut n, mut claim) = (None, None);
    for kv in line.split_whitespace() {
        let (k, v) = kv.split_once('=').ok_or_else(|| err(lineno, format!("expected key=value, got `{}`", kv)))?;
        match k {
            "n" => n = Some(v.parse::<usize>().map_err(|_| err(lineno, format!("bad strand count `{}`", v)))?),
            "claim" => claim = Some(v.parse::<Relation>().map_err(|_| err(lineno, format!("bad claim `{}`", v)))?),
            _ => return Err(err(lineno, format!("unknown header key `{}`", k))),
        }
    }
    match (n, claim) {
        (Some(n), Some(c)) if n >= 1 => Ok((n, c)),
        (Some(_), Some(_)) => Err(err(lineno, "strand count must be at least 1")),
        _ => Err(err(lineno, "header needs both n= and claim=")),
    }
}

fn strands_after(moves: &[Move], n: usize) -> usize {
    n.saturating_sub(moves.iter().filter(|m| matches!(m, Move::R1(_))).count())
}

/// Parses the text form.
pub fn parse_derivation(text: &str) -> Result<Derivation, ParseError> {
    let mut header = None;
    let mut start: Option<BraidWord> = None;
    let mut steps = Vec::new();
    let mut n = 0;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if header.is_none() {
            let (hn, c) = parse_header(line, lineno)?;
            header = Some(c);
            n = hn;
            continue;
        }
        if let Some(rest) = line.strip_prefix("word:") {
            if start.is_some() {
                return Err(err(lineno, "duplicate `word:` line"));
            }
            start = Some(parse_word(rest, n).map_err(|e| err(lineno, e))?);
            continue;
        }
        if let Some(rest) = line.strip_prefix("step") {
            if start.is_none() {
                return Err(err(lineno, "`step` before `word:`"));
            }
            let (ms, result) = rest.split_once("->").ok_or_else(|| err(lineno, "step needs `-> <result>`"))?;
            let moves = ms
                .split(';')
                .map(|m| parse_move(m.trim()))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| err(lineno, e))?;
            n = strands_after(&moves, n);
            let result = parse_word(result, n).map_err(|e| err(lineno, e))?;
            steps.push(DerivationStep { moves, result });
            continue;
        }
        return Err(err(lineno, format!("unrecognized line `{}`", line)));
    }
    let claimed = header.ok_or_else(|| err(0, "missing header"))?;
    let start = start.ok_or_else(|| err(0, "missing `word:` line"))?;
    Ok(Derivation { start, steps, claimed })
}

/// Writes the text form; `parse_derivation` reads it back unchanged.
pub fn derivation_text(d: &Derivation) -> String {
    let mut s = format!("n={} claim={}\nword: {}\n", d.start.strands(), d.claimed, word_text(&d.start));
    for st in &d.steps {
        let moves: Vec<String> = st.moves.iter().map(|m| m.to_string()).collect();
        s.push_str(&format!("step {} -> {}\n", moves.join("; "), word_text(&st.result)));
    }
    s
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepJson {
    pub moves: Vec<String>,
    pub result: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivationJson {
    pub n: usize,
    pub claim: String,
    pub word: String,
    pub steps: Vec<StepJson>,
}

impl From<&Derivation> for DerivationJson {
    fn from(d: &Derivation) -> Self {
        DerivationJson {
            n: d.start.strands(),
            claim: d.claimed.to_string(),
            word: word_text(&d.start),
            steps: d
                .steps
                .iter()
                .map(|s| StepJson {
                    moves: s.moves.iter().map(|m| m.to_string()).collect(),
                    result: word_text(&s.result),
                })
                .collect(),
        }
    }
}

impl DerivationJson {
    pub fn to_derivation(&self) -> Result<Derivation, ParseError> {
        let claimed = self.claim.parse::<Relation>().map_err(|_| err(0, format!("bad claim `{}`", self.claim)))?;
        if self.n == 0 {
            return Err(err(0, "strand count must be at least 1"));
        }
        let start = parse_word(&self.word, self.n).map_err(|e| err(0, e))?;
        let mut n = self.n;
        let mut steps = Vec::new();
        for (i, s) in self.steps.iter().enumerate() {
            let ctx = |e: String| err(0, format!("step {}: {}", i, e));
            let moves = s.moves.iter().map(|m| parse_move(m)).collect::<Result<Vec<_>, _>>().map_err(ctx)?;
            n = strands_after(&moves, n);
            let result = parse_word(&s.result, n).map_err(ctx)?;
            steps.push(DerivationStep { moves, result });
        }
        Ok(Derivation { start, steps, claimed })
    }
}

pub fn parse_derivation_json(text: &str) -> Result<Derivation, ParseError> {
    let j: DerivationJson = serde_json::from_str(text).map_err(|e| err(e.line(), e.to_string()))?;
    j.to_derivation()
}

/// Reads a derivation file; `.json` files use the JSON mirror.
pub fn load_derivation(path: &Path) -> Result<Derivation, ParseError> {
    let text = std::fs::read_to_string(path).map_err(|e| err(0, format!("{}: {}", path.display(), e)))?;
    if path.extension().is_some_and(|e| e == "json") {
        parse_derivation_json(&text)
    } else {
        parse_derivation(&text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use braidbrick_core::derivation::check;

    const SAMPLE: &str = "# sample\nn=3 claim=isotopy\nword: s1 s2 s1^2\n\
        step R3 0 -> s2 s1 s2 s1\nstep rho -1; R3 1 -> s1^2 s2 s1\nstep R1 -> s1^3\n";

    #[test]
    fn test_parse_and_round_trip() {
        let d = parse_derivation(SAMPLE).unwrap();
        assert_eq!(d.steps.len(), 3);
        assert_eq!(d.steps[1].moves, vec![Move::Rho(-1), Move::R3(1)]);
        assert_eq!(d.steps[2].result.strands(), 2);
        assert_eq!(check(&d), Ok(Relation::Isotopy));
        let text = derivation_text(&d);
        assert_eq!(parse_derivation(&text).unwrap(), d);
        let j = serde_json::to_string(&DerivationJson::from(&d)).unwrap();
        assert_eq!(parse_derivation_json(&j).unwrap(), d);
    }

    #[test]
    fn test_moves() {
        assert_eq!(parse_move("delete 0 3 4"), Ok(Move::Delete(vec![0, 3, 4])));
        assert_eq!(parse_move("R1 bottom"), Ok(Move::R1(Some(StrandEnd::Bottom))));
        assert_eq!(parse_move("c 2"), Ok(Move::Commute(2)));
        for bad in ["", "R3", "R3 x", "R1 left", "delete", "eq 1", "swap 2", "rho 1 2"] {
            assert!(parse_move(bad).is_err(), "{}", bad);
        }
        for m in [Move::Rho(-2), Move::R3(4), Move::R1(None), Move::Delete(vec![1, 2]), Move::Oppo, Move::Eq] {
            assert_eq!(parse_move(&m.to_string()), Ok(m));
        }
    }

    #[test]
    fn test_empty_word_and_errors() {
        let d = parse_derivation("n=2 claim=dominance\nword: s1\nstep delete 0 -> e\n").unwrap();
        assert!(d.end().is_empty());
        assert_eq!(check(&d), Ok(Relation::Dominance));
        let cases = [
            ("word: s1\n", 1),
            ("n=3\nword: s1\n", 1),
            ("n=3 claim=maybe\n", 1),
            ("n=3 claim=isotopy\nstep R3 0 -> s1\n", 2),
            ("n=3 claim=isotopy\nword: s1\nstep R3 0 s1\n", 3),
            ("n=3 claim=isotopy\nword: s3\n", 2),
            ("n=3 claim=isotopy\nword: s1\nfoo\n", 3),
        ];
        for (text, line) in cases {
            assert_eq!(parse_derivation(text).unwrap_err().line, line, "{:?}", text);
        }
        assert!(parse_derivation("# only a comment\n").is_err());
    }
}
