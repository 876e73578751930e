use alloc::string::ToString;
use alloc::vec::Vec;

use super::{BraidWord, Letter};
use crate::{Error, Result};

/// Parses a braid word.
///
/// Accepted tokens, separated by whitespace: `s<i>` or `s_<i>` with an optional
/// `^<k>` (or `^{k}`) exponent, several such factors written without spaces
/// (`s1s2^2`), or a compact digit string such as `11212`.
///
/// Without `n_override` the strand count is `1 + max index` (at least 2).
pub fn parse_braid(text: &str, n_override: Option<usize>) -> Result<BraidWord> {
    let mut letters: Vec<usize> = Vec::new();
    for token in text.split_whitespace() {
        if token.bytes().all(|b| b.is_ascii_digit()) {
            for b in token.bytes() {
                if b == b'0' {
                    return Err(Error::MalformedToken(token.to_string()));
                }
                letters.push((b - b'0') as usize);
            }
            continue;
        }
        parse_factors(token, &mut letters)?;
    }
    let max = letters.iter().copied().max().unwrap_or(0);
    let n = match n_override {
        Some(n) => {
            if n == 0 {
                return Err(Error::NoStrands);
            }
            if max >= n {
                return Err(Error::IndexOutOfRange { index: max, n });
            }
            n
        }
        None => (max + 1).max(2),
    };
    if max > Letter::MAX as usize {
        return Err(Error::IndexOutOfRange { index: max, n });
    }
    BraidWord::from_indices(n, &letters)
}

fn parse_factors(token: &str, out: &mut Vec<usize>) -> Result<()> {
    let bad = || Error::MalformedToken(token.to_string());
    let b = token.as_bytes();
    let mut p = 0;
    while p < b.len() {
        if b[p] != b's' {
            return Err(bad());
        }
        p += 1;
        if p < b.len() && b[p] == b'_' {
            p += 1;
        }
        let (index, np) = number(b, p, true).ok_or_else(bad)?;
        p = np;
        let mut exp = 1;
        if p < b.len() && b[p] == b'^' {
            let (e, np) = number(b, p + 1, true).ok_or_else(bad)?;
            if e < 1 {
                return Err(Error::BadExponent(token.to_string()));
            }
            exp = e;
            p = np;
        }
        if index == 0 {
            return Err(bad());
        }
        out.extend(core::iter::repeat_n(index, exp));
    }
    Ok(())
}

/// Reads digits at `p`, optionally wrapped in braces.
fn number(b: &[u8], mut p: usize, braces: bool) -> Option<(usize, usize)> {
    let braced = braces && p < b.len() && b[p] == b'{';
    if braced {
        p += 1;
    }
    let start = p;
    while p < b.len() && b[p].is_ascii_digit() {
        p += 1;
    }
    if p == start || p - start > 6 {
        return None;
    }
    let v = core::str::from_utf8(&b[start..p]).ok()?.parse().ok()?;
    if braced {
        if p >= b.len() || b[p] != b'}' {
            return None;
        }
        p += 1;
    }
    Some((v, p))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn test_grammar() {
        let w = parse_braid("s1^3 s2 s1^3 s2", None).unwrap();
        assert_eq!(w.strands(), 3);
        assert_eq!(w.letters(), &[1, 1, 1, 2, 1, 1, 1, 2]);
        let e = parse_braid("", Some(3)).unwrap();
        assert_eq!((e.strands(), e.len()), (3, 0));
        let b = parse_braid("s1 s2 s3 s1^2 s2 s5 s2 s3 s4", None).unwrap();
        assert_eq!(b.strands(), 6);
        assert_eq!(b.letters(), &[1, 2, 3, 1, 1, 2, 5, 2, 3, 4]);
    }

    #[test]
    fn test_compact_and_glued() {
        assert_eq!(parse_braid("11212", None).unwrap().letters(), &[1, 1, 2, 1, 2]);
        assert_eq!(parse_braid("s_1s_2^{2}", None).unwrap().letters(), &[1, 2, 2]);
        assert_eq!(parse_braid("", None).unwrap().strands(), 2);
    }

    #[test]
    fn test_errors() {
        assert!(matches!(parse_braid("x1", None), Err(Error::MalformedToken(_))));
        assert!(matches!(parse_braid("s1^0", None), Err(Error::BadExponent(_))));
        assert!(matches!(parse_braid("s0", None), Err(Error::MalformedToken(_))));
        assert!(matches!(parse_braid("s3", Some(3)), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(parse_braid("s1^", None), Err(Error::MalformedToken(_))));
        assert!(matches!(parse_braid("102", None), Err(Error::MalformedToken(_))));
    }

    #[test]
    fn test_roundtrip_text() {
        let w = parse_braid("s1^6 s2 s1^3 s2", None).unwrap();
        assert_eq!(parse_braid(&w.to_text(), Some(3)).unwrap(), w);
    }
}
