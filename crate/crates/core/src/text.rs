//! Small tokenizing helpers shared by the text formats.

use std::str::FromStr;

use crate::{Error, Result};

/// Splits `s` on `sep`, returning trimmed pieces with their byte offsets in
/// the original input (`base` is the offset of `s`).
pub(crate) fn pieces(s: &str, base: usize, sep: char) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = 0;
    for (i, ch) in s.char_indices().chain(std::iter::once((s.len(), sep))) {
        if ch == sep {
            let raw = &s[start..i];
            let lead = raw.len() - raw.trim_start().len();
            out.push((base + start + lead, raw.trim()));
            start = i + ch.len_utf8();
        }
    }
    out
}

pub(crate) fn number<T: FromStr>(token: &str, pos: usize) -> Result<T> {
    let compact: String = token.chars().filter(|c| !c.is_whitespace()).collect();
    compact
        .parse()
        .map_err(|_| Error::parse(token, pos, "expected a nonnegative integer"))
}
