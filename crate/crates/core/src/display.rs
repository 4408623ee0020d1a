//! Shared rendering of linear combinations.

use num::{One, Signed};

use crate::Rational;

/// Renders `Σ c · left suffix` with `+`/`-` separators.
///
/// An empty `left` stands for the unit and is printed as `1` (or as the bare
/// coefficient). `suffix` is appended verbatim, e.g. `" # d1"`.
pub(crate) fn combination<I>(terms: I) -> String
where
    I: IntoIterator<Item = (Rational, String, String)>,
{
    let mut out = String::new();
    for (i, (c, left, suffix)) in terms.into_iter().enumerate() {
        let negative = c.is_negative();
        let mag = c.abs();
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let body = match (mag.is_one(), left.is_empty()) {
            (true, true) => "1".to_string(),
            (true, false) => left,
            (false, true) => mag.to_string(),
            (false, false) => format!("{mag}*{left}"),
        };
        out.push_str(&body);
        out.push_str(&suffix);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
