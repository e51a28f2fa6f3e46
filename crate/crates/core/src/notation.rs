//! Bracketed comma-separated integer lists, e.g. `[-3,-1,2,-5,-4]`.

use crate::error::{Error, Result};

pub fn parse_list(text: &str) -> Result<Vec<i64>> {
    let trimmed = text.trim();
    let inner = trimmed
        .strip_prefix('[')
        .and_then(|rest| rest.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected a bracketed list, got {trimmed:?}")))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|item| {
            let item = item.trim();
            item.parse::<i64>()
                .map_err(|_| Error::Parse(format!("{item:?} is not an integer")))
        })
        .collect()
}

pub fn format_list(values: &[i64]) -> String {
    let body: Vec<String> = values.iter().map(i64::to_string).collect();
    format!("[{}]", body.join(","))
}

/// `⌈a / b⌉` for `b > 0`.
pub(crate) fn ceil_div(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    -(-a).div_euclid(b)
}
