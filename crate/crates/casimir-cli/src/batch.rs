//! Line-oriented batch input: one stable representation per line in the
//! `k | h1 .. hk / t1 .. tk` format, `#` starts a comment.

use casimir::StableRep;

pub enum Line {
    Empty,
    Rep(StableRep),
    Error(String),
}

pub fn parse_line(line: &str) -> Line {
    let content = match line.split_once('#') {
        Some((before, _)) => before,
        None => line,
    };
    let content = content.trim();
    if content.is_empty() {
        return Line::Empty;
    }
    match content.parse::<StableRep>() {
        Ok(rep) => Line::Rep(rep),
        Err(e) => Line::Error(e),
    }
}
