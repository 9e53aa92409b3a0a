//! The poset file format.
//!
//! `#` starts a comment, blank lines are ignored, and data lines are either
//! `a < b` (a strict order assertion, not necessarily a cover) or
//! `element x` (an isolated element declaration). The renderer emits exactly
//! the cover relation, sorted by (lower, upper) name, after `element` lines
//! for cover-isolated elements.

use crate::error::{PosetError, Result};
use crate::poset::{build_poset, Poset};

pub fn parse_poset(text: &str) -> Result<Poset> {
    let mut relations: Vec<(String, String)> = Vec::new();
    let mut isolated: Vec<String> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.as_slice() {
            [] => {}
            ["element", name] => isolated.push((*name).to_string()),
            [a, "<", b] => relations.push(((*a).to_string(), (*b).to_string())),
            _ => {
                return Err(PosetError::ParseError {
                    line: lineno + 1,
                    message: format!("expected `a < b` or `element x`, got `{}`", line.trim()),
                })
            }
        }
    }
    build_poset(&relations, &isolated)
}

pub fn render_poset(p: &Poset) -> String {
    let mut out = String::new();
    let mut lonely: Vec<&str> = p
        .elements()
        .filter(|&x| p.upper_covers(x).is_empty() && p.lower_covers(x).is_empty())
        .map(|x| p.name(x))
        .collect();
    lonely.sort_unstable();
    for name in lonely {
        out.push_str("element ");
        out.push_str(name);
        out.push('\n');
    }
    let mut covers: Vec<(&str, &str)> = p
        .cover_pairs()
        .into_iter()
        .map(|(x, y)| (p.name(x), p.name(y)))
        .collect();
    covers.sort_unstable();
    for (a, b) in covers {
        out.push_str(a);
        out.push_str(" < ");
        out.push_str(b);
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec};

    #[test]
    fn parse_with_comments_and_blanks() {
        let p = parse_poset("# a comment\n\na < b  # trailing\nb < c\nelement d\n").unwrap();
        assert_eq!(p.len(), 4);
        assert!(p.leq(p.element("a").unwrap(), p.element("c").unwrap()));
        assert!(p.upper_covers(p.element("d").unwrap()).is_empty());
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = parse_poset("a < b\nnonsense here now extra\n").unwrap_err();
        assert!(matches!(err, PosetError::ParseError { line: 2, .. }));
        assert!(parse_poset("a < a\n").is_err());
    }

    #[test]
    fn render_parse_render_is_stable() {
        for spec in ["pentagon", "chain:4", "boolean:3", "prop4-witness", "antichain:3"] {
            let p = generate(&spec.parse::<FamilySpec>().unwrap()).unwrap();
            let once = render_poset(&p);
            let twice = render_poset(&parse_poset(&once).unwrap());
            assert_eq!(once, twice, "round trip for {spec}");
        }
    }

    #[test]
    fn renderer_emits_covers_only() {
        let p = parse_poset("a < c\na < b\nb < c\n").unwrap();
        assert_eq!(render_poset(&p), "a < b\nb < c\n");
    }
}
