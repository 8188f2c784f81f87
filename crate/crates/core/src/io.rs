//! Text formats for maps and trees.
//!
//! Map:
//! ```text
//! map n=2 root=0
//! v: 0 2
//! v: 1 3
//! ```
//! One `v:` line per vertex in order of first visit from the root, each
//! listing its darts counterclockwise. Dart `h` is paired with `h ^ 1`.
//!
//! Tree:
//! ```text
//! tree root=3
//! w: wbbb
//! 0: w b b
//! ```
//! `root` is the border position of the root leaf. Inner vertex 0 is the
//! neighbour of the root leaf; each numbered line lists the slots after the
//! edge to the parent, counterclockwise: `b`, `w`, or the number of a child
//! inner vertex. Numbers follow preorder.
//!
//! Records in a stream are separated by blank lines.

use std::fmt;

use crate::error::ParseError;
use crate::map::PlanarMap;
use crate::trees::EulerianTree;

fn perr(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, column, message: message.into() }
}

impl fmt::Display for PlanarMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "map n=0 root=0");
        }
        write!(f, "map n={} root={}", self.edge_count(), self.root())?;
        for v in self.vertices_from_root() {
            write!(f, "\nv:")?;
            for h in v {
                write!(f, " {h}")?;
            }
        }
        Ok(())
    }
}

/// Parse `key=value` from a header token.
fn field(tok: Option<&str>, key: &str, line: usize) -> Result<usize, ParseError> {
    let tok = tok.ok_or_else(|| perr(line, 1, format!("missing {key}=")))?;
    tok.strip_prefix(key)
        .and_then(|r| r.strip_prefix('='))
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| perr(line, 1, format!("expected {key}=<integer>, found {tok:?}")))
}

/// Lines of a record with their 1-based line numbers.
type Record<'a> = Vec<(usize, &'a str)>;

fn records(text: &str) -> Vec<Record<'_>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    for (i, l) in text.lines().enumerate() {
        if l.trim().is_empty() {
            if !cur.is_empty() {
                out.push(std::mem::take(&mut cur));
            }
        } else {
            cur.push((i + 1, l.trim()));
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

fn parse_map_record(rec: &Record<'_>) -> Result<PlanarMap, ParseError> {
    let (l0, head) = rec[0];
    let mut toks = head.split_whitespace();
    if toks.next() != Some("map") {
        return Err(perr(l0, 1, "expected 'map'"));
    }
    let n = field(toks.next(), "n", l0)?;
    let root = field(toks.next(), "root", l0)?;
    let mut rotation = vec![usize::MAX; 2 * n];
    for &(ln, l) in &rec[1..] {
        if l.starts_with("mark") {
            continue;
        }
        let body = l.strip_prefix("v:").ok_or_else(|| perr(ln, 1, "expected 'v:'"))?;
        let mut ring = Vec::new();
        for t in body.split_whitespace() {
            let h: usize = t.parse().map_err(|_| perr(ln, 1, format!("bad half-edge {t:?}")))?;
            if h >= 2 * n {
                return Err(perr(ln, 1, format!("half-edge {h} out of range")));
            }
            ring.push(h);
        }
        if ring.is_empty() {
            return Err(perr(ln, 1, "empty vertex"));
        }
        for k in 0..ring.len() {
            if rotation[ring[k]] != usize::MAX {
                return Err(perr(ln, 1, format!("half-edge {} listed twice", ring[k])));
            }
            rotation[ring[k]] = ring[(k + 1) % ring.len()];
        }
    }
    if n == 0 {
        return Err(perr(l0, 1, "empty map"));
    }
    if let Some(h) = rotation.iter().position(|&x| x == usize::MAX) {
        return Err(perr(l0, 1, format!("half-edge {h} missing")));
    }
    PlanarMap::new(rotation, root).map_err(|e| perr(l0, 1, e.to_string()))
}

pub fn parse_map(text: &str) -> Result<PlanarMap, ParseError> {
    let mut maps = parse_maps(text)?;
    if maps.len() != 1 {
        return Err(perr(1, 1, format!("expected one map, found {}", maps.len())));
    }
    Ok(maps.remove(0))
}

pub fn parse_maps(text: &str) -> Result<Vec<PlanarMap>, ParseError> {
    records(text).iter().map(parse_map_record).collect()
}

/// `key=value` pairs read from the `mark` lines of a record, in order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Marks(pub Vec<(String, String)>);

impl Marks {
    pub fn all(&self, key: &str) -> Vec<&str> {
        self.0.iter().filter(|(k, _)| k == key).map(|(_, v)| v.as_str()).collect()
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.all(key).into_iter().next()
    }
}

fn parse_marks(rec: &Record<'_>) -> Result<Marks, ParseError> {
    let mut out = Vec::new();
    for &(ln, l) in rec {
        let Some(body) = l.strip_prefix("mark") else { continue };
        for tok in body.split_whitespace() {
            let (k, v) = tok.split_once('=').ok_or_else(|| perr(ln, 1, format!("expected key=value, found {tok:?}")))?;
            out.push((k.to_string(), v.to_string()));
        }
    }
    Ok(Marks(out))
}

/// Maps together with the marks recorded under each.
pub fn parse_marked_maps(text: &str) -> Result<Vec<(PlanarMap, Marks)>, ParseError> {
    records(text).iter().map(|r| Ok((parse_map_record(r)?, parse_marks(r)?))).collect()
}

impl fmt::Display for EulerianTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn rec(t: &EulerianTree, into: usize, lines: &mut Vec<String>) -> usize {
            let id = lines.len();
            lines.push(String::new());
            let mut slots = Vec::new();
            let mut h = t.rotation()[into];
            while h != into {
                let far = h ^ 1;
                match t.color(far) {
                    Some(c) => slots.push(c.letter().to_string()),
                    None => slots.push(rec(t, far, lines).to_string()),
                }
                h = t.rotation()[h];
            }
            lines[id] = slots.join(" ");
            id
        }
        let word = self.word();
        write!(f, "tree root={}\nw: {}", word.len() - 1, word)?;
        let mut lines = Vec::new();
        rec(self, 1, &mut lines);
        for (i, l) in lines.iter().enumerate() {
            write!(f, "\n{i}: {l}")?;
        }
        Ok(())
    }
}

fn parse_tree_record(rec: &Record<'_>) -> Result<EulerianTree, ParseError> {
    let (l0, head) = rec[0];
    let mut toks = head.split_whitespace();
    if toks.next() != Some("tree") {
        return Err(perr(l0, 1, "expected 'tree'"));
    }
    let root = field(toks.next(), "root", l0)?;
    let (lw, wline) = *rec.get(1).ok_or_else(|| perr(l0, 1, "missing 'w:' line"))?;
    let word = wline.strip_prefix("w:").ok_or_else(|| perr(lw, 1, "expected 'w:'"))?.trim();
    let anchor = word.chars().last().ok_or_else(|| perr(lw, 1, "empty word"))?;
    let mut slots: Vec<Vec<&str>> = Vec::new();
    for (k, &(ln, l)) in rec[2..].iter().enumerate() {
        let (id, body) = l.split_once(':').ok_or_else(|| perr(ln, 1, "expected '<id>:'"))?;
        if id.trim().parse::<usize>().ok() != Some(k) {
            return Err(perr(ln, 1, format!("expected inner vertex {k}")));
        }
        slots.push(body.split_whitespace().collect());
    }
    if slots.is_empty() {
        return Err(perr(l0, 1, "no inner vertex"));
    }
    // rebuild the nested shape, checking that every vertex is used once
    fn nest(v: usize, slots: &[Vec<&str>], used: &mut [bool], out: &mut String) -> Result<(), String> {
        if v >= slots.len() || std::mem::replace(&mut used[v], true) {
            return Err(format!("inner vertex {v} missing or reused"));
        }
        out.push('(');
        for s in &slots[v] {
            match *s {
                "b" | "w" => out.push_str(s),
                n => nest(n.parse().map_err(|_| format!("bad slot {n:?}"))?, slots, used, out)?,
            }
        }
        out.push(')');
        Ok(())
    }
    let mut shape = anchor.to_string();
    let mut used = vec![false; slots.len()];
    nest(0, &slots, &mut used, &mut shape).map_err(|m| perr(l0, 1, m))?;
    if used.iter().any(|u| !u) {
        return Err(perr(l0, 1, "unreachable inner vertex"));
    }
    let loose = crate::trees::parse_shape(&shape, l0)?;
    let (leaves, w) = loose.word_after(0);
    if w.to_string() != word {
        return Err(perr(lw, 1, format!("word {word} does not match the vertices ({w})")));
    }
    let leaf = *leaves.get(root).ok_or_else(|| perr(l0, 1, format!("root {root} out of range")))?;
    loose.into_tree(leaf).map(|(t, _)| t).map_err(|e| perr(l0, 1, e.to_string()))
}

pub fn parse_tree(text: &str) -> Result<EulerianTree, ParseError> {
    let mut trees = parse_trees(text)?;
    if trees.len() != 1 {
        return Err(perr(1, 1, format!("expected one tree, found {}", trees.len())));
    }
    Ok(trees.remove(0))
}

pub fn parse_trees(text: &str) -> Result<Vec<EulerianTree>, ParseError> {
    records(text).iter().map(parse_tree_record).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const DIGON: &str = "map n=2 root=0\nv: 0 2\nv: 1 3";

    #[test]
    fn map_roundtrip() {
        let m = parse_map(DIGON).unwrap();
        assert_eq!(m.rotation(), &[2, 3, 0, 1]);
        assert_eq!(m.to_string(), DIGON);
    }

    #[test]
    fn records_and_marks() {
        let text = format!("{DIGON}\nmark vertex=1\n\n\n{DIGON}\nmark edge=0 sign=-\nmark edge=1\n");
        let maps = parse_marked_maps(&text).unwrap();
        assert_eq!(maps.len(), 2);
        assert_eq!(maps[0].1.get("vertex"), Some("1"));
        assert_eq!(maps[1].1.all("edge"), vec!["0", "1"]);
        assert_eq!(maps[1].1.get("sign"), Some("-"));
        assert_eq!(parse_maps(&text).unwrap().len(), 2);
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_map("map n=2 root=0\nv: 0 2\nv: 1 x").unwrap_err();
        assert_eq!(e.line, 3);
        assert!(parse_map("tree root=0").is_err());
        assert!(parse_marked_maps(&format!("{DIGON}\nmark vertex")).is_err());
    }

    #[test]
    fn tree_roundtrip() {
        let t = EulerianTree::from_shape("b(wbb)").unwrap();
        let text = t.to_string();
        assert!(text.starts_with("tree root="));
        assert_eq!(parse_tree(&text).unwrap(), t);
        assert_eq!(parse_trees(&format!("{text}\n\n{text}\n")).unwrap().len(), 2);
    }
}
