//! Line-oriented text format for formal sums.
//!
//! ```text
//! space W
//! sum
//!   1/2 :: legs=[g1,g2] iota=no loops=0
//!          verts={v1:(h1,h2,h3)} edges={(l1,h1),(l2,h2),(h3,...)}
//! ```
//!
//! Leg half-edges are named `l1..ln`, the ι half-edge `li`. Comments start
//! with `#`.

use crate::diagram::{Diagram, End};
use crate::error::{DiagramError, Result};
use crate::leg::{Flavor, Leg, Line};
use crate::signature::Signature;
use crate::sum::{format_coeff, Coeff, FormalSum};
use num_bigint::BigInt;
use std::collections::HashMap;
use std::fmt::Write;
use std::str::FromStr;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Word(String),
    Punct(char),
    DoubleColon,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn tokenize(text: &str) -> Vec<Token> {
    let mut out = Vec::new();
    for (li, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let col = i + 1;
            if c.is_whitespace() {
                i += 1;
            } else if c == ':' && i + 1 < chars.len() && chars[i + 1] == ':' {
                out.push(Token { tok: Tok::DoubleColon, line: li + 1, col });
                i += 2;
            } else if "[]{}(),=:".contains(c) {
                out.push(Token { tok: Tok::Punct(c), line: li + 1, col });
                i += 1;
            } else {
                let start = i;
                while i < chars.len() && !chars[i].is_whitespace() && !"[]{}(),=:".contains(chars[i]) {
                    i += 1;
                }
                out.push(Token {
                    tok: Tok::Word(chars[start..i].iter().collect()),
                    line: li + 1,
                    col,
                });
            }
        }
    }
    out
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        let (line, col) = match self.toks.get(self.pos) {
            Some(t) => (t.line, t.col),
            None => self.toks.last().map_or((1, 1), |t| (t.line, t.col + 1)),
        };
        Err(DiagramError::Syntax {
            line,
            col,
            msg: msg.into(),
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn word(&mut self) -> Result<String> {
        match self.peek() {
            Some(Tok::Word(w)) => {
                let w = w.clone();
                self.pos += 1;
                Ok(w)
            }
            _ => self.err("expected a word"),
        }
    }

    fn punct(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(&Tok::Punct(c)) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected '{c}'"))
        }
    }

    fn keyword(&mut self, k: &str) -> Result<()> {
        match self.peek() {
            Some(Tok::Word(w)) if w == k => {
                self.pos += 1;
                Ok(())
            }
            _ => self.err(format!("expected '{k}'")),
        }
    }

    fn at_term_start(&self) -> bool {
        matches!(self.peek(), Some(Tok::Word(_)))
            && matches!(self.toks.get(self.pos + 1).map(|t| &t.tok), Some(Tok::DoubleColon))
    }

    /// Comma-separated items between `open` and `close`.
    fn list<T>(&mut self, open: char, close: char, mut item: impl FnMut(&mut Self) -> Result<T>) -> Result<Vec<T>> {
        self.punct(open)?;
        let mut out = Vec::new();
        if self.peek() == Some(&Tok::Punct(close)) {
            self.pos += 1;
            return Ok(out);
        }
        loop {
            out.push(item(self)?);
            if self.peek() == Some(&Tok::Punct(',')) {
                self.pos += 1;
            } else {
                self.punct(close)?;
                return Ok(out);
            }
        }
    }
}

fn parse_coeff(w: &str) -> Option<Coeff> {
    let (n, d) = match w.split_once('/') {
        Some((n, d)) => (n, d),
        None => (w, "1"),
    };
    let n = BigInt::from_str(n.strip_prefix('+').unwrap_or(n)).ok()?;
    let d = BigInt::from_str(d).ok()?;
    if d == BigInt::from(0) {
        return None;
    }
    Some(Coeff::new(n, d))
}

fn parse_leg(w: &str) -> Option<Leg> {
    let (f, line) = match w.split_once('@') {
        Some((f, "nc")) => (f, Line::Nc),
        Some((f, "c")) => (f, Line::C),
        Some(_) => return None,
        None => (w, Line::None),
    };
    let flavor = match f {
        "g1" => Flavor::G1,
        "g2" => Flavor::Fat,
        "F" => Flavor::F,
        _ => return None,
    };
    Some(Leg::on(flavor, line))
}

struct RawTerm {
    coeff: Coeff,
    legs: Vec<Leg>,
    iota: bool,
    loops: u32,
    discs: Vec<char>,
    verts: Vec<(String, [String; 3])>,
    edges: Vec<(String, String)>,
    line: usize,
}

fn parse_term(p: &mut Parser) -> Result<RawTerm> {
    let line = p.toks[p.pos].line;
    let cw = p.word()?;
    let coeff = match parse_coeff(&cw) {
        Some(c) => c,
        None => {
            p.pos -= 1;
            return p.err(format!("bad coefficient '{cw}'"));
        }
    };
    if p.peek() != Some(&Tok::DoubleColon) {
        return p.err("expected '::'");
    }
    p.pos += 1;
    let mut t = RawTerm {
        coeff,
        legs: Vec::new(),
        iota: false,
        loops: 0,
        discs: Vec::new(),
        verts: Vec::new(),
        edges: Vec::new(),
        line,
    };
    while p.peek().is_some() && !p.at_term_start() {
        let key = p.word()?;
        p.punct('=')?;
        match key.as_str() {
            "legs" => {
                t.legs = p.list('[', ']', |p| {
                    let w = p.word()?;
                    match parse_leg(&w) {
                        Some(l) => Ok(l),
                        None => {
                            p.pos -= 1;
                            p.err(format!("bad leg token '{w}'"))
                        }
                    }
                })?;
            }
            "iota" => {
                let w = p.word()?;
                t.iota = match w.as_str() {
                    "yes" => true,
                    "no" => false,
                    _ => {
                        p.pos -= 1;
                        return p.err("expected yes or no");
                    }
                };
            }
            "loops" => {
                let w = p.word()?;
                t.loops = match w.parse() {
                    Ok(v) => v,
                    Err(_) => {
                        p.pos -= 1;
                        return p.err("expected a nonnegative integer");
                    }
                };
            }
            "discs" => {
                t.discs = p.list('[', ']', |p| {
                    let w = p.word()?;
                    match w.as_str() {
                        "o" => Ok('o'),
                        "x" => Ok('x'),
                        _ => {
                            p.pos -= 1;
                            p.err("expected o or x")
                        }
                    }
                })?;
            }
            "verts" => {
                t.verts = p.list('{', '}', |p| {
                    let name = p.word()?;
                    p.punct(':')?;
                    let hs = p.list('(', ')', |p| p.word())?;
                    if hs.len() != 3 {
                        return p.err("a vertex needs exactly three half-edges");
                    }
                    Ok((name, [hs[0].clone(), hs[1].clone(), hs[2].clone()]))
                })?;
            }
            "edges" => {
                t.edges = p.list('{', '}', |p| {
                    let hs = p.list('(', ')', |p| p.word())?;
                    if hs.len() != 2 {
                        return p.err("an edge needs exactly two half-edges");
                    }
                    Ok((hs[0].clone(), hs[1].clone()))
                })?;
            }
            other => {
                p.pos -= 2;
                return p.err(format!("unknown field '{other}'"));
            }
        }
    }
    Ok(t)
}

fn build(t: &RawTerm, sig: Signature) -> Result<(Diagram, i32)> {
    let sem = |m: String| DiagramError::Semantic(format!("term at line {}: {}", t.line, m));
    let n = t.legs.len();
    let mut names: HashMap<String, u32> = HashMap::new();
    for i in 0..n {
        names.insert(format!("l{}", i + 1), i as u32);
    }
    if t.iota {
        names.insert("li".into(), n as u32);
    }
    let base = n as u32 + t.iota as u32;
    for (v, (vn, hs)) in t.verts.iter().enumerate() {
        for (k, h) in hs.iter().enumerate() {
            if names.contains_key(h) {
                return Err(sem(format!("vertex {vn}: half-edge '{h}' repeated or reserved")));
            }
            names.insert(h.clone(), base + 3 * v as u32 + k as u32);
        }
    }
    let total = base as usize + 3 * t.verts.len();
    let mut partner = vec![u32::MAX; total];
    for (a, b) in &t.edges {
        let ha = *names.get(a).ok_or_else(|| sem(format!("unknown half-edge '{a}'")))?;
        let hb = *names.get(b).ok_or_else(|| sem(format!("unknown half-edge '{b}'")))?;
        if ha == hb {
            return Err(sem(format!("edge joins '{a}' to itself")));
        }
        for h in [ha, hb] {
            if partner[h as usize] != u32::MAX {
                return Err(sem("half-edge appears in two edges".to_string()));
            }
        }
        partner[ha as usize] = hb;
        partner[hb as usize] = ha;
    }
    if let Some(h) = partner.iter().position(|&p| p == u32::MAX) {
        return Err(sem(format!("half-edge #{h} is dangling")));
    }
    let filled = t.discs.iter().filter(|&&c| c == 'x').count() as u32;
    let open = t.discs.len() as u32 - filled;
    let d = Diagram {
        legs: t.legs.clone(),
        iota: t.iota,
        nverts: t.verts.len() as u32,
        partner,
        filled,
        open,
        loops: t.loops,
    };
    d.validate(sig).map_err(|e| sem(e.to_string()))?;
    Ok((d, 1))
}

/// Parses a formal sum.
pub fn parse(text: &str) -> Result<FormalSum> {
    let mut p = Parser {
        toks: tokenize(text),
        pos: 0,
    };
    p.keyword("space")?;
    let name = p.word()?;
    let sig = match Signature::parse(&name) {
        Some(s) => s,
        None => {
            p.pos -= 1;
            return p.err(format!("unknown space '{name}'"));
        }
    };
    p.keyword("sum")?;
    let mut out = FormalSum::zero(sig);
    while p.peek().is_some() {
        if !p.at_term_start() {
            return p.err("expected a term 'coefficient :: ...'");
        }
        let t = parse_term(&mut p)?;
        let (d, s) = build(&t, sig)?;
        out.add_signed(&d, s, &t.coeff);
    }
    Ok(out)
}

fn half_name(d: &Diagram, h: u32) -> String {
    match d.end(h) {
        End::Leg(i) => format!("l{}", i + 1),
        End::Iota => "li".into(),
        End::Vertex(v, k) => format!("h{}", 3 * v + k + 1),
    }
}

/// Serializes one term body.
pub fn serialize_diagram(d: &Diagram) -> String {
    let mut s = String::new();
    let legs: Vec<String> = d.legs.iter().map(|l| l.to_string()).collect();
    write!(
        s,
        "legs=[{}] iota={} loops={}",
        legs.join(","),
        if d.iota { "yes" } else { "no" },
        d.loops
    )
    .unwrap();
    if d.filled + d.open > 0 {
        let mut discs = vec!["x"; d.filled as usize];
        discs.extend(std::iter::repeat("o").take(d.open as usize));
        write!(s, " discs=[{}]", discs.join(",")).unwrap();
    }
    let verts: Vec<String> = (0..d.nverts as usize)
        .map(|v| format!("v{}:(h{},h{},h{})", v + 1, 3 * v + 1, 3 * v + 2, 3 * v + 3))
        .collect();
    let edges: Vec<String> = (0..d.partner.len() as u32)
        .filter(|&h| h < d.partner[h as usize])
        .map(|h| format!("({},{})", half_name(d, h), half_name(d, d.partner[h as usize])))
        .collect();
    write!(s, " verts={{{}}} edges={{{}}}", verts.join(","), edges.join(",")).unwrap();
    s
}

/// Serializes a formal sum in canonical term order.
pub fn serialize(s: &FormalSum) -> String {
    let mut out = format!("space {}\nsum\n", s.signature().name());
    for (d, c) in s.sorted() {
        writeln!(out, "  {} :: {}", format_coeff(c), serialize_diagram(d)).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signature::Space;
    use crate::sum::q;

    #[test]
    fn parse_example() {
        let text = "space W   # comment\nsum\n  1/2 :: legs=[g1,g2] iota=no loops=0\n         verts={} edges={(l1,l2)}\n";
        let s = parse(text).unwrap();
        assert_eq!(s.len(), 1);
        let (d, c) = s.sorted()[0];
        assert_eq!(*c, q(1, 2));
        assert_eq!(d.legs, vec![Leg::FAT, Leg::G1]);
    }

    #[test]
    fn empty_sum_is_zero() {
        let s = parse("space A\nsum\n").unwrap();
        assert!(s.is_zero());
        assert_eq!(s.signature(), Signature::plain(Space::A));
    }

    #[test]
    fn repeated_half_edge_is_semantic_error() {
        let text = "space B\nsum\n 1 :: legs=[g2] verts={v1:(a,a,b)} edges={(l1,a)}";
        assert!(matches!(parse(text), Err(DiagramError::Semantic(_))));
    }

    #[test]
    fn syntax_error_has_position() {
        let text = "space B\nsum\n 1 :: legs=[g7]";
        match parse(text) {
            Err(DiagramError::Syntax { line, col, .. }) => {
                assert_eq!(line, 3);
                assert_eq!(col, 13);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn roundtrip_wheel() {
        let s = FormalSum::from_diagram(&Diagram::wheel(4, Leg::FAT), Signature::plain(Space::B));
        let back = parse(&serialize(&s)).unwrap();
        assert_eq!(back, s);
    }
}
