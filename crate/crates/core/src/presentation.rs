//! Finitely presented groups: word syntax, relator checks against a matrix
//! assignment, and HLT coset enumeration with lookahead.
//!
//! Word syntax: `x6^3*t1*x18^-13`, with `(w)^k` and `[a,b] = a^-1 b^-1 a b`
//! also accepted. Presentation files:
//!
//! ```text
//! gens: a, b
//! rels: a^2, b^2, (a*b)^3
//! ```

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::ExactMatrix;

pub const DEFAULT_COSET_LIMIT: usize = 100_000;

/// Letter `2g` is generator `g`, `2g + 1` its inverse.
pub type Letter = usize;

fn inv(x: Letter) -> Letter {
    x ^ 1
}

/// Freely reduced word over the generators of a presentation.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for x in letters {
            if out.last() == Some(&inv(x)) {
                out.pop();
            } else {
                out.push(x);
            }
        }
        Word(out)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Word(self.0.iter().rev().map(|&x| inv(x)).collect())
    }

    pub fn concat(&self, other: &Word) -> Self {
        Word::from_letters(self.0.iter().chain(&other.0).copied())
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        Word::from_letters((0..k.unsigned_abs()).flat_map(|_| base.0.iter().copied()))
    }

    /// Parses against a generator list.
    pub fn parse(text: &str, generators: &[String]) -> Result<Self> {
        let mut p = Parser { chars: text.chars().filter(|c| !c.is_whitespace()).collect(), pos: 0, generators };
        if p.chars.is_empty() || p.chars == ['1'] {
            return Ok(Word::default());
        }
        let w = p.word()?;
        if p.pos != p.chars.len() {
            return Err(Error::Parse(format!("trailing input in word {text:?}")));
        }
        Ok(w)
    }

    /// Text form with runs compressed: `x6^3*t1*x18^-13`; the empty word is `1`.
    pub fn display(&self, generators: &[String]) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        let mut k = 0;
        while k < self.0.len() {
            let x = self.0[k];
            let run = self.0[k..].iter().take_while(|&&y| y == x).count();
            let exp = if x % 2 == 0 { run as i64 } else { -(run as i64) };
            let name = &generators[x / 2];
            parts.push(if exp == 1 { name.clone() } else { format!("{name}^{exp}") });
            k += run;
        }
        parts.join("*")
    }

    /// Product of the assigned matrices.
    pub fn evaluate(&self, generators: &[String], assign: &BTreeMap<String, ExactMatrix>) -> Result<ExactMatrix> {
        let mats: Vec<&ExactMatrix> = generators
            .iter()
            .map(|g| assign.get(g).ok_or_else(|| Error::UnassignedGenerator(g.clone())))
            .collect::<Result<_>>()?;
        let first = mats.first().ok_or(Error::EmptyGenerators)?;
        let mut inverses: BTreeMap<usize, ExactMatrix> = BTreeMap::new();
        let mut acc = ExactMatrix::identity(first.field(), first.dim());
        for &x in &self.0 {
            let g = x / 2;
            let m = if x % 2 == 0 {
                mats[g].clone()
            } else {
                match inverses.get(&g) {
                    Some(m) => m.clone(),
                    None => {
                        let m = mats[g].inverse()?;
                        inverses.insert(g, m.clone());
                        m
                    }
                }
            };
            acc = acc.try_mul(&m)?;
        }
        Ok(acc)
    }
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    generators: &'a [String],
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::Parse(format!("expected {c:?} at offset {}", self.pos)))
        }
    }

    fn word(&mut self) -> Result<Word> {
        let mut w = self.factor()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            w = w.concat(&self.factor()?);
        }
        Ok(w)
    }

    fn factor(&mut self) -> Result<Word> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let start = self.pos;
            if self.peek() == Some('-') {
                self.pos += 1;
            }
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
            let text: String = self.chars[start..self.pos].iter().collect();
            let k: i64 = text.parse().map_err(|_| Error::Parse(format!("bad exponent {text:?}")))?;
            return Ok(base.pow(k));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Word> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let w = self.word()?;
                self.expect(')')?;
                Ok(w)
            }
            Some('[') => {
                self.pos += 1;
                let a = self.word()?;
                self.expect(',')?;
                let b = self.word()?;
                self.expect(']')?;
                Ok(a.inverse().concat(&b.inverse()).concat(&a).concat(&b))
            }
            Some(c) if c.is_alphanumeric() || c == '_' => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_alphanumeric() || c == '_') {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                if name == "1" {
                    return Ok(Word::default());
                }
                let g = self
                    .generators
                    .iter()
                    .position(|x| *x == name)
                    .ok_or_else(|| Error::UnknownGenerator(name.clone()))?;
                Ok(Word(vec![2 * g]))
            }
            other => Err(Error::Parse(format!("unexpected {other:?} at offset {}", self.pos))),
        }
    }
}

/// Splits on commas outside brackets.
fn split_top_level(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in s.chars() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(std::mem::take(&mut cur));
                continue;
            }
            _ => {}
        }
        cur.push(c);
    }
    out.push(cur);
    out.into_iter().map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPresentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl GroupPresentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        let mut seen = HashSet::new();
        for g in &generators {
            if !seen.insert(g) {
                return Err(Error::DuplicateGenerator(g.clone()));
            }
            if g.is_empty() || !g.chars().all(|c| c.is_alphanumeric() || c == '_') || g == "1" {
                return Err(Error::Parse(format!("bad generator name {g:?}")));
            }
        }
        if let Some(bad) = relators.iter().flat_map(|r| r.letters()).find(|&&x| x / 2 >= generators.len()) {
            return Err(Error::UnknownGenerator(format!("#{}", bad / 2)));
        }
        Ok(GroupPresentation { generators, relators })
    }

    /// Builds from generator names and relator texts.
    pub fn parse_parts(generators: &[&str], relators: &[&str]) -> Result<Self> {
        let gens: Vec<String> = generators.iter().map(|s| s.to_string()).collect();
        let rels = relators.iter().map(|r| Word::parse(r, &gens)).collect::<Result<_>>()?;
        Self::new(gens, rels)
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn parse_word(&self, text: &str) -> Result<Word> {
        Word::parse(text, &self.generators)
    }

    pub fn with_relators(&self, relators: Vec<Word>) -> Self {
        GroupPresentation { generators: self.generators.clone(), relators }
    }

    /// Two generators `x6, x18, t1, t2` and the ten relators of the order-648 group.
    pub fn qutrit_648() -> Self {
        LEMMA_TEXT.parse().expect("built-in presentation parses")
    }

    /// Relators evaluated under the assignment; pass iff each is the identity.
    pub fn check_relations(&self, assign: &BTreeMap<String, ExactMatrix>) -> Result<RelationReport> {
        if let Some(g) = self.generators.iter().find(|g| !assign.contains_key(*g)) {
            return Err(Error::UnassignedGenerator(g.clone()));
        }
        let entries = self
            .relators
            .iter()
            .map(|r| {
                Ok(RelatorCheck { relator: r.display(&self.generators), passed: r.evaluate(&self.generators, assign)?.is_identity() })
            })
            .collect::<Result<_>>()?;
        Ok(RelationReport { entries })
    }

    /// Index of the subgroup generated by `subgroup` (the group order for an
    /// empty list), by HLT enumeration with lookahead.
    pub fn todd_coxeter(&self, subgroup: &[Word], limit: usize) -> Result<CosetEnumeration> {
        CosetTable::new(self, limit).enumerate(&self.relators, subgroup)
    }
}

const LEMMA_TEXT: &str = "gens: x6, x18, t1, t2
rels: t1^2, t2^2, x6^6, x18^18, [x6,x18], (t1*t2)^3,
      t1*x6*t1*x6, t1*x18*t1*x18^-1*x6^-3, t2*x6*t2*x18^-3*x6^-5, t2*x18*t2*x18^-13*x6^-4
";

impl FromStr for GroupPresentation {
    type Err = Error;

    /// `gens:` and `rels:` sections; a section continues on following lines
    /// until the next header. `#` starts a comment.
    fn from_str(s: &str) -> Result<Self> {
        let mut gens_text = String::new();
        let mut rels_text = String::new();
        let mut section: Option<bool> = None;
        for line in s.lines() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let rest = if let Some(r) = line.strip_prefix("gens:") {
                section = Some(true);
                r
            } else if let Some(r) = line.strip_prefix("rels:") {
                section = Some(false);
                r
            } else {
                line
            };
            let target = match section {
                Some(true) => &mut gens_text,
                Some(false) => &mut rels_text,
                None => return Err(Error::Parse(format!("line outside a section: {line:?}"))),
            };
            target.push(',');
            target.push_str(rest);
        }
        let gens: Vec<String> = split_top_level(&gens_text);
        if gens.is_empty() {
            return Err(Error::Parse("no generators".into()));
        }
        let rels = split_top_level(&rels_text).iter().map(|r| Word::parse(r, &gens)).collect::<Result<_>>()?;
        Self::new(gens, rels)
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "gens: {}", self.generators.join(", "))?;
        let rels: Vec<String> = self.relators.iter().map(|r| r.display(&self.generators)).collect();
        writeln!(f, "rels: {}", rels.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelatorCheck {
    pub relator: String,
    pub passed: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationReport {
    pub entries: Vec<RelatorCheck>,
}

impl RelationReport {
    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetEnumeration {
    /// Number of live cosets at completion.
    pub index: usize,
    /// Cosets ever defined.
    pub defined: usize,
    /// Peak number of live cosets.
    pub max_active: usize,
}

const UNDEF: usize = usize::MAX;

/// Signals that the live-coset limit was reached during a definition.
struct LimitHit;

struct CosetTable {
    cols: usize,
    table: Vec<Vec<usize>>,
    parent: Vec<usize>,
    active: usize,
    max_active: usize,
    limit: usize,
}

impl CosetTable {
    fn new(p: &GroupPresentation, limit: usize) -> Self {
        let cols = 2 * p.generators.len();
        CosetTable { cols, table: vec![vec![UNDEF; cols]], parent: vec![0], active: 1, max_active: 1, limit }
    }

    fn alive(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut r = c;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut c = c;
        while self.parent[c] != r {
            let next = self.parent[c];
            self.parent[c] = r;
            c = next;
        }
        r
    }

    fn define(&mut self, c: usize, x: Letter) -> std::result::Result<(), LimitHit> {
        if self.active >= self.limit {
            return Err(LimitHit);
        }
        let n = self.table.len();
        self.table.push(vec![UNDEF; self.cols]);
        self.parent.push(n);
        self.table[c][x] = n;
        self.table[n][inv(x)] = c;
        self.active += 1;
        self.max_active = self.max_active.max(self.active);
        Ok(())
    }

    fn merge(&mut self, k: usize, l: usize, queue: &mut Vec<usize>) {
        let (k, l) = (self.rep(k), self.rep(l));
        if k == l {
            return;
        }
        let (keep, drop) = (k.min(l), k.max(l));
        self.parent[drop] = keep;
        self.active -= 1;
        queue.push(drop);
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        let mut queue = Vec::new();
        self.merge(a, b, &mut queue);
        let mut i = 0;
        while i < queue.len() {
            let e = queue[i];
            i += 1;
            for x in 0..self.cols {
                let f = self.table[e][x];
                if f == UNDEF {
                    continue;
                }
                self.table[f][inv(x)] = UNDEF;
                let e1 = self.rep(e);
                let f1 = self.rep(f);
                if self.table[e1][x] != UNDEF {
                    let t = self.table[e1][x];
                    self.merge(f1, t, &mut queue);
                } else if self.table[f1][inv(x)] != UNDEF {
                    let t = self.table[f1][inv(x)];
                    self.merge(e1, t, &mut queue);
                } else {
                    self.table[e1][x] = f1;
                    self.table[f1][inv(x)] = e1;
                }
            }
        }
    }

    /// Scans `w` at coset `c`; fills gaps by definition when `fill` is set.
    fn scan(&mut self, c: usize, w: &[Letter], fill: bool) -> std::result::Result<(), LimitHit> {
        if w.is_empty() {
            return Ok(());
        }
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0isize, w.len() as isize - 1);
        loop {
            while i <= j && self.table[f][w[i as usize]] != UNDEF {
                f = self.table[f][w[i as usize]];
                i += 1;
            }
            if i > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i && self.table[b][inv(w[j as usize])] != UNDEF {
                b = self.table[b][inv(w[j as usize])];
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            }
            if i == j {
                let x = w[i as usize];
                self.table[f][x] = b;
                self.table[b][inv(x)] = f;
                return Ok(());
            }
            if !fill {
                return Ok(());
            }
            self.define(f, w[i as usize])?;
        }
    }

    /// Scans every relator at every live coset without defining new ones.
    fn lookahead(&mut self, relators: &[Word]) {
        let mut c = 0;
        while c < self.table.len() {
            for r in relators {
                if !self.alive(c) {
                    break;
                }
                let _ = self.scan(c, r.letters(), false);
            }
            c += 1;
        }
    }

    fn enumerate(mut self, relators: &[Word], subgroup: &[Word]) -> Result<CosetEnumeration> {
        let limit_err = Error::CosetLimit { limit: self.limit };
        for w in subgroup {
            if self.scan(0, w.letters(), true).is_err() {
                return Err(limit_err);
            }
        }
        let mut c = 0;
        while c < self.table.len() {
            match self.process(c, relators) {
                Ok(()) => c += 1,
                Err(LimitHit) => {
                    let before = self.active;
                    self.lookahead(relators);
                    if self.active >= before {
                        return Err(limit_err);
                    }
                }
            }
        }
        Ok(CosetEnumeration { index: self.active, defined: self.table.len(), max_active: self.max_active })
    }

    fn process(&mut self, c: usize, relators: &[Word]) -> std::result::Result<(), LimitHit> {
        for r in relators {
            if !self.alive(c) {
                return Ok(());
            }
            self.scan(c, r.letters(), true)?;
        }
        for x in 0..self.cols {
            if !self.alive(c) {
                return Ok(());
            }
            if self.table[c][x] == UNDEF {
                self.define(c, x)?;
            }
        }
        Ok(())
    }
}
