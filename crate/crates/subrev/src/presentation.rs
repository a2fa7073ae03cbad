//! Semigroup presentations: alphabet, relations, the leading-letter index,
//! parsing and serialization of the presentation file format.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::word::{Letter, SignedLetter, SignedWord, Word};

/// An unordered pair of nonempty, distinct positive words.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Relation {
    pub lhs: Word,
    pub rhs: Word,
}

impl Relation {
    pub fn new(lhs: Word, rhs: Word) -> Self {
        Relation { lhs, rhs }
    }

    /// Equality as an unordered pair.
    pub fn same_unordered(&self, other: &Relation) -> bool {
        (self.lhs == other.lhs && self.rhs == other.rhs)
            || (self.lhs == other.rhs && self.rhs == other.lhs)
    }

    pub fn mirrored(&self) -> Relation {
        Relation {
            lhs: self.lhs.reversed(),
            rhs: self.rhs.reversed(),
        }
    }
}

/// One orientation of a relation `s v' = t v`, filed under the ordered
/// leading-letter pair (s, t). Reversing the factor s^-1 t replaces it
/// with v' v^-1.
#[derive(Clone, Debug)]
pub struct OrientedRule {
    /// Index of the relation in `Presentation::relations`.
    pub relation: usize,
    /// v': what remains of the s-side after its leading letter.
    pub tail_left: Word,
    /// v: what remains of the t-side after its leading letter.
    pub tail_right: Word,
}

/// A finite semigroup presentation together with its leading-letter index.
/// Values are immutable after construction; every mutation builds a new one.
#[derive(Clone)]
pub struct Presentation {
    names: Vec<String>,
    by_name: HashMap<String, Letter>,
    relations: Vec<Relation>,
    index: HashMap<(Letter, Letter), Vec<OrientedRule>>,
}

impl Presentation {
    pub fn new(names: Vec<String>, relations: Vec<Relation>) -> Result<Self> {
        let mut by_name = HashMap::new();
        for (i, n) in names.iter().enumerate() {
            if by_name.insert(n.clone(), Letter(i as u16)).is_some() {
                return Err(Error::Usage(format!("duplicate generator name `{n}`")));
            }
        }
        let mut p = Presentation {
            names,
            by_name,
            relations: Vec::new(),
            index: HashMap::new(),
        };
        for r in relations {
            p.push_relation(r)?;
        }
        Ok(p)
    }

    fn check_relation(&self, r: &Relation) -> Result<()> {
        if r.lhs.is_empty() || r.rhs.is_empty() {
            return Err(Error::Usage("relation sides must be nonempty".into()));
        }
        if r.lhs == r.rhs {
            return Err(Error::Usage("relation sides must differ".into()));
        }
        for l in r.lhs.letters().iter().chain(r.rhs.letters()) {
            if l.index() >= self.names.len() {
                return Err(Error::UnknownGenerator(format!("#{}", l.0)));
            }
        }
        Ok(())
    }

    /// Appends a relation (ignoring exact unordered duplicates) and extends
    /// the index. Insertion order is preserved; it fixes all tie-breaking.
    fn push_relation(&mut self, r: Relation) -> Result<()> {
        self.check_relation(&r)?;
        if self.relations.iter().any(|q| q.same_unordered(&r)) {
            return Ok(());
        }
        let id = self.relations.len();
        let (s, t) = (r.lhs.first().unwrap(), r.rhs.first().unwrap());
        let fwd = OrientedRule {
            relation: id,
            tail_left: r.lhs.tail(),
            tail_right: r.rhs.tail(),
        };
        let bwd = OrientedRule {
            relation: id,
            tail_left: r.rhs.tail(),
            tail_right: r.lhs.tail(),
        };
        self.index.entry((s, t)).or_default().push(fwd);
        if s != t {
            self.index.entry((t, s)).or_default().push(bwd);
        } else {
            self.index.entry((s, t)).or_default().push(bwd);
        }
        self.relations.push(r);
        Ok(())
    }

    /// A new presentation with `r` appended (used by completion).
    pub fn with_relation(&self, r: Relation) -> Result<Presentation> {
        let mut p = self.clone();
        p.push_relation(r)?;
        Ok(p)
    }

    pub fn letter_count(&self) -> usize {
        self.names.len()
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        (0..self.names.len() as u16).map(Letter)
    }

    pub fn name(&self, l: Letter) -> &str {
        &self.names[l.index()]
    }

    pub fn letter(&self, name: &str) -> Option<Letter> {
        self.by_name.get(name).copied()
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    /// The relations of shape `s ... = t ...`, in insertion order.
    pub fn eligible(&self, s: Letter, t: Letter) -> &[OrientedRule] {
        self.index.get(&(s, t)).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Letter-reverses both sides of every relation. An involution.
    pub fn mirror(&self) -> Presentation {
        Presentation::new(
            self.names.clone(),
            self.relations.iter().map(Relation::mirrored).collect(),
        )
        .expect("mirrored relations stay valid")
    }

    /// True iff no relation has both sides starting with the same letter and
    /// each unordered pair of distinct letters heads at most one relation.
    pub fn is_complemented(&self) -> bool {
        let mut seen: HashMap<(Letter, Letter), usize> = HashMap::new();
        for r in &self.relations {
            let (s, t) = (r.lhs.first().unwrap(), r.rhs.first().unwrap());
            if s == t {
                return false;
            }
            let key = if s <= t { (s, t) } else { (t, s) };
            *seen.entry(key).or_insert(0) += 1;
        }
        seen.values().all(|&n| n <= 1)
    }

    // ---- word rendering and parsing -------------------------------------

    pub fn word_to_string(&self, w: &Word) -> String {
        w.letters()
            .iter()
            .map(|&l| self.name(l))
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn signed_to_string(&self, w: &SignedWord) -> String {
        w.0.iter()
            .map(|sl| {
                if sl.positive {
                    self.name(sl.letter).to_string()
                } else {
                    format!("-{}", self.name(sl.letter))
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    fn all_single_char(&self) -> bool {
        self.names.iter().all(|n| n.chars().count() == 1)
    }

    /// Parses a positive word: whitespace-separated letter names, or plain
    /// juxtaposition when every generator name is a single character.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let sw = self.parse_signed_word(text)?;
        sw.to_positive()
            .ok_or_else(|| Error::Usage(format!("expected a positive word, got `{text}`")))
    }

    /// Parses a signed word. Inverse letters are written with a `-` prefix,
    /// or in upper case when the generator name is a single lower-case
    /// character (the A = a^-1 convention).
    pub fn parse_signed_word(&self, text: &str) -> Result<SignedWord> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(SignedWord::empty());
        }
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens.len() == 1 && self.letter_of_token(tokens[0]).is_none() && self.all_single_char()
        {
            let mut out = Vec::new();
            for c in tokens[0].chars() {
                out.push(self.signed_letter_of_char(c)?);
            }
            return Ok(SignedWord(out));
        }
        let mut out = Vec::new();
        for tok in tokens {
            if let Some(sl) = self.letter_of_token(tok) {
                out.push(sl);
            } else if tok.chars().count() == 1 && self.all_single_char() {
                out.push(self.signed_letter_of_char(tok.chars().next().unwrap())?);
            } else {
                return Err(Error::UnknownGenerator(tok.to_string()));
            }
        }
        Ok(SignedWord(out))
    }

    fn letter_of_token(&self, tok: &str) -> Option<SignedLetter> {
        if let Some(stripped) = tok.strip_prefix('-') {
            return self.letter(stripped).map(SignedLetter::neg);
        }
        if let Some(l) = self.letter(tok) {
            return Some(SignedLetter::pos(l));
        }
        let lower = tok.to_lowercase();
        if lower != tok {
            return self.letter(&lower).map(SignedLetter::neg);
        }
        None
    }

    fn signed_letter_of_char(&self, c: char) -> Result<SignedLetter> {
        let s = c.to_string();
        if let Some(l) = self.letter(&s) {
            return Ok(SignedLetter::pos(l));
        }
        let lower = s.to_lowercase();
        if lower != s {
            if let Some(l) = self.letter(&lower) {
                return Ok(SignedLetter::neg(l));
            }
        }
        Err(Error::UnknownGenerator(s))
    }

    // ---- file format -----------------------------------------------------

    /// Emits the line-oriented file format: alphabet order, then relations
    /// in insertion order, letters whitespace-separated.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        out.push_str("gens:");
        for n in &self.names {
            out.push(' ');
            out.push_str(n);
        }
        out.push('\n');
        for r in &self.relations {
            out.push_str("rel: ");
            out.push_str(&self.word_to_string(&r.lhs));
            out.push_str(" = ");
            out.push_str(&self.word_to_string(&r.rhs));
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Presentation<{}>", self.serialize().replace('\n', "; "))
    }
}

/// Parses the presentation file format. A `#` starts a comment. Chained
/// relation lines `u = v = w` expand to all unordered pairs from the chain.
pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut names: Option<Vec<String>> = None;
    let mut pending: Vec<(usize, usize, String)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        if line.trim().is_empty() {
            continue;
        }
        let trimmed = line.trim_start();
        let col0 = line.len() - trimmed.len();
        if let Some(rest) = trimmed.strip_prefix("gens:") {
            if names.is_some() {
                return Err(Error::Parse {
                    line: lineno,
                    column: col0 + 1,
                    message: "duplicate `gens:` line".into(),
                });
            }
            let gens: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
            if gens.is_empty() {
                return Err(Error::Parse {
                    line: lineno,
                    column: col0 + 6,
                    message: "empty generator list".into(),
                });
            }
            names = Some(gens);
        } else if let Some(rest) = trimmed.strip_prefix("rel:") {
            if names.is_none() {
                return Err(Error::Parse {
                    line: lineno,
                    column: col0 + 1,
                    message: "`rel:` before `gens:`".into(),
                });
            }
            let offset = col0 + 4 + (line.len() - line.trim_end().len());
            pending.push((lineno, offset, rest.to_string()));
        } else {
            return Err(Error::Parse {
                line: lineno,
                column: col0 + 1,
                message: format!("expected `gens:` or `rel:`, found `{}`", trimmed),
            });
        }
    }
    let names = names.ok_or(Error::Parse {
        line: 1,
        column: 1,
        message: "missing `gens:` line".into(),
    })?;
    let mut p = Presentation::new(names, Vec::new())?;
    for (lineno, col0, body) in pending {
        let mut sides = Vec::new();
        let mut cursor = 0usize;
        for part in body.split('=') {
            let col = col0 + cursor + (part.len() - part.trim_start().len()) + 1;
            cursor += part.len() + 1;
            let w = p.parse_word(part).map_err(|e| Error::Parse {
                line: lineno,
                column: col,
                message: e.to_string(),
            })?;
            if w.is_empty() {
                return Err(Error::Parse {
                    line: lineno,
                    column: col,
                    message: "empty relation side".into(),
                });
            }
            sides.push(w);
        }
        if sides.len() < 2 {
            return Err(Error::Parse {
                line: lineno,
                column: col0 + 1,
                message: "a relation needs at least two sides".into(),
            });
        }
        // Consecutive pairs first, then the remaining unordered pairs, so a
        // chain u = v = w yields u=v, v=w, u=w in that order.
        let k = sides.len();
        let mut pairs: Vec<(usize, usize)> = (0..k - 1).map(|i| (i, i + 1)).collect();
        for i in 0..k {
            for j in i + 1..k {
                if j != i + 1 {
                    pairs.push((i, j));
                }
            }
        }
        for (i, j) in pairs {
            p.push_relation(Relation::new(sides[i].clone(), sides[j].clone()))
                .map_err(|e| Error::Parse {
                    line: lineno,
                    column: col0 + 1,
                    message: e.to_string(),
                })?;
        }
    }
    Ok(p)
}
