//! Letters, positive words, and signed words.

use std::fmt;

/// Index into the alphabet of a presentation.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Letter(pub u16);

impl Letter {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A word over the positive alphabet. The empty word is valid.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn single(s: Letter) -> Self {
        Word(vec![s])
    }

    pub fn from_letters(letters: &[Letter]) -> Self {
        Word(letters.to_vec())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    /// Letters after the first, as a word.
    pub fn tail(&self) -> Word {
        Word(self.0[1..].to_vec())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// The mirror image: letters in reverse order.
    pub fn reversed(&self) -> Word {
        let mut v = self.0.clone();
        v.reverse();
        Word(v)
    }

    pub fn count(&self, s: Letter) -> usize {
        self.0.iter().filter(|&&l| l == s).count()
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word[")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", l.0)?;
        }
        write!(f, "]")
    }
}

/// One letter of a signed word: a generator or its formal inverse.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SignedLetter {
    pub letter: Letter,
    pub positive: bool,
}

impl SignedLetter {
    pub fn pos(letter: Letter) -> Self {
        SignedLetter {
            letter,
            positive: true,
        }
    }

    pub fn neg(letter: Letter) -> Self {
        SignedLetter {
            letter,
            positive: false,
        }
    }

    pub fn inverse(self) -> Self {
        SignedLetter {
            letter: self.letter,
            positive: !self.positive,
        }
    }
}

/// A word over the symmetrized alphabet.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct SignedWord(pub Vec<SignedLetter>);

impl SignedWord {
    pub fn empty() -> Self {
        SignedWord(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn from_positive(w: &Word) -> Self {
        SignedWord(w.0.iter().map(|&l| SignedLetter::pos(l)).collect())
    }

    /// The formal inverse of a positive word: letters reversed, each negated.
    pub fn inverse_of(w: &Word) -> Self {
        SignedWord(w.0.iter().rev().map(|&l| SignedLetter::neg(l)).collect())
    }

    /// u^-1 v for positive words u, v.
    pub fn quotient(u: &Word, v: &Word) -> Self {
        let mut sw = SignedWord::inverse_of(u);
        sw.0.extend(SignedWord::from_positive(v).0);
        sw
    }

    /// u v^-1 for positive words u, v.
    pub fn fraction_right(u: &Word, v: &Word) -> Self {
        let mut sw = SignedWord::from_positive(u);
        sw.0.extend(SignedWord::inverse_of(v).0);
        sw
    }

    pub fn concat(&self, other: &SignedWord) -> SignedWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        SignedWord(v)
    }

    pub fn inverse(&self) -> SignedWord {
        SignedWord(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// Reverse the letter order, keeping each sign. This is the word-level
    /// mirror transform that matches `Presentation::mirror`.
    pub fn mirrored(&self) -> SignedWord {
        let mut v = self.0.clone();
        v.reverse();
        SignedWord(v)
    }

    /// Splits `self` as N D^-1 with N, D positive, if it has that shape.
    pub fn as_positive_negative(&self) -> Option<(Word, Word)> {
        let split = self.0.iter().position(|l| !l.positive).unwrap_or(self.len());
        if self.0[split..].iter().any(|l| l.positive) {
            return None;
        }
        let num = Word(self.0[..split].iter().map(|l| l.letter).collect());
        let den = Word(self.0[split..].iter().rev().map(|l| l.letter).collect());
        Some((num, den))
    }

    /// Splits `self` as D^-1 N with N, D positive, if it has that shape.
    pub fn as_negative_positive(&self) -> Option<(Word, Word)> {
        let split = self.0.iter().position(|l| l.positive).unwrap_or(self.len());
        if self.0[split..].iter().any(|l| !l.positive) {
            return None;
        }
        let den = Word(self.0[..split].iter().rev().map(|l| l.letter).collect());
        let num = Word(self.0[split..].iter().map(|l| l.letter).collect());
        Some((num, den))
    }

    /// Positions `i` such that letters `i`, `i+1` form a negative-positive
    /// factor s^-1 t (the patterns right-reversing acts on).
    pub fn negative_positive_factors(&self) -> Vec<usize> {
        self.0
            .windows(2)
            .enumerate()
            .filter(|(_, w)| !w[0].positive && w[1].positive)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|l| l.positive)
    }

    /// The underlying positive word, if every letter is positive.
    pub fn to_positive(&self) -> Option<Word> {
        if self.is_positive() {
            Some(Word(self.0.iter().map(|l| l.letter).collect()))
        } else {
            None
        }
    }
}
