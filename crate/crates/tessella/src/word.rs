//! Words over the three mirror generators P, Q, R.
//!
//! Every generator is an involution, so a word is inverted by reversing it
//! and freely reduced by cancelling adjacent equal letters.

use std::fmt;

/// One of the three mirror generators.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Letter {
    P,
    Q,
    R,
}

pub const LETTERS: [Letter; 3] = [Letter::P, Letter::Q, Letter::R];

impl Letter {
    pub fn index(self) -> usize {
        match self {
            Letter::P => 0,
            Letter::Q => 1,
            Letter::R => 2,
        }
    }

    pub fn from_index(i: usize) -> Letter {
        LETTERS[i]
    }

    pub fn to_char(self) -> char {
        match self {
            Letter::P => 'P',
            Letter::Q => 'Q',
            Letter::R => 'R',
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'P' => Some(Letter::P),
            'Q' => Some(Letter::Q),
            'R' => Some(Letter::R),
            _ => None,
        }
    }
}

/// A freely reduced word in the mirror letters.
///
/// The empty word is the identity and prints as `e`.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum WordParseError {
    #[error("unexpected character {0:?} in word")]
    BadChar(char),
    #[error("unbalanced parentheses in word")]
    Unbalanced,
    #[error("`^` must follow a letter or a parenthesized factor")]
    DanglingCaret,
    #[error("exponent missing after `^`")]
    MissingExponent,
}

impl Word {
    pub fn empty() -> Word {
        Word::default()
    }

    /// Builds a word from raw letters, applying free reduction.
    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Word {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if out.last() == Some(&l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word { letters: out }
    }

    pub fn single(l: Letter) -> Word {
        Word { letters: vec![l] }
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// The inverse word: letters reversed (each letter is its own inverse).
    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().copied().collect(),
        }
    }

    /// Concatenation followed by free reduction.
    pub fn concat(&self, other: &Word) -> Word {
        let mut out = self.letters.clone();
        for &l in &other.letters {
            if out.last() == Some(&l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word { letters: out }
    }

    /// Conjugate `g * self * g^-1`.
    pub fn conjugate_by(&self, g: &Word) -> Word {
        g.concat(self).concat(&g.inverse())
    }

    pub fn pow(&self, n: usize) -> Word {
        let mut out = Word::empty();
        for _ in 0..n {
            out = out.concat(self);
        }
        out
    }

    /// Parses the textual word syntax: concatenated letters from {P,Q,R},
    /// `^` repeating a letter or parenthesized factor, whitespace ignored.
    /// `e` denotes the empty word.
    pub fn parse(s: &str) -> Result<Word, WordParseError> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (word, used) = parse_seq(&chars, 0, false)?;
        if used != chars.len() {
            return Err(WordParseError::Unbalanced);
        }
        Ok(word)
    }
}

fn parse_seq(chars: &[char], mut i: usize, inside: bool) -> Result<(Word, usize), WordParseError> {
    let mut word = Word::empty();
    while i < chars.len() {
        let c = chars[i];
        if c == ')' {
            if inside {
                return Ok((word, i));
            }
            return Err(WordParseError::Unbalanced);
        }
        let factor;
        if c == '(' {
            let (inner, end) = parse_seq(chars, i + 1, true)?;
            if end >= chars.len() || chars[end] != ')' {
                return Err(WordParseError::Unbalanced);
            }
            factor = inner;
            i = end + 1;
        } else if let Some(l) = Letter::from_char(c) {
            factor = Word::single(l);
            i += 1;
        } else if c == 'e' || c == 'E' {
            factor = Word::empty();
            i += 1;
        } else if c == '^' {
            return Err(WordParseError::DanglingCaret);
        } else {
            return Err(WordParseError::BadChar(c));
        }
        if i < chars.len() && chars[i] == '^' {
            i += 1;
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if i == start {
                return Err(WordParseError::MissingExponent);
            }
            let n: usize = chars[start..i].iter().collect::<String>().parse().unwrap();
            word = word.concat(&factor.pow(n));
        } else {
            word = word.concat(&factor);
        }
    }
    if inside {
        return Err(WordParseError::Unbalanced);
    }
    Ok((word, i))
}

/// Free reduction of an arbitrary letter sequence; idempotent.
pub fn free_reduce(w: &Word) -> Word {
    Word::from_letters(w.letters().iter().copied())
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        for l in &self.letters {
            write!(f, "{}", l.to_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Convenience macro-free constructor used throughout the catalog.
pub fn w(s: &str) -> Word {
    Word::parse(s).expect("literal word")
}
