//! Finite words over the ordered alphabet `{a < b}`.
//!
//! Words are immutable values. Letters are stored as the ASCII bytes `a` and
//! `b`, so the derived ordering on [`Word`] is the lexicographic order with
//! `a < b` and the serialized form is the byte string itself.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A letter of the two-letter alphabet, ordered `A < B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    A,
    B,
}

impl Letter {
    pub fn as_byte(self) -> u8 {
        match self {
            Letter::A => b'a',
            Letter::B => b'b',
        }
    }

    pub fn from_byte(byte: u8) -> Option<Letter> {
        match byte {
            b'a' => Some(Letter::A),
            b'b' => Some(Letter::B),
            _ => None,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_byte() as char)
    }
}

/// A finite word over `{a < b}`.
///
/// `Ord` is lexicographic; on words of equal length it agrees with
/// [`lex_compare`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Word {
        Word(letters.into_iter().map(Letter::as_byte).collect())
    }

    /// Wraps bytes that are already known to be `a`/`b`.
    pub(crate) fn from_bytes_unchecked(bytes: Vec<u8>) -> Word {
        debug_assert!(bytes.iter().all(|&c| c == b'a' || c == b'b'));
        Word(bytes)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        // Only ASCII 'a'/'b' are ever stored.
        std::str::from_utf8(&self.0).expect("words are ASCII")
    }

    pub fn letter(&self, i: usize) -> Letter {
        Letter::from_byte(self.0[i]).expect("words hold only a/b")
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        self.0
            .iter()
            .map(|&c| Letter::from_byte(c).expect("words hold only a/b"))
    }

    /// The factor of length `len` starting at `start`.
    pub fn factor(&self, start: usize, len: usize) -> Word {
        Word(self.0[start..start + len].to_vec())
    }

    pub fn prefix(&self, len: usize) -> Word {
        self.factor(0, len)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut bytes = self.0.clone();
        bytes.extend_from_slice(&other.0);
        Word(bytes)
    }

    /// Number of `b`s.
    pub fn height(&self) -> usize {
        height(self)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({:?})", self.as_str())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        s.chars()
            .map(|c| match c {
                'a' => Ok(b'a'),
                'b' => Ok(b'b'),
                other => Err(Error::InvalidLetter(other)),
            })
            .collect::<Result<Vec<u8>>>()
            .map(Word)
    }
}

/// Number of occurrences of `b` in `w`.
pub fn height(w: &Word) -> usize {
    w.0.iter().filter(|&&c| c == b'b').count()
}

/// Number of positions at which `u` occurs in `w`, overlaps included.
pub fn occurrences(w: &Word, u: &Word) -> Result<usize> {
    if u.is_empty() {
        return Err(Error::EmptyPattern);
    }
    if u.len() > w.len() {
        return Ok(0);
    }
    Ok(w.0
        .windows(u.len())
        .filter(|win| *win == u.as_bytes())
        .count())
}

/// Rotates `w` left by `i` letters: `w_i w_{i+1} ... w_{i-1}`.
pub fn conjugate(w: &Word, i: usize) -> Result<Word> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let i = i % w.len();
    let mut bytes = Vec::with_capacity(w.len());
    bytes.extend_from_slice(&w.0[i..]);
    bytes.extend_from_slice(&w.0[..i]);
    Ok(Word(bytes))
}

/// Lexicographic comparison of two words of the same length.
pub fn lex_compare(u: &Word, v: &Word) -> Result<Ordering> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch {
            left: u.len(),
            right: v.len(),
        });
    }
    Ok(u.0.cmp(&v.0))
}

/// True iff `w` is not a proper power `t^h`, `h > 1`.
pub fn is_primitive(w: &Word) -> Result<bool> {
    let n = w.len();
    if n == 0 {
        return Err(Error::EmptyWord);
    }
    let periodic = (1..n)
        .filter(|d| n.is_multiple_of(*d))
        .any(|d| (d..n).all(|i| w.0[i] == w.0[i - d]));
    Ok(!periodic)
}

/// True iff, for every length `1 <= m < |w|`, the circular factors of length
/// `m` have heights differing by at most one.
pub fn is_balanced1_circular(w: &Word) -> Result<bool> {
    let n = w.len();
    if n == 0 {
        return Err(Error::EmptyWord);
    }
    let bits: Vec<usize> = w.0.iter().map(|&c| usize::from(c == b'b')).collect();
    for m in 1..n {
        let mut h: usize = bits[..m].iter().sum();
        let (mut lo, mut hi) = (h, h);
        for start in 1..n {
            h = h + bits[(start + m - 1) % n] - bits[start - 1];
            lo = lo.min(h);
            hi = hi.max(h);
        }
        if hi - lo > 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn heights() {
        assert_eq!(height(&w("aaabab")), 2);
        assert_eq!(height(&Word::empty()), 0);
        assert_eq!(height(&w("aabaaab")), 2);
    }

    #[test]
    fn occurrence_counts() {
        assert_eq!(occurrences(&w("abababb"), &w("ab")).unwrap(), 3);
        assert_eq!(occurrences(&w("aaa"), &w("aa")).unwrap(), 2);
        assert_eq!(occurrences(&w("aabaaab"), &w("aab")).unwrap(), 2);
        assert_eq!(occurrences(&w("ab"), &w("aab")).unwrap(), 0);
        assert_eq!(
            occurrences(&w("ab"), &Word::empty()),
            Err(Error::EmptyPattern)
        );
    }

    #[test]
    fn conjugation() {
        assert_eq!(conjugate(&w("aaabaab"), 2).unwrap(), w("abaabaa"));
        assert_eq!(conjugate(&w("aaabaab"), 0).unwrap(), w("aaabaab"));
        assert_eq!(conjugate(&w("aaabaab"), 7).unwrap(), w("aaabaab"));
        assert_eq!(conjugate(&Word::empty(), 1), Err(Error::EmptyWord));
    }

    #[test]
    fn lexicographic() {
        assert_eq!(lex_compare(&w("aab"), &w("aba")).unwrap(), Ordering::Less);
        assert_eq!(lex_compare(&w("abab"), &w("abba")).unwrap(), Ordering::Less);
        assert_eq!(
            lex_compare(&w("abba"), &w("abba")).unwrap(),
            Ordering::Equal
        );
        assert!(matches!(
            lex_compare(&w("ab"), &w("aba")),
            Err(Error::LengthMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn primitivity() {
        assert!(!is_primitive(&w("abab")).unwrap());
        assert!(is_primitive(&w("aaabaab")).unwrap());
        assert!(is_primitive(&w("a")).unwrap());
        assert!(!is_primitive(&w("aa")).unwrap());
        assert_eq!(is_primitive(&Word::empty()), Err(Error::EmptyWord));
    }

    #[test]
    fn circular_balance() {
        assert!(is_balanced1_circular(&w("aaabaab")).unwrap());
        assert!(!is_balanced1_circular(&w("aaabab")).unwrap());
        assert!(is_balanced1_circular(&w("ab")).unwrap());
        // circular factors aa and bb of length 2
        assert!(!is_balanced1_circular(&w("aabb")).unwrap());
    }

    #[test]
    fn parse_rejects_other_letters() {
        assert_eq!("abc".parse::<Word>(), Err(Error::InvalidLetter('c')));
        assert_eq!(w("abba").to_string(), "abba");
    }

    fn word_strategy(max: usize) -> impl Strategy<Value = Word> {
        prop::collection::vec(prop::bool::ANY, 1..max).prop_map(|v| {
            Word::from_letters(v.into_iter().map(|b| if b { Letter::B } else { Letter::A }))
        })
    }

    proptest! {
        #[test]
        fn conjugation_composes(w in word_strategy(24), i in 0usize..64, j in 0usize..64) {
            let n = w.len();
            let lhs = conjugate(&conjugate(&w, i).unwrap(), j).unwrap();
            prop_assert_eq!(lhs, conjugate(&w, (i + j) % n).unwrap());
        }

        #[test]
        fn height_counts_b(w in word_strategy(24), i in 0usize..64) {
            prop_assert_eq!(height(&w), occurrences(&w, &"b".parse().unwrap()).unwrap());
            prop_assert_eq!(height(&conjugate(&w, i).unwrap()), height(&w));
        }

        #[test]
        fn lex_order_is_total(a in prop::collection::vec(prop::bool::ANY, 6),
                              b in prop::collection::vec(prop::bool::ANY, 6),
                              c in prop::collection::vec(prop::bool::ANY, 6)) {
            let mk = |v: Vec<bool>| Word::from_letters(v.into_iter().map(|x| if x { Letter::B } else { Letter::A }));
            let (a, b, c) = (mk(a), mk(b), mk(c));
            let ab = lex_compare(&a, &b).unwrap();
            prop_assert_eq!(ab.reverse(), lex_compare(&b, &a).unwrap());
            if ab != Ordering::Greater && lex_compare(&b, &c).unwrap() != Ordering::Greater {
                prop_assert_ne!(lex_compare(&a, &c).unwrap(), Ordering::Greater);
            }
        }

        #[test]
        fn primitive_iff_conjugates_distinct(w in word_strategy(16)) {
            let n = w.len();
            let same = (0..n).filter(|&i| conjugate(&w, i).unwrap() == w).count();
            prop_assert_eq!(is_primitive(&w).unwrap(), same == 1);
        }
    }
}
