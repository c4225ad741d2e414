//! Christoffel words, circular factor multisets and the Burrows–Wheeler
//! conjugate matrix.
//!
//! Slopes are always given as `(p, q)`: `p` letters `a` and `q` letters `b`.
//! The lower Christoffel word of that shape is the discretization of the
//! line of slope `q/p`.

use std::collections::BTreeMap;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::words::{conjugate, is_balanced1_circular, is_primitive, Word};

/// Slope data of a Christoffel word and the modular inverses that index its
/// conjugate matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ChristoffelParams {
    pub p: usize,
    pub q: usize,
    pub n: usize,
    /// `p⁻¹ mod n`
    pub p_star: usize,
    /// `q⁻¹ mod n`
    pub q_star: usize,
}

impl ChristoffelParams {
    pub fn new(p: usize, q: usize) -> Result<ChristoffelParams> {
        check_counts(p, q)?;
        let n = p + q;
        Ok(ChristoffelParams {
            p,
            q,
            n,
            p_star: mod_inverse(p, n),
            q_star: mod_inverse(q, n),
        })
    }

    /// Parameters read off the letter counts of `w`.
    pub fn of_word(w: &Word) -> Result<ChristoffelParams> {
        let q = w.height();
        ChristoffelParams::new(w.len() - q, q)
    }
}

fn check_counts(p: usize, q: usize) -> Result<()> {
    if p == 0 || q == 0 {
        return Err(Error::ZeroCount { p, q });
    }
    if p.gcd(&q) != 1 {
        return Err(Error::NotCoprime { p, q });
    }
    Ok(())
}

/// Inverse of `x` modulo `n`; `x` and `n` must be coprime.
fn mod_inverse(x: usize, n: usize) -> usize {
    if n == 1 {
        return 0;
    }
    let e = (x as i64).extended_gcd(&(n as i64));
    debug_assert_eq!(e.gcd, 1);
    e.x.rem_euclid(n as i64) as usize
}

/// The lower Christoffel word with `p` letters `a` and `q` letters `b`.
///
/// Letter `i` is `b` exactly when `⌊(i+1)q/n⌋ − ⌊iq/n⌋ = 1`.
pub fn lower_christoffel(p: usize, q: usize) -> Result<Word> {
    check_counts(p, q)?;
    let n = p + q;
    let bytes = (0..n)
        .map(|i| {
            if (i + 1) * q / n - i * q / n == 0 {
                b'a'
            } else {
                b'b'
            }
        })
        .collect();
    Ok(Word::from_bytes_unchecked(bytes))
}

/// The upper Christoffel word: if the lower word is `a·u·b`, this is `b·u·a`.
pub fn upper_christoffel(p: usize, q: usize) -> Result<Word> {
    let lower = lower_christoffel(p, q)?;
    let mut bytes = lower.as_bytes().to_vec();
    let last = bytes.len() - 1;
    bytes.swap(0, last);
    Ok(Word::from_bytes_unchecked(bytes))
}

/// Convenience wrapper for [`ChristoffelParams::new`].
pub fn make_params(p: usize, q: usize) -> Result<ChristoffelParams> {
    ChristoffelParams::new(p, q)
}

/// The multiset of circular factors of a fixed length of some word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorMultiset {
    m: usize,
    n: usize,
    counts: BTreeMap<Word, usize>,
}

impl FactorMultiset {
    /// Builds a multiset from explicit items; all must have length `m`.
    pub fn from_items<I: IntoIterator<Item = Word>>(m: usize, items: I) -> Result<FactorMultiset> {
        let mut counts = BTreeMap::new();
        let mut n = 0;
        for item in items {
            if item.len() != m {
                return Err(Error::LengthMismatch {
                    left: item.len(),
                    right: m,
                });
            }
            *counts.entry(item).or_insert(0) += 1;
            n += 1;
        }
        Ok(FactorMultiset { m, n, counts })
    }

    /// Common length of the items.
    pub fn factor_len(&self) -> usize {
        self.m
    }

    /// Total multiplicity, equal to the length of the originating word.
    pub fn total(&self) -> usize {
        self.n
    }

    pub fn distinct_count(&self) -> usize {
        self.counts.len()
    }

    pub fn count(&self, u: &Word) -> usize {
        self.counts.get(u).copied().unwrap_or(0)
    }

    /// Distinct items with their multiplicities, in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = (&Word, usize)> {
        self.counts.iter().map(|(w, &c)| (w, c))
    }
}

/// The `n` factors of length `m` of `w·w` starting at positions `0..n`.
pub fn circular_factors(w: &Word, m: usize) -> Result<FactorMultiset> {
    let n = w.len();
    if m == 0 || m >= n {
        return Err(Error::BadLength { m, n });
    }
    let doubled = w.concat(w);
    let mut counts = BTreeMap::new();
    for start in 0..n {
        *counts.entry(doubled.factor(start, m)).or_insert(0) += 1;
    }
    Ok(FactorMultiset { m, n, counts })
}

/// The conjugates of a primitive word in increasing lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BwtMatrix {
    source: Word,
    rows: Vec<Word>,
}

impl BwtMatrix {
    pub fn source(&self) -> &Word {
        &self.source
    }

    pub fn rows(&self) -> &[Word] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &Word {
        &self.rows[i]
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

pub fn bwt_matrix(w: &Word) -> Result<BwtMatrix> {
    if !is_primitive(w)? {
        return Err(Error::NotPrimitive);
    }
    let mut rows = (0..w.len())
        .map(|i| conjugate(w, i))
        .collect::<Result<Vec<_>>>()?;
    rows.sort_unstable();
    Ok(BwtMatrix {
        source: w.clone(),
        rows,
    })
}

/// Primitive and circularly balanced, hence a conjugate of a Christoffel word.
pub fn is_christoffel_conjugate(w: &Word) -> Result<bool> {
    if w.len() < 2 {
        return Err(Error::WordTooShort(w.len()));
    }
    Ok(is_primitive(w)? && is_balanced1_circular(w)?)
}

/// Checks the adjacent-row structure of the conjugate matrix of `w`.
///
/// For each `1 <= i < n`, rows `i-1` and `i` must differ only by an
/// `ab → ba` exchange at columns `(i·p* − 1) mod n` and `(i·p*) mod n`, and
/// row `i` must be row 0 rotated by `i·q* mod n`.
pub fn verify_isc(w: &Word) -> Result<bool> {
    if w.len() < 2 || !is_christoffel_conjugate(w)? {
        return Err(Error::NotChristoffel);
    }
    let params = ChristoffelParams::of_word(w)?;
    let matrix = bwt_matrix(w)?;
    let n = params.n;
    let first = matrix.row(0);
    for i in 1..n {
        let prev = matrix.row(i - 1).as_bytes();
        let cur = matrix.row(i).as_bytes();
        let right = (i * params.p_star) % n;
        let left = (right + n - 1) % n;
        let swapped =
            prev[left] == b'a' && prev[right] == b'b' && cur[left] == b'b' && cur[right] == b'a';
        let others_fixed = (0..n)
            .filter(|&j| j != left && j != right)
            .all(|j| prev[j] == cur[j]);
        if !(swapped && others_fixed) {
            return Ok(false);
        }
        if *matrix.row(i) != conjugate(first, (i * params.q_star) % n)? {
            return Ok(false);
        }
    }
    Ok(true)
}
