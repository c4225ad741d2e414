//! Ordered partitions of factor lengths, height profiles and varieties.
//!
//! A composition `(p₁, …, p_k)` of `m` cuts every factor of length `m` into
//! `k` components. Two factors belong to the same variety when their
//! components have the same heights. [`classify_varieties`] groups an
//! arbitrary factor multiset by brute force; [`multiplicities_formula`]
//! derives the same table for Christoffel words from residues modulo `n`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::christoffel::{circular_factors, lower_christoffel, ChristoffelParams, FactorMultiset};
use crate::error::{Error, Result};
use crate::words::Word;

/// An ordered partition of `m` into positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Composition {
    parts: Vec<usize>,
    partial_sums: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Composition> {
        if parts.is_empty() {
            return Err(Error::EmptyComposition);
        }
        if parts.contains(&0) {
            return Err(Error::ZeroPart);
        }
        let mut partial_sums = Vec::with_capacity(parts.len() + 1);
        partial_sums.push(0);
        let mut acc = 0;
        for &p in &parts {
            acc += p;
            partial_sums.push(acc);
        }
        Ok(Composition {
            parts,
            partial_sums,
        })
    }

    /// The single-part composition `(m)`.
    pub fn whole(m: usize) -> Result<Composition> {
        Composition::new(vec![m])
    }

    /// The composition `(1, 1, …, 1)` of `m`.
    pub fn unit(m: usize) -> Result<Composition> {
        Composition::new(vec![1; m])
    }

    /// Every composition of `m`, one per subset of the `m − 1` cut points.
    /// The first one yielded is `(m)`.
    pub fn all(m: usize) -> impl Iterator<Item = Composition> {
        let cuts = m.saturating_sub(1);
        let count: u64 = if m == 0 { 0 } else { 1u64 << cuts };
        (0..count).map(move |mask| {
            let mut parts = Vec::new();
            let mut run = 1;
            for bit in 0..cuts {
                if mask & (1 << bit) != 0 {
                    parts.push(run);
                    run = 1;
                } else {
                    run += 1;
                }
            }
            parts.push(run);
            Composition::new(parts).expect("parts are positive")
        })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn m(&self) -> usize {
        *self.partial_sums.last().expect("nonempty")
    }

    /// Number of parts.
    pub fn k(&self) -> usize {
        self.parts.len()
    }

    /// `s₀ = 0, s₁ = p₁, …, s_k = m`.
    pub fn partial_sums(&self) -> &[usize] {
        &self.partial_sums
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Composition> {
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidComposition(s.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }
}

/// Heights of the components of a partitioned factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HeightProfile(pub Vec<usize>);

impl HeightProfile {
    pub fn heights(&self) -> &[usize] {
        &self.0
    }

    /// Sum of the component heights.
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

impl fmt::Display for HeightProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let hs: Vec<String> = self.0.iter().map(|h| h.to_string()).collect();
        write!(f, "<{}>", hs.join(","))
    }
}

/// A factor together with the composition cutting it into components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionedFactor {
    word: Word,
    comp: Composition,
}

impl PartitionedFactor {
    pub fn new(word: Word, comp: Composition) -> Result<PartitionedFactor> {
        if word.len() != comp.m() {
            return Err(Error::LengthMismatch {
                left: word.len(),
                right: comp.m(),
            });
        }
        Ok(PartitionedFactor { word, comp })
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn composition(&self) -> &Composition {
        &self.comp
    }

    pub fn components(&self) -> Vec<Word> {
        self.comp
            .partial_sums()
            .windows(2)
            .map(|s| self.word.factor(s[0], s[1] - s[0]))
            .collect()
    }

    pub fn profile(&self) -> HeightProfile {
        profile_of(self.word.as_bytes(), &self.comp)
    }
}

impl fmt::Display for PartitionedFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in self.components() {
            write!(f, "({c})")?;
        }
        Ok(())
    }
}

fn profile_of(bytes: &[u8], comp: &Composition) -> HeightProfile {
    HeightProfile(
        comp.partial_sums()
            .windows(2)
            .map(|s| bytes[s[0]..s[1]].iter().filter(|&&c| c == b'b').count())
            .collect(),
    )
}

pub fn height_profile(w: &Word, comp: &Composition) -> Result<HeightProfile> {
    if w.len() != comp.m() {
        return Err(Error::LengthMismatch {
            left: w.len(),
            right: comp.m(),
        });
    }
    Ok(profile_of(w.as_bytes(), comp))
}

/// One variety: its profile, how many factors carry it, and its
/// lexicographically least factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarietyEntry {
    pub profile: HeightProfile,
    pub multiplicity: usize,
    pub representative: Word,
}

/// Varieties of a multiset of partitioned factors, ordered by their least
/// representatives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarietyTable {
    pub composition: Composition,
    pub entries: Vec<VarietyEntry>,
}

impl VarietyTable {
    pub fn total(&self) -> usize {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn multiplicities(&self) -> Vec<usize> {
        self.entries.iter().map(|e| e.multiplicity).collect()
    }

    pub fn profiles(&self) -> Vec<HeightProfile> {
        self.entries.iter().map(|e| e.profile.clone()).collect()
    }
}

/// Groups a factor multiset by height profile.
///
/// Works for any word. Entries are ordered by the least factor of each
/// variety.
pub fn classify_varieties(fs: &FactorMultiset, comp: &Composition) -> Result<VarietyTable> {
    if fs.factor_len() != comp.m() {
        return Err(Error::LengthMismatch {
            left: fs.factor_len(),
            right: comp.m(),
        });
    }
    let mut index: HashMap<HeightProfile, usize> = HashMap::new();
    let mut entries: Vec<VarietyEntry> = Vec::new();
    // iteration is in lexicographic order, so the first factor seen per
    // profile is its least one
    for (u, count) in fs.iter() {
        let profile = profile_of(u.as_bytes(), comp);
        match index.get(&profile) {
            Some(&i) => entries[i].multiplicity += count,
            None => {
                index.insert(profile.clone(), entries.len());
                entries.push(VarietyEntry {
                    profile,
                    multiplicity: count,
                    representative: u.clone(),
                });
            }
        }
    }
    Ok(VarietyTable {
        composition: comp.clone(),
        entries,
    })
}

/// `s_ℓ · p mod n` for each partial sum, in the order of the partial sums.
pub fn congruence_residues(params: &ChristoffelParams, comp: &Composition) -> Result<Vec<usize>> {
    if comp.m() >= params.n {
        return Err(Error::BadLength {
            m: comp.m(),
            n: params.n,
        });
    }
    Ok(comp
        .partial_sums()
        .iter()
        .map(|&s| s * params.p % params.n)
        .collect())
}

/// Rows of the conjugate matrix at which each variety first appears,
/// ascending; the first is always 0.
pub fn variety_rows(params: &ChristoffelParams, comp: &Composition) -> Result<Vec<usize>> {
    let mut rows = congruence_residues(params, comp)?;
    rows.sort_unstable();
    Ok(rows)
}

/// Varieties and multiplicities of the circular partitioned factors of the
/// Christoffel word `params`, computed without enumerating factors.
///
/// The `k+1` residues `s_ℓ·p mod n`, sorted, are the matrix rows where the
/// varieties begin; consecutive differences (closing with `n`) are the
/// multiplicities. Row `r` of the matrix is the lower Christoffel word
/// rotated by `r·q*`, which gives each variety's least factor.
pub fn multiplicities_formula(
    params: &ChristoffelParams,
    comp: &Composition,
) -> Result<VarietyTable> {
    let rows = variety_rows(params, comp)?;
    let n = params.n;
    let m = comp.m();
    let lower = lower_christoffel(params.p, params.q)?;
    let letters = lower.as_bytes();
    let entries = rows
        .iter()
        .enumerate()
        .map(|(l, &r)| {
            let next = rows.get(l + 1).copied().unwrap_or(n);
            let start = r * params.q_star % n;
            let prefix: Vec<u8> = (0..m).map(|j| letters[(start + j) % n]).collect();
            VarietyEntry {
                profile: profile_of(&prefix, comp),
                multiplicity: next - r,
                representative: Word::from_bytes_unchecked(prefix),
            }
        })
        .collect();
    Ok(VarietyTable {
        composition: comp.clone(),
        entries,
    })
}

/// Number of distinct height profiles among the circular factors of length
/// `m` of `w` under `comp`.
pub fn variety_count(w: &Word, m: usize, comp: &Composition) -> Result<usize> {
    if comp.m() != m {
        return Err(Error::LengthMismatch {
            left: comp.m(),
            right: m,
        });
    }
    Ok(classify_varieties(&circular_factors(w, m)?, comp)?.len())
}

/// Searches every `1 <= m < |w|` and every composition of `m` for one whose
/// variety count is not `k+1`. Returns the first hit with its count.
pub fn find_variety_anomaly(w: &Word) -> Result<Option<(Composition, usize)>> {
    let n = w.len();
    if n < 2 {
        return Err(Error::WordTooShort(n));
    }
    for m in 1..n {
        let fs = circular_factors(w, m)?;
        for comp in Composition::all(m) {
            let count = classify_varieties(&fs, &comp)?.len();
            if count != comp.k() + 1 {
                return Ok(Some((comp, count)));
            }
        }
    }
    Ok(None)
}
