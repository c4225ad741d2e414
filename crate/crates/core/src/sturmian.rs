//! Mechanical words of slope `0 < θ < 1` and the rotation coding of their
//! factors.
//!
//! Letter `n` of the mechanical word is `b` exactly when `{nθ}` lies in
//! `I_b = [1 − θ, 1)`. The factors of length `m` correspond to the `m + 1`
//! half-open arcs cut out by the points `{−jθ}`, `0 ≤ j ≤ m`; read in
//! increasing order, the arcs give the factors in increasing lexicographic
//! order and their lengths are the factor frequencies.
//!
//! Every point is kept twice: as a certified [`Ball`] and as an exact
//! [`ThetaForm`] `c + d·θ` with integer `c`, `d`. The balls decide order;
//! the forms make length identities (sums, equal lengths) exact.

use std::cell::Cell;
use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Sub};

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::partitioned::{height_profile, Composition, HeightProfile};
use crate::scalar::{Ball, Scalar};
use crate::slope::SlopeValue;
use crate::words::{Letter, Word};

/// Working precision cap for refinement, in bits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrecisionCap(pub u32);

impl Default for PrecisionCap {
    fn default() -> PrecisionCap {
        PrecisionCap(4096)
    }
}

const START_BITS: u32 = 64;

/// The real number `constant + coeff·θ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ThetaForm {
    pub constant: i64,
    pub coeff: i64,
}

impl ThetaForm {
    pub const ZERO: ThetaForm = ThetaForm {
        constant: 0,
        coeff: 0,
    };
    pub const ONE: ThetaForm = ThetaForm {
        constant: 1,
        coeff: 0,
    };

    pub fn new(constant: i64, coeff: i64) -> ThetaForm {
        ThetaForm { constant, coeff }
    }

    pub fn eval<S: Scalar>(&self, theta: &Ball<S>) -> Ball<S> {
        Ball::from_integer(self.constant).add(&theta.mul_int(self.coeff))
    }
}

impl Add for ThetaForm {
    type Output = ThetaForm;

    fn add(self, rhs: ThetaForm) -> ThetaForm {
        ThetaForm::new(self.constant + rhs.constant, self.coeff + rhs.coeff)
    }
}

impl Sub for ThetaForm {
    type Output = ThetaForm;

    fn sub(self, rhs: ThetaForm) -> ThetaForm {
        ThetaForm::new(self.constant - rhs.constant, self.coeff - rhs.coeff)
    }
}

impl std::iter::Sum for ThetaForm {
    fn sum<I: Iterator<Item = ThetaForm>>(iter: I) -> ThetaForm {
        iter.fold(ThetaForm::ZERO, Add::add)
    }
}

impl fmt::Display for ThetaForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let term = |d: i64| {
            if d == 1 {
                "θ".to_string()
            } else {
                format!("{d}θ")
            }
        };
        match (self.constant, self.coeff) {
            (c, 0) => write!(f, "{c}"),
            (0, -1) => f.write_str("-θ"),
            (0, d) => f.write_str(&term(d)),
            (c, d) if d < 0 => write!(f, "{c} - {}", term(-d)),
            (c, d) => write!(f, "{c} + {}", term(d)),
        }
    }
}

/// A point `{jθ}` of the rotation orbit, for a signed index `j`.
#[derive(Debug, Clone, PartialEq)]
pub struct OrbitPoint<S> {
    pub index: i64,
    pub form: ThetaForm,
    pub value: Ball<S>,
}

impl<S: Scalar> OrbitPoint<S> {
    fn convert<T: Scalar>(&self) -> OrbitPoint<T> {
        OrbitPoint {
            index: self.index,
            form: self.form,
            value: self.value.convert(),
        }
    }
}

/// Coding of the circle `[0, 1)` by `I_a = [0, 1 − θ)` and
/// `I_b = [1 − θ, 1)` under rotation by θ.
#[derive(Debug, Clone)]
pub struct RotationEncoding<S> {
    theta: Ball<S>,
    boundary: Ball<S>,
}

impl<S: Scalar> RotationEncoding<S> {
    pub fn new(theta: Ball<S>) -> RotationEncoding<S> {
        let boundary = Ball::from_integer(1).sub(&theta);
        RotationEncoding { theta, boundary }
    }

    pub fn theta(&self) -> &Ball<S> {
        &self.theta
    }

    /// The point `1 − θ` separating `I_a` from `I_b`.
    pub fn boundary(&self) -> &Ball<S> {
        &self.boundary
    }

    /// The letter coding `x`, or `None` if `x` is too close to `1 − θ` to
    /// decide at the current precision.
    pub fn classify(&self, x: &Ball<S>) -> Option<Letter> {
        match x.certified_cmp(&self.boundary)? {
            Ordering::Less => Some(Letter::A),
            _ => Some(Letter::B),
        }
    }

    /// `{x + tθ}`.
    pub fn rotate(&self, x: &Ball<S>, t: i64) -> Option<Ball<S>> {
        frac(&x.add(&self.theta.mul_int(t)))
    }

    /// `{jθ}` with its exact form.
    pub fn orbit_point(&self, j: i64) -> Option<OrbitPoint<S>> {
        let raw = self.theta.mul_int(j);
        let floor = raw.certified_floor()?;
        Some(OrbitPoint {
            index: j,
            form: ThetaForm::new(-floor, j),
            value: raw.sub(&Ball::from_integer(floor)),
        })
    }

    /// Letter `n` of the mechanical word.
    pub fn letter_at(&self, n: u64) -> Option<Letter> {
        let p = self.orbit_point(i64::try_from(n).ok()?)?;
        self.classify(&p.value)
    }
}

fn frac<S: Scalar>(x: &Ball<S>) -> Option<Ball<S>> {
    let floor = x.certified_floor()?;
    Some(x.sub(&Ball::from_integer(floor)))
}

/// Outcome of one attempt at a fixed precision.
enum Attempt<T> {
    Done(T),
    /// Some comparison could not be decided.
    Unresolved,
    /// Two distinct orbit points are exactly equal.
    Collision,
}

/// Precisions to try for scalar `S`, coarsest first.
fn ladder<S: Scalar>(theta: &SlopeValue, cap: PrecisionCap) -> Vec<u32> {
    if let Some(native) = S::NATIVE_BITS {
        // a few guard bits beyond what the scalar can hold
        return vec![native + 11];
    }
    if theta.exact_value().is_some() {
        return vec![0];
    }
    if !theta.is_refinable() {
        return vec![cap.0.min(START_BITS)];
    }
    let mut bits = Vec::new();
    let mut b = START_BITS;
    while b < cap.0 {
        bits.push(b);
        b *= 2;
    }
    bits.push(cap.0);
    bits
}

/// Runs `attempt` on successively finer enclosures of θ.
///
/// An unresolved final attempt is a collision when `points_only` is set and
/// a refinable slope could not separate the points at the cap in arbitrary
/// precision, and precision exhaustion otherwise.
fn refine<S: Scalar, T>(
    theta: &SlopeValue,
    cap: PrecisionCap,
    points_only: bool,
    mut attempt: impl FnMut(RotationEncoding<S>) -> Result<Attempt<T>>,
) -> Result<T> {
    let bits = ladder::<S>(theta, cap);
    let last = *bits.last().expect("ladder is nonempty");
    for &b in &bits {
        match attempt(RotationEncoding::new(theta.ball::<S>(b)))? {
            Attempt::Done(t) => return Ok(t),
            Attempt::Collision => return Err(Error::DegenerateSlope { bits: b }),
            Attempt::Unresolved => {}
        }
    }
    if points_only && S::NATIVE_BITS.is_none() && theta.is_refinable() {
        Err(Error::DegenerateSlope { bits: last })
    } else {
        Err(Error::PrecisionExhausted { bits: last })
    }
}

/// The first `len` letters of the mechanical word of slope θ (offset 0),
/// each certified. Uses the default precision cap.
pub fn mechanical_prefix(theta: &SlopeValue, len: usize) -> Result<Word> {
    mechanical_prefix_with(theta, len, PrecisionCap::default())
}

pub fn mechanical_prefix_with(theta: &SlopeValue, len: usize, cap: PrecisionCap) -> Result<Word> {
    if theta.exact_value().is_some() {
        // exact rational arithmetic always decides
        let enc = RotationEncoding::<BigRational>::new(theta.ball(0));
        let letters = (0..len as u64)
            .map(|n| {
                enc.letter_at(n)
                    .ok_or(Error::PrecisionExhausted { bits: 0 })
            })
            .collect::<Result<Vec<_>>>()?;
        return Ok(Word::from_letters(letters));
    }
    let fast = RotationEncoding::<f64>::new(theta.ball(64));
    let mut letters: Vec<Option<Letter>> = (0..len as u64).map(|n| fast.letter_at(n)).collect();
    let pending: Vec<usize> = (0..len).filter(|&i| letters[i].is_none()).collect();
    if !pending.is_empty() {
        let resolved = refine::<BigRational, Vec<Letter>>(theta, cap, false, |enc| {
            let got: Option<Vec<Letter>> =
                pending.iter().map(|&n| enc.letter_at(n as u64)).collect();
            Ok(got.map_or(Attempt::Unresolved, Attempt::Done))
        })?;
        for (&n, letter) in pending.iter().zip(resolved) {
            letters[n] = Some(letter);
        }
    }
    Ok(Word::from_letters(
        letters.into_iter().map(|l| l.expect("resolved")),
    ))
}

/// One arc of the circle together with the factor it codes.
#[derive(Debug, Clone, PartialEq)]
pub struct FactorInterval<S> {
    pub factor: Word,
    /// Left end point `{−jθ}`; the arc runs to the next point (or to 1).
    pub start: OrbitPoint<S>,
    pub length_form: ThetaForm,
    pub length: Ball<S>,
}

/// The `m + 1` factors of length `m` and their arcs, in increasing order
/// of both.
#[derive(Debug, Clone, PartialEq)]
pub struct FactorIntervalTable<S> {
    pub m: usize,
    pub intervals: Vec<FactorInterval<S>>,
}

impl<S: Scalar> FactorIntervalTable<S> {
    /// The sorted points `0 = q₀ < q₁ < … < q_m`.
    pub fn points(&self) -> impl Iterator<Item = &OrbitPoint<S>> {
        self.intervals.iter().map(|i| &i.start)
    }

    pub fn factors(&self) -> Vec<Word> {
        self.intervals.iter().map(|i| i.factor.clone()).collect()
    }

    pub fn lengths(&self) -> Vec<Ball<S>> {
        self.intervals.iter().map(|i| i.length.clone()).collect()
    }

    /// Distinct arc lengths as exact forms, sorted by form.
    pub fn distinct_length_forms(&self) -> Vec<ThetaForm> {
        let mut forms: Vec<ThetaForm> = self.intervals.iter().map(|i| i.length_form).collect();
        forms.sort_unstable();
        forms.dedup();
        forms
    }

    pub fn convert<T: Scalar>(&self) -> FactorIntervalTable<T> {
        FactorIntervalTable {
            m: self.m,
            intervals: self
                .intervals
                .iter()
                .map(|i| FactorInterval {
                    factor: i.factor.clone(),
                    start: i.start.convert(),
                    length_form: i.length_form,
                    length: i.length.convert(),
                })
                .collect(),
        }
    }
}

/// Sorts with a certified comparator; `Err(true)` on an exact tie,
/// `Err(false)` on an undecidable comparison.
fn certified_sort<S: Scalar>(points: &mut [OrbitPoint<S>]) -> std::result::Result<(), bool> {
    let undecided = Cell::new(false);
    points.sort_by(|x, y| {
        x.value.certified_cmp(&y.value).unwrap_or_else(|| {
            undecided.set(true);
            Ordering::Equal
        })
    });
    if undecided.get() {
        return Err(false);
    }
    for pair in points.windows(2) {
        match pair[0].value.certified_cmp(&pair[1].value) {
            Some(Ordering::Less) => {}
            Some(_) => return Err(true),
            None => return Err(false),
        }
    }
    Ok(())
}

/// `{−jθ}` for `j = 0..=m`, sorted.
fn sorted_negative_orbit<S: Scalar>(
    enc: &RotationEncoding<S>,
    m: usize,
) -> Attempt<Vec<OrbitPoint<S>>> {
    let mut points = Vec::with_capacity(m + 1);
    for j in 0..=m as i64 {
        match enc.orbit_point(-j) {
            Some(p) => points.push(p),
            None => return Attempt::Unresolved,
        }
    }
    match certified_sort(&mut points) {
        Ok(()) => Attempt::Done(points),
        Err(true) => Attempt::Collision,
        Err(false) => Attempt::Unresolved,
    }
}

fn build_factor_table<S: Scalar>(
    enc: &RotationEncoding<S>,
    m: usize,
) -> Result<Attempt<FactorIntervalTable<S>>> {
    let points = match sorted_negative_orbit(enc, m) {
        Attempt::Done(p) => p,
        Attempt::Unresolved => return Ok(Attempt::Unresolved),
        Attempt::Collision => return Ok(Attempt::Collision),
    };
    let one = OrbitPoint {
        index: 0,
        form: ThetaForm::ONE,
        value: Ball::from_integer(1),
    };
    let mut intervals = Vec::with_capacity(m + 1);
    for (g, start) in points.iter().enumerate() {
        let end = points.get(g + 1).unwrap_or(&one);
        // read the factor off an interior sample point
        let sample = start.value.midpoint(&end.value);
        let mut letters = Vec::with_capacity(m);
        for t in 0..m as i64 {
            let letter = enc.rotate(&sample, t).and_then(|y| enc.classify(&y));
            match letter {
                Some(l) => letters.push(l),
                None => return Ok(Attempt::Unresolved),
            }
        }
        let length_form = end.form - start.form;
        intervals.push(FactorInterval {
            factor: Word::from_letters(letters),
            start: start.clone(),
            length_form,
            length: length_form.eval(enc.theta()),
        });
    }
    if let Some(pair) = intervals.windows(2).find(|p| p[0].factor >= p[1].factor) {
        return Err(Error::Inconsistent(format!(
            "arc order disagrees with lexicographic order: {} before {}",
            pair[0].factor, pair[1].factor
        )));
    }
    Ok(Attempt::Done(FactorIntervalTable { m, intervals }))
}

fn require_slope_for_arcs(theta: &SlopeValue, m: usize) -> Result<()> {
    if m == 0 {
        return Err(Error::BadLength { m, n: 0 });
    }
    // exact rationals are allowed through; collisions report them
    if theta.exact_value().is_none() && !theta.is_irrational() {
        return Err(Error::NotIrrational);
    }
    Ok(())
}

/// Factors of length `m` and their arcs, computed with scalar `S` and
/// refined up to `cap` when `S` is arbitrary precision.
pub fn factor_interval_table_in<S: Scalar>(
    theta: &SlopeValue,
    m: usize,
    cap: PrecisionCap,
) -> Result<FactorIntervalTable<S>> {
    require_slope_for_arcs(theta, m)?;
    refine::<S, _>(theta, cap, true, |enc| build_factor_table(&enc, m))
}

/// Factors of length `m` and their arcs, reported in `f64`. Tries native
/// floating point first and falls back to exact rational arithmetic.
pub fn factor_interval_table(theta: &SlopeValue, m: usize) -> Result<FactorIntervalTable<f64>> {
    factor_interval_table_with(theta, m, PrecisionCap::default())
}

pub fn factor_interval_table_with(
    theta: &SlopeValue,
    m: usize,
    cap: PrecisionCap,
) -> Result<FactorIntervalTable<f64>> {
    if theta.exact_value().is_none() {
        match factor_interval_table_in::<f64>(theta, m, cap) {
            Err(Error::PrecisionExhausted { .. }) => {}
            other => return other,
        }
    }
    Ok(factor_interval_table_in::<BigRational>(theta, m, cap)?.convert())
}

/// Frequency of each factor of length `m`: the length of its arc.
pub fn factor_frequencies(theta: &SlopeValue, m: usize) -> Result<BTreeMap<Word, Ball<f64>>> {
    Ok(factor_interval_table(theta, m)?
        .intervals
        .into_iter()
        .map(|i| (i.factor, i.length))
        .collect())
}

/// One variety of partitioned factors and its frequency.
#[derive(Debug, Clone, PartialEq)]
pub struct VarietyFrequency<S> {
    pub profile: HeightProfile,
    /// Underlying factors, lexicographically increasing and contiguous.
    pub members: Vec<Word>,
    pub frequency_form: ThetaForm,
    pub frequency: Ball<S>,
}

/// The `k + 1` varieties of a composition and their frequencies.
#[derive(Debug, Clone, PartialEq)]
pub struct FrequencyTable<S> {
    pub composition: Composition,
    /// The sorted points `q′_j = {−s_j θ}`.
    pub points: Vec<OrbitPoint<S>>,
    pub entries: Vec<VarietyFrequency<S>>,
}

impl<S: Scalar> FrequencyTable<S> {
    pub fn frequencies(&self) -> Vec<Ball<S>> {
        self.entries.iter().map(|e| e.frequency.clone()).collect()
    }

    pub fn profiles(&self) -> Vec<HeightProfile> {
        self.entries.iter().map(|e| e.profile.clone()).collect()
    }

    pub fn convert<T: Scalar>(&self) -> FrequencyTable<T> {
        FrequencyTable {
            composition: self.composition.clone(),
            points: self.points.iter().map(OrbitPoint::convert).collect(),
            entries: self
                .entries
                .iter()
                .map(|e| VarietyFrequency {
                    profile: e.profile.clone(),
                    members: e.members.clone(),
                    frequency_form: e.frequency_form,
                    frequency: e.frequency.convert(),
                })
                .collect(),
        }
    }
}

/// Groups the arcs of `table` into the varieties of `comp`.
///
/// The cut points are the orbit points indexed by the partial sums of
/// `comp`. Each variety's frequency is checked, exactly, to be the sum of
/// its member arcs.
pub fn group_varieties<S: Scalar>(
    table: &FactorIntervalTable<S>,
    comp: &Composition,
    theta: &Ball<S>,
) -> Result<FrequencyTable<S>> {
    if comp.m() != table.m {
        return Err(Error::LengthMismatch {
            left: comp.m(),
            right: table.m,
        });
    }
    let rank: HashMap<i64, usize> = table
        .intervals
        .iter()
        .enumerate()
        .map(|(r, i)| (i.start.index, r))
        .collect();
    let mut cuts: Vec<usize> = comp
        .partial_sums()
        .iter()
        .map(|&s| rank[&-(s as i64)])
        .collect();
    cuts.sort_unstable();
    let points: Vec<OrbitPoint<S>> = cuts
        .iter()
        .map(|&r| table.intervals[r].start.clone())
        .collect();

    let mut entries = Vec::with_capacity(cuts.len());
    for (l, &from) in cuts.iter().enumerate() {
        let to = cuts.get(l + 1).copied().unwrap_or(table.intervals.len());
        let arcs = &table.intervals[from..to];
        let profile = height_profile(&arcs[0].factor, comp)?;
        for arc in &arcs[1..] {
            if height_profile(&arc.factor, comp)? != profile {
                return Err(Error::Inconsistent(format!(
                    "arc block {l} mixes profiles: {} and {}",
                    arcs[0].factor, arc.factor
                )));
            }
        }
        let summed: ThetaForm = arcs.iter().map(|a| a.length_form).sum();
        let end_form = cuts
            .get(l + 1)
            .map(|&r| table.intervals[r].start.form)
            .unwrap_or(ThetaForm::ONE);
        let direct = end_form - table.intervals[from].start.form;
        if summed != direct {
            return Err(Error::Inconsistent(format!(
                "variety {l}: member arcs sum to {summed}, span is {direct}"
            )));
        }
        entries.push(VarietyFrequency {
            profile,
            members: arcs.iter().map(|a| a.factor.clone()).collect(),
            frequency_form: direct,
            frequency: direct.eval(theta),
        });
    }
    let mut seen: Vec<&HeightProfile> = entries.iter().map(|e| &e.profile).collect();
    seen.sort();
    seen.dedup();
    if seen.len() != entries.len() {
        return Err(Error::Inconsistent("two arc blocks share a profile".into()));
    }
    Ok(FrequencyTable {
        composition: comp.clone(),
        points,
        entries,
    })
}

pub fn partitioned_frequencies_in<S: Scalar>(
    theta: &SlopeValue,
    comp: &Composition,
    cap: PrecisionCap,
) -> Result<FrequencyTable<S>> {
    require_slope_for_arcs(theta, comp.m())?;
    refine::<S, _>(theta, cap, true, |enc| {
        Ok(match build_factor_table(&enc, comp.m())? {
            Attempt::Done(table) => Attempt::Done(group_varieties(&table, comp, enc.theta())?),
            Attempt::Unresolved => Attempt::Unresolved,
            Attempt::Collision => Attempt::Collision,
        })
    })
}

/// Frequencies of the `k + 1` varieties of `comp`, reported in `f64`.
pub fn partitioned_frequencies(
    theta: &SlopeValue,
    comp: &Composition,
) -> Result<FrequencyTable<f64>> {
    partitioned_frequencies_with(theta, comp, PrecisionCap::default())
}

pub fn partitioned_frequencies_with(
    theta: &SlopeValue,
    comp: &Composition,
    cap: PrecisionCap,
) -> Result<FrequencyTable<f64>> {
    if theta.exact_value().is_none() {
        match partitioned_frequencies_in::<f64>(theta, comp, cap) {
            Err(Error::PrecisionExhausted { .. }) => {}
            other => return other,
        }
    }
    Ok(partitioned_frequencies_in::<BigRational>(theta, comp, cap)?.convert())
}

/// Observed count of one variety in a finite prefix.
#[derive(Debug, Clone, PartialEq)]
pub struct EmpiricalEntry {
    pub profile: HeightProfile,
    /// Least factor of the variety seen in the prefix.
    pub representative: Word,
    pub count: usize,
    pub frequency: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EmpiricalFrequencies {
    pub composition: Composition,
    pub samples: usize,
    pub entries: Vec<EmpiricalEntry>,
}

impl EmpiricalFrequencies {
    pub fn frequency_of(&self, profile: &HeightProfile) -> f64 {
        self.entries
            .iter()
            .find(|e| &e.profile == profile)
            .map_or(0.0, |e| e.frequency)
    }
}

/// Counts the varieties of the factors starting at positions `0..samples`
/// of the mechanical word and divides by `samples`.
pub fn empirical_frequencies(
    theta: &SlopeValue,
    comp: &Composition,
    samples: usize,
) -> Result<EmpiricalFrequencies> {
    empirical_frequencies_with(theta, comp, samples, PrecisionCap::default())
}

pub fn empirical_frequencies_with(
    theta: &SlopeValue,
    comp: &Composition,
    samples: usize,
    cap: PrecisionCap,
) -> Result<EmpiricalFrequencies> {
    let m = comp.m();
    if samples < m {
        return Err(Error::BadLength { m, n: samples });
    }
    let word = mechanical_prefix_with(theta, samples + m - 1, cap)?;
    let bytes = word.as_bytes();
    let mut prefix_heights = Vec::with_capacity(bytes.len() + 1);
    prefix_heights.push(0usize);
    for &c in bytes {
        prefix_heights.push(prefix_heights.last().unwrap() + usize::from(c == b'b'));
    }
    let sums = comp.partial_sums();
    // profile -> (count, start of least factor)
    let mut seen: HashMap<Vec<usize>, (usize, usize)> = HashMap::new();
    let mut key = Vec::with_capacity(comp.k());
    for start in 0..samples {
        key.clear();
        key.extend(
            sums.windows(2)
                .map(|s| prefix_heights[start + s[1]] - prefix_heights[start + s[0]]),
        );
        match seen.get_mut(&key) {
            Some((count, least)) => {
                *count += 1;
                if bytes[start..start + m] < bytes[*least..*least + m] {
                    *least = start;
                }
            }
            None => {
                seen.insert(key.clone(), (1, start));
            }
        }
    }
    let mut entries: Vec<EmpiricalEntry> = seen
        .into_iter()
        .map(|(profile, (count, least))| EmpiricalEntry {
            profile: HeightProfile(profile),
            representative: word.factor(least, m),
            count,
            frequency: count as f64 / samples as f64,
        })
        .collect();
    entries.sort_by(|a, b| a.representative.cmp(&b.representative));
    Ok(EmpiricalFrequencies {
        composition: comp.clone(),
        samples,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::slope::NamedConstant;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn log23() -> SlopeValue {
        SlopeValue::named(NamedConstant::Log2ThreeHalves)
    }

    #[test]
    fn theta_form_display() {
        let shown: Vec<String> = [(1, 0), (0, 1), (0, -1), (1, -1), (2, -3), (-2, 4), (0, 0)]
            .iter()
            .map(|&(c, d)| ThetaForm::new(c, d).to_string())
            .collect();
        assert_eq!(shown, ["1", "θ", "-θ", "1 - θ", "2 - 3θ", "-2 + 4θ", "0"]);
    }

    #[test]
    fn prefixes() {
        assert_eq!(
            mechanical_prefix(&log23(), 36).unwrap().as_str(),
            "abababbababbabababbababbabababbababb"
        );
        assert_eq!(
            mechanical_prefix(&SlopeValue::rational(2, 7).unwrap(), 7).unwrap(),
            w("aaabaab")
        );
        for c in NamedConstant::ALL {
            assert_eq!(mechanical_prefix(&SlopeValue::named(c), 1).unwrap(), w("a"));
        }
    }

    #[test]
    fn example_table_order_and_lengths() {
        let t = factor_interval_table(&log23(), 4).unwrap();
        let names: Vec<String> = t.factors().iter().map(|f| f.to_string()).collect();
        assert_eq!(names, ["abab", "abba", "baba", "babb", "bbab"]);
        // frozen from a 50-digit mpmath evaluation of the sorted points
        let expected = [
            0.2451124978365315,
            0.1699250014423124,
            0.2451124978365315,
            0.1699250014423124,
            0.1699250014423124,
        ];
        for (len, want) in t.lengths().iter().zip(expected) {
            assert!((len.value() - want).abs() < 1e-14, "{len:?} vs {want}");
        }
        assert_eq!(t.distinct_length_forms().len(), 2);
    }

    #[test]
    fn letters_are_the_two_basic_arcs() {
        let t = factor_interval_table(&log23(), 1).unwrap();
        assert_eq!(t.factors(), [w("a"), w("b")]);
        let theta = 1.5f64.log2();
        assert!((t.lengths()[0].value() - (1.0 - theta)).abs() < 1e-15);
        assert!((t.lengths()[1].value() - theta).abs() < 1e-15);
        let freqs = factor_frequencies(&log23(), 1).unwrap();
        assert!((freqs[&w("a")].value() - 0.415037499278844).abs() < 1e-14);
        assert!((freqs[&w("b")].value() - 0.584962500721156).abs() < 1e-14);
    }

    #[test]
    fn golden_lengths() {
        // sorted {0, {−θ}, {−2θ}, {−3θ}} for θ = (√5−1)/2, from mpmath
        let t = factor_interval_table(&SlopeValue::named(NamedConstant::Golden), 3).unwrap();
        let expected = [
            0.1458980337503155,
            0.2360679774997897,
            0.3819660112501052,
            0.2360679774997897,
        ];
        for (len, want) in t.lengths().iter().zip(expected) {
            assert!((len.value() - want).abs() < 1e-14, "{len:?} vs {want}");
        }
    }

    #[test]
    fn partitioned_example() {
        let comp = Composition::new(vec![1, 3]).unwrap();
        let t = partitioned_frequencies(&log23(), &comp).unwrap();
        let members: Vec<Vec<String>> = t
            .entries
            .iter()
            .map(|e| e.members.iter().map(|m| m.to_string()).collect())
            .collect();
        assert_eq!(
            members,
            [vec!["abab", "abba"], vec!["baba"], vec!["babb", "bbab"]]
        );
        let expected = [0.4150374992788438, 0.2451124978365315, 0.3398500028846247];
        for (f, want) in t.frequencies().iter().zip(expected) {
            assert!((f.value() - want).abs() < 1e-14);
        }
        let total: ThetaForm = t.entries.iter().map(|e| e.frequency_form).sum();
        assert_eq!(total, ThetaForm::ONE);
    }

    #[test]
    fn single_part_splits_by_height() {
        let comp = Composition::whole(5).unwrap();
        let t = partitioned_frequencies(&log23(), &comp).unwrap();
        assert_eq!(t.entries.len(), 2);
        let h0 = t.entries[0].profile.total();
        assert_eq!(t.entries[1].profile.total(), h0 + 1);
    }

    #[test]
    fn rational_slopes_collide_past_the_period() {
        let theta = SlopeValue::rational(2, 7).unwrap();
        assert!(factor_interval_table(&theta, 6).is_ok());
        assert!(matches!(
            factor_interval_table(&theta, 7),
            Err(Error::DegenerateSlope { .. })
        ));
    }

    #[test]
    fn unasserted_decimal_is_rejected() {
        let theta = SlopeValue::decimal(
            crate::slope::parse_decimal("0.6").unwrap(),
            crate::slope::parse_decimal("1e-20").unwrap(),
            false,
        )
        .unwrap();
        assert_eq!(factor_interval_table(&theta, 3), Err(Error::NotIrrational));
    }

    #[test]
    fn coarse_decimal_exhausts_precision() {
        let theta: SlopeValue = "0.618@1e-3".parse().unwrap();
        assert!(matches!(
            factor_interval_table(&theta, 60),
            Err(Error::PrecisionExhausted { .. })
        ));
        assert!(matches!(
            mechanical_prefix(&theta, 5000),
            Err(Error::PrecisionExhausted { .. })
        ));
    }

    #[test]
    fn scalar_backends_agree() {
        let theta = log23();
        let exact =
            factor_interval_table_in::<BigRational>(&theta, 12, PrecisionCap::default()).unwrap();
        let double = factor_interval_table_in::<f64>(&theta, 12, PrecisionCap::default()).unwrap();
        let single = factor_interval_table_in::<f32>(&theta, 12, PrecisionCap::default()).unwrap();
        assert_eq!(exact.factors(), double.factors());
        assert_eq!(exact.factors(), single.factors());
        for ((e, d), s) in exact
            .intervals
            .iter()
            .zip(&double.intervals)
            .zip(&single.intervals)
        {
            assert_eq!(e.length_form, d.length_form);
            assert_eq!(e.length_form, s.length_form);
            assert!(d.length.overlaps(&e.length.convert()));
            assert!(s.length.overlaps(&e.length.convert()));
        }
    }

    #[test]
    fn f32_runs_out_before_rationals_do() {
        let theta = log23();
        assert!(matches!(
            factor_interval_table_in::<f32>(&theta, 5000, PrecisionCap::default()),
            Err(Error::PrecisionExhausted { .. })
        ));
    }

    #[test]
    fn empirical_letter_frequency() {
        let comp = Composition::new(vec![1]).unwrap();
        let e = empirical_frequencies(&log23(), &comp, 10_000).unwrap();
        let b = e.frequency_of(&HeightProfile(vec![1]));
        assert!((b - 1.5f64.log2()).abs() < 1e-3);
        assert_eq!(e.entries.iter().map(|x| x.count).sum::<usize>(), 10_000);
    }

    #[test]
    fn empirical_counts_on_short_prefix() {
        // factors at positions 0..33 of the 36-letter prefix
        let comp = Composition::new(vec![1, 3]).unwrap();
        let e = empirical_frequencies(&log23(), &comp, 33).unwrap();
        let prefix = "abababbababbabababbababbabababbababb";
        let mut counts: HashMap<Vec<usize>, usize> = HashMap::new();
        for s in 0..33 {
            let f = &prefix[s..s + 4];
            let p = vec![usize::from(&f[..1] == "b"), f[1..].matches('b').count()];
            *counts.entry(p).or_default() += 1;
        }
        for entry in &e.entries {
            assert_eq!(entry.count, counts[entry.profile.heights()]);
        }
    }
}
