//! Builds reports from parsed command-line inputs.

use std::fmt;

use partfac::{
    bwt_matrix, circular_factors, classify_varieties, empirical_frequencies_with,
    factor_interval_table_with, lower_christoffel, make_params, multiplicities_formula,
    partitioned_frequencies_with, upper_christoffel, variety_rows, Composition, Error,
    FactorMultiset, PartitionedFactor, PrecisionCap, SlopeValue, VarietyTable, Word,
};

use crate::num::{rounded_with_bound, sig9};
use crate::report::{
    ChristoffelReport, DiagramPoint, DiagramReport, DiagramSegment, FrequencyReport, FrequencyRow,
    VarietyReport, VarietyRow, SCHEMA_VERSION,
};

/// Why a command failed, mapped to the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    Property(String),
    Validation(String),
    Internal(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Property(_) => 1,
            Failure::Validation(_) => 2,
            Failure::Internal(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Property(s) => write!(f, "property failure: {s}"),
            Failure::Validation(s) => write!(f, "invalid input: {s}"),
            Failure::Internal(s) => write!(f, "internal error: {s}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Inconsistent(_) => Failure::Internal(e.to_string()),
            _ => Failure::Validation(e.to_string()),
        }
    }
}

pub type Outcome<T> = std::result::Result<T, Failure>;

/// Christoffel counts written `p/q`: `p` letters a and `q` letters b.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Counts {
    pub p: usize,
    pub q: usize,
}

impl std::str::FromStr for Counts {
    type Err = String;

    fn from_str(s: &str) -> Result<Counts, String> {
        let bad = || format!("expected counts P/Q, got {s:?}");
        let (p, q) = s.split_once('/').ok_or_else(bad)?;
        Ok(Counts {
            p: p.trim().parse().map_err(|_| bad())?,
            q: q.trim().parse().map_err(|_| bad())?,
        })
    }
}

pub enum VarietySource {
    Word(Word),
    Counts(Counts),
}

pub fn christoffel(p: usize, q: usize, upper: bool, bwt: bool) -> Outcome<ChristoffelReport> {
    let word = if upper {
        upper_christoffel(p, q)?
    } else {
        lower_christoffel(p, q)?
    };
    let rows = if bwt {
        Some(
            bwt_matrix(&word)?
                .rows()
                .iter()
                .map(Word::to_string)
                .collect(),
        )
    } else {
        None
    };
    Ok(ChristoffelReport {
        schema_version: SCHEMA_VERSION,
        p,
        q,
        variant: if upper { "upper" } else { "lower" }.to_string(),
        word: word.to_string(),
        bwt: rows,
    })
}

/// Position of the first conjugate starting with `u` in the sorted list.
fn first_row(fs: &FactorMultiset, u: &Word) -> usize {
    fs.iter().take_while(|(v, _)| *v < u).map(|(_, c)| c).sum()
}

fn variety_rows_of(table: &VarietyTable, fs: &FactorMultiset) -> Outcome<Vec<VarietyRow>> {
    table
        .entries
        .iter()
        .map(|e| {
            let rep = PartitionedFactor::new(e.representative.clone(), table.composition.clone())?;
            Ok(VarietyRow {
                profile: e.profile.0.clone(),
                multiplicity: e.multiplicity,
                first_row: first_row(fs, &e.representative),
                representative: rep.to_string(),
            })
        })
        .collect()
}

pub fn varieties(
    source: VarietySource,
    m: usize,
    comp: Option<Composition>,
) -> Outcome<VarietyReport> {
    let comp = match comp {
        Some(c) => c,
        None => Composition::whole(m)?,
    };
    if comp.m() != m {
        return Err(Failure::Validation(format!(
            "composition ({comp}) does not sum to m = {m}"
        )));
    }
    let (input, word) = match &source {
        VarietySource::Word(w) => (w.to_string(), w.clone()),
        VarietySource::Counts(c) => (format!("{}/{}", c.p, c.q), lower_christoffel(c.p, c.q)?),
    };
    let fs = circular_factors(&word, m)?;
    let brute = classify_varieties(&fs, &comp)?;
    let rows = variety_rows_of(&brute, &fs)?;
    let mut methods = vec!["brute force".to_string()];
    if let VarietySource::Counts(c) = source {
        let params = make_params(c.p, c.q)?;
        let formula = multiplicities_formula(&params, &comp)?;
        if formula != brute {
            return Err(Failure::Internal(format!(
                "closed form and brute force disagree for {}/{} under ({comp})",
                c.p, c.q
            )));
        }
        let starts = variety_rows(&params, &comp)?;
        let listed: Vec<usize> = rows.iter().map(|r| r.first_row).collect();
        if starts != listed {
            return Err(Failure::Internal(format!(
                "first rows {starts:?} from residues, {listed:?} from the conjugate matrix"
            )));
        }
        methods.push("closed form".to_string());
    }
    Ok(VarietyReport {
        schema_version: SCHEMA_VERSION,
        input,
        word: word.to_string(),
        m,
        composition: comp.to_string(),
        methods,
        multiplicities: brute.multiplicities(),
        rows,
    })
}

pub fn frequencies(
    theta: &SlopeValue,
    m: usize,
    comp: Option<Composition>,
    samples: Option<usize>,
    cap: PrecisionCap,
) -> Outcome<FrequencyReport> {
    let comp = match comp {
        Some(c) => c,
        None => Composition::whole(m)?,
    };
    if comp.m() != m {
        return Err(Failure::Validation(format!(
            "composition ({comp}) does not sum to m = {m}"
        )));
    }
    let exact = partitioned_frequencies_with(theta, &comp, cap)?;
    let observed = samples
        .map(|n| empirical_frequencies_with(theta, &comp, n, cap))
        .transpose()?;
    if let Some(obs) = &observed {
        if let Some(extra) = obs
            .entries
            .iter()
            .find(|o| !exact.entries.iter().any(|e| e.profile == o.profile))
        {
            return Err(Failure::Internal(format!(
                "prefix shows variety {} with no arc",
                extra.profile
            )));
        }
    }
    let rows = exact
        .entries
        .iter()
        .map(|e| {
            let (frequency, bound) = rounded_with_bound(e.frequency.value(), e.frequency.error());
            let empirical = observed.as_ref().map(|o| o.frequency_of(&e.profile));
            FrequencyRow {
                profile: e.profile.0.clone(),
                members: e.members.iter().map(Word::to_string).collect(),
                form: e.frequency_form.to_string(),
                frequency,
                bound,
                empirical: empirical.map(sig9),
                deviation: empirical.map(|x| sig9((x - e.frequency.value()).abs())),
            }
        })
        .collect();
    Ok(FrequencyReport {
        schema_version: SCHEMA_VERSION,
        slope: theta.to_string(),
        m,
        composition: comp.to_string(),
        samples,
        rows,
    })
}

pub fn diagram(
    theta: &SlopeValue,
    m: usize,
    comp: Option<Composition>,
    cap: PrecisionCap,
) -> Outcome<DiagramReport> {
    if let Some(c) = &comp {
        if c.m() != m {
            return Err(Failure::Validation(format!(
                "composition ({c}) does not sum to m = {m}"
            )));
        }
    }
    let table = factor_interval_table_with(theta, m, cap)?;
    let points: Vec<DiagramPoint> = table
        .intervals
        .iter()
        .map(|i| DiagramPoint {
            j: -i.start.index,
            position: sig9(i.start.value.value()),
        })
        .collect();
    let mut segments: Vec<DiagramSegment> = Vec::new();
    let ends = points
        .iter()
        .skip(1)
        .map(|p| p.position)
        .chain(std::iter::once(1.0));
    for ((arc, point), to) in table.intervals.iter().zip(&points).zip(ends) {
        let profile = comp
            .as_ref()
            .map(|c| partfac::height_profile(&arc.factor, c))
            .transpose()?
            .map(|p| p.0);
        match segments.last_mut() {
            Some(last) if profile.is_some() && last.profile == profile => {
                last.to = to;
                last.points.push(point.j);
                last.factors.push(arc.factor.to_string());
            }
            _ => segments.push(DiagramSegment {
                from: point.position,
                to,
                length: 0.0,
                points: vec![point.j],
                factors: vec![arc.factor.to_string()],
                profile,
            }),
        }
    }
    if let Some(c) = &comp {
        let exact = partitioned_frequencies_with(theta, c, cap)?;
        if exact.entries.len() != segments.len() {
            return Err(Failure::Internal(format!(
                "{} varieties but {} merged segments",
                exact.entries.len(),
                segments.len()
            )));
        }
        for (seg, e) in segments.iter_mut().zip(&exact.entries) {
            seg.length = sig9(e.frequency.value());
        }
    } else {
        for (seg, arc) in segments.iter_mut().zip(&table.intervals) {
            seg.length = sig9(arc.length.value());
        }
    }
    Ok(DiagramReport {
        schema_version: SCHEMA_VERSION,
        slope: theta.to_string(),
        m,
        composition: comp.map(|c| c.to_string()),
        boundary: sig9(1.0 - theta.to_f64()),
        points,
        segments,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_by_failure() {
        assert_eq!(
            Failure::from(Error::Inconsistent("x".into())).exit_code(),
            3
        );
        assert_eq!(
            Failure::from(Error::NotCoprime { p: 4, q: 2 }).exit_code(),
            2
        );
        assert_eq!(
            Failure::from(Error::DegenerateSlope { bits: 0 }).exit_code(),
            2
        );
        assert_eq!(Failure::Property("p".into()).exit_code(), 1);
    }

    #[test]
    fn counts_parse() {
        assert_eq!("5/2".parse::<Counts>(), Ok(Counts { p: 5, q: 2 }));
        assert!("5".parse::<Counts>().is_err());
        assert!("a/2".parse::<Counts>().is_err());
    }

    #[test]
    fn first_rows_follow_the_sorted_conjugates() {
        let report = varieties(
            VarietySource::Word("aaabaab".parse().unwrap()),
            4,
            Some("1,2,1".parse().unwrap()),
        )
        .unwrap();
        let rows: Vec<usize> = report.rows.iter().map(|r| r.first_row).collect();
        assert_eq!(rows, [0, 1, 5, 6]);
    }
}
