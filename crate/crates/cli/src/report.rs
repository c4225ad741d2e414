//! Report types and their text, JSON and CSV renderings.

use serde::{Deserialize, Serialize};

use crate::num::show;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

/// A command result that can be rendered in every output format.
pub trait Report: Serialize {
    fn text(&self) -> String;
    fn csv_header(&self) -> Vec<&'static str>;
    fn csv_rows(&self) -> Vec<Vec<String>>;
}

pub fn render<R: Report>(report: &R, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => report.text(),
        OutputFormat::Json => to_json(report),
        OutputFormat::Csv => to_csv(report.csv_header(), report.csv_rows()),
    }
}

pub fn to_json<R: Serialize>(report: &R) -> String {
    let mut out = serde_json::to_string_pretty(report).expect("reports serialize");
    out.push('\n');
    out
}

fn to_csv(header: Vec<&str>, rows: Vec<Vec<String>>) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(header).expect("in-memory write");
    for row in rows {
        writer.write_record(row).expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

/// Left-aligned columns separated by two spaces, without trailing blanks.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let mut s = String::new();
        for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
            if i > 0 {
                s.push_str("  ");
            }
            s.push_str(cell);
            s.extend(std::iter::repeat_n(' ', w - cell.chars().count()));
        }
        s.truncate(s.trim_end().len());
        s.push('\n');
        s
    };
    let mut out = line(header.to_vec());
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}

fn profile_text(p: &[usize]) -> String {
    let hs: Vec<String> = p.iter().map(usize::to_string).collect();
    format!("<{}>", hs.join(","))
}

fn tuple_text(xs: &[usize]) -> String {
    let hs: Vec<String> = xs.iter().map(usize::to_string).collect();
    format!("({})", hs.join(","))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChristoffelReport {
    pub schema_version: u32,
    pub p: usize,
    pub q: usize,
    pub variant: String,
    pub word: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bwt: Option<Vec<String>>,
}

impl Report for ChristoffelReport {
    fn text(&self) -> String {
        match &self.bwt {
            Some(rows) => rows.iter().map(|r| format!("{r}\n")).collect(),
            None => format!("{}\n", self.word),
        }
    }

    fn csv_header(&self) -> Vec<&'static str> {
        match self.bwt {
            Some(_) => vec!["row", "word"],
            None => vec!["p", "q", "variant", "word"],
        }
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        match &self.bwt {
            Some(rows) => rows
                .iter()
                .enumerate()
                .map(|(i, r)| vec![i.to_string(), r.clone()])
                .collect(),
            None => vec![vec![
                self.p.to_string(),
                self.q.to_string(),
                self.variant.clone(),
                self.word.clone(),
            ]],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VarietyRow {
    pub profile: Vec<usize>,
    pub multiplicity: usize,
    /// Index of the first row of the sorted conjugate matrix in the variety.
    pub first_row: usize,
    pub representative: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VarietyReport {
    pub schema_version: u32,
    pub input: String,
    pub word: String,
    pub m: usize,
    pub composition: String,
    pub methods: Vec<String>,
    pub multiplicities: Vec<usize>,
    pub rows: Vec<VarietyRow>,
}

impl Report for VarietyReport {
    fn text(&self) -> String {
        let mut out = format!(
            "word {}  m = {}  composition ({})  checked by {}\n\n",
            self.word,
            self.m,
            self.composition,
            self.methods.join(" and ")
        );
        out.push_str(&table(&self.csv_header(), &self.csv_rows()));
        out.push_str(&format!(
            "\n{} varieties, multiplicities {}\n",
            self.rows.len(),
            tuple_text(&self.multiplicities)
        ));
        out
    }

    fn csv_header(&self) -> Vec<&'static str> {
        vec!["profile", "multiplicity", "first_row", "representative"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.rows
            .iter()
            .map(|r| {
                vec![
                    profile_text(&r.profile),
                    r.multiplicity.to_string(),
                    r.first_row.to_string(),
                    r.representative.clone(),
                ]
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FrequencyRow {
    pub profile: Vec<usize>,
    pub members: Vec<String>,
    /// Exact frequency as `c + d·θ`.
    pub form: String,
    pub frequency: f64,
    pub bound: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub empirical: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub deviation: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FrequencyReport {
    pub schema_version: u32,
    pub slope: String,
    pub m: usize,
    pub composition: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    pub rows: Vec<FrequencyRow>,
}

impl Report for FrequencyReport {
    fn text(&self) -> String {
        let mut out = format!(
            "slope {}  m = {}  composition ({})\n\n",
            self.slope, self.m, self.composition
        );
        out.push_str(&table(&self.csv_header(), &self.csv_rows()));
        if let Some(n) = self.samples {
            let worst = self
                .rows
                .iter()
                .filter_map(|r| r.deviation)
                .fold(0.0, f64::max);
            out.push_str(&format!(
                "\nempirical over {n} factors, max deviation {}\n",
                show(worst)
            ));
        }
        out
    }

    fn csv_header(&self) -> Vec<&'static str> {
        let mut h = vec!["profile", "members", "form", "frequency", "bound"];
        if self.samples.is_some() {
            h.extend(["empirical", "deviation"]);
        }
        h
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.rows
            .iter()
            .map(|r| {
                let mut row = vec![
                    profile_text(&r.profile),
                    r.members.join(" "),
                    r.form.clone(),
                    show(r.frequency),
                    show(r.bound),
                ];
                if self.samples.is_some() {
                    row.push(r.empirical.map(show).unwrap_or_default());
                    row.push(r.deviation.map(show).unwrap_or_default());
                }
                row
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiagramPoint {
    /// The point is `{−jθ}`.
    pub j: i64,
    pub position: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiagramSegment {
    pub from: f64,
    pub to: f64,
    pub length: f64,
    /// Orbit points inside the segment, the first one at its left end.
    pub points: Vec<i64>,
    pub factors: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub profile: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiagramReport {
    pub schema_version: u32,
    pub slope: String,
    pub m: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub composition: Option<String>,
    /// `I_a = [0, boundary)`, `I_b = [boundary, 1)`.
    pub boundary: f64,
    pub points: Vec<DiagramPoint>,
    pub segments: Vec<DiagramSegment>,
}

impl Report for DiagramReport {
    fn text(&self) -> String {
        crate::diagram::draw(self)
    }

    fn csv_header(&self) -> Vec<&'static str> {
        vec![
            "segment", "from", "to", "length", "points", "profile", "factors",
        ]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.segments
            .iter()
            .enumerate()
            .map(|(i, s)| {
                let points: Vec<String> = s.points.iter().map(i64::to_string).collect();
                vec![
                    (i + 1).to_string(),
                    show(s.from),
                    show(s.to),
                    show(s.length),
                    points.join(" "),
                    s.profile.as_deref().map(profile_text).unwrap_or_default(),
                    s.factors.join(" "),
                ]
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckBounds {
    pub max_n: usize,
    pub max_m: usize,
    pub max_part_m: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub property: String,
    pub passed: bool,
    pub cases: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub schema_version: u32,
    pub scope: String,
    pub bounds: CheckBounds,
    pub passed: bool,
    pub results: Vec<CheckResult>,
}

impl Report for CheckReport {
    fn text(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            let status = if r.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("{status}  {} ({} cases)\n", r.property, r.cases));
            if let Some(c) = &r.counterexample {
                out.push_str(&format!("      counterexample: {c}\n"));
            }
        }
        let failed = self.results.iter().filter(|r| !r.passed).count();
        if failed == 0 {
            out.push_str(&format!("all {} properties hold\n", self.results.len()));
        } else {
            out.push_str(&format!(
                "{failed} of {} properties failed\n",
                self.results.len()
            ));
        }
        out
    }

    fn csv_header(&self) -> Vec<&'static str> {
        vec!["property", "status", "cases", "counterexample"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.results
            .iter()
            .map(|r| {
                vec![
                    r.property.clone(),
                    if r.passed { "PASS" } else { "FAIL" }.to_string(),
                    r.cases.to_string(),
                    r.counterexample.clone().unwrap_or_default(),
                ]
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_alignment() {
        let t = table(&["a", "long"], &[vec!["xyz".into(), "1".into()]]);
        assert_eq!(t, "a    long\nxyz  1\n");
    }

    #[test]
    fn csv_quotes_commas() {
        let out = to_csv(vec!["profile", "n"], vec![vec!["<0,1>".into(), "2".into()]]);
        assert_eq!(out, "profile,n\n\"<0,1>\",2\n");
    }
}
