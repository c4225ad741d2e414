//! Monospace picture of the circle `[0, 1)` cut by the points `{−jθ}`.
//!
//! ```text
//!      0                                            1
//!      |--------|-----------|--------|-----------|--|
//!   j  0        3           1        4           2
//! I_a  ##########################
//! ```
//!
//! With a composition, only the cuts between varieties are drawn as `|`;
//! the other orbit points become `:`.

use crate::num::show;
use crate::report::{table, DiagramReport};

const WIDTH: usize = 72;

fn column(x: f64) -> usize {
    ((x * WIDTH as f64).round() as usize).min(WIDTH)
}

pub fn draw(report: &DiagramReport) -> String {
    let mut out = format!("slope {}  m = {}", report.slope, report.m);
    if let Some(c) = &report.composition {
        out.push_str(&format!("  composition ({c})"));
    }
    out.push_str(&format!(
        "\n{} points {{-j theta}}, I_a = [0, {}), I_b = [{}, 1)\n\n",
        report.points.len(),
        show(report.boundary),
        show(report.boundary)
    ));

    let mut ruler = vec!['-'; WIDTH + 1];
    ruler[WIDTH] = '|';
    let cuts: Vec<i64> = report.segments.iter().map(|s| s.points[0]).collect();
    for p in &report.points {
        let col = column(p.position);
        if cuts.contains(&p.j) {
            ruler[col] = '|';
        } else if ruler[col] == '-' {
            ruler[col] = ':';
        }
    }

    let mut labels = vec![' '; WIDTH + 8];
    let mut free_from = 0;
    for p in &report.points {
        let col = column(p.position);
        let text = p.j.to_string();
        if col >= free_from {
            for (k, ch) in text.chars().enumerate() {
                labels[col + k] = ch;
            }
            free_from = col + text.len() + 1;
        }
    }

    let shade: String = (0..=WIDTH)
        .map(|c| {
            if (c as f64 + 0.5) / (WIDTH as f64) < report.boundary {
                '#'
            } else {
                ' '
            }
        })
        .collect();

    let axis = format!("0{}1", " ".repeat(WIDTH - 1));
    let lines = [
        ("", axis),
        ("", ruler.into_iter().collect()),
        ("j", labels.into_iter().collect()),
        ("I_a", shade),
    ];
    for (tag, body) in lines {
        out.push_str(format!("{tag:>3}  {body}").trim_end());
        out.push('\n');
    }
    out.push('\n');

    let merged = report.composition.is_some();
    let mut header = vec!["segment", "from", "to", "length", "points"];
    header.push(if merged { "profile" } else { "factor" });
    if merged {
        header.push("factors");
    }
    let rows: Vec<Vec<String>> = report
        .segments
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let points: Vec<String> = s.points.iter().map(i64::to_string).collect();
            let mut row = vec![
                (i + 1).to_string(),
                show(s.from),
                show(s.to),
                show(s.length),
                points.join(" "),
            ];
            if let Some(p) = &s.profile {
                let hs: Vec<String> = p.iter().map(usize::to_string).collect();
                row.push(format!("<{}>", hs.join(",")));
            }
            row.push(s.factors.join(" "));
            row
        })
        .collect();
    out.push_str(&table(&header, &rows));
    out
}
