//! Text renderings of tables and reports. Markdown and CSV output carry no
//! timings and are byte-identical across runs.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use num_bigint::BigInt;

use super::report::BettiReport;
use super::verify::VerificationReport;
use crate::error::{Error, Result};
use crate::sequences::ClosedFormTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Md,
    Json,
    Csv,
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Md => "md",
            Format::Json => "json",
            Format::Csv => "csv",
        })
    }
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "md" | "markdown" => Ok(Format::Md),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(Error::InvalidInput(format!("unknown format `{s}` (use md, json or csv)"))),
        }
    }
}

fn join<T: fmt::Display>(items: &[T], sep: &str) -> String {
    items.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

/// Markdown table with columns `n | β^0 ... | χ`.
fn md_betti_table<T: fmt::Display>(n: usize, betti: &[T], chi: impl fmt::Display) -> String {
    let mut out = String::new();
    let heads: Vec<String> = (0..betti.len()).map(|r| format!("β^{r}")).collect();
    writeln!(out, "| n | {} | χ |", heads.join(" | ")).unwrap();
    writeln!(out, "|---|{}---|", "---|".repeat(betti.len())).unwrap();
    writeln!(out, "| {n} | {} | {chi} |", join(betti, " | ")).unwrap();
    out
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn render_formula(table: &ClosedFormTable, format: Format) -> String {
    match format {
        Format::Csv => format!("{}\nchi={}\n", join(&table.betti, ","), table.euler_char),
        Format::Md => format!(
            "Nonzero Betti numbers of the real toric variety of type {}{}\n\n{}",
            table.family,
            table.n,
            md_betti_table(table.n, &table.betti, &table.euler_char)
        ),
        Format::Json => {
            // Written by hand so large values stay exact JSON integers.
            format!(
                "{{\"family\":\"{}\",\"n\":{},\"betti\":[{}],\"euler_char\":{}}}\n",
                table.family,
                table.n,
                join(&table.betti, ","),
                table.euler_char
            )
        }
    }
}

fn torsion_text(factors: &[BigInt]) -> String {
    factors.iter().map(|f| format!("Z/{f}")).collect::<Vec<_>>().join(" + ")
}

pub fn render_report(report: &BettiReport, format: Format) -> Result<String> {
    let mut out = String::new();
    match format {
        Format::Json => {
            out = report.to_json()?;
            out.push('\n');
        }
        Format::Csv => {
            writeln!(out, "{}", join(&report.betti, ",")).unwrap();
            writeln!(out, "chi={}", report.euler_char).unwrap();
            writeln!(out, "S,degree,rank").unwrap();
            for e in &report.per_subset {
                for (d, r) in e.betti.nonzero() {
                    writeln!(out, "{},{d},{r}", csv_field(&e.subset.to_string())).unwrap();
                }
            }
        }
        Format::Md => {
            writeln!(
                out,
                "Betti numbers of the real toric variety of type {}{} over {} ({} strategy)\n",
                report.family, report.n, report.coefficients, report.strategy
            )
            .unwrap();
            out.push_str(&md_betti_table(report.n, &report.betti, report.euler_char));
            writeln!(out, "\n| S | reduced cohomology of K_S |\n|---|---|").unwrap();
            for e in &report.per_subset {
                writeln!(out, "| {} | {} |", e.subset, e.betti).unwrap();
            }
            if report.coefficients.is_field() {
                return Ok(out);
            }
            if report.torsion.is_empty() {
                writeln!(out, "\ntorsion: none").unwrap();
            } else {
                writeln!(out, "\n| S | degree | torsion |\n|---|---|---|").unwrap();
                for t in &report.torsion {
                    writeln!(out, "| {} | {} | {} |", t.subset, t.degree, torsion_text(&t.factors)).unwrap();
                }
            }
        }
    }
    Ok(out)
}

pub fn render_verification(report: &VerificationReport, format: Format) -> Result<String> {
    let verdict = |p: bool| if p { "PASS" } else { "FAIL" };
    let mut out = String::new();
    match format {
        Format::Json => {
            let mut value = serde_json::to_value(report)?;
            value["overall"] = serde_json::Value::Bool(report.overall());
            out = serde_json::to_string_pretty(&value)?;
            out.push('\n');
        }
        Format::Csv => {
            writeln!(out, "check,expected,actual,pass").unwrap();
            for c in &report.checks {
                writeln!(
                    out,
                    "{},{},{},{}",
                    csv_field(&c.name),
                    csv_field(&c.expected),
                    csv_field(&c.actual),
                    c.pass
                )
                .unwrap();
            }
        }
        Format::Md => {
            writeln!(out, "Verification of type {}{} ({} level)\n", report.family, report.n, report.level).unwrap();
            writeln!(out, "| check | expected | actual | result |\n|---|---|---|---|").unwrap();
            for c in &report.checks {
                writeln!(out, "| {} | {} | {} | {} |", c.name, c.expected, c.actual, verdict(c.pass)).unwrap();
            }
            writeln!(out, "\noverall: {}", verdict(report.overall())).unwrap();
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::closed_form_table;
    use crate::Family;

    #[test]
    fn formula_formats() {
        let t = closed_form_table(Family::C, 3).unwrap();
        assert_eq!(render_formula(&t, Format::Csv), "1,13,12\nchi=0\n");
        let md = render_formula(&t, Format::Md);
        assert!(md.contains("| n | β^0 | β^1 | β^2 | χ |"));
        assert!(md.contains("| 3 | 1 | 13 | 12 | 0 |"));
        let json: serde_json::Value = serde_json::from_str(&render_formula(&t, Format::Json)).unwrap();
        assert_eq!(json["betti"], serde_json::json!([1, 13, 12]));
    }

    #[test]
    fn csv_quoting() {
        assert_eq!(csv_field("{1,2}"), "\"{1,2}\"");
        assert_eq!(csv_field("plain"), "plain");
        assert_eq!(csv_field("a\"b,"), "\"a\"\"b,\"");
    }
}
