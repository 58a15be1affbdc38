//! Line-based text format for Coxeter complexes.
//!
//! ```text
//! C 3 26 48
//! 1
//! 2
//! ...            one base-3 vertex code per line
//! 0 3 12
//! ...            one facet per line, space-separated vertex indices
//! ```

use std::fmt::Write as _;

use super::coxeter::{is_vertex, CoxeterComplex};
use super::signed::SignedSubset;
use super::simplicial::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::Family;

pub fn write_complex(k: &CoxeterComplex) -> String {
    let c = k.complex();
    let mut out = String::new();
    writeln!(out, "{}", k.header()).unwrap();
    for label in c.labels() {
        writeln!(out, "{}", label.code()).unwrap();
    }
    for f in c.facets() {
        let line: Vec<String> = f.iter().map(|v| v.to_string()).collect();
        writeln!(out, "{}", line.join(" ")).unwrap();
    }
    out
}

pub fn read_complex(text: &str) -> Result<CoxeterComplex> {
    let bad = |reason: String| Error::Cache {
        path: "<complex>".into(),
        reason,
    };
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| bad("missing header".into()))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 4 {
        return Err(bad(format!("header `{header}` needs 4 fields")));
    }
    let family: Family = fields[0].parse()?;
    let parse = |s: &str| s.parse::<usize>().map_err(|e| bad(format!("`{s}`: {e}")));
    let (n, vcount, fcount) = (parse(fields[1])?, parse(fields[2])?, parse(fields[3])?);
    family.require_complex(n)?;
    let mut labels = Vec::with_capacity(vcount);
    for _ in 0..vcount {
        let line = lines.next().ok_or_else(|| bad("truncated vertex list".into()))?;
        let code: u64 = line.trim().parse().map_err(|e| bad(format!("vertex `{line}`: {e}")))?;
        let label = SignedSubset::from_code(code);
        if !is_vertex(family, n, label) {
            return Err(bad(format!("code {code} is not a vertex of {family}{n}")));
        }
        labels.push(label);
    }
    if labels.windows(2).any(|w| w[0] >= w[1]) {
        return Err(bad("vertex codes not strictly ascending".into()));
    }
    let mut facets: Vec<Face> = Vec::with_capacity(fcount);
    for _ in 0..fcount {
        let line = lines.next().ok_or_else(|| bad("truncated facet list".into()))?;
        let face = line
            .split_whitespace()
            .map(|t| t.parse::<u32>().map_err(|e| bad(format!("facet `{line}`: {e}"))))
            .collect::<Result<Face>>()?;
        facets.push(face);
    }
    if lines.any(|l| !l.trim().is_empty()) {
        return Err(bad("trailing data".into()));
    }
    let complex = SimplicialComplex::new(labels, facets)?;
    if complex.facets().len() != fcount {
        return Err(bad("facet list is not an antichain".into()));
    }
    Ok(CoxeterComplex::from_parts(family, n, complex))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::build_coxeter_complex;

    #[test]
    fn round_trip() {
        let k = build_coxeter_complex(Family::D, 4).unwrap();
        let text = write_complex(&k);
        assert!(text.starts_with("D 4 48 192\n"));
        let back = read_complex(&text).unwrap();
        assert_eq!(back.complex(), k.complex());
    }

    #[test]
    fn rejects_corruption() {
        let k = build_coxeter_complex(Family::C, 3).unwrap();
        let text = write_complex(&k);
        assert!(read_complex(&text.replacen("C 3 26 48", "C 3 26 49", 1)).is_err());
        assert!(read_complex("C 3 1 1\n13\n0\n").is_ok_and(|k| k.complex().num_vertices() == 1));
        assert!(read_complex("C 3 1 1\n0\n0\n").is_err());
        assert!(read_complex("").is_err());
    }
}
