//! CSV tables: a header row, then one row per universe element whose first
//! cell is the element label. Columns are attributes or covering members.

use std::fs;
use std::path::Path;

use fuzzycover::topsis::DecisionProblem;
use fuzzycover::{Error as CoreError, FuzzyCovering, FuzzySet, Universe};

use crate::error::{CliError, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
    /// Row-major values, one row per element.
    pub rows: Vec<Vec<f64>>,
}

pub fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn parse_err(line: u64, col: usize, message: impl Into<String>) -> CliError {
    CliError::Parse {
        line,
        col,
        message: message.into(),
    }
}

pub fn parse_table(text: &str) -> Result<Table> {
    if text.trim().is_empty() {
        return Err(parse_err(1, 1, "empty input"));
    }
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let header = rdr.headers().map_err(|e| csv_err(&e))?.clone();
    if header.len() < 2 {
        return Err(parse_err(
            1,
            header.len() + 1,
            "expected an id column and at least one value column",
        ));
    }
    let col_labels: Vec<String> = header.iter().skip(1).map(str::to_owned).collect();
    let mut row_labels = Vec::new();
    let mut rows = Vec::new();
    for rec in rdr.records() {
        let rec = rec.map_err(|e| csv_err(&e))?;
        let line = rec.position().map_or(0, |p| p.line());
        row_labels.push(rec[0].to_owned());
        let mut row = Vec::with_capacity(col_labels.len());
        for (c, cell) in rec.iter().enumerate().skip(1) {
            let v: f64 = cell
                .parse()
                .map_err(|_| parse_err(line, c + 1, format!("{cell:?} is not a number")))?;
            if !(0.0..=1.0).contains(&v) {
                return Err(CliError::Range {
                    line,
                    col: c + 1,
                    value: v,
                });
            }
            row.push(v);
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(parse_err(2, 1, "no data rows"));
    }
    Ok(Table {
        row_labels,
        col_labels,
        rows,
    })
}

fn csv_err(e: &csv::Error) -> CliError {
    let line = e.position().map_or(1, |p| p.line());
    match e.kind() {
        csv::ErrorKind::UnequalLengths {
            expected_len, len, ..
        } => parse_err(
            line,
            (*len as usize).min(*expected_len as usize) + 1,
            format!("expected {expected_len} fields, found {len}"),
        ),
        _ => parse_err(line, 1, e.to_string()),
    }
}

impl Table {
    pub fn read(path: &Path) -> Result<Self> {
        parse_table(&read_text(path)?)
    }

    /// Column `s` as a fuzzy set over the rows.
    pub fn column(&self, s: usize) -> FuzzySet {
        FuzzySet::new(self.rows.iter().map(|r| r[s]).collect()).expect("range checked on parse")
    }

    pub fn universe(&self) -> Result<Universe> {
        Ok(Universe::new(self.row_labels.clone())?)
    }

    /// Columns as covering members over the row elements.
    pub fn covering(&self, strict: bool) -> Result<FuzzyCovering> {
        let cols = (0..self.col_labels.len()).map(|s| self.column(s)).collect();
        let built = if strict {
            FuzzyCovering::new_strict(cols)
        } else {
            FuzzyCovering::new(cols)
        };
        built.map_err(|e| match e {
            CoreError::NotACovering(x) => CliError::NotACovering(self.row_labels[x].clone()),
            CoreError::EmptyMember(k) => {
                CliError::Config(format!("column {} is zero everywhere", self.col_labels[k]))
            }
            e => e.into(),
        })
    }

    pub fn problem(&self, strict: bool) -> Result<DecisionProblem> {
        let m = self.col_labels.len();
        Ok(DecisionProblem::new(
            self.universe()?,
            self.col_labels.clone(),
            self.covering(strict)?,
            vec![true; m],
        )?)
    }
}

pub fn parse_matrix(text: &str, strict: bool) -> Result<DecisionProblem> {
    parse_table(text)?.problem(strict)
}

pub fn read_matrix(path: &Path, strict: bool) -> Result<DecisionProblem> {
    Table::read(path)?.problem(strict)
}

/// CSV text that parses back to the same problem.
pub fn write_matrix(p: &DecisionProblem) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["alternative".to_owned()];
    header.extend(p.attribute_names().iter().cloned());
    w.write_record(&header).expect("in-memory write");
    for (t, label) in p.alternatives().labels().iter().enumerate() {
        let mut rec = vec![label.clone()];
        rec.extend((0..p.n_attributes()).map(|s| p.value(s, t).to_string()));
        w.write_record(&rec).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 output")
}

/// Comma separated values such as `0.3,0.4,0.7`.
pub fn parse_values(s: &str) -> Result<Vec<f64>> {
    s.split(',')
        .enumerate()
        .map(|(c, v)| {
            let v = v.trim();
            let x: f64 = v
                .parse()
                .map_err(|_| parse_err(1, c + 1, format!("{v:?} is not a number")))?;
            if !(0.0..=1.0).contains(&x) {
                return Err(CliError::Range {
                    line: 1,
                    col: c + 1,
                    value: x,
                });
            }
            Ok(x)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_round_trips() {
        let text = "alt,K1,K2\nx1,1,0.25\nx2,0.1,1\n";
        let p = parse_matrix(text, false).unwrap();
        assert_eq!(p.n_alternatives(), 2);
        assert_eq!(parse_matrix(&write_matrix(&p), false).unwrap(), p);
    }

    #[test]
    fn reports_positions() {
        let e = parse_table("a,K1,K2\nx1,1,abc\n").unwrap_err();
        assert!(
            matches!(
                e,
                CliError::Parse {
                    line: 2,
                    col: 3,
                    ..
                }
            ),
            "{e:?}"
        );
        let e = parse_table("a,K1,K2\nx1,1,1.2\n").unwrap_err();
        assert!(
            matches!(
                e,
                CliError::Range {
                    line: 2,
                    col: 3,
                    ..
                }
            ),
            "{e:?}"
        );
        let e = parse_table("a,K1,K2\nx1,1\n").unwrap_err();
        assert!(matches!(e, CliError::Parse { line: 2, .. }), "{e:?}");
        assert!(matches!(
            parse_table(""),
            Err(CliError::Parse {
                line: 1,
                col: 1,
                ..
            })
        ));
        let e = parse_matrix("a,K1,K2\nx1,1,0.2\nx2,0.5,0.9\n", false).unwrap_err();
        assert!(
            matches!(&e, CliError::NotACovering(x) if x == "x2"),
            "{e:?}"
        );
    }

    #[test]
    fn strict_needs_universal_member() {
        let text = "a,K1,K2\nx1,1,0.2\nx2,0.5,1\n";
        assert!(parse_matrix(text, false).is_ok());
        assert!(matches!(
            parse_matrix(text, true),
            Err(CliError::Core(CoreError::NoUniversalMember))
        ));
    }
}
