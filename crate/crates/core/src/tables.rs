//! Text, CSV and JSON renderings of the coefficient tables, and their parsers.

use std::fmt::Write;
use std::str::FromStr;

use crate::classes::{representation_system, IsoClassRecord};
use crate::dedekind::{bmm5_gamma, bmm5_nu, bmm6_mu, table7, Coefficients, GammaCell, QSplit};
use crate::error::{Error, Result};
use crate::pointset::PointSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Text,
    Csv,
    Json,
}

impl FromStr for TableFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<TableFormat> {
        match s {
            "text" => Ok(TableFormat::Text),
            "csv" => Ok(TableFormat::Csv),
            "json" => Ok(TableFormat::Json),
            other => Err(Error::Unsupported(format!("format `{other}`"))),
        }
    }
}

/// Which table a CSV document holds; CSV carries no tag of its own.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKind {
    Nu,
    Gamma,
    Mu,
    Iso,
}

impl FromStr for TableKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<TableKind> {
        match s {
            "nu" => Ok(TableKind::Nu),
            "gamma" => Ok(TableKind::Gamma),
            "mu" => Ok(TableKind::Mu),
            "iso" => Ok(TableKind::Iso),
            other => Err(Error::Unsupported(format!("table `{other}`"))),
        }
    }
}

impl TableKind {
    pub fn name(self) -> &'static str {
        match self {
            TableKind::Nu => "nu",
            TableKind::Gamma => "gamma",
            TableKind::Mu => "mu",
            TableKind::Iso => "iso",
        }
    }
}

/// Computes the table from scratch.
pub fn compute_table(kind: TableKind) -> Result<Coefficients> {
    Ok(match kind {
        TableKind::Nu => bmm5_nu()?.coefficients,
        TableKind::Gamma => bmm5_gamma()?.coefficients,
        TableKind::Mu => bmm6_mu()?.coefficients,
        TableKind::Iso => {
            let split = QSplit::new()?;
            let system = representation_system(&split.q23)?;
            Coefficients::Classes(table7(&split, &system.r0)?.0)
        }
    })
}

const GAMMA_HEADER: &str = "j,c,a,gamma";
const ISO_HEADER: &str = "type,iota,delta,t,sigma,down_count,inner_sum,representative";

pub fn render(table: &Coefficients, format: TableFormat) -> Result<String> {
    match format {
        TableFormat::Csv => Ok(to_csv(table)),
        TableFormat::Json => {
            let mut s = serde_json::to_string_pretty(table)
                .map_err(|e| Error::Unsupported(e.to_string()))?;
            s.push('\n');
            Ok(s)
        }
        TableFormat::Text => Ok(to_text(table)),
    }
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(T::to_string).unwrap_or_default()
}

pub fn to_csv(table: &Coefficients) -> String {
    let mut out = String::new();
    match table {
        Coefficients::None => {}
        Coefficients::Nu(nu) => {
            writeln!(out, "{}", join(nu)).unwrap();
        }
        Coefficients::Gamma(cells) => {
            writeln!(out, "{GAMMA_HEADER}").unwrap();
            for c in cells {
                writeln!(out, "{},{},{},{}", c.j, c.c, c.a, c.count).unwrap();
            }
        }
        Coefficients::Mu(grid) => {
            for row in grid {
                writeln!(out, "{}", join(row)).unwrap();
            }
        }
        Coefficients::Classes(rows) => {
            writeln!(out, "{ISO_HEADER}").unwrap();
            for r in rows {
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},{}",
                    r.code,
                    r.iota,
                    r.delta,
                    opt(&r.t),
                    opt(&r.sigma),
                    opt(&r.down_count),
                    opt(&r.inner_sum),
                    r.representative.bits()
                )
                .unwrap();
            }
        }
    }
    out
}

fn join(values: &[u64]) -> String {
    values
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn to_text(table: &Coefficients) -> String {
    let mut out = String::new();
    match table {
        Coefficients::None => {}
        Coefficients::Nu(nu) => {
            for (i, v) in nu.iter().enumerate() {
                writeln!(out, "nu[{i:>2}] = {v}").unwrap();
            }
        }
        Coefficients::Gamma(cells) => {
            writeln!(out, " j  c  a  gamma").unwrap();
            for c in cells {
                writeln!(out, "{:>2} {:>2} {:>2} {:>6}", c.j, c.c, c.a, c.count).unwrap();
            }
        }
        Coefficients::Mu(grid) => {
            write!(out, "i\\j").unwrap();
            for j in 0..grid.first().map_or(0, Vec::len) {
                write!(out, " {j:>6}").unwrap();
            }
            out.push('\n');
            for (i, row) in grid.iter().enumerate() {
                write!(out, "{i:>3}").unwrap();
                for v in row {
                    if *v == 0 {
                        write!(out, " {:>6}", ".").unwrap();
                    } else {
                        write!(out, " {v:>6}").unwrap();
                    }
                }
                out.push('\n');
            }
        }
        Coefficients::Classes(rows) => {
            writeln!(
                out,
                "{:<8} {:>4} {:>5} {:>3} {:>6} {:>6} {:>8}",
                "type", "iota", "delta", "t", "sigma", "#down", "inner"
            )
            .unwrap();
            for r in rows {
                writeln!(
                    out,
                    "{:<8} {:>4} {:>5} {:>3} {:>6} {:>6} {:>8}",
                    r.code,
                    r.iota,
                    r.delta,
                    opt(&r.t),
                    opt(&r.sigma),
                    opt(&r.down_count),
                    opt(&r.inner_sum)
                )
                .unwrap();
            }
        }
    }
    out
}

fn bad(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn field<T: FromStr>(line: usize, tok: &str) -> Result<T> {
    tok.trim()
        .parse()
        .map_err(|_| bad(line, format!("bad field `{tok}`")))
}

fn opt_field<T: FromStr>(line: usize, tok: &str) -> Result<Option<T>> {
    if tok.trim().is_empty() {
        Ok(None)
    } else {
        field(line, tok).map(Some)
    }
}

fn numbers(line: usize, text: &str) -> Result<Vec<u64>> {
    text.split(',').map(|t| field(line, t)).collect()
}

/// Numbered non-blank lines.
fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn expect_header<'a>(it: &mut impl Iterator<Item = (usize, &'a str)>, header: &str) -> Result<()> {
    match it.next() {
        Some((_, h)) if h == header => Ok(()),
        Some((line, _)) => Err(bad(line, format!("expected header `{header}`"))),
        None => Err(bad(0, "empty input")),
    }
}

pub fn parse_csv(kind: TableKind, text: &str) -> Result<Coefficients> {
    let mut it = lines(text);
    match kind {
        TableKind::Nu => {
            let (line, row) = it.next().ok_or_else(|| bad(0, "empty input"))?;
            let nu = numbers(line, row)?;
            if let Some((line, _)) = it.next() {
                return Err(bad(line, "expected a single row"));
            }
            Ok(Coefficients::Nu(nu))
        }
        TableKind::Gamma => {
            expect_header(&mut it, GAMMA_HEADER)?;
            let mut cells = Vec::new();
            for (line, row) in it {
                let v = numbers(line, row)?;
                if v.len() != 4 {
                    return Err(bad(line, "expected 4 fields"));
                }
                cells.push(GammaCell {
                    j: v[0] as usize,
                    c: v[1] as usize,
                    a: v[2] as usize,
                    count: v[3],
                });
            }
            Ok(Coefficients::Gamma(cells))
        }
        TableKind::Mu => {
            let mut grid = Vec::new();
            for (line, row) in it {
                let v = numbers(line, row)?;
                if grid.first().is_some_and(|r: &Vec<u64>| r.len() != v.len()) {
                    return Err(bad(line, "ragged grid"));
                }
                grid.push(v);
            }
            Ok(Coefficients::Mu(grid))
        }
        TableKind::Iso => {
            expect_header(&mut it, ISO_HEADER)?;
            let mut rows = Vec::new();
            for (line, row) in it {
                let f: Vec<&str> = row.split(',').collect();
                if f.len() != 8 {
                    return Err(bad(line, "expected 8 fields"));
                }
                let code = f[0].trim().to_string();
                let upper_points = code
                    .split('-')
                    .next()
                    .and_then(|u| u.parse().ok())
                    .ok_or_else(|| bad(line, format!("bad type code `{code}`")))?;
                rows.push(IsoClassRecord {
                    code,
                    representative: PointSet(field(line, f[7])?),
                    upper_points,
                    iota: field(line, f[1])?,
                    delta: field(line, f[2])?,
                    t: opt_field(line, f[3])?,
                    sigma: opt_field(line, f[4])?,
                    down_count: opt_field(line, f[5])?,
                    inner_sum: opt_field(line, f[6])?,
                });
            }
            Ok(Coefficients::Classes(rows))
        }
    }
}

pub fn parse_json(text: &str) -> Result<Coefficients> {
    serde_json::from_str(text).map_err(|e| bad(e.line(), e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::known;

    fn iso_rows() -> Vec<IsoClassRecord> {
        vec![
            IsoClassRecord {
                code: "0-000".into(),
                representative: PointSet::EMPTY,
                upper_points: 0,
                iota: 1,
                delta: 10,
                t: Some(0),
                sigma: Some(32),
                down_count: Some(1),
                inner_sum: Some(173433),
            },
            IsoClassRecord {
                code: "4-440-1".into(),
                representative: PointSet(0b1011_0110),
                upper_points: 4,
                iota: 15,
                delta: 2,
                t: None,
                sigma: None,
                down_count: None,
                inner_sum: None,
            },
        ]
    }

    fn samples() -> Vec<(TableKind, Coefficients)> {
        vec![
            (TableKind::Nu, Coefficients::Nu(known::NU.to_vec())),
            (
                TableKind::Gamma,
                Coefficients::Gamma(
                    known::GAMMA
                        .iter()
                        .map(|&(j, c, a, count)| GammaCell { j, c, a, count })
                        .collect(),
                ),
            ),
            (TableKind::Mu, Coefficients::Mu(known::mu_grid())),
            (TableKind::Iso, Coefficients::Classes(iso_rows())),
        ]
    }

    #[test]
    fn csv_round_trip() {
        for (kind, table) in samples() {
            let text = to_csv(&table);
            assert_eq!(parse_csv(kind, &text).unwrap(), table);
        }
    }

    #[test]
    fn json_round_trip() {
        for (_, table) in samples() {
            let text = render(&table, TableFormat::Json).unwrap();
            assert_eq!(parse_json(&text).unwrap(), table);
        }
    }

    #[test]
    fn csv_shapes() {
        let nu = to_csv(&Coefficients::Nu(known::NU.to_vec()));
        assert_eq!(nu, "388,290,195,70,40,30,0,10,0,0,1\n");
        let mu = to_csv(&Coefficients::Mu(known::mu_grid()));
        assert_eq!(mu.lines().count(), 16);
        assert!(mu.lines().all(|l| l.split(',').count() == 16));
        let gamma = to_csv(&samples()[1].1);
        assert_eq!(gamma.lines().next(), Some("j,c,a,gamma"));
        assert_eq!(gamma.lines().count(), 25);
    }

    #[test]
    fn malformed_csv_is_rejected() {
        assert!(matches!(
            parse_csv(TableKind::Gamma, "j,c,a,gamma\n1,2,x,4\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_csv(TableKind::Mu, "1,2\n3\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(parse_json("{\"kind\":\"nu\"").is_err());
    }
}
