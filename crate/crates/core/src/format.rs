//! Line-oriented text formats for set systems, point sets and plug-in tables.
//!
//! Blank lines and lines starting with `#` are ignored everywhere. Errors
//! carry the 1-based line number of the offending line.

use std::fmt::Write as _;

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::harness::psi::PlugTable;
use crate::homology::CubicalSetSystem;
use crate::set_system::{PointSet, SetSystem};

pub const SETSYSTEM_HEADER: &str = "convexlab-setsystem v1";
pub const CUBICAL_HEADER: &str = "convexlab-cubical v1";
pub const TABLE_HEADER: &str = "table v1";

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_usize(line: usize, field: &str, what: &str) -> Result<usize> {
    field.parse().map_err(|_| {
        parse_err(
            line,
            format!("{what}: expected a non-negative integer, got `{field}`"),
        )
    })
}

fn parse_bitstring(line: usize, s: &str, len: usize) -> Result<Bits> {
    if s.len() != len {
        return Err(parse_err(
            line,
            format!("bitstring has length {}, expected {len}", s.len()),
        ));
    }
    let mut bits = Bits::zeros(len);
    for (j, c) in s.bytes().enumerate() {
        match c {
            b'1' => bits.insert(j),
            b'0' => {}
            _ => {
                return Err(parse_err(
                    line,
                    format!("bitstring character {j} is `{}`", c as char),
                ))
            }
        }
    }
    Ok(bits)
}

fn expect_header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    header: &str,
) -> Result<()> {
    match lines.next() {
        Some((_, l)) if l == header => Ok(()),
        Some((n, l)) => Err(parse_err(
            n,
            format!("expected header `{header}`, got `{l}`"),
        )),
        None => Err(parse_err(
            1,
            format!("empty file, expected header `{header}`"),
        )),
    }
}

/// Parses a list of `<name> <bitstring>` member lines.
fn parse_members<'a>(
    lines: impl Iterator<Item = (usize, &'a str)>,
    len: usize,
) -> Result<(Vec<Bits>, Vec<String>)> {
    let mut sets = Vec::new();
    let mut names: Vec<String> = Vec::new();
    for (n, l) in lines {
        let mut fields = l.split_whitespace();
        let (Some(name), Some(bits), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(parse_err(n, "expected `<name> <bitstring>`"));
        };
        if names.iter().any(|x| x == name) {
            return Err(parse_err(n, format!("duplicate member name `{name}`")));
        }
        sets.push(parse_bitstring(n, bits, len)?);
        names.push(name.to_string());
    }
    Ok((sets, names))
}

pub fn parse_set_system(text: &str) -> Result<SetSystem> {
    let mut lines = content_lines(text);
    expect_header(&mut lines, SETSYSTEM_HEADER)?;
    let (n, l) = lines
        .next()
        .ok_or_else(|| parse_err(2, "missing `ground <n>` line"))?;
    let ground = match l.split_whitespace().collect::<Vec<_>>()[..] {
        ["ground", g] => parse_usize(n, g, "ground")?,
        _ => return Err(parse_err(n, format!("expected `ground <n>`, got `{l}`"))),
    };
    let (sets, names) = parse_members(lines, ground)?;
    SetSystem::with_names(ground, sets, names)
}

pub fn write_set_system(system: &SetSystem) -> String {
    let mut out = format!("{SETSYSTEM_HEADER}\nground {}\n", system.ground_size());
    for (name, set) in system.names().iter().zip(system.sets()) {
        let _ = writeln!(out, "{name} {}", set.to_bitstring());
    }
    out
}

pub fn parse_cubical(text: &str) -> Result<CubicalSetSystem> {
    let mut lines = content_lines(text);
    expect_header(&mut lines, CUBICAL_HEADER)?;
    let (n, l) = lines
        .next()
        .ok_or_else(|| parse_err(2, "missing `dims` line"))?;
    let mut fields = l.split_whitespace();
    if fields.next() != Some("dims") {
        return Err(parse_err(
            n,
            format!("expected `dims <d0> <d1> [<d2>]`, got `{l}`"),
        ));
    }
    let dims = fields
        .map(|f| parse_usize(n, f, "dims"))
        .collect::<Result<Vec<_>>>()?;
    crate::homology::cubical::check_dims(&dims).map_err(|e| parse_err(n, e.to_string()))?;
    let cells = dims.iter().product();
    let (sets, names) = parse_members(lines, cells)?;
    CubicalSetSystem::with_names(dims, sets, names)
}

pub fn write_cubical(system: &CubicalSetSystem) -> String {
    let dims: Vec<String> = system.dims().iter().map(|d| d.to_string()).collect();
    let mut out = format!("{CUBICAL_HEADER}\ndims {}\n", dims.join(" "));
    for (name, set) in system.names().iter().zip(system.sets()) {
        let _ = writeln!(out, "{name} {}", set.to_bitstring());
    }
    out
}

/// Either kind of system file, dispatched on the header line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SystemFile {
    Abstract(SetSystem),
    Cubical(CubicalSetSystem),
}

impl SystemFile {
    /// The abstract view; cubical systems are flattened to their cells.
    pub fn set_system(&self) -> SetSystem {
        match self {
            SystemFile::Abstract(s) => s.clone(),
            SystemFile::Cubical(c) => c.to_set_system(),
        }
    }

    pub fn write(&self) -> String {
        match self {
            SystemFile::Abstract(s) => write_set_system(s),
            SystemFile::Cubical(c) => write_cubical(c),
        }
    }
}

pub fn parse_system_file(text: &str) -> Result<SystemFile> {
    match content_lines(text).next() {
        Some((_, CUBICAL_HEADER)) => parse_cubical(text).map(SystemFile::Cubical),
        Some((_, SETSYSTEM_HEADER)) => parse_set_system(text).map(SystemFile::Abstract),
        Some((n, l)) => Err(parse_err(
            n,
            format!("unknown header `{l}`, expected `{SETSYSTEM_HEADER}` or `{CUBICAL_HEADER}`"),
        )),
        None => Err(parse_err(1, "empty file")),
    }
}

/// Parses the first `points ...` line.
pub fn parse_points(text: &str) -> Result<PointSet> {
    let (n, l) = content_lines(text)
        .next()
        .ok_or_else(|| parse_err(1, "missing `points` line"))?;
    let mut fields = l.split_whitespace();
    if fields.next() != Some("points") {
        return Err(parse_err(
            n,
            format!("expected `points <i1> <i2> ...`, got `{l}`"),
        ));
    }
    let elements = fields
        .map(|f| parse_usize(n, f, "point"))
        .collect::<Result<Vec<_>>>()?;
    Ok(PointSet::new(elements))
}

pub fn write_points(points: &PointSet) -> String {
    let mut out = String::from("points");
    for p in points.elements() {
        let _ = write!(out, " {p}");
    }
    out.push('\n');
    out
}

pub fn parse_table(name: &str, text: &str) -> Result<PlugTable> {
    let mut lines = content_lines(text);
    expect_header(&mut lines, TABLE_HEADER)?;
    let mut entries: Vec<(u64, u64)> = Vec::new();
    for (n, l) in lines {
        let fields: Vec<&str> = l.split_whitespace().collect();
        let [k, v] = fields[..] else {
            return Err(parse_err(n, format!("expected `<key> <value>`, got `{l}`")));
        };
        let k: u64 = k
            .parse()
            .map_err(|_| parse_err(n, format!("bad key `{k}`")))?;
        let v: u64 = v
            .parse()
            .map_err(|_| parse_err(n, format!("bad value `{v}`")))?;
        if entries.last().is_some_and(|&(prev, _)| k <= prev) {
            return Err(parse_err(
                n,
                format!(
                    "keys must be strictly increasing, `{k}` follows `{}`",
                    entries.last().unwrap().0
                ),
            ));
        }
        entries.push((k, v));
    }
    PlugTable::new(name, entries)
}

pub fn write_table(table: &PlugTable) -> String {
    let mut out = format!("{TABLE_HEADER}\n");
    for (k, v) in table.entries() {
        let _ = writeln!(out, "{k} {v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_system_round_trip() {
        let s = SetSystem::from_lists(4, &[&[0, 1], &[], &[3]]).unwrap();
        let text = write_set_system(&s);
        assert_eq!(
            text,
            "convexlab-setsystem v1\nground 4\nS0 1100\nS1 0000\nS2 0001\n"
        );
        assert_eq!(parse_set_system(&text).unwrap(), s);
    }

    #[test]
    fn bad_bitstring_reports_line() {
        let err =
            parse_set_system("convexlab-setsystem v1\nground 3\nA 101\n\nB 10x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 5, .. }), "{err}");
        let err = parse_set_system("convexlab-setsystem v1\nground 3\nA 1011\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
    }

    #[test]
    fn cubical_round_trip() {
        let c = CubicalSetSystem::new(vec![2, 3], vec![Bits::from_indices(6, [0, 4])]).unwrap();
        let text = write_cubical(&c);
        assert_eq!(text, "convexlab-cubical v1\ndims 2 3\nS0 100010\n");
        assert_eq!(parse_system_file(&text).unwrap(), SystemFile::Cubical(c));
    }

    #[test]
    fn points_and_tables() {
        let p = parse_points("# comment\npoints 0 3 3\n").unwrap();
        assert_eq!(p.elements(), &[0, 3, 3]);
        assert_eq!(write_points(&p), "points 0 3 3\n");
        let t = parse_table("r", "table v1\n1 2\n2 4\n").unwrap();
        assert_eq!(write_table(&t), "table v1\n1 2\n2 4\n");
        let err = parse_table("r", "table v1\n2 4\n2 5\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
    }
}
