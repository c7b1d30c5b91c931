//! Coloring file formats.
//!
//! Cell coloring (free-form labels):
//! ```text
//! coloring <space-id>
//! <cell-label> <color-id>
//! ```
//!
//! Grid coloring over `[k]^n` (1-based coordinates):
//! ```text
//! grid <k> <n>
//! <i1,…,in> <color-id>
//! ```

use crate::coloring::Coloring;
use crate::error::Error;
use crate::ColorId;

pub fn parse_cell_coloring(text: &str) -> Result<(String, Coloring<String>), Error> {
    let mut space_id: Option<String> = None;
    let mut coloring = Coloring::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| Error::Parse(format!("line {}: {msg}", lineno + 1));
        let mut fields = line.split_whitespace();
        if space_id.is_none() {
            if fields.next() != Some("coloring") {
                return Err(err("expected header `coloring <space-id>`".into()));
            }
            let id = fields.next().ok_or_else(|| err("missing space id".into()))?;
            space_id = Some(id.to_string());
            continue;
        }
        let cell = fields.next().unwrap().to_string();
        let color: ColorId = fields
            .next()
            .and_then(|c| c.parse().ok())
            .ok_or_else(|| err(format!("bad color for cell `{cell}`")))?;
        if coloring.contains(&cell) {
            return Err(err(format!("cell `{cell}` colored twice")));
        }
        coloring.set(cell, color);
    }
    match space_id {
        Some(id) => Ok((id, coloring)),
        None => Err(Error::Parse("empty coloring file".into())),
    }
}

pub fn write_cell_coloring(space_id: &str, coloring: &Coloring<String>) -> String {
    let mut out = format!("coloring {space_id}\n");
    for (cell, color) in coloring.iter() {
        out.push_str(&format!("{cell} {color}\n"));
    }
    out
}

pub fn parse_grid_coloring(text: &str) -> Result<(u16, usize, Coloring<Vec<u16>>), Error> {
    let mut header: Option<(u16, usize)> = None;
    let mut coloring = Coloring::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| Error::Parse(format!("line {}: {msg}", lineno + 1));
        let mut fields = line.split_whitespace();
        if header.is_none() {
            if fields.next() != Some("grid") {
                return Err(err("expected header `grid <k> <n>`".into()));
            }
            let k: u16 = fields
                .next()
                .and_then(|v| v.parse().ok())
                .filter(|&k| k >= 1)
                .ok_or_else(|| err("bad k".into()))?;
            let n: usize = fields
                .next()
                .and_then(|v| v.parse().ok())
                .filter(|&n| n >= 1)
                .ok_or_else(|| err("bad n".into()))?;
            header = Some((k, n));
            continue;
        }
        let (k, n) = header.unwrap();
        let cell_text = fields.next().unwrap();
        let cell = parse_cell(cell_text).map_err(|e| err(e.to_string()))?;
        if cell.len() != n {
            return Err(err(format!("cell `{cell_text}` has arity {}, expected {n}", cell.len())));
        }
        if cell.iter().any(|&v| v < 1 || v > k) {
            return Err(err(format!("cell `{cell_text}` has a value outside [1,{k}]")));
        }
        let color: ColorId = fields
            .next()
            .and_then(|c| c.parse().ok())
            .ok_or_else(|| err(format!("bad color for cell `{cell_text}`")))?;
        if coloring.contains(&cell) {
            return Err(err(format!("cell `{cell_text}` colored twice")));
        }
        coloring.set(cell, color);
    }
    match header {
        Some((k, n)) => Ok((k, n, coloring)),
        None => Err(Error::Parse("empty grid coloring file".into())),
    }
}

pub fn write_grid_coloring(k: u16, n: usize, coloring: &Coloring<Vec<u16>>) -> String {
    let mut out = format!("grid {k} {n}\n");
    for (cell, color) in coloring.iter() {
        out.push_str(&format!("{} {color}\n", fmt_cell(cell)));
    }
    out
}

/// Parse `i1,…,in` into a cell tuple.
pub fn parse_cell(text: &str) -> Result<Vec<u16>, Error> {
    text.split(',')
        .map(|v| {
            v.trim()
                .parse::<u16>()
                .map_err(|_| Error::Parse(format!("bad cell coordinate `{v}`")))
        })
        .collect()
}

pub fn fmt_cell(cell: &[u16]) -> String {
    cell.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => line[..i].trim(),
        None => line.trim(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cell_coloring_round_trip() {
        let text = "coloring 2,2\n1,1 0\n1,2 0\n2,1 1\n2,2 1\n";
        let (id, coloring) = parse_cell_coloring(text).unwrap();
        assert_eq!(id, "2,2");
        assert_eq!(coloring.len(), 4);
        assert_eq!(coloring.palette_size(), 2);
        let back = write_cell_coloring(&id, &coloring);
        assert_eq!(parse_cell_coloring(&back).unwrap().1, coloring);
    }

    #[test]
    fn grid_coloring_validates_range() {
        assert!(parse_grid_coloring("grid 2 2\n3,1 0\n").is_err());
        assert!(parse_grid_coloring("grid 2 2\n1,1 0\n1,1 1\n").is_err());
        let (k, n, c) = parse_grid_coloring("grid 3 1\n1 0\n2 0\n3 1\n").unwrap();
        assert_eq!((k, n), (3, 1));
        assert_eq!(c.color(&vec![2]).unwrap(), 0);
    }
}
