//! Line-based configuration file format.
//!
//! ```text
//! config <dim> <norm>          # norm ∈ {l2, linf, l1}
//! <label> <coord_1> … <coord_d>
//! ```
//!
//! Coordinates are decimals or `p/q` rationals; blank lines and `#` comments
//! are ignored.

use crate::error::Error;
use crate::geom::{Norm, Point, PointConfig};
use crate::{fmt_rat, parse_rat, Rat};

pub fn parse_config(text: &str) -> Result<PointConfig<Rat>, Error> {
    let mut cfg: Option<PointConfig<Rat>> = None;
    for (lineno, raw) in text.lines().enumerate() {
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        let mut fields = line.split_whitespace();
        if cfg.is_none() {
            let err = |msg: &str| Error::Parse(format!("line {}: {msg}", lineno + 1));
            if fields.next() != Some("config") {
                return Err(err("expected header `config <dim> <norm>`"));
            }
            let dim: usize = fields
                .next()
                .and_then(|d| d.parse().ok())
                .filter(|&d| d >= 1)
                .ok_or_else(|| err("bad dimension"))?;
            let norm = Norm::from_tag(fields.next().ok_or_else(|| err("missing norm"))?)
                .map_err(|_| err("bad norm tag"))?;
            if fields.next().is_some() {
                return Err(err("trailing fields in header"));
            }
            cfg = Some(PointConfig::new(dim, norm));
            continue;
        }
        let cfg = cfg.as_mut().unwrap();
        let label = fields.next().unwrap().to_string();
        let coords: Vec<Rat> = fields
            .map(parse_rat)
            .collect::<Result<_, _>>()
            .map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))?;
        if coords.len() != cfg.dim() {
            return Err(Error::Parse(format!(
                "line {}: point `{label}` has {} coordinates, expected {}",
                lineno + 1,
                coords.len(),
                cfg.dim()
            )));
        }
        cfg.push(label, Point::new(coords))
            .map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))?;
    }
    cfg.ok_or_else(|| Error::Parse("empty configuration file".into()))
}

pub fn write_config(cfg: &PointConfig<Rat>) -> String {
    let mut out = format!("config {} {}\n", cfg.dim(), cfg.norm().tag());
    for (label, point) in cfg.labels().iter().zip(cfg.points()) {
        out.push_str(label);
        for c in point.coords() {
            out.push(' ');
            out.push_str(&fmt_rat(c));
        }
        out.push('\n');
    }
    out
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
    fn round_trip() {
        let text = "\n# unit square corners\nconfig 2 l2\na 0 0\nb 1 0\nc 0.5 1/2\n";
        let cfg = parse_config(text).unwrap();
        assert_eq!(cfg.len(), 3);
        assert_eq!(cfg.dim(), 2);
        assert_eq!(cfg.norm(), Norm::Euclidean);
        assert_eq!(cfg.point(2).coords()[0], parse_rat("1/2").unwrap());
        let emitted = write_config(&cfg);
        let back = parse_config(&emitted).unwrap();
        assert_eq!(back.labels(), cfg.labels());
        assert_eq!(back.points(), cfg.points());
    }

    #[test]
    fn rejects_wrong_arity() {
        assert!(parse_config("config 2 l2\na 0\n").is_err());
        assert!(parse_config("config 2 lp\n").is_err());
        assert!(parse_config("").is_err());
    }
}
