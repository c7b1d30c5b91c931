//! Built-in deterministic coloring oracles over R^d, and the planar sampler.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::ColorId;

/// The color-alternating strip/slab coloring: `floor(last/h) mod 2`, the mod
/// taken nonnegative. Strips are half-open `[jh, (j+1)h)`.
pub fn strip_color(point: &[f64], h: f64) -> ColorId {
    let last = *point.last().expect("nonempty point");
    let idx = (last / h).floor() as i64;
    idx.rem_euclid(2) as ColorId
}

/// Deterministic point-coloring oracles. Same point, same color.
#[derive(Debug, Clone, PartialEq)]
pub enum ColoringOracle {
    /// Alternating strips of height `h` orthogonal to the last axis (planar).
    Strip { h: f64 },
    /// Alternating slabs of height `h` orthogonal to the last axis (spatial).
    Slab { h: f64 },
    /// Spherical shells: `floor(alpha·‖p‖₂) mod q`. A parameterized family;
    /// no parameter set is claimed to avoid any particular configuration.
    Shell { alpha: f64, q: u64 },
    /// Constant color.
    Table { color: ColorId },
    /// Color by one coordinate's floor value (injective over the integers).
    Factor { axis: usize },
    /// Parity of the sum of coordinate floors.
    Parity,
}

impl ColoringOracle {
    pub fn color(&self, point: &[f64]) -> ColorId {
        match *self {
            ColoringOracle::Strip { h } | ColoringOracle::Slab { h } => strip_color(point, h),
            ColoringOracle::Shell { alpha, q } => {
                let r = point.iter().map(|x| x * x).sum::<f64>().sqrt();
                ((alpha * r).floor() as i64).rem_euclid(q.max(1) as i64) as ColorId
            }
            ColoringOracle::Table { color } => color,
            ColoringOracle::Factor { axis } => {
                let v = point[axis].floor() as i64;
                // Zigzag so negative floors get their own colors.
                if v >= 0 { (2 * v) as ColorId } else { (-2 * v - 1) as ColorId }
            }
            ColoringOracle::Parity => {
                let s: i64 = point.iter().map(|x| x.floor() as i64).sum();
                s.rem_euclid(2) as ColorId
            }
        }
    }

    /// Parse a CLI oracle spec such as `strip:h=0.8660254` or `shell:alpha=2,q=3`.
    pub fn parse(spec: &str) -> Result<Self, Error> {
        let (kind, params) = match spec.split_once(':') {
            Some((k, p)) => (k, p),
            None => (spec, ""),
        };
        let mut h: Option<f64> = None;
        let mut alpha: Option<f64> = None;
        let mut q: Option<u64> = None;
        let mut color: Option<ColorId> = None;
        let mut axis: Option<usize> = None;
        for kv in params.split(',').filter(|s| !s.is_empty()) {
            let (key, value) = kv
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("bad oracle parameter `{kv}`")))?;
            let parse_err = || Error::Parse(format!("bad oracle parameter value `{kv}`"));
            match key {
                "h" => h = Some(value.parse().map_err(|_| parse_err())?),
                "alpha" => alpha = Some(value.parse().map_err(|_| parse_err())?),
                "q" => q = Some(value.parse().map_err(|_| parse_err())?),
                "color" => color = Some(value.parse().map_err(|_| parse_err())?),
                "axis" => axis = Some(value.parse().map_err(|_| parse_err())?),
                _ => return Err(Error::Parse(format!("unknown oracle parameter `{key}`"))),
            }
        }
        let need = |opt: Option<f64>, name: &str| {
            opt.ok_or_else(|| Error::Parse(format!("oracle `{kind}` needs `{name}`")))
        };
        match kind {
            "strip" => {
                let h = need(h, "h")?;
                if h <= 0.0 {
                    return Err(Error::Parse("strip height must be positive".into()));
                }
                Ok(ColoringOracle::Strip { h })
            }
            "slab" => {
                let h = need(h, "h")?;
                if h <= 0.0 {
                    return Err(Error::Parse("slab height must be positive".into()));
                }
                Ok(ColoringOracle::Slab { h })
            }
            "shell" => Ok(ColoringOracle::Shell {
                alpha: need(alpha, "alpha")?,
                q: q.ok_or_else(|| Error::Parse("oracle `shell` needs `q`".into()))?,
            }),
            "table" => Ok(ColoringOracle::Table { color: color.unwrap_or(0) }),
            "factor" => Ok(ColoringOracle::Factor { axis: axis.unwrap_or(0) }),
            "parity" => Ok(ColoringOracle::Parity),
            _ => Err(Error::Parse(format!("unknown oracle kind `{kind}`"))),
        }
    }
}

/// A monochromatic placement found by the planar sampler.
#[derive(Debug, Clone)]
pub struct PlanarViolation {
    pub points: Vec<[f64; 2]>,
    pub color: ColorId,
    pub trial: u64,
}

/// Sample random rigid placements (rotation + translation inside the box
/// `[-span, span]²`) of the 2D pattern and report the first placement all of
/// whose points share a color under the oracle. `None` means no violation was
/// found in `trials` samples; that is evidence, not a proof.
pub fn sample_verify_planar(
    oracle: &ColoringOracle,
    pattern: &[[f64; 2]],
    trials: u64,
    seed: u64,
    span: f64,
) -> Option<PlanarViolation> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..trials {
        let theta = rng.random_range(0.0..std::f64::consts::TAU);
        let (sin, cos) = theta.sin_cos();
        let tx = rng.random_range(-span..span);
        let ty = rng.random_range(-span..span);
        let placed: Vec<[f64; 2]> = pattern
            .iter()
            .map(|&[x, y]| [cos * x - sin * y + tx, sin * x + cos * y + ty])
            .collect();
        let mut colors = placed.iter().map(|p| oracle.color(p));
        let first = match colors.next() {
            Some(c) => c,
            None => return None,
        };
        if colors.all(|c| c == first) {
            return Some(PlanarViolation { points: placed, color: first, trial });
        }
    }
    None
}

/// Vertices of the unit equilateral triangle, a convenient sampler pattern.
pub fn unit_equilateral() -> [[f64; 2]; 3] {
    [[0.0, 0.0], [1.0, 0.0], [0.5, 3f64.sqrt() / 2.0]]
}

#[cfg(test)]
mod tests {
    use super::*;

    const H: f64 = 0.866_025_403_784_438_6; // √3/2

    #[test]
    fn strip_examples() {
        assert_eq!(strip_color(&[0.0, 0.0], H), 0);
        assert_eq!(strip_color(&[0.0, 0.9], H), 1); // 0.9/h ≈ 1.039
        assert_eq!(strip_color(&[0.0, -0.1], H), 1); // floor(-0.115) = -1
    }

    #[test]
    fn oracle_parsing() {
        assert_eq!(
            ColoringOracle::parse("strip:h=0.5").unwrap(),
            ColoringOracle::Strip { h: 0.5 }
        );
        assert_eq!(
            ColoringOracle::parse("shell:alpha=2,q=3").unwrap(),
            ColoringOracle::Shell { alpha: 2.0, q: 3 }
        );
        assert_eq!(ColoringOracle::parse("parity").unwrap(), ColoringOracle::Parity);
        assert!(ColoringOracle::parse("strip:h=-1").is_err());
        assert!(ColoringOracle::parse("warp:x=1").is_err());
    }

    #[test]
    fn strips_do_not_monochromatize_unit_triangles() {
        let oracle = ColoringOracle::Strip { h: H };
        let tri = unit_equilateral();
        assert!(sample_verify_planar(&oracle, &tri, 20_000, 7, 10.0).is_none());
    }

    #[test]
    fn strips_do_monochromatize_unit_segments() {
        let oracle = ColoringOracle::Strip { h: H };
        let seg = [[0.0, 0.0], [1.0, 0.0]];
        let hit = sample_verify_planar(&oracle, &seg, 100_000, 7, 10.0)
            .expect("horizontal-ish unit segments inside one strip exist");
        let c0 = oracle.color(&hit.points[0]);
        let c1 = oracle.color(&hit.points[1]);
        assert_eq!(c0, c1);
    }

    #[test]
    fn constant_table_violates_immediately() {
        let oracle = ColoringOracle::Table { color: 3 };
        let seg = [[0.0, 0.0], [1.0, 0.0]];
        let hit = sample_verify_planar(&oracle, &seg, 10, 0, 10.0).unwrap();
        assert_eq!(hit.trial, 0);
        assert_eq!(hit.color, 3);
    }
}
