//! Search kernels and exact geometry for monochromatic-or-rainbow ("MR")
//! experiments on finite structures.
//!
//! The crate is organized around a small set of desk-scale engines:
//!
//! * [`geom`] — norms, finite point configurations, and exact isometric-copy
//!   detection (rational arithmetic in all correctness paths).
//! * [`coloring`] — colorings as partitions, copy classification, and the
//!   built-in planar/spatial coloring oracles.
//! * [`hj`] — combinatorial lines and subspaces of `[k]^n`, coordinatewise
//!   colorings, canonical-pattern detection, and exhaustive searches.
//! * [`triangle`] — the floating-point R³ machinery: good pairs, sphere–sphere
//!   intersection circles, pair extension, and orbit exploration.
//! * [`cube`] — Cartesian powers of simplices: randomized rainbow-box search,
//!   layered pigeonhole search, and the bound recursions.
//! * [`maxnorm`] — the ℓ∞ embedding pipeline: densification, the index
//!   bijection, and monochromatic/rainbow witness construction.
//! * [`arrow`] — exact and heuristic arrow decisions on clique products.
//! * [`verify`] — the independent revalidation path used for every witness.
//!
//! Geometry is generic over the scalar type via [`Scalar`]; the concrete
//! instantiations used throughout are [`Rat`] (exact) and `f64` (sampled
//! float paths, absolute tolerance 1e-9).

pub mod arrow;
pub mod coloring;
pub mod cube;
pub mod error;
pub mod geom;
pub mod hj;
pub mod maxnorm;
pub mod scalar;
pub mod space;
pub mod triangle;
pub mod verify;

pub use error::Error;
pub use scalar::Scalar;

/// Exact rational scalar used on all correctness paths.
pub type Rat = num_rational::BigRational;

/// A point with exact rational coordinates.
pub type RatPoint = geom::Point<Rat>;

/// A point configuration with exact rational coordinates.
pub type RatConfig = geom::PointConfig<Rat>;

/// A point configuration with float coordinates (tolerance 1e-9).
pub type FloatConfig = geom::PointConfig<f64>;

/// Color identifiers are opaque nonnegative integers; the number of colors
/// in play is never bounded a priori.
pub type ColorId = u64;

/// Absolute tolerance for float-valued geometry.
pub const FLOAT_TOL: f64 = 1e-9;

/// Default cell cap for exhaustive partition searches over `[k]^n`.
pub const DEFAULT_HJ_CAP: usize = 16;

/// Default cell caps for exact arrow decisions.
pub const DEFAULT_ARROW_CAP_UNBOUNDED: usize = 12;
pub const DEFAULT_ARROW_CAP_FIXED: usize = 16;

/// Parse an exact rational from `p/q`, decimal, or integer notation.
pub fn parse_rat(s: &str) -> Result<Rat, Error> {
    use num_bigint::BigInt;
    use num_traits::Pow;
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q == BigInt::from(0) {
            return Err(bad());
        }
        return Ok(Rat::new(p, q));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let neg = int.trim_start().starts_with('-');
        let int: BigInt = if int.is_empty() || int == "-" {
            BigInt::from(0)
        } else {
            int.parse().map_err(|_| bad())?
        };
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let digits: BigInt = frac.parse().map_err(|_| bad())?;
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let frac_part = Rat::new(digits, scale);
        let int_part = Rat::from_integer(int);
        return Ok(if neg { int_part - frac_part } else { int_part + frac_part });
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(Rat::from_integer(n))
}

/// Render a rational as an integer when possible, `p/q` otherwise.
pub fn fmt_rat(r: &Rat) -> String {
    use num_traits::One;
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_rat_forms() {
        assert_eq!(parse_rat("3").unwrap(), Rat::from_integer(3.into()));
        assert_eq!(parse_rat("-2/4").unwrap(), Rat::new((-1).into(), 2.into()));
        assert_eq!(parse_rat("0.5").unwrap(), Rat::new(1.into(), 2.into()));
        assert_eq!(parse_rat("-1.25").unwrap(), Rat::new((-5).into(), 4.into()));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("abc").is_err());
    }

    #[test]
    fn fmt_rat_integer_collapse() {
        assert_eq!(fmt_rat(&parse_rat("8/2").unwrap()), "4");
        assert_eq!(fmt_rat(&parse_rat("23").unwrap()), "23");
        assert_eq!(fmt_rat(&parse_rat("1/3").unwrap()), "1/3");
    }
}
