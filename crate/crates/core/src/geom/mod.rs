//! Exact and floating-point geometry of finite point configurations.
//!
//! The comparison key of a distance is exact whenever the coordinates are:
//! ℓ1 and ℓ∞ distances are returned as-is, Euclidean distances as the exact
//! *squared* value. Isometry decisions only ever compare keys, so rational
//! inputs never touch a float.

mod io;
mod isometry;

use std::fmt;

use crate::error::Error;
use crate::scalar::Scalar;

pub use io::{parse_config, write_config};
pub use isometry::{enumerate_copies, is_isometric_copy, IsometryWitness};

/// Which norm a configuration lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Norm {
    Euclidean,
    Maximum,
    Manhattan,
}

impl Norm {
    pub fn tag(self) -> &'static str {
        match self {
            Norm::Euclidean => "l2",
            Norm::Maximum => "linf",
            Norm::Manhattan => "l1",
        }
    }

    pub fn from_tag(tag: &str) -> Result<Self, Error> {
        match tag {
            "l2" => Ok(Norm::Euclidean),
            "linf" => Ok(Norm::Maximum),
            "l1" => Ok(Norm::Manhattan),
            other => Err(Error::Parse(format!("unknown norm tag `{other}`"))),
        }
    }
}

impl fmt::Display for Norm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A point of fixed finite dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct Point<S> {
    coords: Vec<S>,
}

impl<S: Scalar> Point<S> {
    pub fn new(coords: Vec<S>) -> Self {
        Point { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[S] {
        &self.coords
    }

    pub fn to_f64_vec(&self) -> Vec<f64> {
        self.coords.iter().map(Scalar::to_f64_lossy).collect()
    }
}

impl<S: Scalar> From<Vec<S>> for Point<S> {
    fn from(coords: Vec<S>) -> Self {
        Point::new(coords)
    }
}

/// Exact squared Euclidean distance.
pub fn sq_euclidean<S: Scalar>(p: &Point<S>, q: &Point<S>) -> Result<S, Error> {
    check_dims(p, q)?;
    let mut acc = S::zero();
    for (a, b) in p.coords.iter().zip(&q.coords) {
        let d = a.clone() - b.clone();
        acc = acc + d.clone() * d;
    }
    Ok(acc)
}

/// Exact ℓ∞ distance: the largest coordinate gap.
pub fn linf_distance<S: Scalar>(p: &Point<S>, q: &Point<S>) -> Result<S, Error> {
    check_dims(p, q)?;
    let mut best = S::zero();
    for (a, b) in p.coords.iter().zip(&q.coords) {
        let d = (a.clone() - b.clone()).abs();
        if d > best {
            best = d;
        }
    }
    Ok(best)
}

/// Exact ℓ1 distance: the sum of coordinate gaps.
pub fn l1_distance<S: Scalar>(p: &Point<S>, q: &Point<S>) -> Result<S, Error> {
    check_dims(p, q)?;
    let mut acc = S::zero();
    for (a, b) in p.coords.iter().zip(&q.coords) {
        acc = acc + (a.clone() - b.clone()).abs();
    }
    Ok(acc)
}

/// The exact comparison key of a distance under `norm`: the squared value
/// for the Euclidean norm, the distance itself otherwise.
pub fn distance_key<S: Scalar>(p: &Point<S>, q: &Point<S>, norm: Norm) -> Result<S, Error> {
    match norm {
        Norm::Euclidean => sq_euclidean(p, q),
        Norm::Maximum => linf_distance(p, q),
        Norm::Manhattan => l1_distance(p, q),
    }
}

/// Float view of a distance, taking the square root in the Euclidean case.
pub fn distance_f64<S: Scalar>(p: &Point<S>, q: &Point<S>, norm: Norm) -> Result<f64, Error> {
    let key = distance_key(p, q, norm)?.to_f64_lossy();
    Ok(match norm {
        Norm::Euclidean => key.sqrt(),
        _ => key,
    })
}

fn check_dims<S: Scalar>(p: &Point<S>, q: &Point<S>) -> Result<(), Error> {
    if p.dim() != q.dim() {
        return Err(Error::Dimension(p.dim(), q.dim()));
    }
    Ok(())
}

/// A finite labeled point set with a norm tag.
#[derive(Debug, Clone)]
pub struct PointConfig<S> {
    dim: usize,
    norm: Norm,
    labels: Vec<String>,
    points: Vec<Point<S>>,
}

impl<S: Scalar> PointConfig<S> {
    pub fn new(dim: usize, norm: Norm) -> Self {
        PointConfig { dim, norm, labels: Vec::new(), points: Vec::new() }
    }

    /// Build a configuration with auto-generated labels `p0, p1, …`.
    pub fn from_points(dim: usize, norm: Norm, points: Vec<Point<S>>) -> Result<Self, Error> {
        let mut cfg = PointConfig::new(dim, norm);
        for (i, p) in points.into_iter().enumerate() {
            cfg.push(format!("p{i}"), p)?;
        }
        Ok(cfg)
    }

    pub fn push(&mut self, label: impl Into<String>, point: Point<S>) -> Result<(), Error> {
        if point.dim() != self.dim {
            return Err(Error::Dimension(self.dim, point.dim()));
        }
        let label = label.into();
        if self.labels.iter().any(|l| *l == label) {
            return Err(Error::Parse(format!("duplicate point label `{label}`")));
        }
        self.labels.push(label);
        self.points.push(point);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn norm(&self) -> Norm {
        self.norm
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn points(&self) -> &[Point<S>] {
        &self.points
    }

    pub fn point(&self, idx: usize) -> &Point<S> {
        &self.points[idx]
    }

    pub fn label(&self, idx: usize) -> &str {
        &self.labels[idx]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Pairwise distance keys, row-major upper triangle included.
    pub fn distance_key(&self, i: usize, j: usize) -> Result<S, Error> {
        distance_key(&self.points[i], &self.points[j], self.norm)
    }
}
