//! Colorings as partitions of a finite cell set, and copy classification.

mod io;
mod oracle;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::Error;
use crate::ColorId;

pub use io::{parse_cell_coloring, parse_grid_coloring, write_cell_coloring, write_grid_coloring};
pub use oracle::{sample_verify_planar, strip_color, ColoringOracle, PlanarViolation};

/// A total assignment of colors to a finite set of cells. The number of
/// colors is unbounded; color ids are opaque.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring<C: Ord> {
    map: BTreeMap<C, ColorId>,
}

impl<C: Ord> Default for Coloring<C> {
    fn default() -> Self {
        Coloring { map: BTreeMap::new() }
    }
}

impl<C: Ord + Clone + fmt::Debug> Coloring<C> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (C, ColorId)>) -> Self {
        Coloring { map: pairs.into_iter().collect() }
    }

    pub fn set(&mut self, cell: C, color: ColorId) {
        self.map.insert(cell, color);
    }

    pub fn color(&self, cell: &C) -> Result<ColorId, Error> {
        self.map
            .get(cell)
            .copied()
            .ok_or_else(|| Error::Domain(format!("{cell:?}")))
    }

    pub fn contains(&self, cell: &C) -> bool {
        self.map.contains_key(cell)
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&C, ColorId)> {
        self.map.iter().map(|(c, &id)| (c, id))
    }

    /// Number of distinct colors actually used.
    pub fn palette_size(&self) -> usize {
        self.map.values().collect::<BTreeSet<_>>().len()
    }

    /// The cells of one color class, in domain order.
    pub fn class(&self, color: ColorId) -> Vec<&C> {
        self.map
            .iter()
            .filter(|(_, &c)| c == color)
            .map(|(cell, _)| cell)
            .collect()
    }
}

/// Verdict for a colored copy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CopyClass {
    /// One color class covers the whole copy.
    Monochromatic,
    /// All cells carry pairwise distinct colors.
    Rainbow,
    /// Neither.
    Other,
}

impl fmt::Display for CopyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CopyClass::Monochromatic => "monochromatic",
            CopyClass::Rainbow => "rainbow",
            CopyClass::Other => "other",
        })
    }
}

/// Classify a copy under a coloring. A one-cell copy is monochromatic.
pub fn classify<C: Ord + Clone + fmt::Debug>(
    copy: &[C],
    coloring: &Coloring<C>,
) -> Result<CopyClass, Error> {
    let mut seen = BTreeSet::new();
    let mut all_distinct = true;
    let mut first: Option<ColorId> = None;
    let mut all_same = true;
    for cell in copy {
        let c = coloring.color(cell)?;
        match first {
            None => first = Some(c),
            Some(f) if f != c => all_same = false,
            _ => {}
        }
        if !seen.insert(c) {
            all_distinct = false;
        }
    }
    Ok(if all_same && first.is_some() {
        CopyClass::Monochromatic
    } else if all_distinct {
        CopyClass::Rainbow
    } else {
        CopyClass::Other
    })
}

/// First copy of `pattern` in `space` (deterministic enumeration order) that
/// classifies monochromatic or rainbow, or `None` when every copy is OTHER.
pub fn find_mono_or_rainbow(
    space: &crate::RatConfig,
    coloring: &Coloring<String>,
    pattern: &crate::RatConfig,
    norm: crate::geom::Norm,
) -> Result<Option<(Vec<String>, CopyClass)>, Error> {
    for witness in crate::geom::enumerate_copies(pattern, space, norm) {
        let cells: Vec<String> = witness
            .map()
            .iter()
            .map(|&t| space.label(t).to_string())
            .collect();
        let class = classify(&cells, coloring)?;
        if class != CopyClass::Other {
            return Ok(Some((cells, class)));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coloring(colors: &[ColorId]) -> Coloring<u32> {
        Coloring::from_pairs(colors.iter().enumerate().map(|(i, &c)| (i as u32, c)))
    }

    #[test]
    fn classify_basic() {
        let cells: Vec<u32> = (0..4).collect();
        assert_eq!(classify(&cells, &coloring(&[1, 1, 1, 1])).unwrap(), CopyClass::Monochromatic);
        assert_eq!(classify(&cells, &coloring(&[1, 2, 3, 4])).unwrap(), CopyClass::Rainbow);
        assert_eq!(classify(&cells, &coloring(&[1, 1, 2, 2])).unwrap(), CopyClass::Other);
    }

    #[test]
    fn out_of_domain_cell() {
        let c = coloring(&[0, 1]);
        assert!(matches!(classify(&[5u32], &c), Err(Error::Domain(_))));
    }

    #[test]
    fn single_cell_is_monochromatic() {
        assert_eq!(classify(&[0u32], &coloring(&[7])).unwrap(), CopyClass::Monochromatic);
    }

    #[test]
    fn classify_invariant_under_color_permutation() {
        let cells: Vec<u32> = (0..4).collect();
        // Same partition, relabeled colors.
        let a = coloring(&[1, 1, 2, 3]);
        let b = coloring(&[9, 9, 4, 0]);
        assert_eq!(classify(&cells, &a).unwrap(), classify(&cells, &b).unwrap());
    }
}
