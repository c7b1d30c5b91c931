//! Cartesian product grids `[n₁]×…×[n_d]`, shared by the simplex-power and
//! clique-product views. Cells are 1-based coordinate tuples; under the
//! simplex embedding, two cells at Hamming distance `j` sit at squared ℓ2
//! distance `2j`.

use crate::error::Error;

/// A product of factors with sizes `n_i ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductSpace {
    sizes: Vec<u16>,
}

/// Cells are coordinate tuples, 1-based per factor.
pub type Cell = Vec<u16>;

impl ProductSpace {
    pub fn new(sizes: Vec<u16>) -> Result<Self, Error> {
        if sizes.is_empty() {
            return Err(Error::Parse("product space needs at least one factor".into()));
        }
        if sizes.iter().any(|&n| n < 2) {
            return Err(Error::Parse("every factor size must be at least 2".into()));
        }
        Ok(ProductSpace { sizes })
    }

    pub fn parse(text: &str) -> Result<Self, Error> {
        let sizes = text
            .split(',')
            .map(|v| {
                v.trim()
                    .parse::<u16>()
                    .map_err(|_| Error::Parse(format!("bad factor size `{v}`")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        ProductSpace::new(sizes)
    }

    pub fn sizes(&self) -> &[u16] {
        &self.sizes
    }

    pub fn factors(&self) -> usize {
        self.sizes.len()
    }

    pub fn cell_count(&self) -> u128 {
        self.sizes.iter().map(|&n| n as u128).product()
    }

    pub fn id(&self) -> String {
        self.sizes.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
    }

    pub fn contains(&self, cell: &[u16]) -> bool {
        cell.len() == self.sizes.len()
            && cell.iter().zip(&self.sizes).all(|(&v, &n)| v >= 1 && v <= n)
    }

    /// All cells in lexicographic order. Callers must cap the cell count.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        let mut cur: Cell = vec![1; self.sizes.len()];
        loop {
            out.push(cur.clone());
            let mut pos = self.sizes.len();
            loop {
                if pos == 0 {
                    return out;
                }
                pos -= 1;
                if cur[pos] < self.sizes[pos] {
                    cur[pos] += 1;
                    for later in cur.iter_mut().skip(pos + 1) {
                        *later = 1;
                    }
                    break;
                }
            }
        }
    }

    /// Lexicographic rank of a cell.
    pub fn rank(&self, cell: &[u16]) -> usize {
        let mut r = 0usize;
        for (&v, &n) in cell.iter().zip(&self.sizes) {
            r = r * n as usize + (v as usize - 1);
        }
        r
    }

    /// Hamming distance between two cells; `2·hamming` is the exact squared
    /// ℓ2 distance under the simplex embedding.
    pub fn hamming(a: &[u16], b: &[u16]) -> usize {
        a.iter().zip(b).filter(|(x, y)| x != y).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cells_are_lexicographic_and_complete() {
        let s = ProductSpace::new(vec![2, 3]).unwrap();
        let cells = s.cells();
        assert_eq!(cells.len(), 6);
        assert_eq!(cells[0], vec![1, 1]);
        assert_eq!(cells[1], vec![1, 2]);
        assert_eq!(cells[5], vec![2, 3]);
        for (i, c) in cells.iter().enumerate() {
            assert_eq!(s.rank(c), i);
        }
    }

    #[test]
    fn rejects_degenerate_factors() {
        assert!(ProductSpace::new(vec![]).is_err());
        assert!(ProductSpace::new(vec![2, 1]).is_err());
        assert!(ProductSpace::parse("3,x").is_err());
        assert_eq!(ProductSpace::parse("8,6,4,2").unwrap().cell_count(), 384);
    }
}
