use crate::ParseError;

/// A matrix over GF(2). Row `r` is the output coordinate `r`; bit `c` of
/// `rows[r]` is the entry in column `c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap {
    rows: Vec<u64>,
    cols: usize,
}

impl LinearMap {
    pub fn new(rows: Vec<u64>, cols: usize) -> LinearMap {
        assert!(cols < 64 && rows.iter().all(|&r| r >> cols == 0), "row wider than {cols} columns");
        LinearMap { rows, cols }
    }

    pub fn identity(dim: usize) -> LinearMap {
        LinearMap::new((0..dim).map(|i| 1u64 << i).collect(), dim)
    }

    /// Reads bit rows separated by commas, such as `10,01`.
    pub fn parse(src: &str) -> Result<LinearMap, ParseError> {
        let rows: Vec<&str> = src.split(',').map(str::trim).collect();
        let cols = rows[0].len();
        if cols >= 64 {
            return Err(ParseError::new(1, "matrix is too wide"));
        }
        let mut bits = Vec::with_capacity(rows.len());
        for row in rows {
            if row.len() != cols {
                return Err(ParseError::new(1, format!("row `{row}` has {} entries, expected {cols}", row.len())));
            }
            let mut r = 0u64;
            for (c, ch) in row.chars().enumerate() {
                match ch {
                    '0' => {}
                    '1' => r |= 1 << c,
                    _ => return Err(ParseError::new(1, format!("`{ch}` is not a bit"))),
                }
            }
            bits.push(r);
        }
        Ok(LinearMap { rows: bits, cols })
    }

    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        rank(self.rows.clone())
    }

    pub fn apply(&self, v: u64) -> u64 {
        self.rows
            .iter()
            .enumerate()
            .fold(0, |acc, (r, &row)| acc | (((row & v).count_ones() as u64) & 1) << r)
    }

    /// `(self ⊗ g)(v)` for `v` flattened row-major.
    pub fn tensor_apply(&self, g: &LinearMap, v: u64) -> u64 {
        let (n, n2) = (g.cols, g.rows());
        let mask = if n == 0 { 0 } else { (1u64 << n) - 1 };
        let through_g: Vec<u64> = (0..self.cols).map(|i| g.apply(v >> (i * n) & mask)).collect();
        let mut out = 0;
        for (r, &row) in self.rows.iter().enumerate() {
            let sum = (0..self.cols).filter(|&i| row >> i & 1 == 1).fold(0, |acc, i| acc ^ through_g[i]);
            out |= sum << (r * n2);
        }
        out
    }
}

/// Rank over GF(2) of the given rows.
pub fn rank(mut rows: Vec<u64>) -> usize {
    let mut rank = 0;
    while let Some(pivot) = rows.iter().copied().filter(|&r| r != 0).min_by_key(|r| r.trailing_zeros()) {
        let bit = pivot & pivot.wrapping_neg();
        rows.retain(|&r| r != pivot);
        for r in rows.iter_mut() {
            if *r & bit != 0 {
                *r ^= pivot;
            }
        }
        rank += 1;
    }
    rank
}
