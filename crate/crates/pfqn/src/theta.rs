//! The n x d coefficient matrix of linear forms.
//!
//! Rows correspond to simplex variables (queueing stations), columns to
//! classes. Entries may be negative, zero, or repeated; nothing here
//! assumes the queueing-theoretic sign convention. n = 0 encodes the empty
//! matrix, which only exists to express the convolution termination
//! operand and is rejected at the public validation boundary.

use crate::error::Error;
use crate::scalar::Rat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaMatrix {
    d: usize,
    rows: Vec<Vec<Rat>>,
}

impl ThetaMatrix {
    /// Build from a nonempty grid of rows; every row must have the same
    /// positive length.
    pub fn new(rows: Vec<Vec<Rat>>) -> Result<Self, Error> {
        let first = rows.first().ok_or(Error::EmptyMatrix)?;
        let d = first.len();
        if d == 0 {
            return Err(Error::EmptyClasses);
        }
        for row in &rows {
            if row.len() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    got: row.len(),
                });
            }
        }
        Ok(ThetaMatrix { d, rows })
    }

    /// The empty matrix with 0 rows and d columns.
    pub fn empty(d: usize) -> Result<Self, Error> {
        if d == 0 {
            return Err(Error::EmptyClasses);
        }
        Ok(ThetaMatrix {
            d,
            rows: Vec::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rat {
        &self.rows[i][j]
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.rows[i]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rat]> {
        self.rows.iter().map(|r| r.as_slice())
    }

    /// The matrix with row `i` removed; removing the last row yields the
    /// empty matrix.
    pub fn remove_row(&self, i: usize) -> Result<Self, Error> {
        if i >= self.n() {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.n(),
            });
        }
        let mut rows = self.rows.clone();
        rows.remove(i);
        Ok(ThetaMatrix { d: self.d, rows })
    }

    /// The matrix with `row` appended as the new last row.
    pub fn append_row(&self, row: Vec<Rat>) -> Result<Self, Error> {
        if row.len() != self.d {
            return Err(Error::DimensionMismatch {
                expected: self.d,
                got: row.len(),
            });
        }
        let mut rows = self.rows.clone();
        rows.push(row);
        Ok(ThetaMatrix { d: self.d, rows })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn grid(entries: &[&[i64]]) -> ThetaMatrix {
        ThetaMatrix::new(
            entries
                .iter()
                .map(|r| r.iter().map(|&v| int(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn remove_row_examples() {
        let two = grid(&[&[1], &[2]]);
        assert_eq!(two.remove_row(1).unwrap(), grid(&[&[1]]));
        let one = grid(&[&[1]]);
        let empty = one.remove_row(0).unwrap();
        assert!(empty.is_empty());
        assert_eq!(empty.d(), 1);
        let wide = grid(&[&[1, 1], &[2, 3]]);
        assert_eq!(wide.remove_row(0).unwrap(), grid(&[&[2, 3]]));
        assert_eq!(
            wide.remove_row(2),
            Err(Error::IndexOutOfRange { index: 2, len: 2 })
        );
    }

    #[test]
    fn append_row_examples() {
        let one = grid(&[&[1]]);
        assert_eq!(one.append_row(vec![int(2)]).unwrap(), grid(&[&[1], &[2]]));
        let empty = ThetaMatrix::empty(1).unwrap();
        assert_eq!(empty.append_row(vec![int(5)]).unwrap(), grid(&[&[5]]));
        let narrow = grid(&[&[1, 1]]);
        assert_eq!(
            narrow.append_row(vec![int(2), int(3)]).unwrap(),
            grid(&[&[1, 1], &[2, 3]])
        );
        assert_eq!(
            narrow.append_row(vec![int(2)]),
            Err(Error::DimensionMismatch {
                expected: 2,
                got: 1
            })
        );
    }

    #[test]
    fn append_then_remove_is_identity() {
        let m = grid(&[&[1, 2], &[3, 4]]);
        let appended = m.append_row(vec![int(5), int(6)]).unwrap();
        assert_eq!(appended.remove_row(2).unwrap(), m);
    }

    #[test]
    fn malformed_grids_are_rejected() {
        assert_eq!(ThetaMatrix::new(vec![]), Err(Error::EmptyMatrix));
        assert_eq!(ThetaMatrix::new(vec![vec![]]), Err(Error::EmptyClasses));
        assert_eq!(ThetaMatrix::empty(0), Err(Error::EmptyClasses));
        assert_eq!(
            ThetaMatrix::new(vec![vec![int(1)], vec![int(2), int(3)]]),
            Err(Error::DimensionMismatch {
                expected: 1,
                got: 2
            })
        );
    }
}
