use std::fmt;

/// Dense row-major Boolean matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BoolMatrix {
    rows: usize,
    cols: usize,
    data: Vec<bool>,
}

impl BoolMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![false; rows * cols],
        }
    }

    pub fn ones(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![true; rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Builds a matrix from nested rows of 0/1 values. Panics on ragged input.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend(r.iter().map(|&v| v != 0));
        }
        Self {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub(crate) fn from_flat(rows: usize, cols: usize, data: Vec<bool>) -> Self {
        debug_assert_eq!(data.len(), rows * cols);
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        self.data[i * self.cols + j] = v;
    }

    pub fn as_flat(&self) -> &[bool] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    /// Boolean matrix product: `(self ; other)[i][k] = OR_j self[i][j] AND other[j][k]`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        Self::from_fn(self.rows, other.cols, |i, k| {
            (0..self.cols).any(|j| self.get(i, j) && other.get(j, k))
        })
    }

    pub fn or(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| *a || *b).collect();
        Self::from_flat(self.rows, self.cols, data)
    }

    /// Pointwise `self <= other`.
    pub fn le(&self, other: &Self) -> bool {
        (self.rows, self.cols) == (other.rows, other.cols)
            && self.data.iter().zip(&other.data).all(|(a, b)| !*a || *b)
    }

    /// `OR_{i,j} self[i][j] AND other[i][j]`.
    pub fn overlaps(&self, other: &Self) -> bool {
        self.data.iter().zip(&other.data).any(|(a, b)| *a && *b)
    }

    pub fn is_zero(&self) -> bool {
        !self.data.iter().any(|&v| v)
    }

    pub fn count_ones(&self) -> usize {
        self.data.iter().filter(|&&v| v).count()
    }

    pub fn true_cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.rows)
            .flat_map(move |i| (0..self.cols).map(move |j| (i, j)))
            .filter(move |&(i, j)| self.get(i, j))
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) as u8).collect())
            .collect()
    }
}

impl fmt::Debug for BoolMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_rows())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_is_or_and() {
        let d = BoolMatrix::from_rows(&[[0, 1], [0, 1]]);
        let e = BoolMatrix::from_rows(&[[1, 1], [0, 1]]);
        assert_eq!(d.compose(&e), BoolMatrix::from_rows(&[[0, 1], [0, 1]]));
        assert_eq!(e.compose(&d), BoolMatrix::from_rows(&[[0, 1], [0, 1]]));
    }

    #[test]
    fn pointwise_order() {
        let a = BoolMatrix::from_rows(&[[0, 1], [0, 1]]);
        let b = BoolMatrix::from_rows(&[[1, 1], [0, 1]]);
        assert!(a.le(&b));
        assert!(!b.le(&a));
        assert_eq!(a.or(&b), b);
        assert_eq!(b.true_cells().count(), 3);
    }
}
