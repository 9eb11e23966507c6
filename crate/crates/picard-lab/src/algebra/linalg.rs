//! Row reduction over the table-driven finite fields.
//!
//! Vectors are stored as raw coefficient codes (`u8`), and all arithmetic
//! goes through the per-field lookup tables, which keeps the large cocycle
//! systems (thousands of rows) fast. The echelon basis is deterministic:
//! given the same rows in the same order it produces the same reduced
//! echelon form, and kernels come out in the canonical free-column form.

use super::field::{Field, FieldElement, FieldTables};

/// A growing row-echelon basis over a fixed field, with lazily applied full
/// (reduced) normalization.
pub struct LinearBasis {
    field: Field,
    width: usize,
    /// Rows sorted by pivot column; each row is zero left of its pivot and
    /// has pivot coefficient 1.
    rows: Vec<Vec<u8>>,
    pivots: Vec<usize>,
}

impl LinearBasis {
    pub fn new(field: Field, width: usize) -> LinearBasis {
        LinearBasis { field, width, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn tables(&self) -> &'static FieldTables {
        self.field.tables()
    }

    /// Reduces `row` against the current basis in place; returns the column
    /// of its first surviving nonzero entry, if any.
    fn forward_reduce(&self, row: &mut [u8]) -> Option<usize> {
        let t = self.tables();
        let mut col = row.iter().position(|&c| c != 0)?;
        loop {
            // Find a basis row with this pivot, if present.
            match self.pivots.binary_search(&col) {
                Ok(idx) => {
                    let factor = row[col];
                    let basis_row = &self.rows[idx];
                    for j in col..self.width {
                        let b = basis_row[j];
                        if b != 0 {
                            row[j] = t.sub(row[j], t.mul(factor, b));
                        }
                    }
                }
                Err(_) => return Some(col),
            }
            col += row[col..].iter().position(|&c| c != 0)?;
        }
    }

    /// Inserts a row, returning true if it increased the rank.
    pub fn insert(&mut self, mut row: Vec<u8>) -> bool {
        assert_eq!(row.len(), self.width, "row width mismatch");
        let t = self.tables();
        match self.forward_reduce(&mut row) {
            None => false,
            Some(col) => {
                // Normalize the pivot to 1.
                let inv = t.inv(row[col]);
                if inv != 1 {
                    for c in row[col..].iter_mut() {
                        if *c != 0 {
                            *c = t.mul(*c, inv);
                        }
                    }
                }
                let idx = self.pivots.binary_search(&col).unwrap_err();
                self.pivots.insert(idx, col);
                self.rows.insert(idx, row);
                true
            }
        }
    }

    /// Back-substitutes so every pivot column is zero in all other rows,
    /// yielding the reduced row-echelon form.
    pub fn normalize(&mut self) {
        let t = self.tables();
        for i in (0..self.rows.len()).rev() {
            let (head, tail) = self.rows.split_at_mut(i + 1);
            let (earlier, current) = head.split_at_mut(i);
            let current = &current[0];
            let _ = tail;
            let col = self.pivots[i];
            for row in earlier.iter_mut() {
                let factor = row[col];
                if factor != 0 {
                    for j in col..self.width {
                        let b = current[j];
                        if b != 0 {
                            row[j] = t.sub(row[j], t.mul(factor, b));
                        }
                    }
                }
            }
        }
    }

    /// The residual of `v` after reduction against the basis (zero iff `v`
    /// lies in the row span).
    pub fn reduce_vector(&self, v: &[u8]) -> Vec<u8> {
        let mut row = v.to_vec();
        let _ = self.forward_reduce(&mut row);
        // forward_reduce stops at the first non-pivot column; continue past it.
        let t = self.tables();
        let mut col = 0;
        while col < self.width {
            if row[col] != 0 {
                if let Ok(idx) = self.pivots.binary_search(&col) {
                    let factor = row[col];
                    let basis_row = &self.rows[idx];
                    for j in col..self.width {
                        let b = basis_row[j];
                        if b != 0 {
                            row[j] = t.sub(row[j], t.mul(factor, b));
                        }
                    }
                }
            }
            col += 1;
        }
        row
    }

    /// True iff `v` lies in the row span.
    pub fn contains(&self, v: &[u8]) -> bool {
        self.reduce_vector(v).iter().all(|&c| c == 0)
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    /// The canonical kernel basis of the system whose constraint rows span
    /// this basis: one vector per free column, with entry 1 at its free
    /// column, the negated pivot-row entries at pivot columns, and 0 at all
    /// other free columns. Requires [`LinearBasis::normalize`] first.
    pub fn kernel_basis(&self) -> Vec<Vec<u8>> {
        let t = self.tables();
        let mut kernel = Vec::new();
        for free in 0..self.width {
            if self.pivots.binary_search(&free).is_ok() {
                continue;
            }
            let mut v = vec![0u8; self.width];
            v[free] = 1;
            for (idx, &p) in self.pivots.iter().enumerate() {
                let c = self.rows[idx][free];
                if c != 0 {
                    v[p] = t.neg(c);
                }
            }
            kernel.push(v);
        }
        kernel
    }
}

/// Reduced echelon basis of a list of vectors (spanning-set normal form).
pub fn echelon_basis(field: Field, width: usize, vectors: &[Vec<u8>]) -> LinearBasis {
    let mut basis = LinearBasis::new(field, width);
    for v in vectors {
        basis.insert(v.clone());
    }
    basis.normalize();
    basis
}

/// Solution-space basis of the homogeneous system with the given constraint
/// rows, in canonical free-column form.
pub fn kernel(field: Field, width: usize, constraints: &[Vec<u8>]) -> Vec<Vec<u8>> {
    let basis = echelon_basis(field, width, constraints);
    basis.kernel_basis()
}

/// Converts field elements to a code row (helper for building systems).
pub fn codes(row: &[FieldElement]) -> Vec<u8> {
    row.iter().map(|c| c.code()).collect()
}
