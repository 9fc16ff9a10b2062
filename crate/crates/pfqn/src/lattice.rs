//! Mixed-radix indexing of the population box 0 <= m <= N (componentwise).
//!
//! The recurrence tables and truncated series all live on this lattice;
//! linear indices increase monotonically with every coordinate, so filling
//! cells in linear order guarantees every m - 1_j predecessor is ready.

/// The box of multi-indices `0 <= m <= bounds`, addressed by linear index.
#[derive(Clone, Debug)]
pub struct BoxLattice {
    bounds: Vec<u64>,
    strides: Vec<usize>,
    size: usize,
}

impl BoxLattice {
    pub fn new(bounds: &[u64]) -> Self {
        let mut strides = vec![0usize; bounds.len()];
        let mut size = 1usize;
        for (j, &b) in bounds.iter().enumerate() {
            strides[j] = size;
            size = size
                .checked_mul(b as usize + 1)
                .expect("population lattice too large to address");
        }
        BoxLattice {
            bounds: bounds.to_vec(),
            strides,
            size,
        }
    }

    pub fn bounds(&self) -> &[u64] {
        &self.bounds
    }

    /// Number of lattice points, prod_j (bounds_j + 1).
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn index_of(&self, m: &[u64]) -> usize {
        debug_assert_eq!(m.len(), self.bounds.len());
        m.iter()
            .zip(&self.strides)
            .map(|(&c, &s)| c as usize * s)
            .sum()
    }

    /// Linear index of m - 1_j given the index of m; None when m_j = 0.
    pub fn decrement(&self, index: usize, m: &[u64], j: usize) -> Option<usize> {
        if m[j] == 0 {
            None
        } else {
            Some(index - self.strides[j])
        }
    }

    /// Multi-indices in increasing linear order, starting at the origin.
    pub fn iter(&self) -> BoxIter<'_> {
        BoxIter {
            lattice: self,
            next: Some(vec![0; self.bounds.len()]),
        }
    }
}

pub struct BoxIter<'a> {
    lattice: &'a BoxLattice,
    next: Option<Vec<u64>>,
}

impl Iterator for BoxIter<'_> {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut advanced = false;
        for (entry, &bound) in succ.iter_mut().zip(&self.lattice.bounds) {
            if *entry < bound {
                *entry += 1;
                advanced = true;
                break;
            }
            *entry = 0;
        }
        if advanced {
            self.next = Some(succ);
        }
        Some(current)
    }
}
