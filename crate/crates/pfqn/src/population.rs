//! Per-class population vector N = (N_1, ..., N_d).

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Population {
    counts: Vec<u64>,
    total: u64,
}

impl Population {
    pub fn new(counts: Vec<u64>) -> Self {
        let total = counts.iter().sum();
        Population { counts, total }
    }

    pub fn d(&self) -> usize {
        self.counts.len()
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn get(&self, class: usize) -> u64 {
        self.counts[class]
    }

    /// Total degree N = sum_j N_j.
    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn is_zero(&self) -> bool {
        self.total == 0
    }

    /// N - 1_class; only defined when the class has at least one job.
    pub fn decrement(&self, class: usize) -> Option<Population> {
        if self.counts[class] == 0 {
            return None;
        }
        let mut counts = self.counts.clone();
        counts[class] -= 1;
        Some(Population {
            counts,
            total: self.total - 1,
        })
    }
}
