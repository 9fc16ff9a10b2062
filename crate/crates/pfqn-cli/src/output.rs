//! Bits shared by every subcommand's rendering path.

use pfqn::WorkCounters;
use serde::Serialize;

/// How many significant digits the advisory decimal renderings carry.
pub const DECIMAL_DIGITS: usize = 15;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputMode {
    Json,
    Text,
}

impl OutputMode {
    pub fn parse(name: &str) -> Option<Self> {
        match name {
            "json" => Some(OutputMode::Json),
            "text" => Some(OutputMode::Text),
            _ => None,
        }
    }
}

#[derive(Serialize)]
pub struct WorkOut {
    pub table_cells: u64,
    pub terms: u64,
}

impl From<WorkCounters> for WorkOut {
    fn from(work: WorkCounters) -> Self {
        WorkOut {
            table_cells: work.table_cells,
            terms: work.terms,
        }
    }
}
