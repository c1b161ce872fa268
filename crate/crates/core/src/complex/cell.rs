use std::fmt;

use crate::weyl::GenSet;

/// The cell `E(w, gamma)`: `element` indexes the canonical list of `W`
/// (or of the classes `[w]` in the toric case).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub element: usize,
    pub gamma: GenSet,
}

impl Cell {
    pub fn new(element: usize, gamma: GenSet) -> Self {
        Self { element, gamma }
    }

    pub fn dimension(&self) -> usize {
        self.gamma.len()
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E({}, {})", self.element, self.gamma)
    }
}
