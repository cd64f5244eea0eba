//! Shared fixtures for the criterion benches.

use rootlab::{Family, RootSystem, TypeLabel};

/// Builds the root system for a label that is known to be admissible.
pub fn system(family: Family, rank: usize) -> RootSystem {
    RootSystem::new(TypeLabel::new(family, rank).expect("admissible label"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_fixture() {
        assert_eq!(system(Family::E, 8).roots().len(), 240);
    }
}
