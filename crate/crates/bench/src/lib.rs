//! Shared fixtures for the kernel benchmarks.

use hilbsmooth::{lex_ideal, lsing_witness, MonomialIdeal, Partition};

/// A mid-size lexicographic ideal: L((3,3,2,2,2,2)) in five variables.
pub fn mid_lex_ideal() -> MonomialIdeal {
    lex_ideal(&Partition::parse("3,3,2,2,2,2").unwrap(), 4).unwrap()
}

/// The largest singular witness exercised by the test grid.
pub fn large_witness() -> MonomialIdeal {
    lsing_witness(6, 4, 5, 0).unwrap()
}

/// A partition with all distinct parts, the worst case for peeling.
pub fn staircase_partition() -> Partition {
    Partition::parse("6,5,4,3,2,1").unwrap()
}
