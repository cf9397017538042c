//! Shared inputs for the criterion benches.

use gk_core::GroupSpec;

/// One group per family, from small to the largest rank and field in the
/// verified range.
pub const GROUPS: [&str; 12] = [
    "Spor:M", "Alt:200", "A:13:32", "2A:13:27", "B:19:9", "C:12:32", "D:19:7", "2D:18:8", "G2:32", "F4:27", "E7:32", "E8:32",
];

pub fn specs() -> Vec<(&'static str, GroupSpec)> {
    GROUPS.iter().map(|g| (*g, GroupSpec::parse(g).expect("bench group parses"))).collect()
}
