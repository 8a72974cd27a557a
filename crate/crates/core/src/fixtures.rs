//! The example tables shipped in `tables/`.

use crate::finite::{io, Semigroup};

pub const TABLE1: &str = include_str!("../../../tables/table1.cay");
pub const TABLE3: &str = include_str!("../../../tables/table3.cay");
pub const TABLE4: &str = include_str!("../../../tables/table4.cay");
pub const TABLE5: &str = include_str!("../../../tables/table5.cay");

fn load(text: &str) -> Semigroup {
    Semigroup::new(io::parse_table(text).expect("fixture parses")).expect("fixture is associative")
}

/// The free left legal semigroup on `{x, y}`, in the order
/// `x xx y yy xy xxy yx yyx`.
pub fn table1() -> Semigroup {
    load(TABLE1)
}

/// `{x, e, f, g, h}`: `a ↦ a²` is a retract onto the left regular band `S²`.
pub fn table3() -> Semigroup {
    load(TABLE3)
}

/// `{x, y, b, c}`: satisfies `ab = ac`.
pub fn table4() -> Semigroup {
    load(TABLE4)
}

/// `{a, …, f}`: left legal, `S²` left zero but not a retract ideal.
pub fn table5() -> Semigroup {
    load(TABLE5)
}
