//! Inputs shared by the criterion benchmarks.

/// `(label, polynomial)` over `x, y, z`, roughly in increasing cost.
pub const INPUTS: &[(&str, &str)] = &[
    ("E8", "x^2+y^3+z^5"),
    ("fermat-quartic", "x^4+y^4+z^4"),
    ("x2-y3-z7", "x^2+y^3+z^7"),
    ("deformed-sextic", "x^6+y^6+z^6+x^2*y^2*z^2-x^3*y^3"),
];
