//! The two three-element sets used as a running example throughout the docs
//! and tests (capability, trustworthiness and price of a web service).

use crate::set::DiscreteIns;
use crate::value::NeutrosophicValue;

type Row = (&'static str, (f64, f64), (f64, f64), (f64, f64));

const A: [Row; 3] = [
    ("x1", (0.2, 0.4), (0.3, 0.5), (0.3, 0.5)),
    ("x2", (0.5, 0.7), (0.0, 0.2), (0.2, 0.3)),
    ("x3", (0.6, 0.8), (0.2, 0.3), (0.2, 0.3)),
];

const B: [Row; 3] = [
    ("x1", (0.5, 0.7), (0.1, 0.3), (0.1, 0.3)),
    ("x2", (0.2, 0.3), (0.2, 0.4), (0.5, 0.8)),
    ("x3", (0.4, 0.6), (0.0, 0.1), (0.3, 0.4)),
];

fn build(rows: &[Row]) -> DiscreteIns {
    DiscreteIns::from_elements(rows.iter().map(|(l, t, i, f)| {
        let v = NeutrosophicValue::from_bounds(*t, *i, *f).expect("sample data is valid");
        (l.to_string(), v)
    }))
    .expect("sample labels are unique")
}

pub fn example_a() -> DiscreteIns {
    build(&A)
}

pub fn example_b() -> DiscreteIns {
    build(&B)
}

/// Both sets in the set file format.
pub const EXAMPLE_FILE: &str = "\
# capability, trustworthiness and price of a web service
set A
  x1 : [0.2,0.4] [0.3,0.5] [0.3,0.5]
  x2 : [0.5,0.7] [0.0,0.2] [0.2,0.3]
  x3 : [0.6,0.8] [0.2,0.3] [0.2,0.3]
end
set B
  x1 : [0.5,0.7] [0.1,0.3] [0.1,0.3]
  x2 : [0.2,0.3] [0.2,0.4] [0.5,0.8]
  x3 : [0.4,0.6] [0.0,0.1] [0.3,0.4]
end
";
