//! Hand-worked triangular cases for every form and fuzziness pattern,
//! shared by the appendix tests and the acceptance suite.
#![allow(dead_code)]

use fuzzy_sns::fuzzy_cso::apply;
use fuzzy_sns::{Form, FuzzyScalar, Options, Transform};

pub struct Case {
    pub name: &'static str,
    pub form: Form,
    pub operands: &'static [&'static str],
    pub radices: &'static [&'static str],
    pub images: &'static [&'static str],
    pub rates: &'static [&'static str],
    pub partial_carries: &'static [&'static str],
    pub common_carry: Option<&'static str>,
    pub remainders: &'static [&'static str],
    pub transformants: &'static [&'static str],
    pub new_images: &'static [&'static str],
}

pub const CASES: &[Case] = &[
    // L: one operand, one image.
    Case {
        name: "L1",
        form: Form::L,
        operands: &["(4; 7; 9)"],
        radices: &["3"],
        images: &["10"],
        rates: &["2"],
        partial_carries: &["(1; 2; 3)"],
        common_carry: None,
        remainders: &["(-5; 1; 6)"],
        transformants: &["(2; 4; 6)"],
        new_images: &["(12; 14; 16)"],
    },
    Case {
        name: "L2",
        form: Form::L,
        operands: &["7"],
        radices: &["(2; 3; 4)"],
        images: &["10"],
        rates: &["2"],
        partial_carries: &["(1; 2; 3)"],
        common_carry: None,
        remainders: &["(-5; 1; 5)"],
        transformants: &["(2; 4; 6)"],
        new_images: &["(12; 14; 16)"],
    },
    Case {
        name: "L3",
        form: Form::L,
        operands: &["7"],
        radices: &["3"],
        images: &["10"],
        rates: &["(1; 2; 3)"],
        partial_carries: &["(2; 2; 2)"],
        common_carry: None,
        remainders: &["(1; 1; 1)"],
        transformants: &["(2; 4; 6)"],
        new_images: &["(12; 14; 16)"],
    },
    Case {
        name: "L4",
        form: Form::L,
        operands: &["7"],
        radices: &["(2; 3; 4)"],
        images: &["10"],
        rates: &["(1; 2; 3)"],
        partial_carries: &["(1; 2; 3)"],
        common_carry: None,
        remainders: &["(-5; 1; 5)"],
        transformants: &["(1; 4; 9)"],
        new_images: &["(11; 14; 19)"],
    },
    Case {
        name: "L5",
        form: Form::L,
        operands: &["(4; 7; 9)"],
        radices: &["(2; 3; 4)"],
        images: &["(9; 10; 12)"],
        rates: &["(1; 2; 3)"],
        partial_carries: &["(1; 2; 4)"],
        common_carry: None,
        remainders: &["(-12; 1; 7)"],
        transformants: &["(1; 4; 12)"],
        new_images: &["(10; 14; 24)"],
    },
    // D: one operand, two images.
    Case {
        name: "D1",
        form: Form::D,
        operands: &["(4; 7; 9)"],
        radices: &["3"],
        images: &["0", "0"],
        rates: &["2", "5"],
        partial_carries: &["(1; 2; 3)"],
        common_carry: None,
        remainders: &["(-5; 1; 6)"],
        transformants: &["(2; 4; 6)", "(5; 10; 15)"],
        new_images: &["(2; 4; 6)", "(5; 10; 15)"],
    },
    Case {
        name: "D2",
        form: Form::D,
        operands: &["7"],
        radices: &["(2; 3; 4)"],
        images: &["1", "0"],
        rates: &["2", "5"],
        partial_carries: &["(1; 2; 3)"],
        common_carry: None,
        remainders: &["(-5; 1; 5)"],
        transformants: &["(2; 4; 6)", "(5; 10; 15)"],
        new_images: &["(3; 5; 7)", "(5; 10; 15)"],
    },
    Case {
        name: "D3",
        form: Form::D,
        operands: &["7"],
        radices: &["3"],
        images: &["1", "0"],
        rates: &["(1; 2; 3)", "(0; 1; 1)"],
        partial_carries: &["(2; 2; 2)"],
        common_carry: None,
        remainders: &["(1; 1; 1)"],
        transformants: &["(2; 4; 6)", "(0; 2; 2)"],
        new_images: &["(3; 5; 7)", "(0; 2; 2)"],
    },
    Case {
        name: "D4",
        form: Form::D,
        operands: &["7"],
        radices: &["(2; 3; 4)"],
        images: &["0", "5"],
        rates: &["(1; 2; 3)", "(2; 2; 2)"],
        partial_carries: &["(1; 2; 3)"],
        common_carry: None,
        remainders: &["(-5; 1; 5)"],
        transformants: &["(1; 4; 9)", "(2; 4; 6)"],
        new_images: &["(1; 4; 9)", "(7; 9; 11)"],
    },
    Case {
        name: "D5",
        form: Form::D,
        operands: &["(4; 7; 9)"],
        radices: &["(2; 3; 4)"],
        images: &["(0; 1; 2)", "3"],
        rates: &["(1; 2; 3)", "(1; 1; 2)"],
        partial_carries: &["(1; 2; 4)"],
        common_carry: None,
        remainders: &["(-12; 1; 7)"],
        transformants: &["(1; 4; 12)", "(1; 2; 8)"],
        new_images: &["(1; 5; 14)", "(4; 5; 11)"],
    },
    // F: two operands, one image.
    Case {
        name: "F1",
        form: Form::F,
        operands: &["(4; 7; 9)", "(5; 9; 13)"],
        radices: &["3", "4"],
        images: &["0"],
        rates: &["2"],
        partial_carries: &["(1; 2; 3)", "(1; 2; 3)"],
        common_carry: Some("(1; 2; 3)"),
        remainders: &["(-5; 1; 6)", "(-7; 1; 9)"],
        transformants: &["(2; 4; 6)"],
        new_images: &["(2; 4; 6)"],
    },
    Case {
        name: "F2",
        form: Form::F,
        operands: &["7", "10"],
        radices: &["(2; 3; 4)", "(3; 3; 5)"],
        images: &["1"],
        rates: &["2"],
        partial_carries: &["(1; 2; 3)", "(2; 3; 3)"],
        common_carry: Some("(1; 2; 3)"),
        remainders: &["(-5; 1; 5)", "(-5; 4; 7)"],
        transformants: &["(2; 4; 6)"],
        new_images: &["(3; 5; 7)"],
    },
    Case {
        name: "F3",
        form: Form::F,
        operands: &["7", "5"],
        radices: &["3", "4"],
        images: &["4"],
        rates: &["(1; 2; 3)"],
        partial_carries: &["(2; 2; 2)", "(1; 1; 1)"],
        common_carry: Some("(1; 1; 1)"),
        remainders: &["(4; 4; 4)", "(1; 1; 1)"],
        transformants: &["(1; 2; 3)"],
        new_images: &["(5; 6; 7)"],
    },
    Case {
        name: "F4",
        form: Form::F,
        operands: &["7", "10"],
        radices: &["(2; 3; 4)", "(3; 3; 5)"],
        images: &["0"],
        rates: &["(1; 2; 3)"],
        partial_carries: &["(1; 2; 3)", "(2; 3; 3)"],
        common_carry: Some("(1; 2; 3)"),
        remainders: &["(-5; 1; 5)", "(-5; 4; 7)"],
        transformants: &["(1; 4; 9)"],
        new_images: &["(1; 4; 9)"],
    },
    Case {
        name: "F5",
        form: Form::F,
        operands: &["(4; 7; 9)", "(6; 10; 12)"],
        radices: &["(2; 3; 4)", "(3; 3; 5)"],
        images: &["(1; 2; 2)"],
        rates: &["(1; 2; 3)"],
        partial_carries: &["(1; 2; 4)", "(1; 3; 4)"],
        common_carry: Some("(1; 2; 4)"),
        remainders: &["(-12; 1; 7)", "(-14; 4; 9)"],
        transformants: &["(1; 4; 12)"],
        new_images: &["(2; 6; 14)"],
    },
    // M: two operands, two images.
    Case {
        name: "M1",
        form: Form::M,
        operands: &["(4; 7; 9)", "(5; 9; 13)"],
        radices: &["3", "4"],
        images: &["0", "0"],
        rates: &["2", "5"],
        partial_carries: &["(1; 2; 3)", "(1; 2; 3)"],
        common_carry: Some("(1; 2; 3)"),
        remainders: &["(-5; 1; 6)", "(-7; 1; 9)"],
        transformants: &["(2; 4; 6)", "(5; 10; 15)"],
        new_images: &["(2; 4; 6)", "(5; 10; 15)"],
    },
    Case {
        name: "M2",
        form: Form::M,
        operands: &["7", "10"],
        radices: &["(2; 3; 4)", "(3; 3; 5)"],
        images: &["1", "0"],
        rates: &["2", "5"],
        partial_carries: &["(1; 2; 3)", "(2; 3; 3)"],
        common_carry: Some("(1; 2; 3)"),
        remainders: &["(-5; 1; 5)", "(-5; 4; 7)"],
        transformants: &["(2; 4; 6)", "(5; 10; 15)"],
        new_images: &["(3; 5; 7)", "(5; 10; 15)"],
    },
    Case {
        name: "M3",
        form: Form::M,
        operands: &["7", "5"],
        radices: &["3", "4"],
        images: &["4", "0"],
        rates: &["(1; 2; 3)", "(2; 2; 2)"],
        partial_carries: &["(2; 2; 2)", "(1; 1; 1)"],
        common_carry: Some("(1; 1; 1)"),
        remainders: &["(4; 4; 4)", "(1; 1; 1)"],
        transformants: &["(1; 2; 3)", "(2; 2; 2)"],
        new_images: &["(5; 6; 7)", "(2; 2; 2)"],
    },
    Case {
        name: "M4",
        form: Form::M,
        operands: &["7", "10"],
        radices: &["(2; 3; 4)", "(3; 3; 5)"],
        images: &["0", "0"],
        rates: &["(1; 2; 3)", "(0; 1; 2)"],
        partial_carries: &["(1; 2; 3)", "(2; 3; 3)"],
        common_carry: Some("(1; 2; 3)"),
        remainders: &["(-5; 1; 5)", "(-5; 4; 7)"],
        transformants: &["(1; 4; 9)", "(0; 2; 6)"],
        new_images: &["(1; 4; 9)", "(0; 2; 6)"],
    },
    Case {
        name: "M5",
        form: Form::M,
        operands: &["(4; 7; 9)", "(6; 10; 12)"],
        radices: &["(2; 3; 4)", "(3; 3; 5)"],
        images: &["(1; 2; 2)", "0"],
        rates: &["(1; 2; 3)", "(2; 2; 3)"],
        partial_carries: &["(1; 2; 4)", "(1; 3; 4)"],
        common_carry: Some("(1; 2; 4)"),
        remainders: &["(-12; 1; 7)", "(-14; 4; 9)"],
        transformants: &["(1; 4; 12)", "(2; 4; 12)"],
        new_images: &["(2; 6; 14)", "(2; 4; 12)"],
    },
];

pub fn case(name: &str) -> &'static Case {
    CASES.iter().find(|c| c.name == name).unwrap_or_else(|| panic!("no case {name}"))
}

fn parse(xs: &[&str]) -> Vec<FuzzyScalar> {
    xs.iter().map(|s| s.parse().unwrap_or_else(|e| panic!("bad literal {s}: {e}"))).collect()
}

pub fn evaluate(c: &Case) -> Result<Transform<FuzzyScalar>, String> {
    apply(c.form, &parse(c.operands), &parse(c.images), &parse(c.radices), &parse(c.rates), &Options::default())
        .map_err(|e| format!("{}: {e}", c.name))
}

/// Compares every quantity of the case; the error names the first mismatch.
pub fn check(c: &Case) -> Result<(), String> {
    let t = evaluate(c)?;
    let expect = |what: &str, got: &[FuzzyScalar], want: &[&str]| {
        if got == parse(want).as_slice() {
            Ok(())
        } else {
            let got: Vec<String> = got.iter().map(ToString::to_string).collect();
            Err(format!("{} {what}: got {got:?}, want {want:?}", c.name))
        }
    };
    expect("partial carries", &t.partial_carries, c.partial_carries)?;
    expect("common carry", t.common_carry.as_slice(), c.common_carry.as_slice())?;
    expect("remainders", &t.remainders, c.remainders)?;
    expect("transformants", &t.transformants, c.transformants)?;
    expect("image cardinals", &t.images, c.new_images)
}
