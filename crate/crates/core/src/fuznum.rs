//! Fuzzy cardinal representations and their arithmetic.
//!
//! Three shapes of cardinal are supported: crisp naturals, discrete fuzzy
//! numbers (a finite support of integers carrying membership grades) and
//! triangular fuzzy numbers `(lower; mode; upper)`. Discrete arithmetic is the
//! sup-min extension of the underlying integer operation; triangular
//! arithmetic is componentwise on the three defining points.
//!
//! Supports and triangle bounds are signed because subtracting a carry
//! multiple from a fuzzy cardinal can push the lower end below zero. Callers
//! that need naturals get a [`Warning`] rather than a failure.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::warning::Warning;

/// A membership grade in `(0, 1]`, stored as an exact rational.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Grade(Ratio<u64>);

impl Grade {
    pub const ONE: Grade = Grade(Ratio::new_raw(1, 1));

    pub fn new(numer: u64, denom: u64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::Grade(format!("{numer}/{denom} has a zero denominator")));
        }
        if numer == 0 || numer > denom {
            return Err(Error::Grade(format!("{numer}/{denom} is outside (0, 1]")));
        }
        Ok(Grade(Ratio::new(numer, denom)))
    }

    pub fn from_ratio(r: Ratio<u64>) -> Result<Self> {
        Self::new(*r.numer(), *r.denom())
    }

    pub fn ratio(self) -> Ratio<u64> {
        self.0
    }

    pub fn is_one(self) -> bool {
        self == Self::ONE
    }

    pub fn to_f64(self) -> f64 {
        *self.0.numer() as f64 / *self.0.denom() as f64
    }
}

impl fmt::Display for Grade {
    /// Terminating fractions print as decimals, anything else as `n/d`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (numer, denom) = (*self.0.numer(), *self.0.denom());
        if denom == 1 {
            return write!(f, "{numer}");
        }
        let (mut rest, mut twos, mut fives) = (denom, 0u32, 0u32);
        while rest % 2 == 0 {
            rest /= 2;
            twos += 1;
        }
        while rest % 5 == 0 {
            rest /= 5;
            fives += 1;
        }
        let places = twos.max(fives);
        if rest != 1 || places > 38 {
            return write!(f, "{numer}/{denom}");
        }
        let scaled = numer as u128 * (10u128.pow(places) / denom as u128);
        write!(f, "0.{:0>width$}", scaled, width = places as usize)
    }
}

impl FromStr for Grade {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = |reason: &str| Error::Parse { input: s.to_string(), reason: reason.to_string() };
        if let Some((n, d)) = t.split_once('/') {
            let n: u64 = n.trim().parse().map_err(|_| bad("bad numerator"))?;
            let d: u64 = d.trim().parse().map_err(|_| bad("bad denominator"))?;
            return Grade::new(n, d);
        }
        let (int, frac) = t.split_once('.').unwrap_or((t, ""));
        if int.is_empty() && frac.is_empty() {
            return Err(bad("empty grade"));
        }
        if !int.chars().all(|c| c.is_ascii_digit()) || !frac.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad("expected a decimal or n/d fraction"));
        }
        if frac.len() > 18 {
            return Err(bad("more than 18 fractional digits"));
        }
        let int: u64 = if int.is_empty() { 0 } else { int.parse().map_err(|_| bad("integer part too large"))? };
        let denom = 10u64.pow(frac.len() as u32);
        let frac_val: u64 = if frac.is_empty() { 0 } else { frac.parse().unwrap() };
        let numer =
            int.checked_mul(denom).and_then(|v| v.checked_add(frac_val)).ok_or_else(|| bad("grade too large"))?;
        Grade::new(numer, denom)
    }
}

/// A triangular fuzzy number `(lower; mode; upper)` with integer points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TriangularFuzzyNumber {
    lower: i64,
    mode: i64,
    upper: i64,
}

impl TriangularFuzzyNumber {
    pub fn new(lower: i64, mode: i64, upper: i64) -> Result<Self> {
        if lower <= mode && mode <= upper {
            Ok(Self { lower, mode, upper })
        } else {
            Err(Error::Invariant(format!("triangle ({lower}; {mode}; {upper}) is not ordered")))
        }
    }

    /// Degenerate triangle standing for a crisp value.
    pub fn crisp(x: i64) -> Self {
        Self { lower: x, mode: x, upper: x }
    }

    // Callers guarantee ordering; every arithmetic rule below preserves it.
    fn from_ordered(lower: i64, mode: i64, upper: i64) -> Self {
        debug_assert!(lower <= mode && mode <= upper, "({lower}; {mode}; {upper})");
        Self { lower, mode, upper }
    }

    pub fn lower(&self) -> i64 {
        self.lower
    }

    pub fn mode(&self) -> i64 {
        self.mode
    }

    pub fn upper(&self) -> i64 {
        self.upper
    }

    pub fn is_crisp(&self) -> bool {
        self.lower == self.upper
    }

    pub fn is_nonnegative(&self) -> bool {
        self.lower >= 0
    }

    /// Piecewise-linear membership. Zero-width flanks give grade 1 at the
    /// shared point.
    pub fn membership(&self, x: f64) -> f64 {
        let (a, m, b) = (self.lower as f64, self.mode as f64, self.upper as f64);
        if x < a || x > b {
            0.0
        } else if x == m {
            1.0
        } else if x < m {
            (x - a) / (m - a)
        } else {
            (b - x) / (b - m)
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        Ok(Self::from_ordered(add(self.lower, rhs.lower)?, add(self.mode, rhs.mode)?, add(self.upper, rhs.upper)?))
    }

    /// `(a - b'; m - m'; b - a')`: the bounds swap roles on the subtrahend.
    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        Ok(Self::from_ordered(sub(self.lower, rhs.upper)?, sub(self.mode, rhs.mode)?, sub(self.upper, rhs.lower)?))
    }

    /// Componentwise product; only defined on nonnegative triangles.
    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        if !self.is_nonnegative() || !rhs.is_nonnegative() {
            return Err(Error::Domain(format!("triangular product needs nonnegative operands, got {self} * {rhs}")));
        }
        Ok(Self::from_ordered(mul(self.lower, rhs.lower)?, mul(self.mode, rhs.mode)?, mul(self.upper, rhs.upper)?))
    }

    pub fn checked_scale(&self, c: u64) -> Result<Self> {
        let c = i64::try_from(c).map_err(|_| Error::Overflow("triangular scale"))?;
        Ok(Self::from_ordered(mul(self.lower, c)?, mul(self.mode, c)?, mul(self.upper, c)?))
    }

    /// Carry of a triangular dividend over a triangular radix:
    /// `(⌊a/b'⌋; ⌊m/m'⌋; ⌊b/a'⌋)`.
    pub fn floor_div(&self, radix: &Self) -> Result<Self> {
        if radix.lower < 1 {
            return Err(Error::InvalidRadix(format!("triangular radix {radix} reaches below 1")));
        }
        if !self.is_nonnegative() {
            return Err(Error::Domain(format!("cannot take a carry from negative cardinal {self}")));
        }
        Ok(Self::from_ordered(self.lower / radix.upper, self.mode / radix.mode, self.upper / radix.lower))
    }

    /// Raise every point to at least zero.
    pub fn clamp_nonnegative(&self) -> Self {
        Self::from_ordered(self.lower.max(0), self.mode.max(0), self.upper.max(0))
    }
}

impl fmt::Display for TriangularFuzzyNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {}; {})", self.lower, self.mode, self.upper)
    }
}

fn add(x: i64, y: i64) -> Result<i64> {
    x.checked_add(y).ok_or(Error::Overflow("addition"))
}

fn sub(x: i64, y: i64) -> Result<i64> {
    x.checked_sub(y).ok_or(Error::Overflow("subtraction"))
}

fn mul(x: i64, y: i64) -> Result<i64> {
    x.checked_mul(y).ok_or(Error::Overflow("multiplication"))
}

/// A normal discrete fuzzy number: a finite support of integers, each with a
/// grade in `(0, 1]`, at least one of them exactly 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscreteFuzzyNumber {
    points: BTreeMap<i64, Grade>,
}

impl DiscreteFuzzyNumber {
    pub fn new<I>(points: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, Grade)>,
    {
        let mut map = BTreeMap::new();
        for (value, grade) in points {
            if map.insert(value, grade).is_some() {
                return Err(Error::Invariant(format!("support value {value} repeated")));
            }
        }
        Self::from_map(map)
    }

    pub fn from_map(points: BTreeMap<i64, Grade>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::Invariant("empty support".into()));
        }
        if !points.values().any(|g| g.is_one()) {
            return Err(Error::Invariant("not normal: no support value has grade 1".into()));
        }
        Ok(Self { points })
    }

    pub fn crisp(x: i64) -> Self {
        Self { points: BTreeMap::from([(x, Grade::ONE)]) }
    }

    pub fn points(&self) -> &BTreeMap<i64, Grade> {
        &self.points
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, Grade)> + '_ {
        self.points.iter().map(|(v, g)| (*v, *g))
    }

    pub fn grade(&self, x: i64) -> Option<Grade> {
        self.points.get(&x).copied()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// The smallest support value carrying grade 1.
    pub fn mode(&self) -> i64 {
        self.iter().find(|(_, g)| g.is_one()).map(|(v, _)| v).expect("normal by construction")
    }

    pub fn min_value(&self) -> i64 {
        *self.points.keys().next().expect("nonempty by construction")
    }

    pub fn max_value(&self) -> i64 {
        *self.points.keys().next_back().expect("nonempty by construction")
    }

    pub fn is_crisp(&self) -> bool {
        self.points.len() == 1
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.points.keys().any(|v| other.points.contains_key(v))
    }

    /// Image under `f`; values that collide keep the larger grade.
    pub fn map_support<F>(&self, f: F) -> Result<Self>
    where
        F: Fn(i64) -> Result<i64>,
    {
        let mut out: BTreeMap<i64, Grade> = BTreeMap::new();
        for (v, g) in self.iter() {
            raise(&mut out, f(v)?, g);
        }
        Self::from_map(out)
    }

    /// Collapse every negative support value onto zero.
    pub fn clamp_nonnegative(&self) -> Self {
        self.map_support(|v| Ok(v.max(0))).expect("clamping keeps a normal support")
    }
}

impl fmt::Display for DiscreteFuzzyNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (v, g)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}|{g}")?;
        }
        f.write_str("}")
    }
}

fn raise(map: &mut BTreeMap<i64, Grade>, key: i64, grade: Grade) {
    map.entry(key).and_modify(|g| *g = (*g).max(grade)).or_insert(grade);
}

/// Integer operations liftable to discrete fuzzy numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BinaryOp {
    Add,
    Sub,
    Mul,
    /// `⌊x / y⌋` on naturals with `y ≥ 1`.
    FloorDiv,
    /// `x mod y` on naturals with `y ≥ 1`.
    Rem,
}

impl BinaryOp {
    pub const ALL: [BinaryOp; 5] = [BinaryOp::Add, BinaryOp::Sub, BinaryOp::Mul, BinaryOp::FloorDiv, BinaryOp::Rem];

    pub fn apply(self, x: i64, y: i64) -> Result<i64> {
        match self {
            BinaryOp::Add => add(x, y),
            BinaryOp::Sub => sub(x, y),
            BinaryOp::Mul => mul(x, y),
            BinaryOp::FloorDiv | BinaryOp::Rem => {
                if y < 1 {
                    return Err(Error::InvalidRadix(format!("radix {y} is below 1")));
                }
                if x < 0 {
                    return Err(Error::Domain(format!("cannot divide negative cardinal {x}")));
                }
                Ok(if self == BinaryOp::FloorDiv { x / y } else { x % y })
            }
        }
    }
}

/// Sup-min extension of an arbitrary fallible integer operation.
pub fn zadeh_binary<F>(a: &DiscreteFuzzyNumber, b: &DiscreteFuzzyNumber, op: F) -> Result<DiscreteFuzzyNumber>
where
    F: Fn(i64, i64) -> Result<i64>,
{
    let mut out: BTreeMap<i64, Grade> = BTreeMap::new();
    for (x, gx) in a.iter() {
        for (y, gy) in b.iter() {
            raise(&mut out, op(x, y)?, gx.min(gy));
        }
    }
    DiscreteFuzzyNumber::from_map(out)
}

pub fn dfn_zadeh_binary(op: BinaryOp, a: &DiscreteFuzzyNumber, b: &DiscreteFuzzyNumber) -> Result<DiscreteFuzzyNumber> {
    zadeh_binary(a, b, |x, y| op.apply(x, y))
}

/// As [`dfn_zadeh_binary`], flagging a result whose support leaves the naturals.
pub fn dfn_zadeh_natural(
    op: BinaryOp,
    a: &DiscreteFuzzyNumber,
    b: &DiscreteFuzzyNumber,
) -> Result<(DiscreteFuzzyNumber, Option<Warning>)> {
    let out = dfn_zadeh_binary(op, a, b)?;
    let warning = (out.min_value() < 0).then(|| Warning::NegativeSupport { min: out.min_value() });
    Ok((out, warning))
}

/// Carry of a discrete cardinal over a crisp or discrete radix.
pub fn dfn_floor_div(a: &DiscreteFuzzyNumber, radix: &FuzzyScalar) -> Result<DiscreteFuzzyNumber> {
    match radix {
        FuzzyScalar::Crisp(0) => Err(Error::InvalidRadix("radix 0".into())),
        FuzzyScalar::Crisp(n) => {
            let n = i64::try_from(*n).map_err(|_| Error::Overflow("radix"))?;
            a.map_support(|t| BinaryOp::FloorDiv.apply(t, n))
        }
        FuzzyScalar::Discrete(n) => {
            if n.min_value() < 1 {
                return Err(Error::InvalidRadix(format!("discrete radix {n} reaches below 1")));
            }
            dfn_zadeh_binary(BinaryOp::FloorDiv, a, n)
        }
        FuzzyScalar::Triangular(_) => Err(Error::RepresentationMix),
    }
}

/// Correlated remainder `t ↦ t mod n`.
pub fn dfn_mod(a: &DiscreteFuzzyNumber, n: u64) -> Result<DiscreteFuzzyNumber> {
    if n == 0 {
        return Err(Error::InvalidRadix("radix 0".into()));
    }
    let n = i64::try_from(n).map_err(|_| Error::Overflow("radix"))?;
    a.map_support(|t| BinaryOp::Rem.apply(t, n))
}

/// Which representation a [`FuzzyScalar`] uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Crisp,
    Discrete,
    Triangular,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Crisp => "crisp",
            Family::Discrete => "discrete",
            Family::Triangular => "triangular",
        })
    }
}

/// A cardinal, radix or conversion rate in any of the three representations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FuzzyScalar {
    Crisp(u64),
    Discrete(DiscreteFuzzyNumber),
    Triangular(TriangularFuzzyNumber),
}

impl FuzzyScalar {
    pub fn family(&self) -> Family {
        match self {
            FuzzyScalar::Crisp(_) => Family::Crisp,
            FuzzyScalar::Discrete(_) => Family::Discrete,
            FuzzyScalar::Triangular(_) => Family::Triangular,
        }
    }

    /// Lift into the triangular family; crisp values become degenerate.
    pub fn to_triangular(&self) -> Result<TriangularFuzzyNumber> {
        match self {
            FuzzyScalar::Crisp(x) => Ok(TriangularFuzzyNumber::crisp(to_i64(*x)?)),
            FuzzyScalar::Triangular(t) => Ok(*t),
            FuzzyScalar::Discrete(_) => Err(Error::RepresentationMix),
        }
    }

    /// Lift into the discrete family; crisp values become singletons.
    pub fn to_discrete(&self) -> Result<DiscreteFuzzyNumber> {
        match self {
            FuzzyScalar::Crisp(x) => Ok(DiscreteFuzzyNumber::crisp(to_i64(*x)?)),
            FuzzyScalar::Discrete(d) => Ok(d.clone()),
            FuzzyScalar::Triangular(_) => Err(Error::RepresentationMix),
        }
    }

    /// Smallest value the scalar can take.
    pub fn min_value(&self) -> i128 {
        match self {
            FuzzyScalar::Crisp(x) => *x as i128,
            FuzzyScalar::Discrete(d) => d.min_value() as i128,
            FuzzyScalar::Triangular(t) => t.lower() as i128,
        }
    }

    /// The crisp value if the scalar carries no uncertainty.
    pub fn as_crisp(&self) -> Option<i128> {
        match self {
            FuzzyScalar::Crisp(x) => Some(*x as i128),
            FuzzyScalar::Discrete(d) if d.is_crisp() => Some(d.min_value() as i128),
            FuzzyScalar::Triangular(t) if t.is_crisp() => Some(t.lower() as i128),
            _ => None,
        }
    }
}

pub(crate) fn to_i64(x: u64) -> Result<i64> {
    i64::try_from(x).map_err(|_| Error::Overflow("crisp lift"))
}

impl From<u64> for FuzzyScalar {
    fn from(x: u64) -> Self {
        FuzzyScalar::Crisp(x)
    }
}

impl From<TriangularFuzzyNumber> for FuzzyScalar {
    fn from(t: TriangularFuzzyNumber) -> Self {
        FuzzyScalar::Triangular(t)
    }
}

impl From<DiscreteFuzzyNumber> for FuzzyScalar {
    fn from(d: DiscreteFuzzyNumber) -> Self {
        FuzzyScalar::Discrete(d)
    }
}

impl fmt::Display for FuzzyScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FuzzyScalar::Crisp(x) => write!(f, "{x}"),
            FuzzyScalar::Discrete(d) => d.fmt(f),
            FuzzyScalar::Triangular(t) => t.fmt(f),
        }
    }
}

impl serde::Serialize for FuzzyScalar {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

// Literal syntax:
//   crisp      := digits
//   triangular := "(" int ";" int ";" int ")"
//   discrete   := "{" int "|" grade ("," int "|" grade)* "}"
// Integers may carry a leading '-' or U+2212; whitespace is free between tokens.

fn parse_int(s: &str, whole: &str) -> Result<i64> {
    let t = s.trim();
    let t = t.strip_prefix('\u{2212}').map(|rest| format!("-{rest}")).unwrap_or_else(|| t.to_string());
    t.parse()
        .map_err(|_| Error::Parse { input: whole.to_string(), reason: format!("`{}` is not an integer", s.trim()) })
}

impl FromStr for TriangularFuzzyNumber {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().strip_prefix('(').and_then(|r| r.strip_suffix(')')).ok_or_else(|| Error::Parse {
            input: s.to_string(),
            reason: "triangular literal must look like (a; m; b)".into(),
        })?;
        let parts: Vec<&str> = inner.split(';').collect();
        if parts.len() != 3 {
            return Err(Error::Parse {
                input: s.to_string(),
                reason: format!("expected 3 ';'-separated points, found {}", parts.len()),
            });
        }
        let [a, m, b] = [parts[0], parts[1], parts[2]].map(|p| parse_int(p, s));
        TriangularFuzzyNumber::new(a?, m?, b?)
    }
}

impl FromStr for DiscreteFuzzyNumber {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().strip_prefix('{').and_then(|r| r.strip_suffix('}')).ok_or_else(|| Error::Parse {
            input: s.to_string(),
            reason: "discrete literal must look like {v|grade, ...}".into(),
        })?;
        let mut points = Vec::new();
        for item in inner.split(',') {
            let (v, g) = item.split_once('|').ok_or_else(|| Error::Parse {
                input: s.to_string(),
                reason: format!("`{}` is not a v|grade pair", item.trim()),
            })?;
            points.push((parse_int(v, s)?, g.parse::<Grade>()?));
        }
        DiscreteFuzzyNumber::new(points)
    }
}

impl FromStr for FuzzyScalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.starts_with('(') {
            t.parse().map(FuzzyScalar::Triangular)
        } else if t.starts_with('{') {
            t.parse().map(FuzzyScalar::Discrete)
        } else {
            t.parse().map(FuzzyScalar::Crisp).map_err(|_| Error::Parse {
                input: s.to_string(),
                reason: "expected a natural, (a; m; b) or {v|grade, ...}".into(),
            })
        }
    }
}
