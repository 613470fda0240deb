//! Brute-force reference evaluators.
//!
//! Nothing here calls the arithmetic in [`crate::fuznum`]; the oracle walks
//! support pairs itself, so agreement with the production path is evidence
//! rather than a tautology. Only the value types are shared.

use num_rational::Ratio;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::carry::common_carry_dfn;
use crate::fuznum::{dfn_zadeh_binary, BinaryOp, DiscreteFuzzyNumber, FuzzyScalar, Grade};
use crate::fuzzy_cso::{apply, apply_l};
use crate::operator::{Form, Options, RemainderMode};

/// Literal sup-min evaluation of `op` over every pair of support values.
pub fn zadeh_oracle<F>(a: &DiscreteFuzzyNumber, b: &DiscreteFuzzyNumber, op: F) -> DiscreteFuzzyNumber
where
    F: Fn(i64, i64) -> i64,
{
    joint_oracle(&[a, b], |xs| op(xs[0], xs[1]))
}

/// Sup-min evaluation of an n-ary function over the full cartesian product
/// of the argument supports.
pub fn joint_oracle<F>(args: &[&DiscreteFuzzyNumber], f: F) -> DiscreteFuzzyNumber
where
    F: Fn(&[i64]) -> i64,
{
    let supports: Vec<Vec<(i64, Grade)>> = args.iter().map(|a| a.iter().collect()).collect();
    let mut images: Vec<(i64, Grade)> = Vec::new();
    let mut index = vec![0usize; supports.len()];
    let mut values = vec![0i64; supports.len()];
    'outer: loop {
        let mut grade = Grade::ONE;
        for (k, &i) in index.iter().enumerate() {
            let (v, g) = supports[k][i];
            values[k] = v;
            if g < grade {
                grade = g;
            }
        }
        images.push((f(&values), grade));

        for k in (0..index.len()).rev() {
            index[k] += 1;
            if index[k] < supports[k].len() {
                continue 'outer;
            }
            index[k] = 0;
        }
        break;
    }

    images.sort_by_key(|x| x.0);
    let mut points: Vec<(i64, Grade)> = Vec::new();
    for (z, g) in images {
        match points.last_mut() {
            Some((last, best)) if *last == z => {
                if g > *best {
                    *best = g;
                }
            }
            _ => points.push((z, g)),
        }
    }
    DiscreteFuzzyNumber::new(points).expect("sup-min image of normal numbers is normal")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IntervalOp {
    Add,
    Sub,
}

/// Checks `result` against interval arithmetic on the α-cuts of `a` and `b`
/// at every level, exactly. Levels outside `[0, 1]` make the check fail.
pub fn alpha_cut_check(
    a: &crate::fuznum::TriangularFuzzyNumber,
    b: &crate::fuznum::TriangularFuzzyNumber,
    op: IntervalOp,
    result: &crate::fuznum::TriangularFuzzyNumber,
    levels: &[Ratio<i64>],
) -> bool {
    type Q = Ratio<i128>;
    let cut = |t: &crate::fuznum::TriangularFuzzyNumber, alpha: Q| -> (Q, Q) {
        let (lo, m, hi) = (Q::from(t.lower() as i128), Q::from(t.mode() as i128), Q::from(t.upper() as i128));
        (lo + alpha * (m - lo), hi - alpha * (hi - m))
    };
    levels.iter().all(|level| {
        let alpha = Q::new(*level.numer() as i128, *level.denom() as i128);
        if alpha < Q::from(0) || alpha > Q::from(1) {
            return false;
        }
        let ((a_lo, a_hi), (b_lo, b_hi)) = (cut(a, alpha), cut(b, alpha));
        let expected = match op {
            IntervalOp::Add => (a_lo + b_lo, a_hi + b_hi),
            IntervalOp::Sub => (a_lo - b_hi, a_hi - b_lo),
        };
        cut(result, alpha) == expected
    })
}

/// A random normal discrete fuzzy number with `1..=max_len` support values
/// drawn from `lo..=hi`.
pub fn random_dfn<R: Rng>(rng: &mut R, max_len: usize, lo: i64, hi: i64) -> DiscreteFuzzyNumber {
    let span = (hi - lo + 1) as usize;
    let len = rng.gen_range(1..=max_len.min(span));
    let mut values: Vec<i64> = (lo..=hi).collect();
    values.shuffle(rng);
    values.truncate(len);
    let peak = rng.gen_range(0..len);
    let points = values.into_iter().enumerate().map(|(i, v)| {
        let g = if i == peak { Grade::ONE } else { Grade::new(rng.gen_range(1..=100), 100).unwrap() };
        (v, g)
    });
    DiscreteFuzzyNumber::new(points).expect("distinct values with one full grade")
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteReport {
    pub cases: u64,
    pub passed: u64,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.passed == self.cases
    }
}

impl std::fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{} ok", self.passed, self.cases)
    }
}

fn oracle_fn(op: BinaryOp) -> fn(i64, i64) -> i64 {
    match op {
        BinaryOp::Add => |x, y| x + y,
        BinaryOp::Sub => |x, y| x - y,
        BinaryOp::Mul => |x, y| x * y,
        BinaryOp::FloorDiv => |x, y| x / y,
        BinaryOp::Rem => |x, y| x - (x / y) * y,
    }
}

/// Randomized agreement between the production discrete path and the
/// oracle. Each case checks one extension of a random integer operation,
/// one discrete L application in both remainder modes, and one discrete
/// D, F or M application. Deterministic in `seed`.
pub fn equivalence_suite(seed: u64, cases: u64, max_support: usize) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport { cases, ..Default::default() };
    for case in 0..cases {
        match run_case(&mut rng, max_support) {
            Ok(()) => report.passed += 1,
            Err(msg) => report.failures.push(format!("case {case}: {msg}")),
        }
    }
    report
}

fn run_case(rng: &mut ChaCha8Rng, max_support: usize) -> Result<(), String> {
    let expect = |what: &str, got: &DiscreteFuzzyNumber, want: &DiscreteFuzzyNumber| {
        if got == want {
            Ok(())
        } else {
            Err(format!("{what}: production {got} vs oracle {want}"))
        }
    };
    let err = |e: crate::error::Error| e.to_string();

    // Binary extension.
    let op = BinaryOp::ALL[rng.gen_range(0..BinaryOp::ALL.len())];
    let a = random_dfn(rng, max_support, 0, 200);
    let b = match op {
        BinaryOp::FloorDiv | BinaryOp::Rem => random_dfn(rng, max_support, 1, 40),
        _ => random_dfn(rng, max_support, 0, 200),
    };
    expect(
        &format!("{op:?} {a} {b}"),
        &dfn_zadeh_binary(op, &a, &b).map_err(err)?,
        &zadeh_oracle(&a, &b, oracle_fn(op)),
    )?;

    // L-operator, every step against its own oracle.
    let n = random_dfn(rng, max_support, 0, 300);
    let radix = random_dfn(rng, max_support.min(8), 1, 12);
    let rate = random_dfn(rng, max_support, 0, 10);
    let image = random_dfn(rng, max_support, 0, 50);
    let (ns, rs, qs, is) = (n.clone().into(), radix.clone().into(), rate.clone().into(), image.clone().into());
    let correlated = apply_l(&ns, &is, &rs, &qs, &Options::default()).map_err(err)?;
    let extension_opts = Options { remainder_mode: RemainderMode::Extension, clamp_negative: false };
    let extension = apply_l(&ns, &is, &rs, &qs, &extension_opts).map_err(err)?;

    let carry = zadeh_oracle(&n, &radix, |t, s| t / s);
    let transformant = zadeh_oracle(&carry, &rate, |g, v| g * v);
    let new_image = zadeh_oracle(&image, &transformant, |s, f| s + f);
    let rem_correlated = zadeh_oracle(&n, &radix, |t, s| t - (t / s) * s);
    let rem_extension = zadeh_oracle(&n, &zadeh_oracle(&carry, &radix, |g, s| g * s), |t, x| t - x);
    for t in [&correlated, &extension] {
        expect("L carry", discrete(&t.partial_carries[0])?, &carry)?;
        expect("L transformant", discrete(&t.transformants[0])?, &transformant)?;
        expect("L image", discrete(&t.images[0])?, &new_image)?;
    }
    expect("L correlated remainder", discrete(&correlated.remainders[0])?, &rem_correlated)?;
    expect("L extension remainder", discrete(&extension.remainders[0])?, &rem_extension)?;

    // A D, F or M operator: partial carries, formation, then every later step.
    let form = [Form::D, Form::F, Form::M][rng.gen_range(0..3)];
    let (w_count, v_count) = match form {
        Form::D => (1, 2),
        Form::F => (2, 1),
        _ => (2, 2),
    };
    let operands: Vec<_> = (0..w_count).map(|_| random_dfn(rng, max_support, 0, 120)).collect();
    let radices: Vec<_> = (0..w_count).map(|_| random_dfn(rng, 4, 1, 6)).collect();
    let rates: Vec<_> = (0..v_count).map(|_| random_dfn(rng, max_support, 0, 10)).collect();
    let images: Vec<_> = (0..v_count).map(|_| random_dfn(rng, max_support, 0, 50)).collect();
    let scalars = |xs: &[DiscreteFuzzyNumber]| xs.iter().cloned().map(FuzzyScalar::from).collect::<Vec<_>>();
    let t =
        apply(form, &scalars(&operands), &scalars(&images), &scalars(&radices), &scalars(&rates), &Options::default())
            .map_err(err)?;

    let partials: Vec<DiscreteFuzzyNumber> =
        operands.iter().zip(&radices).map(|(n, r)| zadeh_oracle(n, r, |t, s| t / s)).collect();
    for (w, p) in partials.iter().enumerate() {
        expect(&format!("{form} partial carry"), discrete(&t.partial_carries[w])?, p)?;
    }
    let carry = if w_count == 1 {
        expect(
            &format!("{form} remainder"),
            discrete(&t.remainders[0])?,
            &zadeh_oracle(&operands[0], &radices[0], |t, s| t - (t / s) * s),
        )?;
        partials[0].clone()
    } else {
        let common = common_carry_dfn(&partials).map_err(err)?;
        let formed = t.common_carry.as_ref().ok_or_else(|| format!("{form} without common carry"))?;
        expect(&format!("{form} common carry"), discrete(formed)?, &common)?;
        for w in 0..w_count {
            let taken = zadeh_oracle(&common, &radices[w], |g, s| g * s);
            let rem = zadeh_oracle(&operands[w], &taken, |t, x| t - x);
            expect(&format!("{form} remainder"), discrete(&t.remainders[w])?, &rem)?;
        }
        common
    };
    for v in 0..v_count {
        let transformant = zadeh_oracle(&carry, &rates[v], |g, r| g * r);
        expect(&format!("{form} transformant"), discrete(&t.transformants[v])?, &transformant)?;
        let image = zadeh_oracle(&images[v], &transformant, |s, q| s + q);
        expect(&format!("{form} image"), discrete(&t.images[v])?, &image)?;
    }
    Ok(())
}

fn discrete(s: &FuzzyScalar) -> Result<&DiscreteFuzzyNumber, String> {
    match s {
        FuzzyScalar::Discrete(d) => Ok(d),
        other => Err(format!("expected a discrete result, got {other}")),
    }
}
