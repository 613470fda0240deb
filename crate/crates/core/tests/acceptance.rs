//! Acceptance suite. Runs every criterion with its own time budget and
//! prints one PASS/FAIL line each; exits nonzero if any criterion fails.

mod common;

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use fuzzy_sns::carry::{common_carry_dfn, common_carry_tri};
use fuzzy_sns::cli::{parse_scenario, scenario_to_toml};
use fuzzy_sns::crisp_cso::{crisp_d, crisp_f, crisp_l, crisp_m};
use fuzzy_sns::fuzzy_cso::{apply, lift_crisp};
use fuzzy_sns::operator::FuzzinessPattern;
use fuzzy_sns::oracle::{equivalence_suite, random_dfn};
use fuzzy_sns::{
    DiscreteFuzzyNumber, Family, Form, FuzzyScalar, Grade, Multeity, OperatorSpec, Options, RemainderMode, Scenario,
    TriangularFuzzyNumber,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn crisp_baseline() -> Outcome {
    let t = crisp_l(7, 10, 3, 2).map_err(|e| e.to_string())?;
    let got = (t.partial_carries[0], t.remainders[0], t.transformants[0], t.images[0]);
    ensure(got == (2, 1, 4, 14), || format!("crisp L(7, 10, 3, 2) gave {got:?}"))?;

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..10_000 {
        let (n, radix) = (rng.gen_range(0..=1_000_000_000u64), rng.gen_range(1..=1_000_000u64));
        let t = crisp_l(n, 0, radix, 1).map_err(|e| e.to_string())?;
        let (p, rem) = (t.partial_carries[0], t.remainders[0]);
        ensure(p * radix + rem == n && rem < radix, || format!("N={n} n={radix}: p={p} rem={rem}"))?;
    }
    Ok("p=2 rem=1 q=4 N'_j=14; identity held on 10000 random cases".into())
}

fn valence<R: Rng>(rng: &mut R, form: Form) -> (usize, usize) {
    let many = |rng: &mut R| rng.gen_range(2..=3);
    match form {
        Form::L => (1, 1),
        Form::D => (1, many(rng)),
        Form::F => (many(rng), 1),
        Form::M => (many(rng), many(rng)),
    }
}

fn lift(x: u64, family: Family) -> FuzzyScalar {
    match family {
        Family::Triangular => TriangularFuzzyNumber::crisp(x as i64).into(),
        Family::Discrete => DiscreteFuzzyNumber::crisp(x as i64).into(),
        Family::Crisp => FuzzyScalar::Crisp(x),
    }
}

fn crisp_embedding() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut total = 0;
    for form in Form::ALL {
        for pattern in FuzzinessPattern::ALL {
            for _ in 0..1000 {
                let (w, v) = valence(&mut rng, form);
                let operands: Vec<u64> = (0..w).map(|_| rng.gen_range(0..1_000_000)).collect();
                let radices: Vec<u64> = (0..w).map(|_| rng.gen_range(1..1000)).collect();
                let images: Vec<u64> = (0..v).map(|_| rng.gen_range(0..1_000_000)).collect();
                let rates: Vec<u64> = (0..v).map(|_| rng.gen_range(0..100)).collect();
                let crisp = match form {
                    Form::L => crisp_l(operands[0], images[0], radices[0], rates[0]),
                    Form::D => crisp_d(operands[0], &images, radices[0], &rates),
                    Form::F => crisp_f(&operands, images[0], &radices, rates[0]),
                    Form::M => crisp_m(&operands, &images, &radices, &rates),
                }
                .map_err(|e| e.to_string())?;

                for family in [Family::Triangular, Family::Discrete] {
                    let lifted = |xs: &[u64], fuzzy: bool| -> Vec<FuzzyScalar> {
                        xs.iter().map(|&x| if fuzzy { lift(x, family) } else { FuzzyScalar::Crisp(x) }).collect()
                    };
                    let ops = lifted(&operands, pattern.fuzzy_cardinals());
                    let rads = lifted(&radices, pattern.fuzzy_radices());
                    let rts = lifted(&rates, pattern.fuzzy_rates());
                    let imgs = lifted(&images, false);
                    ensure(FuzzinessPattern::classify(&ops, &rads, &rts) == Some(pattern), || {
                        format!("{form} inputs do not classify as {pattern:?}")
                    })?;
                    let expected = lift_crisp(&crisp, family).map_err(|e| e.to_string())?;
                    let modes: &[RemainderMode] = match family {
                        Family::Discrete => &[RemainderMode::Correlated, RemainderMode::Extension],
                        _ => &[RemainderMode::Correlated],
                    };
                    for &remainder_mode in modes {
                        let opts = Options { remainder_mode, clamp_negative: false };
                        let got = apply(form, &ops, &imgs, &rads, &rts, &opts).map_err(|e| e.to_string())?;
                        ensure(got == expected, || {
                            format!("{form} {pattern:?} {family}: operands {operands:?} radices {radices:?} diverged")
                        })?;
                        total += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{total} degenerate applications matched crisp results (1000 per form and pattern)"))
}

fn oracle_equivalence() -> Outcome {
    let report = equivalence_suite(3, 10_000, 15);
    if report.all_passed() {
        Ok(format!("{report} with supports up to 15"))
    } else {
        Err(format!("{report}; first: {}", report.failures[0]))
    }
}

fn triangular_cases() -> Outcome {
    for c in common::CASES {
        common::check(c)?;
    }
    let t = common::evaluate(common::case("L1"))?;
    let want = ["(1; 2; 3)", "(-5; 1; 6)", "(2; 4; 6)"];
    let got = [&t.partial_carries[0], &t.remainders[0], &t.transformants[0]].map(ToString::to_string);
    ensure(got == want, || format!("fuzzy-cardinal L case gave {got:?}"))?;
    Ok(format!("{} hand-worked cases matched exactly", common::CASES.len()))
}

fn permutations<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head.clone());
            out.push(tail);
        }
    }
    out
}

fn random_tri<R: Rng>(rng: &mut R, lo: i64, hi: i64) -> TriangularFuzzyNumber {
    let mut v = [rng.gen_range(lo..=hi), rng.gen_range(lo..=hi), rng.gen_range(lo..=hi)];
    v.sort();
    TriangularFuzzyNumber::new(v[0], v[1], v[2]).unwrap()
}

fn common_carry_formation() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut orders = 0;
    for k in 1..=5 {
        for _ in 0..100 {
            let partials: Vec<TriangularFuzzyNumber> = (0..k).map(|_| random_tri(&mut rng, 0, 500)).collect();
            let min = |f: fn(&TriangularFuzzyNumber) -> i64| partials.iter().map(f).min().unwrap();
            let want = TriangularFuzzyNumber::new(
                min(TriangularFuzzyNumber::lower),
                min(TriangularFuzzyNumber::mode),
                min(TriangularFuzzyNumber::upper),
            )
            .unwrap();
            for order in permutations(&partials) {
                let got = common_carry_tri(&order).map_err(|e| e.to_string())?;
                ensure(got == want, || format!("{order:?} formed {got}, want {want}"))?;
                orders += 1;
            }
        }
    }

    let d = |s: &str| s.parse::<DiscreteFuzzyNumber>().unwrap();
    let disjoint = common_carry_dfn(&[d("{2|1}"), d("{5|0.5, 6|1}")]).map_err(|e| e.to_string())?;
    ensure(disjoint == d("{2|1}"), || format!("disjoint case formed {disjoint}"))?;
    let union = common_carry_dfn(&[d("{1|0.4, 2|1, 3|0.6}"), d("{2|0.7, 3|1}")]).map_err(|e| e.to_string())?;
    ensure(union == d("{1|0.4, 2|1, 3|0.6}"), || format!("union case formed {union}"))?;

    for _ in 0..1000 {
        let (a, b) = (random_dfn(&mut rng, 8, 0, 12), random_dfn(&mut rng, 8, 0, 12));
        let c = common_carry_dfn(&[a.clone(), b.clone()]).map_err(|e| e.to_string())?;
        ensure(c.mode() == a.mode().min(b.mode()), || format!("{a} with {b} formed {c}"))?;
    }
    Ok(format!("{orders} partial orders agreed; both pinned discrete cases; mode rule on 1000 random pairs"))
}

fn triangular_ordering() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut values = 0u64;
    for i in 0..100_000u64 {
        let form = Form::ALL[rng.gen_range(0..4)];
        let pattern = FuzzinessPattern::ALL[rng.gen_range(0..5)];
        let (w, v) = valence(&mut rng, form);
        let mut pick = |fuzzy: bool, lo: i64, hi: i64| -> FuzzyScalar {
            if fuzzy {
                random_tri(&mut rng, lo, hi).into()
            } else {
                FuzzyScalar::Crisp(rng.gen_range(lo..=hi) as u64)
            }
        };
        let ops: Vec<_> = (0..w).map(|_| pick(pattern.fuzzy_cardinals(), 0, 1000)).collect();
        let rads: Vec<_> = (0..w).map(|_| pick(pattern.fuzzy_radices(), 1, 40)).collect();
        let rts: Vec<_> = (0..v).map(|_| pick(pattern.fuzzy_rates(), 0, 20)).collect();
        let imgs: Vec<_> = (0..v).map(|k| pick(k % 2 == 0, 0, 1000)).collect();
        let opts = Options { remainder_mode: RemainderMode::Correlated, clamp_negative: i % 3 == 0 };
        let t = apply(form, &ops, &imgs, &rads, &rts, &opts).map_err(|e| e.to_string())?;
        for x in t.values() {
            let FuzzyScalar::Triangular(tri) = x else {
                return Err(format!("non-triangular result {x}"));
            };
            ensure(tri.lower() <= tri.mode() && tri.mode() <= tri.upper(), || format!("unordered triple {tri}"))?;
            values += 1;
        }
    }
    Ok(format!("100000 applications, {values} triples, all ordered"))
}

const ODD_IDS: &[&str] = &["a", "b", "units", "x y", "ü", "q\"uote", "tab\there", "p.1", "'s'"];

fn random_grade<R: Rng>(rng: &mut R) -> Grade {
    let denom = [2, 3, 4, 5, 7, 8, 10, 100, 1000][rng.gen_range(0..9)];
    Grade::new(rng.gen_range(1..=denom), denom).unwrap()
}

fn random_scalar<R: Rng>(rng: &mut R) -> FuzzyScalar {
    match rng.gen_range(0..4) {
        0 => FuzzyScalar::Crisp(rng.gen_range(0..1000)),
        1 => FuzzyScalar::Crisp(rng.gen_range(i64::MAX as u64 - 2..=u64::MAX)),
        2 => random_tri(rng, -1000, 1000).into(),
        _ => {
            let len = rng.gen_range(1..6);
            let peak = rng.gen_range(0..len);
            let start = rng.gen_range(-50..50);
            let points =
                (0..len).map(|k| (start + 3 * k as i64, if k == peak { Grade::ONE } else { random_grade(rng) }));
            DiscreteFuzzyNumber::new(points).unwrap().into()
        }
    }
}

fn random_ids<R: Rng>(rng: &mut R) -> Vec<String> {
    (0..rng.gen_range(0..4)).map(|_| ODD_IDS[rng.gen_range(0..ODD_IDS.len())].to_string()).collect()
}

fn random_scenario<R: Rng>(rng: &mut R) -> Scenario {
    let count = rng.gen_range(0..=ODD_IDS.len());
    let initial = Multeity::new(ODD_IDS[..count].iter().map(|id| (id.to_string(), random_scalar(rng)))).unwrap();
    let steps = (0..rng.gen_range(0..5))
        .map(|_| {
            let (operands, images) = (random_ids(rng), random_ids(rng));
            OperatorSpec {
                form: Form::ALL[rng.gen_range(0..4)],
                operands,
                images,
                radices: (0..rng.gen_range(0..4)).map(|_| random_scalar(rng)).collect(),
                rates: (0..rng.gen_range(0..4)).map(|_| random_scalar(rng)).collect(),
            }
        })
        .collect();
    let options = Options {
        remainder_mode: if rng.gen() { RemainderMode::Correlated } else { RemainderMode::Extension },
        clamp_negative: rng.gen(),
    };
    Scenario { initial, steps, options }
}

fn cli_round_trip() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..1000 {
        let s = random_scenario(&mut rng);
        let text = scenario_to_toml(&s);
        let parsed = parse_scenario(&text).map_err(|e| format!("scenario {i}: {e}\n{text}"))?;
        ensure(parsed == s, || format!("scenario {i} changed on parse:\n{text}"))?;
        let again = scenario_to_toml(&parsed);
        ensure(again == text, || format!("scenario {i} re-serialized differently:\n{text}\n---\n{again}"))?;
    }

    let dir = std::env::temp_dir().join(format!("fuzzy-sns-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let path = dir.join("crisp.toml");
    let src = "[[entities]]\nid = \"a\"\nkind = \"crisp\"\nvalue = 7\n\n\
               [[entities]]\nid = \"b\"\nkind = \"crisp\"\nvalue = 10\n\n\
               [[steps]]\nform = \"L\"\noperands = [\"a\"]\nimages = [\"b\"]\nradix = [3]\nrates = [2]\n";
    std::fs::write(&path, src).map_err(|e| e.to_string())?;
    let output = Command::new(env!("CARGO_BIN_EXE_fuzzy-sns")).arg("eval").arg(&path).output();
    std::fs::remove_dir_all(&dir).ok();
    let output = output.map_err(|e| e.to_string())?;
    let stdout = String::from_utf8_lossy(&output.stdout);
    ensure(output.status.success() && stdout.lines().any(|l| l == "p=2 rem=1 q=4 N'_j=14"), || {
        format!("eval printed {stdout:?} with {}", output.status)
    })?;
    Ok("1000 scenarios round-tripped; eval printed p=2 rem=1 q=4 N'_j=14".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("1 crisp baseline", Duration::from_secs(1), crisp_baseline),
        ("2 crisp embedding", Duration::from_secs(30), crisp_embedding),
        ("3 oracle equivalence", Duration::from_secs(60), oracle_equivalence),
        ("4 triangular cases", Duration::from_secs(5), triangular_cases),
        ("5 common carry formation", Duration::from_secs(10), common_carry_formation),
        ("6 triangular ordering", Duration::from_secs(30), triangular_ordering),
        ("7 cli round trip", Duration::from_secs(30), cli_round_trip),
    ];
    let mut failed = 0;
    for (name, budget, criterion) in criteria {
        let start = Instant::now();
        let outcome = criterion();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > budget => Err(format!("{detail}, but took {elapsed:.2?} (budget {budget:?})")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS criterion {name}: {detail} ({elapsed:.2?})"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why} ({elapsed:.2?})");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
