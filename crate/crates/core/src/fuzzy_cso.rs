//! L, D, F and M operators over fuzzy cardinals, radices and conversion rates.
//!
//! A call is evaluated in a single representation family. Crisp arguments
//! are lifted into that family (degenerate triangles or singleton supports),
//! which reproduces each special-case formula of the fuzzy operators because
//! the lifts are arithmetic identities. Discrete and triangular arguments
//! cannot meet in one call.
//!
//! Per operand `w` and image `v`:
//!
//! ```text
//! p_w  = ⌊N_w / n_w⌋
//! p    = p_0                       (L, D)
//!      = form(p_0, .., p_W)        (F, M)
//! N'_w = N_w − p·n_w
//! q_v  = p·r_v
//! N'_v = N_v + q_v
//! ```
//!
//! Triangular remainders use `(a − b'; m − m'; b − a')` subtraction and may
//! go negative; discrete L/D remainders default to the correlated
//! `t mod s` reading (see [`RemainderMode`]). F/M discrete remainders always
//! use the full extension, since the common carry is not tied to any single
//! operand support value.

use crate::carry::{common_carry_dfn, common_carry_tri};
use crate::crisp_cso::crisp_apply;
use crate::error::{Error, Result};
use crate::fuznum::{
    dfn_floor_div, dfn_mod, dfn_zadeh_binary, BinaryOp, DiscreteFuzzyNumber, Family, FuzzyScalar, TriangularFuzzyNumber,
};
use crate::operator::{check_lengths, Form, Options, RemainderMode, Transform};
use crate::warning::Warning;

pub fn apply_l(
    operand: &FuzzyScalar,
    image: &FuzzyScalar,
    radix: &FuzzyScalar,
    rate: &FuzzyScalar,
    opts: &Options,
) -> Result<Transform<FuzzyScalar>> {
    apply(
        Form::L,
        std::slice::from_ref(operand),
        std::slice::from_ref(image),
        std::slice::from_ref(radix),
        std::slice::from_ref(rate),
        opts,
    )
}

pub fn apply_d(
    operand: &FuzzyScalar,
    images: &[FuzzyScalar],
    radix: &FuzzyScalar,
    rates: &[FuzzyScalar],
    opts: &Options,
) -> Result<Transform<FuzzyScalar>> {
    apply(Form::D, std::slice::from_ref(operand), images, std::slice::from_ref(radix), rates, opts)
}

pub fn apply_f(
    operands: &[FuzzyScalar],
    image: &FuzzyScalar,
    radices: &[FuzzyScalar],
    rate: &FuzzyScalar,
    opts: &Options,
) -> Result<Transform<FuzzyScalar>> {
    apply(Form::F, operands, std::slice::from_ref(image), radices, std::slice::from_ref(rate), opts)
}

pub fn apply_m(
    operands: &[FuzzyScalar],
    images: &[FuzzyScalar],
    radices: &[FuzzyScalar],
    rates: &[FuzzyScalar],
    opts: &Options,
) -> Result<Transform<FuzzyScalar>> {
    apply(Form::M, operands, images, radices, rates, opts)
}

/// Apply an operator of the given form, checking its valence first.
pub fn apply(
    form: Form,
    operands: &[FuzzyScalar],
    images: &[FuzzyScalar],
    radices: &[FuzzyScalar],
    rates: &[FuzzyScalar],
    opts: &Options,
) -> Result<Transform<FuzzyScalar>> {
    form.check_valence(operands.len(), images.len())?;
    apply_any_valence(operands, images, radices, rates, opts)
}

/// The family a call runs in, or an error if discrete meets triangular.
pub fn call_family<'a, I>(args: I) -> Result<Family>
where
    I: IntoIterator<Item = &'a FuzzyScalar>,
{
    let mut family = Family::Crisp;
    for a in args {
        family = match (family, a.family()) {
            (f, Family::Crisp) => f,
            (Family::Crisp, f) => f,
            (f, g) if f == g => f,
            _ => return Err(Error::RepresentationMix),
        };
    }
    Ok(family)
}

pub(crate) fn apply_any_valence(
    operands: &[FuzzyScalar],
    images: &[FuzzyScalar],
    radices: &[FuzzyScalar],
    rates: &[FuzzyScalar],
    opts: &Options,
) -> Result<Transform<FuzzyScalar>> {
    check_lengths(operands.len(), radices.len(), images.len(), rates.len())?;
    if operands.is_empty() || images.is_empty() {
        return Err(Error::Spec("an operator needs at least one operand and one image".into()));
    }
    let all = operands.iter().chain(images).chain(radices).chain(rates);
    match call_family(all)? {
        Family::Crisp => {
            let crisp = |xs: &[FuzzyScalar]| -> Vec<u64> {
                xs.iter()
                    .map(|x| match x {
                        FuzzyScalar::Crisp(v) => *v,
                        _ => unreachable!("crisp family"),
                    })
                    .collect()
            };
            let t = crisp_apply(&crisp(operands), &crisp(images), &crisp(radices), &crisp(rates))?;
            Ok(t.map(FuzzyScalar::Crisp))
        }
        Family::Triangular => triangular(operands, images, radices, rates, opts),
        Family::Discrete => discrete(operands, images, radices, rates, opts),
    }
}

fn triangular(
    operands: &[FuzzyScalar],
    images: &[FuzzyScalar],
    radices: &[FuzzyScalar],
    rates: &[FuzzyScalar],
    opts: &Options,
) -> Result<Transform<FuzzyScalar>> {
    let lift = |xs: &[FuzzyScalar]| xs.iter().map(FuzzyScalar::to_triangular).collect::<Result<Vec<_>>>();
    let (cardinals, image_cards, radices, rates) = (lift(operands)?, lift(images)?, lift(radices)?, lift(rates)?);

    if let Some(w) = radices.iter().position(|n| n.lower() < 1) {
        return Err(Error::InvalidRadix(format!("radix {} of operand {w} reaches below 1", radices[w])));
    }
    if let Some(v) = rates.iter().position(|r| !r.is_nonnegative()) {
        return Err(Error::Domain(format!("conversion rate {} of image {v} is negative", rates[v])));
    }

    let partials = cardinals.iter().zip(&radices).map(|(n, r)| n.floor_div(r)).collect::<Result<Vec<_>>>()?;
    let common = if cardinals.len() > 1 { Some(common_carry_tri(&partials)?) } else { None };
    let carry = common.unwrap_or(partials[0]);

    let mut warnings = Vec::new();
    let mut remainders = Vec::with_capacity(cardinals.len());
    for (w, (n, r)) in cardinals.iter().zip(&radices).enumerate() {
        let rem = n.checked_sub(&carry.checked_mul(r)?)?;
        remainders.push(guard_remainder(w, rem, rem.lower(), opts, &mut warnings, |t| t.clamp_nonnegative()));
    }
    let transformants = rates.iter().map(|r| carry.checked_mul(r)).collect::<Result<Vec<_>>>()?;
    let new_images =
        image_cards.iter().zip(&transformants).map(|(n, q)| n.checked_add(q)).collect::<Result<Vec<_>>>()?;

    Ok(Transform {
        partial_carries: partials,
        common_carry: common,
        remainders,
        transformants,
        images: new_images,
        warnings,
    }
    .map(FuzzyScalar::Triangular))
}

fn discrete(
    operands: &[FuzzyScalar],
    images: &[FuzzyScalar],
    radices: &[FuzzyScalar],
    rates: &[FuzzyScalar],
    opts: &Options,
) -> Result<Transform<FuzzyScalar>> {
    let lift = |xs: &[FuzzyScalar]| xs.iter().map(FuzzyScalar::to_discrete).collect::<Result<Vec<_>>>();
    let (cardinals, image_cards, radix_dfns, rates) = (lift(operands)?, lift(images)?, lift(radices)?, lift(rates)?);

    let partials = cardinals.iter().zip(radices).map(|(n, r)| dfn_floor_div(n, r)).collect::<Result<Vec<_>>>()?;
    let common = if cardinals.len() > 1 { Some(common_carry_dfn(&partials)?) } else { None };
    let carry = common.as_ref().unwrap_or(&partials[0]).clone();

    let mut warnings = Vec::new();
    let mut remainders = Vec::with_capacity(cardinals.len());
    for (w, n) in cardinals.iter().enumerate() {
        let rem = match (common.is_none(), opts.remainder_mode, &radices[w]) {
            (true, RemainderMode::Correlated, FuzzyScalar::Crisp(radix)) => dfn_mod(n, *radix)?,
            (true, RemainderMode::Correlated, _) => dfn_zadeh_binary(BinaryOp::Rem, n, &radix_dfns[w])?,
            _ => {
                let taken = dfn_zadeh_binary(BinaryOp::Mul, &carry, &radix_dfns[w])?;
                dfn_zadeh_binary(BinaryOp::Sub, n, &taken)?
            }
        };
        let min = rem.min_value();
        remainders.push(guard_remainder(w, rem, min, opts, &mut warnings, DiscreteFuzzyNumber::clamp_nonnegative));
    }
    let transformants = rates.iter().map(|r| dfn_zadeh_binary(BinaryOp::Mul, &carry, r)).collect::<Result<Vec<_>>>()?;
    let new_images = image_cards
        .iter()
        .zip(&transformants)
        .map(|(n, q)| dfn_zadeh_binary(BinaryOp::Add, n, q))
        .collect::<Result<Vec<_>>>()?;

    Ok(Transform {
        partial_carries: partials,
        common_carry: common,
        remainders,
        transformants,
        images: new_images,
        warnings,
    }
    .map(FuzzyScalar::Discrete))
}

fn guard_remainder<T>(
    operand: usize,
    rem: T,
    min: i64,
    opts: &Options,
    warnings: &mut Vec<Warning>,
    clamp: impl Fn(&T) -> T,
) -> T {
    if min >= 0 {
        return rem;
    }
    warnings.push(Warning::NegativeRemainder { operand, min, clamped: opts.clamp_negative });
    if opts.clamp_negative {
        clamp(&rem)
    } else {
        rem
    }
}

/// Lift a crisp operator result into `family`, field by field.
pub fn lift_crisp(t: &Transform<u64>, family: Family) -> Result<Transform<FuzzyScalar>> {
    let lift = |x: u64| -> Result<FuzzyScalar> {
        Ok(match family {
            Family::Crisp => FuzzyScalar::Crisp(x),
            Family::Discrete => FuzzyScalar::Discrete(DiscreteFuzzyNumber::crisp(crate::fuznum::to_i64(x)?)),
            Family::Triangular => FuzzyScalar::Triangular(TriangularFuzzyNumber::crisp(crate::fuznum::to_i64(x)?)),
        })
    };
    let lifted = t.clone().map(lift);
    Ok(Transform {
        partial_carries: lifted.partial_carries.into_iter().collect::<Result<_>>()?,
        common_carry: lifted.common_carry.transpose()?,
        remainders: lifted.remainders.into_iter().collect::<Result<_>>()?,
        transformants: lifted.transformants.into_iter().collect::<Result<_>>()?,
        images: lifted.images.into_iter().collect::<Result<_>>()?,
        warnings: lifted.warnings,
    })
}
