//! Crisp carry operators over natural cardinals.
//!
//! L and D take one carry `⌊N/n⌋` and leave `N mod n`. F and M take the
//! smallest of the partial carries as the common carry and leave
//! `N_w − p.·n_w` in every operand, which is generally *not* `N_w mod n_w`.

use crate::error::{Error, Result};
use crate::operator::{check_lengths, Form, Transform};

fn checked_mul(x: u64, y: u64) -> Result<u64> {
    x.checked_mul(y).ok_or(Error::Overflow("crisp multiplication"))
}

fn checked_add(x: u64, y: u64) -> Result<u64> {
    x.checked_add(y).ok_or(Error::Overflow("crisp addition"))
}

/// L-operator: `N_i` over radix `n`, `r` image units per carry unit.
pub fn crisp_l(operand: u64, image: u64, radix: u64, rate: u64) -> Result<Transform<u64>> {
    crisp_apply(&[operand], &[image], &[radix], &[rate])
}

/// D-operator: one operand fanned out to `images.len() ≥ 2` images.
pub fn crisp_d(operand: u64, images: &[u64], radix: u64, rates: &[u64]) -> Result<Transform<u64>> {
    Form::D.check_valence(1, images.len())?;
    crisp_apply(&[operand], images, &[radix], rates)
}

/// F-operator: `operands.len() ≥ 2` operands fused into one image.
pub fn crisp_f(operands: &[u64], image: u64, radices: &[u64], rate: u64) -> Result<Transform<u64>> {
    Form::F.check_valence(operands.len(), 1)?;
    crisp_apply(operands, &[image], radices, &[rate])
}

/// M-operator: several operands, several images.
pub fn crisp_m(operands: &[u64], images: &[u64], radices: &[u64], rates: &[u64]) -> Result<Transform<u64>> {
    Form::M.check_valence(operands.len(), images.len())?;
    crisp_apply(operands, images, radices, rates)
}

/// Any valence with at least one operand and one image. A common carry is
/// formed as soon as there are two operands.
pub(crate) fn crisp_apply(operands: &[u64], images: &[u64], radices: &[u64], rates: &[u64]) -> Result<Transform<u64>> {
    check_lengths(operands.len(), radices.len(), images.len(), rates.len())?;
    if operands.is_empty() || images.is_empty() {
        return Err(Error::Spec("an operator needs at least one operand and one image".into()));
    }
    if let Some(pos) = radices.iter().position(|&n| n == 0) {
        return Err(Error::InvalidRadix(format!("radix of operand {pos} is 0")));
    }

    let partial_carries: Vec<u64> = operands.iter().zip(radices).map(|(&n_w, &r_w)| n_w / r_w).collect();

    let (common_carry, remainders) = if operands.len() == 1 {
        (None, vec![operands[0] % radices[0]])
    } else {
        let common = *partial_carries.iter().min().expect("nonempty");
        let rems = operands
            .iter()
            .zip(radices)
            .map(|(&n_w, &r_w)| Ok(n_w - checked_mul(common, r_w)?))
            .collect::<Result<Vec<_>>>()?;
        (Some(common), rems)
    };
    let carry = common_carry.unwrap_or(partial_carries[0]);

    let transformants = rates.iter().map(|&r| checked_mul(carry, r)).collect::<Result<Vec<_>>>()?;
    let new_images = images.iter().zip(&transformants).map(|(&n, &q)| checked_add(n, q)).collect::<Result<Vec<_>>>()?;

    Ok(Transform { partial_carries, common_carry, remainders, transformants, images: new_images, warnings: Vec::new() })
}
