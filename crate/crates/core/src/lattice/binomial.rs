use dashu_int::IBig;

use super::Move;
use crate::error::{Error, Result};

/// Default variable names `e1 … em`.
pub fn edge_names(m: usize) -> Vec<String> {
    (1..=m).map(|i| format!("e{i}")).collect()
}

/// Renders `f_v = f_v+ - f_v-` as text such as `e1*e3^2 - e2^3`.
///
/// Factors appear in variable order; an empty side renders as `1` and the
/// zero vector as `0`.
pub fn render_binomial(v: &Move, names: &[String]) -> Result<String> {
    if names.len() != v.len() {
        return Err(Error::LengthMismatch { expected: v.len(), found: names.len() });
    }
    if v.is_zero() {
        return Ok("0".to_string());
    }
    Ok(format!("{} - {}", monomial(&v.plus(), names), monomial(&v.minus(), names)))
}

fn monomial(exponents: &[IBig], names: &[String]) -> String {
    let factors: Vec<String> = exponents
        .iter()
        .zip(names)
        .filter(|(e, _)| !e.is_zero())
        .map(|(e, name)| if e.is_one() { name.clone() } else { format!("{name}^{e}") })
        .collect();
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join("*")
    }
}

/// Inverse of [`render_binomial`] on canonical text.
pub fn parse_binomial(text: &str, names: &[String]) -> Result<Move> {
    let text = text.trim();
    if text == "0" {
        return Ok(Move::zero(names.len()));
    }
    let (lhs, rhs) = text.split_once(" - ").ok_or_else(|| Error::parse(1, "expected `<monomial> - <monomial>`"))?;
    let plus = parse_monomial(lhs, names)?;
    let minus = parse_monomial(rhs, names)?;
    Ok(Move::new(plus.into_iter().zip(minus).map(|(p, q)| p - q).collect()))
}

fn parse_monomial(text: &str, names: &[String]) -> Result<Vec<IBig>> {
    let mut exponents = vec![IBig::ZERO; names.len()];
    if text.trim() == "1" {
        return Ok(exponents);
    }
    for factor in text.split('*') {
        let factor = factor.trim();
        let (name, exponent) = match factor.split_once('^') {
            Some((name, e)) => {
                (name, e.parse::<IBig>().map_err(|_| Error::parse(1, format!("bad exponent in `{factor}`")))?)
            }
            None => (factor, IBig::ONE),
        };
        let index = names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::parse(1, format!("unknown variable `{name}`")))?;
        if exponent <= IBig::ZERO || !exponents[index].is_zero() {
            return Err(Error::parse(1, format!("non-canonical factor `{factor}`")));
        }
        exponents[index] = exponent;
    }
    Ok(exponents)
}
