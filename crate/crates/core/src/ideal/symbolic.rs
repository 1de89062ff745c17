use crate::complex::{SimplicialComplex, VertexSet};
use crate::error::{Error, Result};

use super::{complex_of_ideal, Monomial, MonomialIdeal};

/// `I_Δ^(ℓ) = ⋂_F P_F^ℓ` over the facets `F` of `Δ`, where `P_F` is
/// generated by the variables outside `F`.
pub fn symbolic_power(complex: &SimplicialComplex, l: u32) -> Result<MonomialIdeal> {
    if l == 0 {
        return Err(Error::ZeroPower);
    }
    let n = complex.n();
    let full = VertexSet::full(n);
    let mut acc = MonomialIdeal::unit(n);
    for f in complex.facets() {
        let prime = MonomialIdeal::prime_power(n, full.difference(*f), l);
        acc = acc.intersect(&prime)?;
        if acc.is_zero() {
            break;
        }
    }
    Ok(acc)
}

/// `I^(ℓ)` for a squarefree ideal `I`, through `Δ(I)`.
pub fn symbolic_power_of_ideal(ideal: &MonomialIdeal, l: u32) -> Result<MonomialIdeal> {
    if l == 0 {
        return Err(Error::ZeroPower);
    }
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    if ideal.is_unit() {
        return Ok(MonomialIdeal::unit(ideal.n()));
    }
    symbolic_power(&complex_of_ideal(ideal)?, l)
}

/// `m ∈ I_Δ^(ℓ)`: every facet `F` has `Σ_{i ∉ F} m_i ≥ ℓ`.
pub fn in_symbolic_power(complex: &SimplicialComplex, m: &Monomial, l: u32) -> Result<bool> {
    if m.n() != complex.n() {
        return Err(Error::LengthMismatch(complex.n(), m.n()));
    }
    let exps = m.exponents();
    Ok(complex.facets().iter().all(|f| {
        let outside: u64 = exps
            .iter()
            .enumerate()
            .filter(|&(i, _)| !f.contains(i + 1))
            .map(|(_, &e)| u64::from(e))
            .sum();
        outside >= u64::from(l)
    }))
}
