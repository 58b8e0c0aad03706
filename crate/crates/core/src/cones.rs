//! Effective and nef cones of a Bott-Samelson variety: Sigma divisor classes at
//! the non-reduced steps, the effective divisor cone they generate, the
//! effective codimension-two cone of a reduced word, the nef divisor cone, and
//! the nef cone of 2-cycles in dimension four.
//!
//! The Sigma class at a non-reduced step i is computed by pulling the canonical
//! section of L_{−ϖ_{γ_i}}|_{X(w_i)} back to the chart of the truncated word
//! (see `minors`): the coordinate orders of vanishing give the exact
//! multiplicities of the standard divisors in the pullback, earlier Sigma
//! equations are divided out, and the residual class is Sigma_i. Two mandatory
//! validations guard the result: the coefficient of X_i must be 1, and the
//! fiber pairing Sigma_i · x_1 ⋯ x_{i−1} must be 1 in the truncated ring.

use crate::bsword::{BSWord, DivisorClass};
use crate::chow::{subsets, ChowRing, CycleClass};
use crate::error::{Error, Result};
use crate::minors::{chart_set, WordChart};
use crate::mpoly::MPoly;
use crate::num::{Int, Rat};
use crate::polyhedra::RationalCone;
use crate::root_system::{enumerate_positive_roots, Weight};
use num_traits::{One, Signed, Zero};
use serde::Serialize;

/// A Sigma divisor class with its computation record.
#[derive(Debug, Clone, Serialize)]
pub struct SigmaClass {
    pub position: usize,
    pub class: DivisorClass,
    /// Expansion of O_i(−ϖ_{γ_i}) over the truncated word, extended by zeros.
    pub pullback: DivisorClass,
    /// Standard divisors contained in the pullback: (position, multiplicity).
    pub components: Vec<(usize, usize)>,
    /// Earlier Sigma divisors contained in the pullback: (position, multiplicity).
    pub sigma_components: Vec<(usize, usize)>,
    /// Mandatory validations; construction fails unless both hold.
    pub coefficient_check: bool,
    pub fiber_check: bool,
}

fn sigma_validation_error(
    bsw: &BSWord,
    position: usize,
    reason: &str,
    components: &[(usize, usize)],
    pullback: &DivisorClass,
) -> Error {
    Error::SigmaValidation {
        word: bsw.word().to_vec(),
        position,
        reason: reason.to_string(),
        components: components.to_vec(),
        pullback: pullback.coeffs.iter().map(|c| c.to_string()).collect(),
    }
}

/// All Sigma classes of the word, keyed by non-reduced position.
pub fn sigma_classes(bsw: &BSWord) -> Result<Vec<SigmaClass>> {
    let positions = bsw.sigma_positions();
    if positions.is_empty() {
        return Ok(Vec::new());
    }
    let datum = enumerate_positive_roots(bsw.cartan());
    datum.require_finite()?;
    let set = chart_set(bsw.cartan())?.ok_or(Error::SigmaUnsupported {
        index: bsw.letter(positions[0]),
    })?;
    for &i in &positions {
        let gamma = bsw.letter(i);
        if set.letter_map[gamma - 1].is_none() {
            return Err(Error::SigmaUnsupported { index: gamma });
        }
    }
    let max_len = *positions.last().unwrap();
    let letters_needed: Vec<usize> = positions.iter().map(|&i| bsw.letter(i)).collect();
    let chart = WordChart::new(bsw, set, max_len, &letters_needed)?;
    let d = bsw.len();
    let mut out: Vec<SigmaClass> = Vec::new();
    // Chart equations of the Sigma divisors computed so far.
    let mut equations: Vec<(usize, MPoly)> = Vec::new();
    for &i in &positions {
        let gamma = bsw.letter(i);
        // w_i = w_{i−1} at a non-reduced step.
        let w = bsw.prefix(i);
        let target = w.apply(&Weight::fundamental(bsw.cartan().rank(), gamma))?;
        let section = chart.section_polynomial(gamma, i, &target)?;
        if section.is_zero() {
            return Err(Error::Internal(
                "canonical section pulled back to zero".into(),
            ));
        }
        let pullback =
            bsw.expand_line_bundle(i, &Weight::fundamental(bsw.cartan().rank(), gamma).neg())?;
        // Orders of vanishing along the standard divisors u_j = 0.
        let mut components: Vec<(usize, usize)> = Vec::new();
        let mut residual = section;
        for j in 1..=i {
            let ord = residual.ord_in_var(j - 1);
            if ord > 0 {
                components.push((j, ord as usize));
                residual = residual.shift_down_var(j - 1, ord);
            }
        }
        // Divide out earlier Sigma equations.
        let mut sigma_components: Vec<(usize, usize)> = Vec::new();
        for (k, equation) in &equations {
            let (power, rest) = residual.strip_factor(equation);
            if power > 0 {
                sigma_components.push((*k, power as usize));
                residual = rest;
            }
        }
        if residual.deg_in_var(i - 1) != 1 {
            return Err(sigma_validation_error(
                bsw,
                i,
                "residual chart equation is not linear in the last coordinate",
                &components,
                &pullback,
            ));
        }
        // Class balance: Sigma_i = pullback − Σ ord_j X_j − Σ s_k Sigma_k.
        let mut class = pullback.clone();
        for &(j, mult) in &components {
            let unit = DivisorClass::standard(d, j);
            class = class.sub(&unit.scale(&Rat::from_integer(Int::from(mult as i64))));
        }
        for &(k, mult) in &sigma_components {
            let earlier = &out.iter().find(|s| s.position == k).unwrap().class;
            class = class.sub(&earlier.scale(&Rat::from_integer(Int::from(mult as i64))));
        }
        // Validation (a): the coefficient of X_i is 1.
        let coefficient_check = class.coeffs[i - 1] == Rat::one();
        if !coefficient_check {
            return Err(sigma_validation_error(
                bsw,
                i,
                "coefficient of X_i is not 1",
                &components,
                &pullback,
            ));
        }
        // Validation (b): fiber pairing Sigma_i · x_1 ⋯ x_{i−1} = 1 in the
        // truncated word's ring.
        let truncated = bsw.truncate(i);
        let ring = ChowRing::new(&truncated);
        let trunc_class = DivisorClass {
            coeffs: class.coeffs[..i].to_vec(),
        };
        let cycle = ring.divisor_to_cycle(&trunc_class)?;
        let fiber: Vec<usize> = (1..i).collect();
        let product = ring.multiply(&cycle, &CycleClass::monomial(&fiber))?;
        let fiber_check = ring.degree(&product)? == Int::one();
        if !fiber_check {
            return Err(sigma_validation_error(
                bsw,
                i,
                "fiber pairing is not 1",
                &components,
                &pullback,
            ));
        }
        equations.push((i, residual));
        out.push(SigmaClass {
            position: i,
            class,
            pullback,
            components,
            sigma_components,
            coefficient_check,
            fiber_check,
        });
    }
    Ok(out)
}

/// The Sigma class at one non-reduced position.
pub fn sigma_class(bsw: &BSWord, i: usize) -> Result<SigmaClass> {
    bsw.check_position(i)?;
    if bsw.reduced_step()[i - 1] {
        return Err(Error::ReducedPosition(i));
    }
    let all = sigma_classes(bsw)?;
    Ok(all.into_iter().find(|s| s.position == i).unwrap())
}

/// Report for the effective cone of divisors.
#[derive(Debug, Clone, Serialize)]
pub struct EffConeReport {
    pub generators: Vec<DivisorClass>,
    pub extremal: Vec<bool>,
    pub sigma_positions: Vec<usize>,
    #[serde(rename = "validation")]
    pub sigmas: Vec<SigmaClass>,
    pub cone: RationalCone,
}

/// Theorem: Eff(X) is generated by the standard divisors together with the
/// Sigma divisors at the non-reduced steps, each Sigma spanning an extremal ray.
pub fn effective_cone_divisors(bsw: &BSWord) -> Result<EffConeReport> {
    let d = bsw.len();
    let sigmas = sigma_classes(bsw)?;
    let mut generators: Vec<DivisorClass> = (1..=d).map(|i| DivisorClass::standard(d, i)).collect();
    for s in &sigmas {
        generators.push(s.class.clone());
    }
    let cone = RationalCone::from_rays(
        d,
        generators.iter().map(|g| g.coeffs.clone()).collect(),
    )?;
    // Extremality per generator, in generator order.
    let flags_by_ray = cone.extremal_flags()?;
    let ray_index = |g: &DivisorClass| -> usize {
        let prim = crate::num::primitive_vector(&g.coeffs).expect("nonzero generator");
        cone.rays().iter().position(|r| r == &prim).expect("generator is a ray")
    };
    let extremal: Vec<bool> = generators
        .iter()
        .map(|g| flags_by_ray[ray_index(g)])
        .collect();
    Ok(EffConeReport {
        sigma_positions: bsw.sigma_positions(),
        generators,
        extremal,
        sigmas,
        cone,
    })
}

/// Theorem: for a reduced word, Eff_{d−2}(X) = Σ_i Eff(X_i) pushed forward,
/// where X_i is the Bott-Samelson variety of the word with position i deleted.
/// Returns the cone in the grade-2 square-free monomial basis, reduced to its
/// extremal rays.
pub fn effective_cone_2cycles(bsw: &BSWord) -> Result<RationalCone> {
    let d = bsw.len();
    if d < 2 {
        return Err(Error::PositionOutOfRange {
            position: 2,
            length: d,
        });
    }
    // For d = 2 the cone of 0-cycles is the point-class ray for any word;
    // beyond that the deleted-word decomposition needs a reduced word.
    if d > 2 && !bsw.is_reduced() {
        return Err(Error::NotReduced);
    }
    if d == 2 {
        return RationalCone::from_integer_rays(1, vec![vec![Int::from(1)]]);
    }
    let ambient = subsets(d, 2).len();
    let mut rays: Vec<Vec<Int>> = Vec::new();
    for i in 1..=d {
        let deleted = bsw.delete_position(i)?;
        let report = effective_cone_divisors(&deleted)?;
        // Position k of the deleted word sits at original position pos[k].
        let pos: Vec<usize> = (1..=d).filter(|&p| p != i).collect();
        for gen in &report.generators {
            let ints = gen.integer_coeffs()?;
            let mut cycle = CycleClass::zero(2);
            for (k, coeff) in ints.into_iter().enumerate() {
                let mut key = vec![i, pos[k]];
                key.sort_unstable();
                cycle.insert(key, coeff);
            }
            rays.push(cycle.to_vector(d));
        }
    }
    let cone = RationalCone::from_integer_rays(ambient, rays)?;
    cone.extremal_reduced()
}

/// The nef cone of divisors: the image of the nonnegative orthant under the
/// O-basis change (Lauritzen–Thomsen positivity).
pub fn nef_divisor_cone(bsw: &BSWord) -> Result<RationalCone> {
    let d = bsw.len();
    RationalCone::from_rays(
        d,
        bsw.o_basis_rows().iter().map(|r| r.coeffs.clone()).collect(),
    )
}

/// Very ample ⟺ all O-coordinates strictly positive.
pub fn is_ample(bsw: &BSWord, class: &DivisorClass) -> Result<bool> {
    Ok(bsw
        .x_to_o_coords(class)?
        .iter()
        .all(|c| c > &Rat::zero()))
}

/// Globally generated (equivalently nef) ⟺ all O-coordinates nonnegative.
pub fn is_globally_generated(bsw: &BSWord, class: &DivisorClass) -> Result<bool> {
    Ok(bsw
        .x_to_o_coords(class)?
        .iter()
        .all(|c| !c.is_negative()))
}

/// The nef cone of 2-cycles for a reduced word of length 4: the dual of
/// Eff_2(X) under the intersection pairing, in the grade-2 monomial basis.
pub fn nef2_cone(bsw: &BSWord) -> Result<RationalCone> {
    if bsw.len() != 4 || !bsw.is_reduced() {
        return Err(Error::Nef2Precondition(bsw.len()));
    }
    let eff2 = effective_cone_2cycles(bsw)?;
    let ring = ChowRing::new(bsw);
    let pairing = ring.pairing_matrix(2)?;
    eff2.dual(Some(&pairing))
}

/// Intersection matrix of cycle classes under the degree pairing.
pub fn intersection_matrix(bsw: &BSWord, classes: &[CycleClass]) -> Result<Vec<Vec<Int>>> {
    let ring = ChowRing::new(bsw);
    ring.pairing_of(classes, classes)
}
