//! Desingularization bookkeeping for intersections of translated Schubert
//! varieties: from reduced words for u and v, build the concatenated word
//! (ᾱ, β̄ reversed), compute w = u ⋆ v, the fiber dimension, and run the
//! dense-orbit criterion on the concatenation.

use crate::bsword::BSWord;
use crate::error::{Error, Result};
use crate::orbits::{dense_orbit_criterion, DenseOrbitReport};
use crate::root_system::{enumerate_positive_roots, CartanMatrix};
use crate::weyl::{bruhat_leq, ordinary_product, WeylElement};
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct RichardsonReport {
    pub word_u: Vec<usize>,
    pub word_v: Vec<usize>,
    /// (word_u, reverse(word_v)): the word of the desingularizing variety.
    pub concatenated_word: Vec<usize>,
    /// w = u ⋆ v as a weight-lattice matrix, with a reduced word for it.
    pub w: WeylElement,
    pub w_reduced_word: Vec<usize>,
    pub w_length: usize,
    /// ℓ(u) + ℓ(v) − ℓ(u ⋆ v), the dimension of the relevant fiber.
    pub fiber_dimension: usize,
    /// Whether the fiber over w is nonempty: w ≤ Demazure(concatenation).
    pub fiber_nonempty: bool,
    /// The concatenation is reduced iff ℓ(u ⋆ v⁻¹) = ℓ(u) + ℓ(v).
    pub concatenation_reduced: bool,
    pub orbit: DenseOrbitReport,
    /// Set for non-finite systems, where these fibers need not desingularize
    /// intersections of translated Schubert varieties.
    pub infinite_type_warning: Option<String>,
}

fn require_reduced(cartan: &CartanMatrix, word: &[usize]) -> Result<WeylElement> {
    let w = ordinary_product(cartan, word)?;
    if w.length() != word.len() {
        return Err(Error::NotReduced);
    }
    Ok(w)
}

/// Given reduced words for u and v, report the desingularization data for
/// X(u) ∩ (u⋆v)·X(v).
pub fn intersection_desing(
    cartan: &CartanMatrix,
    word_u: &[usize],
    word_v: &[usize],
) -> Result<RichardsonReport> {
    let u = require_reduced(cartan, word_u)?;
    let v = require_reduced(cartan, word_v)?;
    // w = u ⋆ v, folded through a reduced word of v.
    let mut w = u.clone();
    for &j in word_v {
        w = w.demazure_multiply_simple(j)?;
    }
    let fiber_dimension = u.length() + v.length() - w.length();
    let mut concatenated_word = word_u.to_vec();
    concatenated_word.extend(word_v.iter().rev());
    let bsw = BSWord::analyze(cartan, &concatenated_word)?;
    let fiber_nonempty = bruhat_leq(&w, bsw.prefix(bsw.len()))?;
    let orbit = dense_orbit_criterion(&bsw, None)?;
    let datum = enumerate_positive_roots(cartan);
    let infinite_type_warning = (!datum.finite).then(|| {
        "non-finite root system: fibers of the concatenated word need not \
         desingularize intersections of translated Schubert varieties"
            .to_string()
    });
    Ok(RichardsonReport {
        word_u: word_u.to_vec(),
        word_v: word_v.to_vec(),
        concatenated_word,
        w_reduced_word: w.reduced_word(),
        w_length: w.length(),
        w,
        fiber_dimension,
        fiber_nonempty,
        concatenation_reduced: bsw.is_reduced(),
        orbit,
        infinite_type_warning,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> CartanMatrix {
        CartanMatrix::from_type("A2").unwrap()
    }

    #[test]
    fn empty_words() {
        let report = intersection_desing(&a2(), &[], &[]).unwrap();
        assert_eq!(report.w_length, 0);
        assert_eq!(report.fiber_dimension, 0);
        assert!(report.concatenated_word.is_empty());
        assert!(report.fiber_nonempty);
        assert!(report.infinite_type_warning.is_none());
    }

    #[test]
    fn both_words_alpha_beta() {
        // u = v = s_α s_β: concatenation (α, β, β, α), w = u ⋆ v = w_◦, m = 1.
        let report = intersection_desing(&a2(), &[1, 2], &[1, 2]).unwrap();
        assert_eq!(report.concatenated_word, vec![1, 2, 2, 1]);
        assert_eq!(report.w_length, 3);
        assert_eq!(report.fiber_dimension, 1);
        assert!(!report.concatenation_reduced);
    }

    #[test]
    fn trivial_v_side() {
        let report = intersection_desing(&a2(), &[1, 2], &[]).unwrap();
        assert_eq!(report.fiber_dimension, 0);
        assert!(report.concatenation_reduced);
        assert_eq!(report.concatenated_word, vec![1, 2]);
    }

    #[test]
    fn rejects_non_reduced_inputs() {
        assert_eq!(
            intersection_desing(&a2(), &[1, 1], &[]).unwrap_err(),
            Error::NotReduced
        );
        assert_eq!(
            intersection_desing(&a2(), &[1], &[2, 1, 2, 1]).unwrap_err(),
            Error::NotReduced
        );
    }

    #[test]
    fn fiber_dimension_and_reducedness() {
        // m = 0 ⟺ ℓ(u⋆v) additive ⟺ (word_u, word_v) reduced; the reversed
        // concatenation can disagree, as with u = s_α, v = s_α s_β.
        let report = intersection_desing(&a2(), &[1], &[1, 2]).unwrap();
        assert_eq!(report.fiber_dimension, 1);
        assert_eq!(report.concatenated_word, vec![1, 2, 1]);
        assert!(report.concatenation_reduced);
        // The fiber over w = u⋆v = w_◦ is nonempty here: w_◦ equals the
        // Demazure product of (α, β, α).
        assert!(report.fiber_nonempty);

        // u = s_α, v = s_β s_α: the w-fiber is empty.
        let report = intersection_desing(&a2(), &[1], &[2, 1]).unwrap();
        assert_eq!(report.fiber_dimension, 0);
        assert!(!report.fiber_nonempty);
    }

    #[test]
    fn prefix_agreement_invariant() {
        let cartan = CartanMatrix::from_type("C2").unwrap();
        let word_u = [1, 2, 1];
        let word_v = [2, 1];
        let report = intersection_desing(&cartan, &word_u, &word_v).unwrap();
        let concat = BSWord::analyze(&cartan, &report.concatenated_word).unwrap();
        let just_u = BSWord::analyze(&cartan, &word_u).unwrap();
        for i in 0..=word_u.len() {
            assert_eq!(concat.prefix(i), just_u.prefix(i));
        }
        assert!(report.fiber_dimension <= word_v.len());
    }

    #[test]
    fn warning_for_non_finite_systems() {
        let affine = CartanMatrix::new(vec![vec![2, -2], vec![-2, 2]]).unwrap();
        let report = intersection_desing(&affine, &[1, 2], &[1]).unwrap();
        assert!(report.infinite_type_warning.is_some());
    }
}
