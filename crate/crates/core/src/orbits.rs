//! Torus fixed points, tangent weights, the dense-orbit sufficient criterion,
//! and the automorphism stabilization test.

use crate::bsword::BSWord;
use crate::error::{Error, Result};
use crate::num::{rank as matrix_rank, Rat};
use crate::root_system::{enumerate_positive_roots, Weight};
use crate::weyl::{longest_element, WeylElement};
use serde::Serialize;

/// A T-fixed point of X(word): each coordinate chooses e (false) or s_{γ_i} (true).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPoint {
    pub eps: Vec<bool>,
}

impl FixedPoint {
    pub fn all(d: usize) -> Vec<FixedPoint> {
        assert!(d <= 20, "fixed point enumeration is 2^d");
        (0..1usize << d)
            .map(|mask| FixedPoint {
                eps: (0..d).map(|i| mask & (1 << i) != 0).collect(),
            })
            .collect()
    }

    /// The ordinary Weyl product ε_1 ⋯ ε_d.
    pub fn product(&self, bsw: &BSWord) -> Result<WeylElement> {
        let mut w = WeylElement::identity(bsw.cartan());
        for (i, &on) in self.eps.iter().enumerate() {
            if on {
                w = w.multiply_simple(bsw.letter(i + 1))?;
            }
        }
        Ok(w)
    }
}

/// The multiset of T-weights on the tangent space at a fixed point:
/// the i-th entry is (ε_1 ⋯ ε_i)(−α_{γ_i}).
pub fn tangent_weights(bsw: &BSWord, point: &FixedPoint) -> Result<Vec<Weight>> {
    if point.eps.len() != bsw.len() {
        return Err(Error::DimensionMismatch(point.eps.len(), bsw.len()));
    }
    let mut w = WeylElement::identity(bsw.cartan());
    let mut out = Vec::with_capacity(bsw.len());
    for i in 1..=bsw.len() {
        let gamma = bsw.letter(i);
        if point.eps[i - 1] {
            w = w.multiply_simple(gamma)?;
        }
        out.push(w.apply(&bsw.cartan().simple_root(gamma).neg())?);
    }
    Ok(out)
}

/// Leftmost-greedy reduced subword: scan left to right keeping an index
/// exactly when it strictly increases the running ordinary-product length.
/// The kept positions are exactly the reduced steps, and their product is the
/// Demazure product of the whole word.
pub fn greedy_reduced_subword(bsw: &BSWord) -> Vec<usize> {
    (1..=bsw.len())
        .filter(|&i| bsw.reduced_step()[i - 1])
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct DenseOrbitReport {
    /// True when the criterion certifies a dense orbit; false means
    /// inconclusive, never "no dense orbit".
    pub satisfied: bool,
    pub subword: Vec<usize>,
    pub characters: Vec<Weight>,
    pub rank: usize,
    pub fiber_dimension: usize,
}

/// The dense-orbit sufficient criterion: sort the skipped letters through the
/// kept prefix reflections and test linear independence of the resulting
/// characters.
pub fn dense_orbit_criterion(
    bsw: &BSWord,
    subword: Option<&[usize]>,
) -> Result<DenseOrbitReport> {
    let d = bsw.len();
    let chosen: Vec<usize> = match subword {
        Some(s) => s.to_vec(),
        None => greedy_reduced_subword(bsw),
    };
    // The subword must be strictly increasing, reduced, and multiply to the
    // Demazure product of the whole word.
    if chosen.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Internal("subword positions must strictly increase".into()));
    }
    let mut product = WeylElement::identity(bsw.cartan());
    for &p in &chosen {
        bsw.check_position(p)?;
        if !product.is_ascent(bsw.letter(p))? {
            return Err(Error::Internal("subword is not reduced".into()));
        }
        product = product.multiply_simple(bsw.letter(p))?;
    }
    if &product != bsw.prefix(d) {
        return Err(Error::Internal(
            "subword does not multiply to the Demazure product of the word".into(),
        ));
    }
    let m = d - product.length();
    // Characters: for each skipped position p, apply the product of the kept
    // reflections before p to the letter at p.
    let mut characters = Vec::with_capacity(m);
    let mut kept_prefix = WeylElement::identity(bsw.cartan());
    let mut kept_iter = chosen.iter().peekable();
    for p in 1..=d {
        if kept_iter.peek() == Some(&&p) {
            kept_prefix = kept_prefix.multiply_simple(bsw.letter(p))?;
            kept_iter.next();
        } else {
            characters.push(kept_prefix.apply(&bsw.cartan().simple_root(bsw.letter(p)))?);
        }
    }
    let rows: Vec<Vec<Rat>> = characters
        .iter()
        .map(|w| {
            w.coords
                .iter()
                .map(|&c| Rat::from_integer(crate::num::int(c)))
                .collect()
        })
        .collect();
    let rank = matrix_rank(&rows);
    Ok(DenseOrbitReport {
        satisfied: rank == m,
        subword: chosen,
        characters,
        rank,
        fiber_dimension: m,
    })
}

/// Stabilization flags for the automorphism bound: `flag[i]` is true exactly when
/// the Demazure product of the first i letters is the longest element, i.e. the
/// product of the first i minimal parabolic subgroups is all of G.
pub fn aut_stabilization(bsw: &BSWord) -> Result<Vec<bool>> {
    let datum = enumerate_positive_roots(bsw.cartan());
    let w0 = longest_element(&datum)?;
    Ok((1..=bsw.len()).map(|i| bsw.prefix(i) == &w0).collect())
}
