//! Word-level analytics for a Bott-Samelson variety X(α_1, …, α_d): prefix
//! Demazure products, reduced-step flags, the line-bundle expansion in the
//! standard-divisor basis, the change of basis to the O_i(1) line bundles, and
//! the anticanonical class.
//!
//! Word positions are 1-based, matching the divisor labels X_1, …, X_d.

use crate::error::{Error, Result};
use crate::num::{is_integer, Int, Rat};
use crate::root_system::{CartanMatrix, Weight};
use crate::weyl::WeylElement;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

/// A divisor class in the basis of standard divisors `[X_1], …, [X_d]`.
///
/// Coefficients are exact rationals so that log-Fano boundary arithmetic can
/// share the type; operations contracted to return integers validate with
/// [`DivisorClass::integer_coeffs`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorClass {
    pub coeffs: Vec<Rat>,
}

impl DivisorClass {
    pub fn zero(d: usize) -> Self {
        DivisorClass {
            coeffs: vec![Rat::zero(); d],
        }
    }

    pub fn from_integers(coeffs: Vec<i64>) -> Self {
        DivisorClass {
            coeffs: coeffs
                .into_iter()
                .map(|c| Rat::from_integer(Int::from(c)))
                .collect(),
        }
    }

    /// Unit vector `[X_i]`, 1-based.
    pub fn standard(d: usize, i: usize) -> Self {
        let mut class = DivisorClass::zero(d);
        class.coeffs[i - 1] = Rat::one();
        class
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &DivisorClass) -> DivisorClass {
        DivisorClass {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &DivisorClass) -> DivisorClass {
        DivisorClass {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> DivisorClass {
        DivisorClass {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Extend by zeros from the truncated word to the full word length.
    pub fn zero_extend(&self, d: usize) -> DivisorClass {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(d, Rat::zero());
        DivisorClass { coeffs }
    }

    pub fn integer_coeffs(&self) -> Result<Vec<Int>> {
        self.coeffs
            .iter()
            .map(|c| {
                if is_integer(c) {
                    Ok(c.numer().clone())
                } else {
                    Err(Error::NonIntegralClass)
                }
            })
            .collect()
    }

    /// Signed combination like "X1 - X2 + 2*X4" for comparison with tables.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (idx, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            if mag.is_one() {
                out.push_str(&format!("X{}", idx + 1));
            } else {
                out.push_str(&format!("{}*X{}", mag, idx + 1));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl Serialize for DivisorClass {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        #[derive(Serialize)]
        struct Fraction {
            num: i64,
            den: i64,
        }
        let to_i64 = |x: &Int| -> std::result::Result<i64, S::Error> {
            i64::try_from(x).map_err(|_| serde::ser::Error::custom("coefficient exceeds i64"))
        };
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            if is_integer(c) {
                seq.serialize_element(&to_i64(c.numer())?)?;
            } else {
                seq.serialize_element(&Fraction {
                    num: to_i64(c.numer())?,
                    den: to_i64(c.denom())?,
                })?;
            }
        }
        seq.end()
    }
}

/// A word of simple roots with its prefix Demazure products.
#[derive(Debug, Clone)]
pub struct BSWord {
    cartan: CartanMatrix,
    word: Vec<usize>,
    /// prefixes[i] = s_{γ_1} ⋆ ⋯ ⋆ s_{γ_i}; prefixes[0] = e.
    prefixes: Vec<WeylElement>,
    reduced_step: Vec<bool>,
}

impl BSWord {
    /// Build prefix products and reduced-step flags. The empty word is allowed.
    pub fn analyze(cartan: &CartanMatrix, word: &[usize]) -> Result<BSWord> {
        for &j in word {
            cartan.check_index(j)?;
        }
        let mut prefixes = Vec::with_capacity(word.len() + 1);
        prefixes.push(WeylElement::identity(cartan));
        let mut reduced_step = Vec::with_capacity(word.len());
        for &j in word {
            let last = prefixes.last().unwrap();
            let ascent = last.is_ascent(j)?;
            reduced_step.push(ascent);
            prefixes.push(last.demazure_multiply_simple(j)?);
        }
        Ok(BSWord {
            cartan: cartan.clone(),
            word: word.to_vec(),
            prefixes,
            reduced_step,
        })
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Letter at a 1-based position.
    pub fn letter(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    /// Prefix Demazure product w_i = s_{γ_1} ⋆ ⋯ ⋆ s_{γ_i}, 0 ≤ i ≤ d.
    pub fn prefix(&self, i: usize) -> &WeylElement {
        &self.prefixes[i]
    }

    pub fn reduced_step(&self) -> &[bool] {
        &self.reduced_step
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced_step.iter().all(|&b| b)
    }

    /// Positions i with w_i = w_{i−1}; these carry the Σ_i divisors.
    pub fn sigma_positions(&self) -> Vec<usize> {
        (1..=self.len()).filter(|&i| !self.reduced_step[i - 1]).collect()
    }

    pub fn check_position(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.len() {
            return Err(Error::PositionOutOfRange {
                position: i,
                length: self.len(),
            });
        }
        Ok(())
    }

    /// Truncation to the first i letters.
    pub fn truncate(&self, i: usize) -> BSWord {
        BSWord {
            cartan: self.cartan.clone(),
            word: self.word[..i].to_vec(),
            prefixes: self.prefixes[..=i].to_vec(),
            reduced_step: self.reduced_step[..i].to_vec(),
        }
    }

    /// The word with position i removed (1-based), re-analyzed.
    pub fn delete_position(&self, i: usize) -> Result<BSWord> {
        self.check_position(i)?;
        let mut word = self.word.clone();
        word.remove(i - 1);
        BSWord::analyze(&self.cartan, &word)
    }

    /// Expansion of O_i(λ) = φ_i^* L_λ in the X basis: the coefficient of X_j is
    /// r_{ij}(λ) = ⟨ s_{γ_j} s_{γ_{j+1}} ⋯ s_{γ_i} (λ), α_{γ_j}^∨ ⟩ for j ≤ i.
    pub fn expand_line_bundle(&self, i: usize, lambda: &Weight) -> Result<DivisorClass> {
        if i > self.len() {
            return Err(Error::PositionOutOfRange {
                position: i,
                length: self.len(),
            });
        }
        if lambda.rank() != self.cartan.rank() {
            return Err(Error::RankMismatch {
                expected: self.cartan.rank(),
                got: lambda.rank(),
            });
        }
        let mut class = DivisorClass::zero(self.len());
        let mut v = lambda.clone();
        for j in (1..=i).rev() {
            let gamma = self.letter(j);
            v = crate::root_system::reflect(&self.cartan, gamma, &v)?;
            class.coeffs[j - 1] = Rat::from_integer(Int::from(v.coords[gamma - 1]));
        }
        Ok(class)
    }

    /// Rows of the change-of-basis matrix: row i is the class of O_i(1) = O_i(−ϖ_{γ_i}).
    /// The matrix is lower uni-triangular.
    pub fn o_basis_rows(&self) -> Vec<DivisorClass> {
        (1..=self.len())
            .map(|i| {
                let lambda = Weight::fundamental(self.cartan.rank(), self.letter(i)).neg();
                self.expand_line_bundle(i, &lambda)
                    .expect("indices validated at construction")
            })
            .collect()
    }

    /// O-coordinates n of a class a, i.e. solve a = Σ n_i [O_i(1)].
    pub fn x_to_o_coords(&self, class: &DivisorClass) -> Result<Vec<Rat>> {
        let d = self.len();
        if class.len() != d {
            return Err(Error::DimensionMismatch(class.len(), d));
        }
        let rows = self.o_basis_rows();
        // Back-substitute from the last coordinate: rows form a lower
        // uni-triangular matrix, so a_j = n_j + Σ_{i>j} n_i r_{ij}.
        let mut n = vec![Rat::zero(); d];
        for j in (0..d).rev() {
            let mut acc = class.coeffs[j].clone();
            for i in j + 1..d {
                let sub = &n[i] * &rows[i].coeffs[j];
                acc -= sub;
            }
            n[j] = acc;
        }
        Ok(n)
    }

    /// The class Σ n_i [O_i(1)] in the X basis.
    pub fn o_to_x_coords(&self, n: &[Rat]) -> Result<DivisorClass> {
        let d = self.len();
        if n.len() != d {
            return Err(Error::DimensionMismatch(n.len(), d));
        }
        let rows = self.o_basis_rows();
        let mut class = DivisorClass::zero(d);
        for (i, row) in rows.iter().enumerate() {
            class = class.add(&row.scale(&n[i]));
        }
        Ok(class)
    }

    /// r_i = ⟨ρ, γ_i^∨⟩ for the suffix roots γ_i = s_{γ_d} ⋯ s_{γ_{i+1}}(α_{γ_i}),
    /// evaluated on the weight side as ⟨ s_{γ_{i+1}} ⋯ s_{γ_d}(ρ), α_{γ_i}^∨ ⟩.
    pub fn suffix_rho_pairings(&self) -> Vec<i64> {
        let d = self.len();
        let mut out = vec![0i64; d];
        let mut v = Weight::rho(self.cartan.rank());
        for i in (1..=d).rev() {
            let gamma = self.letter(i);
            out[i - 1] = v.coords[gamma - 1];
            v = crate::root_system::reflect(&self.cartan, gamma, &v)
                .expect("indices validated at construction");
        }
        out
    }

    /// The anticanonical class −K_X = Σ (r_i + 1) X_i.
    pub fn canonical_class(&self) -> DivisorClass {
        DivisorClass {
            coeffs: self
                .suffix_rho_pairings()
                .iter()
                .map(|r| Rat::from_integer(Int::from(r + 1)))
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rat_int;

    fn word(name: &str, w: &[usize]) -> BSWord {
        BSWord::analyze(&CartanMatrix::from_type(name).unwrap(), w).unwrap()
    }

    fn ints(class: &DivisorClass) -> Vec<i64> {
        class
            .integer_coeffs()
            .unwrap()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn analyze_examples() {
        let w = word("A1", &[1, 1]);
        assert_eq!(w.reduced_step(), &[true, false]);
        assert_eq!(w.sigma_positions(), vec![2]);

        let w = word("A2", &[1, 2, 1, 2]);
        assert_eq!(w.reduced_step(), &[true, true, true, false]);
        assert!(!w.is_reduced());

        let empty = word("A2", &[]);
        assert_eq!(empty.len(), 0);
        assert!(empty.prefix(0).is_identity());
        assert!(empty.is_reduced());

        assert!(BSWord::analyze(&CartanMatrix::from_type("A2").unwrap(), &[3]).is_err());
    }

    #[test]
    fn expansion_matches_reference_classes() {
        // Example: A2 word (α, β, α, β), O_4(−ϖ_β) = −X_1 + X_3 + X_4.
        let w = word("A2", &[1, 2, 1, 2]);
        let lambda = Weight::fundamental(2, 2).neg();
        assert_eq!(ints(&w.expand_line_bundle(4, &lambda).unwrap()), vec![-1, 0, 1, 1]);

        // Example: A2 word (α, β, α, α), O_4(−ϖ_α) = X_1 − X_3 + X_4.
        let w = word("A2", &[1, 2, 1, 1]);
        let lambda = Weight::fundamental(2, 1).neg();
        assert_eq!(ints(&w.expand_line_bundle(4, &lambda).unwrap()), vec![1, 0, -1, 1]);

        // Zero weight expands to the zero class.
        let w = word("C2", &[1, 2, 1, 2]);
        assert_eq!(
            ints(&w.expand_line_bundle(4, &Weight::zero(2)).unwrap()),
            vec![0, 0, 0, 0]
        );
    }

    #[test]
    fn expansion_is_additive_and_unitriangular() {
        let w = word("C2", &[1, 2, 1, 2, 1]);
        let l1 = Weight::new(vec![2, -1]);
        let l2 = Weight::new(vec![-1, 3]);
        for i in 0..=5 {
            let a = w.expand_line_bundle(i, &l1).unwrap();
            let b = w.expand_line_bundle(i, &l2).unwrap();
            let ab = w.expand_line_bundle(i, &l1.add(&l2)).unwrap();
            assert_eq!(a.add(&b), ab);
        }
        // r_ii(−ϖ_{γ_i}) = 1 and coefficient_i(O_i(λ)) = −⟨λ, α_{γ_i}^∨⟩.
        for i in 1..=5 {
            let gamma = w.letter(i);
            let rows = w.o_basis_rows();
            assert_eq!(rows[i - 1].coeffs[i - 1], rat_int(1));
            let lambda = Weight::new(vec![3, -2]);
            let class = w.expand_line_bundle(i, &lambda).unwrap();
            assert_eq!(
                class.coeffs[i - 1],
                rat_int(-lambda.coords[gamma - 1])
            );
        }
    }

    #[test]
    fn o_coordinates_roundtrip() {
        // A1 word (α, α): O_2(1) = −X_1 + X_2, so X_1 + X_2 has O-coordinates (2, 1).
        let w = word("A1", &[1, 1]);
        let class = DivisorClass::from_integers(vec![1, 1]);
        let n = w.x_to_o_coords(&class).unwrap();
        assert_eq!(n, vec![rat_int(2), rat_int(1)]);
        assert_eq!(w.o_to_x_coords(&n).unwrap(), class);

        // O_i(1) has unit O-coordinates.
        let w = word("G2", &[1, 2, 1, 2]);
        for (i, row) in w.o_basis_rows().iter().enumerate() {
            let n = w.x_to_o_coords(row).unwrap();
            let expected: Vec<Rat> =
                (0..4).map(|k| rat_int(i64::from(k == i))).collect();
            assert_eq!(n, expected);
        }

        // Roundtrip on pseudo-random classes.
        let w = word("C2", &[1, 2, 2, 1, 2]);
        let mut state = 0x9e3779b97f4a7c15u64;
        for _ in 0..100 {
            let coeffs: Vec<i64> = (0..5)
                .map(|_| {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    ((state >> 33) % 19) as i64 - 9
                })
                .collect();
            let class = DivisorClass::from_integers(coeffs);
            let n = w.x_to_o_coords(&class).unwrap();
            assert_eq!(w.o_to_x_coords(&n).unwrap(), class);
        }
    }

    #[test]
    fn canonical_class_examples() {
        // P¹: −K = 2 X_1.
        assert_eq!(ints(&word("A1", &[1]).canonical_class()), vec![2]);
        // A2 word (α, β): γ_1 = s_β(α) = α+β gives r_1 = 2, γ_2 = β gives r_2 = 1.
        assert_eq!(ints(&word("A2", &[1, 2]).canonical_class()), vec![3, 2]);
        // Reduced word for w_◦ in A2: all coefficients ≥ 2.
        for c in ints(&word("A2", &[1, 2, 1]).canonical_class()) {
            assert!(c >= 2);
        }
    }

    #[test]
    fn canonical_class_agrees_with_rho_expansion() {
        // coefficient_i(O_d(−ρ)) + 1 = coefficient_i(−K_X).
        for (name, wd) in [
            ("A2", vec![1, 2, 1, 1, 2]),
            ("C2", vec![2, 1, 2, 1]),
            ("G2", vec![1, 2, 1, 2, 1, 2, 1]),
            ("B3", vec![1, 2, 3, 2, 1, 3]),
        ] {
            let w = word(name, &wd);
            let rho = Weight::rho(w.cartan().rank());
            let r = w.expand_line_bundle(w.len(), &rho.neg()).unwrap();
            let k = w.canonical_class();
            for i in 0..w.len() {
                assert_eq!(&r.coeffs[i] + rat_int(1), k.coeffs[i]);
            }
        }
    }

    #[test]
    fn text_rendering() {
        let class = DivisorClass::from_integers(vec![-1, 0, 1, 2]);
        assert_eq!(class.to_text(), "-X1 + X3 + 2*X4");
        assert_eq!(DivisorClass::zero(3).to_text(), "0");
    }
}
