//! Weyl group elements acting on the weight lattice, with length bookkeeping,
//! Demazure products, Bruhat order, and inversion sets.
//!
//! Words multiply left to right: the word (γ_1, …, γ_k) yields the element
//! s_{γ_1} ⋯ s_{γ_k} acting as the composite s_{γ_1} ∘ ⋯ ∘ s_{γ_k} on weights.
//! Elements carry both the weight-lattice action and the root-lattice action;
//! the latter decides descents for arbitrary generalized Cartan matrices.

use crate::error::{Error, Result};
use crate::root_system::{CartanMatrix, RootDatum, Weight};
use std::collections::BTreeSet;

type Mat = Vec<Vec<i64>>;

fn mat_identity(n: usize) -> Mat {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i][k];
            if aik == 0 {
                continue;
            }
            for j in 0..n {
                out[i][j] += aik * b[k][j];
            }
        }
    }
    out
}

fn mat_vec(a: &Mat, v: &[i64]) -> Vec<i64> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(r, x)| r * x).sum())
        .collect()
}

#[derive(Debug, Clone)]
pub struct WeylElement {
    cartan: CartanMatrix,
    weight_mat: Mat,
    weight_inv: Mat,
    root_mat: Mat,
    root_inv: Mat,
    length: usize,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.root_mat == other.root_mat
    }
}

impl Eq for WeylElement {}

impl std::hash::Hash for WeylElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.root_mat.hash(state);
    }
}

impl serde::Serialize for WeylElement {
    /// The integer matrix of the weight-lattice action, plus the length.
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("WeylElement", 2)?;
        st.serialize_field("matrix", &self.weight_mat)?;
        st.serialize_field("length", &self.length)?;
        st.end()
    }
}

impl WeylElement {
    pub fn identity(cartan: &CartanMatrix) -> Self {
        let n = cartan.rank();
        WeylElement {
            cartan: cartan.clone(),
            weight_mat: mat_identity(n),
            weight_inv: mat_identity(n),
            root_mat: mat_identity(n),
            root_inv: mat_identity(n),
            length: 0,
        }
    }

    pub fn simple(cartan: &CartanMatrix, j: usize) -> Result<Self> {
        WeylElement::identity(cartan).multiply_simple(j)
    }

    fn simple_weight_mat(cartan: &CartanMatrix, j: usize) -> Mat {
        // Column j becomes e_j − α_j (fundamental-weight coordinates).
        let n = cartan.rank();
        let mut m = mat_identity(n);
        for r in 0..n {
            m[r][j - 1] -= cartan.rows()[r][j - 1];
        }
        m
    }

    fn simple_root_mat(cartan: &CartanMatrix, j: usize) -> Mat {
        // s_j(α_k) = α_k − ⟨α_k, α_j^∨⟩ α_j: row j picks up −entry(j, k).
        let n = cartan.rank();
        let mut m = mat_identity(n);
        for c in 0..n {
            m[j - 1][c] -= cartan.rows()[j - 1][c];
        }
        m
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    /// Matrix of the action on the weight lattice (fundamental-weight basis).
    pub fn weight_matrix(&self) -> &Mat {
        &self.weight_mat
    }

    pub fn apply(&self, lambda: &Weight) -> Result<Weight> {
        if lambda.rank() != self.cartan.rank() {
            return Err(Error::RankMismatch {
                expected: self.cartan.rank(),
                got: lambda.rank(),
            });
        }
        Ok(Weight::new(mat_vec(&self.weight_mat, &lambda.coords)))
    }

    pub fn apply_inverse(&self, lambda: &Weight) -> Result<Weight> {
        if lambda.rank() != self.cartan.rank() {
            return Err(Error::RankMismatch {
                expected: self.cartan.rank(),
                got: lambda.rank(),
            });
        }
        Ok(Weight::new(mat_vec(&self.weight_inv, &lambda.coords)))
    }

    pub fn inverse(&self) -> WeylElement {
        WeylElement {
            cartan: self.cartan.clone(),
            weight_mat: self.weight_inv.clone(),
            weight_inv: self.weight_mat.clone(),
            root_mat: self.root_inv.clone(),
            root_inv: self.root_mat.clone(),
            length: self.length,
        }
    }

    /// w(α_j) in simple-root coordinates.
    fn image_of_simple_root(&self, j: usize) -> Vec<i64> {
        self.root_mat.iter().map(|row| row[j - 1]).collect()
    }

    /// True iff ℓ(w s_j) > ℓ(w), i.e. w(α_j) is a positive root.
    pub fn is_ascent(&self, j: usize) -> Result<bool> {
        self.cartan.check_index(j)?;
        Ok(self.image_of_simple_root(j).iter().all(|&c| c >= 0))
    }

    /// True iff ℓ(s_j w) < ℓ(w), i.e. w⁻¹(α_j) is a negative root.
    pub fn is_left_descent(&self, j: usize) -> Result<bool> {
        self.cartan.check_index(j)?;
        Ok(self.root_inv.iter().all(|row| row[j - 1] <= 0))
    }

    /// w · s_j with incremental length.
    pub fn multiply_simple(&self, j: usize) -> Result<WeylElement> {
        let ascent = self.is_ascent(j)?;
        let sw = Self::simple_weight_mat(&self.cartan, j);
        let sr = Self::simple_root_mat(&self.cartan, j);
        Ok(WeylElement {
            cartan: self.cartan.clone(),
            weight_mat: mat_mul(&self.weight_mat, &sw),
            weight_inv: mat_mul(&sw, &self.weight_inv),
            root_mat: mat_mul(&self.root_mat, &sr),
            root_inv: mat_mul(&sr, &self.root_inv),
            length: if ascent {
                self.length + 1
            } else {
                self.length - 1
            },
        })
    }

    /// s_j · w with incremental length.
    pub fn left_multiply_simple(&self, j: usize) -> Result<WeylElement> {
        let descent = self.is_left_descent(j)?;
        let sw = Self::simple_weight_mat(&self.cartan, j);
        let sr = Self::simple_root_mat(&self.cartan, j);
        Ok(WeylElement {
            cartan: self.cartan.clone(),
            weight_mat: mat_mul(&sw, &self.weight_mat),
            weight_inv: mat_mul(&self.weight_inv, &sw),
            root_mat: mat_mul(&sr, &self.root_mat),
            root_inv: mat_mul(&self.root_inv, &sr),
            length: if descent {
                self.length - 1
            } else {
                self.length + 1
            },
        })
    }

    pub fn multiply(&self, other: &WeylElement) -> Result<WeylElement> {
        if self.cartan.rank() != other.cartan.rank() {
            return Err(Error::RankMismatch {
                expected: self.cartan.rank(),
                got: other.cartan.rank(),
            });
        }
        let root_mat = mat_mul(&self.root_mat, &other.root_mat);
        let mut out = WeylElement {
            cartan: self.cartan.clone(),
            weight_mat: mat_mul(&self.weight_mat, &other.weight_mat),
            weight_inv: mat_mul(&other.weight_inv, &self.weight_inv),
            root_inv: mat_mul(&other.root_inv, &self.root_inv),
            root_mat,
            length: 0,
        };
        // Length is recovered by stripping descents; valid for any GCM. The
        // probe carries a dummy length so the incremental bookkeeping cannot
        // underflow while the true length is still unknown.
        let mut probe = out.clone();
        probe.length = usize::MAX / 2;
        let rank = self.cartan.rank();
        let mut len = 0usize;
        'outer: loop {
            for j in 1..=rank {
                if !probe.is_ascent(j).unwrap() {
                    probe = probe.multiply_simple(j).unwrap();
                    len += 1;
                    continue 'outer;
                }
            }
            break;
        }
        out.length = len;
        Ok(out)
    }

    /// The Demazure product w ⋆ s_j: the longer of w·s_j and w.
    pub fn demazure_multiply_simple(&self, j: usize) -> Result<WeylElement> {
        if self.is_ascent(j)? {
            self.multiply_simple(j)
        } else {
            Ok(self.clone())
        }
    }

    /// Strips descents right-to-left to produce one reduced word.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut rev = Vec::with_capacity(self.length);
        let rank = self.cartan.rank();
        while w.length > 0 {
            let j = (1..=rank)
                .find(|&j| !w.is_ascent(j).unwrap())
                .expect("nonidentity element has a descent");
            rev.push(j);
            w = w.multiply_simple(j).unwrap();
        }
        rev.reverse();
        rev
    }
}

/// Left fold of ⋆ over the word, starting at the identity.
pub fn demazure_product(cartan: &CartanMatrix, word: &[usize]) -> Result<WeylElement> {
    let mut w = WeylElement::identity(cartan);
    for &j in word {
        w = w.demazure_multiply_simple(j)?;
    }
    Ok(w)
}

/// Ordinary product of the simple reflections of a word.
pub fn ordinary_product(cartan: &CartanMatrix, word: &[usize]) -> Result<WeylElement> {
    let mut w = WeylElement::identity(cartan);
    for &j in word {
        w = w.multiply_simple(j)?;
    }
    Ok(w)
}

/// Bruhat order via the lifting property with left descents.
pub fn bruhat_leq(v: &WeylElement, w: &WeylElement) -> Result<bool> {
    if v.cartan.rank() != w.cartan.rank() {
        return Err(Error::RankMismatch {
            expected: w.cartan.rank(),
            got: v.cartan.rank(),
        });
    }
    let mut v = v.clone();
    let mut w = w.clone();
    loop {
        if w.length == 0 {
            return Ok(v.length == 0);
        }
        if v.length > w.length {
            return Ok(false);
        }
        let rank = w.cartan.rank();
        let j = (1..=rank)
            .find(|&j| w.is_left_descent(j).unwrap())
            .expect("nonidentity element has a left descent");
        if v.is_left_descent(j)? {
            v = v.left_multiply_simple(j)?;
        }
        w = w.left_multiply_simple(j)?;
    }
}

/// R⁺ ∩ w(R⁻), the positive roots ν with w⁻¹(ν) negative. Returned in
/// fundamental-weight coordinates; the count equals ℓ(w).
pub fn inversion_set(w: &WeylElement, datum: &RootDatum) -> Result<Vec<Weight>> {
    datum.require_finite()?;
    let rank = datum.cartan.rank();
    let mut out = Vec::new();
    for root in &datum.positive_roots {
        let mut img = vec![0i64; rank];
        for (r, val) in img.iter_mut().enumerate() {
            for c in 0..rank {
                *val += w.root_inv[r][c] * root.root_coords[c];
            }
        }
        if img.iter().all(|&c| c <= 0) {
            out.push(root.weight(&datum.cartan));
        }
    }
    Ok(out)
}

/// Greedy ascent to the longest element.
pub fn longest_element(datum: &RootDatum) -> Result<WeylElement> {
    datum.require_finite()?;
    let rank = datum.cartan.rank();
    let mut w = WeylElement::identity(&datum.cartan);
    let cap = datum.positive_roots.len() + 1;
    for _ in 0..cap {
        match (1..=rank).find(|&j| w.is_ascent(j).unwrap()) {
            Some(j) => w = w.multiply_simple(j)?,
            None => return Ok(w),
        }
    }
    Err(Error::Internal(
        "longest element ascent did not terminate".into(),
    ))
}

/// All group elements by breadth-first multiplication (finite type only).
pub fn enumerate_elements(datum: &RootDatum) -> Result<Vec<WeylElement>> {
    datum.require_finite()?;
    let rank = datum.cartan.rank();
    let mut seen: BTreeSet<Mat> = BTreeSet::new();
    let mut out = vec![WeylElement::identity(&datum.cartan)];
    seen.insert(out[0].root_mat.clone());
    let mut frontier = 0;
    while frontier < out.len() {
        let current = out[frontier].clone();
        for j in 1..=rank {
            let next = current.multiply_simple(j)?;
            if seen.insert(next.root_mat.clone()) {
                out.push(next);
            }
        }
        frontier += 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::{enumerate_positive_roots, reflect};

    fn a2() -> CartanMatrix {
        CartanMatrix::from_type("A2").unwrap()
    }

    #[test]
    fn simple_reflection_acts_like_reflect() {
        for name in ["A2", "C2", "G2", "A3"] {
            let cm = CartanMatrix::from_type(name).unwrap();
            for j in 1..=cm.rank() {
                let s = WeylElement::simple(&cm, j).unwrap();
                assert_eq!(s.length(), 1);
                for trial in 0..20 {
                    let coords: Vec<i64> =
                        (0..cm.rank()).map(|k| ((trial * 7 + k * 3) % 9) as i64 - 4).collect();
                    let w = Weight::new(coords);
                    assert_eq!(s.apply(&w).unwrap(), reflect(&cm, j, &w).unwrap());
                }
            }
        }
    }

    #[test]
    fn apply_examples() {
        let a2 = a2();
        let s1 = WeylElement::simple(&a2, 1).unwrap();
        let wa = Weight::fundamental(2, 1);
        // s_α(ϖ_α) = ϖ_α − α.
        assert_eq!(s1.apply(&wa).unwrap(), wa.sub(&a2.simple_root(1)));
        // w_◦ negates ρ; brute-force product of a reduced word.
        let w0 = ordinary_product(&a2, &[1, 2, 1]).unwrap();
        let rho = Weight::rho(2);
        assert_eq!(w0.apply(&rho).unwrap(), rho.neg());
        let e = WeylElement::identity(&a2);
        assert_eq!(e.apply(&rho).unwrap(), rho);
    }

    #[test]
    fn multiply_simple_tracks_length() {
        let a2 = a2();
        let s1 = WeylElement::simple(&a2, 1).unwrap();
        assert_eq!(s1.multiply_simple(1).unwrap().length(), 0);
        assert_eq!(ordinary_product(&a2, &[1, 2, 1]).unwrap().length(), 3);
        // Against inversion-count length for every element of small groups.
        for name in ["A2", "C2", "G2", "A3", "B3"] {
            let datum = enumerate_positive_roots(&CartanMatrix::from_type(name).unwrap());
            for w in enumerate_elements(&datum).unwrap() {
                assert_eq!(inversion_set(&w, &datum).unwrap().len(), w.length());
            }
        }
    }

    #[test]
    fn demazure_examples() {
        let a2 = a2();
        // s_α ⋆ s_α = s_α.
        let d = demazure_product(&a2, &[1, 1]).unwrap();
        assert_eq!(d, WeylElement::simple(&a2, 1).unwrap());
        assert_eq!(d.length(), 1);
        assert!(demazure_product(&a2, &[]).unwrap().is_identity());
        // (α, β, α, β) reaches the longest element of length 3.
        let w = demazure_product(&a2, &[1, 2, 1, 2]).unwrap();
        assert_eq!(w.length(), 3);
        let datum = enumerate_positive_roots(&a2);
        assert_eq!(w, longest_element(&datum).unwrap());
    }

    #[test]
    fn demazure_idempotent_on_descents() {
        let g2 = CartanMatrix::from_type("G2").unwrap();
        let words: Vec<Vec<usize>> = vec![
            vec![1, 2, 1, 1, 2],
            vec![2, 2, 1, 2, 1, 2],
            vec![1, 1, 1],
        ];
        for word in words {
            let w = demazure_product(&g2, &word).unwrap();
            assert!(w.length() <= word.len());
            for j in 1..=2 {
                if !w.is_ascent(j).unwrap() {
                    assert_eq!(w.demazure_multiply_simple(j).unwrap(), w);
                }
            }
        }
    }

    #[test]
    fn demazure_supports_non_finite_matrices() {
        let affine = CartanMatrix::new(vec![vec![2, -2], vec![-2, 2]]).unwrap();
        // (1,2,1,2,1) is reduced in the infinite dihedral group; the repeated
        // letter collapses and the trailing letter extends again.
        let w = demazure_product(&affine, &[1, 2, 1, 2, 1, 1, 2]).unwrap();
        assert_eq!(w.length(), 6);
        let long = ordinary_product(&affine, &[1, 2, 1, 2, 1, 2, 1, 2]).unwrap();
        assert_eq!(long.length(), 8);
    }

    #[test]
    fn bruhat_examples() {
        let a2 = a2();
        let e = WeylElement::identity(&a2);
        let sab = ordinary_product(&a2, &[1, 2]).unwrap();
        let sba = ordinary_product(&a2, &[2, 1]).unwrap();
        let sa = WeylElement::simple(&a2, 1).unwrap();
        assert!(bruhat_leq(&e, &sba).unwrap());
        assert!(!bruhat_leq(&sab, &sba).unwrap());
        assert!(bruhat_leq(&sa, &sab).unwrap());
    }

    #[test]
    fn inversion_set_examples() {
        let a2 = a2();
        let datum = enumerate_positive_roots(&a2);
        let e = WeylElement::identity(&a2);
        assert!(inversion_set(&e, &datum).unwrap().is_empty());
        let sa = WeylElement::simple(&a2, 1).unwrap();
        assert_eq!(inversion_set(&sa, &datum).unwrap(), vec![a2.simple_root(1)]);
        let w0 = longest_element(&datum).unwrap();
        assert_eq!(inversion_set(&w0, &datum).unwrap().len(), 3);
    }

    #[test]
    fn longest_element_examples() {
        let a1 = CartanMatrix::from_type("A1").unwrap();
        let datum = enumerate_positive_roots(&a1);
        assert_eq!(
            longest_element(&datum).unwrap(),
            WeylElement::simple(&a1, 1).unwrap()
        );
        let a2 = a2();
        let datum = enumerate_positive_roots(&a2);
        let w0 = longest_element(&datum).unwrap();
        assert_eq!(w0, ordinary_product(&a2, &[1, 2, 1]).unwrap());
        assert_eq!(w0, ordinary_product(&a2, &[2, 1, 2]).unwrap());
        let c2 = CartanMatrix::from_type("C2").unwrap();
        let datum = enumerate_positive_roots(&c2);
        assert_eq!(longest_element(&datum).unwrap().length(), 4);
        let affine = CartanMatrix::new(vec![vec![2, -2], vec![-2, 2]]).unwrap();
        let datum = crate::root_system::enumerate_positive_roots_capped(&affine, 100);
        assert!(longest_element(&datum).is_err());
    }

    #[test]
    fn group_orders() {
        for (name, order) in [("A2", 6), ("C2", 8), ("G2", 12), ("A3", 24)] {
            let datum = enumerate_positive_roots(&CartanMatrix::from_type(name).unwrap());
            assert_eq!(enumerate_elements(&datum).unwrap().len(), order);
        }
    }

    #[test]
    fn inverse_and_multiply_consistent() {
        let c2 = CartanMatrix::from_type("C2").unwrap();
        let datum = enumerate_positive_roots(&c2);
        for w in enumerate_elements(&datum).unwrap() {
            let e = w.multiply(&w.inverse()).unwrap();
            assert!(e.is_identity());
            assert_eq!(w.inverse().length(), w.length());
        }
    }
}
