//! The Chow ring of X(word) in the square-free monomial basis.
//!
//! Products are governed by `x_i x_j = [X_ij]` for i ≠ j and
//! x_j² = −Σ_{i<j} ⟨β_j, β_i^∨⟩ x_i x_j, where β_i = s_{γ_1} ⋯ s_{γ_{i−1}}(α_{γ_i}).
//! Reduction eliminates the highest repeated index first; x_j² only produces
//! indices below j, so rewriting terminates.

use crate::bsword::{BSWord, DivisorClass};
use crate::error::{Error, Result};
use crate::num::Int;
use crate::weyl::{ordinary_product, WeylElement};
use num_traits::Zero;
use std::collections::BTreeMap;

/// Integer linear combination of square-free monomials x_S with |S| = grade.
/// Keys are strictly increasing 1-based index vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleClass {
    pub grade: usize,
    pub coeffs: BTreeMap<Vec<usize>, Int>,
}

impl serde::Serialize for CycleClass {
    /// A map from sorted index tuples like "1,3" to integer coefficients.
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(Some(self.coeffs.len()))?;
        for (k, v) in &self.coeffs {
            let key = k
                .iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(",");
            let value: i64 = v
                .try_into()
                .map_err(|_| serde::ser::Error::custom("coefficient exceeds i64"))?;
            map.serialize_entry(&key, &value)?;
        }
        map.end()
    }
}

impl CycleClass {
    pub fn zero(grade: usize) -> Self {
        CycleClass {
            grade,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn monomial(indices: &[usize]) -> Self {
        let mut sorted = indices.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), indices.len(), "monomial must be square-free");
        CycleClass {
            grade: sorted.len(),
            coeffs: BTreeMap::from([(sorted, Int::from(1))]),
        }
    }

    pub fn insert(&mut self, indices: Vec<usize>, coeff: Int) {
        use std::collections::btree_map::Entry;
        if coeff.is_zero() {
            return;
        }
        match self.coeffs.entry(indices) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
        }
    }

    pub fn add(&self, other: &CycleClass) -> CycleClass {
        assert_eq!(self.grade, other.grade);
        let mut out = self.clone();
        for (k, v) in &other.coeffs {
            out.insert(k.clone(), v.clone());
        }
        out
    }

    pub fn scale(&self, c: &Int) -> CycleClass {
        if c.is_zero() {
            return CycleClass::zero(self.grade);
        }
        CycleClass {
            grade: self.grade,
            coeffs: self.coeffs.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient vector over the lex-ordered grade-k subset basis.
    pub fn to_vector(&self, d: usize) -> Vec<Int> {
        subsets(d, self.grade)
            .into_iter()
            .map(|s| self.coeffs.get(&s).cloned().unwrap_or_else(Int::zero))
            .collect()
    }

    pub fn from_vector(d: usize, grade: usize, v: &[Int]) -> CycleClass {
        let mut out = CycleClass::zero(grade);
        for (s, c) in subsets(d, grade).into_iter().zip(v) {
            out.insert(s, c.clone());
        }
        out
    }

    pub fn to_text(&self) -> String {
        use num_traits::{One, Signed};
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in &self.coeffs {
            let name = format!(
                "X{{{}}}",
                k.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
            );
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            if mag.is_one() {
                out.push_str(&name);
            } else {
                out.push_str(&format!("{mag}*{name}"));
            }
        }
        out
    }
}

/// Strictly increasing k-subsets of {1, …, d} in lexicographic order.
pub fn subsets(d: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(d: usize, k: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..=d {
            current.push(i);
            rec(d, k, i + 1, current, out);
            current.pop();
        }
    }
    rec(d, k, 1, &mut current, &mut out);
    out
}

/// Multiplication tables for the Chow ring of one word.
#[derive(Debug, Clone)]
pub struct ChowRing {
    d: usize,
    /// pair[j][i] = ⟨β_{j+1}, β_{i+1}^∨⟩ for i < j (0-based storage).
    pair: Vec<Vec<i64>>,
}

impl ChowRing {
    pub fn new(bsw: &BSWord) -> ChowRing {
        let cartan = bsw.cartan();
        let d = bsw.len();
        // Ordinary (not Demazure) prefix products define the β roots.
        let mut prefixes: Vec<WeylElement> = Vec::with_capacity(d + 1);
        prefixes.push(WeylElement::identity(cartan));
        for &j in bsw.word() {
            prefixes.push(prefixes.last().unwrap().multiply_simple(j).unwrap());
        }
        let betas: Vec<_> = (1..=d)
            .map(|i| {
                let alpha = cartan.simple_root(bsw.letter(i));
                prefixes[i - 1].apply(&alpha).unwrap()
            })
            .collect();
        let mut pair = vec![vec![0i64; d]; d];
        for j in 0..d {
            for i in 0..j {
                // ⟨β_j, β_i^∨⟩ = ⟨u_i⁻¹ β_j, α_{γ_i}^∨⟩.
                let pulled = prefixes[i].apply_inverse(&betas[j]).unwrap();
                pair[j][i] = pulled.coords[bsw.letter(i + 1) - 1];
            }
        }
        ChowRing { d, pair }
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    /// The grade-2 class x_j² = −Σ_{i<j} ⟨β_j, β_i^∨⟩ x_i x_j.
    pub fn square_reduce(&self, j: usize) -> Result<CycleClass> {
        if j == 0 || j > self.d {
            return Err(Error::PositionOutOfRange {
                position: j,
                length: self.d,
            });
        }
        let mut out = CycleClass::zero(2);
        for i in 1..j {
            out.insert(vec![i, j], Int::from(-self.pair[j - 1][i - 1]));
        }
        Ok(out)
    }

    fn reduce_multiset(&self, multiset: Vec<usize>, coeff: Int, out: &mut CycleClass) {
        // Worklist rewriting; each step replaces the highest repeated index.
        let mut stack = vec![(multiset, coeff)];
        while let Some((mut ms, c)) = stack.pop() {
            ms.sort_unstable();
            let repeated = ms
                .windows(2)
                .rev()
                .position(|w| w[0] == w[1])
                .map(|p| ms.len() - 2 - p);
            match repeated {
                None => out.insert(ms, c),
                Some(pos) => {
                    let j = ms[pos];
                    // Drop one copy of j, then splice in each x_i from x_j².
                    let mut base = ms.clone();
                    base.remove(pos);
                    for i in 1..j {
                        let factor = -self.pair[j - 1][i - 1];
                        if factor == 0 {
                            continue;
                        }
                        let mut next = base.clone();
                        next.push(i);
                        stack.push((next, &c * Int::from(factor)));
                    }
                }
            }
        }
    }

    pub fn multiply(&self, u: &CycleClass, v: &CycleClass) -> Result<CycleClass> {
        let grade = u.grade + v.grade;
        if grade > self.d {
            return Err(Error::GradeOverflow(grade, self.d));
        }
        let mut out = CycleClass::zero(grade);
        for (ku, cu) in &u.coeffs {
            for (kv, cv) in &v.coeffs {
                let mut ms = ku.clone();
                ms.extend_from_slice(kv);
                self.reduce_multiset(ms, cu * cv, &mut out);
            }
        }
        Ok(out)
    }

    /// Coefficient of the point class x_1 ⋯ x_d.
    pub fn degree(&self, c: &CycleClass) -> Result<Int> {
        if c.grade != self.d {
            return Err(Error::GradeMismatch {
                expected: self.d,
                got: c.grade,
            });
        }
        let point: Vec<usize> = (1..=self.d).collect();
        Ok(c.coeffs.get(&point).cloned().unwrap_or_else(Int::zero))
    }

    /// Degrees x_S · x_T over the lex-ordered grade-k and grade-(d−k) bases.
    pub fn pairing_matrix(&self, k: usize) -> Result<Vec<Vec<Int>>> {
        if k > self.d {
            return Err(Error::GradeMismatch {
                expected: self.d,
                got: k,
            });
        }
        let rows = subsets(self.d, k);
        let cols = subsets(self.d, self.d - k);
        let mut out = Vec::with_capacity(rows.len());
        for s in &rows {
            let xs = CycleClass::monomial(s);
            let mut row = Vec::with_capacity(cols.len());
            for t in &cols {
                let xt = CycleClass::monomial(t);
                row.push(self.degree(&self.multiply(&xs, &xt)?)?);
            }
            out.push(row);
        }
        Ok(out)
    }

    /// Pairing matrix of arbitrary classes: entry (a, b) = deg(u_a · v_b).
    pub fn pairing_of(&self, us: &[CycleClass], vs: &[CycleClass]) -> Result<Vec<Vec<Int>>> {
        us.iter()
            .map(|u| {
                vs.iter()
                    .map(|v| self.degree(&self.multiply(u, v)?))
                    .collect()
            })
            .collect()
    }

    /// A divisor class with integer coefficients as a grade-1 cycle.
    pub fn divisor_to_cycle(&self, class: &DivisorClass) -> Result<CycleClass> {
        let ints = class.integer_coeffs()?;
        let mut out = CycleClass::zero(1);
        for (i, c) in ints.into_iter().enumerate() {
            out.insert(vec![i + 1], c);
        }
        Ok(out)
    }
}

/// Convenience: the ordinary product of a word (used by orbit computations).
pub fn word_product(bsw: &BSWord) -> WeylElement {
    ordinary_product(bsw.cartan(), bsw.word()).expect("word validated at construction")
}
