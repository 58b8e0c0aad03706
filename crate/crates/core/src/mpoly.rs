//! Sparse multivariate polynomials over the rationals, sized for the chart
//! computations: a handful of variables, small degrees, exact division.

use crate::num::Rat;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Exponent vectors are padded to a common variable count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MPoly {
    pub vars: usize,
    pub terms: BTreeMap<Vec<u32>, Rat>,
}

impl MPoly {
    pub fn zero(vars: usize) -> Self {
        MPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: usize, c: Rat) -> Self {
        let mut p = MPoly::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars], c);
        }
        p
    }

    pub fn one(vars: usize) -> Self {
        MPoly::constant(vars, Rat::one())
    }

    /// The variable u_v (0-based).
    pub fn var(vars: usize, v: usize) -> Self {
        let mut exp = vec![0u32; vars];
        exp[v] = 1;
        let mut p = MPoly::zero(vars);
        p.terms.insert(exp, Rat::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    fn insert(&mut self, exp: Vec<u32>, c: Rat) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert(e.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        let mut out = MPoly::zero(self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let exp: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.insert(exp, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.vars);
        }
        MPoly {
            vars: self.vars,
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    /// Minimal exponent of u_v over all terms (the order of vanishing along u_v = 0).
    pub fn ord_in_var(&self, v: usize) -> u32 {
        self.terms.keys().map(|e| e[v]).min().unwrap_or(0)
    }

    pub fn deg_in_var(&self, v: usize) -> u32 {
        self.terms.keys().map(|e| e[v]).max().unwrap_or(0)
    }

    /// Divide by u_v^k, which must divide exactly.
    pub fn shift_down_var(&self, v: usize, k: u32) -> MPoly {
        assert!(self.ord_in_var(v) >= k);
        MPoly {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e[v] -= k;
                    (e, c.clone())
                })
                .collect(),
        }
    }

    fn leading(&self) -> Option<(&Vec<u32>, &Rat)> {
        self.terms.iter().next_back()
    }

    /// Exact polynomial division: `self / divisor` if the remainder is zero.
    pub fn try_div_exact(&self, divisor: &MPoly) -> Option<MPoly> {
        assert_eq!(self.vars, divisor.vars);
        let (dlead_exp, dlead_coeff) = divisor.leading()?;
        let mut rem = self.clone();
        let mut quot = MPoly::zero(self.vars);
        while !rem.is_zero() {
            let (rlead_exp, rlead_coeff) = rem.leading().unwrap();
            let mut qexp = vec![0u32; self.vars];
            for v in 0..self.vars {
                if rlead_exp[v] < dlead_exp[v] {
                    return None;
                }
                qexp[v] = rlead_exp[v] - dlead_exp[v];
            }
            let qcoeff = rlead_coeff / dlead_coeff;
            let mut qterm = MPoly::zero(self.vars);
            qterm.terms.insert(qexp, qcoeff);
            rem = rem.sub(&qterm.mul(divisor));
            quot = quot.add(&qterm);
        }
        Some(quot)
    }

    /// Divide out the largest possible power of `divisor`; returns (power, remainder).
    pub fn strip_factor(&self, divisor: &MPoly) -> (u32, MPoly) {
        assert!(
            !divisor.is_constant(),
            "strip_factor requires a nonconstant divisor"
        );
        let mut count = 0;
        let mut current = self.clone();
        while let Some(next) = current.try_div_exact(divisor) {
            if next.is_zero() {
                break;
            }
            current = next;
            count += 1;
        }
        (count, current)
    }
}
