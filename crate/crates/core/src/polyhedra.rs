//! Exact rational polyhedral cones: double description, pairing-twisted duals,
//! membership, and extremal rays. All arithmetic is exact; rays are stored as
//! primitive integer vectors in deterministic sorted order.

use crate::error::{Error, Result};
use crate::num::{primitive_int_vector, primitive_vector, Int, Rat};
use num_traits::Zero;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalCone {
    dim: usize,
    /// Primitive integer generators, lexicographically sorted, no duplicates.
    rays: Vec<Vec<Int>>,
    /// Basis of the lineality space (empty for pointed cones).
    lines: Vec<Vec<Int>>,
}

impl Serialize for RationalCone {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let to_i64 = |rows: &[Vec<Int>]| -> std::result::Result<Vec<Vec<i64>>, S::Error> {
            rows.iter()
                .map(|row| {
                    row.iter()
                        .map(|x| {
                            i64::try_from(x)
                                .map_err(|_| serde::ser::Error::custom("ray entry exceeds i64"))
                        })
                        .collect()
                })
                .collect()
        };
        let mut st = s.serialize_struct("RationalCone", 3)?;
        st.serialize_field("dim", &self.dim)?;
        st.serialize_field("rays", &to_i64(&self.rays)?)?;
        st.serialize_field("lines", &to_i64(&self.lines)?)?;
        st.end()
    }
}

fn dot(a: &[Int], b: &[Int]) -> Int {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn dot_rat(a: &[Int], b: &[Rat]) -> Rat {
    a.iter()
        .zip(b)
        .map(|(x, y)| Rat::from_integer(x.clone()) * y)
        .sum()
}

impl RationalCone {
    pub fn from_rays(dim: usize, rays: Vec<Vec<Rat>>) -> Result<Self> {
        let mut out: Vec<Vec<Int>> = Vec::new();
        for r in rays {
            if r.len() != dim {
                return Err(Error::DimensionMismatch(r.len(), dim));
            }
            if let Some(p) = primitive_vector(&r) {
                out.push(p);
            }
        }
        out.sort();
        out.dedup();
        Ok(RationalCone {
            dim,
            rays: out,
            lines: Vec::new(),
        })
    }

    pub fn from_integer_rays(dim: usize, rays: Vec<Vec<Int>>) -> Result<Self> {
        let mut out: Vec<Vec<Int>> = Vec::new();
        for r in rays {
            if r.len() != dim {
                return Err(Error::DimensionMismatch(r.len(), dim));
            }
            if let Some(p) = primitive_int_vector(&r) {
                out.push(p);
            }
        }
        out.sort();
        out.dedup();
        Ok(RationalCone {
            dim,
            rays: out,
            lines: Vec::new(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[Vec<Int>] {
        &self.rays
    }

    pub fn lines(&self) -> &[Vec<Int>] {
        &self.lines
    }

    pub fn is_pointed(&self) -> bool {
        self.lines.is_empty()
    }

    /// V-representation of {y : ⟨a, y⟩ ≥ 0 for all a in normals} by double
    /// description, inserting one halfspace at a time.
    pub fn from_inequalities(dim: usize, normals: &[Vec<Int>]) -> Result<Self> {
        for a in normals {
            if a.len() != dim {
                return Err(Error::DimensionMismatch(a.len(), dim));
            }
        }
        if normals.len() > 120 {
            return Err(Error::Internal(
                "double description limited to 120 inequalities".into(),
            ));
        }
        // Lines spanning R^dim, no rays.
        let mut lines: Vec<Vec<Int>> = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| if i == j { Int::from(1) } else { Int::zero() })
                    .collect()
            })
            .collect();
        // (ray, zero-set bitmask over processed inequality indices)
        let mut rays: Vec<(Vec<Int>, u128)> = Vec::new();
        for (idx, a) in normals.iter().enumerate() {
            let bit = 1u128 << idx;
            if let Some(pos) = lines.iter().position(|l| !dot(a, l).is_zero()) {
                // Pivot a line out of the lineality space.
                let pivot = lines.remove(pos);
                let ap = dot(a, &pivot);
                let sign_pos = ap > Int::zero();
                let mut new_lines = Vec::with_capacity(lines.len());
                for l in &lines {
                    let al = dot(a, l);
                    let combined: Vec<Int> = l
                        .iter()
                        .zip(&pivot)
                        .map(|(lc, pc)| lc * &ap - pc * &al)
                        .collect();
                    new_lines.push(primitive_int_vector(&combined).expect("independent lines"));
                }
                lines = new_lines;
                let mut new_rays = Vec::with_capacity(rays.len() + 1);
                for (r, zeros) in &rays {
                    let ar = dot(a, r);
                    let scale = if sign_pos { ap.clone() } else { -ap.clone() };
                    let shift = if sign_pos { ar.clone() } else { -ar.clone() };
                    let combined: Vec<Int> = r
                        .iter()
                        .zip(&pivot)
                        .map(|(rc, pc)| rc * &scale - pc * &shift)
                        .collect();
                    if let Some(p) = primitive_int_vector(&combined) { new_rays.push((p, zeros | bit)) }
                }
                let r0: Vec<Int> = if sign_pos {
                    pivot.clone()
                } else {
                    pivot.iter().map(|x| -x).collect()
                };
                // The pivoted line satisfied every earlier inequality with equality.
                new_rays.push((r0, bit - 1));
                rays = new_rays;
                continue;
            }
            // All lines are orthogonal to a: split the rays.
            let mut positive: Vec<(Vec<Int>, u128)> = Vec::new();
            let mut zero: Vec<(Vec<Int>, u128)> = Vec::new();
            let mut negative: Vec<(Vec<Int>, u128)> = Vec::new();
            for (r, zeros) in &rays {
                let ar = dot(a, r);
                if ar.is_zero() {
                    zero.push((r.clone(), zeros | bit));
                } else if ar > Int::zero() {
                    positive.push((r.clone(), *zeros));
                } else {
                    negative.push((r.clone(), *zeros));
                }
            }
            let mut next = Vec::new();
            next.extend(positive.iter().cloned());
            next.extend(zero.iter().cloned());
            for (p, zp) in &positive {
                for (n, zn) in &negative {
                    let common = zp & zn;
                    // Chernikova adjacency: no third ray's zero set contains the
                    // common zero set of the pair.
                    let adjacent = rays.iter().all(|(r, zr)| {
                        (r == p || r == n) || (zr & common) != common
                    });
                    if !adjacent {
                        continue;
                    }
                    let ap = dot(a, p);
                    let an = dot(a, n);
                    let combined: Vec<Int> = p
                        .iter()
                        .zip(n)
                        .map(|(pc, nc)| pc * (-&an) + nc * &ap)
                        .collect();
                    if let Some(newr) = primitive_int_vector(&combined) {
                        next.push((newr, (common | bit)));
                    }
                }
            }
            next.sort();
            next.dedup_by(|a, b| {
                if a.0 == b.0 {
                    b.1 |= a.1;
                    true
                } else {
                    false
                }
            });
            rays = next;
        }
        let mut out_rays: Vec<Vec<Int>> = rays.into_iter().map(|(r, _)| r).collect();
        out_rays.sort();
        out_rays.dedup();
        let mut out_lines = lines;
        out_lines.sort();
        Ok(RationalCone {
            dim,
            rays: out_rays,
            lines: out_lines,
        })
    }

    /// Generators of {y : ⟨y, P r⟩ ≥ 0 for every generator r}, i.e. the dual
    /// under the bilinear form P (identity when `pairing` is `None`).
    pub fn dual(&self, pairing: Option<&[Vec<Int>]>) -> Result<RationalCone> {
        let mut normals: Vec<Vec<Int>> = Vec::new();
        let transform = |v: &Vec<Int>| -> Result<Vec<Int>> {
            match pairing {
                None => Ok(v.clone()),
                Some(p) => {
                    if p.len() != self.dim || p.iter().any(|row| row.len() != self.dim) {
                        return Err(Error::DimensionMismatch(p.len(), self.dim));
                    }
                    Ok(p.iter().map(|row| dot(row, v)).collect())
                }
            }
        };
        for r in &self.rays {
            normals.push(transform(r)?);
        }
        for l in &self.lines {
            let t = transform(l)?;
            normals.push(t.iter().map(|x| -x).collect());
            normals.push(t);
        }
        RationalCone::from_inequalities(self.dim, &normals)
    }

    /// Exact membership in the conical hull.
    pub fn contains(&self, v: &[Rat]) -> Result<bool> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch(v.len(), self.dim));
        }
        let polar = self.dual(None)?;
        for n in polar.rays() {
            if dot_rat(n, v) < Rat::zero() {
                return Ok(false);
            }
        }
        for m in polar.lines() {
            if !dot_rat(m, v).is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn contains_int(&self, v: &[Int]) -> Result<bool> {
        let rv: Vec<Rat> = v.iter().map(|x| Rat::from_integer(x.clone())).collect();
        self.contains(&rv)
    }

    /// One flag per stored ray: true iff the ray is not a nonnegative
    /// combination of the remaining generators.
    pub fn extremal_flags(&self) -> Result<Vec<bool>> {
        let mut flags = Vec::with_capacity(self.rays.len());
        for (idx, ray) in self.rays.iter().enumerate() {
            let others: Vec<Vec<Int>> = self
                .rays
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != idx)
                .map(|(_, r)| r.clone())
                .collect();
            let mut sub = RationalCone::from_integer_rays(self.dim, others)?;
            sub.lines = self.lines.clone();
            flags.push(!sub.contains_int(ray)?);
        }
        Ok(flags)
    }

    /// The same cone with redundant generators removed.
    pub fn extremal_reduced(&self) -> Result<RationalCone> {
        let flags = self.extremal_flags()?;
        let rays: Vec<Vec<Int>> = self
            .rays
            .iter()
            .zip(&flags)
            .filter(|(_, &f)| f)
            .map(|(r, _)| r.clone())
            .collect();
        Ok(RationalCone {
            dim: self.dim,
            rays,
            lines: self.lines.clone(),
        })
    }

    /// Set equality of generators (both cones in canonical form).
    pub fn same_rays(&self, other: &RationalCone) -> bool {
        self.dim == other.dim && self.rays == other.rays && self.lines == other.lines
    }
}
