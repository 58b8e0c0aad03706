//! Exact arithmetic helpers: big rationals, primitive integer vectors, and
//! small dense linear algebra over the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(n: i64) -> Int {
    Int::from(n)
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// Clear denominators and divide by the content, preserving direction.
/// Returns `None` for the zero vector.
pub fn primitive_vector(v: &[Rat]) -> Option<Vec<Int>> {
    if v.iter().all(|x| x.is_zero()) {
        return None;
    }
    let mut denom_lcm = Int::one();
    for x in v {
        denom_lcm = denom_lcm.lcm(x.denom());
    }
    let ints: Vec<Int> = v
        .iter()
        .map(|x| x.numer() * (&denom_lcm / x.denom()))
        .collect();
    let mut content = Int::zero();
    for x in &ints {
        content = content.gcd(x);
    }
    Some(ints.iter().map(|x| x / &content).collect())
}

pub fn primitive_int_vector(v: &[Int]) -> Option<Vec<Int>> {
    if v.iter().all(|x| x.is_zero()) {
        return None;
    }
    let mut content = Int::zero();
    for x in v {
        content = content.gcd(x);
    }
    Some(v.iter().map(|x| x / &content).collect())
}

/// Rank of a rational matrix by Gaussian elimination.
pub fn rank(rows: &[Vec<Rat>]) -> usize {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let nrows = m.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = m[0].len();
    let mut rank = 0;
    let mut col = 0;
    while rank < nrows && col < ncols {
        let pivot = (rank..nrows).find(|&r| !m[r][col].is_zero());
        let Some(p) = pivot else {
            col += 1;
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][col].clone();
        for r in rank + 1..nrows {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &inv;
            for c in col..ncols {
                let sub = &factor * &m[rank][c];
                m[r][c] = &m[r][c] - sub;
            }
        }
        rank += 1;
        col += 1;
    }
    rank
}

/// Inverse of a square rational matrix, if it exists.
pub fn invert(mat: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = mat.len();
    let mut a: Vec<Vec<Rat>> = mat.to_vec();
    let mut b: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rat::one() } else { Rat::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = a[col][col].clone();
        for c in 0..n {
            a[col][c] = &a[col][c] / &inv;
            b[col][c] = &b[col][c] / &inv;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for c in 0..n {
                let sa = &factor * &a[col][c];
                a[r][c] = &a[r][c] - sa;
                let sb = &factor * &b[col][c];
                b[r][c] = &b[r][c] - sb;
            }
        }
    }
    Some(b)
}

/// Determinant of a square rational matrix.
pub fn det(mat: &[Vec<Rat>]) -> Rat {
    let n = mat.len();
    let mut a: Vec<Vec<Rat>> = mat.to_vec();
    let mut sign = Rat::one();
    let mut result = Rat::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Rat::zero();
        };
        if pivot != col {
            a.swap(col, pivot);
            sign = -sign;
        }
        result *= a[col][col].clone();
        let inv = a[col][col].clone();
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] / &inv;
            for c in col..n {
                let sub = &factor * &a[col][c];
                a[r][c] = &a[r][c] - sub;
            }
        }
    }
    sign * result
}

pub fn int_to_rat_matrix(mat: &[Vec<Int>]) -> Vec<Vec<Rat>> {
    mat.iter()
        .map(|row| row.iter().map(|x| Rat::from_integer(x.clone())).collect())
        .collect()
}

pub fn is_integer(x: &Rat) -> bool {
    x.denom().is_one()
}

pub fn to_integer(x: &Rat) -> Option<Int> {
    is_integer(x).then(|| x.numer().clone())
}

pub fn abs_int(x: &Int) -> Int {
    x.abs()
}
