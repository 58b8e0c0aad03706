//! Chart-side valuations for Sigma classes.
//!
//! The big cell of a Bott-Samelson variety is parametrized by
//! (u_1, …, u_i) ↦ [x_{-γ_1}(u_1), …, x_{-γ_i}(u_i)], and the standard divisor
//! X_j meets it in {u_j = 0}. Pulling the canonical B-semi-invariant section of
//! L_{−ϖ_γ}|_{X(w)} back along φ_i gives the matrix coefficient
//!
//!   F(u) = ⟨ v*_{w(ϖ_γ)},  x_{-γ_1}(u_1) ⋯ x_{-γ_i}(u_i) · v_{ϖ_γ} ⟩
//!
//! in a representation whose w(ϖ_γ) weight space is one-dimensional. The order
//! of vanishing of F along u_j = 0 is then the exact multiplicity of X_j in the
//! pulled-back divisor. Fundamental weights are realized by wedge powers of the
//! defining representations for types A–D and by the 7-dimensional and adjoint
//! representations for G2.

use crate::bsword::BSWord;
use crate::error::{Error, Result};
use crate::mpoly::MPoly;
use crate::num::{rat, rat_int, Rat};
use crate::root_system::{CartanMatrix, Weight};
use num_traits::{One, Zero};

type Mat = Vec<Vec<Rat>>;

fn zeros(dim: usize) -> Mat {
    vec![vec![Rat::zero(); dim]; dim]
}

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let mut out = zeros(n);
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if b[k][j].is_zero() {
                    continue;
                }
                let add = &a[i][k] * &b[k][j];
                out[i][j] = &out[i][j] + add;
            }
        }
    }
    out
}

fn mat_is_zero(a: &Mat) -> bool {
    a.iter().all(|row| row.iter().all(|x| x.is_zero()))
}

/// A representation prepared for chart minors.
pub(crate) struct ChartRep {
    pub dim: usize,
    /// Lowering operator for each simple root, 0-indexed by root.
    pub lowering: Vec<Mat>,
    pub basis_weights: Vec<Weight>,
}

/// Which representation and wedge power realizes each fundamental weight.
pub(crate) struct ChartSet {
    pub reps: Vec<ChartRep>,
    /// 0-indexed by simple root: (rep index, wedge size).
    pub letter_map: Vec<Option<(usize, usize)>>,
}

fn matches_type(cartan: &CartanMatrix, name: &str) -> bool {
    CartanMatrix::from_type(name)
        .map(|cm| cm.rows() == cartan.rows())
        .unwrap_or(false)
}

fn unit(dim: usize, r: usize, c: usize, v: Rat) -> Mat {
    let mut m = zeros(dim);
    m[r][c] = v;
    m
}

fn mat_add(a: &Mat, b: &Mat) -> Mat {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x + y).collect())
        .collect()
}

/// ε_m (1-based) in fundamental-weight coordinates, per classical type.
fn epsilon_weight(letter: char, n: usize, m: usize) -> Weight {
    let mut coords = vec![0i64; n];
    for i in 1..n {
        coords[i - 1] = i64::from(m == i) - i64::from(m == i + 1);
    }
    coords[n - 1] = match letter {
        'A' => i64::from(m == n) - i64::from(m == n + 1),
        'B' => 2 * i64::from(m == n),
        'C' => i64::from(m == n),
        'D' => i64::from(m == n - 1) + i64::from(m == n),
        _ => unreachable!(),
    };
    Weight::new(coords)
}

fn std_rep_a(n: usize) -> ChartRep {
    let dim = n + 1;
    let lowering = (1..=n)
        .map(|j| unit(dim, j, j - 1, Rat::one()))
        .collect();
    let basis_weights = (1..=dim).map(|m| epsilon_weight('A', n, m)).collect();
    ChartRep {
        dim,
        lowering,
        basis_weights,
    }
}

fn std_rep_c(n: usize) -> ChartRep {
    let dim = 2 * n;
    let mut lowering = Vec::with_capacity(n);
    for j in 1..n {
        let m = mat_add(
            &unit(dim, j, j - 1, Rat::one()),
            &unit(dim, 2 * n - j, 2 * n - j - 1, -Rat::one()),
        );
        lowering.push(m);
    }
    lowering.push(unit(dim, n, n - 1, Rat::one()));
    let mut basis_weights = Vec::with_capacity(dim);
    for m in 1..=n {
        basis_weights.push(epsilon_weight('C', n, m));
    }
    for m in (1..=n).rev() {
        basis_weights.push(epsilon_weight('C', n, m).neg());
    }
    ChartRep {
        dim,
        lowering,
        basis_weights,
    }
}

fn std_rep_b(n: usize) -> ChartRep {
    let dim = 2 * n + 1;
    let mut lowering = Vec::with_capacity(n);
    for j in 1..n {
        let m = mat_add(
            &unit(dim, j, j - 1, Rat::one()),
            &unit(dim, 2 * n + 1 - j, 2 * n - j, -Rat::one()),
        );
        lowering.push(m);
    }
    lowering.push(mat_add(
        &unit(dim, n, n - 1, Rat::one()),
        &unit(dim, n + 1, n, -Rat::one()),
    ));
    let mut basis_weights = Vec::with_capacity(dim);
    for m in 1..=n {
        basis_weights.push(epsilon_weight('B', n, m));
    }
    basis_weights.push(Weight::zero(n));
    for m in (1..=n).rev() {
        basis_weights.push(epsilon_weight('B', n, m).neg());
    }
    ChartRep {
        dim,
        lowering,
        basis_weights,
    }
}

fn std_rep_d(n: usize) -> ChartRep {
    let dim = 2 * n;
    let mut lowering = Vec::with_capacity(n);
    for j in 1..n {
        let m = mat_add(
            &unit(dim, j, j - 1, Rat::one()),
            &unit(dim, 2 * n - j, 2 * n - j - 1, -Rat::one()),
        );
        lowering.push(m);
    }
    lowering.push(mat_add(
        &unit(dim, n, n - 2, Rat::one()),
        &unit(dim, n + 1, n - 1, -Rat::one()),
    ));
    let mut basis_weights = Vec::with_capacity(dim);
    for m in 1..=n {
        basis_weights.push(epsilon_weight('D', n, m));
    }
    for m in (1..=n).rev() {
        basis_weights.push(epsilon_weight('D', n, m).neg());
    }
    ChartRep {
        dim,
        lowering,
        basis_weights,
    }
}

/// The 7-dimensional representation of G2, with basis ordered by descending
/// weight: 2α+β, α+β, α, 0, −α, −α−β, −2α−β.
pub(crate) fn g2_seven_ops() -> (Vec<Mat>, Vec<Mat>, Vec<Mat>) {
    let dim = 7;
    let f1 = {
        let mut m = zeros(dim);
        m[1][0] = Rat::one();
        m[3][2] = Rat::one();
        m[4][3] = rat_int(2);
        m[6][5] = Rat::one();
        m
    };
    let e1 = {
        let mut m = zeros(dim);
        m[0][1] = Rat::one();
        m[2][3] = rat_int(2);
        m[3][4] = Rat::one();
        m[5][6] = Rat::one();
        m
    };
    let f2 = {
        let mut m = zeros(dim);
        m[2][1] = Rat::one();
        m[5][4] = Rat::one();
        m
    };
    let e2 = {
        let mut m = zeros(dim);
        m[1][2] = Rat::one();
        m[4][5] = Rat::one();
        m
    };
    let diag = |vals: [i64; 7]| -> Mat {
        let mut m = zeros(dim);
        for (i, v) in vals.into_iter().enumerate() {
            m[i][i] = rat_int(v);
        }
        m
    };
    let h1 = diag([1, -1, 2, 0, -2, 1, -1]);
    let h2 = diag([0, 1, -1, 0, 1, -1, 0]);
    (vec![f1, f2], vec![e1, e2], vec![h1, h2])
}

fn g2_seven() -> ChartRep {
    let (f, _, _) = g2_seven_ops();
    let basis_weights = vec![
        Weight::new(vec![1, 0]),
        Weight::new(vec![-1, 1]),
        Weight::new(vec![2, -1]),
        Weight::new(vec![0, 0]),
        Weight::new(vec![-2, 1]),
        Weight::new(vec![1, -1]),
        Weight::new(vec![-1, 0]),
    ];
    ChartRep {
        dim: 7,
        lowering: f,
        basis_weights,
    }
}

fn bracket(a: &Mat, b: &Mat) -> Mat {
    let ab = mat_mul(a, b);
    let ba = mat_mul(b, a);
    ab.iter()
        .zip(&ba)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x - y).collect())
        .collect()
}

fn flatten(m: &Mat) -> Vec<Rat> {
    m.iter().flatten().cloned().collect()
}

/// Express x in the span of basis vectors; returns coordinates if possible.
fn express_in_span(basis: &[Vec<Rat>], x: &[Rat]) -> Option<Vec<Rat>> {
    let cols = basis.len();
    let rows = x.len();
    // Augmented Gaussian elimination on [basisᵀ | x].
    let mut aug: Vec<Vec<Rat>> = (0..rows)
        .map(|r| {
            let mut row: Vec<Rat> = basis.iter().map(|b| b[r].clone()).collect();
            row.push(x[r].clone());
            row
        })
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut rank_row = 0;
    for col in 0..cols {
        let Some(p) = (rank_row..rows).find(|&r| !aug[r][col].is_zero()) else {
            continue;
        };
        aug.swap(rank_row, p);
        let inv = aug[rank_row][col].clone();
        for c in 0..=cols {
            aug[rank_row][c] = &aug[rank_row][c] / &inv;
        }
        for r in 0..rows {
            if r == rank_row || aug[r][col].is_zero() {
                continue;
            }
            let factor = aug[r][col].clone();
            for c in 0..=cols {
                let sub = &factor * &aug[rank_row][c];
                aug[r][c] = &aug[r][c] - sub;
            }
        }
        pivots.push((rank_row, col));
        rank_row += 1;
    }
    // Consistency: no pivot in the augmented column.
    for r in rank_row..rows {
        if !aug[r][cols].is_zero() {
            return None;
        }
    }
    let mut coords = vec![Rat::zero(); cols];
    for (r, c) in pivots {
        coords[c] = aug[r][cols].clone();
    }
    Some(coords)
}

/// The adjoint representation of G2, built from the 7-dimensional one by
/// closing {e_i, f_i, h_i} under brackets and recording weights.
fn g2_adjoint() -> Result<ChartRep> {
    let (f, e, h) = g2_seven_ops();
    let alpha = Weight::new(vec![2, -1]);
    let beta = Weight::new(vec![-3, 2]);
    let mut elements: Vec<(Mat, Weight)> = vec![
        (h[0].clone(), Weight::zero(2)),
        (h[1].clone(), Weight::zero(2)),
        (e[0].clone(), alpha.clone()),
        (e[1].clone(), beta.clone()),
        (f[0].clone(), alpha.neg()),
        (f[1].clone(), beta.neg()),
    ];
    let mut flat: Vec<Vec<Rat>> = elements.iter().map(|(m, _)| flatten(m)).collect();
    loop {
        let mut grew = false;
        let count = elements.len();
        'pairs: for i in 0..count {
            for j in 0..count {
                let b = bracket(&elements[i].0, &elements[j].0);
                if mat_is_zero(&b) {
                    continue;
                }
                let fb = flatten(&b);
                if express_in_span(&flat, &fb).is_none() {
                    let wt = elements[i].1.add(&elements[j].1);
                    elements.push((b, wt));
                    flat.push(fb);
                    grew = true;
                    break 'pairs;
                }
            }
        }
        if !grew {
            break;
        }
    }
    if elements.len() != 14 {
        return Err(Error::Internal(format!(
            "G2 adjoint closure produced {} elements",
            elements.len()
        )));
    }
    let dim = 14;
    let mut lowering = Vec::with_capacity(2);
    for fr in &f {
        let mut mat = zeros(dim);
        for (k, (b, _)) in elements.iter().enumerate() {
            let image = bracket(fr, b);
            let coords = express_in_span(&flat, &flatten(&image)).ok_or_else(|| {
                Error::Internal("adjoint action left the closed algebra".into())
            })?;
            for (r, c) in coords.into_iter().enumerate() {
                mat[r][k] = c;
            }
        }
        lowering.push(mat);
    }
    let basis_weights = elements.into_iter().map(|(_, w)| w).collect();
    Ok(ChartRep {
        dim,
        lowering,
        basis_weights,
    })
}

/// Representation data for the root system, or None when no prepared model exists.
pub(crate) fn chart_set(cartan: &CartanMatrix) -> Result<Option<ChartSet>> {
    let n = cartan.rank();
    if matches_type(cartan, &format!("A{n}")) {
        return Ok(Some(ChartSet {
            reps: vec![std_rep_a(n)],
            letter_map: (1..=n).map(|j| Some((0, j))).collect(),
        }));
    }
    if n == 2 && matches_type(cartan, "B2") {
        // so_5 ≅ sp_4 with the two simple roots swapped.
        let sp4 = std_rep_c(2);
        let lowering = vec![sp4.lowering[1].clone(), sp4.lowering[0].clone()];
        let basis_weights = sp4
            .basis_weights
            .iter()
            .map(|w| Weight::new(vec![w.coords[1], w.coords[0]]))
            .collect();
        return Ok(Some(ChartSet {
            reps: vec![ChartRep {
                dim: sp4.dim,
                lowering,
                basis_weights,
            }],
            letter_map: vec![Some((0, 2)), Some((0, 1))],
        }));
    }
    if matches_type(cartan, &format!("C{n}")) {
        return Ok(Some(ChartSet {
            reps: vec![std_rep_c(n)],
            letter_map: (1..=n).map(|j| Some((0, j))).collect(),
        }));
    }
    if matches_type(cartan, &format!("B{n}")) {
        return Ok(Some(ChartSet {
            reps: vec![std_rep_b(n)],
            letter_map: (1..=n)
                .map(|j| if j < n { Some((0, j)) } else { None })
                .collect(),
        }));
    }
    if matches_type(cartan, &format!("D{n}")) {
        return Ok(Some(ChartSet {
            reps: vec![std_rep_d(n)],
            letter_map: (1..=n)
                .map(|j| if j <= n - 2 { Some((0, j)) } else { None })
                .collect(),
        }));
    }
    if n == 2 && matches_type(cartan, "G2") {
        return Ok(Some(ChartSet {
            reps: vec![g2_seven(), g2_adjoint()?],
            letter_map: vec![Some((0, 1)), Some((1, 1))],
        }));
    }
    Ok(None)
}

/// exp(u_var · lowering) as a polynomial matrix.
fn exp_poly(lowering: &Mat, var: usize, vars: usize) -> Vec<Vec<MPoly>> {
    let dim = lowering.len();
    let mut out: Vec<Vec<MPoly>> = (0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| {
                    if i == j {
                        MPoly::one(vars)
                    } else {
                        MPoly::zero(vars)
                    }
                })
                .collect()
        })
        .collect();
    let mut power = lowering.clone();
    let mut factorial = Rat::one();
    let mut m = 1u32;
    let u = MPoly::var(vars, var);
    let mut upow = u.clone();
    while !mat_is_zero(&power) {
        assert!(m as usize <= dim, "lowering operator is not nilpotent");
        for i in 0..dim {
            for j in 0..dim {
                if power[i][j].is_zero() {
                    continue;
                }
                let coeff = &power[i][j] / &factorial;
                out[i][j] = out[i][j].add(&upow.scale(&coeff));
            }
        }
        power = mat_mul(&power, lowering);
        m += 1;
        factorial *= rat(i64::from(m), 1);
        upow = upow.mul(&u);
    }
    out
}

fn poly_mat_mul(a: &[Vec<MPoly>], b: &[Vec<MPoly>], vars: usize) -> Vec<Vec<MPoly>> {
    let n = a.len();
    let mut out: Vec<Vec<MPoly>> = (0..n).map(|_| (0..n).map(|_| MPoly::zero(vars)).collect()).collect();
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if b[k][j].is_zero() {
                    continue;
                }
                out[i][j] = out[i][j].add(&a[i][k].mul(&b[k][j]));
            }
        }
    }
    out
}

/// det of the submatrix m[rows × cols] by subset dynamic programming.
fn minor_det(m: &[Vec<MPoly>], rows: &[usize], cols: &[usize], vars: usize) -> MPoly {
    let k = rows.len();
    assert_eq!(k, cols.len());
    if k == 0 {
        return MPoly::one(vars);
    }
    let full = (1usize << k) - 1;
    let mut memo: Vec<Option<MPoly>> = vec![None; 1 << k];
    memo[0] = Some(MPoly::one(vars));
    for mask in 1..=full {
        let r = (mask as u32).count_ones() as usize - 1;
        let mut acc = MPoly::zero(vars);
        let sign_positive = r.is_multiple_of(2);
        let mut pos = 0;
        for c in 0..k {
            if mask & (1 << c) == 0 {
                continue;
            }
            let entry = &m[rows[r]][cols[c]];
            if !entry.is_zero() {
                let sub = memo[mask & !(1 << c)].as_ref().unwrap();
                let term = entry.mul(sub);
                acc = if sign_positive ^ (pos % 2 == 1) {
                    acc.add(&term)
                } else {
                    acc.sub(&term)
                };
            }
            pos += 1;
        }
        memo[mask] = Some(acc);
    }
    memo[full].take().unwrap()
}

/// Prefix products of the chart parametrization in every representation the
/// word's letters need, plus minor extraction.
pub(crate) struct WordChart {
    vars: usize,
    set: ChartSet,
    /// products[rep][i] = matrix of the first i chart factors.
    products: Vec<Vec<Vec<Vec<MPoly>>>>,
}

impl WordChart {
    /// Builds prefix products up to `max_len` letters of the word, in the
    /// representations needed by the given letters only.
    pub(crate) fn new(
        bsw: &BSWord,
        set: ChartSet,
        max_len: usize,
        letters_needed: &[usize],
    ) -> Result<WordChart> {
        let vars = bsw.len();
        let needed: std::collections::BTreeSet<usize> = letters_needed
            .iter()
            .filter_map(|&gamma| set.letter_map[gamma - 1].map(|(rep, _)| rep))
            .collect();
        let mut products = Vec::with_capacity(set.reps.len());
        for (rep_idx, rep) in set.reps.iter().enumerate() {
            if !needed.contains(&rep_idx) {
                products.push(Vec::new());
                continue;
            }
            let identity: Vec<Vec<MPoly>> = (0..rep.dim)
                .map(|i| {
                    (0..rep.dim)
                        .map(|j| {
                            if i == j {
                                MPoly::one(vars)
                            } else {
                                MPoly::zero(vars)
                            }
                        })
                        .collect()
                })
                .collect();
            let mut prefix = vec![identity];
            for pos in 1..=max_len {
                let letter = bsw.letter(pos);
                let factor = exp_poly(&rep.lowering[letter - 1], pos - 1, vars);
                prefix.push(poly_mat_mul(&prefix[pos - 1], &factor, vars));
            }
            products.push(prefix);
        }
        Ok(WordChart { vars, set, products })
    }

    /// The pullback of the canonical section of L_{−ϖ_γ}|_{X(w)} along φ_i,
    /// as a polynomial on the chart. `target` is w(ϖ_γ).
    pub(crate) fn section_polynomial(
        &self,
        gamma: usize,
        i: usize,
        target: &Weight,
    ) -> Result<MPoly> {
        let (rep_idx, k) = self.set.letter_map[gamma - 1]
            .ok_or(Error::SigmaUnsupported { index: gamma })?;
        let rep = &self.set.reps[rep_idx];
        let fundamental = Weight::fundamental(target.rank(), gamma);
        let source = unique_weight_subset(rep, k, &fundamental)?;
        let rows = unique_weight_subset(rep, k, target)?;
        Ok(minor_det(&self.products[rep_idx][i], &rows, &source, self.vars))
    }
}

/// The unique k-subset of basis vectors whose weights sum to the target.
fn unique_weight_subset(rep: &ChartRep, k: usize, target: &Weight) -> Result<Vec<usize>> {
    let mut found: Option<Vec<usize>> = None;
    let mut stack: Vec<(usize, Vec<usize>, Weight)> =
        vec![(0, Vec::new(), Weight::zero(target.rank()))];
    while let Some((start, chosen, acc)) = stack.pop() {
        if chosen.len() == k {
            if &acc == target {
                if found.is_some() {
                    return Err(Error::Internal(
                        "extremal weight space is not one-dimensional".into(),
                    ));
                }
                found = Some(chosen);
            }
            continue;
        }
        for next in start..rep.dim {
            let mut c = chosen.clone();
            c.push(next);
            stack.push((next + 1, c, acc.add(&rep.basis_weights[next])));
        }
    }
    found.ok_or_else(|| Error::Internal("extremal weight not found in representation".into()))
}
