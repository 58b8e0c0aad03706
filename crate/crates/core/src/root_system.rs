//! Cartan data, weights in fundamental-weight coordinates, and positive roots.
//!
//! The integral pairing `⟨λ, α_j^∨⟩` is a coordinate read: weights are stored in
//! the fundamental-weight basis, so `pairing(λ, j) = coords[j]`. Simple roots are
//! converted through the columns of the Cartan matrix. Simple-root indices are
//! 1-based throughout the public API.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Default cap on the reflection closure before declaring the system non-finite.
pub const ROOT_CLOSURE_CAP: usize = 10_000;

/// Generalized Cartan matrix with the convention `entry(i, j) = ⟨α_j, α_i^∨⟩`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanMatrix {
    rank: usize,
    entries: Vec<Vec<i64>>,
    type_name: Option<String>,
}

impl CartanMatrix {
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self> {
        let rank = entries.len();
        if rank == 0 {
            return Err(Error::InvalidCartan("rank must be positive".into()));
        }
        if entries.iter().any(|row| row.len() != rank) {
            return Err(Error::InvalidCartan("matrix must be square".into()));
        }
        for i in 0..rank {
            if entries[i][i] != 2 {
                return Err(Error::InvalidCartan(format!(
                    "diagonal entry ({},{}) must be 2",
                    i + 1,
                    i + 1
                )));
            }
            for j in 0..rank {
                if i == j {
                    continue;
                }
                if entries[i][j] > 0 {
                    return Err(Error::InvalidCartan(format!(
                        "off-diagonal entry ({},{}) must be nonpositive",
                        i + 1,
                        j + 1
                    )));
                }
                if (entries[i][j] == 0) != (entries[j][i] == 0) {
                    return Err(Error::InvalidCartan(format!(
                        "entries ({},{}) and ({},{}) must vanish together",
                        i + 1,
                        j + 1,
                        j + 1,
                        i + 1
                    )));
                }
            }
        }
        Ok(CartanMatrix {
            rank,
            entries,
            type_name: None,
        })
    }

    /// Built-in finite types: "A1".."A9", "B2".., "C2".., "D4".., "E6".."E8", "F4", "G2".
    pub fn from_type(name: &str) -> Result<Self> {
        let name = name.trim().to_uppercase();
        let (letter, rank_str) = name.split_at(1);
        let rank: usize = rank_str
            .parse()
            .map_err(|_| Error::UnknownType(name.clone()))?;
        let entries = builtin_entries(letter, rank).ok_or(Error::UnknownType(name.clone()))?;
        let mut cm = CartanMatrix::new(entries)?;
        cm.type_name = Some(name);
        Ok(cm)
    }

    /// Ingest `{"rank": n, "matrix": [[...], ...]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        struct File {
            rank: usize,
            matrix: Vec<Vec<i64>>,
        }
        let file: File = serde_json::from_str(text)
            .map_err(|e| Error::InvalidCartan(format!("JSON parse error: {e}")))?;
        if file.matrix.len() != file.rank {
            return Err(Error::InvalidCartan(
                "declared rank does not match matrix size".into(),
            ));
        }
        CartanMatrix::new(file.matrix)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn type_name(&self) -> Option<&str> {
        self.type_name.as_deref()
    }

    /// `⟨α_j, α_i^∨⟩`, 1-based.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i - 1][j - 1]
    }

    pub fn check_index(&self, j: usize) -> Result<()> {
        if j == 0 || j > self.rank {
            return Err(Error::IndexOutOfRange {
                index: j,
                rank: self.rank,
            });
        }
        Ok(())
    }

    /// Simple root `α_j` in fundamental-weight coordinates: column j.
    pub fn simple_root(&self, j: usize) -> Weight {
        Weight {
            coords: (0..self.rank).map(|m| self.entries[m][j - 1]).collect(),
        }
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }
}

fn builtin_entries(letter: &str, n: usize) -> Option<Vec<Vec<i64>>> {
    // Bourbaki numbering; entry(i,j) = ⟨α_j, α_i^∨⟩.
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let chain = |a: &mut Vec<Vec<i64>>, i: usize, j: usize, vij: i64, vji: i64| {
        a[i][j] = vij;
        a[j][i] = vji;
    };
    match (letter, n) {
        ("A", n) if n >= 1 => {
            for i in 0..n.saturating_sub(1) {
                chain(&mut a, i, i + 1, -1, -1);
            }
        }
        ("B", n) if n >= 2 => {
            for i in 0..n - 1 {
                chain(&mut a, i, i + 1, -1, -1);
            }
            // α_n short: ⟨α_{n-1}, α_n^∨⟩ = -2
            a[n - 1][n - 2] = -2;
        }
        ("C", n) if n >= 2 => {
            for i in 0..n - 1 {
                chain(&mut a, i, i + 1, -1, -1);
            }
            // α_n long: ⟨α_n, α_{n-1}^∨⟩ = -2
            a[n - 2][n - 1] = -2;
        }
        ("D", n) if n >= 4 => {
            for i in 0..n - 2 {
                chain(&mut a, i, i + 1, -1, -1);
            }
            chain(&mut a, n - 3, n - 1, -1, -1);
        }
        ("E", n) if (6..=8).contains(&n) => {
            // Bourbaki: node 2 attaches to node 4.
            chain(&mut a, 0, 2, -1, -1);
            chain(&mut a, 2, 3, -1, -1);
            chain(&mut a, 1, 3, -1, -1);
            for i in 3..n - 1 {
                chain(&mut a, i, i + 1, -1, -1);
            }
        }
        ("F", 4) => {
            chain(&mut a, 0, 1, -1, -1);
            chain(&mut a, 1, 2, -2, -1);
            chain(&mut a, 2, 3, -1, -1);
        }
        ("G", 2) => {
            // α_1 short, α_2 long: ⟨α_2, α_1^∨⟩ = -3, ⟨α_1, α_2^∨⟩ = -1.
            a[0][1] = -3;
            a[1][0] = -1;
        }
        _ => return None,
    }
    Some(a)
}

/// Integer weight in fundamental-weight coordinates: `coords[i] = ⟨λ, α_{i+1}^∨⟩`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Weight {
    pub coords: Vec<i64>,
}

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight { coords }
    }

    pub fn zero(rank: usize) -> Self {
        Weight {
            coords: vec![0; rank],
        }
    }

    /// Fundamental weight ϖ_j (1-based).
    pub fn fundamental(rank: usize, j: usize) -> Self {
        let mut coords = vec![0; rank];
        coords[j - 1] = 1;
        Weight { coords }
    }

    /// ρ, the sum of the fundamental weights.
    pub fn rho(rank: usize) -> Self {
        Weight {
            coords: vec![1; rank],
        }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Weight {
        Weight {
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, c: i64) -> Weight {
        Weight {
            coords: self.coords.iter().map(|a| c * a).collect(),
        }
    }
}

/// `⟨λ, α_j^∨⟩` for a 1-based simple-root index.
pub fn pairing(cartan: &CartanMatrix, lambda: &Weight, j: usize) -> Result<i64> {
    cartan.check_index(j)?;
    if lambda.rank() != cartan.rank() {
        return Err(Error::RankMismatch {
            expected: cartan.rank(),
            got: lambda.rank(),
        });
    }
    Ok(lambda.coords[j - 1])
}

/// `s_j(λ) = λ − ⟨λ, α_j^∨⟩ α_j` in fundamental-weight coordinates.
pub fn reflect(cartan: &CartanMatrix, j: usize, lambda: &Weight) -> Result<Weight> {
    let c = pairing(cartan, lambda, j)?;
    Ok(lambda.sub(&cartan.simple_root(j).scale(c)))
}

/// A positive root in simple-root coordinates, with a witness expression
/// `root = s_{w_1} s_{w_2} ⋯ (α_i)` (letters applied right to left).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositiveRoot {
    pub root_coords: Vec<i64>,
    pub witness_word: Vec<usize>,
    pub witness_simple: usize,
}

impl PositiveRoot {
    /// Fundamental-weight coordinates of this root.
    pub fn weight(&self, cartan: &CartanMatrix) -> Weight {
        let rank = cartan.rank();
        let mut coords = vec![0i64; rank];
        for (m, c) in coords.iter_mut().enumerate() {
            for k in 0..rank {
                *c += cartan.rows()[m][k] * self.root_coords[k];
            }
        }
        Weight { coords }
    }
}

/// The positive roots of a root system, or a marker that the closure blew past the cap.
#[derive(Debug, Clone)]
pub struct RootDatum {
    pub cartan: CartanMatrix,
    pub positive_roots: Vec<PositiveRoot>,
    pub finite: bool,
}

impl RootDatum {
    pub fn require_finite(&self) -> Result<()> {
        if !self.finite {
            return Err(Error::NotFiniteType);
        }
        Ok(())
    }
}

/// Reflection closure of the simple roots. Applies simple reflections in
/// simple-root coordinates and keeps the roots with nonnegative coordinates.
pub fn enumerate_positive_roots(cartan: &CartanMatrix) -> RootDatum {
    enumerate_positive_roots_capped(cartan, ROOT_CLOSURE_CAP)
}

pub fn enumerate_positive_roots_capped(cartan: &CartanMatrix, cap: usize) -> RootDatum {
    let rank = cartan.rank();
    let mut seen: std::collections::BTreeSet<Vec<i64>> = std::collections::BTreeSet::new();
    let mut roots: Vec<PositiveRoot> = Vec::new();
    for j in 1..=rank {
        let mut coords = vec![0i64; rank];
        coords[j - 1] = 1;
        seen.insert(coords.clone());
        roots.push(PositiveRoot {
            root_coords: coords,
            witness_word: vec![],
            witness_simple: j,
        });
    }
    let mut frontier = 0;
    let mut finite = true;
    while frontier < roots.len() {
        if roots.len() > cap {
            finite = false;
            break;
        }
        let current = roots[frontier].clone();
        for j in 1..=rank {
            // s_j(ν) = ν − ⟨ν, α_j^∨⟩ α_j with ⟨ν, α_j^∨⟩ = Σ_k ν_k entry(j, k).
            let pair: i64 = (0..rank)
                .map(|k| current.root_coords[k] * cartan.rows()[j - 1][k])
                .sum();
            let mut new_coords = current.root_coords.clone();
            new_coords[j - 1] -= pair;
            if new_coords.iter().all(|&c| c >= 0) && !seen.contains(&new_coords) {
                seen.insert(new_coords.clone());
                let mut word = vec![j];
                word.extend_from_slice(&current.witness_word);
                roots.push(PositiveRoot {
                    root_coords: new_coords,
                    witness_word: word,
                    witness_simple: current.witness_simple,
                });
            }
        }
        frontier += 1;
    }
    RootDatum {
        cartan: cartan.clone(),
        positive_roots: roots,
        finite,
    }
}
