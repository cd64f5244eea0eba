//! Irreducible crystallographic root systems in Bourbaki numbering.
//!
//! Everything lives in the simple-root basis `α_1, …, α_n` with the Gram
//! matrix carried explicitly, normalized so that long roots have squared
//! length 2. Simple indices are 1-based at every public entry point.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{frac, int, solve_linear, Rational, RationalMatrix, RationalVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        };
        write!(f, "{c}")
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            other => Err(Error::Parse(format!("unknown family {other:?}"))),
        }
    }
}

/// Cartan type `X_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TypeLabel {
    family: Family,
    rank: usize,
}

impl TypeLabel {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(TypeLabel { family, rank })
        } else {
            Err(Error::InvalidRank { family, rank })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for TypeLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (fam, rank) = s.split_at(s.char_indices().nth(1).map(|(i, _)| i).unwrap_or(s.len()));
        let rank = rank.parse().map_err(|_| Error::Parse(format!("bad type label {s:?}")))?;
        TypeLabel::new(fam.parse()?, rank)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DualKind {
    Weight,
    Coweight,
}

/// Squared lengths of the simple roots and the edges of the Dynkin diagram
/// (0-based), per Bourbaki's plates.
fn dynkin_data(label: TypeLabel) -> (Vec<Rational>, Vec<(usize, usize)>) {
    let n = label.rank;
    let chain = |len: usize| (0..len.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>();
    let two = int(2);
    match label.family {
        Family::A => (vec![two; n], chain(n)),
        Family::B => {
            let mut lens = vec![two; n];
            lens[n - 1] = int(1);
            (lens, chain(n))
        }
        Family::C => {
            let mut lens = vec![int(1); n];
            lens[n - 1] = two;
            (lens, chain(n))
        }
        Family::D => {
            let mut edges = chain(n - 1);
            edges.push((n - 3, n - 1));
            (vec![two; n], edges)
        }
        Family::E => {
            // 1-3-4-5-…-n with 2 hanging off 4
            let mut edges = vec![(0, 2), (2, 3), (1, 3)];
            edges.extend((3..n - 1).map(|i| (i, i + 1)));
            (vec![two; n], edges)
        }
        Family::F => (vec![two.clone(), two, int(1), int(1)], chain(4)),
        Family::G => (vec![frac(2, 3), two], vec![(0, 1)]),
    }
}

/// An irreducible root system with all the exact data the checks need.
#[derive(Clone, Debug)]
pub struct RootSystem {
    label: TypeLabel,
    gram: RationalMatrix,
    /// `cartan[i][j] = ⟨α_j, α_i^∨⟩ = 2(α_i, α_j)/(α_i, α_i)`
    cartan: Vec<Vec<i64>>,
    roots: Vec<RationalVector>,
    positive_roots: Vec<RationalVector>,
    root_index: HashMap<RationalVector, usize>,
    theta: RationalVector,
    marks: Vec<u32>,
    coweights: Vec<RationalVector>,
    weights: Vec<RationalVector>,
    alcove_vertices: Vec<RationalVector>,
}

/// Builds the root system of the given type.
pub fn build_root_system(label: TypeLabel) -> RootSystem {
    RootSystem::new(label)
}

impl RootSystem {
    pub fn new(label: TypeLabel) -> Self {
        let n = label.rank;
        let (lens, edges) = dynkin_data(label);
        let mut rows = vec![vec![Rational::zero(); n]; n];
        for (i, len) in lens.iter().enumerate() {
            rows[i][i] = len.clone();
        }
        for &(i, j) in &edges {
            // the long end of every bond sees a Cartan entry of -1
            let v = -std::cmp::max(&lens[i], &lens[j]) / int(2);
            rows[i][j] = v.clone();
            rows[j][i] = v;
        }
        let gram = RationalMatrix::from_rows(rows).expect("square by construction");
        let cartan = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let a = int(2) * gram.get(i, j) / gram.get(i, i);
                        debug_assert!(a.is_integer());
                        a.to_integer().to_i64().expect("small Cartan entry")
                    })
                    .collect()
            })
            .collect();

        let mut rs = RootSystem {
            label,
            gram,
            cartan,
            roots: Vec::new(),
            positive_roots: Vec::new(),
            root_index: HashMap::new(),
            theta: RationalVector::zero(n),
            marks: Vec::new(),
            coweights: Vec::new(),
            weights: Vec::new(),
            alcove_vertices: Vec::new(),
        };
        rs.roots = rs.close_simple_roots();
        rs.root_index = rs.roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        rs.positive_roots = rs.roots.iter().filter(|r| r.height().is_positive()).cloned().collect();
        rs.theta = rs.roots.last().expect("nonempty").clone();
        rs.marks = rs
            .theta
            .coords()
            .iter()
            .map(|c| c.to_integer().to_u32().expect("small mark"))
            .collect();
        rs.coweights = (0..n)
            .map(|i| solve_linear(&rs.gram, &RationalVector::unit(n, i)).expect("Gram matrix is invertible"))
            .collect();
        rs.weights = (0..n)
            .map(|i| {
                let b = RationalVector::unit(n, i).scale(&(rs.gram.get(i, i) / int(2)));
                solve_linear(&rs.gram, &b).expect("Gram matrix is invertible")
            })
            .collect();
        rs.alcove_vertices = (0..n).map(|i| rs.coweights[i].scale(&(Rational::one() / int(rs.marks[i] as i64)))).collect();
        rs
    }

    /// Closure of the simple roots under simple reflections, sorted by height
    /// and then lexicographically.
    fn close_simple_roots(&self) -> Vec<RationalVector> {
        let n = self.rank();
        let mut seen: HashSet<RationalVector> = HashSet::new();
        let mut frontier: Vec<RationalVector> = (0..n).map(|i| RationalVector::unit(n, i)).collect();
        seen.extend(frontier.iter().cloned());
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for r in &frontier {
                for i in 0..n {
                    let image = self.simple_reflection(i, r);
                    if seen.insert(image.clone()) {
                        next.push(image);
                    }
                }
            }
            frontier = next;
        }
        let mut roots: Vec<_> = seen.into_iter().collect();
        roots.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)));
        roots
    }

    pub fn label(&self) -> TypeLabel {
        self.label
    }

    pub fn rank(&self) -> usize {
        self.label.rank
    }

    pub fn gram(&self) -> &RationalMatrix {
        &self.gram
    }

    /// Entry `[i][j]` is `⟨α_j, α_i^∨⟩` (0-based).
    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// All roots, sorted by height then lexicographically.
    pub fn roots(&self) -> &[RationalVector] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[RationalVector] {
        &self.positive_roots
    }

    pub fn long_roots(&self) -> impl Iterator<Item = &RationalVector> + '_ {
        self.roots.iter().filter(|r| self.is_long(r))
    }

    pub fn is_root(&self, x: &RationalVector) -> bool {
        self.root_index.contains_key(x)
    }

    pub fn root_position(&self, x: &RationalVector) -> Option<usize> {
        self.root_index.get(x).copied()
    }

    pub fn is_long(&self, beta: &RationalVector) -> bool {
        self.norm2(beta) == int(2)
    }

    /// `(x, y)`
    pub fn inner(&self, x: &RationalVector, y: &RationalVector) -> Rational {
        self.gram.bilinear(x, y)
    }

    pub fn norm2(&self, x: &RationalVector) -> Rational {
        self.gram.bilinear(x, x)
    }

    /// `β^∨ = 2β/(β, β)`
    pub fn coroot(&self, beta: &RationalVector) -> RationalVector {
        beta.scale(&(int(2) / self.norm2(beta)))
    }

    /// `(x, β^∨)`
    pub fn coroot_pairing(&self, x: &RationalVector, beta: &RationalVector) -> Rational {
        int(2) * self.inner(x, beta) / self.norm2(beta)
    }

    /// `(x, α_i^∨)` for a 0-based simple index, through the Cartan matrix.
    pub(crate) fn simple_coroot_pairing(&self, x: &RationalVector, i: usize) -> Rational {
        self.cartan[i]
            .iter()
            .zip(x.coords())
            .filter(|(a, _)| **a != 0)
            .fold(Rational::zero(), |acc, (a, c)| acc + int(*a) * c)
    }

    /// `s_{α_i}(x)` for a 0-based simple index; only coordinate `i` moves.
    pub(crate) fn simple_reflection(&self, i: usize, x: &RationalVector) -> RationalVector {
        let c = self.simple_coroot_pairing(x, i);
        let mut y = x.clone();
        if !c.is_zero() {
            y.coords_mut()[i] -= c;
        }
        y
    }

    pub fn simple_root(&self, i: usize) -> Result<RationalVector> {
        let k = self.check_index(i)?;
        Ok(RationalVector::unit(self.rank(), k))
    }

    pub(crate) fn check_index(&self, i: usize) -> Result<usize> {
        if i == 0 || i > self.rank() {
            Err(Error::IndexOutOfRange { index: i, rank: self.rank() })
        } else {
            Ok(i - 1)
        }
    }

    /// Highest root `θ` and its coordinates `m_1, …, m_n`.
    pub fn highest_root(&self) -> (&RationalVector, &[u32]) {
        (&self.theta, &self.marks)
    }

    pub fn theta(&self) -> &RationalVector {
        &self.theta
    }

    pub fn marks(&self) -> &[u32] {
        &self.marks
    }

    pub fn mark(&self, i: usize) -> Result<u32> {
        Ok(self.marks[self.check_index(i)?])
    }

    pub fn coweight(&self, j: usize) -> Result<&RationalVector> {
        Ok(&self.coweights[self.check_index(j)?])
    }

    pub fn weight(&self, j: usize) -> Result<&RationalVector> {
        Ok(&self.weights[self.check_index(j)?])
    }

    pub fn dual_basis_vector(&self, kind: DualKind, j: usize) -> Result<RationalVector> {
        match kind {
            DualKind::Weight => self.weight(j).cloned(),
            DualKind::Coweight => self.coweight(j).cloned(),
        }
    }

    /// `o_i = ω_i^∨ / m_i`
    pub fn alcove_vertex(&self, i: usize) -> Result<&RationalVector> {
        Ok(&self.alcove_vertices[self.check_index(i)?])
    }

    pub fn alcove_vertices(&self) -> &[RationalVector] {
        &self.alcove_vertices
    }

    /// `r_j = ‖θ‖² / ‖α_j‖²`
    pub fn length_ratio(&self, j: usize) -> Result<Rational> {
        let k = self.check_index(j)?;
        Ok(self.norm2(&self.theta) / self.gram.get(k, k))
    }

    /// Simple indices (1-based) in the support of `γ`.
    pub fn support(&self, gamma: &RationalVector) -> Vec<usize> {
        gamma.coords().iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, _)| i + 1).collect()
    }

    /// Coordinates of `x` in the simple coroot basis `α_1^∨, …, α_n^∨`.
    pub fn coroot_coords(&self, x: &RationalVector) -> RationalVector {
        RationalVector::new(
            x.coords().iter().enumerate().map(|(i, c)| c * self.gram.get(i, i) / int(2)).collect(),
        )
    }

    /// `x ≤^∨ y`: `y − x` is a nonnegative integer combination of simple coroots.
    pub fn coroot_leq(&self, x: &RationalVector, y: &RationalVector) -> bool {
        self.coroot_coords(&(y - x)).coords().iter().all(|c| c.is_integer() && !c.is_negative())
    }

    /// `x ≤ y`: `y − x` is a nonnegative integer combination of simple roots.
    pub fn root_leq(&self, x: &RationalVector, y: &RationalVector) -> bool {
        (y - x).coords().iter().all(|c| c.is_integer() && !c.is_negative())
    }

    pub fn is_dominant(&self, x: &RationalVector) -> bool {
        (0..self.rank()).all(|i| !self.simple_coroot_pairing(x, i).is_negative())
    }

    /// Simple indices (1-based) orthogonal to `θ`.
    pub fn theta_orthogonal_simple(&self) -> Vec<usize> {
        (0..self.rank()).filter(|&i| self.simple_coroot_pairing(&self.theta, i).is_zero()).map(|i| i + 1).collect()
    }
}

/// Roots of a system enumerated by reflection closure of the simple roots.
pub fn enumerate_roots(rs: &RootSystem) -> Vec<RationalVector> {
    rs.roots().to_vec()
}

pub fn highest_root(rs: &RootSystem) -> (RationalVector, Vec<u32>) {
    (rs.theta().clone(), rs.marks().to_vec())
}

/// Every label with rank at most `max_rank` (B2 included, D from 4).
pub fn all_labels(max_rank: usize) -> Vec<TypeLabel> {
    use Family::*;
    let mut out = Vec::new();
    for family in [A, B, C, D, E, F, G] {
        for rank in 1..=max_rank {
            if let Ok(l) = TypeLabel::new(family, rank) {
                out.push(l);
            }
        }
    }
    out
}
