//! The root polytope `P = conv(Φ)` and its polar `P*`.
//!
//! `P*` is given both ways: by half-spaces `(β, x) ≤ 1` for long roots `β`,
//! and as the convex hull of the orbits `W·o_i`. Facets of `P` are handled
//! through the standard parabolic facets `F_i` and the central arrangement
//! spanned by the ridges of `P`.

use std::collections::{BTreeSet, HashSet};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{canonical_normal, int, rank, serde_rational, Rational, RationalVector};
use crate::rootsys::{Family, RootSystem, TypeLabel};
use crate::weyl::{full_orbit, orbit_bounded};

/// Largest point set `polar_vertices` will enumerate.
pub const POLAR_VERTEX_LIMIT: usize = 100_000;

/// Full arrangements are only enumerated up to this rank.
pub const ARRANGEMENT_RANK_LIMIT: usize = 6;

/// `(normal, x) ≤ offset`, pairing through the Gram form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Halfspace {
    pub normal: RationalVector,
    #[serde(with = "serde_rational")]
    pub offset: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HPolytope {
    pub halfspaces: Vec<Halfspace>,
}

impl HPolytope {
    pub fn contains(&self, rs: &RootSystem, x: &RationalVector) -> bool {
        self.halfspaces.iter().all(|h| rs.inner(&h.normal, x) <= h.offset)
    }

    /// Half-spaces whose boundary passes through `x`.
    pub fn saturated<'a>(&'a self, rs: &'a RootSystem, x: &'a RationalVector) -> impl Iterator<Item = &'a Halfspace> + 'a {
        self.halfspaces.iter().filter(move |h| rs.inner(&h.normal, x) == h.offset)
    }

    /// Whether `x` lies on the boundary and the tight constraints span the space.
    pub fn is_vertex(&self, rs: &RootSystem, x: &RationalVector) -> bool {
        if !self.contains(rs, x) {
            return false;
        }
        let tight: Vec<RationalVector> = self.saturated(rs, x).map(|h| h.normal.clone()).collect();
        rank(&tight) == rs.rank()
    }
}

/// `P* = {x : (β, x) ≤ 1 for every long root β}`.
pub fn polar_hrep(rs: &RootSystem) -> HPolytope {
    HPolytope {
        halfspaces: rs.long_roots().map(|b| Halfspace { normal: b.clone(), offset: Rational::one() }).collect(),
    }
}

/// `⋃_i W·o_i`, whose convex hull is `P*`, sorted. Only the orbits with a
/// standard facet index consist of actual vertices of `P*`; the others lie
/// on lower-dimensional faces.
pub fn polar_vertices(rs: &RootSystem) -> Result<Vec<RationalVector>> {
    let all: Vec<usize> = (1..=rs.rank()).collect();
    let mut points = Vec::new();
    for o in rs.alcove_vertices() {
        let budget = POLAR_VERTEX_LIMIT.saturating_sub(points.len());
        points.extend(orbit_bounded(rs, o, &all, budget).map_err(|_| Error::OrbitTooLarge { limit: POLAR_VERTEX_LIMIT })?.points);
    }
    points.sort();
    points.dedup();
    Ok(points)
}

/// Indices `i` (1-based) such that the extended Dynkin diagram stays
/// connected once `α_i` is removed; these are exactly the `i` for which
/// `F_i` is a facet.
pub fn standard_facet_indices(rs: &RootSystem) -> Vec<usize> {
    let n = rs.rank();
    // node 0 is the extra node attached to every α_i with (θ, α_i) ≠ 0
    let mut adj = vec![Vec::new(); n + 1];
    for i in 0..n {
        for j in (i + 1)..n {
            if !rs.gram().get(i, j).is_zero() {
                adj[i + 1].push(j + 1);
                adj[j + 1].push(i + 1);
            }
        }
        if !rs.inner(rs.theta(), &RationalVector::unit(n, i)).is_zero() {
            adj[0].push(i + 1);
            adj[i + 1].push(0);
        }
    }
    (1..=n).filter(|&removed| connected_without(&adj, removed)).collect()
}

fn connected_without(adj: &[Vec<usize>], removed: usize) -> bool {
    let start = if removed == 0 { 1 } else { 0 };
    let mut seen = vec![false; adj.len()];
    seen[removed] = true;
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.iter().all(|&s| s)
}

/// A standard parabolic facet `F_i = conv{α ∈ Φ⁺ : (ω_i^∨, α) = m_i}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Facet {
    pub index: usize,
    pub vertex_roots: Vec<RationalVector>,
    /// Average of `vertex_roots`.
    pub barycenter: RationalVector,
    /// `c` with `barycenter = c·ω_i`.
    #[serde(with = "serde_rational")]
    pub weight_multiple: Rational,
}

/// Positive roots whose `α_i`-coordinate equals `m_i`.
pub fn level_roots(rs: &RootSystem, i: usize) -> Result<Vec<RationalVector>> {
    let k = rs.check_index(i)?;
    let m = int(rs.marks()[k] as i64);
    Ok(rs.positive_roots().iter().filter(|r| r[k] == m).cloned().collect())
}

pub fn standard_facet(rs: &RootSystem, i: usize) -> Result<Facet> {
    rs.check_index(i)?;
    if !standard_facet_indices(rs).contains(&i) {
        return Err(Error::NotAFacetIndex { index: i });
    }
    let vertex_roots = level_roots(rs, i)?;
    let count = int(vertex_roots.len() as i64);
    let barycenter = RationalVector::sum(rs.rank(), &vertex_roots).scale(&(Rational::one() / count));
    let weight = rs.weight(i)?;
    // ω_i has a nonzero coordinate since it is a basis vector
    let k = (0..rs.rank()).find(|&k| !weight[k].is_zero()).expect("nonzero weight");
    let weight_multiple = &barycenter[k] / &weight[k];
    Ok(Facet { index: i, vertex_roots, barycenter, weight_multiple })
}

impl Facet {
    /// `barycenter == weight_multiple · ω_i` exactly.
    pub fn barycenter_is_weight_multiple(&self, rs: &RootSystem) -> bool {
        rs.weight(self.index).map(|w| w.scale(&self.weight_multiple) == self.barycenter).unwrap_or(false)
    }
}

/// `H_Φ`: the coweight indices whose orbits span the ridge arrangement.
pub fn hyperplane_indices(label: TypeLabel) -> Vec<usize> {
    let n = label.rank();
    match (label.family(), n) {
        (Family::A, _) | (Family::C, _) => vec![1],
        // B2 is C2 with the simple roots swapped
        (Family::B, 2) => vec![2],
        (Family::B, 3) => vec![3],
        (Family::B, _) => vec![1, n],
        (Family::D, _) => vec![1, n - 1, n],
        (Family::E, 6) => vec![1, 2, 6],
        (Family::E, 7) => vec![1, 2],
        (Family::E, _) => vec![2, 8],
        (Family::F, _) => vec![4],
        (Family::G, _) => vec![1],
    }
}

/// The central arrangement `{w(ω_k^∨)^⊥}`, as sorted canonical normals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrangement {
    pub standard_indices: Vec<usize>,
    pub normals: Vec<RationalVector>,
}

impl Arrangement {
    pub fn contains_normal(&self, v: &RationalVector) -> bool {
        canonical_normal(v).map(|c| self.normals.binary_search(&c).is_ok()).unwrap_or(false)
    }
}

pub fn arrangement_normals(rs: &RootSystem, standard_indices: &[usize]) -> Result<Arrangement> {
    if rs.rank() > ARRANGEMENT_RANK_LIMIT {
        return Err(Error::RankTooLargeForFullArrangement { rank: rs.rank() });
    }
    let mut normals = BTreeSet::new();
    for &k in standard_indices {
        for p in full_orbit(rs, rs.coweight(k)?).points {
            normals.insert(canonical_normal(&p)?);
        }
    }
    let mut standard_indices = standard_indices.to_vec();
    standard_indices.sort_unstable();
    standard_indices.dedup();
    Ok(Arrangement { standard_indices, normals: normals.into_iter().collect() })
}

/// The arrangement of `P` computed from scratch: facets of `P` are the
/// genuine vertices `u` of `P*` (facet `{(u, x) = 1}`), and two facets meeting
/// in an `(n−2)`-face contribute the central hyperplane `(u − u')^⊥`.
/// `standard_indices` lists the `k` with `ω_k^∨` among the normals.
pub fn arrangement_from_ridges(rs: &RootSystem) -> Result<Arrangement> {
    let n = rs.rank();
    if n > ARRANGEMENT_RANK_LIMIT {
        return Err(Error::RankTooLargeForFullArrangement { rank: n });
    }
    let long: Vec<RationalVector> = rs.long_roots().cloned().collect();
    let hrep = polar_hrep(rs);
    let facets: Vec<(RationalVector, Vec<usize>)> = polar_vertices(rs)?
        .into_iter()
        .filter(|u| hrep.is_vertex(rs, u))
        .map(|u| {
            let tight = (0..long.len()).filter(|&b| rs.inner(&long[b], &u).is_one()).collect();
            (u, tight)
        })
        .collect();

    let mut normals = BTreeSet::new();
    if n == 1 {
        return Ok(Arrangement { standard_indices: Vec::new(), normals: Vec::new() });
    }
    for (a, (u, su)) in facets.iter().enumerate() {
        let su: HashSet<usize> = su.iter().copied().collect();
        for (v, sv) in &facets[a + 1..] {
            let common: Vec<&RationalVector> = sv.iter().filter(|b| su.contains(b)).map(|&b| &long[b]).collect();
            if common.len() + 1 < n {
                continue;
            }
            let base = common[0];
            let diffs: Vec<RationalVector> = common[1..].iter().map(|p| *p - base).collect();
            if rank(&diffs) == n - 2 {
                normals.insert(canonical_normal(&(u - v))?);
            }
        }
    }
    let standard_indices = (1..=n)
        .filter(|&k| rs.coweight(k).and_then(canonical_normal).map(|c| normals.contains(&c)).unwrap_or(false))
        .collect();
    Ok(Arrangement { standard_indices, normals: normals.into_iter().collect() })
}

/// Sign pattern of a central hyperplane against a standard facet.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutWitness {
    pub normal: RationalVector,
    pub facet_index: usize,
    #[serde(with = "serde_rational")]
    pub barycenter_pairing: Rational,
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
    pub positive_example: Option<RationalVector>,
    pub negative_example: Option<RationalVector>,
    /// Through the barycenter with vertices strictly on both sides.
    pub cuts: bool,
}

impl CutWitness {
    /// Vertices strictly on both sides: the hyperplane meets the relative
    /// interior of the facet, whether or not it passes the barycenter.
    pub fn meets_interior(&self) -> bool {
        self.positive > 0 && self.negative > 0
    }
}

pub fn hyperplane_cuts_facet(rs: &RootSystem, normal: &RationalVector, facet: &Facet) -> Result<CutWitness> {
    if normal.is_zero() {
        return Err(Error::ZeroVector);
    }
    let barycenter_pairing = rs.inner(&facet.barycenter, normal);
    let (mut positive, mut negative, mut zero) = (0, 0, 0);
    let (mut positive_example, mut negative_example) = (None, None);
    for r in &facet.vertex_roots {
        let s = rs.inner(r, normal);
        if s.is_positive() {
            positive += 1;
            positive_example.get_or_insert_with(|| r.clone());
        } else if s.is_negative() {
            negative += 1;
            negative_example.get_or_insert_with(|| r.clone());
        } else {
            zero += 1;
        }
    }
    let cuts = barycenter_pairing.is_zero() && positive > 0 && negative > 0;
    Ok(CutWitness {
        normal: normal.clone(),
        facet_index: facet.index,
        barycenter_pairing,
        positive,
        negative,
        zero,
        positive_example,
        negative_example,
        cuts,
    })
}

/// Every (arrangement normal, standard facet) pair whose hyperplane meets
/// the facet's relative interior. The arrangement is `W`-stable, so standard
/// facets stand in for all facets.
pub fn interior_cuts(rs: &RootSystem, arrangement: &Arrangement) -> Result<Vec<CutWitness>> {
    let mut out = Vec::new();
    for i in standard_facet_indices(rs) {
        let facet = standard_facet(rs, i)?;
        for v in &arrangement.normals {
            let w = hyperplane_cuts_facet(rs, v, &facet)?;
            if w.meets_interior() {
                out.push(w);
            }
        }
    }
    Ok(out)
}
