//! Zonotopes spanned by Weyl orbits, and the equality test against `P*`.
//!
//! A [`Zonotope`] is stored as `ZN_p(S) = p + Σ t_v v` with `t_v ∈ [−½, ½]`;
//! `ZT(S) = Σ t_v v` with `t_v ∈ [0, 1]` is the case `p = Σ v / 2`.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{frac, int, serde_rational, Rational, RationalVector};
use crate::lp::feasible_point;
use crate::polytopes::polar_hrep;
use crate::rootsys::{Family, RootSystem, TypeLabel};
use crate::weyl::{apply_word, orbit_bounded, q_index, WeylWord};

/// Exhaustive subset searches refuse larger generator sets.
pub const SUBSET_SEARCH_LIMIT: usize = 20;

/// Orbits used as generator sets are capped at this size.
pub const GENERATOR_ORBIT_LIMIT: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Zonotope {
    pub generators: Vec<RationalVector>,
    pub center: RationalVector,
}

impl Zonotope {
    /// `ZT(S)`, anchored at the origin.
    pub fn zt(dim: usize, generators: Vec<RationalVector>) -> Self {
        let center = RationalVector::sum(dim, &generators).scale(&frac(1, 2));
        Zonotope { generators, center }
    }

    /// `ZT(W·(c·x))` with the orbit points as generators, sorted.
    pub fn from_orbit(rs: &RootSystem, x: &RationalVector, c: &Rational) -> Result<Self> {
        let all: Vec<usize> = (1..=rs.rank()).collect();
        let points = orbit_bounded(rs, &x.scale(c), &all, GENERATOR_ORBIT_LIMIT)?.points;
        Ok(Zonotope::zt(rs.rank(), points))
    }

    pub fn dim(&self) -> usize {
        self.center.dim()
    }

    /// The point with every `t_v = 0` in the `ZT` parametrization.
    pub fn anchor(&self) -> RationalVector {
        &self.center - &RationalVector::sum(self.dim(), &self.generators).scale(&frac(1, 2))
    }

    pub fn subset_sum(&self, subset: &[usize]) -> RationalVector {
        let mut x = self.anchor();
        for &i in subset {
            x += &self.generators[i];
        }
        x
    }
}

/// `Σ_{i ∈ subset} generators[i] = target`, relative to the anchor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SumCertificate {
    pub target: RationalVector,
    pub subset: Vec<usize>,
}

impl SumCertificate {
    pub fn verify(&self, z: &Zonotope) -> bool {
        self.subset.iter().all(|&i| i < z.generators.len()) && z.subset_sum(&self.subset) == self.target
    }
}

/// `max_{x ∈ Z} (x, d)`.
pub fn zt_support(rs: &RootSystem, z: &Zonotope, d: &RationalVector) -> Rational {
    let half = frac(1, 2);
    z.generators.iter().fold(rs.inner(&z.center, d), |acc, v| acc + rs.inner(v, d).abs() * &half)
}

/// Maximum of `(x, d)` over all `2^|S|` subset sums.
pub fn zt_support_brute_force(rs: &RootSystem, z: &Zonotope, d: &RationalVector) -> Result<Rational> {
    check_search_size(z)?;
    let pairings: Vec<Rational> = z.generators.iter().map(|v| rs.inner(v, d)).collect();
    let base = rs.inner(&z.anchor(), d);
    let mut best: Option<Rational> = None;
    for mask in 0u32..(1 << pairings.len()) {
        let s = pairings.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).fold(base.clone(), |acc, (_, p)| acc + p);
        if best.as_ref().is_none_or(|b| s > *b) {
            best = Some(s);
        }
    }
    Ok(best.expect("at least the empty subset"))
}

fn check_search_size(z: &Zonotope) -> Result<()> {
    if z.generators.len() > SUBSET_SEARCH_LIMIT {
        return Err(Error::GeneratorSetTooLarge { max: SUBSET_SEARCH_LIMIT, found: z.generators.len() });
    }
    Ok(())
}

/// `Z ⊆ P*`, decided by the support along every long root. Returns the first
/// long root whose support exceeds 1, if any.
pub fn contained_in_polar(rs: &RootSystem, z: &Zonotope) -> (bool, Option<RationalVector>) {
    let one = Rational::one();
    match rs.long_roots().find(|b| zt_support(rs, z, b) > one) {
        Some(b) => (false, Some(b.clone())),
        None => (true, None),
    }
}

/// First subset (in lexicographic order of sorted index lists) summing to
/// `target`, or `None` when no subset does.
pub fn subset_sum_certificate(z: &Zonotope, target: &RationalVector) -> Result<Option<SumCertificate>> {
    check_search_size(z)?;
    let goal = target - &z.anchor();
    let mut chosen = Vec::new();
    let found = search(&z.generators, &goal, 0, RationalVector::zero(z.dim()), &mut chosen);
    Ok(found.then(|| SumCertificate { target: target.clone(), subset: chosen }))
}

fn search(gens: &[RationalVector], goal: &RationalVector, start: usize, acc: RationalVector, chosen: &mut Vec<usize>) -> bool {
    if &acc == goal {
        return true;
    }
    for i in start..gens.len() {
        chosen.push(i);
        if search(gens, goal, i + 1, &acc + &gens[i], chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Coefficients `t ∈ [0, 1]^S` with `anchor + Σ t_v v = p`, found by exact LP.
pub fn zt_membership_coefficients(z: &Zonotope, p: &RationalVector) -> Option<RationalVector> {
    let m = z.generators.len();
    let n = z.dim();
    let goal = p - &z.anchor();
    // variables t_1..t_m, then slacks with t_v + s_v = 1
    let mut a = Vec::with_capacity(n + m);
    let mut b = Vec::with_capacity(n + m);
    for k in 0..n {
        let mut row: Vec<Rational> = z.generators.iter().map(|v| v[k].clone()).collect();
        row.resize(2 * m, Rational::zero());
        a.push(row);
        b.push(goal[k].clone());
    }
    for v in 0..m {
        let mut row = vec![Rational::zero(); 2 * m];
        row[v] = Rational::one();
        row[m + v] = Rational::one();
        a.push(row);
        b.push(Rational::one());
    }
    feasible_point(&a, &b).map(|mut x| {
        x.truncate(m);
        RationalVector::new(x)
    })
}

pub fn zt_membership(z: &Zonotope, p: &RationalVector) -> bool {
    zt_membership_coefficients(z, p).is_some()
}

/// The telescoping sum `Σ_{i=0}^{k} w_i(o_1) = o_{k+1}` with `w_i = s_i ⋯ s_1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Telescoping {
    pub k: usize,
    /// `w_0(o_1), …, w_k(o_1)`.
    pub terms: Vec<RationalVector>,
    pub target: RationalVector,
    pub sum_matches: bool,
    /// `w_h(o_1) = o_{h+1} − o_h` for `1 ≤ h ≤ k`.
    pub steps_hold: bool,
    pub distinct: bool,
}

/// Types `A_n` and `C_n` only, `0 ≤ k < n`.
pub fn telescoping_certificate(rs: &RootSystem, k: usize) -> Result<Telescoping> {
    let label = rs.label();
    if !matches!(label.family(), Family::A | Family::C) {
        return Err(Error::WrongType(label.to_string()));
    }
    let n = rs.rank();
    if k >= n {
        return Err(Error::IndexOutOfRange { index: k + 1, rank: n });
    }
    let o1 = rs.alcove_vertex(1)?;
    let mut terms = Vec::with_capacity(k + 1);
    let mut word = Vec::new();
    for i in 0..=k {
        if i > 0 {
            // s_i s_{i−1} ⋯ s_1: the new letter goes on the left
            word.insert(0, i);
        }
        terms.push(apply_word(rs, &WeylWord::simple(&word), o1)?);
    }
    let target = rs.alcove_vertex(k + 1)?.clone();
    let sum_matches = RationalVector::sum(n, &terms) == target;
    let mut steps_hold = true;
    for (h, term) in terms.iter().enumerate().skip(1) {
        steps_hold &= *term == rs.alcove_vertex(h + 1)? - rs.alcove_vertex(h)?;
    }
    let mut sorted = terms.clone();
    sorted.sort();
    sorted.dedup();
    let distinct = sorted.len() == terms.len();
    Ok(Telescoping { k, terms, target, sum_matches, steps_hold, distinct })
}

/// How membership of one `o_i` in the zonotope was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateMethod {
    Telescoping,
    SubsetSum,
    Lp,
    None,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexCertificate {
    pub index: usize,
    pub target: RationalVector,
    pub method: CertificateMethod,
    /// Generator indices for the subset-sum style methods.
    pub subset: Option<Vec<usize>>,
    /// The summands themselves, for auditing.
    pub summands: Option<Vec<RationalVector>>,
    /// `t_v` for the LP method.
    pub coefficients: Option<RationalVector>,
    pub verified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EqualityReport {
    pub type_label: String,
    pub j: usize,
    /// Generators are `W·(scale·ω_j^∨)`.
    #[serde(with = "serde_rational")]
    pub scale: Rational,
    pub generators: Vec<RationalVector>,
    #[serde(with = "serde_rational")]
    pub theta_support: Rational,
    pub contained: bool,
    pub violating_root: Option<RationalVector>,
    pub certificates: Vec<VertexCertificate>,
    pub equal: bool,
}

/// The index `j` whose coweight orbit generates `P*` in the zonotope types.
pub fn zonotope_index(label: TypeLabel) -> Option<usize> {
    match (label.family(), label.rank()) {
        (Family::A, _) | (Family::C, _) | (Family::G, 2) => Some(1),
        (Family::B, 2) => Some(2),
        (Family::B, 3) => Some(3),
        _ => None,
    }
}

/// The scale `1/(q_j m_j)` putting the support of `ZT(W·c·ω_j^∨)` along `θ` at 1.
pub fn critical_scale(rs: &RootSystem, j: usize) -> Result<Rational> {
    let q = q_index(rs, j)?;
    let m = rs.mark(j)?;
    Ok(frac(1, (q as i64) * (m as i64)))
}

/// Tests `P* = ZT(W·c·ω_j^∨)`: containment along every long root, then a
/// membership certificate for every alcove vertex `o_i`.
pub fn zt_equals_polar(rs: &RootSystem, j: usize, c: &Rational) -> Result<EqualityReport> {
    let z = Zonotope::from_orbit(rs, rs.coweight(j)?, c)?;
    let theta_support = zt_support(rs, &z, rs.theta());
    let (contained, violating_root) = contained_in_polar(rs, &z);

    let telescoping = telescoping_applies(rs, j, c)?;
    let mut certificates = Vec::with_capacity(rs.rank());
    for i in 1..=rs.rank() {
        let target = rs.alcove_vertex(i)?.clone();
        certificates.push(vertex_certificate(rs, &z, i, target, telescoping)?);
    }
    let hrep = polar_hrep(rs);
    let on_polar = certificates.iter().all(|cert| hrep.contains(rs, &cert.target));
    let equal = contained && on_polar && certificates.iter().all(|cert| cert.verified);
    Ok(EqualityReport {
        type_label: rs.label().to_string(),
        j,
        scale: c.clone(),
        generators: z.generators,
        theta_support,
        contained,
        violating_root,
        certificates,
        equal,
    })
}

/// Generators are exactly `W·o_1` in type A or C.
fn telescoping_applies(rs: &RootSystem, j: usize, c: &Rational) -> Result<bool> {
    let family_ok = matches!(rs.label().family(), Family::A | Family::C);
    Ok(family_ok && j == 1 && rs.coweight(1)?.scale(c) == *rs.alcove_vertex(1)?)
}

fn vertex_certificate(rs: &RootSystem, z: &Zonotope, i: usize, target: RationalVector, telescoping: bool) -> Result<VertexCertificate> {
    if telescoping {
        let t = telescoping_certificate(rs, i - 1)?;
        let subset: Option<Vec<usize>> = t.terms.iter().map(|p| z.generators.binary_search(p).ok()).collect();
        if let Some(mut subset) = subset.filter(|_| t.sum_matches && t.distinct) {
            subset.sort_unstable();
            let cert = SumCertificate { target: target.clone(), subset };
            return Ok(subset_certificate(z, i, cert, CertificateMethod::Telescoping));
        }
    }
    if z.generators.len() <= SUBSET_SEARCH_LIMIT {
        if let Some(cert) = subset_sum_certificate(z, &target)? {
            return Ok(subset_certificate(z, i, cert, CertificateMethod::SubsetSum));
        }
    }
    let coefficients = zt_membership_coefficients(z, &target);
    let verified = coefficients.as_ref().is_some_and(|t| {
        let mut x = z.anchor();
        for (v, c) in z.generators.iter().zip(t.coords()) {
            x.add_scaled(c, v);
        }
        x == target && t.coords().iter().all(|c| !c.is_negative() && *c <= int(1))
    });
    let method = if coefficients.is_some() { CertificateMethod::Lp } else { CertificateMethod::None };
    Ok(VertexCertificate { index: i, target, method, subset: None, summands: None, coefficients, verified })
}

fn subset_certificate(z: &Zonotope, i: usize, cert: SumCertificate, method: CertificateMethod) -> VertexCertificate {
    let verified = cert.verify(z);
    let summands = cert.subset.iter().map(|&k| z.generators[k].clone()).collect();
    VertexCertificate {
        index: i,
        target: cert.target,
        method,
        subset: Some(cert.subset),
        summands: Some(summands),
        coefficients: None,
        verified,
    }
}
