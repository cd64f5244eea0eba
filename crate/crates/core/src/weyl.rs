//! Weyl group machinery: reflections, words, inversion sets and orbits.
//!
//! Group elements are never stored as matrices. A [`WeylWord`] is a list of
//! reflections and is only ever used through its action on vectors.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::RationalVector;
use crate::rootsys::RootSystem;

/// One reflection in a word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Letter {
    /// `s_{α_i}`, 1-based.
    Simple(usize),
    /// `s_β` for an arbitrary root given by its coordinates.
    Root(RationalVector),
}

/// `w = s_{β_1} ⋯ s_{β_k}`; as a map, `s_{β_k}` acts first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeylWord {
    letters: Vec<Letter>,
}

impl WeylWord {
    pub fn identity() -> Self {
        WeylWord::default()
    }

    pub fn new(letters: Vec<Letter>) -> Self {
        WeylWord { letters }
    }

    pub fn simple(indices: &[usize]) -> Self {
        WeylWord { letters: indices.iter().map(|&i| Letter::Simple(i)).collect() }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Reflections are involutions, so the inverse is the reversed word.
    pub fn inverse(&self) -> Self {
        WeylWord { letters: self.letters.iter().rev().cloned().collect() }
    }

    /// Simple indices, if every letter is simple.
    pub fn simple_indices(&self) -> Option<Vec<usize>> {
        self.letters
            .iter()
            .map(|l| match l {
                Letter::Simple(i) => Some(*i),
                Letter::Root(_) => None,
            })
            .collect()
    }

    fn slice(&self, range: std::ops::Range<usize>) -> Self {
        WeylWord { letters: self.letters[range].to_vec() }
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            match l {
                Letter::Simple(i) => write!(f, "s{i}")?,
                Letter::Root(b) => write!(f, "s{b}")?,
            }
        }
        Ok(())
    }
}

fn letter_root(rs: &RootSystem, letter: &Letter) -> Result<RationalVector> {
    match letter {
        Letter::Simple(i) => rs.simple_root(*i),
        Letter::Root(b) if rs.is_root(b) => Ok(b.clone()),
        Letter::Root(b) => Err(Error::NotARoot(b.to_string())),
    }
}

pub fn is_positive_root(beta: &RationalVector) -> bool {
    beta.height().is_positive()
}

/// `s_β(x) = x − (x, β^∨) β`
pub fn reflect(rs: &RootSystem, beta: &RationalVector, x: &RationalVector) -> Result<RationalVector> {
    if !rs.is_root(beta) {
        return Err(Error::NotARoot(beta.to_string()));
    }
    Ok(reflect_unchecked(rs, beta, x))
}

fn reflect_unchecked(rs: &RootSystem, beta: &RationalVector, x: &RationalVector) -> RationalVector {
    let c = rs.coroot_pairing(x, beta);
    let mut y = x.clone();
    y.add_scaled(&-c, beta);
    y
}

fn apply_letter(rs: &RootSystem, letter: &Letter, x: &RationalVector) -> Result<RationalVector> {
    match letter {
        Letter::Simple(i) => Ok(rs.simple_reflection(rs.check_index(*i)?, x)),
        Letter::Root(b) => reflect(rs, b, x),
    }
}

/// Applies `w` to `x`: the rightmost letter acts first.
pub fn apply_word(rs: &RootSystem, w: &WeylWord, x: &RationalVector) -> Result<RationalVector> {
    w.letters.iter().rev().try_fold(x.clone(), |acc, l| apply_letter(rs, l, &acc))
}

/// The two root sequences attached to a word `w = s_{β_1} ⋯ s_{β_k}`:
/// `ν_i = s_{β_1}⋯s_{β_{i−1}}(β_i)` and `η_i = s_{β_k}⋯s_{β_{i+1}}(β_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion {
    pub betas: Vec<RationalVector>,
    pub nu: Vec<RationalVector>,
    pub eta: Vec<RationalVector>,
}

impl Expansion {
    /// `w(x) = x − Σ (x, β_i^∨) ν_i`
    pub fn apply_via_nu(&self, rs: &RootSystem, x: &RationalVector) -> RationalVector {
        let mut y = x.clone();
        for (b, nu) in self.betas.iter().zip(&self.nu) {
            y.add_scaled(&-rs.coroot_pairing(x, b), nu);
        }
        y
    }

    /// `w(x) = x − Σ (x, β_i) ν_i^∨`
    pub fn apply_via_nu_coroots(&self, rs: &RootSystem, x: &RationalVector) -> RationalVector {
        let mut y = x.clone();
        for (b, nu) in self.betas.iter().zip(&self.nu) {
            y.add_scaled(&-rs.inner(x, b), &rs.coroot(nu));
        }
        y
    }

    /// `w(x) = x − Σ (x, η_i^∨) β_i`
    pub fn apply_via_eta(&self, rs: &RootSystem, x: &RationalVector) -> RationalVector {
        self.apply_suffix(rs, 1, x)
    }

    /// `w(x) = x − Σ (x, η_i) β_i^∨`
    pub fn apply_via_eta_coroots(&self, rs: &RootSystem, x: &RationalVector) -> RationalVector {
        let mut y = x.clone();
        for (b, eta) in self.betas.iter().zip(&self.eta) {
            y.add_scaled(&-rs.inner(x, eta), &rs.coroot(b));
        }
        y
    }

    /// `w_h(x) = s_{β_h}⋯s_{β_k}(x) = x − Σ_{i ≥ h} (x, η_i^∨) β_i`, `h` 1-based.
    pub fn apply_suffix(&self, rs: &RootSystem, h: usize, x: &RationalVector) -> RationalVector {
        let mut y = x.clone();
        for (b, eta) in self.betas.iter().zip(&self.eta).skip(h.saturating_sub(1)) {
            y.add_scaled(&-rs.coroot_pairing(x, eta), b);
        }
        y
    }
}

pub fn expansion_nu_eta(rs: &RootSystem, w: &WeylWord) -> Result<Expansion> {
    let betas = w.letters.iter().map(|l| letter_root(rs, l)).collect::<Result<Vec<_>>>()?;
    let k = betas.len();
    let mut nu = Vec::with_capacity(k);
    let mut eta = Vec::with_capacity(k);
    for (i, beta) in betas.iter().enumerate() {
        nu.push(apply_word(rs, &w.slice(0..i), beta)?);
        // s_{β_k}⋯s_{β_{i+1}} applies s_{β_{i+1}} first
        let tail = WeylWord { letters: w.letters[i + 1..].iter().rev().cloned().collect() };
        eta.push(apply_word(rs, &tail, beta)?);
    }
    Ok(Expansion { betas, nu, eta })
}

/// `N(w) = {γ > 0 : w⁻¹(γ) < 0}` together with `N(w⁻¹)` and the reduced
/// word they were read off.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InversionSet {
    pub roots: Vec<RationalVector>,
    pub inverse_roots: Vec<RationalVector>,
    /// Whether the input word was already reduced.
    pub reduced: bool,
    pub reduced_word: WeylWord,
}

fn require_simple(w: &WeylWord) -> Result<Vec<usize>> {
    w.simple_indices().ok_or_else(|| Error::NonSimpleLetter(w.to_string()))
}

/// Deletes letters until the word is reduced, using the exchange condition:
/// appending `s_a` to a reduced `r` either lengthens it (`r(α_a) > 0`) or
/// cancels exactly one earlier letter.
pub fn reduce_word(rs: &RootSystem, w: &WeylWord) -> Result<WeylWord> {
    let indices = require_simple(w)?;
    let mut reduced: Vec<usize> = Vec::with_capacity(indices.len());
    for a in indices {
        let alpha = rs.simple_root(a)?;
        let image = apply_word(rs, &WeylWord::simple(&reduced), &alpha)?;
        if is_positive_root(&image) {
            reduced.push(a);
            continue;
        }
        let mut v = alpha;
        let mut hit = None;
        for pos in (0..reduced.len()).rev() {
            if v == rs.simple_root(reduced[pos])? {
                hit = Some(pos);
                break;
            }
            v = rs.simple_reflection(reduced[pos] - 1, &v);
        }
        let pos = hit.expect("exchange condition guarantees a cancelling letter");
        reduced.remove(pos);
    }
    Ok(WeylWord::simple(&reduced))
}

fn sorted_distinct(mut roots: Vec<RationalVector>) -> Vec<RationalVector> {
    roots.sort();
    roots.dedup();
    roots
}

pub fn inversion_set(rs: &RootSystem, w: &WeylWord) -> Result<InversionSet> {
    require_simple(w)?;
    let exp = expansion_nu_eta(rs, w)?;
    let all_positive = exp.nu.iter().all(is_positive_root);
    let distinct = exp.nu.iter().collect::<HashSet<_>>().len() == exp.nu.len();
    if all_positive && distinct {
        return Ok(InversionSet {
            roots: sorted_distinct(exp.nu),
            inverse_roots: sorted_distinct(exp.eta),
            reduced: true,
            reduced_word: w.clone(),
        });
    }
    let reduced_word = reduce_word(rs, w)?;
    let exp = expansion_nu_eta(rs, &reduced_word)?;
    Ok(InversionSet {
        roots: sorted_distinct(exp.nu),
        inverse_roots: sorted_distinct(exp.eta),
        reduced: false,
        reduced_word,
    })
}

/// An orbit under the subgroup generated by some simple reflections, in
/// canonical (lexicographic) order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Orbit {
    pub points: Vec<RationalVector>,
    pub base_point: RationalVector,
    pub generators: Vec<usize>,
}

impl Orbit {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, x: &RationalVector) -> bool {
        self.points.binary_search(x).is_ok()
    }

    pub fn sum(&self) -> RationalVector {
        RationalVector::sum(self.base_point.dim(), &self.points)
    }
}

/// Breadth-first closure of `x` under the listed simple reflections (1-based).
pub fn orbit(rs: &RootSystem, x: &RationalVector, generators: &[usize]) -> Result<Orbit> {
    orbit_bounded(rs, x, generators, usize::MAX)
}

/// Orbit under the whole Weyl group.
pub fn full_orbit(rs: &RootSystem, x: &RationalVector) -> Orbit {
    let all: Vec<usize> = (1..=rs.rank()).collect();
    orbit(rs, x, &all).expect("all simple indices are valid")
}

/// Like [`orbit`], failing with `OrbitTooLarge` once more than `limit`
/// points have been found.
pub fn orbit_bounded(rs: &RootSystem, x: &RationalVector, generators: &[usize], limit: usize) -> Result<Orbit> {
    let gens = generators.iter().map(|&g| rs.check_index(g)).collect::<Result<Vec<_>>>()?;
    let mut seen: HashSet<RationalVector> = HashSet::new();
    seen.insert(x.clone());
    let mut queue = VecDeque::from([x.clone()]);
    while let Some(p) = queue.pop_front() {
        for &g in &gens {
            let y = rs.simple_reflection(g, &p);
            if !seen.contains(&y) {
                if seen.len() >= limit {
                    return Err(Error::OrbitTooLarge { limit });
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    let mut points: Vec<_> = seen.into_iter().collect();
    points.sort();
    Ok(Orbit { points, base_point: x.clone(), generators: generators.to_vec() })
}

/// Full orbit of `x` with, for every point `y`, a shortest word `w` such that
/// `w(x) = y`. For dominant `x` these are the minimal coset representatives
/// of `W / Stab(x)`. Points come in breadth-first order.
pub fn orbit_with_words(rs: &RootSystem, x: &RationalVector) -> Vec<(RationalVector, WeylWord)> {
    let mut seen: HashSet<RationalVector> = HashSet::new();
    seen.insert(x.clone());
    let mut out = vec![(x.clone(), Vec::<usize>::new())];
    let mut head = 0;
    while head < out.len() {
        let (p, word) = out[head].clone();
        head += 1;
        for g in 0..rs.rank() {
            let y = rs.simple_reflection(g, &p);
            if seen.insert(y.clone()) {
                let mut w = Vec::with_capacity(word.len() + 1);
                w.push(g + 1);
                w.extend_from_slice(&word);
                out.push((y, w));
            }
        }
    }
    out.into_iter().map(|(p, w)| (p, WeylWord::simple(&w))).collect()
}

/// Positive roots orthogonal to `x`; their reflections generate `Stab_W(x)`.
pub fn stabilizer_generators(rs: &RootSystem, x: &RationalVector) -> Vec<RationalVector> {
    rs.positive_roots().iter().filter(|b| rs.inner(x, b).is_zero()).cloned().collect()
}

/// `q_j = [W_0 : W_0^j]`, computed as the size of the orbit of `ω_j^∨` under
/// the simple reflections orthogonal to `θ`.
pub fn q_index(rs: &RootSystem, j: usize) -> Result<usize> {
    let cw = rs.coweight(j)?;
    Ok(orbit(rs, cw, &rs.theta_orthogonal_simple())?.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{frac, int};
    use crate::rootsys::{all_labels, Family, TypeLabel};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn rs(f: Family, n: usize) -> RootSystem {
        RootSystem::new(TypeLabel::new(f, n).unwrap())
    }

    fn random_point(rng: &mut StdRng, n: usize) -> RationalVector {
        RationalVector::new((0..n).map(|_| frac(rng.gen_range(-6..=6), rng.gen_range(1..=4))).collect())
    }

    /// Orbit under reflections in an arbitrary set of roots (test oracle).
    fn orbit_by_reflections(rs: &RootSystem, x: &RationalVector, roots: &[RationalVector]) -> HashSet<RationalVector> {
        let mut seen = HashSet::from([x.clone()]);
        let mut stack = vec![x.clone()];
        while let Some(p) = stack.pop() {
            for b in roots {
                let y = reflect(rs, b, &p).unwrap();
                if seen.insert(y.clone()) {
                    stack.push(y);
                }
            }
        }
        seen
    }

    #[test]
    fn reflect_examples() {
        let a2 = rs(Family::A, 2);
        let a1 = RationalVector::from_ints(&[1, 0]);
        assert_eq!(reflect(&a2, &a1, &a1).unwrap(), RationalVector::from_ints(&[-1, 0]));
        let cw = a2.coweight(1).unwrap();
        assert_eq!(reflect(&a2, &a1, cw).unwrap(), RationalVector::new(vec![frac(-1, 3), frac(1, 3)]));
        // ω_2^∨ ⊥ α_1
        let cw2 = a2.coweight(2).unwrap();
        assert_eq!(&reflect(&a2, &a1, cw2).unwrap(), cw2);
        assert!(matches!(reflect(&a2, &RationalVector::from_ints(&[2, 0]), cw), Err(Error::NotARoot(_))));
    }

    #[test]
    fn apply_word_examples() {
        let b4 = rs(Family::B, 4);
        let w1 = b4.weight(1).unwrap();
        assert_eq!(&apply_word(&b4, &WeylWord::identity(), w1).unwrap(), w1);
        let expected = w1 - &RationalVector::unit(4, 0);
        assert_eq!(apply_word(&b4, &WeylWord::simple(&[1]), w1).unwrap(), expected);

        let f4 = rs(Family::F, 4);
        let w4 = f4.weight(4).unwrap();
        let image = apply_word(&f4, &WeylWord::simple(&[4, 3, 2, 3, 4]), w4).unwrap();
        assert_eq!(image, w4 - &RationalVector::from_ints(&[0, 1, 2, 2]));
        assert!(apply_word(&f4, &WeylWord::simple(&[5]), w4).is_err());
    }

    #[test]
    fn expansion_small_cases() {
        let a2 = rs(Family::A, 2);
        let e = expansion_nu_eta(&a2, &WeylWord::simple(&[2])).unwrap();
        assert_eq!(e.nu, e.eta);
        assert_eq!(e.nu, vec![RationalVector::from_ints(&[0, 1])]);
        let e = expansion_nu_eta(&a2, &WeylWord::simple(&[1, 2])).unwrap();
        assert_eq!(e.nu, vec![RationalVector::from_ints(&[1, 0]), RationalVector::from_ints(&[1, 1])]);
        assert_eq!(e.eta, vec![RationalVector::from_ints(&[1, 1]), RationalVector::from_ints(&[0, 1])]);
    }

    #[test]
    fn expansion_identities_with_root_letters() {
        let mut rng = StdRng::seed_from_u64(7);
        for label in [TypeLabel::new(Family::B, 3).unwrap(), TypeLabel::new(Family::G, 2).unwrap()] {
            let r = RootSystem::new(label);
            for _ in 0..20 {
                let k = rng.gen_range(0..=6);
                let letters = (0..k).map(|_| Letter::Root(r.roots()[rng.gen_range(0..r.roots().len())].clone())).collect();
                let w = WeylWord::new(letters);
                let x = random_point(&mut rng, r.rank());
                let exp = expansion_nu_eta(&r, &w).unwrap();
                let direct = apply_word(&r, &w, &x).unwrap();
                assert_eq!(exp.apply_via_nu(&r, &x), direct);
                assert_eq!(exp.apply_via_nu_coroots(&r, &x), direct);
                assert_eq!(exp.apply_via_eta(&r, &x), direct);
                assert_eq!(exp.apply_via_eta_coroots(&r, &x), direct);
            }
        }
    }

    #[test]
    fn inversion_set_examples() {
        let a2 = rs(Family::A, 2);
        let id = inversion_set(&a2, &WeylWord::identity()).unwrap();
        assert!(id.reduced && id.roots.is_empty());
        let ss = inversion_set(&a2, &WeylWord::simple(&[1, 1])).unwrap();
        assert!(!ss.reduced && ss.roots.is_empty());
        assert!(ss.reduced_word.is_empty());
        let w0 = inversion_set(&a2, &WeylWord::simple(&[1, 2, 1])).unwrap();
        assert!(w0.reduced);
        assert_eq!(w0.roots, sorted(a2.positive_roots().to_vec()));
        let bad = WeylWord::new(vec![Letter::Root(RationalVector::from_ints(&[1, 1]))]);
        assert!(matches!(inversion_set(&a2, &bad), Err(Error::NonSimpleLetter(_))));
    }

    fn sorted(mut v: Vec<RationalVector>) -> Vec<RationalVector> {
        v.sort();
        v
    }

    /// `N(w)` straight from the definition.
    fn inversions_by_definition(rs: &RootSystem, w: &WeylWord) -> Vec<RationalVector> {
        let inv = w.inverse();
        sorted(
            rs.positive_roots()
                .iter()
                .filter(|g| !is_positive_root(&apply_word(rs, &inv, g).unwrap()))
                .cloned()
                .collect(),
        )
    }

    #[test]
    fn inversion_sets_match_definition() {
        let mut rng = StdRng::seed_from_u64(11);
        for label in all_labels(4) {
            let r = RootSystem::new(label);
            for _ in 0..25 {
                let k = rng.gen_range(0..=9);
                let w = WeylWord::simple(&(0..k).map(|_| rng.gen_range(1..=r.rank())).collect::<Vec<_>>());
                let inv = inversion_set(&r, &w).unwrap();
                assert_eq!(inv.roots, inversions_by_definition(&r, &w), "{label} {w}");
                assert_eq!(inv.inverse_roots, inversions_by_definition(&r, &w.inverse()), "{label} {w}");
                assert_eq!(inv.roots.len(), inv.reduced_word.len(), "length = |N(w)|");
                let x = random_point(&mut rng, r.rank());
                assert_eq!(apply_word(&r, &inv.reduced_word, &x).unwrap(), apply_word(&r, &w, &x).unwrap());
            }
        }
    }

    #[test]
    fn orbit_examples() {
        let a2 = rs(Family::A, 2);
        let zero = full_orbit(&a2, &RationalVector::zero(2));
        assert_eq!(zero.points, vec![RationalVector::zero(2)]);
        let o1 = full_orbit(&a2, a2.alcove_vertex(1).unwrap());
        assert_eq!(
            o1.points,
            vec![
                RationalVector::new(vec![frac(-1, 3), frac(-2, 3)]),
                RationalVector::new(vec![frac(-1, 3), frac(1, 3)]),
                RationalVector::new(vec![frac(2, 3), frac(1, 3)]),
            ]
        );
        for n in 1..=6 {
            let r = rs(Family::A, n);
            assert_eq!(full_orbit(&r, r.alcove_vertex(1).unwrap()).len(), n + 1);
        }
        for n in 2..=5 {
            let r = rs(Family::C, n);
            assert_eq!(full_orbit(&r, r.alcove_vertex(1).unwrap()).len(), 2 * n);
        }
        assert!(matches!(orbit(&a2, &RationalVector::zero(2), &[3]), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(
            orbit_bounded(&a2, a2.alcove_vertex(1).unwrap(), &[1, 2], 2),
            Err(Error::OrbitTooLarge { limit: 2 })
        ));
    }

    #[test]
    fn full_orbits_sum_to_zero() {
        let mut rng = StdRng::seed_from_u64(3);
        for label in all_labels(4) {
            let r = RootSystem::new(label);
            for _ in 0..3 {
                let x = random_point(&mut rng, r.rank());
                assert!(full_orbit(&r, &x).sum().is_zero(), "{label}");
            }
        }
    }

    #[test]
    fn stabilizer_examples() {
        let b3 = rs(Family::B, 3);
        assert_eq!(stabilizer_generators(&b3, &RationalVector::zero(3)).len(), b3.positive_roots().len());
        let rho: RationalVector = RationalVector::sum(3, (1..=3).map(|i| b3.coweight(i).unwrap()));
        assert!(stabilizer_generators(&b3, &rho).is_empty());
        for label in all_labels(3) {
            let r = RootSystem::new(label);
            for j in 1..=r.rank() {
                let cw = r.coweight(j).unwrap();
                let stab = stabilizer_generators(&r, cw);
                assert!(stab.iter().all(|b| b[j - 1].is_zero()));
                // the generated group fixes ω_j^∨
                assert_eq!(orbit_by_reflections(&r, cw, &stab).len(), 1);
                // and agrees with ⟨s_i : i ≠ j⟩ on a generic point
                let generic = RationalVector::new((0..r.rank()).map(|i| frac(2 * i as i64 + 3, 7)).collect());
                let others: Vec<usize> = (1..=r.rank()).filter(|&i| i != j).collect();
                let via_simple: HashSet<_> = orbit(&r, &generic, &others).unwrap().points.into_iter().collect();
                assert_eq!(orbit_by_reflections(&r, &generic, &stab), via_simple, "{label} j={j}");
            }
        }
    }

    #[test]
    fn stabilizer_of_dominant_points_is_parabolic() {
        for label in all_labels(4) {
            let r = RootSystem::new(label);
            let x = r.theta().clone();
            let stab = stabilizer_generators(&r, &x);
            let simple: Vec<usize> = r.theta_orthogonal_simple();
            let generic = RationalVector::new((0..r.rank()).map(|i| frac(3 * i as i64 + 1, 5)).collect());
            let a: HashSet<_> = orbit(&r, &generic, &simple).unwrap().points.into_iter().collect();
            assert_eq!(orbit_by_reflections(&r, &generic, &stab), a, "{label}");
        }
    }

    #[test]
    fn q_index_examples() {
        for n in 1..=6 {
            assert_eq!(q_index(&rs(Family::A, n), 1).unwrap(), 1);
        }
        assert_eq!(q_index(&rs(Family::B, 3), 3).unwrap(), 2);
        assert_eq!(q_index(&rs(Family::G, 2), 1).unwrap(), 2);
        assert_eq!(q_index(&rs(Family::C, 4), 1).unwrap(), 1);
        assert!(q_index(&rs(Family::G, 2), 3).is_err());
    }

    #[test]
    fn minimal_coset_representatives() {
        for label in all_labels(3) {
            let r = RootSystem::new(label);
            for j in 1..=r.rank() {
                let cw = r.coweight(j).unwrap();
                let alpha_j = r.simple_root(j).unwrap();
                let bound = cw - &r.coroot(&alpha_j);
                for (point, w) in orbit_with_words(&r, cw) {
                    assert_eq!(apply_word(&r, &w, cw).unwrap(), point);
                    let inv = inversion_set(&r, &w).unwrap();
                    assert!(inv.reduced, "{label} {w}");
                    if w.is_empty() {
                        continue;
                    }
                    assert_eq!(w.letters().last(), Some(&Letter::Simple(j)));
                    assert!(inv.inverse_roots.contains(&alpha_j));
                    let exp = expansion_nu_eta(&r, &w).unwrap();
                    assert!(exp.eta.iter().all(|e| r.inner(cw, e) >= int(1)), "{label} {w}");
                    assert!(r.coroot_leq(&point, &bound), "{label} {w}");
                    // the suffix bound w_h(ω_j^∨) ≤∨ ω_j^∨ − β_k^∨ − … − β_h^∨
                    for h in 1..=w.len() {
                        let mut b = cw.clone();
                        for beta in &exp.betas[h - 1..] {
                            b -= &r.coroot(beta);
                        }
                        assert!(r.coroot_leq(&exp.apply_suffix(&r, h, cw), &b));
                    }
                }
            }
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]
            #[test]
            fn reflection_is_involutive_isometry(
                idx in 0usize..4,
                root in 0usize..1000,
                xs in proptest::collection::vec((-5i64..=5, 1i64..=3), 8),
            ) {
                let label = [
                    TypeLabel::new(Family::A, 3).unwrap(),
                    TypeLabel::new(Family::B, 4).unwrap(),
                    TypeLabel::new(Family::F, 4).unwrap(),
                    TypeLabel::new(Family::G, 2).unwrap(),
                ][idx];
                let r = RootSystem::new(label);
                let n = r.rank();
                let beta = &r.roots()[root % r.roots().len()];
                let x = RationalVector::new(xs[..n].iter().map(|&(p, q)| frac(p, q)).collect());
                let y = RationalVector::new(xs[4..4 + n].iter().map(|&(p, q)| frac(p, q)).collect());
                let rx = reflect(&r, beta, &x).unwrap();
                let ry = reflect(&r, beta, &y).unwrap();
                prop_assert_eq!(reflect(&r, beta, &rx).unwrap(), x.clone());
                prop_assert_eq!(r.inner(&rx, &ry), r.inner(&x, &y));
            }
        }
    }
}
