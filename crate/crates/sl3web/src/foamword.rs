//! Foams recorded symbolically, as words in generators with a degree.
//!
//! A foam is never evaluated. What is kept is the sequence of local pieces
//! (zips, unzips, digon removals, shifts, dots) and their degrees, which is
//! enough to check homogeneity of the basis and the graded dimensions.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::bijection::iota;
use crate::flows::{enumerate_flows, Flow};
use crate::ladderweb::{enumerate_basis, Factor, LadderWeb, LtWord, SignString};
use crate::tableaux::{superstandard, tableaux_with_residues, Multipartition3, Multitableau};
use crate::{Error, Laurent};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    Zip { pos: u32 },
    Unzip { pos: u32 },
    /// Removes `count` digons at once.
    DigonRemoval { pos: u32, count: u32 },
    Shift { pos: u32 },
    Dots { facet: u32, count: u32 },
    Identity,
}

impl Generator {
    pub fn degree(&self) -> i64 {
        match *self {
            Generator::Zip { .. } | Generator::Unzip { .. } => 1,
            Generator::DigonRemoval { count, .. } => -i64::from(count),
            Generator::Dots { count, .. } => 2 * i64::from(count),
            Generator::Shift { .. } | Generator::Identity => 0,
        }
    }

    /// The same piece read upside down.
    pub fn flipped(self) -> Self {
        match self {
            Generator::Zip { pos } => Generator::Unzip { pos },
            Generator::Unzip { pos } => Generator::Zip { pos },
            g => g,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Zip { pos } => write!(f, "zip@{pos}"),
            Generator::Unzip { pos } => write!(f, "unzip@{pos}"),
            Generator::DigonRemoval { pos, count } => write!(f, "digon{count}@{pos}"),
            Generator::Shift { pos } => write!(f, "shift@{pos}"),
            Generator::Dots { facet, count } => write!(f, "dots{count}@{facet}"),
            Generator::Identity => f.write_str("id"),
        }
    }
}

/// The piece a swap of neighbouring values with residues `a`, `b` gives.
pub fn classify_transposition(a: i64, b: i64, pos: u32) -> Generator {
    match b - a {
        0 => Generator::DigonRemoval { pos, count: 2 },
        1 => Generator::Zip { pos },
        -1 => Generator::Unzip { pos },
        _ => Generator::Shift { pos },
    }
}

/// A foam from the web of `bottom` to the web of `top`. The sign is carried
/// along but no computation here reads it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoamWord {
    pub bottom: LtWord,
    pub top: LtWord,
    pub generators: Vec<Generator>,
    pub sign: i8,
}

impl FoamWord {
    pub fn identity(word: LtWord) -> Self {
        Self { bottom: word.clone(), top: word, generators: vec![Generator::Identity], sign: 1 }
    }

    pub fn degree(&self) -> i64 {
        self.generators.iter().map(Generator::degree).sum()
    }

    /// Reflection in a horizontal plane. Dots on different facets commute,
    /// so each run of them is kept sorted by facet.
    pub fn adjoint(&self) -> Self {
        let mut generators: Vec<Generator> = self.generators.iter().rev().map(|g| g.flipped()).collect();
        for run in generators.chunk_by_mut(|a, b| {
            matches!(a, Generator::Dots { .. }) && matches!(b, Generator::Dots { .. })
        }) {
            run.sort_by_key(|g| match g {
                Generator::Dots { facet, .. } => *facet,
                _ => 0,
            });
        }
        Self { bottom: self.top.clone(), top: self.bottom.clone(), generators, sign: self.sign }
    }

    /// `self` on top of `below`.
    pub fn compose(&self, below: &FoamWord) -> Result<Self, Error> {
        if self.bottom != below.top {
            return Err(Error::Domain(format!("cannot stack {} on {}", self.bottom, below.top)));
        }
        let generators: Vec<Generator> = below
            .generators
            .iter()
            .chain(&self.generators)
            .copied()
            .filter(|g| *g != Generator::Identity)
            .collect();
        Ok(Self {
            bottom: below.bottom.clone(),
            top: self.top.clone(),
            generators: if generators.is_empty() { vec![Generator::Identity] } else { generators },
            sign: self.sign * below.sign,
        })
    }
}

impl fmt::Display for FoamWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().rev().map(ToString::to_string).collect();
        write!(f, "[{}] : {} -> {} (deg {})", gens.join(" . "), self.bottom, self.top, self.degree())
    }
}

/// The web word of `shape` with one rung per node: residues of the
/// superstandard filling in order.
pub fn idempotent(shape: &Multipartition3) -> LtWord {
    let seq = superstandard(shape).residue_sequence().expect("distinct entries");
    LtWord::from_application(seq.into_iter().map(|r| Factor { i: r as usize, j: 1 }))
}

/// Builds the idempotent web on `n` strands, refusing words that vanish.
pub fn idempotent_web(shape: &Multipartition3, n: usize) -> Result<LadderWeb, Error> {
    let ell = usize::try_from(shape.m).map_err(|_| Error::Domain("negative shift".into()))?;
    let word = idempotent(shape);
    LadderWeb::build(&word, n, ell)?
        .ok_or_else(|| Error::Invariant(format!("idempotent word {word} of {shape} kills the highest weight")))
}

/// Whether the two idempotents are equal rather than orthogonal.
pub fn orthogonality_check(a: &Multipartition3, b: &Multipartition3) -> bool {
    a.m == b.m && idempotent(a) == idempotent(b)
}

/// Dots on each facet of the idempotent: the per-step degree of the
/// superstandard filling.
pub fn dot_placement(shape: &Multipartition3) -> Vec<i64> {
    superstandard(shape).bkw_degree().1
}

/// A sequence of swaps turning one filling into another.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation {
    /// Swaps `τ_j` in the order they are applied.
    pub applied: Vec<u32>,
    /// The filling after each swap.
    pub steps: Vec<Multitableau>,
}

impl Permutation {
    /// Indices as a composition, the last swap applied leftmost.
    pub fn composition(&self) -> Vec<u32> {
        self.applied.iter().rev().copied().collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.applied.is_empty() {
            return f.write_str("id");
        }
        for j in self.composition() {
            write!(f, "τ{j}")?;
        }
        Ok(())
    }
}

/// For `j = 1, 2, ...` moves the value sitting where `reference` has `j`
/// down to `j` by adjacent swaps. Every intermediate filling is checked to be
/// standard.
pub fn minimal_permutation(t: &Multitableau, reference: &Multitableau) -> Result<Permutation, Error> {
    if t.shape() != reference.shape() || t.has_repeats() || reference.has_repeats() {
        return Err(Error::Domain(format!("{t} and {reference} are not fillings of one shape by distinct values")));
    }
    let mut cur = t.clone();
    let mut perm = Permutation { applied: Vec::new(), steps: Vec::new() };
    for j in 1..=reference.max_entry() {
        let node = reference.nodes_of(j)[0];
        let mut e = cur.get(node).expect("same shape");
        while e > j {
            cur = cur
                .swap(e - 1)
                .ok_or_else(|| Error::Invariant(format!("swapping {} and {e} in {cur} is not standard", e - 1)))?;
            perm.applied.push(e - 1);
            perm.steps.push(cur.clone());
            e -= 1;
        }
    }
    debug_assert_eq!(&cur, reference);
    Ok(perm)
}

/// Generators for sorting `t` into `reference`, each classified by the
/// residues it exchanges.
pub fn swap_generators(t: &Multitableau, reference: &Multitableau) -> Result<Vec<Generator>, Error> {
    let perm = minimal_permutation(t, reference)?;
    let mut cur = t.clone();
    let mut out = Vec::new();
    for (&j, next) in perm.applied.iter().zip(&perm.steps) {
        let res = cur.residue_sequence()?;
        out.push(classify_transposition(res[j as usize - 1], res[j as usize], j));
        cur = next.clone();
    }
    Ok(out)
}

/// The foam from a web with flow to the idempotent web of its shape.
pub fn half_foam(web: &LadderWeb, flow: &Flow) -> Result<FoamWord, Error> {
    let t = iota(web, flow)?;
    half_foam_of(web.word.clone(), &t)
}

fn half_foam_of(bottom: LtWord, t: &Multitableau) -> Result<FoamWord, Error> {
    let shape = t.shape();
    let expanded = t.expand_repeats();
    let mut generators = Vec::new();
    // Each repeated value left a digon, or a theta for a triple.
    let mut pos = 1;
    for mult in t.multiplicities() {
        match mult {
            2 => generators.push(Generator::DigonRemoval { pos, count: 1 }),
            3 => generators.push(Generator::DigonRemoval { pos, count: 3 }),
            _ => {}
        }
        pos += mult as u32;
    }
    generators.extend(swap_generators(&expanded, &superstandard(&shape))?);
    if generators.is_empty() {
        generators.push(Generator::Identity);
    }
    Ok(FoamWord { bottom, top: idempotent(&shape), generators, sign: 1 })
}

/// The idempotent of `shape` with its dots.
pub fn dotted_idempotent(shape: &Multipartition3) -> FoamWord {
    let word = idempotent(shape);
    let generators: Vec<Generator> = dot_placement(shape)
        .into_iter()
        .enumerate()
        .filter(|&(_, m)| m > 0)
        .map(|(k, m)| Generator::Dots { facet: k as u32 + 1, count: m as u32 })
        .collect();
    if generators.is_empty() {
        return FoamWord::identity(word);
    }
    FoamWord { bottom: word.clone(), top: word, generators, sign: 1 }
}

#[derive(Clone, Debug)]
pub struct BasisFoam {
    pub shape: Multipartition3,
    pub top_tableau: Multitableau,
    pub bottom_tableau: Multitableau,
    pub top_web: LtWord,
    pub bottom_web: LtWord,
    pub word: FoamWord,
}

impl BasisFoam {
    pub fn degree(&self) -> i64 {
        self.word.degree()
    }

    pub fn involution(&self) -> Self {
        Self {
            shape: self.shape.clone(),
            top_tableau: self.bottom_tableau.clone(),
            bottom_tableau: self.top_tableau.clone(),
            top_web: self.bottom_web.clone(),
            bottom_web: self.top_web.clone(),
            word: self.word.adjoint(),
        }
    }

    fn key(&self) -> (Vec<i64>, String, String) {
        (
            idempotent(&self.shape).application().map(|f| f.i as i64).collect(),
            self.top_tableau.to_json().to_string(),
            self.bottom_tableau.to_json().to_string(),
        )
    }
}

/// Sign is ignored: two basis foams are equal when their indices and words
/// agree.
impl PartialEq for BasisFoam {
    fn eq(&self, other: &Self) -> bool {
        self.shape == other.shape
            && self.top_tableau == other.top_tableau
            && self.bottom_tableau == other.bottom_tableau
            && self.top_web == other.top_web
            && self.bottom_web == other.bottom_web
            && self.word.generators == other.word.generators
    }
}

impl Eq for BasisFoam {}

/// `F_top . e d . F_bottom*`, a foam from the bottom web up to the top web.
pub fn basis_foam(
    top: (&LadderWeb, &Flow),
    bottom: (&LadderWeb, &Flow),
) -> Result<BasisFoam, Error> {
    let t_top = iota(top.0, top.1)?;
    let t_bot = iota(bottom.0, bottom.1)?;
    basis_foam_of(top.0.word.clone(), &t_top, bottom.0.word.clone(), &t_bot)
}

fn basis_foam_of(top_web: LtWord, t_top: &Multitableau, bottom_web: LtWord, t_bot: &Multitableau) -> Result<BasisFoam, Error> {
    let shape = t_top.shape();
    if t_bot.shape() != shape {
        return Err(Error::Domain(format!("{t_top} and {t_bot} have different shapes")));
    }
    let up = half_foam_of(bottom_web.clone(), t_bot)?;
    let down = half_foam_of(top_web.clone(), t_top)?.adjoint();
    let word = down.compose(&dotted_idempotent(&shape).compose(&up)?)?;
    Ok(BasisFoam { shape, top_tableau: t_top.clone(), bottom_tableau: t_bot.clone(), top_web, bottom_web, word })
}

/// Every basis web of `s` with every flow, with its filling.
pub fn filled_flows(s: &SignString) -> Result<Vec<(LadderWeb, Flow, Multitableau)>, Error> {
    let mut out = Vec::new();
    for (_, web) in enumerate_basis(s)? {
        for flow in enumerate_flows(&web) {
            let t = iota(&web, &flow)?;
            out.push((web.clone(), flow, t));
        }
    }
    Ok(out)
}

/// One basis foam for each shape and each ordered pair of fillings of that
/// shape coming from flows on basis webs of `s`. Sorted by residue
/// sequence of the shape, then by the two fillings.
pub fn enumerate_cellular_basis(s: &SignString) -> Result<Vec<BasisFoam>, Error> {
    let mut by_shape: BTreeMap<String, Vec<(LtWord, Multitableau)>> = BTreeMap::new();
    for (web, _, t) in filled_flows(s)? {
        by_shape.entry(t.shape().to_string()).or_default().push((web.word, t));
    }
    let groups: Vec<_> = by_shape.into_values().collect();
    let mut out: Vec<BasisFoam> = groups
        .par_iter()
        .map(|group| -> Result<Vec<BasisFoam>, Error> {
            let mut v = Vec::with_capacity(group.len() * group.len());
            for (wt, tt) in group {
                for (wb, tb) in group {
                    v.push(basis_foam_of(wt.clone(), tt, wb.clone(), tb)?);
                }
            }
            Ok(v)
        })
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .flatten()
        .collect();
    out.sort_by_cached_key(BasisFoam::key);
    Ok(out)
}

/// `Σ q^(deg T1 + deg T2)` over pairs of standard fillings of one shape
/// whose residue sequences are those of `a` and `b`, shifted down by `n`.
pub fn graded_dim(a: &Multipartition3, b: &Multipartition3, n: usize) -> Result<Laurent, Error> {
    if a.size() != b.size() || a.m != b.m {
        return Err(Error::Domain(format!("{a} and {b} do not have the same size and shift")));
    }
    let ra = superstandard(a).residue_sequence()?;
    let rb = superstandard(b).residue_sequence()?;
    let mut left: BTreeMap<String, Vec<i64>> = BTreeMap::new();
    for t in tableaux_with_residues(&ra, a.m) {
        left.entry(t.shape().to_string()).or_default().push(t.bkw_degree().0);
    }
    let mut out = Laurent::zero();
    for t in tableaux_with_residues(&rb, b.m) {
        if let Some(ds) = left.get(&t.shape().to_string()) {
            let d = t.bkw_degree().0;
            out += &Laurent::from_exponents(ds.iter().map(|x| x + d));
        }
    }
    Ok(out.shift(-(n as i64)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::parse_multitableau;

    fn shape(parts: [&[usize]; 3], m: i64) -> Multipartition3 {
        Multipartition3::from_parts(parts, m).unwrap()
    }

    #[test]
    fn idempotent_words() {
        let s = shape([&[2, 1], &[1], &[2, 1]], 2);
        assert_eq!(idempotent(&s), "F1 F3 F2 F2 F1 F3 F2".parse().unwrap());
        assert!(idempotent_web(&s, 4).is_ok());
        assert!(idempotent(&shape([&[], &[], &[]], 1)).is_empty());
    }

    #[test]
    fn dots() {
        assert_eq!(dot_placement(&shape([&[2, 1], &[1], &[2, 1]], 2)), vec![2, 0, 0, 1, 0, 0, 0]);
        assert_eq!(dot_placement(&shape([&[], &[], &[1]], 1)), vec![0]);
    }

    #[test]
    fn transpositions() {
        assert_eq!(classify_transposition(2, 1, 1).degree(), 1);
        assert_eq!(classify_transposition(2, 2, 1).degree(), -2);
        assert_eq!(classify_transposition(1, 3, 1), Generator::Shift { pos: 1 });
    }

    #[test]
    fn sorting_into_the_reference() {
        let t = parse_multitableau("(1 3/6 | 5 | 2 4/7)", 2).unwrap();
        let reference = superstandard(&t.shape());
        let p = minimal_permutation(&t, &reference).unwrap();
        assert_eq!(p.to_string(), "τ4τ5τ3τ4τ5τ2");
        assert_eq!(p.steps.len(), 6);
        assert!(minimal_permutation(&reference, &reference).unwrap().applied.is_empty());
    }

    #[test]
    fn adjoint_is_an_involution() {
        let t = parse_multitableau("(1 3/6 | 5 | 2 4/7)", 2).unwrap();
        let f = half_foam_of("F1 F1 F2 F3 F3 F2 F2".parse().unwrap(), &t).unwrap();
        assert_eq!(f.adjoint().adjoint(), f);
        assert_eq!(f.adjoint().degree(), f.degree());
    }
}
