//! Webs as ladder words.
//!
//! A web with `n` boundary points is a word in divided powers `F_i^(j)`
//! applied to the highest weight `(3^ℓ, 0, ..., 0)`. Each factor moves `j`
//! units from upright `i` to upright `i + 1`. Words are written the usual
//! way: the leftmost factor is applied last.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::tableaux::ColTableau;
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Empty,
    Up,
    Down,
    Full,
}

impl Sign {
    pub fn weight(self) -> u8 {
        match self {
            Sign::Empty => 0,
            Sign::Up => 1,
            Sign::Down => 2,
            Sign::Full => 3,
        }
    }

    pub fn from_weight(w: u8) -> Option<Sign> {
        Some(match w {
            0 => Sign::Empty,
            1 => Sign::Up,
            2 => Sign::Down,
            3 => Sign::Full,
            _ => return None,
        })
    }

    fn symbol(self) -> char {
        match self {
            Sign::Empty => 'o',
            Sign::Up => '+',
            Sign::Down => '-',
            Sign::Full => 'x',
        }
    }
}

/// An enhanced sign string: `o`, `+`, `-`, `x` for weights 0 to 3.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignString(pub Vec<Sign>);

impl SignString {
    pub fn weights(&self) -> Vec<u8> {
        self.0.iter().map(|s| s.weight()).collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_classical(&self) -> bool {
        self.0.iter().all(|s| matches!(s, Sign::Up | Sign::Down))
    }

    /// `ℓ` with `3ℓ` equal to the total weight.
    pub fn level(&self) -> Result<usize, Error> {
        let total: usize = self.weights().iter().map(|&w| w as usize).sum();
        if !total.is_multiple_of(3) {
            return Err(Error::Domain(format!("weight of {self} is {total}, not a multiple of 3")));
        }
        Ok(total / 3)
    }

    /// Every classical sign string of length `n` with weight divisible by 3.
    pub fn all_classical(n: usize) -> Vec<SignString> {
        (0..1u32 << n)
            .map(|bits| {
                SignString((0..n).map(|k| if bits >> (n - 1 - k) & 1 == 0 { Sign::Up } else { Sign::Down }).collect())
            })
            .filter(|s| s.level().is_ok())
            .collect()
    }
}

impl fmt::Display for SignString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|s| write!(f, "{}", s.symbol()))
    }
}

impl FromStr for SignString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        s.chars()
            .filter(|c| !c.is_whitespace() && *c != ',')
            .map(|c| match c {
                'o' | '0' => Ok(Sign::Empty),
                '+' => Ok(Sign::Up),
                '-' => Ok(Sign::Down),
                'x' | 'X' => Ok(Sign::Full),
                other => Err(Error::Parse(format!("unknown sign {other:?}"))),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(SignString)
    }
}

/// A divided power `F_i^(j)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Factor {
    pub i: usize,
    pub j: u8,
}

/// A product of divided powers, stored leftmost factor first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LtWord(pub Vec<Factor>);

impl LtWord {
    pub fn from_pairs(pairs: &[(usize, u8)]) -> Self {
        Self(pairs.iter().map(|&(i, j)| Factor { i, j }).collect())
    }

    /// Builds a word from factors listed in the order they act.
    pub fn from_application(steps: impl IntoIterator<Item = Factor>) -> Self {
        let mut v: Vec<Factor> = steps.into_iter().collect();
        v.reverse();
        Self(v)
    }

    /// Factors in the order they act: rightmost first.
    pub fn application(&self) -> impl DoubleEndedIterator<Item = Factor> + ExactSizeIterator + '_ {
        self.0.iter().rev().copied()
    }

    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn total_length(&self) -> usize {
        self.0.iter().map(|f| f.j as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let steps: Vec<[usize; 2]> = self.application().map(|f| [f.i, f.j as usize]).collect();
        serde_json::json!(steps)
    }
}

impl fmt::Display for LtWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|x| if x.j == 1 { format!("F{}", x.i) } else { format!("F{}^{}", x.i, x.j) })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for LtWord {
    type Err = Error;

    /// Accepts `F1 F2^2 F1`, `F1F2^(2)F1` and `1` for the empty word.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(format!("not a ladder word: {s:?}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact == "1" || compact.is_empty() {
            return Ok(Self::default());
        }
        let mut out = Vec::new();
        for chunk in compact.split('F').skip(1) {
            let (idx, pow) = match chunk.split_once('^') {
                Some((a, b)) => (a, b.trim_start_matches('(').trim_end_matches(')')),
                None => (chunk, "1"),
            };
            let i = idx.parse::<usize>().map_err(|_| bad())?;
            let j = pow.parse::<u8>().map_err(|_| bad())?;
            if i == 0 || !(1..=3).contains(&j) {
                return Err(bad());
            }
            out.push(Factor { i, j });
        }
        if !compact.starts_with('F') {
            return Err(bad());
        }
        Ok(Self(out))
    }
}

/// Moves `j` units from upright `i` to upright `i + 1`. `Ok(None)` is the
/// zero morphism: some weight left `0..=3`.
pub fn apply_f(weights: &[u8], i: usize, j: u8) -> Result<Option<Vec<u8>>, Error> {
    if i == 0 || i >= weights.len() {
        return Err(Error::Domain(format!("F_{i} needs 1 <= i < {}", weights.len())));
    }
    let (a, b) = (weights[i - 1], weights[i]);
    if a < j || b + j > 3 {
        return Ok(None);
    }
    let mut out = weights.to_vec();
    out[i - 1] = a - j;
    out[i] = b + j;
    Ok(Some(out))
}

pub fn highest_weight(n: usize, ell: usize) -> Vec<u8> {
    (0..n).map(|k| if k < ell { 3 } else { 0 }).collect()
}

/// A ladder word with all intermediate weights cached, bottom layer first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LadderWeb {
    pub word: LtWord,
    pub n: usize,
    pub ell: usize,
    pub layers: Vec<Vec<u8>>,
}

impl LadderWeb {
    /// `Ok(None)` if the word kills the highest weight vector.
    pub fn build(word: &LtWord, n: usize, ell: usize) -> Result<Option<LadderWeb>, Error> {
        if ell > n {
            return Err(Error::Domain(format!("level {ell} exceeds {n} strands")));
        }
        let mut layers = vec![highest_weight(n, ell)];
        for f in word.application() {
            match apply_f(layers.last().expect("nonempty"), f.i, f.j)? {
                Some(next) => layers.push(next),
                None => return Ok(None),
            }
        }
        Ok(Some(LadderWeb { word: word.clone(), n, ell, layers }))
    }

    pub fn top(&self) -> &[u8] {
        self.layers.last().expect("layers start with the highest weight")
    }

    pub fn boundary(&self) -> SignString {
        SignString(self.top().iter().map(|&w| Sign::from_weight(w).expect("weights stay in 0..=3")).collect())
    }

    /// Rungs in the order they act, with the layer below each.
    pub fn rungs(&self) -> impl Iterator<Item = (Factor, &[u8])> + '_ {
        self.word.application().zip(self.layers.iter().map(Vec::as_slice))
    }

    /// ASCII dump of the layers, top first.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let steps: Vec<Factor> = self.word.application().collect();
        for (h, layer) in self.layers.iter().enumerate().rev() {
            let row: Vec<String> = layer.iter().map(u8::to_string).collect();
            out.push_str(&row.join(" "));
            if h > 0 {
                let f = steps[h - 1];
                out.push_str(&format!("    <- F{}^{}", f.i, f.j));
            }
            out.push('\n');
        }
        out
    }

    /// True unless the web has an internal face with fewer than six sides.
    pub fn is_non_elliptic(&self) -> bool {
        face_sides(&self.layers, &self.word.application().collect::<Vec<_>>()).iter().all(|&s| s >= 6)
    }
}

/// Number of trivalent corners on each internal face of a ladder diagram.
///
/// The plane is cut into cells `(gap, height)`: gap `g` lies between uprights
/// `g` and `g + 1` (gaps `0` and `n` are outside), height `h` between rungs
/// `h` and `h + 1`. Cells merge vertically unless a visible rung separates
/// them, and horizontally across erased uprights (labels 0 and 3). Every
/// trivalent vertex then contributes one corner to each of its three sectors.
fn face_sides(layers: &[Vec<u8>], steps: &[Factor]) -> Vec<usize> {
    let n = layers[0].len();
    let k = steps.len();
    let width = n + 1;
    let cell = |g: usize, h: usize| h * width + g;
    let outside = width * (k + 1);
    let mut uf = UnionFind::new(outside + 1);

    for h in 0..=k {
        uf.union(cell(0, h), outside);
        uf.union(cell(n, h), outside);
        for p in 1..=n {
            if matches!(layers[h][p - 1], 0 | 3) {
                uf.union(cell(p - 1, h), cell(p, h));
            }
        }
    }
    for g in 0..=n {
        uf.union(cell(g, 0), outside);
        uf.union(cell(g, k), outside);
    }
    for (h, f) in steps.iter().enumerate() {
        for g in 0..=n {
            if g != f.i || f.j == 3 {
                uf.union(cell(g, h), cell(g, h + 1));
            }
        }
    }

    let mut corners = vec![0usize; outside + 1];
    for (h, f) in steps.iter().enumerate() {
        if f.j == 3 {
            continue;
        }
        for (p, outer) in [(f.i, f.i - 1), (f.i + 1, f.i + 1)] {
            let below = layers[h][p - 1];
            let above = layers[h + 1][p - 1];
            if matches!(below, 0 | 3) || matches!(above, 0 | 3) {
                continue;
            }
            for c in [cell(f.i, h), cell(f.i, h + 1), cell(outer, h)] {
                corners[uf.find(c)] += 1;
            }
        }
    }

    let out_root = uf.find(outside);
    let mut roots: Vec<usize> = (0..outside).map(|c| uf.find(c)).filter(|&r| r != out_root).collect();
    roots.sort_unstable();
    roots.dedup();
    roots.into_iter().map(|r| corners[r]).collect()
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        self.parent[ra] = rb;
    }
}

/// Cells holding `v` that can drop to `v - 1`: the entry sits above its row
/// number and the cell above does not already hold `v - 1`. If lowering them
/// all would break a row, cells whose left neighbour stays `v` are dropped.
fn lowerable(t: &ColTableau, v: u32) -> Vec<(usize, usize)> {
    let rows = &t.rows;
    let mut cells: Vec<(usize, usize)> = Vec::new();
    for (r, row) in rows.iter().enumerate() {
        for c in 0..3 {
            if row[c] == v && v > r as u32 + 1 && !(r > 0 && rows[r - 1][c] == v - 1) {
                cells.push((r, c));
            }
        }
    }
    if !lower(t, v, &cells).is_semistandard() {
        let keep: Vec<(usize, usize)> = cells
            .iter()
            .copied()
            .filter(|&(r, c)| !(c > 0 && rows[r][c - 1] == v && !cells.contains(&(r, c - 1))))
            .collect();
        cells = keep;
    }
    cells
}

fn lower(t: &ColTableau, v: u32, cells: &[(usize, usize)]) -> ColTableau {
    let mut out = t.clone();
    for &(r, c) in cells {
        out.rows[r][c] = v - 1;
    }
    out
}

fn check_semistandard(t: &ColTableau) -> Result<(), Error> {
    if t.rows.is_empty() || !t.is_semistandard() {
        return Err(Error::Domain(format!("{t} is not a semistandard three-column tableau")));
    }
    Ok(())
}

/// Strand count read off a semistandard tableau: its largest entry.
pub fn strands_of(t: &ColTableau) -> usize {
    t.max_entry() as usize
}

/// The LT-generators of a semistandard tableau.
///
/// Each step lowers the smallest value that still has lowerable cells. The
/// resulting rung is kept only if the web built so far stays non-elliptic;
/// otherwise the next value is tried. On the tableaux where the plain rule
/// would close a digon or square this reproduces the extraordinary choices.
pub fn lt_generators(t: &ColTableau) -> Result<LtWord, Error> {
    check_semistandard(t)?;
    let n = strands_of(t).max(t.ell());
    let mut memo = HashMap::new();
    validated(t, n, &mut memo)
        .map(LtWord)
        .ok_or_else(|| Error::Invariant(format!("no non-elliptic LT word for {t}")))
}

fn validated(t: &ColTableau, n: usize, memo: &mut HashMap<ColTableau, Option<Vec<Factor>>>) -> Option<Vec<Factor>> {
    if let Some(hit) = memo.get(t) {
        return hit.clone();
    }
    let ell = t.ell();
    let mut result = None;
    if *t == ColTableau::ground(ell) {
        result = Some(Vec::new());
    } else {
        for v in candidate_values(t) {
            let cells = lowerable(t, v);
            let lowered = lower(t, v, &cells);
            let Some(rest) = validated(&lowered, n, memo) else { continue };
            let mut word = vec![Factor { i: v as usize - 1, j: cells.len() as u8 }];
            word.extend(rest);
            let web = LadderWeb::build(&LtWord(word.clone()), n, ell).ok().flatten();
            if web.is_some_and(|w| w.is_non_elliptic()) {
                result = Some(word);
                break;
            }
        }
    }
    memo.insert(t.clone(), result.clone());
    result
}

fn candidate_values(t: &ColTableau) -> Vec<u32> {
    let mut vals: Vec<u32> = t
        .rows
        .iter()
        .enumerate()
        .flat_map(|(r, row)| row.iter().copied().filter(move |&v| v > r as u32 + 1))
        .collect();
    vals.sort_unstable();
    vals.dedup();
    vals.retain(|&v| !lowerable(t, v).is_empty());
    vals
}

/// The LT-generators by the two extraordinary patterns taken literally, with
/// no ellipticity check. Kept for comparison: on some tableaux it produces
/// webs with internal squares.
pub fn literal_lt_generators(t: &ColTableau) -> Result<LtWord, Error> {
    check_semistandard(t)?;
    let mut cur = t.clone();
    let mut word = Vec::new();
    while cur != ColTableau::ground(cur.ell()) {
        let cands = candidate_values(&cur);
        let v = *cands.first().ok_or_else(|| Error::Invariant(format!("{cur} is stuck")))?;
        let chosen = if extraordinary(&cur, v) {
            cands
                .iter()
                .copied()
                .filter(|&w| w > v)
                .find(|&w| lowerable(&cur, w).iter().any(|&(_, c)| c == 2))
                .unwrap_or(v)
        } else {
            v
        };
        let cells = lowerable(&cur, chosen);
        cur = lower(&cur, chosen, &cells);
        word.push(Factor { i: chosen as usize - 1, j: cells.len() as u8 });
    }
    Ok(LtWord(word))
}

/// Row `v - 1` reads `v-1 v .` over a row starting with `v`, and either a
/// `v + 1` sits in the first column or the upper row is `v-1 v v+1`.
fn extraordinary(t: &ColTableau, v: u32) -> bool {
    let rows = &t.rows;
    let Some(r) = (v as usize).checked_sub(2) else { return false };
    if r + 1 >= rows.len() {
        return false;
    }
    let base = rows[r][0] == v - 1 && rows[r][1] == v && rows[r + 1][0] == v;
    let first_col = rows.iter().any(|row| row[0] == v + 1);
    let top_row = rows[r][2] == v + 1;
    base && (first_col || top_row)
}

/// `c(S) = Σ_k c(s_k) - 3ℓ(ℓ+1)/2` with `c(+) = k`, `c(-) = 2k` at position `k`.
pub fn c_of_s(s: &SignString) -> Result<usize, Error> {
    if !s.is_classical() {
        return Err(Error::Domain(format!("{s} is not a classical sign string")));
    }
    let ell = s.level()?;
    let total: usize = s.0.iter().enumerate().map(|(k, sg)| (k + 1) * sg.weight() as usize).sum();
    Ok(total - 3 * ell * (ell + 1) / 2)
}

/// One basis web per semistandard tableau whose value multiplicities are the
/// weights of `s`.
pub fn enumerate_basis(s: &SignString) -> Result<Vec<(ColTableau, LadderWeb)>, Error> {
    if !s.is_classical() {
        return Err(Error::Domain(format!("{s} is not a classical sign string")));
    }
    let ell = s.level()?;
    let content: Vec<usize> = s.weights().iter().map(|&w| w as usize).collect();
    ColTableau::semistandard_with_content(&content)
        .into_iter()
        .map(|t| {
            let word = lt_generators(&t)?;
            let web = LadderWeb::build(&word, s.len(), ell)?
                .ok_or_else(|| Error::Invariant(format!("LT word of {t} is zero")))?;
            Ok((t, web))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> LtWord {
        s.parse().unwrap()
    }

    fn ct(s: &str) -> ColTableau {
        s.parse().unwrap()
    }

    #[test]
    fn apply_f_moves_weight() {
        assert_eq!(apply_f(&[3, 3, 0, 0], 2, 2).unwrap(), Some(vec![3, 1, 2, 0]));
        assert_eq!(apply_f(&[3, 0], 1, 3).unwrap(), Some(vec![0, 3]));
        assert_eq!(apply_f(&[1, 3], 1, 1).unwrap(), None);
        assert!(apply_f(&[1, 3], 2, 1).is_err());
        assert!(apply_f(&[1, 3], 0, 1).is_err());
    }

    #[test]
    fn word_text() {
        let x = w("F1F2^(2)");
        assert_eq!(x.to_string(), "F1 F2^2");
        assert_eq!(w(&x.to_string()), x);
        assert_eq!(x.application().map(|f| f.i).collect::<Vec<_>>(), vec![2, 1]);
        assert!("G1".parse::<LtWord>().is_err());
        assert!("F0".parse::<LtWord>().is_err());
        assert!("F1^4".parse::<LtWord>().is_err());
        assert_eq!(w("1"), LtWord::default());
    }

    #[test]
    fn build_half_theta() {
        let web = LadderWeb::build(&w("F1 F2^2"), 3, 2).unwrap().unwrap();
        assert_eq!(web.layers, vec![vec![3, 3, 0], vec![3, 1, 2], vec![2, 2, 2]]);
        assert_eq!(web.boundary().to_string(), "---");
        let id = LadderWeb::build(&LtWord::default(), 4, 2).unwrap().unwrap();
        assert_eq!(id.boundary().to_string(), "xxoo");
        assert!(LadderWeb::build(&w("F1^2 F1^2"), 2, 1).unwrap().is_none());
        assert!(LadderWeb::build(&w("F1^2 F1"), 2, 1).unwrap().is_some());
    }

    #[test]
    fn lengths() {
        assert_eq!((w("F1 F2^2").total_length(), w("F1 F2^2").length()), (3, 2));
        let hex = w("F1F2F3^(2)F2F1F4F3F2F5^(2)F4^(2)F3^(2)");
        assert_eq!((hex.total_length(), hex.length()), (15, 11));
        assert_eq!(LtWord::default().total_length(), 0);
    }

    #[test]
    fn lt_words_of_small_tableaux() {
        assert_eq!(lt_generators(&ct("1 1 2")).unwrap(), w("F1"));
        assert_eq!(lt_generators(&ct("1 2 2")).unwrap(), w("F1^2"));
        assert_eq!(lt_generators(&ct("1 1 2/2 3 3")).unwrap(), w("F1 F2^2"));
        assert_eq!(lt_generators(&ct("1 2 3")).unwrap(), w("F1 F2 F1"));
        assert!(lt_generators(&ct("1 2 1")).is_err());
    }

    #[test]
    fn faces() {
        let digon = LadderWeb::build(&w("F1 F1"), 2, 1).unwrap().unwrap();
        assert!(!digon.is_non_elliptic());
        let tripod = LadderWeb::build(&w("F1 F2 F1"), 3, 1).unwrap().unwrap();
        assert!(tripod.is_non_elliptic());
        let lit = literal_lt_generators(&ct("1 3 4/2 5 5")).unwrap();
        let web = LadderWeb::build(&lit, 5, 2).unwrap().unwrap();
        assert!(!web.is_non_elliptic());
    }

    #[test]
    fn node_counts() {
        assert_eq!(c_of_s(&"+-+-".parse().unwrap()).unwrap(), 7);
        assert_eq!(c_of_s(&"+-".parse().unwrap()).unwrap(), 2);
        assert_eq!(c_of_s(&"---".parse().unwrap()).unwrap(), 3);
        assert!(c_of_s(&"++".parse().unwrap()).is_err());
        assert!(c_of_s(&"x".parse().unwrap()).is_err());
    }

    #[test]
    fn basis_sizes() {
        assert_eq!(enumerate_basis(&"---".parse().unwrap()).unwrap().len(), 1);
        assert_eq!(enumerate_basis(&"+-".parse().unwrap()).unwrap().len(), 1);
        assert_eq!(enumerate_basis(&"+-+-".parse().unwrap()).unwrap().len(), 2);
        assert!(enumerate_basis(&"+-+".parse().unwrap()).is_err());
    }
}
