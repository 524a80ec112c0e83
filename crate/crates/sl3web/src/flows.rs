//! Flows on ladder webs.
//!
//! A flow labels every upright segment of weight `a` with an `a`-element
//! subset of `{1, 2, 3}`. At the bottom the first `ℓ` uprights carry the full
//! set. A rung `F_i^(j)` moves a `j`-subset `X` from upright `i` to upright
//! `i + 1`; it must be disjoint from what upright `i + 1` already carries.
//! Tracing one colour through the diagram gives the usual flow lines.
//!
//! Each rung carries a `q`-exponent read off from the quantum exterior
//! algebra: moving `x` past a colour `c > x` that stays behind costs the
//! difference between the two uprights' occupation of `c`. The weight of a
//! flow is the sum of the exponents of its rungs.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::ladderweb::LadderWeb;
use crate::tableaux::ColTableau;
use crate::{Error, Laurent};

/// A subset of `{1, 2, 3}` as a bitmask, colour `c` at bit `c - 1`.
pub type Colours = u8;

pub const ALL: Colours = 0b111;

pub fn colours(mask: Colours) -> impl Iterator<Item = u8> {
    (1..=3u8).filter(move |c| mask >> (c - 1) & 1 == 1)
}

fn has(mask: Colours, c: u8) -> i64 {
    i64::from(mask >> (c - 1) & 1)
}

/// Exponent of moving `x` rightwards from upright `a` to upright `b`.
pub fn f_exponent(a: Colours, b: Colours, x: Colours) -> i64 {
    -colours(x)
        .map(|y| (y + 1..=3).filter(|&c| has(x, c) == 0).map(|c| has(a, c) - has(b, c)).sum::<i64>())
        .sum::<i64>()
}

/// Exponent of moving `x` leftwards from upright `b` to upright `a`.
pub fn e_exponent(a: Colours, b: Colours, x: Colours) -> i64 {
    -colours(x)
        .map(|y| (1..y).filter(|&c| has(x, c) == 0).map(|c| has(b, c) - has(a, c)).sum::<i64>())
        .sum::<i64>()
}

/// All `j`-subsets of `from` that avoid `to`, in increasing order.
fn movable(from: Colours, to: Colours, j: u8) -> impl Iterator<Item = Colours> {
    (1..8u8).filter(move |x| x.count_ones() == u32::from(j) && x & from == *x && x & to == 0)
}

/// One flow: the colour sets on every layer and the set moved by each rung.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Flow {
    pub states: Vec<Vec<Colours>>,
    pub moves: Vec<Colours>,
    pub weight: i64,
}

impl Flow {
    pub fn top(&self) -> &[Colours] {
        self.states.last().expect("a flow has at least the bottom layer")
    }

    pub fn to_json(&self) -> serde_json::Value {
        let sets = |layer: &[Colours]| -> Vec<Vec<u8>> { layer.iter().map(|&m| colours(m).collect()).collect() };
        serde_json::json!({
            "layers": self.states.iter().map(|l| sets(l)).collect::<Vec<_>>(),
            "moves": self.moves.iter().map(|&m| colours(m).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "weight": self.weight,
        })
    }
}

pub fn bottom_state(n: usize, ell: usize) -> Vec<Colours> {
    (0..n).map(|k| if k < ell { ALL } else { 0 }).collect()
}

/// Every flow on `web`, in lexicographic order of the moved sets.
pub fn enumerate_flows(web: &LadderWeb) -> Vec<Flow> {
    let steps: Vec<_> = web.word.application().collect();
    let mut out = Vec::new();
    let mut states = vec![bottom_state(web.n, web.ell)];
    let mut moves = Vec::new();
    fn rec(
        steps: &[crate::ladderweb::Factor],
        states: &mut Vec<Vec<Colours>>,
        moves: &mut Vec<Colours>,
        weight: i64,
        out: &mut Vec<Flow>,
    ) {
        let k = moves.len();
        let Some(f) = steps.get(k) else {
            out.push(Flow { states: states.clone(), moves: moves.clone(), weight });
            return;
        };
        let cur = states[k].clone();
        let (a, b) = (cur[f.i - 1], cur[f.i]);
        for x in movable(a, b, f.j) {
            let mut next = cur.clone();
            next[f.i - 1] = a & !x;
            next[f.i] = b | x;
            debug_assert_eq!(next[f.i - 1] | next[f.i], a | b, "colours are conserved at a rung");
            states.push(next);
            moves.push(x);
            rec(steps, states, moves, weight + f_exponent(a, b, x), out);
            moves.pop();
            states.pop();
        }
    }
    rec(&steps, &mut states, &mut moves, 0, &mut out);
    out
}

/// Boundary states in `{-1, 0, 1}` aligned with the sign string. Strands of
/// weight 0 or 3 carry no choice and read 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateString(pub Vec<i8>);

impl fmt::Display for StateString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i8::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// State of one boundary strand. Up strands read `{1}, {2}, {3}` as
/// `1, 0, -1`; down strands read the missing colour `3, 2, 1` as `1, 0, -1`.
pub fn strand_state(mask: Colours) -> i8 {
    match mask.count_ones() {
        1 => 2 - mask.trailing_zeros() as i8 - 1,
        2 => {
            let missing = (ALL & !mask).trailing_zeros() as i8 + 1;
            missing - 2
        }
        _ => 0,
    }
}

pub fn state_string(top: &[Colours]) -> StateString {
    StateString(top.iter().map(|&m| strand_state(m)).collect())
}

pub fn boundary_state(flow: &Flow) -> StateString {
    state_string(flow.top())
}

/// Column `c` lists the uprights whose top colour set contains `c`.
pub fn flow_to_colstrict(web: &LadderWeb, flow: &Flow) -> ColTableau {
    let cols: Vec<Vec<u32>> = (1..=3u8)
        .map(|c| (1..=web.n as u32).filter(|&k| has(flow.top()[k as usize - 1], c) == 1).collect())
        .collect();
    let rows = (0..web.ell).map(|r| [cols[0][r], cols[1][r], cols[2][r]]).collect();
    ColTableau::new(rows)
}

/// The unique flow whose column-strict tableau is `t`.
pub fn canonical_flow(web: &LadderWeb, t: &ColTableau) -> Result<Flow, Error> {
    let mut hits = enumerate_flows(web).into_iter().filter(|f| flow_to_colstrict(web, f) == *t);
    match (hits.next(), hits.next()) {
        (Some(f), None) => Ok(f),
        (None, _) => Err(Error::Invariant(format!("no flow on {} reads {t}", web.word))),
        (Some(_), Some(_)) => Err(Error::Invariant(format!("several flows on {} read {t}", web.word))),
    }
}

/// A closed web: either one ladder word whose top layer has only weights 0
/// and 3, or `lower` glued under the reflection of `upper`.
#[derive(Clone, Debug)]
pub enum ClosedWeb {
    Ladder(LadderWeb),
    Pair { lower: LadderWeb, upper: LadderWeb },
}

impl ClosedWeb {
    pub fn pair(lower: LadderWeb, upper: LadderWeb) -> Result<Self, Error> {
        if lower.top() != upper.top() || lower.ell != upper.ell {
            return Err(Error::Domain(format!(
                "{} and {} have different boundaries",
                lower.boundary(),
                upper.boundary()
            )));
        }
        Ok(ClosedWeb::Pair { lower, upper })
    }

    pub fn ladder(web: LadderWeb) -> Result<Self, Error> {
        if web.top().iter().any(|&w| w == 1 || w == 2) {
            return Err(Error::Domain(format!("{} has boundary {}", web.word, web.boundary())));
        }
        Ok(ClosedWeb::Ladder(web))
    }

    /// Weights of all flows on the closed web.
    pub fn flow_weights(&self) -> Vec<i64> {
        match self {
            ClosedWeb::Ladder(w) => enumerate_flows(w).iter().map(|f| f.weight).collect(),
            ClosedWeb::Pair { lower, upper } => {
                let steps: Vec<_> = upper.word.application().collect();
                let mut out = Vec::new();
                for f in enumerate_flows(lower) {
                    descend(&steps, f.top().to_vec(), f.weight, &mut out);
                }
                out
            }
        }
    }

    /// Kuperberg bracket as the state sum `Σ q^(-wt)` over flows.
    pub fn bracket(&self) -> Laurent {
        Laurent::from_exponents(self.flow_weights().into_iter().map(|w| -w))
    }
}

/// Runs the reflected word downwards: each rung moves colours leftwards.
fn descend(steps: &[crate::ladderweb::Factor], state: Vec<Colours>, weight: i64, out: &mut Vec<i64>) {
    let Some((f, rest)) = steps.split_last() else {
        out.push(weight);
        return;
    };
    let (a, b) = (state[f.i - 1], state[f.i]);
    for x in movable(b, a, f.j) {
        let mut next = state.clone();
        next[f.i - 1] = a | x;
        next[f.i] = b & !x;
        descend(rest, next, weight + e_exponent(a, b, x), out);
    }
}

/// Coefficients of the web in the tensor basis, `Σ_f v^wt(f)` with
/// `v = -q^-1`, keyed by boundary state.
pub fn tensor_expansion(web: &LadderWeb) -> BTreeMap<StateString, Laurent> {
    let mut out: BTreeMap<StateString, Laurent> = BTreeMap::new();
    for f in enumerate_flows(web) {
        let sign = if f.weight.rem_euclid(2) == 0 { 1 } else { -1 };
        out.entry(boundary_state(&f)).or_default().add_term(-f.weight, BigInt::from(sign));
    }
    out.retain(|_, p| !p.is_zero());
    out
}

/// Boundary sign string and states of every flow, grouped.
pub fn flows_by_state(web: &LadderWeb) -> BTreeMap<StateString, Vec<Flow>> {
    let mut out: BTreeMap<StateString, Vec<Flow>> = BTreeMap::new();
    for f in enumerate_flows(web) {
        out.entry(boundary_state(&f)).or_default().push(f);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ladderweb::LtWord;

    fn web(word: &str, n: usize, ell: usize) -> LadderWeb {
        LadderWeb::build(&word.parse::<LtWord>().unwrap(), n, ell).unwrap().unwrap()
    }

    #[test]
    fn state_dictionary() {
        assert_eq!([0b001, 0b010, 0b100].map(strand_state), [1, 0, -1]);
        assert_eq!([0b011, 0b101, 0b110].map(strand_state), [1, 0, -1]);
        assert_eq!(strand_state(0), 0);
        assert_eq!(strand_state(ALL), 0);
    }

    #[test]
    fn circle_as_one_ladder() {
        let c = ClosedWeb::ladder(web("F1^2 F1", 2, 1)).unwrap();
        let mut ws = c.flow_weights();
        ws.sort();
        assert_eq!(ws, vec![-2, 0, 2]);
        assert_eq!(c.bracket(), Laurent::qint(3).unwrap());
    }

    #[test]
    fn half_theta_flow() {
        let w = web("F1 F2^2", 3, 2);
        let t: ColTableau = "1 1 2/3 2 3".parse().unwrap();
        let f = canonical_flow(&w, &t).unwrap();
        assert_eq!(f.weight, -1);
        assert_eq!(boundary_state(&f), StateString(vec![1, -1, 0]));
        let c = canonical_flow(&w, &"1 1 2/2 3 3".parse().unwrap()).unwrap();
        assert_eq!(c.weight, 0);
    }

    #[test]
    fn arc_flows_read_every_filling() {
        let w = web("F1", 2, 1);
        let flows = enumerate_flows(&w);
        let mut got: Vec<String> = flows.iter().map(|f| flow_to_colstrict(&w, f).to_string()).collect();
        got.sort();
        assert_eq!(got, vec!["1 1 2", "1 2 1", "2 1 1"]);
    }

    #[test]
    fn empty_web() {
        let w = web("1", 2, 0);
        let flows = enumerate_flows(&w);
        assert_eq!(flows.len(), 1);
        assert_eq!(flows[0].weight, 0);
    }

    #[test]
    fn open_web_is_not_closed() {
        assert!(ClosedWeb::ladder(web("F1", 2, 1)).is_err());
        assert!(ClosedWeb::pair(web("F1", 2, 1), web("F1^2", 2, 1)).is_err());
    }
}
