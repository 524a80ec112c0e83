//! From webs with flows to standard multitableaux and back.
//!
//! `iota` reads the ladder word of a basis web one rung at a time. Each rung
//! is classified as an arc, Y, H, shift or empty shift, with a type and a
//! colour read from the flow. A fixed table turns that into the components
//! that receive the next entry. `grow` goes the other way through a tower of
//! sl3 weight diagrams.

use std::fmt;

use crate::flows::{colours, strand_state, Colours, Flow, ALL};
use crate::ladderweb::{Factor, LadderWeb, LtWord};
use crate::tableaux::{Multipartition3, Multitableau, Node};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Arc,
    Y,
    H,
    ShiftRight,
    ShiftLeft,
    EmptyShift,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveType {
    A,
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MoveKind {
    pub family: Family,
    pub ty: MoveType,
    /// One of `1, 0, -1`.
    pub colour: i8,
    /// Only Y- and H-moves carry primed colours.
    pub primed: bool,
}

impl MoveKind {
    fn new(family: Family, ty: MoveType, colour: i8, primed: bool) -> Self {
        Self { family, ty, colour, primed }
    }

    /// Divided power this kind of move belongs to.
    pub fn power(&self) -> u8 {
        use Family::*;
        use MoveType::*;
        match (self.family, self.ty) {
            (Arc, A) | (ShiftRight, B) | (ShiftLeft, A) => 2,
            (EmptyShift, _) => 3,
            _ => 1,
        }
    }
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.family {
            Family::Arc => "Arc",
            Family::Y => "Y",
            Family::H => "H",
            Family::ShiftRight => "right",
            Family::ShiftLeft => "left",
            Family::EmptyShift => return f.write_str("empty"),
        };
        let ty = if self.ty == MoveType::A { 'a' } else { 'b' };
        let prime = if self.primed { "'" } else { "" };
        write!(f, "{name}({ty},{}{prime})", self.colour)
    }
}

/// Components (as a colour mask, component `c` at bit `c - 1`) that receive
/// the new entry for each kind of move.
pub fn placement(kind: MoveKind) -> Colours {
    use Family::*;
    use MoveType::*;
    const C1: Colours = 0b001;
    const C2: Colours = 0b010;
    const C3: Colours = 0b100;
    match (kind.family, kind.ty, kind.colour, kind.primed) {
        (Arc, A, 1, _) => C2 | C3,
        (Arc, A, 0, _) => C1 | C3,
        (Arc, A, _, _) => C1 | C2,
        (Arc, B, 1, _) => C3,
        (Arc, B, 0, _) => C2,
        (Arc, B, _, _) => C1,

        (Y | H, A, 1, false) => C2,
        (Y | H, A, 1, true) => C1,
        (Y | H, A, 0, false) => C3,
        (Y | H, A, 0, true) => C1,
        (Y | H, A, _, false) => C3,
        (Y | H, A, _, true) => C2,

        (Y, B, 1, false) => C3,
        (Y, B, 1, true) => C2,
        (Y, B, 0, false) => C3,
        (Y, B, 0, true) => C1,
        (Y, B, _, false) => C2,
        (Y, B, _, true) => C1,

        (H, B, 1, false) => C2,
        (H, B, 1, true) => C3,
        (H, B, 0, false) => C1,
        (H, B, 0, true) => C3,
        (H, B, _, false) => C1,
        (H, B, _, true) => C2,

        (ShiftRight, A, 1, _) => C1,
        (ShiftRight, A, 0, _) => C2,
        (ShiftRight, A, _, _) => C3,
        (ShiftRight, B, 1, _) => C1 | C2,
        (ShiftRight, B, 0, _) => C1 | C3,
        (ShiftRight, B, _, _) => C2 | C3,

        (ShiftLeft, A, 1, _) => C2 | C3,
        (ShiftLeft, A, 0, _) => C1 | C3,
        (ShiftLeft, A, _, _) => C1 | C2,
        (ShiftLeft, B, 1, _) => C3,
        (ShiftLeft, B, 0, _) => C2,
        (ShiftLeft, B, _, _) => C1,

        (EmptyShift, _, _, _) => ALL,
    }
}

/// Whether `x` is the smaller colour of the pair left after removing `y`.
fn smaller_of_rest(x: Colours, y: Colours) -> bool {
    let rest = ALL & !y;
    x == rest & rest.wrapping_neg()
}

/// Classifies one rung from the weights and colour sets just below it and
/// the set it moves.
pub fn classify(below: (Colours, Colours), x: Colours) -> Result<MoveKind, Error> {
    use Family::*;
    use MoveType::*;
    let (a, b) = below;
    let wa = a.count_ones();
    let wb = b.count_ones();
    let j = x.count_ones();
    let after_left = a & !x;
    let kind = match (j, wa, wb) {
        (1, 3, 0) => MoveKind::new(Arc, B, strand_state(after_left), false),
        (2, 3, 0) => MoveKind::new(Arc, A, strand_state(after_left), false),
        (3, 3, 0) => MoveKind::new(EmptyShift, A, 0, false),
        (1, 1, 0) => MoveKind::new(ShiftRight, A, strand_state(x), false),
        (2, 2, 0) => MoveKind::new(ShiftRight, B, strand_state(x), false),
        (2, 3, 1) => MoveKind::new(ShiftLeft, A, strand_state(b), false),
        (1, 3, 2) => MoveKind::new(ShiftLeft, B, strand_state(b), false),
        // Vertex on the right end, a single edge below it.
        (1, 1, 1) | (1, 3, 1) => MoveKind::new(Y, B, strand_state(b), smaller_of_rest(x, b)),
        // Vertex on the left end, a double edge below it.
        (1, 2, 0) | (1, 2, 2) => {
            let y = ALL & !a;
            MoveKind::new(Y, A, strand_state(a), smaller_of_rest(x, y))
        }
        (1, 2, 1) => {
            let y = ALL & !a;
            MoveKind::new(H, A, strand_state(a), smaller_of_rest(x, y))
        }
        _ => {
            return Err(Error::Invariant(format!(
                "rung moving {:?} over weights ({wa},{wb}) matches no listed move",
                colours(x).collect::<Vec<_>>()
            )))
        }
    };
    Ok(kind)
}

/// Move kinds of every rung of `web` under `flow`, in the order they act.
pub fn classify_steps(web: &LadderWeb, flow: &Flow) -> Result<Vec<MoveKind>, Error> {
    web.word
        .application()
        .enumerate()
        .map(|(k, f)| classify((flow.states[k][f.i - 1], flow.states[k][f.i]), flow.moves[k]))
        .collect()
}

pub fn classify_step(web: &LadderWeb, flow: &Flow, k: usize) -> Result<MoveKind, Error> {
    let f = web
        .word
        .application()
        .nth(k)
        .ok_or_else(|| Error::Domain(format!("step {k} past the end of {}", web.word)))?;
    classify((flow.states[k][f.i - 1], flow.states[k][f.i]), flow.moves[k])
}

/// The standard filling of a web with flow.
pub fn iota(web: &LadderWeb, flow: &Flow) -> Result<Multitableau, Error> {
    let kinds = classify_steps(web, flow)?;
    let m = web.ell as i64;
    let mut t = Multitableau::empty(m);
    for (k, (f, kind)) in web.word.application().zip(kinds).enumerate() {
        let comps = placement(kind);
        if comps != flow.moves[k] {
            return Err(Error::Invariant(format!("step {} classified {kind} disagrees with its flow", k + 1)));
        }
        let shape = t.shape();
        let mut nodes = Vec::new();
        for c in colours(comps) {
            let comp = c as usize - 1;
            let node = shape
                .addable_nodes(f.i as i64)
                .into_iter()
                .find(|n| n.comp == comp)
                .ok_or_else(|| Error::Invariant(format!("no free node of residue {} in component {c}", f.i)))?;
            nodes.push(node);
        }
        t = with_nodes(&t, &nodes, k as u32 + 1)?;
    }
    Ok(t)
}

fn with_nodes(t: &Multitableau, nodes: &[Node], v: u32) -> Result<Multitableau, Error> {
    let mut rows = t.rows().clone();
    for n in nodes {
        let comp = &mut rows[n.comp];
        if n.row > comp.len() {
            comp.push(vec![v]);
        } else {
            comp[n.row - 1].push(v);
        }
    }
    Multitableau::new(rows, t.m())
}

/// A weight diagram: a colour set on every integer position, all colours at
/// and left of `first - 1`, none right of the stored window.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightDiagram {
    pub first: i64,
    pub entries: Vec<Colours>,
}

impl WeightDiagram {
    pub fn at(&self, p: i64) -> Colours {
        if p < self.first {
            return ALL;
        }
        self.entries.get((p - self.first) as usize).copied().unwrap_or(0)
    }

    /// Largest position that is not empty.
    pub fn last_occupied(&self) -> i64 {
        let mut p = self.first + self.entries.len() as i64 - 1;
        while p >= self.first && self.at(p) == 0 {
            p -= 1;
        }
        p
    }

    fn symbol(set: Colours) -> &'static str {
        match set {
            0 => "o",
            0b111 => "x",
            0b001 => "1",
            0b010 => "0",
            0b100 => "-1",
            0b011 => "1*",
            0b101 => "0*",
            _ => "-1*",
        }
    }
}

impl fmt::Display for WeightDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<&str> = self.entries.iter().map(|&s| Self::symbol(s)).collect();
        write!(f, "(.. x | {} | o ..)", parts.join(" "))
    }
}

/// Diagram of a filling: component `c` puts its colour on every position
/// `len(row r) - (r - 1)`, for all rows including the empty ones below.
pub fn weight_diagram(t: &Multitableau, window: (i64, i64)) -> WeightDiagram {
    let (lo, hi) = window;
    let mut entries = vec![0 as Colours; (hi - lo + 1) as usize];
    for (c, comp) in t.rows().iter().enumerate() {
        let depth = (hi - lo + 2) as usize + comp.len();
        for r in 0..depth {
            let len = comp.get(r).map_or(0, Vec::len) as i64;
            let p = len - r as i64;
            if (lo..=hi).contains(&p) {
                entries[(p - lo) as usize] |= 1 << c;
            }
        }
    }
    WeightDiagram { first: lo, entries }
}

/// Diagrams of all truncations `0..=max`, sharing one window.
pub fn weight_diagram_tower(t: &Multitableau) -> Vec<WeightDiagram> {
    let longest = t.rows().iter().flat_map(|c| c.iter().map(Vec::len)).max().unwrap_or(0) as i64;
    let rows = t.rows().iter().map(Vec::len).max().unwrap_or(0) as i64;
    let window = (-rows - 1, longest.max(1));
    (0..=t.max_entry()).map(|j| weight_diagram(&t.truncate(j), window)).collect()
}

/// A web with flow grown from a filling, as the ladder word it spells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grown {
    pub word: LtWord,
    pub moves: Vec<Colours>,
    pub n: usize,
    pub ell: usize,
}

impl Grown {
    pub fn web(&self) -> Result<Option<LadderWeb>, Error> {
        LadderWeb::build(&self.word, self.n, self.ell)
    }
}

/// Reads each step of the tower as a rung: the colours that leave position
/// `p` for `p + 1` are moved by `F_(p+ℓ)`. With `n = None` the strand count is
/// the last occupied upright at the top.
pub fn grow(t: &Multitableau, n: Option<usize>) -> Result<Grown, Error> {
    let ell = usize::try_from(t.m()).map_err(|_| Error::Domain("negative shift".into()))?;
    let tower = weight_diagram_tower(t);
    let mut steps = Vec::new();
    let mut moves = Vec::new();
    for (k, pair) in tower.windows(2).enumerate() {
        let (lo, hi) = (&pair[0], &pair[1]);
        let left: Vec<i64> = (lo.first..lo.first + lo.entries.len() as i64)
            .filter(|&p| lo.at(p) & !hi.at(p) != 0)
            .collect();
        let [p] = left[..] else {
            return Err(Error::Invariant(format!("step {} moves colours off {} positions", k + 1, left.len())));
        };
        let x = lo.at(p) & !hi.at(p);
        if hi.at(p + 1) & x != x || lo.at(p + 1) & x != 0 {
            return Err(Error::Invariant(format!("step {} does not move one position right", k + 1)));
        }
        let i = p + ell as i64;
        if i < 1 {
            return Err(Error::Invariant(format!("step {} acts left of the first strand", k + 1)));
        }
        steps.push(Factor { i: i as usize, j: x.count_ones() as u8 });
        moves.push(x);
    }
    let top = tower.last().expect("tower starts with the empty filling");
    let needed = (top.last_occupied() + ell as i64).max(ell as i64) as usize;
    let needed = needed.max(steps.iter().map(|f| f.i + 1).max().unwrap_or(0));
    let n = n.unwrap_or(needed);
    if n < needed {
        return Err(Error::Domain(format!("filling needs {needed} strands, got {n}")));
    }
    Ok(Grown { word: LtWord::from_application(steps), moves, n, ell })
}

/// Whether growing `iota(web, flow)` gives back exactly `web` and `flow`.
pub fn roundtrip(web: &LadderWeb, flow: &Flow) -> Result<bool, Error> {
    let t = iota(web, flow)?;
    let g = grow(&t, Some(web.n))?;
    Ok(g.word == web.word && g.moves == flow.moves)
}

/// Shape of the filling a flow produces, read from its boundary.
pub fn shape_of(web: &LadderWeb, flow: &Flow) -> Result<Multipartition3, Error> {
    crate::tableaux::colstrict_to_multipartition(&crate::flows::flow_to_colstrict(web, flow))
}
