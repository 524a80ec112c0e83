//! Partitions, 3-multipartitions and their fillings.
//!
//! Components are indexed `0..3` internally and printed as `1..=3`. Rows and
//! columns are 1-based. The residue of a node is `col - row + m`, where the
//! shift `m` is fixed by the multipartition when it is built and never
//! recomputed as nodes come and go.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::Error;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self, Error> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Self(parts))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn rows(&self) -> usize {
        self.0.len()
    }

    /// Length of row `r` (1-based), zero past the last row.
    pub fn row_len(&self, r: usize) -> usize {
        self.0.get(r - 1).copied().unwrap_or(0)
    }
}

/// A node `(row, col)` of component `comp`. The derived order is the
/// before/after order: earlier component first, then higher row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Node {
    pub comp: usize,
    pub row: usize,
    pub col: usize,
}

impl Node {
    pub fn new(comp: usize, row: usize, col: usize) -> Self {
        Self { comp, row, col }
    }
}

pub fn residue(node: Node, m: i64) -> i64 {
    node.col as i64 - node.row as i64 + m
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Multipartition3 {
    pub components: [Partition; 3],
    pub m: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeKind {
    Addable,
    Removable,
}

impl Multipartition3 {
    pub fn new(components: [Partition; 3], m: i64) -> Self {
        Self { components, m }
    }

    /// Builds from raw part lists.
    pub fn from_parts(parts: [&[usize]; 3], m: i64) -> Result<Self, Error> {
        Ok(Self::new(
            [
                Partition::new(parts[0].to_vec())?,
                Partition::new(parts[1].to_vec())?,
                Partition::new(parts[2].to_vec())?,
            ],
            m,
        ))
    }

    /// Uses the largest row count among the components as the shift.
    pub fn with_default_shift(components: [Partition; 3]) -> Self {
        let m = components.iter().map(Partition::rows).max().unwrap_or(0) as i64;
        Self { components, m }
    }

    pub fn size(&self) -> usize {
        self.components.iter().map(Partition::size).sum()
    }

    pub fn nodes(&self) -> impl Iterator<Item = Node> + '_ {
        self.components.iter().enumerate().flat_map(|(c, p)| {
            p.parts()
                .iter()
                .enumerate()
                .flat_map(move |(r, &len)| (1..=len).map(move |col| Node::new(c, r + 1, col)))
        })
    }

    fn addable_all(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for (c, p) in self.components.iter().enumerate() {
            for r in 1..=p.rows() + 1 {
                let len = p.row_len(r);
                if r == 1 || p.row_len(r - 1) > len {
                    out.push(Node::new(c, r, len + 1));
                }
            }
        }
        out
    }

    fn removable_all(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for (c, p) in self.components.iter().enumerate() {
            for r in 1..=p.rows() {
                let len = p.row_len(r);
                if p.row_len(r + 1) < len {
                    out.push(Node::new(c, r, len));
                }
            }
        }
        out
    }

    /// Addable nodes of residue `k`, in before/after order.
    pub fn addable_nodes(&self, k: i64) -> Vec<Node> {
        self.addable_all().into_iter().filter(|n| residue(*n, self.m) == k).collect()
    }

    /// Removable nodes of residue `k`, in before/after order.
    pub fn removable_nodes(&self, k: i64) -> Vec<Node> {
        self.removable_all().into_iter().filter(|n| residue(*n, self.m) == k).collect()
    }

    /// Addable or removable nodes with the residue of `node` that come
    /// strictly after it.
    pub fn nodes_after(&self, node: Node, kind: NodeKind) -> Vec<Node> {
        let k = residue(node, self.m);
        let all = match kind {
            NodeKind::Addable => self.addable_nodes(k),
            NodeKind::Removable => self.removable_nodes(k),
        };
        all.into_iter().filter(|n| strictly_after(*n, node)).collect()
    }

    pub fn contains(&self, node: Node) -> bool {
        node.comp < 3 && node.row >= 1 && node.col >= 1 && self.components[node.comp].row_len(node.row) >= node.col
    }

    fn push_node(&mut self, node: Node) {
        let parts = &mut self.components[node.comp].0;
        if node.row > parts.len() {
            parts.push(1);
        } else {
            parts[node.row - 1] += 1;
        }
    }

    /// Tests `b ⊴ self`.
    pub fn dominates(&self, b: &Multipartition3) -> Result<bool, Error> {
        if self.size() != b.size() {
            return Err(Error::Domain(format!(
                "dominance needs equal sizes, got {} and {}",
                self.size(),
                b.size()
            )));
        }
        Ok(dominance_sums(b).iter().zip(dominance_sums(self)).all(|(x, y)| *x <= y))
    }

    /// Sign string and state string of this boundary datum, via its
    /// column-strict tableau.
    pub fn to_colstrict(&self) -> Result<ColTableau, Error> {
        multipartition_to_colstrict(self)
    }
}

fn strictly_after(n: Node, pivot: Node) -> bool {
    n.comp > pivot.comp || (n.comp == pivot.comp && n.row > pivot.row)
}

/// Running sums `Σ_{k<l} |λ^k| + Σ_{j≤s} λ^l_j` over all `(l, s)` up to a
/// common row bound.
fn dominance_sums(p: &Multipartition3) -> Vec<usize> {
    let rows = p.size().max(1);
    let mut out = Vec::with_capacity(3 * rows);
    let mut base = 0;
    for comp in &p.components {
        let mut acc = base;
        for s in 1..=rows {
            acc += comp.row_len(s);
            out.push(acc);
        }
        base += comp.size();
    }
    out
}

impl fmt::Display for Multipartition3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |p: &Partition| {
            if p.rows() == 0 {
                "-".to_string()
            } else {
                p.parts().iter().map(usize::to_string).collect::<Vec<_>>().join(",")
            }
        };
        write!(
            f,
            "({} | {} | {})",
            show(&self.components[0]),
            show(&self.components[1]),
            show(&self.components[2])
        )
    }
}

/// A filling of a 3-multipartition whose rows and columns strictly increase.
/// A value may repeat up to three times, but only across components.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multitableau {
    rows: [Vec<Vec<u32>>; 3],
    m: i64,
}

impl Multitableau {
    pub fn new(rows: [Vec<Vec<u32>>; 3], m: i64) -> Result<Self, Error> {
        let t = Self { rows, m };
        t.validate()?;
        Ok(t)
    }

    pub fn empty(m: i64) -> Self {
        Self { rows: Default::default(), m }
    }

    fn validate(&self) -> Result<(), Error> {
        let bad = |why: &str| Err(Error::Domain(format!("{self}: {why}")));
        let mut seen: BTreeMap<u32, Vec<Node>> = BTreeMap::new();
        for (c, comp) in self.rows.iter().enumerate() {
            for (r, row) in comp.iter().enumerate() {
                if row.is_empty() {
                    return bad("empty row");
                }
                if r > 0 && row.len() > comp[r - 1].len() {
                    return bad("row lengths increase");
                }
                for (j, &v) in row.iter().enumerate() {
                    if v == 0 {
                        return bad("entries start at 1");
                    }
                    if j > 0 && row[j - 1] >= v {
                        return bad("row not strictly increasing");
                    }
                    if r > 0 && comp[r - 1][j] >= v {
                        return bad("column not strictly increasing");
                    }
                    seen.entry(v).or_default().push(Node::new(c, r + 1, j + 1));
                }
            }
        }
        for (expect, (v, nodes)) in (1u32..).zip(&seen) {
            if *v != expect {
                return bad("entries are not 1..k");
            }
            if nodes.len() > 3 {
                return bad("multiplicity above 3");
            }
            if nodes.windows(2).any(|w| w[0].comp == w[1].comp) {
                return bad("repeated value inside one component");
            }
        }
        Ok(())
    }

    /// Whether every repeated value sits on nodes of one residue, as it does
    /// for every filling coming from a web with flow.
    pub fn residues_consistent(&self) -> bool {
        (1..=self.max_entry()).all(|v| {
            let nodes = self.nodes_of(v);
            nodes.windows(2).all(|w| residue(w[0], self.m) == residue(w[1], self.m))
        })
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn rows(&self) -> &[Vec<Vec<u32>>; 3] {
        &self.rows
    }

    pub fn shape(&self) -> Multipartition3 {
        let comps = self.rows.clone().map(|c| Partition(c.iter().map(Vec::len).collect()));
        Multipartition3::new(comps, self.m)
    }

    pub fn max_entry(&self) -> u32 {
        self.entries().map(|(_, v)| v).max().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (Node, u32)> + '_ {
        self.rows.iter().enumerate().flat_map(|(c, comp)| {
            comp.iter().enumerate().flat_map(move |(r, row)| {
                row.iter().enumerate().map(move |(j, &v)| (Node::new(c, r + 1, j + 1), v))
            })
        })
    }

    /// Nodes carrying `v`, leftmost component first.
    pub fn nodes_of(&self, v: u32) -> Vec<Node> {
        let mut out: Vec<Node> = self.entries().filter(|(_, x)| *x == v).map(|(n, _)| n).collect();
        out.sort();
        out
    }

    pub fn get(&self, node: Node) -> Option<u32> {
        self.rows.get(node.comp)?.get(node.row.checked_sub(1)?)?.get(node.col.checked_sub(1)?).copied()
    }

    pub fn has_repeats(&self) -> bool {
        let mut seen = std::collections::BTreeSet::new();
        self.entries().any(|(_, v)| !seen.insert(v))
    }

    /// Residue of each value `1..=max`.
    pub fn residue_sequence(&self) -> Result<Vec<i64>, Error> {
        if !self.residues_consistent() {
            return Err(Error::Domain(format!("{self}: a repeated value spans residues")));
        }
        Ok((1..=self.max_entry()).map(|v| residue(self.nodes_of(v)[0], self.m)).collect())
    }

    /// Multiplicity of each value `1..=max`.
    pub fn multiplicities(&self) -> Vec<usize> {
        (1..=self.max_entry()).map(|v| self.nodes_of(v).len()).collect()
    }

    /// Keeps the nodes with entries at most `j`.
    pub fn truncate(&self, j: u32) -> Multitableau {
        let rows = self.rows.clone().map(|comp| {
            comp.into_iter()
                .map(|row| row.into_iter().filter(|&v| v <= j).collect::<Vec<_>>())
                .filter(|row| !row.is_empty())
                .collect()
        });
        Self { rows, m: self.m }
    }

    /// Replaces each repeated value by consecutive values, leftmost component
    /// first, shifting everything above it.
    pub fn expand_repeats(&self) -> Multitableau {
        let mut relabel: BTreeMap<Node, u32> = BTreeMap::new();
        let mut next = 1;
        for v in 1..=self.max_entry() {
            for node in self.nodes_of(v) {
                relabel.insert(node, next);
                next += 1;
            }
        }
        let mut out = self.clone();
        for (c, comp) in out.rows.iter_mut().enumerate() {
            for (r, row) in comp.iter_mut().enumerate() {
                for (j, v) in row.iter_mut().enumerate() {
                    *v = relabel[&Node::new(c, r + 1, j + 1)];
                }
            }
        }
        out
    }

    /// Total BKW degree and the contribution of each value.
    pub fn bkw_degree(&self) -> (i64, Vec<i64>) {
        let mut shape = Multipartition3::new(Default::default(), self.m);
        let mut parts = Vec::new();
        for v in 1..=self.max_entry() {
            let nodes = self.nodes_of(v);
            let mut d = 0i64;
            for &node in &nodes {
                shape.push_node(node);
                d += shape.nodes_after(node, NodeKind::Addable).len() as i64;
                d -= shape.nodes_after(node, NodeKind::Removable).len() as i64;
            }
            d -= match nodes.len() {
                1 => 0,
                2 => 1,
                _ => 3,
            };
            parts.push(d);
        }
        (parts.iter().sum(), parts)
    }

    /// Swaps the values `j` and `j + 1`; `None` if the result is not standard.
    pub fn swap(&self, j: u32) -> Option<Multitableau> {
        let mut out = self.clone();
        for comp in out.rows.iter_mut() {
            for row in comp.iter_mut() {
                for v in row.iter_mut() {
                    if *v == j {
                        *v = j + 1;
                    } else if *v == j + 1 {
                        *v = j;
                    }
                }
            }
        }
        out.validate().ok().map(|_| out)
    }

    /// Tableau dominance: every truncation's shape is dominated.
    pub fn dominated_by(&self, other: &Multitableau) -> bool {
        let k = self.max_entry().max(other.max_entry());
        (0..=k).all(|j| {
            let a = self.truncate(j).shape();
            let b = other.truncate(j).shape();
            b.dominates(&a).unwrap_or(false)
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        let nodes: Vec<[u64; 4]> = self
            .entries()
            .map(|(n, v)| [n.row as u64, n.col as u64, n.comp as u64 + 1, u64::from(v)])
            .collect();
        serde_json::json!({ "m": self.m, "nodes": nodes })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, Error> {
        #[derive(Deserialize)]
        struct Raw {
            m: i64,
            nodes: Vec<[usize; 4]>,
        }
        let raw: Raw = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let mut rows: [Vec<Vec<u32>>; 3] = Default::default();
        let mut cells: Vec<[usize; 4]> = raw.nodes;
        cells.sort_by_key(|[r, c, l, _]| (*l, *r, *c));
        for [r, c, l, v] in cells {
            if !(1..=3).contains(&l) || r == 0 || c == 0 {
                return Err(Error::Parse(format!("bad node ({r},{c},{l})")));
            }
            let comp = &mut rows[l - 1];
            if comp.len() + 1 == r {
                comp.push(Vec::new());
            }
            if comp.len() != r || comp[r - 1].len() + 1 != c {
                return Err(Error::Parse(format!("node ({r},{c},{l}) leaves a gap")));
            }
            comp[r - 1].push(v as u32);
        }
        Self::new(rows, raw.m)
    }
}

/// The filling of `shape` by `1, 2, ...` component by component, each
/// component row by row.
pub fn superstandard(shape: &Multipartition3) -> Multitableau {
    let mut next = 1;
    let rows = shape.components.clone().map(|p| {
        p.parts()
            .iter()
            .map(|&len| {
                let row: Vec<u32> = (next..next + len as u32).collect();
                next += len as u32;
                row
            })
            .collect()
    });
    Multitableau { rows, m: shape.m }
}

/// All standard fillings of `shape` by distinct values, in lexicographic
/// order of the node sequence visited by `1, 2, ...`.
pub fn standard_tableaux(shape: &Multipartition3) -> Vec<Multitableau> {
    let target = shape.clone();
    let mut out = Vec::new();
    let mut cur = Multitableau::empty(shape.m);
    let total = shape.size() as u32;
    fn rec(t: &Multipartition3, cur: &mut Multitableau, v: u32, total: u32, out: &mut Vec<Multitableau>) {
        if v > total {
            out.push(cur.clone());
            return;
        }
        let grown = cur.shape();
        for node in grown.addable_all() {
            if !t.contains(node) {
                continue;
            }
            place(cur, node, v);
            rec(t, cur, v + 1, total, out);
            unplace(cur, node);
        }
    }
    rec(&target, &mut cur, 1, total, &mut out);
    out
}

/// All standard fillings by distinct values whose residue sequence is `seq`.
pub fn tableaux_with_residues(seq: &[i64], m: i64) -> Vec<Multitableau> {
    let mut out = Vec::new();
    let mut cur = Multitableau::empty(m);
    fn rec(seq: &[i64], cur: &mut Multitableau, v: u32, out: &mut Vec<Multitableau>) {
        let Some(&r) = seq.get(v as usize - 1) else {
            out.push(cur.clone());
            return;
        };
        for node in cur.shape().addable_nodes(r) {
            place(cur, node, v);
            rec(seq, cur, v + 1, out);
            unplace(cur, node);
        }
    }
    rec(seq, &mut cur, 1, &mut out);
    out
}

fn place(t: &mut Multitableau, node: Node, v: u32) {
    let comp = &mut t.rows[node.comp];
    if node.row > comp.len() {
        comp.push(vec![v]);
    } else {
        comp[node.row - 1].push(v);
    }
}

fn unplace(t: &mut Multitableau, node: Node) {
    let comp = &mut t.rows[node.comp];
    comp[node.row - 1].pop();
    if comp[node.row - 1].is_empty() {
        comp.pop();
    }
}

impl fmt::Display for Multitableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (c, comp) in self.rows.iter().enumerate() {
            if c > 0 {
                f.write_str(" | ")?;
            }
            if comp.is_empty() {
                f.write_str("-")?;
            }
            let rows: Vec<String> =
                comp.iter().map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")).collect();
            f.write_str(&rows.join("/"))?;
        }
        f.write_str(")")
    }
}

/// Parses `"(1 2/3 | 4 | 5 6/7)"` with shift `m`. `-` marks an empty component.
pub fn parse_multitableau(s: &str, m: i64) -> Result<Multitableau, Error> {
    let inner = s
        .trim()
        .strip_prefix('(')
        .and_then(|x| x.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("expected (..|..|..), got {s:?}")))?;
    let comps: Vec<&str> = inner.split('|').collect();
    if comps.len() != 3 {
        return Err(Error::Parse(format!("expected three components in {s:?}")));
    }
    let mut rows: [Vec<Vec<u32>>; 3] = Default::default();
    for (c, txt) in comps.iter().enumerate() {
        let txt = txt.trim();
        if txt == "-" || txt.is_empty() {
            continue;
        }
        for row in txt.split('/') {
            let vals = row
                .split_whitespace()
                .map(|x| x.parse::<u32>().map_err(|_| Error::Parse(format!("bad entry {x:?}"))))
                .collect::<Result<Vec<_>, _>>()?;
            rows[c].push(vals);
        }
    }
    Multitableau::new(rows, m)
}

/// A tableau with three columns, stored row by row.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ColTableau {
    pub rows: Vec<[u32; 3]>,
}

impl ColTableau {
    pub fn new(rows: Vec<[u32; 3]>) -> Self {
        Self { rows }
    }

    /// The filling whose row `r` is `r r r`.
    pub fn ground(ell: usize) -> Self {
        Self { rows: (1..=ell as u32).map(|r| [r; 3]).collect() }
    }

    pub fn ell(&self) -> usize {
        self.rows.len()
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        self.rows.iter().map(|r| r[c]).collect()
    }

    pub fn is_column_strict(&self) -> bool {
        self.rows.iter().all(|r| r.iter().all(|&v| v >= 1)) && self.rows.windows(2).all(|w| (0..3).all(|c| w[0][c] < w[1][c]))
    }

    pub fn is_semistandard(&self) -> bool {
        self.is_column_strict() && self.rows.iter().all(|r| r[0] <= r[1] && r[1] <= r[2])
    }

    pub fn max_entry(&self) -> u32 {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Occurrences of each value `1..=n`.
    pub fn content(&self, n: usize) -> Vec<usize> {
        let mut out = vec![0; n];
        for &v in self.rows.iter().flatten() {
            if (v as usize) <= n {
                out[v as usize - 1] += 1;
            }
        }
        out
    }

    /// Semistandard tableaux with the given value multiplicities.
    pub fn semistandard_with_content(content: &[usize]) -> Vec<ColTableau> {
        let total: usize = content.iter().sum();
        if !total.is_multiple_of(3) {
            return Vec::new();
        }
        let ell = total / 3;
        let mut out = Vec::new();
        let mut rows = vec![[0u32; 3]; ell];
        let mut filled = vec![0usize; ell];
        fn strips(
            content: &[usize],
            v: usize,
            rows: &mut Vec<[u32; 3]>,
            filled: &mut Vec<usize>,
            out: &mut Vec<ColTableau>,
        ) {
            if v == content.len() {
                if filled.iter().all(|&f| f == 3) {
                    out.push(ColTableau { rows: rows.clone() });
                }
                return;
            }
            let ell = rows.len();
            let mut add = vec![0usize; ell];
            fn choose(
                r: usize,
                left: usize,
                add: &mut Vec<usize>,
                content: &[usize],
                v: usize,
                rows: &mut Vec<[u32; 3]>,
                filled: &mut Vec<usize>,
                out: &mut Vec<ColTableau>,
            ) {
                let ell = rows.len();
                if r == ell {
                    if left == 0 {
                        let before = filled.clone();
                        for i in 0..ell {
                            for c in before[i]..before[i] + add[i] {
                                rows[i][c] = v as u32 + 1;
                            }
                            filled[i] += add[i];
                        }
                        strips(content, v + 1, rows, filled, out);
                        for i in 0..ell {
                            for c in before[i]..filled[i] {
                                rows[i][c] = 0;
                            }
                        }
                        *filled = before;
                    }
                    return;
                }
                // Horizontal strip: new cells in row r may not sit under new
                // or empty cells of row r - 1.
                let cap_above = if r == 0 { 3 } else { filled[r - 1] };
                for a in 0..=left.min(3 - filled[r]) {
                    if filled[r] + a > cap_above {
                        break;
                    }
                    add[r] = a;
                    choose(r + 1, left - a, add, content, v, rows, filled, out);
                }
                add[r] = 0;
            }
            choose(0, content[v], &mut add, content, v, rows, filled, out);
        }
        strips(content, 0, &mut rows, &mut filled, &mut out);
        out.sort();
        out
    }
}

impl fmt::Display for ColTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            self.rows.iter().map(|r| format!("{} {} {}", r[0], r[1], r[2])).collect();
        f.write_str(&rows.join("/"))
    }
}

impl FromStr for ColTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut rows = Vec::new();
        for row in s.split('/') {
            let vals = row
                .split_whitespace()
                .map(|x| x.parse::<u32>().map_err(|_| Error::Parse(format!("bad entry {x:?}"))))
                .collect::<Result<Vec<_>, _>>()?;
            let arr: [u32; 3] =
                vals.try_into().map_err(|_| Error::Parse(format!("row {row:?} needs three entries")))?;
            rows.push(arr);
        }
        Ok(Self { rows })
    }
}

/// Subtracts the ground filling and reads each column bottom to top as a
/// partition. The shift of the result is the row count.
pub fn colstrict_to_multipartition(t: &ColTableau) -> Result<Multipartition3, Error> {
    if !t.is_column_strict() {
        return Err(Error::Domain(format!("{t} is not column strict")));
    }
    let ell = t.ell();
    let comps = [0, 1, 2].map(|c| {
        let parts: Vec<usize> = (0..ell).rev().map(|r| (t.rows[r][c] - (r as u32 + 1)) as usize).collect();
        Partition::new(parts).expect("column strict columns give partitions")
    });
    Ok(Multipartition3::new(comps, ell as i64))
}

pub fn multipartition_to_colstrict(p: &Multipartition3) -> Result<ColTableau, Error> {
    let ell = usize::try_from(p.m).map_err(|_| Error::Domain("negative shift".into()))?;
    if p.components.iter().any(|c| c.rows() > ell) {
        return Err(Error::Domain(format!("{p} has more than {ell} rows in a component")));
    }
    let rows = (0..ell)
        .map(|r| [0, 1, 2].map(|c| (r + 1 + p.components[c].row_len(ell - r)) as u32))
        .collect();
    Ok(ColTableau { rows })
}
