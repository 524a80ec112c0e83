//! Exhaustive checks over a list of classical sign strings, usually all of
//! them up to a length bound.
//!
//! Each check returns the number of cases it looked at and every failure,
//! with a payload that can be fed back to the command line.

use std::collections::{BTreeMap, HashMap, HashSet};

use rayon::prelude::*;
use serde_json::json;

use crate::bijection::{grow, iota};
use crate::flows::{canonical_flow, enumerate_flows, state_string, tensor_expansion, ClosedWeb};
use crate::foamword::{enumerate_cellular_basis, filled_flows, BasisFoam};
use crate::ladderweb::{enumerate_basis, LadderWeb, SignString};
use crate::{Error, Laurent};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub message: String,
    pub payload: serde_json::Value,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub check: &'static str,
    pub cases: usize,
    pub failures: Vec<Failure>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub const CHECKS: &[&str] = &["roundtrip", "degree", "unitriangular", "gdf", "cellular"];

pub fn sign_strings(max_n: usize) -> Vec<SignString> {
    (1..=max_n).flat_map(SignString::all_classical).collect()
}

fn web_payload(s: &SignString, w: &LadderWeb) -> serde_json::Value {
    json!({"signs": s.to_string(), "word": w.word.to_string(), "n": w.n, "ell": w.ell})
}

/// Runs `per_string` on every sign string in parallel and merges in order.
fn over_strings<F>(check: &'static str, strings: &[SignString], per_string: F) -> Result<Outcome, Error>
where
    F: Fn(&SignString) -> Result<(usize, Vec<Failure>), Error> + Sync,
{
    let parts = strings.par_iter().map(&per_string).collect::<Result<Vec<_>, _>>()?;
    let mut out = Outcome { check, cases: 0, failures: Vec::new() };
    for (cases, failures) in parts {
        out.cases += cases;
        out.failures.extend(failures);
    }
    Ok(out)
}

/// Growing the filling of a web with flow gives back the web and flow, and
/// no two of them share a filling.
pub fn roundtrip(strings: &[SignString]) -> Result<Outcome, Error> {
    over_strings("roundtrip", strings, |s| {
        let mut cases = 0;
        let mut failures = Vec::new();
        let mut seen = HashMap::new();
        for (_, w) in enumerate_basis(s)? {
            for f in enumerate_flows(&w) {
                cases += 1;
                let payload = json!({"web": web_payload(s, &w), "flow": f.to_json()});
                let t = iota(&w, &f)?;
                let g = grow(&t, Some(w.n))?;
                if g.word != w.word || g.moves != f.moves {
                    failures.push(Failure { message: format!("{t} grows into {}", g.word), payload: payload.clone() });
                }
                if let Some(prev) = seen.insert(t.to_string(), payload.clone()) {
                    failures.push(Failure {
                        message: format!("two flows fill {t}"),
                        payload: json!({"first": prev, "second": payload}),
                    });
                }
            }
        }
        Ok((cases, failures))
    })
}

/// The degree of the filling is minus the weight of the flow.
pub fn degree(strings: &[SignString]) -> Result<Outcome, Error> {
    over_strings("degree", strings, |s| {
        let mut cases = 0;
        let mut failures = Vec::new();
        for (w, f, t) in filled_flows(s)? {
            cases += 1;
            let d = t.bkw_degree().0;
            if d != -f.weight {
                failures.push(Failure {
                    message: format!("{t} has degree {d}, flow weight {}", f.weight),
                    payload: json!({"web": web_payload(s, &w), "flow": f.to_json()}),
                });
            }
        }
        Ok((cases, failures))
    })
}

/// Each basis web has coefficient 1 at the state of its own tableau and
/// only smaller states otherwise.
pub fn unitriangular(strings: &[SignString]) -> Result<Outcome, Error> {
    over_strings("unitriangular", strings, |s| {
        let mut cases = 0;
        let mut failures = Vec::new();
        for (t, w) in enumerate_basis(s)? {
            cases += 1;
            let j = state_string(canonical_flow(&w, &t)?.top());
            let expansion = tensor_expansion(&w);
            let lead = expansion.get(&j).cloned().unwrap_or_default();
            let higher: Vec<String> = expansion.keys().filter(|k| **k > j).map(ToString::to_string).collect();
            if lead != Laurent::one() || !higher.is_empty() {
                failures.push(Failure {
                    message: format!("{} at {j} has {lead}, larger states {}", w.word, higher.join(" ")),
                    payload: web_payload(s, &w),
                });
            }
        }
        Ok((cases, failures))
    })
}

/// For basis webs `u`, `v`: pairs of flows with equal boundary, weighted by
/// `q^(deg + deg)`, sum to `q^n` times the bracket of `u*v`.
pub fn graded_dimension(strings: &[SignString]) -> Result<Outcome, Error> {
    over_strings("gdf", strings, |s| {
        let mut webs: BTreeMap<String, (LadderWeb, Vec<(String, i64)>)> = BTreeMap::new();
        for (w, _, t) in filled_flows(s)? {
            let entry = webs.entry(w.word.to_string()).or_insert_with(|| (w.clone(), Vec::new()));
            entry.1.push((t.shape().to_string(), t.bkw_degree().0));
        }
        let mut cases = 0;
        let mut failures = Vec::new();
        for (u, fu) in webs.values() {
            for (v, fv) in webs.values() {
                cases += 1;
                let mut sum = Laurent::zero();
                for (ja, da) in fu {
                    for (jb, db) in fv {
                        if ja == jb {
                            sum.add_term(da + db, 1.into());
                        }
                    }
                }
                let bracket = ClosedWeb::pair(u.clone(), v.clone())?.bracket().shift(s.len() as i64);
                if sum != bracket {
                    failures.push(Failure {
                        message: format!("{} / {}: flow pairs give {sum}, bracket gives {bracket}", u.word, v.word),
                        payload: json!({"lower": web_payload(s, u), "upper": web_payload(s, v)}),
                    });
                }
            }
        }
        Ok((cases, failures))
    })
}

fn index(b: &BasisFoam) -> [String; 4] {
    [b.top_tableau.to_string(), b.bottom_tableau.to_string(), b.top_web.to_string(), b.bottom_web.to_string()]
}

/// Basis foams are homogeneous of the summed degree, the involution maps the
/// basis to itself preserving degree, and the count matches the dimension
/// at `q = 1`.
pub fn cellular(strings: &[SignString]) -> Result<Outcome, Error> {
    over_strings("cellular", strings, |s| {
        let basis = enumerate_cellular_basis(s)?;
        let mut failures = Vec::new();
        let by_index: HashMap<_, usize> = basis.iter().enumerate().map(|(k, b)| (index(b), k)).collect();
        let mut fixed = HashSet::new();
        for (k, b) in basis.iter().enumerate() {
            let want = b.top_tableau.bkw_degree().0 + b.bottom_tableau.bkw_degree().0;
            let payload = json!({"signs": s.to_string(), "top": b.top_tableau.to_json(), "bottom": b.bottom_tableau.to_json()});
            if b.degree() != want {
                failures.push(Failure { message: format!("foam of degree {} indexed by degree {want}", b.degree()), payload: payload.clone() });
            }
            let star = b.involution();
            match by_index.get(&index(&star)) {
                Some(&k2) if basis[k2] == star && star.degree() == b.degree() => {
                    if k2 == k {
                        fixed.insert(k);
                    }
                }
                _ => failures.push(Failure { message: "involution leaves the basis".into(), payload }),
            }
        }
        let diagonal = basis.iter().filter(|b| b.top_tableau == b.bottom_tableau).count();
        if fixed.len() != diagonal {
            failures.push(Failure {
                message: format!("{} fixed points, {diagonal} diagonal elements", fixed.len()),
                payload: json!({"signs": s.to_string()}),
            });
        }
        let webs: Vec<LadderWeb> = enumerate_basis(s)?.into_iter().map(|(_, w)| w).collect();
        let mut dim = num_bigint::BigInt::from(0);
        for u in &webs {
            for v in &webs {
                dim += ClosedWeb::pair(u.clone(), v.clone())?.bracket().eval_one();
            }
        }
        if dim != basis.len().into() {
            failures.push(Failure {
                message: format!("{} basis foams, dimension {dim}", basis.len()),
                payload: json!({"signs": s.to_string()}),
            });
        }
        Ok((basis.len(), failures))
    })
}

pub fn run_check(name: &str, strings: &[SignString]) -> Result<Outcome, Error> {
    match name {
        "roundtrip" => roundtrip(strings),
        "degree" => degree(strings),
        "unitriangular" => unitriangular(strings),
        "gdf" => graded_dimension(strings),
        "cellular" => cellular(strings),
        other => Err(Error::Parse(format!("unknown check {other:?}, expected one of {}", CHECKS.join(", ")))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_strings_pass_everything() {
        for name in CHECKS {
            let o = run_check(name, &sign_strings(4)).unwrap();
            assert!(o.passed(), "{name}: {:?}", o.failures.first());
            assert!(o.cases > 0);
        }
        assert!(run_check("nothing", &[]).is_err());
    }
}
