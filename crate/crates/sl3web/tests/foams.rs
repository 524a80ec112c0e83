use std::collections::{BTreeMap, HashSet};

use sl3web::flows::ClosedWeb;
use sl3web::bijection::iota;
use sl3web::foamword::{
    enumerate_cellular_basis, filled_flows, graded_dim, half_foam, idempotent_web, minimal_permutation, BasisFoam,
    Generator,
};
use sl3web::ladderweb::{enumerate_basis, LadderWeb, SignString};
use sl3web::tableaux::{parse_multitableau, superstandard, Multipartition3};
use sl3web::Laurent;

fn signs(n: usize) -> Vec<SignString> {
    (1..=n).flat_map(SignString::all_classical).collect()
}

#[test]
fn theta_basis() {
    let s: SignString = "+++".parse().unwrap();
    let basis = enumerate_cellular_basis(&s).unwrap();
    let mut degrees: Vec<i64> = basis.iter().map(|b| b.degree()).collect();
    degrees.sort();
    assert_eq!(degrees, [0, 2, 2, 4, 4, 6]);
    let theta = Multipartition3::from_parts([&[], &[1], &[2]], 1).unwrap();
    let e = idempotent_web(&theta, 3).unwrap();
    let closed = ClosedWeb::pair(e.clone(), e).unwrap().bracket();
    assert_eq!(graded_dim(&theta, &theta, 3).unwrap(), closed);
}

#[test]
fn half_theta_foam_has_one_unzip() {
    let w = LadderWeb::build(&"F1 F2 F1".parse().unwrap(), 3, 1).unwrap().unwrap();
    let canonical = parse_multitableau("(- | 3 | 1 2)", 1).unwrap();
    let f = sl3web::flows::enumerate_flows(&w).into_iter().find(|f| iota(&w, f).unwrap() == canonical).unwrap();
    let foam = half_foam(&w, &f).unwrap();
    let unzips = foam.generators.iter().filter(|g| matches!(g, Generator::Unzip { .. })).count();
    assert_eq!(unzips, 1);
    assert_eq!(foam.degree(), -1);
    let p = minimal_permutation(&canonical, &superstandard(&canonical.shape())).unwrap();
    assert_eq!(p.applied, [2, 1]);
}

#[test]
fn basis_is_homogeneous_and_closed_under_the_involution() {
    for s in signs(6) {
        let basis = enumerate_cellular_basis(&s).unwrap();
        let key = |b: &BasisFoam| (b.top_tableau.to_string(), b.bottom_tableau.to_string(), b.top_web.to_string(), b.bottom_web.to_string(), format!("{:?}", b.word.generators));
        let keys: HashSet<_> = basis.iter().map(key).collect();
        for b in &basis {
            assert_eq!(b.degree(), b.top_tableau.bkw_degree().0 + b.bottom_tableau.bkw_degree().0, "{s}");
            let star = b.involution();
            assert_eq!(star.degree(), b.degree());
            assert_eq!(star.involution(), *b);
            assert!(keys.contains(&key(&star)));
        }
        let webs: Vec<LadderWeb> = enumerate_basis(&s).unwrap().into_iter().map(|(_, w)| w).collect();
        let dim: i64 = webs
            .iter()
            .flat_map(|u| webs.iter().map(move |v| (u, v)))
            .map(|(u, v)| ClosedWeb::pair(u.clone(), v.clone()).unwrap().bracket().eval_one().try_into().unwrap())
            .map(|x: i64| x)
            .sum::<i64>();
        assert_eq!(basis.len() as i64, dim, "{s}");
    }
}

#[test]
fn flow_pairs_give_the_bracket() {
    for s in signs(6) {
        let filled = filled_flows(&s).unwrap();
        let mut by_web: BTreeMap<String, (LadderWeb, Vec<(String, i64)>)> = BTreeMap::new();
        for (w, _, t) in filled {
            let e = by_web.entry(w.word.to_string()).or_insert_with(|| (w.clone(), Vec::new()));
            e.1.push((t.shape().to_string(), t.bkw_degree().0));
        }
        for (u, fu) in by_web.values() {
            for (v, fv) in by_web.values() {
                let mut sum = Laurent::zero();
                for (ja, da) in fu {
                    for (jb, db) in fv {
                        if ja == jb {
                            sum += &Laurent::monomial(da + db, 1);
                        }
                    }
                }
                let closed = ClosedWeb::pair(u.clone(), v.clone()).unwrap();
                assert_eq!(sum, closed.bracket().shift(s.len() as i64), "{} / {}", u.word, v.word);
            }
        }
    }
}

#[test]
fn dotted_idempotents_have_twice_the_degree() {
    for s in signs(5) {
        for (_, _, t) in filled_flows(&s).unwrap() {
            let shape = t.shape();
            let d = superstandard(&shape).bkw_degree();
            assert!(d.1.iter().all(|&m| (0..3).contains(&m)));
            let r = sl3web::foamword::dotted_idempotent(&shape).degree();
            assert_eq!(r, 2 * d.0);
        }
    }
}
