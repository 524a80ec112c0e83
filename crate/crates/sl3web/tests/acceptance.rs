//! One line per acceptance criterion; exits nonzero if any fails.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use sl3web::bijection::{classify_steps, grow, iota, weight_diagram_tower};
use sl3web::flows::{enumerate_flows, flow_to_colstrict};
use sl3web::foamword::{
    classify_transposition, dot_placement, enumerate_cellular_basis, idempotent, minimal_permutation, Generator,
};
use sl3web::ladderweb::{enumerate_basis, lt_generators, LadderWeb, LtWord, SignString};
use sl3web::presets::preset;
use sl3web::tableaux::{parse_multitableau, superstandard, ColTableau, Multipartition3, Multitableau};
use sl3web::verify::{self, sign_strings};
use sl3web::Laurent;

type Check = Result<String, String>;

/// Name, check and time budget.
type Criterion = (&'static str, fn() -> Check, Duration);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn word(s: &str) -> LtWord {
    s.parse().expect("word literal")
}

fn web(w: &str, n: usize, ell: usize) -> LadderWeb {
    LadderWeb::build(&word(w), n, ell).expect("fits").expect("nonzero")
}

fn mt(s: &str, m: i64) -> Multitableau {
    parse_multitableau(s, m).expect("tableau literal")
}

fn ct(s: &str) -> ColTableau {
    s.parse().expect("tableau literal")
}

fn err(e: sl3web::Error) -> String {
    e.to_string()
}

fn brackets() -> Check {
    let circle = preset("circle").map_err(err)?.closed().bracket();
    let three = Laurent::qint(3).map_err(err)?;
    ensure(circle == three, format!("circle gives {circle}"))?;
    let theta = preset("theta").map_err(err)?.closed().bracket();
    let six = Laurent::qint(2).map_err(err)? * three;
    ensure(theta == six, format!("theta gives {theta}"))?;
    Ok(format!("circle = {circle}, theta = {theta}"))
}

fn theta_weights_and_degrees() -> Check {
    let mut weights = preset("theta").map_err(err)?.closed().flow_weights();
    weights.sort();
    ensure(weights == [-3, -1, -1, 1, 1, 3], format!("weights {weights:?}"))?;
    let signs: SignString = "+++".parse().map_err(err)?;
    let mut degrees: Vec<i64> = enumerate_cellular_basis(&signs).map_err(err)?.iter().map(|b| b.degree()).collect();
    degrees.sort();
    ensure(degrees == [0, 2, 2, 4, 4, 6], format!("foam degrees {degrees:?}"))?;
    Ok(format!("weights {weights:?}, foam degrees {degrees:?}"))
}

fn bkw_degrees() -> Check {
    for (t, m) in [("(- | - | 1)", 1), ("(- | 1 | 1)", 2), ("(1 | 1 | 1)", 3)] {
        let d = mt(t, m).bkw_degree().0;
        ensure(d == 0, format!("{t} has degree {d}"))?;
    }
    let t4 = mt("(1 2 3/8 9 | 5 6/10/11 | 1 2 3/4 9/7)", 3);
    let (d4, parts4) = t4.bkw_degree();
    ensure(d4 == 3 && parts4 == [1, 0, 0, 0, 1, 0, 0, 1, 0, 1, -1], format!("T4: {d4} {parts4:?}"))?;
    let tb = mt("(1 2/5 | 4 | 1 2/3 4)", 2);
    let (db, partsb) = tb.bkw_degree();
    ensure(db == 2 && partsb == [1, 0, 0, 0, 1], format!("second example: {db} {partsb:?}"))?;
    // The same filling comes from a flow of weight -2 on its web.
    let w = web("F1 F2^2 F1 F3^2 F2^2", 4, 2);
    let hit = enumerate_flows(&w)
        .into_iter()
        .find(|f| iota(&w, f).ok().as_ref() == Some(&tb))
        .ok_or("no flow fills the second example")?;
    ensure(flow_to_colstrict(&w, &hit) == ct("2 1 3/4 3 4"), "boundary tableau differs")?;
    ensure(hit.weight == -2, format!("weight {}", hit.weight))?;
    Ok(format!("0, 0, 0, {d4} {parts4:?}; {db} {partsb:?}"))
}

fn find_filling(w: &LadderWeb, want: &Multitableau) -> Result<Vec<String>, String> {
    for f in enumerate_flows(w) {
        if iota(w, &f).map_err(err)? == *want {
            return Ok(classify_steps(w, &f).map_err(err)?.iter().map(ToString::to_string).collect());
        }
    }
    Err(format!("no flow on {} fills {want}", w.word))
}

fn iota_outputs() -> Check {
    let half = web("F1 F2^2", 3, 2);
    let steps = find_filling(&half, &mt("(1 | - | 1/2)", 2))?;
    ensure(steps == ["Arc(a,0)", "Y(b,0)"], format!("half theta steps {steps:?}"))?;
    let left = find_filling(&web("F2 F1^2 F3^2 F2^2", 4, 2), &mt("(1 2/3 | 4 | 1 2/3)", 2))?;
    let right = find_filling(&web("F1^2 F2 F3^2 F2^2", 4, 2), &mt("(1 2/4 | 3 | 1 2/4)", 2))?;
    let mut l = left.clone();
    let mut r = right.clone();
    l.sort();
    r.sort();
    ensure(l == ["Arc(a,0)", "Arc(b,0)", "left(a,0)", "right(b,0)"], format!("left steps {left:?}"))?;
    ensure(r == ["Arc(a,0)", "Arc(a,0)", "right(a,0)", "right(b,0)"], format!("right steps {right:?}"))?;
    let hex = preset("hexagon").map_err(err)?.web();
    let t11 = mt("(1 2 3/4 9/7 | 5 6/10 | 1 2 3/8 9/11)", 3);
    find_filling(&hex, &t11)?;
    let tower = weight_diagram_tower(&t11).len();
    ensure(tower == 12, format!("tower has {tower} levels"))?;
    Ok("half theta, both circle webs and the hexagon filling reproduced".into())
}

fn lt_words() -> Check {
    let cases = [
        ("1 1 2", "F1"),
        ("1 2 2", "F1^2"),
        ("1 1 2/2 3 3", "F1 F2^2"),
        ("1 2 3", "F1 F2 F1"),
    ];
    for (t, w) in cases {
        let got = lt_generators(&ct(t)).map_err(err)?;
        ensure(got == word(w), format!("{t} gives {got}"))?;
    }
    let signs: SignString = "+-+-".parse().map_err(err)?;
    let words: HashSet<LtWord> = enumerate_basis(&signs).map_err(err)?.into_iter().map(|(_, w)| w.word).collect();
    let expected: HashSet<LtWord> = [word("F2 F1^2 F3^2 F2^2"), word("F1^2 F2 F3^2 F2^2")].into();
    ensure(words == expected, format!("(+,-,+,-) basis words {words:?}"))?;
    let shape = Multipartition3::from_parts([&[2, 1], &[1], &[2, 1]], 2).map_err(err)?;
    let idem = idempotent(&shape);
    ensure(idem == word("F1 F3 F2 F2 F1 F3 F2"), format!("idempotent word {idem}"))?;
    let hex = word("F1 F2 F3^2 F2 F1 F4 F3 F2 F5^2 F4^2 F3^2");
    let boundary = preset("hexagon").map_err(err)?.web().boundary();
    let found = enumerate_basis(&boundary).map_err(err)?.into_iter().find(|(_, w)| w.word == hex);
    let (t, w) = found.ok_or_else(|| format!("hexagon word is not a basis word of {boundary}"))?;
    let flow_tableau = ct("2 1 2/4 3 4/6 5 6");
    ensure(
        enumerate_flows(&w).iter().any(|f| flow_to_colstrict(&w, f) == flow_tableau),
        "no hexagon flow reads 2 1 2/4 3 4/6 5 6",
    )?;
    Ok(format!("eight words reproduced, hexagon from {t}"))
}

fn roundtrip() -> Check {
    let o = verify::roundtrip(&sign_strings(6)).map_err(err)?;
    ensure(o.passed(), format!("{:?}", o.failures.first()))?;
    // Across sign strings too, no two fillings agree.
    let mut seen = HashSet::new();
    for s in sign_strings(6) {
        for (_, w) in enumerate_basis(&s).map_err(err)? {
            for f in enumerate_flows(&w) {
                let t = iota(&w, &f).map_err(err)?;
                let g = grow(&t, Some(w.n)).map_err(err)?;
                ensure(g.word == w.word && g.moves == f.moves, format!("{t} does not grow back"))?;
                ensure(seen.insert(t.to_string()), format!("{t} filled twice"))?;
            }
        }
    }
    Ok(format!("{} webs with flow", o.cases))
}

fn degree_preservation() -> Check {
    let o = verify::degree(&sign_strings(6)).map_err(err)?;
    ensure(o.passed(), format!("{:?}", o.failures.first()))?;
    Ok(format!("{} webs with flow", o.cases))
}

fn unitriangularity() -> Check {
    let o = verify::unitriangular(&sign_strings(6)).map_err(err)?;
    ensure(o.passed(), format!("{:?}", o.failures.first()))?;
    Ok(format!("{} basis webs", o.cases))
}

fn graded_dimension() -> Check {
    let o = verify::graded_dimension(&sign_strings(6)).map_err(err)?;
    ensure(o.passed(), format!("{:?}", o.failures.first()))?;
    Ok(format!("{} web pairs", o.cases))
}

fn dots_and_homogeneity() -> Check {
    let shape = Multipartition3::from_parts([&[2, 1], &[1], &[2, 1]], 2).map_err(err)?;
    let m = dot_placement(&shape);
    ensure(m == [2, 0, 0, 1, 0, 0, 0], format!("dots {m:?}"))?;
    let mut count = 0;
    for s in sign_strings(6) {
        for b in enumerate_cellular_basis(&s).map_err(err)? {
            count += 1;
            let want = b.top_tableau.bkw_degree().0 + b.bottom_tableau.bkw_degree().0;
            ensure(b.degree() == want, format!("{} / {}: {} vs {want}", b.top_tableau, b.bottom_tableau, b.degree()))?;
        }
    }
    Ok(format!("dots {m:?}, {count} homogeneous basis foams"))
}

fn cellular_datum() -> Check {
    let o = verify::cellular(&sign_strings(6)).map_err(err)?;
    ensure(o.passed(), format!("{:?}", o.failures.first()))?;
    Ok(format!("{} basis foams, involution and count agree", o.cases))
}

fn minimal_permutation_example() -> Check {
    let t = mt("(1 3/6 | 5 | 2 4/7)", 2);
    let reference = superstandard(&t.shape());
    ensure(reference == mt("(1 2/3 | 4 | 5 6/7)", 2), "reference filling differs")?;
    let p = minimal_permutation(&t, &reference).map_err(err)?;
    ensure(p.to_string() == "τ4τ5τ3τ4τ5τ2", format!("sigma = {p}"))?;
    let expected = [
        "(1 2/6 | 5 | 3 4/7)",
        "(1 2/5 | 6 | 3 4/7)",
        "(1 2/4 | 6 | 3 5/7)",
        "(1 2/3 | 6 | 4 5/7)",
        "(1 2/3 | 5 | 4 6/7)",
        "(1 2/3 | 4 | 5 6/7)",
    ];
    for (got, want) in p.steps.iter().zip(expected) {
        ensure(*got == mt(want, 2), format!("step {got}, expected {want}"))?;
    }
    ensure(p.steps.len() == 6, "six steps")?;
    let kinds = [classify_transposition(2, 1, 1), classify_transposition(2, 2, 1), classify_transposition(1, 3, 1)];
    ensure(
        matches!(kinds[0], Generator::Unzip { .. }) && kinds[0].degree() == 1,
        format!("(2,1) gives {}", kinds[0]),
    )?;
    ensure(matches!(kinds[1], Generator::DigonRemoval { .. }) && kinds[1].degree() == -2, "(2,2)")?;
    ensure(matches!(kinds[2], Generator::Shift { .. }) && kinds[2].degree() == 0, "(1,3)")?;
    Ok(format!("sigma = {p}, six standard steps"))
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("brackets of circle and theta", brackets, Duration::from_secs(1)),
        ("theta flow weights and foam degrees", theta_weights_and_degrees, Duration::from_secs(1)),
        ("BKW degrees of the worked fillings", bkw_degrees, Duration::from_secs(1)),
        ("worked fillings of webs with flow", iota_outputs, Duration::from_secs(1)),
        ("LT words", lt_words, Duration::from_secs(1)),
        ("growth inverts the filling map, n <= 6", roundtrip, Duration::from_secs(60)),
        ("degree equals minus weight, n <= 6", degree_preservation, Duration::from_secs(60)),
        ("unitriangular tensor expansion, n <= 6", unitriangularity, Duration::from_secs(60)),
        ("flow pairs give the bracket, n <= 6", graded_dimension, Duration::from_secs(120)),
        ("dot placement and homogeneous basis, n <= 6", dots_and_homogeneity, Duration::from_secs(60)),
        ("involution and basis count, n <= 6", cellular_datum, Duration::from_secs(60)),
        ("minimal permutation and swap kinds", minimal_permutation_example, Duration::from_secs(1)),
    ];
    let mut failed = 0;
    for (k, (name, check, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let took = start.elapsed();
        let slow = if took > *budget { format!(" (over budget {budget:?})") } else { String::new() };
        match result {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} [{took:.2?}]{slow}", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} [{took:.2?}]", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
