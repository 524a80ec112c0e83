use std::process::{Command, Output};

fn sl3web(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sl3web")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf8")
}

#[test]
fn brackets_of_the_presets() {
    let o = sl3web(&["--format", "json", "bracket", "--pair", "theta"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), r#""q^3 + 2*q + 2*q^-1 + q^-3""#);
    let o = sl3web(&["bracket", "--pair", "circle"]);
    assert_eq!(stdout(&o).trim(), "q^2 + 1 + q^-2");
    for name in ["arc", "hexagon", "circles-nested", "circles-split"] {
        assert_eq!(sl3web(&["webs", "--preset", name]).status.code(), Some(0), "{name}");
    }
}

#[test]
fn verify_passes_and_usage_errors_exit_two() {
    let o = sl3web(&["--max-n", "4", "--format", "csv", "verify", "degree"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("check,cases,failures,status"));
    assert_eq!(sl3web(&["verify", "nothing"]).status.code(), Some(2));
    assert_eq!(sl3web(&["webs", "--preset", "square"]).status.code(), Some(2));
    assert_eq!(sl3web(&["bracket", "--word", "F1"]).status.code(), Some(2));
    assert_eq!(sl3web(&["--format", "yaml", "webs", "--signs", "+-"]).status.code(), Some(2));
}

#[test]
fn growth_inverts_the_filling() {
    let o = sl3web(&["--format", "json", "bij", "grow", "--tableau", "(1 | - | 1/2)", "--m", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v.to_string().contains("F1 F2^2"), "{v}");
}
