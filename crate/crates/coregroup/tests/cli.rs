//! The command-line surface, in process and through the built binary.

use std::process::Command;

use coregroup::cli::{run_from_args, Outcome};

fn run(args: &[&str]) -> Outcome {
    run_from_args(std::iter::once("coregroup").chain(args.iter().copied()))
}

fn value<'a>(out: &'a Outcome, key: &str) -> Option<&'a str> {
    out.stdout
        .lines()
        .find_map(|l| l.strip_prefix(key)?.strip_prefix(" = "))
}

#[test]
fn present_examples() {
    let hopf = run(&["present", "--fixture", "hopf", "--kind", "core"]);
    assert_eq!(value(&hopf, "generators"), Some("g_a g_b"));
    assert_eq!(value(&hopf, "relators"), Some("2"));

    let unknot = run(&["present", "--fixture", "unknot", "--kind", "wirtinger"]);
    assert_eq!(value(&unknot, "generators"), Some("x_a"));
    assert_eq!(value(&unknot, "relators"), Some("0"));

    let w1 = run(&[
        "present",
        "--fixture",
        "twisted_whitehead:1",
        "--kind",
        "core",
        "--split",
        "a",
        "--simplify",
    ]);
    assert_eq!(w1.code, 0, "{}", w1.stderr);
    assert_eq!(
        value(&w1, "generators").map(|g| g.split(' ').count()),
        Some(2)
    );

    let plus = run(&["present", "--fixture", "hopf", "--kind", "orbifold-plus"]);
    assert_eq!(value(&plus, "generators"), Some("x_a x_b x_+"));
}

#[test]
fn peripheral_examples() {
    let b = run(&["peripheral", "--fixture", "borromean_B", "--depth", "0"]);
    assert_eq!(value(&b, "pairs"), Some("6"));
    assert!(b.stdout.contains("meridian = g_y longitude = g_x g_w^-1"));

    let lp = run(&["peripheral", "--fixture", "link_Lprime", "--depth", "0"]);
    assert!(lp.stdout.contains("meridian = g_z longitude = 1 "));

    let u = run(&["peripheral", "--fixture", "unknot", "--depth", "3"]);
    assert_eq!(value(&u, "pairs"), Some("1"));
    assert!(u.stdout.contains("meridian = g_a longitude = 1 "));
}

#[test]
fn invariants_examples() {
    let b = run(&["invariants", "--fixture", "borromean_B"]);
    assert_eq!(value(&b, "summands"), Some("Z + Z4 + Z4"));
    assert_eq!(
        value(
            &run(&["invariants", "--fixture", "unknot"]),
            "abelianization"
        ),
        Some("Z")
    );
    let l = run(&["invariants", "--fixture", "link_L"]);
    assert_eq!(value(&l, "abelianization"), Some("Z^2 + Z2^2"));
    for key in [
        "phi_relators_zero",
        "nu_factors_match",
        "longitudes_two_torsion",
        "component_longitudes_sum_zero",
    ] {
        assert_eq!(value(&l, key), Some("true"), "{key}");
    }
}

#[test]
fn distinguish_examples() {
    let dir = std::env::temp_dir().join(format!("coregroup-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cert = dir.join("b.cert");
    let cert_s = cert.to_str().unwrap();

    let bb = run(&[
        "distinguish",
        "--left",
        "borromean_B",
        "--right",
        "borromean_Bprime",
        "--emit-cert",
        cert_s,
    ]);
    assert_eq!(value(&bb, "result"), Some("separated"));
    assert_eq!(value(&bb, "arc"), Some("y"));
    let v = run(&["verify", "--cert", cert_s]);
    assert_eq!((v.code, value(&v, "valid")), (0, Some("true")));

    // a tampered image no longer replays
    let text = std::fs::read_to_string(&cert).unwrap();
    let bad: String = text
        .lines()
        .map(|l| {
            if l.starts_with("image1") {
                "image1 = 1".to_string()
            } else {
                l.to_string()
            }
        })
        .collect::<Vec<_>>()
        .join("\n");
    std::fs::write(&cert, bad).unwrap();
    assert_eq!(run(&["verify", "--cert", cert_s]).code, 3);

    let ll = run(&[
        "distinguish",
        "--left",
        "link_L",
        "--right",
        "link_Lprime",
        "--mode",
        "longitude-triviality",
    ]);
    assert_eq!(value(&ll, "result"), Some("separated"));
    assert_eq!(value(&ll, "right longitude z"), Some("trivial"));

    let same = run(&["distinguish", "--left", "hopf", "--right", "hopf"]);
    assert_eq!(value(&same, "result"), Some("not_separated"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn whitehead_and_trotter_examples() {
    let w = run(&["whitehead", "--from", "-1", "--to", "1"]);
    let orders: Vec<&str> = w
        .stdout
        .lines()
        .filter_map(|l| l.strip_prefix("order = "))
        .collect();
    assert_eq!(orders, ["40", "8", "24"]);
    assert!(w.stdout.contains("structure = Z/8 ⋉ Z/3 by inversion"));
    assert!(w.stdout.contains("structure = Z/8\n"));
    assert!(w.stdout.contains("structure = Z/8 ⋉ Z/5 by inversion"));

    let t = run(&["trotter", "7", "-3", "5"]);
    assert_eq!(value(&t, "commutes_with_x"), Some("true"));
    assert!(
        value(&t, "translation_length")
            .unwrap()
            .parse::<f64>()
            .unwrap()
            > 1e-3
    );
    assert_eq!(run(&["trotter", "9", "-5", "3"]).code, 0);
    let bad = run(&["trotter", "3", "3", "5"]);
    assert_eq!(bad.code, 1);
    assert!(bad.stderr.contains("distinct"));
}

#[test]
fn structured_output_is_deterministic() {
    for args in [
        &["fixtures"][..],
        &["peripheral", "--fixture", "link_L", "--depth", "2"],
        &[
            "distinguish",
            "--left",
            "borromean_B",
            "--right",
            "borromean_Bprime",
        ],
    ] {
        let (a, b) = (run(args), run(args));
        assert_eq!(a, b);
        assert!(a.stdout.lines().all(|l| l.contains(" = ")), "{args:?}");
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_coregroup");
    let code = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(code(&["present", "--fixture", "hopf"]), Some(0));
    assert_eq!(code(&["present", "--code", "O1+,U1-"]), Some(1));
    assert_eq!(code(&["present"]), Some(1));
    assert_eq!(
        code(&["whitehead", "--from", "1", "--to", "1", "--ceiling", "5"]),
        Some(2)
    );
    let out = Command::new(bin)
        .args(["--format", "human", "trotter", "7", "-3", "5"])
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().next().unwrap().starts_with("triple "));
}
