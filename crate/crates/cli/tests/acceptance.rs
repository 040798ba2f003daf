//! Acceptance criteria, one PASS/FAIL line each. Runs the `species` binary
//! where a criterion is about its output, the library otherwise.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use species_cli::output::parse_cis_line;
use species_core::oracle;
use species_core::Poly;

const TABLE_PBP: &str = "\
0 1 1
1 1 1
2 1 1
3 3 1
4 15 2
5 135 3
6 1875 8
7 38745 17
8 1168545 63
9 50017905 224
10 3029330745 1248
11 257116925835 8218
12 30546104308335 75992
13 5065906139629335 906635
14 1172940061645387035 14447433
15 379092680506164049425 303100595
16 171204492289446788997825 8415834690
17 108139946568584292606269025 309390830222
18 95671942593719946611454522225 15105805368214
19 118699636146295502809945048489875 982300491033887
20 206821794864679268333769991824317775 85356503319933261";

const TABLE_CPBP: &str = "\
0 0 0
1 1 1
2 1 1
3 0 0
4 12 1
5 60 1
6 1320 5
7 26880 9
8 898800 45
9 40446000 160
10 2568736800 1018
11 225962684640 6956
12 27627178692960 67704
13 4686229692144000 830392
14 1104514965434200320 13539344
15 361988888631722352000 288643968
16 165271302775469812521600 8112651795
17 105278651889065640047462400 300974046019
18 93750696652129931568573619200 14796399706863
19 116899866711712459270623087360000 967194378235406
20 204465611975190360222598610427187200 84374194347669628";

const PBP_CIS: &str = "[p[], p[1], 1/2*p[1, 1] + 1/2*p[2], 1/2*p[1, 1, 1] + 1/2*p[2, 1],
5/8*p[1, 1, 1, 1] + 1/4*p[2, 1, 1] + 7/8*p[2, 2] + 1/4*p[4],
9/8*p[1, 1,1, 1, 1] + 1/4*p[2, 1, 1, 1]
+ 11/8*p[2, 2, 1] + 1/4*p[4, 1]]";

const PART_CIS: &str = "[p[], p[1], p[1, 1] + p[2], 5/6*p[1, 1, 1] + 3/2*p[2, 1] +
2/3*p[3], 5/8*p[1, 1, 1, 1] + 7/4*p[2, 1, 1] + 7/8*p[2, 2] +
p[3, 1] + 3/4*p[4], 13/30*p[1, 1, 1, 1, 1] + 5/3*p[2, 1, 1, 1] +
3/2*p[2, 2, 1] + 7/6*p[3, 1, 1] + 5/6*p[3, 2] + p[4, 1] + 2/5*p[5]]";

const G_CIS: &str = "[p[], p[1], p[1,1]+p[2], 4/3*p[1,1,1]+2*p[2,1]+2/3*p[3],
8/3*p[1,1,1,1]+4*p[2,1,1]+2*p[2,2]+4/3*p[3,1]+p[4]]";

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn species(args: &[&str]) -> Result<(i32, String), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_species"))
        .args(args)
        .output()
        .map_err(|e| format!("could not run species: {e}"))?;
    let code = out.status.code().unwrap_or(-1);
    Ok((code, String::from_utf8_lossy(&out.stdout).into_owned()))
}

fn species_ok(args: &[&str]) -> Result<Vec<String>, String> {
    match species(args)? {
        (0, stdout) => Ok(stdout.lines().map(str::to_string).collect()),
        (code, _) => Err(format!("`species {}` exited with {code}", args.join(" "))),
    }
}

/// Splits a bracketed list on top-level commas.
fn bracket_list(text: &str) -> Vec<String> {
    let body: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let body = &body[1..body.len() - 1];
    let mut items = Vec::new();
    let (mut depth, mut start) = (0, 0);
    for (i, c) in body.char_indices() {
        match c {
            '[' => depth += 1,
            ']' => depth -= 1,
            ',' if depth == 0 => {
                items.push(body[start..i].to_string());
                start = i + 1;
            }
            _ => {}
        }
    }
    items.push(body[start..].to_string());
    items
}

fn compare_cis(expr: &str, expected: &str) -> Outcome {
    let wanted = bracket_list(expected);
    let n = (wanted.len() - 1).to_string();
    let lines = species_ok(&["cis", expr, "-n", &n])?;
    for (k, (line, want)) in lines.iter().zip(&wanted).enumerate() {
        let (degree, got) = parse_cis_line(line).ok_or(format!("unparseable line {line:?}"))?;
        let want = Poly::parse(k, want).map_err(|e| e.to_string())?;
        if degree != k || got != want {
            return Err(format!("{expr} degree {k}: got {got}, want {want}"));
        }
    }
    if lines.len() != wanted.len() {
        return Err(format!(
            "{expr}: {} components, want {}",
            lines.len(),
            wanted.len()
        ));
    }
    Ok(format!("{expr} components 0..{n}"))
}

fn compare_values(cmd: &str, expr: &str, expected: &[&str]) -> Outcome {
    let n = (expected.len() - 1).to_string();
    let got = species_ok(&[cmd, expr, "-n", &n])?;
    if got != expected {
        return Err(format!("{cmd} {expr}: got {got:?}, want {expected:?}"));
    }
    Ok(format!("{cmd} {expr}"))
}

fn all(parts: Vec<Outcome>) -> Outcome {
    let mut done = Vec::new();
    for p in parts {
        done.push(p?);
    }
    Ok(done.join("; "))
}

fn table(family: &str, expected: &str) -> Outcome {
    let started = Instant::now();
    let lines = species_ok(&["table", family, "--max-n", "20", "--format", "tsv"])?;
    if lines.first().map(String::as_str) != Some("n\tlabeled\tunlabeled") {
        return Err("missing TSV header".into());
    }
    let rows: Vec<String> = lines[1..].iter().map(|l| l.replace('\t', " ")).collect();
    let want: Vec<&str> = expected.lines().collect();
    if rows.len() != want.len() {
        return Err(format!("{} rows, want {}", rows.len(), want.len()));
    }
    for (got, want) in rows.iter().zip(&want) {
        if got != want {
            return Err(format!("row {got:?}, want {want:?}"));
        }
    }
    let elapsed = started.elapsed();
    if elapsed > Duration::from_secs(300) {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!(
        "21 rows bit-exact in {:.1}s",
        elapsed.as_secs_f64()
    ))
}

fn pbp_spot_checks() -> Outcome {
    all(vec![
        compare_cis("PBP", PBP_CIS),
        compare_values(
            "egf",
            "PBP",
            &[
                "1",
                "1",
                "1/2",
                "1/2",
                "5/8",
                "9/8",
                "125/48",
                "123/16",
                "11129/384",
                "17643/128",
            ],
        ),
        compare_values(
            "tgf",
            "PBP",
            &["1", "1", "1", "1", "2", "3", "8", "17", "63", "224"],
        ),
    ])
}

fn small_goldens() -> Outcome {
    let l_cis = format!(
        "[{}]",
        (0..10)
            .map(|n| format!("p[{}]", vec!["1"; n].join(",")))
            .collect::<Vec<_>>()
            .join(",")
    );
    let part_egf = [
        "1",
        "1",
        "1",
        "5/6",
        "5/8",
        "13/30",
        "203/720",
        "877/5040",
        "23/224",
        "1007/17280",
    ];
    let part_tgf = ["1", "1", "2", "3", "5", "7", "11", "15", "22", "30"];
    all(vec![
        compare_values("egf", "G", &["1", "1", "1", "4/3", "8/3"]),
        compare_values(
            "tgf",
            "G",
            &["1", "1", "2", "4", "11", "34", "156", "1044", "12346"],
        ),
        compare_cis("G", G_CIS),
        compare_values("egf", "E(E+)", &part_egf),
        compare_values("egf", "Part", &part_egf),
        compare_values("tgf", "E(E+)", &part_tgf),
        compare_cis("E(E+)", PART_CIS),
        compare_cis("Part", PART_CIS),
        compare_cis("L", &l_cis),
        compare_cis("1 + X*L", &l_cis),
    ])
}

fn vanishes(expr: &str, through: usize) -> Outcome {
    let lines = species_ok(&["cis", expr, "-n", &through.to_string()])?;
    for (k, line) in lines.iter().enumerate() {
        if line != &format!("{k}: 0") {
            return Err(format!("{expr}: {line}"));
        }
    }
    if lines.len() != through + 1 {
        return Err(format!("{expr}: short output"));
    }
    Ok(format!("{expr} = 0"))
}

fn inverse_pairs() -> Outcome {
    all(vec![
        vanishes("(E+)(Omega) - X", 12),
        vanishes("Omega(E+) - X", 12),
        vanishes("A(Ainv) - X", 12),
        vanishes("Ainv(A) - X", 12),
        vanishes("Omega - inv(E+)", 12),
    ])
    .map(|_| "E+∘Ω, Ω∘E+, A∘A⁻¹, A⁻¹∘A equal X; both Ω constructions agree; through 12".into())
}

fn point_determining_vs_endpoint_free() -> Outcome {
    let mut want = vec!["0"; 13];
    want[2] = "1";
    all(vec![
        compare_values(
            "tgf",
            "(Gc(Omega) - Omega + X) - (Gc(Ainv) - E2 + X*X)",
            &want,
        ),
        compare_values("tgf", "CPBP - (CBP(Ainv) - E2 + X*X)", &want),
    ])
    .map(|_| "difference is x^2 for Gc and CBP through 12".into())
}

fn oracle_equivalence() -> Outcome {
    let started = Instant::now();
    let (code, stdout) = species(&["verify", "--max-n", "5", "--verbose"])?;
    let elapsed = started.elapsed();
    let summary = stdout.lines().last().unwrap_or_default().to_string();
    if code != 0 {
        return Err(format!("verify exited {code}: {stdout}"));
    }
    if elapsed > Duration::from_secs(60) {
        return Err(format!("verify took {elapsed:?}"));
    }
    for family in [
        "G n=5", "BC@e n=5", "BC@t n=5", "BP n=5", "CBP n=5", "PBP n=5",
    ] {
        if !stdout.lines().any(|l| l == format!("ok    {family}")) {
            return Err(format!("no passing check for {family}"));
        }
    }
    Ok(summary)
}

fn functor_laws() -> Outcome {
    let report = oracle::verify_functor_laws(4).map_err(|e| e.to_string())?;
    if let Some(bad) = report.failures().next() {
        return Err(bad.to_string());
    }
    let sigma = oracle::Permutation::transposition(3, 0, 1);
    let pi = oracle::Permutation::new(vec![0, 2, 1]);
    let moved = oracle::StructureFamily::act(&oracle::Permutations, &sigma, &pi);
    if moved != oracle::Permutation::new(vec![2, 1, 0]) {
        return Err(format!("(12) sends [1,3,2] to {moved:?}"));
    }
    Ok(format!(
        "{} transport checks through n=4",
        report.checks.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 table pbp", || table("pbp", TABLE_PBP)),
        ("2 table cpbp", || table("cpbp", TABLE_CPBP)),
        ("3 PBP series spot checks", pbp_spot_checks),
        ("4 graph, partition and linear order goldens", small_goldens),
        ("5 inverse pairs", inverse_pairs),
        (
            "6 point-determining vs endpoint-free",
            point_determining_vs_endpoint_free,
        ),
        ("7 oracle equivalence", oracle_equivalence),
        ("8 functor laws", functor_laws),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why}");
            }
        }
    }
    println!("{} of 8 criteria passed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
