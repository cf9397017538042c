//! Acceptance run: one line per criterion.
//!
//! A criterion that fails only in its documented way (see "Known
//! discrepancies" in the README) is printed as FAIL but does not fail the
//! test; any other failure, or a documented one that changes, does.

mod common;

use std::io::Write;
use std::time::{Duration, Instant};

use gk_core::cocliques::{alt_graph, alt_report, alt_report_exact, clique_complement_check, report_for, theta_structure};
use gk_core::refdata::{sporadic_specs, table_specs, verify};
use gk_core::torus_oracle::compare;
use gk_core::{FactorBudget, Family, GroupSpec, Vertex};

struct Outcome {
    id: u8,
    name: &'static str,
    limit: Duration,
    elapsed: Duration,
    detail: String,
    /// Groups (or checks) that failed, in sweep order.
    failures: Vec<String>,
}

impl Outcome {
    fn passed(&self) -> bool {
        self.failures.is_empty() && self.elapsed <= self.limit
    }
}

/// Failures expected because the reference data or a quoted closed form is
/// wrong; each is argued in the README.
struct Known {
    id: u8,
    count: usize,
    sample: &'static [&'static str],
}

const KNOWN: [Known; 4] = [
    // Table 1 omits {5,7} from Θ'(M23)
    Known { id: 1, count: 1, sample: &["Spor:M23"] },
    // the closed form keeps s_n in θ when a smaller prime can replace it
    Known { id: 2, count: 374, sample: &["Alt:9", "Alt:10", "Alt:12", "Alt:993"] },
    // Table 3 puts r_4 in Θ'(²D₆(q)) although r_4 ~ r_12
    Known { id: 4, count: 18, sample: &["2D:6:2", "2D:6:3", "2D:6:32"] },
    // 5 and 17 are nonadjacent in F1
    Known { id: 8, count: 1, sample: &["Spor:F1 clique complement"] },
];

fn spec(s: &str) -> GroupSpec {
    GroupSpec::parse(s).unwrap()
}

fn timed(id: u8, name: &'static str, limit_secs: u64, f: impl FnOnce() -> (String, Vec<String>)) -> Outcome {
    let start = Instant::now();
    let (detail, failures) = f();
    Outcome { id, name, limit: Duration::from_secs(limit_secs), elapsed: start.elapsed(), detail, failures }
}

/// Verifies each spec against its table row; returns (matched, failures).
fn sweep(specs: &[GroupSpec]) -> (usize, Vec<String>) {
    let mut failures = Vec::new();
    for g in specs {
        match verify(g) {
            Ok(v) if v.passed() => {}
            Ok(v) => failures.push(v.group),
            Err(e) => failures.push(format!("{g}: {e}")),
        }
    }
    (specs.len() - failures.len(), failures)
}

fn t_of(g: &str) -> usize {
    theta_structure(&spec(g)).unwrap().1.t
}

fn criterion_1() -> Outcome {
    timed(1, "Table 1, sporadic groups", 1, || {
        let specs = sporadic_specs();
        let (ok, mut failures) = sweep(&specs);
        if t_of("Spor:J4") != 7 {
            failures.push("t(J4) != 7".into());
        }
        (format!("{ok}/{} groups match", specs.len()), failures)
    })
}

fn criterion_2() -> Outcome {
    timed(2, "Alt_n closed form vs brute force, 5 <= n <= 1000", 10, || {
        let mut failures = Vec::new();
        let mut exact_ok = 0;
        for n in 5..=1000 {
            let brute = report_for(&alt_graph(n)).unwrap();
            if brute != alt_report(n) {
                failures.push(format!("Alt:{n}"));
            }
            if brute == alt_report_exact(n) {
                exact_ok += 1;
            }
        }
        if t_of("Alt:5") != 3 || t_of("Alt:10") != 2 {
            failures.push("spot values t(Alt_5)=3, t(Alt_10)=2".into());
        }
        let detail = format!(
            "closed form matches {}/996 (t agrees everywhere); corrected form matches {exact_ok}/996",
            996 - failures.len()
        );
        (detail, failures)
    })
}

fn criterion_3() -> Outcome {
    timed(3, "Table 2, A and 2A, n <= 13, q <= 32", 120, || {
        let specs = table_specs(2, 13, 32);
        let (ok, mut failures) = sweep(&specs);
        let (_, a5) = theta_structure(&spec("A:6:2")).unwrap();
        if a5.theta != vec![Vertex::r(3), Vertex::r(4), Vertex::r(5)] || !a5.theta_prime.is_empty() {
            failures.push("A_5(2) unique coclique {r3,r4,r5}".into());
        }
        if t_of("2A:4:2") != 2 {
            failures.push("t(2A_3(2)) = 2".into());
        }
        (format!("{ok}/{} groups match", specs.len()), failures)
    })
}

fn criterion_4() -> Outcome {
    timed(4, "Table 3, B C D 2D, rank <= 19, q <= 32 (q <= 9 above rank 12)", 300, || {
        let specs: Vec<GroupSpec> = table_specs(3, 19, 32)
            .into_iter()
            .filter(|g| g.rank() <= 12 || g.field().q_u64().unwrap() <= 9)
            .collect();
        let (ok, failures) = sweep(&specs);
        (format!("{ok}/{} groups match", specs.len()), failures)
    })
}

fn criterion_5() -> Outcome {
    timed(5, "Table 4, exceptional groups, q <= 32", 120, || {
        let specs = table_specs(4, 0, 32);
        let (ok, mut failures) = sweep(&specs);
        for g in &specs {
            let want = match g.family {
                Family::E7 => 8,
                Family::E8 => 12,
                _ => continue,
            };
            if t_of(&g.to_string()) != want {
                failures.push(format!("t({g}) != {want}"));
            }
        }
        if !specs.iter().any(|g| g.to_string() == "2F4:8") {
            failures.push("2F4:8 missing from the sweep".into());
        }
        (format!("{ok}/{} groups match, t(E7)=8 and t(E8)=12 throughout", specs.len()), failures)
    })
}

fn oracle_specs() -> Vec<GroupSpec> {
    let qs = [3, 4, 5, 7, 8, 9];
    let mut out = Vec::new();
    for q in qs {
        for n in 2..=6 {
            out.push(spec(&format!("B:{n}:{q}")));
            out.push(spec(&format!("C:{n}:{q}")));
        }
        for n in 4..=6 {
            out.push(spec(&format!("D:{n}:{q}")));
            out.push(spec(&format!("2D:{n}:{q}")));
        }
    }
    for g in ["E7:2", "E7:3", "E8:2", "E8:3", "2F4:8"] {
        out.push(spec(g));
    }
    out
}

fn criterion_6() -> Outcome {
    timed(6, "criterion adjacency vs maximal tori", 600, || {
        let mut failures = Vec::new();
        let mut pairs = 0;
        let specs = oracle_specs();
        for g in &specs {
            match compare(g, false, FactorBudget::default()) {
                Ok(r) => {
                    pairs += r.pairs_checked;
                    for d in r.disagreements {
                        failures.push(format!("{g}: {} -- {} ({}, {})", d.a, d.b, d.r, d.s));
                    }
                }
                Err(e) => failures.push(format!("{g}: {e}")),
            }
        }
        (format!("{} groups, {pairs} prime pairs, {} disagreements", specs.len(), failures.len()), failures)
    })
}

fn criterion_7() -> Outcome {
    timed(7, "number-theory properties", 60, || {
        let mut failures = Vec::new();
        for (name, check) in common::ALL {
            if let Err(e) = check() {
                failures.push(format!("{name}: {e}"));
            }
        }
        (format!("{}/{} checks hold", common::ALL.len() - failures.len(), common::ALL.len()), failures)
    })
}

fn criterion_8() -> Outcome {
    timed(8, "decomposition and clique complement", 60, || {
        let mut failures = Vec::new();
        let mut specs: Vec<GroupSpec> = sporadic_specs();
        specs.extend((5..=1000).map(|n| GroupSpec::alt(n).unwrap()));
        for t in 2..=4 {
            specs.extend(table_specs(t, 19, 32));
        }
        let mut complements = 0;
        for g in &specs {
            // report_for rejects any failure of the decomposition, including |Θ'| = 1
            match theta_structure(g) {
                Ok((_, r)) if r.theta_prime.len() == 1 => failures.push(format!("{g}: |Θ'| = 1")),
                Ok(_) => {}
                Err(e) => failures.push(format!("{g}: {e}")),
            }
            match clique_complement_check(g) {
                Ok(Some(true)) => complements += 1,
                Ok(Some(false)) => failures.push(format!("{g} clique complement")),
                Ok(None) => {}
                Err(e) => failures.push(format!("{g}: {e}")),
            }
        }
        let detail = format!(
            "{} groups decompose; clique complement holds for {complements} alternating and sporadic groups",
            specs.len()
        );
        (detail, failures)
    })
}

#[test]
fn acceptance() {
    let outcomes = [
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(),
    ];
    let mut unexpected = Vec::new();
    // written to stderr directly so the lines show without --nocapture
    let mut err = std::io::stderr().lock();
    writeln!(err).unwrap();
    for o in &outcomes {
        let status = if o.passed() { "PASS" } else { "FAIL" };
        let shown: Vec<&str> = o.failures.iter().take(6).map(String::as_str).collect();
        let more = if o.failures.len() > shown.len() { format!(" (+{} more)", o.failures.len() - shown.len()) } else { String::new() };
        let failing = if shown.is_empty() { String::new() } else { format!("; failing: {}{more}", shown.join(", ")) };
        writeln!(
            err,
            "criterion {} {status} [{}] {}{failing} ({:.2} s, limit {} s)",
            o.id,
            o.name,
            o.detail,
            o.elapsed.as_secs_f64(),
            o.limit.as_secs()
        )
        .unwrap();
        if o.elapsed > o.limit {
            unexpected.push(format!("criterion {} over time", o.id));
        }
        let known = KNOWN.iter().find(|k| k.id == o.id);
        match known {
            None if !o.failures.is_empty() => unexpected.push(format!("criterion {}: {:?}", o.id, o.failures)),
            Some(k) => {
                let same = o.failures.len() == k.count && k.sample.iter().all(|s| o.failures.iter().any(|f| f == s));
                if !same {
                    unexpected.push(format!("criterion {} no longer fails as documented: {:?}", o.id, o.failures));
                }
            }
            None => {}
        }
    }
    assert!(unexpected.is_empty(), "{unexpected:#?}");
}
