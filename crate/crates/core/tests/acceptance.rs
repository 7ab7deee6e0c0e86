//! Acceptance run: one line per criterion. Criteria listed in `KNOWN_FAILURES`
//! fail for documented mathematical reasons; the run succeeds when exactly
//! those fail.

use std::process::{Command, ExitCode};
use std::time::Instant;

use wq_core::hopf::{checks as hchecks, Hopf};
use wq_core::lie::{root_label, CartanType, RootSystem, WeylElement};
use wq_core::linalg::{rat, Matrix};
use wq_core::pbw::{checks, classical, Algebra};
use wq_core::realization::{qmatrix_strings, Realization};
use wq_core::rep::{self, Action, Conjugator, RData, WeightModule};
use wq_core::slice;
use wq_core::wq::{self as wqa, IdealReducer, WhittakerCharacter};

/// Segment formula and slice identity on reflections; printed conjugator in
/// the comultiplication formula.
const KNOWN_FAILURES: &[usize] = &[2, 7, 11];

type Outcome = Result<(bool, String), String>;

fn e<E: std::fmt::Display>(x: E) -> String {
    x.to_string()
}

fn rs(ty: CartanType, rank: usize) -> RootSystem {
    RootSystem::new(ty, rank).unwrap()
}

fn coxeter(ty: CartanType, rank: usize) -> Result<Realization, String> {
    let word: Vec<usize> = (0..rank).collect();
    Realization::new(&rs(ty, rank), &word, None).map_err(e)
}

fn all_lines(lines: &[checks::CheckLine]) -> (bool, Vec<String>) {
    let bad: Vec<String> = lines.iter().filter(|l| !l.pass).map(|l| format!("{}: {}", l.name, l.detail)).collect();
    (bad.is_empty(), bad)
}

fn weyl_group(ty: CartanType, rank: usize) -> (RootSystem, Vec<Vec<usize>>) {
    let r = rs(ty, rank);
    let words = WeylElement::all(&r).iter().map(|w| w.reduced_word(&r)).collect();
    (r, words)
}

fn c1_constants() -> Outcome {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures/realization_constants.json")).map_err(e)?;
    let fixture: serde_json::Value = serde_json::from_str(&text).map_err(e)?;
    let mut bad = Vec::new();
    let mut compared = 0;
    for case in fixture.as_array().ok_or("fixture is not a list")? {
        let ty = CartanType::from_letter(case["type"].as_str().unwrap().chars().next().unwrap()).unwrap();
        let rank = case["rank"].as_u64().unwrap() as usize;
        let word: Vec<usize> = case["s"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap() as usize - 1).collect();
        let r = Realization::new(&rs(ty, rank), &word, None).map_err(e)?;
        for key in ["c", "n"] {
            let m = if key == "c" { &r.consts.c } else { &r.consts.n };
            if serde_json::json!(qmatrix_strings(m)) != case[key] {
                bad.push(format!("{} {:?} {}", r.rs.label(), case["s"], key));
            }
            compared += 1;
        }
    }
    let mut elements = 0;
    for (ty, rank) in [(CartanType::A, 2), (CartanType::B, 2)] {
        let (r, words) = weyl_group(ty, rank);
        for w in words {
            let real = Realization::new(&r, &w, None).map_err(e)?;
            let ids = real.consts.check_identities(&r);
            if !ids.is_empty() {
                bad.push(format!("{} {:?}: {}", r.label(), w, ids.join("; ")));
            }
            elements += 1;
        }
    }
    let ok = bad.is_empty();
    Ok((ok, if ok { format!("{} fixture matrices match the oracle; identities hold on {} elements of W(A2), W(B2)", compared, elements) } else { bad.join("; ") }))
}

fn c2_segment() -> Outcome {
    let mut cases: Vec<(RootSystem, Vec<usize>)> = Vec::new();
    for (ty, rank) in [(CartanType::A, 2), (CartanType::B, 2)] {
        let (r, words) = weyl_group(ty, rank);
        cases.extend(words.into_iter().map(|w| (r.clone(), w)));
    }
    cases.push((rs(CartanType::A, 3), vec![0, 1, 2]));
    let mut bad = Vec::new();
    let mut reflections = true;
    for (r, w) in &cases {
        let real = Realization::new(r, w, None).map_err(e)?;
        if real.segment_len() as i64 != real.dimm() {
            reflections &= real.lprime() == 1;
            let word: Vec<usize> = w.iter().map(|i| i + 1).collect();
            bad.push(format!("{} s={:?}: segment {} vs {}", r.label(), word, real.segment_len(), real.dimm()));
        }
    }
    let ok = bad.is_empty();
    let detail = if ok {
        format!("{} elements", cases.len())
    } else {
        let kind = if reflections { "all reflections (l' = 1)" } else { "not all reflections" };
        format!("{} of {} elements differ, {}: {}", bad.len(), cases.len(), kind, bad.join("; "))
    };
    Ok((ok, detail))
}

fn c3_rewriting() -> Outcome {
    let mut bad = Vec::new();
    let mut notes = Vec::new();
    for (ty, rank) in [(CartanType::A, 2), (CartanType::B, 2)] {
        let r = coxeter(ty, rank)?;
        let mut alg = Algebra::for_realization(&r).map_err(e)?;
        let serre = checks::serre_check(&mut alg, &r.consts.c).map_err(e)?;
        let mut std = Algebra::standard(&r.rs, &r.w0_word, alg.d).map_err(e)?;
        let braid = checks::braid_check(&mut std).map_err(e)?;
        notes.push(format!("{}: {} Serre, {} braid", r.rs.label(), serre.len(), braid.len()));
        bad.extend(all_lines(&serre).1);
        bad.extend(all_lines(&braid).1);
        if ty == CartanType::A {
            let line = checks::associativity_check(&mut alg, 200, 2024, 6).map_err(e)?;
            notes.push(line.detail.clone());
            if !line.pass {
                bad.push(line.detail);
            }
        }
    }
    Ok((bad.is_empty(), if bad.is_empty() { notes.join("; ") } else { bad.join("; ") }))
}

fn c4_ls_support() -> Outcome {
    let mut bad = Vec::new();
    let mut pairs = 0;
    for (ty, rank) in [(CartanType::A, 2), (CartanType::B, 2), (CartanType::A, 3)] {
        let r = coxeter(ty, rank)?;
        let mut alg = Algebra::for_realization(&r).map_err(e)?;
        let (rels, line) = checks::ls_check(&mut alg, Some(&r.consts.cayley)).map_err(e)?;
        pairs += rels.len();
        if !line.pass {
            bad.push(line.detail);
        }
    }
    Ok((bad.is_empty(), if bad.is_empty() { format!("{} root pairs in A2, B2, A3", pairs) } else { bad.join("; ") }))
}

fn c5_classical() -> Outcome {
    let r = coxeter(CartanType::A, 2)?;
    let mut alg = Algebra::for_realization(&r).map_err(e)?;
    let mut lines = classical::chevalley_check(&mut alg).map_err(e)?;
    lines.extend(classical::poisson_check(&mut alg, 20, 2024).map_err(e)?);
    let (ok, bad) = all_lines(&lines);
    Ok((ok, if ok { format!("{} checks, 20 Poisson triples", lines.len()) } else { bad.join("; ") }))
}

fn c6_hopf() -> Outcome {
    let r = coxeter(CartanType::A, 2)?;
    let mut h = Hopf::for_realization(&r).map_err(e)?;
    let samples = hchecks::sample_set(&h, 50, 2024);
    let mut lines = hchecks::hopf_axioms(&mut h, &samples).map_err(e)?;
    let xs: Vec<_> = samples.iter().take(8).cloned().collect();
    lines.extend(hchecks::adjoint_checks(&mut h, &xs, &samples).map_err(e)?);
    let (ok, bad) = all_lines(&lines);
    Ok((ok, if ok { format!("{} elements, {} checks", samples.len(), lines.len()) } else { bad.join("; ") }))
}

fn c7_rmatrix() -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;
    // A1 2-dimensional module, s = s1
    let r1 = coxeter(CartanType::A, 1)?;
    let mut h = Hopf::for_realization(&r1).map_err(e)?;
    let data = RData::twisted(&r1.consts.cayley);
    let m = WeightModule::a1_spin(&r1.rs, h.alg.d, 1).map_err(e)?;
    let v = Action::new(&h.alg, &m).map_err(e)?;
    for line in [rep::check_quasitriangular(&mut h, &data, &v, &v).map_err(e)?, rep::check_ybe(&mut h, &data, &v).map_err(e)?] {
        ok &= line.pass;
        notes.push(format!("{} {}", line.name, if line.pass { "ok" } else { "FAILS" }));
    }
    // A2 vector module, Coxeter element
    let r2 = coxeter(CartanType::A, 2)?;
    let mut h = Hopf::for_realization(&r2).map_err(e)?;
    let data = RData::twisted(&r2.consts.cayley);
    let m = WeightModule::a2_vector(&r2.rs, h.alg.d, false).map_err(e)?;
    let v = Action::new(&h.alg, &m).map_err(e)?;
    for line in [rep::check_quasitriangular(&mut h, &data, &v, &v).map_err(e)?, rep::check_ybe(&mut h, &data, &v).map_err(e)?] {
        ok &= line.pass;
        notes.push(format!("{} {}", line.name, if line.pass { "ok" } else { "FAILS" }));
    }
    let k = r2.ordering.iter().position(|b| b == &vec![1, 1]).ok_or("a1+a2 not in the ordering")?;
    let printed = rep::check_comult(&mut h, &data, &v, &v, k, Conjugator::Before).map_err(e)?;
    let mirrored = rep::check_comult(&mut h, &data, &v, &v, k, Conjugator::After).map_err(e)?;
    ok &= printed.pass;
    notes.push(format!(
        "Delta(e_{}) with R~ over earlier roots {}; over later roots {}",
        root_label(&r2.ordering[k]),
        if printed.pass { "holds".to_string() } else { format!("fails ({})", printed.detail) },
        if mirrored.pass { "holds" } else { "fails" }
    ));
    Ok((ok, notes.join("; ")))
}

fn c8_certificate() -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;
    for (ty, rank) in [(CartanType::A, 2), (CartanType::B, 2)] {
        let r = coxeter(ty, rank)?;
        let mut alg = Algebra::for_realization(&r).map_err(e)?;
        let (rels, line) = wqa::certify(&mut alg, &r).map_err(e)?;
        ok &= line.pass;
        notes.push(format!("{}: {}", r.rs.label(), line.detail));
        debug_assert!(!rels.is_empty());
    }
    Ok((ok, notes.join("; ")))
}

fn c9_whittaker() -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;
    for (rank, degree) in [(1, 3), (2, 2)] {
        let r = coxeter(CartanType::A, rank)?;
        let mut h = Hopf::for_realization(&r).map_err(e)?;
        let red = IdealReducer::new(&h.alg, WhittakerCharacter::ones(&r).map_err(e)?);
        let gens = wqa::torus_generators(&h.alg, &r).map_err(e)?;
        let basis = wqa::coset_basis(&h.alg, &red, &gens, degree);
        let rep = wqa::equivalence_on_basis(&mut h, &red, &basis).map_err(e)?;
        ok &= rep.disagreements.is_empty();
        notes.push(format!("A{} degree <= {}: {} cosets, {} disagreements", rank, degree, rep.cosets, rep.disagreements.len()));
    }
    Ok((ok, notes.join("; ")))
}

fn c10_l_operator() -> Outcome {
    let r = coxeter(CartanType::A, 1)?;
    let mut h = Hopf::for_realization(&r).map_err(e)?;
    let data = RData::twisted(&r.consts.cayley);
    let m = WeightModule::a1_spin(&r.rs, h.alg.d, 1).map_err(e)?;
    let v = Action::new(&h.alg, &m).map_err(e)?;
    let line = rep::l_square_check(&mut h.alg, &data, &v, 0).map_err(e)?;
    let l2 = h.alg.torus(h.alg.l_exp(0, 2).map_err(e)?);
    let orbit = rep::ad_orbit_probe(&mut h, &l2, 8).map_err(e)?;
    Ok((
        line.pass && orbit.stabilized,
        format!("entry {} ({}); orbit dims {:?}, stabilized {}", line.detail, if line.pass { "matches" } else { "differs" }, orbit.dims, orbit.stabilized),
    ))
}

fn c11_slice() -> Outcome {
    let mut bad = Vec::new();
    let (r, words) = weyl_group(CartanType::A, 2);
    let mut audits = words.len();
    for w in &words {
        let real = Realization::new(&r, w, None).map_err(e)?;
        let sd = slice::slice_audit(&real, 50, 7).map_err(e)?;
        for l in sd.lines.iter().filter(|l| !l.pass) {
            bad.push(format!("A2 s={:?} {}: {}", w.iter().map(|i| i + 1).collect::<Vec<_>>(), l.name, l.detail));
        }
    }
    // SL2 matrix audit, s = s1
    let real = coxeter(CartanType::A, 1)?;
    let sd = slice::slice_audit(&real, 50, 7).map_err(e)?;
    audits += 1;
    bad.extend(all_lines(&sd.lines).1.into_iter().map(|x| format!("SL2: {}", x)));
    let rep = slice::weyl_representative(2, &[1], &rat(1, 1)).map_err(e)?;
    let expect = Matrix::from_rows(vec![vec![rat(0, 1), rat(-1, 1)], vec![rat(1, 1), rat(0, 1)]]);
    if rep != expect {
        bad.push("SL2 Weyl representative differs from [[0,-1],[1,0]]".into());
    }
    let ok = bad.is_empty();
    Ok((ok, if ok { format!("{} audits", audits) } else { format!("{} failing lines: {}", bad.len(), bad.join("; ")) }))
}

fn c12_determinism() -> Outcome {
    let root = concat!(env!("CARGO_MANIFEST_DIR"), "/../..");
    let mut notes = Vec::new();
    let mut ok = true;
    for cfg in ["configs/a1.toml", "configs/a2.toml"] {
        let run = || {
            Command::new(env!("CARGO_BIN_EXE_wq"))
                .args(["--config", cfg, "--command", "all", "--format", "json"])
                .current_dir(root)
                .output()
                .map_err(e)
        };
        let (a, b) = (run()?, run()?);
        let same = a.stdout == b.stdout && !a.stdout.is_empty();
        ok &= same;
        notes.push(format!("{}: {} bytes, {}", cfg, a.stdout.len(), if same { "identical" } else { "differ" }));
    }
    Ok((ok, notes.join("; ")))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("realization constants", c1_constants),
        ("segment formula", c2_segment),
        ("rewriting soundness", c3_rewriting),
        ("LS support", c4_ls_support),
        ("classical limit", c5_classical),
        ("Hopf axioms", c6_hopf),
        ("R-matrix", c7_rmatrix),
        ("character certificate", c8_certificate),
        ("Whittaker equivalence", c9_whittaker),
        ("L-operator", c10_l_operator),
        ("slice ledger", c11_slice),
        ("determinism", c12_determinism),
    ];
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let n = i + 1;
        let start = Instant::now();
        let (pass, detail) = f().unwrap_or_else(|err| (false, format!("error: {}", err)));
        let secs = start.elapsed().as_secs_f64();
        println!("criterion {:>2} {:<22} {} ({:.1} s) {}", n, name, if pass { "PASS" } else { "FAIL" }, secs, detail);
        if !pass {
            failed.push(n);
        }
    }
    println!("failed: {:?}; known failures: {:?}", failed, KNOWN_FAILURES);
    if failed == KNOWN_FAILURES {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
