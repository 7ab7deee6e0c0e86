use super::config::{parse_rational, SessionConfig};
use super::{Record, Section, Status};
use crate::coeff::Coeff;
use crate::hopf::{checks as hchecks, Hopf};
use crate::lie::{root_label, RootSystem};
use crate::pbw::{checks, classical, Algebra, Form};
use crate::realization::{qmatrix_strings, Realization};
use crate::rep::{self, Action, Conjugator, RData, WeightModule};
use crate::slice;
use crate::wq::{self, IdealReducer, WhittakerCharacter};
use serde_json::json;

type Res<T> = Result<T, String>;

fn e<E: std::fmt::Display>(x: E) -> String {
    x.to_string()
}

pub fn run_section(command: &str, cfg: &SessionConfig) -> Res<Section> {
    let rs = RootSystem::new(cfg.ty().map_err(e)?, cfg.rank).map_err(e)?;
    let (checks, data) = match command {
        "root-system" => root_system(&rs),
        "realization" => realization(&rs, cfg)?,
        "algebra-check" => algebra_check(&rs, cfg)?,
        "rmatrix-check" => rmatrix_check(&rs, cfg)?,
        "wq" => wq_section(&rs, cfg)?,
        "slice" => slice_section(&rs, cfg)?,
        other => return Err(format!("no section {}", other)),
    };
    Ok(Section { command: command.into(), checks, data, elapsed_ms: None })
}

fn realize(rs: &RootSystem, cfg: &SessionConfig) -> Res<Realization> {
    let w0 = cfg.w0_word();
    Realization::new(rs, &cfg.s_word(), w0.as_deref()).map_err(e)
}

fn labels(roots: &[Vec<i64>]) -> Vec<String> {
    roots.iter().map(|r| root_label(r)).collect()
}

fn root_system(rs: &RootSystem) -> (Vec<Record>, serde_json::Value) {
    let d = rs.num_positive();
    let checks = vec![Record::new(
        "dim g = 2 D + l",
        if rs.dimension() == 2 * d + rs.rank { Status::Pass } else { Status::Fail },
        format!("D = {}, dim g = {}", d, rs.dimension()),
    )];
    let data = json!({
        "label": rs.label(),
        "rank": rs.rank,
        "D": d,
        "dim": rs.dimension(),
        "cartan": rs.cartan,
        "symmetrizer": rs.d,
        "positive_roots": labels(&rs.positive),
    });
    (checks, data)
}

fn realization(rs: &RootSystem, cfg: &SessionConfig) -> Res<(Vec<Record>, serde_json::Value)> {
    let r = realize(rs, cfg)?;
    let bad = r.consts.check_identities(rs);
    let mut checks = vec![Record::new(
        "twist constants: skewness and c_ij identities",
        if bad.is_empty() { Status::Pass } else { Status::Fail },
        if bad.is_empty() { "all identities hold".to_string() } else { bad.join("; ") },
    )];
    checks.push(Record::new(
        "|Delta_m+| = D - ((l(s) - l')/2 + D_0)",
        if r.segment_len() as i64 == r.dimm() { Status::Pass } else { Status::Fail },
        format!("segment {} vs formula {}", r.segment_len(), r.dimm()),
    ));
    checks.push(Record::new(
        "gamma_1 .. gamma_n simple",
        if r.simple_flag { Status::Pass } else { Status::Inconclusive },
        format!("{:?}", labels(&r.gammas[..r.n_first])),
    ));
    let data = json!({
        "s_word": r.s_input.reduced_word(rs).iter().map(|i| i + 1).collect::<Vec<_>>(),
        "conjugator_word": r.assoc.conjugator_word.iter().map(|i| i + 1).collect::<Vec<_>>(),
        "w0_word": r.w0_word.iter().map(|i| i + 1).collect::<Vec<_>>(),
        "gammas": labels(&r.gammas),
        "n_first": r.n_first,
        "ordering": labels(&r.ordering),
        "segment": r.segment.map(|(lo, hi)| vec![lo + 1, hi + 1]),
        "length": r.length,
        "D0": r.d0,
        "lprime": r.lprime(),
        "d": r.consts.d,
        "c": qmatrix_strings(&r.consts.c),
        "n": qmatrix_strings(&r.consts.n),
        "p": qmatrix_strings(&r.consts.p),
        "cayley": qmatrix_strings(&r.consts.cayley),
    });
    Ok((checks, data))
}

fn algebra_check(rs: &RootSystem, cfg: &SessionConfig) -> Res<(Vec<Record>, serde_json::Value)> {
    let r = realize(rs, cfg)?;
    let b = &cfg.bounds;
    let mut alg = Algebra::for_realization(&r).map_err(e)?;
    let mut out: Vec<Record> = Vec::new();
    let c = r.consts.c.clone();
    out.extend(checks::serre_check(&mut alg, &c).map_err(e)?.into_iter().map(Record::from));
    let mut std = Algebra::standard(rs, &r.w0_word, alg.d).map_err(e)?;
    out.extend(checks::braid_check(&mut std).map_err(e)?.into_iter().map(Record::from));
    let (rels, ls) = checks::ls_check(&mut alg, Some(&r.consts.cayley)).map_err(e)?;
    out.push(ls.into());
    out.extend(checks::graded_check(&mut alg, Some(&r.consts.cayley)).map_err(e)?.into_iter().map(Record::from));
    out.push(checks::containment_check(&mut alg).map_err(e)?.into());
    out.push(checks::associativity_check(&mut alg, b.assoc_triples, cfg.seed, b.assoc_degree).map_err(e)?.into());
    out.extend(classical::chevalley_check(&mut alg).map_err(e)?.into_iter().map(Record::from));
    out.extend(classical::poisson_check(&mut alg, b.poisson_triples, cfg.seed).map_err(e)?.into_iter().map(Record::from));
    let mut h = Hopf::for_realization(&r).map_err(e)?;
    let samples = hchecks::sample_set(&h, b.hopf_samples, cfg.seed);
    out.extend(hchecks::hopf_axioms(&mut h, &samples).map_err(e)?.into_iter().map(Record::from));
    let xs: Vec<_> = samples.iter().take(2 * rs.rank).cloned().collect();
    out.extend(hchecks::adjoint_checks(&mut h, &xs, &samples).map_err(e)?.into_iter().map(Record::from));
    out.push(hchecks::antipode_square(&mut h).map_err(e)?.into());
    if let Some((lo, hi)) = r.segment {
        for k in lo..=hi {
            let name = format!("Delta(e_{}) in U(m+) (x) U(b+)", root_label(&r.ordering[k]));
            match h.cm1_check(k) {
                Ok(cm) => out.push(Record::new(
                    name,
                    if cm.after && cm.right_b { Status::Pass } else { Status::Fail },
                    format!("corrections on later segment roots: {}, on earlier: {}", cm.after, cm.before),
                )),
                Err(err) => out.push(Record::inconclusive(name, err.to_string())),
            }
        }
    }
    let data = json!({ "ls_relations": rels });
    Ok((out, data))
}

fn named_module(rs: &RootSystem, d: i64) -> Option<(String, WeightModule)> {
    use crate::lie::CartanType;
    match (rs.ty, rs.rank) {
        (CartanType::A, 1) => WeightModule::a1_spin(rs, d, 1).ok().map(|m| ("spin 1/2".to_string(), m)),
        (CartanType::A, 2) => WeightModule::a2_vector(rs, d, false).ok().map(|m| ("vector".to_string(), m)),
        _ => None,
    }
}

/// Only the A2 dual vector module is needed beyond `named_module`.
fn fundamental_module(rs: &RootSystem, d: i64, i: usize) -> Result<WeightModule, rep::RepError> {
    debug_assert!(i == 1 && rs.rank == 2);
    WeightModule::a2_vector(rs, d, true)
}

fn rmatrix_check(rs: &RootSystem, cfg: &SessionConfig) -> Res<(Vec<Record>, serde_json::Value)> {
    let r = realize(rs, cfg)?;
    let mut h = Hopf::for_realization(&r).map_err(e)?;
    let data = RData::twisted(&r.consts.cayley);
    let Some((label, m)) = named_module(rs, h.alg.d) else {
        let why = format!("no finite-dimensional module is built in for {}", rs.label());
        return Ok((vec![Record::inconclusive("R-matrix checks", why)], json!({ "module": null })));
    };
    let mut out = Vec::new();
    let rel = m.check_relations();
    out.push(Record::new(
        format!("{} module satisfies the defining relations", label),
        if rel.failures.is_empty() { Status::Pass } else { Status::Fail },
        if rel.failures.is_empty() { format!("dim {}", m.dim()) } else { rel.failures.join("; ") },
    ));
    let act = Action::new(&h.alg, &m).map_err(e)?;
    out.push(rep::check_quasitriangular(&mut h, &data, &act, &act).map_err(e)?.into());
    out.push(rep::check_ybe(&mut h, &data, &act).map_err(e)?.into());
    let n = h.alg.nroots();
    for (which, name) in [
        (Conjugator::Before, "comultiplication of e_beta_k by conjugation with R~ over roots before beta_k"),
        (Conjugator::After, "comultiplication of e_beta_k by conjugation with R~ over roots after beta_k"),
    ] {
        let mut bad = Vec::new();
        for k in 0..n {
            let line = rep::check_comult(&mut h, &data, &act, &act, k, which).map_err(e)?;
            if !line.pass {
                bad.push(format!("k = {}: {}", k + 1, line.detail));
            }
        }
        let detail = if bad.is_empty() { format!("all {} root vectors", n) } else { bad.join("; ") };
        out.push(Record::new(name, if bad.is_empty() { Status::Pass } else { Status::Fail }, detail));
    }
    let mut orbits = Vec::new();
    for i in 0..rs.rank {
        // L_i^2 sits in the module whose highest weight is the i-th fundamental weight
        let fm = if i == 0 { m.clone() } else { fundamental_module(rs, h.alg.d, i).map_err(e)? };
        let fact = Action::new(&h.alg, &fm).map_err(e)?;
        out.push(rep::l_square_check(&mut h.alg, &data, &fact, i).map_err(e)?.into());
        let l2 = h.alg.torus(h.alg.l_exp(i, 2).map_err(e)?);
        let orbit = rep::ad_orbit_probe(&mut h, &l2, cfg.bounds.orbit_bound).map_err(e)?;
        let name = format!("Ad-orbit of L_{}^2 is finite-dimensional", i + 1);
        let detail = format!("span dimensions {:?} within {} steps", orbit.dims, orbit.bound);
        out.push(if orbit.stabilized {
            Record::new(name, Status::Pass, detail)
        } else {
            Record::inconclusive(name, detail)
        });
        orbits.push(orbit);
    }
    let lv = rep::l_operator(&mut h.alg, &data, &act).map_err(e)?;
    let entries: Vec<Vec<String>> =
        (0..lv.n).map(|a| (0..lv.n).map(|b| lv.get(a, b).render(Form::Standard)).collect()).collect();
    Ok((out, json!({ "module": label, "dim": m.dim(), "l_operator": entries, "orbits": orbits })))
}

fn character(r: &Realization, cfg: &SessionConfig) -> Res<WhittakerCharacter> {
    match &cfg.k {
        Some(ks) => WhittakerCharacter::new(r, ks.iter().map(|&k| Coeff::from_int(k)).collect()).map_err(e),
        None => WhittakerCharacter::ones(r).map_err(e),
    }
}

fn wq_section(rs: &RootSystem, cfg: &SessionConfig) -> Res<(Vec<Record>, serde_json::Value)> {
    let r = realize(rs, cfg)?;
    let mut h = Hopf::for_realization(&r).map_err(e)?;
    let b = &cfg.bounds;
    let mut out = Vec::new();
    let (rels, line) = match wq::certify(&mut h.alg, &r) {
        Ok(x) => x,
        Err(err) => return Ok((vec![Record::inconclusive("character certificate", err.to_string())], json!(null))),
    };
    out.push(line.into());
    let chi = character(&r, cfg)?;
    let red = IdealReducer::new(&h.alg, chi);
    let gens = wq::torus_generators(&h.alg, &r).map_err(e)?;
    let mut data = json!({ "relations": rels });
    let basis = wq::coset_basis(&h.alg, &red, &gens, b.whittaker_degree);
    match wq::equivalence_on_basis(&mut h, &red, &basis) {
        Ok(eq) => {
            out.push(wq::invariants::equivalence_line(&format!("degree <= {}", b.whittaker_degree), &eq).into());
            data["equivalence"] = json!(eq);
        }
        Err(err) => out.push(Record::inconclusive("Whittaker test <=> Ad invariance", err.to_string())),
    }
    let basis = wq::coset_basis(&h.alg, &red, &gens, b.invariant_degree);
    match wq::w_elements(&mut h, &red, &basis) {
        Ok((inv, rep)) => {
            out.push(Record::new(
                "W-invariants are Ad-invariant",
                if rep.ad_agrees { Status::Pass } else { Status::Fail },
                format!("{} invariants among {} cosets", rep.invariants.len(), rep.cosets),
            ));
            out.push(Record::new(
                "products of W-invariants stay invariant",
                if rep.products_invariant { Status::Pass } else { Status::Fail },
                "reduced products pass the Whittaker test",
            ));
            data["specialized"] = json!(specialize(&inv, &cfg.specialize));
            data["invariants"] = json!(rep);
        }
        Err(err) => out.push(Record::inconclusive("W-invariants", err.to_string())),
    }
    let mut wh = Vec::new();
    let mut mods = vec![("trivial".to_string(), WeightModule::trivial(rs, h.alg.d))];
    mods.extend(named_module(rs, h.alg.d));
    for (label, m) in &mods {
        match wq::wh_of_module(&mut h.alg, &red, m) {
            Ok(k) => wh.push(json!({ "module": label, "whittaker_dim": k.len() })),
            Err(err) => wh.push(json!({ "module": label, "error": err.to_string() })),
        }
    }
    data["whittaker_vectors"] = json!(wh);
    Ok((out, data))
}

/// Each invariant with `v` set to the given rational points.
fn specialize(inv: &[crate::pbw::Elem], points: &[String]) -> Vec<serde_json::Value> {
    let mut out = Vec::new();
    for p in points {
        let Some(x) = parse_rational(p) else { continue };
        let elems: Vec<String> = inv
            .iter()
            .map(|el| {
                let mut parts = Vec::new();
                for (m, c) in &el.terms {
                    match c.specialize(&x) {
                        Ok(val) if val == num_rational::BigRational::from_integer(0.into()) => {}
                        Ok(val) => parts.push(format!("({})*{}", val, m.label(Form::ERight))),
                        Err(err) => parts.push(format!("[{}]*{}", err, m.label(Form::ERight))),
                    }
                }
                if parts.is_empty() { "0".to_string() } else { parts.join(" + ") }
            })
            .collect();
        out.push(json!({ "v": p, "invariants": elems }));
    }
    out
}

fn slice_section(rs: &RootSystem, cfg: &SessionConfig) -> Res<(Vec<Record>, serde_json::Value)> {
    let r = realize(rs, cfg)?;
    let sd = slice::slice_audit(&r, cfg.bounds.slice_samples, cfg.seed).map_err(e)?;
    let checks = sd.lines.iter().cloned().map(Record::from).collect();
    let mut data = json!(sd);
    data.as_object_mut().map(|o| o.remove("lines"));
    Ok((checks, data))
}
