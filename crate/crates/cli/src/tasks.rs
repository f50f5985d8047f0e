use num_traits::Signed;
use rayon::prelude::*;
use serde_json::{json, Value};

use relmod::cyclo::{determinant_exponent, CyclicSetting};
use relmod::fpgrp::{
    a_plus_f2_generators, abelianization, orbit_stabilizer, random_finite_index_subgroup,
    stabilizer_summary, todd_coxeter, word_to_automorphism,
};
use relmod::freewords::{builtin_automorphism, nielsen_generators, parse_word, CatalogParams};
use relmod::grpring::{dixon_character_table, idempotents_from_json, rational_central_idempotents};
use relmod::linalg::{det_q, mul_z, rank_q};
use relmod::relmodule::{
    eta_matrix, expected_dimension, fox_kernel_dimension, g_action_matrix, idempotent_operator,
    isotypic_component, member_gamma_g_pi, rho_matrix, verify_eta,
};
use relmod::{
    corpus_entry, Abelianization, CorpusEntry, Endomorphism, GroupFile, GroupRingElement,
    MarkedEpimorphism, Presentation, RationalIdempotent, RelationLattice, CORPUS,
};

use crate::config::{read, ExperimentConfig};
use crate::error::{CliError, CliResult, Context};

/// Rows and failed checks produced by a task.
#[derive(Default)]
pub(crate) struct Outcome {
    pub rows: Vec<Value>,
    pub failures: Vec<String>,
}

impl Outcome {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }
}

// Schreier generators shown by `rep` when no automorphism is named.
const DEFAULT_REP_GENERATORS: usize = 8;

struct Marked {
    name: String,
    pi: MarkedEpimorphism,
}

fn marked(config: &ExperimentConfig) -> CliResult<Marked> {
    if let Some(name) = &config.corpus {
        let e = corpus_entry(name)
            .ok_or_else(|| CliError::Input(format!("unknown corpus group `{name}`")))?;
        let pi = e
            .epimorphism(config.n.unwrap_or(2))
            .context(|| format!("corpus group {name}"))?;
        return Ok(Marked {
            name: e.name.to_string(),
            pi,
        });
    }
    let path = config
        .group
        .as_ref()
        .ok_or_else(|| CliError::Input("no group given".into()))?;
    let file =
        GroupFile::from_json(&read(path)?).context(|| format!("group file {}", path.display()))?;
    if matches!(config.n, Some(n) if n != file.n) {
        return Err(CliError::Input(format!(
            "--n {} disagrees with n = {} in the group file",
            config.n.unwrap(),
            file.n
        )));
    }
    let pi = file
        .epimorphism()
        .context(|| format!("group file {}", path.display()))?;
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    Ok(Marked { name, pi })
}

fn idempotents(
    config: &ExperimentConfig,
    pi: &MarkedEpimorphism,
) -> CliResult<Vec<RationalIdempotent>> {
    match &config.idempotents {
        // a family that fails validation is bad input, not a failed check
        Some(path) => idempotents_from_json(pi.group(), &read(path)?)
            .map_err(|e| CliError::Input(format!("idempotent file {}: {e}", path.display()))),
        None => rational_central_idempotents(pi.group()).context(|| "rational idempotents".into()),
    }
}

fn images_of(pi: &MarkedEpimorphism) -> Vec<String> {
    pi.image_permutations()
        .iter()
        .map(|p| p.to_string())
        .collect()
}

/// `NAME[:ARGS]`: indices are comma separated (`lambda:1,2`), `beta` and
/// `gamma` take a word (`beta:x1 x2^-1`), `eta` takes `I:G=C,G=C,…` with
/// element indices and integer coefficients.
pub fn parse_auto(
    spec: &str,
    pi: Option<&MarkedEpimorphism>,
    rank: usize,
) -> CliResult<Endomorphism> {
    let (name, args) = match spec.split_once(':') {
        Some((n, a)) => (n.trim(), a.trim()),
        None => (spec.trim(), ""),
    };
    let bad = |msg: String| CliError::Input(format!("automorphism `{spec}`: {msg}"));
    let params = match name {
        "beta" | "gamma" => {
            CatalogParams::Word(parse_word(args, rank).map_err(|e| bad(e.to_string()))?)
        }
        "eta" => {
            let pi = pi.ok_or_else(|| bad("needs a group".into()))?;
            let (i, terms) = args
                .split_once(':')
                .ok_or_else(|| bad("expected I:G=C,…".into()))?;
            let i: usize = i
                .trim()
                .parse()
                .map_err(|_| bad(format!("bad index `{i}`")))?;
            let terms = terms
                .split(',')
                .filter(|t| !t.trim().is_empty())
                .map(|t| {
                    let (g, c) = t
                        .split_once('=')
                        .ok_or_else(|| bad(format!("bad term `{t}`")))?;
                    let g: usize = g
                        .trim()
                        .parse()
                        .map_err(|_| bad(format!("bad element `{g}`")))?;
                    let c: i64 = c
                        .trim()
                        .parse()
                        .map_err(|_| bad(format!("bad coefficient `{c}`")))?;
                    if g >= pi.group().order() {
                        return Err(bad(format!("element {g} out of range")));
                    }
                    Ok((g, c))
                })
                .collect::<CliResult<Vec<_>>>()?;
            let lattice = RelationLattice::new(pi).map_err(|e| bad(e.to_string()))?;
            let b = GroupRingElement::from_integers(pi.group().clone(), terms);
            CatalogParams::Eta {
                b,
                i,
                reps: lattice.transversal().to_vec(),
            }
        }
        _ if args.is_empty() => CatalogParams::None,
        _ => CatalogParams::Indices(
            args.split(',')
                .map(|a| {
                    a.trim()
                        .parse::<usize>()
                        .map_err(|_| bad(format!("bad index `{a}`")))
                })
                .collect::<CliResult<_>>()?,
        ),
    };
    let f = builtin_automorphism(name, &params, rank).map_err(|e| bad(e.to_string()))?;
    Ok(if f.label().is_some() {
        f
    } else {
        f.with_label(spec)
    })
}

fn autos(
    config: &ExperimentConfig,
    pi: Option<&MarkedEpimorphism>,
    rank: usize,
) -> CliResult<Vec<Endomorphism>> {
    config
        .autos
        .iter()
        .map(|s| parse_auto(s, pi, rank))
        .collect()
}

fn label(f: &Endomorphism) -> String {
    f.label()
        .map(str::to_string)
        .unwrap_or_else(|| f.to_string())
}

/// Generators acting on markings: `α, β` of `A⁺(F_2)` for `n = 2`, the
/// Nielsen generators otherwise, unless named explicitly.
fn acting_generators(
    config: &ExperimentConfig,
    pi: &MarkedEpimorphism,
) -> CliResult<Vec<Endomorphism>> {
    if !config.autos.is_empty() {
        return autos(config, Some(pi), pi.rank());
    }
    if pi.rank() == 2 {
        Ok(a_plus_f2_generators())
    } else {
        nielsen_generators(pi.rank()).context(|| "Nielsen generators".into())
    }
}

fn strings<T: ToString>(m: &[Vec<T>]) -> Vec<Vec<String>> {
    m.iter()
        .map(|r| r.iter().map(|x| x.to_string()).collect())
        .collect()
}

pub(crate) fn gaschuetz(config: &ExperimentConfig) -> CliResult<Outcome> {
    let Marked { name, pi } = marked(config)?;
    let lattice = RelationLattice::new(&pi).context(|| format!("relation lattice of {name}"))?;
    let order = pi.group().order();
    let n = pi.rank();
    let expected = 1 + order * (n - 1);
    let mut out = Outcome::default();
    out.check(lattice.rank() == expected, || {
        format!("{name}: rank {} != {expected}", lattice.rank())
    });
    let mut total = 0;
    for (k, e) in idempotents(config, &pi)?.iter().enumerate() {
        let op = idempotent_operator(&lattice, e).context(|| format!("idempotent {k}"))?;
        let dim = rank_q(&op);
        let want = expected_dimension(&lattice, e);
        let kernel = fox_kernel_dimension(&lattice, e).context(|| format!("idempotent {k}"))?;
        out.check(dim == want, || {
            format!("{name}: component {k} has dimension {dim}, expected {want}")
        });
        total += dim;
        out.rows.push(json!({
            "group": name,
            "order": order,
            "n": n,
            "rank": lattice.rank(),
            "expected_rank": expected,
            "idempotent": k,
            "trivial": e.is_trivial(),
            "algebra_dimension": e.component_dimension,
            "isotypic_dimension": dim,
            "expected_isotypic_dimension": want,
            "fox_kernel_dimension": kernel,
        }));
    }
    out.check(total == lattice.rank(), || {
        format!("{name}: components add up to {total}")
    });
    Ok(out)
}

pub(crate) fn rep(config: &ExperimentConfig) -> CliResult<Outcome> {
    let Marked { name, pi } = marked(config)?;
    let lattice = RelationLattice::new(&pi).context(|| format!("relation lattice of {name}"))?;
    let fs = if config.autos.is_empty() {
        let gens = acting_generators(config, &pi)?;
        let names: Vec<String> = gens.iter().map(label).collect();
        let orbit = orbit_stabilizer(&pi, &gens).context(|| "orbit".into())?;
        orbit
            .schreier_words
            .iter()
            .take(DEFAULT_REP_GENERATORS)
            .map(|w| {
                Ok(word_to_automorphism(w, &gens)
                    .context(|| "Schreier generator".into())?
                    .with_label(w.display_with(&names)))
            })
            .collect::<CliResult<Vec<_>>>()?
    } else {
        autos(config, Some(&pi), pi.rank())?
    };
    let actions = (0..pi.group().order())
        .map(|g| g_action_matrix(g, &lattice))
        .collect::<relmod::Result<Vec<_>>>()
        .context(|| "group action".into())?;
    let family = idempotents(config, &pi)?;
    let mut out = Outcome::default();
    for f in &fs {
        let l = label(f);
        let rho = rho_matrix(f, &lattice).context(|| format!("ρ({l})"))?;
        let det = rho.determinant();
        out.check(det.abs() == 1.into(), || format!("det ρ({l}) = {det}"));
        let equivariant = actions
            .iter()
            .all(|a| mul_z(&rho.entries, &a.entries) == mul_z(&a.entries, &rho.entries));
        out.check(equivariant, || format!("ρ({l}) is not G-equivariant"));
        let in_gamma = member_gamma_g_pi(f, &pi);
        let eta = if in_gamma {
            let eta = eta_matrix(f, &pi).context(|| format!("η({l})"))?;
            let ok = verify_eta(&eta, &rho, &lattice);
            out.check(ok.is_ok(), || {
                format!("η({l}): {}", ok.clone().unwrap_err())
            });
            Some(strings(&eta))
        } else {
            None
        };
        let mut components = Vec::new();
        for (k, e) in family.iter().enumerate() {
            let (comp, restricted) = isotypic_component(&lattice, e, std::slice::from_ref(&rho))
                .context(|| format!("component {k}"))?;
            components.push(json!({
                "idempotent": k,
                "dimension": comp.dimension(),
                "determinant": det_q(&restricted[0]).to_string(),
                "matrix": strings(&restricted[0]),
            }));
        }
        out.rows.push(json!({
            "group": name,
            "automorphism": l,
            "images": f.to_string(),
            "in_gamma_g_pi": in_gamma,
            "determinant": det.to_string(),
            "rho": strings(&rho.entries),
            "eta": eta,
            "components": components,
        }));
    }
    Ok(out)
}

pub(crate) fn orbit(config: &ExperimentConfig) -> CliResult<Outcome> {
    let Marked { name, pi } = marked(config)?;
    let gens = acting_generators(config, &pi)?;
    let o = orbit_stabilizer(&pi, &gens).context(|| format!("orbit of {name}"))?;
    let mut out = Outcome::default();
    out.rows.push(json!({
        "group": name,
        "order": pi.group().order(),
        "n": pi.rank(),
        "pi_images": images_of(&pi),
        "generators": gens.iter().map(label).collect::<Vec<_>>(),
        "orbit_size": o.size(),
        "schreier_generators": o.schreier_words.len(),
    }));
    Ok(out)
}

/// Coset enumeration of a random subgroup of the stabilizer, as in the
/// table's Δ column. `None` when no sample reached finite index.
fn random_index(
    p: &Presentation,
    gens: &[Endomorphism],
    pi: &MarkedEpimorphism,
    orbit_size: usize,
    seed: u64,
    cap: usize,
) -> CliResult<(usize, Option<usize>)> {
    let r = random_finite_index_subgroup(p, gens, pi, orbit_size, seed, cap)
        .context(|| "random subgroup".into())?;
    Ok((r.words.len(), r.index))
}

fn stabilizer(config: &ExperimentConfig, abelianize: bool) -> CliResult<Outcome> {
    let presentation = match &config.presentation {
        Some(path) => Some(
            Presentation::from_json(&read(path)?)
                .context(|| format!("presentation {}", path.display()))?,
        ),
        None => None,
    };
    let mut out = Outcome::default();
    if config.group.is_none() && config.corpus.is_none() {
        // the presented group itself
        let p = presentation.expect("validated");
        let mut row = json!({ "generators": p.names(), "relators": p.relators().len() });
        if abelianize {
            row["abelianization"] = json!(abelianization(&p).to_string());
        } else {
            let t =
                todd_coxeter(&p, &[], config.max_cosets).context(|| "coset enumeration".into())?;
            row["order"] = json!(t.index());
        }
        out.rows.push(row);
        return Ok(out);
    }
    let Marked { name, pi } = marked(config)?;
    let (p, gens) = match presentation {
        Some(p) => {
            let gens = if config.autos.is_empty() && p.rank() == 2 && pi.rank() == 2 {
                a_plus_f2_generators()
            } else {
                autos(config, Some(&pi), pi.rank())?
            };
            (p, gens)
        }
        None if pi.rank() == 2 => (Presentation::a_plus_f2(), a_plus_f2_generators()),
        None => {
            return Err(CliError::Input(
                "n > 2 needs --presentation and one --auto per presentation generator".into(),
            ))
        }
    };
    let s = stabilizer_summary(&p, &gens, &pi, config.max_cosets, abelianize)
        .context(|| format!("stabilizer of {name}"))?;
    let (sampled, random) =
        random_index(&p, &gens, &pi, s.orbit_size, config.seed, config.max_cosets)?;
    let mut row = json!({
        "group": name,
        "order": pi.group().order(),
        "pi_images": images_of(&pi),
        "orbit_size": s.orbit_size,
        "coset_index": s.coset_index,
        "schreier_generators": s.schreier_generators,
        "random_generators": sampled,
        "random_index": random,
        "random_matches_orbit": random == Some(s.orbit_size),
    });
    if let Some(ab) = s.abelianization {
        row["abelianization"] = json!(ab.to_string());
    }
    out.rows.push(row);
    Ok(out)
}

pub(crate) fn tc(config: &ExperimentConfig) -> CliResult<Outcome> {
    stabilizer(config, false)
}

pub(crate) fn abelianize(config: &ExperimentConfig) -> CliResult<Outcome> {
    stabilizer(config, true)
}

pub(crate) fn cyclic_sigma(config: &ExperimentConfig) -> CliResult<Outcome> {
    let m = config.m.expect("validated");
    let n = config.n.unwrap_or(3);
    let setting = CyclicSetting::new(m, n).context(|| format!("F_{n} → C_{m}"))?;
    let divisors = match config.d {
        Some(d) => vec![d],
        None => setting.divisors(),
    };
    let gens = if config.autos.is_empty() {
        setting
            .stabilizer_generators()
            .context(|| "stabilizer generators".into())?
    } else {
        autos(config, Some(setting.epimorphism()), n)?
    };
    let mut out = Outcome::default();
    for &d in &divisors {
        for f in &gens {
            let l = label(f);
            let s = setting.sigma(f, d).context(|| format!("σ_{d}({l})"))?;
            let exponent = determinant_exponent(&s);
            out.check(exponent.is_some(), || {
                format!(
                    "σ_{d}({l}) has determinant {}, not a root of unity",
                    s.determinant()
                )
            });
            out.rows.push(json!({
                "m": m,
                "n": n,
                "d": d,
                "automorphism": l,
                "sigma": s.to_strings(),
                "determinant": s.determinant().to_string(),
                "determinant_exponent": exponent,
            }));
        }
    }
    Ok(out)
}

pub(crate) fn chartab(config: &ExperimentConfig) -> CliResult<Outcome> {
    let Marked { name, pi } = marked(config)?;
    let g = pi.group();
    let table = dixon_character_table(g).context(|| format!("character table of {name}"))?;
    let mut out = Outcome::default();
    if let Err(e) = table.verify(g) {
        out.failures.push(format!("character table: {e}"));
    }
    let reps: Vec<String> = table
        .classes
        .iter()
        .map(|c| g.element(c[0]).to_string())
        .collect();
    for (k, row) in table.values.iter().enumerate() {
        out.rows.push(json!({
            "group": name,
            "kind": "character",
            "index": k,
            "degree": table.degrees[k],
            "class_representatives": reps,
            "class_sizes": table.class_sizes(),
            "values": row.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        }));
    }
    for (k, e) in idempotents(config, &pi)?.iter().enumerate() {
        out.rows.push(json!({
            "group": name,
            "kind": "idempotent",
            "index": k,
            "dimension": e.component_dimension,
            "element": e.element.to_string(),
        }));
    }
    Ok(out)
}

fn table_row(e: &CorpusEntry, config: &ExperimentConfig) -> CliResult<Value> {
    let pi = e.epimorphism(2).context(|| e.name.to_string())?;
    let p = Presentation::a_plus_f2();
    let gens = a_plus_f2_generators();
    let s = stabilizer_summary(&p, &gens, &pi, config.max_cosets, true)
        .context(|| format!("stabilizer of {}", e.name))?;
    // each row draws from its own stream, so a single row reproduces its full-table value
    let row_seed = config
        .seed
        .wrapping_add(CORPUS.iter().position(|c| c.name == e.name).unwrap_or(0) as u64);
    let (_, random) = random_index(&p, &gens, &pi, s.orbit_size, row_seed, config.max_cosets)?;
    let ab = s.abelianization.expect("requested");
    let table_ab = Abelianization::parse(e.abelianization).expect("corpus strings parse");
    Ok(json!({
        "group": e.name,
        "order": e.order,
        "pi_x": e.images[0],
        "pi_y": e.images[1],
        "index": s.coset_index,
        "abelianization": ab.to_string(),
        "orbit_size": s.orbit_size,
        "random_index": random,
        "table_index": e.index,
        "table_abelianization": e.abelianization,
        "matches_table": s.coset_index == e.index && ab == table_ab,
    }))
}

/// Rows for the built-in corpus. Disagreements with the reference values
/// are reported in `matches_table`; they are not assertion failures.
pub(crate) fn table_n2(config: &ExperimentConfig) -> CliResult<Outcome> {
    let entries: Vec<&CorpusEntry> = match &config.corpus {
        Some(name) => vec![corpus_entry(name)
            .ok_or_else(|| CliError::Input(format!("unknown corpus group `{name}`")))?],
        None => CORPUS.iter().collect(),
    };
    let rows = entries
        .par_iter()
        .map(|e| table_row(e, config))
        .collect::<CliResult<Vec<_>>>()?;
    Ok(Outcome {
        rows,
        failures: Vec::new(),
    })
}
