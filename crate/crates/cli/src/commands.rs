//! One function per subcommand.

use anyhow::{anyhow, bail};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use vanishing_core::arithmetic::{
    doubling_bound, find_small_arithmetic_set, is_r_arithmetic, min_arithmetic_set,
    size_lower_bound,
};
use vanishing_core::covers::{c_vanishing_by_cover, Coset, CosetCover};
use vanishing_core::covers::{check_phi_bound, find_efficient_cover, phi_exact, phi_pn_maximal};
use vanishing_core::decomposition::additive_basis_decompose;
use vanishing_core::group_ring::{
    c_irredundant_witness, extract_irredundant_indices, is_c_vanishing, is_fp_irredundant,
    is_fp_vanishing,
};
use vanishing_core::linear_maps::{
    arithmetic_size, check_contradiction_condition, check_pigeonhole_bound, failure_certificate,
    find_witness, hypothesis_holds, random_invertible, ChoiceSystem, CoverCertificate,
};
use vanishing_core::{
    AbelianGroup, ArithmeticVerdict, Error, FpMultiset, FpVector, Limits, PrimeModulus, Subgroup,
    TwistAssignment,
};

use crate::input::{self, ChoiceSpec};
use crate::{
    acceptance, AcceptanceArgs, AjtArgs, ArithmeticArgs, FileArgs, GlobalArgs, MultisetArgs,
    Outcome, PhiArgs, Report, UsageError,
};

fn need<T: Copy>(value: Option<T>, flag: &str) -> anyhow::Result<T> {
    value.ok_or_else(|| UsageError(format!("--{flag} is required here")).into())
}

fn coords(v: &FpVector) -> Value {
    json!(v.coords())
}

fn vectors(v: &FpMultiset) -> Value {
    Value::Array(v.iter().map(coords).collect())
}

fn twist(t: &Option<TwistAssignment>) -> Value {
    match t {
        Some(t) => json!(t.values()),
        None => Value::Null,
    }
}

// --- arithmetic-set -------------------------------------------------------

pub fn arithmetic_set(g: &GlobalArgs, args: &ArithmeticArgs) -> anyhow::Result<Outcome> {
    let primes = match &args.primes {
        Some(spec) => input::prime_list(spec)?,
        None => vec![need(g.p, "p")?],
    };
    let modes = [args.set.is_some(), args.min, args.search]
        .iter()
        .filter(|&&m| m)
        .count();
    if modes != 1 {
        bail!(UsageError(
            "choose exactly one of --set, --min, --search".into()
        ));
    }
    let limits = g.limits();
    let r = g.r.unwrap_or(1);
    let mut rows = Vec::new();
    let mut ok = true;
    for &p in &primes {
        let q = input::prime(p)?;
        let row = if let Some(spec) = &args.set {
            check_set(q, r, spec)?
        } else if args.min {
            let set = min_arithmetic_set(q, r, &limits)?;
            json!({"p": p, "r": r, "size": set.len(), "set": set.elements(), "lower_bound": size_lower_bound(q)})
        } else {
            match find_small_arithmetic_set(q, g.seed, &limits) {
                Ok(set) => {
                    if !is_r_arithmetic(set.elements(), 1, q)?.is_arithmetic() {
                        return Err(Error::Invariant(format!(
                            "search result for p = {p} fails the check"
                        ))
                        .into());
                    }
                    let bound = doubling_bound(q);
                    json!({"p": p, "size": set.len(), "set": set.elements(), "doubling_bound": bound,
                           "within_bound": set.len() <= bound})
                }
                Err(Error::SearchFailed(msg)) if primes.len() > 1 => {
                    ok = false;
                    json!({"p": p, "size": null, "error": msg})
                }
                Err(e) => return Err(e.into()),
            }
        };
        rows.push(row);
    }
    let mut report = Report::new("arithmetic-set");
    if rows.len() == 1 {
        if let Value::Object(m) = rows.pop().expect("one row") {
            for (k, v) in m {
                report.set(&k, v);
            }
        }
    } else {
        report.set("results", Value::Array(rows));
    }
    Ok(Outcome { report, ok })
}

fn check_set(p: PrimeModulus, r: u32, spec: &str) -> anyhow::Result<Value> {
    let mut set: Vec<u32> = input::residue_list(spec)?
        .into_iter()
        .map(|a| p.reduce(a))
        .collect();
    set.sort_unstable();
    set.dedup();
    let verdict = is_r_arithmetic(&set, r, p)?;
    let failing = match &verdict {
        ArithmeticVerdict::Fails { element } => json!(element),
        ArithmeticVerdict::Arithmetic(_) => Value::Null,
    };
    Ok(
        json!({"p": p.get(), "r": r, "set": set, "arithmetic": verdict.is_arithmetic(), "failing_element": failing}),
    )
}

// --- vanishing / irredundant ----------------------------------------------

struct MultisetInput {
    v: FpMultiset,
    r: u32,
}

fn read_multiset(g: &GlobalArgs, args: &MultisetArgs) -> anyhow::Result<MultisetInput> {
    let (p, n, rows, r) = match (&args.input, &args.vectors) {
        (Some(path), _) => {
            let f: input::MultisetFile = input::read_file(path)?;
            (f.p, f.n, f.vectors, f.r.or(g.r))
        }
        (None, Some(spec)) => {
            let rows = input::inline_vectors(spec)?;
            let n = match g.n {
                Some(n) => n,
                None => rows.first().map(Vec::len).unwrap_or(1),
            };
            (need(g.p, "p")?, n, rows, g.r)
        }
        (None, None) => bail!(UsageError("give --input or --vectors".into())),
    };
    let q = input::prime(p)?;
    g.limits().ring_size(q, n)?;
    Ok(MultisetInput {
        v: input::multiset(q, n, &rows)?,
        r: r.unwrap_or(1),
    })
}

pub fn vanishing(g: &GlobalArgs, args: &MultisetArgs) -> anyhow::Result<Outcome> {
    let MultisetInput { v, r } = read_multiset(g, args)?;
    let limits = g.limits();
    let p = v.modulus().get() as usize;
    let mut report = Report::new("vanishing")
        .with("p", p)
        .with("n", v.dim())
        .with("r", r)
        .with("size", v.len())
        .with("threshold", ((p - 1) * v.dim() + 1).div_ceil(r as usize))
        .with("fp_vanishing", is_fp_vanishing(&v, r, &limits)?);
    let mut ok = true;
    if args.complex {
        let by_product = is_c_vanishing(&v, r, &limits)?;
        let by_cover = c_vanishing_by_cover(&v, &limits)?;
        let agree = by_product == by_cover;
        ok = agree;
        report.set("c_vanishing", by_product.is_some());
        report.set("twist", twist(&by_product));
        report.set("cover_twist", twist(&by_cover));
        report.set("agree", agree);
    }
    Ok(Outcome { report, ok })
}

pub fn irredundant(g: &GlobalArgs, args: &MultisetArgs) -> anyhow::Result<Outcome> {
    let MultisetInput { v, r } = read_multiset(g, args)?;
    let limits = g.limits();
    let vanishing = is_fp_vanishing(&v, r, &limits)?;
    let mut report = Report::new("irredundant")
        .with("p", v.modulus().get())
        .with("n", v.dim())
        .with("r", r)
        .with("fp_vanishing", vanishing)
        .with(
            "fp_irredundant",
            vanishing && is_fp_irredundant(&v, r, &limits)?,
        );
    if vanishing {
        let keep = extract_irredundant_indices(&v, r, &limits)?;
        let core = v.select(&keep);
        if !is_fp_irredundant(&core, r, &limits)? {
            return Err(Error::Invariant("extracted subset is not irredundant".into()).into());
        }
        report.set("indices", json!(keep));
        report.set("extracted", vectors(&core));
    }
    if args.complex {
        report.set("c_witness", twist(&c_irredundant_witness(&v, r, &limits)?));
    }
    Ok(Outcome::ok(report))
}

// --- decompose ------------------------------------------------------------

pub fn decompose(g: &GlobalArgs, args: &FileArgs) -> anyhow::Result<Outcome> {
    let f: input::DecomposeFile = input::read_file(&args.input)?;
    let limits = g.limits();
    let p = input::prime(f.p)?;
    limits.ring_size(p, f.n)?;
    let bases = f
        .bases
        .iter()
        .map(|b| input::multiset(p, f.n, b))
        .collect::<anyhow::Result<Vec<_>>>()?;
    let mut a: Vec<u32> = f.a.iter().map(|&x| p.reduce(x)).collect();
    a.sort_unstable();
    a.dedup();
    let set = is_r_arithmetic(&a, f.r, p)?
        .into_set()
        .ok_or_else(|| UsageError(format!("A = {a:?} is not {}-arithmetic mod {p}", f.r)))?;
    let mut reps = Vec::new();
    for raw in &f.targets {
        let w = input::vector(p, f.n, raw)?;
        let rep = additive_basis_decompose(&w, &bases, &set, f.r, &limits)?;
        let mut sum = FpVector::zero(p, f.n);
        for (b, &c) in bases.iter().flat_map(|b| b.iter()).zip(rep.coefficients()) {
            sum = sum.add_scaled(b, c);
        }
        if sum != w || !rep.coefficients().iter().all(|&c| set.contains(c)) {
            return Err(Error::Invariant(format!(
                "representation of {raw:?} failed re-verification"
            ))
            .into());
        }
        reps.push(json!({"target": coords(&w), "coefficients": rep.coefficients(), "iterations": rep.iterations()}));
    }
    let report = Report::new("decompose")
        .with("p", p.get())
        .with("n", f.n)
        .with("r", f.r)
        .with("A", json!(set.elements()))
        .with("representations", Value::Array(reps));
    Ok(Outcome::ok(report))
}

// --- phi / covers ---------------------------------------------------------

fn cover_json(cover: &CosetCover) -> Value {
    let g = cover.group();
    Value::Array(
        cover
            .cosets()
            .iter()
            .map(|c| {
                let gens: Vec<Vec<u32>> =
                    c.subgroup().gens().iter().map(|&x| g.coords(x)).collect();
                json!({"subgroup_gens": gens, "rep": g.coords(c.rep())})
            })
            .collect(),
    )
}

fn verify_trivial_cover(cover: &CosetCover) -> anyhow::Result<()> {
    if !cover.is_irredundant_cover() || !cover.intersection_subgroup().is_trivial() {
        return Err(Error::Invariant(
            "witness is not an irredundant cover with trivial intersection".into(),
        )
        .into());
    }
    Ok(())
}

pub fn phi(g: &GlobalArgs, args: &PhiArgs) -> anyhow::Result<Outcome> {
    let limits = g.limits();
    if args.maximal {
        let p = need(g.p, "p")?;
        let n = need(g.n, "n")?;
        let q = input::prime(p)?;
        let (k, cover) = phi_pn_maximal(q.get(), n, &limits)?;
        verify_trivial_cover(&cover)?;
        if !cover.is_efficient() {
            return Err(Error::Invariant("witness is not efficient".into()).into());
        }
        let mut report = Report::new("phi")
            .with("p", p)
            .with("n", n)
            .with("maximal", true)
            .with("phi", k)
            .with("witness", cover_json(&cover));
        if q.get() <= limits.max_exhaustive_prime {
            let s = min_arithmetic_set(q, 1, &limits)?.len();
            report.set("s", s);
            report.set("size_bound", check_phi_bound(k, q.get(), n, s as u64));
        }
        return Ok(Outcome::ok(report));
    }
    let factors = match (&args.factors, &args.input) {
        (Some(spec), _) => input::factor_list(spec)?,
        (None, Some(path)) => input::read_file::<input::GroupFile>(path)?.factors,
        (None, None) => bail!(UsageError("give --factors, --input or --maximal".into())),
    };
    let group = AbelianGroup::new(factors, &limits)?;
    let (k, cover) = phi_exact(&group, &limits)?;
    verify_trivial_cover(&cover)?;
    let largest_prime = group.prime_divisors().into_iter().max().unwrap_or(1);
    let report = Report::new("phi")
        .with("group", json!(group.factors()))
        .with("phi", k)
        .with("witness", cover_json(&cover))
        .with("at_least_every_prime", k >= largest_prime as usize)
        .with(
            "efficient_cover_exists",
            find_efficient_cover(&group, &limits)?.is_some(),
        );
    Ok(Outcome::ok(report))
}

pub fn covers_check(g: &GlobalArgs, args: &FileArgs) -> anyhow::Result<Outcome> {
    let f: input::CoversFile = input::read_file(&args.input)?;
    let limits = g.limits();
    let group = AbelianGroup::new(f.factors.clone(), &limits)?;
    let mut cosets = Vec::new();
    for c in &f.cosets {
        let gens = c
            .gens
            .iter()
            .map(|x| group.index(x))
            .collect::<vanishing_core::Result<Vec<_>>>()?;
        let h = Subgroup::generated(&group, &gens);
        cosets.push(Coset::new(&group, h, group.index(&c.rep)?)?);
    }
    let cover = CosetCover::new(group.clone(), cosets)?;
    let irredundant = cover.is_irredundant_cover();
    let claim = if irredundant {
        json!(cover.check_subcover_claim()?)
    } else {
        Value::Null
    };
    let report = Report::new("covers check")
        .with("group", json!(group.factors()))
        .with("cosets", cover.len())
        .with("cover", cover.is_cover())
        .with("irredundant", irredundant)
        .with("intersection_index", cover.intersection_index())
        .with("efficient", cover.is_efficient())
        .with("subcover_claim", claim);
    Ok(Outcome::ok(report))
}

// --- ajt ------------------------------------------------------------------

fn certificate_json(cert: &CoverCertificate) -> Value {
    let triples: Vec<Value> = cert
        .triples()
        .iter()
        .map(|&(i, j, t)| json!([i, j, t]))
        .collect();
    let normals: Vec<Value> = cert.instance().normals().iter().map(coords).collect();
    let offsets: Vec<u32> = cert.triples().iter().map(|&(_, _, t)| t).collect();
    json!({"J": triples, "normals": normals, "offsets": offsets, "span_dim": cert.span_dim()})
}

fn choice_system(f: &input::AjtFile, limits: &Limits) -> anyhow::Result<ChoiceSystem> {
    let p = input::prime(f.p)?;
    limits.ring_size(p, f.n)?;
    let matrices = f
        .matrices
        .iter()
        .map(|m| {
            m.iter()
                .map(|row| input::vector(p, f.n, row))
                .collect::<anyhow::Result<Vec<_>>>()
        })
        .collect::<anyhow::Result<Vec<_>>>()?;
    Ok(match &f.x {
        ChoiceSpec::Keyword(k) if k == "nonzero" => ChoiceSystem::nonzero(p, f.n, matrices)?,
        ChoiceSpec::Keyword(k) => bail!(UsageError(format!("unknown X keyword {k:?}"))),
        ChoiceSpec::Sets(sets) => {
            let sets = sets
                .iter()
                .map(|per| {
                    per.iter()
                        .map(|x| x.iter().map(|&t| p.reduce(t)).collect())
                        .collect()
                })
                .collect();
            ChoiceSystem::new(p, f.n, matrices, sets)?
        }
    })
}

/// Solves one system; returns the report body and whether it is consistent
/// with the counting hypothesis.
fn solve_system(s: &ChoiceSystem, seed: u64, limits: &Limits) -> anyhow::Result<(Value, bool)> {
    let mut body = serde_json::Map::new();
    let shape = s.uniform_r().map(|r| -> anyhow::Result<_> {
        let size = arithmetic_size(s.modulus(), seed, limits)? as u64;
        Ok((r, size, hypothesis_holds(s.modulus(), s.k(), r, size)))
    });
    let shape = shape.transpose()?;
    if let Some((r, size, holds)) = shape {
        body.insert("r".into(), r.into());
        body.insert("s".into(), size.into());
        body.insert("hypothesis_holds".into(), holds.into());
    }
    let mut consistent = true;
    match find_witness(s, limits)? {
        Some(x) => {
            if !s.satisfies(&x) {
                return Err(Error::Invariant("witness fails re-verification".into()).into());
            }
            body.insert("witness".into(), coords(&x));
        }
        None => {
            let cert = failure_certificate(s, limits)?;
            if !cert.verify(s, limits)? {
                return Err(Error::Invariant("certificate fails re-verification".into()).into());
            }
            body.insert("witness".into(), Value::Null);
            body.insert("certificate".into(), certificate_json(&cert));
            if let Some((r, size, holds)) = shape {
                let counted = check_pigeonhole_bound(&cert, s.k(), r);
                let contradiction = check_contradiction_condition(&cert, s.k(), r, size);
                body.insert("pigeonhole".into(), counted.into());
                consistent = !holds && counted && contradiction;
            }
        }
    }
    body.insert("consistent".into(), consistent.into());
    Ok((Value::Object(body), consistent))
}

pub fn ajt(g: &GlobalArgs, args: &AjtArgs) -> anyhow::Result<Outcome> {
    let limits = g.limits();
    if let Some(trials) = args.hunt {
        return hunt(g, trials, args.k, &limits);
    }
    let path = args
        .input
        .as_ref()
        .ok_or_else(|| UsageError("give --input or --hunt".into()))?;
    let f: input::AjtFile = input::read_file(path)?;
    let s = choice_system(&f, &limits)?;
    let (body, consistent) = solve_system(&s, g.seed, &limits)?;
    let mut report = Report::new("ajt")
        .with("p", f.p)
        .with("n", f.n)
        .with("k", s.k());
    if let Value::Object(m) = body {
        for (k, v) in m {
            report.set(&k, v);
        }
    }
    Ok(Outcome {
        report,
        ok: consistent,
    })
}

fn hunt(g: &GlobalArgs, trials: usize, k: usize, limits: &Limits) -> anyhow::Result<Outcome> {
    let p = input::prime(need(g.p, "p")?)?;
    let n = need(g.n, "n")?;
    if k == 0 || n == 0 {
        bail!(UsageError("--k and --n must be positive".into()));
    }
    limits.ring_size(p, n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(g.seed);
    let mut failures = 0usize;
    let mut all_nonzero = 0usize;
    let mut first = Value::Null;
    let mut inconsistent = 0usize;
    for trial in 0..trials {
        let matrices: Vec<_> = (0..k).map(|_| random_invertible(p, n, &mut rng)).collect();
        let s = ChoiceSystem::nonzero(p, n, matrices.clone())?;
        let (body, consistent) = solve_system(&s, g.seed, limits)?;
        if !consistent {
            inconsistent += 1;
        }
        if body["witness"].is_null() {
            failures += 1;
            if first.is_null() {
                let mats: Vec<Vec<Value>> = matrices
                    .iter()
                    .map(|m| m.iter().map(coords).collect())
                    .collect();
                first = json!({"trial": trial, "matrices": mats, "result": body});
            }
        } else {
            all_nonzero += 1;
        }
    }
    let size = arithmetic_size(p, g.seed, limits)?;
    let report = Report::new("ajt")
        .with("p", p.get())
        .with("n", n)
        .with("k", k)
        .with("trials", trials)
        .with("s", size)
        .with("hypothesis_holds", hypothesis_holds(p, k, 1, size as u64))
        .with("with_witness", all_nonzero)
        .with("failures", failures)
        .with("inconsistent", inconsistent)
        .with("first_failure", first);
    Ok(Outcome {
        report,
        ok: inconsistent == 0,
    })
}

// --- acceptance -----------------------------------------------------------

pub fn acceptance(g: &GlobalArgs, args: &AcceptanceArgs) -> anyhow::Result<Outcome> {
    let ids: Vec<u8> = match &args.only {
        Some(spec) => input::residue_list(spec)?
            .into_iter()
            .map(|i| u8::try_from(i).ok().filter(|i| acceptance::ALL.contains(i)))
            .collect::<Option<_>>()
            .ok_or_else(|| {
                anyhow!(UsageError(format!(
                    "criteria are numbered 1..{}",
                    acceptance::ALL.len()
                )))
            })?,
        None => acceptance::ALL.to_vec(),
    };
    let mut rows = Vec::new();
    let mut ok = true;
    for id in ids {
        let res = acceptance::run(id, g.seed);
        ok &= res.passed;
        rows.push(
            json!({"id": res.id, "status": res.status(), "name": res.name, "detail": res.detail}),
        );
    }
    let passed = rows.iter().filter(|r| r["status"] == "PASS").count();
    let failed = rows.len() - passed;
    let report = Report::new("acceptance")
        .with("criteria", Value::Array(rows))
        .with("passed", passed)
        .with("failed", failed);
    Ok(Outcome { report, ok })
}
