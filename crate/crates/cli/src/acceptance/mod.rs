//! The acceptance suite: twelve criteria, each cross-checked against the
//! second implementations in [`oracle`].
//!
//! Every criterion draws its randomness from one generator seeded by the
//! criterion number and the run seed, so a run is reproducible.

use std::ops::ControlFlow;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vanishing_core::arithmetic::{
    doubling_bound, find_small_arithmetic_set, is_r_arithmetic, min_arithmetic_set,
};
use vanishing_core::covers::c_vanishing_by_cover;
use vanishing_core::covers::{
    find_efficient_cover, for_each_coset_cover, for_each_hyperplane_cover, phi_exact, CosetCover,
};
use vanishing_core::decomposition::{
    additive_basis_decompose, brute_force_representable, represent_in_set,
};
use vanishing_core::fp::scale_multiset;
use vanishing_core::group_ring::{
    c_irredundant_witness, extract_irredundant_fp, is_c_irredundant_with, is_c_vanishing,
    is_fp_irredundant, is_fp_vanishing, GroupRingCyc,
};
use vanishing_core::linear_maps::{
    check_pigeonhole_bound, failure_certificate, find_witness, hypothesis_holds, random_invertible,
    ChoiceSystem,
};
use vanishing_core::{AbelianGroup, FpMultiset, FpVector, Limits, PrimeModulus, TwistAssignment};

pub mod oracle;

use oracle::Vector;

pub const ALL: [u8; 12] = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl CriterionResult {
    pub fn status(&self) -> &'static str {
        if self.passed {
            "PASS"
        } else {
            "FAIL"
        }
    }

    pub fn line(&self) -> String {
        format!(
            "{} criterion {:>2} {}: {} [{:.1}s]",
            self.status(),
            self.id,
            self.name,
            self.detail,
            self.elapsed.as_secs_f64()
        )
    }
}

type Check = anyhow::Result<(bool, String)>;

pub fn name(id: u8) -> &'static str {
    match id {
        1 => "threshold multisets vanish",
        2 => "powered threshold multisets vanish",
        3 => "nonzero residues are (p-3)/2-arithmetic",
        4 => "exact minimal arithmetic sets",
        5 => "small arithmetic sets for 5 <= p <= 199",
        6 => "descent representations",
        7 => "additive basis decomposition",
        8 => "codimension of irredundant hyperplane covers",
        9 => "cyclotomic products agree with hyperplane covers",
        10 => "coset covers",
        11 => "choice systems and certificates",
        12 => "scaling invariance of irredundance",
        _ => "unknown",
    }
}

/// Runs one criterion. Library errors count as failures.
pub fn run(id: u8, seed: u64) -> CriterionResult {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (id as u64).wrapping_mul(0x5851_f42d_4c95_7f2d));
    let outcome: Check = match id {
        1 => threshold_vanishing(&mut rng),
        2 => powered_vanishing(&mut rng),
        3 => nonzero_residues(),
        4 => minimal_sets(),
        5 => small_sets(seed),
        6 => descent(&mut rng),
        7 => decomposition(&mut rng),
        8 => codimension(),
        9 => cyclotomic_covers(&mut rng),
        10 => coset_covers(),
        11 => choice_systems(),
        12 => scaling(&mut rng),
        _ => Ok((false, format!("no criterion {id}"))),
    };
    let elapsed = start.elapsed();
    let (passed, detail) = outcome.unwrap_or_else(|e| (false, format!("error: {e:#}")));
    CriterionResult {
        id,
        name: name(id),
        passed,
        detail,
        elapsed,
    }
}

fn pm(p: u32) -> PrimeModulus {
    PrimeModulus::new(p as u64).expect("fixed primes")
}

fn lim() -> Limits {
    Limits::default()
}

fn random_rows(rng: &mut ChaCha8Rng, p: u32, n: usize, size: usize) -> Vec<Vector> {
    (0..size)
        .map(|_| (0..n).map(|_| rng.gen_range(0..p)).collect())
        .collect()
}

fn multiset(p: u32, n: usize, rows: &[Vector]) -> anyhow::Result<FpMultiset> {
    let q = pm(p);
    let entries = rows
        .iter()
        .map(|r| FpVector::new(q, r.clone()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(FpMultiset::new(q, n, entries)?)
}

fn rows_of(v: &FpMultiset) -> Vec<Vector> {
    v.iter().map(|x| x.coords().to_vec()).collect()
}

fn within(elapsed: Duration, secs: u64) -> bool {
    elapsed <= Duration::from_secs(secs)
}

// 1, 2 ---------------------------------------------------------------------

fn threshold_batch(
    rng: &mut ChaCha8Rng,
    cases: &[(u32, usize, u32)],
    per: usize,
) -> anyhow::Result<(usize, usize, usize)> {
    let (mut total, mut core, mut second) = (0, 0, 0);
    for &(p, n, r) in cases {
        let size = ((p as usize - 1) * n + 1).div_ceil(r as usize);
        for _ in 0..per {
            let rows = random_rows(rng, p, n, size);
            total += 1;
            core += usize::from(is_fp_vanishing(&multiset(p, n, &rows)?, r, &lim())?);
            second += usize::from(oracle::fp_product_vanishes(p, n, &rows, r));
        }
    }
    Ok((total, core, second))
}

fn threshold_vanishing(rng: &mut ChaCha8Rng) -> Check {
    let start = Instant::now();
    let cases: Vec<_> = [2u32, 3, 5]
        .iter()
        .flat_map(|&p| [1usize, 2].map(|n| (p, n, 1)))
        .collect();
    let (total, core, second) = threshold_batch(rng, &cases, 200)?;
    let secs = start.elapsed();
    let ok = core == total && second == total && within(secs, 60);
    Ok((
        ok,
        format!("{core}/{total} vanishing, oracle {second}/{total}"),
    ))
}

/// Only multiplicities `1 <= r <= p - 1` are meaningful; larger powers of a
/// binomial vanish in characteristic `p` on their own.
fn powered_vanishing(rng: &mut ChaCha8Rng) -> Check {
    let mut cases = Vec::new();
    for p in [2u32, 3, 5] {
        let mut rs: Vec<u32> = [2, (p - 1) / 2]
            .into_iter()
            .filter(|&r| r >= 1 && r < p)
            .collect();
        rs.dedup();
        for r in rs {
            for n in [1usize, 2] {
                cases.push((p, n, r));
            }
        }
    }
    let (total, core, second) = threshold_batch(rng, &cases, 200)?;
    let shown: Vec<String> = cases
        .iter()
        .map(|(p, n, r)| format!("({p},{n},r={r})"))
        .collect();
    Ok((
        core == total && second == total,
        format!(
            "{core}/{total} vanishing, oracle {second}/{total}; cases {}",
            shown.join(" ")
        ),
    ))
}

// 3, 4, 5 ------------------------------------------------------------------

fn nonzero_residues() -> Check {
    let mut bad = Vec::new();
    for p in [5u32, 7, 11, 13, 17, 19] {
        let set: Vec<u32> = (1..p).collect();
        let r = (p - 3) / 2;
        let core = is_r_arithmetic(&set, r, pm(p))?.is_arithmetic();
        if !core || !oracle::is_arithmetic(p, r, &set) {
            bad.push(p);
        }
    }
    Ok((
        bad.is_empty(),
        if bad.is_empty() {
            "all six primes".into()
        } else {
            format!("fails at {bad:?}")
        },
    ))
}

fn minimal_sets() -> Check {
    let mut sizes = Vec::new();
    let mut problems = Vec::new();
    for p in [2u32, 3, 5, 7, 11, 13] {
        let set = min_arithmetic_set(pm(p), 1, &lim())?;
        let s = set.len();
        if s != oracle::min_arithmetic_size(p) {
            problems.push(format!("s({p}) disagrees with oracle"));
        }
        if !oracle::is_arithmetic(p, 1, set.elements()) {
            problems.push(format!("set for {p} rejected by oracle"));
        }
        if (1u64 << (s - 1)) < p as u64 {
            problems.push(format!("s({p}) = {s} below 1 + log2 p"));
        }
        sizes.push((p, s));
    }
    let get = |p| sizes.iter().find(|&&(q, _)| q == p).map(|&(_, s)| s);
    if get(3) != Some(3) {
        problems.push("s(3) != 3".into());
    }
    if get(5) != Some(4) {
        problems.push("s(5) != 4".into());
    }
    let shown: Vec<String> = sizes.iter().map(|(p, s)| format!("s({p})={s}")).collect();
    let detail = if problems.is_empty() {
        shown.join(" ")
    } else {
        format!("{}; {}", problems.join(", "), shown.join(" "))
    };
    Ok((problems.is_empty(), detail))
}

fn small_sets(seed: u64) -> Check {
    let start = Instant::now();
    let mut failing = Vec::new();
    let mut count = 0;
    for p in (5u32..=199).filter(|&p| vanishing_core::fp::is_prime(p as u64)) {
        count += 1;
        let good = match find_small_arithmetic_set(pm(p), seed, &lim()) {
            Ok(set) => {
                set.len() <= doubling_bound(pm(p)) && oracle::is_arithmetic(p, 1, set.elements())
            }
            Err(_) => false,
        };
        if !good {
            failing.push(p);
        }
    }
    let secs = start.elapsed();
    let ok = failing.is_empty() && within(secs, 300);
    Ok((
        ok,
        format!(
            "{}/{count} primes within 2 floor(log2 p), failing {failing:?}",
            count - failing.len()
        ),
    ))
}

// 6, 7 ---------------------------------------------------------------------

fn descent(rng: &mut ChaCha8Rng) -> Check {
    let configs = [(5u32, 1usize), (5, 2), (7, 1), (7, 2)];
    let (mut instances, mut targets, mut bad) = (0, 0, 0);
    for i in 0..100 {
        let (p, n) = configs[i % configs.len()];
        let a = min_arithmetic_set(pm(p), 1, &lim())?;
        let rows = random_rows(rng, p, n, (p as usize - 1) * n + 1);
        let v = extract_irredundant_fp(&multiset(p, n, &rows)?, 1, &lim())?;
        let vrows = rows_of(&v);
        let second = oracle::Representability::new(p, n, &vrows, a.elements());
        instances += 1;
        for x in oracle::all_vectors(p, n) {
            if !oracle::in_span(p, &vrows, &x) {
                continue;
            }
            targets += 1;
            let xv = FpVector::new(pm(p), x.clone())?;
            let rep = represent_in_set(&xv, &v, &a, 1, &lim())?;
            let in_a = rep.coefficients().iter().all(|&c| a.contains(c));
            let sums = oracle::combination(p, n, &vrows, rep.coefficients()) == x;
            let brute = brute_force_representable(&xv, &v, a.elements(), &lim())?;
            if !(in_a && sums && brute && second.contains(&x)) {
                bad += 1;
            }
        }
    }
    Ok((
        bad == 0,
        format!("{instances} irredundant multisets, {targets} targets, {bad} failures"),
    ))
}

fn random_bases(
    rng: &mut ChaCha8Rng,
    p: u32,
    n: usize,
    count: usize,
) -> anyhow::Result<Vec<FpMultiset>> {
    (0..count)
        .map(|_| Ok(FpMultiset::new(pm(p), n, random_invertible(pm(p), n, rng))?))
        .collect()
}

fn decompose_all(
    rng: &mut ChaCha8Rng,
    p: u32,
    n: usize,
    bases: &[FpMultiset],
    a: &vanishing_core::ArithmeticSet,
    r: u32,
    sample: Option<usize>,
) -> anyhow::Result<(usize, usize)> {
    let flat: Vec<Vector> = bases.iter().flat_map(rows_of).collect();
    let targets: Vec<Vector> = match sample {
        Some(k) => random_rows(rng, p, n, k),
        None => oracle::all_vectors(p, n),
    };
    let mut bad = 0;
    for x in &targets {
        let w = FpVector::new(pm(p), x.clone())?;
        let rep = additive_basis_decompose(&w, bases, a, r, &lim())?;
        let in_a = rep.coefficients().iter().all(|&c| a.contains(c));
        if !in_a || oracle::combination(p, n, &flat, rep.coefficients()) != *x {
            bad += 1;
        }
    }
    Ok((targets.len(), bad))
}

fn decomposition(rng: &mut ChaCha8Rng) -> Check {
    let mut parts = Vec::new();
    let mut ok = true;
    let a5 = min_arithmetic_set(pm(5), 1, &lim())?;
    if a5.len() != 4 {
        return Ok((
            false,
            format!("arithmetic set for p = 5 has size {}", a5.len()),
        ));
    }
    for n in [1usize, 2, 3] {
        let bases = random_bases(rng, 5, n, 5)?;
        let sample = (n == 3).then_some(100);
        let (total, bad) = decompose_all(rng, 5, n, &bases, &a5, 1, sample)?;
        ok &= bad == 0;
        parts.push(format!("p=5 n={n}: {}/{total}", total - bad));
    }
    let nonzero: Vec<u32> = (1..11).collect();
    let a11 = is_r_arithmetic(&nonzero, 4, pm(11))?
        .into_set()
        .ok_or_else(|| anyhow::anyhow!("nonzero residues of F_11 are not 4-arithmetic"))?;
    for n in [1usize, 2] {
        let bases = random_bases(rng, 11, n, 3)?;
        let (total, bad) = decompose_all(rng, 11, n, &bases, &a11, 4, None)?;
        ok &= bad == 0;
        parts.push(format!("p=11 n={n} nonzero: {}/{total}", total - bad));
    }
    Ok((ok, parts.join(", ")))
}

// 8, 9 ---------------------------------------------------------------------

fn codimension() -> Check {
    let mut parts = Vec::new();
    let mut violations = 0;
    for (p, n) in [(2u32, 2usize), (2, 3), (3, 2)] {
        let s = min_arithmetic_set(pm(p), 1, &lim())?.len() as u64;
        let mut count = 0;
        let mut error = None;
        let _ = for_each_hyperplane_cover(pm(p), n, &lim(), |inst| {
            count += 1;
            let normals: Vec<Vector> = inst.normals().iter().map(|v| v.coords().to_vec()).collect();
            let values: Vec<u32> = inst.offsets().iter().map(|&t| (p - t) % p).collect();
            let codim = oracle::rank(p, &normals) as u32;
            let bound = (p as u128).pow(codim) <= (s as u128).pow(inst.len() as u32);
            match inst.check_codim_bound(s, &lim()) {
                Ok(core) => {
                    if !core || !bound || !oracle::hyperplanes_irredundant(p, n, &normals, &values)
                    {
                        violations += 1;
                    }
                    ControlFlow::Continue(())
                }
                Err(e) => {
                    error = Some(e);
                    ControlFlow::Break(())
                }
            }
        })?;
        if let Some(e) = error {
            return Err(e.into());
        }
        parts.push(format!("({p},{n}): {count} covers, s={s}"));
    }
    Ok((
        violations == 0,
        format!("{}; {violations} violations", parts.join(", ")),
    ))
}

/// Multisets of size `1..=max` drawn from `pool`, as nondecreasing index
/// sequences.
fn multisets_up_to(pool: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut stack: Vec<Vec<usize>> = (0..pool).map(|i| vec![i]).collect();
    while let Some(m) = stack.pop() {
        if m.len() < max {
            let last = *m.last().expect("nonempty");
            for i in last..pool {
                let mut next = m.clone();
                next.push(i);
                stack.push(next);
            }
        }
        out.push(m);
    }
    out.sort();
    out
}

struct TwistWalk<'a> {
    p: u32,
    n: usize,
    rows: &'a [Vector],
    v: &'a FpMultiset,
    t: Vec<u32>,
    leaves: usize,
    disagreements: usize,
    some_cover: bool,
}

impl TwistWalk<'_> {
    fn walk(&mut self, prefix: &GroupRingCyc) {
        let depth = self.t.len();
        if depth == self.rows.len() {
            self.leaves += 1;
            let values: Vec<u32> = self.t.iter().map(|&t| (self.p - t) % self.p).collect();
            let cover = oracle::hyperplanes_cover(self.p, self.n, self.rows, &values);
            self.some_cover |= cover;
            if prefix.is_zero() != cover {
                self.disagreements += 1;
            }
            return;
        }
        for t in 0..self.p {
            let next = prefix.mul_twisted_binomial_pow(&self.v.entries()[depth], t, 1);
            self.t.push(t);
            self.walk(&next);
            self.t.pop();
        }
    }
}

fn compare_twists(p: u32, n: usize, rows: &[Vector]) -> anyhow::Result<(usize, usize)> {
    let v = multiset(p, n, rows)?;
    let mut walk = TwistWalk {
        p,
        n,
        rows,
        v: &v,
        t: Vec::new(),
        leaves: 0,
        disagreements: 0,
        some_cover: false,
    };
    walk.walk(&GroupRingCyc::one(pm(p), n, &lim())?);
    let by_product = is_c_vanishing(&v, 1, &lim())?;
    let by_cover = c_vanishing_by_cover(&v, &lim())?;
    if by_product != by_cover || by_product.is_some() != walk.some_cover {
        walk.disagreements += 1;
    }
    Ok((walk.leaves, walk.disagreements))
}

fn cyclotomic_covers(rng: &mut ChaCha8Rng) -> Check {
    let (mut instances, mut leaves, mut bad) = (0, 0, 0);
    for (p, n) in [(2u32, 1usize), (2, 2), (3, 1), (3, 2), (5, 1)] {
        let pool = oracle::all_vectors(p, n);
        for m in multisets_up_to(pool.len(), 4) {
            let rows: Vec<Vector> = m.iter().map(|&i| pool[i].clone()).collect();
            let (l, d) = compare_twists(p, n, &rows)?;
            instances += 1;
            leaves += l;
            bad += d;
        }
    }
    let exhaustive = instances;
    for i in 0..200 {
        let rows = random_rows(rng, 5, 2, 1 + i % 4);
        let (l, d) = compare_twists(5, 2, &rows)?;
        instances += 1;
        leaves += l;
        bad += d;
    }
    Ok((
        bad == 0,
        format!("{exhaustive} exhaustive + {} sampled (p=5, n=2) multisets, {leaves} twists, {bad} disagreements", instances - exhaustive),
    ))
}

// 10 -----------------------------------------------------------------------

fn oracle_masks(g: &oracle::Group, cover: &CosetCover) -> Vec<u64> {
    let group = cover.group();
    cover
        .cosets()
        .iter()
        .map(|c| {
            g.mask_of(
                c.elements()
                    .iter()
                    .map(|x| group.coords(x))
                    .collect::<Vec<_>>()
                    .iter(),
            )
        })
        .collect()
}

fn coset_covers() -> Check {
    let mut problems = Vec::new();
    for (f, want) in [
        (vec![2u32], 2usize),
        (vec![3], 3),
        (vec![5], 5),
        (vec![2, 2], 3),
    ] {
        let g = AbelianGroup::new(f.clone(), &lim())?;
        let (k, _) = phi_exact(&g, &lim())?;
        let second = oracle::Group::new(&f).phi_brute();
        if k != want || second != want {
            problems.push(format!("phi{f:?} = {k}, oracle {second}"));
        }
    }

    let mut groups = 0;
    let mut covers = 0usize;
    let mut phis = Vec::new();
    for order in 1..=16u32 {
        for f in AbelianGroup::all_of_order(order) {
            groups += 1;
            let g = AbelianGroup::new(f.clone(), &lim())?;
            let og = oracle::Group::new(&f);
            let max_k = if order <= 8 { order as usize } else { 4 };
            let mut failure = None;
            let _ = for_each_coset_cover(&g, max_k, |cover| {
                covers += 1;
                let masks = oracle_masks(&og, &cover);
                let all = og.intersection(&masks, None);
                let second = og.is_irredundant_cover(&masks)
                    && (0..masks.len()).all(|j| og.intersection(&masks, Some(j)) == all);
                match cover.check_subcover_claim() {
                    Ok(true) if second => ControlFlow::Continue(()),
                    other => {
                        failure = Some(format!(
                            "claim fails on {f:?}: core {other:?}, oracle {second}"
                        ));
                        ControlFlow::Break(())
                    }
                }
            });
            problems.extend(failure);

            let (phi, witness) = phi_exact(&g, &lim())?;
            let masks = oracle_masks(&og, &witness);
            if !og.is_irredundant_cover(&masks) || og.intersection(&masks, None) != 1 {
                problems.push(format!("phi witness for {f:?} rejected by oracle"));
            }
            if g.prime_divisors().iter().any(|&q| phi < q as usize) {
                problems.push(format!("phi{f:?} = {phi} is below a prime divisor"));
            }
            phis.push(format!("{f:?}:{phi}"));

            let efficient = find_efficient_cover(&g, &lim())?;
            if !g.is_trivial() && efficient.is_some() != g.is_elementary_abelian() {
                problems.push(format!("efficient cover existence wrong for {f:?}"));
            }
        }
    }
    let detail = format!(
        "{groups} groups, {covers} irredundant covers checked, phi {}{}",
        phis.join(" "),
        if problems.is_empty() {
            String::new()
        } else {
            format!("; {}", problems.join("; "))
        }
    );
    Ok((problems.is_empty(), detail))
}

// 11 -----------------------------------------------------------------------

fn invertible_matrices(p: u32) -> Vec<Vec<Vector>> {
    let rows = oracle::all_vectors(p, 2);
    let mut out = Vec::new();
    for a in &rows {
        for b in &rows {
            let m = vec![a.clone(), b.clone()];
            if oracle::rank(p, &m) == 2 {
                out.push(m);
            }
        }
    }
    out
}

fn to_rows(p: u32, m: &[Vector]) -> anyhow::Result<Vec<FpVector>> {
    Ok(m.iter()
        .map(|r| FpVector::new(pm(p), r.clone()))
        .collect::<Result<_, _>>()?)
}

/// Returns (systems, failures, inconsistencies).
fn check_systems(
    p: u32,
    systems: &[Vec<Vec<Vector>>],
    s: u64,
) -> anyhow::Result<(usize, usize, usize)> {
    let (mut failures, mut bad) = (0, 0);
    for mats in systems {
        let k = mats.len();
        let rows = mats
            .iter()
            .map(|m| to_rows(p, m))
            .collect::<anyhow::Result<Vec<_>>>()?;
        let sys = ChoiceSystem::nonzero(pm(p), 2, rows)?;
        let holds = hypothesis_holds(pm(p), k, 1, s);
        let second = oracle::all_vectors(p, 2).iter().any(|x| {
            mats.iter()
                .all(|m| m.iter().all(|row| oracle::dot(p, row, x) != 0))
        });
        match find_witness(&sys, &lim())? {
            Some(x) => {
                if !sys.satisfies(&x) || !second {
                    bad += 1;
                }
            }
            None => {
                failures += 1;
                let cert = failure_certificate(&sys, &lim())?;
                let normals: Vec<Vector> = cert
                    .instance()
                    .normals()
                    .iter()
                    .map(|v| v.coords().to_vec())
                    .collect();
                let values: Vec<u32> = cert.triples().iter().map(|&(_, _, t)| t).collect();
                let forbidden = cert
                    .triples()
                    .iter()
                    .all(|&(i, j, t)| t == 0 && normals.len() == cert.len() && i < k && j < 2);
                let irredundant = oracle::hyperplanes_irredundant(p, 2, &normals, &values);
                let counted = oracle::rank(p, &normals) * k >= cert.len()
                    && check_pigeonhole_bound(&cert, k, 1);
                if holds || second || !forbidden || !irredundant || !counted {
                    bad += 1;
                }
            }
        }
    }
    Ok((systems.len(), failures, bad))
}

fn choice_systems() -> Check {
    let mut parts = Vec::new();
    let mut bad_total = 0;
    for p in [2u32, 3] {
        let s = min_arithmetic_set(pm(p), 1, &lim())?.len() as u64;
        let ms = invertible_matrices(p);
        let singles: Vec<Vec<Vec<Vector>>> = ms.iter().map(|m| vec![m.clone()]).collect();
        let (n1, f1, b1) = check_systems(p, &singles, s)?;
        let pairs: Vec<Vec<Vec<Vector>>> = ms
            .iter()
            .flat_map(|a| ms.iter().map(move |b| vec![a.clone(), b.clone()]))
            .collect();
        let (n2, f2, b2) = check_systems(p, &pairs, s)?;
        bad_total += b1 + b2;
        parts.push(format!(
            "p={p} s={s}: k=1 {n1} systems {f1} failures, k=2 {n2} systems {f2} failures (extension)"
        ));
    }
    Ok((
        bad_total == 0,
        format!("{}; {bad_total} inconsistencies", parts.join(", ")),
    ))
}

// 12 -----------------------------------------------------------------------

fn scaling(rng: &mut ChaCha8Rng) -> Check {
    let configs = [(3u32, 1usize), (3, 2), (5, 1), (5, 2)];
    let (mut fp_bad, mut c_bad, mut existence_checked) = (0, 0, 0);
    for i in 0..50 {
        let (p, n) = configs[i % configs.len()];
        let rows = random_rows(rng, p, n, (p as usize - 1) * n + 1);
        let v = extract_irredundant_fp(&multiset(p, n, &rows)?, 1, &lim())?;
        let scalars: Vec<u32> = (0..v.len()).map(|_| rng.gen_range(1..p)).collect();
        let scaled = scale_multiset(&v, &scalars)?;
        if is_fp_irredundant(&v, 1, &lim())? != is_fp_irredundant(&scaled, 1, &lim())? {
            fp_bad += 1;
        }
        // a twist t for V corresponds to a·t for the scaled multiset
        for _ in 0..5 {
            let t: Vec<u32> = (0..v.len()).map(|_| rng.gen_range(0..p)).collect();
            let moved: Vec<u32> = t.iter().zip(&scalars).map(|(&t, &a)| t * a % p).collect();
            let before = is_c_irredundant_with(&v, &TwistAssignment::new(pm(p), t)?, 1, &lim())?;
            let after =
                is_c_irredundant_with(&scaled, &TwistAssignment::new(pm(p), moved)?, 1, &lim())?;
            if before != after {
                c_bad += 1;
            }
        }
        if (p as u64).pow(v.len() as u32) <= 20_000 {
            existence_checked += 1;
            let before = c_irredundant_witness(&v, 1, &lim())?.is_some();
            let after = c_irredundant_witness(&scaled, 1, &lim())?.is_some();
            if before != after {
                c_bad += 1;
            }
        }
    }
    Ok((
        fp_bad == 0 && c_bad == 0,
        format!("50 instances, F_p violations {fp_bad}, C violations {c_bad} ({existence_checked} with exhaustive twist search)"),
    ))
}
