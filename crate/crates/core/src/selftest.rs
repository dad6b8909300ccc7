//! The acceptance suite: worked examples, the elliptic and oracle sweeps,
//! and seeded property checks.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::classgroup::ClassGroupTable;
use crate::cli::{parse_form, parse_ideal, parse_poly};
use crate::discriminant::Discriminant;
use crate::elliptic::EllipticCurve;
use crate::error::Result;
use crate::ff::PrimeField;
use crate::genus::GenusContext;
use crate::ideal::MumfordIdeal;
use crate::oracle::oracle_classes;
use crate::poly::{monic_polys, polys_below_degree, Poly};
use crate::quadform::{Mat2, QuadForm};

/// Cases per randomized property.
pub const PROPERTY_CASES: usize = 1000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionOutcome {
    pub id: u8,
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub elapsed_ms: u128,
}

impl fmt::Display for CriterionOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "criterion {} [{}] {}: {} ({} ms)",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.detail,
            self.elapsed_ms
        )
    }
}

/// Collects failures; a criterion passes when none were recorded.
#[derive(Default)]
struct Checks {
    failures: Vec<String>,
}

impl Checks {
    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(msg());
        }
    }

    fn absorb<T>(&mut self, r: Result<T>, ctx: &str) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.failures.push(format!("{ctx}: {e}"));
                None
            }
        }
    }
}

fn finish(id: u8, name: &str, start: Instant, checks: Checks, summary: String) -> CriterionOutcome {
    let passed = checks.failures.is_empty();
    let detail = if passed {
        summary
    } else {
        let shown: Vec<&str> = checks.failures.iter().take(5).map(String::as_str).collect();
        format!("{} failure(s): {}", checks.failures.len(), shown.join("; "))
    };
    CriterionOutcome {
        id,
        name: name.to_string(),
        passed,
        detail,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

fn disc_of(p: u64, alpha: &str) -> Result<Discriminant> {
    Discriminant::new(parse_poly(alpha, PrimeField::new(p)?)?)
}

fn example1() -> Result<Discriminant> {
    disc_of(3, "x^3+x+1")
}

fn example2() -> Result<Discriminant> {
    disc_of(5, "x^3+x")
}

/// Monic squarefree polynomials of degree `d`.
pub fn squarefree_monics(field: PrimeField, d: usize) -> Vec<Poly> {
    monic_polys(field, d)
        .filter(|f| f.is_squarefree().unwrap_or(false))
        .collect()
}

fn random_poly<R: Rng>(rng: &mut R, field: PrimeField, below: usize) -> Poly {
    let coeffs: Vec<i64> = (0..below).map(|_| rng.gen_range(0..field.p() as i64)).collect();
    Poly::from_coeffs(field, &coeffs)
}

fn random_monic<R: Rng>(rng: &mut R, field: PrimeField, d: usize) -> Poly {
    let mut coeffs: Vec<i64> = (0..d).map(|_| rng.gen_range(0..field.p() as i64)).collect();
    coeffs.push(1);
    Poly::from_coeffs(field, &coeffs)
}

fn random_squarefree<R: Rng>(rng: &mut R, field: PrimeField, d: usize) -> Poly {
    loop {
        let f = random_monic(rng, field, d);
        if f.is_squarefree().unwrap_or(false) {
            return f;
        }
    }
}

/// A random product of translations, swaps and `diag(s, 1/s)`.
fn random_sl2<R: Rng>(rng: &mut R, field: PrimeField) -> Mat2 {
    let mut m = Mat2::identity(field);
    for _ in 0..rng.gen_range(1..=4) {
        let step = match rng.gen_range(0..3) {
            0 => Mat2::translation(random_poly(rng, field, 3)),
            1 => Mat2::swap(field),
            _ => {
                let s = field.elem(rng.gen_range(1..field.p() as i64));
                Mat2::diag(s, s.inv().expect("nonzero"))
            }
        };
        m = m.mul(&step);
    }
    m
}

fn form_set(forms: &[QuadForm]) -> BTreeSet<QuadForm> {
    forms.iter().cloned().collect()
}

/// Example 1: four classes, the expected reduced forms and a cyclic group
/// of order 4, in under a second.
pub fn criterion1() -> CriterionOutcome {
    let start = Instant::now();
    let mut c = Checks::default();
    let mut summary = String::new();
    let run = || -> Result<(ClassGroupTable, BTreeSet<QuadForm>)> {
        let disc = example1()?;
        let table = ClassGroupTable::enumerate(&disc)?;
        let expected = ["x-1,0,2x^2+2x+1", "x,2,2x^2+2", "x,1,2x^2+2", "1,0,2x^3+2x+2"]
            .iter()
            .map(|s| parse_form(s, disc.field()))
            .collect::<Result<BTreeSet<_>>>()?;
        Ok((table, expected))
    };
    if let Some((table, expected)) = c.absorb(run(), "example 1") {
        let elapsed = start.elapsed();
        c.check(table.class_number() == 4, || format!("class number {}", table.class_number()));
        c.check(form_set(table.forms()) == expected, || {
            format!("forms {:?}", table.forms().iter().map(|q| q.to_string()).collect::<Vec<_>>())
        });
        let mut orders = table.orders().to_vec();
        orders.sort_unstable();
        c.check(orders == [1, 2, 4, 4], || format!("orders {orders:?}"));
        c.check(table.invariant_factors() == [4], || {
            format!("invariant factors {:?}", table.invariant_factors())
        });
        c.check(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"));
        summary = format!(
            "h = 4, orders {orders:?}, structure {:?}, {} ms",
            table.invariant_factors(),
            elapsed.as_millis()
        );
    }
    finish(1, "Example 1 reproduction", start, c, summary)
}

/// `(x;2) * (x;1)` is the identity and `(x;2)^2 = (x-1;0)`.
pub fn criterion2() -> CriterionOutcome {
    let start = Instant::now();
    let mut c = Checks::default();
    let run = || -> Result<(MumfordIdeal, MumfordIdeal, MumfordIdeal)> {
        let disc = example1()?;
        let a = parse_ideal("x;2", &disc)?;
        let b = parse_ideal("x;1", &disc)?;
        let target = parse_ideal("x-1;0", &disc)?;
        Ok((a.compose(&b)?, a.compose(&a)?, target))
    };
    if let Some((prod, square, target)) = c.absorb(run(), "example 1") {
        c.check(prod.is_identity(), || format!("(x;2)*(x;1) = {prod}"));
        c.check(square == target, || format!("(x;2)^2 = {square}"));
    }
    finish(2, "Composition laws", start, c, "(x;2)*(x;1) = (1;0), (x;2)^2 = (x+2;0)".into())
}

/// Merging classes with their inverses: three classes for Example 1 with
/// no inherited group law, four for Example 2 with `[2, 2]` inherited.
pub fn criterion3() -> CriterionOutcome {
    let start = Instant::now();
    let mut c = Checks::default();
    let run = |disc: Result<Discriminant>| -> Result<(usize, bool, Vec<u64>)> {
        let table = ClassGroupTable::enumerate(&disc?)?;
        Ok((table.cl_merged()?.len(), table.inherits_group(), table.invariant_factors().to_vec()))
    };
    if let Some((n, inherits, _)) = c.absorb(run(example1()), "example 1") {
        c.check(n == 3, || format!("example 1: {n} merged classes"));
        c.check(!inherits, || "example 1: group structure inherited".into());
    }
    if let Some((n, inherits, factors)) = c.absorb(run(example2()), "example 2") {
        c.check(n == 4, || format!("example 2: {n} merged classes"));
        c.check(inherits, || "example 2: group structure not inherited".into());
        c.check(factors == [2, 2], || format!("example 2: structure {factors:?}"));
    }
    finish(
        3,
        "Improper quotient",
        start,
        c,
        "example 1: 3 merged, not a group; example 2: 4 merged, [2, 2]".into(),
    )
}

struct GenusSummary {
    table: ClassGroupTable,
    genera: usize,
    principal: Vec<usize>,
}

/// Independent genus checks on one discriminant: `2^(r-1)` genera and
/// every square principal.
fn genus_checks(disc: &Discriminant, c: &mut Checks) -> Result<GenusSummary> {
    let table = ClassGroupTable::enumerate(disc)?;
    let ctx = GenusContext::new(disc)?;
    let labels = table
        .forms()
        .iter()
        .map(|q| Ok(ctx.genus(q)?.normalized))
        .collect::<Result<Vec<_>>>()?;
    let identity = ctx.genus(&QuadForm::identity(disc))?.normalized;
    let r = ctx.primes().len();
    let genera = labels.iter().collect::<BTreeSet<_>>().len();
    let alpha = disc.alpha();
    c.check(genera == 1 << (r - 1), || format!("alpha = {alpha}: {genera} genera for r = {r}"));
    for i in 0..table.len() {
        let sq = table.compose_index(i, i)?;
        c.check(labels[sq] == identity, || {
            format!("alpha = {alpha}: square of {} is not principal", table.classes()[i])
        });
    }
    let principal = (0..table.len()).filter(|&i| labels[i] == identity).collect();
    Ok(GenusSummary {
        table,
        genera,
        principal,
    })
}

fn class_literals(table: &ClassGroupTable, indices: &[usize]) -> BTreeSet<String> {
    indices.iter().map(|&i| table.classes()[i].to_literal()).collect()
}

/// Genus theory on both examples, then on every squarefree monic cubic over
/// F_3, F_5, F_7, every quintic over F_3 and sampled quintics over F_5.
pub fn criterion4(seed: u64) -> CriterionOutcome {
    let start = Instant::now();
    let mut c = Checks::default();
    if let Some(s) = example1().and_then(|d| genus_checks(&d, &mut c)).pipe(|r| c.absorb(r, "example 1")) {
        c.check(s.genera == 2, || format!("example 1: {} genera", s.genera));
        let principal = class_literals(&s.table, &s.principal);
        let expected: BTreeSet<String> = ["1;0", "x+2;0"].iter().map(|s| s.to_string()).collect();
        c.check(principal == expected, || format!("example 1: principal genus {principal:?}"));
    }
    if let Some(s) = example2().and_then(|d| genus_checks(&d, &mut c)).pipe(|r| c.absorb(r, "example 2")) {
        c.check(s.genera == 4, || format!("example 2: {} genera", s.genera));
        let principal = class_literals(&s.table, &s.principal);
        c.check(principal.len() == 1 && principal.contains("1;0"), || {
            format!("example 2: principal genus {principal:?}")
        });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut alphas = Vec::new();
    for p in [3, 5, 7] {
        let field = PrimeField::new(p).expect("prime");
        alphas.extend(squarefree_monics(field, 3));
    }
    let f3 = PrimeField::new(3).expect("prime");
    alphas.extend(squarefree_monics(f3, 5));
    let f5 = PrimeField::new(5).expect("prime");
    alphas.extend((0..60).map(|_| random_squarefree(&mut rng, f5, 5)));
    let total = alphas.len();
    for alpha in alphas {
        let label = format!("alpha = {alpha} over F_{}", alpha.field().p());
        if let Some(disc) = c.absorb(Discriminant::new(alpha), &label) {
            let r = genus_checks(&disc, &mut c);
            c.absorb(r, &label);
        }
    }
    finish(
        4,
        "Genus suite",
        start,
        c,
        format!("examples 1 and 2 as expected; {total} discriminants with 2^(r-1) genera and squares principal"),
    )
}

trait Pipe: Sized {
    fn pipe<T>(self, f: impl FnOnce(Self) -> T) -> T {
        f(self)
    }
}

impl<T> Pipe for T {}

/// Point counts, Hasse bound and the point-to-class isomorphism for every
/// squarefree monic cubic over F_3, F_5, F_7 and a sample over F_11, F_13,
/// in under a minute.
pub fn criterion5(seed: u64) -> CriterionOutcome {
    let start = Instant::now();
    let mut c = Checks::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5);
    let mut alphas = Vec::new();
    for p in [3, 5, 7] {
        alphas.extend(squarefree_monics(PrimeField::new(p).expect("prime"), 3));
    }
    for p in [11, 13] {
        let field = PrimeField::new(p).expect("prime");
        let mut all = squarefree_monics(field, 3);
        all.shuffle(&mut rng);
        all.truncate(50);
        alphas.extend(all);
    }
    let mut pairs = 0;
    let total = alphas.len();
    for alpha in alphas {
        let label = format!("alpha = {alpha} over F_{}", alpha.field().p());
        let report = Discriminant::new(alpha)
            .and_then(|d| EllipticCurve::new(&d))
            .and_then(|curve| curve.verify_isomorphism());
        if let Some(r) = c.absorb(report, &label) {
            pairs += r.pairs_checked;
            c.check(r.num_points == r.class_number, || {
                format!("{label}: {} points, class number {}", r.num_points, r.class_number)
            });
            c.check(r.hasse_ok, || format!("{label}: Hasse bound violated"));
            c.check(r.bijective, || format!("{label}: point map not bijective"));
            c.check(r.violations.is_empty(), || format!("{label}: {}", r.violations[0]));
        }
    }
    let elapsed = start.elapsed();
    c.check(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"));
    finish(
        5,
        "Elliptic isomorphism sweep",
        start,
        c,
        format!("{total} curves, {pairs} point pairs, {} ms", elapsed.as_millis()),
    )
}

/// Orbit closure at degree bound 3 against enumeration for every squarefree
/// monic cubic over F_3 and F_5; each positive orbit holds exactly one
/// reduced form and no twisted orbit holds any.
pub fn criterion6() -> CriterionOutcome {
    let start = Instant::now();
    let mut c = Checks::default();
    let mut total = 0;
    for p in [3, 5] {
        for alpha in squarefree_monics(PrimeField::new(p).expect("prime"), 3) {
            total += 1;
            let label = format!("alpha = {alpha} over F_{p}");
            let run = || -> Result<_> {
                let disc = Discriminant::new(alpha.clone())?;
                Ok((oracle_classes(&disc, 3)?, ClassGroupTable::enumerate(&disc)?, disc))
            };
            let Some((report, table, disc)) = c.absorb(run(), &label) else {
                continue;
            };
            c.check(report.orbit_count == table.class_number(), || {
                format!("{label}: {} orbits, class number {}", report.orbit_count, table.class_number())
            });
            let mut found = BTreeSet::new();
            for orbit in &report.orbits {
                let fixed: Vec<&QuadForm> = orbit.members.iter().filter(|q| q.is_reduced(&disc)).collect();
                let want = usize::from(orbit.positive);
                c.check(fixed.len() == want, || {
                    format!("{label}: orbit of {} has {} reduced forms", orbit.rep(), fixed.len())
                });
                found.extend(fixed.into_iter().cloned());
            }
            c.check(found == form_set(table.forms()), || {
                format!("{label}: reduced forms in orbits differ from the class table")
            });
        }
    }
    finish(
        6,
        "Oracle cross-check",
        start,
        c,
        format!("{total} discriminants, orbit counts match, one fixed point per orbit"),
    )
}

/// Shared pool of random discriminants with cached class tables.
struct Pool {
    tables: Vec<ClassGroupTable>,
}

impl Pool {
    fn new<R: Rng>(rng: &mut R) -> Self {
        let mut tables = Vec::new();
        let mut seen = BTreeSet::new();
        while tables.len() < 24 {
            let p = *[3u64, 5, 7].choose(rng).expect("nonempty");
            let d = if rng.gen_bool(0.5) { 3 } else { 5 };
            let field = PrimeField::new(p).expect("prime");
            let alpha = random_squarefree(rng, field, d);
            if !seen.insert((p, alpha.coeffs().to_vec())) {
                continue;
            }
            let disc = Discriminant::new(alpha).expect("squarefree monic odd degree");
            tables.push(ClassGroupTable::enumerate(&disc).expect("enumeration"));
        }
        Pool { tables }
    }

    fn pick<'a, R: Rng>(&'a self, rng: &mut R) -> &'a ClassGroupTable {
        self.tables.choose(rng).expect("nonempty")
    }
}

fn pick_class<'a, R: Rng>(rng: &mut R, t: &'a ClassGroupTable) -> &'a MumfordIdeal {
    t.classes().choose(rng).expect("identity is always present")
}

/// Seeded property suites, `PROPERTY_CASES` cases each.
pub fn criterion7(seed: u64) -> CriterionOutcome {
    let start = Instant::now();
    let mut c = Checks::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x7);
    let pool = Pool::new(&mut rng);
    let mut counts: Vec<(&str, usize)> = Vec::new();

    // Cantor output validity.
    for _ in 0..PROPERTY_CASES {
        let t = pool.pick(&mut rng);
        let (a, b) = (pick_class(&mut rng, t), pick_class(&mut rng, t));
        if let Some(r) = c.absorb(a.compose(b), "compose") {
            let alpha = t.alpha();
            let valid = r.u().is_monic()
                && r.v().deg() < r.u().deg()
                && r.u().divides(&(&(r.v() * r.v()) - alpha)).unwrap_or(false)
                && r.u().deg() as usize <= t.disc().genus();
            c.check(valid, || format!("{a} * {b} = {r} is not a reduced Mumford pair for {alpha}"));
        }
    }
    counts.push(("Cantor validity", PROPERTY_CASES));

    // Discriminant preservation under composition and SL_2 action.
    for _ in 0..PROPERTY_CASES {
        let t = pool.pick(&mut rng);
        let (a, b) = (pick_class(&mut rng, t), pick_class(&mut rng, t));
        if let Some(r) = c.absorb(a.compose(b), "compose") {
            let q = r.to_form();
            c.check(&q.neg_det_b() == t.alpha(), || format!("form {q} of {a} * {b} has the wrong determinant"));
            let m = random_sl2(&mut rng, t.disc().field());
            if let Some(moved) = c.absorb(q.apply(&m), "apply") {
                c.check(&moved.neg_det_b() == t.alpha(), || format!("{q} moved to {moved}"));
            }
        }
    }
    counts.push(("discriminant preservation", PROPERTY_CASES));

    // Identity, inverse, commutativity and associativity.
    for _ in 0..PROPERTY_CASES {
        let t = pool.pick(&mut rng);
        let id = MumfordIdeal::identity(t.disc());
        let a = pick_class(&mut rng, t);
        let b = pick_class(&mut rng, t);
        let d = pick_class(&mut rng, t);
        let run = || -> Result<bool> {
            Ok(a.compose(&a.inverse())?.is_identity()
                && a.compose(&id)? == *a
                && id.compose(a)? == *a
                && a.compose(b)? == b.compose(a)?
                && a.compose(b)?.compose(d)? == a.compose(&b.compose(d)?)?)
        };
        if let Some(ok) = c.absorb(run(), "group laws") {
            c.check(ok, || format!("group law fails for {a}, {b}, {d} over {}", t.alpha()));
        }
    }
    counts.push(("group laws", PROPERTY_CASES));

    // Reduction: idempotent and constant on SL_2 orbits.
    for _ in 0..PROPERTY_CASES {
        let t = pool.pick(&mut rng);
        let disc = t.disc();
        let q = pick_class(&mut rng, t).to_form();
        let m = random_sl2(&mut rng, disc.field());
        let run = || -> Result<(QuadForm, QuadForm, Mat2, Mat2, QuadForm)> {
            let moved = q.apply(&m)?;
            let (r, tr) = moved.reduce(disc)?;
            let (rr, trr) = r.reduce(disc)?;
            Ok((moved, r, tr, trr, rr))
        };
        if let Some((moved, r, tr, trr, rr)) = c.absorb(run(), "reduce") {
            c.check(r == q, || format!("{moved} (from {q}) reduces to {r}"));
            c.check(rr == r && trr.is_identity(), || format!("reducing {r} again moved it"));
            c.check(tr.det().is_one(), || format!("transform for {moved} has det {}", tr.det()));
            c.check(moved.apply(&tr).ok().as_ref() == Some(&r), || {
                format!("transform for {moved} does not map it to {r}")
            });
        }
    }
    counts.push(("reduction", PROPERTY_CASES));

    // Residue symbol multiplicativity.
    for _ in 0..PROPERTY_CASES {
        let field = PrimeField::new(*[3u64, 5, 7, 11, 13].choose(&mut rng).expect("nonempty")).expect("prime");
        let modulus = loop {
            let d = rng.gen_range(1..=3);
            let m = random_monic(&mut rng, field, d);
            if m.is_irreducible() {
                break m;
            }
        };
        let f = random_poly(&mut rng, field, 6);
        let g = random_poly(&mut rng, field, 6);
        let run = || -> Result<(i8, i8, i8)> {
            Ok((
                Poly::residue_symbol(&(&f * &g), &modulus)?,
                Poly::residue_symbol(&f, &modulus)?,
                Poly::residue_symbol(&g, &modulus)?,
            ))
        };
        if let Some((fg, sf, sg)) = c.absorb(run(), "residue symbol") {
            c.check(fg == sf * sg, || format!("({f})({g}) mod {modulus}: {fg} != {sf} * {sg}"));
        }
    }
    counts.push(("residue multiplicativity", PROPERTY_CASES));

    // Residue symbol against exhaustive square tables.
    let mut table_cases = 0;
    for p in [3u64, 5, 7] {
        let field = PrimeField::new(p).expect("prime");
        for d in 1..=2 {
            let residues = polys_below_degree(field, d);
            for modulus in monic_polys(field, d).filter(Poly::is_irreducible) {
                let squares: BTreeSet<Poly> = residues
                    .iter()
                    .map(|r| (r * r).rem(&modulus).expect("nonzero modulus"))
                    .collect();
                for f in &residues {
                    let expected = if f.is_zero() {
                        0
                    } else if squares.contains(f) {
                        1
                    } else {
                        -1
                    };
                    let got = Poly::residue_symbol(f, &modulus);
                    c.check(got.as_ref().ok() == Some(&expected), || {
                        format!("({f} | {modulus}) over F_{p}: {got:?}, table says {expected}")
                    });
                    table_cases += 1;
                }
            }
        }
    }
    counts.push(("square tables", table_cases));

    // Characters agree across represented values and along SL_2 orbits.
    let mut contexts: HashMap<usize, GenusContext> = HashMap::new();
    let mut compared = 0;
    let mut char_cases = 0;
    while char_cases < PROPERTY_CASES {
        let k = rng.gen_range(0..pool.tables.len());
        let t = &pool.tables[k];
        let disc = t.disc();
        let ctx = contexts
            .entry(k)
            .or_insert_with(|| GenusContext::new(disc).expect("genus context"));
        let q = pick_class(&mut rng, t).to_form();
        let field = disc.field();
        let x = random_poly(&mut rng, field, 3);
        let y = random_poly(&mut rng, field, 3);
        let m = random_sl2(&mut rng, field);
        let run = || -> Result<(Vec<i8>, Vec<i8>, Vec<i8>)> {
            let value = q.eval(&x, &y);
            let at_value = ctx
                .primes()
                .iter()
                .map(|p| Poly::residue_symbol(&value, p))
                .collect::<Result<Vec<_>>>()?;
            Ok((ctx.characters(&q)?, ctx.characters(&q.apply(&m)?)?, at_value))
        };
        char_cases += 1;
        if let Some((chars, moved, at_value)) = c.absorb(run(), "characters") {
            c.check(chars == moved, || format!("characters of {q} change under {m:?}"));
            for (i, &s) in at_value.iter().enumerate() {
                if s != 0 {
                    compared += 1;
                    c.check(s == chars[i], || {
                        format!("{q} at ({x}, {y}) gives {s} at {}, character is {}", ctx.primes()[i], chars[i])
                    });
                }
            }
        }
    }
    counts.push(("character well-definedness", char_cases));

    let summary = counts
        .iter()
        .map(|(name, n)| format!("{name} {n}"))
        .collect::<Vec<_>>()
        .join(", ");
    finish(
        7,
        "Property suites",
        start,
        c,
        format!("seed {seed}: {summary} ({compared} represented values compared), zero failures"),
    )
}

/// Every criterion in order.
pub fn run_all(seed: u64) -> Vec<CriterionOutcome> {
    vec![
        criterion1(),
        criterion2(),
        criterion3(),
        criterion4(seed),
        criterion5(seed),
        criterion6(),
        criterion7(seed),
    ]
}
