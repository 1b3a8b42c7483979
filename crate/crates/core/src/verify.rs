//! Verification suites over the built-in fixtures, and the reports the CLI
//! emits.
//!
//! Every check records both computed values. Checks are sorted by name and
//! the wall time is kept out of the serialized payload, so the JSON of a
//! report depends only on its inputs.

use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::fixtures::{self, Fixture};
use crate::graded::{self, forget_grading_hom, in_tate_subcategory, omega0_tate, tate_quotient_hom, GradedFixture, GradedRepObject};
use crate::group::{normal_subgroups, FiniteGroup, Subgroup};
use crate::linalg::{canonical_span, Matrix};
use crate::oracle::{check_closed_immersion, check_normal_quotient, oracle_hom, restrict};
use crate::quotient::{nested_functor, QObject, QuotientCtx};
use crate::rep::{hom_space, RepObject};
use crate::twist::{compose_twists, sample_classes, twist_functor, CyclicGradedObject, KummerCocycle};

/// Largest modulus covered by the cocycle suite.
pub const MAX_MODULUS: usize = 12;

/// Fixture id of the cocycle suite.
pub const CYCLIC_FIXTURE_ID: &str = "mu-n";

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub left: Value,
    pub right: Value,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    fn new(name: String, left: impl Into<Value>, right: impl Into<Value>, passed: bool) -> Self {
        Check { name, left: left.into(), right: right.into(), passed, detail: None }
    }

    /// Passes iff the two values are equal.
    fn equal<T: PartialEq + Into<Value> + Clone>(name: String, left: T, right: T) -> Self {
        let passed = left == right;
        Check::new(name, left, right, passed)
    }

    fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub fixtures: Vec<String>,
    pub passed: bool,
    pub checks: Vec<Check>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl VerificationReport {
    fn new(suite: Suite, fixtures: Vec<String>, mut checks: Vec<Check>, wall_time: Duration) -> Self {
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        VerificationReport {
            suite: suite.to_string(),
            fixtures,
            passed: checks.iter().all(|c| c.passed),
            checks,
            wall_time,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Q3a,
    TqTh,
    ClosedImmersion,
    Recoverability,
    Semisimple,
    Karoubi,
    Oracle,
    Tate,
    Cocycle,
    Nested,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Q3a,
        Suite::TqTh,
        Suite::ClosedImmersion,
        Suite::Recoverability,
        Suite::Semisimple,
        Suite::Karoubi,
        Suite::Oracle,
        Suite::Tate,
        Suite::Cocycle,
        Suite::Nested,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Q3a => "q3a",
            Suite::TqTh => "tq-th",
            Suite::ClosedImmersion => "closed-immersion",
            Suite::Recoverability => "recoverability",
            Suite::Semisimple => "semisimple",
            Suite::Karoubi => "karoubi",
            Suite::Oracle => "oracle",
            Suite::Tate => "tate",
            Suite::Cocycle => "cocycle",
            Suite::Nested => "nested",
        }
    }

    /// Fixture ids this suite accepts for `--fixture`.
    pub fn fixture_ids(self) -> Vec<&'static str> {
        match self {
            Suite::Tate => graded::GRADED_FIXTURE_IDS.to_vec(),
            Suite::Cocycle => vec![CYCLIC_FIXTURE_ID],
            _ => fixtures::FIXTURE_IDS.to_vec(),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}; expected one of {}", Suite::ALL.map(Suite::name).join(", "))))
    }
}

/// Run a suite on every built-in fixture, or on the one named `fixture`.
pub fn run_suite(suite: Suite, fixture: Option<&str>) -> Result<VerificationReport> {
    run_suite_in(suite, fixture, None)
}

/// As [`run_suite`], with group fixtures read from `<dir>/<id>.json` when
/// such a file exists.
pub fn run_suite_in(suite: Suite, fixture: Option<&str>, dir: Option<&Path>) -> Result<VerificationReport> {
    match suite {
        Suite::Tate => {
            let all = graded::graded_fixtures();
            let chosen: Vec<GradedFixture> = match fixture {
                None => all,
                Some(id) => vec![all.into_iter().find(|f| f.id == id).ok_or_else(|| unknown_fixture(suite, id))?],
            };
            run_graded(&chosen)
        }
        Suite::Cocycle => {
            if let Some(id) = fixture.filter(|&id| id != CYCLIC_FIXTURE_ID) {
                return Err(unknown_fixture(suite, id));
            }
            Ok(run_cocycle())
        }
        _ => {
            let ids: Vec<&str> = match fixture {
                None => fixtures::FIXTURE_IDS.to_vec(),
                Some(id) => vec![id],
            };
            let chosen = ids
                .into_iter()
                .map(|id| fixtures::load(dir, id)?.ok_or_else(|| unknown_fixture(suite, id)))
                .collect::<Result<Vec<_>>>()?;
            run_on(suite, &chosen)
        }
    }
}

fn unknown_fixture(suite: Suite, id: &str) -> Error {
    Error::Parse(format!("unknown fixture {id:?} for suite {suite}; expected one of {}", suite.fixture_ids().join(", ")))
}

/// Run a fixture-based suite on explicit fixtures.
pub fn run_on(suite: Suite, fixtures: &[Fixture]) -> Result<VerificationReport> {
    let start = Instant::now();
    let per_fixture: Vec<Vec<Check>> = fixtures
        .iter()
        .map(|fx| match suite {
            Suite::Q3a => q3a_checks(fx),
            Suite::TqTh => tq_th_checks(fx),
            Suite::ClosedImmersion => closed_immersion_checks(fx),
            Suite::Recoverability => recoverability_checks(fx),
            Suite::Semisimple => semisimple_checks(fx),
            Suite::Karoubi => karoubi_checks(fx),
            Suite::Oracle => oracle_checks(fx),
            Suite::Nested => nested_checks(fx),
            Suite::Tate | Suite::Cocycle => Err(Error::Parse(format!("suite {suite} does not run on group fixtures"))),
        })
        .collect::<Result<_>>()?;
    let ids = fixtures.iter().map(|f| f.id.clone()).collect();
    Ok(VerificationReport::new(suite, ids, per_fixture.concat(), start.elapsed()))
}

fn pairs_par<F>(fx: &Fixture, f: F) -> Result<Vec<Check>>
where
    F: Fn(&str, &RepObject, &str, &RepObject) -> Result<Check> + Sync,
{
    fx.pairs().into_par_iter().map(|(a, x, b, y)| f(a, x, b, y)).collect()
}

fn ctx(fx: &Fixture) -> Result<QuotientCtx> {
    QuotientCtx::new(&fx.subgroup)
}

fn q3a_checks(fx: &Fixture) -> Result<Vec<Check>> {
    let q = ctx(fx)?;
    pairs_par(fx, |a, x, b, y| {
        let r = q.verify_q3a(x, y)?;
        Ok(Check::new(format!("{}/{a}->{b}", fx.id), r.left_dim, r.right_dim, r.passed())
            .with_detail(format!("span_equal={}", r.span_equal)))
    })
}

fn tq_th_checks(fx: &Fixture) -> Result<Vec<Check>> {
    let q = ctx(fx)?;
    fx.objects
        .par_iter()
        .map(|(a, x)| Ok(Check::equal(format!("{}/{a}", fx.id), q.trivial_in_q(x)?, x.in_th(&fx.subgroup)?)))
        .collect()
}

fn closed_immersion_checks(fx: &Fixture) -> Result<Vec<Check>> {
    let r = check_closed_immersion(&fx.subgroup)?;
    Ok(vec![
        Check::equal(format!("{}/end-dim", fx.id), r.end_dim, r.expected_end_dim),
        Check::new(format!("{}/regrouping", fx.id), r.regrouping_verified, true, r.regrouping_verified)
            .with_detail(format!("{} copies of the regular representation of H", r.copies)),
    ])
}

fn recoverability_checks(fx: &Fixture) -> Result<Vec<Check>> {
    let q = ctx(fx)?;
    pairs_par(fx, |a, x, b, y| {
        Ok(Check::equal(format!("{}/{a}->{b}", fx.id), hom_space(x, y)?.len(), q.recover_hom_dimension(x, y)?))
    })
}

/// Quotient objects of a fixture: every `qX`, and the two summands of each
/// `qX` cut out by the H-invariants projector.
fn fixture_qobjects(fx: &Fixture, q: &QuotientCtx) -> Result<Vec<(String, QObject)>> {
    let mut out = Vec::new();
    for (a, x) in &fx.objects {
        let qx = q.q_object(x)?;
        let s = q.split_all_idempotents(&qx, &x.reynolds(&fx.subgroup)?)?;
        out.push((a.clone(), qx));
        for (tag, summand) in [("inv", &s.image), ("rest", &s.complement)] {
            if !summand.object.is_zero() {
                out.push((format!("{a}[{tag}]"), summand.object.clone()));
            }
        }
    }
    Ok(out)
}

fn semisimple_checks(fx: &Fixture) -> Result<Vec<Check>> {
    let q = ctx(fx)?;
    fixture_qobjects(fx, &q)?
        .into_par_iter()
        .map(|(a, obj)| {
            let t = q.trace_form(&obj)?;
            let k = t.gram.rows();
            let rank = if t.nondegenerate() { k } else { t.gram.rank() };
            Ok(Check::new(format!("{}/{a}", fx.id), rank, k, t.nondegenerate())
                .with_detail(format!("det={}", t.determinant)))
        })
        .collect()
}

/// Idempotents of `End_Q(qX)` exercised by the Karoubi suite.
fn karoubi_idempotents(fx: &Fixture, q: &QuotientCtx, x: &RepObject) -> Result<Vec<(String, Matrix)>> {
    let n = x.dim();
    let e_h = x.reynolds(&fx.subgroup)?;
    let e_g = x.reynolds(&Subgroup::whole(&fx.group))?;
    let mut out = vec![
        ("id".to_string(), Matrix::identity(n)),
        ("zero".to_string(), Matrix::zeros(n, n)),
        ("inv-H".to_string(), e_h.clone()),
        ("inv-G".to_string(), e_g.clone()),
        ("inv-H-minus-G".to_string(), &e_h - &e_g),
    ];
    for (i, u) in q.q_end(&q.q_object(x)?)?.into_iter().enumerate() {
        if u.matrix().is_idempotent() && !u.matrix().is_identity() {
            out.push((format!("basis-{i}"), u.matrix().clone()));
        }
    }
    Ok(out)
}

fn karoubi_checks(fx: &Fixture) -> Result<Vec<Check>> {
    let q = ctx(fx)?;
    let per_object: Vec<Vec<Check>> = fx
        .objects
        .par_iter()
        .map(|(a, x)| {
            let qx = q.q_object(x)?;
            karoubi_idempotents(fx, &q, x)?
                .into_iter()
                .map(|(tag, u)| {
                    let name = format!("{}/{a}/{tag}", fx.id);
                    let s = match q.split_all_idempotents(&qx, &u) {
                        Ok(s) => s,
                        Err(e) => return Ok(Check::new(name, Value::Null, qx.dim(), false).with_detail(e.to_string())),
                    };
                    let witness = s.direct_sum_witness();
                    let total = s.image.object.dim() + s.complement.object.dim();
                    Ok(Check::new(name, total, qx.dim(), witness.is_ok() && total == qx.dim())
                        .with_detail(format!("summands {}+{}", s.image.object.dim(), s.complement.object.dim())))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    Ok(per_object.concat())
}

fn oracle_checks(fx: &Fixture) -> Result<Vec<Check>> {
    let q = ctx(fx)?;
    let h = &fx.subgroup;
    let mut checks = pairs_par(fx, |a, x, b, y| {
        let main = q.pre_quotient_hom(x, y)?;
        let independent = oracle_hom(&restrict(x, h)?, &restrict(y, h)?)?;
        let len = x.dim() * y.dim();
        let same = canonical_span(len, main.iter().map(Matrix::as_slice))
            == canonical_span(len, independent.iter().map(Matrix::as_slice));
        Ok(Check::new(format!("{}/{a}->{b}", fx.id), main.len(), independent.len(), same && main.len() == independent.len())
            .with_detail(format!("span_equal={same}")))
    })?;
    let objects: Vec<RepObject> = fx.objects.iter().map(|(_, x)| x.clone()).collect();
    let r = check_normal_quotient(h, &objects)?;
    checks.push(
        Check::new(format!("{}/normal-quotient", fx.id), r.natural_subgroup.len(), h.order(), r.passed())
            .with_detail(format!("{} pairs", r.pairs_checked)),
    );
    Ok(checks)
}

fn nested_checks(fx: &Fixture) -> Result<Vec<Check>> {
    let g = &fx.group;
    let q0 = ctx(fx)?;
    let q_triv = QuotientCtx::new(&Subgroup::trivial(g))?;
    let mut checks = Vec::new();

    // H₁ = H₀: bijective on every Hom space.
    let same = nested_functor(&q0, &q0)?;
    let down = nested_functor(&q0, &q_triv)?;
    let pair_checks: Vec<Vec<Check>> = fx
        .pairs()
        .into_par_iter()
        .map(|(a, x, b, y)| {
            let (qa, qb) = (q0.q_object(x)?, q0.q_object(y)?);
            let m = same.hom_map(&qa, &qb)?;
            let eq = Check::new(format!("{}/same/{a}->{b}", fx.id), m.source_dim, m.target_dim, m.is_bijective());
            let m = down.hom_map(&qa, &qb)?;
            let inc = Check::new(format!("{}/to-trivial/{a}->{b}", fx.id), m.source_dim, m.target_dim, m.is_inclusion())
                .with_detail(format!("target is all {}x{} matrices: {}", y.dim(), x.dim(), m.target_dim == x.dim() * y.dim()));
            Ok(vec![eq, inc])
        })
        .collect::<Result<_>>()?;
    checks.extend(pair_checks.into_iter().flatten());

    let small: Vec<(&str, QObject)> = fx
        .objects
        .iter()
        .filter(|(_, x)| x.dim() <= 3)
        .map(|(a, x)| Ok((a.as_str(), q0.q_object(x)?)))
        .collect::<Result<_>>()?;
    for (a, x) in &small {
        for (b, y) in &small {
            let ok = down.preserves_tensor(x, y, y, x)?;
            checks.push(Check::new(format!("{}/tensor/{a}->{b}", fx.id), ok, true, ok));
        }
    }

    // Every normal subgroup strictly between H and 1 gives a two-step chain.
    for mid in normal_subgroups(g) {
        if mid.order() == 1 || mid == fx.subgroup || !mid.is_subgroup_of(&fx.subgroup) {
            continue;
        }
        let q1 = QuotientCtx::new(&mid)?;
        let composite = nested_functor(&q0, &q1)?.then(&nested_functor(&q1, &q_triv)?)?;
        let first = nested_functor(&q0, &q1)?;
        let second = nested_functor(&q1, &q_triv)?;
        let tag = format!("{}/chain-{}", fx.id, mid.order());
        let reject = nested_functor(&q1, &q0).is_err();
        checks.push(Check::new(format!("{tag}/rejects-reverse"), reject, true, reject));
        for (a, x) in &fx.objects {
            let qa = q0.q_object(x)?;
            let c1 = first.hom_map(&qa, &qa)?.coordinates;
            let mapped = first.map_object(&qa)?;
            let c2 = second.hom_map(&mapped, &mapped)?.coordinates;
            let direct = down.hom_map(&qa, &qa)?.coordinates;
            let via = composite.hom_map(&qa, &qa)?.coordinates;
            let ok = match (c1, c2, direct, via) {
                (Some(c1), Some(c2), Some(d), Some(v)) => &c2 * &c1 == d && v == d,
                _ => false,
            };
            checks.push(Check::new(format!("{tag}/compose/{a}"), ok, true, ok));
        }
    }
    Ok(checks)
}

fn run_graded(fixtures: &[GradedFixture]) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut checks = Vec::new();
    for fx in fixtures {
        for (a, x) in &fx.objects {
            if in_tate_subcategory(x) {
                checks.push(Check::equal(format!("{}/omega0/{a}", fx.id), omega0_tate(x)?.dim, x.total_dim()));
            }
        }
        let pairs: Vec<(&String, &GradedRepObject, &String, &GradedRepObject)> = fx
            .objects
            .iter()
            .flat_map(|(a, x)| fx.objects.iter().map(move |(b, y)| (a, x, b, y)))
            .collect();
        let homs: Vec<Check> = pairs
            .into_par_iter()
            .map(|(a, x, b, y)| {
                let main = tate_quotient_hom(x, y)?;
                let oracle = forget_grading_hom(x, y)?;
                let same = main == oracle;
                Ok(Check::new(format!("{}/hom/{a}->{b}", fx.id), main.len(), oracle.len(), same).with_detail(format!("span_equal={same}")))
            })
            .collect::<Result<_>>()?;
        checks.extend(homs);
        if fx.group.order() == 1 {
            for r in -3..=3 {
                for s in -3..=3 {
                    let x = GradedRepObject::tate_power(&fx.group, r);
                    let y = GradedRepObject::tate_power(&fx.group, s);
                    checks.push(Check::equal(format!("{}/unit-twists/{r:+}->{s:+}", fx.id), tate_quotient_hom(&x, &y)?.len(), 1));
                }
            }
        }
    }
    let ids = fixtures.iter().map(|f| f.id.clone()).collect();
    Ok(VerificationReport::new(Suite::Tate, ids, checks, start.elapsed()))
}

fn class_label(a: &crate::linalg::Rational) -> String {
    a.to_string()
}

fn run_cocycle() -> VerificationReport {
    let start = Instant::now();
    let classes = sample_classes();
    let mut checks = Vec::new();
    for n in 1..=MAX_MODULUS {
        for a in &classes {
            let name = format!("n{n:02}/identity/{}", class_label(a));
            match KummerCocycle::new(n, a.clone()) {
                Ok(c) => checks.push(Check::new(name, n * n * n, n * n * n, c.satisfies_cocycle_identity()).with_detail("triples checked")),
                Err(e) => checks.push(Check::new(name, Value::Null, n * n * n, false).with_detail(e.to_string())),
            }
        }
        for a in &classes {
            for b in &classes {
                let name = format!("n{n:02}/compose/{}*{}", class_label(a), class_label(b));
                let result = (|| -> Result<(bool, bool)> {
                    let (s, t) = (KummerCocycle::new(n, a.clone())?, KummerCocycle::new(n, b.clone())?);
                    let c = compose_twists(&s, &t)?;
                    let expected = KummerCocycle::new(n, a * b)?;
                    Ok((c.product == expected, c.verify(&s, &t)))
                })();
                checks.push(match result {
                    Ok((tables, witness)) => Check::new(name, tables, true, tables && witness).with_detail(format!("coboundary_verified={witness}")),
                    Err(e) => Check::new(name, Value::Null, true, false).with_detail(e.to_string()),
                });
            }
        }
        let one = KummerCocycle::new(n, crate::linalg::Rational::one()).expect("trivial class");
        let f = twist_functor(&one);
        let x = CyclicGradedObject::new(n, &vec![1; n]).expect("one degree each");
        let identity = f.is_identity() && f.tensor_structure(&x, &x).map_or(false, |j| j.is_identity());
        checks.push(Check::new(format!("n{n:02}/unit-class"), identity, true, identity));
    }
    VerificationReport::new(Suite::Cocycle, vec![CYCLIC_FIXTURE_ID.into()], checks, start.elapsed())
}

/// Summary printed by `tannakin group`.
#[derive(Debug, Clone, Serialize)]
pub struct GroupSummary {
    pub order: usize,
    pub conjugacy_classes: usize,
    pub abelian: bool,
    pub generators: Vec<String>,
    pub normal_subgroups: Vec<Vec<String>>,
}

pub fn group_summary(g: &std::sync::Arc<FiniteGroup>) -> GroupSummary {
    GroupSummary {
        order: g.order(),
        conjugacy_classes: g.conjugacy_classes().len(),
        abelian: g.is_abelian(),
        generators: g.generators().iter().map(|&x| g.label(x)).collect(),
        normal_subgroups: normal_subgroups(g)
            .iter()
            .map(|h| h.elements().iter().map(|&x| g.label(x)).collect())
            .collect(),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Membership {
    pub object: String,
    pub trivial_in_q: bool,
    pub in_th: bool,
}

/// Report printed by `tannakin quotient`.
#[derive(Debug, Clone, Serialize)]
pub struct QuotientReport {
    pub group_order: usize,
    pub subgroup: Vec<String>,
    pub objects: Vec<String>,
    /// `hom_t[i][j] = dim Hom_G(X_i, X_j)`.
    pub hom_t: Vec<Vec<usize>>,
    /// `hom_q[i][j] = dim Hom_Q(qX_i, qX_j)`.
    pub hom_q: Vec<Vec<usize>>,
    pub membership: Vec<Membership>,
    pub q3a: Vec<Check>,
    pub passed: bool,
}

pub fn quotient_report(q: &QuotientCtx, objects: &[(String, RepObject)]) -> Result<QuotientReport> {
    let g = q.group();
    let n = objects.len();
    let cells: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    let computed: Vec<(usize, usize, Check)> = cells
        .par_iter()
        .map(|&(i, j)| {
            let (x, y) = (&objects[i].1, &objects[j].1);
            let r = q.verify_q3a(x, y)?;
            let check = Check::new(format!("{}->{}", objects[i].0, objects[j].0), r.left_dim, r.right_dim, r.passed())
                .with_detail(format!("span_equal={}", r.span_equal));
            Ok((hom_space(x, y)?.len(), r.left_dim, check))
        })
        .collect::<Result<_>>()?;
    let mut hom_t = vec![vec![0; n]; n];
    let mut hom_q = vec![vec![0; n]; n];
    let mut q3a = Vec::new();
    for (&(i, j), (t, qd, c)) in cells.iter().zip(computed) {
        hom_t[i][j] = t;
        hom_q[i][j] = qd;
        q3a.push(c);
    }
    q3a.sort_by(|a, b| a.name.cmp(&b.name));
    let membership = objects
        .iter()
        .map(|(a, x)| Ok(Membership { object: a.clone(), trivial_in_q: q.trivial_in_q(x)?, in_th: x.in_th(q.subgroup())? }))
        .collect::<Result<Vec<_>>>()?;
    let passed = q3a.iter().all(|c| c.passed) && membership.iter().all(|m| m.trivial_in_q == m.in_th);
    Ok(QuotientReport {
        group_order: g.order(),
        subgroup: q.subgroup().elements().iter().map(|&x| g.label(x)).collect(),
        objects: objects.iter().map(|(a, _)| a.clone()).collect(),
        hom_t,
        hom_q,
        membership,
        q3a,
        passed,
    })
}

/// Default objects for a group given only by a file: the unit, the regular
/// representation and, for permutation groups, the permutation
/// representation, its sum-zero part and the sign.
pub fn default_objects(g: &std::sync::Arc<FiniteGroup>) -> Vec<(String, RepObject)> {
    let mut out = vec![("unit".to_string(), RepObject::unit(g))];
    if let Ok(perm) = RepObject::permutation(g) {
        if let Ok(sign) = RepObject::sign(g) {
            if !sign.is_trivial_object() {
                out.push(("sign".into(), sign));
            }
        }
        if perm.dim() > 1 {
            out.push(("standard".into(), fixtures::augmentation_complement(&perm)));
        }
        out.push(("permutation".into(), perm));
    }
    out.push(("regular".into(), RepObject::regular(g)));
    out
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed { "ok" } else { "FAIL" };
            write!(f, "{status:4} {}  {} vs {}", c.name, c.left, c.right)?;
            if let Some(d) = &c.detail {
                write!(f, "  ({d})")?;
            }
            writeln!(f)?;
        }
        let failed = self.failures().count();
        write!(
            f,
            "suite {}: {} checks, {} failed, {}",
            self.suite,
            self.checks.len(),
            failed,
            if self.passed { "PASS" } else { "FAIL" }
        )
    }
}
