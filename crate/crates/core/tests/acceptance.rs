//! Acceptance gate: ten criteria, each an exact equality of integers or
//! rationals. Prints one PASS/FAIL line per criterion and exits nonzero if
//! any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use tannakin_core::fixtures;
use tannakin_core::graded::{omega0_tate, tate_quotient_hom, GradedRepObject};
use tannakin_core::group::Subgroup;
use tannakin_core::linalg::Rational;
use tannakin_core::oracle::check_closed_immersion;
use tannakin_core::quotient::{nested_functor, QuotientCtx};
use tannakin_core::twist::{compose_twists, KummerCocycle};
use tannakin_core::verify::{run_suite, Suite, VerificationReport};

type Outcome = Result<String, String>;

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn suite(s: Suite) -> Result<VerificationReport, String> {
    let r = run_suite(s, None).map_err(|e| format!("suite {s} errored: {e}"))?;
    if let Some(c) = r.failures().next() {
        return Err(format!("{} failed checks, first {}: {} vs {}", r.failures().count(), c.name, c.left, c.right));
    }
    Ok(r)
}

fn q(n: i64) -> Rational {
    Rational::from(n)
}

fn ac1() -> Outcome {
    let r = suite(Suite::Q3a)?;
    let fx = fixtures::s3();
    let ctx = QuotientCtx::new(&fx.subgroup).map_err(|e| e.to_string())?;
    let std2 = fx.object("std2").unwrap();
    let reg = fx.object("regular").unwrap();
    let a = ctx.verify_q3a(std2, std2).map_err(|e| e.to_string())?;
    let b = ctx.verify_q3a(reg, reg).map_err(|e| e.to_string())?;
    ensure((a.left_dim, a.right_dim, a.span_equal) == (2, 2, true), || format!("std2: {a:?}"))?;
    ensure((b.left_dim, b.right_dim, b.span_equal) == (12, 12, true), || format!("regular: {b:?}"))?;
    ensure(b.left_dim == 36 / 3, || "regular differs from |G|^2/|H|".into())?;
    Ok(format!("{} pairs; (std2,std2) 2 = 2; (regular,regular) 12 = 12", r.checks.len()))
}

fn ac2() -> Outcome {
    let r = suite(Suite::TqTh)?;
    let fx = fixtures::s3();
    let ctx = QuotientCtx::new(&fx.subgroup).map_err(|e| e.to_string())?;
    let sign = fx.object("sign").unwrap();
    ensure(ctx.trivial_in_q(sign).unwrap() && !sign.is_trivial_object(), || "sign of S3 not discriminating".into())?;
    Ok(format!("{} objects agree; sign of S3 trivial in Q, nontrivial in T", r.checks.len()))
}

fn ac3() -> Outcome {
    let r = suite(Suite::ClosedImmersion)?;
    // |G|^2 / |H| for the five fixtures.
    let expected = [12, 8, 32, 144, 48];
    for (fx, e) in fixtures::all().iter().zip(expected) {
        let c = check_closed_immersion(&fx.subgroup).map_err(|e| e.to_string())?;
        ensure(c.end_dim == e && c.regrouping_verified, || format!("{}: {c:?}", fx.id))?;
    }
    Ok(format!("{} checks; End dims {expected:?}; coset regrouping exact", r.checks.len()))
}

fn ac4() -> Outcome {
    let r = suite(Suite::Recoverability)?;
    Ok(format!("{} pairs", r.checks.len()))
}

fn ac5() -> Outcome {
    let r = suite(Suite::Semisimple)?;
    Ok(format!("{} quotient objects with nonzero Gram determinant", r.checks.len()))
}

fn ac6() -> Outcome {
    let r = suite(Suite::Karoubi)?;
    let fx = fixtures::s3();
    let ctx = QuotientCtx::new(&fx.subgroup).map_err(|e| e.to_string())?;
    let reg = fx.object("regular").unwrap();
    let a = ctx.q_object(reg).unwrap();
    let s = ctx.split_all_idempotents(&a, &reg.reynolds(&fx.subgroup).unwrap()).map_err(|e| e.to_string())?;
    let (x, y) = (&s.image.object, &s.complement.object);
    let dims = (x.dim(), y.dim());
    let blocks = [
        ctx.q_hom(x, x).unwrap().len(),
        ctx.q_hom(x, y).unwrap().len(),
        ctx.q_hom(y, x).unwrap().len(),
        ctx.q_hom(y, y).unwrap().len(),
    ];
    ensure(dims == (2, 4) && blocks == [4, 0, 0, 8], || format!("summands {dims:?}, End blocks {blocks:?}"))?;
    s.direct_sum_witness().map_err(|e| e.to_string())?;
    Ok(format!("{} idempotents split; q(regular S3) = 2 + 4 with End 4 + 8 = 12", r.checks.len()))
}

fn ac7() -> Outcome {
    let r = suite(Suite::Oracle)?;
    Ok(format!("{} checks; spans equal on every pair", r.checks.len()))
}

fn ac8() -> Outcome {
    let r = suite(Suite::Tate)?;
    let g = fixtures::trivial_group();
    for a in -3..=3 {
        for b in -3..=3 {
            let n = tate_quotient_hom(&GradedRepObject::tate_power(&g, a), &GradedRepObject::tate_power(&g, b))
                .map_err(|e| e.to_string())?
                .len();
            ensure(n == 1, || format!("dim Hom(1({a}), 1({b})) = {n}"))?;
        }
    }
    let x = GradedRepObject::tate_power(&g, 3).direct_sum(&GradedRepObject::tate_power(&g, -1)).unwrap();
    let w = omega0_tate(&x).map_err(|e| e.to_string())?;
    ensure(w.dim == 2, || format!("omega0(1(3)+1(-1)) = {}", w.dim))?;
    Ok(format!("{} checks; Hom(1(a),1(b)) = 1 on the 7x7 grid", r.checks.len()))
}

fn ac9() -> Outcome {
    let r = suite(Suite::Cocycle)?;
    let m = KummerCocycle::new(2, q(-1)).unwrap();
    ensure(m.table() == [q(1), q(1), q(1), q(-1)], || format!("n=2, a=-1 table {:?}", m.table()))?;
    let six = compose_twists(&KummerCocycle::new(3, q(2)).unwrap(), &KummerCocycle::new(3, q(3)).unwrap()).unwrap();
    ensure(six.product == KummerCocycle::new(3, q(6)).unwrap(), || "compose(2,3) differs from cocycle(6)".into())?;
    ensure(compose_twists(&m, &m).unwrap().product.is_trivial(), || "(-1)(-1) is not trivial".into())?;
    Ok(format!("{} checks; n <= 12, classes -1, 2, 3, 1/2", r.checks.len()))
}

fn ac10() -> Outcome {
    let r = suite(Suite::Nested)?;
    let fx = fixtures::s4_v4();
    let q0 = QuotientCtx::new(&fx.subgroup).unwrap();
    let q1 = QuotientCtx::new(&Subgroup::trivial(&fx.group)).unwrap();
    let f = nested_functor(&q0, &q1).map_err(|e| e.to_string())?;
    let std3 = q0.q_object(fx.object("std3").unwrap()).unwrap();
    let m = f.hom_map(&std3, &std3).unwrap();
    ensure(m.is_inclusion() && m.target_dim == 9 && m.source_dim < 9, || format!("S4/V4 -> S4/1 on std3: {m:?}"))?;
    Ok(format!("{} checks; End(std3) grows {} -> {} from V4 to trivial", r.checks.len(), m.source_dim, m.target_dim))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("Hom_Q(qX,qY) = omega^q(Hom(X,Y)^H)", ac1),
        ("T^q = T^H", ac2),
        ("closed immersion", ac3),
        ("recoverability of T from Q", ac4),
        ("semisimplicity", ac5),
        ("Karoubi splitting", ac6),
        ("restriction oracle equality", ac7),
        ("graded Tate quotient", ac8),
        ("Kummer cocycles", ac9),
        ("nested quotient functors", ac10),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(summary) => println!("AC{:<2} PASS  {title}: {summary}", i + 1),
            Err(why) => {
                failed += 1;
                println!("AC{:<2} FAIL  {title}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed in {:.1?}", criteria.len() - failed, criteria.len(), start.elapsed());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
