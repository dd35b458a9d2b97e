//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
//! failure. Run with `cargo test -p cwcode --test acceptance`.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use cwcode::anticodes::{anticode_ball, anticode_m, anticode_s};
use cwcode::bounds::feasibility_report;
use cwcode::combinatorics::binomial;
use cwcode::designs::{gs_construct_2_3, gs_derive, steiner_derive, steiner_divisibility, Divisibility, SteinerSystem};
use cwcode::families::{
    f5_construct, f5_construct_w3, mds_cw_construct, mds_cw_union, moa_cw_construct, moa_reduce, FamilyCode, ReduceMode,
};
use cwcode::oracle::{max_anticode_search, max_code_search, perfect_code_search, SearchBudget, SearchStatus};
use cwcode::ortharray::oa_feasible;
use cwcode::verifier::{certify, diameter_perfect_check, perfect_check, support_regularity};
use cwcode::{Family, VerificationReport};

type Outcome = Result<String, String>;

/// Name, check, time limit in seconds.
type Criterion = (&'static str, fn() -> Outcome, u64);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn passed(r: &VerificationReport, what: &str) -> Result<(), String> {
    ensure(r.passed(), || format!("{what}: {}", r.failures().map(|c| c.to_string()).collect::<Vec<_>>().join("; ")))
}

fn c(n: u64, k: u64) -> u128 {
    binomial(n, k).unwrap() as u128
}

fn certified(fc: &FamilyCode, what: &str) -> Result<(), String> {
    let r = certify(fc).map_err(|e| format!("{what}: {e}"))?;
    passed(&r, what)
}

/// Constructions shared by several criteria.
fn gs_codes() -> Vec<(u64, cwcode::designs::GeneralizedSteinerSystem)> {
    [3u64, 4, 5, 7, 8].iter().map(|&q| (q, gs_construct_2_3(q).expect("prime power"))).collect()
}

fn criterion_1() -> Outcome {
    let mut sizes = Vec::new();
    for (q, g) in gs_codes() {
        passed(&g.verify(), &format!("gs_verify q={q}"))?;
        let size = g.code().len() as u128;
        let formula = c(q + 1, 2) * ((q - 1) as u128).pow(2) / 3;
        ensure(size == formula, || format!("q={q}: size {size} != {formula}"))?;
        let a = anticode_s(q as usize + 1, 3, 2, q).map_err(|e| e.to_string())?;
        let r = diameter_perfect_check(g.code(), &a).map_err(|e| e.to_string())?;
        passed(&r, &format!("diameter perfect q={q}"))?;
        let product = size * a.len() as u128;
        let space = c(q + 1, 3) * ((q - 1) as u128).pow(3);
        ensure(product == space, || format!("q={q}: product {product} != {space}"))?;
        sizes.push(format!("q{q}:{size}"));
    }
    Ok(format!("GS sizes {}", sizes.join(",")))
}

fn criterion_2() -> Outcome {
    let mut instances = 0;
    let mut binary = 0;
    for q in [2u64, 3, 4, 5, 7, 8] {
        for w in 2..=4usize {
            for n in w..=(q as usize + 1) {
                let fc = mds_cw_construct(n, w, q).map_err(|e| format!("({n},{w},{q}): {e}"))?;
                let code = fc.code();
                if code.len() >= 2 {
                    let d = code.min_distance().map_err(|e| e.to_string())?;
                    ensure(d == w, || format!("({n},{w},{q}): d={d}"))?;
                }
                passed(&support_regularity(code, q as usize - 1, None), &format!("({n},{w},{q}) per-support"))?;
                if q == 2 {
                    // Aᵐ over two symbols is a single word, so d = D+1 cannot hold
                    binary += 1;
                    continue;
                }
                let a = anticode_m(n, w, w - 1, q).map_err(|e| e.to_string())?;
                let r = diameter_perfect_check(code, &a).map_err(|e| format!("({n},{w},{q}): {e}"))?;
                passed(&r, &format!("({n},{w},{q}) diameter perfect"))?;
                instances += 1;
            }
        }
    }
    Ok(format!(
        "{instances} instances diameter perfect; {binary} binary instances checked for distance and support counts only"
    ))
}

fn criterion_3() -> Outcome {
    let base = mds_cw_construct(4, 3, 3).map_err(|e| e.to_string())?;
    let u = mds_cw_union(&base, &base).map_err(|e| e.to_string())?;
    ensure(u.code().len() == 16 && u.code().q() == 5, || format!("union has {} words over {}", u.code().len(), u.code().q()))?;
    certified(&u, "union")?;
    Ok("(4,3,5) MDS-CW with 16 codewords".into())
}

fn moa_codes() -> Result<(FamilyCode, FamilyCode), String> {
    let a = moa_cw_construct(6, 2, 1, 5).map_err(|e| e.to_string())?;
    let b = moa_cw_construct(7, 3, 1, 7).map_err(|e| e.to_string())?;
    Ok((a, b))
}

fn criterion_4() -> Outcome {
    let (a, b) = moa_codes()?;
    for (fc, shape, size) in [(&a, (5, 4, 4, 6), 25), (&b, (6, 4, 5, 8), 294)] {
        let k = fc.claimed();
        let got = (k.n, k.d, k.w, k.q);
        ensure(got == shape && fc.code().len() == size, || format!("got {got:?} with {} words", fc.code().len()))?;
        let strength = k.w - k.d + 1;
        let per = (k.q as usize - 1).pow(strength as u32);
        passed(&support_regularity(fc.code(), per, Some(strength)), "support regularity")?;
        let anticode = anticode_m(k.n, k.w, k.d - 1, k.q).map_err(|e| e.to_string())?;
        let r = diameter_perfect_check(fc.code(), &anticode).map_err(|e| e.to_string())?;
        passed(&r, "diameter perfect")?;
        certified(fc, "certificate")?;
    }
    Ok("(5,4,4)_6 with 25 and (6,4,5)_8 with 294 codewords".into())
}

fn criterion_5() -> Outcome {
    let (_, b) = moa_codes()?;
    let p = moa_reduce(&b, ReduceMode::Puncture).map_err(|e| e.to_string())?;
    let s = moa_reduce(&b, ReduceMode::Shorten).map_err(|e| e.to_string())?;
    for (fc, shape) in [(&p, (5, 4, 5, 8)), (&s, (5, 3, 4, 8))] {
        let k = fc.claimed();
        ensure((k.n, k.d, k.w, k.q) == shape, || format!("claimed {k}"))?;
        certified(fc, &format!("{shape:?}"))?;
    }
    Ok(format!("puncture {} words, shorten {} words", p.code().len(), s.code().len()))
}

fn f5_codes() -> Result<Vec<FamilyCode>, String> {
    let mut out = Vec::new();
    for n in 4..=10 {
        out.push(f5_construct_w3(n).map_err(|e| e.to_string())?);
    }
    for n in 3..=8 {
        out.push(f5_construct(n, 2).map_err(|e| e.to_string())?);
    }
    Ok(out)
}

fn criterion_6() -> Outcome {
    for fc in f5_codes()? {
        let k = fc.claimed();
        let n = k.n as u64;
        let q0 = match k.w {
            3 if n % 2 == 1 => n - 1,
            _ => n,
        };
        ensure(fc.code().q() == q0, || format!("n={n} w={}: alphabet {} != {q0}", k.w, fc.code().q()))?;
        ensure(fc.code().len() as u128 == c(n, k.w as u64), || format!("n={n} w={}: size", k.w))?;
        let d = fc.code().min_distance().map_err(|e| e.to_string())?;
        ensure(d == k.w + 1, || format!("n={n} w={}: d={d}", k.w))?;
        certified(&fc, &format!("n={n} w={}", k.w))?;
    }
    Ok("w=3 for n=4..10 and w=2 for n=3..8 at the optimal alphabet".into())
}

fn criterion_7() -> Outcome {
    let budget = SearchBudget::default();
    let r = perfect_code_search(4, 3, 3, 1, &budget).map_err(|e| e.to_string())?;
    ensure(r.status == SearchStatus::Exact && r.value == 8, || format!("search returned {} ({})", r.value, r.status))?;
    let code = r.witness.ok_or("no witness")?;
    passed(&perfect_check(&code, 1).map_err(|e| e.to_string())?, "perfect_check")?;
    let ball = anticode_ball(4, 3, 1, 3).map_err(|e| e.to_string())?;
    ensure(ball.len() == 4, || format!("ball size {}", ball.len()))?;
    passed(&diameter_perfect_check(&code, &ball).map_err(|e| e.to_string())?, "diameter perfect vs ball")?;
    let none = perfect_code_search(5, 4, 3, 1, &budget).map_err(|e| e.to_string())?;
    ensure(none.status == SearchStatus::Exact && none.witness.is_none(), || format!("J_3(5,4): {}", none.note))?;
    Ok(format!("size-8 witness in J_3(4,3); J_3(5,4): {}", none.note))
}

fn criterion_8() -> Outcome {
    let budget = SearchBudget::default().with_workers(std::thread::available_parallelism().map_or(1, |n| n.get()));
    let a = max_code_search(4, 3, 3, 3, &budget).map_err(|e| e.to_string())?;
    ensure(a.status == SearchStatus::Exact && a.value == 8, || format!("A_3(4,3,3) = {} ({})", a.value, a.status))?;
    let b = max_code_search(6, 4, 5, 3, &budget).map_err(|e| e.to_string())?;
    ensure(b.status == SearchStatus::Exact && b.value == 12, || format!("A_3(6,4,5) = {} ({})", b.value, b.status))?;
    let m = anticode_m(4, 3, 2, 3).map_err(|e| e.to_string())?;
    let c = max_anticode_search(4, 2, 3, 3, &budget).map_err(|e| e.to_string())?;
    ensure(c.status == SearchStatus::Exact && c.value == m.len() as u64, || format!("anticode {} vs {}", c.value, m.len()))?;
    Ok(format!("A_3(4,3,3)=8, A_3(6,4,5)=12 ({} nodes), max anticode(4,2,3,3)=4", b.nodes))
}

fn criterion_9() -> Outcome {
    let fano = SteinerSystem::fano();
    passed(&fano.verify(), "Fano plane")?;
    ensure(steiner_divisibility(2, 3, 8) != Divisibility::Pass, || "S(2,3,8) passed divisibility".into())?;
    let derived = steiner_derive(&fano, 0).map_err(|e| e.to_string())?;
    ensure((derived.t(), derived.w(), derived.n()) == (1, 2, 6), || format!("derived {derived}"))?;
    passed(&derived.verify(), "derived S(1,2,6)")?;
    let g = gs_construct_2_3(4).map_err(|e| e.to_string())?;
    let gd = gs_derive(&g, 0, 1).map_err(|e| e.to_string())?;
    ensure(gd.t() == 1 && gd.code().n() == 4 && gd.code().q() == 4, || "derived GS shape".into())?;
    passed(&gd.verify(), "derived GS(1,2,4,4)")?;
    Ok(format!("derived GS(1,2,4,4) has {} codewords", gd.code().len()))
}

fn criterion_10() -> Outcome {
    let mut params: Vec<(usize, usize, usize, u64, Family)> = Vec::new();
    for (q, g) in gs_codes() {
        params.push((g.code().n(), 3, 3, q, Family::GenSteiner));
    }
    for q in [3u64, 4, 5, 7, 8] {
        for w in 2..=4usize {
            for n in w..=(q as usize + 1) {
                params.push((n, w, w, q, Family::MdsCw));
            }
        }
    }
    params.push((4, 3, 3, 5, Family::MdsCw));
    let (a, b) = moa_codes()?;
    let mut built = vec![a, b.clone()];
    for mode in [ReduceMode::Puncture, ReduceMode::Shorten] {
        built.push(moa_reduce(&b, mode).map_err(|e| e.to_string())?);
    }
    built.extend(f5_codes()?);
    params.extend(built.iter().map(|fc| {
        let k = fc.claimed();
        (k.n, k.d, k.w, k.q, fc.family())
    }));
    for &(n, d, w, q, family) in &params {
        let r = feasibility_report(n, d, w, q);
        let bad: Vec<String> = r.violations_for(family).iter().map(|v| v.to_string()).collect();
        ensure(bad.is_empty(), || format!("({n},{d},{w})_{q} {family}: {}", bad.join("; ")))?;
    }
    for q in [3u64, 4, 5] {
        let v = oa_feasible(2, q as usize + 2, q);
        ensure(v.is_infeasible(), || format!("OA(2,{},{q}) judged {v}", q + 2))?;
    }
    Ok(format!("{} constructions violate no claim of their own family", params.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("generalized Steiner systems GS(2,3,q+1,q)", criterion_1, 10),
        ("MDS-CW codes for q <= 8, w <= 4", criterion_2, 30),
        ("MDS-CW union (4,3,3)+(4,3,3)", criterion_3, 1),
        ("modified-OA constructions", criterion_4, 60),
        ("puncture and shorten", criterion_5, 30),
        ("one codeword per support at q0", criterion_6, 10),
        ("ternary 1-perfect code search", criterion_7, 60),
        ("oracle concordance", criterion_8, 300),
        ("Steiner and generalized Steiner designs", criterion_9, 1),
        ("bounds soundness", criterion_10, 1),
    ];
    let mut failures = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panic: {}", msg.unwrap_or_default()))
        });
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(*limit);
        let (ok, detail) = match outcome {
            Ok(d) if in_time => (true, d),
            Ok(d) => (false, format!("{d}; over the {limit} s limit")),
            Err(e) => (false, e),
        };
        if !ok {
            failures += 1;
        }
        println!(
            "ACCEPT {:>2} {} {name} [{:.3} s / {limit} s] {detail}",
            i + 1,
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64()
        );
    }
    println!("ACCEPT summary {} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
