mod common;

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use common::*;
use num_bigint::BigInt;
use ospkw_core::atyp::{atypicality_degree, is_tame, shifted_standard};
use ospkw_core::blocks::{bottom_of_block, fingerprint, lambda_x_family};
use ospkw_core::characters::*;
use ospkw_core::hook::{frobenius_weight, highest_weight_via_reflections};
use ospkw_core::rootdata::{apply_weyl, sigma_twist, weyl_elements, Twist};
use ospkw_core::{
    Algebra, BorelData, EpsDeltaSequence, Family, HookPartition, LaurentPolynomial, Result, Root, Weight,
};

type Outcome = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ok<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn tame_cases(algs: &[Algebra], size: u32) -> Vec<(Algebra, HookPartition, bool)> {
    let mut out = Vec::new();
    for alg in algs {
        for lam in HookPartition::enumerate(alg.n(), alg.m(), size) {
            if is_tame(&lam, alg, false).unwrap().tame {
                out.push((*alg, lam.clone(), false));
                if alg.family() == Family::D {
                    out.push((*alg, lam, true));
                }
            }
        }
    }
    out
}

fn trivial_modules() -> Outcome {
    let cases = [(Family::B, 1, 1, 2), (Family::B, 2, 2, 8), (Family::D, 2, 1, 2), (Family::D, 2, 2, 4), (Family::D, 3, 2, 8)];
    for (f, m, n, j) in cases {
        let a = alg(f, m, n);
        let cr = ok(kw_character(&hp("", &a), &a, false))?;
        ensure(cr.character == LaurentPolynomial::one(n, m), || format!("{a}: character is not 1"))?;
        ensure(cr.j_used == j, || format!("{a}: j = {} instead of {j}", cr.j_used))?;
    }
    Ok("trivial KW character is 1 for B(1,1), B(2,2), D(2,1), D(2,2), D(3,2)".into())
}

fn euler_constants() -> Outcome {
    for (f, k) in [(Family::B, 1), (Family::B, 2), (Family::D, 1), (Family::D, 2)] {
        let a = ok(Algebra::root_system(f, k, k))?;
        let b = BorelData::odd(&a);
        let simple = b.simple_roots();
        let levi: Vec<Root> = simple[..simple.len() - 1].to_vec();
        let ch = ok(euler_char_character(&levi, &a.zero_weight(), &b))?;
        let want = if f == Family::B { 1i64 << k } else { 1i64 << (k - 1) };
        ensure(ch == LaurentPolynomial::constant(k, k, BigInt::from(want)), || format!("{a}: got {ch:?}"))?;
    }
    Ok("Euler characteristic constants 2^k (B) and 2^(k-1) (D) at k = 1, 2".into())
}

fn frobenius_golden() -> Outcome {
    let a = alg(Family::B, 4, 5);
    let lam = hp("10,9,6,4,4,4,3,2,1,1,1", &a);
    let b = ok(EpsDeltaSequence::parse("ddeeddeed", &a).and_then(|s| BorelData::from_sequence(&a, &s)))?;
    let want = Weight::from_ints(&[10, 9, 4, 2, 0], &[9, 6, 3, 2]);
    let got = ok(frobenius_weight(&lam, &b))?;
    ensure(got == want, || format!("got {got}"))?;
    let walked = ok(highest_weight_via_reflections(&lam, &b, false))?;
    ensure(walked == want, || format!("reflection walk gives {walked}"))?;
    Ok("Frobenius highest weight for the ddeeddeed Borel of osp(9|10)".into())
}

fn bottom_golden() -> Outcome {
    let a = alg(Family::B, 3, 3);
    let trace = ok(bottom_of_block(&hp("6,6,5,2,1,1", &a), &a))?;
    let shown: Vec<String> = std::iter::once(trace.steps.first().map(|s| s.before.to_string()).unwrap_or_default())
        .chain(trace.steps.iter().map(|s| s.after.to_string()))
        .collect();
    let want = ["(11/2,9/2,5/2 | 11/2,5/2,1/2)", "(11/2,9/2,-3/2 | 11/2,3/2,1/2)", "(9/2,-3/2,-5/2 | 5/2,3/2,1/2)"];
    ensure(shown == want, || format!("shifted weights {shown:?}"))?;
    let parts: Vec<String> = trace.steps.iter().map(|s| s.partition.to_string()).collect();
    ensure(parts == ["(6,6,1,1,1,1)", "(5)"], || format!("partitions {parts:?}"))?;
    Ok("osp(7|6) bottom chain (6,6,5,2,1,1) -> (6,6,1,1,1,1) -> (5)".into())
}

fn family_golden() -> Outcome {
    let a = alg(Family::D, 3, 2);
    let rho = BorelData::standard(&a).rho().clone();
    let fam = ok(lambda_x_family(&hp("3,3,3,2,2,2,1", &a), &a))?;
    let got: Vec<(i64, String, String)> =
        fam.iter().map(|(x, p)| (*x, p.to_string(), (&p.natural(false) + &rho).to_string())).collect();
    let want = [
        (0, "(3,2,2,2,2,2,1)", "(2,0 | 7,5,0)"),
        (1, "(3,3,3,2,2,2,1)", "(2,1 | 7,5,1)"),
        (3, "(4,4,3,3,3,2,1)", "(3,2 | 7,5,3)"),
        (4, "(5,4,3,3,3,3,1)", "(4,2 | 7,5,4)"),
    ];
    let want: Vec<(i64, String, String)> = want.iter().map(|(x, p, w)| (*x, p.to_string(), w.to_string())).collect();
    ensure(got == want, || format!("got {got:?}"))?;
    Ok("osp(6|4) family X = {0,1,3,4} with its four partitions".into())
}

fn euler_equals_kw() -> Outcome {
    let cases = tame_cases(&[alg(Family::B, 2, 2), alg(Family::D, 2, 2)], 6);
    for (a, lam, minus) in &cases {
        let report = ok(is_tame(lam, a, false))?;
        let b = report.witness_borel.clone().unwrap_or_else(|| BorelData::standard(a));
        let mut levi = report.levi.clone().unwrap();
        let mut weight = report.witness_weight.clone().unwrap();
        let mut b = b;
        if *minus {
            b = b.twisted();
            weight = weight.twisted();
            levi = levi.iter().map(Twist::twisted).collect();
        }
        let euler = ok(euler_char_character(&levi, &weight, &b))?;
        let kw = ok(kw_character(lam, a, *minus))?;
        ensure(euler == kw.character, || format!("{a} {lam} minus={minus}"))?;
    }
    Ok(format!("Euler characteristic equals KW term by term ({} modules over B(2,2), D(2,2))", cases.len()))
}

fn property_suite() -> Outcome {
    let algs = algebras(2, 2);
    let cases = tame_cases(&algs, 6);
    let mut weyl_cache: BTreeMap<String, Vec<_>> = BTreeMap::new();
    for (a, lam, minus) in &cases {
        let els = weyl_cache.entry(a.to_string()).or_insert_with(|| weyl_elements(a));
        let cr = ok(kw_character(lam, a, *minus))?;
        let ch = &cr.character;
        let tag = || format!("{a} {lam} minus={minus}");
        ensure(has_nonnegative_coefficients(ch), || format!("{}: negative coefficient", tag()))?;
        ensure(ch.coefficient_of(&lam.natural(*minus)) == BigInt::from(1), || format!("{}: top coefficient", tag()))?;
        ensure(els.iter().all(|w| &apply_weyl(w, ch) == ch), || format!("{}: not W-invariant", tag()))?;
        if *minus {
            let plus = ok(kw_character(lam, a, false))?;
            ensure(ok(sigma_twist(a, &plus.character))? == *ch, || format!("{}: twist identity", tag()))?;
        } else {
            let num = kac_wakimoto_numerator(&cr.borel_used, &cr.borel_weight, &cr.t_used, CharacterOptions::default());
            let (d0, _) = denominators(&cr.borel_used);
            let back = ok(num.exact_divide(&d0))?;
            ensure(back == ch.scale(&BigInt::from(cr.j_used)), || format!("{}: round trip", tag()))?;
            if cr.atypicality == 0 {
                for seq in EpsDeltaSequence::all(a) {
                    let b = ok(BorelData::from_sequence(a, &seq))?;
                    let hw = ok(highest_weight_via_reflections(lam, &b, false))?;
                    let other = ok(kac_wakimoto(&b, &hw, &[], 1, CharacterOptions::default()))?;
                    ensure(&other == ch, || format!("{}: depends on Borel {seq}", tag()))?;
                }
            }
        }
    }
    Ok(format!("character invariants hold for {} tame modules at (m,n) <= (2,2), |lambda| <= 6", cases.len()))
}

fn atypicality_oracle() -> Outcome {
    let mut count = 0;
    for a in algebras(3, 3) {
        let signs: &[bool] = if a.family() == Family::D { &[false, true] } else { &[false] };
        for lam in HookPartition::enumerate(a.n(), a.m(), 8) {
            for &minus in signs {
                let shifted = shifted_standard(&lam, &a, minus);
                let (got, want) = (atypicality_degree(&shifted, &a), brute_atypicality(&shifted, &a));
                ensure(got == want, || format!("{a} {lam} minus={minus}: {got} vs {want}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("matching atypicality equals subset search on {count} weights"))
}

fn bottom_uniqueness() -> Outcome {
    let mut classes = 0;
    for a in algebras(3, 3) {
        let mut groups: BTreeMap<String, Vec<HookPartition>> = BTreeMap::new();
        for lam in HookPartition::enumerate(a.n(), a.m(), 8) {
            let fp = fingerprint(&shifted_standard(&lam, &a, false), &a);
            groups.entry(format!("{fp:?}")).or_default().push(lam);
        }
        for members in groups.values() {
            let bottoms: Vec<HookPartition> =
                members.iter().map(|l| bottom_of_block(l, &a).map(|t| t.result)).collect::<Result<_>>().map_err(|e| e.to_string())?;
            let exempt = a.family() == Family::D
                && bottoms.iter().any(|p| {
                    let r = is_tame(p, &a, false).unwrap();
                    r.atypicality == 1 && p.part(a.n()) as usize + 1 >= a.m()
                });
            if exempt {
                continue;
            }
            classes += 1;
            ensure(bottoms.iter().all(|p| p == &bottoms[0]), || {
                format!("{a}: {:?} reach {:?}", members.iter().map(|p| p.to_string()).collect::<Vec<_>>(), bottoms.iter().map(|p| p.to_string()).collect::<Vec<_>>())
            })?;
        }
    }
    Ok(format!("fingerprint-equal weights share their bottom ({classes} classes)"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("trivial-module identity", trivial_modules),
        ("Euler characteristic constants", euler_constants),
        ("Frobenius golden weight", frobenius_golden),
        ("bottom-of-block golden chain", bottom_golden),
        ("lambda(x) golden family", family_golden),
        ("Euler characteristic = KW", euler_equals_kw),
        ("character property suite", property_suite),
        ("atypicality oracle", atypicality_oracle),
        ("uniqueness of bottoms", bottom_uniqueness),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("[PASS] {}. {name}: {detail} ({secs:.2}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {}. {name}: {detail} ({secs:.2}s)", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
