//! Identity checks run by `ospkw verify`.

use num_bigint::BigInt;
use ospkw_core::atyp::is_tame;
use ospkw_core::characters::{
    denominators, euler_char_character, euler_char_character_with, kw_character_with, CharacterOptions,
};
use ospkw_core::rootdata::{apply_weyl, weyl_elements, Twist};
use ospkw_core::{Algebra, BorelData, EpsDeltaSequence, Family, HookPartition, LaurentPolynomial, Partition, Result, Root};

/// Largest partition size used by the per-module checks.
pub const MODULE_SIZE: u32 = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &str, outcome: Result<Option<String>>) -> Check {
    match outcome {
        Ok(None) => Check { name: name.into(), passed: true, detail: String::new() },
        Ok(Some(detail)) => Check { name: name.into(), passed: false, detail },
        Err(e) => Check { name: name.into(), passed: false, detail: format!("{}: {e}", e.code()) },
    }
}

fn tame_modules(alg: &Algebra) -> Result<Vec<(HookPartition, bool)>> {
    let mut out = Vec::new();
    for lam in HookPartition::enumerate(alg.n(), alg.m(), MODULE_SIZE) {
        if is_tame(&lam, alg, false)?.tame {
            out.push((lam.clone(), false));
            if alg.is_d() {
                out.push((lam, true));
            }
        }
    }
    Ok(out)
}

fn trivial(alg: &Algebra, opts: CharacterOptions) -> Result<Option<String>> {
    let cr = kw_character_with(&HookPartition::new(Partition::empty(), alg.n(), alg.m())?, alg, false, opts)?;
    Ok((cr.character != LaurentPolynomial::one(alg.n(), alg.m())).then(|| format!("j = {}, dim = {}", cr.j_used, cr.dimension)))
}

fn euler_constant(alg: &Algebra, opts: CharacterOptions) -> Result<Option<String>> {
    let b = BorelData::odd(alg);
    let simple = b.simple_roots();
    let levi: Vec<Root> = simple[..simple.len() - 1].to_vec();
    let ch = euler_char_character_with(&levi, &alg.zero_weight(), &b, opts)?;
    let k = alg.m() as u32;
    let want = BigInt::from(if alg.is_b() { 1u64 << k } else { 1u64 << (k - 1) });
    Ok((ch != LaurentPolynomial::constant(alg.n(), alg.m(), want.clone())).then(|| format!("expected {want}")))
}

fn euler_equals_kw(alg: &Algebra, opts: CharacterOptions) -> Result<Option<String>> {
    for (lam, minus) in tame_modules(alg)? {
        let r = is_tame(&lam, alg, false)?;
        let mut b = r.witness_borel.clone().unwrap_or_else(|| BorelData::standard(alg));
        let mut w = r.witness_weight.clone().unwrap_or_else(|| lam.natural(false));
        let mut levi = r.levi.clone().unwrap_or_default();
        if minus {
            b = b.twisted();
            w = w.twisted();
            levi = levi.iter().map(Twist::twisted).collect();
        }
        let euler = euler_char_character(&levi, &w, &b)?;
        if euler != kw_character_with(&lam, alg, minus, opts)?.character {
            return Ok(Some(format!("differs at {lam}{}", if minus { "-" } else { "" })));
        }
    }
    Ok(None)
}

fn characters_invariant(alg: &Algebra, opts: CharacterOptions) -> Result<Option<String>> {
    let els = weyl_elements(alg);
    for (lam, minus) in tame_modules(alg)? {
        let cr = kw_character_with(&lam, alg, minus, opts)?;
        let bad = cr.character.terms().iter().any(|(_, c)| c < &BigInt::from(0))
            || els.iter().any(|w| apply_weyl(w, &cr.character) != cr.character);
        if bad {
            return Ok(Some(format!("fails at {lam}{}", if minus { "-" } else { "" })));
        }
    }
    Ok(None)
}

fn denominators_agree(alg: &Algebra) -> Result<Option<String>> {
    let (d0, d1) = denominators(&BorelData::standard(alg));
    for seq in EpsDeltaSequence::all(alg) {
        let (e0, e1) = denominators(&BorelData::from_sequence(alg, &seq)?);
        if e1 != d1 {
            return Ok(Some(format!("odd denominator differs for {seq}")));
        }
        if e0 != d0 && e0 != -&d0 {
            return Ok(Some(format!("even denominator differs for {seq}")));
        }
    }
    Ok(None)
}

/// Every check that applies to `alg`.
pub fn verify_algebra(alg: &Algebra, opts: CharacterOptions) -> Vec<Check> {
    let mut out = vec![check("trivial KW = 1", trivial(alg, opts))];
    if alg.m() == alg.n() {
        out.push(check("Euler constant", euler_constant(alg, opts)));
    }
    out.push(check("Euler = KW", euler_equals_kw(alg, opts)));
    out.push(check("characters W-invariant and nonnegative", characters_invariant(alg, opts)));
    out.push(check("denominators independent of Borel", denominators_agree(alg)));
    out
}

/// All algebras with `m, n <= max_rank` that support classification.
pub fn algebras_up_to(max_rank: usize) -> Vec<Algebra> {
    let mut out = Vec::new();
    for m in 1..=max_rank {
        for n in 1..=max_rank {
            for family in [Family::B, Family::D] {
                if let Ok(a) = Algebra::new(family, m, n) {
                    out.push(a);
                }
            }
        }
    }
    out
}
