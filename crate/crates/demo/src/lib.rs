//! Three entry points for the static page in `www/`. Every function takes and
//! returns plain strings or numbers so the same code runs natively in tests.

use qcong_core::{
    q_binomial as qb, reduce_mod_cyclotomic, ClaimId, ClaimKind, ClaimParams, CyclotomicCache, LaurentPoly, Status,
    Verifier,
};
use wasm_bindgen::prelude::*;

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

/// `[t, b]_q` as a polynomial string.
#[wasm_bindgen]
pub fn q_binomial(t: i32, b: i32) -> Result<String, String> {
    if !(-60..=200).contains(&t) || !(-1..=200).contains(&b) {
        return Err("keep -60 <= t <= 200 and b <= 200".into());
    }
    qb(t.into(), b.into()).map(|p| p.to_string()).map_err(err)
}

/// Reduces `sum c_i q^i` (coefficients from the constant term up, separated by
/// commas or spaces) modulo `Phi_n^e`.
#[wasm_bindgen]
pub fn cyclotomic_residue(coeffs: &str, n: u32, e: u32) -> Result<String, String> {
    let cs = coeffs
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<i64>().map_err(|_| format!("not an integer: {s}")))
        .collect::<Result<Vec<_>, _>>()?;
    if n == 0 || n > 2000 || e == 0 || e > 4 {
        return Err("keep 1 <= n <= 2000 and 1 <= e <= 4".into());
    }
    let f = LaurentPoly::from_i64_coeffs(&cs);
    reduce_mod_cyclotomic(&f, n.into(), e.into(), &CyclotomicCache::new()).map(|r| r.to_string()).map_err(err)
}

/// Checks one claim. For p-side claims `n` is the prime `p` (with `a = 1`);
/// `m` is used only where the claim has a parameter `m`.
#[wasm_bindgen]
pub fn verify_claim(claim: &str, n: i32, d: i32, m: i32) -> Result<String, String> {
    let id: ClaimId = claim.trim().parse().map_err(err)?;
    let (n, d) = (i64::from(n), i64::from(d));
    if !(1..=40).contains(&n) {
        return Err("keep 1 <= n <= 40".into());
    }
    let mut params = match id.kind() {
        ClaimKind::PCongruence => ClaimParams::pside(n, 1, d),
        ClaimKind::Lemma => return Err("lemmas are not exposed here".into()),
        _ => ClaimParams::nd(n, d),
    };
    if id.kind() == ClaimKind::QCongruence {
        params = params.with_e(id.modulus_power().unwrap_or(1).into());
    }
    if id.uses_m() {
        params = params.with_m(m.into());
    }
    let r = Verifier::default().verify(id, &params);
    let mut line = format!("{id} {params}: {}", r.status);
    if let Some(w) = r.witness.filter(|_| r.status == Status::Fail) {
        line += &format!(" ({w})");
    }
    if let Some(note) = r.note {
        line += &format!(" ({note})");
    }
    Ok(line)
}
