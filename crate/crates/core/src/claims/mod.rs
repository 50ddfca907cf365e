//! The claim registry: identities, q-congruences, mod-p congruences, lemmas
//! and recurrences, each checkable at concrete parameters.

mod builders;
mod pside;
mod residue;
mod structural;
mod terms;

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};
use std::time::{Duration, Instant};

use crate::cyclotomic::{congruence_witness, CyclotomicCache};
use crate::error::{Error, Result};
use crate::numtheory::ModPValue;
use crate::poly::LaurentPoly;
use crate::ratfun::RatFun;

pub use builders::{build_lhs, build_rhs, signed_range_sum};
pub use pside::{pside_values, q_one_specialization, PSideValues};

use residue::CyclicTables;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClaimKind {
    Identity,
    QCongruence,
    PCongruence,
    Lemma,
    Recurrence,
}

macro_rules! claim_ids {
    ($($variant:ident => $name:literal, $kind:ident;)*) => {
        /// Registry identifiers. Declaration order is the report order.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum ClaimId {
            $($variant,)*
        }

        impl ClaimId {
            pub const ALL: &'static [ClaimId] = &[$(ClaimId::$variant,)*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(ClaimId::$variant => $name,)*
                }
            }

            pub fn kind(self) -> ClaimKind {
                match self {
                    $(ClaimId::$variant => ClaimKind::$kind,)*
                }
            }
        }

        impl FromStr for ClaimId {
            type Err = Error;
            fn from_str(s: &str) -> Result<Self> {
                match s {
                    $($name => Ok(ClaimId::$variant),)*
                    other => Err(Error::OutOfDomain(format!("unknown claim {other}"))),
                }
            }
        }
    };
}

claim_ids! {
    IdT11_1 => "ID-T11-1", Identity;
    IdT11_2 => "ID-T11-2", Identity;
    IdT14_1 => "ID-T14-1", Identity;
    IdT14_2 => "ID-T14-2", Identity;
    QcC12_1 => "QC-C12-1", QCongruence;
    QcC12_2 => "QC-C12-2", QCongruence;
    QcC15_1 => "QC-C15-1", QCongruence;
    QcC15_2 => "QC-C15-2", QCongruence;
    QcGz1 => "QC-GZ-1", QCongruence;
    QcGz2 => "QC-GZ-2", QCongruence;
    QcTau => "QC-TAU", QCongruence;
    QcLp => "QC-LP", QCongruence;
    PcStAlt => "PC-ST-ALT", PCongruence;
    PcStM => "PC-ST-M", PCongruence;
    PcStKm => "PC-ST-KM", PCongruence;
    PcSt3 => "PC-ST-3", PCongruence;
    PcC13_2 => "PC-C13-2", PCongruence;
    PcC13_4 => "PC-C13-4", PCongruence;
    PcC16_2 => "PC-C16-2", PCongruence;
    PcC16_4 => "PC-C16-4", PCongruence;
    LemQLucas => "LEM-QLUCAS", Lemma;
    LemAn => "LEM-AN", Lemma;
    Lem2N1 => "LEM-2N1", Lemma;
    RecQb18 => "REC-QB18", Recurrence;
    RecT11_2 => "REC-T11-2", Recurrence;
    RecT14_1 => "REC-T14-1", Recurrence;
    RecT14_2 => "REC-T14-2", Recurrence;
}

impl ClaimId {
    /// Power `e` of `Phi_n` in the modulus, for q-side congruences and lemmas.
    pub fn modulus_power(self) -> Option<u32> {
        match self.kind() {
            ClaimKind::QCongruence if self == ClaimId::QcLp => Some(2),
            ClaimKind::QCongruence | ClaimKind::Lemma => Some(1),
            _ => None,
        }
    }

    /// True for claims whose parameters include `m`.
    pub fn uses_m(self) -> bool {
        matches!(self, ClaimId::PcStM | ClaimId::PcStKm)
    }

    /// Valid `d` values for the q-side claims at a given `n`, as used by sweeps.
    pub fn d_range_q(self, n: i64) -> Option<(i64, i64)> {
        use ClaimId::*;
        let r = match self {
            IdT11_1 | IdT11_2 | QcC12_1 | QcC12_2 | QcGz1 | QcGz2 | RecQb18 | RecT11_2 => (0, n - 1),
            IdT14_1 | IdT14_2 | QcC15_1 | QcC15_2 => (1, n - 1),
            QcTau => (0, n),
            QcLp => (0, 0),
            RecT14_1 => (1, n - 2),
            RecT14_2 => (1, n),
            _ => return None,
        };
        Some(r)
    }

    /// Valid `d` values for the p-side claims at modulus `N = p^a`.
    pub fn d_range_p(self, big_n: i64) -> Option<(i64, i64)> {
        use ClaimId::*;
        let r = match self {
            PcStAlt | PcStM | PcSt3 => (0, big_n),
            PcStKm => (1, big_n),
            PcC13_2 | PcC13_4 => (0, big_n - 1),
            PcC16_2 | PcC16_4 => (1, big_n - 1),
            _ => return None,
        };
        Some(r)
    }

    /// Smallest `n` at which the claim is checked.
    pub fn min_n(self) -> i64 {
        use ClaimId::*;
        match self {
            IdT11_1 | IdT11_2 | QcLp | RecQb18 | RecT11_2 | RecT14_2 => 1,
            RecT14_1 => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Parameters of one check. Unused fields stay `None`; the derived order
/// (n, d, p, a, m, e, b, c, k) is the report order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClaimParams {
    pub n: Option<i64>,
    pub d: Option<i64>,
    pub p: Option<i64>,
    pub a: Option<i64>,
    pub m: Option<i64>,
    pub e: Option<i64>,
    pub b: Option<i64>,
    pub c: Option<i64>,
    pub k: Option<i64>,
}

impl ClaimParams {
    pub fn nd(n: i64, d: i64) -> Self {
        Self { n: Some(n), d: Some(d), ..Self::default() }
    }

    pub fn pside(p: i64, a: i64, d: i64) -> Self {
        Self { p: Some(p), a: Some(a), d: Some(d), ..Self::default() }
    }

    pub fn with_m(mut self, m: i64) -> Self {
        self.m = Some(m);
        self
    }

    pub fn with_e(mut self, e: i64) -> Self {
        self.e = Some(e);
        self
    }

    pub fn with_k(mut self, k: i64) -> Self {
        self.k = Some(k);
        self
    }

    pub fn qlucas(n: i64, a: i64, b: i64, c: i64, d: i64) -> Self {
        Self { n: Some(n), a: Some(a), b: Some(b), c: Some(c), d: Some(d), ..Self::default() }
    }

    /// Present fields as `(name, value)` pairs in canonical order.
    pub fn pairs(&self) -> Vec<(&'static str, i64)> {
        [
            ("n", self.n),
            ("d", self.d),
            ("p", self.p),
            ("a", self.a),
            ("m", self.m),
            ("e", self.e),
            ("b", self.b),
            ("c", self.c),
            ("k", self.k),
        ]
        .into_iter()
        .filter_map(|(k, v)| v.map(|v| (k, v)))
        .collect()
    }
}

impl fmt::Display for ClaimParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pairs().iter().map(|(k, v)| format!("{k}={v}")).collect();
        f.write_str(&parts.join(";"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Nonzero residue of the cross difference modulo `Phi_n^e`.
    Residue(LaurentPoly),
    /// Nonzero `lhs - rhs` of an exact identity.
    Difference(RatFun),
    ModP { computed: ModPValue, expected: ModPValue },
    Message(String),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Residue(r) => write!(f, "{r}"),
            Witness::Difference(r) => write!(f, "{r}"),
            Witness::ModP { computed, expected } => write!(
                f,
                "computed={}, expected={} (mod {})",
                computed.residue(),
                expected.residue(),
                computed.prime()
            ),
            Witness::Message(m) => f.write_str(m),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationResult {
    pub claim: ClaimId,
    pub params: ClaimParams,
    pub status: Status,
    pub witness: Option<Witness>,
    /// Why a check was skipped.
    pub note: Option<String>,
    pub elapsed: Duration,
}

/// Outcome of a check before timing is attached.
pub(crate) enum Outcome {
    Pass,
    Fail(Witness),
    Skip(String),
}

impl Outcome {
    fn from_witness_residue(r: LaurentPoly) -> Self {
        if r.is_zero() {
            Outcome::Pass
        } else {
            Outcome::Fail(Witness::Residue(r))
        }
    }
}

/// Runs checks with a shared cyclotomic cache and a bounded memo of the
/// per-`n` tables used by the q-congruence fast path.
#[derive(Debug)]
pub struct Verifier {
    cache: Arc<CyclotomicCache>,
    tables: Mutex<VecDeque<(u64, Arc<OnceLock<CyclicTables>>)>>,
    table_capacity: usize,
}

impl Default for Verifier {
    fn default() -> Self {
        Self::new(Arc::new(CyclotomicCache::new()))
    }
}

impl Verifier {
    pub fn new(cache: Arc<CyclotomicCache>) -> Self {
        Self::with_table_capacity(cache, 16)
    }

    pub fn with_table_capacity(cache: Arc<CyclotomicCache>, table_capacity: usize) -> Self {
        Self { cache, tables: Mutex::new(VecDeque::new()), table_capacity: table_capacity.max(1) }
    }

    pub fn cache(&self) -> &Arc<CyclotomicCache> {
        &self.cache
    }

    fn tables(&self, n: u64) -> Arc<OnceLock<CyclicTables>> {
        let slot = {
            let mut memo = self.tables.lock().unwrap();
            match memo.iter().find(|(k, _)| *k == n) {
                Some((_, s)) => s.clone(),
                None => {
                    let s = Arc::new(OnceLock::new());
                    memo.push_back((n, s.clone()));
                    while memo.len() > self.table_capacity {
                        memo.pop_front();
                    }
                    s
                }
            }
        };
        slot.get_or_init(|| CyclicTables::new(n as usize));
        slot
    }

    /// Dispatches on the claim kind.
    pub fn verify(&self, claim: ClaimId, params: &ClaimParams) -> VerificationResult {
        let start = Instant::now();
        let outcome = match claim.kind() {
            ClaimKind::Identity => self.identity_outcome(claim, params),
            ClaimKind::QCongruence => self.qcongruence_outcome(claim, params, true),
            ClaimKind::PCongruence => pside::outcome(claim, params),
            ClaimKind::Lemma => structural::lemma_outcome(claim, params, &self.cache),
            ClaimKind::Recurrence => structural::recurrence_outcome(claim, params),
        };
        finish(claim, params, outcome, start.elapsed())
    }

    pub fn verify_identity(&self, claim: ClaimId, params: &ClaimParams) -> VerificationResult {
        self.verify_kind(claim, params, ClaimKind::Identity)
    }

    pub fn verify_qcongruence(&self, claim: ClaimId, params: &ClaimParams) -> VerificationResult {
        self.verify_kind(claim, params, ClaimKind::QCongruence)
    }

    /// The q-congruence check through exact `build_lhs`/`build_rhs` and
    /// [`congruence_witness`], without the residue fast path.
    pub fn verify_qcongruence_exact(&self, claim: ClaimId, params: &ClaimParams) -> VerificationResult {
        let start = Instant::now();
        let outcome = if claim.kind() == ClaimKind::QCongruence {
            self.qcongruence_outcome(claim, params, false)
        } else {
            Outcome::Skip(format!("{claim} is not a q-congruence"))
        };
        finish(claim, params, outcome, start.elapsed())
    }

    pub fn verify_pcongruence(&self, claim: ClaimId, params: &ClaimParams) -> VerificationResult {
        self.verify_kind(claim, params, ClaimKind::PCongruence)
    }

    pub fn verify_lemma(&self, claim: ClaimId, params: &ClaimParams) -> VerificationResult {
        self.verify_kind(claim, params, ClaimKind::Lemma)
    }

    pub fn verify_recurrence(&self, claim: ClaimId, params: &ClaimParams) -> VerificationResult {
        self.verify_kind(claim, params, ClaimKind::Recurrence)
    }

    fn verify_kind(&self, claim: ClaimId, params: &ClaimParams, kind: ClaimKind) -> VerificationResult {
        if claim.kind() != kind {
            let outcome = Outcome::Skip(format!("{claim} is not a {kind:?} claim"));
            return finish(claim, params, outcome, Duration::ZERO);
        }
        self.verify(claim, params)
    }

    fn identity_outcome(&self, claim: ClaimId, params: &ClaimParams) -> Outcome {
        if let Err(why) = builders::check_domain(claim, params) {
            return Outcome::Skip(why);
        }
        let both = build_lhs(claim, params).and_then(|l| Ok((l, build_rhs(claim, params)?)));
        match both {
            Ok((lhs, rhs)) if lhs == rhs => Outcome::Pass,
            Ok((lhs, rhs)) => Outcome::Fail(Witness::Difference(&lhs - &rhs)),
            Err(e) => Outcome::Fail(Witness::Message(e.to_string())),
        }
    }

    fn qcongruence_outcome(&self, claim: ClaimId, params: &ClaimParams, fast: bool) -> Outcome {
        if let Err(why) = builders::check_domain(claim, params) {
            return Outcome::Skip(why);
        }
        let n = params.n.unwrap();
        let e = params.e.unwrap_or(claim.modulus_power().unwrap() as i64);
        if fast && e == 1 && residue::supports(claim) {
            let tables = self.tables(n as u64);
            let tables = tables.get().unwrap();
            return match residue::check(tables, claim, params, &self.cache) {
                Ok(r) => Outcome::from_witness_residue(r),
                Err(err) => Outcome::Fail(Witness::Message(err.to_string())),
            };
        }
        let run = || -> Result<LaurentPoly> {
            let lhs = build_lhs(claim, params)?;
            let rhs = build_rhs(claim, params)?;
            congruence_witness(&lhs, &rhs, n, e, &self.cache)
        };
        match run() {
            Ok(r) => Outcome::from_witness_residue(r),
            Err(err) => Outcome::Fail(Witness::Message(err.to_string())),
        }
    }
}

fn finish(claim: ClaimId, params: &ClaimParams, outcome: Outcome, elapsed: Duration) -> VerificationResult {
    let (status, witness, note) = match outcome {
        Outcome::Pass => (Status::Pass, None, None),
        Outcome::Fail(w) => (Status::Fail, Some(w), None),
        Outcome::Skip(why) => (Status::Skip, None, Some(why)),
    };
    VerificationResult { claim, params: params.clone(), status, witness, note, elapsed }
}
