//! Published values of χ_lat and χ_la for named families.

use std::fmt;

use serde::Serialize;

use crate::graph::FamilySpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    /// Local antimagic total chromatic number.
    ChiLat,
    /// Local antimagic chromatic number (edge labelings).
    ChiLa,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum KnownStatus {
    Theorem,
    Conjecture,
    Range,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KnownResult {
    pub quantity: Quantity,
    pub lo: usize,
    pub hi: usize,
    pub status: KnownStatus,
    pub citation: &'static str,
}

impl KnownResult {
    fn exact(quantity: Quantity, value: usize, citation: &'static str) -> Self {
        KnownResult {
            quantity,
            lo: value,
            hi: value,
            status: KnownStatus::Theorem,
            citation,
        }
    }

    fn conjecture(value: usize, citation: &'static str) -> Self {
        KnownResult {
            status: KnownStatus::Conjecture,
            ..Self::exact(Quantity::ChiLat, value, citation)
        }
    }

    pub fn value(&self) -> Option<usize> {
        (self.lo == self.hi).then_some(self.lo)
    }

    /// Proven results only; conjectures never bound anything.
    pub fn is_proven(&self) -> bool {
        self.status != KnownStatus::Conjecture
    }

    pub fn contains(&self, v: usize) -> bool {
        (self.lo..=self.hi).contains(&v)
    }
}

impl fmt::Display for KnownResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = match self.quantity {
            Quantity::ChiLat => "chi_lat",
            Quantity::ChiLa => "chi_la",
        };
        let status = match self.status {
            KnownStatus::Theorem => "theorem",
            KnownStatus::Conjecture => "conjecture",
            KnownStatus::Range => "range",
        };
        if self.lo == self.hi {
            write!(f, "{q} = {} [{status}; {}]", self.lo, self.citation)
        } else {
            write!(f, "{} <= {q} <= {} [{status}; {}]", self.lo, self.hi, self.citation)
        }
    }
}

const EMPTY: &str = "edgeless graph: every vertex weight is its own label";
const COMPLETE: &str = "complete graph K_p: chi_lat = p";
const CYCLE: &str = "cycle C_n: 2 for even n, 3 for odd n";
const EVEN_PATH: &str = "even path P_n: 2, except P_4 = 3";
const ODD_PATH: &str = "odd path P_3, P_5, P_7: explicit two-weight sequences";
const ODD_PATH_CONJ: &str = "odd path P_n, n >= 9: conjectured 2";
const K2_PLUS: &str = "K_2 + O_n: 2 for n <= 2, n otherwise";
const WHEEL: &str = "wheel W_p, even p >= 4: chi_lat = 3";
const CYCLE_O2: &str = "C_p v O_2, odd p >= 3: 4 <= chi_lat <= 5";
const FAN: &str = "fan F_n = K_1 v P_n, odd n >= 3: chi_la = 3";
const KM_CYCLE: &str = "K_{m-1} v C_n, m,n >= 3 of equal parity: m+1 (even), m+2 (odd)";
const KPQ: &str = "K_{p,q}: chi_lat = 2 for p = 1, p = q = 2, 2 <= p < q same parity, or mixed parity";

fn path(n: usize) -> Option<KnownResult> {
    let q = Quantity::ChiLat;
    match n {
        0 => None,
        1 => Some(KnownResult::exact(q, 1, COMPLETE)),
        4 => Some(KnownResult::exact(q, 3, EVEN_PATH)),
        n if n % 2 == 0 => Some(KnownResult::exact(q, 2, EVEN_PATH)),
        3 | 5 | 7 => Some(KnownResult::exact(q, 2, ODD_PATH)),
        _ => Some(KnownResult::conjecture(2, ODD_PATH_CONJ)),
    }
}

fn cycle(n: usize) -> Option<KnownResult> {
    (n >= 3).then(|| KnownResult::exact(Quantity::ChiLat, if n % 2 == 0 { 2 } else { 3 }, CYCLE))
}

fn wheel(n: usize) -> Option<KnownResult> {
    match n {
        3 => Some(KnownResult::exact(Quantity::ChiLat, 4, COMPLETE)),
        n if n >= 4 && n % 2 == 0 => Some(KnownResult::exact(Quantity::ChiLat, 3, WHEEL)),
        _ => None,
    }
}

fn complete_bipartite(a: usize, b: usize) -> Option<KnownResult> {
    let (p, q) = (a.min(b), a.max(b));
    if p == 0 {
        return None;
    }
    let listed = p == 1 || (p == 2 && q == 2) || (p % 2 == q % 2 && 2 <= p && p < q) || p % 2 != q % 2;
    listed.then(|| KnownResult::exact(Quantity::ChiLat, 2, KPQ))
}

/// The value the literature gives for `spec`, or `None` where it is silent.
pub fn known_value(spec: FamilySpec) -> Option<KnownResult> {
    let q = Quantity::ChiLat;
    match spec {
        FamilySpec::Empty(n) => (n >= 1).then(|| KnownResult::exact(q, n, EMPTY)),
        FamilySpec::Path(n) => path(n),
        FamilySpec::Cycle(n) => cycle(n),
        FamilySpec::Complete(n) => (n >= 1).then(|| KnownResult::exact(q, n, COMPLETE)),
        FamilySpec::CompleteBipartite(a, b) => complete_bipartite(a, b),
        FamilySpec::Wheel(n) => wheel(n),
        FamilySpec::Fan(n) => {
            (n >= 3 && n % 2 == 1).then(|| KnownResult::exact(Quantity::ChiLa, 3, FAN))
        }
        FamilySpec::K2PlusEmpty(0) => Some(KnownResult::exact(q, 2, COMPLETE)),
        FamilySpec::K2PlusEmpty(n) => Some(KnownResult::exact(q, if n <= 2 { 2 } else { n }, K2_PLUS)),
        FamilySpec::JoinCompleteCycle(k, n) => {
            // the result is stated for K_{m-1} v C_n with m = k + 1
            let m = k + 1;
            if m < 3 || n < 3 {
                None
            } else if m % 2 == 0 && n % 2 == 0 {
                Some(KnownResult::exact(q, m + 1, KM_CYCLE))
            } else if m % 2 == 1 && n % 2 == 1 {
                Some(KnownResult::exact(q, m + 2, KM_CYCLE))
            } else {
                None
            }
        }
        FamilySpec::CycleJoinEmpty(p, 0) => cycle(p),
        FamilySpec::CycleJoinEmpty(p, 1) => wheel(p),
        FamilySpec::CycleJoinEmpty(p, 2) if p % 2 == 1 => Some(KnownResult {
            quantity: q,
            lo: 4,
            hi: 5,
            status: KnownStatus::Range,
            citation: CYCLE_O2,
        }),
        FamilySpec::CycleJoinEmpty(..) => None,
    }
}
