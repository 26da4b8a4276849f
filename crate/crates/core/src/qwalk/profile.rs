use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

use super::coin::CoinOperator;

/// Periodic coin assignment `[coin1 : q, coin2 : (N - q)]`.
///
/// The origin sits at the middle of a `coin1` block, so a site `x` uses
/// `coin1` iff `(x + (q - 1) / 2) mod N < q` with a Euclidean modulus. This
/// makes the assignment mirror-symmetric about `x = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct PotentialProfile {
    coin1: CoinOperator,
    coin2: CoinOperator,
    q: usize,
    period: usize,
}

impl PotentialProfile {
    pub fn new(coin1: CoinOperator, q: usize, coin2: CoinOperator, period: usize) -> Result<Self> {
        if period == 0 {
            return Err(Error::InvalidProfile("period N must be positive".into()));
        }
        if q == 0 || q > period {
            return Err(Error::InvalidProfile(format!(
                "block length q = {q} must satisfy 1 <= q <= N = {period}"
            )));
        }
        if q.is_multiple_of(2) {
            return Err(Error::InvalidProfile(format!(
                "block length q = {q} must be odd so the origin is its middle site"
            )));
        }
        Ok(Self {
            coin1,
            coin2,
            q,
            period,
        })
    }

    /// Every site uses the same coin.
    pub fn uniform(coin: CoinOperator) -> Self {
        Self {
            coin1: coin,
            coin2: coin,
            q: 1,
            period: 1,
        }
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn period(&self) -> usize {
        self.period
    }

    pub fn coin1(&self) -> &CoinOperator {
        &self.coin1
    }

    pub fn coin2(&self) -> &CoinOperator {
        &self.coin2
    }

    /// Whether site `x` lies in a `coin1` block.
    #[inline]
    pub fn uses_first_coin(&self, x: i64) -> bool {
        let period = self.period as i64;
        let shifted = x + (self.q as i64 - 1) / 2;
        (shifted.rem_euclid(period) as usize) < self.q
    }

    #[inline]
    pub fn coin_at(&self, x: i64) -> &CoinOperator {
        if self.uses_first_coin(x) {
            &self.coin1
        } else {
            &self.coin2
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseKind {
    /// `[H : 1, I : N-1]`
    IA,
    /// `[I : 1, H : N-1]`
    IB,
    /// `[H : N-1, I : 1]`, N even
    IIA,
    /// `[I : N-1, H : 1]`, N even
    IIB,
    /// `[H : q, I : q]`, q odd
    IIIA,
    /// `[I : q, H : q]`, q odd
    IIIB,
    /// Hadamard coin on every site.
    Hadamard,
}

impl CaseKind {
    pub const ALL: [CaseKind; 7] = [
        CaseKind::IA,
        CaseKind::IB,
        CaseKind::IIA,
        CaseKind::IIB,
        CaseKind::IIIA,
        CaseKind::IIIB,
        CaseKind::Hadamard,
    ];

    /// The six periodic-potential cases, without the uniform baseline.
    pub const PERIODIC: [CaseKind; 6] = [
        CaseKind::IA,
        CaseKind::IB,
        CaseKind::IIA,
        CaseKind::IIB,
        CaseKind::IIIA,
        CaseKind::IIIB,
    ];

    pub fn label(self) -> &'static str {
        match self {
            CaseKind::IA => "IA",
            CaseKind::IB => "IB",
            CaseKind::IIA => "IIA",
            CaseKind::IIB => "IIB",
            CaseKind::IIIA => "IIIA",
            CaseKind::IIIB => "IIIB",
            CaseKind::Hadamard => "HADAMARD",
        }
    }

    /// Cases III are sized by the block length `q`; the rest by the period `N`.
    pub fn sized_by_q(self) -> bool {
        matches!(self, CaseKind::IIIA | CaseKind::IIIB)
    }
}

impl fmt::Display for CaseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for CaseKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CaseKind::ALL
            .into_iter()
            .find(|k| k.label().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                Error::InvalidProfile(format!(
                    "unknown case {s:?}; expected one of IA, IB, IIA, IIB, IIIA, IIIB, HADAMARD"
                ))
            })
    }
}

/// A named case together with its size: `N` for cases I, II and HADAMARD,
/// `q` for cases III.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WalkCase {
    pub kind: CaseKind,
    pub size: usize,
}

impl WalkCase {
    pub fn new(kind: CaseKind, size: usize) -> Self {
        Self { kind, size }
    }
}

pub fn build_case(case: WalkCase) -> Result<PotentialProfile> {
    use CaseKind::*;

    let h = CoinOperator::hadamard();
    let id = CoinOperator::identity();
    let n = case.size;
    let invalid = |requirement| Error::InvalidCase {
        case: case.kind.label(),
        requirement,
    };

    match case.kind {
        IA | IB => {
            if n < 2 {
                return Err(invalid("N >= 2"));
            }
        }
        IIA | IIB => {
            if n < 2 || !n.is_multiple_of(2) {
                return Err(invalid("even N >= 2"));
            }
        }
        IIIA | IIIB => {
            if n.is_multiple_of(2) {
                return Err(invalid("odd q"));
            }
        }
        Hadamard => {
            if n < 1 {
                return Err(invalid("N >= 1"));
            }
        }
    }

    match case.kind {
        IA => PotentialProfile::new(h, 1, id, n),
        IB => PotentialProfile::new(id, 1, h, n),
        IIA => PotentialProfile::new(h, n - 1, id, n),
        IIB => PotentialProfile::new(id, n - 1, h, n),
        IIIA => PotentialProfile::new(h, n, id, 2 * n),
        IIIB => PotentialProfile::new(id, n, h, 2 * n),
        // Block length 1 keeps q odd for every N; both blocks carry H.
        Hadamard => PotentialProfile::new(h, 1, h, n),
    }
}
