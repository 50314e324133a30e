//! Homotopy rank types and the strong arithmetic condition.
//!
//! A rank type `(2a_1, ..., 2a_r : 2b_1 - 1, ..., 2b_q - 1)` lists the degrees
//! of a homogeneous basis of rational homotopy. Degrees are stored as actual
//! degrees; the half-degrees `a_i`, `b_j` are derived on demand.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Largest formal dimension accepted by [`enumerate_rank_types`].
pub const MAX_SUPPORTED_FD: u32 = 30;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RankTypeError {
    #[error("malformed rank type at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("even degree {0} must be even and at least 2")]
    BadEven(u32),
    #[error("odd degree {0} must be odd and at least 3")]
    BadOdd(u32),
    #[error("rank type needs at least one odd degree")]
    NoOdd,
    #[error("fewer odd degrees ({odd}) than even degrees ({even})")]
    NegativeP { even: usize, odd: usize },
    #[error("formal dimension {0} is not positive")]
    NonPositiveFd(i64),
    #[error("maximal formal dimension {0} outside supported range 1..={MAX_SUPPORTED_FD}")]
    UnsupportedBound(u32),
}

/// A homotopy rank type: ascending even and odd generator degrees.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RankType {
    evens: Vec<u32>,
    odds: Vec<u32>,
}

/// `(r, q, p, threshold)` of a rank type.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HomotopyInvariants {
    pub r: usize,
    pub q: usize,
    /// `q - r`, the negated homotopy Euler characteristic.
    pub p: usize,
    /// `r + q = dim V`, the Hilali target for `dim H*`.
    pub threshold: usize,
}

impl RankType {
    /// Builds a rank type, sorting both lists and checking parity, simple
    /// connectivity and `q >= r`.
    pub fn new(mut evens: Vec<u32>, mut odds: Vec<u32>) -> Result<Self, RankTypeError> {
        if let Some(&e) = evens.iter().find(|&&e| e < 2 || e % 2 != 0) {
            return Err(RankTypeError::BadEven(e));
        }
        if let Some(&o) = odds.iter().find(|&&o| o < 3 || o % 2 != 1) {
            return Err(RankTypeError::BadOdd(o));
        }
        if odds.is_empty() {
            return Err(RankTypeError::NoOdd);
        }
        if odds.len() < evens.len() {
            return Err(RankTypeError::NegativeP {
                even: evens.len(),
                odd: odds.len(),
            });
        }
        evens.sort_unstable();
        odds.sort_unstable();
        Ok(RankType { evens, odds })
    }

    pub fn evens(&self) -> &[u32] {
        &self.evens
    }

    pub fn odds(&self) -> &[u32] {
        &self.odds
    }

    /// Half-degrees `a_i = even / 2`.
    pub fn even_half_degrees(&self) -> Vec<u32> {
        self.evens.iter().map(|e| e / 2).collect()
    }

    /// Half-degrees `b_j = (odd + 1) / 2`.
    pub fn odd_half_degrees(&self) -> Vec<u32> {
        self.odds.iter().map(|o| o.div_ceil(2)).collect()
    }

    /// All degrees, ascending.
    pub fn all_degrees(&self) -> Vec<u32> {
        let mut all: Vec<u32> = self.evens.iter().chain(&self.odds).copied().collect();
        all.sort_unstable();
        all
    }

    /// Number of generators in the given degree.
    pub fn dim_at(&self, degree: u32) -> usize {
        let side = if degree.is_multiple_of(2) {
            &self.evens
        } else {
            &self.odds
        };
        side.iter().filter(|&&d| d == degree).count()
    }

    pub fn min_degree(&self) -> u32 {
        match self.evens.first() {
            Some(&e) => e.min(self.odds[0]),
            None => self.odds[0],
        }
    }

    /// `Σ odd - Σ (even - 1)`, signed so unrealizable inputs are visible.
    pub fn raw_formal_dimension(&self) -> i64 {
        let odd: i64 = self.odds.iter().map(|&o| o as i64).sum();
        let even: i64 = self.evens.iter().map(|&e| e as i64 - 1).sum();
        odd - even
    }

    pub fn formal_dimension(&self) -> Result<u32, RankTypeError> {
        let fd = self.raw_formal_dimension();
        if fd <= 0 {
            Err(RankTypeError::NonPositiveFd(fd))
        } else {
            Ok(fd as u32)
        }
    }

    pub fn invariants(&self) -> HomotopyInvariants {
        let r = self.evens.len();
        let q = self.odds.len();
        HomotopyInvariants {
            r,
            q,
            p: q - r,
            threshold: r + q,
        }
    }
}

fn join(values: &[u32]) -> String {
    values
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for RankType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", join(&self.evens), join(&self.odds))
    }
}

impl FromStr for RankType {
    type Err = RankTypeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_rank_type(s)
    }
}

fn parse_side(text: &str, offset: usize, allow_empty: bool) -> Result<Vec<u32>, RankTypeError> {
    let mut values = Vec::new();
    if text.trim().is_empty() {
        if allow_empty {
            return Ok(values);
        }
        return Err(RankTypeError::Syntax {
            position: offset,
            message: "empty list".into(),
        });
    }
    let mut pos = offset;
    for item in text.split(',') {
        let trimmed = item.trim();
        let lead = item.len() - item.trim_start().len();
        if trimmed.is_empty() || !trimmed.bytes().all(|b| b.is_ascii_digit()) {
            return Err(RankTypeError::Syntax {
                position: pos + lead,
                message: format!("expected a positive integer, found {trimmed:?}"),
            });
        }
        let value = trimmed.parse::<u32>().map_err(|e| RankTypeError::Syntax {
            position: pos + lead,
            message: e.to_string(),
        })?;
        values.push(value);
        pos += item.len() + 1;
    }
    Ok(values)
}

/// Parses `evens ":" odds`, e.g. `2,4,4:3,5,7,7`. Whitespace is ignored.
pub fn parse_rank_type(text: &str) -> Result<RankType, RankTypeError> {
    let text = text.trim().trim_start_matches('(').trim_end_matches(')');
    let colon = text.find(':').ok_or_else(|| RankTypeError::Syntax {
        position: text.len(),
        message: "missing ':' separating even and odd degrees".into(),
    })?;
    let (left, right) = (&text[..colon], &text[colon + 1..]);
    if let Some(extra) = right.find(':') {
        return Err(RankTypeError::Syntax {
            position: colon + 1 + extra,
            message: "more than one ':'".into(),
        });
    }
    let evens = parse_side(left, 0, true)?;
    let odds = parse_side(right, colon + 1, false)?;
    RankType::new(evens, odds)
}

/// Finds `γ` with `Σ γ_i · support_i = b` and `Σ γ_i >= 2`, if any.
///
/// Dynamic program over values `0..=b` with three coefficient-sum states
/// (0, 1, at least 2); each reachable cell keeps one predecessor.
pub fn express(b: u32, support: &[u32]) -> Option<Vec<u32>> {
    let b = b as usize;
    // pred[v][s] = (support index used to arrive, previous state)
    let mut pred: Vec<[Option<(usize, usize)>; 3]> = vec![[None; 3]; b + 1];
    let mut reach = vec![[false; 3]; b + 1];
    reach[0][0] = true;
    for v in 0..=b {
        for s in 0..3 {
            if !reach[v][s] {
                continue;
            }
            for (i, &a) in support.iter().enumerate() {
                let a = a as usize;
                if a == 0 || v + a > b {
                    continue;
                }
                let next = (s + 1).min(2);
                if !reach[v + a][next] {
                    reach[v + a][next] = true;
                    pred[v + a][next] = Some((i, s));
                }
            }
        }
    }
    if !reach[b][2] {
        return None;
    }
    let mut gamma = vec![0u32; support.len()];
    let (mut v, mut s) = (b, 2);
    while v > 0 {
        let (i, prev) = pred[v][s].expect("reachable cell has a predecessor");
        gamma[i] += 1;
        v -= support[i] as usize;
        s = prev;
    }
    Some(gamma)
}

pub fn expressible(b: u32, support: &[u32]) -> bool {
    express(b, support).is_some()
}

/// One row of a [`SacWitness`]: a support set, a target odd half-degree and a
/// coefficient vector when one exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SacEntry {
    pub support: Vec<u32>,
    pub b: u32,
    pub gamma: Option<Vec<u32>>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SacWitness {
    pub entries: Vec<SacEntry>,
}

/// Decides the strong arithmetic condition.
///
/// Sub-multisets of the even half-degrees reduce to subsets `S` of distinct
/// values: the binding requirement for `S` is the full multiplicity
/// `Σ_{v ∈ S} mult(v)`, since repeats add nothing to the span of
/// γ-combinations.
pub fn check_sac(t: &RankType) -> (bool, SacWitness) {
    let halves = t.even_half_degrees();
    let mut multiplicity: BTreeMap<u32, usize> = BTreeMap::new();
    for a in halves {
        *multiplicity.entry(a).or_default() += 1;
    }
    let distinct: Vec<(u32, usize)> = multiplicity.into_iter().collect();
    let bs = t.odd_half_degrees();
    let mut witness = SacWitness::default();
    let mut holds = true;
    for mask in 1u32..(1 << distinct.len()) {
        let chosen: Vec<(u32, usize)> = distinct
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &v)| v)
            .collect();
        let support: Vec<u32> = chosen.iter().map(|&(v, _)| v).collect();
        let required: usize = chosen.iter().map(|&(_, m)| m).sum();
        let mut found = 0;
        for &b in &bs {
            let gamma = express(b, &support);
            if gamma.is_some() {
                found += 1;
            }
            witness.entries.push(SacEntry {
                support: support.clone(),
                b,
                gamma,
            });
        }
        if found < required {
            holds = false;
        }
    }
    (holds, witness)
}

/// All ascending multisets with entries in `min..=max` of parity step 2
/// summing to `total`.
fn multisets(total: u32, min: u32, max: u32, out: &mut Vec<Vec<u32>>) {
    fn go(rem: u32, lo: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        let mut v = lo;
        while v <= rem.min(max) {
            cur.push(v);
            go(rem - v, v, max, cur, out);
            cur.pop();
            v += 2;
        }
    }
    go(total, min, max, &mut Vec::new(), out);
}

/// SAC-valid rank types of formal dimension exactly `n`, sorted.
pub fn rank_types_of_dimension(n: u32) -> Vec<RankType> {
    let mut result = Vec::new();
    if n == 0 {
        return result;
    }
    // Σ evens <= n and every odd degree <= 2n - 1 hold for elliptic spaces.
    let mut even_sets = Vec::new();
    let mut total = 0;
    while total <= n {
        multisets(total, 2, n, &mut even_sets);
        total += 2;
    }
    for evens in even_sets {
        let odd_sum = n + evens.iter().map(|e| e - 1).sum::<u32>();
        let mut odd_sets = Vec::new();
        multisets(odd_sum, 3, 2 * n - 1, &mut odd_sets);
        for odds in odd_sets {
            if odds.len() < evens.len() {
                continue;
            }
            let t = RankType {
                evens: evens.clone(),
                odds,
            };
            if check_sac(&t).0 {
                result.push(t);
            }
        }
    }
    result.sort();
    result
}

/// SAC-valid rank types for every formal dimension `1..=max_fd`.
pub fn enumerate_rank_types(max_fd: u32) -> Result<BTreeMap<u32, Vec<RankType>>, RankTypeError> {
    if max_fd == 0 || max_fd > MAX_SUPPORTED_FD {
        return Err(RankTypeError::UnsupportedBound(max_fd));
    }
    Ok((1..=max_fd)
        .map(|n| (n, rank_types_of_dimension(n)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rt(s: &str) -> RankType {
        s.parse().unwrap()
    }

    #[test]
    fn parse_examples() {
        let t = rt("2,4,4:3,5,7,7");
        assert_eq!(t.evens(), &[2, 4, 4]);
        assert_eq!(t.odds(), &[3, 5, 7, 7]);
        let sphere = rt(":3");
        assert!(sphere.evens().is_empty());
        assert_eq!(sphere.odds(), &[3]);
        assert_eq!(parse_rank_type("4:3,2"), Err(RankTypeError::BadOdd(2)));
    }

    #[test]
    fn parse_sorts_and_rejects() {
        assert_eq!(rt("4,2:7,3,5"), rt("2,4:3,5,7"));
        assert_eq!(rt("(2 : 11)"), rt("2:11"));
        assert_eq!(parse_rank_type("3:5"), Err(RankTypeError::BadEven(3)));
        assert_eq!(parse_rank_type("2:1"), Err(RankTypeError::BadOdd(1)));
        assert_eq!(
            parse_rank_type("2,2:3"),
            Err(RankTypeError::NegativeP { even: 2, odd: 1 })
        );
        assert!(matches!(
            parse_rank_type("2;3"),
            Err(RankTypeError::Syntax { .. })
        ));
        assert!(matches!(
            parse_rank_type("2:3,,5"),
            Err(RankTypeError::Syntax { position: 4, .. })
        ));
        assert!(matches!(
            parse_rank_type("2:"),
            Err(RankTypeError::Syntax { .. })
        ));
        assert!(matches!(
            parse_rank_type("2:3:5"),
            Err(RankTypeError::Syntax { .. })
        ));
    }

    #[test]
    fn formal_dimension_examples() {
        assert_eq!(rt("2:11").formal_dimension(), Ok(10));
        assert_eq!(rt(":3,7").formal_dimension(), Ok(10));
        assert_eq!(rt("2,4,4:3,5,7,7").formal_dimension(), Ok(15));
        assert_eq!(rt("2:3").formal_dimension(), Ok(2));
        assert_eq!(rt("2,2,2,2:3,3,3,3").formal_dimension(), Ok(8));
        assert_eq!(
            rt("4,4:3,3").formal_dimension(),
            Err(RankTypeError::NonPositiveFd(0))
        );
    }

    #[test]
    fn invariants_examples() {
        let inv = rt("2,4,4:3,5,7,7").invariants();
        assert_eq!((inv.r, inv.q, inv.p, inv.threshold), (3, 4, 1, 7));
        let inv = rt(":3").invariants();
        assert_eq!((inv.r, inv.q, inv.p, inv.threshold), (0, 1, 1, 1));
        let inv = rt("2,2:3,3").invariants();
        assert_eq!((inv.r, inv.q, inv.p, inv.threshold), (2, 2, 0, 4));
    }

    #[test]
    fn expressible_examples() {
        assert!(expressible(2, &[1]));
        assert!(!expressible(3, &[2]));
        assert!(expressible(5, &[2, 3]));
        assert_eq!(express(5, &[2, 3]), Some(vec![1, 1]));
        // single summand never counts
        assert!(!expressible(2, &[2]));
        assert!(expressible(4, &[2]));
    }

    #[test]
    fn sac_examples() {
        assert!(check_sac(&rt("2:3")).0);
        assert!(!check_sac(&rt("4:3")).0);
        assert!(!check_sac(&rt("2,4:3,5,9")).0);
        assert!(check_sac(&rt(":3,3,7")).0);
        assert!(check_sac(&rt(":3,3,7")).1.entries.is_empty());
    }

    #[test]
    fn sac_witness_vectors_solve_their_equations() {
        let (ok, witness) = check_sac(&rt("2,4,6:3,5,7,11"));
        assert!(ok);
        assert!(!witness.entries.is_empty());
        for e in &witness.entries {
            if let Some(g) = &e.gamma {
                let value: u32 = g.iter().zip(&e.support).map(|(c, a)| c * a).sum();
                assert_eq!(value, e.b);
                assert!(g.iter().sum::<u32>() >= 2);
            }
        }
    }

    #[test]
    fn small_dimensions() {
        assert_eq!(rank_types_of_dimension(1), vec![]);
        assert_eq!(rank_types_of_dimension(2), vec![rt("2:3")]);
        assert_eq!(
            rank_types_of_dimension(4),
            vec![rt("2:5"), rt("2,2:3,3"), rt("4:7")]
        );
    }

    #[test]
    fn enumeration_bound_checked() {
        assert_eq!(
            enumerate_rank_types(0),
            Err(RankTypeError::UnsupportedBound(0))
        );
        assert_eq!(
            enumerate_rank_types(31),
            Err(RankTypeError::UnsupportedBound(31))
        );
    }
}
