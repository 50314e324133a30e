//! Cohomology lower bounds read off a rank type, and the verification
//! pipeline.
//!
//! Every filter is a pure function of the [`RankType`]. A filter either
//! verifies the inequality outright, or yields a lower bound `B` on
//! `dim H*`; the type is verified when `B >= r + q`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::ranktype::{enumerate_rank_types, RankType, RankTypeError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FilterId {
    /// `p = 0`: pure models.
    Pure,
    /// No generators below half the formal dimension.
    HalfDimension,
    /// Closed classes from the lowest homotopy degree.
    LowestDegree,
    /// Even lowest degree `d` paired with degree `2d - 1`.
    EvenPair,
    /// Even lowest degree with degrees `2d - 1` and `3d - 2`.
    Triple,
    /// Odd lowest degree with a low even degree.
    OddLowest,
    /// Monomials in even generators below every odd generator.
    LowEvenMonomials,
    /// `(2,a : 3,b,c)`.
    Pattern2a,
    /// `(2,4,a : 3,3,b,c)`.
    Pattern24a,
}

impl FilterId {
    pub const ALL: [FilterId; 9] = [
        FilterId::Pure,
        FilterId::HalfDimension,
        FilterId::LowestDegree,
        FilterId::EvenPair,
        FilterId::Triple,
        FilterId::OddLowest,
        FilterId::LowEvenMonomials,
        FilterId::Pattern2a,
        FilterId::Pattern24a,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FilterId::Pure => "pure",
            FilterId::HalfDimension => "half-dimension",
            FilterId::LowestDegree => "lowest-degree",
            FilterId::EvenPair => "even-pair",
            FilterId::Triple => "triple",
            FilterId::OddLowest => "odd-lowest",
            FilterId::LowEvenMonomials => "low-even-monomials",
            FilterId::Pattern2a => "pattern-2a",
            FilterId::Pattern24a => "pattern-24a",
        }
    }

    pub fn apply(self, t: &RankType) -> FilterOutcome {
        match self {
            FilterId::Pure => filter_pure(t),
            FilterId::HalfDimension => filter_half_dimension(t),
            FilterId::LowestDegree => filter_lowest_degree(t),
            FilterId::EvenPair => filter_even_pair(t),
            FilterId::Triple => filter_triple(t),
            FilterId::OddLowest => filter_odd_lowest(t),
            FilterId::LowEvenMonomials => filter_low_even_monomials(t),
            FilterId::Pattern2a => filter_pattern_2a(t),
            FilterId::Pattern24a => filter_pattern_24a(t),
        }
    }
}

impl fmt::Display for FilterId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    NotApplicable,
    VerifiedDirectly,
    /// The bound reaches the threshold.
    LowerBound,
    /// Applied, but the bound falls short of the threshold.
    NoConclusion,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FilterOutcome {
    pub filter: FilterId,
    pub verdict: Verdict,
    /// Claimed `dim H* >= bound`; present only for bound filters that applied.
    pub bound: Option<u32>,
}

impl FilterOutcome {
    fn not_applicable(filter: FilterId) -> Self {
        FilterOutcome {
            filter,
            verdict: Verdict::NotApplicable,
            bound: None,
        }
    }

    fn direct(filter: FilterId) -> Self {
        FilterOutcome {
            filter,
            verdict: Verdict::VerifiedDirectly,
            bound: None,
        }
    }

    fn bounded(filter: FilterId, t: &RankType, bound: u32) -> Self {
        let verdict = if bound as usize >= t.invariants().threshold {
            Verdict::LowerBound
        } else {
            Verdict::NoConclusion
        };
        FilterOutcome {
            filter,
            verdict,
            bound: Some(bound),
        }
    }

    pub fn applied(&self) -> bool {
        self.verdict != Verdict::NotApplicable
    }

    pub fn verifies(&self) -> bool {
        matches!(
            self.verdict,
            Verdict::VerifiedDirectly | Verdict::LowerBound
        )
    }
}

fn binomial(n: u32, k: u32) -> u32 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64) as u32
}

fn fd(t: &RankType) -> u32 {
    t.formal_dimension()
        .expect("filters require a rank type of positive formal dimension")
}

/// Statistics of the lowest homotopy degrees that the bound formulas consume.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LowDegreeStats {
    pub d: u32,
    pub k: u32,
    /// dim at `2d - 1`
    pub l: u32,
    /// dim at `3d - 2`
    pub m: u32,
    /// smallest even degree
    pub d_prime: Option<u32>,
    /// dim at `d_prime`
    pub s: u32,
}

impl LowDegreeStats {
    pub fn of(t: &RankType) -> Self {
        let d = t.min_degree();
        let dim = |deg: u32| t.dim_at(deg) as u32;
        let d_prime = t.evens().first().copied();
        LowDegreeStats {
            d,
            k: dim(d),
            l: dim(2 * d - 1),
            m: dim(3 * d - 2),
            d_prime,
            s: d_prime.map_or(0, dim),
        }
    }
}

pub fn filter_pure(t: &RankType) -> FilterOutcome {
    if t.invariants().p == 0 {
        FilterOutcome::direct(FilterId::Pure)
    } else {
        FilterOutcome::not_applicable(FilterId::Pure)
    }
}

pub fn filter_half_dimension(t: &RankType) -> FilterOutcome {
    // min degree >= ceil(n / 2)
    if 2 * t.min_degree() >= fd(t) {
        FilterOutcome::direct(FilterId::HalfDimension)
    } else {
        FilterOutcome::not_applicable(FilterId::HalfDimension)
    }
}

pub fn filter_lowest_degree(t: &RankType) -> FilterOutcome {
    let id = FilterId::LowestDegree;
    let n = fd(t);
    let stats = LowDegreeStats::of(t);
    if t.invariants().p == 0 || 2 * stats.d >= n {
        return FilterOutcome::not_applicable(id);
    }
    let k = stats.k;
    let bound = if n % 2 == 1 {
        2 * k + 2
    } else if stats.d % 2 == 1 {
        4 * k
    } else {
        4 * k + 4
    };
    FilterOutcome::bounded(id, t, bound)
}

pub fn filter_even_pair(t: &RankType) -> FilterOutcome {
    let id = FilterId::EvenPair;
    let n = fd(t);
    let LowDegreeStats { d, k, l, .. } = LowDegreeStats::of(t);
    if t.invariants().p == 0 || d % 2 == 1 {
        return FilterOutcome::not_applicable(id);
    }
    // Generators strictly between d and 2d - 1 are closed and non-exact.
    if let Some(&o) = t.odds().iter().find(|&&o| o > d && o < 2 * d - 1) {
        if 2 * o >= n {
            return FilterOutcome::not_applicable(id);
        }
        let l_between = t.dim_at(o) as u32;
        return FilterOutcome::bounded(id, t, 2 * (1 + k + l_between));
    }
    // 2d - 1 < n/2 - 1
    if 4 * d >= n {
        return FilterOutcome::not_applicable(id);
    }
    let c = binomial(k + 1, 2);
    let bound = if n % 2 == 1 {
        2 * (1 + k + l.abs_diff(c))
    } else if c >= l {
        4 * (1 + k + c - l)
    } else {
        4 * (l - c).max(1 + k)
    };
    FilterOutcome::bounded(id, t, bound)
}

pub fn filter_triple(t: &RankType) -> FilterOutcome {
    let id = FilterId::Triple;
    let n = fd(t);
    let LowDegreeStats { d, k, l, m, .. } = LowDegreeStats::of(t);
    // 3d - 1 < n/2
    if d % 2 == 1 || 2 * (3 * d - 1) >= n {
        return FilterOutcome::not_applicable(id);
    }
    let c = binomial(k + 1, 2);
    let massey = (k * l).saturating_sub(k * k + binomial(k, 3) + m);
    FilterOutcome::bounded(id, t, 2 * (1 + k + l.abs_diff(c) + massey))
}

pub fn filter_odd_lowest(t: &RankType) -> FilterOutcome {
    let id = FilterId::OddLowest;
    let n = fd(t);
    let stats = LowDegreeStats::of(t);
    let d = stats.d;
    let Some(d_prime) = stats.d_prime else {
        return FilterOutcome::not_applicable(id);
    };
    if d.is_multiple_of(2) || d_prime >= 3 * d - 1 || 2 * d >= n || 2 * d_prime >= n {
        return FilterOutcome::not_applicable(id);
    }
    // Degrees d and d' carry closed non-exact generators; the quadratic
    // correction in degree 2d - 1 or 2d needs 2d < n/2 as well.
    let l = stats.k;
    let m = t.dim_at(2 * d - 1) as u32;
    let quadratic = if 4 * d < n {
        binomial(l, 2).abs_diff(m)
    } else {
        0
    };
    FilterOutcome::bounded(id, t, 2 * (1 + l + stats.s + quadratic))
}

/// Number of monomials (the unit included) in the even generators of degree
/// strictly below `limit_twice / 2`.
fn count_even_monomials(evens: &[u32], limit_twice: u32) -> u32 {
    fn go(evens: &[u32], degree: u32, limit_twice: u32) -> u32 {
        match evens.split_first() {
            None => 1,
            Some((&g, rest)) => {
                let mut total = 0;
                let mut deg = degree;
                while 2 * deg < limit_twice {
                    total += go(rest, deg, limit_twice);
                    deg += g;
                }
                total
            }
        }
    }
    go(evens, 0, limit_twice)
}

pub fn filter_low_even_monomials(t: &RankType) -> FilterOutcome {
    let id = FilterId::LowEvenMonomials;
    if t.invariants().p == 0 {
        return FilterOutcome::not_applicable(id);
    }
    let n = fd(t);
    let limit_twice = (2 * t.odds()[0]).min(n);
    let c = count_even_monomials(t.evens(), limit_twice);
    let bound = if n % 2 == 1 { 2 * c } else { 4 * c };
    FilterOutcome::bounded(id, t, bound)
}

pub fn filter_pattern_2a(t: &RankType) -> FilterOutcome {
    let id = FilterId::Pattern2a;
    let n = fd(t);
    let matches = match (t.evens(), t.odds()) {
        (&[2, a], &[3, b, _]) => n >= 9 && n - 2 > a && a >= 4 && n - 2 > b && b >= 5,
        _ => false,
    };
    if matches {
        FilterOutcome::direct(id)
    } else {
        FilterOutcome::not_applicable(id)
    }
}

pub fn filter_pattern_24a(t: &RankType) -> FilterOutcome {
    let id = FilterId::Pattern24a;
    let matches = match (t.evens(), t.odds()) {
        (&[2, 4, a], &[3, 3, b, _]) => a >= 4 && b >= 7 && fd(t) >= 13,
        _ => false,
    };
    if matches {
        FilterOutcome::direct(id)
    } else {
        FilterOutcome::not_applicable(id)
    }
}

pub fn apply_all(t: &RankType) -> Vec<FilterOutcome> {
    FilterId::ALL.iter().map(|f| f.apply(t)).collect()
}

/// Best outcome over a set of filter outcomes for one rank type.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TypeReport {
    #[serde(serialize_with = "serialize_display")]
    pub rank_type: RankType,
    pub p: usize,
    pub threshold: usize,
    pub best_bound: Option<u32>,
    pub verified: bool,
    /// First filter, in [`FilterId::ALL`] order, that verifies.
    pub verifying_filter: Option<FilterId>,
}

fn serialize_display<S: serde::Serializer, T: fmt::Display>(
    v: &T,
    s: S,
) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

impl TypeReport {
    pub fn from_outcomes(t: &RankType, outcomes: &[FilterOutcome]) -> Self {
        let inv = t.invariants();
        let best_bound = outcomes.iter().filter_map(|o| o.bound).max();
        let verifying_filter = FilterId::ALL
            .iter()
            .copied()
            .find(|id| outcomes.iter().any(|o| o.filter == *id && o.verifies()));
        TypeReport {
            rank_type: t.clone(),
            p: inv.p,
            threshold: inv.threshold,
            best_bound,
            verified: verifying_filter.is_some(),
            verifying_filter,
        }
    }

    pub fn evaluate(t: &RankType) -> Self {
        Self::from_outcomes(t, &apply_all(t))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimensionReport {
    pub fd: u32,
    pub total: usize,
    pub types: Vec<TypeReport>,
}

impl DimensionReport {
    /// Residual types ordered for display: by `p`, then generator count, then
    /// lexicographically.
    pub fn residuals(&self) -> Vec<&TypeReport> {
        let mut out: Vec<&TypeReport> = self.types.iter().filter(|t| !t.verified).collect();
        out.sort_by(|a, b| (a.p, a.threshold, &a.rank_type).cmp(&(b.p, b.threshold, &b.rank_type)));
        out
    }

    pub fn residuals_by_p(&self) -> BTreeMap<usize, Vec<&TypeReport>> {
        let mut grouped: BTreeMap<usize, Vec<&TypeReport>> = BTreeMap::new();
        for r in self.residuals() {
            grouped.entry(r.p).or_default().push(r);
        }
        grouped
    }

    pub fn verified_count(&self) -> usize {
        self.types.iter().filter(|t| t.verified).count()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PipelineReport {
    pub max_fd: u32,
    pub dimensions: Vec<DimensionReport>,
}

impl PipelineReport {
    pub fn dimension(&self, fd: u32) -> Option<&DimensionReport> {
        self.dimensions.iter().find(|d| d.fd == fd)
    }
}

pub fn run_pipeline(max_fd: u32) -> Result<PipelineReport, RankTypeError> {
    let enumeration = enumerate_rank_types(max_fd)?;
    let dimensions = enumeration
        .into_iter()
        .map(|(fd, types)| DimensionReport {
            fd,
            total: types.len(),
            types: types.iter().map(TypeReport::evaluate).collect(),
        })
        .collect();
    Ok(PipelineReport { max_fd, dimensions })
}
