//! Entanglement inference from one measured QFI or squeezing value.
//!
//! Every class bound `f` is compared exactly against the measurement. A QFI
//! lower bound `F` excludes a class when `F > f`; a squeezing upper bound
//! `xi^2` excludes it when `xi^2 < 2N/(f + 2N)`. Both reduce to `f < T` for an
//! exact rational threshold `T` (`T = F`, or `T = 2N(1/xi^2 - 1)`), which is
//! what the grid evaluation uses.

use std::fmt;
use std::str::FromStr;

use dashu::integer::IBig;
use dashu::rational::RBig;
use serde::{Deserialize, Serialize};

use crate::bounds::{
    f_height, f_rank, f_rank_upper, f_wh, f_wh_upper, f_width, f_width_upper, valid_rank_at_or_above,
    valid_ranks,
};
use crate::error::{Error, Result};
use crate::exact::{self, format_rational};
use crate::squeezing::xi2_floor_from_f;
use crate::tuples::{all_tuples, TupleClass};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    /// Lower bound on the quantum Fisher information.
    Fq,
    /// Upper bound on the squeezing coefficient.
    Xi2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Unit {
    Linear,
    Db,
    None,
}

macro_rules! text_enum {
    ($ty:ty { $($variant:ident => $text:literal),* $(,)? }) => {
        impl $ty {
            pub fn as_str(&self) -> &'static str {
                match self { $(Self::$variant => $text),* }
            }
        }

        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.as_str())
            }
        }

        impl FromStr for $ty {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                match s.trim() {
                    $($text => Ok(Self::$variant),)*
                    other => Err(Error::Measurement(format!(
                        concat!("unknown ", stringify!($ty), " {:?}"), other
                    ))),
                }
            }
        }
    };
}

text_enum!(Kind { Fq => "fq", Xi2 => "xi2" });
text_enum!(Unit { Linear => "linear", Db => "db", None => "none" });

/// Which family of class bounds to compare against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundMode {
    /// Exact maxima over partition classes.
    #[default]
    Tight,
    /// Closed forms that ignore integer block structure.
    Simple,
}

/// One measured value. `value` keeps the decimal text it was given.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Measurement {
    pub label: String,
    pub n: u32,
    pub kind: Kind,
    pub value: String,
    pub unit: Unit,
    pub reference: String,
}

impl Measurement {
    pub fn qfi(label: impl Into<String>, n: u32, value: &str) -> Result<Self> {
        Self::checked(label.into(), n, Kind::Fq, value, Unit::None)
    }

    pub fn squeezing(label: impl Into<String>, n: u32, value: &str, unit: Unit) -> Result<Self> {
        Self::checked(label.into(), n, Kind::Xi2, value, unit)
    }

    fn checked(label: String, n: u32, kind: Kind, value: &str, unit: Unit) -> Result<Self> {
        let m = Self {
            label,
            n,
            kind,
            value: value.trim().to_string(),
            unit,
            reference: String::new(),
        };
        m.validate()?;
        Ok(m)
    }

    pub fn with_reference(mut self, reference: impl Into<String>) -> Self {
        self.reference = reference.into();
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::Measurement("n must be positive".into()));
        }
        match (self.kind, self.unit) {
            (Kind::Fq, Unit::None) | (Kind::Xi2, Unit::Linear | Unit::Db) => {}
            (kind, unit) => {
                return Err(Error::Measurement(format!(
                    "unit {unit} does not apply to kind {kind}"
                )))
            }
        }
        let v = exact::parse_decimal(&self.value)?;
        if !(self.kind == Kind::Xi2 && self.unit == Unit::Db) && v <= RBig::ZERO {
            return Err(Error::Measurement(format!(
                "{} must be positive, got {}",
                self.kind, self.value
            )));
        }
        Ok(())
    }

    /// Measured value on the linear scale: `F`, or `xi^2` (converted from dB
    /// at 30 significant digits when needed).
    pub fn linear_value(&self) -> Result<RBig> {
        match self.unit {
            Unit::Db => exact::db_to_linear(&self.value),
            Unit::Linear | Unit::None => exact::parse_decimal(&self.value),
        }
    }

    /// `T` such that a class with bound `f` is excluded iff `f < T`.
    pub fn exclusion_threshold(&self) -> Result<RBig> {
        let v = self.linear_value()?;
        Ok(match self.kind {
            Kind::Fq => v,
            Kind::Xi2 => {
                let two_n = RBig::from(IBig::from(2 * u64::from(self.n)));
                &two_n / &v - &two_n
            }
        })
    }
}

/// Whether the measurement rules out a class whose QFI limit is `bound_f`,
/// evaluated directly on the measured quantity.
pub fn exceeds(m: &Measurement, bound_f: u64) -> Result<bool> {
    let v = m.linear_value()?;
    Ok(match m.kind {
        Kind::Fq => v > RBig::from(IBig::from(bound_f)),
        Kind::Xi2 => v < xi2_floor_from_f(bound_f, m.n),
    })
}

/// Exact comparator built once per measurement.
#[derive(Debug, Clone)]
pub struct Witness {
    measurement: Measurement,
    threshold: RBig,
    /// Largest integer strictly below the threshold, when the threshold is
    /// positive enough for integer bounds to fall under it.
    int_cutoff: Option<u64>,
    mode: BoundMode,
}

impl Witness {
    pub fn new(measurement: Measurement, mode: BoundMode) -> Result<Self> {
        measurement.validate()?;
        let threshold = measurement.exclusion_threshold()?;
        let below = threshold.ceil() - IBig::ONE;
        let int_cutoff = u64::try_from(below).ok();
        Ok(Self {
            measurement,
            threshold,
            int_cutoff,
            mode,
        })
    }

    pub fn measurement(&self) -> &Measurement {
        &self.measurement
    }

    pub fn mode(&self) -> BoundMode {
        self.mode
    }

    pub fn n(&self) -> u32 {
        self.measurement.n
    }

    pub fn threshold(&self) -> &RBig {
        &self.threshold
    }

    pub fn excludes(&self, f: u64) -> bool {
        self.int_cutoff.is_some_and(|c| f <= c)
    }

    pub fn excludes_rational(&self, f: &RBig) -> bool {
        f < &self.threshold
    }

    fn width_excluded(&self, w: u32) -> Result<bool> {
        let n = self.n();
        Ok(self.excludes(match self.mode {
            BoundMode::Tight => f_width(n, w)?,
            BoundMode::Simple => f_width_upper(n, w)?,
        }))
    }

    fn height_excluded(&self, h: u32) -> Result<bool> {
        // the tight h bound is already the simple closed form
        Ok(self.excludes(f_height(self.n(), h)?))
    }

    fn rank_excluded(&self, r: i32) -> Result<bool> {
        let n = self.n();
        Ok(match self.mode {
            BoundMode::Tight => self.excludes(f_rank(n, r)?),
            BoundMode::Simple => self.excludes_rational(&f_rank_upper(n, r)?),
        })
    }

    /// Bound used for the full (w,h) criterion under the current mode.
    pub fn wh_bound(&self, w: u32, h: u32) -> Result<u64> {
        let n = self.n();
        match self.mode {
            BoundMode::Tight => f_wh(n, w, h),
            BoundMode::Simple => f_wh_upper(n, w, h),
        }
    }

    /// Smallest compatible width, or `None` when even `w = N` is excluded.
    pub fn infer_depth(&self) -> Result<Option<u32>> {
        for w in 1..=self.n() {
            if !self.width_excluded(w)? {
                return Ok(Some(w));
            }
        }
        Ok(None)
    }

    /// Largest compatible number of separable groups.
    pub fn infer_separability(&self) -> Result<Option<u32>> {
        for h in (1..=self.n()).rev() {
            if !self.height_excluded(h)? {
                return Ok(Some(h));
            }
        }
        Ok(None)
    }

    /// Smallest compatible Dyson rank.
    pub fn infer_rank(&self) -> Result<Option<i32>> {
        for r in valid_ranks(self.n()) {
            if !self.rank_excluded(r)? {
                return Ok(Some(r));
            }
        }
        Ok(None)
    }

    pub fn infer(&self) -> Result<Inferred> {
        let n = self.n();
        let w = self.infer_depth()?;
        let h = self.infer_separability()?;
        let r = self.infer_rank()?;
        let beyond = w.is_none() || h.is_none() || r.is_none();
        let h_value = h.unwrap_or(1);
        Ok(Inferred {
            w: w.unwrap_or(n),
            h: h_value,
            r: r.unwrap_or(n as i32 - 1),
            smallest_excluded_h: match h {
                Some(h) if h < n => Some(h + 1),
                Some(_) => None,
                None => Some(1),
            },
            beyond_heisenberg: beyond,
        })
    }

    /// Per-tuple flags for every valid (w,h).
    pub fn build_grid(&self) -> Result<TupleGrid> {
        let n = self.n();
        let width: Vec<bool> = (1..=n).map(|w| self.width_excluded(w)).collect::<Result<_>>()?;
        let height: Vec<bool> = (1..=n).map(|h| self.height_excluded(h)).collect::<Result<_>>()?;
        let mut cells = Vec::new();
        for t in all_tuples(n) {
            let f = self.wh_bound(t.w, t.h)?;
            let r = valid_rank_at_or_above(n, t.rank()).ok_or(Error::InvalidRank { n, r: t.rank() })?;
            cells.push(GridCell {
                tuple: t,
                f_wh: f,
                flags: Flags {
                    w: width[t.w as usize - 1],
                    h: height[t.h as usize - 1],
                    r: self.rank_excluded(r)?,
                    wh: self.excludes(f),
                },
            });
        }
        Ok(TupleGrid { n, cells })
    }

    pub fn report(&self) -> Result<WitnessReport> {
        let m = &self.measurement;
        let inferred = self.infer()?;
        let grid = self.build_grid()?;
        let counts = grid.counts();
        let q_advantage = match m.kind {
            Kind::Fq => Some(format_rational(
                &(m.linear_value()? - RBig::from(IBig::from(m.n))),
            )),
            Kind::Xi2 => None,
        };
        let xi2_linear = match (m.kind, m.unit) {
            (Kind::Xi2, Unit::Db) => Some(format_rational(&m.linear_value()?)),
            _ => None,
        };
        Ok(WitnessReport {
            label: m.label.clone(),
            n: m.n,
            kind: m.kind,
            value: m.value.clone(),
            unit: m.unit,
            mode: self.mode,
            xi2_linear,
            inferred,
            counts,
            q_advantage,
            grid_ref: GRID_FILE.to_string(),
            notes: notes(m.kind),
            grid,
        })
    }
}

/// File name of the grid CSV written next to each report.
pub const GRID_FILE: &str = "grid.csv";

fn notes(kind: Kind) -> Vec<String> {
    let mut notes = vec![
        "rank criterion on tuples with unattainable w-h uses the next attainable rank above".into(),
    ];
    if kind == Kind::Xi2 {
        notes.push(
            "squeezing floors are necessary conditions for class membership; the underlying \
             bound is only asymptotically attainable when every block has more than one particle"
                .into(),
        );
    }
    notes
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Flags {
    pub w: bool,
    pub h: bool,
    pub r: bool,
    pub wh: bool,
}

impl Flags {
    pub fn any(&self) -> bool {
        self.w || self.h || self.r || self.wh
    }

    /// `W`, `H`, `R`, `WH` concatenated in that order, or `OK`.
    pub fn status(&self) -> String {
        if !self.any() {
            return "OK".into();
        }
        let mut s = String::new();
        for (set, token) in [(self.w, "W"), (self.h, "H"), (self.r, "R"), (self.wh, "WH")] {
            if set {
                s.push_str(token);
            }
        }
        s
    }

    /// Inverse of [`Flags::status`] for grids where every excluded tuple
    /// also carries the `WH` flag.
    pub fn parse_status(s: &str) -> Result<Self> {
        if s == "OK" {
            return Ok(Self::default());
        }
        let head = s
            .strip_suffix("WH")
            .ok_or_else(|| Error::Dataset(format!("status {s:?} lacks the WH flag")))?;
        let mut flags = Self {
            wh: true,
            ..Self::default()
        };
        let mut last = 0;
        for c in head.chars() {
            let (slot, order) = match c {
                'W' => (&mut flags.w, 1),
                'H' => (&mut flags.h, 2),
                'R' => (&mut flags.r, 3),
                _ => return Err(Error::Dataset(format!("bad status {s:?}"))),
            };
            if order <= last {
                return Err(Error::Dataset(format!("bad status {s:?}")));
            }
            *slot = true;
            last = order;
        }
        Ok(flags)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GridCell {
    pub tuple: TupleClass,
    pub f_wh: u64,
    pub flags: Flags,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TupleGrid {
    pub n: u32,
    pub cells: Vec<GridCell>,
}

impl TupleGrid {
    pub fn counts(&self) -> Counts {
        let tally = |pick: fn(&Flags) -> bool| self.cells.iter().filter(|c| pick(&c.flags)).count() as u64;
        Counts {
            by_w: tally(|f| f.w),
            by_h: tally(|f| f.h),
            by_r: tally(|f| f.r),
            by_wh: tally(|f| f.wh),
        }
    }

    pub fn get(&self, w: u32, h: u32) -> Option<&GridCell> {
        self.cells.iter().find(|c| c.tuple.w == w && c.tuple.h == h)
    }

    /// CSV with header `w,h,f_wh,status`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("w,h,f_wh,status\n");
        for c in &self.cells {
            out.push_str(&format!(
                "{},{},{},{}\n",
                c.tuple.w,
                c.tuple.h,
                c.f_wh,
                c.flags.status()
            ));
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inferred {
    pub w: u32,
    pub h: u32,
    pub r: i32,
    /// `h + 1`, the smallest number of groups the data rules out.
    pub smallest_excluded_h: Option<u32>,
    /// Set when the data exceeds every class bound, including `N^2`.
    pub beyond_heisenberg: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub by_w: u64,
    pub by_h: u64,
    pub by_r: u64,
    pub by_wh: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub label: String,
    pub n: u32,
    pub kind: Kind,
    pub value: String,
    pub unit: Unit,
    pub mode: BoundMode,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub xi2_linear: Option<String>,
    pub inferred: Inferred,
    pub counts: Counts,
    pub q_advantage: Option<String>,
    pub grid_ref: String,
    pub notes: Vec<String>,
    #[serde(skip)]
    pub grid: TupleGrid,
}

impl WitnessReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// Tight-mode report for one measurement.
pub fn report(m: &Measurement) -> Result<WitnessReport> {
    Witness::new(m.clone(), BoundMode::Tight)?.report()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fq(n: u32, v: &str) -> Witness {
        Witness::new(Measurement::qfi("t", n, v).unwrap(), BoundMode::Tight).unwrap()
    }

    #[test]
    fn exceeds_examples() {
        let m = Measurement::qfi("a", 14, "40.4").unwrap();
        assert!(exceeds(&m, 40).unwrap());
        assert!(!exceeds(&m, 44).unwrap());
        let m = Measurement::qfi("a", 14, "14").unwrap();
        assert!(!exceeds(&m, 14).unwrap());
        let m = Measurement::squeezing("a", 470, "0.354813", Unit::Linear).unwrap();
        assert!(exceeds(&m, 1408).unwrap());
    }

    #[test]
    fn threshold_route_matches_direct_route() {
        let cases = [
            Measurement::qfi("a", 14, "40.4").unwrap(),
            Measurement::qfi("a", 14, "40").unwrap(),
            Measurement::squeezing("a", 470, "-4.5", Unit::Db).unwrap(),
            Measurement::squeezing("a", 20, "0.5", Unit::Linear).unwrap(),
            Measurement::squeezing("a", 20, "1.5", Unit::Linear).unwrap(),
        ];
        for m in cases {
            let w = Witness::new(m.clone(), BoundMode::Tight).unwrap();
            // the dB conversion is costly per call; sample around T ~ 1709.3
            let fs: Vec<u64> = if m.unit == Unit::Db {
                (1690..1730).chain([1, 1408, 1660, 1876, 220900]).collect()
            } else {
                (1..3000).collect()
            };
            for f in fs {
                assert_eq!(w.excludes(f), exceeds(&m, f).unwrap(), "{m:?} f={f}");
            }
        }
    }

    #[test]
    fn n14_inference() {
        let w = fq(14, "40.4");
        assert_eq!(w.infer_depth().unwrap(), Some(4));
        assert_eq!(w.infer_separability().unwrap(), Some(9));
        assert_eq!(w.infer_rank().unwrap(), Some(-3));
        let inf = w.infer().unwrap();
        assert_eq!(inf.smallest_excluded_h, Some(10));
        assert!(!inf.beyond_heisenberg);
    }

    #[test]
    fn other_depths() {
        assert_eq!(fq(8, "39.6").infer_depth().unwrap(), Some(6));
        assert_eq!(fq(127, "266.7").infer_depth().unwrap(), Some(3));
        assert_eq!(fq(127, "266.7").infer_separability().unwrap(), Some(115));
        assert_eq!(fq(36, "54.36").infer_rank().unwrap(), Some(-27));
    }

    #[test]
    fn n14_grid_cells() {
        let grid = fq(14, "40.4").build_grid().unwrap();
        let c = grid.get(4, 9).unwrap();
        assert_eq!(c.f_wh, 32);
        assert_eq!(c.flags, Flags { w: false, h: false, r: true, wh: true });
        let c = grid.get(1, 14).unwrap();
        assert_eq!(c.flags, Flags { w: true, h: true, r: true, wh: true });
        assert_eq!(c.flags.status(), "WHRWH");
        let c = grid.get(14, 1).unwrap();
        assert_eq!(c.flags.status(), "OK");
        assert_eq!(
            grid.counts(),
            Counts { by_w: 16, by_h: 11, by_r: 20, by_wh: 24 }
        );
    }

    #[test]
    fn status_round_trip() {
        for bits in 0..16u8 {
            let f = Flags {
                w: bits & 1 != 0,
                h: bits & 2 != 0,
                r: bits & 4 != 0,
                wh: bits & 8 != 0,
            };
            if f.any() && !f.wh {
                continue;
            }
            assert_eq!(Flags::parse_status(&f.status()).unwrap(), f);
        }
        assert!(Flags::parse_status("HW").is_err());
        assert!(Flags::parse_status("RHWH").is_err());
        assert!(Flags::parse_status("W").is_err());
    }

    #[test]
    fn extremes() {
        let w = fq(10, "10");
        let inf = w.infer().unwrap();
        assert_eq!((inf.w, inf.h, inf.r), (1, 10, -9));
        assert_eq!(w.build_grid().unwrap().counts().by_wh, 0);

        let w = fq(10, "100");
        let inf = w.infer().unwrap();
        assert_eq!((inf.w, inf.h, inf.r), (10, 1, 9));
        assert!(!inf.beyond_heisenberg);

        let w = fq(10, "100.5");
        let inf = w.infer().unwrap();
        assert_eq!((inf.w, inf.h, inf.r), (10, 1, 9));
        assert!(inf.beyond_heisenberg);
        assert_eq!(inf.smallest_excluded_h, Some(1));
    }

    #[test]
    fn measurement_validation() {
        assert!(Measurement::qfi("a", 0, "1").is_err());
        assert!(Measurement::qfi("a", 5, "0").is_err());
        assert!(Measurement::qfi("a", 5, "-3").is_err());
        assert!(Measurement::qfi("a", 5, "x").is_err());
        assert!(Measurement::squeezing("a", 5, "0", Unit::Linear).is_err());
        assert!(Measurement::squeezing("a", 5, "-3", Unit::Db).is_ok());
        assert!(Measurement::squeezing("a", 5, "0.5", Unit::None).is_err());
        let mut m = Measurement::qfi("a", 5, "3").unwrap();
        m.unit = Unit::Db;
        assert!(m.validate().is_err());
    }

    #[test]
    fn report_fields() {
        let r = report(&Measurement::qfi("ions", 14, "40.4").unwrap()).unwrap();
        assert_eq!(r.q_advantage.as_deref(), Some("26.4"));
        let json: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(json["inferred"]["r"], -3);
        assert_eq!(json["counts"]["by_wh"], 24);
        assert_eq!(json["grid_ref"], "grid.csv");
        assert_eq!(json["kind"], "fq");

        let r = report(&Measurement::squeezing("bec", 470, "-4.5", Unit::Db).unwrap()).unwrap();
        assert!(r.q_advantage.is_none());
        assert_eq!(
            r.xi2_linear.as_deref(),
            Some("0.354813389233575458433218702264")
        );
    }

    #[test]
    fn simple_mode_is_looser() {
        let tight = fq(14, "40.4").report().unwrap();
        let simple = Witness::new(Measurement::qfi("t", 14, "40.4").unwrap(), BoundMode::Simple)
            .unwrap()
            .report()
            .unwrap();
        assert!(simple.counts.by_w <= tight.counts.by_w);
        assert!(simple.counts.by_r <= tight.counts.by_r);
        assert!(simple.counts.by_wh <= tight.counts.by_wh);
        assert_eq!(simple.counts.by_h, tight.counts.by_h);
    }
}
