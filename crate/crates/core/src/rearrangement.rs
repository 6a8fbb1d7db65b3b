//! Distribution functions and nonincreasing rearrangements of functions on
//! finite measure spaces.
//!
//! Both objects are exact step curves. They are built from one shared
//! grouping of `|f|` values (sorted descending, ties merged, cumulative
//! weights as prefix sums), so a rearrangement and the distribution curve of
//! the same function agree bit for bit.

use crate::error::{Error, Result};
use crate::space::{DiscreteMeasureSpace, MeasurableFunction};

/// The value `mu({|f| > t})` as a right-continuous nonincreasing step curve.
///
/// `thresholds` are the distinct positive values of `|f|` in increasing
/// order; the curve equals `initial` on `[0, t_1)` and `masses_from[i]` on
/// `[t_i, t_{i+1})`. `tail` is the measure of `{|f| = inf}` (the limit at
/// `t -> inf`), zero for finite-valued functions.
#[derive(Debug, Clone, PartialEq)]
pub struct DistributionCurve {
    thresholds: Vec<f64>,
    masses_from: Vec<f64>,
    initial: f64,
    tail: f64,
}

impl DistributionCurve {
    pub fn thresholds(&self) -> &[f64] {
        &self.thresholds
    }

    /// Value on `[thresholds[i], thresholds[i+1])`.
    pub fn masses_from(&self) -> &[f64] {
        &self.masses_from
    }

    /// Value on `[0, t_1)` (total mass of the support of f).
    pub fn initial_mass(&self) -> f64 {
        self.initial
    }

    /// Measure of the set where `|f| = inf`.
    pub fn tail_mass(&self) -> f64 {
        self.tail
    }

    /// Evaluate `mu({|f| > t})` for `t >= 0`.
    pub fn value_at(&self, t: f64) -> f64 {
        debug_assert!(t >= 0.0);
        // Last threshold <= t wins; right continuity.
        match self
            .thresholds
            .partition_point(|&th| th <= t)
            .checked_sub(1)
        {
            None => self.initial,
            Some(i) => self.masses_from[i],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.initial == 0.0
    }
}

/// The nonincreasing rearrangement `f*` as a step function.
///
/// `f*(t) = levels[i]` on `[T_{i-1}, T_i)` with `T_0 = 0`, and `0` for
/// `t >= T_m`. Levels are strictly decreasing and positive (an infinite
/// first level encodes a function that is infinite on positive measure);
/// zero values of `f` contribute no piece.
#[derive(Debug, Clone, PartialEq)]
pub struct StepRearrangement {
    breakpoints: Vec<f64>,
    levels: Vec<f64>,
    /// cumulative[i] = integral of f* over [0, T_{i+1}].
    cumulative: Vec<f64>,
}

fn cumulative_integrals(breakpoints: &[f64], levels: &[f64]) -> Vec<f64> {
    let mut acc = 0.0;
    let mut prev = 0.0;
    let mut out = Vec::with_capacity(levels.len());
    for (&t, &v) in breakpoints.iter().zip(levels) {
        acc += v * (t - prev);
        prev = t;
        out.push(acc);
    }
    out
}

impl StepRearrangement {
    /// Build from strictly decreasing positive levels and strictly
    /// increasing positive cumulative breakpoints `T_1 < ... < T_m`.
    pub fn new(levels: Vec<f64>, breakpoints: Vec<f64>) -> Result<Self> {
        if levels.len() != breakpoints.len() {
            return Err(Error::Domain(
                "levels and breakpoints must have equal length".into(),
            ));
        }
        let mut prev_t = 0.0;
        for &t in &breakpoints {
            if !(t.is_finite() && t > prev_t) {
                return Err(Error::Domain(format!(
                    "breakpoints must be finite and strictly increasing from 0, got {t} after {prev_t}"
                )));
            }
            prev_t = t;
        }
        for pair in levels.windows(2) {
            if !(pair[0] > pair[1]) {
                return Err(Error::Domain(
                    "levels must be strictly decreasing".into(),
                ));
            }
        }
        if let Some(&last) = levels.last() {
            if !(last > 0.0) {
                return Err(Error::Domain("levels must be positive".into()));
            }
        }
        if levels.iter().any(|v| v.is_nan()) {
            return Err(Error::Domain("level is NaN".into()));
        }
        let cumulative = cumulative_integrals(&breakpoints, &levels);
        Ok(Self {
            breakpoints,
            levels,
            cumulative,
        })
    }

    /// Rearrangement of the indicator of a set of the given measure.
    pub fn indicator(mass: f64) -> Self {
        Self::new(vec![1.0], vec![mass]).expect("indicator")
    }

    pub fn zero() -> Self {
        Self {
            breakpoints: Vec::new(),
            levels: Vec::new(),
            cumulative: Vec::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.levels.is_empty()
    }

    /// Breakpoints `T_1 < ... < T_m` (without the implicit `T_0 = 0`).
    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    pub fn levels(&self) -> &[f64] {
        &self.levels
    }

    pub fn has_infinite_level(&self) -> bool {
        self.levels.first().is_some_and(|v| v.is_infinite())
    }

    /// Total support measure `T_m` (0 for the zero function).
    pub fn support_measure(&self) -> f64 {
        self.breakpoints.last().copied().unwrap_or(0.0)
    }

    /// Integral of `f*` over `[0, inf)`.
    pub fn total_integral(&self) -> f64 {
        self.cumulative.last().copied().unwrap_or(0.0)
    }

    pub(crate) fn cumulative(&self) -> &[f64] {
        &self.cumulative
    }

    /// Evaluate `f*(t)`.
    pub fn value_at(&self, t: f64) -> f64 {
        debug_assert!(t >= 0.0);
        let i = self.breakpoints.partition_point(|&b| b <= t);
        if i < self.levels.len() {
            self.levels[i]
        } else {
            0.0
        }
    }

    /// The running average `f**(t) = (1/t) int_0^t f*(s) ds` for `t > 0`.
    pub fn double_star(&self, t: f64) -> Result<f64> {
        if !(t > 0.0) {
            return Err(Error::Domain(format!(
                "f** is defined for t > 0 only, got {t}"
            )));
        }
        if self.has_infinite_level() {
            return Ok(f64::INFINITY);
        }
        let i = self.breakpoints.partition_point(|&b| b <= t);
        let (base, prev_t) = if i == 0 {
            (0.0, 0.0)
        } else {
            (self.cumulative[i - 1], self.breakpoints[i - 1])
        };
        let integral = if i < self.levels.len() {
            base + self.levels[i] * (t - prev_t)
        } else {
            base
        };
        Ok(integral / t)
    }

    /// Rearrangement of `|f|^alpha`; identical breakpoints, levels raised to
    /// `alpha` (the identity `(|f|^alpha)* = (f*)^alpha`).
    pub fn powf(&self, alpha: f64) -> Result<Self> {
        if !(alpha > 0.0) {
            return Err(Error::Domain("power must be positive".into()));
        }
        Self::new(
            self.levels.iter().map(|v| v.powf(alpha)).collect(),
            self.breakpoints.clone(),
        )
    }

    /// Distribution curve of `f*` itself (equals the distribution curve of
    /// the original function, exactly).
    pub fn distribution(&self) -> DistributionCurve {
        let m = self.levels.len();
        let (finite_start, tail) = if self.has_infinite_level() {
            (1, self.breakpoints[0])
        } else {
            (0, 0.0)
        };
        // mu(t) = T_j for t in [v_{j+1}, v_j); thresholds ascend.
        let mut thresholds = Vec::with_capacity(m - finite_start);
        let mut masses_from = Vec::with_capacity(m - finite_start);
        for j in (finite_start..m).rev() {
            thresholds.push(self.levels[j]);
            masses_from.push(if j == finite_start {
                tail
            } else {
                self.breakpoints[j - 1]
            });
        }
        masses_from.rotate_left(if thresholds.is_empty() { 0 } else { 1 });
        if let Some(last) = masses_from.last_mut() {
            *last = tail;
        }
        DistributionCurve {
            thresholds,
            masses_from,
            initial: self.support_measure(),
            tail,
        }
    }
}

/// Group `|f|` by distinct value, descending, with summed weights.
fn sorted_groups(f: &MeasurableFunction, space: &DiscreteMeasureSpace) -> Result<Vec<(f64, f64)>> {
    if f.len() != space.len() {
        return Err(Error::DomainMismatch(format!(
            "function has {} values but space has {} atoms",
            f.len(),
            space.len()
        )));
    }
    let mut pairs: Vec<(f64, f64)> = f
        .values()
        .iter()
        .zip(space.weights())
        .map(|(&v, &w)| (v.abs(), w))
        .filter(|&(v, _)| v > 0.0)
        .collect();
    pairs.sort_by(|a, b| b.0.partial_cmp(&a.0).expect("no NaN values"));
    let mut groups: Vec<(f64, f64)> = Vec::new();
    for (v, w) in pairs {
        match groups.last_mut() {
            Some(last) if last.0 == v => last.1 += w,
            _ => groups.push((v, w)),
        }
    }
    Ok(groups)
}

/// The distribution function `t -> mu({|f| > t})` as an exact step curve.
pub fn distribution_function(
    f: &MeasurableFunction,
    space: &DiscreteMeasureSpace,
) -> Result<DistributionCurve> {
    Ok(rearrangement(f, space)?.distribution())
}

/// The nonincreasing rearrangement `f*`: distinct values of `|f|` sorted
/// descending over cumulative weights. Independent of atom ordering.
pub fn rearrangement(
    f: &MeasurableFunction,
    space: &DiscreteMeasureSpace,
) -> Result<StepRearrangement> {
    let groups = sorted_groups(f, space)?;
    let mut levels = Vec::with_capacity(groups.len());
    let mut breakpoints = Vec::with_capacity(groups.len());
    let mut acc = 0.0;
    for (v, w) in groups {
        acc += w;
        levels.push(v);
        breakpoints.push(acc);
    }
    let cumulative = cumulative_integrals(&breakpoints, &levels);
    Ok(StepRearrangement {
        breakpoints,
        levels,
        cumulative,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn space(weights: &[f64]) -> DiscreteMeasureSpace {
        DiscreteMeasureSpace::new(
            weights
                .iter()
                .enumerate()
                .map(|(i, &w)| (format!("a{i}"), w))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn distribution_two_atoms() {
        let sp = space(&[1.0, 1.0]);
        let f = MeasurableFunction::new(&sp, vec![3.0, -1.0]).unwrap();
        let d = distribution_function(&f, &sp).unwrap();
        // mass 2 on [0,1), 1 on [1,3), 0 on [3,inf)
        assert_eq!(d.value_at(0.0), 2.0);
        assert_eq!(d.value_at(0.5), 2.0);
        assert_eq!(d.value_at(1.0), 1.0);
        assert_eq!(d.value_at(2.9), 1.0);
        assert_eq!(d.value_at(3.0), 0.0);
        assert_eq!(d.value_at(100.0), 0.0);
    }

    #[test]
    fn distribution_of_zero_function() {
        let sp = space(&[1.0, 2.0]);
        let f = MeasurableFunction::new(&sp, vec![0.0, 0.0]).unwrap();
        let d = distribution_function(&f, &sp).unwrap();
        assert!(d.is_zero());
        assert_eq!(d.value_at(0.0), 0.0);
        assert_eq!(d.value_at(1.0), 0.0);
    }

    #[test]
    fn distribution_merges_equal_levels() {
        let sp = space(&[2.0, 3.0]);
        let f = MeasurableFunction::new(&sp, vec![5.0, 5.0]).unwrap();
        let d = distribution_function(&f, &sp).unwrap();
        assert_eq!(d.thresholds(), &[5.0]);
        assert_eq!(d.value_at(0.0), 5.0);
        assert_eq!(d.value_at(4.999), 5.0);
        assert_eq!(d.value_at(5.0), 0.0);
    }

    #[test]
    fn rearrangement_sorts_and_accumulates() {
        let sp = space(&[1.0, 1.0]);
        let f = MeasurableFunction::new(&sp, vec![3.0, 1.0]).unwrap();
        let r = rearrangement(&f, &sp).unwrap();
        assert_eq!(r.levels(), &[3.0, 1.0]);
        assert_eq!(r.breakpoints(), &[1.0, 2.0]);

        let sp = space(&[2.0, 1.0]);
        let f = MeasurableFunction::new(&sp, vec![1.0, 4.0]).unwrap();
        let r = rearrangement(&f, &sp).unwrap();
        assert_eq!(r.levels(), &[4.0, 1.0]);
        assert_eq!(r.breakpoints(), &[1.0, 3.0]);
    }

    #[test]
    fn rearrangement_of_abs_is_identical() {
        let sp = space(&[1.0, 2.0, 0.5]);
        let f = MeasurableFunction::new(&sp, vec![-2.0, 1.5, -0.25]).unwrap();
        let g = MeasurableFunction::new(&sp, vec![2.0, 1.5, 0.25]).unwrap();
        assert_eq!(
            rearrangement(&f, &sp).unwrap(),
            rearrangement(&g, &sp).unwrap()
        );
    }

    #[test]
    fn double_star_examples() {
        let r = StepRearrangement::indicator(1.0);
        assert_relative_eq!(r.double_star(0.5).unwrap(), 1.0);
        assert_relative_eq!(r.double_star(2.0).unwrap(), 0.5);

        let r = StepRearrangement::new(vec![3.0, 1.0], vec![1.0, 2.0]).unwrap();
        assert_relative_eq!(r.double_star(2.0).unwrap(), 2.0);
        assert!(r.double_star(0.0).is_err());
        assert!(r.double_star(-1.0).is_err());
    }

    #[test]
    fn equimeasurability_is_exact() {
        let sp = space(&[0.7, 1.3, 2.0, 0.1]);
        let f = MeasurableFunction::new(&sp, vec![2.5, -2.5, 0.75, 3.0]).unwrap();
        let d = distribution_function(&f, &sp).unwrap();
        let r = rearrangement(&f, &sp).unwrap();
        assert_eq!(d, r.distribution());
    }

    #[test]
    fn infinite_values_set_tail_mass() {
        let sp = space(&[1.0, 2.0]);
        let f = MeasurableFunction::new(&sp, vec![f64::INFINITY, 1.0]).unwrap();
        let r = rearrangement(&f, &sp).unwrap();
        assert!(r.has_infinite_level());
        assert_eq!(r.double_star(1.0).unwrap(), f64::INFINITY);
        let d = r.distribution();
        assert_eq!(d.tail_mass(), 1.0);
        assert_eq!(d.value_at(1e12), 1.0);
        assert_eq!(d.value_at(0.5), 3.0);
    }

    #[test]
    fn power_identity_on_levels() {
        let r = StepRearrangement::new(vec![4.0, 2.0, 1.0], vec![0.5, 1.5, 4.0]).unwrap();
        let r2 = r.powf(2.0).unwrap();
        assert_eq!(r2.levels(), &[16.0, 4.0, 1.0]);
        assert_eq!(r2.breakpoints(), r.breakpoints());
    }
}
