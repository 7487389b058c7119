//! Boundary conditions for the octahedron recurrence: strips of rows
//! `1..=d` framed by rows of ones, a wall of ones at `j = 0`, and tubes with
//! a second wall at `j = ell + 1`.
//!
//! Boundary values are synthesized by [`StripSpec`], never stored. The
//! consequences verified here: the wall forces an exact window of zeros at
//! `-d <= j <= -1`, values mirror across the wall as
//! `T(i,j,k) = (-1)^(d i) T(d+1-i, -j-d-1, k)`, and a tube makes the system
//! periodic in `k` with period `2(d + ell + 2)`.

use alloc::format;
use alloc::string::String;

use crate::condensation::ExtendedRow;
use crate::lattice::{EvolveError, InitialSurface, LatticePoint, Parity, SurfaceError, TField};
use crate::report::Report;
use crate::ring::RingValue;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BoundaryValue {
    Zero,
    One,
}

/// Rows `1..=d` are dynamical; rows `0` and `d+1` carry ones, rows `-1` and
/// `d+2` carry zeros. Optionally a wall of ones at `j = 0`, and a second
/// wall at `j = ell + 1`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct StripSpec {
    d: i64,
    wall_at_zero: bool,
    ell: Option<i64>,
}

impl StripSpec {
    pub fn strip(d: i64) -> StripSpec {
        assert!(d >= 1, "strip needs at least one dynamical row");
        StripSpec { d, wall_at_zero: false, ell: None }
    }

    pub fn with_wall(d: i64) -> StripSpec {
        StripSpec { wall_at_zero: true, ..StripSpec::strip(d) }
    }

    pub fn tube(d: i64, ell: i64) -> StripSpec {
        assert!(ell >= 1, "tube needs at least one dynamical column");
        StripSpec { wall_at_zero: true, ell: Some(ell), ..StripSpec::strip(d) }
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn has_wall(&self) -> bool {
        self.wall_at_zero
    }

    pub fn ell(&self) -> Option<i64> {
        self.ell
    }

    /// Boundary value at column `(i, j)`, independent of `k`; `None` means
    /// the point is dynamical (or out of reach of the rules).
    pub fn synth(&self, i: i64, j: i64) -> Option<BoundaryValue> {
        // row rules take precedence at the corners
        if i == 0 || i == self.d + 1 {
            return Some(BoundaryValue::One);
        }
        if i == -1 || i == self.d + 2 {
            return Some(BoundaryValue::Zero);
        }
        if i < -1 || i > self.d + 2 {
            return None;
        }
        if self.wall_at_zero && j == 0 {
            return Some(BoundaryValue::One);
        }
        if let Some(l) = self.ell {
            if j == l + 1 {
                return Some(BoundaryValue::One);
            }
        }
        None
    }
}

/// Strip data on rows `1..=d` over the column range, heights `(i+j) mod 2`.
pub fn strip_field(
    d: i64,
    jrange: (i64, i64),
    value: impl FnMut(i64, i64) -> RingValue,
) -> Result<TField, SurfaceError> {
    let surface = InitialSurface::flat_from(Parity::Even, (1, d), jrange, value);
    TField::with_boundary(surface, StripSpec::strip(d))
}

/// Strip with the wall of ones at `j = 0`; data on `1 <= j <= jmax`.
pub fn walled_strip_field(
    d: i64,
    jmax: i64,
    value: impl FnMut(i64, i64) -> RingValue,
) -> Result<TField, SurfaceError> {
    let surface = InitialSurface::flat_from(Parity::Even, (1, d), (1, jmax), value);
    TField::with_boundary(surface, StripSpec::with_wall(d))
}

/// Two-wall tube: data on the `d x ell` rectangle.
pub fn tube_field(
    d: i64,
    ell: i64,
    value: impl FnMut(i64, i64) -> RingValue,
) -> Result<TField, SurfaceError> {
    let surface = InitialSurface::flat_from(Parity::Even, (1, d), (1, ell), value);
    TField::with_boundary(surface, StripSpec::tube(d, ell))
}

/// Periodicity of a tube in the vertical direction: values repeat with
/// period `2p`, `p = d + ell + 2`, and after `p` steps the tube reflects
/// through its center.
pub fn check_zamolodchikov(field: &mut TField, levels: i64) -> Result<Report, EvolveError> {
    let spec = *field.boundary().expect("boundary rules required");
    let d = spec.d();
    let ell = spec.ell().expect("second wall required");
    let p = d + ell + 2;
    let mut report = Report::new();

    let mut bad: Option<String> = None;
    for i in 1..=d {
        for j in 1..=ell {
            let k0 = (i + j).rem_euclid(2);
            for t in 0..levels {
                let k = k0 + 2 * t;
                let shifted = field.evolve_to(LatticePoint::new(i, j, k + 2 * p))?;
                let here = field.evolve_to(LatticePoint::new(i, j, k))?;
                if shifted != here && bad.is_none() {
                    bad = Some(format!("T({},{},{}) != T({},{},{})", i, j, k + 2 * p, i, j, k));
                }
            }
        }
    }
    report.check(
        format!("tube d={} ell={} repeats with period 2p = {}", d, ell, 2 * p),
        bad.is_none(),
        bad.unwrap_or_default(),
    );

    // Both sides of the reflection live on the sublattice exactly when
    // k = i + j + p (mod 2), whatever the parity of p.
    let mut bad: Option<String> = None;
    for i in 1..=d {
        for j in 1..=ell {
            let k0 = (i + j + p).rem_euclid(2);
            for t in 0..levels {
                let k = k0 + 2 * t;
                let shifted = field.evolve_to(LatticePoint::new(i, j, k + p))?;
                let mirrored = field.evolve_to(LatticePoint::new(d + 1 - i, ell + 1 - j, k))?;
                if shifted != mirrored && bad.is_none() {
                    bad = Some(format!(
                        "T({},{},{}) != T({},{},{})",
                        i,
                        j,
                        k + p,
                        d + 1 - i,
                        ell + 1 - j,
                        k
                    ));
                }
            }
        }
    }
    report.check(
        format!("tube reflects through its center after p = {} steps", p),
        bad.is_none(),
        bad.unwrap_or_default(),
    );

    Ok(report)
}

/// Consequences of the wall at `j = 0`, all through the determinant route
/// over the extended row: the determinants reproduce plain evolution on the
/// strip, the wall column itself comes out as ones, the window
/// `-d <= j <= -1` is exactly zero, and stepping backwards across the wall
/// (where the divisor is nonzero) agrees with the determinants.
pub fn verify_wall_zeros(field: &mut TField, k_max: i64) -> Result<Report, EvolveError> {
    let spec = *field.boundary().expect("boundary rules required");
    let d = spec.d();
    assert!(spec.has_wall(), "wall at j = 0 required");
    let mut row = ExtendedRow::new(field);
    let mut report = Report::new();

    let mut bad: Option<String> = None;
    for i in 1..=d {
        for j in 1..=2i64 {
            for k in -k_max..=k_max {
                if (i + j + k).rem_euclid(2) != 0 {
                    continue;
                }
                let det = row.t_det(i, j, k)?;
                let evo = row.evolve(LatticePoint::new(i, j, k))?;
                if det != evo && bad.is_none() {
                    bad = Some(format!("det window differs from evolution at ({},{},{})", i, j, k));
                }
            }
        }
    }
    report.check("window determinants reproduce evolution on the strip", bad.is_none(), bad.unwrap_or_default());

    let mut bad: Option<String> = None;
    for i in 1..=d {
        for k in -k_max..=k_max {
            if (i + k).rem_euclid(2) != 0 {
                continue;
            }
            let det = row.t_det(i, 0, k)?;
            if !det.is_one() && bad.is_none() {
                bad = Some(format!("T({},0,{}) = {}", i, k, det));
            }
        }
    }
    report.check("the wall column determinants are ones", bad.is_none(), bad.unwrap_or_default());

    let mut bad: Option<String> = None;
    for i in 1..=d {
        for j in -d..=-1i64 {
            for k in -k_max..=k_max {
                if (i + j + k).rem_euclid(2) != 0 {
                    continue;
                }
                let det = row.t_det(i, j, k)?;
                if !det.is_zero() && bad.is_none() {
                    bad = Some(format!("T({},{},{}) = {}", i, j, k, det));
                }
            }
        }
    }
    report.check(
        format!("the window -{} <= j <= -1 vanishes identically", d),
        bad.is_none(),
        bad.unwrap_or_default(),
    );

    // backward step: T(i,j-1,k) = (T(i,j,k+1) T(i,j,k-1) - T(i+1,j,k) T(i-1,j,k)) / T(i,j+1,k),
    // available at j = 0 and j = -1 where the divisor is 1 or a strip value
    let mut bad: Option<String> = None;
    for i in 1..=d {
        for jt in [-1i64, -2] {
            for k in -k_max..=k_max {
                if (i + jt + k).rem_euclid(2) != 0 {
                    continue;
                }
                let j = jt + 1;
                let up = row.t_det(i, j, k + 1)?;
                let down = row.t_det(i, j, k - 1)?;
                let ip = row.t_det(i + 1, j, k)?;
                let im = row.t_det(i - 1, j, k)?;
                let div = row.t_det(i, j + 1, k)?;
                if div.is_zero() {
                    continue;
                }
                let back = up.mul(&down)?.sub(&ip.mul(&im)?)?.div_exact(&div)?;
                let det = row.t_det(i, jt, k)?;
                if back != det && bad.is_none() {
                    bad = Some(format!("backward step at ({},{},{}) gives {}", i, jt, k, back));
                }
            }
        }
    }
    report.check("backward steps across the wall match the determinants", bad.is_none(), bad.unwrap_or_default());

    Ok(report)
}

/// The mirror identity across the wall:
/// `T(i,j,k) = (-1)^(d i) T(d+1-i, -j-d-1, k)`, checked exactly on a window
/// of columns spanning both sides, via the extended-row determinants.
pub fn verify_mirror(field: &mut TField, k_max: i64) -> Result<Report, EvolveError> {
    let spec = *field.boundary().expect("boundary rules required");
    let d = spec.d();
    assert!(spec.has_wall(), "wall at j = 0 required");
    let mut row = ExtendedRow::new(field);
    let mut report = Report::new();

    let mut bad: Option<String> = None;
    for i in 1..=d {
        let sign_flip = (d * i).rem_euclid(2) == 1;
        for j in -(d + 3)..=2i64 {
            for k in -k_max..=k_max {
                if (i + j + k).rem_euclid(2) != 0 {
                    continue;
                }
                let lhs = row.t_det(i, j, k)?;
                let partner = row.t_det(d + 1 - i, -j - d - 1, k)?;
                let rhs = if sign_flip { partner.neg() } else { partner };
                if lhs != rhs && bad.is_none() {
                    bad = Some(format!("T({0},{1},{2}) != (-1)^(d i) T({3},{4},{2})", i, j, k, d + 1 - i, -j - d - 1));
                }
            }
        }
    }
    report.check(
        format!("values mirror across the wall with sign (-1)^(d i), d = {}", d),
        bad.is_none(),
        bad.unwrap_or_default(),
    );

    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Int, Rat};

    fn rat(n: i64, den: i64) -> RingValue {
        RingValue::Rat(Rat::new(Int::from(n), Int::from(den)))
    }

    fn seeded(seed: &mut u64) -> RingValue {
        *seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        let num = 1 + ((*seed >> 33) % 6) as i64;
        let den = 1 + ((*seed >> 13) % 4) as i64;
        rat(num, den)
    }

    #[test]
    fn synth_rules() {
        let spec = StripSpec::tube(2, 3);
        assert_eq!(spec.synth(0, 5), Some(BoundaryValue::One));
        assert_eq!(spec.synth(3, -7), Some(BoundaryValue::One));
        assert_eq!(spec.synth(-1, 0), Some(BoundaryValue::Zero));
        assert_eq!(spec.synth(4, 2), Some(BoundaryValue::Zero));
        assert_eq!(spec.synth(1, 0), Some(BoundaryValue::One));
        assert_eq!(spec.synth(2, 4), Some(BoundaryValue::One));
        assert_eq!(spec.synth(1, 2), None);
        assert_eq!(spec.synth(5, 0), None);
        let plain = StripSpec::strip(2);
        assert_eq!(plain.synth(1, 0), None);
    }

    #[test]
    fn smallest_tube_cycles_through_known_values() {
        // d = 1, ell = 1, T(1,1,0) = a: the relation gives 2/a at k = 2 and
        // returns to a at k = 4 = p
        let a = rat(5, 3);
        let mut f = tube_field(1, 1, |_, _| a.clone()).unwrap();
        let two_over_a = rat(2, 1).div_exact(&a).unwrap();
        assert_eq!(f.evolve_to(LatticePoint::new(1, 1, 2)).unwrap(), two_over_a);
        assert_eq!(f.evolve_to(LatticePoint::new(1, 1, 4)).unwrap(), a);
        let report = check_zamolodchikov(&mut f, 2).unwrap();
        assert!(report.all_passed(), "{}", report);
    }

    #[test]
    fn tubes_are_periodic() {
        for (d, ell) in [(1i64, 2i64), (2, 2)] {
            let mut seed = (d * 10 + ell) as u64;
            let mut f = tube_field(d, ell, |_, _| seeded(&mut seed)).unwrap();
            let report = check_zamolodchikov(&mut f, 2).unwrap();
            assert!(report.all_passed(), "d={} ell={}\n{}", d, ell, report);
            assert_eq!(report.checks.len(), 2);
        }
    }

    #[test]
    fn wall_zeros_and_mirror_for_small_strips() {
        for d in [1i64, 2] {
            let mut seed = 99 + d as u64;
            let jmax = 20 + 6 * d;
            let mut f = walled_strip_field(d, jmax, |_, _| seeded(&mut seed)).unwrap();
            let zeros = verify_wall_zeros(&mut f, 3).unwrap();
            assert!(zeros.all_passed(), "d={}\n{}", d, zeros);
            let mirror = verify_mirror(&mut f, 3).unwrap();
            assert!(mirror.all_passed(), "d={}\n{}", d, mirror);
        }
    }

    #[test]
    fn lift_recursion_on_tubes() {
        use crate::condensation::verify_lift_recursion;
        for (d, ell) in [(1i64, 2i64), (2, 3)] {
            let mut seed = 7 * d as u64 + ell as u64;
            let mut f = tube_field(d, ell, |_, _| seeded(&mut seed)).unwrap();
            // base anchor with j0 + k0 = d + 1 (mod 2)
            let k0 = if d.rem_euclid(2) == 1 { 1 } else { 2 };
            let report = verify_lift_recursion(&mut f, (1, k0), 3).unwrap();
            assert!(report.all_passed(), "d={} ell={}\n{}", d, ell, report);
            assert_eq!(report.checks.len(), 4);
        }
    }

    #[test]
    fn surface_overlapping_boundary_is_rejected() {
        let surface = InitialSurface::flat_from(Parity::Even, (0, 2), (1, 3), |_, _| rat(1, 1));
        let err = TField::with_boundary(surface, StripSpec::tube(2, 3));
        assert!(matches!(err, Err(SurfaceError::BoundaryOverlap(_))));
    }
}
