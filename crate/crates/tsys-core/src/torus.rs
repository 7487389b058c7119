//! Quotients of the face lattice by the two pentagram translations,
//! quasi-periodic surfaces over them, and the dictionary identifying the
//! wrapped Y-system with the `(p, q)` dynamics.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::lattice::{EvolveError, InitialSurface, LatticePoint, Parity, TField, YField};
use crate::pentagram::{higher_map, radii};
use crate::report::Report;
use crate::ring::{rat_pow, Rat, RingValue};

/// The rank-two translation group generated by `(kappa, 2-kappa)` and
/// `(n, -n)` acting on face coordinates. The quotient has `2n` classes,
/// one per point of the two diagonals `(i, -i)` and `(i+1, -i)`,
/// `0 <= i < n`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TorusWrap {
    pub kappa: i64,
    pub n: i64,
}

impl TorusWrap {
    pub fn new(kappa: i64, n: i64) -> TorusWrap {
        TorusWrap { kappa, n }
    }

    /// The grading `(kappa-2)i + kappa*j`, constant on `(kappa, 2-kappa)`
    /// translates and shifted by `-2n` along `(n, -n)`.
    pub fn e(&self, i: i64, j: i64) -> i64 {
        (self.kappa - 2) * i + self.kappa * j
    }

    /// The class invariant `(parity of i+j, e mod 2n)`; two cells are
    /// translates exactly when their classes agree.
    pub fn class(&self, i: i64, j: i64) -> (i64, i64) {
        ((i + j).rem_euclid(2), self.e(i, j).rem_euclid(2 * self.n))
    }

    /// Canonical representative of the translation class of `(i, j)`.
    ///
    /// Classes are separated exactly by the parity of `i+j` together with
    /// `e mod 2n`; the representative lies on the diagonal `(i0, -i0)` for
    /// even parity and `(i0+1, -i0)` for odd.
    pub fn canonical(&self, i: i64, j: i64) -> (i64, i64) {
        let e = self.e(i, j);
        if (i + j).rem_euclid(2) == 0 {
            let i0 = (-e).div_euclid(2).rem_euclid(self.n);
            (i0, -i0)
        } else {
            let i0 = (self.kappa - 2 - e).div_euclid(2).rem_euclid(self.n);
            (i0 + 1, -i0)
        }
    }
}

/// Index of the `p` coordinate carrying `Y(i, j, k)` after `k` map steps.
pub fn p_slot(wrap: TorusWrap, i: i64, j: i64, k: i64) -> Result<usize, EvolveError> {
    let (r, rp) = radii(wrap.kappa);
    let num = wrap.e(i, j) + k * (r - rp);
    if num.rem_euclid(2) != 0 {
        return Err(EvolveError::ParityViolation(LatticePoint::new(i, j, k)));
    }
    Ok(num.div_euclid(2).rem_euclid(wrap.n) as usize)
}

/// Index of the `q` coordinate after `k + 1` map steps whose inverse
/// carries `Y(i, j, k)`.
pub fn q_slot(wrap: TorusWrap, i: i64, j: i64, k: i64) -> Result<usize, EvolveError> {
    let (r, rp) = radii(wrap.kappa);
    let num = wrap.e(i, j) + (k + 2) * (r - rp);
    if num.rem_euclid(2) != 0 {
        return Err(EvolveError::ParityViolation(LatticePoint::new(i, j, k)));
    }
    Ok(num.div_euclid(2).rem_euclid(wrap.n) as usize)
}

fn rv(x: Rat) -> RingValue {
    RingValue::Rat(x)
}

/// Seed a Y-system on the square window `|i|, |j| <= half` from the
/// coordinate lists: level 0 on even columns holds `p`, level -1 on odd
/// columns holds `1/q`, each at its read-off slot.
pub fn seed_window_from_pq(wrap: TorusWrap, ps: &[Rat], qs: &[Rat], half: i64) -> Result<YField, EvolveError> {
    assert_eq!(ps.len() as i64, wrap.n, "one p per class");
    assert_eq!(qs.len() as i64, wrap.n, "one q per class");
    let mut y = YField::new();
    for i in -half..=half {
        for j in -half..=half {
            if (i + j).rem_euclid(2) == 0 {
                let v = ps[p_slot(wrap, i, j, 0)?].clone();
                y.insert(LatticePoint::new(i, j, 0), rv(v));
            } else {
                let p = LatticePoint::new(i, j, -1);
                let q = &qs[q_slot(wrap, i, j, -1)?];
                if q.is_zero() {
                    return Err(EvolveError::DegenerateData(p));
                }
                y.insert(p, rv(Rat::one() / q));
            }
        }
    }
    Ok(y)
}

/// Seed the wrapped system: one value per translation class.
pub fn seed_wrapped_from_pq(wrap: TorusWrap, ps: &[Rat], qs: &[Rat]) -> Result<YField, EvolveError> {
    assert_eq!(ps.len() as i64, wrap.n, "one p per class");
    assert_eq!(qs.len() as i64, wrap.n, "one q per class");
    let mut y = YField::wrapped(wrap);
    for i in 0..wrap.n {
        let v = ps[p_slot(wrap, i, -i, 0)?].clone();
        y.insert(LatticePoint::new(i, -i, 0), rv(v));
        let p = LatticePoint::new(i + 1, -i, -1);
        let q = &qs[q_slot(wrap, i + 1, -i, -1)?];
        if q.is_zero() {
            return Err(EvolveError::DegenerateData(p));
        }
        y.insert(p, rv(Rat::one() / q));
    }
    Ok(y)
}

/// Fill levels `1..=levels`; window rims shrink silently, the wrapped
/// system stays complete.
pub fn evolve_y_levels(y: &mut YField, levels: i64) -> Result<(), EvolveError> {
    for k in 1..=levels {
        y.evolve_level(k)?;
    }
    Ok(())
}

/// Both translation invariances of the window values, plus agreement with
/// the wrapped evolution class by class.
pub fn check_double_periodicity(
    kappa: i64,
    n: i64,
    ps: &[Rat],
    qs: &[Rat],
    levels: i64,
    half: i64,
) -> Result<Report, EvolveError> {
    let wrap = TorusWrap::new(kappa, n);
    let mut y = seed_window_from_pq(wrap, ps, qs, half)?;
    evolve_y_levels(&mut y, levels)?;
    let mut report = Report::new();

    for (di, dj, name) in [(kappa, 2 - kappa, "(kappa, 2-kappa)"), (n, -n, "(n, -n)")] {
        let mut compared = 0usize;
        let mut bad: Option<String> = None;
        for k in -1..=levels {
            for p in y.points_at_level(k) {
                let t = LatticePoint::new(p.i + di, p.j + dj, p.k);
                if let (Some(v), Some(w)) = (y.get(&p), y.get(&t)) {
                    compared += 1;
                    if v != w && bad.is_none() {
                        bad = Some(format!("Y{} != Y{}", p, t));
                    }
                }
            }
        }
        report.check(
            format!("Y is invariant under translation by {}", name),
            bad.is_none() && compared > 0,
            bad.unwrap_or_else(|| String::from("no comparable pairs in the window")),
        );
    }

    let mut yw = seed_wrapped_from_pq(wrap, ps, qs)?;
    evolve_y_levels(&mut yw, levels)?;
    let mut compared = 0usize;
    let mut bad: Option<String> = None;
    for k in -1..=levels {
        for p in y.points_at_level(k) {
            let v = y.get(&p).expect("stored point");
            match yw.get(&p) {
                Some(w) if w == v => compared += 1,
                Some(_) => bad = bad.or_else(|| Some(format!("wrapped value differs at {}", p))),
                None => bad = bad.or_else(|| Some(format!("wrapped system missing {}", p))),
            }
        }
    }
    report.check(
        "the wrapped system reproduces the window class-wise",
        bad.is_none() && compared > 0,
        bad.unwrap_or_default(),
    );
    Ok(report)
}

/// Window values at level `k` against the `(p, q)` lists of the `k`-th and
/// `(k+1)`-th map iterates.
pub fn check_read_off(
    kappa: i64,
    n: i64,
    ps: &[Rat],
    qs: &[Rat],
    levels: i64,
    half: i64,
) -> Result<Report, EvolveError> {
    let wrap = TorusWrap::new(kappa, n);
    let mut y = seed_window_from_pq(wrap, ps, qs, half)?;
    evolve_y_levels(&mut y, levels)?;

    let mut iters: Vec<(Vec<Rat>, Vec<Rat>)> = alloc::vec![(ps.to_vec(), qs.to_vec())];
    for k in 0..=levels {
        let (cp, cq) = iters.last().expect("nonempty");
        let next = higher_map(cp, cq, kappa)
            .map_err(|_| EvolveError::DegenerateData(LatticePoint::new(0, 0, k + 1)))?;
        iters.push(next);
    }

    let mut report = Report::new();
    let mut compared = 0usize;
    let mut bad: Option<String> = None;
    for k in 0..=levels {
        for p in y.points_at_level(k) {
            let slot = p_slot(wrap, p.i, p.j, k)?;
            let want = rv(iters[k as usize].0[slot].clone());
            compared += 1;
            if *y.get(&p).expect("stored point") != want && bad.is_none() {
                bad = Some(format!("Y{} is not p[{}] of iterate {}", p, slot, k));
            }
        }
    }
    report.check(
        "level-k values are the p coordinates of the k-th iterate",
        bad.is_none() && compared > 0,
        bad.unwrap_or_default(),
    );

    let mut compared = 0usize;
    let mut bad: Option<String> = None;
    for k in 0..=levels {
        for p in y.points_at_level(k) {
            let slot = q_slot(wrap, p.i, p.j, k)?;
            let q = &iters[(k + 1) as usize].1[slot];
            if q.is_zero() {
                return Err(EvolveError::DegenerateData(p));
            }
            let want = rv(Rat::one() / q);
            compared += 1;
            if *y.get(&p).expect("stored point") != want && bad.is_none() {
                bad = Some(format!("Y{} is not 1/q[{}] of iterate {}", p, slot, k + 1));
            }
        }
    }
    report.check(
        "level-k values invert the q coordinates of the next iterate",
        bad.is_none() && compared > 0,
        bad.unwrap_or_default(),
    );
    Ok(report)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum QuasiError {
    /// `lambda` or `mu` is zero.
    ZeroFactor,
    /// A fundamental value is zero at this cell.
    ZeroValue((i64, i64)),
    /// Two entries name the same translation class.
    DuplicateClass((i64, i64)),
    /// The entries do not cover all `2n` classes.
    IncompleteCover,
}

impl core::fmt::Display for QuasiError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            QuasiError::ZeroFactor => write!(f, "lambda and mu must be nonzero"),
            QuasiError::ZeroValue((i, j)) => write!(f, "zero value at ({},{})", i, j),
            QuasiError::DuplicateClass((i, j)) => {
                write!(f, "({},{}) repeats an already covered class", i, j)
            }
            QuasiError::IncompleteCover => write!(f, "entries must cover all 2n classes"),
        }
    }
}

/// A surface periodic along `(kappa, 2-kappa)` and scaling along `(n, -n)`
/// by `lambda^e` on odd cells and `mu^e` on even cells.
#[derive(Clone, Debug)]
pub struct QuasiPeriodicSurface {
    wrap: TorusWrap,
    lambda: Rat,
    mu: Rat,
    reps: BTreeMap<(i64, i64), ((i64, i64), Rat)>,
}

impl QuasiPeriodicSurface {
    /// Build from one value per translation class; entries may sit anywhere,
    /// each class exactly once.
    pub fn from_entries(
        kappa: i64,
        n: i64,
        lambda: Rat,
        mu: Rat,
        entries: &[((i64, i64), Rat)],
    ) -> Result<QuasiPeriodicSurface, QuasiError> {
        if lambda.is_zero() || mu.is_zero() {
            return Err(QuasiError::ZeroFactor);
        }
        let wrap = TorusWrap::new(kappa, n);
        let mut reps = BTreeMap::new();
        for ((i, j), v) in entries {
            if v.is_zero() {
                return Err(QuasiError::ZeroValue((*i, *j)));
            }
            if reps.insert(wrap.class(*i, *j), ((*i, *j), v.clone())).is_some() {
                return Err(QuasiError::DuplicateClass((*i, *j)));
            }
        }
        if reps.len() as i64 != 2 * n {
            return Err(QuasiError::IncompleteCover);
        }
        Ok(QuasiPeriodicSurface { wrap, lambda, mu, reps })
    }

    /// Sample the two canonical diagonals.
    pub fn sampled(
        kappa: i64,
        n: i64,
        lambda: Rat,
        mu: Rat,
        mut value: impl FnMut(i64, i64) -> Rat,
    ) -> Result<QuasiPeriodicSurface, QuasiError> {
        let mut entries = Vec::with_capacity(2 * n as usize);
        for i in 0..n {
            entries.push(((i, -i), value(i, -i)));
            entries.push(((i + 1, -i), value(i + 1, -i)));
        }
        QuasiPeriodicSurface::from_entries(kappa, n, lambda, mu, &entries)
    }

    pub fn wrap(&self) -> TorusWrap {
        self.wrap
    }

    pub fn lambda(&self) -> &Rat {
        &self.lambda
    }

    pub fn mu(&self) -> &Rat {
        &self.mu
    }

    /// The stored representatives, ordered by class.
    pub fn fundamental(&self) -> Vec<((i64, i64), Rat)> {
        self.reps.values().cloned().collect()
    }

    /// Value at any cell: walking `beta` steps along `(n, -n)` from the
    /// stored representative multiplies it by `nu^(beta e0 - n beta(beta-1))`
    /// where `e0` grades the representative and `nu` is `lambda` on odd
    /// cells, `mu` on even.
    pub fn x(&self, i: i64, j: i64) -> Rat {
        let ((ri, rj), val) = self.reps.get(&self.wrap.class(i, j)).expect("classes cover the quotient");
        let e0 = self.wrap.e(*ri, *rj);
        let e1 = self.wrap.e(i, j);
        let two_n = 2 * self.wrap.n;
        debug_assert_eq!((e0 - e1).rem_euclid(two_n), 0);
        let beta = (e0 - e1).div_euclid(two_n);
        let nu = if (i + j).rem_euclid(2) == 1 { &self.lambda } else { &self.mu };
        let exp = beta * e0 - self.wrap.n * beta * (beta - 1);
        val * rat_pow(nu, exp).expect("nonzero multiplier")
    }
}

/// Evolution over a quasi-periodic surface: the `(kappa, 2-kappa)`
/// translation survives at every level, while the `(n, -n)` multiplier
/// changes with the level as `lambda^(1-k) mu^k`. The plain alternating
/// multiplier (`lambda` on even levels, `mu` on odd) holds on levels 0 and
/// 1 and extends upward exactly when `lambda = mu`. The diagonal Y-products
/// come out as `lambda^(2 kappa - 2)` and `mu^(2 - 2 kappa)`.
pub fn verify_unfolding(q: &QuasiPeriodicSurface, k_max: i64) -> Result<Report, EvolveError> {
    let wrap = q.wrap();
    let (kappa, n) = (wrap.kappa, wrap.n);
    let mut report = Report::new();

    let mut bad: Option<String> = None;
    for i in -6..=6i64 {
        for j in -6..=6i64 {
            if q.x(i + kappa, j + 2 - kappa) != q.x(i, j) && bad.is_none() {
                bad = Some(format!("x({},{})", i, j));
            }
        }
    }
    report.check("the surface repeats along (kappa, 2-kappa)", bad.is_none(), bad.unwrap_or_default());

    let radius = 3 + n + k_max;
    let surface =
        InitialSurface::flat_from(Parity::Odd, (-radius, radius), (-radius, radius), |i, j| rv(q.x(i, j)));
    let mut f = TField::new(surface).expect("flat rational surface");

    let mut bad: Option<String> = None;
    for k in 0..=k_max {
        for i in -2..=2i64 {
            for j in -2..=2i64 {
                if (i + j + k).rem_euclid(2) != 1 {
                    continue;
                }
                let a = f.evolve_to(LatticePoint::new(i + kappa, j + 2 - kappa, k))?;
                let b = f.evolve_to(LatticePoint::new(i, j, k))?;
                if a != b && bad.is_none() {
                    bad = Some(format!("T({},{},{})", i, j, k));
                }
            }
        }
    }
    report.check("values repeat along (kappa, 2-kappa) at every level", bad.is_none(), bad.unwrap_or_default());

    let law_points = |k: i64| -> Vec<(i64, i64)> {
        let mut out = Vec::new();
        for i in -3..=3i64 {
            for j in -3..=3i64 {
                if (i + j + k).rem_euclid(2) == 1 {
                    out.push((i, j));
                }
            }
        }
        out
    };

    let mut bad: Option<String> = None;
    for k in 0..=k_max {
        for (i, j) in law_points(k) {
            let lhs = f.evolve_to(LatticePoint::new(i + n, j - n, k))?;
            let base = f.evolve_to(LatticePoint::new(i, j, k))?;
            let e = wrap.e(i, j);
            let nu_k = rat_pow(q.lambda(), 1 - k)? * rat_pow(q.mu(), k)?;
            let want = base.mul(&rv(rat_pow(&nu_k, e)?))?;
            if lhs != want && bad.is_none() {
                bad = Some(format!("T({},{},{})", i + n, j - n, k));
            }
        }
    }
    report.check(
        "the (n, -n) translate scales by (lambda^(1-k) mu^k)^e",
        bad.is_none(),
        bad.unwrap_or_default(),
    );

    let printed_holds = |f: &mut TField, k: i64| -> Result<Option<String>, EvolveError> {
        for (i, j) in law_points(k) {
            let lhs = f.evolve_to(LatticePoint::new(i + n, j - n, k))?;
            let base = f.evolve_to(LatticePoint::new(i, j, k))?;
            let e = wrap.e(i, j);
            let factor = if k.rem_euclid(2) == 0 { q.lambda() } else { q.mu() };
            let want = base.mul(&rv(rat_pow(factor, e)?))?;
            if lhs != want {
                return Ok(Some(format!("T({},{},{})", i + n, j - n, k)));
            }
        }
        Ok(None)
    };

    let mut bad: Option<String> = None;
    for k in 0..=1i64.min(k_max) {
        if let Some(cx) = printed_holds(&mut f, k)? {
            bad = bad.or(Some(cx));
        }
    }
    report.check("the alternating multiplier holds on levels 0 and 1", bad.is_none(), bad.unwrap_or_default());

    if q.lambda() == q.mu() {
        let mut bad: Option<String> = None;
        for k in 0..=k_max {
            if let Some(cx) = printed_holds(&mut f, k)? {
                bad = bad.or(Some(cx));
            }
        }
        report.check(
            "with lambda = mu the alternating multiplier extends to every level",
            bad.is_none(),
            bad.unwrap_or_default(),
        );
    } else {
        let mut found = false;
        for k in 2..=k_max {
            if printed_holds(&mut f, k)?.is_some() {
                found = true;
                break;
            }
        }
        report.check(
            "with lambda != mu the alternating multiplier breaks above level 1",
            found || k_max < 2,
            String::from("no counterexample in the window"),
        );
    }

    let mut p0 = Rat::one();
    for i in 0..n {
        p0 *= (q.x(i + 1, -i) * q.x(i - 1, -i)) / (q.x(i, -i + 1) * q.x(i, -i - 1));
    }
    report.check(
        format!("the even diagonal Y-product is lambda^{}", 2 * kappa - 2),
        p0 == rat_pow(q.lambda(), 2 * kappa - 2)?,
        format!("{}", p0),
    );

    let mut p1 = Rat::one();
    for i in 0..n {
        p1 *= (q.x(i + 1, -i + 1) * q.x(i + 1, -i - 1)) / (q.x(i + 2, -i) * q.x(i, -i));
    }
    report.check(
        format!("the odd diagonal Y-product is mu^{}", 2 - 2 * kappa),
        p1 == rat_pow(q.mu(), 2 - 2 * kappa)?,
        format!("{}", p1),
    );

    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Int;

    fn rfrac(num: i64, den: i64) -> Rat {
        Rat::new(Int::from(num), Int::from(den))
    }

    fn lcg(seed: &mut u64, m: u64) -> i64 {
        *seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        ((*seed >> 33) % m) as i64
    }

    fn rand_rats(seed: &mut u64, n: usize) -> Vec<Rat> {
        (0..n).map(|_| rfrac(1 + lcg(seed, 9), 1 + lcg(seed, 9))).collect()
    }

    #[test]
    fn canonical_representatives_cover_the_quotient() {
        let wrap = TorusWrap::new(3, 5);
        let mut classes = alloc::collections::BTreeSet::new();
        for i in -9..=9i64 {
            for j in -9..=9i64 {
                let (ri, rj) = wrap.canonical(i, j);
                // the representative is idempotent and class-equivalent
                assert_eq!(wrap.canonical(ri, rj), (ri, rj));
                assert_eq!(wrap.class(ri, rj), wrap.class(i, j));
                // translates share it
                assert_eq!(wrap.canonical(i + 3, j - 1), (ri, rj));
                assert_eq!(wrap.canonical(i + 5, j - 5), (ri, rj));
                classes.insert((ri, rj));
            }
        }
        assert_eq!(classes.len(), 10);
        for (ri, rj) in classes {
            assert!(rj <= 0 && -rj < 5 && (ri == -rj || ri == -rj + 1));
        }
    }

    #[test]
    fn slot_formulas_respect_the_sublattice() {
        let wrap = TorusWrap::new(3, 5);
        assert_eq!(p_slot(wrap, 0, 0, 0).unwrap(), 0);
        assert_eq!(p_slot(wrap, 1, -1, 0).unwrap(), 4);
        assert!(matches!(p_slot(wrap, 0, 0, 1), Err(EvolveError::ParityViolation(_))));
        assert!(matches!(q_slot(wrap, 1, 0, 0), Err(EvolveError::ParityViolation(_))));
    }

    #[test]
    fn window_values_are_doubly_periodic_and_read_off() {
        let mut seed = 5u64;
        for (kappa, n) in [(3i64, 5i64), (4, 6)] {
            let ps = rand_rats(&mut seed, n as usize);
            let qs = rand_rats(&mut seed, n as usize);
            let dp = check_double_periodicity(kappa, n, &ps, &qs, 4, n + 4).unwrap();
            assert!(dp.all_passed(), "kappa={} n={}\n{}", kappa, n, dp);
            let ro = check_read_off(kappa, n, &ps, &qs, 4, n + 4).unwrap();
            assert!(ro.all_passed(), "kappa={} n={}\n{}", kappa, n, ro);
        }
    }

    #[test]
    fn unfolding_laws_hold_with_distinct_factors() {
        let mut seed = 12u64;
        let q = QuasiPeriodicSurface::sampled(3, 5, rfrac(2, 1), rfrac(3, 1), |_, _| {
            rfrac(1 + lcg(&mut seed, 9), 1 + lcg(&mut seed, 9))
        })
        .unwrap();
        // frozen diagonal products for lambda = 2, mu = 3
        let mut p0 = Rat::one();
        let mut p1 = Rat::one();
        for i in 0..5 {
            p0 *= (q.x(i + 1, -i) * q.x(i - 1, -i)) / (q.x(i, -i + 1) * q.x(i, -i - 1));
            p1 *= (q.x(i + 1, -i + 1) * q.x(i + 1, -i - 1)) / (q.x(i + 2, -i) * q.x(i, -i));
        }
        assert_eq!(p0, rfrac(16, 1));
        assert_eq!(p1, rfrac(1, 81));
        let report = verify_unfolding(&q, 4).unwrap();
        assert!(report.all_passed(), "{}", report);
    }

    #[test]
    fn unfolding_alternating_law_for_equal_factors() {
        let mut seed = 77u64;
        let q = QuasiPeriodicSurface::sampled(3, 5, rfrac(2, 1), rfrac(2, 1), |_, _| {
            rfrac(1 + lcg(&mut seed, 9), 1 + lcg(&mut seed, 9))
        })
        .unwrap();
        let report = verify_unfolding(&q, 3).unwrap();
        assert!(report.all_passed(), "{}", report);
    }

    #[test]
    fn quasi_construction_validates_entries() {
        let one = rfrac(1, 1);
        let mut entries: Vec<((i64, i64), Rat)> = Vec::new();
        for i in 0..5i64 {
            entries.push(((i, -i), one.clone()));
            entries.push(((i + 1, -i), one.clone()));
        }
        assert!(QuasiPeriodicSurface::from_entries(3, 5, rfrac(2, 1), rfrac(3, 1), &entries).is_ok());
        let mut dup = entries.clone();
        dup[3].0 = dup[1].0;
        assert!(matches!(
            QuasiPeriodicSurface::from_entries(3, 5, rfrac(2, 1), rfrac(3, 1), &dup),
            Err(QuasiError::DuplicateClass(_))
        ));
        let short = &entries[..9];
        assert!(matches!(
            QuasiPeriodicSurface::from_entries(3, 5, rfrac(2, 1), rfrac(3, 1), short),
            Err(QuasiError::IncompleteCover)
        ));
        assert!(matches!(
            QuasiPeriodicSurface::from_entries(3, 5, Rat::zero(), rfrac(3, 1), &entries),
            Err(QuasiError::ZeroFactor)
        ));
    }
}
