//! Seeded random fixtures. Every generator draws from a ChaCha8 stream in
//! a fixed, documented order, so a seed pins the fixture exactly on every
//! platform.

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tsys_core::lattice::{InitialSurface, Parity};
use tsys_core::pentagram::{pq_of_polygon, Mat3, TwistedPolygon};
use tsys_core::ring::{Int, Rat, RingValue};
use tsys_core::torus::QuasiPeriodicSurface;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

/// Numerator then denominator, each uniform in 1..=9.
pub fn positive_rat(rng: &mut ChaCha8Rng) -> Rat {
    let n = rng.gen_range(1..=9i64);
    let d = rng.gen_range(1..=9i64);
    rat(n, d)
}

/// Flat surface of positive rationals, filled row-major over the window.
pub fn rational_surface(rng: &mut ChaCha8Rng, parity: Parity, half: i64) -> InitialSurface {
    let mut s = InitialSurface::new();
    for i in -half..=half {
        for j in -half..=half {
            s.insert(i, j, parity.flat_height(i, j), RingValue::Rat(positive_rat(rng)));
        }
    }
    s
}

/// `n` draws for `p`, then `n` for `q`.
pub fn random_pq(rng: &mut ChaCha8Rng, n: usize) -> (Vec<Rat>, Vec<Rat>) {
    let ps: Vec<Rat> = (0..n).map(|_| positive_rat(rng)).collect();
    let qs: Vec<Rat> = (0..n).map(|_| positive_rat(rng)).collect();
    (ps, qs)
}

/// Coordinates on the locus where both products are separately conserved:
/// the last `q` is solved from `prod(p) * prod(q) = 1`.
pub fn conserved_pq(rng: &mut ChaCha8Rng, n: usize) -> (Vec<Rat>, Vec<Rat>) {
    assert!(n >= 2);
    let ps: Vec<Rat> = (0..n).map(|_| positive_rat(rng)).collect();
    let mut qs: Vec<Rat> = (0..n - 1).map(|_| positive_rat(rng)).collect();
    let mut prod = rat(1, 1);
    for x in ps.iter().chain(qs.iter()) {
        prod *= x;
    }
    qs.push(rat(1, 1) / prod);
    (ps, qs)
}

/// Rows `i = 1..=d` by columns `j = 1..=width`, row-major.
pub fn random_grid(rng: &mut ChaCha8Rng, d: i64, width: i64) -> Vec<Vec<Rat>> {
    (0..d).map(|_| (0..width).map(|_| positive_rat(rng)).collect()).collect()
}

/// Integer matrix with entries in -3..=3, redrawn until invertible.
pub fn random_monodromy(rng: &mut ChaCha8Rng) -> Mat3 {
    for _ in 0..1000 {
        let mut rows = [[0i64; 3]; 3];
        for row in &mut rows {
            for c in row.iter_mut() {
                *c = rng.gen_range(-3..=3i64);
            }
        }
        let m = Mat3::from_integers(rows);
        if !m.det().is_zero() {
            return m;
        }
    }
    unreachable!("random integer matrices are almost never all singular");
}

/// Twisted polygon with integer vertex coordinates in -9..=9, redrawn until
/// its invariants (and, when asked, those of its diagonal image) exist.
pub fn random_polygon(rng: &mut ChaCha8Rng, n: usize, kappa: i64, need_image: bool) -> TwistedPolygon {
    for _ in 0..1000 {
        let mut vertices = Vec::with_capacity(n);
        for _ in 0..n {
            let v = [
                Rat::from_integer(Int::from(rng.gen_range(-9..=9i64))),
                Rat::from_integer(Int::from(rng.gen_range(-9..=9i64))),
                Rat::from_integer(Int::from(rng.gen_range(-9..=9i64))),
            ];
            vertices.push(v);
        }
        if vertices.iter().any(|v| v.iter().all(|c| c.is_zero())) {
            continue;
        }
        let monodromy = random_monodromy(rng);
        let poly = match TwistedPolygon::new(vertices, monodromy) {
            Ok(p) => p,
            Err(_) => continue,
        };
        if pq_of_polygon(&poly, kappa).is_err() {
            continue;
        }
        if need_image {
            match poly.pentagram_image() {
                Ok(img) => {
                    if pq_of_polygon(&img, kappa).is_err() {
                        continue;
                    }
                }
                Err(_) => continue,
            }
        }
        return poly;
    }
    unreachable!("degenerate polygons have measure zero");
}

/// A permutation of `0..n` (Fisher-Yates from the stream).
pub fn shuffled_order(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    order
}

/// Quasi-periodic surface with random positive factors and fundamental
/// values: lambda, then mu, then the diagonal values in class order.
pub fn random_quasi(rng: &mut ChaCha8Rng, kappa: i64, n: i64) -> QuasiPeriodicSurface {
    let lambda = positive_rat(rng);
    let mu = positive_rat(rng);
    QuasiPeriodicSurface::sampled(kappa, n, lambda, mu, |_, _| positive_rat(rng))
        .expect("positive values cover the quotient")
}
