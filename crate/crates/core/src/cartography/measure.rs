//! Monte Carlo estimate of region and class measures on the unit sphere.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::region::{region_of_f64, RegionId};
use crate::taxonomy::{class_of_region, ClassId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeasureEstimate {
    pub samples: u64,
    pub region_counts: [u64; RegionId::COUNT],
    pub class_counts: [u64; ClassId::COUNT],
}

impl MeasureEstimate {
    fn empty() -> Self {
        MeasureEstimate {
            samples: 0,
            region_counts: [0; RegionId::COUNT],
            class_counts: [0; ClassId::COUNT],
        }
    }

    fn merge(mut self, other: &MeasureEstimate) -> Self {
        self.samples += other.samples;
        for (x, y) in self.region_counts.iter_mut().zip(other.region_counts) {
            *x += y;
        }
        for (x, y) in self.class_counts.iter_mut().zip(other.class_counts) {
            *x += y;
        }
        self
    }

    pub fn region_fraction(&self, region: RegionId) -> f64 {
        self.region_counts[region.index()] as f64 / self.samples as f64
    }

    pub fn class_fraction(&self, class: ClassId) -> f64 {
        self.class_counts[class.index()] as f64 / self.samples as f64
    }

    /// Binomial standard error `sqrt(p (1 - p) / n)`.
    pub fn std_error(&self, fraction: f64) -> f64 {
        (fraction * (1.0 - fraction) / self.samples as f64).sqrt()
    }
}

/// Uniform direction on the sphere as `(G_A, G_B, G_AB)`.
pub fn sample_direction<R: Rng + ?Sized>(rng: &mut R) -> [f64; 3] {
    loop {
        let g: [f64; 3] = [
            rng.sample(StandardNormal),
            rng.sample(StandardNormal),
            rng.sample(StandardNormal),
        ];
        let norm = (g[0] * g[0] + g[1] * g[1] + g[2] * g[2]).sqrt();
        if norm > 0.0 {
            return g.map(|x| x / norm);
        }
    }
}

/// Centered entries `(a, b, c, d)` of a direction (`G_0 = 0`).
pub fn entries_of_direction(g: [f64; 3]) -> [f64; 4] {
    let [ga, gb, gab] = g;
    [
        (ga + gb + gab) / 2.0,
        (ga - gb - gab) / 2.0,
        (-ga + gb - gab) / 2.0,
        (-ga - gb + gab) / 2.0,
    ]
}

fn run_worker(samples: u64, seed: u64, worker: u64) -> MeasureEstimate {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(worker);
    let mut out = MeasureEstimate::empty();
    while out.samples < samples {
        // exact float ties have measure zero; redraw them
        let Some(region) = region_of_f64(entries_of_direction(sample_direction(&mut rng))) else {
            continue;
        };
        out.samples += 1;
        out.region_counts[region.index()] += 1;
        out.class_counts[class_of_region(region).index()] += 1;
    }
    out
}

/// Single-stream estimate; equal to [`mc_region_fractions_parallel`] with one worker.
pub fn mc_region_fractions(samples: u64, seed: u64) -> MeasureEstimate {
    mc_region_fractions_parallel(samples, seed, 1)
}

/// Splits `samples` over `workers` threads. Worker `k` draws from stream `k`
/// of a generator seeded with `seed`; the result depends only on
/// `(samples, seed, workers)`.
pub fn mc_region_fractions_parallel(samples: u64, seed: u64, workers: usize) -> MeasureEstimate {
    let workers = workers.max(1) as u64;
    let share = |k: u64| samples / workers + u64::from(k < samples % workers);
    if workers == 1 {
        return run_worker(samples, seed, 0);
    }
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|k| scope.spawn(move || run_worker(share(k), seed, k)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .fold(MeasureEstimate::empty(), |acc, part| acc.merge(&part))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_for_seed_and_workers() {
        assert_eq!(mc_region_fractions(5000, 7), mc_region_fractions(5000, 7));
        assert_eq!(
            mc_region_fractions_parallel(5000, 7, 3),
            mc_region_fractions_parallel(5000, 7, 3)
        );
        assert_ne!(mc_region_fractions(5000, 7), mc_region_fractions(5000, 8));
    }

    #[test]
    fn counts_add_up() {
        let est = mc_region_fractions_parallel(1001, 3, 4);
        assert_eq!(est.samples, 1001);
        assert_eq!(est.region_counts.iter().sum::<u64>(), 1001);
        assert_eq!(est.class_counts.iter().sum::<u64>(), 1001);
    }

    #[test]
    fn single_sample() {
        let est = mc_region_fractions(1, 0);
        let ones = est.class_counts.iter().filter(|c| **c == 1).count();
        assert_eq!(ones, 1);
        assert_eq!(est.class_counts.iter().sum::<u64>(), 1);
    }

    #[test]
    fn directions_are_unit() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..100 {
            let g = sample_direction(&mut rng);
            let n = g.iter().map(|x| x * x).sum::<f64>();
            assert!((n - 1.0).abs() < 1e-12);
        }
    }
}
