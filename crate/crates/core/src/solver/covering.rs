//! Covering step: probe the point of the unit ball around the incumbent that
//! lies farthest from everything evaluated so far.
//!
//! The exact argmax over the ball is replaced by the best of a finite set of
//! uniformly sampled candidates.

use rand::Rng;
use rand_distr::StandardNormal;

use super::trace::History;

/// A point drawn uniformly in the closed Euclidean ball of radius `radius`
/// centred at the origin.
pub fn sample_in_ball<R: Rng + ?Sized>(n: usize, radius: f64, rng: &mut R) -> Vec<f64> {
    loop {
        let g: Vec<f64> = (0..n).map(|_| rng.sample(StandardNormal)).collect();
        let norm = g.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm > 0.0 {
            let u: f64 = rng.random();
            let scale = radius * u.powf(1.0 / n as f64) / norm;
            return g.into_iter().map(|v| v * scale).collect();
        }
    }
}

/// `x + d*` where `d*` is the direction in `directions` that puts the trial
/// point farthest from the history. Ties go to the first direction.
pub fn covering_candidate_from(x: &[f64], history: &History, directions: &[Vec<f64>]) -> Vec<f64> {
    assert!(
        !directions.is_empty(),
        "covering needs at least one direction"
    );
    let mut best: Option<(f64, Vec<f64>)> = None;
    for d in directions {
        let cand: Vec<f64> = x.iter().zip(d).map(|(a, b)| a + b).collect();
        let dist = history.squared_distance(&cand);
        if best.as_ref().is_none_or(|(bd, _)| dist > *bd) {
            best = Some((dist, cand));
        }
    }
    best.expect("non-empty").1
}

/// Covering candidate from `samples` uniform draws in the ball of radius
/// `radius` around `x`.
pub fn covering_candidate<R: Rng + ?Sized>(
    x: &[f64],
    history: &History,
    radius: f64,
    rng: &mut R,
    samples: usize,
) -> Vec<f64> {
    assert!(samples >= 1);
    let dirs: Vec<Vec<f64>> = (0..samples)
        .map(|_| sample_in_ball(x.len(), radius, rng))
        .collect();
    covering_candidate_from(x, history, &dirs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn hist(points: &[&[f64]]) -> History {
        let mut h = History::new();
        for p in points {
            h.push(p.to_vec());
        }
        h
    }

    #[test]
    fn picks_the_farther_of_two() {
        let h = hist(&[&[0.0]]);
        assert_eq!(
            covering_candidate_from(&[0.0], &h, &[vec![0.9], vec![-0.4]]),
            vec![0.9]
        );
    }

    #[test]
    fn moves_away_from_history() {
        let h = hist(&[&[-1.0]]);
        assert_eq!(
            covering_candidate_from(&[0.0], &h, &[vec![1.0], vec![-1.0]]),
            vec![1.0]
        );
    }

    #[test]
    fn two_point_history() {
        let h = hist(&[&[0.0, 0.0], &[1.0, 0.0]]);
        let c = covering_candidate_from(&[0.0, 0.0], &h, &[vec![0.0, 1.0], vec![1.0, 0.0]]);
        assert_eq!(c, vec![0.0, 1.0]);
    }

    #[test]
    fn ties_go_to_first() {
        let h = hist(&[&[0.0]]);
        assert_eq!(
            covering_candidate_from(&[0.0], &h, &[vec![-0.5], vec![0.5]]),
            vec![-0.5]
        );
    }

    #[test]
    fn ball_samples_stay_inside_and_fill_it() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let n = 3;
        let mut inner = 0;
        let total = 4000;
        for _ in 0..total {
            let p = sample_in_ball(n, 2.0, &mut rng);
            let r = p.iter().map(|v| v * v).sum::<f64>().sqrt();
            assert!(r <= 2.0);
            if r <= 1.0 {
                inner += 1;
            }
        }
        // P(r <= 1) = (1/2)^3 for a uniform ball of radius 2
        let frac = inner as f64 / total as f64;
        assert!((frac - 0.125).abs() < 0.02, "{frac}");
    }

    #[test]
    fn sampled_candidate_beats_every_other_sample() {
        let h = hist(&[&[0.0, 0.0], &[0.3, 0.1], &[-0.2, 0.5]]);
        let x = [0.1, 0.1];
        let mut a = ChaCha8Rng::seed_from_u64(9);
        let mut b = ChaCha8Rng::seed_from_u64(9);
        let c = covering_candidate(&x, &h, 1.0, &mut a, 16);
        let best = h.squared_distance(&c);
        for _ in 0..16 {
            let d = sample_in_ball(2, 1.0, &mut b);
            let p: Vec<f64> = x.iter().zip(&d).map(|(u, v)| u + v).collect();
            assert!(h.squared_distance(&p) <= best);
        }
    }
}
