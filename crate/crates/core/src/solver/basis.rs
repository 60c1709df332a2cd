//! Random orthogonal positive bases for the poll step.

use nalgebra::DMatrix;
use rand::Rng;
use rand_distr::StandardNormal;

/// Haar-distributed orthogonal matrix.
///
/// Draws a matrix of independent standard normal entries and takes its QR
/// factorization, then flips each column of `Q` by the sign of the matching
/// diagonal entry of `R`. That fixes the factorization to the one with a
/// positive diagonal, whose `Q` is uniform on `O(n)`.
pub fn haar_orthogonal<R: Rng + ?Sized>(n: usize, rng: &mut R) -> DMatrix<f64> {
    let g = DMatrix::<f64>::from_fn(n, n, |_, _| rng.sample(StandardNormal));
    let qr = g.qr();
    let r = qr.r();
    let mut q = qr.q();
    for j in 0..n {
        if r[(j, j)] < 0.0 {
            q.column_mut(j).neg_mut();
        }
    }
    q
}

/// The maximal positive basis `[δq₁, …, δqₙ, −δq₁, …, −δqₙ]` built from a
/// Haar-random orthogonal frame.
pub fn random_orthogonal_positive_basis<R: Rng + ?Sized>(
    n: usize,
    delta: f64,
    rng: &mut R,
) -> Vec<Vec<f64>> {
    assert!(n >= 1, "dimension must be positive");
    assert!(delta > 0.0, "poll radius must be positive");
    let q = haar_orthogonal(n, rng);
    let mut dirs = Vec::with_capacity(2 * n);
    for j in 0..n {
        dirs.push(q.column(j).iter().map(|v| delta * v).collect());
    }
    for j in 0..n {
        dirs.push(q.column(j).iter().map(|v| -delta * v).collect());
    }
    dirs
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn norm(v: &[f64]) -> f64 {
        v.iter().map(|a| a * a).sum::<f64>().sqrt()
    }

    fn dot(a: &[f64], b: &[f64]) -> f64 {
        a.iter().zip(b).map(|(p, q)| p * q).sum()
    }

    #[test]
    fn one_dimensional_basis_is_plus_minus_delta() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..10 {
            let b = random_orthogonal_positive_basis(1, 0.5, &mut rng);
            let mut vals: Vec<f64> = b.iter().map(|d| d[0]).collect();
            vals.sort_by(f64::total_cmp);
            assert_eq!(vals, vec![-0.5, 0.5]);
        }
    }

    #[test]
    fn two_dimensional_structure() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let b = random_orthogonal_positive_basis(2, 1.0, &mut rng);
        assert_eq!(b.len(), 4);
        for d in &b {
            assert!((norm(d) - 1.0).abs() <= 1e-12);
        }
        assert_eq!(b[2], b[0].iter().map(|v| -v).collect::<Vec<_>>());
        assert_eq!(b[3], b[1].iter().map(|v| -v).collect::<Vec<_>>());
        assert!(dot(&b[0], &b[1]).abs() <= 1e-12);
    }

    #[test]
    fn three_dimensional_basis_positively_spans() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let b = random_orthogonal_positive_basis(3, 2.0, &mut rng);
        for _ in 0..100 {
            let u: Vec<f64> = (0..3).map(|_| rng.sample(StandardNormal)).collect();
            let best = b
                .iter()
                .map(|d| dot(&u, d))
                .fold(f64::NEG_INFINITY, f64::max);
            assert!(best > 0.0);
        }
    }

    #[test]
    fn frame_is_orthogonal_in_higher_dimension() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let q = haar_orthogonal(12, &mut rng);
        let qtq = q.transpose() * &q;
        let err = (qtq - DMatrix::<f64>::identity(12, 12)).amax();
        assert!(err < 1e-13, "{err}");
    }

    #[test]
    fn haar_first_column_is_unbiased() {
        // For a uniform frame the first column's first entry has mean 0 and
        // variance 1/n.
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let n = 4;
        let samples = 4000;
        let (mut s, mut s2) = (0.0, 0.0);
        for _ in 0..samples {
            let v = haar_orthogonal(n, &mut rng)[(0, 0)];
            s += v;
            s2 += v * v;
        }
        let mean = s / samples as f64;
        let var = s2 / samples as f64 - mean * mean;
        assert!(mean.abs() < 0.05, "mean {mean}");
        assert!((var - 0.25).abs() < 0.03, "var {var}");
    }
}
