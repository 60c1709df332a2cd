//! Looks inside the bisection-based fiber oracles.

use parti_dfo::pof::index_roundtrip;
use parti_dfo::problems::{
    dim2_intervals, dim2_oracle, heavy_dim2_g, heavy_dim2_g_inverse, make_problem, BisectionSpec,
    ProblemId, HEAVY_DIM2_BISECTION,
};

fn main() -> parti_dfo::error::Result<()> {
    let x = [-2.0, 2.0];
    let sol = dim2_oracle(&x, BisectionSpec::default())?;
    println!("dim2 at x = {x:?}");
    println!("  M_hat = {:.12}, t_hat = {:.12}", sol.m_hat, sol.t_hat);
    println!("  gamma(x) = {:?}", sol.y_hat);
    for m in [sol.m_hat - 1e-6, sol.m_hat + 1e-8, sol.m_hat + 0.5] {
        let i = dim2_intervals(&x, m);
        println!(
            "  I_x({m:.7}) = [{:.9}, {:.9}]{}",
            i.lo,
            i.hi,
            if i.empty { " (empty)" } else { "" }
        );
    }

    println!("heavy_dim2 block inverses");
    for (j, w) in [(1, 3.5), (5, -40.0), (10, 99.0)] {
        let z = heavy_dim2_g_inverse(j, w, HEAVY_DIM2_BISECTION)?;
        println!(
            "  g_{j}^-1({w}) = {z:.12}  (g_{j}(z) - w = {:.1e})",
            heavy_dim2_g(j, z) - w
        );
    }

    println!("roundtrip |chi(gamma(x)) - x|");
    for id in ProblemId::ALL {
        let p = make_problem(id);
        let b = p.index_box();
        let mid: Vec<f64> = b
            .lower
            .iter()
            .zip(&b.upper)
            .map(|(l, u)| l + 0.37 * (u - l))
            .collect();
        println!(
            "  {:<16} {:.1e}",
            id.as_str(),
            index_roundtrip(p.as_ref(), &mid)?
        );
    }
    Ok(())
}
