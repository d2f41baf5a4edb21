//! Derivative-free minimization (Nelder-Mead with restarts).

use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy)]
pub struct NelderMeadOptions<T> {
    /// Initial simplex edge length, per coordinate.
    pub step: T,
    /// Stop when the spread of simplex values falls below this.
    pub ftol: T,
    /// Stop when the simplex diameter falls below this.
    pub xtol: T,
    pub max_evals: usize,
    /// Fresh simplices built around the incumbent after convergence.
    pub restarts: usize,
}

#[derive(Debug, Clone)]
pub struct Minimum<T> {
    pub x: Vec<T>,
    pub value: T,
    pub evals: usize,
}

fn run_once<T: Scalar, F: FnMut(&[T]) -> T>(
    f: &mut F,
    x0: &[T],
    step: T,
    opts: &NelderMeadOptions<T>,
    budget: usize,
) -> Minimum<T> {
    let n = x0.len();
    let half = T::lit(0.5);
    let two = T::lit(2.0);
    let mut simplex: Vec<(Vec<T>, T)> = Vec::with_capacity(n + 1);
    let mut evals = 0;
    let mut eval = |x: &[T], evals: &mut usize| {
        *evals += 1;
        f(x)
    };
    let v0 = eval(x0, &mut evals);
    simplex.push((x0.to_vec(), v0));
    for i in 0..n {
        let mut x = x0.to_vec();
        x[i] = x[i] + step;
        let v = eval(&x, &mut evals);
        simplex.push((x, v));
    }
    let cmp = |a: &(Vec<T>, T), b: &(Vec<T>, T)| a.1.partial_cmp(&b.1).unwrap_or(std::cmp::Ordering::Equal);
    while evals < budget {
        simplex.sort_by(cmp);
        let best = simplex[0].1;
        let worst = simplex[n].1;
        let spread = (worst - best).abs();
        let size = simplex[1..]
            .iter()
            .map(|(x, _)| {
                x.iter()
                    .zip(&simplex[0].0)
                    .fold(T::zero(), |m, (a, b)| m.max((*a - *b).abs()))
            })
            .fold(T::zero(), T::max);
        if spread <= opts.ftol && size <= opts.xtol {
            break;
        }
        if size <= opts.xtol * T::lit(1e-3) {
            break;
        }
        let mut centroid = vec![T::zero(); n];
        for (x, _) in &simplex[..n] {
            for (c, xi) in centroid.iter_mut().zip(x) {
                *c = *c + *xi;
            }
        }
        let nf = T::from_usize(n).unwrap();
        for c in centroid.iter_mut() {
            *c = *c / nf;
        }
        let along = |t: T| -> Vec<T> {
            centroid
                .iter()
                .zip(&simplex[n].0)
                .map(|(c, w)| *c + (*c - *w) * t)
                .collect()
        };
        let xr = along(T::one());
        let fr = eval(&xr, &mut evals);
        if fr < simplex[0].1 {
            let xe = along(two);
            let fe = eval(&xe, &mut evals);
            simplex[n] = if fe < fr { (xe, fe) } else { (xr, fr) };
        } else if fr < simplex[n - 1].1 {
            simplex[n] = (xr, fr);
        } else {
            let (xc, fc) = if fr < simplex[n].1 {
                let xc = along(half);
                let fc = eval(&xc, &mut evals);
                (xc, fc)
            } else {
                let xc = along(-half);
                let fc = eval(&xc, &mut evals);
                (xc, fc)
            };
            if fc < simplex[n].1.min(fr) {
                simplex[n] = (xc, fc);
            } else {
                let x_best = simplex[0].0.clone();
                for (x, v) in simplex[1..].iter_mut() {
                    for (xi, bi) in x.iter_mut().zip(&x_best) {
                        *xi = *bi + (*xi - *bi) * half;
                    }
                    *v = eval(x, &mut evals);
                }
            }
        }
    }
    simplex.sort_by(cmp);
    let (x, value) = simplex.swap_remove(0);
    Minimum { x, value, evals }
}

/// Minimizes `f` from `x0`, restarting around the incumbent with a simplex
/// scaled to the last improvement until restarts stop helping.
pub fn nelder_mead<T: Scalar, F: FnMut(&[T]) -> T>(mut f: F, x0: &[T], opts: &NelderMeadOptions<T>) -> Minimum<T> {
    let mut best = run_once(&mut f, x0, opts.step, opts, opts.max_evals);
    let mut used = best.evals;
    let mut step = opts.step;
    for _ in 0..opts.restarts {
        if used >= opts.max_evals {
            break;
        }
        let start = best.x.clone();
        let next = run_once(&mut f, &start, step, opts, opts.max_evals - used);
        used += next.evals;
        let moved = next
            .x
            .iter()
            .zip(&best.x)
            .fold(T::zero(), |m, (a, b)| m.max((*a - *b).abs()));
        let gained = best.value - next.value;
        if next.value < best.value {
            best = Minimum { evals: used, ..next };
        }
        if gained <= opts.ftol {
            step = step * T::lit(0.1);
            if step <= opts.xtol {
                break;
            }
        } else {
            step = (moved * T::lit(2.0)).max(opts.xtol * T::lit(10.0)).min(opts.step);
        }
    }
    best.evals = used;
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts() -> NelderMeadOptions<f64> {
        NelderMeadOptions {
            step: 0.5,
            ftol: 1e-14,
            xtol: 1e-10,
            max_evals: 20_000,
            restarts: 20,
        }
    }

    #[test]
    fn smooth_quadratic() {
        let m = nelder_mead(|x| (x[0] - 1.0).powi(2) + 3.0 * (x[1] + 2.0).powi(2), &[0.0, 0.0], &opts());
        assert!((m.x[0] - 1.0).abs() < 1e-6 && (m.x[1] + 2.0).abs() < 1e-6);
        assert!(m.value < 1e-12);
    }

    #[test]
    fn nonsmooth_max_of_affine() {
        // min over (x, y) of max(|x - 0.3|, |y + 0.7|, |x + y|/2) is attained at
        // x = 0.3, y = -0.7 where the third term is 0.2 < 0.
        let f = |x: &[f64]| (x[0] - 0.3).abs().max((x[1] + 0.7).abs()).max((x[0] + x[1]).abs() / 2.0 - 0.2);
        let m = nelder_mead(f, &[2.0, 2.0], &opts());
        assert!(m.value < 1e-8, "{}", m.value);
    }

    #[test]
    fn rosenbrock() {
        let f = |x: &[f64]| 100.0 * (x[1] - x[0] * x[0]).powi(2) + (1.0 - x[0]).powi(2);
        let m = nelder_mead(f, &[-1.2, 1.0], &opts());
        assert!(m.value < 1e-10, "{}", m.value);
    }
}
