use crate::error::{Error, Result};
use crate::optimizer::{RunOutcome, SearchSpace};
use crate::rng::RandomSource;
use crate::scalar::Scalar;

/// Uniform sampling baseline. `history[i]` is the best after `i + 1` samples.
pub fn random_search_run<T, F>(
    objective: &F,
    space: &SearchSpace<T>,
    budget: usize,
    rng: &mut RandomSource,
) -> Result<RunOutcome<T>>
where
    T: Scalar,
    F: Fn(&[T]) -> T + ?Sized,
{
    if budget == 0 {
        return Err(Error::InvalidConfig("random search budget must be at least 1".into()));
    }
    let mut best_position = Vec::new();
    let mut best = T::infinity();
    let mut history = Vec::with_capacity(budget);
    for i in 0..budget {
        let x = space.sample(rng);
        let f = objective(&x);
        if !f.is_finite() {
            return Err(Error::NonFiniteObjective {
                iteration: i,
                value: f.to_f64_lossy(),
            });
        }
        if f < best {
            best = f;
            best_position = x;
        }
        history.push(best);
    }
    Ok(RunOutcome {
        best_position,
        best_fitness: best,
        initial_best: history[0],
        history,
        evaluations: budget,
    })
}
