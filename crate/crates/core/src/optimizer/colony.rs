use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::rng::RandomSource;
use crate::scalar::Scalar;

use super::archive::{prey_count, Ant, PreyArchive};
use super::config::OptimizerConfig;
use super::operators::{
    ant_bridge, attack_target, bridge_candidate, pick_companions, scatter_position, step_attack, step_follow,
    worse_half_indices,
};
use super::recruit::{avg_recruits, recruit, RecruitMap};
use super::space::SearchSpace;

/// Bookkeeping of the most recent iteration.
#[derive(Debug, Clone, PartialEq)]
pub struct IterationState<T> {
    /// Current iteration, 1-based; 0 before the first step.
    pub t: usize,
    pub num_aver: f64,
    pub recruit_map: RecruitMap,
    pub stagnation_counter: usize,
    /// Bridge position, when one was built this iteration.
    pub bridge_position: Option<Vec<T>>,
}

/// Summary handed to observers after every iteration.
#[derive(Debug, Clone, PartialEq)]
pub struct IterationReport<T> {
    pub t: usize,
    pub best_fitness: T,
    pub active_prey: usize,
    pub num_aver: f64,
    pub bridge_built: bool,
    /// Objective evaluations so far, initialization included.
    pub evaluations: usize,
}

/// Result of a complete run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunOutcome<T> {
    pub best_position: Vec<T>,
    pub best_fitness: T,
    /// Best fitness after initialization.
    pub initial_best: T,
    /// Best-so-far fitness after each iteration `1..=T_max`.
    pub history: Vec<T>,
    pub evaluations: usize,
}

/// Population, prey archive and iteration state of one optimizer run.
///
/// Objective evaluations inside one batch may run in parallel; results are
/// committed in ant-index order and consume no random draws, so the trajectory
/// depends only on the seed.
pub struct Colony<'a, T, F: ?Sized> {
    objective: &'a F,
    space: &'a SearchSpace<T>,
    config: &'a OptimizerConfig,
    population: Vec<Ant<T>>,
    archive: PreyArchive<T>,
    state: IterationState<T>,
    evaluations: usize,
    last_best: Vec<T>,
}

impl<'a, T, F> Colony<'a, T, F>
where
    T: Scalar,
    F: Fn(&[T]) -> T + Sync + ?Sized,
{
    /// Random initial population. `seeds` (repaired into the box) take the
    /// first slots; the rest are drawn uniformly, one coordinate at a time.
    pub fn initialize(
        objective: &'a F,
        space: &'a SearchSpace<T>,
        config: &'a OptimizerConfig,
        rng: &mut RandomSource,
        seeds: &[Vec<T>],
    ) -> Result<Self> {
        config.validate()?;
        if seeds.len() > config.population {
            return Err(Error::InvalidConfig(format!(
                "{} seed individuals exceed population {}",
                seeds.len(),
                config.population
            )));
        }
        let mut positions = Vec::with_capacity(config.population);
        for seed in seeds {
            if seed.len() != space.dim() {
                return Err(Error::LengthMismatch {
                    expected: space.dim(),
                    actual: seed.len(),
                });
            }
            let mut x = seed.clone();
            space.repair(&mut x);
            positions.push(x);
        }
        while positions.len() < config.population {
            positions.push(space.sample(rng));
        }

        let mut colony = Self {
            objective,
            space,
            config,
            population: Vec::new(),
            archive: PreyArchive::from_population(&[]),
            state: IterationState {
                t: 0,
                num_aver: config.recruit_init,
                recruit_map: Vec::new(),
                stagnation_counter: 0,
                bridge_position: None,
            },
            evaluations: 0,
            last_best: Vec::new(),
        };
        colony.population = colony.evaluate(positions, 0)?;
        colony.archive = PreyArchive::from_population(&colony.population);
        colony.last_best = colony.archive.best().position.clone();
        Ok(colony)
    }

    fn evaluate(&mut self, positions: Vec<Vec<T>>, iteration: usize) -> Result<Vec<Ant<T>>> {
        let objective = self.objective;
        let ants: Vec<Ant<T>> = positions
            .into_par_iter()
            .map(|x| {
                let f = objective(&x);
                Ant::new(x, f)
            })
            .collect();
        self.evaluations += ants.len();
        if let Some(bad) = ants.iter().find(|a| !a.fitness.is_finite()) {
            return Err(Error::NonFiniteObjective {
                iteration,
                value: bad.fitness.to_f64_lossy(),
            });
        }
        Ok(ants)
    }

    /// Advances one iteration. `t` is 1-based and must not exceed `T_max`.
    pub fn step(&mut self, t: usize, rng: &mut RandomSource) -> Result<IterationReport<T>> {
        let n = self.config.population;
        let attack = T::lit(self.config.attack_coeff);

        self.archive.set_active(prey_count(t, self.config.max_iters));
        let num_aver = avg_recruits(t, self.config);
        let recruit_map = recruit(self.archive.active_count(), self.config, t, rng);

        let mut recruiters: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (prey, list) in recruit_map.iter().enumerate() {
            for &ant in list {
                recruiters[ant].push(prey);
            }
        }

        // On wrapped spaces, differences are taken along the short arc.
        let preys = self.archive.active();
        let old = &self.population;
        let mut moved = Vec::with_capacity(n);
        for (i, prey_ids) in recruiters.iter().enumerate() {
            let here = &old[i].position;
            let next = if prey_ids.is_empty() {
                let (a, b) = pick_companions(i, n, rng);
                let second = self.space.unwrap_near(&old[b].position, &old[a].position);
                step_follow(&old[a].position, &second, self.space, rng)
            } else {
                let scatters: Vec<Vec<T>> = prey_ids
                    .iter()
                    .map(|&j| {
                        let prey = self.space.unwrap_near(&preys[j].position, here);
                        let s = scatter_position(&prey, here, self.space, rng);
                        self.space.unwrap_near(&s, here)
                    })
                    .collect();
                let target = attack_target(&scatters)?;
                step_attack(here, &target, attack, self.space, rng)
            };
            moved.push(next);
        }

        self.population = self.evaluate(moved, t)?;
        self.archive.merge(&self.population);

        if self.archive.best().position == self.last_best {
            self.state.stagnation_counter += 1;
        } else {
            self.state.stagnation_counter = 0;
        }

        let mut bridge_position = None;
        if self.state.stagnation_counter >= self.config.stagnation_threshold {
            bridge_position = Some(self.build_bridge(t, rng)?);
            self.state.stagnation_counter = 0;
        }
        self.last_best = self.archive.best().position.clone();

        self.state.t = t;
        self.state.num_aver = num_aver;
        self.state.recruit_map = recruit_map;
        let bridge_built = bridge_position.is_some();
        self.state.bridge_position = bridge_position;

        Ok(IterationReport {
            t,
            best_fitness: self.archive.best().fitness,
            active_prey: self.archive.active_count(),
            num_aver,
            bridge_built,
            evaluations: self.evaluations,
        })
    }

    fn build_bridge(&mut self, t: usize, rng: &mut RandomSource) -> Result<Vec<T>> {
        let worse = worse_half_indices(&self.population);
        let anchor = self.archive.best().position.clone();
        let charted: Vec<Ant<T>> = worse
            .iter()
            .map(|&i| Ant {
                position: self.space.unwrap_near(&self.population[i].position, &anchor),
                fitness: self.population[i].fitness,
            })
            .collect();
        let members: Vec<&Ant<T>> = charted.iter().collect();
        let bridge = ant_bridge(&members, self.archive.best().fitness)?;
        let candidates: Vec<Vec<T>> = worse
            .iter()
            .map(|&i| bridge_candidate(&self.population[i].position, &bridge, self.space, rng))
            .collect();
        let evaluated = self.evaluate(candidates, t)?;
        for (&i, cand) in worse.iter().zip(evaluated) {
            if cand.fitness < self.population[i].fitness {
                self.population[i] = cand;
            }
        }
        self.archive.merge(&self.population);
        Ok(bridge)
    }

    pub fn population(&self) -> &[Ant<T>] {
        &self.population
    }

    pub fn archive(&self) -> &PreyArchive<T> {
        &self.archive
    }

    pub fn state(&self) -> &IterationState<T> {
        &self.state
    }

    pub fn evaluations(&self) -> usize {
        self.evaluations
    }
}

/// Minimizes `objective` over `space` with a generator seeded from `config.seed`.
pub fn minimize<T, F>(objective: &F, space: &SearchSpace<T>, config: &OptimizerConfig) -> Result<RunOutcome<T>>
where
    T: Scalar,
    F: Fn(&[T]) -> T + Sync + ?Sized,
{
    let mut rng = RandomSource::new(config.seed);
    run(objective, space, config, &mut rng)
}

/// Runs the optimizer to `T_max` iterations.
pub fn run<T, F>(
    objective: &F,
    space: &SearchSpace<T>,
    config: &OptimizerConfig,
    rng: &mut RandomSource,
) -> Result<RunOutcome<T>>
where
    T: Scalar,
    F: Fn(&[T]) -> T + Sync + ?Sized,
{
    run_with(objective, space, config, rng, &[], |_| {})
}

/// Like [`run`], with seed individuals in the initial population and a
/// per-iteration observer.
pub fn run_with<T, F, O>(
    objective: &F,
    space: &SearchSpace<T>,
    config: &OptimizerConfig,
    rng: &mut RandomSource,
    seeds: &[Vec<T>],
    mut observer: O,
) -> Result<RunOutcome<T>>
where
    T: Scalar,
    F: Fn(&[T]) -> T + Sync + ?Sized,
    O: FnMut(&IterationReport<T>),
{
    let mut colony = Colony::initialize(objective, space, config, rng, seeds)?;
    let initial_best = colony.archive().best().fitness;
    let mut history = Vec::with_capacity(config.max_iters);
    for t in 1..=config.max_iters {
        let report = colony.step(t, rng)?;
        history.push(report.best_fitness);
        observer(&report);
    }
    let best = colony.archive().best();
    Ok(RunOutcome {
        best_position: best.position.clone(),
        best_fitness: best.fitness,
        initial_best,
        history,
        evaluations: colony.evaluations(),
    })
}
