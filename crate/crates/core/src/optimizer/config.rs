use crate::error::{Error, Result};

/// Tunable parameters of one optimizer run.
#[derive(Debug, Clone, PartialEq)]
pub struct OptimizerConfig {
    /// Number of ants (N). At least four, one per odor slot.
    pub population: usize,
    /// Iteration budget (T_max).
    pub max_iters: usize,
    /// Average recruits per prey at the first iteration (num_ini).
    pub recruit_init: f64,
    /// Attack coefficient `a`.
    pub attack_coeff: f64,
    /// Consecutive iterations with an unchanged best position before the ant
    /// bridge is built.
    pub stagnation_threshold: usize,
    pub seed: u64,
}

impl OptimizerConfig {
    /// Defaults: `recruit_init = N/2`, `a = 2`, stagnation threshold 5, seed 0.
    pub fn new(population: usize, max_iters: usize) -> Self {
        Self {
            population,
            max_iters,
            recruit_init: population as f64 / 2.0,
            attack_coeff: 2.0,
            stagnation_threshold: 5,
            seed: 0,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_recruit_init(mut self, recruit_init: f64) -> Self {
        self.recruit_init = recruit_init;
        self
    }

    pub fn with_attack_coeff(mut self, a: f64) -> Self {
        self.attack_coeff = a;
        self
    }

    pub fn with_stagnation_threshold(mut self, iters: usize) -> Self {
        self.stagnation_threshold = iters;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.population < 4 {
            return Err(Error::InvalidConfig(format!(
                "population must be at least 4 (one ant per prey odor), got {}",
                self.population
            )));
        }
        if self.max_iters == 0 {
            return Err(Error::InvalidConfig("max_iters must be positive".into()));
        }
        if !(self.recruit_init > 0.0 && self.recruit_init <= self.population as f64) {
            return Err(Error::InvalidConfig(format!(
                "recruit_init must lie in (0, {}], got {}",
                self.population, self.recruit_init
            )));
        }
        if !(self.attack_coeff > 0.0 && self.attack_coeff.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "attack_coeff must be positive, got {}",
                self.attack_coeff
            )));
        }
        if self.stagnation_threshold == 0 {
            return Err(Error::InvalidConfig("stagnation_threshold must be at least 1".into()));
        }
        Ok(())
    }
}

impl Default for OptimizerConfig {
    /// 50 ants, 100 iterations.
    fn default() -> Self {
        Self::new(50, 100)
    }
}
