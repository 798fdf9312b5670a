//! Prey archive: the best-so-far solutions, ranked nest-material, living-ant,
//! dead-ant and alarm odor.

use crate::scalar::Scalar;

/// Maximum number of prey odors tracked.
pub const MAX_PREY: usize = 4;

/// One candidate solution.
#[derive(Debug, Clone, PartialEq)]
pub struct Ant<T> {
    pub position: Vec<T>,
    /// Objective value (minimized).
    pub fitness: T,
}

impl<T> Ant<T> {
    pub fn new(position: Vec<T>, fitness: T) -> Self {
        Self { position, fitness }
    }
}

/// Raw prey-count schedule `round(4 - 4 (t-1) / T_max)`.
///
/// Reaches zero over the final stretch of a run; see [`prey_count`].
pub fn raw_prey_count(t: usize, max_iters: usize) -> i64 {
    let frac = (t as f64 - 1.0) / max_iters as f64;
    (MAX_PREY as f64 - MAX_PREY as f64 * frac).round() as i64
}

/// Number of active prey at iteration `t` (1-based), floored at one.
pub fn prey_count(t: usize, max_iters: usize) -> usize {
    raw_prey_count(t, max_iters).clamp(1, MAX_PREY as i64) as usize
}

/// Ranked best-so-far solutions.
#[derive(Debug, Clone, PartialEq)]
pub struct PreyArchive<T> {
    entries: Vec<Ant<T>>,
    active: usize,
}

impl<T: Scalar> PreyArchive<T> {
    /// Builds the archive from an evaluated population with all four odors active.
    pub fn from_population(population: &[Ant<T>]) -> Self {
        let mut archive = Self {
            entries: Vec::with_capacity(MAX_PREY),
            active: MAX_PREY,
        };
        archive.merge(population);
        archive.active = archive.active.min(archive.entries.len()).max(1);
        archive
    }

    /// Merges candidates into the best-so-far pool.
    ///
    /// Sorting is stable, so on equal fitness incumbents outrank newcomers and
    /// earlier population indices outrank later ones. Exact duplicate positions
    /// occupy one slot.
    pub fn merge(&mut self, candidates: &[Ant<T>]) {
        let mut pool: Vec<&Ant<T>> = self.entries.iter().collect();
        pool.extend(candidates.iter());
        pool.sort_by(|a, b| a.fitness.partial_cmp(&b.fitness).unwrap_or(std::cmp::Ordering::Equal));
        let mut next: Vec<Ant<T>> = Vec::with_capacity(MAX_PREY);
        for ant in pool {
            if next.len() == MAX_PREY {
                break;
            }
            if next.iter().all(|kept| kept.position != ant.position) {
                next.push(ant.clone());
            }
        }
        self.entries = next;
    }

    /// Merges the population and sets the active prey count. The global best
    /// always stays at slot 0, so truncation never discards it.
    pub fn update(&mut self, population: &[Ant<T>], active: usize) {
        self.merge(population);
        self.set_active(active);
    }

    pub fn set_active(&mut self, active: usize) {
        self.active = active.clamp(1, MAX_PREY).min(self.entries.len().max(1));
    }

    pub fn active_count(&self) -> usize {
        self.active
    }

    /// Active prey, best first.
    pub fn active(&self) -> &[Ant<T>] {
        &self.entries[..self.active.min(self.entries.len())]
    }

    /// Every retained entry (up to four), best first.
    pub fn entries(&self) -> &[Ant<T>] {
        &self.entries
    }

    /// Nest-material odor: the global best so far.
    pub fn best(&self) -> &Ant<T> {
        &self.entries[0]
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}
