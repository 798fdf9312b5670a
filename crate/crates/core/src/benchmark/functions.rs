//! Classic box-constrained test functions with known optima.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::optimizer::{BoundaryPolicy, SearchSpace};
use crate::scalar::Scalar;

/// Location of the Schwefel minimum, `argmax x sin(sqrt(x))` on `[0, 500]`.
pub const SCHWEFEL_OPTIMUM: f64 = 420.968_746_359_982_1;
/// Per-dimension offset that makes the Schwefel minimum zero.
pub const SCHWEFEL_OFFSET: f64 = 418.982_887_272_433_7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FunctionKind {
    Sphere,
    Rosenbrock,
    Rastrigin,
    Ackley,
    Griewank,
    Schwefel,
}

impl FunctionKind {
    pub const ALL: [FunctionKind; 6] = [
        FunctionKind::Sphere,
        FunctionKind::Rosenbrock,
        FunctionKind::Rastrigin,
        FunctionKind::Ackley,
        FunctionKind::Griewank,
        FunctionKind::Schwefel,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FunctionKind::Sphere => "sphere",
            FunctionKind::Rosenbrock => "rosenbrock",
            FunctionKind::Rastrigin => "rastrigin",
            FunctionKind::Ackley => "ackley",
            FunctionKind::Griewank => "griewank",
            FunctionKind::Schwefel => "schwefel",
        }
    }

    /// Conventional symmetric search interval.
    pub fn bounds(self) -> (f64, f64) {
        match self {
            FunctionKind::Sphere => (-100.0, 100.0),
            FunctionKind::Rosenbrock => (-30.0, 30.0),
            FunctionKind::Rastrigin => (-5.12, 5.12),
            FunctionKind::Ackley => (-32.0, 32.0),
            FunctionKind::Griewank => (-600.0, 600.0),
            FunctionKind::Schwefel => (-500.0, 500.0),
        }
    }

    pub fn optimum_coordinate(self) -> f64 {
        match self {
            FunctionKind::Rosenbrock => 1.0,
            FunctionKind::Schwefel => SCHWEFEL_OPTIMUM,
            _ => 0.0,
        }
    }

    pub fn eval<T: Scalar>(self, x: &[T]) -> T {
        match self {
            FunctionKind::Sphere => sphere(x),
            FunctionKind::Rosenbrock => rosenbrock(x),
            FunctionKind::Rastrigin => rastrigin(x),
            FunctionKind::Ackley => ackley(x),
            FunctionKind::Griewank => griewank(x),
            FunctionKind::Schwefel => schwefel(x),
        }
    }
}

impl fmt::Display for FunctionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FunctionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FunctionKind::ALL
            .into_iter()
            .find(|k| k.name() == s.trim().to_ascii_lowercase())
            .ok_or_else(|| Error::UnknownBenchmark(s.to_string()))
    }
}

/// A test function instantiated at a dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchmarkFunction<T> {
    pub kind: FunctionKind,
    pub space: SearchSpace<T>,
    pub known_optimum: T,
    pub optimum_position: Option<Vec<T>>,
}

impl<T: Scalar> BenchmarkFunction<T> {
    pub fn new(kind: FunctionKind, dim: usize) -> Result<Self> {
        let (lo, hi) = kind.bounds();
        Ok(Self {
            kind,
            space: SearchSpace::uniform(dim, T::lit(lo), T::lit(hi), BoundaryPolicy::Clamp)?,
            known_optimum: T::zero(),
            optimum_position: Some(vec![T::lit(kind.optimum_coordinate()); dim]),
        })
    }

    pub fn name(&self) -> &'static str {
        self.kind.name()
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn eval(&self, x: &[T]) -> T {
        self.kind.eval(x)
    }
}

/// Evaluates a function by name.
pub fn eval_benchmark<T: Scalar>(name: &str, x: &[T]) -> Result<T> {
    Ok(name.parse::<FunctionKind>()?.eval(x))
}

pub fn sphere<T: Scalar>(x: &[T]) -> T {
    x.iter().map(|&v| v * v).sum()
}

pub fn rosenbrock<T: Scalar>(x: &[T]) -> T {
    let hundred = T::lit(100.0);
    x.windows(2)
        .map(|w| {
            let a = w[1] - w[0] * w[0];
            let b = T::one() - w[0];
            hundred * a * a + b * b
        })
        .sum()
}

pub fn rastrigin<T: Scalar>(x: &[T]) -> T {
    let ten = T::lit(10.0);
    x.iter().map(|&v| v * v - ten * (T::TAU() * v).cos() + ten).sum()
}

pub fn ackley<T: Scalar>(x: &[T]) -> T {
    let n = T::from_count(x.len());
    let sq: T = x.iter().map(|&v| v * v).sum();
    let cs: T = x.iter().map(|&v| (T::TAU() * v).cos()).sum();
    let twenty = T::lit(20.0);
    -twenty * (T::lit(-0.2) * (sq / n).sqrt()).exp() - (cs / n).exp() + twenty + T::E()
}

pub fn griewank<T: Scalar>(x: &[T]) -> T {
    let sum: T = x.iter().map(|&v| v * v).sum::<T>() / T::lit(4000.0);
    let prod = x
        .iter()
        .enumerate()
        .fold(T::one(), |acc, (i, &v)| acc * (v / T::from_count(i + 1).sqrt()).cos());
    sum - prod + T::one()
}

pub fn schwefel<T: Scalar>(x: &[T]) -> T {
    let offset = T::lit(SCHWEFEL_OFFSET) * T::from_count(x.len());
    offset - x.iter().map(|&v| v * v.abs().sqrt().sin()).sum::<T>()
}
