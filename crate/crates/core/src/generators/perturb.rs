use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arrangement::{validate, Arrangement, ValidationMode};
use crate::geom::{Circle, CircleId};

use super::GeneratorError;

pub const MAX_PERTURB_ATTEMPTS: usize = 100;
const SHRINK_LOW: f64 = 0.97;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Perturbation {
    #[serde(skip)]
    pub arrangement: Arrangement,
    pub factors: Vec<f64>,
    /// Crossing pairs of the input that no longer cross.
    pub lost_edges: Vec<(CircleId, CircleId)>,
    pub attempts: usize,
}

/// Multiplies radius `k` by `factors[k]`.
pub fn shrink_radii(arr: &Arrangement, factors: &[f64]) -> Result<Arrangement, GeneratorError> {
    if factors.len() != arr.len() {
        return Err(GeneratorError::FactorCount { expected: arr.len(), got: factors.len() });
    }
    let circles = arr
        .circles()
        .iter()
        .zip(factors)
        .map(|(c, &f)| Circle::new(c.id.clone(), c.center, c.radius * f))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Arrangement::new(circles, arr.tol())?)
}

/// Shrinks every radius by an independent factor in `[0.97, 1)`, turning
/// right angles into acute ones. Draws are resampled when a pair becomes
/// tangent or newly nested.
pub fn perturb_acute(arr: &Arrangement, seed: u64) -> Result<Perturbation, GeneratorError> {
    if !validate(arr, ValidationMode::Orthogonal).ok {
        return Err(GeneratorError::NotOrthogonal);
    }
    let before = arr.relations();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 1..=MAX_PERTURB_ATTEMPTS {
        let factors: Vec<f64> = (0..arr.len()).map(|_| rng.gen_range(SHRINK_LOW..1.0)).collect();
        let candidate = shrink_radii(arr, &factors)?;
        if !validate(&candidate, ValidationMode::Acute).ok {
            continue;
        }
        let after = candidate.relations();
        let newly_nested = arr.pairs().any(|(i, j)| after.get(i, j).is_nested() && !before.get(i, j).is_nested());
        if newly_nested {
            continue;
        }
        let lost_edges = arr
            .pairs()
            .filter(|&(i, j)| before.crossing(i, j) && !after.crossing(i, j))
            .map(|(i, j)| (arr.circle(i).id.clone(), arr.circle(j).id.clone()))
            .collect();
        return Ok(Perturbation { arrangement: candidate, factors, lost_edges, attempts: attempt });
    }
    Err(GeneratorError::Perturbation { attempts: MAX_PERTURB_ATTEMPTS })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{make_nonnested_b, make_wheel};
    use crate::geom::{intersection_angle, Point, Tolerance};
    use std::f64::consts::{FRAC_PI_2, SQRT_2};

    #[test]
    fn unit_factors_keep_arrangement() {
        let arr = make_wheel(5, 1.0, 0.0).unwrap();
        let same = shrink_radii(&arr, &[1.0; 6]).unwrap();
        assert_eq!(same, arr);
        assert!(validate(&same, ValidationMode::Acute).ok);
    }

    #[test]
    fn shrinking_an_orthogonal_pair_makes_it_acute() {
        let arr = Arrangement::new(
            vec![
                Circle::new("a", Point::ORIGIN, 1.0).unwrap(),
                Circle::new("b", Point::new(SQRT_2, 0.0), 1.0).unwrap(),
            ],
            Tolerance::default(),
        )
        .unwrap();
        let shrunk = shrink_radii(&arr, &[0.98, 0.99]).unwrap();
        let angle = intersection_angle(shrunk.circle(0), shrunk.circle(1), shrunk.tol()).unwrap();
        assert!(angle < FRAC_PI_2);
    }

    #[test]
    fn deterministic_per_seed() {
        let arr = make_nonnested_b(2).unwrap();
        let a = perturb_acute(&arr, 7).unwrap();
        let b = perturb_acute(&arr, 7).unwrap();
        assert_eq!(a, b);
        assert!(validate(&a.arrangement, ValidationMode::Acute).ok);
    }

    #[test]
    fn factor_count_checked() {
        let arr = make_wheel(5, 1.0, 0.0).unwrap();
        assert!(matches!(shrink_radii(&arr, &[1.0]), Err(GeneratorError::FactorCount { .. })));
    }
}
