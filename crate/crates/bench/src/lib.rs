//! Fixed inputs shared by the benchmarks.

use orthocircle::arrangement::Arrangement;
use orthocircle::generators::{augment_triangles, make_b, make_nonnested_b, make_random_nonnested};

pub fn stack(x: usize, a: usize) -> Arrangement {
    make_b(x, a).expect("valid stack parameters")
}

pub fn nonnested(x: usize) -> Arrangement {
    make_nonnested_b(x).expect("valid wheel count")
}

pub fn random(n: usize, seed: u64) -> Arrangement {
    make_random_nonnested(n, seed).expect("generation succeeds")
}

pub fn augmented(x: usize, a: usize) -> Arrangement {
    augment_triangles(&stack(x, a)).expect("stacks augment")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_build() {
        assert_eq!(stack(2, 5).len(), 12);
        assert_eq!(nonnested(2).len(), 11);
        assert_eq!(random(30, 1).len(), 30);
        assert!(augmented(1, 5).len() > 6);
    }
}
