#![allow(dead_code)]

use lineword::{Line3, Surd, Word};
use rand::Rng;

/// Positive element `(p + q√d)/r` with small coefficients.
pub fn random_surd<R: Rng>(rng: &mut R, d: u64) -> Surd {
    loop {
        let p: i64 = rng.gen_range(0..7);
        let q: i64 = rng.gen_range(0..5);
        let r: i64 = rng.gen_range(1..5);
        if p + q > 0 {
            return Surd::new(p, q, r, d).unwrap();
        }
    }
}

pub fn random_line<R: Rng>(rng: &mut R) -> Line3 {
    let d = [2u64, 3, 5][rng.gen_range(0..3)];
    let mut c = || random_surd(rng, d);
    Line3::new(c(), c(), c()).unwrap()
}

/// Equal except for adjacent transposed pairs (coincident crossings
/// written in the other order), and possibly a final letter whose partner
/// was cut off.
pub fn equal_up_to_ties(a: &Word, b: &Word) -> bool {
    let (a, b) = (a.symbols(), b.symbols());
    if a.len() != b.len() {
        return false;
    }
    let n = a.len();
    let mut i = 0;
    while i < n {
        if a[i] == b[i] || i + 1 == n {
            i += 1;
        } else if a[i] == b[i + 1] && a[i + 1] == b[i] {
            i += 2;
        } else {
            return false;
        }
    }
    true
}
