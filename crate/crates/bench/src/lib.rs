//! Fixtures shared by the criterion benchmarks.

use twistedchar::exactnum::rational::rational;
use twistedchar::{CycloMatrix, CycloNumber, CyclotomicField, TwistedPoint, Weight};

/// `size x size` matrix over `Q(zeta_conductor)` with dense, non-trivial entries.
pub fn dense_matrix(size: usize, conductor: u64) -> CycloMatrix {
    let field = CyclotomicField::new(conductor).expect("positive conductor");
    CycloMatrix::from_fn(&field, size, size, |r, c| {
        let k = (r * size + c) as i64;
        &field.root_of_unity(k) + &field.from_rational(rational(k % 7 - 3, 1 + (k % 5)))
    })
}

/// Distinct rationals `1/2, 2/3, 3/4, ...` embedded in `Q`.
pub fn rational_point(len: usize) -> Vec<CycloNumber> {
    let q = CyclotomicField::rationals();
    (1..=len as i64)
        .map(|k| q.from_rational(rational(k, k + 1)))
        .collect()
}

/// A non-vanishing GL_mn weight for the given shape.
pub fn factorizable_weight(m: usize, n: usize) -> Weight {
    let entries: Vec<i64> = (0..m * n)
        .map(|k| ((m * n - 1 - k) / n) as i64 * 2)
        .collect();
    Weight::new(entries).expect("decreasing")
}

pub fn twisted_point(m: usize, n: usize) -> TwistedPoint {
    let t: Vec<_> = (1..=m as i64).map(|k| rational(k + 1, k + 2)).collect();
    TwistedPoint::from_rationals(&t, n).expect("nonzero")
}
