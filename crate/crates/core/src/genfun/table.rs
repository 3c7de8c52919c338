//! Printed `G_{n,k}` values for `n ∈ {6, 8, 9}` and the `c · q^s · A_m(q)^e`
//! shapes used to display them.

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::poly::{eulerian, factorial, LaurentPoly};

/// `coeff · q^shift · A_eulerian(q)^power`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Shape {
    #[serde(serialize_with = "crate::poly::coeff::serialize_bigint")]
    pub coeff: BigInt,
    pub shift: i64,
    pub eulerian: usize,
    pub power: u32,
}

impl Shape {
    pub fn new(coeff: impl Into<BigInt>, shift: i64, eulerian: usize, power: u32) -> Self {
        Shape {
            coeff: coeff.into(),
            shift,
            eulerian,
            power,
        }
    }

    pub fn expand(&self) -> LaurentPoly {
        let a = eulerian(self.eulerian);
        let mut p = LaurentPoly::one();
        for _ in 0..self.power {
            p = &p * &a;
        }
        p.scale(&self.coeff).shift(self.shift)
    }

    /// Value at `q = 1`, i.e. `coeff · (eulerian!)^power`.
    pub fn eval_at_one(&self) -> BigInt {
        &self.coeff * num_traits::pow(factorial(self.eulerian), self.power as usize)
    }

    fn is_constant(&self) -> bool {
        self.power == 0 || self.eulerian <= 1
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coeff)?;
        if self.shift != 0 {
            write!(f, "·q^{}", self.shift)?;
        }
        if self.is_constant() {
            return Ok(());
        }
        write!(f, "·A_{}(q)", self.eulerian)?;
        if self.power > 1 {
            write!(f, "^{}", self.power)?;
        }
        Ok(())
    }
}

/// Finds a shape `c · q^s · A_m(q)^e` equal to `p`, trying `m = 2..=max_m`.
pub fn factor_shape(p: &LaurentPoly, max_m: usize) -> Option<Shape> {
    let (low, high) = (p.low_degree()?, p.degree()?);
    let coeff = p.coeff(low);
    let span = (high - low) as usize;
    if span == 0 {
        return Some(Shape::new(coeff, low, 0, 0));
    }
    for m in (2..=max_m).rev() {
        if !span.is_multiple_of(m - 1) {
            continue;
        }
        let shape = Shape::new(coeff.clone(), low, m, (span / (m - 1)) as u32);
        if shape.expand() == *p {
            return Some(shape);
        }
    }
    None
}

/// One printed entry of the `G_{n,k}` table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableEntry {
    pub n: usize,
    pub k: usize,
    pub printed: &'static str,
    pub shape: Shape,
}

impl TableEntry {
    /// Whether the printed shape sums to `n!` at `q = 1`, as any `G_{n,k}`
    /// must.
    pub fn cardinality_holds(&self) -> bool {
        self.shape.eval_at_one() == factorial(self.n)
    }

    /// The shape to verify against: the printed one, or with `A_{n-1}`
    /// substituted for the Eulerian factor when the printed label fails the
    /// cardinality test.
    pub fn verified_shape(&self) -> Shape {
        if self.cardinality_holds() {
            self.shape.clone()
        } else {
            Shape {
                eulerian: self.n - 1,
                ..self.shape.clone()
            }
        }
    }
}

/// The twenty printed entries, in column order.
pub fn table_entries() -> Vec<TableEntry> {
    let e = |n, k, printed, c: u64, s, m, p| TableEntry {
        n,
        k,
        printed,
        shape: Shape::new(c, s, m, p),
    };
    vec![
        e(6, 1, "6A_5(q)", 6, 0, 5, 1),
        e(6, 2, "180A_2(q)^2", 180, 0, 2, 2),
        e(6, 3, "6!", 720, 0, 0, 0),
        e(6, 4, "180q^{-2}A_2(q)^2", 180, -2, 2, 2),
        e(6, 5, "6q^{-4}A_5(q)", 6, -4, 5, 1),
        e(8, 1, "8A_7(q)", 8, 0, 7, 1),
        e(8, 2, "1120A_3(q)^2", 1120, 0, 3, 2),
        e(8, 3, "8q^{-2}A_7(q)", 8, -2, 7, 1),
        e(8, 4, "8!", 40320, 0, 0, 0),
        e(8, 5, "8q^{-4}A_7(q)", 8, -4, 7, 1),
        e(8, 6, "1120q^{-4}A_3(q)^2", 1120, -4, 3, 2),
        e(8, 7, "8q^{-6}A_7(q)", 8, -6, 7, 1),
        e(9, 1, "9A_9(q)", 9, 0, 9, 1),
        e(9, 2, "9q^{-1}A_9(q)", 9, -1, 9, 1),
        e(9, 3, "45360A_2(q)^3", 45360, 0, 2, 3),
        e(9, 4, "9q^{-3}A_9(q)", 9, -3, 9, 1),
        e(9, 5, "9q^{-4}A_9(q)", 9, -4, 9, 1),
        e(9, 6, "45360q^{-3}A_2(q)^3", 45360, -3, 2, 3),
        e(9, 7, "9q^{-6}A_9(q)", 9, -6, 9, 1),
        e(9, 8, "9q^{-7}A_9(q)", 9, -7, 9, 1),
    ]
}
