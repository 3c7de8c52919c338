use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::coeff::JsonInt;
use super::LaurentPoly;
use crate::error::{invalid, Result};

/// Polynomial in `t_1, …, t_v` with nonnegative exponents.
///
/// Exponent vectors are stored 0-indexed: position `i` holds the power of
/// `t_{i+1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    vars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

/// Value substituted for one variable by [`MultiPoly::specialize`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VarValue {
    One,
    Q,
}

impl MultiPoly {
    pub fn zero(vars: usize) -> Self {
        MultiPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: usize) -> Self {
        MultiPoly::monomial(vec![0; vars], 1)
    }

    pub fn monomial(exps: Vec<u32>, c: impl Into<BigInt>) -> Self {
        let mut p = MultiPoly::zero(exps.len());
        p.add_term(exps, c.into());
        p
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub(crate) fn add_term(&mut self, exps: Vec<u32>, c: BigInt) {
        assert_eq!(exps.len(), self.vars, "exponent vector length must match variable count");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Substitutes `q` or `1` for each variable.
    pub fn specialize(&self, assignment: &[VarValue]) -> Result<LaurentPoly> {
        if assignment.len() != self.vars {
            return invalid(format!(
                "assignment has {} entries for {} variables",
                assignment.len(),
                self.vars
            ));
        }
        let mut out = LaurentPoly::zero();
        for (exps, c) in &self.terms {
            let degree: i64 = exps
                .iter()
                .zip(assignment)
                .filter(|(_, v)| **v == VarValue::Q)
                .map(|(&e, _)| e as i64)
                .sum();
            out.add_term(degree, c.clone());
        }
        Ok(out)
    }

    /// `t_1^{top_1} ⋯ t_v^{top_v} · P(t_1^{-1}, …, t_v^{-1})`.
    ///
    /// Fails if some exponent exceeds its `top`, since the result would not
    /// be a polynomial.
    pub fn reflect(&self, top: &[u32]) -> Result<MultiPoly> {
        if top.len() != self.vars {
            return invalid(format!("reflection needs {} bounds, got {}", self.vars, top.len()));
        }
        let mut out = MultiPoly::zero(self.vars);
        for (exps, c) in &self.terms {
            let mut flipped = Vec::with_capacity(self.vars);
            for (&e, &t) in exps.iter().zip(top) {
                if e > t {
                    return invalid(format!("exponent {e} exceeds reflection bound {t}"));
                }
                flipped.push(t - e);
            }
            out.add_term(flipped, c.clone());
        }
        Ok(out)
    }
}

impl Add<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;

    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.vars, rhs.vars, "variable counts differ");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Mul<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.vars, rhs.vars, "variable counts differ");
        let mut out = MultiPoly::zero(self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    /// Terms in ascending lexicographic exponent order, e.g. `1 + 2t1 + 2t1t2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (exps, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(if c.sign() == num_bigint::Sign::Minus { " - " } else { " + " })?;
            } else if c.sign() == num_bigint::Sign::Minus {
                f.write_str("-")?;
            }
            let mag = c.magnitude();
            let constant = exps.iter().all(|&e| e == 0);
            if constant || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            for (v, &e) in exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "t{}", v + 1)?,
                    _ => write!(f, "t{}^{e}", v + 1)?,
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Serialize, Deserialize)]
struct MultiWire {
    vars: usize,
    terms: Vec<(Vec<u32>, JsonInt)>,
}

impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MultiWire {
            vars: self.vars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), JsonInt(c.clone()))).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let wire = MultiWire::deserialize(d)?;
        if let Some((e, _)) = wire.terms.iter().find(|(e, _)| e.len() != wire.vars) {
            return Err(serde::de::Error::custom(format!(
                "exponent vector {e:?} does not have {} entries",
                wire.vars
            )));
        }
        let mut p = MultiPoly::zero(wire.vars);
        for (e, c) in wire.terms {
            p.add_term(e, c.0);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mp(vars: usize, terms: &[(&[u32], i64)]) -> MultiPoly {
        let mut p = MultiPoly::zero(vars);
        for (e, c) in terms {
            p.add_term(e.to_vec(), BigInt::from(*c));
        }
        p
    }

    #[test]
    fn specialization() {
        // 1 + 2 t1 + 2 t1 t2
        let t = mp(2, &[(&[0, 0], 1), (&[1, 0], 2), (&[1, 1], 2)]);
        assert_eq!(t.specialize(&[VarValue::One, VarValue::One]).unwrap(), LaurentPoly::constant(5));
        assert_eq!(
            t.specialize(&[VarValue::Q, VarValue::One]).unwrap(),
            LaurentPoly::from_coeffs([1, 4])
        );
        assert_eq!(
            t.specialize(&[VarValue::Q, VarValue::Q]).unwrap(),
            LaurentPoly::from_coeffs([1, 2, 2])
        );
        assert!(t.specialize(&[VarValue::Q]).is_err());
        assert_eq!(t.eval_at_one(), BigInt::from(5));
    }

    #[test]
    fn reflection() {
        let t = mp(2, &[(&[0, 0], 1), (&[1, 0], 2), (&[1, 1], 2)]);
        let r = t.reflect(&[2, 1]).unwrap();
        assert_eq!(r, mp(2, &[(&[2, 1], 1), (&[1, 1], 2), (&[1, 0], 2)]));
        assert_eq!(r.reflect(&[2, 1]).unwrap(), t);
        assert!(t.reflect(&[0, 1]).is_err());
    }

    #[test]
    fn display_and_json() {
        let t = mp(2, &[(&[0, 0], 1), (&[1, 0], 2), (&[1, 2], -1)]);
        assert_eq!(t.to_string(), "1 + 2t1 - t1t2^2");
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(json, r#"{"vars":2,"terms":[[[0,0],1],[[1,0],2],[[1,2],-1]]}"#);
        assert_eq!(serde_json::from_str::<MultiPoly>(&json).unwrap(), t);
        assert!(serde_json::from_str::<MultiPoly>(r#"{"vars":2,"terms":[[[0],1]]}"#).is_err());
        assert_eq!(MultiPoly::zero(3).to_string(), "0");
    }

    fn small_multi() -> impl Strategy<Value = MultiPoly> {
        proptest::collection::vec((proptest::collection::vec(0u32..3, 3), -9i64..10), 0..5).prop_map(|terms| {
            let mut p = MultiPoly::zero(3);
            for (e, c) in terms {
                p.add_term(e, BigInt::from(c));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn ring_laws(a in small_multi(), b in small_multi(), c in small_multi()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &MultiPoly::one(3), a.clone());
        }

        #[test]
        fn specialization_is_a_ring_map(a in small_multi(), b in small_multi()) {
            let asg = [VarValue::Q, VarValue::One, VarValue::Q];
            prop_assert_eq!(
                (&a * &b).specialize(&asg).unwrap(),
                &a.specialize(&asg).unwrap() * &b.specialize(&asg).unwrap()
            );
        }
    }
}
