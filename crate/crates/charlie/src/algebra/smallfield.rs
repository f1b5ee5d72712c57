//! Tiny finite fields packed for matrix-group enumeration.
//!
//! A `SmallField` is a subfield `F_q` of a shared tower with `q <= 32`,
//! re-coded so that 0 is code 0 and the nonzero element `gamma^j` is code
//! `j + 1` for the fixed subfield generator `gamma`.  Multiplication is
//! index arithmetic mod `q - 1`; addition is one table lookup.  Codes fit
//! in a `u8`, so an n x n matrix packs into a few bytes.

use std::sync::Arc;

use super::tower::Tower;

#[derive(Clone)]
pub struct SmallField {
    pub tower: Arc<Tower>,
    /// Degree over the prime field.
    pub sub: u32,
    /// Field order.
    pub q: u64,
    units: u64,
    /// code -> tower encoding
    elems: Vec<u64>,
    /// tower encoding -> code (dense, indexed by encoding)
    code_of: Vec<u8>,
    add: Vec<u8>,
}

impl SmallField {
    pub fn new(tower: Arc<Tower>, sub: u32) -> SmallField {
        let q = tower.subfield_order(sub);
        assert!(q <= 32, "small field too large: {q}");
        let units = q - 1;
        let mut elems = Vec::with_capacity(q as usize);
        elems.push(0u64);
        let gamma = tower.subfield_generator(sub);
        let mut cur = 1u64;
        for _ in 0..units {
            elems.push(cur);
            cur = tower.mul(cur, gamma);
        }
        debug_assert_eq!(cur, 1);
        let mut code_of = vec![u8::MAX; tower.order as usize];
        for (c, &e) in elems.iter().enumerate() {
            code_of[e as usize] = c as u8;
        }
        let mut add = vec![0u8; (q * q) as usize];
        for a in 0..q as usize {
            for b in 0..q as usize {
                let s = tower.add(elems[a], elems[b]);
                add[a * q as usize + b] = code_of[s as usize];
            }
        }
        SmallField {
            tower,
            sub,
            q,
            units,
            elems,
            code_of,
            add,
        }
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        if self.tower.p == 2 || a == 0 {
            return a;
        }
        // -gamma^j = gamma^{j + (q-1)/2} in odd characteristic
        let half = (self.units / 2) as u64;
        self.root_code((a as u64 - 1 + half) % self.units)
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        if a == 0 || b == 0 {
            0
        } else {
            self.root_code((a as u64 - 1 + b as u64 - 1) % self.units)
        }
    }

    #[inline]
    pub fn inv(&self, a: u8) -> u8 {
        assert!(a != 0, "inverse of zero");
        self.root_code((self.units - (a as u64 - 1)) % self.units)
    }

    #[inline]
    pub fn pow(&self, a: u8, e: u64) -> u8 {
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        self.root_code(((a as u128 - 1) * e as u128 % self.units as u128) as u64)
    }

    #[inline]
    fn root_code(&self, j: u64) -> u8 {
        (j + 1) as u8
    }

    /// `x -> x^{q0}` with `q = q0^2`; the conjugation of the hermitian form.
    #[inline]
    pub fn conj_sqrt(&self, a: u8) -> u8 {
        assert!(self.sub % 2 == 0, "field order is not a square");
        let q0 = (self.tower.p as u128).pow(self.sub / 2) as u64;
        self.pow(a, q0)
    }

    /// True if the element lies in the index-2 subfield `F_{q0}`.
    #[inline]
    pub fn in_sqrt_subfield(&self, a: u8) -> bool {
        self.conj_sqrt(a) == a
    }

    pub fn zero(&self) -> u8 {
        0
    }

    pub fn one(&self) -> u8 {
        1
    }

    pub fn codes(&self) -> impl Iterator<Item = u8> {
        0..self.q as u8
    }

    /// Tower encoding of a code.
    pub fn decode(&self, a: u8) -> u64 {
        self.elems[a as usize]
    }

    /// Code of a tower encoding (must lie in this subfield).
    pub fn encode(&self, e: u64) -> u8 {
        let c = self.code_of[e as usize];
        assert!(c != u8::MAX, "element outside subfield");
        c
    }

    /// Discrete log to the subfield generator; `None` for zero.
    pub fn dlog(&self, a: u8) -> Option<u64> {
        if a == 0 {
            None
        } else {
            Some(a as u64 - 1)
        }
    }
}
