use core::fmt;
use core::ops::{Add, AddAssign};

use crate::error::{invalid, Result};

/// Largest supported ambient dimension `2g` (one machine word of coordinates).
pub const MAX_DIM: usize = 64;

/// A vector of `F2^n`, stored as a bit mask: bit `i` is the coefficient of the
/// `i`-th fixed basis vector.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F2Vector {
    bits: u64,
    len: u8,
}

pub(crate) fn low_mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

impl F2Vector {
    pub fn zero(len: usize) -> Result<Self> {
        Self::from_bits(len, 0)
    }

    /// The `index`-th coordinate vector.
    pub fn unit(len: usize, index: usize) -> Result<Self> {
        if index >= len {
            return Err(invalid("unit vector index out of range"));
        }
        Self::from_bits(len, 1u64 << index)
    }

    pub fn from_bits(len: usize, bits: u64) -> Result<Self> {
        if len > MAX_DIM {
            return Err(invalid("vector length exceeds the 64-coordinate cap"));
        }
        if bits & !low_mask(len) != 0 {
            return Err(invalid("bits set beyond the vector length"));
        }
        Ok(Self::new_unchecked(len, bits))
    }

    /// Builds a vector from explicit 0/1 coordinates.
    pub fn from_coords(coords: &[u8]) -> Result<Self> {
        if coords.len() > MAX_DIM {
            return Err(invalid("vector length exceeds the 64-coordinate cap"));
        }
        let mut bits = 0u64;
        for (i, &c) in coords.iter().enumerate() {
            match c {
                0 => {}
                1 => bits |= 1 << i,
                _ => return Err(invalid("coordinates must be 0 or 1")),
            }
        }
        Ok(Self::new_unchecked(coords.len(), bits))
    }

    pub(crate) fn new_unchecked(len: usize, bits: u64) -> Self {
        debug_assert!(len <= MAX_DIM && bits & !low_mask(len) == 0);
        Self {
            bits,
            len: len as u8,
        }
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn len(self) -> usize {
        self.len as usize
    }

    pub fn is_empty(self) -> bool {
        self.len == 0
    }

    pub fn is_zero(self) -> bool {
        self.bits == 0
    }

    pub fn coord(self, index: usize) -> bool {
        index < self.len() && (self.bits >> index) & 1 == 1
    }

    pub fn weight(self) -> u32 {
        self.bits.count_ones()
    }

    /// All `2^len` vectors in increasing order of their bit mask.
    pub fn all(len: usize) -> Result<impl Iterator<Item = F2Vector>> {
        if len >= MAX_DIM {
            return Err(invalid("cannot enumerate a 64-dimensional space"));
        }
        Ok((0..1u64 << len).map(move |bits| Self::new_unchecked(len, bits)))
    }

    /// Hex string of the bit mask, zero padded to `ceil(len / 4)` digits.
    pub fn to_hex(self) -> alloc::string::String {
        alloc::format!("{self}")
    }
}

impl Add for F2Vector {
    type Output = F2Vector;

    fn add(self, rhs: Self) -> Self {
        assert_eq!(self.len, rhs.len, "adding F2 vectors of different lengths");
        Self {
            bits: self.bits ^ rhs.bits,
            len: self.len,
        }
    }
}

impl AddAssign for F2Vector {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl fmt::Display for F2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = self.len().div_ceil(4).max(1);
        write!(f, "{:0width$x}", self.bits, width = digits)
    }
}

impl fmt::Debug for F2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F2Vector[{}](", self.len)?;
        for i in 0..self.len() {
            f.write_str(if self.coord(i) { "1" } else { "0" })?;
        }
        f.write_str(")")
    }
}
