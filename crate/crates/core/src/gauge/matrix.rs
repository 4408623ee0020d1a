//! Square matrices over A and coordinate vectors of A⊗U in a fixed frame.

use std::fmt;

use crate::error::{check_dim, AlgebraError, Result};
use crate::poly::Polynomial;
use crate::Rational;

/// An A-linear endomorphism of A^rank, acting on coordinate columns.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    n: usize,
    rank: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn zero(n: usize, rank: usize) -> Self {
        PolyMatrix {
            n,
            rank,
            entries: vec![Polynomial::zero(n); rank * rank],
        }
    }

    pub fn identity(n: usize, rank: usize) -> Self {
        let mut m = Self::zero(n, rank);
        for i in 0..rank {
            m.set(i, i, Polynomial::one(n));
        }
        m
    }

    /// Row-major construction; every row must have `rows.len()` entries.
    pub fn from_rows(n: usize, rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let rank = rows.len();
        let mut entries = Vec::with_capacity(rank * rank);
        for row in rows {
            if row.len() != rank {
                return Err(AlgebraError::MalformedSpec(format!(
                    "matrix row of length {} in a {rank}x{rank} matrix",
                    row.len()
                )));
            }
            for p in row {
                check_dim(n, p.n())?;
                entries.push(p);
            }
        }
        Ok(PolyMatrix { n, rank, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn get(&self, row: usize, col: usize) -> &Polynomial {
        &self.entries[row * self.rank + col]
    }

    pub fn set(&mut self, row: usize, col: usize, p: Polynomial) {
        self.entries[row * self.rank + col] = p;
    }

    pub fn rows(&self) -> Vec<Vec<Polynomial>> {
        self.entries.chunks(self.rank).map(<[_]>::to_vec).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    fn zip(&self, other: &PolyMatrix, f: impl Fn(&Polynomial, &Polynomial) -> Result<Polynomial>) -> Result<PolyMatrix> {
        check_dim(self.n, other.n)?;
        check_dim(self.rank, other.rank)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| f(a, b))
            .collect::<Result<_>>()?;
        Ok(PolyMatrix {
            n: self.n,
            rank: self.rank,
            entries,
        })
    }

    pub fn add(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        self.zip(other, Polynomial::add)
    }

    pub fn sub(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        self.zip(other, Polynomial::sub)
    }

    pub fn scale(&self, c: &Rational) -> PolyMatrix {
        PolyMatrix {
            n: self.n,
            rank: self.rank,
            entries: self.entries.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        check_dim(self.n, other.n)?;
        check_dim(self.rank, other.rank)?;
        let d = self.rank;
        let mut out = PolyMatrix::zero(self.n, d);
        for i in 0..d {
            for j in 0..d {
                let mut acc = Polynomial::zero(self.n);
                for l in 0..d {
                    let (a, b) = (self.get(i, l), other.get(l, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.add(&a.mul(b)?)?;
                    }
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// `AB - BA`
    pub fn commutator(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// Entrywise ∂/∂x_{i+1}.
    pub fn partial_var(&self, i: usize) -> PolyMatrix {
        PolyMatrix {
            n: self.n,
            rank: self.rank,
            entries: self.entries.iter().map(|p| p.partial_var(i)).collect(),
        }
    }

    /// Matrix times column.
    pub fn apply(&self, m: &ModuleElement) -> Result<ModuleElement> {
        check_dim(self.n, m.n())?;
        check_dim(self.rank, m.rank())?;
        let mut coords = Vec::with_capacity(self.rank);
        for i in 0..self.rank {
            let mut acc = Polynomial::zero(self.n);
            for j in 0..self.rank {
                let (a, b) = (self.get(i, j), &m.coords[j]);
                if !a.is_zero() && !b.is_zero() {
                    acc = acc.add(&a.mul(b)?)?;
                }
            }
            coords.push(acc);
        }
        Ok(ModuleElement { n: self.n, coords })
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.entries.chunks(self.rank).enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            for (j, p) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{p}")?;
            }
        }
        write!(f, "]")
    }
}

/// Coordinates of an element of A⊗U in the frame e_1, ..., e_rank.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModuleElement {
    n: usize,
    coords: Vec<Polynomial>,
}

impl ModuleElement {
    pub fn new(n: usize, coords: Vec<Polynomial>) -> Result<Self> {
        for c in &coords {
            check_dim(n, c.n())?;
        }
        Ok(ModuleElement { n, coords })
    }

    pub fn zero(n: usize, rank: usize) -> Self {
        ModuleElement {
            n,
            coords: vec![Polynomial::zero(n); rank],
        }
    }

    /// The frame vector e_{j+1}.
    pub fn basis(n: usize, rank: usize, j: usize) -> Self {
        let mut m = Self::zero(n, rank);
        m.coords[j] = Polynomial::one(n);
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Polynomial] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Polynomial::is_zero)
    }

    fn zip(&self, other: &ModuleElement, f: impl Fn(&Polynomial, &Polynomial) -> Result<Polynomial>) -> Result<ModuleElement> {
        check_dim(self.n, other.n)?;
        check_dim(self.rank(), other.rank())?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| f(a, b))
            .collect::<Result<_>>()?;
        Ok(ModuleElement { n: self.n, coords })
    }

    pub fn add(&self, other: &ModuleElement) -> Result<ModuleElement> {
        self.zip(other, Polynomial::add)
    }

    pub fn sub(&self, other: &ModuleElement) -> Result<ModuleElement> {
        self.zip(other, Polynomial::sub)
    }

    pub fn scale(&self, c: &Rational) -> ModuleElement {
        ModuleElement {
            n: self.n,
            coords: self.coords.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// Multiplication by a function `f ∈ A`.
    pub fn mul_poly(&self, f: &Polynomial) -> Result<ModuleElement> {
        check_dim(self.n, f.n())?;
        let coords = self.coords.iter().map(|p| p.mul(f)).collect::<Result<_>>()?;
        Ok(ModuleElement { n: self.n, coords })
    }

    /// Coordinatewise ∂/∂x_{i+1}.
    pub fn partial_var(&self, i: usize) -> ModuleElement {
        ModuleElement {
            n: self.n,
            coords: self.coords.iter().map(|p| p.partial_var(i)).collect(),
        }
    }
}

impl fmt::Display for ModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}
