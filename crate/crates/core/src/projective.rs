//! Points, planes and collineations of real projective 3-space over ℚ.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{canonical_integers, format_list, int, parse_list, Rational};

/// True iff `q = λ·p` for some nonzero λ. Errors if either vector is zero.
pub fn proj_eq(p: &[Rational; 4], q: &[Rational; 4]) -> Result<bool> {
    if p.iter().all(Zero::is_zero) || q.iter().all(Zero::is_zero) {
        return Err(Error::InvalidObject);
    }
    Ok(proportional(p, q))
}

fn proportional(p: &[Rational; 4], q: &[Rational; 4]) -> bool {
    (0..4).all(|i| (i + 1..4).all(|j| &p[i] * &q[j] == &p[j] * &q[i]))
}

macro_rules! homogeneous_vector {
    ($name:ident, $what:literal) => {
        #[doc = concat!("A ", $what, " of P³, a nonzero homogeneous 4-vector up to scale.")]
        ///
        /// Equality and hashing are projective: representatives differing by a
        /// nonzero factor compare equal.
        #[derive(Clone, Debug)]
        pub struct $name([Rational; 4]);

        impl $name {
            pub fn new(coords: [Rational; 4]) -> Result<Self> {
                if coords.iter().all(Zero::is_zero) {
                    return Err(Error::InvalidObject);
                }
                Ok(Self(coords))
            }

            pub fn from_ints(coords: [i64; 4]) -> Result<Self> {
                Self::new(coords.map(int))
            }

            /// The representative this value was built from.
            pub fn coords(&self) -> &[Rational; 4] {
                &self.0
            }

            pub fn into_coords(self) -> [Rational; 4] {
                self.0
            }

            /// Coprime integer representative with positive leading entry.
            pub fn canonical(&self) -> Self {
                let ints = canonical_integers(&self.0).expect("nonzero by construction");
                Self(std::array::from_fn(|i| {
                    Rational::from_integer(ints[i].clone())
                }))
            }

            pub fn proj_eq(&self, other: &Self) -> bool {
                proportional(&self.0, &other.0)
            }
        }

        impl PartialEq for $name {
            fn eq(&self, other: &Self) -> bool {
                self.proj_eq(other)
            }
        }

        impl Eq for $name {}

        impl Hash for $name {
            fn hash<H: Hasher>(&self, state: &mut H) {
                canonical_integers(&self.0).hash(state);
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&format_list(&self.canonical().0))
            }
        }

        impl FromStr for $name {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                let v = parse_list(s, 4)?;
                Self::new(std::array::from_fn(|i| v[i].clone()))
            }
        }
    };
}

homogeneous_vector!(HPoint, "point");
homogeneous_vector!(HPlane, "plane");

pub fn incidence(p: &HPoint, plane: &HPlane) -> bool {
    dot(p.coords(), plane.coords()).is_zero()
}

pub(crate) fn dot(a: &[Rational; 4], b: &[Rational; 4]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Signed 3×3 minors of a 3×4 matrix: entry `i` is `(-1)^i` times the minor
/// with column `i` deleted. The result annihilates every row.
pub fn complementary_minors<T>(rows: &[[T; 4]; 3]) -> [T; 4]
where
    T: Clone + Add<Output = T> + Sub<Output = T> + Mul<Output = T> + Neg<Output = T>,
{
    std::array::from_fn(|skip| {
        let cols: Vec<usize> = (0..4).filter(|&c| c != skip).collect();
        let e = |r: usize, c: usize| rows[r][cols[c]].clone();
        let det = e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1))
            - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0))
            + e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
        if skip % 2 == 0 {
            det
        } else {
            -det
        }
    })
}

/// The plane spanned by three non-collinear points.
pub fn plane_through(p1: &HPoint, p2: &HPoint, p3: &HPoint) -> Result<HPlane> {
    let rows = [
        p1.coords().clone(),
        p2.coords().clone(),
        p3.coords().clone(),
    ];
    HPlane::new(complementary_minors(&rows)).map_err(|_| Error::DegenerateSpan)
}

/// A collineation of P³ given by an invertible 4×4 matrix, modulo scale.
#[derive(Clone, Debug, PartialEq)]
pub struct Collineation {
    m: [[Rational; 4]; 4],
}

impl Collineation {
    pub fn new(m: [[Rational; 4]; 4]) -> Result<Self> {
        let c = Self { m };
        if c.determinant().is_zero() {
            return Err(Error::Singular);
        }
        Ok(c)
    }

    pub fn identity() -> Self {
        Self {
            m: std::array::from_fn(|i| std::array::from_fn(|j| int((i == j) as i64))),
        }
    }

    pub fn diagonal(d: [Rational; 4]) -> Result<Self> {
        let mut m: [[Rational; 4]; 4] = Default::default();
        for (i, v) in d.into_iter().enumerate() {
            m[i][i] = v;
        }
        Self::new(m)
    }

    pub fn matrix(&self) -> &[[Rational; 4]; 4] {
        &self.m
    }

    pub fn entry(&self, row: usize, col: usize) -> &Rational {
        &self.m[row][col]
    }

    pub fn determinant(&self) -> Rational {
        let mut a = self.m.clone();
        let mut det = Rational::one();
        for col in 0..4 {
            let Some(pivot) = (col..4).find(|&r| !a[r][col].is_zero()) else {
                return Rational::zero();
            };
            if pivot != col {
                a.swap(pivot, col);
                det = -det;
            }
            det *= &a[col][col];
            let (top, rest) = a.split_at_mut(col + 1);
            let pivot_row = &top[col];
            for row in rest {
                let f = &row[col] / &pivot_row[col];
                for (x, p) in row.iter_mut().zip(pivot_row).skip(col) {
                    *x -= &f * p;
                }
            }
        }
        det
    }

    /// Exact inverse by Gauss–Jordan elimination.
    pub fn inverse(&self) -> Self {
        let mut a = self.m.clone();
        let mut inv = Self::identity().m;
        for col in 0..4 {
            let pivot = (col..4)
                .find(|&r| !a[r][col].is_zero())
                .expect("invertible by construction");
            a.swap(pivot, col);
            inv.swap(pivot, col);
            let p = a[col][col].clone();
            for c in 0..4 {
                a[col][c] /= &p;
                inv[col][c] /= &p;
            }
            for r in 0..4 {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for c in 0..4 {
                    let da = &f * &a[col][c];
                    let di = &f * &inv[col][c];
                    a[r][c] -= da;
                    inv[r][c] -= di;
                }
            }
        }
        Self { m: inv }
    }

    pub fn compose(&self, rhs: &Self) -> Self {
        Self {
            m: std::array::from_fn(|i| {
                std::array::from_fn(|j| (0..4).map(|k| &self.m[i][k] * &rhs.m[k][j]).sum())
            }),
        }
    }

    pub fn apply_point(&self, p: &HPoint) -> HPoint {
        let x = p.coords();
        HPoint(std::array::from_fn(|i| dot(&self.m[i], x)))
    }

    /// Contragredient action `H ↦ H·M⁻¹`, preserving incidence.
    pub fn apply_plane(&self, plane: &HPlane) -> HPlane {
        let inv = self.inverse();
        let h = plane.coords();
        HPlane(std::array::from_fn(|j| {
            (0..4).map(|i| &h[i] * &inv.m[i][j]).sum()
        }))
    }

    /// Equality modulo a nonzero scalar factor.
    pub fn proj_eq(&self, other: &Self) -> bool {
        let flat = |m: &[[Rational; 4]; 4]| m.iter().flatten().cloned().collect::<Vec<_>>();
        let (a, b) = (flat(&self.m), flat(&other.m));
        let Some(k) = a.iter().position(|v| !v.is_zero()) else {
            return false;
        };
        if b[k].is_zero() {
            return false;
        }
        let scale = &b[k] / &a[k];
        a.iter().zip(&b).all(|(x, y)| &(x * &scale) == y)
    }
}
