//! Small dense square matrices and polynomials, generic over an exact
//! scalar type via `num-traits`. The crate root fixes concrete rational
//! aliases; nothing here assumes floating point.

use num_traits::Num;

/// Dense n x n matrix in row-major order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareMatrix<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: Num + Clone> SquareMatrix<T> {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            data: vec![T::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.data[i * n + i] = T::one();
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                data.push(f(x, y));
            }
        }
        Self { n, data }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, x: usize, y: usize) -> &T {
        &self.data[x * self.n + y]
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = Self::zero(n);
        for x in 0..n {
            for z in 0..n {
                let a = self.data[x * n + z].clone();
                if a.is_zero() {
                    continue;
                }
                for y in 0..n {
                    let t = a.clone() * other.data[z * n + y].clone();
                    let cur = out.data[x * n + y].clone();
                    out.data[x * n + y] = cur + t;
                }
            }
        }
        out
    }

    pub fn add_scaled(&mut self, other: &Self, c: T) {
        assert_eq!(self.n, other.n);
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a = a.clone() + c.clone() * b.clone();
        }
    }
}

/// Polynomial with coefficients in ascending degree order. The zero
/// polynomial has an empty coefficient list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Num + Clone> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The monomial x.
    pub fn x() -> Self {
        Self::new(vec![T::zero(), T::one()])
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Multiplies by x.
    pub fn shift(&self) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(T::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn sub_scaled(&self, other: &Self, c: T) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(len);
        for idx in 0..len {
            let a = self.coeffs.get(idx).cloned().unwrap_or_else(T::zero);
            let b = other.coeffs.get(idx).cloned().unwrap_or_else(T::zero);
            coeffs.push(a - c.clone() * b);
        }
        Self::new(coeffs)
    }

    pub fn div_scalar(&self, c: T) -> Self {
        assert!(!c.is_zero(), "division by zero scalar");
        Self::new(self.coeffs.iter().map(|a| a.clone() / c.clone()).collect())
    }

    /// Evaluates at a matrix given precomputed powers `powers[k] = A^k`.
    pub fn eval_matrix(&self, powers: &[SquareMatrix<T>]) -> SquareMatrix<T> {
        let n = powers[0].n();
        let mut out = SquareMatrix::zero(n);
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out.add_scaled(&powers[k], c.clone());
            }
        }
        out
    }

    pub fn eval(&self, at: T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at.clone() + c.clone();
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn matrix_powers_of_cycle() {
        let a = SquareMatrix::from_fn(3, |x, y| if (x + 1) % 3 == y { r(1) } else { r(0) });
        let a2 = a.mul(&a);
        assert_eq!(*a2.get(0, 2), r(1));
        assert_eq!(*a2.get(0, 1), r(0));
        let a3 = a2.mul(&a);
        assert_eq!(a3, SquareMatrix::identity(3));
    }

    #[test]
    fn polynomial_eval() {
        // x^2 / 2 at x = 4.
        let p = Polynomial::new(vec![r(0), r(0), Rational::new(1, 2)]);
        assert_eq!(p.eval(r(4)), r(8));
        assert_eq!(p.degree(), Some(2));
    }

    #[test]
    fn polynomial_recursion_ops() {
        let x = Polynomial::<Rational>::x();
        let shifted = x.shift();
        assert_eq!(shifted.coeffs(), &[r(0), r(0), r(1)]);
        let diff = shifted.sub_scaled(&Polynomial::constant(r(2)), r(3));
        assert_eq!(diff.coeffs(), &[r(-6), r(0), r(1)]);
        assert_eq!(diff.div_scalar(r(2)).coeffs(), &[r(-3), r(0), Rational::new(1, 2)]);
    }
}
