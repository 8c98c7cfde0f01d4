//! Dense bivariate polynomials with exact integer coefficients.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A polynomial in x and y stored as a dense coefficient matrix.  The matrix
/// is kept trimmed (no all-zero top row or rightmost column) so structural
/// equality is value equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariatePolynomial {
    xdeg: usize,
    ydeg: usize,
    /// row-major: c[i * (ydeg + 1) + j] is the coefficient of x^i y^j
    c: Vec<BigInt>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        BivariatePolynomial {
            xdeg: 0,
            ydeg: 0,
            c: vec![BigInt::ZERO],
        }
    }

    pub fn one() -> Self {
        BivariatePolynomial {
            xdeg: 0,
            ydeg: 0,
            c: vec![BigInt::one()],
        }
    }

    pub fn monomial(i: usize, j: usize, coeff: impl Into<BigInt>) -> Self {
        let mut p = BivariatePolynomial {
            xdeg: i,
            ydeg: j,
            c: vec![BigInt::ZERO; (i + 1) * (j + 1)],
        };
        p.c[i * (j + 1) + j] = coeff.into();
        p.trim();
        p
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    pub fn x_degree(&self) -> usize {
        self.xdeg
    }

    pub fn y_degree(&self) -> usize {
        self.ydeg
    }

    pub fn coefficient(&self, i: usize, j: usize) -> BigInt {
        if i <= self.xdeg && j <= self.ydeg {
            self.c[i * (self.ydeg + 1) + j].clone()
        } else {
            BigInt::ZERO
        }
    }

    fn trim(&mut self) {
        let nonzero_x = (0..=self.xdeg)
            .rev()
            .find(|&i| (0..=self.ydeg).any(|j| !self.c[i * (self.ydeg + 1) + j].is_zero()));
        let xdeg = nonzero_x.unwrap_or(0);
        let nonzero_y = (0..=self.ydeg)
            .rev()
            .find(|&j| (0..=xdeg).any(|i| !self.c[i * (self.ydeg + 1) + j].is_zero()));
        let ydeg = nonzero_y.unwrap_or(0);
        if xdeg == self.xdeg && ydeg == self.ydeg {
            return;
        }
        let mut c = Vec::with_capacity((xdeg + 1) * (ydeg + 1));
        for i in 0..=xdeg {
            for j in 0..=ydeg {
                c.push(std::mem::take(&mut self.c[i * (self.ydeg + 1) + j]));
            }
        }
        *self = BivariatePolynomial { xdeg, ydeg, c };
    }

    /// Multiplication by x, shifting the x-exponent of every term.
    pub fn times_x(&self) -> Self {
        self.shifted(1, 0)
    }

    /// Multiplication by y.
    pub fn times_y(&self) -> Self {
        self.shifted(0, 1)
    }

    pub fn shifted(&self, dx: usize, dy: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let xdeg = self.xdeg + dx;
        let ydeg = self.ydeg + dy;
        let mut c = vec![BigInt::ZERO; (xdeg + 1) * (ydeg + 1)];
        for i in 0..=self.xdeg {
            for j in 0..=self.ydeg {
                c[(i + dx) * (ydeg + 1) + (j + dy)] = self.c[i * (self.ydeg + 1) + j].clone();
            }
        }
        BivariatePolynomial { xdeg, ydeg, c }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &Self) {
        self.add_scaled_assign(other, &BigInt::one());
    }

    /// `self += scale * other`.
    pub fn add_scaled_assign(&mut self, other: &Self, scale: &BigInt) {
        let xdeg = self.xdeg.max(other.xdeg);
        let ydeg = self.ydeg.max(other.ydeg);
        if xdeg != self.xdeg || ydeg != self.ydeg {
            *self = self.shifted(0, 0).grown(xdeg, ydeg);
        }
        for i in 0..=other.xdeg {
            for j in 0..=other.ydeg {
                let v = &other.c[i * (other.ydeg + 1) + j];
                if !v.is_zero() {
                    self.c[i * (self.ydeg + 1) + j] += v * scale;
                }
            }
        }
        self.trim();
    }

    fn grown(&self, xdeg: usize, ydeg: usize) -> Self {
        let mut c = vec![BigInt::ZERO; (xdeg + 1) * (ydeg + 1)];
        for i in 0..=self.xdeg {
            for j in 0..=self.ydeg {
                c[i * (ydeg + 1) + j] = self.c[i * (self.ydeg + 1) + j].clone();
            }
        }
        BivariatePolynomial { xdeg, ydeg, c }
    }

    /// `(x-1)^a (y-1)^b`, the building block of the subset expansion.
    pub fn binomial_power_product(a: usize, b: usize) -> Self {
        let row = signed_binomial_row(a);
        let col = signed_binomial_row(b);
        let mut c = vec![BigInt::ZERO; (a + 1) * (b + 1)];
        for (i, ri) in row.iter().enumerate() {
            for (j, cj) in col.iter().enumerate() {
                c[i * (b + 1) + j] = ri * cj;
            }
        }
        let mut p = BivariatePolynomial {
            xdeg: a,
            ydeg: b,
            c,
        };
        p.trim();
        p
    }

    /// Exchanges the roles of x and y.
    pub fn swap_variables(&self) -> Self {
        let mut c = vec![BigInt::ZERO; (self.ydeg + 1) * (self.xdeg + 1)];
        for i in 0..=self.xdeg {
            for j in 0..=self.ydeg {
                c[j * (self.xdeg + 1) + i] = self.c[i * (self.ydeg + 1) + j].clone();
            }
        }
        BivariatePolynomial {
            xdeg: self.ydeg,
            ydeg: self.xdeg,
            c,
        }
    }

    /// Exact evaluation at integer points.
    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        // Horner in x over row polynomials evaluated in y
        let mut acc = BigInt::ZERO;
        for i in (0..=self.xdeg).rev() {
            let mut row = BigInt::ZERO;
            for j in (0..=self.ydeg).rev() {
                row = row * y + &self.c[i * (self.ydeg + 1) + j];
            }
            acc = acc * x + row;
        }
        acc
    }

    pub fn eval_i64(&self, x: i64, y: i64) -> BigInt {
        self.eval(&BigInt::from(x), &BigInt::from(y))
    }

    /// All coefficients non-negative (true for Tutte polynomials).
    pub fn is_nonnegative(&self) -> bool {
        self.c.iter().all(|v| v.sign() != num_bigint::Sign::Minus)
    }

    /// Nonzero coefficients sorted by (i, j).
    pub fn terms(&self) -> Vec<(usize, usize, BigInt)> {
        let mut out = Vec::new();
        for i in 0..=self.xdeg {
            for j in 0..=self.ydeg {
                let v = &self.c[i * (self.ydeg + 1) + j];
                if !v.is_zero() {
                    out.push((i, j, v.clone()));
                }
            }
        }
        out
    }
}

fn signed_binomial_row(a: usize) -> Vec<BigInt> {
    // coefficients of (t-1)^a: C(a,i) * (-1)^(a-i)
    let mut row = vec![BigInt::ZERO; a + 1];
    row[0] = if a.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    };
    for i in 1..=a {
        // C(a,i) = C(a,i-1) * (a-i+1) / i, sign flips with i
        row[i] = -(&row[i - 1] * BigInt::from(a - i + 1)) / BigInt::from(i);
    }
    row
}

/// Machine-readable polynomial listing: a `tutte r=<r> m=<m>` header, then
/// one `i j coeff` line per nonzero coefficient in (i, j) order.
pub fn render_tutte(p: &BivariatePolynomial, rank: u32, nullity: u32) -> String {
    let mut out = format!("tutte r={rank} m={nullity}\n");
    for (i, j, c) in p.terms() {
        out.push_str(&format!("{i} {j} {c}\n"));
    }
    out
}

/// Parses integers for exact evaluation; anything non-integral is rejected.
pub fn parse_eval_point(s: &str) -> Result<BigInt> {
    s.parse::<BigInt>()
        .map_err(|_| Error::Domain(format!("not an integer: {s}")))
}

impl std::fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        terms.sort_by_key(|t| std::cmp::Reverse((t.0, t.1)));
        for (idx, (i, j, c)) in terms.iter().enumerate() {
            let mut piece = String::new();
            if *c != BigInt::one() || (*i == 0 && *j == 0) {
                piece.push_str(&c.to_string());
            }
            if *i > 0 {
                if !piece.is_empty() {
                    piece.push(' ');
                }
                piece.push('x');
                if *i > 1 {
                    piece.push_str(&format!("^{i}"));
                }
            }
            if *j > 0 {
                if !piece.is_empty() {
                    piece.push(' ');
                }
                piece.push('y');
                if *j > 1 {
                    piece.push_str(&format!("^{j}"));
                }
            }
            if idx > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{piece}")?;
        }
        Ok(())
    }
}
