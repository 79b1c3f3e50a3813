//! Exact real numbers in `Q(2cos(pi/M))`, enough to build root systems of
//! finite Coxeter groups and decide signs without floating-point tolerance.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, ToPrimitive, Zero};

/// The field `Q(theta)` with `theta = 2cos(pi/M)`.
#[derive(Debug)]
pub struct NumberField {
    conductor: u32,
    /// Monic minimal polynomial of `theta`, ascending coefficients.
    minpoly: Vec<BigInt>,
    /// Rational interval isolating `theta` among the real roots of `minpoly`.
    isolating: (BigRational, BigRational),
}

impl NumberField {
    /// The smallest field of this family containing `2cos(pi/m)` for every label.
    pub fn for_labels<I: IntoIterator<Item = u32>>(labels: I) -> Arc<Self> {
        let conductor = labels
            .into_iter()
            .filter(|&m| m >= 4)
            .fold(1u32, |acc, m| acc.lcm(&m));
        Arc::new(Self::with_conductor(conductor))
    }

    pub fn with_conductor(conductor: u32) -> Self {
        assert!(conductor >= 1);
        let minpoly = if conductor == 1 {
            vec![BigInt::from(2), BigInt::one()]
        } else {
            two_cos_minpoly(2 * conductor as u64)
        };
        let approx = 2.0 * (std::f64::consts::PI / conductor as f64).cos();
        let isolating = if minpoly.len() == 2 {
            let root = BigRational::new(-minpoly[0].clone(), minpoly[1].clone());
            (root.clone(), root)
        } else {
            let eps = 1e-9;
            let lo = BigRational::from_float(approx - eps).unwrap();
            let hi = BigRational::from_float(approx + eps).unwrap();
            let (slo, shi) = (
                eval_rational(&minpoly, &lo).signum(),
                eval_rational(&minpoly, &hi).signum(),
            );
            assert!(
                !slo.is_zero() && slo != shi,
                "failed to isolate 2cos(pi/{conductor})"
            );
            (lo, hi)
        };
        NumberField {
            conductor,
            minpoly,
            isolating,
        }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn degree(&self) -> usize {
        self.minpoly.len() - 1
    }

    pub fn minimal_polynomial(&self) -> &[BigInt] {
        &self.minpoly
    }

    fn reduce(&self, mut p: Vec<BigRational>) -> Vec<BigRational> {
        let d = self.degree();
        while p.len() > d {
            let lead = p.pop().unwrap();
            if lead.is_zero() {
                continue;
            }
            let shift = p.len() - d;
            for (i, c) in self.minpoly[..d].iter().enumerate() {
                p[shift + i] -= &lead * BigRational::from_integer(c.clone());
            }
        }
        p.resize(d, BigRational::zero());
        p
    }
}

/// An element of a [`NumberField`], in the power basis of its generator.
#[derive(Clone)]
pub struct AlgebraicReal {
    field: Arc<NumberField>,
    coords: Vec<BigRational>,
}

impl AlgebraicReal {
    pub fn from_rational(field: &Arc<NumberField>, q: BigRational) -> Self {
        let mut coords = vec![BigRational::zero(); field.degree()];
        coords[0] = q;
        AlgebraicReal {
            field: field.clone(),
            coords,
        }
    }

    pub fn from_integer(field: &Arc<NumberField>, n: i64) -> Self {
        Self::from_rational(field, BigRational::from_integer(n.into()))
    }

    pub fn zero(field: &Arc<NumberField>) -> Self {
        Self::from_integer(field, 0)
    }

    /// The generator `2cos(pi/M)`.
    pub fn generator(field: &Arc<NumberField>) -> Self {
        if field.degree() == 1 {
            return Self::from_rational(field, field.isolating.0.clone());
        }
        let mut coords = vec![BigRational::zero(); field.degree()];
        coords[1] = BigRational::one();
        AlgebraicReal {
            field: field.clone(),
            coords,
        }
    }

    /// `2cos(pi/m)`. Panics if `m >= 4` does not divide the field's conductor.
    pub fn two_cos_pi_over(field: &Arc<NumberField>, m: u32) -> Self {
        match m {
            1 => Self::from_integer(field, -2),
            2 => Self::from_integer(field, 0),
            3 => Self::from_integer(field, 1),
            _ => {
                assert!(
                    field.conductor % m == 0,
                    "2cos(pi/{m}) is not in Q(2cos(pi/{}))",
                    field.conductor
                );
                // 2cos(k x) = C_k(2cos x) with C_0 = 2, C_1 = y, C_{k+1} = y C_k - C_{k-1}.
                let theta = Self::generator(field);
                let k = field.conductor / m;
                let mut prev = Self::from_integer(field, 2);
                let mut cur = theta.clone();
                for _ in 1..k {
                    let next = &(&theta * &cur) - &prev;
                    prev = cur;
                    cur = next;
                }
                cur
            }
        }
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn to_f64(&self) -> f64 {
        let theta = 2.0 * (std::f64::consts::PI / self.field.conductor as f64).cos();
        let theta = if self.field.degree() == 1 {
            self.field.isolating.0.to_f64().unwrap()
        } else {
            theta
        };
        self.coords
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * theta + c.to_f64().unwrap())
    }

    /// Exact sign, by refining the isolating interval of the generator until
    /// the value's enclosure excludes zero.
    pub fn signum(&self) -> Ordering {
        if self.is_zero() {
            return Ordering::Equal;
        }
        let f = &self.field;
        if f.degree() == 1 {
            return self.coords[0].cmp(&BigRational::zero());
        }
        let two = BigRational::from_integer(2.into());
        let (mut lo, mut hi) = f.isolating.clone();
        let lo_sign = eval_rational(&f.minpoly, &lo).signum();
        loop {
            let mid = (&lo + &hi) / &two;
            let half = (&hi - &lo) / &two;
            let radius = lo.abs().max(hi.abs());
            let val = eval_rational(&self.coords, &mid);
            // |a(x) - a(mid)| <= sum_i |c_i| i R^(i-1) |x - mid| on the interval.
            let mut lipschitz = BigRational::zero();
            let mut pow = BigRational::one();
            for (i, c) in self.coords.iter().enumerate().skip(1) {
                lipschitz += c.abs() * BigRational::from_integer(i.into()) * &pow;
                pow *= &radius;
            }
            if val.abs() > lipschitz * half {
                return val.cmp(&BigRational::zero());
            }
            let mid_sign = eval_rational(&f.minpoly, &mid).signum();
            if mid_sign == lo_sign {
                lo = mid;
            } else {
                hi = mid;
            }
        }
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let d = self.field.degree();
        // Column j of the multiplication matrix is self * theta^j.
        let mut cols = Vec::with_capacity(d);
        let mut basis = AlgebraicReal::from_integer(&self.field, 1);
        let theta = AlgebraicReal::generator(&self.field);
        for _ in 0..d {
            cols.push((self * &basis).coords);
            basis = &basis * &theta;
        }
        let mut rhs = vec![BigRational::zero(); d];
        rhs[0] = BigRational::one();
        let sol = solve_rational(cols, rhs)?;
        Some(AlgebraicReal {
            field: self.field.clone(),
            coords: sol,
        })
    }
}

impl PartialEq for AlgebraicReal {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords
    }
}

impl Eq for AlgebraicReal {}

impl Hash for AlgebraicReal {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coords.hash(state);
    }
}

impl fmt::Debug for AlgebraicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraicReal({:?} ~ {})", self.coords, self.to_f64())
    }
}

impl<'a> Add<&'a AlgebraicReal> for &'a AlgebraicReal {
    type Output = AlgebraicReal;

    fn add(self, rhs: &AlgebraicReal) -> AlgebraicReal {
        AlgebraicReal {
            field: self.field.clone(),
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl<'a> Sub<&'a AlgebraicReal> for &'a AlgebraicReal {
    type Output = AlgebraicReal;

    fn sub(self, rhs: &AlgebraicReal) -> AlgebraicReal {
        AlgebraicReal {
            field: self.field.clone(),
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl<'a> Mul<&'a AlgebraicReal> for &'a AlgebraicReal {
    type Output = AlgebraicReal;

    fn mul(self, rhs: &AlgebraicReal) -> AlgebraicReal {
        let d = self.field.degree();
        let mut prod = vec![BigRational::zero(); 2 * d - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coords.iter().enumerate() {
                prod[i + j] += a * b;
            }
        }
        AlgebraicReal {
            field: self.field.clone(),
            coords: self.field.reduce(prod),
        }
    }
}

impl Neg for &AlgebraicReal {
    type Output = AlgebraicReal;

    fn neg(self) -> AlgebraicReal {
        AlgebraicReal {
            field: self.field.clone(),
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

fn eval_rational<T>(coeffs: &[T], x: &BigRational) -> BigRational
where
    T: Clone + Into<BigRational>,
{
    coeffs
        .iter()
        .rev()
        .fold(BigRational::zero(), |acc, c| acc * x + c.clone().into())
}

/// Solves `A x = b` where `cols[j]` is column `j` of `A`.
fn solve_rational(cols: Vec<Vec<BigRational>>, rhs: Vec<BigRational>) -> Option<Vec<BigRational>> {
    let n = rhs.len();
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut row: Vec<_> = cols.iter().map(|c| c[i].clone()).collect();
            row.push(rhs[i].clone());
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let p = a[col][col].clone();
        for v in a[col].iter_mut() {
            *v /= &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in col..=n {
                    let t = &f * &a[col][c];
                    a[r][c] -= t;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n].clone()).collect())
}

/// Cyclotomic polynomial `Phi_n`, ascending integer coefficients.
fn cyclotomic(n: u64) -> Vec<BigInt> {
    // x^n - 1 divided by Phi_d for every proper divisor d.
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::one();
    for d in (1..n).filter(|d| n % d == 0) {
        num = exact_div_monic(&num, &cyclotomic(d));
    }
    num
}

fn exact_div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd].clone();
        for (i, di) in den.iter().enumerate() {
            rem[k + i] -= &c * di;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

/// Minimal polynomial of `2cos(2pi/n)` for `n >= 3`, obtained by writing
/// `x^-d Phi_n(x)` as a polynomial in `y = x + 1/x`.
fn two_cos_minpoly(n: u64) -> Vec<BigInt> {
    let phi = cyclotomic(n);
    let d = (phi.len() - 1) / 2;
    // C_k(y) = x^k + x^-k for k >= 1, as polynomials in y.
    let mut cheb: Vec<Vec<BigInt>> = vec![vec![BigInt::from(2)], vec![BigInt::zero(), BigInt::one()]];
    for k in 2..=d {
        let mut next = vec![BigInt::zero(); k + 1];
        for (i, c) in cheb[k - 1].iter().enumerate() {
            next[i + 1] += c;
        }
        for (i, c) in cheb[k - 2].iter().enumerate() {
            next[i] -= c;
        }
        cheb.push(next);
    }
    let mut out = vec![BigInt::zero(); d + 1];
    out[0] += &phi[d];
    for k in 1..=d {
        for (i, c) in cheb[k].iter().enumerate() {
            out[i] += &phi[d + k] * c;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn minimal_polynomials() {
        // 2cos(pi/5) is the golden ratio: y^2 - y - 1.
        assert_eq!(NumberField::with_conductor(5).minimal_polynomial(), ints(&[-1, -1, 1]));
        // 2cos(pi/4) = sqrt 2.
        assert_eq!(NumberField::with_conductor(4).minimal_polynomial(), ints(&[-2, 0, 1]));
        assert_eq!(NumberField::with_conductor(3).minimal_polynomial(), ints(&[-1, 1]));
        assert_eq!(NumberField::with_conductor(2).minimal_polynomial(), ints(&[0, 1]));
        assert_eq!(NumberField::with_conductor(7).degree(), 3);
        assert_eq!(NumberField::with_conductor(30).degree(), 8);
    }

    #[test]
    fn labels_choose_lcm_conductor() {
        assert_eq!(NumberField::for_labels([3, 5, 2]).conductor(), 5);
        assert_eq!(NumberField::for_labels([4, 3]).conductor(), 4);
        assert_eq!(NumberField::for_labels([3, 2]).conductor(), 1);
        assert_eq!(NumberField::for_labels([4, 6]).conductor(), 12);
    }

    #[test]
    fn two_cos_values_match_floats() {
        let f = NumberField::for_labels([4, 5, 6, 10]);
        for m in 1..=6u32 {
            if m >= 4 && f.conductor() % m != 0 {
                continue;
            }
            let x = AlgebraicReal::two_cos_pi_over(&f, m);
            let expect = 2.0 * (std::f64::consts::PI / m as f64).cos();
            assert!((x.to_f64() - expect).abs() < 1e-9, "m={m}");
        }
    }

    #[test]
    fn exact_signs_near_zero() {
        let f = NumberField::for_labels([5]);
        let phi = AlgebraicReal::generator(&f);
        // phi - 1.6180339887 > 0, phi - 1.6180339888 < 0.
        let a = BigRational::new(16180339887i64.into(), 10000000000i64.into());
        let b = BigRational::new(16180339888i64.into(), 10000000000i64.into());
        let da = &phi - &AlgebraicReal::from_rational(&f, a);
        let db = &phi - &AlgebraicReal::from_rational(&f, b);
        assert_eq!(da.signum(), Ordering::Greater);
        assert_eq!(db.signum(), Ordering::Less);
        // phi^2 - phi - 1 == 0 exactly.
        let z = &(&(&phi * &phi) - &phi) - &AlgebraicReal::from_integer(&f, 1);
        assert!(z.is_zero());
        assert_eq!(z.signum(), Ordering::Equal);
    }

    #[test]
    fn inverse_round_trips() {
        let f = NumberField::for_labels([7]);
        let t = AlgebraicReal::generator(&f);
        let x = &(&t * &t) - &AlgebraicReal::from_integer(&f, 3);
        let inv = x.inverse().unwrap();
        assert_eq!(&x * &inv, AlgebraicReal::from_integer(&f, 1));
        assert!(AlgebraicReal::zero(&f).inverse().is_none());
    }
}
