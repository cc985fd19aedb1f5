//! Weight labels for gl_m and f_m ∈ {sp_2m, so_2m}: ρ and κ, the shifted
//! action of S_m / H_m, the dominance, genericity and goodness predicates,
//! spectral points and Drinfeld polynomials.

mod group;

pub use group::SignedPermutation;

use serde::{Deserialize, Serialize};

use crate::qlinalg::{Poly, Rational};
use crate::tensor::{FormChoice, FormKind, SegmentShape};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algebra {
    Gl,
    Sp,
    So,
}

impl Algebra {
    pub fn form_kind(&self) -> Option<FormKind> {
        match self {
            Algebra::Gl => None,
            Algebra::Sp => Some(FormKind::Sp),
            Algebra::So => Some(FormKind::So),
        }
    }

    pub fn is_twisted(&self) -> bool {
        *self != Algebra::Gl
    }

    /// ρ_a for rank m (a is 1-based).
    pub fn rho(&self, m: usize, a: usize) -> Rational {
        match self {
            Algebra::Gl => Rational::new(m as i64 - 2 * a as i64 + 1, 2),
            Algebra::Sp => Rational::from_int(-(a as i64)),
            Algebra::So => Rational::from_int(1 - a as i64),
        }
    }
}

/// Dominance of a shifted weight given by its labels (the λ+ρ labels).
pub fn is_dominant(algebra: Algebra, labels: &[Rational]) -> bool {
    let m = labels.len();
    for a in 0..m {
        for b in a + 1..m {
            if (-(&labels[a] - &labels[b])).is_positive_integer() {
                return false;
            }
            if algebra.is_twisted() && (&labels[a] + &labels[b]).is_positive_integer() {
                return false;
            }
        }
        if algebra == Algebra::Sp && labels[a].is_positive_integer() {
            return false;
        }
    }
    true
}

/// A pair (λ, μ) together with n, the size of the matrices of the Yangian.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightPair {
    pub algebra: Algebra,
    pub n: usize,
    pub lambda: Vec<Rational>,
    pub mu: Vec<Rational>,
}

#[derive(Deserialize)]
struct WeightFile {
    algebra: Algebra,
    m: usize,
    n: usize,
    lambda: Vec<Rational>,
    mu: Vec<Rational>,
}

impl WeightPair {
    pub fn new(algebra: Algebra, n: usize, lambda: Vec<Rational>, mu: Vec<Rational>) -> Result<Self> {
        if lambda.len() != mu.len() {
            return Err(Error::InvalidShape(format!("λ has {} labels but μ has {}", lambda.len(), mu.len())));
        }
        if algebra == Algebra::Sp && n % 2 == 1 {
            return Err(Error::InvalidShape(format!("sp needs even n, got {n}")));
        }
        if n == 0 {
            return Err(Error::InvalidShape("n must be positive".into()));
        }
        Ok(WeightPair { algebra, n, lambda, mu })
    }

    /// Pair with given ν and shifted μ labels μ_a + ρ_a.
    pub fn from_nu_shifted_mu(algebra: Algebra, n: usize, nu: &[usize], mu_rho: &[Rational]) -> Result<Self> {
        let m = nu.len();
        let kappa = Self::kappa_of(algebra, n);
        let mu: Vec<Rational> = (0..m).map(|a| &mu_rho[a] - &algebra.rho(m, a + 1)).collect();
        let lambda = (0..m).map(|a| &mu[a] + &Rational::from_int(nu[a] as i64) - &kappa).collect();
        Self::new(algebra, n, lambda, mu)
    }

    /// Pair with given ν and shifted λ labels λ_a + ρ_a.
    pub fn from_nu_shifted_lambda(algebra: Algebra, n: usize, nu: &[usize], lambda_rho: &[Rational]) -> Result<Self> {
        let m = nu.len();
        let kappa = Self::kappa_of(algebra, n);
        let mu_rho: Vec<Rational> = (0..m).map(|a| &lambda_rho[a] - &Rational::from_int(nu[a] as i64) + &kappa).collect();
        Self::from_nu_shifted_mu(algebra, n, nu, &mu_rho)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let f: WeightFile = parse_json(s)?;
        if f.lambda.len() != f.m || f.mu.len() != f.m {
            return Err(Error::InvalidShape(format!("m = {} but {} λ and {} μ labels", f.m, f.lambda.len(), f.mu.len())));
        }
        Self::new(f.algebra, f.n, f.lambda, f.mu)
    }

    pub fn m(&self) -> usize {
        self.lambda.len()
    }

    fn kappa_of(algebra: Algebra, n: usize) -> Rational {
        match algebra {
            Algebra::Gl => Rational::zero(),
            _ => Rational::new(n as i64, 2),
        }
    }

    pub fn kappa(&self) -> Rational {
        Self::kappa_of(self.algebra, self.n)
    }

    pub fn rho(&self) -> Vec<Rational> {
        (1..=self.m()).map(|a| self.algebra.rho(self.m(), a)).collect()
    }

    pub fn form(&self) -> Option<FormChoice> {
        self.algebra.form_kind().map(|k| FormChoice::new(self.n, k).expect("validated at construction"))
    }

    /// λ_a + ρ_a
    pub fn lambda_rho(&self) -> Vec<Rational> {
        self.lambda.iter().zip(self.rho()).map(|(l, r)| l + &r).collect()
    }

    /// μ_a + ρ_a
    pub fn mu_rho(&self) -> Vec<Rational> {
        self.mu.iter().zip(self.rho()).map(|(l, r)| l + &r).collect()
    }

    /// ν = λ − μ (+ κ), as exact labels.
    pub fn nu_raw(&self) -> Vec<Rational> {
        let k = self.kappa();
        self.lambda.iter().zip(&self.mu).map(|(l, m)| l - m + &k).collect()
    }

    /// ν as positive integers ≤ n; fails otherwise.
    pub fn nu(&self) -> Result<Vec<usize>> {
        self.nu_raw()
            .iter()
            .map(|v| match v.to_i64() {
                Some(k) if k >= 1 && k as usize <= self.n && v.is_integer() => Ok(k as usize),
                _ => Err(Error::InvalidShape(format!("ν label {v} is not in 1..{}", self.n))),
            })
            .collect()
    }

    /// ν with every label in 1..n−1, as required for module constructions.
    pub fn shape(&self) -> Result<SegmentShape> {
        SegmentShape::for_module(self.nu()?, self.n)
    }

    /// t_a = μ_a + ρ_a + 1/2
    pub fn spectral_params(&self) -> Vec<Rational> {
        self.mu_rho().into_iter().map(|x| x + Rational::new(1, 2)).collect()
    }

    /// x_p = μ_a + ρ_a + 1/2 + ν_a − i over the segments.
    pub fn spectral_points(&self) -> Result<Vec<Rational>> {
        let nu = self.nu()?;
        let t = self.spectral_params();
        Ok(nu.iter().zip(&t).flat_map(|(&k, ta)| (1..=k).map(move |i| ta + &Rational::from_int((k - i) as i64))).collect())
    }

    pub fn is_generic(&self) -> bool {
        let mu = &self.mu;
        for a in 0..mu.len() {
            for b in a + 1..mu.len() {
                if (&mu[a] - &mu[b]).is_integer() {
                    return false;
                }
                if self.algebra.is_twisted() && (&mu[a] + &mu[b]).is_integer() {
                    return false;
                }
            }
            if self.algebra.is_twisted() && (&mu[a] * &Rational::from_int(2)).is_integer() {
                return false;
            }
        }
        true
    }

    /// λ + ρ dominant.
    pub fn is_dominant(&self) -> bool {
        is_dominant(self.algebra, &self.lambda_rho())
    }

    pub fn is_good(&self) -> Result<bool> {
        let nu = self.shape()?.nu().to_vec();
        if !self.is_dominant() {
            return Ok(false);
        }
        let lr = self.lambda_rho();
        let n = self.n;
        for a in 0..nu.len() {
            for b in a + 1..nu.len() {
                if lr[a] == lr[b] && nu[a] < nu[b] {
                    return Ok(false);
                }
                if self.algebra.is_twisted() && (&lr[a] + &lr[b]).is_zero() && nu[a] + nu[b] > n {
                    return Ok(false);
                }
            }
            if self.algebra == Algebra::Sp && lr[a].is_zero() && 2 * nu[a] > n {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// w∘λ and w∘μ simultaneously.
    pub fn shifted_action(&self, w: &SignedPermutation) -> Result<Self> {
        if w.m() != self.m() {
            return Err(Error::InvalidShape(format!("group element on {} letters applied to rank {}", w.m(), self.m())));
        }
        if self.algebra == Algebra::Gl && w.has_flips() {
            return Err(Error::FlipOnGl);
        }
        let rho = self.rho();
        let act = |v: &[Rational]| -> Vec<Rational> {
            let shifted: Vec<Rational> = v.iter().zip(&rho).map(|(x, r)| x + r).collect();
            w.act(&shifted).into_iter().zip(&rho).map(|(x, r)| x - r).collect()
        };
        Ok(WeightPair { algebra: self.algebra, n: self.n, lambda: act(&self.lambda), mu: act(&self.mu) })
    }

    /// Exhaustive search of the orbit for a good pair.
    pub fn find_good_in_orbit(&self) -> Result<(SignedPermutation, WeightPair)> {
        self.shape()?;
        for w in SignedPermutation::enumerate(self.m(), self.algebra.is_twisted())? {
            let p = self.shifted_action(&w)?;
            if p.shape().is_ok() && p.is_good()? {
                return Ok((w, p));
            }
        }
        Err(Error::NoGoodPair)
    }

    /// P_i(x) = ∏_{ν_a = i} (x − μ_a − ρ_a), i = 1..n−1.
    pub fn drinfeld_p(&self) -> Result<Vec<Poly>> {
        if self.algebra != Algebra::Gl {
            return Err(Error::Precondition("Drinfeld P polynomials belong to gl pairs".into()));
        }
        let nu = self.shape()?.nu().to_vec();
        let mr = self.mu_rho();
        Ok((1..self.n)
            .map(|i| {
                nu.iter().zip(&mr).filter(|(&k, _)| k == i).fold(Poly::one(), |acc, (_, c)| &acc * &Poly::linear(-c.clone(), Rational::one()))
            })
            .collect())
    }

    /// Q_i(x) = ∏_{ν_a = i} (x + μ_a + ρ_a) · ∏_{ν_a = n−i} (x − μ_a − ρ_a), i = 1..⌊n/2⌋.
    pub fn drinfeld_q(&self) -> Result<Vec<Poly>> {
        if self.algebra == Algebra::Gl {
            return Err(Error::Precondition("Drinfeld Q polynomials belong to sp/so pairs".into()));
        }
        let nu = self.shape()?.nu().to_vec();
        let mr = self.mu_rho();
        let n = self.n;
        Ok((1..=n / 2)
            .map(|i| {
                let mut q = Poly::one();
                for (&k, c) in nu.iter().zip(&mr) {
                    if k == i {
                        q = &q * &Poly::linear(c.clone(), Rational::one());
                    }
                    if k == n - i {
                        q = &q * &Poly::linear(-c.clone(), Rational::one());
                    }
                }
                q
            })
            .collect())
    }
}

fn parse_json<T: serde::de::DeserializeOwned>(s: &str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::InvalidShape(format!("malformed weight descriptor: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(a, b)
    }

    fn gl(n: usize, lambda: &[Rational], mu: &[Rational]) -> WeightPair {
        WeightPair::new(Algebra::Gl, n, lambda.to_vec(), mu.to_vec()).unwrap()
    }

    #[test]
    fn rho_labels() {
        assert_eq!(Algebra::Gl.rho(2, 1), q(1, 2));
        assert_eq!(Algebra::Gl.rho(2, 2), q(-1, 2));
        assert_eq!(Algebra::Gl.rho(1, 1), q(0, 1));
        assert_eq!(Algebra::Sp.rho(3, 2), q(-2, 1));
        assert_eq!(Algebra::So.rho(3, 1), q(0, 1));
    }

    #[test]
    fn shifted_action_examples() {
        let p = gl(3, &[q(1, 1), q(0, 1)], &[q(0, 1), q(-1, 1)]);
        let s1 = SignedPermutation::new(vec![1, 0], vec![false, false]).unwrap();
        assert_eq!(p.shifted_action(&s1).unwrap().lambda, vec![q(-1, 1), q(2, 1)]);
        assert_eq!(p.shifted_action(&SignedPermutation::identity(2)).unwrap(), p);
        let flip = SignedPermutation::new(vec![0], vec![true]).unwrap();
        let c = q(5, 3);
        let sp = WeightPair::new(Algebra::Sp, 2, vec![c.clone()], vec![c.clone() - q(0, 1)]).unwrap();
        assert_eq!(sp.shifted_action(&flip).unwrap().lambda, vec![q(2, 1) - c]);
        assert_eq!(p.shifted_action(&flip.clone()).unwrap_err(), Error::InvalidShape("group element on 1 letters applied to rank 2".into()));
        let f2 = SignedPermutation::new(vec![0, 1], vec![true, false]).unwrap();
        assert_eq!(p.shifted_action(&f2).unwrap_err(), Error::FlipOnGl);
    }

    #[test]
    fn predicates() {
        assert!(gl(2, &[q(1, 3), q(0, 1)], &[q(1, 3), q(0, 1)]).is_generic());
        assert!(!gl(2, &[q(1, 1), q(0, 1)], &[q(1, 1), q(0, 1)]).is_generic());
        assert!(!WeightPair::new(Algebra::Sp, 2, vec![q(1, 2)], vec![q(1, 2)]).unwrap().is_generic());
        assert!(is_dominant(Algebra::Gl, &[q(0, 1), q(0, 1)]));
        assert!(!is_dominant(Algebra::Gl, &[q(0, 1), q(1, 1)]));
        assert!(!is_dominant(Algebra::Sp, &[q(1, 1)]));
        assert!(is_dominant(Algebra::So, &[q(1, 1)]));
    }

    #[test]
    fn goodness() {
        let c = q(1, 3);
        let good = WeightPair::from_nu_shifted_lambda(Algebra::Gl, 3, &[2, 1], &[c.clone(), c.clone()]).unwrap();
        assert!(good.is_good().unwrap());
        let bad = WeightPair::from_nu_shifted_lambda(Algebra::Gl, 3, &[1, 2], &[c.clone(), c.clone()]).unwrap();
        assert!(!bad.is_good().unwrap());
        // 2ν_1 > n with λ_1 + ρ_1 = 0; ν_1 = 2 is not a module label for n = 2
        let sp = WeightPair::from_nu_shifted_lambda(Algebra::Sp, 4, &[3], &[q(0, 1)]).unwrap();
        assert!(!sp.is_good().unwrap());
        let sp2 = WeightPair::from_nu_shifted_lambda(Algebra::Sp, 2, &[2], &[q(0, 1)]).unwrap();
        assert!(sp2.is_good().is_err());
        let so = WeightPair::from_nu_shifted_lambda(Algebra::So, 4, &[2, 2], &[q(1, 2), q(-1, 2)]).unwrap();
        assert!(so.is_good().unwrap());
    }

    #[test]
    fn spectral() {
        let p = WeightPair::from_nu_shifted_mu(Algebra::Gl, 2, &[1], &[q(0, 1)]).unwrap();
        assert_eq!(p.spectral_points().unwrap(), vec![q(1, 2)]);
        let p = gl(3, &[q(2, 1), q(1, 1)], &[q(0, 1), q(0, 1)]);
        assert_eq!(p.spectral_points().unwrap(), vec![q(2, 1), q(1, 1), q(0, 1)]);
    }

    #[test]
    fn orbit_search() {
        let c = q(1, 3);
        let bad = WeightPair::from_nu_shifted_lambda(Algebra::Gl, 3, &[1, 2], &[c.clone(), c]).unwrap();
        let (w, p) = bad.find_good_in_orbit().unwrap();
        assert_eq!(w.perm(), &[1, 0]);
        assert_eq!(p.nu().unwrap(), vec![2, 1]);
        let p = WeightPair::from_nu_shifted_lambda(Algebra::Gl, 3, &[1, 1], &[q(0, 1), q(1, 1)]).unwrap();
        let (w, g) = p.find_good_in_orbit().unwrap();
        assert_eq!(w.perm(), &[1, 0]);
        assert_eq!(g.lambda_rho(), vec![q(1, 1), q(0, 1)]);
        let sp = WeightPair::from_nu_shifted_lambda(Algebra::Sp, 4, &[1], &[q(2, 1)]).unwrap();
        let (w, g) = sp.find_good_in_orbit().unwrap();
        assert!(w.has_flips());
        assert_eq!(g.lambda_rho(), vec![q(-2, 1)]);
        assert_eq!(g.nu().unwrap(), vec![3]);
    }

    #[test]
    fn drinfeld_examples() {
        let p = WeightPair::new(Algebra::Gl, 3, vec![], vec![]).unwrap();
        assert!(p.drinfeld_p().unwrap().iter().all(|x| *x == Poly::one()));
        let p = gl(3, &[q(1, 1), q(2, 1)], &[q(0, 1), q(0, 1)]);
        assert_eq!(p.drinfeld_p().unwrap(), vec!["-1/2 + 1*t".parse().unwrap(), "1/2 + 1*t".parse().unwrap()]);
        let c = q(2, 7);
        let sp = WeightPair::from_nu_shifted_mu(Algebra::Sp, 2, &[1], &[c.clone() - q(1, 1)]).unwrap();
        let q1 = &sp.drinfeld_q().unwrap()[0];
        let cm1 = c - q(1, 1);
        assert_eq!(*q1, Poly::from_coeffs(vec![-(&cm1 * &cm1), q(0, 1), q(1, 1)]));
    }

    #[test]
    fn json_descriptor() {
        let p = WeightPair::from_json(r#"{"algebra":"so","m":1,"n":4,"lambda":["2"],"mu":["0"]}"#).unwrap();
        assert_eq!(p.nu().unwrap(), vec![4]);
        assert!(WeightPair::from_json(r#"{"algebra":"gl","m":2,"n":3,"lambda":["1"],"mu":["0"]}"#).is_err());
        assert!(WeightPair::from_json("{").is_err());
    }
}
