//! Weight systems of irreducible representations and the Hodge numbers cut out by a
//! grading element.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rational::{q, to_int, Q};
use crate::root_system::{GradingElement, RootSystem};

/// A dominant integral weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HighestWeight {
    pub omega_coords: Vec<i64>,
}

impl HighestWeight {
    pub fn new(omega_coords: Vec<i64>) -> Result<Self> {
        if omega_coords.iter().any(|&x| x < 0) {
            return Err(Error::InvalidWeight(format!("{omega_coords:?} is not dominant")));
        }
        Ok(HighestWeight { omega_coords })
    }

    /// The fundamental weight `omega_i` (1-based).
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i - 1] = 1;
        HighestWeight { omega_coords: v }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weight {
    /// Coordinates in the fundamental weights.
    pub omega: Vec<i64>,
    /// Coordinates in the simple roots; rational in general.
    pub root: Vec<Q>,
    pub mult: u64,
}

impl Weight {
    /// `mu(E)`.
    pub fn pair(&self, e: &GradingElement) -> Q {
        e.pair_q(&self.root)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSystem {
    pub entries: Vec<Weight>,
    pub dim: u64,
}

/// Hodge numbers `h^{p,n-p}` for `p` from `p_min` upward.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HodgeNumbers {
    pub n: i64,
    pub p_min: i64,
    pub h: Vec<u64>,
    /// `f[k] = f^{p_min + k} = sum_{p >= p_min + k} h^{p,n-p}`.
    pub f: Vec<u64>,
}

impl HodgeNumbers {
    pub fn get(&self, p: i64) -> u64 {
        let k = p - self.p_min;
        if k < 0 || k as usize >= self.h.len() {
            0
        } else {
            self.h[k as usize]
        }
    }
}

/// Symmetric form on weights in omega-coordinates, scaled to integers.
struct OmegaForm {
    g: Vec<Vec<i64>>,
}

impl OmegaForm {
    fn new(rs: &RootSystem) -> Self {
        let r = rs.rank();
        let cinv = rs.inverse_cartan();
        let gram = rs.gram();
        let mut gq = vec![vec![Q::zero(); r]; r];
        for i in 0..r {
            for j in 0..r {
                let mut s = Q::zero();
                for k in 0..r {
                    for l in 0..r {
                        if gram[k][l] != 0 {
                            s += &cinv[i][k] * q(gram[k][l]) * &cinv[j][l];
                        }
                    }
                }
                gq[i][j] = s;
            }
        }
        let mut den = num_bigint::BigInt::one();
        for row in &gq {
            for x in row {
                den = den.lcm(x.denom());
            }
        }
        let den = Q::from_integer(den);
        let g = gq
            .iter()
            .map(|row| row.iter().map(|x| to_int(&(x * &den)).unwrap()).collect())
            .collect();
        OmegaForm { g }
    }

    fn inner(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut s = 0;
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                s += ai * self.g[i][j] * bj;
            }
        }
        s
    }
}

/// Weyl dimension formula.
pub fn weyl_dimension(rs: &RootSystem, lambda: &HighestWeight) -> Q {
    let r = rs.rank();
    let mut num = Q::one();
    let mut den = Q::one();
    for a in 0..rs.num_positive() {
        let root = rs.root(a);
        let na = rs.norm(a);
        // <mu, alpha^vee> = sum_i mu_i a_i |sigma_i|^2 / |alpha|^2
        let mut lr = Q::zero();
        let mut rho = Q::zero();
        for i in 0..r {
            if root[i] == 0 {
                continue;
            }
            let c = q(root[i] * rs.norm(i));
            lr += &c * q(lambda.omega_coords[i] + 1);
            rho += c;
        }
        num *= lr / q(na);
        den *= rho / q(na);
    }
    num / den
}

fn reflect(rs: &RootSystem, i: usize, mu: &[i64]) -> Vec<i64> {
    let c = rs.cartan_matrix();
    let k = mu[i];
    mu.iter().enumerate().map(|(j, &m)| m - k * c[i][j]).collect()
}

fn dominant_rep(rs: &RootSystem, mu: &[i64]) -> Vec<i64> {
    let mut mu = mu.to_vec();
    while let Some(i) = mu.iter().position(|&x| x < 0) {
        mu = reflect(rs, i, &mu);
    }
    mu
}

/// All weights of the irreducible representation with highest weight `lambda`, with
/// multiplicities from Freudenthal's formula. Fails if the Weyl dimension exceeds `cap`.
pub fn weight_system(rs: &RootSystem, lambda: &HighestWeight, cap: usize) -> Result<WeightSystem> {
    let r = rs.rank();
    if lambda.omega_coords.len() != r {
        return Err(Error::InvalidWeight(format!(
            "expected {r} coordinates, got {}",
            lambda.omega_coords.len()
        )));
    }
    if lambda.omega_coords.iter().any(|&x| x < 0) {
        return Err(Error::InvalidWeight("highest weight must be dominant".into()));
    }
    let dim_q = weyl_dimension(rs, lambda);
    let dim = dim_q
        .to_integer()
        .to_u128()
        .ok_or_else(|| Error::Internal("Weyl dimension overflow".into()))?;
    if dim > cap as u128 {
        return Err(Error::WeightCapExceeded { dim, cap });
    }

    let pos_omega: Vec<Vec<i64>> =
        (0..rs.num_positive()).map(|a| rs.root_to_omega(rs.root(a))).collect();
    let heights: Vec<i64> = (0..rs.num_positive()).map(|a| rs.height(a)).collect();

    // Dominant weights below lambda, reached through chains of dominant weights.
    let lam = lambda.omega_coords.clone();
    let mut depth: HashMap<Vec<i64>, i64> = HashMap::from([(lam.clone(), 0)]);
    let mut queue = VecDeque::from([lam.clone()]);
    while let Some(mu) = queue.pop_front() {
        let d = depth[&mu];
        for (a, ao) in pos_omega.iter().enumerate() {
            let nu: Vec<i64> = mu.iter().zip(ao).map(|(x, y)| x - y).collect();
            if nu.iter().all(|&x| x >= 0) && !depth.contains_key(&nu) {
                depth.insert(nu.clone(), d + heights[a]);
                queue.push_back(nu);
            }
        }
    }
    let mut dominant: Vec<(Vec<i64>, i64)> = depth.into_iter().collect();
    dominant.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| b.0.cmp(&a.0)));

    let form = OmegaForm::new(rs);
    let rho = vec![1i64; r];
    let shift = |mu: &[i64]| -> Vec<i64> { mu.iter().zip(&rho).map(|(a, b)| a + b).collect() };
    let lr = shift(&lam);
    let lr_norm = form.inner(&lr, &lr);

    let mut mult: HashMap<Vec<i64>, u64> = HashMap::new();
    for (mu, _) in &dominant {
        if *mu == lam {
            mult.insert(mu.clone(), 1);
            continue;
        }
        let mut sum: i64 = 0;
        for ao in &pos_omega {
            let mut nu: Vec<i64> = mu.iter().zip(ao).map(|(x, y)| x + y).collect();
            while let Some(&m) = mult.get(&dominant_rep(rs, &nu)) {
                sum += m as i64 * form.inner(&nu, ao);
                for (x, y) in nu.iter_mut().zip(ao) {
                    *x += y;
                }
            }
        }
        let mr = shift(mu);
        let den = lr_norm - form.inner(&mr, &mr);
        let m = Q::new((2 * sum).into(), den.into());
        let m = to_int(&m)
            .filter(|&m| m > 0)
            .ok_or_else(|| Error::Internal(format!("non-integral multiplicity at {mu:?}")))?;
        mult.insert(mu.clone(), m as u64);
    }

    let mut entries = Vec::new();
    for (mu, _) in &dominant {
        let m = mult[mu];
        let mut seen: HashSet<Vec<i64>> = HashSet::from([mu.clone()]);
        let mut orbit = vec![mu.clone()];
        let mut head = 0;
        while head < orbit.len() {
            for i in 0..r {
                if orbit[head][i] == 0 {
                    continue;
                }
                let nu = reflect(rs, i, &orbit[head]);
                if seen.insert(nu.clone()) {
                    orbit.push(nu);
                }
            }
            head += 1;
        }
        for w in orbit {
            let root = rs.omega_to_root(&w);
            entries.push(Weight { omega: w, root, mult: m });
        }
    }
    entries.sort_by(|a, b| b.omega.cmp(&a.omega));
    let total: u64 = entries.iter().map(|w| w.mult).sum();
    if total as u128 != dim {
        return Err(Error::Internal(format!("weight system has dimension {total}, expected {dim}")));
    }
    Ok(WeightSystem { entries, dim: total })
}

/// Weights of the adjoint representation: every root once and zero with multiplicity rank.
pub fn adjoint_weight_system(rs: &RootSystem) -> WeightSystem {
    let r = rs.rank();
    let mut entries: Vec<Weight> = rs
        .roots()
        .iter()
        .map(|a| Weight {
            omega: rs.root_to_omega(a),
            root: a.iter().map(|&x| q(x)).collect(),
            mult: 1,
        })
        .collect();
    entries.push(Weight { omega: vec![0; r], root: vec![Q::zero(); r], mult: r as u64 });
    let dim = (rs.num_roots() + r) as u64;
    WeightSystem { entries, dim }
}

/// `h^{p,n-p} = sum of mult(mu)` over weights with `mu(E) = p - n/2`.
pub fn hodge_numbers(ws: &WeightSystem, e: &GradingElement, n: i64) -> Result<HodgeNumbers> {
    let half = Q::new(n.into(), 2.into());
    let mut by_p: BTreeMap<i64, u64> = BTreeMap::new();
    for w in &ws.entries {
        let p = w.pair(e) + &half;
        let p = to_int(&p).ok_or_else(|| {
            Error::NonIntegral(format!("weight {:?} has mu(E) + n/2 = {p}", w.omega))
        })?;
        *by_p.entry(p).or_insert(0) += w.mult;
    }
    let p_min = *by_p.keys().next().unwrap_or(&0);
    let p_max = *by_p.keys().next_back().unwrap_or(&0);
    let h: Vec<u64> = (p_min..=p_max).map(|p| by_p.get(&p).copied().unwrap_or(0)).collect();
    let mut f = vec![0u64; h.len()];
    let mut acc = 0;
    for k in (0..h.len()).rev() {
        acc += h[k];
        f[k] = acc;
    }
    Ok(HodgeNumbers { n, p_min, h, f })
}

/// The weight `n = 2 max mu(E)`, the smallest making every `p` nonnegative.
pub fn natural_weight(ws: &WeightSystem, e: &GradingElement) -> Result<i64> {
    let max = ws
        .entries
        .iter()
        .map(|w| w.pair(e))
        .max()
        .unwrap_or_else(Q::zero);
    to_int(&(max * q(2))).ok_or_else(|| Error::NonIntegral("2 max mu(E)".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::CartanType;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(CartanType::parse(s).unwrap())
    }

    #[test]
    fn a1_adjoint_via_freudenthal() {
        let r = rs("A1");
        let ws = weight_system(&r, &HighestWeight::new(vec![2]).unwrap(), 1000).unwrap();
        let w: Vec<(Vec<i64>, u64)> = ws.entries.iter().map(|w| (w.omega.clone(), w.mult)).collect();
        assert_eq!(w, vec![(vec![2], 1), (vec![0], 1), (vec![-2], 1)]);
    }

    #[test]
    fn multiplicity_of_zero_in_adjoint_g2() {
        let r = rs("G2");
        // adjoint of G2 has highest weight omega_2 (sigma_2 long)
        let ws = weight_system(&r, &HighestWeight::fundamental(2, 2), 1000).unwrap();
        assert_eq!(ws.dim, 14);
        let zero = ws.entries.iter().find(|w| w.omega == vec![0, 0]).unwrap();
        assert_eq!(zero.mult, 2);
    }

    #[test]
    fn standard_dimensions() {
        for (t, i, d) in [("G2", 1, 7), ("F4", 4, 26), ("B2", 1, 5), ("C4", 2, 27), ("E6", 1, 27)] {
            let r = rs(t);
            let ws = weight_system(&r, &HighestWeight::fundamental(r.rank(), i), 100_000).unwrap();
            assert_eq!(ws.dim, d, "{t} omega_{i}");
        }
    }

    #[test]
    fn cap_is_enforced() {
        let r = rs("F4");
        let err = weight_system(&r, &HighestWeight::fundamental(4, 4), 10).unwrap_err();
        assert_eq!(err, Error::WeightCapExceeded { dim: 26, cap: 10 });
    }

    #[test]
    fn b2_adjoint_grading() {
        let r = rs("B2");
        let h = hodge_numbers(&adjoint_weight_system(&r), &GradingElement::from_ints(&[1, 0]), 0)
            .unwrap();
        assert_eq!(h.get(1), 3);
        assert_eq!(h.get(0), 4);
    }

    #[test]
    fn non_integral_placement_is_an_error() {
        let r = rs("B2");
        // the spin representation has half-integral S^1 values
        let ws = weight_system(&r, &HighestWeight::fundamental(2, 2), 100).unwrap();
        assert!(hodge_numbers(&ws, &GradingElement::from_ints(&[1, 0]), 2).is_err());
    }
}
