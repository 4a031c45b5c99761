//! Classification of horizontal SL(2)s, equivalently R-split polarized mixed Hodge
//! structures, on a Mumford-Tate domain given by a grading element `E`.
//!
//! The classes are the `W^0`-orbits of Levi subsystems `l` on which `E` restricts to a
//! distinguished element. Each class carries `Z = 2 pi_l(E)`, `zeta = E - Z/2`, the
//! codimension of its polarized orbit and the real forms of the factors of `l`.

use std::collections::{BTreeMap, HashSet};

use num_traits::{One, Zero};

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::rational::{q, solve, to_int, Q};
use crate::real_forms::component_real_form;
use crate::rep_weights::{HodgeNumbers, WeightSystem};
use crate::root_system::{
    enumerate_levis, enumerate_weyl, root_set_orbit, CartanType, GradingElement, LeviSubsystem,
    RootSet, RootSystem,
};

/// A Mumford-Tate domain: a simple type and a grading element `E = sum_{i in I} S^i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MTDomainSpec {
    pub ctype: CartanType,
    pub grading_coeffs: Vec<i64>,
}

impl MTDomainSpec {
    pub fn new(ctype: CartanType, grading_coeffs: Vec<i64>) -> Result<Self> {
        if grading_coeffs.len() != ctype.rank {
            return Err(Error::InvalidGrading(format!(
                "{} needs {} coefficients, got {}",
                ctype,
                ctype.rank,
                grading_coeffs.len()
            )));
        }
        if grading_coeffs.iter().any(|&c| c != 0 && c != 1) {
            return Err(Error::InvalidGrading("coefficients must be 0 or 1".into()));
        }
        if grading_coeffs.iter().all(|&c| c == 0) {
            return Err(Error::InvalidGrading("at least one coefficient must be 1".into()));
        }
        Ok(MTDomainSpec { ctype, grading_coeffs })
    }

    /// `E = sum_{i in idx} S^i` with 1-based indices.
    pub fn from_indices(ctype: CartanType, idx: &[usize]) -> Result<Self> {
        let mut c = vec![0; ctype.rank];
        for &i in idx {
            if i == 0 || i > ctype.rank {
                return Err(Error::InvalidGrading(format!("index {i} out of range 1..={}", ctype.rank)));
            }
            c[i - 1] = 1;
        }
        MTDomainSpec::new(ctype, c)
    }

    /// The Borel domain, every coefficient 1.
    pub fn borel(ctype: CartanType) -> Self {
        MTDomainSpec { ctype, grading_coeffs: vec![1; ctype.rank] }
    }

    pub fn grading_element(&self) -> GradingElement {
        GradingElement::from_ints(&self.grading_coeffs)
    }

    /// 1-based indices `I` with `sigma_i(E) = 1`.
    pub fn indices(&self) -> Vec<usize> {
        (0..self.grading_coeffs.len()).filter(|&i| self.grading_coeffs[i] == 1).map(|i| i + 1).collect()
    }
}

/// One `W^0`-class of the classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SL2Class {
    /// Canonical representative: the smallest root set in the `W^0`-orbit.
    pub levi: LeviSubsystem,
    pub z: GradingElement,
    pub zeta: GradingElement,
    pub codim: usize,
    /// Real forms of the simple factors of `l`, largest rank first.
    pub levi_real_form: Vec<String>,
    pub is_hodge_tate: bool,
}

/// Multiplicities of the Deligne splitting, keyed by `(p, q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeligneDiamond {
    pub n: i64,
    pub cells: BTreeMap<(i64, i64), u64>,
}

impl DeligneDiamond {
    pub fn total(&self) -> u64 {
        self.cells.values().sum()
    }

    pub fn is_diagonal(&self) -> bool {
        self.cells.keys().all(|(p, q)| p == q)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ClassifyOptions {
    pub limits: Limits,
    /// Keep the class of the empty Levi (the trivial SL(2)).
    pub include_trivial: bool,
}

/// Splits `E = Z/2 + zeta` with `Z` in the span of the coroots of `l` and `zeta`
/// vanishing on `l`.
pub fn central_split(
    rs: &RootSystem,
    e: &GradingElement,
    l: &LeviSubsystem,
) -> Result<(GradingElement, GradingElement)> {
    let base = &l.base;
    let k = base.len();
    let m: Vec<Vec<Q>> = (0..k)
        .map(|j| (0..k).map(|i| q(rs.cartan_int(base[j], base[i]))).collect())
        .collect();
    let rhs: Vec<Q> = base.iter().map(|&b| e.pair(rs.root(b)) * q(2)).collect();
    let x = solve(&m, &rhs).ok_or_else(|| Error::Internal("singular Levi Cartan matrix".into()))?;
    let mut z = GradingElement::zero(rs.rank());
    for (xi, &b) in x.iter().zip(base) {
        z = z.add(&rs.coroot(b).scale(xi));
    }
    let zeta = e.sub(&z.scale(&Q::new(1.into(), 2.into())));
    Ok((z, zeta))
}

fn count_distinguished(rs: &RootSystem, e: &GradingElement, roots: &RootSet, rank: usize) -> bool {
    let (mut zeros, mut ones) = (0usize, 0usize);
    for a in roots.iter() {
        let v = e.pair(rs.root(a));
        if v.is_zero() {
            zeros += 1;
        } else if v.is_one() {
            ones += 1;
        }
    }
    rank + zeros == ones
}

/// `rank l + #{alpha in l : alpha(E) = 0} = #{alpha in l : alpha(E) = 1}`.
pub fn is_distinguished(rs: &RootSystem, e: &GradingElement, l: &LeviSubsystem) -> bool {
    count_distinguished(rs, e, &l.roots, l.rank())
}

/// `#{alpha : alpha(E) >= 1, alpha(Z) - alpha(E) >= 1}`.
pub fn orbit_codim(rs: &RootSystem, e: &GradingElement, z: &GradingElement) -> usize {
    let one = Q::one();
    rs.roots()
        .iter()
        .filter(|a| {
            let ve = e.pair(a);
            ve >= one && z.pair(a) - &ve >= one
        })
        .count()
}

/// Real-form names of the simple factors of `l`.
pub fn levi_real_form_labels(
    rs: &RootSystem,
    e: &GradingElement,
    l: &LeviSubsystem,
) -> Result<Vec<String>> {
    l.components
        .iter()
        .map(|c| component_real_form(rs, e, &l.roots, c).map(|lab| lab.name))
        .collect()
}

/// Builds the class record for a (canonical) Levi.
pub fn class_for_levi(rs: &RootSystem, e: &GradingElement, levi: LeviSubsystem) -> Result<SL2Class> {
    let (z, zeta) = if levi.is_empty() {
        (GradingElement::zero(rs.rank()), e.clone())
    } else {
        central_split(rs, e, &levi)?
    };
    let codim = orbit_codim(rs, e, &z);
    let levi_real_form = levi_real_form_labels(rs, e, &levi)?;
    let is_hodge_tate = zeta.is_zero();
    Ok(SL2Class { levi, z, zeta, codim, levi_real_form, is_hodge_tate })
}

/// Classification over an already built root system.
pub fn classify_in(rs: &RootSystem, spec: &MTDomainSpec, opts: &ClassifyOptions) -> Result<Vec<SL2Class>> {
    if spec.ctype != rs.cartan_type() {
        return Err(Error::InvalidGrading(format!("spec is for {}, root system is {}", spec.ctype, rs.cartan_type())));
    }
    let e = spec.grading_element();
    let weyl = enumerate_weyl(rs, opts.limits.weyl_cap)?;
    let levis = enumerate_levis(rs, &weyl)?;
    let w0_gens: Vec<usize> = (0..rs.rank()).filter(|&i| spec.grading_coeffs[i] == 0).collect();

    let mut done: HashSet<RootSet> = HashSet::new();
    let mut canon: Vec<RootSet> = Vec::new();
    for l in &levis {
        if l.is_empty() && !opts.include_trivial {
            continue;
        }
        if done.contains(&l.roots) || !is_distinguished(rs, &e, l) {
            continue;
        }
        let orbit = root_set_orbit(rs, &l.roots, &w0_gens);
        let min = *orbit.iter().min().unwrap();
        done.extend(orbit);
        canon.push(min);
    }

    let mut out = canon
        .into_iter()
        .map(|s| class_for_levi(rs, &e, LeviSubsystem::from_roots(rs, s)?))
        .collect::<Result<Vec<_>>>()?;
    out.sort_by(|a, b| a.codim.cmp(&b.codim).then_with(|| a.levi.roots.cmp(&b.levi.roots)));
    Ok(out)
}

/// One class per `W^0`-orbit of Levis on which `E` is distinguished, sorted by codimension
/// and then by canonical root set.
pub fn classify(spec: &MTDomainSpec, opts: &ClassifyOptions) -> Result<Vec<SL2Class>> {
    let rs = RootSystem::new(spec.ctype);
    classify_in(&rs, spec, opts)
}

/// Deligne splitting dimensions: `I^{p,q}` collects the weights with `mu(E) = p - n/2` and
/// `mu(Z) = p + q - n`.
pub fn deligne_diamond(
    e: &GradingElement,
    z: &GradingElement,
    ws: &WeightSystem,
    n: i64,
) -> Result<DeligneDiamond> {
    let half = Q::new(n.into(), 2.into());
    let mut cells = BTreeMap::new();
    for w in &ws.entries {
        let p = to_int(&(w.pair(e) + &half))
            .ok_or_else(|| Error::NonIntegral(format!("mu(E) + n/2 for {:?}", w.omega)))?;
        let pq = to_int(&(w.pair(z) + q(n)))
            .ok_or_else(|| Error::NonIntegral(format!("mu(Z) for {:?}", w.omega)))?;
        *cells.entry((p, pq - p)).or_insert(0) += w.mult;
    }
    Ok(DeligneDiamond { n, cells })
}

/// The first class, in classification order, with `zeta = 0`.
pub fn admits_hodge_tate(classes: &[SL2Class]) -> Option<&SL2Class> {
    classes.iter().find(|c| c.is_hodge_tate)
}

/// Number of codimension-one orbits predicted by the grading: `|I|`.
pub fn codim1_count(spec: &MTDomainSpec) -> usize {
    spec.grading_coeffs.iter().filter(|&&c| c == 1).count()
}

/// `h^{n,0} <= h^{n-1,1} <= ... <= h^{n-m,m}` with `m = floor(n/2)`.
pub fn period_domain_ht_check(h: &HodgeNumbers) -> bool {
    let n = h.n;
    let m = n.div_euclid(2);
    let seq: Vec<u64> = (0..=m).map(|k| h.get(n - k)).collect();
    seq.windows(2).all(|w| w[0] <= w[1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep_weights::hodge_numbers;

    fn spec(t: &str, idx: &[usize]) -> MTDomainSpec {
        MTDomainSpec::from_indices(CartanType::parse(t).unwrap(), idx).unwrap()
    }

    fn codims(t: &str, idx: &[usize]) -> Vec<usize> {
        classify(&spec(t, idx), &ClassifyOptions::default()).unwrap().iter().map(|c| c.codim).collect()
    }

    #[test]
    fn b2_gradings() {
        assert_eq!(codims("B2", &[1]), vec![1, 3]);
        assert_eq!(codims("B2", &[2]), vec![1]);
        assert_eq!(codims("B2", &[1, 2]), vec![1, 1, 4]);
    }

    #[test]
    fn a1_upper_half_plane() {
        let c = classify(&spec("A1", &[1]), &ClassifyOptions::default()).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].codim, 1);
        assert!(c[0].is_hodge_tate);
    }

    #[test]
    fn trivial_class_is_opt_in() {
        let opts = ClassifyOptions { include_trivial: true, ..Default::default() };
        let c = classify(&spec("B2", &[1]), &opts).unwrap();
        assert_eq!(c.len(), 3);
        assert_eq!(c[0].codim, 0);
        assert!(c[0].levi.is_empty());
    }

    #[test]
    fn b2_central_split() {
        let rs = RootSystem::new(CartanType::parse("B2").unwrap());
        let e = GradingElement::from_ints(&[1, 0]);
        let l = LeviSubsystem::generated_by(&rs, &[rs.index_of(&[1, 1]).unwrap()]).unwrap();
        let (z, zeta) = central_split(&rs, &e, &l).unwrap();
        assert_eq!(z, GradingElement::from_ints(&[2, 0]));
        assert!(zeta.is_zero());
    }

    #[test]
    fn period_domain_check() {
        let mk = |h: Vec<u64>, n| HodgeNumbers { n, p_min: 0, f: vec![], h };
        assert!(period_domain_ht_check(&mk(vec![1, 3, 1], 2)));
        assert!(!period_domain_ht_check(&mk(vec![2, 1, 2], 2)));
        assert!(period_domain_ht_check(&mk(vec![1, 1], 1)));
    }

    #[test]
    fn b2_diamond() {
        let rs = RootSystem::new(CartanType::parse("B2").unwrap());
        let s = spec("B2", &[1]);
        let c = classify_in(&rs, &s, &ClassifyOptions::default()).unwrap();
        let ws = crate::rep_weights::weight_system(
            &rs,
            &crate::rep_weights::HighestWeight::fundamental(2, 1),
            100,
        )
        .unwrap();
        let e = s.grading_element();
        assert_eq!(hodge_numbers(&ws, &e, 2).unwrap().h, vec![1, 3, 1]);
        let d = deligne_diamond(&e, &c[0].z, &ws, 2).unwrap();
        let cells: Vec<(i64, i64)> = d.cells.keys().copied().collect();
        assert_eq!(cells, vec![(0, 1), (1, 0), (1, 1), (1, 2), (2, 1)]);
    }
}
