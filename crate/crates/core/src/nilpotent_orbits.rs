//! Complex nilpotent orbits through their characteristic vectors (weighted Dynkin
//! diagrams), found by Bala-Carter enumeration over standard Levi subalgebras.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::rational::{q, solve, to_int, Q};
use crate::rep_weights::WeightSystem;
use crate::root_system::{GradingElement, RootSystem};

/// `(sigma_1(Y), ..., sigma_r(Y))` for a dominant neutral element `Y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CharVector {
    pub values: Vec<i64>,
}

impl CharVector {
    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    /// 1-based indices of the nonzero entries.
    pub fn support(&self) -> JMIndexSet {
        JMIndexSet {
            indices: self
                .values
                .iter()
                .enumerate()
                .filter(|(_, &v)| v != 0)
                .map(|(i, _)| i + 1)
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    pub parts: Vec<usize>,
}

impl Partition {
    /// Sorts the parts into non-increasing order; zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidWeight("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }
}

/// A set of simple-root indices (1-based), e.g. the `I` of a Jacobson-Morosov parabolic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JMIndexSet {
    pub indices: Vec<usize>,
}

impl JMIndexSet {
    pub fn new(mut indices: Vec<usize>) -> Self {
        indices.sort_unstable();
        indices.dedup();
        JMIndexSet { indices }
    }
}

/// Characteristic vector of the nilpotent orbit of `sl_n` with Jordan type `d`.
pub fn partition_char_vector(d: &Partition) -> CharVector {
    let mut h: Vec<i64> = Vec::with_capacity(d.size());
    for &di in &d.parts {
        let di = di as i64;
        h.extend((0..di).map(|k| di - 1 - 2 * k));
    }
    h.sort_unstable_by(|a, b| b.cmp(a));
    CharVector { values: h.windows(2).map(|w| w[0] - w[1]).collect() }
}

/// Neutral element `Y` of the standard Levi on the 0-based simple indices `levi`, with
/// `beta(Y) = 2` for `beta` in `marked` and `0` on the rest of the Levi's simple roots.
fn levi_neutral(rs: &RootSystem, levi: &[usize], marked: &[usize]) -> GradingElement {
    let k = levi.len();
    let m: Vec<Vec<Q>> = (0..k)
        .map(|j| (0..k).map(|l| q(rs.cartan_int(levi[j], levi[l]))).collect())
        .collect();
    let rhs: Vec<Q> = levi.iter().map(|b| if marked.contains(b) { q(2) } else { q(0) }).collect();
    let x = solve(&m, &rhs).expect("Cartan matrix of a Levi is nonsingular");
    let mut y = GradingElement::zero(rs.rank());
    for (xk, &b) in x.iter().zip(levi) {
        y = y.add(&rs.coroot(b).scale(xk));
    }
    y
}

/// All characteristic vectors of nilpotent orbits, the zero orbit included.
///
/// Every Levi is conjugate to a standard one, so it suffices to run over subsets `S'` of
/// the simple roots and the distinguished neutral elements of each `l_{S'}`.
pub fn enumerate_char_vectors(rs: &RootSystem) -> BTreeSet<CharVector> {
    let r = rs.rank();
    let mut out = BTreeSet::new();
    out.insert(CharVector { values: vec![0; r] });
    for mask in 1u32..(1 << r) {
        let levi: Vec<usize> = (0..r).filter(|&i| mask >> i & 1 == 1).collect();
        let roots = rs.standard_levi_roots(&levi);
        for sub in 1u32..(1 << levi.len()) {
            let marked: Vec<usize> =
                (0..levi.len()).filter(|&j| sub >> j & 1 == 1).map(|j| levi[j]).collect();
            let y = levi_neutral(rs, &levi, &marked);
            let (mut zeros, mut twos) = (0, 0);
            for a in roots.iter() {
                match y.pair_int(rs.root(a)) {
                    Some(0) => zeros += 1,
                    Some(2) => twos += 1,
                    _ => {}
                }
            }
            if levi.len() + zeros != twos {
                continue;
            }
            let d = rs.dominant(&y);
            let values = d
                .s_coords
                .iter()
                .map(|c| to_int(c).expect("neutral elements are integral"))
                .collect();
            out.insert(CharVector { values });
        }
    }
    out
}

/// Index sets `{i : sigma_i(Y) != 0}` over the nonzero orbits.
pub fn jm_parabolic_classes(vectors: &BTreeSet<CharVector>) -> BTreeSet<JMIndexSet> {
    vectors.iter().filter(|v| !v.is_zero()).map(|v| v.support()).collect()
}

/// True when twice the grading element of `I` is a characteristic vector.
pub fn is_even_jm(vectors: &BTreeSet<CharVector>, rank: usize, i: &JMIndexSet) -> bool {
    let mut values = vec![0; rank];
    for &k in &i.indices {
        values[k - 1] = 2;
    }
    vectors.contains(&CharVector { values })
}

/// All even Jacobson-Morosov index sets.
pub fn even_jm_classes(vectors: &BTreeSet<CharVector>) -> BTreeSet<JMIndexSet> {
    vectors
        .iter()
        .filter(|v| !v.is_zero() && v.values.iter().all(|&x| x == 0 || x == 2))
        .map(|v| v.support())
        .collect()
}

/// `dim W_l = sum of mult(mu)` over weights with `mu(Y) <= l`, for every integer `l`
/// between the lowest and highest eigenvalue.
pub fn jm_filtration_dims(ws: &WeightSystem, y: &GradingElement) -> Result<BTreeMap<i64, u64>> {
    let mut by_level: BTreeMap<i64, u64> = BTreeMap::new();
    for w in &ws.entries {
        let v = w.pair(y);
        let l = to_int(&v).ok_or_else(|| Error::NonIntegral(format!("mu(Y) = {v}")))?;
        *by_level.entry(l).or_insert(0) += w.mult;
    }
    let (lo, hi) = match (by_level.keys().next(), by_level.keys().next_back()) {
        (Some(&lo), Some(&hi)) => (lo, hi),
        _ => return Ok(BTreeMap::new()),
    };
    let mut acc = 0;
    let mut out = BTreeMap::new();
    for l in lo..=hi {
        acc += by_level.get(&l).copied().unwrap_or(0);
        out.insert(l, acc);
    }
    Ok(out)
}
