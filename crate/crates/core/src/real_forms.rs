//! Real forms determined by the parity of a grading element, and compact
//! characteristic vectors.

use crate::error::{Error, Result};
use crate::rational::to_int;
use crate::root_system::{
    identify_type, subsystem_base, CartanType, Component, Family, GradingElement, RootSet,
    RootSystem, WeylGroup,
};

/// Partition of the roots into compact (`alpha(E)` even) and noncompact ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootParity {
    pub compact: RootSet,
    pub noncompact: RootSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealFormLabel {
    pub name: String,
    /// Simple factors of the complexified maximal compact subalgebra.
    pub k_types: Vec<CartanType>,
    pub center_dim: usize,
    pub dim_k: usize,
    /// `dim k^perp - dim k`.
    pub signature: i64,
}

/// A simple system of the compact roots together with the noncompact simple root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompactSimpleSystem {
    /// Base of the compact roots with respect to the ambient positivity.
    pub s_k: Vec<usize>,
    /// The unique element of `wS` outside `S_k`; `None` for the compact form.
    pub alpha_prime: Option<usize>,
    /// Index into the Weyl group enumeration of the first `w` that works.
    pub witness: Option<usize>,
    /// True when the compact roots have rank `rank - 1`, i.e. `k` has a center.
    pub hermitian: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompactCharVector {
    pub gamma: Vec<i64>,
    pub alpha_prime_value: i64,
}

fn parity(rs: &RootSystem, e: &GradingElement, roots: impl Iterator<Item = usize>) -> Result<RootParity> {
    let mut compact = RootSet::new();
    let mut noncompact = RootSet::new();
    for a in roots {
        let v = e
            .pair_int(rs.root(a))
            .ok_or_else(|| Error::NonIntegral(format!("{}(E) = {}", rs.fmt_root(a), e.pair(rs.root(a)))))?;
        if v.rem_euclid(2) == 0 {
            compact.insert(a);
        } else {
            noncompact.insert(a);
        }
    }
    Ok(RootParity { compact, noncompact })
}

/// Splits the roots by the parity of `alpha(E)`.
pub fn split_roots(rs: &RootSystem, e: &GradingElement) -> Result<RootParity> {
    parity(rs, e, 0..rs.num_roots())
}

/// Names the real form of a simple algebra of type `ct` from `dim k` and the center
/// dimension of `k`.
pub fn real_form_name(ct: CartanType, dim_k: usize, center: usize) -> Option<String> {
    let n = ct.rank;
    let dim_g = ct.dim();
    if dim_k == dim_g {
        return Some(match ct.family {
            Family::A => format!("su({})", n + 1),
            Family::B => format!("so({})", 2 * n + 1),
            Family::C => format!("sp({n})"),
            Family::D => format!("so({})", 2 * n),
            Family::E => format!("e{n}"),
            Family::F => "f4".into(),
            Family::G => "g2".into(),
        });
    }
    let so_dim = |p: usize| p * p.saturating_sub(1) / 2;
    match ct.family {
        Family::A => {
            let m = n + 1;
            (m.div_ceil(2)..m)
                .find(|&a| a * a + (m - a) * (m - a) - 1 == dim_k && center == 1)
                .map(|a| format!("su({},{})", a, m - a))
        }
        Family::B => {
            let m = 2 * n + 1;
            (2..m)
                .step_by(2)
                .find(|&p| so_dim(p) + so_dim(m - p) == dim_k && center == usize::from(p == 2))
                .map(|p| format!("so({},{})", p, m - p))
        }
        Family::C => {
            if center == 1 && dim_k == n * n {
                return Some(format!("sp({n},R)"));
            }
            (n.div_ceil(2)..n)
                .find(|&a| a * (2 * a + 1) + (n - a) * (2 * (n - a) + 1) == dim_k && center == 0)
                .map(|a| format!("sp({},{})", a, n - a))
        }
        Family::D => {
            let m = 2 * n;
            if center == 1 && dim_k == n * n && n != 4 {
                return Some(format!("so*({m})"));
            }
            (n..m)
                .filter(|p| p % 2 == 0)
                .find(|&p| {
                    let q = m - p;
                    so_dim(p) + so_dim(q) == dim_k && center == usize::from(p == 2 || q == 2)
                })
                .map(|p| format!("so({},{})", p, m - p))
        }
        Family::E | Family::F | Family::G => {
            let s = dim_g as i64 - 2 * dim_k as i64;
            let (name, c) = match (ct.family, n, s) {
                (Family::E, 6, 2) => ("EII = E6(2)", 0),
                (Family::E, 6, -14) => ("EIII = E6(-14)", 1),
                (Family::E, 7, 7) => ("EV = E7(7)", 0),
                (Family::E, 7, -5) => ("EVI = E7(-5)", 0),
                (Family::E, 7, -25) => ("EVII = E7(-25)", 1),
                (Family::E, 8, 8) => ("EVIII = E8(8)", 0),
                (Family::E, 8, -24) => ("EIX = E8(-24)", 0),
                (Family::F, 4, 4) => ("FI = F4(4)", 0),
                (Family::F, 4, -20) => ("FII = F4(-20)", 0),
                (Family::G, 2, 2) => ("G = G2(2)", 0),
                _ => return None,
            };
            (c == center).then(|| name.to_string())
        }
    }
}

fn label_for(
    rs: &RootSystem,
    ct: CartanType,
    rank: usize,
    compact: &RootSet,
) -> Result<RealFormLabel> {
    let base = subsystem_base(rs, compact)?;
    let k_comps = identify_type(rs, &base)?;
    let k_types: Vec<CartanType> = k_comps.iter().map(|c| c.ctype).collect();
    let center_dim = rank - base.len();
    let dim_k = rank + compact.len();
    let name = real_form_name(ct, dim_k, center_dim).ok_or_else(|| {
        Error::Internal(format!("no real form of {ct} with dim k = {dim_k} and center {center_dim}"))
    })?;
    let from_types: usize = k_types.iter().map(|t| t.dim()).sum::<usize>() + center_dim;
    if from_types != dim_k {
        return Err(Error::Internal(format!(
            "k factors give dimension {from_types}, parity count gives {dim_k}"
        )));
    }
    Ok(RealFormLabel {
        name,
        k_types,
        center_dim,
        dim_k,
        signature: ct.dim() as i64 - 2 * dim_k as i64,
    })
}

/// The real form `g_R` whose complexified maximal compact subalgebra is spanned by the
/// Cartan subalgebra and the roots with `alpha(E)` even.
pub fn identify_real_form(rs: &RootSystem, e: &GradingElement) -> Result<RealFormLabel> {
    let p = split_roots(rs, e)?;
    label_for(rs, rs.cartan_type(), rs.rank(), &p.compact)
}

/// Real form of one simple factor of a Levi subalgebra, using the parity of `E` restricted
/// to the factor's roots. `levi_roots` are the roots of the whole Levi.
pub fn component_real_form(
    rs: &RootSystem,
    e: &GradingElement,
    levi_roots: &RootSet,
    comp: &Component,
) -> Result<RealFormLabel> {
    let roots = levi_roots
        .iter()
        .filter(|&a| comp.base.iter().any(|&b| rs.inner_idx(a, b) != 0));
    let p = parity(rs, e, roots)?;
    label_for(rs, comp.ctype, comp.ctype.rank, &p.compact)
}

/// Computes `S_k` and the noncompact simple root `alpha'`.
///
/// `S_k` is the base of the compact roots for the ambient positive system. The witness is the
/// first Weyl group element `w`, in enumeration order, with `S_k` contained in
/// `wS + {-w(highest root)}` and exactly one element of `wS` outside `S_k`.
pub fn compact_simple_system(
    rs: &RootSystem,
    e: &GradingElement,
    weyl: &WeylGroup,
) -> Result<CompactSimpleSystem> {
    let p = split_roots(rs, e)?;
    let s_k = subsystem_base(rs, &p.compact)?;
    let r = rs.rank();
    let hermitian = s_k.len() + 1 == r;
    if s_k.len() == r && s_k.iter().all(|&b| b < r) {
        // E is even on every root: the compact form.
        return Ok(CompactSimpleSystem { s_k, alpha_prime: None, witness: None, hermitian });
    }
    let neg_top = rs.negate(rs.highest_root());
    for (k, w) in weyl.elements().iter().enumerate() {
        let ws: Vec<usize> = (0..r).map(|i| w[rs.simple(i)] as usize).collect();
        let ext = w[neg_top] as usize;
        if !s_k.iter().all(|b| ws.contains(b) || *b == ext) {
            continue;
        }
        let outside: Vec<usize> = ws.iter().copied().filter(|a| !s_k.contains(a)).collect();
        if outside.len() == 1 {
            return Ok(CompactSimpleSystem {
                s_k,
                alpha_prime: Some(outside[0]),
                witness: Some(k),
                hermitian,
            });
        }
    }
    Err(Error::Internal("no Weyl element places S_k inside the extended simple system".into()))
}

/// Moves `Z` into the dominant chamber of the compact Weyl group and reads off
/// `gamma(Z)` on `S_k` and `alpha'(Z)`.
pub fn compact_characteristic_vector(
    rs: &RootSystem,
    css: &CompactSimpleSystem,
    z: &GradingElement,
) -> Result<CompactCharVector> {
    let val = |z: &GradingElement, a: usize| -> Result<i64> {
        z.pair_int(rs.root(a))
            .ok_or_else(|| Error::NonIntegral(format!("{}(Z)", rs.fmt_root(a))))
    };
    let mut z = z.clone();
    loop {
        let mut neg = None;
        for &b in &css.s_k {
            if val(&z, b)? < 0 {
                neg = Some(b);
                break;
            }
        }
        match neg {
            Some(b) => z = rs.reflect_grading(b, &z),
            None => break,
        }
    }
    let gamma = css.s_k.iter().map(|&b| val(&z, b)).collect::<Result<Vec<_>>>()?;
    let alpha_prime_value = match css.alpha_prime {
        Some(a) => to_int(&z.pair(rs.root(a))).ok_or_else(|| Error::NonIntegral("alpha'(Z)".into()))?,
        None => 0,
    };
    Ok(CompactCharVector { gamma, alpha_prime_value })
}
