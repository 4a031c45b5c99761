//! Simple root systems in Bourbaki numbering, Weyl groups and Levi subsystems.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{fmt_q, q, to_int, Q};

/// Default cap on the number of enumerated Weyl group elements.
pub const DEFAULT_WEYL_CAP: usize = 1_000_000;

/// Largest number of roots any supported system has (E8).
const MAX_ROOTS: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

/// A simple complex Lie type such as `C3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(CartanType { family, rank })
        } else {
            Err(Error::InvalidRank { family: family.letter(), rank })
        }
    }

    /// Parses strings like `C3`, `e6`, `G2`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| Error::ParseType(s.to_string()))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::ParseType(s.to_string()))?;
        CartanType::new(family, rank)
    }

    /// Dimension of the complex simple Lie algebra.
    pub fn dim(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 2),
            Family::B | Family::C => n * (2 * n + 1),
            Family::D => n * (2 * n - 1),
            Family::E => match n {
                6 => 78,
                7 => 133,
                _ => 248,
            },
            Family::F => 52,
            Family::G => 14,
        }
    }

    /// Order of the Weyl group from the classical formulas.
    pub fn weyl_order(&self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1u128 << n) * fact(n),
            Family::D => (1u128 << (n - 1)) * fact(n),
            Family::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1152,
            Family::G => 12,
        }
    }

    /// Bourbaki Cartan matrix, `C[i][j] = <sigma_i, sigma_j^vee>`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut c = vec![vec![0i64; n]; n];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            c[i][j] = -1;
            c[j][i] = -1;
        };
        match self.family {
            Family::A | Family::B | Family::C => {
                for i in 0..n - 1 {
                    link(i, i + 1);
                }
            }
            Family::D => {
                for i in 0..n - 2 {
                    link(i, i + 1);
                }
                link(n - 3, n - 1);
            }
            Family::E => {
                link(0, 2);
                link(1, 3);
                for i in 2..n - 1 {
                    link(i, i + 1);
                }
            }
            Family::F => {
                link(0, 1);
                link(1, 2);
                link(2, 3);
            }
            Family::G => link(0, 1),
        }
        match self.family {
            // sigma_n short
            Family::B => c[n - 2][n - 1] = -2,
            // sigma_n long
            Family::C => c[n - 1][n - 2] = -2,
            // sigma_1, sigma_2 long
            Family::F => c[1][2] = -2,
            // sigma_1 short, sigma_2 long
            Family::G => c[1][0] = -3,
            _ => {}
        }
        c
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// A set of root indices, stored as a fixed-width bitset.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct RootSet {
    words: [u64; MAX_ROOTS / 64],
}

impl RootSet {
    pub fn new() -> Self {
        RootSet::default()
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        let mut s = RootSet::new();
        for i in it {
            s.insert(i);
        }
        s
    }

    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(k * 64 + b)
                }
            })
        })
    }

    /// Sorted list of member indices.
    pub fn indices(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Image under a permutation of root indices.
    pub fn permute(&self, perm: &[u16]) -> RootSet {
        RootSet::from_indices(self.iter().map(|i| perm[i] as usize))
    }

    pub fn is_subset(&self, other: &RootSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }
}

impl Ord for RootSet {
    /// Lexicographic order of the sorted index lists.
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for RootSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for RootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// An element of the Cartan subalgebra given by its values `c_i = sigma_i(E)`,
/// i.e. `E = sum c_i S^i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradingElement {
    pub s_coords: Vec<Q>,
}

impl GradingElement {
    pub fn new(s_coords: Vec<Q>) -> Self {
        GradingElement { s_coords }
    }

    pub fn zero(rank: usize) -> Self {
        GradingElement { s_coords: vec![Q::zero(); rank] }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        GradingElement { s_coords: c.iter().map(|&x| q(x)).collect() }
    }

    /// `E = sum_{i in idx} S^i` with 1-based indices.
    pub fn from_indices(rank: usize, idx: &[usize]) -> Self {
        let mut c = vec![Q::zero(); rank];
        for &i in idx {
            c[i - 1] = Q::one();
        }
        GradingElement { s_coords: c }
    }

    pub fn rank(&self) -> usize {
        self.s_coords.len()
    }

    /// Value `alpha(E)` for `alpha` in simple-root coordinates.
    pub fn pair(&self, alpha: &[i64]) -> Q {
        alpha
            .iter()
            .zip(&self.s_coords)
            .filter(|(a, _)| **a != 0)
            .map(|(&a, c)| c * q(a))
            .sum()
    }

    /// Value on a rational functional given in simple-root coordinates.
    pub fn pair_q(&self, alpha: &[Q]) -> Q {
        alpha.iter().zip(&self.s_coords).map(|(a, c)| a * c).sum()
    }

    pub fn pair_int(&self, alpha: &[i64]) -> Option<i64> {
        to_int(&self.pair(alpha))
    }

    pub fn is_zero(&self) -> bool {
        self.s_coords.iter().all(|c| c.is_zero())
    }

    /// Integer coordinates, if every coordinate is integral.
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.s_coords.iter().map(to_int).collect()
    }

    pub fn add(&self, other: &GradingElement) -> GradingElement {
        GradingElement {
            s_coords: self.s_coords.iter().zip(&other.s_coords).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &GradingElement) -> GradingElement {
        GradingElement {
            s_coords: self.s_coords.iter().zip(&other.s_coords).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, k: &Q) -> GradingElement {
        GradingElement { s_coords: self.s_coords.iter().map(|a| a * k).collect() }
    }
}

impl fmt::Display for GradingElement {
    /// Formats as `2S^1 - S^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (i, c) in self.s_coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if !a.is_one() {
                out.push_str(&fmt_q(&a));
                if !a.is_integer() {
                    out.push(' ');
                }
            }
            out.push_str(&format!("S^{}", i + 1));
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

/// Formats a root in simple-root coordinates as `s1+2s2` or `-(s1+s2)`.
pub fn fmt_root(coords: &[i64]) -> String {
    let neg = coords.iter().any(|&a| a < 0);
    let terms: Vec<String> = coords
        .iter()
        .enumerate()
        .filter(|(_, &a)| a != 0)
        .map(|(i, &a)| {
            let a = a.abs();
            if a == 1 {
                format!("s{}", i + 1)
            } else {
                format!("{}s{}", a, i + 1)
            }
        })
        .collect();
    let body = terms.join("+");
    match (neg, terms.len()) {
        (false, _) => body,
        (true, 1) => format!("-{body}"),
        (true, _) => format!("-({body})"),
    }
}

/// Cartan matrix and the coroot basis `H^j` in `S`-coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanData {
    pub cartan_matrix: Vec<Vec<i64>>,
    /// `h_basis[j][i] = sigma_i(H^j)`, so `H^j = sum_i C_ij S^i`.
    pub h_basis: Vec<Vec<i64>>,
}

/// A reduced irreducible root system with its Bourbaki simple system.
#[derive(Debug, Clone)]
pub struct RootSystem {
    ctype: CartanType,
    cartan: Vec<Vec<i64>>,
    /// `(sigma_i, sigma_j)` normalized so the shortest roots have length 1.
    gram: Vec<Vec<i64>>,
    roots: Vec<Vec<i64>>,
    npos: usize,
    index: HashMap<Vec<i64>, usize>,
    /// `(alpha, alpha)` for each root.
    norms: Vec<i64>,
    /// `coroot_s[a][k] = sigma_k(alpha^vee)`.
    coroot_s: Vec<Vec<i64>>,
    /// Simple reflections as permutations of root indices.
    reflections: Vec<Vec<u16>>,
    highest: usize,
    /// Inverse Cartan matrix, `omega_i = sum_j cinv[i][j] sigma_j`.
    cinv: Vec<Vec<Q>>,
}

impl RootSystem {
    /// Generates the full root system of `ctype`.
    pub fn new(ctype: CartanType) -> RootSystem {
        let r = ctype.rank;
        let cartan = ctype.cartan_matrix();

        // Root lengths: C_ij len_j = C_ji len_i, propagated over the connected diagram.
        let mut len: Vec<Option<Q>> = vec![None; r];
        len[0] = Some(Q::one());
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for j in 0..r {
                if i != j && cartan[i][j] != 0 && len[j].is_none() {
                    let li = len[i].clone().unwrap();
                    len[j] = Some(li * q(cartan[j][i]) / q(cartan[i][j]));
                    queue.push_back(j);
                }
            }
        }
        let len: Vec<Q> = len.into_iter().map(|l| l.unwrap()).collect();
        let min = len.iter().min().unwrap().clone();
        let len: Vec<i64> = len.iter().map(|l| to_int(&(l / &min)).unwrap()).collect();
        // (sigma_i, sigma_j) = C_ij (sigma_j, sigma_j) / 2 with (sigma_j, sigma_j) = 2 len_j
        let gram: Vec<Vec<i64>> = (0..r)
            .map(|i| (0..r).map(|j| cartan[i][j] * len[j]).collect())
            .collect();

        // All roots are Weyl images of simple roots.
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..r {
            let mut v = vec![0; r];
            v[i] = 1;
            if seen.insert(v.clone()) {
                queue.push_back(v);
            }
        }
        while let Some(a) = queue.pop_front() {
            for i in 0..r {
                let pairing: i64 = (0..r).map(|j| a[j] * cartan[j][i]).sum();
                let mut b = a.clone();
                b[i] -= pairing;
                if seen.insert(b.clone()) {
                    queue.push_back(b);
                }
            }
        }
        let mut pos: Vec<Vec<i64>> = seen.into_iter().filter(|a| a.iter().all(|&x| x >= 0)).collect();
        pos.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let npos = pos.len();
        let mut roots = pos.clone();
        roots.extend(pos.iter().map(|a| a.iter().map(|x| -x).collect::<Vec<_>>()));
        let index: HashMap<Vec<i64>, usize> =
            roots.iter().enumerate().map(|(i, a)| (a.clone(), i)).collect();

        let inner = |a: &[i64], b: &[i64]| -> i64 {
            let mut s = 0;
            for i in 0..r {
                if a[i] == 0 {
                    continue;
                }
                for j in 0..r {
                    s += a[i] * gram[i][j] * b[j];
                }
            }
            s
        };
        let norms: Vec<i64> = roots.iter().map(|a| inner(a, a)).collect();
        let coroot_s: Vec<Vec<i64>> = roots
            .iter()
            .zip(&norms)
            .map(|(a, &n)| {
                (0..r)
                    .map(|k| {
                        let s: i64 = (0..r).map(|j| gram[k][j] * a[j]).sum();
                        debug_assert_eq!((2 * s) % n, 0);
                        2 * s / n
                    })
                    .collect()
            })
            .collect();

        let reflections: Vec<Vec<u16>> = (0..r)
            .map(|i| {
                roots
                    .iter()
                    .map(|a| {
                        let pairing: i64 = (0..r).map(|j| a[j] * cartan[j][i]).sum();
                        let mut b = a.clone();
                        b[i] -= pairing;
                        index[&b] as u16
                    })
                    .collect()
            })
            .collect();

        let highest = npos - 1;
        let cq: Vec<Vec<Q>> = cartan.iter().map(|row| row.iter().map(|&x| q(x)).collect()).collect();
        let cinv = crate::rational::inverse(&cq).expect("Cartan matrix is nonsingular");

        RootSystem {
            ctype,
            cartan,
            gram,
            roots,
            npos,
            index,
            norms,
            coroot_s,
            reflections,
            highest,
            cinv,
        }
    }

    pub fn cartan_type(&self) -> CartanType {
        self.ctype
    }

    pub fn rank(&self) -> usize {
        self.ctype.rank
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn num_positive(&self) -> usize {
        self.npos
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &[i64] {
        &self.roots[i]
    }

    pub fn is_positive(&self, i: usize) -> bool {
        i < self.npos
    }

    pub fn negate(&self, i: usize) -> usize {
        if i < self.npos {
            i + self.npos
        } else {
            i - self.npos
        }
    }

    pub fn index_of(&self, coords: &[i64]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    /// Index of the simple root `sigma_{i+1}`.
    pub fn simple(&self, i: usize) -> usize {
        debug_assert_eq!(self.roots[i].iter().sum::<i64>(), 1);
        i
    }

    pub fn highest_root(&self) -> usize {
        self.highest
    }

    pub fn height(&self, i: usize) -> i64 {
        self.roots[i].iter().sum()
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn cartan_data(&self) -> CartanData {
        let r = self.rank();
        CartanData {
            cartan_matrix: self.cartan.clone(),
            h_basis: (0..r).map(|j| (0..r).map(|i| self.cartan[i][j]).collect()).collect(),
        }
    }

    /// Symmetric form on the root lattice in simple-root coordinates.
    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn inner(&self, a: &[i64], b: &[i64]) -> i64 {
        let r = self.rank();
        let mut s = 0;
        for i in 0..r {
            if a[i] == 0 {
                continue;
            }
            for j in 0..r {
                s += a[i] * self.gram[i][j] * b[j];
            }
        }
        s
    }

    pub fn inner_idx(&self, a: usize, b: usize) -> i64 {
        self.inner(&self.roots[a], &self.roots[b])
    }

    pub fn norm(&self, i: usize) -> i64 {
        self.norms[i]
    }

    /// `<alpha, beta^vee>` for root indices.
    pub fn cartan_int(&self, a: usize, b: usize) -> i64 {
        2 * self.inner_idx(a, b) / self.norms[b]
    }

    /// The coroot `alpha^vee` as a grading element.
    pub fn coroot(&self, i: usize) -> GradingElement {
        GradingElement::from_ints(&self.coroot_s[i])
    }

    pub fn coroot_coords(&self, i: usize) -> &[i64] {
        &self.coroot_s[i]
    }

    /// Reflection `s_beta(alpha)` on root indices.
    pub fn reflect_root(&self, beta: usize, alpha: usize) -> usize {
        let k = self.cartan_int(alpha, beta);
        let v: Vec<i64> = self.roots[alpha]
            .iter()
            .zip(&self.roots[beta])
            .map(|(a, b)| a - k * b)
            .collect();
        self.index[&v]
    }

    /// Reflection `s_beta` applied to a grading element: `Z - beta(Z) beta^vee`.
    pub fn reflect_grading(&self, beta: usize, z: &GradingElement) -> GradingElement {
        let v = z.pair(&self.roots[beta]);
        if v.is_zero() {
            return z.clone();
        }
        z.sub(&self.coroot(beta).scale(&v))
    }

    pub fn simple_reflection(&self, i: usize) -> &[u16] {
        &self.reflections[i]
    }

    /// Permutation of root indices induced by negation.
    pub fn pair_value(&self, i: usize, e: &GradingElement) -> Q {
        e.pair(&self.roots[i])
    }

    /// `cinv[i][j]`: coefficient of `sigma_j` in `omega_i`.
    pub fn inverse_cartan(&self) -> &[Vec<Q>] {
        &self.cinv
    }

    /// Converts a weight from fundamental-weight to simple-root coordinates.
    pub fn omega_to_root(&self, w: &[i64]) -> Vec<Q> {
        let r = self.rank();
        (0..r)
            .map(|j| {
                (0..r)
                    .filter(|&i| w[i] != 0)
                    .map(|i| &self.cinv[i][j] * q(w[i]))
                    .sum()
            })
            .collect()
    }

    /// Converts a root-lattice vector to fundamental-weight coordinates.
    pub fn root_to_omega(&self, a: &[i64]) -> Vec<i64> {
        let r = self.rank();
        (0..r).map(|j| (0..r).map(|i| a[i] * self.cartan[i][j]).sum()).collect()
    }

    /// Applies the simple reflection `(i)` to a grading element.
    pub fn simple_reflect_grading(&self, i: usize, z: &GradingElement) -> GradingElement {
        let ci = z.s_coords[i].clone();
        if ci.is_zero() {
            return z.clone();
        }
        GradingElement {
            s_coords: z
                .s_coords
                .iter()
                .enumerate()
                .map(|(k, c)| c - &ci * q(self.cartan[k][i]))
                .collect(),
        }
    }

    /// Reflects until every `sigma_i(Y) >= 0`, always using the first negative index.
    pub fn dominant(&self, y: &GradingElement) -> GradingElement {
        let mut y = y.clone();
        while let Some(i) = y.s_coords.iter().position(|c| c.is_negative()) {
            y = self.simple_reflect_grading(i, &y);
        }
        y
    }

    /// Checks that every root pairs integrally with `e`.
    pub fn is_integral(&self, e: &GradingElement) -> bool {
        e.s_coords.iter().all(|c| c.is_integer())
    }

    pub fn fmt_root(&self, i: usize) -> String {
        fmt_root(&self.roots[i])
    }

    /// Roots whose support lies in the given simple indices (0-based).
    pub fn standard_levi_roots(&self, simple: &[usize]) -> RootSet {
        RootSet::from_indices((0..self.num_roots()).filter(|&a| {
            self.roots[a]
                .iter()
                .enumerate()
                .all(|(i, &c)| c == 0 || simple.contains(&i))
        }))
    }
}

/// Finite Weyl group elements as permutations of root indices, in breadth-first order
/// from the identity using the simple reflections in index order.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    elements: Vec<Vec<u16>>,
}

impl WeylGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Vec<u16>] {
        &self.elements
    }

    pub fn element(&self, k: usize) -> &[u16] {
        &self.elements[k]
    }

    /// Action of a permutation on a grading element: `sigma_k(wZ) = (w^-1 sigma_k)(Z)`.
    pub fn act_on_grading(rs: &RootSystem, perm: &[u16], z: &GradingElement) -> GradingElement {
        let r = rs.rank();
        let mut inv = vec![0usize; perm.len()];
        for (i, &p) in perm.iter().enumerate() {
            inv[p as usize] = i;
        }
        GradingElement {
            s_coords: (0..r).map(|k| z.pair(rs.root(inv[rs.simple(k)]))).collect(),
        }
    }
}

/// Enumerates the Weyl group generated by the given simple reflections.
fn enumerate_subgroup(rs: &RootSystem, gens: &[usize], cap: usize) -> Result<Vec<Vec<u16>>> {
    let n = rs.num_roots();
    let r = rs.rank();
    let id: Vec<u16> = (0..n as u16).collect();
    let key = |w: &[u16]| -> Vec<u16> { (0..r).map(|i| w[i]).collect() };
    let mut seen: HashSet<Vec<u16>> = HashSet::new();
    seen.insert(key(&id));
    let mut out = vec![id];
    let mut head = 0;
    while head < out.len() {
        for &g in gens {
            let s = rs.simple_reflection(g);
            let w: Vec<u16> = out[head].iter().map(|&x| s[x as usize]).collect();
            if seen.insert(key(&w)) {
                if out.len() >= cap {
                    return Err(Error::WeylCapExceeded { order: rs.cartan_type().weyl_order(), cap });
                }
                out.push(w);
            }
        }
        head += 1;
    }
    Ok(out)
}

/// Enumerates every element of W, refusing when the classical order exceeds `cap`.
pub fn enumerate_weyl(rs: &RootSystem, cap: usize) -> Result<WeylGroup> {
    let order = rs.cartan_type().weyl_order();
    if order > cap as u128 {
        return Err(Error::WeylCapExceeded { order, cap });
    }
    let gens: Vec<usize> = (0..rs.rank()).collect();
    Ok(WeylGroup { elements: enumerate_subgroup(rs, &gens, cap)? })
}

/// Enumerates the parabolic subgroup generated by the simple reflections `gens` (0-based).
pub fn enumerate_parabolic_subgroup(rs: &RootSystem, gens: &[usize], cap: usize) -> Result<WeylGroup> {
    Ok(WeylGroup { elements: enumerate_subgroup(rs, gens, cap)? })
}

/// One simple factor of a Levi subsystem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub ctype: CartanType,
    /// Root indices of the simple roots of this factor, in increasing index order.
    pub base: Vec<usize>,
}

/// A Levi sub-root-system, i.e. a Weyl conjugate of a standard parabolic subsystem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeviSubsystem {
    pub roots: RootSet,
    /// Simple roots of the subsystem with respect to the ambient positivity.
    pub base: Vec<usize>,
    pub components: Vec<Component>,
}

impl LeviSubsystem {
    /// Builds a Levi from its root set, computing its base and factor types.
    pub fn from_roots(rs: &RootSystem, roots: RootSet) -> Result<Self> {
        let base = subsystem_base(rs, &roots)?;
        let components = identify_type(rs, &base)?;
        Ok(LeviSubsystem { roots, base, components })
    }

    /// Smallest closed subsystem containing the given roots.
    pub fn generated_by(rs: &RootSystem, gens: &[usize]) -> Result<Self> {
        let mut set = RootSet::new();
        let mut queue: VecDeque<usize> = VecDeque::new();
        for &g in gens {
            for a in [g, rs.negate(g)] {
                if !set.contains(a) {
                    set.insert(a);
                    queue.push_back(a);
                }
            }
        }
        // The subsystem is the orbit of the generators under their reflections.
        while let Some(a) = queue.pop_front() {
            for &g in gens {
                let b = rs.reflect_root(g, a);
                if !set.contains(b) {
                    set.insert(b);
                    queue.push_back(b);
                }
            }
        }
        LeviSubsystem::from_roots(rs, set)
    }

    /// Semisimple rank.
    pub fn rank(&self) -> usize {
        self.base.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn component_types(&self) -> Vec<CartanType> {
        self.components.iter().map(|c| c.ctype).collect()
    }

    /// Formats the base as `{s1+s2, s3}`.
    pub fn fmt_base(&self, rs: &RootSystem) -> String {
        let parts: Vec<String> = self.base.iter().map(|&b| rs.fmt_root(b)).collect();
        format!("{{{}}}", parts.join(", "))
    }
}

/// Base of a closed symmetric subsystem: positive members that are not a sum of two
/// positive members.
pub fn subsystem_base(rs: &RootSystem, roots: &RootSet) -> Result<Vec<usize>> {
    for a in roots.iter() {
        if !roots.contains(rs.negate(a)) {
            return Err(Error::InvalidSubsystem(format!(
                "{} present without its negative",
                rs.fmt_root(a)
            )));
        }
    }
    let pos: Vec<usize> = roots.iter().filter(|&a| rs.is_positive(a)).collect();
    let mut base = Vec::new();
    for &a in &pos {
        let decomposable = pos.iter().any(|&b| {
            if b == a {
                return false;
            }
            let d: Vec<i64> = rs.root(a).iter().zip(rs.root(b)).map(|(x, y)| x - y).collect();
            match rs.index_of(&d) {
                Some(c) => rs.is_positive(c) && roots.contains(c),
                None => false,
            }
        });
        if !decomposable {
            base.push(a);
        }
    }
    Ok(base)
}

/// Identifies the simple factors of the subsystem with the given base.
///
/// A rank-2 factor with a double bond is reported as `C2` inside a type C ambient system
/// and as `B2` otherwise.
pub fn identify_type(rs: &RootSystem, base: &[usize]) -> Result<Vec<Component>> {
    let k = base.len();
    let m = |i: usize, j: usize| rs.cartan_int(base[i], base[j]);
    for i in 0..k {
        for j in 0..k {
            if i != j && m(i, j) > 0 {
                return Err(Error::InvalidSubsystem("base has an acute pair".into()));
            }
        }
    }
    // connected components of the Dynkin graph
    let mut comp_of = vec![usize::MAX; k];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for s in 0..k {
        if comp_of[s] != usize::MAX {
            continue;
        }
        let id = comps.len();
        let mut members = vec![s];
        comp_of[s] = id;
        let mut stack = vec![s];
        while let Some(i) = stack.pop() {
            for j in 0..k {
                if comp_of[j] == usize::MAX && m(i, j) != 0 {
                    comp_of[j] = id;
                    members.push(j);
                    stack.push(j);
                }
            }
        }
        members.sort_unstable();
        comps.push(members);
    }

    let mut out = Vec::new();
    for members in comps {
        let n = members.len();
        let local = |a: usize, b: usize| m(members[a], members[b]);
        let mut deg = vec![0usize; n];
        let mut edges = 0;
        let mut double: Option<(usize, usize)> = None;
        let mut triple = false;
        for a in 0..n {
            for b in a + 1..n {
                let bond = local(a, b) * local(b, a);
                if bond != 0 {
                    deg[a] += 1;
                    deg[b] += 1;
                    edges += 1;
                }
                match bond {
                    0 | 1 => {}
                    2 => {
                        if double.is_some() {
                            return Err(Error::InvalidSubsystem("two double bonds".into()));
                        }
                        double = Some((a, b));
                    }
                    3 => triple = true,
                    _ => return Err(Error::InvalidSubsystem("affine bond".into())),
                }
            }
        }
        if edges + 1 != n {
            return Err(Error::InvalidSubsystem("Dynkin graph is not a tree".into()));
        }
        let bad = || Error::InvalidSubsystem("no finite type matches".into());
        let ctype = if n == 1 {
            CartanType::new(Family::A, 1)?
        } else if triple {
            if n != 2 {
                return Err(bad());
            }
            CartanType::new(Family::G, 2)?
        } else if let Some((a, b)) = double {
            if deg.iter().any(|&d| d > 2) {
                return Err(bad());
            }
            if n == 2 {
                let fam = if rs.cartan_type().family == Family::C { Family::C } else { Family::B };
                CartanType::new(fam, 2)?
            } else if deg[a] == 1 || deg[b] == 1 {
                let (end, other) = if deg[a] == 1 { (a, b) } else { (b, a) };
                let short_end = rs.norm(base[members[end]]) < rs.norm(base[members[other]]);
                let fam = if short_end { Family::B } else { Family::C };
                CartanType::new(fam, n)?
            } else if n == 4 {
                CartanType::new(Family::F, 4)?
            } else {
                return Err(bad());
            }
        } else {
            let branch: Vec<usize> = (0..n).filter(|&a| deg[a] >= 3).collect();
            match branch.as_slice() {
                [] => CartanType::new(Family::A, n)?,
                [c] if deg[*c] == 3 => {
                    let mut arms = Vec::new();
                    for start in (0..n).filter(|&b| local(*c, b) != 0 && b != *c) {
                        let (mut prev, mut cur, mut len) = (*c, start, 1);
                        loop {
                            let next = (0..n).find(|&x| x != prev && x != cur && local(cur, x) != 0);
                            match next {
                                Some(x) => {
                                    prev = cur;
                                    cur = x;
                                    len += 1;
                                }
                                None => break,
                            }
                        }
                        arms.push(len);
                    }
                    arms.sort_unstable();
                    match arms.as_slice() {
                        [1, 1, _] => CartanType::new(Family::D, n)?,
                        [1, 2, 2] => CartanType::new(Family::E, 6)?,
                        [1, 2, 3] => CartanType::new(Family::E, 7)?,
                        [1, 2, 4] => CartanType::new(Family::E, 8)?,
                        _ => return Err(bad()),
                    }
                }
                _ => return Err(bad()),
            }
        };
        out.push(Component { ctype, base: members.iter().map(|&i| base[i]).collect() });
    }
    out.sort_by(|x, y| y.ctype.rank.cmp(&x.ctype.rank).then_with(|| x.base.cmp(&y.base)));
    Ok(out)
}

/// All Levi subsystems `{ <w S'> : w in W, S' subset S }`, including the empty one and
/// the whole root system, sorted by root-index set.
///
/// The Weyl group is passed to enforce the size cap; orbits are generated by the simple
/// reflections.
pub fn enumerate_levis(rs: &RootSystem, _weyl: &WeylGroup) -> Result<Vec<LeviSubsystem>> {
    let r = rs.rank();
    let mut all: HashSet<RootSet> = HashSet::new();
    for mask in 0u32..(1 << r) {
        let simple: Vec<usize> = (0..r).filter(|&i| mask >> i & 1 == 1).collect();
        let start = rs.standard_levi_roots(&simple);
        if all.contains(&start) {
            continue;
        }
        for s in root_set_orbit(rs, &start, &(0..r).collect::<Vec<_>>()) {
            all.insert(s);
        }
    }
    let mut sets: Vec<RootSet> = all.into_iter().collect();
    sets.sort();
    sets.into_iter().map(|s| LeviSubsystem::from_roots(rs, s)).collect()
}

/// Orbit of a root set under the group generated by the given simple reflections.
pub fn root_set_orbit(rs: &RootSystem, start: &RootSet, gens: &[usize]) -> Vec<RootSet> {
    let mut seen: HashSet<RootSet> = HashSet::from([*start]);
    let mut out = vec![*start];
    let mut head = 0;
    while head < out.len() {
        let cur = out[head];
        for &g in gens {
            let img = cur.permute(rs.simple_reflection(g));
            if seen.insert(img) {
                out.push(img);
            }
        }
        head += 1;
    }
    out
}
