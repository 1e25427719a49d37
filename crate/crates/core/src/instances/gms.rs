//! Finite generalized metric spaces: distances in `[0,∞]`, zero on the
//! diagonal and the triangle inequality, with neither symmetry nor
//! separation required.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use itertools::Itertools;

use crate::cat::Category;
use crate::closed::{InternalHom, Side};
use crate::error::{Error, Result};
use crate::num::ExtRat;
use crate::report::odometer;
use crate::skew::SkewMonoidal;

/// A finite generalized metric space on points `0..n`, distances row-major.
#[derive(Clone)]
pub struct FinGms(Arc<Table>);

#[derive(PartialEq, Eq, Hash)]
struct Table {
    n: usize,
    dist: Vec<ExtRat>,
}

impl PartialEq for FinGms {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for FinGms {}

impl core::hash::Hash for FinGms {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.0.hash(state)
    }
}

impl fmt::Debug for FinGms {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gms{}[", self.len())?;
        for i in 0..self.len() {
            if i > 0 {
                f.write_str("; ")?;
            }
            for j in 0..self.len() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", self.dist(i, j))?;
            }
        }
        f.write_str("]")
    }
}

impl FinGms {
    /// Validates the diagonal and the triangle inequality.
    pub fn new(rows: Vec<Vec<ExtRat>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidInstance(String::from("distance table is not square")));
        }
        let g = FinGms(Arc::new(Table { n, dist: rows.into_iter().flatten().collect() }));
        g.validate()?;
        Ok(g)
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> ExtRat) -> Result<Self> {
        Self::new((0..n).map(|i| (0..n).map(|j| f(i, j)).collect()).collect())
    }

    /// For constructions that preserve the axioms; no check is made.
    fn raw(n: usize, dist: Vec<ExtRat>) -> Self {
        FinGms(Arc::new(Table { n, dist }))
    }

    pub fn empty() -> Self {
        Self::raw(0, Vec::new())
    }

    /// The one-point space, unit of the tensor.
    pub fn point() -> Self {
        Self::raw(1, vec![ExtRat::zero()])
    }

    pub fn len(&self) -> usize {
        self.0.n
    }

    pub fn is_empty(&self) -> bool {
        self.0.n == 0
    }

    pub fn dist(&self, i: usize, j: usize) -> ExtRat {
        self.0.dist[i * self.0.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<ExtRat>> {
        self.0.dist.chunks(self.0.n.max(1)).take(self.0.n).map(<[ExtRat]>::to_vec).collect()
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.len();
        for i in 0..n {
            if !self.dist(i, i).is_zero() {
                return Err(Error::InvalidInstance(format!("d({i},{i}) = {}", self.dist(i, i))));
            }
        }
        if let Some(ints) = self.scaled() {
            const INF: i128 = i128::MAX / 4;
            let d = |i: usize, j: usize| ints[i * n + j].unwrap_or(INF);
            for i in 0..n {
                for j in 0..n {
                    let dij = d(i, j);
                    if dij == 0 {
                        continue;
                    }
                    if let Some(k) = (0..n).find(|&k| dij > d(i, k) + d(k, j)) {
                        return Err(triangle_failure(i, j, k));
                    }
                }
            }
            return Ok(());
        }
        for i in 0..n {
            for j in 0..n {
                let dij = self.dist(i, j);
                if dij.is_zero() {
                    continue;
                }
                if let Some(k) = (0..n).find(|&k| dij > self.dist(i, k) + self.dist(k, j)) {
                    return Err(triangle_failure(i, j, k));
                }
            }
        }
        Ok(())
    }

    /// Finite distances over a common denominator, when that fits.
    fn scaled(&self) -> Option<Vec<Option<i128>>> {
        let mut den: i64 = 1;
        for d in &self.0.dist {
            if let Some(r) = d.finite() {
                den = den.checked_mul(*r.denom() / num_integer::gcd(den, *r.denom()))?;
            }
        }
        self.0
            .dist
            .iter()
            .map(|d| match d.finite() {
                None => Some(None),
                Some(r) => {
                    let v = i128::from(*r.numer()) * i128::from(den / *r.denom());
                    (v < 1 << 100).then_some(Some(v))
                }
            })
            .collect()
    }

    /// `x ≤ y` pointwise on the same points.
    pub fn dominated_by(&self, other: &FinGms) -> bool {
        self.len() == other.len() && self.0.dist.iter().zip(&other.0.dist).all(|(a, b)| a <= b)
    }

    /// Whether `func` is a non-expansive map from `self` to `tgt`.
    pub fn is_nonexpansive(&self, tgt: &FinGms, func: &[usize]) -> bool {
        func.len() == self.len()
            && func.iter().all(|&v| v < tgt.len())
            && (0..self.len()).all(|i| {
                (0..self.len()).all(|j| tgt.dist(func[i], func[j]) <= self.dist(i, j))
            })
    }

    /// All non-expansive maps into `tgt`, point tables in lexicographic order.
    pub fn maps_to(&self, tgt: &FinGms) -> Vec<Vec<usize>> {
        odometer(&vec![tgt.len(); self.len()])
            .into_iter()
            .filter(|f| self.is_nonexpansive(tgt, f))
            .collect()
    }
}

fn triangle_failure(i: usize, j: usize, k: usize) -> Error {
    Error::InvalidInstance(format!("d({i},{j}) > d({i},{k}) + d({k},{j})"))
}

/// Two points at distance `t` in each direction.
pub fn d_space(t: ExtRat) -> FinGms {
    FinGms::raw(2, vec![ExtRat::zero(), t, t, ExtRat::zero()])
}

/// Points are pairs in row-major order, distances add.
pub fn gms_tensor(m: &FinGms, n: &FinGms) -> FinGms {
    let (a, b) = (m.len(), n.len());
    let mut dist = Vec::with_capacity(a * a * b * b);
    for i in 0..a {
        for k in 0..b {
            for j in 0..a {
                for l in 0..b {
                    dist.push(m.dist(i, j) + n.dist(k, l));
                }
            }
        }
    }
    FinGms::raw(a * b, dist)
}

/// Pointwise transformations of the distance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GmsAct {
    /// `min(d, x)`
    Truncate(ExtRat),
    /// `T` leaves `d` alone; `F` sends every nonzero distance to `∞`.
    Flatten(bool),
    /// `d · 2^k`
    Scale(i64),
}

pub fn gms_act(m: &FinGms, mode: GmsAct) -> FinGms {
    let f = |d: ExtRat| match mode {
        GmsAct::Truncate(x) => d.min(x),
        GmsAct::Flatten(true) => d,
        GmsAct::Flatten(false) => {
            if d.is_zero() {
                d
            } else {
                ExtRat::INF
            }
        }
        GmsAct::Scale(k) => d.scale_pow2(k),
    };
    FinGms::raw(m.len(), m.0.dist.iter().map(|&d| f(d)).collect())
}

/// A non-expansive map, kept with its endpoints.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GmsMap {
    pub src: FinGms,
    pub tgt: FinGms,
    pub func: Vec<usize>,
}

impl fmt::Debug for GmsMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} : {:?} -> {:?}", self.func, self.src, self.tgt)
    }
}

impl GmsMap {
    pub fn new(src: FinGms, tgt: FinGms, func: Vec<usize>) -> Result<Self> {
        if !src.is_nonexpansive(&tgt, &func) {
            return Err(Error::InvalidInstance(format!("{func:?} is not non-expansive")));
        }
        Ok(GmsMap { src, tgt, func })
    }

    /// The identity point function between spaces on the same points,
    /// unchecked so that law checks can reject it.
    pub fn on_points(src: &FinGms, tgt: &FinGms) -> Self {
        GmsMap { src: src.clone(), tgt: tgt.clone(), func: (0..src.len()).collect() }
    }
}

/// Finite generalized metric spaces and non-expansive maps, with the
/// strict tensor of [`gms_tensor`].
#[derive(Debug, Clone, Copy, Default)]
pub struct GmsCat;

impl Category for GmsCat {
    type Obj = FinGms;
    type Mor = GmsMap;

    fn source(&self, f: &GmsMap) -> FinGms {
        f.src.clone()
    }
    fn target(&self, f: &GmsMap) -> FinGms {
        f.tgt.clone()
    }
    fn identity(&self, a: &FinGms) -> GmsMap {
        GmsMap::on_points(a, a)
    }
    fn compose(&self, f: &GmsMap, g: &GmsMap) -> Result<GmsMap> {
        if f.tgt != g.src {
            return Err(Error::IllTyped(format!("{f:?} ; {g:?}")));
        }
        Ok(GmsMap {
            src: f.src.clone(),
            tgt: g.tgt.clone(),
            func: f.func.iter().map(|&i| g.func[i]).collect(),
        })
    }
    fn is_morphism(&self, f: &GmsMap) -> bool {
        f.src.is_nonexpansive(&f.tgt, &f.func)
    }
    fn hom(&self, a: &FinGms, b: &FinGms) -> Result<Vec<GmsMap>> {
        Ok(a.maps_to(b)
            .into_iter()
            .map(|func| GmsMap { src: a.clone(), tgt: b.clone(), func })
            .collect())
    }
}

impl SkewMonoidal for GmsCat {
    fn tensor_obj(&self, a: &FinGms, b: &FinGms) -> FinGms {
        gms_tensor(a, b)
    }
    fn tensor_mor(&self, f: &GmsMap, g: &GmsMap) -> Result<GmsMap> {
        let nb2 = g.tgt.len();
        let mut func = Vec::with_capacity(f.func.len() * g.func.len());
        for &i in &f.func {
            for &k in &g.func {
                func.push(i * nb2 + k);
            }
        }
        Ok(GmsMap {
            src: gms_tensor(&f.src, &g.src),
            tgt: gms_tensor(&f.tgt, &g.tgt),
            func,
        })
    }
    fn unit(&self) -> FinGms {
        FinGms::point()
    }
    fn assoc(&self, a: &FinGms, b: &FinGms, c: &FinGms) -> Result<GmsMap> {
        Ok(GmsMap::on_points(&self.tensor3r(a, b, c), &self.tensor3l(a, b, c)))
    }
    fn lunit(&self, a: &FinGms) -> Result<GmsMap> {
        Ok(GmsMap::on_points(a, &gms_tensor(&FinGms::point(), a)))
    }
    fn runit(&self, a: &FinGms) -> Result<GmsMap> {
        Ok(GmsMap::on_points(&gms_tensor(a, &FinGms::point()), a))
    }
}

/// Disjoint union with cross distances `∞`, and its two injections.
pub fn gms_coproduct(m: &FinGms, n: &FinGms) -> (FinGms, GmsMap, GmsMap) {
    let (a, b) = (m.len(), n.len());
    let s = FinGms::raw(
        a + b,
        (0..a + b)
            .cartesian_product(0..a + b)
            .map(|(i, j)| match (i < a, j < a) {
                (true, true) => m.dist(i, j),
                (false, false) => n.dist(i - a, j - a),
                _ => ExtRat::INF,
            })
            .collect(),
    )
    ;
    let inl = GmsMap { src: m.clone(), tgt: s.clone(), func: (0..a).collect() };
    let inr = GmsMap { src: n.clone(), tgt: s.clone(), func: (a..a + b).collect() };
    (s, inl, inr)
}

/// Whether `(inl, inr)` into `sum` is a coproduct cocone with respect to
/// every target: restriction along the injections is a bijection
/// `hom(sum, T) → hom(m, T) × hom(n, T)`.
pub fn coproduct_is_universal(inl: &GmsMap, inr: &GmsMap, targets: &[FinGms]) -> bool {
    let sum = &inl.tgt;
    targets.iter().all(|t| {
        let maps = sum.maps_to(t);
        let restricted: Vec<(Vec<usize>, Vec<usize>)> = maps
            .iter()
            .map(|h| {
                (
                    inl.func.iter().map(|&i| h[i]).collect(),
                    inr.func.iter().map(|&i| h[i]).collect(),
                )
            })
            .collect();
        let expected = inl.src.maps_to(t).len() * inr.src.maps_to(t).len();
        let mut sorted = restricted.clone();
        sorted.sort();
        sorted.dedup();
        sorted.len() == restricted.len() && restricted.len() == expected
    })
}

/// Result of [`gms_chain_colimit`].
#[derive(Debug, Clone)]
pub struct ChainColimit {
    pub colimit: FinGms,
    /// The identity-on-points legs are non-expansive.
    pub cocone: bool,
    /// For every target, the cocones into it are exactly the maps out of
    /// the colimit.
    pub universal: bool,
}

/// The colimit of a chain of identity-on-points maps, with the declared
/// pointwise infimum `limit`.
pub fn gms_chain_colimit(
    stages: &[FinGms],
    limit: &FinGms,
    targets: &[FinGms],
) -> Result<ChainColimit> {
    let n = limit.len();
    if stages.iter().any(|s| s.len() != n) {
        return Err(Error::InvalidInstance(String::from("stages on different point sets")));
    }
    for (k, w) in stages.windows(2).enumerate() {
        if !w[1].dominated_by(&w[0]) {
            return Err(Error::NotMonotone(format!("stage {} exceeds stage {k}", k + 1)));
        }
    }
    for (k, s) in stages.iter().enumerate() {
        if !limit.dominated_by(s) {
            return Err(Error::NotLowerBound(format!("limit exceeds stage {k}")));
        }
    }
    limit.validate()?;
    let cocone = stages.iter().all(|s| s.is_nonexpansive(limit, &(0..n).collect::<Vec<_>>()));
    let universal = targets.iter().all(|t| {
        odometer(&vec![t.len(); n]).into_iter().all(|h| {
            let from_chain = stages.iter().all(|s| s.is_nonexpansive(t, &h));
            from_chain == limit.is_nonexpansive(t, &h)
        })
    });
    Ok(ChainColimit { colimit: limit.clone(), cocone, universal })
}

/// A distance-preserving bijection `m → n`, if one exists.
pub fn gms_iso_exists(m: &FinGms, n: &FinGms) -> Option<Vec<usize>> {
    if m.len() != n.len() {
        return None;
    }
    let k = m.len();
    (0..k).permutations(k).find(|p| {
        (0..k).all(|i| (0..k).all(|j| n.dist(p[i], p[j]) == m.dist(i, j)))
    })
}

/// Points are the non-expansive maps `n → p` in lexicographic order, at
/// distance `sup_x p(f x, g x) · 2^{−k}`.
pub fn gms_internal_hom(n: &FinGms, p: &FinGms, k: i64) -> (FinGms, Vec<Vec<usize>>) {
    let maps = n.maps_to(p);
    let sup = |f: &[usize], g: &[usize]| {
        (0..n.len()).fold(ExtRat::zero(), |acc, x| acc.max(p.dist(f[x], g[x])))
    };
    let dist = maps
        .iter()
        .cartesian_product(maps.iter())
        .map(|(f, g)| sup(f, g).scale_pow2(-k))
        .collect();
    (FinGms::raw(maps.len(), dist), maps)
}

/// The internal hom of [`GmsCat`] from [`gms_internal_hom`] with `k = 0`.
/// The tensor is symmetric, so the same object serves either side.
#[derive(Debug, Clone, Copy)]
pub struct GmsHom {
    pub side: Side,
}

impl GmsHom {
    fn index(maps: &[Vec<usize>], f: &[usize]) -> Result<usize> {
        maps.binary_search_by(|m| m.as_slice().cmp(f))
            .map_err(|_| Error::MissingHomData(format!("{f:?} is not a point of the hom space")))
    }
}

impl InternalHom for GmsHom {
    type Cat = GmsCat;

    fn category(&self) -> &GmsCat {
        &GmsCat
    }

    fn side(&self) -> Side {
        self.side
    }

    fn hom_obj(&self, b: &FinGms, c: &FinGms) -> Result<FinGms> {
        Ok(gms_internal_hom(b, c, 0).0)
    }

    fn curry(&self, a: &FinGms, b: &FinGms, c: &FinGms, f: &GmsMap) -> Result<GmsMap> {
        let nb = b.len();
        let (outer, inner) = match self.side {
            Side::Right => (a, b),
            Side::Left => (b, a),
        };
        let (h, maps) = gms_internal_hom(inner, c, 0);
        let func = (0..outer.len())
            .map(|o| {
                let row: Vec<usize> = (0..inner.len())
                    .map(|i| match self.side {
                        Side::Right => f.func[o * nb + i],
                        Side::Left => f.func[i * nb + o],
                    })
                    .collect();
                Self::index(&maps, &row)
            })
            .collect::<Result<_>>()?;
        Ok(GmsMap { src: outer.clone(), tgt: h, func })
    }

    fn uncurry(&self, a: &FinGms, b: &FinGms, c: &FinGms, g: &GmsMap) -> Result<GmsMap> {
        let inner = match self.side {
            Side::Right => b,
            Side::Left => a,
        };
        let (_, maps) = gms_internal_hom(inner, c, 0);
        let mut func = Vec::with_capacity(a.len() * b.len());
        for i in 0..a.len() {
            for j in 0..b.len() {
                let (o, x) = match self.side {
                    Side::Right => (i, j),
                    Side::Left => (j, i),
                };
                let m = maps
                    .get(g.func[o])
                    .ok_or_else(|| Error::MissingHomData(format!("point {} of the hom space", g.func[o])))?;
                func.push(m[x]);
            }
        }
        Ok(GmsMap { src: gms_tensor(a, b), tgt: c.clone(), func })
    }
}
