//! Concrete actions.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::diagram::{ChainDiagrams, Diagram, DiagramMap};
use super::finset::{decode, encode, pow, FinMap, FinSetProduct, FinSetSum};
use super::gms::{gms_act, FinGms, GmsAct, GmsCat, GmsMap};
use super::lattice::{FinLattice, LatticeCat};
use super::matrix::{MatCat, Matrix};
use super::thin::{
    Arrow, ChainEndo, ChainEndoCat, Endo, Exponents, MinGrid, Scalars, ScalarCat, Thin, ThinOrder,
    TruthValues,
};
use crate::action::{StrongAction, WeakAction};
use crate::cat::{Category, Op};
use crate::closed::{DualData, LeftDuals, RightAdjoint, TriangleHom};
use crate::error::{Error, Result};
use crate::num::{rpow, ExtRat, Rational};
use crate::skew::{IdentityInverses, LaxMonoidalComonad, OppositeMonoidal, SkewMonoidal, Terminal};

/// How an element of a thin acting category transforms distances.
pub trait GmsMode: ThinOrder {
    fn mode(&self, x: &Self::Elem) -> GmsAct;
}

impl GmsMode for MinGrid {
    fn mode(&self, x: &ExtRat) -> GmsAct {
        GmsAct::Truncate(*x)
    }
}

impl GmsMode for TruthValues {
    fn mode(&self, x: &bool) -> GmsAct {
        GmsAct::Flatten(*x)
    }
}

impl GmsMode for Exponents {
    fn mode(&self, x: &i64) -> GmsAct {
        GmsAct::Scale(*x)
    }
}

/// An action on metric spaces that changes distances and keeps points:
/// every structure map is the identity on points.
#[derive(Debug, Clone, Copy, Default)]
pub struct OnGms<P> {
    pub x: Thin<P>,
}

impl<P> OnGms<P> {
    pub fn new(order: P) -> Self {
        OnGms { x: Thin(order) }
    }
}

/// `C^x = min(d, x)` over the grid `([0,∞], ≥, min, ∞)`.
pub type Truncation = OnGms<MinGrid>;
/// `C^T = C`, `C^F` the discrete space on `C`.
pub type TruthAction = OnGms<TruthValues>;
/// `C^k = 2^k · d`.
pub type Scaling = OnGms<Exponents>;

impl<P: GmsMode> OnGms<P> {
    fn at(&self, c: &FinGms, x: &P::Elem) -> FinGms {
        gms_act(c, self.x.0.mode(x))
    }
}

impl<P: GmsMode> WeakAction for OnGms<P> {
    type X = Thin<P>;
    type C = GmsCat;

    fn acting(&self) -> &Thin<P> {
        &self.x
    }
    fn acted(&self) -> &GmsCat {
        &GmsCat
    }
    fn act_obj(&self, c: &FinGms, x: &P::Elem) -> FinGms {
        self.at(c, x)
    }
    fn act_mor(&self, g: &GmsMap, x: &P::Elem) -> Result<GmsMap> {
        Ok(GmsMap { src: self.at(&g.src, x), tgt: self.at(&g.tgt, x), func: g.func.clone() })
    }
    fn act_x_mor(&self, c: &FinGms, f: &Arrow<P::Elem>) -> Result<GmsMap> {
        Ok(GmsMap::on_points(&self.at(c, &f.src), &self.at(c, &f.tgt)))
    }
    fn phi2(&self, x: &P::Elem, b: &FinGms, c: &FinGms) -> Result<GmsMap> {
        let src = GmsCat.tensor_obj(&self.at(b, x), &self.at(c, x));
        Ok(GmsMap::on_points(&src, &self.at(&GmsCat.tensor_obj(b, c), x)))
    }
    fn phi0(&self, x: &P::Elem) -> Result<GmsMap> {
        let i = FinGms::point();
        Ok(GmsMap::on_points(&i, &self.at(&i, x)))
    }
    fn psi2(&self, x: &P::Elem, y: &P::Elem, c: &FinGms) -> Result<GmsMap> {
        let xy = self.x.0.tensor(x, y);
        Ok(GmsMap::on_points(&self.at(c, &xy), &self.at(&self.at(c, x), y)))
    }
    fn psi0(&self, c: &FinGms) -> Result<GmsMap> {
        Ok(GmsMap::on_points(&self.at(c, &self.x.0.unit()), c))
    }
}

fn reversed(m: &GmsMap) -> GmsMap {
    GmsMap::on_points(&m.tgt, &m.src)
}

macro_rules! on_gms_strong {
    ($t:ty) => {
        impl StrongAction for $t {
            fn phi2_inv(&self, x: &XE<$t>, b: &FinGms, c: &FinGms) -> Result<GmsMap> {
                Ok(reversed(&self.phi2(x, b, c)?))
            }
            fn phi0_inv(&self, x: &XE<$t>) -> Result<GmsMap> {
                Ok(reversed(&self.phi0(x)?))
            }
            fn psi2_inv(&self, x: &XE<$t>, y: &XE<$t>, c: &FinGms) -> Result<GmsMap> {
                Ok(reversed(&self.psi2(x, y, c)?))
            }
            fn psi0_inv(&self, c: &FinGms) -> Result<GmsMap> {
                Ok(reversed(&self.psi0(c)?))
            }
        }
    };
}

type XE<A> = <<A as WeakAction>::X as Category>::Obj;

on_gms_strong!(TruthAction);
on_gms_strong!(Scaling);

/// Truncation with candidate inverses that are the identity on points in
/// the other direction. They are not non-expansive in general, so the
/// strong action check rejects them.
#[derive(Debug, Clone, Copy, Default)]
pub struct TruncationCandidate(pub Truncation);

impl WeakAction for TruncationCandidate {
    type X = Thin<MinGrid>;
    type C = GmsCat;

    fn acting(&self) -> &Thin<MinGrid> {
        self.0.acting()
    }
    fn acted(&self) -> &GmsCat {
        &GmsCat
    }
    fn act_obj(&self, c: &FinGms, x: &ExtRat) -> FinGms {
        self.0.act_obj(c, x)
    }
    fn act_mor(&self, g: &GmsMap, x: &ExtRat) -> Result<GmsMap> {
        self.0.act_mor(g, x)
    }
    fn act_x_mor(&self, c: &FinGms, f: &Arrow<ExtRat>) -> Result<GmsMap> {
        self.0.act_x_mor(c, f)
    }
    fn phi2(&self, x: &ExtRat, b: &FinGms, c: &FinGms) -> Result<GmsMap> {
        self.0.phi2(x, b, c)
    }
    fn phi0(&self, x: &ExtRat) -> Result<GmsMap> {
        self.0.phi0(x)
    }
    fn psi2(&self, x: &ExtRat, y: &ExtRat, c: &FinGms) -> Result<GmsMap> {
        self.0.psi2(x, y, c)
    }
    fn psi0(&self, c: &FinGms) -> Result<GmsMap> {
        self.0.psi0(c)
    }
}

on_gms_strong!(TruncationCandidate);

/// `C_y = 2^{-y} · d`, right adjoint (and inverse) to scaling by `2^y`.
#[derive(Debug, Clone, Copy, Default)]
pub struct ScalingAdjoint {
    pub action: Scaling,
}

impl RightAdjoint for ScalingAdjoint {
    type Action = Scaling;

    fn action(&self) -> &Scaling {
        &self.action
    }
    fn radj_obj(&self, c: &FinGms, y: &i64) -> Result<FinGms> {
        Ok(gms_act(c, GmsAct::Scale(-*y)))
    }
    fn radj_mor(&self, g: &GmsMap, y: &i64) -> Result<GmsMap> {
        Ok(GmsMap { src: self.radj_obj(&g.src, y)?, tgt: self.radj_obj(&g.tgt, y)?, func: g.func.clone() })
    }
    fn unit(&self, c: &FinGms, y: &i64) -> Result<GmsMap> {
        Ok(GmsMap::on_points(c, &self.radj_obj(&self.action.act_obj(c, y), y)?))
    }
    fn counit(&self, c: &FinGms, y: &i64) -> Result<GmsMap> {
        Ok(GmsMap::on_points(&self.action.act_obj(&self.radj_obj(c, y)?, y), c))
    }
}

/// Duals in the exponents: `∨y = −y` over ℤ; over ℕ only `0` has one.
#[derive(Debug, Clone, Copy, Default)]
pub struct ExponentDuals {
    pub x: Thin<Exponents>,
}

impl LeftDuals for ExponentDuals {
    type Cat = Thin<Exponents>;
    fn category(&self) -> &Thin<Exponents> {
        &self.x
    }
    fn dual(&self, y: &i64) -> Result<DualData<i64, Arrow<i64>>> {
        if !self.x.0.contains(-*y) {
            return Err(Error::NoDual(format!("{y}")));
        }
        Ok(DualData { dual: -*y, eval: Arrow::new(0, 0), coeval: Arrow::new(0, 0) })
    }
}

/// Invert a bijective function table.
fn invert(f: &FinMap) -> Result<FinMap> {
    if f.src != f.tgt {
        return Err(Error::MissingWitness(format!("{f:?} is not a bijection")));
    }
    let mut table = alloc::vec![usize::MAX; f.tgt];
    for (i, &v) in f.table.iter().enumerate() {
        if v >= f.tgt || table[v] != usize::MAX {
            return Err(Error::MissingWitness(format!("{f:?} is not a bijection")));
        }
        table[v] = i;
    }
    Ok(FinMap { src: f.tgt, tgt: f.src, table })
}

/// `h ↦ h ; g` on functions `n → B`, encoded.
fn postcompose(g: &FinMap, n: usize) -> FinMap {
    FinMap::from_fn(pow(g.src, n), pow(g.tgt, n), |idx| {
        let h: Vec<usize> = decode(idx, n, g.src).into_iter().map(|v| g.table[v]).collect();
        encode(&h, g.tgt)
    })
}

/// `(h, k) ↦ (u ↦ (h u, k u))` on functions from `n` points.
fn pairing(n: usize, b: usize, c: usize) -> FinMap {
    let (nb, nc) = (pow(b, n), pow(c, n));
    FinMap::from_fn(nb * nc, pow(b * c, n), |i| {
        let (h, k) = (decode(i / nc, n, b), decode(i % nc, n, c));
        let hk: Vec<usize> = (0..n).map(|u| h[u] * c + k[u]).collect();
        encode(&hk, b * c)
    })
}

/// `C^X = C^{|X|}` for finite sets acting contravariantly on themselves.
#[derive(Debug, Clone, Copy)]
pub struct FinSetOp {
    x: OppositeMonoidal<FinSetProduct, IdentityInverses>,
}

impl Default for FinSetOp {
    fn default() -> Self {
        FinSetOp { x: OppositeMonoidal::new(FinSetProduct, IdentityInverses) }
    }
}

impl WeakAction for FinSetOp {
    type X = OppositeMonoidal<FinSetProduct, IdentityInverses>;
    type C = FinSetProduct;

    fn acting(&self) -> &Self::X {
        &self.x
    }
    fn acted(&self) -> &FinSetProduct {
        &FinSetProduct
    }
    fn act_obj(&self, c: &usize, x: &usize) -> usize {
        pow(*c, *x)
    }
    fn act_mor(&self, g: &FinMap, x: &usize) -> Result<FinMap> {
        Ok(postcompose(g, *x))
    }
    /// `f : Y → X` in finite sets gives `h ↦ f ; h`.
    fn act_x_mor(&self, c: &usize, f: &Op<FinMap>) -> Result<FinMap> {
        let (f, c) = (&f.0, *c);
        Ok(FinMap::from_fn(pow(c, f.tgt), pow(c, f.src), |idx| {
            let h = decode(idx, f.tgt, c);
            encode(&f.table.iter().map(|&v| h[v]).collect::<Vec<_>>(), c)
        }))
    }
    fn phi2(&self, x: &usize, b: &usize, c: &usize) -> Result<FinMap> {
        Ok(pairing(*x, *b, *c))
    }
    fn phi0(&self, _: &usize) -> Result<FinMap> {
        Ok(FinMap::identity(1))
    }
    /// `h ↦ (v ↦ (u ↦ h(u, v)))`
    fn psi2(&self, x: &usize, y: &usize, c: &usize) -> Result<FinMap> {
        let (x, y, c) = (*x, *y, *c);
        let cx = pow(c, x);
        Ok(FinMap::from_fn(pow(c, x * y), pow(cx, y), |idx| {
            let h = decode(idx, x * y, c);
            let outer: Vec<usize> = (0..y)
                .map(|v| encode(&(0..x).map(|u| h[u * y + v]).collect::<Vec<_>>(), c))
                .collect();
            encode(&outer, cx)
        }))
    }
    fn psi0(&self, c: &usize) -> Result<FinMap> {
        Ok(FinMap::identity(*c))
    }
}

macro_rules! finset_strong {
    ($t:ty) => {
        impl StrongAction for $t {
            fn phi2_inv(&self, x: &XE<$t>, b: &usize, c: &usize) -> Result<FinMap> {
                invert(&self.phi2(x, b, c)?)
            }
            fn phi0_inv(&self, x: &XE<$t>) -> Result<FinMap> {
                invert(&self.phi0(x)?)
            }
            fn psi2_inv(&self, x: &XE<$t>, y: &XE<$t>, c: &usize) -> Result<FinMap> {
                invert(&self.psi2(x, y, c)?)
            }
            fn psi0_inv(&self, c: &usize) -> Result<FinMap> {
                invert(&self.psi0(c)?)
            }
        }
    };
}

finset_strong!(FinSetOp);

/// `C^X = C^{J^X}` for finite sets under `+` acting on finite sets under `×`.
#[derive(Debug, Clone, Copy)]
pub struct FinSetJ {
    pub j: usize,
}

impl FinSetJ {
    fn fx(&self, x: usize) -> usize {
        pow(self.j, x)
    }
}

impl WeakAction for FinSetJ {
    type X = FinSetSum;
    type C = FinSetProduct;

    fn acting(&self) -> &FinSetSum {
        &FinSetSum
    }
    fn acted(&self) -> &FinSetProduct {
        &FinSetProduct
    }
    fn act_obj(&self, c: &usize, x: &usize) -> usize {
        pow(*c, self.fx(*x))
    }
    fn act_mor(&self, g: &FinMap, x: &usize) -> Result<FinMap> {
        Ok(postcompose(g, self.fx(*x)))
    }
    /// `f : X → Y` gives `h ↦ (u ↦ h(f ; u))`.
    fn act_x_mor(&self, c: &usize, f: &FinMap) -> Result<FinMap> {
        let (c, j) = (*c, self.j);
        let (nx, ny) = (self.fx(f.src), self.fx(f.tgt));
        Ok(FinMap::from_fn(pow(c, nx), pow(c, ny), |idx| {
            let h = decode(idx, nx, c);
            let k: Vec<usize> = (0..ny)
                .map(|ui| {
                    let u = decode(ui, f.tgt, j);
                    h[encode(&f.table.iter().map(|&v| u[v]).collect::<Vec<_>>(), j)]
                })
                .collect();
            encode(&k, c)
        }))
    }
    fn phi2(&self, x: &usize, b: &usize, c: &usize) -> Result<FinMap> {
        Ok(pairing(self.fx(*x), *b, *c))
    }
    fn phi0(&self, _: &usize) -> Result<FinMap> {
        Ok(FinMap::identity(1))
    }
    /// `h ↦ (v ↦ (u ↦ h[u, v]))`
    fn psi2(&self, x: &usize, y: &usize, c: &usize) -> Result<FinMap> {
        let (x, y, c, j) = (*x, *y, *c, self.j);
        let (nx, ny, nxy) = (self.fx(x), self.fx(y), self.fx(x + y));
        let cx = pow(c, nx);
        Ok(FinMap::from_fn(pow(c, nxy), pow(cx, ny), |idx| {
            let h = decode(idx, nxy, c);
            let outer: Vec<usize> = (0..ny)
                .map(|vi| {
                    let v = decode(vi, y, j);
                    let inner: Vec<usize> = (0..nx)
                        .map(|ui| {
                            let mut uv = decode(ui, x, j);
                            uv.extend_from_slice(&v);
                            h[encode(&uv, j)]
                        })
                        .collect();
                    encode(&inner, c)
                })
                .collect();
            encode(&outer, cx)
        }))
    }
    fn psi0(&self, c: &usize) -> Result<FinMap> {
        Ok(FinMap::identity(*c))
    }
}

finset_strong!(FinSetJ);

/// Monotone endomaps of `0 < 1` acting on chain diagrams by precomposition.
#[derive(Debug, Clone, Copy, Default)]
pub struct Precompose {
    x: ChainEndoCat,
}

fn precompose(d: &Diagram, f: &Endo) -> Diagram {
    Diagram { sets: [d.sets[f[0]], d.sets[f[1]]], map: d.along(f[0], f[1]).table }
}

fn diagram_on_points(src: Diagram, tgt: Diagram) -> DiagramMap {
    let at = [(0..src.sets[0]).collect(), (0..src.sets[1]).collect()];
    DiagramMap { src, tgt, at }
}

impl WeakAction for Precompose {
    type X = ChainEndoCat;
    type C = ChainDiagrams;

    fn acting(&self) -> &ChainEndoCat {
        &self.x
    }
    fn acted(&self) -> &ChainDiagrams {
        &ChainDiagrams
    }
    fn act_obj(&self, c: &Diagram, f: &Endo) -> Diagram {
        precompose(c, f)
    }
    fn act_mor(&self, g: &DiagramMap, f: &Endo) -> Result<DiagramMap> {
        Ok(DiagramMap {
            src: precompose(&g.src, f),
            tgt: precompose(&g.tgt, f),
            at: [g.at[f[0]].clone(), g.at[f[1]].clone()],
        })
    }
    fn act_x_mor(&self, c: &Diagram, f: &Arrow<Endo>) -> Result<DiagramMap> {
        let (s, t) = (f.src, f.tgt);
        if s[0] > t[0] || s[1] > t[1] {
            return Err(Error::IllTyped(format!("{f:?} is not an arrow")));
        }
        Ok(DiagramMap {
            src: precompose(c, &s),
            tgt: precompose(c, &t),
            at: [c.along(s[0], t[0]).table, c.along(s[1], t[1]).table],
        })
    }
    fn phi2(&self, f: &Endo, b: &Diagram, c: &Diagram) -> Result<DiagramMap> {
        let cd = ChainDiagrams;
        Ok(diagram_on_points(
            cd.tensor_obj(&precompose(b, f), &precompose(c, f)),
            precompose(&cd.tensor_obj(b, c), f),
        ))
    }
    fn phi0(&self, f: &Endo) -> Result<DiagramMap> {
        let i = ChainDiagrams.unit();
        Ok(diagram_on_points(i.clone(), precompose(&i, f)))
    }
    fn psi2(&self, f: &Endo, g: &Endo, c: &Diagram) -> Result<DiagramMap> {
        let fg = ChainEndo.tensor(f, g);
        Ok(diagram_on_points(precompose(c, &fg), precompose(&precompose(c, f), g)))
    }
    fn psi0(&self, c: &Diagram) -> Result<DiagramMap> {
        Ok(diagram_on_points(precompose(c, &ChainEndo.unit()), c.clone()))
    }
}

impl StrongAction for Precompose {
    fn phi2_inv(&self, f: &Endo, b: &Diagram, c: &Diagram) -> Result<DiagramMap> {
        let m = self.phi2(f, b, c)?;
        Ok(diagram_on_points(m.tgt, m.src))
    }
    fn phi0_inv(&self, f: &Endo) -> Result<DiagramMap> {
        let m = self.phi0(f)?;
        Ok(diagram_on_points(m.tgt, m.src))
    }
    fn psi2_inv(&self, f: &Endo, g: &Endo, c: &Diagram) -> Result<DiagramMap> {
        let m = self.psi2(f, g, c)?;
        Ok(diagram_on_points(m.tgt, m.src))
    }
    fn psi0_inv(&self, c: &Diagram) -> Result<DiagramMap> {
        let m = self.psi0(c)?;
        Ok(diagram_on_points(m.tgt, m.src))
    }
}

/// Nonzero scalars acting trivially on matrices, with `φ^x = x^k · id` and
/// `φ^x_0 = x^{-k}`.
#[derive(Debug, Clone, Copy)]
pub struct Kstar {
    pub k: i64,
    x: ScalarCat,
}

impl Kstar {
    pub fn new(k: i64) -> Self {
        Kstar { k, x: Thin(Scalars) }
    }
}

impl WeakAction for Kstar {
    type X = ScalarCat;
    type C = MatCat;

    fn acting(&self) -> &ScalarCat {
        &self.x
    }
    fn acted(&self) -> &MatCat {
        &MatCat
    }
    fn act_obj(&self, c: &usize, _: &Rational) -> usize {
        *c
    }
    fn act_mor(&self, g: &Matrix, _: &Rational) -> Result<Matrix> {
        Ok(g.clone())
    }
    fn act_x_mor(&self, c: &usize, f: &Arrow<Rational>) -> Result<Matrix> {
        if f.src != f.tgt {
            return Err(Error::IllTyped(format!("{f:?} is not an arrow")));
        }
        Ok(Matrix::identity(*c))
    }
    fn phi2(&self, x: &Rational, b: &usize, c: &usize) -> Result<Matrix> {
        Ok(Matrix::scalar(b * c, rpow(*x, self.k)))
    }
    fn phi0(&self, x: &Rational) -> Result<Matrix> {
        Ok(Matrix::scalar(1, rpow(*x, -self.k)))
    }
    fn psi2(&self, _: &Rational, _: &Rational, c: &usize) -> Result<Matrix> {
        Ok(Matrix::identity(*c))
    }
    fn psi0(&self, c: &usize) -> Result<Matrix> {
        Ok(Matrix::identity(*c))
    }
}

impl StrongAction for Kstar {
    fn phi2_inv(&self, x: &Rational, b: &usize, c: &usize) -> Result<Matrix> {
        Ok(Matrix::scalar(b * c, rpow(*x, -self.k)))
    }
    fn phi0_inv(&self, x: &Rational) -> Result<Matrix> {
        Ok(Matrix::scalar(1, rpow(*x, self.k)))
    }
    fn psi2_inv(&self, _: &Rational, _: &Rational, c: &usize) -> Result<Matrix> {
        Ok(Matrix::identity(*c))
    }
    fn psi0_inv(&self, c: &usize) -> Result<Matrix> {
        Ok(Matrix::identity(*c))
    }
}

/// `∨x = x⁻¹`; zero has no dual.
#[derive(Debug, Clone, Copy, Default)]
pub struct ScalarDuals {
    pub x: ScalarCat,
}

impl LeftDuals for ScalarDuals {
    type Cat = ScalarCat;
    fn category(&self) -> &ScalarCat {
        &self.x
    }
    fn dual(&self, x: &Rational) -> Result<DualData<Rational, Arrow<Rational>>> {
        if x.is_zero() {
            return Err(Error::NoDual(String::from("0")));
        }
        let one = Rational::one();
        Ok(DualData { dual: x.recip(), eval: Arrow::new(one, one), coeval: Arrow::new(one, one) })
    }
}

/// Finite sets acting on a lattice: `C^0 = ⊥`, `C^X = C` otherwise.
#[derive(Debug, Clone)]
pub struct Copower {
    c: LatticeCat,
}

impl Copower {
    pub fn new(lattice: FinLattice) -> Self {
        Copower { c: Thin(lattice) }
    }

    pub fn lattice(&self) -> &FinLattice {
        &self.c.0
    }

    fn at(&self, c: usize, x: usize) -> usize {
        if x == 0 {
            self.c.0.bottom()
        } else {
            c
        }
    }
}

impl WeakAction for Copower {
    type X = FinSetProduct;
    type C = LatticeCat;

    fn acting(&self) -> &FinSetProduct {
        &FinSetProduct
    }
    fn acted(&self) -> &LatticeCat {
        &self.c
    }
    fn act_obj(&self, c: &usize, x: &usize) -> usize {
        self.at(*c, *x)
    }
    fn act_mor(&self, g: &Arrow<usize>, x: &usize) -> Result<Arrow<usize>> {
        Ok(Arrow::new(self.at(g.src, *x), self.at(g.tgt, *x)))
    }
    fn act_x_mor(&self, c: &usize, f: &FinMap) -> Result<Arrow<usize>> {
        Ok(Arrow::new(self.at(*c, f.src), self.at(*c, f.tgt)))
    }
    fn phi2(&self, x: &usize, b: &usize, c: &usize) -> Result<Arrow<usize>> {
        let l = &self.c.0;
        Ok(Arrow::new(l.join(self.at(*b, *x), self.at(*c, *x)), self.at(l.join(*b, *c), *x)))
    }
    fn phi0(&self, x: &usize) -> Result<Arrow<usize>> {
        let bot = self.c.0.bottom();
        Ok(Arrow::new(bot, self.at(bot, *x)))
    }
    fn psi2(&self, x: &usize, y: &usize, c: &usize) -> Result<Arrow<usize>> {
        Ok(Arrow::new(self.at(*c, x * y), self.at(self.at(*c, *x), *y)))
    }
    fn psi0(&self, c: &usize) -> Result<Arrow<usize>> {
        Ok(Arrow::new(self.at(*c, 1), *c))
    }
}

fn flip(a: Arrow<usize>) -> Arrow<usize> {
    Arrow::new(a.tgt, a.src)
}

impl StrongAction for Copower {
    fn phi2_inv(&self, x: &usize, b: &usize, c: &usize) -> Result<Arrow<usize>> {
        Ok(flip(self.phi2(x, b, c)?))
    }
    fn phi0_inv(&self, x: &usize) -> Result<Arrow<usize>> {
        Ok(flip(self.phi0(x)?))
    }
    fn psi2_inv(&self, x: &usize, y: &usize, c: &usize) -> Result<Arrow<usize>> {
        Ok(flip(self.psi2(x, y, c)?))
    }
    fn psi0_inv(&self, c: &usize) -> Result<Arrow<usize>> {
        Ok(flip(self.psi0(c)?))
    }
}

/// `B⊳C = 1` if `B ≤ C`, else `0`.
#[derive(Debug, Clone)]
pub struct CopowerTriangle {
    pub action: Copower,
}

impl TriangleHom for CopowerTriangle {
    type Action = Copower;

    fn action(&self) -> &Copower {
        &self.action
    }
    fn tri_obj(&self, b: &usize, c: &usize) -> usize {
        usize::from(self.action.lattice().leq(*b, *c))
    }
    fn transpose(&self, b: &usize, x: &usize, c: &usize, _: &Arrow<usize>) -> Result<FinMap> {
        Ok(FinMap { src: *x, tgt: self.tri_obj(b, c), table: alloc::vec![0; *x] })
    }
    fn untranspose(&self, b: &usize, x: &usize, c: &usize, _: &FinMap) -> Result<Arrow<usize>> {
        Ok(Arrow::new(self.action.at(*b, *x), *c))
    }
}

/// Finite sets under `×` acting on finite sets under `+` by `B^X = B × X`.
#[derive(Debug, Clone, Copy, Default)]
pub struct SelfTensor;

impl WeakAction for SelfTensor {
    type X = FinSetProduct;
    type C = FinSetSum;

    fn acting(&self) -> &FinSetProduct {
        &FinSetProduct
    }
    fn acted(&self) -> &FinSetSum {
        &FinSetSum
    }
    fn act_obj(&self, b: &usize, x: &usize) -> usize {
        b * x
    }
    fn act_mor(&self, g: &FinMap, x: &usize) -> Result<FinMap> {
        FinSetProduct.tensor_mor(g, &FinMap::identity(*x))
    }
    fn act_x_mor(&self, b: &usize, f: &FinMap) -> Result<FinMap> {
        FinSetProduct.tensor_mor(&FinMap::identity(*b), f)
    }
    fn phi2(&self, x: &usize, b: &usize, c: &usize) -> Result<FinMap> {
        Ok(FinMap::identity(b * x + c * x))
    }
    fn phi0(&self, _: &usize) -> Result<FinMap> {
        Ok(FinMap::identity(0))
    }
    fn psi2(&self, x: &usize, y: &usize, c: &usize) -> Result<FinMap> {
        Ok(FinMap::identity(c * x * y))
    }
    fn psi0(&self, c: &usize) -> Result<FinMap> {
        Ok(FinMap::identity(*c))
    }
}

finset_strong!(SelfTensor);

/// `B⊳C = C^B`.
#[derive(Debug, Clone, Copy, Default)]
pub struct SelfTensorTriangle {
    pub action: SelfTensor,
}

impl TriangleHom for SelfTensorTriangle {
    type Action = SelfTensor;

    fn action(&self) -> &SelfTensor {
        &self.action
    }
    fn tri_obj(&self, b: &usize, c: &usize) -> usize {
        pow(*c, *b)
    }
    fn transpose(&self, b: &usize, x: &usize, c: &usize, f: &FinMap) -> Result<FinMap> {
        let (b, x, c) = (*b, *x, *c);
        Ok(FinMap::from_fn(x, pow(c, b), |i| {
            encode(&(0..b).map(|bi| f.table[bi * x + i]).collect::<Vec<_>>(), c)
        }))
    }
    fn untranspose(&self, b: &usize, x: &usize, c: &usize, g: &FinMap) -> Result<FinMap> {
        let (b, x, c) = (*b, *x, *c);
        Ok(FinMap::from_fn(b * x, c, |k| decode(g.table[k % x], b, c)[k / x]))
    }
}

/// The terminal category acting trivially.
#[derive(Debug, Clone, Copy, Default)]
pub struct TrivialAction<C> {
    pub c: C,
}

impl<C: SkewMonoidal> WeakAction for TrivialAction<C> {
    type X = Terminal;
    type C = C;

    fn acting(&self) -> &Terminal {
        &Terminal
    }
    fn acted(&self) -> &C {
        &self.c
    }
    fn act_obj(&self, c: &C::Obj, _: &()) -> C::Obj {
        c.clone()
    }
    fn act_mor(&self, g: &C::Mor, _: &()) -> Result<C::Mor> {
        Ok(g.clone())
    }
    fn act_x_mor(&self, c: &C::Obj, _: &()) -> Result<C::Mor> {
        Ok(self.c.identity(c))
    }
    fn phi2(&self, _: &(), b: &C::Obj, c: &C::Obj) -> Result<C::Mor> {
        Ok(self.c.identity(&self.c.tensor_obj(b, c)))
    }
    fn phi0(&self, _: &()) -> Result<C::Mor> {
        Ok(self.c.identity(&self.c.unit()))
    }
    fn psi2(&self, _: &(), _: &(), c: &C::Obj) -> Result<C::Mor> {
        Ok(self.c.identity(c))
    }
    fn psi0(&self, c: &C::Obj) -> Result<C::Mor> {
        Ok(self.c.identity(c))
    }
}

impl<C: SkewMonoidal> StrongAction for TrivialAction<C> {
    fn phi2_inv(&self, x: &(), b: &C::Obj, c: &C::Obj) -> Result<C::Mor> {
        self.phi2(x, b, c)
    }
    fn phi0_inv(&self, x: &()) -> Result<C::Mor> {
        self.phi0(x)
    }
    fn psi2_inv(&self, x: &(), y: &(), c: &C::Obj) -> Result<C::Mor> {
        self.psi2(x, y, c)
    }
    fn psi0_inv(&self, c: &C::Obj) -> Result<C::Mor> {
        self.psi0(c)
    }
}

/// `T = (-)^F`, the discrete-space comonad, on metric spaces.
#[derive(Debug, Clone, Copy, Default)]
pub struct FlattenComonad;

fn flat(c: &FinGms) -> FinGms {
    gms_act(c, GmsAct::Flatten(false))
}

impl LaxMonoidalComonad for FlattenComonad {
    type Cat = GmsCat;

    fn category(&self) -> &GmsCat {
        &GmsCat
    }
    fn on_obj(&self, a: &FinGms) -> FinGms {
        flat(a)
    }
    fn on_mor(&self, f: &GmsMap) -> Result<GmsMap> {
        Ok(GmsMap { src: flat(&f.src), tgt: flat(&f.tgt), func: f.func.clone() })
    }
    fn mult(&self, b: &FinGms, c: &FinGms) -> Result<GmsMap> {
        Ok(GmsMap::on_points(&GmsCat.tensor_obj(&flat(b), &flat(c)), &flat(&GmsCat.tensor_obj(b, c))))
    }
    fn unit_map(&self) -> Result<GmsMap> {
        Ok(GmsMap::on_points(&FinGms::point(), &flat(&FinGms::point())))
    }
    fn counit(&self, c: &FinGms) -> Result<GmsMap> {
        Ok(GmsMap::on_points(&flat(c), c))
    }
    fn comult(&self, c: &FinGms) -> Result<GmsMap> {
        Ok(GmsMap::on_points(&flat(c), &flat(&flat(c))))
    }
}
