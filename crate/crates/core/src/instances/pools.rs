//! Default finite pools for the shipped actions.

use alloc::vec;
use alloc::vec::Vec;

use super::actions::{Copower, Kstar};
use super::diagram::{ChainDiagrams, Diagram};
use super::finset::{FinMap, FinSetProduct, FinSetSum};
use super::gms::{d_space, FinGms, GmsCat, GmsMap};
use super::matrix::sample_matrices;
use super::thin::{default_grid, Arrow, ChainEndo, Exponents, Thin, ThinOrder, TruthValues};
use crate::action::ActionPool;
use crate::cat::{hom_closure, Op, Pool};
use crate::num::{ExtRat, Rational};

/// `0 → 1` at distance `1/2`, `1 → 0` at distance `2`.
pub fn asym2() -> FinGms {
    FinGms::new(vec![
        vec![ExtRat::zero(), ExtRat::frac(1, 2)],
        vec![ExtRat::int(2), ExtRat::zero()],
    ])
    .expect("asym2 satisfies the triangle inequality")
}

/// A three-point space with asymmetric grid distances.
pub fn tri3() -> FinGms {
    let (z, h, one, two) = (ExtRat::zero(), ExtRat::frac(1, 2), ExtRat::int(1), ExtRat::int(2));
    FinGms::new(vec![vec![z, one, one], vec![two, z, h], vec![two, two, z]])
        .expect("tri3 satisfies the triangle inequality")
}

/// The point, `D_1` and [`asym2`].
pub fn small_spaces() -> Vec<FinGms> {
    vec![FinGms::point(), d_space(ExtRat::int(1)), asym2()]
}

/// Up to `cap` maps per pair of spaces.
pub fn gms_pool(objects: Vec<FinGms>, cap: usize) -> Pool<FinGms, GmsMap> {
    let morphisms = hom_closure(&GmsCat, &objects, cap);
    Pool::new(objects, morphisms)
}

pub fn thin_pool<P: ThinOrder>(order: P, elems: Vec<P::Elem>) -> Pool<P::Elem, Arrow<P::Elem>> {
    let morphisms = Thin(order).arrows(&elems);
    Pool::new(elems, morphisms)
}

pub fn finset_pool(sizes: &[usize]) -> Pool<usize, FinMap> {
    Pool::new(sizes.to_vec(), hom_closure(&FinSetProduct, sizes, usize::MAX))
}

pub type GmsActionPool<E> = ActionPool<E, Arrow<E>, FinGms, GmsMap>;

pub fn truncation_pool(spaces: Vec<FinGms>) -> GmsActionPool<ExtRat> {
    ActionPool { x: thin_pool(super::thin::MinGrid, default_grid()), c: gms_pool(spaces, 4) }
}

pub fn truth_pool(spaces: Vec<FinGms>) -> GmsActionPool<bool> {
    ActionPool { x: thin_pool(TruthValues, vec![false, true]), c: gms_pool(spaces, 4) }
}

pub fn scaling_pool(natural: bool, spaces: Vec<FinGms>) -> GmsActionPool<i64> {
    let exps = if natural { vec![0, 1, 2] } else { vec![-1, 0, 1] };
    ActionPool { x: thin_pool(Exponents { natural }, exps), c: gms_pool(spaces, 4) }
}

pub fn finset_op_pool() -> ActionPool<usize, Op<FinMap>, usize, FinMap> {
    let x = finset_pool(&[0, 1, 2]);
    ActionPool {
        x: Pool::new(x.objects, x.morphisms.into_iter().map(Op).collect()),
        c: finset_pool(&[0, 1, 2]),
    }
}

/// Acting sets of size at most 1: the action grows as `C^{J^X}`, so sums of
/// three acting objects must stay small.
pub fn finset_j_pool() -> ActionPool<usize, FinMap, usize, FinMap> {
    ActionPool {
        x: Pool::new(vec![0, 1], hom_closure(&FinSetSum, &[0, 1], usize::MAX)),
        c: finset_pool(&[0, 1, 2]),
    }
}

pub fn chain_diagrams() -> Vec<Diagram> {
    let mut out = Diagram::all(1);
    out.push(Diagram::new(2, 1, vec![0, 0]).expect("valid"));
    out.push(Diagram::new(1, 2, vec![1]).expect("valid"));
    out
}

pub fn precompose_pool() -> ActionPool<[usize; 2], Arrow<[usize; 2]>, Diagram, super::diagram::DiagramMap> {
    let objects = chain_diagrams();
    let morphisms = hom_closure(&ChainDiagrams, &objects, 4);
    ActionPool { x: thin_pool(ChainEndo, ChainEndo::all()), c: Pool::new(objects, morphisms) }
}

pub fn scalars() -> Vec<Rational> {
    let r = Rational::new;
    vec![r(1, 1), r(-1, 1), r(2, 1), r(1, 2), r(-3, 2)]
}

pub fn kstar_pool(_: &Kstar) -> ActionPool<Rational, Arrow<Rational>, usize, super::matrix::Matrix> {
    ActionPool {
        x: thin_pool(super::thin::Scalars, scalars()),
        c: Pool::new(vec![1, 2], sample_matrices(2)),
    }
}

pub fn copower_pool(a: &Copower) -> ActionPool<usize, FinMap, usize, Arrow<usize>> {
    ActionPool {
        x: finset_pool(&[0, 1, 2]),
        c: thin_pool(a.lattice().clone(), a.lattice().elements()),
    }
}

pub fn self_tensor_pool() -> ActionPool<usize, FinMap, usize, FinMap> {
    ActionPool {
        x: finset_pool(&[0, 1, 2]),
        c: Pool::new(vec![0, 1, 2], hom_closure(&FinSetSum, &[0, 1, 2], usize::MAX)),
    }
}

/// Every pair of objects, and at most `max_morphisms` pairs of morphisms
/// spread through the full product. The `C` index is offset by the step so
/// a stride sharing a factor with the `C` pool does not pin one morphism.
pub fn product_pool<XO: Clone, XM: Clone, CO: Clone, CM: Clone>(
    pool: &ActionPool<XO, XM, CO, CM>,
    max_morphisms: usize,
) -> Pool<(XO, CO), (XM, CM)> {
    let objects = pool
        .x
        .objects
        .iter()
        .flat_map(|a| pool.c.objects.iter().map(move |b| (a.clone(), b.clone())))
        .collect();
    let (nx, nc) = (pool.x.morphisms.len(), pool.c.morphisms.len());
    let total = nx * nc;
    let stride = total.div_ceil(max_morphisms.max(1)).max(1);
    let morphisms = (0..total)
        .step_by(stride)
        .enumerate()
        .map(|(step, k)| {
            (pool.x.morphisms[k / nc].clone(), pool.c.morphisms[(k + step) % nc].clone())
        })
        .collect();
    Pool::new(objects, morphisms)
}
