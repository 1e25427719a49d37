use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::{compare, Category};
use crate::error::{Error, Result};
use crate::report::{Budget, CheckReport, FailureKind, LawReport};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismRecord {
    pub src: usize,
    pub tgt: usize,
    pub payload: String,
}

/// A category given by tables: objects and morphisms are dense indices,
/// `compose[f][g]` is `f ; g` (or `None` when not composable).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteCategory {
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismRecord>,
    pub identities: Vec<usize>,
    pub compose: Vec<Vec<Option<usize>>>,
}

impl FiniteCategory {
    /// Validates table dimensions and identity endpoints. The composition
    /// table itself is not checked here; that is what
    /// [`check_category_axioms`](super::check_category_axioms) is for.
    pub fn new(
        objects: Vec<String>,
        morphisms: Vec<MorphismRecord>,
        identities: Vec<usize>,
        compose: Vec<Vec<Option<usize>>>,
    ) -> Result<Self> {
        let cat = FiniteCategory {
            objects,
            morphisms,
            identities,
            compose,
        };
        cat.validate()?;
        Ok(cat)
    }

    pub fn validate(&self) -> Result<()> {
        let (n, m) = (self.objects.len(), self.morphisms.len());
        let bad = |s: String| Err(Error::InvalidInstance(s));
        for (i, r) in self.morphisms.iter().enumerate() {
            if r.src >= n || r.tgt >= n {
                return bad(format!("morphism {i} has endpoint out of range"));
            }
        }
        if self.identities.len() != n {
            return bad(format!("{} identities for {n} objects", self.identities.len()));
        }
        for (a, &id) in self.identities.iter().enumerate() {
            if id >= m || self.morphisms[id].src != a || self.morphisms[id].tgt != a {
                return bad(format!("identity of object {a} is not an endomorphism of it"));
            }
        }
        if self.compose.len() != m || self.compose.iter().any(|row| row.len() != m) {
            return bad(format!("composition table is not {m} x {m}"));
        }
        if self.compose.iter().flatten().flatten().any(|&h| h >= m) {
            return bad(String::from("composition table entry out of range"));
        }
        Ok(())
    }

    /// The one-object category of a monoid given by its multiplication table.
    pub fn from_monoid(mul: &[Vec<usize>], unit: usize) -> Result<Self> {
        let n = mul.len();
        let morphisms = (0..n)
            .map(|i| MorphismRecord {
                src: 0,
                tgt: 0,
                payload: format!("{i}"),
            })
            .collect();
        let compose = mul.iter().map(|row| row.iter().map(|&k| Some(k)).collect()).collect();
        Self::new(Vec::from([String::from("*")]), morphisms, Vec::from([unit]), compose)
    }

    /// The thin category on `labels` with an arrow `i -> j` iff `arrow(i, j)`.
    /// `arrow` must be reflexive and transitive.
    pub fn thin(labels: &[&str], arrow: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let n = labels.len();
        let mut morphisms = Vec::new();
        let mut index = alloc::vec![alloc::vec![None; n]; n];
        for i in 0..n {
            for j in 0..n {
                if arrow(i, j) {
                    index[i][j] = Some(morphisms.len());
                    morphisms.push(MorphismRecord {
                        src: i,
                        tgt: j,
                        payload: format!("{}>={}", labels[i], labels[j]),
                    });
                }
            }
        }
        let identities = (0..n)
            .map(|i| index[i][i].ok_or_else(|| Error::InvalidInstance(String::from("not reflexive"))))
            .collect::<Result<Vec<_>>>()?;
        let compose = morphisms
            .iter()
            .map(|f| {
                morphisms
                    .iter()
                    .map(|g| if f.tgt == g.src { index[f.src][g.tgt] } else { None })
                    .collect()
            })
            .collect();
        Self::new(labels.iter().map(|s| s.to_string()).collect(), morphisms, identities, compose)
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn all_objects(&self) -> Vec<usize> {
        (0..self.objects.len()).collect()
    }

    pub fn all_morphisms(&self) -> Vec<usize> {
        (0..self.morphisms.len()).collect()
    }
}

impl Category for FiniteCategory {
    type Obj = usize;
    type Mor = usize;

    fn source(&self, f: &usize) -> usize {
        self.morphisms[*f].src
    }

    fn target(&self, f: &usize) -> usize {
        self.morphisms[*f].tgt
    }

    fn identity(&self, a: &usize) -> usize {
        self.identities[*a]
    }

    fn compose(&self, f: &usize, g: &usize) -> Result<usize> {
        if self.morphisms[*f].tgt != self.morphisms[*g].src {
            return Err(Error::IllTyped(format!("{f} ; {g}: endpoints do not meet")));
        }
        self.compose[*f][*g]
            .ok_or_else(|| Error::IllTyped(format!("{f} ; {g}: composable pair missing from table")))
    }

    fn mor_eq(&self, f: &usize, g: &usize) -> bool {
        self.morphisms[*f] == self.morphisms[*g]
    }

    fn hom(&self, a: &usize, b: &usize) -> Result<Vec<usize>> {
        Ok((0..self.morphisms.len())
            .filter(|&f| self.morphisms[f].src == *a && self.morphisms[f].tgt == *b)
            .collect())
    }
}

/// A functor between finite categories, as index maps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctorData {
    pub on_obj: Vec<usize>,
    pub on_mor: Vec<usize>,
}

impl FunctorData {
    pub fn check(&self, src: &FiniteCategory, tgt: &FiniteCategory) -> CheckReport {
        let mut report = CheckReport::new("functor", &Budget::default());
        let mut law = LawReport::new("functor", "endpoints, identities and composites preserved");
        if self.on_obj.len() != src.objects.len() || self.on_mor.len() != src.morphisms.len() {
            law.fail_with(FailureKind::Shape, Vec::new(), "map sizes do not match the source");
            report.push(law);
            return report;
        }
        for f in 0..src.morphisms.len() {
            let img = self.on_mor[f];
            law.tick();
            if tgt.source(&img) != self.on_obj[src.source(&f)]
                || tgt.target(&img) != self.on_obj[src.target(&f)]
            {
                law.fail_with(FailureKind::Shape, Vec::from([format!("{f}")]), "endpoints not preserved");
            }
        }
        for a in 0..src.objects.len() {
            let inst = || Vec::from([format!("object {a}")]);
            compare(tgt, &mut law, inst, Ok(self.on_mor[src.identity(&a)]), Ok(tgt.identity(&self.on_obj[a])));
        }
        for f in 0..src.morphisms.len() {
            for g in 0..src.morphisms.len() {
                if let Ok(fg) = src.compose(&f, &g) {
                    let inst = || Vec::from([format!("{f}"), format!("{g}")]);
                    let rhs = tgt.compose(&self.on_mor[f], &self.on_mor[g]);
                    compare(tgt, &mut law, inst, Ok(self.on_mor[fg]), rhs);
                }
            }
        }
        report.push(law);
        report
    }
}

/// Components of a natural transformation between two finite functors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NatTransData {
    pub components: Vec<usize>,
}

impl NatTransData {
    pub fn check(
        &self,
        src: &FiniteCategory,
        tgt: &FiniteCategory,
        from: &FunctorData,
        to: &FunctorData,
    ) -> CheckReport {
        let mut report = CheckReport::new("natural transformation", &Budget::default());
        let mut law = LawReport::new("naturality", "F f ; t_B = t_A ; G f");
        for a in 0..src.objects.len() {
            let c = self.components[a];
            law.tick();
            if tgt.source(&c) != from.on_obj[a] || tgt.target(&c) != to.on_obj[a] {
                law.fail_with(FailureKind::Shape, Vec::from([format!("object {a}")]), "component has wrong endpoints");
            }
        }
        for f in 0..src.morphisms.len() {
            let (a, b) = (src.source(&f), src.target(&f));
            let inst = || Vec::from([format!("{f}")]);
            let lhs = tgt.compose(&from.on_mor[f], &self.components[b]);
            let rhs = tgt.compose(&self.components[a], &to.on_mor[f]);
            compare(tgt, &mut law, inst, lhs, rhs);
        }
        report.push(law);
        report
    }
}

/// `x × c` with componentwise structure, plus the two projections.
pub fn product_category(
    x: &FiniteCategory,
    c: &FiniteCategory,
) -> (FiniteCategory, FunctorData, FunctorData) {
    let (no, nm) = (c.objects.len(), c.morphisms.len());
    let objects = x
        .objects
        .iter()
        .flat_map(|a| c.objects.iter().map(move |b| format!("<{a},{b}>")))
        .collect();
    let morphisms = x
        .morphisms
        .iter()
        .flat_map(|f| {
            c.morphisms.iter().map(move |g| MorphismRecord {
                src: f.src * no + g.src,
                tgt: f.tgt * no + g.tgt,
                payload: format!("<{},{}>", f.payload, g.payload),
            })
        })
        .collect::<Vec<_>>();
    let identities = (0..x.objects.len())
        .flat_map(|a| (0..no).map(move |b| (a, b)))
        .map(|(a, b)| x.identities[a] * nm + c.identities[b])
        .collect();
    let total = morphisms.len();
    let compose = (0..total)
        .map(|fg| {
            (0..total)
                .map(|hk| {
                    let (f, g) = (fg / nm, fg % nm);
                    let (h, k) = (hk / nm, hk % nm);
                    match (x.compose[f][h], c.compose[g][k]) {
                        (Some(a), Some(b)) => Some(a * nm + b),
                        _ => None,
                    }
                })
                .collect()
        })
        .collect();
    let prod = FiniteCategory {
        objects,
        morphisms,
        identities,
        compose,
    };
    let px = FunctorData {
        on_obj: (0..prod.objects.len()).map(|i| i / no).collect(),
        on_mor: (0..total).map(|i| i / nm).collect(),
    };
    let pc = FunctorData {
        on_obj: (0..prod.objects.len()).map(|i| i % no).collect(),
        on_mor: (0..total).map(|i| i % nm).collect(),
    };
    (prod, px, pc)
}

/// Same handles, endpoints swapped, composition reversed.
pub fn opposite_category(c: &FiniteCategory) -> FiniteCategory {
    let m = c.morphisms.len();
    FiniteCategory {
        objects: c.objects.clone(),
        morphisms: c
            .morphisms
            .iter()
            .map(|r| MorphismRecord {
                src: r.tgt,
                tgt: r.src,
                payload: r.payload.clone(),
            })
            .collect(),
        identities: c.identities.clone(),
        compose: (0..m)
            .map(|f| (0..m).map(|g| c.compose[g][f]).collect())
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::{check_category_axioms, enumerate_hom, Pool};

    fn z2() -> FiniteCategory {
        FiniteCategory::from_monoid(&[alloc::vec![0, 1], alloc::vec![1, 0]], 0).unwrap()
    }

    fn grid() -> FiniteCategory {
        // 0, 1/2, 1, inf ordered by >=
        FiniteCategory::thin(&["0", "1/2", "1", "inf"], |i, j| i >= j).unwrap()
    }

    fn full_pool(c: &FiniteCategory) -> Pool<usize, usize> {
        Pool::new(c.all_objects(), c.all_morphisms())
    }

    #[test]
    fn monoid_and_thin_categories_pass() {
        for c in [z2(), grid()] {
            let r = check_category_axioms(&c, &full_pool(&c), &Budget::default());
            assert!(r.passed(), "{r:?}");
            assert!(r.laws.iter().all(|l| l.exhaustive));
        }
    }

    #[test]
    fn corrupted_table_is_detected() {
        // Z/3 with the products 1;1 and 1;2 swapped
        let mul = [alloc::vec![0, 1, 2], alloc::vec![1, 2, 0], alloc::vec![2, 0, 1]];
        let mut c = FiniteCategory::from_monoid(&mul, 0).unwrap();
        assert!(check_category_axioms(&c, &full_pool(&c), &Budget::default()).passed());
        c.compose[1].swap(1, 2);
        let r = check_category_axioms(&c, &full_pool(&c), &Budget::default());
        assert!(!r.passed());
        let assoc = r.law("associativity").unwrap();
        assert!(!assoc.passed());
        assert_eq!(assoc.failures[0].kind, FailureKind::Law);
        assert_eq!(assoc.failures[0].instantiation.len(), 3);
    }

    #[test]
    fn missing_entry_is_ill_typed() {
        let mut c = z2();
        c.compose[1][1] = None;
        let r = check_category_axioms(&c, &full_pool(&c), &Budget::default());
        let kinds: Vec<_> = r.laws.iter().flat_map(|l| l.failures.iter().map(|f| f.kind)).collect();
        assert!(kinds.contains(&FailureKind::IllTyped));
    }

    #[test]
    fn product_counts_and_projections() {
        // two objects, three morphisms: the arrow category 0 -> 1
        let arrow = FiniteCategory::thin(&["0", "1"], |i, j| i <= j).unwrap();
        assert_eq!(arrow.morphism_count(), 3);
        let (p, px, pc) = product_category(&arrow, &arrow);
        assert_eq!(p.object_count(), 4);
        assert_eq!(p.morphism_count(), 9);
        assert_eq!(enumerate_hom(&p, &0, &3).unwrap().len(), 1);
        assert!(check_category_axioms(&p, &full_pool(&p), &Budget::default()).passed());
        assert!(px.check(&p, &arrow).passed());
        assert!(pc.check(&p, &arrow).passed());
    }

    #[test]
    fn terminal_times_c_is_c() {
        let one = FiniteCategory::thin(&["*"], |_, _| true).unwrap();
        let c = grid();
        let (p, _, _) = product_category(&one, &c);
        assert_eq!(p.object_count(), c.object_count());
        for a in 0..c.object_count() {
            for b in 0..c.object_count() {
                assert_eq!(
                    enumerate_hom(&p, &a, &b).unwrap().len(),
                    enumerate_hom(&c, &a, &b).unwrap().len()
                );
            }
        }
    }

    #[test]
    fn opposite_is_an_involution() {
        let c = grid();
        let op = opposite_category(&c);
        assert_eq!(opposite_category(&op), c);
        assert!(check_category_axioms(&op, &full_pool(&op), &Budget::default()).passed());
        // the >= order becomes <=: 0 -> inf exists in the opposite
        assert_eq!(enumerate_hom(&op, &0, &3).unwrap().len(), 1);
        assert_eq!(enumerate_hom(&op, &3, &0).unwrap().len(), 0);
    }

    #[test]
    fn opposite_hom_counts() {
        // a three-object category: 0 -> 1 -> 2 with two parallel arrows 0 => 2
        let objects = ["a", "b", "c"].iter().map(|s| s.to_string()).collect();
        let rec = |src, tgt, p: &str| MorphismRecord { src, tgt, payload: p.to_string() };
        let morphisms = alloc::vec![
            rec(0, 0, "ia"), rec(1, 1, "ib"), rec(2, 2, "ic"),
            rec(0, 1, "f"), rec(1, 2, "g"), rec(0, 2, "fg"), rec(0, 2, "h"),
        ];
        let mut compose = alloc::vec![alloc::vec![None; 7]; 7];
        for (i, r) in morphisms.iter().enumerate() {
            compose[r.src][i] = Some(i); // identity on the left
            compose[i][r.tgt] = Some(i); // identity on the right
        }
        compose[3][4] = Some(5);
        let c = FiniteCategory::new(objects, morphisms, alloc::vec![0, 1, 2], compose).unwrap();
        assert!(check_category_axioms(&c, &full_pool(&c), &Budget::default()).passed());
        let op = opposite_category(&c);
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(
                    enumerate_hom(&op, &a, &b).unwrap().len(),
                    enumerate_hom(&c, &b, &a).unwrap().len()
                );
            }
        }
    }

    #[test]
    fn hom_is_closed_under_composition() {
        let (p, _, _) = product_category(&grid(), &z2());
        for f in p.all_morphisms() {
            for g in p.all_morphisms() {
                if let Ok(fg) = p.compose(&f, &g) {
                    let h = enumerate_hom(&p, &p.source(&f), &p.target(&g)).unwrap();
                    assert!(h.iter().any(|k| p.mor_eq(k, &fg)));
                }
            }
        }
    }
}
