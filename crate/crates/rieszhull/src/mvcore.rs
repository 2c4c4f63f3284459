//! Finite semisimple MV-algebras as rational function algebras over a
//! finite point set: truncated operations, generated subalgebras, ideals,
//! maximal spectra, chain decompositions, and homomorphisms as point maps.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rat::{QVector, Rat};

/// Ordered finite point set; labels index the entries of every `QVector`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    labels: Vec<String>,
}

impl PointSet {
    pub fn new(labels: Vec<String>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::Domain("point set must be nonempty".into()));
        }
        let mut seen = BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.clone()) {
                return Err(Error::Domain(format!("duplicate point label {l:?}")));
            }
        }
        Ok(PointSet { labels })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

fn check_unit_range(v: &QVector) -> Result<()> {
    if !v.in_unit_cube() {
        return Err(Error::Domain(format!("entry of {v} outside [0,1]")));
    }
    Ok(())
}

fn check_same_len(a: &QVector, b: &QVector) -> Result<()> {
    if a.len() != b.len() {
        return Err(Error::Domain(format!(
            "length mismatch: {} vs {}",
            a.len(),
            b.len()
        )));
    }
    Ok(())
}

/// Truncated sum: min(1, a + b), pointwise.
pub fn oplus(a: &QVector, b: &QVector) -> Result<QVector> {
    check_same_len(a, b)?;
    check_unit_range(a)?;
    check_unit_range(b)?;
    Ok((a + b).truncate())
}

/// Involution: 1 - a, pointwise.
pub fn neg(a: &QVector) -> Result<QVector> {
    check_unit_range(a)?;
    Ok(&QVector::ones(a.len()) - a)
}

/// a (.) b = (a* (+) b*)*, i.e. max(0, a + b - 1).
pub fn odot(a: &QVector, b: &QVector) -> Result<QVector> {
    neg(&oplus(&neg(a)?, &neg(b)?)?)
}

/// a \/ b = (a (.) b*) (+) b; pointwise maximum.
pub fn join(a: &QVector, b: &QVector) -> Result<QVector> {
    oplus(&odot(a, &neg(b)?)?, b)
}

/// a /\ b = (a (+) b*) (.) b; pointwise minimum.
pub fn meet(a: &QVector, b: &QVector) -> Result<QVector> {
    odot(&oplus(a, &neg(b)?)?, b)
}

/// n-fold truncated sum na = (n-1)a (+) a.
pub fn nat_mul(n: u64, a: &QVector) -> Result<QVector> {
    check_unit_range(a)?;
    Ok(a.scale(&Rat::from_integer(n.into())).truncate())
}

/// Finite MV-subalgebra of the grid {0, 1/d, ..., 1}^m.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridAlgebra {
    points: PointSet,
    den: u64,
    generators: Vec<QVector>,
    elements: BTreeSet<QVector>,
}

fn on_grid(v: &QVector, den: u64) -> bool {
    let d = Rat::from_integer(den.into());
    v.iter().all(|q| {
        !q.is_negative() && *q <= Rat::one() && (q * &d).is_integer()
    })
}

impl GridAlgebra {
    /// Closes `gens` together with the constants 0 and 1 under (+) and ~.
    /// This is the generated MV-subalgebra: the remaining operations are
    /// derived from these two.
    pub fn generate(points: PointSet, den: u64, gens: Vec<QVector>) -> Result<Self> {
        if den == 0 {
            return Err(Error::Domain("denominator must be positive".into()));
        }
        let m = points.len();
        for g in &gens {
            g.check_len(m)?;
            if !on_grid(g, den) {
                return Err(Error::Domain(format!(
                    "generator {g} is not on the 1/{den} grid"
                )));
            }
        }
        let mut elements: BTreeSet<QVector> = BTreeSet::new();
        let mut frontier: Vec<QVector> = vec![QVector::zeros(m), QVector::ones(m)];
        frontier.extend(gens.iter().cloned());
        for v in &frontier {
            elements.insert(v.clone());
        }
        while let Some(v) = frontier.pop() {
            let mut next: Vec<QVector> = vec![neg(&v)?];
            for w in elements.iter() {
                next.push(oplus(&v, w)?);
            }
            for n in next {
                if elements.insert(n.clone()) {
                    frontier.push(n);
                }
            }
        }
        Ok(GridAlgebra {
            points,
            den,
            generators: gens,
            elements,
        })
    }

    /// Wraps an already-closed element set, verifying closure under (+) and ~.
    pub fn from_elements(
        points: PointSet,
        den: u64,
        generators: Vec<QVector>,
        elements: BTreeSet<QVector>,
    ) -> Result<Self> {
        let m = points.len();
        for v in &elements {
            v.check_len(m)?;
            if !on_grid(v, den) {
                return Err(Error::Domain(format!("element {v} off the 1/{den} grid")));
            }
        }
        if !elements.contains(&QVector::zeros(m)) || !elements.contains(&QVector::ones(m)) {
            return Err(Error::Domain("element set must contain 0 and 1".into()));
        }
        for v in &elements {
            if !elements.contains(&neg(v)?) {
                return Err(Error::Domain(format!("element set not closed under ~ at {v}")));
            }
            for w in &elements {
                if !elements.contains(&oplus(v, w)?) {
                    return Err(Error::Domain(format!(
                        "element set not closed under (+) at {v}, {w}"
                    )));
                }
            }
        }
        for g in &generators {
            if !elements.contains(g) {
                return Err(Error::Domain(format!("generator {g} not in element set")));
            }
        }
        Ok(GridAlgebra {
            points,
            den,
            generators,
            elements,
        })
    }

    pub fn points(&self) -> &PointSet {
        &self.points
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn generators(&self) -> &[QVector] {
        &self.generators
    }

    pub fn elements(&self) -> &BTreeSet<QVector> {
        &self.elements
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn dim(&self) -> usize {
        self.points.len()
    }

    pub fn contains(&self, v: &QVector) -> bool {
        self.elements.contains(v)
    }

    pub fn zero(&self) -> QVector {
        QVector::zeros(self.dim())
    }

    pub fn one(&self) -> QVector {
        QVector::ones(self.dim())
    }

    /// Partition of point indices into classes on which every element
    /// agrees. Classes are ordered by their smallest point index.
    pub fn point_classes(&self) -> Vec<Vec<usize>> {
        let m = self.dim();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for i in 0..m {
            match classes.iter_mut().find(|c| {
                let rep = c[0];
                self.elements.iter().all(|e| e[rep] == e[i])
            }) {
                Some(c) => c.push(i),
                None => classes.push(vec![i]),
            }
        }
        classes
    }

    /// Maximal ideals, one per point class, plus the class partition.
    /// Function algebras over deduplicated points are semisimple: the
    /// intersection of the returned ideals is {0}.
    pub fn max_spectrum(&self) -> (Vec<IdealDescriptor>, Vec<Vec<usize>>) {
        let classes = self.point_classes();
        let n = classes.len();
        let ideals = (0..n)
            .map(|k| IdealDescriptor {
                zero_classes: (0..n).filter(|&j| j != k).collect(),
            })
            .collect();
        (ideals, classes)
    }

    /// The radical: elements in every maximal ideal. Always {0} here.
    pub fn radical(&self) -> Vec<QVector> {
        self.elements
            .iter()
            .filter(|e| e.iter().all(|q| q.is_zero()))
            .cloned()
            .collect()
    }

    /// Per point class, the order n of the value chain {0, 1/n, ..., 1}.
    /// Asserts the product decomposition |A| = prod (n_i + 1).
    pub fn chain_decomposition(&self) -> Result<Vec<u64>> {
        let classes = self.point_classes();
        let mut orders = Vec::new();
        for c in &classes {
            let rep = c[0];
            let values: BTreeSet<Rat> = self.elements.iter().map(|e| e[rep].clone()).collect();
            let n = values.len() as u64 - 1;
            let chain: BTreeSet<Rat> = (0..=n)
                .map(|k| Rat::new(k.into(), n.max(1).into()))
                .collect();
            if n == 0 || values != chain {
                return Err(Error::Invariant(format!(
                    "class value set at point {rep} is not a full subchain"
                )));
            }
            orders.push(n);
        }
        let product: u128 = orders.iter().map(|&n| n as u128 + 1).product();
        if product != self.size() as u128 {
            return Err(Error::Invariant(format!(
                "|A| = {} but chain decomposition predicts {}",
                self.size(),
                product
            )));
        }
        Ok(orders)
    }

    /// Quotient by an ideal descriptor: restrict all elements to the point
    /// classes outside `zero_classes`.
    pub fn quotient(&self, ideal: &IdealDescriptor) -> Result<GridAlgebra> {
        let classes = self.point_classes();
        for &c in &ideal.zero_classes {
            if c >= classes.len() {
                return Err(Error::Domain(format!("no point class {c}")));
            }
        }
        let kept: Vec<usize> = (0..classes.len())
            .filter(|c| !ideal.zero_classes.contains(c))
            .collect();
        if kept.is_empty() {
            return Err(Error::Domain(
                "quotient by the whole algebra is disallowed (improper ideal)".into(),
            ));
        }
        let kept_points: Vec<usize> = kept.iter().flat_map(|&c| classes[c].clone()).collect();
        let mut kept_points = kept_points;
        kept_points.sort();
        let labels = kept_points
            .iter()
            .map(|&i| self.points.labels()[i].clone())
            .collect();
        let restrict = |v: &QVector| -> QVector {
            QVector::new(kept_points.iter().map(|&i| v[i].clone()).collect())
        };
        let elements: BTreeSet<QVector> = self.elements.iter().map(|e| restrict(e)).collect();
        let generators: Vec<QVector> = self.generators.iter().map(|g| restrict(g)).collect();
        GridAlgebra::from_elements(PointSet::new(labels)?, self.den, generators, elements)
    }

    /// The ideal induced by a descriptor: elements vanishing outside the
    /// descriptor's zero classes.
    pub fn ideal_elements(&self, ideal: &IdealDescriptor) -> Vec<QVector> {
        let classes = self.point_classes();
        let outside: Vec<usize> = (0..classes.len())
            .filter(|c| !ideal.zero_classes.contains(c))
            .flat_map(|c| classes[c].clone())
            .collect();
        self.elements
            .iter()
            .filter(|e| outside.iter().all(|&i| e[i].is_zero()))
            .cloned()
            .collect()
    }
}

impl fmt::Display for GridAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GridAlgebra(points={}, den={}, |A|={})",
            self.points.labels().join(","),
            self.den,
            self.size()
        )
    }
}

/// An ideal of a finite function algebra, described by the set of point
/// classes on which its elements may be nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealDescriptor {
    pub zero_classes: BTreeSet<usize>,
}

/// An MV-homomorphism between function algebras, represented by a map from
/// target points to source point classes (precomposition).
#[derive(Clone, Debug)]
pub struct PointMapHom {
    /// For each target point index, the index of a source point class.
    pub map: Vec<usize>,
}

/// Flags computed by `hom_check`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomFlags {
    pub is_embedding: bool,
    pub is_essential: bool,
}

impl PointMapHom {
    /// Precompose a source vector through the point map, producing a vector
    /// over the target's points. `classes` is the source class partition.
    pub fn apply(&self, classes: &[Vec<usize>], v: &QVector) -> QVector {
        QVector::new(
            self.map
                .iter()
                .map(|&c| v[classes[c][0]].clone())
                .collect(),
        )
    }
}

/// Validates a point map as a homomorphism from `source` to `target` and
/// decides the embedding and (exhaustively, targets being finite) the
/// essentiality flags.
pub fn hom_check(
    h: &PointMapHom,
    source: &GridAlgebra,
    target: &GridAlgebra,
) -> Result<HomFlags> {
    let classes = source.point_classes();
    if h.map.len() != target.dim() {
        return Err(Error::NotHom(format!(
            "point map has {} entries for a target with {} points",
            h.map.len(),
            target.dim()
        )));
    }
    for &c in &h.map {
        if c >= classes.len() {
            return Err(Error::NotHom(format!("no source point class {c}")));
        }
    }
    // Images of generators must land in the target; closure under the
    // operations then carries the whole image along.
    for g in source.generators() {
        let img = h.apply(&classes, g);
        if !target.contains(&img) {
            return Err(Error::NotHom(format!(
                "image {img} of generator {g} is not in the target algebra"
            )));
        }
    }
    // Injective iff the map reaches every source class: two elements with
    // equal images must already agree on every class.
    let mut reached: BTreeSet<usize> = h.map.iter().copied().collect();
    let is_embedding = reached.len() == classes.len();
    reached.clear();

    // Essential iff every nonzero b in the target dominates, after n-fold
    // sum, some nonzero image point: equivalently some nonzero image has
    // support inside supp(b).
    let images: Vec<QVector> = source
        .elements()
        .iter()
        .map(|a| h.apply(&classes, a))
        .collect();
    let mut is_essential = true;
    'outer: for b in target.elements() {
        if b.is_zero() {
            continue;
        }
        let bsupp: BTreeSet<usize> = b.support().into_iter().collect();
        for img in &images {
            if !img.is_zero() && img.support().iter().all(|i| bsupp.contains(i)) {
                continue 'outer;
            }
        }
        is_essential = false;
        break;
    }
    Ok(HomFlags {
        is_embedding,
        is_essential,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    pub(crate) fn pts(labels: &[&str]) -> PointSet {
        PointSet::new(labels.iter().map(|s| s.to_string()).collect()).unwrap()
    }

    pub(crate) fn qv(entries: &[(i64, i64)]) -> QVector {
        QVector::new(entries.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    pub(crate) fn diagonal() -> GridAlgebra {
        GridAlgebra::generate(pts(&["x1", "x2"]), 2, vec![qv(&[(1, 2), (1, 2)])]).unwrap()
    }

    pub(crate) fn six_element() -> GridAlgebra {
        GridAlgebra::generate(pts(&["x1", "x2"]), 2, vec![qv(&[(1, 2), (0, 1)])]).unwrap()
    }

    #[test]
    fn mv_ops_examples() {
        let a = qv(&[(1, 2)]);
        let b = qv(&[(3, 4)]);
        assert_eq!(oplus(&a, &b).unwrap(), qv(&[(1, 1)]));
        assert_eq!(neg(&qv(&[(1, 3)])).unwrap(), qv(&[(2, 3)]));
        assert_eq!(
            nat_mul(3, &qv(&[(1, 3), (0, 1)])).unwrap(),
            qv(&[(1, 1), (0, 1)])
        );
        assert!(oplus(&qv(&[(3, 2)]), &b).is_err());
    }

    #[test]
    fn generate_diagonal() {
        let a = diagonal();
        let want: Vec<QVector> = vec![
            qv(&[(0, 1), (0, 1)]),
            qv(&[(1, 2), (1, 2)]),
            qv(&[(1, 1), (1, 1)]),
        ];
        assert_eq!(a.elements().iter().cloned().collect::<Vec<_>>(), want);
    }

    #[test]
    fn generate_six_element() {
        let a = six_element();
        assert_eq!(a.size(), 6);
        assert!(a.contains(&qv(&[(1, 2), (1, 1)])));
        assert!(a.contains(&qv(&[(0, 1), (1, 1)])));
    }

    #[test]
    fn generate_constants_only() {
        let a = GridAlgebra::generate(pts(&["x"]), 3, vec![]).unwrap();
        assert_eq!(a.size(), 2);
    }

    #[test]
    fn generator_off_grid_rejected() {
        assert!(GridAlgebra::generate(pts(&["x"]), 2, vec![qv(&[(1, 3)])]).is_err());
    }

    #[test]
    fn spectrum_diagonal_one_class() {
        let a = diagonal();
        let (ideals, classes) = a.max_spectrum();
        assert_eq!(classes, vec![vec![0, 1]]);
        assert_eq!(ideals.len(), 1);
        assert_eq!(a.ideal_elements(&ideals[0]), vec![a.zero()]);
        assert_eq!(a.radical().len(), 1);
    }

    #[test]
    fn spectrum_six_element_two_classes() {
        let a = six_element();
        let (ideals, classes) = a.max_spectrum();
        assert_eq!(classes, vec![vec![0], vec![1]]);
        assert_eq!(ideals.len(), 2);
    }

    #[test]
    fn chain_decompositions() {
        assert_eq!(diagonal().chain_decomposition().unwrap(), vec![2]);
        assert_eq!(six_element().chain_decomposition().unwrap(), vec![2, 1]);
        let c = GridAlgebra::generate(pts(&["x"]), 4, vec![]).unwrap();
        assert_eq!(c.chain_decomposition().unwrap(), vec![1]);
    }

    #[test]
    fn quotient_examples() {
        let a = six_element();
        let ideal = IdealDescriptor {
            zero_classes: [1].into(),
        };
        let q = a.quotient(&ideal).unwrap();
        assert_eq!(q.dim(), 1);
        assert_eq!(q.size(), 3);

        let trivial = IdealDescriptor {
            zero_classes: BTreeSet::new(),
        };
        assert_eq!(a.quotient(&trivial).unwrap().size(), a.size());

        let improper = IdealDescriptor {
            zero_classes: [0, 1].into(),
        };
        assert!(a.quotient(&improper).is_err());
    }

    #[test]
    fn hom_constant_into_diagonal() {
        let chain = GridAlgebra::generate(pts(&["p"]), 2, vec![qv(&[(1, 2)])]).unwrap();
        let b = diagonal();
        let h = PointMapHom { map: vec![0, 0] };
        let flags = hom_check(&h, &chain, &b).unwrap();
        assert!(flags.is_embedding);
        assert!(flags.is_essential);
    }

    #[test]
    fn hom_projection_not_embedding() {
        let a = six_element();
        let ideal = IdealDescriptor {
            zero_classes: [1].into(),
        };
        let b = a.quotient(&ideal).unwrap();
        let h = PointMapHom { map: vec![0] };
        let flags = hom_check(&h, &a, &b).unwrap();
        assert!(!flags.is_embedding);
    }

    #[test]
    fn hom_identity() {
        let a = six_element();
        let h = PointMapHom { map: vec![0, 1] };
        let flags = hom_check(&h, &a, &a).unwrap();
        assert!(flags.is_embedding);
        assert!(flags.is_essential);
    }

    #[test]
    fn hom_invalid_rejected() {
        // Ł_3 chain does not embed into the den=2 diagonal algebra.
        let chain = GridAlgebra::generate(pts(&["p"]), 3, vec![qv(&[(1, 3)])]).unwrap();
        let b = diagonal();
        let h = PointMapHom { map: vec![0, 0] };
        assert!(matches!(hom_check(&h, &chain, &b), Err(Error::NotHom(_))));
    }

    #[test]
    fn order_characterization() {
        let a = six_element();
        for x in a.elements() {
            for y in a.elements() {
                let le = x.iter().zip(y.iter()).all(|(p, q)| p <= q);
                let odot_zero = odot(x, &neg(y).unwrap()).unwrap().is_zero();
                assert_eq!(le, odot_zero, "order characterization failed at {x}, {y}");
            }
        }
    }

    #[test]
    fn mv_axioms_on_elements() {
        let a = six_element();
        let els: Vec<_> = a.elements().iter().cloned().collect();
        for x in &els {
            assert_eq!(neg(&neg(x).unwrap()).unwrap(), *x);
            assert_eq!(oplus(&neg(&a.zero()).unwrap(), x).unwrap(), a.one());
            for y in &els {
                assert_eq!(oplus(x, y).unwrap(), oplus(y, x).unwrap());
                let l = oplus(&neg(&oplus(&neg(x).unwrap(), y).unwrap()).unwrap(), y).unwrap();
                let r = oplus(&neg(&oplus(&neg(y).unwrap(), x).unwrap()).unwrap(), x).unwrap();
                assert_eq!(l, r, "Chang axiom failed");
            }
        }
    }
}
