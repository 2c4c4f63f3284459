//! One-variable piecewise-linear calculus: exact truncated operations,
//! the integer-coefficient (McNaughton) membership test, unimodular
//! (Farey) refinement by Stern-Brocot descent, and Schauder-hat
//! decompositions with exact reconstruction.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rat::{in_unit_interval, parse_rat, Rat};

/// Continuous piecewise-linear function on [0,1] with rational breakpoints,
/// stored canonically: nodes strictly increase from 0 to 1 and no interior
/// node is collinear with its neighbours.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pwl {
    nodes: Vec<Rat>,
    values: Vec<Rat>,
}

impl Pwl {
    /// Builds from node/value pairs and canonicalizes. Nodes must strictly
    /// increase and start at 0, end at 1.
    pub fn new(nodes: Vec<Rat>, values: Vec<Rat>) -> Result<Pwl> {
        if nodes.len() != values.len() || nodes.len() < 2 {
            return Err(Error::Domain("need matching node/value lists, length >= 2".into()));
        }
        if !nodes[0].is_zero() || !nodes[nodes.len() - 1].is_one() {
            return Err(Error::Domain("nodes must run from 0 to 1".into()));
        }
        for w in nodes.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::Domain("nodes must strictly increase".into()));
            }
        }
        Ok(Pwl { nodes, values }.canonicalize())
    }

    pub fn constant(v: Rat) -> Pwl {
        Pwl {
            nodes: vec![Rat::zero(), Rat::one()],
            values: vec![v.clone(), v],
        }
    }

    pub fn identity() -> Pwl {
        Pwl {
            nodes: vec![Rat::zero(), Rat::one()],
            values: vec![Rat::zero(), Rat::one()],
        }
    }

    pub fn nodes(&self) -> &[Rat] {
        &self.nodes
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    fn canonicalize(mut self) -> Pwl {
        // Drop interior nodes collinear with both neighbours.
        let mut i = 1;
        while i + 1 < self.nodes.len() {
            let (x0, x1, x2) = (&self.nodes[i - 1], &self.nodes[i], &self.nodes[i + 1]);
            let (y0, y1, y2) = (&self.values[i - 1], &self.values[i], &self.values[i + 1]);
            let lhs = (y1 - y0) * (x2 - x1);
            let rhs = (y2 - y1) * (x1 - x0);
            if lhs == rhs {
                self.nodes.remove(i);
                self.values.remove(i);
            } else {
                i += 1;
            }
        }
        self
    }

    /// Exact evaluation at a rational point of [0,1].
    pub fn eval(&self, x: &Rat) -> Result<Rat> {
        if !in_unit_interval(x) {
            return Err(Error::Domain(format!("{x} outside [0,1]")));
        }
        let i = match self.nodes.iter().position(|n| n >= x) {
            Some(0) => return Ok(self.values[0].clone()),
            Some(i) => i,
            None => unreachable!("nodes end at 1"),
        };
        if &self.nodes[i] == x {
            return Ok(self.values[i].clone());
        }
        let (x0, x1) = (&self.nodes[i - 1], &self.nodes[i]);
        let (y0, y1) = (&self.values[i - 1], &self.values[i]);
        Ok(y0 + (y1 - y0) * (x - x0) / (x1 - x0))
    }

    /// Pointwise combination of two functions on the merged node set, with
    /// crossing nodes of f-g inserted so the result is linear between nodes.
    fn combine(&self, other: &Pwl, op: impl Fn(&Rat, &Rat) -> Rat) -> Result<Pwl> {
        let mut nodes: Vec<Rat> = self.nodes.clone();
        for n in &other.nodes {
            if !nodes.contains(n) {
                nodes.push(n.clone());
            }
        }
        // Crossings of f and g within each merged interval.
        nodes.sort();
        let mut crossings = Vec::new();
        for w in nodes.windows(2) {
            let (x0, x1) = (&w[0], &w[1]);
            let f0 = self.eval(x0)?;
            let f1 = self.eval(x1)?;
            let g0 = other.eval(x0)?;
            let g1 = other.eval(x1)?;
            let d0 = &f0 - &g0;
            let d1 = &f1 - &g1;
            if d0.is_positive() != d1.is_positive() && !d0.is_zero() && !d1.is_zero() {
                let t = &d0 / (&d0 - &d1);
                crossings.push(x0 + (x1 - x0) * t);
            }
        }
        nodes.extend(crossings);
        nodes.sort();
        nodes.dedup();
        let values = nodes
            .iter()
            .map(|x| Ok(op(&self.eval(x)?, &other.eval(x)?)))
            .collect::<Result<Vec<_>>>()?;
        Pwl::new(nodes, values)
    }

    /// Re-sample on a node set including the crossings with the constant
    /// levels 0 and 1, then clamp. Makes truncation exact.
    fn truncate_levels(&self) -> Result<Pwl> {
        let mut nodes = self.nodes.clone();
        for w in self.nodes.windows(2) {
            let (x0, x1) = (&w[0], &w[1]);
            let y0 = self.eval(x0)?;
            let y1 = self.eval(x1)?;
            for level in [Rat::zero(), Rat::one()] {
                let d0 = &y0 - &level;
                let d1 = &y1 - &level;
                if d0.is_positive() != d1.is_positive() && !d0.is_zero() && !d1.is_zero() {
                    let t = &d0 / (&d0 - &d1);
                    nodes.push(x0 + (x1 - x0) * t);
                }
            }
        }
        nodes.sort();
        nodes.dedup();
        let zero = Rat::zero();
        let one = Rat::one();
        let values = nodes
            .iter()
            .map(|x| Ok(self.eval(x)?.max(zero.clone()).min(one.clone())))
            .collect::<Result<Vec<_>>>()?;
        Pwl::new(nodes, values)
    }

    pub fn oplus(&self, other: &Pwl) -> Result<Pwl> {
        self.combine(other, |a, b| a + b)?.truncate_levels()
    }

    pub fn neg(&self) -> Result<Pwl> {
        let values = self.values.iter().map(|v| Rat::one() - v).collect();
        Pwl::new(self.nodes.clone(), values)
    }

    pub fn odot(&self, other: &Pwl) -> Result<Pwl> {
        self.neg()?.oplus(&other.neg()?)?.neg()
    }

    pub fn join(&self, other: &Pwl) -> Result<Pwl> {
        self.combine(other, |a, b| a.max(b).clone())
    }

    pub fn meet(&self, other: &Pwl) -> Result<Pwl> {
        self.combine(other, |a, b| a.min(b).clone())
    }

    pub fn scalar(&self, q: &Rat) -> Result<Pwl> {
        if !in_unit_interval(q) {
            return Err(Error::Domain(format!("scalar {q} outside [0,1]")));
        }
        let values = self.values.iter().map(|v| v * q).collect();
        Pwl::new(self.nodes.clone(), values)
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    /// True iff every linear piece has integer slope and integer intercept,
    /// i.e. the function lies in the one-variable free MV-algebra.
    pub fn is_mcnaughton(&self) -> bool {
        self.nodes.windows(2).zip(self.values.windows(2)).all(|(x, y)| {
            let slope = (&y[1] - &y[0]) / (&x[1] - &x[0]);
            let intercept = &y[0] - &slope * &x[0];
            slope.is_integer() && intercept.is_integer()
        })
    }

    /// Serialization: ordered "p/q:r/s" node:value pairs.
    pub fn parse(s: &str) -> Result<Pwl> {
        let mut nodes = Vec::new();
        let mut values = Vec::new();
        for pair in s.split_whitespace() {
            let (n, v) = pair
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("expected node:value, got {pair:?}")))?;
            nodes.push(parse_rat(n)?);
            values.push(parse_rat(v)?);
        }
        Pwl::new(nodes, values)
    }
}

impl fmt::Display for Pwl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .nodes
            .iter()
            .zip(&self.values)
            .map(|(n, v)| format!("{n}:{v}"))
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Strictly increasing rationals from 0 to 1 with every consecutive pair
/// unimodular: |p_i q_{i+1} - p_{i+1} q_i| = 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FareySubdivision {
    nodes: Vec<Rat>,
}

impl FareySubdivision {
    pub fn nodes(&self) -> &[Rat] {
        &self.nodes
    }

    pub fn is_unimodular(&self) -> bool {
        self.nodes.windows(2).all(|w| unimodular(&w[0], &w[1]))
    }
}

fn unimodular(a: &Rat, b: &Rat) -> bool {
    (a.numer() * b.denom() - b.numer() * a.denom()).abs() == BigInt::one()
}

/// A unimodular subdivision containing all the given breakpoints, obtained
/// by repeated mediant insertion (Stern-Brocot descent to each target).
pub fn regular_refine(breakpoints: &[Rat]) -> Result<FareySubdivision> {
    for b in breakpoints {
        if !in_unit_interval(b) {
            return Err(Error::Domain(format!("breakpoint {b} outside [0,1]")));
        }
    }
    let mut nodes: Vec<Rat> = vec![Rat::zero(), Rat::one()];
    for target in breakpoints {
        while !nodes.contains(target) {
            let i = nodes.iter().position(|n| n > target).expect("1 bounds above");
            let (l, r) = (&nodes[i - 1], &nodes[i]);
            let mediant = Rat::new(l.numer() + r.numer(), l.denom() + r.denom());
            nodes.insert(i, mediant);
        }
    }
    let sub = FareySubdivision { nodes };
    if !sub.is_unimodular() {
        return Err(Error::Invariant("mediant insertion broke unimodularity".into()));
    }
    Ok(sub)
}

/// A rational-coefficient combination of full-height Schauder hats over a
/// unimodular subdivision, reconstructing the decomposed function exactly.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub subdivision: FareySubdivision,
    pub coefficients: Vec<Rat>,
}

/// Full-height hat at node `i` of the subdivision: peak 1 at the node,
/// 0 at its neighbours, linear between, 0 elsewhere.
pub fn hat(subdivision: &FareySubdivision, i: usize) -> Result<Pwl> {
    let nodes = subdivision.nodes();
    let values = (0..nodes.len())
        .map(|j| if i == j { Rat::one() } else { Rat::zero() })
        .collect();
    Pwl::new(nodes.to_vec(), values)
}

/// Decomposes a unit-range function over the refinement of its own nodes;
/// the coefficients are just the nodal values, and over a unimodular
/// subdivision every hat is McNaughton.
pub fn schauder_decompose(f: &Pwl) -> Result<Decomposition> {
    for v in f.values() {
        if !in_unit_interval(v) {
            return Err(Error::Domain(format!("value {v} outside [0,1]")));
        }
    }
    let interior: Vec<Rat> = f.nodes().to_vec();
    let subdivision = regular_refine(&interior)?;
    let coefficients = subdivision
        .nodes()
        .iter()
        .map(|x| f.eval(x))
        .collect::<Result<Vec<_>>>()?;
    // Exact reconstruction: the nodal interpolant over a refinement of f's
    // nodes is f itself.
    let rebuilt = reconstruct(&Decomposition {
        subdivision: subdivision.clone(),
        coefficients: coefficients.clone(),
    })?;
    if rebuilt != *f {
        return Err(Error::Invariant("hat decomposition does not reconstruct".into()));
    }
    Ok(Decomposition {
        subdivision,
        coefficients,
    })
}

/// Sum of coefficient-scaled hats, as a canonical function.
pub fn reconstruct(d: &Decomposition) -> Result<Pwl> {
    Pwl::new(d.subdivision.nodes().to_vec(), d.coefficients.clone())
}
