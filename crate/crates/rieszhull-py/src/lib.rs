//! Python bindings. Rationals cross the boundary as "p/q" strings so no
//! exactness is lost; vectors are lists of such strings.

use std::collections::BTreeMap;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use rieszhull::freepwl;
use rieszhull::hull::{adjunction_check, riesz_hull, RieszHull};
use rieszhull::mvcore::{GridAlgebra, PointSet};
use rieszhull::rat::{parse_rat, QVector};
use rieszhull::term::{eval_term, parse_term, term_to_pwl};
use rieszhull::Error;

fn pyerr(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_vector(entries: Vec<String>) -> PyResult<QVector> {
    let v = entries
        .iter()
        .map(|s| parse_rat(s))
        .collect::<Result<Vec<_>, _>>()
        .map_err(pyerr)?;
    Ok(QVector::new(v))
}

fn vector_out(v: &QVector) -> Vec<String> {
    v.entries().iter().map(|x| x.to_string()).collect()
}

/// A finite MV-algebra of rational-valued functions on a point set,
/// generated from a 1/den grid.
#[pyclass]
struct Algebra {
    inner: GridAlgebra,
}

#[pymethods]
impl Algebra {
    #[new]
    fn new(points: Vec<String>, den: u64, generators: Vec<Vec<String>>) -> PyResult<Self> {
        let points = PointSet::new(points).map_err(pyerr)?;
        let gens = generators
            .into_iter()
            .map(parse_vector)
            .collect::<PyResult<Vec<_>>>()?;
        let inner = GridAlgebra::generate(points, den, gens).map_err(pyerr)?;
        Ok(Algebra { inner })
    }

    fn size(&self) -> usize {
        self.inner.size()
    }

    fn elements(&self) -> Vec<Vec<String>> {
        self.inner.elements().iter().map(vector_out).collect()
    }

    fn contains(&self, v: Vec<String>) -> PyResult<bool> {
        Ok(self.inner.contains(&parse_vector(v)?))
    }

    /// Chain lengths of the product decomposition; sizes are length+1.
    fn chains(&self) -> PyResult<Vec<u64>> {
        self.inner.chain_decomposition().map_err(pyerr)
    }

    /// Point classes (points identified by every element), as labels.
    fn classes(&self) -> Vec<Vec<String>> {
        let labels = self.inner.points().labels();
        self.inner
            .point_classes()
            .iter()
            .map(|c| c.iter().map(|&i| labels[i].clone()).collect())
            .collect()
    }

    fn semisimple(&self) -> bool {
        self.inner.radical().len() == 1
    }

    fn hull(&self) -> PyResult<Hull> {
        let inner = riesz_hull(&self.inner).map_err(pyerr)?;
        Ok(Hull { inner })
    }
}

/// The Riesz hull of an algebra: the rational skeleton of the smallest
/// Riesz MV-algebra into which the algebra embeds essentially.
#[pyclass]
struct Hull {
    inner: RieszHull,
}

#[pymethods]
impl Hull {
    fn span_dim(&self) -> usize {
        self.inner.span_dim()
    }

    fn span_basis(&self) -> Vec<Vec<String>> {
        self.inner.span_basis().iter().map(vector_out).collect()
    }

    /// Span coordinates of a skeleton member, or None.
    fn member(&self, v: Vec<String>) -> PyResult<Option<Vec<String>>> {
        let v = parse_vector(v)?;
        let coords = self.inner.member(&v).map_err(pyerr)?;
        Ok(coords.map(|c| c.iter().map(|x| x.to_string()).collect()))
    }

    /// Essentiality witness (a, n) with 0 < a <= n*b for nonzero b.
    fn essential_witness(&self, b: Vec<String>) -> PyResult<(Vec<String>, u64)> {
        let b = parse_vector(b)?;
        let (a, n) = self.inner.essential_witness(&b).map_err(pyerr)?;
        Ok((vector_out(&a), n))
    }

    /// Least n with v an n-fold average of base elements, plus the parts.
    fn decompose_average(&self, v: Vec<String>) -> PyResult<(u64, Vec<Vec<String>>)> {
        let v = parse_vector(v)?;
        let cert = self.inner.divisible_hull().decompose_average(&v).map_err(pyerr)?;
        Ok((cert.n, cert.parts.iter().map(vector_out).collect()))
    }

    /// Triangle identities and span idempotence, with seeded samples.
    fn adjunction_ok(&self, seed: u64) -> PyResult<bool> {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let rep = adjunction_check(self.inner.base_algebra(), &self.inner, 20, &mut rng)
            .map_err(pyerr)?;
        Ok(rep.all_pass())
    }
}

/// Exact evaluation of a term over an environment of vectors.
#[pyfunction]
#[pyo3(signature = (term, env, riesz = false))]
fn eval(term: &str, env: BTreeMap<String, Vec<String>>, riesz: bool) -> PyResult<Vec<String>> {
    let t = parse_term(term).map_err(pyerr)?;
    let mut bound = BTreeMap::new();
    let mut dim = 1;
    for (k, v) in env {
        let v = parse_vector(v)?;
        dim = v.len();
        bound.insert(k, v);
    }
    let out = eval_term(&t, &bound, dim, riesz).map_err(pyerr)?;
    Ok(vector_out(&out))
}

/// Compiles a one-variable term to its exact piecewise-linear form, as
/// (node, value) string pairs.
#[pyfunction]
fn pwl_compile(term: &str) -> PyResult<Vec<(String, String)>> {
    let f = term_to_pwl(&parse_term(term).map_err(pyerr)?).map_err(pyerr)?;
    Ok(f.nodes()
        .iter()
        .zip(f.values())
        .map(|(n, v)| (n.to_string(), v.to_string()))
        .collect())
}

/// Whether a one-variable term denotes a McNaughton function.
#[pyfunction]
fn pwl_mcnaughton(term: &str) -> PyResult<bool> {
    let f = term_to_pwl(&parse_term(term).map_err(pyerr)?).map_err(pyerr)?;
    Ok(f.is_mcnaughton())
}

/// Schauder decomposition over a regular subdivision: (nodes, coefficients).
#[pyfunction]
fn pwl_decompose(term: &str) -> PyResult<(Vec<String>, Vec<String>)> {
    let f = term_to_pwl(&parse_term(term).map_err(pyerr)?).map_err(pyerr)?;
    let d = freepwl::schauder_decompose(&f).map_err(pyerr)?;
    Ok((
        d.subdivision.nodes().iter().map(|x| x.to_string()).collect(),
        d.coefficients.iter().map(|x| x.to_string()).collect(),
    ))
}

#[pymodule]
fn rieszhull_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Algebra>()?;
    m.add_class::<Hull>()?;
    m.add_function(wrap_pyfunction!(eval, m)?)?;
    m.add_function(wrap_pyfunction!(pwl_compile, m)?)?;
    m.add_function(wrap_pyfunction!(pwl_mcnaughton, m)?)?;
    m.add_function(wrap_pyfunction!(pwl_decompose, m)?)?;
    Ok(())
}
