//! Python bindings: polynomials, germ signatures, the Thom polynomial database,
//! local and global invariants, and the restriction solver.

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use thomforge::algebra::{format_rational, parse_poly, parse_rational, GradedPoly, Rational, VarSpace};
use thomforge::chern::{infer_weights, parse_monomial_map, quotient_chern, supersymmetry_check, GermSignature};
use thomforge::database::{EntryKind, SingularityKey};
use thomforge::invariants::{self, IntersectionNumbers, InvariantResult};
use thomforge::restriction::{SolveOutcome, SolverJob};

create_exception!(thomforge_py, ThomforgeError, PyValueError);

fn err(e: thomforge::Error) -> PyErr {
    ThomforgeError::new_err(e.to_string())
}

fn fraction<'py>(py: Python<'py>, r: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((format_rational(r),))
}

fn to_rational(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    parse_rational(&obj.str()?.to_string()).map_err(err)
}

/// Graded polynomial in Chern, Landweber–Novikov or torus classes.
#[pyclass(name = "Poly", module = "thomforge_py", frozen)]
struct Poly(GradedPoly);

#[pymethods]
impl Poly {
    /// Parses `text` in the characteristic-class ring of relative dimension `kappa`.
    #[staticmethod]
    #[pyo3(signature = (text, kappa = 0))]
    fn parse(text: &str, kappa: u32) -> PyResult<Poly> {
        parse_poly(text, VarSpace::characteristic(kappa)).map(Poly).map_err(err)
    }

    fn truncate(&self, k: u32) -> Poly {
        Poly(self.0.clone().truncate(k))
    }

    fn component(&self, degree: u32) -> PyResult<Poly> {
        self.0.grade_component(degree).map(Poly).map_err(err)
    }

    #[getter]
    fn truncation(&self) -> Option<u32> {
        self.0.truncation()
    }

    #[getter]
    fn degree(&self) -> Option<u32> {
        self.0.max_degree()
    }

    fn is_supersymmetric(&self, m: u32, n: u32) -> PyResult<bool> {
        supersymmetry_check(&self.0, m, n).map_err(err)
    }

    fn __add__(&self, other: &Poly) -> PyResult<Poly> {
        self.0.add(&other.0).map(Poly).map_err(err)
    }

    fn __sub__(&self, other: &Poly) -> PyResult<Poly> {
        self.0.sub(&other.0).map(Poly).map_err(err)
    }

    fn __mul__(&self, other: &Poly) -> PyResult<Poly> {
        self.0.mul(&other.0).map(Poly).map_err(err)
    }

    fn __neg__(&self) -> Poly {
        Poly(self.0.neg())
    }

    fn __eq__(&self, other: &Poly) -> bool {
        self.0 == other.0
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Poly({:?})", self.0.to_string())
    }
}

/// Weights and degrees of a weighted-homogeneous germ.
#[pyclass(name = "Germ", module = "thomforge_py", frozen)]
struct Germ(GermSignature);

#[pymethods]
impl Germ {
    /// Accepts ints, `Fraction`s or strings such as `"3/2"`; rationals are rescaled to integers.
    #[new]
    fn new(weights: Vec<Bound<'_, PyAny>>, degrees: Vec<Bound<'_, PyAny>>) -> PyResult<Germ> {
        let w = weights.iter().map(to_rational).collect::<PyResult<Vec<_>>>()?;
        let d = degrees.iter().map(to_rational).collect::<PyResult<Vec<_>>>()?;
        GermSignature::from_rationals(&w, &d).map(Germ).map_err(err)
    }

    /// Infers weights and degrees from a quasi-homogeneous polynomial map such as `"x^2, y"`.
    #[staticmethod]
    fn from_map(text: &str) -> PyResult<Germ> {
        infer_weights(&parse_monomial_map(text).map_err(err)?).map(Germ).map_err(err)
    }

    #[getter]
    fn weights(&self) -> Vec<u64> {
        self.0.weights().to_vec()
    }

    #[getter]
    fn degrees(&self) -> Vec<u64> {
        self.0.degrees().to_vec()
    }

    #[getter]
    fn kappa(&self) -> u32 {
        self.0.kappa()
    }

    fn scaled(&self, factor: u64) -> Germ {
        Germ(self.0.scaled(factor))
    }

    /// Total quotient Chern class in the torus generator, through degree `k`.
    fn quotient_chern(&self, k: u32) -> Poly {
        Poly(quotient_chern(&self.0, k))
    }

    fn __eq__(&self, other: &Germ) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        format!("Germ({:?}, {:?})", self.0.weights(), self.0.degrees())
    }
}

/// The Thom polynomial database, bundled or loaded from a file.
#[pyclass(name = "Database", module = "thomforge_py", frozen)]
struct Database(thomforge::database::Database);

#[pymethods]
impl Database {
    #[new]
    #[pyo3(signature = (path = None))]
    fn new(path: Option<std::path::PathBuf>) -> PyResult<Database> {
        match path {
            Some(p) => thomforge::database::Database::from_path(&p).map(Database).map_err(err),
            None => Ok(Database(thomforge::database::Database::bundled())),
        }
    }

    #[getter]
    fn version(&self) -> String {
        self.0.version().to_string()
    }

    #[getter]
    fn content_hash(&self) -> String {
        self.0.content_hash().to_string()
    }

    /// Entry as a dict with `name`, `kappa`, `kind`, `codim`, `deg1`, `aut` and `polynomial`.
    #[pyo3(signature = (name, kappa, kind = "tp_source"))]
    fn lookup<'py>(&self, py: Python<'py>, name: &str, kappa: u32, kind: &str) -> PyResult<Bound<'py, PyDict>> {
        let kind: EntryKind = kind.parse().map_err(err)?;
        let e = self.0.lookup(name, kappa, kind).map_err(err)?;
        let d = PyDict::new(py);
        d.set_item("name", &e.key.name)?;
        d.set_item("kappa", e.key.kappa)?;
        d.set_item("kind", e.key.kind.as_str())?;
        d.set_item("codim", e.codim)?;
        d.set_item("deg1", e.deg1)?;
        d.set_item("aut", e.aut)?;
        d.set_item("polynomial", Poly(e.polynomial.clone()))?;
        Ok(d)
    }

    /// Descriptions of failed structural checks; empty when the database is consistent.
    fn validate(&self) -> Vec<String> {
        self.0
            .validate_all()
            .failures()
            .map(|f| format!("{} {}: {}", f.subject, f.check, f.detail))
            .collect()
    }
}

fn value<'py>(py: Python<'py>, r: PyResult<InvariantResult>) -> PyResult<Bound<'py, PyAny>> {
    fraction(py, &r?.value)
}

/// Number of points of a stable multi-singularity type in a generic perturbation.
#[pyfunction]
fn count<'py>(py: Python<'py>, db: &Database, germ: &Germ, singularity: &str) -> PyResult<Bound<'py, PyAny>> {
    let key = SingularityKey::new(singularity, germ.0.kappa(), EntryKind::TpSource);
    value(py, invariants::count_stable(&db.0, &germ.0, &key).map_err(err))
}

/// Counts of every stable type whose codimension equals the source dimension.
#[pyfunction]
fn count_all<'py>(py: Python<'py>, db: &Database, germ: &Germ) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    for (key, r) in invariants::count_all(&db.0, &germ.0).map_err(err)? {
        d.set_item(key.name, fraction(py, &r.value)?)?;
    }
    Ok(d)
}

#[pyfunction]
fn mu_image<'py>(py: Python<'py>, db: &Database, germ: &Germ) -> PyResult<Bound<'py, PyAny>> {
    value(py, invariants::mu_image(&db.0, &germ.0).map_err(err))
}

#[pyfunction]
fn mu_image2<'py>(py: Python<'py>, db: &Database, germ: &Germ) -> PyResult<Bound<'py, PyAny>> {
    value(py, invariants::mu_image2(&db.0, &germ.0).map_err(err))
}

#[pyfunction]
fn mu_discriminant<'py>(py: Python<'py>, db: &Database, germ: &Germ) -> PyResult<Bound<'py, PyAny>> {
    value(py, invariants::mu_discriminant(&db.0, &germ.0).map_err(err))
}

/// Runs a restriction-method job given as JSON text.
#[pyfunction]
fn solve<'py>(py: Python<'py>, job: &str) -> PyResult<Bound<'py, PyDict>> {
    let outcome = SolverJob::from_json(job).and_then(|j| j.solve()).map_err(err)?;
    let d = PyDict::new(py);
    match outcome {
        SolveOutcome::Unique { values, polynomial } => {
            d.set_item("status", "unique")?;
            let v = PyDict::new(py);
            for (name, x) in &values {
                v.set_item(name, fraction(py, x)?)?;
            }
            d.set_item("values", v)?;
            d.set_item("polynomial", Poly(polynomial))?;
        }
        SolveOutcome::Underdetermined { rank, free, particular, directions } => {
            d.set_item("status", "underdetermined")?;
            d.set_item("rank", rank)?;
            d.set_item("free", free)?;
            d.set_item("particular", Poly(particular))?;
            d.set_item("directions", directions.into_iter().map(Poly).collect::<Vec<_>>())?;
        }
        SolveOutcome::Inconsistent { rank, equations } => {
            d.set_item("status", "inconsistent")?;
            d.set_item("rank", rank)?;
            d.set_item("equations", equations)?;
        }
    }
    Ok(d)
}

/// `c1^2`, `c2` and `χ` of the normalization of a generic projected surface.
#[pyfunction]
fn enriques<'py>(py: Python<'py>, d: i64, delta: i64, cusps: i64, triple_points: i64) -> PyResult<Bound<'py, PyDict>> {
    let q = invariants::enriques_invariants(d, delta, cusps, triple_points).map_err(err)?;
    let out = PyDict::new(py);
    out.set_item("c1_sq", fraction(py, &q.c1_sq)?)?;
    out.set_item("c2", fraction(py, &q.c2)?)?;
    out.set_item("chi", fraction(py, &q.chi)?)?;
    Ok(out)
}

#[pyfunction]
fn izumiya_marar(chi: i64, crosscaps: i64, triple_points: i64) -> PyResult<i64> {
    invariants::izumiya_marar_real(chi, crosscaps, triple_points).map_err(err)
}

/// Euler characteristic of the image from the eight intersection numbers, passed by field name.
#[pyfunction]
fn chi_image_global<'py>(py: Python<'py>, numbers: &Bound<'py, PyDict>) -> PyResult<Bound<'py, PyAny>> {
    let mut values = Vec::with_capacity(8);
    for field in IntersectionNumbers::FIELDS {
        let x = numbers
            .get_item(field)?
            .ok_or_else(|| ThomforgeError::new_err(format!("missing field {field:?}")))?;
        values.push(to_rational(&x)?);
    }
    let values: [Rational; 8] = values.try_into().expect("eight fields");
    fraction(py, &invariants::chi_image_global(&IntersectionNumbers::from_values(values)))
}

#[pymodule]
fn thomforge_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("ThomforgeError", m.py().get_type::<ThomforgeError>())?;
    m.add_class::<Poly>()?;
    m.add_class::<Germ>()?;
    m.add_class::<Database>()?;
    m.add_function(wrap_pyfunction!(count, m)?)?;
    m.add_function(wrap_pyfunction!(count_all, m)?)?;
    m.add_function(wrap_pyfunction!(mu_image, m)?)?;
    m.add_function(wrap_pyfunction!(mu_image2, m)?)?;
    m.add_function(wrap_pyfunction!(mu_discriminant, m)?)?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(enriques, m)?)?;
    m.add_function(wrap_pyfunction!(izumiya_marar, m)?)?;
    m.add_function(wrap_pyfunction!(chi_image_global, m)?)?;
    Ok(())
}
