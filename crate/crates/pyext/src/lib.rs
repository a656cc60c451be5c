//! Python bindings. Scalar and list-shaped results convert to native
//! Python values; structured verification reports are returned as JSON
//! text with exactly the same schema the command-line tool prints under
//! `--json` (parse with `json.loads`). All arithmetic is exact; failures
//! of a precondition raise `ValueError`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use springerkit::flags as fl;
use springerkit::g2;
use springerkit::linalg::Rationals;
use springerkit::models as md;
use springerkit::partitions::parse_partition;
use springerkit::tableaux as tb;
use springerkit::{FormKind, Partition};

fn err(e: springerkit::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn shape_of(parts: Vec<u32>) -> PyResult<Partition> {
    Partition::new(parts).map_err(err)
}

fn kind_of(form: &str) -> PyResult<FormKind> {
    form.parse::<FormKind>().map_err(err)
}

fn json_of<T: serde::Serialize>(value: &T) -> PyResult<String> {
    serde_json::to_string_pretty(value)
        .map_err(|e| PyValueError::new_err(format!("serialization failed: {e}")))
}

// -- partitions -------------------------------------------------------------

/// Transpose of the Young diagram.
#[pyfunction]
fn dual(parts: Vec<u32>) -> PyResult<Vec<u32>> {
    Ok(shape_of(parts)?.dual().parts().to_vec())
}

/// Does the partition satisfy the parity condition for `form`
/// ("orthogonal" or "symplectic")?
#[pyfunction]
fn is_admissible(parts: Vec<u32>, form: &str) -> PyResult<bool> {
    Ok(shape_of(parts)?.is_admissible(kind_of(form)?))
}

/// Column concatenation of two partitions (left columns must dominate).
#[pyfunction]
fn juxtapose(left: Vec<u32>, right: Vec<u32>) -> PyResult<Vec<u32>> {
    let l = shape_of(left)?;
    let r = shape_of(right)?;
    Ok(l.juxtapose(&r).map_err(err)?.parts().to_vec())
}

/// Sum of binom(c, 2) over the transposed parts: the common dimension of
/// the fiber's irreducible components.
#[pyfunction]
fn springer_fiber_dimension(parts: Vec<u32>) -> PyResult<u64> {
    Ok(shape_of(parts)?.springer_fiber_dimension())
}

// -- tableaux ---------------------------------------------------------------

/// All standard Young tableaux of the shape, as "row;row" strings.
#[pyfunction]
fn enumerate_standard(parts: Vec<u32>) -> PyResult<Vec<String>> {
    let shape = shape_of(parts)?;
    Ok(tb::enumerate_standard(&shape)
        .iter()
        .map(|t| t.to_string())
        .collect())
}

/// Number of standard Young tableaux (hook length formula), as a decimal
/// string since it grows fast.
#[pyfunction]
fn standard_count(parts: Vec<u32>) -> PyResult<String> {
    Ok(tb::standard_count(&shape_of(parts)?).to_string())
}

/// All domino tableaux of the shape; pass a form kind to keep only the
/// admissible ones, or None for all.
#[pyfunction]
#[pyo3(signature = (parts, form=None))]
fn enumerate_domino(parts: Vec<u32>, form: Option<&str>) -> PyResult<Vec<String>> {
    let shape = shape_of(parts)?;
    let kind = form.map(kind_of).transpose()?;
    Ok(tb::enumerate_domino(&shape, kind)
        .iter()
        .map(|t| t.to_string())
        .collect())
}

/// Is every prefix shape of the domino tableau admissible for `form`?
#[pyfunction]
fn domino_admissible(rows: &str, form: &str) -> PyResult<bool> {
    Ok(tb::parse_domino(rows).map_err(err)?.is_admissible(kind_of(form)?))
}

/// Column-wise concatenation of two domino tableaux ("row;row" strings).
#[pyfunction]
fn concat_domino(left: &str, right: &str) -> PyResult<String> {
    let l = tb::parse_domino(left).map_err(err)?;
    let r = tb::parse_domino(right).map_err(err)?;
    Ok(l.concat(&r).map_err(err)?.to_string())
}

/// The canonical admissible domino tableau of an admissible shape.
#[pyfunction]
fn construct_admissible(parts: Vec<u32>, form: &str) -> PyResult<String> {
    let shape = shape_of(parts)?;
    Ok(tb::canonical_admissible(&shape, kind_of(form)?)
        .map_err(err)?
        .to_string())
}

/// The elementary two-column (or one-column) block tableau d(n, k).
#[pyfunction]
fn elementary_block(n: u32, k: u32) -> PyResult<String> {
    Ok(tb::elementary_block(n, k).map_err(err)?.to_string())
}

/// Refine a domino tableau to a standard one (domino k -> 2k-1, 2k).
#[pyfunction]
fn refine_to_standard(rows: &str) -> PyResult<String> {
    Ok(tb::parse_domino(rows).map_err(err)?.refine_to_standard().to_string())
}

/// (count, reason): predicted number of components of the attached
/// orbital variety.
#[pyfunction]
fn predicted_component_count(parts: Vec<u32>, form: &str) -> PyResult<(u8, String)> {
    let shape = shape_of(parts)?;
    let p = tb::predicted_component_count(&shape, kind_of(form)?).map_err(err)?;
    Ok((p.count, p.reason))
}

// -- models -----------------------------------------------------------------

/// General-linear orbit dimension of a Jordan type.
#[pyfunction]
fn gl_orbit_dim(parts: Vec<u32>) -> PyResult<u64> {
    Ok(md::gl_orbit_dim_formula(&shape_of(parts)?))
}

/// Orbit dimension in the isometry algebra of an admissible Jordan type.
#[pyfunction]
fn form_orbit_dim(parts: Vec<u32>, form: &str) -> PyResult<u64> {
    md::form_orbit_dim_formula(&shape_of(parts)?, kind_of(form)?).map_err(err)
}

/// Skew-adjoint model over the rationals: (x_rows, gram_rows) with each
/// matrix given as lists of entry strings.
#[pyfunction]
fn skew_model(parts: Vec<u32>, form: &str) -> PyResult<(Vec<Vec<String>>, Vec<Vec<String>>)> {
    let shape = shape_of(parts)?;
    let model = md::skew_adjoint_model(Rationals, &shape, kind_of(form)?).map_err(err)?;
    let strings = |m: &springerkit::linalg::Matrix<Rationals>| {
        (0..m.nrows())
            .map(|i| (0..m.ncols()).map(|j| m.get(i, j).to_string()).collect())
            .collect()
    };
    let gram = model.gram.as_ref().expect("skew model carries a form");
    Ok((strings(&model.x), strings(gram)))
}

/// Randomized induced-orbit sampling for diagonal blocks with trivial
/// orbits: JSON report (jordan, expected_dim, observed_dim, dim_matches).
#[pyfunction]
#[pyo3(signature = (blocks, trials=32, seed=2026))]
fn induced_orbit_sample(blocks: Vec<u32>, trials: u32, seed: u64) -> PyResult<String> {
    let levi = md::LeviData::new(
        blocks
            .into_iter()
            .map(|size| {
                Ok(md::LeviBlock {
                    size,
                    orbit: Partition::new(vec![1; size as usize]).map_err(err)?,
                })
            })
            .collect::<PyResult<_>>()?,
    )
    .map_err(err)?;
    json_of(&md::induced_orbit_sample(&levi, trials, seed))
}

// -- flags ------------------------------------------------------------------

/// Number of x-stable complete flags over F_q, as a decimal string.
#[pyfunction]
fn count_xstable_flags(parts: Vec<u32>, q: u64) -> PyResult<String> {
    Ok(fl::count_xstable_flags(&shape_of(parts)?, q)
        .map_err(err)?
        .to_string())
}

/// One-box label census of all x-stable flags over F_q: JSON report
/// (total, fibers, unlabeled).
#[pyfunction]
fn syt_census(parts: Vec<u32>, q: u64) -> PyResult<String> {
    json_of(&fl::syt_fiber_census(&shape_of(parts)?, q).map_err(err)?)
}

/// Domino label census of the isotropic x-stable flags over F_q.
#[pyfunction]
fn domino_census(parts: Vec<u32>, form: &str, q: u64) -> PyResult<String> {
    json_of(&fl::domino_fiber_census(&shape_of(parts)?, kind_of(form)?, q).map_err(err)?)
}

/// The six-dimensional symplectic verification suite over F_q: JSON
/// report with per-assertion outcomes.
#[pyfunction]
#[pyo3(signature = (q=3))]
fn sp6_suite(q: u64) -> PyResult<String> {
    json_of(&fl::sp6_suite(q).map_err(err)?)
}

/// Split-containment checks for a column split of a Jordan type: JSON
/// report; `counterexample` is null when everything holds.
#[pyfunction]
#[pyo3(signature = (parts, l1, q=3))]
fn split_containment(parts: Vec<u32>, l1: usize, q: u64) -> PyResult<String> {
    json_of(&fl::split_containment_suite(&shape_of(parts)?, l1, q).map_err(err)?)
}

// -- g2 ---------------------------------------------------------------------

/// Rank of the adjoint matrix at a point given as six comma-separated
/// rationals; always one of 0, 6, 8, 10, 12.
#[pyfunction]
fn g2_rank(x: &str) -> PyResult<usize> {
    Ok(g2::orbit_rank(&g2::G2Nilpotent::parse(x).map_err(err)?))
}

/// Sweep the integer grid {-radius..radius}^6: JSON classification report.
#[pyfunction]
fn g2_classify_grid(radius: i64) -> PyResult<String> {
    json_of(&g2::classify_grid(radius).map_err(err)?)
}

/// Classify random rational points: JSON classification report.
#[pyfunction]
#[pyo3(signature = (points, seed=2026))]
fn g2_classify_random(points: u64, seed: u64) -> PyResult<String> {
    json_of(&g2::classify_random(points, seed).map_err(err)?)
}

/// Jacobian rank at a point of one of the two studied subvarieties:
/// "min" (four equations) or "tilde" (two equations).
#[pyfunction]
fn g2_jacobian_rank(x: &str, variety: &str) -> PyResult<usize> {
    let p = g2::G2Nilpotent::parse(x).map_err(err)?;
    let polys = match variety {
        "min" => g2::minimal_orbit_polys(),
        "tilde" => g2::smooth_component_polys(),
        other => {
            return Err(PyValueError::new_err(format!(
                "variety must be 'min' or 'tilde', got '{other}'"
            )))
        }
    };
    g2::jacobian_rank(polys, &p).map_err(err)
}

// -- exceptional verdicts ----------------------------------------------------

/// (verdict, canonical_label, source): is a smooth orbital variety
/// guaranteed for this orbit of the exceptional group?
#[pyfunction]
fn orbit_verdict(group: &str, label: &str) -> PyResult<(String, String, String)> {
    let g: springerkit::exceptional::ExcType = group.parse().map_err(err)?;
    let r = springerkit::exceptional::smooth_ov_verdict(g, label).map_err(err)?;
    let verdict = serde_json::to_value(r.verdict)
        .expect("plain enum")
        .as_str()
        .expect("string enum")
        .to_string();
    Ok((verdict, r.label, r.source))
}

/// All orbit labels of the group, in table order.
#[pyfunction]
fn orbit_labels(group: &str) -> PyResult<Vec<String>> {
    let g: springerkit::exceptional::ExcType = group.parse().map_err(err)?;
    Ok(springerkit::exceptional::orbit_labels(g)
        .iter()
        .map(|s| s.to_string())
        .collect())
}

/// Labels whose verdict is "unknown" for the group.
#[pyfunction]
fn unresolved_labels(group: &str) -> PyResult<Vec<String>> {
    let g: springerkit::exceptional::ExcType = group.parse().map_err(err)?;
    Ok(springerkit::exceptional::unresolved_labels(g)
        .iter()
        .map(|s| s.to_string())
        .collect())
}

/// Parse-and-normalize helper exposed for round-trip tests.
#[pyfunction]
fn parse_parts(text: &str) -> PyResult<Vec<u32>> {
    Ok(parse_partition(text).map_err(err)?.parts().to_vec())
}

#[pymodule]
fn springerkit_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(dual, m)?)?;
    m.add_function(wrap_pyfunction!(is_admissible, m)?)?;
    m.add_function(wrap_pyfunction!(juxtapose, m)?)?;
    m.add_function(wrap_pyfunction!(springer_fiber_dimension, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_standard, m)?)?;
    m.add_function(wrap_pyfunction!(standard_count, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_domino, m)?)?;
    m.add_function(wrap_pyfunction!(domino_admissible, m)?)?;
    m.add_function(wrap_pyfunction!(concat_domino, m)?)?;
    m.add_function(wrap_pyfunction!(construct_admissible, m)?)?;
    m.add_function(wrap_pyfunction!(elementary_block, m)?)?;
    m.add_function(wrap_pyfunction!(refine_to_standard, m)?)?;
    m.add_function(wrap_pyfunction!(predicted_component_count, m)?)?;
    m.add_function(wrap_pyfunction!(gl_orbit_dim, m)?)?;
    m.add_function(wrap_pyfunction!(form_orbit_dim, m)?)?;
    m.add_function(wrap_pyfunction!(skew_model, m)?)?;
    m.add_function(wrap_pyfunction!(induced_orbit_sample, m)?)?;
    m.add_function(wrap_pyfunction!(count_xstable_flags, m)?)?;
    m.add_function(wrap_pyfunction!(syt_census, m)?)?;
    m.add_function(wrap_pyfunction!(domino_census, m)?)?;
    m.add_function(wrap_pyfunction!(sp6_suite, m)?)?;
    m.add_function(wrap_pyfunction!(split_containment, m)?)?;
    m.add_function(wrap_pyfunction!(g2_rank, m)?)?;
    m.add_function(wrap_pyfunction!(g2_classify_grid, m)?)?;
    m.add_function(wrap_pyfunction!(g2_classify_random, m)?)?;
    m.add_function(wrap_pyfunction!(g2_jacobian_rank, m)?)?;
    m.add_function(wrap_pyfunction!(orbit_verdict, m)?)?;
    m.add_function(wrap_pyfunction!(orbit_labels, m)?)?;
    m.add_function(wrap_pyfunction!(unresolved_labels, m)?)?;
    m.add_function(wrap_pyfunction!(parse_parts, m)?)?;
    Ok(())
}
