//! Python bindings: thin wrappers over the core library working with plain
//! lists and tuples (weights as fundamental coordinates, loop weights as
//! `[(node, exponent)]` pairs, graded data as `(weight, grade, value)` rows).

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use demazure::affine;
use demazure::cartan::{self, RankContext, Weight};
use demazure::characters;
use demazure::engine;
use demazure::loopweights::{self, HeightFunction, LoopWeight};

fn err(e: demazure::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn ctx_for(coords: &[i64]) -> PyResult<RankContext> {
    RankContext::new(coords.len()).map_err(err)
}

#[pyfunction]
fn cartan_matrix(n: usize) -> PyResult<Vec<Vec<i64>>> {
    let ctx = RankContext::new(n).map_err(err)?;
    Ok((1..=n).map(|i| (1..=n).map(|j| ctx.cartan(i, j)).collect()).collect())
}

#[pyfunction]
fn is_dominant(coords: Vec<i64>) -> bool {
    Weight::new(coords).is_dominant()
}

#[pyfunction]
fn pair_coroot(coords: Vec<i64>, i: usize, j: usize) -> PyResult<i64> {
    let ctx = ctx_for(&coords)?;
    let r = cartan::RootRange::new(&ctx, i, j).map_err(err)?;
    cartan::pair_coroot(&ctx, &Weight::new(coords), r).map_err(err)
}

/// mu = 2 nu + lambda with lambda multiplicity-free; returns (nu, lambda).
#[pyfunction]
fn parity_decompose(coords: Vec<i64>) -> PyResult<(Vec<i64>, Vec<i64>)> {
    let (nu, lam) = cartan::parity_decompose(&Weight::new(coords)).map_err(err)?;
    Ok((nu.coords().to_vec(), lam.coords().to_vec()))
}

#[pyfunction]
fn odd_even_split(coords: Vec<i64>) -> PyResult<(Vec<i64>, Vec<i64>)> {
    let (o, e) = cartan::odd_even_split(&Weight::new(coords)).map_err(err)?;
    Ok((o.coords().to_vec(), e.coords().to_vec()))
}

#[pyfunction]
fn weyl_dimension(coords: Vec<i64>) -> PyResult<i64> {
    let ctx = ctx_for(&coords)?;
    characters::weyl_dimension(&ctx, &Weight::new(coords)).map_err(err)
}

#[pyfunction]
fn weyl_character(coords: Vec<i64>) -> PyResult<Vec<(Vec<i64>, i64)>> {
    let ctx = ctx_for(&coords)?;
    let ch = characters::weyl_character(&ctx, &Weight::new(coords)).map_err(err)?;
    Ok(ch.terms().iter().map(|(w, &m)| (w.coords().to_vec(), m)).collect())
}

#[pyfunction]
fn demazure_character(level: i64, coords: Vec<i64>) -> PyResult<Vec<(Vec<i64>, i64, i64)>> {
    let ctx = ctx_for(&coords)?;
    let ch = characters::demazure_character(&ctx, level, &Weight::new(coords)).map_err(err)?;
    Ok(ch.terms().iter().map(|((w, g), &m)| (w.coords().to_vec(), *g, m)).collect())
}

/// Split the level-two datum; returns the two affine-dominant level-one
/// images as (classical coords, level, degree-as-string).
#[pyfunction]
fn split_dominant(
    nu: Vec<i64>,
    lam: Vec<i64>,
) -> PyResult<((Vec<i64>, i64, String), (Vec<i64>, i64, String))> {
    let ctx = ctx_for(&nu)?;
    let (_, lo, le) =
        affine::split_dominant(&ctx, &Weight::new(nu), &Weight::new(lam)).map_err(err)?;
    let pack = |w: &affine::AffineWeight| {
        (w.classical.coords().to_vec(), w.level, w.degree.to_string())
    };
    Ok((pack(&lo), pack(&le)))
}

#[pyfunction]
fn enumerate_p1(n: usize) -> Vec<Vec<(usize, i64)>> {
    loopweights::enumerate_p1(n).into_iter().map(|pi| pi.factors().to_vec()).collect()
}

#[pyfunction]
fn in_p1(factors: Vec<(usize, i64)>) -> bool {
    loopweights::in_p1(&LoopWeight::new(factors))
}

#[pyfunction]
fn oe_split(factors: Vec<(usize, i64)>) -> PyResult<(Vec<(usize, i64)>, Vec<(usize, i64)>)> {
    let (o, e) = loopweights::oe_split(&LoopWeight::new(factors)).map_err(err)?;
    Ok((o.factors().to_vec(), e.factors().to_vec()))
}

#[pyfunction]
fn tensor_irreducible(n: usize, factors: Vec<(usize, i64)>) -> PyResult<bool> {
    let ctx = RankContext::new(n).map_err(err)?;
    Ok(loopweights::tensor_irreducible(&ctx, &factors))
}

#[pyfunction]
fn has_simple_socle(n: usize, factors: Vec<(usize, i64)>) -> PyResult<bool> {
    let ctx = RankContext::new(n).map_err(err)?;
    Ok(loopweights::has_simple_socle(&ctx, &factors))
}

#[pyfunction]
fn prime_of_subset(kappa: Vec<i64>, a: usize, b: usize) -> PyResult<Vec<(usize, i64)>> {
    let kappa = HeightFunction::new(kappa).map_err(err)?;
    Ok(loopweights::prime_of_subset(&kappa, a, b).map_err(err)?.factors().to_vec())
}

#[pyfunction]
fn height_of_prime(n: usize, factors: Vec<(usize, i64)>) -> PyResult<Vec<i64>> {
    let kappa = loopweights::height_of_prime(n, &LoopWeight::new(factors)).map_err(err)?;
    Ok(kappa.values().to_vec())
}

fn dims_out(m: engine::GradedModule) -> Vec<(Vec<i64>, i64, i64)> {
    m.dims.iter().map(|((w, g), &d)| (w.coords().to_vec(), *g, d)).collect()
}

/// Graded dimensions of M(nu, lambda).
#[pyfunction]
#[pyo3(signature = (nu, lam, trunc=None))]
fn construct_m(
    nu: Vec<i64>,
    lam: Vec<i64>,
    trunc: Option<usize>,
) -> PyResult<Vec<(Vec<i64>, i64, i64)>> {
    let ctx = ctx_for(&nu)?;
    let p = engine::present_m(&ctx, &Weight::new(nu), &Weight::new(lam)).map_err(err)?;
    let opts = engine::ConstructOpts { trunc, ..Default::default() };
    Ok(dims_out(engine::construct(&p, opts).map_err(err)?))
}

/// Graded dimensions of D(level, mu).
#[pyfunction]
#[pyo3(signature = (level, mu, refined=false, trunc=None))]
fn construct_d(
    level: i64,
    mu: Vec<i64>,
    refined: bool,
    trunc: Option<usize>,
) -> PyResult<Vec<(Vec<i64>, i64, i64)>> {
    let ctx = ctx_for(&mu)?;
    let p = engine::present_d(&ctx, level, &Weight::new(mu), refined).map_err(err)?;
    let opts = engine::ConstructOpts { trunc, ..Default::default() };
    Ok(dims_out(engine::construct(&p, opts).map_err(err)?))
}

/// Graded dimensions of the rank-one module V(2^a 1^b).
#[pyfunction]
fn construct_v_xi(a: i64, b: i64) -> PyResult<Vec<(Vec<i64>, i64, i64)>> {
    let ctx = RankContext::new(1).map_err(err)?;
    let p = engine::present_v_xi(&ctx, a, b).map_err(err)?;
    Ok(dims_out(engine::construct(&p, engine::ConstructOpts::default()).map_err(err)?))
}

#[pyfunction]
fn verify_level_two_identity(nu: Vec<i64>, lam: Vec<i64>) -> PyResult<bool> {
    let ctx = ctx_for(&nu)?;
    engine::verify_level_two_identity(&ctx, &Weight::new(nu), &Weight::new(lam)).map_err(err)
}

#[pymodule]
fn demazure_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(cartan_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(is_dominant, m)?)?;
    m.add_function(wrap_pyfunction!(pair_coroot, m)?)?;
    m.add_function(wrap_pyfunction!(parity_decompose, m)?)?;
    m.add_function(wrap_pyfunction!(odd_even_split, m)?)?;
    m.add_function(wrap_pyfunction!(weyl_dimension, m)?)?;
    m.add_function(wrap_pyfunction!(weyl_character, m)?)?;
    m.add_function(wrap_pyfunction!(demazure_character, m)?)?;
    m.add_function(wrap_pyfunction!(split_dominant, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_p1, m)?)?;
    m.add_function(wrap_pyfunction!(in_p1, m)?)?;
    m.add_function(wrap_pyfunction!(oe_split, m)?)?;
    m.add_function(wrap_pyfunction!(tensor_irreducible, m)?)?;
    m.add_function(wrap_pyfunction!(has_simple_socle, m)?)?;
    m.add_function(wrap_pyfunction!(prime_of_subset, m)?)?;
    m.add_function(wrap_pyfunction!(height_of_prime, m)?)?;
    m.add_function(wrap_pyfunction!(construct_m, m)?)?;
    m.add_function(wrap_pyfunction!(construct_d, m)?)?;
    m.add_function(wrap_pyfunction!(construct_v_xi, m)?)?;
    m.add_function(wrap_pyfunction!(verify_level_two_identity, m)?)?;
    Ok(())
}
