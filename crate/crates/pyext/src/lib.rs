use pyo3::prelude::*;
#[pymodule]
fn horocycle_py(_m: &Bound<pyo3::types::PyModule>) -> PyResult<()> { Ok(()) }
