use pyo3::prelude::*;

#[pymodule]
fn ssli_lab(_m: &Bound<'_, PyModule>) -> PyResult<()> {
    Ok(())
}
