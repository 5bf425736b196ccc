//! Torsion part with respect to `Gen T`.

use super::hom::hom_space;
use super::{Module, ModuleError, Quotient, Submodule};

/// The sequence `0 -> tX -> X -> fX -> 0` with `tX` the trace of `T` in `X`.
#[derive(Clone, Debug)]
pub struct TorsionParts {
    pub torsion: Submodule,
    pub free: Quotient,
}

pub fn trace_torsion(t: &Module, x: &Module) -> Result<TorsionParts, ModuleError> {
    let maps = hom_space(t, x)?;
    let images: Vec<_> = maps.iter().flat_map(|f| f.matrix.columns()).collect();
    Ok(TorsionParts {
        torsion: x.submodule(&images),
        free: x.quotient(&images),
    })
}
