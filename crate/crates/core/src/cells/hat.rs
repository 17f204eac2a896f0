//! `Â = A × A_0` with `A_0 = kQ_0`, and the group action extended to it.

use crate::algebra::{build_algebra, Algebra, AlgebraAction, AlgebraPresentation, GroupData, Quiver};
use crate::error::{Error, Result};

/// `Â` with the `A_0` vertices `ē_g` appended after those of `A`; `h` sends
/// `ē_g` to `ē_{g'}` whenever it sends `e_g` to `e_{g'}`.
pub fn hat_algebra(alg: &Algebra, act: &AlgebraAction, grp: &GroupData) -> Result<(Algebra, AlgebraAction)> {
    let f = alg.field();
    let n = alg.num_vertices();
    let names: Vec<String> = alg.quiver().vertices().iter().map(|v| format!("{v}'")).collect();
    let zero = Quiver::new(names, Vec::new())?;
    let quiver = alg.quiver().disjoint_union(&zero)?;
    let longest = (0..alg.dim()).map(|i| alg.path_length(i)).max().unwrap_or(0);
    let hat = build_algebra(&AlgebraPresentation {
        field: f,
        quiver,
        relations: alg.relations().to_vec(),
        nilpotency_bound: (longest + 1).max(2),
    })?;
    if hat.dim() != alg.dim() + n {
        return Err(Error::DimensionMismatch(format!("Â has dimension {} instead of {}", hat.dim(), alg.dim() + n)));
    }
    // Basis element of A ↦ basis element of Â carrying the same path.
    let embed: Vec<usize> = alg
        .basis()
        .iter()
        .map(|p| hat.basis().iter().position(|q| q == p).expect("paths of A survive in Â"))
        .collect();
    let lift = |x: &[u64]| -> Vec<u64> {
        let mut out = vec![0; hat.dim()];
        for (i, &c) in x.iter().enumerate() {
            out[embed[i]] = c;
        }
        out
    };
    let mut images = Vec::with_capacity(grp.order());
    for h in grp.elements() {
        let m = act.matrix(h);
        let mut gens = Vec::with_capacity(hat.num_generators());
        for v in 0..n {
            gens.push(lift(&m.column(alg.vertex_element(v))));
        }
        for v in 0..n {
            let w = act
                .vertex_image(alg, h, v)
                .ok_or_else(|| Error::InvalidGroup("the action does not permute vertices".into()))?;
            gens.push(hat.unit_vector(hat.vertex_element(n + w)));
        }
        for a in 0..alg.num_arrows() {
            gens.push(lift(&m.column(alg.arrow_element(a))));
        }
        images.push(gens);
    }
    Ok((hat.clone(), AlgebraAction::from_generator_images(&hat, &images)))
}
