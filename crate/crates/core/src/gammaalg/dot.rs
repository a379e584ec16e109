use std::fmt::Write;

use super::BasedAlgebra;

/// Arrows of the Gabriel quiver. A radical generator labeled `X → Y` on the
/// Λ side is an arrow `Y → X`, since the algebra is an opposite endomorphism ring.
pub fn gabriel_quiver(alg: &BasedAlgebra) -> Vec<(usize, usize, usize)> {
    alg.gabriel_arrows().into_iter().map(|(s, t, k)| (t, s, k)).collect()
}

pub fn gabriel_dot(alg: &BasedAlgebra, name: &str) -> String {
    let mut out = String::new();
    writeln!(out, "digraph \"{name}\" {{").unwrap();
    for v in alg.vertices() {
        writeln!(out, "  \"{v}\";").unwrap();
    }
    for (s, t, k) in gabriel_quiver(alg) {
        for _ in 0..k {
            writeln!(out, "  \"{}\" -> \"{}\";", alg.vertices()[s], alg.vertices()[t]).unwrap();
        }
    }
    out.push_str("}\n");
    out
}
