//! Products of GHZ blocks and their quantum Fisher information.
//!
//! [`qfi_analytic`] uses additivity over blocks. [`qfi_statevector`] builds
//! the dense `2^N` amplitude vector and evaluates `4 Var(J_n)` directly, with
//! no block structure, so the two paths can be compared.

use num_complex::Complex64;
use serde::Serialize;

use crate::bounds::WhDecomposition;
use crate::error::{Error, Result};
use crate::partitions::YoungDiagram;

/// Default qubit cap for dense state vectors.
pub const DEFAULT_QUBIT_CAP: u32 = 16;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GhzProduct {
    blocks: YoungDiagram,
    phases: Vec<f64>,
}

impl GhzProduct {
    pub fn new(blocks: YoungDiagram, phases: Vec<f64>) -> Result<Self> {
        if phases.len() != blocks.height() as usize {
            return Err(Error::InvalidDiagram(format!(
                "{} phases for {} blocks",
                phases.len(),
                blocks.height()
            )));
        }
        Ok(Self { blocks, phases })
    }

    /// All phases zero.
    pub fn real(blocks: YoungDiagram) -> Self {
        let phases = vec![0.0; blocks.height() as usize];
        Self { blocks, phases }
    }

    pub fn blocks(&self) -> &YoungDiagram {
        &self.blocks
    }

    pub fn phases(&self) -> &[f64] {
        &self.phases
    }
}

/// A unit vector for the collective spin direction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpinAxis([f64; 3]);

impl SpinAxis {
    pub const X: SpinAxis = SpinAxis([1.0, 0.0, 0.0]);
    pub const Y: SpinAxis = SpinAxis([0.0, 1.0, 0.0]);
    pub const Z: SpinAxis = SpinAxis([0.0, 0.0, 1.0]);

    /// Accepts vectors whose norm is within 1e-12 of one.
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        let norm = (x * x + y * y + z * z).sqrt();
        if (norm - 1.0).abs() > 1e-12 {
            return Err(Error::Domain {
                what: "axis norm (x1e12)",
                value: (norm * 1e12) as i64,
                n: 0,
            });
        }
        Ok(Self([x, y, z]))
    }

    pub fn normalized(x: f64, y: f64, z: f64) -> Result<Self> {
        let norm = (x * x + y * y + z * z).sqrt();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::Domain {
                what: "axis norm",
                value: 0,
                n: 0,
            });
        }
        Ok(Self([x / norm, y / norm, z / norm]))
    }

    pub fn components(&self) -> [f64; 3] {
        self.0
    }
}

/// `sum N_l^2`, the QFI of a GHZ product along z.
pub fn qfi_analytic(state: &GhzProduct) -> u64 {
    state.blocks.sum_of_squares()
}

/// Dense amplitudes of the product state; qubit `q` is bit `q` of the index
/// and blocks occupy consecutive qubits.
fn amplitudes(state: &GhzProduct) -> Vec<Complex64> {
    let n = state.blocks.n() as usize;
    let mut psi = vec![Complex64::new(0.0, 0.0); 1 << n];
    let height = state.blocks.height() as usize;
    let amp = (0.5f64).powf(height as f64 / 2.0);
    // each block contributes |0...0> or e^{i phi}|1...1>
    for choice in 0u64..(1u64 << height) {
        let mut index = 0usize;
        let mut value = Complex64::new(amp, 0.0);
        let mut offset = 0usize;
        for (l, (&size, &phi)) in state.blocks.rows().iter().zip(&state.phases).enumerate() {
            let size = size as usize;
            if choice >> l & 1 == 1 {
                index |= ((1usize << size) - 1) << offset;
                value *= Complex64::from_polar(1.0, phi);
            }
            offset += size;
        }
        psi[index] = value;
    }
    psi
}

/// `J_n |psi>` with `J_n = sum_i n . sigma^(i) / 2`.
fn apply_collective_spin(psi: &[Complex64], n: usize, axis: SpinAxis) -> Vec<Complex64> {
    let [ax, ay, az] = axis.components();
    let i = Complex64::new(0.0, 1.0);
    let mut out = vec![Complex64::new(0.0, 0.0); psi.len()];
    for (idx, &a) in psi.iter().enumerate() {
        if a == Complex64::new(0.0, 0.0) {
            continue;
        }
        for q in 0..n {
            let up = idx >> q & 1 == 1;
            let flipped = idx ^ (1 << q);
            // bit 1 = spin up: sigma_z = +1, sigma_y |0> = i|1>, sigma_y |1> = -i|0>
            let z = if up { 1.0 } else { -1.0 };
            out[idx] += a * (0.5 * az * z);
            out[flipped] += a * 0.5 * ax;
            let y = if up { -i } else { i };
            out[flipped] += a * y * (0.5 * ay);
        }
    }
    out
}

/// `4 (<J_n^2> - <J_n>^2)` on the dense state vector.
pub fn qfi_statevector(state: &GhzProduct, axis: SpinAxis) -> Result<f64> {
    qfi_statevector_capped(state, axis, DEFAULT_QUBIT_CAP)
}

pub fn qfi_statevector_capped(state: &GhzProduct, axis: SpinAxis, cap: u32) -> Result<f64> {
    let n = state.blocks.n();
    if n > cap || n >= usize::BITS {
        return Err(Error::TooLarge { n, cap });
    }
    let psi = amplitudes(state);
    let j_psi = apply_collective_spin(&psi, n as usize, axis);
    let mean: Complex64 = psi.iter().zip(&j_psi).map(|(a, b)| a.conj() * b).sum();
    let second: f64 = j_psi.iter().map(|b| b.norm_sqr()).sum();
    Ok(4.0 * (second - mean.re * mean.re))
}

/// GHZ product on the Lemma-1 maximizer for `(w,h)`: `k` rows of `w`, one row
/// of `u`, then `v` singletons.
pub fn optimal_diagram(n: u32, w: u32, h: u32) -> Result<YoungDiagram> {
    let WhDecomposition { k, u, v } = WhDecomposition::new(n, w, h)?;
    let mut rows = vec![w; k as usize];
    rows.push(u);
    rows.extend(std::iter::repeat_n(1, v as usize));
    YoungDiagram::new(rows)
}

pub fn optimal_state(n: u32, w: u32, h: u32) -> Result<GhzProduct> {
    Ok(GhzProduct::real(optimal_diagram(n, w, h)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::f_wh;

    fn ghz(rows: &[u32]) -> GhzProduct {
        GhzProduct::real(YoungDiagram::new(rows.to_vec()).unwrap())
    }

    #[test]
    fn analytic_examples() {
        assert_eq!(qfi_analytic(&ghz(&[9])), 81);
        assert_eq!(qfi_analytic(&ghz(&[1; 9])), 9);
        assert_eq!(qfi_analytic(&ghz(&[4, 2, 1])), 21);
        assert_eq!(qfi_analytic(&ghz(&[4, 2, 1])), f_wh(7, 4, 3).unwrap());
    }

    #[test]
    fn dense_examples() {
        let f = qfi_statevector(&ghz(&[4, 2, 1]), SpinAxis::Z).unwrap();
        assert!((f - 21.0).abs() < 1e-9);
        let f = qfi_statevector(&ghz(&[1]), SpinAxis::Z).unwrap();
        assert!((f - 1.0).abs() < 1e-12);
        // the Bell pair is an eigenstate of sigma_x sigma_x, so <J_x^2> = 1
        let f = qfi_statevector(&ghz(&[2]), SpinAxis::X).unwrap();
        assert!((f - 4.0).abs() < 1e-12);
        // transverse pair terms vanish for blocks of three or more
        let f = qfi_statevector(&ghz(&[3]), SpinAxis::Y).unwrap();
        assert!((f - 3.0).abs() < 1e-12);
    }

    #[test]
    fn dense_cap() {
        let big = ghz(&[17]);
        assert_eq!(
            qfi_statevector(&big, SpinAxis::Z),
            Err(Error::TooLarge { n: 17, cap: 16 })
        );
        assert!(qfi_statevector_capped(&ghz(&[3, 1]), SpinAxis::Z, 3).is_err());
    }

    #[test]
    fn phase_count_must_match() {
        let d = YoungDiagram::new(vec![2, 1]).unwrap();
        assert!(GhzProduct::new(d.clone(), vec![0.1]).is_err());
        assert!(GhzProduct::new(d, vec![0.1, 0.2]).is_ok());
    }

    #[test]
    fn axis_validation() {
        assert!(SpinAxis::new(1.0, 1.0, 0.0).is_err());
        let a = SpinAxis::normalized(1.0, 1.0, 0.0).unwrap();
        assert!(SpinAxis::new(a.0[0], a.0[1], a.0[2]).is_ok());
        assert!(SpinAxis::normalized(0.0, 0.0, 0.0).is_err());
    }

    #[test]
    fn optimal_examples() {
        assert_eq!(optimal_diagram(7, 4, 3).unwrap().rows(), &[4, 2, 1]);
        assert_eq!(optimal_diagram(5, 5, 1).unwrap().rows(), &[5]);
        let d = optimal_diagram(14, 4, 9).unwrap();
        assert_eq!(d.rows(), &[4, 3, 1, 1, 1, 1, 1, 1, 1]);
        assert_eq!(qfi_analytic(&GhzProduct::real(d)), 32);
        assert_eq!(optimal_diagram(6, 1, 6).unwrap().rows(), &[1; 6]);
        assert!(optimal_state(7, 4, 5).is_err());
    }
}
