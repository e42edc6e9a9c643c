use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::series_eval::is_integer;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// The complex Γ function (Lanczos approximation with reflection).
pub fn gamma(z: Complex64) -> Result<Complex64> {
    if is_integer(z) && z.re < 0.5 {
        return Err(Error::GammaPole(z));
    }
    Ok(gamma_unchecked(z))
}

fn gamma_unchecked(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        let s = (z * PI).sin();
        return PI / (s * gamma_unchecked(1.0 - z));
    }
    let z = z - 1.0;
    let mut x = Complex64::new(LANCZOS[0], 0.0);
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        x += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    (2.0 * PI).sqrt() * t.powc(z + 0.5) * (-t).exp() * x
}

/// `1/Γ(z)`, which is zero at the poles of Γ.
pub fn rgamma(z: Complex64) -> Complex64 {
    if is_integer(z) && z.re < 0.5 {
        return Complex64::new(0.0, 0.0);
    }
    1.0 / gamma_unchecked(z)
}
