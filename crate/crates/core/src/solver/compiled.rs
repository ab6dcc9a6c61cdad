//! Flattened polynomial systems with fused evaluation of values, Jacobian
//! and absolute-value scales.

use num_complex::Complex64;

use crate::poly::PolynomialSystem;

#[derive(Clone, Debug)]
pub(crate) struct Compiled {
    pub nvars: usize,
    pub neqs: usize,
    coeffs: Vec<Vec<Complex64>>,
    exps: Vec<Vec<u32>>,
    maxdeg: usize,
    pub degrees: Vec<u32>,
    /// Largest coefficient modulus per equation, a floor for residual scales.
    pub coeff_norms: Vec<f64>,
}

impl Compiled {
    /// The system as written.
    pub fn affine(sys: &PolynomialSystem) -> Compiled {
        Self::build(sys, false)
    }

    /// The homogenized system in `(z_0, z_1, …, z_n)`, each equation of its
    /// own total degree.
    pub fn homogenized(sys: &PolynomialSystem) -> Compiled {
        Self::build(sys, true)
    }

    fn build(sys: &PolynomialSystem, homogenize: bool) -> Compiled {
        let nv = sys.num_vars + usize::from(homogenize);
        let mut coeffs = Vec::new();
        let mut exps = Vec::new();
        let mut degrees = Vec::new();
        let mut maxdeg = 0;
        for p in &sys.equations {
            let deg = p.degree();
            degrees.push(deg);
            let mut c = Vec::with_capacity(p.terms.len());
            let mut e = Vec::with_capacity(p.terms.len() * nv);
            for t in &p.terms {
                c.push(t.coeff);
                if homogenize {
                    e.push(deg - t.exponents.iter().sum::<u32>());
                }
                e.extend_from_slice(&t.exponents);
            }
            maxdeg = maxdeg.max(e.iter().copied().max().unwrap_or(0) as usize);
            coeffs.push(c);
            exps.push(e);
        }
        assert!(nv < 32, "too many variables");
        let coeff_norms =
            coeffs.iter().map(|c: &Vec<Complex64>| c.iter().map(|x| x.norm()).fold(0.0, f64::max)).collect();
        Compiled { nvars: nv, neqs: sys.equations.len(), coeffs, exps, maxdeg, degrees, coeff_norms }
    }

    /// Divides each equation by its largest coefficient modulus.
    pub fn normalize(&mut self) {
        for c in self.coeffs.iter_mut() {
            let m = c.iter().map(|x| x.norm()).fold(0.0, f64::max);
            if m > 0.0 {
                for x in c.iter_mut() {
                    *x /= m;
                }
            }
        }
        self.coeff_norms.iter_mut().for_each(|n| *n = if *n > 0.0 { 1.0 } else { 0.0 });
    }

    /// Fills `vals` (length `neqs`), `jac` (row-major `neqs × nvars`) and,
    /// when given, `scale` with `max(Σ |c| |z^a|, max |c|)` per equation.
    pub fn eval(
        &self,
        z: &[Complex64],
        vals: &mut [Complex64],
        jac: &mut [Complex64],
        mut scale: Option<&mut [f64]>,
        pw: &mut Vec<Complex64>,
    ) {
        let nv = self.nvars;
        let stride = self.maxdeg + 1;
        pw.clear();
        pw.resize(nv * stride, Complex64::new(1.0, 0.0));
        for j in 0..nv {
            for e in 1..stride {
                pw[j * stride + e] = pw[j * stride + e - 1] * z[j];
            }
        }
        let mut prefix = [Complex64::new(0.0, 0.0); 32];
        jac.iter_mut().for_each(|x| *x = Complex64::new(0.0, 0.0));
        for k in 0..self.neqs {
            let mut v = Complex64::new(0.0, 0.0);
            let mut s = 0.0;
            let row = &mut jac[k * nv..(k + 1) * nv];
            for (t, c) in self.coeffs[k].iter().enumerate() {
                let e = &self.exps[k][t * nv..(t + 1) * nv];
                prefix[0] = Complex64::new(1.0, 0.0);
                for j in 0..nv {
                    prefix[j + 1] = prefix[j] * pw[j * stride + e[j] as usize];
                }
                let mono = prefix[nv];
                v += c * mono;
                s += c.norm() * mono.norm();
                let mut suffix = *c;
                for j in (0..nv).rev() {
                    let ej = e[j] as usize;
                    if ej > 0 {
                        row[j] += suffix * prefix[j] * pw[j * stride + ej - 1] * ej as f64;
                        suffix *= pw[j * stride + ej];
                    }
                }
            }
            vals[k] = v;
            if let Some(sc) = scale.as_deref_mut() {
                sc[k] = s.max(self.coeff_norms[k]);
            }
        }
    }
}
