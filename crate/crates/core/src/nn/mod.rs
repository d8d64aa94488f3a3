//! Minimal differentiable-layer engine: forward/backward for every layer the
//! detector needs, softmax cross-entropy, Adam, gradient checking, and a
//! text weights format.
//!
//! This is not a general autodiff graph. A [`Network`] is a fixed layer
//! sequence; each layer caches what its own backward pass needs during
//! forward, and `backward` walks the sequence in reverse, producing parameter
//! gradients and the gradient with respect to the network input (needed by
//! activation maximization).

mod adam;
mod gradcheck;
mod io;
mod layers;
mod loss;
mod network;
mod tensor;

pub use adam::AdamState;
pub use gradcheck::{grad_check, numeric_loss_grad, GradCheckConfig, GradCheckReport};
pub use io::{read_weights_file, write_weights_file, WeightsFile};
pub use layers::{BatchNorm, ConvTime, Dense, Dropout, Flatten, Layer, MaxPoolTime, Mode, Relu};
pub use loss::softmax_ce;
pub use network::Network;
pub use tensor::Tensor;

pub(crate) mod simd {
    /// y += a * x, elementwise. Vectorizes cleanly (no reassociation needed).
    #[inline]
    pub fn axpy(y: &mut [f64], a: f64, x: &[f64]) {
        let n = y.len().min(x.len());
        for (yi, xi) in y[..n].iter_mut().zip(&x[..n]) {
            *yi += a * xi;
        }
    }

    /// Dot product with eight independent accumulators. The fixed summation
    /// order keeps results bit-stable while letting the backend vectorize.
    #[inline]
    pub fn dot(a: &[f64], b: &[f64]) -> f64 {
        let n = a.len().min(b.len());
        let (a, b) = (&a[..n], &b[..n]);
        let mut acc = [0.0f64; 8];
        let chunks = n / 8;
        for i in 0..chunks {
            let j = 8 * i;
            for l in 0..8 {
                acc[l] += a[j + l] * b[j + l];
            }
        }
        let mut s = acc.iter().sum::<f64>();
        for j in 8 * chunks..n {
            s += a[j] * b[j];
        }
        s
    }

    /// Sum with eight independent accumulators; same bit-stability argument.
    #[inline]
    pub fn vsum(a: &[f64]) -> f64 {
        let mut acc = [0.0f64; 8];
        let chunks = a.len() / 8;
        for i in 0..chunks {
            let j = 8 * i;
            for l in 0..8 {
                acc[l] += a[j + l];
            }
        }
        let mut s = acc.iter().sum::<f64>();
        for v in &a[8 * chunks..] {
            s += v;
        }
        s
    }
}
