//! Octree-serialized autoregressive 3D shape generation.
//!
//! Shapes are converted into multiscale binary token sequences by serializing
//! an octree level by level (split bits in z-order) and appending quantized
//! binary codes produced by a small octree autoencoder. A masked
//! autoregressive transformer with octree window attention learns to predict
//! the sequences; generated sequences are decoded back into signed distance
//! fields and meshed with marching cubes.
//!
//! The crate is organized along the pipeline:
//!
//! * [`shapes`] — procedural CSG ground truth with exact SDF oracles
//! * [`octree`] — octree construction, shuffled keys, z-order navigation
//! * [`codec`] — octree ⇄ token-sequence serialization
//! * [`vqvae`] — binary-quantized autoencoder (codes ⇄ local SDFs)
//! * [`schedule`] — attention window plans and teacher-forcing masks
//! * [`posenc`] — rotary 3D positional encoding
//! * [`net`] — the transformer: forward/backward, optimizer, checkpoints
//! * [`sampler`] — coarse-to-fine parallel token generation
//! * [`mesher`] — sparse marching cubes, OBJ export, geometric metrics
//! * [`bench`] — timing harness for attention-scaling measurements

pub mod bench;
pub mod codec;
pub mod error;
pub mod geom;
pub mod mesher;
pub mod net;
pub mod nn;
pub mod octree;
pub mod posenc;
pub mod rng;
pub mod sampler;
pub mod schedule;
pub mod shapes;
pub mod vqvae;

pub use error::CoreError;

/// Configure the global thread pool. `n = 0` keeps the default (all cores).
/// Returns an error if a pool was already installed with a different size.
pub fn configure_threads(n: usize) -> Result<(), rayon::ThreadPoolBuildError> {
    if n == 0 {
        return Ok(());
    }
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global()
}
