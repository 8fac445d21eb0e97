//! Reproducible synthetic inputs: random braid closures with crossings turned
//! virtual until a target count remains.

use std::path::Path;

use bridgekit_core::SignedGaussCode;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::error::{PipelineError, Result};

/// One signed code with exactly `crossings` crossings.
///
/// The braid has 3 to 5 strands and a few more letters than `crossings`;
/// words whose closure is a link are redrawn.
pub fn random_code(rng: &mut impl Rng, crossings: usize) -> SignedGaussCode {
    loop {
        let strands = rng.gen_range(3..=5);
        let len = crossings + rng.gen_range(1..=4);
        let word: Vec<i32> = (0..len)
            .map(|_| {
                let g = rng.gen_range(1..strands as i32);
                if rng.gen_bool(0.5) {
                    g
                } else {
                    -g
                }
            })
            .collect();
        let Ok(mut code) = SignedGaussCode::from_braid(strands, &word) else {
            continue;
        };
        while code.crossing_count() > crossings {
            let k = rng.gen_range(1..=code.crossing_count() as u32);
            code = code.virtualize_remove(k).expect("label in range");
        }
        return code;
    }
}

pub fn generate(count: usize, crossings: usize, seed: u64) -> Vec<SignedGaussCode> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_code(&mut rng, crossings))
        .collect()
}

/// Writes codes as a one-column CSV readable by the dataset command.
pub fn write_csv(path: &Path, codes: &[SignedGaussCode]) -> Result<()> {
    let fail = |e: csv::Error| PipelineError::OutputUnwritable {
        path: path.to_owned(),
        source: e.into(),
    };
    let mut w = csv::Writer::from_path(path).map_err(fail)?;
    w.write_record(["gauss_code"]).map_err(fail)?;
    for c in codes {
        w.write_record([c.to_string()]).map_err(fail)?;
    }
    w.flush().map_err(|source| PipelineError::OutputUnwritable {
        path: path.to_owned(),
        source,
    })
}
