//! Every decomposition written by `decompose` passes `verify`, after a round
//! trip through the JSON formats.

use croof::ensemble::random::{haar_pure, hs_mixed, rng_for};
use croof::ensemble::classical_mixture;
use croof::models::ModelKind;
use croof_cli::decompose::{decompose, verify, DecompositionFile};
use croof_cli::state::StateFile;
use croof_cli::to_json;

fn round_trip(file: &StateFile) -> croof_cli::state::State {
    StateFile::parse(&serde_json::to_string(file).unwrap()).unwrap().load().unwrap()
}

#[test]
fn decompositions_always_verify() {
    for kind in ModelKind::ALL {
        let n = kind.hilbert_dim();
        for i in 0..500u64 {
            let mut rng = rng_for(60, i);
            let file = if i % 5 == 0 {
                StateFile::pure(kind, &haar_pure(&mut rng, n))
            } else {
                StateFile::mixed(kind, &hs_mixed(&mut rng, n))
            };
            let state = round_trip(&file);
            let d = DecompositionFile::parse(&to_json(&decompose(&state).unwrap()).unwrap()).unwrap();
            let report = verify(&state, &d, 1e-9, false).unwrap();
            assert!(report.passed, "{kind} sample {i}: {report:?}");
        }
    }
}

#[test]
fn classical_decompositions_have_classical_components() {
    for kind in ModelKind::ALL {
        for i in 0..500u64 {
            let rho = classical_mixture(&mut rng_for(61, i), kind);
            let state = round_trip(&StateFile::mixed(kind, rho.matrix()));
            let d = decompose(&state).unwrap();
            let report = verify(&state, &d, 1e-9, true).unwrap();
            assert!(report.passed, "{kind} sample {i}: {report:?}");
        }
    }
}

#[test]
fn state_files_round_trip_exactly() {
    let rho = hs_mixed(&mut rng_for(62, 0), 6);
    let file = StateFile::mixed(ModelKind::Fermion4, &rho);
    let state = round_trip(&file);
    match state.amplitudes {
        croof_cli::state::Amplitudes::Mixed(m) => assert_eq!(m, rho),
        _ => panic!("expected a mixed state"),
    }
}
