//! Line-by-line transcription of a reference seventh-order C routine.
#![allow(dead_code, clippy::all)]

fn min(a: f64, b: f64) -> f64 {
    if a < b {
        a
    } else {
        b
    }
}

pub fn eno_ao7_reference(fi: &[f64; 9]) -> f64 {
    let delta = 1e-5;
    let mut df = [0.0f64; 9];

    let dfl = (-fi[0] + 7.0 * fi[1] - 21.0 * fi[2] + 35.0 * fi[3] - 35.0 * fi[4] + 21.0 * fi[5] - 7.0 * fi[6] + fi[7]).abs();
    let dfr = (-fi[1] + 7.0 * fi[2] - 21.0 * fi[3] + 35.0 * fi[4] - 35.0 * fi[5] + 21.0 * fi[6] - 7.0 * fi[7] + fi[8]).abs();
    df[8] = min(dfl, dfr);
    if df[8] <= delta {
        return (-3.0 * fi[1] + 25.0 * fi[2] - 101.0 * fi[3] + 319.0 * fi[4] + 214.0 * fi[5] - 38.0 * fi[6] + 4.0 * fi[7]) / 420.0;
    }

    let dfl = (fi[1] - 6.0 * fi[2] + 15.0 * fi[3] - 20.0 * fi[4] + 15.0 * fi[5] - 6.0 * fi[6] + fi[7]).abs();
    let dfr = (fi[2] - 6.0 * fi[3] + 15.0 * fi[4] - 20.0 * fi[5] + 15.0 * fi[6] - 6.0 * fi[7] + fi[8]).abs();
    df[7] = min(dfl, dfr);
    if df[7] <= delta {
        return (fi[2] - 8.0 * fi[3] + 37.0 * fi[4] + 37.0 * fi[5] - 8.0 * fi[6] + fi[7]) / 60.0;
    }

    let dfl = (fi[0] - 6.0 * fi[1] + 15.0 * fi[2] - 20.0 * fi[3] + 15.0 * fi[4] - 6.0 * fi[5] + fi[6]).abs();
    let dfr = (fi[1] - 6.0 * fi[2] + 15.0 * fi[3] - 20.0 * fi[4] + 15.0 * fi[5] - 6.0 * fi[6] + fi[7]).abs();
    df[6] = min(dfl, dfr);
    if df[6] <= delta {
        return (-fi[1] + 7.0 * fi[2] - 23.0 * fi[3] + 57.0 * fi[4] + 22.0 * fi[5] - 2.0 * fi[6]) / 60.0;
    }

    let dfl = (-fi[1] + 5.0 * fi[2] - 10.0 * fi[3] + 10.0 * fi[4] - 5.0 * fi[5] + fi[6]).abs();
    let dfr = (-fi[2] + 5.0 * fi[3] - 10.0 * fi[4] + 10.0 * fi[5] - 5.0 * fi[6] + fi[7]).abs();
    df[5] = min(dfl, dfr);
    if df[5] <= delta {
        return (2.0 * fi[2] - 13.0 * fi[3] + 47.0 * fi[4] + 27.0 * fi[5] - 3.0 * fi[6]) / 60.0;
    }

    let dfl = (fi[2] - 4.0 * fi[3] + 6.0 * fi[4] - 4.0 * fi[5] + fi[6]).abs();
    let dfr = (fi[3] - 4.0 * fi[4] + 6.0 * fi[5] - 4.0 * fi[6] + fi[7]).abs();
    df[4] = min(dfl, dfr);
    if df[4] <= delta {
        return (-fi[3] + 7.0 * fi[4] + 7.0 * fi[5] - fi[6]) / 12.0;
    }

    let dfl = (fi[1] - 4.0 * fi[2] + 6.0 * fi[3] - 4.0 * fi[4] + fi[5]).abs();
    let dfr = (fi[2] - 4.0 * fi[3] + 6.0 * fi[4] - 4.0 * fi[5] + fi[6]).abs();
    df[3] = min(dfl, dfr);
    if df[3] <= delta {
        return (fi[2] - 5.0 * fi[3] + 13.0 * fi[4] + 3.0 * fi[5]) / 12.0;
    }

    let dfl = (-fi[2] + 3.0 * fi[3] - 3.0 * fi[4] + fi[5]).abs();
    let dfr = (-fi[3] + 3.0 * fi[4] - 3.0 * fi[5] + fi[6]).abs();
    df[2] = min(dfl, dfr);
    if df[2] <= delta {
        return (-fi[3] + 5.0 * fi[4] + 2.0 * fi[5]) / 6.0;
    }

    let dfl = (fi[3] - 2.0 * fi[4] + fi[5]).abs();
    let dfr = (fi[4] - 2.0 * fi[5] + fi[6]).abs();
    df[1] = min(dfl, dfr);
    if df[1] <= delta {
        return 0.5 * (fi[4] + fi[5]);
    }

    let dfl = ((fi[3] - fi[4]).abs() + (fi[2] - fi[3]).abs()) / 2.0;
    let dfr = ((fi[5] - fi[4]).abs() + (fi[6] - fi[5]).abs()) / 2.0;
    df[0] = min(dfl, dfr);
    if df[0] <= delta {
        return fi[4];
    }

    let mut min_df = df[0];
    let mut index = 0;
    for k in 1..9 {
        if df[k] <= min_df {
            min_df = df[k];
            index = k;
        }
    }

    match index {
        0 => fi[4],
        1 => 0.5 * (fi[4] + fi[5]),
        2 => (-fi[3] + 5.0 * fi[4] + 2.0 * fi[5]) / 6.0,
        3 => (fi[2] - 5.0 * fi[3] + 13.0 * fi[4] + 3.0 * fi[5]) / 12.0,
        4 => (-fi[3] + 7.0 * fi[4] + 7.0 * fi[5] - fi[6]) / 12.0,
        5 => (2.0 * fi[2] - 13.0 * fi[3] + 47.0 * fi[4] + 27.0 * fi[5] - 3.0 * fi[6]) / 60.0,
        6 => (-fi[1] + 7.0 * fi[2] - 23.0 * fi[3] + 57.0 * fi[4] + 22.0 * fi[5] - 2.0 * fi[6]) / 60.0,
        7 => (fi[2] - 8.0 * fi[3] + 37.0 * fi[4] + 37.0 * fi[5] - 8.0 * fi[6] + fi[7]) / 60.0,
        _ => (-3.0 * fi[1] + 25.0 * fi[2] - 101.0 * fi[3] + 319.0 * fi[4] + 214.0 * fi[5] - 38.0 * fi[6] + 4.0 * fi[7]) / 420.0,
    }
}

/// Smooth, stepped and mixed windows drawn from a seeded generator.
pub fn windows(count: usize, seed: u64) -> Vec<[f64; 9]> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let x0: f64 = rng.gen_range(-3.0..3.0);
            let h: f64 = 10f64.powf(rng.gen_range(-4.0..0.0));
            let amp: f64 = 10f64.powf(rng.gen_range(-3.0..2.0));
            let smooth: [f64; 9] = std::array::from_fn(|k| amp * (x0 + h * (k as f64 - 4.0)).sin());
            match i % 3 {
                0 => smooth,
                1 => {
                    let at = rng.gen_range(0..9);
                    let (lo, hi): (f64, f64) = (rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
                    std::array::from_fn(|k| if k < at { lo } else { hi })
                }
                _ => {
                    let at = rng.gen_range(0..9);
                    let jump: f64 = rng.gen_range(-5.0..5.0);
                    let noise: f64 = 10f64.powf(rng.gen_range(-9.0..-3.0));
                    std::array::from_fn(|k| {
                        smooth[k] + if k >= at { jump } else { 0.0 } + noise * rng.gen_range(-1.0..1.0)
                    })
                }
            }
        })
        .collect()
}
