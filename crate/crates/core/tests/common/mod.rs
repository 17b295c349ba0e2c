#![allow(dead_code)]

use std::process::Command;

use hyperpencil::bounds::r_max_cap;
use hyperpencil::{canres_invariants, BranchConfig, SingularitySpectrum, SurfaceInvariants};
use rand::Rng;

/// Random branch datum with integral invariants: `k` even in `[6, 30]`,
/// `l` in `[k/2, 3k]`, `t` in `[0, 12]`, even `r_i <= r_max_cap(k, l)`.
pub fn random_config(rng: &mut impl Rng) -> (BranchConfig, SurfaceInvariants) {
    loop {
        let k = 2 * rng.gen_range(3..=15);
        let l = rng.gen_range(k / 2..=3 * k);
        let t = rng.gen_range(0..=12);
        let cap = r_max_cap(k, l, false);
        let mut r_list = Vec::new();
        if cap >= 2 {
            for _ in 0..rng.gen_range(0..=6) {
                r_list.push(2 * rng.gen_range(1..=cap / 2));
            }
        }
        let Ok(spectrum) = SingularitySpectrum::new(r_list) else { continue };
        let Ok(config) = BranchConfig::new(k, l, None, spectrum, t) else { continue };
        if let Ok(inv) = canres_invariants(&config) {
            return (config, inv);
        }
    }
}

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn cli(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_hyperpencil"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
    }
}

pub fn cli_json(args: &[&str]) -> serde_json::Value {
    let run = cli(args);
    assert_eq!(run.code, 0, "{args:?}: {}", run.stderr);
    serde_json::from_str(&run.stdout).expect("valid json")
}
