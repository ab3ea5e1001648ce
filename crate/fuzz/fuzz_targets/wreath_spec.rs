#![no_main]

use libfuzzer_sys::fuzz_target;
use wgroup_core::realizability::{wreath_construct, WreathSpec};
use wgroup_core::SeriesParams;

fuzz_target!(|data: &[u8]| {
    let Ok(spec) = serde_json::from_slice::<WreathSpec>(data) else { return };
    if spec.m > 6 || spec.action.len() > 3 || spec.k.presentation.len() > 200 || spec.l.presentation.len() > 200 {
        return;
    }
    let _ = wreath_construct(&spec, SeriesParams::from_q(2).unwrap(), 64);
});
