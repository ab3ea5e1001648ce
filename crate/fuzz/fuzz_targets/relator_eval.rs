#![no_main]

use libfuzzer_sys::fuzz_target;
use wgroup_core::qcentral::Collector;
use wgroup_core::realizability::relators_in_third_series;
use wgroup_core::{parse_presentation, SeriesParams};

fuzz_target!(|text: &str| {
    let Ok(p) = parse_presentation(text) else { return };
    if p.rank() > 6 {
        return;
    }
    let params = SeriesParams::from_q(4).unwrap();
    let c = Collector::new(p.rank(), params);
    for r in &p.relators {
        let img = c.evaluate_on_generators(r).unwrap();
        let back = c.evaluate_on_generators(&r.inverse()).unwrap();
        assert!(c.is_identity(&c.collect(&img, &back).unwrap()));
    }
    let _ = relators_in_third_series(&p, params);
});
