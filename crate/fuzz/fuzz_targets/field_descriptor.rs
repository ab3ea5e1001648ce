#![no_main]

use libfuzzer_sys::fuzz_target;
use wgroup_core::milnor::{symbol_algebra, FieldDescriptor};
use wgroup_core::SeriesParams;

fuzz_target!(|input: (u8, &str)| {
    let (q, text) = input;
    let Ok(params) = SeriesParams::from_q(u64::from(q)) else { return };
    if let Ok(field) = FieldDescriptor::parse(text, params) {
        // keep the symbol computation small
        if let wgroup_core::milnor::FieldKind::Finite { size } = field.kind {
            if size > 4096 {
                return;
            }
        }
        let _ = symbol_algebra(&field);
    }
});
