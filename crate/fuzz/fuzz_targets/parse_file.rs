#![no_main]

use libfuzzer_sys::fuzz_target;
use wgroup_core::parse_file;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(groups) = parse_file(text) {
            assert!(!groups.is_empty());
            for g in &groups {
                g.validate().expect("parsed groups validate");
            }
        }
    }
});
