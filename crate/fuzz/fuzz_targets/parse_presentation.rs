#![no_main]

use libfuzzer_sys::fuzz_target;
use wgroup_core::parse_presentation;

fuzz_target!(|text: &str| {
    if let Ok(p) = parse_presentation(text) {
        // printing and reparsing must give the same group
        let again = parse_presentation(&p.to_string()).expect("display output parses");
        assert_eq!(again, p);
    }
});
