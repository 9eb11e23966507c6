//! Fuzzes the `a1,a2,a3,a4,a6@ring` curve reader: parsing arbitrary text
//! must return a structured error, never panic.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        let _ = picard_lab::parse::parse_curve(text);
    }
});
