//! Fuzzes the `u,r,s,t@ring` coordinate-change reader: parsing arbitrary
//! text must return a structured error, never panic.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        let _ = picard_lab::parse::parse_transform(text);
    }
});
