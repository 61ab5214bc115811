#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    qt_catalan::fuzzing::poly_json(data);
});
