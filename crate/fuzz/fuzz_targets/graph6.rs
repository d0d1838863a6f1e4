#![no_main]

use libfuzzer_sys::fuzz_target;
use planar_c5::io::{from_graph6, to_graph6};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(g) = from_graph6(s) {
        let again = from_graph6(&to_graph6(&g)).expect("encoder output decodes");
        assert_eq!(again, g);
    }
});
