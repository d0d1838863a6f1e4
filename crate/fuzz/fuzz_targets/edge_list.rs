#![no_main]

use libfuzzer_sys::fuzz_target;
use planar_c5::io::{from_edge_list, to_edge_list};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(g) = from_edge_list(s) {
        let again = from_edge_list(&to_edge_list(&g)).expect("encoder output decodes");
        assert_eq!(again, g);
    }
});
