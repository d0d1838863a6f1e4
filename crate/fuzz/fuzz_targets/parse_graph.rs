#![no_main]

use libfuzzer_sys::fuzz_target;
use planar_c5::io::parse_graph;
use planar_c5::{canonical_form, count_cycles, planar_embed};

// counting and canonization are exercised only on small graphs
const SMALL: usize = 24;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(g) = parse_graph(s, None) else { return };
    if let Ok(e) = planar_embed(&g) {
        assert_eq!(e.graph(), &g);
    }
    if g.n() <= SMALL {
        for k in 3..=5 {
            count_cycles(&g, k).expect("small graphs do not overflow");
        }
        let _ = canonical_form(&g);
    }
});
