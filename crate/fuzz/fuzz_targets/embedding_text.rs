#![no_main]

use libfuzzer_sys::fuzz_target;
use planar_c5::Embedding;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(e) = Embedding::from_text(s) {
        let again = Embedding::from_text(&e.to_text()).expect("encoder output decodes");
        assert_eq!(again.rotations(), e.rotations());
        assert_eq!(again.faces().len(), e.faces().len());
    }
});
