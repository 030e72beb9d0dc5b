fn main() {
    let crate_dir = std::env::var("CARGO_MANIFEST_DIR").unwrap();
    let header = std::path::Path::new(&crate_dir).join("include/suspgraph.h");
    match cbindgen::Builder::new()
        .with_crate(&crate_dir)
        .with_language(cbindgen::Language::C)
        .with_include_guard("SUSPGRAPH_H")
        .with_cpp_compat(true)
        .generate()
    {
        Ok(bindings) => {
            bindings.write_to_file(header);
        }
        // don't fail the build when cbindgen can't parse (e.g. during rustdoc)
        Err(err) => println!("cargo:warning=cbindgen skipped: {err}"),
    }
    println!("cargo:rerun-if-changed=src/lib.rs");
}
