//! Double coset enumeration of each bundled fixture.

use std::path::PathBuf;

use symgen::dcenum::{build_image, double_cosets, emit_graph, GraphFormat};
use symgen::fpgroup::DEFAULT_MAX_COSETS;
use symgen::spec_file::GroupSpecFile;

fn main() -> symgen::Result<()> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    for name in ["l2_19.json", "u3_3.json", "5sq_d6.json"] {
        let loaded = GroupSpecFile::read(&dir.join(name))?.load()?;
        let img = build_image(&loaded.spec, loaded.t_words.as_deref(), DEFAULT_MAX_COSETS)?;
        let graph = double_cosets(&img)?;
        println!(
            "{}: index {}, order {}",
            loaded.file.name,
            img.index(),
            img.order()
        );
        for (i, node) in graph.nodes.iter().enumerate() {
            println!(
                "  {:<12} size {:>3}  |N^(w)| = {}",
                graph.name(i),
                node.size(),
                node.stabilizer_order()
            );
        }
        if name == "l2_19.json" {
            print!("{}", emit_graph(&graph, GraphFormat::Dot));
        }
    }
    Ok(())
}
