//! Wang tilings as images: validate adjacency, encode, and find the
//! smallest repeating tile pattern.
//!
//! ```bash
//! cargo run -p coverscan --example wang_cover
//! ```

use coverscan::{
    minimal_wang_cover, minimal_wang_cover_via_image, Image, WangTileSet, WangTiling,
};

fn print_image(image: &Image) {
    for i in 0..image.height() {
        let row: Vec<&str> = (0..image.width())
            .map(|j| match image.token_at(i, j) {
                coverscan::wang::BLACK_TOKEN => "#",
                coverscan::wang::GRAY_TOKEN => "+",
                color => color,
            })
            .collect();
        println!("  {}", row.join(" "));
    }
}

fn main() {
    // Two tiles that alternate along a row: A's east edge matches B's west
    // edge and vice versa.
    let mut set = WangTileSet::new();
    set.add_tile("A", "0", "1", "0", "1").unwrap();
    set.add_tile("B", "1", "1", "1", "1").unwrap();
    let grid: Vec<usize> = (0..6).map(|k| k % 2).collect();
    let row = WangTiling::new(set, 1, 6, grid).unwrap();

    println!("1x6 tiling A B A B A B encoded as a 3x18 image:");
    print_image(&row.to_image());

    let cover = minimal_wang_cover(&row);
    println!(
        "\nminimal Wang cover: {}x{} tiles (1D tile route)",
        cover.height, cover.width
    );
    let via_image = minimal_wang_cover_via_image(&row);
    println!(
        "minimal Wang cover: {}x{} tiles (image route, same answer)",
        via_image.height, via_image.width
    );
    assert_eq!(cover, via_image);

    // A 4x4 tiling built from a 2x2 block of distinct tiles.
    let mut set = WangTileSet::new();
    set.add_tile("nw", "0", "1", "1", "0").unwrap();
    set.add_tile("ne", "0", "0", "2", "1").unwrap();
    set.add_tile("sw", "1", "2", "0", "0").unwrap();
    set.add_tile("se", "2", "0", "0", "2").unwrap();
    let block = [[0usize, 1], [2, 3]];
    let mut grid = Vec::new();
    for r in 0..4 {
        for c in 0..4 {
            grid.push(block[r % 2][c % 2]);
        }
    }
    let quilt = WangTiling::new(set, 4, 4, grid).unwrap();
    let cover = minimal_wang_cover(&quilt);
    println!(
        "\n4x4 quilt of a 2x2 block: minimal Wang cover {}x{} tiles",
        cover.height, cover.width
    );

    // An adjacency violation is caught at construction, naming the edge.
    let mut set = WangTileSet::new();
    set.add_tile("A", "0", "1", "0", "1").unwrap();
    set.add_tile("C", "0", "0", "0", "0").unwrap();
    let err = WangTiling::new(set, 1, 2, vec![0, 1]).unwrap_err();
    println!("\ninvalid tiling rejected: {err}");
}
