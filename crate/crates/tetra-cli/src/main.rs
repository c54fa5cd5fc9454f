fn main() {
    println!("tetra (placeholder)");
}
