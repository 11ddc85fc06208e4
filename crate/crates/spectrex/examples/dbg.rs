fn main() {
    let r = spectrex::charpoly::check_inequality(spectrex::charpoly::LemmaId::F6VsL, 258, None).unwrap();
    for s in &r.steps { println!("{}: {} ({})", s.name, s.pass, s.detail); }
    println!("margin {}", r.margin);
}
