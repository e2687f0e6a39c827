//! Arithmetic in F_9 = F_3[a]/(a^2 + 1).

use ncgraph::Field;

fn main() -> ncgraph::Result<()> {
    let f = Field::of_order(9)?;
    println!(
        "{} has characteristic {} and degree {}",
        f.spec(),
        f.characteristic(),
        f.degree()
    );
    let a = f.from_coeffs(&[0, 1])?;
    let a2 = f.mul(a, a);
    println!("a^2 = {}", f.format(a2));
    for a in f.nonzero() {
        let inv = f.inv(a).expect("nonzero");
        println!(
            "{:>8} * {:<8} = {}",
            f.format(a),
            f.format(inv),
            f.format(f.mul(a, inv))
        );
    }
    Ok(())
}
