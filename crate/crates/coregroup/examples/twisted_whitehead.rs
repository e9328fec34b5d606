//! Even-product subgroups of the twisted Whitehead links `W_n`: orders by
//! coset enumeration, the cyclic kernel, and a cross-check against the
//! group read off a generated diagram.

use coregroup::quotients::whitehead::{
    analyze_diagram, analyze_two_generator, two_generator_presentation,
};

fn main() -> coregroup::Result<()> {
    print!("{}", two_generator_presentation(1)?.emit());
    println!(
        "{:>3} {:>6} {:>4} {:>4} {:>7} {:>10}  structure",
        "n", "order", "|b|", "|u|", "cyclic", "diagram"
    );
    for n in -2..=2 {
        let w = analyze_two_generator(n, 1_000_000)?;
        let d = analyze_diagram(n, 1_000_000)?;
        println!(
            "{:>3} {:>6} {:>4} {:>4} {:>7} {:>10}  {}",
            n, w.order, w.b_order, w.u_order, w.kernel_cyclic, d.order, w.structure
        );
    }
    Ok(())
}
