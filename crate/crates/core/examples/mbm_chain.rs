//! Builds qutrit optima incrementally: each maximizer at n + 1 grows out of a
//! maximizer at n by one box.

use qudit_ns::optimizer::{maximize_qutrit_closed, maximum_chain};

fn main() -> qudit_ns::Result<()> {
    let chain = maximum_chain(maximize_qutrit_closed(3)?, 60)?;
    for o in &chain {
        let members: Vec<String> = o.argmax.iter().map(ToString::to_string).collect();
        let mark = if o.tie { "  tie" } else { "" };
        println!("n = {:>2}: {}{mark}", o.n, members.join(" "));
    }
    Ok(())
}
