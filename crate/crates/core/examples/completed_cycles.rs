//! Completed cycles from the closed formula and from wall-crossing.

use hurwitz_gw::gwh::{completed_cycle, tau_via_wallcrossing};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for d in 1..=3 {
        for k in 0..=4 {
            let closed = completed_cycle(k, d)?.value;
            let wall = tau_via_wallcrossing(k, d)?;
            let mark = if closed == wall { "==" } else { "!=" };
            println!("τ_{k}^{d} = {closed}   {mark} wall-crossing");
        }
    }
    Ok(())
}
