use conecover::invariants::chern_data;

fn main() -> conecover::Result<()> {
    println!("{:>3} {:>3} {:>30}  class", "d", "m", "c1^2");
    for k in 4..=20 {
        let c = chern_data(k)?;
        println!("{:>3} {:>3} {:>30}  {}", c.d, c.m, c.c1_squared, c.classification);
    }
    Ok(())
}
