//! Truncated multivariate series with exact rational coefficients.

use hurwitz_gw::qseries::{int, s_series, sigma_series};
use hurwitz_gw::MultiSeries;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // ς(x) = e^{x/2} − e^{−x/2} and S(x) = ς(x)/x, both known below x^8.
    let sigma = sigma_series("x", 8);
    let s = s_series("x", 8);
    println!("ς(x) = {sigma}");
    println!("S(x) = {s}");

    // 1/ς(x) is a Laurent series; its known box shrinks accordingly.
    println!("1/ς(x) = {}", sigma.inverse()?);

    // exp and log are inverse to each other on series without constant term.
    let x = MultiSeries::var(&["x"], "x")?.truncated(&[8]);
    let e = x.exp()?;
    println!("log(exp(x)) = {}", e.log()?);

    // Two variables: (1 + u w)^{-1} below u^4 w^4.
    let vars = ["u", "w"];
    let uw = MultiSeries::monomial(&vars, &[1, 1], int(1)).truncated(&[4, 4]);
    let one = MultiSeries::one(&vars);
    println!("1/(1+uw) = {}", one.add(&uw)?.inverse()?);
    Ok(())
}
