//! The closed-form constants behind the component and distance results,
//! evaluated at a few parameter points, plus a brute-force check of the
//! pairing disconnection probability on a tiny instance.
//!
//!     cargo run --release --example oracle_constants

use confmodel::oracle::{
    c_f, c_m_eps, centering_term, complement_tail_bound, disconnect_product, gamma_double_star,
    gamma_star, h_product_check, no_connect_bound, prop21_bound, two_cycle_mean, u_closed_form,
    u_sequence, CenteringRegime,
};

fn main() {
    println!("component-size threshold coefficients:");
    println!(
        "  gamma*  (tau=1.5, delta=0.1)        = {:.4}",
        gamma_star(1.5, 0.1, f64::NAN).unwrap()
    );
    println!(
        "  gamma*  (tau=2.5, delta=0,   mu=4)  = {:.4}",
        gamma_star(2.5, 0.0, 4.0).unwrap()
    );
    println!(
        "  gamma** (tau=2.5, delta=0.1, mu=4, f1=1/4) = {:.4}",
        gamma_double_star(2.5, 0.1, 4.0, 0.25).unwrap()
    );

    println!("\nmid-size component bound (n=9, s=3, r=2, L=27): {:.4}", prop21_bound(9, 3, 2, 27.0).unwrap());

    println!("\npairing disconnection probability, exact product vs formula:");
    for (a, l) in [(2u64, 4u64), (4, 8), (4, 12)] {
        println!("  A={a}, L={l}: {:.6}", disconnect_product(a, l).unwrap());
    }
    let (h, ok) = h_product_check(5, 4).unwrap();
    println!("  h-product n=5, k=4: {h:.4}, at most 1 as required: {ok}");

    println!("\ndistance constants for tau=2.5, n=1e5:");
    let lnln = 1e5f64.ln().ln();
    println!(
        "  centering 2 ln ln n / |ln(tau-2)| = {:.4}",
        centering_term(CenteringRegime::Tau23, 1e5, 2.5, f64::NAN).unwrap()
    );
    println!(
        "  centering ln n / ln nu (nu=2)     = {:.4}",
        centering_term(CenteringRegime::Tau3Plus, 1e5, f64::NAN, 2.0).unwrap()
    );
    println!("  C(m=2, eps=0.1) = {:.4}", c_m_eps(2, 0.1, 2.5).unwrap());
    println!(
        "  C_F = {:.4}, so the diameter ceiling C_F ln ln n = {:.2}",
        c_f(2.5, 2, 0.1).unwrap(),
        c_f(2.5, 2, 0.1).unwrap() * lnln
    );

    println!("\ncore growth ladder u_k (n=1e6, tau=2.5, C=10):");
    let u = u_sequence(1e6, 2.5, 10.0, 4).unwrap();
    for (i, v) in u.iter().enumerate() {
        let cf = u_closed_form(1e6, 2.5, 10.0, i as u64 + 1).unwrap();
        println!("  u_{} = {v:.3}  (closed form {cf:.3})", i + 1);
    }

    println!("\nmiscellaneous bounds:");
    println!("  P(no edge between 100- and 200-stub groups, L=10^4) <= {:.4}", no_connect_bound(100.0, 200.0, 1e4).unwrap());
    println!("  limiting mean 2-cycle count, f2=1/3, mu=2: {:.5}", two_cycle_mean(1.0 / 3.0, 2.0).unwrap());
    println!("  P(complement of giant >= 40), mu=2.5: <= {:.6}", complement_tail_bound(2.5, 40).unwrap());
}
