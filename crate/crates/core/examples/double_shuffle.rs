//! Double shuffle relations, the summation formula and the product identity.
//!
//! ```bash
//! cargo run --example double_shuffle
//! ```

use qforms::double::DoubleFamily;
use qforms::report::Convention;
use qforms::verify::{check_partial_fraction, check_shuffle, check_shuffle_in, check_star, check_summation, ShuffleKind, ShuffleOptions};
use qforms::exact::rat;

fn main() {
    for kind in ShuffleKind::ALL {
        for (r, s) in [(1, 1), (2, 2), (4, 3)] {
            println!("{}", check_shuffle(kind, r, s, 30, Convention::Ge1).summary());
        }
    }
    // the i, j >= 2 reading of the binomial sums fails at the boundary
    println!("{}", check_shuffle(ShuffleKind::OddEven, 2, 2, 30, Convention::Ge2).summary());

    // without alpha_4 the weight-2 odd-odd relation breaks
    let family = DoubleFamily::new(30);
    let literal = ShuffleOptions { alpha4: false, ..ShuffleOptions::default() };
    println!("{}", check_shuffle_in(&family, ShuffleKind::OddOdd, 1, 1, literal).summary());

    println!("{}", check_summation(8, 30).summary());
    println!("{}", check_star(6, 4, 30).summary());
    println!("{}", check_partial_fraction(2, 2, &[(rat(1, 3), 2, 0)]).summary());
}
