//! Word-side statistics agree with the same statistics read off the SP-code.

use spk::enumerate::{enumerate_family, word_to_code, Family, Object, StirlingWord, DEFAULT_CAP};
use spk::stats::{code_stats, word_stats, Stat};

fn main() -> spk::Result<()> {
    let n = 4;
    let mut checked = 0;
    for o in enumerate_family(Family::Q, n, DEFAULT_CAP)? {
        let Object::Word(w) = o else { continue };
        let ws = word_stats(&w);
        let mut cs = code_stats(&word_to_code(&w)?);
        cs.ap = ws.ap;
        assert_eq!(ws, cs, "{w}");
        checked += 1;
    }
    println!("{checked} words of Q_{n} agree on every statistic");

    let s = word_stats(&StirlingWord::new(vec![1, 2, 3, 3, 2, 1])?);
    for st in Stat::ALL {
        print!("{}={} ", st.name(), s.get(*st));
    }
    println!();
    Ok(())
}
