//! Stirling permutations, SP-codes and ternary increasing trees.

use spk::enumerate::{
    code_to_word, enumerate_family, tree_to_word, word_to_code, word_to_tree, Family, Object,
    StirlingWord, DEFAULT_CAP,
};

fn main() -> spk::Result<()> {
    let w = StirlingWord::new(vec![1, 2, 2, 3, 3, 1])?;
    let code = word_to_code(&w)?;
    let tree = word_to_tree(&w)?;
    println!("word {w}");
    println!("code {}", Object::Code(code.clone()));
    println!("tree {}", Object::Tree(tree.clone()));
    assert_eq!(code_to_word(&code)?, w);
    assert_eq!(tree_to_word(&tree), w);

    for o in enumerate_family(Family::Q, 3, DEFAULT_CAP)? {
        if let Object::Word(w) = &o {
            println!("{w}  {}", Object::Code(word_to_code(w)?));
        }
    }
    Ok(())
}
