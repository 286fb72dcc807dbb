//! Load a tagged corpus through an ambiguity-class specification.
//!
//! Lines whose tag is not mapped by the class, or whose form lacks the class
//! suffix, are dropped and counted; malformed lines are hard errors.

use lexprior::{ClassSpec, LoadOptions, TaggedCorpus};

const CLASS: &str = "\
# Dutch -en forms: infinitive vs. finite plural
name=dutch-en
suffix=en
functions=inf,pl
map INF inf
map PL pl
map PL-PRES pl
";

const CORPUS: &str = "\
lopen\tINF
Lopen\tPL-PRES
huis\tN
aanlokken\tINF
zeggen\tPL
boek\tN
";

fn main() -> lexprior::Result<()> {
    let spec = ClassSpec::parse(CLASS)?;
    println!(
        "class {:?} with functions {:?}",
        spec.name(),
        spec.functions()
    );

    for fold_case in [false, true] {
        let corpus = TaggedCorpus::parse(CORPUS, spec.clone().into(), LoadOptions { fold_case })?;
        println!(
            "\nfold_case={fold_case}: {} tokens kept, {} dropped",
            corpus.len(),
            corpus.dropped
        );
        for t in &corpus.tokens {
            println!("  {:<10} {}", t.form, spec.label(t.function));
        }
    }

    match TaggedCorpus::parse(
        "lopen\tINF\nno tab here\n",
        spec.into(),
        LoadOptions::default(),
    ) {
        Ok(_) => unreachable!(),
        Err(e) => println!("\nmalformed input: {e}"),
    }
    Ok(())
}
