//! Switching chains: marginal-preserving flips between solutions.

use taxicab_tomo::discrete::{apply_switching_chain, brute_force_solutions, find_switching_chain, BinaryMatrix, SumVectors};

fn show(label: &str, a: &BinaryMatrix) {
    println!("{label}");
    for line in a.to_string().lines() {
        println!("  {line}");
    }
}

fn main() -> taxicab_tomo::Result<()> {
    let a = BinaryMatrix::from_rows(&[[1, 0, 1], [1, 1, 0], [0, 0, 1]])?;
    show("A:", &a);
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            match find_switching_chain(&a, i, j) {
                Some(chain) => {
                    let cells: Vec<String> = chain.pairs.iter().map(|(r, c)| format!("({}, {})", r + 1, c + 1)).collect();
                    println!("chain from ({}, {}): {}", i + 1, j + 1, cells.join(" "));
                }
                None if a.get(i, j) => println!("no chain from ({}, {})", i + 1, j + 1),
                None => {}
            }
        }
    }

    let chain = find_switching_chain(&a, 0, 0).expect("a chain exists");
    let b = apply_switching_chain(&a, &chain)?;
    show("after switching the first chain:", &b);
    println!("row sums {:?} -> {:?}, column sums {:?} -> {:?}", a.row_sums(), b.row_sums(), a.col_sums(), b.col_sums());

    // Every solution of these sums, for comparison.
    let sums = SumVectors::new(a.row_sums().to_vec(), a.col_sums().to_vec())?;
    let all = brute_force_solutions(&sums)?;
    println!("{} matrices share these marginals", all.len());
    Ok(())
}
