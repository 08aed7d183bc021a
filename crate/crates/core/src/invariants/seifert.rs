//! Seifert matrix of a closed-braid diagram.
//!
//! The surface is the standard braid one: one disk per strand, one
//! half-twisted band per letter. The homology basis has one loop for each
//! pair of consecutive same-index letters, running through the two bands
//! and the disks between them. Linking numbers for this basis follow the
//! interleaving pattern of the loops:
//!
//! * a loop with band signs `(e1, e2)` links its own pushoff `-(e1+e2)/2`;
//! * consecutive loops in one column share a band of sign `e` and
//!   contribute `(1+e)/2` above the diagonal and `(e-1)/2` below;
//! * loops in adjacent columns contribute `±1` on one side exactly when
//!   their vertical extents interleave, the side and sign depending on
//!   which loop starts first;
//! * all other pairs are unlinked.
//!
//! The convention is pinned by the right-handed trefoil having signature
//! -2 and is enforced end to end by the independent Burau route.

use crate::braid::{BraidWord, Sign};

use super::{InvariantError, SeifertData};

/// One homology generator: a loop through two consecutive bands of the
/// same column.
#[derive(Debug, Clone, Copy)]
struct Loop {
    /// Word positions of the two bands, `first < second`.
    first: usize,
    second: usize,
    first_sign: i64,
    second_sign: i64,
}

/// Builds the Seifert data of the closed braid.
///
/// Every generator index must occur at least once, otherwise the surface
/// is disconnected and the error lists the missing indices (appending one
/// letter per missing index reconnects the diagram; see
/// [`seifert_matrix_stabilized`]).
pub fn seifert_matrix(b: &BraidWord) -> Result<SeifertData, InvariantError> {
    let strands = b.strands();
    let used = b.used_indices();
    let missing: Vec<usize> = (1..strands).filter(|&i| !used[i]).collect();
    if !missing.is_empty() {
        return Err(InvariantError::DisconnectedSurface { missing });
    }

    // Occurrence positions per column.
    let mut columns: Vec<Vec<(usize, i64)>> = vec![Vec::new(); strands];
    for (pos, l) in b.letters().iter().enumerate() {
        columns[l.index].push((pos, l.sign.value()));
    }

    let mut loops: Vec<(usize, Loop)> = Vec::new(); // (column, loop)
    for (col, occ) in columns.iter().enumerate() {
        for w in occ.windows(2) {
            loops.push((
                col,
                Loop {
                    first: w[0].0,
                    second: w[1].0,
                    first_sign: w[0].1,
                    second_sign: w[1].1,
                },
            ));
        }
    }
    let rank = loops.len();
    debug_assert_eq!(rank, b.len() + 1 - strands);

    let mut v = vec![vec![0i64; rank]; rank];
    for (a, &(col_a, la)) in loops.iter().enumerate() {
        // Self-linking from the two band twists.
        v[a][a] = -(la.first_sign + la.second_sign) / 2;
        for (bidx, &(col_b, lb)) in loops.iter().enumerate().skip(a + 1) {
            if col_a == col_b {
                // Consecutive loops share the middle band; farther pairs
                // are unlinked.
                if la.second == lb.first {
                    let e = la.second_sign;
                    v[a][bidx] = (1 + e) / 2;
                    v[bidx][a] = (e - 1) / 2;
                }
            } else if col_b == col_a + 1 || col_a == col_b + 1 {
                // x is the loop on the lower-index column.
                let (x, y, xi, yi) = if col_a < col_b {
                    (la, lb, a, bidx)
                } else {
                    (lb, la, bidx, a)
                };
                if x.first < y.first && y.first < x.second && x.second < y.second {
                    v[xi][yi] = 1;
                    v[yi][xi] = 0;
                } else if y.first < x.first && x.first < y.second && y.second < x.second {
                    v[xi][yi] = 0;
                    v[yi][xi] = 1;
                }
            }
        }
    }

    let components = b.closure_summary().components;
    // Euler characteristic of the surface: disks minus bands.
    let genus_doubled = 2 - components as i64 - strands as i64 + b.len() as i64;
    debug_assert!(genus_doubled >= 0 && genus_doubled % 2 == 0);
    Ok(SeifertData {
        matrix: v,
        genus: (genus_doubled / 2) as usize,
        components,
        strands,
    })
}

/// Variant that reconnects a disconnected diagram first by appending one
/// positive letter per missing generator index. This absorbs split unknot
/// components of the closure; it is deliberately a separate entry point
/// so the silent diagram change is always explicit in the caller.
pub fn seifert_matrix_stabilized(b: &BraidWord) -> Result<SeifertData, InvariantError> {
    match seifert_matrix(b) {
        Err(InvariantError::DisconnectedSurface { missing }) => {
            let mut letters = b.letters().to_vec();
            letters.extend(missing.iter().map(|&i| crate::braid::Letter::new(i, Sign::Positive)));
            let stabilized = BraidWord::new(b.strands(), letters).expect("indices already valid");
            seifert_matrix(&stabilized)
        }
        other => other,
    }
}
