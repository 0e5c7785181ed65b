//! Independent brute-force oracle for the orderly enumeration: filter every
//! labeled edge set directly and compare class counts.

use nervelab::enumeration::enumerate_tau3_c3free;
use nervelab::redblue::{binom, Triple};

/// tau >= 3 and 3-cycle-free labeled masks on n vertices, counted directly.
fn brute_force_count(n: usize) -> (u64, u64) {
    let total = binom(n, 3) as usize;
    assert!(total <= 20, "direct census is for small n");
    let tmask: Vec<u16> = (0..total)
        .map(|r| {
            Triple::unrank(r)
                .vertices()
                .iter()
                .fold(0u16, |m, v| m | 1 << v)
        })
        .collect();
    let cover: Vec<u32> = (0..n)
        .map(|v| {
            (0..total)
                .filter(|&r| tmask[r] >> v & 1 == 1)
                .fold(0u32, |m, r| m | 1 << r)
        })
        .collect();
    let mut tau3 = 0u64;
    let mut both = 0u64;
    'outer: for mask in 1u32..(1u32 << total) {
        for x in 0..n {
            if mask & !cover[x] == 0 {
                continue 'outer;
            }
            for y in (x + 1)..n {
                if mask & !(cover[x] | cover[y]) == 0 {
                    continue 'outer;
                }
            }
        }
        tau3 += 1;
        let edges: Vec<u16> = (0..total)
            .filter(|&r| mask >> r & 1 == 1)
            .map(|r| tmask[r])
            .collect();
        let mut c3 = false;
        'scan: for i in 0..edges.len() {
            for j in (i + 1)..edges.len() {
                for k in (j + 1)..edges.len() {
                    let (a, b, c) = (edges[i], edges[j], edges[k]);
                    if a & b != 0
                        && a & c != 0
                        && b & c != 0
                        && a & b & c == 0
                        && (a | b | c).count_ones() == 5
                    {
                        c3 = true;
                        break 'scan;
                    }
                }
            }
        }
        if !c3 {
            both += 1;
        }
    }
    (tau3, both)
}

#[test]
fn five_vertices_have_no_qualifying_coloring() {
    let (_, both) = brute_force_count(5);
    assert_eq!(both, 0);
    assert_eq!(enumerate_tau3_c3free(5).unwrap().class_count(), 0);
}

#[test]
fn six_vertices_have_no_qualifying_coloring() {
    // hundreds of thousands of labeled masks reach transversal number 3,
    // yet every one contains a blue 3-cycle
    let (tau3, both) = brute_force_count(6);
    assert!(tau3 > 0);
    assert_eq!(both, 0);
    assert_eq!(enumerate_tau3_c3free(6).unwrap().class_count(), 0);
}
