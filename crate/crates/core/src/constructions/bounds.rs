use crate::error::{invalid, Result};
use crate::graph::ProductKind;

/// Lower bound on `toi` of the product of two graphs with `toi` values `t`
/// and `s`, as established by the constructions in this crate and the
/// diagonal clique of the direct product.
pub fn toi_lower_bound_product(kind: ProductKind, t: usize, s: usize) -> Result<usize> {
    if t == 0 || s == 0 {
        return Err(invalid(format!("toi values start at 1 (got {t}, {s})")));
    }
    let (lo, hi) = (t.min(s), t.max(s));
    Ok(match kind {
        ProductKind::Cartesian => match (lo, hi) {
            (1, _) => hi,
            (2, 2) => 2,
            (_, h) if h >= 4 => t + s - 1,
            (3, 3) => 4,
            _ => 3, // {2, 3}
        },
        ProductKind::Lexicographic | ProductKind::Strong => t * s,
        ProductKind::Direct => {
            if lo >= 3 {
                lo
            } else if lo == 2 {
                2
            } else {
                1
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table() {
        use ProductKind::*;
        let cases = [
            (Cartesian, 4, 5, 8),
            (Cartesian, 3, 3, 4),
            (Cartesian, 2, 3, 3),
            (Cartesian, 3, 2, 3),
            (Cartesian, 2, 2, 2),
            (Cartesian, 2, 4, 5),
            (Cartesian, 1, 5, 5),
            (Direct, 7, 9, 7),
            (Direct, 2, 9, 2),
            (Direct, 1, 9, 1),
            (Lexicographic, 3, 4, 12),
            (Strong, 2, 5, 10),
        ];
        for (k, t, s, want) in cases {
            assert_eq!(
                toi_lower_bound_product(k, t, s).unwrap(),
                want,
                "{k} {t} {s}"
            );
        }
        assert!(toi_lower_bound_product(Direct, 0, 3).is_err());
    }

    #[test]
    fn cartesian_bound_never_exceeds_the_degree_bound() {
        for t in 1..12 {
            for s in 1..12 {
                let b = toi_lower_bound_product(ProductKind::Cartesian, t, s).unwrap();
                assert!(b < t + s);
            }
        }
    }
}
