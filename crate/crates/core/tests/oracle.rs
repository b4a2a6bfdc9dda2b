mod common;

use std::collections::BTreeSet;

use trigrid::{enumerate_polyiamonds, Mode};

#[test]
fn redelmeier_matches_published_counts() {
    let levels = common::redelmeier(9);
    let fixed: Vec<usize> = levels[1..].iter().map(Vec::len).collect();
    assert_eq!(fixed, vec![2, 3, 6, 14, 36, 94, 250, 675, 1838]);
    let free: Vec<usize> = levels[1..]
        .iter()
        .map(|l| l.iter().map(|s| common::free_canonical(s)).collect::<BTreeSet<_>>().len())
        .collect();
    assert_eq!(free, vec![1, 1, 1, 3, 4, 12, 24, 66, 160]);
}

#[test]
fn validity_rejects_holes_and_pinches() {
    // six cells around a vertex minus one: still simple
    let v = (3, 3);
    let fan: Vec<_> = common::FAN.iter().map(|&(dx, dy)| (v.0 + dx, v.1 + dy)).collect();
    assert!(common::is_valid(&fan));
    assert!(common::is_valid(&fan[..5]));
    // two opposite cells of a fan share only the vertex
    assert!(!common::is_valid(&[fan[0], fan[3]]));
    // the ring of nine cells around a single up cell
    let hole = (1, 1);
    let mut ring = BTreeSet::new();
    for v in [(0, 0), (3, 0), (0, 3)] {
        for &(dx, dy) in &common::FAN {
            let c = (v.0 + dx, v.1 + dy);
            if c != hole {
                ring.insert(c);
            }
        }
    }
    let ring: Vec<_> = ring.into_iter().collect();
    assert_eq!(ring.len(), 12);
    assert!(!common::is_valid(&ring));
}

#[test]
fn library_matches_oracle_to_area_ten() {
    let o = common::oracle(10);
    for (mode, expected) in [(Mode::Fixed, &o.fixed), (Mode::Free, &o.free)] {
        let mut got = std::collections::BTreeMap::<usize, BTreeSet<Vec<common::C3>>>::new();
        for p in enumerate_polyiamonds(10, mode) {
            let c = common::from_polygon(&p);
            let key = match mode {
                Mode::Fixed => common::normalise(&c),
                Mode::Free => common::free_canonical(&c),
            };
            assert!(got.entry(p.area()).or_default().insert(key), "duplicate in {mode:?}");
        }
        let sizes = |m: &std::collections::BTreeMap<usize, BTreeSet<Vec<common::C3>>>| {
            m.iter().map(|(a, s)| (*a, s.len())).collect::<Vec<_>>()
        };
        assert_eq!(sizes(&got), sizes(expected), "{mode:?} counts");
        for (area, shapes) in expected {
            let missing: Vec<_> = shapes.difference(&got[area]).take(3).collect();
            assert!(missing.is_empty(), "{mode:?} area {area}: {missing:?}");
        }
    }
    assert_eq!(o.free[&9].len(), 159);
}
