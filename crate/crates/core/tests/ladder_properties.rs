use atlas_core::chemistry::series_of_shell;
use atlas_core::ladders::avenue;
use atlas_core::{
    address_from_z, classify_family, ground_state_configuration, madelung_shells,
    series_membership, step_so21, step_so3, taxi, Direction, FamilyLabel, HouseAddress, LadderMove,
    Series, ShellAddress, So3Step,
};
use proptest::prelude::*;

fn any_house() -> impl Strategy<Value = HouseAddress> {
    (1u64..5000).prop_map(|z| address_from_z(z).unwrap())
}

fn any_move() -> impl Strategy<Value = LadderMove> {
    prop_oneof![
        Just(LadderMove::So3Su2(So3Step::M(Direction::Raise))),
        Just(LadderMove::So3Su2(So3Step::M(Direction::Lower))),
        Just(LadderMove::So3Su2(So3Step::ToggleJ)),
        Just(LadderMove::So4Su2(Direction::Raise)),
        Just(LadderMove::So4Su2(Direction::Lower)),
        Just(LadderMove::So21(Direction::Raise)),
        Just(LadderMove::So21(Direction::Lower)),
    ]
}

fn revalidate(h: &HouseAddress) -> bool {
    HouseAddress::new(h.n(), h.l(), h.two_j(), h.two_m()).as_ref() == Ok(h)
}

proptest! {
    #[test]
    fn moves_never_leave_the_table(
        start in any_house(),
        moves in prop::collection::vec(any_move(), 0..40),
    ) {
        let mut here = start;
        for mv in moves {
            if let Ok(next) = mv.apply(&here) {
                prop_assert!(revalidate(&next));
                here = next;
            }
        }
    }

    #[test]
    fn unit_steps_reverse(start in any_house()) {
        for dir in [Direction::Raise, Direction::Lower] {
            if let Ok(next) = step_so3(&start, So3Step::M(dir)) {
                prop_assert_eq!(step_so3(&next, So3Step::M(dir.reversed())), Ok(start));
            }
            if let Ok(next) = step_so21(&start, dir) {
                prop_assert_eq!(step_so21(&next, dir.reversed()), Ok(start));
            }
        }
        if let Ok(next) = step_so3(&start, So3Step::ToggleJ) {
            prop_assert_eq!(step_so3(&next, So3Step::ToggleJ), Ok(start));
        }
    }

    #[test]
    fn families_are_constant_along_avenues(z in 1u64..3000) {
        let family = classify_family(z).unwrap();
        for house in avenue(&address_from_z(z).unwrap()).take(8) {
            prop_assert_eq!(classify_family(house.z()).unwrap(), family);
        }
    }

    #[test]
    fn taxi_routes_replay(a in any_house(), b in any_house()) {
        let route = taxi(&a, &b);
        let path = route.replay().unwrap();
        prop_assert_eq!(*path.last().unwrap(), b);
        prop_assert!(path.iter().all(revalidate));
    }
}

#[test]
fn avenue_is_the_whole_column() {
    let start = HouseAddress::new(5, 2, 5, 1).unwrap();
    let column: Vec<HouseAddress> = avenue(&start).take(10).collect();
    let expected: Vec<HouseAddress> = (3..13)
        .map(|n| HouseAddress::new(n, 2, 5, 1).unwrap())
        .collect();
    assert_eq!(column, expected);
}

// Bound on route length, linear in the quantum numbers of both ends.
fn route_bound(a: &HouseAddress, b: &HouseAddress) -> usize {
    (a.n().abs_diff(b.n())
        + a.l()
        + b.l()
        + 1
        + a.two_m().unsigned_abs()
        + b.two_m().unsigned_abs()) as usize
}

#[test]
fn taxi_connects_every_pair_up_to_street_eight() {
    let houses: Vec<HouseAddress> = (1..=8u32)
        .flat_map(|n| (0..n).map(move |l| ShellAddress::new(n, l).unwrap()))
        .flat_map(|s| s.houses().collect::<Vec<_>>())
        .collect();
    assert_eq!(houses.len(), (1..=8).map(|n| 2 * n * n).sum::<usize>());
    for a in &houses {
        for b in &houses {
            let route = taxi(a, b);
            assert!(route.steps.len() <= route_bound(a, b), "{a} -> {b}");
            let path = route.replay().unwrap();
            assert_eq!(path.last(), Some(b));
        }
    }
}

#[test]
fn configurations_fill_in_madelung_order() {
    for z in 1..=1000u64 {
        let config = ground_state_configuration(z);
        let shells = config.occupied();
        assert_eq!(config.total(), z);
        assert!(shells.windows(2).all(|w| w[0].0 < w[1].0));
        let (last, rest) = shells.split_last().unwrap();
        assert!(rest.iter().all(|(s, k)| *k == s.capacity()));
        assert!(last.1 >= 1 && last.1 <= last.0.capacity());
    }
}

#[test]
fn noble_gas_closures_are_the_p_closures() {
    let closures: Vec<u64> = (3..=118u64)
        .filter(|&z| {
            let config = ground_state_configuration(z);
            let (shell, k) = *config.occupied().last().unwrap();
            shell.l() == 1 && k == shell.capacity()
        })
        .collect();
    assert_eq!(closures, vec![10, 18, 36, 54, 86, 118]);
    let noble: Vec<u64> = FamilyLabel::NobleGas.column().members().take(6).collect();
    assert_eq!(closures, noble);
}

#[test]
fn series_ranges_are_disjoint_block_ranges() {
    let mut ranges: Vec<(u64, u64)> = madelung_shells()
        .take_while(|s| s.madelung_key().0 <= 12)
        .filter(|s| {
            matches!(
                series_of_shell(*s),
                Series::Transition { .. } | Series::InnerTransition { .. }
            )
        })
        .map(|s| {
            let range = s.z_range();
            assert_eq!(series_membership(range.0).unwrap().z_range, Some(range));
            assert_eq!(series_membership(range.1).unwrap().z_range, Some(range));
            range
        })
        .collect();
    ranges.sort();
    assert!(ranges.windows(2).all(|w| w[0].1 < w[1].0));
}
