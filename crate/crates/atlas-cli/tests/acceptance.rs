//! Exit criteria for the library and CLI. Each criterion prints one
//! PASS/FAIL line; the test fails if any criterion fails.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use atlas_cli::{render::cell_records, Annotations, ElementDataset, Format, RenderSpec};
use atlas_core::{
    address_from_z, classify_family, composed_complete_set, enumerate_shells, labelling_count,
    oracle_enumerate, series_membership, taxi, z_from_address, z_from_quartet, Direction,
    FamilyLabel, HouseAddress, LadderMove, Series, ShellAddress, So3Step,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const TIME_LIMIT: Duration = Duration::from_secs(1);

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, detail: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(detail.into())
    }
}

fn formula_oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let houses = oracle_enumerate(12);
    let mismatches = houses
        .iter()
        .filter(|(h, z)| z_from_address(h) != *z)
        .count();
    let elapsed = start.elapsed();
    check(mismatches == 0, format!("{mismatches} mismatches"))?;
    check(elapsed < TIME_LIMIT, format!("took {elapsed:?}"))?;
    Ok(format!(
        "{} houses, 0 mismatches, {elapsed:?}",
        houses.len()
    ))
}

fn anchor_values() -> Outcome {
    let anchors = [
        ((1, 0, 1, -1), 1),
        ((1, 0, 1, 1), 2),
        ((2, 1, 3, 3), 10),
        ((4, 3, 5, -5), 57),
        ((4, 3, 7, 7), 70),
    ];
    for ((n, l, j, m), want) in anchors {
        let got = z_from_quartet(n, l, j, m).map_err(|e| e.to_string())?;
        check(
            got == want,
            format!("Z({n},{l},{j}/2,{m}/2) = {got}, want {want}"),
        )?;
    }
    Ok("H=1 He=2 Ne=10 La=57 Yb=70".into())
}

fn shell_ordering() -> Outcome {
    let got: Vec<String> = enumerate_shells(12)
        .iter()
        .map(ShellAddress::to_string)
        .collect();
    let want = [
        "1s", "2s", "2p", "3s", "3p", "4s", "3d", "4p", "5s", "4d", "5p", "6s",
    ];
    check(got == want, format!("{got:?}"))?;
    Ok(got.join(" < "))
}

fn series_ranges() -> Outcome {
    let expect = [
        (26, Series::Transition { generation: 3 }, (21, 30)),
        (39, Series::Transition { generation: 4 }, (39, 48)),
        (71, Series::Transition { generation: 5 }, (71, 80)),
        (103, Series::Transition { generation: 6 }, (103, 112)),
        (57, Series::InnerTransition { generation: 4 }, (57, 70)),
        (89, Series::InnerTransition { generation: 5 }, (89, 102)),
        (139, Series::InnerTransition { generation: 6 }, (139, 152)),
    ];
    for (z, series, range) in expect {
        let got = series_membership(z).map_err(|e| e.to_string())?;
        check(
            got.series == series && got.z_range == Some(range),
            format!("Z={z}: {got:?}"),
        )?;
    }
    for z in 120..=139 {
        let is_new = series_membership(z).unwrap().series == Series::NewPeriod121to138;
        check(
            is_new == (121..=138).contains(&z),
            format!("new-period flag wrong at Z={z}"),
        )?;
    }
    Ok("d: 21-30 39-48 71-80 103-112; f: 57-70 89-102 139-152; new period 121-138".into())
}

fn period_lengths() -> Outcome {
    let ds = ElementDataset::bundled();
    for n in 1..=8u32 {
        let spec = RenderSpec::new(n, Format::Json, Annotations::default())?;
        let in_row = cell_records(&spec, &ds).iter().filter(|c| c.n == n).count();
        check(
            in_row == (2 * n * n) as usize,
            format!("row {n} has {in_row} cells"),
        )?;
    }
    Ok("rows 1..8 hold 2, 8, 18, 32, 50, 72, 98, 128".into())
}

fn family_membership() -> Outcome {
    let label = |z| classify_family(z).unwrap().label;
    check(label(1) == FamilyLabel::AlkaliMetal, "H not alkali")?;
    check(
        label(2) == FamilyLabel::AlkalineEarth,
        "He not alkaline earth",
    )?;
    check(label(9) == FamilyLabel::Halogen, "F not halogen")?;
    check(label(1) != FamilyLabel::Halogen, "H is a halogen")?;
    check(label(2) != FamilyLabel::NobleGas, "He is a noble gas")?;
    let noble: Vec<u64> = (1..=118)
        .filter(|&z| label(z) == FamilyLabel::NobleGas)
        .collect();
    check(
        noble == [10, 18, 36, 54, 86, 118],
        format!("noble gases {noble:?}"),
    )?;
    Ok(format!("noble gases {noble:?}"))
}

fn labelling_counts() -> Outcome {
    let so42 = labelling_count(15, 3).map_err(|e| e.to_string())?;
    let su2 = labelling_count(3, 1).map_err(|e| e.to_string())?;
    check(
        (so42.racah_extra, so42.complete_set) == (3, 9),
        format!("{so42:?}"),
    )?;
    check(
        (su2.racah_extra, su2.complete_set) == (0, 2),
        format!("{su2:?}"),
    )?;
    let total = composed_complete_set(&[(15, 3), (3, 1)]).map_err(|e| e.to_string())?;
    check(total == 11, format!("composed {total}"))?;
    Ok("so(4,2): 3 extra, 9; su(2): 0 extra, 2; total 11".into())
}

fn round_trip() -> Outcome {
    let start = Instant::now();
    for (house, _) in oracle_enumerate(12) {
        let back = address_from_z(z_from_address(&house)).map_err(|e| e.to_string())?;
        check(back == house, format!("{house} -> {back}"))?;
    }
    for z in 1..=10_000 {
        let house = address_from_z(z).map_err(|e| e.to_string())?;
        check(z_from_address(&house) == z, format!("Z={z} -> {house}"))?;
    }
    let elapsed = start.elapsed();
    check(elapsed < TIME_LIMIT, format!("took {elapsed:?}"))?;
    Ok(format!("both directions exact, {elapsed:?}"))
}

fn random_move(rng: &mut StdRng) -> LadderMove {
    let dir = if rng.gen_bool(0.5) {
        Direction::Raise
    } else {
        Direction::Lower
    };
    match rng.gen_range(0..5) {
        0 => LadderMove::So3Su2(So3Step::M(dir)),
        1 => LadderMove::So3Su2(So3Step::ToggleJ),
        2 => LadderMove::So4Su2(dir),
        3 => LadderMove::So21(dir),
        _ => LadderMove::Taxi(address_from_z(rng.gen_range(1..=1000)).unwrap()),
    }
}

fn is_valid(h: &HouseAddress) -> bool {
    HouseAddress::new(h.n(), h.l(), h.two_j(), h.two_m()).as_ref() == Ok(h)
}

fn ladder_properties() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut applied = 0usize;
    for _ in 0..10_000 {
        let mut here = address_from_z(rng.gen_range(1..=2000)).unwrap();
        for _ in 0..20 {
            if let Ok(next) = random_move(&mut rng).apply(&here) {
                check(is_valid(&next), format!("invalid address {next}"))?;
                here = next;
                applied += 1;
            }
        }
    }

    let houses: Vec<HouseAddress> = (1..=6u32)
        .flat_map(|n| (0..n).map(move |l| ShellAddress::new(n, l).unwrap()))
        .flat_map(|s| s.houses().collect::<Vec<_>>())
        .collect();
    let mut routes = 0usize;
    for a in &houses {
        for b in &houses {
            let path = taxi(a, b)
                .replay()
                .map_err(|e| format!("{a} -> {b}: {e}"))?;
            check(path.last() == Some(b), format!("{a} -> {b} ends elsewhere"))?;
            check(
                path.iter().all(is_valid),
                format!("{a} -> {b} visits an invalid house"),
            )?;
            routes += 1;
        }
    }
    Ok(format!(
        "10000 sequences ({applied} moves applied), {routes} taxi routes replayed"
    ))
}

fn cli_determinism() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_atlas"))
            .args(["table", "--rows", "4", "--format", "json"])
            .output()
            .map_err(|e| e.to_string())
    };
    let first = run()?;
    let second = run()?;
    check(first.status.success(), "table exited nonzero")?;
    check(first.stdout == second.stdout, "outputs differ between runs")?;
    let records: Vec<serde_json::Value> =
        serde_json::from_slice(&first.stdout).map_err(|e| e.to_string())?;
    check(records.len() == 60, format!("{} records", records.len()))?;
    let zs: BTreeSet<u64> = records.iter().map(|r| r["z"].as_u64().unwrap()).collect();
    check(zs.len() == 60, "duplicate cells")?;
    Ok("60 records, byte-identical".into())
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 10] = [
        ("1 formula-oracle equivalence", formula_oracle_equivalence),
        ("2 anchor values", anchor_values),
        ("3 shell ordering", shell_ordering),
        ("4 series ranges", series_ranges),
        ("5 period lengths", period_lengths),
        ("6 family membership", family_membership),
        ("7 labelling counts", labelling_counts),
        ("8 round-trip bijection", round_trip),
        ("9 ladder properties", ladder_properties),
        ("10 CLI determinism", cli_determinism),
    ];
    let mut failed = Vec::new();
    for (name, criterion) in criteria {
        match criterion() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(detail) => {
                println!("FAIL  {name}: {detail}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
