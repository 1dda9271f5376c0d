use hopflab::catalog::{entry, host_name, Payload, Provenance, ENTRIES, GH, H, ONE};
use hopflab::linalg::FieldSpec;

#[test]
fn every_entry_verifies_over_several_fields() {
    let fields = [FieldSpec::Rationals, FieldSpec::prime(5).unwrap(), FieldSpec::prime(7).unwrap()];
    for f in fields {
        for info in ENTRIES {
            let ts: Vec<i64> = if info.parametric { (-2..=3).collect() } else { vec![1] };
            for t in ts {
                let e = entry(info.name, f, &f.int(t)).unwrap();
                assert_eq!(e.payload.kind(), info.kind);
                assert_eq!(e.params.len(), usize::from(info.parametric));
                let rep = e.payload.verify();
                assert!(rep.passed(), "{} t={t} over {f}: {:?}", info.name, rep.failures().collect::<Vec<_>>());
            }
        }
    }
}

#[test]
fn tabulated_values() {
    let f = FieldSpec::Rationals;
    let Payload::Cqt(r1) = entry("r_t", f, &f.int(1)).unwrap().payload else { panic!() };
    assert_eq!(r1.r().get(H, GH), &f.int(-1));
    let Payload::Cocycle(s2) = entry("sigma_t", f, &f.int(2)).unwrap().payload else { panic!() };
    assert_eq!(s2.sigma().get(GH, GH), &f.int(-1));
    assert_eq!(s2.sigma().get(H, H), &f.int(1));
    let Payload::DualCocycle(t0) = entry("theta_t", f, &f.zero()).unwrap().payload else { panic!() };
    let nonzero: Vec<_> = (0..4).flat_map(|i| (0..4).map(move |j| (i, j))).filter(|&(i, j)| !t0.theta().get(i, j).is_zero()).collect();
    assert_eq!(nonzero, vec![(ONE, ONE)]);
}

#[test]
fn names_provenance_and_hosts() {
    let f = FieldSpec::Rationals;
    assert!(entry("nope", f, &f.one()).is_err());
    let e = entry("h4", f, &f.one()).unwrap();
    assert_eq!(e.provenance, Provenance::Published);
    let Payload::Hopf(h) = e.payload else { panic!() };
    assert_eq!(host_name(&h), Some("h4"));
    assert_eq!(serde_json::to_value(Provenance::Derived).unwrap(), "derived");
    let mut names: Vec<_> = ENTRIES.iter().map(|e| e.name).collect();
    names.sort();
    names.dedup();
    assert_eq!(names.len(), ENTRIES.len());
}
