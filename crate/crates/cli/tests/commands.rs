use sun_bch::wire::Emit;
use sun_bch_cli::{
    cmd_basis, cmd_compose, cmd_verify, error_output, parse_vector, RunConfig, EXIT_DOMAIN,
};

#[test]
fn run_config_validation() {
    assert!(RunConfig::default().validate().is_ok());
    for bad in [
        RunConfig {
            n: 1,
            ..RunConfig::default()
        },
        RunConfig {
            trials: 0,
            ..RunConfig::default()
        },
        RunConfig {
            tol: 0.0,
            ..RunConfig::default()
        },
        RunConfig {
            spectral_cap: f64::NAN,
            ..RunConfig::default()
        },
    ] {
        assert!(bad.validate().is_err(), "{bad:?}");
    }
}

#[test]
fn parse_vector_accepts_json_only() {
    assert_eq!(
        parse_vector("[1, -2.5, 3e-1]").unwrap(),
        vec![1.0, -2.5, 0.3]
    );
    assert!(parse_vector("1,2,3").is_err());
    assert!(parse_vector("[\"a\"]").is_err());
}

#[test]
fn random_vectors_follow_the_seed() {
    let cfg = RunConfig {
        n: 3,
        seed: 9,
        ..RunConfig::default()
    };
    let a = cmd_compose(&cfg, None, None).unwrap();
    let b = cmd_compose(&cfg, None, None).unwrap();
    assert_eq!(a, b);
    let c = cmd_compose(&RunConfig { seed: 10, ..cfg }, None, None).unwrap();
    assert_ne!(a.json["m"], c.json["m"]);
}

#[test]
fn domain_errors_map_to_exit_3() {
    let cfg = RunConfig {
        n: 2,
        ..RunConfig::default()
    };
    let err = cmd_compose(
        &cfg,
        Some(vec![0.0, 0.0, std::f64::consts::PI]),
        Some(vec![0.0; 3]),
    )
    .unwrap_err();
    let out = error_output(&err);
    assert_eq!(out.exit_code, EXIT_DOMAIN);
    assert_eq!(out.json["error"]["reason"], "branch-cut");
}

#[test]
fn verify_report_shape() {
    let cfg = RunConfig {
        n: 3,
        trials: 10,
        seed: 5,
        ..RunConfig::default()
    };
    let out = cmd_verify(&cfg).unwrap();
    assert_eq!(out.exit_code, 0);
    let props = out.json["properties"].as_array().unwrap();
    assert!(props.len() >= 15);
    assert!(props.iter().all(|p| p["pass"] == true));
    assert_eq!(out.render(), cmd_verify(&cfg).unwrap().render());
}

#[test]
fn basis_range() {
    assert!(cmd_basis(8, Emit::F).is_ok());
    assert!(cmd_basis(9, Emit::F).is_err());
}
