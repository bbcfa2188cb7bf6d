use fibsum::cli::{run, EXIT_CONFIG, EXIT_FAIL, EXIT_OK, EXIT_USAGE};

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("fibsum").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn field<'a>(text: &'a str, key: &str) -> &'a str {
    text.lines()
        .find_map(|l| l.strip_prefix(&format!("{key}:")))
        .map(str::trim)
        .unwrap_or_else(|| panic!("no {key} in {text}"))
}

#[test]
fn catalog_listing() {
    let (code, out, _) = call(&["catalog", "J"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.trim_end().ends_with("6 entries"), "{out}");
    for id in ["J1", "J1c", "J2", "J2c", "J3", "J4"] {
        assert!(out.contains(&format!("id:          {id}\n")), "{id}");
    }
    let (_, out, _) = call(&["catalog"]);
    assert!(out.trim_end().ends_with("58 entries"));
    let (code, out, _) = call(&["catalog", "ZZ"]);
    assert_eq!((code, out.trim()), (EXIT_OK, "0 entries"));
}

#[test]
fn eval_reports() {
    let (code, out, _) = call(&["eval", "A3", "--m", "1", "--n", "1", "--q", "3", "--terms", "64"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(field(&out, "closed form"), "143/960");
    assert_eq!(field(&out, "closed ~"), "0.1489583333333333333333333333333333333333");
    let (code, out, _) = call(&["eval", "A1", "--m", "1", "--n", "1", "--q", "1", "--terms", "64"]);
    assert_eq!(code, EXIT_OK);
    assert!(field(&out, "closed form").contains("sqrt5"));
    let (_, out, _) = call(&["eval", "A1", "--m", "1", "--n", "1", "--q", "1", "--terms", "10", "--digits", "5"]);
    assert_eq!(field(&out, "closed ~"), "0.61803");
    let (code, out, _) = call(&["eval", "N3L", "--terms", "5"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(field(&out, "closed form"), "1/829440");
}

#[test]
fn eval_errors() {
    let (code, _, err) = call(&["eval", "A3", "--m", "2", "--n", "1", "--q", "1", "--terms", "64"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("positive odd integers"), "{err}");
    let (code, _, err) = call(&["eval", "Q7", "--m", "1", "--n", "1", "--q", "1"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("unknown catalog entry"));
    assert_eq!(call(&["eval", "A3", "--m", "1"]).0, EXIT_USAGE);
    assert_eq!(call(&["eval", "A3", "--m", "1", "--n", "1", "--q", "1", "--digits", "0"]).0, EXIT_USAGE);
    assert_eq!(call(&["eval", "A3", "--m", "x", "--n", "1", "--q", "1"]).0, EXIT_USAGE);
    assert_eq!(call(&[]).0, EXIT_USAGE);
    assert_eq!(call(&["--help"]).0, EXIT_OK);
}

#[test]
fn verify_identities_is_deterministic() {
    let a = call(&["verify", "identities", "--seed", "7"]);
    let b = call(&["verify", "identities", "--seed", "7"]);
    assert_eq!(a, b);
    assert_eq!(a.0, EXIT_OK);
    let lines: Vec<_> = a.1.lines().collect();
    assert_eq!(lines.len(), 14);
    let last: serde_json::Value = serde_json::from_str(lines[13]).unwrap();
    assert_eq!(last["summary"]["total"]["pass"], 13);
    assert!(last["summary"].get("elapsed_ms").is_none());
}

#[test]
fn verify_with_config() {
    let dir = std::env::temp_dir().join(format!("fibsum-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("suite.cfg");
    let report = dir.join("report.jsonl");
    std::fs::write(&cfg, format!("# only J\nfamilies = J\nmax_m = 2\noutput = {}\n", report.display())).unwrap();
    let (code, out, _) = call(&["verify", "infinite", "--config", cfg.to_str().unwrap(), "--timing"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.is_empty());
    let text = std::fs::read_to_string(&report).unwrap();
    let mut ids: Vec<String> = Vec::new();
    for line in text.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        if let Some(id) = v["entry_id"].as_str() {
            assert_eq!(v["status"], "pass", "{line}");
            if !ids.iter().any(|i| i == id) {
                ids.push(id.to_string());
            }
        } else {
            assert!(v["summary"]["elapsed_ms"].is_u64());
            assert!(v["summary"]["families"]["J"]["pass"].as_u64().unwrap() > 0);
        }
    }
    assert_eq!(ids, ["J1", "J1c", "J2", "J2c", "J3", "J4"]);

    std::fs::write(&cfg, "max_q = -1\n").unwrap();
    let (code, _, err) = call(&["verify", "all", "--config", cfg.to_str().unwrap()]);
    assert_eq!(code, EXIT_CONFIG);
    assert!(err.contains("line 1") && err.contains("max_q"), "{err}");
    let (code, _, _) = call(&["verify", "all", "--config", dir.join("missing.cfg").to_str().unwrap()]);
    assert_eq!(code, EXIT_CONFIG);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn verify_examples_shows_both_sides() {
    let (code, out, _) = call(&["verify", "examples"]);
    let rows: Vec<serde_json::Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows.len(), 24);
    let fails: Vec<_> = rows.iter().filter(|r| r["status"] == "fail").collect();
    assert_eq!(code, if fails.is_empty() { EXIT_OK } else { EXIT_FAIL });
    for f in fails {
        assert_ne!(f["lhs"], f["rhs"]);
    }
}
