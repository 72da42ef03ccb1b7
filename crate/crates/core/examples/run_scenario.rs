use kronbrist::field::FieldSpec;
use kronbrist::harness::{run_scenario, Scenario, ScenarioConfig};

fn main() {
    let cfg = ScenarioConfig::new(Scenario::OptTauB1).with_field(FieldSpec::Prime(3));
    let report = run_scenario(&cfg).unwrap();
    print!("{}", report.to_table());
    println!("{} checks, json is {} bytes", report.checks.len(), report.to_json().len());
}
