use atn::cohomology::cohomology_group;
use atn::FiniteGroup;

fn main() -> atn::Result<()> {
    for spec in ["Z2", "Z3", "Z4", "Z2xZ2"] {
        let g = FiniteGroup::from_spec(spec)?;
        let row: Vec<String> = (1..=4)
            .map(|n| {
                let inv = cohomology_group(&g, n).map(|v| v.iter().map(|d| d.to_string()).collect::<Vec<_>>());
                match inv {
                    Ok(v) if v.is_empty() => format!("H^{n}=0"),
                    Ok(v) => format!("H^{n}=[{}]", v.join(",")),
                    Err(e) => format!("H^{n}: {e}"),
                }
            })
            .collect();
        println!("{spec:>6}  {}", row.join("  "));
    }
    Ok(())
}
