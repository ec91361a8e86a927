use serde::Serialize;

use nikulin_core::lattice::IntegerLattice;

use crate::CheckError;

#[derive(Serialize)]
struct LatticeJson<'a> {
    labels: &'a [String],
    gram: Vec<Vec<String>>,
    even: bool,
    disc_order: String,
}

/// `{labels, gram, even, disc_order}` with integers as decimal strings.
pub fn lattice_json(l: &IntegerLattice) -> Result<Vec<u8>, CheckError> {
    let doc = LatticeJson {
        labels: l.labels(),
        gram: l.gram().to_rows().iter().map(|r| r.iter().map(i64::to_string).collect()).collect(),
        even: l.is_even(),
        disc_order: l.discriminant_group()?.group_order.to_string(),
    };
    let mut out = serde_json::to_vec_pretty(&doc)?;
    out.push(b'\n');
    Ok(out)
}
