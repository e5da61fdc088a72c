//! Reading group and fusion inputs, and the on-disk fusion cache.

use std::fs;
use std::path::{Path, PathBuf};

use log::{info, warn};
use sha2::{Digest, Sha256};

use crate::catalog;
use crate::error::{Error, Result};
use crate::fusion::{FusionSpec, FusionSystem, FusionTables, SeedSpec};
use crate::group::{Caps, FiniteGroup, GroupSpec, Subgroup};

/// Inline JSON, a file path, or a shorthand name.
pub(crate) fn group_spec(arg: &str) -> Result<GroupSpec> {
    let arg = arg.trim();
    if arg.starts_with('{') {
        return GroupSpec::from_json(arg);
    }
    if Path::new(arg).is_file() {
        return GroupSpec::from_json(&fs::read_to_string(arg)?);
    }
    catalog::shorthand(arg)
}

/// Inline JSON, a file path, or `GROUP@p` for the fusion system of `GROUP` at `p`.
pub(crate) fn fusion_spec(arg: &str, seed_file: Option<&Path>) -> Result<FusionSpec> {
    let arg = arg.trim();
    let mut spec = if arg.starts_with('{') {
        FusionSpec::from_json(arg)?
    } else if Path::new(arg).is_file() {
        FusionSpec::from_json(&fs::read_to_string(arg)?)?
    } else if let Some((g, p)) = arg.rsplit_once('@') {
        let p = p
            .parse()
            .map_err(|_| Error::Parse(format!("bad prime after '@' in {arg:?}")))?;
        FusionSpec::GroupInduced { ambient: group_spec(g)?, p }
    } else {
        return Err(Error::Parse(format!(
            "{arg:?} is not a fusion spec file, inline JSON, or GROUP@p"
        )));
    };
    if let Some(path) = seed_file {
        match &mut spec {
            FusionSpec::Generated { seeds, .. } => seeds.extend(read_seeds(path)?),
            _ => {
                return Err(Error::InvalidInput(
                    "--seed-file only applies to generated fusion systems".into(),
                ))
            }
        }
    }
    Ok(spec)
}

pub(crate) fn read_seeds(path: &Path) -> Result<Vec<SeedSpec>> {
    Ok(serde_json::from_str(&fs::read_to_string(path)?)?)
}

/// A sorted member list such as `[0,3,7]`.
pub(crate) fn subgroup(arg: &str, s: &FiniteGroup) -> Result<Subgroup> {
    let members: Vec<u32> = serde_json::from_str(arg.trim())?;
    Subgroup::new(s, members)
}

pub(crate) fn cache_key(spec: &FusionSpec, caps: &Caps) -> String {
    let mut h = Sha256::new();
    h.update(spec.to_json().as_bytes());
    h.update(
        format!(
            "\nmax_order={};max_subgroup_enumeration={};max_b3r_rank={}",
            caps.max_order, caps.max_subgroup_enumeration, caps.max_b3r_rank
        )
        .as_bytes(),
    );
    hex::encode(h.finalize())
}

/// Builds a fusion system, going through the cache directory when one is set.
pub(crate) fn load_fusion(spec: &FusionSpec, caps: &Caps, cache: Option<&Path>) -> Result<FusionSystem> {
    let Some(dir) = cache else {
        return spec.build(caps);
    };
    let path: PathBuf = dir.join(format!("{}.json", cache_key(spec, caps)));
    if path.is_file() {
        let text = fs::read_to_string(&path)?;
        match serde_json::from_str::<FusionTables>(&text) {
            Ok(t) => {
                info!("cache hit: {}", path.display());
                return FusionSystem::from_tables(t, caps);
            }
            Err(e) => warn!("ignoring unreadable cache entry {}: {e}", path.display()),
        }
    }
    let f = spec.build(caps)?;
    fs::create_dir_all(dir)?;
    fs::write(&path, serde_json::to_string(&f.to_tables()?)?)?;
    info!("cached fusion tables at {}", path.display());
    Ok(f)
}
