pub fn probe() -> usize { facegroup_core::probe() }
