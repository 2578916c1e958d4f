pub fn classify() {}
pub fn classify_with_options() {}
pub struct ClassifyOptions;
pub struct DehnVerdict;
pub struct VerdictStatus;
