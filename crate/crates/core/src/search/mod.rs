//! The order-9 MTN census, the small-order maxnIL census, and embedding
//! certification.

mod census;
mod certify;
mod context;
mod mtn;
mod reduction;

pub use census::{
    census_maxnil, find_all_mtn_order9, Candidate, CensusReport, CENSUS_MAX_ORDER, CENSUS_MIN_ORDER,
};
pub use certify::{certify_order, CertificationEntry, CertificationReport, Outcome};
pub use context::{
    classify_maxnil, DataSet, SearchContext, DEFAULT_SIZE_FLOOR, MAXNIL_ORDER9_COUNT,
    MAXNIL_ORDER9_FILE, SEARCH_ORDER,
};
pub use mtn::{mtn_search, mtn_search_counted, passes_guard, SearchOutcome};
pub use reduction::{
    extract_obstruction_set_s, find_size19_counterexample, verify_size19_exclusion,
    ObstructionSetS, Size19Counterexample,
};
