#pragma once

#include "zgon/embedding.hpp"
#include "zgon/gon.hpp"
#include "zgon/oracle/field.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace zgon {

struct VerifyConfig {
    GonConfig gon;
    long long window = 4;
    oracle::FieldKind field = oracle::FieldKind::kRational;
    std::uint64_t seed = 1;
    Embedding::Squash squash = Embedding::Squash::kHarmonic;
    long long oracle_pair_samples = 2000;   // Hom agreement cross-checks
    long long proj_pair_samples = 1000;     // projective factoring cross-checks
    long long triple_samples = 400;         // composite vanishing cross-checks
    long long uniserial_samples = 200;
    long long exactness_pair_cap = 4000;    // Setup pairs; <=0 means exhaustive
};

struct SuiteResult {
    std::string name;
    bool pass = true;
    long long checked = 0;
    std::vector<std::string> counterexamples;  // first few, verbatim
};

// Individual invariant suites. Each is pure and deterministic for a fixed
// config; counterexamples are capped but counted in full.
SuiteResult suite_hom_dimensions(const VerifyConfig&);      // dims in range, K^2 only at self
SuiteResult suite_hammock_partition(const VerifyConfig&);   // disjoint union covers Hom != 0
SuiteResult suite_left_intersect_agreement(const VerifyConfig&);
SuiteResult suite_hom_oracle_agreement(const VerifyConfig&);
SuiteResult suite_proj_factor_agreement(const VerifyConfig&);
SuiteResult suite_exactness(const VerifyConfig&);           // AR sequences + middle terms
SuiteResult suite_mono_epi(const VerifyConfig&);            // covers, envelopes, irreducibles
SuiteResult suite_uniseriality(const VerifyConfig&);
SuiteResult suite_composite_vanishing(const VerifyConfig&);
SuiteResult suite_serre_duality(const VerifyConfig&);
SuiteResult suite_functor_identities(const VerifyConfig&);  // translate, round trips, stabilisation
SuiteResult suite_spherical_thick(const VerifyConfig&);     // m = 1 only; skips otherwise
SuiteResult suite_component_census(const VerifyConfig&);
SuiteResult suite_kupisch_axioms(const VerifyConfig&);
SuiteResult suite_field_independence(const VerifyConfig&);
SuiteResult suite_embedding_independence(const VerifyConfig&);

std::vector<SuiteResult> run_all_suites(const VerifyConfig&);

std::string suites_to_text(const std::vector<SuiteResult>&);
std::string suites_to_json(const VerifyConfig&, const std::vector<SuiteResult>&);
bool all_passed(const std::vector<SuiteResult>&);

}  // namespace zgon
