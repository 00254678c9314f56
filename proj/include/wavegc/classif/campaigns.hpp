#pragma once

#include <cstdint>

#include "wavegc/classif/catalog.hpp"
#include "wavegc/classif/report.hpp"
#include "wavegc/detsys/detsys.hpp"

namespace wavegc {

struct CampaignOptions {
  std::uint64_t seed = 20240601;
  int samples = 3;  // parameter samples per catalog case
  int threads = 1;
  AnsatzBasis basis = AnsatzBasis::standard();
};

// Symmetry residuals, closure and within-ansatz dimension of one catalog case.
CaseRecord verify_case(const ClassificationCase& c, const CampaignOptions& o = {});

// A copy of c with the sign of one generator component flipped.
ClassificationCase corrupted(const ClassificationCase& c);

// Every catalog entry whose list is in `lists` (all when empty), plus the catalog-level scans.
VerificationReport verify_catalog(const CampaignOptions& o = {}, const std::vector<std::string>& lists = {});

VerificationReport verify_determining_system();
VerificationReport verify_kernel();
VerificationReport verify_equivalence_algebra(const CampaignOptions& o = {});
VerificationReport verify_megaideals();
VerificationReport verify_equivalence_group(const CampaignOptions& o = {});
VerificationReport verify_adjoint_actions();
VerificationReport verify_reductions();
VerificationReport verify_potential_link();
VerificationReport verify_subalgebra_lists(const CampaignOptions& o = {});

struct PropertyCounts {
  int jacobi = 200;
  int prolongation = 100;
  int functoriality = 50;
  int commutation = 200;
};

VerificationReport verify_properties(const CampaignOptions& o = {}, const PropertyCounts& n = {});

}  // namespace wavegc
