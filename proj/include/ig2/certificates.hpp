// certificates.hpp -- Witt-index arithmetic and the aggregated certificate:
// every machine-checkable identity bundled into one deterministic report
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ig2/report.hpp"

namespace ig2 {

// dim = 2n+1; j_sequence = (j_0, ..., j_h) with j_h = n.
struct WittProfile {
  int dim = 0;
  std::vector<int> j_sequence;

  // i_k = j_k - j_{k-1} for k >= 1
  std::vector<int> relative_indices() const;
};

struct WittValidation {
  bool valid = false;
  std::vector<std::string> violations;  // every violated clause, independently
};

WittValidation validate_witt_profile(const WittProfile& p);

struct Hypotheses {
  bool deg_is_four_z = false;  // deg CH(X_2) = 4Z
  bool i2_is_one = false;      // relative index i_2 = 1
  int n = 0;                   // n >= 3
};

// A cited implication recorded, not re-proved here.
struct DerivedFact {
  std::string name;
  std::string statement;
  std::string provenance;  // which cited result supplies the step
};

// Under both hypotheses: j_0 = 0, j_1 = 1, j_2 = 2, Witt index 2 over the
// function field, and the 2H + anisotropic decomposition.  Empty without the
// hypotheses.
std::vector<DerivedFact> propagate_hypotheses(const Hypotheses& h);

struct CertificateOptions {
  std::uint64_t seed = 0;
  std::optional<std::string> cache_dir;
  // Testing hook: corrupts one structure constant before checking, which must
  // flip the verdict (the (mult) item fails first).
  bool inject_fault = false;
};

CertificateReport incompressibility_certificate(int n, const CertificateOptions& opts = {});

// Single-topic bundles behind `check <which>`; which is one of
// mult | lemma | motive | pairing | generation.  The certificate is the
// conjunction of these plus the bookkeeping-only items.
CertificateReport check_bundle(const std::string& which, int n, const CertificateOptions& opts = {});

}  // namespace ig2
