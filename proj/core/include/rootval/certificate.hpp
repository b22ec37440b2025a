#pragma once

#include <string>

namespace rootval {

// A dimension computed on a truncated local-ring quotient, together with the
// truncation degree at which it provably stabilized. Uncertified values are
// never returned by the library.
struct LocalQuotientCertificate {
  enum class Method {
    JacobianQuotient,
    TjurinaQuotient,
    NormalizationCodim,
    SemigroupGaps,
  };

  long value = 0;
  long stabilized_at = 0;
  Method method = Method::SemigroupGaps;
};

inline std::string method_name(LocalQuotientCertificate::Method m) {
  switch (m) {
    case LocalQuotientCertificate::Method::JacobianQuotient:
      return "jacobian-quotient";
    case LocalQuotientCertificate::Method::TjurinaQuotient:
      return "tjurina-quotient";
    case LocalQuotientCertificate::Method::NormalizationCodim:
      return "normalization-codim";
    case LocalQuotientCertificate::Method::SemigroupGaps:
      return "semigroup-gaps";
  }
  return "unknown";
}

}  // namespace rootval
