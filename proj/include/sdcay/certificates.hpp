#pragma once

// Explicit signed dominating labelings for Cayley graphs with very large
// connection sets (|S| between n-4 and n-1). Each construction is validated
// before it is returned; a failed validation is surfaced as CertificateError,
// never repaired, since it would witness a false claim about these graphs.

#include <stdexcept>

#include "sdcay/cayley.hpp"
#include "sdcay/domination.hpp"

namespace sdcay {

class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Claimed gamma for |S| in {n-1, n-2, n-3, n-4}: complete graphs give
// 1 (n odd) / 2 (n even); then 2; 3 (n odd) / 4 (n even); 4.
int predicted_high_degree_gamma(int n, int connection_size);

// Builds a signed dominating labeling of Cay(S:G) whose weight equals
// predicted_high_degree_gamma, with the negative set chosen inside S:
//   |S| = n-1: the first floor((n-1)/2) elements of S
//   |S| = n-2: one element of each partner pair {x, a*x} inside S, where a
//              is the excluded involution (so partners stay positive)
//   |S| = n-3: the first (n-3)/2 (n odd) or (n-4)/2 (n even) elements of S
//   |S| = n-4: the first n/2-2 elements of S
// Requires S generating. Throws std::invalid_argument when |S| is outside
// the range and CertificateError when the construction fails to validate.
SignLabeling construct_high_degree_certificate(const CayleySpec& spec);

}  // namespace sdcay
