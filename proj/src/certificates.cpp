#include "sdcay/certificates.hpp"

#include <algorithm>
#include <string>

namespace sdcay {

int predicted_high_degree_gamma(int n, int connection_size) {
  int missing = n - connection_size;
  switch (missing) {
    case 1: return n % 2 == 1 ? 1 : 2;
    case 2: return 2;
    case 3: return n % 2 == 1 ? 3 : 4;
    case 4: return 4;
    default:
      throw std::invalid_argument(
          "predicted_high_degree_gamma: |S| must be n-1..n-4");
  }
}

SignLabeling construct_high_degree_certificate(const CayleySpec& spec) {
  validate_cayley_spec(spec);
  const FiniteGroup& g = spec.group;
  const std::vector<int>& s = spec.connection_set;
  int n = g.order;
  int missing = n - static_cast<int>(s.size());
  if (missing < 1 || missing > 4)
    throw std::invalid_argument("certificate: |S| must be n-1..n-4");
  if (!is_generating(g, s))
    throw std::invalid_argument("certificate: S must generate the group");

  int want = predicted_high_degree_gamma(n, static_cast<int>(s.size()));
  int neg_count = (n - want) / 2;

  std::vector<int> negatives;
  if (missing == 2) {
    // G = S + {e, a} with a the excluded involution; the complement of the
    // Cayley graph is the perfect matching x -- a*x. Take the least element
    // of each matched pair inside S.
    int a = -1;
    std::vector<char> in_s(n, 0);
    for (int x : s) in_s[x] = 1;
    for (int x = 0; x < n; ++x)
      if (x != g.identity && !in_s[x]) a = x;
    for (int x : s) {
      int partner = g.mul(a, x);
      if (x < partner) negatives.push_back(x);
    }
  } else {
    negatives.assign(s.begin(), s.begin() + neg_count);
  }

  if (static_cast<int>(negatives.size()) != neg_count)
    throw CertificateError("certificate: negative set has wrong size for " +
                           g.catalog_name);
  SignLabeling lab = SignLabeling::from_negatives(n, negatives);
  Graph cay = build_cayley(spec);
  if (!is_signed_dominating(cay, lab))
    throw CertificateError("certificate labeling failed validation on " +
                           g.catalog_name);
  if (lab.weight() != want)
    throw CertificateError("certificate weight mismatch on " + g.catalog_name);
  return lab;
}

}  // namespace sdcay
