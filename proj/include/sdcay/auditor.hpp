#pragma once

// Claim auditor: re-derives each registered claim about gamma of Cayley
// graphs by exhaustive sweep over the complete catalog (orders 2..12) and
// reports a verdict with machine-checkable witnesses or counterexamples.
// Computation is ground truth; a claim is a hypothesis to test.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sdcay/cayley.hpp"
#include "sdcay/domination.hpp"
#include "sdcay/graph.hpp"
#include "sdcay/group.hpp"

namespace sdcay {

inline constexpr const char* kVersion = "1.0.0";

// The claim registry. Value claims assert gamma from |S|; LEM claims assert
// structure of the construction; CLASS claims tie gamma back to the group;
// CUBIC claims count isomorphism classes of cubic Cayley graphs.
enum class ClaimId {
  ThmN1,                      // gamma = 1  iff  S = G\{e} and n odd
  ThmN2Value,                 // |S| = n-2  =>  gamma = 2
  ThmN3Value,                 // |S| = n-3  =>  gamma = 3 or 4 by parity of n
  LemK3,                      // S = G\{e,a,b,c}: n even, triple is K3/P3/empty
  LemCosetMultipartite,       // S = G\H: complete [G:H]-partite, parts = cosets
  ThmN4Value,                 // |S| = n-4  =>  gamma = 4
  RemarkZ2,                   // gamma = n  iff  G = Z2
  ClassNMinus2,               // gamma = n-2 forces G in a fixed list of 8
  ClassS2NMinus4,             // |S| = 2: gamma = n-4  iff  G in a list of 5
  ClassS3NMinus4,             // |S| = 3: gamma = n-4  iff  G in a list of 8
  CubicClasses8,              // cubic Cayley graphs of order 8: 2 classes
  CubicClasses10,             // order 10: 2 classes
  CubicClasses12Restricted,   // order 12 over D12/Z12/Z2xZ6: 3 classes
  Fig4A4,                     // Cay({a,b,b2}:A4) is cubic, n = 12, gamma = 8
};

const std::vector<ClaimId>& all_claims();
const char* claim_id_name(ClaimId id);
std::optional<ClaimId> claim_id_from_name(const std::string& name);

enum class ClaimStatus { Confirmed, Refuted, Partial };
const char* claim_status_name(ClaimStatus s);

// A single (group, connection set) instance with its solved gamma and an
// optimal labeling; connection set is stored by element name so it can be
// rebuilt and re-checked independently.
struct AuditInstance {
  std::string group;
  std::vector<std::string> connection_set;
  int gamma = 0;
  std::vector<int> labeling;
  std::string note;
};

struct ClaimReport {
  ClaimId claim = ClaimId::ThmN1;
  ClaimStatus status = ClaimStatus::Partial;
  int scope = 0;  // catalog order bound the sweep used
  long instances_checked = 0;
  std::vector<AuditInstance> witnesses;
  std::vector<AuditInstance> counterexamples;
  std::string notes;
};

// Runs one claim over the catalog up to max_order (2..12). Every stored
// witness and counterexample is re-validated from its names before the
// report is returned. Deterministic: fixed iteration orders throughout.
ClaimReport audit_claim(ClaimId claim, int max_order);

struct CubicClassEntry {
  Graph representative;  // first graph encountered in the class
  int gamma = 0;
  // (catalog name, connection set element names) in sweep order
  std::vector<std::pair<std::string, std::vector<std::string>>> realizations;
};

// All inverse-closed generating S with |S| = 3 over the groups of the given
// even order (optionally restricted by catalog names), bucketed into graph
// isomorphism classes. Odd orders yield no cubic Cayley graph and return an
// empty list.
std::vector<CubicClassEntry> enumerate_cubic_cayley_classes(
    int order, const std::vector<std::string>& group_filter = {});

struct ReportDocument {
  std::string version;
  int max_order = 0;
  std::vector<ClaimReport> claims;
};

ReportDocument full_report(int max_order);

// Fixed-order JSON; two runs over equal inputs produce identical bytes.
std::string report_to_json(const ReportDocument& doc);

bool all_confirmed(const ReportDocument& doc);

}  // namespace sdcay
