#pragma once

#include <array>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace admiss {

// Conditions are numbered 1..8. Condition 9 is an alias of 5.
constexpr int kConditionCount = 8;

int canonical_condition(int id);  // 9 -> 5; throws InputError outside 1..9
const char* condition_summary(int id);

using Implication = std::pair<int, int>;

// The base edges of the implication diagram.
const std::vector<Implication>& base_implications();

/// Reflexive-transitive closure as a boolean matrix indexed 1..8.
struct ImplicationClosure {
  std::array<std::array<bool, kConditionCount + 1>, kConditionCount + 1> implies{};

  bool contains(int from, int to) const { return implies[from][to]; }
  // Strict pairs (from != to) in the closure, sorted.
  std::vector<Implication> pairs() const;
};

ImplicationClosure diagram_closure();
ImplicationClosure closure_of(const std::vector<Implication>& edges);
// No cycle through distinct conditions.
bool is_acyclic(const ImplicationClosure& closure);

/// One example: conditions it is stated to satisfy and to violate.
struct LedgerExample {
  std::string name;
  std::set<int> satisfied;
  std::set<int> violated;
};

std::vector<LedgerExample> separation_ledger();

struct LedgerReport {
  bool consistent = true;
  std::vector<std::string> conflicts;        // "E: satisfies 6 and violates 7 although 6 => 7"
  std::vector<Implication> refuted;          // non-closure pairs with a witness, sorted
  std::vector<std::string> refuting_example;  // parallel to `refuted`
  std::vector<Implication> unrefuted;        // non-closure pairs without a witness
  bool complete() const { return unrefuted.empty(); }
};

// Saturates each example (satisfied sets closed downward, violated sets
// upward along the closure), reports any example that both satisfies and
// violates a condition, then checks which non-closure pairs are refuted.
LedgerReport ledger_check(const std::vector<LedgerExample>& ledger, const ImplicationClosure& closure);

}  // namespace admiss
