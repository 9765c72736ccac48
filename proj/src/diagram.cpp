#include "admiss/diagram.hpp"

#include <algorithm>

#include "admiss/error.hpp"

namespace admiss {

int canonical_condition(int id) {
  if (id == 9) return 5;
  if (id < 1 || id > kConditionCount) throw InputError("condition ids run from 1 to 9, got " + std::to_string(id));
  return id;
}

const char* condition_summary(int id) {
  switch (canonical_condition(id)) {
    case 1: return "G is M-admissible";
    case 2: return "an M-adequate G-extension L/M with L defined over K";
    case 3: return "an M-adequate G-extension L = L0 M with Gal(L0/K) = G";
    case 4: return "L/M maximal in D0 (x) M for a K-division algebra D0";
    case 5: return "L0 maximal in D0 over K with L0 M maximal in D0 (x) M";
    case 6: return "a K-adequate G-extension L0/K with L0 M M-adequate Galois";
    case 7: return "G is K-admissible and M-admissible";
    case 8: return "a K-adequate extension L0/K with L0 M an M-adequate G-extension";
  }
  return "";
}

const std::vector<Implication>& base_implications() {
  static const std::vector<Implication> edges = {{5, 4}, {5, 6}, {6, 3}, {6, 7}, {6, 8},
                                                 {3, 2}, {8, 2}, {2, 1}, {4, 1}, {7, 1}};
  return edges;
}

std::vector<Implication> ImplicationClosure::pairs() const {
  std::vector<Implication> out;
  for (int a = 1; a <= kConditionCount; ++a)
    for (int b = 1; b <= kConditionCount; ++b)
      if (a != b && implies[a][b]) out.emplace_back(a, b);
  return out;
}

ImplicationClosure closure_of(const std::vector<Implication>& edges) {
  ImplicationClosure c;
  for (int a = 1; a <= kConditionCount; ++a) c.implies[a][a] = true;
  for (auto [a, b] : edges) c.implies[canonical_condition(a)][canonical_condition(b)] = true;
  for (int k = 1; k <= kConditionCount; ++k)
    for (int a = 1; a <= kConditionCount; ++a)
      for (int b = 1; b <= kConditionCount; ++b)
        if (c.implies[a][k] && c.implies[k][b]) c.implies[a][b] = true;
  return c;
}

ImplicationClosure diagram_closure() { return closure_of(base_implications()); }

bool is_acyclic(const ImplicationClosure& closure) {
  for (int a = 1; a <= kConditionCount; ++a)
    for (int b = a + 1; b <= kConditionCount; ++b)
      if (closure.implies[a][b] && closure.implies[b][a]) return false;
  return true;
}

std::vector<LedgerExample> separation_ledger() {
  return {
      {"(4),(7) without (2)", {4, 7}, {2}},
      {"(8) without (7) or (3)", {8}, {7, 3}},
      {"(3) without (7) or (8)", {3}, {7, 8}},
      {"(3) without (4)", {3}, {4}},
      {"(4) without (7)", {4}, {7}},
      {"(6) without (4)", {6}, {4}},
      {"cyclic group", {1, 2, 3, 4, 5, 6, 7, 8}, {}},
  };
}

LedgerReport ledger_check(const std::vector<LedgerExample>& ledger, const ImplicationClosure& closure) {
  LedgerReport report;
  std::vector<std::pair<std::set<int>, std::set<int>>> saturated;
  for (const auto& ex : ledger) {
    std::set<int> sat, viol;
    for (int s : ex.satisfied)
      for (int b = 1; b <= kConditionCount; ++b)
        if (closure.implies[canonical_condition(s)][b]) sat.insert(b);
    for (int v : ex.violated)
      for (int a = 1; a <= kConditionCount; ++a)
        if (closure.implies[a][canonical_condition(v)]) viol.insert(a);
    for (int c : sat)
      if (viol.count(c)) {
        report.consistent = false;
        // Name an original pair responsible for the clash.
        for (int s : ex.satisfied)
          for (int v : ex.violated)
            if (closure.implies[canonical_condition(s)][c] && closure.implies[c][canonical_condition(v)])
              report.conflicts.push_back(ex.name + ": satisfies " + std::to_string(s) + " and violates " +
                                         std::to_string(v) + " although " + std::to_string(s) + " => " +
                                         std::to_string(v));
      }
    saturated.emplace_back(std::move(sat), std::move(viol));
  }
  std::sort(report.conflicts.begin(), report.conflicts.end());
  report.conflicts.erase(std::unique(report.conflicts.begin(), report.conflicts.end()), report.conflicts.end());

  for (int a = 1; a <= kConditionCount; ++a)
    for (int b = 1; b <= kConditionCount; ++b) {
      if (a == b || closure.implies[a][b]) continue;
      bool found = false;
      for (std::size_t k = 0; k < ledger.size() && !found; ++k)
        if (saturated[k].first.count(a) && saturated[k].second.count(b)) {
          report.refuted.emplace_back(a, b);
          report.refuting_example.push_back(ledger[k].name);
          found = true;
        }
      if (!found) report.unrefuted.emplace_back(a, b);
    }
  return report;
}

}  // namespace admiss
