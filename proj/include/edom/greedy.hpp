#pragma once

#include <string>
#include <vector>

#include "edom/interval_model.hpp"

namespace edom {

// Output of the endpoint sweep.  Step i (1-based) selected attack target
// a[i-1] and defended interval d[i-1]; b[i-1] is the best interval beginning
// left of the previous defense end (-1 for step 1, where it is undefined).
// All entries are indices into `ids`, a copy of the model's id table.
// `anchors` lists the step positions p with d[p-1] == a[p-1], bracketed by
// the sentinels 0 and k+1.
struct GreedyResult {
  int k = 0;
  std::vector<int> a;
  std::vector<int> d;
  std::vector<int> b;
  std::vector<int> anchors;
  std::vector<std::string> ids;

  std::vector<std::string> a_ids() const;
  std::vector<std::string> d_ids() const;
};

// One left-to-right sweep over the canonical model:
//   step 1: a = d = interval with the smallest end;
//   step i+1: a minimizes end among intervals beginning after d's end,
//             b maximizes end among intervals beginning before it,
//             d = a if a ends after b, else b;
// and stops when no interval begins after the last defense end.  O(n) given
// the canonical coordinates.  Throws on non-canonical input.
GreedyResult compute_sequences(const IntervalModel& model);

// k of the sweep; equals the eternal domination number (all-guards games)
// and the clique-connected cover number of the intersection graph.
int eternal_domination_number(const IntervalModel& model);

// [v(a_1), ..., v(a_k)]: attacking these in order defeats any defender with
// fewer than k guards.
std::vector<std::string> attacker_sequence(const GreedyResult& result);

}  // namespace edom
