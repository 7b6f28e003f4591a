#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "edom/errors.hpp"
#include "edom/graph.hpp"

namespace edom {

struct Interval {
  std::string id;
  double begin = 0;
  double end = 0;
};

// Ordered family of named intervals.  `canonical` is true when the 2n
// endpoints are exactly the integers 1..2n (all distinct); the sweep
// algorithms require canonical models.
struct IntervalModel {
  std::vector<Interval> intervals;
  bool canonical = false;

  int size() const { return static_cast<int>(intervals.size()); }

  // -1 when the id is absent.
  int index_of(const std::string& id) const;
};

enum class ModelKind { General, Proper };

// Model file: the first non-comment line holds the interval count, then one
// "<id> <begin> <end>" line per interval.  `#` starts a comment.
IntervalModel parse_model(const std::string& text);

// Text form accepted by parse_model.
std::string format_model(const IntervalModel& model);

// Remaps endpoints to the integers 1..2n, keeping interval order and ids.
// Input intervals intersect under closed semantics, so endpoint ties are
// broken begins-first (then by id); the intersection graph is unchanged.
// Idempotent.
IntervalModel normalize(const IntervalModel& model);

// Vertices are the interval ids; u,v adjacent iff the (canonical) intervals
// overlap.  Requires a canonical model.
Graph intersection_graph(const IntervalModel& model);

// True iff no interval contains another.  Requires a canonical model.
bool is_proper(const IntervalModel& model);

// Deterministic in (n, seed, kind); the result is canonical, and proper when
// kind == Proper.  Ids are "v1".."vn".
IntervalModel random_model(int n, std::uint64_t seed, ModelKind kind);

// True iff intersection_graph(model) equals `graph` edge-for-edge.  Throws
// when the id sets differ.
bool validate_model_graph(const IntervalModel& model, const Graph& graph);

}  // namespace edom
