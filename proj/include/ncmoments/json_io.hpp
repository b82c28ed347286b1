#pragma once

#include "json.hpp"

#include <string>
#include <vector>

#include "ncmoments/moments.hpp"
#include "ncmoments/partition.hpp"
#include "ncmoments/profile.hpp"
#include "ncmoments/randmat.hpp"
#include "ncmoments/rational.hpp"
#include "ncmoments/trees.hpp"

namespace ncmoments {

/// All JSON emitted by the library preserves insertion order, so a fixed
/// field order in the writers makes the output byte-stable run to run.
using Json = nlohmann::ordered_json;

/// {"num": "9", "den": "8"} with decimal-string values (numbers of this size
/// do not fit in JSON numerics).
Json rational_to_json(const Rational& q);

/// Accepts the {"num", "den"} object form, a string "a/b" or "a", or an
/// integer JSON number.
Rational rational_from_json(const Json& j);

/// [[l, r], ...] with 1-based legs, blocks in left-leg order.
Json partition_to_json(const PairPartition& p);
PairPartition partition_from_json(const Json& j);

/// Nested {"children": [...]}; labeled trees carry a "label" field first.
Json tree_to_json(const OrderedTree& t);
Json labeled_tree_to_json(const LabeledOrderedTree& t);
OrderedTree tree_from_json(const Json& j);
LabeledOrderedTree labeled_tree_from_json(const Json& j);

/// {"r": 2, "widths": ["1/2", "1/2"], "v": [["0", "1"], ["0", "0"]]}.
/// On input "widths" may be omitted for the uniform split.
Json profile_to_json(const VarianceProfile& p);
VarianceProfile profile_from_json(const Json& j);

/// {"value": ..., "contributions": {"[[1,2],[3,4]]": ..., ...}} — the
/// contribution map is keyed by the serialized pairing, in canonical order.
Json moment_result_to_json(const MomentResult& r);

Json moment_estimate_to_json(const MomentEstimate& e);

Json convergence_rows_to_json(const std::vector<ConvergenceRow>& rows);

/// CSV form of a convergence report, one data line per row under the header
/// n,r,trials,seed,estimate,stderr,exact_num,exact_den,abs_gap.
std::string convergence_rows_to_csv(const std::vector<ConvergenceRow>& rows);

}  // namespace ncmoments
