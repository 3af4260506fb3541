#ifndef ENDRANK_JSON_IO_HPP
#define ENDRANK_JSON_IO_HPP

#include "json.hpp"

#include "endrank/endo.hpp"
#include "endrank/ranks.hpp"
#include "endrank/semigroup.hpp"

namespace endrank {

// {"n", "size", "ranks", "exact", "certificates", "methods",
//  "budget_exhausted"}. Ranks that were not requested are null; witness
// arrays hold labels in ascending id order.
nlohmann::ordered_json to_json(RankReport const& report, SemigroupTable const& table);

// Sidecar for an emitted End(B_n) table: one entry per element with its
// id, label, tag and image vector.
nlohmann::ordered_json to_json(EndoMonoid const& monoid);

nlohmann::ordered_json to_json(ConjectureReport const& report,
                       SemigroupTable const&   table);

}  // namespace endrank

#endif  // ENDRANK_JSON_IO_HPP
