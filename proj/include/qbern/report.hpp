#pragma once

// JSON and CSV renderings. Every number is written as its exact rational
// string plus a 17-significant-digit decimal.

#include "qbern/qapprox.hpp"
#include "qbern/qbernoulli.hpp"
#include "qbern/qeulermac.hpp"

#include <json.hpp>

#include <string>

namespace qbern {

using json = nlohmann::ordered_json;

/// {"exact": "...", "decimal": "..."}
json to_json(const Scalar& x);
json to_json(const QContext& ctx);
json to_json(const BernoulliTable& table);
json to_json(const EmReport& report);
json to_json(const ApproxReport& report);

/// {"context": ..., "command": ..., "results": ...}
json envelope(const QContext& ctx, std::string_view command, json results);

/// n, beta_exact, beta_decimal, then c<k>_exact, c<k>_decimal per power t^k.
std::string table_csv(const BernoulliTable& table);

/// x, f, approx, error decimals followed by their exact strings.
std::string samples_csv(const ApproxReport& report);

}  // namespace qbern
