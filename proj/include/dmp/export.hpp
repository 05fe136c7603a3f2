#pragma once

#include <json.hpp>

#include "dmp/factored_rational.hpp"
#include "dmp/quasipoly.hpp"
#include "dmp/recurrence.hpp"

namespace dmp {

/// {"numerator": ["c0", "c1", ...], "denominator": [[k, e], ...]} with exact
/// coefficient strings and factors by ascending k.
nlohmann::ordered_json to_json(const FactoredRational& a);
FactoredRational factored_rational_from_json(const nlohmann::ordered_json& doc);

/// {"period", "degree", "validity_threshold", "exceptional_indices",
///  "components": [{"modulus", "power", "values"}], "residues"}. The dense
/// per-residue table "residues" (one coefficient array per residue, constant
/// term first) is included only when the period is at most residue_limit.
nlohmann::ordered_json to_json(const QuasiPolynomial& qp, std::uint64_t residue_limit = 5040);

/// {"method": ..., "values": ["1", "1", "2", ...]}.
nlohmann::ordered_json to_json(const TermTable& table);

}  // namespace dmp
