#pragma once

#include <string>

#include "json.hpp"

#include "fubini/exact.hpp"
#include "fubini/family.hpp"

namespace fubini {

/// Canonical JSON value object: {"int":"<decimal>"} for integer-valued
/// families, {"num":"<decimal>","den":"<decimal>"} otherwise. Decimal
/// strings are exact and arbitrary length; rationals are reduced with a
/// positive denominator.
nlohmann::ordered_json value_json(const FamilyId& family, const ExactRational& v);

/// The matching plain/csv cell: a decimal integer or "p/q".
std::string value_plain(const FamilyId& family, const ExactRational& v);

}  // namespace fubini
