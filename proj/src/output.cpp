#include "fubini/output.hpp"

namespace fubini {

nlohmann::ordered_json value_json(const FamilyId& family, const ExactRational& v) {
  nlohmann::ordered_json j;
  if (family.integer_valued()) {
    j["int"] = v.to_int().str();
  } else {
    j["num"] = v.numerator().str();
    j["den"] = v.denominator().str();
  }
  return j;
}

std::string value_plain(const FamilyId& family, const ExactRational& v) {
  if (family.integer_valued()) return v.to_int().str();
  return v.str();
}

}  // namespace fubini
