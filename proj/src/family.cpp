#include "fubini/family.hpp"

#include <stdexcept>

namespace fubini {

namespace {

void require_m_at_least(const std::string& name, int m, int lo, const char* why) {
  if (m < lo)
    throw std::invalid_argument(name + " requires m >= " + std::to_string(lo) + " (" + why + ")");
}

}  // namespace

FamilyId FamilyId::fubini_restricted(int m) {
  require_m_at_least("fubini_restricted", m, 1, "block sizes are bounded above by m");
  return {FamilyTag::fubini_restricted, m, 0};
}

FamilyId FamilyId::fubini_associated(int m) {
  require_m_at_least("fubini_associated", m, 1, "block sizes are bounded below by m");
  return {FamilyTag::fubini_associated, m, 0};
}

FamilyId FamilyId::mod_cauchy_restricted(int m) {
  require_m_at_least("mod_cauchy_restricted", m, 2, "the truncated denominator needs at least two terms");
  return {FamilyTag::mod_cauchy_restricted, m, 0};
}

FamilyId FamilyId::mod_cauchy_associated(int m) {
  require_m_at_least("mod_cauchy_associated", m, 2, "its determinant form assumes n-1 >= m >= 2");
  return {FamilyTag::mod_cauchy_associated, m, 0};
}

FamilyId FamilyId::mod_bernoulli_restricted(int m) {
  require_m_at_least("mod_bernoulli_restricted", m, 2, "the truncated denominator needs at least two terms");
  return {FamilyTag::mod_bernoulli_restricted, m, 0};
}

FamilyId FamilyId::mod_bernoulli_associated(int m) {
  require_m_at_least("mod_bernoulli_associated", m, 2, "its determinant form assumes n-1 >= m >= 2");
  return {FamilyTag::mod_bernoulli_associated, m, 0};
}

FamilyId FamilyId::gen_fubini(int k) {
  if (k < 1) throw std::invalid_argument("gen_fubini requires k >= 1");
  return {FamilyTag::gen_fubini, 0, k};
}

FamilyId FamilyId::parse(const std::string& name, std::optional<int> m, std::optional<int> k) {
  auto need_m = [&](const char* who) {
    if (!m) throw std::invalid_argument(std::string(who) + " requires --m");
    return *m;
  };
  if (name == "fubini") return fubini();
  if (name == "fubini_restricted") return fubini_restricted(need_m("fubini_restricted"));
  if (name == "fubini_associated") return fubini_associated(need_m("fubini_associated"));
  if (name == "bernoulli") return bernoulli();
  if (name == "cauchy") return cauchy();
  if (name == "euler") return euler();
  if (name == "mod_cauchy_restricted") return mod_cauchy_restricted(need_m("mod_cauchy_restricted"));
  if (name == "mod_cauchy_associated") return mod_cauchy_associated(need_m("mod_cauchy_associated"));
  if (name == "mod_bernoulli_restricted") return mod_bernoulli_restricted(need_m("mod_bernoulli_restricted"));
  if (name == "mod_bernoulli_associated") return mod_bernoulli_associated(need_m("mod_bernoulli_associated"));
  if (name == "gen_fubini") {
    if (!k) throw std::invalid_argument("gen_fubini requires --k");
    return gen_fubini(*k);
  }
  throw std::invalid_argument("unknown family: " + name);
}

bool FamilyId::has_m() const {
  switch (tag) {
    case FamilyTag::fubini_restricted:
    case FamilyTag::fubini_associated:
    case FamilyTag::mod_cauchy_restricted:
    case FamilyTag::mod_cauchy_associated:
    case FamilyTag::mod_bernoulli_restricted:
    case FamilyTag::mod_bernoulli_associated:
      return true;
    default:
      return false;
  }
}

bool FamilyId::integer_valued() const {
  switch (tag) {
    case FamilyTag::fubini:
    case FamilyTag::fubini_restricted:
    case FamilyTag::fubini_associated:
    case FamilyTag::euler:
      return true;
    default:
      return false;
  }
}

std::string FamilyId::name() const {
  switch (tag) {
    case FamilyTag::fubini: return "fubini";
    case FamilyTag::fubini_restricted: return "fubini_restricted";
    case FamilyTag::fubini_associated: return "fubini_associated";
    case FamilyTag::bernoulli: return "bernoulli";
    case FamilyTag::cauchy: return "cauchy";
    case FamilyTag::euler: return "euler";
    case FamilyTag::mod_cauchy_restricted: return "mod_cauchy_restricted";
    case FamilyTag::mod_cauchy_associated: return "mod_cauchy_associated";
    case FamilyTag::mod_bernoulli_restricted: return "mod_bernoulli_restricted";
    case FamilyTag::mod_bernoulli_associated: return "mod_bernoulli_associated";
    case FamilyTag::gen_fubini: return "gen_fubini";
  }
  return "?";
}

std::string FamilyId::display() const {
  if (has_m()) return name() + "(m=" + std::to_string(m) + ")";
  if (has_k()) return name() + "(k=" + std::to_string(k) + ")";
  return name();
}

}  // namespace fubini
