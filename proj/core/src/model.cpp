#include "mapcount/model.hpp"

namespace mapcount {

Family family_from_tag(const std::string& tag) {
  if (tag == "z") return Family::TwoLegged;
  if (tag == "e") return Family::Regular;
  fail(errc::parse_error, "unknown family tag '" + tag + "' (expected \"z\" or \"e\")");
}

std::string ModelSpec::describe() const {
  return std::string(1, family_tag(family)) + " nu=" + std::to_string(nu) +
         " g=" + std::to_string(genus);
}

ModelSpec ModelSpec::make(Family family, int nu, int genus) {
  if (nu < 2) fail(errc::bad_domain, "nu must be at least 2");
  if (genus < 1) fail(errc::bad_domain, "genus must be at least 1");
  return ModelSpec{family, nu, genus};
}

}  // namespace mapcount
