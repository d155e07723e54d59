#include "mapcount/laurent.hpp"

#include <algorithm>

namespace mapcount {

Rational LaurentVector::sum() const {
  Rational total(0);
  for (const auto& c : coeffs_) total += c;
  return total;
}

long LaurentVector::natural_base(const ModelSpec& m, int j) {
  if (m.family == Family::Regular && j == 0) return m.beta() - 1;
  return m.beta() + j;
}

std::size_t LaurentVector::natural_capacity(const ModelSpec& m, int j) {
  const long len = (m.family == Family::Regular && j == 0) ? m.alpha() + 2 : m.alpha() + j + 1;
  return static_cast<std::size_t>(len);
}

std::vector<Rational> LaurentVector::natural() const {
  const long nb = natural_base(model_, deriv_order_);
  if (base_power_ == nb) return coeffs_;

  // Windowed storage: powers base_power_ .. base_power_ + size - 1.
  std::vector<Rational> out;
  const long cap = static_cast<long>(natural_capacity(model_, deriv_order_));
  out.reserve(static_cast<std::size_t>(cap));
  for (long p = nb; p < nb + cap; ++p) {
    const long i = p - base_power_;
    if (i < 0 || i >= static_cast<long>(coeffs_.size()))
      out.emplace_back(0);
    else
      out.push_back(coeffs_[static_cast<std::size_t>(i)]);
  }
  return out;
}

LaurentVector LaurentVector::from_natural(const ModelSpec& m, int deriv_order,
                                          std::vector<Rational> coeffs) {
  const int j0 = (m.family == Family::Regular) ? 0 : m.j_init();
  if (deriv_order < j0)
    fail(errc::bad_domain, "derivative order below the model's initial order");
  if (coeffs.empty()) fail(errc::length_mismatch, "empty coefficient vector");
  if (coeffs.size() > natural_capacity(m, deriv_order))
    fail(errc::length_mismatch,
         "coefficient vector longer than alpha + deriv_order + 1 for " + m.describe());

  const long nb = natural_base(m, deriv_order);
  if (m.nu != 2) return LaurentVector(m, deriv_order, nb, std::move(coeffs));

  // Window to the fixed band: powers 2*j + 1 .. 2*j + band_len.
  const long wbase = 2L * deriv_order + 1;
  const long wlen = m.band_len();
  std::vector<Rational> window(static_cast<std::size_t>(wlen), Rational(0));
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const long p = nb + static_cast<long>(i);
    const long slot = p - wbase;
    if (slot < 0 || slot >= wlen) {
      if (coeffs[i] != 0)
        fail(errc::inconsistent_vector,
             "nonzero coefficient outside the length-" + std::to_string(wlen) + " band");
      continue;
    }
    window[static_cast<std::size_t>(slot)] = std::move(coeffs[i]);
  }
  return LaurentVector(m, deriv_order, wbase, std::move(window));
}

bool operator==(const LaurentVector& a, const LaurentVector& b) {
  return a.model_.family == b.model_.family && a.model_.nu == b.model_.nu &&
         a.model_.genus == b.model_.genus && a.deriv_order_ == b.deriv_order_ &&
         a.base_power_ == b.base_power_ && a.coeffs_ == b.coeffs_;
}

}  // namespace mapcount
