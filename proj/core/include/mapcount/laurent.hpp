#pragma once

#include <vector>

#include "mapcount/model.hpp"
#include "mapcount/rational.hpp"

namespace mapcount {

/// Exact coefficient vector of a partial-fraction expansion in powers of
/// (nu - (nu-1)*z0)^-1, at a given derivative order.
///
/// Storage convention:
///   * nu == 2: a fixed window of band_len() entries; entry k (1-based)
///     multiplies power 2*deriv_order + k, so base_power = 2*deriv_order + 1.
///     Slots the expansion does not reach hold exact zeros.
///   * nu != 2: the natural (unpadded) coefficient list q_0, q_1, ...,
///     base_power = beta + deriv_order.
///
/// The regular family additionally admits deriv_order == 0 as the primitive
/// expansion of the generating function itself (no z0 prefactor, constant
/// dropped); its natural base power is beta - 1. Order-1 regular vectors
/// absorb one vertex_weight factor, matching the count normalization
/// count = vertex_weight^(j - j_init) * sum of entries.
///
/// Evaluating the represented function at z0 = 1 collapses every power to 1,
/// so the plain sum of entries is the evaluation there.
///
/// Immutable after construction; safe to share across threads.
class LaurentVector {
 public:
  const ModelSpec& model() const { return model_; }
  int deriv_order() const { return deriv_order_; }
  long base_power() const { return base_power_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational sum() const;

  /// Natural base power for this model at order j.
  static long natural_base(const ModelSpec& m, int j);
  /// Largest admissible natural length at order j (alpha + j + 1, or
  /// alpha + 2 for the primitive regular expansion).
  static std::size_t natural_capacity(const ModelSpec& m, int j);

  /// The unpadded coefficients q_0 .. q_{alpha+j}. For windowed vectors past
  /// the order where the moving zero has entered, the leading band zeros are
  /// materialized explicitly.
  std::vector<Rational> natural() const;

  /// Builds a vector from natural coefficients, windowing when nu == 2.
  /// Rejects over-long input and nonzero entries that fall outside the window.
  static LaurentVector from_natural(const ModelSpec& m, int deriv_order,
                                    std::vector<Rational> coeffs);

  friend bool operator==(const LaurentVector& a, const LaurentVector& b);

 private:
  LaurentVector(ModelSpec m, int deriv_order, long base_power, std::vector<Rational> coeffs)
      : model_(m), deriv_order_(deriv_order), base_power_(base_power), coeffs_(std::move(coeffs)) {}

  ModelSpec model_;
  int deriv_order_;
  long base_power_;
  std::vector<Rational> coeffs_;
};

/// Embedded initial coefficient vectors for nu = 2: the two-legged family for
/// genus 1..7 (derivative order 0) and the regular family for genus 2..7
/// (derivative order 1), zero-padded to band_len(). Throws no_builtin_data
/// for any other pair.
LaurentVector load_builtin(Family family, int genus);

bool has_builtin(Family family, int genus);

}  // namespace mapcount
