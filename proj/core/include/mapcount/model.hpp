#pragma once

#include <string>

#include "mapcount/error.hpp"

namespace mapcount {

/// The two map families: maps with two 1-valent leg vertices ("z") and
/// regular maps whose vertices all have valence 2*nu ("e").
enum class Family { TwoLegged, Regular };

inline char family_tag(Family f) { return f == Family::TwoLegged ? 'z' : 'e'; }

Family family_from_tag(const std::string& tag);

/// Structural parameters of a (family, nu, genus) model. The derived numbers
/// drive everything downstream:
///   alpha + 1     coefficients in the initial partial-fraction expansion,
///   beta          lowest denominator power at derivative order zero,
///   j_init        lowest derivative order with the standard expansion shape,
///   j_zero        beta - 1, the order at which the moving zero enters slot one,
///   band_len      fixed window length alpha + beta (meaningful for nu = 2).
struct ModelSpec {
  Family family;
  int nu;
  int genus;

  int alpha() const { return family == Family::TwoLegged ? 3 * genus - 1 : 3 * genus - 4; }
  int beta() const { return family == Family::TwoLegged ? 2 * genus : 2 * genus - 1; }
  int j_init() const { return family == Family::TwoLegged ? 0 : 1; }
  int j_zero() const { return beta() - 1; }
  int band_len() const { return alpha() + beta(); }

  /// The banded reduction requires j_init <= j_zero: genus >= 1 for the
  /// two-legged family, genus >= 2 for the regular one.
  bool fast_path_valid() const { return j_init() <= j_zero(); }

  std::string describe() const;

  static ModelSpec make(Family family, int nu, int genus);
};

}  // namespace mapcount
