#include "mapcount/recurrence.hpp"

namespace mapcount {

long step_delta(int n, int nu, int beta) { return static_cast<long>(n) * (nu - 1) - beta + 2; }

Rational m_entry(int n, int nu, int beta, long k, long i) {
  if (n < 1 || k < 1 || i < 1) fail(errc::bad_domain, "m_entry indices start at 1");
  if (i == k) return Rational(static_cast<long>(n) * (nu - 1) - (beta + k + nu - 3));
  if (i == k - 1) return Rational(nu * (beta + k + n - 3));
  return Rational(0);
}

namespace {

// The derivative rule connecting the primitive regular expansion (constant
// dropped, powers starting at beta - 1) to the order-1 vector, which absorbs
// one vertex_weight factor.
Rational primitive_step_factor(const ModelSpec& m, long l) {
  return Rational(vertex_weight(m.nu) * (m.nu - 1) * (m.beta() - 1 + l));
}

std::vector<Rational> recurrence_step(const std::vector<Rational>& q, int nu, int beta, int j) {
  std::vector<Rational> out;
  out.reserve(q.size() + 1);
  for (std::size_t l = 0; l <= q.size(); ++l) {
    Rational t(0);
    if (l >= 1) t += Rational(nu * (beta + static_cast<long>(l) + j - 2)) * q[l - 1];
    if (l < q.size())
      t -= Rational(beta + static_cast<long>(l) - 1 - static_cast<long>(nu - 1) * (j - 1)) * q[l];
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

LaurentVector advance(const LaurentVector& v) {
  const ModelSpec& m = v.model();
  const int j = v.deriv_order() + 1;
  if (m.family == Family::Regular && v.deriv_order() == 0) {
    std::vector<Rational> q = v.natural();
    for (std::size_t l = 0; l < q.size(); ++l) q[l] *= primitive_step_factor(m, static_cast<long>(l));
    return LaurentVector::from_natural(m, 1, std::move(q));
  }
  return LaurentVector::from_natural(m, j, recurrence_step(v.natural(), m.nu, m.beta(), j));
}

LaurentVector invert_step(const LaurentVector& v) {
  const ModelSpec& m = v.model();
  const int j = v.deriv_order();
  if (j < 1) fail(errc::bad_domain, "invert_step needs derivative order >= 1");

  if (m.family == Family::Regular && j == 1) {
    // The order-0 regular expansion is not a recurrence preimage (the
    // generating function itself has an extra constant and a lower starting
    // power); undo the direct derivative rule instead.
    std::vector<Rational> q = v.natural();
    for (std::size_t l = 0; l < q.size(); ++l) q[l] /= primitive_step_factor(m, static_cast<long>(l));
    return LaurentVector::from_natural(m, 0, std::move(q));
  }

  const std::vector<Rational> q = v.natural();
  const std::size_t n = q.size() - 1;  // unknowns q_0 .. q_{n-1} at order j-1
  std::vector<Rational> out(n);
  for (std::size_t l = 0; l < n; ++l) {
    const Rational diag(-(m.beta() + static_cast<long>(l) - 1 -
                          static_cast<long>(m.nu - 1) * (j - 1)));
    if (diag == 0)
      fail(errc::zero_pivot, "non-invertible step: zero pivot at position " + std::to_string(l));
    Rational rhs = q[l];
    if (l >= 1)
      rhs -= Rational(m.nu * (m.beta() + static_cast<long>(l) + j - 2)) * out[l - 1];
    out[l] = rhs / diag;
  }
  // Overdetermined last equation: q_n(j) = nu*(beta+n+j-2)*q_{n-1}(j-1).
  Rational check(0);
  if (n >= 1) check = Rational(m.nu * (m.beta() + static_cast<long>(n) + j - 2)) * out[n - 1];
  if (check != q[n])
    fail(errc::inconsistent_vector, "inconsistent vector: final recurrence equation violated");
  return LaurentVector::from_natural(m, j - 1, std::move(out));
}

Rational count_recurrence_exact(const ModelSpec& spec, const LaurentVector& v_init, int j) {
  if (v_init.deriv_order() != spec.j_init())
    fail(errc::bad_domain, "initial vector must be at derivative order j_init");
  if (j < spec.j_init()) fail(errc::bad_domain, "vertex count below the initial order");
  LaurentVector v = v_init;
  for (int n = spec.j_init() + 1; n <= j; ++n) v = advance(v);
  return v.sum() * Rational(pow_integer(vertex_weight(spec.nu),
                                        static_cast<unsigned long>(j - spec.j_init())));
}

Integer count_recurrence(const ModelSpec& spec, const LaurentVector& v_init, int j) {
  const Rational value = count_recurrence_exact(spec, v_init, j);
  Integer out;
  if (!as_integer(value, out))
    fail(errc::non_integer_count,
         "recurrence count is not an integer for " + spec.describe() + " j=" + std::to_string(j));
  return out;
}

}  // namespace mapcount
