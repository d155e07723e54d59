#pragma once

#include <stdexcept>
#include <string>

namespace mapcount {

/// Failure categories surfaced by the library. Tests and the CLI dispatch on
/// these rather than on message text.
enum class errc {
  no_builtin_data,      // (family, genus) pair without embedded coefficients
  parse_error,          // malformed coefficient document or rational literal
  length_mismatch,      // coefficient vector inconsistent with its model
  bad_domain,           // parameters outside an operation's domain
  fast_path_undefined,  // banded four-valent route requested with nu != 2
  zero_pivot,           // backward recurrence step hit a vanishing diagonal
  inconsistent_vector,  // overdetermined inversion check failed
  undefined_convention, // lower Pochhammer vanished before series terminated
  non_integer_count,    // a count came out non-integral (corrupted data)
  census_limit,         // enumeration size above the configured cap
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace mapcount
