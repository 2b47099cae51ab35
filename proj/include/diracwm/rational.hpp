#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace diracwm {

/// Exact scalar used everywhere in the engine.
using Rational = mpq_class;

/// Parses "p/q" or an integer literal; throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Canonical form: "n" or "p/q" with q > 0.
std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Falling-factorial binomial x(x-1)...(x-k+1)/k! for rational x.
Rational binomial(const Rational& x, int k);

/// Thrown when a mathematical precondition fails (non-cuspidal parameter,
/// non-bijective twist block, missing infinitesimal character, ...).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace diracwm
