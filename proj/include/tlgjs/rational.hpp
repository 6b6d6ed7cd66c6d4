#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace tlgjs {

// Exact scalar type for all diagram coefficients. Everything the library
// ships is real-rational (powers of the loop parameter), so conjugation is
// the identity and the float view is derived on demand.
using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.template convert_to<double>(); }

inline Rational conj(const Rational& q) { return q; }

Rational pow(const Rational& base, long exp);

// Accepts "p/q", "p", optional leading '-'. Throws std::invalid_argument on
// malformed input or zero denominator.
Rational parse_rational(const std::string& text);

// Prints "p/q", or "p" when the denominator is 1.
std::string rational_to_string(const Rational& q);

// Loop parameter of the diagram category. delta > 2 keeps the Markov trace
// positive definite at every level, so the diagram basis never degenerates.
class LoopParameter {
 public:
  explicit LoopParameter(Rational delta) : delta_(std::move(delta)) {
    if (delta_ <= 2) throw std::invalid_argument("loop parameter delta must be > 2, got " + rational_to_string(delta_));
  }
  const Rational& value() const { return delta_; }

 private:
  Rational delta_;
};

}  // namespace tlgjs
