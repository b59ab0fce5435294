#pragma once

#include <complex>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace cesaro {

/// Exact rational scalar (arbitrary precision).
using Rational = mpq_class;

/// Inexact complex scalar.
using Complex = std::complex<double>;

/// Error taxonomy shared by the whole library.  The CLI maps these to
/// process exit codes.
enum class ErrorKind {
  Structural,     ///< malformed input, dimension mismatch, unrecognized data
  Admissibility,  ///< an operation's precondition on spectral data fails
  Envelope,       ///< an empirical envelope/validation check failed
  Budget,         ///< a configured work budget was exceeded
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

/// Default relative tolerance for inexact comparisons.
inline constexpr double kDefaultTol = 1e-9;

// --- generic scalar helpers, used by the templated matrix kernels ---------

inline double abs_value(const Rational& x) { return std::abs(x.get_d()); }
inline double abs_value(const Complex& x) { return std::abs(x); }
inline double abs_value(double x) { return std::abs(x); }

inline Rational abs_exact(const Rational& x) { return ::abs(x); }

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const Complex& x, double tol = 0.0) {
  return std::abs(x) <= tol;
}

inline double to_double(const Rational& x) { return x.get_d(); }
inline Complex to_complex(const Rational& x) { return Complex(x.get_d(), 0.0); }
inline Complex to_complex(const Complex& x) { return x; }

struct RationalTraits {
  using Scalar = Rational;
  static constexpr bool exact = true;
};
struct ComplexTraits {
  using Scalar = Complex;
  static constexpr bool exact = false;
};

/// Parses "p/q", "p", or a decimal-free integer string into a rational.
Rational parse_rational(const std::string& text);

/// Renders a rational as "p" or "p/q".
std::string rational_to_string(const Rational& x);

/// Prints a double with 17 significant digits (round-trippable).
std::string format_double(double x);

}  // namespace cesaro
