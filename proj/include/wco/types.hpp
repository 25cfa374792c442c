#ifndef WCO_TYPES_HPP
#define WCO_TYPES_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace wco {

using Cplx = std::complex<double>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Construction-time invariant violations and scenario/report I/O problems.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A check's mathematical hypotheses do not apply to the given operator.
// run_checks records these instead of letting them abort sibling checks.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// Exponent of an L^p space: a real in [1, inf].
class Exponent {
 public:
  explicit Exponent(double v) : value_(v) {
    if (!(v >= 1.0))
      throw ValidationError("exponent must lie in [1, inf], got " + std::to_string(v));
  }
  static Exponent infinite() { return Exponent(std::numeric_limits<double>::infinity()); }

  double value() const { return value_; }
  bool is_infinite() const { return std::isinf(value_); }
  bool is_finite() const { return !is_infinite(); }
  std::string str() const;

  friend bool operator==(const Exponent& a, const Exponent& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Exponent& a, const Exponent& b) { return !(a == b); }

 private:
  double value_;
};

// x^p for x >= 0. Integer p up to |p| <= 64 goes through binary powering, so
// rescaling x by a power of two rescales the result exactly.
double pow_real(double x, double p);

// Relative tolerance family. base defaults to 1e-12 and can be overridden via
// the WCO_TOL environment variable; every other knob is a fixed multiple.
struct Tolerances {
  double base = 1e-12;

  double rel() const { return base; }                      // cozero, J > 0, |v| > 0 cuts
  double gram() const { return 1e2 * base; }               // ||W*W - M_J|| max entry
  double adjoint() const { return 1e2 * base; }            // <Wf,g> vs <f,W*g>
  double polar_factor() const { return 1e2 * base; }       // ||W - V.M_sqrtJ||
  double partial_isometry() const { return 1e2 * base; }   // ||V*V - P_B||
  double oracle_match() const { return 1e4 * base; }       // eig/svd oracle agreement
  double inverse_roundtrip() const { return 1e3 * base; }  // W(W^-1 g) vs g
  double norm_inequality() const { return 1e2 * base; }
  double fiber_constant() const { return 1e2 * base; }
  double witness_slack() const { return 1e2 * base; }

  static Tolerances from_env();
};

}  // namespace wco

#endif  // WCO_TYPES_HPP
