#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <optional>
#include <stdexcept>
#include <string>

namespace Eigen {

// Exact rational scalar for Eigen dense types. All costs are nominal; we
// never ask Eigen for decompositions over this scalar.
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  using Literal = long;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 40,
    MulCost = 40,
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace wallmap {

using Rational = mpq_class;
using Integer = mpz_class;

template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using VecQ = DenseVector<Rational>;
using MatQ = DenseMatrix<Rational>;

/// Bad input: dimensions, invariants, unparsable values. CLI exit code 2.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Structurally valid request the engine declines to answer (e.g. unbounded
/// interval at a filter level that cannot bound the search). CLI exit code 3.
class RefusedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline int sign_of(const Rational& value) { return sgn(value); }

inline Integer numerator(const Rational& value) { return value.get_num(); }
inline Integer denominator(const Rational& value) { return value.get_den(); }

inline Integer gcd_z(const Integer& a, const Integer& b) {
  Integer result;
  mpz_gcd(result.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return result;
}

inline Integer lcm_z(const Integer& a, const Integer& b) {
  Integer result;
  mpz_lcm(result.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return result;
}

inline bool divides(const Integer& d, const Integer& n) {
  if (d == 0) return n == 0;
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Integer floor_q(const Rational& value) {
  Integer result;
  mpz_fdiv_q(result.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return result;
}

inline Integer ceil_q(const Rational& value) {
  Integer result;
  mpz_cdiv_q(result.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return result;
}

/// Fractional part in [0, 1).
inline Rational frac_q(const Rational& value) {
  return value - Rational(floor_q(value));
}

inline bool is_integral(const Rational& value) { return value.get_den() == 1; }

inline bool is_integral(const VecQ& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!is_integral(v(i))) return false;
  return true;
}

inline Integer floor_sqrt(const Integer& n) {
  Integer result;
  mpz_sqrt(result.get_mpz_t(), n.get_mpz_t());
  return result;
}

inline Integer ceil_sqrt(const Integer& n) {
  Integer root = floor_sqrt(n);
  if (root * root < n) root += 1;
  return root;
}

/// Rational u with u*u >= v and u - sqrt(v) <= 1/(refine*den(v)).
Rational sqrt_upper_bound(const Rational& v, unsigned long refine = 128);

/// Rational l >= 0 with l*l <= v and sqrt(v) - l <= 1/(refine*den(v)).
Rational sqrt_lower_bound(const Rational& v, unsigned long refine = 128);

/// Parses "p/q", "p" (optionally signed). No decimal input: exactness.
std::optional<Rational> parse_rational(const std::string& text);

/// "p/q" or "p" when integral.
std::string fraction_string(const Rational& value);

/// Decimal rendering for reports only; never feeds a decision path.
std::string decimal_string(const Rational& value, int digits = 10);

}  // namespace wallmap
