#pragma once

#include "wallmap/lattice.hpp"

#include <cstdint>
#include <optional>

namespace wallmap {

/// Numerical shadow of an object of D^b(X): rank, c1 as an integral lattice
/// class, and ch2. The canonical second invariant is ch2; c2 = c1^2/2 - ch2
/// is a derived view.
struct CharVec {
  std::int64_t rank = 0;
  VecQ c1;
  Rational ch2;

  CharVec() = default;
  CharVec(std::int64_t rank_in, VecQ c1_in, Rational ch2_in);
};

CharVec operator+(const CharVec& a, const CharVec& b);
CharVec operator-(const CharVec& a, const CharVec& b);
bool operator==(const CharVec& a, const CharVec& b);

/// Derived view c2 = c1*c1/2 - ch2 (needs the pairing).
Rational c2_of(const CharVec& e, const LatticeModel& lattice);

/// The pair (beta, omega) with omega ample, plus the cached pairings every
/// charge formula consumes. The remaining stability data (rho, perversity)
/// is fixed once and for all and carried as documentation constants only:
/// rho = (-1, i, 1/2), p(d) = -floor(d/2). Nothing numerical reads them.
class StabilityParams {
 public:
  StabilityParams(LatticeModel lattice, VecQ beta, VecQ omega);

  const LatticeModel& lattice() const { return lattice_; }
  const VecQ& beta() const { return beta_; }
  const VecQ& omega() const { return omega_; }
  const Rational& omega_sq() const { return omega_sq_; }
  const Rational& beta_omega() const { return beta_omega_; }
  const Rational& beta_sq() const { return beta_sq_; }

  static constexpr const char* kRhoDoc = "rho = (-1, i, 1/2)";
  static constexpr const char* kPerversityDoc = "p(d) = -floor(d/2)";

 private:
  LatticeModel lattice_;
  VecQ beta_;
  VecQ omega_;
  Rational omega_sq_;
  Rational beta_omega_;
  Rational beta_sq_;
};

/// Z(m) = re2*m^2 + i*im1*m + re0 with re2 = rank*omega^2/2,
/// im1 = c1*omega - rank*beta*omega, re0 = c(E).
struct ChargeQuadratic {
  Rational re2;
  Rational im1;
  Rational re0;

  Rational real_at(const Rational& m) const { return re2 * m * m + re0; }
  Rational imag_at(const Rational& m) const { return im1 * m; }
};

/// c(E) = -ch2 + c1*beta - rank*beta^2/2. Linear in the shadow.
Rational c_value(const CharVec& e, const StabilityParams& params);

ChargeQuadratic central_charge(const CharVec& e, const StabilityParams& params);

/// Slope c1*omega/rank; rank 0 carries the distinguished torsion slope that
/// compares greater than every rational.
struct SlopeValue {
  std::optional<Rational> value;  // nullopt: torsion slope

  bool is_torsion() const { return !value.has_value(); }
};

bool operator<(const SlopeValue& a, const SlopeValue& b);
bool operator==(const SlopeValue& a, const SlopeValue& b);

SlopeValue slope_mu(const CharVec& e, const StabilityParams& params);

/// Reduced shadow: everything the wall formulas consume. x = c1*omega and
/// c = c(E); y = x - rank*beta*omega is derived.
struct Shadow {
  std::int64_t rank = 0;
  Rational x;
  Rational c;

  Rational y(const StabilityParams& params) const {
    return x - Rational(static_cast<long>(rank)) * params.beta_omega();
  }
};

bool operator==(const Shadow& a, const Shadow& b);
bool shadow_less(const Shadow& a, const Shadow& b);  // (rank, x, c) lex

Shadow shadow_of(const CharVec& e, const StabilityParams& params);
Shadow operator-(const Shadow& a, const Shadow& b);

/// Necessary numerical condition for membership in the tilted heart:
/// c1*omega >= rank*beta*omega, i.e. y >= 0. Necessary, not sufficient.
bool heart_admissible(const CharVec& e, const StabilityParams& params);
bool heart_admissible(const Shadow& s, const StabilityParams& params);

enum class PhaseOrder { Less, Equal, Greater };

/// Exact phase comparison at rational m > 0 through the sign of
/// Im(conj(Z_E) * Z_B) = Re(Z_E)Im(Z_B) - Im(Z_E)Re(Z_B); a negative sign
/// means phi(E) > phi(B). Fully rational; phases are never computed as
/// angles on a decision path.
PhaseOrder phase_compare(const CharVec& e, const CharVec& b,
                         const StabilityParams& params, const Rational& m);
PhaseOrder phase_compare(const Shadow& e, const Shadow& b,
                         const StabilityParams& params, const Rational& m);

/// Presentation-only phase in (0, 1]. The exact cases (y = 0) are decided
/// rationally; only the interior value uses floating point.
struct DisplayPhase {
  enum class Status { Interior, ExactlyOne, NonHeart, ZeroCharge };
  Status status = Status::ZeroCharge;
  double value = 0.0;  // meaningful for Interior (in (0,1)) and ExactlyOne (1)
};

DisplayPhase display_phase(const ChargeQuadratic& z, const Rational& m);

}  // namespace wallmap
