#include "wallmap/charge.hpp"

#include <cmath>

namespace wallmap {

namespace {

Rational rank_q(std::int64_t rank) { return Rational(static_cast<long>(rank)); }

}  // namespace

CharVec::CharVec(std::int64_t rank_in, VecQ c1_in, Rational ch2_in)
    : rank(rank_in), c1(std::move(c1_in)), ch2(std::move(ch2_in)) {
  if (!is_integral(c1))
    throw ValidationError("type.c1: coordinates must be integers");
  if (denominator(ch2) > 2)
    throw ValidationError("type.ch2: must be a half-integer");
}

CharVec operator+(const CharVec& a, const CharVec& b) {
  if (a.c1.size() != b.c1.size())
    throw ValidationError("CharVec addition: lattice ranks differ");
  return CharVec(a.rank + b.rank, a.c1 + b.c1, a.ch2 + b.ch2);
}

CharVec operator-(const CharVec& a, const CharVec& b) {
  if (a.c1.size() != b.c1.size())
    throw ValidationError("CharVec subtraction: lattice ranks differ");
  return CharVec(a.rank - b.rank, a.c1 - b.c1, a.ch2 - b.ch2);
}

bool operator==(const CharVec& a, const CharVec& b) {
  return a.rank == b.rank && a.ch2 == b.ch2 && a.c1.size() == b.c1.size() &&
         a.c1 == b.c1;
}

Rational c2_of(const CharVec& e, const LatticeModel& lattice) {
  return pairing(lattice, e.c1, e.c1) / 2 - e.ch2;
}

StabilityParams::StabilityParams(LatticeModel lattice, VecQ beta, VecQ omega)
    : lattice_(std::move(lattice)), beta_(std::move(beta)), omega_(std::move(omega)) {
  if (beta_.size() != lattice_.rank())
    throw ValidationError("beta: length must equal lattice rank");
  if (omega_.size() != lattice_.rank())
    throw ValidationError("omega: length must equal lattice rank");
  if (!is_ample_numerical(lattice_, omega_))
    throw ValidationError("omega: fails the numerical ample test");
  omega_sq_ = self_pairing(lattice_, omega_);
  beta_omega_ = pairing(lattice_, beta_, omega_);
  beta_sq_ = self_pairing(lattice_, beta_);
}

Rational c_value(const CharVec& e, const StabilityParams& params) {
  return -e.ch2 + pairing(params.lattice(), e.c1, params.beta()) -
         rank_q(e.rank) * params.beta_sq() / 2;
}

ChargeQuadratic central_charge(const CharVec& e, const StabilityParams& params) {
  ChargeQuadratic z;
  z.re2 = rank_q(e.rank) * params.omega_sq() / 2;
  z.im1 = pairing(params.lattice(), e.c1, params.omega()) -
          rank_q(e.rank) * params.beta_omega();
  z.re0 = c_value(e, params);
  return z;
}

bool operator<(const SlopeValue& a, const SlopeValue& b) {
  if (b.is_torsion()) return !a.is_torsion();
  if (a.is_torsion()) return false;
  return *a.value < *b.value;
}

bool operator==(const SlopeValue& a, const SlopeValue& b) {
  if (a.is_torsion() || b.is_torsion()) return a.is_torsion() == b.is_torsion();
  return *a.value == *b.value;
}

SlopeValue slope_mu(const CharVec& e, const StabilityParams& params) {
  if (e.rank == 0) return SlopeValue{std::nullopt};
  return SlopeValue{pairing(params.lattice(), e.c1, params.omega()) /
                    rank_q(e.rank)};
}

bool operator==(const Shadow& a, const Shadow& b) {
  return a.rank == b.rank && a.x == b.x && a.c == b.c;
}

bool shadow_less(const Shadow& a, const Shadow& b) {
  if (a.rank != b.rank) return a.rank < b.rank;
  if (a.x != b.x) return a.x < b.x;
  return a.c < b.c;
}

Shadow shadow_of(const CharVec& e, const StabilityParams& params) {
  return Shadow{e.rank, pairing(params.lattice(), e.c1, params.omega()),
                c_value(e, params)};
}

Shadow operator-(const Shadow& a, const Shadow& b) {
  return Shadow{a.rank - b.rank, a.x - b.x, a.c - b.c};
}

bool heart_admissible(const CharVec& e, const StabilityParams& params) {
  return heart_admissible(shadow_of(e, params), params);
}

bool heart_admissible(const Shadow& s, const StabilityParams& params) {
  return sign_of(s.y(params)) >= 0;
}

namespace {

// Sign of Im(conj(Z_E)*Z_B)(m) for shadows, expanded so that the only
// inputs are (rank, y, c) pairs:
//   m * [ (omega^2 m^2 / 2)(rk_E y_B - rk_B y_E) + (c_E y_B - c_B y_E) ].
int pair_form_sign(const Shadow& e, const Shadow& b,
                   const StabilityParams& params, const Rational& m) {
  const Rational ye = e.y(params);
  const Rational yb = b.y(params);
  const Rational cubic = params.omega_sq() * m * m / 2 *
                             (rank_q(e.rank) * yb - rank_q(b.rank) * ye) +
                         (e.c * yb - b.c * ye);
  return sign_of(m * cubic);
}

PhaseOrder order_from_sign(int s) {
  if (s < 0) return PhaseOrder::Greater;
  if (s > 0) return PhaseOrder::Less;
  return PhaseOrder::Equal;
}

}  // namespace

PhaseOrder phase_compare(const CharVec& e, const CharVec& b,
                         const StabilityParams& params, const Rational& m) {
  return phase_compare(shadow_of(e, params), shadow_of(b, params), params, m);
}

PhaseOrder phase_compare(const Shadow& e, const Shadow& b,
                         const StabilityParams& params, const Rational& m) {
  if (sign_of(m) <= 0) throw ValidationError("phase_compare: requires m > 0");
  return order_from_sign(pair_form_sign(e, b, params, m));
}

DisplayPhase display_phase(const ChargeQuadratic& z, const Rational& m) {
  if (sign_of(m) <= 0) throw ValidationError("display_phase: requires m > 0");
  const Rational re = z.real_at(m);
  const Rational im = z.imag_at(m);
  DisplayPhase result;
  if (sign_of(im) > 0) {
    result.status = DisplayPhase::Status::Interior;
    result.value = std::atan2(im.get_d(), re.get_d()) / M_PI;
    return result;
  }
  if (sign_of(im) == 0) {
    if (sign_of(re) < 0) {
      result.status = DisplayPhase::Status::ExactlyOne;
      result.value = 1.0;
    } else if (sign_of(re) > 0) {
      result.status = DisplayPhase::Status::NonHeart;
    } else {
      result.status = DisplayPhase::Status::ZeroCharge;
    }
    return result;
  }
  result.status = DisplayPhase::Status::NonHeart;
  return result;
}

}  // namespace wallmap
