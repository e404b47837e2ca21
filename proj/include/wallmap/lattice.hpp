#pragma once

#include "wallmap/rational.hpp"

#include <string>

namespace wallmap {

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

/// Signature of a symmetric rational matrix via exact congruence
/// diagonalization (simultaneous row/column elimination). No floating point.
Signature quadratic_form_signature(const MatQ& gram);

/// Exact model of Num(X)_Q: a rational symmetric pairing of signature
/// (1, rank-1) with a designated reference ample class.
class LatticeModel {
 public:
  LatticeModel(MatQ gram, VecQ ample_ref);

  static LatticeModel p2();
  static LatticeModel p1xp1();
  static LatticeModel preset(const std::string& name);

  int rank() const { return static_cast<int>(gram_.rows()); }
  const MatQ& gram() const { return gram_; }
  const VecQ& ample_ref() const { return ample_ref_; }

 private:
  MatQ gram_;
  VecQ ample_ref_;
};

/// a^T * gram * b. Bilinear, symmetric.
Rational pairing(const LatticeModel& lattice, const VecQ& a, const VecQ& b);

inline Rational self_pairing(const LatticeModel& lattice, const VecQ& a) {
  return pairing(lattice, a, a);
}

/// w*w > 0 and w*ample_ref > 0: the same component of the positive cone as
/// the reference ample class. Numerical proxy for ampleness.
bool is_ample_numerical(const LatticeModel& lattice, const VecQ& w);

/// max(c^2, d^2)/(w*w). Any class a with c <= a*w <= d has a*a bounded by
/// this value (Hodge index on a signature-(1,n) lattice).
Rational hodge_square_bound(const LatticeModel& lattice, const VecQ& w,
                            const Rational& c, const Rational& d);

}  // namespace wallmap
