#include "wallmap/lattice.hpp"

namespace wallmap {

Signature quadratic_form_signature(const MatQ& gram) {
  MatQ m = gram;
  const Eigen::Index n = m.rows();
  Signature sig;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (sign_of(m(i, i)) == 0) {
      Eigen::Index pivot = -1;
      for (Eigen::Index j = i + 1; j < n; ++j) {
        if (sign_of(m(j, j)) != 0) {
          pivot = j;
          break;
        }
      }
      if (pivot >= 0) {
        m.row(i).swap(m.row(pivot));
        m.col(i).swap(m.col(pivot));
      } else {
        // All remaining diagonal entries vanish; a nonzero off-diagonal
        // entry m(i,j) gives m(i,i) = 2*m(i,j) after adding row/col j.
        Eigen::Index off = -1;
        for (Eigen::Index j = i + 1; j < n; ++j) {
          if (sign_of(m(i, j)) != 0) {
            off = j;
            break;
          }
        }
        if (off < 0) {
          ++sig.zero;
          continue;
        }
        m.row(i) += m.row(off);
        m.col(i) += m.col(off);
      }
    }
    const Rational pivot_value = m(i, i);
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (sign_of(m(j, i)) == 0) continue;
      const Rational factor = m(j, i) / pivot_value;
      m.row(j) -= factor * m.row(i);
      m.col(j) -= factor * m.col(i);
    }
    const int s = sign_of(pivot_value);
    if (s > 0)
      ++sig.positive;
    else if (s < 0)
      ++sig.negative;
    else
      ++sig.zero;
  }
  return sig;
}

LatticeModel::LatticeModel(MatQ gram, VecQ ample_ref)
    : gram_(std::move(gram)), ample_ref_(std::move(ample_ref)) {
  if (gram_.rows() == 0 || gram_.rows() != gram_.cols())
    throw ValidationError("lattice.gram: must be a nonempty square matrix");
  for (Eigen::Index i = 0; i < gram_.rows(); ++i)
    for (Eigen::Index j = 0; j < i; ++j)
      if (gram_(i, j) != gram_(j, i))
        throw ValidationError("lattice.gram: not symmetric");
  const Signature sig = quadratic_form_signature(gram_);
  if (sig.positive != 1 || sig.zero != 0)
    throw ValidationError(
        "lattice.gram: signature must be (1, rank-1); got (" +
        std::to_string(sig.positive) + ", " + std::to_string(sig.negative) +
        ", " + std::to_string(sig.zero) + " null)");
  if (ample_ref_.size() != gram_.rows())
    throw ValidationError("lattice.ample_ref: length must equal lattice rank");
  const Rational square = (ample_ref_.transpose() * gram_ * ample_ref_)(0, 0);
  if (sign_of(square) <= 0)
    throw ValidationError("lattice.ample_ref: must have positive square");
}

LatticeModel LatticeModel::p2() {
  MatQ gram(1, 1);
  gram << Rational(1);
  VecQ ample(1);
  ample << Rational(1);
  return LatticeModel(std::move(gram), std::move(ample));
}

LatticeModel LatticeModel::p1xp1() {
  MatQ gram(2, 2);
  gram << Rational(0), Rational(1), Rational(1), Rational(0);
  VecQ ample(2);
  ample << Rational(1), Rational(1);
  return LatticeModel(std::move(gram), std::move(ample));
}

LatticeModel LatticeModel::preset(const std::string& name) {
  if (name == "p2") return p2();
  if (name == "p1xp1") return p1xp1();
  throw ValidationError("lattice.preset: unknown preset '" + name +
                        "' (expected p2 or p1xp1)");
}

Rational pairing(const LatticeModel& lattice, const VecQ& a, const VecQ& b) {
  if (a.size() != lattice.rank() || b.size() != lattice.rank())
    throw ValidationError("pairing: vector length does not match lattice rank");
  return (a.transpose() * lattice.gram() * b)(0, 0);
}

bool is_ample_numerical(const LatticeModel& lattice, const VecQ& w) {
  if (w.size() != lattice.rank())
    throw ValidationError("ample check: vector length does not match lattice rank");
  return sign_of(self_pairing(lattice, w)) > 0 &&
         sign_of(pairing(lattice, w, lattice.ample_ref())) > 0;
}

Rational hodge_square_bound(const LatticeModel& lattice, const VecQ& w,
                            const Rational& c, const Rational& d) {
  if (c > d) throw ValidationError("hodge_square_bound: requires c <= d");
  if (!is_ample_numerical(lattice, w))
    throw ValidationError("hodge_square_bound: w is not ample");
  const Rational c2 = c * c;
  const Rational d2 = d * d;
  return (c2 > d2 ? c2 : d2) / self_pairing(lattice, w);
}

}  // namespace wallmap
