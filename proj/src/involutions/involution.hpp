#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exact/matrix.hpp"
#include "involutive/family.hpp"
#include "types/type_group.hpp"

namespace azinv {

// tau(M) = h M^{lambda tr} h^-1 on Mat_n(R). Linear actions are converted to this form.
class MatrixInvolution {
 public:
  // Throws InvalidGram unless eps = h^-1 h^{lambda tr} is a norm-one scalar.
  static MatrixInvolution from_gram(const Matrix& h);
  // action: n^2 x n^2, column i*n+j = row-major entries of tau(E_ij); tau is lambda-semilinear.
  static MatrixInvolution from_action(const Matrix& action);

  const Matrix& gram() const { return h_; }
  const Matrix& gram_inverse() const { return hinv_; }
  const Elem& epsilon() const { return eps_; }  // h^-1 h^{lambda tr}
  std::size_t degree() const { return h_.rows(); }
  const RingPtr& ring() const { return h_.ring(); }
  bool from_linear_action() const { return from_action_; }

  Matrix apply(const Matrix& m) const;
  Matrix image_of_unit(std::size_t i, std::size_t j) const;  // tau(E_ij)
  Matrix linear_action() const;

 private:
  MatrixInvolution(Matrix h, Matrix hinv, Elem eps) : h_(std::move(h)), hinv_(std::move(hinv)), eps_(std::move(eps)) {}
  void validate() const;
  Matrix h_, hinv_;
  Elem eps_;
  bool from_action_ = false;
};

struct SkolemNoether {
  Matrix u;
  std::vector<Matrix> solution_basis;  // the nonzero candidates u_ab
};

// u with phi(M) = u M u^-1 for an R-linear automorphism phi given as an n^2 x n^2 action.
SkolemNoether skolem_noether_witness(const Matrix& action);

CoarseTypeClass coarse_type(const MatrixInvolution& tau, const FamilyPtr& family);
MatrixInvolution standard_involution(std::size_t n, const NormOneElement& eps);
MatrixInvolution tensor(const MatrixInvolution& a, const MatrixInvolution& b);

// Evaluation of the Gram matrix at a ramification point; the result lives over k.
MatrixInvolution specialize(const MatrixInvolution& tau, const FamilyPtr& family, const RamificationPoint& z);
RamificationPoint parse_point(const FamilyPtr& family, const std::string& text);

enum class FirstKind { kOrthogonal, kSymplectic };
struct FirstKindResult {
  FirstKind kind;
  std::size_t symmetric_dimension;  // dim ker(tau - id)
};
std::string first_kind_name(FirstKind k);
FirstKindResult classify_first_kind(const MatrixInvolution& tau);

struct TypeVector {
  std::vector<std::pair<std::string, int>> entries;
  bool infinity_not_evaluated = false;
};
TypeVector type_vector(const MatrixInvolution& tau, const FamilyPtr& family);

// Exact E_ij checks of the involution axioms (anti-multiplicativity, tau^2 = id, lambda on scalars).
void verify_involution_exhaustive(const MatrixInvolution& tau);

}  // namespace azinv
