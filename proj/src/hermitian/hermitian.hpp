#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exact/matrix.hpp"
#include "exact/tower.hpp"

namespace azinv {

struct HermitianCheck {
  bool ok = true;
  std::optional<std::pair<std::size_t, std::size_t>> entry;  // first (i, j) with h^{lambda tr}_ij != eps h_ij
  bool invertible = true;
  std::string message;
};

// Exact check of h^{lambda tr} = eps h and invertibility of h; eps must have norm one.
HermitianCheck validate_hermitian(const Matrix& h, const Elem& eps);

// Invertible h with h^{lambda tr} = eps h.
class HermitianMatrix {
 public:
  HermitianMatrix(Matrix h, Elem eps);
  const Matrix& matrix() const { return h_; }
  const Elem& epsilon() const { return eps_; }
  std::size_t size() const { return h_.rows(); }
  const RingPtr& ring() const { return h_.ring(); }

 private:
  Matrix h_;
  Elem eps_;
};

// x^{lambda tr} h y for column vectors x, y.
Elem form_value(const Matrix& h, const std::vector<Elem>& x, const std::vector<Elem>& y);

struct Diagonalization {
  Matrix v;
  std::vector<Elem> diagonal;
};

// v with v^{lambda tr} h v diagonal, over a field with involution.
Diagonalization diagonalize(const HermitianMatrix& h);

// v with v^{lambda tr} h v = J + ... + J, J = [[0,1],[-1,0]]; trivial involution, eps = -1.
Matrix symplectic_normal_form(const HermitianMatrix& h);
Matrix standard_alternating(const RingPtr& ring, std::size_t n);

struct EpsilonNormalization {
  int sigma;
  Elem beta;  // beta^{-1} lambda(beta) = sigma * eps^{-1}, so beta*h has tag sigma
};
EpsilonNormalization normalize_epsilon(const Elem& eps);

struct CongruenceWitness {
  TowerPtr ring;                  // K with the adjoined square roots
  std::vector<std::string> tower; // adjoined values t (one per new stage)
  Matrix v;
  int sigma = 1;
  Elem beta;
  std::string method;             // "diagonal" or "symplectic"
};

// v over an extension of K with v^{lambda tr} h v = h'; K must be a field tower.
CongruenceWitness congruence_witness(const HermitianMatrix& h, const HermitianMatrix& h2);

}  // namespace azinv
