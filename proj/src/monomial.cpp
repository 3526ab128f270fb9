#include "catkit/monomial.hpp"

#include <numeric>

#include "catkit/error.hpp"

namespace catkit {
namespace {

void enumerate_into(int remaining_vars, int degree, std::vector<int>& prefix,
                    std::vector<MultiIndex>& out) {
  if (remaining_vars == 1) {
    prefix.push_back(degree);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int e = degree; e >= 0; --e) {
    prefix.push_back(e);
    enumerate_into(remaining_vars - 1, degree - e, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

MultiIndex::MultiIndex(std::vector<int> exponents) : exponents_(std::move(exponents)) {
  for (int e : exponents_) {
    if (e < 0) throw DomainError("negative exponent in multi-index");
  }
  degree_ = std::accumulate(exponents_.begin(), exponents_.end(), 0);
}

MultiIndex::MultiIndex(std::initializer_list<int> exponents)
    : MultiIndex(std::vector<int>(exponents)) {}

bool MultiIndex::dominates(const MultiIndex& other) const {
  for (std::size_t k = 0; k < exponents_.size(); ++k) {
    if (exponents_[k] < other.exponents_[k]) return false;
  }
  return true;
}

Integer MultiIndex::factorial_product() const {
  Integer out = 1;
  for (int e : exponents_) out *= factorial(static_cast<unsigned long>(e));
  return out;
}

std::string MultiIndex::str() const {
  std::string out = "[";
  for (std::size_t k = 0; k < exponents_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(exponents_[k]);
  }
  return out + "]";
}

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
  if (a.size() != b.size()) throw DomainError("multi-index length mismatch");
  MultiIndex out = a;
  for (std::size_t k = 0; k < a.size(); ++k) out.exponents_[k] += b.exponents_[k];
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

MultiIndex operator-(const MultiIndex& a, const MultiIndex& b) {
  if (a.size() != b.size() || !a.dominates(b)) throw DomainError("multi-index difference undefined");
  MultiIndex out = a;
  for (std::size_t k = 0; k < a.size(); ++k) out.exponents_[k] -= b.exponents_[k];
  out.degree_ = a.degree_ - b.degree_;
  return out;
}

std::vector<MultiIndex> enumerate_monomials(int n, int j) {
  if (n < 1 || j < 0) throw DomainError("enumerate_monomials needs n >= 1 and j >= 0");
  std::vector<MultiIndex> out;
  out.reserve(monomial_count(n, j));
  std::vector<int> prefix;
  enumerate_into(n, j, prefix, out);
  return out;
}

std::size_t monomial_count(int n, int j) {
  if (n < 1 || j < 0) return 0;
  return binomial(static_cast<unsigned long>(n - 1 + j), static_cast<unsigned long>(j)).get_ui();
}

MonomialIndex::MonomialIndex(int n, int j) : monomials_(enumerate_monomials(n, j)) {
  for (std::size_t k = 0; k < monomials_.size(); ++k) positions_.emplace(monomials_[k], k);
}

std::size_t MonomialIndex::position(const MultiIndex& u) const {
  const auto it = positions_.find(u);
  if (it == positions_.end()) throw DomainError("multi-index " + u.str() + " not in index");
  return it->second;
}

}  // namespace catkit
