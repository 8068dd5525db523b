#pragma once

#include <memory>
#include <string>
#include <vector>

#include "oqsym/errors.hpp"

namespace oqsym {

enum class FactorKind { Qubit, Spin, Boson };
enum class SubsystemTag { S, R };

// One tensor factor of the total space: a qubit, a spin-j (dimension 2j+1),
// or a bosonic mode truncated to `levels` Fock states 0..levels-1.
struct Factor {
  std::string label;
  FactorKind kind = FactorKind::Qubit;
  double spin = 0.5;  // Spin only; half-integer, capped at 9/2
  int levels = 0;     // Boson only; 2..32
  SubsystemTag tag = SubsystemTag::S;

  int dim() const;
};

// Ordered list of tensor factors with an S/R split. Factors are stored with
// all S factors first, then all R factors, each group in declaration order;
// every embedding and partial trace in the library indexes the total space
// row-major over this order (first factor most significant).
class SpaceLayout {
 public:
  explicit SpaceLayout(std::vector<Factor> factors);

  int total_dim() const { return total_dim_; }
  std::size_t factor_count() const { return factors_.size(); }
  const Factor& factor(std::size_t i) const { return factors_.at(i); }
  const std::vector<Factor>& factors() const { return factors_; }

  std::size_t index_of(const std::string& label) const;  // throws LayoutError
  bool has_label(const std::string& label) const;

  // Product of factor dimensions strictly before / after slot i.
  int dim_before(std::size_t i) const;
  int dim_after(std::size_t i) const;

  std::size_t s_count() const { return s_count_; }
  int dim_s() const;
  int dim_r() const;
  bool has_s() const { return s_count_ > 0; }
  bool has_r() const { return s_count_ < factors_.size(); }

  bool has_boson() const;
  int min_boson_levels() const;  // throws LayoutError when no boson factor

  bool same_structure(const SpaceLayout& other) const;

  // Decode a flat basis index into one index per factor.
  std::vector<int> multi_index(int flat) const;

  // Layout consisting of the S factors only (partial-trace result space).
  std::shared_ptr<const SpaceLayout> s_only() const;

 private:
  std::vector<Factor> factors_;
  std::size_t s_count_ = 0;
  int total_dim_ = 1;
};

using LayoutPtr = std::shared_ptr<const SpaceLayout>;

LayoutPtr make_layout(std::vector<Factor> factors);

inline bool same_layout(const LayoutPtr& a, const LayoutPtr& b) {
  return a == b || (a && b && a->same_structure(*b));
}

}  // namespace oqsym
