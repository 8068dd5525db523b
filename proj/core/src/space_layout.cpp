#include "oqsym/space_layout.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace oqsym {

namespace {
constexpr double kMaxSpin = 4.5;
constexpr int kMaxBosonLevels = 32;

bool is_half_integer(double j) {
  const double twice = 2.0 * j;
  return std::abs(twice - std::round(twice)) < 1e-12;
}
}  // namespace

int Factor::dim() const {
  switch (kind) {
    case FactorKind::Qubit:
      return 2;
    case FactorKind::Spin:
      return static_cast<int>(std::lround(2.0 * spin)) + 1;
    case FactorKind::Boson:
      return levels;
  }
  return 0;
}

SpaceLayout::SpaceLayout(std::vector<Factor> factors) {
  if (factors.empty()) throw LayoutError("layout needs at least one factor");

  std::set<std::string> labels;
  for (const auto& f : factors) {
    if (f.label.empty()) throw LayoutError("factor label must be nonempty");
    if (!labels.insert(f.label).second)
      throw LayoutError("duplicate factor label '" + f.label + "'");
    if (f.kind == FactorKind::Spin) {
      if (f.spin < 0.5 || f.spin > kMaxSpin || !is_half_integer(f.spin))
        throw LayoutError("spin j must be a half-integer in [1/2, 9/2], factor '" +
                          f.label + "'");
    }
    if (f.kind == FactorKind::Boson) {
      if (f.levels < 2 || f.levels > kMaxBosonLevels)
        throw LayoutError("boson cutoff must be in [2, 32], factor '" + f.label + "'");
    }
  }

  // Canonical order: S factors first, then R, stable within each group.
  std::stable_partition(factors.begin(), factors.end(),
                        [](const Factor& f) { return f.tag == SubsystemTag::S; });
  factors_ = std::move(factors);
  s_count_ = static_cast<std::size_t>(
      std::count_if(factors_.begin(), factors_.end(),
                    [](const Factor& f) { return f.tag == SubsystemTag::S; }));

  long long dim = 1;
  for (const auto& f : factors_) {
    dim *= f.dim();
    if (dim > 6000) throw LayoutError("total dimension beyond the desk-scale limit");
  }
  total_dim_ = static_cast<int>(dim);
}

std::size_t SpaceLayout::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (factors_[i].label == label) return i;
  throw LayoutError("unknown factor label '" + label + "'");
}

bool SpaceLayout::has_label(const std::string& label) const {
  return std::any_of(factors_.begin(), factors_.end(),
                     [&](const Factor& f) { return f.label == label; });
}

int SpaceLayout::dim_before(std::size_t i) const {
  int d = 1;
  for (std::size_t k = 0; k < i; ++k) d *= factors_[k].dim();
  return d;
}

int SpaceLayout::dim_after(std::size_t i) const {
  int d = 1;
  for (std::size_t k = i + 1; k < factors_.size(); ++k) d *= factors_[k].dim();
  return d;
}

int SpaceLayout::dim_s() const {
  int d = 1;
  for (std::size_t k = 0; k < s_count_; ++k) d *= factors_[k].dim();
  return d;
}

int SpaceLayout::dim_r() const { return total_dim_ / dim_s(); }

bool SpaceLayout::has_boson() const {
  return std::any_of(factors_.begin(), factors_.end(),
                     [](const Factor& f) { return f.kind == FactorKind::Boson; });
}

int SpaceLayout::min_boson_levels() const {
  int m = 0;
  for (const auto& f : factors_)
    if (f.kind == FactorKind::Boson && (m == 0 || f.levels < m)) m = f.levels;
  if (m == 0) throw LayoutError("layout has no boson factor");
  return m;
}

bool SpaceLayout::same_structure(const SpaceLayout& other) const {
  if (factors_.size() != other.factors_.size()) return false;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const Factor& a = factors_[i];
    const Factor& b = other.factors_[i];
    if (a.label != b.label || a.kind != b.kind || a.tag != b.tag) return false;
    if (a.dim() != b.dim()) return false;
  }
  return true;
}

std::vector<int> SpaceLayout::multi_index(int flat) const {
  std::vector<int> idx(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    const int d = factors_[i].dim();
    idx[i] = flat % d;
    flat /= d;
  }
  return idx;
}

LayoutPtr SpaceLayout::s_only() const {
  std::vector<Factor> fs(factors_.begin(), factors_.begin() + s_count_);
  return make_layout(std::move(fs));
}

LayoutPtr make_layout(std::vector<Factor> factors) {
  return std::make_shared<const SpaceLayout>(std::move(factors));
}

}  // namespace oqsym
