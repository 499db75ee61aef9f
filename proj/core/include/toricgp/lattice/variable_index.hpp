#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace toricgp {

// Ordered, immutable list of variable labels for one polynomial ring.
//
// A label is a list of integers: {j} for a ground coordinate t_j, {i, j} for
// y_j^{(i)}, {j_1, ..., j_m} for x_{j_1,...,j_m}. All variables of one ring
// share a prefix, so names render as prefix[label], e.g. x[1,2].
class VariableIndex {
public:
  using Label = std::vector<int>;

  VariableIndex() = default;
  VariableIndex(std::string prefix, std::vector<Label> labels);

  // Variables prefix[1] .. prefix[count].
  static VariableIndex numbered(std::string prefix, std::size_t count);

  std::size_t size() const { return labels_.size(); }
  const std::string &prefix() const { return prefix_; }
  const Label &label(std::size_t i) const { return labels_.at(i); }
  const std::vector<Label> &labels() const { return labels_; }
  std::optional<std::size_t> find(const Label &label) const;
  std::size_t at(const Label &label) const;

  std::string name(std::size_t i) const;

  friend bool operator==(const VariableIndex &a, const VariableIndex &b) {
    return a.prefix_ == b.prefix_ && a.labels_ == b.labels_;
  }

private:
  std::string prefix_;
  std::vector<Label> labels_;
  std::map<Label, std::size_t> position_;
};

} // namespace toricgp
