#include "toricgp/lattice/variable_index.hpp"

#include "toricgp/errors.hpp"

namespace toricgp {

VariableIndex::VariableIndex(std::string prefix, std::vector<Label> labels)
    : prefix_(std::move(prefix)), labels_(std::move(labels)) {
  if (prefix_.empty())
    throw InvalidArgument("variable prefix must be nonempty");
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    auto [it, inserted] = position_.emplace(labels_[i], i);
    if (!inserted)
      throw InvalidArgument("duplicate variable label " + name(i));
  }
}

VariableIndex VariableIndex::numbered(std::string prefix, std::size_t count) {
  std::vector<Label> labels;
  labels.reserve(count);
  for (std::size_t i = 1; i <= count; ++i)
    labels.push_back({static_cast<int>(i)});
  return VariableIndex(std::move(prefix), std::move(labels));
}

std::optional<std::size_t> VariableIndex::find(const Label &label) const {
  auto it = position_.find(label);
  if (it == position_.end())
    return std::nullopt;
  return it->second;
}

std::size_t VariableIndex::at(const Label &label) const {
  if (auto pos = find(label))
    return *pos;
  std::string s = prefix_ + "[";
  for (std::size_t i = 0; i < label.size(); ++i)
    s += (i ? "," : "") + std::to_string(label[i]);
  throw InvalidArgument("unknown variable " + s + "]");
}

std::string VariableIndex::name(std::size_t i) const {
  const Label &l = labels_.at(i);
  std::string s = prefix_ + "[";
  for (std::size_t k = 0; k < l.size(); ++k) {
    if (k)
      s += ',';
    s += std::to_string(l[k]);
  }
  return s + "]";
}

} // namespace toricgp
