#include "sugeq/domain.hpp"

#include <unordered_map>
#include <unordered_set>

#include "sugeq/error.hpp"

namespace sugeq {

struct Domain::Data {
  std::vector<std::string> labels;
  std::unordered_map<std::string, std::size_t> index;
  std::vector<Domain> factors;
  // radix[k] = product of sizes of factors k+1..end
  std::vector<std::size_t> radix;
};

namespace {

const std::vector<std::string> kNoLabels;
const std::vector<Domain> kNoFactors;

}  // namespace

PointSet make_set(std::size_t universe, std::uint64_t mask) {
  if (universe < 64 && (mask >> universe) != 0) {
    throw Error(ErrorCode::kInvalidArgument, "mask exceeds universe");
  }
  PointSet set(universe);
  for (std::size_t i = 0; i < universe && i < 64; ++i) {
    if ((mask >> i) & 1u) set.set(i);
  }
  return set;
}

std::uint64_t mask_of(const PointSet& set) {
  if (set.size() > 64) {
    throw Error(ErrorCode::kInvalidArgument,
                "subset of more than 64 points has no bitmask");
  }
  std::uint64_t mask = 0;
  for (auto i = set.find_first(); i != PointSet::npos; i = set.find_next(i)) {
    mask |= std::uint64_t{1} << i;
  }
  return mask;
}

Domain::Domain(std::vector<std::string> labels) {
  if (labels.empty()) {
    throw Error(ErrorCode::kValidation, "domain must be nonempty");
  }
  auto data = std::make_shared<Data>();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto& l = labels[i];
    if (l.empty() || l.find(',') != std::string::npos) {
      throw Error(ErrorCode::kValidation,
                  "invalid label \"" + l + "\" (empty or containing ',')");
    }
    if (!data->index.emplace(l, i).second) {
      throw Error(ErrorCode::kValidation, "duplicate label \"" + l + "\"");
    }
  }
  data->labels = std::move(labels);
  data_ = std::move(data);
}

Domain Domain::product(std::span<const Domain> factors) {
  std::vector<Domain> atoms;
  for (const auto& f : factors) {
    if (f.size() == 0) throw Error(ErrorCode::kValidation, "empty factor");
    if (f.is_product()) {
      atoms.insert(atoms.end(), f.factors().begin(), f.factors().end());
    } else {
      atoms.push_back(f);
    }
  }
  if (atoms.empty()) {
    throw Error(ErrorCode::kValidation, "product of no factors");
  }
  if (atoms.size() == 1) return atoms.front();

  std::vector<std::size_t> radix(atoms.size(), 1);
  for (std::size_t k = atoms.size() - 1; k > 0; --k) {
    radix[k - 1] = radix[k] * atoms[k].size();
  }
  const std::size_t total = radix[0] * atoms[0].size();
  std::vector<std::string> labels;
  labels.reserve(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::string label;
    for (std::size_t k = 0; k < atoms.size(); ++k) {
      if (k) label += '|';
      label += atoms[k].label((idx / radix[k]) % atoms[k].size());
    }
    labels.push_back(std::move(label));
  }
  Domain out(std::move(labels));
  auto data = std::make_shared<Data>(*out.data_);
  data->factors = std::move(atoms);
  data->radix = std::move(radix);
  out.data_ = std::move(data);
  return out;
}

std::size_t Domain::size() const { return data_ ? data_->labels.size() : 0; }

const std::string& Domain::label(std::size_t index) const {
  if (index >= size()) {
    throw Error(ErrorCode::kIndex, "point index out of range");
  }
  return data_->labels[index];
}

const std::vector<std::string>& Domain::labels() const {
  return data_ ? data_->labels : kNoLabels;
}

std::optional<std::size_t> Domain::find(std::string_view label) const {
  if (!data_) return std::nullopt;
  auto it = data_->index.find(std::string(label));
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t Domain::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw Error(ErrorCode::kUnknownLabel,
              "unknown label \"" + std::string(label) + "\"");
}

bool Domain::is_product() const { return data_ && !data_->factors.empty(); }

const std::vector<Domain>& Domain::factors() const {
  return data_ ? data_->factors : kNoFactors;
}

std::vector<std::size_t> Domain::tuple_of(std::size_t index) const {
  if (index >= size()) throw Error(ErrorCode::kIndex, "point index out of range");
  if (!is_product()) return {index};
  std::vector<std::size_t> tuple(data_->factors.size());
  for (std::size_t k = 0; k < tuple.size(); ++k) {
    tuple[k] = (index / data_->radix[k]) % data_->factors[k].size();
  }
  return tuple;
}

std::size_t Domain::index_of_tuple(std::span<const std::size_t> tuple) const {
  if (!is_product()) {
    if (tuple.size() != 1 || tuple[0] >= size()) {
      throw Error(ErrorCode::kIndex, "bad tuple for atomic domain");
    }
    return tuple[0];
  }
  if (tuple.size() != data_->factors.size()) {
    throw Error(ErrorCode::kIndex, "tuple arity mismatch");
  }
  std::size_t index = 0;
  for (std::size_t k = 0; k < tuple.size(); ++k) {
    if (tuple[k] >= data_->factors[k].size()) {
      throw Error(ErrorCode::kIndex, "tuple coordinate out of range");
    }
    index += tuple[k] * data_->radix[k];
  }
  return index;
}

PointSet Domain::full_set() const {
  PointSet set(size());
  set.set();
  return set;
}

PointSet Domain::subset(std::span<const std::string> labels) const {
  PointSet set(size());
  for (const auto& l : labels) set.set(index_of(l));
  return set;
}

PointSet Domain::subset(std::initializer_list<std::string_view> labels) const {
  PointSet set(size());
  for (auto l : labels) set.set(index_of(l));
  return set;
}

std::vector<std::string> Domain::labels_of(const PointSet& set) const {
  if (set.size() != size()) {
    throw Error(ErrorCode::kDomainMismatch, "subset of a different domain");
  }
  std::vector<std::string> out;
  for (auto i = set.find_first(); i != PointSet::npos; i = set.find_next(i)) {
    out.push_back(label(i));
  }
  return out;
}

std::string Domain::describe(const PointSet& set) const {
  std::string out = "{";
  bool first = true;
  for (const auto& l : labels_of(set)) {
    if (!first) out += ",";
    out += l;
    first = false;
  }
  return out + "}";
}

bool operator==(const Domain& a, const Domain& b) {
  if (a.data_ == b.data_) return true;
  return a.labels() == b.labels();
}

}  // namespace sugeq
