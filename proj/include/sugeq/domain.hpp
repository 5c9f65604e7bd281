#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sugeq {

// A subset of a finite domain, one bit per point index.
using PointSet = boost::dynamic_bitset<std::uint64_t>;

PointSet make_set(std::size_t universe, std::uint64_t mask);
// Bitmask of a set over at most 64 points.
std::uint64_t mask_of(const PointSet& set);

// Ordered list of distinct point labels. A product domain additionally keeps
// its (atomic) factors; its points are tuples indexed in mixed radix with the
// first factor most significant, and its labels are the factor labels joined
// with '|'.
class Domain {
 public:
  Domain() = default;
  explicit Domain(std::vector<std::string> labels);

  // Products are flattened: factors that are themselves products contribute
  // their own factors. A single atomic factor yields the factor itself.
  static Domain product(std::span<const Domain> factors);

  std::size_t size() const;
  const std::string& label(std::size_t index) const;
  const std::vector<std::string>& labels() const;

  std::optional<std::size_t> find(std::string_view label) const;
  // Throws ErrorCode::kUnknownLabel.
  std::size_t index_of(std::string_view label) const;

  bool is_product() const;
  // Atomic factors; empty for an atomic domain.
  const std::vector<Domain>& factors() const;
  std::vector<std::size_t> tuple_of(std::size_t index) const;
  std::size_t index_of_tuple(std::span<const std::size_t> tuple) const;

  PointSet empty_set() const { return PointSet(size()); }
  PointSet full_set() const;
  PointSet subset(std::span<const std::string> labels) const;
  PointSet subset(std::initializer_list<std::string_view> labels) const;

  // Labels of the members, in domain order.
  std::vector<std::string> labels_of(const PointSet& set) const;
  // "{a,b}" style rendering for messages.
  std::string describe(const PointSet& set) const;

  // Domains are equal when their label sequences are equal.
  friend bool operator==(const Domain& a, const Domain& b);

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

}  // namespace sugeq
