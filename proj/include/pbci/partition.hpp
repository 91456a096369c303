#pragma once

#include <string>
#include <vector>

#include "pbci/algebra.hpp"
#include "pbci/subset.hpp"

namespace pbci {

// Equivalence relation on 0..n-1 as block ids. Ids are normalized: blocks are
// numbered in order of their least element, so equal relations compare equal.
class Partition {
 public:
  Partition() = default;
  // Any labelling; equal labels mean the same block.
  explicit Partition(std::vector<std::size_t> labels);

  static Partition identity(std::size_t n);
  static Partition total(std::size_t n);
  // Throws InvalidInput unless the blocks are disjoint and cover 0..n-1.
  static Partition from_blocks(std::size_t n, const std::vector<Subset>& blocks);

  std::size_t size() const noexcept { return block_.size(); }
  std::size_t num_blocks() const noexcept { return count_; }
  std::size_t block_of(Element x) const noexcept { return block_[x]; }
  bool related(Element x, Element y) const noexcept { return block_[x] == block_[y]; }
  Subset block(std::size_t id) const;
  Subset class_of(Element x) const { return block(block_of(x)); }
  std::vector<Subset> blocks() const;
  // Least element of each block, by block id.
  std::vector<Element> representatives() const;
  const std::vector<std::size_t>& labels() const noexcept { return block_; }

  // Every block of *this lies inside a block of o.
  bool refines(const Partition& o) const noexcept;
  Partition meet(const Partition& o) const;
  Partition join(const Partition& o) const;

  bool operator==(const Partition&) const = default;

 private:
  std::vector<std::size_t> block_;
  std::size_t count_ = 0;
};

// "{a,b,1 | x,y,g}", blocks in id order.
std::string format_partition(const Algebra& a, const Partition& p);
// Parses "a,b,1|x,y,g" (braces optional); unmentioned elements become
// singletons. Throws InvalidInput.
Partition parse_partition(const Algebra& a, std::string_view text);

}  // namespace pbci
