#include "pbci/partition.hpp"

#include <map>
#include <numeric>

namespace pbci {

Partition::Partition(std::vector<std::size_t> labels) : block_(labels.size()) {
  std::map<std::size_t, std::size_t> ids;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, fresh] = ids.try_emplace(labels[i], ids.size());
    block_[i] = it->second;
  }
  count_ = ids.size();
}

Partition Partition::identity(std::size_t n) {
  std::vector<std::size_t> l(n);
  std::iota(l.begin(), l.end(), 0);
  return Partition(std::move(l));
}

Partition Partition::total(std::size_t n) { return Partition(std::vector<std::size_t>(n, 0)); }

Partition Partition::from_blocks(std::size_t n, const std::vector<Subset>& blocks) {
  std::vector<std::size_t> l(n, n);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (auto x : blocks[b].members()) {
      if (x >= n || l[x] != n) throw InvalidInput("blocks overlap or leave the carrier");
      l[x] = b;
    }
  }
  for (auto v : l) {
    if (v == n) throw InvalidInput("blocks do not cover the carrier");
  }
  return Partition(std::move(l));
}

Subset Partition::block(std::size_t id) const {
  Subset s(size());
  for (std::size_t x = 0; x < size(); ++x) {
    if (block_[x] == id) s.insert(x);
  }
  return s;
}

std::vector<Subset> Partition::blocks() const {
  std::vector<Subset> out(count_, Subset(size()));
  for (std::size_t x = 0; x < size(); ++x) out[block_[x]].insert(x);
  return out;
}

std::vector<Element> Partition::representatives() const {
  std::vector<Element> reps(count_, static_cast<Element>(size()));
  for (std::size_t x = size(); x-- > 0;) reps[block_[x]] = static_cast<Element>(x);
  return reps;
}

bool Partition::refines(const Partition& o) const noexcept {
  std::vector<std::size_t> image(count_, o.count_);
  for (std::size_t x = 0; x < size(); ++x) {
    auto& im = image[block_[x]];
    if (im == o.count_) {
      im = o.block_[x];
    } else if (im != o.block_[x]) {
      return false;
    }
  }
  return true;
}

Partition Partition::meet(const Partition& o) const {
  std::vector<std::size_t> l(size());
  for (std::size_t x = 0; x < size(); ++x) l[x] = block_[x] * (o.count_ + 1) + o.block_[x];
  return Partition(std::move(l));
}

Partition Partition::join(const Partition& o) const {
  std::vector<std::size_t> parent(size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](const std::vector<std::size_t>& labels) {
    std::vector<std::size_t> first(size(), size());
    for (std::size_t x = 0; x < size(); ++x) {
      auto& f = first[labels[x]];
      if (f == size()) {
        f = x;
      } else {
        parent[find(x)] = find(f);
      }
    }
  };
  unite(block_);
  unite(o.block_);
  std::vector<std::size_t> l(size());
  for (std::size_t x = 0; x < size(); ++x) l[x] = find(x);
  return Partition(std::move(l));
}

std::string format_partition(const Algebra& a, const Partition& p) {
  std::string out = "{";
  const auto bs = p.blocks();
  for (std::size_t b = 0; b < bs.size(); ++b) {
    if (b) out += " | ";
    bool first = true;
    for (auto x : bs[b].members()) {
      if (!first) out += ',';
      out += a.name(static_cast<Element>(x));
      first = false;
    }
  }
  return out + "}";
}

Partition parse_partition(const Algebra& a, std::string_view text) {
  std::string t(text);
  if (!t.empty() && t.front() == '{') t.erase(0, 1);
  if (!t.empty() && t.back() == '}') t.pop_back();
  std::vector<std::size_t> l(a.size(), a.size());
  std::size_t id = 0;
  std::size_t start = 0;
  while (start <= t.size()) {
    std::size_t bar = t.find('|', start);
    if (bar == std::string::npos) bar = t.size();
    const Subset s = parse_subset(a, t.substr(start, bar - start));
    for (auto x : s.members()) {
      if (l[x] != a.size()) throw InvalidInput("element " + a.name(static_cast<Element>(x)) + " in two blocks");
      l[x] = id;
    }
    ++id;
    start = bar + 1;
  }
  for (auto& v : l) {
    if (v == a.size()) v = id++;
  }
  return Partition(std::move(l));
}

}  // namespace pbci
