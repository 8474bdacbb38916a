#include "fdens/sets.hpp"

#include <algorithm>

namespace fdens {

namespace mp = boost::multiprecision;

std::string builtin_name(BuiltinSet b) {
  switch (b) {
    case BuiltinSet::Evens:
      return "evens";
    case BuiltinSet::Squares:
      return "squares";
    case BuiltinSet::PowersOfTwo:
      return "powers-of-two";
  }
  return "?";
}

BuiltinSet builtin_from_name(const std::string& name) {
  if (name == "evens") return BuiltinSet::Evens;
  if (name == "squares") return BuiltinSet::Squares;
  if (name == "powers-of-two") return BuiltinSet::PowersOfTwo;
  throw std::invalid_argument("unknown builtin set: " + name);
}

IntegerSet IntegerSet::explicit_set(std::vector<BigInt> elements) {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] < 1)
      throw std::invalid_argument("explicit set elements must be >= 1");
    if (i > 0 && elements[i] <= elements[i - 1])
      throw std::invalid_argument("explicit set must be strictly increasing");
  }
  return IntegerSet(Explicit{std::move(elements)});
}

IntegerSet IntegerSet::block_set(std::vector<std::pair<BigInt, BigInt>> blocks) {
  Blocks rep;
  BigInt total = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto& [a, b] = blocks[i];
    if (a < 1 || b < a)
      throw std::invalid_argument("block [" + a.str() + "," + b.str() + "] is malformed");
    if (i > 0 && blocks[i - 1].second >= a)
      throw std::invalid_argument("blocks must be sorted and disjoint");
    total += b - a + 1;
    rep.prefix_sizes.push_back(total);
  }
  rep.blocks = std::move(blocks);
  return IntegerSet(std::move(rep));
}

IntegerSet IntegerSet::builtin(BuiltinSet b) { return IntegerSet(b); }

std::string IntegerSet::describe() const {
  if (is_builtin()) return "builtin:" + builtin_name(as_builtin());
  if (is_blocks()) return "blocks[" + std::to_string(as_blocks().blocks.size()) + "]";
  return "explicit[" + std::to_string(as_explicit().elements.size()) + "]";
}

namespace {

BigInt isqrt(const BigInt& n) { return mp::sqrt(n); }

BigInt alpha_builtin(BuiltinSet b, const BigInt& n) {
  if (n <= 0) return 0;
  switch (b) {
    case BuiltinSet::Evens:
      return n / 2;
    case BuiltinSet::Squares:
      return isqrt(n);
    case BuiltinSet::PowersOfTwo:
      return BigInt(mp::msb(n)) + 1;  // 1, 2, 4, ..., 2^floor(log2 n)
  }
  return 0;
}

}  // namespace

BigInt alpha(const IntegerSet& set, const BigInt& n) {
  if (n < 0) throw std::domain_error("alpha: negative horizon");
  if (n == 0) return 0;
  if (set.is_builtin()) return alpha_builtin(set.as_builtin(), n);
  if (set.is_explicit()) {
    const auto& v = set.as_explicit().elements;
    return BigInt(std::upper_bound(v.begin(), v.end(), n) - v.begin());
  }
  const auto& rep = set.as_blocks();
  // last block with start <= n
  auto it = std::upper_bound(rep.blocks.begin(), rep.blocks.end(), n,
                             [](const BigInt& x, const auto& blk) { return x < blk.first; });
  if (it == rep.blocks.begin()) return 0;
  const std::size_t i = static_cast<std::size_t>(it - rep.blocks.begin()) - 1;
  BigInt count = i > 0 ? rep.prefix_sizes[i - 1] : BigInt(0);
  const auto& [a, b] = rep.blocks[i];
  count += (n < b ? n : b) - a + 1;
  return count;
}

bool contains(const IntegerSet& set, const BigInt& x) {
  if (x < 1) return false;
  if (set.is_explicit()) {
    const auto& v = set.as_explicit().elements;
    return std::binary_search(v.begin(), v.end(), x);
  }
  if (set.is_blocks()) {
    const auto& blocks = set.as_blocks().blocks;
    auto it = std::upper_bound(blocks.begin(), blocks.end(), x,
                               [](const BigInt& q, const auto& blk) { return q < blk.first; });
    if (it == blocks.begin()) return false;
    return x <= std::prev(it)->second;
  }
  switch (set.as_builtin()) {
    case BuiltinSet::Evens:
      return x % 2 == 0;
    case BuiltinSet::Squares: {
      const BigInt r = isqrt(x);
      return r * r == x;
    }
    case BuiltinSet::PowersOfTwo:
      return (x & (x - 1)) == 0;
  }
  return false;
}

Grid Grid::default_for(const BigInt& horizon) {
  if (horizon < 1) throw std::invalid_argument("grid horizon must be >= 1");
  std::vector<BigInt> pts;
  const BigInt dense_top = horizon < 1000 ? horizon : BigInt(1000);
  for (BigInt i = 1; i <= dense_top; ++i) pts.push_back(i);
  BigInt cur = dense_top;
  while (cur < horizon) {
    cur = (cur * 101 + 99) / 100;  // ceil(1.01 * cur)
    pts.push_back(cur < horizon ? cur : horizon);
  }
  for (BigInt p = 1; p <= horizon; p <<= 1) pts.push_back(p);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  Grid g;
  g.points = std::move(pts);
  g.description = "dense(1..1000)+geometric(1.01)+dyadic to " + horizon.str();
  return g;
}

Grid Grid::from_points(std::vector<BigInt> pts, std::string description) {
  if (pts.empty()) throw std::invalid_argument("grid must be nonempty");
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i] < 1) throw std::invalid_argument("grid points must be >= 1");
    if (i > 0 && pts[i] <= pts[i - 1])
      throw std::invalid_argument("grid must be strictly increasing");
  }
  Grid g;
  g.points = std::move(pts);
  g.description = std::move(description);
  return g;
}

}  // namespace fdens
