#include "coxeter/matrix.hpp"

namespace coxeter {

namespace {

std::uint64_t fnv1a(std::uint64_t h, const void* data, std::size_t n) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace

CoxeterMatrix::CoxeterMatrix(std::vector<std::string> names,
                             std::vector<std::pair<std::pair<GenIndex, GenIndex>, Order>> edges,
                             Order default_order)
    : names_(std::move(names)) {
  const std::size_t n = names_.size();
  if (n > 64) throw InvalidMatrix("at most 64 generators are supported");
  if (default_order.is_finite() && default_order.value() < 2)
    throw InvalidMatrix("default order must be at least 2");
  for (GenIndex i = 0; i < n; ++i) {
    if (names_[i].empty()) throw InvalidMatrix("empty generator name");
    if (!index_.emplace(names_[i], i).second)
      throw InvalidMatrix("duplicate generator name '" + names_[i] + "'");
  }
  entries_.assign(n * n, default_order);
  for (GenIndex i = 0; i < n; ++i) entries_[i * n + i] = Order::finite(1);
  for (const auto& [pair, m] : edges) {
    auto [i, j] = pair;
    if (i >= n || j >= n) throw InvalidMatrix("edge index out of range");
    if (i == j) throw InvalidMatrix("self edge on generator '" + names_[i] + "'");
    if (m.is_finite() && m.value() < 2)
      throw InvalidMatrix("order between distinct generators must be at least 2");
    entries_[i * n + j] = m;
    entries_[j * n + i] = m;
  }

  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const auto& name : names_) {
    h = fnv1a(h, name.data(), name.size());
    h = fnv1a(h, "\0", 1);
  }
  for (const Order& o : entries_) {
    std::uint32_t v = o.is_finite() ? o.value() : 0xFFFFFFFFu;
    h = fnv1a(h, &v, sizeof(v));
  }
  fingerprint_ = h;
}

GenIndex CoxeterMatrix::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw UnknownGenerator(name);
  return it->second;
}

std::string CoxeterMatrix::set_to_string(GenSet set) const {
  std::string out = "{";
  bool first = true;
  set.for_each([&](GenIndex i) {
    if (!first) out += ",";
    out += names_[i];
    first = false;
  });
  out += "}";
  return out;
}

}  // namespace coxeter
