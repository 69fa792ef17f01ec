#include <algorithm>
#include <mutex>

#include "coxeter/words.hpp"

namespace coxeter {

namespace {
constexpr std::uint32_t kUndef = 0xFFFFFFFFu;
}

// Derived tables, filled on demand behind a mutex.
struct EnumeratedGroup::Lazy {
  std::mutex mu;
  std::vector<std::uint32_t> left;     // local_rank * size, j*size + v -> j.v
  std::vector<std::uint32_t> inverse;
  std::vector<Word> normal_forms;
  std::vector<std::uint32_t> center;
  bool center_done = false;
  std::vector<std::uint32_t> reflections;
  std::vector<bool> is_reflection;
  bool reflections_done = false;
};

int EnumeratedGroup::local(GenIndex g) const {
  if (g >= 64 || local_of_[g] < 0) throw UnknownGenerator("generator not in enumerated subset");
  return local_of_[g];
}

std::shared_ptr<const EnumeratedGroup> EnumeratedGroup::build(const CoxeterMatrix& m, GenSet subset,
                                                              std::uint64_t cap) {
  if (!subset.subset_of(m.full_set())) throw UnknownGenerator("index out of range");
  auto group = std::shared_ptr<EnumeratedGroup>(new EnumeratedGroup());
  EnumeratedGroup& g = *group;
  g.subset_ = subset;
  g.gens_ = subset.to_vector();
  g.stride_ = g.gens_.size();
  g.fingerprint_ = m.fingerprint();
  g.local_of_.fill(-1);
  for (std::size_t j = 0; j < g.gens_.size(); ++j)
    g.local_of_[g.gens_[j]] = static_cast<std::int8_t>(j);
  g.local_order_.resize(g.stride_ * g.stride_, Order::infinity());
  for (std::size_t j = 0; j < g.stride_; ++j)
    for (std::size_t k = 0; k < g.stride_; ++k)
      g.local_order_[j * g.stride_ + k] = m.order(g.gens_[j], g.gens_[k]);
  g.lazy_ = std::make_shared<Lazy>();

  const std::size_t r = g.stride_;
  g.length_.push_back(0);
  g.parent_.push_back(0);
  g.parent_letter_.push_back(0);
  g.mult_.assign(r, kUndef);

  auto mult_at = [&](std::uint32_t v, std::size_t j) -> std::uint32_t& {
    return g.mult_[v * r + j];
  };

  // Breadth-first closure under right multiplication. When a vertex is
  // created, each of its remaining descent edges is forced by walking the
  // corresponding dihedral circuit, which is already complete below the new
  // layer. An undefined edge at scan time therefore always points to a fresh
  // element.
  for (std::uint32_t x = 0; x < g.length_.size(); ++x) {
    for (std::size_t j = 0; j < r; ++j) {
      if (mult_at(x, j) != kUndef) continue;
      if (g.length_.size() >= cap) throw CapExceeded(cap);
      std::uint32_t v = static_cast<std::uint32_t>(g.length_.size());
      g.length_.push_back(g.length_[x] + 1);
      g.parent_.push_back(x);
      g.parent_letter_.push_back(static_cast<std::uint8_t>(j));
      g.mult_.resize(g.mult_.size() + r, kUndef);
      mult_at(x, j) = v;
      mult_at(v, j) = x;
      for (std::size_t t = 0; t < r; ++t) {
        if (t == j) continue;
        Order m_jt = g.local_order_[j * r + t];
        if (!m_jt.is_finite()) continue;
        // v.t equals v.(j t j t ...) with 2m-1 letters.
        std::uint32_t cur = v;
        bool complete = true;
        const std::uint32_t steps = 2 * m_jt.value() - 1;
        for (std::uint32_t step = 0; step < steps; ++step) {
          std::size_t letter = (step % 2 == 0) ? j : t;
          cur = mult_at(cur, letter);
          if (cur == kUndef) {
            complete = false;
            break;
          }
        }
        if (complete) {
          mult_at(v, t) = cur;
          mult_at(cur, t) = v;
        }
      }
    }
  }
  return group;
}

std::uint32_t EnumeratedGroup::apply_word(std::uint32_t v, const Word& w) const {
  for (GenIndex g : w.letters) v = apply(v, g);
  return v;
}

std::uint32_t EnumeratedGroup::left_apply(GenIndex g, std::uint32_t v) const {
  const std::size_t j = static_cast<std::size_t>(local(g));
  auto& lz = *lazy_;
  std::lock_guard<std::mutex> lock(lz.mu);
  if (lz.left.empty()) {
    lz.left.assign(stride_ * size(), kUndef);
    for (std::size_t k = 0; k < stride_; ++k) {
      lz.left[k * size()] = mult_[k];  // k . identity
      for (std::uint32_t u = 1; u < size(); ++u)
        lz.left[k * size() + u] =
            mult_[lz.left[k * size() + parent_[u]] * stride_ + parent_letter_[u]];
    }
  }
  return lz.left[j * size() + v];
}

std::uint32_t EnumeratedGroup::multiply(std::uint32_t u, std::uint32_t v) const {
  // Apply v's discovery word to u.
  std::uint32_t chain = v;
  std::vector<std::uint8_t> buf;
  buf.reserve(length_[v]);
  while (chain != 0) {
    buf.push_back(parent_letter_[chain]);
    chain = parent_[chain];
  }
  for (auto it = buf.rbegin(); it != buf.rend(); ++it) u = mult_[u * stride_ + *it];
  return u;
}

std::uint32_t EnumeratedGroup::inverse(std::uint32_t v) const {
  {
    auto& lz = *lazy_;
    std::lock_guard<std::mutex> lock(lz.mu);
    if (!lz.inverse.empty()) return lz.inverse[v];
  }
  if (stride_ > 0) left_apply(gens_[0], 0);  // force left tables
  auto& lz = *lazy_;
  std::lock_guard<std::mutex> lock(lz.mu);
  if (lz.inverse.empty()) {
    lz.inverse.assign(size(), 0);
    for (std::uint32_t u = 1; u < size(); ++u)
      lz.inverse[u] = lz.left[parent_letter_[u] * size() + lz.inverse[parent_[u]]];
  }
  return lz.inverse[v];
}

std::uint32_t EnumeratedGroup::conjugate(std::uint32_t x, std::uint32_t by) const {
  return multiply(multiply(inverse(by), x), by);
}

std::uint32_t EnumeratedGroup::element_order(std::uint32_t v) const {
  std::uint32_t w = v;
  std::uint32_t k = 1;
  while (w != 0) {
    w = multiply(w, v);
    ++k;
  }
  return k;
}

const Word& EnumeratedGroup::normal_form(std::uint32_t v) const {
  auto& lz = *lazy_;
  std::lock_guard<std::mutex> lock(lz.mu);
  if (lz.normal_forms.empty()) {
    lz.normal_forms.resize(size());
    for (std::uint32_t u = 1; u < size(); ++u) {
      // Reduced words of u are exactly (reduced word of a descent) + letter;
      // descents have distinct normal forms, so comparing those suffices.
      const Word* best = nullptr;
      std::size_t best_letter = 0;
      for (std::size_t j = 0; j < stride_; ++j) {
        std::uint32_t down = mult_[u * stride_ + j];
        if (length_[down] >= length_[u]) continue;
        if (!best || lz.normal_forms[down].letters < best->letters) {
          best = &lz.normal_forms[down];
          best_letter = j;
        }
      }
      Word nf = *best;
      nf.letters.push_back(gens_[best_letter]);
      lz.normal_forms[u] = std::move(nf);
    }
  }
  return lz.normal_forms[v];
}

std::uint32_t EnumeratedGroup::longest() const {
  std::uint32_t max_len = 0;
  std::uint32_t arg = 0;
  std::uint32_t count = 0;
  for (std::uint32_t v = 0; v < size(); ++v) {
    if (length_[v] > max_len) {
      max_len = length_[v];
      arg = v;
      count = 1;
    } else if (length_[v] == max_len && v != 0) {
      ++count;
    }
  }
  if (size() == 1) return 0;
  if (count != 1) throw Error("no unique element of maximal length");
  return arg;
}

const std::vector<std::uint32_t>& EnumeratedGroup::center() const {
  if (stride_ > 0) left_apply(gens_[0], 0);
  auto& lz = *lazy_;
  std::lock_guard<std::mutex> lock(lz.mu);
  if (!lz.center_done) {
    for (std::uint32_t v = 0; v < size(); ++v) {
      bool central = true;
      for (std::size_t j = 0; j < stride_ && central; ++j)
        central = mult_[v * stride_ + j] == lz.left[j * size() + v];
      if (central) lz.center.push_back(v);
    }
    lz.center_done = true;
  }
  return lz.center;
}

const std::vector<std::uint32_t>& EnumeratedGroup::reflections() const {
  if (stride_ > 0) left_apply(gens_[0], 0);
  auto& lz = *lazy_;
  std::lock_guard<std::mutex> lock(lz.mu);
  if (!lz.reflections_done) {
    lz.is_reflection.assign(size(), false);
    std::vector<std::uint32_t> stack;
    for (std::size_t j = 0; j < stride_; ++j) {
      std::uint32_t g = mult_[j];  // identity * gens_[j]
      if (!lz.is_reflection[g]) {
        lz.is_reflection[g] = true;
        stack.push_back(g);
      }
    }
    while (!stack.empty()) {
      std::uint32_t t = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < stride_; ++j) {
        std::uint32_t c = lz.left[j * size() + mult_[t * stride_ + j]];  // j t j
        if (!lz.is_reflection[c]) {
          lz.is_reflection[c] = true;
          stack.push_back(c);
        }
      }
    }
    for (std::uint32_t v = 0; v < size(); ++v)
      if (lz.is_reflection[v]) lz.reflections.push_back(v);
    lz.reflections_done = true;
  }
  return lz.reflections;
}

bool EnumeratedGroup::is_reflection(std::uint32_t v) const {
  reflections();
  auto& lz = *lazy_;
  std::lock_guard<std::mutex> lock(lz.mu);
  return lz.is_reflection[v];
}

}  // namespace coxeter
