#include "tits_rewriter.hpp"

#include <deque>
#include <unordered_set>

namespace coxeter::detail {

namespace {

std::string pack(const Word& w) {
  std::string out;
  out.reserve(w.size());
  for (GenIndex g : w.letters) out.push_back(static_cast<char>(g));
  return out;
}

Word unpack(const std::string& s) {
  Word w;
  w.letters.reserve(s.size());
  for (char c : s) w.letters.push_back(static_cast<GenIndex>(static_cast<unsigned char>(c)));
  return w;
}

}  // namespace

Word TitsRewriter::reduce(const Word& w) const {
  Word nf;
  for (GenIndex g : w.letters) {
    if (g >= m_.rank()) throw UnknownGenerator("letter index out of range");
    nf = append(nf, g);
  }
  return nf;
}

Word TitsRewriter::append(const Word& nf, GenIndex s) const {
  std::string key = pack(nf);
  key.push_back(static_cast<char>(s));
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  Word candidate = nf;
  candidate.letters.push_back(s);
  std::uint64_t budget = budget_;
  Word result = normalize_class(std::move(candidate), budget);
  {
    std::lock_guard<std::mutex> lock(mu_);
    memo_.emplace(std::move(key), result);
  }
  return result;
}

Word TitsRewriter::normalize_class(Word w, std::uint64_t& budget) const {
  while (true) {
    if (w.size() <= 1) return w;
    std::string start = pack(w);
    std::unordered_set<std::string> seen{start};
    std::deque<std::string> queue{start};
    std::string best = start;
    bool cancelled = false;

    while (!queue.empty()) {
      std::string u = std::move(queue.front());
      queue.pop_front();

      bool has_pair = false;
      for (std::size_t i = 0; i + 1 < u.size(); ++i) {
        if (u[i] == u[i + 1]) {
          std::string shorter = u.substr(0, i) + u.substr(i + 2);
          w = unpack(shorter);
          has_pair = true;
          cancelled = true;
          break;
        }
      }
      if (has_pair) break;

      if (u < best) best = u;

      for (std::size_t i = 0; i + 1 < u.size(); ++i) {
        GenIndex a = static_cast<GenIndex>(static_cast<unsigned char>(u[i]));
        GenIndex b = static_cast<GenIndex>(static_cast<unsigned char>(u[i + 1]));
        Order m = m_.order(a, b);
        if (!m.is_finite()) continue;
        const std::size_t len = m.value();
        if (i + len > u.size()) continue;
        bool alternating = true;
        for (std::size_t k = 0; k < len && alternating; ++k)
          alternating = static_cast<unsigned char>(u[i + k]) == (k % 2 == 0 ? a : b);
        if (!alternating) continue;
        std::string v = u;
        for (std::size_t k = 0; k < len; ++k)
          v[i + k] = static_cast<char>(k % 2 == 0 ? b : a);
        if (seen.insert(v).second) {
          if (budget == 0)
            throw CapExceeded(budget_, "braid-class exploration budget exhausted");
          --budget;
          queue.push_back(std::move(v));
        }
      }
    }

    if (!cancelled) return unpack(best);
  }
}

}  // namespace coxeter::detail
