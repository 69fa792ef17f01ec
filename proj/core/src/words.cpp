#include "coxeter/words.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "coxeter/diagram.hpp"
#include "tits_rewriter.hpp"

namespace coxeter {

Word Word::parse(const CoxeterMatrix& m, std::string_view text) {
  Word out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) out.letters.push_back(m.index_of(tok));
  return out;
}

std::string Word::to_string(const CoxeterMatrix& m) const {
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out += " ";
    out += m.name(letters[i]);
  }
  return out;
}

std::string OrderResult::to_string() const {
  switch (kind) {
    case Kind::Finite: return std::to_string(value);
    case Kind::AboveCap: return "above-cap(" + std::to_string(value) + ")";
    case Kind::CertifiedInfinite: return "inf[" + certificate + "]";
  }
  return "?";
}

struct WordEngine::Impl {
  Impl(CoxeterMatrix mat, EngineLimits lim)
      : matrix(std::move(mat)), limits(lim), rewriter(matrix, lim.braid_budget) {}

  CoxeterMatrix matrix;
  EngineLimits limits;
  detail::TitsRewriter rewriter;

  std::mutex mu;
  // Cached parabolic enumerations; nullptr records a subset that exceeded the
  // engine cap so that repeated dispatch does not re-run the closure.
  std::map<std::uint64_t, std::shared_ptr<const EnumeratedGroup>> groups;

  std::shared_ptr<const EnumeratedGroup> lookup(GenSet subset, bool* known_failed) {
    std::lock_guard<std::mutex> lock(mu);
    auto it = groups.find(subset.bits());
    if (it == groups.end()) {
      *known_failed = false;
      return nullptr;
    }
    *known_failed = it->second == nullptr;
    return it->second;
  }

  void store(GenSet subset, std::shared_ptr<const EnumeratedGroup> g) {
    std::lock_guard<std::mutex> lock(mu);
    groups.emplace(subset.bits(), std::move(g));
  }
};

WordEngine::WordEngine(CoxeterMatrix m, EngineLimits limits)
    : impl_(std::make_unique<Impl>(std::move(m), limits)) {}
WordEngine::~WordEngine() = default;
WordEngine::WordEngine(WordEngine&&) noexcept = default;
WordEngine& WordEngine::operator=(WordEngine&&) noexcept = default;

const CoxeterMatrix& WordEngine::matrix() const { return impl_->matrix; }
const EngineLimits& WordEngine::limits() const { return impl_->limits; }

Element WordEngine::identity() const {
  return Element::from_normal_form(Word{}, impl_->matrix.fingerprint());
}

Element WordEngine::generator(GenIndex g) const {
  if (g >= impl_->matrix.rank()) throw UnknownGenerator("index out of range");
  return Element::from_normal_form(Word{{g}}, impl_->matrix.fingerprint());
}

Element WordEngine::reduce(const Word& w) const {
  return Element::from_normal_form(impl_->rewriter.reduce(w), impl_->matrix.fingerprint());
}

Element WordEngine::element(const Word& w) const {
  for (GenIndex g : w.letters)
    if (g >= impl_->matrix.rank()) throw UnknownGenerator("letter index out of range");
  auto grp = try_group(w.support());
  if (grp) return wrap(*grp, grp->vertex(w));
  return reduce(w);
}

Element WordEngine::multiply(const Element& x, const Element& y) const {
  const std::uint64_t fp = impl_->matrix.fingerprint();
  if (x.matrix_fingerprint() != fp || y.matrix_fingerprint() != fp) throw MixedMatrices();
  return element(x.word() + y.word());
}

Element WordEngine::inverse(const Element& x) const {
  if (x.matrix_fingerprint() != impl_->matrix.fingerprint()) throw MixedMatrices();
  return element(x.word().reversed());
}

Element WordEngine::conjugate(const Element& x, const Element& by) const {
  return element(by.word().reversed() + x.word() + by.word());
}

std::shared_ptr<const EnumeratedGroup> WordEngine::group(GenSet subset) const {
  return group(subset, impl_->limits.enumeration_cap);
}

std::shared_ptr<const EnumeratedGroup> WordEngine::group(GenSet subset, std::uint64_t cap) const {
  if (cap == impl_->limits.enumeration_cap) {
    bool failed = false;
    auto cached = impl_->lookup(subset, &failed);
    if (cached) return cached;
    if (failed) throw CapExceeded(cap);
    auto built = EnumeratedGroup::build(impl_->matrix, subset, cap);
    impl_->store(subset, built);
    return built;
  }
  return EnumeratedGroup::build(impl_->matrix, subset, cap);
}

std::shared_ptr<const EnumeratedGroup> WordEngine::try_group(GenSet subset) const {
  bool failed = false;
  auto cached = impl_->lookup(subset, &failed);
  if (cached) return cached;
  if (failed) return nullptr;
  try {
    auto built = EnumeratedGroup::build(impl_->matrix, subset, impl_->limits.enumeration_cap);
    impl_->store(subset, built);
    return built;
  } catch (const CapExceeded&) {
    impl_->store(subset, nullptr);
    return nullptr;
  }
}

Element WordEngine::longest_element(GenSet subset) const {
  auto grp = group(subset);
  return wrap(*grp, grp->longest());
}

std::vector<Element> WordEngine::center(GenSet subset) const {
  auto grp = group(subset);
  std::vector<Element> out;
  for (std::uint32_t v : grp->center()) out.push_back(wrap(*grp, v));
  return out;
}

OrderResult WordEngine::product_order(const Element& x, const Element& y) const {
  return product_order(x, y, impl_->limits.order_cap);
}

OrderResult WordEngine::product_order(const Element& x, const Element& y,
                                      std::uint64_t cap) const {
  Element z = multiply(x, y);
  if (z.is_identity()) return OrderResult::finite(1);
  auto grp = try_group(z.word().support());
  if (grp) {
    std::uint32_t order = grp->element_order(grp->vertex(z.word()));
    if (order <= cap) return OrderResult::finite(order);
    return OrderResult::above_cap(cap);
  }
  Element power = z;
  for (std::uint64_t k = 1; k <= cap; ++k) {
    if (power.is_identity()) return OrderResult::finite(k);
    power = multiply(power, z);
  }
  return OrderResult::above_cap(cap);
}

bool WordEngine::is_reflection_in(GenSet subset, const Element& x) const {
  if (x.matrix_fingerprint() != impl_->matrix.fingerprint()) throw MixedMatrices();
  if (!x.word().support().subset_of(subset))
    throw Error("element does not lie in the parabolic on " + impl_->matrix.set_to_string(subset));
  auto grp = group(subset);
  return grp->is_reflection(grp->vertex(x.word()));
}

int WordEngine::parity_character(GenIndex s, const Word& w) const {
  if (s >= impl_->matrix.rank()) throw UnknownGenerator("index out of range");
  if (!odd_class_is_singleton(impl_->matrix, s))
    throw OddClassNotSingleton(impl_->matrix.name(s));
  std::size_t count = 0;
  for (GenIndex g : w.letters) {
    if (g >= impl_->matrix.rank()) throw UnknownGenerator("letter index out of range");
    if (g == s) ++count;
  }
  return count % 2 == 0 ? +1 : -1;
}

Element WordEngine::wrap(const EnumeratedGroup& g, std::uint32_t v) const {
  return Element::from_normal_form(g.normal_form(v), impl_->matrix.fingerprint());
}

std::uint32_t WordEngine::vertex_in(const EnumeratedGroup& g, const Element& x) const {
  if (x.matrix_fingerprint() != impl_->matrix.fingerprint()) throw MixedMatrices();
  return g.vertex(x.word());
}

}  // namespace coxeter
