#pragma once

/// Finite commutative unital rings with exhaustively validated operation
/// tables, and the ideal layer built on top of them: lattice enumeration,
/// Jacobson radical, radical of an ideal, colon ideals and annihilators.
///
/// Elements are canonical indices 0..order-1 with 0 the additive identity.
/// Every ring is validated at construction: all eight ring axioms are checked
/// over every element pair/triple, and the zero ring (1 = 0) is rejected.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "jmodlab/index_set.hpp"

namespace jmodlab {

using elem = std::uint16_t;

// Hard construction cap; corpus files typically declare a lower one.
inline constexpr std::size_t kMaxOrder = 64;

enum class RingTag { zn, product, quotient, idealization, localization, tables };

class FiniteModule;  // for idealization provenance

struct RingProvenance {
  RingTag tag = RingTag::tables;
  std::string spec;  // canonical descriptor text, e.g. "zn(12)"
  // Set for product rings: the factors, left factor most significant.
  std::vector<std::shared_ptr<const class FiniteRing>> factors;
  // Set for idealization rings: base ring and module (elements are pairs
  // encoded as r * |M| + m).
  std::shared_ptr<const class FiniteRing> base_ring;
  std::shared_ptr<const FiniteModule> base_module;
};

class FiniteRing {
public:
  // Builds a ring from raw tables and validates it exhaustively.
  // Throws std::invalid_argument when an axiom fails or 1 = 0.
  static std::shared_ptr<const FiniteRing> from_tables(
      std::size_t n, elem one, std::vector<elem> add, std::vector<elem> mul,
      std::vector<elem> neg, RingProvenance prov);

  std::size_t order() const { return n_; }
  elem zero() const { return 0; }
  elem one() const { return one_; }

  elem add(elem a, elem b) const { return add_[std::size_t(a) * n_ + b]; }
  elem mul(elem a, elem b) const { return mul_[std::size_t(a) * n_ + b]; }
  elem neg(elem a) const { return neg_[a]; }
  elem sub(elem a, elem b) const { return add(a, neg(b)); }

  elem pow(elem a, unsigned k) const {
    elem r = one_;
    for (unsigned i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }

  bool is_unit(elem a) const { return units_.test(a); }
  const IndexSet& units() const { return units_; }
  std::size_t unit_count() const { return units_.count(); }

  const RingProvenance& provenance() const { return prov_; }

private:
  FiniteRing(std::size_t n, elem one, std::vector<elem> add,
             std::vector<elem> mul, std::vector<elem> neg, RingProvenance prov)
      : n_(n), one_(one), add_(std::move(add)), mul_(std::move(mul)),
        neg_(std::move(neg)), prov_(std::move(prov)), units_(n) {}

  void validate() const;
  void scan_units();

  std::size_t n_;
  elem one_;
  std::vector<elem> add_, mul_;  // n*n, row-major
  std::vector<elem> neg_;       // n
  RingProvenance prov_;
  IndexSet units_;
};

using RingPtr = std::shared_ptr<const FiniteRing>;

inline void FiniteRing::validate() const {
  if (n_ < 2) throw std::invalid_argument("ring: order must be at least 2 (zero ring rejected)");
  if (one_ == 0) throw std::invalid_argument("ring: 1 = 0 (zero ring rejected)");
  if (add_.size() != n_ * n_ || mul_.size() != n_ * n_ || neg_.size() != n_)
    throw std::invalid_argument("ring: table size mismatch");
  for (elem v : add_) if (v >= n_) throw std::invalid_argument("ring: add table out of range");
  for (elem v : mul_) if (v >= n_) throw std::invalid_argument("ring: mul table out of range");
  for (elem v : neg_) if (v >= n_) throw std::invalid_argument("ring: neg table out of range");

  for (std::size_t a = 0; a < n_; ++a) {
    const elem ea = static_cast<elem>(a);
    if (add(0, ea) != ea) throw std::invalid_argument("ring: 0 is not an additive identity");
    if (add(ea, neg(ea)) != 0) throw std::invalid_argument("ring: missing additive inverse");
    if (mul(one_, ea) != ea) throw std::invalid_argument("ring: 1 is not a multiplicative identity");
    for (std::size_t b = 0; b < n_; ++b) {
      const elem eb = static_cast<elem>(b);
      if (add(ea, eb) != add(eb, ea)) throw std::invalid_argument("ring: addition not commutative");
      if (mul(ea, eb) != mul(eb, ea)) throw std::invalid_argument("ring: multiplication not commutative");
      for (std::size_t c = 0; c < n_; ++c) {
        const elem ec = static_cast<elem>(c);
        if (add(add(ea, eb), ec) != add(ea, add(eb, ec)))
          throw std::invalid_argument("ring: addition not associative");
        if (mul(mul(ea, eb), ec) != mul(ea, mul(eb, ec)))
          throw std::invalid_argument("ring: multiplication not associative");
        if (mul(ea, add(eb, ec)) != add(mul(ea, eb), mul(ea, ec)))
          throw std::invalid_argument("ring: distributivity fails");
      }
    }
  }
}

inline void FiniteRing::scan_units() {
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b)
      if (mul(static_cast<elem>(a), static_cast<elem>(b)) == one_) {
        units_.set(a);
        break;
      }
}

inline std::shared_ptr<const FiniteRing> FiniteRing::from_tables(
    std::size_t n, elem one, std::vector<elem> add, std::vector<elem> mul,
    std::vector<elem> neg, RingProvenance prov) {
  if (n > kMaxOrder) throw std::invalid_argument("ring: order exceeds cap " + std::to_string(kMaxOrder));
  auto r = std::shared_ptr<FiniteRing>(new FiniteRing(
      n, one, std::move(add), std::move(mul), std::move(neg), std::move(prov)));
  r->validate();
  r->scan_units();
  return r;
}

/// Z/nZ with residue encoding. Requires n >= 2.
inline RingPtr ring_zn(std::size_t n) {
  if (n < 2) throw std::invalid_argument("zn: n must be at least 2");
  std::vector<elem> add(n * n), mul(n * n), neg(n);
  for (std::size_t a = 0; a < n; ++a) {
    neg[a] = static_cast<elem>((n - a) % n);
    for (std::size_t b = 0; b < n; ++b) {
      add[a * n + b] = static_cast<elem>((a + b) % n);
      mul[a * n + b] = static_cast<elem>((a * b) % n);
    }
  }
  RingProvenance prov;
  prov.tag = RingTag::zn;
  prov.spec = "zn(" + std::to_string(n) + ")";
  return FiniteRing::from_tables(n, 1, std::move(add), std::move(mul), std::move(neg), std::move(prov));
}

/// Direct product; mixed-radix element encoding with the left factor most
/// significant.
inline RingPtr ring_product(std::vector<RingPtr> factors) {
  if (factors.size() < 2) throw std::invalid_argument("product ring: need at least two factors");
  std::size_t n = 1;
  for (const auto& f : factors) {
    n *= f->order();
    if (n > kMaxOrder) throw std::invalid_argument("product ring: order exceeds cap");
  }
  const std::size_t k = factors.size();
  auto decode = [&](std::size_t x) {
    std::vector<elem> c(k);
    for (std::size_t i = k; i-- > 0;) {
      c[i] = static_cast<elem>(x % factors[i]->order());
      x /= factors[i]->order();
    }
    return c;
  };
  auto encode = [&](const std::vector<elem>& c) {
    std::size_t x = 0;
    for (std::size_t i = 0; i < k; ++i) x = x * factors[i]->order() + c[i];
    return x;
  };
  std::vector<elem> add(n * n), mul(n * n), neg(n);
  std::vector<elem> onec(k);
  for (std::size_t i = 0; i < k; ++i) onec[i] = factors[i]->one();
  for (std::size_t a = 0; a < n; ++a) {
    auto ca = decode(a);
    std::vector<elem> cn(k);
    for (std::size_t i = 0; i < k; ++i) cn[i] = factors[i]->neg(ca[i]);
    neg[a] = static_cast<elem>(encode(cn));
    for (std::size_t b = 0; b < n; ++b) {
      auto cb = decode(b);
      std::vector<elem> cs(k), cp(k);
      for (std::size_t i = 0; i < k; ++i) {
        cs[i] = factors[i]->add(ca[i], cb[i]);
        cp[i] = factors[i]->mul(ca[i], cb[i]);
      }
      add[a * n + b] = static_cast<elem>(encode(cs));
      mul[a * n + b] = static_cast<elem>(encode(cp));
    }
  }
  RingProvenance prov;
  prov.tag = RingTag::product;
  prov.spec = "product(";
  for (std::size_t i = 0; i < k; ++i) {
    if (i) prov.spec += ",";
    prov.spec += factors[i]->provenance().spec;
  }
  prov.spec += ")";
  prov.factors = factors;
  return FiniteRing::from_tables(n, static_cast<elem>(encode(onec)),
                                 std::move(add), std::move(mul), std::move(neg), std::move(prov));
}

class Ideal {
public:
  Ideal() = default;
  Ideal(RingPtr ring, IndexSet members)
      : ring_(std::move(ring)), members_(std::move(members)) {}

  const RingPtr& ring() const { return ring_; }
  const IndexSet& members() const { return members_; }
  std::size_t size() const { return members_.count(); }
  bool contains(elem a) const { return members_.test(a); }
  bool is_zero() const { return members_.count() == 1; }
  bool is_proper() const { return members_.count() < ring_->order(); }

  bool operator==(const Ideal& o) const { return members_ == o.members_; }
  bool operator!=(const Ideal& o) const { return !(*this == o); }

private:
  RingPtr ring_;
  IndexSet members_;
};

// Closes a seed set under addition. The seed must already be closed under
// ring multiplication for the result to be an ideal.
inline IndexSet additive_closure(const FiniteRing& R, IndexSet seed) {
  seed.set(0);
  std::vector<elem> list = {};
  seed.for_each([&](std::size_t i) { list.push_back(static_cast<elem>(i)); });
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      elem s = R.add(list[i], list[j]);
      if (!seed.test(s)) {
        seed.set(s);
        list.push_back(s);
      }
    }
  return seed;
}

/// Smallest ideal containing gens; the empty set yields the zero ideal.
inline Ideal ideal_generated(const RingPtr& R, std::span<const elem> gens) {
  IndexSet seed(R->order());
  seed.set(0);
  for (elem g : gens) {
    if (g >= R->order()) throw std::invalid_argument("ideal_generated: generator out of range");
    for (std::size_t r = 0; r < R->order(); ++r) seed.set(R->mul(static_cast<elem>(r), g));
  }
  return Ideal(R, additive_closure(*R, std::move(seed)));
}

inline Ideal zero_ideal(const RingPtr& R) {
  IndexSet s(R->order());
  s.set(0);
  return Ideal(R, s);
}

inline Ideal unit_ideal(const RingPtr& R) {
  return Ideal(R, IndexSet::full(R->order()));
}

inline Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  return Ideal(a.ring(), additive_closure(*a.ring(), a.members() | b.members()));
}

inline Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
  return Ideal(a.ring(), a.members() & b.members());
}

/// Product ideal IJ: additive closure of all pairwise products.
inline Ideal ideal_product(const Ideal& a, const Ideal& b) {
  const auto& R = *a.ring();
  IndexSet seed(R.order());
  seed.set(0);
  a.members().for_each([&](std::size_t x) {
    b.members().for_each([&](std::size_t y) {
      seed.set(R.mul(static_cast<elem>(x), static_cast<elem>(y)));
    });
  });
  return Ideal(a.ring(), additive_closure(R, std::move(seed)));
}

/// The complete ideal lattice: all unions of cyclic ideals closed under
/// pairwise sum to a fixpoint, deduplicated and canonically ordered
/// (by cardinality, then member list).
inline std::vector<Ideal> enumerate_ideals(const RingPtr& R) {
  std::set<IndexSet> seen;
  std::vector<IndexSet> work;
  auto push = [&](const IndexSet& s) {
    if (seen.insert(s).second) work.push_back(s);
  };
  {
    IndexSet z(R->order());
    z.set(0);
    push(z);
  }
  for (std::size_t g = 0; g < R->order(); ++g) {
    elem eg = static_cast<elem>(g);
    push(ideal_generated(R, std::span<const elem>(&eg, 1)).members());
  }
  for (std::size_t i = 0; i < work.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      push(additive_closure(*R, work[i] | work[j]));

  std::sort(work.begin(), work.end(),
            [](const IndexSet& a, const IndexSet& b) { return a.canonical_less(b); });
  std::vector<Ideal> out;
  out.reserve(work.size());
  for (auto& s : work) out.emplace_back(R, std::move(s));
  return out;
}

/// Colon ideal (I : J) = {r : rJ contained in I} for a nonempty subset J of R.
inline Ideal colon_ideal(const RingPtr& R, const Ideal& I, const IndexSet& J) {
  if (J.empty()) throw std::invalid_argument("colon_ideal: empty denominator");
  IndexSet out(R->order());
  for (std::size_t r = 0; r < R->order(); ++r) {
    bool ok = true;
    J.for_each([&](std::size_t j) {
      if (ok && !I.contains(R->mul(static_cast<elem>(r), static_cast<elem>(j)))) ok = false;
    });
    if (ok) out.set(r);
  }
  return Ideal(R, std::move(out));
}

/// Ann(S) = (0 : S).
inline Ideal annihilator(const RingPtr& R, const IndexSet& S) {
  return colon_ideal(R, zero_ideal(R), S);
}

/// Radical of I: all a with a^k in I for some 1 <= k <= order(R).
inline Ideal radical_of_ideal(const RingPtr& R, const Ideal& I) {
  IndexSet out(R->order());
  for (std::size_t a = 0; a < R->order(); ++a) {
    elem p = R->one();
    for (std::size_t k = 1; k <= R->order(); ++k) {
      p = R->mul(p, static_cast<elem>(a));
      if (I.contains(p)) {
        out.set(a);
        break;
      }
    }
  }
  return Ideal(R, std::move(out));
}

inline bool is_maximal_in(const Ideal& I, const std::vector<Ideal>& lattice) {
  if (!I.is_proper()) return false;
  for (const auto& J : lattice) {
    if (!J.is_proper() || J.members() == I.members()) continue;
    if (J.members().contains(I.members()) && J.size() > I.size()) return false;
  }
  return true;
}

inline std::vector<Ideal> maximal_ideals(const RingPtr& R, const std::vector<Ideal>& lattice) {
  std::vector<Ideal> out;
  for (const auto& I : lattice)
    if (is_maximal_in(I, lattice)) out.push_back(I);
  (void)R;
  return out;
}

/// J(R) as the intersection of all maximal ideals.
inline Ideal jacobson_via_maximal_ideals(const RingPtr& R) {
  auto lattice = enumerate_ideals(R);
  IndexSet acc = IndexSet::full(R->order());
  bool any = false;
  for (const auto& I : lattice)
    if (is_maximal_in(I, lattice)) {
      acc &= I.members();
      any = true;
    }
  if (!any) throw std::logic_error("jacobson: no maximal ideal found");
  return Ideal(R, std::move(acc));
}

/// J(R) by the unit criterion: r in J(R) iff 1 - rs is a unit for every s.
inline Ideal jacobson_via_units(const RingPtr& R) {
  IndexSet out(R->order());
  for (std::size_t r = 0; r < R->order(); ++r) {
    bool ok = true;
    for (std::size_t s = 0; s < R->order() && ok; ++s)
      if (!R->is_unit(R->sub(R->one(), R->mul(static_cast<elem>(r), static_cast<elem>(s)))))
        ok = false;
    if (ok) out.set(r);
  }
  return Ideal(R, std::move(out));
}

/// Jacobson radical, computed by both algorithms; they must agree.
inline Ideal jacobson_radical(const RingPtr& R) {
  Ideal a = jacobson_via_maximal_ideals(R);
  Ideal b = jacobson_via_units(R);
  if (a.members() != b.members())
    throw std::logic_error("jacobson: maximal-intersection and unit-criterion disagree on " +
                           R->provenance().spec);
  return a;
}

/// Quotient ring R/I. Elements are cosets indexed by ascending minimal
/// representative; the coset of 0 gets index 0.
inline RingPtr ring_quotient(const RingPtr& R, const Ideal& I) {
  if (!I.is_proper()) throw std::invalid_argument("quotient: ideal must be proper");
  const std::size_t n = R->order();
  std::vector<int> coset_of(n, -1);
  std::vector<elem> reps;
  for (std::size_t a = 0; a < n; ++a) {
    if (coset_of[a] >= 0) continue;
    int idx = static_cast<int>(reps.size());
    reps.push_back(static_cast<elem>(a));
    I.members().for_each([&](std::size_t i) {
      coset_of[R->add(static_cast<elem>(a), static_cast<elem>(i))] = idx;
    });
  }
  const std::size_t m = reps.size();
  std::vector<elem> add(m * m), mul(m * m), neg(m);
  for (std::size_t a = 0; a < m; ++a) {
    neg[a] = static_cast<elem>(coset_of[R->neg(reps[a])]);
    for (std::size_t b = 0; b < m; ++b) {
      add[a * m + b] = static_cast<elem>(coset_of[R->add(reps[a], reps[b])]);
      mul[a * m + b] = static_cast<elem>(coset_of[R->mul(reps[a], reps[b])]);
    }
  }
  RingProvenance prov;
  prov.tag = RingTag::quotient;
  auto gens = I.members().members();
  prov.spec = "quotient(" + R->provenance().spec + ",[";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) prov.spec += ",";
    prov.spec += std::to_string(gens[i]);
  }
  prov.spec += "])";
  return FiniteRing::from_tables(m, static_cast<elem>(coset_of[R->one()]),
                                 std::move(add), std::move(mul), std::move(neg), std::move(prov));
}

}  // namespace jmodlab
