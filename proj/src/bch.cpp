#include "scring/bch.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <random>

namespace scring {

BchGroup::BchGroup(Algebra lie) : lie_(std::move(lie)) {
  AxiomReport rep = check_axioms(lie_);
  if (!rep.lie) throw error("BCH group requires a Lie ring");
  if (!rep.two_step_nilpotent) throw error("BCH group requires 2-step nilpotency");
  if (lie_.field()->characteristic() == 2) throw error("1/2 unavailable in characteristic 2");
  half_ = lie_.field()->from_rat(1, 2);
}

Element BchGroup::star(const Element& x, const Element& y) const {
  if (x.algebra != lie_ || y.algebra != lie_) throw error("element from a different group");
  Vec br = lie_.multiply(x.coords, y.coords);
  return {lie_, vec_add(vec_add(x.coords, y.coords), vec_scale(br, half_))};
}

Element BchGroup::group_commutator(const Element& x, const Element& y) const {
  return star(star(star(x, y), -x), -y);
}

Element BchGroup::recovered_add(const Element& x, const Element& y) const {
  Element br = group_commutator(x, y);
  return star(star(x, y), -br.scaled(half_));
}

Algebra BchGroup::recovered_algebra() const {
  std::size_t n = lie_.dim();
  std::vector<TensorEntry> tensor;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Element br = group_commutator(basis_element(lie_, i), basis_element(lie_, j));
      for (std::size_t k = 0; k < n; ++k)
        if (!br.coords[k].is_zero()) tensor.push_back({i, j, k, br.coords[k]});
    }
  return Algebra(lie_.field(), lie_.basis_names(), std::move(tensor));
}

namespace {

// enumeration of a finite-field algebra by mixed-radix coordinates
struct Enumerator {
  const Algebra& a;
  std::uint64_t q;
  std::uint64_t count;

  explicit Enumerator(const Algebra& alg) : a(alg), q(alg.field()->size()) {
    count = 1;
    for (std::size_t i = 0; i < a.dim(); ++i) count *= q;
  }
  Vec decode(std::uint64_t idx) const {
    Vec v;
    v.reserve(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
      v.push_back(a.field()->element_at(idx % q));
      idx /= q;
    }
    return v;
  }
};

// dense integer structure tensor for prime fields
struct PrimeTables {
  std::int64_t p;
  std::size_t n;
  std::int64_t half;
  std::vector<std::int64_t> tensor;  // n^3, [i][j][k]

  explicit PrimeTables(const Algebra& a)
      : p(a.field()->p()), n(a.dim()), tensor(a.dim() * a.dim() * a.dim(), 0) {
    if (n > 64) throw error("exhaustive prime path bounded at dimension 64");
    half = 0;
    for (std::int64_t h = 1; h < p; ++h)
      if ((2 * h) % p == 1) half = h;
    for (const auto& e : a.tensor())
      tensor[(e.i * n + e.j) * n + e.k] = std::get<std::int64_t>(e.c.payload());
  }

  void decode(std::uint64_t idx, std::int64_t* out) const {
    for (std::size_t i = 0; i < n; ++i) {
      out[i] = static_cast<std::int64_t>(idx % static_cast<std::uint64_t>(p));
      idx /= static_cast<std::uint64_t>(p);
    }
  }
  std::uint64_t encode(const std::int64_t* v) const {
    std::uint64_t idx = 0;
    for (std::size_t i = n; i-- > 0;)
      idx = idx * static_cast<std::uint64_t>(p) + static_cast<std::uint64_t>(v[i]);
    return idx;
  }
  // callers may pass out aliasing x or y; the bracket is finished first
  void star(const std::int64_t* x, const std::int64_t* y, std::int64_t* out) const {
    std::array<std::int64_t, 64> br{};
    for (std::size_t k = 0; k < n; ++k) {
      std::int64_t acc = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
          std::int64_t c = tensor[(i * n + j) * n + k];
          if (c != 0 && y[j] != 0) acc += x[i] * y[j] % p * c % p;
        }
      }
      br[k] = acc % p;
    }
    for (std::size_t k = 0; k < n; ++k)
      out[k] = ((x[k] + y[k] + half * br[k]) % p + p) % p;
  }
};

}  // namespace

GroupCheckReport check_group(const BchGroup& g, bool exhaustive, std::uint64_t seed,
                             std::size_t samples) {
  GroupCheckReport rep;
  const Algebra& L = g.algebra();
  const Field& f = L.field();
  rep.exhaustive = exhaustive;

  if (exhaustive) {
    if (!f->finite()) throw error("exhaustive check requires a finite field");
    Enumerator en(L);
    if (en.count > 20000) throw error("exhaustive check bounded at 20000 elements");
    rep.elements = en.count;

    if (f->kind() == FieldKind::prime) {
      PrimeTables t(L);
      std::size_t n = L.dim();
      std::uint64_t cnt = en.count;
      // star table: cnt^2 products, then associativity by table lookup
      std::vector<std::uint64_t> table;
      bool use_table = cnt * cnt <= (1u << 22);
      std::vector<std::int64_t> xd(n), yd(n), zd(n), t1(n), t2(n), t3(n);
      if (use_table) {
        table.resize(cnt * cnt);
        for (std::uint64_t x = 0; x < cnt; ++x) {
          t.decode(x, xd.data());
          for (std::uint64_t y = 0; y < cnt; ++y) {
            t.decode(y, yd.data());
            t.star(xd.data(), yd.data(), t1.data());
            table[x * cnt + y] = t.encode(t1.data());
          }
        }
      }
      rep.associative = true;
      if (use_table) {
        for (std::uint64_t x = 0; x < cnt && rep.associative; ++x)
          for (std::uint64_t y = 0; y < cnt && rep.associative; ++y) {
            std::uint64_t xy = table[x * cnt + y];
            for (std::uint64_t z = 0; z < cnt; ++z) {
              ++rep.triples_checked;
              if (table[xy * cnt + z] != table[x * cnt + table[y * cnt + z]]) {
                rep.associative = false;
                rep.failure = "associativity fails";
                break;
              }
            }
          }
      } else {
        for (std::uint64_t x = 0; x < cnt && rep.associative; ++x) {
          t.decode(x, xd.data());
          for (std::uint64_t y = 0; y < cnt && rep.associative; ++y) {
            t.decode(y, yd.data());
            t.star(xd.data(), yd.data(), t1.data());
            for (std::uint64_t z = 0; z < cnt; ++z) {
              ++rep.triples_checked;
              t.decode(z, zd.data());
              t.star(t1.data(), zd.data(), t2.data());
              t.star(yd.data(), zd.data(), t3.data());
              t.star(xd.data(), t3.data(), t3.data());
              if (!std::equal(t2.begin(), t2.end(), t3.begin())) {
                rep.associative = false;
                rep.failure = "associativity fails";
                break;
              }
            }
          }
        }
      }
      // identity, inverses, n-fold powers
      rep.identity_ok = true;
      rep.inverses_ok = true;
      rep.power_ok = true;
      std::vector<std::int64_t> zero(n, 0), acc(n), sum(n);
      for (std::uint64_t x = 0; x < cnt; ++x) {
        t.decode(x, xd.data());
        t.star(xd.data(), zero.data(), t1.data());
        t.star(zero.data(), xd.data(), t2.data());
        if (!std::equal(t1.begin(), t1.end(), xd.begin()) ||
            !std::equal(t2.begin(), t2.end(), xd.begin()))
          rep.identity_ok = false;
        for (std::size_t i = 0; i < n; ++i) yd[i] = (t.p - xd[i]) % t.p;
        t.star(xd.data(), yd.data(), t1.data());
        if (!std::equal(t1.begin(), t1.end(), zero.begin())) rep.inverses_ok = false;
        // x * ... * x = x + ... + x up to 10 factors
        std::copy(xd.begin(), xd.end(), acc.begin());
        std::copy(xd.begin(), xd.end(), sum.begin());
        for (int m = 2; m <= 10; ++m) {
          t.star(acc.data(), xd.data(), acc.data());
          for (std::size_t i = 0; i < n; ++i) sum[i] = (sum[i] + xd[i]) % t.p;
          if (!std::equal(acc.begin(), acc.end(), sum.begin())) rep.power_ok = false;
        }
      }
      // group center by enumeration vs the Lie center
      {
        std::vector<bool> central(cnt, true);
        for (std::uint64_t x = 0; x < cnt; ++x) {
          t.decode(x, xd.data());
          for (std::uint64_t y = 0; y < cnt; ++y) {
            t.decode(y, yd.data());
            t.star(xd.data(), yd.data(), t1.data());
            t.star(yd.data(), xd.data(), t2.data());
            if (!std::equal(t1.begin(), t1.end(), t2.begin())) {
              central[x] = false;
              break;
            }
          }
        }
        // Lie center: pairwise products vanish
        std::uint64_t mismatch = 0;
        for (std::uint64_t x = 0; x < cnt; ++x) {
          t.decode(x, xd.data());
          bool lie_central = true;
          for (std::size_t j = 0; j < n && lie_central; ++j) {
            std::int64_t br = 0;
            for (std::size_t k = 0; k < n && lie_central; ++k) {
              br = 0;
              for (std::size_t i = 0; i < n; ++i)
                br += xd[i] * t.tensor[(i * n + j) * n + k] % t.p;
              if (br % t.p != 0) lie_central = false;
            }
          }
          if (lie_central != central[x]) ++mismatch;
        }
        rep.center_matches = mismatch == 0;
      }
    } else {
      // generic exact path for small non-prime cases
      Enumerator e2(L);
      if (e2.count > 64) throw error("exhaustive check over non-prime fields bounded at 64");
      std::vector<Element> elems;
      for (std::uint64_t i = 0; i < e2.count; ++i) elems.push_back({L, e2.decode(i)});
      rep.associative = true;
      for (const auto& x : elems)
        for (const auto& y : elems)
          for (const auto& z : elems) {
            ++rep.triples_checked;
            if (!(g.star(g.star(x, y), z) == g.star(x, g.star(y, z)))) {
              rep.associative = false;
              rep.failure = "associativity fails";
            }
          }
      rep.identity_ok = rep.inverses_ok = rep.power_ok = true;
      Element zero = zero_element(L);
      for (const auto& x : elems) {
        if (!(g.star(x, zero) == x) || !(g.star(zero, x) == x)) rep.identity_ok = false;
        if (!g.star(x, -x).is_zero()) rep.inverses_ok = false;
        Element acc = x, sum = x;
        for (int m = 2; m <= 10; ++m) {
          acc = g.star(acc, x);
          sum = sum + x;
          if (!(acc == sum)) rep.power_ok = false;
        }
      }
      rep.center_matches = true;
      for (const auto& x : elems) {
        bool group_central = true, lie_central = true;
        for (const auto& y : elems) {
          if (!(g.star(x, y) == g.star(y, x))) group_central = false;
          if (!(x * y).is_zero()) lie_central = false;
        }
        if (group_central != lie_central) rep.center_matches = false;
      }
    }
  } else {
    std::mt19937_64 rng(seed);
    Enumerator* en = nullptr;
    std::unique_ptr<Enumerator> holder;
    if (f->finite()) {
      holder = std::make_unique<Enumerator>(L);
      en = holder.get();
    }
    auto random_element = [&]() -> Element {
      Vec v = L.zero_vec();
      for (std::size_t i = 0; i < L.dim(); ++i) {
        if (en)
          v[i] = f->element_at(rng() % f->size());
        else
          v[i] = f->from_int(static_cast<std::int64_t>(rng() % 19) - 9);
      }
      return {L, std::move(v)};
    };
    rep.associative = rep.identity_ok = rep.inverses_ok = rep.power_ok = true;
    for (std::size_t s = 0; s < samples; ++s) {
      Element x = random_element(), y = random_element(), z = random_element();
      ++rep.triples_checked;
      if (!(g.star(g.star(x, y), z) == g.star(x, g.star(y, z)))) {
        rep.associative = false;
        rep.failure = "associativity fails";
      }
      if (!(g.star(x, zero_element(L)) == x)) rep.identity_ok = false;
      if (!g.star(x, -x).is_zero()) rep.inverses_ok = false;
      Element acc = x, sum = x;
      for (int m = 2; m <= 10; ++m) {
        acc = g.star(acc, x);
        sum = sum + x;
        if (!(acc == sum)) rep.power_ok = false;
      }
    }
    rep.center_matches = true;  // enumeration-only property
  }

  // group commutator equals the bracket on basis pairs
  rep.commutator_matches = true;
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = 0; j < L.dim(); ++j) {
      Element x = basis_element(L, i), y = basis_element(L, j);
      if (!(g.group_commutator(x, y) == x * y)) rep.commutator_matches = false;
    }

  rep.ok = rep.associative && rep.identity_ok && rep.inverses_ok && rep.power_ok &&
           rep.center_matches && rep.commutator_matches;
  if (!rep.ok && rep.failure.empty()) rep.failure = "a group property failed";
  return rep;
}

}  // namespace scring
