#include "stabpoly/double_description.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "stabpoly/graph.hpp"
#include "stabpoly/linalg.hpp"

namespace stabpoly {

namespace {

using Word = std::uint64_t;

class RaySet {
 public:
  RaySet(int dim, int words) : dim_(dim), words_(words) {}

  std::size_t size() const { return count_; }
  const std::int64_t* coords(std::size_t i) const { return &coords_[i * dim_]; }
  const Word* zeros(std::size_t i) const { return &zeros_[i * words_]; }
  Word* zeros(std::size_t i) { return &zeros_[i * words_]; }

  void push(const std::int64_t* c, const Word* z) {
    coords_.insert(coords_.end(), c, c + dim_);
    zeros_.insert(zeros_.end(), z, z + words_);
    ++count_;
  }

  void reserve(std::size_t n) {
    coords_.reserve(n * dim_);
    zeros_.reserve(n * words_);
  }

 private:
  int dim_;
  int words_;
  std::size_t count_ = 0;
  std::vector<std::int64_t> coords_;
  std::vector<Word> zeros_;
};

class Engine {
 public:
  Engine(const IntegerRows& a, const DDOptions& options)
      : a_(a), d_(static_cast<int>(a.cols())), m_(static_cast<int>(a.rows())), words_((m_ + 63) / 64),
        options_(options), rays_(d_, words_) {}

  IntegerRows run(DDStats* stats) {
    initial_cone();
    for (int k = 0; k < m_; ++k)
      if (!in_basis_[k]) insert(k);
    if (stats) *stats = stats_;
    IntegerRows out(static_cast<Eigen::Index>(rays_.size()), d_);
    std::vector<std::size_t> idx(rays_.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
      return std::lexicographical_compare(rays_.coords(x), rays_.coords(x) + d_, rays_.coords(y),
                                          rays_.coords(y) + d_);
    });
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (int c = 0; c < d_; ++c) out(static_cast<Eigen::Index>(r), c) = rays_.coords(idx[r])[c];
    return out;
  }

 private:
  std::vector<int> initial_cone() {
    in_basis_.assign(m_, false);
    IncrementalBasis<Rational> basis(d_);
    std::vector<int> chosen;
    for (int k = 0; k < m_ && !basis.full(); ++k) {
      RationalVector row(d_);
      for (int c = 0; c < d_; ++c) row(c) = Rational(a_(k, c));
      if (basis.insert(row.transpose())) {
        chosen.push_back(k);
        in_basis_[k] = true;
      }
    }
    if (!basis.full()) throw DomainError("cone constraints do not have full column rank");
    RationalMatrix ab(d_, d_);
    for (int r = 0; r < d_; ++r)
      for (int c = 0; c < d_; ++c) ab(r, c) = Rational(a_(chosen[r], c));
    std::vector<std::int64_t> c64(d_);
    std::vector<Word> z(words_);
    for (int j = 0; j < d_; ++j) {
      RationalVector e = RationalVector::Zero(d_);
      e(j) = 1;
      const RationalVector r = *exact_solve(ab, e);
      Integer den = common_denominator(r);
      Integer g = 0;
      std::vector<Integer> num(d_);
      for (int c = 0; c < d_; ++c) {
        num[c] = numerator(r(c) * Rational(den));
        g = gcd(g, num[c]);
      }
      for (int c = 0; c < d_; ++c) c64[c] = (num[c] / g).convert_to<std::int64_t>();
      std::fill(z.begin(), z.end(), 0);
      for (int i = 0; i < d_; ++i)
        if (i != j) z[chosen[i] / 64] |= Word{1} << (chosen[i] % 64);
      rays_.push(c64.data(), z.data());
    }
    return chosen;
  }

  std::int64_t dot(int k, const std::int64_t* r) const {
    __int128 s = 0;
    for (int c = 0; c < d_; ++c) s += static_cast<__int128>(a_(k, c)) * r[c];
    if (s > INT64_MAX || s < INT64_MIN) throw BudgetExceeded("double description: value overflow");
    return static_cast<std::int64_t>(s);
  }

  int common_count(std::size_t p, std::size_t q) const {
    const Word* zp = rays_.zeros(p);
    const Word* zq = rays_.zeros(q);
    int n = 0;
    for (int w = 0; w < words_; ++w) n += std::popcount(zp[w] & zq[w]);
    return n;
  }

  bool adjacent(std::size_t p, std::size_t q, std::vector<std::int64_t>& buf) const {
    const Word* zp = rays_.zeros(p);
    const Word* zq = rays_.zeros(q);
    buf.clear();
    int rows = 0;
    for (int w = 0; w < words_; ++w) {
      Word both = zp[w] & zq[w];
      while (both) {
        const int k = w * 64 + std::countr_zero(both);
        both &= both - 1;
        for (int c = 0; c < d_; ++c) buf.push_back(a_(k, c));
        ++rows;
      }
    }
    return bareiss_rank(buf, rows, d_, d_ - 2) >= d_ - 2;
  }

  void collect_pairs(const std::vector<std::size_t>& pos, std::size_t begin, std::size_t end,
                     const std::vector<std::size_t>& neg, std::vector<std::pair<std::size_t, std::size_t>>& out,
                     std::size_t& tests) const {
    std::vector<std::int64_t> buf;
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t q : neg) {
        if (common_count(pos[i], q) < d_ - 2) continue;
        ++tests;
        if (adjacent(pos[i], q, buf)) out.emplace_back(pos[i], q);
      }
  }

  void insert(int k) {
    const std::size_t count = rays_.size();
    std::vector<std::int64_t> s(count);
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < count; ++i) {
      s[i] = dot(k, rays_.coords(i));
      if (s[i] > 0) pos.push_back(i);
      if (s[i] < 0) neg.push_back(i);
    }
    if (neg.empty()) {
      mark_zero(k, s);
      return;
    }

    const int workers = std::max(1, std::min<int>(options_.workers, static_cast<int>(pos.size())));
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> found(workers);
    std::vector<std::size_t> tests(workers, 0);
    const std::size_t chunk = (pos.size() + workers - 1) / std::max(workers, 1);
    if (workers == 1) {
      collect_pairs(pos, 0, pos.size(), neg, found[0], tests[0]);
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < workers; ++t) {
        const std::size_t b = std::min(pos.size(), t * chunk);
        const std::size_t e = std::min(pos.size(), b + chunk);
        pool.emplace_back([&, t, b, e] { collect_pairs(pos, b, e, neg, found[t], tests[t]); });
      }
      for (auto& th : pool) th.join();
    }
    std::size_t fresh = 0;
    for (int t = 0; t < workers; ++t) {
      fresh += found[t].size();
      stats_.adjacency_tests += tests[t];
    }
    const std::size_t next_count = count - neg.size() + fresh;
    if (next_count > options_.ray_cap)
      throw BudgetExceeded("double description: " + std::to_string(next_count) + " rays exceed the cap of " +
                           std::to_string(options_.ray_cap));

    RaySet next(d_, words_);
    next.reserve(next_count);
    const Word bit = Word{1} << (k % 64);
    std::vector<Word> z(words_);
    for (std::size_t i = 0; i < count; ++i) {
      if (s[i] < 0) continue;
      std::copy(rays_.zeros(i), rays_.zeros(i) + words_, z.begin());
      if (s[i] == 0) z[k / 64] |= bit;
      next.push(rays_.coords(i), z.data());
    }
    std::vector<__int128> wide(d_);
    std::vector<std::int64_t> c64(d_);
    for (const auto& part : found)
      for (auto [p, q] : part) {
        const std::int64_t* rp = rays_.coords(p);
        const std::int64_t* rq = rays_.coords(q);
        __int128 g = 0;
        for (int c = 0; c < d_; ++c) {
          wide[c] = static_cast<__int128>(s[p]) * rq[c] - static_cast<__int128>(s[q]) * rp[c];
          g = gcd128(g, wide[c]);
        }
        for (int c = 0; c < d_; ++c) {
          const __int128 v = wide[c] / g;
          if (v > INT64_MAX / 4 || v < INT64_MIN / 4) throw BudgetExceeded("double description: ray overflow");
          c64[c] = static_cast<std::int64_t>(v);
        }
        for (int w = 0; w < words_; ++w) z[w] = rays_.zeros(p)[w] & rays_.zeros(q)[w];
        z[k / 64] |= bit;
        next.push(c64.data(), z.data());
      }
    rays_ = std::move(next);
    stats_.peak_rays = std::max(stats_.peak_rays, rays_.size());
  }

  void mark_zero(int k, const std::vector<std::int64_t>& s) {
    for (std::size_t i = 0; i < rays_.size(); ++i)
      if (s[i] == 0) rays_.zeros(i)[k / 64] |= Word{1} << (k % 64);
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  const IntegerRows& a_;
  int d_;
  int m_;
  int words_;
  DDOptions options_;
  RaySet rays_;
  std::vector<bool> in_basis_;
  DDStats stats_;
};

}  // namespace

IntegerRows extreme_rays(const IntegerRows& a, const DDOptions& options, DDStats* stats) {
  if (a.cols() < 1) throw DomainError("cone needs at least one coordinate");
  if (a.cols() == 1) {
    // A single coordinate: the cone is a half-line iff all rows agree in sign.
    bool has_pos = false, has_neg = false;
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      has_pos = has_pos || a(r, 0) > 0;
      has_neg = has_neg || a(r, 0) < 0;
    }
    if (has_pos && has_neg) return IntegerRows(0, 1);
    IntegerRows out(1, 1);
    out(0, 0) = has_neg ? -1 : 1;
    return out;
  }
  return Engine(a, options).run(stats);
}

}  // namespace stabpoly
