// Copyright (c) 2026 the aclambda authors
//
// This file is part of aclambda.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "aclambda/factor.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "aclambda/arith.hpp"
#include "aclambda/errors.hpp"

namespace aclambda {

namespace {

bool miller_rabin_u64(std::uint64_t n, std::uint64_t a) {
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  std::uint64_t x = powmod_u64(a % n, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned i = 1; i < s; ++i) {
    x = mulmod_u64(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

// Complete deterministic base set below 3.3 * 10^24, so for all of 64 bits.
constexpr std::uint64_t kMrBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool miller_rabin_big(const BigInt& n, const BigInt& a) {
  BigInt n1 = n - BigInt(1);
  BigInt d = n1;
  unsigned long s = 0;
  while (!d.is_odd()) {
    mpz_fdiv_q_2exp(d.raw(), d.raw(), 1);
    ++s;
  }
  BigInt x = BigInt::pow_mod(a, d, n);
  if (x == BigInt(1) || x == n1) return true;
  for (unsigned long i = 1; i < s; ++i) {
    x = (x * x).mod_floor(n);
    if (x == n1) return true;
    if (x == BigInt(1)) return false;
  }
  return false;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : kMrBases) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  for (std::uint64_t a : kMrBases)
    if (!miller_rabin_u64(n, a)) return false;
  return true;
}

bool is_prime(const BigInt& n) {
  if (n.sign() <= 0) return false;
  if (n.fits_u64()) return is_prime_u64(n.to_u64());
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u, 43u, 47u})
    if (mpz_divisible_ui_p(n.raw(), p)) return false;
  // 64 independent rounds, error probability below 4^-64. Bases come from a
  // fixed-seed generator so every run sees the same witnesses.
  std::mt19937_64 rng(0x61c1a5bd5ull);
  BigInt n3 = n - BigInt(3);
  std::size_t words = (n.bit_length() + 63) / 64 + 1;
  for (int round = 0; round < 64; ++round) {
    BigInt base(0);
    for (std::size_t w = 0; w < words; ++w) {
      mpz_mul_2exp(base.raw(), base.raw(), 64);
      BigInt word(static_cast<unsigned long long>(rng()));
      base += word;
    }
    base = base.mod_floor(n3) + BigInt(2);
    if (!miller_rabin_big(n, base)) return false;
  }
  return true;
}

std::vector<std::uint32_t> small_primes(std::uint32_t bound) {
  std::vector<std::uint32_t> out;
  if (bound < 2) return out;
  std::vector<bool> comp(static_cast<std::size_t>(bound) + 1, false);
  for (std::uint64_t i = 2; i * i <= bound; ++i)
    if (!comp[i])
      for (std::uint64_t j = i * i; j <= bound; j += i) comp[j] = true;
  for (std::uint32_t i = 2; i <= bound; ++i)
    if (!comp[i]) out.push_back(i);
  return out;
}

namespace {

// ---- Pollard rho (Brent variant, batched gcd) on 64-bit cofactors ----

std::uint64_t rho_u64(std::uint64_t n, std::uint64_t c, std::uint64_t max_iters) {
  auto f = [n, c](std::uint64_t x) { return addmod_u64(mulmod_u64(x, x, n), c % n, n); };
  std::uint64_t y = 2, r = 1, q = 1, g = 1, x = 0, ys = 0, iters = 0;
  const std::uint64_t blk = 128;
  while (g == 1 && iters < max_iters) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = f(y);
    iters += r;
    std::uint64_t k = 0;
    while (k < r && g == 1) {
      ys = y;
      std::uint64_t lim = std::min(blk, r - k);
      for (std::uint64_t i = 0; i < lim; ++i) {
        y = f(y);
        q = mulmod_u64(q, x > y ? x - y : y - x, n);
      }
      g = std::gcd(q, n);
      k += lim;
      iters += lim;
    }
    r <<= 1;
  }
  if (g == n) {
    g = 1;
    for (std::uint64_t i = 0; i < 2 * blk && g == 1; ++i) {
      ys = f(ys);
      g = std::gcd(x > ys ? x - ys : ys - x, n);
    }
  }
  return (g == n || g == 1) ? 0 : g;
}

// ---- Pollard rho (Brent variant) on arbitrary-precision cofactors ----

std::optional<BigInt> rho_big(const BigInt& n, std::uint64_t c, std::uint64_t max_iters) {
  BigInt cc = BigInt(static_cast<unsigned long long>(c)).mod_floor(n);
  auto f = [&](BigInt& x) { x = (x * x + cc).mod_floor(n); };
  BigInt y(2), x, ys, q(1), g(1);
  std::uint64_t r = 1, iters = 0;
  const std::uint64_t blk = 128;
  while (g == BigInt(1) && iters < max_iters) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) f(y);
    iters += r;
    std::uint64_t k = 0;
    while (k < r && g == BigInt(1) && iters < max_iters) {
      ys = y;
      std::uint64_t lim = std::min(blk, r - k);
      for (std::uint64_t i = 0; i < lim; ++i) {
        f(y);
        q = (q * (x - y).abs()).mod_floor(n);
      }
      g = BigInt::gcd(q, n);
      k += lim;
      iters += lim;
    }
    r <<= 1;
  }
  if (g == n) {
    g = BigInt(1);
    for (std::uint64_t i = 0; i < 2 * blk && g == BigInt(1); ++i) {
      f(ys);
      g = BigInt::gcd((x - ys).abs(), n);
    }
  }
  if (g == BigInt(1) || g == n) return std::nullopt;
  return g;
}

// ---- Pollard p-1, two stages ----
//
// Stage 1 exponentiates by every prime power <= b1. Stage 2 walks the primes
// in (b1, b2] with one gcd per block; a block whose gcd degenerates to n is
// replayed one prime at a time to separate factors. Fully deterministic.

class Pm1Stage2 {
 public:
  Pm1Stage2(const BigInt& n, const BigInt& h) : n_(n), h2_((h * h).mod_floor(n)), acc_(1) {}

  std::optional<BigInt> feed(std::uint64_t p, const BigInt& h, BigInt& cur) {
    if (prev_ == 0) {
      cur = BigInt::pow_mod(h, BigInt(static_cast<unsigned long long>(p)), n_);
    } else {
      cur = (cur * gap_power(p - prev_)).mod_floor(n_);
    }
    prev_ = p;
    if (block_.empty()) block_start_cur_ = cur;
    block_.push_back(p);
    acc_ = (acc_ * (cur - BigInt(1)).mod_floor(n_)).mod_floor(n_);
    if (block_.size() >= kBlock) return flush();
    return std::nullopt;
  }

  std::optional<BigInt> flush() {
    if (block_.empty()) return std::nullopt;
    BigInt g = BigInt::gcd(acc_, n_);
    std::optional<BigInt> out;
    if (g != BigInt(1) && g != n_) {
      out = g;
    } else if (g == n_) {
      // replay the block prime by prime
      BigInt cur = block_start_cur_;
      for (std::size_t i = 0; i < block_.size(); ++i) {
        if (i > 0) cur = (cur * gap_power(block_[i] - block_[i - 1])).mod_floor(n_);
        BigInt g2 = BigInt::gcd((cur - BigInt(1)).mod_floor(n_), n_);
        if (g2 != BigInt(1) && g2 != n_) {
          out = g2;
          break;
        }
      }
    }
    acc_ = BigInt(1);
    block_.clear();
    return out;
  }

 private:
  const BigInt& gap_power(std::uint64_t gap) {
    std::uint64_t d = gap / 2;
    if (gap_pow_.empty()) gap_pow_.push_back(h2_);
    while (gap_pow_.size() < d) gap_pow_.push_back((gap_pow_.back() * h2_).mod_floor(n_));
    return gap_pow_[d - 1];
  }

  static constexpr std::size_t kBlock = 1u << 15;
  BigInt n_, h2_, acc_, block_start_cur_;
  std::vector<BigInt> gap_pow_;
  std::vector<std::uint64_t> block_;
  std::uint64_t prev_ = 0;
};

std::optional<BigInt> pm1_stage2(const BigInt& n, const BigInt& h, std::uint64_t b1,
                                 std::uint64_t b2) {
  if (b2 <= b1) return std::nullopt;
  std::vector<std::uint32_t> base = small_primes(static_cast<std::uint32_t>(isqrt_u64(b2)));
  Pm1Stage2 st(n, h);
  BigInt cur;

  const std::uint64_t seg_span = 1ull << 22;
  for (std::uint64_t lo = b1 + 1; lo <= b2; lo += seg_span) {
    std::uint64_t hi = std::min(b2, lo + seg_span - 1);
    std::uint64_t first_odd = lo | 1;
    if (first_odd > hi) continue;
    std::size_t len = (hi - first_odd) / 2 + 1;
    std::vector<bool> comp(len, false);
    for (std::uint32_t p : base) {
      if (p < 3) continue;
      std::uint64_t pp = p;
      std::uint64_t start = std::max(pp * pp, ((first_odd + pp - 1) / pp) * pp);
      if ((start & 1) == 0) start += pp;
      for (std::uint64_t m = start; m <= hi; m += 2 * pp) comp[(m - first_odd) / 2] = true;
    }
    for (std::size_t i = 0; i < len; ++i) {
      if (comp[i]) continue;
      std::uint64_t p = first_odd + 2 * i;
      if (p <= b1) continue;
      if (auto g = st.feed(p, h, cur)) return g;
    }
  }
  return st.flush();
}

std::optional<BigInt> pm1(const BigInt& n, std::uint64_t b1, std::uint64_t b2) {
  if (b1 < 3) return std::nullopt;
  for (std::uint64_t base : {2ull, 3ull}) {
    BigInt a(static_cast<unsigned long long>(base));
    for (std::uint32_t q : small_primes(static_cast<std::uint32_t>(b1))) {
      std::uint64_t qe = q;
      while (qe <= b1 / q) qe *= q;
      mpz_powm_ui(a.raw(), a.raw(), static_cast<unsigned long>(qe), n.raw());
    }
    BigInt g = BigInt::gcd((a - BigInt(1)).mod_floor(n), n);
    if (g != BigInt(1) && g != n) return g;
    if (g == n) continue;  // every factor's order divides the stage-1 exponent: retry base
    return pm1_stage2(n, a, b1, b2);
  }
  return std::nullopt;
}

void split_composite(const BigInt& m, unsigned mult, const FactorBudget& budget,
                     std::mt19937_64& rng, std::map<BigInt, unsigned>& primes,
                     std::vector<std::pair<BigInt, unsigned>>& stuck) {
  if (m == BigInt(1)) return;
  if (is_prime(m)) {
    primes[m] += mult;
    return;
  }
  auto [base, k] = m.perfect_power();
  if (k > 1) {
    split_composite(base, mult * k, budget, rng, primes, stuck);
    return;
  }
  if (m.fits_u64()) {
    std::uint64_t n64 = m.to_u64();
    for (std::uint32_t attempt = 0; attempt < budget.rho_restarts + 4; ++attempt) {
      std::uint64_t c = attempt == 0 ? 1 : (rng() % (n64 - 3)) + 1;
      std::uint64_t g = rho_u64(n64, c, budget.rho_iterations);
      if (g != 0) {
        split_composite(BigInt(static_cast<unsigned long long>(g)), mult, budget, rng, primes,
                        stuck);
        split_composite(BigInt(static_cast<unsigned long long>(n64 / g)), mult, budget, rng,
                        primes, stuck);
        return;
      }
    }
    stuck.emplace_back(m, mult);
    return;
  }
  if (auto g = pm1(m, budget.pm1_b1, budget.pm1_b2)) {
    split_composite(*g, mult, budget, rng, primes, stuck);
    split_composite(m / *g, mult, budget, rng, primes, stuck);
    return;
  }
  for (std::uint32_t attempt = 0; attempt < budget.rho_restarts; ++attempt) {
    std::uint64_t c = attempt == 0 ? 1 : rng() | 1;
    if (auto g = rho_big(m, c, budget.rho_iterations)) {
      split_composite(*g, mult, budget, rng, primes, stuck);
      split_composite(m / *g, mult, budget, rng, primes, stuck);
      return;
    }
  }
  stuck.emplace_back(m, mult);
}

}  // namespace

BigInt FactorReport::reassembled() const {
  BigInt prod(1);
  for (const auto& [p, e] : factors)
    for (unsigned i = 0; i < e; ++i) prod *= p;
  if (cofactor) prod *= *cofactor;
  return prod;
}

FactorReport factor(const BigInt& n, const FactorBudget& budget) {
  if (n.sign() <= 0) throw OutOfRange("factor requires n >= 1");
  FactorReport rep;
  rep.input = n;
  if (n == BigInt(1)) return rep;

  std::map<BigInt, unsigned> primes;
  BigInt m = n;
  for (std::uint32_t p : small_primes(budget.trial_bound)) {
    if (m == BigInt(1)) break;
    if (m.fits_u64() && static_cast<unsigned __int128>(p) * p > m.to_u64()) break;
    if (mpz_divisible_ui_p(m.raw(), p)) {
      unsigned e = 0;
      do {
        mpz_divexact_ui(m.raw(), m.raw(), p);
        ++e;
      } while (mpz_divisible_ui_p(m.raw(), p));
      primes[BigInt(static_cast<unsigned long long>(p))] += e;
    }
  }

  std::mt19937_64 rng(budget.seed ^ 0x9e3779b97f4a7c15ull);
  std::vector<std::pair<BigInt, unsigned>> stuck;
  split_composite(m, 1, budget, rng, primes, stuck);

  rep.factors.assign(primes.begin(), primes.end());
  if (!stuck.empty()) {
    BigInt co(1);
    for (const auto& [c, mult] : stuck)
      for (unsigned i = 0; i < mult; ++i) co *= c;
    rep.cofactor = co;
    rep.status = FactorReport::Status::partial;
  }
  return rep;
}

std::pair<BigInt, BigInt> crt(const std::vector<std::pair<BigInt, BigInt>>& congruences) {
  if (congruences.empty()) throw EmptyInput("crt requires at least one congruence");
  if (congruences[0].second.sign() <= 0) throw InvalidModulus("crt moduli must be positive");
  BigInt x = congruences[0].first.mod_floor(congruences[0].second);
  BigInt m = congruences[0].second;
  for (std::size_t i = 1; i < congruences.size(); ++i) {
    const BigInt& r2 = congruences[i].first;
    const BigInt& m2 = congruences[i].second;
    if (m2.sign() <= 0) throw InvalidModulus("crt moduli must be positive");
    if (BigInt::gcd(m, m2) != BigInt(1))
      throw NotCoprime("crt moduli are not pairwise coprime: " + m2.to_decimal());
    BigInt t = ((r2 - x).mod_floor(m2) * BigInt::invert(m.mod_floor(m2), m2)).mod_floor(m2);
    x += m * t;
    m *= m2;
  }
  return {x.mod_floor(m), m};
}

}  // namespace aclambda
