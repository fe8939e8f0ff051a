// Copyright (c) 2026 the aclambda authors
//
// This file is part of aclambda.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "aclambda/search.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <thread>

#include "aclambda/arith.hpp"
#include "aclambda/curves.hpp"
#include "aclambda/errors.hpp"
#include "aclambda/polymod.hpp"
#include "aclambda/rsfamily.hpp"

namespace aclambda {

namespace {
constexpr std::uint64_t kSieveBoundGuard = 1'000'000'000ull;
constexpr std::uint64_t kSegmentOdds = 1ull << 20;  // odd values per segment
}  // namespace

std::vector<std::uint64_t> sieve_primes(std::uint64_t lo, std::uint64_t hi) {
  if (hi > kSieveBoundGuard) throw CostGuard("sieve bound exceeds 10^9");
  std::vector<std::uint64_t> out;
  if (lo < 2) lo = 2;
  if (lo > hi) return out;
  if (lo <= 2 && hi >= 2) out.push_back(2);

  std::vector<std::uint32_t> base = small_primes(static_cast<std::uint32_t>(isqrt_u64(hi)));

  std::uint64_t first_odd = std::max<std::uint64_t>(lo, 3);
  if (first_odd % 2 == 0) ++first_odd;
  std::vector<bool> comp;
  for (std::uint64_t seg_lo = first_odd; seg_lo <= hi; seg_lo += 2 * kSegmentOdds) {
    std::uint64_t seg_hi = std::min(hi, seg_lo + 2 * kSegmentOdds - 2);
    std::size_t len = (seg_hi - seg_lo) / 2 + 1;
    comp.assign(len, false);
    for (std::uint32_t p : base) {
      if (p < 3) continue;
      std::uint64_t pp = p;
      if (pp * pp > seg_hi) break;
      std::uint64_t start = std::max(pp * pp, ((seg_lo + pp - 1) / pp) * pp);
      if (start % 2 == 0) start += pp;
      for (std::uint64_t m = start; m <= seg_hi; m += 2 * pp) comp[(m - seg_lo) / 2] = true;
    }
    for (std::size_t i = 0; i < len; ++i)
      if (!comp[i]) out.push_back(seg_lo + 2 * i);
  }
  return out;
}

const char* to_string(FilterStage s) {
  switch (s) {
    case FilterStage::c1: return "c1";
    case FilterStage::c4: return "c4";
    case FilterStage::adm: return "adm";
    case FilterStage::c2: return "c2";
    case FilterStage::c3: return "c3";
    case FilterStage::none: return "none";
  }
  return "?";
}

namespace {

bool eval_stage(FilterStage s, std::uint64_t ell, const FilterOptions& opts) {
  const RSFamily& rs = RSFamily::instance();
  switch (s) {
    case FilterStage::c1:
      return ell % 5 == 1;
    case FilterStage::c4:
      return ell % 4 == 1;
    case FilterStage::adm:
      return !opts.check_admissibility || rs.is_admissible(ell);
    case FilterStage::c2: {
      // a_ell = 0 for ell = 3 mod 4 (supersingular), never 2 mod 5
      if (ell % 4 != 1) return false;
      std::int64_t a = ap_cm(ell);
      return ((a % 5) + 5) % 5 == 2;
    }
    case FilterStage::c3:
      return splits_distinct_linear(rs.phi5e_mod(ell));
    case FilterStage::none:
      break;
  }
  throw OutOfRange("bad filter stage");
}

void set_stage(PrimeCandidate& c, FilterStage s, bool v) {
  switch (s) {
    case FilterStage::c1: c.c1 = v; return;
    case FilterStage::c2: c.c2 = v; return;
    case FilterStage::c3: c.c3 = v; return;
    case FilterStage::c4: c.c4 = v; return;
    case FilterStage::adm: c.adm = v; return;
    case FilterStage::none: return;
  }
}

}  // namespace

PrimeCandidate candidate_filter(std::uint64_t ell, const FilterOptions& opts) {
  if (ell <= 5) throw OutOfRange("candidate_filter requires ell > 5");
  PrimeCandidate c;
  c.ell = ell;
  for (FilterStage s : opts.order) {
    bool ok = eval_stage(s, ell, opts);
    set_stage(c, s, ok);
    if (!ok) {
      c.first_fail = s;
      return c;
    }
  }
  c.first_fail = FilterStage::none;
  return c;
}

namespace {

void accumulate(SearchStats& st, const PrimeCandidate& c) {
  ++st.primes_examined;
  switch (c.first_fail) {
    case FilterStage::c1: ++st.failed_c1; break;
    case FilterStage::c4: ++st.failed_c4; break;
    case FilterStage::adm: ++st.failed_adm; break;
    case FilterStage::c2: ++st.failed_c2; break;
    case FilterStage::c3: ++st.failed_c3; break;
    case FilterStage::none: ++st.survivors; break;
  }
}

}  // namespace

std::vector<std::uint64_t> find_candidates(std::uint64_t bound, const SearchOptions& opts,
                                           SearchStats& stats) {
  if (bound > kSieveBoundGuard) throw CostGuard("candidate bound exceeds 10^9");
  // touch the family singleton before spawning workers so its one-time
  // construction is not raced
  RSFamily::instance();

  const std::uint64_t chunk_span = 2 * kSegmentOdds;
  std::size_t nchunks = bound < 7 ? 0 : (bound - 7) / chunk_span + 1;
  std::vector<std::vector<std::uint64_t>> chunk_out(nchunks);
  std::vector<SearchStats> chunk_stats(nchunks);

  unsigned workers = std::max(1u, opts.workers);
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (;;) {
      std::size_t idx = next.fetch_add(1);
      if (idx >= nchunks) return;
      std::uint64_t lo = 7 + idx * chunk_span;
      std::uint64_t hi = std::min(bound, lo + chunk_span - 1);
      for (std::uint64_t ell : sieve_primes(lo, hi)) {
        PrimeCandidate c = candidate_filter(ell, opts.filter);
        accumulate(chunk_stats[idx], c);
        if (c.in_a_prime()) chunk_out[idx].push_back(ell);
      }
    }
  };
  if (workers == 1 || nchunks <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < std::min<std::size_t>(workers, nchunks); ++w)
      pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  std::vector<std::uint64_t> out;
  stats = SearchStats{};
  for (std::size_t i = 0; i < nchunks; ++i) {
    out.insert(out.end(), chunk_out[i].begin(), chunk_out[i].end());
    stats.primes_examined += chunk_stats[i].primes_examined;
    stats.failed_c1 += chunk_stats[i].failed_c1;
    stats.failed_c4 += chunk_stats[i].failed_c4;
    stats.failed_adm += chunk_stats[i].failed_adm;
    stats.failed_c2 += chunk_stats[i].failed_c2;
    stats.failed_c3 += chunk_stats[i].failed_c3;
    stats.survivors += chunk_stats[i].survivors;
  }
  return out;
}

std::vector<std::uint64_t> find_candidates(std::uint64_t bound, const SearchOptions& opts) {
  SearchStats st;
  return find_candidates(bound, opts, st);
}

const char* to_string(Tri t) {
  switch (t) {
    case Tri::yes: return "yes";
    case Tri::no: return "no";
    case Tri::unknown: return "unknown";
  }
  return "?";
}

const char* to_string(TStatus s) {
  switch (s) {
    case TStatus::verified: return "verified";
    case TStatus::unverified: return "unverified";
    case TStatus::rejected: return "rejected";
  }
  return "?";
}

namespace {

Tri factors_all_1mod4(const FactorReport& fr) {
  for (const auto& [p, e] : fr.factors)
    if (p.mod_u64(4) != 1) return Tri::no;
  return fr.complete() ? Tri::yes : Tri::unknown;
}

}  // namespace

TReport verify_t(const BigInt& t, const std::vector<std::uint64_t>& primes,
                 const FindTBudget& budget) {
  const RSFamily& rs = RSFamily::instance();
  TReport rep;
  rep.t = t;
  rep.primes = primes;
  rep.f_value = rs.f_eval(t);

  bool all_div = true;
  for (std::uint64_t ell : primes) {
    bool d = rep.f_value.mod_u64(ell) == 0;
    rep.divisibility.push_back(d);
    all_div = all_div && d;
  }

  // cheap stage: trial division alone often settles the 1-mod-4 question,
  // and a failed divisibility check never deserves the full budget
  FactorBudget cheap = budget.factor;
  cheap.rho_iterations = 0;
  cheap.rho_restarts = 0;
  cheap.pm1_b1 = 0;
  cheap.pm1_b2 = 0;
  rep.factorization = factor(rep.f_value.abs(), cheap);
  rep.all_factors_1mod4 = factors_all_1mod4(rep.factorization);

  if (all_div && rep.all_factors_1mod4 == Tri::unknown) {
    rep.factorization = factor(rep.f_value.abs(), budget.factor);
    rep.all_factors_1mod4 = factors_all_1mod4(rep.factorization);
  }

  if (!all_div) {
    rep.status = TStatus::rejected;
  } else if (rep.all_factors_1mod4 == Tri::yes) {
    rep.status = TStatus::verified;
    rep.lambda_bound = static_cast<int>(2 * primes.size());
  } else if (rep.all_factors_1mod4 == Tri::no) {
    rep.status = TStatus::rejected;
  } else {
    rep.status = TStatus::unverified;
  }
  return rep;
}

std::vector<TReport> find_t(const std::vector<std::uint64_t>& primes,
                            std::uint64_t max_candidates, const FindTBudget& budget) {
  if (primes.empty()) throw EmptyInput("find_t needs at least one prime");
  {
    std::vector<std::uint64_t> p = primes;
    std::sort(p.begin(), p.end());
    if (std::adjacent_find(p.begin(), p.end()) != p.end())
      throw OutOfRange("find_t primes must be distinct");
  }
  const RSFamily& rs = RSFamily::instance();

  std::vector<std::vector<std::uint64_t>> root_lists;
  for (std::uint64_t ell : primes) {
    std::vector<std::uint64_t> r = roots(rs.f_mod(ell), budget.factor.seed);
    if (r.empty()) throw RootNotFound(ell);
    root_lists.push_back(std::move(r));
  }

  BigInt big_m(1);
  for (std::uint64_t ell : primes) big_m *= BigInt(static_cast<unsigned long long>(ell));

  // all CRT lifts for j = 0, ascending t with ties broken by tuple order
  struct Lift {
    BigInt t;
    std::vector<std::uint64_t> tuple;
  };
  std::vector<Lift> lifts;
  std::vector<std::size_t> idx(primes.size(), 0);
  for (;;) {
    std::vector<std::pair<BigInt, BigInt>> congs;
    std::vector<std::uint64_t> tuple;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      tuple.push_back(root_lists[i][idx[i]]);
      congs.emplace_back(BigInt(static_cast<unsigned long long>(root_lists[i][idx[i]])),
                         BigInt(static_cast<unsigned long long>(primes[i])));
    }
    lifts.push_back(Lift{crt(congs).first, std::move(tuple)});
    // odometer
    std::size_t pos = primes.size();
    while (pos-- > 0) {
      if (++idx[pos] < root_lists[pos].size()) break;
      idx[pos] = 0;
      if (pos == 0) goto enumerated;
    }
  }
enumerated:
  std::stable_sort(lifts.begin(), lifts.end(),
                   [](const Lift& a, const Lift& b) { return a.t < b.t; });

  std::vector<TReport> out;
  std::uint64_t verified = 0;
  for (std::uint64_t scanned = 0; scanned < budget.max_lifts && verified < max_candidates;
       ++scanned) {
    std::uint64_t j = scanned / lifts.size();
    const Lift& lift = lifts[scanned % lifts.size()];
    BigInt t = lift.t + big_m * BigInt(static_cast<unsigned long long>(j));
    TReport rep = verify_t(t, primes, budget);
    if (rep.status == TStatus::verified) ++verified;
    out.push_back(std::move(rep));
  }
  return out;
}

bool save_prime_cache(const std::string& path, std::uint64_t bound, bool admissibility,
                      const std::vector<std::uint64_t>& primes) {
  std::ofstream f(path, std::ios::trunc);
  if (!f) return false;
  f << "# aclambda prime cache v" << kPrimeCacheVersion << " bound=" << bound
    << " admissibility=" << (admissibility ? 1 : 0) << "\n";
  for (std::uint64_t p : primes) f << p << "\n";
  return static_cast<bool>(f);
}

std::optional<std::vector<std::uint64_t>> load_prime_cache(const std::string& path,
                                                           std::uint64_t bound,
                                                           bool admissibility) {
  std::ifstream f(path);
  if (!f) return std::nullopt;
  std::string header;
  if (!std::getline(f, header)) return std::nullopt;
  std::string expect = "# aclambda prime cache v" + std::to_string(kPrimeCacheVersion) +
                       " bound=" + std::to_string(bound) +
                       " admissibility=" + (admissibility ? "1" : "0");
  if (header != expect) return std::nullopt;
  std::vector<std::uint64_t> out;
  std::string line;
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    try {
      out.push_back(std::stoull(line));
    } catch (...) {
      return std::nullopt;
    }
  }
  return out;
}

}  // namespace aclambda
