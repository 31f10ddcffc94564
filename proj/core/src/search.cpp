#include "pascalpell/search.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include <boost/multiprecision/cpp_int.hpp>

namespace pascalpell {

std::string to_string(MedianDomain d) {
  switch (d) {
    case MedianDomain::integers: return "integers";
    case MedianDomain::halves: return "halves";
    case MedianDomain::quarters: return "quarters";
  }
  return "quarters";
}

MedianDomain parse_domain(std::string_view text) {
  std::string t(text);
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  if (t == "integers") return MedianDomain::integers;
  if (t == "halves") return MedianDomain::halves;
  if (t == "quarters") return MedianDomain::quarters;
  throw std::invalid_argument("unknown domain '" + std::string(text) + "' (expected integers, halves or quarters)");
}

int grid_step(MedianDomain d) {
  switch (d) {
    case MedianDomain::integers: return 4;
    case MedianDomain::halves: return 2;
    case MedianDomain::quarters: return 1;
  }
  return 1;
}

bool on_grid(const QuarterInt& m, MedianDomain d) {
  return mpz_divisible_ui_p(m.quarters().get_mpz_t(), static_cast<unsigned long>(grid_step(d))) != 0;
}

Integer scaled_n_side(const EquationFamily& f, const Integer& n) {
  const Rational w = f.weight();
  Integer out = w.get_den();
  out <<= 2 * f.k();
  for (int i = 0; i < f.k(); ++i) out *= n + i;
  return out;
}

Integer scaled_m_side(const EquationFamily& f, const Integer& q) {
  const int k = f.k();
  const Rational w = f.weight();
  Integer low = 1;  // prod_{i < k-1} (q + 4(k-2-i))
  for (int i = 0; i < k - 1; ++i) low *= q + 4 * (k - 2 - i);
  const Integer full = low * (q - 4);  // the i = k-1 factor
  return w.get_num() * full + w.get_den() * 4 * k * low;
}

namespace {

/// Smallest grid q >= q_min with scaled_m_side(q) >= target.
Integer first_q_at_least(const EquationFamily& f, const Integer& target, int step, const Integer& q_min) {
  Integer lo_t = (q_min + step - 1) / step;
  if (scaled_m_side(f, lo_t * step) >= target) return lo_t * step;
  Integer hi_t = lo_t + 1;
  while (scaled_m_side(f, hi_t * step) < target) hi_t = lo_t + (hi_t - lo_t) * 2;
  // Invariant: R(lo_t) < target <= R(hi_t).
  while (hi_t - lo_t > 1) {
    const Integer mid = (lo_t + hi_t) / 2;
    if (scaled_m_side(f, mid * step) >= target) {
      hi_t = mid;
    } else {
      lo_t = mid;
    }
  }
  return hi_t * step;
}

}  // namespace

std::optional<QuarterInt> invert_m(const EquationFamily& f, const Integer& n, MedianDomain d) {
  if (n < 1) throw std::invalid_argument("invert_m needs n >= 1");
  const int step = grid_step(d);
  const Integer target = scaled_n_side(f, n);
  const Integer q = first_q_at_least(f, target, step, 4);
  if (scaled_m_side(f, q) == target) return QuarterInt::from_quarters(q);
  for (int small = 0; small < 4; small += step)
    if (scaled_m_side(f, small) == target) return QuarterInt::from_quarters(small);
  return std::nullopt;
}

namespace {

std::vector<std::uint32_t> candidate_moduli() { return {3, 4, 5, 7, 8, 9, 11, 13, 16}; }

}  // namespace

std::vector<SieveBinding> sieves_for(const EquationFamily& f, const std::vector<std::uint32_t>& moduli) {
  std::vector<SieveBinding> out;
  if (!has_curve(f)) return out;
  const CurveEntry& c = curve(f);
  const auto vars = c.polynomial.variables();
  const bool plane = std::all_of(vars.begin(), vars.end(), [](Var v) { return v == Var::x || v == Var::y; });
  if (!plane) return out;
  for (auto p : moduli) out.push_back({ResidueTable(c.polynomial, p, Var::x, Var::y), c.substitution});
  return out;
}

std::vector<SieveBinding> default_sieves(const EquationFamily& f) {
  // Up to three tables pruning at least a quarter of the residue pairs, strongest first.
  constexpr std::size_t kMaxTables = 3;
  std::vector<SieveBinding> out;
  for (auto& s : sieves_for(f, candidate_moduli()))
    if (prune_fraction(s.table) >= make_rational(1, 4)) out.push_back(std::move(s));
  std::stable_sort(out.begin(), out.end(), [](const SieveBinding& a, const SieveBinding& b) {
    return prune_fraction(a.table) > prune_fraction(b.table);
  });
  if (out.size() > kMaxTables) out.erase(out.begin() + kMaxTables, out.end());
  return out;
}

std::vector<std::pair<Integer, Integer>> partition(const Integer& N, const Integer& chunk) {
  if (chunk < 1) throw std::invalid_argument("partition chunk must be at least 1");
  std::vector<std::pair<Integer, Integer>> out;
  for (Integer lo = 2; lo <= N; lo += chunk) {
    Integer hi = lo + chunk - 1;
    if (hi > N) hi = N;
    out.emplace_back(lo, hi);
  }
  return out;
}

namespace {

using i128 = __int128;
using boost::multiprecision::int256_t;

enum class Arith { int128, int256, mpz };

std::string arith_name(Arith a) {
  switch (a) {
    case Arith::int128: return "int128";
    case Arith::int256: return "int256";
    case Arith::mpz: return "mpz";
  }
  return "mpz";
}

template <class T>
T to_native(const Integer& v) {
  if constexpr (std::is_same_v<T, Integer>) {
    return v;
  } else {
    std::vector<std::uint64_t> limbs(mpz_sizeinbase(v.get_mpz_t(), 2) / 64 + 1);
    std::size_t count = 0;
    mpz_export(limbs.data(), &count, 1, sizeof(std::uint64_t), 0, 0, v.get_mpz_t());
    T r = 0;
    for (std::size_t i = 0; i < count; ++i) {
      r <<= 64;
      r |= T(limbs[i]);
    }
    return sgn(v) < 0 ? T(-r) : r;
  }
}

/// Forward-difference table of a degree-k polynomial sampled at x, x+h, ..., x+kh.
std::vector<Integer> difference_table(std::vector<Integer> samples) {
  const std::size_t k = samples.size() - 1;
  std::vector<Integer> out(k + 1);
  for (std::size_t j = 0; j <= k; ++j) {
    out[j] = samples[0];
    for (std::size_t i = 0; i + 1 < samples.size() - j; ++i) samples[i] = samples[i + 1] - samples[i];
  }
  return out;
}

Arith choose_arith(const EquationFamily& f, const Integer& hi, MedianDomain d) {
  const int k = f.k();
  const int step = grid_step(d);
  const Integer q_end = first_q_at_least(f, scaled_n_side(f, hi), step, 8) + Integer(k * step);
  const Integer big = std::max(scaled_n_side(f, hi + k), scaled_m_side(f, q_end));
  const std::size_t bits = bit_length(big) + static_cast<std::size_t>(k) + 2;
  if (bits <= 126) return Arith::int128;
  if (bits <= 254) return Arith::int256;
  return Arith::mpz;
}

std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

bool audit_pick(std::int64_t n, double rate) {
  if (rate <= 0) return false;
  return double(mix64(static_cast<std::uint64_t>(n)) % 1000000ULL) < rate * 1e6;
}

/// One table variable as (A * src + B) / D, src being n or q = 4m.
struct Feed {
  bool from_n = true;
  std::int64_t A = 0;
  std::int64_t B = 0;
  std::int64_t D = 1;
};

struct PreparedSieve {
  const ResidueTable* table;
  Feed first;
  Feed second;
  bool row_check = false;
};

std::int64_t to_i64(const Integer& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("sieve substitution coefficient too large");
  return v.get_si();
}

Feed make_feed(const AffineSub& sub, Var target) {
  const AffineMap* m = sub.find(target);
  if (m == nullptr) throw std::invalid_argument(std::string("sieve substitution lacks ") + var_name(target));
  if (m->source != Var::n && m->source != Var::m)
    throw std::invalid_argument("sieve substitution must be in n and m");
  Feed f;
  f.from_n = m->source == Var::n;
  // For m sources the slope applies to q/4.
  const Rational slope = f.from_n ? m->scale : Rational(m->scale / 4);
  Integer den;
  mpz_lcm(den.get_mpz_t(), Rational(slope).get_den_mpz_t(), m->offset.get_den_mpz_t());
  f.D = to_i64(den);
  f.A = to_i64(Integer(slope * den));
  f.B = to_i64(Integer(m->offset * den));
  return f;
}

/// Residue of the fed value mod p, or nothing when it is not an integer.
std::optional<std::uint32_t> feed_residue(const Feed& f, std::int64_t src, std::uint32_t p) {
  const std::int64_t num = f.A * src + f.B;
  if (f.D != 1 && num % f.D != 0) return std::nullopt;
  std::int64_t r = (f.D == 1 ? num : num / f.D) % std::int64_t(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::vector<PreparedSieve> prepare(const std::vector<SieveBinding>& sieves, int step) {
  std::vector<PreparedSieve> out;
  for (const auto& s : sieves) {
    PreparedSieve p{&s.table, make_feed(s.substitution, s.table.first()), make_feed(s.substitution, s.table.second()),
                    false};
    // The row test skips n outright, so every grid q must give an integral second value.
    const bool second_always_integral = p.second.B % p.second.D == 0 && (p.second.A * step) % p.second.D == 0;
    p.row_check = p.first.from_n && !p.second.from_n && p.first.D == 1 && second_always_integral;
    out.push_back(p);
  }
  return out;
}

template <class T>
struct Scanner {
  const EquationFamily& f;
  MedianDomain d;
  const std::vector<PreparedSieve>& sieves;
  double audit_rate;
  SearchReport& report;

  void audit_row(std::int64_t n) {
    ++report.audited;
    auto m = invert_m(f, Integer(static_cast<long>(n)), d);
    if (m && *m >= QuarterInt(2))
      throw std::logic_error("sieve pruned a true solution at n=" + std::to_string(n));
  }

  void audit_pair(std::int64_t n, std::int64_t q) {
    ++report.audited;
    if (residual(f, Integer(static_cast<long>(n)), QuarterInt::from_quarters(Integer(static_cast<long>(q)))) == 0)
      throw std::logic_error("sieve pruned a true solution at n=" + std::to_string(n));
  }

  void run(std::int64_t lo, std::int64_t hi) {
    const int k = f.k();
    const int step = grid_step(d);
    std::vector<Integer> ls, rs;
    for (int i = 0; i <= k; ++i) ls.push_back(scaled_n_side(f, Integer(static_cast<long>(lo + i))));
    const Integer q0 = first_q_at_least(f, ls[0], step, 8);
    for (int i = 0; i <= k; ++i) rs.push_back(scaled_m_side(f, q0 + i * step));
    std::vector<T> L, R;
    for (const auto& v : difference_table(ls)) L.push_back(to_native<T>(v));
    for (const auto& v : difference_table(rs)) R.push_back(to_native<T>(v));
    std::int64_t q = q0.get_si();

    for (std::int64_t n = lo; n <= hi; ++n) {
      bool pruned = false;
      for (const auto& s : sieves) {
        if (!s.row_check) continue;
        const auto a = feed_residue(s.first, n, s.table->modulus());
        if (a && s.table->row_empty(*a)) {
          pruned = true;
          break;
        }
      }
      if (pruned) {
        ++report.pruned;
        if (audit_pick(n, audit_rate)) audit_row(n);
      } else {
        while (R[0] < L[0]) {
          for (int j = 0; j < k; ++j) R[j] += R[j + 1];
          q += step;
        }
        for (const auto& s : sieves) {
          const std::uint32_t p = s.table->modulus();
          const auto a = feed_residue(s.first, s.first.from_n ? n : q, p);
          const auto b = feed_residue(s.second, s.second.from_n ? n : q, p);
          if (a && b && !s.table->admits(*a, *b)) {
            pruned = true;
            break;
          }
        }
        if (pruned) {
          ++report.pruned;
          if (audit_pick(n, audit_rate)) audit_pair(n, q);
        } else {
          ++report.tested;
          if (R[0] == L[0])
            report.solutions.push_back({Integer(static_cast<long>(n)),
                                        QuarterInt::from_quarters(Integer(static_cast<long>(q)))});
        }
      }
      for (int j = 0; j < k; ++j) L[j] += L[j + 1];
    }
  }
};

SearchReport scan_range(const EquationFamily& f, const Integer& lo, const Integer& hi, MedianDomain d,
                        const std::vector<SieveBinding>& sieves, double audit_rate, Arith arith) {
  if (lo < 2 || hi < lo) throw std::invalid_argument("search range must satisfy 2 <= lo <= hi");
  if (!hi.fits_slong_p() || hi > Integer("1000000000000")) throw std::invalid_argument("search bound above 10^12");
  SearchReport r;
  r.family = f;
  r.N = hi;
  r.domain = d;
  r.arithmetic = arith_name(arith);
  for (const auto& s : sieves) r.sieve_moduli.push_back(s.table.modulus());
  const auto prepared = prepare(sieves, grid_step(d));
  switch (arith) {
    case Arith::int128: Scanner<i128>{f, d, prepared, audit_rate, r}.run(lo.get_si(), hi.get_si()); break;
    case Arith::int256: Scanner<int256_t>{f, d, prepared, audit_rate, r}.run(lo.get_si(), hi.get_si()); break;
    case Arith::mpz: Scanner<Integer>{f, d, prepared, audit_rate, r}.run(lo.get_si(), hi.get_si()); break;
  }
  return r;
}

}  // namespace

SearchReport exhaustive_range(const EquationFamily& f, const Integer& lo, const Integer& hi, MedianDomain d,
                              const std::vector<SieveBinding>& sieves, double audit_rate) {
  return scan_range(f, lo, hi, d, sieves, audit_rate, choose_arith(f, hi, d));
}

SearchReport merge_reports(const std::vector<SearchReport>& parts) {
  if (parts.empty()) throw std::invalid_argument("nothing to merge");
  SearchReport out;
  out.family = parts.front().family;
  out.domain = parts.front().domain;
  out.sieve_moduli = parts.front().sieve_moduli;
  out.arithmetic = parts.front().arithmetic;
  out.N = parts.front().N;
  for (const auto& p : parts) {
    if (!(p.family == out.family) || p.domain != out.domain) throw std::invalid_argument("merging unlike reports");
    out.solutions.insert(out.solutions.end(), p.solutions.begin(), p.solutions.end());
    out.trivial_excluded.insert(out.trivial_excluded.end(), p.trivial_excluded.begin(), p.trivial_excluded.end());
    out.tested += p.tested;
    out.pruned += p.pruned;
    out.audited += p.audited;
    if (p.N > out.N) out.N = p.N;
  }
  std::sort(out.solutions.begin(), out.solutions.end());
  std::sort(out.trivial_excluded.begin(), out.trivial_excluded.end());
  out.ranges = parts.size();
  return out;
}

std::vector<Solution> trivial_solutions(const EquationFamily& f, const Integer& N, MedianDomain d) {
  const int step = grid_step(d);
  Integer ceiling = 0;
  for (int q = 0; q < 8; q += step) ceiling = std::max(ceiling, scaled_m_side(f, q));
  std::vector<Solution> out;
  for (Integer n = 0; n <= N; ++n) {
    const Integer lhs = scaled_n_side(f, n);
    if (lhs > ceiling && n >= 2) break;
    for (int q = 0; q < 8; q += step)
      if (scaled_m_side(f, q) == lhs) out.push_back({n, QuarterInt::from_quarters(q)});
  }
  return out;
}

SearchReport exhaustive(const EquationFamily& f, const Integer& N, MedianDomain d,
                        const std::vector<SieveBinding>& sieves, const SearchOptions& options) {
  if (N < 2) throw std::invalid_argument("search bound N must be at least 2");
  const auto start = std::chrono::steady_clock::now();
  const unsigned workers = std::max(1U, options.workers);
  Integer chunk = options.chunk > 0 ? Integer(static_cast<unsigned long>(options.chunk))
                                    : (workers == 1 ? N : (N + Integer(workers * 4) - 1) / Integer(workers * 4));
  if (chunk < 1) chunk = 1;
  const auto ranges = partition(N, chunk);
  const Arith arith = choose_arith(f, N, d);

  std::vector<SearchReport> parts(ranges.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= ranges.size()) return;
      try {
        parts[i] = scan_range(f, ranges[i].first, ranges[i].second, d, sieves, options.audit_rate, arith);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = ranges.size();
      }
    }
  };
  if (workers == 1 || ranges.size() == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(workers, ranges.size()); ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  SearchReport report = merge_reports(parts);
  report.N = N;
  report.trivial_excluded = trivial_solutions(f, N, d);
  for (const auto& s : report.solutions) {
    if (residual(f, s.n, s.m) != 0 || !on_grid(s.m, d))
      throw std::logic_error("reported solution (" + to_string(s.n) + "," + s.m.to_string() + ") fails re-verification");
  }
  for (const auto& s : report.trivial_excluded) {
    if (residual(f, s.n, s.m) != 0) throw std::logic_error("trivial solution fails re-verification");
  }
  report.workers = workers;
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace pascalpell
