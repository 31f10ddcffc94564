#include "pascalpell/contfrac.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "pascalpell/fixtures.hpp"

namespace pascalpell {

namespace {

/// Quotients certified by a single enclosure [lo, hi]; stops at the first ambiguous floor.
std::vector<Integer> certified_prefix(Rational lo, Rational hi, std::size_t limit) {
  std::vector<Integer> out;
  while (out.size() < limit) {
    const Integer a = floor(lo);
    if (floor(hi) != a || lo == a) break;
    out.push_back(a);
    Rational nlo = 1 / (hi - a);
    Rational nhi = 1 / (lo - a);
    nlo.canonicalize();
    nhi.canonicalize();
    lo = std::move(nlo);
    hi = std::move(nhi);
  }
  return out;
}

}  // namespace

CFExpansion expand(const AlgebraicRoot& r, std::size_t n_terms, unsigned start_bits) {
  if (n_terms == 0) throw std::invalid_argument("expand needs at least one term");
  if (!r.is_irrational()) throw std::invalid_argument("constant " + r.label() + " is rational; its expansion terminates");
  for (unsigned bits = std::max(start_bits, 8U);; bits *= 2) {
    const DyadicInterval box = refine(r, bits);
    auto q = certified_prefix(box.lo(), box.hi(), n_terms);
    if (q.size() == n_terms) return CFExpansion{r, std::move(q), bits};
  }
}

std::vector<Convergent> convergents(const CFExpansion& e) {
  std::vector<Convergent> out;
  Integer p_prev = 1, q_prev = 0;
  Integer p = 0, q = 1;
  for (std::size_t i = 0; i < e.quotients.size(); ++i) {
    if (i == 0) {
      p = e.quotients[0];
      q = 1;
    } else {
      Integer np = e.quotients[i] * p + p_prev;
      Integer nq = e.quotients[i] * q + q_prev;
      p_prev = p;
      q_prev = q;
      p = std::move(np);
      q = std::move(nq);
    }
    out.push_back({p, q, i});
  }
  return out;
}

bool is_diophantine(const AlgebraicRoot& r, const Integer& p, const Integer& q) {
  if (q < 1) throw std::invalid_argument("is_diophantine needs q >= 1");
  const Rational center = make_rational(p, q);
  const Rational radius = make_rational(1, q * q);
  const Rational lo = center - radius;
  const Rational hi = center + radius;
  if (auto exact = r.exact_value()) return lo < *exact && *exact < hi;
  for (unsigned bits = 64;; bits *= 2) {
    const DyadicInterval box = refine(r, bits);
    if (lo < box.lo() && box.hi() < hi) return true;
    if (box.hi() <= lo || box.lo() >= hi) return false;
  }
}

std::vector<A1Row> a1_table(std::size_t terms) {
  constexpr std::size_t kSearchSpan = 40;  // printed entries are looked up among this many convergents
  std::vector<A1Row> rows;
  for (const auto& fx : paper_fixtures().a1_table) {
    const AlgebraicRoot root = AlgebraicRoot::parse(fx.constant);
    const auto conv = convergents(expand(root, std::max(terms, kSearchSpan)));
    A1Row row;
    row.constant = fx.constant;
    row.paper_blank = !fx.printed || fx.printed->empty();

    std::vector<std::optional<std::size_t>> where;  // printed position -> convergent index
    std::size_t last = 0;
    if (fx.printed) {
      row.printed_total = fx.printed->size();
      std::size_t from = 0;
      for (const auto& value : *fx.printed) {
        std::optional<std::size_t> hit;
        for (std::size_t i = from; i < conv.size(); ++i) {
          if (make_rational(conv[i].p, conv[i].q) == value) {
            hit = i;
            break;
          }
        }
        if (hit) {
          from = *hit + 1;
          last = std::max(last, *hit);
          ++row.printed_matched;
        }
        where.push_back(hit);
      }
    }

    // An unmatched printed entry is aligned with the first free index after its predecessor.
    std::vector<std::string> status(conv.size(), "paper-blank");
    for (std::size_t pos = 0; pos < where.size(); ++pos)
      if (where[pos]) status[*where[pos]] = "yes";
    for (std::size_t pos = 0; pos < where.size(); ++pos) {
      if (where[pos]) continue;
      std::size_t lower = 0;
      for (std::size_t b = pos; b-- > 0;)
        if (where[b]) {
          lower = *where[b] + 1;
          break;
        }
      std::optional<std::size_t> upper;
      for (std::size_t a = pos + 1; a < where.size(); ++a)
        if (where[a]) {
          upper = *where[a];
          break;
        }
      A1Discrepancy d;
      d.position = pos;
      d.printed = (*fx.printed)[pos];
      d.printed_diophantine = is_diophantine(root, d.printed.get_num(), d.printed.get_den());
      if ((!upper || lower < *upper) && lower < conv.size()) {
        d.computed = make_rational(conv[lower].p, conv[lower].q);
        status[lower] = "no";
        last = std::max(last, lower);
      }
      row.discrepancies.push_back(std::move(d));
    }

    const std::size_t shown = std::max(terms, last + 1);
    for (std::size_t i = 0; i < shown && i < conv.size(); ++i)
      row.entries.push_back({i, conv[i].p, conv[i].q, is_diophantine(root, conv[i].p, conv[i].q), status[i]});
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string a1_table_csv(const std::vector<A1Row>& rows) {
  std::ostringstream out;
  out << "constant,index,p,q,diophantine,matches_paper,printed\n";
  for (const auto& row : rows) {
    for (const auto& e : row.entries) {
      std::string printed;
      if (e.matches_paper == "no") {
        for (const auto& d : row.discrepancies)
          if (d.computed && *d.computed == make_rational(e.p, e.q)) printed = to_string(d.printed);
      }
      out << row.constant << ',' << e.index << ',' << to_string(e.p) << ',' << to_string(e.q) << ','
          << (e.diophantine ? "true" : "false") << ',' << e.matches_paper << ',' << printed << '\n';
    }
  }
  return out.str();
}

}  // namespace pascalpell
