#include "ribbonforge/invariants.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_set>

#include "ribbonforge/errors.hpp"

namespace ribbonforge {

int components(const PDCode& pd) {
  return static_cast<int>(orient(pd).components.size()) + pd.free_loops;
}

std::vector<int> crossing_signs(const PDCode& pd, const OrientationAssignment& o) {
  const OrientedPD op = orient(pd);
  std::vector<int> signs(pd.crossings.size());
  for (std::size_t i = 0; i < pd.crossings.size(); ++i) {
    int s = op.natural_sign[i];
    const auto uc = static_cast<std::size_t>(op.under_component[i]);
    const auto oc = static_cast<std::size_t>(op.over_component[i]);
    if (uc < o.reversed.size() && o.reversed[uc]) s = -s;
    if (oc < o.reversed.size() && o.reversed[oc]) s = -s;
    signs[i] = s;
  }
  return signs;
}

int writhe(const PDCode& pd, const OrientationAssignment& o) {
  int w = 0;
  for (int s : crossing_signs(pd, o)) w += s;
  return w;
}

int linking_number(const PDCode& pd, const OrientationAssignment& o) {
  const OrientedPD op = orient(pd);
  const int n_comp = static_cast<int>(op.components.size()) + pd.free_loops;
  if (n_comp != 2) {
    throw RibbonError(ErrorCode::ComponentError,
                      "linking number needs 2 components, found " + std::to_string(n_comp));
  }
  const auto signs = crossing_signs(pd, o);
  int total = 0;
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (op.under_component[i] != op.over_component[i]) total += signs[i];
  }
  return total / 2;
}

LaurentPolynomial divide_by_loop(const LaurentPolynomial& p) {
  // p / (-A^2 - A^-2) = -(p * A^2) / (A^4 + 1)
  LaurentPolynomial r = p * LaurentPolynomial::monomial(-1, 2);
  LaurentPolynomial q;
  while (!r.is_zero()) {
    const auto& [e, c] = *r.terms().rbegin();
    const auto lowest = r.terms().begin()->first;
    if (e - 4 < lowest) throw std::domain_error("polynomial is not divisible by the loop value");
    const auto step = LaurentPolynomial::monomial(c, e - 4);
    q += step;
    r -= step * (LaurentPolynomial::monomial(1, 4) + LaurentPolynomial(1));
  }
  return q;
}

namespace {

// Boundary pairing: each open path is stored as (min endpoint, max endpoint).
using Pairing = std::vector<std::pair<int, int>>;

struct Partial {
  Pairing paths;
  int loops = 0;
};

// Joins the smoothing arc x--y into the partial state.
void join(Partial& s, int x, int y) {
  if (x == y) {
    ++s.loops;
    return;
  }
  auto find = [&](int v) {
    return std::find_if(s.paths.begin(), s.paths.end(),
                        [v](const auto& p) { return p.first == v || p.second == v; });
  };
  auto ix = find(x);
  int ex = x;
  if (ix != s.paths.end()) {
    if ((ix->first == x && ix->second == y) || (ix->first == y && ix->second == x)) {
      s.paths.erase(ix);
      ++s.loops;
      return;
    }
    ex = ix->first == x ? ix->second : ix->first;
    s.paths.erase(ix);
  }
  auto iy = find(y);
  int ey = y;
  if (iy != s.paths.end()) {
    ey = iy->first == y ? iy->second : iy->first;
    s.paths.erase(iy);
  }
  if (ex == ey) {
    ++s.loops;
    return;
  }
  s.paths.emplace_back(std::min(ex, ey), std::max(ex, ey));
}

std::vector<std::size_t> absorption_order(const PDCode& pd) {
  const std::size_t n = pd.crossings.size();
  std::vector<bool> used(n, false);
  std::vector<int> seen(static_cast<std::size_t>(pd.n_arcs) + 1, 0);
  std::vector<std::size_t> order;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    int best_score = -1;
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      int score = 0;
      for (int a : pd.crossings[i]) score += seen[static_cast<std::size_t>(a)] == 1 ? 1 : 0;
      if (score > best_score) {
        best_score = score;
        best = i;
      }
    }
    used[best] = true;
    order.push_back(best);
    for (int a : pd.crossings[best]) ++seen[static_cast<std::size_t>(a)];
  }
  return order;
}

}  // namespace

LaurentPolynomial kauffman_bracket(const PDCode& pd, int limit) {
  validate_pd(pd);
  const int n = static_cast<int>(pd.crossings.size());
  if (n > limit) {
    throw RibbonError(ErrorCode::TooLarge, std::to_string(n) + " crossings exceed the bracket limit of " +
                                               std::to_string(limit));
  }
  const LaurentPolynomial d = LaurentPolynomial::loop();
  if (n == 0) {
    if (pd.free_loops == 0) return LaurentPolynomial(1);
    return d.pow(static_cast<unsigned>(pd.free_loops - 1));
  }
  // memo: (pairing, loops) -> coefficient polynomial
  std::map<std::pair<Pairing, int>, LaurentPolynomial> states;
  states[{Pairing{}, 0}] = LaurentPolynomial(1);
  const auto a_plus = LaurentPolynomial::monomial(1, 1);
  const auto a_minus = LaurentPolynomial::monomial(1, -1);
  for (std::size_t ci : absorption_order(pd)) {
    const auto& x = pd.crossings[ci];
    std::map<std::pair<Pairing, int>, LaurentPolynomial> next;
    for (const auto& [key, poly] : states) {
      Partial base{key.first, key.second};
      // A-smoothing joins (a,b)(c,d); B-smoothing joins (a,d)(b,c).
      Partial sa = base;
      join(sa, x[0], x[1]);
      join(sa, x[2], x[3]);
      std::sort(sa.paths.begin(), sa.paths.end());
      next[{sa.paths, sa.loops}] += poly * a_plus;
      Partial sb = base;
      join(sb, x[0], x[3]);
      join(sb, x[1], x[2]);
      std::sort(sb.paths.begin(), sb.paths.end());
      next[{sb.paths, sb.loops}] += poly * a_minus;
    }
    // Fold closed loops into the coefficients to keep the memo small.
    states.clear();
    for (auto& [key, poly] : next) {
      if (poly.is_zero()) continue;
      states[{key.first, 0}] += poly * d.pow(static_cast<unsigned>(key.second));
    }
  }
  LaurentPolynomial total;
  for (const auto& [key, poly] : states) {
    if (!key.first.empty()) throw std::logic_error("bracket state left open paths");
    total += poly;
  }
  LaurentPolynomial result = divide_by_loop(total);
  if (pd.free_loops > 0) result *= d.pow(static_cast<unsigned>(pd.free_loops));
  return result;
}

LaurentPolynomial jones_in_A(const PDCode& pd, const OrientationAssignment& o, int limit) {
  const LaurentPolynomial bracket = kauffman_bracket(pd, limit);
  const int w = writhe(pd, o);
  const LaurentPolynomial::Coeff sign = (w % 2 == 0) ? 1 : -1;
  return bracket * LaurentPolynomial::monomial(sign, -3 * w);
}

std::vector<OrientationAssignment> orientation_orbit(const PDCode& pd) {
  const std::size_t n = orient(pd).components.size();
  std::vector<OrientationAssignment> out;
  const std::size_t free_bits = n > 0 ? n - 1 : 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << free_bits); ++mask) {
    OrientationAssignment o;
    o.reversed.assign(n, false);
    for (std::size_t b = 0; b < free_bits; ++b) o.reversed[b + 1] = (mask >> b) & 1U;
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace ribbonforge
