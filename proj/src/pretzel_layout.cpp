#include "pretzel_layout.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <utility>

#include "ribbonforge/errors.hpp"
#include "strand_builder.hpp"

namespace ribbonforge::detail {

namespace {

// An open polyline of one wrap, from its left end to its right end.
struct Piece {
  std::vector<Point2> points;
  std::vector<int> layers;  // one per edge
  int left_join = 0;
  int right_join = 0;
};

// Join indices: 0..k-2 join neighbouring wraps, k-1 joins the first wrap
// to the last one around the outside.
int lower_join(int i, int k) { return i == k - 1 ? k - 1 : i; }
int upper_join(int i, int k) { return i == 0 ? k - 1 : i - 1; }

// Walks the pieces through their joins into closed strands.
std::vector<Strand> close_pieces(std::vector<Piece>& pieces, bool folds) {
  const std::size_t n = pieces.size();
  auto join_of = [&](std::size_t q, int side) { return side == 0 ? pieces[q].left_join : pieces[q].right_join; };
  auto partner = [&](std::size_t piece, int side) {
    for (std::size_t q = 0; q < n; ++q) {
      if (q != piece && join_of(q, side) == join_of(piece, side)) return q;
    }
    throw RibbonError(ErrorCode::InvalidDiagram, "unpaired pretzel end");
  };
  std::vector<bool> used(n, false);
  std::vector<Strand> strands;
  for (std::size_t start = 0; start < n; ++start) {
    if (used[start]) continue;
    Path path;
    std::size_t total = 0;
    for (const auto& pc : pieces) total += pc.layers.size();
    path.points.reserve(total);
    path.layers.reserve(total);
    std::size_t piece = start;
    int entry = 0;  // side through which the walk enters the piece
    while (!used[piece]) {
      used[piece] = true;
      auto& pc = pieces[piece];
      const std::size_t e = pc.layers.size();
      for (std::size_t t = 0; t < e; ++t) {
        if (entry == 0) {
          path.add(std::move(pc.points[t]), pc.layers[t]);
        } else {
          path.add(std::move(pc.points[e - t]), pc.layers[e - 1 - t]);
        }
      }
      const int exit_side = 1 - entry;
      piece = partner(piece, exit_side);
      entry = exit_side;
    }
    strands.push_back(make_strand(std::move(path), true, folds));
  }
  return strands;
}

}  // namespace

namespace {

// Which side of the centre band a wrap's corner sits on: its first
// corner K sends the down-half towards y = 0 (Low) or y = 1 (High); its
// last corner M receives the half-coil from that side.
enum class Band { Low, Mid, High };

Band a_band(int t) {
  if (t == 0) return Band::Mid;
  return t > 0 ? Band::Low : Band::High;
}

Band b_band(int t) {
  if (t == 0) return Band::Mid;
  const bool odd = std::abs(t) % 2 == 1;
  return (t > 0) == odd ? Band::Low : Band::High;
}

// Corners whose arm would cross a neighbour's straight end: the half-coil
// corner of an earlier block against the first corner of a later block in
// the same band.
int arm_conflicts(const std::vector<int>& twists, const std::vector<int>& order) {
  int n = 0;
  for (std::size_t s = 0; s < order.size(); ++s) {
    for (std::size_t t = s + 1; t < order.size(); ++t) {
      const Band b = b_band(twists[order[s]]);
      if (b != Band::Mid && b == a_band(twists[order[t]])) ++n;
    }
  }
  return n;
}

}  // namespace

PretzelParams default_pretzel_params(const std::vector<int>& twists, int salt) {
  const int k = static_cast<int>(twists.size());
  PretzelParams p;
  p.order.resize(k);
  std::iota(p.order.begin(), p.order.end(), 0);
  if (k <= 6) {
    std::vector<int> perm = p.order;
    int best = arm_conflicts(twists, perm);
    while (std::next_permutation(perm.begin(), perm.end())) {
      const int c = arm_conflicts(twists, perm);
      if (c < best) {
        best = c;
        p.order = perm;
      }
    }
  }

  // Stack the corners of each band outwards from the centre. In the low
  // band the first corners of early blocks lie deepest, then the last
  // corners with late blocks deepest; the high band mirrors this.
  p.k_y.assign(k, 0);
  p.m_y.assign(k, 0);
  for (Band band : {Band::Low, Band::High}) {
    std::vector<std::pair<bool, int>> outward;  // (is_first_corner, wrap), centre first
    for (int s = 0; s < k; ++s) {
      const int w = p.order[s];
      if (b_band(twists[w]) == band) outward.push_back({false, w});
    }
    for (int s = k - 1; s >= 0; --s) {
      const int w = p.order[s];
      if (a_band(twists[w]) == band) outward.push_back({true, w});
    }
    const int dir = band == Band::Low ? -1 : 1;
    for (std::size_t r = 0; r < outward.size(); ++r) {
      const int y = dir * 4 * (4 * k + 2 + 2 * static_cast<int>(r));
      (outward[r].first ? p.k_y : p.m_y)[outward[r].second] = y;
    }
  }

  // Joins: order each side by the heights its two lines reach in the
  // middle, so that few lines swap places on the way.
  auto order_joins = [&](bool left) {
    std::vector<std::pair<int, int>> key;  // (sum of middle heights, join)
    std::vector<int> sum(k, 0);
    for (int i = 0; i < k; ++i) {
      const int m = std::abs(twists[i]);
      const bool b_front = m % 2 == 0;
      const int a_join = upper_join(i, k);
      const int c_join = lower_join(i, k);
      const int b_join = b_front ? upper_join(i, k) : lower_join(i, k);
      if (left) {
        sum[a_join] += m == 0 ? 0 : p.k_y[i];
        (void)c_join;
      } else {
        sum[b_join] += m == 0 ? 0 : p.m_y[i];
      }
    }
    for (int j = 0; j < k; ++j) key.push_back({sum[j], j});
    std::sort(key.begin(), key.end());
    std::vector<int> y(k);
    for (int r = 0; r < k; ++r) y[key[r].second] = 4 * (2 * r - (k - 1));
    return y;
  };
  p.left_y = order_joins(true);
  p.right_y = order_joins(false);
  // Break mirror symmetry between the sides so no three lines meet.
  for (int j = 0; j < k; ++j) p.right_y[j] += 1 + (j * j + salt * (j + 1)) % 3;
  // Zero wraps bend slightly at their midpoint, off the line between
  // their joins.
  for (int i = 0; i < k; ++i) {
    if (twists[i] != 0) continue;
    const int a_join = upper_join(i, k);
    p.k_y[i] = (p.left_y[a_join] + p.right_y[a_join]) / 2 + 1 + 2 * (salt % 2);
  }
  return p;
}

std::vector<Strand> pretzel_strands(const std::vector<int>& twists, const PretzelParams& prm, const Scalar& h,
                                    bool folds) {
  const int k = static_cast<int>(twists.size());
  const Scalar half(1, 2);
  const Scalar unit = h / 32;
  auto level = [&](int v) -> Scalar { return half + v * unit; };

  std::vector<Point2> left, right;
  for (int j = 0; j < k; ++j) {
    const bool outer = j == k - 1;
    left.push_back({outer ? Scalar(-h) : Scalar(0), level(prm.left_y[j])});
    right.push_back({outer ? Scalar(1 + h) : Scalar(1), level(prm.right_y[j])});
  }
  std::vector<Scalar> block_x(k);
  Scalar x = half;
  for (int slot = 0; slot < k; ++slot) {
    const int i = prm.order[slot];
    block_x[i] = x;
    x += (std::abs(twists[i]) + 1) * h;
  }

  std::vector<Piece> pieces;
  for (int i = 0; i < k; ++i) {
    const int m = std::abs(twists[i]);
    const bool flip = twists[i] < 0;
    const int base = 1000 * (k - i);
    // Front ends (A, and B for even m) meet the wrap above; back ends
    // meet the wrap below.
    const bool b_front = m % 2 == 0;
    Piece ab;
    ab.left_join = upper_join(i, k);
    ab.right_join = b_front ? upper_join(i, k) : lower_join(i, k);
    Piece cd;
    cd.left_join = lower_join(i, k);
    cd.right_join = b_front ? lower_join(i, k) : upper_join(i, k);
    cd.points = {left[cd.left_join], right[cd.right_join]};
    cd.layers = {base};

    ab.points.reserve(m + 5);
    const Point2 a = left[ab.left_join];
    const Point2 b = right[ab.right_join];
    const Scalar x0 = block_x[i];
    ab.points.push_back(a);
    ab.layers.push_back(base + 1);
    if (m == 0) {
      ab.points.push_back({x0, level(prm.k_y[i])});
      ab.layers.push_back(base + 1);
    } else {
      auto far = [flip](int j) { return (j % 2 == 1) != flip ? Scalar(1) : Scalar(0); };
      ab.points.push_back({x0, level(prm.k_y[i])});
      ab.layers.push_back(base + 1);
      ab.points.push_back({x0, far(0)});
      for (int j = 1; j < m; ++j) {
        ab.layers.push_back(base + coil_layer(j, 1, 0));
        ab.points.push_back({x0 + j * h, far(j)});
      }
      ab.layers.push_back(base + coil_layer(m, 1, 0));
      ab.points.push_back({x0 + (2 * m - 1) * h / 2, level(prm.m_y[i])});
      ab.layers.push_back(base + (b_front ? 100 : -100));
    }
    ab.points.push_back(b);
    pieces.push_back(std::move(ab));
    pieces.push_back(std::move(cd));
  }
  return close_pieces(pieces, folds);
}

}  // namespace ribbonforge::detail
