#include "ribbonforge/pd.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ribbonforge/errors.hpp"

namespace ribbonforge {

void validate_pd(const PDCode& pd) {
  std::vector<int> count(static_cast<std::size_t>(pd.n_arcs) + 1, 0);
  for (const auto& x : pd.crossings) {
    for (int label : x) {
      if (label < 1 || label > pd.n_arcs) {
        throw RibbonError(ErrorCode::FormatError, "arc label out of range: " + std::to_string(label));
      }
      ++count[static_cast<std::size_t>(label)];
    }
  }
  for (int label = 1; label <= pd.n_arcs; ++label) {
    if (count[static_cast<std::size_t>(label)] != 2) {
      throw RibbonError(ErrorCode::FormatError,
                        "arc " + std::to_string(label) + " appears " +
                            std::to_string(count[static_cast<std::size_t>(label)]) + " times");
    }
  }
  if (pd.free_loops < 0) throw RibbonError(ErrorCode::FormatError, "negative loop count");
  if (pd.n_arcs != 4 * static_cast<int>(pd.crossings.size()) / 2) {
    throw RibbonError(ErrorCode::FormatError, "arc count must be twice the crossing count");
  }
}

std::string to_text(const PDCode& pd) {
  std::ostringstream os;
  os << "pd " << pd.crossings.size() << " " << pd.n_arcs << "\n\n";
  for (const auto& x : pd.crossings) {
    os << "X " << x[0] << " " << x[1] << " " << x[2] << " " << x[3] << "\n";
  }
  if (pd.free_loops > 0) os << "unlinked " << pd.free_loops << "\n";
  return os.str();
}

PDCode parse_pd_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  auto fail = [](const std::string& why) { throw RibbonError(ErrorCode::FormatError, why); };
  if (!std::getline(in, line)) fail("empty PD text");
  std::istringstream header(line);
  std::string tag;
  long n_cross = -1, n_arcs = -1;
  if (!(header >> tag >> n_cross >> n_arcs) || tag != "pd" || n_cross < 0 || n_arcs < 0) {
    fail("bad header: '" + line + "'");
  }
  if (!std::getline(in, line) || !line.empty()) fail("expected blank line after header");
  PDCode pd;
  pd.n_arcs = static_cast<int>(n_arcs);
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string kind;
    ls >> kind;
    if (kind == "X") {
      std::array<int, 4> x{};
      for (int& v : x) {
        if (!(ls >> v)) fail("bad crossing line: '" + line + "'");
      }
      std::string extra;
      if (ls >> extra) fail("trailing data on crossing line: '" + line + "'");
      pd.crossings.push_back(x);
    } else if (kind == "unlinked") {
      if (!(ls >> pd.free_loops) || pd.free_loops <= 0) fail("bad loop line: '" + line + "'");
    } else {
      fail("unexpected line: '" + line + "'");
    }
  }
  if (static_cast<long>(pd.crossings.size()) != n_cross) fail("crossing count mismatch");
  validate_pd(pd);
  return pd;
}

OrientedPD orient(const PDCode& pd) {
  validate_pd(pd);
  const std::size_t nx = pd.crossings.size();
  const std::size_t na = static_cast<std::size_t>(pd.n_arcs);
  // occurrences[label] = list of (crossing, position)
  std::vector<std::vector<std::pair<std::size_t, int>>> occ(na + 1);
  for (std::size_t i = 0; i < nx; ++i) {
    for (int p = 0; p < 4; ++p) occ[static_cast<std::size_t>(pd.crossings[i][p])].push_back({i, p});
  }
  OrientedPD out;
  out.arc_component.assign(na + 1, -1);
  out.over_in.assign(nx, 0);
  out.natural_sign.assign(nx, 0);
  out.under_component.assign(nx, -1);
  out.over_component.assign(nx, -1);

  for (std::size_t start = 1; start <= na; ++start) {
    if (out.arc_component[start] != -1) continue;
    struct Step {
      std::size_t crossing;
      int from;  // position entered the passage at
    };
    std::vector<int> arcs;
    std::vector<Step> steps;
    std::size_t arc = start;
    auto exit_occ = occ[arc][0];
    const auto first_exit = exit_occ;
    while (true) {
      arcs.push_back(static_cast<int>(arc));
      const auto [c, p] = exit_occ;
      steps.push_back({c, p});
      const int q = (p + 2) % 4;
      const std::size_t next = static_cast<std::size_t>(pd.crossings[c][q]);
      const auto& o = occ[next];
      const std::pair<std::size_t, int> enter{c, q};
      exit_occ = (o[0] == enter) ? o[1] : o[0];
      arc = next;
      if (arc == start && exit_occ == first_exit) break;
      if (arcs.size() > na) throw RibbonError(ErrorCode::FormatError, "malformed PD cycle");
    }
    // Steps run from arcs[k] into arcs[k+1] through steps[k].
    bool forward = true;
    bool decided = false;
    for (const auto& s : steps) {
      if (s.from == 0 || s.from == 2) {
        forward = s.from == 0;
        decided = true;
        break;
      }
    }
    (void)decided;
    const int comp = static_cast<int>(out.components.size());
    std::vector<int> order = arcs;
    if (!forward) {
      std::reverse(order.begin(), order.end());
      std::rotate(order.begin(), order.end() - 1, order.end());
    }
    for (int a : order) out.arc_component[static_cast<std::size_t>(a)] = comp;
    for (const auto& s : steps) {
      const int in_pos = forward ? s.from : (s.from + 2) % 4;
      if (in_pos == 0 || in_pos == 2) {
        out.under_component[s.crossing] = comp;
      } else {
        out.over_component[s.crossing] = comp;
        out.over_in[s.crossing] = pd.crossings[s.crossing][in_pos];
        out.natural_sign[s.crossing] = in_pos == 3 ? 1 : -1;
      }
    }
    out.components.push_back(std::move(order));
  }
  return out;
}

PDCode build_pd(const std::vector<std::vector<WalkEvent>>& walks, const std::vector<int>& signs) {
  const std::size_t nx = signs.size();
  std::vector<int> u_in(nx, 0), u_out(nx, 0), o_in(nx, 0), o_out(nx, 0);
  PDCode pd;
  int next_label = 1;
  for (const auto& walk : walks) {
    const int m = static_cast<int>(walk.size());
    if (m == 0) {
      ++pd.free_loops;
      continue;
    }
    const int base = next_label;
    next_label += m;
    for (int j = 0; j < m; ++j) {
      const int in = base + (j + m - 1) % m;
      const int out = base + j;
      const auto& e = walk[static_cast<std::size_t>(j)];
      if (e.crossing < 0 || static_cast<std::size_t>(e.crossing) >= nx) {
        throw RibbonError(ErrorCode::LedgerError, "walk event references unknown crossing");
      }
      const auto c = static_cast<std::size_t>(e.crossing);
      int& slot_in = e.over ? o_in[c] : u_in[c];
      int& slot_out = e.over ? o_out[c] : u_out[c];
      if (slot_in != 0) {
        throw RibbonError(ErrorCode::LedgerError,
                          "crossing " + std::to_string(c) + " passed twice on the same level");
      }
      slot_in = in;
      slot_out = out;
    }
  }
  pd.n_arcs = next_label - 1;
  for (std::size_t c = 0; c < nx; ++c) {
    if (u_in[c] == 0 || o_in[c] == 0) {
      throw RibbonError(ErrorCode::LedgerError, "crossing " + std::to_string(c) + " is not passed twice");
    }
    if (signs[c] > 0) {
      pd.crossings.push_back({u_in[c], o_out[c], u_out[c], o_in[c]});
    } else {
      pd.crossings.push_back({u_in[c], o_in[c], u_out[c], o_out[c]});
    }
  }
  return pd;
}

PDCode canonical_form(const PDCode& pd) {
  const OrientedPD o = orient(pd);
  std::vector<std::vector<int>> comps = o.components;
  for (auto& c : comps) {
    auto it = std::min_element(c.begin(), c.end());
    std::rotate(c.begin(), it, c.end());
  }
  std::sort(comps.begin(), comps.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  std::vector<int> relabel(static_cast<std::size_t>(pd.n_arcs) + 1, 0);
  int next = 1;
  for (const auto& c : comps) {
    for (int a : c) relabel[static_cast<std::size_t>(a)] = next++;
  }
  PDCode out;
  out.n_arcs = pd.n_arcs;
  out.free_loops = pd.free_loops;
  for (const auto& x : pd.crossings) {
    out.crossings.push_back({relabel[static_cast<std::size_t>(x[0])], relabel[static_cast<std::size_t>(x[1])],
                             relabel[static_cast<std::size_t>(x[2])], relabel[static_cast<std::size_t>(x[3])]});
  }
  std::sort(out.crossings.begin(), out.crossings.end());
  return out;
}

}  // namespace ribbonforge
