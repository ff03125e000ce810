#include "chipfire/enumeration.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "chipfire/errors.hpp"
#include "chipfire/selfreach.hpp"

namespace chipfire {

const BigCount& CountTable::at(std::size_t chips, std::size_t n) {
  if (n == 0) throw InputError("vertex count must be positive");
  if (rows_.size() < n || rows_[n - 1].size() <= chips) extend(chips, n);
  return rows_[n - 1][chips];
}

void CountTable::extend(std::size_t chips, std::size_t n) {
  const std::size_t want_rows = std::max(n, rows_.size());
  std::size_t want_cols = chips + 1;
  for (const auto& row : rows_) want_cols = std::max(want_cols, row.size());
  rows_.resize(want_rows);
  for (std::size_t r = 0; r < want_rows; ++r) {
    auto& row = rows_[r];
    const std::size_t vertices = r + 1;
    for (std::size_t l = row.size(); l < want_cols; ++l) {
      BigCount value;
      if (vertices == 1) {
        value = 1;
      } else if (l == 0) {
        value = 0;
      } else if (l == 1) {
        value = vertices == 2 ? 2 : 0;
      } else {
        const auto& below = rows_[r - 1];
        value = row[l - 1] + 2 * below[l - 1] - below[l - 2];
      }
      if (value < 0) throw std::logic_error("count recurrence produced a negative entry");
      row.push_back(std::move(value));
    }
  }
}

BigCount count_recurrence(std::size_t chips, std::size_t n) {
  CountTable table;
  return table.at(chips, n);
}

BigCount composition_count(std::size_t chips, std::size_t n) {
  if (n == 0) return chips == 0 ? 1 : 0;
  // binomial(chips + n - 1, n - 1)
  BigCount result = 1;
  for (std::size_t i = 1; i < n; ++i) {
    result *= chips + i;
    result /= i;
  }
  return result;
}

void for_each_composition(std::size_t n, std::size_t chips,
                          const std::function<void(const ChipConfig&)>& visit) {
  if (n == 0) return;
  ChipConfig c = ChipConfig::zeros(n);
  auto place = [&](auto&& self, std::size_t pos, std::size_t left) -> void {
    if (pos + 1 == n) {
      c[pos] = left;
      visit(c);
      return;
    }
    for (std::size_t k = 0; k <= left; ++k) {
      c[pos] = k;
      self(self, pos + 1, left - k);
    }
  };
  place(place, 0, chips);
}

std::vector<ChipConfig> enumerate_src(const Tree& t, std::size_t chips, std::size_t guard) {
  const std::size_t n = t.vertex_count();
  if (composition_count(chips, n) > guard) {
    throw GuardExceeded("enumerating " + std::to_string(chips) + " chips on " +
                        std::to_string(n) + " vertices exceeds guard " + std::to_string(guard));
  }
  std::vector<ChipConfig> out;
  for_each_composition(n, chips, [&](const ChipConfig& c) {
    if (is_self_reachable_tree(t, c)) out.push_back(c);
  });
  return out;
}

std::string describe_tree(const Tree& t) {
  if (t.vertex_count() == 1) return "K1";
  std::string out;
  for (auto [u, v] : t.graph().edges()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(u) + '-' + std::to_string(v);
  }
  return out;
}

bool TreeIndependenceReport::passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const TreeCountRow& r) { return r.pass(); });
}

std::string TreeIndependenceReport::to_text() const {
  std::ostringstream out;
  for (const auto& r : rows) {
    out << "tree " << r.tree_index << " [" << r.tree << "] chips=" << r.chips
        << " count=" << r.count << " expected=" << r.expected << ' '
        << (r.pass() ? "pass" : "FAIL") << '\n';
  }
  out << (passed() ? "all counts match" : "count mismatch") << '\n';
  return out.str();
}

std::string TreeIndependenceReport::to_json() const {
  nlohmann::json rows_json = nlohmann::json::array();
  for (const auto& r : rows) {
    rows_json.push_back({{"tree_index", r.tree_index},
                         {"tree", r.tree},
                         {"chips", r.chips},
                         {"count", r.count.str()},
                         {"expected", r.expected.str()},
                         {"pass", r.pass()}});
  }
  nlohmann::json doc = {{"vertices", vertices}, {"rows", rows_json}, {"passed", passed()}};
  return doc.dump();
}

TreeIndependenceReport verify_tree_independence(std::size_t n, std::size_t max_chips) {
  const auto& trees = tree_catalog(n);
  CountTable table;
  TreeIndependenceReport report{n, {}};
  for (std::size_t i = 0; i < trees.size(); ++i) {
    for (std::size_t l = 0; l <= max_chips; ++l) {
      BigCount count = enumerate_src(trees[i], l).size();
      report.rows.push_back({i, describe_tree(trees[i]), l, count, table.at(l, n)});
    }
  }
  return report;
}

CountTableEmission oeis_crosscheck(std::size_t depth) {
  if (depth == 0) throw InputError("depth must be positive");
  CountTable table;
  CountTableEmission e{depth, {}, {}, {}};
  for (std::size_t n = 1; n <= depth; ++n) {
    std::vector<BigCount> row;
    for (std::size_t l = 0; l <= depth; ++l) row.push_back(table.at(l, n));
    e.values.push_back(std::move(row));
  }
  for (std::size_t k = 0; k < depth; ++k) {
    for (std::size_t l = 0; l <= k; ++l) e.by_chips_ascending.push_back(table.at(l, k - l + 1));
    for (std::size_t n = 1; n <= k + 1; ++n) {
      e.by_vertices_ascending.push_back(table.at(k + 1 - n, n));
    }
  }
  return e;
}

namespace {

template <typename Range>
void write_joined(std::ostream& out, const Range& values, const char* sep) {
  bool first = true;
  for (const auto& v : values) {
    if (!first) out << sep;
    out << v;
    first = false;
  }
}

nlohmann::json big_array(const std::vector<BigCount>& values) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& v : values) arr.push_back(v.str());
  return arr;
}

}  // namespace

std::string CountTableEmission::to_text() const {
  std::ostringstream out;
  out << "# C(l,n): rows n = 1.." << depth << ", columns l = 0.." << depth << '\n';
  for (std::size_t n = 1; n <= depth; ++n) {
    out << "n=" << n << ": ";
    write_joined(out, values[n - 1], " ");
    out << '\n';
  }
  out << "antidiagonals, l ascending: ";
  write_joined(out, by_chips_ascending, ", ");
  out << '\n' << "antidiagonals, n ascending: ";
  write_joined(out, by_vertices_ascending, ", ");
  out << '\n';
  return out.str();
}

std::string CountTableEmission::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : values) rows.push_back(big_array(row));
  nlohmann::json doc = {{"depth", depth},
                        {"table", rows},
                        {"antidiagonals_chips_ascending", big_array(by_chips_ascending)},
                        {"antidiagonals_vertices_ascending", big_array(by_vertices_ascending)}};
  return doc.dump();
}

LeafClassCounts leaf_class_counts(const Tree& t, Vertex leaf, std::size_t chips) {
  if (leaf >= t.vertex_count() || !t.is_leaf(leaf)) {
    throw InputError("vertex " + std::to_string(leaf) + " is not a leaf");
  }
  LeafClassCounts counts;
  for (const auto& s : enumerate_src(t, chips)) {
    if (s[leaf] == 0) {
      ++counts.empty;
    } else if (s[leaf] == 1) {
      ++counts.single;
    } else {
      ++counts.multiple;
    }
  }
  return counts;
}

std::optional<std::string> check_leaf_bijections(const Tree& t, Vertex leaf, std::size_t chips) {
  if (leaf >= t.vertex_count() || !t.is_leaf(leaf)) {
    throw InputError("vertex " + std::to_string(leaf) + " is not a leaf");
  }
  if (chips == 0) return std::nullopt;
  const LeafRemoval r = remove_leaf(t, leaf);
  const Vertex nbr = r.neighbor;

  auto reduced = [&](const ChipConfig& s) {
    std::vector<ChipCount> out;
    for (Vertex v = 0; v < s.size(); ++v) {
      if (v != leaf) out.push_back(s[v]);
    }
    return ChipConfig(std::move(out));
  };

  const auto smaller = enumerate_src(r.tree, chips - 1);
  const std::set<ChipConfig> smaller_set(smaller.begin(), smaller.end());
  std::set<ChipConfig> nonempty_leaf;
  for (const auto& s : enumerate_src(t, chips - 1)) {
    if (s[leaf] >= 1) nonempty_leaf.insert(s);
  }

  std::set<ChipConfig> image_empty, image_single, image_multiple;
  std::size_t n_empty = 0, n_single = 0, n_multiple = 0;
  for (const auto& s : enumerate_src(t, chips)) {
    if (s[leaf] == 0) {
      ++n_empty;
      ChipConfig img = reduced(s);
      if (img[nbr] == 0) return "leaf-empty map: neighbor holds no chip in " + format_config(s);
      img[nbr] -= 1;
      if (!smaller_set.count(img)) {
        return "leaf-empty map: image of " + format_config(s) + " is not self-reachable";
      }
      image_empty.insert(img);
    } else if (s[leaf] == 1) {
      ++n_single;
      ChipConfig img = reduced(s);
      if (!smaller_set.count(img)) {
        return "leaf-single map: image of " + format_config(s) + " is not self-reachable";
      }
      image_single.insert(img);
    } else {
      ++n_multiple;
      ChipConfig img = s;
      img[leaf] -= 1;
      if (!nonempty_leaf.count(img)) {
        return "leaf-multiple map: image of " + format_config(s) + " is not self-reachable";
      }
      image_multiple.insert(img);
    }
  }
  if (image_empty.size() != n_empty) return std::string("leaf-empty map is not injective");
  if (image_single.size() != n_single) return std::string("leaf-single map is not injective");
  if (image_multiple.size() != n_multiple) return std::string("leaf-multiple map is not injective");
  if (image_empty != smaller_set) return std::string("leaf-empty map is not onto");
  if (image_single != smaller_set) return std::string("leaf-single map is not onto");
  if (image_multiple != nonempty_leaf) return std::string("leaf-multiple map is not onto");
  return std::nullopt;
}

}  // namespace chipfire
