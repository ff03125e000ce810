#include "chipfire/firing.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "chipfire/errors.hpp"

namespace chipfire {

IllegalFiring::IllegalFiring(std::size_t step, std::size_t vertex, std::uint64_t available,
                             std::uint64_t required)
    : std::runtime_error("illegal firing at step " + std::to_string(step + 1) + ": vertex " +
                         std::to_string(vertex) + " holds " + std::to_string(available) +
                         " chips but needs " + std::to_string(required)),
      step_(step),
      vertex_(vertex),
      available_(available),
      required_(required) {}

std::size_t ChipConfigHash::operator()(const ChipConfig& c) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (ChipCount x : c) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

FiringSequence FiringSequence::range(Vertex first, Vertex last) {
  FiringSequence s;
  for (Vertex v = first; v <= last && first <= last; ++v) s.push_back(v);
  return s;
}

FiringSequence& FiringSequence::append(const FiringSequence& tail) {
  moves_.insert(moves_.end(), tail.moves_.begin(), tail.moves_.end());
  return *this;
}

namespace {

void check_size(const Graph& g, const ChipConfig& c) {
  if (c.size() != g.vertex_count()) {
    throw InputError("configuration has " + std::to_string(c.size()) + " entries but graph has " +
                     std::to_string(g.vertex_count()) + " vertices");
  }
}

ChipCount checked_add(ChipCount a, ChipCount b) {
  if (a > std::numeric_limits<ChipCount>::max() - b) throw ChipOverflow("chip count overflow");
  return a + b;
}

// Fires v in place; the caller has already checked legality.
void fire_in_place(const Graph& g, std::vector<ChipCount>& chips, Vertex v) {
  const auto& nbrs = g.neighbors(v);
  chips[v] -= nbrs.size();
  for (Vertex u : nbrs) chips[u] = checked_add(chips[u], 1);
}

}  // namespace

ChipCount total_chips(const ChipConfig& c) {
  ChipCount sum = 0;
  for (ChipCount x : c) sum = checked_add(sum, x);
  return sum;
}

bool is_legal_fire(const Graph& g, const ChipConfig& c, Vertex v) {
  check_size(g, c);
  return c[v] >= g.degree(v);
}

ChipConfig fire(const Graph& g, const ChipConfig& c, Vertex v) {
  if (!is_legal_fire(g, c, v)) throw IllegalFiring(0, v, c[v], g.degree(v));
  auto chips = c.chips();
  fire_in_place(g, chips, v);
  return ChipConfig(std::move(chips));
}

ChipConfig apply_sequence(const Graph& g, const ChipConfig& c, const FiringSequence& seq) {
  check_size(g, c);
  auto chips = c.chips();
  for (std::size_t step = 0; step < seq.size(); ++step) {
    Vertex v = seq[step];
    std::size_t deg = g.degree(v);
    if (chips[v] < deg) throw IllegalFiring(step, v, chips[v], deg);
    fire_in_place(g, chips, v);
  }
  return ChipConfig(std::move(chips));
}

bool is_legal_sequence(const Graph& g, const ChipConfig& c, const FiringSequence& seq) {
  try {
    apply_sequence(g, c, seq);
    return true;
  } catch (const IllegalFiring&) {
    return false;
  }
}

std::vector<std::int64_t> apply_sequence_unchecked(const Graph& g, const ChipConfig& c,
                                                   const FiringSequence& seq) {
  check_size(g, c);
  const std::size_t n = g.vertex_count();
  auto counts = fire_count_vector(seq, n);
  std::vector<std::int64_t> out(n);
  for (Vertex v = 0; v < n; ++v) {
    if (c[v] > static_cast<ChipCount>(std::numeric_limits<std::int64_t>::max())) {
      throw ChipOverflow("chip count exceeds signed range");
    }
    out[v] = static_cast<std::int64_t>(c[v]);
  }
  // out -= L * counts, one column at a time.
  for (Vertex v = 0; v < n; ++v) {
    if (counts[v] == 0) continue;
    auto k = static_cast<std::int64_t>(counts[v]);
    out[v] -= k * static_cast<std::int64_t>(g.degree(v));
    for (Vertex u : g.neighbors(v)) out[u] += k;
  }
  return out;
}

std::vector<std::size_t> fire_count_vector(const FiringSequence& seq, std::size_t n) {
  std::vector<std::size_t> counts(n, 0);
  for (Vertex v : seq) {
    if (v >= n) {
      throw InputError("sequence vertex " + std::to_string(v) + " out of range for " +
                       std::to_string(n) + " vertices");
    }
    ++counts[v];
  }
  return counts;
}

FiringSequence reduce_sequence(const Graph& g, const ChipConfig& c, const FiringSequence& seq) {
  const std::size_t n = g.vertex_count();
  auto counts = fire_count_vector(seq, n);
  if (std::find(counts.begin(), counts.end(), 0) != counts.end()) {
    throw InputError("sequence does not fire every vertex");
  }
  ChipConfig expected;
  try {
    expected = apply_sequence(g, c, seq);
  } catch (const IllegalFiring& e) {
    throw InputError(std::string("sequence to reduce is not legal: ") + e.what());
  }

  std::vector<char> seen(n, 0);
  FiringSequence out;
  for (Vertex v : seq) {
    if (seen[v]) {
      out.push_back(v);
    } else {
      seen[v] = 1;
    }
  }
  ChipConfig got;
  try {
    got = apply_sequence(g, c, out);
  } catch (const IllegalFiring& e) {
    throw std::logic_error(std::string("reduced sequence is illegal: ") + e.what());
  }
  if (got != expected) throw std::logic_error("reduced sequence changed the final configuration");
  return out;
}

FiringSequence reduce_fully(const Graph& g, const ChipConfig& c, const FiringSequence& seq) {
  FiringSequence current = seq;
  const std::size_t n = g.vertex_count();
  for (;;) {
    auto counts = fire_count_vector(current, n);
    if (std::find(counts.begin(), counts.end(), 0) != counts.end()) return current;
    current = reduce_sequence(g, c, current);
  }
}

namespace {

template <typename T>
std::vector<T> parse_list(std::string_view text, const char* what) {
  std::vector<T> out;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' ||
                          s.back() == '\n')) {
      s.remove_suffix(1);
    }
    return s;
  };
  text = trim(text);
  if (text.empty()) return out;
  for (;;) {
    auto comma = text.find(',');
    auto token = trim(text.substr(0, comma));
    T value{};
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw InputError(std::string("malformed ") + what + " entry '" + std::string(token) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return out;
}

template <typename Range>
std::string join(const Range& values) {
  std::string out;
  bool first = true;
  for (auto v : values) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out;
}

}  // namespace

ChipConfig parse_config(std::string_view text) {
  auto chips = parse_list<ChipCount>(text, "configuration");
  if (chips.empty()) throw InputError("empty configuration");
  return ChipConfig(std::move(chips));
}

std::string format_config(const ChipConfig& c) { return join(c.chips()); }

FiringSequence parse_sequence(std::string_view text) {
  return FiringSequence(parse_list<Vertex>(text, "sequence"));
}

std::string format_sequence(const FiringSequence& seq) { return join(seq.moves()); }

}  // namespace chipfire
