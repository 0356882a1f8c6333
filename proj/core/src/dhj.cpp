#include "sperner/dhj.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>

#include "sperner/family.hpp"

namespace sperner {

std::vector<int> dhj_encode(const SubsetWord& x, int m) {
  if (m < 1) throw std::invalid_argument("dhj_encode: requires m >= 1");
  if (x.ground() != 3 * m)
    throw std::invalid_argument("dhj_encode: ground set must be [3m]");
  std::vector<int> word(m);
  for (int i = 1; i <= m; ++i) {
    word[i - 1] = (x.contains(i) ? 1 : 0) + (x.contains(i + m) ? 2 : 0) +
                  (x.contains(i + 2 * m) ? 4 : 0);
  }
  return word;
}

SubsetWord dhj_decode(int m, const std::vector<int>& word) {
  if (m < 1) throw std::invalid_argument("dhj_decode: requires m >= 1");
  if (static_cast<int>(word.size()) != m)
    throw std::invalid_argument("dhj_decode: word length must be m");
  SubsetWord x(3 * m);
  for (int i = 1; i <= m; ++i) {
    int y = word[i - 1];
    if (y < 0 || y > 7) throw std::invalid_argument("dhj_decode: digit outside 0..7");
    if (y & 1) x.insert(i);
    if (y & 2) x.insert(i + m);
    if (y & 4) x.insert(i + 2 * m);
  }
  return x;
}

std::vector<int> DhjLine::active() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < tmpl.size(); ++i)
    if (tmpl[i] == kStar) out.push_back(static_cast<int>(i) + 1);
  return out;
}

std::vector<std::vector<int>> line_points(const DhjLine& line, int k) {
  if (k < 2) throw std::invalid_argument("line_points: requires k >= 2");
  if (line.active().empty()) throw std::invalid_argument("line_points: no active coordinate");
  std::vector<std::vector<int>> pts;
  pts.reserve(k);
  for (int t = 0; t < k; ++t) {
    std::vector<int> p = line.tmpl;
    for (int& d : p)
      if (d == DhjLine::kStar) d = t;
    pts.push_back(std::move(p));
  }
  return pts;
}

namespace {
std::uint64_t pack_word(const std::vector<int>& w, int k) {
  std::uint64_t key = 0;
  for (int d : w) key = key * static_cast<std::uint64_t>(k) + static_cast<std::uint64_t>(d);
  return key;
}
}  // namespace

std::optional<DhjLine> find_combinatorial_line(const std::vector<std::vector<int>>& s, int k,
                                               int m) {
  if (k < 2 || m < 1) throw std::invalid_argument("find_combinatorial_line: requires k >= 2, m >= 1");
  if (static_cast<double>(m) * std::log2(static_cast<double>(k)) > 62)
    throw std::invalid_argument("find_combinatorial_line: k^m too large");
  std::unordered_set<std::uint64_t> in_s;
  in_s.reserve(s.size() * 2);
  for (const auto& w : s) {
    if (static_cast<int>(w.size()) != m)
      throw std::invalid_argument("find_combinatorial_line: word length must be m");
    for (int d : w)
      if (d < 0 || d >= k)
        throw std::invalid_argument("find_combinatorial_line: digit outside 0..k-1");
    in_s.insert(pack_word(w, k));
  }
  // Odometer over templates; symbol value k encodes '*'.  Lexicographic order
  // with the first coordinate most significant and '*' ranked after k-1.
  std::vector<int> tmpl(m, 0);
  for (;;) {
    bool has_star = false;
    for (int d : tmpl)
      if (d == k) { has_star = true; break; }
    if (has_star) {
      bool all_in = true;
      for (int t = 0; t < k && all_in; ++t) {
        std::uint64_t key = 0;
        for (int d : tmpl) {
          int digit = (d == k) ? t : d;
          key = key * static_cast<std::uint64_t>(k) + static_cast<std::uint64_t>(digit);
        }
        all_in = in_s.contains(key);
      }
      if (all_in) {
        DhjLine line;
        line.tmpl = tmpl;
        for (int& d : line.tmpl)
          if (d == k) d = DhjLine::kStar;
        return line;
      }
    }
    // advance
    int pos = m - 1;
    while (pos >= 0 && tmpl[pos] == k) tmpl[pos--] = 0;
    if (pos < 0) return std::nullopt;
    ++tmpl[pos];
  }
}

DhjForbiddenPair dhj_forbidden_pair(const DhjLine& line, int m) {
  if (static_cast<int>(line.tmpl.size()) != m)
    throw std::invalid_argument("dhj_forbidden_pair: template length must be m");
  for (int d : line.tmpl)
    if (d != DhjLine::kStar && (d < 0 || d > 7))
      throw std::invalid_argument("dhj_forbidden_pair: digits must lie in 0..7");
  if (line.active().empty())
    throw std::invalid_argument("dhj_forbidden_pair: no active coordinate");
  auto pts = line_points(line, 8);
  DhjForbiddenPair out{dhj_decode(m, pts[1]), dhj_decode(m, pts[6]), false};
  out.check = pair_violates_ordered(out.a, out.b);
  return out;
}

}  // namespace sperner
