#include "sperner/family.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sperner {

SetFamily::SetFamily(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("SetFamily: negative ground size");
  buckets_.assign(n + 1, {});
}

SetFamily SetFamily::from_members(int n, std::vector<SubsetWord> members) {
  SetFamily f(n);
  for (auto& m : members) {
    if (m.ground() != n) throw std::invalid_argument("ground-set mismatch");
    f.buckets_[m.size()].push_back(std::move(m));
  }
  for (auto& bucket : f.buckets_) {
    std::sort(bucket.begin(), bucket.end(),
              [](const SubsetWord& a, const SubsetWord& b) { return colex_less(a, b); });
    for (std::size_t i = 1; i < bucket.size(); ++i)
      if (bucket[i - 1] == bucket[i])
        throw std::invalid_argument("SetFamily: duplicate member " + bucket[i].to_string());
    f.size_ += static_cast<long>(bucket.size());
  }
  return f;
}

const std::vector<SubsetWord>& SetFamily::bucket(int layer) const {
  if (layer < 0 || layer > n_) throw std::out_of_range("SetFamily::bucket: layer out of range");
  return buckets_[layer];
}

std::vector<SubsetWord> SetFamily::members() const {
  std::vector<SubsetWord> out;
  out.reserve(size_);
  for (const auto& bucket : buckets_) out.insert(out.end(), bucket.begin(), bucket.end());
  return out;
}

bool SetFamily::contains(const SubsetWord& a) const {
  if (a.ground() != n_) return false;
  const auto& bucket = buckets_[a.size()];
  auto it = std::lower_bound(bucket.begin(), bucket.end(), a,
                             [](const SubsetWord& x, const SubsetWord& y) {
                               return colex_less(x, y);
                             });
  return it != bucket.end() && *it == a;
}

Verdict verify_gx(const SetFamily& f, const RestrictionSystem& sys) {
  if (f.ground() != sys.n) throw std::invalid_argument("ground-set mismatch");
  RestrictionSystem canon = canonicalize_system(sys);
  for (const Edge& e : canon.edges) {
    const auto& lo = f.bucket(e.i);
    const auto& hi = f.bucket(e.j);
    for (const SubsetWord& a : lo)
      for (const SubsetWord& b : hi)
        if (diff_size(a, b) == e.x)
          return Violation{a, b, Violation::Kind::edge, e, 0, 0};
  }
  return std::nullopt;
}

bool pair_violates_tilted(int p, int q, const SubsetWord& a, const SubsetWord& b) {
  if (a == b) return false;
  return static_cast<long>(q) * diff_size(a, b) == static_cast<long>(p) * diff_size(b, a);
}

bool pair_violates_ordered(const SubsetWord& a, const SubsetWord& b) {
  int d = diff_size(a, b);
  if (d < 1) return false;
  if (diff_size(b, a) != 2 * d) return false;
  return max_difference_element(a, b) < min_difference_element(b, a);
}

Verdict verify_tilted(const SetFamily& f, int p, int q) {
  TiltedRatio ratio = make_tilted_ratio(f.ground(), p, q);  // validates p, q
  std::vector<SubsetWord> ms = f.members();
  for (const SubsetWord& a : ms)
    for (const SubsetWord& b : ms)
      if (pair_violates_tilted(ratio.p, ratio.q, a, b))
        return Violation{a, b, Violation::Kind::ratio, Edge{}, p, q};
  return std::nullopt;
}

Verdict verify_ordered_tilted(const SetFamily& f) {
  std::vector<SubsetWord> ms = f.members();
  for (const SubsetWord& a : ms)
    for (const SubsetWord& b : ms)
      if (pair_violates_ordered(a, b))
        return Violation{a, b, Violation::Kind::ordered, Edge{}, 0, 0};
  return std::nullopt;
}

Verdict verify(const SetFamily& f, const PairCondition& cond) {
  if (const auto* sys = std::get_if<RestrictionSystem>(&cond)) return verify_gx(f, *sys);
  if (const auto* t = std::get_if<TiltedRatio>(&cond)) {
    if (f.ground() != t->n) throw std::invalid_argument("ground-set mismatch");
    return verify_tilted(f, t->p, t->q);
  }
  const auto& ot = std::get<OrderedTilted>(cond);
  if (f.ground() != ot.n) throw std::invalid_argument("ground-set mismatch");
  return verify_ordered_tilted(f);
}

PairChecker::PairChecker(PairCondition cond) : cond_(std::move(cond)) {
  if (const auto* sys = std::get_if<RestrictionSystem>(&cond_)) {
    RestrictionSystem canon = canonicalize_system(*sys);
    cond_ = canon;
    const long side = canon.n + 1;
    gx_x_.assign(side * side, -1);
    for (const Edge& e : canon.edges) gx_x_[e.i * side + e.j] = e.x;
  }
}

Verdict PairChecker::check(const SubsetWord& a, const SubsetWord& b) const {
  if (const auto* sys = std::get_if<RestrictionSystem>(&cond_)) {
    int i = a.size(), j = b.size();
    if (i >= j) return std::nullopt;
    int x = gx_x_[i * (sys->n + 1) + j];
    if (x >= 0 && diff_size(a, b) == x)
      return Violation{a, b, Violation::Kind::edge, Edge{i, j, x}, 0, 0};
    return std::nullopt;
  }
  if (const auto* t = std::get_if<TiltedRatio>(&cond_)) {
    if (pair_violates_tilted(t->p, t->q, a, b))
      return Violation{a, b, Violation::Kind::ratio, Edge{}, t->p, t->q};
    return std::nullopt;
  }
  if (pair_violates_ordered(a, b))
    return Violation{a, b, Violation::Kind::ordered, Edge{}, 0, 0};
  return std::nullopt;
}

Verdict PairChecker::check_unordered(const SubsetWord& a, const SubsetWord& b) const {
  if (Verdict v = check(a, b)) return v;
  return check(b, a);
}

bool PairChecker::violates(const SubsetWord& a, const SubsetWord& b) const {
  if (const auto* sys = std::get_if<RestrictionSystem>(&cond_)) {
    int i = a.size(), j = b.size();
    if (i >= j) return false;
    int x = gx_x_[i * (sys->n + 1) + j];
    return x >= 0 && diff_size(a, b) == x;
  }
  if (const auto* t = std::get_if<TiltedRatio>(&cond_))
    return pair_violates_tilted(t->p, t->q, a, b);
  return pair_violates_ordered(a, b);
}

bool PairChecker::violates_unordered(const SubsetWord& a, const SubsetWord& b) const {
  return violates(a, b) || violates(b, a);
}

SetFamily layered_family(int n, const std::vector<int>& layers) {
  if (n < 0 || n > 30)
    throw std::invalid_argument("layered_family: materialization supported for 0 <= n <= 30");
  std::vector<int> ls = layers;
  std::sort(ls.begin(), ls.end());
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (ls[i] < 0 || ls[i] > n) throw std::invalid_argument("layered_family: layer out of range");
    if (i > 0 && ls[i] == ls[i - 1])
      throw std::invalid_argument("layered_family: duplicate layer");
  }
  BigCount total = 0;
  for (int k : ls) total += binomial(n, k);
  if (total > BigCount(1) << 24)
    throw std::invalid_argument("layered_family: materialization cap exceeded (2^24 members)");
  std::vector<SubsetWord> members;
  members.reserve(total.get_ui());
  for (int k : ls)
    for (const SubsetWord& s : layer_iter(n, k)) members.push_back(s);
  return SetFamily::from_members(n, std::move(members));
}

bool counterexample_first_half_admits(int n, const mpq_class& beta, int a) {
  // a > n/4 + (beta/2) * sqrt(n), decided exactly: with c = a - n/4,
  // the condition is c > 0 and c^2 > beta^2 * n / 4.
  mpq_class c(4 * a - n, 4);
  c.canonicalize();
  if (c <= 0) return false;
  mpq_class rhs = beta * beta * n;
  rhs /= 4;
  return c * c > rhs;
}

BigCount count_counterexample(int n, const mpq_class& beta) {
  if (n < 0 || n % 2 != 0)
    throw std::invalid_argument("counterexample: requires even n >= 0");
  if (beta <= 0) throw std::invalid_argument("counterexample: requires beta > 0");
  const int h = n / 2;
  // Prefix sums of the second-half layer counts.
  std::vector<BigCount> prefix(h + 2);
  prefix[0] = 0;
  for (int b = 0; b <= h; ++b) prefix[b + 1] = prefix[b] + binomial(h, b);
  BigCount total = 0;
  for (int a = 0; a <= h; ++a)
    if (counterexample_first_half_admits(n, beta, a))
      total += binomial(h, a) * prefix[h - a + 1];
  return total;
}

SetFamily counterexample_family(int n, const mpq_class& beta) {
  BigCount total = count_counterexample(n, beta);
  if (n > 60 || total > BigCount(1) << 24)
    throw std::invalid_argument("counterexample_family: materialization cap exceeded");
  const int h = n / 2;
  std::vector<SubsetWord> members;
  members.reserve(total.get_ui());
  for (int a = 0; a <= h; ++a) {
    if (!counterexample_first_half_admits(n, beta, a)) continue;
    for (const SubsetWord& first : layer_iter(h, a)) {
      std::uint64_t lo = first.low_mask();
      for (int b = 0; b + a <= h; ++b) {
        for (const SubsetWord& second : layer_iter(h, b)) {
          std::uint64_t mask = lo | (second.low_mask() << h);
          members.push_back(SubsetWord::from_mask(n, mask));
        }
      }
    }
  }
  return SetFamily::from_members(n, std::move(members));
}

SetFamily parse_family(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("family: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line.rfind("n=", 0) != 0)
    throw std::invalid_argument("family: first line must be 'n=<int>'");
  int n;
  try {
    std::size_t used = 0;
    n = std::stoi(line.substr(2), &used);
    if (used != line.size() - 2) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw std::invalid_argument("family: first line must be 'n=<int>'");
  }
  if (n < 0) throw std::invalid_argument("family: negative ground size");
  std::vector<SubsetWord> members;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    members.push_back(SubsetWord::parse(n, line));
  }
  return SetFamily::from_members(n, std::move(members));
}

std::string serialize_family(const SetFamily& f) {
  std::ostringstream os;
  os << "n=" << f.ground() << "\n";
  for (const SubsetWord& m : f.members()) os << m.to_string() << "\n";
  return os.str();
}

}  // namespace sperner
