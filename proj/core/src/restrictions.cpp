#include "sperner/restrictions.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sperner {

namespace {
std::string edge_str(const Edge& e) {
  std::ostringstream os;
  os << "(" << e.i << "," << e.j << ",x=" << e.x << ")";
  return os.str();
}
}  // namespace

ValidationReport validate_system(const RestrictionSystem& sys) {
  ValidationReport rep;
  if (sys.n < 0) {
    rep.ok = false;
    rep.message = "negative ground size";
    return rep;
  }
  std::vector<Edge> sorted = sys.edges;
  std::stable_sort(sorted.begin(), sorted.end(), [](const Edge& a, const Edge& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  for (std::size_t idx = 0; idx < sorted.size(); ++idx) {
    const Edge& e = sorted[idx];
    if (!(0 <= e.i && e.i < e.j && e.j <= sys.n)) {
      rep.ok = false;
      rep.message = "edge " + edge_str(e) + ": requires 0 <= i < j <= n";
      rep.offender = e;
      return rep;
    }
    if (e.x < 0 || e.x > std::min(e.i, sys.n - e.j)) {
      rep.ok = false;
      rep.message = "edge " + edge_str(e) + ": x outside [0, min(i, n-j)]";
      rep.offender = e;
      return rep;
    }
    if (idx > 0 && sorted[idx - 1].i == e.i && sorted[idx - 1].j == e.j) {
      rep.ok = false;
      rep.message = "duplicate edge between layers (" + std::to_string(e.i) + "," +
                    std::to_string(e.j) + ")";
      rep.offender = e;
      return rep;
    }
  }
  return rep;
}

RestrictionSystem canonicalize_system(RestrictionSystem sys) {
  ValidationReport rep = validate_system(sys);
  if (!rep.ok) throw std::invalid_argument("invalid restriction system: " + rep.message);
  std::sort(sys.edges.begin(), sys.edges.end(), [](const Edge& a, const Edge& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  return sys;
}

RestrictionSystem sperner_system(int n) {
  if (n < 0) throw std::invalid_argument("sperner_system: negative n");
  RestrictionSystem sys;
  sys.n = n;
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) sys.edges.push_back({i, j, 0});
  return sys;
}

namespace {
void check_ratio(int p, int q) {
  if (p < 0 || q <= 0) throw std::invalid_argument("tilted ratio: requires q >= 1 and p >= 0");
  if (p == q)
    throw std::invalid_argument(
        "tilted ratio: p == q admits no finite forbidden difference (rejected)");
  if (p > q) throw std::invalid_argument("tilted ratio: requires p < q");
  if (std::gcd(p, q) != 1) throw std::invalid_argument("tilted ratio: requires gcd(p,q) == 1");
}
}  // namespace

RestrictionSystem tilted_system(int n, int p, int q) {
  if (n < 0) throw std::invalid_argument("tilted_system: negative n");
  check_ratio(p, q);
  RestrictionSystem sys;
  sys.n = n;
  // For A in layer i, B in layer j > i: |B\A| = |A\B| + (j-i), so
  // q|A\B| = p|B\A| pins |A\B| to p(j-i)/(q-p) when that is an integer.
  for (int i = 0; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      long num = static_cast<long>(p) * (j - i);
      int den = q - p;
      if (num % den != 0) continue;
      long x = num / den;
      if (x > std::min(i, n - j)) continue;
      sys.edges.push_back({i, j, static_cast<int>(x)});
    }
  }
  return sys;
}

RestrictionSystem parse_system(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("system JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw std::invalid_argument("system JSON: expected object with 'n' and 'edges'");
  if (!j["n"].is_number_integer()) throw std::invalid_argument("system JSON: 'n' must be an integer");
  if (!j["edges"].is_array()) throw std::invalid_argument("system JSON: 'edges' must be an array");
  RestrictionSystem sys;
  sys.n = j["n"].get<int>();
  for (const auto& je : j["edges"]) {
    if (!je.is_object() || !je.contains("i") || !je.contains("j") || !je.contains("x"))
      throw std::invalid_argument("system JSON: each edge needs integer 'i', 'j', 'x'");
    if (!je["i"].is_number_integer() || !je["j"].is_number_integer() ||
        !je["x"].is_number_integer())
      throw std::invalid_argument("system JSON: each edge needs integer 'i', 'j', 'x'");
    sys.edges.push_back({je["i"].get<int>(), je["j"].get<int>(), je["x"].get<int>()});
  }
  return canonicalize_system(std::move(sys));
}

std::string serialize_system(const RestrictionSystem& sys) {
  RestrictionSystem canon = canonicalize_system(sys);
  nlohmann::ordered_json j;
  j["n"] = canon.n;
  j["edges"] = nlohmann::ordered_json::array();
  for (const Edge& e : canon.edges)
    j["edges"].push_back(nlohmann::ordered_json{{"i", e.i}, {"j", e.j}, {"x", e.x}});
  return j.dump();
}

TiltedRatio make_tilted_ratio(int n, int p, int q) {
  if (n < 0) throw std::invalid_argument("tilted ratio: negative n");
  check_ratio(p, q);
  return TiltedRatio{n, p, q};
}

int condition_ground(const PairCondition& cond) {
  return std::visit([](const auto& c) { return c.n; }, cond);
}

std::string condition_name(const PairCondition& cond) {
  if (const auto* sys = std::get_if<RestrictionSystem>(&cond)) {
    // The antichain system is recognizable: all pairs, all x = 0.
    std::size_t full = 0;
    for (int i = 0; i <= sys->n; ++i)
      for (int j = i + 1; j <= sys->n; ++j) ++full;
    bool all_zero = true;
    for (const Edge& e : sys->edges) all_zero = all_zero && e.x == 0;
    if (all_zero && sys->edges.size() == full) return "sperner";
    return "system";
  }
  if (const auto* t = std::get_if<TiltedRatio>(&cond))
    return "tilted:" + std::to_string(t->p) + ":" + std::to_string(t->q);
  return "ordered-tilted";
}

}  // namespace sperner
