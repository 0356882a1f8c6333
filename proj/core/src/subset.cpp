#include "sperner/subset.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace sperner {

namespace {
constexpr int kWordBits = 64;

int words_needed(int n) { return (n + kWordBits - 1) / kWordBits; }
}  // namespace

SubsetWord::SubsetWord(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("SubsetWord: negative ground size");
  w_.assign(words_needed(n), 0);
}

SubsetWord SubsetWord::from_elements(int n, const std::vector<int>& elements) {
  SubsetWord s(n);
  for (int e : elements) {
    if (e < 1 || e > n) throw std::invalid_argument("SubsetWord: element out of range");
    if (s.contains(e)) throw std::invalid_argument("SubsetWord: duplicate element");
    s.insert(e);
  }
  return s;
}

SubsetWord SubsetWord::from_mask(int n, std::uint64_t mask) {
  if (n > 64) throw std::invalid_argument("SubsetWord::from_mask: n > 64");
  SubsetWord s(n);
  if (n < 64 && (mask >> n) != 0)
    throw std::invalid_argument("SubsetWord::from_mask: mask exceeds ground");
  if (n > 0) s.w_[0] = mask;
  return s;
}

int SubsetWord::size() const {
  int c = 0;
  for (std::uint64_t w : w_) c += std::popcount(w);
  return c;
}

bool SubsetWord::contains(int e) const {
  if (e < 1 || e > n_) return false;
  return (w_[(e - 1) / kWordBits] >> ((e - 1) % kWordBits)) & 1u;
}

void SubsetWord::insert(int e) {
  if (e < 1 || e > n_) throw std::invalid_argument("SubsetWord::insert: element out of range");
  w_[(e - 1) / kWordBits] |= std::uint64_t{1} << ((e - 1) % kWordBits);
}

void SubsetWord::erase(int e) {
  if (e < 1 || e > n_) throw std::invalid_argument("SubsetWord::erase: element out of range");
  w_[(e - 1) / kWordBits] &= ~(std::uint64_t{1} << ((e - 1) % kWordBits));
}

std::vector<int> SubsetWord::elements() const {
  std::vector<int> out;
  for (std::size_t wi = 0; wi < w_.size(); ++wi) {
    std::uint64_t w = w_[wi];
    while (w) {
      int b = std::countr_zero(w);
      out.push_back(static_cast<int>(wi) * kWordBits + b + 1);
      w &= w - 1;
    }
  }
  return out;
}

std::uint64_t SubsetWord::low_mask() const { return w_.empty() ? 0 : w_[0]; }

std::string SubsetWord::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int e : elements()) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  return os.str();
}

SubsetWord SubsetWord::parse(int n, const std::string& text) {
  SubsetWord s(n);
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string tok = text.substr(pos, comma - pos);
    // Tolerate surrounding spaces, nothing else.
    std::size_t b = tok.find_first_not_of(" \t");
    std::size_t e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("SubsetWord::parse: empty element");
    tok = tok.substr(b, e - b + 1);
    std::size_t used = 0;
    int val;
    try {
      val = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("SubsetWord::parse: malformed element '" + tok + "'");
    }
    if (used != tok.size())
      throw std::invalid_argument("SubsetWord::parse: malformed element '" + tok + "'");
    if (val < 1 || val > n)
      throw std::invalid_argument("SubsetWord::parse: element out of range");
    if (s.contains(val)) throw std::invalid_argument("SubsetWord::parse: duplicate element");
    s.insert(val);
    pos = comma + 1;
    if (pos == text.size() && comma != text.size())
      throw std::invalid_argument("SubsetWord::parse: trailing comma");
  }
  return s;
}

bool SubsetWord::operator==(const SubsetWord& o) const {
  return n_ == o.n_ && w_ == o.w_;
}

void SubsetWord::check_ground(const SubsetWord& o) const {
  if (n_ != o.n_) throw std::invalid_argument("ground-set mismatch");
}

int diff_size(const SubsetWord& a, const SubsetWord& b) {
  a.check_ground(b);
  int c = 0;
  for (std::size_t i = 0; i < a.w_.size(); ++i) c += std::popcount(a.w_[i] & ~b.w_[i]);
  return c;
}

int intersect_size(const SubsetWord& a, const SubsetWord& b) {
  a.check_ground(b);
  int c = 0;
  for (std::size_t i = 0; i < a.w_.size(); ++i) c += std::popcount(a.w_[i] & b.w_[i]);
  return c;
}

int symdiff_size(const SubsetWord& a, const SubsetWord& b) {
  a.check_ground(b);
  int c = 0;
  for (std::size_t i = 0; i < a.w_.size(); ++i) c += std::popcount(a.w_[i] ^ b.w_[i]);
  return c;
}

bool is_neighbor(const SubsetWord& a, const SubsetWord& b) {
  a.check_ground(b);
  // Same layer and one swap: |A Δ B| == 2 with |A\B| == |B\A| == 1.
  int ab = 0, ba = 0;
  for (std::size_t i = 0; i < a.w_.size(); ++i) {
    ab += std::popcount(a.w_[i] & ~b.w_[i]);
    ba += std::popcount(b.w_[i] & ~a.w_[i]);
    if (ab > 1 || ba > 1) return false;
  }
  return ab == 1 && ba == 1;
}

bool subset_of(const SubsetWord& a, const SubsetWord& b) {
  a.check_ground(b);
  for (std::size_t i = 0; i < a.w_.size(); ++i)
    if (a.w_[i] & ~b.w_[i]) return false;
  return true;
}

bool colex_less(const SubsetWord& a, const SubsetWord& b) {
  a.check_ground(b);
  for (std::size_t i = a.w_.size(); i-- > 0;) {
    std::uint64_t x = a.w_[i] ^ b.w_[i];
    if (x) {
      int h = 63 - std::countl_zero(x);
      return (b.w_[i] >> h) & 1u;
    }
  }
  return false;  // equal
}

int max_difference_element(const SubsetWord& a, const SubsetWord& b) {
  a.check_ground(b);
  for (std::size_t i = a.w_.size(); i-- > 0;) {
    std::uint64_t d = a.w_[i] & ~b.w_[i];
    if (d) return static_cast<int>(i) * 64 + (63 - std::countl_zero(d)) + 1;
  }
  return 0;
}

int min_difference_element(const SubsetWord& a, const SubsetWord& b) {
  a.check_ground(b);
  for (std::size_t i = 0; i < a.w_.size(); ++i) {
    std::uint64_t d = a.w_[i] & ~b.w_[i];
    if (d) return static_cast<int>(i) * 64 + std::countr_zero(d) + 1;
  }
  return 0;
}

SubsetWord set_union(const SubsetWord& a, const SubsetWord& b) {
  a.check_ground(b);
  SubsetWord r(a.n_);
  for (std::size_t i = 0; i < a.w_.size(); ++i) r.w_[i] = a.w_[i] | b.w_[i];
  return r;
}

SubsetWord set_minus(const SubsetWord& a, const SubsetWord& b) {
  a.check_ground(b);
  SubsetWord r(a.n_);
  for (std::size_t i = 0; i < a.w_.size(); ++i) r.w_[i] = a.w_[i] & ~b.w_[i];
  return r;
}

int prefix_count(const SubsetWord& a, int m) {
  if (m <= 0) return 0;
  if (m >= a.ground()) return a.size();
  int full = m / 64, rem = m % 64, c = 0;
  const auto& w = a.words();
  for (int i = 0; i < full; ++i) c += std::popcount(w[i]);
  if (rem) c += std::popcount(w[full] & ((std::uint64_t{1} << rem) - 1));
  return c;
}

std::size_t SubsetWordHash::operator()(const SubsetWord& a) const {
  // FNV-1a over the words plus the ground size.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(static_cast<std::uint64_t>(a.ground()));
  for (std::uint64_t w : a.words()) mix(w);
  return static_cast<std::size_t>(h);
}

}  // namespace sperner
