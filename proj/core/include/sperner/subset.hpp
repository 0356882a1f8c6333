#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sperner {

// A subset of the ground set [n] = {1, ..., n}, packed into machine words.
//
// Element e (1-based) lives at bit (e-1) of word (e-1)/64.  All set algebra
// is done word-wise with popcounts, so diff/neighbor queries cost O(n/64).
// Values are cheap to copy and safe to share; every query below is const.
// The canonical order on equal-sized subsets is colex: A < B iff the largest
// element of the symmetric difference lies in B.
class SubsetWord {
 public:
  SubsetWord() : n_(0) {}
  explicit SubsetWord(int n);

  // Builds {elements} over [n]; throws std::invalid_argument on out-of-range
  // or duplicate elements.
  static SubsetWord from_elements(int n, const std::vector<int>& elements);
  // Low n convenience: bit i of mask (0-based) holds element i+1; n <= 64.
  static SubsetWord from_mask(int n, std::uint64_t mask);

  int ground() const { return n_; }
  int size() const;                      // |A|
  bool empty() const { return size() == 0; }
  bool contains(int e) const;            // 1 <= e <= n
  void insert(int e);
  void erase(int e);

  std::vector<int> elements() const;     // ascending
  std::uint64_t low_mask() const;        // first min(n,64) elements as a mask

  // Serialized form: comma-separated ascending elements, e.g. "1,3,5";
  // the empty set serializes to the empty string.
  std::string to_string() const;
  static SubsetWord parse(int n, const std::string& text);

  bool operator==(const SubsetWord& o) const;
  bool operator!=(const SubsetWord& o) const { return !(*this == o); }

  const std::vector<std::uint64_t>& words() const { return w_; }

 private:
  int n_;
  std::vector<std::uint64_t> w_;
  friend int diff_size(const SubsetWord&, const SubsetWord&);
  friend int intersect_size(const SubsetWord&, const SubsetWord&);
  friend int symdiff_size(const SubsetWord&, const SubsetWord&);
  friend bool is_neighbor(const SubsetWord&, const SubsetWord&);
  friend bool subset_of(const SubsetWord&, const SubsetWord&);
  friend bool colex_less(const SubsetWord&, const SubsetWord&);
  friend int max_difference_element(const SubsetWord&, const SubsetWord&);
  friend int min_difference_element(const SubsetWord&, const SubsetWord&);
  friend SubsetWord set_union(const SubsetWord&, const SubsetWord&);
  friend SubsetWord set_minus(const SubsetWord&, const SubsetWord&);
  void check_ground(const SubsetWord& o) const;  // throws "ground-set mismatch"
};

// |A \ B|.  Grounds must match ("ground-set mismatch" otherwise).
int diff_size(const SubsetWord& a, const SubsetWord& b);
int intersect_size(const SubsetWord& a, const SubsetWord& b);
int symdiff_size(const SubsetWord& a, const SubsetWord& b);
// |A| == |B| and |A \ B| == 1, i.e. adjacent on the middle-layer swap graph.
bool is_neighbor(const SubsetWord& a, const SubsetWord& b);
bool subset_of(const SubsetWord& a, const SubsetWord& b);
// Colex comparison (valid for any pair over the same ground).
bool colex_less(const SubsetWord& a, const SubsetWord& b);
// max(A \ B); 0 if A \ B is empty.
int max_difference_element(const SubsetWord& a, const SubsetWord& b);
// min(A \ B); 0 if A \ B is empty.
int min_difference_element(const SubsetWord& a, const SubsetWord& b);
SubsetWord set_union(const SubsetWord& a, const SubsetWord& b);
SubsetWord set_minus(const SubsetWord& a, const SubsetWord& b);

// |A ∩ [m]| (prefix popcount); used for zone statistics.
int prefix_count(const SubsetWord& a, int m);

struct SubsetWordHash {
  std::size_t operator()(const SubsetWord& a) const;
};

}  // namespace sperner
