#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace relfrac {

// Fixed-universe bitset over vertex ids 0..universe-1.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;

  VertexSet() = default;
  explicit VertexSet(int universe)
      : universe_(universe), words_(word_count(universe), 0) {}
  VertexSet(int universe, std::initializer_list<int> members);
  VertexSet(int universe, const std::vector<int>& members);

  static VertexSet full(int universe);
  static int word_count(int universe) {
    return (universe + kWordBits - 1) / kWordBits;
  }

  int universe() const { return universe_; }
  int num_words() const { return static_cast<int>(words_.size()); }
  const Word* words() const { return words_.data(); }
  Word* words() { return words_.data(); }

  void insert(int v) { words_[v >> 6] |= Word{1} << (v & 63); }
  void erase(int v) { words_[v >> 6] &= ~(Word{1} << (v & 63)); }
  bool contains(int v) const { return (words_[v >> 6] >> (v & 63)) & 1; }
  void clear();

  int count() const;
  bool empty() const;
  // Smallest member, or -1.
  int first() const;
  // Smallest member greater than v, or -1.
  int next(int v) const;
  std::vector<int> to_vector() const;

  bool intersects(const VertexSet& o) const;
  bool is_subset_of(const VertexSet& o) const;

  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator-=(const VertexSet& o);
  VertexSet complement() const;

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  // Orders by sorted member lists, lexicographically.
  static bool lex_less(const VertexSet& a, const VertexSet& b);

  template <class F>
  void for_each(F&& f) const {
    for (int w = 0; w < num_words(); ++w) {
      Word bits = words_[w];
      while (bits) {
        int b = std::countr_zero(bits);
        f(w * kWordBits + b);
        bits &= bits - 1;
      }
    }
  }

  std::string str() const;
  std::size_t hash() const;

 private:
  int universe_ = 0;
  std::vector<Word> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace relfrac
