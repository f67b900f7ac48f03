#include "relfrac/vertex_set.hpp"

#include <algorithm>

namespace relfrac {

VertexSet::VertexSet(int universe, std::initializer_list<int> members)
    : VertexSet(universe) {
  for (int v : members) insert(v);
}

VertexSet::VertexSet(int universe, const std::vector<int>& members)
    : VertexSet(universe) {
  for (int v : members) insert(v);
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (auto& w : s.words_) w = ~Word{0};
  if (universe % kWordBits != 0 && !s.words_.empty()) {
    s.words_.back() = (Word{1} << (universe % kWordBits)) - 1;
  }
  return s;
}

void VertexSet::clear() { std::fill(words_.begin(), words_.end(), 0); }

int VertexSet::count() const {
  int c = 0;
  for (Word w : words_) c += std::popcount(w);
  return c;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(),
                     [](Word w) { return w == 0; });
}

int VertexSet::first() const {
  for (int w = 0; w < num_words(); ++w) {
    if (words_[w]) return w * kWordBits + std::countr_zero(words_[w]);
  }
  return -1;
}

int VertexSet::next(int v) const {
  int start = v + 1;
  if (start >= universe_) return -1;
  int w = start >> 6;
  Word bits = words_[w] & (~Word{0} << (start & 63));
  while (true) {
    if (bits) return w * kWordBits + std::countr_zero(bits);
    if (++w >= num_words()) return -1;
    bits = words_[w];
  }
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(static_cast<size_t>(count()));
  for_each([&](int v) { out.push_back(v); });
  return out;
}

bool VertexSet::intersects(const VertexSet& o) const {
  for (int w = 0; w < num_words(); ++w) {
    if (words_[w] & o.words_[w]) return true;
  }
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
  for (int w = 0; w < num_words(); ++w) {
    if (words_[w] & ~o.words_[w]) return false;
  }
  return true;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  for (int w = 0; w < num_words(); ++w) words_[w] &= o.words_[w];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  for (int w = 0; w < num_words(); ++w) words_[w] |= o.words_[w];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
  for (int w = 0; w < num_words(); ++w) words_[w] &= ~o.words_[w];
  return *this;
}

VertexSet VertexSet::complement() const {
  VertexSet f = full(universe_);
  return f -= *this;
}

bool VertexSet::lex_less(const VertexSet& a, const VertexSet& b) {
  auto va = a.to_vector();
  auto vb = b.to_vector();
  return std::lexicographical_compare(va.begin(), va.end(), vb.begin(),
                                      vb.end());
}

std::string VertexSet::str() const {
  std::string out = "{";
  bool first_item = true;
  for_each([&](int v) {
    if (!first_item) out += ",";
    out += std::to_string(v);
    first_item = false;
  });
  return out + "}";
}

std::size_t VertexSet::hash() const {
  std::size_t h = static_cast<std::size_t>(universe_) * 0x9e3779b97f4a7c15ULL;
  for (Word w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace relfrac
