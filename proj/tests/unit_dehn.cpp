#include <map>
#include <set>

#include "doctest.h"
#include "fpcube/dehn.hpp"
#include "fpcube/examples.hpp"

using namespace fpcube;

namespace {
Word w_of(const FactorSet& fs, std::initializer_list<std::pair<int, int>> l) {
  std::vector<Syllable> syl;
  for (auto [f, e] : l) syl.push_back(Syllable{f, Elem{e}});
  return fs.word(std::move(syl));
}

// Dihedral group of order 14 as permutation-free arithmetic: elements are
// (rotation k mod 7, flip f); a = flip, b = flip-then-rotate so that ab is a
// rotation by one.
struct Dihedral {
  static std::pair<int, int> mul(std::pair<int, int> x, std::pair<int, int> y) {
    // (k,f) acts as t -> +-t + k
    int k = (y.second ? (y.first - x.first + 14) : (y.first + x.first)) % 7;
    return {k, x.second ^ y.second};
  }
  static std::pair<int, int> of_word(const Word& w) {
    std::pair<int, int> acc{0, 0};
    for (const auto& s : w.syl) {
      std::pair<int, int> g = s.factor == 0 ? std::pair<int, int>{0, 1} : std::pair<int, int>{1, 1};
      acc = mul(acc, g);
    }
    return acc;
  }
};
}  // namespace

TEST_CASE("dehn_reduce shortens (ab)^4 to (ba)^3 with relator (ab)^7") {
  auto p = examples::dihedral7();
  const auto& fs = p.factors;
  std::vector<Syllable> syl;
  for (int i = 0; i < 4; ++i) {
    syl.push_back({0, {1}});
    syl.push_back({1, {1}});
  }
  Word w = fs.word(syl);
  Word r = dehn_reduce(p, w);
  CHECK(r.length() == 6);
  CHECK(r.syl[0].factor == 1);  // (ba)^3
  // the relator itself reduces to the empty word
  CHECK(dehn_reduce(p, p.relators[0].word).empty());
  // a short word is untouched
  auto s = examples::surface_genus2();
  Word ab = w_of(s.factors, {{0, 1}, {1, 1}});
  CHECK(dehn_reduce(s, ab) == ab);
}

TEST_CASE("is_trivial basics") {
  auto p = examples::dihedral7();
  CHECK(is_trivial(p, p.relators[0].word));
  CHECK(is_trivial(p, Word{}));
  // factor elements stay nontrivial in the quotient
  CHECK_FALSE(is_trivial(p, w_of(p.factors, {{0, 1}})));
  auto s = examples::surface_genus2();
  CHECK_FALSE(is_trivial(s, w_of(s.factors, {{0, 1}})));
  CHECK(is_trivial(s, s.relators[0].word));
}

TEST_CASE("dehn_reduce never lengthens and terminates") {
  auto p = examples::dihedral7();
  const auto& fs = p.factors;
  // all alternating words up to length 10
  std::vector<Word> words{Word{}};
  for (int start = 0; start < 2; ++start) {
    std::vector<Syllable> syl;
    int f = start;
    for (int i = 0; i < 10; ++i) {
      syl.push_back({f, {1}});
      f = 1 - f;
      words.push_back(fs.word(std::vector<Syllable>(syl)));
    }
  }
  for (const auto& w : words) {
    Word r = dehn_reduce(p, w);
    CHECK(r.length() <= w.length());
  }
}

TEST_CASE("equal() partitions dihedral words into exactly 14 classes") {
  auto p = examples::dihedral7();
  const auto& fs = p.factors;
  std::vector<Word> words{Word{}};
  for (int start = 0; start < 2; ++start) {
    std::vector<Syllable> syl;
    int f = start;
    for (int i = 0; i < 8; ++i) {
      syl.push_back({f, {1}});
      f = 1 - f;
      words.push_back(fs.word(std::vector<Syllable>(syl)));
    }
  }
  // group words into classes with equal_words, cross-check with the oracle
  std::vector<std::vector<Word>> classes;
  for (const auto& w : words) {
    bool placed = false;
    for (auto& cls : classes) {
      Tri t = equal_words(p, w, cls.front());
      REQUIRE(t != Tri::Undecided);
      if (t == Tri::True) {
        cls.push_back(w);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({w});
  }
  CHECK(classes.size() == 14);
  // every class is constant under the dihedral oracle and classes differ
  std::set<std::pair<int, int>> reps;
  for (const auto& cls : classes) {
    auto v = Dihedral::of_word(cls.front());
    for (const auto& w : cls) CHECK(Dihedral::of_word(w) == v);
    CHECK(reps.insert(v).second);
  }
}

TEST_CASE("equal is an equivalence relation on sampled words") {
  auto p = examples::dihedral7();
  const auto& fs = p.factors;
  std::vector<Word> ws;
  for (int start = 0; start < 2; ++start) {
    std::vector<Syllable> syl;
    int f = start;
    for (int i = 0; i < 6; ++i) {
      syl.push_back({f, {1}});
      f = 1 - f;
      ws.push_back(fs.word(std::vector<Syllable>(syl)));
    }
  }
  for (const auto& a : ws) {
    CHECK(equal_words(p, a, a) == Tri::True);
    for (const auto& b : ws) {
      CHECK(equal_words(p, a, b) == equal_words(p, b, a));
      for (const auto& c : ws) {
        if (equal_words(p, a, b) == Tri::True && equal_words(p, b, c) == Tri::True)
          CHECK(equal_words(p, a, c) == Tri::True);
      }
    }
  }
}

TEST_CASE("coset keys") {
  auto s = examples::surface_genus2();
  CosetKeys keys(s);
  const auto& fs = s.factors;
  Word w = w_of(fs, {{1, 1}, {0, 1}});  // b a
  Word aw = fs.multiply(w_of(fs, {{0, 2}}), w);
  // w and a^2 w lie in the same <a>-coset
  CHECK(keys.key(0, w) == keys.key(0, aw));
  // a and b lie in different <a>-cosets (the factor embeds)
  auto ka = keys.key(0, w_of(fs, {{0, 1}}));
  auto kb = keys.key(0, w_of(fs, {{1, 1}}));
  CHECK(ka.first != kb.first);
  // the empty word and the relator share every coset
  auto k1 = keys.key(2, Word{});
  auto k2 = keys.key(2, s.relators[0].word);
  CHECK(k1.first == k2.first);
}

TEST_CASE("element registry interns quotient elements") {
  auto p = examples::dihedral7();
  ElementRegistry reg(p);
  const auto& fs = p.factors;
  std::vector<Word> words{Word{}};
  for (int start = 0; start < 2; ++start) {
    std::vector<Syllable> syl;
    int f = start;
    for (int i = 0; i < 8; ++i) {
      syl.push_back({f, {1}});
      f = 1 - f;
      words.push_back(fs.word(std::vector<Syllable>(syl)));
    }
  }
  std::set<int> ids;
  for (const auto& w : words) ids.insert(reg.intern(w).first);
  CHECK(ids.size() == 14);
  CHECK_FALSE(reg.any_undecided());
}
