#pragma once

#include <map>
#include <optional>
#include <vector>

#include "fpcube/words.hpp"

namespace fpcube {

enum class Tri { False, True, Undecided };

struct DehnOptions {
  int area_bound = 8;        // breadth bound on tie-breaking rewrite search
  long long elem_bound = 3;  // size bound on factor-element candidates in coset tests
};

// Greedy replacement of cyclic subwords that cover strictly more than half of
// some symmetrized relator. Matching is exact on interior syllables; the two
// boundary syllables of the match may be geodesic parts of the corresponding
// word syllables. Only strictly length-decreasing replacements are applied,
// scanning rotations, relators and split points in a fixed order.
Word dehn_reduce(const Presentation& p, const Word& w);

// dehn_reduce to a fixpoint, then a bounded breadth-first search over
// non-lengthening >=half replacements to resolve stuck words.
Tri is_trivial_bounded(const Presentation& p, const Word& w, const DehnOptions& opt = {});
bool is_trivial(const Presentation& p, const Word& w, const DehnOptions& opt = {});
Tri equal_words(const Presentation& p, const Word& a, const Word& b, const DehnOptions& opt = {});

// Same right coset: factor_id * a == factor_id * b in the quotient group.
Tri same_coset(const Presentation& p, int factor_id, const Word& a, const Word& b,
               const DehnOptions& opt = {});

// Interns group elements of the quotient. Two words receive the same id iff
// they were proven equal in G within the configured bounds; an abelianization
// filter screens most unequal pairs cheaply.
class ElementRegistry {
 public:
  explicit ElementRegistry(const Presentation& p, DehnOptions opt = {});

  // Returns (id, undecided): undecided is set when some equality test hit the
  // search bound, i.e. the id may denote an element already present.
  std::pair<int, bool> intern(const Word& w);
  const Word& rep(int id) const { return reps_[static_cast<std::size_t>(id)]; }
  std::size_t size() const { return reps_.size(); }
  bool any_undecided() const { return any_undecided_; }

  std::vector<long long> abelianized(const Word& w) const;

 private:
  bool ab_equal(const std::vector<long long>& x, const std::vector<long long>& y) const;

  const Presentation& p_;
  DehnOptions opt_;
  std::vector<Word> reps_;
  std::vector<Word> reduced_;
  std::vector<std::vector<long long>> ab_;
  std::map<Word, int> exact_;
  std::vector<std::vector<long long>> rel_ab_;  // abelianized relators
  int ab_dim_ = 0;
  bool any_undecided_ = false;
};

// Canonical keys for right cosets (factor)*(element), one keyring per factor.
class CosetKeys {
 public:
  CosetKeys(const Presentation& p, DehnOptions opt = {});

  // Key for factor_id * w; undecided set when a bounded test was inconclusive
  // (the key is then sound but possibly redundant).
  std::pair<int, bool> key(int factor_id, const Word& w);
  const Word& rep(int factor_id, int key) const;
  bool any_undecided() const { return any_undecided_; }

 private:
  const Presentation& p_;
  DehnOptions opt_;
  std::map<int, std::vector<Word>> reps_;
  bool any_undecided_ = false;
};

}  // namespace fpcube
