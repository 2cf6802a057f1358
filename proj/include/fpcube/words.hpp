#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fpcube {

// Exact rational arithmetic for small-cancellation ratios and curvature sums.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n) : num(n), den(1) {}
  Rational(long long n, long long d);

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;
  bool operator<=(const Rational& o) const { return *this < o || *this == o; }
  std::string str() const;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Raised when a mathematical consistency check that is guaranteed by the
// theory fails; always indicates a bug upstream.
struct VerificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class FactorKind { Finite, FreeAbelian, Free };

// Canonical element encoding, one vector<int> per element:
//   Finite      -- {i}, index into the multiplication table, 0 = identity
//   FreeAbelian -- exponent vector of length rank, all-zero = identity
//   Free        -- freely reduced letter string (+-1..+-rank), empty = identity
using Elem = std::vector<int>;

struct FactorSpec {
  int id = 0;
  FactorKind kind = FactorKind::Free;
  int rank = 1;                          // FreeAbelian / Free
  std::vector<std::vector<int>> table;   // Finite: table[a][b] = a*b
  std::string name;

  int order() const { return static_cast<int>(table.size()); }
  Elem identity() const;
  bool is_identity(const Elem& e) const;
  bool is_valid_elem(const Elem& e) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  // Intrinsic word-metric length: 1 for nontrivial finite elements, L1 norm
  // for free-abelian, letter count for free.
  long long length(const Elem& e) const;
  // Longest common initial segment of the canonical geodesics from the
  // identity to a and to b; identity when the geodesics diverge immediately.
  Elem common_geodesic_prefix(const Elem& a, const Elem& b) const;
  // Splits e = head * tail with length(head) + length(tail) = length(e) and
  // length(head) = cut. Canonical geodesic spelling.
  std::pair<Elem, Elem> geodesic_split(const Elem& e, long long cut) const;
  // All nontrivial elements of intrinsic length <= bound, in canonical order.
  std::vector<Elem> elements_up_to(long long bound) const;
  // Group laws; exhaustive for Finite, structural for the free kinds.
  void validate() const;

  std::string elem_str(const Elem& e) const;
};

struct Syllable {
  int factor = 0;
  Elem elem;
  bool operator==(const Syllable& o) const { return factor == o.factor && elem == o.elem; }
  bool operator!=(const Syllable& o) const { return !(*this == o); }
  bool operator<(const Syllable& o) const {
    if (factor != o.factor) return factor < o.factor;
    return elem < o.elem;
  }
};

// Alternating syllable sequence in normal form: no identity syllables, no two
// consecutive syllables in the same factor.
struct Word {
  std::vector<Syllable> syl;

  std::size_t length() const { return syl.size(); }
  bool empty() const { return syl.empty(); }
  bool operator==(const Word& o) const { return syl == o.syl; }
  bool operator!=(const Word& o) const { return !(*this == o); }
  bool operator<(const Word& o) const { return syl < o.syl; }
};

class FactorSet {
 public:
  FactorSet() = default;
  explicit FactorSet(std::vector<FactorSpec> factors);

  const FactorSpec& factor(int id) const;
  const std::vector<FactorSpec>& all() const { return factors_; }
  std::size_t size() const { return factors_.size(); }

  Word word(std::vector<Syllable> syls) const;  // validates normal form
  Word multiply(const Word& a, const Word& b) const;
  Word invert(const Word& a) const;
  Word rotate_once(const Word& a) const;  // first syllable moved to the end, renormalized
  std::vector<Word> cyclic_conjugates(const Word& a) const;
  bool is_weakly_cyclically_reduced(const Word& a) const;
  std::string word_str(const Word& w) const;

 private:
  std::vector<FactorSpec> factors_;
  std::map<int, std::size_t> index_;
};

struct Relator {
  Word word;      // the full relator u^d
  Word base;      // u, not a proper power
  int exponent = 1;
  std::string name;
};

// Detects the maximal d with w = base^d (cyclic exact power by syllables).
Relator make_relator(const FactorSet& fs, const Word& w, const std::string& name);

struct Presentation {
  FactorSet factors;
  std::vector<Relator> relators;

  // All distinct cyclic conjugates of the relators and their inverses.
  // Provenance: symmetrized()[i] came from relator orbit orbit_of()[i].
  const std::vector<Word>& symmetrized() const;
  const std::vector<int>& orbit_of() const;
  void validate_for_development() const;  // relators cyclically alternating

 private:
  mutable std::vector<Word> symm_;
  mutable std::vector<int> symm_orbit_;
  mutable bool symm_built_ = false;
};

Presentation presentation_from_json(const std::string& json_text);
std::string presentation_to_json(const Presentation& p);

// --- pieces and the metric small-cancellation condition ------------------

struct Piece {
  Word word;       // a maximal piece
  long long length = 0;
  int rel_a = 0;   // witnessing indices into symmetrized()
  int rel_b = 0;
};

struct PieceReport {
  std::vector<Piece> pieces;  // maximal pieces, deduplicated, sorted
  Rational max_ratio{0, 1};   // max |p| / |r| over piece-prefix incidences
  Word worst_piece;           // witness attaining max_ratio
  int worst_rel = -1;         // symmetrized() index of the witnessing relator
};

PieceReport enumerate_pieces(const Presentation& p);

struct ScVerdict {
  bool pass = false;
  PieceReport report;
  std::string violation;  // FAIL witness, empty on PASS
};

ScVerdict check_small_cancellation(const Presentation& p, Rational lambda = Rational(1, 6));

}  // namespace fpcube
