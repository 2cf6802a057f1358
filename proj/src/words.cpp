#include "fpcube/words.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

namespace fpcube {

namespace {
long long gcd_ll(long long a, long long b) {
  while (b) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}
}  // namespace

Rational::Rational(long long n, long long d) : num(n), den(d) {
  if (den == 0) throw InputError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = gcd_ll(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
}

Rational Rational::operator+(const Rational& o) const {
  return Rational(num * o.den + o.num * den, den * o.den);
}
Rational Rational::operator-(const Rational& o) const {
  return Rational(num * o.den - o.num * den, den * o.den);
}
Rational Rational::operator*(const Rational& o) const { return Rational(num * o.num, den * o.den); }
bool Rational::operator<(const Rational& o) const { return num * o.den < o.num * den; }
std::string Rational::str() const {
  std::ostringstream os;
  os << num;
  if (den != 1) os << "/" << den;
  return os.str();
}

// --- FactorSpec -----------------------------------------------------------

Elem FactorSpec::identity() const {
  switch (kind) {
    case FactorKind::Finite:
      return Elem{0};
    case FactorKind::FreeAbelian:
      return Elem(static_cast<std::size_t>(rank), 0);
    case FactorKind::Free:
      return Elem{};
  }
  return {};
}

bool FactorSpec::is_identity(const Elem& e) const {
  switch (kind) {
    case FactorKind::Finite:
      return e.size() == 1 && e[0] == 0;
    case FactorKind::FreeAbelian:
      return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    case FactorKind::Free:
      return e.empty();
  }
  return false;
}

bool FactorSpec::is_valid_elem(const Elem& e) const {
  switch (kind) {
    case FactorKind::Finite:
      return e.size() == 1 && e[0] >= 0 && e[0] < order();
    case FactorKind::FreeAbelian:
      return static_cast<int>(e.size()) == rank;
    case FactorKind::Free: {
      for (std::size_t i = 0; i < e.size(); ++i) {
        int a = e[i];
        if (a == 0 || a > rank || a < -rank) return false;
        if (i + 1 < e.size() && e[i + 1] == -a) return false;
      }
      return true;
    }
  }
  return false;
}

Elem FactorSpec::mul(const Elem& a, const Elem& b) const {
  switch (kind) {
    case FactorKind::Finite:
      return Elem{table[static_cast<std::size_t>(a[0])][static_cast<std::size_t>(b[0])]};
    case FactorKind::FreeAbelian: {
      Elem c(a);
      for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
      return c;
    }
    case FactorKind::Free: {
      Elem c(a);
      for (int x : b) {
        if (!c.empty() && c.back() == -x)
          c.pop_back();
        else
          c.push_back(x);
      }
      return c;
    }
  }
  return {};
}

Elem FactorSpec::inv(const Elem& a) const {
  switch (kind) {
    case FactorKind::Finite: {
      int n = order();
      for (int x = 0; x < n; ++x)
        if (table[static_cast<std::size_t>(a[0])][static_cast<std::size_t>(x)] == 0) return Elem{x};
      throw InputError("finite factor table has no inverse for element");
    }
    case FactorKind::FreeAbelian: {
      Elem c(a);
      for (int& x : c) x = -x;
      return c;
    }
    case FactorKind::Free: {
      Elem c(a.rbegin(), a.rend());
      for (int& x : c) x = -x;
      return c;
    }
  }
  return {};
}

long long FactorSpec::length(const Elem& e) const {
  switch (kind) {
    case FactorKind::Finite:
      return is_identity(e) ? 0 : 1;
    case FactorKind::FreeAbelian: {
      long long s = 0;
      for (int x : e) s += x < 0 ? -x : x;
      return s;
    }
    case FactorKind::Free:
      return static_cast<long long>(e.size());
  }
  return 0;
}

Elem FactorSpec::common_geodesic_prefix(const Elem& a, const Elem& b) const {
  switch (kind) {
    case FactorKind::Finite:
      return a == b ? a : identity();
    case FactorKind::FreeAbelian: {
      // g lies on some geodesic to a and some geodesic to b iff it fits the
      // componentwise sign intervals.
      Elem c(static_cast<std::size_t>(rank), 0);
      for (int i = 0; i < rank; ++i) {
        int x = a[static_cast<std::size_t>(i)], y = b[static_cast<std::size_t>(i)];
        if (x > 0 && y > 0) c[static_cast<std::size_t>(i)] = std::min(x, y);
        if (x < 0 && y < 0) c[static_cast<std::size_t>(i)] = std::max(x, y);
      }
      return c;
    }
    case FactorKind::Free: {
      Elem c;
      for (std::size_t i = 0; i < a.size() && i < b.size() && a[i] == b[i]; ++i) c.push_back(a[i]);
      return c;
    }
  }
  return {};
}

std::pair<Elem, Elem> FactorSpec::geodesic_split(const Elem& e, long long cut) const {
  if (cut < 0 || cut > length(e)) throw InputError("geodesic_split: cut out of range");
  switch (kind) {
    case FactorKind::Finite:
      return cut == 0 ? std::make_pair(identity(), e) : std::make_pair(e, identity());
    case FactorKind::FreeAbelian: {
      Elem head(static_cast<std::size_t>(rank), 0);
      long long left = cut;
      for (int i = 0; i < rank && left > 0; ++i) {
        int x = e[static_cast<std::size_t>(i)];
        long long take = std::min<long long>(left, x < 0 ? -x : x);
        head[static_cast<std::size_t>(i)] = x < 0 ? -static_cast<int>(take) : static_cast<int>(take);
        left -= take;
      }
      Elem tail = mul(inv(head), e);
      return {head, tail};
    }
    case FactorKind::Free: {
      Elem head(e.begin(), e.begin() + cut);
      Elem tail(e.begin() + cut, e.end());
      return {head, tail};
    }
  }
  return {};
}

std::vector<Elem> FactorSpec::elements_up_to(long long bound) const {
  std::vector<Elem> out;
  switch (kind) {
    case FactorKind::Finite: {
      for (int i = 1; i < order(); ++i) out.push_back(Elem{i});
      break;
    }
    case FactorKind::FreeAbelian: {
      // All nonzero vectors with L1 norm <= bound, lexicographic order.
      Elem cur(static_cast<std::size_t>(rank), 0);
      std::vector<Elem> stack{cur};
      std::set<Elem> seen;
      // iterative enumeration over the L1 ball
      std::vector<Elem> ball;
      std::function<void(std::size_t, long long, Elem&)> rec = [&](std::size_t i, long long left,
                                                                   Elem& acc) {
        if (i == acc.size()) {
          ball.push_back(acc);
          return;
        }
        for (long long v = -left; v <= left; ++v) {
          acc[i] = static_cast<int>(v);
          rec(i + 1, left - (v < 0 ? -v : v), acc);
        }
        acc[i] = 0;
      };
      Elem acc(static_cast<std::size_t>(rank), 0);
      rec(0, bound, acc);
      std::sort(ball.begin(), ball.end());
      for (auto& e : ball)
        if (!is_identity(e)) out.push_back(e);
      break;
    }
    case FactorKind::Free: {
      std::vector<Elem> layer{Elem{}};
      for (long long l = 1; l <= bound; ++l) {
        std::vector<Elem> next;
        for (const auto& w : layer) {
          for (int g = -rank; g <= rank; ++g) {
            if (g == 0) continue;
            if (!w.empty() && w.back() == -g) continue;
            Elem e(w);
            e.push_back(g);
            next.push_back(e);
          }
        }
        std::sort(next.begin(), next.end());
        for (auto& e : next) out.push_back(e);
        layer = std::move(next);
      }
      break;
    }
  }
  return out;
}

void FactorSpec::validate() const {
  if (kind == FactorKind::Finite) {
    int n = order();
    if (n < 1) throw InputError("finite factor with empty table");
    for (const auto& row : table) {
      if (static_cast<int>(row.size()) != n) throw InputError("multiplication table not square");
      for (int x : row)
        if (x < 0 || x >= n) throw InputError("multiplication table entry out of range");
    }
    for (int a = 0; a < n; ++a) {
      if (table[static_cast<std::size_t>(a)][0] != a || table[0][static_cast<std::size_t>(a)] != a)
        throw InputError("element 0 is not an identity in the table");
    }
    for (int a = 0; a < n; ++a) {
      bool has_inv = false;
      for (int b = 0; b < n; ++b)
        if (table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] == 0) has_inv = true;
      if (!has_inv) throw InputError("table element without inverse");
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          int ab_c = table[static_cast<std::size_t>(
              table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])][static_cast<std::size_t>(c)];
          int a_bc = table[static_cast<std::size_t>(a)][static_cast<std::size_t>(
              table[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)])];
          if (ab_c != a_bc) throw InputError("multiplication table not associative");
        }
  } else {
    if (rank < 1) throw InputError("free / free-abelian factor needs rank >= 1");
  }
}

std::string FactorSpec::elem_str(const Elem& e) const {
  std::ostringstream os;
  std::string base = name.empty() ? ("g" + std::to_string(id)) : name;
  switch (kind) {
    case FactorKind::Finite:
      os << base << "[" << e[0] << "]";
      break;
    case FactorKind::FreeAbelian:
      if (rank == 1) {
        os << base;
        if (e[0] != 1) os << "^" << e[0];
      } else {
        os << base << "(";
        for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
        os << ")";
      }
      break;
    case FactorKind::Free: {
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) os << " ";
        int a = e[i];
        os << base << (a < 0 ? -a : a);
        if (a < 0) os << "^-1";
      }
      if (e.empty()) os << base << "^0";
      break;
    }
  }
  return os.str();
}

// --- FactorSet / words ----------------------------------------------------

FactorSet::FactorSet(std::vector<FactorSpec> factors) : factors_(std::move(factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    factors_[i].validate();
    if (index_.count(factors_[i].id)) throw InputError("duplicate factor id");
    index_[factors_[i].id] = i;
  }
}

const FactorSpec& FactorSet::factor(int id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw InputError("unknown factor id " + std::to_string(id));
  return factors_[it->second];
}

Word FactorSet::word(std::vector<Syllable> syls) const {
  for (std::size_t i = 0; i < syls.size(); ++i) {
    const auto& f = factor(syls[i].factor);
    if (!f.is_valid_elem(syls[i].elem)) throw InputError("syllable element not canonical");
    if (f.is_identity(syls[i].elem)) throw InputError("identity syllable in word");
    if (i + 1 < syls.size() && syls[i + 1].factor == syls[i].factor)
      throw InputError("consecutive syllables in the same factor");
  }
  Word w;
  w.syl = std::move(syls);
  return w;
}

Word FactorSet::multiply(const Word& a, const Word& b) const {
  std::vector<Syllable> out(a.syl);
  std::size_t j = 0;
  while (j < b.syl.size()) {
    const Syllable& s = b.syl[j];
    if (!out.empty() && out.back().factor == s.factor) {
      const auto& f = factor(s.factor);
      Elem prod = f.mul(out.back().elem, s.elem);
      if (f.is_identity(prod)) {
        out.pop_back();
        ++j;
      } else {
        out.back().elem = prod;
        ++j;
      }
    } else {
      // no interaction at the junction; the rest is already normal form
      out.insert(out.end(), b.syl.begin() + static_cast<long>(j), b.syl.end());
      break;
    }
  }
  Word w;
  w.syl = std::move(out);
  return w;
}

Word FactorSet::invert(const Word& a) const {
  Word w;
  w.syl.reserve(a.syl.size());
  for (auto it = a.syl.rbegin(); it != a.syl.rend(); ++it)
    w.syl.push_back(Syllable{it->factor, factor(it->factor).inv(it->elem)});
  return w;
}

Word FactorSet::rotate_once(const Word& a) const {
  if (a.syl.size() <= 1) return a;
  Word head;
  head.syl.assign(a.syl.begin() + 1, a.syl.end());
  Word tail;
  tail.syl.assign(a.syl.begin(), a.syl.begin() + 1);
  return multiply(head, tail);
}

std::vector<Word> FactorSet::cyclic_conjugates(const Word& a) const {
  std::set<Word> seen;
  std::vector<Word> out;
  Word cur = a;
  // closure under single rotations; renormalization can shorten, so iterate
  // with a generous cap rather than exactly |a| steps
  std::size_t cap = 4 * a.syl.size() + 4;
  for (std::size_t i = 0; i < cap; ++i) {
    if (seen.insert(cur).second) out.push_back(cur);
    Word nxt = rotate_once(cur);
    if (seen.count(nxt) && nxt == a) break;
    cur = nxt;
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool FactorSet::is_weakly_cyclically_reduced(const Word& a) const {
  if (a.syl.size() <= 1) return true;
  const Syllable& first = a.syl.front();
  const Syllable& last = a.syl.back();
  if (first.factor != last.factor) return true;
  return first.elem != factor(first.factor).inv(last.elem);
}

std::string FactorSet::word_str(const Word& w) const {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < w.syl.size(); ++i) {
    if (i) os << " ";
    os << factor(w.syl[i].factor).elem_str(w.syl[i].elem);
  }
  return os.str();
}

// --- relators / presentation ----------------------------------------------

Relator make_relator(const FactorSet& fs, const Word& w, const std::string& name) {
  if (w.empty()) throw InputError("empty relator");
  if (!fs.is_weakly_cyclically_reduced(w))
    throw InputError("relator not weakly cyclically reduced: " + fs.word_str(w));
  std::size_t n = w.syl.size();
  int best_d = 1;
  for (std::size_t period = 1; period < n; ++period) {
    if (n % period != 0) continue;
    bool ok = true;
    for (std::size_t i = 0; i + period < n && ok; ++i)
      if (w.syl[i] != w.syl[i + period]) ok = false;
    if (ok) {
      best_d = static_cast<int>(n / period);
      break;
    }
  }
  Relator r;
  r.word = w;
  r.exponent = best_d;
  r.base.syl.assign(w.syl.begin(), w.syl.begin() + static_cast<long>(n) / best_d);
  r.name = name;
  return r;
}

const std::vector<Word>& Presentation::symmetrized() const {
  if (!symm_built_) {
    std::set<Word> seen;
    for (std::size_t k = 0; k < relators.size(); ++k) {
      const Relator& r = relators[k];
      for (const Word& base : {r.word, factors.invert(r.word)}) {
        for (const Word& c : factors.cyclic_conjugates(base)) {
          if (seen.insert(c).second) {
            symm_.push_back(c);
            symm_orbit_.push_back(static_cast<int>(k));
          }
        }
      }
    }
    symm_built_ = true;
  }
  return symm_;
}

const std::vector<int>& Presentation::orbit_of() const {
  symmetrized();
  return symm_orbit_;
}

void Presentation::validate_for_development() const {
  for (std::size_t k = 0; k < relators.size(); ++k) {
    const Word& w = relators[k].word;
    if (w.syl.size() < 2)
      throw InputError("relator " + std::to_string(k) + " too short for a polygon");
    if (w.syl.front().factor == w.syl.back().factor)
      throw InputError("relator " + std::to_string(k) +
                       " is not cyclically alternating (first and last syllable share a factor)");
  }
}

// --- JSON -------------------------------------------------------------------

namespace {
using nlohmann::json;

Elem elem_from_json(const FactorSpec& f, const json& j) {
  Elem e;
  if (j.is_number_integer()) {
    if (f.kind == FactorKind::FreeAbelian && f.rank == 1)
      e = Elem{j.get<int>()};
    else if (f.kind == FactorKind::Finite)
      e = Elem{j.get<int>()};
    else
      throw InputError("scalar element for a factor that needs a vector");
  } else if (j.is_array()) {
    e = j.get<std::vector<int>>();
  } else {
    throw InputError("element must be an integer or an array of integers");
  }
  if (!f.is_valid_elem(e)) throw InputError("element not canonical for its factor");
  return e;
}
}  // namespace

Presentation presentation_from_json(const std::string& json_text) {
  json j = json::parse(json_text);
  std::vector<FactorSpec> fs;
  for (const auto& jf : j.at("factors")) {
    FactorSpec f;
    f.id = jf.at("id").get<int>();
    std::string kind = jf.at("kind").get<std::string>();
    if (kind == "finite") {
      f.kind = FactorKind::Finite;
      f.table = jf.at("table").get<std::vector<std::vector<int>>>();
    } else if (kind == "free_abelian") {
      f.kind = FactorKind::FreeAbelian;
      f.rank = jf.at("rank").get<int>();
    } else if (kind == "free") {
      f.kind = FactorKind::Free;
      f.rank = jf.at("rank").get<int>();
    } else {
      throw InputError("unknown factor kind: " + kind);
    }
    if (jf.contains("name")) f.name = jf.at("name").get<std::string>();
    fs.push_back(std::move(f));
  }
  Presentation p;
  p.factors = FactorSet(fs);
  int idx = 0;
  for (const auto& jr : j.at("relators")) {
    std::vector<Syllable> syls;
    for (const auto& js : jr.at("syllables")) {
      Syllable s;
      s.factor = js.at("factor").get<int>();
      s.elem = elem_from_json(p.factors.factor(s.factor), js.at("elem"));
      syls.push_back(std::move(s));
    }
    std::string name =
        jr.contains("name") ? jr.at("name").get<std::string>() : ("r" + std::to_string(idx));
    Relator r = make_relator(p.factors, p.factors.word(std::move(syls)), name);
    if (jr.contains("exponent") && jr.at("exponent").get<int>() != r.exponent)
      throw InputError("relator " + name + ": declared exponent disagrees with the word");
    p.relators.push_back(std::move(r));
    ++idx;
  }
  return p;
}

std::string presentation_to_json(const Presentation& p) {
  json j;
  j["factors"] = json::array();
  for (const auto& f : p.factors.all()) {
    json jf;
    jf["id"] = f.id;
    switch (f.kind) {
      case FactorKind::Finite:
        jf["kind"] = "finite";
        jf["table"] = f.table;
        break;
      case FactorKind::FreeAbelian:
        jf["kind"] = "free_abelian";
        jf["rank"] = f.rank;
        break;
      case FactorKind::Free:
        jf["kind"] = "free";
        jf["rank"] = f.rank;
        break;
    }
    if (!f.name.empty()) jf["name"] = f.name;
    j["factors"].push_back(jf);
  }
  j["relators"] = json::array();
  for (const auto& r : p.relators) {
    json jr;
    jr["name"] = r.name;
    jr["exponent"] = r.exponent;
    jr["syllables"] = json::array();
    for (const auto& s : r.word.syl) {
      json js;
      js["factor"] = s.factor;
      js["elem"] = s.elem;
      jr["syllables"].push_back(js);
    }
    j["relators"].push_back(jr);
  }
  return j.dump(2);
}

// --- pieces -----------------------------------------------------------------

namespace {

// e = head * rest with factor lengths adding up.
bool is_metric_head(const FactorSpec& f, const Elem& head, const Elem& e) {
  if (head == e) return true;
  Elem rest = f.mul(f.inv(head), e);
  return f.length(head) + f.length(rest) == f.length(e);
}
bool is_metric_tail(const FactorSpec& f, const Elem& tail, const Elem& e) {
  if (tail == e) return true;
  Elem rest = f.mul(e, f.inv(tail));
  return f.length(rest) + f.length(tail) == f.length(e);
}

// True when `shorter` is a weak prefix of `longer`: exact syllables except
// that the final syllable may be a metric-geodesic head of the corresponding
// syllable of `longer`.
bool is_metric_prefix(const FactorSet& fs, const Word& shorter, const Word& longer) {
  if (shorter.empty()) return true;
  if (shorter.syl.size() > longer.syl.size()) return false;
  std::size_t L = shorter.syl.size();
  for (std::size_t i = 0; i + 1 < L; ++i)
    if (shorter.syl[i] != longer.syl[i]) return false;
  const Syllable& a = shorter.syl[L - 1];
  const Syllable& b = longer.syl[L - 1];
  if (a.factor != b.factor) return false;
  return is_metric_head(fs.factor(a.factor), a.elem, b.elem);
}

// `inner` occurs inside `outer` with possibly-partial boundary syllables.
bool is_metric_subword(const FactorSet& fs, const Word& inner, const Word& outer) {
  if (inner.empty()) return true;
  std::size_t m = inner.syl.size();
  if (m > outer.syl.size()) return false;
  for (std::size_t off = 0; off + m <= outer.syl.size(); ++off) {
    bool ok = true;
    for (std::size_t i = 1; i + 1 < m && ok; ++i)
      if (inner.syl[i] != outer.syl[off + i]) ok = false;
    if (!ok) continue;
    const Syllable& first = inner.syl[0];
    const Syllable& wf = outer.syl[off];
    if (first.factor != wf.factor ||
        !is_metric_tail(fs.factor(first.factor), first.elem, wf.elem)) {
      if (!(m == 1)) continue;
    }
    if (m == 1) {
      // single syllable: any geodesic infix; accept head or tail containment
      const FactorSpec& f = fs.factor(first.factor);
      if (first.factor == wf.factor &&
          (is_metric_head(f, first.elem, wf.elem) || is_metric_tail(f, first.elem, wf.elem)))
        return true;
      continue;
    }
    const Syllable& last = inner.syl[m - 1];
    const Syllable& wl = outer.syl[off + m - 1];
    if (last.factor != wl.factor) continue;
    if (!is_metric_head(fs.factor(last.factor), last.elem, wl.elem)) continue;
    return true;
  }
  return false;
}

}  // namespace

PieceReport enumerate_pieces(const Presentation& p) {
  const auto& S = p.symmetrized();
  const FactorSet& fs = p.factors;
  PieceReport rep;
  rep.max_ratio = Rational(0, 1);

  struct Cand {
    Word word;
    long long length;
    int a, b;
  };
  std::vector<Cand> cands;

  for (std::size_t i = 0; i < S.size(); ++i) {
    for (std::size_t j = i + 1; j < S.size(); ++j) {
      const Word& u = S[i];
      const Word& v = S[j];
      std::size_t L = 0;
      while (L < u.syl.size() && L < v.syl.size() && u.syl[L] == v.syl[L]) ++L;
      Word piece;
      long long plen = 0;
      if (L == u.syl.size() || L == v.syl.size()) {
        // one word is an exact syllable prefix of the other (they differ)
        const Word& shorter = (L == u.syl.size()) ? u : v;
        piece = shorter;
        plen = static_cast<long long>(L);
      } else {
        const Syllable& su = u.syl[L];
        const Syllable& sv = v.syl[L];
        piece.syl.assign(u.syl.begin(), u.syl.begin() + static_cast<long>(L));
        plen = static_cast<long long>(L);
        if (su.factor == sv.factor) {
          const FactorSpec& f = fs.factor(su.factor);
          Elem g = f.common_geodesic_prefix(su.elem, sv.elem);
          if (!f.is_identity(g)) {
            piece.syl.push_back(Syllable{su.factor, g});
            plen += 1;
          }
        }
      }
      if (plen == 0) continue;
      cands.push_back(Cand{piece, plen, static_cast<int>(i), static_cast<int>(j)});
      Rational ra(plen, static_cast<long long>(u.syl.size()));
      Rational rb(plen, static_cast<long long>(v.syl.size()));
      if (rep.max_ratio < ra) {
        rep.max_ratio = ra;
        rep.worst_piece = piece;
        rep.worst_rel = static_cast<int>(i);
      }
      if (rep.max_ratio < rb) {
        rep.max_ratio = rb;
        rep.worst_piece = piece;
        rep.worst_rel = static_cast<int>(j);
      }
    }
  }

  // keep maximal pieces only
  std::sort(cands.begin(), cands.end(), [](const Cand& x, const Cand& y) {
    if (x.word != y.word) return x.word < y.word;
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  });
  cands.erase(std::unique(cands.begin(), cands.end(),
                          [](const Cand& x, const Cand& y) { return x.word == y.word; }),
              cands.end());
  for (const auto& c : cands) {
    bool dominated = false;
    for (const auto& d : cands) {
      if (d.word == c.word) continue;
      if (d.length >= c.length && is_metric_subword(fs, c.word, d.word)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) rep.pieces.push_back(Piece{c.word, c.length, c.a, c.b});
  }
  return rep;
}

ScVerdict check_small_cancellation(const Presentation& p, Rational lambda) {
  for (std::size_t k = 0; k < p.relators.size(); ++k) {
    if (!p.factors.is_weakly_cyclically_reduced(p.relators[k].word))
      throw InputError("NotWeaklyCyclicallyReduced: relator " + std::to_string(k));
  }
  ScVerdict v;
  v.report = enumerate_pieces(p);
  // strict |p| < lambda * |r| for every weakly reduced piece-prefix incidence;
  // max_ratio records the worst incidence exactly
  v.pass = v.report.max_ratio < lambda;
  if (!v.pass && v.report.worst_rel >= 0) {
    const auto& S = p.symmetrized();
    v.violation = "piece '" + p.factors.word_str(v.report.worst_piece) + "' against relator '" +
                  p.factors.word_str(S[static_cast<std::size_t>(v.report.worst_rel)]) +
                  "' gives ratio " + v.report.max_ratio.str() + " >= " + lambda.str();
  }
  return v;
}

}  // namespace fpcube
