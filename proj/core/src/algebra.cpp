#include "rmlogic/algebra.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "rmlogic/errors.hpp"
#include "rmlogic/translate.hpp"

namespace rmlogic {

int FiniteAlgebra::constant(const std::string& name) const {
  auto it = constants.find(name);
  if (it == constants.end()) throw InputError("algebra has no constant '" + name + "'");
  return it->second;
}

int FiniteAlgebra::apply(const std::string& op, int a) const {
  auto it = unops.find(op);
  if (it == unops.end()) throw InputError("algebra has no unary operation '" + op + "'");
  return it->second[static_cast<std::size_t>(a)];
}

int FiniteAlgebra::apply(const std::string& op, int a, int b) const {
  auto it = binops.find(op);
  if (it == binops.end()) throw InputError("algebra has no binary operation '" + op + "'");
  return it->second[static_cast<std::size_t>(a * size + b)];
}

std::string FiniteAlgebra::label(int e) const {
  return labels.empty() ? std::to_string(e) : labels[static_cast<std::size_t>(e)];
}

int evaluate(const FiniteAlgebra& a, const Term& t, const std::vector<int>& assignment) {
  switch (t.kind()) {
    case Term::Kind::Var: return assignment[static_cast<std::size_t>(t.index())];
    case Term::Kind::Const: return a.constant(t.name());
    case Term::Kind::Unop: return a.apply(t.name(), evaluate(a, t.arg(0), assignment));
    case Term::Kind::Binop:
      return a.apply(t.name(), evaluate(a, t.arg(0), assignment), evaluate(a, t.arg(1), assignment));
  }
  return 0;
}

namespace {

void check_signature(const FiniteAlgebra& a, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var: return;
    case Term::Kind::Const:
      if (!a.constants.count(t.name())) throw InputError("signature mismatch: no constant '" + t.name() + "'");
      return;
    case Term::Kind::Unop:
      if (!a.unops.count(t.name())) throw InputError("signature mismatch: no unary operation '" + t.name() + "'");
      break;
    case Term::Kind::Binop:
      if (!a.binops.count(t.name())) {
        throw InputError("signature mismatch: no binary operation '" + t.name() + "'");
      }
      break;
  }
  for (std::size_t i = 0; i < t.arg_count(); ++i) check_signature(a, t.arg(i));
}

}  // namespace

AxiomReport check_axioms(const FiniteAlgebra& a, const AxiomSet& s) {
  for (const auto& e : s.equations) {
    check_signature(a, e.lhs);
    check_signature(a, e.rhs);
  }
  for (std::size_t k = 0; k < s.equations.size(); ++k) {
    const auto& e = s.equations[k];
    const int vars = std::max(e.lhs.var_count(), e.rhs.var_count());
    std::vector<int> asg(static_cast<std::size_t>(vars), 0);
    while (true) {
      const int l = evaluate(a, e.lhs, asg);
      const int r = evaluate(a, e.rhs, asg);
      if (l != r) return {false, AxiomFailure{k, e.label, asg, l, r}};
      int i = vars - 1;
      while (i >= 0 && ++asg[static_cast<std::size_t>(i)] == a.size) asg[static_cast<std::size_t>(i--)] = 0;
      if (i < 0) break;
    }
  }
  return {};
}

std::string describe(const AxiomSet& s, const AxiomFailure& f, const FiniteAlgebra& a) {
  const auto& e = s.equations[f.equation];
  std::string out = "axiom '" + f.label + "' fails: " + render(e.lhs) + " = " + render(e.rhs) + " at";
  static const char* names[] = {"x", "y", "z", "w"};
  for (std::size_t i = 0; i < f.assignment.size(); ++i) {
    out += std::string(" ") + (i < 4 ? names[i] : ("v" + std::to_string(i)).c_str()) + "=" +
           a.label(f.assignment[i]);
  }
  out += " (" + a.label(f.lhs_value) + " vs " + a.label(f.rhs_value) + ")";
  return out;
}

namespace {

/// Algebra on a list of elements whose operations are computed pointwise.
template <typename Elem, typename Index>
FiniteAlgebra build(const std::vector<Elem>& elems, Index index_of_elem,
                    const std::map<std::string, Elem>& consts,
                    const std::map<std::string, std::function<Elem(const Elem&)>>& un,
                    const std::map<std::string, std::function<Elem(const Elem&, const Elem&)>>& bin) {
  FiniteAlgebra a;
  a.size = static_cast<int>(elems.size());
  for (const auto& [n, e] : consts) a.constants[n] = index_of_elem(e);
  for (const auto& [n, f] : un) {
    auto& t = a.unops[n];
    for (const auto& e : elems) t.push_back(index_of_elem(f(e)));
  }
  for (const auto& [n, f] : bin) {
    auto& t = a.binops[n];
    t.reserve(elems.size() * elems.size());
    for (const auto& x : elems) {
      for (const auto& y : elems) t.push_back(index_of_elem(f(x, y)));
    }
  }
  return a;
}

using Word = std::vector<Trit>;

Word lift1(Trit (*f)(Trit), const Word& x) {
  Word w(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) w[i] = f(x[i]);
  return w;
}

Word lift2(Trit (*f)(Trit, Trit), const Word& x, const Word& y) {
  Word w(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) w[i] = f(x[i], y[i]);
  return w;
}

std::vector<Word> words(int n) {
  std::vector<Word> out;
  for (std::uint64_t i = 0; i < pow3(n); ++i) out.push_back(Valuation(n, i).digits());
  return out;
}

int word_index(const Word& w) {
  std::uint64_t idx = 0;
  for (Trit t : w) idx = idx * 3 + static_cast<std::uint64_t>(index_of(t));
  return static_cast<int>(idx);
}

Trit tj(Trit a, Trit b) { return join(a, b); }
Trit td(Trit a, Trit b) { return dpar(a, b); }
Trit tm(Trit a, Trit b) { return meet(a, b); }
Trit tv(Trit a, Trit b) { return vee(a, b); }
Trit tn(Trit a) { return neg(a); }
Trit tna(Trit a) { return nabla(a); }

FiniteAlgebra words_algebra(int n, bool post) {
  if (n < 0 || n > 4) throw ArityError("faces algebra needs 0 <= n <= 4");
  const auto ws = words(n);
  std::map<std::string, Word> consts{{"zero", Word(static_cast<std::size_t>(n), Trit::Zero)},
                                     {"half", Word(static_cast<std::size_t>(n), Trit::Half)}};
  std::map<std::string, std::function<Word(const Word&)>> un;
  std::map<std::string, std::function<Word(const Word&, const Word&)>> bin{
      {"meet", [](const Word& x, const Word& y) { return lift2(tm, x, y); }}};
  if (post) {
    consts["one"] = Word(static_cast<std::size_t>(n), Trit::One);
    un["neg"] = [](const Word& x) { return lift1(tn, x); };
    un["nabla"] = [](const Word& x) { return lift1(tna, x); };
    bin["vee"] = [](const Word& x, const Word& y) { return lift2(tv, x, y); };
  } else {
    bin["join"] = [](const Word& x, const Word& y) { return lift2(tj, x, y); };
    bin["dpar"] = [](const Word& x, const Word& y) { return lift2(td, x, y); };
  }
  FiniteAlgebra a = build(ws, word_index, consts, un, bin);
  for (const auto& w : ws) {
    std::string s;
    for (Trit t : w) s += to_char(t);
    a.labels.push_back(n == 0 ? std::string("()") : s);
  }
  return a;
}

}  // namespace

FiniteAlgebra z_post() { return words_algebra(1, true); }
FiniteAlgebra z_rm() { return words_algebra(1, false); }
FiniteAlgebra faces_algebra(int n) { return words_algebra(n, false); }
FiniteAlgebra faces_post_algebra(int n) { return words_algebra(n, true); }

namespace {

bool same_signature(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  auto keys = [](const auto& m) {
    std::vector<std::string> k;
    for (const auto& [n, v] : m) k.push_back(n);
    return k;
  };
  return keys(a.constants) == keys(b.constants) && keys(a.unops) == keys(b.unops) &&
         keys(a.binops) == keys(b.binops);
}

}  // namespace

FiniteAlgebra product(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (!same_signature(a, b)) throw InputError("product of algebras with different signatures");
  FiniteAlgebra p;
  p.size = a.size * b.size;
  auto pair = [&](int i, int j) { return i * b.size + j; };
  for (const auto& [n, v] : a.constants) p.constants[n] = pair(v, b.constants.at(n));
  for (const auto& [n, t] : a.unops) {
    auto& out = p.unops[n];
    for (int i = 0; i < a.size; ++i) {
      for (int j = 0; j < b.size; ++j) out.push_back(pair(a.apply(n, i), b.apply(n, j)));
    }
  }
  for (const auto& [n, t] : a.binops) {
    auto& out = p.binops[n];
    out.resize(static_cast<std::size_t>(p.size) * static_cast<std::size_t>(p.size));
    for (int x = 0; x < p.size; ++x) {
      for (int y = 0; y < p.size; ++y) {
        out[static_cast<std::size_t>(x * p.size + y)] =
            pair(a.apply(n, x / b.size, y / b.size), b.apply(n, x % b.size, y % b.size));
      }
    }
  }
  for (int i = 0; i < a.size; ++i) {
    for (int j = 0; j < b.size; ++j) p.labels.push_back("(" + a.label(i) + "," + b.label(j) + ")");
  }
  return p;
}

FiniteAlgebra derive_post(const FiniteAlgebra& a) {
  const AxiomSet e = rm_axioms();
  if (auto r = check_axioms(a, e); !r.pass) throw InvariantError("derive_post: " + describe(e, *r.failure, a));
  FiniteAlgebra p;
  p.size = a.size;
  p.labels = a.labels;
  const int zero = a.constant("zero");
  const int half = a.constant("half");
  p.constants = {{"zero", zero}, {"half", half}, {"one", a.apply("dpar", half, zero)}};
  auto& ng = p.unops["neg"];
  auto& nb = p.unops["nabla"];
  for (int x = 0; x < a.size; ++x) {
    ng.push_back(a.apply("dpar", half, x));
    nb.push_back(a.apply("dpar", x, zero));
  }
  auto& vv = p.binops["vee"];
  p.binops["meet"] = a.binops.at("meet");
  for (int x = 0; x < a.size; ++x) {
    for (int y = 0; y < a.size; ++y) vv.push_back(ng[static_cast<std::size_t>(a.apply("meet", ng[x], ng[y]))]);
  }
  return p;
}

FiniteAlgebra derive_rm(const FiniteAlgebra& a) {
  const AxiomSet post = post_axioms();
  if (auto r = check_axioms(a, post); !r.pass) throw InvariantError("derive_rm: " + describe(post, *r.failure, a));
  FiniteAlgebra r;
  r.size = a.size;
  r.labels = a.labels;
  r.constants = {{"zero", a.constant("zero")}, {"half", a.constant("half")}};
  r.binops["meet"] = a.binops.at("meet");
  const Term jt = post_term(join_post_term());
  const Term dt = post_term(dpar_post_term());
  auto& j = r.binops["join"];
  auto& d = r.binops["dpar"];
  for (int x = 0; x < a.size; ++x) {
    for (int y = 0; y < a.size; ++y) {
      j.push_back(evaluate(a, jt, {x, y}));
      d.push_back(evaluate(a, dt, {x, y}));
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Isomorphism search

namespace {

std::vector<std::vector<int>> invariants(const FiniteAlgebra& a) {
  std::vector<std::vector<int>> inv(static_cast<std::size_t>(a.size));
  for (int x = 0; x < a.size; ++x) {
    auto& v = inv[static_cast<std::size_t>(x)];
    for (const auto& [n, t] : a.unops) {
      v.push_back(t[static_cast<std::size_t>(x)] == x);
      v.push_back(t[static_cast<std::size_t>(t[static_cast<std::size_t>(x)])] == x);
    }
    for (const auto& [n, t] : a.binops) {
      v.push_back(a.apply(n, x, x) == x);
      int left = 0, right = 0;
      for (int y = 0; y < a.size; ++y) {
        left += a.apply(n, x, y) == x;
        right += a.apply(n, y, x) == x;
      }
      v.push_back(left);
      v.push_back(right);
    }
  }
  return inv;
}

class IsoSearch {
 public:
  IsoSearch(const FiniteAlgebra& a, const FiniteAlgebra& b)
      : a_(a), b_(b), h_(static_cast<std::size_t>(a.size), -1), inv_(static_cast<std::size_t>(a.size), -1),
        ia_(invariants(a)), ib_(invariants(b)) {}

  std::optional<std::vector<int>> run() {
    for (const auto& [n, c] : a_.constants) {
      if (!force(c, b_.constants.at(n))) return std::nullopt;
    }
    if (!propagate()) return std::nullopt;
    if (search()) return h_;
    return std::nullopt;
  }

 private:
  bool force(int x, int y) {
    const auto xs = static_cast<std::size_t>(x), ys = static_cast<std::size_t>(y);
    if (h_[xs] == y) return true;
    if (h_[xs] != -1 || inv_[ys] != -1) return false;
    if (ia_[xs] != ib_[ys]) return false;
    h_[xs] = y;
    inv_[ys] = x;
    assigned_.push_back(x);
    return true;
  }

  bool propagate() {
    while (done_ < assigned_.size()) {
      const int x = assigned_[done_++];
      const int hx = h_[static_cast<std::size_t>(x)];
      for (const auto& [n, t] : a_.unops) {
        if (!force(a_.apply(n, x), b_.apply(n, hx))) return false;
      }
      for (const auto& [n, t] : a_.binops) {
        for (std::size_t k = 0; k < done_; ++k) {
          const int y = assigned_[k];
          const int hy = h_[static_cast<std::size_t>(y)];
          if (!force(a_.apply(n, x, y), b_.apply(n, hx, hy))) return false;
          if (!force(a_.apply(n, y, x), b_.apply(n, hy, hx))) return false;
        }
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (assigned_.size() > mark) {
      const int x = assigned_.back();
      assigned_.pop_back();
      inv_[static_cast<std::size_t>(h_[static_cast<std::size_t>(x)])] = -1;
      h_[static_cast<std::size_t>(x)] = -1;
    }
    done_ = std::min(done_, mark);
  }

  bool search() {
    int x = -1;
    for (int i = 0; i < a_.size && x < 0; ++i) {
      if (h_[static_cast<std::size_t>(i)] == -1) x = i;
    }
    if (x < 0) return true;
    for (int y = 0; y < b_.size; ++y) {
      if (inv_[static_cast<std::size_t>(y)] != -1) continue;
      const std::size_t mark = assigned_.size();
      if (force(x, y) && propagate() && search()) return true;
      undo(mark);
    }
    return false;
  }

  const FiniteAlgebra& a_;
  const FiniteAlgebra& b_;
  std::vector<int> h_;
  std::vector<int> inv_;
  std::vector<std::vector<int>> ia_;
  std::vector<std::vector<int>> ib_;
  std::vector<int> assigned_;
  std::size_t done_ = 0;
};

}  // namespace

std::optional<std::vector<int>> iso_check(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (a.size > kIsoSizeBound || b.size > kIsoSizeBound) {
    throw PreconditionError("iso_check is limited to " + std::to_string(kIsoSizeBound) + " elements");
  }
  if (!same_signature(a, b)) throw InputError("iso_check: signatures differ");
  if (a.size != b.size) return std::nullopt;
  return IsoSearch(a, b).run();
}

// ---------------------------------------------------------------------------
// Free algebra

FreeRm::FreeRm(int m) : m_(m) {
  if (m < 0 || m > 2) throw ArityError("free_rm supports 0 <= m <= 2");
}

std::uint64_t FreeRm::size() const { return pow3(static_cast<int>(pow3(m_))); }

std::vector<TruthTable> FreeRm::generators() const {
  std::vector<TruthTable> g;
  for (int i = 1; i <= m_; ++i) g.push_back(TruthTable::coordinate(m_, i));
  return g;
}

FiniteAlgebra FreeRm::materialize() const {
  if (m_ > 1) throw ArityError("free_rm(" + std::to_string(m_) + ") is too large to materialize");
  std::vector<TruthTable> elems;
  for (std::uint64_t c = 0; c < size(); ++c) elems.push_back(element(c));
  auto idx = [](const TruthTable& t) { return static_cast<int>(t.code()); };
  using T = TruthTable;
  FiniteAlgebra a = build<T>(
      elems, idx, {{"zero", T::constant(m_, Trit::Zero)}, {"half", T::constant(m_, Trit::Half)}}, {},
      {{"join", [](const T& x, const T& y) { return join(x, y); }},
       {"dpar", [](const T& x, const T& y) { return dpar(x, y); }},
       {"meet", [](const T& x, const T& y) { return meet(x, y); }}});
  for (const auto& e : elems) a.labels.push_back(e.row());
  return a;
}

FreeRm free_rm(int m) { return FreeRm(m); }

std::vector<TruthTable> rm_closure(const std::vector<TruthTable>& generators) {
  if (generators.empty()) throw PreconditionError("rm_closure needs at least one generator");
  const int m = generators.front().arity();
  std::vector<TruthTable> all;
  std::set<std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>> seen;
  auto add = [&](const TruthTable& t) {
    auto key = std::make_pair(std::vector<std::uint64_t>(t.zero_plane().begin(), t.zero_plane().end()),
                              std::vector<std::uint64_t>(t.one_plane().begin(), t.one_plane().end()));
    if (seen.insert(std::move(key)).second) all.push_back(t);
  };
  add(TruthTable::constant(m, Trit::Zero));
  add(TruthTable::constant(m, Trit::Half));
  for (const auto& g : generators) {
    if (g.arity() != m) throw InputError("rm_closure: generators of different arity");
    add(g);
  }
  std::size_t old_end = 0;
  while (old_end < all.size()) {
    const std::size_t new_end = all.size();
    for (std::size_t i = 0; i < new_end; ++i) {
      for (std::size_t j = (i < old_end ? old_end : 0); j < new_end; ++j) {
        const TruthTable x = all[i];
        const TruthTable y = all[j];
        add(join(x, y));
        add(meet(x, y));
        add(dpar(x, y));
        add(dpar(y, x));
      }
    }
    old_end = new_end;
  }
  return all;
}

// ---------------------------------------------------------------------------
// Text format

FiniteAlgebra parse_algebra(std::string_view text) {
  FiniteAlgebra a;
  a.size = -1;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) -> InputError {
    return InputError("algebra line " + std::to_string(lineno) + ": " + msg);
  };
  auto read_entries = [&](std::istringstream& rest, std::size_t count) {
    std::vector<int> v;
    int x = 0;
    while (rest >> x) {
      if (x < 0 || x >= a.size) throw fail("entry " + std::to_string(x) + " outside carrier");
      v.push_back(x);
    }
    if (!rest.eof()) throw fail("non-numeric entry");
    if (v.size() != count) {
      throw fail("expected " + std::to_string(count) + " entries, got " + std::to_string(v.size()));
    }
    return v;
  };
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    for (char& c : line) {
      if (c == ':' || c == '=') c = ' ';
    }
    std::istringstream ls(line);
    std::string kw, name;
    ls >> kw;
    if (kw == "carrier") {
      if (!(ls >> a.size) || a.size < 1) throw fail("bad carrier size");
      continue;
    }
    if (a.size < 1) throw fail("'carrier: k' must come first");
    if (!(ls >> name)) throw fail("missing name");
    if (kw == "const") {
      auto v = read_entries(ls, 1);
      a.constants[name] = v[0];
    } else if (kw == "unop") {
      a.unops[name] = read_entries(ls, static_cast<std::size_t>(a.size));
    } else if (kw == "binop") {
      a.binops[name] = read_entries(ls, static_cast<std::size_t>(a.size) * static_cast<std::size_t>(a.size));
    } else {
      throw fail("unknown keyword '" + kw + "'");
    }
  }
  if (a.size < 1) throw InputError("algebra text has no carrier line");
  return a;
}

std::string format_algebra(const FiniteAlgebra& a) {
  std::ostringstream out;
  out << "carrier: " << a.size << "\n";
  for (const auto& [n, c] : a.constants) out << "const " << n << " = " << c << "\n";
  auto entries = [&](const std::vector<int>& t) {
    for (std::size_t i = 0; i < t.size(); ++i) out << (i ? " " : "") << t[i];
    out << "\n";
  };
  for (const auto& [n, t] : a.unops) {
    out << "unop " << n << ": ";
    entries(t);
  }
  for (const auto& [n, t] : a.binops) {
    out << "binop " << n << ": ";
    entries(t);
  }
  return out.str();
}

}  // namespace rmlogic
