#pragma once

// Finite groups as fully materialized Cayley tables. Element indices run
// 0..n-1; constructor-built groups always put the identity at index 0.
// Groups are immutable after construction and safe to share read-only.

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace psik {

using Elem = int;

/// Base for every input/validation failure raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A requested construction would exceed the configured order cap.
struct CapExceeded : Error {
  using Error::Error;
};

/// A raw table or action failed validation.
struct ValidationError : Error {
  using Error::Error;
};

struct BuildLimits {
  int max_order = 20000;        // cap on any materialized group order
  int assoc_check_limit = 256;  // imported tables up to this order get the full O(n^3) check
  bool force_assoc_check = false;
};

struct Permutation {
  std::vector<Elem> images;  // images[i] = image of point i

  int degree() const noexcept { return static_cast<int>(images.size()); }
  Elem operator()(Elem i) const { return images[i]; }

  static Permutation identity(int degree) {
    Permutation p;
    p.images.resize(degree);
    std::iota(p.images.begin(), p.images.end(), 0);
    return p;
  }

  /// Build from disjoint cycles; points not mentioned are fixed.
  static Permutation from_cycles(int degree, const std::vector<std::vector<Elem>>& cycles) {
    Permutation p = identity(degree);
    for (const auto& cyc : cycles) {
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        Elem from = cyc[i];
        Elem to = cyc[(i + 1) % cyc.size()];
        if (from < 0 || from >= degree || to < 0 || to >= degree)
          throw ValidationError("cycle point out of range");
        p.images[from] = to;
      }
    }
    if (!p.valid()) throw ValidationError("cycles are not disjoint");
    return p;
  }

  bool valid() const {
    std::vector<char> seen(images.size(), 0);
    for (Elem v : images) {
      if (v < 0 || v >= degree() || seen[v]) return false;
      seen[v] = 1;
    }
    return true;
  }

  bool operator==(const Permutation& o) const { return images == o.images; }
  bool operator<(const Permutation& o) const { return images < o.images; }
};

/// Function composition: (a * b) applies b first, then a.
inline Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation r;
  r.images.resize(b.images.size());
  for (std::size_t i = 0; i < b.images.size(); ++i) r.images[i] = a.images[b.images[i]];
  return r;
}

class FiniteGroup {
 public:
  /// Validate and adopt a raw Cayley table. Latin-square, identity and
  /// inverse checks always run; the full associativity check runs when
  /// n <= limits.assoc_check_limit or limits.force_assoc_check is set.
  static FiniteGroup from_table(std::string name, const std::vector<std::vector<Elem>>& rows,
                                const BuildLimits& limits = {}) {
    const int n = static_cast<int>(rows.size());
    if (n == 0) throw ValidationError("empty table");
    if (n > limits.max_order) throw CapExceeded("group too large: order " + std::to_string(n));
    std::vector<Elem> flat(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
      if (static_cast<int>(rows[a].size()) != n)
        throw ValidationError("table row " + std::to_string(a) + " has wrong length");
      for (int b = 0; b < n; ++b) {
        Elem v = rows[a][b];
        if (v < 0 || v >= n)
          throw ValidationError("table entry out of range at (" + std::to_string(a) + "," +
                                std::to_string(b) + ")");
        flat[static_cast<std::size_t>(a) * n + b] = v;
      }
    }
    FiniteGroup g(std::move(name), n, std::move(flat), /*trusted=*/false);
    if (n <= limits.assoc_check_limit || limits.force_assoc_check) g.check_associativity();
    return g;
  }

  int order() const noexcept { return n_; }
  Elem identity() const noexcept { return identity_; }
  const std::string& name() const noexcept { return name_; }
  void rename(std::string s) { name_ = std::move(s); }

  Elem mul(Elem a, Elem b) const {
    check_index(a);
    check_index(b);
    return table_[static_cast<std::size_t>(a) * n_ + b];
  }
  Elem inverse(Elem a) const {
    check_index(a);
    return inv_[a];
  }

  /// Conjugate of x by g: g^-1 x g.
  Elem conj(Elem x, Elem g) const { return mul(mul(inverse(g), x), g); }

  bool operator==(const FiniteGroup& o) const { return n_ == o.n_ && table_ == o.table_; }

 private:
  FiniteGroup(std::string name, int n, std::vector<Elem> table, bool trusted)
      : name_(std::move(name)), n_(n), table_(std::move(table)) {
    if (trusted) {
      identity_ = 0;  // builders index the identity first
    } else {
      find_identity();
      check_latin();
    }
    compute_inverses();
  }

  void find_identity() {
    identity_ = -1;
    for (Elem e = 0; e < n_ && identity_ < 0; ++e) {
      bool ok = true;
      for (Elem a = 0; a < n_ && ok; ++a)
        ok = table_[static_cast<std::size_t>(e) * n_ + a] == a &&
             table_[static_cast<std::size_t>(a) * n_ + e] == a;
      if (ok) identity_ = e;
    }
    if (identity_ < 0) throw ValidationError("table has no identity element");
  }

  void check_latin() {
    std::vector<char> seen(n_);
    for (int a = 0; a < n_; ++a) {
      std::fill(seen.begin(), seen.end(), 0);
      for (int b = 0; b < n_; ++b) seen[table_[static_cast<std::size_t>(a) * n_ + b]] = 1;
      if (std::find(seen.begin(), seen.end(), 0) != seen.end())
        throw ValidationError("row " + std::to_string(a) + " is not a permutation");
    }
    for (int b = 0; b < n_; ++b) {
      std::fill(seen.begin(), seen.end(), 0);
      for (int a = 0; a < n_; ++a) seen[table_[static_cast<std::size_t>(a) * n_ + b]] = 1;
      if (std::find(seen.begin(), seen.end(), 0) != seen.end())
        throw ValidationError("column " + std::to_string(b) + " is not a permutation");
    }
  }

  void check_associativity() const {
    for (Elem a = 0; a < n_; ++a)
      for (Elem b = 0; b < n_; ++b) {
        Elem ab = table_[static_cast<std::size_t>(a) * n_ + b];
        for (Elem c = 0; c < n_; ++c) {
          Elem bc = table_[static_cast<std::size_t>(b) * n_ + c];
          if (table_[static_cast<std::size_t>(ab) * n_ + c] !=
              table_[static_cast<std::size_t>(a) * n_ + bc])
            throw ValidationError("table is not associative at (" + std::to_string(a) + "," +
                                  std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
  }

  void compute_inverses() {
    inv_.assign(n_, -1);
    for (Elem a = 0; a < n_; ++a) {
      for (Elem b = 0; b < n_; ++b) {
        if (table_[static_cast<std::size_t>(a) * n_ + b] == identity_ &&
            table_[static_cast<std::size_t>(b) * n_ + a] == identity_) {
          inv_[a] = b;
          break;
        }
      }
      if (inv_[a] < 0) throw ValidationError("element " + std::to_string(a) + " has no inverse");
    }
  }

  void check_index(Elem a) const {
    if (a < 0 || a >= n_)
      throw Error("element index " + std::to_string(a) + " out of range for order " +
                  std::to_string(n_));
  }

  friend FiniteGroup cyclic_group(long long, const BuildLimits&);
  friend FiniteGroup perm_group(int, const std::vector<Permutation>&, const BuildLimits&);
  friend FiniteGroup direct_product(const FiniteGroup&, const FiniteGroup&, const BuildLimits&);
  friend FiniteGroup semidirect_product(const FiniteGroup&, const FiniteGroup&,
                                        const struct ActionSpec&, const std::vector<Elem>&,
                                        const BuildLimits&);
  friend class QuotientBuilder;

  std::string name_;
  int n_;
  Elem identity_ = 0;
  std::vector<Elem> table_;  // row-major, table_[a*n + b] = a*b
  std::vector<Elem> inv_;
};

/// Z_n with i*j = (i+j) mod n and identity 0.
inline FiniteGroup cyclic_group(long long n, const BuildLimits& limits = {}) {
  if (n < 1) throw Error("cyclic_group: order must be at least 1");
  if (n > limits.max_order) throw CapExceeded("group too large: order " + std::to_string(n));
  const int m = static_cast<int>(n);
  std::vector<Elem> table(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) table[static_cast<std::size_t>(i) * m + j] = (i + j) % m;
  return FiniteGroup("Z" + std::to_string(n), m, std::move(table), /*trusted=*/true);
}

/// Closure of the given permutations under composition. Elements are
/// indexed identity-first, then in BFS discovery order with the given
/// generator order, so the numbering is reproducible.
inline FiniteGroup perm_group(int degree, const std::vector<Permutation>& gens,
                              const BuildLimits& limits = {}) {
  if (degree < 1) throw Error("perm_group: degree must be at least 1");
  for (const auto& g : gens) {
    if (g.degree() != degree) throw ValidationError("generator degree mismatch");
    if (!g.valid()) throw ValidationError("generator is not a permutation");
  }

  std::vector<Permutation> elems;
  std::map<Permutation, Elem> index;
  elems.push_back(Permutation::identity(degree));
  index.emplace(elems[0], 0);
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : gens) {
      Permutation next = compose(elems[head], g);
      if (index.emplace(next, static_cast<Elem>(elems.size())).second) {
        elems.push_back(std::move(next));
        if (static_cast<int>(elems.size()) > limits.max_order)
          throw CapExceeded("group too large: closure exceeds cap " +
                            std::to_string(limits.max_order));
      }
    }
  }

  const int n = static_cast<int>(elems.size());
  std::vector<Elem> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[static_cast<std::size_t>(a) * n + b] = index.at(compose(elems[a], elems[b]));
  return FiniteGroup("perm" + std::to_string(degree) + "_" + std::to_string(n), n,
                     std::move(table), /*trusted=*/true);
}

namespace detail {
inline std::string compound_name(const std::string& s) {
  return s.find(':') != std::string::npos || s.find('x') != std::string::npos ? "(" + s + ")" : s;
}
}  // namespace detail

/// Componentwise product on pairs; (a,b) is indexed as a*|B| + b.
inline FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B,
                                  const BuildLimits& limits = {}) {
  const long long n = static_cast<long long>(A.order()) * B.order();
  if (n > limits.max_order) throw CapExceeded("group too large: order " + std::to_string(n));
  const int na = A.order(), nb = B.order(), m = static_cast<int>(n);
  std::vector<Elem> table(static_cast<std::size_t>(m) * m);
  for (int a1 = 0; a1 < na; ++a1)
    for (int b1 = 0; b1 < nb; ++b1)
      for (int a2 = 0; a2 < na; ++a2)
        for (int b2 = 0; b2 < nb; ++b2) {
          const int i = a1 * nb + b1, j = a2 * nb + b2;
          table[static_cast<std::size_t>(i) * m + j] = A.mul(a1, a2) * nb + B.mul(b1, b2);
        }
  return FiniteGroup(detail::compound_name(A.name()) + "x" + detail::compound_name(B.name()), m,
                     std::move(table), /*trusted=*/true);
}

/// Action of a group on a normal subgroup-to-be: one image array per
/// acting generator, each an automorphism of the normal group.
struct ActionSpec {
  int normal_order = 0;
  std::vector<std::vector<Elem>> maps;  // maps[i] belongs to acting_gens[i]

  static ActionSpec trivial(const FiniteGroup& N, int gen_count) {
    ActionSpec a;
    a.normal_order = N.order();
    std::vector<Elem> id(N.order());
    std::iota(id.begin(), id.end(), 0);
    a.maps.assign(gen_count, id);
    return a;
  }
};

namespace detail {

inline void check_automorphism(const FiniteGroup& N, const std::vector<Elem>& m) {
  if (static_cast<int>(m.size()) != N.order())
    throw ValidationError("action map has wrong length");
  std::vector<char> seen(N.order(), 0);
  for (Elem v : m) {
    if (v < 0 || v >= N.order() || seen[v]) throw ValidationError("action map is not a permutation");
    seen[v] = 1;
  }
  for (Elem a = 0; a < N.order(); ++a)
    for (Elem b = 0; b < N.order(); ++b)
      if (m[N.mul(a, b)] != N.mul(m[a], m[b]))
        throw ValidationError("action map is not an automorphism");
}

}  // namespace detail

/// Semidirect product on pairs (h, n), indexed h*|N| + n, with
///   (h1,n1)*(h2,n2) = (h1*h2, act(h2)(n1) * n2),
/// i.e. the acting group acts on the right and the generator maps extend
/// to an anti-homomorphism into Aut(N). The extension is built by BFS
/// over H; every Cayley-graph edge is checked, which makes the extension
/// well-defined whenever construction succeeds.
inline FiniteGroup semidirect_product(const FiniteGroup& N, const FiniteGroup& H,
                                      const ActionSpec& action, const std::vector<Elem>& h_gens,
                                      const BuildLimits& limits = {}) {
  if (action.normal_order != N.order())
    throw ValidationError("action normal_order does not match |N|");
  if (action.maps.size() != h_gens.size())
    throw ValidationError("need exactly one action map per acting generator");
  for (const auto& m : action.maps) detail::check_automorphism(N, m);
  for (Elem g : h_gens)
    if (g < 0 || g >= H.order()) throw ValidationError("acting generator index out of range");

  const long long total = static_cast<long long>(N.order()) * H.order();
  if (total > limits.max_order) throw CapExceeded("group too large: order " + std::to_string(total));

  // Extend generator maps over all of H: act(h*g) = act(g) after act(h).
  const int nn = N.order(), nh = H.order();
  std::vector<std::vector<Elem>> act(nh);
  std::vector<char> known(nh, 0);
  act[H.identity()].resize(nn);
  std::iota(act[H.identity()].begin(), act[H.identity()].end(), 0);
  known[H.identity()] = 1;
  std::vector<Elem> bfs{H.identity()};
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    const Elem h = bfs[head];
    for (std::size_t gi = 0; gi < h_gens.size(); ++gi) {
      const Elem hg = H.mul(h, h_gens[gi]);
      std::vector<Elem> composed(nn);
      for (Elem x = 0; x < nn; ++x) composed[x] = action.maps[gi][act[h][x]];
      if (!known[hg]) {
        act[hg] = std::move(composed);
        known[hg] = 1;
        bfs.push_back(hg);
      } else if (act[hg] != composed) {
        throw ValidationError("action maps do not extend consistently over the acting group");
      }
    }
  }
  if (static_cast<int>(bfs.size()) != nh)
    throw ValidationError("acting generators do not generate the acting group");

  const int m = static_cast<int>(total);
  std::vector<Elem> table(static_cast<std::size_t>(m) * m);
  for (Elem h1 = 0; h1 < nh; ++h1)
    for (Elem n1 = 0; n1 < nn; ++n1)
      for (Elem h2 = 0; h2 < nh; ++h2)
        for (Elem n2 = 0; n2 < nn; ++n2) {
          const int i = h1 * nn + n1, j = h2 * nn + n2;
          table[static_cast<std::size_t>(i) * m + j] = H.mul(h1, h2) * nn + N.mul(act[h2][n1], n2);
        }
  return FiniteGroup(detail::compound_name(N.name()) + ":" + detail::compound_name(H.name()), m,
                     std::move(table), /*trusted=*/true);
}

/// Smallest m >= 1 with a^m = identity; always divides the group order.
inline long long element_order(const FiniteGroup& G, Elem a) {
  Elem x = a;
  long long m = 1;
  while (x != G.identity()) {
    x = G.mul(x, a);
    ++m;
  }
  return m;
}

inline long long max_element_order(const FiniteGroup& G) {
  long long best = 1;
  for (Elem a = 0; a < G.order(); ++a) best = std::max(best, element_order(G, a));
  return best;
}

inline bool is_cyclic(const FiniteGroup& G) { return max_element_order(G) == G.order(); }

}  // namespace psik
