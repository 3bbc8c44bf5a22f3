#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "laura/doze.hpp"
#include "laura/error.hpp"
#include "laura/linalg.hpp"
#include "laura/presentation.hpp"
#include "laura/strings.hpp"
#include "laura/walk.hpp"

namespace laura {

/// A representation of the bound quiver: a vector space per vertex and a
/// matrix per arrow, sized dims[target] x dims[source].
struct Representation {
  std::vector<std::size_t> dims;
  std::vector<QMatrix> maps;

  std::size_t total_dim() const {
    std::size_t t = 0;
    for (auto d : dims) t += d;
    return t;
  }

  friend bool operator==(const Representation&, const Representation&) = default;
};

/// A morphism of representations, one block per vertex.
struct ModuleMap {
  Representation source;
  Representation target;
  std::vector<QMatrix> blocks;
};

/// Matrix of the path a1...ak starting at `from`, i.e. M(ak)...M(a1).
inline QMatrix path_matrix(const Representation& m, Vertex from,
                           const std::vector<ArrowIndex>& arrows, const Quiver& q) {
  QMatrix out = QMatrix::identity(m.dims.at(from));
  for (ArrowIndex a : arrows) {
    if (q.source(a) != from) throw PreconditionError("path_matrix: path is not composable");
    out = m.maps[a] * out;
    from = q.target(a);
  }
  return out;
}

/// Shapes agree with the quiver and every zero generator acts as zero.
inline void check_representation(const Presentation& p, const Representation& m) {
  const Quiver& q = p.quiver();
  if (m.dims.size() != q.vertex_count() || m.maps.size() != q.arrow_count()) {
    throw PreconditionError("representation does not match the quiver");
  }
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
    if (m.maps[a].rows() != m.dims[q.target(a)] || m.maps[a].cols() != m.dims[q.source(a)]) {
      throw PreconditionError("matrix of arrow '" + q.arrow_id(a) + "' has the wrong shape");
    }
  }
  for (const Path& z : p.zeros()) {
    if (!path_matrix(m, path_source(q, z), z.arrows, q).is_zero()) {
      throw PreconditionError("zero relation " + render_walk(q, path_walk(q, z)) +
                              " does not act as zero");
    }
  }
  for (const CommRelation& c : p.comms()) {
    Vertex s = path_source(q, c.left);
    if (!(path_matrix(m, s, c.left.arrows, q) == path_matrix(m, s, c.right.arrows, q))) {
      throw PreconditionError("commutativity relation does not hold");
    }
  }
}

inline Representation zero_representation(const Quiver& q) {
  Representation m;
  m.dims.assign(q.vertex_count(), 0);
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) m.maps.emplace_back(0, 0);
  return m;
}

inline bool is_natural(const Quiver& q, const ModuleMap& f) {
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
    const Vertex s = q.source(a), t = q.target(a);
    if (!(f.target.maps[a] * f.blocks[s] == f.blocks[t] * f.source.maps[a])) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// String modules

inline Representation string_module(const Presentation& p, const Walk& w) {
  if (!is_string(p, w)) {
    throw PreconditionError("not a string: " + render_walk(p.quiver(), w));
  }
  const Quiver& q = p.quiver();
  auto pass = passages(q, w);
  Representation m = zero_representation(q);
  std::vector<std::size_t> slot(pass.size());
  for (std::size_t i = 0; i < pass.size(); ++i) slot[i] = m.dims[pass[i]]++;
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
    m.maps[a] = QMatrix(m.dims[q.target(a)], m.dims[q.source(a)]);
  }
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    Letter l = w.letters[i];
    if (l.is_direct()) {
      m.maps[l.arrow](slot[i + 1], slot[i]) = 1;
    } else {
      m.maps[l.arrow](slot[i], slot[i + 1]) = 1;
    }
  }
  check_representation(p, m);
  return m;
}

/// The isomorphism M(w) -> M(w^-1) matching passage i with passage len-i.
inline ModuleMap reversal_isomorphism(const Presentation& p, const Walk& w) {
  const Quiver& q = p.quiver();
  Walk v = inverse(q, w);
  ModuleMap f{string_module(p, w), string_module(p, v), {}};
  auto pw = passages(q, w), pv = passages(q, v);
  std::vector<std::size_t> slot_w(pw.size()), slot_v(pv.size());
  std::vector<std::size_t> cw(q.vertex_count(), 0), cv(q.vertex_count(), 0);
  for (std::size_t i = 0; i < pw.size(); ++i) slot_w[i] = cw[pw[i]]++;
  for (std::size_t i = 0; i < pv.size(); ++i) slot_v[i] = cv[pv[i]]++;
  for (Vertex x = 0; x < q.vertex_count(); ++x) f.blocks.emplace_back(cv[x], cw[x]);
  const std::size_t last = pw.size() - 1;
  for (std::size_t i = 0; i < pw.size(); ++i) {
    f.blocks[pw[i]](slot_v[last - i], slot_w[i]) = 1;
  }
  return f;
}

// ---------------------------------------------------------------------------
// Indecomposable projectives and injectives

namespace detail {

// Nonzero oriented paths starting at x (forward) or ending at x (backward),
// grouped by their other endpoint, in depth-first order.
struct PathFamily {
  std::vector<std::vector<std::vector<ArrowIndex>>> at;  // per vertex
};

inline PathFamily nonzero_paths(const Presentation& p, Vertex x, bool forward) {
  const Quiver& q = p.quiver();
  PathFamily fam;
  fam.at.resize(q.vertex_count());
  std::vector<ArrowIndex> path;
  std::function<void(Vertex)> visit = [&](Vertex v) {
    fam.at[v].push_back(path);
    const auto& next = forward ? q.out_arrows(v) : q.in_arrows(v);
    for (ArrowIndex a : next) {
      if (forward) {
        path.push_back(a);
      } else {
        path.insert(path.begin(), a);
      }
      if (!p.contains_zero(path)) visit(forward ? q.target(a) : q.source(a));
      if (forward) {
        path.pop_back();
      } else {
        path.erase(path.begin());
      }
    }
  };
  visit(x);
  return fam;
}

inline std::size_t index_of(const std::vector<std::vector<ArrowIndex>>& list,
                            const std::vector<ArrowIndex>& path) {
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (list[i] == path) return i;
  }
  return list.size();
}

inline void require_monomial_rep(const Presentation& p, const char* op) {
  if (!p.is_monomial()) {
    throw PreconditionError(std::string(op) + " needs a monomial presentation");
  }
}

}  // namespace detail

/// P_x: basis the nonzero paths from x, arrows act by appending.
inline Representation projective(const Presentation& p, Vertex x) {
  detail::require_monomial_rep(p, "projective");
  const Quiver& q = p.quiver();
  auto fam = detail::nonzero_paths(p, x, true);
  Representation m = zero_representation(q);
  for (Vertex v = 0; v < q.vertex_count(); ++v) m.dims[v] = fam.at[v].size();
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
    const Vertex s = q.source(a), t = q.target(a);
    m.maps[a] = QMatrix(m.dims[t], m.dims[s]);
    for (std::size_t j = 0; j < fam.at[s].size(); ++j) {
      auto longer = fam.at[s][j];
      longer.push_back(a);
      std::size_t i = detail::index_of(fam.at[t], longer);
      if (i < fam.at[t].size()) m.maps[a](i, j) = 1;
    }
  }
  return m;
}

/// I_x: basis the nonzero paths into x; an arrow strips itself off the front.
inline Representation injective(const Presentation& p, Vertex x) {
  detail::require_monomial_rep(p, "injective");
  const Quiver& q = p.quiver();
  auto fam = detail::nonzero_paths(p, x, false);
  Representation m = zero_representation(q);
  for (Vertex v = 0; v < q.vertex_count(); ++v) m.dims[v] = fam.at[v].size();
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
    const Vertex s = q.source(a), t = q.target(a);
    m.maps[a] = QMatrix(m.dims[t], m.dims[s]);
    for (std::size_t j = 0; j < fam.at[s].size(); ++j) {
      const auto& path = fam.at[s][j];
      if (path.empty() || path.front() != a) continue;
      std::vector<ArrowIndex> shorter(path.begin() + 1, path.end());
      m.maps[a](detail::index_of(fam.at[t], shorter), j) = 1;
    }
  }
  return m;
}

inline Representation direct_sum(const Quiver& q, const std::vector<Representation>& parts) {
  Representation out = zero_representation(q);
  for (const auto& r : parts) {
    for (Vertex v = 0; v < q.vertex_count(); ++v) out.dims[v] += r.dims[v];
  }
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
    const Vertex s = q.source(a), t = q.target(a);
    QMatrix m(out.dims[t], out.dims[s]);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& r : parts) {
      const QMatrix& b = r.maps[a];
      for (std::size_t i = 0; i < b.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
          if (b(i, j) != 0) m(r0 + i, c0 + j) = b(i, j);
        }
      }
      r0 += r.dims[t];
      c0 += r.dims[s];
    }
    out.maps[a] = std::move(m);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sub and quotient representations

/// Subrepresentation spanned by the columns of bases[v] (closed under arrows),
/// together with its inclusion.
inline ModuleMap subrepresentation(const Quiver& q, const Representation& m,
                                   std::vector<QMatrix> bases) {
  Representation sub = zero_representation(q);
  for (Vertex v = 0; v < q.vertex_count(); ++v) sub.dims[v] = bases[v].cols();
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
    const Vertex s = q.source(a), t = q.target(a);
    sub.maps[a] = solve_or_throw(bases[t], m.maps[a] * bases[s], "subrepresentation");
  }
  return {std::move(sub), m, std::move(bases)};
}

/// Quotient of m by the subspaces spanned by the columns of sub[v] (closed
/// under arrows), together with the projection.
inline ModuleMap quotient(const Quiver& q, const Representation& m,
                          const std::vector<QMatrix>& sub) {
  Representation out = zero_representation(q);
  std::vector<QMatrix> proj(q.vertex_count()), lift(q.vertex_count());
  for (Vertex v = 0; v < q.vertex_count(); ++v) {
    const std::size_t n = m.dims[v];
    QMatrix u = sub[v].cols() ? column_space(sub[v]) : QMatrix(n, 0);
    auto comp = complement_indices(u);
    lift[v] = standard_vectors<Rational>(n, comp);
    QMatrix inv = inverse(hstack(u, lift[v]));
    proj[v] = inv.row_range(u.cols(), n);
    out.dims[v] = comp.size();
  }
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
    const Vertex s = q.source(a), t = q.target(a);
    out.maps[a] = proj[t] * m.maps[a] * lift[s];
  }
  return {m, std::move(out), std::move(proj)};
}

inline ModuleMap kernel_of(const Quiver& q, const ModuleMap& f) {
  std::vector<QMatrix> bases;
  for (const auto& b : f.blocks) bases.push_back(kernel(b));
  return subrepresentation(q, f.source, std::move(bases));
}

inline ModuleMap cokernel_of(const Quiver& q, const ModuleMap& f) {
  return quotient(q, f.target, f.blocks);
}

// ---------------------------------------------------------------------------
// Radical, top, socle

namespace detail {

inline QMatrix radical_basis(const Quiver& q, const Representation& m, Vertex v) {
  QMatrix span(m.dims[v], 0);
  for (ArrowIndex a : q.in_arrows(v)) span = hstack(span, m.maps[a]);
  return span.cols() ? column_space(span) : span;
}

inline QMatrix socle_basis(const Quiver& q, const Representation& m, Vertex v) {
  std::size_t rows = 0;
  for (ArrowIndex a : q.out_arrows(v)) rows += m.maps[a].rows();
  QMatrix stacked(rows, m.dims[v]);
  std::size_t r0 = 0;
  for (ArrowIndex a : q.out_arrows(v)) {
    const QMatrix& b = m.maps[a];
    for (std::size_t i = 0; i < b.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) stacked(r0 + i, j) = b(i, j);
    }
    r0 += b.rows();
  }
  return kernel(stacked);
}

}  // namespace detail

inline ModuleMap radical(const Quiver& q, const Representation& m) {
  std::vector<QMatrix> bases;
  for (Vertex v = 0; v < q.vertex_count(); ++v) bases.push_back(detail::radical_basis(q, m, v));
  return subrepresentation(q, m, std::move(bases));
}

inline ModuleMap top(const Quiver& q, const Representation& m) {
  return cokernel_of(q, radical(q, m));
}

inline ModuleMap socle(const Quiver& q, const Representation& m) {
  std::vector<QMatrix> bases;
  for (Vertex v = 0; v < q.vertex_count(); ++v) bases.push_back(detail::socle_basis(q, m, v));
  return subrepresentation(q, m, std::move(bases));
}

inline std::vector<std::size_t> top_dims(const Quiver& q, const Representation& m) {
  std::vector<std::size_t> out;
  for (Vertex v = 0; v < q.vertex_count(); ++v) {
    out.push_back(m.dims[v] - detail::radical_basis(q, m, v).cols());
  }
  return out;
}

inline std::vector<std::size_t> socle_dims(const Quiver& q, const Representation& m) {
  std::vector<std::size_t> out;
  for (Vertex v = 0; v < q.vertex_count(); ++v) {
    out.push_back(detail::socle_basis(q, m, v).cols());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Projective cover and injective envelope

/// P = sum of P_x over a basis of top(M); the summand for a top
/// representative m sends the path basis vector p to M(p) m.
inline ModuleMap projective_cover(const Presentation& p, const Representation& m) {
  detail::require_monomial_rep(p, "projective_cover");
  const Quiver& q = p.quiver();
  std::vector<Representation> summands;
  std::vector<std::vector<QMatrix>> pieces(q.vertex_count());
  for (Vertex x = 0; x < q.vertex_count(); ++x) {
    auto reps = complement_indices(detail::radical_basis(q, m, x));
    if (reps.empty()) continue;
    auto fam = detail::nonzero_paths(p, x, true);
    Representation px = projective(p, x);
    for (std::size_t r : reps) {
      QMatrix gen = standard_vectors<Rational>(m.dims[x], {r});
      for (Vertex y = 0; y < q.vertex_count(); ++y) {
        QMatrix block(m.dims[y], fam.at[y].size());
        for (std::size_t j = 0; j < fam.at[y].size(); ++j) {
          QMatrix image = path_matrix(m, x, fam.at[y][j], q) * gen;
          for (std::size_t i = 0; i < m.dims[y]; ++i) block(i, j) = image(i, 0);
        }
        pieces[y].push_back(std::move(block));
      }
      summands.push_back(px);
    }
  }
  ModuleMap f{direct_sum(q, summands), m, {}};
  for (Vertex y = 0; y < q.vertex_count(); ++y) {
    QMatrix block(m.dims[y], 0);
    for (const auto& piece : pieces[y]) block = hstack(block, piece);
    f.blocks.push_back(std::move(block));
  }
  return f;
}

/// I = sum of I_x over a basis of soc(M). Maps M -> I_x correspond to
/// functionals phi on M(x): m in M(y) goes to sum over paths q: y -> x of
/// phi(M(q) m) q. Taking phi dual to a socle basis (relative to a chosen
/// complement) makes the sum injective. `alternate` picks the complement
/// from the other end of the standard basis, which gives a second, usually
/// different, solution.
inline ModuleMap injective_envelope(const Presentation& p, const Representation& m,
                                    bool alternate = false) {
  detail::require_monomial_rep(p, "injective_envelope");
  const Quiver& q = p.quiver();
  std::vector<Representation> summands;
  std::vector<std::vector<QMatrix>> pieces(q.vertex_count());
  for (Vertex x = 0; x < q.vertex_count(); ++x) {
    QMatrix soc = detail::socle_basis(q, m, x);
    if (soc.cols() == 0) continue;
    const std::size_t n = m.dims[x];
    std::vector<std::size_t> comp;
    if (alternate) {
      QMatrix flipped(n, soc.cols());
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < soc.cols(); ++j) flipped(n - 1 - i, j) = soc(i, j);
      }
      for (auto c : complement_indices(flipped)) comp.push_back(n - 1 - c);
    } else {
      comp = complement_indices(soc);
    }
    QMatrix dual = inverse(hstack(soc, standard_vectors<Rational>(n, comp)));
    auto fam = detail::nonzero_paths(p, x, false);
    Representation ix = injective(p, x);
    for (std::size_t k = 0; k < soc.cols(); ++k) {
      QMatrix phi = dual.row_range(k, k + 1);
      for (Vertex y = 0; y < q.vertex_count(); ++y) {
        QMatrix block(fam.at[y].size(), m.dims[y]);
        for (std::size_t i = 0; i < fam.at[y].size(); ++i) {
          QMatrix row = phi * path_matrix(m, y, fam.at[y][i], q);
          for (std::size_t j = 0; j < m.dims[y]; ++j) block(i, j) = row(0, j);
        }
        pieces[y].push_back(std::move(block));
      }
      summands.push_back(ix);
    }
  }
  ModuleMap f{m, direct_sum(q, summands), {}};
  for (Vertex y = 0; y < q.vertex_count(); ++y) {
    QMatrix block(0, m.dims[y]);
    for (const auto& piece : pieces[y]) block = vstack(block, piece);
    f.blocks.push_back(std::move(block));
  }
  return f;
}

inline std::size_t projective_cover_dim(const Presentation& p, const Representation& m) {
  const Quiver& q = p.quiver();
  auto tops = top_dims(q, m);
  std::size_t total = 0;
  for (Vertex x = 0; x < q.vertex_count(); ++x) {
    if (tops[x]) total += tops[x] * projective(p, x).total_dim();
  }
  return total;
}

inline std::size_t injective_envelope_dim(const Presentation& p, const Representation& m) {
  const Quiver& q = p.quiver();
  auto socs = socle_dims(q, m);
  std::size_t total = 0;
  for (Vertex x = 0; x < q.vertex_count(); ++x) {
    if (socs[x]) total += socs[x] * injective(p, x).total_dim();
  }
  return total;
}

/// The projective cover is an isomorphism iff the dimensions agree.
inline bool is_projective(const Presentation& p, const Representation& m) {
  return projective_cover_dim(p, m) == m.total_dim();
}

inline bool is_injective(const Presentation& p, const Representation& m) {
  return injective_envelope_dim(p, m) == m.total_dim();
}

inline Representation syzygy(const Presentation& p, const Representation& m) {
  return kernel_of(p.quiver(), projective_cover(p, m)).source;
}

inline Representation cosyzygy(const Presentation& p, const Representation& m) {
  return cokernel_of(p.quiver(), injective_envelope(p, m)).target;
}

inline bool pd_at_least_2(const Presentation& p, const Representation& m) {
  return !is_projective(p, m) && !is_projective(p, syzygy(p, m));
}

inline bool id_at_least_2(const Presentation& p, const Representation& m) {
  return !is_injective(p, m) && !is_injective(p, cosyzygy(p, m));
}

// ---------------------------------------------------------------------------
// DOZED modules and the scan

/// sigma_n = alpha_3..alpha_l w1 band^n w3 beta_m..beta_3: the double-zero of
/// power n with two arrows removed from each end.
inline Walk dozed_string(const Presentation& p, const DozeWitness& w, std::size_t n) {
  const Quiver& q = p.quiver();
  const auto& a = w.rho1.arrows;
  const auto& b = w.rho2.arrows;
  Walk sigma{q.target(a[1]), {}};
  for (std::size_t i = 2; i < a.size(); ++i) sigma.letters.push_back(Letter::direct(a[i]));
  Walk mid = w.middle(n);
  sigma.letters.insert(sigma.letters.end(), mid.letters.begin(), mid.letters.end());
  for (std::size_t i = 0; i + 2 < b.size(); ++i) sigma.letters.push_back(Letter::direct(b[i]));
  if (!is_walk(q, sigma) || !is_string(p, sigma)) {
    throw AnomalyError("DOZED module of power " + std::to_string(n) +
                       " is not a string: " + render_walk(q, sigma));
  }
  return sigma;
}

inline Representation dozed_module(const Presentation& p, const DozeWitness& w,
                                   std::size_t n) {
  return string_module(p, dozed_string(p, w, n));
}

struct ScanResult {
  std::size_t count_both_ge2 = 0;
  std::vector<Walk> witnesses;
};

/// Canonical strings with min_len <= length <= max_len whose string module
/// has pd >= 2 and id >= 2.
inline ScanResult conjecture_scan(const Presentation& p, std::size_t max_len,
                                  std::size_t min_len = 0) {
  detail::require_monomial_rep(p, "conjecture_scan");
  ScanResult out;
  for (const Walk& w : enumerate_strings(p, max_len)) {
    if (w.length() < min_len) continue;
    Representation m = string_module(p, w);
    if (pd_at_least_2(p, m) && id_at_least_2(p, m)) out.witnesses.push_back(w);
  }
  out.count_both_ge2 = out.witnesses.size();
  return out;
}

}  // namespace laura
