#include "uslev/sets.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace uslev {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool all_finite(const Vector& v) { return v.allFinite(); }

std::size_t infer_dim(const SetNode& n);

bool directions_parallel(const Vector& d, const Vector& k) {
  const double nd = d.norm(), nk = k.norm();
  if (nd == 0.0 || nk == 0.0) return false;
  return (d / nd - k / nk).lpNorm<Eigen::Infinity>() <= 1e-12;
}

HalfspacePolyhedron orthant_poly(std::size_t n, OrthantSign sign) {
  Matrix a = Matrix::Identity(n, n);
  if (sign == OrthantSign::NonNeg) a = -a;
  return HalfspacePolyhedron{a, Vector::Zero(n)};
}

}  // namespace

std::string to_string(Tri t) {
  switch (t) {
    case Tri::False: return "false";
    case Tri::True: return "true";
    case Tri::Unknown: return "unknown";
  }
  return "unknown";
}

void require_dim(const SetExpr& s, const Vector& y, const char* what) {
  if (static_cast<std::size_t>(y.size()) != s.dim()) {
    std::ostringstream msg;
    msg << what << ": dimension mismatch (set has " << s.dim() << ", point has " << y.size()
        << ")";
    throw InputError(msg.str());
  }
}

HalfspacePolyhedron HalfspacePolyhedron::make(Matrix normals, Vector offsets) {
  if (normals.rows() < 1 || normals.cols() < 1)
    throw InputError("halfspaces: need at least one row and one column");
  if (normals.rows() != offsets.size())
    throw InputError("halfspaces: normals and offsets have different lengths");
  if (!normals.allFinite() || !all_finite(offsets))
    throw InputError("halfspaces: entries must be finite");
  for (Eigen::Index i = 0; i < normals.rows(); ++i)
    if (normals.row(i).lpNorm<Eigen::Infinity>() == 0.0)
      throw InputError("halfspaces: row " + std::to_string(i) + " has an all-zero normal");
  return HalfspacePolyhedron{std::move(normals), std::move(offsets)};
}

bool HalfspacePolyhedron::contains(const Vector& y, double tol) const {
  const Vector lhs = normals * y;
  for (Eigen::Index i = 0; i < lhs.size(); ++i)
    if (!(lhs[i] <= offsets[i] + tol * (1.0 + std::abs(offsets[i])))) return false;
  return true;
}

bool HalfspacePolyhedron::contains_core(const Vector& y, double margin) const {
  const Vector lhs = normals * y;
  for (Eigen::Index i = 0; i < lhs.size(); ++i)
    if (!(lhs[i] <= offsets[i] - margin * (1.0 + std::abs(offsets[i])))) return false;
  return true;
}

std::optional<Vector> feasible_point(const HalfspacePolyhedron& p, const Vector& start,
                                     double slack, int max_sweeps) {
  Vector x = start;
  const Vector sq = p.normals.rowwise().squaredNorm();
  Vector target(p.offsets.size());
  for (Eigen::Index i = 0; i < target.size(); ++i)
    target[i] = p.offsets[i] - slack * (1.0 + std::abs(p.offsets[i]));
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    bool clean = true;
    for (Eigen::Index i = 0; i < p.normals.rows(); ++i) {
      const double excess = p.normals.row(i).dot(x) - target[i];
      if (excess > 0.0) {
        clean = false;
        // overshoot slightly so that cycling between two rows terminates
        x -= (excess * (1.0 + 1e-9) + 1e-15) / sq[i] * p.normals.row(i).transpose();
      }
    }
    if (clean) return x;
  }
  return std::nullopt;
}

OracleSet make_catalog_oracle(const std::string& name, std::vector<double> params,
                              bool declared_closed, std::vector<Vector> recession,
                              std::optional<std::size_t> dim) {
  OracleSet o;
  o.name = name;
  o.declared_closed = declared_closed;
  if (name == "hyperbola") {
    // {y : y1 > 0, y2 >= 1/y1}
    if (dim && *dim != 2) throw InputError("oracle hyperbola: dimension must be 2");
    if (!params.empty()) throw InputError("oracle hyperbola: takes no params");
    o.dim = 2;
    o.member = [](const Vector& y, double tol) {
      if (!(y[0] > 0.0)) return false;
      const double bound = 1.0 / y[0];
      return y[1] >= bound - tol * (1.0 + bound);
    };
    o.core = [](const Vector& y, double margin) {
      if (!(y[0] > margin)) return false;
      const double bound = 1.0 / y[0];
      return y[1] > bound + margin * (1.0 + bound);
    };
    o.convex = Tri::True;
    o.is_cone = Tri::False;
  } else if (name == "norm-ball") {
    // {y : ||y||_2 <= r}, params = [r]
    if (params.size() > 1) throw InputError("oracle norm-ball: params = [radius]");
    const double r = params.empty() ? 1.0 : params[0];
    if (!(r > 0.0) || !std::isfinite(r)) throw InputError("oracle norm-ball: radius must be > 0");
    params = {r};
    o.dim = dim.value_or(2);
    if (o.dim < 1) throw InputError("oracle norm-ball: dimension must be >= 1");
    o.member = [r](const Vector& y, double tol) { return y.norm() <= r + tol * (1.0 + r); };
    o.core = [r](const Vector& y, double margin) { return y.norm() < r - margin * (1.0 + r); };
    o.convex = Tri::True;
    o.is_cone = Tri::False;
  } else {
    throw InputError("unknown oracle set '" + name + "' (catalog: hyperbola, norm-ball)");
  }
  for (const Vector& d : recession) {
    if (static_cast<std::size_t>(d.size()) != o.dim)
      throw InputError("oracle " + name + ": recession direction has wrong dimension");
    if (!d.allFinite() || d.lpNorm<Eigen::Infinity>() == 0.0)
      throw InputError("oracle " + name + ": recession directions must be finite and nonzero");
  }
  o.params = std::move(params);
  o.recession_directions = std::move(recession);
  return o;
}

// ---------------------------------------------------------------------------
// SetExpr construction

namespace {

std::size_t infer_dim(const SetNode& n) {
  return std::visit(overloaded{
                        [](const PolyhedronNode& p) { return p.poly.dim(); },
                        [](const OrthantNode& o) { return o.dim; },
                        [](const ShiftNode& s) { return s.base.dim(); },
                        [](const NegateNode& s) { return s.base.dim(); },
                        [](const UnionNode& u) { return u.parts.front().dim(); },
                        [](const OracleNode& o) { return o.set.dim; },
                    },
                    n.v);
}

}  // namespace

SetExpr SetExpr::halfspaces(Matrix normals, Vector offsets) {
  return polyhedron(HalfspacePolyhedron::make(std::move(normals), std::move(offsets)));
}

SetExpr SetExpr::polyhedron(HalfspacePolyhedron poly) {
  auto node = std::make_shared<const SetNode>(SetNode{PolyhedronNode{std::move(poly)}});
  return SetExpr(node, infer_dim(*node));
}

SetExpr SetExpr::orthant(std::size_t dim, OrthantSign sign) {
  if (dim < 1) throw InputError("orthant: dimension must be >= 1");
  auto node = std::make_shared<const SetNode>(SetNode{OrthantNode{dim, sign}});
  return SetExpr(node, dim);
}

SetExpr SetExpr::shift(Vector offset, SetExpr base) {
  if (static_cast<std::size_t>(offset.size()) != base.dim())
    throw InputError("shift: offset dimension does not match base");
  if (!offset.allFinite()) throw InputError("shift: offset must be finite");
  const std::size_t d = base.dim();
  auto node = std::make_shared<const SetNode>(SetNode{ShiftNode{std::move(offset), std::move(base)}});
  return SetExpr(node, d);
}

SetExpr SetExpr::negate(SetExpr base) {
  const std::size_t d = base.dim();
  auto node = std::make_shared<const SetNode>(SetNode{NegateNode{std::move(base)}});
  return SetExpr(node, d);
}

SetExpr SetExpr::union_of(std::vector<SetExpr> parts) {
  if (parts.empty()) throw InputError("union: needs at least one part");
  const std::size_t d = parts.front().dim();
  for (const SetExpr& p : parts)
    if (p.dim() != d) throw InputError("union: parts have different dimensions");
  auto node = std::make_shared<const SetNode>(SetNode{UnionNode{std::move(parts)}});
  return SetExpr(node, d);
}

SetExpr SetExpr::oracle(OracleSet set) {
  if (set.dim < 1 || !set.member) throw InputError("oracle: needs a dimension and a predicate");
  const std::size_t d = set.dim;
  auto node = std::make_shared<const SetNode>(SetNode{OracleNode{std::move(set)}});
  return SetExpr(node, d);
}

// ---------------------------------------------------------------------------
// Membership

namespace {

bool contains_impl(const SetExpr& s, const Vector& y, double tol) {
  return std::visit(
      overloaded{
          [&](const PolyhedronNode& p) { return p.poly.contains(y, tol); },
          [&](const OrthantNode& o) {
            if (o.sign == OrthantSign::NonNeg) return (y.array() >= -tol).all();
            return (y.array() <= tol).all();
          },
          [&](const ShiftNode& n) { return contains_impl(n.base, y - n.offset, tol); },
          [&](const NegateNode& n) { return contains_impl(n.base, -y, tol); },
          [&](const UnionNode& u) {
            return std::any_of(u.parts.begin(), u.parts.end(),
                               [&](const SetExpr& p) { return contains_impl(p, y, tol); });
          },
          [&](const OracleNode& o) { return o.set.member(y, tol); },
      },
      s.node().v);
}

bool core_impl(const SetExpr& s, const Vector& y, double margin) {
  return std::visit(
      overloaded{
          [&](const PolyhedronNode& p) { return p.poly.contains_core(y, margin); },
          [&](const OrthantNode& o) {
            if (o.sign == OrthantSign::NonNeg) return (y.array() > margin).all();
            return (y.array() < -margin).all();
          },
          [&](const ShiftNode& n) { return core_impl(n.base, y - n.offset, margin); },
          [&](const NegateNode& n) { return core_impl(n.base, -y, margin); },
          [&](const UnionNode& u) {
            return std::any_of(u.parts.begin(), u.parts.end(),
                               [&](const SetExpr& p) { return core_impl(p, y, margin); });
          },
          [&](const OracleNode& o) -> bool {
            if (!o.set.core)
              throw Unsupported("oracle '" + o.set.name + "' has no core predicate");
            return o.set.core(y, margin);
          },
      },
      s.node().v);
}

}  // namespace

bool contains(const SetExpr& s, const Vector& y, double tol) {
  require_dim(s, y, "contains");
  return contains_impl(s, y, tol);
}

bool contains_core(const SetExpr& s, const Vector& y, double margin) {
  require_dim(s, y, "contains_core");
  return core_impl(s, y, margin);
}

// ---------------------------------------------------------------------------
// Structure

SetExpr recession_cone(const SetExpr& s) {
  return std::visit(
      overloaded{
          [&](const PolyhedronNode& p) {
            return SetExpr::polyhedron(
                HalfspacePolyhedron{p.poly.normals, Vector::Zero(p.poly.offsets.size())});
          },
          [&](const OrthantNode&) { return s; },
          [&](const ShiftNode& n) { return recession_cone(n.base); },
          [&](const NegateNode& n) { return SetExpr::negate(recession_cone(n.base)); },
          [&](const UnionNode&) -> SetExpr {
            throw Unsupported("recession cone: unsupported representation (union)");
          },
          [&](const OracleNode&) -> SetExpr {
            throw Unsupported("recession cone: unsupported representation (oracle)");
          },
      },
      s.node().v);
}

DirectionClass classify_direction(const SetExpr& s, const Vector& k) {
  require_dim(s, k, "classify_direction");
  if (k.lpNorm<Eigen::Infinity>() == 0.0) throw InputError("classify_direction: k must be nonzero");
  const SetExpr rec = recession_cone(s);
  return DirectionClass{contains(rec, -k), contains_core(rec, -k)};
}

bool certifies_minus_recession(const SetExpr& s, const Vector& k) {
  require_dim(s, k, "certifies_minus_recession");
  return std::visit(
      overloaded{
          [&](const PolyhedronNode&) { return classify_direction(s, k).in_minus_recession; },
          [&](const OrthantNode&) { return classify_direction(s, k).in_minus_recession; },
          [&](const ShiftNode& n) { return certifies_minus_recession(n.base, k); },
          [&](const NegateNode& n) { return certifies_minus_recession(n.base, Vector(-k)); },
          [&](const UnionNode& u) {
            return std::all_of(u.parts.begin(), u.parts.end(), [&](const SetExpr& p) {
              return certifies_minus_recession(p, k);
            });
          },
          [&](const OracleNode& o) {
            return std::any_of(o.set.recession_directions.begin(),
                               o.set.recession_directions.end(),
                               [&](const Vector& d) { return directions_parallel(d, k); });
          },
      },
      s.node().v);
}

bool is_closed(const SetExpr& s) {
  return std::visit(overloaded{
                        [](const PolyhedronNode&) { return true; },
                        [](const OrthantNode&) { return true; },
                        [](const ShiftNode& n) { return is_closed(n.base); },
                        [](const NegateNode& n) { return is_closed(n.base); },
                        [](const UnionNode& u) {
                          return std::all_of(u.parts.begin(), u.parts.end(),
                                             [](const SetExpr& p) { return is_closed(p); });
                        },
                        [](const OracleNode& o) { return o.set.declared_closed; },
                    },
                    s.node().v);
}

std::optional<std::vector<HalfspacePolyhedron>> flatten(const SetExpr& s) {
  using Pieces = std::optional<std::vector<HalfspacePolyhedron>>;
  return std::visit(
      overloaded{
          [](const PolyhedronNode& p) -> Pieces { return std::vector{p.poly}; },
          [](const OrthantNode& o) -> Pieces { return std::vector{orthant_poly(o.dim, o.sign)}; },
          [](const ShiftNode& n) -> Pieces {
            auto base = flatten(n.base);
            if (!base) return std::nullopt;
            for (auto& p : *base) p.offsets += p.normals * n.offset;
            return base;
          },
          [](const NegateNode& n) -> Pieces {
            auto base = flatten(n.base);
            if (!base) return std::nullopt;
            for (auto& p : *base) p.normals = -p.normals;
            return base;
          },
          [](const UnionNode& u) -> Pieces {
            std::vector<HalfspacePolyhedron> out;
            for (const SetExpr& part : u.parts) {
              auto pieces = flatten(part);
              if (!pieces) return std::nullopt;
              out.insert(out.end(), pieces->begin(), pieces->end());
            }
            return out;
          },
          [](const OracleNode&) -> Pieces { return std::nullopt; },
      },
      s.node().v);
}

SetExpr intersect(const SetExpr& a, const SetExpr& b) {
  if (a.dim() != b.dim()) throw InputError("intersect: dimension mismatch");
  auto pa = flatten(a), pb = flatten(b);
  if (!pa || !pb || pa->size() != 1 || pb->size() != 1)
    throw Unsupported("intersect: both operands must be single polyhedra");
  const auto& x = pa->front();
  const auto& y = pb->front();
  Matrix normals(x.normals.rows() + y.normals.rows(), x.normals.cols());
  normals << x.normals, y.normals;
  Vector offsets(x.offsets.size() + y.offsets.size());
  offsets << x.offsets, y.offsets;
  return SetExpr::polyhedron(HalfspacePolyhedron{normals, offsets});
}

namespace {

Tri polyhedron_pointed(const HalfspacePolyhedron& p) {
  // lineality space of a cone {Au <= 0} is ker A
  Eigen::FullPivLU<Matrix> lu(p.normals);
  lu.setThreshold(1e-10);
  return static_cast<std::size_t>(lu.rank()) == p.dim() ? Tri::True : Tri::False;
}

Tri polyhedron_core_nonempty(const HalfspacePolyhedron& p) {
  const bool homogeneous = (p.offsets.array() == 0.0).all();
  if (homogeneous) {
    // core of a cone is nonempty iff {Au <= -1} is feasible
    HalfspacePolyhedron strict{p.normals, Vector::Constant(p.offsets.size(), -1.0)};
    Vector guess = Vector::Zero(p.dim());
    for (Eigen::Index i = 0; i < p.normals.rows(); ++i)
      guess -= p.normals.row(i).transpose() / p.normals.row(i).norm();
    if (p.contains_core(guess) || feasible_point(strict, guess)) return Tri::True;
    return Tri::Unknown;
  }
  if (feasible_point(p, Vector::Zero(p.dim()), 1e-6)) return Tri::True;
  return Tri::Unknown;
}

ConeFlags flags_for_pieces(const std::vector<HalfspacePolyhedron>& pieces, bool contains_zero) {
  ConeFlags f;
  f.contains_zero = contains_zero;
  bool all_cones = true;
  for (const auto& p : pieces)
    if (!(p.offsets.array() == 0.0).all()) all_cones = false;
  if (pieces.size() == 1) {
    const auto& p = pieces.front();
    f.convex = Tri::True;
    if (all_cones) {
      f.is_cone = Tri::True;
      f.pointed = polyhedron_pointed(p);
    } else if (!contains_zero && feasible_point(p, Vector::Zero(p.dim()))) {
      f.is_cone = Tri::False;
    }
    f.core_nonempty = polyhedron_core_nonempty(p);
    return f;
  }
  if (all_cones) f.is_cone = Tri::True;
  for (const auto& p : pieces)
    if (polyhedron_core_nonempty(p) == Tri::True) f.core_nonempty = Tri::True;
  return f;
}

}  // namespace

ConeFlags compute_flags(const SetExpr& s) {
  const bool zero_in = contains(s, Vector::Zero(s.dim()));
  if (auto pieces = flatten(s)) {
    ConeFlags f = flags_for_pieces(*pieces, zero_in);
    if (std::holds_alternative<OrthantNode>(s.node().v)) f.core_nonempty = Tri::True;
    return f;
  }
  ConeFlags f;
  f.contains_zero = zero_in;
  std::visit(overloaded{
                 [&](const OracleNode& o) {
                   f.convex = o.set.convex;
                   f.is_cone = o.set.is_cone;
                   if (o.set.core) f.core_nonempty = Tri::True;
                 },
                 [&](const NegateNode& n) {
                   f = compute_flags(n.base);
                   f.contains_zero = zero_in;
                 },
                 [&](const ShiftNode& n) {
                   const ConeFlags base = compute_flags(n.base);
                   f.convex = base.convex;
                   f.core_nonempty = base.core_nonempty;
                   if (n.offset.lpNorm<Eigen::Infinity>() == 0.0) f = base;
                   f.contains_zero = zero_in;
                 },
                 [&](const auto&) {},
             },
             s.node().v);
  return f;
}

FreeDisposalResult free_disposal_check(const SetExpr& a_set, const SetExpr& cone,
                                       const PointSource& from_set,
                                       const PointSource& from_cone, std::size_t n_samples,
                                       Rng& rng) {
  if (a_set.dim() != cone.dim()) throw InputError("free_disposal_check: dimension mismatch");
  FreeDisposalResult out;
  constexpr int kTries = 50;
  auto draw = [&](const PointSource& src, const SetExpr& set) -> std::optional<Vector> {
    for (int t = 0; t < kTries; ++t) {
      Vector v = src(rng);
      if (contains(set, v)) return v;
    }
    return std::nullopt;
  };
  for (std::size_t i = 0; i < n_samples; ++i) {
    auto a = draw(from_set, a_set);
    auto c = draw(from_cone, cone);
    if (!a || !c) continue;
    ++out.pairs_checked;
    if (!contains(a_set, Vector(*a - *c))) {
      out.holds = false;
      out.witness_a = *a;
      out.witness_c = *c;
      return out;
    }
  }
  return out;
}

}  // namespace uslev
