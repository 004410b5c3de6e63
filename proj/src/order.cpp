#include "uslev/order.hpp"

#include <Eigen/LU>

#include "uslev/efficiency.hpp"

namespace uslev {

bool relation_holds(const DominationRelation& r, const Vector& y1, const Vector& y2) {
  if (y1.size() != y2.size()) throw InputError("relation_holds: dimension mismatch");
  const Vector diff = y2 - y1;
  return r.strict ? contains_core(r.d, diff) : contains(r.d, diff);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    case Verdict::NotRefuted: return "not-refuted";
  }
  return "not-refuted";
}

RelationReport relation_properties(const DominationRelation& r, const PointSource& candidates,
                                   std::size_t n, Rng& rng) {
  const std::size_t dim = r.d.dim();
  const Vector zero = Vector::Zero(static_cast<Eigen::Index>(dim));
  auto member = [&](const Vector& v) { return relation_holds(r, zero, v); };

  RelationReport rep;
  const bool zero_in = member(zero);
  rep.reflexive.verdict = zero_in ? Verdict::True : Verdict::False;
  if (!zero_in) rep.reflexive.witness = std::make_pair(zero, zero);

  std::vector<Vector> members;
  for (std::size_t tries = 0; members.size() < n && tries < n * 50; ++tries) {
    Vector v = candidates(rng);
    if (member(v)) members.push_back(std::move(v));
  }
  rep.samples = members.size();

  // asymmetric iff D ∩ (-D) = ∅
  if (zero_in) {
    rep.asymmetric = {Verdict::False, std::make_pair(zero, zero), "0 in D"};
  } else {
    for (const Vector& v : members)
      if (member(Vector(-v))) {
        rep.asymmetric = {Verdict::False, std::make_pair(v, Vector(-v)), "d and -d in D"};
        break;
      }
  }
  // antisymmetric iff D ∩ (-D) ⊆ {0}; kernel directions of a polyhedron's
  // normals are the natural candidates, random draws almost never hit them
  std::vector<Vector> pairs = members;
  if (const auto pieces = flatten(r.d); pieces && pieces->size() == 1) {
    const Matrix basis = Eigen::FullPivLU<Matrix>(pieces->front().normals).kernel();
    for (Eigen::Index c = 0; c < basis.cols(); ++c)
      if (basis.col(c).lpNorm<Eigen::Infinity>() > 1e-12) pairs.push_back(basis.col(c));
  }
  for (const Vector& v : pairs)
    if (v.lpNorm<Eigen::Infinity>() > 1e-12 && member(Vector(-v))) {
      rep.antisymmetric = {Verdict::False, std::make_pair(v, Vector(-v)), "nonzero d and -d in D"};
      break;
    }
  // transitive iff D + D ⊆ D
  for (std::size_t i = 0; i + 1 < members.size() && rep.transitive.verdict != Verdict::False; ++i) {
    const Vector& a = members[i];
    const Vector& b = members[i + 1];
    if (!member(Vector(a + b)))
      rep.transitive = {Verdict::False, std::make_pair(a, b), "d1 + d2 not in D"};
  }
  // compatible with positive scaling iff lambda D ⊆ D
  std::uniform_real_distribution<double> lam(0.05, 20.0);
  for (const Vector& v : members) {
    const double l = lam(rng);
    if (!member(Vector(l * v))) {
      rep.cone_compatible = {Verdict::False, std::make_pair(v, Vector(l * v)),
                             "lambda d not in D"};
      break;
    }
  }
  for (PropertyVerdict* p : {&rep.asymmetric, &rep.antisymmetric, &rep.transitive,
                             &rep.cone_compatible})
    if (p->verdict == Verdict::NotRefuted)
      p->note = "no counterexample among " + std::to_string(members.size()) + " samples";
  return rep;
}

std::vector<std::size_t> min_points(const DominationRelation& r, const PointCloud& f) {
  if (f.dim() != r.d.dim()) throw InputError("min_points: dimension mismatch");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < f.size() && minimal; ++j)
      if (relation_holds(r, f[j], f[i]) && !relation_holds(r, f[i], f[j])) minimal = false;
    if (minimal) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> min_via_eff(const SetExpr& d, const PointCloud& f) {
  if (f.dim() != d.dim()) throw InputError("min_via_eff: dimension mismatch");
  return eff_by(f.points(),
                [&](const Vector& diff) { return contains(d, diff) && !contains(d, Vector(-diff)); });
}

}  // namespace uslev
