#include "qm/qideal.hpp"

#include <functional>

namespace qm {

std::vector<bool> ModelPoset::finite_elements() const {
  std::vector<bool> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = !is_limit(i);
  return out;
}

ModelPoset build_model(const Space& space, unsigned depth, const Rational& factor) {
  if (!has_way_below_oracle(space)) {
    throw NoOracle("no closed-form way-below relation for " + std::string(kind_name(space.kind())) + " spaces");
  }
  if (depth < 1) throw std::invalid_argument("model depth must be at least 1");
  if (factor <= 1) throw std::invalid_argument("radius factor must exceed 1");
  ModelPoset m;
  m.point_names = space.names();
  m.depth = depth;
  m.factor = factor;
  m.specialization = specialization_order(space);
  for (PointId x = 0; x < space.size(); ++x) m.nodes.push_back({x, Rational(0)});
  for (unsigned k = 0; k <= depth; ++k) {
    for (PointId x = 0; x < space.size(); ++x) m.nodes.push_back({x, dyadic(k)});
  }
  for (const auto& b : m.nodes) m.labels.push_back(to_string(literal(space, b)));
  const std::size_t n = m.nodes.size();
  m.order = Relation(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const FormalBall& p = m.nodes[i];
      const FormalBall& q = m.nodes[j];
      bool rel = i == j;
      if (!rel && p.radius >= factor * q.radius) rel = *way_below_oracle(space, p, q);
      if (!rel && sgn(p.radius) == 0 && sgn(q.radius) == 0) rel = space.dist(p.center, q.center).is_zero();
      m.order.set(i, j, rel);
    }
  }
  return m;
}

ModelCheckReport quasi_ideal_model_check(const ModelPoset& m) {
  ModelCheckReport report;
  const std::size_t n = m.size();
  report.order_violation = partial_order_violation(m.order);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !m.order(i, j)) continue;
      if (m.is_limit(i) && !m.is_limit(j)) report.layering_violations.emplace_back(i, j);
      if (!m.is_limit(i) && !m.is_limit(j) && m.nodes[i].radius < m.factor * m.nodes[j].radius) {
        report.halving_violations.emplace_back(i, j);
      }
    }
  }

  report.chain_bound = m.depth + 1;
  std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
  std::vector<std::size_t> longest(n, 1);
  bool cyclic = false;
  std::function<void(std::size_t)> visit = [&](std::size_t i) {
    state[i] = 1;
    for (std::size_t j = 0; j < n && !cyclic; ++j) {
      if (i == j || m.is_limit(j) || !m.order(i, j)) continue;
      if (state[j] == 1) {
        cyclic = true;
        return;
      }
      if (state[j] == 0) visit(j);
      longest[i] = std::max(longest[i], longest[j] + 1);
    }
    state[i] = 2;
  };
  std::size_t best = 0;
  for (std::size_t i = 0; i < n && !cyclic; ++i) {
    if (m.is_limit(i)) continue;
    if (state[i] == 0) visit(i);
    best = std::max(best, longest[i]);
  }
  if (!cyclic) report.longest_chain = best;

  report.limit_isomorphic = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!m.is_limit(i) || !m.is_limit(j)) continue;
      if (m.order(i, j) != m.specialization(m.nodes[i].center, m.nodes[j].center)) report.limit_isomorphic = false;
    }
  }

  report.quasi_ideal = quasi_ideal_check(m.order, m.finite_elements());
  return report;
}

FinitePoset limit_layer(const ModelPoset& m) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m.is_limit(i)) idx.push_back(i);
  }
  Relation r(idx.size());
  std::vector<std::string> names;
  for (std::size_t a = 0; a < idx.size(); ++a) {
    names.push_back(m.point_names[m.nodes[idx[a]].center]);
    for (std::size_t b = 0; b < idx.size(); ++b) r.set(a, b, m.order(idx[a], idx[b]));
  }
  return FinitePoset(std::move(names), std::move(r));
}

FinitePoset as_poset(const ModelPoset& m) { return FinitePoset(m.labels, m.order); }

std::string model_dot(const ModelPoset& m) {
  DotStyle style;
  for (std::size_t i = 0; i < m.size(); ++i) style.node_attributes.push_back(m.is_limit(i) ? "shape=box" : "");
  return export_dot(as_poset(m), style);
}

}  // namespace qm
